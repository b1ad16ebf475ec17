//! Strictly positive rational distributions on a universe.
//!
//! File format: one line `name p/q` per element, covering the universe
//! exactly once with weights summing to exactly 1.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::concept::{bits, Universe};
use crate::error::{Error, Result};
use crate::format::content_lines;
use crate::rng::SplitMix64;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distribution {
    weights: Vec<Rational>,
}

impl Distribution {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::pre("distribution over an empty universe"));
        }
        if let Some(i) = weights.iter().position(|w| !w.is_positive()) {
            return Err(Error::pre(format!("weight of element {i} is not positive")));
        }
        let sum: Rational = weights.iter().sum();
        if !sum.is_one() {
            return Err(Error::pre(format!("weights sum to {sum}, not 1")));
        }
        Ok(Distribution { weights })
    }

    pub fn uniform(n: usize) -> Self {
        let w = Rational::new(BigInt::one(), BigInt::from(n));
        Distribution {
            weights: vec![w; n],
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, x: usize) -> &Rational {
        &self.weights[x]
    }

    /// `μ(S)` for a set of elements given as a bitmask.
    pub fn mass(&self, set: u64) -> Rational {
        bits(set).map(|x| &self.weights[x]).sum()
    }

    /// Draw from `μ` conditioned on the nonempty set `set`.
    ///
    /// One 64-bit draw `r` selects the first element (in index order) whose
    /// cumulative conditional mass exceeds `r / 2^64`; the comparison is done
    /// in exact integer arithmetic.
    pub fn sample_in(&self, set: u64, rng: &mut SplitMix64) -> usize {
        assert!(set != 0, "sampling from an empty set");
        let total = self.mass(set);
        let r = BigInt::from(rng.next_u64());
        let scale = BigInt::one() << 64u32;
        let mut cum = Rational::zero();
        let mut last = 0;
        for x in bits(set) {
            cum += &self.weights[x];
            last = x;
            // cum/total > r/2^64  <=>  cum·2^64 > r·total
            if (&cum * &scale) > Rational::from_integer(r.clone()) * &total {
                return x;
            }
        }
        last
    }

    pub fn parse(text: &str, universe: &Universe) -> Result<Self> {
        let mut weights: Vec<Option<Rational>> = vec![None; universe.len()];
        for (line, row) in content_lines(text) {
            let mut parts = row.split_whitespace();
            let (Some(name), Some(w), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(Error::parse(line, "expected `name p/q`"));
            };
            let x = universe
                .index_of(name)
                .ok_or_else(|| Error::parse(line, format!("unknown element {name}")))?;
            let (p, q) = w.split_once('/').unwrap_or((w, "1"));
            let parse_int = |s: &str| {
                s.parse::<BigInt>()
                    .ok()
                    .filter(|v| v.is_positive())
                    .ok_or_else(|| Error::parse(line, format!("invalid weight {w}")))
            };
            let value = Rational::new(parse_int(p)?, parse_int(q)?);
            if weights[x].replace(value).is_some() {
                return Err(Error::parse(line, format!("element {name} listed twice")));
            }
        }
        let weights = weights
            .into_iter()
            .enumerate()
            .map(|(i, w)| w.ok_or_else(|| Error::parse(0, format!("missing weight for {}", universe.name(i)))))
            .collect::<Result<Vec<_>>>()?;
        Distribution::new(weights).map_err(|e| Error::parse(0, e.to_string()))
    }

    pub fn to_text(&self, universe: &Universe) -> String {
        let mut out = String::new();
        for (i, w) in self.weights.iter().enumerate() {
            let _ = writeln!(out, "{} {}/{}", universe.name(i), w.numer(), w.denom());
        }
        out
    }
}

/// Decimal rendering of a rational, rounded half up to `digits` places.
pub fn to_decimal(r: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let neg = r.is_negative();
    let scaled = (r.abs() * Rational::from_integer(scale.clone()) + Rational::new(BigInt::one(), BigInt::from(2))).floor();
    let v = scaled.to_integer();
    let int = &v / &scale;
    let frac = &v % &scale;
    let sign = if neg && !v.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{:0>width$}", frac.to_string(), width = digits)
    }
}
