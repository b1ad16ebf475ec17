//! Command-line front end. [`execute`] is a pure function of its arguments
//! and the files they name; the `querylearn` binary only prints its result.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::automata::{self, Dfa, DfaMode};
use crate::class::ConceptClass;
use crate::compression::{check_round_trip, CompressionScheme};
use crate::concept::PartialConcept;
use crate::dimensions::{consistency_dim, DimensionReport};
use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::fixtures;
use crate::format::{class_to_text, parse_class};
use crate::gametree::{GameSolver, Mode};
use crate::hypothesis::LazyHypothesisClass;
use crate::learners::{
    run_session_in, CdimLearner, EqMqLearner, HalvingLearner, Learner, OptimalLearner, Sc2Learner,
    ThicketLearner,
};
use crate::teachers::{HonestTeacher, RandomTeacher, Teacher, TreeAdversary, WitnessAdversary};
use crate::thicket::{deficient_cycle_search, estimate_expected_queries, ThicketGraph};

/// Universe size above which exponential searches get slow.
pub const SOFT_CAP_ELEMENTS: usize = 16;
pub const SOFT_CAP_CONCEPTS: usize = 64;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub report: String,
    pub warnings: Vec<String>,
}

#[derive(Parser, Debug)]
#[command(name = "querylearn", version, about = "Exact query learning for finite concept classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Littlestone, VC and consistency dimensions.
    Dims {
        #[arg(long)]
        class: PathBuf,
        /// self | powerset | m:<k> | <class file>
        #[arg(long)]
        hyp: Option<String>,
        /// Also compute the strong consistency dimension.
        #[arg(long)]
        strong: bool,
    },
    /// Run a learner against a teacher and print the transcript.
    Learn {
        #[arg(long)]
        class: PathBuf,
        #[arg(long, default_value = "self")]
        hyp: String,
        #[arg(long, value_enum)]
        algo: Algo,
        /// tree | witness:<literal>:<n> | random:<mu file>:<seed> | honest:<index>
        #[arg(long)]
        teacher: String,
        /// Target index for the random teacher.
        #[arg(long, default_value_t = 0)]
        target: usize,
        /// Distribution for the thicket learner; uniform when absent.
        #[arg(long)]
        mu: Option<PathBuf>,
        /// Query budget; defaults to the learner's certified bound.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Exact learning complexity by minimax search.
    Exact {
        #[arg(long, value_enum)]
        mode: ExactMode,
        #[arg(long)]
        class: PathBuf,
        #[arg(long, default_value = "self")]
        hyp: String,
    },
    /// Thicket query graph and randomized-counterexample sessions.
    Thicket {
        #[arg(long)]
        class: PathBuf,
        #[arg(long)]
        mu: Option<PathBuf>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Longest cycle searched; defaults to min(|C|, 6).
        #[arg(long)]
        cycle_len: Option<usize>,
    },
    /// Sample compression.
    Compress {
        #[arg(long)]
        class: PathBuf,
        /// Round-trip every finite sample of the class.
        #[arg(long)]
        check_all: bool,
        /// Compress one sample given as a {0,1,*} literal.
        #[arg(long)]
        sample: Option<String>,
    },
    /// DFA classes over binary words of bounded length.
    Dfa {
        #[arg(long)]
        states: usize,
        #[arg(long)]
        maxlen: usize,
        #[arg(long)]
        dims: bool,
        #[arg(long, requires = "target")]
        learn: bool,
        #[arg(long)]
        target: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "eqmq")]
        mode: ExactMode,
    },
    /// Emit a class file.
    Gen(GenArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GenArgs {
    /// Distinct random concepts: ELEMENTS CONCEPTS SEED.
    #[arg(long, num_args = 3, value_names = ["ELEMENTS", "CONCEPTS", "SEED"])]
    random: Option<Vec<u64>>,
    /// Branch sets of the complete c-ary tree of depth d: C D.
    #[arg(long, num_args = 2, value_names = ["C", "D"])]
    tree: Option<Vec<usize>>,
    #[arg(long, value_name = "N")]
    singletons: Option<usize>,
    #[arg(long, value_name = "K")]
    powerset: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Algo {
    Optimal,
    Cdim,
    Sc2,
    Halving,
    Eqmq,
    Thicket,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ExactMode {
    Eq,
    Eqmq,
}

/// Parse `argv` (without the program name) and run the command.
pub fn execute<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once("querylearn".into()).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return Outcome {
                code,
                report: e.render().to_string(),
                warnings: Vec::new(),
            };
        }
    };
    let mut warnings = Vec::new();
    match run(cli.command, &mut warnings) {
        Ok(report) => Outcome {
            code: EXIT_OK,
            report,
            warnings,
        },
        Err(e) => Outcome {
            code: exit_code(&e),
            report: format!("error: {e}\n"),
            warnings,
        },
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Io(_) | Error::EmptyClass | Error::DuplicateConcept(_) => EXIT_INPUT,
        Error::Incoherent(_) | Error::Invariant(_) => EXIT_INVARIANT,
        Error::UniverseMismatch | Error::NotSubclass | Error::Precondition(_) | Error::TooLarge(_) => EXIT_USAGE,
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load_class(path: &Path, warnings: &mut Vec<String>) -> Result<ConceptClass> {
    let c = parse_class(&read(path)?)?;
    if c.n() > SOFT_CAP_ELEMENTS {
        warnings.push(format!(
            "universe has {} elements (soft cap {SOFT_CAP_ELEMENTS}); exact searches may be slow",
            c.n()
        ));
    }
    if c.len() > SOFT_CAP_CONCEPTS {
        warnings.push(format!(
            "class has {} concepts (soft cap {SOFT_CAP_CONCEPTS}); exact searches may be slow",
            c.len()
        ));
    }
    Ok(c)
}

/// `self`, `powerset`, `m:<k>`, or a class file over the same universe.
pub fn parse_hypotheses(arg: &str, c: &ConceptClass) -> Result<LazyHypothesisClass> {
    if arg == "self" {
        return Ok(LazyHypothesisClass::Explicit(c.clone()));
    }
    if arg == "powerset" {
        return Ok(LazyHypothesisClass::AllTotals(c.universe().clone()));
    }
    if let Some(m) = arg.strip_prefix("m:") {
        let m = m
            .parse()
            .map_err(|_| Error::pre(format!("invalid m in hypothesis argument {arg}")))?;
        return LazyHypothesisClass::m_consistent(c.clone(), m);
    }
    let h = parse_class(&read(Path::new(arg))?)?;
    if h.universe() != c.universe() {
        return Err(Error::UniverseMismatch);
    }
    let h = ConceptClass::new(c.universe().clone(), h.concepts().to_vec())?;
    let h = LazyHypothesisClass::Explicit(h);
    h.check_contains_class(c)?;
    Ok(h)
}

fn load_mu(path: Option<&Path>, c: &ConceptClass) -> Result<Distribution> {
    match path {
        Some(p) => Distribution::parse(&read(p)?, c.universe()),
        None => Ok(Distribution::uniform(c.n())),
    }
}

fn run(cmd: Command, warnings: &mut Vec<String>) -> Result<String> {
    match cmd {
        Command::Dims { class, hyp, strong } => {
            let c = load_class(&class, warnings)?;
            let h = hyp.map(|s| parse_hypotheses(&s, &c)).transpose()?;
            if strong && h.is_none() {
                return Err(Error::pre("--strong needs --hyp"));
            }
            Ok(DimensionReport::compute(&c, h.as_ref(), strong)?.to_string())
        }
        Command::Learn {
            class,
            hyp,
            algo,
            teacher,
            target,
            mu,
            budget,
        } => {
            let c = load_class(&class, warnings)?;
            let h = parse_hypotheses(&hyp, &c)?;
            learn(&c, &h, algo, &teacher, target, mu.as_deref(), budget)
        }
        Command::Exact { mode, class, hyp } => {
            let c = load_class(&class, warnings)?;
            let h = parse_hypotheses(&hyp, &c)?;
            let mode = match mode {
                ExactMode::Eq => Mode::Eq,
                ExactMode::Eqmq => Mode::EqMq,
            };
            let v = GameSolver::new(&c, &h, mode)?.solve();
            Ok(format!("lc={} nodes={}\n", v.lc, v.nodes))
        }
        Command::Thicket {
            class,
            mu,
            trials,
            seed,
            cycle_len,
        } => {
            let c = load_class(&class, warnings)?;
            let mu = load_mu(mu.as_deref(), &c)?;
            let mut out = String::new();
            let graph = ThicketGraph::new(&c, &mu)?;
            match graph.max_rank() {
                Some(r) => writeln!(out, "maxrank={}/{}", r.numer(), r.denom()),
                None => writeln!(out, "maxrank=none"),
            }
            .expect("write to string");
            let len = cycle_len.unwrap_or(c.len().min(6));
            let cycle = deficient_cycle_search(&c, &mu, len)?;
            let cycle = cycle.map_or("none".to_string(), |v| {
                v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
            });
            let _ = writeln!(out, "deficient_cycles={cycle}");
            if let Some(trials) = trials {
                let s = estimate_expected_queries(&c, &mu, trials, seed)?;
                let _ = writeln!(
                    out,
                    "mean={:.4} stderr={:.4} max={} bound={}",
                    s.mean,
                    s.stderr,
                    s.max,
                    2 * c.ldim()
                );
            }
            Ok(out)
        }
        Command::Compress {
            class,
            check_all,
            sample,
        } => {
            let c = load_class(&class, warnings)?;
            let mut out = String::new();
            if let Some(lit) = sample {
                let f = PartialConcept::parse_literal(&lit, c.n())?;
                let scheme = CompressionScheme::new(&c);
                let t = scheme.compress(f)?;
                let names: Vec<&str> = t.iter().map(|&x| c.universe().name(x)).collect();
                let _ = writeln!(out, "tuple=({})", names.join(","));
                for i in 0..scheme.reconstruction_count() {
                    let g = scheme.decompress(i, &t)?;
                    let g = g.map_or("none".to_string(), |g| g.to_bitstring(c.n()));
                    let _ = writeln!(out, "rho{i}={g}");
                }
                let _ = writeln!(out, "recovered_by={:?}", scheme.recovering(f)?);
            }
            if check_all {
                let r = check_round_trip(&c)?;
                let verdict = r.failure.map_or("ok".to_string(), |f| format!("FAIL({})", f.to_literal(c.n())));
                let _ = writeln!(out, "d={} rhos={} samples={} roundtrip={verdict}", r.d, r.rhos, r.samples);
                if r.failure.is_some() {
                    return Err(Error::Invariant(out));
                }
            }
            if out.is_empty() {
                return Err(Error::pre("compress needs --check-all or --sample"));
            }
            Ok(out)
        }
        Command::Dfa {
            states,
            maxlen,
            dims,
            learn,
            target,
            mode,
        } => {
            let mut out = String::new();
            if dims || !learn {
                let c = automata::enumerate_dfa_class(states, maxlen)?;
                let h = LazyHypothesisClass::Explicit(c.clone());
                let _ = writeln!(out, "elements={}\nconcepts={}", c.n(), c.len());
                let _ = writeln!(out, "ldim={}\ncdim={}", c.ldim(), consistency_dim(&c, &h)?);
                let _ = writeln!(out, "cdim_cap={}", states * (states + 1));
            }
            if learn {
                let path = target.expect("clap enforces --target");
                let d = Dfa::parse(&read(&path)?)?;
                let mode = match mode {
                    ExactMode::Eq => DfaMode::Eq,
                    ExactMode::Eqmq => DfaMode::EqMq,
                };
                let run = automata::learn_dfa(states, maxlen, &d, mode)?;
                let _ = writeln!(out, "cdim={} ldim={} bound={}", run.consistency_dim, run.ldim, run.bound);
                out.push_str(&run.transcript.render(&run.class));
            }
            Ok(out)
        }
        Command::Gen(g) => {
            let c = if let Some(r) = g.random {
                fixtures::random_class(r[0] as usize, r[1] as usize, r[2])?
            } else if let Some(t) = g.tree {
                fixtures::try_tree(t[0], t[1])?
            } else if let Some(n) = g.singletons {
                guard_gen(n)?;
                fixtures::sing(n)
            } else if let Some(k) = g.powerset {
                if k == 0 || k > 12 {
                    return Err(Error::TooLarge(format!("powerset of {k} elements (need 1..=12)")));
                }
                fixtures::pow(k)
            } else {
                unreachable!("clap requires one generator")
            };
            Ok(class_to_text(&c))
        }
    }
}

fn guard_gen(n: usize) -> Result<()> {
    if n == 0 || n > 64 {
        return Err(Error::TooLarge(format!("{n} singletons (need 1..=64)")));
    }
    Ok(())
}

fn learn(
    c: &ConceptClass,
    h: &LazyHypothesisClass,
    algo: Algo,
    teacher: &str,
    target: usize,
    mu: Option<&Path>,
    budget: Option<usize>,
) -> Result<String> {
    let (mut learner, bound): (Box<dyn Learner>, usize) = match algo {
        Algo::Optimal => (Box::new(OptimalLearner::with_hypotheses(c, h)?), OptimalLearner::bound(c)),
        Algo::Cdim => {
            let l = CdimLearner::new(c, h)?;
            let b = CdimLearner::bound(c, l.consistency_dim());
            (Box::new(l), b)
        }
        Algo::Sc2 => (Box::new(Sc2Learner::new(c, h)?), Sc2Learner::bound(c)),
        Algo::Halving => {
            let l = HalvingLearner::new(c, h)?;
            let b = HalvingLearner::bound(c, l.strong_dim());
            (Box::new(l), b)
        }
        Algo::Eqmq => {
            let l = EqMqLearner::new(c, h)?;
            let b = EqMqLearner::bound(c, l.consistency_dim());
            (Box::new(l), b)
        }
        Algo::Thicket => {
            let mu = load_mu(mu, c)?;
            (Box::new(ThicketLearner::new(c, &mu)), c.len())
        }
    };
    let mut teacher = parse_teacher(teacher, c, h, target)?;
    let budget = budget.unwrap_or(bound);
    let t = run_session_in(learner.as_mut(), teacher.as_mut(), budget, h)?;
    let report = t.render(c);
    if !t.succeeded() {
        return Err(Error::Invariant(format!(
            "learner did not finish within {budget} queries\n{report}"
        )));
    }
    Ok(report)
}

fn parse_teacher(arg: &str, c: &ConceptClass, h: &LazyHypothesisClass, target: usize) -> Result<Box<dyn Teacher>> {
    let bad = || Error::pre(format!("invalid teacher argument {arg}"));
    let mut parts = arg.splitn(3, ':');
    Ok(match parts.next() {
        Some("tree") if parts.next().is_none() => Box::new(TreeAdversary::new(c)),
        Some("honest") => {
            let idx = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
            Box::new(HonestTeacher::new(c, idx)?)
        }
        Some("witness") => {
            let lit = parts.next().ok_or_else(bad)?;
            let n = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
            let a = PartialConcept::parse_literal(lit, c.n())?;
            Box::new(WitnessAdversary::new(c, h, a, n)?)
        }
        Some("random") => {
            // The seed follows the last colon so the path may contain colons.
            let rest = arg.strip_prefix("random:").ok_or_else(bad)?;
            let (path, seed) = rest.rsplit_once(':').ok_or_else(bad)?;
            let seed = seed.parse().map_err(|_| bad())?;
            let mu = load_mu(Some(Path::new(path)), c)?;
            Box::new(RandomTeacher::new(c, target, &mu, seed)?)
        }
        _ => return Err(bad()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_and_help() {
        assert_eq!(execute(["bogus"]).code, EXIT_USAGE);
        assert_eq!(execute(["--help"]).code, EXIT_OK);
        assert_eq!(execute(["dims", "--class", "/nonexistent/missing.cls"]).code, EXIT_INPUT);
        assert_eq!(execute(["gen", "--tree", "3", "2", "--powerset", "2"]).code, EXIT_USAGE);
    }

    #[test]
    fn gen_matches_fixtures() {
        let out = execute(["gen", "--tree", "3", "2"]);
        assert_eq!(out.code, 0);
        assert_eq!(parse_class(&out.report).unwrap(), fixtures::tree(3, 2));
        let a = execute(["gen", "--random", "6", "8", "1"]);
        assert_eq!(a, execute(["gen", "--random", "6", "8", "1"]));
        assert_eq!(execute(["gen", "--random", "2", "5", "1"]).code, EXIT_USAGE);
    }

    #[test]
    fn teacher_specs() {
        let c = fixtures::sing(4);
        let h = LazyHypothesisClass::Explicit(c.clone());
        assert!(parse_teacher("tree", &c, &h, 0).is_ok());
        assert!(parse_teacher("honest:2", &c, &h, 0).is_ok());
        assert!(parse_teacher("honest:9", &c, &h, 0).is_err());
        assert!(parse_teacher("witness:0000:3", &c, &h, 0).is_ok());
        assert!(parse_teacher("witness:1100:2", &c, &h, 0).is_err());
        assert!(parse_teacher("oracle", &c, &h, 0).is_err());
    }
}
