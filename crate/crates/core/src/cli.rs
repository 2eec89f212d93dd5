//! Command-line front end. Each subcommand parses its arguments, calls one
//! library operation and formats the result as text or (with `--json`) JSON.
//!
//! Exit codes: `0` success, `1` usage or input error, `2` a verification found
//! a mismatch.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumeration::{self, PartitionClass, PartitionStream};
use crate::error::Error;
use crate::frobenius::{count_colored_frobenius, FrobeniusSymbol};
use crate::littlewood::{self, compose, decompose};
use crate::partition::Partition;
use crate::qseries::{Identity, IdentityReport};
use crate::special::{double_distinct, DistinctPartition};
use crate::sweep::{Sweep, SweepParams, SweepReport};
use crate::wright::{TwoRowedArray, WrightImage};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

const DEFAULT_MAX_N: usize = 25;
const DEFAULT_MAX_T: usize = 6;
const DEFAULT_ORDER: usize = 40;

#[derive(Debug, Parser)]
#[command(name = "corequot", version, about = "t-cores, t-quotients and colored Frobenius symbols")]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Modulus {
    #[arg(long)]
    t: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Frobenius symbol of a partition
    Frobenius { partition: Partition },
    /// t-colored Frobenius symbol of a partition
    Colored {
        #[command(flatten)]
        m: Modulus,
        partition: Partition,
    },
    /// Wright's map: forward from an array such as "6 5 3 2 0 / 4 2 1", or
    /// backward with --offset and --mu
    Wright {
        #[arg(conflicts_with_all = ["offset", "mu"], required_unless_present = "offset")]
        array: Option<TwoRowedArray>,
        #[arg(long, allow_negative_numbers = true, requires = "mu")]
        offset: Option<i64>,
        #[arg(long)]
        mu: Option<Partition>,
    },
    /// t-core, t-quotient and characteristic vector
    Decompose {
        #[command(flatten)]
        m: Modulus,
        partition: Partition,
    },
    /// Rebuild a partition from a t-core and t quotient partitions, or from the
    /// JSON printed by `decompose --json`
    Compose {
        #[arg(long, required_unless_present = "payload")]
        t: Option<usize>,
        #[arg(long, required_unless_present = "payload")]
        core: Option<Partition>,
        #[arg(conflicts_with = "payload")]
        quotient: Vec<Partition>,
        #[arg(long, conflicts_with_all = ["t", "core"])]
        payload: Option<String>,
    },
    Core {
        #[command(flatten)]
        m: Modulus,
        partition: Partition,
    },
    Quotient {
        #[command(flatten)]
        m: Modulus,
        partition: Partition,
    },
    Charvec {
        #[command(flatten)]
        m: Modulus,
        partition: Partition,
    },
    /// Decide whether a partition is a t-core
    IsCore {
        #[command(flatten)]
        m: Modulus,
        #[arg(long, value_enum, default_value_t = CoreMethod::Hooks)]
        method: CoreMethod,
        partition: Partition,
    },
    /// Hook lengths, or the boxes with a given hook length
    Hooks {
        #[arg(long)]
        length: Option<usize>,
        partition: Partition,
    },
    /// Doubled partition of a partition into distinct parts
    Double { partition: Partition },
    /// All partitions of n in a class, largest first
    List {
        n: usize,
        #[arg(long, value_enum, default_value_t = ClassArg::All)]
        class: ClassArg,
        #[arg(long)]
        t: Option<usize>,
    },
    Count {
        n: usize,
        #[arg(long, value_enum, default_value_t = ClassArg::All)]
        class: ClassArg,
        #[arg(long)]
        t: Option<usize>,
    },
    /// Check a generating-function identity or run an exhaustive sweep
    Verify(VerifyArgs),
    /// ASCII Young diagram
    Render {
        #[arg(long)]
        hooks: bool,
        partition: Partition,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CoreMethod {
    Hooks,
    Frobenius,
    Colored,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    All,
    Tcore,
    Sc,
    Dd,
    Distinct,
    ColoredFrobenius,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// frobenius-gf, jtp, littlewood, tcore-theta, sc, dd, bijection,
    /// core-predicates, strip-oracle, hook-transfer, special-classes or all
    target: String,
    /// Modulus for identity checks (default: every t in 2..=5)
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
    /// Sweep depth; COREQUOT_MAX_N overrides the default
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_MAX_T)]
    max_t: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Deserialize)]
struct ComposePayload {
    t: usize,
    core: Partition,
    quotient: Vec<Partition>,
}

#[derive(Debug, Serialize)]
struct VerifyOutput {
    identities: Vec<IdentityReport>,
    sweeps: Vec<SweepReport>,
    pass: bool,
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("write failed: {e}"))
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Mismatch) => EXIT_MISMATCH,
    }
}

fn show(p: &Partition) -> String {
    if p.is_empty() {
        "()".to_string()
    } else {
        p.to_string()
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn emit_json<T: Serialize>(out: &mut impl Write, value: &T) -> CmdResult {
    let text = serde_json::to_string(value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn class_of(class: ClassArg, t: Option<usize>) -> std::result::Result<PartitionClass, Failure> {
    let need_t = || t.ok_or_else(|| Failure::Usage(format!("--class {class:?} requires --t").to_lowercase()));
    Ok(match class {
        ClassArg::All => PartitionClass::All,
        ClassArg::Tcore => PartitionClass::TCore(need_t()?),
        ClassArg::Sc => PartitionClass::SelfConjugate,
        ClassArg::Dd => PartitionClass::DoubledDistinct,
        ClassArg::Distinct => PartitionClass::Distinct,
        ClassArg::ColoredFrobenius => {
            return Err(Failure::Usage("colored Frobenius partitions are not partitions; use `count`".into()))
        }
    })
}

fn execute(cli: Cli, out: &mut impl Write) -> CmdResult {
    let json = cli.json;
    match cli.command {
        Command::Frobenius { partition } => {
            let f = FrobeniusSymbol::from_partition(&partition);
            if json {
                emit_json(out, &f)?;
            } else {
                writeln!(out, "{f}")?;
            }
        }
        Command::Colored { m, partition } => {
            let c = FrobeniusSymbol::from_partition(&partition).to_colored(m.t)?;
            if json {
                emit_json(out, &c)?;
            } else {
                writeln!(out, "{c}")?;
            }
        }
        Command::Wright { array, offset, mu } => match (array, offset, mu) {
            (Some(array), _, _) => {
                let img = array.wright_forward();
                if json {
                    emit_json(out, &serde_json::json!({ "offset": img.offset, "mu": img.mu }))?;
                } else {
                    writeln!(out, "offset: {}", img.offset)?;
                    writeln!(out, "mu: {}", show(&img.mu))?;
                }
            }
            (None, Some(offset), Some(mu)) => {
                let array = WrightImage::new(offset, mu).wright_backward();
                if json {
                    emit_json(out, &serde_json::json!({ "top": array.top(), "bottom": array.bottom() }))?;
                } else {
                    writeln!(out, "{array}")?;
                }
            }
            _ => return Err(Failure::Usage("give an array, or both --offset and --mu".into())),
        },
        Command::Decompose { m, partition } => {
            let d = decompose(&partition, m.t)?;
            if json {
                emit_json(out, &d)?;
            } else {
                writeln!(out, "core: {}", show(&d.core))?;
                writeln!(out, "quotient: {}", d.quotient.iter().map(show).collect::<Vec<_>>().join(" | "))?;
                writeln!(out, "charvec: {}", join(&d.charvec, ","))?;
            }
        }
        Command::Compose { t, core, quotient, payload } => {
            let (t, core, quotient) = match payload {
                Some(text) => {
                    let p: ComposePayload = serde_json::from_str(&text)
                        .map_err(|e| Failure::Usage(format!("cannot parse payload {text:?}: {e}")))?;
                    (p.t, p.core, p.quotient)
                }
                None => (t.expect("required by clap"), core.expect("required by clap"), quotient),
            };
            let lambda = compose(&core, &quotient, t)?;
            if json {
                emit_json(out, &lambda)?;
            } else {
                writeln!(out, "{}", show(&lambda))?;
            }
        }
        Command::Core { m, partition } => {
            let core = littlewood::core(&partition, m.t)?;
            if json {
                emit_json(out, &core)?;
            } else {
                writeln!(out, "{}", show(&core))?;
            }
        }
        Command::Quotient { m, partition } => {
            let quotient = littlewood::quotient(&partition, m.t)?;
            if json {
                emit_json(out, &quotient)?;
            } else {
                for q in &quotient {
                    writeln!(out, "{}", show(q))?;
                }
            }
        }
        Command::Charvec { m, partition } => {
            let w = littlewood::char_vector(&partition, m.t)?;
            if json {
                emit_json(out, &w)?;
            } else {
                writeln!(out, "{}", join(&w, ","))?;
            }
        }
        Command::IsCore { m, method, partition } => {
            let f = FrobeniusSymbol::from_partition(&partition);
            let by_hooks = partition.is_t_core(m.t)?;
            let by_rows = f.is_t_core(m.t)?;
            let by_colors = f.to_colored(m.t)?.is_t_core();
            let answer = match method {
                CoreMethod::Hooks => by_hooks,
                CoreMethod::Frobenius => by_rows,
                CoreMethod::Colored => by_colors,
                CoreMethod::All => {
                    if by_hooks != by_rows || by_rows != by_colors {
                        writeln!(out, "predicates disagree: hooks {by_hooks}, frobenius {by_rows}, colored {by_colors}")?;
                        return Err(Failure::Mismatch);
                    }
                    by_hooks
                }
            };
            if json {
                emit_json(out, &answer)?;
            } else {
                writeln!(out, "{answer}")?;
            }
        }
        Command::Hooks { length: Some(len), partition } => {
            let boxes = partition.boxes_with_hook_length(len);
            if json {
                emit_json(out, &serde_json::json!({ "length": len, "count": boxes.len(), "boxes": boxes }))?;
            } else {
                writeln!(out, "count: {}", boxes.len())?;
                let listed: Vec<String> = boxes.iter().map(|(r, c)| format!("({r},{c})")).collect();
                writeln!(out, "boxes: {}", listed.join(" "))?;
            }
        }
        Command::Hooks { length: None, partition } => {
            let hooks = partition.hook_lengths();
            if json {
                emit_json(out, &hooks)?;
            } else {
                for row in &hooks {
                    writeln!(out, "{}", join(row, " "))?;
                }
            }
        }
        Command::Double { partition } => {
            let delta = DistinctPartition::try_from(partition)?;
            let doubled = double_distinct(&delta);
            if json {
                emit_json(out, &doubled)?;
            } else {
                writeln!(out, "{}", show(&doubled))?;
            }
        }
        Command::List { n, class, t } => {
            let all: Vec<Partition> = PartitionStream::new(n, class_of(class, t)?).collect();
            if json {
                emit_json(out, &all)?;
            } else {
                for p in &all {
                    writeln!(out, "{}", show(p))?;
                }
            }
        }
        Command::Count { n, class, t } => {
            let total = match class {
                ClassArg::ColoredFrobenius => {
                    let t = t.ok_or_else(|| Failure::Usage("--class colored-frobenius requires --t".into()))?;
                    count_colored_frobenius(n, t)?
                }
                _ => enumeration::count(n, class_of(class, t)?),
            };
            if json {
                emit_json(out, &total)?;
            } else {
                writeln!(out, "{total}")?;
            }
        }
        Command::Verify(args) => verify(args, json, out)?,
        Command::Render { hooks, partition } => {
            write!(out, "{}", render(&partition, hooks))?;
        }
    }
    Ok(())
}

/// Left-justified diagram, one line per row. With `hooks`, each cell shows its
/// hook length right-aligned to the widest value; otherwise cells are `#`.
pub fn render(lambda: &Partition, hooks: bool) -> String {
    if lambda.is_empty() {
        return "(empty)\n".to_string();
    }
    let table = lambda.hook_lengths();
    let width = if hooks { table[0][0].to_string().len() } else { 1 };
    let mut text = String::new();
    for row in &table {
        let cells: Vec<String> = row
            .iter()
            .map(|h| if hooks { format!("{h:>width$}") } else { "#".to_string() })
            .collect();
        text.push_str(&cells.join(" "));
        text.push('\n');
    }
    text
}

fn sweep_depth(max_n: Option<usize>) -> std::result::Result<usize, Failure> {
    if let Some(n) = max_n {
        return Ok(n);
    }
    match std::env::var("COREQUOT_MAX_N") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("COREQUOT_MAX_N={v:?} is not a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn verify(args: VerifyArgs, json: bool, out: &mut impl Write) -> CmdResult {
    let (identities, sweeps): (Vec<Identity>, Vec<Sweep>) = if args.target == "all" {
        (Identity::ALL.to_vec(), Sweep::ALL.to_vec())
    } else if let Ok(id) = args.target.parse::<Identity>() {
        (vec![id], Vec::new())
    } else if let Ok(sweep) = args.target.parse::<Sweep>() {
        (Vec::new(), vec![sweep])
    } else {
        return Err(Failure::Usage(format!("unknown verification target {:?}", args.target)));
    };

    let moduli: Vec<usize> = match args.t {
        Some(t) => vec![t],
        None => (2..=5).collect(),
    };
    let mut jobs: Vec<(Identity, usize)> = Vec::new();
    for id in identities {
        if id.takes_modulus() {
            jobs.extend(moduli.iter().map(|&t| (id, t)));
        } else {
            jobs.push((id, 0));
        }
    }
    let identity_reports: Vec<IdentityReport> = jobs
        .into_par_iter()
        .map(|(id, t)| id.check(t, args.order))
        .collect::<crate::error::Result<_>>()?;

    let params = SweepParams { max_n: sweep_depth(args.max_n)?, max_t: args.max_t, seed: args.seed };
    let sweep_reports: Vec<SweepReport> = sweeps
        .into_iter()
        .map(|s| s.run(params))
        .collect::<crate::error::Result<_>>()?;

    let pass = identity_reports.iter().all(|r| r.pass) && sweep_reports.iter().all(|r| r.pass);
    if json {
        emit_json(out, &VerifyOutput { identities: identity_reports, sweeps: sweep_reports, pass })?;
    } else {
        for r in &identity_reports {
            writeln!(out, "{r}")?;
        }
        for r in &sweep_reports {
            writeln!(out, "{r}")?;
        }
    }
    if pass {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}
