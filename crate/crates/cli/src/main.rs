use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use optrep::count::{frequency_table, max_optimal_bounded, DEFAULT_GAP_BOUND};
use optrep::extremal::{extremal_rows, extremal_string, max_count};
use optrep::optgraph::{build_full_graph, condense, optimal_graph};
use optrep::{enumerate_optimal, optimal_count, wnaf, DigitString, RingElem, Sampler, System, Transducer, Variant};
use serde::Serialize;
use serde_json::json;

mod verify;

#[derive(Parser, Debug)]
#[command(name = "optrep", version, about = "Optimal digit representations in bases i-1 and w-1")]
struct Cli {
    /// Numeration system.
    #[arg(long, short, global = true, value_enum)]
    system: Option<SystemArg>,

    #[arg(long, short, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,

    /// Maximum number of strings to list (0 = unlimited).
    #[arg(long, global = true, default_value_t = 1_000_000)]
    cap: usize,

    /// Seed for the sampler.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Maximum run of `0` blocks between nonzero blocks in exhaustive searches.
    #[arg(long, global = true, default_value_t = DEFAULT_GAP_BOUND)]
    gap_bound: usize,

    /// Print timing and progress details on stderr.
    #[arg(long, short, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SystemArg {
    Gauss,
    Eisenstein,
}

impl From<SystemArg> for System {
    fn from(s: SystemArg) -> System {
        match s {
            SystemArg::Gauss => System::Gauss,
            SystemArg::Eisenstein => System::Eisenstein,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
    Tsv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum GraphArg {
    /// The recoding transducer (same edges as the full graph).
    Full,
    /// Classes of states with minimal weights.
    Condensed,
    /// The optimal subgraph.
    Optimal,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// W-NAF of an element, e.g. `2+i` or `-2+5w`.
    Naf {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Rewrite a digit string into its W-NAF.
    Transduce { digits: String },
    /// Number of optimal representations.
    Count {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// List all optimal representations, sorted.
    Enumerate {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Draw one optimal representation uniformly at random.
    Sample {
        #[arg(allow_hyphen_values = true)]
        x: String,
        /// Number of draws.
        #[arg(long, default_value_t = 1)]
        draws: usize,
    },
    /// Maximal optimal count over W-NAFs with N nonzero digits (bounded search).
    Max { n: usize },
    /// Prefixes of the extremal sequences (all variants unless one is given).
    Extremal {
        /// S1..S4 (gauss), S or gS (eisenstein); omit for all.
        #[arg(value_name = "VARIANT")]
        variant_or_n: String,
        n: Option<usize>,
    },
    /// W-NAFs with N nonzero digits attaining the maximal count.
    Attainers { n: usize },
    /// Digit frequencies R(N)/(N S(N)) for N = 1..=N_MAX.
    Frequency { n_max: usize },
    /// Run a named verification suite (`all` for every suite).
    Verify { suite: String },
    /// Dump one of the graphs as an edge list.
    Graph {
        #[arg(value_enum, default_value_t = GraphArg::Optimal)]
        kind: GraphArg,
    },
}

struct Ctx {
    cli_system: Option<System>,
    output: Output,
    cap: usize,
    seed: u64,
    gap_bound: usize,
    verbose: bool,
}

impl Ctx {
    fn system(&self) -> Result<System> {
        self.cli_system.ok_or_else(|| anyhow!("--system is required for this command"))
    }

    fn elem(&self, text: &str) -> Result<RingElem> {
        let sys = self.system()?;
        RingElem::parse(text, sys).with_context(|| format!("invalid {sys} element"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        cli_system: cli.system.map(System::from),
        output: cli.output,
        cap: cli.cap,
        seed: cli.seed,
        gap_bound: cli.gap_bound,
        verbose: cli.verbose,
    };
    let mut out = std::io::stdout().lock();
    match run(&ctx, cli.command, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Runs one command; `Ok(false)` means a verification failed.
fn run(ctx: &Ctx, command: Command, out: &mut impl Write) -> Result<bool> {
    match command {
        Command::Naf { x } => {
            let x = ctx.elem(&x)?;
            let s = wnaf(&x);
            match ctx.output {
                Output::Text => writeln!(out, "{s}")?,
                Output::Json => writeln!(out, "{}", json!({"x": x.to_string(), "system": x.ring().name(), "naf": s.to_string()}))?,
                Output::Tsv => writeln!(out, "x\tsystem\tnaf\n{x}\t{}\t{s}", x.ring())?,
            }
        }
        Command::Transduce { digits } => {
            let sys = ctx.system()?;
            let s = DigitString::parse(&digits, sys)?;
            let t = Transducer::build(sys)?.transduce(&s)?;
            match ctx.output {
                Output::Text => writeln!(out, "{t}")?,
                Output::Json => writeln!(out, "{}", json!({"input": s.to_string(), "system": sys.name(), "naf": t.to_string()}))?,
                Output::Tsv => writeln!(out, "input\tsystem\tnaf\n{s}\t{sys}\t{t}")?,
            }
        }
        Command::Count { x } => {
            let x = ctx.elem(&x)?;
            let rec = CountRecord::new(&x);
            match ctx.output {
                Output::Text => writeln!(out, "{}", rec.optimal_count)?,
                Output::Json => writeln!(out, "{}", serde_json::to_string(&rec)?)?,
                Output::Tsv => writeln!(
                    out,
                    "x\tsystem\tnaf\tweight\toptimal_count\n{}\t{}\t{}\t{}\t{}",
                    rec.x, rec.system, rec.naf, rec.weight, rec.optimal_count
                )?,
            }
        }
        Command::Enumerate { x } => {
            let x = ctx.elem(&x)?;
            let e = enumerate_optimal(&x, ctx.cap);
            if e.truncated {
                eprintln!("note: listing truncated at {} of {} strings (raise --cap)", e.strings.len(), e.total);
            }
            let strings: Vec<String> = e.strings.iter().map(|s| s.to_string()).collect();
            match ctx.output {
                Output::Text => strings.iter().try_for_each(|s| writeln!(out, "{s}"))?,
                Output::Json => writeln!(
                    out,
                    "{}",
                    json!({"x": x.to_string(), "system": x.ring().name(), "total": e.total.to_string(),
                           "truncated": e.truncated, "strings": strings})
                )?,
                Output::Tsv => {
                    writeln!(out, "string\tweight")?;
                    for s in &e.strings {
                        writeln!(out, "{s}\t{}", s.hamming_weight())?;
                    }
                }
            }
        }
        Command::Sample { x, draws } => {
            let x = ctx.elem(&x)?;
            let mut sampler = Sampler::new(&x, ctx.seed);
            let samples: Vec<String> = (0..draws).map(|_| sampler.sample().to_string()).collect();
            match ctx.output {
                Output::Text => samples.iter().try_for_each(|s| writeln!(out, "{s}"))?,
                Output::Json => writeln!(
                    out,
                    "{}",
                    json!({"x": x.to_string(), "system": x.ring().name(), "seed": ctx.seed, "samples": samples})
                )?,
                Output::Tsv => {
                    writeln!(out, "draw\tstring")?;
                    for (i, s) in samples.iter().enumerate() {
                        writeln!(out, "{i}\t{s}")?;
                    }
                }
            }
        }
        Command::Max { n } => {
            let sys = ctx.system()?;
            let started = std::time::Instant::now();
            let res = max_optimal_bounded(sys, n, ctx.gap_bound)?;
            if ctx.verbose {
                eprintln!("search took {:.2?}", started.elapsed());
            }
            let attainers: Vec<String> = res.attainers.iter().map(|s| s.to_string()).collect();
            match ctx.output {
                Output::Text => writeln!(out, "{}", res.max)?,
                Output::Json => writeln!(
                    out,
                    "{}",
                    json!({"system": sys.name(), "n": n, "gap_bound": ctx.gap_bound, "max": res.max.to_string(),
                           "attainers": attainers})
                )?,
                Output::Tsv => writeln!(out, "n\tgap_bound\tmax\tattainers\n{n}\t{}\t{}\t{}", ctx.gap_bound, res.max, attainers.len())?,
            }
        }
        Command::Extremal { variant_or_n, n } => {
            let sys = ctx.system()?;
            let (variant, n) = match n {
                Some(n) => (Some(variant_or_n.parse::<Variant>()?), n),
                None => (None, variant_or_n.parse::<usize>().context("expected N or VARIANT N")?),
            };
            let rows = match variant {
                Some(v) => {
                    let string = extremal_string(sys, v, n)?;
                    let count = optimal_count(&string.eval());
                    let attains_max = count == max_count(sys, n);
                    vec![optrep::extremal::ExtremalRow { variant: v, n, string, count, attains_max }]
                }
                None => extremal_rows(sys, n)?,
            };
            match ctx.output {
                Output::Json => {
                    let rows: Vec<_> = rows
                        .iter()
                        .map(|r| json!({"variant": r.variant.name(), "n": r.n, "string": r.string.to_string(),
                                        "count": r.count.to_string(), "attains_max": r.attains_max}))
                        .collect();
                    writeln!(out, "{}", serde_json::Value::Array(rows))?;
                }
                Output::Text | Output::Tsv => {
                    writeln!(out, "variant\tn\tstring\tcount\tattains_max")?;
                    for r in &rows {
                        writeln!(out, "{}\t{}\t{}\t{}\t{}", r.variant, r.n, r.string, r.count, r.attains_max)?;
                    }
                }
            }
            return Ok(rows.iter().all(|r| r.attains_max));
        }
        Command::Attainers { n } => {
            let sys = ctx.system()?;
            let res = max_optimal_bounded(sys, n, ctx.gap_bound)?;
            match ctx.output {
                Output::Text => {
                    for s in &res.attainers {
                        writeln!(out, "{s}\t{}", s.eval())?;
                    }
                }
                Output::Json => {
                    let strings: Vec<_> = res
                        .attainers
                        .iter()
                        .map(|s| json!({"string": s.to_string(), "x": s.eval().to_string()}))
                        .collect();
                    writeln!(
                        out,
                        "{}",
                        json!({"system": sys.name(), "n": n, "max": res.max.to_string(), "gap_bound": ctx.gap_bound,
                               "bounded_search": true, "attainers": strings})
                    )?;
                }
                Output::Tsv => {
                    writeln!(out, "string\tx\tcount")?;
                    for s in &res.attainers {
                        writeln!(out, "{s}\t{}\t{}", s.eval(), res.max)?;
                    }
                }
            }
            if ctx.output != Output::Json {
                // the census is only as complete as the bounded search behind it
                eprintln!("{} attainers of {} (bounded search, gap bound {})", res.attainers.len(), res.max, ctx.gap_bound);
            }
        }
        Command::Frequency { n_max } => {
            let sys = ctx.system()?;
            if n_max == 0 {
                bail!("N_MAX must be at least 1");
            }
            let rows = frequency_table(sys, n_max);
            match ctx.output {
                Output::Json => {
                    let rows: Vec<_> = rows
                        .iter()
                        .map(|r| json!({"n": r.n, "strings": r.strings.to_string(), "nonzero": r.nonzero.to_string(),
                                        "ratio": r.ratio.to_string(), "ratio_approx": r.ratio.to_f64()}))
                        .collect();
                    writeln!(out, "{}", serde_json::Value::Array(rows))?;
                }
                Output::Text | Output::Tsv => {
                    writeln!(out, "n\tS\tR\tratio\tratio_approx")?;
                    for r in &rows {
                        let approx = r.ratio.to_f64().unwrap_or(f64::NAN);
                        writeln!(out, "{}\t{}\t{}\t{}\t{approx:.6}", r.n, r.strings, r.nonzero, r.ratio)?;
                    }
                }
            }
        }
        Command::Verify { suite } => return verify::run(&suite, ctx.output == Output::Json, out),
        Command::Graph { kind } => {
            let sys = ctx.system()?;
            let text = match kind {
                GraphArg::Full => build_full_graph(sys)?.dump(),
                GraphArg::Condensed => condense(&build_full_graph(sys)?)?.dump(),
                GraphArg::Optimal => optimal_graph(sys).dump(),
            };
            write!(out, "{text}")?;
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct CountRecord {
    x: String,
    system: &'static str,
    naf: String,
    weight: usize,
    optimal_count: String,
}

impl CountRecord {
    fn new(x: &RingElem) -> Self {
        let naf = wnaf(x);
        CountRecord {
            x: x.to_string(),
            system: x.ring().name(),
            weight: naf.hamming_weight(),
            naf: naf.to_string(),
            optimal_count: optimal_count(x).to_string(),
        }
    }
}
