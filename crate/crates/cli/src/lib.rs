//! Command-line front end for `anyonwalk`.
//!
//! ```text
//! anyonwalk su2k dist --k 2 --t 3 --engine dense
//! anyonwalk su2k sweep --t 10 --k 2..30 --emit-distances
//! anyonwalk dsn dist --N 5 --t 4
//! anyonwalk kauffman --n 2 --word "1 1" --closure markov --exact
//! anyonwalk abelian variance --phi 0:3.14159:9 --t 50,100 --analytic
//! anyonwalk baseline classical --t 6 --exact
//! ```

use std::path::{Path, PathBuf};
use std::time::Instant;

use anyonwalk::fusion_braid::{braid_generator, enumerate_fusion_basis};
use anyonwalk::io::{generator_triplets_csv, BracketReport, EnvelopeMeta, Format, Payload, ResultEnvelope};
use anyonwalk::kauffman_tl::{bracket, BracketValue};
use anyonwalk::quantum_double::double_walk_distribution;
use anyonwalk::walk_abelian::{default_spin, variance_surface};
use anyonwalk::walk_nonabelian::{baseline_classical, baseline_quantum, distribution, level_sweep};
use anyonwalk::{build_su2k, BraidWord, Closure, Coin, CoinState, Engine, WalkGeometry};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

pub const THREADS_ENV: &str = "ANYONWALK_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Engine(#[from] anyonwalk::Error),
}

impl CliError {
    /// 1 for usage errors, 2 for domain preconditions, 3 for numeric failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Engine(e) if e.is_numeric() => 3,
            CliError::Engine(_) => 2,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Parser)]
#[command(name = "anyonwalk", version, about = "Quantum walks of Abelian and non-Abelian anyons")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "csv", value_parser = ["csv", "json"])]
    pub out: String,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads (falls back to ANYONWALK_THREADS).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Four-state die walk of Abelian anyons.
    #[command(subcommand)]
    Abelian(AbelianCmd),
    /// Single-coin SU(2)_k walk.
    #[command(subcommand)]
    Su2k(Su2kCmd),
    /// Single-coin D(S_N) walk with exact weights.
    #[command(subcommand)]
    Dsn(DsnCmd),
    /// Kauffman bracket of a braid closure.
    Kauffman(KauffmanArgs),
    /// Walks without anyonic weights.
    #[command(subcommand)]
    Baseline(BaselineCmd),
}

#[derive(Debug, Subcommand)]
pub enum AbelianCmd {
    /// Position variance over a (t, φ) grid.
    Variance {
        /// Phase: a value, a comma list, or `lo:hi:count`.
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
        /// Steps: a value, a comma list, or `lo..hi`.
        #[arg(long)]
        t: String,
        /// Add the leading-order analytic variance.
        #[arg(long)]
        analytic: bool,
    },
}

#[derive(Debug, Args)]
pub struct WalkArgs {
    /// Coin: H (Hadamard) or U.
    #[arg(long, default_value = "H")]
    pub coin: String,
    /// Initial coin basis state.
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
    pub initial: u8,
}

#[derive(Debug, Subcommand)]
pub enum Su2kCmd {
    /// Position distribution after `t` steps.
    Dist {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        t: usize,
        /// Anyon count; defaults to 2t + 2.
        #[arg(long)]
        n: Option<usize>,
        /// dense or pathsum; chosen from `t` when omitted.
        #[arg(long)]
        engine: Option<String>,
        #[command(flatten)]
        walk: WalkArgs,
        /// Write each braid generator as CSV triplets into this directory.
        #[arg(long, value_name = "DIR")]
        dump_generators: Option<PathBuf>,
    },
    /// Distances to the plain quantum and classical walks over a range of levels.
    Sweep {
        #[arg(long)]
        t: usize,
        /// Levels: `lo..hi` (inclusive) or a comma list.
        #[arg(long)]
        k: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        engine: Option<String>,
        #[command(flatten)]
        walk: WalkArgs,
        /// Emit `k,d_q,d_c` rows.
        #[arg(long)]
        emit_distances: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum DsnCmd {
    /// Exact position distribution after `t` steps.
    Dist {
        #[arg(long = "N")]
        order: i64,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Debug, Args)]
pub struct KauffmanArgs {
    /// Strand count.
    #[arg(long)]
    pub n: usize,
    /// Signed generator indices, e.g. "1 -2 1".
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    /// plat or markov.
    #[arg(long)]
    pub closure: String,
    /// Evaluate numerically at the SU(2)_k value of A.
    #[arg(long, conflicts_with = "exact")]
    pub k: Option<i64>,
    /// Laurent polynomial in A (the default).
    #[arg(long)]
    pub exact: bool,
}

#[derive(Debug, Subcommand)]
pub enum BaselineCmd {
    /// Two-state coined walk.
    Quantum {
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        walk: WalkArgs,
    },
    /// Unbiased classical random walk.
    Classical {
        #[arg(long)]
        t: usize,
        /// Add exact fractions.
        #[arg(long)]
        exact: bool,
    },
}

/// A validated run.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub task: Task,
    pub format: Format,
    #[serde(skip)]
    pub output: Option<PathBuf>,
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum Task {
    AbelianVariance { phi: Vec<f64>, t: Vec<usize>, analytic: bool },
    Su2kDist { k: i64, t: usize, n: usize, engine: Engine, coin: String, initial: u8, dump_generators: Option<PathBuf> },
    Su2kSweep { levels: Vec<i64>, t: usize, n: usize, engine: Engine, coin: String, initial: u8 },
    DsnDist { order: i64, t: usize },
    Kauffman { n: usize, word: String, closure: Closure, k: Option<i64> },
    BaselineQuantum { t: usize, coin: String, initial: u8 },
    BaselineClassical { t: usize, exact: bool },
}

impl Task {
    fn engine_name(&self) -> Option<String> {
        match self {
            Task::Su2kDist { engine, .. } | Task::Su2kSweep { engine, .. } => Some(engine.to_string()),
            Task::DsnDist { .. } => Some("markov-trace".into()),
            Task::Kauffman { k, .. } => Some(if k.is_some() { "numeric" } else { "exact" }.into()),
            Task::AbelianVariance { .. } => Some("position-space".into()),
            Task::BaselineQuantum { .. } | Task::BaselineClassical { .. } => None,
        }
    }
}

fn parse_floats(s: &str) -> Result<Vec<f64>, CliError> {
    let bad = || usage(format!("cannot read `{s}` as a number, a comma list, or lo:hi:count"));
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() == 3 {
        let lo: f64 = parts[0].trim().parse().map_err(|_| bad())?;
        let hi: f64 = parts[1].trim().parse().map_err(|_| bad())?;
        let count: usize = parts[2].trim().parse().map_err(|_| bad())?;
        return match count {
            0 => Err(bad()),
            1 => Ok(vec![lo]),
            _ => Ok((0..count).map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64).collect()),
        };
    }
    s.split(',').map(|x| x.trim().parse::<f64>().map_err(|_| bad())).collect()
}

fn parse_ints<T>(s: &str) -> Result<Vec<T>, CliError>
where
    T: std::str::FromStr + Copy + TryFrom<i64> + Into<i64>,
{
    let bad = || usage(format!("cannot read `{s}` as an integer, a comma list, or lo..hi"));
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: T = lo.trim().parse().map_err(|_| bad())?;
        let hi: T = hi.trim().parse().map_err(|_| bad())?;
        let (lo, hi) = (lo.into(), hi.into());
        if lo > hi {
            return Err(bad());
        }
        return (lo..=hi).map(|x| T::try_from(x).map_err(|_| bad())).collect();
    }
    s.split(',').map(|x| x.trim().parse::<T>().map_err(|_| bad())).collect()
}

fn parse_engine(name: Option<&str>, t: usize) -> Result<Engine, CliError> {
    match name {
        None => Ok(Engine::default_for(t)),
        Some(s) => s.parse().map_err(|e: anyonwalk::Error| usage(e.to_string())),
    }
}

fn check_coin(name: &str) -> Result<String, CliError> {
    name.parse::<Coin>().map_err(|e| usage(e.to_string()))?;
    Ok(name.to_uppercase())
}

fn strand_count(n: Option<usize>, t: usize) -> Result<usize, CliError> {
    let explicit = n.is_some();
    let n = n.unwrap_or(2 * t + 2);
    if n % 2 == 1 {
        return Err(usage(format!("--n must be even, got {n}")));
    }
    if n < 2 * t + 2 {
        return Err(usage(format!("--n {n} is too small for {t} steps; use at least {}", 2 * t + 2)));
    }
    if explicit && n % 4 != 2 {
        log::warn!("n = {n} is not twice an odd number; the anyon pairs around the start are not symmetric");
    }
    Ok(n)
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let format: Format = cli.out.parse().map_err(|e: anyonwalk::Error| usage(e.to_string()))?;
        let threads = match cli.threads {
            Some(t) => Some(t),
            None => match std::env::var(THREADS_ENV) {
                Ok(v) => Some(v.trim().parse().map_err(|_| usage(format!("{THREADS_ENV}=`{v}` is not a count")))?),
                Err(_) => None,
            },
        };
        if threads == Some(0) {
            return Err(usage("thread count must be at least 1"));
        }
        let task = match cli.command {
            Command::Abelian(AbelianCmd::Variance { phi, t, analytic }) => {
                let phi = parse_floats(&phi)?;
                let t = parse_ints::<u32>(&t)?.into_iter().map(|x| x as usize).collect();
                Task::AbelianVariance { phi, t, analytic }
            }
            Command::Su2k(Su2kCmd::Dist { k, t, n, engine, walk, dump_generators }) => Task::Su2kDist {
                k,
                t,
                n: strand_count(n, t)?,
                engine: parse_engine(engine.as_deref(), t)?,
                coin: check_coin(&walk.coin)?,
                initial: walk.initial,
                dump_generators,
            },
            Command::Su2k(Su2kCmd::Sweep { t, k, n, engine, walk, emit_distances }) => {
                if !emit_distances {
                    return Err(usage("su2k sweep only emits distance rows; pass --emit-distances"));
                }
                Task::Su2kSweep {
                    levels: parse_ints::<i64>(&k)?,
                    t,
                    n: strand_count(n, t)?,
                    engine: parse_engine(engine.as_deref(), t)?,
                    coin: check_coin(&walk.coin)?,
                    initial: walk.initial,
                }
            }
            Command::Dsn(DsnCmd::Dist { order, t }) => Task::DsnDist { order, t },
            Command::Kauffman(a) => Task::Kauffman {
                n: a.n,
                word: a.word,
                closure: a.closure.parse().map_err(|e: anyonwalk::Error| usage(e.to_string()))?,
                k: a.k,
            },
            Command::Baseline(BaselineCmd::Quantum { t, walk }) => {
                Task::BaselineQuantum { t, coin: check_coin(&walk.coin)?, initial: walk.initial }
            }
            Command::Baseline(BaselineCmd::Classical { t, exact }) => Task::BaselineClassical { t, exact },
        };
        Ok(RunConfig { task, format, output: cli.output, threads })
    }
}

fn coin_of(name: &str) -> Coin {
    name.parse().expect("validated coin")
}

fn geometry(n: usize) -> Result<WalkGeometry, CliError> {
    Ok(WalkGeometry::centered(n)?)
}

fn dump_generators(dir: &Path, k: i64, n: usize) -> Result<(), CliError> {
    let space = enumerate_fusion_basis(&build_su2k(k)?, n)?;
    std::fs::create_dir_all(dir).map_err(|e| anyonwalk::Error::Io(format!("{}: {e}", dir.display())))?;
    for i in 1..n {
        let g = braid_generator(&space, i)?;
        let path = dir.join(format!("b{i}.csv"));
        std::fs::write(&path, generator_triplets_csv(&g.matrix)?)
            .map_err(|e| anyonwalk::Error::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn run_task(task: &Task) -> Result<Payload, CliError> {
    Ok(match task {
        Task::AbelianVariance { phi, t, analytic } => {
            Payload::Surface(variance_surface(phi, t, &default_spin(), *analytic)?)
        }
        Task::Su2kDist { k, t, n, engine, coin, initial, dump_generators: dump } => {
            if let Some(dir) = dump {
                dump_generators(dir, *k, *n)?;
            }
            let model = build_su2k(*k)?;
            let d = distribution(&model, &geometry(*n)?, *t, &coin_of(coin), &CoinState::basis(*initial), *engine)?;
            Payload::Distribution(d)
        }
        Task::Su2kSweep { levels, t, n, engine, coin, initial } => {
            let rows = level_sweep(levels, &geometry(*n)?, *t, &coin_of(coin), &CoinState::basis(*initial), *engine)?;
            Payload::Sweep(rows)
        }
        Task::DsnDist { order, t } => Payload::Distribution(double_walk_distribution(*order, *t)?),
        Task::Kauffman { n, word, closure, k } => {
            let w = BraidWord::parse(*n, word)?;
            let at = match k {
                Some(k) => Some(build_su2k(*k)?.a().value()),
                None => None,
            };
            let (exact, value) = match bracket(&w, *closure, at)? {
                BracketValue::Exact(p) => (Some(p.to_string()), None),
                BracketValue::Numeric(z) => (None, Some([z.re, z.im])),
            };
            Payload::Polynomial(BracketReport {
                strands: *n,
                word: w.to_string(),
                closure: *closure,
                level: *k,
                exact,
                value,
            })
        }
        Task::BaselineQuantum { t, coin, initial } => {
            Payload::Distribution(baseline_quantum(*t, &coin_of(coin), &CoinState::basis(*initial)))
        }
        Task::BaselineClassical { t, exact } => {
            let mut d = baseline_classical(*t);
            if !exact {
                d.exact = None;
            }
            Payload::Distribution(d)
        }
    })
}

/// Runs a validated configuration.
pub fn dispatch(config: &RunConfig) -> Result<ResultEnvelope, CliError> {
    let start = Instant::now();
    let payload = match config.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| usage(format!("cannot start {n} worker threads: {e}")))?
            .install(|| run_task(&config.task))?,
        None => run_task(&config.task)?,
    };
    let echo = serde_json::to_value(config).map_err(|e| anyonwalk::Error::Io(e.to_string()))?;
    let meta = EnvelopeMeta::new(echo, config.task.engine_name(), start.elapsed().as_secs_f64());
    Ok(ResultEnvelope { payload, meta })
}

/// Writes the envelope to the configured sink.
pub fn emit(config: &RunConfig, env: &ResultEnvelope) -> Result<(), CliError> {
    match &config.output {
        Some(path) => {
            let mut file = std::fs::File::create(path)
                .map_err(|e| anyonwalk::Error::Io(format!("{}: {e}", path.display())))?;
            anyonwalk::io::write_envelope(env, config.format, &mut file)?;
        }
        None => anyonwalk::io::write_envelope(env, config.format, &mut std::io::stdout().lock())?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        assert_eq!(parse_floats("0:1:3").unwrap(), vec![0.0, 0.5, 1.0]);
        assert_eq!(parse_floats("0.25,1").unwrap(), vec![0.25, 1.0]);
        assert!(parse_floats("a").is_err());
        assert_eq!(parse_ints::<i64>("2..5").unwrap(), vec![2, 3, 4, 5]);
        assert_eq!(parse_ints::<u32>("7,9").unwrap(), vec![7, 9]);
        assert!(parse_ints::<i64>("5..2").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(usage("x").exit_code(), 1);
        assert_eq!(CliError::from(anyonwalk::Error::InvalidLevel(1)).exit_code(), 2);
        assert_eq!(CliError::from(anyonwalk::Error::Numeric("x".into())).exit_code(), 3);
    }

    #[test]
    fn odd_strand_count_is_a_usage_error() {
        assert!(strand_count(Some(9), 3).is_err());
        assert!(strand_count(Some(6), 3).is_err());
        assert_eq!(strand_count(None, 3).unwrap(), 8);
    }
}
