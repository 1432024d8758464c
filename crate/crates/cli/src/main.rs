use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use dichotomy_core::bounds::theorem3_report;
use dichotomy_core::functions::{builtin_functions, builtin_ids, resolve};
use dichotomy_core::harness::{
    run_grm_sweep, run_square_sweep, summarize, write_report, Budget, GrmSweepConfig, NoiseRegime,
    SquareSweepConfig, TrialRecord,
};
use dichotomy_core::{NoiseKind, ProblemSpec};
use dichotomy_service::SessionStore;

#[derive(Parser)]
#[command(
    name = "dichotomy",
    version,
    about = "Optimization with a comparison oracle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print iteration budgets and accuracy guarantees for a problem.
    Bounds(BoundsArgs),
    /// Run noisy golden-ratio line searches along each function's midline.
    RunGrm(GrmArgs),
    /// Run square searches and compare the result to the true minimum.
    RunSquare(SquareArgs),
    /// List the built-in test functions.
    Functions,
    /// Serve the session API.
    Serve(ServeArgs),
}

#[derive(Args)]
struct BoundsArgs {
    /// Side length of the search square.
    #[arg(long)]
    r: f64,
    /// Bound on the variation of f over the square.
    #[arg(long)]
    m: f64,
    /// Lipschitz constant of the gradient.
    #[arg(long)]
    l: f64,
    /// Strong convexity coefficient.
    #[arg(long)]
    mu: f64,
    /// Comparison noise level.
    #[arg(long)]
    delta: f64,
    /// Target accuracy in function value.
    #[arg(long)]
    epsilon: f64,
    /// Exit with status 1 when epsilon is not reachable at this noise level.
    #[arg(long)]
    strict: bool,
}

/// `auto` or a positive integer.
#[derive(Clone, Copy, Debug)]
struct BudgetArg(Budget);

impl FromStr for BudgetArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(BudgetArg(Budget::Auto));
        }
        match s.parse::<u32>() {
            Ok(n) if n > 0 => Ok(BudgetArg(Budget::Fixed(n))),
            _ => Err(format!(
                "expected \"auto\" or a positive integer, got {s:?}"
            )),
        }
    }
}

#[derive(Args)]
struct GrmArgs {
    /// Function ids, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "quad")]
    func: Vec<String>,
    /// zero, uniform or adversarial.
    #[arg(long, default_value = "zero")]
    noise: NoiseKind,
    /// Noise levels, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "0")]
    delta: Vec<f64>,
    /// Line-search iterations.
    #[arg(long, default_value = "auto")]
    n: BudgetArg,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// CSV output path; a summary is written next to it.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SquareArgs {
    #[arg(long, default_value = "quad")]
    func: String,
    #[arg(long)]
    epsilon: f64,
    #[arg(long, default_value = "zero")]
    noise: NoiseKind,
    #[arg(long, default_value_t = 0.0)]
    delta: f64,
    /// Iterations of each line search.
    #[arg(long, default_value = "auto")]
    n_inner: BudgetArg,
    /// Square-halving iterations.
    #[arg(long, default_value = "auto")]
    k: BudgetArg,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Lattice resolution for the reference minimum.
    #[arg(long, default_value_t = 1000)]
    grid: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ServeArgs {
    #[arg(long, default_value = "127.0.0.1")]
    host: String,
    /// 0 picks a free port.
    #[arg(long, default_value_t = 8080)]
    port: u16,
    #[arg(long, default_value = "sessions")]
    state_dir: PathBuf,
}

/// Bad input discovered after argument parsing; exits with status 2.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

/// Rejects configuration errors before any work starts so they are reported
/// as usage errors.
fn check_function(id: &str) -> Result<()> {
    if resolve(id, 0).is_none() {
        return Err(usage(format!(
            "unknown function {id:?}; available: {}",
            builtin_ids().join(", ")
        )));
    }
    Ok(())
}

fn regime(kind: NoiseKind, delta: f64) -> Result<NoiseRegime> {
    if !(delta.is_finite() && delta >= 0.0) {
        return Err(usage(format!(
            "--delta must be a non-negative number, got {delta}"
        )));
    }
    if kind == NoiseKind::Zero && delta != 0.0 {
        return Err(usage("--noise zero requires --delta 0"));
    }
    if kind != NoiseKind::Zero && delta == 0.0 {
        return Err(usage(format!(
            "--noise {} requires a positive --delta",
            kind.as_str()
        )));
    }
    Ok(NoiseRegime::new(kind, delta))
}

fn cmd_bounds(a: &BoundsArgs) -> Result<ExitCode> {
    let spec = ProblemSpec::new(a.r, a.m, a.l, Some(a.mu), a.delta, a.epsilon)
        .map_err(|e| usage(e.to_string()))?;
    let report = theorem3_report(&spec).map_err(|e| usage(e.to_string()))?;
    println!("c = {:.12e}", report.c);
    println!("n0 = {}", report.n0);
    println!("grm_value_error = {:.12e}", report.grm_value_error);
    println!("delta_arg = {:.12e}", report.delta_arg);
    println!("delta_inner = {:.12e}", report.delta_inner);
    println!("k_outer = {}", report.k_outer);
    println!("total_comparisons = {}", report.total_comparisons);
    println!("epsilon_feasible = {}", report.epsilon_feasible);
    if !report.epsilon_feasible {
        eprintln!(
            "warning: epsilon {} is below what comparisons with noise {} can guarantee",
            a.epsilon, a.delta
        );
        if a.strict {
            return Ok(ExitCode::from(1));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn report(records: &[TrialRecord], out: &Path) -> Result<ExitCode> {
    let summary_path =
        write_report(records, out).with_context(|| format!("writing {}", out.display()))?;
    println!("function,noise,delta,trials,violations,warnings,max_ratio");
    for s in summarize(records) {
        println!(
            "{},{},{:e},{},{},{},{:.4}",
            s.function_id, s.noise_kind, s.delta, s.trials, s.violations, s.warnings, s.max_ratio
        );
    }
    println!(
        "wrote {} rows to {} (summary: {})",
        records.len(),
        out.display(),
        summary_path.display()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_run_grm(a: &GrmArgs) -> Result<ExitCode> {
    for id in &a.func {
        check_function(id)?;
    }
    let noise = a
        .delta
        .iter()
        .map(|&d| regime(a.noise, d))
        .collect::<Result<Vec<_>>>()?;
    if matches!(a.n.0, Budget::Auto) && noise.iter().any(|r| r.delta == 0.0) {
        return Err(usage(
            "--n auto needs a positive --delta; pass an explicit count for noiseless runs",
        ));
    }
    let records = run_grm_sweep(&GrmSweepConfig {
        function_ids: a.func.clone(),
        noise,
        n: a.n.0,
        trials: a.trials,
        seed: a.seed,
    })?;
    report(&records, &a.out)
}

fn cmd_run_square(a: &SquareArgs) -> Result<ExitCode> {
    check_function(&a.func)?;
    if !(a.epsilon.is_finite() && a.epsilon > 0.0) {
        return Err(usage(format!(
            "--epsilon must be positive, got {}",
            a.epsilon
        )));
    }
    if a.grid < 2 {
        return Err(usage("--grid must be at least 2"));
    }
    let records = run_square_sweep(&SquareSweepConfig {
        function_id: a.func.clone(),
        epsilon: a.epsilon,
        noise: regime(a.noise, a.delta)?,
        n_inner: a.n_inner.0,
        k_outer: a.k.0,
        trials: a.trials,
        seed: a.seed,
        grid_n: a.grid,
    })?;
    for w in records.iter().filter_map(|r| r.warning.as_deref()).take(1) {
        eprintln!("warning: {w}");
    }
    report(&records, &a.out)
}

fn cmd_functions() -> Result<ExitCode> {
    println!("id,m,l,mu,domain");
    for f in builtin_functions() {
        let mu = f.mu.map_or("-".to_string(), |m| m.to_string());
        let d = f.domain;
        println!(
            "{},{},{},{},[{}..{}]x[{}..{}]",
            f.id,
            f.m,
            f.l,
            mu,
            d.min_x(),
            d.max_x(),
            d.min_y(),
            d.max_y()
        );
    }
    println!("random-quad,(per seed)");
    println!("random-quad-x,(per seed)");
    Ok(ExitCode::SUCCESS)
}

fn cmd_serve(a: &ServeArgs) -> Result<ExitCode> {
    let store = SessionStore::open(&a.state_dir)
        .with_context(|| format!("cannot use state directory {}", a.state_dir.display()))?;
    let addr: SocketAddr = format!("{}:{}", a.host, a.port)
        .parse()
        .map_err(|e| usage(format!("bad --host/--port: {e}")))?;
    let runtime = tokio::runtime::Runtime::new()?;
    runtime.block_on(async move {
        let listener = tokio::net::TcpListener::bind(addr)
            .await
            .with_context(|| format!("cannot bind {addr}"))?;
        let bound = listener.local_addr()?;
        println!("listening on http://{bound}");
        println!("port {}", bound.port());
        use std::io::Write;
        std::io::stdout().flush()?;
        dichotomy_service::serve_with_shutdown(listener, store, async {
            let _ = tokio::signal::ctrl_c().await;
            log::info!("shutting down");
        })
        .await?;
        Ok::<_, anyhow::Error>(())
    })?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Bounds(a) => cmd_bounds(a),
        Command::RunGrm(a) => cmd_run_grm(a),
        Command::RunSquare(a) => cmd_run_square(a),
        Command::Functions => cmd_functions(),
        Command::Serve(a) => cmd_serve(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
