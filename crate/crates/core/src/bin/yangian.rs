use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use yangian_core::current::graded_dim;
use yangian_core::omega::{AlgebraSpec, Associativity};
use yangian_core::suite::{run_suite, OmegaSource, Suite, SuiteConfig};
use yangian_core::{Error, Scalar};

#[derive(Parser)]
#[command(
    name = "yangian",
    version,
    about = "Exact verification suites for Yangian-type centralizer algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect algebra specification files.
    Omega {
        #[command(subcommand)]
        action: OmegaAction,
    },
    /// Run a verification suite and write a JSON report.
    Run(RunArgs),
    /// Graded dimension of the current algebra `gl_d(A_L)` in grade `n`.
    Dims {
        /// Builtin name or specification file.
        #[arg(long, default_value = "C")]
        omega: String,
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        grade: usize,
    },
}

#[derive(Subcommand)]
enum OmegaAction {
    /// Validate a file and report associativity and unit.
    Check { file: PathBuf },
}

#[derive(clap::Args)]
struct RunArgs {
    /// projection, pbw, splitting, double, symbols, degeneration, current or all.
    suite: String,
    /// Builtin name or specification file; defaults to each suite's own list.
    #[arg(long)]
    omega: Option<String>,
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    max_len: Option<usize>,
    #[arg(long)]
    max_deg: Option<usize>,
    /// Comma-separated rationals, e.g. `0,1,-1,5/2`.
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    n_cap: Option<usize>,
    #[arg(long)]
    fuzz_count: Option<usize>,
    /// Report path; defaults to `$YANGIAN_REPORT_DIR/<suite>.json` or `./<suite>.json`.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match dispatch(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command) -> Result<bool, Error> {
    match command {
        Command::Omega {
            action: OmegaAction::Check { file },
        } => omega_check(&file),
        Command::Run(args) => run(args),
        Command::Dims { omega, d, grade } => {
            let alg = OmegaSource::parse(&omega).load()?;
            let dim = graded_dim(alg.dim(), d, grade)
                .ok_or_else(|| Error::InvalidArgument("dimension exceeds 128 bits".into()))?;
            println!("{dim}");
            Ok(true)
        }
    }
}

fn omega_check(file: &Path) -> Result<bool, Error> {
    let alg = AlgebraSpec::load(file)?;
    println!("name: {}", alg.name());
    println!("dimension: {}", alg.dim());
    println!("basis: {}", alg.labels().join(" "));
    let assoc = alg.check_associativity();
    match &assoc {
        Associativity::Pass => println!("associative: yes"),
        Associativity::Witness(i, j, k) => {
            println!(
                "associative: no ({} {} {})",
                alg.label(*i),
                alg.label(*j),
                alg.label(*k)
            )
        }
    }
    println!("unital: {}", if alg.detect_unit().is_some() { "yes" } else { "no" });
    println!("commutative: {}", if alg.is_commutative() { "yes" } else { "no" });
    Ok(assoc.passed())
}

fn run(args: RunArgs) -> Result<bool, Error> {
    let suite: Suite = args.suite.parse()?;
    let mut cfg = SuiteConfig::new(suite);
    cfg.omega = args.omega.as_deref().map(OmegaSource::parse);
    if let Some(v) = args.n_min {
        cfg.n_min = v;
    }
    if let Some(v) = args.n_max {
        cfg.n_max = v;
    }
    if let Some(v) = args.d {
        cfg.d = v;
    }
    if let Some(v) = args.max_len {
        cfg.max_len = v;
    }
    if let Some(v) = args.max_deg {
        cfg.max_deg = v;
    }
    if let Some(list) = &args.s {
        cfg.s_values = list
            .split(',')
            .map(|x| x.trim().parse::<Scalar>())
            .collect::<Result<_, _>>()?;
    }
    if let Some(v) = args.seed {
        cfg.seed = v;
    }
    if let Some(v) = args.n_cap {
        cfg.n_cap = v;
    }
    if let Some(v) = args.fuzz_count {
        cfg.fuzz_count = v;
    }
    let out = args.out.unwrap_or_else(|| {
        let dir = std::env::var_os("YANGIAN_REPORT_DIR")
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from("."));
        dir.join(format!("{suite}.json"))
    });
    let report = run_suite(&cfg)?;
    report.write(&out)?;
    print!("{}", report.summary_text());
    println!("report: {}", out.display());
    Ok(report.passed())
}
