use chernloc_cli::{commands, RunConfig};
use clap::{Parser, Subcommand};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "chernloc",
    about = "Exact equivariant localization calculus on Grassmannians",
    version
)]
struct Cli {
    /// Worker threads for parallel summation.
    #[arg(long, global = true, env = "CHERNLOC_WORKERS", default_value_t = 1)]
    workers: usize,

    /// Cache directory for the inductively computed class templates.
    #[arg(long, global = true, env = "CHERNLOC_CACHE_DIR")]
    cache_dir: Option<std::path::PathBuf>,

    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,

    /// Allow computations gated for size (level 4 and beyond).
    #[arg(long, global = true)]
    allow_heavy: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integrate a class over a Grassmannian by fixed-point summation.
    Integrate(commands::IntegrateArgs),
    /// Print a Schur polynomial.
    Schur(commands::SchurArgs),
    /// Expand a polynomial in Schur bases (one or two alphabets).
    Expand(commands::ExpandArgs),
    /// Closed-form push-forward of Schur classes, with optional oracle check.
    Gysin(commands::GysinArgs),
    /// Integrate through the iterated residue at infinity.
    Residue(commands::ResidueArgs),
    /// Local classes of the determinant variety at level n.
    Omega1(commands::Omega1Args),
    /// Cone classes from a projectivization.
    Cone(commands::ConeArgs),
    /// Rewrite a class in a spanning-tree basis and report signs.
    Positivity(commands::PositivityArgs),
    /// Run named verification suites.
    Verify(commands::VerifyArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = RunConfig {
        workers: cli.workers.max(1),
        cache_dir: cli.cache_dir.clone(),
        json: cli.json,
        allow_heavy: cli.allow_heavy,
    };
    if let Err(e) = config.install_thread_pool() {
        eprintln!("error: {e}");
        return ExitCode::from(chernloc_cli::EXIT_INPUT);
    }
    let result = match cli.command {
        Command::Integrate(args) => commands::cmd_integrate(&args, &config),
        Command::Schur(args) => commands::cmd_schur(&args, &config),
        Command::Expand(args) => commands::cmd_expand(&args, &config),
        Command::Gysin(args) => commands::cmd_gysin(&args, &config),
        Command::Residue(args) => commands::cmd_residue(&args, &config),
        Command::Omega1(args) => commands::cmd_omega1(&args, &config),
        Command::Cone(args) => commands::cmd_cone(&args, &config),
        Command::Positivity(args) => commands::cmd_positivity(&args, &config),
        Command::Verify(args) => commands::cmd_verify(&args, &config),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
