//! Command-line front end: argument parsing, dispatch and output encoding.
//!
//! [`run`] never prints or exits; it returns the exit code together with the
//! text destined for stdout and stderr, so the binary and the tests share one
//! code path.

mod commands;

use clap::{Args, Parser, Subcommand};

pub use commands::Failure;

/// Exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const INTERNAL: i32 = 3;
}

/// Environment variable that makes `--json` the default when set to `1`.
pub const JSON_ENV: &str = "HOMSUM_JSON";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "homsum",
    version,
    about = "Exact integral (co)homology of connected sums and the bundles over them"
)]
pub struct Cli {
    /// Emit JSON instead of tables (default when HOMSUM_JSON=1).
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Integral homology of a space expression or of a chain complex file.
    Homology(HomologyArgs),
    /// Integral cohomology of a space expression (universal coefficients).
    Cohomology {
        #[arg(value_name = "EXPR")]
        expr: String,
    },
    /// Homology of the pullback of a bundle over C to B # C.
    Pullback(PullbackArgs),
    /// Cohomology of the circle bundle over (S³×S³)^{#r} # C with x³ = kV.
    Gysin(GysinArgs),
    /// Connected-sum description #^{2r}(S³×S⁴) # L_k of that circle bundle.
    Wall(WallArgs),
    /// Check H_q(M) ≅ H_q(X') ⊕ H_q(L) for 0 < q < m from graded-group files.
    VerifySplit(VerifySplitArgs),
    /// Check Poincaré duality of a homology profile in dimension n.
    CheckDuality(CheckDualityArgs),
    /// Smith normal form of an integer matrix file.
    Snf {
        #[arg(value_name = "FILE")]
        file: String,
    },
}

#[derive(Args, Debug)]
pub struct HomologyArgs {
    #[arg(
        value_name = "EXPR",
        required_unless_present = "chain",
        conflicts_with = "chain"
    )]
    pub expr: Option<String>,
    /// Chain complex JSON file instead of an expression.
    #[arg(long, value_name = "FILE")]
    pub chain: Option<String>,
}

#[derive(Args, Debug)]
pub struct PullbackArgs {
    /// Closed manifold B (the summand the bundle is trivial over).
    #[arg(long = "B", value_name = "EXPR")]
    pub b: String,
    /// Closed manifold C carrying the bundle.
    #[arg(long = "C", value_name = "EXPR")]
    pub c: String,
    /// Fiber F.
    #[arg(long = "F", value_name = "EXPR")]
    pub f: String,
    /// Graded-group JSON file with H_*(L); the trivial bundle C × F if absent.
    #[arg(long = "L", value_name = "FILE")]
    pub l: Option<String>,
}

#[derive(Args, Debug)]
pub struct GysinArgs {
    #[arg(
        long,
        value_name = "R",
        required_unless_present = "ring",
        requires = "k"
    )]
    pub r: Option<u32>,
    #[arg(long, value_name = "K", allow_negative_numbers = true, requires = "r")]
    pub k: Option<i64>,
    /// Arbitrary ring data: {"cohomology": …, "dim": n, "euler": {"maps": …}}.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["r", "k"])]
    pub ring: Option<String>,
}

#[derive(Args, Debug)]
pub struct WallArgs {
    #[arg(long, value_name = "R")]
    pub r: u32,
    #[arg(long, value_name = "K", allow_negative_numbers = true)]
    pub k: i64,
}

#[derive(Args, Debug)]
pub struct VerifySplitArgs {
    #[arg(long = "M", value_name = "FILE")]
    pub m_file: String,
    #[arg(long = "Xp", value_name = "FILE")]
    pub xp_file: String,
    #[arg(long = "L", value_name = "FILE")]
    pub l_file: String,
    #[arg(long = "m", value_name = "M")]
    pub dim: usize,
}

#[derive(Args, Debug)]
pub struct CheckDualityArgs {
    #[arg(long = "H", value_name = "FILE")]
    pub h_file: String,
    #[arg(long, value_name = "N")]
    pub n: usize,
}

/// Runs with `HOMSUM_JSON` taken from the process environment.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let env_json =
        std::env::var(JSON_ENV).is_ok_and(|v| v == "1" || v.eq_ignore_ascii_case("true"));
    run_with(args, env_json)
}

/// `args` includes the program name, as in `std::env::args`.
pub fn run_with<I, T>(args: I, json_default: bool) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandResult {
                    code: exit::USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                // --help and --version
                CommandResult {
                    code: exit::OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let json = cli.json || json_default;
    match commands::dispatch(&cli.command, json) {
        Ok(out) => CommandResult {
            code: if out.verified {
                exit::OK
            } else {
                exit::VERIFICATION_FAILED
            },
            stdout: out.text,
            stderr: String::new(),
        },
        Err(f) => CommandResult {
            code: f.code(),
            stdout: String::new(),
            stderr: format!("error: {f}\n"),
        },
    }
}
