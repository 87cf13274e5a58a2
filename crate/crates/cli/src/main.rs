//! `autk2`: command-line front end for the autk2 library.
//!
//! Exit codes: 0 success, 1 a lab check failed, 2 usage error, 3 parse
//! error, 4 input is not an automorphism, 5 other domain or I/O error,
//! 6 `--verify` found a mismatch.

mod commands;
mod error;
mod field;
mod lab;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{run_algebra, Ctx, Output};
use error::{code, CliError};
use field::FieldSel;

#[derive(Parser, Debug)]
#[command(
    name = "autk2",
    version,
    about = "Exact computations with polynomial automorphisms of the plane"
)]
struct Cli {
    /// Scalars: q, fp:<p>, q-of-z or fp:<p>-of-z (p prime, p < 50).
    #[arg(long, global = true, default_value = "q")]
    field: FieldSel,

    /// Output format: text, or one JSON record per line.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for the randomized lab suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Recompose results and compare with the input before printing.
    #[arg(long, global = true)]
    verify: bool,

    /// Worker threads for parallel scans.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
enum Command {
    #[command(flatten)]
    Algebra(AlgebraCmd),
    /// Run a verification suite over the rationals.
    #[command(subcommand)]
    Lab(LabCmd),
}

#[derive(Subcommand, Debug)]
pub enum AlgebraCmd {
    /// Compose automorphisms left to right as written: A∘B∘…
    Compose {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        autos: Vec<String>,
    },
    /// Inverse automorphism.
    Invert {
        #[arg(allow_hyphen_values = true)]
        auto: String,
    },
    /// Jacobian determinant.
    Jacobian {
        #[arg(allow_hyphen_values = true)]
        auto: String,
    },
    /// Subgroup membership flags.
    Classify {
        #[arg(allow_hyphen_values = true)]
        auto: String,
    },
    /// A named generator: S, S', T, h, u_<n>, gamma_<r>, phi_<r>_<n>.
    Generator { name: String },
    /// Factor into an alternating affine/elementary word.
    Factor {
        #[arg(allow_hyphen_values = true)]
        auto: String,
    },
    /// Reduced word of a word file (`-` reads standard input).
    Nf { word: String },
    /// Conjugator moving a word into a corner type.
    Corner {
        word: String,
        #[arg(long, value_enum, default_value_t = CornerSide::Affine)]
        side: CornerSide,
    },
    /// Conjugate of a Borel element lying outside the Borel subgroup.
    Witness {
        #[arg(allow_hyphen_values = true)]
        auto: String,
        #[arg(long, value_enum, default_value_t = WitnessContext::Saut0)]
        context: WitnessContext,
        /// Generator of the ideal, for the congruence context.
        #[arg(long)]
        r: Option<String>,
    },
    /// Free-product normal form of a map tangent to the identity at 0.
    FreeNf {
        #[arg(allow_hyphen_values = true)]
        auto: String,
    },
    /// Image in GL1(2, K[t]).
    ToMatrix {
        #[arg(allow_hyphen_values = true)]
        auto: String,
    },
    /// Automorphism with the given matrix.
    FromMatrix {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Elementary factors of a matrix in GL1(2, K[t]).
    MatFactor {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Free-product normal form of a matrix in GL1(2, K[t]).
    MatNf {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CornerSide {
    Affine,
    Elementary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WitnessContext {
    Saut0,
    Borel,
    Congruence,
}

#[derive(Subcommand, Debug)]
pub enum LabCmd {
    /// Shears push vectors onto their line; reduced words move vectors.
    Pingpong {
        #[arg(long, default_value_t = 100)]
        pairs: usize,
        #[arg(long, default_value_t = 50)]
        words: usize,
    },
    /// Relations among S, S' and T, and the triangular powers of S'.
    Gamma {
        #[arg(long, default_value_t = 10)]
        words: usize,
    },
    /// Nilpotency index of E ⋉ F_p[E] and the power-sum identity.
    Pgroup {
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        r: Option<u32>,
        /// Largest group order to accept; overrides AUTK2_WORK_BOUND.
        #[arg(long)]
        bound: Option<u128>,
    },
    /// Exhaustive scan of the p-adic digit lemma.
    Digits {
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long = "N", default_value_t = 6)]
        n: u32,
    },
    /// Logarithm scaling of unipotent elements.
    Logscale {
        #[arg(long, default_value_t = 2)]
        random: usize,
    },
}

fn print(out: &Output, format: Format) {
    let stdout = std::io::stdout();
    let mut w = stdout.lock();
    match format {
        Format::Text => {
            for l in &out.text {
                let _ = writeln!(w, "{l}");
            }
            for m in &out.warnings {
                eprintln!("{m}");
            }
        }
        Format::Structured => {
            for r in &out.records {
                let _ = writeln!(w, "{r}");
            }
        }
    }
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::Algebra(cmd) => {
            let ctx = Ctx {
                field: cli.field,
                verify: cli.verify,
            };
            let out = with_field!(cli.field, run_algebra(cmd, &ctx))?;
            print(&out, cli.format);
            Ok(code::OK)
        }
        Command::Lab(cmd) => {
            let (out, pass) = lab::run_lab(cmd, cli.seed)?;
            print(&out, cli.format);
            Ok(if pass { code::OK } else { code::LAB_FAILED })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs == 0 {
        eprintln!("error: --jobs must be at least 1");
        return ExitCode::from(code::USAGE);
    }
    let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global();
    match run(&cli) {
        Ok(c) => ExitCode::from(c),
        Err(e) => {
            if cli.format == Format::Structured {
                println!(
                    "{}",
                    serde_json::json!({ "error": e.kind(), "message": e.to_string(), "code": e.code() })
                );
            }
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
