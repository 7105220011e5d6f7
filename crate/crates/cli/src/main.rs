//! `gext`: command-line driver for extension computations.
//!
//! Every run prints one report (JSON by default) and exits with
//! 0 = success, 1 = validation failure, 2 = budget exhausted, 3 = usage error.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{Report, Status};

#[derive(Parser, Debug)]
#[command(
    name = "gext",
    version,
    about = "Hochschild products, co-flag algebras and their classifying objects"
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Base field: Q or Fp:<prime> (also F5, F_5). Needed for catalog entries.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Search budget (defaults to GEXT_DEFAULT_BUDGET or 1e8).
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Where automorphisms come from: brute, catalog or file:PATH.
    #[arg(long, global = true, default_value = "brute")]
    pub aut_mode: String,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json)]
    pub out: OutFormat,
    /// Recorded in the report.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutFormat {
    Json,
    Text,
}

/// An entity file, or `catalog:NAME` (e.g. `catalog:matrix:2`).
#[derive(Args, Debug, Clone)]
pub struct Input {
    #[arg(long)]
    pub input: String,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Check the axioms of an entity file, and optionally of a datum or a Hochschild system.
    Validate {
        #[arg(long)]
        input: Option<String>,
        /// Co-flag datum (algebra input) or Poisson datum (Poisson input).
        #[arg(long)]
        datum: Option<PathBuf>,
        /// Hochschild system file.
        #[arg(long)]
        system: Option<PathBuf>,
    },
    /// Algebra maps to the base field.
    Characters(Input),
    /// Automorphisms of the algebra, or the automorphism group of a co-flag extension.
    Aut {
        #[command(flatten)]
        src: Input,
        #[arg(long)]
        datum: Option<PathBuf>,
    },
    /// GH²(A, k) by characters and cohomology blocks.
    Gh2(Input),
    /// HOC(A, k): codimension-one extensions up to isomorphism.
    Hoc(Input),
    /// Naive GH²(A, V) enumeration over a small prime field.
    #[command(name = "gh2-brute")]
    Gh2Brute {
        #[command(flatten)]
        src: Input,
        #[arg(long, default_value_t = 1)]
        v_dim: usize,
    },
    /// Hochschild product from a system file or a co-flag datum.
    Product {
        #[command(flatten)]
        src: Input,
        #[arg(long)]
        system: Option<PathBuf>,
        #[arg(long)]
        datum: Option<PathBuf>,
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Hochschild system of a surjection with a linear section.
    Extract {
        #[command(flatten)]
        maps: Maps,
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Whether a surjection with a given section splits as a Hochschild product.
    #[command(name = "split-check")]
    SplitCheck {
        #[command(flatten)]
        maps: Maps,
    },
    /// Peel the algebra into iterated Hochschild products.
    Tower(Input),
    /// Co-flag algebras of a given dimension up to isomorphism.
    Classify {
        #[arg(long)]
        dim: usize,
    },
    /// Dual coalgebra of an algebra.
    Dualize {
        #[command(flatten)]
        src: Input,
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Convolution (dual) algebra of a coalgebra.
    Convolve {
        #[command(flatten)]
        src: Input,
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// A full chain of subcoalgebras starting from a group-like, if one exists.
    Supersolvable(Input),
    #[command(name = "poisson-validate")]
    PoissonValidate {
        #[arg(long)]
        input: String,
        #[arg(long)]
        datum: Option<PathBuf>,
    },
    #[command(name = "poisson-extend")]
    PoissonExtend {
        #[command(flatten)]
        src: Input,
        #[arg(long)]
        datum: PathBuf,
        #[arg(long)]
        save: Option<PathBuf>,
    },
    #[command(name = "poisson-classify")]
    PoissonClassify(Input),
    #[command(name = "poisson-aut")]
    PoissonAut {
        #[command(flatten)]
        src: Input,
        #[arg(long)]
        datum: PathBuf,
    },
    /// Export a named entity.
    Catalog {
        name: String,
        #[arg(long)]
        param: Option<usize>,
        #[arg(long)]
        save: Option<PathBuf>,
    },
}

/// `π: E → A` and a section `s: A → E`, both as JSON matrices.
#[derive(Args, Debug, Clone)]
pub struct Maps {
    /// The total algebra E.
    #[arg(long)]
    pub input: String,
    /// The quotient algebra A.
    #[arg(long)]
    pub base: String,
    #[arg(long)]
    pub projection: PathBuf,
    #[arg(long)]
    pub section: PathBuf,
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let (report, format) = match Cli::try_parse_from(&args) {
        Ok(cli) => {
            let format = cli.common.out;
            (commands::run(&cli), format)
        }
        Err(e)
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let mut r = Report::new(args.get(1).map(String::as_str).unwrap_or(""));
            r.fail(Status::Usage, e.render().to_string().trim().to_string());
            let text = args.iter().any(|a| a == "text") && args.iter().any(|a| a == "--out");
            (
                r,
                if text {
                    OutFormat::Text
                } else {
                    OutFormat::Json
                },
            )
        }
    };
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    if let Some(e) = &report.error {
        eprintln!("error: {e}");
    }
    print!("{}", report.render(format == OutFormat::Text));
    ExitCode::from(report.status.code() as u8)
}
