//! `wdlab`: batch front end over JSON documents.
//!
//! Exit codes: 0 success, 1 validation failure, 2 malformed input.

mod commands;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "wdlab", version, about = "Deformation diagnostics for Weil–Deligne points")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Clone, Debug, Default)]
pub struct Io {
    /// Input JSON document.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Clone, Debug)]
pub struct PointSpec {
    /// Group such as GL3, SL2, calG2, GL2xGL1.
    #[arg(long)]
    pub group: String,
    #[arg(long, default_value_t = 2)]
    pub p: u64,
    #[arg(long = "fK", default_value_t = 1)]
    pub fk: u32,
    /// Jordan type of N on the realization, e.g. `2,1`.
    #[arg(long)]
    pub nilpotent: Option<String>,
}

#[derive(Subcommand)]
enum Verb {
    /// Check the point constraints; on success also report smoothness.
    Validate(Io),
    /// `h0, h1, h2`, the dual count and the framed tangent dimension.
    Cohomology(Io),
    /// Both very-smoothness tests.
    VerySmooth(Io),
    /// Construct a very smooth point with the given nilpotent.
    SmoothPoint {
        #[command(flatten)]
        spec: PointSpec,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Push a point along `det`, `tensor`, `incl:K` or `sl2:GROUP`.
    Pushforward {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        morphism: String,
        /// Jordan type in the target for `sl2:GROUP`.
        #[arg(long)]
        nilpotent: Option<String>,
    },
    /// Bridge between (φ,N)-modules and Weil–Deligne points.
    Fontaine {
        #[command(subcommand)]
        op: FontaineOp,
    },
    /// Dimension counts.
    Dims {
        #[command(subcommand)]
        op: DimsOp,
    },
    /// Cohomology over smooth points and sampled fibers, as CSV.
    Sweep(sweep::SweepArgs),
}

#[derive(Subcommand)]
pub enum FontaineOp {
    ToWd(Io),
    ToPhimod {
        #[command(flatten)]
        io: Io,
        #[arg(long = "fL")]
        fl: u32,
    },
    Roundtrip {
        #[command(flatten)]
        io: Io,
        #[arg(long = "fL")]
        fl: u32,
    },
}

#[derive(Subcommand)]
pub enum DimsOp {
    Local {
        #[arg(long)]
        group: String,
        #[arg(long = "fK", default_value_t = 1)]
        fk: u32,
        /// Diagonal weights of one Hodge cocharacter; repeat per embedding.
        #[arg(long, allow_hyphen_values = true)]
        hodge: Vec<String>,
        #[arg(long)]
        fixed_det: bool,
        #[arg(long)]
        l_equals_p: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    Global(Io),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.verb {
        Verb::Validate(io) => commands::validate(&io),
        Verb::Cohomology(io) => commands::cohomology(&io),
        Verb::VerySmooth(io) => commands::very_smooth(&io),
        Verb::SmoothPoint { spec, output } => commands::smooth_point(&spec, output.as_deref()),
        Verb::Pushforward { io, morphism, nilpotent } => {
            commands::pushforward(&io, &morphism, nilpotent.as_deref())
        }
        Verb::Fontaine { op } => commands::fontaine(&op),
        Verb::Dims { op } => commands::dims(&op),
        Verb::Sweep(args) => sweep::run(&args),
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
