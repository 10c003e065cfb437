use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::render::Format;

/// Chebyshev sequences of integer matrices: evaluation, period and growth
/// certificates, classification and syzygy traces.
#[derive(Parser, Debug, Clone)]
#[command(name = "chebdyn", version)]
pub struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Print f_K(X).
    Eval {
        #[command(flatten)]
        source: Source,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// Look for f_{p-1} = 0 and f_p = I.
    Period {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Look for a linear-growth certificate f_q = f_{q-2} + Z.
    Growth {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Finite, tame or wild, with the supporting certificate.
    Classify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Trace the syzygies of a simple module.
    Resolve {
        #[command(flatten)]
        source: Source,
        /// 1-based index of the simple module.
        #[arg(long)]
        simple: usize,
        #[arg(long)]
        steps: usize,
    },
    /// Print the labeled adjacency matrix of a diagram.
    Diagram {
        #[command(flatten)]
        source: Source,
    },
}

/// Exactly one of `--family` (with `--n` unless the family fixes it) or
/// `--matrix`.
#[derive(Args, Debug, Clone, Default)]
pub struct Source {
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Matrix file, or `-` for stdin.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
}
