//! Command-line surface.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use slant_lab::remark::RemarkVariant;

#[derive(Debug, Parser)]
#[command(name = "slant-lab", version, about = "Exact slant Toeplitz operator laboratory")]
pub struct Cli {
    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true, env = "SLANT_LAB_JOBS")]
    pub jobs: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for the randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    Monomial,
    Orthonormal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply an operator word to a polynomial.
    Apply {
        /// e.g. "W, T(zbar^2), W*, B(z + zbar)"; factors act right to left.
        #[arg(long)]
        word: String,
        #[arg(long)]
        poly: String,
    },
    /// Truncated matrix of an operator word.
    Matrix {
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 8)]
        rows: usize,
        #[arg(long, default_value_t = 8)]
        cols: usize,
        #[arg(long, value_enum, default_value_t = Basis::Monomial)]
        basis: Basis,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Scan the columns of [B_f, B_g] = B_f B_g - B_g B_f.
    Commutator {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        /// Largest input degree scanned (default from the symbol degrees).
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Verdict for f = pbar + phi, g = pbar + psi.
    Theorem {
        #[arg(long)]
        pbar: String,
        #[arg(long)]
        phi: String,
        #[arg(long)]
        psi: String,
        #[arg(long)]
        kmax: Option<usize>,
        /// Exit 1 on an inconclusive scan.
        #[arg(long)]
        strict: bool,
    },
    /// Verdict for f = a zbar^N + phi, g = b zbar^N + psi.
    Lemma {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        phi: String,
        #[arg(long)]
        psi: String,
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long)]
        strict: bool,
    },
    /// Verification campaigns.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Debug, Subcommand)]
pub enum Suite {
    /// W*W on monomials, W* norm bounds, T_phi W = W T_phi(z^2), adjointness.
    Lemmas {
        #[arg(long, default_value_t = 200)]
        nmax: usize,
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
    /// Printed coefficient identities against the operator engine.
    Identities {
        #[arg(long, default_value_t = 50)]
        instances: usize,
        #[arg(long, default_value_t = 12)]
        smax: usize,
        #[arg(long, default_value_t = 12)]
        kmax: usize,
        /// Include every discrepancy in the report.
        #[arg(long)]
        details: bool,
    },
    /// The zbar^2 / zbar^3 counterexamples.
    Remark {
        #[arg(long, default_value = "zbar2")]
        variant: RemarkVariant,
        #[arg(long, default_value = "z")]
        phi: String,
        #[arg(long, default_value = "z")]
        psi: String,
    },
    /// Determinants of the 2x2 systems.
    Systems {
        #[arg(long, default_value_t = 100)]
        tmax: i64,
        #[arg(long, default_value_t = 6)]
        nmax: i64,
    },
    /// Factorization and ranks of the Hilbert-type matrix.
    Rank97 {
        #[arg(long, default_value_t = 8)]
        nmax: usize,
    },
}
