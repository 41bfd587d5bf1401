use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Parser)]
#[command(name = "hirzebruch", version, about = "Exact chi_y genera of D5, E6, E7 and E8 elliptic fibrations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand Q(U, y) for a catalog family or a spec file.
    Q {
        /// D5, E6, E7, E8 or a path to a spec JSON file.
        target: String,
        #[arg(long, default_value_t = 6)]
        wmax: u32,
        #[arg(long, default_value_t = 7)]
        qmax: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Print the unexpanded closed form instead.
        #[arg(long)]
        closed: bool,
    },
    /// Print P_0 .. P_nmax as polynomials in U.
    Ptable {
        family: String,
        #[arg(long, default_value_t = 6)]
        nmax: u32,
        /// Compare against the tabulated product formulas.
        #[arg(long)]
        check: bool,
    },
    /// Evaluate chi_q over a base.
    Chi {
        /// D5, E6, E7, E8 or a path to a spec JSON file.
        target: String,
        /// `pd:<d>:<n>`: P^d with L = O(n).
        #[arg(long, conflicts_with = "base_file", required_unless_present = "base_file")]
        base: Option<String>,
        /// Intersection table in the base JSON format.
        #[arg(long)]
        base_file: Option<PathBuf>,
        /// A single y-degree, or `all`.
        #[arg(long, default_value = "all")]
        q: String,
        /// Also print the integrand class with symbolic Chern classes.
        #[arg(long)]
        class: bool,
        /// Recompute through the P-sum route and require integrality.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the identity suites.
    Verify {
        /// `all` or a family name.
        #[arg(long, default_value = "all")]
        family: String,
        #[arg(long, default_value_t = 6)]
        wmax: u32,
        #[arg(long, default_value_t = 7)]
        qmax: u32,
        /// Check this spec file as a model of `--family` instead of the catalog entry.
        #[arg(long)]
        spec: Option<PathBuf>,
    },
}
