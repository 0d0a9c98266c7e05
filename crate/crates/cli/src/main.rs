//! `syt`: counts standard Young tableaux of skew and strip shapes by several
//! independent methods and reports whether they agree.
//!
//! Exit status is 0 when every check agrees, 2 on any disagreement and 1 on
//! usage or domain errors.

mod commands;
mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use syt_core::Budget;

use report::Format;

#[derive(Debug, Parser)]
#[command(name = "syt", version, about = "Standard Young tableaux of skew and strip shapes")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,
    /// Include per-method wall-clock times (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timings: bool,
    /// Live-state limit of the down-set dynamic program.
    #[arg(long, global = true, env = "SYT_BUDGET_STATES")]
    pub budget_states: Option<usize>,
    /// Term limit of intermediate polynomials.
    #[arg(long, global = true, env = "SYT_BUDGET_TERMS")]
    pub budget_terms: Option<usize>,
}

impl Global {
    pub fn budget(&self) -> Budget {
        let mut b = Budget::default();
        if let Some(s) = self.budget_states {
            b.max_states = s;
        }
        if let Some(t) = self.budget_terms {
            b.max_terms = t;
        }
        b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Dp,
    Backtrack,
    Aitken,
    Auto,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Numbers,
    Strips,
    Thm5,
    Schur,
    Elkies,
    Spectral,
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a number sequence.
    Seq {
        #[arg(long)]
        name: String,
        #[arg(long)]
        max: usize,
    },
    /// Count tableaux of a skew shape.
    Count {
        #[arg(long, value_delimiter = ',', conflicts_with = "shape", required_unless_present = "shape")]
        lambda: Option<Vec<u32>>,
        #[arg(long, value_delimiter = ',', requires = "lambda")]
        mu: Option<Vec<u32>>,
        /// Shape in text form, e.g. `lambda=3,2;mu=1` or `strip:m=4,n=2,head=0,0;tail=0,0`.
        #[arg(long)]
        shape: Option<String>,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
    },
    /// Count tableaux of an m-strip.
    Strip {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        /// Head partition, e.g. `1,0`.
        #[arg(long, default_value = "")]
        head: String,
        #[arg(long, default_value = "")]
        tail: String,
        #[arg(long)]
        all_methods: bool,
    },
    /// Count permutations with a given descent set through their ribbon.
    Ribbon {
        #[arg(long)]
        size: u32,
        #[arg(long, default_value = "")]
        descents: String,
        #[arg(long)]
        all_methods: bool,
    },
    /// Exact volume of the order polytope of a shape.
    Volume {
        #[arg(long)]
        shape: String,
    },
    /// Power series coefficients, or truncated spectral series identities.
    Series {
        #[arg(long)]
        name: String,
        /// Series order, or the number of terms for spectral identities.
        #[arg(long)]
        order: usize,
        /// Index of the spectral identity.
        #[arg(long)]
        n: Option<u32>,
    },
    /// Eigen-residuals and orthonormality of a strip transfer operator.
    Spectral {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 4)]
        modes: usize,
        #[arg(long, default_value_t = 32)]
        grid: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value_t = 8)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Skip shapes with more cells than this in brute-force comparisons.
        #[arg(long, default_value_t = 40)]
        max_cells: usize,
        /// Also write the reports as JSON to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(output) => {
            print!("{}", output.text);
            if output.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
