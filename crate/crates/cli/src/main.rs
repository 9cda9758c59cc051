//! `hopflab`: load Hopf algebra files, run computations and emit reports.
//!
//! Exit status is 0 when the computation succeeds and its claim holds, 1 when
//! it succeeds but the claim is false (a series fails, a file does not verify,
//! a search is undecided), and 2 on any error.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "hopflab", version, about = "Exact computations with semisimple Hopf algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Render reports as plain text instead of JSON.
    #[arg(long, global = true)]
    pub text: bool,
    /// Write the report to this file instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    /// Load input files without checking the Hopf axioms.
    #[arg(long, global = true)]
    pub skip_verify: bool,
}

#[derive(Args, Debug)]
pub struct Input {
    /// Hopf algebra file.
    pub file: PathBuf,
}

#[derive(Args, Debug)]
pub struct CoidealInput {
    /// Generators separated by ';': basis labels or bracketed coordinate
    /// lists such as "[1,0,0,1/2]".
    #[arg(long)]
    pub gens: String,
    pub file: PathBuf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Convention {
    RightToLeft,
    LeftToRight,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check every Hopf axiom.
    Verify(Input),
    /// Write the dual Hopf algebra.
    Dual(Input),
    /// Write the Drinfeld double.
    Double(Input),
    /// Idempotent integral Λ and dual integral λ.
    Integrals(Input),
    /// Irreducible characters with degrees and idempotents.
    Characters(Input),
    /// Left coideal subalgebra generated by the given elements.
    Coideal(CoidealInput),
    /// Restriction/induction multiplicities for the generated coideal subalgebra.
    Reciprocity(CoidealInput),
    /// Induce every irreducible character of the generated coideal subalgebra.
    Induce(CoidealInput),
    /// Check a chain of coideal subalgebras against the solvable-series conditions.
    SolvableCheck {
        /// JSON file {"chain": [...]} with entries "k", "H" or generator lists.
        #[arg(long)]
        chain: PathBuf,
        file: PathBuf,
    },
    /// Search for a solvable series.
    SolvableFind {
        /// Extra candidate generators, ';'-separated; repeatable.
        #[arg(long)]
        hint: Vec<String>,
        file: PathBuf,
    },
    /// Ascending central series, or the nilpotency criterion on a given chain.
    NilpotentCheck {
        #[arg(long)]
        chain: Option<PathBuf>,
        file: PathBuf,
    },
    /// Rebuild the non-commuting coideal integrals in the dual of kS3.
    NoncommutingIntegrals {
        #[arg(long, value_enum, default_value = "both")]
        convention: Convention,
    },
    /// Bundled example algebras.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum CorpusAction {
    /// Write every bundled algebra into a directory.
    Export { dir: PathBuf },
    /// List the bundled algebras with dimension and content hash.
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => {
            if let Err(e) = commands::emit(&cli, &outcome.body) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if outcome.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
