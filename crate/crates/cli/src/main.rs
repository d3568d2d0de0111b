//! `knotloc`: command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 computation rejected,
//! 3 inconclusive because of the search bound while `--exact` was given.

mod commands;
mod workspace;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "knotloc", version, about = "Exact Laurent-polynomial isogeny, Seifert invariants and localized filtration verdicts")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Exponent bound for the isogeny search.
    #[arg(long, global = true, default_value_t = knotloc_core::isogeny::DEFAULT_BOUND, value_parser = clap::value_parser!(u32).range(1..))]
    pub bound: u32,
    /// Decimal digits for real-valued output.
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..=2000))]
    pub precision: u64,
    /// Exit with code 3 when a verdict depends on the search bound.
    #[arg(long, global = true)]
    pub exact: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Extra knots and operators: a library file, a knot file or an operator file.
    #[arg(long = "lib", global = true)]
    pub libs: Vec<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
    Csv,
    Dot,
    Svg,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Laurent polynomial arithmetic and isogeny.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Seifert-matrix invariants.
    #[command(subcommand)]
    Knot(KnotCmd),
    /// Cyclic Alexander modules.
    #[command(subcommand)]
    Module(ModuleCmd),
    /// Doubling operators and composition trees.
    #[command(subcommand)]
    Op(OpCmd),
    /// Filtration verdicts.
    #[command(subcommand)]
    Obstruct(ObstructCmd),
}

#[derive(Subcommand, Debug)]
pub enum PolyCmd {
    /// Parse and print in canonical form.
    Parse {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Factor over the rationals.
    Factor {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    Gcd {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    Resultant {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Strong coprimality or isogeny of two polynomials.
    Isogeny {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Tuple strong coprimality of two sequences written `p:..;p:..`.
    Tuple {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum KnotCmd {
    /// Alexander polynomial.
    Alex { knot: String },
    /// Signature profile, or the signature at `--at a/b` (angle `a/b · π`).
    Signature {
        knot: String,
        #[arg(long)]
        at: Option<String>,
    },
    /// Average of the signature function.
    Rho0 { knot: String },
    Arf { knot: String },
    /// Connected sum, as a knot file.
    Sum { a: String, b: String },
    /// Mirror image, as a knot file.
    Mirror { knot: String },
}

#[derive(Subcommand, Debug)]
pub enum ModuleCmd {
    /// Proper submodules of `Q[t,t^-1]/<order>`.
    Submodules {
        #[arg(allow_hyphen_values = true)]
        order: String,
        /// Read submodules in the `δ δ*` form for this `δ`.
        #[arg(long)]
        delta: Option<String>,
    },
    /// Isotropy of the proper submodules of a knot's module under the Blanchfield pairing.
    Isotropy { knot: String },
    /// Order of the class of `x` in `Q[t,t^-1]/<order>`.
    Order {
        #[arg(allow_hyphen_values = true)]
        order: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Localize `Q[t,t^-1]/<order>` at `p`.
    Localize {
        #[arg(allow_hyphen_values = true)]
        order: String,
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(long, default_value = "classical")]
        mode: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum OpCmd {
    /// Build and validate an operator, printing its file form.
    Make {
        #[arg(long)]
        name: String,
        /// Pattern knot (name or file).
        #[arg(long)]
        pattern: String,
        /// Order of the infection curve.
        #[arg(long)]
        alpha: String,
        /// Certificate file: {"delta": .., "signatures": [..]}.
        #[arg(long)]
        certificate: Option<String>,
    },
    /// Robustness of an operator (name or file).
    CheckRobust { op: String },
    /// Compose operators, outermost first, on a base knot.
    Compose {
        #[arg(required = true)]
        ops: Vec<String>,
        #[arg(long)]
        base: String,
    },
    /// Order sequences of an expression file.
    Orders { expr: String },
}

#[derive(Subcommand, Debug)]
pub enum ObstructCmd {
    /// Vanishing at the target sequence.
    Vanish {
        expr: String,
        #[arg(long)]
        target: String,
    },
    /// Survival at the target sequence.
    Survive {
        expr: String,
        #[arg(long)]
        target: String,
        /// Provenance of the assertion that rho0 of the base is outside the
        /// span of the innermost operator's signatures.
        #[arg(long)]
        assert_rho0: Option<String>,
    },
    /// Family independence certificate from a families file.
    Family {
        families: String,
        #[arg(long)]
        assert_rho0: Option<String>,
    },
    /// Disjoint-image report for two operators.
    Inject { a: String, b: String },
    /// All compositions of a given depth over a family of operators.
    Tree {
        #[arg(long)]
        depth: usize,
        /// Comma-separated operator names or files.
        #[arg(long)]
        family: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
