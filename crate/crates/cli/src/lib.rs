//! Command-line front end: argument definitions, subcommands and reports.

use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use superstein::algfile::{parse_algebra, AnyAlgebra};
use superstein::cyclic::DEFAULT_MAX_CHAIN;
use superstein::homology::{Source, DEFAULT_MAX_WEDGE};
use superstein::linear::{FieldSpec, PrimeField, Rationals};
use superstein::{Builtin, Error, MatrixShape, Result};

pub mod commands;
pub mod corpus;
pub mod report;

pub use report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "superstein", version, about = "Certify Steinberg and matrix Lie superalgebra computations")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Emit::Text)]
    pub emit: Emit,
    /// Largest Λ³ basis built for homology.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_WEDGE)]
    pub max_wedge: usize,
    /// Largest tensor power built for the cyclic complex.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CHAIN)]
    pub max_chain: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct AlgebraArg {
    /// A file in the algebra format or `builtin:NAME`.
    #[arg(long)]
    pub algebra: String,
    /// Field for builtins: `Q` or `Fp:<p>`.
    #[arg(long)]
    pub field: Option<FieldSpec>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the superalgebra axioms.
    Validate {
        file: String,
        #[arg(long)]
        field: Option<FieldSpec>,
    },
    /// Cyclic homology in degree `n`.
    Hc {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long, default_value_t = 1)]
        degree: usize,
    },
    /// The module <<A,A>> and a basis of HC_1.
    Pairing {
        #[command(flatten)]
        alg: AlgebraArg,
    },
    /// Compare [gl, gl] with the supertrace description of sl.
    Sl {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long)]
        shape: MatrixShape,
    },
    /// Build the Steinberg model.
    St {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long)]
        shape: MatrixShape,
        #[arg(long)]
        verify: bool,
    },
    /// Kernel of st → sl against HC_1.
    Kernel {
        #[command(flatten)]
        alg: AlgebraArg,
        #[arg(long)]
        shape: MatrixShape,
    },
    /// H_1 and H_2 with expected values.
    Homology {
        #[arg(long)]
        target: Source,
        #[command(flatten)]
        alg: AlgebraArg,
        /// Defaults to 2|2 for stsharp.
        #[arg(long)]
        shape: Option<MatrixShape>,
    },
    /// The 2-cocycle on st_2|2 and its central extension.
    Cocycle22 {
        #[command(flatten)]
        alg: AlgebraArg,
    },
    /// Full certification matrix over the builtin algebras.
    Corpus,
}

pub fn load_algebra(spec: &str, field: Option<FieldSpec>) -> Result<AnyAlgebra> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        let b: Builtin = name.parse()?;
        return match field.unwrap_or(FieldSpec::Rational) {
            FieldSpec::Rational => Ok(AnyAlgebra::Rational(b.build(Rationals)?)),
            FieldSpec::Prime(p) => Ok(AnyAlgebra::Prime(b.build(PrimeField::new(p)?)?)),
        };
    }
    let text = std::fs::read_to_string(spec).map_err(|e| Error::Input(format!("cannot read {spec}: {e}")))?;
    let a = parse_algebra(&text)?;
    if let Some(f) = field {
        if f != a.field_spec() {
            return Err(Error::FieldMismatch(a.field_spec().to_string(), f.to_string()));
        }
    }
    Ok(a)
}

/// Runs a parsed command. Failed constructions become a report with a failing verdict;
/// every other error is an input problem.
pub fn run(cli: &Cli, echo: &str) -> Result<Report> {
    let start = Instant::now();
    let outcome = commands::dispatch(cli, echo);
    let mut report = match outcome {
        Ok(r) => r,
        Err(Error::Verification(msg)) => {
            let mut r = Report::new(echo);
            r.check("construction", false, || msg);
            r
        }
        Err(e) => return Err(e),
    };
    report.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

pub fn render(cli: &Cli, report: &Report) -> String {
    match cli.emit {
        Emit::Text => report.to_text(),
        Emit::Json => report.to_json() + "\n",
    }
}

/// Shape used by `homology` when none is given.
pub fn default_shape(target: Source) -> Option<MatrixShape> {
    (target == Source::StSharp).then(|| MatrixShape::new(2, 2))
}
