//! Argument parsing and command dispatch.
//!
//! Exit codes: 0 on success; 1 for usage, I/O, parse, validation and
//! enumeration-budget errors; 2 when an internal consistency check fails or
//! the brute-force oracle disagrees with the fast algorithms.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use evolalg_core::oracle::{self, EnumerationBudget};
use evolalg_core::{ideals, AssociatedGraph, Element, EvolutionAlgebra, FieldDescriptor};
use serde::Serialize;

use crate::document::{self, DocumentError};
use crate::dot::export_dot;
use crate::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "evolalg", version, about = "Analyze evolution algebras given by structure matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FieldKind {
    Rational,
    Prime,
}

#[derive(Args, Debug)]
struct Common {
    /// Algebra document; `-` reads standard input.
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    /// Override the field declared in the document.
    #[arg(long, value_enum)]
    field: Option<FieldKind>,
    /// Modulus for `--field prime`; on its own it implies a prime field.
    #[arg(long, value_name = "P")]
    p: Option<u64>,
    /// Machine-readable JSON instead of a text table.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full report: ideals, graph invariants, decomposition, simplicity.
    Analyze(Common),
    /// Canonical decomposition and optimal fragmentation.
    Decompose(Common),
    /// Simplicity and irreducibility verdicts.
    Simple(Common),
    /// Annihilator and absorption radical.
    Radical(Common),
    /// The ideal generated by one element.
    Ideal {
        #[command(flatten)]
        common: Common,
        /// Coordinates of the generator, e.g. "1,0,-1/2".
        #[arg(long, value_name = "COORDS", allow_hyphen_values = true)]
        vector: String,
    },
    /// Associated graph invariants, optionally exported as DOT.
    Graph {
        #[command(flatten)]
        common: Common,
        /// Write the graph in DOT syntax to FILE (`-` for standard output).
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
    },
    /// Quotient by the ideal spanned by the vectors in FILE.
    Quotient {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "FILE")]
        ideal_basis: PathBuf,
    },
    /// Cross-check against exhaustive enumeration over a small prime field.
    Oracle {
        #[command(flatten)]
        common: Common,
        /// Largest admissible p^n.
        #[arg(long, default_value_t = 4096)]
        budget: u64,
    },
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Exit code for a library error surfacing from a command.
pub fn exit_code(e: &evolalg_core::Error) -> i32 {
    match e {
        evolalg_core::Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

impl From<evolalg_core::Error> for Failure {
    fn from(e: evolalg_core::Error) -> Self {
        if exit_code(&e) == EXIT_INTERNAL {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("standard input: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn field_override(c: &Common) -> Result<Option<FieldDescriptor>, Failure> {
    match (c.field, c.p) {
        (None, None) => Ok(None),
        (Some(FieldKind::Rational), None) => Ok(Some(FieldDescriptor::Rational)),
        (Some(FieldKind::Rational), Some(_)) => {
            Err(Failure::Input("--p cannot be combined with --field rational".into()))
        }
        (Some(FieldKind::Prime), None) => Err(Failure::Input("--field prime needs --p".into())),
        (_, Some(p)) => Ok(Some(FieldDescriptor::prime(p)?)),
    }
}

fn load(c: &Common) -> Result<EvolutionAlgebra, Failure> {
    let text = read_text(&c.input)?;
    let field = field_override(c)?;
    document::parse_document(&text, field).map_err(|e| match e {
        DocumentError::Parse { .. } => Failure::Input(format!("{}: {e}", c.input.display())),
        DocumentError::Validation(m) => Failure::Input(format!("{}: {m}", c.input.display())),
    })
}

fn render<T: Serialize>(json: bool, value: &T, text: impl FnOnce(&T) -> String) -> Result<String, Failure> {
    if json {
        let mut s = serde_json::to_string_pretty(value)
            .map_err(|e| Failure::Internal(format!("serializing report: {e}")))?;
        s.push('\n');
        Ok(s)
    } else {
        Ok(text(value))
    }
}

/// Output text plus whether an oracle mismatch was found.
fn execute(cmd: Command) -> Result<(String, bool), Failure> {
    match cmd {
        Command::Analyze(c) => {
            let a = load(&c)?;
            let r = report::analyze(&a)?;
            Ok((render(c.json, &r, report::ReportDocument::to_text)?, false))
        }
        Command::Decompose(c) => {
            let a = load(&c)?;
            let r = report::decomposition_section(&a)?;
            Ok((render(c.json, &r, report::DecompositionSection::to_text)?, false))
        }
        Command::Simple(c) => {
            let a = load(&c)?;
            let r = report::simple_section(&a);
            Ok((render(c.json, &r, report::SimpleSection::to_text)?, false))
        }
        Command::Radical(c) => {
            let a = load(&c)?;
            let r = report::radical_section(&a);
            Ok((render(c.json, &r, report::RadicalSection::to_text)?, false))
        }
        Command::Ideal { common, vector } => {
            let a = load(&common)?;
            let x = document::parse_vector(&vector, a.field(), a.dim())?;
            let r = report::ideal_section(&a, &Element::new(x))?;
            Ok((render(common.json, &r, report::IdealSection::to_text)?, false))
        }
        Command::Graph { common, dot } => {
            let a = load(&common)?;
            let g = AssociatedGraph::from_algebra(&a);
            let r = report::graph_section(&g);
            let mut out = String::new();
            match dot.as_deref() {
                Some(p) if p == Path::new("-") => out.push_str(&export_dot(&g)),
                Some(p) => {
                    std::fs::write(p, export_dot(&g))
                        .map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
                    out.push_str(&render(common.json, &r, report::GraphSection::to_text)?);
                }
                None => out.push_str(&render(common.json, &r, report::GraphSection::to_text)?),
            }
            Ok((out, false))
        }
        Command::Quotient { common, ideal_basis } => {
            let a = load(&common)?;
            let text = read_text(&ideal_basis)?;
            let s = document::parse_subspace(&text, a.field(), a.dim()).map_err(|e| {
                Failure::Input(format!("{}: {e}", ideal_basis.display()))
            })?;
            let ideal = ideals::Ideal::new(&a, s)
                .map_err(|_| Failure::Input(format!("{}: subspace is not an ideal", ideal_basis.display())))?;
            let q = ideals::quotient(&a, &ideal)?;
            let r = report::quotient_section(ideal.carrier(), &q);
            Ok((render(common.json, &r, report::QuotientSection::to_text)?, false))
        }
        Command::Oracle { common, budget } => {
            let a = load(&common)?;
            let budget = EnumerationBudget::new(budget);
            let c = oracle::cross_check(&a, budget)?;
            let r = report::oracle_section(&a, budget, &c);
            Ok((render(common.json, &r, report::OracleSection::to_text)?, !r.agrees))
        }
    }
}

/// Runs the command line `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    match execute(cli.command) {
        Ok((text, mismatch)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_INPUT;
            }
            if mismatch {
                let _ = writeln!(err, "error: oracle disagrees with the fast algorithms");
                EXIT_INTERNAL
            } else {
                EXIT_OK
            }
        }
        Err(Failure::Input(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_INPUT
        }
        Err(Failure::Internal(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_INTERNAL
        }
    }
}
