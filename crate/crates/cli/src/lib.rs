//! Batch front end for `devres`: reads an instance document, runs one
//! pipeline stage and produces a JSON result.
//!
//! Polynomial and polytope indices on the command line and in output
//! documents are 1-based.

mod commands;
pub mod schema;

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

pub use schema::{InstanceDoc, SchemaError};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFY_MISMATCH: i32 = 1;
    pub const SCHEMA: i32 = 2;
    pub const PRECONDITION: i32 = 3;
    pub const INTERNAL: i32 = 4;
}

#[derive(Parser, Clone, Debug)]
#[command(
    name = "devres",
    version,
    about = "Exact root sums, products and resultants of developed systems"
)]
pub struct Cli {
    #[command(flatten)]
    pub io: IoFlags,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Clone, Debug)]
pub struct IoFlags {
    /// Instance document, or `-` for standard input.
    #[arg(long, global = true, default_value = "-")]
    pub input: String,
    /// Result document, or `-` for standard output.
    #[arg(long, global = true, default_value = "-")]
    pub output: String,
    /// Indent the result document.
    #[arg(long, global = true)]
    pub pretty: bool,
}

#[derive(Subcommand, Clone, Debug, PartialEq, Eq)]
pub enum Command {
    /// Vertices and facets of the declared polytopes.
    Polytope,
    /// Minkowski sum of the declared polytopes.
    Minkowski,
    /// Normalized mixed volume of the n declared polytopes.
    MixedVolume,
    /// Developedness of the declared polytopes.
    Developed {
        /// Drop polytope K from an (n+1)-tuple first.
        #[arg(long = "i", value_name = "K", conflicts_with = "complete")]
        i: Option<usize>,
        /// Check every index of an (n+1)-tuple.
        #[arg(long)]
        complete: bool,
    },
    /// Combinatorial coefficients of the vertices of the Minkowski sum.
    CombCoeffs {
        /// Coefficients k^{i,j} of an (n+1)-tuple.
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        pair: Option<Vec<usize>>,
    },
    /// Power sums of f over the roots of the system.
    PowerSums {
        /// Index of f in the document, or an inline polynomial document.
        #[arg(long)]
        f: String,
        /// Number of power sums.
        #[arg(long = "K", value_name = "K")]
        k: usize,
    },
    /// Characteristic polynomial of the values of f at the roots.
    CharPoly {
        #[arg(long)]
        f: String,
    },
    /// Product of f_K over the common roots of the other polynomials.
    Product {
        #[arg(long = "i", value_name = "K")]
        i: usize,
    },
    /// Parshin symbol of n+1 monomials.
    Parshin,
    /// The F2 function D of the exponents of n+1 monomials.
    DFunction,
    /// Sylvester matrix and resultants of two one-variable polynomials.
    Sylvester,
    /// Delta-resultant of n+1 polynomials, up to sign.
    Resultant {
        #[arg(long, value_name = "K")]
        pivot: Option<usize>,
    },
    /// Signed product-formula identities on a completely developed instance.
    PoissonCheck,
    /// Exact results against numeric roots, for n <= 2.
    Verify,
}

/// One invocation: a command, where to read and write, and formatting.
#[derive(Clone, Debug)]
pub struct JobSpec {
    pub command: Command,
    pub input: String,
    pub output: String,
    pub pretty: bool,
}

impl From<Cli> for JobSpec {
    fn from(cli: Cli) -> Self {
        Self {
            command: cli.command,
            input: cli.io.input,
            output: cli.io.output,
            pretty: cli.io.pretty,
        }
    }
}

/// Exit status and the document to emit.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub status: i32,
    pub document: Value,
}

impl Outcome {
    pub fn ok(document: Value) -> Self {
        Self {
            status: exit::OK,
            document,
        }
    }

    pub fn error(status: i32, kind: &str, message: impl Into<String>, details: Value) -> Self {
        let mut body = json!({ "kind": kind, "message": message.into() });
        if let (Some(b), Value::Object(extra)) = (body.as_object_mut(), details) {
            b.extend(extra);
        }
        Self {
            status,
            document: json!({ "error": body }),
        }
    }

    pub fn schema(message: impl Into<String>) -> Self {
        Self::error(exit::SCHEMA, "schema", message, Value::Null)
    }

    /// The document as text, ending in a newline.
    pub fn render(&self, pretty: bool) -> String {
        let mut text = if pretty {
            serde_json::to_string_pretty(&self.document)
        } else {
            serde_json::to_string(&self.document)
        }
        .expect("JSON values always serialize");
        text.push('\n');
        text
    }
}

/// Runs a command on the text of an instance document.
pub fn run_on(command: &Command, input: &str) -> Outcome {
    let doc = match InstanceDoc::parse(input) {
        Ok(doc) => doc,
        Err(e) => return Outcome::schema(e.0),
    };
    let system = match doc.to_system() {
        Ok(s) => s,
        Err(e) => return Outcome::schema(e.0),
    };
    commands::execute(command, &system)
}

/// Reads the input, runs the job and writes the result; returns the exit status.
pub fn run(job: &JobSpec) -> i32 {
    let input = match read_input(&job.input) {
        Ok(text) => text,
        Err(e) => {
            let out = Outcome::schema(format!("cannot read {}: {e}", job.input));
            eprint!("{}", out.render(job.pretty));
            return out.status;
        }
    };
    let out = run_on(&job.command, &input);
    let text = out.render(job.pretty);
    let written = if job.output == "-" {
        std::io::stdout().write_all(text.as_bytes())
    } else {
        std::fs::write(PathBuf::from(&job.output), text.as_bytes())
    };
    if let Err(e) = written {
        eprintln!("cannot write {}: {e}", job.output);
        return exit::SCHEMA;
    }
    out.status
}

fn read_input(path: &str) -> std::io::Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}
