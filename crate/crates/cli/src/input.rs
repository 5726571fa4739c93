//! Resolving command-line inputs: `builtin:` selectors or document paths.

use std::fmt;
use std::path::Path;

use tensoralg::catalog::{self, Builtin, Document, DocumentError, SelectorError};
use tensoralg::{LieAlgebra, Pair};

pub const MAX_DIM_VAR: &str = "TENSORALG_MAX_DIM";
pub const DEFAULT_MAX_DIM: usize = 8;

/// Failure of a command, with its exit code.
#[derive(Debug)]
pub enum Failure {
    /// Usage or input error, exit 2.
    Input(String),
    /// A validation violation in otherwise well-formed input, exit 1.
    Violation(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Violation(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) | Failure::Violation(m) => f.write_str(m),
        }
    }
}

impl From<SelectorError> for Failure {
    fn from(e: SelectorError) -> Self {
        match e {
            SelectorError::Construction { .. } => Failure::Violation(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn document_failure(input: &str, e: DocumentError) -> Failure {
    if e.is_semantic() {
        Failure::Violation(format!("{input}: {e}"))
    } else {
        Failure::Input(format!("{input}: {e}"))
    }
}

impl From<tensoralg::Error> for Failure {
    fn from(e: tensoralg::Error) -> Self {
        Failure::Violation(e.to_string())
    }
}

/// An algebra or a pair named on the command line.
pub enum Input {
    Algebra(LieAlgebra),
    Pair(Pair),
}

pub fn resolve(input: &str) -> Result<Input, Failure> {
    if input.starts_with(catalog::PREFIX) {
        let expr = catalog::parse_selector(input)?;
        return Ok(match catalog::evaluate(&expr)? {
            Builtin::Algebra(a) => Input::Algebra(a),
            Builtin::Pair(p) => Input::Pair(p),
        });
    }
    let path = Path::new(input);
    match catalog::load_document(path).map_err(|e| document_failure(input, e))? {
        Document::Algebra(doc) => Ok(Input::Algebra(
            doc.to_algebra().map_err(|e| document_failure(input, e))?,
        )),
        Document::Pair(doc) => Ok(Input::Pair(
            doc.resolve(path.parent()).map_err(|e| document_failure(input, e))?,
        )),
    }
}

/// A pair; an algebra `L` stands for `(L, L)`.
pub fn resolve_pair(input: &str) -> Result<Pair, Failure> {
    Ok(match resolve(input)? {
        Input::Algebra(a) => Pair::full(a),
        Input::Pair(p) => p,
    })
}

pub fn max_dim() -> Result<usize, Failure> {
    match std::env::var(MAX_DIM_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("{MAX_DIM_VAR}={v:?} is not a non-negative integer"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_DIM),
        Err(e) => Err(Failure::Input(format!("{MAX_DIM_VAR}: {e}"))),
    }
}

pub fn check_dim(input: &str, dim: usize, cap: usize) -> Result<(), Failure> {
    if dim > cap {
        Err(Failure::Input(format!(
            "{input}: dim L = {dim} exceeds the limit {cap} (set {MAX_DIM_VAR} to raise it)"
        )))
    } else {
        Ok(())
    }
}
