//! The algebra and pair document format: a restricted JSON dialect.
//!
//! ```text
//! {"name":"heisenberg1","dim":3,"basis":["x","y","z"],"brackets":{"x,y":{"z":"1"}}}
//! {"algebra":"heisenberg1.json","ideal":[["0","0","1"]]}
//! {"algebra":{...},"ideal":"all"}
//! ```
//!
//! Bracket keys are `"a,b"` with `a` before `b` in basis order; brackets not
//! listed are zero and antisymmetry is implied. Coefficients are rational
//! literals in strings.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use serde::de::{self, Deserialize, Deserializer, MapAccess, SeqAccess, Visitor};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::lie::LieAlgebra;
use crate::linalg::zero_vector;
use crate::pair::Pair;
use crate::scalar::{format_rational, parse_rational, Scalar, Vector};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid document: {0}")]
    Schema(String),
    #[error("{0}")]
    Semantic(#[from] crate::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl DocumentError {
    /// Errors in the data itself (structure, ideal) rather than its form.
    pub fn is_semantic(&self) -> bool {
        matches!(self, DocumentError::Semantic(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    pub terms: Vec<(String, Scalar)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraSource {
    Inline(AlgebraDocument),
    File(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealSpec {
    All,
    Vectors(Vec<Vector>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairDocument {
    pub algebra: AlgebraSource,
    pub ideal: IdealSpec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Algebra(AlgebraDocument),
    Pair(PairDocument),
}

/// Parses a document. Form errors carry a line and column; the algebraic
/// content is checked by [`AlgebraDocument::to_algebra`] and
/// [`PairDocument::resolve`].
pub fn parse(text: &str) -> Result<Document, DocumentError> {
    serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })
}

fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message.to_string(),
    }
}

pub fn load_document(path: &Path) -> Result<Document, DocumentError> {
    let text = fs::read_to_string(path).map_err(|source| DocumentError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse(&text)
}

/// Loads a pair from a file; an algebra document denotes the pair `(L, L)`.
pub fn load_pair(path: &Path) -> Result<Pair, DocumentError> {
    match load_document(path)? {
        Document::Algebra(a) => Ok(Pair::full(a.to_algebra()?)),
        Document::Pair(p) => p.resolve(path.parent()),
    }
}

impl AlgebraDocument {
    pub fn to_algebra(&self) -> Result<LieAlgebra, DocumentError> {
        if self.basis.len() != self.dim {
            return Err(DocumentError::Schema(format!(
                "dim is {} but the basis lists {} names",
                self.dim,
                self.basis.len()
            )));
        }
        for (i, name) in self.basis.iter().enumerate() {
            if name.is_empty() || name.contains(',') {
                return Err(DocumentError::Schema(format!(
                    "basis name {name:?} must be non-empty and contain no comma"
                )));
            }
            if self.basis[..i].contains(name) {
                return Err(DocumentError::Schema(format!("basis name {name:?} is repeated")));
            }
        }
        let index = |name: &str| {
            self.basis
                .iter()
                .position(|b| b == name)
                .ok_or_else(|| DocumentError::Schema(format!("unknown basis name {name:?}")))
        };
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for entry in &self.brackets {
            let (i, j) = (index(&entry.left)?, index(&entry.right)?);
            if i >= j {
                return Err(DocumentError::Schema(format!(
                    "bracket key \"{},{}\" is out of basis order",
                    entry.left, entry.right
                )));
            }
            let mut v = zero_vector(self.dim);
            for (name, c) in &entry.terms {
                v[index(name)?] = c.clone();
            }
            brackets.push((i, j, v));
        }
        Ok(LieAlgebra::from_brackets(self.basis.clone(), brackets)?)
    }

    pub fn from_algebra(name: &str, l: &LieAlgebra) -> Self {
        let n = l.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let terms: Vec<(String, Scalar)> = l
                    .bracket_basis(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(k, c)| (l.names()[k].clone(), c.clone()))
                    .collect();
                if !terms.is_empty() {
                    brackets.push(BracketEntry {
                        left: l.names()[i].clone(),
                        right: l.names()[j].clone(),
                        terms,
                    });
                }
            }
        }
        Self {
            name: name.to_string(),
            dim: n,
            basis: l.names().to_vec(),
            brackets,
        }
    }

    fn to_value(&self) -> Value {
        let mut brackets = Map::new();
        for e in &self.brackets {
            let terms: Map<String, Value> = e
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), Value::String(format_rational(c))))
                .collect();
            brackets.insert(format!("{},{}", e.left, e.right), Value::Object(terms));
        }
        let mut doc = Map::new();
        doc.insert("name".into(), Value::String(self.name.clone()));
        doc.insert("dim".into(), Value::from(self.dim));
        doc.insert("basis".into(), self.basis.iter().cloned().map(Value::String).collect());
        doc.insert("brackets".into(), Value::Object(brackets));
        Value::Object(doc)
    }
}

impl PairDocument {
    /// Builds the pair; file references are resolved against `base`.
    pub fn resolve(&self, base: Option<&Path>) -> Result<Pair, DocumentError> {
        let l = match &self.algebra {
            AlgebraSource::Inline(doc) => doc.to_algebra()?,
            AlgebraSource::File(file) => {
                let path = match base {
                    Some(dir) => dir.join(file),
                    None => PathBuf::from(file),
                };
                match load_document(&path)? {
                    Document::Algebra(doc) => doc.to_algebra()?,
                    Document::Pair(_) => {
                        return Err(DocumentError::Schema(format!(
                            "{} is a pair document, expected an algebra",
                            path.display()
                        )))
                    }
                }
            }
        };
        match &self.ideal {
            IdealSpec::All => Ok(Pair::full(l)),
            IdealSpec::Vectors(vs) => {
                if let Some(v) = vs.iter().find(|v| v.len() != l.dim()) {
                    return Err(DocumentError::Schema(format!(
                        "ideal vector of length {} in an algebra of dimension {}",
                        v.len(),
                        l.dim()
                    )));
                }
                Ok(Pair::make_pair(l, vs.clone())?)
            }
        }
    }

    /// An inline document for a pair with an ideal embedding.
    pub fn from_pair(name: &str, pair: &Pair) -> crate::Result<Self> {
        let ideal = if pair.is_full() {
            IdealSpec::All
        } else {
            IdealSpec::Vectors(pair.require_ideal()?.basis().to_vec())
        };
        Ok(Self {
            algebra: AlgebraSource::Inline(AlgebraDocument::from_algebra(name, pair.l())),
            ideal,
        })
    }

    fn to_value(&self) -> Value {
        let mut doc = Map::new();
        let algebra = match &self.algebra {
            AlgebraSource::Inline(a) => a.to_value(),
            AlgebraSource::File(f) => Value::String(f.clone()),
        };
        doc.insert("algebra".into(), algebra);
        let ideal = match &self.ideal {
            IdealSpec::All => Value::String("all".into()),
            IdealSpec::Vectors(vs) => vs
                .iter()
                .map(|v| v.iter().map(|c| Value::String(format_rational(c))).collect::<Value>())
                .collect(),
        };
        doc.insert("ideal".into(), ideal);
        Value::Object(doc)
    }
}

impl fmt::Display for AlgebraDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_value())
    }
}

impl fmt::Display for PairDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_value())
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Document::Algebra(a) => a.fmt(f),
            Document::Pair(p) => p.fmt(f),
        }
    }
}

// Deserialization. Each piece has its own visitor so that every error is
// raised while the parser still knows the position.

struct Rational(Scalar);

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Rational;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational literal in a string")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<Rational, E> {
                parse_rational(s).map(Rational).map_err(E::custom)
            }
        }
        d.deserialize_str(V)
    }
}

struct RationalVector(Vector);

impl<'de> Deserialize<'de> for RationalVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = RationalVector;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of rational literals")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<RationalVector, A::Error> {
                let mut out = Vec::new();
                while let Some(Rational(c)) = seq.next_element()? {
                    out.push(c);
                }
                Ok(RationalVector(out))
            }
        }
        d.deserialize_seq(V)
    }
}

struct BracketKey(String, String);

impl<'de> Deserialize<'de> for BracketKey {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = BracketKey;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a bracket key \"a,b\"")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<BracketKey, E> {
                let mut parts = s.split(',');
                match (parts.next(), parts.next(), parts.next()) {
                    (Some(a), Some(b), None) if !a.is_empty() && !b.is_empty() => {
                        if a == b {
                            Err(E::custom(format!(
                                "bracket key {s:?} is not an ordered pair of distinct basis names"
                            )))
                        } else {
                            Ok(BracketKey(a.to_string(), b.to_string()))
                        }
                    }
                    _ => Err(E::custom(format!("bracket key {s:?} is not of the form \"a,b\""))),
                }
            }
        }
        d.deserialize_str(V)
    }
}

struct Terms(Vec<(String, Scalar)>);

impl<'de> Deserialize<'de> for Terms {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Terms;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an object from basis names to rational literals")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Terms, A::Error> {
                let mut out: Vec<(String, Scalar)> = Vec::new();
                while let Some(name) = map.next_key::<String>()? {
                    if out.iter().any(|(n, _)| *n == name) {
                        return Err(de::Error::custom(format!("duplicate term {name:?}")));
                    }
                    let Rational(c) = map.next_value()?;
                    out.push((name, c));
                }
                Ok(Terms(out))
            }
        }
        d.deserialize_map(V)
    }
}

struct Brackets(Vec<BracketEntry>);

impl<'de> Deserialize<'de> for Brackets {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Brackets;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an object of brackets")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Brackets, A::Error> {
                let mut out: Vec<BracketEntry> = Vec::new();
                while let Some(BracketKey(left, right)) = map.next_key()? {
                    if out.iter().any(|e| e.left == left && e.right == right) {
                        return Err(de::Error::custom(format!("duplicate bracket key \"{left},{right}\"")));
                    }
                    let Terms(terms) = map.next_value()?;
                    out.push(BracketEntry { left, right, terms });
                }
                Ok(Brackets(out))
            }
        }
        d.deserialize_map(V)
    }
}

enum AlgebraField {
    Inline(Box<AlgebraDocument>),
    File(String),
}

impl<'de> Deserialize<'de> for AlgebraField {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = AlgebraField;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an algebra document or a file name")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<AlgebraField, E> {
                Ok(AlgebraField::File(s.to_string()))
            }
            fn visit_map<A: MapAccess<'de>>(self, map: A) -> Result<AlgebraField, A::Error> {
                match DocumentVisitor.visit_map(map)? {
                    Document::Algebra(a) => Ok(AlgebraField::Inline(Box::new(a))),
                    Document::Pair(_) => Err(de::Error::custom("a pair document cannot be nested")),
                }
            }
        }
        d.deserialize_any(V)
    }
}

struct IdealField(IdealSpec);

impl<'de> Deserialize<'de> for IdealField {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = IdealField;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("\"all\" or an array of coordinate vectors")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<IdealField, E> {
                if s == "all" {
                    Ok(IdealField(IdealSpec::All))
                } else {
                    Err(E::invalid_value(de::Unexpected::Str(s), &self))
                }
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<IdealField, A::Error> {
                let mut out = Vec::new();
                while let Some(RationalVector(v)) = seq.next_element()? {
                    out.push(v);
                }
                Ok(IdealField(IdealSpec::Vectors(out)))
            }
        }
        d.deserialize_any(V)
    }
}

const FIELDS: &[&str] = &["name", "dim", "basis", "brackets", "algebra", "ideal"];

struct DocumentVisitor;

fn set_once<T, E: de::Error>(slot: &mut Option<T>, key: &'static str, value: T) -> Result<(), E> {
    if slot.is_some() {
        return Err(E::duplicate_field(key));
    }
    *slot = Some(value);
    Ok(())
}

impl<'de> Visitor<'de> for DocumentVisitor {
    type Value = Document;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an algebra or pair document")
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Document, A::Error> {
        let mut name = None;
        let mut dim = None;
        let mut basis = None;
        let mut brackets = None;
        let mut algebra = None;
        let mut ideal = None;
        while let Some(key) = map.next_key::<String>()? {
            match key.as_str() {
                "name" => set_once(&mut name, "name", map.next_value::<String>()?)?,
                "dim" => set_once(&mut dim, "dim", map.next_value::<usize>()?)?,
                "basis" => set_once(&mut basis, "basis", map.next_value::<Vec<String>>()?)?,
                "brackets" => set_once(&mut brackets, "brackets", map.next_value::<Brackets>()?.0)?,
                "algebra" => set_once(&mut algebra, "algebra", map.next_value::<AlgebraField>()?)?,
                "ideal" => set_once(&mut ideal, "ideal", map.next_value::<IdealField>()?.0)?,
                other => {
return Err(de::Error::unknown_field(other, FIELDS))
                }
            }
        }
        let algebra_form = name.is_some() || dim.is_some() || basis.is_some() || brackets.is_some();
        let pair_form = algebra.is_some() || ideal.is_some();
        match (algebra_form, pair_form) {
            (true, true) => Err(de::Error::custom("a document mixes algebra and pair fields")),
            (false, true) => Ok(Document::Pair(PairDocument {
                algebra: match algebra.ok_or_else(|| de::Error::missing_field("algebra"))? {
                    AlgebraField::Inline(a) => AlgebraSource::Inline(*a),
                    AlgebraField::File(f) => AlgebraSource::File(f),
                },
                ideal: ideal.ok_or_else(|| de::Error::missing_field("ideal"))?,
            })),
            _ => Ok(Document::Algebra(AlgebraDocument {
                name: name.ok_or_else(|| de::Error::missing_field("name"))?,
                dim: dim.ok_or_else(|| de::Error::missing_field("dim"))?,
                basis: basis.ok_or_else(|| de::Error::missing_field("basis"))?,
                brackets: brackets.ok_or_else(|| de::Error::missing_field("brackets"))?,
            })),
        }
    }
}

impl<'de> Deserialize<'de> for Document {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_map(DocumentVisitor)
    }
}
