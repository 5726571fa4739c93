use std::fmt;

use thiserror::Error;

use super::{
    abelian, direct_sum, heisenberg, nonabelian2, pair_center, pair_derived, pair_direct_sum, pair_full, pair_leading,
};
use crate::lie::LieAlgebra;
use crate::pair::Pair;

pub const PREFIX: &str = "builtin:";

/// A parsed builtin expression such as `pair_center(heisenberg(1))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    Call { name: String, args: Vec<Expr> },
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Call { name, args } if args.is_empty() => f.write_str(name),
            Expr::Call { name, args } => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SelectorError {
    #[error("selector must start with `{PREFIX}`")]
    MissingPrefix,
    #[error("at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown builtin `{0}`")]
    UnknownName(String),
    #[error("`{name}`: {reason}")]
    BadArguments { name: String, reason: String },
    #[error("`{expr}` is {found}, expected {expected}")]
    WrongKind {
        expr: String,
        expected: &'static str,
        found: &'static str,
    },
    #[error("`{expr}`: {source}")]
    Construction {
        expr: String,
        #[source]
        source: crate::Error,
    },
}

/// An evaluated builtin.
#[derive(Debug, Clone)]
pub enum Builtin {
    Algebra(LieAlgebra),
    Pair(Pair),
}

impl Builtin {
    fn kind(&self) -> &'static str {
        match self {
            Builtin::Algebra(_) => "an algebra",
            Builtin::Pair(_) => "a pair",
        }
    }
}

/// Parses `builtin:<expr>`.
pub fn parse_selector(text: &str) -> Result<Expr, SelectorError> {
    let body = text.strip_prefix(PREFIX).ok_or(SelectorError::MissingPrefix)?;
    parse_expr(body).map_err(|e| match e {
        SelectorError::Syntax { offset, message } => SelectorError::Syntax {
            offset: offset + PREFIX.len(),
            message,
        },
        other => other,
    })
}

/// Parses a bare expression, without the prefix.
pub fn parse_expr(text: &str) -> Result<Expr, SelectorError> {
    let mut parser = Parser { text, pos: 0 };
    parser.skip_ws();
    let expr = parser.expr(0)?;
    parser.skip_ws();
    if parser.pos != text.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(expr)
}

const MAX_DEPTH: usize = 32;

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> SelectorError {
        SelectorError::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_ascii_whitespace() {
                break;
            }
            self.pos += 1;
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !f(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.text[start..self.pos]
    }

    fn expr(&mut self, depth: usize) -> Result<Expr, SelectorError> {
        if depth > MAX_DEPTH {
            return Err(self.error("expression nested too deeply"));
        }
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let digits = self.take_while(|c| c.is_ascii_digit());
                digits.parse().map(Expr::Int).map_err(|_| SelectorError::Syntax {
                    offset: start,
                    message: "integer out of range".into(),
                })
            }
            Some('-') => Err(self.error("negative parameters are not allowed")),
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_').to_string();
                self.skip_ws();
                let mut args = Vec::new();
                if self.peek() == Some('(') {
                    self.pos += 1;
                    loop {
                        self.skip_ws();
                        args.push(self.expr(depth + 1)?);
                        self.skip_ws();
                        match self.peek() {
                            Some(',') => self.pos += 1,
                            Some(')') => {
                                self.pos += 1;
                                break;
                            }
                            _ => return Err(self.error("expected `,` or `)`")),
                        }
                    }
                }
                Ok(Expr::Call { name, args })
            }
            Some(_) => Err(self.error("expected a name or an integer")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

fn construction(expr: &Expr) -> impl FnOnce(crate::Error) -> SelectorError + '_ {
    move |source| SelectorError::Construction {
        expr: expr.to_string(),
        source,
    }
}

/// Evaluates a parsed expression.
pub fn evaluate(expr: &Expr) -> Result<Builtin, SelectorError> {
    let (name, args) = match expr {
        Expr::Int(_) => {
            return Err(SelectorError::WrongKind {
                expr: expr.to_string(),
                expected: "an algebra or a pair",
                found: "an integer",
            })
        }
        Expr::Call { name, args } => (name.as_str(), args.as_slice()),
    };
    let arity = |n: usize| -> Result<(), SelectorError> {
        if args.len() == n {
            Ok(())
        } else {
            Err(SelectorError::BadArguments {
                name: name.to_string(),
                reason: format!("expected {n} argument(s), found {}", args.len()),
            })
        }
    };
    let built = match name {
        "abelian" => {
            arity(1)?;
            Builtin::Algebra(abelian(int_arg(name, &args[0])?))
        }
        "nonabelian2" => {
            arity(0)?;
            Builtin::Algebra(nonabelian2())
        }
        "heisenberg" => {
            arity(1)?;
            Builtin::Algebra(heisenberg(int_arg(name, &args[0])?))
        }
        "direct_sum" => {
            arity(2)?;
            Builtin::Algebra(direct_sum(&algebra_arg(&args[0])?, &algebra_arg(&args[1])?))
        }
        "pair_full" => {
            arity(1)?;
            Builtin::Pair(pair_full(algebra_arg(&args[0])?))
        }
        "pair_center" => {
            arity(1)?;
            Builtin::Pair(pair_center(algebra_arg(&args[0])?).map_err(construction(expr))?)
        }
        "pair_derived" => {
            arity(1)?;
            Builtin::Pair(pair_derived(algebra_arg(&args[0])?).map_err(construction(expr))?)
        }
        "pair_leading" => {
            arity(2)?;
            let l = algebra_arg(&args[0])?;
            let k = int_arg(name, &args[1])?;
            if k > l.dim() {
                return Err(SelectorError::BadArguments {
                    name: name.to_string(),
                    reason: format!("k = {k} exceeds the dimension {}", l.dim()),
                });
            }
            Builtin::Pair(pair_leading(l, k).map_err(construction(expr))?)
        }
        "pair_direct_sum" => {
            arity(2)?;
            let (p, q) = (pair_arg(&args[0])?, pair_arg(&args[1])?);
            Builtin::Pair(pair_direct_sum(&p, &q).map_err(construction(expr))?)
        }
        other => return Err(SelectorError::UnknownName(other.to_string())),
    };
    Ok(built)
}

/// Largest parameter accepted by the dimension-taking builtins.
pub const MAX_PARAMETER: u64 = 64;

fn int_arg(name: &str, arg: &Expr) -> Result<usize, SelectorError> {
    match arg {
        Expr::Int(n) if *n <= MAX_PARAMETER => Ok(*n as usize),
        Expr::Int(n) => Err(SelectorError::BadArguments {
            name: name.to_string(),
            reason: format!("parameter {n} exceeds {MAX_PARAMETER}"),
        }),
        other => Err(SelectorError::BadArguments {
            name: name.to_string(),
            reason: format!("expected an integer, found `{other}`"),
        }),
    }
}

fn algebra_arg(arg: &Expr) -> Result<LieAlgebra, SelectorError> {
    match evaluate(arg)? {
        Builtin::Algebra(a) => Ok(a),
        other => Err(SelectorError::WrongKind {
            expr: arg.to_string(),
            expected: "an algebra",
            found: other.kind(),
        }),
    }
}

fn pair_arg(arg: &Expr) -> Result<Pair, SelectorError> {
    match evaluate(arg)? {
        Builtin::Pair(p) => Ok(p),
        other => Err(SelectorError::WrongKind {
            expr: arg.to_string(),
            expected: "a pair",
            found: other.kind(),
        }),
    }
}

/// Evaluates a bare expression that must denote a pair; an algebra `A`
/// denotes `(A, A)`.
pub fn pair_from_selector(text: &str) -> Result<Pair, SelectorError> {
    match evaluate(&parse_expr(text)?)? {
        Builtin::Pair(p) => Ok(p),
        Builtin::Algebra(a) => Ok(Pair::full(a)),
    }
}
