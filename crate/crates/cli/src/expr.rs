//! Evaluating expressions against a parsed [`Environment`].
//!
//! The grammar over declared names:
//!
//! ```text
//! expr   := term (('+' | '-') term)*          union, difference
//! term   := factor ('&' factor)*              intersection
//! factor := '~' factor | atom                 complement
//! atom   := '(' expr ')' | call | NAME
//! call   := 'card' '(' expr ')'               cardinality
//!         | 'd' '(' expr ',' expr ')'         distance
//!         | 'S' '(' expr ',' expr ')'         similarity
//!         | 'sub' '(' expr ',' expr ')'       is the first below the second
//!         | 'coin' '(' expr ',' expr ')'      are the two coincident
//!         | 'parikh' '(' expr ';' NAME,* ')'  counting vector in the given order
//!         | NAME '(' expr ')'                 mapping applied forward
//!         | NAME '^-1' '(' expr ')'           mapping applied backward
//! ```
//!
//! Binary operators associate to the left and every operand of `+`, `-`,
//! `&`, and `~` must be a multiset from the same space.  The five builtin
//! names are resolved before mapping names, so a mapping named `card`
//! cannot be applied — rename it.
//!
//! Results print one per line: multisets in brace form, counts and booleans
//! bare, distances and similarities with six decimal places, counting
//! vectors as `(3,4,3,0,1)`.

use std::fmt;

use msetspace::interop::{parikh_vector, IntVector};
use msetspace::{metrics, Multiset};
use thiserror::Error;

use crate::document::Environment;

/// An evaluation failure, positioned at a 1-based column of the expression.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{column}: {message}")]
pub struct EvalError {
    pub column: usize,
    pub message: String,
}

/// What an expression can evaluate to.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Mset(Multiset<String>),
    Bool(bool),
    Count(u64),
    Real(f64),
    Vector(IntVector),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Mset(m) => write!(f, "{m}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Count(n) => write!(f, "{n}"),
            Value::Real(x) => write!(f, "{x:.6}"),
            Value::Vector(v) => write!(f, "{v}"),
        }
    }
}

fn kind(value: &Value) -> &'static str {
    match value {
        Value::Mset(_) => "a multiset",
        Value::Bool(_) => "a boolean",
        Value::Count(_) => "a count",
        Value::Real(_) => "a number",
        Value::Vector(_) => "a vector",
    }
}

/// Evaluate one expression.
pub fn evaluate(env: &Environment, text: &str) -> Result<Value, EvalError> {
    let mut cur = Cursor { text, pos: 0 };
    let value = expr(&mut cur, env)?;
    cur.expect_end()?;
    Ok(value)
}

struct Cursor<'t> {
    text: &'t str,
    pos: usize,
}

impl<'t> Cursor<'t> {
    fn error(&self, message: impl Into<String>) -> EvalError {
        self.error_at(self.pos + 1, message)
    }

    fn error_at(&self, column: usize, message: impl Into<String>) -> EvalError {
        EvalError { column, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn peek_is(&mut self, c: char) -> bool {
        self.skip_ws();
        self.peek() == Some(c)
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    /// Skip whitespace and consume the exact text `s` (no internal spaces).
    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), EvalError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'{}", self.found())))
        }
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(c) => format!(", found '{c}'"),
            None => ", found end of expression".to_string(),
        }
    }

    fn ident(&mut self) -> Result<(usize, String), EvalError> {
        self.skip_ws();
        let column = self.pos + 1;
        let rest = &self.text[self.pos..];
        let mut len = 0;
        for c in rest.chars() {
            let ok = if len == 0 { c.is_alphabetic() || c == '_' } else { c.is_alphanumeric() || c == '_' };
            if !ok {
                break;
            }
            len += c.len_utf8();
        }
        if len == 0 {
            return Err(self.error(format!("expected a name{}", self.found())));
        }
        self.pos += len;
        Ok((column, rest[..len].to_string()))
    }

    fn expect_end(&mut self) -> Result<(), EvalError> {
        self.skip_ws();
        if self.pos == self.text.len() {
            Ok(())
        } else {
            Err(self.error(format!("expected end of expression{}", self.found())))
        }
    }
}

fn as_mset(value: Value, column: usize, what: &str) -> Result<Multiset<String>, EvalError> {
    match value {
        Value::Mset(m) => Ok(m),
        other => Err(EvalError {
            column,
            message: format!("{what} expects a multiset, found {}", kind(&other)),
        }),
    }
}

fn expr(cur: &mut Cursor, env: &Environment) -> Result<Value, EvalError> {
    cur.skip_ws();
    let mut column = cur.pos + 1;
    let mut left = term(cur, env)?;
    loop {
        let union = if cur.eat('+') {
            true
        } else if cur.eat('-') {
            false
        } else {
            return Ok(left);
        };
        let op = if union { "'+'" } else { "'-'" };
        let a = as_mset(left, column, op)?;
        cur.skip_ws();
        let right_col = cur.pos + 1;
        let b = as_mset(term(cur, env)?, right_col, op)?;
        let combined = if union { a.union(&b) } else { a.difference(&b) };
        left = Value::Mset(combined.map_err(|e| cur.error_at(column, e.to_string()))?);
        column = right_col;
    }
}

fn term(cur: &mut Cursor, env: &Environment) -> Result<Value, EvalError> {
    cur.skip_ws();
    let mut column = cur.pos + 1;
    let mut left = factor(cur, env)?;
    while cur.eat('&') {
        let a = as_mset(left, column, "'&'")?;
        cur.skip_ws();
        let right_col = cur.pos + 1;
        let b = as_mset(factor(cur, env)?, right_col, "'&'")?;
        left = Value::Mset(a.intersect(&b).map_err(|e| cur.error_at(column, e.to_string()))?);
        column = right_col;
    }
    Ok(left)
}

fn factor(cur: &mut Cursor, env: &Environment) -> Result<Value, EvalError> {
    if cur.eat('~') {
        cur.skip_ws();
        let column = cur.pos + 1;
        let m = as_mset(factor(cur, env)?, column, "'~'")?;
        Ok(Value::Mset(m.complement()))
    } else {
        atom(cur, env)
    }
}

fn atom(cur: &mut Cursor, env: &Environment) -> Result<Value, EvalError> {
    if cur.eat('(') {
        let value = expr(cur, env)?;
        cur.expect(')')?;
        return Ok(value);
    }
    let (column, name) = cur.ident()?;
    if cur.eat_str("^-1") {
        let f = env
            .map(&name)
            .ok_or_else(|| cur.error_at(column, format!("unknown mapping '{name}'")))?;
        cur.expect('(')?;
        cur.skip_ws();
        let arg_col = cur.pos + 1;
        let m = as_mset(expr(cur, env)?, arg_col, "a mapping")?;
        cur.expect(')')?;
        let back = f.preimage(&m).map_err(|e| cur.error_at(arg_col, e.to_string()))?;
        return Ok(Value::Mset(back));
    }
    if !cur.peek_is('(') {
        return match env.mset(&name) {
            Some(m) => Ok(Value::Mset(m.clone())),
            None if env.map(&name).is_some() => {
                Err(cur.error_at(column, format!("mapping '{name}' needs an argument")))
            }
            None => Err(cur.error_at(column, format!("unknown multiset '{name}'"))),
        };
    }
    match name.as_str() {
        "card" => {
            let (m, _) = one_mset(cur, env, "card")?;
            Ok(Value::Count(m.cardinality()))
        }
        "d" => {
            let (a, b, column) = two_msets(cur, env, "d")?;
            let x = metrics::distance(&a, &b).map_err(|e| cur.error_at(column, e.to_string()))?;
            Ok(Value::Real(x))
        }
        "S" => {
            let (a, b, column) = two_msets(cur, env, "S")?;
            let s = metrics::similarity(&a, &b).map_err(|e| cur.error_at(column, e.to_string()))?;
            Ok(Value::Real(s.value()))
        }
        "sub" => {
            let (a, b, column) = two_msets(cur, env, "sub")?;
            let below =
                a.is_submset(&b, false).map_err(|e| cur.error_at(column, e.to_string()))?;
            Ok(Value::Bool(below))
        }
        "coin" => {
            let (a, b, column) = two_msets(cur, env, "coin")?;
            let meets = a.coincident(&b).map_err(|e| cur.error_at(column, e.to_string()))?;
            Ok(Value::Bool(meets))
        }
        "parikh" => {
            cur.expect('(')?;
            cur.skip_ws();
            let arg_col = cur.pos + 1;
            let m = as_mset(expr(cur, env)?, arg_col, "parikh")?;
            cur.expect(';')?;
            cur.skip_ws();
            let order_col = cur.pos + 1;
            let mut order = Vec::new();
            if !cur.peek_is(')') {
                loop {
                    order.push(cur.ident()?.1);
                    if !cur.eat(',') {
                        break;
                    }
                }
            }
            cur.expect(')')?;
            let v = parikh_vector(&m, &order).map_err(|e| cur.error_at(order_col, e.to_string()))?;
            Ok(Value::Vector(v))
        }
        _ => {
            let f = env.map(&name).ok_or_else(|| {
                let message = if env.mset(&name).is_some() {
                    format!("'{name}' is a multiset, not a mapping")
                } else {
                    format!("unknown mapping '{name}'")
                };
                cur.error_at(column, message)
            })?;
            cur.expect('(')?;
            cur.skip_ws();
            let arg_col = cur.pos + 1;
            let m = as_mset(expr(cur, env)?, arg_col, "a mapping")?;
            cur.expect(')')?;
            let forward = f.image(&m).map_err(|e| cur.error_at(arg_col, e.to_string()))?;
            Ok(Value::Mset(forward))
        }
    }
}

fn one_mset(
    cur: &mut Cursor,
    env: &Environment,
    what: &str,
) -> Result<(Multiset<String>, usize), EvalError> {
    cur.expect('(')?;
    cur.skip_ws();
    let column = cur.pos + 1;
    let m = as_mset(expr(cur, env)?, column, what)?;
    cur.expect(')')?;
    Ok((m, column))
}

fn two_msets(
    cur: &mut Cursor,
    env: &Environment,
    what: &str,
) -> Result<(Multiset<String>, Multiset<String>, usize), EvalError> {
    cur.expect('(')?;
    cur.skip_ws();
    let column = cur.pos + 1;
    let a = as_mset(expr(cur, env)?, column, what)?;
    cur.expect(',')?;
    cur.skip_ws();
    let second = cur.pos + 1;
    let b = as_mset(expr(cur, env)?, second, what)?;
    cur.expect(')')?;
    Ok((a, b, column))
}
