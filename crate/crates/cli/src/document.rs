//! Reading and writing the declaration documents the command-line tool
//! consumes.
//!
//! A document is line oriented.  Blank lines are skipped and everything from
//! the first `#` on a line is a comment.  Each remaining line declares a
//! space, a multiset, or a mapping:
//!
//! ```text
//! space X^4 { a, b, c, d }
//! space Y^5 { s, t, x, y, z }
//! mset A in X = { 1/a, 4/b, 2/c }      # omitted elements have count 0
//! map f : X -> Y { u: a->y, b->y, c->z, d->s ; p: 0,1,5,5,5 }
//! ```
//!
//! Every name must be declared before it is used, and spaces, multisets, and
//! mappings share one namespace.  A mapping block lists the element
//! assignment `u` and then the full value table of the count map `p`
//! (`p: 0,1,5,5,5` maps counts `0..=4` to those values in order).  The
//! assignment list may be empty — `u: ;` — which is only valid when the
//! domain has no elements.
//!
//! [`Environment::render`] writes the declarations back out in a canonical
//! form: one declaration per line, spaces first, then multisets, then
//! mappings, each group in declaration order, with every count spelled out.
//! Rendering then re-parsing yields an equal [`Environment`].

use std::fmt::Write as _;

use msetspace::{KharalMap, Multiset, OpMap, Space};
use thiserror::Error;

/// A parse failure, positioned at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Everything a document declares, in declaration order.
#[derive(Debug, Clone, PartialEq)]
pub struct Environment {
    spaces: Vec<(String, Space<String>)>,
    msets: Vec<MsetDecl>,
    maps: Vec<MapDecl>,
}

#[derive(Debug, Clone, PartialEq)]
struct MsetDecl {
    name: String,
    space_name: String,
    value: Multiset<String>,
}

#[derive(Debug, Clone, PartialEq)]
struct MapDecl {
    name: String,
    domain_name: String,
    codomain_name: String,
    value: KharalMap<String, String>,
}

impl Environment {
    /// Parse a whole document.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut env = Environment { spaces: Vec::new(), msets: Vec::new(), maps: Vec::new() };
        for (index, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(at) => &raw[..at],
                None => raw,
            };
            if line.trim().is_empty() {
                continue;
            }
            let mut cur = Cursor::new(line, index + 1);
            let (column, keyword) = cur.ident()?;
            match keyword.as_str() {
                "space" => env.parse_space(&mut cur)?,
                "mset" => env.parse_mset(&mut cur)?,
                "map" => env.parse_map(&mut cur)?,
                other => {
                    return Err(cur.error_at(
                        column,
                        format!("expected 'space', 'mset', or 'map', found '{other}'"),
                    ))
                }
            }
        }
        Ok(env)
    }

    /// The space declared under `name`, if any.
    pub fn space(&self, name: &str) -> Option<&Space<String>> {
        self.spaces.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }

    /// The multiset declared under `name`, if any.
    pub fn mset(&self, name: &str) -> Option<&Multiset<String>> {
        self.msets.iter().find(|d| d.name == name).map(|d| &d.value)
    }

    /// The mapping declared under `name`, if any.
    pub fn map(&self, name: &str) -> Option<&KharalMap<String, String>> {
        self.maps.iter().find(|d| d.name == name).map(|d| &d.value)
    }

    /// Whether `name` is taken by any declaration.
    pub fn is_declared(&self, name: &str) -> bool {
        self.space(name).is_some() || self.mset(name).is_some() || self.map(name).is_some()
    }

    /// Write the declarations back out in canonical form.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (name, space) in &self.spaces {
            let elements = if space.is_empty() {
                " ".to_string()
            } else {
                format!(" {} ", space.elements().join(", "))
            };
            let _ = writeln!(out, "space {name}^{} {{{elements}}}", space.bound());
        }
        for decl in &self.msets {
            let _ = writeln!(out, "mset {} in {} = {}", decl.name, decl.space_name, decl.value);
        }
        for decl in &self.maps {
            let f = &decl.value;
            let pairs = f
                .element_table()
                .iter()
                .enumerate()
                .map(|(x, &y)| format!("{}->{}", f.domain().elements()[x], f.codomain().elements()[y]))
                .collect::<Vec<_>>()
                .join(", ");
            let table = if pairs.is_empty() { String::new() } else { format!("{pairs} ") };
            let values = f
                .count_map()
                .values()
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",");
            let _ = writeln!(
                out,
                "map {} : {} -> {} {{ u: {table}; p: {values} }}",
                decl.name, decl.domain_name, decl.codomain_name
            );
        }
        out
    }

    fn check_fresh(&self, cur: &Cursor, column: usize, name: &str) -> Result<(), ParseError> {
        if self.is_declared(name) {
            Err(cur.error_at(column, format!("name '{name}' is already declared")))
        } else {
            Ok(())
        }
    }

    fn parse_space(&mut self, cur: &mut Cursor) -> Result<(), ParseError> {
        let (name_col, name) = cur.ident()?;
        self.check_fresh(cur, name_col, &name)?;
        cur.expect('^')?;
        let (_, bound) = cur.number()?;
        cur.expect('{')?;
        let mut elements = Vec::new();
        if !cur.eat('}') {
            loop {
                let (el_col, element) = cur.ident()?;
                if elements.contains(&element) {
                    return Err(
                        cur.error_at(el_col, format!("element '{element}' appears more than once"))
                    );
                }
                elements.push(element);
                if cur.eat(',') {
                    continue;
                }
                cur.expect('}')?;
                break;
            }
        }
        cur.expect_end()?;
        let space = Space::new(elements, bound).expect("duplicates were already rejected");
        self.spaces.push((name, space));
        Ok(())
    }

    fn parse_mset(&mut self, cur: &mut Cursor) -> Result<(), ParseError> {
        let (name_col, name) = cur.ident()?;
        self.check_fresh(cur, name_col, &name)?;
        let (kw_col, keyword) = cur.ident()?;
        if keyword != "in" {
            return Err(cur.error_at(kw_col, format!("expected 'in', found '{keyword}'")));
        }
        let (sp_col, space_name) = cur.ident()?;
        let space = self
            .space(&space_name)
            .ok_or_else(|| cur.error_at(sp_col, format!("unknown space '{space_name}'")))?
            .clone();
        cur.expect('=')?;
        cur.expect('{')?;
        let mut counts = vec![0u32; space.len()];
        let mut seen = vec![false; space.len()];
        if !cur.eat('}') {
            loop {
                let (count_col, count) = cur.number()?;
                cur.expect('/')?;
                let (el_col, element) = cur.ident()?;
                let index = space.index_of(&element).ok_or_else(|| {
                    cur.error_at(el_col, format!("element '{element}' is not in space '{space_name}'"))
                })?;
                if seen[index] {
                    return Err(
                        cur.error_at(el_col, format!("element '{element}' appears more than once"))
                    );
                }
                seen[index] = true;
                if count > space.bound() {
                    return Err(cur.error_at(
                        count_col,
                        format!("count {count} is outside 0..={}", space.bound()),
                    ));
                }
                counts[index] = count;
                if cur.eat(',') {
                    continue;
                }
                cur.expect('}')?;
                break;
            }
        }
        cur.expect_end()?;
        let value = Multiset::from_counts(&space, counts).expect("counts were already validated");
        self.msets.push(MsetDecl { name, space_name, value });
        Ok(())
    }

    fn parse_map(&mut self, cur: &mut Cursor) -> Result<(), ParseError> {
        let (name_col, name) = cur.ident()?;
        self.check_fresh(cur, name_col, &name)?;
        cur.expect(':')?;
        let (dom_col, domain_name) = cur.ident()?;
        let domain = self
            .space(&domain_name)
            .ok_or_else(|| cur.error_at(dom_col, format!("unknown space '{domain_name}'")))?
            .clone();
        cur.expect_str("->")?;
        let (cod_col, codomain_name) = cur.ident()?;
        let codomain = self
            .space(&codomain_name)
            .ok_or_else(|| cur.error_at(cod_col, format!("unknown space '{codomain_name}'")))?
            .clone();
        cur.expect('{')?;
        let (u_col, u_kw) = cur.ident()?;
        if u_kw != "u" {
            return Err(cur.error_at(u_col, format!("expected 'u', found '{u_kw}'")));
        }
        cur.expect(':')?;
        let mut pairs: Vec<(String, String)> = Vec::new();
        let mut seen = vec![false; domain.len()];
        if !cur.peek_is(';') {
            loop {
                let (from_col, from) = cur.ident()?;
                let index = domain.index_of(&from).ok_or_else(|| {
                    cur.error_at(from_col, format!("'{from}' is not in space '{domain_name}'"))
                })?;
                if seen[index] {
                    return Err(cur.error_at(from_col, format!("'{from}' is assigned twice")));
                }
                seen[index] = true;
                cur.expect_str("->")?;
                let (to_col, to) = cur.ident()?;
                if codomain.index_of(&to).is_none() {
                    return Err(
                        cur.error_at(to_col, format!("'{to}' is not in space '{codomain_name}'"))
                    );
                }
                pairs.push((from, to));
                if cur.eat(',') {
                    continue;
                }
                break;
            }
        }
        cur.expect(';')?;
        let (p_col, p_kw) = cur.ident()?;
        if p_kw != "p" {
            return Err(cur.error_at(p_col, format!("expected 'p', found '{p_kw}'")));
        }
        cur.expect(':')?;
        let (values_col, first) = cur.number()?;
        let mut values = vec![first];
        while cur.eat(',') {
            values.push(cur.number()?.1);
        }
        cur.expect('}')?;
        cur.expect_end()?;
        let p = OpMap::new(domain.bound(), codomain.bound(), values)
            .map_err(|e| cur.error_at(values_col, e.to_string()))?;
        let value = KharalMap::new(&domain, &codomain, pairs, p)
            .map_err(|e| cur.error_at(u_col, e.to_string()))?;
        self.maps.push(MapDecl { name, domain_name, codomain_name, value });
        Ok(())
    }
}

/// A position within one line of the document.
struct Cursor<'t> {
    line: &'t str,
    number: usize,
    pos: usize,
}

impl<'t> Cursor<'t> {
    fn new(line: &'t str, number: usize) -> Self {
        Cursor { line, number, pos: 0 }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.pos + 1, message)
    }

    fn error_at(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError { line: self.number, column, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.line[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.line[self.pos..].chars().next()
    }

    /// Skip whitespace and report whether `c` is next, without consuming it.
    fn peek_is(&mut self, c: char) -> bool {
        self.skip_ws();
        self.peek() == Some(c)
    }

    /// Skip whitespace and consume `c` if it is next.
    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'{}", self.found())))
        }
    }

    /// Skip whitespace and consume the exact text `s` (no internal spaces).
    fn expect_str(&mut self, s: &str) -> Result<(), ParseError> {
        self.skip_ws();
        if self.line[self.pos..].starts_with(s) {
            self.pos += s.len();
            Ok(())
        } else {
            Err(self.error(format!("expected '{s}'{}", self.found())))
        }
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(c) => format!(", found '{c}'"),
            None => ", found end of line".to_string(),
        }
    }

    /// An identifier: a letter or `_`, then letters, digits, and `_`.
    fn ident(&mut self) -> Result<(usize, String), ParseError> {
        self.skip_ws();
        let column = self.pos + 1;
        let rest = &self.line[self.pos..];
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

    fn number(&mut self) -> Result<(usize, u32), ParseError> {
        self.skip_ws();
        let column = self.pos + 1;
        let rest = &self.line[self.pos..];
        let len = rest.chars().take_while(|c| c.is_ascii_digit()).count();
        if len == 0 {
            return Err(self.error(format!("expected a number{}", self.found())));
        }
        let digits = &rest[..len];
        let value = digits
            .parse::<u32>()
            .map_err(|_| self.error_at(column, format!("number {digits} is too large")))?;
        self.pos += len;
        Ok((column, value))
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos == self.line.len() {
            Ok(())
        } else {
            Err(self.error(format!("expected end of line{}", self.found())))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# two spaces, a multiset, and a mapping
space X^4 { a, b, c, d }
space Y^5 { s, t, x, y, z }

mset A in X = { 1/a, 4/b, 2/c, 4/d }
map f : X -> Y { u: a->y, b->y, c->z, d->s ; p: 0,1,5,5,5 }
";

    #[test]
    fn parses_spaces_msets_and_maps() {
        let env = Environment::parse(SAMPLE).unwrap();
        let space = env.space("X").unwrap();
        assert_eq!(space.bound(), 4);
        assert_eq!(space.elements(), ["a", "b", "c", "d"]);
        let a = env.mset("A").unwrap();
        assert_eq!(a.counts(), [1, 4, 2, 4]);
        let f = env.map("f").unwrap();
        assert_eq!(f.element_table(), [3, 3, 4, 0]);
        assert_eq!(f.count_map().values(), [0, 1, 5, 5, 5]);
    }

    #[test]
    fn omitted_elements_default_to_count_zero() {
        let env = Environment::parse("space X^3 { a, b, c }\nmset A in X = { 2/b }\n").unwrap();
        assert_eq!(env.mset("A").unwrap().counts(), [0, 2, 0]);
        let empty = Environment::parse("space X^3 { a, b, c }\nmset A in X = { }\n").unwrap();
        assert_eq!(empty.mset("A").unwrap().counts(), [0, 0, 0]);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let env = Environment::parse("\n  # nothing\nspace X^1 { a } # trailing\n\n").unwrap();
        assert_eq!(env.space("X").unwrap().len(), 1);
    }

    #[test]
    fn empty_universe_and_empty_assignment_parse() {
        let env = Environment::parse(
            "space X^2 { }\nspace Y^3 { s }\nmset A in X = { }\nmap f : X -> Y { u: ; p: 0,3,3 }\n",
        )
        .unwrap();
        assert!(env.space("X").unwrap().is_empty());
        assert_eq!(env.map("f").unwrap().element_table(), &[] as &[usize]);
    }

    #[test]
    fn errors_carry_line_and_column() {
        let err = Environment::parse("space X^4 { a, a }\n").unwrap_err();
        assert_eq!((err.line, err.column), (1, 16));
        assert_eq!(err.to_string(), "1:16: element 'a' appears more than once");

        let err = Environment::parse("space X^2 { a }\nmset A in Z = { }\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 11));
        assert_eq!(err.to_string(), "2:11: unknown space 'Z'");

        let err = Environment::parse("space X^2 { a }\nmset A in X = { 3/a }\n").unwrap_err();
        assert_eq!(err.to_string(), "2:17: count 3 is outside 0..=2");

        let err = Environment::parse("mset A in X = { }\n").unwrap_err();
        assert_eq!(err.to_string(), "1:11: unknown space 'X'");

        let err = Environment::parse("space X^2 { a } extra\n").unwrap_err();
        assert_eq!(err.to_string(), "1:17: expected end of line, found 'e'");

        let err = Environment::parse("widget W\n").unwrap_err();
        assert_eq!(err.to_string(), "1:1: expected 'space', 'mset', or 'map', found 'widget'");
    }

    #[test]
    fn one_namespace_covers_all_declaration_kinds() {
        let err = Environment::parse("space X^2 { a }\nmset X in X = { }\n").unwrap_err();
        assert_eq!(err.to_string(), "2:6: name 'X' is already declared");

        let err =
            Environment::parse("space X^2 { a }\nmset A in X = { }\nmap A : X -> X { u: a->a ; p: 0,1,2 }\n")
                .unwrap_err();
        assert_eq!(err.to_string(), "3:5: name 'A' is already declared");
    }

    #[test]
    fn declarations_must_precede_use() {
        let err = Environment::parse("mset A in X = { }\nspace X^2 { a }\n").unwrap_err();
        assert_eq!((err.line, err.column), (1, 11));
    }

    #[test]
    fn count_map_shape_errors_point_at_the_table() {
        // Too few values for a bound of 4.
        let err = Environment::parse(
            "space X^4 { a }\nspace Y^5 { s }\nmap f : X -> Y { u: a->s ; p: 0,5 }\n",
        )
        .unwrap_err();
        assert_eq!((err.line, err.column), (3, 31));

        // Not order preserving.
        let err = Environment::parse(
            "space X^2 { a }\nspace Y^2 { s }\nmap f : X -> Y { u: a->s ; p: 0,2,1 }\n",
        )
        .unwrap_err();
        assert_eq!((err.line, err.column), (3, 31));
    }

    #[test]
    fn render_is_canonical_and_round_trips() {
        let env = Environment::parse(SAMPLE).unwrap();
        let rendered = env.render();
        assert_eq!(
            rendered,
            "space X^4 { a, b, c, d }\n\
             space Y^5 { s, t, x, y, z }\n\
             mset A in X = { 1/a, 4/b, 2/c, 4/d }\n\
             map f : X -> Y { u: a->y, b->y, c->z, d->s ; p: 0,1,5,5,5 }\n"
        );
        assert_eq!(Environment::parse(&rendered).unwrap(), env);
    }

    #[test]
    fn render_round_trips_degenerate_documents() {
        let text = "space X^2 { }\nspace Y^3 { s }\nmset A in X = { }\nmap f : X -> Y { u: ; p: 0,3,3 }\n";
        let env = Environment::parse(text).unwrap();
        let rendered = env.render();
        assert_eq!(
            rendered,
            "space X^2 { }\nspace Y^3 { s }\nmset A in X = { }\nmap f : X -> Y { u: ; p: 0,3,3 }\n"
        );
        assert_eq!(Environment::parse(&rendered).unwrap(), env);
    }
}
