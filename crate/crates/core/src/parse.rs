//! Text formats.
//!
//! Monomials are written `x^2*y*z^3`, with `1` for the constant. An ideal is
//! a comma-separated list of monomials in parentheses, with `(0)` and `(1)`
//! for the zero and unit ideals; an ideal file may carry `#` comments and an
//! optional `vars: a b c` header fixing the variable order. A hypergraph
//! file has an optional `vertices: a b c` header followed by one edge per
//! line as whitespace-separated vertex names.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::vars::{VarSet, VariableSet};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(u64),
    Star,
    Caret,
    Comma,
    LParen,
    RParen,
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    end: (usize, usize),
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '.'
}

impl Lexer {
    fn new(input: &str, start_line: usize) -> Result<Lexer> {
        let mut toks = Vec::new();
        let mut line = start_line;
        let mut col = 1usize;
        let mut chars = input.chars().peekable();
        while let Some(&c) = chars.peek() {
            let here = (line, col);
            match c {
                '\n' => {
                    chars.next();
                    line += 1;
                    col = 1;
                }
                c if c.is_whitespace() => {
                    chars.next();
                    col += 1;
                }
                '*' | '^' | ',' | '(' | ')' => {
                    chars.next();
                    col += 1;
                    let t = match c {
                        '*' => Tok::Star,
                        '^' => Tok::Caret,
                        ',' => Tok::Comma,
                        '(' => Tok::LParen,
                        _ => Tok::RParen,
                    };
                    toks.push((t, here.0, here.1));
                }
                c if c.is_ascii_digit() => {
                    let mut s = String::new();
                    while let Some(&d) = chars.peek() {
                        if d.is_ascii_digit() {
                            s.push(d);
                            chars.next();
                            col += 1;
                        } else {
                            break;
                        }
                    }
                    let n: u64 = s.parse().map_err(|_| Error::Parse {
                        line: here.0,
                        col: here.1,
                        msg: format!("integer `{s}` out of range"),
                    })?;
                    toks.push((Tok::Int(n), here.0, here.1));
                }
                c if is_ident_start(c) => {
                    let mut s = String::new();
                    while let Some(&d) = chars.peek() {
                        if is_ident_char(d) {
                            s.push(d);
                            chars.next();
                            col += 1;
                        } else {
                            break;
                        }
                    }
                    toks.push((Tok::Ident(s), here.0, here.1));
                }
                other => {
                    return Err(Error::Parse {
                        line,
                        col,
                        msg: format!("unexpected character `{other}`"),
                    })
                }
            }
        }
        Ok(Lexer {
            toks,
            pos: 0,
            end: (line, col),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _, _)| t)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|&(_, l, c)| (l, c))
            .unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self.here();
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.peek() == Some(&t) {
            self.next();
            Ok(())
        } else {
            Err(self.err(format!("expected {t:?}")))
        }
    }

    fn at_end(&self) -> bool {
        self.pos == self.toks.len()
    }
}

/// One monomial factor: `ident`, `ident^int`, or the constant `1`.
fn parse_factor(lx: &mut Lexer, vars: &VarSet) -> Result<Monomial> {
    match lx.next() {
        Some(Tok::Int(1)) => Ok(Monomial::one(vars)),
        Some(Tok::Ident(name)) => {
            let i = vars.index_of(&name).ok_or_else(|| {
                let (line, col) = lx.here();
                Error::Parse {
                    line,
                    col,
                    msg: format!("unknown variable `{name}`"),
                }
            })?;
            let mut e = 1u32;
            if lx.peek() == Some(&Tok::Caret) {
                lx.next();
                match lx.next() {
                    Some(Tok::Int(n)) if n <= u64::from(u32::MAX) => e = n as u32,
                    _ => return Err(lx.err("expected an exponent after `^`")),
                }
            }
            let mut exp = vec![0u32; vars.len()];
            exp[i] = e;
            Monomial::from_exponents(vars, exp)
        }
        _ => Err(lx.err("expected a variable or `1`")),
    }
}

fn parse_monomial_toks(lx: &mut Lexer, vars: &VarSet) -> Result<Monomial> {
    let mut m = parse_factor(lx, vars)?;
    while lx.peek() == Some(&Tok::Star) {
        lx.next();
        let f = parse_factor(lx, vars)?;
        m = m.checked_mul(&f)?;
    }
    Ok(m)
}

/// Parse a whole string as one monomial over `vars`.
pub fn parse_monomial(vars: &VarSet, input: &str) -> Result<Monomial> {
    let mut lx = Lexer::new(input, 1)?;
    let m = parse_monomial_toks(&mut lx, vars)?;
    if !lx.at_end() {
        return Err(lx.err("trailing input after monomial"));
    }
    Ok(m)
}

/// Parse `(m1, m2, ...)`, `(0)`, `(1)`, or `()` over a known variable set.
pub fn parse_ideal_with_vars(vars: &VarSet, input: &str) -> Result<MonomialIdeal> {
    parse_ideal_body(vars, input, 1)
}

fn parse_ideal_body(vars: &VarSet, input: &str, start_line: usize) -> Result<MonomialIdeal> {
    let mut lx = Lexer::new(input, start_line)?;
    lx.expect(Tok::LParen)?;
    if lx.peek() == Some(&Tok::RParen) {
        lx.next();
        return finish_ideal(lx, MonomialIdeal::zero(vars));
    }
    if lx.peek() == Some(&Tok::Int(0)) {
        lx.next();
        lx.expect(Tok::RParen)?;
        return finish_ideal(lx, MonomialIdeal::zero(vars));
    }
    let mut gens = Vec::new();
    loop {
        gens.push(parse_monomial_toks(&mut lx, vars)?);
        match lx.next() {
            Some(Tok::Comma) => continue,
            Some(Tok::RParen) => break,
            _ => return Err(lx.err("expected `,` or `)`")),
        }
    }
    finish_ideal(lx, MonomialIdeal::new(vars, gens)?)
}

fn finish_ideal(lx: Lexer, ideal: MonomialIdeal) -> Result<MonomialIdeal> {
    if !lx.at_end() {
        return Err(lx.err("trailing input after ideal"));
    }
    Ok(ideal)
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parse an ideal file: optional comments, an optional `vars:` header, and
/// one parenthesized ideal. Without a header the variables are the names
/// appearing in the generators, sorted.
pub fn parse_ideal(input: &str) -> Result<(VarSet, MonomialIdeal)> {
    let mut header: Option<(Vec<String>, usize)> = None;
    let mut body = String::new();
    let mut body_line = 1;
    for (idx, raw) in input.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars:") {
            if header.is_some() || !body.is_empty() {
                return Err(Error::Parse {
                    line: idx + 1,
                    col: 1,
                    msg: "vars: header must come first".into(),
                });
            }
            header = Some((
                rest.split_whitespace().map(str::to_string).collect(),
                idx + 1,
            ));
            continue;
        }
        if body.is_empty() {
            body_line = idx + 1;
        }
        body.push_str(line);
        body.push('\n');
    }
    if body.is_empty() {
        return Err(Error::Parse {
            line: input.lines().count().max(1),
            col: 1,
            msg: "expected an ideal".into(),
        });
    }
    let vars = match header {
        Some((names, _)) => VariableSet::new(names)?,
        None => {
            let mut names: Vec<String> = Lexer::new(&body, body_line)?
                .toks
                .into_iter()
                .filter_map(|(t, _, _)| match t {
                    Tok::Ident(s) => Some(s),
                    _ => None,
                })
                .collect();
            names.sort();
            names.dedup();
            VariableSet::new(names)?
        }
    };
    let ideal = parse_ideal_body(&vars, &body, body_line)?;
    Ok((vars, ideal))
}

/// Canonical ideal file: `vars:` header plus the generator list, so that
/// parse -> render -> parse is the identity.
pub fn render_ideal_file(ideal: &MonomialIdeal) -> String {
    format!("vars: {}\n{}\n", ideal.vars(), ideal)
}

/// Parse a hypergraph file. Without a `vertices:` header the vertex order is
/// the order of first appearance in the edge lines.
pub fn parse_hypergraph(input: &str) -> Result<Hypergraph> {
    let mut header: Option<Vec<String>> = None;
    let mut edge_lines: Vec<(usize, Vec<String>)> = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertices:") {
            if header.is_some() || !edge_lines.is_empty() {
                return Err(Error::Parse {
                    line: idx + 1,
                    col: 1,
                    msg: "vertices: header must come first".into(),
                });
            }
            header = Some(rest.split_whitespace().map(str::to_string).collect());
            continue;
        }
        let names: Vec<String> = line.split_whitespace().map(str::to_string).collect();
        edge_lines.push((idx + 1, names));
    }
    let vars = match &header {
        Some(names) => VariableSet::new(names.clone())?,
        None => {
            let mut names: Vec<String> = Vec::new();
            for (_, edge) in &edge_lines {
                for n in edge {
                    if !names.contains(n) {
                        names.push(n.clone());
                    }
                }
            }
            VariableSet::new(names)?
        }
    };
    let mut masks = Vec::new();
    for (line, edge) in &edge_lines {
        let mut mask = 0u64;
        for n in edge {
            let i = vars.index_of(n).ok_or(Error::Parse {
                line: *line,
                col: 1,
                msg: format!("unknown vertex `{n}`"),
            })?;
            mask |= 1 << i;
        }
        masks.push(mask);
    }
    Hypergraph::from_edge_masks(&vars, masks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_round_trip() {
        let v = VariableSet::new(["x", "y", "z"]).unwrap();
        for s in ["x^2*y*z^3", "1", "z", "x*z^2"] {
            let m = parse_monomial(&v, s).unwrap();
            assert_eq!(m.to_string(), s);
        }
    }

    #[test]
    fn repeated_factors_accumulate() {
        let v = VariableSet::new(["x"]).unwrap();
        let m = parse_monomial(&v, "x*x^2").unwrap();
        assert_eq!(m.to_string(), "x^3");
    }

    #[test]
    fn ideal_file_with_header() {
        let (vars, ideal) = parse_ideal("# edge ideal\nvars: a b c\n(a*b, b*c)\n").unwrap();
        assert_eq!(vars.names(), &["a", "b", "c"]);
        assert_eq!(ideal.to_string(), "(a*b, b*c)");
    }

    #[test]
    fn ideal_file_inferred_vars_are_sorted() {
        let (vars, ideal) = parse_ideal("(b*a, c)").unwrap();
        assert_eq!(vars.names(), &["a", "b", "c"]);
        assert_eq!(ideal.to_string(), "(c, a*b)");
    }

    #[test]
    fn zero_and_unit() {
        let (_, z) = parse_ideal("vars: a b\n(0)").unwrap();
        assert!(z.is_zero());
        let (_, u) = parse_ideal("vars: a b\n(1)").unwrap();
        assert!(u.is_unit());
    }

    #[test]
    fn render_round_trip() {
        let (_, ideal) = parse_ideal("vars: a b c\n(a*b, b*c)").unwrap();
        let rendered = render_ideal_file(&ideal);
        let (_, again) = parse_ideal(&rendered).unwrap();
        assert_eq!(ideal, again);
    }

    #[test]
    fn parse_error_positions() {
        let err = parse_ideal("vars: a b\n(a*b,, b)").unwrap_err();
        match err {
            Error::Parse { line, col, .. } => {
                assert_eq!(line, 2);
                assert!(col > 1);
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn hypergraph_file() {
        let g = parse_hypergraph("vertices: a b c\n# a triangle\na b\nb c\na c\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.vars().names(), &["a", "b", "c"]);
        let again = parse_hypergraph(&g.to_string()).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn hypergraph_without_header_uses_appearance_order() {
        let g = parse_hypergraph("b a\nc a\n").unwrap();
        assert_eq!(g.vars().names(), &["b", "a", "c"]);
    }
}
