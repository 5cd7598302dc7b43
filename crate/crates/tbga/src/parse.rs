//! Textual grammars: group specifications, group-algebra elements, and
//! modular polynomials.
//!
//! Group specs: `C36`, `D6`, `M(5,8,4)`, products like `C4xC2` (left
//! associative), `perm:(1,2,3)(4,5);(1,2)` and `table:PATH` (these two
//! consume the rest of the spec). Elements: `1 + r^9 + s*r^4`, with optional
//! scalar coefficients `2*x` for odd characteristic and signed exponents.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::group::{GroupTable, DEFAULT_CLOSURE_CAP};
use crate::poly::Poly;

fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

/// Parses a group specification string.
pub fn parse_group_spec(s: &str) -> Result<Arc<GroupTable>> {
    let t = s.trim();
    if let Some(rest) = t.strip_prefix("perm:") {
        return Ok(parse_permutation_group(rest)?.into_arc());
    }
    if let Some(path) = t.strip_prefix("table:") {
        return Ok(parse_table_file(path.trim())?.into_arc());
    }
    // product of atoms, split on 'x' at top level (atoms contain no 'x')
    let mut result: Option<GroupTable> = None;
    let mut pos = 0usize;
    for part in t.split('x') {
        let atom = parse_atom(part.trim(), pos)?;
        result = Some(match result {
            None => atom,
            Some(acc) => acc.direct_product(&atom),
        });
        pos += part.len() + 1;
    }
    match result {
        Some(g) => Ok(g.into_arc()),
        None => Err(parse_err(0, "empty group spec")),
    }
}

fn parse_atom(s: &str, pos: usize) -> Result<GroupTable> {
    if s.is_empty() {
        return Err(parse_err(pos, "empty group atom"));
    }
    if let Some(n) = s.strip_prefix('C') {
        let n: usize = n
            .parse()
            .map_err(|_| parse_err(pos + 1, format!("bad cyclic order `{n}`")))?;
        return GroupTable::cyclic(n);
    }
    if let Some(n) = s.strip_prefix('D') {
        let n: usize = n
            .parse()
            .map_err(|_| parse_err(pos + 1, format!("bad dihedral parameter `{n}`")))?;
        return GroupTable::dihedral(n);
    }
    if let Some(body) = s.strip_prefix("M(").and_then(|b| b.strip_suffix(')')) {
        let nums: Vec<&str> = body.split(',').map(str::trim).collect();
        if nums.len() != 3 {
            return Err(parse_err(pos, "M(...) takes three integers m,n,t"));
        }
        let vals: Vec<usize> = nums
            .iter()
            .map(|x| {
                x.parse()
                    .map_err(|_| parse_err(pos, format!("bad integer `{x}` in M(...)")))
            })
            .collect::<Result<_>>()?;
        return GroupTable::metacyclic(vals[0], vals[1], vals[2]);
    }
    Err(parse_err(
        pos,
        format!("unrecognized group atom `{s}` (expected C<n>, D<n>, M(m,n,t), perm:, table:)"),
    ))
}

/// Cycle notation: semicolon-separated generators, each a product of cycles
/// `(1,2,3)(4,5)` on 1-based points; an optional `name=` prefix names the
/// generator.
pub fn parse_permutation_group(s: &str) -> Result<GroupTable> {
    let mut gens: Vec<Vec<usize>> = Vec::new();
    let mut names: Vec<String> = Vec::new();
    let mut cycles_list: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut degree = 0usize;
    for (gi, part) in s.split(';').enumerate() {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (name, body) = match part.split_once('=') {
            Some((n, b)) => (n.trim().to_string(), b.trim()),
            None => (format!("g{}", gi + 1), part),
        };
        let cycles = parse_cycles(body)?;
        for c in &cycles {
            for &p in c {
                degree = degree.max(p);
            }
        }
        names.push(name);
        cycles_list.push(cycles);
    }
    for cycles in &cycles_list {
        let mut perm: Vec<usize> = (0..degree).collect();
        for c in cycles {
            // cycle (a, b, c): a -> b -> c -> a, 0-based
            for w in 0..c.len() {
                perm[c[w] - 1] = c[(w + 1) % c.len()] - 1;
            }
        }
        gens.push(perm);
    }
    GroupTable::from_permutations(degree, &gens, Some(&names), DEFAULT_CLOSURE_CAP)
}

fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    if rest == "()" || rest.is_empty() {
        return Ok(cycles);
    }
    while !rest.is_empty() {
        let Some(start) = rest.find('(') else {
            return Err(parse_err(0, format!("expected `(` in cycles near `{rest}`")));
        };
        let Some(end) = rest.find(')') else {
            return Err(parse_err(0, "unclosed cycle"));
        };
        let body = &rest[start + 1..end];
        let mut cycle = Vec::new();
        let mut seen = BTreeSet::new();
        for tok in body.split(',') {
            let p: usize = tok
                .trim()
                .parse()
                .map_err(|_| parse_err(0, format!("bad point `{tok}` in cycle")))?;
            if p == 0 || !seen.insert(p) {
                return Err(parse_err(0, format!("invalid point {p} in cycle")));
            }
            cycle.push(p);
        }
        if cycle.len() >= 2 {
            cycles.push(cycle);
        }
        rest = rest[end + 1..].trim();
    }
    Ok(cycles)
}

/// Group table file: line 1 is the order, then one row of 0-based indices per
/// line; element 0 must be the identity.
pub fn parse_table_file(path: &str) -> Result<GroupTable> {
    let text = std::fs::read_to_string(path)?;
    parse_table_text(&text)
}

pub fn parse_table_text(text: &str) -> Result<GroupTable> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let order: usize = lines
        .next()
        .ok_or_else(|| parse_err(0, "empty table"))?
        .trim()
        .parse()
        .map_err(|_| parse_err(0, "first line must be the group order"))?;
    let mut mul = Vec::with_capacity(order * order);
    for (i, line) in lines.enumerate() {
        if i >= order {
            return Err(parse_err(0, format!("more than {order} table rows")));
        }
        for tok in line.split_whitespace() {
            let v: u32 = tok
                .parse()
                .map_err(|_| parse_err(0, format!("bad table entry `{tok}`")))?;
            mul.push(v);
        }
    }
    if mul.len() != order * order {
        return Err(Error::DimensionMismatch {
            expected: order * order,
            got: mul.len(),
        });
    }
    GroupTable::from_table(mul, vec![])
}

// ---------------------------------------------------------------------------
// algebra element grammar

struct Lexer<'s> {
    src: &'s [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Star,
    Caret,
    Int(i64),
    Name(String),
    End,
}

impl<'s> Lexer<'s> {
    fn new(s: &'s str) -> Self {
        Lexer {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek_pos(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }

    fn next(&mut self, allow_sign: bool) -> Result<Tok> {
        self.skip_ws();
        let Some(&c) = self.src.get(self.pos) else {
            return Ok(Tok::End);
        };
        match c {
            b'+' => {
                self.pos += 1;
                Ok(Tok::Plus)
            }
            b'*' => {
                self.pos += 1;
                Ok(Tok::Star)
            }
            b'^' => {
                self.pos += 1;
                Ok(Tok::Caret)
            }
            b'-' if allow_sign => {
                self.pos += 1;
                match self.next(false)? {
                    Tok::Int(v) => Ok(Tok::Int(-v)),
                    _ => Err(parse_err(self.pos, "expected integer after `-`")),
                }
            }
            b'0'..=b'9' => {
                let start = self.pos;
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|b| b.is_ascii_digit())
                {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).expect("digits");
                text.parse()
                    .map(Tok::Int)
                    .map_err(|_| parse_err(start, "integer overflow"))
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
                {
                    self.pos += 1;
                }
                Ok(Tok::Name(
                    std::str::from_utf8(&self.src[start..self.pos])
                        .expect("ascii")
                        .to_string(),
                ))
            }
            other => Err(parse_err(
                self.pos,
                format!("unexpected character `{}`", other as char),
            )),
        }
    }
}

/// Parses a group-algebra element: terms joined by `+`, each term an optional
/// coefficient times a word of generator powers. Repeated group elements
/// accumulate mod p.
pub fn parse_algebra_elem(
    s: &str,
    group: &Arc<GroupTable>,
    field: PrimeField,
) -> Result<AlgebraElement> {
    let mut lx = Lexer::new(s);
    let mut terms: Vec<(u32, u8)> = Vec::new();
    loop {
        let (g, c) = parse_term(&mut lx, group, field)?;
        terms.push((g, c));
        let pos = lx.peek_pos();
        match lx.next(false)? {
            Tok::Plus => continue,
            Tok::End => break,
            t => return Err(parse_err(pos, format!("expected `+` or end, got {t:?}"))),
        }
    }
    Ok(AlgebraElement::from_terms(group.clone(), field, &terms))
}

fn parse_term(
    lx: &mut Lexer<'_>,
    group: &Arc<GroupTable>,
    field: PrimeField,
) -> Result<(u32, u8)> {
    let pos = lx.peek_pos();
    match lx.next(false)? {
        Tok::Int(v) => {
            let coeff = field.reduce(v);
            // either a bare scalar (identity term) or coeff * word
            let save = lx.pos;
            match lx.next(false)? {
                Tok::Star => {
                    let (g, c) = parse_word(lx, group, field)?;
                    Ok((g, field.mul(coeff, c)))
                }
                _ => {
                    lx.pos = save;
                    Ok((0, coeff))
                }
            }
        }
        Tok::Name(_) => {
            lx.pos = pos; // rewind; parse_word consumes the name itself
            parse_word(lx, group, field)
        }
        t => Err(parse_err(pos, format!("expected term, got {t:?}"))),
    }
}

/// word := factor ('*' factor)*, factors multiplied left to right.
fn parse_word(
    lx: &mut Lexer<'_>,
    group: &Arc<GroupTable>,
    field: PrimeField,
) -> Result<(u32, u8)> {
    let mut acc = group.id();
    let coeff = 1u8;
    loop {
        let pos = lx.peek_pos();
        let tok = lx.next(false)?;
        let Tok::Name(name) = tok else {
            return Err(parse_err(pos, "expected generator name"));
        };
        let Some(base) = group.generator(&name) else {
            return Err(Error::UnknownGenerator(name));
        };
        // optional exponent
        let save = lx.pos;
        let elem = match lx.next(false)? {
            Tok::Caret => {
                let epos = lx.peek_pos();
                match lx.next(true)? {
                    Tok::Int(e) => group.pow(base, e),
                    _ => return Err(parse_err(epos, "expected integer exponent")),
                }
            }
            _ => {
                lx.pos = save;
                base
            }
        };
        acc = group.mul(acc, elem);
        let save = lx.pos;
        match lx.next(false)? {
            Tok::Star => continue,
            _ => {
                lx.pos = save;
                break;
            }
        }
    }
    let _ = field;
    Ok((acc, coeff))
}

/// Parses a modular polynomial in `x` (alias `r`) such as `1 + x^3 + x^7`,
/// reducing exponents mod n.
pub fn parse_poly(s: &str, n: usize, field: PrimeField) -> Result<Poly> {
    let g = GroupTable::cyclic(n)?.into_arc();
    let e = parse_algebra_elem(s, &g, field)?;
    let mut coeffs = vec![0u8; n];
    for (idx, c) in e.terms() {
        coeffs[idx as usize] = c;
    }
    Ok(Poly::new(field, coeffs))
}
