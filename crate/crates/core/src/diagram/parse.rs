//! The diagram DSL: `EXPR ::= EXPR ; EXPR | EXPR * EXPR | ATOM | ( EXPR )`
//! with `*` binding tighter than `;`. Bracketed arguments are object or
//! morphism expressions over the names in an [`Env`].

use std::collections::BTreeMap;

use super::ir::{times, Diagram, Gen, MExpr, MTerm, RawWire};
use crate::error::{mismatch, Error, Result};
use crate::fincat::{structure as st, Monad, Morphism, Obj};
use crate::optic::Optic;
use crate::tambara::Dir;

/// Declarations visible to the parser.
#[derive(Clone, Debug, Default)]
pub struct Env {
    pub objects: BTreeMap<String, Obj>,
    pub maps: BTreeMap<String, Morphism>,
    pub optics: BTreeMap<String, Optic>,
    pub cells: BTreeMap<String, (Vec<RawWire>, Vec<RawWire>)>,
    pub monads: BTreeMap<String, Monad>,
}

impl Env {
    /// `I`, declared sets, and bare numerals for skeletal objects.
    pub fn object(&self, name: &str) -> Option<Obj> {
        if name == "I" {
            return Some(Obj::unit());
        }
        if let Some(o) = self.objects.get(name) {
            return Some(o.clone());
        }
        name.parse::<usize>().ok().filter(|&n| n >= 1).and_then(|n| Obj::skeletal(n).ok())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Punct(char),
    End,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

/// Split `text` into tokens, positions counted from `(line, col)`.
pub fn tokenize(text: &str, line: usize, col: usize) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut l, mut c) = (line, col);
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch == '\n' {
            l += 1;
            c = 1;
            i += 1;
            continue;
        }
        if ch.is_whitespace() {
            c += 1;
            i += 1;
            continue;
        }
        if ch == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if ch.is_alphanumeric() || ch == '_' || ch == '\'' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), line: l, col: c });
            c += i - start;
            continue;
        }
        if ";*[](),<>=:{}|@-.".contains(ch) {
            out.push(Token { tok: Tok::Punct(ch), line: l, col: c });
            c += 1;
            i += 1;
            continue;
        }
        return Err(Error::Parse { line: l, col: c, msg: format!("unexpected character '{ch}'") });
    }
    out.push(Token { tok: Tok::End, line: l, col: c });
    Ok(out)
}

/// A cursor over tokens with error helpers.
pub struct Cursor<'a> {
    toks: &'a [Token],
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(toks: &'a [Token]) -> Cursor<'a> {
        Cursor { toks, pos: 0 }
    }

    pub fn peek(&self) -> &Token {
        &self.toks[self.pos.min(self.toks.len() - 1)]
    }

    pub fn advance(&mut self) -> Token {
        let t = self.peek().clone();
        if self.pos < self.toks.len() - 1 {
            self.pos += 1;
        }
        t
    }

    pub fn at_end(&self) -> bool {
        self.peek().tok == Tok::End
    }

    pub fn error(&self, msg: impl Into<String>) -> Error {
        let t = self.peek();
        Error::Parse { line: t.line, col: t.col, msg: msg.into() }
    }

    pub fn is_punct(&self, c: char) -> bool {
        self.peek().tok == Tok::Punct(c)
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.is_punct(c) {
            self.advance();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}', found {}", describe(&self.peek().tok))))
        }
    }

    pub fn ident(&mut self) -> Result<(String, usize, usize)> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Ident(s) => {
                self.advance();
                Ok((s, t.line, t.col))
            }
            other => Err(self.error(format!("expected a name, found {}", describe(&other)))),
        }
    }

    pub fn keyword(&mut self, kw: &str) -> Result<()> {
        let (s, line, col) = self.ident()?;
        if s != kw {
            return Err(Error::Parse { line, col, msg: format!("expected '{kw}', found '{s}'") });
        }
        Ok(())
    }

    pub fn finish(&self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error(format!("unexpected {}", describe(&self.peek().tok))))
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("'{s}'"),
        Tok::Punct(c) => format!("'{c}'"),
        Tok::End => "end of input".into(),
    }
}

/// `NAME | ( O ) | O * O`
pub fn object_expr(cur: &mut Cursor, env: &Env) -> Result<Obj> {
    let mut o = object_atom(cur, env)?;
    while cur.eat('*') {
        let rhs = object_atom(cur, env)?;
        o = Obj::product(&o, &rhs)?;
    }
    Ok(o)
}

fn object_atom(cur: &mut Cursor, env: &Env) -> Result<Obj> {
    if cur.eat('(') {
        let o = object_expr(cur, env)?;
        cur.expect(')')?;
        return Ok(o);
    }
    let (name, line, col) = cur.ident()?;
    env.object(&name).ok_or(Error::UnknownIdentifier { line, col, name })
}

/// `M ; M`, `M * M`, names, `id(O)`, `diag(O)`, `bang(O)`, `swap(O,O)`,
/// `fst(O,O)`, `snd(O,O)`, `<M, M>`.
pub fn morphism_expr(cur: &mut Cursor, env: &Env) -> Result<MTerm> {
    let mut t = morphism_prod(cur, env)?;
    while cur.eat(';') {
        let rhs = morphism_prod(cur, env)?;
        t = t.then(&rhs)?;
    }
    Ok(t)
}

fn morphism_prod(cur: &mut Cursor, env: &Env) -> Result<MTerm> {
    let mut t = morphism_atom(cur, env)?;
    while cur.eat('*') {
        let rhs = morphism_atom(cur, env)?;
        t = MTerm { expr: MExpr::Times(Box::new(t.expr), Box::new(rhs.expr)), f: times(&t.f, &rhs.f)? };
    }
    Ok(t)
}

fn morphism_atom(cur: &mut Cursor, env: &Env) -> Result<MTerm> {
    if cur.eat('(') {
        let t = morphism_expr(cur, env)?;
        cur.expect(')')?;
        return Ok(t);
    }
    if cur.eat('<') {
        let a = morphism_expr(cur, env)?;
        cur.expect(',')?;
        let b = morphism_expr(cur, env)?;
        cur.expect('>')?;
        let f = st::pairing(&a.f, &b.f)?;
        return Ok(MTerm { expr: MExpr::Pair(Box::new(a.expr), Box::new(b.expr)), f });
    }
    let (name, line, col) = cur.ident()?;
    let builtin = matches!(name.as_str(), "id" | "diag" | "bang" | "swap" | "fst" | "snd");
    if builtin && cur.is_punct('(') && !env.maps.contains_key(&name) {
        cur.expect('(')?;
        let a = object_expr(cur, env)?;
        let b = if cur.eat(',') { Some(object_expr(cur, env)?) } else { None };
        cur.expect(')')?;
        let two = |b: Option<Obj>| b.ok_or_else(|| Error::Parse { line, col, msg: format!("{name} takes two objects") });
        let one = |b: &Option<Obj>| match b {
            Some(_) => Err(Error::Parse { line, col, msg: format!("{name} takes one object") }),
            None => Ok(()),
        };
        return Ok(match name.as_str() {
            "id" => {
                one(&b)?;
                MTerm::id(&a)
            }
            "diag" => {
                one(&b)?;
                MTerm { expr: MExpr::Diag(a.clone()), f: st::diag(&a)? }
            }
            "bang" => {
                one(&b)?;
                MTerm { expr: MExpr::Bang(a.clone()), f: st::bang(&a) }
            }
            "swap" => {
                let b = two(b)?;
                MTerm { expr: MExpr::Swap(a.clone(), b.clone()), f: st::swap(&a, &b)? }
            }
            "fst" => MTerm::fst(&a, &two(b)?)?,
            _ => MTerm::snd(&a, &two(b)?)?,
        });
    }
    match env.maps.get(&name) {
        Some(f) => Ok(MTerm::named(&name, f.clone())),
        None => Err(Error::UnknownIdentifier { line, col, name }),
    }
}

/// Parse a whole diagram expression.
pub fn parse_diagram(text: &str, env: &Env) -> Result<Diagram> {
    parse_diagram_at(text, env, 1, 1)
}

/// Parse with positions offset to `(line, col)`, for text embedded in a file.
pub fn parse_diagram_at(text: &str, env: &Env, line: usize, col: usize) -> Result<Diagram> {
    let toks = tokenize(text, line, col)?;
    let mut cur = Cursor::new(&toks);
    let d = diagram_expr(&mut cur, env)?;
    cur.finish()?;
    Ok(d)
}

pub fn diagram_expr(cur: &mut Cursor, env: &Env) -> Result<Diagram> {
    let mut d = diagram_tensor(cur, env)?;
    while cur.eat(';') {
        let rhs = diagram_tensor(cur, env)?;
        d = d.then(rhs);
    }
    Ok(d)
}

fn diagram_tensor(cur: &mut Cursor, env: &Env) -> Result<Diagram> {
    let mut d = diagram_atom(cur, env)?;
    while cur.eat('*') {
        let rhs = diagram_atom(cur, env)?;
        d = d.tensor(rhs)?;
    }
    Ok(d)
}

fn diagram_atom(cur: &mut Cursor, env: &Env) -> Result<Diagram> {
    if cur.eat('(') {
        let d = diagram_expr(cur, env)?;
        cur.expect(')')?;
        return Ok(d);
    }
    let (kw, line, col) = cur.ident()?;
    if kw == "id" {
        return Ok(Diagram::single(Gen::Id));
    }
    cur.expect('[')?;
    let g = match kw.as_str() {
        "r" => Gen::BoxR(morphism_expr(cur, env)?),
        "l" => Gen::BoxL(morphism_expr(cur, env)?),
        "wr" => Gen::WireR(object_expr(cur, env)?),
        "wl" => Gen::WireL(object_expr(cur, env)?),
        "cap" => Gen::Cap(object_expr(cur, env)?),
        "cup" => Gen::Cup(object_expr(cur, env)?),
        "dup" => Gen::Dup(object_expr(cur, env)?),
        "del" => Gen::Del(object_expr(cur, env)?),
        "swap" => {
            let x = object_expr(cur, env)?;
            cur.expect(',')?;
            Gen::Swap(x, object_expr(cur, env)?)
        }
        "optic" => {
            let (name, l2, c2) = cur.ident()?;
            match env.optics.get(&name) {
                Some(o) => Gen::Optic(name, o.clone()),
                None => return Err(Error::UnknownIdentifier { line: l2, col: c2, name }),
            }
        }
        "cell" => {
            let (name, l2, c2) = cur.ident()?;
            match env.cells.get(&name) {
                Some((ins, outs)) => Gen::Cell(name, ins.clone(), outs.clone()),
                None => return Err(Error::UnknownIdentifier { line: l2, col: c2, name }),
            }
        }
        _ => return Err(Error::Parse { line, col, msg: format!("unknown generator '{kw}'") }),
    };
    cur.expect(']')?;
    Ok(Diagram::single(g))
}

/// `R O, L O, ...` for abstract cell declarations; empty for `id`.
pub fn wire_list(cur: &mut Cursor, env: &Env) -> Result<Vec<RawWire>> {
    let mut out = Vec::new();
    if cur.peek().tok == Tok::Ident("id".into()) {
        cur.advance();
        return Ok(out);
    }
    loop {
        let (d, line, col) = cur.ident()?;
        let dir = match d.as_str() {
            "R" => Dir::R,
            "L" => Dir::L,
            _ => return Err(Error::Parse { line, col, msg: format!("expected R or L, found '{d}'") }),
        };
        out.push((dir, object_expr(cur, env)?));
        if !cur.eat(',') {
            return Ok(out);
        }
    }
}

/// Reject a morphism whose ends are not the expected objects.
pub fn check_ends(t: &MTerm, src: &Obj, tgt: &Obj) -> Result<()> {
    if t.f.src() != src || t.f.tgt() != tgt {
        return Err(mismatch(format!("{} : {} -> {} is not {src} -> {tgt}", t.expr, t.f.src(), t.f.tgt())));
    }
    Ok(())
}
