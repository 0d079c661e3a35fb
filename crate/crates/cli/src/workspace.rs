//! `.optic` workspace files.
//!
//! A declaration starts at column 1 and continues over indented lines; `#`
//! starts a comment. Names are declared once and may only be used after
//! their declaration.

use std::collections::BTreeMap;

use opticforge::diagram::parse::{diagram_expr, morphism_expr, object_expr, tokenize, wire_list, Cursor, Tok};
use opticforge::diagram::{Diagram, Env};
use opticforge::fincat::{Bounds, Cat, Elem, Monad, MonadKind, Morphism, Obj, Shape, TVal};
use opticforge::optic::{from_lens, Flavor, Lens, Optic};
use opticforge::tambara::Universe;
use opticforge::Error;

use crate::error::{CliError, CliResult};

pub const DEFAULT_BOUND: usize = 16;
pub const BOUND_VAR: &str = "OPTICFORGE_UNIVERSE_BOUND";

/// `universe cards LO..HI bound N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniverseDecl {
    pub lo: usize,
    pub hi: usize,
    /// Largest cardinality a declared set may have.
    pub bound: usize,
}

/// An optic hom-set `(x,u) -> (y,v)`, optionally in the Kleisli flavor of a
/// monad.
#[derive(Clone, Debug)]
pub struct Hom {
    pub x: Obj,
    pub u: Obj,
    pub y: Obj,
    pub v: Obj,
    pub monad: Option<Monad>,
}

impl Hom {
    pub fn flavor(&self) -> Flavor {
        match &self.monad {
            Some(t) => Flavor::Mixed(t.clone()),
            None => Flavor::Cartesian,
        }
    }
}

impl std::fmt::Display for Hom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{}) -> ({},{})", self.x, self.u, self.y, self.v)?;
        if let Some(t) = &self.monad {
            write!(f, " [{t}]")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub enum Expect {
    Equal(String, String),
    Distinct(String, String),
    Lawful(String),
    Unlawful(String),
    Count(Hom, usize),
}

#[derive(Clone, Debug)]
pub struct Expectation {
    pub line: usize,
    pub expect: Expect,
}

#[derive(Clone, Debug)]
pub struct NamedDiagram {
    pub name: String,
    pub line: usize,
    pub diagram: Diagram,
}

#[derive(Clone, Debug)]
pub struct Workspace {
    pub env: Env,
    /// Declared sets in declaration order, with their lines.
    pub sets: Vec<(Obj, usize)>,
    pub lenses: BTreeMap<String, Lens>,
    pub diagrams: Vec<NamedDiagram>,
    pub expects: Vec<Expectation>,
    pub universe: UniverseDecl,
    /// Kind and line of every declared name.
    pub names: BTreeMap<String, (&'static str, usize)>,
}

impl Workspace {
    pub fn parse(text: &str) -> CliResult<Workspace> {
        let decls = split(text)?;
        let later: BTreeMap<String, usize> = decls.iter().filter_map(|d| declared_name(d).map(|n| (n, d.line))).collect();
        let mut ws = Workspace {
            env: Env::default(),
            sets: Vec::new(),
            lenses: BTreeMap::new(),
            diagrams: Vec::new(),
            expects: Vec::new(),
            universe: UniverseDecl { lo: 1, hi: 4, bound: default_bound() },
            names: BTreeMap::new(),
        };
        let mut universe_line = None;
        for d in &decls {
            let res = ws.declaration(d, &mut universe_line);
            if let Err(e) = res {
                return Err(forward_reference(e, &later, d.line));
            }
        }
        for (s, line) in &ws.sets {
            if s.card() > ws.universe.bound {
                return Err(CliError::at(
                    *line,
                    Error::BoundExceeded {
                        what: format!("set {s} (universe bound {})", ws.universe.bound),
                        size: s.card() as u128,
                        limit: ws.universe.bound as u128,
                    },
                ));
            }
        }
        Ok(ws)
    }

    /// The universe: skeletal objects of the directive plus every declared set.
    pub fn universe(&self) -> CliResult<Universe> {
        let base = Universe::cards(self.universe.lo, self.universe.hi)?;
        let sets: Vec<Obj> = self.sets.iter().map(|(s, _)| s.clone()).collect();
        Ok(base.with(&sets))
    }

    /// Library bounds in force while working on this file.
    pub fn bounds(&self) -> Bounds {
        let d = Bounds::default();
        Bounds { max_card: d.max_card.max(self.universe.bound as u64), ..d }
    }

    pub fn diagram(&self, name: &str) -> CliResult<&NamedDiagram> {
        self.diagrams.iter().find(|d| d.name == name).ok_or_else(|| unknown(name))
    }

    pub fn optic(&self, name: &str) -> CliResult<&Optic> {
        self.env.optics.get(name).ok_or_else(|| unknown(name))
    }

    /// Parse `(X,U) -> (Y,V)` with an optional `[T]`.
    pub fn parse_hom(&self, text: &str) -> CliResult<Hom> {
        let toks = tokenize(text, 1, 1)?;
        let mut cur = Cursor::new(&toks);
        let h = hom(&mut cur, &self.env)?;
        cur.finish()?;
        Ok(h)
    }

    fn declare(&mut self, name: &str, kind: &'static str, line: usize, col: usize) -> Result<(), Error> {
        if let Some((k, l)) = self.names.get(name) {
            return Err(Error::Parse { line, col, msg: format!("`{name}` is already declared as a {k} at line {l}") });
        }
        if matches!(name, "I" | "id") || name.parse::<usize>().is_ok() {
            return Err(Error::Parse { line, col, msg: format!("`{name}` is reserved") });
        }
        self.names.insert(name.to_string(), (kind, line));
        Ok(())
    }

    fn declaration(&mut self, d: &Decl, universe_line: &mut Option<usize>) -> CliResult<()> {
        let toks = tokenize(&d.text, d.line, 1)?;
        let mut cur = Cursor::new(&toks);
        let (kw, line, col) = cur.ident()?;
        let at = |e: Error| CliError::at(line, e);
        match kw.as_str() {
            "monad" => {
                let (name, l, c) = cur.ident()?;
                cur.expect('=')?;
                let t = self.monad_body(&mut cur, &name).map_err(at)?;
                self.declare(&name, "monad", l, c)?;
                self.env.monads.insert(name, t);
            }
            "set" => {
                let (name, l, c) = cur.ident()?;
                cur.expect('=')?;
                cur.expect('{')?;
                let mut atoms = Vec::new();
                if !cur.eat('}') {
                    loop {
                        atoms.push(cur.ident()?.0);
                        if cur.eat('}') {
                            break;
                        }
                        cur.expect(',')?;
                    }
                }
                let refs: Vec<&str> = atoms.iter().map(String::as_str).collect();
                let o = Obj::atoms(&name, &refs).map_err(at)?;
                self.declare(&name, "set", l, c)?;
                self.env.objects.insert(name, o.clone());
                self.sets.push((o, line));
            }
            "map" | "kmap" => {
                let (name, l, c) = cur.ident()?;
                cur.expect(':')?;
                let a = object_expr(&mut cur, &self.env)?;
                arrow(&mut cur)?;
                let b = object_expr(&mut cur, &self.env)?;
                let cat = if kw == "kmap" {
                    cur.expect('[')?;
                    let t = self.monad_ref(&mut cur)?;
                    cur.expect(']')?;
                    Cat::Kleisli(t)
                } else {
                    Cat::Base
                };
                cur.expect('=')?;
                let f = self.map_body(&mut cur, &a, &b, &cat).map_err(at)?;
                self.declare(&name, kw_kind(&kw), l, c)?;
                self.env.maps.insert(name.clone(), f.named(&name));
            }
            "lens" | "mlens" => {
                let (name, l, c) = cur.ident()?;
                cur.expect(':')?;
                let (x, u) = pair_of_objects(&mut cur, &self.env)?;
                cur.expect('<')?;
                arrow(&mut cur)?;
                let (y, v) = pair_of_objects(&mut cur, &self.env)?;
                cur.expect('=')?;
                cur.keyword(&kw)?;
                cur.expect('(')?;
                let get = morphism_expr(&mut cur, &self.env)?;
                cur.expect(',')?;
                let put = morphism_expr(&mut cur, &self.env)?;
                cur.expect(')')?;
                let lens = self.lens_body(&kw, get.f, put.f, [&x, &u, &y, &v]).map_err(at)?;
                let o = from_lens(&lens).map_err(at)?;
                self.declare(&name, kw_kind(&kw), l, c)?;
                self.lenses.insert(name.clone(), lens);
                self.env.optics.insert(name, o);
            }
            "optic" => {
                let (name, l, c) = cur.ident()?;
                cur.expect('=')?;
                cur.expect('<')?;
                let alpha = morphism_expr(&mut cur, &self.env)?;
                cur.expect('|')?;
                let beta = morphism_expr(&mut cur, &self.env)?;
                cur.expect('@')?;
                let m = object_expr(&mut cur, &self.env)?;
                cur.expect('>')?;
                let flavor = match (alpha.f.cat(), beta.f.cat()) {
                    (Cat::Base, Cat::Base) => Flavor::Cartesian,
                    (Cat::Kleisli(t), Cat::Base) | (Cat::Base, Cat::Kleisli(t)) => Flavor::Mixed(t.clone()),
                    (Cat::Kleisli(t), Cat::Kleisli(t2)) if t == t2 => Flavor::Mixed(t.clone()),
                    _ => return Err(at(Error::TypeMismatch("optic parts use different monads".into()))),
                };
                let o = Optic::new(&m, alpha.f, beta.f, flavor).map_err(at)?;
                self.declare(&name, "optic", l, c)?;
                self.env.optics.insert(name, o);
            }
            "diagram" => {
                let (name, l, c) = cur.ident()?;
                cur.expect('=')?;
                let diagram = diagram_expr(&mut cur, &self.env)?;
                self.declare(&name, "diagram", l, c)?;
                self.diagrams.push(NamedDiagram { name, line, diagram });
            }
            "cell" => {
                let (name, l, c) = cur.ident()?;
                cur.expect(':')?;
                let ins = wire_list(&mut cur, &self.env)?;
                arrow(&mut cur)?;
                let outs = wire_list(&mut cur, &self.env)?;
                self.declare(&name, "cell", l, c)?;
                self.env.cells.insert(name, (ins, outs));
            }
            "universe" => {
                if let Some(prev) = universe_line {
                    return Err(Error::Parse { line, col, msg: format!("second universe directive; the first is at line {prev}") }.into());
                }
                *universe_line = Some(line);
                cur.keyword("cards")?;
                let lo = number(&mut cur)?;
                cur.expect('.')?;
                cur.expect('.')?;
                let hi = number(&mut cur)?;
                if lo > hi {
                    return Err(Error::Parse { line, col, msg: format!("empty cardinality range {lo}..{hi}") }.into());
                }
                let mut bound = default_bound();
                if !cur.at_end() {
                    cur.keyword("bound")?;
                    bound = number(&mut cur)?;
                }
                if hi > bound {
                    return Err(at(Error::BoundExceeded {
                        what: format!("universe cardinality range {lo}..{hi}"),
                        size: hi as u128,
                        limit: bound as u128,
                    }));
                }
                self.universe = UniverseDecl { lo, hi, bound };
            }
            "expect" => {
                let expect = self.expectation(&mut cur)?;
                self.expects.push(Expectation { line, expect });
            }
            other => {
                return Err(Error::Parse { line, col, msg: format!("unknown declaration '{other}'") }.into());
            }
        }
        cur.finish()?;
        Ok(())
    }

    fn monad_ref(&self, cur: &mut Cursor) -> Result<Monad, Error> {
        let (name, line, col) = cur.ident()?;
        self.env.monads.get(&name).cloned().ok_or(Error::UnknownIdentifier { line, col, name })
    }

    fn monad_body(&self, cur: &mut Cursor, name: &str) -> Result<Monad, Error> {
        let (kind, line, col) = cur.ident()?;
        match kind.as_str() {
            "identity" => Ok(Monad::identity(name)),
            "maybe" => Ok(Monad::maybe(name)),
            "state" => Monad::state(name, object_expr(cur, &self.env)?),
            "writer" => {
                let m = object_expr(cur, &self.env)?;
                cur.keyword("mul")?;
                let mul = morphism_expr(cur, &self.env)?;
                let mm = Obj::product(&m, &m)?;
                if mul.f.src() != &mm || mul.f.tgt() != &m || !mul.f.cat().is_base() {
                    return Err(Error::TypeMismatch(format!("writer multiplication must be a map {mm} -> {m}")));
                }
                cur.keyword("unit")?;
                let e = element(cur, &m)?;
                Monad::writer(name, m, mul.f.table().to_vec(), e)
            }
            _ => Err(Error::Parse { line, col, msg: format!("unknown monad '{kind}'; expected identity, maybe, state or writer") }),
        }
    }

    fn map_body(&self, cur: &mut Cursor, a: &Obj, b: &Obj, cat: &Cat) -> Result<Morphism, Error> {
        if !cur.is_punct('{') {
            let pure = matches!(cat, Cat::Kleisli(_)) && cur.peek().tok == Tok::Ident("pure".into());
            if pure {
                cur.advance();
            }
            let t = morphism_expr(cur, &self.env)?;
            if t.f.src() != a || t.f.tgt() != b {
                return Err(Error::TypeMismatch(format!("{} : {} -> {} is not {a} -> {b}", t.expr, t.f.src(), t.f.tgt())));
            }
            return t.f.lift_to(cat);
        }
        let open = cur.advance();
        let mut table: Vec<Option<u32>> = vec![None; a.card()];
        if !cur.eat('}') {
            loop {
                let (l, c) = (cur.peek().line, cur.peek().col);
                let i = element(cur, a)?;
                arrow(cur)?;
                let v = value(cur, b, cat)?;
                if table[i as usize].replace(v).is_some() {
                    return Err(Error::Parse { line: l, col: c, msg: format!("{} is mapped twice", a.elem(i)) });
                }
                if cur.eat('}') {
                    break;
                }
                cur.expect(',')?;
            }
        }
        let missing: Vec<String> = table.iter().enumerate().filter(|(_, v)| v.is_none()).map(|(i, _)| a.elem(i as u32).to_string()).collect();
        if !missing.is_empty() {
            return Err(Error::Parse { line: open.line, col: open.col, msg: format!("no value given for {}", missing.join(", ")) });
        }
        Morphism::new(a.clone(), b.clone(), cat.clone(), table.into_iter().map(|v| v.unwrap_or_default()).collect())
    }

    fn lens_body(&self, kw: &str, get: Morphism, put: Morphism, [x, u, y, v]: [&Obj; 4]) -> Result<Lens, Error> {
        if get.src() != x || get.tgt() != y {
            return Err(Error::TypeMismatch(format!("get : {} -> {} is not {x} -> {y}", get.src(), get.tgt())));
        }
        let xv = Obj::product(x, v)?;
        if put.src() != &xv || put.tgt() != u {
            return Err(Error::TypeMismatch(format!("put : {} -> {} is not {xv} -> {u}", put.src(), put.tgt())));
        }
        let get = get.as_pure().ok_or_else(|| Error::TypeMismatch("get must be a pure map".into()))?;
        match (kw, put.cat()) {
            ("lens", Cat::Base) | ("mlens", Cat::Kleisli(_)) => Lens::new(get, put),
            ("lens", _) => Err(Error::TypeMismatch("lens put must be a pure map; use mlens for a kmap".into())),
            _ => Err(Error::TypeMismatch("mlens put must be a kmap".into())),
        }
    }

    fn expectation(&self, cur: &mut Cursor) -> Result<Expect, Error> {
        let (kind, line, col) = cur.ident()?;
        let diagram = |cur: &mut Cursor| -> Result<String, Error> {
            let (n, line, col) = cur.ident()?;
            match self.diagrams.iter().any(|d| d.name == n) {
                true => Ok(n),
                false => Err(Error::UnknownIdentifier { line, col, name: n }),
            }
        };
        let optic = |cur: &mut Cursor| -> Result<String, Error> {
            let (n, line, col) = cur.ident()?;
            match self.env.optics.contains_key(&n) {
                true => Ok(n),
                false => Err(Error::UnknownIdentifier { line, col, name: n }),
            }
        };
        Ok(match kind.as_str() {
            "equal" => Expect::Equal(diagram(cur)?, diagram(cur)?),
            "distinct" => Expect::Distinct(diagram(cur)?, diagram(cur)?),
            "lawful" => Expect::Lawful(optic(cur)?),
            "unlawful" => Expect::Unlawful(optic(cur)?),
            "count" => {
                let h = hom(cur, &self.env)?;
                cur.expect('=')?;
                Expect::Count(h, number(cur)?)
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    col,
                    msg: format!("unknown expectation '{kind}'; expected equal, distinct, lawful, unlawful or count"),
                })
            }
        })
    }
}

fn kw_kind(kw: &str) -> &'static str {
    match kw {
        "map" => "map",
        "kmap" => "kmap",
        "lens" => "lens",
        _ => "mlens",
    }
}

fn unknown(name: &str) -> CliError {
    CliError::Usage(format!("no declaration named `{name}`"))
}

pub fn default_bound() -> usize {
    std::env::var(BOUND_VAR).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_BOUND)
}

#[derive(Debug)]
struct Decl {
    line: usize,
    text: String,
}

/// Group lines into declarations.
fn split(text: &str) -> CliResult<Vec<Decl>> {
    let mut out: Vec<Decl> = Vec::new();
    for (i, l) in text.lines().enumerate() {
        let line = i + 1;
        let starts = l.chars().next().is_some_and(|c| !c.is_whitespace() && c != '#');
        if starts {
            out.push(Decl { line, text: l.to_string() });
            continue;
        }
        let blank = l.trim().is_empty() || l.trim_start().starts_with('#');
        match out.last_mut() {
            Some(d) => {
                // keep line numbers aligned for the tokenizer
                let gap = line - d.line - d.text.matches('\n').count();
                d.text.push_str(&"\n".repeat(gap));
                d.text.push_str(l);
            }
            None if blank => {}
            None => {
                return Err(Error::Parse { line, col: 1, msg: "indented line outside a declaration".into() }.into());
            }
        }
    }
    Ok(out)
}

fn declared_name(d: &Decl) -> Option<String> {
    let mut words = d.text.split(|c: char| c.is_whitespace() || ":=".contains(c)).filter(|w| !w.is_empty());
    match words.next()? {
        "universe" | "expect" => None,
        _ => words.next().map(str::to_string),
    }
}

/// Explain an unknown identifier that is declared further down.
fn forward_reference(e: CliError, later: &BTreeMap<String, usize>, at: usize) -> CliError {
    if let Some(Error::UnknownIdentifier { line, col, name }) = e.core() {
        if let Some(&l) = later.get(name) {
            if l >= at {
                return Error::Parse {
                    line: *line,
                    col: *col,
                    msg: format!("`{name}` is used before its declaration at line {l}"),
                }
                .into();
            }
        }
    }
    e
}

fn arrow(cur: &mut Cursor) -> Result<(), Error> {
    cur.expect('-')?;
    cur.expect('>')
}

fn number(cur: &mut Cursor) -> Result<usize, Error> {
    let (s, line, col) = cur.ident()?;
    s.parse().map_err(|_| Error::Parse { line, col, msg: format!("expected a number, found '{s}'") })
}

fn pair_of_objects(cur: &mut Cursor, env: &Env) -> Result<(Obj, Obj), Error> {
    cur.expect('(')?;
    let a = object_expr(cur, env)?;
    cur.expect(',')?;
    let b = object_expr(cur, env)?;
    cur.expect(')')?;
    Ok((a, b))
}

fn hom(cur: &mut Cursor, env: &Env) -> Result<Hom, Error> {
    let (x, u) = pair_of_objects(cur, env)?;
    arrow(cur)?;
    let (y, v) = pair_of_objects(cur, env)?;
    let monad = if cur.eat('[') {
        let (name, line, col) = cur.ident()?;
        let t = env.monads.get(&name).cloned().ok_or(Error::UnknownIdentifier { line, col, name })?;
        cur.expect(']')?;
        Some(t)
    } else {
        None
    };
    Ok(Hom { x, u, y, v, monad })
}

/// An element of `o`: an atom, `*` for the unit, `(e, e)` for pairs.
fn element(cur: &mut Cursor, o: &Obj) -> Result<u32, Error> {
    let (line, col) = (cur.peek().line, cur.peek().col);
    let e = elem_expr(cur, o)?;
    o.index_of(&e).ok_or(Error::Parse { line, col, msg: format!("{e} is not an element of {o}") })
}

fn elem_expr(cur: &mut Cursor, o: &Obj) -> Result<Elem, Error> {
    match o.shape() {
        Shape::Unit => {
            cur.expect('*')?;
            Ok(Elem::Unit)
        }
        Shape::Product(a, b) => {
            cur.expect('(')?;
            let x = elem_expr(cur, a)?;
            cur.expect(',')?;
            let y = elem_expr(cur, b)?;
            cur.expect(')')?;
            Ok(Elem::pair(x, y))
        }
        _ => Ok(Elem::atom(&cur.ident()?.0)),
    }
}

/// A value of `T b` in the syntax of the monad's kind.
fn value(cur: &mut Cursor, b: &Obj, cat: &Cat) -> Result<u32, Error> {
    let Cat::Kleisli(t) = cat else { return element(cur, b) };
    let n = b.card();
    let v = match t.kind() {
        MonadKind::Identity => TVal::Id(element(cur, b)?),
        MonadKind::Maybe => match &cur.peek().tok {
            Tok::Ident(s) if s == "nothing" => {
                cur.advance();
                TVal::Maybe(None)
            }
            Tok::Ident(s) if s == "just" => {
                cur.advance();
                TVal::Maybe(Some(element(cur, b)?))
            }
            _ => TVal::Maybe(Some(element(cur, b)?)),
        },
        MonadKind::Writer { monoid, unit, .. } => {
            let a = element(cur, b)?;
            let w = if cur.eat('@') { element(cur, monoid)? } else { *unit };
            TVal::Writer(w, a)
        }
        MonadKind::State { states } => {
            // [s -> e @ s', ...] with one entry per state
            let open = cur.peek().clone();
            cur.expect('[')?;
            let mut rows: Vec<Option<(u32, u32)>> = vec![None; states.card()];
            loop {
                let s = element(cur, states)?;
                arrow(cur)?;
                let a = element(cur, b)?;
                cur.expect('@')?;
                let s2 = element(cur, states)?;
                rows[s as usize] = Some((a, s2));
                if cur.eat(']') {
                    break;
                }
                cur.expect(',')?;
            }
            if rows.iter().any(Option::is_none) {
                return Err(Error::Parse { line: open.line, col: open.col, msg: format!("a state value needs an entry for every element of {states}") });
            }
            TVal::State(rows.into_iter().flatten().collect())
        }
    };
    Ok(t.encode(n, &v))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "\
# booleans
set B = {f, t}
map not : B -> B = {f -> t, t -> f}
map xor : B * B -> B = {(f,f) -> f, (f,t) -> t,
    (t,f) -> t, (t,t) -> f}
monad Maybe = maybe
kmap guard : B -> B [Maybe] = {f -> nothing, t -> just t}
lens second : (B*B, B*B) <-> (B, B) = lens(snd(B,B), <fst(B*B,B);fst(B,B), snd(B*B,B)>)
diagram snake = wr[B] * cup[B] ; cap[B] * wr[B]
diagram wire = wr[B]
expect equal snake wire
universe cards 1..3 bound 8
";

    #[test]
    fn parses_every_declaration_kind() {
        let ws = Workspace::parse(SMALL).unwrap();
        assert_eq!(ws.env.maps["not"].show_table(), "{f->t, t->f}");
        assert_eq!(ws.env.maps["xor"].apply(1), 1);
        assert_eq!(ws.env.maps["guard"].apply(0), 0);
        assert_eq!(ws.diagrams.len(), 2);
        assert_eq!(ws.expects.len(), 1);
        assert_eq!(ws.universe, UniverseDecl { lo: 1, hi: 3, bound: 8 });
        let u = ws.universe().unwrap();
        assert_eq!(u.objects().len(), 4);
        assert!(ws.lenses.contains_key("second"));
    }

    #[test]
    fn continuation_lines_keep_positions() {
        let err = Workspace::parse("set B = {f, t}\nmap g : B -> B = {f -> t,\n    t -> q}\n").unwrap_err();
        assert!(err.to_string().starts_with("3:10"), "{err}");
    }

    #[test]
    fn duplicate_and_forward_names_are_rejected() {
        let dup = Workspace::parse("set B = {a}\nset B = {b}\n").unwrap_err();
        assert!(dup.to_string().contains("already declared"), "{dup}");
        let fwd = Workspace::parse("map g : B -> B = id(B)\nset B = {a}\n").unwrap_err();
        assert!(fwd.to_string().contains("before its declaration"), "{fwd}");
    }

    #[test]
    fn incomplete_tables_name_the_missing_elements() {
        let err = Workspace::parse("set B = {f, t}\nmap g : B -> B = {f -> t}\n").unwrap_err();
        assert!(err.to_string().contains("no value given for t"), "{err}");
    }

    #[test]
    fn oversized_sets_exceed_the_bound() {
        let err = Workspace::parse("universe cards 1..2 bound 3\nset S = {a, b, c, d}\n").unwrap_err();
        assert!(err.is_bound(), "{err}");
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn writer_and_state_values() {
        let ws = Workspace::parse(
            "set M = {e, a}\nmap mul : M * M -> M = {(e,e) -> e, (e,a) -> a, (a,e) -> a, (a,a) -> a}\n\
             monad W = writer M mul mul unit e\nmonad S = state 2\n\
             kmap tell : 2 -> 2 [W] = {0 -> 1 @ a, 1 -> 1}\n\
             kmap flip : 2 -> 2 [S] = {0 -> [0 -> 1 @ 1, 1 -> 0 @ 0], 1 -> [0 -> 0 @ 0, 1 -> 1 @ 1]}\n",
        )
        .unwrap();
        let w = &ws.env.monads["W"];
        assert_eq!(w.decode(2, ws.env.maps["tell"].apply(0)), TVal::Writer(1, 1));
        let s = &ws.env.monads["S"];
        assert_eq!(s.decode(2, ws.env.maps["flip"].apply(0)), TVal::State(vec![(1, 1), (0, 0)]));
    }

    #[test]
    fn homs_parse_with_optional_monad() {
        let ws = Workspace::parse("set B = {f, t}\nmonad T = maybe\n").unwrap();
        let h = ws.parse_hom("(B,B)->(B,I) [T]").unwrap();
        assert_eq!(h.to_string(), "(B,B) -> (B,I) [T]");
    }
}
