//! Slice-structured string diagrams. A diagram is a horizontal sequence of
//! slices; each slice is a top-to-bottom list of generators. Printing gives
//! back DSL text that parses to the same diagram.

use std::fmt;

use crate::error::{mismatch, Result};
use crate::fincat::{structure as st, Cat, Morphism, Obj};
use crate::optic::Optic;
use crate::tambara::Dir;

/// A morphism together with the expression that named it.
#[derive(Clone, Debug)]
pub struct MTerm {
    pub expr: MExpr,
    pub f: Morphism,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MExpr {
    Name(String),
    Id(Obj),
    Diag(Obj),
    Bang(Obj),
    /// `swap(a, b) : a × b → b × a`
    Swap(Obj, Obj),
    Fst(Obj, Obj),
    Snd(Obj, Obj),
    Seq(Box<MExpr>, Box<MExpr>),
    Times(Box<MExpr>, Box<MExpr>),
    Pair(Box<MExpr>, Box<MExpr>),
}

impl MExpr {
    fn prec(&self) -> u8 {
        match self {
            MExpr::Seq(..) => 0,
            MExpr::Times(..) => 1,
            _ => 2,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            write!(f, "(")?;
            self.fmt_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            MExpr::Name(n) => write!(f, "{n}"),
            MExpr::Id(a) => write!(f, "id({a})"),
            MExpr::Diag(a) => write!(f, "diag({a})"),
            MExpr::Bang(a) => write!(f, "bang({a})"),
            MExpr::Swap(a, b) => write!(f, "swap({a},{b})"),
            MExpr::Fst(a, b) => write!(f, "fst({a},{b})"),
            MExpr::Snd(a, b) => write!(f, "snd({a},{b})"),
            MExpr::Seq(a, b) => {
                a.fmt_at(f, 0)?;
                write!(f, ";")?;
                b.fmt_at(f, 1)
            }
            MExpr::Times(a, b) => {
                a.fmt_at(f, 1)?;
                write!(f, "*")?;
                b.fmt_at(f, 2)
            }
            MExpr::Pair(a, b) => {
                write!(f, "<")?;
                a.fmt_at(f, 0)?;
                write!(f, ",")?;
                b.fmt_at(f, 0)?;
                write!(f, ">")
            }
        }
    }
}

impl fmt::Display for MExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

impl MTerm {
    pub fn named(name: &str, f: Morphism) -> MTerm {
        MTerm { expr: MExpr::Name(name.to_string()), f }
    }

    pub fn id(a: &Obj) -> MTerm {
        MTerm { expr: MExpr::Id(a.clone()), f: Morphism::id(a) }
    }

    pub fn then(&self, g: &MTerm) -> Result<MTerm> {
        Ok(MTerm { expr: MExpr::Seq(Box::new(self.expr.clone()), Box::new(g.expr.clone())), f: self.f.then(&g.f)? })
    }

    pub fn times(&self, g: &MTerm) -> Result<MTerm> {
        Ok(MTerm { expr: MExpr::Times(Box::new(self.expr.clone()), Box::new(g.expr.clone())), f: times(&self.f, &g.f)? })
    }

    pub fn fst(a: &Obj, b: &Obj) -> Result<MTerm> {
        Ok(MTerm { expr: MExpr::Fst(a.clone(), b.clone()), f: st::fst(a, b)? })
    }

    pub fn snd(a: &Obj, b: &Obj) -> Result<MTerm> {
        Ok(MTerm { expr: MExpr::Snd(a.clone(), b.clone()), f: st::snd(a, b)? })
    }

    /// Whether the map has no effect.
    pub fn is_pure(&self) -> bool {
        self.f.cat().is_base() || self.f.as_pure().is_some()
    }
}

/// `f × g`, going through the monad's strengths when either side is
/// effectful.
pub fn times(f: &Morphism, g: &Morphism) -> Result<Morphism> {
    if f.cat().is_base() && g.cat().is_base() {
        return st::times(f, g);
    }
    // (f × id) ; (id × g)
    let left = st::act_right(f, g.src())?;
    let right = st::act(f.tgt(), g)?;
    let cat = match (f.cat(), g.cat()) {
        (Cat::Kleisli(t), Cat::Kleisli(t2)) if t != t2 => return Err(mismatch("product of maps in different Kleisli categories")),
        (Cat::Kleisli(_), _) => f.cat().clone(),
        _ => g.cat().clone(),
    };
    left.lift_to(&cat)?.then(&right.lift_to(&cat)?)
}

/// A declared wire of an abstract cell.
pub type RawWire = (Dir, Obj);

#[derive(Clone, Debug)]
pub enum Gen {
    /// The empty identity.
    Id,
    WireR(Obj),
    WireL(Obj),
    /// `r[f] : R_x → R_y` for `f : x → y`.
    BoxR(MTerm),
    /// `l[f] : L_y → L_x` for `f : x → y`.
    BoxL(MTerm),
    Cap(Obj),
    Cup(Obj),
    Dup(Obj),
    Del(Obj),
    /// `swap[x,y]` takes `x` above `y` to `y` above `x`.
    Swap(Obj, Obj),
    Optic(String, Optic),
    Cell(String, Vec<RawWire>, Vec<RawWire>),
}

impl Gen {
    pub fn inputs(&self) -> Result<Vec<RawWire>> {
        Ok(match self {
            Gen::Id | Gen::Cup(_) => vec![],
            Gen::WireR(x) | Gen::Dup(x) | Gen::Del(x) => vec![(Dir::R, x.clone())],
            Gen::WireL(x) => vec![(Dir::L, x.clone())],
            Gen::BoxR(t) => vec![(Dir::R, t.f.src().clone())],
            Gen::BoxL(t) => vec![(Dir::L, t.f.tgt().clone())],
            Gen::Cap(x) => vec![(Dir::R, x.clone()), (Dir::L, x.clone())],
            Gen::Swap(x, y) => vec![(Dir::R, Obj::product(y, x)?)],
            Gen::Optic(_, o) => vec![(Dir::R, o.x.clone()), (Dir::L, o.u.clone())],
            Gen::Cell(_, ins, _) => ins.clone(),
        })
    }

    pub fn outputs(&self) -> Result<Vec<RawWire>> {
        Ok(match self {
            Gen::Id | Gen::Cap(_) => vec![],
            Gen::WireR(x) => vec![(Dir::R, x.clone())],
            Gen::WireL(x) => vec![(Dir::L, x.clone())],
            Gen::BoxR(t) => vec![(Dir::R, t.f.tgt().clone())],
            Gen::BoxL(t) => vec![(Dir::L, t.f.src().clone())],
            Gen::Cup(x) => vec![(Dir::L, x.clone()), (Dir::R, x.clone())],
            Gen::Dup(x) => vec![(Dir::R, Obj::product(x, x)?)],
            Gen::Del(_) => vec![(Dir::R, Obj::unit())],
            Gen::Swap(x, y) => vec![(Dir::R, Obj::product(x, y)?)],
            Gen::Optic(_, o) => vec![(Dir::R, o.y.clone()), (Dir::L, o.v.clone())],
            Gen::Cell(_, _, outs) => outs.clone(),
        })
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, Gen::Id | Gen::WireR(_) | Gen::WireL(_))
    }

    /// Identity generator on a wire.
    pub fn wire(w: &RawWire) -> Gen {
        match w.0 {
            Dir::R => Gen::WireR(w.1.clone()),
            Dir::L => Gen::WireL(w.1.clone()),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::Id => write!(f, "id"),
            Gen::WireR(x) => write!(f, "wr[{x}]"),
            Gen::WireL(x) => write!(f, "wl[{x}]"),
            Gen::BoxR(t) => write!(f, "r[{}]", t.expr),
            Gen::BoxL(t) => write!(f, "l[{}]", t.expr),
            Gen::Cap(x) => write!(f, "cap[{x}]"),
            Gen::Cup(x) => write!(f, "cup[{x}]"),
            Gen::Dup(x) => write!(f, "dup[{x}]"),
            Gen::Del(x) => write!(f, "del[{x}]"),
            Gen::Swap(x, y) => write!(f, "swap[{x},{y}]"),
            Gen::Optic(n, _) => write!(f, "optic[{n}]"),
            Gen::Cell(n, _, _) => write!(f, "cell[{n}]"),
        }
    }
}

pub type Slice = Vec<Gen>;

#[derive(Clone, Debug, Default)]
pub struct Diagram {
    pub slices: Vec<Slice>,
}

impl Diagram {
    pub fn single(g: Gen) -> Diagram {
        Diagram { slices: vec![vec![g]] }
    }

    /// Horizontal composite, `self` first.
    pub fn then(mut self, next: Diagram) -> Diagram {
        self.slices.extend(next.slices);
        self
    }

    /// Vertical composite with `self` on top. The shorter side is padded
    /// with identity slices on its output wires.
    pub fn tensor(self, bottom: Diagram) -> Result<Diagram> {
        let n = self.slices.len().max(bottom.slices.len());
        let top = self.padded(n)?;
        let bot = bottom.padded(n)?;
        Ok(Diagram { slices: top.slices.into_iter().zip(bot.slices).map(|(mut a, b)| {
            a.extend(b);
            a
        }).collect() })
    }

    fn padded(mut self, n: usize) -> Result<Diagram> {
        while self.slices.len() < n {
            let outs = self.raw_outputs()?;
            let slice = if outs.is_empty() { vec![Gen::Id] } else { outs.iter().map(Gen::wire).collect() };
            self.slices.push(slice);
        }
        Ok(self)
    }

    /// Raw input wires of the first slice.
    pub fn raw_inputs(&self) -> Result<Vec<RawWire>> {
        let mut out = Vec::new();
        if let Some(s) = self.slices.first() {
            for g in s {
                out.extend(g.inputs()?);
            }
        }
        Ok(out)
    }

    /// Raw output wires of the last slice.
    pub fn raw_outputs(&self) -> Result<Vec<RawWire>> {
        let mut out = Vec::new();
        if let Some(s) = self.slices.last() {
            for g in s {
                out.extend(g.outputs()?);
            }
        }
        Ok(out)
    }

    pub fn generators(&self) -> impl Iterator<Item = &Gen> {
        self.slices.iter().flatten()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slices.is_empty() {
            return write!(f, "id");
        }
        for (i, s) in self.slices.iter().enumerate() {
            if i > 0 {
                write!(f, " ; ")?;
            }
            if s.is_empty() {
                write!(f, "id")?;
            }
            for (j, g) in s.iter().enumerate() {
                if j > 0 {
                    write!(f, " * ")?;
                }
                write!(f, "{g}")?;
            }
        }
        Ok(())
    }
}
