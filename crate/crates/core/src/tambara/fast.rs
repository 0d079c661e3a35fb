//! Table-level evaluation of cartesian 2-cells.
//!
//! With cartesian wires every unitor and associator is the identity on
//! element indices, so a chain is just a list of cardinalities and tables.
//! This mirrors `Chain` and `TwoCell::apply` step for step without building
//! objects or morphisms, and is what makes exhaustive pointwise checks over
//! the default universe affordable.

use super::chain::{Chain, Dir, Slot, Units, Wire};
use super::twocell::{CellOp, TwoCell};
use crate::error::{Error, Result};
use crate::fincat::{bounds, Cat, Morphism, Obj, Shape};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FSlot {
    R(u32),
    L(u32),
    Hom,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FastChain {
    pub objs: Vec<u32>,
    pub slots: Vec<FSlot>,
    pub comps: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum FShape {
    Unit,
    Atom(u32),
    Prod(Box<FShape>, Box<FShape>),
}

impl FShape {
    fn of(o: &Obj) -> FShape {
        match o.shape() {
            Shape::Unit => FShape::Unit,
            Shape::Product(a, b) => FShape::Prod(Box::new(FShape::of(a)), Box::new(FShape::of(b))),
            _ => FShape::Atom(o.card() as u32),
        }
    }

    fn card(&self) -> u32 {
        match self {
            FShape::Unit => 1,
            FShape::Atom(n) => *n,
            FShape::Prod(a, b) => a.card() * b.card(),
        }
    }
}

#[derive(Clone, Debug)]
struct RawWire {
    dir: Dir,
    shape: FShape,
}

impl RawWire {
    fn of(w: &Wire) -> Option<RawWire> {
        w.cat.is_base().then(|| RawWire { dir: w.dir, shape: FShape::of(&w.obj) })
    }

    fn flat_len(&self) -> usize {
        match &self.shape {
            FShape::Unit => 0,
            FShape::Atom(_) => 1,
            FShape::Prod(a, b) => {
                RawWire { dir: self.dir, shape: (**a).clone() }.flat_len()
                    + RawWire { dir: self.dir, shape: (**b).clone() }.flat_len()
            }
        }
    }
}

#[derive(Clone, Debug)]
enum RawSlot {
    Wire(RawWire),
    Hom,
}

#[derive(Clone, Debug)]
enum FOp {
    BoxR { f: Vec<u32>, nin: u32, nout: u32 },
    BoxL { f: Vec<u32>, na: u32, nb: u32 },
    Cap,
    Cup { nx: u32 },
    Optic { alpha: Vec<u32>, beta: Vec<u32>, m: u32, x: u32, y: u32, u: u32, v: u32 },
}

#[derive(Clone, Debug)]
struct FStep {
    offset: usize,
    ins: Vec<RawWire>,
    outs: Vec<RawSlot>,
    flat_in: usize,
    /// Every wire touched is a single atom, so the step can run in place.
    atomic: bool,
    op: FOp,
}

/// A compiled cartesian 2-cell.
#[derive(Clone, Debug)]
pub struct FastCell {
    steps: Vec<FStep>,
}

fn prod(a: u32, b: u32) -> Result<u32> {
    let n = a as u128 * b as u128;
    let limit = bounds::current().max_card as u128;
    if n > limit {
        return Err(Error::BoundExceeded { what: format!("product of sets of size {a} and {b}"), size: n, limit });
    }
    Ok(n as u32)
}

fn base_table(f: &Morphism) -> Option<Vec<u32>> {
    f.cat().is_base().then(|| f.table().to_vec())
}

impl FastCell {
    /// `None` unless every wire and map of `t` lives in the base category and
    /// unit wires are erased.
    pub fn compile(t: &TwoCell) -> Option<FastCell> {
        if t.units != Units::Drop || !t.region.is_base() {
            return None;
        }
        let mut steps = Vec::new();
        for s in t.steps() {
            let ins = s.op.inputs().iter().map(RawWire::of).collect::<Option<Vec<_>>>()?;
            let outs = s.op.outputs().iter().map(RawWire::of).collect::<Option<Vec<_>>>()?;
            let op = match &s.op {
                CellOp::BoxR { f, .. } => {
                    FOp::BoxR { f: base_table(f)?, nin: f.src().card() as u32, nout: f.tgt().card() as u32 }
                }
                CellOp::BoxL { f, .. } => {
                    FOp::BoxL { f: base_table(f)?, na: f.src().card() as u32, nb: f.tgt().card() as u32 }
                }
                CellOp::Cap { .. } => FOp::Cap,
                CellOp::Cup { l, .. } => FOp::Cup { nx: l.obj.card() as u32 },
                CellOp::Optic { o, .. } => FOp::Optic {
                    alpha: base_table(&o.alpha)?,
                    beta: base_table(&o.beta)?,
                    m: o.m.card() as u32,
                    x: o.x.card() as u32,
                    y: o.y.card() as u32,
                    u: o.u.card() as u32,
                    v: o.v.card() as u32,
                },
            };
            let flat_in = ins.iter().map(RawWire::flat_len).sum();
            let atom = |w: &RawWire| matches!(w.shape, FShape::Atom(_));
            let atomic = !matches!(op, FOp::Optic { .. }) && ins.iter().all(atom) && outs.iter().all(atom);
            let outs = if matches!(op, FOp::Cap) { vec![RawSlot::Hom] } else { outs.into_iter().map(RawSlot::Wire).collect() };
            steps.push(FStep { offset: s.offset, ins, outs, flat_in, atomic, op });
        }
        Some(FastCell { steps })
    }

    pub fn apply(&self, c: &FastChain) -> Result<FastChain> {
        self.apply_owned(c.clone())
    }

    pub fn apply_owned(&self, mut cur: FastChain) -> Result<FastChain> {
        let mut buf = Vec::new();
        for s in &self.steps {
            let hom = cur.is_hom();
            if s.atomic && !hom {
                cur.atomic_step(s, &mut buf)?;
                continue;
            }
            let (objs, comps) = cur.take_range(s.offset, &s.ins);
            let (new_objs, new_comps) = run(s, objs, comps)?;
            cur = if hom && !s.ins.is_empty() {
                from_raw_slots(&new_objs, &s.outs, new_comps)?
            } else {
                cur.splice(s.offset, s.flat_in, &s.outs, &new_objs, new_comps)?
            };
        }
        Ok(cur)
    }
}

fn run(s: &FStep, objs: Vec<u32>, mut comps: Vec<Vec<u32>>) -> Result<(Vec<u32>, Vec<Vec<u32>>)> {
    Ok(match &s.op {
        FOp::BoxR { f, nin, nout } => {
            for t in comps[0].iter_mut() {
                *t = (*t / nin) * nout + f[(*t % nin) as usize];
            }
            (objs, comps)
        }
        FOp::BoxL { f, na, nb } => {
            let n = objs[0] * na;
            let c = (0..n).map(|v| comps[0][((v / na) * nb + f[(v % na) as usize]) as usize]).collect();
            comps[0] = c;
            (objs, comps)
        }
        FOp::Cap => {
            let q = comps.pop().unwrap();
            for t in comps[0].iter_mut() {
                *t = q[*t as usize];
            }
            (vec![objs[0], objs[2]], comps)
        }
        FOp::Cup { nx } => {
            let c = objs[0];
            let cx = prod(c, *nx)?;
            let id: Vec<u32> = (0..cx).collect();
            (vec![c, cx, c], vec![id.clone(), id])
        }
        FOp::Optic { alpha, beta, m, x, y, u, v } => {
            let n = objs[1];
            let nm = prod(n, *m)?;
            let my = m * y;
            let mv = m * v;
            for t in comps[0].iter_mut() {
                *t = (*t / x) * my + alpha[(*t % x) as usize];
            }
            let b = (0..nm * v).map(|w| comps[1][((w / mv) * u + beta[(w % mv) as usize]) as usize]).collect();
            comps[1] = b;
            (vec![objs[0], nm, objs[2]], comps)
        }
    })
}

/// `f ⨾ comp` at the start of a slot.
fn slot_pre(slot: FSlot, f: &[u32], comp: &[u32]) -> Vec<u32> {
    match slot {
        FSlot::L(x) => (0..f.len() as u32 * x).map(|v| comp[(f[(v / x) as usize] * x + v % x) as usize]).collect(),
        _ => f.iter().map(|&t| comp[t as usize]).collect(),
    }
}

/// `comp ⨾ g` at the end of a slot.
fn slot_post(slot: FSlot, comp: &[u32], g: &[u32]) -> Vec<u32> {
    match slot {
        FSlot::R(x) => comp.iter().map(|&t| g[(t / x) as usize] * x + t % x).collect(),
        _ => comp.iter().map(|&t| g[t as usize]).collect(),
    }
}

thread_local! {
    static SCRATCH: std::cell::RefCell<Piece> = std::cell::RefCell::new(Piece::default());
}

#[derive(Default)]
struct Piece {
    objs: Vec<u32>,
    slots: Vec<FSlot>,
    comps: Vec<Vec<u32>>,
}

fn split_slot(s: &RawSlot, c0: u32, c1: u32, comp: Vec<u32>, out: &mut Piece) -> Result<()> {
    match s {
        RawSlot::Wire(w) => split_into(w.dir, &w.shape, c0, c1, comp, out),
        RawSlot::Hom => {
            out.slots.push(FSlot::Hom);
            out.comps.push(comp);
            out.objs.push(c1);
            Ok(())
        }
    }
}

fn split_into(dir: Dir, shape: &FShape, c0: u32, c1: u32, comp: Vec<u32>, out: &mut Piece) -> Result<()> {
    match (shape, dir) {
        (FShape::Unit, _) => {
            out.slots.push(FSlot::Hom);
            out.comps.push(comp);
            out.objs.push(c1);
        }
        (FShape::Prod(a, b), Dir::R) => {
            let mid = prod(c1, a.card())?;
            split_into(Dir::R, b, c0, mid, comp, out)?;
            split_into(Dir::R, a, mid, c1, (0..mid).collect(), out)?;
        }
        (FShape::Prod(a, b), Dir::L) => {
            let mid = prod(c0, a.card())?;
            split_into(Dir::L, a, c0, mid, (0..mid).collect(), out)?;
            split_into(Dir::L, b, mid, c1, comp, out)?;
        }
        (FShape::Atom(n), Dir::R) => {
            out.slots.push(FSlot::R(*n));
            out.comps.push(comp);
            out.objs.push(c1);
        }
        (FShape::Atom(n), Dir::L) => {
            out.slots.push(FSlot::L(*n));
            out.comps.push(comp);
            out.objs.push(c1);
        }
    }
    Ok(())
}

fn flat_len(dir: Dir, shape: &FShape) -> usize {
    RawWire { dir, shape: shape.clone() }.flat_len()
}

fn fuse(dir: Dir, shape: &FShape, objs: &[u32], comps: &mut [Vec<u32>]) -> Vec<u32> {
    match (shape, dir) {
        (FShape::Unit, _) => (0..objs[0]).collect(),
        (FShape::Prod(a, b), Dir::R) => {
            let k = flat_len(Dir::R, b);
            let pb = fuse(Dir::R, b, &objs[..=k], &mut comps[..k]);
            let pa = fuse(Dir::R, a, &objs[k..], &mut comps[k..]);
            let nb = b.card();
            pb.iter().map(|&t| pa[(t / nb) as usize] * nb + t % nb).collect()
        }
        (FShape::Prod(a, b), Dir::L) => {
            let k = flat_len(Dir::L, a);
            let qa = fuse(Dir::L, a, &objs[..=k], &mut comps[..k]);
            let qb = fuse(Dir::L, b, &objs[k..], &mut comps[k..]);
            let nb = b.card();
            let n = objs[0] * a.card() * nb;
            (0..n).map(|v| qb[(qa[(v / nb) as usize] * nb + v % nb) as usize]).collect()
        }
        _ => std::mem::take(&mut comps[0]),
    }
}

fn from_raw_slots(objs: &[u32], raw: &[RawSlot], comps: Vec<Vec<u32>>) -> Result<FastChain> {
    let mut piece = Piece::default();
    for (i, (s, c)) in raw.iter().zip(comps).enumerate() {
        split_slot(s, objs[i], objs[i + 1], c, &mut piece)?;
    }
    let mut all = vec![objs[0]];
    all.extend(piece.objs);
    Ok(FastChain { objs: all, slots: piece.slots, comps: piece.comps }.normalize())
}

impl FastChain {
    pub fn hom(src: u32, tgt: u32, table: Vec<u32>) -> FastChain {
        FastChain { objs: vec![src, tgt], slots: vec![FSlot::Hom], comps: vec![table] }
    }

    pub fn is_hom(&self) -> bool {
        self.slots.iter().all(|s| *s == FSlot::Hom)
    }

    fn normalize(mut self) -> FastChain {
        while self.slots.len() > 1 {
            let Some(i) = self.slots.iter().position(|s| *s == FSlot::Hom) else { break };
            if i + 1 < self.slots.len() {
                self.comps[i + 1] = slot_pre(self.slots[i + 1], &self.comps[i], &self.comps[i + 1]);
                self.objs.remove(i + 1);
            } else {
                self.comps[i - 1] = slot_post(self.slots[i - 1], &self.comps[i - 1], &self.comps[i]);
                self.objs.remove(i);
            }
            self.slots.remove(i);
            self.comps.remove(i);
        }
        self
    }

    /// Fuse the components under `raw` starting at `offset`, moving the
    /// tables out; the span is replaced by `splice` afterwards.
    fn take_range(&mut self, offset: usize, raw: &[RawWire]) -> (Vec<u32>, Vec<Vec<u32>>) {
        if self.is_hom() && !raw.is_empty() {
            // wireless element on raw wires that all flatten away
            let t = self.objs[1];
            let mut objs = vec![self.objs[0]];
            let mut comps = Vec::with_capacity(raw.len());
            for (i, _) in raw.iter().enumerate() {
                objs.push(t);
                comps.push(if i == 0 { std::mem::take(&mut self.comps[0]) } else { (0..t).collect() });
            }
            return (objs, comps);
        }
        let mut pos = offset;
        let mut objs = vec![self.objs[pos]];
        let mut comps = Vec::with_capacity(raw.len());
        for w in raw {
            let k = w.flat_len();
            comps.push(fuse(w.dir, &w.shape, &self.objs[pos..=pos + k], &mut self.comps[pos..pos + k]));
            pos += k;
            objs.push(self.objs[pos]);
        }
        (objs, comps)
    }

    fn splice(mut self, offset: usize, len: usize, raw: &[RawSlot], objs: &[u32], comps: Vec<Vec<u32>>) -> Result<FastChain> {
        SCRATCH.with(|cell| -> Result<()> {
            let mut piece = cell.borrow_mut();
            piece.objs.clear();
            piece.slots.clear();
            piece.comps.clear();
            for (i, (s, c)) in raw.iter().zip(comps).enumerate() {
                split_slot(s, objs[i], objs[i + 1], c, &mut piece)?;
            }
            if piece.slots.is_empty() && len > 0 {
                piece.slots.push(FSlot::Hom);
                piece.comps.push((0..objs[0]).collect());
                piece.objs.push(objs[0]);
            }
            self.objs.splice(offset + 1..=offset + len, piece.objs.drain(..));
            self.slots.splice(offset..offset + len, piece.slots.drain(..));
            self.comps.splice(offset..offset + len, piece.comps.drain(..));
            Ok(())
        })?;
        Ok(self.normalize())
    }

    /// `apply_owned` for one step on atomic wires of a chain with no hom
    /// slots, editing tables in place.
    fn atomic_step(&mut self, s: &FStep, buf: &mut Vec<u32>) -> Result<()> {
        let i = s.offset;
        match &s.op {
            FOp::BoxR { f, nin, nout } => {
                for t in self.comps[i].iter_mut() {
                    *t = (*t / nin) * nout + f[(*t % nin) as usize];
                }
                self.slots[i] = FSlot::R(*nout);
            }
            FOp::BoxL { f, na, nb } => {
                let n = self.objs[i] * na;
                let c = &self.comps[i];
                buf.clear();
                buf.extend((0..n).map(|v| c[((v / na) * nb + f[(v % na) as usize]) as usize]));
                std::mem::swap(buf, &mut self.comps[i]);
                self.slots[i] = FSlot::L(*na);
            }
            FOp::Cap => {
                let q = self.comps.remove(i + 1);
                for t in self.comps[i].iter_mut() {
                    *t = q[*t as usize];
                }
                self.objs.remove(i + 1);
                self.slots.remove(i + 1);
                self.slots[i] = FSlot::Hom;
                self.absorb_hom(i, buf);
            }
            FOp::Cup { nx } => {
                let c = self.objs[i];
                let cx = prod(c, *nx)?;
                self.objs.splice(i + 1..i + 1, [cx, c]);
                self.slots.splice(i..i, [FSlot::L(*nx), FSlot::R(*nx)]);
                self.comps.splice(i..i, [(0..cx).collect(), (0..cx).collect()]);
            }
            FOp::Optic { .. } => unreachable!("optic steps are never atomic"),
        }
        Ok(())
    }

    /// Compose the hom slot at `i` into a neighbour, as `normalize` does.
    fn absorb_hom(&mut self, i: usize, buf: &mut Vec<u32>) {
        if self.slots.len() == 1 {
            return;
        }
        if i + 1 < self.slots.len() {
            let (f, comp) = (&self.comps[i], &self.comps[i + 1]);
            buf.clear();
            match self.slots[i + 1] {
                FSlot::L(x) => buf.extend((0..f.len() as u32 * x).map(|v| comp[(f[(v / x) as usize] * x + v % x) as usize])),
                _ => buf.extend(f.iter().map(|&t| comp[t as usize])),
            }
            std::mem::swap(buf, &mut self.comps[i + 1]);
            self.objs.remove(i + 1);
        } else {
            let (comp, g) = (&self.comps[i - 1], &self.comps[i]);
            buf.clear();
            match self.slots[i - 1] {
                FSlot::R(x) => buf.extend(comp.iter().map(|&t| g[(t / x) as usize] * x + t % x)),
                _ => buf.extend(comp.iter().map(|&t| g[t as usize])),
            }
            std::mem::swap(buf, &mut self.comps[i - 1]);
            self.objs.remove(i);
        }
        self.slots.remove(i);
        self.comps.remove(i);
    }

    /// Exact normal form, as for `decide::cartesian_key`.
    pub fn key(&self) -> Vec<u32> {
        let mut key = Vec::new();
        self.key_into(&mut key, &mut Vec::new(), &mut Vec::new());
        key
    }

    /// `key` writing into caller-owned buffers.
    pub fn key_into(&self, key: &mut Vec<u32>, runs: &mut Vec<u32>, tmp: &mut Vec<u32>) {
        key.clear();
        runs.clear();
        runs.extend(0..self.objs[0]);
        for (s, p) in self.slots.iter().zip(&self.comps) {
            match *s {
                FSlot::R(nx) => {
                    for r in runs.iter_mut() {
                        let v = p[*r as usize];
                        key.push(v % nx);
                        *r = v / nx;
                    }
                }
                FSlot::L(nu) => {
                    tmp.clear();
                    tmp.extend(runs.iter().flat_map(|&r| (0..nu).map(move |e| p[(r * nu + e) as usize])));
                    std::mem::swap(runs, tmp);
                }
                FSlot::Hom => {
                    for r in runs.iter_mut() {
                        *r = p[*r as usize];
                    }
                }
            }
        }
        key.extend_from_slice(runs);
    }

    /// The same element over concrete objects: `objs` are the middle objects
    /// and `wires` the flattened wires, both matching this chain.
    pub fn to_chain(&self, objs: &[Obj], wires: &[Wire]) -> Result<Chain> {
        let slots: Vec<Slot> = if wires.is_empty() { vec![Slot::Hom(Cat::Base)] } else { wires.iter().cloned().map(Slot::Wire).collect() };
        let mut comps = Vec::with_capacity(slots.len());
        for (i, (s, t)) in slots.iter().zip(&self.comps).enumerate() {
            let (src, tgt) = match s {
                Slot::Wire(w) if w.dir == Dir::R => (objs[i].clone(), Obj::product(&objs[i + 1], &w.obj)?),
                Slot::Wire(w) => (Obj::product(&objs[i], &w.obj)?, objs[i + 1].clone()),
                Slot::Hom(_) => (objs[i].clone(), objs[i + 1].clone()),
            };
            comps.push(Morphism::new(src, tgt, Cat::Base, t.clone())?);
        }
        Chain::new(objs.to_vec(), slots, comps)
    }
}

/// Canonical representatives of every class of a cartesian composite with
/// flattened wires `wires` (direction and cardinality) at `(a, b)`, in a fixed
/// order. The middle objects are the histories of inputs received so far.
pub fn for_each_canonical(
    wires: &[(Dir, u32)],
    a: u32,
    b: u32,
    max_elements: u64,
    visit: &mut dyn FnMut(&FastChain) -> Result<bool>,
) -> Result<u64> {
    let k = wires.len();
    let mut states = vec![a];
    for &(d, n) in wires {
        let s = *states.last().unwrap();
        states.push(if d == Dir::L { prod(s, n)? } else { s });
    }
    let mut radices: Vec<u32> = Vec::new();
    let mut starts = Vec::new();
    for (i, &(d, n)) in wires.iter().enumerate() {
        starts.push(radices.len());
        if d == Dir::R {
            radices.extend(std::iter::repeat_n(n, states[i] as usize));
        }
    }
    let fin_start = radices.len();
    radices.extend(std::iter::repeat_n(b, states[k] as usize));
    let total = radices.iter().try_fold(1u128, |acc, &r| acc.checked_mul(r as u128)).unwrap_or(u128::MAX);
    if total > max_elements as u128 {
        return Err(Error::BoundExceeded {
            what: format!("elements of a {k}-wire composite at ({a},{b})"),
            size: total,
            limit: max_elements as u128,
        });
    }
    if total == 0 {
        return Ok(0);
    }
    let mut objs = states[..k].to_vec();
    objs.push(b);
    let slots: Vec<FSlot> = wires.iter().map(|&(d, n)| if d == Dir::R { FSlot::R(n) } else { FSlot::L(n) }).collect();
    let mut chain = FastChain { objs, slots, comps: vec![Vec::new(); k] };
    let mut digits = vec![0u32; radices.len()];
    let mut visited = 0;
    loop {
        for (i, &(d, n)) in wires.iter().enumerate() {
            let last = i + 1 == k;
            let s = states[i];
            let c = &mut chain.comps[i];
            c.clear();
            match (d, last) {
                (Dir::R, false) => c.extend((0..s).map(|j| j * n + digits[starts[i] + j as usize])),
                (Dir::L, false) => c.extend(0..states[i + 1]),
                (Dir::R, true) => c.extend((0..s as usize).map(|j| digits[fin_start + j] * n + digits[starts[i] + j])),
                (Dir::L, true) => c.extend_from_slice(&digits[fin_start..]),
            }
        }
        visited += 1;
        if !visit(&chain)? {
            return Ok(visited);
        }
        let mut i = digits.len();
        loop {
            if i == 0 {
                return Ok(visited);
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < radices[i] {
                break;
            }
            digits[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decide::cartesian_key;
    use crate::fincat::enumerate_homs;
    use crate::optic::{from_lens, Flavor, Lens};
    use crate::tambara::twocell::{counit, optic_to_2cell};

    fn b() -> Obj {
        Obj::skeletal(2).unwrap()
    }

    fn agree(t: &TwoCell, wires: &[Wire], objs_of: impl Fn(&FastChain) -> Vec<Obj>, a: u32, bb: u32) {
        let fc = FastCell::compile(t).unwrap();
        let ws: Vec<(Dir, u32)> = wires.iter().map(|w| (w.dir, w.obj.card() as u32)).collect();
        let n = for_each_canonical(&ws, a, bb, 1 << 20, &mut |e| {
            let slow = e.to_chain(&objs_of(e), wires)?;
            let k_slow = cartesian_key(&t.apply(&slow)?).unwrap();
            assert_eq!(fc.apply(e)?.key(), k_slow);
            Ok(true)
        })
        .unwrap();
        assert!(n > 0);
    }

    #[test]
    fn fast_counit_agrees_with_chains() {
        let cat = Cat::Base;
        let ws = [Wire::r(&b(), &cat), Wire::l(&b(), &cat)];
        for a in 1..=3u32 {
            for c in 1..=3u32 {
                let oa = Obj::skeletal(a as usize).unwrap();
                let oc = Obj::skeletal(c as usize).unwrap();
                agree(&counit(&b(), &Flavor::Cartesian), &ws, |_| vec![oa.clone(), oa.clone(), oc.clone()], a, c);
            }
        }
    }

    #[test]
    fn fast_optic_cell_agrees_with_chains() {
        let cat = Cat::Base;
        let ws = [Wire::r(&b(), &cat), Wire::l(&b(), &cat)];
        let bb = Obj::product(&b(), &b()).unwrap();
        for (i, g) in enumerate_homs(&cat, &b(), &b()).unwrap().into_iter().enumerate() {
            for p in enumerate_homs(&cat, &bb, &b()).unwrap().into_iter().skip(i).step_by(5) {
                let o = from_lens(&Lens::new(g.clone(), p).unwrap()).unwrap();
                let two = Obj::skeletal(2).unwrap();
                agree(&optic_to_2cell(&o), &ws, |_| vec![two.clone(), two.clone(), two.clone()], 2, 2);
            }
        }
    }
}
