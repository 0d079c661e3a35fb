//! Elements of composites of oriented-wire modules. An element of
//! `W₁ ⊗ … ⊗ W_k` at `(a, b)` is a chain of components threaded through middle
//! objects `a = n₀, n₁, …, n_k = b`, taken modulo sliding at each middle.

use std::fmt;

use crate::error::{mismatch, Result};
use crate::fincat::{structure as st, Cat, Morphism, Obj, Shape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    R,
    L,
}

/// An oriented wire `R_x` or `L_x`. `cat` is the category of the non-`M`
/// region: above an `R` wire, below an `L` wire.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Wire {
    pub dir: Dir,
    pub obj: Obj,
    pub cat: Cat,
}

impl Wire {
    pub fn r(obj: &Obj, cat: &Cat) -> Wire {
        Wire { dir: Dir::R, obj: obj.clone(), cat: cat.clone() }
    }

    pub fn l(obj: &Obj, cat: &Cat) -> Wire {
        Wire { dir: Dir::L, obj: obj.clone(), cat: cat.clone() }
    }

    pub fn with_cat(&self, cat: &Cat) -> Wire {
        Wire { dir: self.dir, obj: self.obj.clone(), cat: cat.clone() }
    }
}

impl fmt::Display for Wire {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = match self.dir {
            Dir::R => "R",
            Dir::L => "L",
        };
        match &self.cat {
            Cat::Base => write!(f, "{d}_{}", self.obj),
            Cat::Kleisli(t) => write!(f, "{d}_{}[{}]", self.obj, t),
        }
    }
}

/// Whether unit wires are erased when flattening. Cartesian diagrams identify
/// `R_I` with the hom module; effectful ones keep them explicit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Units {
    Drop,
    Keep,
}

/// `R_{A×B}` flattens to `R_B` above `R_A`; `L_{A×B}` to `L_A` above `L_B`.
pub fn flatten(w: &Wire, units: Units) -> Vec<Wire> {
    let mut out = Vec::new();
    flatten_into(w, units, &mut out);
    out
}

pub fn flatten_all(ws: &[Wire], units: Units) -> Vec<Wire> {
    let mut out = Vec::new();
    for w in ws {
        flatten_into(w, units, &mut out);
    }
    out
}

fn flatten_into(w: &Wire, units: Units, out: &mut Vec<Wire>) {
    match (w.obj.shape(), w.dir) {
        (Shape::Unit, _) if units == Units::Drop => {}
        (Shape::Product(a, b), Dir::R) => {
            flatten_into(&Wire::r(b, &w.cat), units, out);
            flatten_into(&Wire::r(a, &Cat::Base), units, out);
        }
        (Shape::Product(a, b), Dir::L) => {
            flatten_into(&Wire::l(a, &Cat::Base), units, out);
            flatten_into(&Wire::l(b, &w.cat), units, out);
        }
        _ => out.push(w.clone()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    Wire(Wire),
    /// A bare hom component, present only transiently or in wireless chains.
    Hom(Cat),
}

impl Slot {
    fn cat(&self) -> &Cat {
        match self {
            Slot::Wire(w) => &w.cat,
            Slot::Hom(c) => c,
        }
    }
}

/// Expected `(src, tgt)` of the component for `slot` between `c0` and `c1`.
fn comp_type(slot: &Slot, c0: &Obj, c1: &Obj) -> Result<(Obj, Obj)> {
    Ok(match slot {
        Slot::Wire(Wire { dir: Dir::R, obj, .. }) => (c0.clone(), Obj::product(c1, obj)?),
        Slot::Wire(Wire { dir: Dir::L, obj, .. }) => (Obj::product(c0, obj)?, c1.clone()),
        Slot::Hom(_) => (c0.clone(), c1.clone()),
    })
}

/// `f ⨾ comp` for `f : c' → c` at the start of a slot.
fn slot_pre(slot: &Slot, f: &Morphism, comp: &Morphism) -> Result<Morphism> {
    match slot {
        Slot::Wire(Wire { dir: Dir::L, obj, .. }) => st::act_right(f, obj)?.then(comp),
        _ => f.then(comp),
    }
}

/// `comp ⨾ g` for `g : c → c'` at the end of a slot.
fn slot_post(slot: &Slot, comp: &Morphism, g: &Morphism) -> Result<Morphism> {
    match slot {
        Slot::Wire(Wire { dir: Dir::R, obj, .. }) => comp.then(&st::act_right(g, obj)?),
        _ => comp.then(g),
    }
}

#[derive(Clone, Debug)]
pub struct Chain {
    objs: Vec<Obj>,
    slots: Vec<Slot>,
    comps: Vec<Morphism>,
}

/// A run of components produced by splitting raw wires; `objs` excludes the
/// starting object.
#[derive(Default)]
struct Piece {
    objs: Vec<Obj>,
    slots: Vec<Slot>,
    comps: Vec<Morphism>,
}

impl Chain {
    pub fn new(objs: Vec<Obj>, slots: Vec<Slot>, comps: Vec<Morphism>) -> Result<Chain> {
        if objs.len() != slots.len() + 1 || slots.len() != comps.len() || slots.is_empty() {
            return Err(mismatch("malformed chain"));
        }
        let mut lifted = Vec::with_capacity(comps.len());
        for (i, (s, c)) in slots.iter().zip(comps).enumerate() {
            let (src, tgt) = comp_type(s, &objs[i], &objs[i + 1])?;
            if c.src() != &src || c.tgt() != &tgt {
                return Err(mismatch(format!(
                    "component {i} of a chain should be {src} -> {tgt}, got {} -> {}",
                    c.src(),
                    c.tgt()
                )));
            }
            lifted.push(c.lift_to(s.cat())?);
        }
        Ok(Chain { objs, slots, comps: lifted })
    }

    /// A wireless element: a single hom component.
    pub fn hom(f: Morphism) -> Chain {
        Chain { objs: vec![f.src().clone(), f.tgt().clone()], slots: vec![Slot::Hom(f.cat().clone())], comps: vec![f] }
    }

    pub fn src(&self) -> &Obj {
        &self.objs[0]
    }

    pub fn tgt(&self) -> &Obj {
        self.objs.last().expect("chains are non-empty")
    }

    pub fn objs(&self) -> &[Obj] {
        &self.objs
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn comps(&self) -> &[Morphism] {
        &self.comps
    }

    pub fn is_hom(&self) -> bool {
        self.slots.iter().all(|s| matches!(s, Slot::Hom(_)))
    }

    pub fn wires(&self) -> Vec<Wire> {
        self.slots
            .iter()
            .filter_map(|s| match s {
                Slot::Wire(w) => Some(w.clone()),
                Slot::Hom(_) => None,
            })
            .collect()
    }

    /// Precompose with `f : a' → a`.
    pub fn left_act(&self, f: &Morphism) -> Result<Chain> {
        if f.tgt() != self.src() {
            return Err(mismatch(format!("cannot act by {} -> {} on a chain from {}", f.src(), f.tgt(), self.src())));
        }
        let mut c = self.clone();
        c.comps[0] = slot_pre(&c.slots[0], f, &c.comps[0])?.lift_to(c.slots[0].cat())?;
        c.objs[0] = f.src().clone();
        Ok(c)
    }

    /// Postcompose with `g : b → b'`.
    pub fn right_act(&self, g: &Morphism) -> Result<Chain> {
        if g.src() != self.tgt() {
            return Err(mismatch(format!("cannot act by {} -> {} on a chain to {}", g.src(), g.tgt(), self.tgt())));
        }
        let mut c = self.clone();
        let k = c.comps.len() - 1;
        c.comps[k] = slot_post(&c.slots[k], &c.comps[k], g)?.lift_to(c.slots[k].cat())?;
        *c.objs.last_mut().unwrap() = g.tgt().clone();
        Ok(c)
    }

    /// The Tambara strength `m ⊙ −` applied componentwise.
    pub fn strength(&self, m: &Obj) -> Result<Chain> {
        let objs = self.objs.iter().map(|o| Obj::product(m, o)).collect::<Result<Vec<_>>>()?;
        let mut comps = Vec::with_capacity(self.comps.len());
        for (i, (s, p)) in self.slots.iter().zip(&self.comps).enumerate() {
            let c = match s {
                Slot::Wire(Wire { dir: Dir::R, obj, .. }) => {
                    st::act(m, p)?.then(&st::assoc_inv(m, &self.objs[i + 1], obj)?)?
                }
                Slot::Wire(Wire { dir: Dir::L, obj, .. }) => st::assoc(m, &self.objs[i], obj)?.then(&st::act(m, p)?)?,
                Slot::Hom(_) => st::act(m, p)?,
            };
            comps.push(c);
        }
        Ok(Chain { objs, slots: self.slots.clone(), comps })
    }

    /// Absorb hom components into their neighbours.
    pub fn normalize(mut self) -> Result<Chain> {
        while self.slots.len() > 1 {
            let Some(i) = self.slots.iter().position(|s| matches!(s, Slot::Hom(_))) else { break };
            if i + 1 < self.slots.len() {
                let next = slot_pre(&self.slots[i + 1], &self.comps[i], &self.comps[i + 1])?;
                self.comps[i + 1] = next.lift_to(self.slots[i + 1].cat())?;
                self.objs.remove(i + 1);
            } else {
                let prev = slot_post(&self.slots[i - 1], &self.comps[i - 1], &self.comps[i])?;
                self.comps[i - 1] = prev.lift_to(self.slots[i - 1].cat())?;
                self.objs.remove(i);
            }
            self.slots.remove(i);
            self.comps.remove(i);
        }
        Ok(self)
    }

    /// Fuse the flattened components of each raw wire in `raw`, starting at
    /// flattened position `offset`. Returns the middle objects (one more than
    /// the number of raw wires) and the fused components.
    pub fn fuse_range(&self, offset: usize, raw: &[Wire], units: Units) -> Result<(Vec<Obj>, Vec<Morphism>)> {
        if self.is_hom() && !raw.is_empty() {
            return self.fuse_hom(offset, raw, units);
        }
        self.fuse_plain(offset, raw, units)
    }

    fn fuse_plain(&self, offset: usize, raw: &[Wire], units: Units) -> Result<(Vec<Obj>, Vec<Morphism>)> {
        let n_wires = if self.is_hom() { 0 } else { self.slots.len() };
        let mut pos = offset;
        let mut objs = vec![self.objs.get(pos).cloned().ok_or_else(|| mismatch("offset out of range"))?];
        let mut comps = Vec::with_capacity(raw.len());
        for w in raw {
            let k = flatten(w, units).len();
            if pos + k > n_wires {
                return Err(mismatch(format!("wire {w} does not fit at position {pos}")));
            }
            for (j, s) in self.slots[pos..pos + k].iter().enumerate() {
                let expect = &flatten(w, units)[j];
                if s != &Slot::Wire(expect.clone()) {
                    return Err(mismatch(format!("expected wire {expect} at position {}", pos + j)));
                }
            }
            comps.push(fuse(w, units, &self.objs[pos..=pos + k], &self.comps[pos..pos + k])?);
            pos += k;
            objs.push(self.objs[pos].clone());
        }
        Ok((objs, comps))
    }

    /// A wireless element viewed on raw wires that all flatten away: the hom
    /// component is absorbed into the first of them.
    fn fuse_hom(&self, offset: usize, raw: &[Wire], units: Units) -> Result<(Vec<Obj>, Vec<Morphism>)> {
        if offset != 0 || raw.iter().any(|w| !flatten(w, units).is_empty()) {
            return Err(mismatch("wires do not fit on a wireless element"));
        }
        let end = Chain::hom(Morphism::id(self.tgt()).lift_to(self.slots[0].cat())?);
        let (objs, mut comps) = end.fuse_plain(0, raw, units)?;
        let w0 = Slot::Wire(raw[0].clone());
        comps[0] = slot_pre(&w0, &self.comps[0], &comps[0])?.lift_to(&raw[0].cat)?;
        let mut objs = objs;
        objs[0] = self.src().clone();
        Ok((objs, comps))
    }

    /// Replace `len` flattened components at `offset` by the split of a raw
    /// run of slots. `objs` has one more entry than `raw`; its ends must match
    /// the replaced span.
    pub fn splice(&self, offset: usize, len: usize, raw: &[Slot], objs: &[Obj], comps: &[Morphism], units: Units) -> Result<Chain> {
        let hom = self.is_hom();
        if (hom && (offset != 0 || len != 0)) || (!hom && offset + len > self.slots.len()) {
            return Err(mismatch("splice out of range"));
        }
        if objs[0] != self.objs[offset] || objs.last() != self.objs.get(offset + len) {
            return Err(mismatch("splice endpoints do not match"));
        }
        let mut piece = Piece::default();
        for (i, s) in raw.iter().enumerate() {
            split_slot(s, units, &objs[i], &objs[i + 1], comps[i].clone(), &mut piece)?;
        }
        if piece.slots.is_empty() && len > 0 {
            let cat = self.slots[offset].cat().clone();
            piece.slots.push(Slot::Hom(cat.clone()));
            piece.comps.push(Morphism::id(&objs[0]).lift_to(&cat)?);
            piece.objs.push(objs[0].clone());
        }
        let mut out_objs = self.objs[..=offset].to_vec();
        let mut out_slots = self.slots[..offset].to_vec();
        let mut out_comps = self.comps[..offset].to_vec();
        out_objs.extend(piece.objs);
        out_slots.extend(piece.slots);
        out_comps.extend(piece.comps);
        out_objs.extend_from_slice(&self.objs[offset + len + 1..]);
        out_slots.extend_from_slice(&self.slots[offset + len..]);
        out_comps.extend_from_slice(&self.comps[offset + len..]);
        Chain { objs: out_objs, slots: out_slots, comps: out_comps }.normalize()
    }

    /// Rebuild a chain from raw (unflattened) wires and components.
    pub fn from_raw(objs: &[Obj], raw: &[Wire], comps: &[Morphism], units: Units) -> Result<Chain> {
        let slots: Vec<Slot> = raw.iter().map(|w| Slot::Wire(w.clone())).collect();
        Chain::from_raw_slots(objs, &slots, comps, units)
    }

    pub fn from_raw_slots(objs: &[Obj], raw: &[Slot], comps: &[Morphism], units: Units) -> Result<Chain> {
        if raw.is_empty() || objs.len() != raw.len() + 1 || comps.len() != raw.len() {
            return Err(mismatch("a raw chain needs matching objects, slots and components"));
        }
        let mut piece = Piece::default();
        for (i, s) in raw.iter().enumerate() {
            let (src, tgt) = comp_type(s, &objs[i], &objs[i + 1])?;
            if comps[i].src() != &src || comps[i].tgt() != &tgt {
                return Err(mismatch(format!("component {i} should be {src} -> {tgt}, got {} -> {}", comps[i].src(), comps[i].tgt())));
            }
            split_slot(s, units, &objs[i], &objs[i + 1], comps[i].clone(), &mut piece)?;
        }
        let mut all = vec![objs[0].clone()];
        all.extend(piece.objs);
        Chain { objs: all, slots: piece.slots, comps: piece.comps }.normalize()
    }

    /// The element at `(X, U)` given by the unitors, where the flattened wire
    /// list is `R…R L…L`. Every strength-preserving map out of such a module is
    /// determined by its value here.
    pub fn generic(wires: &[Wire], units: Units, region: &Cat) -> Result<Option<Chain>> {
        let split = wires.iter().position(|w| w.dir == Dir::L).unwrap_or(wires.len());
        if wires[split..].iter().any(|w| w.dir == Dir::R) {
            return Ok(None);
        }
        let rs = &wires[..split];
        let ls = &wires[split..];
        let i = Obj::unit();
        if rs.is_empty() && ls.is_empty() {
            return Ok(Some(Chain::hom(Morphism::id(&i).lift_to(region)?)));
        }
        let mut raw = Vec::new();
        let mut objs = Vec::new();
        let mut comps = Vec::new();
        if !rs.is_empty() {
            let mut x = rs[0].obj.clone();
            for w in &rs[1..] {
                x = Obj::product(&w.obj, &x)?;
            }
            objs.push(x.clone());
            raw.push(Wire::r(&x, &rs[0].cat));
            comps.push(st::lambda_inv(&x)?);
        }
        objs.push(i.clone());
        if !ls.is_empty() {
            let mut u = ls[ls.len() - 1].obj.clone();
            for w in ls[..ls.len() - 1].iter().rev() {
                u = Obj::product(&w.obj, &u)?;
            }
            objs.push(u.clone());
            raw.push(Wire::l(&u, &ls[ls.len() - 1].cat));
            comps.push(st::lambda(&u)?);
        }
        let c = Chain::from_raw(&objs, &raw, &comps, units)?;
        if c.wires() != wires {
            return Err(mismatch("generic element does not flatten back to its wires"));
        }
        Ok(Some(c))
    }
}

fn split_slot(s: &Slot, units: Units, c0: &Obj, c1: &Obj, comp: Morphism, out: &mut Piece) -> Result<()> {
    match s {
        Slot::Wire(w) => split_into(w, units, c0, c1, comp, out),
        Slot::Hom(cat) => {
            out.slots.push(s.clone());
            out.comps.push(comp.lift_to(cat)?);
            out.objs.push(c1.clone());
            Ok(())
        }
    }
}

fn split_into(w: &Wire, units: Units, c0: &Obj, c1: &Obj, comp: Morphism, out: &mut Piece) -> Result<()> {
    match (w.obj.shape(), w.dir) {
        (Shape::Unit, Dir::R) if units == Units::Drop => {
            out.slots.push(Slot::Hom(w.cat.clone()));
            out.comps.push(comp.then(&st::rho(c1)?)?);
            out.objs.push(c1.clone());
        }
        (Shape::Unit, Dir::L) if units == Units::Drop => {
            out.slots.push(Slot::Hom(w.cat.clone()));
            out.comps.push(st::rho_inv(c0)?.then(&comp)?);
            out.objs.push(c1.clone());
        }
        (Shape::Product(a, b), Dir::R) => {
            let mid = Obj::product(c1, a)?;
            let pb = comp.then(&st::assoc_inv(c1, a, b)?)?;
            split_into(&Wire::r(b, &w.cat), units, c0, &mid, pb, out)?;
            split_into(&Wire::r(a, &Cat::Base), units, &mid, c1, Morphism::id(&mid), out)?;
        }
        (Shape::Product(a, b), Dir::L) => {
            let mid = Obj::product(c0, a)?;
            split_into(&Wire::l(a, &Cat::Base), units, c0, &mid, Morphism::id(&mid), out)?;
            let qb = st::assoc(c0, a, b)?.then(&comp)?;
            split_into(&Wire::l(b, &w.cat), units, &mid, c1, qb, out)?;
        }
        _ => {
            out.slots.push(Slot::Wire(w.clone()));
            out.comps.push(comp.lift_to(&w.cat)?);
            out.objs.push(c1.clone());
        }
    }
    Ok(())
}

/// Inverse of `split_into` on one raw wire.
fn fuse(w: &Wire, units: Units, objs: &[Obj], comps: &[Morphism]) -> Result<Morphism> {
    let out = match (w.obj.shape(), w.dir) {
        (Shape::Unit, Dir::R) if units == Units::Drop => st::rho_inv(&objs[0])?,
        (Shape::Unit, Dir::L) if units == Units::Drop => st::rho(&objs[0])?,
        (Shape::Product(a, b), Dir::R) => {
            let k = flatten(&Wire::r(b, &w.cat), units).len();
            let pb = fuse(&Wire::r(b, &w.cat), units, &objs[..=k], &comps[..k])?;
            let pa = fuse(&Wire::r(a, &Cat::Base), units, &objs[k..], &comps[k..])?;
            let c1 = objs.last().unwrap();
            pb.then(&st::act_right(&pa, b)?)?.then(&st::assoc(c1, a, b)?)?
        }
        (Shape::Product(a, b), Dir::L) => {
            let k = flatten(&Wire::l(a, &Cat::Base), units).len();
            let qa = fuse(&Wire::l(a, &Cat::Base), units, &objs[..=k], &comps[..k])?;
            let qb = fuse(&Wire::l(b, &w.cat), units, &objs[k..], &comps[k..])?;
            st::assoc_inv(&objs[0], a, b)?.then(&st::act_right(&qa, b)?)?.then(&qb)?
        }
        _ => comps[0].clone(),
    };
    out.lift_to(&w.cat)
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.objs[0])?;
        for (i, (s, c)) in self.slots.iter().zip(&self.comps).enumerate() {
            let label = match s {
                Slot::Wire(w) => w.to_string(),
                Slot::Hom(_) => "hom".to_string(),
            };
            write!(f, " -[{label} {}]-> {}", c.show_table(), self.objs[i + 1])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Obj {
        Obj::atoms("B", &["0", "1"]).unwrap()
    }

    #[test]
    fn flatten_orders_product_wires() {
        let p = Obj::product(&b(), &Obj::skeletal(3).unwrap()).unwrap();
        let r: Vec<String> = flatten(&Wire::r(&p, &Cat::Base), Units::Drop).iter().map(|w| w.to_string()).collect();
        assert_eq!(r, ["R_3", "R_B"]);
        let l: Vec<String> = flatten(&Wire::l(&p, &Cat::Base), Units::Drop).iter().map(|w| w.to_string()).collect();
        assert_eq!(l, ["L_B", "L_3"]);
        let ib = Obj::product(&Obj::unit(), &b()).unwrap();
        assert_eq!(flatten(&Wire::r(&ib, &Cat::Base), Units::Drop).len(), 1);
        assert_eq!(flatten(&Wire::r(&ib, &Cat::Base), Units::Keep).len(), 2);
    }

    #[test]
    fn split_then_fuse_is_identity() {
        let bb = Obj::product(&b(), &b()).unwrap();
        let w = Wire::r(&bb, &Cat::Base);
        let tgt = Obj::product(&b(), &bb).unwrap();
        let p = Morphism::new(b(), tgt, Cat::Base, vec![5, 2]).unwrap();
        let c = Chain::from_raw(&[b(), b()], std::slice::from_ref(&w), std::slice::from_ref(&p), Units::Drop).unwrap();
        assert_eq!(c.slots().len(), 2);
        let (_, comps) = c.fuse_range(0, &[w], Units::Drop).unwrap();
        assert_eq!(comps[0], p);
    }

    #[test]
    fn unit_wires_collapse_to_homs() {
        let w = Wire::r(&Obj::unit(), &Cat::Base);
        let p = st::rho_inv(&b()).unwrap();
        let c = Chain::from_raw(&[b(), b()], &[w], &[p], Units::Drop).unwrap();
        assert!(c.is_hom());
        assert_eq!(c.comps()[0], Morphism::id(&b()));
    }

    #[test]
    fn generic_element_of_a_lens_module() {
        let ws = vec![Wire::r(&b(), &Cat::Base), Wire::l(&b(), &Cat::Base)];
        let g = Chain::generic(&ws, Units::Drop, &Cat::Base).unwrap().unwrap();
        assert_eq!(g.objs()[1], Obj::unit());
        assert_eq!(g.comps()[0], st::lambda_inv(&b()).unwrap());
    }
}
