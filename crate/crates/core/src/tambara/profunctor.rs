//! Tabulated profunctors over a finite universe: hom, the oriented-wire
//! modules `R_x`, `L_x`, and their composites, with actions and strength.
//!
//! Values at `(a, b)` are numbered tokens: hom-set ranks for the basic
//! modules and coend classes for composites. Products that leave the
//! universe are carried back to the member of the same cardinality along the
//! index-preserving bijection; when there is no such member the entry is
//! truncated and reported.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::check::CheckReport;
use super::universe::Universe;
use crate::coend::{coend_quotient, Quotient};
use crate::error::{mismatch, Error, Result};
use crate::fincat::{structure as st, Cat, HomSet, Morphism, Obj};

#[derive(Clone, Debug)]
pub enum ProfKind {
    Hom,
    R(Obj),
    L(Obj),
    /// `P ⊗ Q`, with `P` on top.
    Compose(Arc<FinProfunctor>, Arc<FinProfunctor>),
}

#[derive(Debug)]
enum CellData {
    Homs(HomSet),
    Classes(Quotient),
}

/// A deliberately wrong strength entry, for testing the checker.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sabotage {
    pub m: usize,
    pub a: usize,
    pub b: usize,
    pub token: u64,
}

#[derive(Debug)]
pub struct FinProfunctor {
    kind: ProfKind,
    /// The non-`M` category of the module.
    cat: Cat,
    universe: Universe,
    sabotage: Option<Sabotage>,
    cells: Mutex<HashMap<(usize, usize), Arc<CellData>>>,
}

impl fmt::Display for FinProfunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = if self.cat.is_base() { String::new() } else { format!("[{}]", self.cat) };
        match &self.kind {
            ProfKind::Hom => write!(f, "hom{c}"),
            ProfKind::R(x) => write!(f, "R_{x}{c}"),
            ProfKind::L(x) => write!(f, "L_{x}{c}"),
            ProfKind::Compose(p, q) => write!(f, "({p} ⊗ {q})"),
        }
    }
}

pub fn hom_profunctor(cat: &Cat, universe: &Universe) -> FinProfunctor {
    FinProfunctor::new(ProfKind::Hom, cat, universe)
}

pub fn build_r(x: &Obj, cat: &Cat, universe: &Universe) -> FinProfunctor {
    FinProfunctor::new(ProfKind::R(x.clone()), cat, universe)
}

pub fn build_l(x: &Obj, cat: &Cat, universe: &Universe) -> FinProfunctor {
    FinProfunctor::new(ProfKind::L(x.clone()), cat, universe)
}

/// The composite `P ⊗ Q`, whose values are coend classes over the universe.
pub fn compose_prof(p: Arc<FinProfunctor>, q: Arc<FinProfunctor>) -> Result<FinProfunctor> {
    if p.dst_cat() != q.src_cat() || p.universe != q.universe {
        return Err(mismatch(format!("cannot compose {p} with {q}")));
    }
    let cat = if p.cat.is_base() { q.cat.clone() } else { p.cat.clone() };
    let universe = p.universe.clone();
    Ok(FinProfunctor::new(ProfKind::Compose(p, q), &cat, &universe))
}

impl FinProfunctor {
    fn new(kind: ProfKind, cat: &Cat, universe: &Universe) -> FinProfunctor {
        FinProfunctor { kind, cat: cat.clone(), universe: universe.clone(), sabotage: None, cells: Mutex::new(HashMap::new()) }
    }

    /// The same module with one strength entry replaced.
    pub fn sabotaged(mut self, s: Sabotage) -> FinProfunctor {
        self.sabotage = Some(s);
        self
    }

    pub fn kind(&self) -> &ProfKind {
        &self.kind
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Category of the first (contravariant) argument.
    pub fn src_cat(&self) -> Cat {
        match &self.kind {
            ProfKind::Hom | ProfKind::R(_) => self.cat.clone(),
            ProfKind::L(_) => Cat::Base,
            ProfKind::Compose(p, _) => p.src_cat(),
        }
    }

    /// Category of the second (covariant) argument.
    pub fn dst_cat(&self) -> Cat {
        match &self.kind {
            ProfKind::Hom | ProfKind::L(_) => self.cat.clone(),
            ProfKind::R(_) => Cat::Base,
            ProfKind::Compose(_, q) => q.dst_cat(),
        }
    }

    fn obj(&self, i: usize) -> &Obj {
        &self.universe.objects()[i]
    }

    /// Universe index of the member with cardinality `n`.
    pub fn transport(&self, n: usize) -> Option<usize> {
        self.universe.objects().iter().position(|o| o.card() == n)
    }

    fn cell(&self, a: usize, b: usize) -> Result<Arc<CellData>> {
        if let Some(c) = self.cells.lock().unwrap().get(&(a, b)) {
            return Ok(c.clone());
        }
        let (oa, ob) = (self.obj(a), self.obj(b));
        let data = match &self.kind {
            ProfKind::Hom => CellData::Homs(HomSet::new(&self.cat, oa, ob)?),
            ProfKind::R(x) => CellData::Homs(HomSet::new(&self.cat, oa, &Obj::product(ob, x)?)?),
            ProfKind::L(x) => CellData::Homs(HomSet::new(&self.cat, &Obj::product(oa, x)?, ob)?),
            ProfKind::Compose(p, q) => {
                let n = self.universe.objects().len();
                let p_size = (0..n).map(|m| p.size(a, m).map(|s| s as usize)).collect::<Result<Vec<_>>>()?;
                let q_size = (0..n).map(|m| q.size(m, b).map(|s| s as usize)).collect::<Result<Vec<_>>>()?;
                let mid_cat = p.dst_cat();
                let quot = coend_quotient(
                    &mid_cat,
                    self.universe.objects(),
                    &p_size,
                    &q_size,
                    |i, j, f| (0..p_size[i] as u64).map(|t| p.right_act(f, a, i, j, t).map(|r| r as u32)).collect(),
                    |i, j, f| (0..q_size[j] as u64).map(|t| q.left_act(f, i, j, b, t).map(|r| r as u32)).collect(),
                )?;
                CellData::Classes(quot)
            }
        };
        let data = Arc::new(data);
        self.cells.lock().unwrap().insert((a, b), data.clone());
        Ok(data)
    }

    /// Number of values at `(a, b)`.
    pub fn size(&self, a: usize, b: usize) -> Result<u64> {
        Ok(match &*self.cell(a, b)? {
            CellData::Homs(h) => h.len(),
            CellData::Classes(q) => q.n_classes() as u64,
        })
    }

    fn hom_at(&self, a: usize, b: usize) -> Result<HomSet> {
        match &*self.cell(a, b)? {
            CellData::Homs(h) => Ok(h.clone()),
            CellData::Classes(_) => Err(mismatch("composite values are classes, not maps")),
        }
    }

    fn quotient_at(&self, a: usize, b: usize) -> Result<Arc<CellData>> {
        self.cell(a, b)
    }

    /// The map behind a token of a basic module.
    pub fn token_map(&self, a: usize, b: usize, t: u64) -> Result<Morphism> {
        Ok(self.hom_at(a, b)?.get(t))
    }

    /// A representative `(mid, p, q)` of a composite token.
    pub fn token_rep(&self, a: usize, b: usize, t: u64) -> Result<(usize, u64, u64)> {
        match &*self.quotient_at(a, b)? {
            CellData::Classes(q) => {
                let (m, p, qq) = q.rep(t as u32);
                Ok((m, p as u64, qq as u64))
            }
            CellData::Homs(_) => Err(mismatch("basic modules have no coend representatives")),
        }
    }

    /// The class of `(mid, p, q)` at `(a, b)`.
    pub fn class_of(&self, a: usize, b: usize, mid: usize, p: u64, q: u64) -> Result<u64> {
        match &*self.quotient_at(a, b)? {
            CellData::Classes(quot) => Ok(quot.class_of(mid, p as usize, q as usize) as u64),
            CellData::Homs(_) => Err(mismatch("basic modules have no coend classes")),
        }
    }

    pub fn show_token(&self, a: usize, b: usize, t: u64) -> String {
        match &self.kind {
            ProfKind::Compose(p, q) => match self.token_rep(a, b, t) {
                Ok((m, tp, tq)) => format!("[{} | {}]@{}", p.show_token(a, m, tp), q.show_token(m, b, tq), self.obj(m)),
                Err(e) => e.to_string(),
            },
            _ => match self.token_map(a, b, t) {
                Ok(f) => f.show_table(),
                Err(e) => e.to_string(),
            },
        }
    }

    /// The token of a basic module given by a raw table.
    pub fn token_of_table(&self, a: usize, b: usize, table: &[u32]) -> Result<u64> {
        let h = self.hom_at(a, b)?;
        let n = h.src().card();
        if table.len() != n {
            return Err(mismatch(format!("table of length {} does not fit {} -> {}", table.len(), h.src(), h.tgt())));
        }
        Ok(h.rank_of_table(table))
    }

    pub fn obj_at(&self, i: usize) -> &Obj {
        self.obj(i)
    }

    fn rank(&self, a: usize, b: usize, f: &Morphism) -> Result<u64> {
        let h = self.hom_at(a, b)?;
        let f = f.lift_to(h.cat())?;
        Ok(h.rank_of_table(f.table()))
    }

    fn check_ends(&self, f: &Morphism, s: usize, t: usize) -> Result<()> {
        if f.src().card() != self.obj(s).card() || f.tgt().card() != self.obj(t).card() {
            return Err(mismatch(format!("{} -> {} does not match {} -> {}", f.src(), f.tgt(), self.obj(s), self.obj(t))));
        }
        Ok(())
    }

    /// Action of `f : a2 → a` on a value at `(a, b)`.
    pub fn left_act(&self, f: &Morphism, a2: usize, a: usize, b: usize, t: u64) -> Result<u64> {
        self.check_ends(f, a2, a)?;
        let f = retype(f, self.obj(a2), self.obj(a))?;
        match &self.kind {
            ProfKind::Hom | ProfKind::R(_) => self.rank(a2, b, &f.then(&self.token_map(a, b, t)?)?),
            ProfKind::L(x) => self.rank(a2, b, &st::act_right(&f, x)?.then(&self.token_map(a, b, t)?)?),
            ProfKind::Compose(p, _) => {
                let (m, tp, tq) = self.token_rep(a, b, t)?;
                self.class_of(a2, b, m, p.left_act(&f, a2, a, m, tp)?, tq)
            }
        }
    }

    /// Action of `g : b → b2` on a value at `(a, b)`.
    pub fn right_act(&self, g: &Morphism, a: usize, b: usize, b2: usize, t: u64) -> Result<u64> {
        self.check_ends(g, b, b2)?;
        let g = retype(g, self.obj(b), self.obj(b2))?;
        match &self.kind {
            ProfKind::Hom | ProfKind::L(_) => self.rank(a, b2, &self.token_map(a, b, t)?.then(&g)?),
            ProfKind::R(x) => self.rank(a, b2, &self.token_map(a, b, t)?.then(&st::act_right(&g, x)?)?),
            ProfKind::Compose(_, q) => {
                let (m, tp, tq) = self.token_rep(a, b, t)?;
                self.class_of(a, b2, m, tp, q.right_act(&g, m, b, b2, tq)?)
            }
        }
    }

    /// Strength by universe member `m`, landing at the members of the
    /// cardinalities of `m ⊙ a` and `m ⊙ b`. `None` when either is missing.
    pub fn strength(&self, m: usize, a: usize, b: usize, t: u64) -> Result<Option<(usize, usize, u64)>> {
        let om = self.obj(m).clone();
        let (Some(ma), Some(mb)) = (self.transport(om.card() * self.obj(a).card()), self.transport(om.card() * self.obj(b).card()))
        else {
            return Ok(None);
        };
        let out = match &self.kind {
            ProfKind::Hom => self.rank(ma, mb, &st::act(&om, &self.token_map(a, b, t)?)?)?,
            ProfKind::R(x) => {
                let p = self.token_map(a, b, t)?;
                let s = st::act(&om, &p)?.then(&st::assoc_inv(&om, self.obj(b), x)?)?;
                self.rank(ma, mb, &s)?
            }
            ProfKind::L(x) => {
                let q = self.token_map(a, b, t)?;
                let s = st::assoc(&om, self.obj(a), x)?.then(&st::act(&om, &q)?)?;
                self.rank(ma, mb, &s)?
            }
            ProfKind::Compose(p, q) => {
                let (mid, tp, tq) = self.token_rep(a, b, t)?;
                let Some((_, pm, sp)) = p.strength(m, a, mid, tp)? else { return Ok(None) };
                let Some((qm, _, sq)) = q.strength(m, mid, b, tq)? else { return Ok(None) };
                self.class_of(ma, mb, pm.max(qm), sp, sq)?
            }
        };
        let out = match self.sabotage {
            Some(s) if (s.m, s.a, s.b, s.token) == (m, a, b, t) => (out + 1) % self.size(ma, mb)?.max(1),
            _ => out,
        };
        Ok(Some((ma, mb, out)))
    }
}

/// The same table between objects of the same cardinalities.
fn retype(f: &Morphism, src: &Obj, tgt: &Obj) -> Result<Morphism> {
    if f.src() == src && f.tgt() == tgt {
        return Ok(f.clone());
    }
    Morphism::new(src.clone(), tgt.clone(), f.cat().clone(), f.table().to_vec())
}

/// Maps between universe members used as generators of the actions: all base
/// maps, plus effectful maps when `cat` is Kleisli and the hom-set is small.
fn generators(cat: &Cat, a: &Obj, b: &Obj) -> Result<Vec<Morphism>> {
    let mut out: Vec<Morphism> = HomSet::new(&Cat::Base, a, b)?.iter().collect();
    if !cat.is_base() {
        let h = HomSet::new(cat, a, b)?;
        if h.len() <= 64 {
            out.extend(h.iter().filter(|f| f.as_pure().is_none()));
        }
    }
    Ok(out)
}

/// Largest cell checked by `check_tambara`.
const MAX_CELL: u64 = 4096;

/// Composable pairs are drawn from at most this many maps per hom-set.
const MAX_PAIR_MAPS: usize = 16;

/// An evenly spaced subset of `maps`, flagging whether anything was dropped.
fn thin(maps: Vec<Morphism>, sampled: &mut bool) -> Vec<Morphism> {
    if maps.len() <= MAX_PAIR_MAPS {
        return maps;
    }
    *sampled = true;
    let step = maps.len().div_ceil(MAX_PAIR_MAPS);
    maps.into_iter().step_by(step).collect()
}

/// Exhaustive check of functoriality, strength naturality and the strength
/// coherences (unit and associativity) over every cell of the universe.
pub fn check_tambara(p: &FinProfunctor) -> CheckReport {
    let mut rep = CheckReport { subject: format!("Tambara module {p} over {}", p.universe.describe()), ..Default::default() };
    if let Err(e) = check_into(p, &mut rep) {
        rep.notes.push(format!("stopped: {e}"));
    }
    rep
}

fn check_into(p: &FinProfunctor, rep: &mut CheckReport) -> Result<()> {
    let objs = p.universe.objects().to_vec();
    let n = objs.len();
    let (src_cat, dst_cat) = (p.src_cat(), p.dst_cat());
    let mut sampled = false;
    let mut pair_maps = |cat: &Cat, x: usize, y: usize| -> Result<Vec<Morphism>> { Ok(thin(generators(cat, &objs[x], &objs[y])?, &mut sampled)) };
    let mut left_pairs = Vec::new();
    let mut right_pairs = Vec::new();
    for (x, y) in (0..n).flat_map(|x| (0..n).map(move |y| (x, y))) {
        left_pairs.push(pair_maps(&src_cat, x, y)?);
        right_pairs.push(pair_maps(&dst_cat, x, y)?);
    }
    let mut fail = |rep: &mut CheckReport, ok: bool, what: &dyn Fn() -> String| {
        rep.squares += 1;
        if !ok && rep.failures.len() < 20 {
            rep.failures.push(what());
        }
    };
    for a in 0..n {
        for b in 0..n {
            let size = match p.size(a, b) {
                Ok(s) if s <= MAX_CELL => s,
                Ok(s) => {
                    rep.notes.push(format!("cell ({},{}) has {s} values; skipped", objs[a], objs[b]));
                    continue;
                }
                Err(Error::BoundExceeded { what, .. }) => {
                    rep.notes.push(format!("cell ({},{}) truncated: {what}", objs[a], objs[b]));
                    continue;
                }
                Err(e) => return Err(e),
            };
            let id_a = Morphism::id(&objs[a]).lift_to(&src_cat)?;
            let id_b = Morphism::id(&objs[b]).lift_to(&dst_cat)?;
            for t in 0..size {
                let show = || p.show_token(a, b, t);
                fail(rep, p.left_act(&id_a, a, a, b, t)? == t, &|| format!("identity does not act trivially on the left at ({},{}) on {}", objs[a], objs[b], show()));
                fail(rep, p.right_act(&id_b, a, b, b, t)? == t, &|| format!("identity does not act trivially on the right at ({},{}) on {}", objs[a], objs[b], show()));
                // composites act as composites
                for a2 in 0..n {
                    for f in &left_pairs[a2 * n + a] {
                        let ft = p.left_act(f, a2, a, b, t)?;
                        for a3 in 0..n {
                            for f2 in &left_pairs[a3 * n + a2] {
                                let lhs = p.left_act(f2, a3, a2, b, ft)?;
                                let rhs = p.left_act(&f2.then(f)?, a3, a, b, t)?;
                                fail(rep, lhs == rhs, &|| format!("left action is not functorial at ({},{}) on {}: {} then {}", objs[a], objs[b], show(), f.show_table(), f2.show_table()));
                            }
                        }
                    }
                }
                for b2 in 0..n {
                    for g in &right_pairs[b * n + b2] {
                        let gt = p.right_act(g, a, b, b2, t)?;
                        for b3 in 0..n {
                            for g2 in &right_pairs[b2 * n + b3] {
                                let lhs = p.right_act(g2, a, b2, b3, gt)?;
                                let rhs = p.right_act(&g.then(g2)?, a, b, b3, t)?;
                                fail(rep, lhs == rhs, &|| format!("right action is not functorial at ({},{}) on {}: {} then {}", objs[a], objs[b], show(), g.show_table(), g2.show_table()));
                            }
                        }
                    }
                }
                check_strength(p, rep, &objs, a, b, t, &mut fail)?;
            }
        }
    }
    if sampled {
        rep.notes.push(format!("functoriality checked on at most {MAX_PAIR_MAPS} maps per hom-set"));
    }
    Ok(())
}

type Fail<'a> = dyn FnMut(&mut CheckReport, bool, &dyn Fn() -> String) + 'a;

fn check_strength(p: &FinProfunctor, rep: &mut CheckReport, objs: &[Obj], a: usize, b: usize, t: u64, fail: &mut Fail) -> Result<()> {
    let n = objs.len();
    let show = || p.show_token(a, b, t);
    let (src_cat, dst_cat) = (p.src_cat(), p.dst_cat());
    // unit: strength by I is the identity (I ⊙ a has the index order of a)
    // when a or b is not the first of its cardinality, the product lands on
    // that first object and t is moved along the index-preserving bijections
    let s_unit = p.strength(0, a, b, t)?;
    let want = match (p.transport(objs[a].card()), p.transport(objs[b].card())) {
        (Some(a1), Some(b1)) if (a1, b1) != (a, b) => {
            let along = |from: usize, to: usize, cat: &Cat| -> Result<Morphism> {
                let ids = (0..objs[from].card() as u32).collect();
                Morphism::new(objs[from].clone(), objs[to].clone(), Cat::Base, ids)?.lift_to(cat)
            };
            let t1 = p.left_act(&along(a1, a, &src_cat)?, a1, a, b, t)?;
            Some((a1, b1, p.right_act(&along(b, b1, &dst_cat)?, a1, b, b1, t1)?))
        }
        _ => Some((a, b, t)),
    };
    fail(rep, s_unit == want, &|| format!("strength by I is not the identity at ({},{}) on {}", objs[a], objs[b], show()));
    for m in 0..n {
        let Some((ma, mb, st_t)) = p.strength(m, a, b, t)? else {
            continue;
        };
        let om = &objs[m];
        // naturality in both arguments
        for a2 in 0..n {
            let Some(ma2) = p.transport(om.card() * objs[a2].card()) else { continue };
            for f in generators(&src_cat, &objs[a2], &objs[a])? {
                let lhs = p.strength(m, a2, b, p.left_act(&f, a2, a, b, t)?)?;
                let mf = st::act(om, &f)?;
                let rhs = p.left_act(&mf, ma2, ma, mb, st_t)?;
                fail(rep, lhs == Some((ma2, mb, rhs)), &|| {
                    format!("strength by {om} is not natural on the left at ({},{}) on {} for {}", objs[a], objs[b], show(), f.show_table())
                });
            }
        }
        for b2 in 0..n {
            let Some(mb2) = p.transport(om.card() * objs[b2].card()) else { continue };
            for g in generators(&dst_cat, &objs[b], &objs[b2])? {
                let lhs = p.strength(m, a, b2, p.right_act(&g, a, b, b2, t)?)?;
                let mg = st::act(om, &g)?;
                let rhs = p.right_act(&mg, ma, mb, mb2, st_t)?;
                fail(rep, lhs == Some((ma, mb2, rhs)), &|| {
                    format!("strength by {om} is not natural on the right at ({},{}) on {} for {}", objs[a], objs[b], show(), g.show_table())
                });
            }
        }
        // associativity: strength by m after strength by k is strength by m ⊗ k
        for k in 0..n {
            let Some(mk) = p.transport(om.card() * objs[k].card()) else { continue };
            let Some((ka, kb, tk)) = p.strength(k, a, b, t)? else { continue };
            let twice = p.strength(m, ka, kb, tk)?;
            let once = p.strength(mk, a, b, t)?;
            if twice.is_some() || once.is_some() {
                fail(rep, twice == once, &|| format!("strength by {om} after {} differs from strength by their product at ({},{}) on {}", objs[k], objs[a], objs[b], show()));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optic::{count_classes, Flavor};

    fn small() -> Universe {
        Universe::cards(1, 2).unwrap()
    }

    #[test]
    fn hom_values_and_actions() {
        let u = small();
        let h = hom_profunctor(&Cat::Base, &u);
        assert_eq!(h.size(1, 1).unwrap(), 4);
        let not = Morphism::new(u.objects()[1].clone(), u.objects()[1].clone(), Cat::Base, vec![1, 0]).unwrap();
        let id_rank = h.rank(1, 1, &Morphism::id(&u.objects()[1])).unwrap();
        let acted = h.left_act(&not, 1, 1, 1, id_rank).unwrap();
        assert_eq!(h.token_map(1, 1, acted).unwrap().table(), &[1, 0]);
        // strength by 2 of id_I is id_2
        let id_i = h.rank(0, 0, &Morphism::id(&u.objects()[0])).unwrap();
        assert_eq!(h.strength(1, 0, 0, id_i).unwrap(), Some((1, 1, id_rank)));
        // 2 ⊗ 2 leaves the universe
        assert_eq!(h.strength(1, 1, 1, id_rank).unwrap(), None);
    }

    #[test]
    fn basic_modules_are_tambara() {
        let u = small();
        let two = Obj::skeletal(2).unwrap();
        for p in [hom_profunctor(&Cat::Base, &u), build_r(&two, &Cat::Base, &u), build_l(&two, &Cat::Base, &u)] {
            let rep = check_tambara(&p);
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn sabotaged_strength_is_caught() {
        // with cardinality 4 present, strength by 2 at (2, I) meets maps I -> 2
        let u = Universe::new([Obj::unit(), Obj::skeletal(2).unwrap(), Obj::skeletal(4).unwrap()]);
        let clean = hom_profunctor(&Cat::Base, &u);
        assert!(check_tambara(&clean).passed());
        let p = hom_profunctor(&Cat::Base, &u).sabotaged(Sabotage { m: 1, a: 1, b: 0, token: 0 });
        let rep = check_tambara(&p);
        assert!(!rep.passed());
        assert!(rep.failures.iter().any(|f| f.contains("strength")), "{rep}");
    }

    #[test]
    fn lens_composite_counts_lenses() {
        let u = Universe::default();
        let two = Obj::skeletal(2).unwrap();
        let r = Arc::new(build_r(&two, &Cat::Base, &u));
        let l = Arc::new(build_l(&two, &Cat::Base, &u));
        let c = compose_prof(r, l).unwrap();
        assert_eq!(c.size(1, 1).unwrap(), 64);
        let n = count_classes(&two, &two, &two, &two, &Flavor::Cartesian, 2).unwrap();
        assert_eq!(n, 64);
    }
}
