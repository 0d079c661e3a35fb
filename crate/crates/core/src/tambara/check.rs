//! Equality of 2-cells and exhaustive checks of their naturality and
//! strength squares.

use std::fmt;

use super::chain::{Chain, Dir, Wire};
use super::elements::{for_each_element, ElemOpts};
use super::fast::{for_each_canonical, FastCell, FastChain};
use super::twocell::{show_wires, TwoCell};
use super::universe::Universe;
use crate::decide::{classes_equal, ClassVerdict, Search};
use crate::error::{mismatch, Error, Result};
use crate::fincat::{Cat, HomSet, Morphism, Obj};

/// Category of the region above a wire list.
pub fn top_region(ws: &[Wire], region: &Cat) -> Cat {
    match ws.first() {
        None => region.clone(),
        Some(w) if w.dir == Dir::R => w.cat.clone(),
        Some(_) => Cat::Base,
    }
}

/// Category of the region below a wire list.
pub fn bottom_region(ws: &[Wire], region: &Cat) -> Cat {
    match ws.last() {
        None => region.clone(),
        Some(w) if w.dir == Dir::L => w.cat.clone(),
        Some(_) => Cat::Base,
    }
}

/// Compare two 2-cells with a representable source on its generic element.
/// Returns `None` when the source is not representable.
pub fn equal_generic(t1: &TwoCell, t2: &TwoCell, search: &Search) -> Result<Option<ClassVerdict>> {
    same_boundary(t1, t2)?;
    let Some(g) = t1.generic()? else { return Ok(None) };
    let (r1, r2) = (t1.apply(&g)?, t2.apply(&g)?);
    let v = classes_equal(&r1, &r2, search)?;
    Ok(Some(match v {
        ClassVerdict::Distinct(why) => ClassVerdict::Distinct(format!("on the generic element {g}: {why}\n  left  {r1}\n  right {r2}")),
        v => v,
    }))
}

fn same_boundary(t1: &TwoCell, t2: &TwoCell) -> Result<()> {
    if t1.src != t2.src || t1.tgt != t2.tgt {
        return Err(mismatch(format!(
            "2-cells {} -> {} and {} -> {} have different boundaries",
            show_wires(&t1.src),
            show_wires(&t1.tgt),
            show_wires(&t2.src),
            show_wires(&t2.tgt)
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, Default)]
pub struct Pointwise {
    pub cells: usize,
    pub elements: u64,
    /// Cells skipped or only sampled because of bounds.
    pub truncated: Vec<String>,
    /// Elements whose comparison was only bounded.
    pub undecided: u64,
    pub witness: Option<String>,
}

impl Pointwise {
    pub fn equal(&self) -> bool {
        self.witness.is_none()
    }

    pub fn exact(&self) -> bool {
        self.truncated.is_empty() && self.undecided == 0
    }
}

/// Compare two 2-cells component by component over every pair of universe
/// objects.
pub fn pointwise_equal(t1: &TwoCell, t2: &TwoCell, universe: &Universe, opts: &ElemOpts, search: &Search) -> Result<Pointwise> {
    same_boundary(t1, t2)?;
    let fast = match (FastCell::compile(t1), FastCell::compile(t2)) {
        (Some(f1), Some(f2)) => Some((f1, f2)),
        _ => None,
    };
    let mut out = Pointwise::default();
    for a in universe.objects() {
        for b in universe.objects() {
            out.cells += 1;
            if let Some((f1, f2)) = &fast {
                match fast_cell(f1, f2, &t1.src, a, b, opts) {
                    Ok(Some(n)) => {
                        out.elements += n;
                        continue;
                    }
                    // a difference: rerun the cell below to report a witness
                    Ok(None) => {}
                    Err(Error::BoundExceeded { what, .. }) => {
                        out.truncated.push(format!("({a},{b}) skipped: {what}"));
                        continue;
                    }
                    Err(e) => return Err(e),
                }
            }
            let mut witness = None;
            let mut undecided = 0;
            let res = for_each_element(&t1.src, &t1.region, a, b, opts, &mut |e| {
                let (r1, r2) = (t1.apply(e)?, t2.apply(e)?);
                match classes_equal(&r1, &r2, search)? {
                    ClassVerdict::Equal => Ok(true),
                    ClassVerdict::DistinctWithinBound => {
                        undecided += 1;
                        Ok(true)
                    }
                    ClassVerdict::Distinct(why) => {
                        witness = Some(format!("at ({a},{b}) on {e}: {why}\n  left  {r1}\n  right {r2}"));
                        Ok(false)
                    }
                }
            });
            match res {
                Ok(cov) => {
                    out.elements += cov.visited;
                    if cov.sampled {
                        out.truncated.push(format!("({a},{b}) sampled"));
                    }
                }
                Err(Error::BoundExceeded { what, .. }) => out.truncated.push(format!("({a},{b}) skipped: {what}")),
                Err(e) => return Err(e),
            }
            out.undecided += undecided;
            if witness.is_some() {
                out.witness = witness;
                return Ok(out);
            }
        }
    }
    Ok(out)
}

/// Number of elements compared at `(a, b)`, or `None` at the first
/// difference.
fn fast_cell(f1: &FastCell, f2: &FastCell, src: &[Wire], a: &Obj, b: &Obj, opts: &ElemOpts) -> Result<Option<u64>> {
    let mut differs = false;
    let (mut k1, mut k2, mut runs, mut tmp) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    let mut scratch = FastChain::hom(0, 0, Vec::new());
    let mut check = |e: &FastChain| -> Result<bool> {
        scratch.clone_from(e);
        scratch = f1.apply_owned(std::mem::take(&mut scratch))?;
        scratch.key_into(&mut k1, &mut runs, &mut tmp);
        scratch.clone_from(e);
        scratch = f2.apply_owned(std::mem::take(&mut scratch))?;
        scratch.key_into(&mut k2, &mut runs, &mut tmp);
        differs = k1 != k2;
        Ok(!differs)
    };
    let (na, nb) = (a.card() as u32, b.card() as u32);
    let n = if src.is_empty() {
        let homs = HomSet::new(&Cat::Base, a, b)?;
        let mut table = vec![0; na as usize];
        let mut n = 0;
        for r in 0..homs.len() {
            homs.table_into(r, &mut table);
            n += 1;
            if !check(&FastChain::hom(na, nb, table.clone()))? {
                break;
            }
        }
        n
    } else {
        let ws: Vec<(Dir, u32)> = src.iter().map(|w| (w.dir, w.obj.card() as u32)).collect();
        for_each_canonical(&ws, na, nb, opts.max_elements, &mut check)?
    };
    Ok(if differs { None } else { Some(n) })
}

#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub subject: String,
    pub squares: u64,
    pub failures: Vec<String>,
    pub undecided: u64,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{status}: {} ({} squares", self.subject, self.squares)?;
        if self.undecided > 0 {
            write!(f, ", {} bounded", self.undecided)?;
        }
        writeln!(f, ")")?;
        for w in &self.failures {
            writeln!(f, "  failure: {w}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// Maps used to probe naturality in a region: all base maps, plus effectful
/// ones when the hom-set is small.
fn probes(cat: &Cat, a: &Obj, b: &Obj) -> Result<Vec<Morphism>> {
    let mut out: Vec<Morphism> = HomSet::new(&Cat::Base, a, b)?.iter().collect();
    if let Cat::Kleisli(_) = cat {
        let h = HomSet::new(cat, a, b)?;
        if h.len() <= 64 {
            for f in h.iter() {
                if f.as_pure().is_none() {
                    out.push(f);
                }
            }
        }
    }
    Ok(out)
}

/// Check that `t` commutes with both actions and the strength on every
/// element of its source over the universe.
pub fn check_2cell(t: &TwoCell, universe: &Universe, opts: &ElemOpts, search: &Search) -> Result<CheckReport> {
    let mut rep = CheckReport {
        subject: format!("2-cell {} -> {}", show_wires(&t.src), show_wires(&t.tgt)),
        ..Default::default()
    };
    let top = top_region(&t.src, &t.region);
    let bottom = bottom_region(&t.src, &t.region);
    let objs = universe.objects();
    for a in objs {
        for b in objs {
            let res = for_each_element(&t.src, &t.region, a, b, opts, &mut |e| {
                let te = t.apply(e)?;
                for a2 in objs {
                    for f in probes(&top, a2, a)? {
                        let l = t.apply(&e.left_act(&f)?)?;
                        let r = te.left_act(&f)?;
                        square(&mut rep, &l, &r, search, || format!("left action by {} at ({a},{b}) on {e}", f.show_table()))?;
                    }
                }
                for b2 in objs {
                    for g in probes(&bottom, b, b2)? {
                        let l = t.apply(&e.right_act(&g)?)?;
                        let r = te.right_act(&g)?;
                        square(&mut rep, &l, &r, search, || format!("right action by {} at ({a},{b}) on {e}", g.show_table()))?;
                    }
                }
                for m in objs {
                    let se = match e.strength(m) {
                        Ok(se) => se,
                        Err(Error::BoundExceeded { .. }) => continue,
                        Err(err) => return Err(err),
                    };
                    let l = t.apply(&se)?;
                    let r = te.strength(m)?;
                    square(&mut rep, &l, &r, search, || format!("strength by {m} at ({a},{b}) on {e}"))?;
                }
                Ok(rep.failures.len() < 5)
            });
            match res {
                Ok(cov) if cov.sampled => rep.notes.push(format!("({a},{b}) sampled")),
                Ok(_) => {}
                Err(Error::BoundExceeded { what, .. }) => rep.notes.push(format!("({a},{b}) skipped: {what}")),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(rep)
}

fn square(rep: &mut CheckReport, l: &Chain, r: &Chain, search: &Search, what: impl FnOnce() -> String) -> Result<()> {
    rep.squares += 1;
    match classes_equal(l, r, search)? {
        ClassVerdict::Equal => {}
        ClassVerdict::DistinctWithinBound => rep.undecided += 1,
        ClassVerdict::Distinct(why) => rep.failures.push(format!("{}: {why}", what())),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optic::Flavor;
    use crate::tambara::twocell::counit;

    #[test]
    fn counit_squares_commute_at_card_two() {
        let u = Universe::cards(1, 2).unwrap();
        let two = Obj::skeletal(2).unwrap();
        let s = Search::new(u.objects().to_vec());
        let rep = check_2cell(&counit(&two, &Flavor::Cartesian), &u, &ElemOpts::default(), &s).unwrap();
        assert!(rep.passed(), "{rep}");
        assert!(rep.squares > 100);
    }
}
