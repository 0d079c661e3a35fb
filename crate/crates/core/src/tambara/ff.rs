//! Exhaustive search for the strength-preserving natural transformations
//! `R_x → R_y`, compared against the cells `R_f` for `f : x → y`.
//!
//! A transformation is fixed by its component at `(x, I)`. Every function on
//! that cell is tried: it is extended to all cells by
//! `φ(p) = p ; (b × c(λ⁻¹))`, and kept when it agrees with itself on the
//! cell, commutes with every action and with the strength.

use std::fmt;

use super::profunctor::{build_r, FinProfunctor};
use super::universe::Universe;
use crate::error::{Error, Result};
use crate::fincat::{structure as st, Cat, HomSet, Morphism, Obj};

/// Largest number of candidate components tried.
pub const MAX_CANDIDATES: u64 = 256;

#[derive(Clone, Debug)]
pub struct FfReport {
    pub x: Obj,
    pub y: Obj,
    pub candidates: u64,
    /// Components at `(x, I)` of the surviving transformations.
    pub natural: Vec<Vec<u64>>,
    /// Components of `R_f` at `(x, I)`, one per `f`.
    pub r_f: Vec<Vec<u64>>,
    pub injective: bool,
    /// Every survivor is some `R_f` and every `R_f` survives.
    pub all_represented: bool,
    pub notes: Vec<String>,
}

impl FfReport {
    pub fn passed(&self) -> bool {
        self.injective && self.all_represented
    }

    pub fn classes(&self) -> usize {
        self.natural.len()
    }
}

impl fmt::Display for FfReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        writeln!(
            f,
            "{status}: 2-cells R_{} -> R_{}: {} of {} candidates natural, |C({}, {})| = {}, injective: {}, all of the form R_f: {}",
            self.x,
            self.y,
            self.natural.len(),
            self.candidates,
            self.x,
            self.y,
            self.r_f.len(),
            self.injective,
            self.all_represented
        )?;
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

struct Search<'a> {
    rx: FinProfunctor,
    ry: FinProfunctor,
    u: &'a Universe,
    x: Obj,
    y: Obj,
    /// Universe indices of the cells checked.
    cells: Vec<usize>,
}

impl Search<'_> {
    /// `φ(p) = p ; (b × g)` at `(a, b)`, for the map `g : x → y` read off a
    /// component value at `(x, I)`.
    fn extend(&self, g: &Morphism, a: usize, b: usize, t: u64) -> Result<u64> {
        let p = self.rx.token_map(a, b, t)?;
        let bg = st::act(&self.u.objects()[b], g)?;
        let r = retable(&p, bg.table());
        self.ry.token_of_table(a, b, &r)
    }

    /// Whether the extension of `g` is natural and strength-preserving on
    /// the checked cells.
    fn natural(&self, g: &Morphism) -> Result<bool> {
        let objs = self.u.objects();
        for &a in &self.cells {
            for &b in &self.cells {
                for t in 0..self.rx.size(a, b)? {
                    let ft = self.extend(g, a, b, t)?;
                    for &a2 in &self.cells {
                        for f in HomSet::new(&Cat::Base, &objs[a2], &objs[a])?.iter() {
                            if self.extend(g, a2, b, self.rx.left_act(&f, a2, a, b, t)?)? != self.ry.left_act(&f, a2, a, b, ft)? {
                                return Ok(false);
                            }
                        }
                    }
                    for &b2 in &self.cells {
                        for h in HomSet::new(&Cat::Base, &objs[b], &objs[b2])?.iter() {
                            if self.extend(g, a, b2, self.rx.right_act(&h, a, b, b2, t)?)? != self.ry.right_act(&h, a, b, b2, ft)? {
                                return Ok(false);
                            }
                        }
                    }
                    for &m in &self.cells {
                        let (Some(s), Some(sy)) = (self.rx.strength(m, a, b, t)?, self.ry.strength(m, a, b, ft)?) else { continue };
                        if s.0 != sy.0 || s.1 != sy.1 || self.extend(g, s.0, s.1, s.2)? != sy.2 {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }
}

/// `p` followed by a table on its codomain indices.
fn retable(p: &Morphism, then: &[u32]) -> Vec<u32> {
    p.table().iter().map(|&v| then[v as usize]).collect()
}

/// Search all candidate components at `(x, I)` for 2-cells `R_x → R_y`,
/// checking cells of cardinality at most `max_card`.
pub fn arrows_ff(x: &Obj, y: &Obj, u: &Universe, max_card: usize) -> Result<FfReport> {
    let (Some(xi), Some(ii)) = (u.index_of_card(x.card()), u.index_of_card(1)) else {
        return Err(Error::NotRepresentable(format!("{x} or I is missing from the universe")));
    };
    let s = Search {
        rx: build_r(x, &Cat::Base, u),
        ry: build_r(y, &Cat::Base, u),
        u,
        x: x.clone(),
        y: y.clone(),
        cells: (0..u.objects().len()).filter(|&i| u.objects()[i].card() <= max_card).collect(),
    };
    let (nx, ny) = (s.rx.size(xi, ii)?, s.ry.size(xi, ii)?);
    let candidates = ny.checked_pow(nx as u32).unwrap_or(u64::MAX);
    if candidates > MAX_CANDIDATES {
        return Err(Error::BoundExceeded { what: "candidate 2-cell components".into(), size: candidates as u128, limit: MAX_CANDIDATES as u128 });
    }
    // the generic element λ⁻¹ : x → I × x has the identity table
    let gen = s.rx.token_of_table(xi, ii, &(0..x.card() as u32).collect::<Vec<_>>())?;
    let xo = &u.objects()[xi];
    let mut natural = Vec::new();
    let mut notes = Vec::new();
    for c in 0..candidates {
        let comp: Vec<u64> = (0..nx).map(|i| (c / ny.pow(i as u32)) % ny).collect();
        // c(λ⁻¹) : x → I × y, read as x → y
        let g = Morphism::new(xo.clone(), y.clone(), Cat::Base, s.ry.token_map(xi, ii, comp[gen as usize])?.table().to_vec())?;
        let agrees = (0..nx).map(|t| s.extend(&g, xi, ii, t)).collect::<Result<Vec<_>>>()? == comp;
        match if agrees { s.natural(&g) } else { Ok(false) } {
            Ok(true) => natural.push(comp),
            Ok(false) => {}
            Err(Error::BoundExceeded { what, .. }) => notes.push(format!("candidate {c}: {what}")),
            Err(e) => return Err(e),
        }
    }
    let mut r_f = Vec::new();
    for f in HomSet::new(&Cat::Base, xo, y)?.iter() {
        let rf: Vec<u64> = (0..nx)
            .map(|t| {
                let p = s.rx.token_map(xi, ii, t)?;
                let r = retable(&p, st::act(&Obj::unit(), &f)?.table());
                s.ry.token_of_table(xi, ii, &r)
            })
            .collect::<Result<_>>()?;
        r_f.push(rf);
    }
    let mut sorted = r_f.clone();
    sorted.sort();
    sorted.dedup();
    let injective = sorted.len() == r_f.len();
    let mut found = natural.clone();
    found.sort();
    let all_represented = found == sorted;
    Ok(FfReport { x: s.x, y: s.y, candidates, natural, r_f, injective, all_represented, notes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cells_between_r_two_are_the_four_maps() {
        let u = Universe::default();
        let two = Obj::skeletal(2).unwrap();
        let rep = arrows_ff(&two, &two, &u, 2).unwrap();
        assert_eq!(rep.candidates, 256);
        assert_eq!(rep.classes(), 4);
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn unit_wires() {
        let u = Universe::default();
        let two = Obj::skeletal(2).unwrap();
        let i = Obj::unit();
        let a = arrows_ff(&i, &two, &u, 2).unwrap();
        assert_eq!((a.candidates, a.classes()), (2, 2));
        let b = arrows_ff(&two, &i, &u, 2).unwrap();
        assert_eq!((b.candidates, b.classes()), (1, 1));
        assert!(a.passed() && b.passed());
    }
}
