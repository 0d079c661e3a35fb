//! Coend classes of optics: the zigzag oracle and class counting.

use super::{Flavor, Optic};
use crate::coend::{act_right_values, coend_quotient, post_map_ranks, pre_map_ranks};
use crate::decide::{zigzag_search, Block, Merged, Search};
use crate::error::{mismatch, Result};
use crate::fincat::{structure as st, Cat, HomSet, Obj};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZigzagVerdict {
    Equal,
    DistinctWithinBound,
}

pub fn default_residual_bound(x: &Obj) -> usize {
    x.card().max(6)
}

/// Skeletal objects of cardinality `1..=bound` followed by any extra objects
/// within the bound, ordered by cardinality then name, without duplicates.
pub fn residual_set(bound: usize, extra: &[Obj]) -> Result<Vec<Obj>> {
    let mut out: Vec<Obj> = Vec::new();
    for n in 1..=bound {
        out.push(Obj::skeletal(n)?);
    }
    for o in extra {
        if o.card() <= bound && !out.contains(o) {
            out.push(o.clone());
        }
    }
    out.sort_by(|a, b| a.card().cmp(&b.card()).then_with(|| a.name().cmp(b.name())));
    Ok(out)
}

fn as_merged(o: &Optic) -> Merged {
    Merged {
        blocks: vec![
            Block { input: None, output: Some(o.y.clone()), comp: o.alpha.clone() },
            Block { input: Some(o.v.clone()), output: None, comp: o.beta.clone() },
        ],
    }
}

/// Search the symmetric closure of single sliding steps, with residuals drawn
/// from objects of cardinality at most `bound` (plus both residuals).
pub fn zigzag_equal(o1: &Optic, o2: &Optic, bound: usize) -> Result<ZigzagVerdict> {
    if !o1.same_boundary(o2) {
        return Err(mismatch("zigzag_equal needs optics with the same boundary and flavor"));
    }
    let residuals = residual_set(bound, &[o1.x.clone(), o1.m.clone(), o2.m.clone()])?;
    let mut residuals = residuals;
    for m in [&o1.m, &o2.m] {
        if !residuals.contains(m) {
            residuals.push(m.clone());
        }
    }
    let search = Search { residuals, max_states: 200_000, max_handlers: 0 };
    let found = zigzag_search(&as_merged(o1), &as_merged(o2), &search)?;
    Ok(if found { ZigzagVerdict::Equal } else { ZigzagVerdict::DistinctWithinBound })
}

/// Number of classes of optics `⟨x,u⟩ → ⟨y,v⟩` with residuals of cardinality
/// at most `bound`, by union-find over every sliding relation.
pub fn count_classes(x: &Obj, u: &Obj, y: &Obj, v: &Obj, flavor: &Flavor, bound: usize) -> Result<usize> {
    let cat = flavor.cat();
    let mids = residual_set(bound, &[x.clone(), u.clone(), y.clone(), v.clone()])?;
    let ps: Vec<HomSet> = mids.iter().map(|n| HomSet::new(&cat, x, &Obj::product(n, y)?)).collect::<Result<_>>()?;
    let qs: Vec<HomSet> = mids.iter().map(|n| HomSet::new(&cat, &Obj::product(n, v)?, u)).collect::<Result<_>>()?;
    let p_size: Vec<usize> = ps.iter().map(|h| h.len() as usize).collect();
    let q_size: Vec<usize> = qs.iter().map(|h| h.len() as usize).collect();
    let q = coend_quotient(
        &Cat::Base,
        &mids,
        &p_size,
        &q_size,
        |i, j, f| Ok(post_map_ranks(&ps[i], &ps[j], &act_right_values(&cat, f, y))),
        |i, j, f| Ok(pre_map_ranks(&qs[j], &qs[i], st::act_right(f, v)?.table())),
    )?;
    Ok(q.n_classes())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Obj {
        Obj::atoms("B", &["0", "1"]).unwrap()
    }

    #[test]
    fn lens_classes_on_b() {
        assert_eq!(count_classes(&b(), &b(), &b(), &b(), &Flavor::Cartesian, 2).unwrap(), 64);
    }

    #[test]
    fn unit_updates_count_get_maps() {
        let i = Obj::unit();
        assert_eq!(count_classes(&b(), &i, &b(), &i, &Flavor::Cartesian, 2).unwrap(), 4);
        assert_eq!(count_classes(&i, &i, &i, &i, &Flavor::Cartesian, 1).unwrap(), 1);
    }
}
