//! Enumerating elements of wire composites at a pair of objects.
//!
//! For cartesian wires every class has a canonical representative whose
//! middle objects record the history of inputs received so far, so the
//! enumeration is exact. Effectful composites are enumerated over chosen
//! residual objects, sampled deterministically when too large.

use super::chain::{Chain, Dir, Slot, Wire};
use super::fast::for_each_canonical;
use crate::error::{Error, Result};
use crate::fincat::{Cat, HomSet, Obj};

#[derive(Clone, Debug)]
pub struct ElemOpts {
    /// Largest number of elements visited per cell.
    pub max_elements: u64,
    /// Middle objects used for effectful composites.
    pub residuals: Vec<Obj>,
}

impl Default for ElemOpts {
    fn default() -> ElemOpts {
        ElemOpts { max_elements: 1 << 21, residuals: vec![Obj::unit(), Obj::skeletal(2).unwrap()] }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Coverage {
    pub visited: u64,
    /// Whether only a subset of the cell was visited.
    pub sampled: bool,
}

/// Visit elements of `wires` at `(a, b)`. The visitor returns `false` to stop.
pub fn for_each_element(
    wires: &[Wire],
    region: &Cat,
    a: &Obj,
    b: &Obj,
    opts: &ElemOpts,
    visit: &mut dyn FnMut(&Chain) -> Result<bool>,
) -> Result<Coverage> {
    if wires.is_empty() {
        let homs = HomSet::new(region, a, b)?;
        let mut cov = Coverage::default();
        for f in homs.iter() {
            cov.visited += 1;
            if !visit(&Chain::hom(f))? {
                break;
            }
        }
        return Ok(cov);
    }
    if wires.iter().all(|w| w.cat.is_base()) {
        canonical(wires, a, b, opts, visit)
    } else {
        sampled(wires, a, b, opts, visit)
    }
}

fn canonical(
    wires: &[Wire],
    a: &Obj,
    b: &Obj,
    opts: &ElemOpts,
    visit: &mut dyn FnMut(&Chain) -> Result<bool>,
) -> Result<Coverage> {
    let k = wires.len();
    let mut objs = vec![a.clone()];
    for w in &wires[..k - 1] {
        let s = objs.last().unwrap().clone();
        objs.push(match w.dir {
            Dir::R => s,
            Dir::L => Obj::product(&s, &w.obj)?,
        });
    }
    objs.push(b.clone());
    let ws: Vec<(Dir, u32)> = wires.iter().map(|w| (w.dir, w.obj.card() as u32)).collect();
    let visited = for_each_canonical(&ws, a.card() as u32, b.card() as u32, opts.max_elements, &mut |e| {
        visit(&e.to_chain(&objs, wires)?)
    })?;
    Ok(Coverage { visited, sampled: false })
}

fn sampled(
    wires: &[Wire],
    a: &Obj,
    b: &Obj,
    opts: &ElemOpts,
    visit: &mut dyn FnMut(&Chain) -> Result<bool>,
) -> Result<Coverage> {
    let k = wires.len();
    let slots: Vec<Slot> = wires.iter().map(|w| Slot::Wire(w.clone())).collect();
    let mut cov = Coverage::default();
    let n_res = opts.residuals.len();
    let mids = k - 1;
    let combos = n_res.pow(mids as u32);
    let per_combo = (opts.max_elements / combos.max(1) as u64).max(1);
    for combo in 0..combos {
        let mut objs = vec![a.clone()];
        let mut rest = combo;
        for _ in 0..mids {
            objs.push(opts.residuals[rest % n_res].clone());
            rest /= n_res;
        }
        objs.push(b.clone());
        let mut homs = Vec::with_capacity(k);
        let mut ok = true;
        for (i, w) in wires.iter().enumerate() {
            let (src, tgt) = match w.dir {
                Dir::R => (objs[i].clone(), Obj::product(&objs[i + 1], &w.obj)?),
                Dir::L => (Obj::product(&objs[i], &w.obj)?, objs[i + 1].clone()),
            };
            match HomSet::new(&w.cat, &src, &tgt) {
                Ok(h) => homs.push(h),
                Err(Error::BoundExceeded { .. }) => {
                    ok = false;
                    cov.sampled = true;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if !ok {
            continue;
        }
        let total: u128 = homs.iter().map(|h| h.len() as u128).product();
        if total == 0 {
            continue;
        }
        let stride = if total > per_combo as u128 {
            cov.sampled = true;
            // an odd stride coprime to most radices spreads the sample
            (total / per_combo as u128) | 1
        } else {
            1
        };
        let mut idx: u128 = 0;
        while idx < total {
            let mut rest = idx;
            let mut comps = Vec::with_capacity(k);
            for h in homs.iter().rev() {
                comps.push(h.get((rest % h.len() as u128) as u64));
                rest /= h.len() as u128;
            }
            comps.reverse();
            let chain = Chain::new(objs.clone(), slots.clone(), comps)?;
            cov.visited += 1;
            if !visit(&chain)? {
                return Ok(cov);
            }
            idx += stride;
        }
    }
    Ok(cov)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decide::cartesian_key;
    use std::collections::HashSet;

    #[test]
    fn canonical_lens_elements_are_distinct_and_complete() {
        let two = Obj::skeletal(2).unwrap();
        let ws = vec![Wire::r(&two, &Cat::Base), Wire::l(&two, &Cat::Base)];
        let mut keys = HashSet::new();
        let cov = for_each_element(&ws, &Cat::Base, &two, &two, &ElemOpts::default(), &mut |c| {
            keys.insert(cartesian_key(c).unwrap());
            Ok(true)
        })
        .unwrap();
        assert_eq!(cov.visited, 64);
        assert_eq!(keys.len(), 64);
    }

    #[test]
    fn hom_elements() {
        let two = Obj::skeletal(2).unwrap();
        let cov = for_each_element(&[], &Cat::Base, &two, &Obj::skeletal(3).unwrap(), &ElemOpts::default(), &mut |_| Ok(true))
            .unwrap();
        assert_eq!(cov.visited, 9);
    }
}
