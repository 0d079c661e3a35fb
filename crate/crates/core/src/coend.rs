//! Coends over a finite set of middle objects: the disjoint union of
//! `P(n) × Q(n)` quotiented by `(p·f, q) ~ (p, f·q)` for every map `f`
//! between middles, computed with union-find.

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::fincat::{Cat, HomSet, Morphism, Obj};

/// Largest disjoint union we are willing to quotient.
const MAX_TOKENS: usize = 1 << 24;

#[derive(Clone, Debug)]
pub struct Quotient {
    pub mids: Vec<Obj>,
    p_size: Vec<usize>,
    q_size: Vec<usize>,
    offsets: Vec<usize>,
    class_of: Vec<u32>,
    reps: Vec<usize>,
}

impl Quotient {
    pub fn n_classes(&self) -> usize {
        self.reps.len()
    }

    pub fn n_tokens(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn class_of(&self, mid: usize, p: usize, q: usize) -> u32 {
        self.class_of[self.offsets[mid] + p * self.q_size[mid] + q]
    }

    /// The representative of a class: minimal middle index, then token index.
    pub fn rep(&self, class: u32) -> (usize, usize, usize) {
        self.decode(self.reps[class as usize])
    }

    fn decode(&self, g: usize) -> (usize, usize, usize) {
        let mid = self.offsets.partition_point(|&o| o <= g) - 1;
        let local = g - self.offsets[mid];
        (mid, local / self.q_size[mid], local % self.q_size[mid])
    }

    pub fn p_size(&self, mid: usize) -> usize {
        self.p_size[mid]
    }

    pub fn q_size(&self, mid: usize) -> usize {
        self.q_size[mid]
    }
}

/// `p_post(i, j, f)` gives, for each `p ∈ P(mids[i])`, the index of `p·f` in
/// `P(mids[j])`; `q_pre(i, j, f)` gives, for each `q ∈ Q(mids[j])`, the index
/// of `f·q` in `Q(mids[i])`.
pub fn coend_quotient<FP, FQ>(
    cat: &Cat,
    mids: &[Obj],
    p_size: &[usize],
    q_size: &[usize],
    mut p_post: FP,
    mut q_pre: FQ,
) -> Result<Quotient>
where
    FP: FnMut(usize, usize, &Morphism) -> Result<Vec<u32>>,
    FQ: FnMut(usize, usize, &Morphism) -> Result<Vec<u32>>,
{
    let mut offsets = vec![0usize];
    for (p, q) in p_size.iter().zip(q_size) {
        let next = offsets.last().unwrap() + p * q;
        if next > MAX_TOKENS {
            return Err(Error::BoundExceeded {
                what: "coend quotient".into(),
                size: next as u128,
                limit: MAX_TOKENS as u128,
            });
        }
        offsets.push(next);
    }
    let total = *offsets.last().unwrap();
    let mut uf = UnionFind::<u32>::new(total);
    for i in 0..mids.len() {
        for j in 0..mids.len() {
            if p_size[i] == 0 || q_size[j] == 0 {
                continue;
            }
            let homs = HomSet::new(cat, &mids[i], &mids[j])?;
            for f in homs.iter() {
                let pf = p_post(i, j, &f)?;
                let qf = q_pre(i, j, &f)?;
                for (p, &pj) in pf.iter().enumerate() {
                    let left = offsets[j] + pj as usize * q_size[j];
                    let right = offsets[i] + p * q_size[i];
                    for (q, &qi) in qf.iter().enumerate() {
                        uf.union((left + q) as u32, (right + qi as usize) as u32);
                    }
                }
            }
        }
    }
    let labels = uf.into_labeling();
    let mut class_id = vec![u32::MAX; total];
    let mut class_of = Vec::with_capacity(total);
    let mut reps = Vec::new();
    for (g, &root) in labels.iter().enumerate() {
        let slot = &mut class_id[root as usize];
        if *slot == u32::MAX {
            *slot = reps.len() as u32;
            reps.push(g);
        }
        class_of.push(*slot);
    }
    Ok(Quotient {
        mids: mids.to_vec(),
        p_size: p_size.to_vec(),
        q_size: q_size.to_vec(),
        offsets,
        class_of,
        reps,
    })
}

/// For every morphism `t ∈ src`, the rank in `tgt` of `t` with each value
/// replaced through `vm`.
pub fn post_map_ranks(src: &HomSet, tgt: &HomSet, vm: &[u32]) -> Vec<u32> {
    let k = src.src().card();
    let mut table = vec![0u32; k];
    (0..src.len())
        .map(|r| {
            src.table_into(r, &mut table);
            let mapped: Vec<u32> = table.iter().map(|&v| vm[v as usize]).collect();
            tgt.rank_of_table(&mapped) as u32
        })
        .collect()
}

/// For every `t ∈ src`, the rank in `tgt` of `e ↦ t(im[e])`.
pub fn pre_map_ranks(src: &HomSet, tgt: &HomSet, im: &[u32]) -> Vec<u32> {
    let mut table = vec![0u32; src.src().card()];
    (0..src.len())
        .map(|r| {
            src.table_into(r, &mut table);
            let mapped: Vec<u32> = im.iter().map(|&e| table[e as usize]).collect();
            tgt.rank_of_table(&mapped) as u32
        })
        .collect()
}

/// The value map of `f × id_y` on (possibly monadic) values in `n × y`.
pub fn act_right_values(cat: &Cat, f: &Morphism, y: &Obj) -> Vec<u32> {
    let ny = y.card() as u32;
    let (na, nb) = (f.src().card(), f.tgt().card());
    let base = |v: u32| f.apply(v / ny) * ny + v % ny;
    match cat {
        Cat::Base => (0..(na as u32 * ny)).map(base).collect(),
        Cat::Kleisli(t) => {
            let size = t.size(na * ny as usize) as u32;
            (0..size).map(|v| t.fmap(na * ny as usize, nb * ny as usize, base, v)).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_coend_is_composition() {
        // ∫^n C(a, n) × C(n, c) ≅ C(a, c) with a = c = 2, middles {I, 2}
        let two = Obj::skeletal(2).unwrap();
        let mids = vec![Obj::unit(), two.clone()];
        let ps: Vec<HomSet> = mids.iter().map(|n| HomSet::new(&Cat::Base, &two, n).unwrap()).collect();
        let qs: Vec<HomSet> = mids.iter().map(|n| HomSet::new(&Cat::Base, n, &two).unwrap()).collect();
        let q = coend_quotient(
            &Cat::Base,
            &mids,
            &ps.iter().map(|h| h.len() as usize).collect::<Vec<_>>(),
            &qs.iter().map(|h| h.len() as usize).collect::<Vec<_>>(),
            |i, j, f| Ok(post_map_ranks(&ps[i], &ps[j], f.table())),
            |i, j, f| Ok(pre_map_ranks(&qs[j], &qs[i], f.table())),
        )
        .unwrap();
        assert_eq!(q.n_classes(), 4);
        let (mid, _, _) = q.rep(0);
        assert_eq!(mid, 0);
    }
}
