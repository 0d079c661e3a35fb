//! Deciding equality of chain classes.
//!
//! Cartesian chains have an exact normal form: simulate the chain on every
//! history of inputs and record the outputs. Effectful chains are first merged
//! into blocks separated by junctions (an `R` wire immediately followed by an
//! `L` wire); a handler invariant separates classes, and a bounded zigzag
//! search over residual objects finds equalities.

use std::collections::{HashSet, VecDeque};

use crate::error::{mismatch, Result};
use crate::fincat::{structure as st, Cat, HomSet, Morphism, Obj};
use crate::tambara::chain::{Chain, Dir, Slot};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassVerdict {
    Equal,
    /// Exactly distinct, with a human-readable reason.
    Distinct(String),
    /// No connecting zigzag found within the search bounds.
    DistinctWithinBound,
}

impl ClassVerdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, ClassVerdict::Equal)
    }
}

#[derive(Clone, Debug)]
pub struct Search {
    /// Candidate residual objects at junctions.
    pub residuals: Vec<Obj>,
    /// Maximum number of visited states.
    pub max_states: usize,
    /// Maximum number of handler tuples tried by the invariant.
    pub max_handlers: usize,
}

impl Search {
    pub fn new(residuals: Vec<Obj>) -> Search {
        Search { residuals, max_states: 20_000, max_handlers: 4096 }
    }
}

/// Exact normal form of a chain whose components are all base maps.
pub fn cartesian_key(c: &Chain) -> Option<Vec<u32>> {
    if c.comps().iter().any(|p| !p.cat().is_base()) {
        return None;
    }
    let mut runs: Vec<u32> = (0..c.src().card() as u32).collect();
    let mut key = Vec::new();
    for (i, (s, p)) in c.slots().iter().zip(c.comps()).enumerate() {
        match s {
            Slot::Wire(w) if w.dir == Dir::R => {
                let nx = w.obj.card() as u32;
                for r in runs.iter_mut() {
                    let v = p.apply(*r);
                    key.push(v % nx);
                    *r = v / nx;
                }
            }
            Slot::Wire(w) => {
                let nu = w.obj.card() as u32;
                runs = runs.iter().flat_map(|&r| (0..nu).map(move |e| p.apply(r * nu + e))).collect();
            }
            Slot::Hom(_) => {
                for r in runs.iter_mut() {
                    *r = p.apply(*r);
                }
            }
        }
        let _ = i;
    }
    key.extend(runs);
    Some(key)
}

/// One merged block `n_j × I → n_{j+1} × O`, where either side may be absent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub input: Option<Obj>,
    pub output: Option<Obj>,
    pub comp: Morphism,
}

/// A chain with every non-junction middle eliminated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Merged {
    pub blocks: Vec<Block>,
}

impl Merged {
    pub fn from_chain(c: &Chain) -> Result<Merged> {
        let mut blocks: Vec<Block> = c
            .slots()
            .iter()
            .zip(c.comps())
            .map(|(s, p)| match s {
                Slot::Wire(w) if w.dir == Dir::R => Block { input: None, output: Some(w.obj.clone()), comp: p.clone() },
                Slot::Wire(w) => Block { input: Some(w.obj.clone()), output: None, comp: p.clone() },
                Slot::Hom(_) => Block { input: None, output: None, comp: p.clone() },
            })
            .collect();
        let mut i = 0;
        while i + 1 < blocks.len() {
            if blocks[i].output.is_some() && blocks[i + 1].input.is_some() {
                i += 1;
                continue;
            }
            let b2 = blocks.remove(i + 1);
            let b1 = blocks.remove(i);
            blocks.insert(i, merge(b1, b2)?);
            i = i.saturating_sub(1);
        }
        Ok(Merged { blocks })
    }

    /// The middle object at junction `j` (between blocks `j` and `j + 1`).
    pub fn middle(&self, j: usize) -> &Obj {
        let b = &self.blocks[j];
        b.comp.tgt().factors().expect("junction blocks have outputs").0
    }

    fn shape(&self) -> Vec<(Option<Obj>, Option<Obj>)> {
        self.blocks.iter().map(|b| (b.input.clone(), b.output.clone())).collect()
    }
}

/// Merge two adjacent blocks that do not form a junction.
fn merge(b1: Block, b2: Block) -> Result<Block> {
    if b1.output.is_none() {
        let (input, comp) = match (&b1.input, &b2.input) {
            (Some(i1), Some(i2)) => {
                let c0 = b1.comp.src().factors().unwrap().0.clone();
                let f = st::assoc_inv(&c0, i1, i2)?.then(&st::act_right(&b1.comp, i2)?)?.then(&b2.comp)?;
                (Some(Obj::product(i1, i2)?), f)
            }
            (None, Some(i2)) => (Some(i2.clone()), st::act_right(&b1.comp, i2)?.then(&b2.comp)?),
            (i1, None) => (i1.clone(), b1.comp.then(&b2.comp)?),
        };
        Ok(Block { input, output: b2.output, comp })
    } else {
        let o1 = b1.output.clone().unwrap();
        let (output, comp) = match &b2.output {
            Some(o2) => {
                let c2 = b2.comp.tgt().factors().unwrap().0.clone();
                let f = b1.comp.then(&st::act_right(&b2.comp, &o1)?)?.then(&st::assoc(&c2, o2, &o1)?)?;
                (Some(Obj::product(o2, &o1)?), f)
            }
            None => (Some(o1.clone()), b1.comp.then(&st::act_right(&b2.comp, &o1)?)?),
        };
        Ok(Block { input: b1.input, output, comp })
    }
}

/// Equality of the classes of two chains with the same wires and endpoints.
pub fn classes_equal(c1: &Chain, c2: &Chain, search: &Search) -> Result<ClassVerdict> {
    if c1.wires() != c2.wires() || c1.src() != c2.src() || c1.tgt() != c2.tgt() {
        return Err(mismatch("comparing elements of different modules"));
    }
    if let (Some(k1), Some(k2)) = (cartesian_key(c1), cartesian_key(c2)) {
        return Ok(if k1 == k2 {
            ClassVerdict::Equal
        } else {
            ClassVerdict::Distinct("normal forms differ".into())
        });
    }
    let m1 = Merged::from_chain(c1)?;
    let m2 = Merged::from_chain(c2)?;
    merged_equal(&m1, &m2, search)
}

pub fn merged_equal(m1: &Merged, m2: &Merged, search: &Search) -> Result<ClassVerdict> {
    if m1.shape() != m2.shape() {
        return Err(mismatch("comparing merged chains of different shapes"));
    }
    if m1 == m2 {
        return Ok(ClassVerdict::Equal);
    }
    if m1.blocks.len() == 1 {
        return Ok(if m1.blocks[0].comp.same_arrow(&m2.blocks[0].comp) {
            ClassVerdict::Equal
        } else {
            ClassVerdict::Distinct("composites differ".into())
        });
    }
    if let Some(why) = handler_witness(m1, m2, search.max_handlers)? {
        return Ok(ClassVerdict::Distinct(why));
    }
    Ok(if zigzag_search(m1, m2, search)? { ClassVerdict::Equal } else { ClassVerdict::DistinctWithinBound })
}

/// Plug a handler `k_j : O_j → I_{j+1}` into every junction and compare the
/// resulting composites. The composite is invariant under sliding.
fn handler_witness(m1: &Merged, m2: &Merged, max: usize) -> Result<Option<String>> {
    let cat = m1.blocks.iter().map(|b| b.comp.cat()).find(|c| !c.is_base()).cloned().unwrap_or(Cat::Base);
    let junctions = m1.blocks.len() - 1;
    let homs: Vec<HomSet> = (0..junctions)
        .map(|j| HomSet::new(&cat, m1.blocks[j].output.as_ref().unwrap(), m1.blocks[j + 1].input.as_ref().unwrap()))
        .collect::<Result<_>>()?;
    let total: u128 = homs.iter().map(|h| h.len() as u128).product();
    let count = total.min(max as u128) as u64;
    for idx in 0..count {
        let mut rest = idx;
        let mut ks = Vec::with_capacity(junctions);
        for h in homs.iter().rev() {
            ks.push(h.get(rest % h.len()));
            rest /= h.len();
        }
        ks.reverse();
        let o1 = observe(m1, &ks)?;
        let o2 = observe(m2, &ks)?;
        if !o1.same_arrow(&o2) {
            let hs: Vec<String> = ks.iter().map(|k| k.show_table()).collect();
            return Ok(Some(format!(
                "with handlers [{}] the composites are {} and {}",
                hs.join(", "),
                o1.show_table(),
                o2.show_table()
            )));
        }
    }
    Ok(None)
}

fn observe(m: &Merged, ks: &[Morphism]) -> Result<Morphism> {
    let mut acc = m.blocks[0].comp.clone();
    for (j, k) in ks.iter().enumerate() {
        let n = m.middle(j).clone();
        acc = acc.then(&st::act(&n, k)?)?.then(&m.blocks[j + 1].comp)?;
    }
    Ok(acc)
}

/// Breadth-first search through single sliding steps at junctions.
#[allow(clippy::mutable_key_type)] // morphisms hash by their tables; the cache never changes them
pub fn zigzag_search(from: &Merged, to: &Merged, search: &Search) -> Result<bool> {
    let mut seen: HashSet<Merged> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(from.clone());
    queue.push_back(from.clone());
    while let Some(node) = queue.pop_front() {
        if &node == to {
            return Ok(true);
        }
        let mut found = false;
        neighbours(&node, search, &mut |n| {
            if found || seen.len() >= search.max_states {
                return false;
            }
            if &n == to {
                found = true;
                return false;
            }
            if seen.insert(n.clone()) {
                queue.push_back(n);
            }
            true
        })?;
        if found {
            return Ok(true);
        }
        if seen.len() >= search.max_states {
            return Ok(false);
        }
    }
    Ok(false)
}

/// All states one sliding step away within the residual set. The visitor
/// returns `false` to stop early.
pub fn neighbours(node: &Merged, search: &Search, visit: &mut dyn FnMut(Merged) -> bool) -> Result<()> {
    for j in 0..node.blocks.len().saturating_sub(1) {
        let n = node.middle(j).clone();
        for r in &search.residuals {
            // α = α' ⨾ (f × O) with f : r → n
            for f in HomSet::new(&Cat::Base, r, &n)?.iter() {
                if !slide_back(node, j, &f, visit)? {
                    return Ok(());
                }
            }
            // β = (f × I) ⨾ β' with f : n → r
            for f in HomSet::new(&Cat::Base, &n, r)?.iter() {
                if !slide_forward(node, j, &f, visit)? {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

/// Enumerate the cartesian product of choice lists, calling `emit` on each.
fn for_each_choice(choices: &[Vec<u32>], emit: &mut dyn FnMut(&[u32]) -> Result<bool>) -> Result<bool> {
    if choices.iter().any(|c| c.is_empty()) {
        return Ok(true);
    }
    let mut idx = vec![0usize; choices.len()];
    let mut cur: Vec<u32> = choices.iter().map(|c| c[0]).collect();
    loop {
        if !emit(&cur)? {
            return Ok(false);
        }
        let mut k = choices.len();
        loop {
            if k == 0 {
                return Ok(true);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                cur[k] = choices[k][idx[k]];
                break;
            }
            idx[k] = 0;
            cur[k] = choices[k][0];
        }
    }
}

fn slide_back(node: &Merged, j: usize, f: &Morphism, visit: &mut dyn FnMut(Merged) -> bool) -> Result<bool> {
    let (bj, bk) = (&node.blocks[j], &node.blocks[j + 1]);
    let out = bj.output.as_ref().unwrap();
    let inp = bk.input.as_ref().unwrap();
    let cat = bj.comp.cat().clone();
    let r = f.src();
    let new_tgt = Obj::product(r, out)?;
    let vm = crate::coend::act_right_values(&cat, f, out);
    let mut pre: std::collections::HashMap<u32, Vec<u32>> = std::collections::HashMap::new();
    for (v, &w) in vm.iter().enumerate() {
        pre.entry(w).or_default().push(v as u32);
    }
    let choices: Vec<Vec<u32>> = bj.comp.table().iter().map(|v| pre.get(v).cloned().unwrap_or_default()).collect();
    let next = st::act_right(f, inp)?.then(&bk.comp)?.lift_to(bk.comp.cat())?;
    for_each_choice(&choices, &mut |t| {
        let comp = Morphism::new(bj.comp.src().clone(), new_tgt.clone(), cat.clone(), t.to_vec())?;
        let mut m = node.clone();
        m.blocks[j].comp = comp;
        m.blocks[j + 1].comp = next.clone();
        Ok(visit(m))
    })
}

fn slide_forward(node: &Merged, j: usize, f: &Morphism, visit: &mut dyn FnMut(Merged) -> bool) -> Result<bool> {
    let (bj, bk) = (&node.blocks[j], &node.blocks[j + 1]);
    let out = bj.output.as_ref().unwrap();
    let inp = bk.input.as_ref().unwrap();
    let prev = bj.comp.then(&st::act_right(f, out)?)?.lift_to(bj.comp.cat())?;
    let ni = inp.card() as u32;
    let new_src = Obj::product(f.tgt(), inp)?;
    let cod = bk.comp.cat().codomain_size(bk.comp.tgt()) as u32;
    let mut choices: Vec<Vec<u32>> = vec![Vec::new(); new_src.card()];
    let mut forced: Vec<Option<u32>> = vec![None; new_src.card()];
    for k in 0..f.src().card() as u32 {
        let k2 = f.apply(k);
        for i in 0..ni {
            let v = bk.comp.apply(k * ni + i);
            let slot = &mut forced[(k2 * ni + i) as usize];
            match slot {
                Some(w) if *w != v => return Ok(true),
                _ => *slot = Some(v),
            }
        }
    }
    for (e, c) in choices.iter_mut().enumerate() {
        *c = match forced[e] {
            Some(v) => vec![v],
            None => (0..cod).collect(),
        };
    }
    let cat = bk.comp.cat().clone();
    for_each_choice(&choices, &mut |t| {
        let comp = Morphism::new(new_src.clone(), bk.comp.tgt().clone(), cat.clone(), t.to_vec())?;
        let mut m = node.clone();
        m.blocks[j].comp = prev.clone();
        m.blocks[j + 1].comp = comp;
        Ok(visit(m))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tambara::chain::{Units, Wire};

    fn b() -> Obj {
        Obj::atoms("B", &["0", "1"]).unwrap()
    }

    fn lens_chain(m: &Obj, alpha: Vec<u32>, beta: Vec<u32>) -> Chain {
        let a = Morphism::new(b(), Obj::product(m, &b()).unwrap(), Cat::Base, alpha).unwrap();
        let bt = Morphism::new(Obj::product(m, &b()).unwrap(), b(), Cat::Base, beta).unwrap();
        Chain::from_raw(&[b(), m.clone(), b()], &[Wire::r(&b(), &Cat::Base), Wire::l(&b(), &Cat::Base)], &[a, bt], Units::Drop)
            .unwrap()
    }

    #[test]
    fn cartesian_key_sees_get_and_put() {
        // residual I: alpha = λ⁻¹, beta = λ  (identity lens)
        let c = lens_chain(&Obj::unit(), vec![0, 1], vec![0, 1]);
        assert_eq!(cartesian_key(&c).unwrap(), vec![0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn search_finds_one_sliding_step() {
        // ⟨α | β⟩_B with α = Δ, β = π₂ equals the identity at residual I
        let c1 = lens_chain(&b(), vec![0, 3], vec![0, 1, 0, 1]);
        let c2 = lens_chain(&Obj::unit(), vec![0, 1], vec![0, 1]);
        let m1 = Merged::from_chain(&c1).unwrap();
        let m2 = Merged::from_chain(&c2).unwrap();
        let s = Search::new(vec![Obj::unit(), b()]);
        assert!(zigzag_search(&m1, &m2, &s).unwrap());
        assert!(zigzag_search(&m2, &m1, &s).unwrap());
    }
}
