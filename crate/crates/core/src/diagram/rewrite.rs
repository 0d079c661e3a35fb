//! Local rewrite rules. A match sits in a window of consecutive slices at a
//! `(slice, generator)` position; everything else in the window must be
//! identity wires, which are kept above and below the replacement.

use super::ir::{Diagram, Gen, MTerm, Slice};
use super::typecheck::{typecheck, Typed};
use crate::error::{Error, Result};
use crate::fincat::{Cat, HomSet, Monad, Morphism, Obj};
use crate::optic::Flavor;
use crate::tambara::Dir;

type Apply = fn(&[&[Gen]], &Flavor) -> Result<Option<Vec<Slice>>>;
type Instances = fn() -> Result<Vec<Diagram>>;

#[derive(Clone, Copy)]
pub struct Rule {
    pub name: &'static str,
    /// Generators matched in each slice of the window.
    pub shape: &'static [usize],
    pub summary: &'static str,
    apply: Apply,
    instances: Instances,
}

impl Rule {
    /// Left-hand sides over objects of cardinality at most 2.
    pub fn instances(&self) -> Result<Vec<Diagram>> {
        (self.instances)()
    }

    /// Each instance paired with its rewrite at the first match.
    pub fn instance_pairs(&self) -> Result<Vec<(Diagram, Diagram)>> {
        let mut out = Vec::new();
        for lhs in self.instances()? {
            let at = *matches(&lhs, self)?
                .first()
                .ok_or_else(|| Error::NoMatch { rule: format!("{} on its own instance {lhs}", self.name), slice: 0, offset: 0 })?;
            let rhs = rewrite_with(&lhs, self, at)?;
            out.push((lhs, rhs));
        }
        Ok(out)
    }
}

impl std::fmt::Debug for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Rule({})", self.name)
    }
}

pub fn rules() -> Vec<Rule> {
    vec![
        Rule { name: "snake1", shape: &[2, 2], summary: "wr[x] * cup[x] ; cap[x] * wr[x] => wr[x]", apply: snake1, instances: i_snake1 },
        Rule { name: "snake2", shape: &[2, 2], summary: "cup[x] * wl[x] ; wl[x] * cap[x] => wl[x]", apply: snake2, instances: i_snake2 },
        Rule { name: "slide_cap", shape: &[2, 1], summary: "r[f] * wl[y] ; cap[y] => wr[x] * l[f] ; cap[x]", apply: slide_cap, instances: i_slide_cap },
        Rule { name: "slide_cup", shape: &[1, 2], summary: "cup[y] ; l[f] * wr[y] => cup[x] ; wl[x] * r[f]", apply: slide_cup, instances: i_slide_cup },
        Rule { name: "fuse_R", shape: &[1, 1], summary: "r[f] ; r[g] => r[f;g]", apply: fuse_r, instances: i_fuse_r },
        Rule { name: "fuse_L", shape: &[1, 1], summary: "l[f] ; l[g] => l[g;f]", apply: fuse_l, instances: i_fuse_l },
        Rule { name: "unit_elim_R", shape: &[1], summary: "wr[I] => id (cartesian)", apply: unit_elim_r, instances: i_unit_elim_r },
        Rule { name: "unit_elim_L", shape: &[1], summary: "wl[I] => id (cartesian)", apply: unit_elim_l, instances: i_unit_elim_l },
        Rule { name: "box_merge_R", shape: &[2], summary: "r[f] * r[g] => r[g*f]", apply: box_merge_r, instances: i_box_merge_r },
        Rule { name: "box_merge_L", shape: &[2], summary: "l[f] * l[g] => l[f*g]", apply: box_merge_l, instances: i_box_merge_l },
        Rule { name: "dup_coassoc", shape: &[1, 2], summary: "dup[x] ; dup[x] * wr[x] => dup[x] ; wr[x] * dup[x]", apply: dup_coassoc, instances: i_dup_coassoc },
        Rule { name: "dup_counit_l", shape: &[1, 2], summary: "dup[x] ; del[x] * wr[x] => wr[x] (cartesian)", apply: dup_counit_l, instances: i_dup_counit_l },
        Rule { name: "dup_counit_r", shape: &[1, 2], summary: "dup[x] ; wr[x] * del[x] => wr[x] (cartesian)", apply: dup_counit_r, instances: i_dup_counit_r },
        Rule { name: "dup_nat", shape: &[1, 1], summary: "r[f] ; dup[y] => dup[x] ; r[f] * r[f] (cartesian)", apply: dup_nat, instances: i_dup_nat },
        Rule { name: "dup_nat_pure", shape: &[1, 1], summary: "r[f] ; dup[y] => dup[x] ; r[f] * r[f] (f pure)", apply: dup_nat_pure, instances: i_dup_nat_pure },
        Rule { name: "swap_nat", shape: &[2, 1], summary: "r[f] * r[g] ; swap[y,w] => swap[x,v] ; r[g] * r[f] (cartesian)", apply: swap_nat, instances: i_swap_nat },
        Rule { name: "swap_nat_pure", shape: &[2, 1], summary: "r[f] * r[g] ; swap[y,w] => swap[x,v] ; r[g] * r[f] (f, g pure)", apply: swap_nat_pure, instances: i_swap_nat_pure },
        Rule { name: "pairing", shape: &[1], summary: "r[f] => dup[x] ; r[f;snd] * r[f;fst] for f : x -> a*b", apply: pairing, instances: i_pairing },
    ]
}

pub fn rule(name: &str) -> Option<Rule> {
    rules().into_iter().find(|r| r.name == name)
}

/// The generator index in `slice` whose flattened input starts at `off`,
/// trying each candidate with `ok`.
fn aligned(t: &Typed, slice: usize, off: usize) -> Vec<usize> {
    t.spans[slice].iter().enumerate().filter(|(_, s)| s.in_off == off).map(|(i, _)| i).collect()
}

/// Locate the window of `rule` at `(slice, gen)`: the first generator index
/// matched in each slice.
fn window(d: &Diagram, t: &Typed, rule: &Rule, slice: usize, gen: usize) -> Option<Vec<usize>> {
    let n = rule.shape.len();
    if slice + n > d.slices.len() || gen + rule.shape[0] > d.slices[slice].len() {
        return None;
    }
    let mut starts = vec![gen];
    for w in 1..n {
        let (k, i) = (slice + w - 1, starts[w - 1]);
        let out_off = t.spans[k][i].out_off;
        let next = aligned(t, slice + w, out_off)
            .into_iter()
            .find(|&j| j + rule.shape[w] <= d.slices[slice + w].len())?;
        starts.push(next);
    }
    // the window must be a rectangle framed by identities
    let first = &t.spans[slice][gen];
    let (top, width) = (first.in_off, t.columns[slice].len());
    for (w, (&s, &len)) in starts.iter().zip(rule.shape).enumerate() {
        let k = slice + w;
        for (j, g) in d.slices[k].iter().enumerate() {
            if (j < s || j >= s + len) && !g.is_identity() {
                return None;
            }
        }
        let sp = &t.spans[k][s];
        let last = &t.spans[k][s + len - 1];
        let below_in = t.columns[k].len() - (last.in_off + last.in_len);
        if sp.in_off != top || below_in != width - top - window_in_len(t, slice, gen, rule.shape[0]) {
            return None;
        }
    }
    Some(starts)
}

fn window_in_len(t: &Typed, slice: usize, gen: usize, len: usize) -> usize {
    let last = &t.spans[slice][gen + len - 1];
    last.in_off + last.in_len - t.spans[slice][gen].in_off
}

fn frame(ws: &[crate::tambara::Wire]) -> Vec<Gen> {
    ws.iter()
        .map(|w| match w.dir {
            Dir::R => Gen::WireR(w.obj.clone()),
            Dir::L => Gen::WireL(w.obj.clone()),
        })
        .collect()
}

/// Apply `rule` at `(slice, gen)`.
pub fn rewrite(d: &Diagram, rule_name: &str, at: (usize, usize)) -> Result<Diagram> {
    let r = rule(rule_name).ok_or_else(|| Error::UnknownIdentifier { line: 0, col: 0, name: rule_name.to_string() })?;
    rewrite_with(d, &r, at)
}

pub fn rewrite_with(d: &Diagram, r: &Rule, (slice, gen): (usize, usize)) -> Result<Diagram> {
    let no = || Error::NoMatch { rule: r.name.to_string(), slice, offset: gen };
    let t = typecheck(d)?;
    let starts = window(d, &t, r, slice, gen).ok_or_else(no)?;
    let parts: Vec<&[Gen]> = starts.iter().zip(r.shape).enumerate().map(|(w, (&s, &len))| &d.slices[slice + w][s..s + len]).collect();
    let rhs = (r.apply)(&parts, &t.flavor)?.ok_or_else(no)?;
    let col = &t.columns[slice];
    let top = t.spans[slice][gen].in_off;
    let bottom = top + window_in_len(&t, slice, gen, r.shape[0]);
    let (above, below) = (frame(&col[..top]), frame(&col[bottom..]));
    let mut slices: Vec<Slice> = d.slices[..slice].to_vec();
    for s in rhs {
        let mut row = above.clone();
        row.extend(s);
        row.extend(below.iter().cloned());
        if row.is_empty() {
            row.push(Gen::Id);
        }
        slices.push(row);
    }
    slices.extend(d.slices[slice + r.shape.len()..].iter().cloned());
    let out = Diagram { slices };
    typecheck(&out)?;
    Ok(out)
}

/// Every position where `rule` applies.
pub fn matches(d: &Diagram, r: &Rule) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for k in 0..d.slices.len() {
        for i in 0..d.slices[k].len() {
            if rewrite_with(d, r, (k, i)).is_ok() {
                out.push((k, i));
            }
        }
    }
    Ok(out)
}

// ---- rules ----

fn cartesian(f: &Flavor) -> bool {
    *f == Flavor::Cartesian
}

fn snake1(p: &[&[Gen]], _: &Flavor) -> Result<Option<Vec<Slice>>> {
    Ok(match (p[0], p[1]) {
        ([Gen::WireR(a), Gen::Cup(b)], [Gen::Cap(c), Gen::WireR(e)]) if a == b && b == c && c == e => Some(vec![vec![Gen::WireR(a.clone())]]),
        _ => None,
    })
}

fn snake2(p: &[&[Gen]], _: &Flavor) -> Result<Option<Vec<Slice>>> {
    Ok(match (p[0], p[1]) {
        ([Gen::Cup(a), Gen::WireL(b)], [Gen::WireL(c), Gen::Cap(e)]) if a == b && b == c && c == e => Some(vec![vec![Gen::WireL(a.clone())]]),
        _ => None,
    })
}

fn slide_cap(p: &[&[Gen]], _: &Flavor) -> Result<Option<Vec<Slice>>> {
    Ok(match (p[0], p[1]) {
        ([Gen::BoxR(f), Gen::WireL(y)], [Gen::Cap(y2)]) if f.f.tgt() == y && y == y2 => {
            let x = f.f.src().clone();
            Some(vec![vec![Gen::WireR(x.clone()), Gen::BoxL(f.clone())], vec![Gen::Cap(x)]])
        }
        _ => None,
    })
}

fn slide_cup(p: &[&[Gen]], _: &Flavor) -> Result<Option<Vec<Slice>>> {
    Ok(match (p[0], p[1]) {
        ([Gen::Cup(y)], [Gen::BoxL(f), Gen::WireR(y2)]) if f.f.tgt() == y && y == y2 => {
            let x = f.f.src().clone();
            Some(vec![vec![Gen::Cup(x.clone())], vec![Gen::WireL(x), Gen::BoxR(f.clone())]])
        }
        _ => None,
    })
}

fn fuse_r(p: &[&[Gen]], _: &Flavor) -> Result<Option<Vec<Slice>>> {
    Ok(match (p[0], p[1]) {
        ([Gen::BoxR(f)], [Gen::BoxR(g)]) => Some(vec![vec![Gen::BoxR(f.then(g)?)]]),
        _ => None,
    })
}

fn fuse_l(p: &[&[Gen]], _: &Flavor) -> Result<Option<Vec<Slice>>> {
    Ok(match (p[0], p[1]) {
        ([Gen::BoxL(f)], [Gen::BoxL(g)]) => Some(vec![vec![Gen::BoxL(g.then(f)?)]]),
        _ => None,
    })
}

fn unit_elim_r(p: &[&[Gen]], fl: &Flavor) -> Result<Option<Vec<Slice>>> {
    Ok(match p[0] {
        [Gen::WireR(x)] if x.is_unit() && cartesian(fl) => Some(vec![vec![Gen::Id]]),
        _ => None,
    })
}

fn unit_elim_l(p: &[&[Gen]], fl: &Flavor) -> Result<Option<Vec<Slice>>> {
    Ok(match p[0] {
        [Gen::WireL(x)] if x.is_unit() && cartesian(fl) => Some(vec![vec![Gen::Id]]),
        _ => None,
    })
}

fn box_merge_r(p: &[&[Gen]], _: &Flavor) -> Result<Option<Vec<Slice>>> {
    Ok(match p[0] {
        [Gen::BoxR(f), Gen::BoxR(g)] => Some(vec![vec![Gen::BoxR(g.times(f)?)]]),
        _ => None,
    })
}

fn box_merge_l(p: &[&[Gen]], _: &Flavor) -> Result<Option<Vec<Slice>>> {
    Ok(match p[0] {
        [Gen::BoxL(f), Gen::BoxL(g)] => Some(vec![vec![Gen::BoxL(f.times(g)?)]]),
        _ => None,
    })
}

fn dup_coassoc(p: &[&[Gen]], _: &Flavor) -> Result<Option<Vec<Slice>>> {
    Ok(match (p[0], p[1]) {
        ([Gen::Dup(a)], [Gen::Dup(b), Gen::WireR(c)]) if a == b && b == c => {
            Some(vec![vec![Gen::Dup(a.clone())], vec![Gen::WireR(a.clone()), Gen::Dup(a.clone())]])
        }
        _ => None,
    })
}

fn dup_counit_l(p: &[&[Gen]], fl: &Flavor) -> Result<Option<Vec<Slice>>> {
    Ok(match (p[0], p[1]) {
        ([Gen::Dup(a)], [Gen::Del(b), Gen::WireR(c)]) if a == b && b == c && cartesian(fl) => Some(vec![vec![Gen::WireR(a.clone())]]),
        _ => None,
    })
}

fn dup_counit_r(p: &[&[Gen]], fl: &Flavor) -> Result<Option<Vec<Slice>>> {
    Ok(match (p[0], p[1]) {
        ([Gen::Dup(a)], [Gen::WireR(b), Gen::Del(c)]) if a == b && b == c && cartesian(fl) => Some(vec![vec![Gen::WireR(a.clone())]]),
        _ => None,
    })
}

fn dup_nat_any(p: &[&[Gen]]) -> Option<Vec<Slice>> {
    match (p[0], p[1]) {
        ([Gen::BoxR(f)], [Gen::Dup(y)]) if f.f.tgt() == y => {
            Some(vec![vec![Gen::Dup(f.f.src().clone())], vec![Gen::BoxR(f.clone()), Gen::BoxR(f.clone())]])
        }
        _ => None,
    }
}

fn dup_nat(p: &[&[Gen]], fl: &Flavor) -> Result<Option<Vec<Slice>>> {
    Ok(if cartesian(fl) { dup_nat_any(p) } else { None })
}

fn dup_nat_pure(p: &[&[Gen]], _: &Flavor) -> Result<Option<Vec<Slice>>> {
    Ok(match p[0] {
        [Gen::BoxR(f)] if f.is_pure() => dup_nat_any(p),
        _ => None,
    })
}

fn swap_nat_any(p: &[&[Gen]]) -> Option<Vec<Slice>> {
    match (p[0], p[1]) {
        ([Gen::BoxR(f), Gen::BoxR(g)], [Gen::Swap(y, w)]) if f.f.tgt() == y && g.f.tgt() == w => Some(vec![
            vec![Gen::Swap(f.f.src().clone(), g.f.src().clone())],
            vec![Gen::BoxR(g.clone()), Gen::BoxR(f.clone())],
        ]),
        _ => None,
    }
}

fn swap_nat(p: &[&[Gen]], fl: &Flavor) -> Result<Option<Vec<Slice>>> {
    Ok(if cartesian(fl) { swap_nat_any(p) } else { None })
}

fn swap_nat_pure(p: &[&[Gen]], _: &Flavor) -> Result<Option<Vec<Slice>>> {
    Ok(match p[0] {
        [Gen::BoxR(f), Gen::BoxR(g)] if f.is_pure() && g.is_pure() => swap_nat_any(p),
        _ => None,
    })
}

fn pairing(p: &[&[Gen]], _: &Flavor) -> Result<Option<Vec<Slice>>> {
    let [Gen::BoxR(f)] = p[0] else { return Ok(None) };
    let Some((a, b)) = f.f.tgt().factors() else { return Ok(None) };
    if !f.is_pure() {
        return Ok(None);
    }
    let x = f.f.src().clone();
    let top = f.then(&MTerm::snd(a, b)?)?;
    let bottom = f.then(&MTerm::fst(a, b)?)?;
    Ok(Some(vec![vec![Gen::Dup(x)], vec![Gen::BoxR(top), Gen::BoxR(bottom)]]))
}

// ---- instances over objects of cardinality at most 2 ----

fn small_objects() -> Vec<Obj> {
    vec![Obj::unit(), Obj::skeletal(2).expect("2 is within bounds")]
}

fn maps(x: &Obj, y: &Obj) -> Result<Vec<MTerm>> {
    let h = HomSet::new(&Cat::Base, x, y)?;
    Ok(h.iter().enumerate().map(|(i, f)| MTerm::named(&format!("f{}_{}_{i}", x.card(), y.card()), f)).collect())
}

fn pure_maps(t: &Monad, x: &Obj, y: &Obj) -> Result<Vec<MTerm>> {
    Ok(maps(x, y)?.into_iter().map(|m| MTerm { expr: m.expr, f: m.f.pure_lift(t) }).collect())
}

fn diagram(slices: Vec<Slice>) -> Diagram {
    Diagram { slices }
}

fn per_object(mk: impl Fn(&Obj) -> Diagram) -> Result<Vec<Diagram>> {
    Ok(small_objects().iter().map(mk).collect())
}

fn per_map(mut mk: impl FnMut(&MTerm) -> Diagram) -> Result<Vec<Diagram>> {
    let mut out = Vec::new();
    for x in small_objects() {
        for y in small_objects() {
            for f in maps(&x, &y)? {
                out.push(mk(&f));
            }
        }
    }
    Ok(out)
}

fn i_snake1() -> Result<Vec<Diagram>> {
    per_object(|x| {
        diagram(vec![vec![Gen::WireR(x.clone()), Gen::Cup(x.clone())], vec![Gen::Cap(x.clone()), Gen::WireR(x.clone())]])
    })
}

fn i_snake2() -> Result<Vec<Diagram>> {
    per_object(|x| {
        diagram(vec![vec![Gen::Cup(x.clone()), Gen::WireL(x.clone())], vec![Gen::WireL(x.clone()), Gen::Cap(x.clone())]])
    })
}

fn i_slide_cap() -> Result<Vec<Diagram>> {
    per_map(|f| diagram(vec![vec![Gen::BoxR(f.clone()), Gen::WireL(f.f.tgt().clone())], vec![Gen::Cap(f.f.tgt().clone())]]))
}

fn i_slide_cup() -> Result<Vec<Diagram>> {
    per_map(|f| diagram(vec![vec![Gen::Cup(f.f.tgt().clone())], vec![Gen::BoxL(f.clone()), Gen::WireR(f.f.tgt().clone())]]))
}

fn composable_pairs() -> Result<Vec<(MTerm, MTerm)>> {
    let objs = small_objects();
    let mut out = Vec::new();
    for x in &objs {
        for y in &objs {
            for z in &objs {
                for f in maps(x, y)? {
                    for g in maps(y, z)? {
                        out.push((f.clone(), g));
                    }
                }
            }
        }
    }
    Ok(out)
}

fn i_fuse_r() -> Result<Vec<Diagram>> {
    Ok(composable_pairs()?.into_iter().map(|(f, g)| diagram(vec![vec![Gen::BoxR(f)], vec![Gen::BoxR(g)]])).collect())
}

fn i_fuse_l() -> Result<Vec<Diagram>> {
    // l[f] ; l[g] needs g's target to be f's source
    Ok(composable_pairs()?.into_iter().map(|(g, f)| diagram(vec![vec![Gen::BoxL(f)], vec![Gen::BoxL(g)]])).collect())
}

fn i_unit_elim_r() -> Result<Vec<Diagram>> {
    let i = Obj::unit();
    let two = Obj::skeletal(2)?;
    Ok(vec![
        diagram(vec![vec![Gen::WireR(i.clone())]]),
        diagram(vec![vec![Gen::WireR(two.clone()), Gen::WireR(i.clone()), Gen::WireL(two)]]),
    ])
}

fn i_unit_elim_l() -> Result<Vec<Diagram>> {
    let i = Obj::unit();
    let two = Obj::skeletal(2)?;
    Ok(vec![
        diagram(vec![vec![Gen::WireL(i.clone())]]),
        diagram(vec![vec![Gen::WireR(two.clone()), Gen::WireL(i), Gen::WireL(two)]]),
    ])
}

fn all_map_pairs() -> Result<Vec<(MTerm, MTerm)>> {
    let objs = small_objects();
    let mut all = Vec::new();
    for x in &objs {
        for y in &objs {
            all.extend(maps(x, y)?);
        }
    }
    let mut out = Vec::new();
    for f in &all {
        for g in &all {
            out.push((f.clone(), g.clone()));
        }
    }
    Ok(out)
}

fn i_box_merge_r() -> Result<Vec<Diagram>> {
    Ok(all_map_pairs()?.into_iter().map(|(f, g)| diagram(vec![vec![Gen::BoxR(f), Gen::BoxR(g)]])).collect())
}

fn i_box_merge_l() -> Result<Vec<Diagram>> {
    Ok(all_map_pairs()?.into_iter().map(|(f, g)| diagram(vec![vec![Gen::BoxL(f), Gen::BoxL(g)]])).collect())
}

fn i_dup_coassoc() -> Result<Vec<Diagram>> {
    per_object(|x| diagram(vec![vec![Gen::Dup(x.clone())], vec![Gen::Dup(x.clone()), Gen::WireR(x.clone())]]))
}

fn i_dup_counit_l() -> Result<Vec<Diagram>> {
    per_object(|x| diagram(vec![vec![Gen::Dup(x.clone())], vec![Gen::Del(x.clone()), Gen::WireR(x.clone())]]))
}

fn i_dup_counit_r() -> Result<Vec<Diagram>> {
    per_object(|x| diagram(vec![vec![Gen::Dup(x.clone())], vec![Gen::WireR(x.clone()), Gen::Del(x.clone())]]))
}

fn i_dup_nat() -> Result<Vec<Diagram>> {
    per_map(|f| diagram(vec![vec![Gen::BoxR(f.clone())], vec![Gen::Dup(f.f.tgt().clone())]]))
}

/// The monad used for the instances of the purity-restricted rules.
pub fn instance_monad() -> Monad {
    Monad::maybe("Maybe")
}

fn i_dup_nat_pure() -> Result<Vec<Diagram>> {
    let t = instance_monad();
    let mut out = Vec::new();
    for x in small_objects() {
        for y in small_objects() {
            for f in pure_maps(&t, &x, &y)? {
                out.push(diagram(vec![vec![Gen::BoxR(f.clone())], vec![Gen::Dup(y.clone())]]));
            }
        }
    }
    Ok(out)
}

fn swap_instances(mk: impl Fn(&Obj, &Obj) -> Result<Vec<MTerm>>) -> Result<Vec<Diagram>> {
    let objs = small_objects();
    let mut out = Vec::new();
    for x in &objs {
        for y in &objs {
            for v in &objs {
                for w in &objs {
                    for f in mk(x, y)? {
                        for g in mk(v, w)? {
                            out.push(diagram(vec![
                                vec![Gen::BoxR(f.clone()), Gen::BoxR(g)],
                                vec![Gen::Swap(y.clone(), w.clone())],
                            ]));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn i_swap_nat() -> Result<Vec<Diagram>> {
    swap_instances(maps)
}

fn i_swap_nat_pure() -> Result<Vec<Diagram>> {
    let t = instance_monad();
    swap_instances(|x, y| pure_maps(&t, x, y))
}

fn i_pairing() -> Result<Vec<Diagram>> {
    let objs = small_objects();
    let mut out = Vec::new();
    for x in &objs {
        for a in &objs {
            for b in &objs {
                for f in maps(x, &Obj::product(a, b)?)? {
                    out.push(diagram(vec![vec![Gen::BoxR(f)]]));
                }
            }
        }
    }
    Ok(out)
}

/// A morphism-free helper for tests and the CLI: the effectful box used to
/// show that purity-restricted rules refuse.
pub fn effectful_example(t: &Monad) -> Result<MTerm> {
    let two = Obj::skeletal(2)?;
    // 0 ↦ nothing, 1 ↦ just 1
    let f = Morphism::new(two.clone(), two, Cat::Kleisli(t.clone()), vec![0, 2])?;
    Ok(MTerm::named("eff", f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::compile::{equal_diagrams, Equality};
    use crate::diagram::parse::{parse_diagram, Env};
    use crate::tambara::{ElemOpts, Universe};

    fn env() -> Env {
        let mut e = Env::default();
        let b = Obj::atoms("B", &["0", "1"]).unwrap();
        e.maps.insert("not".into(), Morphism::new(b.clone(), b.clone(), Cat::Base, vec![1, 0]).unwrap());
        e.objects.insert("B".into(), b);
        e
    }

    #[test]
    fn snake1_straightens_a_wire() {
        let d = parse_diagram("wr[B] * cup[B] ; cap[B] * wr[B]", &env()).unwrap();
        let out = rewrite(&d, "snake1", (0, 0)).unwrap();
        assert_eq!(out.to_string(), "wr[B]");
    }

    #[test]
    fn rewriting_keeps_the_frame() {
        let d = parse_diagram("wr[B] * r[not] * wl[B] ; wr[B] * r[not] * wl[B]", &env()).unwrap();
        assert_eq!(matches(&d, &rule("fuse_R").unwrap()).unwrap(), vec![(0, 1)]);
        let out = rewrite(&d, "fuse_R", (0, 1)).unwrap();
        assert_eq!(out.to_string(), "wr[B] * r[not;not] * wl[B]");
        assert!(matches!(rewrite(&d, "fuse_R", (0, 0)), Err(Error::NoMatch { .. })));
    }

    #[test]
    fn slide_cap_moves_the_box_to_the_left_wire() {
        let d = parse_diagram("r[not] * wl[B] ; cap[B]", &env()).unwrap();
        let out = rewrite(&d, "slide_cap", (0, 0)).unwrap();
        assert_eq!(out.to_string(), "wr[B] * l[not] ; cap[B]");
    }

    #[test]
    fn purity_restricted_rules_refuse_effects() {
        let t = instance_monad();
        let f = effectful_example(&t).unwrap();
        let two = Obj::skeletal(2).unwrap();
        let d = Diagram { slices: vec![vec![Gen::BoxR(f)], vec![Gen::Dup(two)]] };
        assert!(matches!(rewrite(&d, "dup_nat_pure", (0, 0)), Err(Error::NoMatch { .. })));
        assert!(matches!(rewrite(&d, "dup_nat", (0, 0)), Err(Error::NoMatch { .. })));
        // forcing it puts the second copy of the effect on a pure wire
        let parts: Vec<&[Gen]> = d.slices.iter().map(|s| &s[..]).collect();
        let forced = Diagram { slices: dup_nat_any(&parts).unwrap() };
        assert!(matches!(typecheck(&forced), Err(Error::Type { slice: 1, .. })));
    }

    #[test]
    fn every_rule_is_sound_on_small_instances() {
        let u = Universe::default();
        let opts = ElemOpts::default();
        for r in rules() {
            let inst = r.instance_pairs().unwrap();
            assert!(!inst.is_empty(), "{}", r.name);
            for (lhs, rhs) in inst {
                let v = equal_diagrams(&lhs, &rhs, &u, &opts).unwrap();
                assert_eq!(v, Equality::Equal, "{}: {lhs} vs {rhs}", r.name);
            }
        }
    }
}
