//! Exhaustive suites over small lenses and optics.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{is_lawful, lens_laws, mlens_laws, LawReport, Verdict};
use crate::error::{Error, Result};
use crate::fincat::{Cat, HomSet, Monad, Obj};
use crate::optic::{compose_optics, from_lens, to_mlens, Flavor, Lens, Optic};
use crate::tambara::Universe;

/// Per-shape tally of the lawful-equivalence suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeCount {
    pub x_card: usize,
    pub y_card: usize,
    pub lenses: u64,
    pub lawful: u64,
    pub divergences: u64,
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub name: String,
    pub cases: u64,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub shapes: Vec<ShapeCount>,
}

impl SuiteReport {
    pub fn new(name: &str) -> SuiteReport {
        SuiteReport { name: name.to_string(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub(crate) fn fail(&mut self, msg: String) {
        // keep reports readable; the count is what matters past the first few
        if self.failures.len() < 20 {
            self.failures.push(msg);
        } else if self.failures.len() == 20 {
            self.failures.push("further failures omitted".into());
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        writeln!(f, "{status}: {} ({} cases)", self.name, self.cases)?;
        for s in &self.shapes {
            writeln!(
                f,
                "  |x|={} |y|={}: {} lenses, {} lawful, {} divergences",
                s.x_card, s.y_card, s.lenses, s.lawful, s.divergences
            )?;
        }
        for w in &self.failures {
            writeln!(f, "  failure: {w}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

fn cards(bound: usize) -> Result<Vec<Obj>> {
    (1..=bound).map(Obj::skeletal).collect()
}

/// Every lens `(x,u) -> (y,v)` with `put` in `cat`.
pub fn enumerate_lenses(x: &Obj, u: &Obj, y: &Obj, v: &Obj, cat: &Cat) -> Result<Vec<Lens>> {
    let gets = HomSet::new(&Cat::Base, x, y)?;
    let puts = HomSet::new(cat, &Obj::product(x, v)?, u)?;
    let n = gets.len() as u128 * puts.len() as u128;
    if n > 1 << 20 {
        return Err(Error::BoundExceeded { what: format!("lenses ({x},{u}) -> ({y},{v})"), size: n, limit: 1 << 20 });
    }
    let mut out = Vec::with_capacity(n as usize);
    for g in gets.iter() {
        for p in puts.iter() {
            out.push(Lens::new(g.clone(), p)?);
        }
    }
    Ok(out)
}

pub fn lawful_equivalence_suite(bound: usize, universe: &Universe) -> Result<SuiteReport> {
    lawful_equivalence_suite_with(bound, universe, lens_laws)
}

/// Compare diagrammatic lawfulness with `laws` on every lens
/// `(x,x) -> (y,y)` with `1 ≤ |x|, |y| ≤ bound`.
pub fn lawful_equivalence_suite_with(
    bound: usize,
    universe: &Universe,
    laws: impl Fn(&Lens) -> Result<LawReport>,
) -> Result<SuiteReport> {
    let shapes: Vec<(usize, usize)> = (1..=bound).flat_map(|a| (1..=bound).map(move |b| (a, b))).collect();
    lawful_equivalence_shapes(&shapes, universe, laws)
}

/// The same comparison on chosen `(|x|, |y|)` shapes.
pub fn lawful_equivalence_shapes(
    shapes: &[(usize, usize)],
    universe: &Universe,
    laws: impl Fn(&Lens) -> Result<LawReport>,
) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("lawful_equivalence");
    for &(nx, ny) in shapes {
        let (x, y) = (&Obj::skeletal(nx)?, &Obj::skeletal(ny)?);
        {
            let mut shape = ShapeCount { x_card: x.card(), y_card: y.card(), lenses: 0, lawful: 0, divergences: 0 };
            for l in enumerate_lenses(x, x, y, y, &Cat::Base)? {
                let diag = is_lawful(&from_lens(&l)?, universe)?;
                let concrete = laws(&l)?;
                shape.lenses += 1;
                if diag.checks.iter().any(|c| c.verdict == Verdict::Undecided) {
                    rep.fail(format!("undecided diagrammatic check for get {} put {}", l.get.show_table(), l.put.show_table()));
                    continue;
                }
                if diag.all_pass() {
                    shape.lawful += 1;
                }
                if diag.all_pass() != concrete.all_pass() {
                    shape.divergences += 1;
                    rep.fail(format!(
                        "get {} put {}: diagrams say {}, lens laws say {}",
                        l.get.show_table(),
                        l.put.show_table(),
                        if diag.all_pass() { "lawful" } else { "unlawful" },
                        if concrete.all_pass() { "lawful" } else { "unlawful" }
                    ));
                }
            }
            rep.cases += shape.lenses;
            rep.shapes.push(shape);
        }
    }
    rep.notes.push("views of cardinality 0 do not occur in the enumeration; that case is not exercised".into());
    Ok(rep)
}

/// Every optic `⟨α|α⁻¹⟩_m` on `x` with `|x|, |m| ≤ bound` is lawful.
pub fn iso_implies_lawful_suite(bound: usize, universe: &Universe) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("iso_implies_lawful");
    let objs = cards(bound)?;
    for x in &objs {
        for m in &objs {
            let mx = Obj::product(m, x)?;
            if mx.card() != x.card() {
                rep.notes.push(format!("x={x}, m={m}: no isomorphism {x} -> {mx}, vacuous"));
                continue;
            }
            let mut n = 0;
            for alpha in HomSet::new(&Cat::Base, x, &mx)?.iter().filter(|a| a.is_iso()) {
                let beta = alpha.inverse().expect("isomorphisms invert");
                let o = Optic::new(m, alpha.clone(), beta, Flavor::Cartesian)?;
                let r = is_lawful(&o, universe)?;
                n += 1;
                if !r.all_pass() {
                    rep.fail(format!("alpha {} is an iso but the optic is not lawful:\n{r}", alpha.show_table()));
                }
            }
            rep.cases += n;
            rep.notes.push(format!("x={x}, m={m}: {n} isomorphisms"));
        }
    }
    Ok(rep)
}

/// Composing monadic lenses as optics re-extracts to the directly composed
/// lens. Shapes run over `(x,x) -> (y,y) -> (z,z)` with cardinalities up to
/// `bound`; a shape with more than `max_pairs` pairs is sampled with `seed`.
pub fn mlens_composition_closure_suite(t: &Monad, bound: usize, max_pairs: u64, seed: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(&format!("mlens_closure over {t}"));
    let cat = Cat::Kleisli(t.clone());
    let objs = cards(bound)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for x in &objs {
        for y in &objs {
            for z in &objs {
                let sets = [
                    (HomSet::new(&Cat::Base, x, y)?, HomSet::new(&cat, &Obj::product(x, y)?, x)?),
                    (HomSet::new(&Cat::Base, y, z)?, HomSet::new(&cat, &Obj::product(y, z)?, y)?),
                ];
                let sizes: Vec<u128> = sets.iter().map(|(g, p)| g.len() as u128 * p.len() as u128).collect();
                let total = sizes[0] * sizes[1];
                let lens_at = |i: usize, r: u128| -> Result<Lens> {
                    let (g, p) = &sets[i];
                    Lens::new(g.get((r / p.len() as u128) as u64), p.get((r % p.len() as u128) as u64))
                };
                let check = |r1: u128, r2: u128, rep: &mut SuiteReport| -> Result<()> {
                    let (l1, l2) = (lens_at(0, r1)?, lens_at(1, r2)?);
                    let direct = l1.then(&l2)?;
                    let composite = compose_optics(&from_lens(&l1)?, &from_lens(&l2)?)?;
                    rep.cases += 1;
                    match to_mlens(&composite) {
                        Ok(back) if back == direct => {}
                        Ok(back) => rep.fail(format!(
                            "({x},{y},{z}) put {} then put {}: extracted put {} differs from direct put {}",
                            l1.put.show_table(),
                            l2.put.show_table(),
                            back.put.show_table(),
                            direct.put.show_table()
                        )),
                        Err(e) => rep.fail(format!("({x},{y},{z}) put {} then put {}: {e}", l1.put.show_table(), l2.put.show_table())),
                    }
                    Ok(())
                };
                if total <= max_pairs as u128 {
                    for r1 in 0..sizes[0] {
                        for r2 in 0..sizes[1] {
                            check(r1, r2, &mut rep)?;
                        }
                    }
                } else {
                    for _ in 0..max_pairs {
                        let r1 = rng.gen_range(0..sizes[0]);
                        let r2 = rng.gen_range(0..sizes[1]);
                        check(r1, r2, &mut rep)?;
                    }
                    rep.notes.push(format!("({x},{y},{z}): sampled {max_pairs} of {total} pairs with seed {seed}"));
                }
            }
        }
    }
    Ok(rep)
}

/// Under the identity monad the monadic laws agree law for law with the
/// matching lens laws: MGetPut with GetPut and MPutGet with PutGet.
pub fn identity_monad_agreement(bound: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("identity_monad_agreement");
    let t = Monad::identity("Id");
    let objs = cards(bound)?;
    for x in &objs {
        for y in &objs {
            for l in enumerate_lenses(x, x, y, y, &Cat::Base)? {
                let lifted = Lens::new(l.get.clone(), l.put.pure_lift(&t))?;
                let (a, b) = (lens_laws(&l)?, mlens_laws(&lifted)?);
                rep.cases += 1;
                for (pure, monadic) in [("GetPut", "MGetPut"), ("PutGet", "MPutGet")] {
                    if a.verdict(pure) != b.verdict(monadic) {
                        rep.fail(format!("get {} put {}: {pure} and {monadic} disagree", l.get.show_table(), l.put.show_table()));
                    }
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lawful_equivalence_at_two() {
        let rep = lawful_equivalence_suite(2, &Universe::default()).unwrap();
        assert!(rep.passed(), "{rep}");
        let bb = rep.shapes.iter().find(|s| s.x_card == 2 && s.y_card == 2).unwrap();
        assert_eq!(bb.lenses, 64);
        assert_eq!(rep.shapes.iter().find(|s| s.x_card == 1 && s.y_card == 1).unwrap().lenses, 1);
    }

    #[test]
    fn dropped_laws_are_detected() {
        let without = |law: &'static str| {
            move |l: &Lens| {
                let mut r = lens_laws(l)?;
                r.checks.retain(|c| c.law != law);
                Ok(r)
            }
        };
        let rep = lawful_equivalence_suite_with(2, &Universe::default(), without("GetPut")).unwrap();
        assert!(!rep.passed());
        // with |x|, |y| ≤ 2, PutGet and GetPut already force PutPut
        let rep = lawful_equivalence_suite_with(2, &Universe::default(), without("PutPut")).unwrap();
        assert!(rep.passed());
        let rep = lawful_equivalence_shapes(&[(3, 2)], &Universe::default(), without("PutPut")).unwrap();
        assert!(!rep.passed());
        assert_eq!(rep.shapes[0].lenses, 8 * 729);
        let rep = lawful_equivalence_shapes(&[(3, 2)], &Universe::default(), lens_laws).unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn isos_are_lawful() {
        let rep = iso_implies_lawful_suite(2, &Universe::default()).unwrap();
        assert!(rep.passed(), "{rep}");
        // x = 2, m = I: the two bijections; x = I, m = I: one
        assert_eq!(rep.cases, 3);
        assert!(rep.notes.iter().any(|n| n.contains("vacuous")));
    }

    #[test]
    fn identity_monad_matches_lens_laws() {
        assert!(identity_monad_agreement(2).unwrap().passed());
    }

    #[test]
    fn maybe_closure_is_exhaustive_at_two() {
        let rep = mlens_composition_closure_suite(&Monad::maybe("Maybe"), 2, 1 << 20, 7).unwrap();
        assert!(rep.passed(), "{rep}");
        assert!(rep.notes.is_empty());
        assert_eq!(rep.cases, {
            // (|get| · |put|) per link, shapes over {1, 2}^3
            let links = |a: u64, b: u64| b.pow(a as u32) * (a + 1).pow((a * b) as u32);
            let mut n = 0;
            for x in 1..=2 {
                for y in 1..=2 {
                    for z in 1..=2 {
                        n += links(x, y) * links(y, z);
                    }
                }
            }
            n
        });
    }

    #[test]
    fn state_closure_sampled() {
        let s = Obj::skeletal(2).unwrap();
        let t = Monad::state("St", s).unwrap();
        let rep = mlens_composition_closure_suite(&t, 2, 2000, 7).unwrap();
        assert!(rep.passed(), "{rep}");
        assert!(rep.notes.iter().any(|n| n.contains("sampled")));
    }
}
