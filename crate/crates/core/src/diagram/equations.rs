//! Equational suites stated on diagrams: snakes and sliding checked component
//! by component, and the round trip between optics and their normal-form
//! diagrams.

use super::compile::{compile, eval_optic, search_for};
use super::ir::{Diagram, Gen, MTerm};
use super::rewrite::rule;
use crate::error::{mismatch, Result};
use crate::fincat::{Cat, HomSet, Obj};
use crate::laws::SuiteReport;
use crate::optic::{zigzag_equal, Flavor, Optic, ZigzagVerdict};
use crate::tambara::check::pointwise_equal;
use crate::tambara::{optic_to_2cell, reify_optic, ElemOpts, Universe};

/// `r[α] * l[β] ; wr[y] * cap[m] * wl[v]`.
pub fn normal_form(o: &Optic) -> Result<Diagram> {
    Ok(Diagram {
        slices: vec![
            vec![Gen::BoxR(MTerm::named("alpha", o.alpha.clone())), Gen::BoxL(MTerm::named("beta", o.beta.clone()))],
            vec![Gen::WireR(o.y.clone()), Gen::Cap(o.m.clone()), Gen::WireL(o.v.clone())],
        ],
    })
}

/// Snake and sliding equations on every object of cardinality at most 2 and
/// every map between such objects, compared pointwise over `u`.
pub fn snake_and_sliding(u: &Universe, opts: &ElemOpts) -> Result<SuiteReport> {
    equation_suite("snake and sliding (pointwise)", &["snake1", "snake2", "slide_cap", "slide_cup"], u, opts)
}

/// Both sides of each named rule on all of its instances, compared pointwise
/// over `u` even when the source is representable.
pub fn equation_suite(title: &str, names: &[&str], u: &Universe, opts: &ElemOpts) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(title);
    let mut elements = 0u64;
    for &name in names {
        let r = rule(name).ok_or_else(|| mismatch(format!("no rule named {name}")))?;
        for (lhs, rhs) in r.instance_pairs()? {
            let (t1, t2) = (compile(&lhs)?, compile(&rhs)?);
            let search = search_for(u, &[&t1.src, &t1.tgt]);
            let p = pointwise_equal(&t1, &t2, u, opts, &search)?;
            rep.cases += 1;
            elements += p.elements;
            if let Some(w) = &p.witness {
                rep.fail(format!("{name}: {lhs} differs from {rhs}: {w}"));
            } else if !p.exact() {
                rep.fail(format!("{name}: {lhs} only checked within truncation: {}", p.truncated.join("; ")));
            }
        }
    }
    rep.notes.push(format!("{elements} elements compared over {}", u.describe()));
    Ok(rep)
}

/// Every cartesian optic between objects of cardinality `card` with residual
/// `I` or of cardinality `card`: reifying its 2-cell and evaluating its
/// normal-form diagram both give back the same class.
pub fn representation_roundtrip(card: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(&format!("representation round trip at cardinality {card}"));
    let x = Obj::skeletal(card)?;
    let cat = Cat::Base;
    for m in [Obj::unit(), x.clone()] {
        let my = Obj::product(&m, &x)?;
        let alphas = HomSet::new(&cat, &x, &my)?;
        let betas = HomSet::new(&cat, &my, &x)?;
        for alpha in alphas.iter() {
            for beta in betas.iter() {
                let o = Optic::new(&m, alpha.clone(), beta, Flavor::Cartesian)?;
                rep.cases += 1;
                let back = reify_optic(&optic_to_2cell(&o))?;
                if zigzag_equal(&back, &o, card)? != ZigzagVerdict::Equal {
                    rep.fail(format!("reify after 2-cell changed {}", o.describe()));
                }
                let nf = eval_optic(&normal_form(&o)?)?;
                if zigzag_equal(&nf, &o, card)? != ZigzagVerdict::Equal {
                    rep.fail(format!("normal form of {} evaluates to {}", o.describe(), nf.describe()));
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
    fn roundtrip_at_two_covers_all_representatives() {
        let r = representation_roundtrip(2).unwrap();
        assert!(r.passed(), "{r}");
        // 4 * 4 with unit residual, 16 * 16 with residual 2
        assert_eq!(r.cases, 272);
    }

    #[test]
    fn snakes_and_sliding_hold_on_a_small_universe() {
        let r = snake_and_sliding(&Universe::cards(1, 2).unwrap(), &ElemOpts::default()).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.cases, 2 + 2 + 8 + 8);
    }
}
