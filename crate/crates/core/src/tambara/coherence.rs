//! Explicit bijections between composites of oriented-wire modules and the
//! modules they collapse to, checked for bijectivity and for commuting with
//! both actions and the strength.
//!
//! Unitors and associators are index identities, so every map here works on
//! raw tables.

use std::sync::Arc;

use super::check::CheckReport;
use super::profunctor::{build_l, build_r, compose_prof, hom_profunctor, FinProfunctor};
use super::universe::Universe;
use crate::error::{Error, Result};
use crate::fincat::{structure as st, Cat, HomSet, Morphism, Obj};

type TokenMap<'a> = dyn Fn(usize, usize, u64) -> Result<Option<u64>> + 'a;

/// Largest cell compared.
const MAX_CELL: u64 = 1 << 14;

/// Check that `fwd : p → q` and `bwd : q → p` are mutually inverse and that
/// `fwd` commutes with the actions and the strength, on cells drawn from
/// `cells` (universe indices).
pub fn check_iso(subject: &str, p: &FinProfunctor, q: &FinProfunctor, cells: &[usize], fwd: &TokenMap, bwd: &TokenMap) -> CheckReport {
    let mut rep = CheckReport { subject: subject.to_string(), ..Default::default() };
    if let Err(e) = iso_into(p, q, cells, fwd, bwd, &mut rep) {
        rep.failures.push(format!("stopped: {e}"));
    }
    rep
}

/// `Ok(None)` for entries outside the bounds, which are noted and skipped.
fn soft<T>(r: Result<Option<T>>, rep: &mut CheckReport, what: impl FnOnce() -> String) -> Result<Option<T>> {
    match r {
        Ok(None) => {
            rep.undecided += 1;
            Ok(None)
        }
        Err(Error::BoundExceeded { what: w, .. }) => {
            if rep.notes.len() < 8 {
                rep.notes.push(format!("{} skipped: {w}", what()));
            }
            rep.undecided += 1;
            Ok(None)
        }
        r => r,
    }
}

fn iso_into(p: &FinProfunctor, q: &FinProfunctor, cells: &[usize], fwd: &TokenMap, bwd: &TokenMap, rep: &mut CheckReport) -> Result<()> {
    let u = p.universe().objects().to_vec();
    let n = u.len();
    let fail = |rep: &mut CheckReport, ok: bool, what: &dyn Fn() -> String| {
        rep.squares += 1;
        if !ok && rep.failures.len() < 20 {
            rep.failures.push(what());
        }
    };
    for &a in cells {
        for &b in cells {
            let (sp, sq) = (p.size(a, b)?, q.size(a, b)?);
            if sp > MAX_CELL {
                rep.notes.push(format!("cell ({},{}) has {sp} values; skipped", u[a], u[b]));
                continue;
            }
            fail(rep, sp == sq, &|| format!("sizes differ at ({},{}): {sp} vs {sq}", u[a], u[b]));
            if sp != sq {
                continue;
            }
            let mut hit = vec![false; sq as usize];
            for t in 0..sp {
                let Some(ft) = soft(fwd(a, b, t), rep, || format!("forward at ({},{})", u[a], u[b]))? else { continue };
                fail(rep, !hit[ft as usize], &|| format!("not injective at ({},{}) on {}", u[a], u[b], p.show_token(a, b, t)));
                hit[ft as usize] = true;
                if let Some(back) = soft(bwd(a, b, ft), rep, || format!("inverse at ({},{})", u[a], u[b]))? {
                    fail(rep, back == t, &|| format!("inverse does not undo the map at ({},{}) on {}", u[a], u[b], p.show_token(a, b, t)));
                }
                for &a2 in cells {
                    for f in HomSet::new(&p.src_cat(), &u[a2], &u[a])?.iter() {
                        let lhs = fwd(a2, b, p.left_act(&f, a2, a, b, t)?)?;
                        let rhs = q.left_act(&f, a2, a, b, ft)?;
                        if let Some(l) = lhs {
                            fail(rep, l == rhs, &|| format!("left action by {} at ({},{}) on {}", f.show_table(), u[a], u[b], p.show_token(a, b, t)));
                        }
                    }
                }
                for &b2 in cells {
                    for g in HomSet::new(&p.dst_cat(), &u[b], &u[b2])?.iter() {
                        let lhs = fwd(a, b2, p.right_act(&g, a, b, b2, t)?)?;
                        let rhs = q.right_act(&g, a, b, b2, ft)?;
                        if let Some(l) = lhs {
                            fail(rep, l == rhs, &|| format!("right action by {} at ({},{}) on {}", g.show_table(), u[a], u[b], p.show_token(a, b, t)));
                        }
                    }
                }
                for m in 0..n {
                    let Some((ma, mb, s)) = soft(p.strength(m, a, b, t), rep, || format!("strength by {}", u[m]))? else { continue };
                    let Some(lhs) = soft(fwd(ma, mb, s), rep, || format!("forward at ({},{})", u[ma], u[mb]))? else { continue };
                    let Some(rhs) = soft(q.strength(m, a, b, ft), rep, || format!("strength by {}", u[m]))? else { continue };
                    fail(rep, Some((ma, mb, lhs)) == Some(rhs), &|| format!("strength by {} at ({},{}) on {}", u[m], u[a], u[b], p.show_token(a, b, t)));
                }
            }
            fail(rep, hit.iter().all(|&h| h) || rep.undecided > 0, &|| format!("not surjective at ({},{})", u[a], u[b]));
        }
    }
    if rep.undecided > 0 {
        rep.notes.push(format!("{} entries left the bounds", rep.undecided));
    }
    Ok(())
}

fn identity_table(n: usize) -> Vec<u32> {
    (0..n as u32).collect()
}

/// Universe members of cardinality at most `max_card`.
pub fn small_cells(u: &Universe, max_card: usize) -> Vec<usize> {
    (0..u.objects().len()).filter(|&i| u.objects()[i].card() <= max_card).collect()
}

/// `R_I ≅ hom`, through the right unitor of the codomain.
pub fn r_unit_iso(cat: &Cat, u: &Universe, max_card: usize) -> CheckReport {
    let r = build_r(&Obj::unit(), cat, u);
    let h = hom_profunctor(cat, u);
    let fwd = |a: usize, b: usize, t: u64| Ok(Some(h.token_of_table(a, b, r.token_map(a, b, t)?.table())?));
    let bwd = |a: usize, b: usize, t: u64| Ok(Some(r.token_of_table(a, b, h.token_map(a, b, t)?.table())?));
    check_iso(&format!("{r} ≅ {h}"), &r, &h, &small_cells(u, max_card), &fwd, &bwd)
}

/// `hom ⊗ P ≅ P`, by letting the hom part act.
pub fn hom_unit_iso(p: Arc<FinProfunctor>, max_card: usize) -> Result<CheckReport> {
    let u = p.universe().clone();
    let h = Arc::new(hom_profunctor(&p.src_cat(), &u));
    let c = compose_prof(h.clone(), p.clone())?;
    let fwd = |a: usize, b: usize, t: u64| {
        let (m, th, tp) = c.token_rep(a, b, t)?;
        Ok(Some(p.left_act(&h.token_map(a, m, th)?, a, m, b, tp)?))
    };
    let bwd = |a: usize, b: usize, t: u64| {
        let id = h.token_of_table(a, a, &identity_table(u.objects()[a].card()))?;
        Ok(Some(c.class_of(a, b, a, id, t)?))
    };
    Ok(check_iso(&format!("{c} ≅ {p}"), &c, &p, &small_cells(&u, max_card), &fwd, &bwd))
}

/// `R_x ⊗ R_m ≅ R_{m × x}`: `[p, q] ↦ p ; (q × x) ; a`.
pub fn r_tensor_iso(x: &Obj, m: &Obj, cat: &Cat, u: &Universe, max_card: usize) -> Result<CheckReport> {
    let rx = Arc::new(build_r(x, cat, u));
    let rm = Arc::new(build_r(m, cat, u));
    let c = compose_prof(rx.clone(), rm.clone())?;
    let rmx = build_r(&Obj::product(m, x)?, cat, u);
    let fwd = |a: usize, b: usize, t: u64| {
        let (mid, tp, tq) = c.token_rep(a, b, t)?;
        let p = rx.token_map(a, mid, tp)?;
        let q = rm.token_map(mid, b, tq)?;
        let r = p.then(&st::act_right(&q, x)?)?;
        Ok(Some(rmx.token_of_table(a, b, r.table())?))
    };
    let bwd = |a: usize, b: usize, t: u64| {
        let Some(mid) = rmx.transport(u.objects()[b].card() * m.card()) else { return Ok(None) };
        let r = rmx.token_map(a, b, t)?;
        let tp = rx.token_of_table(a, mid, r.table())?;
        let tq = rm.token_of_table(mid, b, &identity_table(u.objects()[mid].card()))?;
        Ok(Some(c.class_of(a, b, mid, tp, tq)?))
    };
    Ok(check_iso(&format!("{c} ≅ {rmx}"), &c, &rmx, &small_cells(u, max_card), &fwd, &bwd))
}

/// `L_m ⊗ L_x ≅ L_{m × x}`: `[q1, q2] ↦ a⁻¹ ; (q1 × x) ; q2`.
pub fn l_tensor_iso(m: &Obj, x: &Obj, cat: &Cat, u: &Universe, max_card: usize) -> Result<CheckReport> {
    let lm = Arc::new(build_l(m, cat, u));
    let lx = Arc::new(build_l(x, cat, u));
    let c = compose_prof(lm.clone(), lx.clone())?;
    let lmx = build_l(&Obj::product(m, x)?, cat, u);
    let fwd = |a: usize, b: usize, t: u64| {
        let (mid, t1, t2) = c.token_rep(a, b, t)?;
        let q1 = lm.token_map(a, mid, t1)?;
        let q2 = lx.token_map(mid, b, t2)?;
        let r = st::act_right(&q1, x)?.then(&q2)?;
        Ok(Some(lmx.token_of_table(a, b, r.table())?))
    };
    let bwd = |a: usize, b: usize, t: u64| {
        let Some(mid) = lmx.transport(u.objects()[a].card() * m.card()) else { return Ok(None) };
        let r = lmx.token_map(a, b, t)?;
        let id = Morphism::id(&u.objects()[mid]).lift_to(cat)?;
        let t1 = lm.token_of_table(a, mid, id.table())?;
        let t2 = lx.token_of_table(mid, b, r.table())?;
        Ok(Some(c.class_of(a, b, mid, t1, t2)?))
    };
    Ok(check_iso(&format!("{c} ≅ {lmx}"), &c, &lmx, &small_cells(u, max_card), &fwd, &bwd))
}

/// All coherence bijections for wires of the given objects, over base maps.
pub fn coherence_suite(u: &Universe, objs: &[Obj], max_card: usize) -> Result<Vec<CheckReport>> {
    let cat = Cat::Base;
    let mut out = vec![r_unit_iso(&cat, u, max_card)];
    for x in objs {
        out.push(hom_unit_iso(Arc::new(build_r(x, &cat, u)), max_card)?);
        for m in objs {
            out.push(r_tensor_iso(x, m, &cat, u, max_card)?);
            out.push(l_tensor_iso(m, x, &cat, u, max_card)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r_unit_is_hom() {
        let u = Universe::cards(1, 2).unwrap();
        let rep = r_unit_iso(&Cat::Base, &u, 2);
        assert!(rep.passed(), "{rep}");
        assert!(rep.squares > 20);
    }

    #[test]
    fn r_and_l_tensor_collapse() {
        let u = Universe::default();
        let two = Obj::skeletal(2).unwrap();
        let r = r_tensor_iso(&two, &two, &Cat::Base, &u, 2).unwrap();
        assert!(r.passed(), "{r}");
        let l = l_tensor_iso(&two, &two, &Cat::Base, &u, 2).unwrap();
        assert!(l.passed(), "{l}");
    }

    #[test]
    fn hom_is_a_unit() {
        let u = Universe::cards(1, 2).unwrap();
        let two = Obj::skeletal(2).unwrap();
        let rep = hom_unit_iso(Arc::new(build_l(&two, &Cat::Base, &u)), 2).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}
