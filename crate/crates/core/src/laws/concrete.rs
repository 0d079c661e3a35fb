//! Element-wise lens laws.

use super::LawReport;
use crate::error::{mismatch, Result};
use crate::fincat::Cat;
use crate::optic::Lens;

/// PutGet, GetPut and PutPut for a lens with `x = u` and `y = v`.
pub fn lens_laws(l: &Lens) -> Result<LawReport> {
    if !l.put.cat().is_base() {
        return Err(mismatch("lens_laws needs a pure put; use mlens_laws"));
    }
    let (x, y) = (l.x(), l.y());
    if l.u() != x || l.v() != y {
        return Err(mismatch(format!("lens laws need (X,X) -> (Y,Y), got ({x},{}) -> ({y},{})", l.u(), l.v())));
    }
    let (nx, ny) = (x.card() as u32, y.card() as u32);
    let get = |e: u32| l.get.apply(e);
    let put = |e: u32, v: u32| l.put.apply(e * ny + v);
    let ex = |e: u32| x.elem(e).to_string();
    let ey = |v: u32| y.elem(v).to_string();
    let mut rep = LawReport::new(format!("lens laws for ({x},{x}) -> ({y},{y})"));

    let mut w = None;
    'pg: for e in 0..nx {
        for v in 0..ny {
            if get(put(e, v)) != v {
                w = Some(format!("get(put({}, {})) = {}", ex(e), ey(v), ey(get(put(e, v)))));
                break 'pg;
            }
        }
    }
    rep.push("PutGet", w);

    let w = (0..nx).find(|&e| put(e, get(e)) != e).map(|e| format!("put({}, get {}) = {}", ex(e), ex(e), ex(put(e, get(e)))));
    rep.push("GetPut", w);

    let mut w = None;
    'pp: for e in 0..nx {
        for v in 0..ny {
            for v2 in 0..ny {
                if put(put(e, v), v2) != put(e, v2) {
                    w = Some(format!(
                        "put(put({}, {}), {}) = {} but put({}, {}) = {}",
                        ex(e),
                        ey(v),
                        ey(v2),
                        ex(put(put(e, v), v2)),
                        ex(e),
                        ey(v2),
                        ex(put(e, v2))
                    ));
                    break 'pp;
                }
            }
        }
    }
    rep.push("PutPut", w);
    Ok(rep)
}

/// MGetPut: `put(e, get e) = unit e`. MPutGet: running `put(e, e')` and then
/// pairing the result `r` with `get r` agrees with pairing it with `e'`.
pub fn mlens_laws(l: &Lens) -> Result<LawReport> {
    let Cat::Kleisli(t) = l.put.cat() else {
        return Err(mismatch("mlens_laws needs a Kleisli put"));
    };
    let (x, y) = (l.x(), l.y());
    if l.u() != x || l.v() != y {
        return Err(mismatch(format!("monadic lens laws need (X,X) -> (Y,Y), got ({x},{}) -> ({y},{})", l.u(), l.v())));
    }
    let (nx, ny) = (x.card(), y.card());
    let nyx = ny * nx;
    let put = |e: u32, v: u32| l.put.apply(e * ny as u32 + v);
    let ex = |e: u32| x.elem(e).to_string();
    let ey = |v: u32| y.elem(v).to_string();
    let mut rep = LawReport::new(format!("monadic lens laws over {t} for ({x},{x}) -> ({y},{y})"));

    let w = (0..nx as u32).find(|&e| put(e, l.get.apply(e)) != t.unit(nx, e)).map(|e| {
        format!("put({}, get {}) = {}, not unit {}", ex(e), ex(e), t.show(x, put(e, l.get.apply(e))), ex(e))
    });
    rep.push("MGetPut", w);

    let mut w = None;
    'outer: for e in 0..nx as u32 {
        for v in 0..ny as u32 {
            let p = put(e, v);
            let lhs = t.bind(nx, nyx, p, |r| t.unit(nyx, l.get.apply(r) * nx as u32 + r));
            let rhs = t.bind(nx, nyx, p, |r| t.unit(nyx, v * nx as u32 + r));
            if lhs != rhs {
                w = Some(format!("put({}, {}) = {}: the result's view is not {}", ex(e), ey(v), t.show(x, p), ey(v)));
                break 'outer;
            }
        }
    }
    rep.push("MPutGet", w);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{structure as st, Monad, Morphism, Obj};

    fn b() -> Obj {
        Obj::atoms("B", &["0", "1"]).unwrap()
    }

    #[test]
    fn tuple_snd_is_very_well_behaved() {
        let bb = Obj::product(&b(), &b()).unwrap();
        let get = st::snd(&b(), &b()).unwrap();
        // put((a, _), c) = (a, c)
        let put = Morphism::tabulate(&Obj::product(&bb, &b()).unwrap(), &bb, Cat::Base, |i| (i / 2 / 2) * 2 + i % 2);
        let rep = lens_laws(&Lens::new(get, put).unwrap()).unwrap();
        assert!(rep.all_pass(), "{rep}");
    }

    #[test]
    fn put_ignoring_the_update_fails_put_get() {
        let l = Lens::new(Morphism::id(&b()), st::fst(&b(), &b()).unwrap()).unwrap();
        let rep = lens_laws(&l).unwrap();
        assert_eq!(rep.verdict("PutGet"), Some(super::super::Verdict::Fail));
        assert!(rep.checks[0].witness.as_ref().unwrap().contains("get(put(0, 1)) = 0"));
        assert_eq!(rep.verdict("GetPut"), Some(super::super::Verdict::Pass));
    }

    #[test]
    fn constant_get_on_a_singleton_view_is_lawful() {
        let i = Obj::unit();
        let l = Lens::new(st::bang(&b()), st::fst(&b(), &i).unwrap()).unwrap();
        assert!(lens_laws(&l).unwrap().all_pass());
    }

    #[test]
    fn monadic_laws() {
        let t = Monad::maybe("Maybe");
        let id = Lens::new(Morphism::id(&b()), st::snd(&b(), &b()).unwrap().pure_lift(&t)).unwrap();
        assert!(mlens_laws(&id).unwrap().all_pass());
        let bb = Obj::product(&b(), &b()).unwrap();
        let nothing = Morphism::new(bb, b(), Cat::Kleisli(t), vec![0; 4]).unwrap();
        let rep = mlens_laws(&Lens::new(Morphism::id(&b()), nothing).unwrap()).unwrap();
        assert_eq!(rep.verdict("MGetPut"), Some(super::super::Verdict::Fail));
        assert!(rep.checks[0].witness.is_some());
    }
}
