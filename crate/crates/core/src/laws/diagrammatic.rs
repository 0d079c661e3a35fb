//! Lawfulness as two diagram equations: the optic followed by the cap is the
//! cap (`outside`), and bending a wire after the optic is the same as
//! running the optic twice around a bent wire (`once = twice`).

use super::LawReport;
use crate::diagram::ir::{Diagram, Gen};
use crate::diagram::{equal_diagrams, Equality};
use crate::error::{mismatch, Result};
use crate::fincat::Obj;
use crate::optic::{identity_optic, Flavor, Optic};
use crate::tambara::{ElemOpts, Universe};

fn check_shape(l: &Optic) -> Result<()> {
    if l.x != l.u || l.y != l.v {
        return Err(mismatch(format!("lawfulness needs <x,x> -> <y,y>, got <{},{}> -> <{},{}>", l.x, l.u, l.y, l.v)));
    }
    Ok(())
}

fn optic_gen(l: &Optic) -> Gen {
    Gen::Optic("l".into(), l.clone())
}

/// `optic[l] ; cap[y]`
pub fn build_outside(l: &Optic) -> Result<Diagram> {
    check_shape(l)?;
    Ok(Diagram { slices: vec![vec![optic_gen(l)], vec![Gen::Cap(l.y.clone())]] })
}

/// `cap[x]`
pub fn cap_diagram(x: &Obj) -> Diagram {
    Diagram::single(Gen::Cap(x.clone()))
}

/// `optic[l] ; wr[y] * cup[y] * wl[y]`
pub fn build_once(l: &Optic) -> Result<Diagram> {
    check_shape(l)?;
    let y = &l.y;
    Ok(Diagram {
        slices: vec![vec![optic_gen(l)], vec![Gen::WireR(y.clone()), Gen::Cup(y.clone()), Gen::WireL(y.clone())]],
    })
}

/// `wr[x] * cup[x] * wl[x] ; optic[l] * optic[l]`
pub fn build_twice(l: &Optic) -> Result<Diagram> {
    check_shape(l)?;
    let x = &l.x;
    Ok(Diagram {
        slices: vec![vec![Gen::WireR(x.clone()), Gen::Cup(x.clone()), Gen::WireL(x.clone())], vec![optic_gen(l), optic_gen(l)]],
    })
}

/// The right side of `outside` for `l`: the bare cap, or for a mixed optic
/// the cap after the identity optic so both sides share the Kleisli region.
pub fn cap_side(l: &Optic) -> Result<Diagram> {
    match &l.flavor {
        Flavor::Cartesian => Ok(cap_diagram(&l.x)),
        Flavor::Mixed(_) => {
            let id = identity_optic(&l.x, &l.x, l.flavor.clone())?;
            Ok(Diagram { slices: vec![vec![Gen::Optic("id".into(), id)], vec![Gen::Cap(l.x.clone())]] })
        }
    }
}

fn record(rep: &mut LawReport, law: &str, v: Equality) {
    match v {
        Equality::Equal => rep.push(law, None),
        Equality::EqualWithinTruncation(notes) => {
            rep.push(law, None);
            rep.truncation_notes.extend(notes.into_iter().map(|n| format!("{law}: {n}")));
        }
        Equality::Distinct(w) => rep.push(law, Some(w)),
        Equality::Undecided(notes) => {
            rep.checks.push(super::LawCheck { law: law.to_string(), verdict: super::Verdict::Undecided, witness: None });
            rep.truncation_notes.extend(notes.into_iter().map(|n| format!("{law}: {n}")));
        }
    }
}

/// Both diagram equations, decided on the generic element.
pub fn is_lawful(l: &Optic, universe: &Universe) -> Result<LawReport> {
    check_shape(l)?;
    let opts = ElemOpts::default();
    let mut rep = LawReport::new(format!("optic <{},{}> -> <{},{}> with residual {}", l.x, l.u, l.y, l.v, l.m));
    let outside = equal_diagrams(&build_outside(l)?, &cap_side(l)?, universe, &opts)?;
    record(&mut rep, "outside", outside);
    let once_twice = equal_diagrams(&build_once(l)?, &build_twice(l)?, universe, &opts)?;
    record(&mut rep, "once=twice", once_twice);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{compile, typecheck};
    use crate::fincat::{structure as st, Cat, Morphism};
    use crate::laws::Verdict;
    use crate::optic::{from_lens, identity_optic, Flavor, Lens};
    use crate::tambara::{counit, Units};

    fn b() -> Obj {
        Obj::atoms("B", &["0", "1"]).unwrap()
    }

    #[test]
    fn identity_is_lawful_and_outside_is_the_counit() {
        let id = identity_optic(&b(), &b(), Flavor::Cartesian).unwrap();
        let u = Universe::default();
        assert!(is_lawful(&id, &u).unwrap().all_pass());
        let t = compile(&build_outside(&id).unwrap()).unwrap();
        assert_eq!(t.src, counit(&b(), &Flavor::Cartesian).src);
        assert!(t.tgt.is_empty() && t.units == Units::Drop);
        let v = equal_diagrams(&build_once(&id).unwrap(), &build_twice(&id).unwrap(), &u, &ElemOpts::default()).unwrap();
        assert_eq!(v, Equality::Equal);
    }

    #[test]
    fn twice_has_the_doubled_boundary() {
        let id = identity_optic(&b(), &b(), Flavor::Cartesian).unwrap();
        let t = typecheck(&build_twice(&id).unwrap()).unwrap();
        let dirs: Vec<String> = t.target().iter().map(|w| w.to_string()).collect();
        assert_eq!(dirs, ["R_B", "L_B", "R_B", "L_B"]);
    }

    #[test]
    fn lens_verdicts() {
        let u = Universe::default();
        let good = from_lens(&Lens::new(Morphism::id(&b()), st::snd(&b(), &b()).unwrap()).unwrap()).unwrap();
        assert!(is_lawful(&good, &u).unwrap().all_pass());
        let k0 = Morphism::new(b(), b(), Cat::Base, vec![0, 0]).unwrap();
        let bad = from_lens(&Lens::new(k0, st::fst(&b(), &b()).unwrap()).unwrap()).unwrap();
        let rep = is_lawful(&bad, &u).unwrap();
        assert!(rep.any_fail(), "{rep}");
        assert!(rep.checks.iter().filter(|c| c.verdict == Verdict::Fail).all(|c| c.witness.is_some()));
    }
}
