//! Lowering typed diagrams to 2-cells, and deciding equality of diagrams.

use std::fmt;

use super::ir::{Diagram, Gen};
use super::typecheck::{typecheck, Typed};
use crate::decide::{ClassVerdict, Search};
use crate::error::{mismatch, Error, Result};
use crate::fincat::{structure as st, Cat, Morphism, Obj};
use crate::optic::Optic;
use crate::tambara::check::{equal_generic, pointwise_equal};
use crate::tambara::twocell::{reify_optic, show_wires};
use crate::tambara::{CellOp, ElemOpts, TwoCell, Universe, Wire};

/// View `f` in the category of a wire, dropping the monad when it is pure.
fn fit(f: &Morphism, cat: &Cat) -> Result<Morphism> {
    match cat {
        Cat::Base => f.as_pure().ok_or_else(|| mismatch(format!("effectful map {f} on a pure wire"))),
        _ => f.lift_to(cat),
    }
}

fn op_for(g: &Gen, t: &Typed, k: usize, s: &super::typecheck::Span) -> Result<Option<CellOp>> {
    let above_in = t.region_cat(k, s.in_off);
    let below_in = t.region_cat(k, s.in_off + s.in_len);
    let above_out = t.region_cat(k + 1, s.out_off);
    let below_out = t.region_cat(k + 1, s.out_off + s.out_len);
    let box_r = |f: Morphism| -> Result<CellOp> {
        Ok(CellOp::BoxR {
            input: Wire::r(f.src(), &above_in),
            output: Wire::r(f.tgt(), &above_out),
            f: fit(&f, &above_in)?,
        })
    };
    Ok(Some(match g {
        Gen::Id | Gen::WireR(_) | Gen::WireL(_) => return Ok(None),
        Gen::BoxR(m) => box_r(m.f.clone())?,
        Gen::Dup(x) => box_r(st::diag(x)?)?,
        Gen::Del(x) => box_r(st::bang(x))?,
        Gen::Swap(x, y) => box_r(st::swap(y, x)?)?,
        Gen::BoxL(m) => CellOp::BoxL {
            input: Wire::l(m.f.tgt(), &below_in),
            output: Wire::l(m.f.src(), &below_out),
            f: fit(&m.f, &below_in)?,
        },
        Gen::Cap(x) => CellOp::Cap { r: Wire::r(x, &above_in), l: Wire::l(x, &below_in) },
        Gen::Cup(x) => {
            let inner = crate::tambara::chain::flatten(&Wire::l(x, &Cat::Base), t.units).len();
            let cat = t.region_cat(k + 1, s.out_off + inner);
            CellOp::Cup { l: Wire::l(x, &cat), r: Wire::r(x, &cat) }
        }
        Gen::Optic(_, o) => {
            let o2 = Optic {
                alpha: fit(&o.alpha, &above_out)?,
                beta: fit(&o.beta, &below_out)?,
                flavor: t.flavor.clone(),
                ..o.clone()
            };
            CellOp::Optic {
                inputs: [Wire::r(&o.x, &above_in), Wire::l(&o.u, &below_in)],
                outputs: [Wire::r(&o.y, &above_out), Wire::l(&o.v, &below_out)],
                o: o2,
            }
        }
        Gen::Cell(n, _, _) => return Err(Error::Abstract(n.clone())),
    }))
}

/// The 2-cell denoted by a typed diagram.
pub fn compile_typed(d: &Diagram, t: &Typed) -> Result<TwoCell> {
    let mut cell = TwoCell::identity(t.source(), t.units, &t.outer());
    for (k, (slice, row)) in d.slices.iter().zip(&t.spans).enumerate() {
        for (g, s) in slice.iter().zip(row) {
            if let Some(op) = op_for(g, t, k, s)? {
                // earlier generators of this slice have already been replaced
                cell.push(s.out_off, op).map_err(|e| Error::Type { slice: k, offset: s.in_off, msg: e.to_string() })?;
            }
        }
    }
    Ok(cell)
}

pub fn compile(d: &Diagram) -> Result<TwoCell> {
    compile_typed(d, &typecheck(d)?)
}

/// The optic denoted by a diagram with boundary `R… L… → R… L…`.
pub fn eval_optic(d: &Diagram) -> Result<Optic> {
    reify_optic(&compile(d)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equality {
    /// Decided exactly.
    Equal,
    /// No difference found, but part of the comparison was truncated.
    EqualWithinTruncation(Vec<String>),
    /// A concrete distinguishing element.
    Distinct(String),
    /// Some element could be neither identified nor separated within the
    /// search bounds.
    Undecided(Vec<String>),
}

impl Equality {
    pub fn is_equal(&self) -> bool {
        matches!(self, Equality::Equal | Equality::EqualWithinTruncation(_))
    }
}

impl fmt::Display for Equality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Equality::Equal => write!(f, "equal"),
            Equality::EqualWithinTruncation(n) => write!(f, "equal within truncation ({})", n.join("; ")),
            Equality::Distinct(w) => write!(f, "distinct\n  witness {w}"),
            Equality::Undecided(n) => write!(f, "undecided ({})", n.join("; ")),
        }
    }
}

/// Search residuals: the universe plus every object on either boundary.
pub fn search_for(u: &Universe, ws: &[&[Wire]]) -> Search {
    let mut objs: Vec<Obj> = u.objects().to_vec();
    for w in ws.iter().flat_map(|w| w.iter()) {
        if !objs.contains(&w.obj) {
            objs.push(w.obj.clone());
        }
    }
    Search::new(objs)
}

/// Compare two diagrams with the same boundary. Representable sources are
/// decided on the generic element; the others component by component over
/// the universe.
pub fn equal_diagrams(d1: &Diagram, d2: &Diagram, u: &Universe, opts: &ElemOpts) -> Result<Equality> {
    let t1 = compile(d1)?;
    let t2 = compile(d2)?;
    equal_cells(&t1, &t2, u, opts)
}

pub fn equal_cells(t1: &TwoCell, t2: &TwoCell, u: &Universe, opts: &ElemOpts) -> Result<Equality> {
    if t1.src != t2.src || t1.tgt != t2.tgt {
        return Err(mismatch(format!(
            "diagrams have different boundaries: {} -> {} and {} -> {}",
            show_wires(&t1.src),
            show_wires(&t1.tgt),
            show_wires(&t2.src),
            show_wires(&t2.tgt)
        )));
    }
    let search = search_for(u, &[&t1.src, &t1.tgt]);
    if let Some(v) = equal_generic(t1, t2, &search)? {
        return Ok(match v {
            ClassVerdict::Equal => Equality::Equal,
            ClassVerdict::Distinct(w) => Equality::Distinct(w),
            ClassVerdict::DistinctWithinBound => {
                Equality::Undecided(vec!["generic element: no zigzag found within the search bound".into()])
            }
        });
    }
    let p = pointwise_equal(t1, t2, u, opts, &search)?;
    let exact = p.exact();
    Ok(match (p.witness, exact) {
        (Some(w), _) => Equality::Distinct(w),
        (None, true) => Equality::Equal,
        (None, false) if p.undecided > 0 => {
            let mut notes = p.truncated;
            notes.push(format!("{} elements undecided", p.undecided));
            Equality::Undecided(notes)
        }
        (None, false) => Equality::EqualWithinTruncation(p.truncated),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse::{parse_diagram, Env};
    use crate::fincat::Monad;
    use crate::optic::{adapter, compose_optics, from_lens, to_lens, to_mlens, zigzag_equal, Flavor, Lens, ZigzagVerdict};

    fn b() -> Obj {
        Obj::atoms("B", &["0", "1"]).unwrap()
    }

    fn env() -> Env {
        let mut e = Env::default();
        let bb = Obj::product(&b(), &b()).unwrap();
        e.objects.insert("B".into(), b());
        e.maps.insert("not".into(), Morphism::new(b(), b(), Cat::Base, vec![1, 0]).unwrap());
        e.maps.insert("k0".into(), Morphism::new(b(), b(), Cat::Base, vec![0, 0]).unwrap());
        e.maps.insert("put".into(), st::snd(&b(), &b()).unwrap());
        e.maps.insert("xor".into(), Morphism::new(bb, b(), Cat::Base, vec![0, 1, 1, 0]).unwrap());
        let l = Lens::new(Morphism::id(&b()), st::snd(&b(), &b()).unwrap()).unwrap();
        e.optics.insert("idl".into(), from_lens(&l).unwrap());
        e
    }

    fn p(s: &str) -> Diagram {
        parse_diagram(s, &env()).unwrap()
    }

    fn u() -> Universe {
        Universe::cards(1, 2).unwrap()
    }

    #[test]
    fn printing_round_trips() {
        for s in [
            "r[not] * l[k0;not] ; wr[B] * wl[B]",
            "dup[B] * l[put] ; r[fst(B,B)] * cap[B] * wl[B]",
            "wr[B*B] ; swap[B,B]",
            "r[<id(B),not>] ; r[xor]",
            "optic[idl] ; wr[B] * cup[B] * wl[B]",
            "id",
        ] {
            let d = p(s);
            let again = p(&d.to_string());
            assert_eq!(d.to_string(), again.to_string(), "{s}");
        }
    }

    #[test]
    fn boxes_denote_adapters() {
        let e = env();
        let o = eval_optic(&p("r[not] * l[k0]")).unwrap();
        let a = adapter(&e.maps["not"], &e.maps["k0"]).unwrap();
        assert_eq!(to_lens(&o).unwrap(), to_lens(&a).unwrap());
    }

    #[test]
    fn normal_form_recovers_the_representative() {
        let bb = Obj::product(&b(), &b()).unwrap();
        let mut e = env();
        let alpha = Morphism::new(b(), bb.clone(), Cat::Base, vec![1, 2]).unwrap();
        let beta = Morphism::new(bb, b(), Cat::Base, vec![0, 1, 1, 1]).unwrap();
        e.maps.insert("a".into(), alpha.clone());
        e.maps.insert("bt".into(), beta.clone());
        let d = parse_diagram("r[a] * l[bt] ; wr[B] * cap[B] * wl[B]", &e).unwrap();
        let o = eval_optic(&d).unwrap();
        let want = Optic::new(&b(), alpha, beta, Flavor::Cartesian).unwrap();
        assert_eq!(zigzag_equal(&o, &want, 2).unwrap(), ZigzagVerdict::Equal);
    }

    #[test]
    fn lens_decomposition_matches_from_lens() {
        let mut e = env();
        e.maps.insert("get".into(), e.maps["not"].clone());
        let d = parse_diagram("dup[B] * l[put] ; r[get] * cap[B] * wl[B]", &e).unwrap();
        let o = eval_optic(&d).unwrap();
        let l = Lens::new(e.maps["not"].clone(), e.maps["put"].clone()).unwrap();
        assert_eq!(to_lens(&o).unwrap(), l);
    }

    #[test]
    fn dup_on_a_left_wire_is_rejected() {
        let err = compile(&p("wl[B] ; dup[B]")).unwrap_err();
        assert!(matches!(err, Error::Type { slice: 1, offset: 0, .. }), "{err}");
    }

    #[test]
    fn snakes_straighten() {
        let v = equal_diagrams(&p("wr[B] * cup[B] ; cap[B] * wr[B]"), &p("wr[B]"), &u(), &ElemOpts::default()).unwrap();
        assert_eq!(v, Equality::Equal);
        let v = equal_diagrams(&p("cup[B] * wl[B] ; wl[B] * cap[B]"), &p("wl[B]"), &u(), &ElemOpts::default()).unwrap();
        assert_eq!(v, Equality::Equal);
    }

    #[test]
    fn different_boxes_are_distinct() {
        let v = equal_diagrams(&p("r[not]"), &p("r[id(B)]"), &u(), &ElemOpts::default()).unwrap();
        assert!(matches!(v, Equality::Distinct(_)), "{v}");
    }

    #[test]
    fn non_representable_sources_compare_pointwise() {
        // L_B ⊗ R_B has no generic element
        let v = equal_diagrams(&p("l[not] * r[not]"), &p("l[not] * wr[B] ; wl[B] * r[not]"), &u(), &ElemOpts::default()).unwrap();
        assert_eq!(v, Equality::Equal);
        let v = equal_diagrams(&p("l[not] * r[not]"), &p("wl[B] * r[not]"), &u(), &ElemOpts::default()).unwrap();
        assert!(matches!(v, Equality::Distinct(_)), "{v}");
    }

    #[test]
    fn mixed_optics_compose_through_a_cup() {
        let t = Monad::maybe("Maybe");
        let k = Cat::Kleisli(t.clone());
        let bb = Obj::product(&b(), &b()).unwrap();
        let mut e = env();
        // l : <B,B> -> <B,B>, an optic with residual B that may fail backwards
        let put = Morphism::new(bb.clone(), b(), k.clone(), vec![1, 0, 2, 2]).unwrap();
        let l = from_lens(&Lens::new(e.maps["not"].clone(), put).unwrap()).unwrap();
        let kk = from_lens(&Lens::new(Morphism::id(&b()), st::snd(&b(), &b()).unwrap().pure_lift(&t)).unwrap()).unwrap();
        e.optics.insert("l".into(), l.clone());
        e.optics.insert("k".into(), kk.clone());
        let d = parse_diagram("wr[B] * cup[B] * wl[B] ; optic[l] * optic[k] ; cap[B] * wr[B] * wl[B]", &e).unwrap();
        let o = eval_optic(&d).unwrap();
        let h = l.alpha.then(&l.beta).unwrap();
        let want = compose_optics(&adapter(&h, &Morphism::id(&b()).pure_lift(&t)).unwrap(), &kk).unwrap();
        assert_eq!(zigzag_equal(&o, &want, 2).unwrap(), ZigzagVerdict::Equal);
        assert!(to_mlens(&o).is_err());
    }

    #[test]
    fn effectful_box_needs_an_effectful_region() {
        let t = Monad::maybe("Maybe");
        let mut e = env();
        e.maps.insert("f".into(), Morphism::new(b(), b(), Cat::Kleisli(t), vec![0, 1]).unwrap());
        let d = parse_diagram("wr[B] * r[f]", &e).unwrap();
        let err = compile(&d).unwrap_err();
        assert!(matches!(err, Error::Type { .. }), "{err}");
        assert!(compile(&parse_diagram("r[f] * wr[B]", &e).unwrap()).is_ok());
    }
}
