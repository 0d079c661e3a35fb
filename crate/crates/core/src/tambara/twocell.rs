//! 2-cells between composites of oriented-wire modules, as straight-line
//! programs of local steps acting on chain elements.

use std::fmt;

use super::chain::{flatten, flatten_all, Chain, Dir, Slot, Units, Wire};
use crate::error::{mismatch, Error, Result};
use crate::fincat::{structure as st, Cat, Morphism, Obj};
use crate::optic::{Flavor, Optic};

/// A generator acting on a run of raw (unflattened) wires.
#[derive(Clone, Debug)]
pub enum CellOp {
    /// `R_f : R_a → R_b` for `f : a → b`.
    BoxR { f: Morphism, input: Wire, output: Wire },
    /// `L_f : L_b → L_a` for `f : a → b`.
    BoxL { f: Morphism, input: Wire, output: Wire },
    /// Counit `R_x ⊗ L_x → hom`.
    Cap { r: Wire, l: Wire },
    /// Unit `hom → L_x ⊗ R_x`.
    Cup { l: Wire, r: Wire },
    /// Post-composition with an optic `⟨x,u⟩ → ⟨y,v⟩`.
    Optic { o: Optic, inputs: [Wire; 2], outputs: [Wire; 2] },
}

impl CellOp {
    pub fn inputs(&self) -> Vec<Wire> {
        match self {
            CellOp::BoxR { input, .. } | CellOp::BoxL { input, .. } => vec![input.clone()],
            CellOp::Cap { r, l } => vec![r.clone(), l.clone()],
            CellOp::Cup { .. } => vec![],
            CellOp::Optic { inputs, .. } => inputs.to_vec(),
        }
    }

    pub fn outputs(&self) -> Vec<Wire> {
        match self {
            CellOp::BoxR { output, .. } | CellOp::BoxL { output, .. } => vec![output.clone()],
            CellOp::Cap { .. } => vec![],
            CellOp::Cup { l, r } => vec![l.clone(), r.clone()],
            CellOp::Optic { outputs, .. } => outputs.to_vec(),
        }
    }

    /// Raw output slots, middle objects and components from the fused inputs.
    fn run(&self, objs: &[Obj], comps: &[Morphism]) -> Result<(Vec<Slot>, Vec<Obj>, Vec<Morphism>)> {
        Ok(match self {
            CellOp::BoxR { f, output, .. } => {
                let c = comps[0].then(&st::act(&objs[1], f)?)?.lift_to(&output.cat)?;
                (vec![Slot::Wire(output.clone())], objs.to_vec(), vec![c])
            }
            CellOp::BoxL { f, output, .. } => {
                let c = st::act(&objs[0], f)?.then(&comps[0])?.lift_to(&output.cat)?;
                (vec![Slot::Wire(output.clone())], objs.to_vec(), vec![c])
            }
            CellOp::Cap { r, .. } => {
                let c = comps[0].then(&comps[1])?.lift_to(&r.cat)?;
                (vec![Slot::Hom(r.cat.clone())], vec![objs[0].clone(), objs[2].clone()], vec![c])
            }
            CellOp::Cup { l, r } => {
                let c = &objs[0];
                let cx = Obj::product(c, &l.obj)?;
                let id = Morphism::id(&cx);
                (
                    vec![Slot::Wire(l.clone()), Slot::Wire(r.clone())],
                    vec![c.clone(), cx, c.clone()],
                    vec![id.lift_to(&l.cat)?, id.lift_to(&r.cat)?],
                )
            }
            CellOp::Optic { o, outputs, .. } => {
                let n = &objs[1];
                let nm = Obj::product(n, &o.m)?;
                let alpha = comps[0].then(&st::act(n, &o.alpha)?)?.then(&st::assoc_inv(n, &o.m, &o.y)?)?;
                let beta = st::assoc(n, &o.m, &o.v)?.then(&st::act(n, &o.beta)?)?.then(&comps[1])?;
                (
                    outputs.iter().map(|w| Slot::Wire(w.clone())).collect(),
                    vec![objs[0].clone(), nm, objs[2].clone()],
                    vec![alpha.lift_to(&outputs[0].cat)?, beta.lift_to(&outputs[1].cat)?],
                )
            }
        })
    }
}

impl fmt::Display for CellOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellOp::BoxR { f: m, .. } => write!(f, "R({})", m),
            CellOp::BoxL { f: m, .. } => write!(f, "L({})", m),
            CellOp::Cap { r, .. } => write!(f, "cap({})", r.obj),
            CellOp::Cup { l, .. } => write!(f, "cup({})", l.obj),
            CellOp::Optic { o, .. } => write!(f, "optic(<{},{}> -> <{},{}>)", o.x, o.u, o.y, o.v),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Step {
    /// Position of the first input among the current flattened wires.
    pub offset: usize,
    pub op: CellOp,
}

#[derive(Clone, Debug)]
pub struct TwoCell {
    pub src: Vec<Wire>,
    pub tgt: Vec<Wire>,
    pub units: Units,
    /// Label of the outer region when the source has no wires.
    pub region: Cat,
    steps: Vec<Step>,
}

impl TwoCell {
    pub fn identity(wires: &[Wire], units: Units, region: &Cat) -> TwoCell {
        let ws = flatten_all(wires, units);
        TwoCell { src: ws.clone(), tgt: ws, units, region: region.clone(), steps: Vec::new() }
    }

    pub fn from_op(op: CellOp, units: Units, region: &Cat) -> TwoCell {
        TwoCell {
            src: flatten_all(&op.inputs(), units),
            tgt: flatten_all(&op.outputs(), units),
            units,
            region: region.clone(),
            steps: vec![Step { offset: 0, op }],
        }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Append a step acting at `offset` in the current target.
    pub fn push(&mut self, offset: usize, op: CellOp) -> Result<()> {
        let ins = flatten_all(&op.inputs(), self.units);
        if offset + ins.len() > self.tgt.len() || self.tgt[offset..offset + ins.len()] != ins[..] {
            return Err(mismatch(format!("{op} does not apply at position {offset}")));
        }
        let outs = flatten_all(&op.outputs(), self.units);
        self.tgt.splice(offset..offset + ins.len(), outs);
        self.steps.push(Step { offset, op });
        Ok(())
    }

    /// Horizontal composite: `self` then `next`.
    pub fn hcomp(&self, next: &TwoCell) -> Result<TwoCell> {
        if self.tgt != next.src || self.units != next.units {
            return Err(mismatch(format!("cannot compose 2-cells: {} vs {}", show_wires(&self.tgt), show_wires(&next.src))));
        }
        let mut out = self.clone();
        out.tgt = next.tgt.clone();
        out.steps.extend(next.steps.iter().cloned());
        Ok(out)
    }

    /// Vertical juxtaposition with `self` on top.
    pub fn tensor(&self, bottom: &TwoCell) -> Result<TwoCell> {
        if self.units != bottom.units {
            return Err(mismatch("tensoring 2-cells with different unit conventions"));
        }
        let mut src = self.src.clone();
        src.extend(bottom.src.iter().cloned());
        let mut tgt = self.tgt.clone();
        tgt.extend(bottom.tgt.iter().cloned());
        let shift = self.tgt.len();
        let mut steps = self.steps.clone();
        steps.extend(bottom.steps.iter().map(|s| Step { offset: s.offset + shift, op: s.op.clone() }));
        let region = if self.src.is_empty() { self.region.clone() } else { bottom.region.clone() };
        Ok(TwoCell { src, tgt, units: self.units, region, steps })
    }

    /// The component at the element's endpoints.
    pub fn apply(&self, c: &Chain) -> Result<Chain> {
        if c.wires() != self.src {
            return Err(mismatch(format!(
                "element of {} given to a 2-cell from {}",
                show_wires(&c.wires()),
                show_wires(&self.src)
            )));
        }
        let mut cur = c.clone();
        for s in &self.steps {
            let ins = s.op.inputs();
            let (objs, comps) = cur.fuse_range(s.offset, &ins, self.units)?;
            let (slots, new_objs, new_comps) = s.op.run(&objs, &comps)?;
            cur = if cur.is_hom() && !ins.is_empty() {
                Chain::from_raw_slots(&new_objs, &slots, &new_comps, self.units)?
            } else {
                let len = flatten_all(&ins, self.units).len();
                cur.splice(s.offset, len, &slots, &new_objs, &new_comps, self.units)?
            };
        }
        Ok(cur)
    }

    /// The generic element of a representable source, if there is one.
    pub fn generic(&self) -> Result<Option<Chain>> {
        Chain::generic(&self.src, self.units, &self.region)
    }
}

pub fn show_wires(ws: &[Wire]) -> String {
    if ws.is_empty() {
        return "[]".into();
    }
    let parts: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn units_for(flavor: &Flavor) -> Units {
    match flavor {
        Flavor::Cartesian => Units::Drop,
        Flavor::Mixed(_) => Units::Keep,
    }
}

/// `R_x ⊗ L_x → hom_C`, composing the two components.
pub fn counit(x: &Obj, flavor: &Flavor) -> TwoCell {
    let cat = flavor.cat();
    TwoCell::from_op(CellOp::Cap { r: Wire::r(x, &cat), l: Wire::l(x, &cat) }, units_for(flavor), &cat)
}

/// `hom_M → L_x ⊗ R_x`, sending `f` to the class of `(id, f ⊙ x)`.
pub fn unit(x: &Obj, flavor: &Flavor) -> TwoCell {
    let cat = flavor.cat();
    TwoCell::from_op(CellOp::Cup { l: Wire::l(x, &cat), r: Wire::r(x, &cat) }, units_for(flavor), &Cat::Base)
}

/// Post-composition by `o`, from `R_x ⊗ L_u` to `R_y ⊗ L_v`.
pub fn optic_to_2cell(o: &Optic) -> TwoCell {
    let cat = o.flavor.cat();
    let op = CellOp::Optic {
        o: o.clone(),
        inputs: [Wire::r(&o.x, &cat), Wire::l(&o.u, &cat)],
        outputs: [Wire::r(&o.y, &cat), Wire::l(&o.v, &cat)],
    };
    TwoCell::from_op(op, units_for(&o.flavor), &cat)
}

/// Apply `t : R_x ⊗ L_u → R_y ⊗ L_v` to the identity optic and read off a
/// representative.
pub fn reify_at(t: &TwoCell, x: &Obj, u: &Obj, y: &Obj, v: &Obj, flavor: &Flavor) -> Result<Optic> {
    let cat = flavor.cat();
    let i = Obj::unit();
    let raw_in = [Wire::r(x, &cat), Wire::l(u, &cat)];
    if flatten_all(&raw_in, t.units) != t.src {
        return Err(Error::NotOpticShaped(format!("source {} is not <{x},{u}>", show_wires(&t.src))));
    }
    let raw_out = [Wire::r(y, &cat), Wire::l(v, &cat)];
    if flatten_all(&raw_out, t.units) != t.tgt {
        return Err(Error::NotOpticShaped(format!("target {} is not <{y},{v}>", show_wires(&t.tgt))));
    }
    let gen = Chain::from_raw(&[x.clone(), i, u.clone()], &raw_in, &[st::lambda_inv(x)?, st::lambda(u)?], t.units)?;
    let out = t.apply(&gen)?;
    let (objs, comps) = out.fuse_range(0, &raw_out, t.units)?;
    Optic::new(&objs[1], comps[0].clone(), comps[1].clone(), flavor.clone())
}

/// Reify a 2-cell whose flattened boundaries are `R… L…`, reading the raw
/// boundary objects off the wire lists.
pub fn reify_optic(t: &TwoCell) -> Result<Optic> {
    let cat = t.src.iter().chain(&t.tgt).map(|w| w.cat.clone()).find(|c| !c.is_base()).unwrap_or(Cat::Base);
    let flavor = Flavor::of_cat(&cat);
    let (x, u) = split_boundary(&t.src)?;
    let (y, v) = split_boundary(&t.tgt)?;
    reify_at(t, &x, &u, &y, &v, &flavor)
}

/// The raw objects `(X, U)` of a flattened `R… L…` wire list.
pub fn split_boundary(ws: &[Wire]) -> Result<(Obj, Obj)> {
    let k = ws.iter().position(|w| w.dir == Dir::L).unwrap_or(ws.len());
    if ws[k..].iter().any(|w| w.dir == Dir::R) {
        return Err(Error::NotOpticShaped(format!("{} is not of the form R... L...", show_wires(ws))));
    }
    let mut x = Obj::unit();
    for (i, w) in ws[..k].iter().enumerate() {
        x = if i == 0 { w.obj.clone() } else { Obj::product(&w.obj, &x)? };
    }
    let mut u = Obj::unit();
    for (i, w) in ws[k..].iter().rev().enumerate() {
        u = if i == 0 { w.obj.clone() } else { Obj::product(&w.obj, &u)? };
    }
    Ok((x, u))
}

/// Whether every flattened wire of `w` survives (used to size a step's input).
pub fn flat_len(w: &Wire, units: Units) -> usize {
    flatten(w, units).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optic::{adapter, from_lens, identity_optic, to_lens, Lens};

    fn b() -> Obj {
        Obj::atoms("B", &["0", "1"]).unwrap()
    }

    #[test]
    fn counit_on_the_identity_optic() {
        let c = Chain::from_raw(
            &[b(), Obj::unit(), b()],
            &[Wire::r(&b(), &Cat::Base), Wire::l(&b(), &Cat::Base)],
            &[st::lambda_inv(&b()).unwrap(), st::lambda(&b()).unwrap()],
            Units::Drop,
        )
        .unwrap();
        let out = counit(&b(), &Flavor::Cartesian).apply(&c).unwrap();
        assert!(out.is_hom());
        assert_eq!(out.comps()[0], Morphism::id(&b()));
    }

    #[test]
    fn reify_inverts_optic_to_2cell() {
        let not = Morphism::new(b(), b(), Cat::Base, vec![1, 0]).unwrap();
        let o = adapter(&not, &Morphism::id(&b())).unwrap();
        let r = reify_optic(&optic_to_2cell(&o)).unwrap();
        assert_eq!(to_lens(&r).unwrap(), to_lens(&o).unwrap());
        let id = identity_optic(&b(), &b(), Flavor::Cartesian).unwrap();
        let l = Lens::new(Morphism::id(&b()), st::fst(&b(), &b()).unwrap()).unwrap();
        let o2 = from_lens(&l).unwrap();
        let t = optic_to_2cell(&id).hcomp(&optic_to_2cell(&o2)).unwrap();
        assert_eq!(to_lens(&reify_optic(&t).unwrap()).unwrap(), l);
    }

    #[test]
    fn snake_on_the_generic_element() {
        // (cup below R_x) then (cap on top): R_x → R_x ⊗ L_x ⊗ R_x → R_x
        let cat = Cat::Base;
        let x = b();
        let mut t = TwoCell::identity(&[Wire::r(&x, &cat)], Units::Drop, &cat);
        t.push(1, CellOp::Cup { l: Wire::l(&x, &cat), r: Wire::r(&x, &cat) }).unwrap();
        t.push(0, CellOp::Cap { r: Wire::r(&x, &cat), l: Wire::l(&x, &cat) }).unwrap();
        let g = t.generic().unwrap().unwrap();
        let out = t.apply(&g).unwrap();
        assert_eq!(out.comps(), g.comps());
    }
}
