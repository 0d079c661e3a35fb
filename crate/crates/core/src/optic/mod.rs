//! Optics as representatives `⟨α|β⟩_m` of coend classes, and the lens shapes.

mod classes;

pub use classes::{count_classes, default_residual_bound, residual_set, zigzag_equal, ZigzagVerdict};

use std::fmt;

use crate::error::{mismatch, Error, Result};
use crate::fincat::{structure as st, Cat, Monad, Morphism, Obj};

/// Cartesian optics live over `Base`; mixed ones over a Kleisli category with
/// `Base` acting.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Cartesian,
    Mixed(Monad),
}

impl Flavor {
    pub fn cat(&self) -> Cat {
        match self {
            Flavor::Cartesian => Cat::Base,
            Flavor::Mixed(t) => Cat::Kleisli(t.clone()),
        }
    }

    pub fn of_cat(cat: &Cat) -> Flavor {
        match cat {
            Cat::Base => Flavor::Cartesian,
            Cat::Kleisli(t) => Flavor::Mixed(t.clone()),
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::Cartesian => f.write_str("Cartesian"),
            Flavor::Mixed(t) => write!(f, "Mixed({t})"),
        }
    }
}

/// A representative `⟨α|β⟩_m : ⟨x,u⟩ → ⟨y,v⟩`.
#[derive(Clone, Debug)]
pub struct Optic {
    pub x: Obj,
    pub u: Obj,
    pub y: Obj,
    pub v: Obj,
    pub m: Obj,
    pub alpha: Morphism,
    pub beta: Morphism,
    pub flavor: Flavor,
}

/// `get : x → y`, `put : x × v → u`; `put` is Kleisli for monadic lenses.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lens {
    pub get: Morphism,
    pub put: Morphism,
}

fn split_product(o: &Obj, first: &Obj, what: &str) -> Result<Obj> {
    match o.factors() {
        Some((a, b)) if a == first => Ok(b.clone()),
        _ => Err(mismatch(format!("{what}: expected {o} to be {first} times something"))),
    }
}

impl Optic {
    /// Build from `α : x → m × y` and `β : m × v → u`, inferring the boundary.
    pub fn new(m: &Obj, alpha: Morphism, beta: Morphism, flavor: Flavor) -> Result<Optic> {
        let cat = flavor.cat();
        let alpha = alpha.lift_to(&cat)?;
        let beta = beta.lift_to(&cat)?;
        let y = split_product(alpha.tgt(), m, "alpha target")?;
        let v = split_product(beta.src(), m, "beta source")?;
        Ok(Optic { x: alpha.src().clone(), u: beta.tgt().clone(), y, v, m: m.clone(), alpha, beta, flavor })
    }

    pub fn boundary(&self) -> (Obj, Obj, Obj, Obj) {
        (self.x.clone(), self.u.clone(), self.y.clone(), self.v.clone())
    }

    pub fn same_boundary(&self, o: &Optic) -> bool {
        self.x == o.x && self.u == o.u && self.y == o.y && self.v == o.v && self.flavor == o.flavor
    }

    pub fn describe(&self) -> String {
        format!(
            "residual {}\n  alpha : {} -> {} = {}\n  beta  : {} -> {} = {}",
            self.m,
            self.alpha.src(),
            self.alpha.tgt(),
            self.alpha.show_table(),
            self.beta.src(),
            self.beta.tgt(),
            self.beta.show_table()
        )
    }
}

/// `⟨λ⁻¹_x | λ_u⟩_I`.
pub fn identity_optic(x: &Obj, u: &Obj, flavor: Flavor) -> Result<Optic> {
    Optic::new(&Obj::unit(), st::lambda_inv(x)?, st::lambda(u)?, flavor)
}

/// `⟨f ⨾ λ⁻¹_y | λ_v ⨾ g⟩_I` for `f : x → y`, `g : v → u`.
pub fn adapter(f: &Morphism, g: &Morphism) -> Result<Optic> {
    let flavor = match (f.cat(), g.cat()) {
        (Cat::Base, Cat::Base) => Flavor::Cartesian,
        (Cat::Kleisli(t), Cat::Base) | (Cat::Base, Cat::Kleisli(t)) => Flavor::Mixed(t.clone()),
        (Cat::Kleisli(t), Cat::Kleisli(t2)) if t == t2 => Flavor::Mixed(t.clone()),
        _ => return Err(mismatch("adapter across different monads")),
    };
    let alpha = f.then(&st::lambda_inv(f.tgt())?)?;
    let beta = st::lambda(g.src())?.then(g)?;
    Optic::new(&Obj::unit(), alpha, beta, flavor)
}

/// Sequential composite `o1 ⨾ o2` with residual `m1 × m2`.
pub fn compose_optics(o1: &Optic, o2: &Optic) -> Result<Optic> {
    if o1.y != o2.x || o1.v != o2.u || o1.flavor != o2.flavor {
        return Err(mismatch(format!(
            "cannot compose optics <{},{}> -> <{},{}> and <{},{}> -> <{},{}>",
            o1.x, o1.u, o1.y, o1.v, o2.x, o2.u, o2.y, o2.v
        )));
    }
    let (m1, m2) = (&o1.m, &o2.m);
    let alpha = o1.alpha.then(&st::act(m1, &o2.alpha)?)?.then(&st::assoc_inv(m1, m2, &o2.y)?)?;
    let beta = st::assoc(m1, m2, &o2.v)?.then(&st::act(m1, &o2.beta)?)?.then(&o1.beta)?;
    Optic::new(&Obj::product(m1, m2)?, alpha, beta, o1.flavor.clone())
}

/// `get = α ⨾ π_y`, `put(e, e') = β(π_m(α e), e')`.
pub fn to_lens(o: &Optic) -> Result<Lens> {
    if o.flavor != Flavor::Cartesian {
        return Err(mismatch("to_lens needs a cartesian optic"));
    }
    let get = o.alpha.then(&st::snd(&o.m, &o.y)?)?;
    let (ny, nv) = (o.y.card() as u32, o.v.card() as u32);
    let xv = Obj::product(&o.x, &o.v)?;
    let put = Morphism::new(
        xv,
        o.u.clone(),
        Cat::Base,
        (0..(o.x.card() as u32 * nv))
            .map(|i| {
                let (e, e2) = (i / nv, i % nv);
                let mres = o.alpha.apply(e) / ny;
                o.beta.apply(mres * nv + e2)
            })
            .collect(),
    )?;
    Ok(Lens { get, put })
}

/// Residual `x`, `α = Δ ⨾ (id × get)`, `β = put`. A Kleisli `put` gives a
/// mixed optic with the forward part lifted purely.
pub fn from_lens(l: &Lens) -> Result<Optic> {
    let x = l.get.src();
    if !l.get.cat().is_base() {
        return Err(mismatch("a lens needs a pure get"));
    }
    let alpha = st::diag(x)?.then(&st::act(x, &l.get)?)?;
    Optic::new(x, alpha, l.put.clone(), Flavor::of_cat(l.put.cat()))
}

/// Extract `(get, put)` from a mixed optic whose forward part is pure.
pub fn to_mlens(o: &Optic) -> Result<Lens> {
    let Flavor::Mixed(t) = &o.flavor else {
        return Err(mismatch("to_mlens needs a mixed optic"));
    };
    let cand = o.alpha.then(&st::snd(&o.m, &o.y)?)?;
    let Some(get) = cand.as_pure() else {
        return Err(Error::NotRepresentable(format!("forward map {} is not pure", cand.show_table())));
    };
    let (nm, ny, nv, nu) = (o.m.card(), o.y.card(), o.v.card() as u32, o.u.card());
    let nmy = nm * ny;
    let xv = Obj::product(&o.x, &o.v)?;
    let table = (0..(o.x.card() as u32 * nv))
        .map(|i| {
            let (e, e2) = (i / nv, i % nv);
            t.bind(nmy, nu, o.alpha.apply(e), |my| o.beta.apply((my / ny as u32) * nv + e2))
        })
        .collect();
    let put = Morphism::new(xv, o.u.clone(), o.flavor.cat(), table)?;
    Ok(Lens { get, put })
}

impl Lens {
    pub fn new(get: Morphism, put: Morphism) -> Result<Lens> {
        let x = get.src();
        match put.src().factors() {
            Some((a, _)) if a == x => {}
            _ => return Err(mismatch(format!("put source {} must be {x} times the view-update type", put.src()))),
        }
        if !get.cat().is_base() {
            return Err(mismatch("get must be pure"));
        }
        Ok(Lens { get, put })
    }

    pub fn x(&self) -> &Obj {
        self.get.src()
    }

    pub fn y(&self) -> &Obj {
        self.get.tgt()
    }

    pub fn v(&self) -> &Obj {
        self.put.src().factors().expect("put source is a product").1
    }

    pub fn u(&self) -> &Obj {
        self.put.tgt()
    }

    pub fn monad(&self) -> Option<&Monad> {
        self.put.cat().monad()
    }

    /// Direct sequential composite: `get = get₁ ⨾ get₂`,
    /// `put(e, w) = put₂(get₁ e, w) >>= λv. put₁(e, v)`.
    pub fn then(&self, l2: &Lens) -> Result<Lens> {
        if self.y() != l2.x() || self.v() != l2.u() || self.put.cat() != l2.put.cat() {
            return Err(mismatch("lens boundaries do not match"));
        }
        let get = self.get.then(&l2.get)?;
        let nw = l2.v().card() as u32;
        let nv = self.v().card() as u32;
        let nu = self.u().card();
        let table = (0..(self.x().card() as u32 * nw))
            .map(|i| {
                let (e, w) = (i / nw, i % nw);
                let inner = l2.put.apply(self.get.apply(e) * nw + w);
                match self.put.cat() {
                    Cat::Base => self.put.apply(e * nv + inner),
                    Cat::Kleisli(t) => t.bind(nv as usize, nu, inner, |v| self.put.apply(e * nv + v)),
                }
            })
            .collect();
        let put = Morphism::new(Obj::product(self.x(), l2.v())?, self.u().clone(), self.put.cat().clone(), table)?;
        Ok(Lens { get, put })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Obj {
        Obj::atoms("B", &["0", "1"]).unwrap()
    }

    fn base(src: &Obj, tgt: &Obj, t: Vec<u32>) -> Morphism {
        Morphism::new(src.clone(), tgt.clone(), Cat::Base, t).unwrap()
    }

    #[test]
    fn identity_optic_alpha() {
        let o = identity_optic(&b(), &b(), Flavor::Cartesian).unwrap();
        assert_eq!(o.alpha.tgt().elem(o.alpha.apply(0)).to_string(), "(*,0)");
        let l = to_lens(&o).unwrap();
        assert_eq!(l.get, Morphism::id(&b()));
        assert_eq!(l.put, st::snd(&b(), &b()).unwrap());
    }

    #[test]
    fn adapter_extracts_to_f_and_snd_then_g() {
        let not = base(&b(), &b(), vec![1, 0]);
        let c0 = base(&b(), &b(), vec![0, 0]);
        let l = to_lens(&adapter(&not, &c0).unwrap()).unwrap();
        assert_eq!(l.get, not);
        assert_eq!(l.put, st::snd(&b(), &b()).unwrap().then(&c0).unwrap());
    }

    #[test]
    fn tuple_snd_from_lens() {
        let p = Obj::product(&b(), &b()).unwrap();
        let get = st::snd(&b(), &b()).unwrap();
        // put((a,_), c) = (a, c)
        let pb = Obj::product(&p, &b()).unwrap();
        let put = Morphism::new(pb, p.clone(), Cat::Base, (0..8).map(|i| (i / 4) * 2 + i % 2).collect()).unwrap();
        let o = from_lens(&Lens::new(get, put).unwrap()).unwrap();
        assert_eq!(o.m, p);
        let e = p.index_of(&p.elems()[1]).unwrap();
        assert_eq!(o.alpha.tgt().elem(o.alpha.apply(e)).to_string(), "((0,1),1)");
    }

    #[test]
    fn to_mlens_rejects_effectful_forward() {
        let t = Monad::maybe("Maybe");
        let cat = Cat::Kleisli(t.clone());
        let ib = Obj::product(&Obj::unit(), &b()).unwrap();
        let alpha = Morphism::new(b(), ib.clone(), cat.clone(), vec![0, 0]).unwrap();
        let beta = Morphism::new(ib, b(), cat, vec![1, 2]).unwrap();
        let o = Optic::new(&Obj::unit(), alpha, beta, Flavor::Mixed(t)).unwrap();
        assert!(matches!(to_mlens(&o), Err(Error::NotRepresentable(_))));
    }
}
