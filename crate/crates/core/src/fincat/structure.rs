//! Cartesian actegory structure on finite sets. With lexicographic pair order the
//! unitors and associators are identities on element indices.

use super::morphism::{Cat, Morphism};
use super::object::Obj;
use crate::error::{mismatch, Result};

fn reindex(src: &Obj, tgt: &Obj) -> Morphism {
    Morphism::tabulate(src, tgt, Cat::Base, |i| i)
}

/// `λ_x : I × x → x`
pub fn lambda(x: &Obj) -> Result<Morphism> {
    Ok(reindex(&Obj::product(&Obj::unit(), x)?, x))
}

pub fn lambda_inv(x: &Obj) -> Result<Morphism> {
    Ok(reindex(x, &Obj::product(&Obj::unit(), x)?))
}

/// `ρ_x : x × I → x`
pub fn rho(x: &Obj) -> Result<Morphism> {
    Ok(reindex(&Obj::product(x, &Obj::unit())?, x))
}

pub fn rho_inv(x: &Obj) -> Result<Morphism> {
    Ok(reindex(x, &Obj::product(x, &Obj::unit())?))
}

/// `a_{m,n,x} : (m × n) × x → m × (n × x)`
pub fn assoc(m: &Obj, n: &Obj, x: &Obj) -> Result<Morphism> {
    let l = Obj::product(&Obj::product(m, n)?, x)?;
    let r = Obj::product(m, &Obj::product(n, x)?)?;
    Ok(reindex(&l, &r))
}

pub fn assoc_inv(m: &Obj, n: &Obj, x: &Obj) -> Result<Morphism> {
    let l = Obj::product(&Obj::product(m, n)?, x)?;
    let r = Obj::product(m, &Obj::product(n, x)?)?;
    Ok(reindex(&r, &l))
}

/// `σ_{a,b} : a × b → b × a`
pub fn swap(a: &Obj, b: &Obj) -> Result<Morphism> {
    let (na, nb) = (a.card() as u32, b.card() as u32);
    Ok(Morphism::tabulate(&Obj::product(a, b)?, &Obj::product(b, a)?, Cat::Base, |i| (i % nb) * na + i / nb))
}

/// `Δ_x : x → x × x`
pub fn diag(x: &Obj) -> Result<Morphism> {
    let n = x.card() as u32;
    Ok(Morphism::tabulate(x, &Obj::product(x, x)?, Cat::Base, |i| i * n + i))
}

/// `!_x : x → I`
pub fn bang(x: &Obj) -> Morphism {
    Morphism::tabulate(x, &Obj::unit(), Cat::Base, |_| 0)
}

pub fn fst(a: &Obj, b: &Obj) -> Result<Morphism> {
    let nb = b.card() as u32;
    Ok(Morphism::tabulate(&Obj::product(a, b)?, a, Cat::Base, |i| i / nb))
}

pub fn snd(a: &Obj, b: &Obj) -> Result<Morphism> {
    let nb = b.card() as u32;
    Ok(Morphism::tabulate(&Obj::product(a, b)?, b, Cat::Base, |i| i % nb))
}

/// `⟨f, g⟩ : a → b × c` for base morphisms.
pub fn pairing(f: &Morphism, g: &Morphism) -> Result<Morphism> {
    if f.src() != g.src() || !f.cat().is_base() || !g.cat().is_base() {
        return Err(mismatch(format!("cannot pair {f} and {g}")));
    }
    let nc = g.tgt().card() as u32;
    let tgt = Obj::product(f.tgt(), g.tgt())?;
    Ok(Morphism::tabulate(f.src(), &tgt, Cat::Base, |i| f.apply(i) * nc + g.apply(i)))
}

/// `f × g` for base morphisms.
pub fn times(f: &Morphism, g: &Morphism) -> Result<Morphism> {
    if !f.cat().is_base() || !g.cat().is_base() {
        return Err(mismatch(format!("product of effectful maps {f} and {g}")));
    }
    let src = Obj::product(f.src(), g.src())?;
    let tgt = Obj::product(f.tgt(), g.tgt())?;
    let (na2, nb2) = (g.src().card() as u32, g.tgt().card() as u32);
    Ok(Morphism::tabulate(&src, &tgt, Cat::Base, |i| f.apply(i / na2) * nb2 + g.apply(i % na2)))
}

/// `m ⊙ f = id_m × f`; effectful `f` goes through the strength.
pub fn act(m: &Obj, f: &Morphism) -> Result<Morphism> {
    let src = Obj::product(m, f.src())?;
    let tgt = Obj::product(m, f.tgt())?;
    let (na, nb) = (f.src().card() as u32, f.tgt().card());
    Ok(match f.cat() {
        Cat::Base => Morphism::tabulate(&src, &tgt, Cat::Base, |i| (i / na) * nb as u32 + f.apply(i % na)),
        Cat::Kleisli(t) => {
            let nm = m.card();
            Morphism::tabulate(&src, &tgt, f.cat().clone(), |i| t.strength(nm, nb, i / na, f.apply(i % na)))
        }
    })
}

/// `f × id_y`; effectful `f` goes through the right strength.
pub fn act_right(f: &Morphism, y: &Obj) -> Result<Morphism> {
    let src = Obj::product(f.src(), y)?;
    let tgt = Obj::product(f.tgt(), y)?;
    let ny = y.card() as u32;
    let nb = f.tgt().card();
    Ok(match f.cat() {
        Cat::Base => Morphism::tabulate(&src, &tgt, Cat::Base, |i| f.apply(i / ny) * ny + i % ny),
        Cat::Kleisli(t) => Morphism::tabulate(&src, &tgt, f.cat().clone(), |i| {
            let j = i % ny;
            t.fmap(nb, nb * ny as usize, |k| k * ny + j, f.apply(i / ny))
        }),
    })
}

/// The unitors and associator at a triple, with inverses.
#[derive(Clone, Debug)]
pub struct ActStructure {
    pub lambda: Morphism,
    pub lambda_inv: Morphism,
    pub rho: Morphism,
    pub rho_inv: Morphism,
    pub assoc: Morphism,
    pub assoc_inv: Morphism,
}

pub fn act_structure_maps(m: &Obj, n: &Obj, x: &Obj) -> Result<ActStructure> {
    Ok(ActStructure {
        lambda: lambda(x)?,
        lambda_inv: lambda_inv(x)?,
        rho: rho(x)?,
        rho_inv: rho_inv(x)?,
        assoc: assoc(m, n, x)?,
        assoc_inv: assoc_inv(m, n, x)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Obj {
        Obj::atoms("B", &["0", "1"]).unwrap()
    }

    fn show(f: &Morphism) -> String {
        f.show_table()
    }

    #[test]
    fn lambda_on_b() {
        assert_eq!(show(&lambda(&b()).unwrap()), "{(*,0)->0, (*,1)->1}");
    }

    #[test]
    fn assoc_reassociates_pairs() {
        let a = assoc(&b(), &Obj::unit(), &b()).unwrap();
        let src = a.src().clone();
        let e = src.elems().iter().position(|e| e.to_string() == "((0,*),1)").unwrap() as u32;
        assert_eq!(a.tgt().elem(a.apply(e)).to_string(), "(0,(*,1))");
    }

    #[test]
    fn rho_and_lambda_agree_at_unit() {
        let i = Obj::unit();
        assert_eq!(rho(&i).unwrap(), lambda(&i).unwrap());
    }

    #[test]
    fn diagonal_projections() {
        let d = diag(&b()).unwrap();
        assert_eq!(d.then(&fst(&b(), &b()).unwrap()).unwrap(), Morphism::id(&b()));
        assert_eq!(d.then(&snd(&b(), &b()).unwrap()).unwrap(), Morphism::id(&b()));
    }

    #[test]
    fn swap_is_involutive() {
        let three = Obj::skeletal(3).unwrap();
        let s = swap(&b(), &three).unwrap().then(&swap(&three, &b()).unwrap()).unwrap();
        assert_eq!(s, Morphism::id(&Obj::product(&b(), &three).unwrap()));
    }
}
