use opticforge::fincat::{enumerate_homs, structure, Cat, HomSet, Monad, Morphism, Obj};
use proptest::prelude::*;

fn b() -> Obj {
    Obj::atoms("B", &["0", "1"]).unwrap()
}

fn small_objects() -> Vec<Obj> {
    vec![Obj::skeletal(0).unwrap(), Obj::unit(), b(), Obj::skeletal(3).unwrap()]
}

fn monads() -> Vec<Monad> {
    let w = Obj::atoms("W", &["e", "a", "b"]).unwrap();
    // a non-commutative monoid: left-zero semigroup {a, b} with a unit adjoined
    let mul = vec![0, 1, 2, 1, 1, 1, 2, 2, 2];
    vec![
        Monad::identity("Id"),
        Monad::maybe("Maybe"),
        Monad::writer("Wr", w, mul, 0).unwrap(),
        Monad::state("St", Obj::atoms("S", &["s0", "s1"]).unwrap()).unwrap(),
    ]
}

#[test]
fn category_laws_exhaustive_up_to_card_three() {
    let objs = small_objects();
    for a in &objs {
        for c in &objs {
            let fs = enumerate_homs(&Cat::Base, a, c).unwrap();
            for f in &fs {
                assert_eq!(&Morphism::id(a).then(f).unwrap(), f);
                assert_eq!(&f.then(&Morphism::id(c)).unwrap(), f);
            }
        }
    }
    // associativity over a chain of card <= 3 objects
    let (x, y, z, w) = (b(), Obj::skeletal(3).unwrap(), b(), Obj::unit());
    for f in enumerate_homs(&Cat::Base, &x, &y).unwrap() {
        for g in enumerate_homs(&Cat::Base, &y, &z).unwrap() {
            for h in enumerate_homs(&Cat::Base, &z, &w).unwrap() {
                let l = f.then(&g).unwrap().then(&h).unwrap();
                let r = f.then(&g.then(&h).unwrap()).unwrap();
                assert_eq!(l, r);
            }
        }
    }
}

#[test]
fn kleisli_category_laws_and_lifting() {
    for t in monads() {
        let cat = Cat::Kleisli(t.clone());
        let a = Obj::unit();
        let bb = b();
        let fs = enumerate_homs(&cat, &a, &bb).unwrap();
        let gs: Vec<Morphism> = if t.size(2) <= 4 {
            enumerate_homs(&cat, &bb, &bb).unwrap()
        } else {
            HomSet::new(&cat, &bb, &bb).unwrap().iter().step_by(7).collect()
        };
        let hs: Vec<Morphism> = gs.iter().step_by(3).cloned().collect();
        for f in &fs {
            let id_a = Morphism::id(&a).pure_lift(&t);
            assert_eq!(&id_a.then(f).unwrap(), f, "{t}");
            assert_eq!(&f.then(&Morphism::id(&bb).pure_lift(&t)).unwrap(), f, "{t}");
            for g in &gs {
                for h in &hs {
                    let l = f.then(g).unwrap().then(h).unwrap();
                    let r = f.then(&g.then(h).unwrap()).unwrap();
                    assert_eq!(l, r, "{t}");
                }
            }
        }
        // functoriality of the pure lift
        for f in enumerate_homs(&Cat::Base, &bb, &bb).unwrap() {
            for g in enumerate_homs(&Cat::Base, &bb, &bb).unwrap() {
                assert_eq!(f.then(&g).unwrap().pure_lift(&t), f.pure_lift(&t).then(&g.pure_lift(&t)).unwrap());
            }
        }
    }
}

#[test]
fn monad_unit_laws_exhaustive() {
    for t in monads() {
        for n in 0..=3usize {
            let size = t.size(n) as u32;
            for v in 0..size {
                // bind(v, unit) = v
                assert_eq!(t.bind(n, n, v, |i| t.unit(n, i)), v, "{t} n={n}");
            }
            for i in 0..n as u32 {
                for k in 0..size {
                    // bind(unit(i), const k) = k
                    assert_eq!(t.bind(n, n, t.unit(n, i), |_| k), k, "{t}");
                }
            }
        }
    }
}

#[test]
fn monad_bind_associative_on_card_two() {
    for t in monads() {
        let n = 2usize;
        let size = t.size(n) as u32;
        let ks: Vec<[u32; 2]> = (0..size).flat_map(|p| (0..size).map(move |q| [p, q])).collect();
        let step = (ks.len() / 40).max(1);
        for v in 0..size {
            for f in ks.iter().step_by(step) {
                for g in ks.iter().step_by(step) {
                    let l = t.bind(n, n, t.bind(n, n, v, |i| f[i as usize]), |i| g[i as usize]);
                    let r = t.bind(n, n, v, |i| t.bind(n, n, f[i as usize], |j| g[j as usize]));
                    assert_eq!(l, r, "{t}");
                }
            }
        }
    }
}

#[test]
fn strength_coherence() {
    for t in monads() {
        for (na, nb) in [(1usize, 2usize), (2, 2), (3, 1), (2, 3)] {
            let size = t.size(nb) as u32;
            for a in 0..na as u32 {
                for v in 0..size {
                    // strength at the unit object is the left unitor (indices agree)
                    if na == 1 {
                        assert_eq!(t.strength(1, nb, 0, v), v);
                    }
                    // strength of a unit is a unit
                    if v < nb as u32 {
                        let u = t.unit(nb, v);
                        assert_eq!(t.strength(na, nb, a, u), t.unit(na * nb, a * nb as u32 + v));
                    }
                    // strength commutes with bind
                    let k = |j: u32| if j.is_multiple_of(2) { t.unit(nb, (j + 1) % nb as u32) } else { v };
                    let l = t.strength(na, nb, a, t.bind(nb, nb, v, k));
                    let r = t.bind(nb, na * nb, v, |j| t.strength(na, nb, a, k(j)));
                    assert_eq!(l, r, "{t}");
                }
            }
            // associativity of strength: st_{a×b,c}((a,b),t) = st_{a,b×c}(a, st_{b,c}(b,t))
            let nc = 2usize;
            for a in 0..na as u32 {
                for bi in 0..nb as u32 {
                    for v in 0..t.size(nc) as u32 {
                        let l = t.strength(na * nb, nc, a * nb as u32 + bi, v);
                        let r = t.strength(na, nb * nc, a, t.strength(nb, nc, bi, v));
                        assert_eq!(l, r, "{t}");
                    }
                }
            }
        }
    }
}

#[test]
fn structure_maps_are_coherent_bijections() {
    let objs = [Obj::unit(), b()];
    for m in &objs {
        for n in &objs {
            for x in &objs {
                let s = structure::act_structure_maps(m, n, x).unwrap();
                assert!(s.assoc.is_iso() && s.lambda.is_iso() && s.rho.is_iso());
                assert_eq!(s.assoc.then(&s.assoc_inv).unwrap(), Morphism::id(s.assoc.src()));
                assert_eq!(s.lambda.then(&s.lambda_inv).unwrap(), Morphism::id(s.lambda.src()));
                // triangle: a_{m,I,x} ⨾ (m ⊙ λ_x) = ρ_m ⊙ x
                let lhs = structure::assoc(m, &Obj::unit(), x)
                    .unwrap()
                    .then(&structure::act(m, &structure::lambda(x).unwrap()).unwrap())
                    .unwrap();
                let rhs = structure::act_right(&structure::rho(m).unwrap(), x).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
    // pentagon on a sample quadruple
    let (p, q, r, s) = (b(), Obj::unit(), Obj::skeletal(3).unwrap(), b());
    let pq = Obj::product(&p, &q).unwrap();
    let rs = Obj::product(&r, &s).unwrap();
    let lhs = structure::assoc(&pq, &r, &s).unwrap().then(&structure::assoc(&p, &q, &rs).unwrap()).unwrap();
    let qr = Obj::product(&q, &r).unwrap();
    let rhs = structure::act_right(&structure::assoc(&p, &q, &r).unwrap(), &s)
        .unwrap()
        .then(&structure::assoc(&p, &qr, &s).unwrap())
        .unwrap()
        .then(&structure::act(&p, &structure::assoc(&q, &r, &s).unwrap()).unwrap())
        .unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn snd_then_not_on_pairs() {
    let p = Obj::product(&b(), &b()).unwrap();
    let not = Morphism::new(b(), b(), Cat::Base, vec![1, 0]).unwrap();
    let snd_get = structure::snd(&b(), &b()).unwrap();
    let f = snd_get.then(&not).unwrap();
    let e = p.elems().iter().position(|e| e.to_string() == "(0,1)").unwrap() as u32;
    assert_eq!(f.tgt().elem(f.apply(e)).to_string(), "0");
}

proptest! {
    #[test]
    fn random_composites_associate(f in prop::collection::vec(0u32..3, 4),
                                   g in prop::collection::vec(0u32..4, 3),
                                   h in prop::collection::vec(0u32..2, 4)) {
        let four = Obj::skeletal(4).unwrap();
        let three = Obj::skeletal(3).unwrap();
        let f = Morphism::new(four.clone(), three.clone(), Cat::Base, f).unwrap();
        let g = Morphism::new(three, four.clone(), Cat::Base, g).unwrap();
        let h = Morphism::new(four, b(), Cat::Base, h).unwrap();
        prop_assert_eq!(f.then(&g).unwrap().then(&h).unwrap(), f.then(&g.then(&h).unwrap()).unwrap());
    }

    #[test]
    fn maybe_lift_is_functorial(f in prop::collection::vec(0u32..3, 3), g in prop::collection::vec(0u32..2, 3)) {
        let t = Monad::maybe("Maybe");
        let three = Obj::skeletal(3).unwrap();
        let f = Morphism::new(three.clone(), three.clone(), Cat::Base, f).unwrap();
        let g = Morphism::new(three, b(), Cat::Base, g).unwrap();
        prop_assert_eq!(f.then(&g).unwrap().pure_lift(&t), f.pure_lift(&t).then(&g.pure_lift(&t)).unwrap());
    }
}
