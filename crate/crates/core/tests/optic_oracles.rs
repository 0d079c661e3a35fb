use opticforge::fincat::{enumerate_homs, structure as st, Cat, Monad, Morphism, Obj};
use opticforge::optic::{
    adapter, compose_optics, count_classes, from_lens, identity_optic, to_lens, to_mlens, zigzag_equal, Flavor, Lens,
    Optic, ZigzagVerdict,
};

fn b() -> Obj {
    Obj::atoms("B", &["0", "1"]).unwrap()
}

fn not() -> Morphism {
    Morphism::new(b(), b(), Cat::Base, vec![1, 0]).unwrap()
}

fn all_lenses(x: &Obj, y: &Obj, u: &Obj, v: &Obj) -> Vec<Lens> {
    let xv = Obj::product(x, v).unwrap();
    let mut out = Vec::new();
    for g in enumerate_homs(&Cat::Base, x, y).unwrap() {
        for p in enumerate_homs(&Cat::Base, &xv, u).unwrap() {
            out.push(Lens::new(g.clone(), p).unwrap());
        }
    }
    out
}

fn small() -> Vec<Obj> {
    vec![Obj::skeletal(0).unwrap(), Obj::unit(), b()]
}

#[test]
fn lens_roundtrip_and_counts_up_to_card_two() {
    for x in small() {
        for u in small() {
            for y in small() {
                for v in small() {
                    let lenses = all_lenses(&x, &y, &u, &v);
                    for l in &lenses {
                        assert_eq!(&to_lens(&from_lens(l).unwrap()).unwrap(), l);
                    }
                    let bound = x.card().max(1);
                    let n = count_classes(&x, &u, &y, &v, &Flavor::Cartesian, bound).unwrap();
                    assert_eq!(n, lenses.len(), "({x},{u}) -> ({y},{v})");
                }
            }
        }
    }
}

#[test]
fn roundtrip_at_card_three() {
    let three = Obj::skeletal(3).unwrap();
    let i = Obj::unit();
    for l in all_lenses(&three, &b(), &i, &i).iter().chain(all_lenses(&b(), &three, &b(), &i).iter()) {
        assert_eq!(&to_lens(&from_lens(l).unwrap()).unwrap(), l);
    }
}

#[test]
fn zigzag_agrees_with_canonical_forms() {
    let lenses = all_lenses(&b(), &b(), &b(), &b());
    // use a second, padded representative of each class on one side
    let padded: Vec<Optic> = lenses
        .iter()
        .map(|l| {
            let o = from_lens(l).unwrap();
            let m2 = Obj::product(&o.m, &Obj::unit()).unwrap();
            let alpha = o.alpha.then(&st::act_right(&st::rho_inv(&o.m).unwrap(), &b()).unwrap()).unwrap();
            let beta = st::act_right(&st::rho(&o.m).unwrap(), &b()).unwrap().then(&o.beta).unwrap();
            Optic::new(&m2, alpha, beta, Flavor::Cartesian).unwrap()
        })
        .collect();
    let plain: Vec<Optic> = lenses.iter().map(|l| from_lens(l).unwrap()).collect();
    for (i, o1) in padded.iter().enumerate() {
        for (j, o2) in plain.iter().enumerate() {
            let z = zigzag_equal(o1, o2, 2).unwrap();
            assert_eq!(z == ZigzagVerdict::Equal, i == j, "{i} {j}");
        }
    }
}

#[test]
fn identity_and_adapters() {
    let id = identity_optic(&b(), &b(), Flavor::Cartesian).unwrap();
    let nn = adapter(&not(), &not()).unwrap();
    let twice = compose_optics(&nn, &nn).unwrap();
    assert_eq!(zigzag_equal(&twice, &id, 2).unwrap(), ZigzagVerdict::Equal);
    let n1 = adapter(&not(), &Morphism::id(&b())).unwrap();
    let a1 = adapter(&Morphism::id(&b()), &Morphism::id(&b())).unwrap();
    assert_eq!(zigzag_equal(&n1, &a1, 2).unwrap(), ZigzagVerdict::DistinctWithinBound);
    let l = Lens::new(Morphism::id(&b()), st::snd(&b(), &b()).unwrap()).unwrap();
    assert_eq!(zigzag_equal(&from_lens(&l).unwrap(), &id, 2).unwrap(), ZigzagVerdict::Equal);
}

#[test]
fn composition_is_associative_and_unital_on_lenses() {
    let lenses = all_lenses(&b(), &b(), &b(), &b());
    let id = identity_optic(&b(), &b(), Flavor::Cartesian).unwrap();
    for (i, l1) in lenses.iter().enumerate() {
        let o1 = from_lens(l1).unwrap();
        assert_eq!(to_lens(&compose_optics(&o1, &id).unwrap()).unwrap(), *l1);
        assert_eq!(to_lens(&compose_optics(&id, &o1).unwrap()).unwrap(), *l1);
        for l2 in lenses.iter().skip(i % 7).step_by(7) {
            let o2 = from_lens(l2).unwrap();
            let direct = l1.then(l2).unwrap();
            assert_eq!(to_lens(&compose_optics(&o1, &o2).unwrap()).unwrap(), direct);
            let o3 = from_lens(&lenses[(i * 13) % 64]).unwrap();
            let left = compose_optics(&compose_optics(&o1, &o2).unwrap(), &o3).unwrap();
            let right = compose_optics(&o1, &compose_optics(&o2, &o3).unwrap()).unwrap();
            assert_eq!(to_lens(&left).unwrap(), to_lens(&right).unwrap());
        }
    }
}

#[test]
fn snd_lens_then_not_adapter() {
    let p = Obj::product(&b(), &b()).unwrap();
    let get = st::snd(&b(), &b()).unwrap();
    let pb = Obj::product(&p, &b()).unwrap();
    let put = Morphism::new(pb, p.clone(), Cat::Base, (0..8).map(|i| (i / 4) * 2 + i % 2).collect()).unwrap();
    let o = from_lens(&Lens::new(get.clone(), put).unwrap()).unwrap();
    let c = compose_optics(&o, &adapter(&not(), &not()).unwrap()).unwrap();
    assert_eq!(to_lens(&c).unwrap().get, get.then(&not()).unwrap());
}

#[test]
fn mixed_lens_roundtrip_under_maybe() {
    let t = Monad::maybe("Maybe");
    let cat = Cat::Kleisli(t.clone());
    let bb = Obj::product(&b(), &b()).unwrap();
    for g in enumerate_homs(&Cat::Base, &b(), &b()).unwrap() {
        for p in enumerate_homs(&cat, &bb, &b()).unwrap() {
            let l = Lens::new(g.clone(), p).unwrap();
            assert_eq!(to_mlens(&from_lens(&l).unwrap()).unwrap(), l);
        }
    }
}

#[test]
fn arrows_into_unit_updates_are_get_maps_up_to_card_three() {
    let i = Obj::unit();
    let objs = [Obj::unit(), b(), Obj::skeletal(3).unwrap()];
    for x in &objs {
        for y in &objs {
            let n = count_classes(x, &i, y, &i, &Flavor::Cartesian, x.card()).unwrap();
            assert_eq!(n, y.card().pow(x.card() as u32));
        }
    }
}
