use autcurve::group::character::CharacterTable;
use autcurve::group::presented::CyclicCurveGroup;
use autcurve::group::{Catalog, FiniteGroup, Standard};
use autcurve::Error;
use num_integer::Integer;
use proptest::prelude::*;

fn build(s: Standard) -> FiniteGroup {
    s.build().unwrap()
}

fn axioms_hold(g: &FiniteGroup) -> bool {
    let e = g.identity();
    g.elements().all(|a| {
        g.mul(a, e) == a
            && g.mul(e, a) == a
            && g.mul(a, g.inv(a)) == e
            && g.elements().all(|b| g.elements().all(|c| g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))))
    })
}

fn class_sizes(g: &FiniteGroup) -> Vec<usize> {
    let mut s: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
    s.sort();
    s
}

#[test]
fn standard_constructions() {
    let c5 = build(Standard::Cyclic(5));
    assert_eq!(c5.order(), 5);
    assert_eq!(class_sizes(&c5), vec![1; 5]);

    let d12 = build(Standard::Dihedral(12));
    assert_eq!(d12.order(), 12);
    assert!(!d12.is_abelian());

    let m21 = build(Standard::Semidirect { n: 7, m: 3, k: 2 });
    assert_eq!(m21.order(), 21);
    assert!(!m21.is_abelian());
    assert!(!m21.is_isomorphic(&build(Standard::Cyclic(21))));
    assert!(matches!(Standard::Semidirect { n: 7, m: 3, k: 3 }.build(), Err(Error::Parameter(_))));
}

#[test]
fn cyclic_curve_group_cases() {
    let c12 = CyclicCurveGroup::Cyclic { m: 3, n: 4 }.construct().unwrap().group;
    assert!(c12.is_isomorphic(&build(Standard::Cyclic(12))));
    let g6 = CyclicCurveGroup::G6 { m: 3, n: 2 }.construct().unwrap().group;
    assert!(g6.is_isomorphic(&build(Standard::Dihedral(12))));
    let meta = CyclicCurveGroup::Metacyclic { n: 7, m: 3, l: 2 }.construct().unwrap().group;
    assert!(meta.is_isomorphic(&build(Standard::Semidirect { n: 7, m: 3, k: 2 })));
}

#[test]
fn conjugacy_classes() {
    assert_eq!(class_sizes(&build(Standard::Dihedral(6))), vec![1, 2, 3]);
    assert_eq!(build(Standard::Dihedral(8)).conjugacy_classes().len(), 5);
}

#[test]
fn automorphism_orders() {
    let aut = |s| build(s).automorphisms().unwrap().order();
    assert_eq!(aut(Standard::Cyclic(5)), 4);
    assert_eq!(aut(Standard::Cyclic(10)), 4);
    assert_eq!(aut(Standard::Abelian(vec![2, 2])), 6);
}

#[test]
fn automorphisms_of_cyclic_groups_are_units() {
    for n in 1..=50usize {
        let phi = (1..=n).filter(|k| k.gcd(&n) == 1).count();
        assert_eq!(build(Standard::Cyclic(n)).automorphisms().unwrap().order(), phi, "C{n}");
    }
}

#[test]
fn subgroup_lattices() {
    let orders =
        |s| -> Vec<usize> { build(s).subgroup_classes().unwrap().iter().map(|c| c.representative().len()).collect() };
    assert_eq!(orders(Standard::Cyclic(5)), vec![1, 5]);
    assert_eq!(orders(Standard::Cyclic(10)), vec![1, 2, 5, 10]);
    assert_eq!(orders(Standard::Dihedral(8)).len(), 8);
}

#[test]
fn isomorphism_tests() {
    assert!(!build(Standard::Cyclic(4)).is_isomorphic(&build(Standard::Abelian(vec![2, 2]))));
    assert!(!build(Standard::Dihedral(12)).is_isomorphic(&build(Standard::Abelian(vec![6, 2]))));
    assert!(build(Standard::Abelian(vec![2, 3])).is_isomorphic(&build(Standard::Cyclic(6))));
    assert!(build(Standard::Psl2(5)).is_isomorphic(&build(Standard::Alternating(5))));
}

#[test]
fn abelian_character_tables() {
    let c2 = CharacterTable::abelian(&build(Standard::Cyclic(2))).unwrap();
    let ring = c2.ring();
    let ints: Vec<Vec<i128>> =
        c2.characters.iter().map(|r| r.iter().map(|v| ring.as_integer(v).unwrap()).collect()).collect();
    assert_eq!(ints, vec![vec![1, 1], vec![1, -1]]);
    for s in [Standard::Cyclic(3), Standard::Abelian(vec![2, 2]), Standard::Abelian(vec![2, 6]), Standard::Cyclic(12)] {
        let g = build(s);
        let t = CharacterTable::abelian(&g).unwrap();
        t.validate(Some(&g)).unwrap();
        assert_eq!(t.characters.len(), g.order());
    }
    assert!(matches!(CharacterTable::abelian(&build(Standard::Symmetric(3))), Err(Error::Unsupported(_))));
}

#[test]
fn bundled_catalog() {
    let cat = Catalog::bundled();
    cat.validate().unwrap();
    assert!(cat.is_complete(6));
    assert_eq!(cat.of_order(6).count(), 2);
    assert!(cat.is_complete(21));
    assert_eq!(cat.of_order(21).count(), 2);
    for e in cat.entries().iter().filter(|e| e.group.order() <= 24) {
        assert!(axioms_hold(&e.group), "{}", e.label);
    }
    for e in cat.entries() {
        let sizes: usize = e.group.conjugacy_classes().iter().map(|c| c.len()).sum();
        assert_eq!(sizes, e.group.order());
        assert!(e.group.conjugacy_classes().iter().all(|c| e.group.order() % c.len() == 0));
    }
}

#[test]
fn bad_tables_are_rejected() {
    // non-associative: a quasigroup with identity 0
    let rows =
        vec![vec![0, 1, 2, 3, 4], vec![1, 0, 3, 4, 2], vec![2, 4, 0, 1, 3], vec![3, 2, 4, 0, 1], vec![4, 3, 1, 2, 0]];
    assert!(FiniteGroup::from_table(&rows).is_err());
    assert!(Catalog::parse("{\"order\":2,\"index\":1,\"label\":\"C2\"").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn isomorphism_is_an_equivalence(a in 0usize..6, b in 0usize..6, c in 0usize..6) {
        let pool = [
            Standard::Cyclic(12),
            Standard::Abelian(vec![2, 6]),
            Standard::Dihedral(12),
            Standard::Alternating(4),
            Standard::Dicyclic(12),
            Standard::Abelian(vec![4, 3]),
        ];
        let (x, y, z) = (build(pool[a].clone()), build(pool[b].clone()), build(pool[c].clone()));
        prop_assert!(x.is_isomorphic(&x));
        prop_assert_eq!(x.is_isomorphic(&y), y.is_isomorphic(&x));
        if x.is_isomorphic(&y) && y.is_isomorphic(&z) {
            prop_assert!(x.is_isomorphic(&z));
        }
    }

    #[test]
    fn products_satisfy_axioms(m in 1usize..7, n in 1usize..7) {
        let g = build(Standard::DirectProduct(Box::new(Standard::Cyclic(m)), Box::new(Standard::Dihedral(2 * n))));
        prop_assert_eq!(g.order(), 2 * m * n);
        prop_assert!(axioms_hold(&g));
        let total: usize = g.conjugacy_classes().iter().map(|c| c.len()).sum();
        prop_assert_eq!(total, g.order());
        for cls in g.conjugacy_classes() {
            prop_assert!(cls.iter().all(|&x| g.elem_order(x) == g.elem_order(cls[0])));
        }
    }
}
