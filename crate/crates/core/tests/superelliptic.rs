use autcurve::group::{Catalog, Standard};
use autcurve::signature::{cover_genus, CoverData, RamifiedPlace};
use autcurve::superelliptic::poly::generated_group;
use autcurve::superelliptic::*;
use autcurve::Error;
use proptest::prelude::*;

fn all_cases_small() -> Vec<(Table1Case, u32)> {
    use Table1Case::*;
    vec![
        (Cyclic { m: 4 }, 5),
        (Cyclic { m: 5 }, 11),
        (Cyclic { m: 7 }, 2),
        (Dihedral { m: 3 }, 7),
        (Dihedral { m: 5 }, 11),
        (Dihedral { m: 4 }, 3),
        (A4, 13),
        (A4, 7),
        (S4, 13),
        (S4, 5),
        (A5, 11),
        (A5, 31),
        (A5Char3, 3),
        (Additive { t: 1 }, 3),
        (Additive { t: 2 }, 2),
        (Additive { t: 2 }, 5),
        (Km { m: 2, t: 1 }, 5),
        (Km { m: 4, t: 1 }, 5),
        (Km { m: 3, t: 2 }, 2),
        (Psl { q: 3 }, 3),
        (Psl { q: 5 }, 5),
        (Psl { q: 7 }, 7),
        (Psl { q: 9 }, 3),
        (Pgl { q: 2 }, 2),
        (Pgl { q: 3 }, 3),
        (Pgl { q: 4 }, 2),
        (Pgl { q: 5 }, 5),
    ]
}

#[test]
fn prime_field_matches_modular_arithmetic() {
    let f = Field::new(13, 1).unwrap();
    for a in 0..13u32 {
        for b in 0..13u32 {
            assert_eq!(f.add(a, b), (a + b) % 13);
            assert_eq!(f.mul(a, b), (a * b) % 13);
        }
    }
    assert_eq!(f.order(f.generator()), 12);
}

#[test]
fn extension_field_axioms() {
    for (p, s) in [(2, 3), (3, 2), (3, 4), (5, 2), (2, 6), (11, 2)] {
        let f = Field::new(p, s).unwrap();
        let q = f.size();
        assert_eq!(q, p.pow(s));
        assert_eq!(f.order(f.generator()), q - 1);
        let step = (q / 40).max(1);
        for a in (0..q).step_by(step as usize) {
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            assert_eq!(f.pow(a, q as u64), a, "Frobenius fixes F_q");
            for b in (0..q).step_by(step as usize + 3) {
                let c = (a * 7 + b * 3 + 1) % q;
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
        assert_eq!(f.subfield(1).unwrap().len(), p as usize);
    }
    assert!(Field::new(6, 1).is_err());
    assert!(matches!(Field::new(2, 20), Err(Error::Resource { .. })));
}

#[test]
fn field_spec_parsing() {
    assert_eq!(parse_field("3^2").unwrap().size(), 9);
    assert_eq!(parse_field("7").unwrap().size(), 7);
    assert!(parse_field("x^2").is_err());
}

#[test]
fn row_one_and_two_functions() {
    let f = Field::new(5, 1).unwrap();
    let z = table1_function(Table1Case::Cyclic { m: 4 }, &f).unwrap();
    assert_eq!(z.num, Poly::monomial(1, 4));
    assert_eq!(z.den, Poly::constant(1));
    assert_eq!(z.render(&f), "x^4");

    let f7 = Field::new(7, 1).unwrap();
    let z = table1_function(Table1Case::Dihedral { m: 3 }, &f7).unwrap();
    assert_eq!(z.num, Poly::new(vec![1, 0, 0, 0, 0, 0, 1]));
    assert_eq!(z.den, Poly::monomial(1, 3));
}

#[test]
fn char3_icosahedral_function_over_f9() {
    let case = Table1Case::A5Char3;
    let f = case.function_field(3).unwrap();
    assert_eq!(f.size(), 9);
    let z = table1_function(case, &f).unwrap();
    assert_eq!(z.degree(), 60);
    assert_eq!(z.num.degree(), Some(60));
    assert_eq!(z.den.degree(), Some(55));
}

#[test]
fn inadmissible_characteristics() {
    let f3 = Field::new(3, 2).unwrap();
    let err = table1_function(Table1Case::S4, &f3).unwrap_err();
    assert!(matches!(&err, Error::Domain(m) if m.contains("p ≠ 2, 3")), "{err}");
    assert!(matches!(Table1Case::A5.check(5), Err(Error::Domain(_))));
    assert!(matches!(Table1Case::Cyclic { m: 6 }.check(3), Err(Error::Domain(_))));
    assert!(matches!(Table1Case::Psl { q: 8 }.check(2), Err(Error::Domain(_))));
    assert!(matches!(Table1Case::Km { m: 3, t: 1 }.check(5), Err(Error::Domain(_))));
    assert!(matches!(Table1Case::A5Char3.check(7), Err(Error::Domain(_))));
}

#[test]
fn simple_generators_fix_z() {
    let f11 = Field::new(11, 1).unwrap();
    let r = verify_case_invariance(Table1Case::Cyclic { m: 5 }, &f11).unwrap();
    assert!(r.invariant);
    assert!(r.samples > 2 * r.degree + 1);

    let f7 = Field::new(7, 1).unwrap();
    let z = table1_function(Table1Case::Dihedral { m: 3 }, &f7).unwrap();
    let r = verify_invariance(&f7, &z, &[Mobius::inversion()]).unwrap();
    assert!(r.invariant);
}

#[test]
fn octahedral_over_f13() {
    let f = Field::new(13, 1).unwrap();
    let r = verify_case_invariance(Table1Case::S4, &f).unwrap();
    assert_eq!(r.degree, 24);
    assert_eq!(r.generated_order, 24);
    assert!(r.invariant);
    // F_13 has 14 points; evaluation moves to an extension
    assert!(r.evaluation_field.q > 13);
}

#[test]
fn non_invariant_function_is_caught() {
    let f = Field::new(11, 1).unwrap();
    let z = RationalFunction::polynomial(Poly::new(vec![0, 1, 0, 0, 0, 1]));
    let zeta = Mobius::scaling(&f, f.root_of_unity(5).unwrap()).unwrap();
    let r = verify_invariance(&f, &z, &[zeta]).unwrap();
    assert!(!r.invariant);
    assert!(!r.generators[0].symbolic);
    assert!(r.generators[0].counterexample.is_some());
}

#[test]
fn every_case_has_degree_group_order_and_is_invariant() {
    for (case, p) in all_cases_small() {
        let f = case.action_field(p).unwrap();
        assert!(f.size() <= 121, "{case} over F_{}", f.size());
        let r = verify_case_invariance(case, &f).unwrap();
        let n = case.group_order(p) as usize;
        assert_eq!(r.degree, n, "{case}: deg z");
        assert_eq!(r.generated_order, n, "{case}: generated group");
        assert!(r.invariant, "{case}: {:?}", r.generators);
    }
}

#[test]
fn stabilizer_is_exactly_the_group() {
    for (case, p) in all_cases_small() {
        let f = case.action_field(p).unwrap();
        let z = table1_function(case, &f).unwrap();
        let stab = match stabilizer(&f, &z) {
            Ok(s) => s,
            // fewer than three rational poles: nothing to compare
            Err(Error::Domain(_)) => continue,
            Err(e) => panic!("{e}"),
        };
        let gens = table1_generators(case, &f).unwrap();
        let closure = generated_group(&f, &gens, 1 << 16).unwrap();
        assert_eq!(stab.len(), closure.len(), "{case}");
        assert!(closure.iter().all(|m| stab.contains(m)), "{case}");
    }
}

#[test]
fn ramification_tuples() {
    let r = verify_ramification(Table1Case::Cyclic { m: 4 }, 5).unwrap();
    assert!(r.confirmed);
    assert_eq!(r.fibers.iter().map(|x| x.e).collect::<Vec<_>>(), vec![4, 4]);

    let r = verify_ramification(Table1Case::Additive { t: 1 }, 3).unwrap();
    assert!(r.confirmed);
    assert_eq!(r.fibers, vec![Fiber { value: "inf".into(), points: 1, e: 3 }]);

    let r = verify_ramification(Table1Case::Dihedral { m: 3 }, 7).unwrap();
    assert!(r.confirmed);
    let mut es: Vec<usize> = r.fibers.iter().map(|x| x.e).collect();
    es.sort();
    assert_eq!(es, vec![2, 2, 3]);

    for (case, p) in all_cases_small() {
        let r = verify_ramification(case, p).unwrap();
        assert!(r.confirmed, "{case} p={p}: {:?}", r.fibers);
        for fb in &r.fibers {
            assert_eq!(fb.points * fb.e, r.degree);
        }
    }
}

#[test]
fn cyclic_genus_examples() {
    let g = |n, e: &[usize]| cyclic_curve_genus(&CyclicCurveData { n, exponents: e.to_vec(), characteristic: 0 });
    assert_eq!(g(2, &[1; 8]).unwrap(), 3);
    assert_eq!(g(3, &[1; 6]).unwrap(), 4);
    assert_eq!(g(5, &[1, 1, 1, 2]).unwrap(), 4);
    assert!(g(3, &[1, 1]).is_err());
    let inseparable = CyclicCurveData { n: 3, exponents: vec![1; 6], characteristic: 3 };
    assert!(matches!(cyclic_curve_genus(&inseparable), Err(Error::Unsupported(_))));
}

fn cyclic_data() -> impl Strategy<Value = CyclicCurveData> {
    (2usize..13, prop::collection::vec(1usize..100, 1..8)).prop_filter_map("canonical form", |(n, raw)| {
        let mut ex: Vec<usize> = raw.iter().map(|r| 1 + r % (n - 1)).collect();
        let s: usize = ex.iter().sum();
        let fix = (n - s % n) % n;
        if fix != 0 {
            ex.push(fix);
        }
        let d = CyclicCurveData { n, exponents: ex, characteristic: 0 };
        d.validate().ok().map(|_| d)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]
    #[test]
    fn cyclic_genus_matches_cover_genus(d in cyclic_data()) {
        let places = d.ramification().into_iter().filter(|&e| e > 1).map(|e| RamifiedPlace::tame(e, 1)).collect();
        let oracle = cover_genus(&CoverData { degree: d.n, base_genus: 0, places, characteristic: None }).unwrap();
        prop_assert_eq!(oracle, (cyclic_curve_genus(&d).unwrap() as i128).into());
    }

    #[test]
    fn char2_types_are_complete(g in 1usize..9) {
        let types = char2_ramification_types(g);
        // oracle: every multiset of odd parts, by counting vectors
        let odd: Vec<usize> = (1..=2 * g + 1).step_by(2).collect();
        let mut oracle = Vec::new();
        let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
        while let Some((cur, total)) = stack.pop() {
            if total == 2 * g + 2 {
                oracle.push(cur.clone());
                continue;
            }
            for &o in &odd {
                if cur.last().is_none_or(|&l| o <= l) && total + o < 2 * g + 2 {
                    let mut next = cur.clone();
                    next.push(o);
                    stack.push((next, total + o + 1));
                }
            }
        }
        oracle.sort();
        prop_assert_eq!(&types, &oracle);
        for t in &types {
            prop_assert!(t.windows(2).all(|w| w[0] >= w[1]));
        }
    }
}

#[test]
fn char2_types_low_genus() {
    assert_eq!(char2_ramification_types(2), vec![vec![1, 1, 1], vec![3, 1], vec![5]]);
    assert_eq!(char2_ramification_types(3), vec![vec![1, 1, 1, 1], vec![3, 1, 1], vec![3, 3], vec![5, 1], vec![7]]);
    let g4 = char2_ramification_types(4);
    assert_eq!(g4.len(), 7);
    assert_eq!(g4.last().unwrap(), &vec![9]);
}

#[test]
fn char2_group_labels_resolve() {
    let cat = Catalog::bundled();
    let orders = |g| -> Vec<usize> {
        char2_hyperelliptic_groups(g).unwrap().iter().map(|l| cat.resolve(l).unwrap().order()).collect()
    };
    assert_eq!(orders(3), vec![2, 4, 4, 8, 6, 14, 12]);
    assert_eq!(orders(4), vec![2, 4, 4, 8, 6, 18, 20]);
    for g in [3, 4] {
        let ids: Vec<_> = char2_hyperelliptic_groups(g)
            .unwrap()
            .iter()
            .map(|l| cat.identify(&cat.resolve(l).unwrap()).expect("catalogued"))
            .collect();
        let mut dedup = ids.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), ids.len(), "distinct groups for genus {g}");
    }
    assert!(matches!(char2_hyperelliptic_groups(5), Err(Error::Unsupported(_))));
}

#[test]
fn genus_three_and_four_lists() {
    let len = |g, p| genus34_superelliptic_lists(g, p).unwrap().len();
    assert_eq!(len(3, 3), 18);
    assert_eq!(len(3, 5), 25);
    assert_eq!(len(3, 7), 25);
    assert_eq!(len(3, 0), 26);
    assert_eq!(len(3, 13), 26);
    assert_eq!(len(4, 3), 22);
    assert_eq!(len(4, 5), 28);
    assert_eq!(len(4, 7), 29);
    assert_eq!(genus34_superelliptic_lists(4, 7).unwrap(), genus34_superelliptic_lists(4, 11).unwrap());
    let g3p3 = genus34_superelliptic_lists(3, 3).unwrap();
    assert_eq!(&g3p3[..3], &[(2, 1), (4, 2), (3, 1)]);
    let big = genus34_superelliptic_lists(3, 11).unwrap();
    assert!(big.contains(&(48, 33)) && big.contains(&(48, 48)));
    assert!(genus34_superelliptic_lists(4, 5).unwrap().contains(&(72, 42)));
    assert!(matches!(genus34_superelliptic_lists(3, 2), Err(Error::Unsupported(_))));
    assert!(matches!(genus34_superelliptic_lists(5, 3), Err(Error::Unsupported(_))));
}

#[test]
fn list_ids_resolve_or_are_reported() {
    let cat = Catalog::bundled();
    for g in [3, 4] {
        for p in [3, 5, 7, 0] {
            let ids = genus34_superelliptic_lists(g, p).unwrap();
            let r = resolve_group_ids(&ids, cat);
            assert_eq!(r.resolved.len() + r.unresolved.len(), ids.len());
            for (id, _) in &r.resolved {
                assert_eq!(cat.get(*id).unwrap().group.order(), id.order);
            }
        }
    }
}

#[test]
fn reduced_groups() {
    let cat = Catalog::bundled();
    let c10 = Standard::Cyclic(10).build().unwrap();
    let r = reduced_group(&c10, 5, cat).unwrap();
    assert_eq!(r.kind, QuotientKind::Reduced(ReducedKind::Cyclic(2)));

    let d12 = Standard::Dihedral(12).build().unwrap();
    let r = reduced_group(&d12, 2, cat).unwrap();
    assert!(r.central);
    assert_eq!(r.quotient.order(), 6);
    assert_eq!(r.kind, QuotientKind::Reduced(ReducedKind::Dihedral(3)));

    let a4c3 =
        Standard::DirectProduct(Box::new(Standard::Alternating(4)), Box::new(Standard::Cyclic(3))).build().unwrap();
    let r = reduced_group(&a4c3, 3, cat).unwrap();
    assert_eq!(r.kind, QuotientKind::Reduced(ReducedKind::A4));

    // reflections in D10 generate non-normal subgroups
    let d10 = Standard::Dihedral(10).build().unwrap();
    assert!(matches!(reduced_group(&d10, 2, cat), Err(Error::Domain(_))));
}
