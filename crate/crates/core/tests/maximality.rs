use autcurve::group::{Catalog, ElementSet, Perm, Standard};
use autcurve::maximality::{
    cond1_test, cond2_test, coset_permutations, extension_search, fuse_surface_count, maximality_verdict,
    singerman_overgroups, singerman_rules, subgroup_signature, superelliptic_nonmax_tables, CaseOutcome, Cond1Case,
    ExtensionOracle, ExtensionOutcome, SurfaceCount, Verdict,
};
use autcurve::search::{for_each_generating_vector, GeneratingVector, SearchOptions};
use autcurve::signature::{Rational, Signature};
use autcurve::superelliptic::ReducedKind;
use autcurve::FiniteGroup;
use proptest::prelude::*;

fn sig(s: &str) -> Signature {
    s.parse().unwrap()
}

fn cyclic(n: usize) -> FiniteGroup {
    Standard::Cyclic(n).build().unwrap()
}

fn vector(s: &str, c: &[usize]) -> GeneratingVector {
    GeneratingVector {
        signature: Signature::ordered(0, sig(s).periods).unwrap(),
        hyperbolic: vec![],
        elliptic: c.to_vec(),
    }
}

/// Direct reading of the table, row by row, as an independent oracle.
fn oracle_rows(s: &Signature) -> Vec<(String, Signature)> {
    let p = s.canonical().periods;
    let mut out = Vec::new();
    let mut add = |case: &str, g0: usize, periods: Vec<usize>| {
        let o = Signature::new(g0, periods).unwrap();
        if !out.contains(&(case.to_string(), o.clone())) {
            out.push((case.to_string(), o));
        }
    };
    match (s.orbit_genus, p.as_slice()) {
        (2, []) => add("N1", 0, vec![2; 6]),
        (1, [t, u]) if t == u => add("N2", 0, vec![2, 2, 2, 2, *t]),
        (1, [t]) => add("N3", 0, vec![2, 2, 2, 2 * t]),
        (0, [a, b, c, d]) => {
            if a == b && b == c && c == d && *a >= 3 {
                add("N4", 0, vec![2, 2, 2, *a]);
            }
            // pairings of a sorted 4-multiset into two equal pairs
            if a == b && c == d && a + c >= 5 {
                add("N5", 0, vec![2, 2, *a, *c]);
            }
        }
        (0, [a, b, c]) => {
            let (a, b, c) = (*a, *b, *c);
            if a == b && b == c && a >= 4 {
                add("N6", 0, vec![3, 3, a]);
                add("N7", 0, vec![2, 3, 2 * a]);
            }
            // (t,t,u) in any position
            for (t, t2, u) in [(a, b, c), (b, c, a), (a, c, b)] {
                if t == t2 && t >= 3 && t + u >= 7 {
                    add("N8", 0, vec![2, t, 2 * u]);
                }
            }
            let fixed = [
                ("T1", [7, 7, 7], [2, 3, 7]),
                ("T2", [2, 7, 7], [2, 3, 7]),
                ("T3", [3, 3, 7], [2, 3, 7]),
                ("T4", [4, 8, 8], [2, 3, 8]),
                ("T5", [3, 8, 8], [2, 3, 8]),
                ("T6", [9, 9, 9], [2, 3, 9]),
                ("T7", [4, 4, 5], [2, 4, 5]),
            ];
            for (case, inner, outer) in fixed {
                if [a, b, c] == inner {
                    add(case, 0, outer.to_vec());
                }
            }
            for n in 2..=c {
                let mut t8 = vec![n, 4 * n, 4 * n];
                t8.sort();
                if t8 == [a, b, c] {
                    add("T8", 0, vec![2, 3, 4 * n]);
                }
                let mut t9 = vec![n, 2 * n, 2 * n];
                t9.sort();
                if n >= 3 && t9 == [a, b, c] {
                    add("T9", 0, vec![2, 4, 2 * n]);
                }
                let mut t10 = vec![3, n, 3 * n];
                t10.sort();
                if n >= 3 && t10 == [a, b, c] {
                    add("T10", 0, vec![2, 3, 3 * n]);
                }
                let mut t11 = vec![2, n, 2 * n];
                t11.sort();
                if n >= 4 && t11 == [a, b, c] {
                    add("T11", 0, vec![2, 3, 2 * n]);
                }
            }
        }
        _ => {}
    }
    out.sort_by(|x, y| x.0.cmp(&y.0).then(x.1.cmp(&y.1)));
    out
}

#[test]
fn overgroups_of_555() {
    let got: Vec<(String, String, usize)> = singerman_overgroups(&sig("0;5,5,5"))
        .iter()
        .map(|o| (o.rule.case.clone(), o.outer.to_string(), o.index))
        .collect();
    assert_eq!(
        got,
        vec![
            ("N6".into(), "0;3,3,5".into(), 3),
            ("N7".into(), "0;2,3,10".into(), 6),
            ("N8".into(), "0;2,5,10".into(), 2)
        ]
    );
    assert!(singerman_overgroups(&sig("0;2,3,7")).is_empty());
    let n1 = singerman_overgroups(&sig("2;-"));
    assert_eq!(n1.len(), 1);
    assert_eq!((n1[0].rule.case.as_str(), n1[0].outer.clone(), n1[0].index), ("N1", sig("0;2,2,2,2,2,2"), 2));
}

#[test]
fn table_matches_direct_reading() {
    let mut sigs = Vec::new();
    for a in 2..=20 {
        for b in a..=20 {
            for c in b..=20 {
                sigs.push(Signature::new(0, vec![a, b, c]).unwrap());
            }
        }
    }
    for a in 2..=12 {
        for c in a..=12 {
            sigs.push(Signature::new(0, vec![a, a, c, c]).unwrap());
            sigs.push(Signature::new(0, vec![a, c, c, c]).unwrap());
        }
        sigs.push(Signature::new(1, vec![a]).unwrap());
        sigs.push(Signature::new(1, vec![a, a]).unwrap());
        sigs.push(Signature::new(1, vec![a, a + 1]).unwrap());
    }
    sigs.push(sig("2;-"));
    sigs.push(sig("2;2"));
    for s in sigs {
        let mut got: Vec<(String, Signature)> =
            singerman_overgroups(&s).into_iter().map(|o| (o.rule.case.clone(), o.outer)).collect();
        got.sort_by(|x, y| x.0.cmp(&y.0).then(x.1.cmp(&y.1)));
        assert_eq!(got, oracle_rows(&s), "{s}");
    }
}

#[test]
fn every_rule_satisfies_the_area_relation() {
    for rule in singerman_rules() {
        for t in 2..=12 {
            for u in 2..=12 {
                for n in 2..=12 {
                    let b = [('t', t), ('u', u), ('n', n)].into_iter().collect();
                    if !rule
                        .constraints
                        .iter()
                        .all(|c| c.vars.iter().map(|v| [t, u, n]["tun".find(*v).unwrap()]).sum::<usize>() >= c.bound)
                    {
                        continue;
                    }
                    let (Some(inner), Some(outer)) = (rule.inner.instantiate(&b), rule.outer.instantiate(&b)) else {
                        continue;
                    };
                    if !inner.is_hyperbolic() {
                        continue;
                    }
                    assert_eq!(
                        inner.area(),
                        outer.area() * Rational::from_integer(rule.index as i128),
                        "{} {b:?}",
                        rule.case
                    );
                }
            }
        }
    }
}

#[test]
fn index_two_subgroup_of_2_5_10() {
    let c10 = cyclic(10);
    let outer = sig("0;2,5,10");
    let mut v = None;
    for_each_generating_vector(&c10, &outer, u64::MAX, |w| {
        v = Some(w.clone());
        false
    })
    .unwrap();
    let v = v.unwrap();
    let index_two = ElementSet::from_iter(10, (0..10).filter(|&x| c10.elem_order(x) % 2 == 1));
    let perms = coset_permutations(&c10, &v, &index_two);
    assert_eq!(subgroup_signature(&outer, &perms).unwrap(), sig("0;5,5,5"));
    // trivial action
    let id = vec![Perm::identity(1); 3];
    assert_eq!(subgroup_signature(&outer, &id).unwrap(), outer);
}

#[test]
fn n4_index_four_action() {
    // (0;2,2,2,t) onto C2 x C2 x Ct... use the regular action of V4 via c1,c2,c3 and c4 trivial on cosets
    let t = 5;
    let outer = Signature::ordered(0, vec![2, 2, 2, t]).unwrap();
    let a = Perm::new(vec![1, 0, 3, 2]).unwrap();
    let b = Perm::new(vec![2, 3, 0, 1]).unwrap();
    let c = a.then(&b);
    let perms = vec![a, b, c, Perm::identity(4)];
    assert_eq!(subgroup_signature(&outer, &perms).unwrap(), Signature::new(0, vec![t; 4]).unwrap());
    let intransitive = vec![Perm::identity(2); 4];
    assert!(subgroup_signature(&outer, &intransitive).is_err());
}

#[test]
fn c5_extends_to_c10() {
    let c5 = cyclic(5);
    let s = sig("0;5,5,5");
    let out = extension_search(&c5, &s, Catalog::bundled(), &SearchOptions::default()).unwrap();
    let ExtensionOutcome::Found(w) = out else { panic!("no extension: {out:?}") };
    assert_eq!(w.overgroup.order(), 10);
    assert!(w.overgroup.is_abelian() && w.overgroup.elements().any(|x| w.overgroup.elem_order(x) == 10));
    assert_eq!(w.outer_signature, sig("0;2,5,10"));
    let rep = maximality_verdict(&c5, &s, Catalog::bundled(), &SearchOptions::default()).unwrap();
    assert_eq!(rep.verdict, Verdict::NeverMaximal);
}

#[test]
fn cyclic_case_two_congruence() {
    // (x, x^a, x^(-1-a)) for (0;mn,mn,n) extends exactly when a^2 = 1 mod mn
    let cat = Catalog::bundled();
    for nm in 5..=100usize {
        let g = cyclic(nm);
        for n in 2..nm {
            if nm % n != 0 || nm + n < 7 || nm < 3 {
                continue;
            }
            let s = Signature::ordered(0, vec![nm, nm, n]).unwrap();
            let oracle = ExtensionOracle::new(&g, &s, cat, SearchOptions::default());
            for a in 1..nm {
                let c3 = (2 * nm - 1 - a) % nm;
                if num_integer::gcd(a, nm) != 1 || g.elem_order(c3) != n {
                    continue;
                }
                // element k of the cyclic group built by closure is x^k
                let v = vector(&s.to_string(), &[1, a, c3]);
                if v.validate(&g).is_err() {
                    continue;
                }
                let rep = cond2_test(&g, &v, &oracle).unwrap();
                let case2 = rep.steps.iter().find(|st| st.case == 2 && st.ordered == [1, a, c3]).unwrap();
                assert_eq!(case2.outcome == CaseOutcome::Extends, a * a % nm == 1, "nm={nm} a={a}");
            }
        }
    }
}

#[test]
fn cond1_trivial_cases() {
    let c2 = cyclic(2);
    let v = GeneratingVector { signature: sig("1;2,2"), hyperbolic: vec![(1, 1)], elliptic: vec![1, 1] };
    v.validate(&c2).unwrap();
    assert_eq!(cond1_test(&c2, &v).unwrap(), (Cond1Case::OneTT, true));
    let c3 = cyclic(12);
    let v = vector("0;3,3,4,4", &[4, 8, 3, 9]);
    v.validate(&c3).unwrap();
    assert!(cond1_test(&c3, &v).unwrap().1);
    assert!(cond1_test(&c3, &vector("0;3,4,5", &[4, 3, 5])).is_err());
}

#[test]
fn cond1_fails_for_some_nonabelian_vector() {
    // brute-force the automorphism check independently
    let g = Catalog::bundled().resolve("20:3").unwrap();
    let s = sig("0;2,2,4,4");
    let s2 = sig("0;2,2,5,5");
    let mut saw_false = false;
    for s in [s, s2] {
        for_each_generating_vector(&g, &s, u64::MAX, |v| {
            if let Ok((_, ext)) = cond1_test(&g, v) {
                let c = &v.elliptic;
                let images = [c[1], c[0], g.conj(g.inv(c[0]), c[3]), g.conj(c[1], c[2])];
                let brute = g.extend_hom(c, &g, &images).is_some_and(|m| {
                    let mut seen = vec![false; g.order()];
                    m.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
                });
                assert_eq!(ext, brute);
                saw_false |= !ext;
            }
            true
        })
        .unwrap();
    }
    assert!(saw_false);
}

#[test]
fn rotation_fails_on_a_nonabelian_vector() {
    let g = Catalog::bundled().resolve("16:4").unwrap();
    assert!(!g.is_abelian());
    let s = sig("0;4,4,4");
    let oracle = ExtensionOracle::new(&g, &s, Catalog::bundled(), SearchOptions::default());
    let mut saw = false;
    for_each_generating_vector(&g, &s, u64::MAX, |v| {
        let rep = cond2_test(&g, v, &oracle).unwrap();
        let [c1, c2, c3] = [v.elliptic[0], v.elliptic[1], v.elliptic[2]];
        let rot = rep.steps.iter().find(|st| st.case == 1 && st.ordered == [c1, c2, c3]).unwrap();
        let brute = g.extends_to_automorphism(&[c1, c2], &[c2, c3]);
        assert_eq!(rot.outcome == CaseOutcome::Extends, brute);
        saw |= !brute;
        true
    })
    .unwrap();
    assert!(saw);
}

#[test]
fn cyclic_40_and_64() {
    let cat = Catalog::bundled();
    let opts = SearchOptions::default();
    let r = maximality_verdict(&cyclic(40), &sig("0;40,40,4"), cat, &opts).unwrap();
    assert_eq!(r.verdict, Verdict::NeverMaximal);
    let r = maximality_verdict(&cyclic(64), &sig("0;64,64,8"), cat, &opts).unwrap();
    assert_eq!(r.verdict, Verdict::MaximalWitnessExists);
}

#[test]
fn hurwitz_signature_is_maximal() {
    let g = Standard::Psl2(7).build().unwrap();
    let r = maximality_verdict(&g, &sig("0;2,3,7"), Catalog::bundled(), &SearchOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::MaximalWitnessExists);
}

#[test]
fn surface_counts() {
    let cat = Catalog::bundled();
    let opts = SearchOptions::default();
    let r = fuse_surface_count(&cyclic(5), &sig("0;5,5,5"), cat, &opts).unwrap();
    assert_eq!(r.class_count, 3);
    assert_eq!(r.count, SurfaceCount::Exact { count: 1 });
    let r = fuse_surface_count(&cyclic(10), &sig("0;2,5,10"), cat, &opts).unwrap();
    assert_eq!(r.count, SurfaceCount::Exact { count: 1 });
}

#[test]
fn superelliptic_tables() {
    let got = superelliptic_nonmax_tables(ReducedKind::Cyclic(3), Some(2), &sig("0;6,6,2"));
    assert!(got.iter().any(|c| c.outer_kind == ReducedKind::Dihedral(3) && c.outer_signature == sig("0;2,6,4")));
    let got = superelliptic_nonmax_tables(ReducedKind::A4, None, &sig("0;4,3,3"));
    assert!(got.iter().any(|c| c.outer_kind == ReducedKind::S4 && c.outer_signature == sig("0;2,3,8")));
    assert!(superelliptic_nonmax_tables(ReducedKind::S4, None, &sig("0;2,3,8")).is_empty());
    assert!(superelliptic_nonmax_tables(ReducedKind::A5, None, &sig("0;2,3,5")).is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fused_count_within_bounds(n in 3usize..30, k in 0usize..3) {
        let g = cyclic(n);
        let periods = [vec![n, n, n], vec![n, n, 2], vec![2, n, n]][k].clone();
        let s = Signature::new(0, periods).unwrap();
        prop_assume!(s.is_hyperbolic());
        let classes = autcurve::search::count_epimorphism_classes(&g, &s).unwrap();
        prop_assume!(classes > 0);
        let r = fuse_surface_count(&g, &s, Catalog::bundled(), &SearchOptions::default()).unwrap();
        match r.count {
            SurfaceCount::Exact { count } => prop_assert!(count >= 1 && count <= classes),
            SurfaceCount::Undecided { lower, upper } => prop_assert!(1 <= lower && lower <= upper && upper <= classes),
        }
    }
}
