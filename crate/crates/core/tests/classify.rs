use autcurve::classify::{classify, ClassifyOptions, CSV_HEADER};
use autcurve::group::Catalog;
use autcurve::maximality::Verdict;
use autcurve::search::count_torsion_free_homs;
use autcurve::{Error, Exec, Signature};
use std::collections::BTreeSet;

fn sig(g: usize, p: &[usize]) -> Signature {
    Signature::new(g, p.to_vec()).unwrap()
}

#[test]
fn genus_two_involutions() {
    let opts = ClassifyOptions { orders: Some(vec![2]), ..Default::default() };
    let r = classify(2, Catalog::bundled(), &opts).unwrap();
    let pairs: BTreeSet<(String, String)> =
        r.records.iter().map(|a| (a.group.clone(), a.signature.to_string())).collect();
    let want: BTreeSet<(String, String)> =
        [("C2", "0;2,2,2,2,2,2"), ("C2", "1;2,2")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    assert_eq!(pairs, want);
    assert!(r.undecided.is_empty());
    assert!(r.incomplete_orders.is_empty());
}

#[test]
fn genus_two_landmarks() {
    let opts = ClassifyOptions { orders: Some(vec![5, 7, 10, 48]), counts: true, ..Default::default() };
    let r = classify(2, Catalog::bundled(), &opts).unwrap();
    let has = |order: usize, s: Signature| r.records.iter().any(|a| a.order == order && a.signature == s);
    assert!(has(5, sig(0, &[5, 5, 5])));
    assert!(has(10, sig(0, &[2, 5, 10])));
    assert!(has(48, sig(0, &[2, 3, 8])));
    assert!(r.records.iter().all(|a| a.order != 7));
    for a in &r.records {
        a.witness.validate(&Catalog::bundled().get(a.catalog_id.unwrap()).unwrap().group).unwrap();
        assert!(a.hom_count.unwrap() >= 1);
        assert!(a.epi_classes.unwrap() >= 1);
        assert_eq!(a.csv_row().len(), CSV_HEADER.len());
    }
    let c5 = r.records.iter().find(|a| a.order == 5).unwrap();
    assert_eq!(c5.epi_classes, Some(3));
}

#[test]
fn sequential_and_parallel_agree() {
    let run = |exec| {
        let opts = ClassifyOptions { max_order: Some(12), exec, ..Default::default() };
        let r = classify(3, Catalog::bundled(), &opts).unwrap();
        r.records.iter().map(|a| (a.order, a.group.clone(), a.signature.to_string())).collect::<Vec<_>>()
    };
    assert_eq!(run(Exec::Sequential), run(Exec::Parallel));
}

#[test]
fn every_record_has_a_nonzero_hom_count() {
    let opts = ClassifyOptions { max_order: Some(8), ..Default::default() };
    let r = classify(3, Catalog::bundled(), &opts).unwrap();
    assert!(!r.records.is_empty());
    for a in &r.records {
        let g = &Catalog::bundled().get(a.catalog_id.unwrap()).unwrap().group;
        assert!(count_torsion_free_homs(g, &a.signature) > 0, "{} {}", a.group, a.signature);
    }
}

#[test]
fn maximality_column() {
    let opts = ClassifyOptions { orders: Some(vec![10]), maximality: true, ..Default::default() };
    let r = classify(2, Catalog::bundled(), &opts).unwrap();
    let c10 = r.records.iter().find(|a| a.signature == sig(0, &[2, 5, 10])).unwrap();
    assert!(c10.maximality.is_some());
    assert_ne!(c10.maximality, Some(Verdict::NeverMaximal));
}

#[test]
fn genus_below_two_is_rejected() {
    assert!(matches!(classify(1, Catalog::bundled(), &ClassifyOptions::default()), Err(Error::Domain(_))));
}

#[test]
fn genus_three_sound_and_complete_on_small_orders() {
    use autcurve::search::{allowed_periods, count_epimorphisms};
    use autcurve::signature::{enumerate_signatures, rh_genus, Rational};
    let cat = Catalog::bundled();
    let max = 24;
    let rep = classify(3, cat, &ClassifyOptions { max_order: Some(max), ..ClassifyOptions::default() }).unwrap();
    assert!(rep.undecided.is_empty());
    let emitted: BTreeSet<(String, String)> =
        rep.records.iter().map(|r| (r.catalog_id.unwrap().to_string(), r.signature.to_string())).collect();
    for r in &rep.records {
        let g = &cat.get(r.catalog_id.unwrap()).unwrap().group;
        r.witness.validate(g).unwrap();
        assert_eq!(rh_genus(&r.signature, g.order()), Rational::from_integer(3));
    }
    // oracle: a pair occurs iff some torsion-free hom onto the group exists
    let mut expected = BTreeSet::new();
    for n in (2..=max).filter(|&n| cat.is_complete(n)) {
        for e in cat.of_order(n) {
            for s in enumerate_signatures(3, n, &allowed_periods(&e.group)).unwrap() {
                if count_epimorphisms(&e.group, &s).unwrap() > 0 {
                    expected.insert((e.id.to_string(), s.to_string()));
                }
            }
        }
    }
    assert_eq!(emitted, expected);
}
