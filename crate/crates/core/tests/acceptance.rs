//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use autcurve::classify::{classify, ClassifyOptions};
use autcurve::group::character::CharacterTable;
use autcurve::group::{Catalog, ElementSet, Standard};
use autcurve::maximality::{
    cond2_test, coset_permutations, extension_search, fuse_surface_count, maximality_verdict, singerman_overgroups,
    subgroup_signature, CaseOutcome, ExtensionOracle, ExtensionOutcome, SurfaceCount, Verdict,
};
use autcurve::search::{
    count_epimorphism_classes, count_torsion_free_homs, count_torsion_free_homs_character, find_generating_vector,
    for_each_generating_vector, GeneratingVector, SearchOptions,
};
use autcurve::signature::{exceptional_families, rh_genus, FamilyName, Rational, Signature};
use autcurve::superelliptic::field::is_prime;
use autcurve::superelliptic::{char2_ramification_types, verify_case_invariance, Table1Case};
use autcurve::weierstrass::{enumerate_gap_sequences, total_weight, GapSequence};
use autcurve::FiniteGroup;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

type Check = fn() -> Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn sig(s: &str) -> Signature {
    s.parse().expect("signature literal")
}

fn cyclic(n: usize) -> FiniteGroup {
    Standard::Cyclic(n).build().expect("cyclic group")
}

fn all_vectors(g: &FiniteGroup, s: &Signature) -> Vec<GeneratingVector> {
    let mut out = Vec::new();
    for_each_generating_vector(g, s, u64::MAX, |v| {
        out.push(v.clone());
        true
    })
    .expect("exhaustive enumeration");
    out
}

fn c1_genus2_involutions() -> Result<String, String> {
    let opts = ClassifyOptions { orders: Some(vec![2]), ..ClassifyOptions::default() };
    let rep = classify(2, Catalog::bundled(), &opts).map_err(|e| e.to_string())?;
    let mut got: Vec<(String, String)> =
        rep.records.iter().map(|r| (r.group.clone(), r.signature.to_string())).collect();
    got.sort();
    let want = vec![("C2".to_string(), "0;2,2,2,2,2,2".to_string()), ("C2".to_string(), "1;2,2".to_string())];
    ensure!(got == want, "got {got:?}");
    ensure!(rep.undecided.is_empty(), "undecided pairs {:?}", rep.undecided);
    Ok("{(C2,0;2,2,2,2,2,2), (C2,1;2,2)}".into())
}

fn c2_counting() -> Result<String, String> {
    let cat = Catalog::bundled();
    let opts = SearchOptions::default();
    let (c5, s5) = (cyclic(5), sig("0;5,5,5"));
    let (c10, s10) = (cyclic(10), sig("0;2,5,10"));
    let homs5 = count_torsion_free_homs(&c5, &s5);
    let classes5 = count_epimorphism_classes(&c5, &s5).map_err(|e| e.to_string())?;
    let fused = fuse_surface_count(&c5, &s5, cat, &opts).map_err(|e| e.to_string())?;
    let homs10 = count_torsion_free_homs(&c10, &s10);
    let classes10 = count_epimorphism_classes(&c10, &s10).map_err(|e| e.to_string())?;
    ensure!(homs5 == 12, "C5 homs {homs5}");
    ensure!(classes5 == 3, "C5 classes {classes5}");
    ensure!(fused.count == SurfaceCount::Exact { count: 1 }, "C5 fused {:?}", fused.count);
    ensure!(homs10 == 4, "C10 homs {homs10}");
    ensure!(classes10 == 1, "C10 classes {classes10}");
    Ok("C5: 12 homs, 3 classes, 1 surface; C10: 4 homs, 1 class".into())
}

/// Triples of elements with the prescribed orders and product 1.
fn brute_triangle_count(g: &FiniteGroup, periods: [usize; 3]) -> u128 {
    let [a, b, c] = periods;
    let xs = g.elements_of_order(a);
    let ys = g.elements_of_order(b);
    let mut n = 0u128;
    for &x in &xs {
        for &y in &ys {
            let z = g.inv(g.mul(x, y));
            if g.elem_order(z) == c {
                n += 1;
            }
        }
    }
    n
}

fn divisors(n: usize) -> Vec<usize> {
    (2..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn c3_character_formula() -> Result<String, String> {
    let mut groups = 0;
    let mut sigs = 0;
    for entry in Catalog::bundled().entries().iter().filter(|e| e.group.order() <= 30 && e.group.is_abelian()) {
        let g = &entry.group;
        let table = CharacterTable::abelian(g).map_err(|e| format!("{}: {e}", entry.label))?;
        let ds = divisors(g.exponent());
        groups += 1;
        for (i, &a) in ds.iter().enumerate() {
            for (j, &b) in ds.iter().enumerate().skip(i) {
                for &c in &ds[j..] {
                    let s = Signature::new(0, vec![a, b, c]).map_err(|e| e.to_string())?;
                    let formula = count_torsion_free_homs_character(&table, &s).map_err(|e| format!("{s}: {e}"))?;
                    let brute = brute_triangle_count(g, [a, b, c]);
                    ensure!(formula == brute, "{} {s}: formula {formula}, brute force {brute}", entry.label);
                    sigs += 1;
                }
            }
        }
    }
    ensure!(groups > 0, "no abelian groups of order <= 30 in the catalog");
    Ok(format!("{groups} abelian groups, {sigs} (group, signature) pairs agree"))
}

fn c4_maximality_c5() -> Result<String, String> {
    let cat = Catalog::bundled();
    let opts = SearchOptions::default();
    let (c5, s) = (cyclic(5), sig("0;5,5,5"));
    let oracle = ExtensionOracle::new(&c5, &s, cat, opts);
    let vectors = all_vectors(&c5, &s);
    ensure!(!vectors.is_empty(), "no generating vectors");
    for v in &vectors {
        let rep = cond2_test(&c5, v, &oracle).map_err(|e| e.to_string())?;
        // case (2) is tried on every ordering of the vector that fits its period pattern
        let case2: Vec<_> = rep.steps.iter().filter(|st| st.case == 2).collect();
        ensure!(!case2.is_empty(), "no case (2) step for {:?}", v.elliptic);
        ensure!(
            case2.iter().any(|st| st.outcome == CaseOutcome::Extends),
            "case (2) on {:?}: {:?}",
            v.elliptic,
            case2.iter().map(|st| (st.ordered, st.outcome)).collect::<Vec<_>>()
        );
        ensure!(rep.outcome == CaseOutcome::Extends, "cond2 outcome {:?}", rep.outcome);
    }
    let out = extension_search(&c5, &s, cat, &opts).map_err(|e| e.to_string())?;
    let ExtensionOutcome::Found(w) = out else { return Err(format!("extension_search: {out:?}")) };
    let o = &w.overgroup;
    ensure!(o.order() == 10 && o.elements().any(|x| o.elem_order(x) == 10), "overgroup {}", o.label());
    ensure!(w.outer_signature == sig("0;2,5,10"), "outer {}", w.outer_signature);
    let verdict = maximality_verdict(&c5, &s, cat, &opts).map_err(|e| e.to_string())?.verdict;
    ensure!(verdict == Verdict::NeverMaximal, "verdict {verdict}");
    Ok("case (2) extends, C10 with 0;2,5,10, never-maximal".into())
}

fn c5_singerman() -> Result<String, String> {
    let got: Vec<(String, String, usize)> = singerman_overgroups(&sig("0;5,5,5"))
        .iter()
        .map(|o| (o.rule.case.clone(), o.outer.to_string(), o.index))
        .collect();
    let want = vec![
        ("N6".to_string(), "0;3,3,5".to_string(), 3),
        ("N7".to_string(), "0;2,3,10".to_string(), 6),
        ("N8".to_string(), "0;2,5,10".to_string(), 2),
    ];
    ensure!(got == want, "overgroups {got:?}");
    let c10 = cyclic(10);
    let outer = sig("0;2,5,10");
    let v = find_generating_vector(&c10, &outer).ok_or("no C10 vector")?;
    let index_two = ElementSet::from_iter(10, c10.elements().filter(|&x| c10.elem_order(x) % 2 == 1));
    let perms = coset_permutations(&c10, &v, &index_two);
    let inner = subgroup_signature(&outer, &perms).map_err(|e| e.to_string())?;
    ensure!(inner == sig("0;5,5,5"), "index-2 subgroup signature {inner}");
    Ok("N6 (0;3,3,5) x3, N7 (0;2,3,10) x6, N8 (0;2,5,10) x2; index 2 gives 0;5,5,5".into())
}

fn c6_hurwitz() -> Result<String, String> {
    let cat = Catalog::bundled();
    let g = cat.resolve("PSL(2,7)").map_err(|e| e.to_string())?;
    let id = cat.identify(&g).ok_or("PSL(2,7) is not catalogued")?;
    let s = sig("0;2,3,7");
    let v = find_generating_vector(&g, &s).ok_or("no (0;2,3,7) vector")?;
    v.validate(&g).map_err(|e| e.to_string())?;
    let genus = rh_genus(&s, g.order());
    ensure!(genus == Rational::from_integer(3), "genus {genus}");
    Ok(format!("catalog {id}, vector {:?}, genus 3", v.elliptic))
}

/// `c2 = c1^a` for a generator `c1` of a cyclic group.
fn exponent_of(g: &FiniteGroup, c1: usize, c2: usize) -> Option<usize> {
    (0..g.order()).find(|&a| g.pow(c1, a as i64) == c2)
}

fn c7_ex_cyclic() -> Result<String, String> {
    let cat = Catalog::bundled();
    let opts = SearchOptions::default();
    let mut lines = Vec::new();
    for (n, m, never) in [(4usize, 10usize, true), (8, 8, false)] {
        let nm = n * m;
        let g = cyclic(nm);
        let s = Signature::new(0, vec![nm, nm, n]).map_err(|e| e.to_string())?;
        let vectors = all_vectors(&g, &s);
        ensure!(!vectors.is_empty(), "C{nm}: no vectors");
        let mut congruent = 0;
        for v in &vectors {
            let c = &v.elliptic;
            let (c1, c2) =
                if g.elem_order(c[0]) == nm && g.elem_order(c[1]) == nm { (c[0], c[1]) } else { (c[1], c[2]) };
            let a = exponent_of(&g, c1, c2).ok_or("c2 not a power of c1")?;
            if a * a % nm == 1 {
                congruent += 1;
            }
        }
        let all = congruent == vectors.len();
        ensure!(all == never, "C{nm}: {congruent} of {} vectors satisfy a^2 = 1", vectors.len());
        let verdict = maximality_verdict(&g, &s, cat, &opts).map_err(|e| e.to_string())?.verdict;
        let want = if never { Verdict::NeverMaximal } else { Verdict::MaximalWitnessExists };
        ensure!(verdict == want, "C{nm}: verdict {verdict}");
        lines.push(format!("C{nm} {s}: {congruent}/{} congruent, {verdict}", vectors.len()));
    }
    Ok(lines.join("; "))
}

/// Gap sets: subsets of [1, 2g-1] of size g whose complement in N is additively closed.
fn naive_gap_count(g: usize) -> usize {
    let top = 2 * g;
    (0u32..1 << (top - 1))
        .filter(|mask| mask.count_ones() as usize == g)
        .filter(|mask| {
            let gap = |k: usize| k >= 1 && k < top && mask >> (k - 1) & 1 == 1;
            (1..top).all(|x| gap(x) || (1..top).all(|y| gap(y) || x + y >= top || !gap(x + y)))
        })
        .count()
}

fn c8_weierstrass() -> Result<String, String> {
    for (g, want) in [(2, 2), (3, 4)] {
        let n = enumerate_gap_sequences(g).map_err(|e| e.to_string())?.len();
        ensure!(n == want, "genus {g}: {n} sequences");
        ensure!(naive_gap_count(g) == want, "genus {g}: naive count {}", naive_gap_count(g));
    }
    for g in 2..=20usize {
        let odd = GapSequence::new(g, (1..2 * g).step_by(2).collect()).map_err(|e| e.to_string())?;
        let w = odd.weight();
        ensure!(w == g * (g - 1) / 2, "genus {g}: weight {w}");
        let total = total_weight(g);
        ensure!(total == (g * g * g - g) as u128, "genus {g}: total weight {total}");
        ensure!(total.is_multiple_of(w as u128) && total / w as u128 == 2 * g as u128 + 2, "genus {g}: ratio");
    }
    Ok("2 and 4 sequences; weight g(g-1)/2 and ratio 2g+2 for g in 2..=20".into())
}

fn table1_small_cases() -> Vec<(Table1Case, u32)> {
    let mut out = Vec::new();
    for p in (2..=113u32).filter(|&p| is_prime(p as u64)) {
        let mut cases: Vec<Table1Case> = (2..=12).map(|m| Table1Case::Cyclic { m }).collect();
        cases.extend((2..=12).map(|m| Table1Case::Dihedral { m }));
        cases.extend([Table1Case::A4, Table1Case::S4]);
        for case in cases {
            if case.check(p).is_ok() && case.action_field(p).is_ok_and(|f| f.size() <= 121) {
                out.push((case, p));
            }
        }
    }
    out
}

fn c9_table1() -> Result<String, String> {
    let cases = table1_small_cases();
    let mut s4_checked = 0;
    for &(case, p) in &cases {
        let f = case.action_field(p).map_err(|e| e.to_string())?;
        let r = verify_case_invariance(case, &f).map_err(|e| format!("{case} p={p}: {e}"))?;
        let n = case.group_order(p) as usize;
        ensure!(r.invariant, "{case} over F_{}: not invariant", f.size());
        ensure!(r.degree == n, "{case} over F_{}: degree {} vs |G| {n}", f.size(), r.degree);
        ensure!(r.generated_order == n, "{case} over F_{}: generators give {}", f.size(), r.generated_order);
        if case == Table1Case::S4 {
            ensure!(r.degree == 24, "S4 degree {}", r.degree);
            s4_checked += 1;
        }
    }
    ensure!(s4_checked > 0, "no S4 case over a field of size <= 121");
    let g3: Vec<Vec<usize>> = vec![vec![1, 1, 1, 1], vec![3, 1, 1], vec![3, 3], vec![5, 1], vec![7]];
    let g4: Vec<Vec<usize>> =
        vec![vec![1, 1, 1, 1, 1], vec![3, 1, 1, 1], vec![3, 3, 1], vec![5, 1, 1], vec![5, 3], vec![7, 1], vec![9]];
    ensure!(char2_ramification_types(3) == g3, "g=3 types {:?}", char2_ramification_types(3));
    ensure!(char2_ramification_types(4) == g4, "g=4 types {:?}", char2_ramification_types(4));
    Ok(format!("{} (case, p) instances invariant with deg = |G|; 5 and 7 char-2 types", cases.len()))
}

fn c10_families() -> Result<String, String> {
    let fams = exceptional_families(3).map_err(|e| e.to_string())?;
    let param =
        |f: &autcurve::signature::ExceptionalFamily, k: &str| f.params.iter().find(|(n, _)| n == k).map(|p| p.1);
    let henn =
        fams.iter().find(|f| f.name == FamilyName::HennI && param(f, "k") == Some(2)).ok_or("Henn-i k=2 missing")?;
    ensure!((henn.genus, henn.group_order) == (2, 160), "Henn-i k=2: ({}, {})", henn.genus, henn.group_order);
    let g = henn.genus as u128;
    ensure!(henn.group_order >= 8 * g.pow(3), "Henn-i below 8g^3");
    let st = fams
        .iter()
        .find(|f| f.name == FamilyName::Stichtenoth && f.characteristic == 3 && param(f, "n") == Some(1))
        .ok_or("Stichtenoth (3,1) missing")?;
    ensure!((st.genus, st.group_order) == (3, 6048), "Stichtenoth (3,1): ({}, {})", st.genus, st.group_order);
    let g = st.genus as u128;
    ensure!(st.group_order >= 16 * g.pow(4), "Stichtenoth below 16g^4");
    for f in &fams {
        let g = f.genus as u128;
        match f.name {
            FamilyName::Stichtenoth => ensure!(f.group_order >= 16 * g.pow(4), "{:?} {:?}", f.name, f.params),
            _ => ensure!(f.group_order >= 8 * g.pow(3), "{:?} {:?}", f.name, f.params),
        }
    }
    Ok("Henn-i k=2 -> (2,160); Stichtenoth (3,1) -> (3,6048); thresholds hold".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, Check, Option<Duration>); 10] = [
        ("genus-2 order-2 classification", c1_genus2_involutions, Some(Duration::from_secs(1))),
        ("counting suite", c2_counting, Some(Duration::from_secs(1))),
        ("character formula vs brute force", c3_character_formula, Some(Duration::from_secs(60))),
        ("maximality of C5 (0;5,5,5)", c4_maximality_c5, Some(Duration::from_secs(5))),
        ("Singerman table", c5_singerman, None),
        ("Hurwitz witness PSL(2,7)", c6_hurwitz, Some(Duration::from_secs(10))),
        ("cyclic congruence C40 / C64", c7_ex_cyclic, Some(Duration::from_secs(5))),
        ("Weierstrass suite", c8_weierstrass, Some(Duration::from_secs(1))),
        ("reduced-group functions and char-2 types", c9_table1, Some(Duration::from_secs(10))),
        ("exceptional families", c10_families, None),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = match (result, limit) {
            (Ok(_), Some(l)) if elapsed > l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!("PASS criterion {:>2} {name} [{elapsed:.2?}]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:>2} {name} [{elapsed:.2?}]: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
