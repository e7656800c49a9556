//! Regenerates `data/catalog.jsonl`.
//!
//! Every group is constructed structurally, checked against the reference
//! count for its order, and written as the regular representation on a
//! small generating set.
//!
//! ```text
//! cargo run -p autcurve --example build_catalog > crates/core/data/catalog.jsonl
//! ```

use autcurve::group::catalog::{reference_group_count, CatalogLine};
use autcurve::group::presented::{CyclicExtension, Relation};
use autcurve::group::{semidirect, FiniteGroup, Standard};
use autcurve::Result;

fn std(s: Standard) -> Result<FiniteGroup> {
    s.build()
}

fn c(n: usize) -> Standard {
    Standard::Cyclic(n)
}

fn d(order: usize) -> Standard {
    Standard::Dihedral(order)
}

fn ab(parts: &[usize]) -> Standard {
    Standard::Abelian(parts.to_vec())
}

fn x(a: Standard, b: Standard) -> Standard {
    Standard::DirectProduct(Box::new(a), Box::new(b))
}

fn meta(n: usize, m: usize, k: usize) -> Standard {
    Standard::Semidirect { n, m, k }
}

/// `N ⋊ H` where the generators of `H` act by the automorphisms sending the
/// generators of `N` to the given images.
fn sd(n: &FiniteGroup, h: &FiniteGroup, n_gens: &[usize], actions: &[(usize, Vec<usize>)]) -> Result<FiniteGroup> {
    let h_gens: Vec<usize> = actions.iter().map(|a| a.0).collect();
    let auts: Vec<Vec<usize>> =
        actions.iter().map(|(_, imgs)| n.extend_hom(n_gens, n, imgs).expect("valid automorphism")).collect();
    semidirect(n, h, &h_gens, &auts)
}

/// Element index of `(a, b)` in `Abelian([p, q])`.
fn pair(q: usize, a: usize, b: usize) -> usize {
    a * q + b
}

fn gl23() -> Result<FiniteGroup> {
    let mul = |a: &[u8; 4], b: &[u8; 4]| {
        [
            (a[0] * b[0] + a[1] * b[2]) % 3,
            (a[0] * b[1] + a[1] * b[3]) % 3,
            (a[2] * b[0] + a[3] * b[2]) % 3,
            (a[2] * b[1] + a[3] * b[3]) % 3,
        ]
    };
    FiniteGroup::from_closure([1, 0, 0, 1], &[[1, 1, 0, 1], [0, 2, 1, 0], [2, 0, 0, 1]], mul, "GL(2,3)")
}

fn binary_octahedral() -> Result<FiniteGroup> {
    let rels = vec![
        Relation { word: vec![(1, 2)], r_power: 1 },
        Relation { word: vec![(2, 3)], r_power: 1 },
        Relation { word: vec![(1, 1), (2, 1), (1, 1), (2, 1), (1, 1), (2, 1), (1, 1), (2, 1)], r_power: 1 },
    ];
    let ext = CyclicExtension {
        n: 2,
        quotient: Standard::Symmetric(4).build()?,
        names: vec!["s".into(), "t".into()],
        action: vec![1, 1],
        relations: rels,
    };
    Ok(ext.build("binary octahedral")?.group)
}

/// `(C4 x C4) ⋊ S3`: S3 permuting the coordinates of `(Z/4)^3 / diagonal`.
fn fermat_quartic_group() -> Result<FiniteGroup> {
    let n = std(ab(&[4, 4]))?;
    let s3 = std(d(6))?;
    let (e1, e2) = (pair(4, 1, 0), pair(4, 0, 1));
    // r (index 1) rotates the coordinates, s (index 3) swaps the first two
    sd(&n, &s3, &[e1, e2], &[(1, vec![e2, pair(4, 3, 3)]), (3, vec![e2, e1])])
}

fn entries() -> Result<Vec<(usize, usize, String, FiniteGroup)>> {
    let mut out: Vec<(usize, usize, String, FiniteGroup)> = Vec::new();
    let mut add = |order: usize, index: usize, label: &str, g: FiniteGroup| {
        assert_eq!(g.order(), order, "{label}");
        out.push((order, index, label.to_string(), g));
    };
    for n in [1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        add(n, 1, &format!("C{n}"), std(c(n))?);
    }
    add(4, 1, "C4", std(c(4))?);
    add(4, 2, "C2 x C2", std(ab(&[2, 2]))?);
    add(6, 1, "S3", std(d(6))?);
    add(6, 2, "C6", std(c(6))?);
    add(8, 1, "C8", std(c(8))?);
    add(8, 2, "C4 x C2", std(ab(&[4, 2]))?);
    add(8, 3, "D8", std(d(8))?);
    add(8, 4, "Q8", std(Standard::Dicyclic(8))?);
    add(8, 5, "C2 x C2 x C2", std(ab(&[2, 2, 2]))?);
    add(9, 1, "C9", std(c(9))?);
    add(9, 2, "C3 x C3", std(ab(&[3, 3]))?);
    for p in [5, 7, 11, 13] {
        add(2 * p, 1, &format!("D{}", 2 * p), std(d(2 * p))?);
        add(2 * p, 2, &format!("C{}", 2 * p), std(c(2 * p))?);
    }
    add(12, 1, "Dic3", std(Standard::Dicyclic(12))?);
    add(12, 2, "C12", std(c(12))?);
    add(12, 3, "A4", std(Standard::Alternating(4))?);
    add(12, 4, "D12", std(d(12))?);
    add(12, 5, "C6 x C2", std(ab(&[6, 2]))?);
    add(15, 1, "C15", std(c(15))?);

    let c4c2 = std(ab(&[4, 2]))?;
    let c2 = std(c(2))?;
    let (a, b) = (pair(2, 1, 0), pair(2, 0, 1));
    add(16, 1, "C16", std(c(16))?);
    add(16, 2, "C4 x C4", std(ab(&[4, 4]))?);
    add(16, 3, "(C4 x C2) : C2", sd(&c4c2, &c2, &[a, b], &[(1, vec![pair(2, 1, 1), b])])?);
    add(16, 4, "C4 : C4", std(meta(4, 4, 3))?);
    add(16, 5, "C8 x C2", std(ab(&[8, 2]))?);
    add(16, 6, "C8 :5 C2", std(meta(8, 2, 5))?);
    add(16, 7, "D16", std(d(16))?);
    add(16, 8, "QD16", std(meta(8, 2, 3))?);
    add(16, 9, "Q16", std(Standard::Dicyclic(16))?);
    add(16, 10, "C4 x C2 x C2", std(ab(&[4, 2, 2]))?);
    add(16, 11, "C2 x D8", std(x(c(2), d(8)))?);
    add(16, 12, "C2 x Q8", std(x(c(2), Standard::Dicyclic(8)))?);
    add(16, 13, "C4 o D8", sd(&c4c2, &c2, &[a, b], &[(1, vec![a, pair(2, 2, 1)])])?);
    add(16, 14, "C2^4", std(ab(&[2, 2, 2, 2]))?);

    let c3c3 = std(ab(&[3, 3]))?;
    let (u, v) = (pair(3, 1, 0), pair(3, 0, 1));
    let inv = |g: &FiniteGroup, e: usize| g.inv(e);
    add(18, 1, "D18", std(d(18))?);
    add(18, 2, "C18", std(c(18))?);
    add(18, 3, "C3 x S3", std(x(c(3), d(6)))?);
    add(18, 4, "(C3 x C3) : C2", sd(&c3c3, &c2, &[u, v], &[(1, vec![inv(&c3c3, u), inv(&c3c3, v)])])?);
    add(18, 5, "C6 x C3", std(ab(&[6, 3]))?);

    add(20, 1, "Dic5", std(Standard::Dicyclic(20))?);
    add(20, 2, "C20", std(c(20))?);
    add(20, 3, "C5 : C4", std(meta(5, 4, 2))?);
    add(20, 4, "D20", std(d(20))?);
    add(20, 5, "C10 x C2", std(ab(&[10, 2]))?);
    add(21, 1, "C7 : C3", std(meta(7, 3, 2))?);
    add(21, 2, "C21", std(c(21))?);

    let d8 = std(d(8))?;
    // D8 elements: r = 1, s = 4; r inverts C3, s centralizes it (kernel <r^2, s>)
    let c3 = std(c(3))?;
    add(24, 1, "C3 : C8", std(meta(3, 8, 2))?);
    add(24, 2, "C24", std(c(24))?);
    add(24, 3, "SL(2,3)", std(Standard::Sl2(3))?);
    add(24, 4, "Dic6", std(Standard::Dicyclic(24))?);
    add(24, 5, "C4 x S3", std(x(c(4), d(6)))?);
    add(24, 6, "D24", std(d(24))?);
    add(24, 7, "C2 x Dic3", std(x(c(2), Standard::Dicyclic(12)))?);
    add(24, 8, "C3 : D8", sd(&c3, &d8, &[1], &[(1, vec![2]), (4, vec![1])])?);
    add(24, 9, "C12 x C2", std(ab(&[12, 2]))?);
    add(24, 10, "C3 x D8", std(x(c(3), d(8)))?);
    add(24, 11, "C3 x Q8", std(x(c(3), Standard::Dicyclic(8)))?);
    add(24, 12, "S4", std(Standard::Symmetric(4))?);
    add(24, 13, "C2 x A4", std(x(c(2), Standard::Alternating(4)))?);
    add(24, 14, "C2 x C2 x S3", std(x(ab(&[2, 2]), d(6)))?);
    add(24, 15, "C6 x C2 x C2", std(ab(&[6, 2, 2]))?);

    add(25, 1, "C25", std(c(25))?);
    add(25, 2, "C5 x C5", std(ab(&[5, 5]))?);
    add(27, 1, "C27", std(c(27))?);
    add(27, 2, "C9 x C3", std(ab(&[9, 3]))?);
    add(27, 3, "He3", sd(&c3c3, &c3, &[u, v], &[(1, vec![c3c3.mul(u, v), v])])?);
    add(27, 4, "C9 : C3", std(meta(9, 3, 4))?);
    add(27, 5, "C3 x C3 x C3", std(ab(&[3, 3, 3]))?);
    add(28, 1, "Dic7", std(Standard::Dicyclic(28))?);
    add(28, 2, "C28", std(c(28))?);
    add(28, 3, "D28", std(d(28))?);
    add(28, 4, "C14 x C2", std(ab(&[14, 2]))?);
    add(30, 1, "C5 x S3", std(x(c(5), d(6)))?);
    add(30, 2, "C3 x D10", std(x(c(3), d(10)))?);
    add(30, 3, "D30", std(d(30))?);
    add(30, 4, "C30", std(c(30))?);

    add(36, 11, "C3 x A4", std(x(c(3), Standard::Alternating(4)))?);
    add(36, 12, "C6 x S3", std(x(c(6), d(6)))?);
    add(48, 28, "binary octahedral", binary_octahedral()?);
    add(48, 29, "GL(2,3)", gl23()?);
    add(48, 48, "C2 x S4", std(x(c(2), Standard::Symmetric(4)))?);
    add(60, 5, "A5", std(Standard::Alternating(5))?);
    add(72, 42, "C3 x S4", std(x(c(3), Standard::Symmetric(4)))?);
    add(96, 64, "(C4 x C4) : S3", fermat_quartic_group()?);
    add(120, 5, "SL(2,5)", std(Standard::Sl2(5))?);
    add(120, 34, "S5", std(Standard::Symmetric(5))?);
    add(120, 35, "C2 x A5", std(x(c(2), Standard::Alternating(5)))?);
    add(168, 42, "PSL(2,7)", std(Standard::Psl2(7))?);
    out.sort_by_key(|e| (e.0, e.1));
    Ok(out)
}

fn main() -> Result<()> {
    let entries = entries()?;
    let complete_up_to = 31;
    for n in 1..=complete_up_to {
        let count = entries.iter().filter(|e| e.0 == n).count();
        assert_eq!(Some(count), reference_group_count(n), "order {n}");
    }
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[i + 1..] {
            if a.0 == b.0 {
                assert!(!a.3.is_isomorphic(&b.3), "{} and {} are isomorphic", a.2, b.2);
            }
        }
    }
    for (order, index, label, g) in entries {
        let generators =
            g.small_generating_set().into_iter().map(|s| g.elements().map(|e| g.mul(e, s) as u32).collect()).collect();
        let line = CatalogLine {
            order,
            index,
            label,
            generators,
            complete_order: order <= complete_up_to,
            source: if order <= complete_up_to { "structural; complete order" } else { "structural" }.into(),
        };
        println!("{}", serde_json::to_string(&line).expect("serializable"));
    }
    Ok(())
}
