//! Superelliptic curves: invariant functions of reduced groups over finite
//! fields, cyclic-cover genera, characteristic-2 hyperelliptic data and the
//! genus 3/4 group lists.

pub mod field;
pub mod poly;
pub mod table1;

pub use field::{Field, FieldInfo, Fq};
pub use poly::{Mobius, Poly, RationalFunction};
pub use table1::{
    ramified_fibers, stabilizer, table1_function, table1_generators, verify_case_invariance, verify_invariance,
    verify_ramification, Fiber, InvarianceReport, RamificationReport, Table1Case,
};

use crate::error::{Error, Result};
use crate::group::{Catalog, CatalogId, Elem, ElementSet, FiniteGroup, Standard};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::OnceLock;

/// Reduced automorphism group of a superelliptic curve: a finite subgroup of
/// `PGL(2, k)` in characteristic zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ReducedKind {
    /// `C_m`.
    Cyclic(usize),
    /// Dihedral of order `2m`.
    Dihedral(usize),
    A4,
    S4,
    A5,
}

impl fmt::Display for ReducedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReducedKind::Cyclic(m) => write!(f, "C{m}"),
            ReducedKind::Dihedral(m) => write!(f, "D{}", 2 * m),
            ReducedKind::A4 => write!(f, "A4"),
            ReducedKind::S4 => write!(f, "S4"),
            ReducedKind::A5 => write!(f, "A5"),
        }
    }
}

/// Parses `"p"` or `"p^s"`.
pub fn parse_field(spec: &str) -> Result<Field> {
    let spec = spec.trim();
    let (p, s) = match spec.split_once('^') {
        Some((p, s)) => (p.trim(), s.trim()),
        None => (spec, "1"),
    };
    let p: u32 = p.parse().map_err(|_| Error::parse(format!("bad field characteristic {p:?}")))?;
    let s: u32 = s.parse().map_err(|_| Error::parse(format!("bad field degree {s:?}")))?;
    Field::new(p, s)
}

/// `y^n = Π (x − a_i)^{n_i}` up to the choice of the `a_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicCurveData {
    pub n: usize,
    pub exponents: Vec<usize>,
    /// Characteristic, 0 allowed.
    pub characteristic: usize,
}

impl CyclicCurveData {
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if n < 2 {
            return Err(Error::param("n must be at least 2"));
        }
        if self.exponents.is_empty() {
            return Err(Error::param("at least one branch point is needed"));
        }
        if let Some(&bad) = self.exponents.iter().find(|&&e| e == 0 || e >= n) {
            return Err(Error::param(format!("exponent {bad} is not in (0, {n})")));
        }
        if self.exponents.iter().sum::<usize>() % n != 0 {
            return Err(Error::param(format!("{n} does not divide the exponent sum")));
        }
        if self.exponents.iter().fold(0, |g, &e| num_integer::gcd(g, e)) != 1 {
            return Err(Error::param("the exponents have a common factor"));
        }
        let p = self.characteristic;
        if p > 0 && n.is_multiple_of(p) {
            return Err(Error::Unsupported(format!("characteristic {p} divides n = {n}: the cover is inseparable")));
        }
        Ok(())
    }

    /// Ramification index `n / gcd(n, n_i)` at each branch point.
    pub fn ramification(&self) -> Vec<usize> {
        self.exponents.iter().map(|&e| self.n / num_integer::gcd(self.n, e)).collect()
    }
}

/// Genus of the normalization, by Riemann–Hurwitz over the `x`-line.
pub fn cyclic_curve_genus(d: &CyclicCurveData) -> Result<usize> {
    d.validate()?;
    let n = d.n as i64;
    // d_i points with index e_i over a_i contribute n − d_i
    let r: i64 = d.exponents.iter().map(|&e| n - num_integer::gcd(d.n, e) as i64).sum();
    let two_g_minus_two = -2 * n + r;
    Ok(((two_g_minus_two + 2) / 2) as usize)
}

/// Odd pole orders `n_a` with `Σ (n_a + 1) = 2g + 2`, each tuple descending,
/// the list in lexicographic order.
pub fn char2_ramification_types(g: usize) -> Vec<Vec<usize>> {
    fn parts(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.iter().map(|k| 2 * k - 1).collect());
            return;
        }
        for k in (1..=max.min(rest)).rev() {
            cur.push(k);
            parts(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    parts(g + 1, g + 1, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[derive(Deserialize)]
struct ListsFile {
    lists: Vec<ListRow>,
    char2: Vec<Char2Row>,
}

#[derive(Deserialize)]
struct ListRow {
    genus: usize,
    characteristic: String,
    groups: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct Char2Row {
    genus: usize,
    groups: Vec<String>,
}

fn lists() -> &'static ListsFile {
    static LISTS: OnceLock<ListsFile> = OnceLock::new();
    LISTS.get_or_init(|| {
        serde_json::from_str(include_str!("../../data/superelliptic_lists.json")).expect("bundled lists are valid")
    })
}

/// Automorphism groups of genus 3 and 4 hyperelliptic curves in characteristic 2.
pub fn char2_hyperelliptic_groups(g: usize) -> Result<Vec<String>> {
    lists()
        .char2
        .iter()
        .find(|r| r.genus == g)
        .map(|r| r.groups.clone())
        .ok_or_else(|| Error::Unsupported(format!("characteristic-2 groups are tabulated for genus 3 and 4, not {g}")))
}

/// Small-group ids of automorphism groups of genus 3 and 4 superelliptic
/// curves in characteristic `p` (0 or a prime). Order is kept, repeats included.
pub fn genus34_superelliptic_lists(g: usize, p: usize) -> Result<Vec<(usize, usize)>> {
    if g != 3 && g != 4 {
        return Err(Error::Unsupported(format!("lists are tabulated for genus 3 and 4, not {g}")));
    }
    if p == 2 {
        return Err(Error::Unsupported("characteristic 2 is covered by the Artin–Schreier lists".into()));
    }
    if p != 0 && !field::is_prime(p as u64) {
        return Err(Error::param(format!("{p} is neither 0 nor a prime")));
    }
    let key = if p == 0 || p >= 11 { "0".to_string() } else { p.to_string() };
    Ok(lists()
        .lists
        .iter()
        .find(|r| r.genus == g && r.characteristic == key)
        .expect("every bucket is tabulated")
        .groups
        .clone())
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolvedIds {
    pub resolved: Vec<(CatalogId, String)>,
    pub unresolved: Vec<(usize, usize)>,
}

/// Looks up small-group ids in the catalog; ids not bundled are reported.
pub fn resolve_group_ids(ids: &[(usize, usize)], catalog: &Catalog) -> ResolvedIds {
    let mut out = ResolvedIds { resolved: Vec::new(), unresolved: Vec::new() };
    for &(order, index) in ids {
        let id = CatalogId { order, index };
        match catalog.get(id) {
            Some(e) => out.resolved.push((id, e.label.clone())),
            None => out.unresolved.push((order, index)),
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum QuotientKind {
    Reduced(ReducedKind),
    /// Not a finite subgroup of `PGL(2, ℂ)`.
    Other {
        order: usize,
        catalog_id: Option<CatalogId>,
    },
}

impl fmt::Display for QuotientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientKind::Reduced(k) => write!(f, "{k}"),
            QuotientKind::Other { order, catalog_id: Some(id) } => write!(f, "order {order} {id}"),
            QuotientKind::Other { order, catalog_id: None } => write!(f, "order {order}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReducedGroup {
    pub quotient: FiniteGroup,
    pub kind: QuotientKind,
    /// Generator of the designated cyclic subgroup.
    pub generator: Elem,
    pub central: bool,
}

/// Classifies a group against the finite subgroups of `PGL(2, ℂ)`.
pub fn classify_reduced(q: &FiniteGroup, catalog: &Catalog) -> Result<QuotientKind> {
    let n = q.order();
    let iso = |s: Standard| -> Result<bool> { Ok(q.is_isomorphic(&s.build()?)) };
    let kind = if q.elements().any(|x| q.elem_order(x) == n) {
        Some(ReducedKind::Cyclic(n))
    } else if n.is_multiple_of(2) && iso(Standard::Dihedral(n))? {
        Some(ReducedKind::Dihedral(n / 2))
    } else if n == 12 && iso(Standard::Alternating(4))? {
        Some(ReducedKind::A4)
    } else if n == 24 && iso(Standard::Symmetric(4))? {
        Some(ReducedKind::S4)
    } else if n == 60 && iso(Standard::Alternating(5))? {
        Some(ReducedKind::A5)
    } else {
        None
    };
    Ok(match kind {
        Some(k) => QuotientKind::Reduced(k),
        None => QuotientKind::Other { order: n, catalog_id: catalog.identify(q) },
    })
}

/// `G / ⟨x⟩` for an element generating a normal subgroup.
pub fn reduced_group_by(g: &FiniteGroup, x: Elem, catalog: &Catalog) -> Result<ReducedGroup> {
    let sub: ElementSet = g.generated(&[x]);
    if !g.is_normal(&sub) {
        return Err(Error::domain(format!("the subgroup of order {} is not normal", g.elem_order(x))));
    }
    let central = sub.iter().all(|h| g.elements().all(|y| g.mul(h, y) == g.mul(y, h)));
    let (quotient, _) = g.quotient(&sub)?;
    let kind = classify_reduced(&quotient, catalog)?;
    Ok(ReducedGroup { quotient, kind, generator: x, central })
}

/// `G / C_n` for a normal cyclic subgroup of order `n`, preferring a
/// central one when several exist.
pub fn reduced_group(g: &FiniteGroup, n: usize, catalog: &Catalog) -> Result<ReducedGroup> {
    let cands = g.elements_of_order(n);
    if cands.is_empty() {
        return Err(Error::domain(format!("no element of order {n}")));
    }
    let mut normal = Vec::new();
    for &x in &cands {
        let sub = g.generated(&[x]);
        if g.is_normal(&sub) {
            normal.push(x);
        }
    }
    let center = g.center();
    let pick = normal.iter().find(|&&x| center.contains(x)).or(normal.first());
    match pick {
        Some(&x) => reduced_group_by(g, x, catalog),
        None => Err(Error::domain(format!("no cyclic subgroup of order {n} is normal"))),
    }
}
