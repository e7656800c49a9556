//! Overgroup actions: signatures of finite-index subgroups and the catalog
//! search for extensions.

use super::singerman::{singerman_overgroups, Overgroup};
use crate::error::{Error, Result};
use crate::group::{Catalog, CatalogId, Elem, FiniteGroup, Perm, MAX_ORDER};
use crate::search::{for_each_generating_vector, Completion, GeneratingVector, SearchOptions};
use crate::signature::{Rational, Signature};
use serde::Serialize;

/// Signature of the finite-index subgroup `Γ ≤ Γ₁` that stabilizes a point,
/// given the permutation images of the canonical generators of `Γ₁`
/// (`a₁, b₁, …, c₁, …, c_r`) on the cosets.
///
/// Each cycle of length `ℓ < m_j` in the image of `c_j` contributes the
/// period `m_j / ℓ`; the orbit genus comes from the area relation.
pub fn subgroup_signature(outer: &Signature, perms: &[Perm]) -> Result<Signature> {
    let g0 = outer.orbit_genus;
    if perms.len() != 2 * g0 + outer.r() {
        return Err(Error::param("one permutation per canonical generator is required"));
    }
    let degree = perms.first().map_or(1, Perm::degree);
    if perms.iter().any(|p| p.degree() != degree) {
        return Err(Error::param("permutations have different degrees"));
    }
    if !is_transitive(degree, perms) {
        return Err(Error::domain("the coset action is not transitive"));
    }
    let mut periods = Vec::new();
    for (p, &m) in perms[2 * g0..].iter().zip(&outer.periods) {
        for len in p.cycle_type() {
            if m % len != 0 {
                return Err(Error::Inconsistency(format!("cycle of length {len} for a generator of order {m}")));
            }
            if len < m {
                periods.push(m / len);
            }
        }
    }
    let area = outer.area() * Rational::from_integer(degree as i128);
    let elliptic: Rational = periods.iter().map(|&m| Rational::new(m as i128 - 1, m as i128)).sum();
    let twice = area - elliptic + Rational::from_integer(2);
    if !twice.is_integer() || twice.to_integer() % 2 != 0 || twice.to_integer() < 0 {
        return Err(Error::Inconsistency(format!("non-integral orbit genus {}/2", twice)));
    }
    Signature::new((twice.to_integer() / 2) as usize, periods)
}

fn is_transitive(degree: usize, perms: &[Perm]) -> bool {
    let mut seen = vec![false; degree];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for p in perms {
            let y = p.apply(x);
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == degree
}

/// Permutation images of a vector's entries on the left cosets of `sub`.
pub fn coset_permutations(g: &FiniteGroup, v: &GeneratingVector, sub: &crate::group::ElementSet) -> Vec<Perm> {
    let (_, perms) = g.coset_action(sub);
    v.entries().into_iter().map(|x| perms[x].clone()).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtensionWitness {
    #[serde(serialize_with = "ser_label")]
    pub overgroup: FiniteGroup,
    pub overgroup_id: Option<CatalogId>,
    /// Image of each element of `G` in the overgroup.
    pub inclusion: Vec<Elem>,
    pub outer_signature: Signature,
    pub outer_vector: GeneratingVector,
    pub case: String,
    pub index: usize,
}

fn ser_label<S: serde::Serializer>(g: &FiniteGroup, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(g.label())
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum ExtensionOutcome {
    Found(Box<ExtensionWitness>),
    /// No extension in the catalog. `relative` is set when the catalog is
    /// incomplete at some overgroup order that was needed.
    Absent {
        relative: bool,
    },
    /// The node cap was reached before the search finished.
    Undecided,
}

impl ExtensionOutcome {
    pub fn witness(&self) -> Option<&ExtensionWitness> {
        match self {
            ExtensionOutcome::Found(w) => Some(w),
            _ => None,
        }
    }

    fn merge(self, other: ExtensionOutcome) -> ExtensionOutcome {
        use ExtensionOutcome::*;
        match (self, other) {
            (Found(w), _) | (_, Found(w)) => Found(w),
            (Undecided, _) | (_, Undecided) => Undecided,
            (Absent { relative: a }, Absent { relative: b }) => Absent { relative: a || b },
        }
    }
}

/// Searches the catalog for `G′ ⊇ G` realizing any table containment of `sig`.
pub fn extension_search(
    g: &FiniteGroup,
    sig: &Signature,
    catalog: &Catalog,
    opts: &SearchOptions,
) -> Result<ExtensionOutcome> {
    let mut acc = ExtensionOutcome::Absent { relative: false };
    for ov in singerman_overgroups(sig) {
        acc = acc.merge(extension_search_for(g, sig, &ov, catalog, opts)?);
        if matches!(acc, ExtensionOutcome::Found(_)) {
            break;
        }
    }
    Ok(acc)
}

/// Extension search restricted to one containment.
pub fn extension_search_for(
    g: &FiniteGroup,
    sig: &Signature,
    ov: &Overgroup,
    catalog: &Catalog,
    opts: &SearchOptions,
) -> Result<ExtensionOutcome> {
    let target = g.order() * ov.index;
    if target > MAX_ORDER {
        return Ok(ExtensionOutcome::Absent { relative: true });
    }
    let relative = !catalog.is_complete(target);
    let candidates: Vec<_> = catalog.of_order(target).collect();
    let results =
        opts.exec.map(&candidates, |entry| search_overgroup(g, sig, ov, &entry.group, entry.id, opts.node_cap));
    let mut acc = ExtensionOutcome::Absent { relative };
    for r in results {
        acc = acc.merge(r?);
        if matches!(acc, ExtensionOutcome::Found(_)) {
            break;
        }
    }
    Ok(acc)
}

fn search_overgroup(
    g: &FiniteGroup,
    sig: &Signature,
    ov: &Overgroup,
    big: &FiniteGroup,
    id: CatalogId,
    node_cap: u64,
) -> Result<ExtensionOutcome> {
    // subgroups of the right index isomorphic to G, with the isomorphism
    let mut subs = Vec::new();
    for cls in big.subgroup_classes()? {
        if cls.order != g.order() {
            continue;
        }
        let (h, emb) = big.subgroup_group(cls.representative())?;
        if let Some(iso) = g.find_isomorphism(&h) {
            let inclusion: Vec<Elem> = iso.iter().map(|&x| emb[x]).collect();
            subs.push((cls.representative().clone(), inclusion));
        }
    }
    if subs.is_empty() {
        return Ok(ExtensionOutcome::Absent { relative: false });
    }
    let actions: Vec<Vec<Perm>> = subs.iter().map(|(s, _)| big.coset_action(s).1).collect();
    let outer = ov.outer.canonical();
    let mut found = None;
    let mut err = None;
    let done = for_each_generating_vector(big, &outer, node_cap, |w| {
        for ((_, inclusion), perms) in subs.iter().zip(&actions) {
            let images: Vec<Perm> = w.entries().into_iter().map(|x| perms[x].clone()).collect();
            match subgroup_signature(&outer, &images) {
                Ok(s) if s == *sig => {
                    found = Some(ExtensionWitness {
                        overgroup: big.clone(),
                        overgroup_id: Some(id),
                        inclusion: inclusion.clone(),
                        outer_signature: outer.clone(),
                        outer_vector: w.clone(),
                        case: ov.rule.case.clone(),
                        index: ov.index,
                    });
                    return false;
                }
                Ok(_) => {}
                Err(e) => {
                    err = Some(e);
                    return false;
                }
            }
        }
        true
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    Ok(match (found, done) {
        (Some(w), _) => ExtensionOutcome::Found(Box::new(w)),
        (None, Completion::CapReached) => ExtensionOutcome::Undecided,
        (None, _) => ExtensionOutcome::Absent { relative: false },
    })
}
