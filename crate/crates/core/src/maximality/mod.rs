//! Whether an action can be the full automorphism group of a surface.

mod cond;
mod extension;
mod nonmax;
mod singerman;

pub use cond::{cond1_case, cond1_test, cond2_test, CaseOutcome, Cond1Case, Cond2Report, Cond2Step, ExtensionOracle};
pub use extension::{
    coset_permutations, extension_search, extension_search_for, subgroup_signature, ExtensionOutcome, ExtensionWitness,
};
pub use nonmax::{superelliptic_nonmax_tables, NonmaxCandidate};
pub use singerman::{
    parse_rules, singerman_overgroups, singerman_rules, Binding, Constraint, Overgroup, Pattern, SingermanRule, Term,
};

use crate::error::Result;
use crate::group::{Catalog, FiniteGroup, MAX_ORDER};
use crate::search::{
    count_epimorphism_classes, for_each_generating_vector, Completion, GeneratingVector, SearchOptions,
};
use crate::signature::Signature;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Some generating vector gives a surface with this group as its full
    /// automorphism group.
    MaximalWitnessExists,
    /// Every generating vector extends to a larger group.
    NeverMaximal,
    Undecided,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::MaximalWitnessExists => "maximal-witness-exists",
            Verdict::NeverMaximal => "never-maximal",
            Verdict::Undecided => "undecided",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MaximalityReport {
    pub verdict: Verdict,
    /// Set when some step relied on a catalog order that is not complete.
    pub relative_to_catalog: bool,
    pub vectors_checked: usize,
    /// Whether every vector (up to conjugacy of the first entry) was examined.
    pub exhaustive: bool,
    /// A vector that does not extend, when one was found.
    pub witness: Option<GeneratingVector>,
    pub notes: Vec<String>,
}

/// Outcome for one vector, combining every table row that matches.
pub fn vector_outcome(
    g: &FiniteGroup,
    v: &GeneratingVector,
    oracle: &ExtensionOracle<'_>,
) -> Result<(CaseOutcome, Vec<String>)> {
    let sig = &v.signature;
    if sig.is_triangle() {
        let rep = cond2_test(g, v, oracle)?;
        let notes = rep.steps.iter().map(|s| format!("case {}: {:?} ({})", s.case, s.outcome, s.note)).collect();
        return Ok((rep.outcome, notes));
    }
    let mut outcomes = Vec::new();
    let mut notes = Vec::new();
    let cond1 = cond1_case(sig);
    for ov in singerman_overgroups(sig) {
        let structural = matches!(
            (ov.rule.case.as_str(), cond1),
            ("N1", Some(Cond1Case::GenusTwo))
                | ("N2", Some(Cond1Case::OneTT))
                | ("N3", Some(Cond1Case::OneT))
                | ("N5", Some(Cond1Case::TTUU))
        );
        if structural {
            let (case, ext) = cond1_test(g, v)?;
            outcomes.push(if ext { CaseOutcome::Extends } else { CaseOutcome::DoesNotExtend });
            notes.push(format!(
                "{}: {case:?} assignment {}",
                ov.rule.case,
                if ext { "extends" } else { "does not extend" }
            ));
        } else {
            let (o, note) = delegated_outcome(oracle, &ov.rule.case)?;
            outcomes.push(o);
            notes.push(note);
        }
    }
    Ok((combine(&outcomes), notes))
}

fn delegated_outcome(oracle: &ExtensionOracle<'_>, case: &str) -> Result<(CaseOutcome, String)> {
    Ok(match oracle.outcome(case)? {
        ExtensionOutcome::Found(w) => (
            CaseOutcome::Undecided,
            format!("{case}: overgroup {} exists; vector-level check not available", w.overgroup.label()),
        ),
        ExtensionOutcome::Absent { relative: false } => (CaseOutcome::DoesNotExtend, format!("{case}: no overgroup")),
        ExtensionOutcome::Absent { relative: true } => {
            (CaseOutcome::Undecided, format!("{case}: catalog incomplete at the overgroup order"))
        }
        ExtensionOutcome::Undecided => (CaseOutcome::Undecided, format!("{case}: overgroup search hit the node cap")),
    })
}

fn combine(outcomes: &[CaseOutcome]) -> CaseOutcome {
    if outcomes.contains(&CaseOutcome::Extends) {
        CaseOutcome::Extends
    } else if outcomes.contains(&CaseOutcome::Undecided) {
        CaseOutcome::Undecided
    } else {
        CaseOutcome::DoesNotExtend
    }
}

/// Decides maximality of `(G, sig)` by examining generating vectors.
///
/// Signatures outside the table are always maximal. Otherwise a vector that
/// does not extend proves a maximal action exists; if all vectors extend the
/// group is never maximal.
pub fn maximality_verdict(
    g: &FiniteGroup,
    sig: &Signature,
    catalog: &Catalog,
    opts: &SearchOptions,
) -> Result<MaximalityReport> {
    let sig = sig.canonical();
    let overgroups = singerman_overgroups(&sig);
    let relative_to_catalog = overgroups.iter().any(|o| {
        let n = o.index * g.order();
        n > MAX_ORDER || !catalog.is_complete(n)
    });
    if overgroups.is_empty() {
        return Ok(MaximalityReport {
            verdict: Verdict::MaximalWitnessExists,
            relative_to_catalog: false,
            vectors_checked: 0,
            exhaustive: true,
            witness: None,
            notes: vec![format!("{sig} is finitely maximal")],
        });
    }
    let oracle = ExtensionOracle::new(g, &sig, catalog, *opts);
    let mut checked = 0usize;
    let mut any_undecided = false;
    let mut witness = None;
    let mut notes = Vec::new();
    let mut err = None;
    let done = for_each_generating_vector(g, &sig, opts.node_cap, |v| {
        checked += 1;
        match vector_outcome(g, v, &oracle) {
            Ok((CaseOutcome::DoesNotExtend, n)) => {
                witness = Some(v.clone());
                notes = n;
                false
            }
            Ok((CaseOutcome::Undecided, n)) => {
                if !any_undecided {
                    notes = n;
                }
                any_undecided = true;
                true
            }
            Ok((CaseOutcome::Extends, _)) => true,
            Err(e) => {
                err = Some(e);
                false
            }
        }
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    let exhaustive = done != Completion::CapReached;
    let verdict = if witness.is_some() {
        Verdict::MaximalWitnessExists
    } else if checked == 0 || any_undecided || !exhaustive {
        Verdict::Undecided
    } else {
        Verdict::NeverMaximal
    };
    if checked == 0 {
        notes.push("no generating vector".into());
    }
    Ok(MaximalityReport { verdict, relative_to_catalog, vectors_checked: checked, exhaustive, witness, notes })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SurfaceCount {
    Exact {
        count: u128,
    },
    /// The fusion pattern did not apply; the true count lies in the range.
    Undecided {
        lower: u128,
        upper: u128,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct FuseReport {
    pub class_count: u128,
    pub count: SurfaceCount,
    pub trace: Vec<String>,
}

/// Surfaces with a `(G, sig)` action up to conformal equivalence, for a
/// triangle signature.
///
/// Starts from the epimorphism classes. A normal table containment of prime
/// index `k` into which `G` does not extend acts on the classes without
/// fixed points, so it fuses them in orbits of size `k`. Only the case where
/// this collapses everything to one surface is reported exactly.
pub fn fuse_surface_count(
    g: &FiniteGroup,
    sig: &Signature,
    catalog: &Catalog,
    opts: &SearchOptions,
) -> Result<FuseReport> {
    if !sig.is_triangle() {
        return Err(crate::Error::domain(format!("{sig} is not a triangle signature")));
    }
    let classes = count_epimorphism_classes(g, sig)?;
    let mut trace = vec![format!("{classes} epimorphism classes")];
    let exact = |count, trace| Ok(FuseReport { class_count: classes, count: SurfaceCount::Exact { count }, trace });
    if classes <= 1 {
        trace.push("nothing to fuse".into());
        return exact(classes, trace);
    }
    let overgroups = singerman_overgroups(sig);
    if overgroups.is_empty() {
        trace.push(format!("{sig} is finitely maximal: classes are distinct surfaces"));
        return exact(classes, trace);
    }
    let mut upper = classes;
    for ov in overgroups.iter().filter(|o| o.rule.normal && is_prime(o.index)) {
        let k = ov.index as u128;
        match extension_search_for(g, sig, ov, catalog, opts)? {
            ExtensionOutcome::Absent { relative: false } => {
                if classes % k == 0 {
                    trace.push(format!(
                        "{}: G has no extension with signature {}, so orbits of the index-{k} quotient have size {k}",
                        ov.rule.case, ov.outer
                    ));
                    upper = upper.min(classes / k);
                } else {
                    trace.push(format!("{}: {classes} classes not divisible by {k}", ov.rule.case));
                }
            }
            ExtensionOutcome::Found(_) => {
                trace.push(format!("{}: G extends, no fusion from this containment", ov.rule.case))
            }
            _ => trace.push(format!("{}: extension search inconclusive", ov.rule.case)),
        }
    }
    if upper == 1 {
        return exact(1, trace);
    }
    trace.push("fusion pattern does not settle the count".into());
    Ok(FuseReport { class_count: classes, count: SurfaceCount::Undecided { lower: 1, upper }, trace })
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}
