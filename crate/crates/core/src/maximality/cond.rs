//! Vector-level tests for whether an action extends along a table containment.

use super::extension::{extension_search_for, ExtensionOutcome};
use super::singerman::{singerman_overgroups, Overgroup};
use crate::error::{Error, Result};
use crate::group::{Catalog, Elem, FiniteGroup};
use crate::search::{GeneratingVector, SearchOptions};
use crate::signature::Signature;
use serde::Serialize;
use std::cell::RefCell;
use std::collections::HashMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseOutcome {
    Extends,
    DoesNotExtend,
    /// An overgroup exists in the catalog but the element conditions were not
    /// checked, or the search was cut short.
    Undecided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Cond1Case {
    /// `(2;-)`
    GenusTwo,
    /// `(1;t,t)`
    OneTT,
    /// `(1;t)`
    OneT,
    /// `(0;t,t,u,u)`, `t+u > 5`
    TTUU,
}

/// Which non-triangle case applies to a signature, if any.
pub fn cond1_case(sig: &Signature) -> Option<Cond1Case> {
    let p = &sig.periods;
    match (sig.orbit_genus, p.len()) {
        (2, 0) => Some(Cond1Case::GenusTwo),
        (1, 2) if p[0] == p[1] => Some(Cond1Case::OneTT),
        (1, 1) => Some(Cond1Case::OneT),
        (0, 4) if p[0] == p[1] && p[2] == p[3] && p[0] + p[2] > 5 => Some(Cond1Case::TTUU),
        _ => None,
    }
}

/// Evaluates the assignment of the matching non-triangle case on `v`.
pub fn cond1_test(g: &FiniteGroup, v: &GeneratingVector) -> Result<(Cond1Case, bool)> {
    let case = cond1_case(&v.signature)
        .ok_or_else(|| Error::domain(format!("signature {} matches no non-triangle case", v.signature)))?;
    let inv = |x| g.inv(x);
    let m = |a, b| g.mul(a, b);
    let (gens, images): (Vec<Elem>, Vec<Elem>) = match case {
        Cond1Case::GenusTwo => {
            let [(a1, b1), (a2, b2)] = [v.hyperbolic[0], v.hyperbolic[1]];
            let x = m(m(inv(b1), a2), b2);
            let y = m(inv(b1), a2);
            (vec![a1, b1, a2, b2], vec![inv(a1), g.conj(a1, inv(b1)), g.conj(x, inv(a2)), g.conj(y, inv(b2))])
        }
        Cond1Case::OneTT => {
            let (a1, b1) = v.hyperbolic[0];
            let c1 = v.elliptic[0];
            (vec![a1, b1, c1], vec![inv(a1), inv(b1), m(m(inv(m(a1, b1)), inv(c1)), m(b1, a1))])
        }
        Cond1Case::OneT => {
            let (a1, b1) = v.hyperbolic[0];
            (vec![a1, b1], vec![inv(a1), inv(b1)])
        }
        Cond1Case::TTUU => {
            let c = &v.elliptic;
            (c.clone(), vec![c[1], c[0], g.conj(inv(c[0]), c[3]), g.conj(c[1], c[2])])
        }
    };
    Ok((case, g.extends_to_automorphism(&gens, &images)))
}

/// One triangle case evaluated on one ordering of the vector.
#[derive(Clone, Debug, Serialize)]
pub struct Cond2Step {
    pub case: u8,
    /// The vector after reordering, `(c₁, c₂, c₃)`.
    pub ordered: [Elem; 3],
    pub outcome: CaseOutcome,
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Cond2Report {
    pub outcome: CaseOutcome,
    pub steps: Vec<Cond2Step>,
}

/// Caches pair-level extension searches by table case.
pub struct ExtensionOracle<'a> {
    g: &'a FiniteGroup,
    sig: Signature,
    catalog: &'a Catalog,
    opts: SearchOptions,
    cache: RefCell<HashMap<String, ExtensionOutcome>>,
}

impl<'a> ExtensionOracle<'a> {
    pub fn new(g: &'a FiniteGroup, sig: &Signature, catalog: &'a Catalog, opts: SearchOptions) -> Self {
        ExtensionOracle { g, sig: sig.canonical(), catalog, opts, cache: RefCell::new(HashMap::new()) }
    }

    /// Pair-level outcome for the table row `case`.
    pub fn outcome(&self, case: &str) -> Result<ExtensionOutcome> {
        if let Some(o) = self.cache.borrow().get(case) {
            return Ok(o.clone());
        }
        let rows: Vec<Overgroup> =
            singerman_overgroups(&self.sig).into_iter().filter(|o| o.rule.case == case).collect();
        let mut acc = ExtensionOutcome::Absent { relative: false };
        for ov in &rows {
            let r = extension_search_for(self.g, &self.sig, ov, self.catalog, &self.opts)?;
            acc = match (acc, r) {
                (ExtensionOutcome::Found(w), _) | (_, ExtensionOutcome::Found(w)) => ExtensionOutcome::Found(w),
                (ExtensionOutcome::Undecided, _) | (_, ExtensionOutcome::Undecided) => ExtensionOutcome::Undecided,
                (ExtensionOutcome::Absent { relative: a }, ExtensionOutcome::Absent { relative: b }) => {
                    ExtensionOutcome::Absent { relative: a || b }
                }
            };
        }
        self.cache.borrow_mut().insert(case.to_string(), acc.clone());
        Ok(acc)
    }

    /// Outcome when no element-level check is available: absence of any
    /// overgroup settles the case, anything else leaves it open.
    fn delegated(&self, case: &str) -> Result<(CaseOutcome, String)> {
        Ok(match self.outcome(case)? {
            ExtensionOutcome::Found(w) => (
                CaseOutcome::Undecided,
                format!(
                    "{case}: overgroup {} of index {} exists; element conditions not checked",
                    w.overgroup.label(),
                    w.index
                ),
            ),
            ExtensionOutcome::Absent { relative: false } => {
                (CaseOutcome::DoesNotExtend, format!("{case}: no overgroup in the catalog"))
            }
            ExtensionOutcome::Absent { relative: true } => {
                (CaseOutcome::Undecided, format!("{case}: catalog incomplete at the overgroup order"))
            }
            ExtensionOutcome::Undecided => {
                (CaseOutcome::Undecided, format!("{case}: overgroup search hit the node cap"))
            }
        })
    }
}

/// The six orderings of `(c₁, c₂, c₃)` reachable by rotation and one braid
/// move, with the matching period orders.
fn orderings(g: &FiniteGroup, c: [Elem; 3]) -> Vec<[Elem; 3]> {
    let mut out = Vec::with_capacity(6);
    for k in 0..3 {
        let r = [c[k], c[(k + 1) % 3], c[(k + 2) % 3]];
        out.push(r);
        // (c₁, c₂, c₃) ↦ (c₂, c₂⁻¹c₁c₂, c₃)
        out.push([r[1], g.conj(g.inv(r[1]), r[0]), r[2]]);
    }
    out
}

fn closure_index(g: &FiniteGroup, words: &[Elem]) -> usize {
    g.order() / g.normal_closure(words).len()
}

/// Evaluates every applicable triangle case on every ordering of `v`.
///
/// Cases 1, 2 are decided by their assignment. Cases 3 to 8 check the stated
/// normal-closure index, then defer to a catalog search for the overgroup.
pub fn cond2_test(g: &FiniteGroup, v: &GeneratingVector, oracle: &ExtensionOracle<'_>) -> Result<Cond2Report> {
    if !v.signature.is_triangle() {
        return Err(Error::domain(format!("signature {} is not a triangle signature", v.signature)));
    }
    let c = [v.elliptic[0], v.elliptic[1], v.elliptic[2]];
    let ord = |x: Elem| g.elem_order(x);
    let m = |a, b| g.mul(a, b);
    let inv = |x| g.inv(x);
    let pw = |x, k| g.pow(x, k);
    let mut steps: Vec<Cond2Step> = Vec::new();
    let mut push = |case: u8, ordered: [Elem; 3], outcome: CaseOutcome, note: String| {
        if !steps.iter().any(|s| s.case == case && s.ordered == ordered) {
            steps.push(Cond2Step { case, ordered, outcome, note });
        }
    };
    for o in orderings(g, c) {
        let [c1, c2, c3] = o;
        let (m1, m2, m3) = (ord(c1), ord(c2), ord(c3));
        let auto = |images: [Elem; 3]| g.extends_to_automorphism(&o, &images);
        let verdict = |b: bool| if b { CaseOutcome::Extends } else { CaseOutcome::DoesNotExtend };
        if m1 == m2 && m2 == m3 && m1 >= 4 {
            push(1, o, verdict(auto([c2, c3, c1])), "rotation c1->c2->c3->c1".into());
        }
        if m1 == m2 && m1 >= 3 && m1 + m3 >= 7 {
            push(2, o, verdict(auto([c2, c1, g.conj(c2, c3)])), "swap c1<->c2, c3->c2 c3 c2^-1".into());
        }
        let deferred: Option<(u8, &str, Vec<Elem>, usize)> = match (m1, m2, m3) {
            (2, 7, 7) => Some((3, "T2", vec![m(m(m(m(c2, inv(c3)), c2), c1), pw(c3, 3))], 56)),
            (3, 3, 7) => Some((4, "T3", vec![m(m(c2, c1), pw(c3, 2))], 21)),
            (3, 8, 8) => Some((
                5,
                "T5",
                vec![m(m(pw(c2, 2), c1), pw(c3, 2)), m(m(m(m(m(inv(c3), c2), inv(c1)), inv(c2)), c1), inv(c2))],
                72,
            )),
            (4, 4, 5) => Some((6, "T7", vec![m(m(inv(c1), inv(c2)), pw(c3, 2))], 20)),
            (3, n, l) if n >= 3 && l == 3 * n => Some((7, "T10", vec![c2], 3)),
            (2, n, l) if n >= 4 && l == 2 * n => Some((8, "T11", vec![c2], 2)),
            _ => None,
        };
        if let Some((case, row, words, index)) = deferred {
            let k = closure_index(g, &words);
            if k != index {
                push(case, o, CaseOutcome::DoesNotExtend, format!("normal closure has index {k}, not {index}"));
            } else {
                let (out, note) = oracle.delegated(row)?;
                push(case, o, out, note);
            }
        }
    }
    let outcome = if steps.iter().any(|s| s.outcome == CaseOutcome::Extends) {
        CaseOutcome::Extends
    } else if steps.iter().any(|s| s.outcome == CaseOutcome::Undecided) {
        CaseOutcome::Undecided
    } else {
        CaseOutcome::DoesNotExtend
    };
    Ok(Cond2Report { outcome, steps })
}
