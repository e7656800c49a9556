//! Generating vectors: backtracking search, enumeration and counting.

mod count;

pub use count::{
    count_epimorphism_classes, count_epimorphisms, count_torsion_free_homs, count_torsion_free_homs_character,
};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::group::{Elem, ElementSet, FiniteGroup};
use crate::signature::Signature;
use serde::ser::SerializeStruct;
use serde::Serialize;
use std::sync::atomic::{AtomicBool, Ordering};

/// Default cap on search nodes, per top-level branch.
pub const DEFAULT_NODE_CAP: u64 = 100_000_000;

/// `(a₁, b₁, …, a_{g₀}, b_{g₀}; c₁, …, c_r)` with `Π[a_i, b_i] · Π c_j = 1`,
/// `ord(c_j) = m_j`, generating the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingVector {
    /// The signature with periods in the order of `elliptic`.
    pub signature: Signature,
    pub hyperbolic: Vec<(Elem, Elem)>,
    pub elliptic: Vec<Elem>,
}

impl Serialize for GeneratingVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GeneratingVector", 3)?;
        st.serialize_field("a", &self.hyperbolic.iter().map(|p| p.0).collect::<Vec<_>>())?;
        st.serialize_field("b", &self.hyperbolic.iter().map(|p| p.1).collect::<Vec<_>>())?;
        st.serialize_field("c", &self.elliptic)?;
        st.end()
    }
}

impl GeneratingVector {
    /// All entries, hyperbolic pairs first.
    pub fn entries(&self) -> Vec<Elem> {
        self.hyperbolic.iter().flat_map(|&(a, b)| [a, b]).chain(self.elliptic.iter().copied()).collect()
    }

    /// `Π[a_i, b_i] · Π c_j`.
    pub fn long_relation(&self, g: &FiniteGroup) -> Elem {
        let comm = self.hyperbolic.iter().fold(0, |acc, &(a, b)| g.mul(acc, g.commutator(a, b)));
        self.elliptic.iter().fold(comm, |acc, &c| g.mul(acc, c))
    }

    /// Checks the three defining properties.
    pub fn validate(&self, g: &FiniteGroup) -> Result<()> {
        if self.hyperbolic.len() != self.signature.orbit_genus || self.elliptic.len() != self.signature.r() {
            return Err(Error::Validation("vector shape does not match the signature".into()));
        }
        if self.entries().iter().any(|&x| x >= g.order()) {
            return Err(Error::Validation("entry outside the group".into()));
        }
        for (j, (&c, &m)) in self.elliptic.iter().zip(&self.signature.periods).enumerate() {
            if g.elem_order(c) != m {
                return Err(Error::Validation(format!("c{} has order {}, expected {m}", j + 1, g.elem_order(c))));
            }
        }
        if self.long_relation(g) != 0 {
            return Err(Error::Validation("the long relation fails".into()));
        }
        if !g.generates(&self.entries()) {
            return Err(Error::Validation("the entries do not generate the group".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Node cap per top-level branch.
    pub node_cap: u64,
    pub exec: Exec,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { node_cap: DEFAULT_NODE_CAP, exec: Exec::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(GeneratingVector),
    Absent,
    /// The node cap was reached before a vector was found.
    Undecided,
}

impl SearchOutcome {
    pub fn found(self) -> Option<GeneratingVector> {
        match self {
            SearchOutcome::Found(v) => Some(v),
            _ => None,
        }
    }
}

/// Whether enumeration ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Completion {
    Exhausted,
    Stopped,
    CapReached,
}

/// Precomputed candidate lists and reachability sets.
///
/// Positions are searched in the order `c₁, …, c_r, (a₁, b₁), …`, using the
/// rotated relation `Π c_j · Π[a_i, b_i] = 1`.
struct Plan<'a> {
    g: &'a FiniteGroup,
    sig: Signature,
    cands: Vec<Vec<Elem>>,
    /// `reach[j]`: products attainable by positions `j..` (elliptic then hyperbolic).
    reach: Vec<ElementSet>,
    /// `comm_reach[t]`: products of `t` commutators.
    comm_reach: Vec<ElementSet>,
}

fn product_set(g: &FiniteGroup, a: &[Elem], b: &ElementSet) -> ElementSet {
    let mut out = ElementSet::empty(g.order());
    let bs = b.to_vec();
    for &x in a {
        for &y in &bs {
            out.insert(g.mul(x, y));
        }
    }
    out
}

impl<'a> Plan<'a> {
    fn new(g: &'a FiniteGroup, sig: &Signature) -> Option<Self> {
        let n = g.order();
        let cands: Vec<Vec<Elem>> = sig.periods.iter().map(|&m| g.elements_of_order(m)).collect();
        if cands.iter().any(|c| c.is_empty()) {
            return None;
        }
        let commutators: Vec<Elem> = {
            let mut s = ElementSet::empty(n);
            for a in g.elements() {
                for b in g.elements() {
                    s.insert(g.commutator(a, b));
                }
            }
            s.to_vec()
        };
        let mut comm_reach = vec![ElementSet::from_iter(n, [0])];
        for t in 1..=sig.orbit_genus {
            let next = product_set(g, &commutators, &comm_reach[t - 1]);
            comm_reach.push(next);
        }
        let r = sig.r();
        let mut reach = vec![ElementSet::empty(n); r + 1];
        reach[r] = comm_reach[sig.orbit_genus].clone();
        for j in (0..r).rev() {
            reach[j] = product_set(g, &cands[j], &reach[j + 1]);
        }
        if !reach[0].contains(0) {
            return None;
        }
        Some(Plan { g, sig: sig.clone(), cands, reach, comm_reach })
    }

    /// Candidates for the first searched position, up to conjugation.
    fn first_choices(&self) -> Vec<Elem> {
        let g = self.g;
        if self.sig.r() > 0 {
            self.cands[0].iter().copied().filter(|&x| g.is_class_rep(x)).collect()
        } else {
            g.elements().filter(|&x| g.is_class_rep(x)).collect()
        }
    }
}

struct Dfs<'p, 'a, F: FnMut(&GeneratingVector) -> bool> {
    plan: &'p Plan<'a>,
    nodes: u64,
    cap: u64,
    elliptic: Vec<Elem>,
    hyperbolic: Vec<(Elem, Elem)>,
    visit: F,
}

enum Flow {
    Continue,
    Stop,
    Cap,
}

impl<'p, 'a, F: FnMut(&GeneratingVector) -> bool> Dfs<'p, 'a, F> {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.nodes > self.cap
    }

    fn leaf(&mut self) -> Flow {
        let v = GeneratingVector {
            signature: self.plan.sig.clone(),
            hyperbolic: self.hyperbolic.clone(),
            elliptic: self.elliptic.clone(),
        };
        if self.plan.g.generates(&v.entries()) && !(self.visit)(&v) {
            return Flow::Stop;
        }
        Flow::Continue
    }

    /// `prod` is the product of the entries chosen so far.
    fn elliptic_from(&mut self, j: usize, prod: Elem) -> Flow {
        let plan = self.plan;
        let g = plan.g;
        if j == plan.sig.r() {
            return self.hyperbolic_from(0, prod, None);
        }
        for &x in &plan.cands[j] {
            if self.tick() {
                return Flow::Cap;
            }
            let p = g.mul(prod, x);
            if !plan.reach[j + 1].contains(g.inv(p)) {
                continue;
            }
            self.elliptic.push(x);
            let f = self.elliptic_from(j + 1, p);
            self.elliptic.pop();
            if !matches!(f, Flow::Continue) {
                return f;
            }
        }
        Flow::Continue
    }

    fn hyperbolic_from(&mut self, i: usize, prod: Elem, first_a: Option<&[Elem]>) -> Flow {
        let plan = self.plan;
        let g = plan.g;
        let g0 = plan.sig.orbit_genus;
        if i == g0 {
            return if prod == 0 { self.leaf() } else { Flow::Continue };
        }
        let all: Vec<Elem>;
        let a_choices: &[Elem] = match first_a {
            Some(a) => a,
            None => {
                all = g.elements().collect();
                &all
            }
        };
        let target = &plan.comm_reach[g0 - i - 1];
        for &a in a_choices {
            for b in g.elements() {
                if self.tick() {
                    return Flow::Cap;
                }
                let p = g.mul(prod, g.commutator(a, b));
                if !target.contains(g.inv(p)) {
                    continue;
                }
                self.hyperbolic.push((a, b));
                let f = self.hyperbolic_from(i + 1, p, None);
                self.hyperbolic.pop();
                if !matches!(f, Flow::Continue) {
                    return f;
                }
            }
        }
        Flow::Continue
    }

    /// Runs the branch whose first entry is `first`.
    fn branch(&mut self, first: Elem) -> Flow {
        let plan = self.plan;
        if plan.sig.r() > 0 {
            let g = plan.g;
            if !plan.reach[1].contains(g.inv(first)) {
                return Flow::Continue;
            }
            self.elliptic.push(first);
            let f = self.elliptic_from(1, first);
            self.elliptic.pop();
            f
        } else {
            self.hyperbolic_from(0, 0, Some(&[first]))
        }
    }
}

fn check_signature(sig: &Signature) -> Result<()> {
    if sig.orbit_genus == 0 && sig.r() == 0 {
        return Err(Error::domain("the signature (0;-) has no generating vectors"));
    }
    Ok(())
}

/// Searches for a generating vector with the periods in the order given.
///
/// Signatures that are not hyperbolic belong to no Fuchsian group and have
/// no generating vectors.
///
/// The first entry is restricted to conjugacy-class representatives; the
/// search is otherwise exhaustive. Parallel over first entries, each branch
/// with its own node cap, so the result does not depend on the worker count.
pub fn search_generating_vector(g: &FiniteGroup, sig: &Signature, opts: &SearchOptions) -> Result<SearchOutcome> {
    check_signature(sig)?;
    if !sig.is_hyperbolic() {
        return Ok(SearchOutcome::Absent);
    }
    let Some(plan) = Plan::new(g, sig) else {
        return Ok(SearchOutcome::Absent);
    };
    let firsts = plan.first_choices();
    let capped = AtomicBool::new(false);
    let found = opts.exec.find_map_first(&firsts, |&first| {
        let mut hit = None;
        let dfs = Dfs {
            plan: &plan,
            nodes: 0,
            cap: opts.node_cap,
            elliptic: Vec::new(),
            hyperbolic: Vec::new(),
            visit: |v: &GeneratingVector| {
                hit = Some(v.clone());
                false
            },
        };
        let mut dfs = dfs;
        if let Flow::Cap = dfs.branch(first) {
            capped.store(true, Ordering::Relaxed);
        }
        drop(dfs);
        hit
    });
    Ok(match found {
        Some(v) => SearchOutcome::Found(v),
        None if capped.load(Ordering::Relaxed) => SearchOutcome::Undecided,
        None => SearchOutcome::Absent,
    })
}

/// A generating vector for `sig`, or `None` when none exists or the default
/// node cap is reached.
pub fn find_generating_vector(g: &FiniteGroup, sig: &Signature) -> Option<GeneratingVector> {
    search_generating_vector(g, sig, &SearchOptions::default()).ok().and_then(SearchOutcome::found)
}

/// Visits every generating vector whose first entry is a class
/// representative, in a fixed order, until `visit` returns `false`.
///
/// Every vector is conjugate to one visited. The node cap applies to the
/// whole enumeration.
pub fn for_each_generating_vector(
    g: &FiniteGroup,
    sig: &Signature,
    node_cap: u64,
    mut visit: impl FnMut(&GeneratingVector) -> bool,
) -> Result<Completion> {
    check_signature(sig)?;
    if !sig.is_hyperbolic() {
        return Ok(Completion::Exhausted);
    }
    let Some(plan) = Plan::new(g, sig) else {
        return Ok(Completion::Exhausted);
    };
    let mut dfs =
        Dfs { plan: &plan, nodes: 0, cap: node_cap, elliptic: Vec::new(), hyperbolic: Vec::new(), visit: &mut visit };
    for first in plan.first_choices() {
        match dfs.branch(first) {
            Flow::Continue => {}
            Flow::Stop => return Ok(Completion::Stopped),
            Flow::Cap => return Ok(Completion::CapReached),
        }
    }
    Ok(Completion::Exhausted)
}

/// Orders of the non-identity elements, the periods a group can realize.
pub fn allowed_periods(g: &FiniteGroup) -> Vec<usize> {
    let mut v: Vec<usize> = g.order_histogram().into_iter().map(|(o, _)| o).filter(|&o| o >= 2).collect();
    v.sort_unstable();
    v.dedup();
    v
}
