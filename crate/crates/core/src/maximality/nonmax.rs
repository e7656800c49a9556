//! Candidate extensions for superelliptic actions, by reduced group.

use crate::error::{Error, Result};
use crate::signature::Signature;
use crate::superelliptic::ReducedKind;
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

#[derive(Deserialize)]
struct Row {
    k: String,
    signature: String,
    k_outer: String,
    outer: String,
    condition: Option<String>,
}

/// `coef · Π vars` over the parameters `m`, `n`.
#[derive(Clone, Debug)]
struct Monomial {
    coef: usize,
    vars: Vec<char>,
}

impl Monomial {
    fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let split = s.find(|c: char| c.is_ascii_alphabetic()).unwrap_or(s.len());
        let (num, vars) = s.split_at(split);
        let coef = if num.is_empty() { 1 } else { num.parse().map_err(|_| Error::parse(format!("bad term {s:?}")))? };
        let vars: Vec<char> = vars.chars().collect();
        if vars.iter().any(|c| !matches!(c, 'm' | 'n')) {
            return Err(Error::parse(format!("bad term {s:?}")));
        }
        Ok(Monomial { coef, vars })
    }

    fn eval(&self, m: usize, n: usize) -> usize {
        self.vars.iter().fold(self.coef, |acc, &v| acc * if v == 'm' { m } else { n })
    }
}

#[derive(Clone, Debug)]
struct Template {
    orbit_genus: usize,
    periods: Vec<Monomial>,
}

impl Template {
    fn parse(s: &str) -> Result<Self> {
        let (g, rest) = s.split_once(';').ok_or_else(|| Error::parse(format!("bad template {s:?}")))?;
        Ok(Template {
            orbit_genus: g.trim().parse().map_err(|_| Error::parse(format!("bad template {s:?}")))?,
            periods: rest.split(',').map(Monomial::parse).collect::<Result<_>>()?,
        })
    }

    fn eval(&self, m: usize, n: usize) -> Option<Signature> {
        Signature::new(self.orbit_genus, self.periods.iter().map(|t| t.eval(m, n)).collect::<Vec<_>>()).ok()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum KindPattern {
    Cyclic,
    Dihedral,
    A4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum OuterKind {
    DihedralM,
    Dihedral2M,
    A4,
    S4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Condition {
    MEquals(usize),
    MEqualsN,
}

#[derive(Clone, Debug)]
struct NonmaxRow {
    k: KindPattern,
    signature: Template,
    k_outer: OuterKind,
    outer: Template,
    condition: Option<Condition>,
}

fn rows() -> &'static [NonmaxRow] {
    static ROWS: OnceLock<Vec<NonmaxRow>> = OnceLock::new();
    ROWS.get_or_init(|| parse_rows(include_str!("../../data/superelliptic_nonmax.json")).expect("bundled table parses"))
}

fn parse_rows(text: &str) -> Result<Vec<NonmaxRow>> {
    let raw: Vec<Row> = serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))?;
    raw.into_iter()
        .map(|r| {
            let k = match r.k.as_str() {
                "C_m" => KindPattern::Cyclic,
                "D_m" => KindPattern::Dihedral,
                "A4" => KindPattern::A4,
                other => return Err(Error::parse(format!("unknown reduced group {other:?}"))),
            };
            let k_outer = match r.k_outer.as_str() {
                "D_m" => OuterKind::DihedralM,
                "D_2m" => OuterKind::Dihedral2M,
                "A4" => OuterKind::A4,
                "S4" => OuterKind::S4,
                other => return Err(Error::parse(format!("unknown reduced group {other:?}"))),
            };
            let condition = match r.condition.as_deref() {
                None => None,
                Some("m=n") => Some(Condition::MEqualsN),
                Some(c) => Some(Condition::MEquals(
                    c.strip_prefix("m=")
                        .and_then(|v| v.parse().ok())
                        .ok_or_else(|| Error::parse(format!("bad condition {c:?}")))?,
                )),
            };
            Ok(NonmaxRow {
                k,
                signature: Template::parse(&r.signature)?,
                k_outer,
                outer: Template::parse(&r.outer)?,
                condition,
            })
        })
        .collect()
}

/// One row of the candidate tables matched at concrete parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonmaxCandidate {
    pub n: usize,
    pub outer_kind: ReducedKind,
    pub outer_signature: Signature,
}

/// Rows whose signature template matches `sig` for some `n ≥ 2` (or for the
/// given `n`). `S₄` and `A₅` never match.
pub fn superelliptic_nonmax_tables(k: ReducedKind, n: Option<usize>, sig: &Signature) -> Vec<NonmaxCandidate> {
    let (pattern, m) = match k {
        ReducedKind::Cyclic(m) => (KindPattern::Cyclic, m),
        ReducedKind::Dihedral(m) => (KindPattern::Dihedral, m),
        ReducedKind::A4 => (KindPattern::A4, 0),
        ReducedKind::S4 | ReducedKind::A5 => return Vec::new(),
    };
    let max_n = sig.periods.iter().copied().max().unwrap_or(0);
    let ns: Vec<usize> = match n {
        Some(n) => vec![n],
        None => (2..=max_n).collect(),
    };
    let mut out = Vec::new();
    for row in rows().iter().filter(|r| r.k == pattern) {
        let cond_ok = |n: usize| match row.condition {
            None => true,
            Some(Condition::MEquals(v)) => m == v,
            Some(Condition::MEqualsN) => m == n,
        };
        for &n in &ns {
            if !cond_ok(n) || row.signature.eval(m, n).as_ref() != Some(sig) {
                continue;
            }
            let outer_kind = match row.k_outer {
                OuterKind::DihedralM => ReducedKind::Dihedral(m),
                OuterKind::Dihedral2M => ReducedKind::Dihedral(2 * m),
                OuterKind::A4 => ReducedKind::A4,
                OuterKind::S4 => ReducedKind::S4,
            };
            if let Some(outer_signature) = row.outer.eval(m, n) {
                let c = NonmaxCandidate { n, outer_kind, outer_signature };
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
    }
    out
}
