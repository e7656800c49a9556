//! The table of non-maximal signatures, loaded from `data/singerman.json`.

use crate::error::{Error, Result};
use crate::signature::Signature;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

/// `coef·var` or a constant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub coef: usize,
    pub var: Option<char>,
}

impl Term {
    fn eval(&self, b: &Binding) -> Option<usize> {
        match self.var {
            Some(v) => b.get(&v).map(|x| self.coef * x),
            None => Some(self.coef),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.coef, self.var) {
            (c, None) => write!(f, "{c}"),
            (1, Some(v)) => write!(f, "{v}"),
            (c, Some(v)) => write!(f, "{c}{v}"),
        }
    }
}

impl FromStr for Term {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let split = s.find(|c: char| c.is_ascii_alphabetic()).unwrap_or(s.len());
        let (num, var) = s.split_at(split);
        let var = match var.len() {
            0 => None,
            1 => var.chars().next(),
            _ => return Err(Error::parse(format!("bad pattern term {s:?}"))),
        };
        let coef = if num.is_empty() && var.is_some() {
            1
        } else {
            num.parse().map_err(|_| Error::parse(format!("bad pattern term {s:?}")))?
        };
        Ok(Term { coef, var })
    }
}

/// A signature with symbolic periods, e.g. `0;t,t,u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub orbit_genus: usize,
    pub periods: Vec<Term>,
}

impl FromStr for Pattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (g, rest) = s.split_once(';').ok_or_else(|| Error::parse(format!("bad pattern {s:?}")))?;
        let orbit_genus = g.trim().parse().map_err(|_| Error::parse(format!("bad pattern {s:?}")))?;
        let periods = match rest.trim() {
            "-" | "" => Vec::new(),
            r => r.split(',').map(str::parse).collect::<Result<_>>()?,
        };
        Ok(Pattern { orbit_genus, periods })
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.periods.is_empty() {
            return write!(f, "({};-)", self.orbit_genus);
        }
        let p: Vec<String> = self.periods.iter().map(Term::to_string).collect();
        write!(f, "({};{})", self.orbit_genus, p.join(","))
    }
}

impl Pattern {
    pub fn instantiate(&self, b: &Binding) -> Option<Signature> {
        let periods: Option<Vec<usize>> = self.periods.iter().map(|t| t.eval(b)).collect();
        Signature::ordered(self.orbit_genus, periods?).ok()
    }
}

/// `Σ vars ≥ bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub vars: Vec<char>,
    pub bound: usize,
}

impl FromStr for Constraint {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(format!("bad constraint {s:?}"));
        let (lhs, rhs) = s.split_once(">=").ok_or_else(bad)?;
        let vars: Vec<char> = lhs
            .split('+')
            .map(|v| {
                let v = v.trim();
                let mut cs = v.chars();
                match (cs.next(), cs.next()) {
                    (Some(c), None) if c.is_ascii_alphabetic() => Ok(c),
                    _ => Err(bad()),
                }
            })
            .collect::<Result<_>>()?;
        Ok(Constraint { vars, bound: rhs.trim().parse().map_err(|_| bad())? })
    }
}

impl Constraint {
    fn holds(&self, b: &Binding) -> bool {
        self.vars.iter().map(|v| b.get(v).copied().unwrap_or(0)).sum::<usize>() >= self.bound
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.vars.iter().map(char::to_string).collect();
        write!(f, "{}>={}", v.join("+"), self.bound)
    }
}

pub type Binding = BTreeMap<char, usize>;

#[derive(Deserialize)]
struct Row {
    case: String,
    inner: String,
    constraints: Vec<String>,
    outer: String,
    index: usize,
    normal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingermanRule {
    pub case: String,
    pub inner: Pattern,
    pub constraints: Vec<Constraint>,
    pub outer: Pattern,
    pub index: usize,
    /// Whether the inner group is normal in the outer one.
    pub normal: bool,
}

impl Serialize for SingermanRule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SingermanRule", 6)?;
        st.serialize_field("case", &self.case)?;
        st.serialize_field("inner", &self.inner.to_string())?;
        st.serialize_field("constraints", &self.constraints.iter().map(|c| c.to_string()).collect::<Vec<_>>())?;
        st.serialize_field("outer", &self.outer.to_string())?;
        st.serialize_field("index", &self.index)?;
        st.serialize_field("normal", &self.normal)?;
        st.end()
    }
}

impl SingermanRule {
    /// All parameter bindings under which `sig` matches the inner pattern.
    pub fn bindings(&self, sig: &Signature) -> Vec<Binding> {
        if sig.orbit_genus != self.inner.orbit_genus || sig.r() != self.inner.periods.len() {
            return Vec::new();
        }
        let mut out: Vec<Binding> = Vec::new();
        for perm in distinct_permutations(&sig.canonical().periods) {
            if let Some(b) = bind(&self.inner.periods, &perm) {
                if self.constraints.iter().all(|c| c.holds(&b)) && !out.contains(&b) {
                    out.push(b);
                }
            }
        }
        out
    }
}

fn bind(terms: &[Term], periods: &[usize]) -> Option<Binding> {
    let mut b = Binding::new();
    for (t, &p) in terms.iter().zip(periods) {
        match t.var {
            None if t.coef == p => {}
            None => return None,
            Some(v) => {
                if p % t.coef != 0 {
                    return None;
                }
                let val = p / t.coef;
                if *b.entry(v).or_insert(val) != val {
                    return None;
                }
            }
        }
    }
    Some(b)
}

/// Distinct orderings of a sorted slice, in lexicographic order.
pub(crate) fn distinct_permutations(sorted: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = sorted.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next lexicographic permutation
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

pub fn parse_rules(text: &str) -> Result<Vec<SingermanRule>> {
    let rows: Vec<Row> = serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))?;
    rows.into_iter()
        .map(|r| {
            Ok(SingermanRule {
                case: r.case,
                inner: r.inner.parse()?,
                constraints: r.constraints.iter().map(|c| c.parse()).collect::<Result<_>>()?,
                outer: r.outer.parse()?,
                index: r.index,
                normal: r.normal,
            })
        })
        .collect()
}

/// The bundled table, in row order.
pub fn singerman_rules() -> &'static [SingermanRule] {
    static RULES: OnceLock<Vec<SingermanRule>> = OnceLock::new();
    RULES.get_or_init(|| parse_rules(include_str!("../../data/singerman.json")).expect("bundled table parses"))
}

/// One containment `Γ < Γ₁` offered by the table.
#[derive(Clone, Debug, Serialize)]
pub struct Overgroup {
    pub rule: &'static SingermanRule,
    #[serde(serialize_with = "ser_binding")]
    pub binding: Binding,
    pub outer: Signature,
    pub index: usize,
}

fn ser_binding<S: serde::Serializer>(b: &Binding, s: S) -> std::result::Result<S::Ok, S::Error> {
    let m: BTreeMap<String, usize> = b.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    m.serialize(s)
}

/// Every row whose inner pattern matches `sig`, with the outer signature
/// instantiated. Empty exactly when `sig` is finitely maximal.
pub fn singerman_overgroups(sig: &Signature) -> Vec<Overgroup> {
    let mut out: Vec<Overgroup> = Vec::new();
    for rule in singerman_rules() {
        for b in rule.bindings(sig) {
            let Some(outer) = rule.outer.instantiate(&b) else { continue };
            if out.iter().any(|o| o.rule.case == rule.case && o.outer == outer) {
                continue;
            }
            out.push(Overgroup { rule, binding: b, outer, index: rule.index });
        }
    }
    out
}
