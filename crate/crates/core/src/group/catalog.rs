//! The small-group catalog: JSON lines of permutation generators.

use super::build::Standard;
use super::{FiniteGroup, Perm};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

/// `(order, index)`. For bundled entries the index is the SmallGroups index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CatalogId {
    pub order: usize,
    pub index: usize,
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.order, self.index)
    }
}

/// Number of isomorphism classes of groups of order `n`, where bundled.
pub fn reference_group_count(n: usize) -> Option<usize> {
    const COUNTS: [usize; 64] = [
        1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5, 4, 1, 4, 1, 51, 1, 2, 1, 14,
        1, 2, 2, 14, 1, 6, 1, 4, 2, 2, 1, 52, 2, 5, 1, 5, 1, 15, 2, 13, 2, 2, 1, 13, 1, 2, 4, 267,
    ];
    match n {
        1..=64 => Some(COUNTS[n - 1]),
        72 => Some(50),
        96 => Some(231),
        120 => Some(47),
        168 => Some(57),
        _ => None,
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CatalogLine {
    pub order: usize,
    pub index: usize,
    pub label: String,
    pub generators: Vec<Vec<u32>>,
    pub complete_order: bool,
    pub source: String,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: CatalogId,
    pub label: String,
    pub source: String,
    pub group: FiniteGroup,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    complete: BTreeSet<usize>,
    by_id: HashMap<CatalogId, usize>,
}

static BUNDLED: OnceLock<Catalog> = OnceLock::new();

impl Catalog {
    /// The catalog shipped with the crate.
    pub fn bundled() -> &'static Catalog {
        BUNDLED
            .get_or_init(|| Catalog::parse(include_str!("../../data/catalog.jsonl")).expect("bundled catalog is valid"))
    }

    pub fn load(path: &std::path::Path) -> Result<Catalog> {
        let text = std::fs::read_to_string(path)?;
        let c = Catalog::parse(&text)?;
        c.validate()?;
        Ok(c)
    }

    /// Parses JSON lines and rebuilds every group. Structural checks only;
    /// see [`Catalog::validate`] for the isomorphism checks.
    pub fn parse(text: &str) -> Result<Catalog> {
        let mut entries = Vec::new();
        let mut complete_flag: BTreeMap<usize, bool> = BTreeMap::new();
        let mut by_id = HashMap::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let at = |msg: String| Error::Parse { line: Some(ln + 1), msg };
            let l: CatalogLine = serde_json::from_str(line).map_err(|e| at(e.to_string()))?;
            let degree = l.generators.first().map_or(1, |g| g.len());
            let gens: Vec<Perm> = l
                .generators
                .iter()
                .map(|g| Perm::new(g.clone()))
                .collect::<Result<_>>()
                .map_err(|e| at(e.to_string()))?;
            let id = CatalogId { order: l.order, index: l.index };
            let group =
                FiniteGroup::from_permutations(degree, &gens, l.label.clone()).map_err(|e| at(e.to_string()))?;
            if group.order() != l.order {
                return Err(at(format!("generators give order {}, line says {}", group.order(), l.order)));
            }
            if let Some(&prev) = complete_flag.get(&l.order) {
                if prev != l.complete_order {
                    return Err(at(format!("inconsistent complete_order flags for order {}", l.order)));
                }
            }
            complete_flag.insert(l.order, l.complete_order);
            if by_id.insert(id, entries.len()).is_some() {
                return Err(at(format!("duplicate catalog id {id}")));
            }
            entries.push(CatalogEntry { id, label: l.label, source: l.source, group: group.with_catalog_id(Some(id)) });
        }
        let complete = complete_flag.into_iter().filter(|&(_, c)| c).map(|(n, _)| n).collect();
        Ok(Catalog { entries, complete, by_id })
    }

    /// Pairwise non-isomorphism within each order, and entry counts against
    /// the reference counts for orders flagged complete.
    pub fn validate(&self) -> Result<()> {
        let mut by_order: BTreeMap<usize, Vec<&CatalogEntry>> = BTreeMap::new();
        for e in &self.entries {
            by_order.entry(e.id.order).or_default().push(e);
        }
        for (n, es) in &by_order {
            for (i, a) in es.iter().enumerate() {
                for b in &es[i + 1..] {
                    if a.group.is_isomorphic(&b.group) {
                        return Err(Error::Validation(format!("{} and {} are isomorphic", a.id, b.id)));
                    }
                }
            }
            if self.complete.contains(n) {
                match reference_group_count(*n) {
                    Some(c) if c != es.len() => {
                        return Err(Error::Validation(format!(
                            "order {n} flagged complete with {} entries, reference count is {c}",
                            es.len()
                        )))
                    }
                    None => {
                        return Err(Error::Validation(format!("order {n} flagged complete without a reference count")))
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, id: CatalogId) -> Option<&CatalogEntry> {
        self.by_id.get(&id).map(|&i| &self.entries[i])
    }

    pub fn of_order(&self, n: usize) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.id.order == n)
    }

    pub fn is_complete(&self, n: usize) -> bool {
        self.complete.contains(&n)
    }

    pub fn complete_orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.complete.iter().copied()
    }

    pub fn orders(&self) -> BTreeSet<usize> {
        self.entries.iter().map(|e| e.id.order).collect()
    }

    /// The catalog id of a group isomorphic to `g`, if present.
    pub fn identify(&self, g: &FiniteGroup) -> Option<CatalogId> {
        let fp = g.fingerprint();
        self.of_order(g.order()).find(|e| e.group.fingerprint() == fp && e.group.is_isomorphic(g)).map(|e| e.id)
    }

    /// Resolves a selector: `order:index`, an exact catalog label, or a
    /// structural name such as `C5`, `D12` (order 12), `Q8`, `C2^3`,
    /// `C4 x C2`, `PSL(2,7)`.
    pub fn resolve(&self, selector: &str) -> Result<FiniteGroup> {
        let s = selector.trim();
        if let Some((a, b)) = s.split_once(':') {
            if let (Ok(order), Ok(index)) = (a.trim().parse(), b.trim().parse()) {
                let id = CatalogId { order, index };
                return self
                    .get(id)
                    .map(|e| e.group.clone())
                    .ok_or_else(|| Error::param(format!("no catalog entry {id}")));
            }
        }
        let norm = |t: &str| t.replace([' ', '×'], "").replace('*', "x");
        let matches: Vec<&CatalogEntry> = self.entries.iter().filter(|e| norm(&e.label) == norm(s)).collect();
        match matches.len() {
            1 => return Ok(matches[0].group.clone()),
            0 => {}
            _ => return Err(Error::param(format!("selector {s:?} matches several catalog entries"))),
        }
        let st = parse_structure(s).ok_or_else(|| Error::param(format!("unknown group selector {s:?}")))?;
        let g = st.build()?;
        Ok(match self.identify(&g) {
            Some(id) => self.get(id).expect("identified").group.clone(),
            None => g,
        })
    }
}

/// Parses a structural group name.
pub fn parse_structure(name: &str) -> Option<Standard> {
    let s: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    let s = s.replace(['×', '*'], "x");
    if s.contains('x') && !s.starts_with("PSL") && !s.starts_with("PGL") && !s.starts_with("SL") {
        let mut parts = s.split('x').map(parse_structure);
        let first = parts.next()??;
        return parts.try_fold(first, |acc, p| Some(Standard::DirectProduct(Box::new(acc), Box::new(p?))));
    }
    if let Some((base, exp)) = s.split_once('^') {
        let k: usize = exp.parse().ok()?;
        let n: usize = base.strip_prefix('C')?.parse().ok()?;
        return Some(Standard::Abelian(vec![n; k]));
    }
    let num = |prefix: &str| s.strip_prefix(prefix).and_then(|r| r.parse::<usize>().ok());
    let matrix = |prefix: &str| {
        let r = s.strip_prefix(prefix)?.strip_prefix("(2,")?.strip_suffix(')')?;
        r.parse::<usize>().ok()
    };
    if let Some(p) = matrix("PSL") {
        return Some(Standard::Psl2(p));
    }
    if let Some(p) = matrix("PGL") {
        return Some(Standard::Pgl2(p));
    }
    if let Some(p) = matrix("SL") {
        return Some(Standard::Sl2(p));
    }
    if s == "V4" {
        return Some(Standard::Abelian(vec![2, 2]));
    }
    if let Some(m) = num("Dic") {
        return Some(Standard::Dicyclic(4 * m));
    }
    if let Some(n) = num("C") {
        return Some(Standard::Cyclic(n));
    }
    if let Some(n) = num("D") {
        return Some(Standard::Dihedral(n));
    }
    if let Some(n) = num("Q") {
        return Some(Standard::Dicyclic(n));
    }
    if let Some(n) = num("S") {
        return Some(Standard::Symmetric(n));
    }
    if let Some(n) = num("A") {
        return Some(Standard::Alternating(n));
    }
    None
}
