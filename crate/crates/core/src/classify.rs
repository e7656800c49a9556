//! Classification of group actions on surfaces of a given genus.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::group::{Catalog, CatalogId, FiniteGroup};
use crate::maximality::{maximality_verdict, Verdict};
use crate::search::{
    allowed_periods, count_epimorphism_classes, count_torsion_free_homs, search_generating_vector, GeneratingVector,
    SearchOptions, SearchOutcome, DEFAULT_NODE_CAP,
};
use crate::signature::{enumerate_signatures, hurwitz_bound, rh_genus, Signature};
use serde::Serialize;

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    /// Defaults to the Hurwitz bound `84(g − 1)`.
    pub max_order: Option<usize>,
    /// Restrict to these orders.
    pub orders: Option<Vec<usize>>,
    pub node_cap: u64,
    pub exec: Exec,
    /// Fill `hom_count` and `epi_classes`.
    pub counts: bool,
    /// Fill `maximality`.
    pub maximality: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            max_order: None,
            orders: None,
            node_cap: DEFAULT_NODE_CAP,
            exec: Exec::default(),
            counts: false,
            maximality: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ActionRecord {
    pub order: usize,
    pub group: String,
    #[serde(serialize_with = "ser_id")]
    pub catalog_id: Option<CatalogId>,
    pub signature: Signature,
    pub witness: GeneratingVector,
    pub hom_count: Option<u128>,
    pub epi_classes: Option<u128>,
    pub maximality: Option<Verdict>,
    pub catalog_complete: bool,
}

fn ser_id<S: serde::Serializer>(id: &Option<CatalogId>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match id {
        Some(id) => s.serialize_str(&id.to_string()),
        None => s.serialize_none(),
    }
}

pub const CSV_HEADER: [&str; 9] = [
    "order",
    "group",
    "catalog_id",
    "signature",
    "witness",
    "hom_count",
    "epi_classes",
    "maximality",
    "catalog_complete",
];

impl ActionRecord {
    /// Fields in [`CSV_HEADER`] order; the witness is compact JSON.
    pub fn csv_row(&self) -> Vec<String> {
        let opt = |v: Option<u128>| v.map(|x| x.to_string()).unwrap_or_default();
        vec![
            self.order.to_string(),
            self.group.clone(),
            self.catalog_id.map(|i| i.to_string()).unwrap_or_default(),
            self.signature.to_string(),
            serde_json::to_string(&self.witness).expect("vectors serialize"),
            opt(self.hom_count),
            opt(self.epi_classes),
            self.maximality.map(|v| v.to_string()).unwrap_or_default(),
            self.catalog_complete.to_string(),
        ]
    }
}

/// A pair whose search hit the node cap.
#[derive(Clone, Debug, Serialize)]
pub struct UndecidedPair {
    pub order: usize,
    pub group: String,
    #[serde(serialize_with = "ser_id")]
    pub catalog_id: Option<CatalogId>,
    pub signature: Signature,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyReport {
    pub genus: usize,
    pub max_order: usize,
    pub records: Vec<ActionRecord>,
    pub undecided: Vec<UndecidedPair>,
    /// Orders in range for which the catalog does not hold every group.
    pub incomplete_orders: Vec<usize>,
}

struct Task<'a> {
    group: &'a FiniteGroup,
    label: &'a str,
    id: CatalogId,
    signature: Signature,
    complete: bool,
}

enum TaskResult {
    Record(Box<ActionRecord>),
    Undecided(UndecidedPair),
    None,
}

/// All `(G, signature)` pairs realized on a surface of the given genus, for
/// catalog groups of each order up to the bound.
pub fn classify(genus: usize, catalog: &Catalog, opts: &ClassifyOptions) -> Result<ClassifyReport> {
    if genus < 2 {
        return Err(Error::domain(format!("genus must be at least 2, got {genus}")));
    }
    let bound = hurwitz_bound(genus)? as usize;
    let max_order = opts.max_order.map_or(bound, |m| m.min(bound));
    let orders: Vec<usize> = (2..=max_order).filter(|n| opts.orders.as_ref().is_none_or(|o| o.contains(n))).collect();
    let incomplete_orders: Vec<usize> = orders.iter().copied().filter(|&n| !catalog.is_complete(n)).collect();
    let mut tasks = Vec::new();
    for &n in &orders {
        for entry in catalog.of_order(n) {
            let allowed = allowed_periods(&entry.group);
            for signature in enumerate_signatures(genus, n, &allowed)? {
                tasks.push(Task {
                    group: &entry.group,
                    label: &entry.label,
                    id: entry.id,
                    signature,
                    complete: catalog.is_complete(n),
                });
            }
        }
    }
    let inner = SearchOptions { node_cap: opts.node_cap, exec: Exec::Sequential };
    let results = opts.exec.map(&tasks, |t| run_task(t, genus, catalog, opts, &inner));
    let mut records = Vec::new();
    let mut undecided = Vec::new();
    for r in results {
        match r? {
            TaskResult::Record(r) => records.push(*r),
            TaskResult::Undecided(u) => undecided.push(u),
            TaskResult::None => {}
        }
    }
    Ok(ClassifyReport { genus, max_order, records, undecided, incomplete_orders })
}

fn run_task(
    t: &Task<'_>,
    genus: usize,
    catalog: &Catalog,
    opts: &ClassifyOptions,
    inner: &SearchOptions,
) -> Result<TaskResult> {
    let g = t.group;
    let witness = match search_generating_vector(g, &t.signature, inner)? {
        SearchOutcome::Found(v) => v,
        SearchOutcome::Absent => return Ok(TaskResult::None),
        SearchOutcome::Undecided => {
            return Ok(TaskResult::Undecided(UndecidedPair {
                order: g.order(),
                group: t.label.to_string(),
                catalog_id: Some(t.id),
                signature: t.signature.clone(),
            }))
        }
    };
    witness.validate(g)?;
    if rh_genus(&t.signature, g.order()) != crate::signature::Rational::from_integer(genus as i128) {
        return Err(Error::Inconsistency(format!("{} gives the wrong genus for order {}", t.signature, g.order())));
    }
    let (hom_count, epi_classes) = if opts.counts {
        (Some(count_torsion_free_homs(g, &t.signature)), Some(count_epimorphism_classes(g, &t.signature)?))
    } else {
        (None, None)
    };
    let maximality =
        if opts.maximality { Some(maximality_verdict(g, &t.signature, catalog, inner)?.verdict) } else { None };
    Ok(TaskResult::Record(Box::new(ActionRecord {
        order: g.order(),
        group: t.label.to_string(),
        catalog_id: Some(t.id),
        signature: t.signature.clone(),
        witness,
        hom_count,
        epi_classes,
        maximality,
        catalog_complete: t.complete,
    })))
}
