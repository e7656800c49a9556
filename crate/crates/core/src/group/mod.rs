//! Finite groups as dense multiplication tables.
//!
//! Element `0` is always the identity. Products are `mul(a, b) = a·b`; groups
//! built from permutations compose left to right (apply `a`, then `b`).

mod aut;
mod build;
pub mod catalog;
pub mod character;
pub mod cyclo;
mod linmod;
mod perm;
pub mod presented;
mod set;
mod subgroup;

pub use aut::{AutomorphismGroup, Fingerprint};
pub use build::{semidirect, Standard};
pub use catalog::{Catalog, CatalogEntry, CatalogId};
pub use perm::Perm;
pub use set::ElementSet;
pub use subgroup::SubgroupClass;

use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::OnceLock;

/// Largest group order accepted anywhere in the crate.
pub const MAX_ORDER: usize = 512;

/// Index of an element in a [`FiniteGroup`].
pub type Elem = usize;

#[derive(Clone)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    label: String,
    catalog_id: Option<CatalogId>,
    classes: OnceLock<Classes>,
    subgroups: OnceLock<Result<Vec<SubgroupClass>>>,
    aut: OnceLock<Result<AutomorphismGroup>>,
}

#[derive(Clone, Debug)]
struct Classes {
    classes: Vec<Vec<Elem>>,
    class_of: Vec<u32>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.label, self.n)
    }
}

impl FiniteGroup {
    /// Builds a group from a full multiplication table, validating the axioms.
    ///
    /// The identity is moved to index 0 if necessary.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::param(format!("group order {n} outside 1..={MAX_ORDER}")));
        }
        if rows.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::Validation("table is not square or has out-of-range entries".into()));
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or_else(|| Error::Validation("no identity element".into()))?;
        // relabel so that the identity sits at 0
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(0, e);
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = perm[rows[perm[a]][perm[b]]] as u32;
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b] as usize;
                for c in 0..n {
                    let bc = table[b * n + c] as usize;
                    if table[ab * n + c] != table[a * n + bc] {
                        return Err(Error::Validation(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        Self::from_raw(n, table, String::new())
    }

    /// Builds the group generated by `gens` under an arbitrary associative
    /// multiplication. Elements are numbered in breadth-first order.
    pub fn from_closure<T, F>(identity: T, gens: &[T], mul: F, label: impl Into<String>) -> Result<Self>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        Ok(Self::from_closure_indexed(identity, gens, mul, label)?.0)
    }

    /// Like [`FiniteGroup::from_closure`], also returning the index of each generator.
    pub fn from_closure_indexed<T, F>(
        identity: T,
        gens: &[T],
        mul: F,
        label: impl Into<String>,
    ) -> Result<(Self, Vec<Elem>)>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<T, u32> = HashMap::new();
        index.insert(identity, 0);
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head].clone();
            head += 1;
            for g in gens {
                let y = mul(&x, g);
                if !index.contains_key(&y) {
                    if elems.len() >= MAX_ORDER {
                        return Err(Error::resource("group order", MAX_ORDER as u64));
                    }
                    index.insert(y.clone(), elems.len() as u32);
                    elems.push(y);
                }
            }
        }
        let n = elems.len();
        let mut table = vec![0u32; n * n];
        for (a, x) in elems.iter().enumerate() {
            for (b, y) in elems.iter().enumerate() {
                let z = mul(x, y);
                table[a * n + b] = *index
                    .get(&z)
                    .ok_or_else(|| Error::Inconsistency("closure is not closed under multiplication".into()))?;
            }
        }
        let gen_idx = gens.iter().map(|g| index[g] as Elem).collect();
        Ok((Self::from_raw(n, table, label.into())?, gen_idx))
    }

    /// The permutation group generated by `gens`, all of the given degree.
    pub fn from_permutations(degree: usize, gens: &[Perm], label: impl Into<String>) -> Result<Self> {
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(Error::Validation("generators have mismatched degrees".into()));
        }
        Self::from_closure(Perm::identity(degree), gens, |a, b| a.then(b), label)
    }

    pub(crate) fn from_raw(n: usize, table: Vec<u32>, label: String) -> Result<Self> {
        let mut inverse = vec![u32::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inverse[a] = b as u32;
                    break;
                }
            }
            if inverse[a] == u32::MAX {
                return Err(Error::Validation(format!("element {a} has no inverse")));
            }
        }
        let mut orders = vec![1u32; n];
        for (a, o) in orders.iter_mut().enumerate() {
            let mut x = a;
            while x != 0 {
                x = table[x * n + a] as usize;
                *o += 1;
            }
        }
        Ok(FiniteGroup {
            n,
            table,
            inverse,
            orders,
            label,
            catalog_id: None,
            classes: OnceLock::new(),
            subgroups: OnceLock::new(),
            aut: OnceLock::new(),
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn with_catalog_id(mut self, id: Option<CatalogId>) -> Self {
        self.catalog_id = id;
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn catalog_id(&self) -> Option<CatalogId> {
        self.catalog_id
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a] as usize
    }

    #[inline]
    pub fn elem_order(&self, a: Elem) -> usize {
        self.orders[a] as usize
    }

    pub fn pow(&self, a: Elem, k: i64) -> Elem {
        let o = self.orders[a] as i64;
        let mut e = k.rem_euclid(o);
        let mut base = a;
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `g·x·g⁻¹`.
    pub fn conj(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a·b·a⁻¹·b⁻¹`.
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn product(&self, elems: impl IntoIterator<Item = Elem>) -> Elem {
        elems.into_iter().fold(0, |acc, x| self.mul(acc, x))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn exponent(&self) -> usize {
        self.orders.iter().fold(1usize, |l, &o| num_integer::lcm(l, o as usize))
    }

    /// Histogram of element orders as sorted `(order, count)` pairs.
    pub fn order_histogram(&self) -> Vec<(usize, usize)> {
        let mut h: std::collections::BTreeMap<usize, usize> = Default::default();
        for &o in &self.orders {
            *h.entry(o as usize).or_default() += 1;
        }
        h.into_iter().collect()
    }

    /// Elements of exactly the given order, in index order.
    pub fn elements_of_order(&self, m: usize) -> Vec<Elem> {
        (0..self.n).filter(|&x| self.orders[x] as usize == m).collect()
    }

    fn classes_data(&self) -> &Classes {
        self.classes.get_or_init(|| {
            let n = self.n;
            let mut class_of = vec![u32::MAX; n];
            let mut classes = Vec::new();
            for x in 0..n {
                if class_of[x] != u32::MAX {
                    continue;
                }
                let id = classes.len() as u32;
                let mut members = Vec::new();
                for g in 0..n {
                    let y = self.conj(g, x);
                    if class_of[y] == u32::MAX {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
                members.sort_unstable();
                classes.push(members);
            }
            Classes { classes, class_of }
        })
    }

    /// Conjugacy classes, each sorted, ordered by their smallest element.
    pub fn conjugacy_classes(&self) -> &[Vec<Elem>] {
        &self.classes_data().classes
    }

    pub fn class_of(&self, x: Elem) -> usize {
        self.classes_data().class_of[x] as usize
    }

    pub fn class_size(&self, x: Elem) -> usize {
        self.conjugacy_classes()[self.class_of(x)].len()
    }

    /// True when `x` is the smallest element of its conjugacy class.
    pub fn is_class_rep(&self, x: Elem) -> bool {
        self.conjugacy_classes()[self.class_of(x)][0] == x
    }

    /// The subgroup generated by `gens`.
    pub fn generated(&self, gens: &[Elem]) -> ElementSet {
        let mut set = ElementSet::empty(self.n);
        set.insert(0);
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        set
    }

    /// True when `gens` generate the whole group. Stops as soon as the
    /// closure is full.
    pub fn generates(&self, gens: &[Elem]) -> bool {
        let mut set = ElementSet::empty(self.n);
        set.insert(0);
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    if set.len() == self.n {
                        return true;
                    }
                    queue.push(y);
                }
            }
        }
        set.len() == self.n
    }

    /// A small generating set chosen greedily by decreasing element order.
    pub fn small_generating_set(&self) -> Vec<Elem> {
        if self.n == 1 {
            return Vec::new();
        }
        let mut cands: Vec<Elem> = (1..self.n).collect();
        cands.sort_by_key(|&x| (std::cmp::Reverse(self.orders[x]), x));
        let mut gens = Vec::new();
        let mut sub = self.generated(&gens);
        for x in cands {
            if sub.len() == self.n {
                break;
            }
            if !sub.contains(x) {
                gens.push(x);
                sub = self.generated(&gens);
            }
        }
        gens
    }

    pub fn center(&self) -> ElementSet {
        ElementSet::from_iter(self.n, (0..self.n).filter(|&z| (0..self.n).all(|g| self.mul(z, g) == self.mul(g, z))))
    }

    pub fn derived_subgroup(&self) -> ElementSet {
        let mut comms: Vec<Elem> = Vec::new();
        let mut seen = ElementSet::empty(self.n);
        for a in 0..self.n {
            for b in 0..self.n {
                let c = self.commutator(a, b);
                if seen.insert(c) {
                    comms.push(c);
                }
            }
        }
        self.generated(&comms)
    }

    /// The normal closure of `elems`.
    pub fn normal_closure(&self, elems: &[Elem]) -> ElementSet {
        let mut gens = Vec::new();
        let mut seen = ElementSet::empty(self.n);
        for &x in elems {
            for g in 0..self.n {
                let y = self.conj(g, x);
                if seen.insert(y) {
                    gens.push(y);
                }
            }
        }
        self.generated(&gens)
    }

    pub fn is_normal(&self, sub: &ElementSet) -> bool {
        sub.iter().all(|h| (0..self.n).all(|g| sub.contains(self.conj(g, h))))
    }

    /// Quotient by a normal subgroup, with the projection map.
    pub fn quotient(&self, normal: &ElementSet) -> Result<(FiniteGroup, Vec<Elem>)> {
        if !self.is_normal(normal) {
            return Err(Error::domain("quotient by a subgroup that is not normal"));
        }
        let mut coset_of = vec![usize::MAX; self.n];
        let mut reps = Vec::new();
        for x in 0..self.n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for h in normal.iter() {
                coset_of[self.mul(x, h)] = id;
            }
        }
        let m = reps.len();
        let mut table = vec![0u32; m * m];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i * m + j] = coset_of[self.mul(a, b)] as u32;
            }
        }
        Ok((FiniteGroup::from_raw(m, table, String::new())?, coset_of))
    }

    /// Elementary divisors of the abelianization, sorted ascending.
    pub fn abelian_invariants(&self) -> Vec<usize> {
        let d = self.derived_subgroup();
        let (q, _) = self.quotient(&d).expect("derived subgroup is normal");
        q.abelian_elementary_divisors()
    }

    /// Elementary divisors (prime powers) of an abelian group.
    pub(crate) fn abelian_elementary_divisors(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut n = self.n;
        let mut p = 2;
        while n > 1 {
            if n.is_multiple_of(p) {
                while n.is_multiple_of(p) {
                    n /= p;
                }
                // |A[p^k]| = p^{Σ min(λ_i, k)}
                let mut prev_log = 0u32;
                let mut counts = Vec::new();
                let mut k = 1u32;
                loop {
                    let pk = p.pow(k);
                    let size = (0..self.n).filter(|&x| pk % self.orders[x] as usize == 0).count();
                    let log = ilog(size, p);
                    counts.push(log - prev_log);
                    if log == prev_log {
                        break;
                    }
                    prev_log = log;
                    k += 1;
                }
                // counts[k-1] = number of parts with λ_i ≥ k
                for k in 1..counts.len() {
                    let ge_k = counts[k - 1];
                    let ge_k1 = counts[k];
                    for _ in 0..(ge_k - ge_k1) {
                        out.push(p.pow(k as u32));
                    }
                }
            }
            p += 1;
        }
        out.sort_unstable();
        out
    }

    /// Whether `images[i]` for `gens[i]` extends to a homomorphism into `target`.
    /// Returns the full map when it does.
    pub fn extend_hom(&self, gens: &[Elem], target: &FiniteGroup, images: &[Elem]) -> Option<Vec<Elem>> {
        debug_assert_eq!(gens.len(), images.len());
        let mut map = vec![usize::MAX; self.n];
        map[0] = 0;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (g, &img) in gens.iter().zip(images) {
                let y = self.mul(x, *g);
                let fy = target.mul(map[x], img);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        if queue.len() != self.n {
            return None;
        }
        Some(map)
    }

    /// True when the assignment `gens[i] ↦ images[i]` extends to an automorphism.
    pub fn extends_to_automorphism(&self, gens: &[Elem], images: &[Elem]) -> bool {
        match self.extend_hom(gens, self, images) {
            Some(map) => {
                let mut seen = ElementSet::empty(self.n);
                map.iter().all(|&y| seen.insert(y))
            }
            None => false,
        }
    }

    /// Left-coset action on `G/H` as permutations, one per element.
    pub fn coset_action(&self, sub: &ElementSet) -> (Vec<Elem>, Vec<Perm>) {
        let mut coset_of = vec![usize::MAX; self.n];
        let mut reps = Vec::new();
        for x in 0..self.n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for h in sub.iter() {
                coset_of[self.mul(x, h)] = id;
            }
        }
        let perms = (0..self.n)
            .map(|g| {
                let imgs = reps.iter().map(|&r| coset_of[self.mul(g, r)] as u32).collect();
                Perm::new(imgs).expect("coset action is a permutation")
            })
            .collect();
        (reps, perms)
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> Result<FiniteGroup> {
        let (a, b) = (self.n, other.n);
        let n = a * b;
        if n > MAX_ORDER {
            return Err(Error::resource("group order", MAX_ORDER as u64));
        }
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                let (x1, x2) = (x / b, x % b);
                let (y1, y2) = (y / b, y % b);
                table[x * n + y] = (self.mul(x1, y1) * b + other.mul(x2, y2)) as u32;
            }
        }
        FiniteGroup::from_raw(n, table, format!("{} x {}", self.label, other.label))
    }
}

fn ilog(mut x: usize, p: usize) -> u32 {
    let mut k = 0;
    while x > 1 {
        x /= p;
        k += 1;
    }
    k
}
