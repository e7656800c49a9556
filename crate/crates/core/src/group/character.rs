//! Character tables with cyclotomic-integer values.

use super::build::cyclic;
use super::cyclo::{CycInt, CyclotomicRing};
use super::{CatalogId, FiniteGroup};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub rep_order: usize,
    pub size: usize,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group_order: usize,
    pub group_id: Option<CatalogId>,
    pub classes: Vec<ClassInfo>,
    /// `characters[i][j]` is the value of character `i` on class `j`.
    pub characters: Vec<Vec<CycInt>>,
    ring: CyclotomicRing,
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    group: (usize, usize),
    exponent: usize,
    classes: Vec<ClassInfo>,
    characters: Vec<Vec<Vec<i64>>>,
}

impl CharacterTable {
    pub fn ring(&self) -> &CyclotomicRing {
        &self.ring
    }

    /// The character table of an abelian group: its homomorphisms into `μ_N`,
    /// `N` the exponent. Classes are the elements in index order.
    pub fn abelian(g: &FiniteGroup) -> Result<Self> {
        if !g.is_abelian() {
            return Err(Error::Unsupported(format!(
                "{} is not abelian; nonabelian tables must be loaded from a file",
                g.label()
            )));
        }
        let n_exp = g.exponent();
        let ring = CyclotomicRing::new(n_exp)?;
        let target = cyclic(n_exp)?;
        let gens = g.small_generating_set();
        // image of a generator of order o must be a multiple of N/o
        let choices: Vec<Vec<usize>> = gens
            .iter()
            .map(|&x| {
                let step = n_exp / g.elem_order(x);
                (0..g.elem_order(x)).map(|k| k * step).collect()
            })
            .collect();
        let mut characters = Vec::new();
        let mut idx = vec![0usize; gens.len()];
        loop {
            let imgs: Vec<usize> = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
            if let Some(map) = g.extend_hom(&gens, &target, &imgs) {
                characters.push(map.iter().map(|&k| ring.zeta_pow(k as i64)).collect());
            }
            // odometer
            let mut pos = 0;
            loop {
                if pos == idx.len() {
                    let classes = g.elements().map(|x| ClassInfo { rep_order: g.elem_order(x), size: 1 }).collect();
                    let t =
                        CharacterTable { group_order: g.order(), group_id: g.catalog_id(), classes, characters, ring };
                    if t.characters.len() != g.order() {
                        return Err(Error::Inconsistency(format!(
                            "found {} linear characters for an abelian group of order {}",
                            t.characters.len(),
                            g.order()
                        )));
                    }
                    return Ok(t);
                }
                idx[pos] += 1;
                if idx[pos] < choices[pos].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Parses a table file and validates it, against `group` when given.
    pub fn from_json(text: &str, group: Option<&FiniteGroup>) -> Result<Self> {
        let f: TableFile = serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))?;
        let ring = CyclotomicRing::new(f.exponent)?;
        let characters = f
            .characters
            .iter()
            .map(|row| row.iter().map(|c| ring.reduce(c.iter().map(|&x| x as i128).collect())).collect())
            .collect();
        let t = CharacterTable {
            group_order: f.group.0,
            group_id: Some(CatalogId { order: f.group.0, index: f.group.1 }),
            classes: f.classes,
            characters,
            ring,
        };
        t.validate(group)?;
        Ok(t)
    }

    pub fn to_json(&self) -> String {
        let f = TableFile {
            group: self.group_id.map(|id| (id.order, id.index)).unwrap_or((self.group_order, 0)),
            exponent: self.ring.order(),
            classes: self.classes.clone(),
            characters: self
                .characters
                .iter()
                .map(|row| row.iter().map(|v| v.0.iter().map(|&c| c as i64).collect()).collect())
                .collect(),
        };
        serde_json::to_string(&f).expect("serializable")
    }

    /// Class sizes, square shape and row orthogonality; class profile against
    /// `group` when given.
    pub fn validate(&self, group: Option<&FiniteGroup>) -> Result<()> {
        let k = self.classes.len();
        if self.classes.iter().map(|c| c.size).sum::<usize>() != self.group_order {
            return Err(Error::Validation("class sizes do not sum to the group order".into()));
        }
        if self.characters.len() != k || self.characters.iter().any(|r| r.len() != k) {
            return Err(Error::Validation("character table is not square".into()));
        }
        if self.classes.iter().filter(|c| c.rep_order == 1).count() != 1 {
            return Err(Error::Validation("expected exactly one class of the identity".into()));
        }
        let r = &self.ring;
        for (i, a) in self.characters.iter().enumerate() {
            for (j, b) in self.characters.iter().enumerate() {
                let mut s = r.zero();
                for (c, cls) in self.classes.iter().enumerate() {
                    s = r.add(&s, &r.scale(&r.mul(&a[c], &r.conj(&b[c])), cls.size as i128));
                }
                let want = if i == j { self.group_order as i128 } else { 0 };
                if r.as_integer(&s) != Some(want) {
                    return Err(Error::Validation(format!("rows {i} and {j} violate orthogonality")));
                }
            }
        }
        if let Some(g) = group {
            if g.order() != self.group_order {
                return Err(Error::Validation("table order does not match the group".into()));
            }
            let mut mine: Vec<(usize, usize)> = self.classes.iter().map(|c| (c.rep_order, c.size)).collect();
            let mut theirs: Vec<(usize, usize)> =
                g.conjugacy_classes().iter().map(|c| (g.elem_order(c[0]), c.len())).collect();
            mine.sort_unstable();
            theirs.sort_unstable();
            if mine != theirs {
                return Err(Error::Validation("class profile does not match the group".into()));
            }
        }
        Ok(())
    }

    /// The degree `χ(1)` of character `i`.
    pub fn degree(&self, i: usize) -> Result<i128> {
        let id = self.classes.iter().position(|c| c.rep_order == 1).expect("validated");
        self.ring
            .as_integer(&self.characters[i][id])
            .filter(|&d| d > 0)
            .ok_or_else(|| Error::Validation(format!("character {i} has a non-integral degree")))
    }

    /// `Σ_{x ∈ G, ord(x) = m} χ_i(x)`.
    pub fn order_class_sum(&self, i: usize, m: usize) -> CycInt {
        let r = &self.ring;
        self.classes
            .iter()
            .enumerate()
            .filter(|(_, c)| c.rep_order == m)
            .fold(r.zero(), |acc, (j, c)| r.add(&acc, &r.scale(&self.characters[i][j], c.size as i128)))
    }

    /// Number of triples `(x, y, z)` with orders `periods` and `xyz = 1`:
    /// `(1/|G|) Σ_χ χ(1)⁻¹ Π_i Σ_{ord(x)=m_i} χ(x)`.
    pub fn count_triangle_solutions(&self, periods: [usize; 3]) -> Result<u128> {
        let r = &self.ring;
        let degrees: Vec<i128> = (0..self.characters.len()).map(|i| self.degree(i)).collect::<Result<_>>()?;
        let lcm = degrees.iter().fold(1i128, |l, &d| num_integer::lcm(l, d));
        let mut total = r.zero();
        for (i, &d) in degrees.iter().enumerate() {
            let prod = periods
                .iter()
                .map(|&m| self.order_class_sum(i, m))
                .reduce(|a, b| r.mul(&a, &b))
                .expect("three factors");
            total = r.add(&total, &r.scale(&prod, lcm / d));
        }
        let t = r.as_integer(&total).ok_or_else(|| Error::Inconsistency("character sum is not rational".into()))?;
        let den = lcm * self.group_order as i128;
        if t < 0 || t % den != 0 {
            return Err(Error::Inconsistency(format!("character sum {t} is not divisible by {den}")));
        }
        Ok((t / den) as u128)
    }
}
