use super::{Elem, ElementSet, FiniteGroup};
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Upper bound on the number of subgroups enumerated.
pub const MAX_SUBGROUPS: usize = 200_000;

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub order: usize,
    pub normal: bool,
    /// All conjugates; the first is the representative.
    pub members: Vec<ElementSet>,
    /// Generators of the representative.
    pub generators: Vec<Elem>,
}

impl SubgroupClass {
    pub fn representative(&self) -> &ElementSet {
        &self.members[0]
    }
}

impl FiniteGroup {
    /// Subgroups up to conjugacy, sorted by order then by representative.
    pub fn subgroup_classes(&self) -> Result<&[SubgroupClass]> {
        self.subgroups
            .get_or_init(|| self.compute_subgroup_classes())
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(Clone::clone)
    }

    fn compute_subgroup_classes(&self) -> Result<Vec<SubgroupClass>> {
        let n = self.order();
        let mut index: HashMap<ElementSet, usize> = HashMap::new();
        let mut subs: Vec<(ElementSet, Vec<Elem>)> = Vec::new();
        let mut cyclic_gens: Vec<Elem> = Vec::new();
        for x in 0..n {
            let c = self.generated(&[x]);
            if !index.contains_key(&c) {
                index.insert(c.clone(), subs.len());
                subs.push((c, if x == 0 { vec![] } else { vec![x] }));
                if x != 0 {
                    cyclic_gens.push(x);
                }
            }
        }
        let mut frontier: Vec<usize> = (0..subs.len()).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &si in &frontier {
                for &x in &cyclic_gens {
                    if subs[si].0.contains(x) {
                        continue;
                    }
                    let mut gens = subs[si].1.clone();
                    gens.push(x);
                    let t = self.generated(&gens);
                    if !index.contains_key(&t) {
                        if subs.len() >= MAX_SUBGROUPS {
                            return Err(Error::resource("subgroup count", MAX_SUBGROUPS as u64));
                        }
                        index.insert(t.clone(), subs.len());
                        next.push(subs.len());
                        subs.push((t, gens));
                    }
                }
            }
            frontier = next;
        }
        let mut order: Vec<usize> = (0..subs.len()).collect();
        order.sort_by(|&a, &b| subs[a].0.len().cmp(&subs[b].0.len()).then_with(|| subs[a].0.cmp(&subs[b].0)));
        let mut assigned = vec![false; subs.len()];
        let mut classes = Vec::new();
        for &si in &order {
            if assigned[si] {
                continue;
            }
            let (rep, gens) = &subs[si];
            let mut members = vec![rep.clone()];
            assigned[si] = true;
            for g in 0..n {
                let conj = ElementSet::from_iter(n, rep.iter().map(|h| self.conj(g, h)));
                let ci = index[&conj];
                if !assigned[ci] {
                    assigned[ci] = true;
                    members.push(conj);
                }
            }
            classes.push(SubgroupClass {
                order: rep.len(),
                normal: members.len() == 1,
                members,
                generators: gens.clone(),
            });
        }
        Ok(classes)
    }

    /// The subgroup on `sub` as a standalone group, with the embedding map.
    pub fn subgroup_group(&self, sub: &ElementSet) -> Result<(FiniteGroup, Vec<Elem>)> {
        let elems = sub.to_vec();
        if elems.first() != Some(&0) {
            return Err(Error::domain("subset does not contain the identity"));
        }
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &e) in elems.iter().enumerate() {
            pos[e] = i;
        }
        let m = elems.len();
        let mut table = vec![0u32; m * m];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                let p = pos[self.mul(a, b)];
                if p == usize::MAX {
                    return Err(Error::domain("subset is not closed under multiplication"));
                }
                table[i * m + j] = p as u32;
            }
        }
        Ok((FiniteGroup::from_raw(m, table, String::new())?, elems))
    }
}
