use super::{Elem, ElementSet, FiniteGroup};
use crate::error::{Error, Result};
use serde::Serialize;

/// Upper bound on the number of automorphisms enumerated explicitly.
pub const MAX_AUTOMORPHISMS: usize = 2_000_000;

/// Isomorphism invariants, compared before any exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub order_histogram: Vec<(usize, usize)>,
    /// Sorted `(element order, class size)` per conjugacy class.
    pub class_profile: Vec<(usize, usize)>,
    pub center_order: usize,
    pub derived_order: usize,
    pub abelian_invariants: Vec<usize>,
}

/// All automorphisms, each stored as the images of `generators`.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    pub generators: Vec<Elem>,
    pub images: Vec<Vec<Elem>>,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.images.len()
    }

    /// The full element map of automorphism `i`.
    pub fn full_map(&self, g: &FiniteGroup, i: usize) -> Vec<Elem> {
        g.extend_hom(&self.generators, g, &self.images[i]).expect("stored automorphism")
    }
}

impl FiniteGroup {
    pub fn fingerprint(&self) -> Fingerprint {
        let mut class_profile: Vec<(usize, usize)> =
            self.conjugacy_classes().iter().map(|c| (self.elem_order(c[0]), c.len())).collect();
        class_profile.sort_unstable();
        Fingerprint {
            order: self.order(),
            order_histogram: self.order_histogram(),
            class_profile,
            center_order: self.center().len(),
            derived_order: self.derived_subgroup().len(),
            abelian_invariants: self.abelian_invariants(),
        }
    }

    /// `Aut(G)`, enumerated by backtracking over images of a small generating set.
    pub fn automorphisms(&self) -> Result<&AutomorphismGroup> {
        self.aut
            .get_or_init(|| {
                let gens = self.small_generating_set();
                let mut images = Vec::new();
                let mut overflow = false;
                hom_search(self, &gens, self, true, &mut |imgs| {
                    if images.len() >= MAX_AUTOMORPHISMS {
                        overflow = true;
                        return false;
                    }
                    images.push(imgs.to_vec());
                    true
                });
                if overflow {
                    return Err(Error::resource("automorphism count", MAX_AUTOMORPHISMS as u64));
                }
                Ok(AutomorphismGroup { generators: gens, images })
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// An isomorphism `self → other` as a full element map, if one exists.
    pub fn find_isomorphism(&self, other: &FiniteGroup) -> Option<Vec<Elem>> {
        if self.fingerprint() != other.fingerprint() {
            return None;
        }
        let gens = self.small_generating_set();
        let mut found = None;
        hom_search(self, &gens, other, true, &mut |imgs| {
            found = self.extend_hom(&gens, other, imgs);
            false
        });
        found
    }

    pub fn is_isomorphic(&self, other: &FiniteGroup) -> bool {
        self.find_isomorphism(other).is_some()
    }

    /// Injective homomorphisms `self → other`, each reported once per
    /// assignment of the generator images. `visit` returns false to stop.
    pub fn for_each_monomorphism(&self, other: &FiniteGroup, visit: &mut dyn FnMut(&[Elem], &[Elem]) -> bool) {
        let gens = self.small_generating_set();
        hom_search(self, &gens, other, false, &mut |imgs| visit(&gens, imgs));
    }
}

/// Backtracking over images of `gens` such that the assignment extends to an
/// injective homomorphism into `tgt`. With `bijective`, the candidate images
/// must also match in conjugacy class size and the orders must agree.
fn hom_search(
    src: &FiniteGroup,
    gens: &[Elem],
    tgt: &FiniteGroup,
    bijective: bool,
    visit: &mut dyn FnMut(&[Elem]) -> bool,
) {
    if bijective && src.order() != tgt.order() {
        return;
    }
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&g| {
            tgt.elements()
                .filter(|&y| {
                    tgt.elem_order(y) == src.elem_order(g) && (!bijective || tgt.class_size(y) == src.class_size(g))
                })
                .collect()
        })
        .collect();
    let mut imgs = Vec::with_capacity(gens.len());
    rec(src, gens, tgt, &candidates, &mut imgs, visit);
}

fn rec(
    src: &FiniteGroup,
    gens: &[Elem],
    tgt: &FiniteGroup,
    candidates: &[Vec<Elem>],
    imgs: &mut Vec<Elem>,
    visit: &mut dyn FnMut(&[Elem]) -> bool,
) -> bool {
    let i = imgs.len();
    if i == gens.len() {
        return visit(imgs);
    }
    for &y in &candidates[i] {
        imgs.push(y);
        if partial_injective_hom(src, &gens[..=i], tgt, imgs) && !rec(src, gens, tgt, candidates, imgs, visit) {
            imgs.pop();
            return false;
        }
        imgs.pop();
    }
    true
}

/// Checks that `gens ↦ imgs` extends to an injective homomorphism on the
/// subgroup generated by `gens`.
fn partial_injective_hom(src: &FiniteGroup, gens: &[Elem], tgt: &FiniteGroup, imgs: &[Elem]) -> bool {
    let mut map = vec![usize::MAX; src.order()];
    let mut hit = ElementSet::empty(tgt.order());
    map[0] = 0;
    hit.insert(0);
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (g, &img) in gens.iter().zip(imgs) {
            let y = src.mul(x, *g);
            let fy = tgt.mul(map[x], img);
            if map[y] == usize::MAX {
                if !hit.insert(fy) {
                    return false;
                }
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return false;
            }
        }
    }
    true
}
