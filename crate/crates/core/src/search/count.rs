use crate::error::{Error, Result};
use crate::group::character::CharacterTable;
use crate::group::{ElementSet, FiniteGroup};
use crate::signature::Signature;

/// Number of tuples `(a, b, c)` with entries in `sub`, `ord(c_j) = m_j` and
/// the long relation, by convolution over the group.
fn hom_count_in(g: &FiniteGroup, sub: &ElementSet, sig: &Signature) -> u128 {
    let n = g.order();
    let members = sub.to_vec();
    let mut dist = vec![0u128; n];
    dist[0] = 1;
    if sig.orbit_genus > 0 {
        let mut comm = vec![0u128; n];
        for &a in &members {
            for &b in &members {
                comm[g.commutator(a, b)] += 1;
            }
        }
        let support: Vec<(usize, u128)> = comm.iter().copied().enumerate().filter(|&(_, c)| c > 0).collect();
        for _ in 0..sig.orbit_genus {
            dist = convolve(g, &dist, &support);
        }
    }
    for &m in &sig.periods {
        let step: Vec<(usize, u128)> = members.iter().filter(|&&x| g.elem_order(x) == m).map(|&x| (x, 1)).collect();
        if step.is_empty() {
            return 0;
        }
        dist = convolve(g, &dist, &step);
    }
    dist[0]
}

fn convolve(g: &FiniteGroup, dist: &[u128], step: &[(usize, u128)]) -> Vec<u128> {
    let mut out = vec![0u128; dist.len()];
    for (x, &c) in dist.iter().enumerate().filter(|(_, &c)| c > 0) {
        for &(y, w) in step {
            out[g.mul(x, y)] += c * w;
        }
    }
    out
}

/// Homomorphisms from the Fuchsian group of `sig` onto or into `g` with
/// torsion-free kernel, i.e. tuples satisfying the relation with every `c_j`
/// of exact order `m_j`. Generation is not required.
pub fn count_torsion_free_homs(g: &FiniteGroup, sig: &Signature) -> u128 {
    hom_count_in(g, &ElementSet::full(g.order()), sig)
}

/// Same count for a triangle signature through the character formula.
pub fn count_torsion_free_homs_character(table: &CharacterTable, sig: &Signature) -> Result<u128> {
    if !sig.is_triangle() {
        return Err(Error::Unsupported("the character formula is implemented for triangle signatures only".into()));
    }
    table.count_triangle_solutions([sig.periods[0], sig.periods[1], sig.periods[2]])
}

/// Surface-kernel epimorphisms, by Möbius inversion over the subgroup lattice:
/// `epi(H) = hom(H) − Σ_{K < H} epi(K)`.
pub fn count_epimorphisms(g: &FiniteGroup, sig: &Signature) -> Result<u128> {
    let classes = g.subgroup_classes()?;
    let need_order = sig.periods.iter().fold(1usize, |l, &m| num_integer::lcm(l, m));
    // per class representative, computed bottom-up
    let mut epi = vec![0u128; classes.len()];
    for (i, cls) in classes.iter().enumerate() {
        if cls.order % need_order != 0 {
            continue;
        }
        let h = cls.representative();
        let mut value = hom_count_in(g, h, sig) as i128;
        if value == 0 {
            continue;
        }
        for (j, sub) in classes.iter().enumerate().take(i) {
            if epi[j] == 0 || sub.order >= cls.order || cls.order % sub.order != 0 {
                continue;
            }
            let inside = sub.members.iter().filter(|k| k.is_subset(h)).count() as i128;
            value -= inside * epi[j] as i128;
        }
        if value < 0 {
            return Err(Error::Inconsistency(format!(
                "negative epimorphism count for a subgroup of order {}",
                cls.order
            )));
        }
        epi[i] = value as u128;
    }
    let top = classes
        .iter()
        .position(|c| c.order == g.order())
        .ok_or_else(|| Error::Inconsistency("the whole group is missing from its subgroup list".into()))?;
    Ok(epi[top])
}

/// Epimorphisms up to automorphisms of `g`: `epi / |Aut(G)|`.
pub fn count_epimorphism_classes(g: &FiniteGroup, sig: &Signature) -> Result<u128> {
    let epi = count_epimorphisms(g, sig)?;
    let aut = g.automorphisms()?.order() as u128;
    if epi % aut != 0 {
        return Err(Error::Inconsistency(format!("{epi} epimorphisms is not a multiple of |Aut| = {aut}")));
    }
    Ok(epi / aut)
}
