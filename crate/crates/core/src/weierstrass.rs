//! Weierstrass gap sequences.

use crate::error::{Error, Result};
use crate::signature::Rational;
use serde::Serialize;

/// Largest genus for which all gap sequences are enumerated.
pub const MAX_ENUMERATION_GENUS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapSequence {
    pub genus: usize,
    pub gaps: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum InvalidGaps {
    #[error("expected {expected} gaps, got {got}")]
    Count { expected: usize, got: usize },
    #[error("gaps are not strictly increasing positive integers")]
    NotIncreasing,
    #[error("gap {0} exceeds 2g - 1")]
    TooLarge(usize),
    #[error("{0} + {1} is a gap but both summands are not")]
    NotClosed(usize, usize),
}

/// Checks the gap axioms. Closure of the non-gaps is verified on `[1, 4g]`.
pub fn is_valid_gap_sequence(genus: usize, gaps: &[usize]) -> std::result::Result<(), InvalidGaps> {
    if gaps.len() != genus {
        return Err(InvalidGaps::Count { expected: genus, got: gaps.len() });
    }
    if gaps.first().is_some_and(|&n| n == 0) || gaps.windows(2).any(|w| w[0] >= w[1]) {
        return Err(InvalidGaps::NotIncreasing);
    }
    if let Some(&n) = gaps.iter().find(|&&n| n + 1 > 2 * genus) {
        return Err(InvalidGaps::TooLarge(n));
    }
    let limit = 4 * genus;
    let is_gap = |k: usize| gaps.binary_search(&k).is_ok();
    for a in 1..=limit {
        for b in a..=limit - a {
            if !is_gap(a) && !is_gap(b) && is_gap(a + b) {
                return Err(InvalidGaps::NotClosed(a, b));
            }
        }
    }
    Ok(())
}

impl GapSequence {
    pub fn new(genus: usize, gaps: Vec<usize>) -> Result<Self> {
        is_valid_gap_sequence(genus, &gaps).map_err(|e| Error::Validation(e.to_string()))?;
        Ok(GapSequence { genus, gaps })
    }

    /// The `g` non-gaps in `{1, …, 2g}`.
    pub fn nongaps(&self) -> Vec<usize> {
        (1..=2 * self.genus).filter(|k| self.gaps.binary_search(k).is_err()).collect()
    }

    /// `Σ (n_i − i)`.
    pub fn weight(&self) -> usize {
        self.gaps.iter().enumerate().map(|(i, &n)| n - (i + 1)).sum()
    }

    /// `α_j + α_{g−j} ≥ 2g` for `0 < j < g`.
    pub fn nongap_pairing_holds(&self) -> bool {
        let a = self.nongaps();
        let g = self.genus;
        (1..g).all(|j| a[j - 1] + a[g - j - 1] >= 2 * g)
    }
}

pub fn weight(seq: &GapSequence) -> usize {
    seq.weight()
}

pub fn nongap_pairing_holds(seq: &GapSequence) -> bool {
    seq.nongap_pairing_holds()
}

/// All gap sequences of genus `g`, in lexicographic order.
pub fn enumerate_gap_sequences(genus: usize) -> Result<Vec<GapSequence>> {
    if genus == 0 {
        return Err(Error::domain("genus must be at least 1"));
    }
    if genus > MAX_ENUMERATION_GENUS {
        return Err(Error::resource("gap sequence genus", MAX_ENUMERATION_GENUS as u64));
    }
    let top = 2 * genus - 1;
    let mut out = Vec::new();
    // gap[k] for k in 1..=top
    let mut gap = vec![false; top + 1];
    let mut gaps = Vec::with_capacity(genus);
    fill(1, top, genus, &mut gap, &mut gaps, &mut out);
    Ok(out)
}

fn fill(k: usize, top: usize, genus: usize, gap: &mut [bool], gaps: &mut Vec<usize>, out: &mut Vec<GapSequence>) {
    if gaps.len() > genus || gaps.len() + (top + 1 - k) < genus {
        return;
    }
    if k > top {
        if gaps.len() == genus {
            out.push(GapSequence { genus, gaps: gaps.clone() });
        }
        return;
    }
    // k is forced to be a non-gap when it is a sum of two non-gaps
    let forced = (1..=k / 2).any(|a| !gap[a] && !gap[k - a]);
    if !forced {
        gap[k] = true;
        gaps.push(k);
        fill(k + 1, top, genus, gap, gaps, out);
        gaps.pop();
        gap[k] = false;
    }
    fill(k + 1, top, genus, gap, gaps, out);
}

/// `(2g + 2, g³ − g)`: the range for the number of Weierstrass points.
pub fn weierstrass_point_count_bounds(genus: usize) -> Result<(u128, u128)> {
    if genus < 2 {
        return Err(Error::domain(format!("genus must be at least 2, got {genus}")));
    }
    let g = genus as u128;
    Ok((2 * g + 2, total_weight(genus)))
}

/// Total weight `g³ − g` of all Weierstrass points.
pub fn total_weight(genus: usize) -> u128 {
    let g = genus as u128;
    g * g * g - g
}

/// `(n − 1)(m − 1)/2` for coprime `m, n ≥ 2`.
pub fn wnf_genus_bound(m: usize, n: usize) -> Result<Rational> {
    if m < 2 || n < 2 {
        return Err(Error::param(format!("m and n must be at least 2, got ({m}, {n})")));
    }
    if num_integer::gcd(m, n) != 1 {
        return Err(Error::domain(format!("gcd({m}, {n}) is not 1")));
    }
    Ok(Rational::new(((n - 1) * (m - 1)) as i128, 2))
}
