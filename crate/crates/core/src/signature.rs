//! Signatures, the Riemann–Hurwitz relation, cover genera and the classical
//! bounds on automorphism groups.

use crate::error::{Error, Result};
use num_rational::Ratio;
use serde::Serialize;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

pub type Rational = Ratio<i128>;

/// `(g₀; m₁, …, m_r)`.
///
/// The periods keep the order they were given in, since generating vectors
/// depend on it; equality, hashing and ordering use the sorted form.
#[derive(Clone, Debug)]
pub struct Signature {
    pub orbit_genus: usize,
    pub periods: Vec<usize>,
}

impl Signature {
    /// A signature in canonical (sorted) form.
    pub fn new(orbit_genus: usize, periods: impl Into<Vec<usize>>) -> Result<Self> {
        let mut s = Self::ordered(orbit_genus, periods)?;
        s.periods.sort_unstable();
        Ok(s)
    }

    /// A signature keeping the given period order.
    pub fn ordered(orbit_genus: usize, periods: impl Into<Vec<usize>>) -> Result<Self> {
        let periods = periods.into();
        if let Some(&m) = periods.iter().find(|&&m| m < 2) {
            return Err(Error::param(format!("periods must be at least 2, got {m}")));
        }
        Ok(Signature { orbit_genus, periods })
    }

    pub fn canonical(&self) -> Signature {
        let mut periods = self.periods.clone();
        periods.sort_unstable();
        Signature { orbit_genus: self.orbit_genus, periods }
    }

    pub fn is_canonical(&self) -> bool {
        self.periods.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn r(&self) -> usize {
        self.periods.len()
    }

    pub fn is_triangle(&self) -> bool {
        self.orbit_genus == 0 && self.periods.len() == 3
    }

    /// `2g₀ − 2 + Σ (1 − 1/m_j)`, the normalized hyperbolic area.
    pub fn area(&self) -> Rational {
        let mut a = Rational::from_integer(2 * self.orbit_genus as i128 - 2);
        for &m in &self.periods {
            a += Rational::new(m as i128 - 1, m as i128);
        }
        a
    }

    /// Whether some Fuchsian group has this signature (positive area).
    pub fn is_hyperbolic(&self) -> bool {
        self.area() > Rational::from_integer(0)
    }
}

impl PartialEq for Signature {
    fn eq(&self, other: &Self) -> bool {
        self.orbit_genus == other.orbit_genus && self.canonical().periods == other.canonical().periods
    }
}

impl Eq for Signature {}

impl Hash for Signature {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.orbit_genus.hash(state);
        self.canonical().periods.hash(state);
    }
}

impl PartialOrd for Signature {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Signature {
    /// By orbit genus, then number of periods, then the sorted periods.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let (a, b) = (self.canonical(), other.canonical());
        (a.orbit_genus, a.periods.len(), a.periods).cmp(&(b.orbit_genus, b.periods.len(), b.periods))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.periods.is_empty() {
            write!(f, "{};-", self.orbit_genus)
        } else {
            let p: Vec<String> = self.periods.iter().map(|m| m.to_string()).collect();
            write!(f, "{};{}", self.orbit_genus, p.join(","))
        }
    }
}

impl Serialize for Signature {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for Signature {
    type Err = Error;

    /// Parses `"g0;m1,...,mr"` or `"g0;-"`, optionally wrapped in parentheses.
    /// The period order is kept.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(&t);
        let (g0, rest) = t.split_once(';').ok_or_else(|| Error::parse(format!("signature {s:?} lacks ';'")))?;
        let g0 = g0.parse().map_err(|_| Error::parse(format!("bad orbit genus in {s:?}")))?;
        let periods = if rest.is_empty() || rest == "-" {
            Vec::new()
        } else {
            rest.split(',')
                .map(|m| m.parse::<usize>().map_err(|_| Error::parse(format!("bad period {m:?} in {s:?}"))))
                .collect::<Result<Vec<_>>>()?
        };
        Signature::ordered(g0, periods).map_err(|e| Error::parse(e.to_string()))
    }
}

/// Genus of a surface on which a group of the given order acts with this
/// signature: `g − 1 = |G|(g₀ − 1) + (|G|/2) Σ (1 − 1/m_j)`.
pub fn rh_genus(sig: &Signature, order: usize) -> Rational {
    Rational::from_integer(1) + sig.area() * Rational::from_integer(order as i128) / Rational::from_integer(2)
}

/// The integer genus, when the Riemann–Hurwitz value is integral.
pub fn rh_genus_integral(sig: &Signature, order: usize) -> Option<usize> {
    let g = rh_genus(sig, order);
    (g.is_integer() && *g.numer() >= 0).then(|| *g.numer() as usize)
}

/// All canonical signatures with periods drawn from `allowed` for which a
/// group of order `order` acts on a surface of genus `genus`.
///
/// Ordered by orbit genus, then number of periods, then lexicographically.
pub fn enumerate_signatures(genus: usize, order: usize, allowed: &[usize]) -> Result<Vec<Signature>> {
    if genus < 2 {
        return Err(Error::domain(format!("genus must be at least 2, got {genus}")));
    }
    if order == 0 {
        return Err(Error::param("group order must be positive"));
    }
    let mut periods: Vec<usize> = allowed.to_vec();
    periods.sort_unstable();
    periods.dedup();
    if let Some(&m) = periods.iter().find(|&&m| m < 2) {
        return Err(Error::param(format!("allowed periods must be at least 2, got {m}")));
    }
    // Σ (1 − 1/m_j) = (2g − 2)/|G| − 2(g₀ − 1)
    let target_total = Rational::new(2 * genus as i128 - 2, order as i128);
    let mut out = Vec::new();
    let mut g0 = 0usize;
    loop {
        let rest = target_total - Rational::from_integer(2 * g0 as i128 - 2);
        if rest < Rational::from_integer(0) {
            break;
        }
        let mut found = Vec::new();
        let mut cur = Vec::new();
        fill(&periods, 0, rest, &mut cur, &mut found);
        found.sort_by(|a: &Vec<usize>, b| (a.len(), a).cmp(&(b.len(), b)));
        out.extend(found.into_iter().map(|p| Signature { orbit_genus: g0, periods: p }));
        g0 += 1;
    }
    Ok(out)
}

fn fill(periods: &[usize], from: usize, rest: Rational, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == Rational::from_integer(0) {
        out.push(cur.clone());
        return;
    }
    for (i, &m) in periods.iter().enumerate().skip(from) {
        let term = Rational::new(m as i128 - 1, m as i128);
        // every later term is at least this one
        if term > rest {
            break;
        }
        cur.push(m);
        fill(periods, i, rest - term, cur, out);
        cur.pop();
    }
}

/// A ramified place of the base of a Galois cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamifiedPlace {
    /// Ramification index `e`.
    pub e: usize,
    /// Wild part `q` of `e` (1 when tame).
    pub q: usize,
    /// Degree of the place.
    pub d: usize,
    /// Number of such places.
    pub count: usize,
    /// An explicit different exponent, overriding the default for `(e, q)`.
    pub beta: Option<usize>,
}

impl RamifiedPlace {
    pub fn tame(e: usize, count: usize) -> Self {
        RamifiedPlace { e, q: 1, d: 1, count, beta: None }
    }

    /// A place of an Artin–Schreier double cover with odd pole order `n`;
    /// its different exponent is `n + 1`.
    pub fn artin_schreier(pole_order: usize) -> Self {
        RamifiedPlace { e: 2, q: 2, d: 1, count: 1, beta: Some(pole_order + 1) }
    }

    /// The different exponent: `e − 1` when tame, `e*·q + q − 2` when wild.
    pub fn different_exponent(&self) -> usize {
        self.beta.unwrap_or(if self.q == 1 { self.e - 1 } else { (self.e / self.q) * self.q + self.q - 2 })
    }
}

/// A Galois cover `K/E` of the given degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverData {
    pub degree: usize,
    pub base_genus: usize,
    pub places: Vec<RamifiedPlace>,
    /// Characteristic of the constant field, required for wild places.
    pub characteristic: Option<usize>,
}

impl CoverData {
    fn validate(&self) -> Result<()> {
        if self.degree == 0 {
            return Err(Error::param("cover degree must be positive"));
        }
        for pl in &self.places {
            if pl.e == 0 || pl.d == 0 || pl.q == 0 {
                return Err(Error::param("ramification index, wild part and place degree must be positive"));
            }
            if !self.degree.is_multiple_of(pl.e) {
                return Err(Error::param(format!(
                    "ramification index {} does not divide the degree {}",
                    pl.e, self.degree
                )));
            }
            if pl.q == 1 {
                if let Some(b) = pl.beta {
                    if b + 1 != pl.e {
                        return Err(Error::param(format!(
                            "a tame place with e = {} has different exponent {}",
                            pl.e,
                            pl.e - 1
                        )));
                    }
                }
                if let Some(p) = self.characteristic {
                    if p > 0 && pl.e % p == 0 {
                        return Err(Error::param(format!(
                            "e = {} is divisible by the characteristic {p}; give its wild part",
                            pl.e
                        )));
                    }
                }
                continue;
            }
            let p = self
                .characteristic
                .filter(|&p| p > 0)
                .ok_or_else(|| Error::param("wild ramification needs a positive characteristic"))?;
            if !is_power_of(pl.q, p) {
                return Err(Error::param(format!("wild part {} is not a power of {p}", pl.q)));
            }
            if pl.e % pl.q != 0 {
                return Err(Error::param(format!("wild part {} does not divide e = {}", pl.q, pl.e)));
            }
            let e_star = pl.e / pl.q;
            if e_star % p == 0 || (pl.q - 1) % e_star != 0 {
                return Err(Error::param(format!("tame part {e_star} must divide q − 1 = {}", pl.q - 1)));
            }
            if let Some(b) = pl.beta {
                if b < pl.e {
                    return Err(Error::param(format!(
                        "a wild place needs a different exponent of at least e = {}",
                        pl.e
                    )));
                }
            }
        }
        Ok(())
    }
}

fn is_power_of(mut q: usize, p: usize) -> bool {
    if p < 2 {
        return false;
    }
    while q.is_multiple_of(p) {
        q /= p;
    }
    q == 1
}

/// `2(g_K − 1) = 2(g_E − 1)·deg + deg · Σ d_i β_i / e_i`.
pub fn cover_genus(c: &CoverData) -> Result<Rational> {
    c.validate()?;
    let deg = Rational::from_integer(c.degree as i128);
    let mut rhs = Rational::from_integer(2 * c.base_genus as i128 - 2) * deg;
    for pl in &c.places {
        let contrib = Rational::new((pl.different_exponent() * pl.d * pl.count) as i128, pl.e as i128);
        rhs += deg * contrib;
    }
    Ok(rhs / Rational::from_integer(2) + Rational::from_integer(1))
}

fn need_genus(g: usize) -> Result<()> {
    if g < 2 {
        return Err(Error::domain(format!("genus must be at least 2, got {g}")));
    }
    Ok(())
}

/// `84(g − 1)`.
pub fn hurwitz_bound(g: usize) -> Result<u128> {
    need_genus(g)?;
    Ok(84 * (g as u128 - 1))
}

/// `2(2g + 1)`, the largest order of a single automorphism in characteristic 0.
pub fn wiman_bound(g: usize) -> Result<u128> {
    need_genus(g)?;
    Ok(2 * (2 * g as u128 + 1))
}

/// `16g⁴`.
pub fn poschar_bound(g: usize) -> Result<u128> {
    need_genus(g)?;
    Ok(16 * (g as u128).pow(4))
}

/// `4(g − 1)`; groups above this are large.
pub fn large_group_threshold(g: usize) -> Result<u128> {
    need_genus(g)?;
    Ok(4 * (g as u128 - 1))
}

/// `2p(g + 1)(2g + 1)²`, bounding the order of one automorphism in characteristic `p`.
pub fn poschar_element_order_bound(g: usize, p: usize) -> Result<u128> {
    need_genus(g)?;
    let g = g as u128;
    Ok(2 * p as u128 * (g + 1) * (2 * g + 1).pow(2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyName {
    #[serde(rename = "Henn-i")]
    HennI,
    #[serde(rename = "Henn-ii")]
    HennII,
    #[serde(rename = "Henn-iii")]
    Hermitian,
    #[serde(rename = "Henn-iv")]
    Suzuki,
    Stichtenoth,
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyName::HennI => "Henn-i",
            FamilyName::HennII => "Henn-ii",
            FamilyName::Hermitian => "Henn-iii",
            FamilyName::Suzuki => "Henn-iv",
            FamilyName::Stichtenoth => "Stichtenoth",
        })
    }
}

/// One member of a family of curves with exceptionally large automorphism group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionalFamily {
    pub name: FamilyName,
    pub characteristic: u64,
    /// Named parameters, e.g. `[("k", 2)]` or `[("q0", 2), ("q", 8)]`.
    pub params: Vec<(String, u64)>,
    pub equation: String,
    pub genus: u64,
    pub group_order: u128,
    pub group: String,
}

fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)).collect()
}

/// Every member of the exceptional families with genus in `2..=max_genus`,
/// ordered by family, then parameters.
///
/// For the hyperelliptic family `y² = x^q − x` the order given is that of the
/// full group, `2·|PGL(2, q)|`.
pub fn exceptional_families(max_genus: u64) -> Result<Vec<ExceptionalFamily>> {
    if max_genus < 2 {
        return Err(Error::domain(format!("genus must be at least 2, got {max_genus}")));
    }
    let mut out = Vec::new();
    let p2 = |e: u32| 2u128.pow(e);
    let mut k = 2u32;
    while 2u64.pow(k - 1) <= max_genus {
        out.push(ExceptionalFamily {
            name: FamilyName::HennI,
            characteristic: 2,
            params: vec![("k".into(), k as u64)],
            equation: format!("y^2 + y + x^{} = 0", 2u64.pow(k) + 1),
            genus: 2u64.pow(k - 1),
            group_order: p2(2 * k + 1) * (p2(k) + 1),
            group: format!("order 2^{} * {}", 2 * k + 1, 2u64.pow(k) + 1),
        });
        k += 1;
    }
    // prime powers q with the family's genus in range
    let prime_powers = |min_q: u64, max_q: u64, odd_only: bool| {
        let mut qs = Vec::new();
        for p in primes_up_to(max_q) {
            if odd_only && p == 2 {
                continue;
            }
            let mut q = p;
            let mut e = 1u32;
            while q <= max_q {
                if q >= min_q {
                    qs.push((p, e, q));
                }
                q *= p;
                e += 1;
            }
        }
        qs.sort_by_key(|&(p, e, q)| (q, p, e));
        qs
    };
    for (p, _, q) in prime_powers(5, 2 * max_genus + 1, true) {
        let q128 = q as u128;
        out.push(ExceptionalFamily {
            name: FamilyName::HennII,
            characteristic: p,
            params: vec![("q".into(), q)],
            equation: format!("y^2 = x^{q} - x"),
            genus: (q - 1) / 2,
            group_order: 2 * q128 * (q128 * q128 - 1),
            group: format!("C2 . PGL(2,{q})"),
        });
    }
    let mut q = 3u64;
    let mut herm = Vec::new();
    while (q * q - q) / 2 <= max_genus {
        q += 1;
    }
    for (p, _, q) in prime_powers(3, q, false) {
        let g = (q * q - q) / 2;
        if g < 2 || g > max_genus {
            continue;
        }
        let q128 = q as u128;
        herm.push(ExceptionalFamily {
            name: FamilyName::Hermitian,
            characteristic: p,
            params: vec![("q".into(), q)],
            equation: format!("y^{q} + y = x^{}", q + 1),
            genus: g,
            group_order: q128.pow(3) * (q128.pow(3) + 1) * (q128 * q128 - 1),
            group: format!("PGU(3,{q})"),
        });
    }
    out.extend(herm);
    let mut r = 1u32;
    loop {
        let q0 = 2u64.pow(r);
        let q = 2 * q0 * q0;
        let g = q0 * (q - 1);
        if g > max_genus {
            break;
        }
        let q128 = q as u128;
        out.push(ExceptionalFamily {
            name: FamilyName::Suzuki,
            characteristic: 2,
            params: vec![("q0".into(), q0), ("q".into(), q)],
            equation: format!("y^{q} + y = x^{q0}(x^{q} + x)"),
            genus: g,
            group_order: q128 * q128 * (q128 * q128 + 1) * (q128 - 1),
            group: format!("Sz({q})"),
        });
        r += 1;
    }
    for p in primes_up_to(2 * max_genus + 1) {
        let mut n = 1u32;
        loop {
            let pn = (p as u128).pow(n);
            let g = pn * (pn - 1) / 2;
            if g > max_genus as u128 {
                break;
            }
            if g >= 2 {
                out.push(ExceptionalFamily {
                    name: FamilyName::Stichtenoth,
                    characteristic: p,
                    params: vec![("p".into(), p), ("n".into(), n as u64)],
                    equation: format!("y^{pn} + y = x^{}", pn + 1),
                    genus: g as u64,
                    group_order: pn.pow(3) * (pn.pow(3) + 1) * (pn * pn - 1),
                    group: format!("PGU(3,{pn})"),
                });
            }
            n += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0;5,5,5", "2;-", "1;2,2", "0;2,3,7"] {
            assert_eq!(s.parse::<Signature>().unwrap().to_string(), s);
        }
        assert_eq!("(0; 5, 5, 5)".parse::<Signature>().unwrap().to_string(), "0;5,5,5");
        assert!("0;1,2".parse::<Signature>().is_err());
        assert!("x;2".parse::<Signature>().is_err());
    }

    #[test]
    fn equality_ignores_period_order() {
        let a: Signature = "0;2,5,10".parse().unwrap();
        let b: Signature = "0;10,2,5".parse().unwrap();
        assert_eq!(a, b);
        assert!(!b.is_canonical());
    }
}
