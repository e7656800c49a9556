//! Invariant rational functions of the finite subgroups of `PGL(2, k)`.
//!
//! Each case yields `z(x)` of degree `|Ḡ|` with `k(x)^Ḡ = k(z)`, explicit
//! Möbius generators of `Ḡ`, and the ramification of `x ↦ z`.

use super::field::{is_prime, Field, FieldInfo, Fq};
use super::poly::{generated_group, Mobius, Point, Poly, RationalFunction};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Largest degree of `z` handled symbolically.
pub const MAX_TABLE1_DEGREE: u64 = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "group", rename_all = "kebab-case")]
pub enum Table1Case {
    /// `C_m`.
    Cyclic {
        m: u32,
    },
    /// Dihedral of order `2m`.
    Dihedral {
        m: u32,
    },
    A4,
    S4,
    /// `A₅` away from characteristics 2, 3, 5.
    A5,
    /// `A₅` in characteristic 3.
    A5Char3,
    /// Elementary abelian `U ≅ F_{p^t}` acting by translations.
    Additive {
        t: u32,
    },
    /// `K_m = U ⋊ C_m`.
    Km {
        m: u32,
        t: u32,
    },
    Psl {
        q: u32,
    },
    Pgl {
        q: u32,
    },
}

impl fmt::Display for Table1Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Table1Case::Cyclic { m } => write!(f, "C_{m}"),
            Table1Case::Dihedral { m } => write!(f, "D_{}", 2 * m),
            Table1Case::A4 => write!(f, "A4"),
            Table1Case::S4 => write!(f, "S4"),
            Table1Case::A5 => write!(f, "A5"),
            Table1Case::A5Char3 => write!(f, "A5 (p=3)"),
            Table1Case::Additive { t } => write!(f, "U (t={t})"),
            Table1Case::Km { m, t } => write!(f, "K_{m} (t={t})"),
            Table1Case::Psl { q } => write!(f, "PSL(2,{q})"),
            Table1Case::Pgl { q } => write!(f, "PGL(2,{q})"),
        }
    }
}

/// `(p, f)` with `q = p^f`, if `q` is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut r = q;
    let mut f = 0;
    while r.is_multiple_of(p) {
        r /= p;
        f += 1;
    }
    (r == 1).then_some((p, f))
}

/// Smallest `s ≥ 1` with `m | p^s − 1`.
fn multiplicative_order(p: u32, m: u32) -> Option<u32> {
    if m == 0 || num_integer::gcd(p, m) != 1 {
        return None;
    }
    let mut x = p as u64 % m as u64;
    for s in 1..=m {
        if x % m as u64 == 1 % m as u64 {
            return Some(s);
        }
        x = x * p as u64 % m as u64;
    }
    None
}

impl Table1Case {
    /// Builds a case from its row number and parameters; row 5 with `p = 3`
    /// selects the characteristic-3 form.
    pub fn from_row(row: u8, m: Option<u32>, t: Option<u32>, q: Option<u32>, p: u32) -> Result<Table1Case> {
        let need = |v: Option<u32>, name: &str| v.ok_or_else(|| Error::param(format!("row {row} needs {name}")));
        Ok(match row {
            1 => Table1Case::Cyclic { m: need(m, "m")? },
            2 => Table1Case::Dihedral { m: need(m, "m")? },
            3 => Table1Case::A4,
            4 => Table1Case::S4,
            5 if p == 3 => Table1Case::A5Char3,
            5 => Table1Case::A5,
            6 => Table1Case::Additive { t: need(t, "t")? },
            7 => Table1Case::Km { m: need(m, "m")?, t: need(t, "t")? },
            8 => Table1Case::Psl { q: need(q, "q")? },
            9 => Table1Case::Pgl { q: need(q, "q")? },
            _ => return Err(Error::param(format!("row {row} is not in 1..=9"))),
        })
    }

    pub fn row(&self) -> u8 {
        match self {
            Table1Case::Cyclic { .. } => 1,
            Table1Case::Dihedral { .. } => 2,
            Table1Case::A4 => 3,
            Table1Case::S4 => 4,
            Table1Case::A5 | Table1Case::A5Char3 => 5,
            Table1Case::Additive { .. } => 6,
            Table1Case::Km { .. } => 7,
            Table1Case::Psl { .. } => 8,
            Table1Case::Pgl { .. } => 9,
        }
    }

    /// `|Ḡ|` in characteristic `p`.
    pub fn group_order(&self, p: u32) -> u64 {
        let pt = |t: u32| (p as u64).pow(t);
        match *self {
            Table1Case::Cyclic { m } => m as u64,
            Table1Case::Dihedral { m } => 2 * m as u64,
            Table1Case::A4 => 12,
            Table1Case::S4 => 24,
            Table1Case::A5 | Table1Case::A5Char3 => 60,
            Table1Case::Additive { t } => pt(t),
            Table1Case::Km { m, t } => m as u64 * pt(t),
            Table1Case::Psl { q } => {
                let q = q as u64;
                q * (q * q - 1) / 2
            }
            Table1Case::Pgl { q } => {
                let q = q as u64;
                q * (q * q - 1)
            }
        }
    }

    /// Ramification indices over the branch points.
    pub fn ramification(&self, p: u32) -> Vec<u64> {
        let pt = |t: u32| (p as u64).pow(t);
        match *self {
            Table1Case::Cyclic { m } => vec![m as u64, m as u64],
            Table1Case::Dihedral { m } => vec![2, 2, m as u64],
            Table1Case::A4 => vec![2, 3, 3],
            Table1Case::S4 => vec![2, 3, 4],
            Table1Case::A5 => vec![2, 3, 5],
            Table1Case::A5Char3 => vec![6, 5],
            Table1Case::Additive { t } => vec![pt(t)],
            Table1Case::Km { m, t } => vec![m as u64 * pt(t), m as u64],
            Table1Case::Psl { q } => {
                let q = q as u64;
                vec![q * (q - 1) / 2, q.div_ceil(2)]
            }
            Table1Case::Pgl { q } => {
                let q = q as u64;
                vec![q * (q - 1), q + 1]
            }
        }
    }

    /// Checks the characteristic and parameter constraints.
    pub fn check(&self, p: u32) -> Result<()> {
        if !is_prime(p as u64) {
            return Err(Error::param(format!("characteristic {p} is not prime")));
        }
        let fail = |c: &str| Err(Error::domain(format!("{self} requires {c} (p = {p})")));
        match *self {
            Table1Case::Cyclic { m } | Table1Case::Dihedral { m } => {
                let min = if matches!(self, Table1Case::Dihedral { .. }) { 2 } else { 1 };
                if m < min {
                    return Err(Error::param(format!("m must be at least {min}")));
                }
                if m % p == 0 {
                    return fail("(m,p) = 1");
                }
            }
            Table1Case::A4 | Table1Case::S4 if p == 2 || p == 3 => return fail("p ≠ 2, 3"),
            Table1Case::A5 if p == 2 || p == 3 || p == 5 => return fail("p ≠ 2, 3, 5"),
            Table1Case::A5Char3 if p != 3 => return fail("p = 3"),
            Table1Case::Additive { t: 0 } => return Err(Error::param("t must be positive")),
            Table1Case::Km { m, t } => {
                if t == 0 || m < 2 {
                    return Err(Error::param("K_m needs t ≥ 1 and m ≥ 2"));
                }
                if ((p as u64).pow(t) - 1) % m as u64 != 0 {
                    return fail("m | p^t − 1");
                }
            }
            Table1Case::Psl { q } | Table1Case::Pgl { q } => match prime_power(q) {
                Some((r, _)) if r == p => {
                    if r == 2 && matches!(self, Table1Case::Psl { .. }) {
                        return fail("p ≠ 2");
                    }
                }
                _ => return fail("q a power of p"),
            },
            _ => {}
        }
        if self.group_order(p) > MAX_TABLE1_DEGREE {
            return Err(Error::resource("degree of z", MAX_TABLE1_DEGREE));
        }
        Ok(())
    }

    /// Degree over `F_p` of the smallest field carrying `z`.
    pub fn function_field_degree(&self, p: u32) -> Result<u32> {
        self.check(p)?;
        Ok(match *self {
            Table1Case::A5Char3 => 2,
            Table1Case::Additive { t } | Table1Case::Km { t, .. } => t,
            Table1Case::Psl { q } | Table1Case::Pgl { q } => prime_power(q).expect("checked").1,
            _ => 1,
        })
    }

    /// Degree over `F_p` of the smallest field carrying the Möbius generators.
    pub fn action_field_degree(&self, p: u32) -> Result<u32> {
        let base = self.function_field_degree(p)?;
        let root = |m: u32| {
            multiplicative_order(p, m).ok_or_else(|| Error::domain(format!("no {m}-th roots in characteristic {p}")))
        };
        Ok(match *self {
            Table1Case::Cyclic { m } | Table1Case::Dihedral { m } => root(m)?,
            Table1Case::A4 | Table1Case::S4 => root(4)?,
            Table1Case::A5 => root(5)?,
            // the pole fiber of z splits over F_81
            Table1Case::A5Char3 => 4,
            _ => base,
        })
    }

    pub fn function_field(&self, p: u32) -> Result<Field> {
        Field::new(p, self.function_field_degree(p)?)
    }

    pub fn action_field(&self, p: u32) -> Result<Field> {
        Field::new(p, self.action_field_degree(p)?)
    }
}

/// `Π_{a ∈ S} (x − a)`.
fn product_of_linears(f: &Field, roots: impl IntoIterator<Item = Fq>) -> Poly {
    roots.into_iter().fold(Poly::constant(1), |acc, a| acc.mul(f, &Poly::new(vec![f.neg(a), 1])))
}

/// Sparse integer coefficients `(exponent, value)`.
fn int_poly(f: &Field, terms: &[(usize, i64)]) -> Poly {
    let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
    let mut v = vec![0; deg + 1];
    for &(k, c) in terms {
        v[k] = f.add(v[k], f.from_int(c));
    }
    Poly::new(v)
}

fn x() -> Poly {
    Poly::monomial(1, 1)
}

fn require_subfield(f: &Field, t: u32) -> Result<Vec<Fq>> {
    f.subfield(t).map_err(|_| Error::domain(format!("F_{} does not contain F_{}^{t}", f.size(), f.characteristic())))
}

/// `i`, a fixed square root of −1: `g^{(q−1)/4}`.
fn sqrt_minus_one(f: &Field) -> Result<Fq> {
    f.root_of_unity(4)
}

/// `x^q − x` for the subfield of size `q`.
fn artin_schreier(f: &Field, q: u32) -> Poly {
    Poly::monomial(1, q as usize).sub(f, &x())
}

/// The invariant function `z` of the case over `f`.
pub fn table1_function(case: Table1Case, f: &Field) -> Result<RationalFunction> {
    let p = f.characteristic();
    case.check(p)?;
    if !f.degree().is_multiple_of(case.function_field_degree(p)?) {
        return Err(Error::domain(format!("{case} is not defined over F_{}", f.size())));
    }
    let one = Poly::constant(1);
    let (num, den) = match case {
        Table1Case::Cyclic { m } => (Poly::monomial(1, m as usize), one),
        Table1Case::Dihedral { m } => (int_poly(f, &[(2 * m as usize, 1), (0, 1)]), Poly::monomial(1, m as usize)),
        Table1Case::A4 => {
            let num = int_poly(f, &[(12, 1), (8, -33), (4, -33), (0, 1)]);
            let x4m1 = int_poly(f, &[(4, 1), (0, -1)]);
            (num, Poly::monomial(1, 2).mul(f, &x4m1.pow(f, 2)))
        }
        Table1Case::S4 => {
            let num = int_poly(f, &[(8, 1), (4, 14), (0, 1)]).pow(f, 3);
            let inner = int_poly(f, &[(5, 1), (1, -1)]);
            (num, inner.pow(f, 4).scale(f, f.from_int(108)))
        }
        Table1Case::A5 => {
            let num = int_poly(f, &[(20, -1), (15, 228), (10, -494), (5, -228), (0, -1)]).pow(f, 3);
            let inner = int_poly(f, &[(11, 1), (6, 11), (1, -1)]);
            (num, inner.pow(f, 5))
        }
        Table1Case::A5Char3 => {
            let i = sqrt_minus_one(f)?;
            let num = int_poly(f, &[(10, 1), (0, -1)]).pow(f, 6);
            let mut inner = int_poly(f, &[(11, 1), (1, 1)]);
            inner = inner.add(f, &Poly::monomial(f.mul(f.from_int(2), i), 6));
            (num, inner.pow(f, 5))
        }
        Table1Case::Additive { t } => {
            (product_of_linears(f, require_subfield(f, t)?.into_iter().map(|a| f.neg(a))), one)
        }
        Table1Case::Km { m, t } => {
            let h = require_subfield(f, t)?;
            let mut b: Vec<Fq> = h.iter().filter(|&&a| a != 0).map(|&a| f.pow(a, m as u64)).collect();
            b.sort_unstable();
            b.dedup();
            let inner =
                b.iter().fold(x(), |acc, &bj| acc.mul(f, &Poly::monomial(1, m as usize).sub(f, &Poly::constant(bj))));
            (inner.pow(f, m as u64), one)
        }
        Table1Case::Psl { q } | Table1Case::Pgl { q } => {
            let w = artin_schreier(f, q);
            let top = w.pow(f, (q - 1) as u64).add(f, &one);
            let q = q as u64;
            if matches!(case, Table1Case::Psl { .. }) {
                (top.pow(f, q.div_ceil(2)), w.pow(f, q * (q - 1) / 2))
            } else {
                (top.pow(f, q + 1), w.pow(f, q * (q - 1)))
            }
        }
    };
    RationalFunction::new(f, num, den)
}

/// Möbius generators of `Ḡ` over `f`.
///
/// The characteristic-3 `A₅` has no closed-form generators here; they come
/// from [`stabilizer`] and require the pole fiber to be rational over `f`.
pub fn table1_generators(case: Table1Case, f: &Field) -> Result<Vec<Mobius>> {
    let p = f.characteristic();
    case.check(p)?;
    let need = case.action_field_degree(p)?;
    if !f.degree().is_multiple_of(need) {
        return Err(Error::domain(format!("{case} needs F_{p}^{need}; got F_{}", f.size())));
    }
    let gens = match case {
        Table1Case::Cyclic { m } => vec![Mobius::scaling(f, f.root_of_unity(m)?)?],
        Table1Case::Dihedral { m } => vec![Mobius::scaling(f, f.root_of_unity(m)?)?, Mobius::inversion()],
        Table1Case::A4 | Table1Case::S4 => {
            let i = sqrt_minus_one(f)?;
            // order 3: x ↦ (x + i)/(x − i)
            let r3 = Mobius::new(f, 1, i, 1, f.neg(i))?;
            let first = if case == Table1Case::A4 { Mobius::scaling(f, f.neg(1))? } else { Mobius::scaling(f, i)? };
            vec![first, r3]
        }
        Table1Case::A5 => {
            let z = f.root_of_unity(5)?;
            let zp = |k: u64| f.pow(z, k);
            let s1 = f.sub(zp(1), zp(4));
            let s2 = f.sub(zp(2), zp(3));
            vec![Mobius::scaling(f, z)?, Mobius::new(f, 0, f.neg(1), 1, 0)?, Mobius::new(f, f.neg(s1), s2, s2, s1)?]
        }
        Table1Case::A5Char3 => {
            let z = table1_function(case, f)?;
            let group = stabilizer(f, &z)?;
            small_generating_set(f, &group)?
        }
        Table1Case::Additive { t } | Table1Case::Km { t, .. } => {
            let mut g: Vec<Mobius> = f.subfield_basis(t)?.into_iter().map(Mobius::translation).collect();
            if let Table1Case::Km { m, .. } = case {
                g.push(Mobius::scaling(f, f.root_of_unity(m)?)?);
            }
            g
        }
        Table1Case::Psl { q } | Table1Case::Pgl { q } => {
            let (_, e) = prime_power(q).expect("checked");
            let mut g: Vec<Mobius> = f.subfield_basis(e)?.into_iter().map(Mobius::translation).collect();
            let prim = f.root_of_unity(q - 1)?;
            if matches!(case, Table1Case::Psl { .. }) {
                g.push(Mobius::scaling(f, f.mul(prim, prim))?);
                g.push(Mobius::new(f, 0, f.neg(1), 1, 0)?);
            } else {
                g.push(Mobius::scaling(f, prim)?);
                g.push(Mobius::inversion());
            }
            g.retain(|m| *m != Mobius::identity());
            g
        }
    };
    Ok(gens)
}

/// Greedy generating set of a finite Möbius group, in list order.
fn small_generating_set(f: &Field, group: &[Mobius]) -> Result<Vec<Mobius>> {
    let mut gens = Vec::new();
    let mut span = vec![Mobius::identity()];
    for m in group {
        if span.contains(m) {
            continue;
        }
        gens.push(*m);
        span = generated_group(f, &gens, group.len())?;
        if span.len() == group.len() {
            break;
        }
    }
    Ok(gens)
}

/// Points of `P¹(f)`, infinity first.
fn projective_line(f: &Field) -> impl Iterator<Item = Point> + '_ {
    std::iter::once(None).chain(f.elements().map(Some))
}

/// All Möbius maps over `f` fixing `z`, found by matching three poles.
pub fn stabilizer(f: &Field, z: &RationalFunction) -> Result<Vec<Mobius>> {
    let poles: Vec<Point> = projective_line(f).filter(|&x| z.eval(f, x).is_none()).collect();
    if poles.len() < 3 {
        return Err(Error::domain(format!("fewer than three rational poles over F_{}", f.size())));
    }
    let base = Mobius::from_three(f, poles[0], poles[1], poles[2])?.inverse(f);
    let probes: Vec<Point> = projective_line(f).take(8).collect();
    let mut out = Vec::new();
    for &a in &poles {
        for &b in &poles {
            for &c in &poles {
                if a == b || b == c || a == c {
                    continue;
                }
                let m = Mobius::from_three(f, a, b, c)?.compose(f, &base);
                if probes.iter().all(|&x| z.eval(f, m.apply(f, x)) == z.eval(f, x)) && z.invariant_under(f, &m) {
                    out.push(m);
                }
            }
        }
    }
    Ok(out)
}

/// An embedding `F_small → F_big` as a lookup table.
pub fn embedding(small: &Field, big: &Field) -> Result<Vec<Fq>> {
    if small.characteristic() != big.characteristic() || !big.degree().is_multiple_of(small.degree()) {
        return Err(Error::domain(format!("F_{} does not embed in F_{}", small.size(), big.size())));
    }
    let modulus = &small.info().modulus;
    let p = small.characteristic();
    let lift = |c: u32| big.from_int(c as i64);
    let root = big
        .elements()
        .find(|&r| modulus.iter().rev().fold(0, |acc, &c| big.add(big.mul(acc, r), lift(c))) == 0)
        .ok_or_else(|| Error::Inconsistency("defining polynomial has no root in the extension".into()))?;
    let s = small.degree();
    Ok(small
        .elements()
        .map(|a| {
            let mut a = a;
            let mut acc = 0;
            let mut power = 1;
            for _ in 0..s {
                acc = big.add(acc, big.mul(lift(a % p), power));
                power = big.mul(power, root);
                a /= p;
            }
            acc
        })
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorCheck {
    pub map: String,
    pub symbolic: bool,
    pub evaluated: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvarianceReport {
    pub field: FieldInfo,
    pub degree: usize,
    pub generated_order: usize,
    pub evaluation_field: FieldInfo,
    pub samples: usize,
    pub generators: Vec<GeneratorCheck>,
    pub invariant: bool,
}

fn render_point(f: &Field, x: Point) -> String {
    x.map_or_else(|| "inf".to_string(), |v| f.show(v))
}

/// Checks `z ∘ σ = z` symbolically for each generator, then by evaluation at
/// more than `2·deg z + 1` points of an extension of `f`.
pub fn verify_invariance(f: &Field, z: &RationalFunction, gens: &[Mobius]) -> Result<InvarianceReport> {
    let deg = z.degree();
    let want = 2 * deg + 2;
    let mut s = f.degree();
    while (f.size() as u64).pow(s / f.degree()) + 1 < want as u64 {
        s += f.degree();
    }
    let big = if s == f.degree() { f.clone() } else { Field::new(f.characteristic(), s)? };
    let emb = embedding(f, &big)?;
    let lift_poly = |p: &Poly| Poly::new(p.coeffs().iter().map(|&c| emb[c as usize]).collect());
    let zb = RationalFunction { num: lift_poly(&z.num), den: lift_poly(&z.den) };
    let samples: Vec<Point> = projective_line(&big).take(want).collect();
    let generators: Vec<GeneratorCheck> = gens
        .iter()
        .map(|m| {
            let symbolic = z.invariant_under(f, m);
            let mb = Mobius { a: emb[m.a as usize], b: emb[m.b as usize], c: emb[m.c as usize], d: emb[m.d as usize] };
            let bad = samples.iter().find(|&&x| zb.eval(&big, mb.apply(&big, x)) != zb.eval(&big, x));
            GeneratorCheck {
                map: m.render(f),
                symbolic,
                evaluated: bad.is_none(),
                counterexample: bad.map(|&x| render_point(&big, x)),
            }
        })
        .collect();
    let generated_order = generated_group(f, gens, 1 << 20)?.len();
    let invariant = generators.iter().all(|g| g.symbolic && g.evaluated);
    Ok(InvarianceReport {
        field: f.info(),
        degree: deg,
        generated_order,
        evaluation_field: big.info(),
        samples: samples.len(),
        generators,
        invariant,
    })
}

/// [`verify_invariance`] for a case over its action field.
pub fn verify_case_invariance(case: Table1Case, f: &Field) -> Result<InvarianceReport> {
    let z = table1_function(case, f)?;
    let gens = table1_generators(case, f)?;
    verify_invariance(f, &z, &gens)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fiber {
    /// The critical value, `inf` for infinity.
    pub value: String,
    pub points: usize,
    pub e: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RamificationReport {
    pub case: Table1Case,
    pub field: FieldInfo,
    pub degree: usize,
    pub expected: Vec<u64>,
    pub fibers: Vec<Fiber>,
    pub confirmed: bool,
}

/// Ramified fibers of `z` visible over `f`: fibers whose rational points,
/// counted with multiplicity, exhaust `deg z`.
pub fn ramified_fibers(f: &Field, z: &RationalFunction) -> Vec<Fiber> {
    let deg = z.degree();
    let mut groups: BTreeMap<Option<Fq>, Vec<Point>> = BTreeMap::new();
    for x in projective_line(f) {
        groups.entry(z.eval(f, x)).or_default().push(x);
    }
    let (dn, dd) = (z.num.degree().unwrap_or(0), z.den.degree().unwrap_or(0));
    let mut out = Vec::new();
    for (c, pts) in groups {
        if pts.len() >= deg {
            continue;
        }
        let a = pts[0];
        let e = match (c, a) {
            (None, Some(a)) => z.den.root_multiplicity(f, a),
            (None, None) => dn - dd,
            (Some(c), a) => {
                let h = z.num.sub(f, &z.den.scale(f, c));
                match a {
                    Some(a) => h.root_multiplicity(f, a),
                    None => dd - h.degree().unwrap_or(0),
                }
            }
        };
        if e > 1 && e * pts.len() == deg {
            out.push(Fiber { value: render_point(f, c), points: pts.len(), e });
        }
    }
    out
}

/// Largest field tried when looking for rational ramified fibers.
pub const MAX_RAMIFICATION_FIELD: u32 = 1 << 15;

/// Finds a fiber for every entry of the ramification tuple, extending the
/// field until all are rational or the size cap is reached.
pub fn verify_ramification(case: Table1Case, p: u32) -> Result<RamificationReport> {
    let base = case.function_field_degree(p)?;
    let mut expected = case.ramification(p);
    expected.sort_unstable();
    let mut last = None;
    let mut s = base;
    while (p as u64).pow(s) <= MAX_RAMIFICATION_FIELD as u64 {
        let f = Field::new(p, s)?;
        let z = table1_function(case, &f)?;
        let fibers = ramified_fibers(&f, &z);
        let mut got: Vec<u64> = fibers.iter().map(|x| x.e as u64).collect();
        got.sort_unstable();
        let confirmed = got == expected;
        let report = RamificationReport {
            case,
            field: f.info(),
            degree: z.degree(),
            expected: expected.clone(),
            fibers,
            confirmed,
        };
        if confirmed {
            return Ok(report);
        }
        last = Some(report);
        s += base;
    }
    last.ok_or_else(|| Error::resource("ramification field size", MAX_RAMIFICATION_FIELD as u64))
}
