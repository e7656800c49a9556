//! Polynomials, rational functions and Möbius maps over a [`Field`].

use super::field::{Field, Fq};
use crate::error::{Error, Result};
use serde::Serialize;

/// Dense coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Poly(Vec<Fq>);

impl Poly {
    pub fn new(mut coeffs: Vec<Fq>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn constant(c: Fq) -> Poly {
        Poly::new(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(c: Fq, k: usize) -> Poly {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Poly::new(v)
    }

    /// `x + c`.
    pub fn linear(c: Fq) -> Poly {
        Poly::new(vec![c, 1])
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Fq {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn add(&self, f: &Field, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let at = |p: &Poly, i: usize| p.0.get(i).copied().unwrap_or(0);
        Poly::new((0..n).map(|i| f.add(at(self, i), at(other, i))).collect())
    }

    pub fn sub(&self, f: &Field, other: &Poly) -> Poly {
        self.add(f, &other.scale(f, f.neg(1)))
    }

    pub fn scale(&self, f: &Field, c: Fq) -> Poly {
        Poly::new(self.0.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, f: &Field, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, f: &Field, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::constant(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(f, &base);
            }
        }
        acc
    }

    pub fn eval(&self, f: &Field, x: Fq) -> Fq {
        self.0.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, f: &Field, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or_else(|| Error::domain("polynomial division by zero"))?;
        let inv = f.inv(d.lead())?;
        let mut r = self.0.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut q = vec![0; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = f.mul(r[k + dd], inv);
            q[k] = c;
            if c != 0 {
                for (j, &b) in d.0.iter().enumerate() {
                    r[k + j] = f.sub(r[k + j], f.mul(c, b));
                }
            }
        }
        r.truncate(dd);
        Ok((Poly::new(q), Poly::new(r)))
    }

    pub fn monic(&self, f: &Field) -> Poly {
        match f.inv(self.lead()) {
            Ok(c) => self.scale(f, c),
            Err(_) => Poly::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, f: &Field, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(f, &b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// Multiplicity of `a` as a root.
    pub fn root_multiplicity(&self, f: &Field, a: Fq) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = Poly::new(vec![f.neg(a), 1]);
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = p.div_rem(f, &lin).expect("linear divisor");
            if !r.is_zero() {
                return k;
            }
            p = q;
            k += 1;
        }
    }

    /// `Σ c_k X^k Y^{n−k}` for `X = ax + b`, `Y = cx + d`, with `n` at least
    /// the degree. Equals `Y^n · P(X/Y)`.
    pub fn homogenize_at(&self, f: &Field, n: usize, m: &Mobius) -> Poly {
        let x = Poly::new(vec![m.b, m.a]);
        let y = Poly::new(vec![m.d, m.c]);
        // Horner: r ← r·X + c_k·Y^{n−k}, descending from k = n
        let mut ypow = vec![Poly::constant(1)];
        for i in 1..=n {
            let next = ypow[i - 1].mul(f, &y);
            ypow.push(next);
        }
        let at = |k: usize| self.0.get(k).copied().unwrap_or(0);
        let mut r = Poly::constant(at(n));
        for k in (0..n).rev() {
            r = r.mul(f, &x).add(f, &ypow[n - k].scale(f, at(k)));
        }
        r
    }

    pub fn render(&self, f: &Field) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| {
                let coef = if c == 1 && k > 0 { String::new() } else { f.show(c) };
                let sep = if coef.is_empty() || k == 0 { "" } else { "*" };
                match k {
                    0 => coef,
                    1 => format!("{coef}{sep}x"),
                    _ => format!("{coef}{sep}x^{k}"),
                }
            })
            .collect();
        terms.join(" + ")
    }
}

/// A point of `P¹`: `None` is infinity.
pub type Point = Option<Fq>;

/// `x ↦ (ax + b)/(cx + d)` with `ad − bc ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Mobius {
    pub a: Fq,
    pub b: Fq,
    pub c: Fq,
    pub d: Fq,
}

impl Mobius {
    pub fn new(f: &Field, a: Fq, b: Fq, c: Fq, d: Fq) -> Result<Mobius> {
        if f.sub(f.mul(a, d), f.mul(b, c)) == 0 {
            return Err(Error::domain("singular Möbius map"));
        }
        Ok(Mobius { a, b, c, d }.normalized(f))
    }

    pub fn identity() -> Mobius {
        Mobius { a: 1, b: 0, c: 0, d: 1 }
    }

    /// `x ↦ λx`.
    pub fn scaling(f: &Field, l: Fq) -> Result<Mobius> {
        Mobius::new(f, l, 0, 0, 1)
    }

    /// `x ↦ x + t`.
    pub fn translation(t: Fq) -> Mobius {
        Mobius { a: 1, b: t, c: 0, d: 1 }
    }

    /// `x ↦ 1/x`.
    pub fn inversion() -> Mobius {
        Mobius { a: 0, b: 1, c: 1, d: 0 }
    }

    /// Scales so the first nonzero of `(a, b, c, d)` is 1.
    fn normalized(self, f: &Field) -> Mobius {
        let lead = [self.a, self.b, self.c, self.d].into_iter().find(|&v| v != 0).unwrap_or(1);
        let s = f.inv(lead).expect("nonzero");
        Mobius { a: f.mul(self.a, s), b: f.mul(self.b, s), c: f.mul(self.c, s), d: f.mul(self.d, s) }
    }

    /// `self ∘ other`.
    pub fn compose(&self, f: &Field, other: &Mobius) -> Mobius {
        let m = |x: Fq, y: Fq, z: Fq, w: Fq| f.add(f.mul(x, y), f.mul(z, w));
        Mobius {
            a: m(self.a, other.a, self.b, other.c),
            b: m(self.a, other.b, self.b, other.d),
            c: m(self.c, other.a, self.d, other.c),
            d: m(self.c, other.b, self.d, other.d),
        }
        .normalized(f)
    }

    pub fn apply(&self, f: &Field, x: Point) -> Point {
        match x {
            None => (self.c != 0).then(|| f.mul(self.a, f.inv(self.c).expect("nonzero"))),
            Some(x) => {
                let den = f.add(f.mul(self.c, x), self.d);
                let num = f.add(f.mul(self.a, x), self.b);
                (den != 0).then(|| f.mul(num, f.inv(den).expect("nonzero")))
            }
        }
    }

    /// The map sending `0, 1, ∞` to `p, q, r` (distinct points).
    pub fn from_three(f: &Field, p: Point, q: Point, r: Point) -> Result<Mobius> {
        // finite case: (r(q−p)x + p(r−q)) / ((q−p)x + (r−q))
        let m = match (p, q, r) {
            (Some(p), Some(q), Some(r)) => {
                let qp = f.sub(q, p);
                let rq = f.sub(r, q);
                Mobius::new(f, f.mul(r, qp), f.mul(p, rq), qp, rq)?
            }
            (None, Some(q), Some(r)) => Mobius::new(f, r, f.sub(q, r), 1, 0)?,
            (Some(p), None, Some(r)) => Mobius::new(f, r, f.neg(p), 1, f.neg(1))?,
            (Some(p), Some(q), None) => Mobius::new(f, f.sub(q, p), p, 0, 1)?,
            _ => return Err(Error::domain("points must be distinct")),
        };
        Ok(m)
    }

    pub fn inverse(&self, f: &Field) -> Mobius {
        Mobius { a: self.d, b: f.neg(self.b), c: f.neg(self.c), d: self.a }.normalized(f)
    }

    pub fn render(&self, f: &Field) -> String {
        let p = |a: Fq, b: Fq| Poly::new(vec![b, a]).render(f);
        format!("x -> ({})/({})", p(self.a, self.b), p(self.c, self.d))
    }
}

/// Closure of a set of Möbius maps under composition.
pub fn generated_group(f: &Field, gens: &[Mobius], cap: usize) -> Result<Vec<Mobius>> {
    let mut seen = std::collections::HashSet::new();
    let mut out = vec![Mobius::identity()];
    seen.insert(Mobius::identity());
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for g in gens {
            let y = g.compose(f, &x);
            if seen.insert(y) {
                if out.len() >= cap {
                    return Err(Error::resource("Möbius group closure", cap as u64));
                }
                out.push(y);
            }
        }
        i += 1;
    }
    Ok(out)
}

/// `num/den` in lowest terms with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalFunction {
    pub num: Poly,
    pub den: Poly,
}

impl RationalFunction {
    pub fn new(f: &Field, num: Poly, den: Poly) -> Result<RationalFunction> {
        if den.is_zero() {
            return Err(Error::domain("rational function with zero denominator"));
        }
        let g = num.gcd(f, &den);
        let (num, den) =
            if g.degree().unwrap_or(0) > 0 { (num.div_rem(f, &g)?.0, den.div_rem(f, &g)?.0) } else { (num, den) };
        let s = f.inv(den.lead())?;
        Ok(RationalFunction { num: num.scale(f, s), den: den.scale(f, s) })
    }

    pub fn polynomial(p: Poly) -> RationalFunction {
        RationalFunction { num: p, den: Poly::constant(1) }
    }

    fn degs(&self) -> (usize, usize) {
        (self.num.degree().unwrap_or(0), self.den.degree().unwrap_or(0))
    }

    /// `max(deg num, deg den)`.
    pub fn degree(&self) -> usize {
        let (a, b) = self.degs();
        a.max(b)
    }

    pub fn eval(&self, f: &Field, x: Point) -> Point {
        let (dn, dd) = self.degs();
        match x {
            None => match dn.cmp(&dd) {
                std::cmp::Ordering::Greater => None,
                std::cmp::Ordering::Less => Some(0),
                std::cmp::Ordering::Equal => Some(f.mul(self.num.lead(), f.inv(self.den.lead()).ok()?)),
            },
            Some(x) => {
                let d = self.den.eval(f, x);
                (d != 0).then(|| f.mul(self.num.eval(f, x), f.inv(d).expect("nonzero")))
            }
        }
    }

    /// Whether `z ∘ σ = z`, by cross-multiplying homogenized numerators.
    pub fn invariant_under(&self, f: &Field, m: &Mobius) -> bool {
        let (dn, dd) = self.degs();
        let n = dn.max(dd);
        // z∘σ = (Y^{n−dn}·N̂) / (Y^{n−dd}·D̂) with N̂, D̂ homogenized at σ
        let y = Poly::new(vec![m.d, m.c]);
        let top = self.num.homogenize_at(f, dn, m).mul(f, &y.pow(f, (n - dn) as u64));
        let bot = self.den.homogenize_at(f, dd, m).mul(f, &y.pow(f, (n - dd) as u64));
        top.mul(f, &self.den) == bot.mul(f, &self.num)
    }

    pub fn render(&self, f: &Field) -> String {
        if self.den == Poly::constant(1) {
            self.num.render(f)
        } else {
            format!("({}) / ({})", self.num.render(f), self.den.render(f))
        }
    }
}
