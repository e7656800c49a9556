//! Finite fields `F_{p^s}` by exp/log tables.
//!
//! An element is encoded as `Σ c_i p^i`, the coefficient vector in the
//! polynomial basis `1, g, g², …` where `g` is a root of the first primitive
//! polynomial of degree `s` in lexicographic order. `g` generates `F_q^*`.

use crate::error::{Error, Result};
use serde::Serialize;

/// Largest field size supported.
pub const MAX_FIELD_SIZE: u32 = 1 << 16;

pub type Fq = u32;

#[derive(Clone, Debug)]
pub struct Field {
    p: u32,
    s: u32,
    q: u32,
    /// `exp[k] = g^k` for `k < q − 1`.
    exp: Vec<Fq>,
    /// `log[a]` for `a ≠ 0`.
    log: Vec<u32>,
    /// Coefficients of the defining polynomial, low to high, monic.
    modulus: Vec<u32>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.s == other.s && self.modulus == other.modulus
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FieldInfo {
    pub p: u32,
    pub s: u32,
    pub q: u32,
    pub modulus: Vec<u32>,
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl Field {
    pub fn new(p: u32, s: u32) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::param(format!("{p} is not prime")));
        }
        if s == 0 {
            return Err(Error::param("field degree must be positive"));
        }
        let q = (p as u64).checked_pow(s).filter(|&q| q <= MAX_FIELD_SIZE as u64);
        let Some(q) = q else {
            return Err(Error::resource("finite field size", MAX_FIELD_SIZE as u64));
        };
        let q = q as u32;
        let n = (q - 1) as usize;
        // candidate monic polynomials x^s + Σ c_i x^i, c_0 ≠ 0, in encoding order
        for low in 0..q {
            let mut modulus: Vec<u32> = (0..s).map(|i| (low / p.pow(i)) % p).collect();
            if modulus[0] == 0 {
                continue;
            }
            modulus.push(1);
            if let Some(exp) = Self::power_table(p, s, &modulus, n) {
                let mut log = vec![0u32; q as usize];
                for (k, &e) in exp.iter().enumerate() {
                    log[e as usize] = k as u32;
                }
                return Ok(Field { p, s, q, exp, log, modulus });
            }
        }
        Err(Error::Inconsistency(format!("no primitive polynomial of degree {s} over F_{p}")))
    }

    /// Powers of `x` modulo `modulus`, if `x` has order exactly `n`.
    fn power_table(p: u32, s: u32, modulus: &[u32], n: usize) -> Option<Vec<Fq>> {
        let s = s as usize;
        let mut v = vec![0u32; s];
        v[0] = 1;
        let mut exp = Vec::with_capacity(n);
        let mut seen = vec![false; n + 1];
        for _ in 0..n {
            let e = encode(p, &v);
            if seen[e as usize] || e == 0 {
                return None;
            }
            seen[e as usize] = true;
            exp.push(e);
            // multiply by x
            let top = v[s - 1];
            for i in (1..s).rev() {
                v[i] = v[i - 1];
            }
            v[0] = 0;
            for i in 0..s {
                v[i] = (v[i] + p - (top * modulus[i]) % p) % p;
            }
        }
        (encode(p, &v) == 1).then_some(exp)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.s
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    pub fn info(&self) -> FieldInfo {
        FieldInfo { p: self.p, s: self.s, q: self.q, modulus: self.modulus.clone() }
    }

    pub fn zero(&self) -> Fq {
        0
    }

    pub fn one(&self) -> Fq {
        1
    }

    /// The primitive element `g`.
    pub fn generator(&self) -> Fq {
        if self.q == 2 {
            1
        } else {
            self.exp[1]
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        0..self.q
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        if self.s == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: Fq) -> Fq {
        if self.s == 1 {
            return (self.p - a) % self.p;
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        self.exp[((self.log[a as usize] + self.log[b as usize]) % n) as usize]
    }

    pub fn inv(&self, a: Fq) -> Result<Fq> {
        if a == 0 {
            return Err(Error::domain("division by zero in a finite field"));
        }
        let n = self.q - 1;
        Ok(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn pow(&self, a: Fq, e: u64) -> Fq {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % n)) % n) as usize]
    }

    /// The image of an integer.
    pub fn from_int(&self, k: i64) -> Fq {
        k.rem_euclid(self.p as i64) as Fq
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Fq) -> u32 {
        let n = self.q - 1;
        n / num_integer::gcd(n, self.log[a as usize])
    }

    /// `g^{(q−1)/m}`, a primitive `m`-th root of unity.
    pub fn root_of_unity(&self, m: u32) -> Result<Fq> {
        if m == 0 || !(self.q - 1).is_multiple_of(m) {
            return Err(Error::domain(format!("F_{} has no primitive {m}-th root of unity", self.q)));
        }
        Ok(self.pow(self.generator(), ((self.q - 1) / m) as u64))
    }

    /// The subfield `F_{p^t}`, sorted.
    pub fn subfield(&self, t: u32) -> Result<Vec<Fq>> {
        if t == 0 || !self.s.is_multiple_of(t) {
            return Err(Error::domain(format!("F_{}^{t} is not a subfield of F_{}", self.p, self.q)));
        }
        let pt = (self.p as u64).pow(t);
        Ok(self.elements().filter(|&a| self.pow(a, pt) == a).collect())
    }

    /// A basis of the subfield `F_{p^t}` over `F_p`.
    pub fn subfield_basis(&self, t: u32) -> Result<Vec<Fq>> {
        let sub = self.subfield(t)?;
        let mut span = vec![0];
        let mut basis = Vec::new();
        for &a in &sub {
            if span.contains(&a) {
                continue;
            }
            basis.push(a);
            let mut next = Vec::with_capacity(span.len() * self.p as usize);
            for c in 0..self.p {
                let ca = self.mul(self.from_int(c as i64), a);
                next.extend(span.iter().map(|&x| self.add(x, ca)));
            }
            span = next;
            if basis.len() == t as usize {
                break;
            }
        }
        Ok(basis)
    }

    /// A square root of `a`, if one exists.
    pub fn sqrt(&self, a: Fq) -> Option<Fq> {
        self.elements().find(|&x| self.mul(x, x) == a)
    }

    /// Human-readable form, `g^k` for nonzero elements.
    pub fn show(&self, a: Fq) -> String {
        if self.s == 1 || a <= 1 {
            a.to_string()
        } else {
            format!("g^{}", self.log[a as usize])
        }
    }
}

fn encode(p: u32, v: &[u32]) -> Fq {
    v.iter().rev().fold(0, |acc, &c| acc * p + c)
}
