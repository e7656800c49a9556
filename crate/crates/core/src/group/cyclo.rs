//! Exact arithmetic in the ring of integers `Z[ζ_N]`, power basis modulo `Φ_N`.

use crate::error::{Error, Result};

/// An element of `Z[ζ_N]`: coefficients of `1, ζ, …, ζ^(φ(N)-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycInt(pub Vec<i128>);

/// The ring `Z[ζ_N]` with its reduction polynomial.
#[derive(Clone, Debug)]
pub struct CyclotomicRing {
    n: usize,
    /// `Φ_N`, lowest degree first, monic.
    phi: Vec<i128>,
}

impl CyclotomicRing {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::param("cyclotomic order must be positive"));
        }
        Ok(CyclotomicRing { n, phi: cyclotomic_polynomial(n) })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `φ(N)`, the rank of the power basis.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn zero(&self) -> CycInt {
        CycInt(vec![0; self.degree()])
    }

    pub fn int(&self, k: i128) -> CycInt {
        let mut v = self.zero();
        v.0[0] = k;
        v
    }

    /// `ζ^k`.
    pub fn zeta_pow(&self, k: i64) -> CycInt {
        let e = k.rem_euclid(self.n as i64) as usize;
        let mut p = vec![0i128; e + 1];
        p[e] = 1;
        self.reduce(p)
    }

    /// Reduces an arbitrary polynomial in `ζ` modulo `Φ_N`.
    pub fn reduce(&self, mut p: Vec<i128>) -> CycInt {
        let d = self.degree();
        for k in (d..p.len()).rev() {
            let c = p[k];
            if c != 0 {
                for (j, &m) in self.phi.iter().enumerate() {
                    p[k - d + j] -= c * m;
                }
            }
        }
        p.resize(d, 0);
        CycInt(p)
    }

    pub fn add(&self, a: &CycInt, b: &CycInt) -> CycInt {
        CycInt(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, a: &CycInt, b: &CycInt) -> CycInt {
        CycInt(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }

    pub fn scale(&self, a: &CycInt, k: i128) -> CycInt {
        CycInt(a.0.iter().map(|x| x * k).collect())
    }

    pub fn mul(&self, a: &CycInt, b: &CycInt) -> CycInt {
        let mut p = vec![0i128; a.0.len() + b.0.len()];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                p[i + j] += x * y;
            }
        }
        self.reduce(p)
    }

    /// Complex conjugation `ζ ↦ ζ⁻¹`.
    pub fn conj(&self, a: &CycInt) -> CycInt {
        let mut p = vec![0i128; self.n + 1];
        for (j, &c) in a.0.iter().enumerate() {
            p[(self.n - j) % self.n] += c;
        }
        self.reduce(p)
    }

    /// The rational integer `a` represents, if any.
    pub fn as_integer(&self, a: &CycInt) -> Option<i128> {
        if a.0[1..].iter().all(|&c| c == 0) {
            Some(a.0[0])
        } else {
            None
        }
    }
}

/// `Φ_n` with integer coefficients, lowest degree first.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i128> {
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut p = vec![0i128; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = exact_div(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

fn exact_div(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i128; num.len() - dd];
    for k in (0..q.len()).rev() {
        let c = r[k + dd];
        q[k] = c;
        for (j, &m) in den.iter().enumerate() {
            r[k + j] -= c * m;
        }
    }
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn sum_of_roots_of_unity_vanishes() {
        for n in 2..30 {
            let r = CyclotomicRing::new(n).unwrap();
            let s = (0..n as i64).fold(r.zero(), |acc, k| r.add(&acc, &r.zeta_pow(k)));
            assert_eq!(r.as_integer(&s), Some(0), "n = {n}");
        }
    }

    #[test]
    fn zeta_times_conjugate_is_one() {
        let r = CyclotomicRing::new(15).unwrap();
        for k in 0..15 {
            let z = r.zeta_pow(k);
            assert_eq!(r.as_integer(&r.mul(&z, &r.conj(&z))), Some(1));
        }
    }
}
