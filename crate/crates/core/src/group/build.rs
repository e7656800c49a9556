use super::{Elem, FiniteGroup, Perm, MAX_ORDER};
use crate::error::{Error, Result};
use num_integer::Integer;
use std::fmt;

/// Standard constructions. Dihedral and dicyclic groups are named by their order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Standard {
    Cyclic(usize),
    /// Dihedral group of the given (even) order.
    Dihedral(usize),
    /// Direct product of cyclic groups of the given orders.
    Abelian(Vec<usize>),
    Symmetric(usize),
    Alternating(usize),
    /// Dicyclic group of the given order (a multiple of 4); order 8 is Q8.
    Dicyclic(usize),
    /// `C_n ⋊ C_m`, the generator of `C_m` acting by `x ↦ x^k`.
    Semidirect {
        n: usize,
        m: usize,
        k: usize,
    },
    /// `PSL(2, p)` for a prime `p`.
    Psl2(usize),
    /// `PGL(2, p)` for a prime `p`.
    Pgl2(usize),
    /// `SL(2, p)` for a prime `p`.
    Sl2(usize),
    DirectProduct(Box<Standard>, Box<Standard>),
}

impl fmt::Display for Standard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Standard::Cyclic(n) => write!(f, "C{n}"),
            Standard::Dihedral(n) => write!(f, "D{n}"),
            Standard::Abelian(parts) => {
                let s: Vec<String> = parts.iter().map(|p| format!("C{p}")).collect();
                write!(f, "{}", s.join(" x "))
            }
            Standard::Symmetric(n) => write!(f, "S{n}"),
            Standard::Alternating(n) => write!(f, "A{n}"),
            Standard::Dicyclic(8) => write!(f, "Q8"),
            Standard::Dicyclic(n) => write!(f, "Dic{}", n / 4),
            Standard::Semidirect { n, m, k } => write!(f, "C{n} :{k} C{m}"),
            Standard::Psl2(p) => write!(f, "PSL(2,{p})"),
            Standard::Pgl2(p) => write!(f, "PGL(2,{p})"),
            Standard::Sl2(p) => write!(f, "SL(2,{p})"),
            Standard::DirectProduct(a, b) => write!(f, "{a} x {b}"),
        }
    }
}

impl Standard {
    pub fn build(&self) -> Result<FiniteGroup> {
        let g = match self {
            Standard::Cyclic(n) => cyclic(*n)?,
            Standard::Dihedral(n) => dihedral(*n)?,
            Standard::Abelian(parts) => {
                let mut g = cyclic(1)?;
                for &p in parts {
                    g = g.direct_product(&cyclic(p)?)?;
                }
                g
            }
            Standard::Symmetric(n) => symmetric(*n)?,
            Standard::Alternating(n) => alternating(*n)?,
            Standard::Dicyclic(n) => dicyclic(*n)?,
            Standard::Semidirect { n, m, k } => metacyclic(*n, *m, *k)?,
            Standard::Psl2(p) => matrix_group(*p, MatrixKind::Psl)?,
            Standard::Pgl2(p) => matrix_group(*p, MatrixKind::Pgl)?,
            Standard::Sl2(p) => matrix_group(*p, MatrixKind::Sl)?,
            Standard::DirectProduct(a, b) => a.build()?.direct_product(&b.build()?)?,
        };
        Ok(g.with_label(self.to_string()))
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::param("group order must be positive"));
    }
    if n > MAX_ORDER {
        return Err(Error::resource("group order", MAX_ORDER as u64));
    }
    Ok(())
}

fn table_from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<FiniteGroup> {
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = f(a, b) as u32;
        }
    }
    FiniteGroup::from_raw(n, table, String::new())
}

pub(crate) fn cyclic(n: usize) -> Result<FiniteGroup> {
    check_order(n)?;
    table_from_fn(n, |a, b| (a + b) % n)
}

/// Element `i` is `r^(i mod k)` when `i < k`, else `r^(i-k)·s`.
pub(crate) fn dihedral(order: usize) -> Result<FiniteGroup> {
    if order < 2 || !order.is_multiple_of(2) {
        return Err(Error::param(format!("dihedral order must be even and at least 2, got {order}")));
    }
    check_order(order)?;
    let k = order / 2;
    table_from_fn(order, |a, b| {
        let (i, s) = (a % k, a >= k);
        let (j, t) = (b % k, b >= k);
        // r^i s^s · r^j s^t = r^(i ± j) s^(s+t)
        let e = if s { (i + k - j) % k } else { (i + j) % k };
        if s ^ t {
            e + k
        } else {
            e
        }
    })
}

/// Dicyclic group of order `4m`: `a^(2m) = 1`, `x² = a^m`, `x a x⁻¹ = a⁻¹`.
pub(crate) fn dicyclic(order: usize) -> Result<FiniteGroup> {
    if order < 8 || !order.is_multiple_of(4) {
        return Err(Error::param(format!("dicyclic order must be a multiple of 4 and at least 8, got {order}")));
    }
    check_order(order)?;
    let m = order / 4;
    let k = 2 * m;
    table_from_fn(order, |a, b| {
        let (i, s) = (a % k, a >= k);
        let (j, t) = (b % k, b >= k);
        match (s, t) {
            (false, _) => (i + j) % k + if t { k } else { 0 },
            (true, false) => (i + k - j) % k + k,
            (true, true) => (i + k - j + m) % k,
        }
    })
}

/// `C_n ⋊_k C_m`: element `(a, b)` stored as `a + n·b`.
pub(crate) fn metacyclic(n: usize, m: usize, k: usize) -> Result<FiniteGroup> {
    check_order(n * m)?;
    if n == 0 || m == 0 {
        return Err(Error::param("factor orders must be positive"));
    }
    if n > 1 && k.gcd(&n) != 1 {
        return Err(Error::param(format!("k = {k} is not a unit modulo {n}")));
    }
    if mod_pow(k, m, n) != 1 % n {
        return Err(Error::param(format!("k^m = {k}^{m} is not 1 modulo {n}")));
    }
    table_from_fn(n * m, |x, y| {
        let (a1, b1) = (x % n, x / n);
        let (a2, b2) = (y % n, y / n);
        let a = (a1 + mod_pow(k, b1, n) * a2) % n;
        a + n * ((b1 + b2) % m)
    })
}

pub(crate) fn mod_pow(base: usize, mut e: usize, m: usize) -> usize {
    if m == 1 {
        return 0;
    }
    let mut b = (base % m) as u128;
    let mut acc = 1u128;
    let m = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc as usize
}

fn cycle_perm(degree: usize, cycle: &[usize]) -> Perm {
    let mut img: Vec<u32> = (0..degree as u32).collect();
    for w in 0..cycle.len() {
        img[cycle[w]] = cycle[(w + 1) % cycle.len()] as u32;
    }
    Perm::new(img).expect("cycle is a permutation")
}

pub(crate) fn symmetric(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::param("symmetric degree must be positive"));
    }
    if n > 6 {
        return Err(Error::Unsupported(format!("S{n}: only degrees up to 6")));
    }
    if n <= 2 {
        return cyclic(n.max(1));
    }
    let gens = [cycle_perm(n, &[0, 1]), cycle_perm(n, &(0..n).collect::<Vec<_>>())];
    FiniteGroup::from_permutations(n, &gens, "")
}

pub(crate) fn alternating(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::param("alternating degree must be positive"));
    }
    if n > 6 {
        return Err(Error::Unsupported(format!("A{n}: only degrees up to 6")));
    }
    if n <= 2 {
        return cyclic(1);
    }
    let gens: Vec<Perm> = (2..n).map(|k| cycle_perm(n, &[0, 1, k])).collect();
    FiniteGroup::from_permutations(n, &gens, "")
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum MatrixKind {
    Sl,
    Psl,
    Pgl,
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn matrix_group(p: usize, kind: MatrixKind) -> Result<FiniteGroup> {
    if !is_prime(p) {
        return Err(Error::param(format!("matrix groups are built over prime fields only, got {p}")));
    }
    let inv = |a: usize| mod_pow(a, p - 2, p);
    let normalize = |m: [usize; 4]| -> [usize; 4] {
        match kind {
            MatrixKind::Sl => m,
            MatrixKind::Psl => {
                let neg = m.map(|x| (p - x) % p);
                m.min(neg)
            }
            MatrixKind::Pgl => {
                let lead = *m.iter().find(|&&x| x != 0).expect("nonzero matrix");
                let s = inv(lead);
                m.map(|x| x * s % p)
            }
        }
    };
    let mul = |a: &[usize; 4], b: &[usize; 4]| {
        normalize([
            (a[0] * b[0] + a[1] * b[2]) % p,
            (a[0] * b[1] + a[1] * b[3]) % p,
            (a[2] * b[0] + a[3] * b[2]) % p,
            (a[2] * b[1] + a[3] * b[3]) % p,
        ])
    };
    let mut gens = vec![normalize([1, 1, 0, 1]), normalize([0, p - 1, 1, 0])];
    if kind == MatrixKind::Pgl {
        let g = (2..p).find(|&g| (1..p - 1).all(|e| mod_pow(g, e, p) != 1)).unwrap_or(1);
        gens.push(normalize([g, 0, 0, 1]));
    }
    FiniteGroup::from_closure(normalize([1, 0, 0, 1]), &gens, mul, "")
}

/// `N ⋊ H` where `h_gens[i]` acts on `N` through the element map `auts[i]`.
///
/// Element `(x, h)` is stored as `x + |N|·h`; the product is
/// `(x₁, h₁)(x₂, h₂) = (x₁·φ_{h₁}(x₂), h₁h₂)`.
pub fn semidirect(n: &FiniteGroup, h: &FiniteGroup, h_gens: &[Elem], auts: &[Vec<Elem>]) -> Result<FiniteGroup> {
    let (nn, hn) = (n.order(), h.order());
    check_order(nn * hn)?;
    if h_gens.len() != auts.len() || !h.generates(h_gens) {
        return Err(Error::param("acting generators must generate the complement"));
    }
    let nn_gens = n.small_generating_set();
    for a in auts {
        if a.len() != nn || !n.extends_to_automorphism(&nn_gens, &nn_gens.iter().map(|&g| a[g]).collect::<Vec<_>>()) {
            return Err(Error::param("acting map is not an automorphism"));
        }
    }
    // φ_h for every h, by breadth-first extension along the generators
    let mut phi: Vec<Option<Vec<Elem>>> = vec![None; hn];
    phi[0] = Some((0..nn).collect());
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (g, a) in h_gens.iter().zip(auts) {
            let y = h.mul(x, *g);
            let px = phi[x].as_ref().expect("visited");
            let comp: Vec<Elem> = (0..nn).map(|e| px[a[e]]).collect();
            match &phi[y] {
                None => {
                    phi[y] = Some(comp);
                    queue.push(y);
                }
                Some(existing) if *existing != comp => {
                    return Err(Error::param("acting maps do not define a homomorphism"));
                }
                Some(_) => {}
            }
        }
    }
    let phi: Vec<Vec<Elem>> = phi.into_iter().map(|p| p.expect("complement generated")).collect();
    table_from_fn(nn * hn, |a, b| {
        let (x1, h1) = (a % nn, a / nn);
        let (x2, h2) = (b % nn, b / nn);
        n.mul(x1, phi[h1][x2]) + nn * h.mul(h1, h2)
    })
}

/// The automorphism `x ↦ x^k` of an abelian group.
pub(crate) fn power_map(g: &FiniteGroup, k: i64) -> Vec<Elem> {
    g.elements().map(|x| g.pow(x, k)).collect()
}
