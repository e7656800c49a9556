//! Groups given by the presentations of the cyclic-curve classification.
//!
//! Each group is an extension of a reduced group `Ḡ` by a cyclic normal
//! subgroup `⟨r⟩`. Elements are kept in the normal form `r^a·s(x)`, `x ∈ Ḡ`,
//! where `s` is a section along a breadth-first spanning tree of `Ḡ`. The
//! correction exponents on non-tree edges are the unique-up-to-choice solution
//! of a linear system over `Z/n` imposed by the relations; every relation is
//! then re-evaluated in the finished group.

use super::build::{cyclic, dihedral, mod_pow, power_map, semidirect};
use super::linmod::solve_mod;
use super::{Elem, FiniteGroup, Perm, Standard};
use crate::error::{Error, Result};
use num_integer::Integer;

/// A word in the generators; index 0 is `r`.
pub type Word = Vec<(usize, i64)>;

#[derive(Clone, Debug)]
pub struct Relation {
    pub word: Word,
    /// The word equals `r^r_power`.
    pub r_power: i64,
}

/// A cyclic extension given by generators, relations and the action on `r`.
#[derive(Clone, Debug)]
pub struct CyclicExtension {
    /// Order of `r`.
    pub n: usize,
    /// The reduced group `Ḡ`.
    pub quotient: FiniteGroup,
    /// Names of generators `1..=k`.
    pub names: Vec<String>,
    /// `g_i r g_i⁻¹ = r^{action[i]}`, one entry per named generator.
    pub action: Vec<i64>,
    pub relations: Vec<Relation>,
}

/// A constructed group with its named generators.
#[derive(Clone, Debug)]
pub struct PresentedGroup {
    pub group: FiniteGroup,
    /// `("r", r)` first, then the named generators.
    pub generators: Vec<(String, Elem)>,
}

impl CyclicExtension {
    pub fn build(&self, label: &str) -> Result<PresentedGroup> {
        let n = self.n;
        let q = &self.quotient;
        let k = self.names.len();
        if n == 0 {
            return Err(Error::param("cyclic kernel order must be positive"));
        }
        if self.action.len() != k {
            return Err(Error::param("one action exponent per generator is required"));
        }
        if n > 1 && self.action.iter().any(|&l| (l.rem_euclid(n as i64) as usize).gcd(&n) != 1) {
            return Err(Error::param("action exponents must be units modulo n"));
        }
        let qimg = find_quotient_images(q, k, &self.relations)?;
        // spanning tree of Ḡ along the generator images
        let qn = q.order();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; qn];
        let mut seen = vec![false; qn];
        seen[0] = true;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (i, &g) in qimg.iter().enumerate() {
                let y = q.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, i));
                    queue.push(y);
                }
            }
        }
        // θ_x: conjugation action of s(x) on ⟨r⟩
        let nn = n as i64;
        let mut theta = vec![0i64; qn];
        theta[0] = 1 % nn;
        for &y in &queue[1..] {
            let (x, i) = parent[y].expect("tree edge");
            theta[y] = (theta[x] * self.action[i]).rem_euclid(nn);
        }
        for x in 0..qn {
            for (i, &g) in qimg.iter().enumerate() {
                if theta[q.mul(x, g)] != (theta[x] * self.action[i]).rem_euclid(nn) {
                    return Err(Error::param(format!(
                        "{label}: the action on r is not a homomorphism of the reduced group for these parameters"
                    )));
                }
            }
        }
        // unknown c(x, i): (a, x)·g_i = (a + c(x, i), x·ḡ_i)
        let var = |x: usize, i: usize| x * k + i;
        let nvars = qn * k;
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for edge in &parent[1..qn] {
            let (x, i) = edge.expect("tree edge");
            let mut row = vec![0i64; nvars];
            row[var(x, i)] = 1;
            rows.push(row);
            rhs.push(0);
        }
        for rel in &self.relations {
            for x0 in 0..qn {
                let mut row = vec![0i64; nvars];
                let mut constant = 0i64;
                let mut x = x0;
                for &(g, e) in &rel.word {
                    for _ in 0..e.unsigned_abs() {
                        if g == 0 {
                            constant += e.signum() * theta[x];
                        } else if e > 0 {
                            row[var(x, g - 1)] += 1;
                            x = q.mul(x, qimg[g - 1]);
                        } else {
                            let prev = q.mul(x, q.inv(qimg[g - 1]));
                            row[var(prev, g - 1)] -= 1;
                            x = prev;
                        }
                    }
                }
                debug_assert_eq!(x, x0);
                rows.push(row);
                rhs.push((rel.r_power * theta[x0] - constant).rem_euclid(nn));
            }
        }
        let c = solve_mod(&rows, &rhs, nvars, nn).ok_or_else(|| {
            Error::param(format!(
                "{label}: the relations do not define an extension of order {} for these parameters",
                n * qn
            ))
        })?;
        // regular permutation action on Z/n × Ḡ
        let point = |a: i64, x: usize| a.rem_euclid(nn) as usize * qn + x;
        let mut perms = Vec::with_capacity(k + 1);
        perms.push(Perm::new((0..n * qn).map(|p| point((p / qn) as i64 + theta[p % qn], p % qn) as u32).collect())?);
        for (i, &g) in qimg.iter().enumerate() {
            let imgs = (0..n * qn)
                .map(|p| {
                    let (a, x) = ((p / qn) as i64, p % qn);
                    point(a + c[var(x, i)], q.mul(x, g)) as u32
                })
                .collect();
            perms.push(Perm::new(imgs)?);
        }
        let (group, idx) = closure_with_generators(n * qn, &perms, label)?;
        if group.order() != n * qn {
            return Err(Error::Inconsistency(format!("{label}: built order {} instead of {}", group.order(), n * qn)));
        }
        let mut generators = vec![("r".to_string(), idx[0])];
        generators.extend(self.names.iter().cloned().zip(idx[1..].iter().copied()));
        let pg = PresentedGroup { group, generators };
        pg.check_relations(&self.relations, &self.action, n)?;
        Ok(pg)
    }
}

impl PresentedGroup {
    pub fn eval(&self, word: &Word) -> Elem {
        let g = &self.group;
        word.iter().fold(0, |acc, &(i, e)| g.mul(acc, g.pow(self.generators[i].1, e)))
    }

    fn check_relations(&self, relations: &[Relation], action: &[i64], n: usize) -> Result<()> {
        let g = &self.group;
        let r = self.generators[0].1;
        if g.elem_order(r) != n {
            return Err(Error::Inconsistency("r does not have order n".into()));
        }
        for rel in relations {
            if self.eval(&rel.word) != g.pow(r, rel.r_power) {
                return Err(Error::Inconsistency(format!("relation {:?} fails", rel.word)));
            }
        }
        for (i, &l) in action.iter().enumerate() {
            if g.conj(self.generators[i + 1].1, r) != g.pow(r, l) {
                return Err(Error::Inconsistency(format!("conjugation action of generator {} fails", i + 1)));
            }
        }
        Ok(())
    }
}

fn closure_with_generators(degree: usize, perms: &[Perm], label: &str) -> Result<(FiniteGroup, Vec<Elem>)> {
    FiniteGroup::from_closure_indexed(Perm::identity(degree), perms, |a, b| a.then(b), label)
}

/// First tuple of elements of `q`, in index order, satisfying every relation
/// with `r` erased and generating `q`.
fn find_quotient_images(q: &FiniteGroup, k: usize, relations: &[Relation]) -> Result<Vec<Elem>> {
    fn eval(q: &FiniteGroup, word: &Word, imgs: &[Elem]) -> Option<Elem> {
        let mut acc = 0;
        for &(g, e) in word {
            if g == 0 {
                continue;
            }
            let x = *imgs.get(g - 1)?;
            acc = q.mul(acc, q.pow(x, e));
        }
        Some(acc)
    }
    fn rec(q: &FiniteGroup, k: usize, relations: &[Relation], imgs: &mut Vec<Elem>) -> bool {
        if imgs.len() == k {
            return q.generates(imgs);
        }
        for x in q.elements() {
            imgs.push(x);
            let ok = relations.iter().all(|r| {
                let uses_last = r.word.iter().any(|&(g, _)| g == imgs.len());
                let fully_assigned = r.word.iter().all(|&(g, _)| g <= imgs.len());
                !(uses_last && fully_assigned) || eval(q, &r.word, imgs) == Some(0)
            });
            if ok && rec(q, k, relations, imgs) {
                return true;
            }
            imgs.pop();
        }
        false
    }
    let mut imgs = Vec::new();
    if rec(q, k, relations, &mut imgs) {
        Ok(imgs)
    } else {
        Err(Error::param("the relations modulo r are not satisfied by generators of the reduced group"))
    }
}

/// Cases of the classification of automorphism groups of cyclic curves
/// in terms of the reduced group. Dihedral groups `D_{2m}` here have order `2m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CyclicCurveGroup {
    Cyclic {
        m: usize,
        n: usize,
    },
    Metacyclic {
        n: usize,
        m: usize,
        l: usize,
    },
    DihedralDirect {
        m: usize,
        n: usize,
    },
    G5 {
        m: usize,
        n: usize,
    },
    G6 {
        m: usize,
        n: usize,
    },
    G7 {
        m: usize,
        n: usize,
    },
    G8 {
        m: usize,
        n: usize,
    },
    G9 {
        m: usize,
        n: usize,
    },
    A4Direct {
        n: usize,
    },
    G10Prime {
        n: usize,
        l: usize,
    },
    G12Prime {
        n: usize,
        l: usize,
    },
    /// The `A₄` item with `(σt)^5 = r^{n/2}`, encoded as stated.
    A4Binary {
        n: usize,
    },
    G10 {
        n: usize,
        k: usize,
    },
    G13 {
        n: usize,
        k: usize,
    },
    S4Direct {
        n: usize,
    },
    G16 {
        n: usize,
        l: usize,
    },
    G18 {
        n: usize,
        l: usize,
    },
    G20 {
        n: usize,
        l: usize,
    },
    G22 {
        n: usize,
        l: usize,
    },
    A5Direct {
        n: usize,
    },
    A5Binary {
        n: usize,
    },
    UDirect {
        p: usize,
        t: usize,
        n: usize,
    },
    USemidirect {
        p: usize,
        t: usize,
        n: usize,
        l: usize,
    },
    KmSemidirect {
        p: usize,
        t: usize,
        m: usize,
        n: usize,
        l: usize,
        k: usize,
    },
    KmCyclic {
        p: usize,
        t: usize,
        m: usize,
        n: usize,
        l: usize,
    },
    PslDirect {
        q: usize,
        n: usize,
    },
    Sl23,
    PglDirect {
        q: usize,
        n: usize,
    },
}

const SIGMA: usize = 1;
const T: usize = 2;

fn rel(word: Word, r_power: i64) -> Relation {
    Relation { word, r_power }
}

fn repeat(word: &[(usize, i64)], times: usize) -> Word {
    word.iter().copied().cycle().take(word.len() * times).collect()
}

fn unit_power(label: &str, l: usize, n: usize, e: usize) -> Result<()> {
    if l.gcd(&n) != 1 {
        return Err(Error::param(format!("{label}: ({l},{n}) must be 1")));
    }
    if mod_pow(l, e, n) != 1 % n {
        return Err(Error::param(format!("{label}: {l}^{e} must be 1 modulo {n}")));
    }
    Ok(())
}

fn half(label: &str, n: usize, d: usize) -> Result<i64> {
    if !n.is_multiple_of(d) {
        return Err(Error::param(format!("{label}: n/{d} requires {d} | n, got n = {n}")));
    }
    Ok((n / d) as i64)
}

fn direct(label: &str, a: FiniteGroup, n: usize) -> Result<PresentedGroup> {
    let g = a.direct_product(&cyclic(n)?)?.with_label(label);
    Ok(PresentedGroup { generators: vec![("r".into(), if n > 1 { 1 } else { 0 })], group: g })
}

/// Three-generator extension `⟨r, σ, t⟩` over a triangle-type reduced group.
fn sigma_t(
    label: &str,
    quotient: FiniteGroup,
    n: usize,
    rels: Vec<Relation>,
    action: [i64; 2],
) -> Result<PresentedGroup> {
    CyclicExtension { n, quotient, names: vec!["sigma".into(), "t".into()], action: action.to_vec(), relations: rels }
        .build(label)
}

impl CyclicCurveGroup {
    pub fn label(&self) -> String {
        format!("{self:?}")
    }

    pub fn construct(&self) -> Result<PresentedGroup> {
        use CyclicCurveGroup::*;
        let label = self.label();
        let lb = label.as_str();
        let nn = |n: usize| n as i64;
        match *self {
            Cyclic { m, n } => Ok(PresentedGroup {
                group: cyclic(m * n)?.with_label(lb),
                generators: vec![("r".into(), if m * n > 1 { m % (m * n) } else { 0 })],
            }),
            Metacyclic { n, m, l } => {
                unit_power(lb, l, n, m)?;
                CyclicExtension {
                    n,
                    quotient: cyclic(m)?,
                    names: vec!["sigma".into()],
                    action: vec![l as i64],
                    relations: vec![rel(vec![(SIGMA, nn(m))], 0)],
                }
                .build(lb)
            }
            DihedralDirect { m, n } => direct(lb, dihedral(2 * m)?, n),
            G6 { m, n } => Ok(PresentedGroup { group: dihedral(2 * m * n)?.with_label(lb), generators: vec![] }),
            G5 { m, n } | G7 { m, n } | G8 { m, n } | G9 { m, n } => {
                let (t2, st_m, t_act) = match *self {
                    G5 { .. } => (0, 0, nn(n) - 1),
                    G7 { .. } => (nn(n) - 1, 0, 1),
                    G8 { .. } => (0, half(lb, n, 2)?, nn(n) - 1),
                    _ => (nn(n) - 1, half(lb, n, 2)?, 1),
                };
                let rels =
                    vec![rel(vec![(SIGMA, 2)], 1), rel(vec![(T, 2)], t2), rel(repeat(&[(SIGMA, 1), (T, 1)], m), st_m)];
                sigma_t(lb, dihedral(2 * m)?, n, rels, [1, t_act])
            }
            A4Direct { n } => direct(lb, Standard::Alternating(4).build()?, n),
            G10Prime { n, l } | G12Prime { n, l } => {
                unit_power(lb, l, n, 3)?;
                let e = if matches!(self, G12Prime { .. }) { half(lb, n, 3)? } else { 0 };
                let rels =
                    vec![rel(vec![(SIGMA, 2)], 0), rel(vec![(T, 3)], e), rel(repeat(&[(SIGMA, 1), (T, 1)], 3), e)];
                sigma_t(lb, Standard::Alternating(4).build()?, n, rels, [1, l as i64])
            }
            A4Binary { n } => {
                let h = half(lb, n, 2)?;
                let rels =
                    vec![rel(vec![(SIGMA, 2)], h), rel(vec![(T, 3)], h), rel(repeat(&[(SIGMA, 1), (T, 1)], 5), h)];
                sigma_t(lb, Standard::Alternating(4).build()?, n, rels, [1, 1])
            }
            G10 { n, k } | G13 { n, k } => {
                unit_power(lb, k, n, 3)?;
                let s2 = if matches!(self, G13 { .. }) { half(lb, n, 2)? } else { 0 };
                let rels =
                    vec![rel(vec![(SIGMA, 2)], s2), rel(vec![(T, 3)], 0), rel(repeat(&[(SIGMA, 1), (T, 1)], 3), 0)];
                sigma_t(lb, Standard::Alternating(4).build()?, n, rels, [1, k as i64])
            }
            S4Direct { n } => direct(lb, Standard::Symmetric(4).build()?, n),
            G16 { n, l } | G18 { n, l } | G20 { n, l } | G22 { n, l } => {
                unit_power(lb, l, n, 2)?;
                let (s2, st4) = match *self {
                    G16 { .. } => (0, 0),
                    G18 { .. } => (0, half(lb, n, 2)?),
                    G20 { .. } => (half(lb, n, 2)?, 0),
                    _ => (half(lb, n, 2)?, half(lb, n, 2)?),
                };
                let rels =
                    vec![rel(vec![(SIGMA, 2)], s2), rel(vec![(T, 3)], 0), rel(repeat(&[(SIGMA, 1), (T, 1)], 4), st4)];
                sigma_t(lb, Standard::Symmetric(4).build()?, n, rels, [l as i64, 1])
            }
            A5Direct { n } => direct(lb, Standard::Alternating(5).build()?, n),
            A5Binary { n } => {
                let h = half(lb, n, 2)?;
                let rels =
                    vec![rel(vec![(SIGMA, 2)], h), rel(vec![(T, 3)], h), rel(repeat(&[(SIGMA, 1), (T, 1)], 5), h)];
                sigma_t(lb, Standard::Alternating(5).build()?, n, rels, [1, 1])
            }
            UDirect { p, t, n } => direct(lb, Standard::Abelian(vec![p; t]).build()?, n),
            USemidirect { p, t, n, l } => {
                unit_power(lb, l, n, p)?;
                elementary_extension(lb, p, t, n, l, Standard::Abelian(vec![p; t]).build()?, None)
            }
            KmSemidirect { p, t, m, n, l, k } => {
                unit_power(lb, l, n, p)?;
                unit_power(lb, k, m, p)?;
                let u = Standard::Abelian(vec![p; t]).build()?;
                let cm = cyclic(m)?;
                let basis = u.small_generating_set();
                let auts = vec![power_map(&cm, k as i64); basis.len()];
                let km = semidirect(&cm, &u, &basis, &auts)?;
                elementary_extension(lb, p, t, n, l, km, Some((m, k)))
            }
            KmCyclic { p, t, m, n, l } => {
                unit_power(lb, l, n * m, p)?;
                elementary_extension(lb, p, t, n * m, l, Standard::Abelian(vec![p; t]).build()?, None)
            }
            PslDirect { q, n } => direct(lb, Standard::Psl2(q).build()?, n),
            Sl23 => Ok(PresentedGroup { group: Standard::Sl2(3).build()?.with_label(lb), generators: vec![] }),
            PglDirect { q, n } => direct(lb, Standard::Pgl2(q).build()?, n),
        }
    }
}

/// `⟨r, σ_1..σ_t (, v)⟩` with commuting `σ_i` of order `p` acting on `r` by `l`,
/// and optionally `v` of order `m` fixed by `r` with `σ_i v σ_i⁻¹ = v^k`.
fn elementary_extension(
    label: &str,
    p: usize,
    t: usize,
    n: usize,
    l: usize,
    quotient: FiniteGroup,
    v: Option<(usize, usize)>,
) -> Result<PresentedGroup> {
    let mut names: Vec<String> = (1..=t).map(|i| format!("sigma{i}")).collect();
    let mut action = vec![l as i64; t];
    let mut relations = Vec::new();
    for i in 1..=t {
        relations.push(rel(vec![(i, p as i64)], 0));
        for j in i + 1..=t {
            relations.push(rel(vec![(i, 1), (j, 1), (i, -1), (j, -1)], 0));
        }
    }
    if let Some((m, k)) = v {
        let vi = t + 1;
        names.push("v".into());
        action.push(1);
        relations.push(rel(vec![(vi, m as i64)], 0));
        for i in 1..=t {
            relations.push(rel(vec![(i, 1), (vi, 1), (i, -1), (vi, -(k as i64))], 0));
        }
    }
    CyclicExtension { n, quotient, names, action, relations }.build(label)
}
