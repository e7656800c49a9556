//! Linear systems over `Z/nZ` by unimodular row reduction.

use num_integer::Integer;

fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn inv_mod(a: i64, m: i64) -> Option<i64> {
    let (g, x, _) = egcd(a.rem_euclid(m), m);
    (g == 1).then(|| x.rem_euclid(m))
}

/// Solves `rows · x ≡ rhs (mod n)`; free variables are set to zero.
pub(crate) fn solve_mod(rows: &[Vec<i64>], rhs: &[i64], nvars: usize, n: i64) -> Option<Vec<i64>> {
    if n == 1 {
        return Some(vec![0; nvars]);
    }
    let norm = |r: &mut Vec<i64>| r.iter_mut().for_each(|x| *x = x.rem_euclid(n));
    let mut pool: Vec<Vec<i64>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, &b)| {
            let mut v = r.clone();
            v.push(b);
            norm(&mut v);
            v
        })
        .collect();
    let mut pivots: Vec<(usize, Vec<i64>)> = Vec::new();
    for col in 0..nvars {
        let mut pivot: Option<Vec<i64>> = None;
        let mut rest = Vec::with_capacity(pool.len());
        for mut r in pool.drain(..) {
            if r[col] == 0 {
                rest.push(r);
                continue;
            }
            match pivot.as_mut() {
                None => pivot = Some(r),
                Some(p) => {
                    let (a, b) = (p[col], r[col]);
                    let (g, u, v) = egcd(a, b);
                    let (ag, bg) = (a / g, b / g);
                    for j in 0..p.len() {
                        let (pj, rj) = (p[j] as i128, r[j] as i128);
                        let np = (u as i128 * pj + v as i128 * rj).rem_euclid(n as i128);
                        let nr = (ag as i128 * rj - bg as i128 * pj).rem_euclid(n as i128);
                        p[j] = np as i64;
                        r[j] = nr as i64;
                    }
                    debug_assert_eq!(r[col], 0);
                    if r.iter().any(|&x| x != 0) {
                        rest.push(r);
                    }
                }
            }
        }
        pool = rest;
        if let Some(p) = pivot {
            // multiples of the pivot row that kill the pivot entry
            let ann = n / p[col].gcd(&n);
            if ann != n {
                let mut extra: Vec<i64> =
                    p.iter().map(|&x| ((x as i128 * ann as i128).rem_euclid(n as i128)) as i64).collect();
                norm(&mut extra);
                if extra.iter().any(|&x| x != 0) {
                    pool.push(extra);
                }
            }
            pivots.push((col, p));
        }
    }
    if pool.iter().any(|r| r[nvars] != 0) {
        return None;
    }
    let mut x = vec![0i64; nvars];
    for (col, p) in pivots.iter().rev() {
        let mut val = p[nvars] as i128;
        for j in col + 1..nvars {
            val -= p[j] as i128 * x[j] as i128;
        }
        let val = val.rem_euclid(n as i128) as i64;
        let g = p[*col].gcd(&n);
        if val % g != 0 {
            return None;
        }
        let m = n / g;
        let inv = inv_mod(p[*col] / g, m).unwrap_or(0);
        x[*col] = ((val / g) as i128 * inv as i128).rem_euclid(m as i128) as i64;
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(rows: &[Vec<i64>], rhs: &[i64], n: i64, x: &[i64]) -> bool {
        rows.iter().zip(rhs).all(|(r, &b)| (r.iter().zip(x).map(|(a, b)| a * b).sum::<i64>() - b).rem_euclid(n) == 0)
    }

    #[test]
    fn solves_with_zero_divisors() {
        let rows = vec![vec![2, 4], vec![3, 1]];
        let rhs = vec![2, 5];
        let x = solve_mod(&rows, &rhs, 2, 6).unwrap();
        assert!(check(&rows, &rhs, 6, &x));
    }

    #[test]
    fn detects_inconsistency() {
        // 2x ≡ 1 (mod 4) has no solution
        assert!(solve_mod(&[vec![2]], &[1], 1, 4).is_none());
        // hidden constraint: 2x + y ≡ 0, and 2·(2x + y) forces 2y ≡ 0 while y ≡ 1 is required
        assert!(solve_mod(&[vec![2, 1], vec![0, 2]], &[0, 1], 2, 4).is_none());
    }

    #[test]
    fn exhaustive_small_systems_agree_with_brute_force() {
        let n = 6i64;
        let mut seed = 7u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % n as u64) as i64
        };
        for _ in 0..300 {
            let rows: Vec<Vec<i64>> = (0..3).map(|_| (0..3).map(|_| next()).collect()).collect();
            let rhs: Vec<i64> = (0..3).map(|_| next()).collect();
            let brute = (0..n * n * n).any(|c| check(&rows, &rhs, n, &[c % n, c / n % n, c / (n * n)]));
            match solve_mod(&rows, &rhs, 3, n) {
                Some(x) => assert!(check(&rows, &rhs, n, &x)),
                None => assert!(!brute, "missed a solution for {rows:?} = {rhs:?}"),
            }
        }
    }
}
