//! Test-only oracles that do not go through the library's elimination code.
#![allow(dead_code)]

/// Prime with `p ≡ 1 (mod 120)`, so it has roots of unity of every order used here.
pub const P: u64 = 2_147_482_921;

pub fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

pub fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    a %= P;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64) -> u64 {
    powmod(a, P - 2)
}

/// An element of exact multiplicative order `n` in `F_p`.
pub fn root_of_order(n: u64) -> u64 {
    assert_eq!((P - 1) % n, 0);
    let primes: Vec<u64> = (2..=n).filter(|q| n.is_multiple_of(*q) && (2..*q).all(|r| q % r != 0)).collect();
    (2..).map(|g| powmod(g, (P - 1) / n)).find(|&r| primes.iter().all(|q| powmod(r, n / q) != 1)).unwrap()
}

/// Rank of a matrix over `F_p` by plain Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        let iv = inv(rows[r][c]);
        for v in rows[r].iter_mut() {
            *v = mulmod(*v, iv);
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + P - mulmod(f, *y)) % P;
                }
            }
        }
        r += 1;
    }
    r
}

/// Exponent tuples of degree `d` in three variables (any order).
pub fn monomials(d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            out.push([i, j, d - i - j]);
        }
    }
    out
}

/// `Z_m` over `F_p`, straight from the definition: grid points `(1 : w^α : w^β)` of
/// `W_{2m}` with `w` of order `2m`, minus those with both exponents even (`W_m`), plus
/// the three coordinate points.
pub fn z_points(m: u64) -> Vec<[u64; 3]> {
    let w = root_of_order(2 * m);
    let mut pts = Vec::new();
    for a in 0..2 * m {
        for b in 0..2 * m {
            if a % 2 == 0 && b % 2 == 0 {
                continue;
            }
            pts.push([1, powmod(w, a), powmod(w, b)]);
        }
    }
    pts.extend([[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
    pts
}

pub fn y_points(m: u64) -> Vec<[u64; 3]> {
    let mut pts = z_points(m);
    pts.truncate(pts.len() - 3);
    pts
}

pub fn eval_monomial(p: &[u64; 3], e: &[u32; 3]) -> u64 {
    (0..3).fold(1, |acc, i| mulmod(acc, powmod(p[i], e[i] as u64)))
}

/// `dim [I(points)]_d` over `F_p`.
pub fn hilbert_dim(points: &[[u64; 3]], d: u32) -> usize {
    let monos = monomials(d);
    let rows = points.iter().map(|p| monos.iter().map(|e| eval_monomial(p, e)).collect()).collect();
    monos.len() - rank(rows)
}

fn falling(e: u32, k: u32) -> u64 {
    (0..k).fold(1, |acc, i| acc * (e - i) as u64)
}

/// `dim` of degree-`d` forms through `points` with multiplicity `mult` at `q`: adds one
/// row per partial of order `mult - 1` of each monomial, evaluated at `q`.
pub fn fat_dim(points: &[[u64; 3]], d: u32, q: [u64; 3], mult: u32) -> usize {
    let monos = monomials(d);
    let mut rows: Vec<Vec<u64>> = points.iter().map(|p| monos.iter().map(|e| eval_monomial(p, e)).collect()).collect();
    for k in monomials(mult - 1) {
        rows.push(
            monos
                .iter()
                .map(|e| {
                    if (0..3).any(|i| e[i] < k[i]) {
                        return 0;
                    }
                    let c = (0..3).fold(1, |acc, i| mulmod(acc, falling(e[i], k[i]) % P));
                    let shifted = [e[0] - k[0], e[1] - k[1], e[2] - k[2]];
                    mulmod(c, eval_monomial(&q, &shifted))
                })
                .collect(),
        );
    }
    monos.len() - rank(rows)
}
