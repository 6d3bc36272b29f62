//! Factorization of polynomials over the integers and rationals.
//!
//! Squarefree primitive integer polynomials are factored with the classical
//! Berlekamp / Hensel / Zassenhaus pipeline: factor modulo a small prime,
//! lift the factorization to a prime power exceeding the Mignotte bound,
//! then recombine lifted factors into true factors by trial division.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::QPoly;

// ---------------------------------------------------------------------------
// Polynomials over F_p, p < 2^31, ascending coefficient order.

type Fp = Vec<u64>;

fn fp_trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_inv(a: u64, p: u64) -> u64 {
    fp_pow_scalar(a, p - 2, p)
}

fn fp_pow_scalar(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

fn fp_sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    fp_trim(out)
}

fn fp_mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(out)
}

fn fp_divrem(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let db = b.len() - 1;
    let inv = fp_inv(b[db], p);
    let mut rem = a.clone();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![0u64; rem.len() - db];
    for k in (db..rem.len()).rev() {
        let c = rem[k] * inv % p;
        if c == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            rem[k - db + j] = (rem[k - db + j] + p - c * y % p) % p;
        }
        quot[k - db] = c;
    }
    rem.truncate(db);
    (fp_trim(quot), fp_trim(rem))
}

fn fp_monic(a: &Fp, p: u64) -> Fp {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => {
            let inv = fp_inv(lc, p);
            a.iter().map(|&c| c * inv % p).collect()
        }
    }
}

fn fp_gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_empty() {
        let r = fp_divrem(&x, &y, p).1;
        x = y;
        y = r;
    }
    fp_monic(&x, p)
}

/// Returns `(s, t)` with `s*a + t*b = 1` for coprime `a`, `b`.
fn fp_bezout(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (Fp, Fp) = (vec![1], Vec::new());
    let (mut t0, mut t1): (Fp, Fp) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        r0 = core::mem::replace(&mut r1, r);
        let s = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        s0 = core::mem::replace(&mut s1, s);
        let t = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        t0 = core::mem::replace(&mut t1, t);
    }
    debug_assert_eq!(r0.len(), 1, "bezout inputs must be coprime");
    let inv = fp_inv(r0[0], p);
    let scale = |v: Fp| fp_trim(v.into_iter().map(|c| c * inv % p).collect());
    (scale(s0), scale(t0))
}

fn fp_derivative(a: &Fp, p: u64) -> Fp {
    fp_trim(a.iter().enumerate().skip(1).map(|(k, &c)| (k as u64 % p) * c % p).collect())
}

fn fp_from_z(a: &[BigInt], p: u64) -> Fp {
    let pb = BigInt::from(p);
    fp_trim(a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

/// Berlekamp factorization of a monic squarefree polynomial over F_p.
fn berlekamp(f: &Fp, p: u64) -> Vec<Fp> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.clone()];
    }
    // Row i of q holds x^(i p) mod f.
    let xp = {
        let mut base: Fp = vec![0, 1];
        let mut acc: Fp = vec![1];
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = fp_divrem(&fp_mul(&acc, &base, p), f, p).1;
            }
            base = fp_divrem(&fp_mul(&base, &base, p), f, p).1;
            e >>= 1;
        }
        acc
    };
    let mut rows: Vec<Fp> = Vec::with_capacity(n);
    let mut cur: Fp = vec![1];
    for _ in 0..n {
        let mut row = cur.clone();
        row.resize(n, 0);
        rows.push(row);
        cur = fp_divrem(&fp_mul(&cur, &xp, p), f, p).1;
    }
    // Solve g (Q - I) = 0, i.e. the nullspace of (Q - I)^T.
    let mut m: Vec<Vec<u64>> = (0..n)
        .map(|j| (0..n).map(|i| (rows[i][j] + if i == j { p - 1 } else { 0 }) % p).collect())
        .collect();
    let basis = fp_nullspace(&mut m, n, p);
    let k = basis.len();
    if k == 1 {
        return vec![f.clone()];
    }
    let mut factors = vec![f.clone()];
    for v in basis.iter() {
        let v = fp_trim(v.clone());
        if v.len() <= 1 {
            continue;
        }
        let mut next = Vec::new();
        for h in factors.into_iter() {
            if h.len() <= 2 {
                next.push(h);
                continue;
            }
            let mut h = h;
            for s in 0..p {
                if h.len() <= 2 {
                    break;
                }
                let mut vs = v.clone();
                vs[0] = (vs[0] + p - s) % p;
                let g = fp_gcd(&h, &fp_trim(vs), p);
                if g.len() > 1 && g.len() < h.len() {
                    let (q, _) = fp_divrem(&h, &g, p);
                    next.push(g);
                    h = fp_monic(&q, p);
                }
            }
            next.push(h);
        }
        factors = next;
        if factors.len() == k {
            break;
        }
    }
    factors
}

/// Nullspace of an `n x n` matrix over F_p (row-major), as a list of vectors.
fn fp_nullspace(m: &mut [Vec<u64>], n: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(r) = (row..n).find(|&r| m[r][col] != 0) else { continue };
        m.swap(row, r);
        let inv = fp_inv(m[row][col], p);
        for c in 0..n {
            m[row][c] = m[row][c] * inv % p;
        }
        for r in 0..n {
            if r != row && m[r][col] != 0 {
                let factor = m[r][col];
                for c in 0..n {
                    m[r][c] = (m[r][c] + p - factor * m[row][c] % p) % p;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; n];
            v[fc] = 1;
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (p - m[r][fc]) % p;
            }
            v
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Integer polynomials.

type Zp = Vec<BigInt>;

fn z_trim(mut a: Zp) -> Zp {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn z_mul(a: &[BigInt], b: &[BigInt]) -> Zp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    z_trim(out)
}

fn z_mod(a: &[BigInt], m: &BigInt) -> Zp {
    z_trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn z_from_fp(a: &Fp) -> Zp {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn sym_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn z_primitive(a: &[BigInt]) -> Zp {
    let mut content = BigInt::zero();
    for c in a {
        content = content.gcd(c);
    }
    if content.is_zero() {
        return a.to_vec();
    }
    if a.last().is_some_and(Signed::is_negative) {
        content = -content;
    }
    a.iter().map(|c| c / &content).collect()
}

/// Exact division in Z[x]; `None` if `b` does not divide `a`.
fn z_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Zp> {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return if z_trim(rem).is_empty() { Some(Vec::new()) } else { None };
    }
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for k in (db..rem.len()).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let (c, r) = rem[k].div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        for (j, y) in b.iter().enumerate() {
            rem[k - db + j] -= &c * y;
        }
        quot[k - db] = c;
    }
    if rem.iter().all(Zero::is_zero) {
        Some(z_trim(quot))
    } else {
        None
    }
}

/// Lifts `target = g h (mod p)` with `g` monic to the same identity modulo
/// `p^k`. Returns `(G, H)` reduced modulo `p^k`.
fn hensel_lift(target: &[BigInt], g: &Fp, h: &Fp, p: u64, k: u32) -> (Zp, Zp) {
    let (_, t) = fp_bezout(g, h, p);
    let pb = BigInt::from(p);
    let mut big_g = z_from_fp(g);
    let mut big_h = z_from_fp(h);
    let mut pk = pb.clone();
    for _ in 1..k {
        let prod = z_mul(&big_g, &big_h);
        let n = target.len().max(prod.len());
        let diff: Zp = (0..n)
            .map(|i| {
                let a = target.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                a - b
            })
            .collect();
        let e: Zp = diff.iter().map(|c| c / &pk).collect();
        let e = fp_from_z(&e, p);
        if !e.is_empty() {
            let dg = fp_divrem(&fp_mul(&t, &e, p), g, p).1;
            let (dh, _) = fp_divrem(&fp_sub(&e, &fp_mul(&dg, h, p), p), g, p);
            let next = &pk * &pb;
            big_g = add_scaled(&big_g, &dg, &pk, &next);
            big_h = add_scaled(&big_h, &dh, &pk, &next);
            pk = next;
        } else {
            pk *= &pb;
            big_g = z_mod(&big_g, &pk);
            big_h = z_mod(&big_h, &pk);
        }
    }
    (big_g, big_h)
}

fn add_scaled(a: &[BigInt], delta: &Fp, scale: &BigInt, modulus: &BigInt) -> Zp {
    let n = a.len().max(delta.len());
    let out: Zp = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            let d = delta.get(i).copied().unwrap_or(0);
            x + scale * BigInt::from(d)
        })
        .collect();
    z_mod(&out, modulus)
}

const PRIMES: [u64; 24] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Factors a primitive squarefree integer polynomial of positive degree with
/// positive leading coefficient into irreducible primitive factors.
pub fn factor_squarefree_integer(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let f = z_trim(f.to_vec());
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f];
    }
    let lc = f[n].clone();

    let mut best: Option<(u64, Vec<Fp>)> = None;
    let mut tried = 0;
    for &p in PRIMES.iter() {
        let pb = BigInt::from(p);
        if lc.mod_floor(&pb).is_zero() {
            continue;
        }
        let fp = fp_from_z(&f, p);
        if fp_gcd(&fp, &fp_derivative(&fp, p), p).len() != 1 {
            continue;
        }
        let factors = berlekamp(&fp_monic(&fp, p), p);
        if factors.len() == 1 {
            return vec![f];
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
        tried += 1;
        if tried >= 5 {
            break;
        }
    }
    let (p, modp) = best.unwrap_or_else(|| unreachable!("no suitable prime below 100"));

    // Mignotte-style bound on factor coefficients, scaled by the leading
    // coefficient used in recombination.
    let max_coeff = f.iter().map(|c| c.abs()).max().unwrap();
    let bound = (BigInt::one() << n) * BigInt::from(n + 1) * &max_coeff * lc.abs();
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= &bound * 2 {
        modulus *= &pb;
        k += 1;
    }

    let lifted = lift_all(&f, &modp, p, k, &modulus);

    // Zassenhaus recombination.
    let mut remaining = lifted;
    let mut cur = f.clone();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut found = false;
        for subset in Combinations::new(remaining.len(), size) {
            let lc_cur = cur.last().unwrap().clone();
            let mut cand: Zp = vec![lc_cur];
            for &i in &subset {
                cand = z_mod(&z_mul(&cand, &remaining[i]), &modulus);
            }
            let cand: Zp = z_trim(cand.iter().map(|c| sym_mod(c, &modulus)).collect());
            let cand = z_primitive(&cand);
            if let Some(q) = z_div_exact(&cur, &cand) {
                out.push(cand);
                cur = q;
                let mut idx = 0;
                remaining.retain(|_| {
                    let keep = !subset.contains(&idx);
                    idx += 1;
                    keep
                });
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    if cur.len() > 1 {
        out.push(z_primitive(&cur));
    }
    out
}

fn lift_all(f: &[BigInt], modp: &[Fp], p: u64, k: u32, modulus: &BigInt) -> Vec<Zp> {
    let pb = BigInt::from(p);
    let lc_p = f.last().unwrap().mod_floor(&pb).to_u64().unwrap();
    let mut target: Zp = f.to_vec();
    let mut out = Vec::with_capacity(modp.len());
    for i in 0..modp.len() - 1 {
        let mut rest: Fp = vec![lc_p];
        for g in &modp[i + 1..] {
            rest = fp_mul(&rest, g, p);
        }
        let (g_lift, h_lift) = hensel_lift(&target, &modp[i], &rest, p, k);
        out.push(g_lift);
        target = h_lift;
    }
    // Final factor: make the remaining cofactor monic modulo p^k.
    let lc = target.last().unwrap().clone();
    let inv = mod_inverse(&lc, modulus);
    out.push(z_mod(&target.iter().map(|c| c * &inv).collect::<Zp>(), modulus));
    out
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Iterator over k-subsets of `0..n` in lexicographic order.
struct Combinations {
    idx: Vec<usize>,
    n: usize,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { idx: (0..k).collect(), n, done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Squarefree decomposition (Yun) of a nonzero rational polynomial:
/// returns monic `(a_i, i)` with `f = lc * prod a_i^i`.
pub fn squarefree_decomposition(f: &QPoly) -> Vec<(QPoly, usize)> {
    let f = f.monic();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_exact(&a0).unwrap();
    let mut c = df.div_exact(&a0).unwrap();
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        b = b.div_exact(&a).unwrap();
        c = d.div_exact(&a).unwrap();
        d = c.sub(&b.derivative());
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Complete factorization over Q into monic irreducible factors with
/// multiplicities, ordered by degree then coefficients.
pub fn factor_rational(f: &QPoly) -> Vec<(QPoly, usize)> {
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(f) {
        let ints = part.to_primitive_integer();
        for g in factor_squarefree_integer(&ints) {
            out.push((QPoly::from_integer_coeffs(&g).monic(), mult));
        }
    }
    out.sort_by(|a, b| {
        a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(factors: &[(QPoly, usize)]) -> QPoly {
        factors.iter().fold(QPoly::one(), |acc, (g, m)| acc.mul(&g.pow(*m as u32)))
    }

    #[test]
    fn berlekamp_splits_mod_p() {
        // x^4 - 1 over F_5 splits into four linear factors.
        let f: Fp = vec![4, 0, 0, 0, 1];
        let fs = berlekamp(&f, 5);
        assert_eq!(fs.len(), 4);
        let prod = fs.iter().fold(vec![1u64], |acc, g| fp_mul(&acc, g, 5));
        assert_eq!(prod, f);
    }

    #[test]
    fn cyclotomic_irreducible() {
        for coeffs in [&[1i64, 1, 1][..], &[1, 1, 1, 1, 1], &[1, 1, 1, 1, 1, 1, 1], &[1, 0, 1]] {
            let f = QPoly::from_ints(coeffs);
            let fs = factor_rational(&f);
            assert_eq!(fs.len(), 1, "{f}");
        }
    }

    #[test]
    fn swinnerton_dyer_like_cases() {
        // x^4 + 1 is irreducible over Q but splits mod every prime.
        let f = QPoly::from_ints(&[1, 0, 0, 0, 1]);
        assert_eq!(factor_rational(&f).len(), 1);
        // x^4 - 10x^2 + 1 (minimal polynomial of sqrt2 + sqrt3).
        let g = QPoly::from_ints(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_rational(&g).len(), 1);
    }

    #[test]
    fn reducible_products_recovered() {
        let a = QPoly::from_ints(&[1, 1, 1]);
        let b = QPoly::from_ints(&[-2, 0, 1]);
        let c = QPoly::from_ints(&[3, -1]);
        let f = a.mul(&b).mul(&c).mul(&c);
        let fs = factor_rational(&f);
        assert_eq!(product(&fs), f.monic());
        assert_eq!(fs.len(), 3);
        assert!(fs.iter().any(|(g, m)| *g == c.monic() && *m == 2));
    }

    #[test]
    fn large_leading_coefficient() {
        let a = QPoly::from_ints(&[5, 0, 7]);
        let b = QPoly::from_ints(&[-1, 3, 0, 11]);
        let f = a.mul(&b);
        let fs = factor_rational(&f);
        assert_eq!(fs.len(), 2);
        assert_eq!(product(&fs), f.monic());
    }

    #[test]
    fn combinations_enumerate() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
    }
}
