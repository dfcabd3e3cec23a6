//! Independent dense model of the spin representation over the Gaussian
//! integers, used as an oracle for the library's sparse exact engine.
//!
//! A spinor is a vector indexed by bitsets of anti-holomorphic generators
//! `y_1..y_{2n-1}` (generator `j` is bit `j-1`). Every operator used here has
//! coefficients in `Z[i]`, so no field arithmetic is needed.

#![allow(dead_code, clippy::needless_range_loop)]

use num_traits::ToPrimitive;
use sasaki_core::{Monomial, Scalar, SpinParams, Spinor};

pub type G = (i128, i128);

pub const I: G = (0, 1);
pub const ONE: G = (1, 0);

pub fn gmul(a: G, b: G) -> G {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

pub fn gadd(a: G, b: G) -> G {
    (a.0 + b.0, a.1 + b.1)
}

pub fn gens(n: usize) -> usize {
    2 * n - 1
}

pub fn dim(n: usize) -> usize {
    4 * n - 1
}

pub fn size(n: usize) -> usize {
    1 << gens(n)
}

pub type Dense = Vec<G>;

pub fn zero(n: usize) -> Dense {
    vec![(0, 0); size(n)]
}

pub fn unit(n: usize) -> Dense {
    let mut v = zero(n);
    v[0] = ONE;
    v
}

pub fn scale(c: G, v: &Dense) -> Dense {
    v.iter().map(|x| gmul(c, *x)).collect()
}

pub fn add(a: &Dense, b: &Dense) -> Dense {
    a.iter().zip(b).map(|(x, y)| gadd(*x, *y)).collect()
}

pub fn sub(a: &Dense, b: &Dense) -> Dense {
    add(a, &scale((-1, 0), b))
}

pub fn is_zero(v: &Dense) -> bool {
    v.iter().all(|x| *x == (0, 0))
}

fn sign_below(m: usize, j: usize) -> i128 {
    if (m & ((1 << (j - 1)) - 1)).count_ones() % 2 == 1 {
        -1
    } else {
        1
    }
}

/// `y_j ∧ v`
pub fn wedge(j: usize, v: &Dense) -> Dense {
    let mut out = vec![(0, 0); v.len()];
    let bit = 1 << (j - 1);
    for (m, c) in v.iter().enumerate() {
        if m & bit == 0 && *c != (0, 0) {
            let s = sign_below(m, j);
            out[m | bit] = gadd(out[m | bit], (s * c.0, s * c.1));
        }
    }
    out
}

/// `x_j ⌟ v` with `x_j ⌟ y_j = 1`.
pub fn contract(j: usize, v: &Dense) -> Dense {
    let mut out = vec![(0, 0); v.len()];
    let bit = 1 << (j - 1);
    for (m, c) in v.iter().enumerate() {
        if m & bit != 0 && *c != (0, 0) {
            let s = sign_below(m, j);
            out[m ^ bit] = gadd(out[m ^ bit], (s * c.0, s * c.1));
        }
    }
    out
}

/// Clifford multiplication by the basis vector `e_a`.
pub fn e(a: usize, v: &Dense) -> Dense {
    if a == 1 {
        return v
            .iter()
            .enumerate()
            .map(|(m, c)| {
                if m.count_ones() % 2 == 0 {
                    gmul(I, *c)
                } else {
                    gmul((0, -1), *c)
                }
            })
            .collect();
    }
    let j = a / 2;
    if a.is_multiple_of(2) {
        scale(I, &add(&contract(j, v), &wedge(j, v)))
    } else {
        sub(&wedge(j, v), &contract(j, v))
    }
}

/// Clifford multiplication by `Σ c_a e_a`.
pub fn vec_act(x: &[(usize, G)], v: &Dense) -> Dense {
    let mut out = vec![(0, 0); v.len()];
    for &(a, c) in x {
        out = add(&out, &scale(c, &e(a, v)));
    }
    out
}

/// Clifford multiplication by the 2-form `Σ c e_a∧e_b`.
pub fn two_form_act(theta: &[(usize, usize, G)], v: &Dense) -> Dense {
    let mut out = vec![(0, 0); v.len()];
    for &(a, b, c) in theta {
        out = add(&out, &scale(c, &e(a, &e(b, v))));
    }
    out
}

/// Quaternion product of units (1, i, j, k) = (0, 1, 2, 3).
pub fn qmul(u: usize, v: usize) -> (i128, usize) {
    match (u, v) {
        (0, x) | (x, 0) => (1, x),
        (a, b) if a == b => (-1, 0),
        (1, 2) => (1, 3),
        (2, 1) => (-1, 3),
        (2, 3) => (1, 1),
        (3, 2) => (-1, 1),
        (3, 1) => (1, 2),
        (1, 3) => (-1, 2),
        _ => unreachable!(),
    }
}

pub const CYCLIC: [(usize, usize, usize); 3] = [(1, 2, 3), (2, 3, 1), (3, 1, 2)];

/// Matrix of `φ_u`, 1-based with row/column 0 unused: `m[r][c]` is the
/// `e_r` component of `φ_u(e_c)`.
pub fn phi_matrix(n: usize, u: usize) -> Vec<Vec<i128>> {
    let d = dim(n);
    let mut m = vec![vec![0; d + 1]; d + 1];
    let (_, j, k) = CYCLIC[u - 1];
    m[k][j] = 1;
    m[j][k] = -1;
    for p in 1..n {
        for w in 0..4 {
            let (s, t) = qmul(u, w);
            m[4 * p + t][4 * p + w] = s;
        }
    }
    m
}

/// `Φ_u = Σ_{a<b} g(e_a, φ_u e_b) e_a∧e_b`, optionally restricted to horizontal indices.
pub fn fundamental(n: usize, u: usize, horizontal: bool) -> Vec<(usize, usize, G)> {
    let m = phi_matrix(n, u);
    let lo = if horizontal { 4 } else { 1 };
    let mut out = Vec::new();
    for a in lo..=dim(n) {
        for b in a + 1..=dim(n) {
            if m[a][b] != 0 {
                out.push((a, b, (m[a][b], 0)));
            }
        }
    }
    out
}

fn factorial(k: usize) -> i128 {
    (1..=k as i128).product()
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = subsets(&items[1..], k);
    for mut s in subsets(&items[1..], k - 1) {
        s.insert(0, items[0]);
        out.push(s);
    }
    out
}

/// `ω^k` for `ω = Σ_p y_{2p}∧y_{2p+1}`; zero outside `0..=n-1`.
pub fn omega_power(n: usize, k: i64) -> Dense {
    let mut v = zero(n);
    if k < 0 || k as usize > n - 1 {
        return v;
    }
    let k = k as usize;
    let blocks: Vec<usize> = (1..n).collect();
    for s in subsets(&blocks, k) {
        let mut m = 0;
        for p in s {
            m |= 0b11 << (2 * p - 1);
        }
        v[m] = (factorial(k), 0);
    }
    v
}

pub fn y1_omega_power(n: usize, k: i64) -> Dense {
    wedge(1, &omega_power(n, k))
}

/// `ω^{k+1} − i(k+1) y_1∧ω^k`, or `1, y_1` when `n = 1`.
pub fn psi_k(n: usize, k: i64) -> Dense {
    if n == 1 {
        return if k == -1 { unit(1) } else { wedge(1, &unit(1)) };
    }
    sub(
        &omega_power(n, k + 1),
        &scale((0, k as i128 + 1), &y1_omega_power(n, k)),
    )
}

/// Twice the horizontal Killing operator with `λ = ½`.
pub fn killing_h(n: usize, x: usize, v: &Dense) -> Dense {
    let mut out = e(x, v);
    for i in 1..=3 {
        let m = phi_matrix(n, i);
        let phix: Vec<(usize, G)> = (1..=dim(n))
            .filter(|&r| m[r][x] != 0)
            .map(|r| (r, (m[r][x], 0)))
            .collect();
        out = add(&out, &e(i, &vec_act(&phix, v)));
    }
    out
}

/// Twice the vertical Killing operator with `λ = ½`.
pub fn killing_v(i: usize, v: &Dense) -> Dense {
    let (_, j, k) = CYCLIC[i - 1];
    sub(&e(j, &e(k, v)), &e(i, v))
}

/// `(−2φ_i(X) + ξ_i X − X ξ_i)·v` for `X = e_x`.
pub fn e_minus(n: usize, i: usize, x: usize, v: &Dense) -> Dense {
    let m = phi_matrix(n, i);
    let phix: Vec<(usize, G)> = (1..=dim(n))
        .filter(|&r| m[r][x] != 0)
        .map(|r| (r, (-2 * m[r][x], 0)))
        .collect();
    let a = vec_act(&phix, v);
    add(&a, &sub(&e(i, &e(x, v)), &e(x, &e(i, v))))
}

/// `Re Σ v_m · conj(w_m)`.
pub fn inner_re(v: &Dense, w: &Dense) -> i128 {
    v.iter().zip(w).map(|(a, b)| a.0 * b.0 + a.1 * b.1).sum()
}

fn rational_to_i128(r: &sasaki_core::Rational) -> Option<i128> {
    if r.is_integer() {
        r.to_integer().to_i128()
    } else {
        None
    }
}

/// `scale·ψ` as a dense vector, when it has Gaussian-integer coefficients.
pub fn to_dense(psi: &Spinor, scale: i128) -> Option<Dense> {
    let n = psi.params().n();
    let mut v = zero(n);
    let s = Scalar::from_int(scale as i64);
    for (m, c) in psi.terms() {
        let c = c * &s;
        if !c.is_gaussian() {
            return None;
        }
        v[m.bits() as usize] = (rational_to_i128(c.a())?, rational_to_i128(c.b())?);
    }
    Some(v)
}

/// `(s·ψ, s)` for the least `s > 0` making every coefficient a Gaussian integer.
pub fn integral(psi: &Spinor) -> (Dense, i128) {
    let mut s: i128 = 1;
    for (_, c) in psi.terms() {
        assert!(c.is_gaussian(), "coefficient outside Q(i)");
        for r in [c.a(), c.b()] {
            let d = r.denom().to_i128().expect("small denominator");
            s = s / gcd(s, d) * d;
        }
    }
    (to_dense(psi, s).expect("integral after scaling"), s)
}

/// `v / denom` as a library spinor.
pub fn from_dense(n: usize, v: &Dense, denom: i64) -> Spinor {
    let params = SpinParams::new(n).unwrap();
    let d = Scalar::from_ratio(1, denom);
    let terms = v.iter().enumerate().filter(|(_, c)| **c != (0, 0)).map(|(m, c)| {
        let s = Scalar::gaussian(
            sasaki_core::rational(c.0 as i64, 1),
            sasaki_core::rational(c.1 as i64, 1),
        );
        (Monomial(m as u32), s * &d)
    });
    Spinor::from_terms(params, terms)
}

/// A spinor with coefficients `(re, im)/denom`, stored as `(numerators, denom)`.
pub struct Scaled {
    pub v: Dense,
    pub denom: i128,
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Parse a whitespace-free LaTeX combination of `ω^k` and `y_1∧ω^k` such as
/// `1+iy_1\wedge\omega-\frac{1}{2}\omega^2`.
pub fn parse_latex(n: usize, s: &str) -> Scaled {
    let mut pieces: Vec<(i128, String)> = Vec::new();
    let mut sign = 1;
    let mut cur = String::new();
    for ch in s.chars() {
        if ch == '+' || ch == '-' {
            if !cur.is_empty() {
                pieces.push((sign, std::mem::take(&mut cur)));
            }
            sign = if ch == '-' { -1 } else { 1 };
        } else {
            cur.push(ch);
        }
    }
    pieces.push((sign, cur));

    let mut terms: Vec<(i128, i128, bool, Dense)> = Vec::new();
    for (sign, mut t) in pieces {
        let (mut num, mut den) = (1i128, 1i128);
        if let Some(rest) = t.strip_prefix("\\frac{") {
            let close = rest.find('}').unwrap();
            num = rest[..close].parse().unwrap();
            let rest = &rest[close + 2..];
            let close2 = rest.find('}').unwrap();
            den = rest[..close2].parse().unwrap();
            t = rest[close2 + 1..].to_string();
        } else {
            let digits: String = t.chars().take_while(|c| c.is_ascii_digit()).collect();
            if !digits.is_empty() && digits.len() < t.len() {
                num = digits.parse().unwrap();
                t = t[digits.len()..].to_string();
            }
        }
        let imag = t.starts_with('i');
        if imag {
            t.remove(0);
        }
        let power = |rest: &str| -> i64 {
            match rest {
                "" => 1,
                r => r.strip_prefix('^').unwrap().parse().unwrap(),
            }
        };
        let basis = if t.is_empty() || t == "1" {
            omega_power(n, 0)
        } else if let Some(rest) = t.strip_prefix("y_1\\wedge\\omega") {
            y1_omega_power(n, power(rest))
        } else if t == "y_1" {
            y1_omega_power(n, 0)
        } else if let Some(rest) = t.strip_prefix("\\omega") {
            omega_power(n, power(rest))
        } else {
            panic!("unrecognised term {t}");
        };
        terms.push((sign * num, den, imag, basis));
    }
    let denom = terms.iter().fold(1, |acc, (_, d, _, _)| acc / gcd(acc, *d) * d);
    let mut v = zero(n);
    for (num, den, imag, basis) in terms {
        let c = num * (denom / den);
        let coeff = if imag { (0, c) } else { (c, 0) };
        v = add(&v, &scale(coeff, &basis));
    }
    Scaled { v, denom }
}

/// Real matrices (1-based, on all of `R^{4n-1}`) of the right actions
/// `v ↦ vA` of a basis of `sp(n-1)` on `H^{n-1}`.
pub fn sp_generators(n: usize) -> Vec<Vec<Vec<i128>>> {
    let d = dim(n);
    let m = n - 1;
    // entries: (t, s, sign, unit) meaning A_ts = sign·unit
    let mut specs: Vec<Vec<(usize, usize, i128, usize)>> = Vec::new();
    for s in 0..m {
        for u in 1..4 {
            specs.push(vec![(s, s, 1, u)]);
        }
    }
    for s in 0..m {
        for t in s + 1..m {
            for u in 0..4 {
                let back = if u == 0 { -1 } else { 1 };
                specs.push(vec![(s, t, 1, u), (t, s, back, u)]);
            }
        }
    }
    specs
        .into_iter()
        .map(|entries| {
            let mut mat = vec![vec![0; d + 1]; d + 1];
            for (t, s, sign, u) in entries {
                // (vA)_s gains v_t·A_ts
                for w in 0..4 {
                    let (q, r) = qmul(w, u);
                    mat[4 * (s + 1) + r][4 * (t + 1) + w] += sign * q;
                }
            }
            mat
        })
        .collect()
}

/// Twice the spin lift `½ Σ_{a<b} T_ba e_a e_b`.
pub fn lift2(mat: &[Vec<i128>], v: &Dense) -> Dense {
    let d = mat.len() - 1;
    let mut theta = Vec::new();
    for a in 1..=d {
        for b in a + 1..=d {
            if mat[b][a] != 0 {
                theta.push((a, b, (mat[b][a], 0)));
            }
        }
    }
    two_form_act(&theta, v)
}
