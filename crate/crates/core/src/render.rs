//! Rendering spinors in the invariant basis `ω^k`, `y_1∧ω^k`.
//!
//! Terms are printed by increasing degree, except that `y_1` itself follows
//! `ω`. Coefficients are Gaussian rationals printed as fractions with `i`.

use num_traits::{One, Signed, Zero};

use crate::field::{Rational, Scalar};
use crate::spinor::{omega_power, y1_omega_power, Monomial, Spinor};

/// One of the invariant basis spinors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvariantTerm {
    /// `ω^k`
    Omega(usize),
    /// `y_1 ∧ ω^k`
    Y1Omega(usize),
}

impl InvariantTerm {
    fn order_key(self) -> usize {
        match self {
            InvariantTerm::Omega(k) => 4 * k,
            InvariantTerm::Y1Omega(0) => 5,
            InvariantTerm::Y1Omega(k) => 4 * k + 2,
        }
    }
}

/// Write `ψ = Σ a_k ω^k + Σ b_k y_1∧ω^k` if possible, in printing order.
pub fn decompose_invariant(psi: &Spinor) -> Option<Vec<(Scalar, InvariantTerm)>> {
    let params = psi.params();
    let n = params.n();
    let mut parts = Vec::new();
    let mut rebuilt = Spinor::zero(params);
    let mut fact = 1i64;
    for k in 0..n {
        if k > 0 {
            fact *= k as i64;
        }
        // ω^k has coefficient k! on y_2∧…∧y_{2k+1}
        let block: Vec<usize> = (2..2 + 2 * k).collect();
        let inv_fact = Scalar::from_ratio(1, fact);
        let a = psi.coeff(Monomial::from_indices(&block)) * &inv_fact;
        let mut with_y1 = vec![1];
        with_y1.extend(&block);
        let b = psi.coeff(Monomial::from_indices(&with_y1)) * &inv_fact;
        if !a.is_zero() {
            rebuilt += &omega_power(params, k as i64).scale(&a);
            parts.push((a, InvariantTerm::Omega(k)));
        }
        if !b.is_zero() {
            rebuilt += &y1_omega_power(params, k as i64).scale(&b);
            parts.push((b, InvariantTerm::Y1Omega(k)));
        }
    }
    if rebuilt != *psi {
        return None;
    }
    parts.sort_by_key(|(_, t)| t.order_key());
    Some(parts)
}

fn fraction_latex(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

fn fraction_plain(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("({}/{})", r.numer(), r.denom())
    }
}

/// Split a real or purely imaginary rational coefficient into sign and magnitude.
fn gaussian_parts(c: &Scalar) -> Option<(bool, Rational, bool)> {
    if !c.c().is_zero() || !c.d().is_zero() {
        return None;
    }
    match (c.a().is_zero(), c.b().is_zero()) {
        (false, true) => Some((c.a().is_negative(), c.a().abs(), false)),
        (true, false) => Some((c.b().is_negative(), c.b().abs(), true)),
        _ => None,
    }
}

fn term_latex(t: InvariantTerm) -> String {
    match t {
        InvariantTerm::Omega(0) => String::new(),
        InvariantTerm::Omega(1) => "\\omega".into(),
        InvariantTerm::Omega(k) => format!("\\omega^{k}"),
        InvariantTerm::Y1Omega(0) => "y_1".into(),
        InvariantTerm::Y1Omega(1) => "y_1\\wedge\\omega".into(),
        InvariantTerm::Y1Omega(k) => format!("y_1\\wedge\\omega^{k}"),
    }
}

fn term_plain(t: InvariantTerm) -> String {
    match t {
        InvariantTerm::Omega(0) => String::new(),
        InvariantTerm::Omega(1) => "ω".into(),
        InvariantTerm::Omega(k) => format!("ω^{k}"),
        InvariantTerm::Y1Omega(0) => "y_1".into(),
        InvariantTerm::Y1Omega(1) => "y_1∧ω".into(),
        InvariantTerm::Y1Omega(k) => format!("y_1∧ω^{k}"),
    }
}

fn render_with(
    psi: &Spinor,
    frac: fn(&Rational) -> String,
    term: fn(InvariantTerm) -> String,
    plus: &str,
    minus: &str,
    dot: &str,
) -> Option<String> {
    if psi.is_zero() {
        return Some("0".into());
    }
    let parts = decompose_invariant(psi)?;
    let mut out = String::new();
    for (idx, (c, t)) in parts.iter().enumerate() {
        let (neg, mag, imag) = gaussian_parts(c)?;
        let mut coeff = if mag.is_one() { String::new() } else { frac(&mag) };
        if imag {
            coeff.push('i');
        }
        let name = term(*t);
        let body = match (coeff.is_empty(), name.is_empty()) {
            (true, true) => "1".to_string(),
            (false, true) => coeff,
            (true, false) => name,
            (false, false) => {
                let sep = if imag { "" } else { dot };
                format!("{coeff}{sep}{name}")
            }
        };
        match (idx, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(plus),
            (_, true) => out.push_str(minus),
        }
        out.push_str(&body);
    }
    Some(out)
}

/// LaTeX rendering such as `1+iy_1\wedge\omega-\frac{1}{2}\omega^2`, when `ψ` is invariant.
pub fn render_latex(psi: &Spinor) -> Option<String> {
    render_with(psi, fraction_latex, term_latex, "+", "-", "")
}

/// Plain rendering such as `1 + iy_1∧ω - (1/2)ω^2`, falling back to monomials.
pub fn render_plain(psi: &Spinor) -> String {
    render_with(psi, fraction_plain, term_plain, " + ", " - ", "").unwrap_or_else(|| psi.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::{psi_k, SpinParams};

    #[test]
    fn examples() {
        let q = SpinParams::new(3).unwrap();
        assert_eq!(render_latex(&psi_k(q, 0).unwrap()).unwrap(), "\\omega-iy_1");
        assert_eq!(render_latex(&psi_k(q, -1).unwrap()).unwrap(), "1");
        let s = Spinor::one(q) + y1_omega_power(q, 1).mul_i() - omega_power(q, 2).scale(&Scalar::from_ratio(1, 2));
        assert_eq!(render_latex(&s).unwrap(), "1+iy_1\\wedge\\omega-\\frac{1}{2}\\omega^2");
        assert_eq!(render_plain(&s), "1 + iy_1∧ω - (1/2)ω^2");
        let t = omega_power(q, 1).scale(&Scalar::from_int(-3)) + Spinor::y(q, 1).scale(&Scalar::from_int(2));
        assert_eq!(render_latex(&t).unwrap(), "-3\\omega+2y_1");
    }

    #[test]
    fn non_invariant_falls_back() {
        let q = SpinParams::new(2).unwrap();
        let s = Spinor::y(q, 2);
        assert!(render_latex(&s).is_none());
        assert_eq!(render_plain(&s), s.to_string());
        let r = Spinor::one(q).scale(&Scalar::sqrt2());
        assert!(render_latex(&r).is_none());
    }
}
