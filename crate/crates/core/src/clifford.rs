//! Clifford multiplication of vectors and forms on spinors, the spin lift of
//! skew endomorphisms, and the `so`-action on forms.
//!
//! Basis directions pair with generators as `e_{2j}, e_{2j+1} ↔ y_j`, and
//! `e_1` acts by `+i` on even and `−i` on odd grades.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::spinor::{SpinParams, Spinor};
use crate::tensor::{Blade, CVector, Endo, Form};

fn check_index(params: SpinParams, a: usize) -> Result<()> {
    if a == 0 || a > params.dim() {
        return Err(Error::IndexOutOfRange {
            what: "basis vector",
            index: a,
            max: params.dim(),
        });
    }
    Ok(())
}

fn check_dim(params: SpinParams, dim: usize) -> Result<()> {
    if dim != params.dim() {
        return Err(Error::InvalidParameter(format!(
            "tensor of dimension {dim} used with spinors of dimension {}",
            params.dim()
        )));
    }
    Ok(())
}

/// `e_a · ψ`.
pub fn cliff_e(a: usize, psi: &Spinor) -> Result<Spinor> {
    check_index(psi.params(), a)?;
    Ok(cliff_e_unchecked(a, psi))
}

pub(crate) fn cliff_e_unchecked(a: usize, psi: &Spinor) -> Spinor {
    let params = psi.params();
    let mut out = Spinor::zero(params);
    if a == 1 {
        for (m, c) in psi.terms() {
            let v = c.mul_i();
            out.add_term(*m, if m.grade() % 2 == 0 { v } else { -v });
        }
        return out;
    }
    let j = a / 2;
    let even = a.is_multiple_of(2);
    for (m, c) in psi.terms() {
        if let Some((neg, t)) = m.wedge(j) {
            // e_{2j}: +i·y_j∧ ; e_{2j+1}: +y_j∧
            let v = if even { c.mul_i() } else { c.clone() };
            out.add_signed(t, neg, &v);
        }
        if let Some((neg, t)) = m.contract(j) {
            // e_{2j}: +i·x_j⌟ ; e_{2j+1}: −x_j⌟
            let v = if even { c.mul_i() } else { -c };
            out.add_signed(t, neg, &v);
        }
    }
    out
}

/// `v · ψ` for a complexified vector.
pub fn cliff_vec(v: &CVector, psi: &Spinor) -> Result<Spinor> {
    check_dim(psi.params(), v.dim())?;
    Ok(cliff_vec_unchecked(v, psi))
}

pub(crate) fn cliff_vec_unchecked(v: &CVector, psi: &Spinor) -> Spinor {
    let mut out = Spinor::zero(psi.params());
    for (a, c) in v.nonzero() {
        out += &cliff_e_unchecked(a, psi).scale(c);
    }
    out
}

/// `e_B · ψ = e_{a1} · (e_{a2} · ( … e_{ak} · ψ))` for `a1 < … < ak`.
pub(crate) fn cliff_blade(b: Blade, psi: &Spinor) -> Spinor {
    let mut acc = psi.clone();
    for a in b.indices().into_iter().rev() {
        acc = cliff_e_unchecked(a, &acc);
    }
    acc
}

/// `θ · ψ`, acting on each basis monomial by the ordered Clifford product.
pub fn cliff_form(theta: &Form, psi: &Spinor) -> Result<Spinor> {
    check_dim(psi.params(), theta.dim())?;
    Ok(cliff_form_unchecked(theta, psi))
}

pub(crate) fn cliff_form_unchecked(theta: &Form, psi: &Spinor) -> Spinor {
    let mut out = Spinor::zero(psi.params());
    for (b, c) in theta.terms() {
        out += &cliff_blade(*b, psi).scale(c);
    }
    out
}

/// The spin lift `T̃ = ½ Σ_{a<b} θ_{ab} e_a · e_b` of a skew map `T`.
#[derive(Clone, Debug)]
pub struct SpinLift {
    terms: Vec<(usize, usize, Scalar)>,
    dim: usize,
}

/// Lift a skew endomorphism, where `T(Y) = Y ⌟ θ` fixes the matching 2-form `θ`.
pub fn spin_lift(t: &Endo) -> Result<SpinLift> {
    let theta = t.to_two_form()?;
    let half = Scalar::from_ratio(1, 2);
    let terms = theta
        .terms()
        .map(|(b, c)| {
            let idx = b.indices();
            (idx[0], idx[1], c * &half)
        })
        .collect();
    Ok(SpinLift { terms, dim: t.dim() })
}

impl SpinLift {
    pub fn apply(&self, psi: &Spinor) -> Result<Spinor> {
        check_dim(psi.params(), self.dim)?;
        Ok(self.apply_unchecked(psi))
    }

    pub(crate) fn apply_unchecked(&self, psi: &Spinor) -> Spinor {
        let mut out = Spinor::zero(psi.params());
        for (a, b, c) in &self.terms {
            let v = cliff_e_unchecked(*a, &cliff_e_unchecked(*b, psi));
            out += &v.scale(c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Degree-wise right-hand side of `θ·X − X·θ = ((−1)^p+1) X⌟θ + ((−1)^p−1) X∧θ`.
pub fn vector_form_commutator_rhs(theta: &Form, x: &CVector) -> Form {
    let mut out = Form::zero(theta.dim());
    for p in 0..=theta.dim() {
        let part = theta.grade_part(p);
        if part.is_zero() {
            continue;
        }
        if p % 2 == 0 {
            out += &part.interior(x).scale(&Scalar::from_int(2));
        } else {
            out += &x.flat().wedge(&part).scale(&Scalar::from_int(-2));
        }
    }
    out
}

/// Outcome of comparing two operators on a probe set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorComparison {
    pub probes: usize,
    pub mismatches: usize,
}

impl OperatorComparison {
    pub fn holds(&self) -> bool {
        self.mismatches == 0
    }
}

/// Compare `θ·X − X·θ` against the right-hand side form, spinor by spinor.
pub fn commutator_vector_form(theta: &Form, x: &CVector, probes: &[Spinor]) -> Result<OperatorComparison> {
    let rhs = vector_form_commutator_rhs(theta, x);
    let mut mismatches = 0;
    for psi in probes {
        let lhs = &cliff_form(theta, &cliff_vec(x, psi)?)? - &cliff_vec(x, &cliff_form(theta, psi)?)?;
        if lhs != cliff_form(&rhs, psi)? {
            mismatches += 1;
        }
    }
    Ok(OperatorComparison {
        probes: probes.len(),
        mismatches,
    })
}

/// The derivation extension of a skew map to forms: `T(a∧b) = T(a)∧b + a∧T(b)`.
pub fn so_action_on_form(t: &Endo, theta: &Form) -> Result<Form> {
    if !t.is_skew() {
        return Err(Error::NotSkew);
    }
    Ok(so_action_unchecked(t, theta))
}

pub(crate) fn so_action_unchecked(t: &Endo, theta: &Form) -> Form {
    let d = theta.dim();
    let mut out = Form::zero(d);
    for (b, c) in theta.terms() {
        let idx = b.indices();
        for (r, &a) in idx.iter().enumerate() {
            let image = t.column(a).flat();
            if image.is_zero() {
                continue;
            }
            let rest = Form::from_terms(d, [(Blade(b.0 & !(1 << (a - 1))), c.clone())]);
            let term = image.wedge(&rest);
            if r % 2 == 0 {
                out += &term;
            } else {
                out -= &term;
            }
        }
    }
    out
}
