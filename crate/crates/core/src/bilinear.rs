//! Spinor bilinears: the 1-form `η_{ψ1,ψ2}`, its differential, the squaring
//! forms `ω_(k)`, and recovery of the structure tensors from `E_i⁻` spinors.

use serde::Serialize;

use crate::clifford::{cliff_blade, cliff_e_unchecked};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::frame::SasakiFrame;
use crate::killing::e_minus_op;
use crate::spinor::Spinor;
use crate::tensor::{blades_of_grade, Blade, CVector, Endo, Form};

/// Upper bound on the number of basis `k`-vectors evaluated by [`squaring`].
pub const SQUARING_LIMIT: usize = 20_000;

/// `η_{ψ1,ψ2}(X) = Re⟨ψ1, X·ψ2⟩`.
pub fn eta_bilinear(psi1: &Spinor, psi2: &Spinor) -> Result<Form> {
    psi1.params().check_same(&psi2.params())?;
    let d = psi1.params().dim();
    let mut out = Form::zero(d);
    for a in 1..=d {
        let v = psi1.inner(&cliff_e_unchecked(a, psi2))?.re();
        out.add_term(Blade::basis(a), v);
    }
    Ok(out)
}

/// `dη_{ψ1,ψ2}(X, Y) = 2λ Re⟨ψ1, (Y·X − X·Y)·ψ2⟩`.
pub fn d_eta_bilinear(lambda: &Scalar, psi1: &Spinor, psi2: &Spinor) -> Result<Form> {
    psi1.params().check_same(&psi2.params())?;
    let d = psi1.params().dim();
    let two_lambda = lambda * &Scalar::from_int(2);
    let mut out = Form::zero(d);
    for a in 1..=d {
        let xa = cliff_e_unchecked(a, psi2);
        for b in a + 1..=d {
            let yx = cliff_e_unchecked(b, &xa);
            let xy = cliff_e_unchecked(a, &cliff_e_unchecked(b, psi2));
            let v = psi1.inner(&(yx - xy))?.re() * &two_lambda;
            out.add_term(Blade::from_indices(&[a, b]), v);
        }
    }
    Ok(out)
}

/// `ω_(k)(X_1, …, X_k) = Re⟨(X_1∧…∧X_k)·ψ1, ψ2⟩`.
pub fn squaring(k: usize, psi1: &Spinor, psi2: &Spinor) -> Result<Form> {
    psi1.params().check_same(&psi2.params())?;
    let d = psi1.params().dim();
    if k > d {
        return Err(Error::InvalidParameter(format!("degree {k} exceeds dimension {d}")));
    }
    let blades = blades_of_grade(1, d, k);
    if blades.len() > SQUARING_LIMIT {
        return Err(Error::Oversized(format!(
            "{} basis {k}-vectors, limit {SQUARING_LIMIT}",
            blades.len()
        )));
    }
    let mut out = Form::zero(d);
    for b in blades {
        let v = cliff_blade(b, psi1).inner(psi2)?.re();
        out.add_term(b, v);
    }
    Ok(out)
}

/// `φ(X) = −½ (X ⌟ dη)♯`, column by column.
pub fn phi_from_deta(d_eta: &Form) -> Result<Endo> {
    if d_eta.degree().is_some_and(|k| k != 2) {
        return Err(Error::InvalidParameter("expected a 2-form".into()));
    }
    let d = d_eta.dim();
    let half = Scalar::from_ratio(-1, 2);
    let mut out = Endo::zero(d);
    for a in 1..=d {
        let col = d_eta.interior(&CVector::basis(d, a)).sharp();
        for (r, c) in col.nonzero() {
            out.set(r, a, c * &half);
        }
    }
    Ok(out)
}

/// Tensors built from the pair `(ψ, −ξ_i·ψ)`.
#[derive(Clone, Debug, Serialize)]
pub struct BilinearReport {
    pub eta: Form,
    pub xi: CVector,
    #[serde(rename = "dEta")]
    pub d_eta: Form,
    pub phi: Endo,
    /// `ω_(2)` of the ordered pair `(−ξ_i·ψ, ψ)`.
    pub omega2: Form,
    #[serde(rename = "matchedIndex")]
    pub matched_index: Option<usize>,
    #[serde(rename = "normSq")]
    pub norm_sq: Scalar,
    /// Whether `ξ ⌟ dη` vanishes.
    #[serde(rename = "xiKillsDEta")]
    pub xi_kills_d_eta: bool,
}

impl BilinearReport {
    /// `η = N η_j`, `φ = N φ_j`, `dη = 2N Φ_j` and `ω_(2) = −N Φ_j` for `N = ⟨ψ,ψ⟩`.
    pub fn matches(&self, frame: &SasakiFrame, j: usize) -> bool {
        let n = &self.norm_sq;
        self.eta == frame.eta(j).scale(n)
            && self.phi == frame.phi(j).scale(n)
            && self.d_eta == frame.d_eta(j).scale(n)
            && self.omega2 == frame.fundamental(j).scale(&-n)
    }
}

/// Recover the `i`-th structure from `ψ ∈ E_i⁻` and `ψ′ = −ξ_i·ψ`.
pub fn recover_sasaki(frame: &SasakiFrame, i: usize, psi: &Spinor) -> Result<BilinearReport> {
    if psi.is_zero() {
        return Err(Error::ZeroSpinor);
    }
    for a in 1..=frame.dim() {
        if !e_minus_op(frame, i, &frame.basis(a), psi)?.is_zero() {
            return Err(Error::NotInKernel(format!("E{i}")));
        }
    }
    let psi_prime = -crate::clifford::cliff_vec(frame.xi(i), psi)?;
    let eta = eta_bilinear(psi, &psi_prime)?;
    let xi = eta.sharp();
    let d_eta = d_eta_bilinear(&Scalar::from_ratio(1, 2), psi, &psi_prime)?;
    let phi = phi_from_deta(&d_eta)?;
    let omega2 = squaring(2, &psi_prime, psi)?;
    let xi_kills_d_eta = d_eta.interior(&xi).is_zero();
    let mut report = BilinearReport {
        eta,
        xi,
        d_eta,
        phi,
        omega2,
        matched_index: None,
        norm_sq: psi.norm_sq(),
        xi_kills_d_eta,
    };
    report.matched_index = (1..=3).find(|&j| report.matches(frame, j));
    Ok(report)
}
