//! Algebraic Killing-spinor equations at the origin, the subbundles `E_i⁻`
//! as operator kernels, and their closed-form bases.
//!
//! Along horizontal `X` the canonical connection has trivial Nomizu map, so
//! the Killing equation reduces to `½X·ψ + ½Σ_i ξ_i·φ_i(X)·ψ = 0`. Along
//! `ξ_i` the Levi-Civita action is `ξ_j ∧ ξ_k`, giving `½ξ_j·ξ_k·ψ = λ ξ_i·ψ`.

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::clifford::{cliff_e_unchecked, cliff_vec, cliff_vec_unchecked};
use crate::error::{Error, Result};
use crate::field::{rational, Scalar};
use crate::frame::{SasakiFrame, CYCLIC};
use crate::linalg::{coordinate_basis, joint_kernel, KernelBasis, LinearOp, SparseVec};
use crate::report::Report;
use crate::spinor::{psi_k, SpinParams, Spinor};
use crate::tensor::CVector;

/// The frame together with the Killing number.
#[derive(Clone, Debug)]
pub struct KillingConfig {
    frame: SasakiFrame,
    lambda: Scalar,
}

impl KillingConfig {
    /// Accepts `λ = ±½` only.
    pub fn new(frame: SasakiFrame, lambda: Scalar) -> Result<Self> {
        let half = Scalar::from_ratio(1, 2);
        if lambda != half && lambda != -half {
            return Err(Error::InvalidParameter(format!(
                "Killing number must be 1/2 or -1/2, got {lambda}"
            )));
        }
        Ok(KillingConfig { frame, lambda })
    }

    /// `λ = ½` on the model frame of parameter `n`.
    pub fn standard(n: usize) -> Result<Self> {
        Self::new(crate::frame::build_frame(n)?, Scalar::from_ratio(1, 2))
    }

    pub fn frame(&self) -> &SasakiFrame {
        &self.frame
    }

    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }

    /// `½X·ψ + ½Σ_i ξ_i·φ_i(X)·ψ`; rejects `X` with a vertical component.
    pub fn horizontal_killing_op(&self, x: &CVector, psi: &Spinor) -> Result<Spinor> {
        for a in 1..=3 {
            if !x.get(a).is_zero() {
                return Err(Error::VerticalDirection(a));
            }
        }
        let f = &self.frame;
        let mut out = cliff_vec(x, psi)?;
        for i in 1..=3 {
            out += &cliff_vec(f.xi(i), &cliff_vec(&f.phi(i).apply(x), psi)?)?;
        }
        Ok(out.scale(&Scalar::from_ratio(1, 2)))
    }

    /// `½ξ_j·ξ_k·ψ − λξ_i·ψ` for the even permutation `(i, j, k)`.
    pub fn vertical_killing_op(&self, i: usize, psi: &Spinor) -> Result<Spinor> {
        let (_, j, k) = cyclic_from(i)?;
        if psi.params() != self.frame.params() {
            return Err(Error::ParamMismatch {
                left: psi.params().n(),
                right: self.frame.n(),
            });
        }
        let a = cliff_e_unchecked(j, &cliff_e_unchecked(k, psi)).scale(&Scalar::from_ratio(1, 2));
        let b = cliff_e_unchecked(i, psi).scale(&self.lambda);
        Ok(a - b)
    }

    /// Joint kernel of all Killing operators on the full spinor module.
    pub fn killing_kernel(&self) -> SpinorBasis {
        let params = self.frame.params();
        let mut ops: Vec<LinearOp<'_>> = Vec::new();
        for i in 1..=3 {
            ops.push(spinor_op(params, move |psi| {
                self.vertical_killing_op(i, psi).expect("valid direction")
            }));
        }
        for a in self.frame.horizontal_indices() {
            let x = self.frame.basis(a);
            ops.push(spinor_op(params, move |psi| {
                self.horizontal_killing_op(&x, psi).expect("horizontal direction")
            }));
        }
        let kernel = joint_kernel(coordinate_basis(0..params.spinor_dim()), &ops);
        SpinorBasis::new(params, "killing", kernel)
    }
}

fn cyclic_from(i: usize) -> Result<(usize, usize, usize)> {
    CYCLIC.iter().copied().find(|c| c.0 == i).ok_or(Error::IndexOutOfRange {
        what: "structure",
        index: i,
        max: 3,
    })
}

fn spinor_op<'a>(params: SpinParams, f: impl Fn(&Spinor) -> Spinor + Sync + 'a) -> LinearOp<'a> {
    Box::new(move |v: &SparseVec| SparseVec::from_spinor(&f(&v.to_spinor(params))))
}

/// The basis `ψ_{−1}, …, ψ_{n−1}` of invariant Killing spinors.
pub fn killing_basis(params: SpinParams) -> Vec<Spinor> {
    (-1..params.n() as i64)
        .map(|k| psi_k(params, k).expect("index in range"))
        .collect()
}

/// `(−2φ_i(X) + ξ_i·X − X·ξ_i)·ψ`.
pub fn e_minus_op(frame: &SasakiFrame, i: usize, x: &CVector, psi: &Spinor) -> Result<Spinor> {
    cyclic_from(i)?;
    if x.dim() != frame.dim() || psi.params() != frame.params() {
        return Err(Error::ParamMismatch {
            left: psi.params().n(),
            right: frame.n(),
        });
    }
    Ok(e_minus_unchecked(frame, i, x, psi))
}

fn e_minus_unchecked(frame: &SasakiFrame, i: usize, x: &CVector, psi: &Spinor) -> Spinor {
    let xi = frame.xi(i);
    let a = cliff_vec_unchecked(&frame.phi(i).apply(x), psi).scale(&Scalar::from_int(-2));
    let b = cliff_vec_unchecked(xi, &cliff_vec_unchecked(x, psi));
    let c = cliff_vec_unchecked(x, &cliff_vec_unchecked(xi, psi));
    &(a + b) - &c
}

/// Joint kernel of [`e_minus_op`] over every basis direction.
pub fn e_minus_kernel(frame: &SasakiFrame, i: usize) -> Result<SpinorBasis> {
    cyclic_from(i)?;
    let params = frame.params();
    let ops: Vec<LinearOp<'_>> = (1..=frame.dim())
        .filter(|&a| a != i)
        .map(|a| {
            let x = frame.basis(a);
            spinor_op(params, move |psi| e_minus_unchecked(frame, i, &x, psi))
        })
        .collect();
    let kernel = joint_kernel(coordinate_basis(0..params.spinor_dim()), &ops);
    Ok(SpinorBasis::new(params, ["E1", "E2", "E3"][i - 1], kernel))
}

fn factorial(k: i64) -> i64 {
    (1..=k).product()
}

/// The closed-form basis spinor `Ψ_{E_i, which}` built from the `ψ_k`.
pub fn e_minus_closed_form(params: SpinParams, i: usize, which: u8) -> Result<Spinor> {
    cyclic_from(i)?;
    if which > 1 {
        return Err(Error::InvalidParameter(format!("which must be 0 or 1, got {which}")));
    }
    let n = params.n() as i64;
    let psi = |k: i64| psi_k(params, k).expect("index in range");
    let alternating = i == 2;
    let sign = |k: i64| if alternating && k % 2 == 1 { -1 } else { 1 };
    let out = match (i, which) {
        (1, 0) => psi(-1),
        (1, 1) => psi(n - 1).scale(&Scalar::gaussian(rational(0, 1), rational(1, n))),
        (_, 0) => {
            let mut acc = Spinor::zero(params);
            for k in 0..=(n - 1) / 2 {
                acc += &psi(2 * k).scale(&Scalar::from_ratio(sign(k), factorial(2 * k + 1)));
            }
            acc
        }
        _ => {
            let mut acc = Spinor::zero(params);
            for k in 0..=n / 2 {
                acc += &psi(2 * k - 1).scale(&Scalar::from_ratio(sign(k), factorial(2 * k)));
            }
            acc
        }
    };
    Ok(out)
}

/// Clifford relations between the closed-form bases under the Reeb vectors.
pub fn xi_shift_relations(frame: &SasakiFrame) -> Report {
    let params = frame.params();
    let mut r = Report::new();
    let xi = |i: usize, psi: &Spinor| cliff_vec_unchecked(frame.xi(i), psi);
    let cf = |i, w| e_minus_closed_form(params, i, w).expect("valid index");
    if params.n() == 1 {
        let (m1, p0) = (killing_basis(params)[0].clone(), killing_basis(params)[1].clone());
        r.push("xi_1 psi_{-1} = i psi_{-1}", xi(1, &m1) == m1.mul_i(), "");
        r.push("xi_1 psi_0 = -i psi_0", xi(1, &p0) == -p0.mul_i(), "");
        r.push("xi_2 psi_{-1} = i psi_0", xi(2, &m1) == p0.mul_i(), "");
        r.push("xi_3 psi_{-1} = psi_0", xi(3, &m1) == p0, "");
        return r;
    }
    r.push("xi_2 Psi_{E2,0} = Psi_{E2,1}", xi(2, &cf(2, 0)) == cf(2, 1), "");
    r.push(
        "xi_3 Psi_{E3,0} = i Psi_{E3,1}",
        xi(3, &cf(3, 0)) == cf(3, 1).mul_i(),
        "",
    );
    r.push(
        "xi_1 Psi_{E1,0} = i Psi_{E1,0}",
        xi(1, &cf(1, 0)) == cf(1, 0).mul_i(),
        "",
    );
    r
}

/// A kernel of spinor operators with its canonical echelon basis.
#[derive(Clone, Debug)]
pub struct SpinorBasis {
    params: SpinParams,
    operator: String,
    kernel: KernelBasis,
}

impl SpinorBasis {
    pub fn new(params: SpinParams, operator: &str, kernel: KernelBasis) -> Self {
        SpinorBasis {
            params,
            operator: operator.to_string(),
            kernel,
        }
    }

    pub fn params(&self) -> SpinParams {
        self.params
    }

    pub fn operator(&self) -> &str {
        &self.operator
    }

    pub fn rank(&self) -> usize {
        self.kernel.rank()
    }

    pub fn kernel(&self) -> &KernelBasis {
        &self.kernel
    }

    pub fn spinors(&self) -> Vec<Spinor> {
        self.kernel.vectors().iter().map(|v| v.to_spinor(self.params)).collect()
    }

    pub fn contains(&self, psi: &Spinor) -> bool {
        self.kernel.contains(&SparseVec::from_spinor(psi))
    }

    pub fn span_eq(&self, spinors: &[Spinor]) -> bool {
        let vs: Vec<SparseVec> = spinors.iter().map(SparseVec::from_spinor).collect();
        self.kernel.span_eq(&vs)
    }

    pub fn intersect(&self, other: &SpinorBasis) -> SpinorBasis {
        SpinorBasis::new(
            self.params,
            &format!("{}&{}", self.operator, other.operator),
            self.kernel.intersect(&other.kernel),
        )
    }
}

impl Serialize for SpinorBasis {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SpinorBasis", 4)?;
        st.serialize_field("n", &self.params.n())?;
        st.serialize_field("operator", &self.operator)?;
        st.serialize_field("rank", &self.rank())?;
        st.serialize_field("basis", &self.spinors())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::build_frame;
    use crate::spinor::{omega_power, y1_omega_power};

    fn cfg(n: usize) -> KillingConfig {
        KillingConfig::standard(n).unwrap()
    }

    #[test]
    fn lambda_guard() {
        let f = build_frame(2).unwrap();
        assert!(KillingConfig::new(f.clone(), Scalar::from_ratio(-1, 2)).is_ok());
        assert!(KillingConfig::new(f, Scalar::one()).is_err());
    }

    #[test]
    fn horizontal_examples() {
        let c = cfg(2);
        let q = c.frame().params();
        let x = c.frame().basis(4);
        assert!(c.horizontal_killing_op(&x, &psi_k(q, 0).unwrap()).unwrap().is_zero());
        assert!(c.horizontal_killing_op(&x, &Spinor::one(q)).unwrap().is_zero());
        assert_eq!(
            c.horizontal_killing_op(&c.frame().basis(1), &Spinor::one(q)),
            Err(Error::VerticalDirection(1))
        );

        // n = 3, X = e_8 on y_1∧ω: i·y_4∧y_1∧ω + y_5∧ω
        let c3 = cfg(3);
        let q3 = c3.frame().params();
        let psi = y1_omega_power(q3, 1);
        let got = c3.horizontal_killing_op(&c3.frame().basis(8), &psi).unwrap();
        let expected = psi.wedge(4).unwrap().mul_i() + omega_power(q3, 1).wedge(5).unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn vertical_examples() {
        let c = cfg(3);
        let q = c.frame().params();
        for k in 0..3 {
            assert!(c.vertical_killing_op(1, &omega_power(q, k)).unwrap().is_zero());
            assert!(c.vertical_killing_op(1, &y1_omega_power(q, k)).unwrap().is_zero());
        }
        assert!(!c.vertical_killing_op(2, &Spinor::y(q, 2)).unwrap().is_zero());
        assert!(c.vertical_killing_op(4, &Spinor::one(q)).is_err());
    }

    #[test]
    fn kernel_small() {
        let c1 = cfg(1);
        let k1 = c1.killing_kernel();
        assert_eq!(k1.rank(), 2);
        let q1 = c1.frame().params();
        assert!(k1.span_eq(&[Spinor::one(q1), Spinor::y(q1, 1)]));

        let c2 = cfg(2);
        let k2 = c2.killing_kernel();
        let q = c2.frame().params();
        assert_eq!(k2.rank(), 3);
        let expected = [Spinor::one(q), psi_k(q, 0).unwrap(), y1_omega_power(q, 1)];
        assert!(k2.span_eq(&expected));
    }

    #[test]
    fn e_minus_examples() {
        let f = build_frame(2).unwrap();
        let q = f.params();
        let x = f.basis(4);
        assert!(e_minus_op(&f, 1, &x, &Spinor::one(q)).unwrap().is_zero());
        assert!(e_minus_op(&f, 1, &x, &y1_omega_power(q, 1)).unwrap().is_zero());
        let f3 = build_frame(3).unwrap();
        let q3 = f3.params();
        assert!(e_minus_op(&f3, 1, &f3.basis(4), &y1_omega_power(q3, 2))
            .unwrap()
            .is_zero());
        assert!(!e_minus_op(&f3, 1, &f3.basis(4), &omega_power(q3, 1)).unwrap().is_zero());

        let k = e_minus_kernel(&f, 2).unwrap();
        assert_eq!(k.rank(), 2);
        let w = psi_k(q, 0).unwrap();
        let v = Spinor::one(q) + y1_omega_power(q, 1).mul_i();
        assert!(k.span_eq(&[w, v]));
        let k1 = e_minus_kernel(&f, 1).unwrap();
        assert!(k1.span_eq(&[Spinor::one(q), y1_omega_power(q, 1)]));
        assert!(e_minus_kernel(&f, 0).is_err());
    }

    #[test]
    fn e_minus_dimension_three() {
        let f = build_frame(1).unwrap();
        for i in 1..=3 {
            assert_eq!(e_minus_kernel(&f, i).unwrap().rank(), 2);
        }
    }

    #[test]
    fn closed_forms() {
        let q2 = SpinParams::new(2).unwrap();
        assert_eq!(e_minus_closed_form(q2, 2, 0).unwrap(), psi_k(q2, 0).unwrap());
        assert_eq!(e_minus_closed_form(q2, 1, 1).unwrap(), y1_omega_power(q2, 1));
        let q4 = SpinParams::new(4).unwrap();
        let half = Scalar::from_ratio(1, 2);
        let sixth_i = Scalar::gaussian(rational(0, 1), rational(1, 6));
        let expected = Spinor::one(q4) - y1_omega_power(q4, 1).mul_i() + omega_power(q4, 2).scale(&half)
            - y1_omega_power(q4, 3).scale(&sixth_i);
        assert_eq!(e_minus_closed_form(q4, 3, 1).unwrap(), expected);
        assert!(e_minus_closed_form(q4, 3, 2).is_err());
    }

    #[test]
    fn shifts() {
        for n in 1..=3 {
            let r = xi_shift_relations(&build_frame(n).unwrap());
            assert!(r.passed(), "n = {n}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn json_shape() {
        let k = cfg(1).killing_kernel();
        let v = serde_json::to_value(&k).unwrap();
        assert_eq!(v["operator"], "killing");
        assert_eq!(v["rank"], 2);
        assert_eq!(v["basis"][0][0]["indices"], serde_json::json!([]));
    }
}
