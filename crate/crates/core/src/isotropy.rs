//! The isotropy algebra `sp(n−1)` of the round sphere acting on the tangent
//! space, and invariant spinors and forms as exact kernels.
//!
//! `sp(n−1)` acts on the horizontal space `ℍ^{n−1}` by right multiplication
//! with quaternionic anti-Hermitian matrices, which commutes with the left
//! multiplication defining `φ_1, φ_2, φ_3`.

use serde::Serialize;

use crate::clifford::{cliff_form_unchecked, cliff_vec_unchecked, so_action_unchecked, spin_lift, SpinLift};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::frame::SasakiFrame;
use crate::killing::SpinorBasis;
use crate::linalg::{coordinate_basis, joint_kernel, span_eq, KernelBasis, LinearOp, RowReducer, SparseVec};
use crate::report::Report;
use crate::spinor::{omega_power, y1_omega_power, SpinParams, Spinor};
use crate::tensor::Endo;
use crate::tensor::{blades_of_grade, Form};

/// Largest `n` for which form kernels are computed.
pub const FORM_MAX_N: usize = 4;
/// Largest degree for form kernels on the full tangent space.
pub const FULL_FORM_MAX_K: usize = 4;

type Quaternion = [i64; 4];

fn qmul(p: Quaternion, q: Quaternion) -> Quaternion {
    let [a1, b1, c1, d1] = p;
    let [a2, b2, c2, d2] = q;
    [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

fn qconj(q: Quaternion) -> Quaternion {
    [q[0], -q[1], -q[2], -q[3]]
}

const UNITS: [Quaternion; 4] = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
const UNIT_NAMES: [&str; 4] = ["1", "i", "j", "k"];

/// Real matrix of `v ↦ vA` on `ℍ^{n−1}`, where `(vA)_s = Σ_t v_t A_{ts}`.
fn right_action(n: usize, entries: &[((usize, usize), Quaternion)]) -> Endo {
    let d = 4 * n - 1;
    let mut m = Endo::zero(d);
    for &((t, s), a) in entries {
        for (r, unit) in UNITS.iter().enumerate() {
            let image = qmul(*unit, a);
            for (c, &v) in image.iter().enumerate() {
                if v != 0 {
                    let row = 4 * s + c;
                    let col = 4 * t + r;
                    let cur = m.get(row, col) + &Scalar::from_int(v);
                    m.set(row, col, cur);
                }
            }
        }
    }
    m
}

/// Generators of `sp(n−1)` as skew endomorphisms of the tangent space.
#[derive(Clone, Debug)]
pub struct IsotropyAlgebra {
    n: usize,
    generators: Vec<Endo>,
    labels: Vec<String>,
}

/// The basis `E_{st}^u` (`s < t`, `u ∈ {1,i,j,k}`) and `D_s^u` (`u ∈ {i,j,k}`).
pub fn sp_basis(n: usize) -> Result<IsotropyAlgebra> {
    SpinParams::new(n)?;
    if n < 2 {
        return Err(Error::InvalidParameter("isotropy algebra needs n >= 2".into()));
    }
    let mut generators = Vec::new();
    let mut labels = Vec::new();
    for s in 1..n {
        for (u, name) in UNITS.iter().zip(UNIT_NAMES).skip(1) {
            generators.push(right_action(n, &[((s, s), *u)]));
            labels.push(format!("D_{s}^{name}"));
        }
    }
    for s in 1..n {
        for t in s + 1..n {
            for (u, name) in UNITS.iter().zip(UNIT_NAMES) {
                let back = qconj(*u).map(|x| -x);
                generators.push(right_action(n, &[((s, t), *u), ((t, s), back)]));
                labels.push(format!("E_{s}{t}^{name}"));
            }
        }
    }
    Ok(IsotropyAlgebra { n, generators, labels })
}

fn flatten(m: &Endo) -> SparseVec {
    SparseVec::from_pairs(
        m.entries()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect(),
    )
}

/// Rank and expectation for one invariant space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantSummary {
    pub n: usize,
    pub space: String,
    pub rank: usize,
    #[serde(rename = "expectedRank")]
    pub expected_rank: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl IsotropyAlgebra {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Endo] {
        &self.generators
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn lifts(&self) -> Vec<SpinLift> {
        self.generators
            .iter()
            .map(|g| spin_lift(g).expect("generators are skew"))
            .collect()
    }

    /// Skewness, vertical triviality, commutation with every `φ_i`, and Lie closure.
    pub fn check_invariants(&self, frame: &SasakiFrame) -> Report {
        let mut r = Report::new();
        r.push(
            "generator count (n-1)(2n-1)",
            self.len() == (self.n - 1) * (2 * self.n - 1),
            format!("{}", self.len()),
        );
        let skew = self.generators.iter().all(Endo::is_skew);
        r.push("generators skew", skew, "");
        let vertical = self
            .generators
            .iter()
            .all(|g| (1..=3).all(|a| g.apply(&frame.basis(a)).is_zero()));
        r.push("generators vanish on xi_1, xi_2, xi_3", vertical, "");
        for i in 1..=3 {
            let ok = self.generators.iter().all(|g| g.commutator(frame.phi(i)).is_zero());
            r.push(format!("generators commute with phi_{i}"), ok, "");
        }
        let span = RowReducer::from_vectors(&self.generators.iter().map(flatten).collect::<Vec<_>>());
        r.push(
            "generators independent",
            span.rank() == self.len(),
            format!("rank {}", span.rank()),
        );
        let mut closed = true;
        for (a, ga) in self.generators.iter().enumerate() {
            for gb in &self.generators[a + 1..] {
                closed &= span.contains(&flatten(&ga.commutator(gb)));
            }
        }
        r.push("closed under commutator", closed, "");
        r
    }

    /// Joint kernel of all lifted generators on the spinor module.
    pub fn invariant_spinors(&self) -> SpinorBasis {
        let params = SpinParams::new(self.n).expect("validated");
        let lifts = self.lifts();
        let ops: Vec<LinearOp<'_>> = lifts
            .iter()
            .map(|l| -> LinearOp<'_> {
                Box::new(move |v: &SparseVec| SparseVec::from_spinor(&l.apply_unchecked(&v.to_spinor(params))))
            })
            .collect();
        let kernel = joint_kernel(coordinate_basis(0..params.spinor_dim()), &ops);
        SpinorBasis::new(params, "isotropy", kernel)
    }

    /// Invariant `k`-forms on the horizontal space or the full tangent space.
    pub fn invariant_forms(&self, k: usize, horizontal_only: bool) -> Result<KernelBasis> {
        let d = 4 * self.n - 1;
        if self.n > FORM_MAX_N {
            return Err(Error::Oversized(format!(
                "form kernels are limited to n <= {FORM_MAX_N}"
            )));
        }
        let (lo, cap) = if horizontal_only {
            (4, 2 * (self.n - 1))
        } else {
            (1, FULL_FORM_MAX_K)
        };
        if k > cap {
            return Err(Error::Oversized(format!(
                "degree {k} exceeds the limit {cap} for this exterior space"
            )));
        }
        let start = coordinate_basis(blades_of_grade(lo, d, k).into_iter().map(|b| b.0 as usize));
        let ops: Vec<LinearOp<'_>> = self
            .generators
            .iter()
            .map(|g| -> LinearOp<'_> {
                Box::new(move |v: &SparseVec| SparseVec::from_form(&so_action_unchecked(g, &v.to_form(d))))
            })
            .collect();
        Ok(joint_kernel(start, &ops))
    }
}

/// `η_1^{ε1} ∧ η_2^{ε2} ∧ η_3^{ε3} ∧ (Φ_1|_H)^{a1} ∧ (Φ_2|_H)^{a2} ∧ (Φ_3|_H)^{a3}` of degree `k`.
pub fn tau_forms(frame: &SasakiFrame, k: usize) -> Vec<Form> {
    let d = frame.dim();
    let phis: Vec<Form> = (1..=3).map(|i| frame.fundamental_h(i)).collect();
    let mut out = Vec::new();
    for eps in 0u32..8 {
        let e = eps.count_ones() as usize;
        if e > k || (k - e) % 2 == 1 {
            continue;
        }
        let total = (k - e) / 2;
        let mut head = Form::scalar(d, Scalar::one());
        for i in 1..=3 {
            if eps & (1 << (i - 1)) != 0 {
                head = head.wedge(frame.eta(i));
            }
        }
        for a1 in 0..=total {
            for a2 in 0..=total - a1 {
                let a3 = total - a1 - a2;
                let f = head
                    .wedge(&phis[0].wedge_power(a1))
                    .wedge(&phis[1].wedge_power(a2))
                    .wedge(&phis[2].wedge_power(a3));
                if !f.is_zero() {
                    out.push(f);
                }
            }
        }
    }
    out
}

/// `span{τ monomials of degree k} = invariant k-forms` on the full tangent space.
pub fn tau_span_check(alg: &IsotropyAlgebra, frame: &SasakiFrame, k: usize) -> Result<Report> {
    let kernel = alg.invariant_forms(k, false)?;
    let taus: Vec<SparseVec> = tau_forms(frame, k).iter().map(SparseVec::from_form).collect();
    let mut r = Report::new();
    r.push(
        format!("tau span = invariant {k}-forms (n = {})", alg.n()),
        kernel.span_eq(&taus),
        format!(
            "kernel rank {}, tau rank {}",
            kernel.rank(),
            crate::linalg::rank_of(&taus)
        ),
    );
    Ok(r)
}

/// Graded dimensions `(grade, dim)` of invariant spinors free of `y_1`.
pub fn anti_holomorphic_dims(invariants: &SpinorBasis) -> Result<Vec<(usize, usize)>> {
    let params = invariants.params();
    let top = 2 * (params.n() - 1);
    let mut dims = vec![0; top + 1];
    for psi in invariants.spinors() {
        let grades: Vec<usize> = psi.terms().map(|(m, _)| m.grade()).collect();
        let with_y1: Vec<bool> = psi.terms().map(|(m, _)| m.contains(1)).collect();
        let g = grades[0];
        if grades.iter().any(|&h| h != g) || with_y1.iter().any(|&b| b != with_y1[0]) {
            return Err(Error::InvalidParameter(
                "invariant basis spinor is not homogeneous".into(),
            ));
        }
        if !with_y1[0] {
            dims[g] += 1;
        }
    }
    Ok(dims.into_iter().enumerate().collect())
}

/// Expected ranks: `dim Σ_inv = 2n`, with span `{ω^k, y_1∧ω^k}`.
pub fn invariant_spinor_summary(alg: &IsotropyAlgebra, kernel: &SpinorBasis) -> (InvariantSummary, bool) {
    let params = kernel.params();
    let expected: Vec<Spinor> = (0..params.n() as i64)
        .flat_map(|k| [omega_power(params, k), y1_omega_power(params, k)])
        .collect();
    let summary = InvariantSummary {
        n: alg.n(),
        space: "spinor".into(),
        rank: kernel.rank(),
        expected_rank: 2 * alg.n(),
        matches: kernel.rank() == 2 * alg.n(),
    };
    (summary, kernel.span_eq(&expected))
}

/// Invariance of Clifford products, and the spans generated from `1` by invariant forms.
pub fn invariant_product_check(alg: &IsotropyAlgebra, frame: &SasakiFrame, invariants: &SpinorBasis) -> Report {
    let params = frame.params();
    let n = params.n();
    let lifts = alg.lifts();
    let mut r = Report::new();
    let one = Spinor::one(params);

    let max_tau = (4 * (n - 1) + 3).min(6);
    let taus: Vec<Form> = (0..=max_tau).flat_map(|k| tau_forms(frame, k)).collect();
    let mut products_invariant = true;
    for theta in &taus {
        for psi in invariants.spinors() {
            let prod = cliff_form_unchecked(theta, &psi);
            products_invariant &= lifts.iter().all(|l| l.apply_unchecked(&prod).is_zero());
        }
    }
    r.push(
        "theta . psi invariant for invariant theta, psi",
        products_invariant,
        format!("{} forms x {} spinors", taus.len(), invariants.rank()),
    );

    let mut phi2_powers = Vec::new();
    let mut phi1_powers = Vec::new();
    let (mut acc2, mut acc1) = (one.clone(), one.clone());
    for _ in 0..n {
        phi2_powers.push(acc2.clone());
        phi1_powers.push(acc1.clone());
        acc2 = cliff_form_unchecked(&frame.fundamental_h(2), &acc2);
        acc1 = cliff_form_unchecked(&frame.fundamental_h(1), &acc1);
    }
    let omegas: Vec<Spinor> = (0..n as i64).map(|k| omega_power(params, k)).collect();
    let y1s: Vec<Spinor> = (0..n as i64).map(|k| y1_omega_power(params, k)).collect();
    let to_vecs = |v: &[Spinor]| v.iter().map(SparseVec::from_spinor).collect::<Vec<_>>();
    r.push(
        "span{(Phi_2|H)^k . 1} = span{omega^k}",
        span_eq(&to_vecs(&phi2_powers), &to_vecs(&omegas)),
        "",
    );
    let shifted: Vec<Spinor> = phi2_powers
        .iter()
        .map(|s| cliff_vec_unchecked(frame.xi(2), s))
        .collect();
    r.push(
        "span{xi_2 (Phi_2|H)^k . 1} = span{y_1 omega^k}",
        span_eq(&to_vecs(&shifted), &to_vecs(&y1s)),
        "",
    );
    r.push(
        "(Phi_1|H)^k . 1 in span{1}",
        span_eq(&to_vecs(&phi1_powers), &to_vecs(std::slice::from_ref(&one))),
        "",
    );

    if n <= 3 {
        let all_taus: Vec<Form> = (0..=frame.dim()).flat_map(|k| tau_forms(frame, k)).collect();
        let images: Vec<SparseVec> = all_taus
            .iter()
            .map(|t| SparseVec::from_spinor(&cliff_form_unchecked(t, &one)))
            .collect();
        r.push(
            "span{tau . 1} = invariant spinors",
            invariants.kernel().span_eq(&images),
            format!("{} tau forms", all_taus.len()),
        );
    }
    r
}
