//! The model 3-Sasakian tangent space at the origin: Reeb vectors, the
//! structure endomorphisms `φ_i`, their fundamental forms and the torsion of
//! the canonical connection, in an adapted orthonormal frame.
//!
//! The frame is `e_1, e_2, e_3 = ξ_1, ξ_2, ξ_3` followed by horizontal blocks
//! `e_{4p}, …, e_{4p+3}` for `p = 1, …, n−1`. On each block `φ_1, φ_2, φ_3`
//! act as left multiplication by the quaternion units `i, j, k` under
//! `(e_{4p}, e_{4p+1}, e_{4p+2}, e_{4p+3}) ↔ (1, i, j, k)`.

use serde::Serialize;

use crate::clifford::{cliff_form, cliff_vec};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::probe::probe_spinors;
use crate::report::Report;
use crate::spinor::{SpinParams, Spinor};
use crate::tensor::{CVector, Endo, Form};

/// Even permutations `(i, j, k)` of `(1, 2, 3)`.
pub const CYCLIC: [(usize, usize, usize); 3] = [(1, 2, 3), (2, 3, 1), (3, 1, 2)];

#[derive(Clone, Debug, Serialize)]
pub struct SasakiFrame {
    #[serde(skip)]
    params: SpinParams,
    n: usize,
    xi: [CVector; 3],
    eta: [Form; 3],
    phi: [Endo; 3],
    #[serde(rename = "Phi")]
    fundamental: [Form; 3],
    #[serde(rename = "Phi0")]
    phi0: Form,
    #[serde(rename = "dEta")]
    d_eta: [Form; 3],
    torsion: Form,
}

/// Left multiplication by `i`, `j`, `k` on `(1, i, j, k)` as signed basis images.
const QUATERNION_LEFT: [[(usize, i64); 4]; 3] = [
    [(1, 1), (0, -1), (3, 1), (2, -1)],
    [(2, 1), (3, -1), (0, -1), (1, 1)],
    [(3, 1), (2, 1), (1, -1), (0, -1)],
];

pub fn build_frame(n: usize) -> Result<SasakiFrame> {
    let params = SpinParams::new(n)?;
    let d = params.dim();
    let xi = [1, 2, 3].map(|i| CVector::basis(d, i));
    let eta = [1, 2, 3].map(|i| Form::basis(d, &[i]));
    let phi = [0, 1, 2].map(|q| {
        let (_, j, k) = CYCLIC[q];
        let mut m = Endo::zero(d);
        // φ_i(ξ_j) = ξ_k, φ_i(ξ_k) = −ξ_j
        m.map_basis(j, k, 1);
        m.map_basis(k, j, -1);
        for p in 1..n {
            for (src, &(dst, sign)) in QUATERNION_LEFT[q].iter().enumerate() {
                m.map_basis(4 * p + src, 4 * p + dst, sign);
            }
        }
        m
    });
    let fundamental = [0, 1, 2].map(|q| phi[q].fundamental_form());
    let mut phi0 = Form::zero(d);
    for p in 1..n {
        phi0 += &Form::basis(d, &[4 * p, 4 * p + 1]);
        phi0 -= &Form::basis(d, &[4 * p + 2, 4 * p + 3]);
    }
    let two = Scalar::from_int(2);
    let d_eta = [0, 1, 2].map(|q| fundamental[q].scale(&two));
    let mut torsion = Form::zero(d);
    for q in 0..3 {
        torsion += &eta[q].wedge(&d_eta[q]);
    }
    Ok(SasakiFrame {
        params,
        n,
        xi,
        eta,
        phi,
        fundamental,
        phi0,
        d_eta,
        torsion,
    })
}

impl SasakiFrame {
    pub fn params(&self) -> SpinParams {
        self.params
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.params.dim()
    }

    /// `ξ_i` for `i ∈ {1, 2, 3}`.
    pub fn xi(&self, i: usize) -> &CVector {
        &self.xi[i - 1]
    }

    pub fn eta(&self, i: usize) -> &Form {
        &self.eta[i - 1]
    }

    pub fn phi(&self, i: usize) -> &Endo {
        &self.phi[i - 1]
    }

    /// The fundamental 2-form `Φ_i(X, Y) = g(X, φ_i Y)`.
    pub fn fundamental(&self, i: usize) -> &Form {
        &self.fundamental[i - 1]
    }

    /// `Φ_i` restricted to the horizontal space.
    pub fn fundamental_h(&self, i: usize) -> Form {
        self.fundamental[i - 1].filter(|b| b.within(4, self.dim()))
    }

    pub fn phi0(&self) -> &Form {
        &self.phi0
    }

    pub fn d_eta(&self, i: usize) -> &Form {
        &self.d_eta[i - 1]
    }

    pub fn torsion(&self) -> &Form {
        &self.torsion
    }

    pub fn horizontal_indices(&self) -> std::ops::RangeInclusive<usize> {
        4..=self.dim()
    }

    pub fn is_horizontal(&self, a: usize) -> bool {
        a >= 4 && a <= self.dim()
    }

    pub fn basis(&self, a: usize) -> CVector {
        CVector::basis(self.dim(), a)
    }

    /// `η_k ⊗ ξ_j`, i.e. `X ↦ η_k(X) ξ_j`.
    fn eta_xi(&self, k: usize, j: usize) -> Endo {
        Endo::outer(self.xi(j), self.xi(k))
    }

    pub fn check_invariants(&self) -> Report {
        let d = self.dim();
        let mut r = Report::new();
        let id = Endo::identity(d);
        for i in 1..=3 {
            r.push(format!("xi_{i} = e_{i}"), *self.xi(i) == self.basis(i), "");
            for j in 1..=3 {
                let v = self.eta(i).interior(self.xi(j)).coeff(crate::tensor::Blade::SCALAR);
                r.push(
                    format!("eta_{i}(xi_{j})"),
                    v == Scalar::from_int((i == j) as i64),
                    v.to_string(),
                );
            }
            let sq = self.phi(i).compose(self.phi(i));
            let expected = &(-&id) + &self.eta_xi(i, i);
            r.push(format!("phi_{i}^2 = -Id + eta_{i}(x)xi_{i}"), sq == expected, "");
            r.push(format!("phi_{i} skew"), self.phi(i).is_skew(), "");
            r.push(
                format!("phi_{i}(xi_{i}) = 0"),
                self.phi(i).apply(self.xi(i)).is_zero(),
                "",
            );
            let im_perp = (1..=d).all(|a| self.phi(i).apply(&self.basis(a)).dot(self.xi(i)).is_zero());
            r.push(format!("Im(phi_{i}) orthogonal to xi_{i}"), im_perp, "");
            let mut pairing = true;
            for a in 1..=d {
                for b in 1..=d {
                    let lhs = self.fundamental(i).eval2(&self.basis(a), &self.basis(b));
                    let rhs = self.basis(a).dot(&self.phi(i).apply(&self.basis(b)));
                    pairing &= lhs == rhs;
                }
            }
            r.push(format!("Phi_{i}(X,Y) = g(X, phi_{i} Y)"), pairing, "");
        }
        for &(i, j, k) in &CYCLIC {
            let lhs = self.phi(i);
            let rhs = &self.phi(j).compose(self.phi(k)) - &self.eta_xi(k, j);
            r.push(format!("phi_{i} = phi_{j} phi_{k} - eta_{k}(x)xi_{j}"), *lhs == rhs, "");
            r.push(
                format!("phi_{i}(xi_{j}) = xi_{k}"),
                self.phi(i).apply(self.xi(j)) == *self.xi(k),
                "",
            );
            r.push(
                format!("phi_{j}(xi_{i}) = -xi_{k}"),
                self.phi(j).apply(self.xi(i)) == -self.xi(k),
                "",
            );
        }
        for p in 1..self.n {
            for i in 1..=3 {
                r.push(
                    format!("e_{} = phi_{i}(e_{})", 4 * p + i, 4 * p),
                    self.phi(i).apply(&self.basis(4 * p)) == self.basis(4 * p + i),
                    "",
                );
            }
        }
        if self.n >= 2 {
            let v = self.d_eta(1).eval2(&self.basis(4), &self.basis(5));
            r.push("d eta_1(e_4, e_5) = -2", v == Scalar::from_int(-2), v.to_string());
        }
        r
    }

    /// `y_j` as a complexified vector, `(e_{2j} + i e_{2j+1}) / √2`.
    pub fn y_vector(&self, j: usize) -> CVector {
        let s = Scalar::inv_sqrt2();
        let mut v = CVector::zero(self.dim());
        v.set(2 * j, s.clone());
        v.set(2 * j + 1, s * Scalar::i());
        v
    }

    /// `x_j` as a complexified vector, `(e_{2j} − i e_{2j+1}) / √2`.
    pub fn x_vector(&self, j: usize) -> CVector {
        self.y_vector(j).conj()
    }

    /// `ω = Σ_p y_{2p} ∧ y_{2p+1}` read as a complex 2-form.
    pub fn omega_as_form(&self) -> Form {
        let mut out = Form::zero(self.dim());
        for p in 1..self.n {
            out += &self.y_vector(2 * p).flat().wedge(&self.y_vector(2 * p + 1).flat());
        }
        out
    }

    /// `−½(Φ_2|_H + iΦ_3|_H) = ω` and `(ξ_2 + iξ_3)/√2 = y_1` as forms, plus the conjugate relation.
    pub fn omega_form_identity_check(&self) -> Result<Report> {
        if self.n < 2 {
            return Err(Error::InvalidParameter("needs n >= 2".into()));
        }
        let mut r = Report::new();
        let omega01 = &self.fundamental_h(2) + &self.fundamental_h(3).scale(&Scalar::i());
        let lhs = omega01.scale(&Scalar::from_ratio(-1, 2));
        r.push("-1/2 (Phi_2|H + i Phi_3|H) = omega", lhs == self.omega_as_form(), "");
        let y1 = (&self.xi(2).flat() + &self.xi(3).flat().scale(&Scalar::i())).scale(&Scalar::inv_sqrt2());
        r.push("(xi_2 + i xi_3)/sqrt2 = y_1", y1 == self.y_vector(1).flat(), "");
        let omega10 = &self.fundamental_h(2) - &self.fundamental_h(3).scale(&Scalar::i());
        r.push("conj(omega_01) = omega_10", omega01.conj() == omega10, "");
        Ok(r)
    }

    /// `¼(X⌟T)·ψ = ½ Σ_i ξ_i·φ_i(X)·ψ` for every horizontal `X` and probe `ψ`.
    pub fn horizontal_torsion_check(&self, probes: &[Spinor]) -> Result<Report> {
        if self.n < 2 {
            return Err(Error::InvalidParameter("needs n >= 2".into()));
        }
        let mut r = Report::new();
        let quarter = Scalar::from_ratio(1, 4);
        let half = Scalar::from_ratio(1, 2);
        for a in self.horizontal_indices() {
            let x = self.basis(a);
            let contracted = self.torsion.interior(&x).scale(&quarter);
            let mut mismatches = 0;
            for psi in probes {
                let lhs = cliff_form(&contracted, psi)?;
                let mut rhs = Spinor::zero(self.params);
                for i in 1..=3 {
                    rhs += &cliff_vec(self.xi(i), &cliff_vec(&self.phi(i).apply(&x), psi)?)?;
                }
                if lhs != rhs.scale(&half) {
                    mismatches += 1;
                }
            }
            r.push(
                format!("torsion e_{a}"),
                mismatches == 0,
                format!("{mismatches}/{} probes differ", probes.len()),
            );
        }
        Ok(r)
    }

    pub fn default_probes(&self) -> Vec<Spinor> {
        probe_spinors(self.params, 0x5a5a + self.n as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::Blade;

    #[test]
    fn quaternion_examples() {
        let f = build_frame(2).unwrap();
        assert_eq!(f.phi(1).apply(&f.basis(4)), f.basis(5));
        assert_eq!(f.phi(2).apply(&f.basis(4)), f.basis(6));
        assert_eq!(f.phi(3).apply(&f.basis(4)), f.basis(7));
        assert_eq!(f.phi(2).apply(&f.basis(5)), -&f.basis(7));
    }

    #[test]
    fn dimension_three() {
        let f = build_frame(1).unwrap();
        assert_eq!(f.dim(), 3);
        assert_eq!(f.phi(1).apply(&f.basis(2)), f.basis(3));
        assert_eq!(f.fundamental(1), &Form::basis(3, &[2, 3]).scale(&Scalar::from_int(-1)));
        assert!(f.phi0().is_zero());
        assert!(f.fundamental_h(1).is_zero());
        assert!(f.check_invariants().passed());
    }

    #[test]
    fn phi0_and_fundamental_forms() {
        let f = build_frame(2).unwrap();
        assert_eq!(f.phi0(), &(&Form::basis(7, &[4, 5]) - &Form::basis(7, &[6, 7])));
        let phi2h = &Form::basis(7, &[5, 7]) - &Form::basis(7, &[4, 6]);
        assert_eq!(f.fundamental_h(2), phi2h);
        let phi3h = -(&Form::basis(7, &[4, 7]) + &Form::basis(7, &[5, 6]));
        assert_eq!(f.fundamental_h(3), phi3h);
        assert_eq!(
            f.fundamental(1).coeff(Blade::from_indices(&[2, 3])),
            Scalar::from_int(-1)
        );
    }

    #[test]
    fn invariants_small() {
        for n in 1..=3 {
            let f = build_frame(n).unwrap();
            let r = f.check_invariants();
            assert!(r.passed(), "n = {n}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn omega_identity() {
        for n in 2..=3 {
            let f = build_frame(n).unwrap();
            assert!(f.omega_form_identity_check().unwrap().passed());
        }
        assert!(build_frame(1).unwrap().omega_form_identity_check().is_err());
    }

    #[test]
    fn torsion_crosscheck() {
        let f = build_frame(2).unwrap();
        let one = vec![Spinor::one(f.params())];
        assert!(f.horizontal_torsion_check(&one).unwrap().passed());
        assert!(f.horizontal_torsion_check(&f.default_probes()).unwrap().passed());
    }

    #[test]
    fn json_dump() {
        let f = build_frame(2).unwrap();
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(v["n"], 2);
        assert_eq!(v["phi"].as_array().unwrap().len(), 3);
        assert!(v["Phi0"].is_array());
    }
}
