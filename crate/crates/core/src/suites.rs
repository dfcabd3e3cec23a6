//! Verification suites grouping the checks of each module, shared by the
//! command-line driver, the benches and the integration tests.

use serde::Serialize;

use crate::bilinear::{d_eta_bilinear, eta_bilinear, recover_sasaki, squaring};
use crate::clifford::{cliff_form, cliff_vec, so_action_on_form, spin_lift, vector_form_commutator_rhs};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::frame::{build_frame, SasakiFrame};
use crate::isotropy::{
    anti_holomorphic_dims, invariant_product_check, invariant_spinor_summary, sp_basis, tau_span_check, FORM_MAX_N,
};
use crate::killing::{e_minus_closed_form, e_minus_kernel, killing_basis, xi_shift_relations, KillingConfig};
use crate::linalg::SparseVec;
use crate::probe::{monomial_spinors, Sampler};
use crate::render::{render_latex, render_plain};
use crate::report::Report;
use crate::spinor::{omega_power, y1_omega_power, SpinParams, Spinor};
use crate::tensor::{blades_of_grade, CVector, Endo, Form};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Clifford,
    Frame,
    Killing,
    EMinus,
    Bilinear,
    Isotropy,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Clifford,
        Suite::Frame,
        Suite::Killing,
        Suite::EMinus,
        Suite::Bilinear,
        Suite::Isotropy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Clifford => "clifford",
            Suite::Frame => "frame",
            Suite::Killing => "killing",
            Suite::EMinus => "eminus",
            Suite::Bilinear => "bilinear",
            Suite::Isotropy => "isotropy",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    /// Supported range of `n`.
    pub fn range(self) -> std::ops::RangeInclusive<usize> {
        match self {
            Suite::Clifford => 1..=5,
            Suite::Frame => 1..=6,
            Suite::Killing => 1..=5,
            Suite::EMinus => 1..=5,
            Suite::Bilinear => 2..=4,
            Suite::Isotropy => 2..=5,
        }
    }

    pub fn run(self, n: usize) -> Result<Report> {
        if !self.range().contains(&n) {
            return Err(Error::InvalidParameter(format!(
                "suite {} supports n in {}..={}, got {n}",
                self.name(),
                self.range().start(),
                self.range().end()
            )));
        }
        match self {
            Suite::Clifford => {
                let mut r = identity_checks(n, 100, 0xc11f + n as u64, n == 2)?;
                if n >= 2 {
                    r.extend(clifford_lemma_check(n)?);
                }
                Ok(r)
            }
            Suite::Frame => frame_suite(n),
            Suite::Killing => killing_suite(n),
            Suite::EMinus => e_minus_suite(n),
            Suite::Bilinear => bilinear_suite(n),
            Suite::Isotropy => isotropy_suite(n),
        }
    }
}

fn count_detail(bad: usize, total: usize) -> String {
    format!("{}/{total} cases hold", total - bad)
}

/// The identities for `Φ_0, Φ_i|_H` acting on `ω^k`.
pub fn clifford_lemma_check(n: usize) -> Result<Report> {
    let f = build_frame(n)?;
    let q = f.params();
    let nn = n as i64;
    let mut r = Report::new();
    let phis: Vec<Form> = (1..=3).map(|i| f.fundamental_h(i)).collect();
    let (mut b0, mut b1, mut b2, mut b3) = (0, 0, 0, 0);
    for k in 0..nn {
        let w = omega_power(q, k);
        let up = omega_power(q, k + 1);
        let down = omega_power(q, k - 1).scale(&Scalar::from_int(k * (nn - k)));
        if !cliff_form(f.phi0(), &w)?.is_zero() {
            b0 += 1;
        }
        let e1 = w.scale(&Scalar::gaussian(
            0.into_rational(),
            (2 * (2 * k - nn + 1)).into_rational(),
        ));
        if cliff_form(&phis[0], &w)? != e1 {
            b1 += 1;
        }
        let e2 = (&up - &down).scale(&Scalar::from_int(2));
        if cliff_form(&phis[1], &w)? != e2 {
            b2 += 1;
        }
        let e3 = (&up + &down).scale(&Scalar::gaussian(0.into_rational(), (-2).into_rational()));
        if cliff_form(&phis[2], &w)? != e3 {
            b3 += 1;
        }
    }
    let total = n;
    r.push(
        format!("Phi_0 . omega^k = 0 (n = {n})"),
        b0 == 0,
        count_detail(b0, total),
    );
    r.push(
        format!("Phi_1|H . omega^k = 2i(2k-n+1) omega^k (n = {n})"),
        b1 == 0,
        count_detail(b1, total),
    );
    r.push(
        format!("Phi_2|H . omega^k = 2(omega^(k+1) - k(n-k) omega^(k-1)) (n = {n})"),
        b2 == 0,
        count_detail(b2, total),
    );
    r.push(
        format!("Phi_3|H . omega^k = -2i(omega^(k+1) + k(n-k) omega^(k-1)) (n = {n})"),
        b3 == 0,
        count_detail(b3, total),
    );
    Ok(r)
}

trait IntoRational {
    fn into_rational(self) -> crate::field::Rational;
}

impl IntoRational for i64 {
    fn into_rational(self) -> crate::field::Rational {
        crate::field::rational(self, 1)
    }
}

/// Randomized and (optionally) exhaustive checks of the Clifford-algebra identities.
pub fn identity_checks(n: usize, cases: usize, seed: u64, exhaustive: bool) -> Result<Report> {
    let f = build_frame(n)?;
    let q = f.params();
    let d = q.dim();
    let mut s = Sampler::new(seed);
    let mut r = Report::new();
    let density = if q.spinor_dim() > 64 { 0.1 } else { 0.5 };

    let minus_two = Scalar::from_int(-2);
    let clifford_relation = |v: &CVector, w: &CVector, psi: &Spinor| -> Result<bool> {
        let lhs = cliff_vec(v, &cliff_vec(w, psi)?)? + cliff_vec(w, &cliff_vec(v, psi)?)?;
        Ok(lhs == psi.scale(&(v.dot(w) * &minus_two)))
    };
    let skew_adjoint = |x: &CVector, a: &Spinor, b: &Spinor| -> Result<bool> {
        Ok(cliff_vec(x, a)?.inner(b)? == -a.inner(&cliff_vec(x, b)?)?)
    };
    let real_part = |x: &CVector, y: &CVector, psi: &Spinor| -> Result<bool> {
        let lhs = cliff_vec(x, psi)?.inner(&cliff_vec(y, psi)?)?.re();
        Ok(lhs == x.dot(y) * psi.norm_sq())
    };
    let vector_form = |theta: &Form, x: &CVector, psi: &Spinor| -> Result<bool> {
        let lhs = &cliff_form(theta, &cliff_vec(x, psi)?)? - &cliff_vec(x, &cliff_form(theta, psi)?)?;
        Ok(lhs == cliff_form(&vector_form_commutator_rhs(theta, x), psi)?)
    };
    let lift_vector = |t: &Endo, x: &CVector, psi: &Spinor| -> Result<bool> {
        let l = spin_lift(t)?;
        let lhs = &l.apply(&cliff_vec(x, psi)?)? - &cliff_vec(x, &l.apply(psi)?)?;
        Ok(lhs == cliff_vec(&t.apply(x), psi)?)
    };
    let lift_form = |t: &Endo, theta: &Form, psi: &Spinor| -> Result<bool> {
        let l = spin_lift(t)?;
        let lhs = &l.apply(&cliff_form(theta, psi)?)? - &cliff_form(theta, &l.apply(psi)?)?;
        Ok(lhs == cliff_form(&so_action_on_form(t, theta)?, psi)?)
    };
    let lie_hom = |a: &Endo, b: &Endo, psi: &Spinor| -> Result<bool> {
        let (la, lb) = (spin_lift(a)?, spin_lift(b)?);
        let lhs = spin_lift(&a.commutator(b))?.apply(psi)?;
        let rhs = &la.apply(&lb.apply(psi)?)? - &lb.apply(&la.apply(psi)?)?;
        Ok(lhs == rhs)
    };
    let quarter = Scalar::from_ratio(1, 4);
    let half = Scalar::from_ratio(1, 2);
    let torsion = |x: &CVector, psi: &Spinor| -> Result<bool> {
        let lhs = cliff_form(&f.torsion().interior(x).scale(&quarter), psi)?;
        let mut rhs = Spinor::zero(q);
        for i in 1..=3 {
            rhs += &cliff_vec(f.xi(i), &cliff_vec(&f.phi(i).apply(x), psi)?)?;
        }
        Ok(lhs == rhs.scale(&half))
    };

    let tally = |name: &str, results: Vec<bool>, r: &mut Report| {
        let bad = results.iter().filter(|ok| !**ok).count();
        r.push(format!("{name} (n = {n})"), bad == 0, count_detail(bad, results.len()));
    };

    let mut res = Vec::new();
    for _ in 0..cases {
        let (v, w, psi) = (s.real_vector(d), s.real_vector(d), s.spinor(q, density));
        res.push(clifford_relation(&v, &w, &psi)?);
    }
    tally("random Clifford relation", res, &mut r);

    let mut res = Vec::new();
    for _ in 0..cases {
        let (x, a, b) = (s.real_vector(d), s.spinor(q, density), s.spinor(q, density));
        res.push(skew_adjoint(&x, &a, &b)?);
    }
    tally("random skew-adjointness", res, &mut r);

    let mut res = Vec::new();
    for _ in 0..cases {
        let (x, y, psi) = (s.real_vector(d), s.real_vector(d), s.spinor(q, density));
        res.push(real_part(&x, &y, &psi)?);
    }
    tally("random Re<X psi, Y psi> = g(X,Y)|psi|^2", res, &mut r);

    let mut res = Vec::new();
    for c in 0..cases {
        let k = c % 5;
        let theta = s.form(d, k.min(d), 3, true);
        let (x, psi) = (s.sparse_real_vector(d, 3), s.spinor(q, density));
        res.push(vector_form(&theta, &x, &psi)?);
    }
    tally("random theta.X - X.theta commutator", res, &mut r);

    let mut res = Vec::new();
    for _ in 0..cases {
        let (t, x, psi) = (s.skew_endo(d, 4), s.real_vector(d), s.spinor(q, density));
        res.push(lift_vector(&t, &x, &psi)?);
    }
    tally("random lift(T).X - X.lift(T) = T(X)", res, &mut r);

    let mut res = Vec::new();
    for c in 0..cases {
        let k = 1 + c % 3;
        let theta = s.form(d, k.min(d), 2, true);
        let (t, psi) = (s.skew_endo(d, 3), s.spinor(q, density));
        res.push(lift_form(&t, &theta, &psi)?);
    }
    tally("random lift(T).theta - theta.lift(T) = T(theta)", res, &mut r);

    let mut res = Vec::new();
    for _ in 0..cases {
        let (a, b, psi) = (s.skew_endo(d, 3), s.skew_endo(d, 3), s.spinor(q, density));
        res.push(lie_hom(&a, &b, &psi)?);
    }
    tally("random spin lift Lie homomorphism", res, &mut r);

    if n >= 2 {
        let mut res = Vec::new();
        for _ in 0..cases {
            let a = s.index(4, d);
            let mut x = s.sparse_real_vector(d, 2);
            for v in 1..=3 {
                x.set(v, Scalar::zero());
            }
            x.set(a, s.nonzero_scalar().re() + Scalar::one());
            res.push(torsion(&x, &s.spinor(q, density))?);
        }
        tally("random horizontal torsion cross-check", res, &mut r);
    }

    if n <= 3 {
        r.extend(d_eta_squaring_on_killing_pairs(&f)?);
    }

    if exhaustive {
        let monos = monomial_spinors(q);
        let basis: Vec<CVector> = (1..=d).map(|a| CVector::basis(d, a)).collect();
        let mut res = Vec::new();
        for v in &basis {
            for w in &basis {
                for psi in &monos {
                    res.push(clifford_relation(v, w, psi)?);
                }
            }
        }
        tally("exhaustive Clifford relation", res, &mut r);

        let mut res = Vec::new();
        for x in &basis {
            for a in &monos {
                for b in &monos {
                    res.push(skew_adjoint(x, a, b)?);
                }
            }
        }
        tally("exhaustive skew-adjointness", res, &mut r);

        let mut res = Vec::new();
        for x in &basis {
            for y in &basis {
                for psi in &monos {
                    res.push(real_part(x, y, psi)?);
                }
            }
        }
        tally("exhaustive Re<X psi, Y psi> = g(X,Y)|psi|^2", res, &mut r);

        let blades: Vec<Form> = (0..=3)
            .flat_map(|k| blades_of_grade(1, d, k))
            .map(|b| Form::from_terms(d, [(b, Scalar::one())]))
            .collect();
        let mut res = Vec::new();
        for theta in &blades {
            for x in &basis {
                for psi in &monos {
                    res.push(vector_form(theta, x, psi)?);
                }
            }
        }
        tally("exhaustive theta.X - X.theta commutator", res, &mut r);

        let skews: Vec<Endo> = blades_of_grade(1, d, 2)
            .into_iter()
            .map(|b| Endo::from_two_form(&Form::from_terms(d, [(b, Scalar::one())])).expect("2-form"))
            .collect();
        let mut res = Vec::new();
        for t in &skews {
            for x in &basis {
                for psi in &monos {
                    res.push(lift_vector(t, x, psi)?);
                }
            }
        }
        tally("exhaustive lift(T).X - X.lift(T) = T(X)", res, &mut r);

        let mut res = Vec::new();
        for t in &skews {
            for theta in blades.iter().filter(|b| b.degree().unwrap_or(0) <= 2) {
                for psi in &monos {
                    res.push(lift_form(t, theta, psi)?);
                }
            }
        }
        tally("exhaustive lift(T).theta - theta.lift(T) = T(theta)", res, &mut r);

        let mut res = Vec::new();
        for a in &skews {
            for b in &skews {
                for psi in &monos {
                    res.push(lie_hom(a, b, psi)?);
                }
            }
        }
        tally("exhaustive spin lift Lie homomorphism", res, &mut r);

        if n >= 2 {
            let mut res = Vec::new();
            for a in f.horizontal_indices() {
                for psi in &monos {
                    res.push(torsion(&f.basis(a), psi)?);
                }
            }
            tally("exhaustive horizontal torsion cross-check", res, &mut r);
        }
    }
    Ok(r)
}

/// `dη_{ψ1,ψ2} = 4λ ω_(2)` for all ordered pairs from the Killing basis.
pub fn d_eta_squaring_on_killing_pairs(frame: &SasakiFrame) -> Result<Report> {
    let lambda = Scalar::from_ratio(1, 2);
    let four_lambda = &lambda * &Scalar::from_int(4);
    let basis = killing_basis(frame.params());
    let mut bad = 0;
    let mut total = 0;
    for a in &basis {
        for b in &basis {
            total += 1;
            if d_eta_bilinear(&lambda, a, b)? != squaring(2, a, b)?.scale(&four_lambda) {
                bad += 1;
            }
        }
    }
    let mut r = Report::new();
    r.push(
        format!("d eta = 4 lambda omega_(2) on Killing pairs (n = {})", frame.n()),
        bad == 0,
        count_detail(bad, total),
    );
    Ok(r)
}

fn frame_suite(n: usize) -> Result<Report> {
    let f = build_frame(n)?;
    let mut r = f.check_invariants();
    if n >= 2 {
        r.extend(f.omega_form_identity_check()?);
        r.extend(f.horizontal_torsion_check(&f.default_probes())?);
    }
    Ok(r)
}

fn killing_suite(n: usize) -> Result<Report> {
    let cfg = KillingConfig::standard(n)?;
    let f = cfg.frame();
    let q = f.params();
    let mut r = Report::new();
    let kernel = cfg.killing_kernel();
    let expected_rank = if n == 1 { 2 } else { n + 1 };
    r.push(
        format!("Killing kernel rank = {expected_rank}"),
        kernel.rank() == expected_rank,
        format!("rank {}", kernel.rank()),
    );
    let basis = killing_basis(q);
    let listing: Vec<String> = basis.iter().map(render_plain).collect();
    r.push(
        "Killing kernel = span{psi_k}",
        kernel.span_eq(&basis),
        format!("basis {{{}}}", listing.join(", ")),
    );
    let mut ok = true;
    for psi in &basis {
        for a in f.horizontal_indices() {
            ok &= cfg.horizontal_killing_op(&f.basis(a), psi)?.is_zero();
        }
        for i in 1..=3 {
            ok &= cfg.vertical_killing_op(i, psi)?.is_zero();
        }
    }
    r.push("every psi_k solves all Killing equations", ok, "");
    for i in 1..=3 {
        let e = e_minus_kernel(f, i)?;
        let both = kernel.intersect(&e);
        let mut closed = true;
        for psi in both.spinors() {
            let prime = -cliff_vec(f.xi(i), &psi)?;
            closed &= kernel.contains(&prime);
        }
        r.push(
            format!("-xi_{i} maps Killing spinors in E{i} to Killing spinors"),
            closed,
            format!("{} spinors", both.rank()),
        );
    }
    Ok(r)
}

fn e_minus_suite(n: usize) -> Result<Report> {
    let f = build_frame(n)?;
    let q = f.params();
    let mut r = Report::new();
    let mut kernels = Vec::new();
    for i in 1..=3 {
        let k = e_minus_kernel(&f, i)?;
        r.push(
            format!("E{i} kernel rank = 2"),
            k.rank() == 2,
            format!("rank {}", k.rank()),
        );
        for which in 0..=1 {
            let psi = e_minus_closed_form(q, i, which)?;
            r.push(
                format!("Psi_{{E{i},{which}}} lies in E{i}"),
                !psi.is_zero() && k.contains(&psi),
                render_plain(&psi),
            );
        }
        let pair = [e_minus_closed_form(q, i, 0)?, e_minus_closed_form(q, i, 1)?];
        r.push(format!("E{i} = span of closed forms"), k.span_eq(&pair), "");
        kernels.push(k);
    }
    r.extend(xi_shift_relations(&f));
    if n == 2 {
        let one = Spinor::one(q);
        let y1w = y1_omega_power(q, 1).mul_i();
        let cases = [
            (0, 1, &one + &y1w),
            (0, 2, &one - &y1w),
            (1, 2, omega_power(q, 1) - Spinor::y(q, 1).mul_i()),
        ];
        for (a, b, expected) in cases {
            let meet = kernels[a].intersect(&kernels[b]);
            r.push(
                format!("E{} & E{} = span{{{}}}", a + 1, b + 1, render_plain(&expected)),
                meet.rank() == 1 && meet.span_eq(std::slice::from_ref(&expected)),
                format!("rank {}", meet.rank()),
            );
        }
    }
    if let Some(dim) = [7, 11, 15].into_iter().find(|&d| d == q.dim()) {
        for entry in table1(dim)? {
            r.push(
                format!("table entry Psi_{{E{},{}}} in kernel", entry.i, entry.which),
                entry.in_kernel,
                entry.latex.clone(),
            );
        }
    }
    Ok(r)
}

fn bilinear_suite(n: usize) -> Result<Report> {
    let f = build_frame(n)?;
    let q = f.params();
    let mut r = Report::new();
    let mut s = Sampler::new(0xb111 + n as u64);
    let density = if q.spinor_dim() > 64 { 0.1 } else { 0.5 };
    let (mut real_bad, mut anti_bad, mut one_bad) = (0, 0, 0);
    let cases = 100;
    for _ in 0..cases {
        let (a, b) = (s.spinor(q, density), s.spinor(q, density));
        let eta = eta_bilinear(&a, &b)?;
        if !eta.terms().all(|(_, c)| c.is_real()) {
            real_bad += 1;
        }
        if eta_bilinear(&b, &a)? != -&eta {
            anti_bad += 1;
        }
        if squaring(1, &a, &b)? != -&eta {
            one_bad += 1;
        }
    }
    r.push(
        "eta has real coefficients",
        real_bad == 0,
        count_detail(real_bad, cases),
    );
    r.push(
        "eta_{psi2,psi1} = -eta_{psi1,psi2}",
        anti_bad == 0,
        count_detail(anti_bad, cases),
    );
    r.push("omega_(1) = -eta", one_bad == 0, count_detail(one_bad, cases));
    if n <= 3 {
        r.extend(d_eta_squaring_on_killing_pairs(&f)?);
    }
    let mut xis: Vec<Vec<CVector>> = Vec::new();
    for i in 1..=3 {
        let kernel = e_minus_kernel(&f, i)?;
        let mut spinors = kernel.spinors();
        spinors.push(e_minus_closed_form(q, i, 0)?);
        spinors.push(e_minus_closed_form(q, i, 1)?);
        let mut found = Vec::new();
        for (idx, psi) in spinors.iter().enumerate() {
            let rep = recover_sasaki(&f, i, psi)?;
            let ok = rep.matched_index == Some(i) && rep.matches(&f, i) && rep.xi_kills_d_eta;
            r.push(
                format!("recover structure {i} from spinor {idx}"),
                ok,
                format!("normSq = {}, matched = {:?}", rep.norm_sq, rep.matched_index),
            );
            found.push(rep.xi);
        }
        xis.push(found);
    }
    let mut orth = true;
    for i in 0..3 {
        for j in i + 1..3 {
            for a in &xis[i] {
                for b in &xis[j] {
                    orth &= a.dot(b).is_zero();
                }
            }
        }
    }
    r.push(
        "recovered Reeb vectors of different structures are orthogonal",
        orth,
        "",
    );
    Ok(r)
}

fn isotropy_suite(n: usize) -> Result<Report> {
    let f = build_frame(n)?;
    let q = f.params();
    let alg = sp_basis(n)?;
    let mut r = alg.check_invariants(&f);
    let inv = alg.invariant_spinors();
    let (summary, span) = invariant_spinor_summary(&alg, &inv);
    r.push(
        format!("dim invariant spinors = {}", 2 * n),
        summary.matches,
        format!("rank {}", summary.rank),
    );
    r.push("invariant spinors = span{omega^k, y_1 omega^k}", span, "");
    let lifts = alg.lifts();
    let kills = |psi: &Spinor| lifts.iter().all(|l| l.apply(psi).map(|v| v.is_zero()).unwrap_or(false));
    r.push(
        "lifted generators annihilate omega and y_1",
        kills(&omega_power(q, 1)) && kills(&Spinor::y(q, 1)),
        "",
    );
    let dims = anti_holomorphic_dims(&inv)?;
    let graded_ok = dims.iter().all(|&(g, dm)| dm == usize::from(g % 2 == 0));
    let listing: Vec<String> = dims.iter().map(|(g, dm)| format!("{g}:{dm}")).collect();
    r.push("graded anti-holomorphic invariant dims", graded_ok, listing.join(" "));
    if n <= FORM_MAX_N {
        let h2 = alg.invariant_forms(2, true)?;
        let phis: Vec<SparseVec> = (1..=3).map(|i| SparseVec::from_form(&f.fundamental_h(i))).collect();
        r.push(
            "dim invariant horizontal 2-forms = 3",
            h2.rank() == 3,
            format!("rank {}", h2.rank()),
        );
        r.push("invariant horizontal 2-forms = span{Phi_i|H}", h2.span_eq(&phis), "");
    } else {
        r.push(
            "invariant horizontal 2-forms",
            true,
            format!("skipped: form kernels limited to n <= {FORM_MAX_N}"),
        );
    }
    if n <= 3 {
        for k in 0..=3 {
            r.extend(tau_span_check(&alg, &f, k)?);
        }
        r.extend(invariant_product_check(&alg, &f, &inv));
    }
    Ok(r)
}

/// One cell of the table of closed-form `E_i⁻` bases.
#[derive(Clone, Debug, Serialize)]
pub struct Table1Entry {
    pub i: usize,
    pub which: u8,
    pub latex: String,
    pub plain: String,
    #[serde(rename = "inKernel")]
    pub in_kernel: bool,
}

/// The six closed-form spinors in dimension `dim ∈ {7, 11, 15}`, checked against the kernels.
pub fn table1(dim: usize) -> Result<Vec<Table1Entry>> {
    if ![7, 11, 15].contains(&dim) {
        return Err(Error::InvalidParameter(format!(
            "table dimension must be 7, 11 or 15, got {dim}"
        )));
    }
    let n = (dim + 1) / 4;
    let f = build_frame(n)?;
    let q: SpinParams = f.params();
    let mut out = Vec::new();
    for which in 0..=1u8 {
        for i in 1..=3 {
            let kernel = e_minus_kernel(&f, i)?;
            let psi = e_minus_closed_form(q, i, which)?;
            out.push(Table1Entry {
                i,
                which,
                latex: render_latex(&psi).unwrap_or_else(|| psi.to_string()),
                plain: render_plain(&psi),
                in_kernel: kernel.contains(&psi),
            });
        }
    }
    Ok(out)
}

/// Dimensions of the spaces computed for parameter `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dims {
    pub n: usize,
    #[serde(rename = "spinorDim")]
    pub spinor_dim: usize,
    #[serde(rename = "invariantSpinorDim")]
    pub invariant_spinor_dim: usize,
    #[serde(rename = "killingDim")]
    pub killing_dim: usize,
    #[serde(rename = "eMinusRanks")]
    pub e_minus_ranks: [usize; 3],
    /// `None` when beyond the form-kernel limit.
    #[serde(rename = "horizontalInvariant2Forms")]
    pub horizontal_invariant_2_forms: Option<usize>,
}

pub fn dims(n: usize) -> Result<Dims> {
    if !(2..=5).contains(&n) {
        return Err(Error::InvalidParameter(format!("dims supports n in 2..=5, got {n}")));
    }
    let f = build_frame(n)?;
    let alg = sp_basis(n)?;
    let cfg = KillingConfig::standard(n)?;
    let mut e = [0; 3];
    for (i, slot) in e.iter_mut().enumerate() {
        *slot = e_minus_kernel(&f, i + 1)?.rank();
    }
    let forms = if n <= FORM_MAX_N {
        Some(alg.invariant_forms(2, true)?.rank())
    } else {
        None
    };
    Ok(Dims {
        n,
        spinor_dim: f.params().spinor_dim(),
        invariant_spinor_dim: alg.invariant_spinors().rank(),
        killing_dim: cfg.killing_kernel().rank(),
        e_minus_ranks: e,
        horizontal_invariant_2_forms: forms,
    })
}
