//! The dense oracle must reject wrong answers, and the library must agree
//! with it on random inputs.

#![allow(clippy::needless_range_loop)]

mod common;

use common as o;
use proptest::prelude::*;
use sasaki_core::{cliff_form, cliff_vec, rational, spin_lift, CVector, Endo, Form, Scalar};

#[test]
fn oracle_rejects_non_killing() {
    let n = 3;
    let y2 = o::wedge(2, &o::unit(n));
    assert!(!o::is_zero(&o::killing_v(1, &y2)) || (4..=o::dim(n)).any(|x| !o::is_zero(&o::killing_h(n, x, &y2))));
    // wrong sign in front of y_1∧ω^k
    let wrong = o::add(&o::omega_power(n, 1), &o::scale(o::I, &o::y1_omega_power(n, 0)));
    assert!((4..=o::dim(n)).any(|x| !o::is_zero(&o::killing_h(n, x, &wrong))));
    for k in -1..n as i64 {
        assert!(!o::is_zero(&o::psi_k(n, k)));
    }
}

#[test]
fn oracle_e_minus_separates_structures() {
    let n = 2;
    let e1 = o::unit(n);
    let e2 = o::sub(&o::omega_power(n, 1), &o::scale(o::I, &o::y1_omega_power(n, 0)));
    assert!((1..=o::dim(n)).all(|x| o::is_zero(&o::e_minus(n, 1, x, &e1))));
    assert!((1..=o::dim(n)).any(|x| !o::is_zero(&o::e_minus(n, 2, x, &e1))));
    assert!((1..=o::dim(n)).all(|x| o::is_zero(&o::e_minus(n, 2, x, &e2))));
    assert!((1..=o::dim(n)).any(|x| !o::is_zero(&o::e_minus(n, 1, x, &e2))));
}

#[test]
fn oracle_frame_is_quaternionic() {
    for n in 1..=4 {
        let d = o::dim(n);
        let mul = |a: &Vec<Vec<i128>>, b: &Vec<Vec<i128>>| -> Vec<Vec<i128>> {
            let mut m = vec![vec![0; d + 1]; d + 1];
            for r in 1..=d {
                for c in 1..=d {
                    m[r][c] = (1..=d).map(|t| a[r][t] * b[t][c]).sum();
                }
            }
            m
        };
        let (p1, p2, p3) = (o::phi_matrix(n, 1), o::phi_matrix(n, 2), o::phi_matrix(n, 3));
        let p12 = mul(&p1, &p2);
        for r in 4..=d {
            for c in 4..=d {
                // horizontally φ_1φ_2 = φ_3 and φ_1² = −1
                assert_eq!(p12[r][c], p3[r][c]);
                assert_eq!(mul(&p1, &p1)[r][c], if r == c { -1 } else { 0 });
            }
        }
    }
}

#[test]
fn oracle_generators_do_not_fix_everything() {
    let n = 3;
    let gens = o::sp_generators(n);
    assert_eq!(gens.len(), 10);
    let y2 = o::wedge(2, &o::unit(n));
    assert!(gens.iter().any(|g| !o::is_zero(&o::lift2(g, &y2))));
    for g in &gens {
        for a in 1..=o::dim(n) {
            for b in 1..=o::dim(n) {
                assert_eq!(g[a][b], -g[b][a], "generators are skew");
            }
        }
    }
}

#[test]
fn latex_parser_round_trip() {
    let s = o::parse_latex(3, "1+iy_1\\wedge\\omega-\\frac{1}{2}\\omega^2");
    assert_eq!(s.denom, 2);
    let expected = o::add(
        &o::sub(&o::scale((2, 0), &o::unit(3)), &o::omega_power(3, 2)),
        &o::scale((0, 2), &o::y1_omega_power(3, 1)),
    );
    assert_eq!(s.v, expected);
}

fn arb_dense(n: usize) -> impl Strategy<Value = o::Dense> {
    proptest::collection::vec((-3i128..=3, -3i128..=3), o::size(n))
}

fn arb_real_vec(d: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-3i64..=3, d)
}

proptest! {
    #[test]
    fn vector_action_matches_oracle(v in arb_dense(3), x in arb_real_vec(11)) {
        let n = 3;
        let psi = o::from_dense(n, &v, 1);
        let cx = CVector::from_ints(&x);
        let lib = cliff_vec(&cx, &psi).unwrap();
        let xs: Vec<(usize, o::G)> = x.iter().enumerate().map(|(a, c)| (a + 1, (*c as i128, 0))).collect();
        prop_assert_eq!(o::to_dense(&lib, 1).unwrap(), o::vec_act(&xs, &v));
    }

    #[test]
    fn two_form_action_matches_oracle(
        v in arb_dense(2),
        entries in proptest::collection::vec((1usize..=7, 1usize..=7, -2i64..=2), 1..6),
    ) {
        let n = 2;
        let psi = o::from_dense(n, &v, 1);
        let mut theta = Form::zero(7);
        let mut pairs = Vec::new();
        for (a, b, c) in entries {
            if a < b {
                theta.add_term(sasaki_core::Blade::from_indices(&[a, b]), Scalar::from_int(c));
                pairs.push((a, b, (c as i128, 0)));
            }
        }
        let lib = cliff_form(&theta, &psi).unwrap();
        prop_assert_eq!(o::to_dense(&lib, 1).unwrap(), o::two_form_act(&pairs, &v));
    }

    #[test]
    fn spin_lift_matches_oracle(v in arb_dense(2), g in 0usize..3) {
        let n = 2;
        let gens = o::sp_generators(n);
        let mat = &gens[g];
        let d = o::dim(n);
        let mut t = Endo::zero(d);
        for r in 1..=d {
            for c in 1..=d {
                if mat[r][c] != 0 {
                    t.set(r, c, Scalar::from_int(mat[r][c] as i64));
                }
            }
        }
        let psi = o::from_dense(n, &v, 1);
        let lib = spin_lift(&t).unwrap().apply(&psi).unwrap().scale(&Scalar::from_int(2));
        prop_assert_eq!(o::to_dense(&lib, 1).unwrap(), o::lift2(mat, &v));
    }

    #[test]
    fn hermitian_real_part_matches_oracle(v in arb_dense(2), w in arb_dense(2)) {
        let (a, b) = (o::from_dense(2, &v, 1), o::from_dense(2, &w, 1));
        let re = a.inner(&b).unwrap().re();
        prop_assert_eq!(re, Scalar::gaussian(rational(o::inner_re(&v, &w) as i64, 1), rational(0, 1)));
    }
}
