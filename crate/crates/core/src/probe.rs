//! Seeded random inputs and probe spinor sets for exact operator checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{rational, Scalar};
use crate::spinor::{Monomial, SpinParams, Spinor};
use crate::tensor::{Blade, CVector, Endo, Form};

/// Deterministic source of small exact random values.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn small(&mut self) -> i64 {
        self.rng.random_range(-3..=3)
    }

    /// A rational with numerator in `-3..=3` and denominator in `1..=2`.
    fn small_rational(&mut self) -> num_rational::BigRational {
        let num = self.small();
        let den = self.rng.random_range(1..=2);
        rational(num, den)
    }

    /// A random element of ℚ(i,√2) using all four components.
    pub fn scalar(&mut self) -> Scalar {
        Scalar::new(
            self.small_rational(),
            self.small_rational(),
            self.small_rational(),
            self.small_rational(),
        )
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let s = self.scalar();
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// A real scalar, i.e. an element of ℚ(√2).
    pub fn real_scalar(&mut self) -> Scalar {
        Scalar::new(
            self.small_rational(),
            rational(0, 1),
            self.small_rational(),
            rational(0, 1),
        )
    }

    /// A spinor with roughly `density` of all monomials present.
    pub fn spinor(&mut self, params: SpinParams, density: f64) -> Spinor {
        let mut out = Spinor::zero(params);
        for m in params.monomials() {
            if self.rng.random_bool(density) {
                let c = self.scalar();
                out.add_term(m, c);
            }
        }
        if out.is_zero() {
            out.add_term(Monomial::ONE, Scalar::one());
        }
        out
    }

    /// A spinor supported on at most `terms` random monomials.
    pub fn sparse_spinor(&mut self, params: SpinParams, terms: usize) -> Spinor {
        let mut out = Spinor::zero(params);
        for _ in 0..terms {
            let m = Monomial(self.rng.random_range(0..params.spinor_dim() as u32));
            let c = self.scalar();
            out.add_term(m, c);
        }
        out
    }

    pub fn real_vector(&mut self, dim: usize) -> CVector {
        CVector::from_coeffs((0..dim).map(|_| self.real_scalar()).collect())
    }

    /// A real vector with few nonzero coefficients.
    pub fn sparse_real_vector(&mut self, dim: usize, terms: usize) -> CVector {
        let mut v = CVector::zero(dim);
        for _ in 0..terms {
            let a = self.rng.random_range(1..=dim);
            let c = self.real_scalar();
            v.set(a, c);
        }
        v
    }

    /// A real skew endomorphism with `terms` random 2-form coefficients.
    pub fn skew_endo(&mut self, dim: usize, terms: usize) -> Endo {
        let theta = self.form(dim, 2, terms, true);
        Endo::from_two_form(&theta).expect("homogeneous 2-form")
    }

    /// A homogeneous form of degree `k` with up to `terms` random terms.
    pub fn form(&mut self, dim: usize, k: usize, terms: usize, real: bool) -> Form {
        let mut out = Form::zero(dim);
        if k > dim {
            return out;
        }
        for _ in 0..terms {
            let mut bits = 0u32;
            while (bits.count_ones() as usize) < k {
                bits |= 1 << self.rng.random_range(0..dim);
            }
            let c = if real { self.real_scalar() } else { self.scalar() };
            out.add_term(Blade(bits), c);
        }
        out
    }

    pub fn index(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.random_range(lo..=hi)
    }
}

/// All monomials of grade at most 3, followed by 5 dense random spinors.
pub fn probe_spinors(params: SpinParams, seed: u64) -> Vec<Spinor> {
    let mut out: Vec<Spinor> = params
        .monomials()
        .filter(|m| m.grade() <= 3)
        .map(|m| Spinor::monomial(params, m, Scalar::one()))
        .collect();
    let mut s = Sampler::new(seed);
    for _ in 0..5 {
        out.push(s.spinor(params, 0.5));
    }
    out
}

/// Every monomial as a unit spinor.
pub fn monomial_spinors(params: SpinParams) -> Vec<Spinor> {
    params
        .monomials()
        .map(|m| Spinor::monomial(params, m, Scalar::one()))
        .collect()
}
