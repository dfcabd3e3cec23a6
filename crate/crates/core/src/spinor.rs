//! The spinor module Λ•L′ spanned by wedge monomials in the anti-holomorphic
//! generators `y_1, …, y_{2n−1}`.
//!
//! Generator `y_1` is built from the Reeb directions `e_2, e_3`; generators
//! `y_{2p}` and `y_{2p+1}` belong to the horizontal quaternionic block `p`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use serde::ser::{SerializeSeq, SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{rational, Scalar};

/// Largest supported 3-Sasakian parameter; keeps every bitset within `u32`.
pub const MAX_N: usize = 8;

/// Dimension data for the tangent space of dimension `4n − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpinParams {
    n: usize,
}

impl SpinParams {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidParameter(format!("n = {n} outside 1..={MAX_N}")));
        }
        Ok(SpinParams { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Half of `dim + 1`, i.e. `2n`.
    pub fn m(&self) -> usize {
        2 * self.n
    }

    /// Number of `y`-generators, `2n − 1`.
    pub fn gen_count(&self) -> usize {
        2 * self.n - 1
    }

    pub fn spinor_dim(&self) -> usize {
        1 << self.gen_count()
    }

    /// Real dimension `4n − 1` of the tangent space.
    pub fn dim(&self) -> usize {
        4 * self.n - 1
    }

    pub fn check_same(&self, other: &SpinParams) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ParamMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Every monomial `y_S`, ordered by bitset value.
    pub fn monomials(&self) -> impl Iterator<Item = Monomial> {
        (0..self.spinor_dim() as u32).map(Monomial)
    }
}

/// A wedge monomial `y_{j1} ∧ … ∧ y_{jk}` with `j1 < … < jk`; generator `j` is bit `j − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(pub u32);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn generator(j: usize) -> Monomial {
        Monomial(1 << (j - 1))
    }

    pub fn from_indices(indices: &[usize]) -> Monomial {
        Monomial(indices.iter().fold(0, |acc, &j| acc | (1 << (j - 1))))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, j: usize) -> bool {
        self.0 & (1 << (j - 1)) != 0
    }

    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|b| self.0 & (1 << b) != 0).map(|b| b + 1).collect()
    }

    /// Parity of the number of generators in `self` with index below `j`.
    #[inline]
    pub fn sign_below(self, j: usize) -> bool {
        (self.0 & ((1u32 << (j - 1)) - 1)).count_ones() % 2 == 1
    }

    /// `y_j ∧ y_S` as `(negated, monomial)`, or `None` when `j ∈ S`.
    #[inline]
    pub fn wedge(self, j: usize) -> Option<(bool, Monomial)> {
        if self.contains(j) {
            None
        } else {
            Some((self.sign_below(j), Monomial(self.0 | (1 << (j - 1)))))
        }
    }

    /// `x_j ⌟ y_S` as `(negated, monomial)`, or `None` when `j ∉ S`.
    #[inline]
    pub fn contract(self, j: usize) -> Option<(bool, Monomial)> {
        if self.contains(j) {
            Some((self.sign_below(j), Monomial(self.0 & !(1 << (j - 1)))))
        } else {
            None
        }
    }
}

/// A finitely supported combination of monomials; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Spinor {
    params: SpinParams,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Spinor {
    pub fn zero(params: SpinParams) -> Self {
        Spinor {
            params,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(params: SpinParams) -> Self {
        Self::monomial(params, Monomial::ONE, Scalar::one())
    }

    pub fn monomial(params: SpinParams, m: Monomial, coeff: Scalar) -> Self {
        let mut s = Self::zero(params);
        s.add_term(m, coeff);
        s
    }

    /// The generator `y_j` as a spinor.
    pub fn y(params: SpinParams, j: usize) -> Self {
        Self::monomial(params, Monomial::generator(j), Scalar::one())
    }

    pub fn from_terms(params: SpinParams, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut s = Self::zero(params);
        for (m, c) in terms {
            s.add_term(m, c);
        }
        s
    }

    pub fn params(&self) -> SpinParams {
        self.params
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> Scalar {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn add_signed(&mut self, m: Monomial, negate: bool, coeff: &Scalar) {
        if negate {
            self.add_term(m, -coeff);
        } else {
            self.add_term(m, coeff.clone());
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.params);
        }
        Spinor {
            params: self.params,
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_i(&self) -> Self {
        Spinor {
            params: self.params,
            terms: self.terms.iter().map(|(m, x)| (*m, x.mul_i())).collect(),
        }
    }

    pub fn map_terms(&self, f: impl Fn(Monomial, &Scalar) -> Scalar) -> Self {
        Spinor::from_terms(self.params, self.terms.iter().map(|(m, c)| (*m, f(*m, c))))
    }

    fn check_generator(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.params.gen_count() {
            return Err(Error::IndexOutOfRange {
                what: "generator",
                index: j,
                max: self.params.gen_count(),
            });
        }
        Ok(())
    }

    /// Creation operator `y_j ∧ ·`.
    pub fn wedge(&self, j: usize) -> Result<Self> {
        self.check_generator(j)?;
        Ok(self.wedge_unchecked(j))
    }

    /// Annihilation operator `x_j ⌟ ·`.
    pub fn contract(&self, j: usize) -> Result<Self> {
        self.check_generator(j)?;
        Ok(self.contract_unchecked(j))
    }

    pub(crate) fn wedge_unchecked(&self, j: usize) -> Self {
        let mut out = Self::zero(self.params);
        for (m, c) in &self.terms {
            if let Some((neg, t)) = m.wedge(j) {
                out.terms.insert(t, if neg { -c } else { c.clone() });
            }
        }
        out
    }

    pub(crate) fn contract_unchecked(&self, j: usize) -> Self {
        let mut out = Self::zero(self.params);
        for (m, c) in &self.terms {
            if let Some((neg, t)) = m.contract(j) {
                out.terms.insert(t, if neg { -c } else { c.clone() });
            }
        }
        out
    }

    /// Exterior product `self ∧ other` in Λ•L′.
    pub fn exterior(&self, other: &Spinor) -> Result<Self> {
        self.params.check_same(&other.params)?;
        let mut out = Self::zero(self.params);
        for (m, c) in &self.terms {
            for (k, d) in &other.terms {
                if m.0 & k.0 != 0 {
                    continue;
                }
                // Move each generator of `m`, highest first, onto the front of `k`.
                let mut sign = false;
                let mut acc = *k;
                for j in m.indices().into_iter().rev() {
                    let (neg, t) = acc.wedge(j).expect("disjoint supports");
                    sign ^= neg;
                    acc = t;
                }
                out.add_signed(acc, sign, &(c * d));
            }
        }
        Ok(out)
    }

    /// Hermitian product: monomials are orthonormal, linear in `self`, conjugate-linear in `other`.
    pub fn inner(&self, other: &Spinor) -> Result<Scalar> {
        self.params.check_same(&other.params)?;
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            if let Some(d) = other.terms.get(m) {
                acc += c * d.conj();
            }
        }
        Ok(acc)
    }

    /// `⟨ψ, ψ⟩`.
    pub fn norm_sq(&self) -> Scalar {
        self.terms.values().map(|c| c * c.conj()).sum()
    }

    pub fn grade_part(&self, grade: usize) -> Self {
        self.filter(|m| m.grade() == grade)
    }

    pub fn even_part(&self) -> Self {
        self.filter(|m| m.grade() % 2 == 0)
    }

    pub fn odd_part(&self) -> Self {
        self.filter(|m| m.grade() % 2 == 1)
    }

    pub fn filter(&self, keep: impl Fn(Monomial) -> bool) -> Self {
        Spinor {
            params: self.params,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(**m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// `ω ∧ self` with `ω = Σ_p y_{2p} ∧ y_{2p+1}`.
    pub fn omega_wedge(&self) -> Self {
        let mut out = Self::zero(self.params);
        for p in 1..self.params.n() {
            out += &self.wedge_unchecked(2 * p + 1).wedge_unchecked(2 * p);
        }
        out
    }
}

/// `ω^k`, with `ω^{−1} = 0` and `ω^0 = 1`; vanishes for `k ≥ n`.
pub fn omega_power(params: SpinParams, k: i64) -> Spinor {
    if k < 0 {
        return Spinor::zero(params);
    }
    let mut acc = Spinor::one(params);
    for _ in 0..k {
        acc = acc.omega_wedge();
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// `y_1 ∧ ω^k`.
pub fn y1_omega_power(params: SpinParams, k: i64) -> Spinor {
    omega_power(params, k).wedge_unchecked(1)
}

/// The invariant Killing spinor `ψ_k = ω^{k+1} − i(k+1)·y_1 ∧ ω^k` for `−1 ≤ k ≤ n − 1`.
///
/// In dimension 3 the basis is `ψ_{−1} = 1`, `ψ_0 = y_1`.
pub fn psi_k(params: SpinParams, k: i64) -> Result<Spinor> {
    let n = params.n() as i64;
    if k < -1 || k > n - 1 {
        return Err(Error::InvalidParameter(format!(
            "psi_k needs -1 <= k <= {}, got {k}",
            n - 1
        )));
    }
    if n == 1 {
        return Ok(if k == -1 {
            Spinor::one(params)
        } else {
            Spinor::y(params, 1)
        });
    }
    let coeff = Scalar::gaussian(rational(0, 1), rational(-(k + 1), 1));
    Ok(omega_power(params, k + 1) + y1_omega_power(params, k).scale(&coeff))
}

impl AddAssign<&Spinor> for Spinor {
    fn add_assign(&mut self, rhs: &Spinor) {
        debug_assert_eq!(self.params, rhs.params);
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&Spinor> for Spinor {
    fn sub_assign(&mut self, rhs: &Spinor) {
        debug_assert_eq!(self.params, rhs.params);
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Add for Spinor {
    type Output = Spinor;
    fn add(mut self, rhs: Spinor) -> Spinor {
        self += &rhs;
        self
    }
}

impl Add<&Spinor> for &Spinor {
    type Output = Spinor;
    fn add(self, rhs: &Spinor) -> Spinor {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for Spinor {
    type Output = Spinor;
    fn sub(mut self, rhs: Spinor) -> Spinor {
        self -= &rhs;
        self
    }
}

impl Sub<&Spinor> for &Spinor {
    type Output = Spinor;
    fn sub(self, rhs: &Spinor) -> Spinor {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for Spinor {
    type Output = Spinor;
    fn neg(self) -> Spinor {
        Spinor {
            params: self.params,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &Spinor {
    type Output = Spinor;
    fn neg(self) -> Spinor {
        -(self.clone())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.indices().iter().map(|j| format!("y_{j}")).collect();
        write!(f, "{}", parts.join("∧"))
    }
}

impl fmt::Display for Spinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c})·{m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Spinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Spinor[n={}]({self})", self.params.n)
    }
}

struct Entry<'a> {
    m: Monomial,
    c: &'a Scalar,
}

impl Serialize for Entry<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Entry", 2)?;
        st.serialize_field("indices", &self.m.indices())?;
        st.serialize_field("scalar", self.c)?;
        st.end()
    }
}

impl Serialize for Spinor {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&Entry { m: *m, c })?;
        }
        seq.end()
    }
}
