//! Complexified vectors, exterior forms and endomorphisms over the adapted
//! orthonormal basis `e_1, …, e_d` of the tangent space.
//!
//! The metric is the standard Euclidean one in this basis, so `♭` and `♯`
//! act as the identity on coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use serde::ser::{SerializeSeq, SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Scalar;

/// A vector `Σ v_a e_a` with coefficients in ℚ(i,√2).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CVector {
    coeffs: Vec<Scalar>,
}

impl CVector {
    pub fn zero(dim: usize) -> Self {
        CVector {
            coeffs: vec![Scalar::zero(); dim],
        }
    }

    /// The basis vector `e_a`, 1-based.
    pub fn basis(dim: usize, a: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coeffs[a - 1] = Scalar::one();
        v
    }

    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        CVector { coeffs }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        CVector {
            coeffs: values.iter().map(|&v| Scalar::from_int(v)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient on `e_a`, 1-based.
    pub fn get(&self, a: usize) -> &Scalar {
        &self.coeffs[a - 1]
    }

    pub fn set(&mut self, a: usize, value: Scalar) {
        self.coeffs[a - 1] = value;
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Nonzero `(a, v_a)` pairs with 1-based indices.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k + 1, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_real)
    }

    /// Complex-bilinear extension of the metric.
    pub fn dot(&self, other: &CVector) -> Scalar {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        CVector {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        CVector {
            coeffs: self.coeffs.iter().map(Scalar::conj).collect(),
        }
    }

    /// The metric dual 1-form.
    pub fn flat(&self) -> Form {
        Form::from_terms(self.dim(), self.nonzero().map(|(a, c)| (Blade::basis(a), c.clone())))
    }
}

impl Add<&CVector> for &CVector {
    type Output = CVector;
    fn add(self, rhs: &CVector) -> CVector {
        CVector {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&CVector> for &CVector {
    type Output = CVector;
    fn sub(self, rhs: &CVector) -> CVector {
        CVector {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CVector {
    type Output = CVector;
    fn neg(self) -> CVector {
        CVector {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Serialize for CVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

/// A basis monomial `e_{a1} ∧ … ∧ e_{ak}` with `a1 < … < ak`; index `a` is bit `a − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Blade(pub u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn basis(a: usize) -> Blade {
        Blade(1 << (a - 1))
    }

    pub fn from_indices(indices: &[usize]) -> Blade {
        Blade(indices.iter().fold(0, |acc, &a| acc | (1 << (a - 1))))
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, a: usize) -> bool {
        self.0 & (1 << (a - 1)) != 0
    }

    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|b| self.0 & (1 << b) != 0).map(|b| b + 1).collect()
    }

    /// Every index lies in `lo..=hi`.
    pub fn within(self, lo: usize, hi: usize) -> bool {
        self.indices().iter().all(|&a| lo <= a && a <= hi)
    }

    /// `self ∧ other` as `(negated, blade)`, or `None` when the supports meet.
    pub fn wedge(self, other: Blade) -> Option<(bool, Blade)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut swaps = 0;
        for b in other.indices() {
            swaps += (self.0 >> b).count_ones();
        }
        Some((swaps % 2 == 1, Blade(self.0 | other.0)))
    }

    /// Parity of the number of indices in `self` below `a`.
    fn sign_below(self, a: usize) -> bool {
        (self.0 & ((1u32 << (a - 1)) - 1)).count_ones() % 2 == 1
    }
}

/// All blades of grade `k` with indices in `lo..=hi`, ordered by bitset value.
pub fn blades_of_grade(lo: usize, hi: usize, k: usize) -> Vec<Blade> {
    let mut out = Vec::new();
    fn rec(start: usize, hi: usize, left: usize, acc: u32, out: &mut Vec<Blade>) {
        if left == 0 {
            out.push(Blade(acc));
            return;
        }
        for a in start..=hi {
            if hi + 1 - a < left {
                break;
            }
            rec(a + 1, hi, left - 1, acc | (1 << (a - 1)), out);
        }
    }
    if lo <= hi + 1 || k == 0 {
        rec(lo, hi, k, 0, &mut out);
    }
    out.sort();
    out
}

/// An exterior form `Σ θ_B e_B`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Form {
    dim: usize,
    terms: BTreeMap<Blade, Scalar>,
}

impl Form {
    pub fn zero(dim: usize) -> Self {
        Form {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(dim: usize, c: Scalar) -> Self {
        Self::from_terms(dim, [(Blade::SCALAR, c)])
    }

    /// `e_{a1} ∧ … ∧ e_{ak}` for indices in any order.
    pub fn basis(dim: usize, indices: &[usize]) -> Self {
        let mut acc = Form::scalar(dim, Scalar::one());
        for &a in indices {
            acc = acc.wedge(&Form::from_terms(dim, [(Blade::basis(a), Scalar::one())]));
        }
        acc
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Blade, Scalar)>) -> Self {
        let mut f = Form::zero(dim);
        for (b, c) in terms {
            f.add_term(b, c);
        }
        f
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common grade of all terms, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<usize> {
        let mut grades = self.terms.keys().map(|b| b.grade());
        let first = grades.next()?;
        grades.all(|g| g == first).then_some(first)
    }

    pub fn coeff(&self, b: Blade) -> Scalar {
        self.terms.get(&b).cloned().unwrap_or_default()
    }

    /// Coefficient on `e_a ∧ e_b` for `a < b`, with the usual sign for `a > b`.
    pub fn coeff2(&self, a: usize, b: usize) -> Scalar {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => self.coeff(Blade::from_indices(&[a, b])),
            std::cmp::Ordering::Greater => -self.coeff(Blade::from_indices(&[a, b])),
            std::cmp::Ordering::Equal => Scalar::zero(),
        }
    }

    pub fn add_term(&mut self, b: Blade, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Form::zero(self.dim);
        }
        Form {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, x)| (*b, x * c)).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        Form {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, x)| (*b, x.conj())).collect(),
        }
    }

    pub fn filter(&self, keep: impl Fn(Blade) -> bool) -> Self {
        Form {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(**b))
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    pub fn grade_part(&self, k: usize) -> Self {
        self.filter(|b| b.grade() == k)
    }

    pub fn wedge(&self, other: &Form) -> Form {
        let mut out = Form::zero(self.dim);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some((neg, c)) = a.wedge(*b) {
                    let v = x * y;
                    out.add_term(c, if neg { -v } else { v });
                }
            }
        }
        out
    }

    /// `self^k` under the wedge product.
    pub fn wedge_power(&self, k: usize) -> Form {
        let mut acc = Form::scalar(self.dim, Scalar::one());
        for _ in 0..k {
            acc = acc.wedge(self);
        }
        acc
    }

    /// Interior product `X ⌟ self`.
    pub fn interior(&self, x: &CVector) -> Form {
        let mut out = Form::zero(self.dim);
        for (b, c) in &self.terms {
            for a in b.indices() {
                let xa = x.get(a);
                if xa.is_zero() {
                    continue;
                }
                let rest = Blade(b.0 & !(1 << (a - 1)));
                let v = c * xa;
                out.add_term(rest, if b.sign_below(a) { -v } else { v });
            }
        }
        out
    }

    /// Evaluate a 2-form on a pair of vectors.
    pub fn eval2(&self, x: &CVector, y: &CVector) -> Scalar {
        let inner = self.interior(x).interior(y);
        inner.coeff(Blade::SCALAR)
    }

    /// Read off a 1-form as a vector via `♯`.
    pub fn sharp(&self) -> CVector {
        let mut v = CVector::zero(self.dim);
        for (b, c) in &self.terms {
            if b.grade() == 1 {
                v.set(b.indices()[0], c.clone());
            }
        }
        v
    }
}

impl AddAssign<&Form> for Form {
    fn add_assign(&mut self, rhs: &Form) {
        for (b, c) in &rhs.terms {
            self.add_term(*b, c.clone());
        }
    }
}

impl SubAssign<&Form> for Form {
    fn sub_assign(&mut self, rhs: &Form) {
        for (b, c) in &rhs.terms {
            self.add_term(*b, -c);
        }
    }
}

impl Add<&Form> for &Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Form> for &Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for Form {
    type Output = Form;
    fn add(mut self, rhs: Form) -> Form {
        self += &rhs;
        self
    }
}

impl Sub for Form {
    type Output = Form;
    fn sub(mut self, rhs: Form) -> Form {
        self -= &rhs;
        self
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        self.scale(&-Scalar::one())
    }
}

impl Neg for Form {
    type Output = Form;
    fn neg(self) -> Form {
        -&self
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, c)| {
                if b.0 == 0 {
                    format!("({c})")
                } else {
                    let names: Vec<String> = b.indices().iter().map(|a| format!("e{a}")).collect();
                    format!("({c})·{}", names.join("∧"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form[{}]({self})", self.dim)
    }
}

struct FormEntry<'a> {
    b: Blade,
    c: &'a Scalar,
}

impl Serialize for FormEntry<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("FormEntry", 2)?;
        st.serialize_field("indices", &self.b.indices())?;
        st.serialize_field("scalar", self.c)?;
        st.end()
    }
}

impl Serialize for Form {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (b, c) in &self.terms {
            seq.serialize_element(&FormEntry { b: *b, c })?;
        }
        seq.end()
    }
}

/// A `d × d` matrix; column `a` holds the image of `e_a`.
#[derive(Clone, PartialEq, Eq)]
pub struct Endo {
    rows: Vec<Vec<Scalar>>,
}

impl Endo {
    pub fn zero(dim: usize) -> Self {
        Endo {
            rows: vec![vec![Scalar::zero(); dim]; dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for a in 1..=dim {
            m.set(a, a, Scalar::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Entry in row `r`, column `c`, both 1-based.
    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.rows[r - 1][c - 1]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.rows[r - 1][c - 1] = v;
    }

    /// Declare `e_a ↦ sign·e_b`.
    pub fn map_basis(&mut self, a: usize, b: usize, sign: i64) {
        self.set(b, a, Scalar::from_int(sign));
    }

    pub fn column(&self, c: usize) -> CVector {
        CVector::from_coeffs(self.rows.iter().map(|row| row[c - 1].clone()).collect())
    }

    pub fn apply(&self, v: &CVector) -> CVector {
        let mut out = CVector::zero(self.dim());
        for (c, x) in v.nonzero() {
            for r in 1..=self.dim() {
                let m = self.get(r, c);
                if !m.is_zero() {
                    let cur = out.get(r) + &(m * x);
                    out.set(r, cur);
                }
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Endo) -> Endo {
        let d = self.dim();
        let mut out = Endo::zero(d);
        for r in 0..d {
            for k in 0..d {
                let a = &self.rows[r][k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let b = &other.rows[k][c];
                    if !b.is_zero() {
                        out.rows[r][c] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &Endo) -> Endo {
        &self.compose(other) - &other.compose(self)
    }

    pub fn transpose(&self) -> Endo {
        let d = self.dim();
        let mut out = Endo::zero(d);
        for r in 0..d {
            for c in 0..d {
                out.rows[c][r] = self.rows[r][c].clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Scalar::is_zero)
    }

    pub fn is_skew(&self) -> bool {
        (&self.transpose() + self).is_zero()
    }

    pub fn scale(&self, c: &Scalar) -> Endo {
        Endo {
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|x| x * c).collect())
                .collect(),
        }
    }

    /// `v ⊗ w♭`, i.e. `X ↦ g(w, X)·v`.
    pub fn outer(v: &CVector, w: &CVector) -> Endo {
        let d = v.dim();
        let mut out = Endo::zero(d);
        for r in 1..=d {
            for c in 1..=d {
                let x = v.get(r) * w.get(c);
                out.set(r, c, x);
            }
        }
        out
    }

    /// The skew map `Y ↦ Y ⌟ θ` of a 2-form.
    pub fn from_two_form(theta: &Form) -> Result<Endo> {
        let d = theta.dim();
        let mut out = Endo::zero(d);
        for (b, c) in theta.terms() {
            let idx = b.indices();
            if idx.len() != 2 {
                return Err(Error::InvalidParameter("expected a homogeneous 2-form".into()));
            }
            let (a, b) = (idx[0], idx[1]);
            out.set(b, a, c.clone());
            out.set(a, b, -c);
        }
        Ok(out)
    }

    /// Inverse of [`Endo::from_two_form`]; rejects non-skew input.
    pub fn to_two_form(&self) -> Result<Form> {
        if !self.is_skew() {
            return Err(Error::NotSkew);
        }
        let d = self.dim();
        let mut out = Form::zero(d);
        for a in 1..=d {
            for b in a + 1..=d {
                out.add_term(Blade::from_indices(&[a, b]), self.get(b, a).clone());
            }
        }
        Ok(out)
    }

    /// The bilinear form `(X, Y) ↦ g(X, self(Y))` as a 2-form; meaningful when skew.
    pub fn fundamental_form(&self) -> Form {
        let d = self.dim();
        let mut out = Form::zero(d);
        for a in 1..=d {
            for b in a + 1..=d {
                out.add_term(Blade::from_indices(&[a, b]), self.get(a, b).clone());
            }
        }
        out
    }

    /// Entries as a flat row-major list, for span computations over matrices.
    pub fn entries(&self) -> impl Iterator<Item = &Scalar> {
        self.rows.iter().flatten()
    }
}

impl Add<&Endo> for &Endo {
    type Output = Endo;
    fn add(self, rhs: &Endo) -> Endo {
        Endo {
            rows: self
                .rows
                .iter()
                .zip(&rhs.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        }
    }
}

impl Sub<&Endo> for &Endo {
    type Output = Endo;
    fn sub(self, rhs: &Endo) -> Endo {
        Endo {
            rows: self
                .rows
                .iter()
                .zip(&rhs.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
                .collect(),
        }
    }
}

impl Neg for &Endo {
    type Output = Endo;
    fn neg(self) -> Endo {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Debug for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Endo[{}]", self.dim())?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for Endo {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}
