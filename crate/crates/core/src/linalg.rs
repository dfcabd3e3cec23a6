//! Exact sparse linear algebra over ℚ(i,√2): echelon reduction, span
//! membership and joint kernels of families of linear operators.
//!
//! Coordinates are plain `usize` indices; spinors use the monomial bitset and
//! forms use the blade bitset, so no re-indexing is needed.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::field::Scalar;
use crate::spinor::{Monomial, SpinParams, Spinor};
use crate::tensor::{Blade, Form};

/// Sorted `(index, value)` pairs with distinct indices and no zero values.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseVec(Vec<(usize, Scalar)>);

impl SparseVec {
    pub fn new() -> Self {
        SparseVec(Vec::new())
    }

    pub fn unit(index: usize) -> Self {
        SparseVec(vec![(index, Scalar::one())])
    }

    /// Build from pairs in any order, summing repeated indices.
    pub fn from_pairs(mut pairs: Vec<(usize, Scalar)>) -> Self {
        pairs.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(pairs.len());
        for (i, c) in pairs {
            match out.last_mut() {
                Some((j, d)) if *j == i => *d += &c,
                _ => out.push((i, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        SparseVec(out)
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, index: usize) -> Scalar {
        match self.0.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(k) => self.0[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.0.first()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec(self.0.iter().map(|(i, x)| (*i, x * c)).collect())
    }

    /// `self + c·other`.
    pub fn axpy(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, c * y));
                        b.next();
                    } else {
                        let v = x + &(c * y);
                        if !v.is_zero() {
                            out.push((*i, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, c * y));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec(out)
    }

    pub fn from_spinor(psi: &Spinor) -> Self {
        SparseVec(psi.terms().map(|(m, c)| (m.bits() as usize, c.clone())).collect())
    }

    pub fn to_spinor(&self, params: SpinParams) -> Spinor {
        Spinor::from_terms(params, self.0.iter().map(|(i, c)| (Monomial(*i as u32), c.clone())))
    }

    pub fn from_form(theta: &Form) -> Self {
        SparseVec(theta.terms().map(|(b, c)| (b.0 as usize, c.clone())).collect())
    }

    pub fn to_form(&self, dim: usize) -> Form {
        Form::from_terms(dim, self.0.iter().map(|(i, c)| (Blade(*i as u32), c.clone())))
    }

    fn normalized(self) -> SparseVec {
        match self.0.first() {
            Some((_, lead)) if !lead.is_one() => {
                let inv = lead.inv().expect("leading entry is nonzero");
                self.scale(&inv)
            }
            _ => self,
        }
    }
}

/// Reduce `v` against monic pivot rows keyed by their leading index.
fn reduce_against(pivots: &BTreeMap<usize, SparseVec>, v: &SparseVec) -> SparseVec {
    let mut v = v.clone();
    let mut floor = 0usize;
    loop {
        let hit =
            v.0.iter()
                .find(|(i, _)| *i >= floor && pivots.contains_key(i))
                .map(|(i, c)| (*i, c.clone()));
        match hit {
            Some((i, c)) => {
                v = v.axpy(&-c, &pivots[&i]);
                floor = i + 1;
            }
            None => return v,
        }
    }
}

/// Incremental row echelon form; each stored row is monic at its lowest index.
#[derive(Clone, Debug, Default)]
pub struct RowReducer {
    pivots: BTreeMap<usize, SparseVec>,
}

impl RowReducer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<'a>(vs: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut r = Self::new();
        for v in vs {
            r.insert(v);
        }
        r
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        reduce_against(&self.pivots, v)
    }

    /// Insert `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        match r.leading() {
            None => false,
            Some(&(i, _)) => {
                self.pivots.insert(i, r.normalized());
                true
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// The reduced row echelon basis, ordered by pivot index.
    pub fn rref(&self) -> Vec<SparseVec> {
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (&i, row) in self.pivots.iter().rev() {
            let tail = SparseVec(row.0[1..].to_vec());
            let mut reduced = reduce_against(&done, &tail);
            reduced.0.insert(0, (i, Scalar::one()));
            done.insert(i, reduced);
        }
        done.into_values().collect()
    }
}

/// A subspace presented by its canonical reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct KernelBasis {
    vectors: Vec<SparseVec>,
}

impl KernelBasis {
    pub fn span_of<'a>(vs: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        KernelBasis {
            vectors: RowReducer::from_vectors(vs).rref(),
        }
    }

    pub fn vectors(&self) -> &[SparseVec] {
        &self.vectors
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        RowReducer::from_vectors(&self.vectors).contains(v)
    }

    /// Equality of spans by mutual membership.
    pub fn span_eq(&self, others: &[SparseVec]) -> bool {
        span_eq(&self.vectors, others)
    }

    pub fn intersect(&self, other: &KernelBasis) -> KernelBasis {
        intersect(&self.vectors, &other.vectors)
    }
}

/// `span(a) == span(b)` via reduction in both directions.
pub fn span_eq(a: &[SparseVec], b: &[SparseVec]) -> bool {
    let ra = RowReducer::from_vectors(a);
    let rb = RowReducer::from_vectors(b);
    a.iter().all(|v| rb.contains(v)) && b.iter().all(|v| ra.contains(v))
}

pub fn rank_of(vs: &[SparseVec]) -> usize {
    RowReducer::from_vectors(vs).rank()
}

/// Combinations `Σ c_j k_j` of the independent vectors `k_j` whose images `Σ c_j w_j` vanish.
///
/// Each pair is `(w_j, k_j)`; the pair table is reduced on the image side while
/// the same row operations are replayed on the source side.
fn null_combinations(pairs: Vec<(SparseVec, SparseVec)>) -> Vec<SparseVec> {
    let mut pivots: BTreeMap<usize, (SparseVec, SparseVec)> = BTreeMap::new();
    let mut kernel = Vec::new();
    for (w, k) in pairs {
        let (mut w, mut k) = (w, k);
        let mut floor = 0usize;
        loop {
            let hit =
                w.0.iter()
                    .find(|(i, _)| *i >= floor && pivots.contains_key(i))
                    .map(|(i, c)| (*i, c.clone()));
            match hit {
                Some((i, c)) => {
                    let (pw, pk) = &pivots[&i];
                    let neg = -c;
                    w = w.axpy(&neg, pw);
                    k = k.axpy(&neg, pk);
                    floor = i + 1;
                }
                None => break,
            }
        }
        match w.leading() {
            None => kernel.push(k),
            Some((i, lead)) => {
                let i = *i;
                let inv = lead.inv().expect("leading entry is nonzero");
                pivots.insert(i, (w.scale(&inv), k.scale(&inv)));
            }
        }
    }
    kernel
}

/// A linear operator on coordinate vectors.
pub type LinearOp<'a> = Box<dyn Fn(&SparseVec) -> SparseVec + Sync + 'a>;

/// The joint kernel of `ops` restricted to `span(start)`, where `start` is independent.
///
/// The candidate subspace shrinks one operator at a time, so operators that
/// cut it down cheaply should come first.
pub fn joint_kernel(start: Vec<SparseVec>, ops: &[LinearOp<'_>]) -> KernelBasis {
    let mut basis = start;
    for op in ops {
        if basis.is_empty() {
            break;
        }
        let pairs: Vec<(SparseVec, SparseVec)> = basis.into_par_iter().map(|k| (op(&k), k)).collect();
        basis = null_combinations(pairs);
    }
    KernelBasis::span_of(&basis)
}

/// The unit vectors `e_i` for the given coordinates.
pub fn coordinate_basis(indices: impl IntoIterator<Item = usize>) -> Vec<SparseVec> {
    indices.into_iter().map(SparseVec::unit).collect()
}

/// `span(a) ∩ span(b)` via the kernel of `(x, y) ↦ x − y` on stacked coordinates.
pub fn intersect(a: &[SparseVec], b: &[SparseVec]) -> KernelBasis {
    let ra = RowReducer::from_vectors(a).rref();
    let rb = RowReducer::from_vectors(b).rref();
    let mut pairs: Vec<(SparseVec, SparseVec)> = Vec::new();
    for v in &ra {
        pairs.push((v.clone(), v.clone()));
    }
    for v in &rb {
        pairs.push((v.scale(&-Scalar::one()), SparseVec::new()));
    }
    // In a kernel combination Σ a_j v_j − Σ b_j w_j = 0, the source side tracks Σ a_j v_j.
    let kernel = null_combinations(pairs);
    KernelBasis::span_of(&kernel)
}
