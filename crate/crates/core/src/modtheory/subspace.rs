use std::fmt;

use crate::exactmath::{echelon_basis, Field, Matrix};

/// A subspace of `k^n`, stored by its reduced echelon basis so that equal
/// subspaces compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
}

impl<F: Field> Subspace<F> {
    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Self {
        Subspace {
            ambient,
            basis: echelon_basis(ambient, vectors),
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, &Matrix::<F>::identity(ambient).columns())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut vs = self.basis.clone();
        vs.push(v.to_vec());
        echelon_basis(self.ambient, &vs).len() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        self.sum(other).dim() == self.dim()
    }

    pub fn sum(&self, other: &Self) -> Self {
        let vs: Vec<Vec<F>> = self.basis.iter().chain(&other.basis).cloned().collect();
        Self::span(self.ambient, &vs)
    }

    /// Linear forms vanishing on the subspace, as row vectors.
    pub fn annihilator(&self) -> Vec<Vec<F>> {
        if self.basis.is_empty() {
            return Matrix::<F>::identity(self.ambient).row_vectors();
        }
        Matrix::from_rows(self.basis.clone())
            .expect("basis vectors share the ambient length")
            .kernel_basis()
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let forms: Vec<Vec<F>> = self.annihilator().into_iter().chain(other.annihilator()).collect();
        if forms.is_empty() {
            return Self::full(self.ambient);
        }
        let m = Matrix::from_rows(forms).expect("forms share the ambient length");
        Subspace {
            ambient: self.ambient,
            basis: m.kernel_basis(),
        }
    }

    pub fn image_under(&self, m: &Matrix<F>) -> Self {
        let vs: Vec<Vec<F>> = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Self::span(m.rows(), &vs)
    }

    pub fn is_invariant(&self, m: &Matrix<F>) -> bool {
        self.contains_subspace(&self.image_under(m))
    }

    /// Standard basis vectors completing this subspace to the whole space.
    pub fn standard_complement(&self) -> Vec<Vec<F>> {
        let mut current = self.clone();
        let mut out = Vec::new();
        for j in 0..self.ambient {
            if current.dim() == self.ambient {
                break;
            }
            let mut e = vec![F::zero(); self.ambient];
            e[j] = F::one();
            if !current.contains(&e) {
                current = current.sum(&Self::span(self.ambient, &[e.clone()]));
                out.push(e);
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .basis
            .iter()
            .map(|v| {
                let xs: Vec<String> = v.iter().map(F::to_string).collect();
                format!("({})", xs.join(", "))
            })
            .collect();
        write!(f, "span{{{}}}", parts.join(", "))
    }
}

/// Incrementally grown echelon basis for membership tests on flattened
/// vectors (matrices viewed as vectors of length `n^2`).
#[derive(Clone, Debug)]
pub(crate) struct SpanTracker<F> {
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> SpanTracker<F> {
    pub fn new() -> Self {
        SpanTracker { rows: Vec::new() }
    }

    #[cfg(test)]
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    /// The residue of `v` after eliminating against the stored pivots.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.clone() - f.clone() * r.clone();
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = F::one() / r[p].clone();
        let r: Vec<F> = r.into_iter().map(|x| x * inv.clone()).collect();
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        self.rows.push((p, r));
        true
    }
}
