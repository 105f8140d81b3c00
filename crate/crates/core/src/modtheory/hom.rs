use super::rep::Representation;
use crate::error::Result;
use crate::exactmath::{generic_invertibility, Field, Matrix};

/// A basis of the intertwiners `H: source -> target`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomBasis<F> {
    pub source: Representation<F>,
    pub target: Representation<F>,
    pub basis: Vec<Matrix<F>>,
}

impl<F: Field> HomBasis<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Solves `H X_i^source = X_i^target H` for `i = 1, 2`.
pub fn hom_space<F: Field>(source: &Representation<F>, target: &Representation<F>) -> HomBasis<F> {
    let n = source.dim();
    let m = target.dim();
    let var = |i: usize, j: usize| i * n + j;
    let mut rows: Vec<Vec<F>> = Vec::with_capacity(2 * m * n);
    for (xs, xt) in [(source.x1(), target.x1()), (source.x2(), target.x2())] {
        for i in 0..m {
            for j in 0..n {
                // (H xs - xt H)_{ij}
                let mut row = vec![F::zero(); m * n];
                for k in 0..n {
                    let c = xs.get(k, j);
                    if !c.is_zero() {
                        row[var(i, k)] = row[var(i, k)].clone() + c.clone();
                    }
                }
                for k in 0..m {
                    let c = xt.get(i, k);
                    if !c.is_zero() {
                        row[var(k, j)] = row[var(k, j)].clone() - c.clone();
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        Matrix::<F>::identity(m * n).columns()
    } else {
        Matrix::from_rows(rows).expect("rows of equal length").kernel_basis()
    };
    HomBasis {
        source: source.clone(),
        target: target.clone(),
        basis: kernel
            .into_iter()
            .map(|v| Matrix::from_flat(m, n, v))
            .collect(),
    }
}

pub fn end_space<F: Field>(rep: &Representation<F>) -> Vec<Matrix<F>> {
    hom_space(rep, rep).basis
}

/// Isomorphic iff some intertwiner is invertible.
pub fn is_isomorphic<F: Field>(a: &Representation<F>, b: &Representation<F>) -> Result<bool> {
    if a.dim() != b.dim() {
        return Ok(false);
    }
    generic_invertibility(&hom_space(a, b).basis)
}
