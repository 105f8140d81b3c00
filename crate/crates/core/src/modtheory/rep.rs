use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::{Field, Matrix};

/// Outcome of checking the defining relations on a matrix pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationCheck {
    Valid,
    Violation {
        relation: &'static str,
        row: usize,
        col: usize,
        value: String,
    },
}

impl RelationCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, RelationCheck::Valid)
    }
}

pub const X1_SQUARED: &str = "x1^2 = 0";
pub const X2X2X1: &str = "x2^2 x1 = x1 x2^2 + x1 x2 x1";

/// Checks `X1^2 = 0` and `X2^2 X1 = X1 X2^2 + X1 X2 X1`; given the first,
/// the second is equivalent to the cubic defining relation.
pub fn check_representation<F: Field>(x1: &Matrix<F>, x2: &Matrix<F>) -> Result<RelationCheck> {
    let n = x1.require_square()?;
    if x2.require_square()? != n {
        return Err(Error::SizeMismatch(format!(
            "X1 is {n}x{n} but X2 is {}x{}",
            x2.rows(),
            x2.cols()
        )));
    }
    let witness = |relation: &'static str, m: Matrix<F>| match m.first_nonzero() {
        None => RelationCheck::Valid,
        Some((row, col, v)) => RelationCheck::Violation {
            relation,
            row,
            col,
            value: v.to_string(),
        },
    };
    let first = witness(X1_SQUARED, x1 * x1);
    if !first.is_valid() {
        return Ok(first);
    }
    let t = x2 * x2;
    let lhs = &t * x1;
    let rhs = &(x1 * &t) + &(&(x1 * x2) * x1);
    Ok(witness(X2X2X1, &lhs - &rhs))
}

/// A finite-dimensional module: the actions `X1`, `X2` of the generators on
/// `k^n`, validated on construction.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Representation<F> {
    x1: Matrix<F>,
    x2: Matrix<F>,
}

impl<F: Field> Representation<F> {
    pub fn new(x1: Matrix<F>, x2: Matrix<F>) -> Result<Self> {
        match check_representation(&x1, &x2)? {
            RelationCheck::Valid => {}
            RelationCheck::Violation {
                relation,
                row,
                col,
                value,
            } => {
                return Err(Error::RelationViolated {
                    relation: relation.to_string(),
                    row,
                    col,
                    value,
                })
            }
        }
        if x1.rows() == 0 {
            return Err(Error::DimensionUnsupported("dimension 0".into()));
        }
        Ok(Representation { x1, x2 })
    }

    /// The module `k^n_A`: `X1 = 0`, `X2 = A`.
    pub fn from_x2(a: Matrix<F>) -> Result<Self> {
        let n = a.require_square()?;
        Self::new(Matrix::zeros(n, n), a)
    }

    pub fn dim(&self) -> usize {
        self.x1.rows()
    }

    pub fn x1(&self) -> &Matrix<F> {
        &self.x1
    }

    pub fn x2(&self) -> &Matrix<F> {
        &self.x2
    }

    /// `S = X1 X2 + X2 X1`, the action of `x21`.
    pub fn s(&self) -> Matrix<F> {
        &(&self.x1 * &self.x2) + &(&self.x2 * &self.x1)
    }

    /// `T = X2^2`.
    pub fn t(&self) -> Matrix<F> {
        &self.x2 * &self.x2
    }

    pub fn generators(&self) -> [&Matrix<F>; 2] {
        [&self.x1, &self.x2]
    }

    /// The same module in the basis given by the columns of `p`.
    pub fn conjugate(&self, p: &Matrix<F>) -> Result<Self> {
        Ok(Representation {
            x1: self.x1.conjugate_by(p)?,
            x2: self.x2.conjugate_by(p)?,
        })
    }

    pub fn direct_sum(parts: &[&Self]) -> Self {
        let x1: Vec<&Matrix<F>> = parts.iter().map(|r| &r.x1).collect();
        let x2: Vec<&Matrix<F>> = parts.iter().map(|r| &r.x2).collect();
        Representation {
            x1: Matrix::block_diag(&x1),
            x2: Matrix::block_diag(&x2),
        }
    }

    /// The action on an invariant subspace, in coordinates of the given
    /// (independent) basis vectors.
    pub fn restrict(&self, basis: &[Vec<F>]) -> Result<Self> {
        let n = self.dim();
        let b = Matrix::from_columns(n, basis);
        let coords = |m: &Matrix<F>| -> Result<Matrix<F>> {
            let mut cols = Vec::with_capacity(basis.len());
            for v in basis {
                let image = m.mul_vec(v);
                let c = b.solve(&image).ok_or_else(|| {
                    Error::ClosureViolated("subspace is not invariant".into())
                })?;
                cols.push(c);
            }
            Ok(Matrix::from_columns(basis.len(), &cols))
        };
        Self::new(coords(&self.x1)?, coords(&self.x2)?)
    }

    /// Action on `k^n / span(basis)`, in coordinates of the listed
    /// complement vectors (which together with `basis` form a basis).
    pub fn quotient(&self, basis: &[Vec<F>], complement: &[Vec<F>]) -> Result<Self> {
        let n = self.dim();
        let all: Vec<Vec<F>> = basis.iter().chain(complement).cloned().collect();
        let p = Matrix::from_columns(n, &all);
        let c = self.conjugate(&p)?;
        let k = basis.len();
        let m = complement.len();
        let tail = |x: &Matrix<F>| Matrix::from_fn(m, m, |i, j| x.get(k + i, k + j).clone());
        Self::new(tail(&c.x1), tail(&c.x2))
    }
}

impl<F: Field> fmt::Display for Representation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {}\nX1: {}\nX2: {}", self.dim(), self.x1, self.x2)
    }
}
