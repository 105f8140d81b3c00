use super::field::{ExactField, Field};
use super::matrix::{echelon_basis, Matrix};
use super::poly::{Polynomial, RootSplit};
use crate::error::{Error, Result};

/// `det(xI - M)` by the Faddeev-LeVerrier recurrence (characteristic 0).
pub fn char_poly<F: Field>(m: &Matrix<F>) -> Result<Polynomial<F>> {
    let n = m.require_square()?;
    let mut coeffs = vec![F::zero(); n + 1];
    coeffs[n] = F::one();
    let mut aux = Matrix::<F>::zeros(n, n);
    for k in 1..=n {
        // aux_k = M * aux_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(M aux_k) / k
        aux = &(m * &aux) + &Matrix::scalar(n, coeffs[n - k + 1].clone());
        let tr = (m * &aux).trace();
        coeffs[n - k] = -tr / F::from_usize_exact(k);
    }
    Ok(Polynomial::new(coeffs))
}

/// Roots of `p` that lie in the field, with multiplicities, and the
/// leftover factor without in-field roots.
pub fn rational_eigenvalues<F: ExactField>(p: &Polynomial<F>) -> RootSplit<F> {
    F::split_roots(p)
}

/// Eigenvalues of `m` in the field; fails with the leftover factor when the
/// characteristic polynomial does not split.
pub fn split_spectrum<F: ExactField>(m: &Matrix<F>, context: &str) -> Result<RootSplit<F>> {
    let split = rational_eigenvalues(&char_poly(m)?);
    if !split.splits() {
        return Err(Error::NonsplitSpectrum {
            context: context.to_string(),
            factor: split.remainder.to_string(),
        });
    }
    Ok(split)
}

/// Basis of `ker (M - lambda I)^n`, empty when `lambda` is not an eigenvalue.
pub fn generalized_eigenspace<F: Field>(m: &Matrix<F>, lambda: &F) -> Result<Vec<Vec<F>>> {
    let n = m.require_square()?;
    Ok(m.shift(lambda).pow(n as u32).kernel_basis())
}

/// Kernel of `q(M)^n` for a polynomial `q`: the primary component of `q`.
pub fn primary_component<F: Field>(m: &Matrix<F>, q: &Polynomial<F>) -> Result<Vec<Vec<F>>> {
    let n = m.require_square()?;
    Ok(eval_matrix_poly(m, q).pow(n as u32).kernel_basis())
}

pub fn eval_matrix_poly<F: Field>(m: &Matrix<F>, q: &Polynomial<F>) -> Matrix<F> {
    let n = m.rows();
    q.coeffs().iter().rev().fold(Matrix::zeros(n, n), |acc, c| {
        &(&acc * m) + &Matrix::scalar(n, c.clone())
    })
}

/// Basis adapted to a square-zero operator.
#[derive(Clone, Debug, PartialEq)]
pub struct SquareZeroForm<F> {
    /// Columns are the new basis; `P^-1 X P` is the block form.
    pub basis: Matrix<F>,
    /// Number of 2x2 `E12` blocks (the rank of X).
    pub blocks: usize,
    /// Size of the trailing zero block.
    pub zeros: usize,
}

/// Finds `P` with `P^-1 X P = E12(2) + ... + E12(2) + 0`, the `E12` blocks
/// first.
pub fn square_zero_standard_basis<F: Field>(x: &Matrix<F>) -> Result<SquareZeroForm<F>> {
    let n = x.require_square()?;
    if !(x * x).is_zero() {
        return Err(Error::NotSquareZero);
    }
    let (_, pivots) = x.rref();
    let r = pivots.len();
    let mut columns = Vec::with_capacity(n);
    for &p in &pivots {
        // pivot columns of X are independent, so X e_p are independent images
        let mut u = vec![F::zero(); n];
        u[p] = F::one();
        columns.push(x.mul_vec(&u));
        columns.push(u);
    }
    let mut span = echelon_basis(n, &columns);
    for k in x.kernel_basis() {
        if span.len() == n {
            break;
        }
        let mut trial = span.clone();
        trial.push(k.clone());
        let grown = echelon_basis(n, &trial);
        if grown.len() > span.len() {
            span = grown;
            columns.push(k);
        }
    }
    debug_assert_eq!(columns.len(), n);
    Ok(SquareZeroForm {
        basis: Matrix::from_columns(n, &columns),
        blocks: r,
        zeros: n - 2 * r,
    })
}

/// The block form `E12(2)^r + 0_z` that `square_zero_standard_basis` targets.
pub fn square_zero_block_form<F: Field>(blocks: usize, zeros: usize) -> Matrix<F> {
    let n = 2 * blocks + zeros;
    let mut m = Matrix::zeros(n, n);
    for b in 0..blocks {
        m.set(2 * b, 2 * b + 1, F::one());
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{rational, ratio};
    use crate::Rational;
    use std::collections::BTreeMap;

    type M = Matrix<Rational>;

    fn poly(c: &[i64]) -> Polynomial<Rational> {
        Polynomial::new(c.iter().map(|&x| rational(x)).collect())
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(
            char_poly(&M::diag(&[rational(2), rational(3)])).unwrap(),
            poly(&[6, -5, 1])
        );
        assert_eq!(char_poly(&M::e12(2)).unwrap(), poly(&[0, 0, 1]));
        assert_eq!(
            char_poly(&M::from_ints(&[&[0, -1], &[1, 0]])).unwrap(),
            poly(&[1, 0, 1])
        );
        assert!(char_poly(&M::zeros(2, 3)).is_err());
    }

    #[test]
    fn eigenvalue_examples() {
        let s = rational_eigenvalues(&poly(&[-1, 0, 1]));
        assert_eq!(s.roots, BTreeMap::from([(rational(-1), 1), (rational(1), 1)]));
        let s = rational_eigenvalues(&poly(&[1, 0, 1]));
        assert!(s.roots.is_empty() && s.remainder == poly(&[1, 0, 1]));
    }

    #[test]
    fn generalized_eigenspace_examples() {
        let j = M::jordan_block(rational(5), 2);
        assert_eq!(generalized_eigenspace(&j, &rational(5)).unwrap().len(), 2);
        let d = M::diag(&[rational(1), rational(2)]);
        assert_eq!(
            generalized_eigenspace(&d, &rational(1)).unwrap(),
            vec![vec![rational(1), rational(0)]]
        );
        let b = M::block_diag(&[&M::jordan_block(rational(0), 2), &M::diag(&[rational(3)])]);
        assert_eq!(
            generalized_eigenspace(&b, &rational(0)).unwrap(),
            vec![
                vec![rational(1), rational(0), rational(0)],
                vec![rational(0), rational(1), rational(0)]
            ]
        );
        assert!(generalized_eigenspace(&d, &ratio(7, 2)).unwrap().is_empty());
    }

    #[test]
    fn square_zero_examples() {
        let z = square_zero_standard_basis(&M::zeros(3, 3)).unwrap();
        assert_eq!((z.blocks, z.zeros), (0, 3));
        assert_eq!(z.basis, M::identity(3));

        let e = square_zero_standard_basis(&M::e12(2)).unwrap();
        assert_eq!((e.blocks, e.zeros), (1, 0));
        assert_eq!(e.basis, M::identity(2));

        let x = M::from_ints(&[&[1, -1], &[1, -1]]);
        let f = square_zero_standard_basis(&x).unwrap();
        assert_eq!(f.blocks, 1);
        assert_eq!(x.conjugate_by(&f.basis).unwrap(), M::e12(2));
    }

    #[test]
    fn square_zero_rejects_non_nilpotent() {
        assert_eq!(
            square_zero_standard_basis(&M::identity(2)),
            Err(Error::NotSquareZero)
        );
    }
}
