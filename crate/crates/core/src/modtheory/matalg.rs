use super::subspace::SpanTracker;
use crate::error::{Error, Result};
use crate::exactmath::{Field, Matrix};

/// A unital subalgebra of `n x n` matrices, given by a basis.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixAlgebra<F> {
    pub n: usize,
    pub basis: Vec<Matrix<F>>,
}

impl<F: Field> MatrixAlgebra<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn tracker(&self) -> SpanTracker<F> {
        let mut t = SpanTracker::new();
        for b in &self.basis {
            t.insert(b.entries());
        }
        t
    }

    /// Checks that all pairwise products stay in the span.
    pub fn check_closure(&self) -> Result<()> {
        let t = self.tracker();
        for (i, a) in self.basis.iter().enumerate() {
            for (j, b) in self.basis.iter().enumerate() {
                if !t.contains((a * b).entries()) {
                    return Err(Error::ClosureViolated(format!(
                        "product of basis elements {i} and {j} leaves the span"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The unital algebra generated by `gens`: words in the generators span it,
/// and closing the span of `I` under left multiplication by the generators
/// reaches every word.
pub fn generated_matrix_algebra<F: Field>(n: usize, gens: &[Matrix<F>]) -> MatrixAlgebra<F> {
    let mut tracker = SpanTracker::new();
    let id = Matrix::identity(n);
    tracker.insert(id.entries());
    let mut basis = vec![id];
    let mut next = 0;
    while next < basis.len() {
        let b = basis[next].clone();
        next += 1;
        for g in gens {
            let p = g * &b;
            if tracker.insert(p.entries()) {
                basis.push(p);
            }
        }
    }
    MatrixAlgebra { n, basis }
}

/// The radical of a matrix algebra and facts about the quotient.
#[derive(Clone, Debug, PartialEq)]
pub struct RadicalReport<F> {
    pub radical: Vec<Matrix<F>>,
    pub quotient_dim: usize,
    /// Every product of `dim radical + 1` radical elements vanishes.
    pub nilpotent: bool,
    pub quotient_commutative: bool,
}

/// Radical as the kernel of the trace form `(x, y) -> tr(xy)`, which in
/// characteristic zero is exactly the largest nilpotent ideal.
pub fn algebra_radical<F: Field>(alg: &MatrixAlgebra<F>) -> Result<RadicalReport<F>> {
    alg.check_closure()?;
    let d = alg.dim();
    let radical = if d == 0 {
        Vec::new()
    } else {
        let gram = Matrix::from_fn(d, d, |i, j| (&alg.basis[i] * &alg.basis[j]).trace());
        gram.kernel_basis()
            .into_iter()
            .map(|c| {
                c.iter()
                    .zip(&alg.basis)
                    .fold(Matrix::zeros(alg.n, alg.n), |acc, (k, b)| &acc + &b.scale(k))
            })
            .collect::<Vec<_>>()
    };
    let nilpotent = radical_is_nilpotent(&radical);
    let mut rad_span = SpanTracker::new();
    for r in &radical {
        rad_span.insert(r.entries());
    }
    let quotient_commutative = alg.basis.iter().all(|a| {
        alg.basis
            .iter()
            .all(|b| rad_span.contains(a.commutator(b).entries()))
    });
    Ok(RadicalReport {
        quotient_dim: d - radical.len(),
        radical,
        nilpotent,
        quotient_commutative,
    })
}

/// `J^k` is spanned by products of `k` basis elements; check it reaches 0
/// within `dim J + 1` steps.
fn radical_is_nilpotent<F: Field>(radical: &[Matrix<F>]) -> bool {
    let mut power: Vec<Matrix<F>> = radical.to_vec();
    for _ in 0..=radical.len() {
        if power.iter().all(Matrix::is_zero) {
            return true;
        }
        let mut t = SpanTracker::new();
        let mut next = Vec::new();
        for p in &power {
            for r in radical {
                let q = p * r;
                if t.insert(q.entries()) {
                    next.push(q);
                }
            }
        }
        power = next;
    }
    power.iter().all(Matrix::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Mat;

    #[test]
    fn generated_by_e12() {
        let a = generated_matrix_algebra(2, &[Mat::e12(2)]);
        assert_eq!(a.dim(), 2);
        let r = algebra_radical(&a).unwrap();
        assert_eq!(r.radical.len(), 1);
        assert_eq!(r.quotient_dim, 1);
        assert!(r.nilpotent);
    }

    #[test]
    fn upper_triangular() {
        let a = generated_matrix_algebra(2, &[Mat::from_ints(&[&[1, 0], &[0, -1]]), Mat::e12(2)]);
        assert_eq!(a.dim(), 3);
        let r = algebra_radical(&a).unwrap();
        assert_eq!(r.radical, vec![Mat::e12(2)]);
        assert_eq!(r.quotient_dim, 2);
        assert!(r.quotient_commutative);
    }

    #[test]
    fn no_generators() {
        let a = generated_matrix_algebra::<crate::Rational>(3, &[]);
        assert_eq!(a.dim(), 1);
        let r = algebra_radical(&a).unwrap();
        assert!(r.radical.is_empty());
    }

    #[test]
    fn full_matrix_algebra_is_not_commutative_mod_radical() {
        let a = generated_matrix_algebra(2, &[Mat::e12(2), Mat::e12(2).transpose()]);
        assert_eq!(a.dim(), 4);
        let r = algebra_radical(&a).unwrap();
        assert!(r.radical.is_empty());
        assert!(!r.quotient_commutative);
    }

    #[test]
    fn closure_violation() {
        let bad = MatrixAlgebra {
            n: 2,
            basis: vec![Mat::identity(2), Mat::from_ints(&[&[0, 1], &[1, 0]]), Mat::e12(2)],
        };
        assert!(bad.check_closure().is_err());
    }
}
