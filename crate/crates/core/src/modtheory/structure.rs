//! Distinguished subspaces of a module: `V0 = ker X1`, the submodules built
//! from it, and the splitting along generalized eigenspaces of `T`.

use super::rep::Representation;
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::exactmath::{generalized_eigenspace, split_spectrum, ExactField, Field, Matrix};

/// `V0 = ker X1`; never zero since `X1` is nilpotent.
pub fn v0_basis<F: Field>(rep: &Representation<F>) -> Subspace<F> {
    Subspace::span(rep.dim(), &rep.x1().kernel_basis())
}

/// Smallest submodule containing the given vectors.
pub fn submodule_generated<F: Field>(rep: &Representation<F>, vectors: &[Vec<F>]) -> Subspace<F> {
    let mut current = Subspace::span(rep.dim(), vectors);
    loop {
        let next = rep
            .generators()
            .iter()
            .fold(current.clone(), |acc, g| acc.sum(&current.image_under(g)));
        if next.dim() == current.dim() {
            return current;
        }
        current = next;
    }
}

pub fn is_submodule<F: Field>(rep: &Representation<F>, sub: &Subspace<F>) -> bool {
    rep.generators().iter().all(|g| sub.is_invariant(g))
}

/// The subspaces `W = X2 V0 ∩ V0` and `U = X2 V0 + V0` with their closure
/// checks, and a common eigenvector of `S` and `T` inside `V0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Lemma24Report<F> {
    pub v0: Subspace<F>,
    pub w: Subspace<F>,
    pub u: Subspace<F>,
    pub w_closed: bool,
    pub u_closed: bool,
    /// `(v, S-eigenvalue, T-eigenvalue)`.
    pub common_eigenvector: (Vec<F>, F, F),
}

pub fn lemma24_subspaces<F: ExactField>(rep: &Representation<F>) -> Result<Lemma24Report<F>> {
    let v0 = v0_basis(rep);
    let x2v0 = v0.image_under(rep.x2());
    let w = x2v0.intersection(&v0);
    let u = x2v0.sum(&v0);
    let common_eigenvector = common_eigenvector(rep, &v0)?;
    Ok(Lemma24Report {
        w_closed: is_submodule(rep, &w),
        u_closed: is_submodule(rep, &u),
        v0,
        w,
        u,
        common_eigenvector,
    })
}

/// A common eigenvector of `S` and `T` in `V0`.
///
/// `K = ker S ∩ V0` is nonzero (`S` is nilpotent and preserves `V0`) and
/// `T`-stable, because `S T v = (T S - S^2) v = 0` for `v` in `ker S`. Any
/// eigenvector of `T` on `K` is then a common eigenvector with `S`-eigenvalue
/// zero.
fn common_eigenvector<F: ExactField>(rep: &Representation<F>, v0: &Subspace<F>) -> Result<(Vec<F>, F, F)> {
    let n = rep.dim();
    let s = rep.s();
    let t = rep.t();
    let k = Subspace::span(n, &s.kernel_basis()).intersection(v0);
    let basis = k.basis().to_vec();
    let b = Matrix::from_columns(n, &basis);
    let cols: Vec<Vec<F>> = basis
        .iter()
        .map(|v| b.solve(&t.mul_vec(v)).expect("ker S ∩ V0 is T-stable"))
        .collect();
    let restricted = Matrix::from_columns(basis.len(), &cols);
    let split = F::split_roots(&crate::exactmath::char_poly(&restricted)?);
    let Some(lambda) = split.roots.keys().next().cloned() else {
        return Err(Error::NonsplitSpectrum {
            context: "T on ker S ∩ V0".into(),
            factor: split.remainder.to_string(),
        });
    };
    let coords = restricted.shift(&lambda).kernel_basis().remove(0);
    let v = b.mul_vec(&coords);
    Ok((v, F::zero(), lambda))
}

/// One summand of the splitting along the generalized eigenspaces of `T`.
#[derive(Clone, Debug, PartialEq)]
pub struct TSummand<F> {
    pub eigenvalue: F,
    pub subspace: Subspace<F>,
    pub rep: Representation<F>,
}

/// Splits the module into the generalized eigenspaces of `T = X2^2`, each
/// of which is a submodule.
pub fn decompose_by_t<F: ExactField>(rep: &Representation<F>) -> Result<Vec<TSummand<F>>> {
    let t = rep.t();
    let split = split_spectrum(&t, "T")?;
    let mut out = Vec::new();
    for lambda in split.distinct_roots() {
        let subspace = Subspace::span(rep.dim(), &generalized_eigenspace(&t, &lambda)?);
        if !is_submodule(rep, &subspace) {
            return Err(Error::ClosureViolated(format!(
                "generalized eigenspace of T for {lambda} is not a submodule"
            )));
        }
        let restricted = rep.restrict(subspace.basis())?;
        out.push(TSummand {
            eigenvalue: lambda,
            subspace,
            rep: restricted,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational;
    use crate::{Mat, Rep};

    fn u(a: i64, b: i64) -> Rep {
        Rep::new(Mat::e12(2), Mat::from_ints(&[&[a, b], &[0, a]])).unwrap()
    }

    #[test]
    fn v0_of_two_dim() {
        let v0 = v0_basis(&u(1, 2));
        assert_eq!(v0.basis(), &[vec![rational(1), rational(0)]]);
        let zero = Rep::from_x2(Mat::identity(3)).unwrap();
        assert_eq!(v0_basis(&zero).dim(), 3);
    }

    #[test]
    fn generated_submodules() {
        let r = u(1, 2);
        let e1 = vec![rational(1), rational(0)];
        let e2 = vec![rational(0), rational(1)];
        assert_eq!(submodule_generated(&r, &[e1]).dim(), 1);
        assert_eq!(submodule_generated(&r, &[e2]).dim(), 2);
        let chain = Rep::from_x2(Mat::jordan_block(rational(7), 3)).unwrap();
        let g = submodule_generated(&chain, &[vec![rational(1), rational(0), rational(0)]]);
        assert_eq!(g.dim(), 1);
    }

    #[test]
    fn lemma24_on_two_dim_v() {
        let r = Rep::new(Mat::e12(2), Mat::from_ints(&[&[3, 0], &[0, -3]])).unwrap();
        let rep = lemma24_subspaces(&r).unwrap();
        assert_eq!(rep.w, rep.v0);
        assert_eq!(rep.u, rep.v0);
        assert!(rep.w_closed && rep.u_closed);
        let (v, _, tau) = rep.common_eigenvector;
        assert_eq!(r.t().mul_vec(&v), v.iter().map(|x| x * &tau).collect::<Vec<_>>());
    }

    #[test]
    fn t_splitting() {
        let sum = Rep::direct_sum(&[&u(1, 0), &u(2, 0)]);
        let parts = decompose_by_t(&sum).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].eigenvalue, rational(1));
        assert_eq!(parts[1].eigenvalue, rational(4));
        assert!(parts.iter().all(|p| p.subspace.dim() == 2));
    }

    #[test]
    fn nonsplit_t() {
        let r = Rep::from_x2(Mat::from_ints(&[&[0, 2], &[1, 0]])).unwrap();
        // T = 2 I splits; use a rotation-like X2 whose square has no rational roots
        assert!(decompose_by_t(&r).is_ok());
        let r = Rep::from_x2(Mat::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[2, 0, 0]])).unwrap();
        assert!(matches!(decompose_by_t(&r), Err(Error::NonsplitSpectrum { .. })));
    }
}
