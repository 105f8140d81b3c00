//! Indecomposability, splitting into indecomposable summands, composition
//! series and direct-summand tests.

use super::hom::end_space;
use super::matalg::{algebra_radical, MatrixAlgebra};
use super::rep::Representation;
use super::structure::{decompose_by_t, is_submodule};
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::exactmath::{char_poly, primary_component, ExactField, Field, Matrix, Polynomial};

/// `End(V)` as a matrix algebra.
pub fn endomorphism_algebra<F: Field>(rep: &Representation<F>) -> MatrixAlgebra<F> {
    MatrixAlgebra {
        n: rep.dim(),
        basis: end_space(rep),
    }
}

/// `dim End(V) - dim Rad End(V)`; 1 exactly when `End(V)` is local over the
/// algebraic closure.
pub fn end_semisimple_dim<F: Field>(rep: &Representation<F>) -> Result<usize> {
    Ok(algebra_radical(&endomorphism_algebra(rep))?.quotient_dim)
}

pub fn is_indecomposable<F: Field>(rep: &Representation<F>) -> Result<bool> {
    Ok(end_semisimple_dim(rep)? == 1)
}

/// An indecomposable summand with its basis in ambient coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Summand<F> {
    pub basis: Vec<Vec<F>>,
    pub rep: Representation<F>,
}

/// Splits into indecomposable summands: first along the generalized
/// eigenspaces of `T`, then along primary components of endomorphisms.
pub fn full_decompose<F: ExactField>(rep: &Representation<F>) -> Result<Vec<Summand<F>>> {
    let mut out = Vec::new();
    for part in decompose_by_t(rep)? {
        split_summand(part.rep, part.subspace.basis().to_vec(), &mut out)?;
    }
    Ok(out)
}

fn split_summand<F: ExactField>(
    rep: Representation<F>,
    ambient_basis: Vec<Vec<F>>,
    out: &mut Vec<Summand<F>>,
) -> Result<()> {
    let alg = endomorphism_algebra(&rep);
    let report = algebra_radical(&alg)?;
    if report.quotient_dim == 1 {
        out.push(Summand {
            basis: ambient_basis,
            rep,
        });
        return Ok(());
    }
    let pieces = splitting_endomorphism(&alg.basis)?;
    let n = ambient_basis.first().map_or(0, Vec::len);
    let to_ambient = Matrix::from_columns(n, &ambient_basis);
    for coords in pieces {
        let sub = rep.restrict(&coords)?;
        let basis = coords.iter().map(|c| to_ambient.mul_vec(c)).collect();
        split_summand(sub, basis, out)?;
    }
    Ok(())
}

/// Primary components of the first endomorphism (basis elements first,
/// then fixed integer combinations) whose characteristic polynomial has at
/// least two coprime parts.
fn splitting_endomorphism<F: ExactField>(end: &[Matrix<F>]) -> Result<Vec<Vec<Vec<F>>>> {
    let n = end[0].rows();
    let mut candidates: Vec<Matrix<F>> = end.to_vec();
    for k in 1..=3u32 {
        let combo = end.iter().enumerate().fold(Matrix::zeros(n, n), |acc, (i, b)| {
            &acc + &b.scale(&F::from_usize_exact((i + 1).pow(k) + k as usize))
        });
        candidates.push(combo);
    }
    let mut last_factor = String::new();
    for phi in &candidates {
        let split = F::split_roots(&char_poly(phi)?);
        let mut factors: Vec<Polynomial<F>> = split
            .roots
            .keys()
            .map(|r| Polynomial::linear(r.clone()))
            .collect();
        if !split.splits() {
            last_factor = split.remainder.to_string();
            factors.push(split.remainder.clone());
        }
        if factors.len() < 2 {
            continue;
        }
        return factors
            .iter()
            .map(|q| primary_component(phi, q))
            .collect::<Result<Vec<_>>>();
    }
    Err(Error::NonsplitSpectrum {
        context: "the endomorphism algebra".into(),
        factor: if last_factor.is_empty() {
            "none found".into()
        } else {
            last_factor
        },
    })
}

/// A chain `0 = V_0 < V_1 < ... < V_n = V` of submodules with 1-dimensional
/// quotients, together with the `X2`-eigenvalue on each quotient.
#[derive(Clone, Debug, PartialEq)]
pub struct CompositionSeries<F> {
    pub chain: Vec<Subspace<F>>,
    pub factors: Vec<F>,
}

/// Each step extracts a 1-dimensional submodule of the current quotient, a
/// vector killed by `X1` and an eigenvector of `X2`.
pub fn composition_series<F: ExactField>(rep: &Representation<F>) -> Result<CompositionSeries<F>> {
    let n = rep.dim();
    let mut chain = vec![Subspace::zero(n)];
    let mut factors = Vec::new();
    let mut current = Subspace::zero(n);
    while current.dim() < n {
        let complement = current.standard_complement();
        let q = rep.quotient(current.basis(), &complement)?;
        let (v, mu) = simple_submodule(&q)?;
        let lift: Vec<F> = complement
            .iter()
            .zip(&v)
            .fold(vec![F::zero(); n], |acc, (c, k)| {
                acc.iter().zip(c).map(|(a, x)| a.clone() + x.clone() * k.clone()).collect()
            });
        current = current.sum(&Subspace::span(n, &[lift]));
        if !is_submodule(rep, &current) {
            return Err(Error::ClosureViolated("composition step is not a submodule".into()));
        }
        chain.push(current.clone());
        factors.push(mu);
    }
    Ok(CompositionSeries { chain, factors })
}

/// A vector spanning a 1-dimensional submodule, with its `X2`-eigenvalue.
fn simple_submodule<F: ExactField>(rep: &Representation<F>) -> Result<(Vec<F>, F)> {
    let n = rep.dim();
    let split = F::split_roots(&char_poly(rep.x2())?);
    for mu in split.roots.keys() {
        let shifted = rep.x2().shift(mu);
        let stacked = Matrix::from_fn(2 * n, n, |i, j| {
            if i < n {
                rep.x1().get(i, j).clone()
            } else {
                shifted.get(i - n, j).clone()
            }
        });
        if let Some(v) = stacked.kernel_basis().into_iter().next() {
            return Ok((v, mu.clone()));
        }
    }
    Err(Error::NonsplitSpectrum {
        context: "X2 on a composition quotient".into(),
        factor: split.remainder.to_string(),
    })
}

/// Whether the submodule `sub` has a complementary submodule: equivalently,
/// some endomorphism restricts to the identity on `sub` and maps into it.
pub fn is_direct_summand<F: Field>(rep: &Representation<F>, sub: &Subspace<F>) -> bool {
    if !is_submodule(rep, sub) {
        return false;
    }
    let n = rep.dim();
    let end = end_space(rep);
    let forms = sub.annihilator();
    let mut rows: Vec<Vec<F>> = Vec::new();
    let mut rhs: Vec<F> = Vec::new();
    // e l = l on the subspace
    for l in sub.basis() {
        let images: Vec<Vec<F>> = end.iter().map(|b| b.mul_vec(l)).collect();
        for i in 0..n {
            rows.push(images.iter().map(|im| im[i].clone()).collect());
            rhs.push(l[i].clone());
        }
    }
    // image of e inside the subspace
    for j in 0..n {
        let cols: Vec<Vec<F>> = end.iter().map(|b| b.col(j)).collect();
        for a in &forms {
            rows.push(cols.iter().map(|c| crate::exactmath::dot(a, c)).collect());
            rhs.push(F::zero());
        }
    }
    if end.is_empty() || rows.is_empty() {
        return sub.dim() == 0;
    }
    Matrix::from_rows(rows)
        .expect("rows of equal length")
        .solve(&rhs)
        .is_some()
}
