//! Does a linear span of square matrices contain an invertible matrix?
//!
//! Equivalently: is `det(c_1 H_1 + ... + c_m H_m)` a nonzero polynomial in
//! the `c_i`? Cheap evaluation points are tried first as witnesses; if none
//! is invertible the determinant is expanded symbolically, which settles
//! the question exactly.

use std::collections::BTreeMap;

use super::field::Field;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Sparse multivariate polynomial, exponent vectors to coefficients.
#[derive(Clone, Debug, PartialEq)]
struct MultiPoly<F> {
    terms: BTreeMap<Vec<u16>, F>,
}

impl<F: Field> MultiPoly<F> {
    fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    fn one(vars: usize) -> Self {
        MultiPoly {
            terms: BTreeMap::from([(vec![0; vars], F::one())]),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exps: Vec<u16>, c: F) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    /// `self += sign * linear * other`, where `linear` is `sum_k l_k c_k`.
    fn add_linear_product(&mut self, linear: &[F], other: &Self, negate: bool) {
        for (k, l) in linear.iter().enumerate() {
            if l.is_zero() {
                continue;
            }
            for (exps, c) in &other.terms {
                let mut e = exps.clone();
                e[k] += 1;
                let v = l.clone() * c.clone();
                self.add_term(e, if negate { -v } else { v });
            }
        }
    }
}

/// Exact test that some linear combination of `mats` is invertible.
pub fn generic_invertibility<F: Field>(mats: &[Matrix<F>]) -> Result<bool> {
    let Some(first) = mats.first() else {
        return Ok(false);
    };
    let n = first.require_square()?;
    if mats.iter().any(|m| m.rows() != n || m.cols() != n) {
        return Err(Error::SizeMismatch(
            "all matrices must be square of one size".into(),
        ));
    }
    if n == 0 {
        return Ok(true);
    }
    if witness_search(mats, n).is_some() {
        return Ok(true);
    }
    Ok(!symbolic_determinant(mats, n).is_zero())
}

/// Combination coefficients `(1, t, t^2, ...)` for small `t`, then the
/// individual matrices. Returns the first invertible combination found.
pub fn witness_search<F: Field>(mats: &[Matrix<F>], n: usize) -> Option<Matrix<F>> {
    let m = mats.len();
    let combos = (0..m).map(|i| {
        let mut c = vec![F::zero(); m];
        c[i] = F::one();
        c
    });
    let powers = (1..=(n * m + 1) as i64).map(|t| {
        let mut c = Vec::with_capacity(m);
        let mut p = F::one();
        for _ in 0..m {
            c.push(p.clone());
            p = p * F::int(t);
        }
        c
    });
    combos.chain(powers).find_map(|c| {
        let mut sum = Matrix::zeros(n, n);
        for (ci, h) in c.iter().zip(mats) {
            if !ci.is_zero() {
                sum = &sum + &h.scale(ci);
            }
        }
        match sum.determinant() {
            Ok(d) if !d.is_zero() => Some(sum),
            _ => None,
        }
    })
}

/// `det(sum c_k H_k)` as a polynomial in the `c_k`, by Laplace expansion
/// along successive rows memoised over column subsets (division-free).
fn symbolic_determinant<F: Field>(mats: &[Matrix<F>], n: usize) -> MultiPoly<F> {
    assert!(n < 24, "symbolic determinant limited to small matrices");
    let vars = mats.len();
    let linear = |i: usize, j: usize| -> Vec<F> { mats.iter().map(|h| h.get(i, j).clone()).collect() };
    // minors[mask] = det of rows 0..|mask| restricted to the columns in mask
    let mut minors: Vec<Option<MultiPoly<F>>> = vec![None; 1 << n];
    minors[0] = Some(MultiPoly::one(vars));
    let mut masks: Vec<usize> = (1..1usize << n).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        let row = mask.count_ones() as usize - 1;
        let mut acc = MultiPoly::zero();
        for (pos, j) in (0..n).filter(|j| mask & (1 << j) != 0).enumerate() {
            let sub = minors[mask & !(1 << j)].as_ref().unwrap();
            if sub.is_zero() {
                continue;
            }
            let negate = (row + pos) % 2 == 1;
            acc.add_linear_product(&linear(row, j), sub, negate);
        }
        minors[mask] = Some(acc);
    }
    minors.pop().flatten().unwrap()
}
