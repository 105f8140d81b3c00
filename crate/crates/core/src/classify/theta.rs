//! The four shapes `X2` can take in dimension 3 once `X1 = E12`.

use crate::error::{Error, Result};
use crate::exactmath::{square_zero_standard_basis, Field, Matrix};
use crate::modtheory::Representation;

/// One of the four families, with the parameters `(a, b, c, d, e)` of its
/// displayed matrix:
///
/// ```text
/// 1: [a b c ; 0 d e ; 0 (a²-d²)/e -d]     e ≠ 0
/// 2: [a b c ; 0 a 0 ; 0 d e]
/// 3: [a b (c²-a²)/d ; 0 c 0 ; d e -a]     d ≠ 0
/// 4: [a b c ; 0 -a 0 ; 0 d e]             a ≠ 0
/// ```
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThetaFamily<F> {
    pub index: u8,
    pub a: F,
    pub b: F,
    pub c: F,
    pub d: F,
    pub e: F,
}

impl<F: Field> ThetaFamily<F> {
    pub fn params(&self) -> [&F; 5] {
        [&self.a, &self.b, &self.c, &self.d, &self.e]
    }

    /// The displayed matrix for `X2`.
    pub fn x2(&self) -> Matrix<F> {
        let (a, b, c, d, e) = (
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
            self.e.clone(),
        );
        let z = F::zero;
        let rows = match self.index {
            1 => {
                let h = (a.clone() * a.clone() - d.clone() * d.clone()) / e.clone();
                [[a, b, c], [z(), d.clone(), e], [z(), h, -d]]
            }
            2 => [[a.clone(), b, c], [z(), a, z()], [z(), d, e]],
            3 => {
                let g = (c.clone() * c.clone() - a.clone() * a.clone()) / d.clone();
                [[a.clone(), b, g], [z(), c, z()], [d, e, -a]]
            }
            _ => [[a.clone(), b, c], [z(), -a, z()], [z(), d, e]],
        };
        Matrix::from_rows(rows.into_iter().map(Vec::from).collect()).expect("3x3")
    }
}

/// Reads off the family of a 3-dimensional module with `rank X1 = 1`,
/// moving first to a basis where `X1 = E12`. Validity forces the `(2,1)`
/// entry of `X2` to vanish and one of the four shapes to hold; anything
/// else is reported as a violated relation.
pub fn detect_theta_family<F: Field>(rep: &Representation<F>) -> Result<ThetaFamily<F>> {
    if rep.dim() != 3 {
        return Err(Error::DimensionUnsupported(format!(
            "family detection needs dimension 3, got {}",
            rep.dim()
        )));
    }
    let form = square_zero_standard_basis(rep.x1())?;
    if form.blocks != 1 {
        return Err(Error::DimensionUnsupported(format!(
            "family detection needs rank X1 = 1, got {}",
            form.blocks
        )));
    }
    let x2 = rep.x2().conjugate_by(&form.basis)?;
    let g = |i: usize, j: usize| x2.get(i, j).clone();
    let violated = |what: &str, row: usize, col: usize| Error::RelationViolated {
        relation: format!("dimension-3 shape: {what}"),
        row,
        col,
        value: x2.get(row, col).to_string(),
    };
    let (alpha, beta, gamma) = (g(0, 0), g(0, 1), g(0, 2));
    let (delta, eps, zeta) = (g(1, 0), g(1, 1), g(1, 2));
    let (eta, theta, iota) = (g(2, 0), g(2, 1), g(2, 2));
    if !delta.is_zero() {
        return Err(violated("entry (2,1) must vanish", 1, 0));
    }
    let family = if !zeta.is_zero() {
        let expected = (alpha.clone() * alpha.clone() - eps.clone() * eps.clone()) / zeta.clone();
        if !eta.is_zero() || iota != -eps.clone() || theta != expected {
            return Err(violated("family 1 shape", 2, 1));
        }
        ThetaFamily { index: 1, a: alpha, b: beta, c: gamma, d: eps, e: zeta }
    } else if !eta.is_zero() {
        let expected = (eps.clone() * eps.clone() - alpha.clone() * alpha.clone()) / eta.clone();
        if iota != -alpha.clone() || gamma != expected {
            return Err(violated("family 3 shape", 0, 2));
        }
        ThetaFamily { index: 3, a: alpha, b: beta, c: eps, d: eta, e: theta }
    } else if eps == alpha {
        ThetaFamily { index: 2, a: alpha, b: beta, c: gamma, d: theta, e: iota }
    } else if eps == -alpha.clone() {
        ThetaFamily { index: 4, a: alpha, b: beta, c: gamma, d: theta, e: iota }
    } else {
        return Err(violated("diagonal entries must satisfy e = ±a", 1, 1));
    };
    Ok(family)
}

/// Indecomposability read off the family parameters.
pub fn theta_indecomposable<F: Field>(f: &ThetaFamily<F>) -> bool {
    match f.index {
        1 | 3 => true,
        2 => f.e == f.a && (!f.c.is_zero() || !f.d.is_zero()),
        _ => (!f.c.is_zero() && f.e == f.a) || (!f.d.is_zero() && f.e == -f.a.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational;
    use crate::{Mat, Rep};

    fn rep(x2: &[&[i64]]) -> Rep {
        Rep::new(Mat::e12(3), Mat::from_ints(x2)).unwrap()
    }

    #[test]
    fn detects_family_two() {
        let f = detect_theta_family(&rep(&[&[2, 0, 0], &[0, 2, 0], &[0, 1, 2]])).unwrap();
        assert_eq!(f.index, 2);
        assert_eq!(f.d, rational(1));
        assert!(theta_indecomposable(&f));
    }

    #[test]
    fn detects_family_four() {
        let f = detect_theta_family(&rep(&[&[1, 0, 1], &[0, -1, 0], &[0, 0, 1]])).unwrap();
        assert_eq!(f.index, 4);
        assert!(theta_indecomposable(&f));
    }

    #[test]
    fn detects_family_one() {
        // a = 1, d = 0, e = 1: entry (3,2) = (a² - d²)/e = 1
        let f = detect_theta_family(&rep(&[&[1, 2, 3], &[0, 0, 1], &[0, 1, 0]])).unwrap();
        assert_eq!(f.index, 1);
        assert_eq!(f.x2(), Mat::from_ints(&[&[1, 2, 3], &[0, 0, 1], &[0, 1, 0]]));
    }

    #[test]
    fn split_family_two() {
        let f = detect_theta_family(&rep(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        assert_eq!(f.index, 2);
        assert!(!theta_indecomposable(&f));
    }

    #[test]
    fn detects_after_change_of_basis() {
        let r = rep(&[&[1, 0, 1], &[0, -1, 0], &[0, 0, 1]]);
        let p = Mat::from_ints(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let f = detect_theta_family(&r.conjugate(&p).unwrap()).unwrap();
        assert_eq!(f.index, 4);
    }
}
