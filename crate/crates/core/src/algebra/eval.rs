use std::collections::HashMap;

use super::pbw::PbwElement;
use crate::exactmath::{Field, Matrix};
use crate::modtheory::Representation;

/// `rho(u)` for the representation `rho`: each monomial `x1^a x21^b x2^c`
/// becomes `X1^a S^b X2^c`.
pub fn evaluate_in_rep<F: Field>(u: &PbwElement<F>, rep: &Representation<F>) -> Matrix<F> {
    let n = rep.dim();
    let s = rep.s();
    let mut s_pows: HashMap<u32, Matrix<F>> = HashMap::new();
    let mut x2_pows: HashMap<u32, Matrix<F>> = HashMap::new();
    let mut out = Matrix::zeros(n, n);
    for (m, c) in u.terms() {
        let sb = s_pows
            .entry(m.x21_exp())
            .or_insert_with(|| s.pow(m.x21_exp()))
            .clone();
        let x2c = x2_pows
            .entry(m.x2_exp())
            .or_insert_with(|| rep.x2().pow(m.x2_exp()));
        let mut term = &sb * x2c;
        if m.x1_exp() == 1 {
            term = rep.x1() * &term;
        }
        out = &out + &term.scale(c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational;
    use crate::{Element, Mat, Rep};

    #[test]
    fn x1_evaluates_to_e12() {
        let rep = Rep::new(Mat::e12(2), Mat::from_ints(&[&[1, 2], &[0, 1]])).unwrap();
        assert_eq!(evaluate_in_rep(&Element::x1(), &rep), Mat::e12(2));
    }

    #[test]
    fn s_vanishes_on_two_dim_v() {
        let rep = Rep::new(Mat::e12(2), Mat::from_ints(&[&[1, 0], &[0, -1]])).unwrap();
        assert!(evaluate_in_rep(&Element::s(), &rep).is_zero());
    }

    #[test]
    fn t_on_jordan_block() {
        let l = rational(3);
        let rep = Rep::new(Mat::zeros(2, 2), Mat::jordan_block(l, 2)).unwrap();
        assert_eq!(
            evaluate_in_rep(&Element::t(), &rep),
            Mat::from_ints(&[&[9, 6], &[0, 9]])
        );
    }
}
