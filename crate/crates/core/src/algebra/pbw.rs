use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::format_terms;
use crate::exactmath::Field;

/// Basis monomial `x1^a x21^b x2^c` with `a` in {0, 1}.
///
/// Ordered by (degree, a, b, c) with `deg x1 = deg x2 = 1`, so `x21` has
/// degree 2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PbwMonomial {
    x1: u8,
    x21: u32,
    x2: u32,
}

impl PbwMonomial {
    pub const ONE: PbwMonomial = PbwMonomial { x1: 0, x21: 0, x2: 0 };

    pub fn new(x1: u8, x21: u32, x2: u32) -> Self {
        assert!(x1 <= 1, "x1 squares to zero; its exponent is 0 or 1");
        PbwMonomial { x1, x21, x2 }
    }

    pub fn x1_exp(&self) -> u8 {
        self.x1
    }

    pub fn x21_exp(&self) -> u32 {
        self.x21
    }

    pub fn x2_exp(&self) -> u32 {
        self.x2
    }

    pub fn degree(&self) -> u32 {
        self.x1 as u32 + 2 * self.x21 + self.x2
    }

    fn key(&self) -> (u32, u8, u32, u32) {
        (self.degree(), self.x1, self.x21, self.x2)
    }

    /// All monomials of degree at most `max_degree`, in basis order.
    pub fn up_to_degree(max_degree: u32) -> Vec<PbwMonomial> {
        let mut out = Vec::new();
        for a in 0..=1u8 {
            for b in 0..=max_degree / 2 {
                for c in 0..=max_degree {
                    let m = PbwMonomial::new(a, b, c);
                    if m.degree() <= max_degree {
                        out.push(m);
                    }
                }
            }
        }
        out.sort();
        out
    }
}

impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        if self.x1 == 1 {
            factors.push("x1".to_string());
        }
        for (name, e) in [("x21", self.x21), ("x2", self.x2)] {
            match e {
                0 => {}
                1 => factors.push(name.to_string()),
                _ => factors.push(format!("{name}^{e}")),
            }
        }
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("·"))
        }
    }
}

/// Element of the super Jordan plane in the PBW basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PbwElement<F> {
    terms: BTreeMap<PbwMonomial, F>,
}

impl<F: Field> Default for PbwElement<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> PbwElement<F> {
    pub fn zero() -> Self {
        PbwElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(PbwMonomial::ONE)
    }

    pub fn scalar(c: F) -> Self {
        Self::term(c, PbwMonomial::ONE)
    }

    pub fn monomial(m: PbwMonomial) -> Self {
        Self::term(F::one(), m)
    }

    pub fn term(c: F, m: PbwMonomial) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (PbwMonomial, F)>) -> Self {
        let mut e = Self::zero();
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn x1() -> Self {
        Self::monomial(PbwMonomial::new(1, 0, 0))
    }

    pub fn x2() -> Self {
        Self::monomial(PbwMonomial::new(0, 0, 1))
    }

    /// `s = x21 = x1 x2 + x2 x1`.
    pub fn s() -> Self {
        Self::monomial(PbwMonomial::new(0, 1, 0))
    }

    /// `t = x2^2`.
    pub fn t() -> Self {
        Self::monomial(PbwMonomial::new(0, 0, 2))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: F) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
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

    pub fn scale(&self, k: &F) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        PbwElement {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.clone() * k.clone()))
                .collect(),
        }
    }

    /// The common degree of all terms, if the element is homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(PbwMonomial::degree);
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    /// `x1 * self`.
    pub fn lmul_x1(&self) -> Self {
        PbwElement {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.x1 == 0)
                .map(|(m, c)| (PbwMonomial::new(1, m.x21, m.x2), c.clone()))
                .collect(),
        }
    }

    /// `x21 * self`; `x21` commutes with `x1`.
    pub fn lmul_s(&self) -> Self {
        PbwElement {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (PbwMonomial::new(m.x1, m.x21 + 1, m.x2), c.clone()))
                .collect(),
        }
    }

    /// `x2 * self`, using
    /// `x2 x21^b = x21^b x2 + b x1 x21^b` and `x2 x1 = x21 - x1 x2`.
    pub fn lmul_x2(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (b, e) = (m.x21, m.x2);
            if m.x1 == 0 {
                out.add_term(PbwMonomial::new(0, b, e + 1), c.clone());
                if b > 0 {
                    out.add_term(PbwMonomial::new(1, b, e), c.clone() * F::from_usize_exact(b as usize));
                }
            } else {
                out.add_term(PbwMonomial::new(0, b + 1, e), c.clone());
                out.add_term(PbwMonomial::new(1, b, e + 1), -c.clone());
            }
        }
        out
    }

    /// `m * self` for a basis monomial `m = x1^a x21^b x2^c`.
    pub fn lmul_monomial(&self, m: &PbwMonomial) -> Self {
        let mut v = self.clone();
        for _ in 0..m.x2 {
            v = v.lmul_x2();
        }
        for _ in 0..m.x21 {
            v = v.lmul_s();
        }
        if m.x1 == 1 {
            v = v.lmul_x1();
        }
        v
    }

    /// Product in PBW normal form.
    pub fn normal_mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            for (mm, cc) in other.lmul_monomial(m).terms {
                out.add_term(mm, cc * c.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.normal_mul(self))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }
}

/// Free function form of the product.
pub fn normal_mul<F: Field>(u: &PbwElement<F>, v: &PbwElement<F>) -> PbwElement<F> {
    u.normal_mul(v)
}

impl<F: Field> Add for &PbwElement<F> {
    type Output = PbwElement<F>;

    fn add(self, rhs: Self) -> PbwElement<F> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<F: Field> Sub for &PbwElement<F> {
    type Output = PbwElement<F>;

    fn sub(self, rhs: Self) -> PbwElement<F> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<F: Field> Mul for &PbwElement<F> {
    type Output = PbwElement<F>;

    fn mul(self, rhs: Self) -> PbwElement<F> {
        self.normal_mul(rhs)
    }
}

impl<F: Field> Neg for &PbwElement<F> {
    type Output = PbwElement<F>;

    fn neg(self) -> PbwElement<F> {
        self.scale(&-F::one())
    }
}

/// Terms in basis order, e.g. `+1·x21 − 1·x1·x2`; the zero element is `0`.
impl<F: Field> fmt::Display for PbwElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.terms.iter()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational;
    use crate::Element;

    fn mono(a: u8, b: u32, c: u32) -> Element {
        Element::monomial(PbwMonomial::new(a, b, c))
    }

    #[test]
    fn x1_squares_to_zero() {
        assert!((&Element::x1() * &Element::x1()).is_zero());
    }

    #[test]
    fn t_times_s() {
        // ts = st + s^2
        let ts = &Element::t() * &Element::s();
        assert_eq!(ts, &mono(0, 2, 0) + &mono(0, 1, 2));
    }

    #[test]
    fn x2_times_s() {
        let p = &Element::x2() * &Element::s();
        assert_eq!(p, &mono(0, 1, 1) + &mono(1, 1, 0));
    }

    #[test]
    fn monomial_order_is_degree_first() {
        let mut ms = vec![
            PbwMonomial::new(1, 0, 1),
            PbwMonomial::new(0, 1, 0),
            PbwMonomial::new(0, 0, 3),
            PbwMonomial::new(1, 0, 0),
        ];
        ms.sort();
        assert_eq!(
            ms,
            vec![
                PbwMonomial::new(1, 0, 0),
                PbwMonomial::new(0, 1, 0),
                PbwMonomial::new(1, 0, 1),
                PbwMonomial::new(0, 0, 3),
            ]
        );
    }

    #[test]
    fn display_format() {
        let e = &mono(0, 1, 0) - &mono(1, 0, 1);
        assert_eq!(e.to_string(), "+1·x21 − 1·x1·x2");
        let f = Element::term(crate::exactmath::ratio(-3, 2), PbwMonomial::new(1, 2, 3));
        assert_eq!(f.to_string(), "−(3/2)·x1·x21^2·x2^3");
        assert_eq!(Element::zero().to_string(), "0");
        assert_eq!(Element::scalar(rational(4)).to_string(), "+4");
    }

    #[test]
    #[should_panic]
    fn x1_exponent_is_bounded() {
        let _ = PbwMonomial::new(2, 0, 0);
    }

    #[test]
    fn monomials_up_to_degree() {
        // a + 2b + c <= 2: 1, x2, x1, x2^2, x21, x1 x2
        assert_eq!(PbwMonomial::up_to_degree(2).len(), 6);
    }
}
