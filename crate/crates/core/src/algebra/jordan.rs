use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::format_terms;
use super::pbw::PbwElement;
use crate::exactmath::Field;

/// Basis monomial `y1^a y2^b` of the Jordan plane, ordered by (degree, a, b).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct JordanMonomial {
    pub y1: u32,
    pub y2: u32,
}

impl JordanMonomial {
    pub fn new(y1: u32, y2: u32) -> Self {
        JordanMonomial { y1, y2 }
    }

    pub fn degree(&self) -> u32 {
        self.y1 + self.y2
    }
}

impl Ord for JordanMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.y1, self.y2).cmp(&(other.degree(), other.y1, other.y2))
    }
}

impl PartialOrd for JordanMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for JordanMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        for (name, e) in [("y1", self.y1), ("y2", self.y2)] {
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

/// Element of the Jordan plane `<y1, y2 | y1 y2 - y2 y1 - y2^2>`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct JordanElement<F> {
    terms: BTreeMap<JordanMonomial, F>,
}

impl<F: Field> Default for JordanElement<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> JordanElement<F> {
    pub fn zero() -> Self {
        JordanElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(JordanMonomial::new(0, 0))
    }

    pub fn monomial(m: JordanMonomial) -> Self {
        let mut e = Self::zero();
        e.add_term(m, F::one());
        e
    }

    pub fn y1() -> Self {
        Self::monomial(JordanMonomial::new(1, 0))
    }

    pub fn y2() -> Self {
        Self::monomial(JordanMonomial::new(0, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&JordanMonomial, &F)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: JordanMonomial, c: F) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.remove(&m).map_or(c.clone(), |old| old + c);
        if !v.is_zero() {
            self.terms.insert(m, v);
        }
    }

    pub fn scale(&self, k: &F) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, c.clone() * k.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| jordan_mul(&acc, self))
    }

    fn shift_y2(&self, by: u32) -> Self {
        JordanElement {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (JordanMonomial::new(m.y1, m.y2 + by), c.clone()))
                .collect(),
        }
    }

    fn lmul_y1(&self) -> Self {
        JordanElement {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (JordanMonomial::new(m.y1 + 1, m.y2), c.clone()))
                .collect(),
        }
    }
}

/// Normal forms of `y2 y1^k` for `k = 0..`, grown on demand.
///
/// `y2 y1^k = y1 (y2 y1^(k-1)) - y2 (y2 y1^(k-1))` from `y2 y1 = y1 y2 - y2^2`;
/// the second product only involves smaller powers of `y1`.
struct Y2Table<F> {
    rows: Vec<JordanElement<F>>,
}

impl<F: Field> Y2Table<F> {
    fn new() -> Self {
        Y2Table {
            rows: vec![JordanElement::y2()],
        }
    }

    fn y2_y1_pow(&mut self, k: usize) -> &JordanElement<F> {
        while self.rows.len() <= k {
            let prev = self.rows.last().unwrap().clone();
            let mut next = prev.lmul_y1();
            for (m, c) in prev.terms() {
                let part = self.y2_times_monomial(*m).scale(c);
                for (mm, cc) in part.terms {
                    next.add_term(mm, -cc);
                }
            }
            self.rows.push(next);
        }
        &self.rows[k]
    }

    fn y2_times_monomial(&mut self, m: JordanMonomial) -> JordanElement<F> {
        self.y2_y1_pow(m.y1 as usize).shift_y2(m.y2)
    }

    fn lmul_y2(&mut self, v: &JordanElement<F>) -> JordanElement<F> {
        let mut out = JordanElement::zero();
        for (m, c) in v.terms() {
            for (mm, cc) in self.y2_times_monomial(*m).terms {
                out.add_term(mm, cc * c.clone());
            }
        }
        out
    }
}

/// Product in the basis `y1^a y2^b`.
pub fn jordan_mul<F: Field>(u: &JordanElement<F>, v: &JordanElement<F>) -> JordanElement<F> {
    let mut table = Y2Table::new();
    let mut out = JordanElement::zero();
    for (m, c) in u.terms() {
        let mut w = v.clone();
        for _ in 0..m.y2 {
            w = table.lmul_y2(&w);
        }
        for _ in 0..m.y1 {
            w = w.lmul_y1();
        }
        for (mm, cc) in w.terms {
            out.add_term(mm, cc * c.clone());
        }
    }
    out
}

/// Image under the embedding `y1 -> x2^2`, `y2 -> x21`, computed by
/// multiplying out `t^a s^b` inside the super Jordan plane.
pub fn embed_jordan<F: Field>(u: &JordanElement<F>) -> PbwElement<F> {
    let t = PbwElement::t();
    let s = PbwElement::s();
    let mut out = PbwElement::zero();
    for (m, c) in u.terms() {
        let image = t.pow(m.y1).normal_mul(&s.pow(m.y2));
        out = &out + &image.scale(c);
    }
    out
}

impl<F: Field> Add for &JordanElement<F> {
    type Output = JordanElement<F>;

    fn add(self, rhs: Self) -> JordanElement<F> {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<F: Field> Sub for &JordanElement<F> {
    type Output = JordanElement<F>;

    fn sub(self, rhs: Self) -> JordanElement<F> {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<F: Field> Mul for &JordanElement<F> {
    type Output = JordanElement<F>;

    fn mul(self, rhs: Self) -> JordanElement<F> {
        jordan_mul(self, rhs)
    }
}

impl<F: Field> fmt::Display for JordanElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.terms.iter()))
    }
}
