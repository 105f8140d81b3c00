//! Arbitrary-precision rationals: literal parsing and exact root finding.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::ExactField;
use super::poly::{Polynomial, RootSplit};
use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Parses `"p"` or `"p/q"` with an optional leading minus sign and no
/// whitespace. The result is in lowest terms with a positive denominator.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational literal {text:?}"));
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || den.is_some_and(|d| !digits(d)) {
        return Err(bad());
    }
    let mut n: BigInt = num.parse().map_err(|_| bad())?;
    if neg {
        n = -n;
    }
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(n, d))
}

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

impl ExactField for Rational {
    fn split_roots(p: &Polynomial<Self>) -> RootSplit<Self> {
        let mut remainder = p.monic();
        let mut roots = BTreeMap::new();
        if remainder.degree().unwrap_or(0) == 0 {
            return RootSplit {
                roots,
                remainder: if p.is_zero() { p.clone() } else { Polynomial::one() },
            };
        }
        for r in distinct_rational_roots(&remainder.squarefree_part()) {
            let factor = Polynomial::linear(r.clone());
            let mut mult = 0;
            loop {
                let (q, rem) = remainder.div_rem(&factor);
                if !rem.is_zero() {
                    break;
                }
                remainder = q;
                mult += 1;
            }
            roots.insert(r, mult);
        }
        RootSplit { roots, remainder }
    }
}

/// Rational roots of a monic square-free polynomial.
///
/// The polynomial is rescaled to a monic integer polynomial whose rational
/// roots are exactly its integer roots; those are isolated between
/// half-integers (never roots) with a Sturm sequence and tested exactly.
fn distinct_rational_roots(p: &Polynomial<Rational>) -> Vec<Rational> {
    let n = p.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    let p = p.monic();
    let scale = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scale_q = Rational::from_integer(scale.clone());
    // r(y) = scale^n p(y / scale) is monic with integer coefficients.
    let scaled = Polynomial::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if i == n {
                    Rational::one()
                } else {
                    c.clone() * scale_q.pow((n - i) as i32)
                }
            })
            .collect(),
    );
    debug_assert!(scaled.coeffs().iter().all(|c| c.is_integer()));

    let bound: BigInt = scaled
        .coeffs()
        .iter()
        .map(|c| c.numer().abs())
        .max()
        .unwrap_or_default()
        + 1;
    let sturm = sturm_sequence(&scaled);
    let mut found = Vec::new();
    // integers in (lo, hi] are examined, i.e. the real interval (lo + 1/2, hi + 1/2]
    let mut stack: Vec<(BigInt, BigInt)> = vec![(-bound.clone() - BigInt::one(), bound)];
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    while let Some((lo, hi)) = stack.pop() {
        let a = Rational::from_integer(lo.clone()) + half.clone();
        let b = Rational::from_integer(hi.clone()) + half.clone();
        if sign_changes(&sturm, &a) <= sign_changes(&sturm, &b) {
            continue;
        }
        if &hi - &lo == BigInt::one() {
            let y = Rational::from_integer(hi);
            if scaled.eval(&y).is_zero() {
                found.push(y / scale_q.clone());
            }
            continue;
        }
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    found.sort();
    found
}

fn sturm_sequence(p: &Polynomial<Rational>) -> Vec<Polynomial<Rational>> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let k = seq.len();
        if seq[k - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[k - 2].div_rem(&seq[k - 1]).1;
        if r.is_zero() {
            break;
        }
        seq.push(r.scale(&-Rational::one()));
    }
    seq
}

fn sign_changes(seq: &[Polynomial<Rational>], x: &Rational) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|q| q.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}
