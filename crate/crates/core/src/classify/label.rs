use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactmath::{parse_rational, Field, Matrix};
use crate::modtheory::Representation;
use crate::Rational;

/// Names of the canonical indecomposable modules.
///
/// Dimension-2 and dimension-3 families get distinct names even where the
/// usual notation reuses a letter. The size parameter of the unbounded
/// families comes last.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum CanonicalLabel<F> {
    /// `X1 = 0`, `X2` a single upper Jordan block of size `n`.
    JordanChain(F, usize),
    Dim2U(F, F),
    Dim2V(F),
    T1U(F, F),
    T1Y(F, F, F, F, F),
    T2R(F),
    T2S(F),
    T2T(F, F, F),
    T3U(F, F),
    T3W(F, F, F, F, F),
    T4Vupper(F),
    T4Vlower(F),
    FamU(F, usize),
    FamV(F, usize),
}

use CanonicalLabel::*;

impl<F: Field> CanonicalLabel<F> {
    pub fn name(&self) -> &'static str {
        match self {
            JordanChain(..) => "JordanChain",
            Dim2U(..) => "Dim2U",
            Dim2V(..) => "Dim2V",
            T1U(..) => "T1U",
            T1Y(..) => "T1Y",
            T2R(..) => "T2R",
            T2S(..) => "T2S",
            T2T(..) => "T2T",
            T3U(..) => "T3U",
            T3W(..) => "T3W",
            T4Vupper(..) => "T4Vupper",
            T4Vlower(..) => "T4Vlower",
            FamU(..) => "FamU",
            FamV(..) => "FamV",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            JordanChain(_, n) | FamU(_, n) | FamV(_, n) => *n,
            Dim2U(..) | Dim2V(..) => 2,
            _ => 3,
        }
    }

    fn scalars(&self) -> Vec<&F> {
        match self {
            JordanChain(a, _) | FamU(a, _) | FamV(a, _) => vec![a],
            Dim2V(a) | T2R(a) | T2S(a) | T4Vupper(a) | T4Vlower(a) => vec![a],
            Dim2U(a, b) | T1U(a, b) | T3U(a, b) => vec![a, b],
            T2T(a, b, c) => vec![a, b, c],
            T1Y(a, b, c, d, e) | T3W(a, b, c, d, e) => vec![a, b, c, d, e],
        }
    }

    /// Checks the parameter constraints of the family.
    pub fn validate(&self) -> Result<()> {
        let fail = |why: &str| Err(Error::Constraint(format!("{}: {why}", self.name())));
        match self {
            JordanChain(_, 0) => fail("n must be at least 1"),
            FamU(_, n) | FamV(_, n) if *n < 2 => fail("n must be at least 2"),
            Dim2V(a) | T4Vupper(a) | T4Vlower(a) | FamV(a, _) if a.is_zero() => fail("a must be nonzero"),
            T1Y(.., e) if e.is_zero() => fail("e must be nonzero"),
            T3W(_, _, _, d, _) if d.is_zero() => fail("d must be nonzero"),
            T2T(_, b, c) if b.is_zero() && c.is_zero() => fail("b or c must be nonzero"),
            _ => Ok(()),
        }
    }
}

fn mat<F: Field>(rows: [[F; 3]; 3]) -> Matrix<F> {
    Matrix::from_rows(rows.into_iter().map(Vec::from).collect()).expect("3x3")
}

/// The module named by `label`, with `X1` in standard form.
pub fn construct<F: Field>(label: &CanonicalLabel<F>) -> Result<Representation<F>> {
    label.validate()?;
    let z = F::zero;
    let one = F::one;
    let x2 = match label.clone() {
        JordanChain(l, n) => return Representation::from_x2(Matrix::jordan_block(l, n)),
        Dim2U(a, b) => Matrix::from_rows(vec![vec![a.clone(), b], vec![z(), a]])?,
        Dim2V(a) => Matrix::from_rows(vec![vec![a.clone(), z()], vec![z(), -a]])?,
        T1U(a, b) => mat([[a.clone(), b, z()], [z(), a.clone(), one()], [z(), z(), -a]]),
        T1Y(a, b, c, d, e) => {
            let h = (a.clone() * a.clone() - d.clone() * d.clone()) / e.clone();
            mat([[a, b, c], [z(), d.clone(), e], [z(), h, -d]])
        }
        T2R(a) => mat([[a.clone(), z(), z()], [z(), a.clone(), z()], [z(), one(), a]]),
        T2S(a) => mat([[a.clone(), z(), one()], [z(), a.clone(), z()], [z(), z(), a]]),
        T2T(a, b, c) => mat([[a.clone(), z(), b], [z(), a.clone(), z()], [z(), c, a]]),
        T3U(a, b) => mat([[a.clone(), b, z()], [z(), a.clone(), z()], [one(), z(), -a]]),
        T3W(a, b, c, d, e) => {
            let g = (c.clone() * c.clone() - a.clone() * a.clone()) / d.clone();
            mat([[a.clone(), b, g], [z(), c, z()], [d, e, -a]])
        }
        T4Vupper(a) => mat([[a.clone(), z(), one()], [z(), -a.clone(), z()], [z(), z(), a]]),
        T4Vlower(a) => mat([[a.clone(), z(), z()], [z(), -a.clone(), z()], [z(), one(), -a]]),
        FamU(a, n) => chain_family(a.clone(), a, n),
        FamV(a, n) => chain_family(a.clone(), -a, n),
    };
    Representation::new(Matrix::e12(label.dim()), x2)
}

/// `diag(first, rest, ..., rest)` plus ones on the subdiagonal below the
/// second row.
fn chain_family<F: Field>(first: F, rest: F, n: usize) -> Matrix<F> {
    let mut m = Matrix::scalar(n, rest);
    m.set(0, 0, first);
    for i in 2..n {
        m.set(i, i - 1, F::one());
    }
    m
}

/// `Name(p1,p2,...)` with exact rational parameters.
impl<F: Field> fmt::Display for CanonicalLabel<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.scalars().iter().map(|x| x.to_string()).collect();
        if let JordanChain(_, n) | FamU(_, n) | FamV(_, n) = self {
            parts.push(n.to_string());
        }
        write!(f, "{}({})", self.name(), parts.join(","))
    }
}

impl FromStr for CanonicalLabel<Rational> {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let open = text
            .find('(')
            .ok_or_else(|| Error::Parse(format!("label {text:?}: expected Name(params)")))?;
        let inner = text[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("label {text:?}: missing closing parenthesis")))?;
        let name = &text[..open];
        let args: Vec<&str> = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner.split(',').map(str::trim).collect()
        };
        let arity = |k: usize| -> Result<()> {
            if args.len() == k {
                Ok(())
            } else {
                Err(Error::Parse(format!(
                    "label {name}: expected {k} parameters, got {}",
                    args.len()
                )))
            }
        };
        let q = |i: usize| parse_rational(args[i]);
        let size = |i: usize| -> Result<usize> {
            args[i]
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("label {name}: size {:?} is not a count", args[i])))
        };
        let label = match name {
            "JordanChain" | "FamU" | "FamV" => {
                arity(2)?;
                let (a, n) = (q(0)?, size(1)?);
                match name {
                    "JordanChain" => JordanChain(a, n),
                    "FamU" => FamU(a, n),
                    _ => FamV(a, n),
                }
            }
            "Dim2V" | "T2R" | "T2S" | "T4Vupper" | "T4Vlower" => {
                arity(1)?;
                let a = q(0)?;
                match name {
                    "Dim2V" => Dim2V(a),
                    "T2R" => T2R(a),
                    "T2S" => T2S(a),
                    "T4Vupper" => T4Vupper(a),
                    _ => T4Vlower(a),
                }
            }
            "Dim2U" | "T1U" | "T3U" => {
                arity(2)?;
                let (a, b) = (q(0)?, q(1)?);
                match name {
                    "Dim2U" => Dim2U(a, b),
                    "T1U" => T1U(a, b),
                    _ => T3U(a, b),
                }
            }
            "T2T" => {
                arity(3)?;
                T2T(q(0)?, q(1)?, q(2)?)
            }
            "T1Y" | "T3W" => {
                arity(5)?;
                let p = (q(0)?, q(1)?, q(2)?, q(3)?, q(4)?);
                if name == "T1Y" {
                    T1Y(p.0, p.1, p.2, p.3, p.4)
                } else {
                    T3W(p.0, p.1, p.2, p.3, p.4)
                }
            }
            other => return Err(Error::Parse(format!("unknown label {other:?}"))),
        };
        Ok(label)
    }
}
