//! Complete isomorphism invariants for the canonical labels, and the
//! classifier that maps a module to its canonical label.

use super::label::{construct, CanonicalLabel};
use super::theta::{detect_theta_family, theta_indecomposable, ThetaFamily};
use crate::error::{Error, Result};
use crate::exactmath::{split_spectrum, square_zero_standard_basis, ExactField, Field};
use crate::modtheory::{full_decompose, is_indecomposable, is_isomorphic, Representation};

use CanonicalLabel::*;

/// A complete isomorphism invariant: two labels name isomorphic modules
/// exactly when their keys are equal.
#[derive(Clone, PartialEq, Eq, Debug)]
enum IsoKey<F> {
    Jordan(F, usize),
    Dim2U(F, F),
    Dim2V(F),
    /// `(a, b*)`: everything in the first family is some `T1U(a, b*)`.
    Theta1(F, F),
    /// `(a, b = 0, c = 0, bc)` in the coordinates of `T2T(a, b, c)`.
    Theta2(F, bool, bool, F),
    /// `(c, b*)`: everything in the third family is some `T3U(c, b*)`.
    Theta3(F, F),
    Theta4Upper(F),
    Theta4Lower(F),
    FamU(F, usize),
    FamV(F, usize),
}

/// `b + c (a - d) / e`, the second coordinate of `T1U` isomorphic to
/// `T1Y(a, b, c, d, e)`.
fn theta1_b<F: Field>(a: &F, b: &F, c: &F, d: &F, e: &F) -> F {
    b.clone() + c.clone() * (a.clone() - d.clone()) / e.clone()
}

/// `(b d + c e - a e) / d`, the second coordinate of `T3U` isomorphic to
/// `T3W(a, b, c, d, e)`.
fn theta3_b<F: Field>(a: &F, b: &F, c: &F, d: &F, e: &F) -> F {
    (b.clone() * d.clone() + c.clone() * e.clone() - a.clone() * e.clone()) / d.clone()
}

fn theta2_key<F: Field>(a: &F, b: &F, c: &F) -> IsoKey<F> {
    IsoKey::Theta2(a.clone(), b.is_zero(), c.is_zero(), b.clone() * c.clone())
}

fn iso_key<F: Field>(label: &CanonicalLabel<F>) -> IsoKey<F> {
    let z = F::zero;
    match label {
        JordanChain(l, n) => IsoKey::Jordan(l.clone(), *n),
        Dim2U(a, b) => IsoKey::Dim2U(a.clone(), b.clone()),
        Dim2V(a) => IsoKey::Dim2V(a.clone()),
        T1U(a, b) => IsoKey::Theta1(a.clone(), b.clone()),
        T1Y(a, b, c, d, e) => IsoKey::Theta1(a.clone(), theta1_b(a, b, c, d, e)),
        T2R(a) => theta2_key(a, &z(), &F::one()),
        T2S(a) => theta2_key(a, &F::one(), &z()),
        T2T(a, b, c) => theta2_key(a, b, c),
        T3U(a, b) => IsoKey::Theta3(a.clone(), b.clone()),
        T3W(a, b, c, d, e) => IsoKey::Theta3(c.clone(), theta3_b(a, b, c, d, e)),
        T4Vupper(a) => IsoKey::Theta4Upper(a.clone()),
        T4Vlower(a) => IsoKey::Theta4Lower(a.clone()),
        // the small members of the unbounded families coincide with
        // dimension-2 and dimension-3 canonical forms
        FamU(a, 2) => IsoKey::Dim2U(a.clone(), z()),
        FamV(a, 2) => IsoKey::Dim2V(a.clone()),
        FamU(a, 3) => theta2_key(a, &z(), &F::one()),
        FamV(a, 3) => IsoKey::Theta4Lower(a.clone()),
        FamU(a, n) => IsoKey::FamU(a.clone(), *n),
        FamV(a, n) => IsoKey::FamV(a.clone(), *n),
    }
}

/// Whether two well-formed labels name isomorphic modules.
pub fn iso_criterion<F: Field>(l1: &CanonicalLabel<F>, l2: &CanonicalLabel<F>) -> bool {
    iso_key(l1) == iso_key(l2)
}

/// Result of classifying a module.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Classification<F> {
    Indecomposable(CanonicalLabel<F>),
    Decomposable(Vec<CanonicalLabel<F>>),
}

impl<F: Field> Classification<F> {
    pub fn labels(&self) -> Vec<&CanonicalLabel<F>> {
        match self {
            Classification::Indecomposable(l) => vec![l],
            Classification::Decomposable(ls) => ls.iter().collect(),
        }
    }
}

/// Classifies modules of dimension at most 3, and modules of any dimension
/// with `X1 = 0`. Every returned label is certified by an explicit
/// isomorphism test against the input.
pub fn classify<F: ExactField>(rep: &Representation<F>) -> Result<Classification<F>> {
    if rep.x1().is_zero() {
        return classify_x1_zero(rep);
    }
    if rep.dim() > 3 {
        return Err(Error::DimensionUnsupported(format!(
            "dimension {} with X1 ≠ 0 lies outside the classification",
            rep.dim()
        )));
    }
    if !is_indecomposable(rep)? {
        let mut labels = Vec::new();
        for part in full_decompose(rep)? {
            labels.extend(classify(&part.rep)?.labels().into_iter().cloned());
        }
        sort_labels(&mut labels);
        return Ok(Classification::Decomposable(labels));
    }
    let label = canonical_label(rep)?;
    if !is_isomorphic(&construct(&label)?, rep)? {
        return Err(Error::Canonicalization(format!(
            "{label} is not isomorphic to the input"
        )));
    }
    Ok(Classification::Indecomposable(label))
}

fn sort_labels<F: Field>(labels: &mut [CanonicalLabel<F>]) {
    labels.sort_by_key(|l| (l.dim(), l.to_string()));
}

/// `X1 = 0`: one Jordan chain per Jordan block of `X2`.
fn classify_x1_zero<F: ExactField>(rep: &Representation<F>) -> Result<Classification<F>> {
    let n = rep.dim();
    let split = split_spectrum(rep.x2(), "X2")?;
    let mut labels = Vec::new();
    for lambda in split.distinct_roots() {
        let shifted = rep.x2().shift(&lambda);
        // ranks[k] = rank (X2 - lambda)^k
        let mut ranks = vec![n];
        let mut power = crate::exactmath::Matrix::identity(n);
        for _ in 0..=n {
            power = &power * &shifted;
            ranks.push(power.rank());
        }
        for k in 1..=n {
            let at_least_k = ranks[k - 1] - ranks[k];
            let at_least_next = ranks[k] - ranks[k + 1];
            for _ in 0..at_least_k - at_least_next {
                labels.push(JordanChain(lambda.clone(), k));
            }
        }
    }
    if labels.len() == 1 {
        return Ok(Classification::Indecomposable(labels.remove(0)));
    }
    sort_labels(&mut labels);
    Ok(Classification::Decomposable(labels))
}

/// Canonical label of an indecomposable module of dimension 2 or 3 with
/// `X1 ≠ 0`.
fn canonical_label<F: ExactField>(rep: &Representation<F>) -> Result<CanonicalLabel<F>> {
    match rep.dim() {
        2 => {
            let form = square_zero_standard_basis(rep.x1())?;
            let x2 = rep.x2().conjugate_by(&form.basis)?;
            let (a, b) = (x2.get(0, 0).clone(), x2.get(0, 1).clone());
            let (c, d) = (x2.get(1, 0).clone(), x2.get(1, 1).clone());
            if !c.is_zero() {
                return Err(Error::RelationViolated {
                    relation: "dimension-2 shape: entry (2,1) must vanish".into(),
                    row: 1,
                    col: 0,
                    value: c.to_string(),
                });
            }
            if d == a {
                Ok(Dim2U(a, b))
            } else if d == -a.clone() {
                Ok(Dim2V(a))
            } else {
                Err(Error::RelationViolated {
                    relation: "dimension-2 shape: diagonal entries must satisfy d = ±a".into(),
                    row: 1,
                    col: 1,
                    value: d.to_string(),
                })
            }
        }
        3 => {
            let fam = detect_theta_family(rep)?;
            if !theta_indecomposable(&fam) {
                return Err(Error::Canonicalization(format!(
                    "family {} parameters say decomposable but End is local",
                    fam.index
                )));
            }
            Ok(theta_label(&fam))
        }
        n => Err(Error::DimensionUnsupported(format!("dimension {n}"))),
    }
}

/// Canonical label of an indecomposable member of a family.
pub fn theta_label<F: Field>(f: &ThetaFamily<F>) -> CanonicalLabel<F> {
    let (a, b, c, d, e) = (&f.a, &f.b, &f.c, &f.d, &f.e);
    match f.index {
        1 => T1U(a.clone(), theta1_b(a, b, c, d, e)),
        2 if c.is_zero() => T2R(a.clone()),
        2 if d.is_zero() => T2S(a.clone()),
        2 => T2T(a.clone(), c.clone() * d.clone(), F::one()),
        3 => T3U(c.clone(), theta3_b(a, b, c, d, e)),
        _ if e == a => T4Vupper(a.clone()),
        _ => T4Vlower(a.clone()),
    }
}

/// For 2-dimensional modules: `X1 ≠ 0` implies indecomposable.
pub fn dim2_nondegenerate_check<F: Field>(rep: &Representation<F>) -> Result<bool> {
    if rep.dim() != 2 {
        return Err(Error::DimensionUnsupported(format!(
            "expected dimension 2, got {}",
            rep.dim()
        )));
    }
    Ok(rep.x1().is_zero() || is_indecomposable(rep)?)
}
