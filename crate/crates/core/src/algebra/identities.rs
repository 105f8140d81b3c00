//! Exhaustive verification of the structural identities of the super Jordan
//! plane by exact normal-form computation.

use super::pbw::{PbwElement, PbwMonomial};
use crate::exactmath::Field;

/// Outcome of one identity over all instances in range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub instances: usize,
    /// First failing instance, rendered as `params: lhs != rhs`.
    pub counterexample: Option<String>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }
}

struct Checker<'a, F> {
    name: &'a str,
    instances: usize,
    counterexample: Option<String>,
    _marker: std::marker::PhantomData<F>,
}

impl<'a, F: Field> Checker<'a, F> {
    fn new(name: &'a str) -> Self {
        Checker {
            name,
            instances: 0,
            counterexample: None,
            _marker: std::marker::PhantomData,
        }
    }

    fn case(&mut self, params: impl FnOnce() -> String, lhs: PbwElement<F>, rhs: PbwElement<F>) {
        self.instances += 1;
        if self.counterexample.is_none() && lhs != rhs {
            self.counterexample = Some(format!("{}: {lhs} != {rhs}", params()));
        }
    }

    fn finish(self) -> IdentityCheck {
        IdentityCheck {
            name: self.name.to_string(),
            instances: self.instances,
            counterexample: self.counterexample,
        }
    }
}

fn mono<F: Field>(a: u8, b: u32, c: u32) -> PbwElement<F> {
    PbwElement::monomial(PbwMonomial::new(a, b, c))
}

/// `n! / (n - j)!` as a field element.
fn falling_factorial<F: Field>(n: u32, j: u32) -> F {
    ((n - j + 1)..=n).fold(F::one(), |acc, k| acc * F::from_usize_exact(k as usize))
}

/// `sum_j n!/(n-j)! s^j z^(n-j)`, the common right factor of both
/// commutation formulas for powers of `z = t - lambda`.
fn z_sum<F: Field>(n: u32, s_pows: &[PbwElement<F>], z_pows: &[PbwElement<F>]) -> PbwElement<F> {
    (0..=n).fold(PbwElement::zero(), |acc, j| {
        let term = s_pows[j as usize].normal_mul(&z_pows[(n - j) as usize]);
        &acc + &term.scale(&falling_factorial(n, j))
    })
}

/// Verifies every defining consequence of the relations with
/// `b <= bmax`, `c <= cmax`, `n <= nmax`, and `z = t - lambda`.
pub fn check_identities<F: Field>(bmax: u32, cmax: u32, nmax: u32, lambda: &F) -> IdentityReport {
    let x1 = PbwElement::<F>::x1();
    let x2 = PbwElement::<F>::x2();
    let s = PbwElement::<F>::s();
    let t = PbwElement::<F>::t();
    let x1x2 = x1.normal_mul(&x2);
    let z = &t - &PbwElement::scalar(lambda.clone());
    let top = nmax.max(1) + 1;
    let s_pows: Vec<_> = (0..=top).map(|k| s.pow(k)).collect();
    let z_pows: Vec<_> = (0..=top).map(|k| z.pow(k)).collect();
    let mut checks = Vec::new();

    let mut c = Checker::new("x21 x1 = x1 x21");
    c.case(String::new, s.normal_mul(&x1), x1.normal_mul(&s));
    checks.push(c.finish());

    let mut c = Checker::new("x2^2 x1 = x1 x2^2 + x1 x2 x1");
    c.case(
        String::new,
        t.normal_mul(&x1),
        &x1.normal_mul(&t) + &x1x2.normal_mul(&x1),
    );
    checks.push(c.finish());

    let mut c = Checker::new("x21 x2^2 = (x2^2 - x21) x21");
    c.case(String::new, s.normal_mul(&t), (&t - &s).normal_mul(&s));
    checks.push(c.finish());

    let mut c = Checker::new("[t, s^n] = n s^(n+1)");
    for n in 1..=nmax {
        let sn = &s_pows[n as usize];
        c.case(
            || format!("n={n}"),
            t.commutator(sn),
            s_pows[n as usize + 1].scale(&F::from_usize_exact(n as usize)),
        );
    }
    checks.push(c.finish());

    let mut c = Checker::new("x1 s = s x1");
    c.case(String::new, x1.normal_mul(&s), s.normal_mul(&x1));
    checks.push(c.finish());

    let mut c = Checker::new("x2 t = t x2");
    c.case(String::new, x2.normal_mul(&t), t.normal_mul(&x2));
    checks.push(c.finish());

    let mut c = Checker::new("t x1 = x1 (t + s)");
    c.case(String::new, t.normal_mul(&x1), x1.normal_mul(&(&t + &s)));
    checks.push(c.finish());

    let mut c = Checker::new("x21^b x2^c = (x2 - b x1) x21^b x2^(c-1)");
    for b in 1..=bmax {
        for e in 1..=cmax {
            let factor = &x2 - &x1.scale(&F::from_usize_exact(b as usize));
            c.case(
                || format!("b={b}, c={e}"),
                mono(0, b, e),
                factor.normal_mul(&mono(0, b, e - 1)),
            );
        }
    }
    checks.push(c.finish());

    let mut c = Checker::new("x1 x21^b x2^c = x1 x2 x21^b x2^(c-1)");
    for b in 1..=bmax {
        for e in 1..=cmax {
            c.case(
                || format!("b={b}, c={e}"),
                mono(1, b, e),
                x1x2.normal_mul(&mono(0, b, e - 1)),
            );
        }
    }
    checks.push(c.finish());

    let mut c = Checker::new("z^n x1 = x1 sum_j n!/(n-j)! s^j z^(n-j)");
    for n in 1..=nmax {
        let sum = z_sum(n, &s_pows, &z_pows);
        c.case(
            || format!("n={n}, lambda={lambda}"),
            z_pows[n as usize].normal_mul(&x1),
            x1.normal_mul(&sum),
        );
    }
    checks.push(c.finish());

    let mut c = Checker::new("z^n x1 x2 = x1 x2 sum_j n!/(n-j)! s^j z^(n-j)");
    for n in 1..=nmax {
        let sum = z_sum(n, &s_pows, &z_pows);
        c.case(
            || format!("n={n}, lambda={lambda}"),
            z_pows[n as usize].normal_mul(&x1x2),
            x1x2.normal_mul(&sum),
        );
    }
    checks.push(c.finish());

    let mut c = Checker::new("x1 z s^n = x1 s^n z + n x1 s^(n+1)");
    for n in 1..=nmax {
        let sn = &s_pows[n as usize];
        let rhs = &x1.normal_mul(sn).normal_mul(&z)
            + &x1
                .normal_mul(&s_pows[n as usize + 1])
                .scale(&F::from_usize_exact(n as usize));
        c.case(
            || format!("n={n}, lambda={lambda}"),
            x1.normal_mul(&z).normal_mul(sn),
            rhs,
        );
    }
    checks.push(c.finish());

    IdentityReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{ratio, rational};
    use crate::Element;

    #[test]
    fn all_identities_hold_at_small_bounds() {
        for lambda in [rational(0), rational(1), ratio(-3, 2)] {
            let report = check_identities(3, 3, 4, &lambda);
            for c in &report.checks {
                assert!(c.passed(), "{}: {:?}", c.name, c.counterexample);
                assert!(c.instances > 0);
            }
        }
    }

    #[test]
    fn z_squared_x1_at_one() {
        // z^2 x1 = x1 (z^2 + 2 s z + 2 s^2)
        let z = &Element::t() - &Element::one();
        let x1 = Element::x1();
        let s = Element::s();
        let inner = &(&z.pow(2) + &s.normal_mul(&z).scale(&rational(2))) + &s.pow(2).scale(&rational(2));
        assert_eq!(z.pow(2).normal_mul(&x1), x1.normal_mul(&inner));
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial::<crate::Rational>(5, 0), rational(1));
        assert_eq!(falling_factorial::<crate::Rational>(5, 2), rational(20));
        assert_eq!(falling_factorial::<crate::Rational>(4, 4), rational(24));
    }

    #[test]
    fn counterexample_is_reported() {
        let mut c = Checker::<crate::Rational>::new("bogus");
        c.case(|| "k=1".into(), Element::x1(), Element::x2());
        let done = c.finish();
        assert!(!done.passed());
        assert!(done.counterexample.unwrap().starts_with("k=1"));
    }
}
