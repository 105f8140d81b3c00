//! The super Jordan plane as a right module over the Jordan plane, which
//! sits inside it via `y1 -> t = x2^2` and `y2 -> s = x21`.

use std::collections::HashMap;

use super::jordan::{jordan_mul, JordanElement, JordanMonomial};
use super::pbw::{PbwElement, PbwMonomial};
use crate::exactmath::Field;

/// `m = 1·one + x1·x1 + x2·x2 + x1x2·x1x2`, coefficients acting on the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightDecomposition<F> {
    pub one: JordanElement<F>,
    pub x1: JordanElement<F>,
    pub x2: JordanElement<F>,
    pub x1x2: JordanElement<F>,
}

impl<F: Field> RightDecomposition<F> {
    /// Multiplies the decomposition back out inside the super Jordan plane.
    pub fn recombine(&self) -> PbwElement<F> {
        let mut images = Embedder::new();
        let x1 = PbwElement::x1();
        let x2 = PbwElement::x2();
        let gens = [
            (PbwElement::one(), &self.one),
            (x1.clone(), &self.x1),
            (x2.clone(), &self.x2),
            (x1.normal_mul(&x2), &self.x1x2),
        ];
        gens.iter().fold(PbwElement::zero(), |acc, (g, coeff)| {
            &acc + &g.normal_mul(&images.embed(coeff))
        })
    }

    /// Coefficients as `(generator name, coefficient)` pairs, zeros skipped.
    pub fn nonzero_parts(&self) -> Vec<(&'static str, &JordanElement<F>)> {
        [("1", &self.one), ("x1", &self.x1), ("x2", &self.x2), ("x1·x2", &self.x1x2)]
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }
}

/// `y2^b y1^k` in normal form: the preimage of `s^b t^k`.
fn s_pow_t_pow<F: Field>(b: u32, k: u32) -> JordanElement<F> {
    jordan_mul(
        &JordanElement::monomial(JordanMonomial::new(0, b)),
        &JordanElement::monomial(JordanMonomial::new(k, 0)),
    )
}

/// Writes a PBW monomial over the generators `1, x1, x2, x1 x2`.
pub fn right_module_generators<F: Field>(m: PbwMonomial) -> RightDecomposition<F> {
    let (a, b, c) = (m.x1_exp(), m.x21_exp(), m.x2_exp());
    let alpha = s_pow_t_pow::<F>(b, c / 2);
    let mut out = RightDecomposition {
        one: JordanElement::zero(),
        x1: JordanElement::zero(),
        x2: JordanElement::zero(),
        x1x2: JordanElement::zero(),
    };
    match (a, c % 2) {
        (0, 0) => out.one = alpha,
        (1, 0) => out.x1 = alpha,
        // x21^b x2^c = (x2 - b x1) x21^b x2^(c-1)
        (0, _) => {
            out.x1 = alpha.scale(&-F::from_usize_exact(b as usize));
            out.x2 = alpha;
        }
        // x1 x21^b x2^c = x1 x2 x21^b x2^(c-1)
        _ => out.x1x2 = alpha,
    }
    out
}

/// Memoized images `t^a s^b` of the Jordan monomials `y1^a y2^b`.
struct Embedder<F> {
    cache: HashMap<(u32, u32), PbwElement<F>>,
}

impl<F: Field> Embedder<F> {
    fn new() -> Self {
        Embedder {
            cache: HashMap::new(),
        }
    }

    fn monomial(&mut self, a: u32, b: u32) -> PbwElement<F> {
        if let Some(v) = self.cache.get(&(a, b)) {
            return v.clone();
        }
        let v = if a == 0 {
            PbwElement::monomial(PbwMonomial::new(0, b, 0))
        } else {
            self.monomial(a - 1, b).lmul_x2().lmul_x2()
        };
        self.cache.insert((a, b), v.clone());
        v
    }

    fn embed(&mut self, u: &JordanElement<F>) -> PbwElement<F> {
        u.terms().fold(PbwElement::zero(), |acc, (m, c)| {
            &acc + &self.monomial(m.y1, m.y2).scale(c)
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub pairs_checked: usize,
    /// First pair `((b, k), (b', k'))` of exponents of `s^b t^k` whose
    /// products disagree.
    pub failure: Option<((u32, u32), (u32, u32))>,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks that `y1 -> t`, `y2 -> s` is multiplicative on all pairs of
/// monomials `s^b t^k` with `b + k <= dmax`.
pub fn embedding_check<F: Field>(dmax: u32) -> EmbeddingReport {
    let exps: Vec<(u32, u32)> = (0..=dmax)
        .flat_map(|d| (0..=d).map(move |b| (b, d - b)))
        .collect();
    let preimages: HashMap<(u32, u32), JordanElement<F>> =
        exps.iter().map(|&(b, k)| ((b, k), s_pow_t_pow(b, k))).collect();
    let mut images = Embedder::<F>::new();
    let mut pairs = 0;
    for &p in &exps {
        for &q in &exps {
            pairs += 1;
            let lhs = PbwElement::<F>::monomial(PbwMonomial::new(0, p.0, 2 * p.1))
                .normal_mul(&PbwElement::monomial(PbwMonomial::new(0, q.0, 2 * q.1)));
            let rhs = images.embed(&jordan_mul(&preimages[&p], &preimages[&q]));
            if lhs != rhs {
                return EmbeddingReport {
                    pairs_checked: pairs,
                    failure: Some((p, q)),
                };
            }
        }
    }
    EmbeddingReport {
        pairs_checked: pairs,
        failure: None,
    }
}
