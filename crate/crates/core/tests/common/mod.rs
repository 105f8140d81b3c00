//! Shared generators and independent oracles for the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sjplane::algebra::{GenWord, Generator, PbwMonomial};
use sjplane::classify::construct;
use sjplane::classify::CanonicalLabel::{self, *};
use sjplane::exactmath::{ratio, rational};
use sjplane::{Label, Mat, Rational, Rep};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational in [-5, 5] with denominator 1, 2 or 3.
pub fn rand_q(rng: &mut impl Rng) -> Rational {
    let d = rng.gen_range(1..=3);
    ratio(rng.gen_range(-5 * d..=5 * d), d)
}

pub fn rand_nonzero_q(rng: &mut impl Rng) -> Rational {
    loop {
        let q = rand_q(rng);
        if q != rational(0) {
            return q;
        }
    }
}

/// `L U Q` with unit-triangular `L`, `U` and a permutation `Q`: always
/// invertible, entries stay small.
pub fn rand_invertible(rng: &mut impl Rng, n: usize) -> Mat {
    let mut l = Mat::identity(n);
    let mut u = Mat::identity(n);
    for i in 0..n {
        for j in 0..i {
            l.set(i, j, rational(rng.gen_range(-2..=2)));
            u.set(j, i, rational(rng.gen_range(-2..=2)));
        }
        u.set(i, i, if rng.gen_bool(0.5) { rational(1) } else { rational(-1) });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let q = Mat::from_fn(n, n, |i, j| if perm[j] == i { rational(1) } else { rational(0) });
    &(&l * &u) * &q
}

pub const THREE_DIM_FAMILIES: [&str; 9] = [
    "T1U", "T1Y", "T2R", "T2S", "T2T", "T3U", "T3W", "T4Vupper", "T4Vlower",
];

/// A random label of the named family; constraints (and indecomposability
/// for the 3-dimensional families) are respected.
pub fn rand_label(rng: &mut impl Rng, family: &str) -> Label {
    label_with(rng, family, rand_q)
}

/// Like [`rand_label`] but with parameters in {-1, 0, 1, 2}, so that
/// distinct labels often name isomorphic modules.
pub fn rand_small_label(rng: &mut impl Rng, family: &str) -> Label {
    label_with(rng, family, |r| rational(r.gen_range(-1..=2)))
}

fn label_with<R: Rng>(rng: &mut R, family: &str, pick: impl Fn(&mut R) -> Rational) -> Label {
    let q = |r: &mut R| pick(r);
    let nz = |r: &mut R| loop {
        let x = pick(r);
        if x != rational(0) {
            return x;
        }
    };
    match family {
        "JordanChain" => JordanChain(q(rng), rng.gen_range(1..=4)),
        "JordanChain2" => JordanChain(q(rng), 2),
        "Dim2U" => Dim2U(q(rng), q(rng)),
        "Dim2V" => Dim2V(nz(rng)),
        "T1U" => T1U(q(rng), q(rng)),
        "T1Y" => T1Y(q(rng), q(rng), q(rng), q(rng), nz(rng)),
        "T2R" => T2R(q(rng)),
        "T2S" => T2S(q(rng)),
        "T2T" => {
            let (b, c) = match rng.gen_range(0..3) {
                0 => (nz(rng), rational(0)),
                1 => (rational(0), nz(rng)),
                _ => (nz(rng), nz(rng)),
            };
            T2T(q(rng), b, c)
        }
        "T3U" => T3U(q(rng), q(rng)),
        "T3W" => T3W(q(rng), q(rng), q(rng), nz(rng), q(rng)),
        "T4Vupper" => T4Vupper(nz(rng)),
        "T4Vlower" => T4Vlower(nz(rng)),
        "FamU" => FamU(q(rng), rng.gen_range(2..=5)),
        "FamV" => FamV(nz(rng), rng.gen_range(2..=5)),
        other => panic!("unknown family {other}"),
    }
}

pub const ALL_FAMILIES: [&str; 15] = [
    "JordanChain", "Dim2U", "Dim2V", "T1U", "T1Y", "T2R", "T2S", "T2T", "T3U", "T3W",
    "T4Vupper", "T4Vlower", "FamU", "FamV", "JordanChain2",
];

/// A representation isomorphic to a direct sum of random canonical modules,
/// in a random basis, with total dimension at most `max_dim`.
pub fn rand_valid_rep(rng: &mut impl Rng, max_dim: usize) -> (Rep, Vec<Label>) {
    loop {
        let mut labels = Vec::new();
        let mut dim = 0;
        let parts = rng.gen_range(1..=3);
        for _ in 0..parts {
            let fam = ALL_FAMILIES[rng.gen_range(0..ALL_FAMILIES.len())];
            let l = rand_label(rng, fam);
            if dim + l.dim() <= max_dim {
                dim += l.dim();
                labels.push(l);
            }
        }
        if labels.is_empty() {
            continue;
        }
        let reps: Vec<Rep> = labels.iter().map(|l| construct(l).unwrap()).collect();
        let refs: Vec<&Rep> = reps.iter().collect();
        let sum = Rep::direct_sum(&refs);
        let p = rand_invertible(rng, dim);
        return (sum.conjugate(&p).unwrap(), labels);
    }
}

pub fn rand_word(rng: &mut impl Rng, len: usize) -> GenWord {
    GenWord(
        (0..len)
            .map(|_| if rng.gen_bool(0.5) { Generator::X1 } else { Generator::X2 })
            .collect(),
    )
}

/// Words whose images sum to the monomial `x1^a x21^b x2^c`, expanding
/// `x21 = x1 x2 + x2 x1`.
pub fn monomial_as_words(m: PbwMonomial) -> Vec<GenWord> {
    let mut words = vec![vec![Generator::X1; m.x1_exp() as usize]];
    for _ in 0..m.x21_exp() {
        words = words
            .into_iter()
            .flat_map(|w| {
                let mut a = w.clone();
                a.extend([Generator::X1, Generator::X2]);
                let mut b = w;
                b.extend([Generator::X2, Generator::X1]);
                [a, b]
            })
            .collect();
    }
    for w in &mut words {
        w.extend(std::iter::repeat(Generator::X2).take(m.x2_exp() as usize));
    }
    words.into_iter().map(GenWord).collect()
}

/// Polynomials in `u` as coefficient vectors, for the differential-operator
/// model of the Jordan plane: `y1 = u^2 d/du`, `y2 = u`.
pub mod jordan_model {
    use sjplane::exactmath::rational;
    use sjplane::{JordanElem, Rational};

    pub type UPoly = Vec<Rational>;

    fn y1(p: &UPoly) -> UPoly {
        // u^2 * p'
        let mut out = vec![rational(0); p.len() + 1];
        for (k, c) in p.iter().enumerate().skip(1) {
            out[k + 1] = &out[k + 1] + c * rational(k as i64);
        }
        out
    }

    fn y2(p: &UPoly) -> UPoly {
        let mut out = vec![rational(0)];
        out.extend(p.iter().cloned());
        out
    }

    fn add(a: &mut UPoly, b: &UPoly, c: &Rational) {
        if a.len() < b.len() {
            a.resize(b.len(), rational(0));
        }
        for (x, y) in a.iter_mut().zip(b) {
            *x = &*x + y * c;
        }
    }

    fn trim(mut p: UPoly) -> UPoly {
        while p.last().is_some_and(|c| *c == rational(0)) {
            p.pop();
        }
        p
    }

    /// The action of `u` on `p`: monomials `y1^a y2^b` act as `Y1^a Y2^b`.
    pub fn act(u: &JordanElem, p: &UPoly) -> UPoly {
        let mut out = Vec::new();
        for (m, c) in u.terms() {
            let mut v = p.clone();
            for _ in 0..m.y2 {
                v = y2(&v);
            }
            for _ in 0..m.y1 {
                v = y1(&v);
            }
            add(&mut out, &v, c);
        }
        trim(out)
    }

    pub fn monomial(k: usize) -> UPoly {
        let mut p = vec![rational(0); k + 1];
        p[k] = rational(1);
        p
    }
}

pub fn label_reps(labels: &[CanonicalLabel<Rational>]) -> Vec<Rep> {
    labels.iter().map(|l| construct(l).unwrap()).collect()
}
