//! Words in the generators and a genuine rewriting system reducing them.
//!
//! The rule set, over the letters `x1 < x21 < x2`:
//!
//! ```text
//! x1 x1  -> 0
//! x2 x1  -> x21 - x1 x2
//! x21 x1 -> x1 x21
//! x2 x21 -> x21 x2 + x1 x21
//! ```
//!
//! Irreducible words are exactly `x1^a x21^b x2^c`, a <= 1. Whether the
//! result depends on which redex is contracted first is what the
//! [`Strategy`] knob lets callers test.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::pbw::{PbwElement, PbwMonomial};
use crate::error::Error;
use crate::exactmath::Field;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Generator {
    X1,
    X2,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::X1 => "x1",
            Generator::X2 => "x2",
        })
    }
}

/// A word in `x1`, `x2`; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GenWord(pub Vec<Generator>);

impl GenWord {
    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    /// All `2^len` words of the given length, in lexicographic order.
    pub fn all_of_length(len: usize) -> Vec<GenWord> {
        (0..1usize << len)
            .map(|bits| {
                GenWord(
                    (0..len)
                        .map(|i| {
                            if bits >> (len - 1 - i) & 1 == 0 {
                                Generator::X1
                            } else {
                                Generator::X2
                            }
                        })
                        .collect(),
                )
            })
            .collect()
    }
}

/// Whitespace-separated letters, e.g. `"x1 x2 x1"`.
impl FromStr for GenWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        s.split_whitespace()
            .map(|tok| match tok {
                "x1" => Ok(Generator::X1),
                "x2" => Ok(Generator::X2),
                other => Err(Error::Parse(format!(
                    "unknown generator {other:?} (expected x1 or x2)"
                ))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(GenWord)
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Generator::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
enum Letter {
    X1,
    S,
    X2,
}

/// Which redex of a word is contracted first.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

type Rhs = &'static [(i64, &'static [Letter])];

fn rule(pair: (Letter, Letter)) -> Option<Rhs> {
    use Letter::*;
    match pair {
        (X1, X1) => Some(&[]),
        (X2, X1) => Some(&[(1, &[S]), (-1, &[X1, X2])]),
        (S, X1) => Some(&[(1, &[X1, S])]),
        (X2, S) => Some(&[(1, &[S, X2]), (1, &[X1, S])]),
        _ => None,
    }
}

fn find_redex(word: &[Letter], strategy: Strategy) -> Option<usize> {
    let mut positions = (0..word.len().saturating_sub(1)).filter(|&i| rule((word[i], word[i + 1])).is_some());
    match strategy {
        Strategy::Leftmost => positions.next(),
        Strategy::Rightmost => positions.last(),
    }
}

fn to_monomial(word: &[Letter]) -> PbwMonomial {
    let count = |l| word.iter().filter(|&&x| x == l).count() as u32;
    PbwMonomial::new(count(Letter::X1) as u8, count(Letter::S), count(Letter::X2))
}

/// Reduces a word with the rewriting system under the given strategy.
pub fn reduce_word_with<F: Field>(word: &GenWord, strategy: Strategy) -> PbwElement<F> {
    let start: Vec<Letter> = word
        .0
        .iter()
        .map(|g| match g {
            Generator::X1 => Letter::X1,
            Generator::X2 => Letter::X2,
        })
        .collect();
    let mut pending: BTreeMap<Vec<Letter>, F> = BTreeMap::from([(start, F::one())]);
    let mut result = PbwElement::zero();
    while let Some((w, c)) = pending.pop_first() {
        let Some(i) = find_redex(&w, strategy) else {
            result.add_term(to_monomial(&w), c);
            continue;
        };
        for (k, rhs) in rule((w[i], w[i + 1])).unwrap() {
            let mut next = Vec::with_capacity(w.len());
            next.extend_from_slice(&w[..i]);
            next.extend_from_slice(rhs);
            next.extend_from_slice(&w[i + 2..]);
            let add = c.clone() * F::int(*k);
            let slot = pending.entry(next).or_insert_with(F::zero);
            *slot = slot.clone() + add;
        }
        pending.retain(|_, v| !v.is_zero());
    }
    result
}

/// Image of a word in the PBW basis, computed by left multiplication.
pub fn reduce_word<F: Field>(word: &GenWord) -> PbwElement<F> {
    word.0.iter().rev().fold(PbwElement::one(), |acc, g| match g {
        Generator::X1 => acc.lmul_x1(),
        Generator::X2 => acc.lmul_x2(),
    })
}
