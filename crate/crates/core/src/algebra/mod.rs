//! Normal-form arithmetic in the super Jordan plane and the Jordan plane.

mod eval;
mod generators;
mod identities;
mod jordan;
mod pbw;
mod words;

use std::fmt::Display;

pub use eval::evaluate_in_rep;
pub use generators::{embedding_check, right_module_generators, EmbeddingReport, RightDecomposition};
pub use identities::{check_identities, IdentityCheck, IdentityReport};
pub use jordan::{embed_jordan, jordan_mul, JordanElement, JordanMonomial};
pub use pbw::{normal_mul, PbwElement, PbwMonomial};
pub use words::{reduce_word, reduce_word_with, GenWord, Generator, Strategy};

/// Renders `±coef·monomial` terms joined by ` + ` / ` − `. Integer
/// coefficients print bare, fractions as `(p/q)`, and unit monomials
/// (`1`) are dropped from the product.
pub(crate) fn format_terms<'a, M, F>(terms: impl Iterator<Item = (&'a M, &'a F)>) -> String
where
    M: Display + 'a,
    F: Display + 'a,
{
    let mut out = String::new();
    for (m, c) in terms {
        let text = c.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, text),
        };
        let sign = if neg { "−" } else { "+" };
        if out.is_empty() {
            out.push_str(sign);
        } else {
            out.push(' ');
            out.push_str(sign);
            out.push(' ');
        }
        if mag.contains('/') {
            out.push_str(&format!("({mag})"));
        } else {
            out.push_str(&mag);
        }
        let mono = m.to_string();
        if mono != "1" {
            out.push('·');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
