//! Ground truth by counting words directly.
//!
//! [`is_valid`] states each family's restriction on maximal runs and adjacent
//! pairs. [`ExhaustiveCounter`] applies it to every word of a given length;
//! [`count_automaton`] counts the same language with a hand-built automaton
//! and scales to long words. Word length `L` corresponds to index `n = L + 1`.

mod dfa;
mod exhaustive;

pub use dfa::{build_dfa, count_automaton, count_automaton_by_marks, count_automaton_prefix, Dfa};
pub use exhaustive::{
    count_exhaustive, count_marked_exhaustive, ExhaustiveCounter, DEFAULT_BUDGET,
};

use std::fmt;
use std::str::FromStr;

use crate::cases::CaseSpec;
use crate::error::{Error, Result};

/// A word over `{0, ..., s-1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    /// Digits run together when every letter is below 10, otherwise
    /// comma-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&c| c < 10) {
            for c in &self.0 {
                write!(f, "{c}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Word {
    type Err = std::num::ParseIntError;

    /// Accepts `"0120"` or `"0,1,12,0"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.contains(',') {
            return s
                .split(',')
                .map(|p| p.trim().parse())
                .collect::<Result<_, _>>()
                .map(Word);
        }
        s.chars()
            .map(|c| c.to_string().parse())
            .collect::<Result<_, _>>()
            .map(Word)
    }
}

/// Whether `word` belongs to the family's language over the alphabet of size
/// `alphabet_size(m)`.
pub fn is_valid(spec: CaseSpec, m: u32, word: &[u32]) -> Result<bool> {
    let alphabet = spec.alphabet_size(m);
    if let Some(&letter) = word.iter().find(|&&c| c >= alphabet) {
        return Err(Error::LetterOutOfRange { letter, alphabet });
    }
    Ok(satisfies(spec, word))
}

/// Maximal runs as `(letter, length)`.
fn runs(word: &[u32]) -> impl Iterator<Item = (u32, usize)> + '_ {
    let mut i = 0;
    std::iter::from_fn(move || {
        let &letter = word.get(i)?;
        let start = i;
        while i < word.len() && word[i] == letter {
            i += 1;
        }
        Some((letter, i - start))
    })
}

/// The restriction itself, with letters assumed in range.
pub(crate) fn satisfies(spec: CaseSpec, word: &[u32]) -> bool {
    match spec {
        CaseSpec::DistinctAdjacent { a } => word.windows(2).all(|p| !(p[0] == p[1] && p[0] < a)),
        CaseSpec::EvenRuns { a } => runs(word).all(|(c, len)| c >= a || len % 2 == 0),
        CaseSpec::AvoidZeroPairs { b, .. } => word
            .windows(2)
            .all(|p| !(p[0] == 0 && (1..=b).contains(&p[1]))),
        CaseSpec::OneZeroBlocks => {
            // a 1-run is a single 1 directly followed by a 0-run; a 0-run is
            // directly preceded by a 1
            let mut prev: Option<u32> = None;
            let mut pending_one = false;
            for (c, len) in runs(word) {
                if pending_one && c != 0 {
                    return false;
                }
                pending_one = false;
                match c {
                    1 if len != 1 => return false,
                    1 => pending_one = true,
                    0 if prev != Some(1) => return false,
                    _ => {}
                }
                prev = Some(c);
            }
            !pending_one
        }
        CaseSpec::EvenZeroTripleOne => runs(word).all(|(c, len)| match c {
            0 => len % 2 == 0,
            1 => len % 3 == 0,
            _ => true,
        }),
    }
}
