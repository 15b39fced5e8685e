use num_bigint::BigInt;
use rayon::prelude::*;

use super::{satisfies, Word};
use crate::cases::CaseSpec;
use crate::error::{Error, Result};

/// Default cap on the number of words a single enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

/// Brute-force counting by visiting every word of a given length.
///
/// The search space is split by word prefix; with `parallelism > 1` the
/// prefixes are scanned on a dedicated thread pool and the partial results
/// merged in prefix order, so results never depend on scheduling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExhaustiveCounter {
    pub budget: u64,
    pub parallelism: usize,
}

impl Default for ExhaustiveCounter {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            parallelism: 1,
        }
    }
}

impl ExhaustiveCounter {
    pub fn new(budget: u64, parallelism: usize) -> Self {
        Self {
            budget,
            parallelism: parallelism.max(1),
        }
    }

    /// `s^len`, saturating.
    pub fn word_count(alphabet: u32, len: usize) -> u128 {
        let mut total: u128 = 1;
        for _ in 0..len {
            total = total.saturating_mul(u128::from(alphabet));
        }
        total
    }

    pub fn within_budget(&self, alphabet: u32, len: usize) -> bool {
        Self::word_count(alphabet, len) <= u128::from(self.budget)
    }

    fn check_budget(&self, alphabet: u32, len: usize) -> Result<()> {
        let words = Self::word_count(alphabet, len);
        if words > u128::from(self.budget) {
            return Err(Error::BudgetExceeded {
                words,
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// Valid words of length `len`; equals `f_m(len + 1)`.
    pub fn count(&self, spec: CaseSpec, m: u32, len: usize) -> Result<BigInt> {
        let s = spec.alphabet_size(m);
        self.check_budget(s, len)?;
        let total = self.scan(
            s,
            len,
            || 0u64,
            |acc, w| {
                if satisfies(spec, w) {
                    *acc += 1;
                }
            },
            |a, b| a + b,
        );
        Ok(BigInt::from(total))
    }

    /// Valid words of length `len` by number of marked letters,
    /// `[c_m(len+1, j+1) for j in 0..=len]`.
    pub fn marked_histogram(&self, spec: CaseSpec, m: u32, len: usize) -> Result<Vec<BigInt>> {
        let marked = spec.marked_letter(m).ok_or(Error::NoMarkedLetter)?;
        let s = spec.alphabet_size(m);
        self.check_budget(s, len)?;
        let hist = self.scan(
            s,
            len,
            || vec![0u64; len + 1],
            |acc, w| {
                if satisfies(spec, w) {
                    acc[w.iter().filter(|&&c| c == marked).count()] += 1;
                }
            },
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
        Ok(hist.into_iter().map(BigInt::from).collect())
    }

    /// Valid words of length `len` with exactly `marks` marked letters.
    pub fn count_marked(&self, spec: CaseSpec, m: u32, len: usize, marks: usize) -> Result<BigInt> {
        let hist = self.marked_histogram(spec, m, len)?;
        Ok(hist.get(marks).cloned().unwrap_or_default())
    }

    /// All valid words of length `len` in lexicographic order.
    pub fn list(&self, spec: CaseSpec, m: u32, len: usize) -> Result<Vec<Word>> {
        let s = spec.alphabet_size(m);
        self.check_budget(s, len)?;
        Ok(self.scan(
            s,
            len,
            Vec::new,
            |acc, w| {
                if satisfies(spec, w) {
                    acc.push(Word(w.to_vec()));
                }
            },
            |mut a, mut b| {
                a.append(&mut b);
                a
            },
        ))
    }

    fn scan<A: Send>(
        &self,
        alphabet: u32,
        len: usize,
        init: impl Fn() -> A + Sync,
        visit: impl Fn(&mut A, &[u32]) + Sync,
        merge: impl Fn(A, A) -> A + Sync,
    ) -> A {
        let prefix_len = if self.parallelism > 1 {
            let target = 8 * self.parallelism as u128;
            (0..=len)
                .find(|&p| Self::word_count(alphabet, p) >= target)
                .unwrap_or(len)
        } else {
            0
        };
        let parts = Self::word_count(alphabet, prefix_len) as u64;
        let run = |part: u64| {
            let mut acc = init();
            scan_partition(alphabet, len, prefix_len, part, |w| visit(&mut acc, w));
            acc
        };
        if self.parallelism <= 1 {
            return (0..parts).map(run).fold(init(), &merge);
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.parallelism)
            .build()
            .expect("thread pool");
        let partials: Vec<A> = pool.install(|| (0..parts).into_par_iter().map(run).collect());
        partials.into_iter().fold(init(), &merge)
    }
}

/// Visits every word whose first `prefix_len` letters spell `part` in base
/// `alphabet` (most significant first), in lexicographic order.
fn scan_partition(
    alphabet: u32,
    len: usize,
    prefix_len: usize,
    part: u64,
    mut visit: impl FnMut(&[u32]),
) {
    let mut word = vec![0u32; len];
    let mut rest = part;
    for slot in word[..prefix_len].iter_mut().rev() {
        *slot = (rest % u64::from(alphabet)) as u32;
        rest /= u64::from(alphabet);
    }
    loop {
        visit(&word);
        let mut pos = len;
        loop {
            if pos == prefix_len {
                return;
            }
            pos -= 1;
            word[pos] += 1;
            if word[pos] < alphabet {
                break;
            }
            word[pos] = 0;
        }
    }
}

/// [`ExhaustiveCounter::count`] with the default budget, single-threaded.
pub fn count_exhaustive(spec: CaseSpec, m: u32, len: usize) -> Result<BigInt> {
    ExhaustiveCounter::default().count(spec, m, len)
}

/// [`ExhaustiveCounter::count_marked`] with the default budget.
pub fn count_marked_exhaustive(spec: CaseSpec, m: u32, len: usize, marks: usize) -> Result<BigInt> {
    ExhaustiveCounter::default().count_marked(spec, m, len, marks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            count_exhaustive(CaseSpec::EvenRuns { a: 1 }, 1, 4).unwrap(),
            BigInt::from(5)
        );
        assert_eq!(
            count_exhaustive(CaseSpec::EvenZeroTripleOne, 1, 4).unwrap(),
            BigInt::from(7)
        );
        for spec in [
            CaseSpec::OneZeroBlocks,
            CaseSpec::AvoidZeroPairs { a: 4, b: 2 },
        ] {
            assert_eq!(count_exhaustive(spec, 2, 0).unwrap(), BigInt::from(1));
        }
    }

    #[test]
    fn marked_examples() {
        let c = |spec, m, len, marks| count_marked_exhaustive(spec, m, len, marks).unwrap();
        assert_eq!(c(CaseSpec::EvenRuns { a: 1 }, 1, 4, 0), BigInt::from(1));
        assert_eq!(
            c(CaseSpec::DistinctAdjacent { a: 1 }, 1, 2, 1),
            BigInt::from(2)
        );
        for len in 0..5 {
            assert_eq!(c(CaseSpec::OneZeroBlocks, 2, len, len), BigInt::from(1));
        }
    }

    #[test]
    fn marks_need_an_extension_letter() {
        assert_eq!(
            count_marked_exhaustive(CaseSpec::OneZeroBlocks, 0, 3, 0),
            Err(Error::NoMarkedLetter)
        );
    }

    #[test]
    fn budget_is_enforced() {
        let counter = ExhaustiveCounter::new(1000, 1);
        assert!(counter.count(CaseSpec::OneZeroBlocks, 0, 9).is_ok());
        assert_eq!(
            counter.count(CaseSpec::OneZeroBlocks, 0, 10),
            Err(Error::BudgetExceeded {
                words: 1024,
                budget: 1000
            })
        );
        assert!(counter.list(CaseSpec::OneZeroBlocks, 0, 10).is_err());
    }

    #[test]
    fn parallel_scan_is_deterministic() {
        let spec = CaseSpec::EvenZeroTripleOne;
        let serial = ExhaustiveCounter::new(DEFAULT_BUDGET, 1);
        let parallel = ExhaustiveCounter::new(DEFAULT_BUDGET, 4);
        assert_eq!(
            serial.list(spec, 1, 7).unwrap(),
            parallel.list(spec, 1, 7).unwrap()
        );
        assert_eq!(
            serial.marked_histogram(spec, 2, 6).unwrap(),
            parallel.marked_histogram(spec, 2, 6).unwrap()
        );
        assert_eq!(
            serial.count(spec, 0, 2).unwrap(),
            parallel.count(spec, 0, 2).unwrap()
        );
    }

    #[test]
    fn list_is_lexicographic() {
        let words = ExhaustiveCounter::default()
            .list(CaseSpec::OneZeroBlocks, 0, 4)
            .unwrap();
        let shown: Vec<String> = words.iter().map(Word::to_string).collect();
        assert_eq!(shown, ["1000", "1010"]);
    }
}
