//! The five restricted-word families.
//!
//! Each family fixes an initial function `f_0`; applying the invert
//! transform `m` times gives `f_m`, which counts the family's words over an
//! alphabet enlarged by `m` unrestricted letters. The letters under the
//! restriction are called *cold*; the extra ones are *hot*. The largest
//! letter of the enlarged alphabet is the *marked* letter used by the
//! `c_m(n, k)` interpretation.
//!
//! | case | cold letters | restriction |
//! |------|--------------|-------------|
//! | 1 | `0..a` | no two equal cold letters are adjacent |
//! | 2 | `0..a` | every maximal run of a cold letter has even length |
//! | 3 | `0..a` (`b < a`) | no subword `0 i` with `1 <= i <= b` |
//! | 4 | `0, 1` | `0` and `1` only inside blocks `1 0^j`, `j >= 1` |
//! | 5 | `0, 1` | `0`-runs have even length, `1`-runs length divisible by 3 |

mod formulas;

pub use formulas::{
    c1_case3_binomial, c1_explicit, c1_explicit_triangle, c2_explicit_case2, cm_explicit_case1,
    cm_printed_case1, explicit_triangle, fm_explicit, Case3Evaluator,
};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::identities::classic::fibonacci_ext;
use crate::BigSequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseSpec {
    /// Case 1: equal cold letters are never adjacent.
    DistinctAdjacent { a: u32 },
    /// Case 2: cold letters only in runs of even length.
    EvenRuns { a: u32 },
    /// Case 3: `0` is never followed by any of `1..=b`.
    AvoidZeroPairs { a: u32, b: u32 },
    /// Case 4: `0` and `1` only inside blocks `1 0 ... 0`.
    OneZeroBlocks,
    /// Case 5: even `0`-runs and `1`-runs with length divisible by three.
    EvenZeroTripleOne,
}

impl CaseSpec {
    /// Validates a `(case, a, b)` triple as typed on the command line.
    pub fn new(case_id: u8, a: Option<u32>, b: Option<u32>) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidParameters(msg));
        match case_id {
            1 | 2 => {
                if b.is_some() {
                    return invalid(format!("case {case_id} takes no b"));
                }
                match a {
                    Some(a) if a >= 1 => Ok(if case_id == 1 {
                        CaseSpec::DistinctAdjacent { a }
                    } else {
                        CaseSpec::EvenRuns { a }
                    }),
                    Some(_) => invalid(format!("case {case_id} needs a >= 1")),
                    None => invalid(format!("case {case_id} needs a")),
                }
            }
            3 => match (a, b) {
                (Some(a), Some(b)) if a > b && b >= 1 => Ok(CaseSpec::AvoidZeroPairs { a, b }),
                (Some(a), Some(b)) => invalid(format!("case 3 needs a > b >= 1, got a={a}, b={b}")),
                _ => invalid("case 3 needs both a and b".into()),
            },
            4 | 5 => {
                if a.is_some() || b.is_some() {
                    return invalid(format!("case {case_id} takes no parameters"));
                }
                Ok(if case_id == 4 {
                    CaseSpec::OneZeroBlocks
                } else {
                    CaseSpec::EvenZeroTripleOne
                })
            }
            other => invalid(format!("no case {other}; cases are 1 to 5")),
        }
    }

    pub fn id(&self) -> u8 {
        match self {
            CaseSpec::DistinctAdjacent { .. } => 1,
            CaseSpec::EvenRuns { .. } => 2,
            CaseSpec::AvoidZeroPairs { .. } => 3,
            CaseSpec::OneZeroBlocks => 4,
            CaseSpec::EvenZeroTripleOne => 5,
        }
    }

    pub fn a(&self) -> Option<u32> {
        match *self {
            CaseSpec::DistinctAdjacent { a }
            | CaseSpec::EvenRuns { a }
            | CaseSpec::AvoidZeroPairs { a, .. } => Some(a),
            _ => None,
        }
    }

    pub fn b(&self) -> Option<u32> {
        match *self {
            CaseSpec::AvoidZeroPairs { b, .. } => Some(b),
            _ => None,
        }
    }

    /// Size of the base alphabet before extension: `a`, or 2 for cases 4, 5.
    pub fn base_letters(&self) -> u32 {
        self.a().unwrap_or(2)
    }

    /// `m + a` for cases 1-3, `m + 2` for cases 4 and 5.
    pub fn alphabet_size(&self, m: u32) -> u32 {
        self.base_letters() + m
    }

    /// The letter counted by `c_m(n, k)`; absent when `m = 0`.
    pub fn marked_letter(&self, m: u32) -> Option<u32> {
        (m >= 1).then(|| self.alphabet_size(m) - 1)
    }

    /// How many initial terms the `f_m` recurrence fixes.
    pub fn seed_count(&self) -> usize {
        match self {
            CaseSpec::EvenZeroTripleOne => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CaseSpec::DistinctAdjacent { a } | CaseSpec::EvenRuns { a } => {
                write!(f, "case {} (a={a})", self.id())
            }
            CaseSpec::AvoidZeroPairs { a, b } => write!(f, "case 3 (a={a}, b={b})"),
            _ => write!(f, "case {}", self.id()),
        }
    }
}

/// `f_0(n)`, from the closed form where one exists and from the defining
/// recurrence otherwise.
pub fn f0_value(spec: CaseSpec, n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, len: 0 });
    }
    let value = match spec {
        CaseSpec::DistinctAdjacent { a } => {
            if n == 1 {
                BigInt::one()
            } else {
                BigInt::from(a) * BigInt::from(a - 1).pow(n as u32 - 2)
            }
        }
        CaseSpec::EvenRuns { a } => {
            if n.is_multiple_of(2) {
                BigInt::zero()
            } else {
                BigInt::from(a).pow((n as u32 - 1) / 2)
            }
        }
        CaseSpec::AvoidZeroPairs { a, b } => {
            if a == b + 1 && b > 1 {
                (BigInt::from(b).pow(n as u32) - 1u32) / (b - 1)
            } else if a == 2 && b == 1 {
                BigInt::from(n)
            } else {
                let (mut prev, mut cur) = (BigInt::one(), BigInt::from(a));
                if n == 1 {
                    return Ok(prev);
                }
                for _ in 2..n {
                    let next = BigInt::from(a) * &cur - BigInt::from(b) * &prev;
                    prev = std::mem::replace(&mut cur, next);
                }
                cur
            }
        }
        CaseSpec::OneZeroBlocks => {
            if n == 1 {
                BigInt::one()
            } else {
                fibonacci_ext(n as u64 - 2)
            }
        }
        CaseSpec::EvenZeroTripleOne => {
            let mut window = [BigInt::one(), BigInt::zero(), BigInt::one()];
            if n <= 3 {
                return Ok(window[n - 1].clone());
            }
            for _ in 4..=n {
                let next = &window[1] + &window[0];
                window.rotate_left(1);
                window[2] = next;
            }
            window[2].clone()
        }
    };
    Ok(value)
}

pub fn f0_sequence(spec: CaseSpec, len: usize) -> Result<BigSequence> {
    let values = (1..=len)
        .map(|n| f0_value(spec, n))
        .collect::<Result<Vec<_>>>()?;
    BigSequence::new(values)
}

/// `f_m(1..=len)` from the family's printed recurrence and seeds.
pub fn fm_sequence(spec: CaseSpec, m: u32, len: usize) -> Result<BigSequence> {
    let seeds = spec.seed_count();
    if len < seeds {
        return Err(Error::TooShort {
            requested: len,
            seeds,
        });
    }
    let mb = BigInt::from(m);
    let mut values: Vec<BigInt> = Vec::with_capacity(len);
    match spec {
        CaseSpec::DistinctAdjacent { a } | CaseSpec::AvoidZeroPairs { a, .. } => {
            values.push(BigInt::one());
            values.push(&mb + a);
        }
        CaseSpec::EvenRuns { .. } | CaseSpec::OneZeroBlocks => {
            values.push(BigInt::one());
            values.push(mb.clone());
        }
        CaseSpec::EvenZeroTripleOne => {
            values.push(BigInt::one());
            values.push(mb.clone());
            values.push(&mb * &mb + 1u32);
        }
    }
    while values.len() < len {
        let n = values.len();
        let next = match spec {
            // f(n+2) = (m+a-1) f(n+1) + m f(n)
            CaseSpec::DistinctAdjacent { a } => {
                (&mb + a - 1u32) * &values[n - 1] + &mb * &values[n - 2]
            }
            // f(n+2) = m f(n+1) + a f(n)
            CaseSpec::EvenRuns { a } => &mb * &values[n - 1] + BigInt::from(a) * &values[n - 2],
            // f(n+2) = (a+m) f(n+1) - b f(n)
            CaseSpec::AvoidZeroPairs { a, b } => {
                (&mb + a) * &values[n - 1] - BigInt::from(b) * &values[n - 2]
            }
            // f(n+2) = (m+1) f(n+1) - (m-1) f(n)
            CaseSpec::OneZeroBlocks => {
                (&mb + 1u32) * &values[n - 1] - (&mb - 1u32) * &values[n - 2]
            }
            // f(n+3) = m f(n+2) + f(n+1) + f(n)
            CaseSpec::EvenZeroTripleOne => &mb * &values[n - 1] + &values[n - 2] + &values[n - 3],
        };
        values.push(next);
    }
    BigSequence::new(values)
}
