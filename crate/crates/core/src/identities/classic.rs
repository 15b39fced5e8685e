//! Classical sequences, each from its own defining recurrence.
//!
//! Indexing: `F_1 = F_2 = 1`, `P_1 = 1, P_2 = 2`, `J_1 = J_2 = 1`,
//! `T_1 = T_2 = 1, T_3 = 2`, Mersenne `2^n - 1`. Padovan numbers use
//! `p(0) = 1, p(1) = p(2) = 0, p(n) = p(n-2) + p(n-3)`, which makes the
//! case-5 initial function `f_0(n) = p(n + 2)`. Only `n >= 3` is exposed,
//! giving `p(3..) = 1, 0, 1, 1, 1, 2, ...`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassicSequence {
    Fibonacci,
    Pell,
    Jacobsthal,
    Mersenne,
    Padovan,
    Tribonacci,
}

impl ClassicSequence {
    pub const ALL: [ClassicSequence; 6] = [
        ClassicSequence::Fibonacci,
        ClassicSequence::Pell,
        ClassicSequence::Jacobsthal,
        ClassicSequence::Mersenne,
        ClassicSequence::Padovan,
        ClassicSequence::Tribonacci,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ClassicSequence::Fibonacci => "fibonacci",
            ClassicSequence::Pell => "pell",
            ClassicSequence::Jacobsthal => "jacobsthal",
            ClassicSequence::Mersenne => "mersenne",
            ClassicSequence::Padovan => "padovan",
            ClassicSequence::Tribonacci => "tribonacci",
        }
    }

    /// Smallest valid index.
    pub fn first_index(&self) -> u64 {
        match self {
            ClassicSequence::Padovan => 3,
            _ => 1,
        }
    }

    pub fn value(&self, n: u64) -> Result<BigInt> {
        if n < self.first_index() {
            return Err(Error::IndexOutOfRange {
                index: n as usize,
                len: 0,
            });
        }
        Ok(match self {
            ClassicSequence::Fibonacci => fibonacci_ext(n),
            ClassicSequence::Pell => second_order(n, 1, 2, 2, 1),
            ClassicSequence::Jacobsthal => second_order(n, 1, 1, 1, 2),
            ClassicSequence::Mersenne => (BigInt::one() << n) - 1u32,
            ClassicSequence::Padovan => {
                let mut w = [BigInt::one(), BigInt::zero(), BigInt::zero()];
                for _ in 3..=n {
                    let next = &w[0] + &w[1];
                    w.rotate_left(1);
                    w[2] = next;
                }
                w[2].clone()
            }
            ClassicSequence::Tribonacci => {
                let mut w = [BigInt::one(), BigInt::one(), BigInt::from(2)];
                if n <= 3 {
                    return Ok(w[n as usize - 1].clone());
                }
                for _ in 4..=n {
                    let next = &w[0] + &w[1] + &w[2];
                    w.rotate_left(1);
                    w[2] = next;
                }
                w[2].clone()
            }
        })
    }
}

impl FromStr for ClassicSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownSequence(s.to_string()))
    }
}

impl fmt::Display for ClassicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `classic(name, n)` by registry name.
pub fn classic(name: &str, n: u64) -> Result<BigInt> {
    name.parse::<ClassicSequence>()?.value(n)
}

/// Fibonacci with `F_0 = 0` admitted.
pub fn fibonacci_ext(n: u64) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

// x_1 = s1, x_2 = s2, x_{n+2} = p x_{n+1} + q x_n
fn second_order(n: u64, s1: i64, s2: i64, p: i64, q: i64) -> BigInt {
    let (mut x, mut y) = (BigInt::from(s1), BigInt::from(s2));
    for _ in 1..n {
        let next = p * &y + q * &x;
        x = std::mem::replace(&mut y, next);
    }
    x
}
