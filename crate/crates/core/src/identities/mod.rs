//! A registry of named identities, each checked by evaluating both sides
//! exactly over a range of `n`.
//!
//! Left-hand sides come from the classical recurrences in [`classic`] or from
//! direct counting; right-hand sides are the sums as stated, evaluated
//! literally. No identity reuses the library formula it is meant to confirm.

pub mod classic;

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::binomial::{binom, ipow, nonzero_product};
use crate::cases::{f0_value, CaseSpec};
use crate::error::{Error, Result};
use crate::sequence::composition_triangle;
use crate::words::count_automaton;
use crate::BigSequence;
pub use classic::{classic, fibonacci_ext, ClassicSequence};

/// Registered identity names, in a stable order.
pub const IDENTITY_NAMES: [&str; 15] = [
    "fib-explicit",
    "pell-explicit",
    "jacobsthal-explicit",
    "fib-even",
    "fib-odd",
    "jac-even",
    "jac-odd",
    "pell-even",
    "pell-odd",
    "case3-product",
    "euler-type",
    "mersenne-sum",
    "fib-2n-1-quad",
    "tribonacci-sum",
    "padovan-compositions",
];

/// One evaluated instance of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub witness: Vec<(&'static str, i64)>,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityStatus {
    Verified,
    Counterexample(Check),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: &'static str,
    /// The `n` actually checked, after clamping to the identity's domain.
    pub range: RangeInclusive<u64>,
    /// Number of `(lhs, rhs)` comparisons evaluated.
    pub checks: usize,
    pub status: IdentityStatus,
}

impl IdentityReport {
    pub fn verified(&self) -> bool {
        self.status == IdentityStatus::Verified
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: n in {}..={} ({} checks): ",
            self.name,
            self.range.start(),
            self.range.end(),
            self.checks
        )?;
        match &self.status {
            IdentityStatus::Verified => write!(f, "verified"),
            IdentityStatus::Counterexample(c) => {
                let w: Vec<String> = c.witness.iter().map(|(k, v)| format!("{k}={v}")).collect();
                write!(
                    f,
                    "COUNTEREXAMPLE at {}: lhs={} rhs={}",
                    w.join(", "),
                    c.lhs,
                    c.rhs
                )
            }
        }
    }
}

/// Smallest `n` on which the identity is stated.
pub fn min_n(name: &str) -> Result<u64> {
    match name {
        "euler-type" | "mersenne-sum" => Ok(3),
        n if IDENTITY_NAMES.contains(&n) => Ok(1),
        other => Err(Error::UnknownIdentity(other.to_string())),
    }
}

/// Checks `name` for every `n` in `range` (clamped below to the identity's
/// domain). The lowest failing `n` is reported.
pub fn check_identity(name: &str, range: RangeInclusive<u64>) -> Result<IdentityReport> {
    let name: &'static str = IDENTITY_NAMES
        .iter()
        .find(|&&n| n == name)
        .ok_or_else(|| Error::UnknownIdentity(name.to_string()))?;
    let lo = (*range.start()).max(min_n(name)?);
    let hi = *range.end();
    let range = lo..=hi;
    let context = Context::new(name, hi);
    let per_n: Vec<Vec<Check>> = range
        .clone()
        .into_par_iter()
        .map(|n| context.evaluate(name, n))
        .collect::<Result<_>>()?;
    let checks = per_n.iter().map(Vec::len).sum();
    let status = per_n
        .into_iter()
        .flatten()
        .find(|c| c.lhs != c.rhs)
        .map_or(IdentityStatus::Verified, IdentityStatus::Counterexample);
    Ok(IdentityReport {
        name,
        range,
        checks,
        status,
    })
}

/// Runs every registered identity over `1..=max_n`.
pub fn check_all(max_n: u64) -> Result<Vec<IdentityReport>> {
    IDENTITY_NAMES
        .iter()
        .map(|name| check_identity(name, 1..=max_n))
        .collect()
}

/// Data shared across `n`, built once per check.
struct Context {
    // case3-product: composition triangles of g(i) = b^i - 1 for b = 2, 3
    product_triangles: Vec<(i64, crate::BigTriangle)>,
}

impl Context {
    fn new(name: &str, max_n: u64) -> Self {
        let mut product_triangles = Vec::new();
        if name == "case3-product" && max_n >= 1 {
            for b in [2i64, 3] {
                let g = BigSequence::from_fn(max_n as usize, |i| ipow(b, i as i64) - 1)
                    .expect("nonempty");
                product_triangles.push((b, composition_triangle(&g)));
            }
        }
        Self { product_triangles }
    }

    fn evaluate(&self, name: &str, n: u64) -> Result<Vec<Check>> {
        let ni = n as i64;
        let single = |lhs: BigInt, rhs: BigInt| {
            Ok(vec![Check {
                witness: vec![("n", ni)],
                lhs,
                rhs,
            }])
        };
        let fib = |i: i64| ClassicSequence::Fibonacci.value(i as u64);
        let pell = |i: i64| ClassicSequence::Pell.value(i as u64);
        let jac = |i: i64| ClassicSequence::Jacobsthal.value(i as u64);
        match name {
            "fib-explicit" => single(fib(ni)?, fm_case2_sum(ni, 1, 1)),
            "pell-explicit" => single(pell(ni)?, fm_case2_sum(ni, 2, 1)),
            "jacobsthal-explicit" => single(jac(ni)?, fm_case2_sum(ni, 1, 2)),
            "fib-even" => single(fib(2 * ni)?, halved_sum(ni, 1, 1)),
            "fib-odd" => single(fib(2 * ni - 1)?, halved_sum(ni, 2, 1)),
            "jac-even" => single(jac(2 * ni)?, halved_sum(ni, 1, 2)),
            "jac-odd" => single(jac(2 * ni - 1)?, halved_sum(ni, 2, 2)),
            "pell-even" => {
                let mut rhs = BigInt::zero();
                for k in 1..=2 * ni {
                    for j in (k + 1) / 2..=ni {
                        rhs += binom(2 * j - 1, k - 1) * binom(ni + j - 1, ni - j);
                    }
                }
                single(pell(2 * ni)?, rhs)
            }
            "pell-odd" => {
                let mut rhs = BigInt::zero();
                for k in 1..=2 * ni - 1 {
                    for j in (k + 2) / 2..=ni {
                        rhs += binom(2 * j - 2, k - 1) * binom(ni + j - 2, ni - j);
                    }
                }
                single(pell(2 * ni - 1)?, rhs)
            }
            "case3-product" => Ok(self.case3_product(ni)),
            "euler-type" => {
                let binary_words = BigInt::one() << (n - 2);
                let ternary = count_automaton(CaseSpec::OneZeroBlocks, 1, (n - 1) as usize, None);
                single(binary_words, ternary)
            }
            "mersenne-sum" => {
                let mut rhs = BigInt::zero();
                for k in 1..=ni {
                    for i in 1..=k {
                        for j in i..=(ni - k) / 2 {
                            if let Some(c) =
                                nonzero_product(&[(k, i), (j - 1, i - 1), (ni - k - j - 1, j - 1)])
                            {
                                rhs += c;
                            }
                        }
                    }
                }
                single((BigInt::one() << (n - 2)) - 1u32, rhs)
            }
            "fib-2n-1-quad" => single(fib(2 * ni - 1)?, fib_quad_sum(ni)),
            "tribonacci-sum" => {
                let mut rhs = BigInt::zero();
                for k in 1..=ni {
                    // i = 0 contributes [n = k]
                    if k == ni {
                        rhs += 1u32;
                    }
                    for i in 1..=k {
                        for j in i..=(ni - k) {
                            if let Some(c) =
                                nonzero_product(&[(k, i), (j - 1, i - 1), (j, ni - k - 2 * j)])
                            {
                                rhs += c;
                            }
                        }
                    }
                }
                single(ClassicSequence::Tribonacci.value(n)?, rhs)
            }
            "padovan-compositions" => single(
                f0_value(CaseSpec::EvenZeroTripleOne, n as usize)?,
                two_three_compositions(n - 1),
            ),
            other => Err(Error::UnknownIdentity(other.to_string())),
        }
    }

    fn case3_product(&self, n: i64) -> Vec<Check> {
        let mut out = Vec::new();
        for (b, triangle) in &self.product_triangles {
            for k in 1..=n {
                let lhs = triangle[(n as usize, k as usize)].clone();
                let mut rhs = BigInt::zero();
                for i in 0..=(n - k) {
                    if let Some(c) = nonzero_product(&[(n - i - 1, k - 1), (k + i - 1, k - 1)]) {
                        rhs += c * ipow(*b, n - k - i) * ipow(b - 1, k);
                    }
                }
                out.push(Check {
                    witness: vec![("b", *b), ("n", n), ("k", k)],
                    lhs,
                    rhs,
                });
            }
        }
        out
    }
}

// sum_{j=0}^{(n-1)/2} m^{n-2j-1} a^j C(n-j-1, j)
fn fm_case2_sum(n: i64, m: i64, a: i64) -> BigInt {
    (0..=(n - 1) / 2)
        .map(|j| ipow(m, n - 2 * j - 1) * ipow(a, j) * binom(n - j - 1, j))
        .sum()
}

// sum_{k=1}^{n} base^{n-k} C(n+k-shift, n-k)
fn halved_sum(n: i64, shift: i64, base: i64) -> BigInt {
    (1..=n)
        .map(|k| ipow(base, n - k) * binom(n + k - shift, n - k))
        .sum()
}

// sum_k sum_{i=k}^n sum_{t=0}^i sum_{j=t}^{(n-i)/2}
//     C(i-1,k-1) C(i,t) C(j-1,t-1) C(n-i-j-1,j-1)
// where t = 0 contributes [n = i] (the diagonal c_1(i, i) = 1).
fn fib_quad_sum(n: i64) -> BigInt {
    let mut acc = BigInt::zero();
    for k in 1..=n {
        for i in k..=n {
            let outer = binom(i - 1, k - 1);
            if outer.is_zero() {
                continue;
            }
            let mut inner = BigInt::zero();
            if i == n {
                inner += 1u32;
            }
            for t in 1..=i {
                for j in t..=(n - i) / 2 {
                    if let Some(c) =
                        nonzero_product(&[(i, t), (j - 1, t - 1), (n - i - j - 1, j - 1)])
                    {
                        inner += c;
                    }
                }
            }
            acc += outer * inner;
        }
    }
    acc
}

/// Compositions of `total` into parts 2 and 3.
fn two_three_compositions(total: u64) -> BigInt {
    let total = total as usize;
    let mut ways = vec![BigInt::zero(); total + 1];
    ways[0] = BigInt::one();
    for s in 1..=total {
        let mut w = BigInt::zero();
        if s >= 2 {
            w += &ways[s - 2];
        }
        if s >= 3 {
            w += &ways[s - 3];
        }
        ways[s] = w;
    }
    ways[total].clone()
}
