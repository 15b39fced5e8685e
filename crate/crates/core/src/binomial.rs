//! Integer helpers shared by the explicit formulas.
//!
//! `binom(n, k)` is zero whenever `k < 0`, `n < 0` or `k > n`. Formulas test
//! their binomial factors first and skip the term on a zero, so a power with
//! a negative exponent is never evaluated.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

const TABLE_ROWS: usize = 160;

fn table() -> &'static Vec<Vec<BigInt>> {
    static TABLE: OnceLock<Vec<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| crate::scalar::pascal::<BigInt>(TABLE_ROWS - 1))
}

pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let (n, k) = (n as usize, k as usize);
    if n < TABLE_ROWS {
        return table()[n][k].clone();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `base^exp` with `0^0 = 1`. A negative exponent is a logic error in the
/// caller and panics.
pub fn ipow(base: i64, exp: i64) -> BigInt {
    assert!(exp >= 0, "negative exponent {exp} reached a formula term");
    BigInt::from(base).pow(exp as u32)
}

/// Product of binomials, or `None` as soon as one of them is zero.
pub fn nonzero_product(factors: &[(i64, i64)]) -> Option<BigInt> {
    let mut acc = BigInt::one();
    for &(n, k) in factors {
        let c = binom(n, k);
        if c.is_zero() {
            return None;
        }
        acc *= c;
    }
    Some(acc)
}
