//! The ring every sequence and triangle computes in.
//!
//! The sequence machinery only needs a commutative ring with a way to embed
//! small counts, so it is written once against [`Scalar`]. The arbitrary
//! precision instantiation is what the rest of the crate uses; fixed-width
//! integers are handy for quick experiments and for cross-checking in tests.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num};

pub trait Scalar: Num + Clone + FromPrimitive + Debug + Display + Send + Sync {
    /// Embeds a nonnegative count. Panics only if `Self` cannot represent it.
    fn from_count(count: u64) -> Self {
        Self::from_u64(count).expect("count not representable in scalar type")
    }
}

impl<T> Scalar for T where T: Num + Clone + FromPrimitive + Debug + Display + Send + Sync {}

/// `base^exp` by square-and-multiply, with `0^0 = 1`.
pub fn pow<T: Scalar>(base: &T, mut exp: u64) -> T {
    let mut acc = T::one();
    let mut square = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * square.clone();
        }
        exp >>= 1;
        if exp > 0 {
            square = square.clone() * square;
        }
    }
    acc
}

/// Pascal's triangle over `T`, rows `0..=max_n`.
pub(crate) fn pascal<T: Scalar>(max_n: usize) -> Vec<Vec<T>> {
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            if k == 0 || k == n {
                row.push(T::one());
            } else {
                let prev = &rows[n - 1];
                row.push(prev[k - 1].clone() + prev[k].clone());
            }
        }
        rows.push(row);
    }
    rows
}
