//! One-indexed sequences, weighted-composition triangles and the invert
//! transform.
//!
//! Every interface speaks in sequence indices starting at 1: `f[1]` is the
//! first term and there is no term at index 0. A [`Triangle`] stores
//! `c(n, k)` for `1 <= k <= n <= size`.

use std::ops::Index;

use crate::error::{Error, Result};
use crate::scalar::{pascal, pow, Scalar};

/// A finite prefix `f(1), ..., f(N)` of an arithmetic function.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sequence<T> {
    values: Vec<T>,
}

impl<T: Scalar> Sequence<T> {
    pub fn new(values: Vec<T>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(Self { values })
    }

    /// Builds `f(1..=len)` from a closure over the one-based index.
    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> T) -> Result<Self> {
        Self::new((1..=len).map(&mut f).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, n: usize) -> Result<&T> {
        if n == 0 || n > self.values.len() {
            return Err(Error::IndexOutOfRange {
                index: n,
                len: self.values.len(),
            });
        }
        Ok(&self.values[n - 1])
    }

    /// Terms in order; slot 0 holds `f(1)`.
    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    /// `(n, f(n))` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &T)> {
        self.values.iter().enumerate().map(|(i, v)| (i + 1, v))
    }

    /// The first `len` terms.
    pub fn truncate(&self, len: usize) -> Result<Self> {
        Self::new(self.values.iter().take(len).cloned().collect())
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> Sequence<U> {
        Sequence {
            values: self.values.iter().map(f).collect(),
        }
    }
}

impl<T> Index<usize> for Sequence<T> {
    type Output = T;

    /// One-based; panics on index 0 or past the end.
    fn index(&self, n: usize) -> &T {
        assert!(n >= 1, "sequences are indexed from 1");
        &self.values[n - 1]
    }
}

/// The table `c(n, k)` for `1 <= k <= n <= size`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangle<T> {
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> Triangle<T> {
    /// Builds a triangle from rows; row `n` (one-based) must have `n` entries.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptySequence);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(Error::CellOutOfRange {
                    n: i + 1,
                    k: row.len(),
                    size: rows.len(),
                });
            }
        }
        Ok(Self { rows })
    }

    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        let rows = (1..=size)
            .map(|n| (1..=n).map(|k| f(n, k)).collect())
            .collect();
        Self::from_rows(rows)
    }

    pub fn try_from_fn<E>(
        size: usize,
        mut f: impl FnMut(usize, usize) -> Result<T, E>,
    ) -> Result<Result<Self>, E> {
        let mut rows = Vec::with_capacity(size);
        for n in 1..=size {
            let mut row = Vec::with_capacity(n);
            for k in 1..=n {
                row.push(f(n, k)?);
            }
            rows.push(row);
        }
        Ok(Self::from_rows(rows))
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, n: usize, k: usize) -> Result<&T> {
        if k == 0 || k > n || n > self.rows.len() {
            return Err(Error::CellOutOfRange {
                n,
                k,
                size: self.rows.len(),
            });
        }
        Ok(&self.rows[n - 1][k - 1])
    }

    /// Row `n` as `c(n, 1), ..., c(n, n)`.
    pub fn row(&self, n: usize) -> Result<&[T]> {
        if n == 0 || n > self.rows.len() {
            return Err(Error::IndexOutOfRange {
                index: n,
                len: self.rows.len(),
            });
        }
        Ok(&self.rows[n - 1])
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.rows.iter().map(Vec::as_slice)
    }

    /// `(n, k, c(n, k))` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, v)| (i + 1, j + 1, v)))
    }

    /// Column `k` as a sequence indexed by `n = 1..=size` (zero above the
    /// diagonal).
    pub fn column(&self, k: usize) -> Sequence<T> {
        Sequence {
            values: (1..=self.rows.len())
                .map(|n| {
                    if k >= 1 && k <= n {
                        self.rows[n - 1][k - 1].clone()
                    } else {
                        T::zero()
                    }
                })
                .collect(),
        }
    }
}

impl<T> Index<(usize, usize)> for Triangle<T> {
    type Output = T;

    fn index(&self, (n, k): (usize, usize)) -> &T {
        assert!(k >= 1 && k <= n, "cell ({n}, {k}) is not in a triangle");
        &self.rows[n - 1][k - 1]
    }
}

/// The invert transform `B = A / (1 - A)`.
pub fn invert<T: Scalar>(f: &Sequence<T>) -> Sequence<T> {
    invert_with(f, &T::one())
}

/// The `m`-th iterate of [`invert`], computed in one pass as `A / (1 - mA)`.
pub fn invert_power<T: Scalar>(f: &Sequence<T>, m: u32) -> Sequence<T> {
    if m == 0 {
        return f.clone();
    }
    invert_with(f, &T::from_count(u64::from(m)))
}

// b(n) = f(n) + weight * sum_{i=1}^{n-1} f(i) b(n-i)
fn invert_with<T: Scalar>(f: &Sequence<T>, weight: &T) -> Sequence<T> {
    let fv = f.values();
    let mut b: Vec<T> = Vec::with_capacity(fv.len());
    for n in 0..fv.len() {
        let mut conv = T::zero();
        for i in 0..n {
            conv = conv + fv[i].clone() * b[n - 1 - i].clone();
        }
        b.push(fv[n].clone() + weight.clone() * conv);
    }
    Sequence { values: b }
}

/// `c(n, k) = sum over compositions i_1 + ... + i_k = n of f(i_1)...f(i_k)`,
/// filled column by column with `c(n, k) = sum_i f(i) c(n - i, k - 1)`.
pub fn composition_triangle<T: Scalar>(f: &Sequence<T>) -> Triangle<T> {
    let size = f.len();
    let fv = f.values();
    let mut rows: Vec<Vec<T>> = (1..=size).map(|n| Vec::with_capacity(n)).collect();
    for (n, row) in rows.iter_mut().enumerate() {
        row.push(fv[n].clone());
    }
    for k in 2..=size {
        for n in k..=size {
            let mut acc = T::zero();
            for i in 1..=(n - k + 1) {
                acc = acc + fv[i - 1].clone() * rows[n - i - 1][k - 2].clone();
            }
            rows[n - 1].push(acc);
        }
    }
    Triangle { rows }
}

/// The same triangle by powering the truncated generating polynomial
/// `P(x) = sum f(i) x^i`: column `k` holds the coefficients of `P^k`.
pub fn power_triangle<T: Scalar>(f: &Sequence<T>) -> Triangle<T> {
    let size = f.len();
    // coefficient vectors indexed by degree 0..=size
    let mut base = vec![T::zero(); size + 1];
    for (n, v) in f.iter() {
        base[n] = v.clone();
    }
    let mut rows: Vec<Vec<T>> = (1..=size).map(|n| Vec::with_capacity(n)).collect();
    let mut power = base.clone();
    for k in 1..=size {
        for n in k..=size {
            rows[n - 1].push(power[n].clone());
        }
        let mut next = vec![T::zero(); size + 1];
        for (i, pi) in power.iter().enumerate().skip(k) {
            if pi.is_zero() {
                continue;
            }
            for (j, bj) in base.iter().enumerate().take(size + 1 - i).skip(1) {
                next[i + j] = next[i + j].clone() + pi.clone() * bj.clone();
            }
        }
        power = next;
    }
    Triangle { rows }
}

/// `sum_{k=1}^{n} c(n, k)` for each row.
pub fn row_sums<T: Scalar>(t: &Triangle<T>) -> Sequence<T> {
    Sequence {
        values: t
            .rows
            .iter()
            .map(|row| row.iter().cloned().fold(T::zero(), |acc, v| acc + v))
            .collect(),
    }
}

/// Maps the `m = 1` triangle to level `m`:
/// `c_m(n, k) = sum_{i=k}^{n} (m-1)^{i-k} C(i-1, k-1) c_1(n, i)`.
pub fn lift_triangle<T: Scalar>(c1: &Triangle<T>, m: u32) -> Result<Triangle<T>> {
    if m == 0 {
        return Err(Error::ZeroLift);
    }
    if m == 1 {
        return Ok(c1.clone());
    }
    let size = c1.size();
    let binom = pascal::<T>(size);
    let step = T::from_count(u64::from(m - 1));
    let powers: Vec<T> = (0..size as u64).map(|e| pow(&step, e)).collect();
    let rows = (1..=size)
        .map(|n| {
            let row = &c1.rows[n - 1];
            (1..=n)
                .map(|k| {
                    (k..=n).fold(T::zero(), |acc, i| {
                        acc + powers[i - k].clone()
                            * binom[i - 1][k - 1].clone()
                            * row[i - 1].clone()
                    })
                })
                .collect()
        })
        .collect();
    Ok(Triangle { rows })
}
