//! Explicit sums for `c_1`, `c_2`, `c_m` and `f_m`.
//!
//! Every sum evaluates its binomial factors first and skips the term when one
//! of them is zero; the power factors of a vanishing term may have negative
//! exponents and are never evaluated.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

use super::CaseSpec;
use crate::binomial::{binom, ipow, nonzero_product};
use crate::error::{Error, Result};
use crate::quadratic::QuadraticNumber;
use crate::BigTriangle;

type Quad = QuadraticNumber<BigInt>;

fn check_cell(n: usize, k: usize) -> Result<(i64, i64)> {
    if k == 0 || k > n {
        return Err(Error::CellOutOfRange { n, k, size: n });
    }
    Ok((n as i64, k as i64))
}

fn indicator(cond: bool) -> BigInt {
    if cond {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

/// `c_1(n, k)` from the family's explicit formula.
pub fn c1_explicit(spec: CaseSpec, n: usize, k: usize) -> Result<BigInt> {
    let (ni, ki) = check_cell(n, k)?;
    Ok(match spec {
        CaseSpec::DistinctAdjacent { a } => c1_case1(i64::from(a), ni, ki),
        CaseSpec::EvenRuns { a } => c1_case2(i64::from(a), ni, ki),
        CaseSpec::AvoidZeroPairs { a, b } => return Case3Evaluator::new(a, b, n).c1(n, k),
        CaseSpec::OneZeroBlocks => c1_case4(ni, ki),
        CaseSpec::EvenZeroTripleOne => c1_case5(ni, ki),
    })
}

/// The whole `c_1` triangle from explicit formulas, sharing the root powers
/// across cells for case 3.
pub fn c1_explicit_triangle(spec: CaseSpec, size: usize) -> Result<BigTriangle> {
    if let CaseSpec::AvoidZeroPairs { a, b } = spec {
        let eval = Case3Evaluator::new(a, b, size);
        return BigTriangle::try_from_fn(size, |n, k| eval.c1(n, k))?;
    }
    BigTriangle::try_from_fn(size, |n, k| c1_explicit(spec, n, k))?
}

// c_1(n,n) = 1; otherwise
// sum_{i=0}^{k-1} C(k,i) C(n-k-1,k-i-1) a^{k-i} (a-1)^{n-2k+i}
fn c1_case1(a: i64, n: i64, k: i64) -> BigInt {
    if n == k {
        return BigInt::one();
    }
    (0..k)
        .filter_map(|i| {
            let c = nonzero_product(&[(k, i), (n - k - 1, k - i - 1)])?;
            Some(c * ipow(a, k - i) * ipow(a - 1, n - 2 * k + i))
        })
        .sum()
}

fn c1_case2(a: i64, n: i64, k: i64) -> BigInt {
    if (n - k) % 2 != 0 {
        return BigInt::zero();
    }
    ipow(a, (n - k) / 2) * binom((n + k) / 2 - 1, k - 1)
}

// c_1(k,k) = 1; otherwise
// sum_{i=1}^{k} sum_{j=i}^{(n-k)/2} C(k,i) C(j-1,i-1) C(n-k-j-1,j-1)
fn c1_case4(n: i64, k: i64) -> BigInt {
    if n == k {
        return BigInt::one();
    }
    let mut acc = BigInt::zero();
    for i in 1..=k {
        for j in i..=(n - k) / 2 {
            if let Some(c) = nonzero_product(&[(k, i), (j - 1, i - 1), (n - k - j - 1, j - 1)]) {
                acc += c;
            }
        }
    }
    acc
}

// [n = k] + sum_{i=1}^{k} sum_{j=i}^{n-k} C(k,i) C(j-1,i-1) C(j,n-k-2j)
//
// The i = 0 term of the printed sum is the constant term of (1 + Y)^k and
// contributes exactly the indicator [n = k].
fn c1_case5(n: i64, k: i64) -> BigInt {
    let mut acc = indicator(n == k);
    for i in 1..=k {
        for j in i..=(n - k) {
            if let Some(c) = nonzero_product(&[(k, i), (j - 1, i - 1), (j, n - k - 2 * j)]) {
                acc += c;
            }
        }
    }
    acc
}

/// Case 3 `c_1(n, k)` through the roots `alpha`, `beta` of
/// `b x^2 - a x + 1 = 0`, computed exactly in `Q(sqrt(a^2 - 4b))`:
///
/// `c_1(n, k) = b^-k sum_{j=0}^{n-k} alpha^-(j+k) beta^-(n-j) C(n-j-1, k-1) C(k+j-1, k-1)`
#[derive(Clone, Debug)]
pub struct Case3Evaluator {
    b: BigInt,
    inv_alpha_pows: Vec<Quad>,
    inv_beta_pows: Vec<Quad>,
}

impl Case3Evaluator {
    /// Prepares powers for rows up to `max_n`.
    pub fn new(a: u32, b: u32, max_n: usize) -> Self {
        let (alpha, beta) = Self::roots(a, b);
        let inv_alpha = alpha.inverse().expect("alpha is nonzero for b >= 1");
        let inv_beta = beta.inverse().expect("beta is nonzero for b >= 1");
        let d = alpha.radicand().clone();
        let powers = |x: &Quad| {
            let mut v = Vec::with_capacity(max_n + 1);
            let mut acc = Quad::from_integer(BigInt::one(), d.clone());
            for _ in 0..=max_n {
                v.push(acc.clone());
                acc = acc * x.clone();
            }
            v
        };
        Self {
            b: BigInt::from(b),
            inv_alpha_pows: powers(&inv_alpha),
            inv_beta_pows: powers(&inv_beta),
        }
    }

    /// `alpha = (a + sqrt(D)) / 2b` and `beta = (a - sqrt(D)) / 2b`, `D = a^2 - 4b`.
    pub fn roots(a: u32, b: u32) -> (Quad, Quad) {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let d: BigInt = &a * &a - BigInt::from(4) * &b;
        assert!(d >= BigInt::zero(), "a^2 - 4b is negative");
        let two_b = BigInt::from(2) * &b;
        let p = Ratio::new(a, two_b.clone());
        let q = Ratio::new(BigInt::one(), two_b);
        (
            Quad::new(p.clone(), q.clone(), d.clone()),
            Quad::new(p, -q, d),
        )
    }

    /// The sum before integer extraction; exposed so callers can inspect the
    /// field element.
    pub fn c1_field_value(&self, n: usize, k: usize) -> Result<Quad> {
        let (ni, ki) = check_cell(n, k)?;
        if n >= self.inv_alpha_pows.len() {
            return Err(Error::CellOutOfRange {
                n,
                k,
                size: self.inv_alpha_pows.len() - 1,
            });
        }
        let d = self.inv_alpha_pows[0].radicand().clone();
        let mut total = Quad::from_integer(BigInt::zero(), d.clone());
        for j in 0..=(ni - ki) {
            let Some(c) = nonzero_product(&[(ni - j - 1, ki - 1), (ki + j - 1, ki - 1)]) else {
                continue;
            };
            let term = self.inv_alpha_pows[(j + ki) as usize].clone()
                * self.inv_beta_pows[(ni - j) as usize].clone()
                * Quad::from_integer(c, d.clone());
            total = total + term;
        }
        let scale = Ratio::new(BigInt::one(), self.b.pow(k as u32));
        Ok(total * Quad::rational(scale, d))
    }

    pub fn c1(&self, n: usize, k: usize) -> Result<BigInt> {
        let value = self.c1_field_value(n, k)?;
        value
            .to_integer()
            .ok_or_else(|| Error::NonIntegral(format!("c_1({n},{k}) = {value}")))
    }
}

/// Case 3 with `a = b + 1`, where `alpha = 1` and `beta = 1/b`:
/// `c_1(n, k) = sum_{i=0}^{n-k} b^{n-k-i} C(n-i-1, k-1) C(k+i-1, k-1)`.
pub fn c1_case3_binomial(b: u32, n: usize, k: usize) -> Result<BigInt> {
    let (n, k) = check_cell(n, k)?;
    let b = i64::from(b);
    Ok((0..=(n - k))
        .filter_map(|i| {
            let c = nonzero_product(&[(n - i - 1, k - 1), (k + i - 1, k - 1)])?;
            Some(c * ipow(b, n - k - i))
        })
        .sum())
}

/// Case 2 `c_2(n, k)`, split by the parity of `n`:
///
/// * `n = 2h`: `sum_{j=ceil(k/2)}^{h} a^{h-j} C(2j-1, k-1) C(h+j-1, h-j)`
/// * `n = 2h-1`: `sum_{j=ceil((k+1)/2)}^{h} a^{h-j} C(2j-2, k-1) C(h+j-2, h-j)`
pub fn c2_explicit_case2(a: u32, n: usize, k: usize) -> Result<BigInt> {
    let (n, k) = check_cell(n, k)?;
    let a = i64::from(a);
    let mut acc = BigInt::zero();
    if n % 2 == 0 {
        let h = n / 2;
        for j in (k + 1) / 2..=h {
            if let Some(c) = nonzero_product(&[(2 * j - 1, k - 1), (h + j - 1, h - j)]) {
                acc += c * ipow(a, h - j);
            }
        }
    } else {
        let h = (n + 1) / 2;
        for j in (k + 2) / 2..=h {
            if let Some(c) = nonzero_product(&[(2 * j - 2, k - 1), (h + j - 2, h - j)]) {
                acc += c * ipow(a, h - j);
            }
        }
    }
    Ok(acc)
}

// sum_{i=k}^{n-1} sum_{j=0}^{i-1} (m-1)^{i-k} a^{i-j} (a-1)^{n-2i+j}
//     C(i-1,k-1) C(n-i-1,i-j-1) C(i,j)
fn case1_cm_tail(a: i64, m: i64, n: i64, k: i64) -> BigInt {
    let mut acc = BigInt::zero();
    for i in k..n {
        let lift = binom(i - 1, k - 1);
        if lift.is_zero() {
            continue;
        }
        let step = ipow(m - 1, i - k);
        if step.is_zero() {
            continue;
        }
        for j in 0..i {
            let Some(c) = nonzero_product(&[(n - i - 1, i - j - 1), (i, j)]) else {
                continue;
            };
            acc += &step * &lift * c * ipow(a, i - j) * ipow(a - 1, n - 2 * i + j);
        }
    }
    acc
}

/// Case 1 `c_m(n, k)` with leading term `(m-1)^{n-k} C(n-1, k-1)`.
pub fn cm_explicit_case1(a: u32, m: u32, n: usize, k: usize) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::ZeroLift);
    }
    let (n, k) = check_cell(n, k)?;
    let (a, m) = (i64::from(a), i64::from(m));
    Ok(ipow(m - 1, n - k) * binom(n - 1, k - 1) + case1_cm_tail(a, m, n, k))
}

/// The same sum with the leading term as printed, `m^{n-k} C(n-1, k-1)`.
/// It disagrees with the lift of `c_1` whenever `k < n`; kept to demonstrate
/// exactly that.
pub fn cm_printed_case1(a: u32, m: u32, n: usize, k: usize) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::ZeroLift);
    }
    let (n, k) = check_cell(n, k)?;
    let (a, m) = (i64::from(a), i64::from(m));
    Ok(ipow(m, n - k) * binom(n - 1, k - 1) + case1_cm_tail(a, m, n, k))
}

/// `f_m(n)` without iterating the recurrence.
///
/// Case 1 uses the triple sum with leading term `m^{n-1}` (needs `m >= 1`),
/// case 2 the single sum `sum_j m^{n-2j-1} a^j C(n-1-j, j)`. Cases 3-5 sum
/// the lifted explicit `c_1` row. For `m = 0` every case returns
/// `c_1(n, 1) = f_0(n)` from its explicit formula.
pub fn fm_explicit(spec: CaseSpec, m: u32, n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, len: 0 });
    }
    let ni = n as i64;
    if let CaseSpec::EvenRuns { a } = spec {
        let (a, m) = (i64::from(a), i64::from(m));
        return Ok((0..=(ni - 1) / 2)
            .filter_map(|j| {
                let c = nonzero_product(&[(ni - 1 - j, j)])?;
                Some(c * ipow(m, ni - 2 * j - 1) * ipow(a, j))
            })
            .sum());
    }
    if m == 0 {
        return c1_explicit(spec, n, 1);
    }
    if let CaseSpec::DistinctAdjacent { a } = spec {
        let (a, m) = (i64::from(a), i64::from(m));
        let mut acc = ipow(m, ni - 1);
        for k in 1..ni {
            acc += case1_cm_tail(a, m, ni, k);
        }
        return Ok(acc);
    }
    let row: Vec<BigInt> = match spec {
        CaseSpec::AvoidZeroPairs { a, b } => {
            let eval = Case3Evaluator::new(a, b, n);
            (1..=n).map(|i| eval.c1(n, i)).collect::<Result<_>>()?
        }
        _ => (1..=n)
            .map(|i| c1_explicit(spec, n, i))
            .collect::<Result<_>>()?,
    };
    let mi = i64::from(m);
    let mut acc = BigInt::zero();
    for k in 1..=ni {
        for i in k..=ni {
            let c = &row[(i - 1) as usize];
            if c.is_zero() {
                continue;
            }
            acc += ipow(mi - 1, i - k) * binom(i - 1, k - 1) * c;
        }
    }
    Ok(acc)
}

/// The `c_m` triangle from whichever explicit formula covers `(spec, m)`:
/// `c_1` for every case at `m = 1`, the case-1 `c_m` sum for any `m >= 1`,
/// and the case-2 `c_2` sums at `m = 2`. `None` when no formula applies.
pub fn explicit_triangle(spec: CaseSpec, m: u32, size: usize) -> Option<Result<BigTriangle>> {
    match (spec, m) {
        (_, 1) => Some(c1_explicit_triangle(spec, size)),
        (CaseSpec::DistinctAdjacent { a }, m) if m >= 1 => Some(
            BigTriangle::try_from_fn(size, |n, k| cm_explicit_case1(a, m, n, k)).and_then(|t| t),
        ),
        (CaseSpec::EvenRuns { a }, 2) => {
            Some(BigTriangle::try_from_fn(size, |n, k| c2_explicit_case2(a, n, k)).and_then(|t| t))
        }
        _ => None,
    }
}
