//! Exact arithmetic in `Q(sqrt(D))`.
//!
//! A [`QuadraticNumber`] is `p + q sqrt(D)` with rational `p`, `q` and a
//! fixed nonnegative radicand `D`. The square root is never approximated.
//! When `D` is a perfect square the irrational part is folded into `p` on
//! construction, so `q == 0` exactly when the value is rational.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::{Integer, Roots};
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub trait RadicandBase: Integer + Signed + Roots + Clone + fmt::Debug + fmt::Display {}
impl<T> RadicandBase for T where T: Integer + Signed + Roots + Clone + fmt::Debug + fmt::Display {}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticNumber<T: Clone + Integer> {
    p: Ratio<T>,
    q: Ratio<T>,
    d: T,
}

impl<T: RadicandBase> QuadraticNumber<T> {
    /// `p + q sqrt(d)`. Panics on a negative radicand.
    pub fn new(p: Ratio<T>, q: Ratio<T>, d: T) -> Self {
        assert!(!d.is_negative(), "radicand must be nonnegative");
        let root = d.sqrt();
        if root.clone() * root.clone() == d {
            let p = p + q * Ratio::from_integer(root);
            return Self {
                p,
                q: Ratio::zero(),
                d,
            };
        }
        Self { p, q, d }
    }

    pub fn rational(p: Ratio<T>, d: T) -> Self {
        Self::new(p, Ratio::zero(), d)
    }

    pub fn from_integer(n: T, d: T) -> Self {
        Self::rational(Ratio::from_integer(n), d)
    }

    /// `sqrt(d)` itself.
    pub fn sqrt_of(d: T) -> Self {
        Self::new(Ratio::zero(), Ratio::one(), d)
    }

    pub fn rational_part(&self) -> &Ratio<T> {
        &self.p
    }

    pub fn irrational_part(&self) -> &Ratio<T> {
        &self.q
    }

    pub fn radicand(&self) -> &T {
        &self.d
    }

    /// `p^2 - q^2 D`, the product with the conjugate.
    pub fn norm(&self) -> Ratio<T> {
        self.p.clone() * self.p.clone()
            - self.q.clone() * self.q.clone() * Ratio::from_integer(self.d.clone())
    }

    pub fn conjugate(&self) -> Self {
        Self {
            p: self.p.clone(),
            q: -self.q.clone(),
            d: self.d.clone(),
        }
    }

    /// Multiplicative inverse; `None` iff the norm vanishes.
    pub fn inverse(&self) -> Option<Self> {
        let norm = self.norm();
        if norm.is_zero() {
            return None;
        }
        Some(Self {
            p: self.p.clone() / norm.clone(),
            q: -self.q.clone() / norm,
            d: self.d.clone(),
        })
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut acc = Self::from_integer(T::one(), self.d.clone());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.q.is_zero() && self.p.is_integer()
    }

    pub fn to_integer(&self) -> Option<T> {
        self.is_integer().then(|| self.p.to_integer())
    }

    fn check_field(&self, other: &Self) {
        assert!(
            self.d == other.d,
            "mixing Q(sqrt({})) and Q(sqrt({}))",
            self.d,
            other.d
        );
    }
}

impl<T: RadicandBase> Add for QuadraticNumber<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        self.check_field(&rhs);
        Self {
            p: self.p + rhs.p,
            q: self.q + rhs.q,
            d: self.d,
        }
    }
}

impl<T: RadicandBase> Sub for QuadraticNumber<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: RadicandBase> Neg for QuadraticNumber<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            p: -self.p,
            q: -self.q,
            d: self.d,
        }
    }
}

impl<T: RadicandBase> Mul for QuadraticNumber<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.check_field(&rhs);
        let d = Ratio::from_integer(self.d.clone());
        Self {
            p: self.p.clone() * rhs.p.clone() + self.q.clone() * rhs.q.clone() * d,
            q: self.p * rhs.q + rhs.p * self.q,
            d: self.d,
        }
    }
}

impl<T: RadicandBase> fmt::Display for QuadraticNumber<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{} + {}*sqrt({})", self.p, self.q, self.d)
        }
    }
}
