//! Coefficient rings.
//!
//! Every algebra element in this crate is generic over a [`Ring`]. Two
//! exact rings ([`GaussianRational`], [`SymbolicScalar`]) back the symbolic
//! work; `f64` and [`Complex64`] back the rotor numerics, where sines and
//! cosines of arbitrary angles are irrational.

mod gaussian;
pub(crate) mod symbolic;

use std::fmt;

pub use gaussian::GaussianRational;
pub use num::complex::Complex64;
pub use symbolic::{CombineKind, LinearExponent, Monomial, SymbolicScalar};

/// Commutative ring with unit, as needed by the multivector containers.
///
/// Methods take references so that big-number coefficients are not cloned
/// on every operation.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// The rational `numer / denom`. Panics when `denom == 0`.
    fn from_ratio(numer: i64, denom: i64) -> Self;

    /// Complex conjugation; identity on real rings.
    fn conj(&self) -> Self;

    /// Multiplicative inverse when it exists inside the ring.
    fn try_inv(&self) -> Option<Self>;

    fn from_int(value: i64) -> Self {
        Self::from_ratio(value, 1)
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// Rings with a distinguished imaginary unit.
pub trait ComplexRing: Ring {
    fn imaginary_unit() -> Self;
}

/// Rings whose values can be compared numerically (floating point).
pub trait FloatLike: Ring {
    /// Largest absolute deviation between two values.
    fn abs_diff(&self, other: &Self) -> f64;
    fn from_f64(value: f64) -> Self;
}

impl Ring for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        numer as f64 / denom as f64
    }
    fn conj(&self) -> Self {
        *self
    }
    fn try_inv(&self) -> Option<Self> {
        (*self != 0.0).then(|| 1.0 / self)
    }
}

impl FloatLike for f64 {
    fn abs_diff(&self, other: &Self) -> f64 {
        (self - other).abs()
    }
    fn from_f64(value: f64) -> Self {
        value
    }
}

impl Ring for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_ratio(numer: i64, denom: i64) -> Self {
        Complex64::new(f64::from_ratio(numer, denom), 0.0)
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn try_inv(&self) -> Option<Self> {
        (!Ring::is_zero(self)).then(|| Complex64::new(1.0, 0.0) / self)
    }
}

impl ComplexRing for Complex64 {
    fn imaginary_unit() -> Self {
        Complex64::new(0.0, 1.0)
    }
}

impl FloatLike for Complex64 {
    fn abs_diff(&self, other: &Self) -> f64 {
        (self.re - other.re).abs().max((self.im - other.im).abs())
    }
    fn from_f64(value: f64) -> Self {
        Complex64::new(value, 0.0)
    }
}

/// Exact rings that contain the Gaussian rationals.
pub trait ExactCoeff: ComplexRing {
    fn from_gaussian(value: &GaussianRational) -> Self;
}

impl ExactCoeff for GaussianRational {
    fn from_gaussian(value: &GaussianRational) -> Self {
        value.clone()
    }
}

impl ExactCoeff for SymbolicScalar {
    fn from_gaussian(value: &GaussianRational) -> Self {
        SymbolicScalar::constant(value.clone())
    }
}
