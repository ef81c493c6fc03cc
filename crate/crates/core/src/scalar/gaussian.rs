use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use super::{ComplexRing, Ring};

/// Element of Q(i): `re + im·i` with both parts exact rationals.
///
/// `BigRational` keeps both parts in lowest terms with a positive
/// denominator, so derived equality and ordering are structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    /// `(re_n / re_d) + (im_n / im_d)·i`. Panics on a zero denominator.
    pub fn from_parts(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> Self {
        Self {
            re: ratio(re_n, re_d),
            im: ratio(im_n, im_d),
        }
    }

    pub fn real(value: BigRational) -> Self {
        Self {
            re: value,
            im: BigRational::zero(),
        }
    }

    pub fn int(value: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn i() -> Self {
        Self {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `|z|²`, always a non-negative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(Self {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::int(1);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Approximate value as `(re, im)`.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        use num::ToPrimitive;
        (
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

}

fn ratio(n: i64, d: i64) -> BigRational {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl From<i64> for GaussianRational {
    fn from(value: i64) -> Self {
        Self::int(value)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(value: BigRational) -> Self {
        Self::real(value)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Ring for GaussianRational {
    fn zero() -> Self {
        Self::int(0)
    }
    fn one() -> Self {
        Self::int(1)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
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
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::real(ratio(numer, denom))
    }
    fn conj(&self) -> Self {
        GaussianRational::conj(self)
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv()
    }
}

impl ComplexRing for GaussianRational {
    fn imaginary_unit() -> Self {
        Self::i()
    }
}

fn fmt_imag(im: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if im.is_one() {
        write!(f, "i")
    } else if (-im).is_one() {
        write!(f, "-i")
    } else {
        write!(f, "{im}*i")
    }
}

/// Prints in the expression grammar: `3/2`, `-i`, `1/2*i`, `(1 - 2*i)`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => fmt_imag(&self.im, f),
            (false, false) => {
                write!(f, "({} ", self.re)?;
                if self.im.is_negative() {
                    write!(f, "- ")?;
                    fmt_imag(&-self.im.clone(), f)?;
                } else {
                    write!(f, "+ ")?;
                    fmt_imag(&self.im, f)?;
                }
                write!(f, ")")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_of_gaussian_integer() {
        let a = GaussianRational::from_parts(1, 1, 1, 1);
        let b = GaussianRational::from_parts(1, 1, -1, 1);
        assert_eq!(&a * &b, GaussianRational::int(2));
    }

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let a = GaussianRational::from_parts(2, -4, 6, 8);
        assert_eq!(a, GaussianRational::from_parts(-1, 2, 3, 4));
        assert!(a.re().denom().is_positive());
    }

    #[test]
    fn inverse() {
        let a = GaussianRational::from_parts(3, 1, 4, 1);
        assert_eq!(&a * &a.inv().unwrap(), GaussianRational::int(1));
        assert!(GaussianRational::int(0).inv().is_none());
        assert_eq!(GaussianRational::i().inv().unwrap(), -&GaussianRational::i());
    }

    #[test]
    fn display() {
        assert_eq!(GaussianRational::from_parts(3, 2, 0, 1).to_string(), "3/2");
        assert_eq!(GaussianRational::from_parts(0, 1, -1, 1).to_string(), "-i");
        assert_eq!(GaussianRational::from_parts(0, 1, 1, 2).to_string(), "1/2*i");
        assert_eq!(
            GaussianRational::from_parts(1, 1, -2, 1).to_string(),
            "(1 - 2*i)"
        );
    }
}
