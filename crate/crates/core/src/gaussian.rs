//! Gaussian integers `re + im*i` over a checked integer type.
//!
//! Exact algorithms run first over `i128` and, if any intermediate overflows, are rerun over
//! [`BigInt`]. Every operation is checked and returns `None` on overflow or on an inexact
//! division.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Integer types usable as the components of a [`Gaussian`].
pub trait ExactInt: Clone + PartialEq + fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn eq_zero(&self) -> bool;
    fn checked_add(&self, o: &Self) -> Option<Self>;
    fn checked_sub(&self, o: &Self) -> Option<Self>;
    fn checked_mul(&self, o: &Self) -> Option<Self>;
    /// `self / o` when `o` divides `self` exactly.
    fn checked_div_exact(&self, o: &Self) -> Option<Self>;
    fn checked_neg(&self) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
}

impl ExactInt for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn eq_zero(&self) -> bool {
        *self == 0
    }
    fn checked_add(&self, o: &Self) -> Option<Self> {
        i128::checked_add(*self, *o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        i128::checked_sub(*self, *o)
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        i128::checked_mul(*self, *o)
    }
    fn checked_div_exact(&self, o: &Self) -> Option<Self> {
        if *o == 0 || i128::checked_rem(*self, *o)? != 0 {
            return None;
        }
        i128::checked_div(*self, *o)
    }
    fn checked_neg(&self) -> Option<Self> {
        i128::checked_neg(*self)
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ExactInt for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn eq_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn checked_add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn checked_div_exact(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            return None;
        }
        let (q, r) = self.div_rem(o);
        Zero::is_zero(&r).then_some(q)
    }
    fn checked_neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// A Gaussian integer over `T`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gaussian<T> {
    pub re: T,
    pub im: T,
}

/// Arbitrary-precision Gaussian integer.
pub type GaussianInt = Gaussian<BigInt>;

impl<T: fmt::Display + Signed> fmt::Display for Gaussian<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write_imag(f, &self.im, false),
            (false, false) => {
                write!(f, "{}", self.re)?;
                write_imag(f, &self.im, true)
            }
        }
    }
}

fn write_imag<T: fmt::Display + Signed>(f: &mut fmt::Formatter<'_>, im: &T, with_sign: bool) -> fmt::Result {
    let sign = if im.is_negative() { "-" } else if with_sign { "+" } else { "" };
    let mag = im.abs();
    if mag.is_one() {
        write!(f, "{sign}i")
    } else {
        write!(f, "{sign}{mag}i")
    }
}

impl<T: fmt::Debug> fmt::Debug for Gaussian<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}i)", self.re, self.im)
    }
}

impl<T: ExactInt> Gaussian<T> {
    pub fn new(re: T, im: T) -> Self {
        Gaussian { re, im }
    }

    pub fn from_parts(re: i64, im: i64) -> Self {
        Gaussian { re: T::from_i64(re), im: T::from_i64(im) }
    }

    pub fn zero() -> Self {
        Self::from_parts(0, 0)
    }

    pub fn one() -> Self {
        Self::from_parts(1, 0)
    }

    /// `i^k`.
    pub fn unit(k: u8) -> Self {
        match k % 4 {
            0 => Self::from_parts(1, 0),
            1 => Self::from_parts(0, 1),
            2 => Self::from_parts(-1, 0),
            _ => Self::from_parts(0, -1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.eq_zero() && self.im.eq_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.eq_zero()
    }

    pub fn conj(&self) -> Option<Self> {
        Some(Gaussian { re: self.re.clone(), im: self.im.checked_neg()? })
    }

    pub fn checked_add(&self, o: &Self) -> Option<Self> {
        Some(Gaussian { re: self.re.checked_add(&o.re)?, im: self.im.checked_add(&o.im)? })
    }

    pub fn checked_sub(&self, o: &Self) -> Option<Self> {
        Some(Gaussian { re: self.re.checked_sub(&o.re)?, im: self.im.checked_sub(&o.im)? })
    }

    pub fn checked_mul(&self, o: &Self) -> Option<Self> {
        let re = self.re.checked_mul(&o.re)?.checked_sub(&self.im.checked_mul(&o.im)?)?;
        let im = self.re.checked_mul(&o.im)?.checked_add(&self.im.checked_mul(&o.re)?)?;
        Some(Gaussian { re, im })
    }

    /// Multiplication by a rational integer.
    pub fn checked_scale(&self, k: &T) -> Option<Self> {
        Some(Gaussian { re: self.re.checked_mul(k)?, im: self.im.checked_mul(k)? })
    }

    /// `self / o` when `o` divides `self` in `Z[i]`.
    pub fn checked_div_exact(&self, o: &Self) -> Option<Self> {
        if o.im.eq_zero() {
            return Some(Gaussian { re: self.re.checked_div_exact(&o.re)?, im: self.im.checked_div_exact(&o.re)? });
        }
        let norm = o.re.checked_mul(&o.re)?.checked_add(&o.im.checked_mul(&o.im)?)?;
        let num = self.checked_mul(&o.conj()?)?;
        Some(Gaussian { re: num.re.checked_div_exact(&norm)?, im: num.im.checked_div_exact(&norm)? })
    }

    pub fn checked_neg(&self) -> Option<Self> {
        Some(Gaussian { re: self.re.checked_neg()?, im: self.im.checked_neg()? })
    }

    pub fn to_big(&self) -> GaussianInt {
        Gaussian { re: self.re.to_bigint(), im: self.im.to_bigint() }
    }
}

impl Gaussian<i64> {
    pub fn lift<T: ExactInt>(&self) -> Gaussian<T> {
        Gaussian::from_parts(self.re, self.im)
    }
}

impl Add for GaussianInt {
    type Output = GaussianInt;
    fn add(self, o: Self) -> Self {
        Gaussian { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for GaussianInt {
    type Output = GaussianInt;
    fn sub(self, o: Self) -> Self {
        Gaussian { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for GaussianInt {
    type Output = GaussianInt;
    fn mul(self, o: Self) -> Self {
        self.checked_mul(&o).expect("bigint multiplication cannot overflow")
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> Self {
        Gaussian { re: -self.re, im: -self.im }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::from_parts(re, im)
    }

    #[test]
    fn units() {
        let i = GaussianInt::unit(1);
        assert_eq!(i.clone() * i.clone(), g(-1, 0));
        assert_eq!(GaussianInt::unit(3), i.conj().unwrap());
        assert_eq!(GaussianInt::unit(6), g(-1, 0));
    }

    #[test]
    fn exact_division() {
        // (3+4i)(1-2i) = 11-2i
        assert_eq!(g(11, -2).checked_div_exact(&g(1, -2)), Some(g(3, 4)));
        assert_eq!(g(1, 0).checked_div_exact(&g(1, 1)), None);
        assert_eq!(g(1, 0).checked_div_exact(&g(0, 0)), None);
        assert_eq!(g(6, 4).checked_div_exact(&g(2, 0)), Some(g(3, 2)));
    }

    #[test]
    fn i128_overflow_is_reported() {
        let big = Gaussian::<i128>::new(i128::MAX, 0);
        assert!(big.checked_mul(&Gaussian::from_parts(2, 0)).is_none());
        assert!(big.checked_add(&Gaussian::from_parts(1, 0)).is_none());
    }

    #[test]
    fn display() {
        assert_eq!(g(0, 1).to_string(), "i");
        assert_eq!(g(0, -1).to_string(), "-i");
        assert_eq!(g(2, -3).to_string(), "2-3i");
        assert_eq!(g(-4, 0).to_string(), "-4");
    }

    proptest! {
        #[test]
        fn ring_laws(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50, e in -50i64..50, f in -50i64..50) {
            let (x, y, z) = (g(a, b), g(c, d), g(e, f));
            prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
            prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
            prop_assert_eq!((x.clone() * y.clone()).conj().unwrap(), x.conj().unwrap() * y.conj().unwrap());
            if !y.is_zero() {
                prop_assert_eq!((x.clone() * y.clone()).checked_div_exact(&y), Some(x.clone()));
            }
            let small = Gaussian::<i128>::from_parts(a, b).checked_mul(&Gaussian::from_parts(c, d)).unwrap();
            prop_assert_eq!(small.to_big(), x * y);
        }
    }
}
