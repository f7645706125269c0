//! Scalar coefficient rings for parameter polynomials.
//!
//! Everything above this module is written against [`Coeff`], so the engine
//! runs over arbitrary-precision integers in production and over machine
//! integers in small tests.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact integral-domain scalar.
pub trait Coeff: Clone + Debug + Display + PartialEq + Zero + One + Send + Sync + 'static {
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn add_assign_ref(&mut self, rhs: &Self);
    fn sub_assign_ref(&mut self, rhs: &Self);
    fn neg_ref(&self) -> Self;
    /// `Some(q)` with `q * rhs == self`, `None` when no such `q` exists.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
    fn to_bigint(&self) -> BigInt;
    fn from_bigint(v: &BigInt) -> Option<Self>;
    fn is_negative(&self) -> bool;
    fn gcd_ref(&self, rhs: &Self) -> Self;
    fn abs_ref(&self) -> Self;
}

impl Coeff for BigInt {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self -= rhs;
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, rhs);
        r.is_zero().then_some(q)
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn gcd_ref(&self, rhs: &Self) -> Self {
        num_integer::Integer::gcd(self, rhs)
    }
    fn abs_ref(&self) -> Self {
        self.abs()
    }
}

macro_rules! machine_coeff {
    ($($t:ty),*) => {$(
        impl Coeff for $t {
            fn mul_ref(&self, rhs: &Self) -> Self {
                self.checked_mul(*rhs).expect("coefficient overflow")
            }
            fn add_assign_ref(&mut self, rhs: &Self) {
                *self = self.checked_add(*rhs).expect("coefficient overflow");
            }
            fn sub_assign_ref(&mut self, rhs: &Self) {
                *self = self.checked_sub(*rhs).expect("coefficient overflow");
            }
            fn neg_ref(&self) -> Self {
                self.checked_neg().expect("coefficient overflow")
            }
            fn exact_div(&self, rhs: &Self) -> Option<Self> {
                if *rhs == 0 || self % rhs != 0 {
                    return None;
                }
                Some(self / rhs)
            }
            fn from_i64(v: i64) -> Self {
                <$t>::try_from(v).expect("coefficient overflow")
            }
            fn to_bigint(&self) -> BigInt {
                BigInt::from(*self)
            }
            fn from_bigint(v: &BigInt) -> Option<Self> {
                ToPrimitive::to_i128(v).and_then(|w| <$t>::try_from(w).ok())
            }
            fn is_negative(&self) -> bool {
                *self < 0
            }
            fn gcd_ref(&self, rhs: &Self) -> Self {
                num_integer::Integer::gcd(self, rhs)
            }
            fn abs_ref(&self) -> Self {
                self.checked_abs().expect("coefficient overflow")
            }
        }
    )*};
}

machine_coeff!(i64, i128);
