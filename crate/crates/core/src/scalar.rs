//! Scalar traits shared by the exact-arithmetic modules.
//!
//! Polynomial coefficients and class counts are generic so the same code runs
//! over machine integers, big integers and rationals.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// Coefficient ring for [`BivarPoly`](crate::poly::BivarPoly) and
/// [`ZSeries`](crate::series::ZSeries).
pub trait Coefficient:
    Clone + PartialEq + Num + Neg<Output = Self> + FromPrimitive + Debug + Display + Send + Sync
{
    /// Multiplicative inverse if `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;
}

macro_rules! int_coefficient {
    ($($t:ty),*) => {$(
        impl Coefficient for $t {
            fn unit_inverse(&self) -> Option<Self> {
                match *self {
                    1 => Some(1),
                    -1 => Some(-1),
                    _ => None,
                }
            }
        }
    )*};
}

int_coefficient!(i32, i64, i128);

impl Coefficient for BigInt {
    fn unit_inverse(&self) -> Option<Self> {
        let one = BigInt::from(1);
        if *self == one || *self == -one.clone() {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl<T> Coefficient for Ratio<T>
where
    T: Clone + Integer + Signed + FromPrimitive + Debug + Display + Send + Sync,
    Ratio<T>: FromPrimitive,
{
    fn unit_inverse(&self) -> Option<Self> {
        if num_traits::Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Signed integer type used for class counts and closed formulas.
pub trait CountInt: Clone + Integer + Signed + FromPrimitive + Debug + Display {}

impl<T> CountInt for T where T: Clone + Integer + Signed + FromPrimitive + Debug + Display {}

pub(crate) fn from_i64<T: FromPrimitive>(x: i64) -> T {
    T::from_i64(x).expect("value does not fit in scalar type")
}

/// `C(a, b)`, zero whenever `b < 0` or `b > a` (including negative `a`).
pub fn binomial<T: CountInt>(a: i64, b: i64) -> T {
    if b < 0 || a < 0 || b > a {
        return T::zero();
    }
    let b = b.min(a - b);
    let mut acc = T::one();
    for i in 0..b {
        acc = acc * from_i64::<T>(a - i) / from_i64::<T>(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_boundaries() {
        assert_eq!(binomial::<i64>(5, 2), 10);
        assert_eq!(binomial::<i64>(0, 0), 1);
        assert_eq!(binomial::<i64>(3, 4), 0);
        assert_eq!(binomial::<i64>(-1, 0), 0);
        assert_eq!(binomial::<i64>(4, -1), 0);
        assert_eq!(binomial::<BigInt>(30, 15), BigInt::from(155_117_520));
    }

    #[test]
    fn pascal_rule() {
        for a in 1..25i64 {
            for b in 1..a {
                assert_eq!(
                    binomial::<i128>(a, b),
                    binomial::<i128>(a - 1, b - 1) + binomial::<i128>(a - 1, b)
                );
            }
        }
    }

    #[test]
    fn units() {
        assert_eq!(3i64.unit_inverse(), None);
        assert_eq!((-1i64).unit_inverse(), Some(-1));
        assert_eq!(BigInt::from(-1).unit_inverse(), Some(BigInt::from(-1)));
        assert_eq!(
            Ratio::new(2i64, 3).unit_inverse(),
            Some(Ratio::new(3i64, 2))
        );
        assert_eq!(Ratio::new(0i64, 1).unit_inverse(), None);
    }
}
