//! Power series in `z` truncated at a fixed order, with polynomial
//! coefficients in `q, p`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::BivarPoly;
use crate::scalar::Coefficient;

/// `Σ_{i <= order} coeffs[i]·z^i`; arithmetic discards every power above
/// `order`.
#[derive(Clone, PartialEq)]
pub struct ZSeries<C> {
    order: usize,
    coeffs: Vec<BivarPoly<C>>,
}

impl<C: Coefficient> ZSeries<C> {
    pub fn zero(order: usize) -> Self {
        ZSeries {
            order,
            coeffs: vec![BivarPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BivarPoly::one(), order)
    }

    pub fn constant(c: BivarPoly<C>, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `z` (just `0` at order 0).
    pub fn z(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = BivarPoly::one();
        }
        s
    }

    /// Coefficients beyond `order` are dropped, missing ones are zero.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = BivarPoly<C>>) -> Self {
        let mut s = Self::zero(order);
        for (i, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[i] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, i: usize) -> &BivarPoly<C> {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BivarPoly<C>] {
        &self.coeffs
    }

    /// Same series with a lower truncation order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot raise truncation order");
        Self::from_coeffs(order, self.coeffs.iter().cloned())
    }

    pub fn scale(&self, c: &BivarPoly<C>) -> Self {
        Self::from_coeffs(self.order, self.coeffs.iter().map(|x| x * c))
    }

    /// Multiply by `z`.
    pub fn shift(&self) -> Self {
        let mut s = Self::zero(self.order);
        for i in 1..=self.order {
            s.coeffs[i] = self.coeffs[i - 1].clone();
        }
        s
    }

    /// `1 / self`; the constant term must be a unit constant.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .as_constant()
            .and_then(|c| c.unit_inverse())
            .ok_or(Error::NotInvertible)?;
        let inv0 = BivarPoly::constant(inv0);
        let mut out = Self::zero(self.order);
        out.coeffs[0] = inv0.clone();
        for n in 1..=self.order {
            let mut acc = BivarPoly::zero();
            for i in 1..=n {
                acc += &(&self.coeffs[i] * &out.coeffs[n - i]);
            }
            out.coeffs[n] = -&(&acc * &inv0);
        }
        Ok(out)
    }

    pub fn swap_qp(&self) -> Self {
        Self::from_coeffs(self.order, self.coeffs.iter().map(BivarPoly::swap_qp))
    }

    /// Coefficients evaluated at numeric `q, p`.
    pub fn eval(&self, q: &C, p: &C) -> Vec<C> {
        self.coeffs.iter().map(|c| c.eval(q, p)).collect()
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order, other.order, "series truncation orders differ");
    }
}

impl<C: Coefficient> Add<&ZSeries<C>> for &ZSeries<C> {
    type Output = ZSeries<C>;

    fn add(self, rhs: &ZSeries<C>) -> ZSeries<C> {
        self.check_order(rhs);
        ZSeries::from_coeffs(self.order, self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b))
    }
}

impl<C: Coefficient> Sub<&ZSeries<C>> for &ZSeries<C> {
    type Output = ZSeries<C>;

    fn sub(self, rhs: &ZSeries<C>) -> ZSeries<C> {
        self.check_order(rhs);
        ZSeries::from_coeffs(self.order, self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b))
    }
}

impl<C: Coefficient> Neg for &ZSeries<C> {
    type Output = ZSeries<C>;

    fn neg(self) -> ZSeries<C> {
        ZSeries::from_coeffs(self.order, self.coeffs.iter().map(|a| -a))
    }
}

impl<C: Coefficient> Mul<&ZSeries<C>> for &ZSeries<C> {
    type Output = ZSeries<C>;

    fn mul(self, rhs: &ZSeries<C>) -> ZSeries<C> {
        self.check_order(rhs);
        let mut out = ZSeries::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=self.order - i].iter().enumerate() {
                out.coeffs[i + j] += &(a * b);
            }
        }
        out
    }
}

impl<C: Coefficient> fmt::Display for ZSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "z^{i}: {c}")?;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for ZSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZSeries(order {}) ", self.order)?;
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type S = ZSeries<i64>;
    type P = BivarPoly<i64>;

    #[test]
    fn geometric_series() {
        let one_minus_qz = &S::one(5) - &S::z(5).scale(&P::q());
        let inv = one_minus_qz.reciprocal().unwrap();
        for i in 0..=5 {
            assert_eq!(*inv.coeff(i), P::q().pow(i as u32));
        }
        assert_eq!(&inv * &one_minus_qz, S::one(5));
    }

    #[test]
    fn reciprocal_needs_unit_constant() {
        assert_eq!(S::z(3).reciprocal(), Err(Error::NotInvertible));
        assert!(S::constant(P::constant(2), 3).reciprocal().is_err());
        assert!(S::constant(P::q(), 3).reciprocal().is_err());
        assert!(S::constant(P::constant(-1), 3).reciprocal().is_ok());
        // over the rationals any nonzero constant is a unit
        let two = ZSeries::<Ratio<i64>>::constant(BivarPoly::constant(Ratio::from_integer(2)), 3);
        let half = two.reciprocal().unwrap();
        assert_eq!(half.coeff(0).as_constant(), Some(Ratio::new(1, 2)));
    }

    #[test]
    fn shift_and_truncate() {
        let s = S::from_coeffs(3, (1..=4).map(P::constant));
        assert_eq!(s.shift().eval(&1, &1), vec![0, 1, 2, 3]);
        assert_eq!(s.truncate(1).eval(&1, &1), vec![1, 2]);
        assert_eq!(S::z(0), S::zero(0));
    }

    #[test]
    fn product_truncates() {
        let s = &S::one(2) + &S::z(2);
        let cube = &(&s * &s) * &s;
        assert_eq!(cube.eval(&1, &1), vec![1, 3, 3]);
    }
}
