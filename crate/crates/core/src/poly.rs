//! Sparse polynomials in two commuting variables `q` and `p`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::scalar::Coefficient;

/// Exponent pair `(deg_q, deg_p)`.
pub type Monomial = (u32, u32);

/// Polynomial in `q, p` with coefficients in `C`; zero coefficients are
/// never stored.
#[derive(Clone, PartialEq)]
pub struct BivarPoly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> Default for BivarPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> BivarPoly<C> {
    pub fn zero() -> Self {
        BivarPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c·q^dq·p^dp`.
    pub fn monomial(c: C, dq: u32, dp: u32) -> Self {
        let mut out = Self::zero();
        out.add_term((dq, dp), c);
        out
    }

    pub fn q() -> Self {
        Self::monomial(C::one(), 1, 0)
    }

    pub fn p() -> Self {
        Self::monomial(C::one(), 0, 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&m) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, dq: u32, dp: u32) -> C {
        self.terms.get(&(dq, dp)).cloned().unwrap_or_else(C::zero)
    }

    /// Nonzero terms in increasing `(deg_q, deg_p)` order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &C)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest `deg_q + deg_p` over the nonzero terms.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    /// The constant value, if the polynomial has no `q` or `p` terms.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(&m, x)| (m, x.clone() * c.clone())))
    }

    /// Exchange the roles of `q` and `p`.
    pub fn swap_qp(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())))
    }

    /// Substitute `p := q`.
    pub fn diagonal(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(a, b), c)| ((a + b, 0), c.clone())))
    }

    pub fn eval(&self, q: &C, p: &C) -> C {
        self.terms.iter().fold(C::zero(), |acc, (&(a, b), c)| {
            acc + c.clone() * num_traits::pow(q.clone(), a as usize) * num_traits::pow(p.clone(), b as usize)
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl<C: Coefficient> Add<&BivarPoly<C>> for &BivarPoly<C> {
    type Output = BivarPoly<C>;

    fn add(self, rhs: &BivarPoly<C>) -> BivarPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Add for BivarPoly<C> {
    type Output = BivarPoly<C>;

    fn add(mut self, rhs: BivarPoly<C>) -> BivarPoly<C> {
        self += &rhs;
        self
    }
}

impl<C: Coefficient> AddAssign<&BivarPoly<C>> for BivarPoly<C> {
    fn add_assign(&mut self, rhs: &BivarPoly<C>) {
        for (&m, c) in &rhs.terms {
            self.add_term(m, c.clone());
        }
    }
}

impl<C: Coefficient> Neg for &BivarPoly<C> {
    type Output = BivarPoly<C>;

    fn neg(self) -> BivarPoly<C> {
        BivarPoly::from_terms(self.terms.iter().map(|(&m, c)| (m, -c.clone())))
    }
}

impl<C: Coefficient> Neg for BivarPoly<C> {
    type Output = BivarPoly<C>;

    fn neg(self) -> BivarPoly<C> {
        -&self
    }
}

impl<C: Coefficient> Sub<&BivarPoly<C>> for &BivarPoly<C> {
    type Output = BivarPoly<C>;

    fn sub(self, rhs: &BivarPoly<C>) -> BivarPoly<C> {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(m, -c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for BivarPoly<C> {
    type Output = BivarPoly<C>;

    fn sub(self, rhs: BivarPoly<C>) -> BivarPoly<C> {
        &self - &rhs
    }
}

impl<C: Coefficient> Mul<&BivarPoly<C>> for &BivarPoly<C> {
    type Output = BivarPoly<C>;

    fn mul(self, rhs: &BivarPoly<C>) -> BivarPoly<C> {
        let mut out = BivarPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for BivarPoly<C> {
    type Output = BivarPoly<C>;

    fn mul(self, rhs: BivarPoly<C>) -> BivarPoly<C> {
        &self * &rhs
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: char, e: u32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{e}"),
    }
}

impl<C: Coefficient> fmt::Display for BivarPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (&(a, b), c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            let bare = a + b > 0 && c.is_one();
            if !bare {
                write!(f, "{c}")?;
            }
            if a > 0 {
                if !bare {
                    f.write_str("*")?;
                }
                write_power(f, 'q', a)?;
            }
            if b > 0 {
                if !bare || a > 0 {
                    f.write_str("*")?;
                }
                write_power(f, 'p', b)?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for BivarPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({self})")
    }
}
