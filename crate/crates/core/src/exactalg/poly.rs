use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{int, Rational};

/// Dense univariate polynomial over the rationals, with Laurent support.
///
/// `coeffs[k]` is the coefficient of `x^(min_exp + k)`. The representation is
/// canonical: the highest stored coefficient is nonzero, `min_exp` is zero for
/// ordinary polynomials and equals the lowest nonzero exponent otherwise, and
/// the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    min_exp: i64,
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_laurent(0, vec![c])
    }

    /// `c * x^exp`; `exp` may be negative.
    pub fn monomial(c: Rational, exp: i64) -> Self {
        Poly::from_laurent(exp, vec![c])
    }

    /// Ascending coefficients starting at `x^0`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Poly::from_laurent(0, coeffs)
    }

    /// Ascending integer coefficients starting at `x^0`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Ascending coefficients starting at `x^min_exp`.
    pub fn from_laurent(min_exp: i64, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Poly::zero();
        }
        let mut min_exp = min_exp;
        if min_exp < 0 {
            let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count() as i64;
            let shift = lead_zeros.min(-min_exp);
            coeffs.drain(..shift as usize);
            min_exp += shift;
        } else if min_exp > 0 {
            let mut padded = vec![Rational::zero(); min_exp as usize];
            padded.extend(coeffs);
            coeffs = padded;
            min_exp = 0;
        }
        Poly { min_exp, coeffs }
    }

    /// `(x - a)^n`.
    pub fn linear_power(a: &Rational, n: u32) -> Self {
        let factor = Poly::new(vec![-a.clone(), Rational::one()]);
        factor.pow(n)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when no negative powers occur.
    pub fn is_ordinary(&self) -> bool {
        self.min_exp == 0
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Highest exponent present, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64 - 1)
        }
    }

    /// Coefficient of `x^exp`.
    pub fn coeff(&self, exp: i64) -> Rational {
        let k = exp - self.min_exp;
        if k < 0 || k >= self.coeffs.len() as i64 {
            Rational::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Stored coefficients, ascending from `x^min_exp`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficients of an ordinary polynomial ascending from `x^0`.
    pub fn to_vec(&self) -> Vec<Rational> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|e| self.coeff(e)).collect(),
        }
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        Poly::from_laurent(self.min_exp + k, self.coeffs.clone())
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * int(self.min_exp + k as i64))
            .collect();
        Poly::from_laurent(self.min_exp - 1, coeffs)
    }

    pub fn nth_derivative(&self, n: u32) -> Poly {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn pow(&self, n: u32) -> Poly {
        (0..n).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Evaluates at `x`. Panics for `x = 0` when negative powers are present.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        if self.min_exp != 0 {
            acc *= super::powi(x, self.min_exp);
        }
        acc
    }

    /// Substitutes `inner` for the variable, by Horner's scheme.
    ///
    /// Panics if `self` has negative powers.
    pub fn compose(&self, inner: &Poly) -> Poly {
        assert!(self.is_ordinary(), "compose requires an ordinary polynomial");
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if (self.min_exp + k as i64).rem_euclid(2) == 1 {
                    -c.clone()
                } else {
                    c.clone()
                }
            })
            .collect();
        Poly::from_laurent(self.min_exp, coeffs)
    }

    /// Euclidean division of ordinary polynomials.
    ///
    /// Panics when `divisor` is zero or either operand has negative powers.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        assert!(self.is_ordinary() && divisor.is_ordinary());
        let dd = divisor.coeffs.len();
        if self.coeffs.len() < dd {
            return (Poly::zero(), self.clone());
        }
        let lead = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd + 1];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd - 1] / &lead;
            if q.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        rem.truncate(dd - 1);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Divides by `(x - a)` when it is a factor.
    pub fn divide_root(&self, a: &Rational) -> Option<Poly> {
        assert!(self.is_ordinary());
        if self.is_zero() || !self.eval(a).is_zero() {
            return None;
        }
        // synthetic division
        let n = self.coeffs.len();
        let mut quot = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for k in (1..n).rev() {
            carry = &carry * a + &self.coeffs[k];
            quot[k - 1] = carry.clone();
        }
        Some(Poly::new(quot))
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.leading_coeff().recip())
    }

    /// Monic greatest common divisor by the classical Euclidean algorithm.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(rhs.min_exp);
        let hi = self.degree().unwrap().max(rhs.degree().unwrap());
        let coeffs = (lo..=hi).map(|e| self.coeff(e) + rhs.coeff(e)).collect();
        Poly::from_laurent(lo, coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_laurent(self.min_exp + rhs.min_exp, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = self.min_exp + k as i64;
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = e == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match e {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn canonical_form() {
        assert_eq!(Poly::from_ints(&[0, 0]), Poly::zero());
        assert_eq!(Poly::from_laurent(-2, vec![int(0), int(1)]).min_exp(), -1);
        assert_eq!(Poly::from_laurent(2, vec![int(1)]), Poly::from_ints(&[0, 0, 1]));
        assert_eq!(Poly::from_laurent(-1, vec![int(0), int(3)]), Poly::constant(int(3)));
    }

    #[test]
    fn arithmetic() {
        let p = Poly::from_ints(&[-1, 0, 1]);
        let q = Poly::from_ints(&[1, 1]);
        assert_eq!(&p * &q, Poly::from_ints(&[-1, -1, 1, 1]));
        assert_eq!(&p - &p, Poly::zero());
        assert_eq!(&p + &q, Poly::from_ints(&[0, 1, 1]));
        assert_eq!(p.derivative(), Poly::from_ints(&[0, 2]));
        assert_eq!(Poly::linear_power(&int(1), 2), Poly::from_ints(&[1, -2, 1]));
    }

    #[test]
    fn laurent_derivative() {
        let p = Poly::monomial(int(3), -1);
        assert_eq!(p.derivative(), Poly::monomial(int(-3), -2));
        assert_eq!(Poly::constant(int(4)).derivative(), Poly::zero());
    }

    #[test]
    fn division_and_gcd() {
        let a = Poly::from_ints(&[-1, 0, 1]);
        let b = Poly::from_ints(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, Poly::from_ints(&[1, 1]));
        assert!(r.is_zero());
        let g = Poly::from_ints(&[2, 2]).gcd(&Poly::from_ints(&[-2, 0, 2]));
        assert_eq!(g, Poly::from_ints(&[1, 1]));
        assert_eq!(a.divide_root(&int(-1)), Some(Poly::from_ints(&[-1, 1])));
        assert_eq!(a.divide_root(&int(2)), None);
    }

    #[test]
    fn compose_and_eval() {
        let p = Poly::from_ints(&[0, 0, 1]);
        let inner = Poly::from_ints(&[-1, 0, 2]);
        assert_eq!(p.compose(&inner), Poly::from_ints(&[1, 0, -4, 0, 4]));
        assert_eq!(Poly::from_ints(&[1, 2, 3]).eval(&rat(1, 2)), rat(11, 4));
        assert_eq!(Poly::from_ints(&[1, 2, 3]).reflect(), Poly::from_ints(&[1, -2, 3]));
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_ints(&[-1, 0, 3]).to_string(), "3x^2 - 1");
        assert_eq!(Poly::new(vec![rat(1, 2), int(-1)]).to_string(), "-x + (1/2)");
        assert_eq!(Poly::monomial(int(3), -1).to_string(), "3x^-1");
    }
}
