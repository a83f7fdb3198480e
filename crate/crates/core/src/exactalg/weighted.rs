use std::fmt;

use num_traits::{One, Zero};

use super::{as_natural, int, Poly, Rational};
use crate::error::{Error, Result};

/// `(x-1)^nu (x+1)^mu p(x)` with rational exponents.
///
/// Canonical form absorbs every root of `p` at `x = 1` or `x = -1` into the
/// exponents, so two canonical values are equal exactly when they represent
/// the same function. The zero element is `(0, 0, 0)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightedPoly {
    nu: Rational,
    mu: Rational,
    p: Poly,
}

impl WeightedPoly {
    pub fn zero() -> Self {
        WeightedPoly {
            nu: Rational::zero(),
            mu: Rational::zero(),
            p: Poly::zero(),
        }
    }

    /// Divides out all factors `(x-1)` and `(x+1)` of `p` into the exponents.
    pub fn canonicalize(nu: Rational, mu: Rational, p: Poly) -> Self {
        assert!(p.is_ordinary(), "weighted polynomials need an ordinary factor");
        if p.is_zero() {
            return WeightedPoly::zero();
        }
        let (mut nu, mut mu, mut p) = (nu, mu, p);
        let one = Rational::one();
        let minus_one = -Rational::one();
        while let Some(q) = p.divide_root(&one) {
            p = q;
            nu += &one;
        }
        while let Some(q) = p.divide_root(&minus_one) {
            p = q;
            mu += &one;
        }
        WeightedPoly { nu, mu, p }
    }

    pub fn from_poly(p: Poly) -> Self {
        WeightedPoly::canonicalize(Rational::zero(), Rational::zero(), p)
    }

    /// `(x-1)^nu (x+1)^mu`.
    pub fn power(nu: Rational, mu: Rational) -> Self {
        WeightedPoly { nu, mu, p: Poly::one() }
    }

    pub fn nu(&self) -> &Rational {
        &self.nu
    }

    pub fn mu(&self) -> &Rational {
        &self.mu
    }

    pub fn poly(&self) -> &Poly {
        &self.p
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero()
    }

    /// Closed-form product rule:
    /// `D[(x-1)^v (x+1)^m p] = (x-1)^(v-1) (x+1)^(m-1) [v(x+1)p + m(x-1)p + (x^2-1)p']`.
    pub fn derivative(&self) -> Self {
        if self.is_zero() {
            return WeightedPoly::zero();
        }
        let xp1 = Poly::from_ints(&[1, 1]);
        let xm1 = Poly::from_ints(&[-1, 1]);
        let xsq = Poly::from_ints(&[-1, 0, 1]);
        let bracket = &(&(&xp1 * &self.p).scale(&self.nu) + &(&xm1 * &self.p).scale(&self.mu))
            + &(&xsq * &self.p.derivative());
        WeightedPoly::canonicalize(&self.nu - int(1), &self.mu - int(1), bracket)
    }

    pub fn nth_derivative(&self, n: u32) -> Self {
        (0..n).fold(self.clone(), |w, _| w.derivative())
    }

    /// Multiplies by `(x-1)^dnu (x+1)^dmu`.
    pub fn mul_power(&self, dnu: &Rational, dmu: &Rational) -> Self {
        if self.is_zero() {
            return WeightedPoly::zero();
        }
        WeightedPoly {
            nu: &self.nu + dnu,
            mu: &self.mu + dmu,
            p: self.p.clone(),
        }
    }

    pub fn mul_poly(&self, q: &Poly) -> Self {
        WeightedPoly::canonicalize(self.nu.clone(), self.mu.clone(), &self.p * q)
    }

    pub fn mul(&self, other: &WeightedPoly) -> Self {
        WeightedPoly::canonicalize(&self.nu + &other.nu, &self.mu + &other.mu, &self.p * &other.p)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() || self.is_zero() {
            return WeightedPoly::zero();
        }
        WeightedPoly {
            nu: self.nu.clone(),
            mu: self.mu.clone(),
            p: self.p.scale(c),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// Sum of two weighted polynomials whose exponents differ by integers.
    pub fn add(&self, other: &WeightedPoly) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let dnu = &self.nu - &other.nu;
        let dmu = &self.mu - &other.mu;
        if !dnu.is_integer() || !dmu.is_integer() {
            return Err(Error::IncommensurateExponents(
                format!("{}, {}", self.nu, self.mu),
                format!("{}, {}", other.nu, other.mu),
            ));
        }
        let nu = self.nu.clone().min(other.nu.clone());
        let mu = self.mu.clone().min(other.mu.clone());
        let lift = |w: &WeightedPoly| -> Poly {
            let a = as_natural(&(&w.nu - &nu)).expect("integer offset");
            let b = as_natural(&(&w.mu - &mu)).expect("integer offset");
            &(&Poly::linear_power(&Rational::one(), a) * &Poly::linear_power(&-Rational::one(), b))
                * &w.p
        };
        let sum = &lift(self) + &lift(other);
        Ok(WeightedPoly::canonicalize(nu, mu, sum))
    }

    pub fn sub(&self, other: &WeightedPoly) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Expands into an ordinary polynomial; both exponents must be nonnegative integers.
    pub fn to_poly(&self) -> Result<Poly> {
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        match (as_natural(&self.nu), as_natural(&self.mu)) {
            (Some(a), Some(b)) => Ok(&(&Poly::linear_power(&Rational::one(), a)
                * &Poly::linear_power(&-Rational::one(), b))
                * &self.p),
            _ => Err(Error::NonIntegerExponent {
                nu: self.nu.clone(),
                mu: self.mu.clone(),
            }),
        }
    }
}

impl fmt::Display for WeightedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x-1)^({}) (x+1)^({}) [{}]", self.nu, self.mu, self.p)
    }
}

impl fmt::Debug for WeightedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightedPoly({self})")
    }
}
