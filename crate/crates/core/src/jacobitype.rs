//! Jacobi-type polynomials with one point mass at an endpoint.
//!
//! `P_n^{a,b,M,N} = P_n^{a,b} + M Q_n^{a,b} + N R_n^{a,b}` with `M N = 0`, where
//! `R_n` carries a factor `(x-1)` and `Q_n` a factor `(x+1)`.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{factorial, int, Poly, Rational};
use crate::jacobi::{jacobi_poly, JacobiParams};
use crate::special::pochhammer;

/// Point masses `M` at `x = -1` and `N` at `x = +1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MassParams {
    pub m: Rational,
    pub n: Rational,
}

impl MassParams {
    pub fn new(m: Rational, n: Rational) -> Self {
        MassParams { m, n }
    }

    pub fn none() -> Self {
        MassParams::new(Rational::zero(), Rational::zero())
    }

    /// Mass `N` at `+1` only.
    pub fn at_plus_one(n: Rational) -> Self {
        MassParams::new(Rational::zero(), n)
    }

    /// Mass `M` at `-1` only.
    pub fn at_minus_one(m: Rational) -> Self {
        MassParams::new(m, Rational::zero())
    }

    fn validate(&self) -> Result<()> {
        if self.m.is_negative() || self.n.is_negative() {
            return Err(Error::DegenerateParameter(format!(
                "negative mass (M = {}, N = {})",
                self.m, self.n
            )));
        }
        if self.m.is_positive() && self.n.is_positive() {
            return Err(Error::BothMassesPositive {
                m: self.m.clone(),
                n: self.n.clone(),
            });
        }
        Ok(())
    }
}

/// `A_n = (a+2)_{n-1} (a+b+2)_n / [2 n! (b+1)_{n-1}]` for `n >= 1`.
pub fn coefficient_a(n: u32, prm: &JacobiParams) -> Result<Rational> {
    if n == 0 {
        return Err(Error::DegenerateParameter("A_n needs n >= 1".into()));
    }
    let den = int(2) * factorial(n) * pochhammer(&(&prm.beta + int(1)), n - 1);
    if den.is_zero() {
        return Err(Error::DegenerateParameter(format!(
            "(beta+1)_(n-1) vanishes for beta = {}, n = {n}",
            prm.beta
        )));
    }
    let num = pochhammer(&(&prm.alpha + int(2)), n - 1)
        * pochhammer(&(&prm.alpha + &prm.beta + int(2)), n);
    Ok(num / den)
}

/// `R_n = A_n^{a,b} (x-1) P_{n-1}^{a+2,b}`, with `R_0 = 0`.
pub fn modifier_r(n: u32, prm: &JacobiParams) -> Result<Poly> {
    if n == 0 {
        return Ok(Poly::zero());
    }
    let a = coefficient_a(n, prm)?;
    let p = jacobi_poly(n - 1, &prm.shifted(2, 0))?;
    Ok((&Poly::from_ints(&[-1, 1]) * &p).scale(&a))
}

/// `Q_n = A_n^{b,a} (x+1) P_{n-1}^{a,b+2}`, with `Q_0 = 0`.
pub fn modifier_q(n: u32, prm: &JacobiParams) -> Result<Poly> {
    if n == 0 {
        return Ok(Poly::zero());
    }
    let a = coefficient_a(n, &prm.swapped())?;
    let p = jacobi_poly(n - 1, &prm.shifted(0, 2))?;
    Ok((&Poly::from_ints(&[1, 1]) * &p).scale(&a))
}

/// `P_n^{a,b,M,N}`; at most one of the masses may be positive.
pub fn jacobi_type_poly(n: u32, prm: &JacobiParams, mass: &MassParams) -> Result<Poly> {
    mass.validate()?;
    let mut y = jacobi_poly(n, prm)?;
    if mass.m.is_positive() {
        y = &y + &modifier_q(n, prm)?.scale(&mass.m);
    }
    if mass.n.is_positive() {
        y = &y + &modifier_r(n, prm)?.scale(&mass.n);
    }
    Ok(y)
}
