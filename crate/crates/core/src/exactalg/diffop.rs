use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use super::{binomial, Poly, RatFunc, Rational, WeightedPoly};
use crate::error::{Error, Result};

/// Linear differential operator `sum_i c_i(x) D^i` with rational-function coefficients.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DiffOp {
    coeffs: BTreeMap<usize, RatFunc>,
}

impl DiffOp {
    pub fn zero() -> Self {
        DiffOp::default()
    }

    pub fn identity() -> Self {
        DiffOp::multiplication(RatFunc::one())
    }

    /// The derivative `D`.
    pub fn derivative() -> Self {
        DiffOp::from_terms([(1, RatFunc::one())])
    }

    /// Multiplication by `f`, an operator of order zero.
    pub fn multiplication(f: RatFunc) -> Self {
        DiffOp::from_terms([(0, f)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, RatFunc)>) -> Self {
        let mut op = DiffOp::zero();
        for (i, c) in terms {
            op.add_term(i, &c);
        }
        op
    }

    /// `coeffs[i]` is the coefficient of `D^i`.
    pub fn from_polys(coeffs: &[Poly]) -> Self {
        DiffOp::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, p)| (i, RatFunc::from_poly(p.clone()))),
        )
    }

    fn add_term(&mut self, i: usize, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.get(&i) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if sum.is_zero() {
            self.coeffs.remove(&i);
        } else {
            self.coeffs.insert(i, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn order(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, i: usize) -> RatFunc {
        self.coeffs.get(&i).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &RatFunc)> {
        self.coeffs.iter().map(|(i, c)| (*i, c))
    }

    pub fn is_polynomial(&self) -> bool {
        self.coeffs.values().all(RatFunc::is_polynomial)
    }

    /// Dense coefficient list `[c_0, ..., c_order]` when every coefficient is a polynomial.
    pub fn poly_coeffs(&self) -> Option<Vec<Poly>> {
        let order = match self.order() {
            Some(o) => o,
            None => return Some(Vec::new()),
        };
        (0..=order)
            .map(|i| self.coeff(i).as_poly().cloned())
            .collect()
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, c);
        }
        out
    }

    pub fn sub(&self, other: &DiffOp) -> DiffOp {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> DiffOp {
        DiffOp::from_terms(self.terms().map(|(i, f)| (i, f.scale(c))))
    }

    /// `self + f * I`.
    pub fn add_multiplier(&self, f: &RatFunc) -> DiffOp {
        let mut out = self.clone();
        out.add_term(0, f);
        out
    }

    /// `self + c * I`.
    pub fn add_constant(&self, c: &Rational) -> DiffOp {
        self.add_multiplier(&RatFunc::constant(c.clone()))
    }

    /// `self ∘ inner` by the Leibniz rule
    /// `(c D^i) ∘ (d D^j) = sum_k C(i,k) c d^(k) D^(i+j-k)`.
    pub fn compose(&self, inner: &DiffOp) -> DiffOp {
        let mut out = DiffOp::zero();
        for (j, d) in inner.terms() {
            // derivatives of d up to the highest order of self
            let max_i = self.order().unwrap_or(0);
            let mut derivs = Vec::with_capacity(max_i + 1);
            derivs.push(d.clone());
            for k in 1..=max_i {
                let next = derivs[k - 1].derivative();
                derivs.push(next);
            }
            for (i, c) in self.terms() {
                for (k, dk) in derivs.iter().enumerate().take(i + 1) {
                    if dk.is_zero() {
                        continue;
                    }
                    let term = c.mul(dk).scale(&binomial(i as u32, k as u32));
                    out.add_term(i + j - k, &term);
                }
            }
        }
        out
    }

    /// Applies the operator to a rational function.
    pub fn apply_ratfunc(&self, f: &RatFunc) -> RatFunc {
        let mut acc = RatFunc::zero();
        let mut deriv = f.clone();
        let mut k = 0;
        for (i, c) in self.terms() {
            while k < i {
                deriv = deriv.derivative();
                k += 1;
            }
            acc = acc.add(&c.mul(&deriv));
        }
        acc
    }

    /// Applies the operator to a polynomial; fails unless the result is a polynomial.
    pub fn apply_poly(&self, y: &Poly) -> Result<Poly> {
        let r = self.apply_ratfunc(&RatFunc::from_poly(y.clone()));
        r.as_poly()
            .cloned()
            .ok_or_else(|| Error::InternalNoncancellation(format!("non-polynomial result {r}")))
    }

    /// Applies the operator to a weighted polynomial.
    ///
    /// Every coefficient denominator must be of the form `(x-1)^a (x+1)^b`.
    pub fn apply_weighted(&self, w: &WeightedPoly) -> Result<WeightedPoly> {
        let mut acc = WeightedPoly::zero();
        let mut deriv = w.clone();
        let mut k = 0;
        for (i, c) in self.terms() {
            while k < i {
                deriv = deriv.derivative();
                k += 1;
            }
            let den = WeightedPoly::from_poly(c.den().clone());
            if den.poly() != &Poly::one() {
                return Err(Error::UnsupportedDenominator(c.den().to_string()));
            }
            let term = deriv.mul_poly(c.num()).mul_power(&-den.nu(), &-den.mu());
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .rev()
            .map(|(i, c)| match i {
                0 => format!("[{c}]"),
                1 => format!("[{c}] D"),
                _ => format!("[{c}] D^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffOp({self})")
    }
}

impl DiffOp {
    /// True when no coefficient is stored at order zero.
    pub fn has_no_multiplier(&self) -> bool {
        !self.coeffs.contains_key(&0)
    }

    /// Leading coefficient, or zero for the zero operator.
    pub fn leading(&self) -> RatFunc {
        self.order().map(|o| self.coeff(o)).unwrap_or_else(RatFunc::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    fn x() -> RatFunc {
        RatFunc::from_poly(Poly::x())
    }

    #[test]
    fn product_rule() {
        let d = DiffOp::derivative();
        let xd = DiffOp::from_terms([(1, x())]);
        let expected = DiffOp::from_terms([(2, x()), (1, RatFunc::one())]);
        assert_eq!(d.compose(&xd), expected);
        assert_eq!(d.compose(&d), DiffOp::from_terms([(2, RatFunc::one())]));
    }

    #[test]
    fn apply_examples() {
        let d = DiffOp::derivative();
        let w = WeightedPoly::from_poly(Poly::from_ints(&[-1, 1]));
        assert_eq!(d.apply_weighted(&w).unwrap(), WeightedPoly::from_poly(Poly::one()));

        let legendre = DiffOp::from_polys(&[
            Poly::zero(),
            Poly::from_ints(&[0, 2]),
            Poly::from_ints(&[-1, 0, 1]),
        ]);
        let w = WeightedPoly::from_poly(Poly::x());
        let out = legendre.apply_weighted(&w).unwrap();
        assert_eq!(out.to_poly().unwrap(), Poly::from_ints(&[0, 2]));

        let singular = DiffOp::multiplication(RatFunc::simple_pole(int(-2), &int(1)));
        let w = WeightedPoly::canonicalize(int(1), int(0), Poly::one());
        assert_eq!(
            singular.apply_weighted(&w).unwrap(),
            WeightedPoly::from_poly(Poly::constant(int(-2)))
        );
    }

    #[test]
    fn rejects_foreign_denominators() {
        let op = DiffOp::multiplication(RatFunc::simple_pole(int(1), &int(2)));
        let w = WeightedPoly::from_poly(Poly::x());
        assert!(matches!(op.apply_weighted(&w), Err(Error::UnsupportedDenominator(_))));
    }

    #[test]
    fn composition_with_singular_factor_matches_action() {
        let a = DiffOp::from_terms([(2, RatFunc::from_poly(Poly::from_ints(&[-1, 0, 1])))]);
        let b = DiffOp::multiplication(RatFunc::simple_pole(int(1), &int(1)));
        let ab = a.compose(&b);
        for k in 0..=6 {
            let mono = RatFunc::from_poly(Poly::monomial(int(1), k));
            let direct = a.apply_ratfunc(&b.apply_ratfunc(&mono));
            assert_eq!(ab.apply_ratfunc(&mono), direct, "k = {k}");
        }
    }

    #[test]
    fn zero_terms_are_dropped() {
        let d = DiffOp::derivative();
        assert!(d.sub(&d).is_zero());
        assert_eq!(d.add_constant(&int(0)), d);
        assert_eq!(d.order(), Some(1));
        assert!(d.has_no_multiplier());
    }
}
