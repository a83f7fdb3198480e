//! Classical Jacobi polynomials and the second-order Jacobi operator.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{
    as_integer, factorial, int, rat, DiffOp, Poly, RatFunc, Rational, WeightedPoly,
};
use crate::special::{minus_one_pow, pochhammer};

/// Jacobi parameters `(alpha, beta)`.
///
/// Weight and orthogonality contexts need both above `-1`; the polynomial
/// constructor accepts any rational pair for use with shifted parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JacobiParams {
    pub alpha: Rational,
    pub beta: Rational,
}

impl JacobiParams {
    pub fn new(alpha: Rational, beta: Rational) -> Self {
        JacobiParams { alpha, beta }
    }

    pub fn ints(alpha: i64, beta: i64) -> Self {
        JacobiParams::new(int(alpha), int(beta))
    }

    /// `(beta, alpha)`.
    pub fn swapped(&self) -> Self {
        JacobiParams::new(self.beta.clone(), self.alpha.clone())
    }

    /// `(alpha + da, beta + db)`.
    pub fn shifted(&self, da: i64, db: i64) -> Self {
        JacobiParams::new(&self.alpha + int(da), &self.beta + int(db))
    }
}

/// `P_n^{(alpha,beta)}` from the terminating `2F1` in the variable `(1-x)/2`.
pub fn jacobi_poly(n: u32, prm: &JacobiParams) -> Result<Poly> {
    if let Some(a) = as_integer(&prm.alpha) {
        if a <= -1 && a >= -(n as i64) {
            return Err(Error::DegenerateParameter(format!(
                "alpha = {a} makes the lower parameter of P_{n} vanish"
            )));
        }
    }
    let s = &prm.alpha + &prm.beta + int(n as i64 + 1);
    let half_one_minus_x = Poly::new(vec![rat(1, 2), rat(-1, 2)]);
    let mut term = Rational::one();
    let mut basis = Poly::one();
    let mut sum = Poly::one();
    for m in 0..n {
        let mi = int(m as i64);
        term = term * (int(m as i64) - int(n as i64)) * (&s + &mi)
            / ((&prm.alpha + int(1) + &mi) * int(m as i64 + 1));
        basis = &basis * &half_one_minus_x;
        sum = &sum + &basis.scale(&term);
    }
    let lead = pochhammer(&(&prm.alpha + int(1)), n) / factorial(n);
    Ok(sum.scale(&lead))
}

/// `(x^2-1) D^2 + [alpha - beta + (alpha+beta+2) x] D`.
pub fn jacobi_operator(prm: &JacobiParams) -> DiffOp {
    let first = Poly::new(vec![
        &prm.alpha - &prm.beta,
        &prm.alpha + &prm.beta + int(2),
    ]);
    DiffOp::from_terms([
        (2, RatFunc::from_poly(Poly::from_ints(&[-1, 0, 1]))),
        (1, RatFunc::from_poly(first)),
    ])
}

/// `n (n + alpha + beta + 1)`.
pub fn lambda2(n: u32, prm: &JacobiParams) -> Rational {
    let n = int(n as i64);
    &n * (&n + &prm.alpha + &prm.beta + int(1))
}

/// `L_2 y - lambda2(n) y` for a polynomial `y`.
pub fn eigen_residual(n: u32, prm: &JacobiParams, y: &Poly) -> Poly {
    let ly = jacobi_operator(prm)
        .apply_poly(y)
        .expect("polynomial coefficients");
    &ly - &y.scale(&lambda2(n, prm))
}

/// Value at `x = 1`, `(alpha+1)_n / n!`.
pub fn value_at_one(n: u32, prm: &JacobiParams) -> Rational {
    pochhammer(&(&prm.alpha + int(1)), n) / factorial(n)
}

/// `P_n`, or zero for negative `n` as used by contiguous relations.
pub fn jacobi_poly_or_zero(n: i64, prm: &JacobiParams) -> Result<Poly> {
    if n < 0 {
        Ok(Poly::zero())
    } else {
        jacobi_poly(n as u32, prm)
    }
}

/// Residuals of the two differentiation formulas
///
/// ```text
/// D[(x-1)^g P_n^{g,d}] = (n+g) (x-1)^(g-1) P_n^{g-1,d+1}
/// D[(x+1)^d P_n^{g,d}] = (n+d) (x+1)^(d-1) P_n^{g+1,d-1}
/// ```
///
/// computed on weighted polynomials. Both are zero for `g > 0`, `d > 0`.
pub fn derivative_formula_residuals(
    n: u32,
    prm: &JacobiParams,
) -> Result<(WeightedPoly, WeightedPoly)> {
    let (g, d) = (&prm.alpha, &prm.beta);
    let zero = Rational::zero();
    let p = jacobi_poly(n, prm)?;
    let n_ = int(n as i64);

    let lhs = WeightedPoly::canonicalize(g.clone(), zero.clone(), p.clone()).derivative();
    let rhs = WeightedPoly::canonicalize(g - int(1), zero.clone(), jacobi_poly(n, &prm.shifted(-1, 1))?)
        .scale(&(&n_ + g));
    let first = lhs.sub(&rhs)?;

    let lhs = WeightedPoly::canonicalize(zero.clone(), d.clone(), p).derivative();
    let rhs = WeightedPoly::canonicalize(zero, d - int(1), jacobi_poly(n, &prm.shifted(1, -1))?)
        .scale(&(&n_ + d));
    let second = lhs.sub(&rhs)?;
    Ok((first, second))
}

/// Residuals of the four contiguous relations (shift identities), in order:
///
/// ```text
/// P_n^{a,b} = P_n^{a+1,b-1} - P_{n-1}^{a+1,b}
/// (2n+a+b+1) P_n^{a,b} = (n+a+b+1) P_n^{a+1,b} - (n+b) P_{n-1}^{a+1,b}
/// (2n+a+b+2) (1-x)/2 P_n^{a+1,b} = (n+a+1) P_n^{a,b} - (n+1) P_{n+1}^{a,b}
/// D P_n^{a,b} = (n+a+b+1)/2 P_{n-1}^{a+1,b+1}
/// ```
pub fn contiguous_residuals(n: u32, prm: &JacobiParams) -> Result<[Poly; 4]> {
    let (a, b) = (&prm.alpha, &prm.beta);
    let n_ = int(n as i64);
    let ni = n as i64;
    let p = jacobi_poly(n, prm)?;
    let up_a = prm.shifted(1, 0);
    let p_up = jacobi_poly(n, &up_a)?;
    let p_up_prev = jacobi_poly_or_zero(ni - 1, &up_a)?;

    let r1 = &(&p - &jacobi_poly(n, &prm.shifted(1, -1))?) + &p_up_prev;

    let r2 = &(&p.scale(&(int(2) * &n_ + a + b + int(1))) - &p_up.scale(&(&n_ + a + b + int(1))))
        + &p_up_prev.scale(&(&n_ + b));

    let half_one_minus_x = Poly::new(vec![rat(1, 2), rat(-1, 2)]);
    let lhs3 = (&half_one_minus_x * &p_up).scale(&(int(2) * &n_ + a + b + int(2)));
    let rhs3 = &p.scale(&(&n_ + a + int(1))) - &jacobi_poly(n + 1, prm)?.scale(&(&n_ + int(1)));
    let r3 = &lhs3 - &rhs3;

    let rhs4 = jacobi_poly_or_zero(ni - 1, &prm.shifted(1, 1))?.scale(&((&n_ + a + b + int(1)) / int(2)));
    let r4 = &p.derivative() - &rhs4;
    Ok([r1, r2, r3, r4])
}

/// `P_n^{a,b}(x) - (-1)^n P_n^{b,a}(-x)`.
pub fn reflection_residual(n: u32, prm: &JacobiParams) -> Result<Poly> {
    let p = jacobi_poly(n, prm)?;
    let mirrored = jacobi_poly(n, &prm.swapped())?.reflect().scale(&minus_one_pow(n as i64));
    Ok(&p - &mirrored)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Three-term recurrence, an oracle independent of the hypergeometric construction.
    fn by_recurrence(n: u32, prm: &JacobiParams) -> Poly {
        let (a, b) = (&prm.alpha, &prm.beta);
        let p0 = Poly::one();
        if n == 0 {
            return p0;
        }
        let p1 = Poly::new(vec![(a - b) / int(2), (a + b + int(2)) / int(2)]);
        let (mut prev, mut cur) = (p0, p1);
        for k in 2..=n {
            let k_ = int(k as i64);
            let s = a + b;
            let c0 = int(2) * &k_ * (&k_ + &s) * (int(2) * &k_ + &s - int(2));
            let c1 = int(2) * &k_ + &s - int(1);
            let lin = Poly::new(vec![
                a * a - b * b,
                (int(2) * &k_ + &s) * (int(2) * &k_ + &s - int(2)),
            ]);
            let c2 = int(2) * (&k_ + a - int(1)) * (&k_ + b - int(1)) * (int(2) * &k_ + &s);
            let next = (&(&lin * &cur).scale(&c1) - &prev.scale(&c2)).scale(&c0.recip());
            prev = cur;
            cur = next;
        }
        cur
    }

    #[test]
    fn small_degrees() {
        let legendre = JacobiParams::ints(0, 0);
        assert_eq!(jacobi_poly(0, &legendre).unwrap(), Poly::one());
        assert_eq!(jacobi_poly(1, &legendre).unwrap(), Poly::x());
        assert_eq!(
            jacobi_poly(2, &legendre).unwrap(),
            Poly::new(vec![rat(-1, 2), int(0), rat(3, 2)])
        );
        let prm = JacobiParams::new(int(1), rat(1, 2));
        assert_eq!(
            jacobi_poly(1, &prm).unwrap(),
            Poly::new(vec![rat(1, 4), rat(7, 4)])
        );
    }

    #[test]
    fn matches_recurrence() {
        for prm in [
            JacobiParams::ints(0, 0),
            JacobiParams::new(rat(-1, 2), rat(1, 2)),
            JacobiParams::new(int(3), rat(7, 3)),
            JacobiParams::new(rat(5, 2), rat(-1, 2)),
        ] {
            for n in 0..=12 {
                assert_eq!(jacobi_poly(n, &prm).unwrap(), by_recurrence(n, &prm), "n = {n}");
            }
        }
    }

    #[test]
    fn degenerate_alpha() {
        let prm = JacobiParams::ints(-2, 0);
        assert!(matches!(jacobi_poly(3, &prm), Err(Error::DegenerateParameter(_))));
        assert!(jacobi_poly(1, &prm).is_ok());
        assert_eq!(jacobi_poly(0, &prm).unwrap(), Poly::one());
    }

    #[test]
    fn operator_and_eigenvalues() {
        let prm = JacobiParams::ints(0, 0);
        let op = jacobi_operator(&prm);
        assert_eq!(
            op,
            DiffOp::from_polys(&[Poly::zero(), Poly::from_ints(&[0, 2]), Poly::from_ints(&[-1, 0, 1])])
        );
        assert_eq!(op.apply_poly(&Poly::x()).unwrap(), Poly::from_ints(&[0, 2]));
        assert_eq!(lambda2(0, &prm), int(0));
        assert_eq!(lambda2(1, &prm), int(2));
        assert_eq!(lambda2(2, &JacobiParams::new(int(1), rat(1, 2))), int(9));

        let beta = rat(3, 2);
        let base = jacobi_operator(&JacobiParams::new(int(-1), beta.clone()));
        let expected = DiffOp::from_polys(&[
            Poly::zero(),
            Poly::new(vec![-(&beta + int(1)), &beta + int(1)]),
            Poly::from_ints(&[-1, 0, 1]),
        ]);
        assert_eq!(base, expected);
    }

    #[test]
    fn value_at_one_matches() {
        let prm = JacobiParams::new(rat(2, 3), rat(-1, 2));
        for n in 0..8 {
            let p = jacobi_poly(n, &prm).unwrap();
            assert_eq!(p.eval(&int(1)), value_at_one(n, &prm));
        }
    }

    fn grid() -> Vec<JacobiParams> {
        let vals = [rat(-1, 2), int(0), rat(1, 2), int(1), rat(5, 2), rat(7, 3)];
        let mut out = Vec::new();
        for a in &vals {
            for b in &vals {
                out.push(JacobiParams::new(a.clone(), b.clone()));
            }
        }
        out
    }

    #[test]
    fn eigen_equation() {
        for prm in grid() {
            for n in 0..=10 {
                let p = jacobi_poly(n, &prm).unwrap();
                assert!(eigen_residual(n, &prm, &p).is_zero(), "{prm:?} n = {n}");
            }
        }
    }

    #[test]
    fn derivative_formulas() {
        for g in [rat(1, 2), int(1), rat(7, 3)] {
            for d in [rat(1, 3), int(2)] {
                let prm = JacobiParams::new(g.clone(), d.clone());
                for n in 0..=8 {
                    let (r1, r2) = derivative_formula_residuals(n, &prm).unwrap();
                    assert!(r1.is_zero() && r2.is_zero(), "{prm:?} n = {n}");
                }
            }
        }
    }

    #[test]
    fn contiguous_and_reflection() {
        for prm in grid() {
            for n in 0..=8 {
                for (k, r) in contiguous_residuals(n, &prm).unwrap().iter().enumerate() {
                    assert!(r.is_zero(), "relation {k} {prm:?} n = {n}");
                }
                assert!(reflection_residual(n, &prm).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn wrong_shift_is_detected() {
        // (n+g) replaced by (n+g+1) must leave a nonzero residual
        let prm = JacobiParams::new(int(1), int(1));
        let p = jacobi_poly(3, &prm).unwrap();
        let lhs = WeightedPoly::canonicalize(int(1), int(0), p).derivative();
        let rhs = WeightedPoly::canonicalize(int(0), int(0), jacobi_poly(3, &prm.shifted(-1, 1)).unwrap())
            .scale(&int(5));
        assert!(!lhs.sub(&rhs).unwrap().is_zero());
    }
}
