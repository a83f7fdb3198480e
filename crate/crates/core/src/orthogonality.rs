//! Inner products with a point mass at `x = 1`, the boundary forms behind the
//! symmetry of the Jacobi-type operator, and Gram matrices.
//!
//! Every integral is reduced to normalized moments of the Jacobi weight, so all
//! values are exact rationals.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::{as_natural, factorial, int, powi, Poly, Rational};
use crate::highops::{coupling, elementary_apply, HighOpParams};
use crate::jacobi::{jacobi_operator, JacobiParams};
use crate::jacobitype::{jacobi_type_poly, MassParams};
use crate::special::pochhammer;

/// Weight `(1-x)^a (1+x)^b / h` on `[-1, 1]` plus a mass `N` at `x = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerProductSpec {
    pub alpha: Rational,
    pub beta: Rational,
    pub mass_n: Rational,
}

impl InnerProductSpec {
    pub fn new(alpha: Rational, beta: Rational, mass_n: Rational) -> Result<Self> {
        check_exponents(&alpha, &beta)?;
        if mass_n.is_negative() {
            return Err(Error::DegenerateParameter(format!("negative mass N = {mass_n}")));
        }
        Ok(InnerProductSpec { alpha, beta, mass_n })
    }

    fn natural_alpha(&self) -> Result<u32> {
        as_natural(&self.alpha).ok_or_else(|| {
            Error::DegenerateParameter(format!("alpha = {} must be a natural number", self.alpha))
        })
    }

    fn high_params(&self) -> Result<HighOpParams> {
        HighOpParams::new(self.natural_alpha()?, self.beta.clone())
    }

    fn jacobi(&self) -> JacobiParams {
        JacobiParams::new(self.alpha.clone(), self.beta.clone())
    }
}

fn check_exponents(alpha: &Rational, beta: &Rational) -> Result<()> {
    let one = Rational::one();
    if !(alpha + &one).is_positive() || !(beta + &one).is_positive() {
        return Err(Error::DegenerateParameter(format!(
            "weight exponents must exceed -1 (alpha = {alpha}, beta = {beta})"
        )));
    }
    Ok(())
}

/// `h^-1 int (1-x)^a (1+x)^(b+j) dx = 2^j (b+1)_j / (a+b+2)_j`.
pub fn normalized_moment(j: u32, alpha: &Rational, beta: &Rational) -> Result<Rational> {
    check_exponents(alpha, beta)?;
    Ok(powi(&int(2), j as i64) * pochhammer(&(beta + int(1)), j)
        / pochhammer(&(alpha + beta + int(2)), j))
}

/// Coefficients of `p` in powers of `(x+1)`, lowest first.
fn in_powers_of_x_plus_one(p: &Poly) -> Vec<Rational> {
    p.compose(&Poly::from_ints(&[-1, 1])).to_vec()
}

/// `h^-1 int p(x) (1-x)^a (1+x)^b dx`.
pub fn weighted_integral(p: &Poly, alpha: &Rational, beta: &Rational) -> Result<Rational> {
    check_exponents(alpha, beta)?;
    let mut sum = Rational::zero();
    let mut moment = Rational::one();
    for (j, c) in in_powers_of_x_plus_one(p).iter().enumerate() {
        if j > 0 {
            let jm = int(j as i64 - 1);
            moment = moment * int(2) * (beta + int(1) + &jm) / (alpha + beta + int(2) + &jm);
        }
        sum += c * &moment;
    }
    Ok(sum)
}

/// `int f g w dx + N f(1) g(1)`.
pub fn inner_product(f: &Poly, g: &Poly, spec: &InnerProductSpec) -> Result<Rational> {
    let integral = weighted_integral(&(f * g), &spec.alpha, &spec.beta)?;
    let one = int(1);
    Ok(integral + &spec.mass_n * f.eval(&one) * g.eval(&one))
}

/// The two integrals produced by integrating the operators by parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryForms {
    /// `h^-1 int D^(a+2)[(x-1)^(a+1) f] D^(a+2)[(x-1)^(a+1) g] (x+1)^(a+b+2) dx`
    pub s: Rational,
    /// `h^-1 int f' g' (1-x)^(a+1) (1+x)^(b+1) dx`
    pub t: Rational,
}

/// `D^(a+2)[(x-1)^(a+1) f]`.
fn lifted(alpha: u32, f: &Poly) -> Poly {
    (&Poly::from_ints(&[-1, 1]).pow(alpha + 1) * f).nth_derivative(alpha + 2)
}

fn s_form(f: &Poly, g: &Poly, alpha: u32, beta: &Rational) -> Rational {
    // h^-1 int (1+x)^(b+K) dx = 2^(K-a) (b+1)_{a+1} / (a! (b+K+1))
    let scale = pochhammer(&(beta + int(1)), alpha + 1) / factorial(alpha);
    let product = &lifted(alpha, f) * &lifted(alpha, g);
    let mut sum = Rational::zero();
    for (k, c) in in_powers_of_x_plus_one(&product).iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let big_k = alpha as i64 + 2 + k as i64;
        sum += c * powi(&int(2), big_k - alpha as i64) / (beta + int(big_k + 1));
    }
    sum * scale
}

fn t_form(f: &Poly, g: &Poly, alpha: &Rational, beta: &Rational) -> Result<Rational> {
    let integrand = &(&f.derivative() * &g.derivative()) * &Poly::from_ints(&[1, 0, -1]);
    weighted_integral(&integrand, alpha, beta)
}

/// Both boundary forms; `S` needs a natural `alpha`.
pub fn boundary_forms(f: &Poly, g: &Poly, spec: &InnerProductSpec) -> Result<BoundaryForms> {
    let alpha = spec.natural_alpha()?;
    Ok(BoundaryForms {
        s: s_form(f, g, alpha, &spec.beta),
        t: t_form(f, g, &spec.alpha, &spec.beta)?,
    })
}

/// `N L_{2a+4} f + C L_2 f`.
pub fn combined_apply(f: &Poly, spec: &InnerProductSpec) -> Result<Poly> {
    let prm = spec.high_params()?;
    let high = elementary_apply(&prm, f)?;
    let two = jacobi_operator(&spec.jacobi()).apply_poly(f)?;
    Ok(&high.scale(&spec.mass_n) + &two.scale(&coupling(prm.alpha(), &spec.beta)))
}

/// `(L f, g) - (f, L g)` for the combined operator.
pub fn symmetry_defect(f: &Poly, g: &Poly, spec: &InnerProductSpec) -> Result<Rational> {
    let lf = combined_apply(f, spec)?;
    let lg = combined_apply(g, spec)?;
    Ok(inner_product(&lf, g, spec)? - inner_product(f, &lg, spec)?)
}

/// The three pieces of `(L f, g)` next to their boundary-form expressions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryTerms {
    /// `N (L_{2a+4} f, g)_w`
    pub high_pairing: Rational,
    /// `N S(f, g) - N 2(a+1) C f'(1) g(1)`
    pub high_form: Rational,
    /// `C (L_2 f, g)_w`
    pub second_pairing: Rational,
    /// `C T(f, g)`
    pub second_form: Rational,
    /// `N (L f)(1) g(1)`
    pub mass_pairing: Rational,
    /// `N C 2(a+1) f'(1) g(1)`
    pub mass_form: Rational,
}

impl SymmetryTerms {
    pub fn balanced(&self) -> bool {
        self.high_pairing == self.high_form
            && self.second_pairing == self.second_form
            && self.mass_pairing == self.mass_form
    }

    /// `(L f, g)` in the mass inner product.
    pub fn total(&self) -> Rational {
        &self.high_pairing + &self.second_pairing + &self.mass_pairing
    }

    /// The same value from the boundary forms alone.
    pub fn total_from_forms(&self) -> Rational {
        &self.high_form + &self.second_form + &self.mass_form
    }
}

pub fn symmetry_terms(f: &Poly, g: &Poly, spec: &InnerProductSpec) -> Result<SymmetryTerms> {
    let prm = spec.high_params()?;
    let c = coupling(prm.alpha(), &spec.beta);
    let n = &spec.mass_n;
    let one = int(1);
    let forms = boundary_forms(f, g, spec)?;
    let boundary = int(2) * (&spec.alpha + int(1)) * &c * f.derivative().eval(&one) * g.eval(&one);

    let high = elementary_apply(&prm, f)?;
    let two = jacobi_operator(&spec.jacobi()).apply_poly(f)?;
    let combined = &high.scale(n) + &two.scale(&c);
    Ok(SymmetryTerms {
        high_pairing: n * weighted_integral(&(&high * g), &spec.alpha, &spec.beta)?,
        high_form: n * (&forms.s - &boundary),
        second_pairing: &c * weighted_integral(&(&two * g), &spec.alpha, &spec.beta)?,
        second_form: &c * &forms.t,
        mass_pairing: n * combined.eval(&one) * g.eval(&one),
        mass_form: n * &boundary,
    })
}

/// `(L_{2a+4} f)(1)` and `(L_2 f)(1) - 2(a+1) f'(1)`; both vanish.
pub fn endpoint_residuals(f: &Poly, spec: &InnerProductSpec) -> Result<(Rational, Rational)> {
    let prm = spec.high_params()?;
    let one = int(1);
    let high = elementary_apply(&prm, f)?.eval(&one);
    let two = jacobi_operator(&spec.jacobi()).apply_poly(f)?.eval(&one)
        - int(2) * (&spec.alpha + int(1)) * f.derivative().eval(&one);
    Ok((high, two))
}

/// `G[n][m] = (y_n, y_m)` for the Jacobi-type polynomials with mass `N` at `+1`, `n, m <= n_max`.
pub fn gram_matrix(n_max: u32, spec: &InnerProductSpec) -> Result<Vec<Vec<Rational>>> {
    let mass = MassParams::at_plus_one(spec.mass_n.clone());
    let ys = (0..=n_max)
        .map(|n| jacobi_type_poly(n, &spec.jacobi(), &mass))
        .collect::<Result<Vec<_>>>()?;
    ys.par_iter()
        .map(|f| ys.iter().map(|g| inner_product(f, g, spec)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{binomial, rat};
    use crate::testfns::PolySampler;

    fn spec(alpha: Rational, beta: Rational, n: Rational) -> InnerProductSpec {
        InnerProductSpec::new(alpha, beta, n).unwrap()
    }

    /// `h^-1 int p (1-x)^a (1+x)^b dx` for natural `a, b` by expanding both
    /// `(1-x)^a` and `x^k = ((1+x) - 1)^k` in powers of `(1+x)`.
    fn integral_oracle(p: &Poly, a: u32, b: u32) -> Rational {
        let h = powi(&int(2), (a + b + 1) as i64) * factorial(a) * factorial(b) / factorial(a + b + 1);
        let mut total = Rational::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            for r in 0..=k as u32 {
                let x_term = binomial(k as u32, r) * powi(&int(-1), (k as u32 - r) as i64);
                for s in 0..=a {
                    let w_term = binomial(a, s) * powi(&int(2), (a - s) as i64) * powi(&int(-1), s as i64);
                    let p_exp = (b + r + s) as i64;
                    total += c * &x_term * w_term * powi(&int(2), p_exp + 1) / int(p_exp + 1);
                }
            }
        }
        total / h
    }

    #[test]
    fn moment_examples() {
        assert_eq!(normalized_moment(0, &rat(3, 2), &rat(-1, 2)).unwrap(), int(1));
        assert_eq!(normalized_moment(1, &int(0), &int(0)).unwrap(), int(1));
        assert_eq!(normalized_moment(2, &int(1), &rat(1, 2)).unwrap(), rat(20, 21));
        assert!(normalized_moment(1, &int(-1), &int(0)).is_err());
        let q = Poly::from_ints(&[1, 1]);
        for a in 0..4 {
            for b in 0..4 {
                for j in 0..6 {
                    assert_eq!(
                        normalized_moment(j, &int(a as i64), &int(b as i64)).unwrap(),
                        integral_oracle(&q.pow(j), a, b)
                    );
                }
            }
        }
    }

    #[test]
    fn integral_matches_oracle() {
        let mut s = PolySampler::new(11);
        for a in 0..3 {
            for b in 0..3 {
                let p = s.poly(8);
                assert_eq!(
                    weighted_integral(&p, &int(a as i64), &int(b as i64)).unwrap(),
                    integral_oracle(&p, a, b)
                );
            }
        }
    }

    #[test]
    fn inner_product_examples() {
        let sp = spec(int(0), int(0), int(1));
        let y1 = Poly::from_ints(&[-1, 2]);
        assert_eq!(inner_product(&Poly::one(), &Poly::one(), &sp).unwrap(), int(2));
        assert_eq!(inner_product(&Poly::one(), &y1, &sp).unwrap(), int(0));
        // 1/2 int (2x-1)^2 dx = 7/3, plus the mass term 1
        assert_eq!(inner_product(&y1, &y1, &sp).unwrap(), rat(10, 3));
        let sp = spec(rat(5, 2), rat(-1, 2), rat(1, 3));
        assert_eq!(inner_product(&Poly::one(), &Poly::one(), &sp).unwrap(), rat(4, 3));
    }

    #[test]
    fn boundary_form_examples() {
        let sp = spec(int(0), int(0), int(1));
        let f = Poly::x();
        assert_eq!(boundary_forms(&f, &f, &sp).unwrap().t, rat(2, 3));
        let g = Poly::from_ints(&[4, -1, 3]);
        assert!(boundary_forms(&Poly::one(), &g, &sp).unwrap().t.is_zero());
        let half = spec(rat(1, 2), int(0), int(1));
        assert!(boundary_forms(&f, &g, &half).is_err());
    }

    #[test]
    fn symmetry_examples() {
        let sp = spec(int(0), int(0), int(1));
        let f = Poly::x();
        let g = Poly::from_ints(&[0, 0, 1]);
        assert!(symmetry_defect(&f, &g, &sp).unwrap().is_zero());
        assert!(symmetry_defect(&g, &g, &sp).unwrap().is_zero());
        let sp = spec(int(1), rat(1, 2), rat(1, 3));
        let f = Poly::from_ints(&[0, 0, 0, 1]);
        let g = Poly::from_ints(&[2, 1]);
        assert!(symmetry_defect(&f, &g, &sp).unwrap().is_zero());
    }

    #[test]
    fn boundary_forms_reproduce_pairings() {
        let mut s = PolySampler::new(5);
        for (a, b) in [(0, int(0)), (1, rat(-1, 2)), (2, rat(7, 3))] {
            let sp = spec(int(a), b, rat(1, 3));
            for (f, g) in s.pairs(4, 6) {
                let terms = symmetry_terms(&f, &g, &sp).unwrap();
                assert!(terms.balanced(), "{sp:?} {f} {g}");
                assert_eq!(terms.total(), inner_product(&combined_apply(&f, &sp).unwrap(), &g, &sp).unwrap());
                let forms = boundary_forms(&f, &g, &sp).unwrap();
                assert_eq!(forms, boundary_forms(&g, &f, &sp).unwrap());
                let (e1, e2) = endpoint_residuals(&f, &sp).unwrap();
                assert!(e1.is_zero() && e2.is_zero());
            }
        }
    }

    #[test]
    fn gram_examples() {
        let g = gram_matrix(3, &spec(int(0), int(0), int(1))).unwrap();
        assert_eq!(g[0][0], int(2));
        assert_eq!(g[0][1], int(0));
        assert_eq!(g[1][1], rat(10, 3));
        for (n, row) in g.iter().enumerate() {
            for (m, v) in row.iter().enumerate() {
                assert_eq!(n == m, !v.is_zero());
            }
        }
        let g = gram_matrix(6, &spec(int(2), rat(-1, 2), rat(1, 3))).unwrap();
        for (n, row) in g.iter().enumerate() {
            for (m, v) in row.iter().enumerate() {
                if n == m {
                    assert!(v.is_positive());
                } else {
                    assert!(v.is_zero());
                }
            }
        }
    }

    #[test]
    fn invalid_spec() {
        assert!(InnerProductSpec::new(int(0), int(-1), int(1)).is_err());
        assert!(InnerProductSpec::new(int(0), int(0), int(-1)).is_err());
    }
}
