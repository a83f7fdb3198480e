//! The Jacobi-type differential operator of order `2 alpha + 4`.
//!
//! Five independent constructions are provided:
//!
//! 1. [`explicit_operator`]: coefficient functions given by a terminating `3F2` sum,
//! 2. [`extracted_operator`]: recovered from the action of the compact
//!    representation `(x-1)(x+1)^-b D^(a+2) (x+1)^(a+b+2) D^(a+2) (x-1)^(a+1)`,
//! 3. [`bavinck_operator`]: product of `alpha + 2` commuting second-order factors,
//! 4. [`factorized_operator`]: product of `alpha + 2` non-commuting second-order factors,
//! 5. [`recurrence_operator`]: the same factors applied as a recurrence in the order.
//!
//! All five agree coefficientwise; the residual functions below check the
//! spectral equation and the identities that surround it.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{binomial, factorial, int, rat, DiffOp, Poly, RatFunc, Rational, WeightedPoly};
use crate::jacobi::{jacobi_operator, jacobi_poly, lambda2, JacobiParams};
use crate::jacobitype::{jacobi_type_poly, modifier_r, MassParams};
use crate::special::{hyp_terminating, pochhammer, HypSpec};

/// Parameters of the order-`2 alpha + 4` operator: `alpha` a natural number, `beta > -1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HighOpParams {
    alpha: u32,
    beta: Rational,
}

impl HighOpParams {
    pub fn new(alpha: u32, beta: Rational) -> Result<Self> {
        if !(&beta + Rational::one()).is_positive() {
            return Err(Error::InvalidParameter(format!("beta = {beta} must exceed -1")));
        }
        Ok(HighOpParams { alpha, beta })
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// Order of the operator, `2 alpha + 4`.
    pub fn order(&self) -> usize {
        2 * self.alpha as usize + 4
    }

    pub fn jacobi(&self) -> JacobiParams {
        JacobiParams::new(int(self.alpha as i64), self.beta.clone())
    }

    fn alpha_q(&self) -> Rational {
        int(self.alpha as i64)
    }
}

fn half_x_minus_one() -> Poly {
    Poly::new(vec![rat(-1, 2), rat(1, 2)])
}

fn x_minus_one() -> Poly {
    Poly::from_ints(&[-1, 1])
}

fn x_plus_one() -> Poly {
    Poly::from_ints(&[1, 1])
}

fn check_index(i: usize, prm: &HighOpParams) -> Result<()> {
    if i == 0 || i > prm.order() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: prm.order(),
        });
    }
    Ok(())
}

/// Coefficient `d_i` of `D^i`, from the hypergeometric form
///
/// ```text
/// d_i = -(a+2)! (b+1)_{a+2} sum_{k=max(0,i-a-3)}^{i-1}
///         (-2)^i (a+3)_{i-1-k} (-a-2)_{i-1-k} / [(b+1)_{i-1-k} (i-k)! (i-1-k)! k!]
///         * 3F2(-k, a+b+3, a+i+2-k; b+i-k, i+1-k; 1) ((x-1)/2)^{k+1}
/// ```
pub fn explicit_coefficient(i: usize, prm: &HighOpParams) -> Result<Poly> {
    check_index(i, prm)?;
    let a = prm.alpha_q();
    let b = &prm.beta;
    let ii = i as i64;
    let al = prm.alpha as i64;
    let prefactor = -(factorial(prm.alpha + 2) * pochhammer(&(b + int(1)), prm.alpha + 2));
    let sign_pow = crate::exactalg::powi(&int(-2), ii);
    let mut sum = Poly::zero();
    for k in (ii - al - 3).max(0)..ii {
        let r = (ii - 1 - k) as u32;
        let weight = &sign_pow * pochhammer(&(&a + int(3)), r) * pochhammer(&(-&a - int(2)), r)
            / (pochhammer(&(b + int(1)), r)
                * factorial((ii - k) as u32)
                * factorial(r)
                * factorial(k as u32));
        if weight.is_zero() {
            continue;
        }
        let spec = HypSpec::new(
            vec![int(-k), &a + b + int(3), &a + int(ii + 2 - k)],
            vec![b + int(ii - k), int(ii + 1 - k)],
        );
        let hyp = hyp_terminating(&spec)?;
        sum = &sum + &half_x_minus_one().pow(k as u32 + 1).scale(&(weight * hyp));
    }
    Ok(sum.scale(&prefactor))
}

/// Coefficient `e_i` of `D^i` from the Leibniz expansion of the compact form,
///
/// ```text
/// e_i = sum_t C(a+2,t) C(2a+4-t,i) (b+1)_{a+2}/(b+1)_{a+2-t}
///         (a+1)! (x+1)^{a+2-t} (x-1)^{i-a-2+t} / (i-a-3+t)!
/// ```
///
/// over `max(0, a+3-i) <= t <= min(2a+4-i, a+2)`.
pub fn leibniz_coefficient(i: usize, prm: &HighOpParams) -> Result<Poly> {
    check_index(i, prm)?;
    let al = prm.alpha as i64;
    let ii = i as i64;
    let b1 = &prm.beta + int(1);
    let top = pochhammer(&b1, prm.alpha + 2);
    let mut sum = Poly::zero();
    for t in (al + 3 - ii).max(0)..=(2 * al + 4 - ii).min(al + 2) {
        let weight = binomial(prm.alpha + 2, t as u32)
            * binomial((2 * al + 4 - t) as u32, i as u32)
            * &top
            / pochhammer(&b1, (al + 2 - t) as u32)
            * factorial(prm.alpha + 1)
            / factorial((ii - al - 3 + t) as u32);
        let shape = &x_plus_one().pow((al + 2 - t) as u32) * &x_minus_one().pow((ii - al - 2 + t) as u32);
        sum = &sum + &shape.scale(&weight);
    }
    Ok(sum)
}

/// `sum_{i=1}^{2a+4} d_i(x) D^i` with the hypergeometric coefficients.
pub fn explicit_operator(prm: &HighOpParams) -> Result<DiffOp> {
    let terms = (1..=prm.order())
        .map(|i| explicit_coefficient(i, prm).map(|d| (i, RatFunc::from_poly(d))))
        .collect::<Result<Vec<_>>>()?;
    Ok(DiffOp::from_terms(terms))
}

/// `(x-1)(x+1)^-b D^(a+2) { (x+1)^(a+b+2) D^(a+2) [ (x-1)^(a+1) w ] }` on weighted polynomials.
pub fn elementary_apply_weighted(prm: &HighOpParams, w: &WeightedPoly) -> WeightedPoly {
    let a = prm.alpha_q();
    let k = prm.alpha + 2;
    let zero = Rational::zero();
    let inner = w.mul_power(&(&a + int(1)), &zero).nth_derivative(k);
    let middle = inner
        .mul_power(&zero, &(&a + &prm.beta + int(2)))
        .nth_derivative(k);
    middle.mul_power(&int(1), &-&prm.beta)
}

/// The compact representation applied to a polynomial.
///
/// Intermediate exponents of `(x+1)` are fractional when `beta` is; they must
/// cancel in the end.
pub fn elementary_apply(prm: &HighOpParams, y: &Poly) -> Result<Poly> {
    let out = elementary_apply_weighted(prm, &WeightedPoly::from_poly(y.clone()));
    out.to_poly().map_err(|_| {
        Error::InternalNoncancellation(format!("elementary representation left {out}"))
    })
}

/// Recovers `sum_{i=0}^{order} c_i D^i` with polynomial `c_i` from the action on
/// `1, x, ..., x^order`, using `L x^k = sum_i c_i k!/(k-i)! x^(k-i)`.
pub fn operator_from_action<F>(order: usize, mut action: F) -> Result<DiffOp>
where
    F: FnMut(&Poly) -> Result<Poly>,
{
    let mut coeffs: Vec<Poly> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut rest = action(&Poly::monomial(Rational::one(), k as i64))?;
        for (i, c) in coeffs.iter().enumerate() {
            let falling = factorial(k as u32) / factorial((k - i) as u32);
            rest = &rest - &c.shift((k - i) as i64).scale(&falling);
        }
        coeffs.push(rest.scale(&factorial(k as u32).recip()));
    }
    Ok(DiffOp::from_polys(&coeffs))
}

/// Route 2: the operator read off from [`elementary_apply`].
pub fn extracted_operator(prm: &HighOpParams) -> Result<DiffOp> {
    operator_from_action(prm.order(), |y| elementary_apply(prm, y))
}

fn require_polynomial(op: DiffOp, route: &str) -> Result<DiffOp> {
    if op.is_polynomial() {
        Ok(op)
    } else {
        Err(Error::InternalNoncancellation(format!(
            "{route} product kept a singular coefficient: {op}"
        )))
    }
}

/// `L_2^{a,b} - 2(a+1)/(x-1) + j(a+b+1-j)`.
pub fn bavinck_factor(j: u32, prm: &HighOpParams) -> DiffOp {
    let a = prm.alpha_q();
    let jq = int(j as i64);
    let pole = RatFunc::simple_pole(-(int(2) * (&a + int(1))), &int(1));
    let shift = &jq * (&a + &prm.beta + int(1) - &jq);
    jacobi_operator(&prm.jacobi())
        .add_multiplier(&pole)
        .add_constant(&shift)
}

/// Route 3: product over `j = 0..=a+1` of [`bavinck_factor`], applied with `j = 0` innermost.
pub fn bavinck_operator(prm: &HighOpParams) -> Result<DiffOp> {
    let op = (0..=prm.alpha + 1).fold(DiffOp::identity(), |acc, j| {
        bavinck_factor(j, prm).compose(&acc)
    });
    require_polynomial(op, "commuting-factor")
}

/// `L_2^{2j-1,b} - 4j/(x-1) + j(j+b)`, where
/// `L_2^{2j-1,b} = (x^2-1) D^2 + [2j-b-1 + (2j+b+1) x] D`.
pub fn factorization_factor(j: u32, beta: &Rational) -> DiffOp {
    let jq = int(j as i64);
    let second = jacobi_operator(&JacobiParams::new(int(2 * j as i64 - 1), beta.clone()));
    let mut op = second.add_constant(&(&jq * (&jq + beta)));
    if j > 0 {
        op = op.add_multiplier(&RatFunc::simple_pole(int(-4 * j as i64), &int(1)));
    }
    op
}

/// Route 4: `prod_{j=0}^{a+1}` of [`factorization_factor`], `j = 0` applied first.
pub fn factorized_operator(prm: &HighOpParams) -> Result<DiffOp> {
    let op = (0..=prm.alpha + 1).fold(DiffOp::identity(), |acc, j| {
        factorization_factor(j, &prm.beta).compose(&acc)
    });
    require_polynomial(op, "non-commuting factor")
}

/// The base of the order recurrence, `(x^2-1) D^2 + (b+1)(x-1) D`.
pub fn recurrence_base(beta: &Rational) -> DiffOp {
    let b1 = beta + int(1);
    DiffOp::from_terms([
        (2, RatFunc::from_poly(Poly::from_ints(&[-1, 0, 1]))),
        (1, RatFunc::from_poly(Poly::new(vec![-b1.clone(), b1]))),
    ])
}

/// Outer factor raising the order from `2a+2` to `2a+4`:
/// `(x^2-1) D^2 + [2a-b+1 + (2a+b+3) x] D - 4(a+1)/(x-1) + (a+1)(a+b+1)`.
pub fn recurrence_step(alpha: u32, beta: &Rational) -> DiffOp {
    let a = int(alpha as i64);
    let first = Poly::new(vec![
        int(2) * &a - beta + int(1),
        int(2) * &a + beta + int(3),
    ]);
    let constant = (&a + int(1)) * (&a + beta + int(1));
    DiffOp::from_terms([
        (2, RatFunc::from_poly(Poly::from_ints(&[-1, 0, 1]))),
        (1, RatFunc::from_poly(first)),
        (0, RatFunc::simple_pole(-(int(4) * (&a + int(1))), &int(1))),
    ])
    .add_constant(&constant)
}

/// Route 5: `L^{a,b} = step(a) ∘ L^{a-1,b}`, starting from [`recurrence_base`].
pub fn recurrence_operator(prm: &HighOpParams) -> Result<DiffOp> {
    let mut op = recurrence_base(&prm.beta);
    for a in 0..=prm.alpha {
        op = recurrence_step(a, &prm.beta).compose(&op);
    }
    require_polynomial(op, "recurrence")
}

/// `Lambda_{2a+4,n} = (n)_{a+2} (n+b)_{a+2}`.
pub fn lambda_high(n: u32, alpha: u32, beta: &Rational) -> Rational {
    let nq = int(n as i64);
    pochhammer(&nq, alpha + 2) * pochhammer(&(&nq + beta), alpha + 2)
}

/// `C_{a,b} = (a+2)! (b+1)_{a+1}`.
pub fn coupling(alpha: u32, beta: &Rational) -> Rational {
    factorial(alpha + 2) * pochhammer(&(beta + int(1)), alpha + 1)
}

/// Eigenvalue data of the spectral equation for index `n` and mass `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralConstants {
    pub lambda_high: Rational,
    pub lambda_two: Rational,
    pub coupling: Rational,
    pub combined: Rational,
}

pub fn spectral_constants(n: u32, prm: &HighOpParams, mass_n: &Rational) -> SpectralConstants {
    let a = prm.alpha;
    let b = &prm.beta;
    let nq = int(n as i64);
    let combined = (mass_n * pochhammer(&(&nq + int(1)), a + 1) * pochhammer(&(&nq + b), a + 1)
        + pochhammer(&int(2), a + 1) * pochhammer(&(b + int(1)), a + 1))
        * lambda2(n, &prm.jacobi());
    SpectralConstants {
        lambda_high: lambda_high(n, a, b),
        lambda_two: lambda2(n, &prm.jacobi()),
        coupling: coupling(a, b),
        combined,
    }
}

/// `N {L_{2a+4} - Lambda_{2a+4,n}} y + C {L_2 - Lambda_{2,n}} y` at `y = P_n^{a,b,0,N}`.
pub fn full_residual(n: u32, prm: &HighOpParams, mass_n: &Rational) -> Result<Poly> {
    let y = jacobi_type_poly(n, &prm.jacobi(), &MassParams::at_plus_one(mass_n.clone()))?;
    let k = spectral_constants(n, prm, mass_n);
    let high = &elementary_apply(prm, &y)? - &y.scale(&k.lambda_high);
    let two = &jacobi_operator(&prm.jacobi()).apply_poly(&y)? - &y.scale(&k.lambda_two);
    Ok(&high.scale(mass_n) + &two.scale(&k.coupling))
}

/// The spectral equation multiplied by the weight `(x-1)^a (x+1)^b`:
///
/// ```text
/// N (x-1)^(a+1) D^(a+2) { (x+1)^(a+b+2) D^(a+2) [ (x-1)^(a+1) y ] }
///   + C D[ (x-1)^(a+1) (x+1)^(b+1) D y ] - Lambda^N (x-1)^a (x+1)^b y
/// ```
pub fn weighted_spectral_residual(n: u32, prm: &HighOpParams, mass_n: &Rational) -> Result<WeightedPoly> {
    let y = jacobi_type_poly(n, &prm.jacobi(), &MassParams::at_plus_one(mass_n.clone()))?;
    let a = prm.alpha_q();
    let b = &prm.beta;
    let k = spectral_constants(n, prm, mass_n);
    let wy = WeightedPoly::from_poly(y.clone());
    let high = elementary_apply_weighted(prm, &wy).mul_power(&a, b).scale(mass_n);
    let two = WeightedPoly::from_poly(y.derivative())
        .mul_power(&(&a + int(1)), &(b + int(1)))
        .derivative()
        .scale(&k.coupling);
    let rhs = wy.mul_power(&a, b).scale(&k.combined);
    high.add(&two)?.sub(&rhs)
}

/// `(x+1)(x-1)^-a D^(b+2) { (x-1)^(a+b+2) D^(b+2) [ (x+1)^(b+1) y ] }`,
/// the mirror image of [`elementary_apply`] for a mass at `x = -1`.
pub fn reflected_apply(alpha: &Rational, beta: u32, y: &Poly) -> Result<Poly> {
    let b = int(beta as i64);
    let k = beta + 2;
    let zero = Rational::zero();
    let out = WeightedPoly::from_poly(y.clone())
        .mul_power(&zero, &(&b + int(1)))
        .nth_derivative(k)
        .mul_power(&(alpha + &b + int(2)), &zero)
        .nth_derivative(k)
        .mul_power(&-alpha, &int(1));
    out.to_poly().map_err(|_| {
        Error::InternalNoncancellation(format!("reflected representation left {out}"))
    })
}

/// `M {L~_{2b+4} - Lambda^{b,a}_{2b+4,n}} y + C_{b,a} {L_2^{a,b} - Lambda_{2,n}} y`
/// at `y = P_n^{a,b,M,0}`, for natural `b` and `a > -1`.
pub fn mirrored_residual(n: u32, alpha: &Rational, beta: u32, mass_m: &Rational) -> Result<Poly> {
    if !(alpha + Rational::one()).is_positive() {
        return Err(Error::InvalidParameter(format!("alpha = {alpha} must exceed -1")));
    }
    let prm = JacobiParams::new(alpha.clone(), int(beta as i64));
    let y = jacobi_type_poly(n, &prm, &MassParams::at_minus_one(mass_m.clone()))?;
    let high = &reflected_apply(alpha, beta, &y)? - &y.scale(&lambda_high(n, beta, alpha));
    let two = &jacobi_operator(&prm).apply_poly(&y)? - &y.scale(&lambda2(n, &prm));
    Ok(&high.scale(mass_m) + &two.scale(&coupling(beta, alpha)))
}

/// Residuals of the two kernel identities, for `n >= 1`:
///
/// ```text
/// C {L_2 - Lambda_{2,n}} R_n = Lambda_{2a+4,n} (a+1)(a+2)/(n(n+a+1)) P_{n-1}^{a+2,b}
/// L_{2a+4} P_n = Lambda_{2a+4,n} { P_n - (a+1)(a+2)/(n(n+a+1)) P_{n-1}^{a+2,b} }
/// ```
pub fn kernel_identity_residuals(n: u32, prm: &HighOpParams) -> Result<(Poly, Poly)> {
    if n == 0 {
        return Err(Error::InvalidParameter("kernel identities need n >= 1".into()));
    }
    let jp = prm.jacobi();
    let a = prm.alpha_q();
    let nq = int(n as i64);
    let k = spectral_constants(n, prm, &Rational::zero());
    let ratio = (&a + int(1)) * (&a + int(2)) / (&nq * (&nq + &a + int(1)));
    let shifted = jacobi_poly(n - 1, &jp.shifted(2, 0))?.scale(&(&k.lambda_high * &ratio));

    let r = modifier_r(n, &jp)?;
    let lhs = (&jacobi_operator(&jp).apply_poly(&r)? - &r.scale(&k.lambda_two)).scale(&k.coupling);
    let first = &lhs - &shifted;

    let p = jacobi_poly(n, &jp)?;
    let rhs = &p.scale(&k.lambda_high) - &shifted;
    let second = &elementary_apply(prm, &p)? - &rhs;
    Ok((first, second))
}

/// `L_{2a+4} R_n - Lambda_{2a+4,n} R_n`.
pub fn modifier_eigen_residual(n: u32, prm: &HighOpParams) -> Result<Poly> {
    let r = modifier_r(n, &prm.jacobi())?;
    Ok(&elementary_apply(prm, &r)? - &r.scale(&lambda_high(n, prm.alpha, &prm.beta)))
}

/// Each commuting factor moved past `(x-1)`:
/// `F_j[(x-1) u] - (x-1) {L_2^{a+2,b} + (j+1)(a+b+2-j)} u`.
pub fn shifted_factor_residual(j: u32, prm: &HighOpParams, u: &Poly) -> Result<WeightedPoly> {
    let a = prm.alpha_q();
    let jq = int(j as i64);
    let xu = WeightedPoly::from_poly(&x_minus_one() * u);
    let lhs = bavinck_factor(j, prm).apply_weighted(&xu)?;
    let shifted = jacobi_operator(&prm.jacobi().shifted(2, 0))
        .add_constant(&((&jq + int(1)) * (&a + &prm.beta + int(2) - &jq)));
    let rhs = shifted
        .apply_weighted(&WeightedPoly::from_poly(u.clone()))?
        .mul_poly(&x_minus_one());
    lhs.sub(&rhs)
}

/// `L[(x-1) u] - (x-1) prod_{j=0}^{a+1} {L_2^{2j+1,b} + (j+1)(j+b+1)} u`.
pub fn shifted_factorization_residual(prm: &HighOpParams, u: &Poly) -> Result<Poly> {
    let lhs = elementary_apply(prm, &(&x_minus_one() * u))?;
    let mut acc = u.clone();
    for j in 0..=prm.alpha + 1 {
        let jq = int(j as i64);
        let factor = jacobi_operator(&JacobiParams::new(int(2 * j as i64 + 1), prm.beta.clone()))
            .add_constant(&((&jq + int(1)) * (&jq + &prm.beta + int(1))));
        acc = factor.apply_poly(&acc)?;
    }
    Ok(&lhs - &(&x_minus_one() * &acc))
}

/// Weight conjugation of a second-order factor:
///
/// ```text
/// (x+1)^b {L_2^{2j+1,b} + (j+1)(j+b+1)} u - {L_2^{2j+1,-b} + (j+1)(j-b+1)} [(x+1)^b u]
/// ```
pub fn conjugation_residual(j: u32, beta: &Rational, u: &Poly) -> Result<WeightedPoly> {
    let jq = int(j as i64);
    let odd = int(2 * j as i64 + 1);
    let plain = jacobi_operator(&JacobiParams::new(odd.clone(), beta.clone()))
        .add_constant(&((&jq + int(1)) * (&jq + beta + int(1))));
    let flipped = jacobi_operator(&JacobiParams::new(odd, -beta))
        .add_constant(&((&jq + int(1)) * (&jq - beta + int(1))));
    let wu = WeightedPoly::from_poly(u.clone());
    let lhs = plain.apply_weighted(&wu)?.mul_power(&Rational::zero(), beta);
    let rhs = flipped.apply_weighted(&wu.mul_power(&Rational::zero(), beta))?;
    lhs.sub(&rhs)
}

/// `u_j = (x+1)^(j+b) D^j [(x-1)^j u]`.
pub fn raised_function(j: u32, beta: &Rational, u: &Poly) -> WeightedPoly {
    let jq = int(j as i64);
    WeightedPoly::canonicalize(jq.clone(), Rational::zero(), u.clone())
        .nth_derivative(j)
        .mul_power(&Rational::zero(), &(&jq + beta))
}

/// `D^(j+1) u_{j+1} - {L_2^{2j+1,-b} + (j+1)(j-b+1)} D^j u_j`.
pub fn raising_chain_residual(j: u32, beta: &Rational, u: &Poly) -> Result<WeightedPoly> {
    let jq = int(j as i64);
    let lhs = raised_function(j + 1, beta, u).nth_derivative(j + 1);
    let factor = jacobi_operator(&JacobiParams::new(int(2 * j as i64 + 1), -beta))
        .add_constant(&((&jq + int(1)) * (&jq - beta + int(1))));
    let rhs = factor.apply_weighted(&raised_function(j, beta, u).nth_derivative(j))?;
    lhs.sub(&rhs)
}
