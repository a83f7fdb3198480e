//! The symmetric ultraspherical-type operator and its links to the Jacobi-type operator.
//!
//! `L_{2a+4} y = (x^2-1) D^(2a+4) [(x^2-1)^(a+1) y]` is tied to the Jacobi-type
//! operator with `beta = a+2` by a multiplication with `(x+1)`, and to the cases
//! `beta = -1/2` and `beta = 1/2` by the quadratic substitution `x = 2 xi^2 - 1`.
//! Identities in the variable `xi` use the Bessel derivative `delta = xi^-1 D`,
//! which acts on Laurent polynomials.

use num_traits::Zero;

use crate::error::Result;
use crate::exactalg::{factorial, int, powi, rat, DiffOp, Poly, Rational, WeightedPoly};
use crate::highops::{coupling, elementary_apply, lambda_high, HighOpParams};
use crate::jacobi::{jacobi_operator, lambda2, JacobiParams};
use crate::jacobitype::{jacobi_type_poly, MassParams};
use crate::special::pochhammer;

fn x_squared_minus_one() -> Poly {
    Poly::from_ints(&[-1, 0, 1])
}

/// `2 xi^2 - 1`, the quadratic substitution.
pub fn quadratic_map() -> Poly {
    Poly::from_ints(&[-1, 0, 2])
}

/// `y(2 xi^2 - 1)`.
pub fn substitute(y: &Poly) -> Poly {
    y.compose(&quadratic_map())
}

/// `(x^2-1) D^(2a+4) [(x^2-1)^(a+1) y]`.
pub fn ultra_apply(alpha: u32, y: &Poly) -> Poly {
    let inner = &x_squared_minus_one().pow(alpha + 1) * y;
    &x_squared_minus_one() * &inner.nth_derivative(2 * alpha + 4)
}

/// `(x^2-1) D^2 + 2(a+1) x D`.
pub fn ultra_second_operator(alpha: u32) -> DiffOp {
    let a = int(alpha as i64);
    jacobi_operator(&JacobiParams::new(a.clone(), a))
}

/// `C_a = (a+2)(2a+2)!/2`.
pub fn ultra_coupling(alpha: u32) -> Rational {
    int(alpha as i64 + 2) * factorial(2 * alpha + 2) / int(2)
}

/// `Lambda_{2a+4,n} = (n-1)_{2a+4}`.
pub fn ultra_lambda_high(n: u32, alpha: u32) -> Rational {
    pochhammer(&int(n as i64 - 1), 2 * alpha + 4)
}

/// `Lambda_{2,n} = n(n+2a+1)`.
pub fn ultra_lambda_two(n: u32, alpha: u32) -> Rational {
    int(n as i64) * int(n as i64 + 2 * alpha as i64 + 1)
}

fn jacobi_type_high(alpha: u32, beta: Rational) -> HighOpParams {
    HighOpParams::new(alpha, beta).expect("beta > -1 by construction")
}

/// `L_{2a+4}[(x+1) y] - (x+1) L_{2a+4}^{a,a+2} y`.
pub fn link_residual(alpha: u32, y: &Poly) -> Result<Poly> {
    let xp1 = Poly::from_ints(&[1, 1]);
    let prm = jacobi_type_high(alpha, int(alpha as i64 + 2));
    let lhs = ultra_apply(alpha, &(&xp1 * y));
    let rhs = &xp1 * &elementary_apply(&prm, y)?;
    Ok(&lhs - &rhs)
}

/// The same link seen through the shifted factorization, returned as two residuals:
///
/// ```text
/// (x+1) L^{a,a+2}[(x-1) u] - L_{2a+4}[(x^2-1) u]
/// (x^2-1) prod_j {L_2^{a+2,a+2} + (j+1)(2a+4-j)} u - L_{2a+4}[(x^2-1) u]
/// ```
pub fn factorized_link_residuals(alpha: u32, u: &Poly) -> Result<(Poly, Poly)> {
    let xm1 = Poly::from_ints(&[-1, 1]);
    let xp1 = Poly::from_ints(&[1, 1]);
    let prm = jacobi_type_high(alpha, int(alpha as i64 + 2));
    let target = ultra_apply(alpha, &(&x_squared_minus_one() * u));
    let via_jacobi = &xp1 * &elementary_apply(&prm, &(&xm1 * u))?;

    let a2 = int(alpha as i64 + 2);
    let base = jacobi_operator(&JacobiParams::new(a2.clone(), a2));
    let mut acc = u.clone();
    for j in 0..=alpha as i64 + 1 {
        acc = base
            .add_constant(&int((j + 1) * (2 * alpha as i64 + 4 - j)))
            .apply_poly(&acc)?;
    }
    let via_product = &x_squared_minus_one() * &acc;
    Ok((&via_jacobi - &target, &via_product - &target))
}

/// `D^m [(x+1)^(2m) D^m phi] - (x+1)^m D^(2m) [(x+1)^m phi]`.
pub fn leibniz_identity_residual(m: u32, phi: &Poly) -> Result<WeightedPoly> {
    let zero = Rational::zero();
    let mq = int(m as i64);
    let lhs = WeightedPoly::from_poly(phi.nth_derivative(m))
        .mul_power(&zero, &(int(2) * &mq))
        .nth_derivative(m);
    let rhs = WeightedPoly::from_poly(phi.clone())
        .mul_power(&zero, &mq)
        .nth_derivative(2 * m)
        .mul_power(&zero, &mq);
    lhs.sub(&rhs)
}

/// `delta f = xi^-1 f'`.
pub fn bessel_delta(f: &Poly) -> Poly {
    f.derivative().shift(-1)
}

/// `delta^k f`.
pub fn bessel_delta_pow(f: &Poly, k: u32) -> Poly {
    (0..k).fold(f.clone(), |acc, _| bessel_delta(&acc))
}

/// `delta^j [xi^(2m+1) delta^(m+1) phi]`.
fn bessel_chain(j: u32, m: u32, phi: &Poly) -> Poly {
    let inner = bessel_delta_pow(phi, m + 1).shift(2 * m as i64 + 1);
    bessel_delta_pow(&inner, j)
}

/// `delta^m [xi^(2m+1) delta^(m+1) phi] - D^(2m+1) phi`.
pub fn bessel_identity_residual(m: u32, phi: &Poly) -> Poly {
    &bessel_chain(m, m, phi) - &phi.nth_derivative(2 * m + 1)
}

/// Residual of the expansion, for `j <= m`,
///
/// ```text
/// delta^j [xi^(2m+1) delta^(m+1) phi]
///   = sum_{k=j}^{m} (-2)^(k-m) (2m-k-j)! / ((m-k)! (k-j)!) xi^(k-j) D^(k+j+1) phi
/// ```
pub fn bessel_expansion_residual(j: u32, m: u32, phi: &Poly) -> Poly {
    assert!(j <= m, "expansion needs j <= m");
    let mut rhs = Poly::zero();
    for k in j..=m {
        let c = powi(&int(-2), k as i64 - m as i64) * factorial(2 * m - k - j)
            / (factorial(m - k) * factorial(k - j));
        rhs = &rhs + &phi.nth_derivative(k + j + 1).shift((k - j) as i64).scale(&c);
    }
    &bessel_chain(j, m, phi) - &rhs
}

/// Even case, `beta = -1/2`, as two residuals:
///
/// ```text
/// L_{2a+4,xi}[y(2xi^2-1)] - 2^(2a+4) (L^{a,-1/2} y)(2xi^2-1)
/// 4 (L_2^{a,-1/2} y)(2xi^2-1) - L_{2,xi}^{a,a}[y(2xi^2-1)]
/// ```
pub fn substitution_residual_even(alpha: u32, y: &Poly) -> Result<(Poly, Poly)> {
    let beta = rat(-1, 2);
    let prm = jacobi_type_high(alpha, beta.clone());
    let u = substitute(y);
    let scale = powi(&int(2), 2 * alpha as i64 + 4);
    let high = &ultra_apply(alpha, &u) - &substitute(&elementary_apply(&prm, y)?).scale(&scale);
    let two_x = jacobi_operator(&JacobiParams::new(int(alpha as i64), beta)).apply_poly(y)?;
    let second = &substitute(&two_x).scale(&int(4)) - &ultra_second_operator(alpha).apply_poly(&u)?;
    Ok((high, second))
}

/// `4 xi (L_2^{a,1/2} y)(2xi^2-1) - {L_{2,xi}^{a,a} + shift}[xi y(2xi^2-1)]`.
pub fn odd_second_order_residual(alpha: u32, y: &Poly, shift: &Rational) -> Result<Poly> {
    let v = &Poly::x() * &substitute(y);
    let two_x = jacobi_operator(&JacobiParams::new(int(alpha as i64), rat(1, 2))).apply_poly(y)?;
    let lhs = (&Poly::x() * &substitute(&two_x)).scale(&int(4));
    let rhs = ultra_second_operator(alpha).add_constant(shift).apply_poly(&v)?;
    Ok(&lhs - &rhs)
}

/// Odd case, `beta = 1/2`, with `v = xi y(2xi^2-1)`, as two residuals:
///
/// ```text
/// 2^(2a+4) xi (L^{a,1/2} y)(2xi^2-1) - L_{2a+4,xi} v
/// 4 xi (L_2^{a,1/2} y)(2xi^2-1) - {L_{2,xi}^{a,a} - 2(a+1)} v
/// ```
pub fn substitution_residual_odd(alpha: u32, y: &Poly) -> Result<(Poly, Poly)> {
    let prm = jacobi_type_high(alpha, rat(1, 2));
    let v = &Poly::x() * &substitute(y);
    let scale = powi(&int(2), 2 * alpha as i64 + 4);
    let lhs = (&Poly::x() * &substitute(&elementary_apply(&prm, y)?)).scale(&scale);
    let high = &lhs - &ultra_apply(alpha, &v);
    let second = odd_second_order_residual(alpha, y, &-(int(2) * int(alpha as i64 + 1)))?;
    Ok((high, second))
}

/// Defects of the even constant relations:
/// `2^(2a+4) Lambda^{a,-1/2}_n - Lambda_{2n}`, `2^(2a+1) C_{a,-1/2} - C_a`,
/// `4 Lambda_{2,n}^{a,-1/2} - Lambda_{2,2n}^{a,a}`.
pub fn even_constant_defects(n: u32, alpha: u32) -> [Rational; 3] {
    let beta = rat(-1, 2);
    let a = alpha as i64;
    [
        powi(&int(2), 2 * a + 4) * lambda_high(n, alpha, &beta) - ultra_lambda_high(2 * n, alpha),
        powi(&int(2), 2 * a + 1) * coupling(alpha, &beta) - ultra_coupling(alpha),
        int(4) * lambda2(n, &JacobiParams::new(int(a), beta)) - ultra_lambda_two(2 * n, alpha),
    ]
}

/// Defects of the odd constant relations:
/// `2^(2a+4) Lambda^{a,1/2}_n - Lambda_{2n+1}`, `2^(2a+2) C_{a,1/2}/(4a+6) - C_a`,
/// `4 Lambda_{2,n}^{a,1/2} - Lambda_{2,2n+1}^{a,a} + 2(a+1)`.
pub fn odd_constant_defects(n: u32, alpha: u32) -> [Rational; 3] {
    let beta = rat(1, 2);
    let a = alpha as i64;
    [
        powi(&int(2), 2 * a + 4) * lambda_high(n, alpha, &beta) - ultra_lambda_high(2 * n + 1, alpha),
        powi(&int(2), 2 * a + 2) * coupling(alpha, &beta) / int(4 * a + 6) - ultra_coupling(alpha),
        int(4) * lambda2(n, &JacobiParams::new(int(a), beta)) - ultra_lambda_two(2 * n + 1, alpha)
            + int(2 * (a + 1)),
    ]
}

/// `N {L_{2a+4} - Lambda_{2a+4,k}} w + C_a {L_2^{a,a} - Lambda_{2,k}} w`.
pub fn ultra_residual(alpha: u32, k: u32, mass_n: &Rational, w: &Poly) -> Result<Poly> {
    let high = &ultra_apply(alpha, w) - &w.scale(&ultra_lambda_high(k, alpha));
    let two = &ultra_second_operator(alpha).apply_poly(w)? - &w.scale(&ultra_lambda_two(k, alpha));
    Ok(&high.scale(mass_n) + &two.scale(&ultra_coupling(alpha)))
}

/// `u_n(xi) = P_n^{a,-1/2,0,2N}(2xi^2-1)`, which has ultraspherical-type index `2n`.
pub fn even_eigenfunction(n: u32, alpha: u32, mass_n: &Rational) -> Result<Poly> {
    let prm = JacobiParams::new(int(alpha as i64), rat(-1, 2));
    let y = jacobi_type_poly(n, &prm, &MassParams::at_plus_one(int(2) * mass_n))?;
    Ok(substitute(&y))
}

/// `v_n(xi) = xi P_n^{a,1/2,0,(4a+6)N}(2xi^2-1)`, which has ultraspherical-type index `2n+1`.
pub fn odd_eigenfunction(n: u32, alpha: u32, mass_n: &Rational) -> Result<Poly> {
    let prm = JacobiParams::new(int(alpha as i64), rat(1, 2));
    let mass = int(4 * alpha as i64 + 6) * mass_n;
    let y = jacobi_type_poly(n, &prm, &MassParams::at_plus_one(mass))?;
    Ok(&Poly::x() * &substitute(&y))
}

/// Ultraspherical-type residuals of `u_n` (index `2n`) and `v_n` (index `2n+1`).
pub fn eigen_consequence_residuals(n: u32, alpha: u32, mass_n: &Rational) -> Result<(Poly, Poly)> {
    let u = even_eigenfunction(n, alpha, mass_n)?;
    let v = odd_eigenfunction(n, alpha, mass_n)?;
    Ok((
        ultra_residual(alpha, 2 * n, mass_n, &u)?,
        ultra_residual(alpha, 2 * n + 1, mass_n, &v)?,
    ))
}
