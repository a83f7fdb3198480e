//! Verification suites: each one runs a family of exact identities over a
//! parameter grid and collects the outcome per grid point.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::{as_natural, format_rational, int, rat, Poly, Rational};
use crate::highops::{
    bavinck_factor, bavinck_operator, conjugation_residual, explicit_coefficient, explicit_operator,
    extracted_operator, factorized_operator, full_residual, kernel_identity_residuals,
    leibniz_coefficient, mirrored_residual, modifier_eigen_residual, raising_chain_residual,
    recurrence_operator, shifted_factor_residual, shifted_factorization_residual, spectral_constants,
    weighted_spectral_residual, HighOpParams,
};
use crate::jacobi::{contiguous_residuals, derivative_formula_residuals, eigen_residual, jacobi_poly, reflection_residual, JacobiParams};
use crate::orthogonality::{
    boundary_forms, endpoint_residuals, gram_matrix, symmetry_defect, symmetry_terms, InnerProductSpec,
};
use crate::report::{CaseResult, Status, SuiteReport};
use crate::special::{hyp_terminating, pochhammer, HypSpec};
use crate::table::coefficient_table;
use crate::testfns::{PolySampler, DEFAULT_SEED};
use crate::ultra::{
    bessel_expansion_residual, bessel_identity_residual, eigen_consequence_residuals,
    even_constant_defects, factorized_link_residuals, leibniz_identity_residual, link_residual,
    odd_constant_defects, substitution_residual_even, substitution_residual_odd,
};

/// All suite names, in the order `all` runs them.
pub const SUITES: [&str; 10] = [
    "basics",
    "coeffs",
    "routes",
    "eigen",
    "mirror",
    "kernel",
    "symmetry",
    "gram",
    "ultra",
    "substitution",
];

/// The standard `beta` values.
pub fn beta_grid() -> Vec<Rational> {
    vec![rat(-1, 2), int(0), rat(1, 2), int(1), rat(5, 2), rat(7, 3)]
}

fn naturals(upto: i64) -> Vec<Rational> {
    (0..=upto).map(int).collect()
}

/// Parameter ranges for a suite. `alphas` and `betas` hold the two Jacobi
/// parameters; `masses_n` and `masses_m` the point masses at `+1` and `-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub alphas: Vec<Rational>,
    pub betas: Vec<Rational>,
    pub masses_n: Vec<Rational>,
    pub masses_m: Vec<Rational>,
    pub n_max: u32,
    pub seed: u64,
}

impl Grid {
    pub fn default_for(suite: &str) -> Result<Grid> {
        let mut g = Grid {
            alphas: naturals(3),
            betas: beta_grid(),
            masses_n: vec![int(1), rat(1, 3)],
            masses_m: vec![int(1), rat(1, 3)],
            n_max: 12,
            seed: DEFAULT_SEED,
        };
        match suite {
            "routes" | "coeffs" | "kernel" | "symmetry" => {}
            "eigen" => g.masses_n = vec![int(1), rat(1, 3), int(7)],
            "mirror" => {
                g.alphas = vec![rat(-1, 2), rat(1, 2), int(2)];
                g.betas = naturals(3);
                g.n_max = 10;
            }
            "gram" => g.n_max = 10,
            "ultra" => g.n_max = 6,
            "substitution" => g.n_max = 10,
            "basics" => {
                g.alphas = beta_grid();
                g.n_max = 15;
            }
            other => return Err(Error::UnknownSuite(other.to_string())),
        }
        Ok(g)
    }
}

type Check = Box<dyn Fn() -> Result<Vec<String>> + Send + Sync>;

struct Case {
    params: BTreeMap<String, String>,
    check: Check,
}

fn case<F>(params: &[(&str, String)], check: F) -> Case
where
    F: Fn() -> Result<Vec<String>> + Send + Sync + 'static,
{
    Case {
        params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        check: Box::new(check),
    }
}

fn q(r: &Rational) -> String {
    format_rational(r)
}

fn grid_error(msg: impl Into<String>) -> Error {
    Error::InvalidGrid(msg.into())
}

fn require_nonempty(name: &str, v: &[Rational]) -> Result<()> {
    if v.is_empty() {
        return Err(grid_error(format!("empty {name} list")));
    }
    Ok(())
}

fn natural_alphas(g: &Grid) -> Result<Vec<u32>> {
    require_nonempty("alpha", &g.alphas)?;
    g.alphas
        .iter()
        .map(|a| as_natural(a).ok_or_else(|| grid_error(format!("alpha = {a} must be a natural number"))))
        .collect()
}

fn check_above_minus_one(name: &str, v: &[Rational]) -> Result<()> {
    require_nonempty(name, v)?;
    for x in v {
        if !(x + Rational::one()).is_positive() {
            return Err(grid_error(format!("{name} = {x} must exceed -1")));
        }
    }
    Ok(())
}

fn check_masses(name: &str, v: &[Rational]) -> Result<()> {
    require_nonempty(name, v)?;
    if let Some(m) = v.iter().find(|m| m.is_negative()) {
        return Err(grid_error(format!("{name} = {m} must be nonnegative")));
    }
    Ok(())
}

/// Collects failure messages; `ok` pushes `what` when `cond` is false.
#[derive(Default)]
struct Failures(Vec<String>);

impl Failures {
    fn ok(&mut self, cond: bool, what: impl FnOnce() -> String) {
        if !cond {
            self.0.push(what());
        }
    }

    fn done(self) -> Result<Vec<String>> {
        Ok(self.0)
    }
}

fn high(alpha: u32, beta: &Rational) -> Result<HighOpParams> {
    HighOpParams::new(alpha, beta.clone())
}

fn routes_cases(g: &Grid) -> Result<Vec<Case>> {
    let alphas = natural_alphas(g)?;
    check_above_minus_one("beta", &g.betas)?;
    let mut cases = Vec::new();
    for &a in &alphas {
        for b in &g.betas {
            let b = b.clone();
            let params = [("alpha", a.to_string()), ("beta", q(&b))];
            cases.push(case(&params, move || {
                let prm = high(a, &b)?;
                let reference = explicit_operator(&prm)?;
                let mut f = Failures::default();
                f.ok(extracted_operator(&prm)? == reference, || "extracted operator differs".into());
                f.ok(bavinck_operator(&prm)? == reference, || "commuting-factor product differs".into());
                f.ok(factorized_operator(&prm)? == reference, || "non-commuting factor product differs".into());
                f.ok(recurrence_operator(&prm)? == reference, || "order recurrence differs".into());
                // the commuting factors do commute
                let first = bavinck_factor(0, &prm);
                let last = bavinck_factor(a + 1, &prm);
                f.ok(first.compose(&last) == last.compose(&first), || "factors do not commute".into());
                f.done()
            }));
        }
    }
    Ok(cases)
}

fn coeffs_cases(g: &Grid) -> Result<Vec<Case>> {
    let alphas = natural_alphas(g)?;
    check_above_minus_one("beta", &g.betas)?;
    let mut cases = Vec::new();
    for &a in &alphas {
        for b in &g.betas {
            let b = b.clone();
            let params = [("alpha", a.to_string()), ("beta", q(&b))];
            cases.push(case(&params, move || {
                let prm = high(a, &b)?;
                let mut f = Failures::default();
                let one = int(1);
                for i in 1..=prm.order() {
                    let d = explicit_coefficient(i, &prm)?;
                    f.ok(d == leibniz_coefficient(i, &prm)?, || format!("d_{i} differs from Leibniz form"));
                    f.ok(d.eval(&one).is_zero(), || format!("d_{i}(1) != 0"));
                    f.ok(d.degree().map_or(true, |k| k <= i as i64), || format!("deg d_{i} > {i}"));
                }
                let top = explicit_coefficient(prm.order(), &prm)?;
                f.ok(top == Poly::from_ints(&[-1, 0, 1]).pow(a + 2), || "top coefficient is not (x^2-1)^(a+2)".into());
                f.done()
            }));
        }
    }
    cases.push(case(&[("alpha", "0".into()), ("beta", "0".into()), ("check", "golden".into())], || {
        let golden = "i,coeff0,coeff1,coeff2,coeff3,coeff4\n\
                      1,-4,4,0,0,0\n\
                      2,-10,-4,14,0,0\n\
                      3,0,-8,0,8,0\n\
                      4,1,0,-2,0,1\n";
        let table = coefficient_table(0, &int(0), crate::report::Format::Csv, None)?;
        let mut f = Failures::default();
        f.ok(table == golden, || format!("table differs from golden rows:\n{table}"));
        f.done()
    }));
    Ok(cases)
}

fn eigen_cases(g: &Grid) -> Result<Vec<Case>> {
    let alphas = natural_alphas(g)?;
    check_above_minus_one("beta", &g.betas)?;
    check_masses("mass-n", &g.masses_n)?;
    let n_max = g.n_max;
    let mut cases = Vec::new();
    for &a in &alphas {
        for b in &g.betas {
            for mass in &g.masses_n {
                let (b, mass) = (b.clone(), mass.clone());
                let params = [("alpha", a.to_string()), ("beta", q(&b)), ("mass-n", q(&mass))];
                cases.push(case(&params, move || {
                    let prm = high(a, &b)?;
                    let mut f = Failures::default();
                    for n in 0..=n_max {
                        f.ok(full_residual(n, &prm, &mass)?.is_zero(), || format!("n={n}: residual != 0"));
                        f.ok(weighted_spectral_residual(n, &prm, &mass)?.is_zero(), || {
                            format!("n={n}: weighted form residual != 0")
                        });
                        let k = spectral_constants(n, &prm, &mass);
                        let recomputed = &mass * &k.lambda_high + &k.coupling * &k.lambda_two;
                        f.ok(k.combined == recomputed, || format!("n={n}: combined eigenvalue mismatch"));
                    }
                    f.done()
                }));
            }
        }
    }
    Ok(cases)
}

fn mirror_cases(g: &Grid) -> Result<Vec<Case>> {
    check_above_minus_one("alpha", &g.alphas)?;
    require_nonempty("beta", &g.betas)?;
    let betas = g
        .betas
        .iter()
        .map(|b| as_natural(b).ok_or_else(|| grid_error(format!("beta = {b} must be a natural number"))))
        .collect::<Result<Vec<_>>>()?;
    check_masses("mass-m", &g.masses_m)?;
    let n_max = g.n_max;
    let mut cases = Vec::new();
    for a in &g.alphas {
        for &b in &betas {
            for mass in &g.masses_m {
                let (a, mass) = (a.clone(), mass.clone());
                let params = [("alpha", q(&a)), ("beta", b.to_string()), ("mass-m", q(&mass))];
                cases.push(case(&params, move || {
                    let mut f = Failures::default();
                    for n in 0..=n_max {
                        f.ok(mirrored_residual(n, &a, b, &mass)?.is_zero(), || format!("n={n}: residual != 0"));
                    }
                    f.done()
                }));
            }
        }
    }
    Ok(cases)
}

fn kernel_cases(g: &Grid) -> Result<Vec<Case>> {
    let alphas = natural_alphas(g)?;
    check_above_minus_one("beta", &g.betas)?;
    let (n_max, seed) = (g.n_max, g.seed);
    let mut cases = Vec::new();
    for &a in &alphas {
        for b in &g.betas {
            let b2 = b.clone();
            let params = [("alpha", a.to_string()), ("beta", q(b)), ("check", "kernel".into())];
            cases.push(case(&params, move || {
                let prm = high(a, &b2)?;
                let mut f = Failures::default();
                for n in 1..=n_max {
                    let (first, second) = kernel_identity_residuals(n, &prm)?;
                    f.ok(first.is_zero(), || format!("n={n}: second-order kernel identity fails"));
                    f.ok(second.is_zero(), || format!("n={n}: high-order kernel identity fails"));
                    f.ok(modifier_eigen_residual(n, &prm)?.is_zero(), || format!("n={n}: R_n is not an eigenfunction"));
                }
                f.done()
            }));
            let b2 = b.clone();
            let params = [("alpha", a.to_string()), ("beta", q(b)), ("check", "factors".into())];
            cases.push(case(&params, move || {
                let prm = high(a, &b2)?;
                let mut sampler = PolySampler::new(seed);
                let mut f = Failures::default();
                for _ in 0..3 {
                    let u = sampler.poly(6);
                    for j in 0..=a + 1 {
                        f.ok(shifted_factor_residual(j, &prm, &u)?.is_zero(), || format!("j={j}: shifted factor fails for u={u}"));
                        f.ok(conjugation_residual(j, &b2, &u)?.is_zero(), || format!("j={j}: conjugation fails for u={u}"));
                        f.ok(raising_chain_residual(j, &b2, &u)?.is_zero(), || format!("j={j}: raising chain fails for u={u}"));
                    }
                    f.ok(shifted_factorization_residual(&prm, &u)?.is_zero(), || format!("shifted factorization fails for u={u}"));
                }
                f.done()
            }));
        }
    }
    Ok(cases)
}

fn symmetry_cases(g: &Grid) -> Result<Vec<Case>> {
    let alphas = natural_alphas(g)?;
    check_above_minus_one("beta", &g.betas)?;
    check_masses("mass-n", &g.masses_n)?;
    let seed = g.seed;
    let mut cases = Vec::new();
    for &a in &alphas {
        for b in &g.betas {
            for mass in &g.masses_n {
                let (b, mass) = (b.clone(), mass.clone());
                let params = [("alpha", a.to_string()), ("beta", q(&b)), ("mass-n", q(&mass))];
                cases.push(case(&params, move || {
                    let spec = InnerProductSpec::new(int(a as i64), b.clone(), mass.clone())?;
                    let mut f = Failures::default();
                    for (k, (p1, p2)) in PolySampler::new(seed).pairs(20, 8).iter().enumerate() {
                        f.ok(symmetry_defect(p1, p2, &spec)?.is_zero(), || format!("pair {k}: (Lf,g) != (f,Lg)"));
                        let terms = symmetry_terms(p1, p2, &spec)?;
                        f.ok(terms.balanced(), || format!("pair {k}: boundary-form terms do not match"));
                        let (s1, s2) = (boundary_forms(p1, p2, &spec)?, boundary_forms(p2, p1, &spec)?);
                        f.ok(s1 == s2, || format!("pair {k}: S or T not symmetric"));
                        let (e1, e2) = endpoint_residuals(p1, &spec)?;
                        f.ok(e1.is_zero() && e2.is_zero(), || format!("pair {k}: endpoint values wrong"));
                    }
                    f.done()
                }));
            }
        }
    }
    Ok(cases)
}

fn gram_cases(g: &Grid) -> Result<Vec<Case>> {
    check_above_minus_one("alpha", &g.alphas)?;
    check_above_minus_one("beta", &g.betas)?;
    check_masses("mass-n", &g.masses_n)?;
    let n_max = g.n_max;
    let mut cases = Vec::new();
    for a in &g.alphas {
        for b in &g.betas {
            for mass in &g.masses_n {
                let (a, b, mass) = (a.clone(), b.clone(), mass.clone());
                let params = [("alpha", q(&a)), ("beta", q(&b)), ("mass-n", q(&mass))];
                cases.push(case(&params, move || {
                    let spec = InnerProductSpec::new(a.clone(), b.clone(), mass.clone())?;
                    let gram = gram_matrix(n_max, &spec)?;
                    let mut f = Failures::default();
                    for (n, row) in gram.iter().enumerate() {
                        for (m, v) in row.iter().enumerate() {
                            if n == m {
                                f.ok(v.is_positive(), || format!("G[{n}][{n}] = {v} is not positive"));
                            } else {
                                f.ok(v.is_zero(), || format!("G[{n}][{m}] = {v}"));
                            }
                        }
                    }
                    if a.is_zero() && b.is_zero() && mass.is_one() && n_max >= 1 {
                        f.ok(gram[0][1].is_zero(), || "G[0][1] != 0".into());
                        f.ok(gram[1][1] == rat(10, 3), || format!("G[1][1] = {} != 10/3", gram[1][1]));
                    }
                    f.done()
                }));
            }
        }
    }
    Ok(cases)
}

fn ultra_cases(g: &Grid) -> Result<Vec<Case>> {
    let alphas = natural_alphas(g)?;
    let seed = g.seed;
    let mut cases = Vec::new();
    for &a in &alphas {
        cases.push(case(&[("alpha", a.to_string()), ("check", "link".into())], move || {
            let mut sampler = PolySampler::new(seed);
            let mut f = Failures::default();
            for d in 0..=6 {
                let y = sampler.poly_of_degree(d);
                f.ok(link_residual(a, &y)?.is_zero(), || format!("link fails for y={y}"));
                let (r1, r2) = factorized_link_residuals(a, &y)?;
                f.ok(r1.is_zero(), || format!("shifted link fails for u={y}"));
                f.ok(r2.is_zero(), || format!("factor product link fails for u={y}"));
            }
            f.done()
        }));
    }
    for m in 0..=5u32 {
        cases.push(case(&[("check", "leibniz".into()), ("m", m.to_string())], move || {
            let mut f = Failures::default();
            for phi in PolySampler::new(seed + m as u64).pairs(2, 8).into_iter().flat_map(|(p, r)| [p, r]) {
                f.ok(leibniz_identity_residual(m, &phi)?.is_zero(), || format!("fails for phi={phi}"));
            }
            f.done()
        }));
    }
    for m in 0..=4u32 {
        cases.push(case(&[("check", "bessel".into()), ("m", m.to_string())], move || {
            let mut f = Failures::default();
            let mut sampler = PolySampler::new(seed + 100 + m as u64);
            for _ in 0..3 {
                let phi = sampler.poly(10);
                f.ok(bessel_identity_residual(m, &phi).is_zero(), || format!("fails for phi={phi}"));
                for j in 0..=m {
                    f.ok(bessel_expansion_residual(j, m, &phi).is_zero(), || format!("expansion j={j} fails for phi={phi}"));
                }
            }
            let cube = Poly::from_ints(&[0, 0, 0, 1]);
            f.ok(bessel_identity_residual(m, &cube).is_zero(), || "fails for xi^3".into());
            f.done()
        }));
    }
    Ok(cases)
}

fn substitution_cases(g: &Grid) -> Result<Vec<Case>> {
    let alphas = natural_alphas(g)?;
    check_masses("mass-n", &g.masses_n)?;
    let (n_max, seed) = (g.n_max, g.seed);
    let mut cases = Vec::new();
    for &a in &alphas {
        cases.push(case(&[("alpha", a.to_string()), ("check", "operators".into())], move || {
            let mut sampler = PolySampler::new(seed);
            let mut f = Failures::default();
            for d in 0..=6 {
                let y = sampler.poly_of_degree(d);
                let (h, s) = substitution_residual_even(a, &y)?;
                f.ok(h.is_zero() && s.is_zero(), || format!("even substitution fails for y={y}"));
                let (h, s) = substitution_residual_odd(a, &y)?;
                f.ok(h.is_zero() && s.is_zero(), || format!("odd substitution fails for y={y}"));
            }
            f.done()
        }));
        cases.push(case(&[("alpha", a.to_string()), ("check", "constants".into())], move || {
            let mut f = Failures::default();
            for n in 0..=n_max {
                f.ok(even_constant_defects(n, a).iter().all(Zero::is_zero), || format!("n={n}: even constants"));
                f.ok(odd_constant_defects(n, a).iter().all(Zero::is_zero), || format!("n={n}: odd constants"));
            }
            f.done()
        }));
        for mass in &g.masses_n {
            let mass = mass.clone();
            let params = [("alpha", a.to_string()), ("check", "eigen".into()), ("mass-n", q(&mass))];
            cases.push(case(&params, move || {
                let mut f = Failures::default();
                for n in 0..=n_max.min(6) {
                    let (u, v) = eigen_consequence_residuals(n, a, &mass)?;
                    f.ok(u.is_zero(), || format!("n={n}: even eigenfunction fails"));
                    f.ok(v.is_zero(), || format!("n={n}: odd eigenfunction fails"));
                }
                f.done()
            }));
        }
    }
    Ok(cases)
}

fn basics_cases(g: &Grid) -> Result<Vec<Case>> {
    check_above_minus_one("alpha", &g.alphas)?;
    check_above_minus_one("beta", &g.betas)?;
    let n_max = g.n_max;
    let mut cases = Vec::new();
    for a in &g.alphas {
        for b in &g.betas {
            let prm = JacobiParams::new(a.clone(), b.clone());
            let params = [("alpha", q(a)), ("beta", q(b))];
            cases.push(case(&params, move || {
                let mut f = Failures::default();
                for n in 0..=n_max {
                    let p = jacobi_poly(n, &prm)?;
                    f.ok(eigen_residual(n, &prm, &p).is_zero(), || format!("n={n}: second-order equation fails"));
                    f.ok(reflection_residual(n, &prm)?.is_zero(), || format!("n={n}: reflection fails"));
                    let names = ["first shift", "second shift", "third shift", "derivative"];
                    for (r, name) in contiguous_residuals(n, &prm)?.iter().zip(names) {
                        f.ok(r.is_zero(), || format!("n={n}: {name} relation fails"));
                    }
                    if prm.alpha.is_positive() && prm.beta.is_positive() {
                        let (d1, d2) = derivative_formula_residuals(n, &prm)?;
                        f.ok(d1.is_zero() && d2.is_zero(), || format!("n={n}: differentiation formula fails"));
                    }
                }
                f.done()
            }));
        }
    }
    cases.push(case(&[("check", "vandermonde".into())], move || {
        let mut f = Failures::default();
        let tops = [rat(-7, 3), rat(-1, 2), int(0), rat(1, 2), int(3)];
        let bottoms = [rat(1, 2), int(1), rat(5, 2), rat(7, 3)];
        for n in 0..=n_max {
            for p in &tops {
                for c in &bottoms {
                    let spec = HypSpec::new(vec![int(-(n as i64)), p.clone()], vec![c.clone()]);
                    let expected = pochhammer(&(c - p), n) / pochhammer(c, n);
                    f.ok(hyp_terminating(&spec)? == expected, || format!("n={n}, p={p}, q={c}"));
                }
            }
        }
        f.done()
    }));
    Ok(cases)
}

fn build_cases(name: &str, grid: &Grid) -> Result<Vec<Case>> {
    match name {
        "routes" => routes_cases(grid),
        "coeffs" => coeffs_cases(grid),
        "eigen" => eigen_cases(grid),
        "mirror" => mirror_cases(grid),
        "kernel" => kernel_cases(grid),
        "symmetry" => symmetry_cases(grid),
        "gram" => gram_cases(grid),
        "ultra" => ultra_cases(grid),
        "substitution" => substitution_cases(grid),
        "basics" => basics_cases(grid),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

/// Runs one suite, evaluating cases in parallel on the current rayon pool.
pub fn run_suite(name: &str, grid: &Grid) -> Result<SuiteReport> {
    let start = Instant::now();
    let cases = build_cases(name, grid)?;
    let results: Vec<CaseResult> = cases
        .into_par_iter()
        .map(|c| {
            let (status, detail) = match (c.check)() {
                Ok(fails) if fails.is_empty() => (Status::Pass, "ok".to_string()),
                Ok(fails) => (Status::Fail, fails.join("; ")),
                Err(e) => (Status::Error, e.to_string()),
            };
            CaseResult {
                params: c.params,
                status,
                detail,
            }
        })
        .collect();
    Ok(SuiteReport::new(name, results, start.elapsed().as_millis() as u64))
}

/// Runs a suite on its default grid.
pub fn run_default(name: &str) -> Result<SuiteReport> {
    run_suite(name, &Grid::default_for(name)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(matches!(Grid::default_for("nope"), Err(Error::UnknownSuite(_))));
        let g = Grid::default_for("routes").unwrap();
        assert!(matches!(run_suite("nope", &g), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn small_routes() {
        let mut g = Grid::default_for("routes").unwrap();
        g.alphas = naturals(1);
        g.betas = vec![int(0)];
        let r = run_suite("routes", &g).unwrap();
        assert_eq!(r.summary.total, 2);
        assert!(r.is_success(), "{:?}", r.cases);
    }

    #[test]
    fn small_gram() {
        let mut g = Grid::default_for("gram").unwrap();
        g.alphas = vec![int(0)];
        g.betas = vec![int(0)];
        g.masses_n = vec![int(1)];
        g.n_max = 3;
        let r = run_suite("gram", &g).unwrap();
        assert!(r.is_success(), "{:?}", r.cases);
    }

    #[test]
    fn invalid_grids() {
        let mut g = Grid::default_for("eigen").unwrap();
        g.betas = vec![int(-2)];
        assert!(matches!(run_suite("eigen", &g), Err(Error::InvalidGrid(_))));
        let mut g = Grid::default_for("mirror").unwrap();
        g.betas = vec![rat(1, 2)];
        assert!(matches!(run_suite("mirror", &g), Err(Error::InvalidGrid(_))));
        let mut g = Grid::default_for("routes").unwrap();
        g.alphas = vec![rat(1, 2)];
        assert!(matches!(run_suite("routes", &g), Err(Error::InvalidGrid(_))));
        g.alphas = vec![];
        assert!(matches!(run_suite("routes", &g), Err(Error::InvalidGrid(_))));
    }

    #[test]
    fn deterministic() {
        let mut g = Grid::default_for("symmetry").unwrap();
        g.alphas = vec![int(0), int(1)];
        g.betas = vec![rat(1, 2)];
        g.masses_n = vec![int(1)];
        let mut a = run_suite("symmetry", &g).unwrap();
        let mut b = run_suite("symmetry", &g).unwrap();
        a.runtime_millis = 0;
        b.runtime_millis = 0;
        assert_eq!(a, b);
        assert!(a.is_success(), "{:?}", a.cases);
    }
}
