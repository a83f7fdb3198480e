//! Pochhammer symbols and terminating hypergeometric sums at unit argument.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{as_integer, int, Rational};

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`; the empty product is one.
pub fn pochhammer(a: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    let mut factor = a.clone();
    for _ in 0..k {
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

/// Parameters of `pFq(upper; lower; 1)`, at least one upper parameter a nonpositive integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypSpec {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
}

impl HypSpec {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>) -> Self {
        HypSpec { upper, lower }
    }

    /// Number of terms minus one: the smallest `k` with `-k` among the upper parameters.
    pub fn termination_order(&self) -> Option<u32> {
        self.upper
            .iter()
            .filter_map(|a| as_integer(a).filter(|n| *n <= 0))
            .map(|n| n.unsigned_abs() as u32)
            .min()
    }

    fn validate(&self) -> Result<u32> {
        let k = self.termination_order().ok_or(Error::NonTerminating)?;
        for b in &self.lower {
            // (b)_m vanishes for some m <= k exactly when b is in {0, -1, ..., -(k-1)}
            if let Some(n) = as_integer(b) {
                if n <= 0 && n > -(k as i64) {
                    return Err(Error::PoleInLowerParameter(b.clone()));
                }
            }
        }
        Ok(k)
    }
}

/// `sum_{m=0}^{k} prod (upper)_m / (prod (lower)_m m!)`, exactly.
///
/// Terms are generated by ratio updates.
pub fn hyp_terminating(spec: &HypSpec) -> Result<Rational> {
    let k = spec.validate()?;
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for m in 0..k {
        let mi = int(m as i64);
        let mut num = Rational::one();
        for a in &spec.upper {
            num *= a + &mi;
        }
        let mut den = int(m as i64 + 1);
        for b in &spec.lower {
            den *= b + &mi;
        }
        term = term * num / den;
        if term.is_zero() {
            break;
        }
        sum += &term;
    }
    Ok(sum)
}

/// Sign-aware `(-1)^n`.
pub fn minus_one_pow(n: i64) -> Rational {
    if n.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// True when `a > -1`.
pub fn exceeds_minus_one(a: &Rational) -> bool {
    (a + Rational::one()).is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&int(5), 0), int(1));
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
        assert_eq!(pochhammer(&int(0), 3), int(0));
        assert_eq!(pochhammer(&int(-3), 3), int(-6));
    }

    #[test]
    fn pochhammer_splits() {
        let a = rat(-7, 3);
        for j in 0..6 {
            for k in 0..6 {
                let lhs = pochhammer(&a, j + k);
                let rhs = pochhammer(&a, j) * pochhammer(&(&a + int(j as i64)), k);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn single_term_sum() {
        let s = HypSpec::new(vec![int(0), rat(7, 2)], vec![rat(1, 3)]);
        assert_eq!(hyp_terminating(&s).unwrap(), int(1));
    }

    #[test]
    fn vandermonde_example() {
        let s = HypSpec::new(vec![int(-3), int(2)], vec![int(5)]);
        assert_eq!(hyp_terminating(&s).unwrap(), rat(2, 7));
    }

    #[test]
    fn three_f_two_example() {
        let s = HypSpec::new(vec![int(-1), int(3), int(3)], vec![int(1), int(2)]);
        assert_eq!(hyp_terminating(&s).unwrap(), rat(-7, 2));
    }

    #[test]
    fn poles_and_nontermination() {
        let s = HypSpec::new(vec![int(-3), int(1)], vec![int(-1)]);
        assert_eq!(hyp_terminating(&s), Err(Error::PoleInLowerParameter(int(-1))));
        // the pole at -3 lies beyond the three factors (b)_m, m <= 3, that are used
        let s = HypSpec::new(vec![int(-3), int(1)], vec![int(-3)]);
        assert!(hyp_terminating(&s).is_ok());
        let s = HypSpec::new(vec![rat(1, 2)], vec![int(1)]);
        assert_eq!(hyp_terminating(&s), Err(Error::NonTerminating));
    }

    #[test]
    fn sign_helpers() {
        assert_eq!(minus_one_pow(-3), int(-1));
        assert_eq!(minus_one_pow(4), int(1));
        assert!(exceeds_minus_one(&rat(-1, 2)));
        assert!(!exceeds_minus_one(&int(-1)));
    }
}
