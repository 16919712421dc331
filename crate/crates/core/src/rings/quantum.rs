//! Quantum integers, factorials and Gaussian binomials.

use num_bigint::BigInt;
use num_traits::One;

use super::laurent::{TwoVarLaurent, Variable, Vars};
use super::univariate::OneVarLaurent;
use crate::error::{Error, Result};

/// Symmetric quantum integer `[n]_q` as a one-variable polynomial.
fn qint_1v(n: u32) -> OneVarLaurent {
    let n = n as i32;
    OneVarLaurent::from_terms("q", (0..n).map(|k| (n - 1 - 2 * k, 1)))
}

fn qfact_1v(n: u32) -> OneVarLaurent {
    (1..=n).fold(OneVarLaurent::one("q"), |acc, k| &acc * &qint_1v(k))
}

fn embed_q(p: &OneVarLaurent) -> TwoVarLaurent {
    TwoVarLaurent::from_terms(Vars::QS, p.terms().map(|(e, c)| ((*e, 0), c.clone())))
}

/// `[n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n)`, zero for `n = 0`.
pub fn qint(n: u32) -> TwoVarLaurent {
    embed_q(&qint_1v(n))
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn qfact(n: u32) -> TwoVarLaurent {
    embed_q(&qfact_1v(n))
}

/// Gaussian binomial `[n choose j]_q`, computed by exact division of
/// quantum factorials.
pub fn qbinom(n: i64, j: i64) -> Result<TwoVarLaurent> {
    if j < 0 || j > n {
        return Err(Error::InvalidArgument(format!(
            "qbinom requires 0 <= j <= n, got n={n}, j={j}"
        )));
    }
    let to_u32 = |v: i64| {
        u32::try_from(v)
            .map_err(|_| Error::InvalidArgument(format!("qbinom argument {v} too large")))
    };
    let (n, j) = (to_u32(n)?, to_u32(j)?);
    let den = &qfact_1v(n - j) * &qfact_1v(j);
    Ok(embed_q(&qfact_1v(n).div_exact(&den)?))
}

/// One-sided quantum factorial `(n)_y! = (1)_y (2)_y ... (n)_y` with
/// `(k)_y = 1 + y + ... + y^(k-1)`, in the named variable.
pub fn yfact(n: u32, var: Variable) -> TwoVarLaurent {
    let vars = var.ring();
    let mut acc = TwoVarLaurent::one(vars);
    for k in 1..=n as i32 {
        let yk = TwoVarLaurent::from_terms(vars, (0..k).map(|e| (var.exponent(e), BigInt::one())));
        acc = &acc * &yk;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(t: &[(i32, i64)]) -> TwoVarLaurent {
        TwoVarLaurent::from_terms(Vars::QS, t.iter().map(|&(e, c)| ((e, 0), c)))
    }

    #[test]
    fn qint_examples() {
        assert!(qint(0).is_zero());
        assert!(qint(1).is_one());
        assert_eq!(qint(2), qs(&[(1, 1), (-1, 1)]));
        assert_eq!(qint(3), qs(&[(2, 1), (0, 1), (-2, 1)]));
    }

    #[test]
    fn qint_times_denominator_is_numerator() {
        // [n](q - q^-1) = q^n - q^-n
        let den = qs(&[(1, 1), (-1, -1)]);
        for n in 0..10 {
            let lhs = &qint(n) * &den;
            let n = n as i32;
            assert_eq!(lhs, qs(&[(n, 1), (-n, -1)]));
        }
    }

    #[test]
    fn qbinom_examples() {
        for n in 0..6 {
            assert!(qbinom(n, 0).unwrap().is_one());
            assert!(qbinom(n, n).unwrap().is_one());
        }
        assert_eq!(qbinom(2, 1).unwrap(), qint(2));
        assert_eq!(
            qbinom(4, 2).unwrap(),
            qs(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)])
        );
        assert!(qbinom(3, 4).is_err());
        assert!(qbinom(3, -1).is_err());
    }

    #[test]
    fn yfact_examples() {
        let d = |t: &[(i32, i64)]| {
            TwoVarLaurent::from_terms(Vars::XD, t.iter().map(|&(e, c)| ((0, e), c)))
        };
        assert!(yfact(0, Variable::D).is_one());
        assert_eq!(yfact(2, Variable::D), d(&[(0, 1), (1, 1)]));
        assert_eq!(yfact(3, Variable::D), d(&[(0, 1), (1, 2), (2, 2), (3, 1)]));
        assert_eq!(
            yfact(2, Variable::Q),
            TwoVarLaurent::from_terms(Vars::QS, [((0, 0), 1), ((1, 0), 1)])
        );
    }
}
