use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::{add_exp, write_signed_terms};
use crate::error::{Error, Result};

/// Exact Laurent polynomial in one named variable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OneVarLaurent {
    terms: BTreeMap<i32, BigInt>,
    var: &'static str,
}

impl OneVarLaurent {
    pub fn zero(var: &'static str) -> Self {
        Self {
            terms: BTreeMap::new(),
            var,
        }
    }

    pub fn one(var: &'static str) -> Self {
        Self::monomial(var, BigInt::one(), 0)
    }

    pub fn constant(var: &'static str, c: impl Into<BigInt>) -> Self {
        Self::monomial(var, c.into(), 0)
    }

    pub fn monomial(var: &'static str, coef: BigInt, exp: i32) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exp, coef);
        p
    }

    pub fn from_terms<I, C>(var: &'static str, terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Polynomial from ascending coefficients `c[0] + c[1] t + ...`.
    pub fn from_coeffs<C: Into<BigInt> + Clone>(var: &'static str, coeffs: &[C]) -> Self {
        Self::from_terms(
            var,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i32, c.clone())),
        )
    }

    pub fn var(&self) -> &'static str {
        self.var
    }

    pub fn with_var(mut self, var: &'static str) -> Self {
        self.var = var;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&i32, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i32, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += coef;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (add_exp(*e, k), c.clone()))
                .collect(),
            var: self.var,
        }
    }

    /// Substitutes `t -> t^k` (k may be negative).
    pub fn substitute_power(&self, k: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (super::laurent::mul_exp(*e, k), c.clone()))
                .collect(),
            var: self.var,
        }
    }

    /// The mirror image `t -> t^-1`.
    pub fn mirror(&self) -> Self {
        self.substitute_power(-1)
    }

    /// Substitutes `t -> t^(1/k)`; fails if some exponent is not divisible
    /// by `k`.
    pub fn root_substitute(&self, k: i32) -> Option<Self> {
        let mut out = Self::zero(self.var);
        for (e, c) in &self.terms {
            if e % k != 0 {
                return None;
            }
            out.add_term(e / k, c.clone());
        }
        Some(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Unit normalization for comparisons up to `±t^k`: shifts so the lowest
    /// exponent is zero and makes the lowest coefficient positive.
    pub fn normalize_unit(&self) -> Self {
        let Some(lo) = self.min_degree() else {
            return self.clone();
        };
        let shifted = self.shift(-lo);
        if shifted.coeff(0).is_negative() {
            -shifted
        } else {
            shifted
        }
    }

    pub fn equal_up_to_unit(&self, other: &Self) -> bool {
        self.normalize_unit() == other.normalize_unit()
    }

    /// Exact division; errors on a nonzero remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (Some(dlo), Some(dhi)) = (divisor.min_degree(), divisor.max_degree()) else {
            return Err(Error::InvalidArgument("division by zero polynomial".into()));
        };
        let Some(nlo) = self.min_degree() else {
            return Ok(Self::zero(self.var));
        };
        // Normalize both to ordinary polynomials with nonzero constant term.
        let mut rem: BTreeMap<i32, BigInt> = self
            .terms
            .iter()
            .map(|(e, c)| (e - nlo, c.clone()))
            .collect();
        let dnorm: Vec<(i32, BigInt)> = divisor
            .terms
            .iter()
            .map(|(e, c)| (e - dlo, c.clone()))
            .collect();
        let ddeg = dhi - dlo;
        let lead = &divisor.terms[&dhi];
        let mut quot = Self::zero(self.var);
        while let Some((&top, _)) = rem.iter().next_back() {
            if top < ddeg {
                return Err(Error::InexactDivision);
            }
            let c = rem[&top].clone();
            let (qc, r) = c.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            let shift = top - ddeg;
            for (e, dc) in &dnorm {
                let slot = rem.entry(e + shift).or_default();
                *slot -= &qc * dc;
                if slot.is_zero() {
                    rem.remove(&(e + shift));
                }
            }
            quot.add_term(shift, qc);
        }
        Ok(quot.shift(nlo - dlo))
    }
}

impl fmt::Debug for OneVarLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OneVarLaurent({})", self)
    }
}

impl fmt::Display for OneVarLaurent {
    /// Terms in descending exponent order, e.g. `q^-2 + q^-6 - q^-8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_signed_terms(
            &mut s,
            self.terms
                .iter()
                .rev()
                .map(|(e, c)| (c, vec![(self.var, *e)])),
        )?;
        f.write_str(&s)
    }
}

impl<'a> AddAssign<&'a OneVarLaurent> for OneVarLaurent {
    fn add_assign(&mut self, rhs: &'a OneVarLaurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a> Add<&'a OneVarLaurent> for &OneVarLaurent {
    type Output = OneVarLaurent;
    fn add(self, rhs: &'a OneVarLaurent) -> OneVarLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a OneVarLaurent> for &OneVarLaurent {
    type Output = OneVarLaurent;
    fn sub(self, rhs: &'a OneVarLaurent) -> OneVarLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for OneVarLaurent {
    type Output = OneVarLaurent;
    fn neg(mut self) -> OneVarLaurent {
        for c in self.terms.values_mut() {
            *c = -&*c;
        }
        self
    }
}

impl<'a> Mul<&'a OneVarLaurent> for &OneVarLaurent {
    type Output = OneVarLaurent;
    fn mul(self, rhs: &'a OneVarLaurent) -> OneVarLaurent {
        let mut out = OneVarLaurent::zero(self.var);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(add_exp(*e1, *e2), c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_descending() {
        let j = OneVarLaurent::from_terms("q", [(-2, 1), (-6, 1), (-8, -1)]);
        assert_eq!(j.to_string(), "q^-2 + q^-6 - q^-8");
        let a = OneVarLaurent::from_terms("s", [(2, 1), (0, -1), (-2, 1)]);
        assert_eq!(a.to_string(), "s^2 - 1 + s^-2");
        assert_eq!(OneVarLaurent::zero("t").to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let num = OneVarLaurent::from_coeffs("t", &[1, 0, 0, 1]); // 1 + t^3
        let den = OneVarLaurent::from_coeffs("t", &[1, 1]);
        let q = num.div_exact(&den).unwrap();
        assert_eq!(q, OneVarLaurent::from_coeffs("t", &[1, -1, 1]));
        let bad = OneVarLaurent::from_coeffs("t", &[1, 0, 1]);
        assert_eq!(bad.div_exact(&den), Err(Error::InexactDivision));
        // Laurent shifts on both sides.
        let q2 = num.shift(-5).div_exact(&den.shift(2)).unwrap();
        assert_eq!(q2, q.shift(-7));
    }

    #[test]
    fn unit_normalization() {
        let a = OneVarLaurent::from_terms("t", [(1, 1), (0, -1), (-1, 1)]);
        let b = OneVarLaurent::from_coeffs("t", &[-1, 1, -1]).shift(4);
        assert!(a.equal_up_to_unit(&b));
        assert_eq!(
            a.normalize_unit(),
            OneVarLaurent::from_coeffs("t", &[1, -1, 1])
        );
    }
}
