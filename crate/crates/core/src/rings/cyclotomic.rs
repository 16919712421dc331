//! The cyclotomic ring `Z[xi]` for `xi = exp(2 pi i / 2N)`, and Laurent
//! polynomials in a symbolic variable `s` over it.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::laurent::add_exp;
use super::univariate::OneVarLaurent;

fn cyclotomic_m(m: u32) -> OneVarLaurent {
    // t^m - 1 = prod_{k | m} Phi_k(t)
    let mut num = OneVarLaurent::from_terms("t", [(m as i32, 1), (0, -1)]);
    for k in 1..m {
        if m.is_multiple_of(k) {
            num = num
                .div_exact(&cyclotomic_m(k))
                .expect("cyclotomic factor must divide t^m - 1");
        }
    }
    num
}

/// Ascending coefficients of the 2N-th cyclotomic polynomial, the minimal
/// polynomial of `xi_N = exp(2 pi i / 2N)`.
///
/// Panics if `order == 0`.
pub fn cyclotomic_poly(order: u32) -> Vec<BigInt> {
    assert!(order >= 1, "cyclotomic order must be positive");
    let phi = cyclotomic_m(2 * order);
    let deg = phi.max_degree().unwrap_or(0);
    (0..=deg).map(|e| phi.coeff(e)).collect()
}

fn modulus(order: u32) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.read().unwrap().get(&order) {
        return m.clone();
    }
    let m = Arc::new(cyclotomic_poly(order));
    cache.write().unwrap().entry(order).or_insert(m).clone()
}

/// Element of `Z[xi_N]`, stored as its residue modulo the 2N-th cyclotomic
/// polynomial (so `coeffs.len() == deg Phi_2N`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycScalar {
    coeffs: Vec<BigInt>,
    order: u32,
}

impl CycScalar {
    pub fn zero(order: u32) -> Self {
        let deg = modulus(order).len() - 1;
        Self {
            coeffs: vec![BigInt::zero(); deg],
            order,
        }
    }

    pub fn from_int(order: u32, c: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = c.into();
        z
    }

    pub fn one(order: u32) -> Self {
        Self::from_int(order, 1)
    }

    /// `xi_N^k` for any integer `k`.
    pub fn xi_pow(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(2 * order as i64) as usize;
        let mut raw = vec![BigInt::zero(); e + 1];
        raw[e] = BigInt::one();
        Self::reduce(order, raw)
    }

    /// Residue of an arbitrary ascending coefficient vector.
    pub fn from_coeffs(order: u32, coeffs: Vec<BigInt>) -> Self {
        Self::reduce(order, coeffs)
    }

    fn reduce(order: u32, mut raw: Vec<BigInt>) -> Self {
        let m = modulus(order);
        let deg = m.len() - 1;
        // Phi is monic: eliminate from the top.
        while raw.len() > deg {
            let top = raw.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let base = raw.len() - deg;
            for (k, mk) in m[..deg].iter().enumerate() {
                raw[base + k] -= &top * mk;
            }
        }
        raw.resize(deg, BigInt::zero());
        Self { coeffs: raw, order }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.as_integer().is_some_and(|c| c.is_one())
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.order, other.order, "mixing different cyclotomic rings");
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycScalar<{}>({})", self.order, self)
    }
}

impl fmt::Display for CycScalar {
    /// Ascending powers of `z`, where `z` stands for `xi_N`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        super::laurent::write_signed_terms(
            &mut s,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (c, vec![("z", e as i32)])),
        )?;
        f.write_str(&s)
    }
}

impl<'a> Add<&'a CycScalar> for &CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &'a CycScalar) -> CycScalar {
        self.check(rhs);
        CycScalar {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
            order: self.order,
        }
    }
}

impl<'a> Sub<&'a CycScalar> for &CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &'a CycScalar) -> CycScalar {
        self.check(rhs);
        CycScalar {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
            order: self.order,
        }
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }
}

impl<'a> Mul<&'a CycScalar> for &CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &'a CycScalar) -> CycScalar {
        self.check(rhs);
        let n = self.coeffs.len();
        let mut raw = vec![BigInt::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        CycScalar::reduce(self.order, raw)
    }
}

/// Laurent polynomial in the symbolic variable `s` (standing for
/// `xi_N^lambda`) with coefficients in `Z[xi_N]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycLaurent {
    terms: BTreeMap<i32, CycScalar>,
    order: u32,
}

impl CycLaurent {
    pub fn zero(order: u32) -> Self {
        Self {
            terms: BTreeMap::new(),
            order,
        }
    }

    pub fn one(order: u32) -> Self {
        Self::monomial(CycScalar::one(order), 0)
    }

    pub fn monomial(coef: CycScalar, exp: i32) -> Self {
        let mut p = Self::zero(coef.order);
        p.add_term(exp, coef);
        p
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(CycScalar::is_one)
    }

    /// Terms in ascending `s`-exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&i32, &CycScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: i32) -> CycScalar {
        self.terms
            .get(&e)
            .cloned()
            .unwrap_or_else(|| CycScalar::zero(self.order))
    }

    pub fn add_term(&mut self, exp: i32, coef: CycScalar) {
        assert_eq!(coef.order, self.order, "mixing different cyclotomic rings");
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coef;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (add_exp(*e, k), c.clone()))
                .collect(),
            order: self.order,
        }
    }

    /// The polynomial as an integer Laurent polynomial, if every
    /// coefficient is a rational integer.
    pub fn to_integer_laurent(&self, var: &'static str) -> Option<OneVarLaurent> {
        let mut out = OneVarLaurent::zero(var);
        for (e, c) in &self.terms {
            out.add_term(*e, c.as_integer()?);
        }
        Some(out)
    }
}

impl fmt::Debug for CycLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycLaurent<{}>({})", self.order, self)
    }
}

impl fmt::Display for CycLaurent {
    /// Descending powers of `s`. Integer coefficients print bare; others as
    /// a parenthesized polynomial in `z = xi_N`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            let mut mono = String::new();
            let has_mono = super::laurent::write_monomial(&mut mono, &[("s", e)])?;
            match c.as_integer() {
                Some(k) => {
                    let neg = k.is_negative();
                    match (first, neg) {
                        (true, true) => f.write_str("-")?,
                        (true, false) => {}
                        (false, true) => f.write_str(" - ")?,
                        (false, false) => f.write_str(" + ")?,
                    }
                    let abs = k.abs();
                    if !has_mono {
                        write!(f, "{abs}")?;
                    } else if abs.is_one() {
                        f.write_str(&mono)?;
                    } else {
                        write!(f, "{abs}*{mono}")?;
                    }
                }
                None => {
                    if !first {
                        f.write_str(" + ")?;
                    }
                    if has_mono {
                        write!(f, "({c})*{mono}")?;
                    } else {
                        write!(f, "({c})")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl<'a> AddAssign<&'a CycLaurent> for CycLaurent {
    fn add_assign(&mut self, rhs: &'a CycLaurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a> Add<&'a CycLaurent> for &CycLaurent {
    type Output = CycLaurent;
    fn add(self, rhs: &'a CycLaurent) -> CycLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a CycLaurent> for &CycLaurent {
    type Output = CycLaurent;
    fn sub(self, rhs: &'a CycLaurent) -> CycLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a CycLaurent> for &CycLaurent {
    type Output = CycLaurent;
    fn mul(self, rhs: &'a CycLaurent) -> CycLaurent {
        assert_eq!(self.order, rhs.order, "mixing different cyclotomic rings");
        let mut out = CycLaurent::zero(self.order);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(add_exp(*e1, *e2), c1 * c2);
            }
        }
        out
    }
}
