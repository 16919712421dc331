//! Sparse Laurent polynomials in two variables with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// The two coefficient rings the engine works in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vars {
    /// `Z[x^±1, d^±1]`, where the unified pairing lives.
    XD,
    /// `Z[q^±1, s^±1]`, where the Verma module and its R-matrix live.
    QS,
}

impl Vars {
    pub fn names(self) -> (&'static str, &'static str) {
        match self {
            Vars::XD => ("x", "d"),
            Vars::QS => ("q", "s"),
        }
    }
}

impl fmt::Display for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.names();
        write!(f, "Z[{a},{b}]")
    }
}

/// A single named variable: its ring and its slot in the exponent pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variable {
    X,
    D,
    Q,
    S,
}

impl Variable {
    pub fn ring(self) -> Vars {
        match self {
            Variable::X | Variable::D => Vars::XD,
            Variable::Q | Variable::S => Vars::QS,
        }
    }

    /// 0 for the first variable of the ring, 1 for the second.
    pub fn slot(self) -> usize {
        match self {
            Variable::X | Variable::Q => 0,
            Variable::D | Variable::S => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variable::X => "x",
            Variable::D => "d",
            Variable::Q => "q",
            Variable::S => "s",
        }
    }

    /// Exponent pair of `self^k`.
    pub fn exponent(self, k: i32) -> (i32, i32) {
        if self.slot() == 0 {
            (k, 0)
        } else {
            (0, k)
        }
    }
}

pub(crate) fn add_exp(a: i32, b: i32) -> i32 {
    a.checked_add(b)
        .unwrap_or_else(|| panic!("Laurent exponent overflow: {a} + {b}"))
}

pub(crate) fn mul_exp(a: i32, b: i32) -> i32 {
    a.checked_mul(b)
        .unwrap_or_else(|| panic!("Laurent exponent overflow: {a} * {b}"))
}

/// Exact Laurent polynomial in two variables.
///
/// Terms are kept in canonical form: no zero coefficient is ever stored, so
/// structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TwoVarLaurent {
    terms: BTreeMap<(i32, i32), BigInt>,
    vars: Vars,
}

impl TwoVarLaurent {
    pub fn zero(vars: Vars) -> Self {
        Self {
            terms: BTreeMap::new(),
            vars,
        }
    }

    pub fn one(vars: Vars) -> Self {
        Self::monomial(vars, BigInt::one(), (0, 0))
    }

    pub fn constant(vars: Vars, c: impl Into<BigInt>) -> Self {
        Self::monomial(vars, c.into(), (0, 0))
    }

    pub fn monomial(vars: Vars, coef: BigInt, exp: (i32, i32)) -> Self {
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(exp, coef);
        }
        Self { terms, vars }
    }

    /// The variable itself, as a polynomial in its ring.
    pub fn var(v: Variable) -> Self {
        Self::monomial(v.ring(), BigInt::one(), v.exponent(1))
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms<I, C>(vars: Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = ((i32, i32), C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn vars(&self) -> Vars {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: (i32, i32)) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// If this is `c * a^i * b^j` returns `(c, (i, j))`.
    pub fn as_monomial(&self) -> Option<(&BigInt, (i32, i32))> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, exp: (i32, i32), coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies by the monomial `a^i b^j`.
    pub fn shift(&self, exp: (i32, i32)) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((add_exp(a, exp.0), add_exp(b, exp.1)), c.clone()))
                .collect(),
            vars: self.vars,
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.vars);
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
            vars: self.vars,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.vars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Ring homomorphism to another ring, defined by the images of the two
    /// variables. Each image is given as a function of the exponent.
    pub fn map_monomials<F>(&self, target: Vars, mut image: F) -> Self
    where
        F: FnMut((i32, i32)) -> (i32, i32),
    {
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            out.add_term(image(*e), c.clone());
        }
        out
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(
            self.vars, other.vars,
            "arithmetic between polynomials in different rings"
        );
    }
}

impl fmt::Debug for TwoVarLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwoVarLaurent[{}]({})", self.vars, self)
    }
}

/// Writes `a^i*b^j`, omitting unit factors; returns false if nothing was
/// written.
pub(crate) fn write_monomial(
    f: &mut impl fmt::Write,
    parts: &[(&str, i32)],
) -> Result<bool, fmt::Error> {
    let mut wrote = false;
    for &(name, e) in parts {
        if e == 0 {
            continue;
        }
        if wrote {
            f.write_char('*')?;
        }
        if e == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{e}")?;
        }
        wrote = true;
    }
    Ok(wrote)
}

/// Writes a signed sum of terms `c*mono`. The first term carries a bare `-`
/// when negative; later terms are joined by ` + ` or ` - `.
pub(crate) fn write_signed_terms<'a, I>(f: &mut impl fmt::Write, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (&'a BigInt, Vec<(&'a str, i32)>)>,
{
    let mut first = true;
    for (c, parts) in terms {
        let neg = c.is_negative();
        match (first, neg) {
            (true, true) => f.write_char('-')?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let abs = c.abs();
        let mut mono = String::new();
        let has_mono = write_monomial(&mut mono, &parts)?;
        if !has_mono {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            f.write_str(&mono)?;
        } else {
            write!(f, "{abs}*{mono}")?;
        }
    }
    if first {
        f.write_char('0')?;
    }
    Ok(())
}

impl fmt::Display for TwoVarLaurent {
    /// Canonical rendering: terms in lexicographic exponent order, each as
    /// `c*a^i*b^j` with unit factors omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (na, nb) = self.vars.names();
        let mut s = String::new();
        write_signed_terms(
            &mut s,
            self.terms
                .iter()
                .map(|(&(a, b), c)| (c, vec![(na, a), (nb, b)])),
        )?;
        f.write_str(&s)
    }
}

impl<'a> Add<&'a TwoVarLaurent> for &TwoVarLaurent {
    type Output = TwoVarLaurent;
    fn add(self, rhs: &'a TwoVarLaurent) -> TwoVarLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for TwoVarLaurent {
    type Output = TwoVarLaurent;
    fn add(mut self, rhs: TwoVarLaurent) -> TwoVarLaurent {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a TwoVarLaurent> for TwoVarLaurent {
    fn add_assign(&mut self, rhs: &'a TwoVarLaurent) {
        self.check_vars(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a> SubAssign<&'a TwoVarLaurent> for TwoVarLaurent {
    fn sub_assign(&mut self, rhs: &'a TwoVarLaurent) {
        self.check_vars(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl<'a> Sub<&'a TwoVarLaurent> for &TwoVarLaurent {
    type Output = TwoVarLaurent;
    fn sub(self, rhs: &'a TwoVarLaurent) -> TwoVarLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for TwoVarLaurent {
    type Output = TwoVarLaurent;
    fn sub(mut self, rhs: TwoVarLaurent) -> TwoVarLaurent {
        self -= &rhs;
        self
    }
}

impl Neg for &TwoVarLaurent {
    type Output = TwoVarLaurent;
    fn neg(self) -> TwoVarLaurent {
        TwoVarLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
            vars: self.vars,
        }
    }
}

impl Neg for TwoVarLaurent {
    type Output = TwoVarLaurent;
    fn neg(self) -> TwoVarLaurent {
        -&self
    }
}

impl<'a> Mul<&'a TwoVarLaurent> for &TwoVarLaurent {
    type Output = TwoVarLaurent;
    fn mul(self, rhs: &'a TwoVarLaurent) -> TwoVarLaurent {
        self.check_vars(rhs);
        let mut out = TwoVarLaurent::zero(self.vars);
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((add_exp(a1, a2), add_exp(b1, b2)), c1 * c2);
            }
        }
        out
    }
}

impl Mul for TwoVarLaurent {
    type Output = TwoVarLaurent;
    fn mul(self, rhs: TwoVarLaurent) -> TwoVarLaurent {
        &self * &rhs
    }
}
