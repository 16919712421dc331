//! The generic braid group representation on weight spaces of tensor powers
//! of the two-variable Verma module.
//!
//! A weight space `V_{n,m}` has basis `v_{e_1} ⊗ ... ⊗ v_{e_n}` indexed by
//! compositions `e` of `m` into `n` nonnegative parts. The braid generator
//! `sigma_i` acts through the R-matrix on tensor factors `i, i+1`, which
//! preserves the total weight, so every computation stays in a finite space.

mod action;
mod rmatrix;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rings::{TwoVarLaurent, Vars};

pub use action::{apply_braid, apply_generator, representation_matrix, RepresentationMatrix};
pub use rmatrix::{rmatrix_entry, rmatrix_series_oracle, verma_divided_f, verma_e_power};

/// A composition `(e_1, ..., e_n)` of nonnegative parts; the basis label of
/// `v_{e_1} ⊗ ... ⊗ v_{e_n}`. Ordered lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Self(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// Membership in `E_{n,m}`.
    pub fn is_in(&self, n: usize, m: u64) -> bool {
        self.0.len() == n && self.weight() == m
    }

    pub(crate) fn parts_mut(&mut self) -> &mut [u32] {
        &mut self.0
    }
}

impl From<Vec<u32>> for Composition {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All compositions of `m` into `n` nonnegative parts, lexicographically.
pub fn enumerate_basis(n: usize, m: u32) -> Vec<Composition> {
    fn rec(n: usize, m: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if n == 1 {
            prefix.push(m);
            out.push(Composition(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in 0..=m {
            prefix.push(first);
            rec(n - 1, m - first, prefix, out);
            prefix.pop();
        }
    }
    assert!(n >= 1, "weight spaces need at least one tensor factor");
    let mut out = Vec::new();
    rec(n, m, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Sparse element of the weight space `V_{n,m}` with coefficients in
/// `Z[q^±1, s^±1]`.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightVector {
    n: usize,
    m: u64,
    entries: BTreeMap<Composition, TwoVarLaurent>,
}

impl WeightVector {
    pub fn zero(n: usize, m: u64) -> Self {
        Self {
            n,
            m,
            entries: BTreeMap::new(),
        }
    }

    /// The basis vector `v_e`; its space is read off from `e`.
    pub fn basis(e: Composition) -> Self {
        let mut v = Self::zero(e.len(), e.weight());
        v.entries.insert(e, TwoVarLaurent::one(Vars::QS));
        v
    }

    pub fn space(&self) -> (usize, u64) {
        (self.n, self.m)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Entries in lexicographic basis order.
    pub fn entries(&self) -> impl Iterator<Item = (&Composition, &TwoVarLaurent)> {
        self.entries.iter()
    }

    pub fn coeff(&self, e: &Composition) -> TwoVarLaurent {
        self.entries
            .get(e)
            .cloned()
            .unwrap_or_else(|| TwoVarLaurent::zero(Vars::QS))
    }

    /// Adds `coef * v_e`, rejecting keys outside `E_{n,m}`.
    pub fn add_term(&mut self, e: Composition, coef: &TwoVarLaurent) -> Result<()> {
        if !e.is_in(self.n, self.m) {
            return Err(Error::WrongAmbientSpace(e.to_string()));
        }
        self.add_term_unchecked(e, coef);
        Ok(())
    }

    pub(crate) fn add_term_unchecked(&mut self, e: Composition, coef: &TwoVarLaurent) {
        debug_assert!(e.is_in(self.n, self.m));
        if coef.is_zero() {
            return;
        }
        match self.entries.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &TwoVarLaurent) -> Self {
        let mut out = Self::zero(self.n, self.m);
        for (e, c) in &self.entries {
            out.add_term_unchecked(e.clone(), &(c * k));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.space() != other.space() {
            return Err(Error::StrandMismatch {
                braid: other.n,
                space: self.n,
            });
        }
        let mut out = self.clone();
        for (e, c) in &other.entries {
            out.add_term_unchecked(e.clone(), c);
        }
        Ok(out)
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightVector[n={}, m={}]{{", self.n, self.m)?;
        for (i, (e, c)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}: {c}")?;
        }
        f.write_str("}")
    }
}
