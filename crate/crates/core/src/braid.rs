//! Braid words and their elementary combinatorics.

use std::fmt;

use crate::error::{Error, Result};

/// A word in the braid group `B_n`: letter `k` stands for `sigma_|k|` raised
/// to the sign of `k`. Words are kept exactly as given, with no free
/// reduction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

/// The two Markov moves, used to generate braids with the same closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MarkovMove {
    /// `beta -> alpha beta alpha^-1`
    Conjugate(BraidWord),
    /// `beta -> beta sigma_n^{±1}` in `B_{n+1}`; the payload is the sign.
    Stabilize(i32),
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidArgument(
                "a braid needs at least one strand".into(),
            ));
        }
        for &k in &letters {
            if k == 0 || k.unsigned_abs() as usize >= strands {
                return Err(Error::GeneratorOutOfRange { index: k, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    /// The identity braid on `strands` strands.
    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1, "a braid needs at least one strand");
        Self {
            strands,
            letters: Vec::new(),
        }
    }

    /// Parses whitespace- or comma-separated signed generator indices.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let letters = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad braid letter '{t}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of the letter signs.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&k| k.signum() as i64).sum()
    }

    /// Same word viewed in `B_{n+k}`.
    pub fn extend(&self, k: usize) -> Self {
        Self {
            strands: self.strands + k,
            letters: self.letters.clone(),
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|k| -k).collect(),
        }
    }

    /// Concatenation `self · other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                braid: other.strands,
                space: self.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            strands: self.strands,
            letters,
        })
    }

    /// Underlying permutation: `perm[p]` is the bottom position of the
    /// strand starting at top position `p`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect(); // position -> strand
        for &k in &self.letters {
            let i = k.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Number of components of the closure.
    pub fn closure_cycle_count(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = perm[p];
            }
        }
        cycles
    }

    pub fn is_knot(&self) -> bool {
        self.closure_cycle_count() == 1
    }

    pub fn markov_move(&self, mv: &MarkovMove) -> Result<Self> {
        match mv {
            MarkovMove::Conjugate(alpha) => alpha.compose(self)?.compose(&alpha.inverse()),
            MarkovMove::Stabilize(sign) => {
                if sign.abs() != 1 {
                    return Err(Error::InvalidArgument(format!(
                        "stabilization sign must be ±1, got {sign}"
                    )));
                }
                let mut out = self.extend(1);
                out.letters.push(sign * self.strands as i32);
                Ok(out)
            }
        }
    }
}

impl fmt::Display for BraidWord {
    /// Canonical text: letters separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}
