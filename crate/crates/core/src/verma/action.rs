use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use super::rmatrix::rmatrix_entry;
use super::{enumerate_basis, Composition, WeightVector};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::rings::{TwoVarLaurent, Vars};

/// Matrix of `R^{±1}` restricted to the two-factor block
/// `span{v_a ⊗ v_b : a + b = c}`. `columns[a]` lists the nonzero
/// `(a', coef)` with `R^{±1}(v_a ⊗ v_{c-a}) = sum coef v_{a'} ⊗ v_{c-a'}`.
struct Block {
    columns: Vec<Vec<(u32, TwoVarLaurent)>>,
}

fn unit_inverse(p: &TwoVarLaurent) -> TwoVarLaurent {
    let (c, (a, b)) = p
        .as_monomial()
        .filter(|(c, _)| c.abs() == BigInt::from(1))
        .unwrap_or_else(|| panic!("R-matrix diagonal entry {p} is not a unit monomial"));
    TwoVarLaurent::monomial(Vars::QS, c.clone(), (-a, -b))
}

fn forward_block(c: u32) -> Block {
    let columns = (0..=c)
        .map(|a| {
            (0..=a)
                .map(|n| {
                    let coef = rmatrix_entry(a, c - a, n).expect("n <= i");
                    (c - a + n, coef)
                })
                .filter(|(_, p)| !p.is_zero())
                .collect()
        })
        .collect();
    Block { columns }
}

/// `R = flip ∘ U` with `U(v_k ⊗ v_{c-k}) = sum_n r(k, c-k, n) v_{k-n} ⊗ v_{c-k+n}`.
/// `U` is upper triangular in the first index with unit-monomial diagonal,
/// so `U^{-1}` comes from back substitution and `R^{-1} = U^{-1} ∘ flip`.
fn inverse_block(c: u32) -> Block {
    let dim = c as usize + 1;
    let zero = TwoVarLaurent::zero(Vars::QS);
    let mut u = vec![vec![zero.clone(); dim]; dim];
    for k in 0..dim {
        for n in 0..=k {
            u[k - n][k] = rmatrix_entry(k as u32, c - k as u32, n as u32).expect("n <= i");
        }
    }
    let diag_inv: Vec<TwoVarLaurent> = (0..dim).map(|k| unit_inverse(&u[k][k])).collect();
    let mut x = vec![vec![zero.clone(); dim]; dim];
    for k in 0..dim {
        x[k][k] = diag_inv[k].clone();
        for r in (0..k).rev() {
            let mut acc = zero.clone();
            for t in r + 1..=k {
                if !u[r][t].is_zero() && !x[t][k].is_zero() {
                    acc += &(&u[r][t] * &x[t][k]);
                }
            }
            x[r][k] = -(&acc * &diag_inv[r]);
        }
    }
    // R^{-1}(v_a ⊗ v_{c-a}) = U^{-1}(v_{c-a} ⊗ v_a) = sum_r x[r][c-a] v_r ⊗ v_{c-r}
    let columns = (0..dim)
        .map(|a| {
            let col = dim - 1 - a;
            (0..dim)
                .filter(|&r| !x[r][col].is_zero())
                .map(|r| (r as u32, x[r][col].clone()))
                .collect()
        })
        .collect();
    Block { columns }
}

fn block(c: u32, sign: i32) -> Arc<Block> {
    type Cache = RwLock<HashMap<(u32, bool), Arc<Block>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (c, sign > 0);
    if let Some(b) = cache.read().unwrap().get(&key) {
        return b.clone();
    }
    let built = Arc::new(if sign > 0 {
        forward_block(c)
    } else {
        inverse_block(c)
    });
    cache.write().unwrap().entry(key).or_insert(built).clone()
}

/// Applies `sigma_i^{sign}` (acting by `R^{±1}` on tensor factors `i, i+1`).
pub fn apply_generator(v: &WeightVector, i: usize, sign: i32) -> Result<WeightVector> {
    let (n, m) = v.space();
    if i == 0 || i >= n {
        return Err(Error::GeneratorOutOfRange {
            index: i as i32 * sign.signum(),
            strands: n,
        });
    }
    if sign.abs() != 1 {
        return Err(Error::InvalidArgument(format!(
            "generator sign must be ±1, got {sign}"
        )));
    }
    let mut out = WeightVector::zero(n, m);
    for (e, coef) in v.entries() {
        let (a, b) = (e.parts()[i - 1], e.parts()[i]);
        let c = a + b;
        let blk = block(c, sign);
        for (a2, entry) in &blk.columns[a as usize] {
            let mut key = e.clone();
            key.parts_mut()[i - 1] = *a2;
            key.parts_mut()[i] = c - a2;
            out.add_term_unchecked(key, &(coef * entry));
        }
    }
    Ok(out)
}

/// Image of `v` under the braid; letters act left to right.
pub fn apply_braid(beta: &BraidWord, v: &WeightVector) -> Result<WeightVector> {
    let (n, _) = v.space();
    if beta.strands() != n {
        return Err(Error::StrandMismatch {
            braid: beta.strands(),
            space: n,
        });
    }
    let mut cur = v.clone();
    for &k in beta.letters() {
        cur = apply_generator(&cur, k.unsigned_abs() as usize, k.signum())?;
    }
    Ok(cur)
}

/// Dense matrix of a braid on `V_{n,m}` in the canonical basis order.
/// `entries[row][col]` is the coefficient of `basis[row]` in the image of
/// `basis[col]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationMatrix {
    pub braid: BraidWord,
    pub weight: u32,
    pub basis: Vec<Composition>,
    pub entries: Vec<Vec<TwoVarLaurent>>,
}

#[derive(Serialize)]
struct MatrixDump<'a> {
    strands: usize,
    weight: u32,
    braid: &'a [i32],
    basis: Vec<&'a [u32]>,
    rows: Vec<Vec<String>>,
}

impl RepresentationMatrix {
    /// JSON debug dump; entries use the canonical polynomial rendering.
    pub fn to_json(&self) -> String {
        let dump = MatrixDump {
            strands: self.braid.strands(),
            weight: self.weight,
            braid: self.braid.letters(),
            basis: self.basis.iter().map(Composition::parts).collect(),
            rows: self
                .entries
                .iter()
                .map(|row| row.iter().map(ToString::to_string).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&dump).expect("matrix dump serializes")
    }
}

pub fn representation_matrix(beta: &BraidWord, weight: u32) -> Result<RepresentationMatrix> {
    let basis = enumerate_basis(beta.strands(), weight);
    let dim = basis.len();
    let mut entries = vec![vec![TwoVarLaurent::zero(Vars::QS); dim]; dim];
    let index: HashMap<&Composition, usize> =
        basis.iter().enumerate().map(|(i, e)| (e, i)).collect();
    for (col, e) in basis.iter().enumerate() {
        let image = apply_braid(beta, &WeightVector::basis(e.clone()))?;
        for (key, coef) in image.entries() {
            entries[index[key]][col] = coef.clone();
        }
    }
    Ok(RepresentationMatrix {
        braid: beta.clone(),
        weight,
        basis,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    fn qs(t: &[((i32, i32), i64)]) -> TwoVarLaurent {
        TwoVarLaurent::from_terms(Vars::QS, t.iter().copied())
    }

    #[test]
    fn generator_examples() {
        let v = WeightVector::basis(c(&[0, 0, 1]));
        assert_eq!(apply_generator(&v, 1, 1).unwrap(), v);

        let w = apply_generator(&WeightVector::basis(c(&[0, 1, 0])), 1, 1).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w.coeff(&c(&[1, 0, 0])), qs(&[((0, -1), 1)]));

        assert!(apply_generator(&v, 0, 1).is_err());
        assert!(apply_generator(&v, 3, 1).is_err());
        assert!(apply_generator(&v, 1, 2).is_err());
    }

    #[test]
    fn trefoil_block_cube() {
        // M = [[0, s^-1], [s^-1, 1 - s^-2]] on (v0⊗v1, v1⊗v0); (M^3)_{00} = s^-2 - s^-4
        let beta = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let image = apply_braid(&beta, &WeightVector::basis(c(&[0, 1]))).unwrap();
        assert_eq!(image.coeff(&c(&[0, 1])), qs(&[((0, -2), 1), ((0, -4), -1)]));
    }

    #[test]
    fn inverse_blocks_invert() {
        for m in 0..=4u32 {
            for e in enumerate_basis(3, m) {
                let v = WeightVector::basis(e);
                for i in 1..=2 {
                    for sign in [1, -1] {
                        let there = apply_generator(&v, i, sign).unwrap();
                        assert_eq!(apply_generator(&there, i, -sign).unwrap(), v);
                    }
                }
            }
        }
    }

    #[test]
    fn strand_mismatch() {
        let beta = BraidWord::new(3, vec![1]).unwrap();
        let v = WeightVector::basis(c(&[0, 1]));
        assert!(matches!(
            apply_braid(&beta, &v),
            Err(Error::StrandMismatch { .. })
        ));
    }

    #[test]
    fn matrix_dump() {
        let beta = BraidWord::new(2, vec![1]).unwrap();
        let mat = representation_matrix(&beta, 1).unwrap();
        assert_eq!(mat.basis, vec![c(&[0, 1]), c(&[1, 0])]);
        assert!(mat.entries[0][0].is_zero());
        assert_eq!(mat.entries[1][0], qs(&[((0, -1), 1)]));
        let json: serde_json::Value = serde_json::from_str(&mat.to_json()).unwrap();
        assert_eq!(json["rows"][1][1], "-s^-2 + 1");
        assert_eq!(json["basis"][0], serde_json::json!([0, 1]));
    }
}
