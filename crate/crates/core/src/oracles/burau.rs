use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::rings::OneVarLaurent;

type Matrix = Vec<Vec<OneVarLaurent>>;

fn t_pow(e: i32) -> OneVarLaurent {
    OneVarLaurent::monomial("t", 1.into(), e)
}

fn identity(r: usize) -> Matrix {
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    if i == j {
                        OneVarLaurent::one("t")
                    } else {
                        OneVarLaurent::zero("t")
                    }
                })
                .collect()
        })
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let r = a.len();
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let mut acc = OneVarLaurent::zero("t");
                    for (k, bk) in b.iter().enumerate() {
                        if !a[i][k].is_zero() && !bk[j].is_zero() {
                            acc += &(&a[i][k] * &bk[j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Reduced Burau matrix of `sigma_i^{sign}` in `B_n`, of size `n-1`. Row
/// `i-1` reads `(t, -t, 1)` around the diagonal; the inverse row reads
/// `(1, -t^-1, t^-1)`.
pub fn reduced_burau_generator(n: usize, i: usize, sign: i32) -> Vec<Vec<OneVarLaurent>> {
    assert!(i >= 1 && i < n, "generator index out of range");
    let r = n - 1;
    let mut m = identity(r);
    let row = i - 1;
    let (left, diag, right) = if sign > 0 {
        (t_pow(1), -t_pow(1), OneVarLaurent::one("t"))
    } else {
        (OneVarLaurent::one("t"), -t_pow(-1), t_pow(-1))
    };
    m[row][row] = diag;
    if row >= 1 {
        m[row][row - 1] = left;
    }
    if row + 1 < r {
        m[row][row + 1] = right;
    }
    m
}

fn determinant(m: &Matrix) -> OneVarLaurent {
    match m.len() {
        0 => OneVarLaurent::one("t"),
        1 => m[0][0].clone(),
        r => {
            let mut acc = OneVarLaurent::zero("t");
            for col in 0..r {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Matrix = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][col] * &determinant(&minor);
                acc = if col % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
    }
}

pub(crate) fn burau_matrix(beta: &BraidWord) -> Matrix {
    let n = beta.strands();
    beta.letters().iter().fold(identity(n - 1), |acc, &k| {
        mat_mul(
            &acc,
            &reduced_burau_generator(n, k.unsigned_abs() as usize, k.signum()),
        )
    })
}

/// Alexander polynomial of the closure: `det(I - B(beta)) / (1 + t + ... + t^{n-1})`,
/// with `B` the reduced Burau representation. Determined up to `±t^k`.
pub fn burau_alexander(beta: &BraidWord) -> Result<OneVarLaurent> {
    if !beta.is_knot() {
        return Err(Error::NotAKnot {
            components: beta.closure_cycle_count(),
        });
    }
    let n = beta.strands();
    let b = burau_matrix(beta);
    let id = identity(n - 1);
    let diff: Matrix = id
        .iter()
        .zip(&b)
        .map(|(ri, rb)| ri.iter().zip(rb).map(|(x, y)| x - y).collect())
        .collect();
    let det = determinant(&diff);
    let denom = OneVarLaurent::from_terms("t", (0..n as i32).map(|e| (e, 1)));
    det.div_exact(&denom)
}
