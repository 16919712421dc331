use num_bigint::BigInt;
use num_traits::One;

use super::{Composition, WeightVector};
use crate::error::{Error, Result};
use crate::rings::{qbinom, TwoVarLaurent, Vars};

fn qs_monomial(q: i64, s: i64) -> TwoVarLaurent {
    let cv = |e: i64| i32::try_from(e).expect("Laurent exponent overflow");
    TwoVarLaurent::monomial(Vars::QS, BigInt::one(), (cv(q), cv(s)))
}

/// `prod_{k=0}^{n-1} (s q^{-k-j} - s^{-1} q^{k+j})`
fn falling_product(j: i64, n: i64) -> TwoVarLaurent {
    (0..n).fold(TwoVarLaurent::one(Vars::QS), |acc, k| {
        let factor = &qs_monomial(-k - j, 1) - &qs_monomial(k + j, -1);
        &acc * &factor
    })
}

/// Coefficient of `v_{j+n} ⊗ v_{i-n}` in `R(v_i ⊗ v_j)`:
///
/// `s^{-(i+j)} q^{2(i-n)(j+n)} q^{n(n-1)/2} [n+j choose j]_q prod_{k<n} (s q^{-k-j} - s^{-1} q^{k+j})`.
pub fn rmatrix_entry(i: u32, j: u32, n: u32) -> Result<TwoVarLaurent> {
    if n > i {
        return Err(Error::InvalidArgument(format!(
            "R-matrix index n={n} exceeds i={i}"
        )));
    }
    let (i, j, n) = (i as i64, j as i64, n as i64);
    let unit = qs_monomial(2 * (i - n) * (j + n) + n * (n - 1) / 2, -(i + j));
    let binom = qbinom(n + j, j)?;
    Ok(&(&unit * &binom) * &falling_product(j, n))
}

/// `E^n v_i = v_{i-n}`, or zero when `n > i`.
pub fn verma_e_power(n: u32, i: u32) -> Option<u32> {
    i.checked_sub(n)
}

/// `F^{(n)} v_i = [n+i choose i]_q prod_{k<n} (s q^{-k-i} - s^{-1} q^{k+i}) v_{i+n}`.
pub fn verma_divided_f(n: u32, i: u32) -> (TwoVarLaurent, u32) {
    let binom = qbinom(n as i64 + i as i64, i as i64).expect("valid binomial");
    (&binom * &falling_product(i as i64, n as i64), i + n)
}

/// `R(v_i ⊗ v_j)` built operator by operator from the Verma action: the sum
/// `sum_n q^{n(n-1)/2} E^n ⊗ F^{(n)}` truncated at `cutoff`, followed by the
/// twisted flip `C(v_a ⊗ v_b) = s^{-(a+b)} q^{2ab} v_b ⊗ v_a`.
pub fn rmatrix_series_oracle(i: u32, j: u32, cutoff: u32) -> WeightVector {
    let mut out = WeightVector::zero(2, i as u64 + j as u64);
    for n in 0..=cutoff {
        let Some(a) = verma_e_power(n, i) else {
            break;
        };
        let (fcoef, b) = verma_divided_f(n, j);
        let series = &qs_monomial((n as i64) * (n as i64 - 1) / 2, 0) * &fcoef;
        let twist = qs_monomial(2 * a as i64 * b as i64, -(a as i64 + b as i64));
        out.add_term_unchecked(Composition::new(vec![b, a]), &(&series * &twist));
    }
    out
}
