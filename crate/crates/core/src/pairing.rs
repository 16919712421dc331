//! The unified two-variable pairing and its specialisations to coloured
//! Jones and coloured Alexander (ADO) invariants.
//!
//! For `beta` in `B_n` and colour `N`, the pairing is evaluated on the
//! weight space `V_{2n-1,(n-1)(N-1)}`. Each symmetric index
//! `(i_1, ..., i_{n-1})` in `{0..N-1}^{n-1}` labels the basis vector
//! `v_0 ⊗ v_{i_1} ⊗ ... ⊗ v_{i_{n-1}} ⊗ v_{N-1-i_{n-1}} ⊗ ... ⊗ v_{N-1-i_1}`;
//! only the diagonal coefficient of `(beta ∪ 1_{n-1})` on that vector
//! contributes, weighted by `d^{sum i_k}`.

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::rings::{yfact, CycLaurent, CycScalar, OneVarLaurent, TwoVarLaurent, Variable, Vars};
use crate::special::{specialize, SpecTarget};
use crate::verma::{apply_braid, Composition, WeightVector};

/// A tuple `(i_1, ..., i_{n-1})` with entries in `0..N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetricIndex {
    colour: u32,
    tuple: Vec<u32>,
}

impl SymmetricIndex {
    pub fn new(colour: u32, tuple: Vec<u32>) -> Result<Self> {
        if colour == 0 || tuple.iter().any(|&i| i >= colour) {
            return Err(Error::InvalidArgument(format!(
                "symmetric index {tuple:?} out of range for colour {colour}"
            )));
        }
        Ok(Self { colour, tuple })
    }

    pub fn tuple(&self) -> &[u32] {
        &self.tuple
    }

    pub fn colour(&self) -> u32 {
        self.colour
    }

    /// `(0, i_1, ..., i_{n-1}, N-1-i_{n-1}, ..., N-1-i_1)`.
    pub fn composition(&self) -> Composition {
        let mut parts = Vec::with_capacity(2 * self.tuple.len() + 1);
        parts.push(0);
        parts.extend_from_slice(&self.tuple);
        parts.extend(self.tuple.iter().rev().map(|&i| self.colour - 1 - i));
        Composition::new(parts)
    }

    /// `sum_k i_k`, the exponent of `d` in the coevaluation weight.
    pub fn degree(&self) -> u32 {
        self.tuple.iter().sum()
    }
}

/// All `N^{n-1}` symmetric indices, in lexicographic order.
pub fn symmetric_compositions(n: usize, colour: u32) -> Vec<SymmetricIndex> {
    assert!(n >= 1 && colour >= 1, "need n >= 1 and N >= 1");
    let mut out = vec![Vec::new()];
    for _ in 1..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (0..colour).map(move |i| {
                    let mut t = prefix.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|tuple| SymmetricIndex { colour, tuple })
        .collect()
}

/// Whether `e` lies in the support of the dual class: `e_0 = 0` and the
/// parts pair up as `e_k + e_{2n-1-k} = N-1`.
pub fn pairing_support(e: &Composition, n: usize, colour: u32) -> Result<bool> {
    let m = (n as u64 - 1) * (colour as u64 - 1);
    if !e.is_in(2 * n - 1, m) {
        return Err(Error::WrongAmbientSpace(e.to_string()));
    }
    let p = e.parts();
    let len = p.len();
    Ok(p[0] == 0
        && p.iter().all(|&x| x < colour)
        && (1..n).all(|k| p[k] + p[len - k] == colour - 1))
}

/// The pairing value in `Z[x^±1, d^±1]` together with the braid data
/// needed for framing corrections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnifiedPairing {
    pub value: TwoVarLaurent,
    pub colour: u32,
    pub strands: usize,
    pub writhe: i64,
    /// Number of components of the closure.
    pub components: usize,
}

/// `s^{2a} q^{-2b} -> x^a d^b`, failing on any odd exponent.
fn to_xd(p: &TwoVarLaurent) -> Result<TwoVarLaurent> {
    let mut out = TwoVarLaurent::zero(Vars::XD);
    for (&(qe, se), c) in p.terms() {
        if qe % 2 != 0 || se % 2 != 0 {
            return Err(Error::NotInImageOfGamma(format!("{c}*q^{qe}*s^{se}")));
        }
        out.add_term((se / 2, -qe / 2), c.clone());
    }
    Ok(out)
}

fn diagonal_coefficient(extended: &BraidWord, idx: &SymmetricIndex) -> Result<TwoVarLaurent> {
    let e = idx.composition();
    let image = apply_braid(extended, &WeightVector::basis(e.clone()))?;
    let c = to_xd(&image.coeff(&e))?;
    Ok(c.shift((0, idx.degree() as i32)))
}

/// Computes the unified pairing by the diagonal route. Per-index terms are
/// computed in parallel on the current rayon pool and summed in index order.
pub fn unified_pairing(beta: &BraidWord, colour: u32) -> Result<UnifiedPairing> {
    if colour == 0 {
        return Err(Error::InvalidArgument("colour must be at least 1".into()));
    }
    let n = beta.strands();
    let value = if colour == 1 {
        TwoVarLaurent::one(Vars::XD)
    } else {
        let extended = beta.extend(n - 1);
        let terms = symmetric_compositions(n, colour)
            .par_iter()
            .map(|idx| diagonal_coefficient(&extended, idx))
            .collect::<Result<Vec<_>>>()?;
        terms
            .iter()
            .fold(TwoVarLaurent::zero(Vars::XD), |acc, t| acc + t.clone())
    };
    Ok(UnifiedPairing {
        value,
        colour,
        strands: n,
        writhe: beta.writhe(),
        components: beta.closure_cycle_count(),
    })
}

/// Alternative route: build the whole coevaluation vector
/// `sum_i q^{-2|i|} v_{sym(i)}`, act once, then sum the coefficients on the
/// support of the dual class.
pub fn unified_pairing_coevaluation(beta: &BraidWord, colour: u32) -> Result<TwoVarLaurent> {
    if colour < 2 {
        return Ok(TwoVarLaurent::one(Vars::XD));
    }
    let n = beta.strands();
    let m = (n as u64 - 1) * (colour as u64 - 1);
    let mut coev = WeightVector::zero(2 * n - 1, m);
    for idx in symmetric_compositions(n, colour) {
        let w = TwoVarLaurent::monomial(Vars::QS, BigInt::one(), (-2 * idx.degree() as i32, 0));
        coev.add_term(idx.composition(), &w)?;
    }
    let image = apply_braid(&beta.extend(n - 1), &coev)?;
    let mut total = TwoVarLaurent::zero(Vars::QS);
    for (e, c) in image.entries() {
        if pairing_support(e, n, colour)? {
            total += c;
        }
    }
    to_xd(&total)
}

impl UnifiedPairing {
    pub fn is_knot(&self) -> bool {
        self.components == 1
    }

    fn lambda(&self) -> i64 {
        self.colour as i64 - 1
    }

    /// `J_N = q^{-(N-1)w} q^{(N-1)(n-1)} psi_{q,N-1}(I_N)`.
    pub fn coloured_jones(&self) -> OneVarLaurent {
        let spec = specialize(&self.value, SpecTarget::PsiGeneric(self.colour))
            .expect("pairing lives in Z[x,d]")
            .into_laurent()
            .expect("generic target");
        let framing = -self.lambda() * self.writhe + self.lambda() * (self.strands as i64 - 1);
        let framing = i32::try_from(framing).expect("framing exponent overflow");
        OneVarLaurent::from_terms("q", spec.terms().map(|(&(qe, _), c)| (qe, c.clone())))
            .shift(framing)
    }

    fn ado_framing(&self) -> i32 {
        let e = self.lambda() * self.writhe - self.lambda() * (self.strands as i64 - 1);
        i32::try_from(e).expect("framing exponent overflow")
    }

    /// `Phi_N = s^{(N-1)w} s^{(1-N)(n-1)} I_N|_{x -> s^2, d -> xi_N^-2}`.
    pub fn ado(&self) -> Result<CycLaurent> {
        if self.colour < 2 {
            return Err(Error::InvalidArgument(
                "ADO invariant needs colour N >= 2".into(),
            ));
        }
        let spec = specialize(&self.value, SpecTarget::PsiRoot(self.colour))?
            .into_cyc()
            .expect("root target");
        Ok(spec.shift(self.ado_framing()))
    }

    /// Same invariant through the `Z ⊕ Z_N` local system: `d`-exponents are
    /// reduced modulo `N` before substituting `d -> xi_N^-2`.
    pub fn ado_zn_route(&self) -> Result<CycLaurent> {
        if self.colour < 2 {
            return Err(Error::InvalidArgument(
                "ADO invariant needs colour N >= 2".into(),
            ));
        }
        let n = self.colour as i32;
        let reduced = self
            .value
            .map_monomials(Vars::XD, |(a, b)| (a, b.rem_euclid(n)));
        let mut out = CycLaurent::zero(self.colour);
        for (&(a, b), c) in reduced.terms() {
            let coef = &CycScalar::xi_pow(self.colour, -2 * b as i64)
                * &CycScalar::from_int(self.colour, c.clone());
            out.add_term(2 * a + self.ado_framing(), coef);
        }
        Ok(out)
    }
}

/// Coloured Jones polynomial `J_N` in `q`, normalized to 1 on the unknot.
/// Fails with `NotAKnot` unless `force` is set.
pub fn coloured_jones(beta: &BraidWord, colour: u32, force: bool) -> Result<OneVarLaurent> {
    if colour == 0 {
        return Err(Error::InvalidArgument("colour must be at least 1".into()));
    }
    if !force && !beta.is_knot() {
        return Err(Error::NotAKnot {
            components: beta.closure_cycle_count(),
        });
    }
    Ok(unified_pairing(beta, colour)?.coloured_jones())
}

/// Coloured Alexander (ADO) invariant `Phi_N`, a Laurent polynomial in
/// `s = xi_N^lambda` over `Z[xi_N]`.
pub fn ado(beta: &BraidWord, colour: u32, force: bool) -> Result<CycLaurent> {
    if colour < 2 {
        return Err(Error::InvalidArgument(
            "ADO invariant needs colour N >= 2".into(),
        ));
    }
    if !force && !beta.is_knot() {
        return Err(Error::NotAKnot {
            components: beta.closure_cycle_count(),
        });
    }
    unified_pairing(beta, colour)?.ado()
}

pub fn ado_zn_route(beta: &BraidWord, colour: u32, force: bool) -> Result<CycLaurent> {
    if colour < 2 {
        return Err(Error::InvalidArgument(
            "ADO invariant needs colour N >= 2".into(),
        ));
    }
    if !force && !beta.is_knot() {
        return Err(Error::NotAKnot {
            components: beta.closure_cycle_count(),
        });
    }
    unified_pairing(beta, colour)?.ado_zn_route()
}

/// Both invariants derived from a single pairing computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotInvariants {
    pub pairing: UnifiedPairing,
    pub jones: OneVarLaurent,
    pub ado: Option<CycLaurent>,
}

impl KnotInvariants {
    pub fn compute(beta: &BraidWord, colour: u32, force: bool) -> Result<Self> {
        if !force && !beta.is_knot() {
            return Err(Error::NotAKnot {
                components: beta.closure_cycle_count(),
            });
        }
        let pairing = unified_pairing(beta, colour)?;
        let jones = pairing.coloured_jones();
        let ado = if colour >= 2 {
            Some(pairing.ado()?)
        } else {
            None
        };
        Ok(Self {
            pairing,
            jones,
            ado,
        })
    }
}

/// Change-of-basis coefficient between multiarcs and code sequences:
/// `prod_i (e_i)_d!`.
pub fn multiarc_to_code_coeff(e: &Composition) -> TwoVarLaurent {
    e.parts()
        .iter()
        .fold(TwoVarLaurent::one(Vars::XD), |acc, &p| {
            &acc * &yfact(p, Variable::D)
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    fn xd(t: &[((i32, i32), i64)]) -> TwoVarLaurent {
        TwoVarLaurent::from_terms(Vars::XD, t.iter().copied())
    }

    #[test]
    fn symmetric_index_examples() {
        let s = symmetric_compositions(2, 2);
        assert_eq!(
            s.iter().map(|i| i.tuple().to_vec()).collect::<Vec<_>>(),
            vec![vec![0], vec![1]]
        );
        let s = symmetric_compositions(3, 2);
        assert_eq!(
            s.iter().map(|i| i.tuple().to_vec()).collect::<Vec<_>>(),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
        let s = symmetric_compositions(2, 3);
        assert_eq!(s.len(), 3);
        assert_eq!(s[1].composition(), Composition::new(vec![0, 1, 1]));
        let one = symmetric_compositions(1, 4);
        assert_eq!(one.len(), 1);
        assert!(one[0].tuple().is_empty());
        assert_eq!(one[0].composition(), Composition::new(vec![0]));
    }

    #[test]
    fn support_examples() {
        let c = |v: &[u32]| Composition::new(v.to_vec());
        assert!(pairing_support(&c(&[0, 1, 0]), 2, 2).unwrap());
        assert!(!pairing_support(&c(&[1, 0, 0]), 2, 2).unwrap());
        assert!(!pairing_support(&c(&[0, 0, 1, 1, 0]), 3, 2).unwrap());
        assert!(pairing_support(&c(&[0, 0, 1]), 2, 2).is_ok());
        assert!(pairing_support(&c(&[0, 1]), 2, 2).is_err());
    }

    #[test]
    fn support_matches_symmetric_set() {
        for n in 1..=3usize {
            for colour in 2..=3u32 {
                let m = ((n - 1) as u32) * (colour - 1);
                let sym: Vec<Composition> = symmetric_compositions(n, colour)
                    .iter()
                    .map(SymmetricIndex::composition)
                    .collect();
                for e in crate::verma::enumerate_basis(2 * n - 1, m) {
                    assert_eq!(
                        pairing_support(&e, n, colour).unwrap(),
                        sym.contains(&e),
                        "{e}"
                    );
                }
            }
        }
    }

    #[test]
    fn trefoil_pairing() {
        let p = unified_pairing(&b(2, &[1, 1, 1]), 2).unwrap();
        assert_eq!(p.value, xd(&[((0, 0), 1), ((-1, 1), 1), ((-2, 1), -1)]));
        assert_eq!(p.coloured_jones().to_string(), "q^-2 + q^-6 - q^-8");
        assert_eq!(p.ado().unwrap().to_string(), "s^2 - 1 + s^-2");
        assert_eq!(p.ado_zn_route().unwrap(), p.ado().unwrap());
    }

    #[test]
    fn identity_braids() {
        assert!(unified_pairing(&BraidWord::identity(1), 5)
            .unwrap()
            .value
            .is_one());
        let p = unified_pairing(&BraidWord::identity(2), 2).unwrap();
        assert_eq!(p.value, xd(&[((0, 0), 1), ((0, 1), 1)]));
    }

    #[test]
    fn unknot_normalization() {
        for colour in 1..=4 {
            assert!(coloured_jones(&BraidWord::identity(1), colour, false)
                .unwrap()
                .is_one());
            for beta in [b(2, &[1]), b(2, &[-1]), b(3, &[1, 2]), b(3, &[-1, 2])] {
                assert!(
                    coloured_jones(&beta, colour, false).unwrap().is_one(),
                    "{beta} N={colour}"
                );
                if colour >= 2 {
                    assert!(
                        ado(&beta, colour, false).unwrap().is_one(),
                        "{beta} N={colour}"
                    );
                }
            }
        }
    }

    #[test]
    fn non_knots_are_rejected_unless_forced() {
        let hopf = b(2, &[1, 1]);
        assert!(matches!(
            coloured_jones(&hopf, 2, false),
            Err(Error::NotAKnot { .. })
        ));
        assert!(matches!(ado(&hopf, 2, false), Err(Error::NotAKnot { .. })));
        assert!(coloured_jones(&hopf, 2, true).is_ok());
        assert!(ado(&BraidWord::identity(1), 1, false).is_err());
    }

    #[test]
    fn coevaluation_route_agrees() {
        for (beta, colour) in [
            (b(2, &[1, 1, 1]), 2),
            (b(2, &[1, -1, 1]), 3),
            (b(3, &[1, -2, 1, -2]), 2),
            (b(3, &[1, 2, 2, -1]), 2),
        ] {
            assert_eq!(
                unified_pairing_coevaluation(&beta, colour).unwrap(),
                unified_pairing(&beta, colour).unwrap().value,
                "{beta} N={colour}"
            );
        }
    }

    #[test]
    fn multiarc_examples() {
        let c = |v: &[u32]| Composition::new(v.to_vec());
        assert!(multiarc_to_code_coeff(&c(&[0, 1, 0])).is_one());
        assert_eq!(
            multiarc_to_code_coeff(&c(&[2, 0])),
            xd(&[((0, 0), 1), ((0, 1), 1)])
        );
        assert_eq!(
            multiarc_to_code_coeff(&c(&[2, 2])),
            xd(&[((0, 0), 1), ((0, 1), 2), ((0, 2), 1)])
        );
    }
}
