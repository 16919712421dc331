//! Specialisations of coefficient rings.
//!
//! ```text
//!            gamma
//! Z[x,d] ----------> Z[q,s]
//!     \                 |  eta (s -> q^(N-1), or q -> xi_N with s symbolic)
//!  psi \                v
//!       `-------> Z[q]  or  Z[xi_N][s]
//! ```
//!
//! `gamma: x -> s^2, d -> q^-2`. In the root-of-unity case the generic
//! weight `xi_N^lambda` stays symbolic as `s`.

use crate::error::{Error, Result};
use crate::rings::laurent::{add_exp, mul_exp};
use crate::rings::{qbinom, CycLaurent, CycScalar, TwoVarLaurent, Vars};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpecTarget {
    /// `x -> s^2, d -> q^-2` into `Z[q,s]`.
    Gamma,
    /// `x -> q^{2(N-1)}, d -> q^-2` into `Z[q]`.
    PsiGeneric(u32),
    /// `x -> s^2, d -> xi_N^-2` into `Z[xi_N][s]`.
    PsiRoot(u32),
    /// Reduce `d`-exponents modulo `N`, then `x -> s^2, d -> xi_N^-2`.
    GammaN(u32),
    /// `s -> q^{N-1}` on `Z[q,s]`.
    EtaGeneric(u32),
    /// `q -> xi_N`, `s` kept symbolic, into `Z[xi_N][s]`.
    EtaRoot(u32),
}

impl SpecTarget {
    pub fn source(self) -> Vars {
        match self {
            SpecTarget::Gamma
            | SpecTarget::PsiGeneric(_)
            | SpecTarget::PsiRoot(_)
            | SpecTarget::GammaN(_) => Vars::XD,
            SpecTarget::EtaGeneric(_) | SpecTarget::EtaRoot(_) => Vars::QS,
        }
    }

    fn colour(self) -> Option<u32> {
        match self {
            SpecTarget::Gamma => None,
            SpecTarget::PsiGeneric(n)
            | SpecTarget::PsiRoot(n)
            | SpecTarget::GammaN(n)
            | SpecTarget::EtaGeneric(n)
            | SpecTarget::EtaRoot(n) => Some(n),
        }
    }
}

/// Result of a specialisation: a Laurent polynomial in `(q, s)` (pure in `q`
/// for the generic targets) or a Laurent polynomial over `Z[xi_N]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specialized {
    Laurent(TwoVarLaurent),
    Cyc(CycLaurent),
}

impl Specialized {
    pub fn into_laurent(self) -> Option<TwoVarLaurent> {
        match self {
            Specialized::Laurent(p) => Some(p),
            Specialized::Cyc(_) => None,
        }
    }

    pub fn into_cyc(self) -> Option<CycLaurent> {
        match self {
            Specialized::Cyc(p) => Some(p),
            Specialized::Laurent(_) => None,
        }
    }
}

fn root_substitution(p: &TwoVarLaurent, order: u32, reduce_mod_n: bool) -> CycLaurent {
    let mut out = CycLaurent::zero(order);
    for (&(a, b), c) in p.terms() {
        let b = if reduce_mod_n {
            b.rem_euclid(order as i32)
        } else {
            b
        };
        let coef =
            &CycScalar::xi_pow(order, -2 * b as i64) * &CycScalar::from_int(order, c.clone());
        out.add_term(mul_exp(2, a), coef);
    }
    out
}

pub fn specialize(p: &TwoVarLaurent, target: SpecTarget) -> Result<Specialized> {
    if p.vars() != target.source() {
        return Err(Error::VariableMismatch {
            expected: target.source().to_string(),
            found: p.vars().to_string(),
        });
    }
    if target.colour() == Some(0) {
        return Err(Error::InvalidArgument("colour must be at least 1".into()));
    }
    Ok(match target {
        SpecTarget::Gamma => Specialized::Laurent(
            p.map_monomials(Vars::QS, |(a, b)| (mul_exp(-2, b), mul_exp(2, a))),
        ),
        SpecTarget::PsiGeneric(n) => {
            let lambda = n as i32 - 1;
            Specialized::Laurent(p.map_monomials(Vars::QS, |(a, b)| {
                (add_exp(mul_exp(2 * lambda, a), mul_exp(-2, b)), 0)
            }))
        }
        SpecTarget::EtaGeneric(n) => {
            let lambda = n as i32 - 1;
            Specialized::Laurent(
                p.map_monomials(Vars::QS, |(qe, se)| (add_exp(qe, mul_exp(lambda, se)), 0)),
            )
        }
        SpecTarget::PsiRoot(n) => Specialized::Cyc(root_substitution(p, n, false)),
        SpecTarget::GammaN(n) => Specialized::Cyc(root_substitution(p, n, true)),
        SpecTarget::EtaRoot(n) => {
            let mut out = CycLaurent::zero(n);
            for (&(qe, se), c) in p.terms() {
                let coef = &CycScalar::xi_pow(n, qe as i64) * &CycScalar::from_int(n, c.clone());
                out.add_term(se, coef);
            }
            Specialized::Cyc(out)
        }
    })
}

/// Evaluates a polynomial in `q` alone at `q = xi_N`.
pub fn evaluate_at_root(p: &TwoVarLaurent, order: u32) -> Result<CycScalar> {
    let cyc = specialize(p, SpecTarget::EtaRoot(order))?
        .into_cyc()
        .expect("root target");
    let mut out = CycScalar::zero(order);
    for (e, c) in cyc.terms() {
        if *e != 0 {
            return Err(Error::InvalidArgument(format!("{p} depends on s")));
        }
        out = &out + c;
    }
    Ok(out)
}

/// `F_{i,j,n}(q) = q^{2(i-n)(j+n)} q^{n(n-1)/2} [n+j choose j]_q` evaluated at
/// `q = xi_N`. Vanishes whenever `i <= N-1` and `j + n >= N`.
pub fn truncation_vanishing(i: u32, j: u32, n: u32, order: u32) -> Result<CycScalar> {
    if order == 0 {
        return Err(Error::InvalidArgument("colour must be at least 1".into()));
    }
    if n > i {
        return Err(Error::InvalidArgument(format!("n={n} exceeds i={i}")));
    }
    let (i, j, n) = (i as i64, j as i64, n as i64);
    let unit = CycScalar::xi_pow(order, 2 * (i - n) * (j + n) + n * (n - 1) / 2);
    let binom = evaluate_at_root(&qbinom(n + j, j)?, order)?;
    Ok(&unit * &binom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Variable;
    use proptest::prelude::*;

    fn xd(t: &[((i32, i32), i64)]) -> TwoVarLaurent {
        TwoVarLaurent::from_terms(Vars::XD, t.iter().copied())
    }

    #[test]
    fn examples() {
        let xdm = xd(&[((1, 1), 1)]);
        let g = specialize(&xdm, SpecTarget::Gamma)
            .unwrap()
            .into_laurent()
            .unwrap();
        assert_eq!(g, TwoVarLaurent::from_terms(Vars::QS, [((-2, 2), 1)]));

        let x = TwoVarLaurent::var(Variable::X);
        let p = specialize(&x, SpecTarget::PsiGeneric(3))
            .unwrap()
            .into_laurent()
            .unwrap();
        assert_eq!(p, TwoVarLaurent::from_terms(Vars::QS, [((4, 0), 1)]));

        let trefoil = xd(&[((0, 0), 1), ((-1, 1), 1), ((-2, 1), -1)]);
        let a = specialize(&trefoil, SpecTarget::GammaN(2))
            .unwrap()
            .into_cyc()
            .unwrap();
        assert_eq!(a.to_string(), "1 - s^-2 + s^-4");
    }

    #[test]
    fn variable_mismatch() {
        let q = TwoVarLaurent::var(Variable::Q);
        assert!(matches!(
            specialize(&q, SpecTarget::Gamma),
            Err(Error::VariableMismatch { .. })
        ));
        let x = TwoVarLaurent::var(Variable::X);
        assert!(specialize(&x, SpecTarget::EtaRoot(2)).is_err());
    }

    #[test]
    fn truncation_examples() {
        assert!(truncation_vanishing(1, 1, 1, 2).unwrap().is_zero());
        assert!(truncation_vanishing(2, 2, 1, 3).unwrap().is_zero());
        assert!(truncation_vanishing(1, 0, 1, 2).unwrap().is_one());
    }

    #[test]
    fn truncation_vanishes_on_all_admissible_indices() {
        for order in 1..=5u32 {
            for i in 0..order {
                for j in 0..order {
                    for n in 0..=i {
                        let v = truncation_vanishing(i, j, n, order).unwrap();
                        assert_eq!(v.is_zero(), j + n >= order, "i={i} j={j} n={n} N={order}");
                    }
                }
            }
        }
    }

    fn arb_xd() -> impl Strategy<Value = TwoVarLaurent> {
        proptest::collection::vec(((-6i32..=6, -6i32..=6), -9i64..=9), 0..8)
            .prop_map(|t| TwoVarLaurent::from_terms(Vars::XD, t))
    }

    proptest! {
        #[test]
        fn diagram_commutes(p in arb_xd(), n in 2u32..=4) {
            let g = specialize(&p, SpecTarget::Gamma).unwrap().into_laurent().unwrap();
            let generic = specialize(&g, SpecTarget::EtaGeneric(n)).unwrap();
            prop_assert_eq!(generic, specialize(&p, SpecTarget::PsiGeneric(n)).unwrap());
            let root = specialize(&g, SpecTarget::EtaRoot(n)).unwrap();
            prop_assert_eq!(root, specialize(&p, SpecTarget::PsiRoot(n)).unwrap());
        }

        #[test]
        fn gamma_n_is_psi_root(p in arb_xd(), n in 2u32..=5) {
            prop_assert_eq!(
                specialize(&p, SpecTarget::GammaN(n)).unwrap(),
                specialize(&p, SpecTarget::PsiRoot(n)).unwrap()
            );
        }

        #[test]
        fn specializations_are_ring_maps(p in arb_xd(), r in arb_xd(), n in 2u32..=4) {
            let prod = &p * &r;
            let lhs = specialize(&prod, SpecTarget::PsiRoot(n)).unwrap().into_cyc().unwrap();
            let a = specialize(&p, SpecTarget::PsiRoot(n)).unwrap().into_cyc().unwrap();
            let b = specialize(&r, SpecTarget::PsiRoot(n)).unwrap().into_cyc().unwrap();
            prop_assert_eq!(lhs, &a * &b);
        }
    }
}
