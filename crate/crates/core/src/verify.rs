//! Verification suites shared by the `verify` subcommand and the test
//! targets. Every suite is deterministic for a given seed.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{BraidWord, MarkovMove};
use crate::error::Result;
use crate::oracles::{burau_alexander, kauffman_jones};
use crate::pairing::{unified_pairing, KnotInvariants, UnifiedPairing};
use crate::rings::{CycLaurent, OneVarLaurent, TwoVarLaurent, Vars};
use crate::special::{specialize, truncation_vanishing, SpecTarget};
use crate::verma::{
    apply_braid, apply_generator, enumerate_basis, rmatrix_entry, rmatrix_series_oracle,
    Composition, WeightVector,
};

/// Outcome of one suite: how many checks ran, and a description of each
/// failure.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub total: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            total: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn check_result<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.total += 1;
                self.failures.push(format!("{}: {e}", what()));
                None
            }
        }
    }

    pub fn passed(&self) -> usize {
        self.total - self.failures.len()
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}/{} ({:.2?})",
            if self.ok() { "PASS" } else { "FAIL" },
            self.name,
            self.passed(),
            self.total,
            self.elapsed
        )
    }
}

fn timed(name: &str, body: impl FnOnce(&mut SuiteReport)) -> SuiteReport {
    let start = Instant::now();
    let mut r = SuiteReport::new(name);
    body(&mut r);
    r.elapsed = start.elapsed();
    r
}

fn braid(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).expect("valid literal braid")
}

/// The frozen calibration between the engine's `J_2(q)` and the bracket
/// oracle's `V(t)`: `t = q^2` followed by the mirror `t -> t^-1`. The R-matrix
/// convention closes `sigma_1^3` to the mirror of the oracle's right-handed
/// trefoil; the same map is used for every knot.
pub fn jones_in_t(j: &OneVarLaurent) -> Option<OneVarLaurent> {
    j.root_substitute(2).map(|p| p.mirror().with_var("t"))
}

/// `Phi_2(s)` as an integer polynomial in `t = s^2`.
pub fn ado2_in_t(a: &CycLaurent) -> Option<OneVarLaurent> {
    a.to_integer_laurent("s")?
        .root_substitute(2)
        .map(|p| p.with_var("t"))
}

/// `sigma_1 sigma_2 sigma_1 = sigma_2 sigma_1 sigma_2`, far commutation and
/// `sigma_i sigma_i^{-1} = id` on every basis vector of the listed spaces.
pub fn braid_relations(spaces: &[(usize, u32)]) -> SuiteReport {
    timed("braid-relations", |r| {
        for &(n, m) in spaces {
            for e in enumerate_basis(n, m) {
                let v = WeightVector::basis(e.clone());
                let act = |letters: &[i32]| apply_braid(&braid(n, letters), &v);
                for i in 1..n as i32 - 1 {
                    let lhs = act(&[i, i + 1, i]);
                    let rhs = act(&[i + 1, i, i + 1]);
                    r.check(lhs.is_ok() && lhs == rhs, || {
                        format!("braid relation s{i} on {e} in E_{{{n},{m}}}")
                    });
                }
                for i in 1..n as i32 {
                    for j in i + 2..n as i32 {
                        r.check(act(&[i, j]) == act(&[j, i]), || {
                            format!("far commutation s{i} s{j} on {e}")
                        });
                    }
                    for sign in [1, -1] {
                        let there = apply_generator(&v, i as usize, sign)
                            .and_then(|w| apply_generator(&w, i as usize, -sign));
                        r.check(there.as_ref() == Ok(&v), || {
                            format!("inverse s{i}^{sign} on {e} in E_{{{n},{m}}}")
                        });
                    }
                }
            }
        }
    })
}

/// Closed-form R-matrix entries against the operator-by-operator series.
pub fn rmatrix_equivalence(max_index: u32) -> SuiteReport {
    timed("rmatrix", |r| {
        for i in 0..=max_index {
            for j in 0..=max_index {
                let series = rmatrix_series_oracle(i, j, i);
                let mut closed = WeightVector::zero(2, (i + j) as u64);
                for n in 0..=i {
                    let entry = rmatrix_entry(i, j, n).expect("n <= i");
                    closed.add_term_unchecked(Composition::new(vec![j + n, i - n]), &entry);
                }
                r.check(series == closed, || format!("R(v_{i} ⊗ v_{j})"));
            }
        }
    })
}

/// `F_{i,j,n}(xi_N) = 0` whenever `j + n >= N`, for all `N <= max_colour`.
pub fn truncation(max_colour: u32) -> SuiteReport {
    timed("truncation", |r| {
        for order in 2..=max_colour {
            for i in 0..order {
                for j in 0..order {
                    for n in 0..=i {
                        if j + n < order {
                            continue;
                        }
                        let v = truncation_vanishing(i, j, n, order);
                        r.check(v.as_ref().is_ok_and(|z| z.is_zero()), || {
                            format!("F_{{{i},{j},{n}}}(xi_{order}) = {v:?}")
                        });
                    }
                }
            }
        }
    })
}

/// After `s -> q^{N-1}`, images of vectors supported on parts `<= N-1`
/// stay supported there.
pub fn truncation_stability(colours: &[u32], words: &[BraidWord]) -> SuiteReport {
    timed("truncation-stability", |r| {
        for &colour in colours {
            for beta in words {
                let n = beta.strands();
                for m in 0..=(n as u32) * (colour - 1) {
                    for e in enumerate_basis(n, m) {
                        if e.parts().iter().any(|&p| p >= colour) {
                            continue;
                        }
                        let Some(image) = r.check_result(
                            apply_braid(beta, &WeightVector::basis(e.clone())),
                            || format!("apply {beta}"),
                        ) else {
                            continue;
                        };
                        let leaks = image.entries().any(|(k, c)| {
                            k.parts().iter().any(|&p| p >= colour)
                                && !specialize(c, SpecTarget::EtaGeneric(colour))
                                    .expect("QS polynomial")
                                    .into_laurent()
                                    .expect("generic target")
                                    .is_zero()
                        });
                        r.check(!leaks, || format!("{beta} on {e} leaks past N={colour}"));
                    }
                }
            }
        }
    })
}

fn geometric_d(colour: u32, n: usize) -> TwoVarLaurent {
    let base = TwoVarLaurent::from_terms(Vars::XD, (0..colour as i32).map(|b| ((0, b), 1)));
    base.pow(n as u32 - 1)
}

/// `I_N(identity in B_n) = (1 + d + ... + d^{N-1})^{n-1}`.
pub fn identity_closed_form(max_strands: usize, max_colour: u32) -> SuiteReport {
    timed("identity", |r| {
        for n in 1..=max_strands {
            for colour in 1..=max_colour {
                let got = unified_pairing(&BraidWord::identity(n), colour);
                let want = geometric_d(colour, n);
                r.check(got.as_ref().map(|p| &p.value) == Ok(&want), || {
                    format!("identity n={n} N={colour}: {got:?}")
                });
            }
        }
    })
}

fn random_xd(rng: &mut ChaCha8Rng) -> TwoVarLaurent {
    let len = rng.gen_range(0..=8);
    TwoVarLaurent::from_terms(
        Vars::XD,
        (0..len).map(|_| {
            (
                (rng.gen_range(-6..=6), rng.gen_range(-6..=6)),
                BigInt::from(rng.gen_range(-9..=9)),
            )
        }),
    )
}

/// `psi = eta ∘ gamma` (generic and root of unity) on random polynomials.
pub fn specialisation_diagram(colours: &[u32], per_colour: usize, seed: u64) -> SuiteReport {
    timed("specialisation", |r| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for &colour in colours {
            for _ in 0..per_colour {
                let p = random_xd(&mut rng);
                let g = specialize(&p, SpecTarget::Gamma)
                    .expect("XD polynomial")
                    .into_laurent()
                    .expect("gamma lands in QS");
                for (eta, psi) in [
                    (
                        SpecTarget::EtaGeneric(colour),
                        SpecTarget::PsiGeneric(colour),
                    ),
                    (SpecTarget::EtaRoot(colour), SpecTarget::PsiRoot(colour)),
                ] {
                    let lhs = specialize(&g, eta).expect("QS polynomial");
                    let rhs = specialize(&p, psi).expect("XD polynomial");
                    r.check(lhs == rhs, || format!("{psi:?} on {p}"));
                }
            }
        }
    })
}

/// Compares `J_2` and `Phi_2` with the bracket and Burau oracles.
pub fn oracle_agreement(braids: &[BraidWord]) -> SuiteReport {
    timed("oracles", |r| {
        for beta in braids {
            let Some(inv) = r.check_result(KnotInvariants::compute(beta, 2, false), || {
                format!("{beta}")
            }) else {
                continue;
            };
            let Some(v) = r.check_result(kauffman_jones(beta), || format!("bracket {beta}")) else {
                continue;
            };
            r.check(jones_in_t(&inv.jones).as_ref() == Some(&v), || {
                format!("J_2({beta}) = {} vs bracket {v}", inv.jones)
            });
            let Some(delta) = r.check_result(burau_alexander(beta), || format!("burau {beta}"))
            else {
                continue;
            };
            let phi = inv.ado.as_ref().and_then(ado2_in_t);
            r.check(
                phi.as_ref().is_some_and(|p| p.equal_up_to_unit(&delta)),
                || format!("Phi_2({beta}) = {:?} vs burau {delta}", inv.ado),
            );
        }
    })
}

/// Draws a random braid in `B_2` or `B_3` of length `1..=max_len` whose
/// closure is a knot.
pub fn random_knot_braid(rng: &mut ChaCha8Rng, max_len: usize) -> BraidWord {
    loop {
        let n = rng.gen_range(2..=3usize);
        let len = rng.gen_range(1..=max_len.max(1));
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let k = rng.gen_range(1..n as i32);
                if rng.gen_bool(0.5) {
                    k
                } else {
                    -k
                }
            })
            .collect();
        let beta = BraidWord::new(n, letters).expect("letters in range");
        if beta.is_knot() {
            return beta;
        }
    }
}

fn random_move(rng: &mut ChaCha8Rng, beta: &BraidWord) -> MarkovMove {
    match rng.gen_range(0..3) {
        0 => MarkovMove::Stabilize(1),
        1 => MarkovMove::Stabilize(-1),
        _ => {
            let n = beta.strands() as i32;
            let len = rng.gen_range(1..=3);
            let letters = (0..len)
                .map(|_| {
                    let k = rng.gen_range(1..n);
                    if rng.gen_bool(0.5) {
                        k
                    } else {
                        -k
                    }
                })
                .collect();
            MarkovMove::Conjugate(BraidWord::new(beta.strands(), letters).expect("in range"))
        }
    }
}

/// One sampled braid, its image under a Markov move, and the colour.
#[derive(Clone, Debug)]
pub struct MarkovCase {
    pub beta: BraidWord,
    pub moved: BraidWord,
    pub colour: u32,
}

/// Parameters for the Markov invariance suite.
#[derive(Clone, Debug)]
pub struct MarkovConfig {
    pub pairs: usize,
    pub max_len: usize,
    pub colours: Vec<u32>,
    pub seed: u64,
}

impl Default for MarkovConfig {
    fn default() -> Self {
        Self {
            pairs: 200,
            max_len: 6,
            colours: vec![2, 3],
            seed: 0x5eed,
        }
    }
}

pub fn markov_cases(cfg: &MarkovConfig) -> Vec<MarkovCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.pairs)
        .map(|k| {
            let beta = random_knot_braid(&mut rng, cfg.max_len);
            let mv = random_move(&mut rng, &beta);
            let moved = beta.markov_move(&mv).expect("moves on matching strands");
            let colour = cfg.colours[k % cfg.colours.len()];
            MarkovCase {
                beta,
                moved,
                colour,
            }
        })
        .collect()
}

fn derived_consistently(p: &UnifiedPairing, inv: &KnotInvariants) -> bool {
    inv.pairing == *p
        && inv.jones == p.coloured_jones()
        && inv.ado.as_ref() == p.ado().ok().as_ref()
}

/// Markov invariance of `J_N` and `Phi_N`, single-pairing derivation of
/// both, and agreement of the `Z ⊕ Z_N` route, on random braid/move pairs.
pub fn markov_invariance(cfg: &MarkovConfig) -> SuiteReport {
    timed("markov", |r| {
        for case in markov_cases(cfg) {
            let MarkovCase {
                beta,
                moved,
                colour,
            } = &case;
            let label = || {
                format!(
                    "{beta} (n={}) -> {moved} (n={}) N={colour}",
                    beta.strands(),
                    moved.strands()
                )
            };
            let Some(a) = r.check_result(KnotInvariants::compute(beta, *colour, false), label)
            else {
                continue;
            };
            let Some(b) = r.check_result(KnotInvariants::compute(moved, *colour, false), label)
            else {
                continue;
            };
            r.check(a.jones == b.jones, || {
                format!("J: {} != {} for {}", a.jones, b.jones, label())
            });
            r.check(a.ado == b.ado, || {
                format!("Phi: {:?} != {:?} for {}", a.ado, b.ado, label())
            });
            for inv in [&a, &b] {
                r.check(derived_consistently(&inv.pairing, inv), || {
                    format!("unified model for {}", label())
                });
                let zn = inv.pairing.ado_zn_route();
                r.check(zn.as_ref().ok() == inv.ado.as_ref(), || {
                    format!("Z+Z_N route for {}", label())
                });
            }
        }
    })
}

/// The named braids the fixed checks use.
pub fn trefoil() -> BraidWord {
    braid(2, &[1, 1, 1])
}

pub fn figure_eight() -> BraidWord {
    braid(3, &[1, -2, 1, -2])
}

/// Names accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "braid",
    "rmatrix",
    "truncation",
    "identity",
    "specialisation",
    "oracles",
    "markov",
];

/// Runs a suite by name with its default parameters; the Markov suite takes
/// its configuration from `markov`.
pub fn run_suite(name: &str, markov: &MarkovConfig) -> Option<SuiteReport> {
    Some(match name {
        "braid" => braid_relations(&[
            (3, 0),
            (3, 1),
            (3, 2),
            (3, 3),
            (3, 4),
            (4, 1),
            (4, 2),
            (5, 2),
        ]),
        "rmatrix" => rmatrix_equivalence(4),
        "truncation" => truncation(5),
        "identity" => identity_closed_form(4, 4),
        "specialisation" => specialisation_diagram(&[2, 3, 4], 50, markov.seed),
        "oracles" => {
            let mut rng = ChaCha8Rng::seed_from_u64(markov.seed);
            let mut braids = vec![BraidWord::identity(1), trefoil(), figure_eight()];
            braids.extend((0..40).map(|_| random_knot_braid(&mut rng, markov.max_len.max(1))));
            oracle_agreement(&braids)
        }
        "markov" => markov_invariance(markov),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_braids_are_knots() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let b = random_knot_braid(&mut rng, 6);
            assert!(b.is_knot());
            assert!(b.len() <= 6 && (2..=3).contains(&b.strands()));
        }
    }

    #[test]
    fn markov_cases_are_deterministic() {
        let cfg = MarkovConfig {
            pairs: 20,
            ..Default::default()
        };
        let a: Vec<_> = markov_cases(&cfg).into_iter().map(|c| c.moved).collect();
        let b: Vec<_> = markov_cases(&cfg).into_iter().map(|c| c.moved).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn small_markov_run_passes() {
        let r = markov_invariance(&MarkovConfig {
            pairs: 12,
            max_len: 4,
            ..Default::default()
        });
        assert!(r.ok(), "{:#?}", r.failures);
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &MarkovConfig::default()).is_none());
    }
}
