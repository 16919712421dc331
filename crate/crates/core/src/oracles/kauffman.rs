use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::MAX_STATE_SUM_CROSSINGS;
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::rings::OneVarLaurent;

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

/// One crossing of the closed braid diagram: the two incoming and two
/// outgoing arc segments, and the letter sign.
struct Crossing {
    in_left: usize,
    in_right: usize,
    out_left: usize,
    out_right: usize,
    sign: i32,
}

struct Diagram {
    segments: usize,
    crossings: Vec<Crossing>,
    /// Segment pairs glued by the closure.
    closure: Vec<(usize, usize)>,
}

fn diagram(beta: &BraidWord) -> Diagram {
    let n = beta.strands();
    let mut cur: Vec<usize> = (0..n).collect();
    let mut next = n;
    let mut crossings = Vec::with_capacity(beta.len());
    for &k in beta.letters() {
        let i = k.unsigned_abs() as usize - 1;
        let c = Crossing {
            in_left: cur[i],
            in_right: cur[i + 1],
            out_left: next,
            out_right: next + 1,
            sign: k.signum(),
        };
        cur[i] = next;
        cur[i + 1] = next + 1;
        next += 2;
        crossings.push(c);
    }
    let closure = cur.iter().enumerate().map(|(p, &s)| (s, p)).collect();
    Diagram {
        segments: next,
        crossings,
        closure,
    }
}

/// Kauffman bracket `<D>` of the closure, in the variable `A`, with the
/// convention `<O> = 1`. For a positive letter the A-smoothing joins each
/// strand to its own continuation.
pub fn kauffman_bracket(beta: &BraidWord) -> Result<OneVarLaurent> {
    if beta.len() > MAX_STATE_SUM_CROSSINGS {
        return Err(Error::TooManyCrossings(beta.len()));
    }
    let d = diagram(beta);
    let c = d.crossings.len();
    // (number of A-smoothings, loop count) -> multiplicity
    let tally: BTreeMap<(usize, usize), u64> = (0u32..1 << c)
        .into_par_iter()
        .map(|state| {
            let mut dsu = Dsu::new(d.segments);
            for &(a, b) in &d.closure {
                dsu.union(a, b);
            }
            let mut a_count = 0;
            for (bit, x) in d.crossings.iter().enumerate() {
                let a_smoothing = state >> bit & 1 == 0;
                if a_smoothing {
                    a_count += 1;
                }
                // positive letter: A = vertical; negative letter: A = horizontal
                if a_smoothing == (x.sign > 0) {
                    dsu.union(x.in_left, x.out_left);
                    dsu.union(x.in_right, x.out_right);
                } else {
                    dsu.union(x.in_left, x.in_right);
                    dsu.union(x.out_left, x.out_right);
                }
            }
            let loops = (0..d.segments).filter(|&s| dsu.find(s) == s).count();
            (a_count, loops)
        })
        .fold(BTreeMap::new, |mut m, key| {
            *m.entry(key).or_insert(0u64) += 1;
            m
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    let delta = OneVarLaurent::from_terms("A", [(2, -1), (-2, -1)]);
    let mut out = OneVarLaurent::zero("A");
    for ((a_count, loops), mult) in tally {
        let b_count = c - a_count;
        let term = delta
            .pow(loops as u32 - 1)
            .shift(a_count as i32 - b_count as i32);
        out += &(&term * &OneVarLaurent::constant("A", BigInt::from(mult)));
    }
    Ok(out)
}

/// Jones polynomial of the closure in `t`, via the bracket with writhe
/// normalization `(-A^3)^{-w} <D>` and `A = t^{-1/4}`. Normalized to 1 on
/// the unknot. With this convention `sigma_1^3` closes to the right-handed
/// trefoil, `V = -t^4 + t^3 + t`.
pub fn kauffman_jones(beta: &BraidWord) -> Result<OneVarLaurent> {
    if !beta.is_knot() {
        return Err(Error::NotAKnot {
            components: beta.closure_cycle_count(),
        });
    }
    let bracket = kauffman_bracket(beta)?;
    let w = beta.writhe() as i32;
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let normalized = bracket.shift(-3 * w);
    let normalized = if sign < 0 { -normalized } else { normalized };
    let v = normalized
        .mirror()
        .root_substitute(4)
        .expect("knot brackets have exponents divisible by 4");
    Ok(v.with_var("t"))
}
