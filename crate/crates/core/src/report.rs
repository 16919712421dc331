//! JSON serialization of computed invariants.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::braid::BraidWord;
use crate::rings::{CycLaurent, OneVarLaurent, TwoVarLaurent};

/// Arbitrary-precision integer carried as a plain JSON number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serde_json::Number::from_str(&self.0.to_string())
            .map_err(serde::ser::Error::custom)?
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        BigInt::from_str(&n.to_string())
            .map(JsonInt)
            .map_err(|_| serde::de::Error::custom(format!("expected an integer, got {n}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InvariantKind {
    Jones,
    Ado,
    Unified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coef {
    Int(JsonInt),
    /// Residue in `Z[xi_N]`, ascending powers of `xi_N`.
    Cyclotomic(Vec<JsonInt>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exp: Vec<i32>,
    pub coef: Coef,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub invariant: InvariantKind,
    #[serde(rename = "N")]
    pub colour: u32,
    pub braid: Vec<i32>,
    pub strands: usize,
    pub writhe: i64,
    pub terms: Vec<Term>,
    /// Set when the closure is not a knot and the computation was forced.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub unvalidated: bool,
}

impl InvariantReport {
    fn base(kind: InvariantKind, beta: &BraidWord, colour: u32, terms: Vec<Term>) -> Self {
        Self {
            invariant: kind,
            colour,
            braid: beta.letters().to_vec(),
            strands: beta.strands(),
            writhe: beta.writhe(),
            terms,
            unvalidated: !beta.is_knot(),
        }
    }

    pub fn jones(beta: &BraidWord, colour: u32, value: &OneVarLaurent) -> Self {
        let terms = value
            .terms()
            .map(|(e, c)| Term {
                exp: vec![*e],
                coef: Coef::Int(JsonInt(c.clone())),
            })
            .collect();
        Self::base(InvariantKind::Jones, beta, colour, terms)
    }

    pub fn ado(beta: &BraidWord, colour: u32, value: &CycLaurent) -> Self {
        let terms = value
            .terms()
            .map(|(e, c)| Term {
                exp: vec![*e],
                coef: Coef::Cyclotomic(c.coeffs().iter().cloned().map(JsonInt).collect()),
            })
            .collect();
        Self::base(InvariantKind::Ado, beta, colour, terms)
    }

    pub fn unified(beta: &BraidWord, colour: u32, value: &TwoVarLaurent) -> Self {
        let terms = value
            .terms()
            .map(|(&(a, b), c)| Term {
                exp: vec![a, b],
                coef: Coef::Int(JsonInt(c.clone())),
            })
            .collect();
        Self::base(InvariantKind::Unified, beta, colour, terms)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairing::KnotInvariants;
    use proptest::prelude::*;

    #[test]
    fn trefoil_json_shape() {
        let beta = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let inv = KnotInvariants::compute(&beta, 2, false).unwrap();
        let r = InvariantReport::jones(&beta, 2, &inv.jones);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["invariant"], "jones");
        assert_eq!(v["N"], 2);
        assert_eq!(v["writhe"], 3);
        assert_eq!(v["terms"][0], serde_json::json!({"exp": [-8], "coef": -1}));
        assert!(v.get("unvalidated").is_none());

        let a = InvariantReport::ado(&beta, 2, inv.ado.as_ref().unwrap());
        let v: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
        assert_eq!(
            v["terms"][1],
            serde_json::json!({"exp": [0], "coef": [-1, 0]})
        );

        let u = InvariantReport::unified(&beta, 2, &inv.pairing.value);
        let v: serde_json::Value = serde_json::from_str(&u.to_json()).unwrap();
        assert_eq!(
            v["terms"][0],
            serde_json::json!({"exp": [-2, 1], "coef": -1})
        );
    }

    #[test]
    fn huge_coefficients_survive() {
        let big = BigInt::from(7).pow(60);
        let p = OneVarLaurent::monomial("q", big, 3);
        let beta = BraidWord::identity(1);
        let r = InvariantReport::jones(&beta, 2, &p);
        assert_eq!(InvariantReport::from_json(&r.to_json()).unwrap(), r);
    }

    proptest! {
        #[test]
        fn json_round_trip(terms in proptest::collection::vec(((-20i32..20, -20i32..20), -1000i64..1000), 0..10),
                           colour in 1u32..6, forced in any::<bool>()) {
            let beta = if forced { BraidWord::identity(2) } else { BraidWord::new(2, vec![1]).unwrap() };
            let p = TwoVarLaurent::from_terms(crate::rings::Vars::XD, terms);
            let r = InvariantReport::unified(&beta, colour, &p);
            prop_assert_eq!(r.unvalidated, forced);
            prop_assert_eq!(InvariantReport::from_json(&r.to_json()).unwrap(), r);
        }
    }
}
