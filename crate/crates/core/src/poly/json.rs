//! Canonical JSON form:
//! `{"n": 2, "terms": [{"z": [0,1], "t": [1,0], "re": "1/1", "im": "0/1"}, ...]}`
//! with terms in descending graded-lex order.

use serde::{Deserialize, Serialize};

use super::scalar::{parse_ratio, ratio_to_string};
use super::{GaussianRational, Monomial, PolyError, Polynomial, VarSpace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub z: Vec<u32>,
    pub t: Vec<u32>,
    pub re: String,
    pub im: String,
}

impl From<&Polynomial> for PolyJson {
    fn from(p: &Polynomial) -> Self {
        let n = p.space().rank();
        let terms = p
            .terms()
            .map(|(m, c)| TermJson {
                z: m.exponents()[..n].to_vec(),
                t: m.exponents()[n..].to_vec(),
                re: ratio_to_string(&c.re),
                im: ratio_to_string(&c.im),
            })
            .collect();
        PolyJson { n, terms }
    }
}

impl TryFrom<&PolyJson> for Polynomial {
    type Error = PolyError;

    fn try_from(j: &PolyJson) -> Result<Self, PolyError> {
        let space = VarSpace::new(j.n);
        let mut terms = Vec::with_capacity(j.terms.len());
        for term in &j.terms {
            if term.z.len() != j.n || term.t.len() != j.n {
                return Err(PolyError::Malformed(format!(
                    "exponent vectors must have length {}",
                    j.n
                )));
            }
            let re =
                parse_ratio(&term.re).ok_or_else(|| PolyError::Malformed(format!("bad rational {:?}", term.re)))?;
            let im =
                parse_ratio(&term.im).ok_or_else(|| PolyError::Malformed(format!("bad rational {:?}", term.im)))?;
            let exps = term.z.iter().chain(&term.t).copied().collect();
            terms.push((Monomial::from_exponents(exps), GaussianRational::new(re, im)));
        }
        Ok(Polynomial::from_terms(space, terms))
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        Polynomial::try_from(&j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_json() {
        let sp = VarSpace::new(2);
        let p = &(&Polynomial::t(sp, 1) * &Polynomial::z(sp, 2)) + &Polynomial::z(sp, 1);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"n":2,"terms":[{"z":[0,1],"t":[1,0],"re":"1/1","im":"0/1"},{"z":[1,0],"t":[0,0],"re":"1/1","im":"0/1"}]}"#
        );
        let back: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn rejects_wrong_lengths() {
        let bad = r#"{"n":2,"terms":[{"z":[1],"t":[0,0],"re":"1","im":"0"}]}"#;
        assert!(serde_json::from_str::<Polynomial>(bad).is_err());
    }
}
