//! JSON form of a polynomial:
//! `{"nvars": N, "terms": [{"exp": [e1,...,eN], "coef": "num/den"}]}`.

use super::{Coeff, Monomial, MultiPoly};
use crate::error::PolyError;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PolyJson {
    pub nvars: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TermJson {
    pub exp: Vec<u16>,
    pub coef: String,
}

pub fn coeff_to_string(c: &Coeff) -> String {
    super::text::format_coeff(c)
}

pub fn coeff_from_string(s: &str) -> Result<Coeff, PolyError> {
    let bad = |e: String| PolyError::Parse(format!("bad coefficient {s:?}: {e}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let numer = BigInt::from_str(n.trim()).map_err(|e| bad(e.to_string()))?;
            let denom = BigInt::from_str(d.trim()).map_err(|e| bad(e.to_string()))?;
            if denom == BigInt::from(0) {
                return Err(bad("zero denominator".into()));
            }
            Ok(Coeff::new(numer, denom))
        }
        None => {
            let numer = BigInt::from_str(s.trim()).map_err(|e| bad(e.to_string()))?;
            Ok(Coeff::from_integer(numer))
        }
    }
}

impl MultiPoly {
    /// Terms serialize in descending canonical order.
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            nvars: self.nvars(),
            terms: self
                .terms()
                .rev()
                .map(|(m, c)| TermJson {
                    exp: m.exponents().to_vec(),
                    coef: coeff_to_string(c),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PolyJson) -> Result<Self, PolyError> {
        let mut p = MultiPoly::zero(json.nvars);
        for t in &json.terms {
            if t.exp.len() != json.nvars {
                return Err(PolyError::Invalid(format!(
                    "exponent vector of length {} in a {}-variable polynomial",
                    t.exp.len(),
                    json.nvars
                )));
            }
            p.add_term(Monomial::from_exponents(t.exp.clone()), coeff_from_string(&t.coef)?);
        }
        Ok(p)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serialize")
    }

    pub fn from_json_str(s: &str) -> Result<Self, PolyError> {
        let json: PolyJson =
            serde_json::from_str(s).map_err(|e| PolyError::Parse(e.to_string()))?;
        Self::from_json(&json)
    }
}
