//! JSON wire format for polynomials.
//!
//! ```json
//! {"vars": ["x", "y"], "terms": [{"num": "1", "den": "1", "exp": [2, 0]}]}
//! ```
//!
//! Coefficients travel as decimal strings so arbitrary precision survives the
//! trip.  Serialization is deterministic: terms are emitted in ascending
//! lexicographic order of the exponent vector.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{Polynomial, Vars};
use crate::error::{Error, Result};
use crate::scalar::Rat;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct TermJson {
    pub num: String,
    pub den: String,
    pub exp: Vec<u32>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn from_poly(p: &Polynomial) -> PolyJson {
        PolyJson {
            vars: p.vars().names().to_vec(),
            terms: p
                .terms()
                .map(|(e, c)| TermJson {
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                    exp: e.clone(),
                })
                .collect(),
        }
    }

    pub fn to_poly(&self) -> Result<Polynomial> {
        let vars = Vars::new(self.vars.iter().cloned());
        let n = vars.len();
        let mut seen = std::collections::HashSet::new();
        for name in vars.names() {
            if !seen.insert(name) {
                return Err(Error::structural(format!("duplicate variable {name:?}")));
            }
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.exp.len() != n {
                return Err(Error::structural(format!(
                    "exponent vector of length {} in a ring with {} variables",
                    t.exp.len(),
                    n
                )));
            }
            let num: BigInt = t
                .num
                .parse()
                .map_err(|_| Error::structural(format!("bad numerator {:?}", t.num)))?;
            let den: BigInt = t
                .den
                .parse()
                .map_err(|_| Error::structural(format!("bad denominator {:?}", t.den)))?;
            if den.is_zero() {
                return Err(Error::structural("zero denominator in term"));
            }
            terms.push((t.exp.clone(), Rat::new(num, den)));
        }
        Ok(Polynomial::from_terms(&vars, terms))
    }
}
