//! JSON element form: `{"lambda": 1 | -1, "coeffs": [c0, ..., c7]}`.
//!
//! Coefficients are written as decimal strings (`"p/q"` for non-integer
//! rationals). On input, strings and bare JSON numbers are both accepted.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::ElementParseError;
use crate::kappa::basis::{Orientation, DIM};
use crate::kappa::element::KElement;
use crate::Field;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub lambda: Orientation,
    pub coeffs: Vec<String>,
}

impl<F: Field> From<&KElement<F>> for ElementJson {
    fn from(x: &KElement<F>) -> Self {
        Self { lambda: x.lambda, coeffs: x.coeffs.iter().map(Field::format_coeff).collect() }
    }
}

impl<F: Field> KElement<F> {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ElementJson::from(self)).expect("element JSON is always serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, ElementParseError> {
        let raw: Value = serde_json::from_str(text)?;
        let lambda = match raw.get("lambda") {
            Some(v) => {
                let n = v.as_i64().ok_or(ElementParseError::Lambda(0))?;
                Orientation::from_value(n).ok_or(ElementParseError::Lambda(n))?
            }
            None => Orientation::Positive,
        };
        let coeffs = raw
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or(ElementParseError::CoeffCount(0))?;
        if coeffs.len() != DIM {
            return Err(ElementParseError::CoeffCount(coeffs.len()));
        }
        let mut out: [F; DIM] = std::array::from_fn(|_| F::zero());
        for (index, (slot, v)) in out.iter_mut().zip(coeffs).enumerate() {
            let text = match v {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                _ => return Err(ElementParseError::CoeffType(index)),
            };
            *slot = F::parse_coeff(&text).map_err(|source| ElementParseError::Coeff { index, source })?;
        }
        Ok(KElement::new(lambda, out))
    }
}
