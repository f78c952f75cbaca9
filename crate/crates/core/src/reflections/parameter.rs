use std::fmt;

use num_traits::Zero;
use serde_json::{Map, Value};

use crate::exact::{format_rational, int, parse_rational, ParseScalarError, Rational};
use crate::group::REFLECTION_LABELS;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParameterError {
    #[error("parameter file is not valid JSON: {0}")]
    Json(String),
    #[error("parameter file must be a JSON object keyed by R1..R5")]
    NotAnObject,
    #[error("missing key {0}")]
    MissingKey(&'static str),
    #[error("unknown key {0}")]
    UnknownKey(String),
    #[error("value for {0} must be a rational string such as \"-2/3\"")]
    NotAString(String),
    #[error(transparent)]
    Scalar(#[from] ParseScalarError),
}

/// A class function on the symplectic reflections, given by its value on
/// each of the classes `R1..R5`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReflectionParameter {
    pub c: [Rational; 5],
}

impl ReflectionParameter {
    pub fn new(c: [Rational; 5]) -> Self {
        Self { c }
    }

    pub fn from_ints(values: [i64; 5]) -> Self {
        Self { c: values.map(int) }
    }

    pub fn zero() -> Self {
        Self::from_ints([0; 5])
    }

    pub fn ones() -> Self {
        Self::from_ints([1; 5])
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        Self {
            c: self.c.clone().map(|x| x * factor),
        }
    }

    /// Slots whose coordinate vanishes.
    pub fn zero_slots(&self) -> Vec<usize> {
        (0..5).filter(|&k| self.c[k].is_zero()).collect()
    }

    /// Parses `{"R1": "1", "R2": "-2/3", ...}`. Every label must be present,
    /// no other key is allowed, and values must be rational strings.
    pub fn from_json(text: &str) -> Result<Self, ParameterError> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| ParameterError::Json(e.to_string()))?;
        let Value::Object(map) = value else {
            return Err(ParameterError::NotAnObject);
        };
        if let Some(extra) = map
            .keys()
            .find(|k| !REFLECTION_LABELS.contains(&k.as_str()))
        {
            return Err(ParameterError::UnknownKey(extra.clone()));
        }
        let mut c: [Rational; 5] = Default::default();
        for (slot, label) in REFLECTION_LABELS.iter().enumerate() {
            let raw = map.get(*label).ok_or(ParameterError::MissingKey(label))?;
            let Value::String(s) = raw else {
                return Err(ParameterError::NotAString(label.to_string()));
            };
            c[slot] = parse_rational(s)?;
        }
        Ok(Self { c })
    }

    pub fn to_json(&self) -> Value {
        let map: Map<String, Value> = REFLECTION_LABELS
            .iter()
            .zip(&self.c)
            .map(|(label, x)| (label.to_string(), Value::String(format_rational(x))))
            .collect();
        Value::Object(map)
    }
}

impl fmt::Display for ReflectionParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.c.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}
