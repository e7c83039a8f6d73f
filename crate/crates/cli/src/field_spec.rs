use std::fmt;
use std::str::FromStr;

use apolar_core::PrimeField;

/// `q` for the rationals or `fp:P` for the prime field of order `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FromStr for FieldSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let Some(p) = t.strip_prefix("fp:").or_else(|| t.strip_prefix("FP:")) else {
            return Err(format!("unknown field '{s}', expected 'q' or 'fp:P'"));
        };
        let p: u64 = p.parse().map_err(|_| format!("invalid prime '{p}'"))?;
        PrimeField::new(p).map_err(|e| e.to_string())?;
        Ok(FieldSpec::Prime(p))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// Runs a generic body with the concrete field named by a [`FieldSpec`].
#[macro_export]
macro_rules! with_field {
    ($spec:expr, |$field:ident| $body:expr) => {
        match $spec {
            $crate::field_spec::FieldSpec::Rationals => {
                let $field = apolar_core::Rationals;
                $body
            }
            $crate::field_spec::FieldSpec::Prime(p) => {
                let $field = apolar_core::PrimeField::new(p).expect("validated when parsed");
                $body
            }
        }
    };
}
