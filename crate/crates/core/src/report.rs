//! Serialization helpers shared by the report types. Big integers are always
//! written as decimal strings.

use std::fmt::Display;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

pub fn ser_display<T: Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

pub fn ser_display_seq<T: Display, S: Serializer>(values: &[T], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&v.to_string())?;
    }
    seq.end()
}

/// An exact fraction kept with its original (unreduced) denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fraction {
    pub numerator: BigUint,
    pub denominator: BigUint,
}

impl Fraction {
    pub fn new(numerator: impl Into<BigUint>, denominator: impl Into<BigUint>) -> Self {
        Fraction {
            numerator: numerator.into(),
            denominator: denominator.into(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.denominator.is_zero() {
            return f64::NAN;
        }
        // scale to keep precision for huge operands
        let bits = self.denominator.bits().saturating_sub(60);
        let num = (&self.numerator >> bits).to_f64().unwrap_or(f64::INFINITY);
        let den = (&self.denominator >> bits).to_f64().unwrap_or(f64::INFINITY);
        num / den
    }
}

impl std::fmt::Display for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Fraction", 3)?;
        st.serialize_field("numerator", &self.numerator.to_string())?;
        st.serialize_field("denominator", &self.denominator.to_string())?;
        st.serialize_field("decimal", &self.to_f64())?;
        st.end()
    }
}
