//! Finitely generated abelian groups and exact integer matrices.

mod group;
mod matrix;
mod snf;

use std::fmt;

use num_bigint::BigInt;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use group::{cokernel, direct_sum, is_isomorphic, FgAbGroup};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbelianError {
    #[error("matrix of shape {rows}x{cols} needs {} entries, found {found}", rows * cols)]
    EntryCount {
        rows: usize,
        cols: usize,
        found: usize,
    },
    #[error("cannot multiply {}x{} by {}x{}", left.0, left.1, right.0, right.1)]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("torsion coefficient {0} must be at least 2")]
    TorsionTooSmall(BigInt),
    #[error("torsion coefficients {lower} and {upper} break the divisibility chain")]
    DivisibilityChain { lower: BigInt, upper: BigInt },
}

/// Integer carried as a decimal string in JSON. Plain JSON integers are also
/// accepted on input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct DecimalInt(pub BigInt);

impl Serialize for DecimalInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for DecimalInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = DecimalInt;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<DecimalInt, E> {
                Ok(DecimalInt(v.into()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<DecimalInt, E> {
                Ok(DecimalInt(v.into()))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<DecimalInt, E> {
                v.trim()
                    .parse::<BigInt>()
                    .map(DecimalInt)
                    .map_err(|_| E::custom(format!("invalid decimal integer {v:?}")))
            }
        }
        d.deserialize_any(V)
    }
}
