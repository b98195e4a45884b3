//! Big integers in JSON: plain numbers when they fit in 64 bits, decimal strings otherwise.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serializer;

pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match x.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&x.to_string()),
    }
}
