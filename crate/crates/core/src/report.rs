//! Serialization helpers shared by the JSON reports.

use std::fmt::Display;

use serde::Serializer;

/// Serializes any `Display` value as its canonical text form.
pub fn display<T: Display, S: Serializer>(value: &T, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

pub fn display_vec<T: Display, S: Serializer>(
    values: &[T],
    serializer: S,
) -> Result<S::Ok, S::Error> {
    serializer.collect_seq(values.iter().map(ToString::to_string))
}
