//! Canonical JSON: sorted object keys, two-space indentation, LF line
//! endings and a trailing newline. Byte-stable for equal values.

use serde::Serialize;

/// Serializes `value` canonically.
///
/// Keys are sorted because `serde_json::Value` objects are B-tree maps
/// (the `preserve_order` feature must stay off).
pub fn to_string<T: Serialize + ?Sized>(value: &T) -> serde_json::Result<String> {
    let value = serde_json::to_value(value)?;
    let mut out = serde_json::to_string_pretty(&value)?;
    out.push('\n');
    Ok(out)
}
