use std::path::Path;

use serde_json::Value;

use super::algebra::{HopfAlgebra, HopfAlgebraData};
use crate::error::Result;

pub fn parse_algebra(text: &str) -> Result<HopfAlgebra> {
    let data: HopfAlgebraData = serde_json::from_str(text)?;
    HopfAlgebra::new(data)
}

pub fn load_algebra(path: impl AsRef<Path>) -> Result<HopfAlgebra> {
    parse_algebra(&std::fs::read_to_string(path)?)
}

/// Pretty JSON with innermost arrays kept on one line.
pub fn algebra_to_json(data: &HopfAlgebraData) -> String {
    let value = serde_json::to_value(data).expect("plain data serializes");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            out.push_str(&serde_json::to_string(v).expect("scalar array"));
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&serde_json::to_string(k).expect("key"));
                out.push_str(": ");
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        _ => out.push_str(&serde_json::to_string(v).expect("scalar")),
    }
}

pub fn save_algebra(data: &HopfAlgebraData, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, algebra_to_json(data))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn rejects_bad_documents() {
        assert!(matches!(parse_algebra("{"), Err(Error::Parse(_))));
        let bad = r#"{"name":"x","dim":2,"basis":["a"],"mult":[],"unit":[],"comult":[],"counit":[],"antipode":[]}"#;
        assert!(matches!(parse_algebra(bad), Err(Error::InvalidAlgebra(_))));
    }
}
