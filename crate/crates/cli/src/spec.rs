//! Family specs from JSON, a JSON file, or `family key=value ...` shorthand.
//!
//! In the shorthand, list values are comma separated and pairs use a colon:
//! `level_wise_regular_block m=4 pairs=1:3,1:3`.

use std::path::Path;

use radio_block::families::FamilySpec;
use serde_json::{Map, Number, Value};

pub fn parse_spec(args: &[String]) -> Result<FamilySpec, String> {
    let joined = args.join(" ");
    let json = if joined.trim_start().starts_with('{') {
        joined
    } else if args.len() == 1 && Path::new(&args[0]).is_file() {
        std::fs::read_to_string(&args[0]).map_err(|e| format!("{}: {e}", args[0]))?
    } else {
        shorthand(args)?.to_string()
    };
    serde_json::from_str(&json).map_err(|e| format!("bad family spec: {e}"))
}

fn shorthand(args: &[String]) -> Result<Value, String> {
    let (family, rest) = args.split_first().ok_or("empty family spec")?;
    let mut obj = Map::new();
    obj.insert("family".into(), Value::String(family.clone()));
    for kv in rest {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, found {kv:?}"))?;
        obj.insert(k.to_string(), value(k, v)?);
    }
    Ok(Value::Object(obj))
}

fn number(s: &str) -> Result<Value, String> {
    s.parse::<u64>()
        .map(|n| Value::Number(Number::from(n)))
        .map_err(|_| format!("expected a nonnegative integer, found {s:?}"))
}

fn value(key: &str, v: &str) -> Result<Value, String> {
    let list = |v: &str| -> Result<Vec<Value>, String> {
        v.split(',')
            .filter(|s| !s.is_empty())
            .map(|item| match item.split_once(':') {
                Some((a, b)) => Ok(Value::Array(vec![number(a)?, number(b)?])),
                None => number(item),
            })
            .collect()
    };
    match key {
        "pairs" | "degrees" => Ok(Value::Array(list(v)?)),
        _ => number(v),
    }
}
