//! Plain-text rendering of JSON reports for `--pretty`.

use serde_json::Value;

/// Two-column table of dotted key paths and scalar values. Arrays of scalars
/// are printed on one line.
pub fn table(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten(v, String::new(), &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        out += &format!("{k:<width$}  {v}\n");
    }
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::String(s) => Some(s.clone()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        Value::Array(items) => items
            .iter()
            .map(|x| match x {
                Value::Array(_) | Value::Object(_) => None,
                _ => scalar(x),
            })
            .collect::<Option<Vec<_>>>()
            .map(|xs| xs.join(" ")),
        Value::Object(_) => None,
    }
}

fn flatten(v: &Value, path: String, rows: &mut Vec<(String, String)>) {
    if let Some(s) = scalar(v) {
        rows.push((path, s));
        return;
    }
    let join = |k: &str| {
        if path.is_empty() {
            k.to_string()
        } else {
            format!("{path}.{k}")
        }
    };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| flatten(x, join(k), rows)),
        Value::Array(xs) => xs
            .iter()
            .enumerate()
            .for_each(|(i, x)| flatten(x, join(&i.to_string()), rows)),
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn flattens_nested() {
        let v = json!({"lb": 5, "cond": {"ok": true, "detail": null}, "order": [1, 0]});
        assert_eq!(
            table(&v),
            "cond.detail  -\ncond.ok      true\nlb           5\norder        1 0\n"
        );
    }
}
