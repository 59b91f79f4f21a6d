//! Text formats for labelings and orderings, and deterministic JSON output.
//!
//! Labeling files hold one `vertex label` pair per line. Ordering files hold
//! whitespace-separated vertex ids. In both, text after `#` is ignored.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::radio::{RadioLabeling, VertexOrdering};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap().trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a nonnegative integer, found {tok:?}"),
    })
}

pub fn parse_labeling(text: &str, p: usize) -> Result<RadioLabeling> {
    let mut labels: Vec<Option<u64>> = vec![None; p];
    for (line, content) in content_lines(text) {
        let toks: Vec<&str> = content.split_whitespace().collect();
        let [v, l] = toks[..] else {
            return Err(Error::Parse {
                line,
                msg: "expected \"vertex label\"".into(),
            });
        };
        let v: usize = parse_num(v, line)?;
        let l: u64 = parse_num(l, line)?;
        if v >= p {
            return Err(Error::Parse {
                line,
                msg: format!("vertex {v} out of range"),
            });
        }
        if labels[v].replace(l).is_some() {
            return Err(Error::Parse {
                line,
                msg: format!("vertex {v} labeled twice"),
            });
        }
    }
    let got = labels.iter().flatten().count();
    if got != p {
        return Err(Error::LabelCount { expected: p, got });
    }
    Ok(RadioLabeling::new(labels.into_iter().flatten().collect()))
}

pub fn labeling_to_text(f: &RadioLabeling) -> String {
    let mut out = String::new();
    for (v, l) in f.labels.iter().enumerate() {
        writeln!(out, "{v} {l}").unwrap();
    }
    out
}

pub fn parse_ordering(text: &str, p: usize) -> Result<VertexOrdering> {
    let mut order = Vec::new();
    for (line, content) in content_lines(text) {
        for tok in content.split_whitespace() {
            order.push(parse_num(tok, line)?);
        }
    }
    VertexOrdering::new(order, p)
}

pub fn ordering_to_text(ord: &VertexOrdering) -> String {
    let ids: Vec<String> = ord.iter().map(|v| v.to_string()).collect();
    ids.join(" ") + "\n"
}

/// JSON with object keys in sorted order, so equal values print identically.
pub fn to_json<T: Serialize>(value: &T, pretty: bool) -> String {
    let v = serde_json::to_value(value).expect("report types serialize");
    if pretty {
        serde_json::to_string_pretty(&v).unwrap()
    } else {
        serde_json::to_string(&v).unwrap()
    }
}
