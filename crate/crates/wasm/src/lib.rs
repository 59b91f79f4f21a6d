//! wasm-bindgen bindings used by the page in `www/`.
//!
//! Every export takes plain strings and returns a JSON string; failures come
//! back as a JS `Error` with the library's message.

use radio_block::certificate::certify;
use radio_block::exact::exact_radio_number;
use radio_block::families::{canonical_ordering, closed_form_rn, generate, FamilySpec};
use radio_block::radio::{labeling_from_ordering, lower_bound};
use radio_block::{BlockGraph, Graph};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn graph_json(bg: &BlockGraph) -> Value {
    json!({
        "order": bg.order(),
        "edges": bg.graph.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
        "blocks": bg.blocks.blocks,
        "diameter": bg.diameter(),
        "epsilon": bg.epsilon(),
        "weight_centers": bg.centers.weight_centers,
        "central_vertices": bg.centers.central_vertices,
        "level": bg.levels.level,
        "parent": bg.levels.parent,
    })
}

/// Family instance with its canonical ordering, labeling and certificate.
pub fn family_report(spec_json: &str) -> Result<Value, String> {
    let spec: FamilySpec = serde_json::from_str(spec_json).map_err(err)?;
    let g = generate(&spec).map_err(err)?;
    if g.graph.order() > 400 {
        return Err(format!(
            "{} has {} vertices; the demo draws at most 400",
            spec.label(),
            g.graph.order()
        ));
    }
    let ord = canonical_ordering(&spec).map_err(err)?;
    let bg = BlockGraph::analyze(g.graph).map_err(err)?;
    let f = labeling_from_ordering(&bg, &ord).map_err(err)?;
    let report = certify(&bg, &ord).map_err(err)?;
    let mut out = graph_json(&bg);
    out["family"] = json!(spec.label());
    out["names"] = json!(g.names);
    out["ordering"] = json!(ord);
    out["labels"] = json!(f.labels);
    out["span"] = json!(f.span());
    out["closed_form"] = json!(closed_form_rn(&spec).map_err(err)?);
    out["certificate"] = serde_json::to_value(&report).map_err(err)?;
    Ok(out)
}

/// Structure and lower bound of a graph in the text format.
pub fn analyze_report(graph_text: &str) -> Result<Value, String> {
    let bg = BlockGraph::analyze(Graph::parse(graph_text).map_err(err)?).map_err(err)?;
    let mut out = graph_json(&bg);
    out["lb"] = match lower_bound(&bg) {
        Ok(lb) => json!(lb),
        Err(_) => Value::Null,
    };
    Ok(out)
}

/// Exact radio number by exhaustive search, capped at `max_p` vertices.
pub fn exact_report(graph_text: &str, max_p: usize) -> Result<Value, String> {
    let bg = BlockGraph::analyze(Graph::parse(graph_text).map_err(err)?).map_err(err)?;
    let sol = exact_radio_number(&bg.dist, max_p, None).map_err(err)?;
    let mut out = graph_json(&bg);
    out["rn"] = json!(sol.rn);
    out["labels"] = json!(sol.witness.labels);
    out["ordering"] = json!(sol.ordering);
    if let Ok(lb) = lower_bound(&bg) {
        out["lb"] = json!(lb);
        out["certificate"] =
            serde_json::to_value(certify(&bg, &sol.ordering).map_err(err)?).map_err(err)?;
    }
    Ok(out)
}

fn to_js(r: Result<Value, String>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = familyOrdering)]
pub fn family_ordering(spec_json: &str) -> Result<String, JsError> {
    to_js(family_report(spec_json))
}

#[wasm_bindgen(js_name = analyzeGraph)]
pub fn analyze_graph(graph_text: &str) -> Result<String, JsError> {
    to_js(analyze_report(graph_text))
}

#[wasm_bindgen(js_name = solveExact)]
pub fn solve_exact(graph_text: &str, max_p: usize) -> Result<String, JsError> {
    to_js(exact_report(graph_text, max_p))
}
