//! JSON and DOT serialization of Jaco graphs.

use std::fmt::Write as _;

use serde::Serialize;

use crate::{IncidencePolynomial, JacoGraph, Result, SimpleGraph, VertexRecord};

#[derive(Serialize)]
struct JsonGraph<'a> {
    incidence: IncidencePolynomial,
    n: usize,
    vertices: &'a [VertexRecord],
    #[serde(skip_serializing_if = "Option::is_none")]
    arcs: Option<Vec<(usize, usize)>>,
}

/// `{"incidence":{"a":..,"b":..,"c":..},"n":..,"vertices":[{"i","in_degree","reach"}..]}`
/// with an optional trailing `"arcs":[[i,j],..]`.
pub fn to_json(g: &JacoGraph, arc_budget: Option<u64>) -> Result<String> {
    let doc = JsonGraph {
        incidence: g.incidence(),
        n: g.order(),
        vertices: g.records(),
        arcs: arc_budget.map(|b| g.arcs(b)).transpose()?,
    };
    let mut text = serde_json::to_string(&doc).expect("plain data serializes");
    text.push('\n');
    Ok(text)
}

fn dot(g: &JacoGraph, arc_budget: u64, keyword: &str, edge_op: &str) -> Result<String> {
    Ok(render_dot(g.order(), g.arcs(arc_budget)?, keyword, edge_op))
}

fn render_dot(order: usize, arcs: Vec<(usize, usize)>, keyword: &str, edge_op: &str) -> String {
    let mut touched = vec![false; order + 1];
    for &(i, j) in &arcs {
        touched[i] = true;
        touched[j] = true;
    }
    let mut out = format!("{keyword} {{\n");
    for v in (1..=order).filter(|&v| !touched[v]) {
        let _ = writeln!(out, "  v{v};");
    }
    for (i, j) in arcs {
        let _ = writeln!(out, "  v{i} {edge_op} v{j};");
    }
    out.push_str("}\n");
    out
}

/// `digraph` with one `vi -> vj;` line per arc; isolated vertices are listed
/// as bare nodes.
pub fn to_dot_directed(g: &JacoGraph, arc_budget: u64) -> Result<String> {
    dot(g, arc_budget, "digraph", "->")
}

/// Underlying simple graph as an undirected `graph`.
pub fn to_dot_underlying(g: &JacoGraph, arc_budget: u64) -> Result<String> {
    dot(g, arc_budget, "graph", "--")
}

/// Any simple graph as an undirected `graph`.
pub fn simple_to_dot(g: &SimpleGraph) -> String {
    render_dot(g.order(), g.edges(), "graph", "--")
}
