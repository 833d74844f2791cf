//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export takes a graph source, either a family spec (`cycle:5`,
//! `gnp:12,0.4,42`, ...) or edge-list text, and returns a JSON string.
//! Errors come back as plain strings so the page can show them verbatim.

use mycielski::indices::{self, IndexReport, RandicBounds};
use mycielski::{
    all_pairs_distances, generate, mycielskian, FamilySpec, Graph, MycielskianLayout, Role,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest base graph the page will build; the Mycielskian has `2n + 1` vertices.
pub const MAX_BASE_ORDER: usize = 60;

fn load(source: &str) -> Result<Graph, String> {
    let source = source.trim();
    let g = if source.contains('\n') || source.starts_with(|c: char| c.is_ascii_digit()) {
        Graph::parse_edge_list(source)
    } else {
        source
            .parse::<FamilySpec>()
            .and_then(|spec| generate(&spec))
    }
    .map_err(|e| e.to_string())?;
    if g.n() > MAX_BASE_ORDER {
        return Err(format!(
            "demo is limited to {MAX_BASE_ORDER} base vertices, got {}",
            g.n()
        ));
    }
    Ok(g)
}

fn layout(source: &str) -> Result<MycielskianLayout, String> {
    mycielskian(&load(source)?).map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Built<'a> {
    base_n: usize,
    base_edges: &'a [(usize, usize)],
    n: usize,
    edges: &'a [(usize, usize)],
    roles: Vec<Role>,
}

/// Builds the Mycielskian and returns both edge lists with vertex roles.
#[wasm_bindgen]
pub fn build(source: &str) -> Result<String, String> {
    let lay = layout(source)?;
    let roles = (0..lay.mu().n())
        .map(|v| lay.role(v))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    to_json(&Built {
        base_n: lay.base_n(),
        base_edges: lay.base().edges(),
        n: lay.mu().n(),
        edges: lay.mu().edges(),
        roles,
    })
}

#[derive(Serialize)]
struct Indices {
    base: IndexReport,
    mu: IndexReport,
    randic_bounds: RandicBounds,
    /// `None` off diameter two, where the closed form is not claimed.
    dd_mu_closed: Option<u64>,
}

/// Indices of the base graph and of its Mycielskian, with the Randić bounds
/// and the closed-form degree distance when the base has diameter two.
#[wasm_bindgen]
pub fn indices(source: &str) -> Result<String, String> {
    let lay = layout(source)?;
    let err = |e: mycielski::Error| e.to_string();
    let base = indices::index_report(lay.base()).map_err(err)?;
    let mu = indices::index_report(lay.mu()).map_err(err)?;
    let randic_bounds = indices::randic_bounds(lay.base()).map_err(err)?;
    let dd_mu_closed = (base.diameter == 2)
        .then(|| indices::dd_mycielskian_closed(lay.base()))
        .transpose()
        .map_err(err)?;
    to_json(&Indices {
        base,
        mu,
        randic_bounds,
        dd_mu_closed,
    })
}

#[derive(Serialize)]
struct Distances {
    from: usize,
    /// Distances read off the base graph.
    predicted: Vec<u32>,
    /// Breadth-first distances on the built Mycielskian.
    bfs: Vec<u32>,
    agree: bool,
}

/// Distances from vertex `from` of the Mycielskian to every other vertex.
#[wasm_bindgen]
pub fn distances_from(source: &str, from: usize) -> Result<String, String> {
    let lay = layout(source)?;
    let err = |e: mycielski::Error| e.to_string();
    let dg = all_pairs_distances(lay.base()).map_err(err)?;
    let predicted = (0..lay.mu().n())
        .map(|v| lay.mu_distance(&dg, from, v))
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    let bfs = all_pairs_distances(lay.mu())
        .map_err(err)?
        .row(from)
        .to_vec();
    let agree = predicted == bfs;
    to_json(&Distances {
        from,
        predicted,
        bfs,
        agree,
    })
}
