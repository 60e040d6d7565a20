//! Browser bindings: count, unrank and sample over a graph given as JSON.

use num_bigint::BigUint;
use wasm_bindgen::prelude::*;

use planar_rank::graph::Graph;
use planar_rank::ranking::Ranker;

fn ranker(graph_json: &str) -> Result<Ranker, String> {
    let g = Graph::from_json_str(graph_json).map_err(|e| e.to_string())?;
    Ranker::new(g).map_err(|e| e.to_string())
}

/// Decimal number of embeddings.
pub fn count_embeddings(graph_json: &str) -> Result<String, String> {
    Ok(ranker(graph_json)?.count().to_string())
}

/// Embedding JSON for a decimal rank.
pub fn unrank_embedding(graph_json: &str, rank: &str) -> Result<String, String> {
    let r = ranker(graph_json)?;
    let x: BigUint = rank.trim().parse().map_err(|_| format!("not a decimal natural: {rank:?}"))?;
    Ok(r.unrank(&x).map_err(|e| e.to_string())?.to_json_string())
}

/// `k` seeded samples, one embedding JSON per line. The seed is a decimal
/// u64 so that JavaScript numbers do not lose bits.
pub fn sample_embeddings(graph_json: &str, seed: &str, k: usize) -> Result<String, String> {
    let seed: u64 = seed.trim().parse().map_err(|_| format!("seed must be a u64: {seed:?}"))?;
    let out = ranker(graph_json)?.sample_seeded(seed, k).map_err(|e| e.to_string())?;
    Ok(out.iter().map(|e| e.to_json_string() + "\n").collect())
}

#[wasm_bindgen]
pub fn count(graph_json: &str) -> Result<String, JsError> {
    count_embeddings(graph_json).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn unrank(graph_json: &str, rank: &str) -> Result<String, JsError> {
    unrank_embedding(graph_json, rank).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn sample(graph_json: &str, seed: &str, k: usize) -> Result<String, JsError> {
    sample_embeddings(graph_json, seed, k).map_err(|e| JsError::new(&e))
}
