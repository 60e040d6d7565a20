//! Random planar graphs for tests and benchmarks.
//!
//! A random stacked triangulation is thinned to a random spanning tree plus
//! a random subset of its other edges, then vertex ids are shuffled.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::graph::{Graph, VertexId};

/// Edges of a random stacked triangulation on `0..n` (`n >= 3`).
fn stacked_triangulation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<(usize, usize)> {
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut faces = vec![[0, 1, 2], [0, 2, 1]];
    for x in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[i];
        faces[i] = [a, b, x];
        faces.push([b, c, x]);
        faces.push([c, a, x]);
        edges.extend([(a, x), (b, x), (c, x)]);
    }
    edges
}

/// Connected planar edge list on `0..n`. Each non-tree edge of the
/// triangulation survives with probability `density`.
fn connected_edges<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Vec<(usize, usize)> {
    match n {
        0 | 1 => return Vec::new(),
        2 => return vec![(0, 1)],
        _ => {}
    }
    let mut all = stacked_triangulation(rng, n);
    all.shuffle(rng);
    // random spanning tree: Kruskal over the shuffled edges
    let mut uf = crate::union_find::UnionFind::new(n);
    let mut out = Vec::with_capacity(all.len());
    let mut rest = Vec::new();
    for (a, b) in all {
        if uf.find(a).expect("in range") != uf.find(b).expect("in range") {
            uf.union(a, b).expect("in range");
            out.push((a, b));
        } else {
            rest.push((a, b));
        }
    }
    out.extend(rest.into_iter().filter(|_| rng.gen_bool(density)));
    out
}

/// Random connected planar graph on `n >= 2` vertices.
pub fn random_connected<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Result<Graph> {
    random_planar(rng, n, 1, density)
}

/// Random planar graph on `n` vertices with at most `max_components`
/// components, each with at least two vertices.
pub fn random_planar<R: Rng + ?Sized>(rng: &mut R, n: usize, max_components: usize, density: f64) -> Result<Graph> {
    let parts = (n / 2).clamp(1, max_components.max(1));
    let parts = rng.gen_range(1..=parts);
    // sizes >= 2 summing to n
    let mut sizes = vec![2usize; parts];
    for _ in 0..n.saturating_sub(2 * parts) {
        let i = rng.gen_range(0..parts);
        sizes[i] += 1;
    }
    let mut ids: Vec<VertexId> = (1..=n as VertexId).collect();
    ids.shuffle(rng);
    let mut edges = Vec::new();
    let mut offset = 0;
    for s in sizes {
        for (a, b) in connected_edges(rng, s, density) {
            edges.push((ids[offset + a], ids[offset + b]));
        }
        offset += s;
    }
    Graph::new(n, edges)
}
