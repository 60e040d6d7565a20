//! Every planar graph on 2..=n vertices without isolated vertices, one per
//! isomorphism class.

use planar_rank::graph::{Graph, VertexId};
use planar_rank::planarity::planar_embedding;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn small_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let mut pair_bit = vec![vec![0u32; n]; n];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            pair_bit[a][b] = 1 << i;
            pair_bit[b][a] = 1 << i;
        }
        let perms = permutations(n);
        let mut seen = std::collections::BTreeSet::new();
        for mask in 1u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let mut degree = vec![0usize; n];
            for &(a, b) in &edges {
                degree[a] += 1;
                degree[b] += 1;
            }
            if degree.contains(&0) {
                continue;
            }
            // relabelings that list vertices by non-increasing degree
            let canon = perms
                .iter()
                .filter(|p| p.windows(2).all(|w| degree[w[0]] >= degree[w[1]]))
                .map(|p| {
                    let mut pos = vec![0; n];
                    for (i, &v) in p.iter().enumerate() {
                        pos[v] = i;
                    }
                    edges.iter().map(|&(a, b)| pair_bit[pos[a]][pos[b]]).sum::<u32>()
                })
                .min()
                .expect("some order");
            if !seen.insert(canon) || planar_embedding(n, &edges).is_none() {
                continue;
            }
            let edges = edges.iter().map(|&(a, b)| (a as VertexId + 1, b as VertexId + 1));
            out.push(Graph::new(n, edges).expect("simple graph"));
        }
    }
    out
}
