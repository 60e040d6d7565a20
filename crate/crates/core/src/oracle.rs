//! Brute-force enumeration of embeddings, used as ground truth by the tests
//! and the `verify` command. Nothing here is on the ranking path.

use std::collections::{BTreeMap, BTreeSet};

use crate::codec::Intervals;
use crate::embedding::{face_count, PlanarEmbedding, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::nesting::NestingTree;

/// Largest vertex count accepted by the rotation enumeration.
pub const MAX_VERTICES: usize = 8;
/// Largest number of candidate rotation systems examined.
pub const MAX_CANDIDATES: u64 = 3_000_000;
/// Largest degree at the cut-vertex for arrangement enumeration.
pub const MAX_ARRANGEMENT_DEGREE: usize = 9;

/// Deduplicated embeddings keyed by their canonical serialization.
pub type EmbeddingSet = BTreeSet<String>;

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// All cyclic orders of `items` with `items[0]` first.
fn cyclic_orders(items: &[VertexId]) -> Vec<Vec<VertexId>> {
    if items.len() <= 2 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    let mut rest: Vec<VertexId> = items[1..].to_vec();
    permutations(&mut rest, 0, &mut |p| {
        let mut v = vec![items[0]];
        v.extend_from_slice(p);
        out.push(v);
    });
    out
}

fn permutations(a: &mut Vec<VertexId>, k: usize, f: &mut dyn FnMut(&[VertexId])) {
    if k == a.len() {
        f(a);
        return;
    }
    for i in k..a.len() {
        a.swap(k, i);
        permutations(a, k + 1, f);
        a.swap(k, i);
    }
}

/// Number of faces traced from rotations of vertices `1..=rot.len()`
/// (at most `MAX_VERTICES`).
fn faces_of(rot: &[&[VertexId]]) -> usize {
    const N: usize = MAX_VERTICES + 1;
    let mut pos = [[0usize; N]; N];
    for (v, list) in rot.iter().enumerate() {
        for (i, &w) in list.iter().enumerate() {
            pos[v + 1][w as usize] = i;
        }
    }
    let mut seen = [[false; N]; N];
    let mut faces = 0;
    for (v, list) in rot.iter().enumerate() {
        for &w in list.iter() {
            let (mut a, mut b) = (v + 1, w as usize);
            if seen[a][b] {
                continue;
            }
            faces += 1;
            while !seen[a][b] {
                seen[a][b] = true;
                let lb = rot[b - 1];
                let i = pos[b][a];
                let next = lb[(i + lb.len() - 1) % lb.len()] as usize;
                a = b;
                b = next;
            }
        }
    }
    faces
}

/// Number of faces traced from a rotation map with arbitrary vertex ids.
fn faces_of_map(rot: &BTreeMap<VertexId, Vec<VertexId>>) -> usize {
    let mut seen: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut faces = 0;
    for (&v, list) in rot {
        for &w in list {
            if seen.contains(&(v, w)) {
                continue;
            }
            faces += 1;
            let (mut a, mut b) = (v, w);
            while seen.insert((a, b)) {
                let lb = &rot[&b];
                let i = lb.iter().position(|&x| x == a).expect("symmetric rotation");
                let next = lb[(i + lb.len() - 1) % lb.len()];
                a = b;
                b = next;
            }
        }
    }
    faces
}

/// Planar rotation systems of a connected graph.
pub fn enumerate_connected(g: &Graph) -> Result<Vec<RotationSystem>> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if g.n() > MAX_VERTICES {
        return Err(Error::TooLarge(format!("{} vertices", g.n())));
    }
    let total: u64 = g.vertices().map(|v| factorial(g.degree(v).saturating_sub(1))).product();
    if total > MAX_CANDIDATES {
        return Err(Error::TooLarge(format!("{total} rotation systems")));
    }
    let choices: Vec<Vec<Vec<VertexId>>> = g.vertices().map(|v| cyclic_orders(g.neighbors(v))).collect();
    let want = face_count(g.n(), g.m());
    let mut idx = vec![0usize; choices.len()];
    let mut out = BTreeSet::new();
    loop {
        let rot: Vec<&[VertexId]> = idx.iter().enumerate().map(|(i, &k)| choices[i][k].as_slice()).collect();
        if faces_of(&rot) == want {
            out.insert(RotationSystem::new(rot.iter().map(|r| r.to_vec()).collect()));
        }
        let mut i = 0;
        loop {
            if i == idx.len() {
                return Ok(out.into_iter().collect());
            }
            idx[i] += 1;
            if idx[i] < choices[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// All nesting trees for components with the given face counts: every
/// acyclic choice of a parent (the root with label 0, or another component
/// with a label from its interval) for each component.
pub fn nesting_trees(faces: &[usize]) -> Vec<NestingTree> {
    let c = faces.len();
    let iv = Intervals::from_face_counts(faces);
    let options: Vec<Vec<(usize, u64)>> = (1..=c)
        .map(|h| {
            let mut o = vec![(0usize, 0u64)];
            for g in (1..=c).filter(|&g| g != h) {
                o.extend(iv.interval(g).map(|l| (g, l)));
            }
            o
        })
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; c];
    loop {
        let parent: Vec<(usize, u64)> = idx.iter().enumerate().map(|(h, &k)| options[h][k]).collect();
        let t = NestingTree::from_parents(parent);
        if !t.has_cycle() {
            out.push(t);
        }
        let mut i = 0;
        loop {
            if i == c {
                return out;
            }
            idx[i] += 1;
            if idx[i] < options[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// All sphere embeddings of a graph: per-component rotation systems, every
/// nesting tree and every face tuple.
pub fn enumerate_disconnected(g: &Graph) -> Result<EmbeddingSet> {
    let comps = g.connected_components();
    let mut per: Vec<Vec<RotationSystem>> = Vec::new();
    for comp in &comps {
        let local = |v: VertexId| comp.vertices.binary_search(&v).expect("vertex") as VertexId + 1;
        let sub = Graph::new(comp.vertices.len(), comp.edges.iter().map(|e| (local(e.lo), local(e.hi))))?;
        per.push(enumerate_connected(&sub)?);
    }
    let faces: Vec<usize> = comps.iter().map(|c| face_count(c.vertices.len(), c.edges.len())).collect();
    let combos: u64 = per.iter().map(|p| p.len() as u64).product();
    if combos > MAX_CANDIDATES {
        return Err(Error::TooLarge(format!("{combos} component combinations")));
    }
    let trees = nesting_trees(&faces);
    let tuples: u64 = faces.iter().map(|&f| f as u64).product();
    if combos * trees.len() as u64 * tuples > MAX_CANDIDATES {
        return Err(Error::TooLarge("nesting product".into()));
    }
    let mut out = EmbeddingSet::new();
    let mut idx = vec![0usize; per.len()];
    loop {
        let mut rot = vec![Vec::new(); g.n()];
        for (ci, comp) in comps.iter().enumerate() {
            let r = &per[ci][idx[ci]];
            for (li, &v) in comp.vertices.iter().enumerate() {
                rot[v as usize - 1] = r.lists()[li].iter().map(|&w| comp.vertices[w as usize - 1]).collect();
            }
        }
        let rotation = RotationSystem::new(rot);
        for t in &trees {
            let mut ft = vec![0usize; faces.len()];
            loop {
                let e = PlanarEmbedding {
                    rotation: rotation.clone(),
                    nesting: t.clone(),
                    face_tuple: ft.clone(),
                };
                out.insert(e.to_json_string());
                let mut i = 0;
                while i < ft.len() {
                    ft[i] += 1;
                    if ft[i] < faces[i] {
                        break;
                    }
                    ft[i] = 0;
                    i += 1;
                }
                if i == ft.len() {
                    break;
                }
            }
        }
        let mut i = 0;
        while i < idx.len() {
            idx[i] += 1;
            if idx[i] < per[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
        if i == idx.len() {
            return Ok(out);
        }
    }
}

/// Arrangements at `v` of blocks with fixed rotation systems: every cyclic
/// order at `v` that keeps each block's own cyclic order, kept when the
/// union is planar. `blocks` maps each vertex of a block to its
/// counter-clockwise neighbors inside that block. Returns the cyclic orders
/// at `v`, each starting at its smallest neighbor.
pub fn enumerate_arrangements(v: VertexId, blocks: &[BTreeMap<VertexId, Vec<VertexId>>]) -> Result<BTreeSet<Vec<VertexId>>> {
    let at_v: Vec<Vec<VertexId>> = blocks.iter().map(|b| b[&v].clone()).collect();
    let mut all: Vec<VertexId> = at_v.iter().flatten().copied().collect();
    if all.len() > MAX_ARRANGEMENT_DEGREE {
        return Err(Error::TooLarge(format!("degree {}", all.len())));
    }
    all.sort_unstable();
    let mut base: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    let mut n = 0usize;
    let mut m = 0usize;
    for b in blocks {
        for (&x, list) in b {
            if x != v {
                n += 1;
                base.insert(x, list.clone());
            }
            m += list.len();
        }
    }
    n += 1;
    m /= 2;
    let want = face_count(n, m);
    let mut out = BTreeSet::new();
    for order in cyclic_orders(&all) {
        let keeps = at_v.iter().all(|own| {
            let sub: Vec<VertexId> = order.iter().copied().filter(|x| own.contains(x)).collect();
            same_cycle(&sub, own)
        });
        if !keeps {
            continue;
        }
        let mut rot = base.clone();
        rot.insert(v, order.clone());
        if faces_of_map(&rot) == want {
            out.insert(order);
        }
    }
    Ok(out)
}

fn same_cycle(a: &[VertexId], b: &[VertexId]) -> bool {
    a.len() == b.len() && (a.is_empty() || (0..b.len()).any(|s| (0..a.len()).all(|i| a[i] == b[(s + i) % b.len()])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, e: &[(u32, u32)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn connected_counts() {
        assert_eq!(enumerate_connected(&graph(3, &[(1, 2), (2, 3), (1, 3)])).unwrap().len(), 1);
        assert_eq!(enumerate_connected(&graph(3, &[(1, 2), (2, 3)])).unwrap().len(), 1);
        let k4 = graph(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        let k4e = enumerate_connected(&k4).unwrap();
        assert_eq!(k4e.len(), 2);
        assert_eq!(k4e[0].mirror(), k4e[1]);
        let star = graph(4, &[(1, 2), (1, 3), (1, 4)]);
        assert_eq!(enumerate_connected(&star).unwrap().len(), 2);
    }

    #[test]
    fn k5_has_no_planar_rotation() {
        let mut e = Vec::new();
        for a in 1..=5 {
            for b in a + 1..=5 {
                e.push((a, b));
            }
        }
        assert!(enumerate_connected(&graph(5, &e)).unwrap().is_empty());
    }

    #[test]
    fn guards_are_errors() {
        let e: Vec<(u32, u32)> = (1..9).map(|i| (i, i + 1)).collect();
        assert!(matches!(enumerate_connected(&graph(9, &e)), Err(Error::TooLarge(_))));
    }

    #[test]
    fn disconnected_counts() {
        assert_eq!(enumerate_disconnected(&graph(4, &[(1, 2), (3, 4)])).unwrap().len(), 1);
        let two_triangles = graph(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]);
        assert_eq!(enumerate_disconnected(&two_triangles).unwrap().len(), 12);
        let tri_edge = graph(5, &[(1, 2), (2, 3), (1, 3), (4, 5)]);
        // (Σ(F−1)+1)·F_1·F_2 with F = (2, 1)
        assert_eq!(enumerate_disconnected(&tri_edge).unwrap().len(), 4);
        assert_eq!(enumerate_disconnected(&graph(3, &[(1, 2), (2, 3), (1, 3)])).unwrap().len(), 2);
    }

    #[test]
    fn arrangement_counts() {
        let edge = |a: u32, b: u32| BTreeMap::from([(a, vec![b]), (b, vec![a])]);
        assert_eq!(enumerate_arrangements(1, &[edge(1, 2), edge(1, 3)]).unwrap().len(), 1);
        assert_eq!(enumerate_arrangements(1, &[edge(1, 2), edge(1, 3), edge(1, 4)]).unwrap().len(), 2);
        // a triangle and a K4 meeting at 1: degrees 2 and 3
        let tri = BTreeMap::from([(1, vec![2, 3]), (2, vec![3, 1]), (3, vec![1, 2])]);
        let k4 = graph(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        let r = enumerate_connected(&k4).unwrap().remove(0);
        let relabel = |v: u32| if v == 1 { 1 } else { v + 2 };
        let block: BTreeMap<u32, Vec<u32>> =
            (1..=4).map(|v| (relabel(v), r.rotation(v).iter().map(|&w| relabel(w)).collect())).collect();
        assert_eq!(enumerate_arrangements(1, &[tri, block]).unwrap().len(), 6);
    }
}
