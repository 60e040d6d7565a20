//! Ranking of the embeddings of one biconnected graph: one permutation per
//! P-node and one reflection bit per R-node, in conventional order.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::codec::{factorial, perm_rank, perm_unrank};
use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::spqr::{is_first_order, BlockRotation, Choices, Link, NodeKind, SpqrTree};

/// Bounds of the tuple: `(δ(ν)−1)!` per P-node, then 2 per R-node.
pub fn bounds(tree: &SpqrTree) -> Vec<BigUint> {
    let (p, z) = tree.choice_shape();
    let mut b: Vec<BigUint> = p.into_iter().map(factorial).collect();
    b.extend(std::iter::repeat_n(BigUint::from(2u32), z));
    b
}

/// `χ⁻¹`: the block rotation selected by a tuple.
pub fn chi_inverse(tree: &SpqrTree, tuple: &[BigUint]) -> Result<BlockRotation> {
    let bounds = bounds(tree);
    crate::codec::check_bounds(tuple, &bounds)?;
    let (p, _) = tree.choice_shape();
    let perms = p
        .iter()
        .zip(tuple)
        .map(|(&k, v)| perm_unrank(k, v))
        .collect::<Result<Vec<_>>>()?;
    let flips = tuple[p.len()..].iter().map(|v| !v.is_zero()).collect();
    tree.compose(&Choices { perms, flips })
}

/// `χ`: the tuple of a block rotation.
pub fn chi(tree: &SpqrTree, rot: &BlockRotation) -> Result<Vec<BigUint>> {
    let c = read_choices(tree, rot)?;
    let mut out = Vec::with_capacity(c.perms.len() + c.flips.len());
    for p in &c.perms {
        out.push(perm_rank(p)?);
    }
    out.extend(c.flips.iter().map(|&f| BigUint::from(u8::from(f))));
    Ok(out)
}

/// Skeleton choices induced by a rotation system of the block.
pub fn read_choices(tree: &SpqrTree, rot: &BlockRotation) -> Result<Choices> {
    if rot.vertices != tree.vertices() {
        return Err(Error::GraphMismatch);
    }
    let mut pos: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    for (x, list) in rot.vertices.iter().zip(&rot.rot) {
        for (i, &y) in list.iter().enumerate() {
            if pos.insert((*x, y), i).is_some() {
                return Err(Error::GraphMismatch);
            }
        }
    }
    let real = tree.nodes.iter().filter(|n| n.kind == NodeKind::Q).count();
    if pos.len() != 2 * real {
        return Err(Error::GraphMismatch);
    }
    let deg = |x: VertexId| rot.rotation(x).map_or(0, <[VertexId]>::len);

    // interval (start, len) of each node's pertinent edges in the rotation
    // at each of its poles, smaller pole first
    let n = tree.nodes.len();
    let mut iv = vec![[(0usize, 0usize); 2]; n];
    let mut perm_of: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut flip_of = vec![false; n];
    for id in (0..n).rev() {
        let node = &tree.nodes[id];
        let Some((u, w)) = node.poles() else { continue };
        if node.kind == NodeKind::Q {
            let Link::Real(e) = node.edges[0].link else {
                return Err(Error::GraphMismatch);
            };
            let a = *pos.get(&(e.lo, e.hi)).ok_or(Error::GraphMismatch)?;
            let b = *pos.get(&(e.hi, e.lo)).ok_or(Error::GraphMismatch)?;
            iv[id] = [(a, 1), (b, 1)];
            continue;
        }
        for (pi, x) in [u, w].into_iter().enumerate() {
            let d = deg(x);
            let mut parts: Vec<(usize, usize, usize)> = Vec::new();
            for (ci, &c) in node.children.iter().enumerate() {
                if node.edges[node.child_edges[ci]].touches(x) {
                    let (cu, _) = tree.nodes[c].poles().expect("child has poles");
                    let (s, l) = iv[c][usize::from(x != cu)];
                    parts.push((s, l, ci));
                }
            }
            let ends: std::collections::HashSet<usize> = parts.iter().map(|&(s, l, _)| (s + l) % d).collect();
            let starts: Vec<usize> = parts.iter().filter(|p| !ends.contains(&p.0)).map(|p| p.0).collect();
            if starts.len() != 1 {
                return Err(Error::InvalidEmbedding(vec![format!(
                    "pertinent edges of node {id} are not consecutive around {x}"
                )]));
            }
            let start = starts[0];
            iv[id][pi] = (start, parts.iter().map(|p| p.1).sum());
            if pi == 0 && matches!(node.kind, NodeKind::P | NodeKind::R) {
                parts.sort_unstable_by_key(|&(s, _, _)| (s + d - start) % d);
                if node.kind == NodeKind::P {
                    let k = parts.len();
                    let mut perm = vec![0; k];
                    for (i, p) in parts.iter().enumerate() {
                        perm[k - 1 - i] = p.2;
                    }
                    perm_of[id] = Some(perm);
                } else {
                    let r = node.reference.expect("R-node has a reference");
                    let mut nb = vec![node.edges[r].other(u)];
                    nb.extend(parts.iter().map(|p| node.edges[node.child_edges[p.2]].other(u)));
                    flip_of[id] = !is_first_order(&nb);
                }
            }
        }
    }
    let (pn, rn) = tree.conventional_order();
    Ok(Choices {
        perms: pn.iter().map(|&i| perm_of[i].take().expect("P-node read")).collect(),
        flips: rn.iter().map(|&i| flip_of[i]).collect(),
    })
}

/// Tuple values as machine words when they fit.
pub fn small_tuple(t: &[BigUint]) -> Option<Vec<u64>> {
    t.iter().map(ToPrimitive::to_u64).collect()
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use rand::{Rng, SeedableRng};

    use super::*;
    use crate::codec::{product, tuple_unrank};
    use crate::embedding::{face_count, RotationSystem};
    use crate::graph::Graph;
    use crate::oracle::enumerate_connected;
    use crate::planarity::planar_embedding;

    fn to_rotation(b: &BlockRotation) -> RotationSystem {
        RotationSystem::new(b.rot.clone())
    }

    fn from_rotation(r: &RotationSystem) -> BlockRotation {
        BlockRotation {
            vertices: (1..=r.n() as u32).collect(),
            rot: r.lists().to_vec(),
        }
    }

    fn is_planar_rotation(r: &RotationSystem, g: &Graph) -> bool {
        r.matches(g) && r.trace_faces().len() == face_count(g.n(), g.m())
    }

    /// Exhaustive check of one biconnected planar graph.
    fn check(g: &Graph) {
        let tree = SpqrTree::build(g.edges()).unwrap();
        assert!(tree.violations().is_empty(), "{:?}\n{}", g.edges(), tree.dump());
        let bounds = bounds(&tree);
        let count = product(&bounds);
        let oracle: BTreeSet<RotationSystem> = enumerate_connected(g).unwrap().into_iter().collect();
        assert_eq!(count, BigUint::from(oracle.len()), "{:?}\n{}", g.edges(), tree.dump());
        let mut seen = BTreeSet::new();
        let total = count.to_u64().unwrap();
        for r in 0..total {
            let t = tuple_unrank(&BigUint::from(r), &bounds).unwrap();
            let b = chi_inverse(&tree, &t).unwrap();
            let rs = to_rotation(&b);
            assert!(is_planar_rotation(&rs, g), "{:?} tuple {t:?}", g.edges());
            assert_eq!(chi(&tree, &b).unwrap(), t, "{:?}", g.edges());
            assert!(seen.insert(rs));
        }
        assert_eq!(seen, oracle);
    }

    fn graph(n: usize, e: &[(u32, u32)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn small_catalog() {
        check(&graph(3, &[(1, 2), (2, 3), (1, 3)]));
        check(&graph(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]));
        check(&graph(5, &[(1, 3), (2, 3), (1, 4), (2, 4), (1, 5), (2, 5)]));
        check(&graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]));
        check(&graph(5, &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (3, 4), (4, 5), (2, 5)]));
        // theta whose branches are a K4 and two paths
        check(&graph(
            6,
            &[(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4), (1, 5), (5, 2), (1, 6), (6, 2)],
        ));
    }

    #[test]
    fn theta_second_order_has_rank_one() {
        let g = graph(5, &[(1, 3), (2, 3), (1, 4), (2, 4), (1, 5), (2, 5)]);
        let tree = SpqrTree::build(g.edges()).unwrap();
        assert_eq!(bounds(&tree), vec![BigUint::from(2u32)]);
        let ranks: BTreeSet<BigUint> = enumerate_connected(&g)
            .unwrap()
            .iter()
            .map(|r| chi(&tree, &from_rotation(r)).unwrap().remove(0))
            .collect();
        assert_eq!(ranks, BTreeSet::from([BigUint::from(0u32), BigUint::from(1u32)]));
    }

    #[test]
    fn k4_first_embedding_ranks_zero() {
        let g = graph(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        let tree = SpqrTree::build(g.edges()).unwrap();
        let zero = chi_inverse(&tree, &[BigUint::zero()]).unwrap();
        let one = chi_inverse(&tree, &[BigUint::from(1u32)]).unwrap();
        assert_eq!(to_rotation(&zero).mirror(), to_rotation(&one));
        assert_eq!(chi(&tree, &zero).unwrap(), vec![BigUint::zero()]);
    }

    #[test]
    fn cycle_has_empty_tuple() {
        let g = graph(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]);
        let tree = SpqrTree::build(g.edges()).unwrap();
        assert!(bounds(&tree).is_empty());
        let b = chi_inverse(&tree, &[]).unwrap();
        assert!(chi(&tree, &b).unwrap().is_empty());
    }

    fn random_biconnected_planar(rng: &mut impl Rng, n: usize) -> Option<Graph> {
        let p: f64 = rng.gen_range(0.3..0.9);
        let mut e = Vec::new();
        for a in 1..=n as u32 {
            for b in a + 1..=n as u32 {
                if rng.gen_bool(p) {
                    e.push((a, b));
                }
            }
        }
        let g = Graph::new(n, e.iter().copied()).ok()?;
        if !g.is_connected() || crate::graph::biconnected_components(&g).len() != 1 || g.m() < 2 {
            return None;
        }
        let local: Vec<(usize, usize)> = e.iter().map(|&(a, b)| (a as usize - 1, b as usize - 1)).collect();
        planar_embedding(n, &local)?;
        Some(g)
    }

    #[test]
    fn random_biconnected_graphs_match_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut done = 0;
        while done < 300 {
            let n = rng.gen_range(3..=7);
            if let Some(g) = random_biconnected_planar(&mut rng, n) {
                let total: u64 = g.vertices().map(|v| (1..g.degree(v) as u64).product::<u64>()).product();
                if total > 200_000 {
                    continue;
                }
                check(&g);
                done += 1;
            }
        }
    }

    #[test]
    fn skeleton_sizes_are_linear() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.gen_range(3..=12);
            if let Some(g) = random_biconnected_planar(&mut rng, n) {
                let t = SpqrTree::build(g.edges()).unwrap();
                let q = t.nodes.iter().filter(|x| x.kind == NodeKind::Q).map(|x| x.edges.len()).sum::<usize>();
                assert!(t.total_skeleton_size() - q <= 3 * g.m(), "{:?}", g.edges());
            }
        }
    }
}
