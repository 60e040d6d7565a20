//! End-to-end ranking of the sphere embeddings of a planar graph.
//!
//! The tuple is laid out as `a` (nesting tree), `b` (outer faces), then `c`
//! and `d` for every cut-vertex in ascending id, then the P-node values of
//! every block, then the R-node bits of every block. Blocks are ordered by
//! minimum edge and the nodes of a block in conventional order.

use std::fmt::Write as _;
use std::ops::Range;

use num_bigint::{BigUint, RandBigInt};
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::biconnected::{bounds as block_bounds, chi, chi_inverse};
use crate::codec::{check_bounds, product, tuple_rank, tuple_unrank};
use crate::cutvertex::{bounds as arrangement_bounds, phi_v, phi_v_inverse};
use crate::embedding::{face_count, PlanarEmbedding, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::{biconnected_components, Block, EdgeId, Graph, VertexId};
use crate::nesting::{nesting_bounds, nesting_rank, nesting_unrank};
use crate::spqr::{BlockRotation, SpqrTree};

/// Positions of the segments inside the full tuple.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Layout {
    pub a: Range<usize>,
    pub b: Range<usize>,
    pub c: Range<usize>,
    pub d: Range<usize>,
    pub p: Range<usize>,
    pub r: Range<usize>,
}

impl Layout {
    pub fn len(&self) -> usize {
        self.r.end
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug)]
struct CutVertex {
    v: VertexId,
    /// Blocks containing `v`, ascending by their smallest neighbor of `v`.
    blocks: Vec<usize>,
    c: Range<usize>,
    d: Range<usize>,
}

#[derive(Clone, Debug)]
struct BlockPlan {
    block: Block,
    tree: SpqrTree,
    p: Range<usize>,
    r: Range<usize>,
}

/// Precomputed decomposition of one graph, shared by every rank query.
#[derive(Clone, Debug)]
pub struct Ranker {
    graph: Graph,
    faces: Vec<usize>,
    blocks: Vec<BlockPlan>,
    cuts: Vec<CutVertex>,
    /// Blocks containing each vertex, indexed by `v - 1`.
    vertex_blocks: Vec<Vec<usize>>,
    /// Block of each edge, indexed like [`Graph::edges`].
    edge_block: Vec<usize>,
    layout: Layout,
    bounds: Vec<BigUint>,
}

impl Ranker {
    pub fn new(graph: Graph) -> Result<Self> {
        if graph.m() == 0 {
            return Err(Error::Empty);
        }
        let comps = graph.connected_components();
        let faces: Vec<usize> = comps
            .iter()
            .map(|c| face_count(c.vertices.len(), c.edges.len()))
            .collect();

        let raw_blocks = biconnected_components(&graph);
        let mut trees = Vec::with_capacity(raw_blocks.len());
        for b in &raw_blocks {
            trees.push(SpqrTree::build(&b.edges)?);
        }
        let mut edge_block = vec![usize::MAX; graph.m()];
        let mut vertex_blocks = vec![Vec::new(); graph.n()];
        for (i, b) in raw_blocks.iter().enumerate() {
            for e in &b.edges {
                edge_block[graph.edge_index(*e).expect("block edge")] = i;
            }
            for &v in &b.vertices {
                vertex_blocks[v as usize - 1].push(i);
            }
        }

        let (na, nb) = nesting_bounds(&faces);
        let mut bounds: Vec<BigUint> = na.iter().chain(&nb).map(|&x| BigUint::from(x)).collect();
        let a = 0..na.len();
        let b = a.end..a.end + nb.len();

        let mut cuts = Vec::new();
        let mut d_bounds = Vec::new();
        for v in graph.vertices() {
            let here = &vertex_blocks[v as usize - 1];
            if here.len() < 2 {
                continue;
            }
            let mut min_nb: Vec<(VertexId, usize)> = here.iter().map(|&bi| (VertexId::MAX, bi)).collect();
            let mut degree = vec![0usize; here.len()];
            for &w in graph.neighbors(v) {
                let bi = edge_block[graph.edge_index(EdgeId::new(v, w)).expect("edge")];
                let k = here.iter().position(|&x| x == bi).expect("block at v");
                min_nb[k].0 = min_nb[k].0.min(w);
                degree[k] += 1;
            }
            let mut order: Vec<usize> = (0..here.len()).collect();
            order.sort_by_key(|&k| min_nb[k].0);
            let degrees: Vec<usize> = order.iter().map(|&k| degree[k]).collect();
            let (cb, db) = arrangement_bounds(&degrees);
            let start = bounds.len();
            bounds.extend(cb.into_iter().map(BigUint::from));
            d_bounds.push(db);
            cuts.push(CutVertex {
                v,
                blocks: order.iter().map(|&k| min_nb[k].1).collect(),
                c: start..bounds.len(),
                d: 0..0,
            });
        }
        let c = b.end..bounds.len();
        for (cut, db) in cuts.iter_mut().zip(d_bounds) {
            let start = bounds.len();
            bounds.extend(db.into_iter().map(BigUint::from));
            cut.d = start..bounds.len();
        }
        let d = c.end..bounds.len();

        let local: Vec<(Vec<BigUint>, usize)> = trees
            .iter()
            .map(|t| (block_bounds(t), t.choice_shape().0.len()))
            .collect();
        let mut p_ranges = Vec::with_capacity(trees.len());
        for (bb, np) in &local {
            let start = bounds.len();
            bounds.extend(bb[..*np].iter().cloned());
            p_ranges.push(start..bounds.len());
        }
        let p = d.end..bounds.len();
        let mut r_ranges = Vec::with_capacity(trees.len());
        for (bb, np) in &local {
            let start = bounds.len();
            bounds.extend(bb[*np..].iter().cloned());
            r_ranges.push(start..bounds.len());
        }
        let r = p.end..bounds.len();

        let blocks = raw_blocks
            .into_iter()
            .zip(trees)
            .zip(p_ranges.into_iter().zip(r_ranges))
            .map(|((block, tree), (p, r))| BlockPlan { block, tree, p, r })
            .collect();
        Ok(Self {
            graph,
            faces,
            blocks,
            cuts,
            vertex_blocks,
            edge_block,
            layout: Layout { a, b, c, d, p, r },
            bounds,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn bounds(&self) -> &[BigUint] {
        &self.bounds
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    /// Number of sphere embeddings.
    pub fn count(&self) -> BigUint {
        product(&self.bounds)
    }

    /// `Φ`: the tuple of an embedding of this graph.
    pub fn phi(&self, emb: &PlanarEmbedding) -> Result<Vec<BigUint>> {
        emb.validate_for(&self.graph)?;
        let mut t = vec![BigUint::zero(); self.bounds.len()];
        let (a, b) = nesting_rank(emb)?;
        for (slot, x) in t[self.layout.a.clone()].iter_mut().zip(a) {
            *slot = x.into();
        }
        for (slot, x) in t[self.layout.b.clone()].iter_mut().zip(b) {
            *slot = x.into();
        }

        let restricted = self.restrict(&emb.rotation);
        for (plan, rot) in self.blocks.iter().zip(&restricted) {
            let local = chi(&plan.tree, rot)?;
            let np = plan.p.len();
            for (slot, x) in t[plan.p.clone()].iter_mut().zip(&local[..np]) {
                *slot = x.clone();
            }
            for (slot, x) in t[plan.r.clone()].iter_mut().zip(&local[np..]) {
                *slot = x.clone();
            }
        }
        for cut in &self.cuts {
            let lists = self.lists_at(cut, &restricted);
            let (c, d) = phi_v(&lists, emb.rotation.rotation(cut.v))?;
            for (slot, x) in t[cut.c.clone()].iter_mut().zip(c) {
                *slot = x.into();
            }
            for (slot, x) in t[cut.d.clone()].iter_mut().zip(d) {
                *slot = x.into();
            }
        }
        Ok(t)
    }

    /// `Φ⁻¹`.
    pub fn phi_inverse(&self, t: &[BigUint]) -> Result<PlanarEmbedding> {
        check_bounds(t, &self.bounds)?;
        let mut rotations = Vec::with_capacity(self.blocks.len());
        for plan in &self.blocks {
            let local: Vec<BigUint> = t[plan.p.clone()].iter().chain(&t[plan.r.clone()]).cloned().collect();
            rotations.push(chi_inverse(&plan.tree, &local)?);
        }
        let mut rot: Vec<Vec<VertexId>> = vec![Vec::new(); self.graph.n()];
        for br in &rotations {
            for (&v, list) in br.vertices.iter().zip(&br.rot) {
                if self.vertex_blocks[v as usize - 1].len() == 1 {
                    rot[v as usize - 1] = list.clone();
                }
            }
        }
        for cut in &self.cuts {
            let lists = self.lists_at(cut, &rotations);
            let c = small(&t[cut.c.clone()]);
            let d = small(&t[cut.d.clone()]);
            rot[cut.v as usize - 1] = phi_v_inverse(&lists, &c, &d)?;
        }
        let rotation = RotationSystem::new(rot);
        let a: Vec<u64> = small(&t[self.layout.a.clone()]).into_iter().map(|x| x as u64).collect();
        let b: Vec<u64> = small(&t[self.layout.b.clone()]).into_iter().map(|x| x as u64).collect();
        nesting_unrank(&a, &b, rotation)
    }

    pub fn rank(&self, emb: &PlanarEmbedding) -> Result<BigUint> {
        tuple_rank(&self.phi(emb)?, &self.bounds)
    }

    pub fn unrank(&self, rank: &BigUint) -> Result<PlanarEmbedding> {
        self.phi_inverse(&tuple_unrank(rank, &self.bounds)?)
    }

    /// A uniform tuple: every element drawn independently.
    pub fn sample_tuple<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<BigUint> {
        self.bounds.iter().map(|b| rng.gen_biguint_below(b)).collect()
    }

    /// A uniformly random embedding.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<PlanarEmbedding> {
        self.phi_inverse(&self.sample_tuple(rng))
    }

    /// `k` uniform embeddings from a seeded generator.
    pub fn sample_seeded(&self, seed: u64, k: usize) -> Result<Vec<PlanarEmbedding>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..k).map(|_| self.sample(&mut rng)).collect()
    }

    /// Embeddings of ranks `from, from+1, ...`, at most `limit` of them.
    pub fn enumerate(&self, from: &BigUint, limit: usize) -> Result<Enumerate<'_>> {
        let tuple = tuple_unrank(from, &self.bounds)?;
        Ok(Enumerate {
            ranker: self,
            rank: from.clone(),
            tuple: Some(tuple),
            left: limit,
        })
    }

    /// Block-cut tree and SPQR trees, for debugging.
    pub fn decompose(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "n {} m {} components {}", self.graph.n(), self.graph.m(), self.faces.len());
        let _ = writeln!(s, "faces {:?}", self.faces);
        for (i, plan) in self.blocks.iter().enumerate() {
            let edges: Vec<String> = plan.block.edges.iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "block {i} vertices {:?} edges {}", plan.block.vertices, edges.join(" "));
        }
        for cut in &self.cuts {
            let _ = writeln!(s, "cut-vertex {} blocks {:?}", cut.v, cut.blocks);
        }
        for (i, plan) in self.blocks.iter().enumerate() {
            let _ = writeln!(s, "spqr {i}");
            s.push_str(&plan.tree.dump());
        }
        let bounds: Vec<String> = self.bounds.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "bounds [{}]", bounds.join(","));
        let _ = writeln!(s, "count {}", self.count());
        s
    }

    /// The rotation of every block, cut out of a full rotation system.
    fn restrict(&self, rotation: &RotationSystem) -> Vec<BlockRotation> {
        let mut out: Vec<BlockRotation> = self
            .blocks
            .iter()
            .map(|p| BlockRotation {
                vertices: p.tree.vertices().to_vec(),
                rot: vec![Vec::new(); p.tree.vertices().len()],
            })
            .collect();
        for v in self.graph.vertices() {
            for &w in rotation.rotation(v) {
                let Some(e) = self.graph.edge_index(EdgeId::new(v, w)) else {
                    continue;
                };
                let br = &mut out[self.edge_block[e]];
                if let Ok(k) = br.vertices.binary_search(&v) {
                    br.rot[k].push(w);
                }
            }
        }
        out
    }

    fn lists_at(&self, cut: &CutVertex, rotations: &[BlockRotation]) -> Vec<Vec<VertexId>> {
        cut.blocks
            .iter()
            .map(|&bi| rotations[bi].rotation(cut.v).expect("cut-vertex in block").to_vec())
            .collect()
    }
}

fn small(values: &[BigUint]) -> Vec<usize> {
    values.iter().map(|x| x.to_usize().expect("bounded by a degree")).collect()
}

/// Number of embeddings of `g`.
pub fn count_embeddings(g: &Graph) -> Result<BigUint> {
    Ok(Ranker::new(g.clone())?.count())
}

/// Iterator over consecutive ranks, stepping the tuple like an odometer.
pub struct Enumerate<'a> {
    ranker: &'a Ranker,
    rank: BigUint,
    tuple: Option<Vec<BigUint>>,
    left: usize,
}

impl Iterator for Enumerate<'_> {
    type Item = Result<(BigUint, PlanarEmbedding)>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.left == 0 {
            return None;
        }
        let tuple = self.tuple.as_mut()?;
        let item = self.ranker.phi_inverse(tuple).map(|e| (self.rank.clone(), e));
        self.left -= 1;
        self.rank += 1u32;
        let mut i = tuple.len();
        loop {
            if i == 0 {
                self.tuple = None;
                break;
            }
            i -= 1;
            tuple[i] += 1u32;
            if tuple[i] < self.ranker.bounds[i] {
                break;
            }
            tuple[i].set_zero();
        }
        Some(item)
    }
}

impl Enumerate<'_> {
    /// Rank of the next item.
    pub fn position(&self) -> &BigUint {
        &self.rank
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use rand::SeedableRng;

    use super::*;
    use crate::generate::random_planar;
    use crate::oracle::enumerate_disconnected;

    fn graph(n: usize, edges: &[(VertexId, VertexId)]) -> Graph {
        Graph::new(n, edges.iter().copied()).unwrap()
    }

    fn all_embeddings(r: &Ranker) -> Vec<String> {
        r.enumerate(&BigUint::zero(), usize::MAX)
            .unwrap()
            .map(|x| x.unwrap().1.to_json_string())
            .collect()
    }

    fn assert_matches_oracle(g: &Graph) {
        let r = Ranker::new(g.clone()).unwrap();
        let got = all_embeddings(&r);
        let set: BTreeSet<String> = got.iter().cloned().collect();
        assert_eq!(set.len(), got.len(), "duplicate embeddings for {:?}", g.edges());
        assert_eq!(set, enumerate_disconnected(g).unwrap(), "{:?}", g.edges());
        for (i, s) in got.iter().enumerate() {
            let e = PlanarEmbedding::from_json_str(s).unwrap();
            assert_eq!(r.rank(&e).unwrap(), BigUint::from(i));
        }
    }

    #[test]
    fn small_counts() {
        let count = |n, e: &[(VertexId, VertexId)]| count_embeddings(&graph(n, e)).unwrap();
        assert_eq!(count(2, &[(1, 2)]), BigUint::from(1u32));
        assert_eq!(count(3, &[(1, 2), (2, 3), (1, 3)]), BigUint::from(2u32));
        assert_eq!(count(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]), BigUint::from(8u32));
        assert_eq!(count(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]), BigUint::from(12u32));
        assert_eq!(count(5, &[(1, 2), (2, 3), (1, 3), (4, 5)]), BigUint::from(4u32));
    }

    #[test]
    fn non_planar_and_empty_rejected() {
        let k5: Vec<(VertexId, VertexId)> = (1..=5).flat_map(|a| (a + 1..=5).map(move |b| (a, b))).collect();
        assert!(matches!(Ranker::new(graph(5, &k5)), Err(Error::NotPlanar)));
        assert!(Graph::new(0, std::iter::empty::<(VertexId, VertexId)>()).is_err());
    }

    #[test]
    fn catalog_matches_oracle() {
        let catalog: Vec<(usize, Vec<(VertexId, VertexId)>)> = vec![
            (2, vec![(1, 2)]),
            (3, vec![(1, 2), (2, 3)]),
            (3, vec![(1, 2), (2, 3), (1, 3)]),
            (4, vec![(1, 2), (1, 3), (1, 4)]),
            (4, vec![(1, 2), (2, 3), (3, 4), (1, 4)]),
            (4, vec![(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]),
            (4, vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
            (5, vec![(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)]),
            (5, vec![(1, 2), (1, 3), (1, 4), (1, 5)]),
            (5, vec![(1, 2), (2, 3), (1, 3), (4, 5)]),
            (6, vec![(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]),
            (6, vec![(1, 2), (3, 4), (5, 6)]),
            (5, vec![(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (4, 5)]),
            (6, vec![(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (4, 5)]),
            (5, vec![(1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5)]),
        ];
        for (n, e) in catalog {
            assert_matches_oracle(&graph(n, &e));
        }
    }

    #[test]
    fn random_small_graphs_match_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut checked = 0;
        while checked < 60 {
            let n = rng.gen_range(2..=6);
            let g = random_planar(&mut rng, n, 3, 0.5).unwrap();
            if Ranker::new(g.clone()).unwrap().count() > BigUint::from(20_000u32) {
                continue;
            }
            assert_matches_oracle(&g);
            checked += 1;
        }
    }

    #[test]
    fn random_roundtrips() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..100 {
            let n = rng.gen_range(2..=14);
            let g = random_planar(&mut rng, n, 3, 0.5).unwrap();
            let r = Ranker::new(g).unwrap();
            for _ in 0..10 {
                let x = rng.gen_biguint_below(&r.count());
                let e = r.unrank(&x).unwrap();
                assert_eq!(r.rank(&e).unwrap(), x);
            }
        }
    }

    #[test]
    fn enumerate_edges() {
        let r = Ranker::new(graph(3, &[(1, 2), (2, 3), (1, 3)])).unwrap();
        assert_eq!(r.enumerate(&BigUint::zero(), 10).unwrap().count(), 2);
        assert_eq!(r.enumerate(&BigUint::from(1u32), 10).unwrap().count(), 1);
        assert!(r.enumerate(&BigUint::from(2u32), 10).is_err());
    }

    #[test]
    fn layout_segments_follow_the_bounds() {
        let g = graph(7, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5), (6, 7)]);
        let r = Ranker::new(g).unwrap();
        let l = r.layout();
        assert_eq!(l.a.len(), 1);
        assert_eq!(l.b.len(), 2);
        assert_eq!(l.c.len(), 2);
        assert_eq!(l.d.len(), 0);
        assert_eq!(l.len(), r.bounds().len());
    }
}
