//! SPQR-trees of biconnected planar graphs with explicit Q-nodes, rooted at
//! the Q-node of the minimum edge, and composition of skeleton embeddings.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{biconnected_components, EdgeId, Graph, VertexId};
use crate::planarity::planar_embedding;
use crate::triconnectivity::{triconnected_components, ComponentKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    S,
    P,
    Q,
    R,
}

impl NodeKind {
    pub fn letter(self) -> char {
        match self {
            NodeKind::S => 'S',
            NodeKind::P => 'P',
            NodeKind::Q => 'Q',
            NodeKind::R => 'R',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Link {
    /// A real edge of the graph (only in Q-nodes).
    Real(EdgeId),
    /// A virtual edge whose twin lives in the given node.
    Node(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletonEdge {
    pub a: VertexId,
    pub b: VertexId,
    pub link: Link,
}

impl SkeletonEdge {
    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.a {
            self.b
        } else {
            self.a
        }
    }

    pub fn touches(&self, x: VertexId) -> bool {
        self.a == x || self.b == x
    }
}

#[derive(Clone, Debug)]
pub struct SpqrNode {
    pub kind: NodeKind,
    /// Skeleton vertices in ascending order.
    pub vertices: Vec<VertexId>,
    pub edges: Vec<SkeletonEdge>,
    pub parent: Option<usize>,
    /// Index of the skeleton edge shared with the parent.
    pub reference: Option<usize>,
    /// Children in ascending order of `min_edge`.
    pub children: Vec<usize>,
    /// `child_edges[i]` is the skeleton edge leading to `children[i]`.
    pub child_edges: Vec<usize>,
    pub depth: usize,
    /// Minimum edge of the pertinent graph.
    pub min_edge: EdgeId,
    /// Counter-clockwise edge order per skeleton vertex. For R-nodes this
    /// is the first embedding; for P-nodes it is unused.
    rotation: Vec<Vec<usize>>,
}

impl SpqrNode {
    pub fn local(&self, x: VertexId) -> Option<usize> {
        self.vertices.binary_search(&x).ok()
    }

    /// Endpoints of the reference edge, smaller first.
    pub fn poles(&self) -> Option<(VertexId, VertexId)> {
        self.reference.map(|r| {
            let e = &self.edges[r];
            (e.a.min(e.b), e.a.max(e.b))
        })
    }

    pub fn is_pole(&self, x: VertexId) -> bool {
        self.poles().is_some_and(|(u, w)| x == u || x == w)
    }

    /// Number of skeleton edges (the number of branches for a P-node).
    pub fn degree(&self) -> usize {
        self.edges.len()
    }

    /// First skeleton embedding of an R-node as counter-clockwise edge
    /// orders per skeleton vertex.
    pub fn first_rotation(&self) -> Option<&[Vec<usize>]> {
        (self.kind == NodeKind::R).then_some(&self.rotation[..])
    }
}

#[derive(Clone, Debug)]
pub struct SpqrTree {
    pub nodes: Vec<SpqrNode>,
    pub root: usize,
    /// Vertices of the graph in ascending order.
    vertices: Vec<VertexId>,
    /// `top[i]` is the highest node containing `vertices[i]`.
    top: Vec<usize>,
}

/// Skeleton choices for the P-nodes and R-nodes of a tree, each in
/// conventional order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Choices {
    /// Permutation of the children of each P-node.
    pub perms: Vec<Vec<usize>>,
    /// Reflection bit of each R-node.
    pub flips: Vec<bool>,
}

/// Rotation system of one block, restricted to its own edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockRotation {
    pub vertices: Vec<VertexId>,
    pub rot: Vec<Vec<VertexId>>,
}

impl BlockRotation {
    pub fn rotation(&self, v: VertexId) -> Option<&[VertexId]> {
        self.vertices.binary_search(&v).ok().map(|i| &self.rot[i][..])
    }
}

fn check_biconnected(edges: &[EdgeId]) -> Result<Vec<VertexId>> {
    let mut vertices: Vec<VertexId> = edges.iter().flat_map(|e| [e.lo, e.hi]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    let local = |v: VertexId| vertices.binary_search(&v).expect("endpoint") as VertexId + 1;
    let g = Graph::new(vertices.len(), edges.iter().map(|e| (local(e.lo), local(e.hi))))?;
    if !g.is_connected() || biconnected_components(&g).len() != 1 {
        return Err(Error::NotBiconnected);
    }
    Ok(vertices)
}

impl SpqrTree {
    /// Builds the tree of a biconnected planar graph given by its edges.
    pub fn build(edges: &[EdgeId]) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::Empty);
        }
        let mut edges = edges.to_vec();
        edges.sort_unstable();
        let vertices = check_biconnected(&edges)?;
        if edges.len() == 1 {
            let e = edges[0];
            let node = SpqrNode {
                kind: NodeKind::Q,
                vertices: vec![e.lo, e.hi],
                edges: vec![SkeletonEdge {
                    a: e.lo,
                    b: e.hi,
                    link: Link::Real(e),
                }],
                parent: None,
                reference: None,
                children: Vec::new(),
                child_edges: Vec::new(),
                depth: 0,
                min_edge: e,
                rotation: vec![vec![0], vec![0]],
            };
            return Ok(Self {
                nodes: vec![node],
                root: 0,
                vertices,
                top: vec![0, 0],
            });
        }

        let local = |v: VertexId| vertices.binary_search(&v).expect("endpoint");
        let local_edges: Vec<(usize, usize)> = edges.iter().map(|e| (local(e.lo), local(e.hi))).collect();
        let tc = triconnected_components(vertices.len(), &local_edges);

        // components first, then one Q-node per real edge
        let k = tc.components.len();
        let mut owner = vec![[usize::MAX; 2]; tc.edges.len()];
        for (ci, c) in tc.components.iter().enumerate() {
            for &e in &c.edges {
                let slot = &mut owner[e];
                slot[usize::from(slot[0] != usize::MAX)] = ci;
            }
        }
        let mut raw: Vec<(NodeKind, Vec<SkeletonEdge>)> = Vec::with_capacity(k + edges.len());
        for (ci, c) in tc.components.iter().enumerate() {
            let kind = match c.kind {
                ComponentKind::Bond => NodeKind::P,
                ComponentKind::Polygon => NodeKind::S,
                ComponentKind::Triconnected => NodeKind::R,
            };
            let skel = c
                .edges
                .iter()
                .map(|&e| {
                    let (x, y) = tc.edges[e];
                    let link = if e < tc.real {
                        Link::Node(k + e)
                    } else {
                        let [p, q] = owner[e];
                        Link::Node(if p == ci { q } else { p })
                    };
                    SkeletonEdge {
                        a: vertices[x],
                        b: vertices[y],
                        link,
                    }
                })
                .collect();
            raw.push((kind, skel));
        }
        let mut real_owner = vec![usize::MAX; tc.real];
        for (ci, c) in tc.components.iter().enumerate() {
            for &e in &c.edges {
                if e < tc.real {
                    real_owner[e] = ci;
                }
            }
        }
        for (i, e) in edges.iter().enumerate() {
            raw.push((
                NodeKind::Q,
                vec![
                    SkeletonEdge {
                        a: e.lo,
                        b: e.hi,
                        link: Link::Real(*e),
                    },
                    SkeletonEdge {
                        a: e.lo,
                        b: e.hi,
                        link: Link::Node(real_owner[i]),
                    },
                ],
            ));
        }
        Self::root_and_order(raw, k, vertices)
    }

    fn root_and_order(raw: Vec<(NodeKind, Vec<SkeletonEdge>)>, root: usize, vertices: Vec<VertexId>) -> Result<Self> {
        let total = raw.len();
        let mut parent = vec![usize::MAX; total];
        let mut reference = vec![usize::MAX; total];
        let mut depth = vec![0usize; total];
        let mut order = Vec::with_capacity(total);
        let mut seen = vec![false; total];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for (i, e) in raw[x].1.iter().enumerate() {
                if let Link::Node(y) = e.link {
                    if y == parent[x] {
                        reference[x] = i;
                    } else if !seen[y] {
                        seen[y] = true;
                        parent[y] = x;
                        depth[y] = depth[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
        }
        debug_assert_eq!(order.len(), total);
        // the reference of y is the edge pointing back at its parent
        for &x in &order {
            if parent[x] != usize::MAX && reference[x] == usize::MAX {
                reference[x] = raw[x]
                    .1
                    .iter()
                    .position(|e| e.link == Link::Node(parent[x]))
                    .expect("twin edge");
            }
        }
        let mut min_edge: Vec<EdgeId> = raw
            .iter()
            .map(|(_, es)| {
                es.iter()
                    .filter_map(|e| match e.link {
                        Link::Real(r) => Some(r),
                        Link::Node(_) => None,
                    })
                    .min()
                    .unwrap_or(EdgeId { lo: VertexId::MAX, hi: VertexId::MAX })
            })
            .collect();
        for &x in order.iter().rev() {
            if parent[x] != usize::MAX {
                let p = parent[x];
                min_edge[p] = min_edge[p].min(min_edge[x]);
            }
        }
        let mut ids: Vec<usize> = (0..total).collect();
        ids.sort_unstable_by_key(|&x| (depth[x], min_edge[x]));
        let mut new_id = vec![0; total];
        for (i, &x) in ids.iter().enumerate() {
            new_id[x] = i;
        }
        let mut slots: Vec<Option<(NodeKind, Vec<SkeletonEdge>)>> = raw.into_iter().map(Some).collect();
        let mut nodes = Vec::with_capacity(total);
        for &x in &ids {
            let (kind, mut skel) = slots[x].take().expect("each node once");
            for e in &mut skel {
                if let Link::Node(y) = e.link {
                    e.link = Link::Node(new_id[y]);
                }
            }
            let mut vs: Vec<VertexId> = skel.iter().flat_map(|e| [e.a, e.b]).collect();
            vs.sort_unstable();
            vs.dedup();
            let mut rotation = vec![Vec::new(); vs.len()];
            for (i, e) in skel.iter().enumerate() {
                rotation[vs.binary_search(&e.a).expect("vertex")].push(i);
                rotation[vs.binary_search(&e.b).expect("vertex")].push(i);
            }
            let p = parent[x];
            let mut kids: Vec<(EdgeId, usize, usize)> = skel
                .iter()
                .enumerate()
                .filter_map(|(i, e)| match e.link {
                    Link::Node(y) if p == usize::MAX || y != new_id[p] => Some((min_edge[ids[y]], y, i)),
                    _ => None,
                })
                .collect();
            kids.sort_unstable();
            nodes.push(SpqrNode {
                kind,
                vertices: vs,
                edges: skel,
                parent: (p != usize::MAX).then(|| new_id[p]),
                reference: (p != usize::MAX).then_some(reference[x]),
                children: kids.iter().map(|k| k.1).collect(),
                child_edges: kids.iter().map(|k| k.2).collect(),
                depth: depth[x],
                min_edge: min_edge[x],
                rotation,
            });
        }
        for node in nodes.iter_mut().filter(|n| n.kind == NodeKind::R) {
            node.rotation = first_r_rotation(node)?;
        }
        let mut top = vec![usize::MAX; vertices.len()];
        for (id, node) in nodes.iter().enumerate() {
            for &x in &node.vertices {
                if node.parent.is_none() || !node.is_pole(x) {
                    let i = vertices.binary_search(&x).expect("vertex");
                    debug_assert_eq!(top[i], usize::MAX);
                    top[i] = id;
                }
            }
        }
        Ok(Self {
            nodes,
            root: 0,
            vertices,
            top,
        })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Highest node whose skeleton contains `x`.
    pub fn top_node(&self, x: VertexId) -> Option<usize> {
        self.vertices.binary_search(&x).ok().map(|i| self.top[i])
    }

    /// P-nodes then R-nodes, each in conventional order.
    pub fn conventional_order(&self) -> (Vec<usize>, Vec<usize>) {
        let of = |k| (0..self.nodes.len()).filter(|&i| self.nodes[i].kind == k).collect();
        (of(NodeKind::P), of(NodeKind::R))
    }

    /// Children-per-P-node counts and the number of R-nodes.
    pub fn choice_shape(&self) -> (Vec<usize>, usize) {
        let (p, r) = self.conventional_order();
        (p.iter().map(|&i| self.nodes[i].children.len()).collect(), r.len())
    }

    /// Number of embeddings, `2^z · Π (δ(ν) − 1)!`.
    pub fn embedding_count(&self) -> num_bigint::BigUint {
        let (p, z) = self.choice_shape();
        let mut c = num_bigint::BigUint::from(1u32) << z;
        for k in p {
            c *= crate::codec::factorial(k);
        }
        c
    }

    /// Sum of skeleton sizes over all nodes.
    pub fn total_skeleton_size(&self) -> usize {
        self.nodes.iter().map(|n| n.edges.len()).sum()
    }

    /// One line per node: `kind depth min-edge [skeleton edges]`, virtual
    /// edges marked with the twin's node id.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (id, n) in self.nodes.iter().enumerate() {
            let _ = write!(s, "{id} {} {} {} [", n.kind.letter(), n.depth, n.min_edge);
            for (i, e) in n.edges.iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                match e.link {
                    Link::Real(_) => {
                        let _ = write!(s, "{}-{}", e.a, e.b);
                    }
                    Link::Node(t) => {
                        let _ = write!(s, "{}-{}@{t}", e.a, e.b);
                    }
                }
            }
            s.push_str("]\n");
        }
        s
    }

    /// Counter-clockwise skeleton edge order of `node` at its vertex `x`
    /// under the given choices.
    fn node_rotation(&self, id: usize, x: VertexId, perm: Option<&[usize]>, flip: bool) -> Vec<usize> {
        let node = &self.nodes[id];
        if node.kind == NodeKind::P {
            let r = node.reference.expect("P-nodes are never the root");
            let k = node.children.len();
            let perm: Vec<usize> = perm.map_or_else(|| (0..k).collect(), <[usize]>::to_vec);
            let (u, _) = node.poles().expect("P-node poles");
            let mut out = Vec::with_capacity(k + 1);
            out.push(r);
            if x == u {
                out.extend(perm.iter().rev().map(|&c| node.child_edges[c]));
            } else {
                out.extend(perm.iter().map(|&c| node.child_edges[c]));
            }
            return out;
        }
        let li = node.local(x).expect("vertex of skeleton");
        let mut out = node.rotation[li].clone();
        if flip {
            out.reverse();
        }
        out
    }

    /// Rotation system of the graph under the given choices.
    pub fn compose(&self, choices: &Choices) -> Result<BlockRotation> {
        let (pn, rn) = self.conventional_order();
        if choices.perms.len() != pn.len() {
            return Err(Error::IncompleteChoices(pn.get(choices.perms.len()).copied().unwrap_or(0)));
        }
        if choices.flips.len() != rn.len() {
            return Err(Error::IncompleteChoices(rn.get(choices.flips.len()).copied().unwrap_or(0)));
        }
        let mut perm_of: Vec<Option<&[usize]>> = vec![None; self.nodes.len()];
        let mut flip_of = vec![false; self.nodes.len()];
        for (i, &id) in pn.iter().enumerate() {
            let p = &choices.perms[i];
            let k = self.nodes[id].children.len();
            let mut seen = vec![false; k];
            if p.len() != k || p.iter().any(|&x| x >= k || std::mem::replace(&mut seen[x], true)) {
                return Err(Error::NotAPermutation(k));
            }
            perm_of[id] = Some(&p[..]);
        }
        for (i, &id) in rn.iter().enumerate() {
            flip_of[id] = choices.flips[i];
        }

        let mut rot = Vec::with_capacity(self.vertices.len());
        for (vi, &x) in self.vertices.iter().enumerate() {
            let mut out = Vec::new();
            let top = self.top[vi];
            let seq = self.node_rotation(top, x, perm_of[top], flip_of[top]);
            let mut stack: Vec<(usize, Vec<usize>, usize)> = vec![(top, seq, 0)];
            while let Some((id, seq, pos)) = stack.last_mut() {
                if *pos == seq.len() {
                    stack.pop();
                    continue;
                }
                let node = &self.nodes[*id];
                let e = &node.edges[seq[*pos]];
                *pos += 1;
                match e.link {
                    Link::Real(r) => out.push(r.other(x)),
                    Link::Node(c) if Some(c) == node.parent => {}
                    Link::Node(c) => {
                        let child = &self.nodes[c];
                        if child.kind == NodeKind::Q {
                            if let Link::Real(r) = child.edges[0].link {
                                out.push(r.other(x));
                            }
                            continue;
                        }
                        let mut s = self.node_rotation(c, x, perm_of[c], flip_of[c]);
                        let r = child.reference.expect("non-root");
                        let at = s.iter().position(|&i| i == r).expect("reference at pole");
                        s.rotate_left(at + 1);
                        s.pop();
                        stack.push((c, s, 0));
                    }
                }
            }
            rot.push(out);
        }
        Ok(BlockRotation {
            vertices: self.vertices.clone(),
            rot,
        })
    }

    /// Structural problems of the tree, empty when valid.
    pub fn violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        for (id, n) in self.nodes.iter().enumerate() {
            match n.kind {
                NodeKind::Q => {
                    let reals = n.edges.iter().filter(|e| matches!(e.link, Link::Real(_))).count();
                    if reals != 1 || n.edges.len() > 2 {
                        v.push(format!("node {id}: Q-node shape"));
                    }
                }
                NodeKind::P => {
                    if n.vertices.len() != 2 || n.edges.len() < 3 {
                        v.push(format!("node {id}: P-node shape"));
                    }
                }
                NodeKind::S => {
                    let ok = n.edges.len() >= 3 && n.vertices.len() == n.edges.len() && n.rotation.iter().all(|r| r.len() == 2);
                    if !ok {
                        v.push(format!("node {id}: S-node is not a cycle"));
                    }
                }
                NodeKind::R => {
                    if n.vertices.len() < 4 {
                        v.push(format!("node {id}: R-node too small"));
                    }
                }
            }
            if n.kind != NodeKind::Q && n.edges.iter().any(|e| matches!(e.link, Link::Real(_))) {
                v.push(format!("node {id}: real edge outside a Q-node"));
            }
            for e in &n.edges {
                if let Link::Node(t) = e.link {
                    let twins = self.nodes[t].edges.iter().filter(|f| f.link == Link::Node(id)).count();
                    let same = self.nodes[t]
                        .edges
                        .iter()
                        .any(|f| f.link == Link::Node(id) && EdgeId::new(f.a, f.b) == EdgeId::new(e.a, e.b));
                    if twins != 1 || !same {
                        v.push(format!("node {id}: virtual edge without a twin in {t}"));
                    }
                    if matches!(n.kind, NodeKind::S | NodeKind::P) && self.nodes[t].kind == n.kind {
                        v.push(format!("nodes {id} and {t}: adjacent {:?}-nodes", n.kind));
                    }
                }
            }
        }
        v
    }
}

/// First embedding of an R-skeleton: at the smaller pole `u`, with `w1` the
/// smallest neighbor and `w2` the smaller of the two neighbors of `w1` in the
/// rotation at `u`, `(u,w1)` is followed clockwise by `(u,w2)`.
fn first_r_rotation(node: &SpqrNode) -> Result<Vec<Vec<usize>>> {
    let vs = &node.vertices;
    let local = |x: VertexId| vs.binary_search(&x).expect("vertex");
    let pairs: Vec<(usize, usize)> = node.edges.iter().map(|e| (local(e.a), local(e.b))).collect();
    let emb = planar_embedding(vs.len(), &pairs).ok_or(Error::NotPlanar)?;
    let mut index = HashMap::with_capacity(pairs.len());
    for (i, &(a, b)) in pairs.iter().enumerate() {
        index.insert((a.min(b), a.max(b)), i);
    }
    let mut rot: Vec<Vec<usize>> = emb
        .iter()
        .enumerate()
        .map(|(a, nb)| nb.iter().map(|&b| index[&(a.min(b), a.max(b))]).collect())
        .collect();
    let (u, _) = node.poles().expect("R-nodes are never the root");
    if !is_first(node, &rot[local(u)], u) {
        for r in &mut rot {
            r.reverse();
        }
    }
    Ok(rot)
}

/// Whether the counter-clockwise order `ccw` of skeleton edges at the
/// smaller pole `u` is the one of the first embedding.
pub(crate) fn is_first(node: &SpqrNode, ccw: &[usize], u: VertexId) -> bool {
    let nb: Vec<VertexId> = ccw.iter().map(|&i| node.edges[i].other(u)).collect();
    is_first_order(&nb)
}

/// Same test on the neighbor sequence at the pole.
pub(crate) fn is_first_order(nb: &[VertexId]) -> bool {
    let k = nb.len();
    let i1 = (0..k).min_by_key(|&i| nb[i]).expect("nonempty rotation");
    let before = nb[(i1 + k - 1) % k];
    let after = nb[(i1 + 1) % k];
    before < after
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(pairs: &[(u32, u32)]) -> Vec<EdgeId> {
        pairs.iter().map(|&(a, b)| EdgeId::new(a, b)).collect()
    }

    fn kinds(t: &SpqrTree) -> String {
        t.nodes.iter().map(|n| n.kind.letter()).collect()
    }

    #[test]
    fn single_edge_is_one_q_node() {
        let t = SpqrTree::build(&ids(&[(1, 2)])).unwrap();
        assert_eq!(kinds(&t), "Q");
        let rot = t.compose(&Choices::default()).unwrap();
        assert_eq!(rot.rot, vec![vec![2], vec![1]]);
    }

    #[test]
    fn c4_is_one_s_node() {
        let t = SpqrTree::build(&ids(&[(1, 2), (2, 3), (3, 4), (1, 4)])).unwrap();
        let mut k: Vec<char> = kinds(&t).chars().collect();
        k.sort_unstable();
        assert_eq!(k.iter().collect::<String>(), "QQQQS");
        assert_eq!(t.nodes[0].kind, NodeKind::Q);
        assert_eq!(t.nodes[0].min_edge, EdgeId::new(1, 2));
        assert!(t.violations().is_empty());
    }

    #[test]
    fn k4_is_one_r_node() {
        let t = SpqrTree::build(&ids(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])).unwrap();
        assert_eq!(kinds(&t), "QRQQQQQ");
        assert_eq!(t.embedding_count(), 2u32.into());
        let a = t.compose(&Choices { perms: vec![], flips: vec![false] }).unwrap();
        let b = t.compose(&Choices { perms: vec![], flips: vec![true] }).unwrap();
        let mirrored: Vec<Vec<u32>> = a.rot.iter().map(|r| r.iter().rev().copied().collect()).collect();
        let canon = |r: &[Vec<u32>]| crate::embedding::RotationSystem::new(r.to_vec());
        assert_eq!(canon(&b.rot), canon(&mirrored));
        assert_ne!(canon(&a.rot), canon(&b.rot));
    }

    #[test]
    fn r_first_rule_picks_one_reflection() {
        let t = SpqrTree::build(&ids(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])).unwrap();
        let r = &t.nodes[1];
        let (u, _) = r.poles().unwrap();
        let ccw = &r.first_rotation().unwrap()[r.local(u).unwrap()];
        let rev: Vec<usize> = ccw.iter().rev().copied().collect();
        assert!(is_first(r, ccw, u));
        assert!(!is_first(r, &rev, u));
    }

    #[test]
    fn k5_is_rejected() {
        let mut e = Vec::new();
        for a in 1..=5 {
            for b in a + 1..=5 {
                e.push((a, b));
            }
        }
        assert_eq!(SpqrTree::build(&ids(&e)).unwrap_err(), Error::NotPlanar);
    }

    #[test]
    fn path_is_not_biconnected() {
        assert_eq!(SpqrTree::build(&ids(&[(1, 2), (2, 3)])).unwrap_err(), Error::NotBiconnected);
    }

    #[test]
    fn theta_orders_branches_by_min_edge() {
        // poles 1 and 2, branches through 3, 4 and 5
        let t = SpqrTree::build(&ids(&[(1, 3), (2, 3), (1, 4), (2, 4), (1, 5), (2, 5)])).unwrap();
        let (p, r) = t.conventional_order();
        assert!(r.is_empty());
        // the root hangs off (1,3); the P-node sits below the S-node holding it
        assert_eq!(p.len(), 1);
        let pn = &t.nodes[p[0]];
        assert_eq!(pn.degree(), 3);
        let mins: Vec<EdgeId> = pn.children.iter().map(|&c| t.nodes[c].min_edge).collect();
        assert_eq!(mins, vec![EdgeId::new(1, 4), EdgeId::new(1, 5)]);
        assert_eq!(t.embedding_count(), 2u32.into());
    }

    #[test]
    fn theta_of_thetas_orders_equal_depth_p_nodes() {
        // two thetas joined in series between 1 and 9, closed by edge 1-9
        let t = SpqrTree::build(&ids(&[
            (1, 2),
            (1, 3),
            (2, 4),
            (3, 4),
            (1, 5),
            (5, 4),
            (4, 6),
            (4, 7),
            (6, 9),
            (7, 9),
            (4, 8),
            (8, 9),
            (1, 9),
        ]))
        .unwrap();
        let (p, _) = t.conventional_order();
        let keys: Vec<(usize, EdgeId)> = p.iter().map(|&i| (t.nodes[i].depth, t.nodes[i].min_edge)).collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
        assert!(keys.len() >= 2);
        assert!(t.violations().is_empty());
    }

    #[test]
    fn dump_has_one_line_per_node() {
        let t = SpqrTree::build(&ids(&[(1, 2), (2, 3), (1, 3)])).unwrap();
        let d = t.dump();
        assert_eq!(d.lines().count(), t.nodes.len());
        assert!(d.starts_with("0 Q 0 (1,2) [1-2 1-2@1]"));
    }
}
