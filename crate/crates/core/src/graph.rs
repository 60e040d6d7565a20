//! Simple undirected graphs on vertex ids `1..=n` and their connectivity
//! decomposition into components and blocks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = u32;

/// An undirected edge named by its endpoints in ascending order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId {
    pub lo: VertexId,
    pub hi: VertexId,
}

impl EdgeId {
    pub fn new(a: VertexId, b: VertexId) -> Self {
        if a < b {
            Self { lo: a, hi: b }
        } else {
            Self { lo: b, hi: a }
        }
    }

    pub fn other(&self, v: VertexId) -> VertexId {
        if v == self.lo {
            self.hi
        } else {
            self.lo
        }
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    edges: Vec<EdgeId>,
}

impl Graph {
    /// Builds a graph on `1..=n`. Rejects self-loops, parallel edges, ids out
    /// of range and isolated vertices.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x == 0 || x as usize > n {
                    return Err(Error::VertexOutOfRange(x));
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            list.push(EdgeId::new(a, b));
        }
        if list.is_empty() {
            return Err(Error::Empty);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::ParallelEdge(w[0].lo, w[0].hi));
        }
        let mut adj = vec![Vec::new(); n];
        for e in &list {
            adj[e.lo as usize - 1].push(e.hi);
            adj[e.hi as usize - 1].push(e.lo);
        }
        for (i, nb) in adj.iter_mut().enumerate() {
            if nb.is_empty() {
                return Err(Error::IsolatedVertex(i as VertexId + 1));
            }
            nb.sort_unstable();
        }
        Ok(Self { adj, edges: list })
    }

    /// Builds a graph whose vertex set is `1..=max id`.
    pub fn from_edges<I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let edges: Vec<_> = edges.into_iter().collect();
        let n = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
        Self::new(n as usize, edges)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        1..=self.adj.len() as VertexId
    }

    /// Edges in ascending EdgeId order.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v as usize - 1]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v as usize - 1].len()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        if a == 0 || a as usize > self.n() {
            return false;
        }
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// Position of edge `e` in [`Graph::edges`].
    pub fn edge_index(&self, e: EdgeId) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    /// Connected components ordered by their smallest vertex id. Component
    /// ids are the 1-based positions in this order.
    pub fn connected_components(&self) -> Vec<Component> {
        let n = self.n();
        let mut comp = vec![0usize; n];
        let mut out: Vec<Component> = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != 0 {
                continue;
            }
            let id = out.len() + 1;
            comp[s] = id;
            stack.push(s);
            let mut vertices = Vec::new();
            while let Some(x) = stack.pop() {
                vertices.push(x as VertexId + 1);
                for &w in &self.adj[x] {
                    let w = w as usize - 1;
                    if comp[w] == 0 {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            vertices.sort_unstable();
            out.push(Component {
                id,
                vertices,
                edges: Vec::new(),
            });
        }
        for &e in &self.edges {
            out[comp[e.lo as usize - 1] - 1].edges.push(e);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Block-cutvertex tree of a connected graph.
    pub fn block_cut_tree(&self) -> Result<BlockCutTree> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        Ok(BlockCutTree::from_blocks(self, biconnected_components(self)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub id: usize,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

/// A maximal biconnected subgraph (a bridge counts as a block).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Block {
    pub fn min_edge(&self) -> EdgeId {
        self.edges[0]
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

#[derive(Clone, Debug)]
pub struct BlockCutTree {
    /// Blocks in ascending order of their minimum EdgeId.
    pub blocks: Vec<Block>,
    /// Cut-vertices in ascending id order.
    pub cut_vertices: Vec<VertexId>,
    /// Arcs (block index, index into `cut_vertices`).
    pub arcs: Vec<(usize, usize)>,
}

impl BlockCutTree {
    pub(crate) fn from_blocks(g: &Graph, blocks: Vec<Block>) -> Self {
        let mut count = vec![0usize; g.n()];
        for b in &blocks {
            for &v in &b.vertices {
                count[v as usize - 1] += 1;
            }
        }
        let cut_vertices: Vec<VertexId> = g.vertices().filter(|&v| count[v as usize - 1] > 1).collect();
        let mut arcs = Vec::new();
        for (i, b) in blocks.iter().enumerate() {
            for &v in &b.vertices {
                if let Ok(j) = cut_vertices.binary_search(&v) {
                    arcs.push((i, j));
                }
            }
        }
        Self {
            blocks,
            cut_vertices,
            arcs,
        }
    }

    /// Number of blocks containing `v`.
    pub fn b(&self, v: VertexId) -> usize {
        self.blocks.iter().filter(|b| b.contains_vertex(v)).count()
    }
}

/// Blocks of every component, sorted by minimum EdgeId. Iterative DFS with
/// lowpoints, visiting vertices and neighbors in ascending id order.
pub fn biconnected_components(g: &Graph) -> Vec<Block> {
    let n = g.n();
    let mut disc = vec![0u32; n + 1];
    let mut low = vec![0u32; n + 1];
    let mut time = 0u32;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut blocks = Vec::new();
    // frames: (vertex, parent, next neighbor index)
    let mut frames: Vec<(VertexId, VertexId, usize)> = Vec::new();
    for root in g.vertices() {
        if disc[root as usize] != 0 {
            continue;
        }
        time += 1;
        disc[root as usize] = time;
        low[root as usize] = time;
        frames.push((root, 0, 0));
        while let Some(top) = frames.last_mut() {
            let (v, parent, idx) = *top;
            let nb = g.neighbors(v);
            if idx < nb.len() {
                top.2 += 1;
                let w = nb[idx];
                if w == parent {
                    continue;
                }
                if disc[w as usize] == 0 {
                    edge_stack.push(EdgeId::new(v, w));
                    time += 1;
                    disc[w as usize] = time;
                    low[w as usize] = time;
                    frames.push((w, v, 0));
                } else if disc[w as usize] < disc[v as usize] {
                    edge_stack.push(EdgeId::new(v, w));
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
            } else {
                frames.pop();
                if parent == 0 {
                    continue;
                }
                let p = parent as usize;
                low[p] = low[p].min(low[v as usize]);
                if low[v as usize] >= disc[p] {
                    let stop = EdgeId::new(parent, v);
                    let mut edges = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        edges.push(e);
                        if e == stop {
                            break;
                        }
                    }
                    blocks.push(make_block(edges));
                }
            }
        }
    }
    blocks.sort_by_key(|b| b.min_edge());
    blocks
}

fn make_block(mut edges: Vec<EdgeId>) -> Block {
    edges.sort_unstable();
    let mut vertices: Vec<VertexId> = edges.iter().flat_map(|e| [e.lo, e.hi]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    Block { vertices, edges }
}

/// Wire form `{"vertices": [...], "edges": [[u, v], ...]}` with `u < v`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<[VertexId; 2]>,
}

impl Graph {
    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: GraphJson = serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))?;
        Self::try_from(raw)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.vertices().collect(),
            edges: self.edges.iter().map(|e| [e.lo, e.hi]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(raw: GraphJson) -> Result<Self> {
        let n = raw.vertices.len();
        let mut seen = raw.vertices.clone();
        seen.sort_unstable();
        if seen.iter().enumerate().any(|(i, &v)| v as usize != i + 1) {
            return Err(Error::Malformed("vertex ids must be exactly 1..n".into()));
        }
        for &[u, v] in &raw.edges {
            if u > v {
                return Err(Error::Malformed(format!("edge [{u},{v}] must list the smaller id first")));
            }
        }
        Self::new(n, raw.edges.iter().map(|&[u, v]| (u, v)))
    }
}
