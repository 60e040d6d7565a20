//! Nesting trees of disconnected embeddings and their tuple code (a variant
//! of the Prüfer code where parent components are replaced by face labels).

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::codec::{nesting_tuple_preprocess, Intervals};
use crate::embedding::{face_count, PlanarEmbedding, RotationSystem};
use crate::error::{Error, Result};

/// Rooted tree on the dummy root `ρ` (node 0) and the components `1..=c`.
/// `parent[h-1] = (parent of component h, label of the edge)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NestingTree {
    parent: Vec<(usize, u64)>,
}

impl NestingTree {
    /// Every component a child of `ρ`.
    pub fn star(c: usize) -> Self {
        Self {
            parent: vec![(0, 0); c],
        }
    }

    /// Unchecked constructor; see [`NestingTree::violations`].
    pub fn from_parents(parent: Vec<(usize, u64)>) -> Self {
        Self { parent }
    }

    /// Number of components.
    pub fn c(&self) -> usize {
        self.parent.len()
    }

    /// `(parent, label)` of component `h`.
    pub fn parent(&self, h: usize) -> (usize, u64) {
        self.parent[h - 1]
    }

    /// `(parent, child, label)` sorted by child.
    pub fn triples(&self) -> Vec<(usize, usize, u64)> {
        self.parent
            .iter()
            .enumerate()
            .map(|(i, &(p, l))| (p, i + 1, l))
            .collect()
    }

    pub fn from_triples(triples: &[(usize, usize, u64)]) -> Result<Self> {
        let c = triples.len();
        let mut parent = vec![None; c];
        for &(p, ch, l) in triples {
            if ch == 0 || ch > c || p > c {
                return Err(Error::MalformedTree(format!("nesting edge {p}-{ch} names an unknown component")));
            }
            if parent[ch - 1].replace((p, l)).is_some() {
                return Err(Error::MalformedTree(format!("component {ch} has two parents")));
            }
        }
        Ok(Self {
            parent: parent.into_iter().map(|x| x.expect("all children seen")).collect(),
        })
    }

    pub fn has_cycle(&self) -> bool {
        let c = self.c();
        let mut state = vec![0u8; c + 1];
        for s in 1..=c {
            let mut path = Vec::new();
            let mut x = s;
            while x != 0 && x <= c && state[x] == 0 {
                state[x] = 1;
                path.push(x);
                x = self.parent[x - 1].0;
            }
            if x != 0 && x <= c && state[x] == 1 {
                return true;
            }
            for p in path {
                state[p] = 2;
            }
        }
        false
    }

    pub fn violations(&self, intervals: &Intervals) -> Vec<String> {
        let mut out = Vec::new();
        let c = self.c();
        if c != intervals.len() {
            out.push(format!("nesting tree has {} components, the graph has {}", c, intervals.len()));
            return out;
        }
        for (h, &(p, l)) in self.parent.iter().enumerate() {
            let h = h + 1;
            if p > c || p == h {
                out.push(format!("component {h} has invalid parent {p}"));
            } else if p == 0 && l != 0 {
                out.push(format!("edge from the root to component {h} has label {l}, expected 0"));
            } else if p != 0 && !intervals.interval(p).contains(&l) {
                out.push(format!("label {l} of component {h} is not a face label of its parent {p}"));
            }
        }
        if out.is_empty() && self.has_cycle() {
            out.push("nesting parents form a cycle".into());
        }
        out
    }

    /// Tuple of `c-1` labels: repeatedly delete the leaf component with the
    /// smallest identifier and record the label of its edge.
    pub fn encode(&self) -> Result<Vec<u64>> {
        let c = self.c();
        if c == 0 || self.parent.iter().any(|&(p, _)| p > c) || self.has_cycle() {
            return Err(Error::MalformedTree("not a nesting tree".into()));
        }
        let mut children = vec![0usize; c + 1];
        for &(p, _) in &self.parent {
            children[p] += 1;
        }
        let mut leaves: BinaryHeap<Reverse<usize>> = (1..=c).filter(|&h| children[h] == 0).map(Reverse).collect();
        let mut out = Vec::with_capacity(c - 1);
        for _ in 1..c {
            let Reverse(h) = leaves.pop().expect("a tree keeps a leaf component");
            let (p, l) = self.parent[h - 1];
            out.push(l);
            children[p] -= 1;
            if p != 0 && children[p] == 0 {
                leaves.push(Reverse(p));
            }
        }
        Ok(out)
    }

    /// Inverse of [`NestingTree::encode`] for the given label intervals.
    pub fn decode(tau: &[u64], intervals: &Intervals) -> Result<Self> {
        let c = intervals.len();
        if c == 0 || tau.len() + 1 != c {
            return Err(Error::LengthMismatch {
                expected: c.saturating_sub(1),
                got: tau.len(),
            });
        }
        let (prime, mut delta) = nesting_tuple_preprocess(tau, intervals)?;
        let mut leaves: BinaryHeap<Reverse<usize>> = (1..=c).filter(|&h| delta[h] == 1).map(Reverse).collect();
        let mut parent = vec![(0usize, 0u64); c];
        for (&k, &label) in prime.iter().zip(tau) {
            let Reverse(h) = leaves.pop().expect("decoding always finds a leaf");
            parent[h - 1] = (k, label);
            delta[h] -= 1;
            delta[k] -= 1;
            if k != 0 && delta[k] == 1 {
                leaves.push(Reverse(k));
            }
        }
        let Reverse(last) = leaves.pop().expect("one component remains");
        parent[last - 1] = (0, 0);
        Ok(Self { parent })
    }
}

/// Face counts `F_1..F_c` of the components of a rotation system.
pub fn component_face_counts(rotation: &RotationSystem) -> Result<Vec<usize>> {
    let g = rotation.graph()?;
    Ok(g.connected_components()
        .iter()
        .map(|comp| face_count(comp.vertices.len(), comp.edges.len()))
        .collect())
}

/// `Ϝ`: the nesting tree and face tuple of a valid embedding.
pub fn digamma(emb: &PlanarEmbedding) -> Result<(NestingTree, Vec<usize>)> {
    emb.validate()?;
    Ok((emb.nesting.clone(), emb.face_tuple.clone()))
}

/// `Ϝ⁻¹`: combine component embeddings (given together as one rotation
/// system) with a nesting tree and a face tuple.
pub fn digamma_inverse(tree: NestingTree, face_tuple: Vec<usize>, rotation: RotationSystem) -> Result<PlanarEmbedding> {
    let faces = component_face_counts(&rotation)?;
    let intervals = Intervals::from_face_counts(&faces);
    if tree.c() != faces.len() {
        return Err(Error::LengthMismatch {
            expected: faces.len(),
            got: tree.c(),
        });
    }
    for (h, &(p, l)) in tree.parent.iter().enumerate() {
        if (p == 0 && l != 0) || (p != 0 && (p > faces.len() || !intervals.interval(p).contains(&l))) {
            return Err(Error::LabelIntervalMismatch { parent: p, label: l });
        }
        if p == h + 1 {
            return Err(Error::MalformedTree(format!("component {p} is its own parent")));
        }
    }
    let emb = PlanarEmbedding {
        rotation,
        nesting: tree,
        face_tuple,
    };
    emb.validate()?;
    Ok(emb)
}

/// Bounds of the `a` and `b` segments: `c-1` copies of `Σ(F_i−1)+1`, then
/// `F_1..F_c`.
pub fn nesting_bounds(faces: &[usize]) -> (Vec<u64>, Vec<u64>) {
    let labels = Intervals::from_face_counts(faces).max_label() + 1;
    let a = vec![labels; faces.len().saturating_sub(1)];
    let b = faces.iter().map(|&f| f as u64).collect();
    (a, b)
}

/// `a` and `b` segments of an embedding.
pub fn nesting_rank(emb: &PlanarEmbedding) -> Result<(Vec<u64>, Vec<u64>)> {
    let (tree, ft) = digamma(emb)?;
    Ok((tree.encode()?, ft.iter().map(|&o| o as u64).collect()))
}

/// Embedding from the `a` and `b` segments and the component embeddings.
pub fn nesting_unrank(a: &[u64], b: &[u64], rotation: RotationSystem) -> Result<PlanarEmbedding> {
    let faces = component_face_counts(&rotation)?;
    let intervals = Intervals::from_face_counts(&faces);
    if b.len() != faces.len() {
        return Err(Error::LengthMismatch {
            expected: faces.len(),
            got: b.len(),
        });
    }
    let tree = NestingTree::decode(a, &intervals)?;
    digamma_inverse(tree, b.iter().map(|&o| o as usize).collect(), rotation)
}
