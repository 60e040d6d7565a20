//! Rotation systems, face tracing, face labels and the sphere embedding type
//! (rotation system plus nesting tree plus face tuple).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::codec::Intervals;
use crate::error::{Error, Result};
use crate::graph::{Component, EdgeId, Graph, VertexId};
use crate::nesting::NestingTree;

/// Counter-clockwise neighbor lists, one per vertex `1..=n`. Each list is kept
/// rotated so that it starts at its smallest neighbor, which makes equality of
/// rotation systems plain vector equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RotationSystem {
    rot: Vec<Vec<VertexId>>,
}

impl RotationSystem {
    /// `rot[v-1]` is the ccw cyclic order at `v`.
    pub fn new(mut rot: Vec<Vec<VertexId>>) -> Self {
        for list in &mut rot {
            canonical_cycle(list);
        }
        Self { rot }
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rot[v as usize - 1]
    }

    pub fn lists(&self) -> &[Vec<VertexId>] {
        &self.rot
    }

    /// The reflected embedding: every list reversed.
    pub fn mirror(&self) -> Self {
        Self::new(
            self.rot
                .iter()
                .map(|l| l.iter().rev().copied().collect())
                .collect(),
        )
    }

    /// Structural problems of the lists themselves (not planarity).
    pub fn structural_violations(&self) -> Vec<String> {
        let n = self.rot.len();
        let mut out = Vec::new();
        for (i, list) in self.rot.iter().enumerate() {
            let v = i as VertexId + 1;
            if list.is_empty() {
                out.push(format!("vertex {v} has an empty rotation"));
            }
            let mut sorted = list.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                out.push(format!("rotation of {v} repeats a neighbor"));
            }
            for &w in list {
                if w == v {
                    out.push(format!("rotation of {v} contains a self-loop"));
                } else if w == 0 || w as usize > n {
                    out.push(format!("rotation of {v} names unknown vertex {w}"));
                } else if !self.rot[w as usize - 1].contains(&v) {
                    out.push(format!("edge {v}-{w} missing from the rotation of {w}"));
                }
            }
        }
        out
    }

    /// The underlying graph.
    pub fn graph(&self) -> Result<Graph> {
        let problems = self.structural_violations();
        if !problems.is_empty() {
            return Err(Error::InvalidEmbedding(problems));
        }
        let edges = self.rot.iter().enumerate().flat_map(|(i, list)| {
            let v = i as VertexId + 1;
            list.iter().filter(move |&&w| v < w).map(move |&w| (v, w))
        });
        Graph::new(self.rot.len(), edges)
    }

    /// True when every list is a permutation of the neighbors of `v` in `g`.
    pub fn matches(&self, g: &Graph) -> bool {
        self.rot.len() == g.n()
            && g.vertices().all(|v| {
                let mut l = self.rotation(v).to_vec();
                l.sort_unstable();
                l == g.neighbors(v)
            })
    }

    fn darts(&self) -> DartIndex {
        DartIndex::new(&self.rot)
    }

    /// Faces of the whole rotation system. Every directed edge lies on exactly
    /// one face; after entering `v` through `(u, v)` the walk continues with
    /// the ccw predecessor of `u` at `v`, keeping the face on its left.
    pub fn trace_faces(&self) -> Vec<Face> {
        let idx = self.darts();
        let mut seen = vec![false; idx.total()];
        let mut faces = Vec::new();
        for v in 1..=self.rot.len() as VertexId {
            for i in 0..self.rot[v as usize - 1].len() {
                let d = idx.id(v, i);
                if !seen[d] {
                    faces.push(self.walk(&idx, &mut seen, v, i));
                }
            }
        }
        faces
    }

    /// Faces of one connected component, listed by ascending face label.
    pub fn component_faces(&self, component: &Component) -> Vec<LabeledFace> {
        let idx = self.darts();
        let mut seen = vec![false; idx.total()];
        let mut faces = Vec::new();
        for &v in &component.vertices {
            for i in 0..self.rot[v as usize - 1].len() {
                if !seen[idx.id(v, i)] {
                    let face = self.walk(&idx, &mut seen, v, i);
                    faces.push(LabeledFace {
                        label: face.label(component.id),
                        face,
                    });
                }
            }
        }
        faces.sort_by_key(|a| a.label);
        faces
    }

    fn walk(&self, idx: &DartIndex, seen: &mut [bool], v: VertexId, i: usize) -> Face {
        let mut darts = Vec::new();
        let (mut u, mut k) = (v, i);
        loop {
            let d = idx.id(u, k);
            if seen[d] {
                break;
            }
            seen[d] = true;
            let w = self.rot[u as usize - 1][k];
            darts.push((u, w));
            let list = &self.rot[w as usize - 1];
            let p = idx.position(w, u);
            k = (p + list.len() - 1) % list.len();
            u = w;
        }
        Face { darts }
    }
}

fn canonical_cycle(list: &mut [VertexId]) {
    if let Some((i, _)) = list.iter().enumerate().min_by_key(|&(_, &x)| x) {
        list.rotate_left(i);
    }
}

struct DartIndex {
    offset: Vec<usize>,
    // per vertex: (neighbor, position) sorted by neighbor
    pos: Vec<Vec<(VertexId, usize)>>,
}

impl DartIndex {
    fn new(rot: &[Vec<VertexId>]) -> Self {
        let mut offset = Vec::with_capacity(rot.len() + 1);
        let mut acc = 0;
        let mut pos = Vec::with_capacity(rot.len());
        for list in rot {
            offset.push(acc);
            acc += list.len();
            let mut p: Vec<(VertexId, usize)> = list.iter().copied().zip(0..).collect();
            p.sort_unstable();
            pos.push(p);
        }
        offset.push(acc);
        Self { offset, pos }
    }

    fn total(&self) -> usize {
        *self.offset.last().unwrap_or(&0)
    }

    fn id(&self, v: VertexId, i: usize) -> usize {
        self.offset[v as usize - 1] + i
    }

    fn position(&self, v: VertexId, w: VertexId) -> usize {
        let p = &self.pos[v as usize - 1];
        let k = p.partition_point(|&(x, _)| x < w);
        p[k].1
    }
}

/// One boundary walk, as directed edges `(from, to)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<(VertexId, VertexId)>,
}

impl Face {
    /// Label `(component, min EdgeId, side bit)`. The bit is 0 when the face
    /// lies right of the minimum edge traversed from `lo` to `hi`, that is,
    /// when the face walks the edge from `hi` to `lo`. A face on both sides
    /// of its minimum edge gets bit 0.
    pub fn label(&self, component: usize) -> FaceLabel {
        let edge = self
            .darts
            .iter()
            .map(|&(a, b)| EdgeId::new(a, b))
            .min()
            .expect("faces are nonempty");
        let right = self.darts.contains(&(edge.hi, edge.lo));
        FaceLabel {
            component,
            edge,
            bit: u8::from(!right),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceLabel {
    pub component: usize,
    pub edge: EdgeId,
    pub bit: u8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledFace {
    pub label: FaceLabel,
    pub face: Face,
}

/// Number of faces of a connected component with `n` vertices and `m` edges
/// in any sphere embedding.
pub fn face_count(n: usize, m: usize) -> usize {
    2 + m - n
}

/// A component embedding projected on the plane with a chosen outer face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneEmbedding {
    pub component: usize,
    pub outer_face: usize,
    pub faces: Vec<LabeledFace>,
}

/// Marks face `outer_face` (0-based identifier) of a component as outer.
pub fn project_to_plane(rot: &RotationSystem, component: &Component, outer_face: usize) -> Result<PlaneEmbedding> {
    let faces = rot.component_faces(component);
    if outer_face >= faces.len() {
        return Err(Error::UnknownFace(outer_face));
    }
    Ok(PlaneEmbedding {
        component: component.id,
        outer_face,
        faces,
    })
}

/// Planar embedding on the sphere of a possibly disconnected graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanarEmbedding {
    pub rotation: RotationSystem,
    pub nesting: NestingTree,
    pub face_tuple: Vec<usize>,
}

impl PlanarEmbedding {
    /// Embedding of a connected graph: trivial nesting and outer face `o_1`.
    pub fn connected(rotation: RotationSystem, outer_face: usize) -> Self {
        Self {
            rotation,
            nesting: NestingTree::star(1),
            face_tuple: vec![outer_face],
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        self.rotation.graph()
    }

    /// All violated invariants, or `Ok` for a valid embedding.
    pub fn validate(&self) -> Result<()> {
        let problems = self.violations();
        if problems.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidEmbedding(problems))
        }
    }

    /// Like [`PlanarEmbedding::validate`], additionally requiring the
    /// underlying graph to be `g`.
    pub fn validate_for(&self, g: &Graph) -> Result<()> {
        if !self.rotation.matches(g) {
            return Err(Error::GraphMismatch);
        }
        self.validate()
    }

    pub fn violations(&self) -> Vec<String> {
        let mut out = self.rotation.structural_violations();
        if !out.is_empty() {
            return out;
        }
        let g = match self.rotation.graph() {
            Ok(g) => g,
            Err(e) => return vec![e.to_string()],
        };
        let comps = g.connected_components();
        let mut faces = Vec::with_capacity(comps.len());
        for comp in &comps {
            let f = self.rotation.component_faces(comp).len();
            let expect = face_count(comp.vertices.len(), comp.edges.len());
            if f != expect {
                out.push(format!(
                    "component {} has {} faces, Euler's formula needs {}",
                    comp.id, f, expect
                ));
            }
            faces.push(expect);
        }
        out.extend(self.nesting.violations(&Intervals::from_face_counts(&faces)));
        if self.face_tuple.len() != comps.len() {
            out.push(format!(
                "face tuple has {} entries for {} components",
                self.face_tuple.len(),
                comps.len()
            ));
        } else {
            for (i, (&o, &f)) in self.face_tuple.iter().zip(&faces).enumerate() {
                if o >= f {
                    out.push(format!("face tuple entry o_{} = {} is not below {}", i + 1, o, f));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> EmbeddingJson {
        let rotations = self
            .rotation
            .lists()
            .iter()
            .enumerate()
            .map(|(i, l)| (i as VertexId + 1, l.clone()))
            .collect();
        EmbeddingJson {
            rotations,
            nesting: self.nesting.triples(),
            face_tuple: self.face_tuple.clone(),
        }
    }

    /// Canonical text form; injective on embeddings.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("embedding serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: EmbeddingJson = serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))?;
        Self::try_from(raw)
    }
}

/// `e1 == e2` for embeddings of the same graph.
pub fn embeddings_equal(e1: &PlanarEmbedding, e2: &PlanarEmbedding) -> Result<bool> {
    if e1.graph()? != e2.graph()? {
        return Err(Error::GraphMismatch);
    }
    Ok(e1 == e2)
}

/// Wire form of an embedding.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct EmbeddingJson {
    pub rotations: BTreeMap<VertexId, Vec<VertexId>>,
    pub nesting: Vec<(usize, usize, u64)>,
    pub face_tuple: Vec<usize>,
}

impl TryFrom<EmbeddingJson> for PlanarEmbedding {
    type Error = Error;

    fn try_from(raw: EmbeddingJson) -> Result<Self> {
        let n = raw.rotations.len();
        let mut rot = vec![Vec::new(); n];
        for (v, list) in raw.rotations {
            if v == 0 || v as usize > n {
                return Err(Error::Malformed(format!("rotation keys must be exactly 1..{n}")));
            }
            rot[v as usize - 1] = list;
        }
        let nesting = NestingTree::from_triples(&raw.nesting)?;
        Ok(Self {
            rotation: RotationSystem::new(rot),
            nesting,
            face_tuple: raw.face_tuple,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(lists: &[&[u32]]) -> RotationSystem {
        RotationSystem::new(lists.iter().map(|l| l.to_vec()).collect())
    }

    fn k4() -> RotationSystem {
        // 4 in the middle of triangle 1-2-3 drawn counter-clockwise
        rs(&[&[2, 4, 3], &[3, 4, 1], &[1, 4, 2], &[1, 2, 3]])
    }

    #[test]
    fn single_edge_has_one_face() {
        let r = rs(&[&[2], &[1]]);
        let faces = r.trace_faces();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].darts.len(), 2);
    }

    #[test]
    fn triangle_faces_and_labels() {
        let r = rs(&[&[2, 3], &[3, 1], &[1, 2]]);
        let g = r.graph().unwrap();
        let comp = &g.connected_components()[0];
        let faces = r.component_faces(comp);
        assert_eq!(faces.len(), 2);
        assert_eq!(faces[0].label.edge, EdgeId::new(1, 2));
        assert_eq!(faces[0].label.bit, 0);
        assert_eq!(faces[1].label.bit, 1);
        assert!(faces[0].face.darts.contains(&(2, 1)));
    }

    #[test]
    fn k4_has_four_faces() {
        assert_eq!(k4().trace_faces().len(), 4);
        let e = PlanarEmbedding::connected(k4(), 0);
        e.validate().unwrap();
    }

    #[test]
    fn swapped_k4_rotation_fails_euler() {
        let mut lists = k4().lists().to_vec();
        lists[0].swap(0, 1);
        let r = RotationSystem::new(lists);
        assert_ne!(r.trace_faces().len(), 4);
        let e = PlanarEmbedding::connected(r, 0);
        let err = e.validate().unwrap_err();
        assert!(err.to_string().contains("Euler"));
    }

    #[test]
    fn face_tuple_range() {
        let r = rs(&[&[2, 3], &[3, 1], &[1, 2]]);
        assert!(PlanarEmbedding::connected(r.clone(), 1).validate().is_ok());
        assert!(PlanarEmbedding::connected(r, 2).validate().is_err());
    }

    #[test]
    fn mirror_is_distinct() {
        let a = PlanarEmbedding::connected(k4(), 0);
        let b = PlanarEmbedding::connected(k4().mirror(), 0);
        assert!(!embeddings_equal(&a, &b).unwrap());
        assert!(embeddings_equal(&a, &a).unwrap());
        let tri = PlanarEmbedding::connected(rs(&[&[2, 3], &[3, 1], &[1, 2]]), 0);
        assert_eq!(embeddings_equal(&a, &tri), Err(Error::GraphMismatch));
    }

    #[test]
    fn projection_marker() {
        let r = rs(&[&[2, 3], &[3, 1], &[1, 2]]);
        let comp = &r.graph().unwrap().connected_components()[0];
        assert_eq!(project_to_plane(&r, comp, 1).unwrap().outer_face, 1);
        assert_eq!(project_to_plane(&r, comp, 2), Err(Error::UnknownFace(2)));
    }

    #[test]
    fn json_roundtrip() {
        let e = PlanarEmbedding::connected(k4(), 3);
        let s = e.to_json_string();
        assert_eq!(
            s,
            r#"{"rotations":{"1":[2,4,3],"2":[1,3,4],"3":[1,4,2],"4":[1,2,3]},"nesting":[[0,1,0]],"face_tuple":[3]}"#
        );
        assert_eq!(PlanarEmbedding::from_json_str(&s).unwrap(), e);
    }
}
