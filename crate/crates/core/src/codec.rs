//! Numeric bijections: mixed radix tuples, permutations, rooted Prüfer codes
//! and the label preprocessing used by the nesting-tree code.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Tuple `⟨b_1..b_n⟩` with `0 <= b_i < B_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedTuple {
    pub values: Vec<BigUint>,
    pub bounds: Vec<BigUint>,
}

impl BoundedTuple {
    pub fn new(values: Vec<BigUint>, bounds: Vec<BigUint>) -> Result<Self> {
        check_bounds(&values, &bounds)?;
        Ok(Self { values, bounds })
    }

    pub fn from_u64(values: &[u64], bounds: &[u64]) -> Result<Self> {
        Self::new(
            values.iter().map(|&x| BigUint::from(x)).collect(),
            bounds.iter().map(|&x| BigUint::from(x)).collect(),
        )
    }

    pub fn rank(&self) -> BigUint {
        mixed_radix_rank(&self.values, &self.bounds)
    }
}

pub(crate) fn check_bounds(values: &[BigUint], bounds: &[BigUint]) -> Result<()> {
    if values.len() != bounds.len() {
        return Err(Error::LengthMismatch {
            expected: bounds.len(),
            got: values.len(),
        });
    }
    for (i, (v, b)) in values.iter().zip(bounds).enumerate() {
        if v >= b {
            return Err(Error::BoundViolation {
                index: i,
                value: v.to_string(),
                bound: b.to_string(),
            });
        }
    }
    Ok(())
}

/// `ψ`: rank of a bounded tuple, the last element being least significant.
pub fn tuple_rank(values: &[BigUint], bounds: &[BigUint]) -> Result<BigUint> {
    check_bounds(values, bounds)?;
    Ok(mixed_radix_rank(values, bounds))
}

/// `ψ⁻¹`.
pub fn tuple_unrank(rank: &BigUint, bounds: &[BigUint]) -> Result<Vec<BigUint>> {
    let total = product(bounds);
    if *rank >= total {
        return Err(Error::RankOutOfRange {
            rank: rank.to_string(),
            count: total.to_string(),
        });
    }
    let mut out = Vec::with_capacity(bounds.len());
    mixed_radix_unrank(rank.clone(), bounds, &mut out);
    Ok(out)
}

pub fn product(bounds: &[BigUint]) -> BigUint {
    if bounds.len() <= 16 {
        return bounds.iter().fold(BigUint::one(), |acc, b| acc * b);
    }
    let mid = bounds.len() / 2;
    product(&bounds[..mid]) * product(&bounds[mid..])
}

// Split in halves so the big multiplications and divisions stay balanced;
// a left-to-right Horner scheme is quadratic on long tuples.
fn mixed_radix_rank(values: &[BigUint], bounds: &[BigUint]) -> BigUint {
    rank_range(values, bounds).0
}

fn rank_range(values: &[BigUint], bounds: &[BigUint]) -> (BigUint, BigUint) {
    if values.len() <= 16 {
        let mut r = BigUint::zero();
        let mut p = BigUint::one();
        for (v, b) in values.iter().zip(bounds) {
            r = r * b + v;
            p *= b;
        }
        return (r, p);
    }
    let mid = values.len() / 2;
    let (rl, pl) = rank_range(&values[..mid], &bounds[..mid]);
    let (rr, pr) = rank_range(&values[mid..], &bounds[mid..]);
    (rl * &pr + rr, pl * pr)
}

fn mixed_radix_unrank(rank: BigUint, bounds: &[BigUint], out: &mut Vec<BigUint>) {
    if bounds.len() <= 16 {
        let start = out.len();
        let mut r = rank;
        for b in bounds.iter().rev() {
            out.push(&r % b);
            r /= b;
        }
        out[start..].reverse();
        return;
    }
    let mid = bounds.len() / 2;
    let right = product(&bounds[mid..]);
    let q = &rank / &right;
    let rem = rank % &right;
    mixed_radix_unrank(q, &bounds[..mid], out);
    mixed_radix_unrank(rem, &bounds[mid..], out);
}

pub fn factorial(k: usize) -> BigUint {
    let terms: Vec<BigUint> = (1..=k as u64).map(BigUint::from).collect();
    product(&terms)
}

fn raw_perm_unrank(k: usize, rank: &BigUint) -> Vec<usize> {
    // Myrvold-Ruskey unrank1; the swap digits are the mixed radix digits of
    // `rank` with bounds 2..=k, the digit for bound k being least significant.
    let bounds: Vec<BigUint> = (2..=k as u64).map(BigUint::from).collect();
    let mut digits = Vec::with_capacity(bounds.len());
    mixed_radix_unrank(rank.clone(), &bounds, &mut digits);
    let mut pi: Vec<usize> = (0..k).collect();
    for n in (2..=k).rev() {
        let d = digits[n - 2].to_usize().unwrap_or(0);
        pi.swap(n - 1, d);
    }
    pi
}

fn raw_perm_rank(pi: &[usize]) -> BigUint {
    let k = pi.len();
    let mut pi = pi.to_vec();
    let mut inv = vec![0usize; k];
    for (i, &x) in pi.iter().enumerate() {
        inv[x] = i;
    }
    let mut digits = vec![BigUint::zero(); k.saturating_sub(1)];
    for n in (2..=k).rev() {
        let s = pi[n - 1];
        let j = inv[n - 1];
        pi.swap(n - 1, j);
        inv.swap(s, n - 1);
        digits[n - 2] = BigUint::from(s);
    }
    let bounds: Vec<BigUint> = (2..=k as u64).map(BigUint::from).collect();
    mixed_radix_rank(&digits, &bounds)
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

fn inverse(a: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x] = i;
    }
    out
}

fn is_permutation(sigma: &[usize]) -> bool {
    let mut seen = vec![false; sigma.len()];
    for &x in sigma {
        if x >= sigma.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// Rank of a permutation of `0..k` in `[0, k!)`, with the identity at 0.
pub fn perm_rank(sigma: &[usize]) -> Result<BigUint> {
    if !is_permutation(sigma) {
        return Err(Error::NotAPermutation(sigma.len()));
    }
    let rho0 = raw_perm_unrank(sigma.len(), &BigUint::zero());
    Ok(raw_perm_rank(&compose(sigma, &rho0)))
}

pub fn perm_unrank(k: usize, rank: &BigUint) -> Result<Vec<usize>> {
    let total = factorial(k);
    if *rank >= total {
        return Err(Error::RankOutOfRange {
            rank: rank.to_string(),
            count: total.to_string(),
        });
    }
    let rho0 = raw_perm_unrank(k, &BigUint::zero());
    Ok(compose(&raw_perm_unrank(k, rank), &inverse(&rho0)))
}

/// Labeled tree on `1..=n` with a designated root; `parent[root] == 0`.
/// Index 0 of `parent` is unused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    pub parent: Vec<u32>,
}

impl RootedTree {
    pub fn n(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn root(&self) -> u32 {
        (1..self.parent.len()).find(|&v| self.parent[v] == 0).unwrap_or(0) as u32
    }

    pub fn from_edges(n: usize, root: u32, edges: &[(u32, u32)]) -> Result<Self> {
        if edges.len() + 1 != n || root == 0 || root as usize > n {
            return Err(Error::MalformedTree("need n-1 edges and a root in 1..=n".into()));
        }
        let mut adj = vec![Vec::new(); n + 1];
        for &(a, b) in edges {
            if a == 0 || b == 0 || a as usize > n || b as usize > n || a == b {
                return Err(Error::MalformedTree(format!("bad edge {a}-{b}")));
            }
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        let mut parent = vec![u32::MAX; n + 1];
        parent[0] = 0;
        parent[root as usize] = 0;
        let mut stack = vec![root];
        let mut seen = 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x as usize] {
                if y != root && parent[y as usize] == u32::MAX {
                    parent[y as usize] = x;
                    seen += 1;
                    stack.push(y);
                }
            }
        }
        if seen != n {
            return Err(Error::MalformedTree("edges do not form a tree".into()));
        }
        Ok(Self { parent })
    }

    fn check(&self) -> Result<()> {
        let n = self.n();
        if n < 2 {
            return Err(Error::MalformedTree("need at least two nodes".into()));
        }
        let roots = (1..=n).filter(|&v| self.parent[v] == 0).count();
        if roots != 1 || self.parent[1..].iter().any(|&p| p as usize > n) {
            return Err(Error::MalformedTree("parent array is not a rooted tree".into()));
        }
        // every node must reach the root
        let mut state = vec![0u8; n + 1];
        for s in 1..=n {
            let mut path = Vec::new();
            let mut x = s;
            while x != 0 && state[x] == 0 {
                state[x] = 1;
                path.push(x);
                x = self.parent[x] as usize;
            }
            if x != 0 && state[x] == 1 {
                return Err(Error::MalformedTree("cycle".into()));
            }
            for p in path {
                state[p] = 2;
            }
        }
        Ok(())
    }
}

/// Prüfer code of a rooted tree: the `n-2` labels of the classic code
/// followed by the root label.
pub fn prufer_rank(tree: &RootedTree) -> Result<Vec<u32>> {
    tree.check()?;
    let n = tree.n();
    let mut adj = vec![Vec::new(); n + 1];
    for v in 1..=n {
        let p = tree.parent[v];
        if p != 0 {
            adj[v].push(p);
            adj[p as usize].push(v as u32);
        }
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n + 1];
    let mut leaves: BinaryHeap<Reverse<u32>> = (1..=n as u32).filter(|&v| degree[v as usize] == 1).map(Reverse).collect();
    let mut seq = Vec::with_capacity(n - 1);
    for _ in 0..n - 2 {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        removed[leaf as usize] = true;
        let nb = adj[leaf as usize].iter().copied().find(|&w| !removed[w as usize]).expect("leaf has a neighbor");
        seq.push(nb);
        degree[nb as usize] -= 1;
        if degree[nb as usize] == 1 {
            leaves.push(Reverse(nb));
        }
    }
    seq.push(tree.root());
    Ok(seq)
}

pub fn prufer_unrank(seq: &[u32]) -> Result<RootedTree> {
    if seq.is_empty() {
        return Err(Error::MalformedTree("need at least two nodes".into()));
    }
    let n = seq.len() + 1;
    if seq.iter().any(|&x| x == 0 || x as usize > n) {
        return Err(Error::MalformedTree("label outside 1..=n".into()));
    }
    let body = &seq[..n - 2];
    let root = seq[n - 2];
    let mut degree = vec![1usize; n + 1];
    for &x in body {
        degree[x as usize] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<u32>> = (1..=n as u32).filter(|&v| degree[v as usize] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in body {
        let Reverse(leaf) = leaves.pop().expect("prufer decode always finds a leaf");
        edges.push((leaf, x));
        degree[x as usize] -= 1;
        if degree[x as usize] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().expect("two nodes remain");
    let Reverse(b) = leaves.pop().expect("two nodes remain");
    edges.push((a, b));
    RootedTree::from_edges(n, root, &edges)
}

/// Consecutive label intervals `I_1..I_c` partitioning `1..=Σ(F_i − 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intervals {
    /// First label of each interval; `starts[h-1]` belongs to component `h`.
    starts: Vec<u64>,
    sizes: Vec<u64>,
}

impl Intervals {
    pub fn from_face_counts(faces: &[usize]) -> Self {
        let mut starts = Vec::with_capacity(faces.len());
        let mut sizes = Vec::with_capacity(faces.len());
        let mut next = 1u64;
        for &f in faces {
            let size = f.saturating_sub(1) as u64;
            starts.push(next);
            sizes.push(size);
            next += size;
        }
        Self { starts, sizes }
    }

    pub fn len(&self) -> usize {
        self.starts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.starts.is_empty()
    }

    /// Largest label, `Σ(F_i − 1)`.
    pub fn max_label(&self) -> u64 {
        self.sizes.iter().sum()
    }

    /// Interval `I_h` as a half-open range (empty when `F_h = 1`).
    pub fn interval(&self, h: usize) -> std::ops::Range<u64> {
        let s = self.starts[h - 1];
        s..s + self.sizes[h - 1]
    }

    /// Component `h` whose interval holds `label`; `0` for label 0.
    pub fn owner(&self, label: u64) -> Result<usize> {
        if label == 0 {
            return Ok(0);
        }
        if label > self.max_label() {
            return Err(Error::LabelOutOfRange(label));
        }
        let i = self.starts.partition_point(|&s| s <= label);
        // skip empty intervals that share their start with the owner
        let mut h = i;
        while self.sizes[h - 1] == 0 {
            h -= 1;
        }
        Ok(h)
    }
}

/// `τ'` and the degree counters: `delta[0]` counts occurrences of 0 plus
/// two, `delta[h]` occurrences of `h` plus one.
pub fn nesting_tuple_preprocess(tau: &[u64], intervals: &Intervals) -> Result<(Vec<usize>, Vec<usize>)> {
    let c = intervals.len();
    let mut prime = Vec::with_capacity(tau.len());
    let mut delta = vec![1usize; c + 1];
    delta[0] = 2;
    for &t in tau {
        let h = intervals.owner(t)?;
        prime.push(h);
        delta[h] += 1;
    }
    Ok((prime, delta))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn small_mixed_radix() {
        assert_eq!(tuple_rank(&big(&[1, 2]), &big(&[3, 4])).unwrap(), BigUint::from(6u32));
        assert_eq!(tuple_unrank(&BigUint::from(11u32), &big(&[3, 4])).unwrap(), big(&[2, 3]));
        assert_eq!(tuple_rank(&big(&[0, 0, 0]), &big(&[5, 1, 9])).unwrap(), BigUint::zero());
        assert!(matches!(tuple_rank(&big(&[3]), &big(&[3])), Err(Error::BoundViolation { .. })));
        assert!(matches!(tuple_unrank(&BigUint::from(12u32), &big(&[3, 4])), Err(Error::RankOutOfRange { .. })));
    }

    #[test]
    fn lexicographic_position() {
        // enumerate the 12 tuples lexicographically and check positions
        let bounds = big(&[3, 4]);
        let mut pos = 0u32;
        for a in 0..3u64 {
            for b in 0..4u64 {
                assert_eq!(tuple_rank(&big(&[a, b]), &bounds).unwrap(), BigUint::from(pos));
                pos += 1;
            }
        }
    }

    #[test]
    fn long_tuple_roundtrip() {
        let bounds: Vec<BigUint> = (0..500u64).map(|i| BigUint::from(i % 7 + 1)).collect();
        let values: Vec<BigUint> = (0..500u64).map(|i| BigUint::from((i * 31) % (i % 7 + 1))).collect();
        let r = tuple_rank(&values, &bounds).unwrap();
        assert_eq!(tuple_unrank(&r, &bounds).unwrap(), values);
    }

    #[test]
    fn identity_ranks_to_zero() {
        for k in 0..=10 {
            let id: Vec<usize> = (0..k).collect();
            assert_eq!(perm_rank(&id).unwrap(), BigUint::zero(), "k={k}");
            assert_eq!(perm_unrank(k, &BigUint::zero()).unwrap(), id);
        }
    }

    #[test]
    fn rejects_non_permutations() {
        assert_eq!(perm_rank(&[0, 0]), Err(Error::NotAPermutation(2)));
        assert_eq!(perm_rank(&[1, 2]), Err(Error::NotAPermutation(2)));
    }

    #[test]
    fn two_node_rooted_tree() {
        let t = RootedTree::from_edges(2, 2, &[(1, 2)]).unwrap();
        assert_eq!(prufer_rank(&t).unwrap(), vec![2]);
        assert_eq!(prufer_unrank(&[2]).unwrap(), t);
    }

    #[test]
    fn rooted_prufer_example() {
        let t = RootedTree::from_edges(6, 5, &[(2, 4), (1, 3), (1, 5), (4, 5), (4, 6)]).unwrap();
        assert_eq!(prufer_rank(&t).unwrap(), vec![4, 1, 5, 4, 5]);
        assert_eq!(prufer_unrank(&[4, 1, 5, 4, 5]).unwrap(), t);
    }

    #[test]
    fn nesting_preprocess() {
        let iv = Intervals::from_face_counts(&[4, 3, 5, 5, 3]);
        assert_eq!(iv.interval(1), 1..4);
        assert_eq!(iv.interval(5), 14..16);
        let (p, _) = nesting_tuple_preprocess(&[10, 3, 0, 13], &iv).unwrap();
        assert_eq!(p, vec![4, 1, 0, 4]);
        let (p, d) = nesting_tuple_preprocess(&[0, 0], &iv).unwrap();
        assert_eq!(p, vec![0, 0]);
        assert_eq!(d[0], 4);
        let iv = Intervals::from_face_counts(&[3, 1]);
        let (p, d) = nesting_tuple_preprocess(&[1], &iv).unwrap();
        assert_eq!(p, vec![1]);
        assert_eq!((d[1], d[0]), (2, 2));
        assert_eq!(nesting_tuple_preprocess(&[3], &iv), Err(Error::LabelOutOfRange(3)));
    }

    #[test]
    fn owner_skips_empty_intervals() {
        let iv = Intervals::from_face_counts(&[2, 1, 1, 3]);
        assert_eq!(iv.owner(1).unwrap(), 1);
        assert_eq!(iv.owner(2).unwrap(), 4);
        assert_eq!(iv.owner(3).unwrap(), 4);
    }
}
