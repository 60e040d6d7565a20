//! Arrangements of the blocks around a cut-vertex: the tuple
//! `c_1..c_b, d_1..d_{b-2}` and the merge that realizes it.
//!
//! Blocks are given in the pinned order (ascending minimum neighbor of the
//! cut-vertex) as counter-clockwise cyclic neighbor lists at the cut-vertex.
//!
//! Every block but the first hangs right after one edge of another block,
//! its hang point. Block 2 starts after `last_1`. Step `j` takes the
//! `d_{j-2}`-th free edge `x` in label order. When `x` lies outside the class
//! of block `j`, block `j` hangs at `x`. Otherwise block `j` takes the hang
//! point of block 2 and block 2 moves to `x`.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::union_find::UnionFind;

const NONE: usize = usize::MAX;

/// Number of arrangements: `Π δ_j · Π_{j=1}^{b-2} (δ − j)`.
pub fn arrangement_count(degrees: &[usize]) -> BigUint {
    let total: usize = degrees.iter().sum();
    let mut c = BigUint::from(1u32);
    for &d in degrees {
        c *= d;
    }
    for j in 1..=degrees.len().saturating_sub(2) {
        c *= total - j;
    }
    c
}

/// Bounds of the `c` and `d` values.
pub fn bounds(degrees: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let total: usize = degrees.iter().sum();
    let d = (1..=degrees.len().saturating_sub(2)).map(|j| total - j).collect();
    (degrees.to_vec(), d)
}

/// Local edge numbering at the cut-vertex.
struct Star {
    nb: Vec<VertexId>,
    block: Vec<usize>,
    index: HashMap<VertexId, usize>,
}

impl Star {
    fn new(blocks: &[Vec<VertexId>]) -> Result<Self> {
        if blocks.len() < 2 {
            return Err(Error::Malformed("a cut-vertex needs two blocks".into()));
        }
        let mut nb = Vec::new();
        let mut block = Vec::new();
        let mut index = HashMap::new();
        for (j, list) in blocks.iter().enumerate() {
            if list.is_empty() {
                return Err(Error::Malformed(format!("block {j} has no edge at the cut-vertex")));
            }
            for &y in list {
                if index.insert(y, nb.len()).is_some() {
                    return Err(Error::Malformed(format!("neighbor {y} appears twice")));
                }
                nb.push(y);
                block.push(j);
            }
        }
        Ok(Self { nb, block, index })
    }

    /// Block `list` as local ids, rotated to start at `first`.
    fn rotated(&self, list: &[VertexId], first: usize) -> Vec<usize> {
        let at = list.iter().position(|&y| self.index[&y] == first).expect("first edge in block");
        (0..list.len()).map(|i| self.index[&list[(at + i) % list.len()]]).collect()
    }
}

/// Label of every edge: block 1, block 2, the other blocks without their
/// first edges, then the first edges of blocks `b..3`.
fn labels(l: &[Vec<usize>], total: usize) -> Vec<usize> {
    let mut label = vec![NONE; total];
    let mut next = 0;
    let mut put = |x: usize| {
        label[x] = next;
        next += 1;
    };
    l[0].iter().chain(&l[1]).for_each(|&x| put(x));
    for lj in &l[2..] {
        lj[1..].iter().for_each(|&x| put(x));
    }
    for lj in l[2..].iter().rev() {
        put(lj[0]);
    }
    label
}

/// Free labels, supporting rank and select.
struct Free {
    tree: Vec<usize>,
}

impl Free {
    fn full(n: usize) -> Self {
        let mut tree = vec![0; n + 1];
        for i in 1..=n {
            tree[i] += 1;
            let j = i + (i & i.wrapping_neg());
            if j <= n {
                tree[j] += tree[i];
            }
        }
        Self { tree }
    }

    fn take(&mut self, label: usize) {
        let mut i = label + 1;
        while i < self.tree.len() {
            self.tree[i] -= 1;
            i += i & i.wrapping_neg();
        }
    }

    /// Free labels below `label`.
    fn rank(&self, label: usize) -> usize {
        let mut i = label;
        let mut s = 0;
        while i > 0 {
            s += self.tree[i];
            i -= i & i.wrapping_neg();
        }
        s
    }

    /// The `k`-th free label.
    fn select(&self, mut k: usize) -> usize {
        let n = self.tree.len() - 1;
        let mut pos = 0;
        let mut step = n.next_power_of_two();
        while step > 0 {
            if pos + step <= n && self.tree[pos + step] <= k {
                pos += step;
                k -= self.tree[pos];
            }
            step >>= 1;
        }
        pos
    }
}

fn sorted_rank(list: &[VertexId], y: VertexId) -> usize {
    list.iter().filter(|&&z| z < y).count()
}

/// `φ_v⁻¹`: the counter-clockwise order at the cut-vertex, starting at
/// `first_1`.
pub fn phi_v_inverse(blocks: &[Vec<VertexId>], c: &[usize], d: &[usize]) -> Result<Vec<VertexId>> {
    let star = Star::new(blocks)?;
    let b = blocks.len();
    let total = star.nb.len();
    let degrees: Vec<usize> = blocks.iter().map(Vec::len).collect();
    let (cb, db) = bounds(&degrees);
    check(c, &cb)?;
    check(d, &db)?;
    let l: Vec<Vec<usize>> = (0..b)
        .map(|j| {
            let mut s = blocks[j].clone();
            s.sort_unstable();
            star.rotated(&blocks[j], star.index[&s[c[j]]])
        })
        .collect();
    let label = labels(&l, total);
    let mut by_label = vec![0; total];
    for (x, &lb) in label.iter().enumerate() {
        by_label[lb] = x;
    }

    let mut hang = vec![NONE; b];
    hang[1] = *l[0].last().expect("nonempty");
    let mut free = Free::full(total);
    free.take(label[hang[1]]);
    let mut uf = UnionFind::new(b);
    uf.union(0, 1)?;
    for j in 2..b {
        let x = by_label[free.select(d[j - 2])];
        free.take(label[x]);
        if uf.find(star.block[x])? != uf.find(j)? {
            hang[j] = x;
            uf.union(j, star.block[x])?;
        } else {
            hang[j] = hang[1];
            hang[1] = x;
            uf.union(j, 0)?;
        }
    }

    let mut hung = vec![NONE; total];
    for j in 1..b {
        hung[hang[j]] = j;
    }
    let mut out = Vec::with_capacity(total);
    let mut stack = vec![(0usize, 0usize)];
    while let Some((j, i)) = stack.pop() {
        if i == l[j].len() {
            continue;
        }
        let y = l[j][i];
        out.push(star.nb[y]);
        stack.push((j, i + 1));
        if hung[y] != NONE {
            stack.push((hung[y], 0));
        }
    }
    debug_assert_eq!(out.len(), total);
    Ok(out)
}

/// `φ_v`: the tuple of the counter-clockwise order `merged` at the
/// cut-vertex.
pub fn phi_v(blocks: &[Vec<VertexId>], merged: &[VertexId]) -> Result<(Vec<usize>, Vec<usize>)> {
    let star = Star::new(blocks)?;
    let b = blocks.len();
    let total = star.nb.len();
    let mismatch = || Error::InvalidEmbedding(vec!["rotation at the cut-vertex does not merge its blocks".into()]);
    if merged.len() != total {
        return Err(mismatch());
    }
    let mut at = Vec::with_capacity(total);
    let mut seen = vec![false; total];
    for y in merged {
        let &x = star.index.get(y).ok_or_else(mismatch)?;
        if std::mem::replace(&mut seen[x], true) {
            return Err(mismatch());
        }
        at.push(x);
    }

    // first_1 is the first edge of block 1 after all edges of block 2
    let start = at.iter().rposition(|&x| star.block[x] == 1).expect("block 2 present");
    let f1 = (1..=total)
        .map(|i| at[(start + i) % total])
        .find(|&x| star.block[x] == 0)
        .expect("block 1 present");
    let off = at.iter().position(|&x| x == f1).expect("present");
    let lin: Vec<usize> = (0..total).map(|i| at[(off + i) % total]).collect();

    let mut l: Vec<Vec<usize>> = vec![Vec::new(); b];
    for &x in &lin {
        l[star.block[x]].push(x);
    }
    for j in 0..b {
        if star.rotated(&blocks[j], l[j][0]) != l[j] {
            return Err(mismatch());
        }
    }
    let c: Vec<usize> = (0..b).map(|j| sorted_rank(&blocks[j], star.nb[l[j][0]])).collect();

    // hang points, read off the linear order; the spans must nest
    let mut hang = vec![NONE; b];
    let mut parent = vec![NONE; b];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for (p, &x) in lin.iter().enumerate() {
        let j = star.block[x];
        if x == l[j][0] {
            if j != 0 {
                hang[j] = lin[p - 1];
                parent[j] = star.block[lin[p - 1]];
            }
            stack.push((j, 0));
        }
        let top = stack.last_mut().ok_or_else(mismatch)?;
        if top.0 != j {
            return Err(mismatch());
        }
        top.1 += 1;
        if top.1 == l[j].len() {
            stack.pop();
        }
    }
    if !stack.is_empty() || hang[1] == NONE || parent_chain_starts_inside_block_1(&parent, &hang, &l) {
        return Err(mismatch());
    }

    // the path from block 1 down to block 2
    let mut path = vec![1];
    while let Some(&k) = path.last() {
        if parent[k] == NONE {
            break;
        }
        path.push(parent[k]);
    }
    path.reverse();
    let mut on_path = vec![NONE; b];
    for (i, &k) in path.iter().enumerate() {
        on_path[k] = i;
    }

    let label = labels(&l, total);
    let mut free = Free::full(total);
    let mut taken = vec![false; total];
    let mut cur = *l[0].last().expect("nonempty");
    free.take(label[cur]);
    taken[cur] = true;
    let mut uf = UnionFind::new(b);
    uf.union(0, 1)?;
    let mut d = Vec::with_capacity(b - 2);
    for j in 2..b {
        let x = if hang[j] == cur {
            let rj = uf.find(j)?;
            let mut i = on_path[j];
            if i == NONE {
                return Err(mismatch());
            }
            loop {
                i += 1;
                let k = path[i];
                if k == 1 || uf.find(k)? != rj {
                    break hang[k];
                }
            }
        } else {
            if uf.find(star.block[hang[j]])? == uf.find(j)? {
                return Err(mismatch());
            }
            hang[j]
        };
        if taken[x] {
            return Err(mismatch());
        }
        d.push(free.rank(label[x]));
        free.take(label[x]);
        taken[x] = true;
        if hang[j] == cur {
            cur = x;
            uf.union(j, 0)?;
        } else {
            uf.union(j, star.block[x])?;
        }
    }
    Ok((c, d))
}

/// Block 2 must not sit inside an inner angle of block 1.
fn parent_chain_starts_inside_block_1(parent: &[usize], hang: &[usize], l: &[Vec<usize>]) -> bool {
    let mut k = 1;
    while parent[k] != 0 {
        k = parent[k];
    }
    hang[k] != *l[0].last().expect("nonempty")
}

fn check(values: &[usize], bounds: &[usize]) -> Result<()> {
    if values.len() != bounds.len() {
        return Err(Error::LengthMismatch {
            expected: bounds.len(),
            got: values.len(),
        });
    }
    for (i, (&v, &b)) in values.iter().zip(bounds).enumerate() {
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

#[cfg(test)]
mod tests {
    use std::collections::{BTreeMap, BTreeSet};

    use rand::{Rng, SeedableRng};

    use super::*;
    use crate::oracle::enumerate_arrangements;
    use crate::planarity::planar_embedding;

    fn canonical(order: &[VertexId]) -> Vec<VertexId> {
        let i = (0..order.len()).min_by_key(|&i| order[i]).unwrap();
        (0..order.len()).map(|k| order[(i + k) % order.len()]).collect()
    }

    fn all_tuples(cb: &[usize], db: &[usize]) -> Vec<(Vec<usize>, Vec<usize>)> {
        let bounds: Vec<usize> = cb.iter().chain(db).copied().collect();
        let mut out = Vec::new();
        let mut t = vec![0; bounds.len()];
        loop {
            out.push((t[..cb.len()].to_vec(), t[cb.len()..].to_vec()));
            let mut i = 0;
            while i < t.len() {
                t[i] += 1;
                if t[i] < bounds[i] {
                    break;
                }
                t[i] = 0;
                i += 1;
            }
            if i == t.len() {
                return out;
            }
        }
    }

    /// Blocks around vertex 1, each a small embedded biconnected graph or an
    /// edge. Returns the block rotations sorted by the pinned order.
    fn random_blocks(rng: &mut impl Rng, b: usize, max_deg: usize) -> Vec<BTreeMap<VertexId, Vec<VertexId>>> {
        let mut next_id: VertexId = 2;
        let mut out = Vec::new();
        let mut budget = max_deg;
        for k in 0..b {
            let left = b - k - 1;
            let cap = (budget - left).min(3);
            let deg = rng.gen_range(1..=cap);
            budget -= deg;
            let mut rot: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
            if deg == 1 {
                let y = next_id;
                next_id += 1;
                rot.insert(1, vec![y]);
                rot.insert(y, vec![1]);
            } else {
                // a fan v + path, plus optional chords keeping it planar
                let ys: Vec<VertexId> = (0..deg as VertexId).map(|i| next_id + i).collect();
                next_id += deg as VertexId;
                let extra = next_id;
                next_id += 1;
                let mut edges: Vec<(usize, usize)> = Vec::new();
                let local = |x: VertexId| if x == 1 { 0 } else { (x - ys[0] + 1) as usize };
                for &y in &ys {
                    edges.push((0, local(y)));
                }
                for w in ys.windows(2) {
                    edges.push((local(w[0]), local(w[1])));
                }
                let use_extra = rng.gen_bool(0.5) || deg == 2;
                if use_extra {
                    edges.push((local(ys[0]), deg + 1));
                    edges.push((local(*ys.last().unwrap()), deg + 1));
                }
                let n = deg + 1 + usize::from(use_extra);
                let emb = planar_embedding(n, &edges).unwrap();
                let id = |i: usize| if i == 0 { 1 } else if i <= deg { ys[i - 1] } else { extra };
                for (i, l) in emb.iter().enumerate() {
                    rot.insert(id(i), l.iter().map(|&w| id(w)).collect());
                }
            }
            out.push(rot);
        }
        out.sort_by_key(|r| *r[&1].iter().min().unwrap());
        out
    }

    fn check_config(blocks: &[BTreeMap<VertexId, Vec<VertexId>>]) {
        let at_v: Vec<Vec<VertexId>> = blocks.iter().map(|r| r[&1].clone()).collect();
        let degrees: Vec<usize> = at_v.iter().map(Vec::len).collect();
        let oracle = enumerate_arrangements(1, blocks).unwrap();
        assert_eq!(BigUint::from(oracle.len()), arrangement_count(&degrees), "{at_v:?}");
        let (cb, db) = bounds(&degrees);
        let mut got = BTreeSet::new();
        for (c, d) in all_tuples(&cb, &db) {
            let merged = phi_v_inverse(&at_v, &c, &d).unwrap();
            assert!(oracle.contains(&canonical(&merged)), "{at_v:?} c={c:?} d={d:?} gave {merged:?}");
            assert_eq!(phi_v(&at_v, &merged).unwrap(), (c.clone(), d.clone()), "{at_v:?} {merged:?}");
            got.insert(canonical(&merged));
        }
        assert_eq!(got, oracle, "{at_v:?}");
        for order in &oracle {
            let (c, d) = phi_v(&at_v, order).unwrap();
            assert_eq!(canonical(&phi_v_inverse(&at_v, &c, &d).unwrap()), *order);
        }
    }

    #[test]
    fn counts_from_the_formula() {
        assert_eq!(arrangement_count(&[2, 3]), BigUint::from(6u32));
        assert_eq!(arrangement_count(&[1, 1]), BigUint::from(1u32));
        assert_eq!(arrangement_count(&[1, 1, 1]), BigUint::from(2u32));
    }

    #[test]
    fn interleaved_blocks_rejected() {
        let blocks = vec![vec![2, 3], vec![4, 5]];
        assert!(phi_v(&blocks, &[2, 4, 3, 5]).is_err());
        assert!(phi_v(&blocks, &[2, 3, 4]).is_err());
        assert!(phi_v(&blocks, &[3, 2, 5, 4]).is_ok());
    }

    #[test]
    fn three_bridges() {
        let e = |y: VertexId| BTreeMap::from([(1, vec![y]), (y, vec![1])]);
        check_config(&[e(2), e(3), e(4)]);
    }

    #[test]
    fn random_configurations_match_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for round in 0..400 {
            let b = rng.gen_range(2..=5);
            let max_deg = rng.gen_range(b..=8.max(b));
            let blocks = random_blocks(&mut rng, b, max_deg);
            let _ = round;
            check_config(&blocks);
        }
    }
}
