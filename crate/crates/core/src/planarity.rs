//! Left-right planarity test with embedding extraction, iterative so that
//! deep DFS trees do not overflow the call stack.

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, Default)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct Lr<'a> {
    adj: Vec<Vec<(usize, usize)>>,
    edges: &'a [(usize, usize)],
    // orientation: tail and head of every edge once oriented
    tail: Vec<usize>,
    head: Vec<usize>,
    oriented: Vec<bool>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    out: Vec<Vec<usize>>,
    // testing
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<usize>,
    refs: Vec<Option<usize>>,
    side: Vec<i64>,
    roots: Vec<usize>,
}

/// Planar rotation system of a simple graph on vertices `0..n`, or `None`
/// when the graph is not planar. Each returned list is one cyclic order.
pub fn planar_embedding(n: usize, edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let m = edges.len();
    if n > 2 && m > 3 * n - 6 {
        return None;
    }
    let mut adj = vec![Vec::new(); n];
    for (i, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, i));
        adj[b].push((a, i));
    }
    let mut lr = Lr {
        adj,
        edges,
        tail: vec![NONE; m],
        head: vec![NONE; m],
        oriented: vec![false; m],
        height: vec![NONE; n],
        parent_edge: vec![NONE; n],
        lowpt: vec![0; m],
        lowpt2: vec![0; m],
        nesting_depth: vec![0; m],
        out: vec![Vec::new(); n],
        stack: Vec::new(),
        stack_bottom: vec![0; m],
        lowpt_edge: vec![NONE; m],
        refs: vec![None; m],
        side: vec![1; m],
        roots: Vec::new(),
    };
    lr.orient();
    for v in 0..n {
        let nd = &lr.nesting_depth;
        lr.out[v].sort_by_key(|&e| nd[e]);
    }
    for i in 0..lr.roots.len() {
        if !lr.test(lr.roots[i]) {
            return None;
        }
    }
    Some(lr.embed())
}

impl Lr<'_> {
    fn orient(&mut self) {
        let n = self.adj.len();
        let mut ind = vec![0usize; n];
        let mut pending = vec![NONE; n];
        for root in 0..n {
            if self.height[root] != NONE {
                continue;
            }
            self.height[root] = 0;
            self.roots.push(root);
            let mut stack = vec![root];
            'outer: while let Some(&v) = stack.last() {
                let e = self.parent_edge[v];
                if pending[v] != NONE {
                    let vw = pending[v];
                    pending[v] = NONE;
                    self.finish_orientation(v, vw, e);
                }
                while ind[v] < self.adj[v].len() {
                    let (w, id) = self.adj[v][ind[v]];
                    ind[v] += 1;
                    if self.oriented[id] {
                        continue;
                    }
                    self.oriented[id] = true;
                    self.tail[id] = v;
                    self.head[id] = w;
                    self.out[v].push(id);
                    self.lowpt[id] = self.height[v];
                    self.lowpt2[id] = self.height[v];
                    if self.height[w] == NONE {
                        self.parent_edge[w] = id;
                        self.height[w] = self.height[v] + 1;
                        pending[v] = id;
                        stack.push(w);
                        continue 'outer;
                    }
                    self.lowpt[id] = self.height[w];
                    self.finish_orientation(v, id, e);
                }
                stack.pop();
            }
        }
    }

    fn finish_orientation(&mut self, v: usize, vw: usize, e: usize) {
        self.nesting_depth[vw] = 2 * self.lowpt[vw] as i64;
        if self.lowpt2[vw] < self.height[v] {
            self.nesting_depth[vw] += 1;
        }
        if e != NONE {
            if self.lowpt[vw] < self.lowpt[e] {
                self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                self.lowpt[e] = self.lowpt[vw];
            } else if self.lowpt[vw] > self.lowpt[e] {
                self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
            } else {
                self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
            }
        }
    }

    fn test(&mut self, root: usize) -> bool {
        let n = self.adj.len();
        let mut ind = vec![0usize; n];
        let mut pending = vec![NONE; n];
        let mut stack = vec![root];
        'outer: while let Some(&v) = stack.last() {
            let e = self.parent_edge[v];
            if pending[v] != NONE {
                let ei = pending[v];
                pending[v] = NONE;
                if !self.integrate(v, ei, e) {
                    return false;
                }
            }
            while ind[v] < self.out[v].len() {
                let ei = self.out[v][ind[v]];
                ind[v] += 1;
                let w = self.head[ei];
                self.stack_bottom[ei] = self.stack.len();
                if ei == self.parent_edge[w] {
                    pending[v] = ei;
                    stack.push(w);
                    continue 'outer;
                }
                self.lowpt_edge[ei] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval {
                        low: Some(ei),
                        high: Some(ei),
                    },
                });
                if !self.integrate(v, ei, e) {
                    return false;
                }
            }
            if e != NONE {
                self.remove_back_edges(e);
            }
            stack.pop();
        }
        true
    }

    fn integrate(&mut self, v: usize, ei: usize, e: usize) -> bool {
        if self.lowpt[ei] < self.height[v] {
            if ei == self.out[v][0] {
                self.lowpt_edge[e] = self.lowpt_edge[ei];
            } else if !self.add_constraints(ei, e) {
                return false;
            }
        }
        true
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        match i.high {
            Some(h) => self.lowpt[h] > self.lowpt[b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => NONE,
        }
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let mut q = self.stack.pop().expect("return edges are on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qrl = q.right.low.expect("nonempty interval");
            if self.lowpt[qrl] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else if let Some(l) = p.right.low {
                    self.refs[l] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.refs[qrl] = Some(self.lowpt_edge[e]);
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("checked above");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(l) = p.right.low {
                self.refs[l] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(l) = p.left.low {
                self.refs[l] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.tail[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().expect("checked above");
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.head[h] != u {
                    break;
                }
                p.left.high = self.refs[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.refs[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.head[h] != u {
                    break;
                }
                p.right.high = self.refs[h];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.refs[r] = p.left.low;
                    self.side[r] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            if let Some(top) = self.stack.last() {
                let (hl, hr) = (top.left.high, top.right.high);
                self.refs[e] = match (hl, hr) {
                    (Some(l), None) => Some(l),
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                    _ => hr,
                };
            }
        }
    }

    fn sign(&mut self, e: usize) -> i64 {
        let mut chain = vec![e];
        while let Some(r) = self.refs[*chain.last().expect("nonempty")] {
            chain.push(r);
        }
        for i in (0..chain.len() - 1).rev() {
            let (x, y) = (chain[i], chain[i + 1]);
            self.side[x] *= self.side[y];
            self.refs[x] = None;
        }
        self.side[e]
    }

    fn embed(&mut self) -> Vec<Vec<usize>> {
        let m = self.edges.len();
        let n = self.adj.len();
        for e in 0..m {
            let s = self.sign(e);
            self.nesting_depth[e] *= s;
        }
        for v in 0..n {
            let nd = &self.nesting_depth;
            self.out[v].sort_by_key(|&e| nd[e]);
        }
        // half-edge 2e leaves the tail of e, 2e+1 leaves its head
        let mut cw = vec![NONE; 2 * m];
        let mut ccw = vec![NONE; 2 * m];
        let mut first = vec![NONE; n];
        let insert_after = |cw: &mut Vec<usize>, ccw: &mut Vec<usize>, h: usize, r: usize| {
            let next = cw[r];
            cw[r] = h;
            cw[h] = next;
            ccw[h] = r;
            ccw[next] = h;
        };
        for v in 0..n {
            let mut prev = NONE;
            for &e in &self.out[v] {
                let h = 2 * e;
                if prev == NONE {
                    cw[h] = h;
                    ccw[h] = h;
                    first[v] = h;
                } else {
                    insert_after(&mut cw, &mut ccw, h, prev);
                }
                prev = h;
            }
        }
        let mut left_ref = vec![NONE; n];
        let mut right_ref = vec![NONE; n];
        let mut ind = vec![0usize; n];
        for ri in 0..self.roots.len() {
            let mut stack = vec![self.roots[ri]];
            'outer: while let Some(&v) = stack.last() {
                while ind[v] < self.out[v].len() {
                    let ei = self.out[v][ind[v]];
                    ind[v] += 1;
                    let w = self.head[ei];
                    let h = 2 * ei + 1;
                    if ei == self.parent_edge[w] {
                        if first[w] == NONE {
                            cw[h] = h;
                            ccw[h] = h;
                        } else {
                            let r = ccw[first[w]];
                            insert_after(&mut cw, &mut ccw, h, r);
                        }
                        first[w] = h;
                        left_ref[v] = 2 * ei;
                        right_ref[v] = 2 * ei;
                        stack.push(w);
                        continue 'outer;
                    }
                    if self.side[ei] == 1 {
                        insert_after(&mut cw, &mut ccw, h, right_ref[w]);
                    } else {
                        let r = ccw[left_ref[w]];
                        insert_after(&mut cw, &mut ccw, h, r);
                        if first[w] == left_ref[w] {
                            first[w] = h;
                        }
                        left_ref[w] = h;
                    }
                }
                stack.pop();
            }
        }
        let target = |h: usize| if h.is_multiple_of(2) { self.head[h / 2] } else { self.tail[h / 2] };
        (0..n)
            .map(|v| {
                let mut list = Vec::new();
                if first[v] != NONE {
                    let mut h = first[v];
                    loop {
                        list.push(target(h));
                        h = cw[h];
                        if h == first[v] {
                            break;
                        }
                    }
                }
                list
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                e.push((a, b));
            }
        }
        e
    }

    fn faces(rot: &[Vec<usize>]) -> usize {
        let mut seen = std::collections::HashSet::new();
        let mut f = 0;
        for v in 0..rot.len() {
            for &w in &rot[v] {
                if seen.contains(&(v, w)) {
                    continue;
                }
                f += 1;
                let (mut a, mut b) = (v, w);
                while seen.insert((a, b)) {
                    let l = &rot[b];
                    let p = l.iter().position(|&x| x == a).unwrap();
                    let c = l[(p + l.len() - 1) % l.len()];
                    a = b;
                    b = c;
                }
            }
        }
        f
    }

    fn assert_planar_embedding(n: usize, edges: &[(usize, usize)]) {
        let rot = planar_embedding(n, edges).expect("planar");
        let mut want = vec![Vec::new(); n];
        for &(a, b) in edges {
            want[a].push(b);
            want[b].push(a);
        }
        for (l, w) in rot.iter().zip(&mut want) {
            let mut got = l.clone();
            got.sort_unstable();
            w.sort_unstable();
            assert_eq!(&got, w);
        }
        // connected inputs only
        assert_eq!(faces(&rot), 2 + edges.len() - n);
    }

    #[test]
    fn k4_and_k5() {
        assert_planar_embedding(4, &complete(4));
        assert!(planar_embedding(5, &complete(5)).is_none());
    }

    #[test]
    fn k33_is_not_planar() {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        assert!(planar_embedding(6, &e).is_none());
        e.pop();
        assert_planar_embedding(6, &e);
    }

    #[test]
    fn wheels_and_grids() {
        for k in 3..12 {
            let mut e: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            e.extend((0..k).map(|i| (i, k)));
            assert_planar_embedding(k + 1, &e);
        }
        let w = 30;
        let mut e = Vec::new();
        for r in 0..w {
            for c in 0..w {
                let v = r * w + c;
                if c + 1 < w {
                    e.push((v, v + 1));
                }
                if r + 1 < w {
                    e.push((v, v + w));
                }
            }
        }
        assert_planar_embedding(w * w, &e);
    }

    #[test]
    fn long_path_does_not_overflow() {
        let n = 200_000;
        let mut e: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        e.push((0, n - 1));
        assert_planar_embedding(n, &e);
    }

    #[test]
    fn petersen_is_not_planar() {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        assert!(planar_embedding(10, &e).is_none());
    }
}
