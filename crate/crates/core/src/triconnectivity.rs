//! Triconnected components of a simple biconnected graph (Hopcroft–Tarjan
//! path search with the Gutwenger–Mutzel corrections). All traversals are
//! iterative.

const NONE: usize = usize::MAX;
const EOS: (i64, i64, i64) = (-1, -1, -1);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    Bond,
    Polygon,
    Triconnected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitComponent {
    pub kind: ComponentKind,
    /// Indices into [`TriconnectedComponents::edges`].
    pub edges: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct TriconnectedComponents {
    /// All edges: the `real` input edges first, then virtual edges. Each
    /// virtual edge lies in exactly two components.
    pub edges: Vec<(usize, usize)>,
    pub real: usize,
    pub components: Vec<SplitComponent>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum EdgeType {
    Unseen,
    Tree,
    Frond,
}

/// Doubly linked lists sharing one node arena.
#[derive(Default)]
struct Lists {
    val: Vec<usize>,
    prev: Vec<usize>,
    next: Vec<usize>,
    owner: Vec<usize>,
    head: Vec<usize>,
    tail: Vec<usize>,
}

impl Lists {
    fn new(n: usize) -> Self {
        Self {
            head: vec![NONE; n],
            tail: vec![NONE; n],
            ..Default::default()
        }
    }

    fn alloc(&mut self, owner: usize, val: usize) -> usize {
        self.val.push(val);
        self.prev.push(NONE);
        self.next.push(NONE);
        self.owner.push(owner);
        self.val.len() - 1
    }

    fn push_back(&mut self, list: usize, val: usize) -> usize {
        let h = self.alloc(list, val);
        let t = self.tail[list];
        self.prev[h] = t;
        if t == NONE {
            self.head[list] = h;
        } else {
            self.next[t] = h;
        }
        self.tail[list] = h;
        h
    }

    fn push_front(&mut self, list: usize, val: usize) -> usize {
        let h = self.alloc(list, val);
        let f = self.head[list];
        self.next[h] = f;
        if f == NONE {
            self.tail[list] = h;
        } else {
            self.prev[f] = h;
        }
        self.head[list] = h;
        h
    }

    fn remove(&mut self, h: usize) {
        let list = self.owner[h];
        if list == NONE {
            return;
        }
        let (p, n) = (self.prev[h], self.next[h]);
        if p == NONE {
            self.head[list] = n;
        } else {
            self.next[p] = n;
        }
        if n == NONE {
            self.tail[list] = p;
        } else {
            self.prev[n] = p;
        }
        self.owner[h] = NONE;
    }

    fn front(&self, list: usize) -> Option<usize> {
        let h = self.head[list];
        (h != NONE).then(|| self.val[h])
    }
}

struct Tc {
    n: usize,
    src: Vec<usize>,
    tgt: Vec<usize>,
    etype: Vec<EdgeType>,
    start: Vec<bool>,
    in_adj: Vec<usize>,
    in_high: Vec<usize>,
    adj: Lists,
    high: Lists,
    number: Vec<usize>,
    newnum: Vec<usize>,
    nodeat: Vec<usize>,
    lowpt1: Vec<usize>,
    lowpt2: Vec<usize>,
    nd: Vec<usize>,
    father: Vec<usize>,
    tree_arc: Vec<usize>,
    degree: Vec<usize>,
    tstack: Vec<(i64, i64, i64)>,
    estack: Vec<usize>,
    comps: Vec<Vec<usize>>,
    root: usize,
}

/// Split a simple biconnected graph with at least three vertices into its
/// triconnected components (bonds and polygons already merged).
pub fn triconnected_components(n: usize, edges: &[(usize, usize)]) -> TriconnectedComponents {
    let m = edges.len();
    let mut tc = Tc {
        n,
        src: edges.iter().map(|e| e.0).collect(),
        tgt: edges.iter().map(|e| e.1).collect(),
        etype: vec![EdgeType::Unseen; m],
        start: vec![false; m],
        in_adj: vec![NONE; m],
        in_high: vec![NONE; m],
        adj: Lists::new(n),
        high: Lists::new(n),
        number: vec![0; n],
        newnum: vec![0; n],
        nodeat: vec![NONE; n + 1],
        lowpt1: vec![0; n],
        lowpt2: vec![0; n],
        nd: vec![0; n],
        father: vec![NONE; n],
        tree_arc: vec![NONE; n],
        degree: vec![0; n],
        tstack: vec![EOS],
        estack: Vec::new(),
        comps: Vec::new(),
        root: 0,
    };
    tc.dfs1(edges);
    tc.build_adjacency();
    tc.path_finder();
    tc.path_search();
    let last: Vec<usize> = std::mem::take(&mut tc.estack);
    if !last.is_empty() {
        tc.comps.push(last);
    }
    tc.assemble(m)
}

impl Tc {
    fn new_edge(&mut self, a: usize, b: usize) -> usize {
        self.src.push(a);
        self.tgt.push(b);
        self.etype.push(EdgeType::Unseen);
        self.start.push(false);
        self.in_adj.push(NONE);
        self.in_high.push(NONE);
        self.src.len() - 1
    }

    fn dfs1(&mut self, edges: &[(usize, usize)]) {
        let n = self.n;
        let mut und = vec![Vec::new(); n];
        for (i, &(a, b)) in edges.iter().enumerate() {
            und[a].push((b, i));
            und[b].push((a, i));
        }
        let mut count = 0;
        let mut ind = vec![0usize; n];
        let enter = |tc: &mut Tc, v: usize, count: &mut usize| {
            *count += 1;
            tc.number[v] = *count;
            tc.lowpt1[v] = *count;
            tc.lowpt2[v] = *count;
            tc.nd[v] = 1;
            tc.degree[v] = und[v].len();
        };
        enter(self, self.root, &mut count);
        let mut stack = vec![self.root];
        while let Some(&v) = stack.last() {
            if ind[v] < und[v].len() {
                let (w, e) = und[v][ind[v]];
                ind[v] += 1;
                if self.etype[e] != EdgeType::Unseen {
                    continue;
                }
                self.src[e] = v;
                self.tgt[e] = w;
                if self.number[w] == 0 {
                    self.etype[e] = EdgeType::Tree;
                    self.tree_arc[w] = e;
                    self.father[w] = v;
                    enter(self, w, &mut count);
                    stack.push(w);
                } else {
                    self.etype[e] = EdgeType::Frond;
                    let nw = self.number[w];
                    if nw < self.lowpt1[v] {
                        self.lowpt2[v] = self.lowpt1[v];
                        self.lowpt1[v] = nw;
                    } else if nw > self.lowpt1[v] {
                        self.lowpt2[v] = self.lowpt2[v].min(nw);
                    }
                }
            } else {
                stack.pop();
                let u = self.father[v];
                if u != NONE {
                    let (l1, l2) = (self.lowpt1[v], self.lowpt2[v]);
                    if l1 < self.lowpt1[u] {
                        self.lowpt2[u] = self.lowpt1[u].min(l2);
                        self.lowpt1[u] = l1;
                    } else if l1 == self.lowpt1[u] {
                        self.lowpt2[u] = self.lowpt2[u].min(l2);
                    } else {
                        self.lowpt2[u] = self.lowpt2[u].min(l1);
                    }
                    self.nd[u] += self.nd[v];
                }
            }
        }
    }

    fn build_adjacency(&mut self) {
        let max = 3 * self.n + 2;
        let mut bucket = vec![Vec::new(); max + 1];
        for e in 0..self.src.len() {
            let w = self.tgt[e];
            let phi = if self.etype[e] == EdgeType::Frond {
                3 * self.number[w] + 1
            } else if self.lowpt2[w] < self.number[self.src[e]] {
                3 * self.lowpt1[w]
            } else {
                3 * self.lowpt1[w] + 2
            };
            bucket[phi].push(e);
        }
        for b in bucket {
            for e in b {
                self.in_adj[e] = self.adj.push_back(self.src[e], e);
            }
        }
    }

    fn path_finder(&mut self) {
        let n = self.n;
        let mut count = n;
        let mut new_path = true;
        let mut cur = vec![NONE; n];
        let root = self.root;
        self.newnum[root] = count + 1 - self.nd[root];
        cur[root] = self.adj.head[root];
        let mut stack = vec![root];
        while let Some(&v) = stack.last() {
            let h = cur[v];
            if h == NONE {
                stack.pop();
                if !stack.is_empty() {
                    count -= 1;
                }
                continue;
            }
            cur[v] = self.adj.next[h];
            let e = self.adj.val[h];
            let w = self.tgt[e];
            if new_path {
                new_path = false;
                self.start[e] = true;
            }
            if self.etype[e] == EdgeType::Tree {
                self.newnum[w] = count + 1 - self.nd[w];
                cur[w] = self.adj.head[w];
                stack.push(w);
            } else {
                self.in_high[e] = self.high.push_back(w, self.newnum[v]);
                new_path = true;
            }
        }
        let mut old2new = vec![0; n + 1];
        for v in 0..n {
            old2new[self.number[v]] = self.newnum[v];
        }
        for v in 0..n {
            self.nodeat[self.newnum[v]] = v;
            self.lowpt1[v] = old2new[self.lowpt1[v]];
            self.lowpt2[v] = old2new[self.lowpt2[v]];
        }
    }

    fn high(&self, v: usize) -> usize {
        self.high.front(v).unwrap_or(0)
    }

    fn del_high(&mut self, e: usize) {
        let h = self.in_high[e];
        if h != NONE {
            self.high.remove(h);
            self.in_high[e] = NONE;
        }
    }

    fn del_adj(&mut self, e: usize) {
        let h = self.in_adj[e];
        if h != NONE {
            self.adj.remove(h);
            self.in_adj[e] = NONE;
        }
    }

    fn first_child_num(&self, w: usize) -> usize {
        match self.adj.front(w) {
            Some(e) => self.newnum[self.tgt[e]],
            None => 0,
        }
    }

    fn top(&self) -> (i64, i64, i64) {
        *self.tstack.last().expect("the stack keeps an end marker")
    }

    fn path_search(&mut self) {
        struct Frame {
            v: usize,
            outv: usize,
            cur: usize,
            // set while the child of a tree arc is being searched
            pending: Option<(usize, usize, usize)>,
        }
        let frame = |tc: &Tc, v: usize| {
            let mut outv = 0;
            let mut h = tc.adj.head[v];
            while h != NONE {
                outv += 1;
                h = tc.adj.next[h];
            }
            Frame {
                v,
                outv,
                cur: tc.adj.head[v],
                pending: None,
            }
        };
        let mut stack = vec![frame(self, self.root)];
        while let Some(f) = stack.last_mut() {
            if let Some((it, e, w)) = f.pending.take() {
                let (v, outv) = (f.v, f.outv);
                let next = self.adj.next[it];
                let outv = self.after_child(v, outv, it, e, w);
                let f = stack.last_mut().expect("frame still present");
                f.outv = outv;
                // `it` may have been unlinked; its successor was fixed above
                f.cur = next;
                continue;
            }
            let it = f.cur;
            if it == NONE {
                stack.pop();
                continue;
            }
            let v = f.v;
            let e = self.adj.val[it];
            let w = self.tgt[e];
            let vnum = self.newnum[v] as i64;
            let wnum = self.newnum[w] as i64;
            if self.etype[e] == EdgeType::Tree {
                if self.start[e] {
                    let l1 = self.lowpt1[w] as i64;
                    let hw = wnum + self.nd[w] as i64 - 1;
                    if self.top().1 > l1 {
                        let mut y = 0;
                        let mut b = 0;
                        while self.top().1 > l1 {
                            let t = self.tstack.pop().expect("nonempty");
                            y = y.max(t.0);
                            b = t.2;
                        }
                        self.tstack.push((y.max(hw), l1, b));
                    } else {
                        self.tstack.push((hw, l1, vnum));
                    }
                    self.tstack.push(EOS);
                }
                f.pending = Some((it, e, w));
                let child = frame(self, w);
                stack.push(child);
            } else {
                if self.start[e] {
                    if self.top().1 > wnum {
                        let mut y = 0;
                        let mut b = 0;
                        while self.top().1 > wnum {
                            let t = self.tstack.pop().expect("nonempty");
                            y = y.max(t.0);
                            b = t.2;
                        }
                        self.tstack.push((y, wnum, b));
                    } else {
                        self.tstack.push((vnum, wnum, vnum));
                    }
                }
                self.estack.push(e);
                f.cur = self.adj.next[it];
            }
        }
    }

    fn after_child(&mut self, v: usize, outv: usize, it: usize, e: usize, w0: usize) -> usize {
        let vnum = self.newnum[v];
        let vnum_i = vnum as i64;
        self.estack.push(self.tree_arc[w0]);
        let mut w = w0;
        let mut wnum = self.newnum[w];

        // type-2 separation pairs
        loop {
            let (_, ta, tb) = self.top();
            let deg2 = self.degree[w] == 2 && self.first_child_num(w) > wnum;
            if !(vnum != 1 && (ta == vnum_i || deg2)) {
                break;
            }
            if ta == vnum_i && self.father[self.nodeat[tb as usize]] == self.nodeat[ta as usize] {
                self.tstack.pop();
                continue;
            }
            let mut e_ab = NONE;
            let x;
            let mut evirt;
            if deg2 {
                let e1 = self.estack.pop().expect("tree arc");
                let e2 = self.estack.pop().expect("arc below w");
                if self.in_adj[e1] != it {
                    self.del_adj(e1);
                }
                self.del_adj(e2);
                x = self.tgt[e2];
                evirt = self.new_edge(v, x);
                self.degree[x] -= 1;
                self.degree[v] -= 1;
                self.comps.push(vec![e1, e2, evirt]);
                if let Some(&top) = self.estack.last() {
                    if self.src[top] == x && self.tgt[top] == v {
                        e_ab = self.estack.pop().expect("checked");
                        self.del_adj(e_ab);
                        self.del_high(e_ab);
                    }
                }
            } else {
                let (h, a, b) = self.tstack.pop().expect("checked");
                let mut comp = Vec::new();
                while let Some(&xy) = self.estack.last() {
                    let (xs, xt) = (self.src[xy], self.tgt[xy]);
                    let (nx, ny) = (self.newnum[xs] as i64, self.newnum[xt] as i64);
                    if !(a <= nx && nx <= h && a <= ny && ny <= h) {
                        break;
                    }
                    self.estack.pop();
                    if (nx == a && ny == b) || (ny == a && nx == b) {
                        e_ab = xy;
                        if self.in_adj[xy] != it {
                            self.del_adj(xy);
                        }
                        self.del_high(xy);
                    } else {
                        if self.in_adj[xy] != it {
                            self.del_adj(xy);
                        }
                        self.del_high(xy);
                        comp.push(xy);
                        self.degree[xs] -= 1;
                        self.degree[xt] -= 1;
                    }
                }
                x = self.nodeat[b as usize];
                evirt = self.new_edge(self.nodeat[a as usize], x);
                comp.push(evirt);
                self.comps.push(comp);
            }
            if e_ab != NONE {
                let e2 = self.new_edge(v, x);
                self.comps.push(vec![e_ab, evirt, e2]);
                evirt = e2;
                self.degree[x] -= 1;
                self.degree[v] -= 1;
            }
            self.estack.push(evirt);
            let old = self.adj.val[it];
            self.in_adj[old] = NONE;
            self.adj.val[it] = evirt;
            self.in_adj[evirt] = it;
            self.degree[x] += 1;
            self.degree[v] += 1;
            self.father[x] = v;
            self.tree_arc[x] = evirt;
            self.etype[evirt] = EdgeType::Tree;
            w = x;
            wnum = self.newnum[w];
        }

        // type-1 separation pair
        if self.lowpt2[w] >= vnum && self.lowpt1[w] < vnum && (self.father[v] != self.root || outv >= 2) {
            let mut comp = Vec::new();
            let lo = wnum;
            let hi = wnum + self.nd[w];
            while let Some(&xy) = self.estack.last() {
                let (xs, xt) = (self.src[xy], self.tgt[xy]);
                let (nx, ny) = (self.newnum[xs], self.newnum[xt]);
                if !((lo <= nx && nx < hi) || (lo <= ny && ny < hi)) {
                    break;
                }
                self.estack.pop();
                comp.push(xy);
                self.del_high(xy);
                self.degree[xs] -= 1;
                self.degree[xt] -= 1;
            }
            let l = self.nodeat[self.lowpt1[w]];
            let mut evirt = self.new_edge(v, l);
            comp.push(evirt);
            self.comps.push(comp);
            if let Some(&top) = self.estack.last() {
                let (ts, tt) = (self.src[top], self.tgt[top]);
                if (ts == v && tt == l) || (ts == l && tt == v) {
                    let eh = self.estack.pop().expect("checked");
                    if self.in_adj[eh] != it {
                        self.del_adj(eh);
                    }
                    let e2 = self.new_edge(v, l);
                    self.comps.push(vec![eh, evirt, e2]);
                    self.in_high[e2] = self.in_high[eh];
                    if self.in_high[e2] != NONE {
                        self.high.val[self.in_high[e2]] = vnum;
                    }
                    self.in_high[eh] = NONE;
                    evirt = e2;
                    self.degree[v] -= 1;
                    self.degree[l] -= 1;
                }
            }
            if l != self.father[v] {
                self.estack.push(evirt);
                let old = self.adj.val[it];
                self.in_adj[old] = NONE;
                self.adj.val[it] = evirt;
                self.in_adj[evirt] = it;
                self.etype[evirt] = EdgeType::Frond;
                if self.in_high[evirt] == NONE && self.high(l) < vnum {
                    self.in_high[evirt] = self.high.push_front(l, vnum);
                }
                self.degree[v] += 1;
                self.degree[l] += 1;
            } else {
                let old = self.adj.val[it];
                self.in_adj[old] = NONE;
                self.adj.remove(it);
                let e2 = self.new_edge(l, v);
                let eh = self.tree_arc[v];
                self.comps.push(vec![evirt, e2, eh]);
                self.tree_arc[v] = e2;
                self.etype[e2] = EdgeType::Tree;
                let h = self.in_adj[eh];
                self.in_adj[e2] = h;
                if h != NONE {
                    self.adj.val[h] = e2;
                }
                self.in_adj[eh] = NONE;
            }
        }

        if self.start[e] {
            while self.top() != EOS {
                self.tstack.pop();
            }
            self.tstack.pop();
        }
        loop {
            let (h, a, b) = self.top();
            if (h, a, b) == EOS || a == vnum_i || b == vnum_i || self.high(v) as i64 <= h {
                break;
            }
            self.tstack.pop();
        }
        outv - 1
    }

    fn assemble(self, real: usize) -> TriconnectedComponents {
        let edges: Vec<(usize, usize)> = self.src.iter().copied().zip(self.tgt.iter().copied()).collect();
        let kinds: Vec<ComponentKind> = self.comps.iter().map(|c| classify(c, &edges)).collect();
        let k = self.comps.len();
        let mut owner = vec![[NONE; 2]; edges.len()];
        for (ci, comp) in self.comps.iter().enumerate() {
            for &e in comp {
                let slot = &mut owner[e];
                if slot[0] == NONE {
                    slot[0] = ci;
                } else {
                    slot[1] = ci;
                }
            }
        }
        let mut uf = crate::union_find::UnionFind::new(k);
        let mut internal = vec![false; edges.len()];
        for e in real..edges.len() {
            let [a, b] = owner[e];
            if a == NONE || b == NONE {
                continue;
            }
            if kinds[a] == kinds[b] && kinds[a] != ComponentKind::Triconnected {
                uf.union(a, b).expect("component index in range");
                internal[e] = true;
            }
        }
        let mut group_of = vec![NONE; k];
        let mut components: Vec<SplitComponent> = Vec::new();
        for ci in 0..k {
            let r = uf.find(ci).expect("component index in range");
            if group_of[r] == NONE {
                group_of[r] = components.len();
                components.push(SplitComponent {
                    kind: kinds[ci],
                    edges: Vec::new(),
                });
            }
            let g = group_of[r];
            components[g].edges.extend(self.comps[ci].iter().copied().filter(|&e| !internal[e]));
        }
        TriconnectedComponents {
            edges,
            real,
            components,
        }
    }
}

fn classify(comp: &[usize], edges: &[(usize, usize)]) -> ComponentKind {
    let mut vs: Vec<usize> = comp.iter().flat_map(|&e| [edges[e].0, edges[e].1]).collect();
    vs.sort_unstable();
    vs.dedup();
    if vs.len() == 2 {
        ComponentKind::Bond
    } else if vs.len() == comp.len() {
        ComponentKind::Polygon
    } else {
        ComponentKind::Triconnected
    }
}
