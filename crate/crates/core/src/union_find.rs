//! Disjoint sets with path halving and union by rank.

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, x: usize) -> Result<usize> {
        if x >= self.parent.len() {
            return Err(Error::IndexOutOfRange(x));
        }
        let mut x = x;
        while self.parent[x] != x {
            let grand = self.parent[self.parent[x]];
            self.parent[x] = grand;
            x = grand;
        }
        Ok(x)
    }

    /// Merges the classes of `a` and `b` and returns the new representative.
    pub fn union(&mut self, a: usize, b: usize) -> Result<usize> {
        let mut a = self.find(a)?;
        let mut b = self.find(b)?;
        if a == b {
            return Ok(a);
        }
        if self.rank[a] < self.rank[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        if self.rank[a] == self.rank[b] {
            self.rank[a] += 1;
        }
        Ok(a)
    }

    pub fn same(&mut self, a: usize, b: usize) -> Result<bool> {
        Ok(self.find(a)? == self.find(b)?)
    }
}
