//! Union-find over dense indices.
//!
//! Used for congruence closures (semimodule congruences and the tensor
//! engine). Only the resulting partition matters, never the internal choice
//! of roots, so path compression and union-by-rank are safe.

#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<u32>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect(), rank: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        // Iterative path halving.
        while self.parent[x] as usize != x {
            let gp = self.parent[self.parent[x] as usize];
            self.parent[x] = gp;
            x = gp as usize;
        }
        x
    }

    /// Merge the classes of `a` and `b`; returns `true` if they were
    /// previously distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (hi, lo) = if self.rank[ra] >= self.rank[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[lo] = hi as u32;
        if self.rank[hi] == self.rank[lo] {
            self.rank[hi] += 1;
        }
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Normalised class ids: classes are numbered `0..k` in order of their
    /// least member, and every element is mapped to its class id. The result
    /// is independent of union order.
    pub fn class_ids(&mut self) -> (Vec<u32>, usize) {
        let n = self.len();
        let mut id_of_root = vec![u32::MAX; n];
        let mut ids = vec![0u32; n];
        let mut next = 0u32;
        for x in 0..n {
            let r = self.find(x);
            if id_of_root[r] == u32::MAX {
                id_of_root[r] = next;
                next += 1;
            }
            ids[x] = id_of_root[r];
        }
        (ids, next as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes_are_numbered_by_least_member() {
        let mut uf = UnionFind::new(6);
        uf.union(4, 1);
        uf.union(5, 3);
        assert!(uf.same(1, 4));
        assert!(!uf.same(0, 1));
        let (ids, k) = uf.class_ids();
        assert_eq!(k, 4);
        // Classes in least-member order: {0}, {1,4}, {2}, {3,5}.
        assert_eq!(ids, vec![0, 1, 2, 3, 1, 3]);
    }

    #[test]
    fn union_reports_changes() {
        let mut uf = UnionFind::new(3);
        assert!(uf.union(0, 1));
        assert!(!uf.union(1, 0));
        assert!(uf.union(1, 2));
        let (_, k) = uf.class_ids();
        assert_eq!(k, 1);
    }
}
