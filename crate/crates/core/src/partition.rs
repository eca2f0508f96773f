//! Partitions of `{0, …, n−1}` with canonical class ids, plus a set-partition
//! enumerator used by the congruence and sweep machinery.

use std::collections::BTreeSet;

/// A partition of `{0, …, n−1}`. `class_of[i]` is the canonical id of the
/// block containing `i`, which is always the minimum member of that block.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    class_of: Vec<usize>,
}

impl Partition {
    pub fn discrete(n: usize) -> Self {
        Partition {
            class_of: (0..n).collect(),
        }
    }

    pub fn single_class(n: usize) -> Self {
        Partition {
            class_of: vec![0; n],
        }
    }

    /// Canonicalizes an arbitrary labelling: elements with equal labels end
    /// up in one block whose id is its minimum member.
    pub fn from_class_of(raw: &[usize]) -> Self {
        let n = raw.len();
        let mut canon = vec![usize::MAX; n];
        for i in 0..n {
            if canon[i] != usize::MAX {
                continue;
            }
            for j in i..n {
                if raw[j] == raw[i] {
                    canon[j] = i;
                }
            }
        }
        Partition { class_of: canon }
    }

    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Option<Self> {
        let mut raw = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            for &i in block {
                if i >= n || raw[i] != usize::MAX {
                    return None;
                }
                raw[i] = b;
            }
        }
        if raw.contains(&usize::MAX) {
            return None;
        }
        Some(Self::from_class_of(&raw))
    }

    pub fn size(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_of(&self) -> &[usize] {
        &self.class_of
    }

    pub fn same_class(&self, i: usize, j: usize) -> bool {
        self.class_of[i] == self.class_of[j]
    }

    /// Sorted list of class ids (block minima).
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps: Vec<usize> = self.class_of.to_vec();
        reps.sort_unstable();
        reps.dedup();
        reps
    }

    pub fn num_classes(&self) -> usize {
        self.representatives().len()
    }

    /// Rank of `i`'s class among all classes ordered by representative.
    pub fn class_index(&self, i: usize) -> usize {
        let reps = self.representatives();
        reps.binary_search(&self.class_of[i]).unwrap()
    }

    /// `index_map()[i]` is `class_index(i)`; classes are numbered in
    /// increasing order of their minimum member.
    pub fn index_map(&self) -> Vec<usize> {
        let reps = self.representatives();
        self.class_of
            .iter()
            .map(|c| reps.binary_search(c).unwrap())
            .collect()
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let reps = self.representatives();
        reps.iter()
            .map(|&r| {
                (0..self.size())
                    .filter(|&i| self.class_of[i] == r)
                    .collect()
            })
            .collect()
    }

    /// True when every block of `self` is contained in a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        assert_eq!(self.size(), other.size());
        (0..self.size()).all(|i| other.same_class(i, self.class_of[i]))
    }

    pub fn is_discrete(&self) -> bool {
        self.class_of.iter().enumerate().all(|(i, &c)| i == c)
    }

    /// All ordered pairs `(i, j)` with `i` and `j` in the same block.
    pub fn pairs(&self) -> BTreeSet<(usize, usize)> {
        let n = self.size();
        let mut out = BTreeSet::new();
        for i in 0..n {
            for j in 0..n {
                if self.same_class(i, j) {
                    out.insert((i, j));
                }
            }
        }
        out
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (b, block) in self.blocks().iter().enumerate() {
            if b > 0 {
                write!(f, " | ")?;
            }
            for (k, i) in block.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{i}")?;
            }
        }
        write!(f, "}}")
    }
}

/// Plain union-find with path compression.
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    pub fn union(&mut self, x: usize, y: usize) {
        let rx = self.find(x);
        let ry = self.find(y);
        if rx != ry {
            // keep the smaller index as root so roots stay canonical
            let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
            self.parent[hi] = lo;
        }
    }

    pub fn into_partition(mut self) -> Partition {
        let n = self.parent.len();
        let raw: Vec<usize> = (0..n).map(|i| self.find(i)).collect();
        Partition::from_class_of(&raw)
    }
}

/// Iterates every partition of `{0, …, n−1}` via restricted growth strings,
/// in lexicographic RGS order. There are Bell(n) of them.
pub fn set_partitions(n: usize) -> SetPartitions {
    SetPartitions {
        n,
        rgs: Vec::new(),
        started: false,
        done: false,
    }
}

pub struct SetPartitions {
    n: usize,
    rgs: Vec<usize>,
    started: bool,
    done: bool,
}

impl Iterator for SetPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.rgs = vec![0; self.n];
            if self.n == 0 {
                self.done = true;
            }
            return Some(Partition::from_class_of(&self.rgs));
        }
        // advance the restricted growth string: rgs[i] ≤ 1 + max(rgs[..i])
        let n = self.n;
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                return None;
            }
            i -= 1;
            let max_prefix = self.rgs[..i].iter().copied().max().unwrap_or(0);
            if self.rgs[i] <= max_prefix {
                self.rgs[i] += 1;
                for v in self.rgs[i + 1..].iter_mut() {
                    *v = 0;
                }
                return Some(Partition::from_class_of(&self.rgs));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        for (n, bell) in [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203)] {
            assert_eq!(set_partitions(n).count(), bell, "Bell({n})");
        }
    }

    #[test]
    fn class_ids_are_block_minima() {
        let p = Partition::from_class_of(&[7, 7, 3, 3, 9]);
        assert_eq!(p.class_of(), &[0, 0, 2, 2, 4]);
        assert_eq!(p.index_map(), vec![0, 0, 1, 1, 2]);
        assert_eq!(p.blocks(), vec![vec![0, 1], vec![2, 3], vec![4]]);
        assert_eq!(p.to_string(), "{0 1 | 2 3 | 4}");
    }

    #[test]
    fn refinement() {
        let fine = Partition::from_class_of(&[0, 0, 2, 3]);
        let coarse = Partition::from_class_of(&[0, 0, 0, 3]);
        assert!(fine.refines(&coarse));
        assert!(!coarse.refines(&fine));
        assert!(Partition::discrete(4).refines(&fine));
        assert!(fine.refines(&Partition::single_class(4)));
    }

    #[test]
    fn union_find_partition() {
        let mut uf = UnionFind::new(5);
        uf.union(1, 4);
        uf.union(2, 4);
        let p = uf.into_partition();
        assert_eq!(p.class_of(), &[0, 1, 1, 3, 1]);
    }
}
