use std::fmt;

use super::address::Address;
use crate::error::{Error, Result};

/// A finite binary tree, stored as the sorted list of its leaf addresses. The leaves
/// form a complete prefix code.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tree {
    leaves: Vec<Address>,
}

impl Tree {
    pub fn trivial() -> Self {
        Tree {
            leaves: vec![Address::root()],
        }
    }

    /// The split `x`: leaves `0` and `1`.
    pub fn caret() -> Self {
        Tree {
            leaves: vec![Address::from_bits([false]), Address::from_bits([true])],
        }
    }

    /// Validates and sorts a leaf set.
    pub fn from_leaves<I: IntoIterator<Item = Address>>(addresses: I) -> Result<Self> {
        let mut leaves: Vec<Address> = addresses.into_iter().collect();
        if leaves.is_empty() {
            return Err(Error::IncompleteCode);
        }
        leaves.sort();
        // In lexicographic order a prefix is always immediately followed by an extension.
        for w in leaves.windows(2) {
            if w[0].is_prefix_of(w[1].bits()) {
                return Err(Error::PrefixViolation {
                    prefix: w[0].to_bit_string(),
                    other: w[1].to_bit_string(),
                });
            }
        }
        if !is_complete(&leaves, 0) {
            return Err(Error::IncompleteCode);
        }
        Ok(Tree { leaves })
    }

    /// Builds a tree from leaves already known to be a sorted complete prefix code.
    pub(crate) fn from_sorted_unchecked(leaves: Vec<Address>) -> Self {
        debug_assert!(leaves.windows(2).all(|w| w[0] < w[1]));
        Tree { leaves }
    }

    /// Joins two trees under a new root caret.
    pub fn join(left: &Tree, right: &Tree) -> Tree {
        let leaves = left
            .leaves
            .iter()
            .map(|a| a.prefix_with(&[false]))
            .chain(right.leaves.iter().map(|a| a.prefix_with(&[true])))
            .collect();
        Tree { leaves }
    }

    /// The two subtrees below the root caret, or `None` for the trivial tree.
    pub fn children(&self) -> Option<(Tree, Tree)> {
        if self.is_trivial() {
            return None;
        }
        let mid = self.leaves.partition_point(|a| !a.bits()[0]);
        let strip = |s: &[Address]| Tree {
            leaves: s.iter().map(|a| a.suffix(1)).collect(),
        };
        Some((strip(&self.leaves[..mid]), strip(&self.leaves[mid..])))
    }

    pub fn leaves(&self) -> &[Address] {
        &self.leaves
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.leaves.len() == 1
    }

    pub fn depth(&self) -> usize {
        self.leaves.iter().map(Address::len).max().unwrap_or(0)
    }

    pub fn position(&self, leaf: &Address) -> Option<usize> {
        self.leaves.binary_search(leaf).ok()
    }

    /// Index of the leaf that is a prefix of `bits`, if `bits` is deep enough.
    pub fn find_prefix(&self, bits: &[bool]) -> Option<usize> {
        // The containing leaf is the greatest leaf not exceeding `bits`.
        let idx = self.leaves.partition_point(|a| a.bits() <= bits);
        let candidate = idx.checked_sub(1)?;
        self.leaves[candidate]
            .is_prefix_of(bits)
            .then_some(candidate)
    }

    /// Replaces leaf `index` by the caret below it.
    pub fn split_leaf(&self, index: usize) -> Tree {
        let mut leaves = Vec::with_capacity(self.leaves.len() + 1);
        leaves.extend_from_slice(&self.leaves[..index]);
        leaves.push(self.leaves[index].child(false));
        leaves.push(self.leaves[index].child(true));
        leaves.extend_from_slice(&self.leaves[index + 1..]);
        Tree { leaves }
    }
}

fn is_complete(leaves: &[Address], depth: usize) -> bool {
    match leaves {
        [] => false,
        [only] => only.len() == depth,
        _ => {
            if leaves.iter().any(|a| a.len() <= depth) {
                return false;
            }
            let mid = leaves.partition_point(|a| !a.bits()[depth]);
            is_complete(&leaves[..mid], depth + 1) && is_complete(&leaves[mid..], depth + 1)
        }
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.leaves.iter()).finish()
    }
}

/// A binary forest `C(m) → C(n)`: one tree per root. Leaves are numbered left to
/// right across roots, lexicographically inside each tree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Forest {
    trees: Vec<Tree>,
}

impl Forest {
    pub fn new(trees: Vec<Tree>) -> Result<Self> {
        if trees.is_empty() {
            return Err(Error::ArityMismatch {
                expected: 1,
                found: 0,
            });
        }
        Ok(Forest { trees })
    }

    pub(crate) fn from_trees(trees: Vec<Tree>) -> Self {
        Forest { trees }
    }

    pub fn trivial(m: usize) -> Self {
        Forest {
            trees: vec![Tree::trivial(); m],
        }
    }

    pub fn from_tree(tree: Tree) -> Self {
        Forest { trees: vec![tree] }
    }

    /// `x_i^{(n)}`: caret on root `i`, trivial elsewhere.
    pub fn split_at(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, len: n });
        }
        let mut trees = vec![Tree::trivial(); n];
        trees[i] = Tree::caret();
        Ok(Forest { trees })
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn tree(&self, root: usize) -> &Tree {
        &self.trees[root]
    }

    pub fn roots(&self) -> usize {
        self.trees.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.trees.iter().map(Tree::leaf_count).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.trees.iter().all(Tree::is_trivial)
    }

    pub fn depth(&self) -> usize {
        self.trees.iter().map(Tree::depth).max().unwrap_or(0)
    }

    /// Global index of the first leaf of each root, plus the total at the end.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.trees.len() + 1);
        let mut acc = 0;
        out.push(0);
        for t in &self.trees {
            acc += t.leaf_count();
            out.push(acc);
        }
        out
    }

    /// Root index and local address of global leaf `j`.
    pub fn leaf_location(&self, j: usize) -> Result<(usize, &Address)> {
        let mut rest = j;
        for (r, t) in self.trees.iter().enumerate() {
            if rest < t.leaf_count() {
                return Ok((r, &t.leaves()[rest]));
            }
            rest -= t.leaf_count();
        }
        Err(Error::IndexOutOfRange {
            index: j,
            len: self.leaf_count(),
        })
    }

    /// Root of every global leaf, in order.
    pub fn leaf_roots(&self) -> Vec<usize> {
        self.trees
            .iter()
            .enumerate()
            .flat_map(|(r, t)| std::iter::repeat_n(r, t.leaf_count()))
            .collect()
    }

    /// Global leaf index containing the point `(root, bits)` and the number of bits
    /// consumed, or `None` when `bits` ends above the leaf.
    pub fn locate(&self, root: usize, bits: &[bool]) -> Option<(usize, usize)> {
        let tree = self.trees.get(root)?;
        let local = tree.find_prefix(bits)?;
        let offset: usize = self.trees[..root].iter().map(Tree::leaf_count).sum();
        Some((offset + local, tree.leaves()[local].len()))
    }

    /// `outer ∘ inner`: grafts tree `j` of `outer` onto leaf `j` of `inner`.
    pub fn compose(inner: &Forest, outer: &Forest) -> Result<Forest> {
        if outer.roots() != inner.leaf_count() {
            return Err(Error::ArityMismatch {
                expected: inner.leaf_count(),
                found: outer.roots(),
            });
        }
        let mut grafts = outer.trees.iter();
        let trees = inner
            .trees
            .iter()
            .map(|t| {
                let leaves = t
                    .leaves()
                    .iter()
                    .flat_map(|leaf| {
                        let g = grafts.next().expect("arity checked");
                        g.leaves().iter().map(move |a| leaf.concat(a.bits()))
                    })
                    .collect();
                Tree::from_sorted_unchecked(leaves)
            })
            .collect();
        Ok(Forest { trees })
    }

    /// Concatenation of root lists.
    pub fn direct_sum(&self, other: &Forest) -> Forest {
        let mut trees = self.trees.clone();
        trees.extend(other.trees.iter().cloned());
        Forest { trees }
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.trees.iter()).finish()
    }
}
