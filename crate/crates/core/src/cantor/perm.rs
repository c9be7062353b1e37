use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, …, n-1}`. As a homeomorphism of `C(n)` it sends component
/// `i` onto component `images[i]`; composition follows function order, so
/// `a.compose(&b)` is `p_a ∘ p_b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Accepts the 1-based image list `(α(1), …, α(n))`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(images.to_vec()));
        }
        Self::from_images(images.iter().map(|&i| i - 1).collect())
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Block sum: `self` on the first components, `other` shifted past them.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let n = self.len();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&i| i + n));
        Permutation { images }
    }

    pub fn block_sum<'a, I: IntoIterator<Item = &'a Permutation>>(blocks: I) -> Permutation {
        let mut images = Vec::new();
        for p in blocks {
            let n = images.len();
            images.extend(p.images.iter().map(|&i| i + n));
        }
        Permutation { images }
    }

    /// Some permutation sending `front[t]` to `t` and every other index, in
    /// increasing order, after them.
    pub fn bringing_to_front(n: usize, front: &[usize]) -> Permutation {
        let mut images = vec![usize::MAX; n];
        for (t, &i) in front.iter().enumerate() {
            images[i] = t;
        }
        let mut next = front.len();
        for slot in images.iter_mut() {
            if *slot == usize::MAX {
                *slot = next;
                next += 1;
            }
        }
        Permutation { images }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_based())
    }
}
