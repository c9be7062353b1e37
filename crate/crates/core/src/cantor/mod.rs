//! Addresses, binary trees and forests as prefix codes, permutations, and the
//! two rewriting moves of the Thompson groupoid: common refinement of trees and
//! pushing a permutation below a forest.

mod address;
mod perm;
mod tree;

pub use address::{bits_to_string, parse_bits, Address};
pub use perm::Permutation;
pub use tree::{Forest, Tree};

use crate::error::{Error, Result};

/// Coarsest common refinement `T` of two trees with the forests `F1`, `F2` such
/// that `F1 ∘ t1 = T = F2 ∘ t2`.
pub fn common_refinement(t1: &Tree, t2: &Tree) -> (Tree, Forest, Forest) {
    let mut leaves = Vec::new();
    refine_into(t1.leaves(), t2.leaves(), 0, &mut leaves);
    let refined = Tree::from_sorted_unchecked(leaves);
    let f1 = forest_below(t1, &refined);
    let f2 = forest_below(t2, &refined);
    (refined, f1, f2)
}

fn refine_into(a: &[Address], b: &[Address], depth: usize, out: &mut Vec<Address>) {
    if a.len() == 1 && a[0].len() == depth {
        out.extend_from_slice(b);
    } else if b.len() == 1 && b[0].len() == depth {
        out.extend_from_slice(a);
    } else {
        let ma = a.partition_point(|x| !x.bits()[depth]);
        let mb = b.partition_point(|x| !x.bits()[depth]);
        refine_into(&a[..ma], &b[..mb], depth + 1, out);
        refine_into(&a[ma..], &b[mb..], depth + 1, out);
    }
}

/// The forest `F` with `F ∘ coarse = fine`, where `fine` refines `coarse`.
fn forest_below(coarse: &Tree, fine: &Tree) -> Forest {
    let mut rest = fine.leaves();
    let trees = coarse
        .leaves()
        .iter()
        .map(|leaf| {
            let n = rest.partition_point(|a| leaf.is_prefix_of(a.bits()));
            let (mine, tail) = rest.split_at(n);
            rest = tail;
            Tree::from_sorted_unchecked(mine.iter().map(|a| a.suffix(leaf.len())).collect())
        })
        .collect();
    Forest::from_trees(trees)
}

/// Root-wise common refinement of two forests with the same roots: returns
/// `(A, B)` with `A ∘ f = B ∘ g`.
pub fn refine_forests(f: &Forest, g: &Forest) -> Result<(Forest, Forest)> {
    if f.roots() != g.roots() {
        return Err(Error::ArityMismatch {
            expected: f.roots(),
            found: g.roots(),
        });
    }
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (t1, t2) in f.trees().iter().zip(g.trees()) {
        let (_, fa, fb) = common_refinement(t1, t2);
        a.extend(fa.trees().iter().cloned());
        b.extend(fb.trees().iter().cloned());
    }
    Ok((Forest::from_trees(a), Forest::from_trees(b)))
}

/// Rewrites `f ∘ p_α` as `p_α′ ∘ f′`. The tree at root `i` of `f′` is tree `α(i)`
/// of `f`; `α′` carries the leaf blocks along.
pub fn permutation_pushdown(f: &Forest, alpha: &Permutation) -> Result<(Permutation, Forest)> {
    if alpha.len() != f.roots() {
        return Err(Error::ArityMismatch {
            expected: f.roots(),
            found: alpha.len(),
        });
    }
    let offsets = f.offsets();
    let mut images = Vec::with_capacity(f.leaf_count());
    let mut trees = Vec::with_capacity(f.roots());
    for i in 0..f.roots() {
        let src = alpha.apply(i);
        let tree = f.tree(src);
        images.extend((0..tree.leaf_count()).map(|l| offsets[src] + l));
        trees.push(tree.clone());
    }
    Ok((
        Permutation::from_images(images).expect("block images form a permutation"),
        Forest::from_trees(trees),
    ))
}
