//! Elements of Röver's groupoid as decorated forest pairs
//! `f₂⁻¹ ∘ p_α ∘ (k₁ ⊕ … ⊕ k_n) ∘ f₁ : C(m) → C(m′)` with Klein labels `k_j`.

use std::fmt;

use crate::cantor::{permutation_pushdown, refine_forests, Address, Forest, Permutation, Tree};
use crate::error::{Error, Result};
use crate::grigorchuk::{nucleus_form, push_forest_through_decoration, GrigWord, KleinLabel};
use crate::limits::Limits;

/// A homeomorphism `C(m) → C(m′)` in normal form. A point in the cylinder of leaf
/// `j` of `f1` has its tail acted on by `labels[j]` and lands in the cylinder of
/// leaf `alpha(j)` of `f2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupoidElement {
    f1: Forest,
    alpha: Permutation,
    labels: Vec<KleinLabel>,
    f2: Forest,
}

/// Result of evaluating an element on a finite prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub root: usize,
    pub bits: Vec<bool>,
    pub residual: GrigWord,
}

impl GroupoidElement {
    pub fn new(
        f1: Forest,
        alpha: Permutation,
        labels: Vec<KleinLabel>,
        f2: Forest,
    ) -> Result<Self> {
        let n = f1.leaf_count();
        for found in [alpha.len(), labels.len(), f2.leaf_count()] {
            if found != n {
                return Err(Error::ArityMismatch { expected: n, found });
            }
        }
        Ok(GroupoidElement {
            f1,
            alpha,
            labels,
            f2,
        })
    }

    fn from_parts(f1: Forest, alpha: Permutation, labels: Vec<KleinLabel>, f2: Forest) -> Self {
        debug_assert_eq!(f1.leaf_count(), alpha.len());
        debug_assert_eq!(f2.leaf_count(), alpha.len());
        debug_assert_eq!(labels.len(), alpha.len());
        GroupoidElement {
            f1,
            alpha,
            labels,
            f2,
        }
    }

    pub fn identity(m: usize) -> Self {
        Self::from_parts(
            Forest::trivial(m),
            Permutation::identity(m),
            vec![KleinLabel::E; m],
            Forest::trivial(m),
        )
    }

    /// A binary forest `C(m) → C(n)` with trivial decoration.
    pub fn from_forest(f: Forest) -> Self {
        let n = f.leaf_count();
        Self::from_parts(
            f,
            Permutation::identity(n),
            vec![KleinLabel::E; n],
            Forest::trivial(n),
        )
    }

    pub fn from_permutation(alpha: Permutation) -> Self {
        let n = alpha.len();
        Self::from_parts(
            Forest::trivial(n),
            alpha,
            vec![KleinLabel::E; n],
            Forest::trivial(n),
        )
    }

    /// `p_α (k₁ ⊕ … ⊕ k_n)`, an element of the wreath product `K_n`.
    pub fn from_klein(alpha: Permutation, labels: Vec<KleinLabel>) -> Result<Self> {
        let n = alpha.len();
        Self::new(Forest::trivial(n), alpha, labels, Forest::trivial(n))
    }

    /// The split `x_i^{(n)} : C(n) → C(n+1)`.
    pub fn split(n: usize, i: usize) -> Result<Self> {
        Ok(Self::from_forest(Forest::split_at(n, i)?))
    }

    /// `σ_i^{(n)}`.
    pub fn sigma(n: usize, i: usize) -> Result<Self> {
        let x = Forest::split_at(n, i)?;
        Ok(Self::from_parts(
            x.clone(),
            Permutation::transposition(n + 1, i, i + 1),
            vec![KleinLabel::E; n + 1],
            x,
        ))
    }

    /// The Grigorchuk element `w` acting on component `i` of `C(n)`, written through
    /// its nucleus form.
    pub fn grigorchuk_at(n: usize, i: usize, w: &GrigWord) -> Result<Self> {
        Self::grigorchuk_at_with(n, i, w, &Limits::default())
    }

    pub fn grigorchuk_at_with(n: usize, i: usize, w: &GrigWord, limits: &Limits) -> Result<Self> {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, len: n });
        }
        let form = nucleus_form(w, true, limits.depth)?;
        let local = Self::from_parts(
            Forest::from_tree(form.tree.clone()),
            form.alpha,
            form.labels,
            Forest::from_tree(form.tree),
        );
        Ok(Self::identity(i)
            .direct_sum(&local)
            .direct_sum(&Self::identity(n - i - 1)))
    }

    /// `b_i^{(n)}`, `c_i^{(n)}` or `d_i^{(n)}`; the identity label gives the identity.
    pub fn klein_at(n: usize, i: usize, k: KleinLabel) -> Result<Self> {
        Self::grigorchuk_at(n, i, &k.word())
    }

    pub fn f1(&self) -> &Forest {
        &self.f1
    }

    pub fn f2(&self) -> &Forest {
        &self.f2
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    pub fn labels(&self) -> &[KleinLabel] {
        &self.labels
    }

    pub fn domain_roots(&self) -> usize {
        self.f1.roots()
    }

    pub fn range_roots(&self) -> usize {
        self.f2.roots()
    }

    /// Number of leaves `n` of each forest.
    pub fn width(&self) -> usize {
        self.alpha.len()
    }

    /// `self ⊕ other`.
    pub fn direct_sum(&self, other: &GroupoidElement) -> GroupoidElement {
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        Self::from_parts(
            self.f1.direct_sum(&other.f1),
            self.alpha.direct_sum(&other.alpha),
            labels,
            self.f2.direct_sum(&other.f2),
        )
    }

    /// `self ∘ h`, in normal form with Klein labels, caret-reduced.
    pub fn multiply(&self, h: &GroupoidElement) -> Result<GroupoidElement> {
        self.multiply_with(h, &Limits::default())
    }

    pub fn multiply_with(&self, h: &GroupoidElement, limits: &Limits) -> Result<GroupoidElement> {
        let g = self;
        if g.domain_roots() != h.range_roots() {
            return Err(Error::ArityMismatch {
                expected: g.domain_roots(),
                found: h.range_roots(),
            });
        }
        // g₁ h₂⁻¹ = A⁻¹ B with A ∘ g₁ = B ∘ h₂.
        let (a, b) = refine_forests(&g.f1, &h.f2)?;

        // B p_β (ℓ) = p_β′ B₁ (ℓ) = p_β′ p_δ (W) B₂
        let (beta1, b1) = permutation_pushdown(&b, &h.alpha)?;
        let h_words: Vec<GrigWord> = h.labels.iter().map(|k| k.word()).collect();
        let (delta, right_words, b2) = push_forest_through_decoration(&b1, &h_words)?;

        // A (k) = p_μ (W′) A₂, so (k) A⁻¹ = A₂⁻¹ (W′)⁻¹ p_μ⁻¹.
        let g_words: Vec<GrigWord> = g.labels.iter().map(|k| k.word()).collect();
        let (mu, left_words, a2) = push_forest_through_decoration(&a, &g_words)?;

        // p_α A₂⁻¹ = (A₂ p_α⁻¹)⁻¹ = (p_ν A₃)⁻¹.
        let (nu, a3) = permutation_pushdown(&a2, &g.alpha.inverse())?;

        // Middle: p_ν⁻¹ (W′)⁻¹ p_ε (W) = p_ζ (⊕ W′⁻¹_{ε(i)} W_i)
        let epsilon = mu.inverse().compose(&beta1).compose(&delta);
        let zeta = nu.inverse().compose(&epsilon);
        let middle: Vec<GrigWord> = right_words
            .iter()
            .enumerate()
            .map(|(i, w)| {
                left_words[epsilon.apply(i)]
                    .inverse()
                    .then_after(w)
                    .reduce()
            })
            .collect();

        let outer = Forest::compose(&g.f2, &a3)?;
        let inner = Forest::compose(&h.f1, &b2)?;

        // Each middle word becomes t_i⁻¹ p_{a_i} (k) t_i.
        let mut trees = Vec::with_capacity(middle.len());
        let mut perms = Vec::with_capacity(middle.len());
        let mut labels = Vec::new();
        for w in &middle {
            let form = nucleus_form(w, false, limits.depth)?;
            trees.push(form.tree);
            perms.push(form.alpha);
            labels.extend(form.labels);
        }
        let t = Forest::new(trees)?;
        // p_ζ T⁻¹ = (T p_ζ⁻¹)⁻¹ = (p_ρ T′)⁻¹
        let (rho, t_prime) = permutation_pushdown(&t, &zeta.inverse())?;
        let alpha = rho.inverse().compose(&Permutation::block_sum(&perms));
        let f1 = Forest::compose(&inner, &t)?;
        let f2 = Forest::compose(&outer, &t_prime)?;
        Ok(Self::from_parts(f1, alpha, labels, f2).reduce())
    }

    pub fn invert(&self) -> GroupoidElement {
        let inv = self.alpha.inverse();
        let labels = (0..self.width())
            .map(|i| self.labels[inv.apply(i)])
            .collect();
        Self::from_parts(self.f2.clone(), inv, labels, self.f1.clone())
    }

    /// Exact identity test. A decorated pair maps the cylinder of leaf `j` onto the
    /// cylinder of leaf `α(j)`; it is the identity exactly when the cylinders agree
    /// leaf by leaf and every tail action is trivial.
    pub fn is_identity(&self) -> bool {
        let r = self.reduce();
        r.domain_roots() == r.range_roots()
            && r.f1 == r.f2
            && r.alpha.is_identity()
            && r.labels.iter().all(|k| k.is_identity())
    }

    /// Writes the element as `p_α (k₁ ⊕ … ⊕ k_n)` when it lies in `K_n`. Each domain
    /// root must land inside a single range root, and one Klein element must match
    /// every leaf there: it carries the leaf address to the image address and leaves
    /// the leaf label as its residual.
    pub fn klein_decomposition(&self) -> Option<(Permutation, Vec<KleinLabel>)> {
        let n = self.domain_roots();
        if n != self.range_roots() {
            return None;
        }
        let offsets = self.f1.offsets();
        let mut images = Vec::with_capacity(n);
        let mut labels = Vec::with_capacity(n);
        for r in 0..n {
            let span = offsets[r]..offsets[r + 1];
            let targets: Vec<(usize, &Address)> = span
                .clone()
                .map(|j| self.f2.leaf_location(self.alpha.apply(j)))
                .collect::<Result<_>>()
                .ok()?;
            let root = targets[0].0;
            if targets.iter().any(|(t, _)| *t != root) {
                return None;
            }
            let k = KleinLabel::ALL.into_iter().find(|k| {
                let word = k.word();
                span.clone().zip(&targets).all(|(j, (_, image))| {
                    let (_, a) = self.f1.leaf_location(j).expect("leaf in range");
                    let (bits, residual) = word.eval(a.bits());
                    bits == image.bits() && residual.as_klein() == Some(self.labels[j])
                })
            })?;
            images.push(root);
            labels.push(k);
        }
        let alpha = Permutation::from_images(images).ok()?;
        Some((alpha, labels))
    }

    pub fn equals(&self, other: &GroupoidElement) -> Result<bool> {
        if self.domain_roots() != other.domain_roots() {
            return Err(Error::ArityMismatch {
                expected: self.domain_roots(),
                found: other.domain_roots(),
            });
        }
        if self.range_roots() != other.range_roots() {
            return Err(Error::ArityMismatch {
                expected: self.range_roots(),
                found: other.range_roots(),
            });
        }
        Ok(self.multiply(&other.invert())?.is_identity())
    }

    /// Image of the finite prefix `bits` in component `root`.
    pub fn evaluate(&self, root: usize, bits: &[bool]) -> Result<Evaluation> {
        if root >= self.domain_roots() {
            return Err(Error::IndexOutOfRange {
                index: root,
                len: self.domain_roots(),
            });
        }
        let (j, used) = self
            .f1
            .locate(root, bits)
            .ok_or(Error::InputTooShallow { len: bits.len() })?;
        let (tail, residual) = self.labels[j].word().eval(&bits[used..]);
        let (out_root, addr) = self.f2.leaf_location(self.alpha.apply(j))?;
        Ok(Evaluation {
            root: out_root,
            bits: addr.concat(&tail).bits().to_vec(),
            residual,
        })
    }

    /// Greedy caret cancellation: sibling leaves of `f1` sent in order onto sibling
    /// leaves of `f2` with labels `(e, e)` or `(e, b)` merge into one leaf labelled
    /// `e` or `d`.
    pub fn reduce(&self) -> GroupoidElement {
        let mut cur = self.clone();
        while let Some(next) = cur.reduce_once() {
            cur = next;
        }
        cur
    }

    fn reduce_once(&self) -> Option<GroupoidElement> {
        let n = self.width();
        let roots1 = self.f1.leaf_roots();
        let roots2 = self.f2.leaf_roots();
        for j in 0..n.saturating_sub(1) {
            if roots1[j] != roots1[j + 1] {
                continue;
            }
            let merged_label = match (self.labels[j], self.labels[j + 1]) {
                (KleinLabel::E, KleinLabel::E) => KleinLabel::E,
                (KleinLabel::E, KleinLabel::B) => KleinLabel::D,
                _ => continue,
            };
            let (i, i1) = (self.alpha.apply(j), self.alpha.apply(j + 1));
            if i1 != i + 1 || roots2[i] != roots2[i1] {
                continue;
            }
            let (r1, a) = self.f1.leaf_location(j).ok()?;
            let (_, a1) = self.f1.leaf_location(j + 1).ok()?;
            let (r2, b) = self.f2.leaf_location(i).ok()?;
            let (_, b1) = self.f2.leaf_location(i1).ok()?;
            if !are_siblings(a, a1) || !are_siblings(b, b1) {
                continue;
            }
            let f1 = merge_leaf(&self.f1, r1, a);
            let f2 = merge_leaf(&self.f2, r2, b);
            let images = (0..n)
                .filter(|&t| t != j + 1)
                .map(|t| {
                    let img = self.alpha.apply(t);
                    if img > i1 {
                        img - 1
                    } else {
                        img
                    }
                })
                .collect();
            let mut labels = self.labels.clone();
            labels.remove(j + 1);
            labels[j] = merged_label;
            return Some(Self::from_parts(
                f1,
                Permutation::from_images(images).expect("merged permutation"),
                labels,
                f2,
            ));
        }
        None
    }
}

fn are_siblings(a: &Address, b: &Address) -> bool {
    match (a.parent(), b.parent()) {
        (Some((pa, false)), Some((pb, true))) => pa == pb,
        _ => false,
    }
}

/// Replaces the leaf `left` (ending in 0) and its right sibling by their parent.
fn merge_leaf(f: &Forest, root: usize, left: &Address) -> Forest {
    let (parent, _) = left.parent().expect("sibling leaf has a parent");
    let trees = f
        .trees()
        .iter()
        .enumerate()
        .map(|(r, t)| {
            if r != root {
                return t.clone();
            }
            let pos = t.position(left).expect("leaf present");
            let mut leaves = t.leaves().to_vec();
            leaves.remove(pos + 1);
            leaves[pos] = parent.clone();
            Tree::from_sorted_unchecked(leaves)
        })
        .collect();
    Forest::new(trees).expect("roots preserved")
}

impl fmt::Debug for GroupoidElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: String = self.labels.iter().map(|k| k.as_char()).collect();
        write!(
            f,
            "({:?} -> {:?} {} -> {:?})",
            self.f1, self.alpha, labels, self.f2
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grigorchuk::KleinLabel::*;

    fn w(s: &str) -> GrigWord {
        GrigWord::parse(s).unwrap()
    }

    fn tree(leaves: &[&str]) -> Tree {
        Tree::from_leaves(leaves.iter().map(|s| Address::parse(s).unwrap())).unwrap()
    }

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    fn x() -> GroupoidElement {
        GroupoidElement::split(1, 0).unwrap()
    }

    fn g(word: &str) -> GroupoidElement {
        GroupoidElement::grigorchuk_at(1, 0, &w(word)).unwrap()
    }

    #[test]
    fn make_element_examples() {
        let id = GroupoidElement::new(
            Forest::trivial(1),
            Permutation::identity(1),
            vec![E],
            Forest::trivial(1),
        )
        .unwrap();
        assert!(id.is_identity());
        let caret = Forest::split_at(1, 0).unwrap();
        let sigma = GroupoidElement::new(
            caret.clone(),
            Permutation::transposition(2, 0, 1),
            vec![E, E],
            caret.clone(),
        )
        .unwrap();
        assert!(sigma.equals(&g("s")).unwrap());
        let d = GroupoidElement::new(
            caret.clone(),
            Permutation::identity(2),
            vec![E, B],
            caret.clone(),
        )
        .unwrap();
        assert!(d.equals(&g("d")).unwrap());
        assert!(
            GroupoidElement::new(caret.clone(), Permutation::identity(2), vec![E], caret).is_err()
        );
    }

    #[test]
    fn generator_shapes() {
        let b = g("b");
        let t = Forest::from_tree(tree(&["00", "01", "1"]));
        assert_eq!(b.f1(), &t);
        assert_eq!(b.f2(), &t);
        assert_eq!(b.alpha(), &Permutation::transposition(3, 0, 1));
        assert_eq!(b.labels(), &[E, E, C]);

        let x1 = GroupoidElement::split(2, 0).unwrap();
        assert_eq!(x1.f1(), &Forest::split_at(2, 0).unwrap());
        assert!(x1.f2().is_trivial() && x1.alpha().is_identity());
        assert_eq!((x1.domain_roots(), x1.range_roots()), (2, 3));

        let s2 = GroupoidElement::sigma(2, 1).unwrap();
        assert_eq!(s2.f1(), &Forest::split_at(2, 1).unwrap());
        assert_eq!(
            s2.alpha(),
            &Permutation::from_one_based(&[1, 3, 2]).unwrap()
        );
    }

    #[test]
    fn involutions() {
        for s in ["s", "b", "c", "d"] {
            assert!(g(s).multiply(&g(s)).unwrap().is_identity(), "{s}²");
            assert!(!g(s).is_identity());
        }
    }

    #[test]
    fn inverse_examples() {
        assert!(GroupoidElement::identity(1).invert().is_identity());
        assert!(g("s").invert().equals(&g("s")).unwrap());
        let xi = x().invert();
        assert_eq!((xi.domain_roots(), xi.range_roots()), (2, 1));
        assert!(xi.f1().is_trivial());
        assert_eq!(xi.f2(), &Forest::split_at(1, 0).unwrap());
    }

    #[test]
    fn evaluate_examples() {
        let e = g("s").evaluate(0, &bits("0110")).unwrap();
        assert_eq!((e.root, e.bits, e.residual), (0, bits("1110"), w("")));
        let d = GroupoidElement::new(
            Forest::split_at(1, 0).unwrap(),
            Permutation::identity(2),
            vec![E, B],
            Forest::split_at(1, 0).unwrap(),
        )
        .unwrap();
        let e = d.evaluate(0, &bits("10")).unwrap();
        assert_eq!((e.root, e.bits, e.residual), (0, bits("10"), w("s")));
        let e = x().evaluate(0, &bits("01")).unwrap();
        assert_eq!((e.root, e.bits), (0, bits("1")));
        assert_eq!(
            g("b").evaluate(0, &bits("0")),
            Err(Error::InputTooShallow { len: 1 })
        );
    }

    #[test]
    fn reduce_examples() {
        let caret = Forest::split_at(1, 0).unwrap();
        let trivial_pair = GroupoidElement::new(
            caret.clone(),
            Permutation::identity(2),
            vec![E, E],
            caret.clone(),
        )
        .unwrap();
        assert_eq!(trivial_pair.reduce(), GroupoidElement::identity(1));
        let d = GroupoidElement::new(caret.clone(), Permutation::identity(2), vec![E, B], caret)
            .unwrap();
        let r = d.reduce();
        assert!(r.f1().is_trivial() && r.f2().is_trivial());
        assert_eq!(r.labels(), &[D]);
        assert_eq!(r.reduce(), r);
    }

    #[test]
    fn caret_identities() {
        let x = x();
        let s1 = GroupoidElement::sigma(2, 0).unwrap();
        let k2 = |k| GroupoidElement::klein_at(2, 1, k).unwrap();
        let lhs = x.multiply(&g("b")).unwrap();
        let rhs = s1.multiply(&k2(C)).unwrap().multiply(&x).unwrap();
        assert!(lhs.equals(&rhs).unwrap());
        assert!(lhs.multiply(&rhs.invert()).unwrap().is_identity());
        let lhs = x.multiply(&g("c")).unwrap();
        let rhs = s1.multiply(&k2(D)).unwrap().multiply(&x).unwrap();
        assert!(lhs.equals(&rhs).unwrap());
        let lhs = x.multiply(&g("d")).unwrap();
        let rhs = k2(B).multiply(&x).unwrap();
        assert!(lhs.equals(&rhs).unwrap());
        // x₁σ₁x = p₍₁ ₂₎x₁x
        let x1 = GroupoidElement::split(2, 0).unwrap();
        let lhs = x1.multiply(&s1).unwrap().multiply(&x).unwrap();
        let p = GroupoidElement::from_permutation(Permutation::transposition(3, 0, 1));
        let rhs = p.multiply(&x1).unwrap().multiply(&x).unwrap();
        assert!(lhs.equals(&rhs).unwrap());
    }

    #[test]
    fn b_and_c_differ() {
        assert!(!g("b").equals(&g("c")).unwrap());
        assert!(g("b").multiply(&g("c")).unwrap().equals(&g("d")).unwrap());
    }

    #[test]
    fn sigma_d_has_order_four() {
        let sd = g("s").multiply(&g("d")).unwrap();
        let mut p = sd.clone();
        let mut order = 1;
        while !p.is_identity() {
            p = p.multiply(&sd).unwrap();
            order += 1;
        }
        assert_eq!(order, 4);
    }

    #[test]
    fn arity_mismatch() {
        assert!(matches!(
            x().multiply(&x()),
            Err(Error::ArityMismatch { .. })
        ));
        assert!(matches!(
            x().equals(&g("b")),
            Err(Error::ArityMismatch { .. })
        ));
    }
}

#[cfg(test)]
mod semantic_tests {
    use super::*;
    use crate::sampling::random_element_to;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_bits(rng: &mut ChaCha8Rng, n: usize) -> Vec<bool> {
        (0..n).map(|_| rng.gen()).collect()
    }

    #[test]
    fn multiply_agrees_with_composition_of_evaluations() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let m = rng.gen_range(1..=3);
            let mid = rng.gen_range(1..=4);
            let out = rng.gen_range(1..=4);
            let h = random_element_to(&mut rng, m, mid, 5).unwrap();
            let g = random_element_to(&mut rng, mid, out, 5).unwrap();
            let gh = g.multiply(&h).unwrap();
            for _ in 0..20 {
                let root = rng.gen_range(0..m);
                let u = random_bits(&mut rng, 24);
                let e1 = h.evaluate(root, &u).unwrap();
                let e2 = g.evaluate(e1.root, &e1.bits).unwrap();
                let e = gh.evaluate(root, &u).unwrap();
                assert_eq!((e.root, &e.bits), (e2.root, &e2.bits), "g={g:?} h={h:?}");
            }
        }
    }

    #[test]
    fn inverse_and_reduce_are_sound() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let m = rng.gen_range(1..=3);
            let r = rng.gen_range(1..=4);
            let g = random_element_to(&mut rng, m, r, 6).unwrap();
            assert!(g.multiply(&g.invert()).unwrap().is_identity());
            assert!(g.invert().multiply(&g).unwrap().is_identity());
            assert!(g.reduce().equals(&g).unwrap());
        }
    }

    #[test]
    fn associativity_on_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..30 {
            let a = random_element_to(&mut rng, 1, 2, 4).unwrap();
            let b = random_element_to(&mut rng, 2, 3, 4).unwrap();
            let c = random_element_to(&mut rng, 3, 2, 4).unwrap();
            let left = c.multiply(&b).unwrap().multiply(&a).unwrap();
            let right = c.multiply(&b.multiply(&a).unwrap()).unwrap();
            assert!(left.equals(&right).unwrap());
            assert!(GroupoidElement::identity(2)
                .multiply(&left)
                .unwrap()
                .equals(&left)
                .unwrap());
            assert!(left
                .multiply(&GroupoidElement::identity(1))
                .unwrap()
                .equals(&left)
                .unwrap());
        }
    }
}
