//! The first Grigorchuk group as a five-state Mealy automaton, its Klein four
//! subgroup, and the wreath-recursion rewriting that pushes carets through words.
//!
//! Words are products `s₁s₂…s_r` acting on the left, so the rightmost letter acts first.

use std::collections::VecDeque;
use std::fmt;

use crate::cantor::{Address, Forest, Permutation, Tree};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KleinLabel {
    E,
    B,
    C,
    D,
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl std::ops::Mul for KleinLabel {
    type Output = KleinLabel;

    fn mul(self, other: KleinLabel) -> KleinLabel {
        // {e,b,c,d} ≅ Z/2 × Z/2 with b = (1,0), c = (0,1), d = (1,1).
        KleinLabel::from_code(self.code() ^ other.code())
    }
}

impl KleinLabel {
    pub const ALL: [KleinLabel; 4] = [KleinLabel::E, KleinLabel::B, KleinLabel::C, KleinLabel::D];

    fn code(self) -> u8 {
        match self {
            KleinLabel::E => 0,
            KleinLabel::B => 1,
            KleinLabel::C => 2,
            KleinLabel::D => 3,
        }
    }

    fn from_code(code: u8) -> KleinLabel {
        match code {
            0 => KleinLabel::E,
            1 => KleinLabel::B,
            2 => KleinLabel::C,
            _ => KleinLabel::D,
        }
    }

    pub fn is_identity(self) -> bool {
        self == KleinLabel::E
    }

    pub fn as_char(self) -> char {
        match self {
            KleinLabel::E => 'e',
            KleinLabel::B => 'b',
            KleinLabel::C => 'c',
            KleinLabel::D => 'd',
        }
    }

    pub fn from_char(c: char) -> Option<KleinLabel> {
        match c {
            'e' => Some(KleinLabel::E),
            'b' => Some(KleinLabel::B),
            'c' => Some(KleinLabel::C),
            'd' => Some(KleinLabel::D),
            _ => None,
        }
    }

    pub fn state(self) -> NucleusState {
        match self {
            KleinLabel::E => NucleusState::E,
            KleinLabel::B => NucleusState::B,
            KleinLabel::C => NucleusState::C,
            KleinLabel::D => NucleusState::D,
        }
    }

    pub fn word(self) -> GrigWord {
        match self {
            KleinLabel::E => GrigWord::identity(),
            KleinLabel::B => GrigWord::from_letters(vec![Letter::B]),
            KleinLabel::C => GrigWord::from_letters(vec![Letter::C]),
            KleinLabel::D => GrigWord::from_letters(vec![Letter::D]),
        }
    }
}

/// States of the contracting nucleus `{e, σ, b, c, d}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NucleusState {
    E,
    Sigma,
    B,
    C,
    D,
}

impl NucleusState {
    /// One Mealy transition: output bit and the state acting on the rest.
    pub fn step(self, bit: bool) -> (bool, NucleusState) {
        use NucleusState::*;
        match (self, bit) {
            (E, v) => (v, E),
            (Sigma, v) => (!v, E),
            (B, false) | (C, false) => (false, Sigma),
            (B, true) => (true, C),
            (C, true) => (true, D),
            (D, false) => (false, E),
            (D, true) => (true, B),
        }
    }

    fn letter(self) -> Option<Letter> {
        match self {
            NucleusState::E => None,
            NucleusState::Sigma => Some(Letter::Sigma),
            NucleusState::B => Some(Letter::B),
            NucleusState::C => Some(Letter::C),
            NucleusState::D => Some(Letter::D),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Sigma,
    B,
    C,
    D,
}

impl Letter {
    fn state(self) -> NucleusState {
        match self {
            Letter::Sigma => NucleusState::Sigma,
            Letter::B => NucleusState::B,
            Letter::C => NucleusState::C,
            Letter::D => NucleusState::D,
        }
    }

    fn klein(self) -> Option<KleinLabel> {
        match self {
            Letter::Sigma => None,
            Letter::B => Some(KleinLabel::B),
            Letter::C => Some(KleinLabel::C),
            Letter::D => Some(KleinLabel::D),
        }
    }

    fn as_char(self) -> char {
        match self {
            Letter::Sigma => 's',
            Letter::B => 'b',
            Letter::C => 'c',
            Letter::D => 'd',
        }
    }
}

/// A word over `{σ, b, c, d}`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrigWord {
    letters: Vec<Letter>,
}

impl GrigWord {
    pub fn identity() -> Self {
        GrigWord::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        GrigWord { letters }
    }

    /// Parses a string over `s, b, c, d` (`σ` is accepted for `s`, `e` is skipped).
    pub fn parse(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for c in s.chars() {
            match c {
                's' | 'σ' | 'a' => letters.push(Letter::Sigma),
                'b' => letters.push(Letter::B),
                'c' => letters.push(Letter::C),
                'd' => letters.push(Letter::D),
                'e' | '1' => {}
                c if c.is_whitespace() => {}
                _ => return Err(Error::Parse(format!("bad Grigorchuk letter {c:?}"))),
            }
        }
        Ok(GrigWord { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self · other`: `other` acts first.
    pub fn then_after(&self, other: &GrigWord) -> GrigWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GrigWord { letters }
    }

    /// Every generator is an involution, so the inverse is the reversed word.
    pub fn inverse(&self) -> GrigWord {
        GrigWord {
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// Free cancellation of `σσ`, multiplication of adjacent Klein letters, removal
    /// of `e`. The output alternates `σ` with Klein letters.
    pub fn reduce(&self) -> GrigWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match (out.last().copied(), l) {
                (Some(Letter::Sigma), Letter::Sigma) => {
                    out.pop();
                }
                (Some(top), l) if top != Letter::Sigma && l != Letter::Sigma => {
                    out.pop();
                    let k = top.klein().unwrap() * l.klein().unwrap();
                    if let Some(letter) = k.state().letter() {
                        out.push(letter);
                    }
                }
                _ => out.push(l),
            }
        }
        GrigWord { letters: out }
    }

    /// The Klein label equal to this word after reduction, if it reduces to at most
    /// one Klein letter.
    pub fn as_klein(&self) -> Option<KleinLabel> {
        match self.reduce().letters.as_slice() {
            [] => Some(KleinLabel::E),
            [l] => l.klein(),
            _ => None,
        }
    }

    /// Image of the prefix `input` and the word acting on everything after it.
    pub fn eval(&self, input: &[bool]) -> (Vec<bool>, GrigWord) {
        let mut bits = input.to_vec();
        let mut residual = vec![None; self.letters.len()];
        for (pos, letter) in self.letters.iter().enumerate().rev() {
            let mut state = letter.state();
            for b in bits.iter_mut() {
                let (out, next) = state.step(*b);
                *b = out;
                state = next;
                if state == NucleusState::E {
                    break;
                }
            }
            residual[pos] = state.letter();
        }
        (
            bits,
            GrigWord {
                letters: residual.into_iter().flatten().collect(),
            },
        )
    }
}

impl fmt::Display for GrigWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for GrigWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Mealy transition of a single nucleus state.
pub fn nucleus_step(state: NucleusState, bit: bool) -> (bool, NucleusState) {
    state.step(bit)
}

/// `x·w = p_swap (w₀ ⊕ w₁)·x`: whether `w` swaps the halves, and its reduced
/// restrictions to the two halves.
pub fn push_split_through_word(w: &GrigWord) -> (bool, GrigWord, GrigWord) {
    let (out0, w0) = w.eval(&[false]);
    let (_, w1) = w.eval(&[true]);
    (out0[0], w0.reduce(), w1.reduce())
}

/// `t·w = p_α (w′₁ ⊕ … ⊕ w′_n)·t′`, computed caret by caret.
pub fn push_tree_through_word(t: &Tree, w: &GrigWord) -> (Permutation, Vec<GrigWord>, Tree) {
    let w = w.reduce();
    if w.is_empty() {
        let n = t.leaf_count();
        return (
            Permutation::identity(n),
            vec![GrigWord::identity(); n],
            t.clone(),
        );
    }
    let Some((left, right)) = t.children() else {
        return (Permutation::identity(1), vec![w], t.clone());
    };
    let (swap, w0, w1) = push_split_through_word(&w);
    if !swap {
        // t·w = (L w₀ ⊕ R w₁)·x
        let (pa, mut wa, l2) = push_tree_through_word(&left, &w0);
        let (pb, wb, r2) = push_tree_through_word(&right, &w1);
        wa.extend(wb);
        (pa.direct_sum(&pb), wa, Tree::join(&l2, &r2))
    } else {
        // t·w = (L ⊕ R)·p₍₁ ₂₎·(w₀ ⊕ w₁)·x = p_γ (R w₀ ⊕ L w₁)·x
        let (pa, mut wa, r2) = push_tree_through_word(&right, &w0);
        let (pb, wb, l2) = push_tree_through_word(&left, &w1);
        wa.extend(wb);
        let (nl, nr) = (left.leaf_count(), right.leaf_count());
        let gamma = Permutation::from_images((0..nr).map(|i| nl + i).chain(0..nl).collect())
            .expect("block swap");
        (gamma.compose(&pa.direct_sum(&pb)), wa, Tree::join(&r2, &l2))
    }
}

/// `f (w₁ ⊕ … ⊕ w_m) = p_α (w′₁ ⊕ … ⊕ w′_n) f′` for a forest with `m` roots.
pub fn push_forest_through_decoration(
    f: &Forest,
    words: &[GrigWord],
) -> Result<(Permutation, Vec<GrigWord>, Forest)> {
    if words.len() != f.roots() {
        return Err(Error::ArityMismatch {
            expected: f.roots(),
            found: words.len(),
        });
    }
    let mut perms = Vec::with_capacity(f.roots());
    let mut out_words = Vec::with_capacity(f.leaf_count());
    let mut trees = Vec::with_capacity(f.roots());
    for (t, w) in f.trees().iter().zip(words) {
        let (p, ws, t2) = push_tree_through_word(t, w);
        perms.push(p);
        out_words.extend(ws);
        trees.push(t2);
    }
    Ok((
        Permutation::block_sum(&perms),
        out_words,
        Forest::new(trees)?,
    ))
}

/// `w = t⁻¹ p_α (k₁ ⊕ … ⊕ k_n) t` with every `k_i` in the Klein group. Labels are
/// indexed by the leaf of `t` they act on before the permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NucleusForm {
    pub tree: Tree,
    pub alpha: Permutation,
    pub labels: Vec<KleinLabel>,
}

/// Nucleus form of a word. Non-identity words are split at the root at least once;
/// further leaves are split while their residual is not a Klein letter.
pub fn word_to_nucleus_form(w: &GrigWord) -> Result<NucleusForm> {
    nucleus_form(w, true, crate::Limits::default().depth)
}

/// Nucleus form with an explicit depth cap. With `split_root` false, a word that
/// already reduces to a Klein letter keeps the trivial tree.
pub fn nucleus_form(w: &GrigWord, split_root: bool, cap: usize) -> Result<NucleusForm> {
    let w = w.reduce();
    let mut leaves = if split_root && !w.is_empty() {
        Tree::caret().leaves().to_vec()
    } else {
        vec![Address::root()]
    };
    loop {
        // The leaf set is invariant under w, so images are again leaves.
        let evals: Vec<(usize, GrigWord)> = leaves
            .iter()
            .map(|a| {
                let (img, res) = w.eval(a.bits());
                let img = Address::from_bits(img);
                let j = leaves.binary_search(&img).expect("leaf set is w-invariant");
                (j, res.reduce())
            })
            .collect();
        let mut marked: Vec<bool> = evals.iter().map(|(_, r)| r.as_klein().is_none()).collect();
        if !marked.iter().any(|&m| m) {
            let alpha = Permutation::from_images(evals.iter().map(|(j, _)| *j).collect())
                .expect("w permutes its invariant leaf set");
            let labels = evals.iter().map(|(_, r)| r.as_klein().unwrap()).collect();
            return Ok(NucleusForm {
                tree: Tree::from_sorted_unchecked(leaves),
                alpha,
                labels,
            });
        }
        // Close the marked set under the action of w on leaves, keeping invariance.
        let mut queue: VecDeque<usize> = (0..leaves.len()).filter(|&i| marked[i]).collect();
        while let Some(i) = queue.pop_front() {
            let j = evals[i].0;
            if !marked[j] {
                marked[j] = true;
                queue.push_back(j);
            }
        }
        let mut next = Vec::with_capacity(leaves.len() * 2);
        for (a, m) in leaves.iter().zip(&marked) {
            if *m {
                if a.len() + 1 > cap {
                    return Err(Error::ContractionCapExceeded { cap });
                }
                next.push(a.child(false));
                next.push(a.child(true));
            } else {
                next.push(a.clone());
            }
        }
        leaves = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use KleinLabel::*;

    fn w(s: &str) -> GrigWord {
        GrigWord::parse(s).unwrap()
    }

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    fn all_bits(len: usize) -> impl Iterator<Item = Vec<bool>> {
        (0..1u32 << len).map(move |v| (0..len).map(|k| v >> (len - 1 - k) & 1 == 1).collect())
    }

    /// Applies the element `t⁻¹ p_α (k) t` to a point.
    fn eval_form(form: &NucleusForm, input: &[bool]) -> Vec<bool> {
        let j = form.tree.find_prefix(input).unwrap();
        let tail = &input[form.tree.leaves()[j].len()..];
        let (out, _) = form.labels[j].word().eval(tail);
        form.tree.leaves()[form.alpha.apply(j)]
            .concat(&out)
            .bits()
            .to_vec()
    }

    #[test]
    fn klein_table() {
        assert_eq!(B * C, D);
        assert_eq!(B * D, C);
        assert_eq!(C * D, B);
        assert_eq!(B * B, E);
        assert_eq!(E * D, D);
        for a in KleinLabel::ALL {
            assert_eq!(a * a, E);
            for b in KleinLabel::ALL {
                assert_eq!(a * b, b * a);
            }
        }
    }

    #[test]
    fn nucleus_step_examples() {
        assert_eq!(
            nucleus_step(NucleusState::Sigma, false),
            (true, NucleusState::E)
        );
        assert_eq!(nucleus_step(NucleusState::B, true), (true, NucleusState::C));
        assert_eq!(
            nucleus_step(NucleusState::D, false),
            (false, NucleusState::E)
        );
    }

    #[test]
    fn word_eval_examples() {
        assert_eq!(w("b").eval(&bits("10")), (bits("10"), w("s")));
        assert_eq!(w("s").eval(&bits("01")), (bits("11"), GrigWord::identity()));
        assert_eq!(
            GrigWord::identity().eval(&bits("0110")),
            (bits("0110"), GrigWord::identity())
        );
    }

    #[test]
    fn push_split_examples() {
        assert_eq!(push_split_through_word(&w("b")), (false, w("s"), w("c")));
        assert_eq!(push_split_through_word(&w("s")), (true, w(""), w("")));
        assert_eq!(push_split_through_word(&w("bd")), (false, w("s"), w("d")));
        assert_eq!(
            push_split_through_word(&w("bd")),
            push_split_through_word(&w("c"))
        );
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(w("bb").reduce(), w(""));
        assert_eq!(w("bc").reduce(), w("d"));
        assert_eq!(w("sbsbsb").reduce(), w("sbsbsb"));
        assert_eq!(w("sbbs").reduce(), w(""));
        assert_eq!(w("bsscd").reduce(), w(""));
    }

    #[test]
    fn generator_orders_by_evaluation() {
        for g in ["s", "b", "c", "d"] {
            let sq = w(g).then_after(&w(g));
            for u in all_bits(12).step_by(7) {
                assert_eq!(sq.eval(&u).0, u);
            }
        }
    }

    #[test]
    fn push_forest_examples() {
        let words = vec![w("b"), w("sd")];
        let (a, ws, f) = push_forest_through_decoration(&Forest::trivial(2), &words).unwrap();
        assert!(a.is_identity());
        assert_eq!(ws, vec![w("b"), w("sd")]);
        assert!(f.is_trivial());

        let x = Forest::split_at(1, 0).unwrap();
        let (a, ws, f) = push_forest_through_decoration(&x, &[w("b")]).unwrap();
        assert!(a.is_identity());
        assert_eq!(ws, vec![w("s"), w("c")]);
        assert_eq!(f, x);

        let (a, ws, f) = push_forest_through_decoration(&x, &[w("s")]).unwrap();
        assert_eq!(a, Permutation::transposition(2, 0, 1));
        assert_eq!(ws, vec![w(""), w("")]);
        assert_eq!(f, x);

        assert!(push_forest_through_decoration(&x, &[]).is_err());
    }

    #[test]
    fn nucleus_form_examples() {
        let s = word_to_nucleus_form(&w("s")).unwrap();
        assert_eq!(s.tree, Tree::caret());
        assert_eq!(s.alpha, Permutation::transposition(2, 0, 1));
        assert_eq!(s.labels, vec![E, E]);

        let d = word_to_nucleus_form(&w("d")).unwrap();
        assert_eq!(d.tree, Tree::caret());
        assert!(d.alpha.is_identity());
        assert_eq!(d.labels, vec![E, B]);

        let b = word_to_nucleus_form(&w("b")).unwrap();
        let expected =
            Tree::from_leaves(["00", "01", "1"].map(|s| Address::parse(s).unwrap())).unwrap();
        assert_eq!(b.tree, expected);
        assert_eq!(b.alpha, Permutation::transposition(3, 0, 1));
        assert_eq!(b.labels, vec![E, E, C]);
        for u in all_bits(3) {
            assert_eq!(eval_form(&b, &u), w("b").eval(&u).0);
        }

        let e = word_to_nucleus_form(&w("")).unwrap();
        assert!(e.tree.is_trivial());
        assert_eq!(e.labels, vec![E]);
    }

    #[test]
    fn nucleus_form_agrees_with_transducer_on_nucleus() {
        for g in ["", "s", "b", "c", "d"] {
            let form = word_to_nucleus_form(&w(g)).unwrap();
            for u in all_bits(12) {
                assert_eq!(eval_form(&form, &u), w(g).eval(&u).0, "state {g}");
            }
        }
    }

    #[test]
    fn nucleus_form_cap_is_enforced() {
        let long = w("sbsbsbsbsbsbsbsbsc");
        assert_eq!(
            nucleus_form(&long, true, 1),
            Err(Error::ContractionCapExceeded { cap: 1 })
        );
        assert!(nucleus_form(&long, true, 64).is_ok());
    }

    fn arb_word(max: usize) -> impl Strategy<Value = GrigWord> {
        prop::collection::vec(
            prop_oneof![
                Just(Letter::Sigma),
                Just(Letter::B),
                Just(Letter::C),
                Just(Letter::D)
            ],
            0..=max,
        )
        .prop_map(GrigWord::from_letters)
    }

    fn arb_tree() -> impl Strategy<Value = Tree> {
        Just(Tree::trivial()).prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                1 => Just(Tree::trivial()),
                3 => (inner.clone(), inner).prop_map(|(l, r)| Tree::join(&l, &r)),
            ]
        })
    }

    proptest! {
        #[test]
        fn push_split_is_sound(word in arb_word(8), u in prop::collection::vec(any::<bool>(), 1..=10)) {
            let (swap, w0, w1) = push_split_through_word(&word);
            // x·w on u: w first, then the first bit selects the component.
            let lhs = word.eval(&u).0;
            let (tail, _) = if u[0] { w1.eval(&u[1..]) } else { w0.eval(&u[1..]) };
            prop_assert_eq!(lhs[0], u[0] ^ swap);
            prop_assert_eq!(&lhs[1..], &tail[..]);
        }

        #[test]
        fn reduce_preserves_the_element(word in arb_word(12), u in prop::collection::vec(any::<bool>(), 12)) {
            prop_assert_eq!(word.eval(&u).0, word.reduce().eval(&u).0);
        }

        #[test]
        fn push_tree_agrees_with_semantics(t in arb_tree(), word in arb_word(8), extra in prop::collection::vec(any::<bool>(), 16)) {
            // Oracle: t ∘ w evaluated pointwise against p_α (⊕ w′) t′.
            let (alpha, words, t2) = push_tree_through_word(&t, &word);
            prop_assert_eq!(t2.leaf_count(), t.leaf_count());
            let u = &extra[..];
            let img = word.eval(u).0;
            let j = t.find_prefix(&img).unwrap();
            let lhs = (j, img[t.leaves()[j].len()..].to_vec());
            let i = t2.find_prefix(u).unwrap();
            let (tail, _) = words[i].eval(&u[t2.leaves()[i].len()..]);
            prop_assert_eq!(lhs, (alpha.apply(i), tail));
        }

        #[test]
        fn nucleus_form_terminates_and_agrees(word in arb_word(10), u in prop::collection::vec(any::<bool>(), 24)) {
            let form = word_to_nucleus_form(&word).unwrap();
            prop_assert_eq!(eval_form(&form, &u), word.eval(&u).0);
        }
    }
}
