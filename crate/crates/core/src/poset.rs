//! The expansion poset: vertices `[f] = K_n f`, splittings, expansions, elementary
//! cores, stabilizers and basic polysimplices.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;

use crate::cantor::{common_refinement, Address, Forest, Permutation, Tree};
use crate::error::{Error, Result};
use crate::grigorchuk::KleinLabel;
use crate::groupoid::GroupoidElement;
use crate::limits::Limits;

/// The partition of `C(1)` into the preimages of the range components, each cell
/// written as its maximal cylinders. Left multiplication by `K_n` only permutes
/// the cells, so equal vertices have equal keys.
pub type PartitionKey = Vec<Vec<Address>>;

/// A coset `[f]` carried by any representative `f : C(1) → C(n)`.
#[derive(Clone)]
pub struct Vertex {
    rep: GroupoidElement,
    key: PartitionKey,
}

impl Vertex {
    pub fn new(rep: GroupoidElement) -> Result<Self> {
        if rep.domain_roots() != 1 {
            return Err(Error::ArityMismatch {
                expected: 1,
                found: rep.domain_roots(),
            });
        }
        let rep = rep.reduce();
        let key = partition_key(&rep);
        Ok(Vertex { rep, key })
    }

    /// `[1]`.
    pub fn root() -> Self {
        Self::new(GroupoidElement::identity(1)).expect("domain 1")
    }

    /// `[t]` for a tree `t`.
    pub fn from_tree(t: Tree) -> Self {
        Self::new(GroupoidElement::from_forest(Forest::from_tree(t))).expect("domain 1")
    }

    pub fn rank(&self) -> usize {
        self.rep.range_roots()
    }

    pub fn rep(&self) -> &GroupoidElement {
        &self.rep
    }

    pub fn partition_key(&self) -> &PartitionKey {
        &self.key
    }

    /// Right action `[f]·g = [f g]` of `g ∈ V𝒢`.
    pub fn act(&self, g: &GroupoidElement) -> Result<Vertex> {
        Vertex::new(self.rep.multiply(g)?)
    }

    /// `[h f]` for `h : C(n) → C(m)`.
    pub fn apply(&self, h: &GroupoidElement) -> Result<Vertex> {
        Vertex::new(h.multiply(&self.rep)?)
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}]", self.rep)
    }
}

fn partition_key(rep: &GroupoidElement) -> PartitionKey {
    let mut cells: Vec<Vec<Address>> = vec![Vec::new(); rep.range_roots()];
    let images = rep.f2().leaf_roots();
    for (j, leaf) in rep.f1().tree(0).leaves().iter().enumerate() {
        cells[images[rep.alpha().apply(j)]].push(leaf.clone());
    }
    let mut key: PartitionKey = cells.into_iter().map(maximal_cylinders).collect();
    key.sort();
    key
}

/// Merges sibling cylinders until none remain.
fn maximal_cylinders(mut cell: Vec<Address>) -> Vec<Address> {
    cell.sort();
    let mut stack: Vec<Address> = Vec::with_capacity(cell.len());
    for a in cell {
        stack.push(a);
        while stack.len() >= 2 {
            let b = &stack[stack.len() - 1];
            let a = &stack[stack.len() - 2];
            match (a.parent(), b.parent()) {
                (Some((pa, false)), Some((pb, true))) if pa == pb => {
                    stack.truncate(stack.len() - 2);
                    stack.push(pa);
                }
                _ => break,
            }
        }
    }
    stack
}

/// Cylinder set `inner` lies inside `outer`, both written as maximal cylinders.
fn cell_within(inner: &[Address], outer: &[Address]) -> bool {
    inner
        .iter()
        .all(|c| outer.iter().any(|o| o.is_prefix_of(c.bits())))
}

/// Every cell of `fine` sits inside one cell of `coarse`. Necessary for
/// `coarse ≤ fine`.
fn refines(fine: &PartitionKey, coarse: &PartitionKey) -> bool {
    fine.iter()
        .all(|cell| coarse.iter().any(|outer| cell_within(cell, outer)))
}

/// Coset equality: `rep(v) · rep(w)⁻¹ ∈ K_n`.
pub fn vertex_equals(v: &Vertex, w: &Vertex) -> bool {
    if v.rank() != w.rank() || v.key != w.key {
        return false;
    }
    v.rep
        .multiply(&w.rep.invert())
        .map(|h| h.klein_decomposition().is_some())
        .unwrap_or(false)
}

pub fn morse_rank(v: &Vertex) -> usize {
    v.rank()
}

/// Deduplicating store of vertices, bucketed by partition key.
#[derive(Default, Clone)]
pub struct VertexSet {
    items: Vec<Vertex>,
    buckets: HashMap<PartitionKey, Vec<usize>>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn find(&self, v: &Vertex) -> Option<usize> {
        self.buckets
            .get(&v.key)?
            .iter()
            .copied()
            .find(|&i| vertex_equals(&self.items[i], v))
    }

    /// Index of `v`, and whether it was new.
    pub fn insert(&mut self, v: Vertex) -> (usize, bool) {
        if let Some(i) = self.find(&v) {
            return (i, false);
        }
        let i = self.items.len();
        self.buckets.entry(v.key.clone()).or_default().push(i);
        self.items.push(v);
        (i, true)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn get(&self, i: usize) -> &Vertex {
        &self.items[i]
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.items
    }
}

/// One splitting step: `x_i`, or `σ_i x_i` when `sigma` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Split {
    pub index: usize,
    pub sigma: bool,
}

impl Split {
    pub fn element(self, n: usize) -> Result<GroupoidElement> {
        let x = GroupoidElement::split(n, self.index)?;
        if self.sigma {
            GroupoidElement::sigma(n + 1, self.index)?.multiply(&x)
        } else {
            Ok(x)
        }
    }
}

fn split_moves(n: usize) -> impl Iterator<Item = Split> {
    (0..n).flat_map(|index| [false, true].map(|sigma| Split { index, sigma }))
}

/// `[x_i f]` and `[σ_i x_i f]` for each component, in that order.
pub fn splittings(v: &Vertex) -> Result<Vec<Vertex>> {
    let n = v.rank();
    let out: Vec<Vertex> = split_moves(n)
        .map(|s| v.apply(&s.element(n)?))
        .collect::<Result<_>>()?;
    debug_assert!(out
        .iter()
        .tuple_combinations()
        .all(|(a, b)| !vertex_equals(a, b)));
    Ok(out)
}

/// `[x_i x_i f]` for each component.
pub fn double_splittings(v: &Vertex) -> Result<Vec<Vertex>> {
    let n = v.rank();
    (0..n)
        .map(|i| {
            let xx = GroupoidElement::split(n + 1, i)?.multiply(&GroupoidElement::split(n, i)?)?;
            v.apply(&xx)
        })
        .collect()
}

/// The four elementary expansions `u ∈ {1, x, σ₁x, x₁x}` of `[1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Elementary {
    One,
    X,
    SigmaX,
    XX,
}

impl Elementary {
    pub const ALL: [Elementary; 4] = [
        Elementary::One,
        Elementary::X,
        Elementary::SigmaX,
        Elementary::XX,
    ];

    pub fn element(self) -> GroupoidElement {
        let x = || GroupoidElement::split(1, 0).expect("valid");
        match self {
            Elementary::One => GroupoidElement::identity(1),
            Elementary::X => x(),
            Elementary::SigmaX => GroupoidElement::sigma(2, 0)
                .and_then(|s| s.multiply(&x()))
                .expect("valid"),
            Elementary::XX => GroupoidElement::split(2, 0)
                .and_then(|s| s.multiply(&x()))
                .expect("valid"),
        }
    }

    pub fn vertex(self) -> Vertex {
        Vertex::new(self.element()).expect("domain 1")
    }

    pub fn name(self) -> &'static str {
        match self {
            Elementary::One => "1",
            Elementary::X => "x",
            Elementary::SigmaX => "s1x",
            Elementary::XX => "x1x",
        }
    }
}

/// `[(u₁ ⊕ … ⊕ u_n) f]`.
pub fn elementary_expansion(v: &Vertex, us: &[Elementary]) -> Result<Vertex> {
    if us.len() != v.rank() {
        return Err(Error::ArityMismatch {
            expected: v.rank(),
            found: us.len(),
        });
    }
    let sum = us
        .iter()
        .map(|u| u.element())
        .reduce(|a, b| a.direct_sum(&b))
        .expect("rank at least 1");
    v.apply(&sum)
}

/// All `4ⁿ` elementary expansions of `v`, deduplicated.
pub fn elementary_expansions(v: &Vertex) -> Result<Vec<Vertex>> {
    let mut set = VertexSet::new();
    for us in (0..v.rank())
        .map(|_| Elementary::ALL)
        .multi_cartesian_product()
    {
        set.insert(elementary_expansion(v, &us)?);
    }
    Ok(set.into_vec())
}

/// Parent index in the previous search level and the splitting that led here.
type BackPointer = Option<(usize, Split)>;

/// Breadth-first search for a chain of splittings from `v` to `w`.
pub fn expansion_path(v: &Vertex, w: &Vertex, limits: &Limits) -> Result<Option<Vec<Split>>> {
    if w.rank() < v.rank() || !refines(&w.key, &v.key) {
        return Ok(None);
    }
    let gap = w.rank() - v.rank();
    if gap > limits.rank_gap {
        return Err(Error::RankGapTooLarge {
            gap,
            cap: limits.rank_gap,
        });
    }
    // Each level keeps one vertex per coset and a back pointer into the previous level.
    let mut levels: Vec<(VertexSet, Vec<BackPointer>)> = Vec::new();
    let mut first = VertexSet::new();
    first.insert(v.clone());
    levels.push((first, vec![None]));
    for _ in 0..gap {
        let (prev, _) = levels.last().expect("nonempty");
        let n = prev.get(0).rank();
        let mut next = VertexSet::new();
        let mut back = Vec::new();
        for (i, u) in prev.items.iter().enumerate() {
            for s in split_moves(n) {
                let child = u.apply(&s.element(n)?)?;
                if !refines(&w.key, &child.key) {
                    continue;
                }
                if next.insert(child).1 {
                    back.push(Some((i, s)));
                }
            }
        }
        if next.is_empty() {
            return Ok(None);
        }
        levels.push((next, back));
    }
    let (last, _) = levels.last().expect("nonempty");
    let Some(mut at) = last.find(w) else {
        return Ok(None);
    };
    let mut path = Vec::with_capacity(gap);
    for (_, back) in levels.iter().rev() {
        if let Some((parent, s)) = back[at] {
            path.push(s);
            at = parent;
        }
    }
    path.reverse();
    Ok(Some(path))
}

/// `v ≤ w` in the expansion order.
pub fn is_expansion(v: &Vertex, w: &Vertex) -> Result<bool> {
    is_expansion_with(v, w, &Limits::default())
}

pub fn is_expansion_with(v: &Vertex, w: &Vertex, limits: &Limits) -> Result<bool> {
    Ok(expansion_path(v, w, limits)?.is_some())
}

/// A tree vertex `[t] ≥ v`: applying the range forest of a normal form leaves
/// `p_α (k…) f₁`, which is `[f₁]`.
pub fn tree_expansion(v: &Vertex) -> Tree {
    v.rep.f1().tree(0).clone()
}

/// A common upper bound of `v` and `w`.
pub fn common_expansion(v: &Vertex, w: &Vertex) -> Vertex {
    let (t, _, _) = common_refinement(&tree_expansion(v), &tree_expansion(w));
    Vertex::from_tree(t)
}

/// Componentwise factors `[g₁], …, [g_n]` of `[1]` with `w = [(g₁ ⊕ … ⊕ g_n) f]`.
pub fn factor_over(v: &Vertex, w: &Vertex) -> Result<Vec<Vertex>> {
    factor_over_with(v, w, &Limits::default())
}

pub fn factor_over_with(v: &Vertex, w: &Vertex, limits: &Limits) -> Result<Vec<Vertex>> {
    let path = expansion_path(v, w, limits)?.ok_or(Error::NotAnExpansion)?;
    let mut blocks: Vec<GroupoidElement> = vec![GroupoidElement::identity(1); v.rank()];
    for s in path {
        let mut offset = 0;
        for g in blocks.iter_mut() {
            let width = g.range_roots();
            if s.index < offset + width {
                let local = Split {
                    index: s.index - offset,
                    sigma: s.sigma,
                };
                *g = local.element(width)?.multiply(g)?;
                break;
            }
            offset += width;
        }
    }
    blocks.into_iter().map(Vertex::new).collect()
}

/// The maximum elementary expansion of `v` inside the interval `[v, w]`.
pub fn elementary_core(v: &Vertex, w: &Vertex) -> Result<Vertex> {
    elementary_core_with(v, w, &Limits::default())
}

pub fn elementary_core_with(v: &Vertex, w: &Vertex, limits: &Limits) -> Result<Vertex> {
    let factors = factor_over_with(v, w, limits)?;
    let cores: Vec<Elementary> = factors
        .iter()
        .map(|g| component_core(g, limits))
        .collect::<Result<_>>()?;
    elementary_expansion(v, &cores)
}

fn component_core(g: &Vertex, limits: &Limits) -> Result<Elementary> {
    let below = |u: Elementary| is_expansion_with(&u.vertex(), g, limits);
    let x = below(Elementary::X)?;
    let sx = below(Elementary::SigmaX)?;
    Ok(if (x && sx) || below(Elementary::XX)? {
        Elementary::XX
    } else if x {
        Elementary::X
    } else if sx {
        Elementary::SigmaX
    } else {
        Elementary::One
    })
}

/// Rank limit for stabilizer enumeration.
pub const STABILIZER_MAX_RANK: usize = 5;

/// The stabilizer `f⁻¹ K_n f` of `[f]`, all `n!·4ⁿ` elements.
pub fn stabilizer_elements(v: &Vertex) -> Result<Vec<GroupoidElement>> {
    let n = v.rank();
    if n > STABILIZER_MAX_RANK {
        return Err(Error::RankTooLarge {
            rank: n,
            max: STABILIZER_MAX_RANK,
        });
    }
    let f = v.rep();
    let f_inv = f.invert();
    let mut out = Vec::new();
    for images in (0..n).permutations(n) {
        let alpha = Permutation::from_images(images)?;
        for labels in (0..n).map(|_| KleinLabel::ALL).multi_cartesian_product() {
            let k = GroupoidElement::from_klein(alpha.clone(), labels)?;
            out.push(f_inv.multiply(&k)?.multiply(f)?);
        }
    }
    Ok(out)
}

/// One of the six sets of elementary expansions allowed in a basic polysimplex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElementarySet {
    One,
    OneX,
    OneXXx,
    OneSx,
    OneSxXx,
    OneXx,
}

impl ElementarySet {
    pub const ALL: [ElementarySet; 6] = [
        ElementarySet::One,
        ElementarySet::OneX,
        ElementarySet::OneXXx,
        ElementarySet::OneSx,
        ElementarySet::OneSxXx,
        ElementarySet::OneXx,
    ];

    pub fn members(self) -> &'static [Elementary] {
        use Elementary::*;
        match self {
            ElementarySet::One => &[One],
            ElementarySet::OneX => &[One, X],
            ElementarySet::OneXXx => &[One, X, XX],
            ElementarySet::OneSx => &[One, SigmaX],
            ElementarySet::OneSxXx => &[One, SigmaX, XX],
            ElementarySet::OneXx => &[One, XX],
        }
    }

    /// The allowed set with exactly these members, in any order.
    pub fn from_members(members: &[Elementary]) -> Result<Self> {
        let mut sorted = members.to_vec();
        sorted.sort();
        sorted.dedup();
        Self::ALL
            .into_iter()
            .find(|s| {
                let mut m = s.members().to_vec();
                m.sort();
                m == sorted
            })
            .ok_or_else(|| Error::IllegalSet(members.iter().map(|u| u.name()).join(",")))
    }

    /// Parses `{1,x,x1x}`-style lists; braces are optional.
    pub fn parse(s: &str) -> Result<Self> {
        let members: Vec<Elementary> = s
            .trim()
            .trim_start_matches('{')
            .trim_end_matches('}')
            .split(',')
            .map(|t| match t.trim() {
                "1" => Ok(Elementary::One),
                "x" => Ok(Elementary::X),
                "s1x" | "σ1x" | "σ₁x" => Ok(Elementary::SigmaX),
                "x1x" | "x₁x" => Ok(Elementary::XX),
                other => Err(Error::IllegalSet(other.to_string())),
            })
            .collect::<Result<_>>()?;
        Self::from_members(&members)
    }
}

/// The cell `P(f, S₁, …, S_n)` of combinatorial type `Δ^{d₁} × ⋯ × Δ^{d_n}`.
#[derive(Debug, Clone)]
pub struct BasicPolysimplex {
    pub base: Vertex,
    pub sets: Vec<ElementarySet>,
    pub shape: Vec<usize>,
    pub vertices: Vec<Vertex>,
}

pub fn basic_polysimplex(f: &GroupoidElement, sets: &[ElementarySet]) -> Result<BasicPolysimplex> {
    let base = Vertex::new(f.clone())?;
    if sets.len() != base.rank() {
        return Err(Error::ArityMismatch {
            expected: base.rank(),
            found: sets.len(),
        });
    }
    let mut found = VertexSet::new();
    for us in sets
        .iter()
        .map(|s| s.members().iter().copied())
        .multi_cartesian_product()
    {
        found.insert(elementary_expansion(&base, &us)?);
    }
    if sets.is_empty() {
        found.insert(base.clone());
    }
    Ok(BasicPolysimplex {
        shape: sets.iter().map(|s| s.members().len() - 1).collect(),
        sets: sets.to_vec(),
        vertices: found.into_vec(),
        base,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_element;

    fn vx(s: &str) -> Vertex {
        Vertex::new(parse_element(s).unwrap()).unwrap()
    }

    #[test]
    fn coset_equality_examples() {
        assert!(vertex_equals(&vx("x1 b1 x1"), &vx("s1 x1 x1")));
        assert!(vertex_equals(&vx("x1 b1 x1"), &vx("s1 c2 x1 x1")));
        assert!(!vertex_equals(&vx("x1"), &vx("s1 x1")));
        assert!(vertex_equals(&vx("b1 x1"), &vx("x1")));
        assert!(vertex_equals(&vx("p(2 1) c1 d2 x1"), &vx("x1")));
        assert!(!vertex_equals(&vx("x1"), &vx("x2 x1")));
    }

    #[test]
    fn partition_keys_merge_siblings() {
        let cell = vec![
            Address::parse("00").unwrap(),
            Address::parse("01").unwrap(),
            Address::parse("10").unwrap(),
            Address::parse("110").unwrap(),
            Address::parse("111").unwrap(),
        ];
        assert_eq!(maximal_cylinders(cell), vec![Address::root()]);
        assert_eq!(vx("x1").partition_key(), vx("s1 x1").partition_key());
    }

    #[test]
    fn ranks() {
        assert_eq!(morse_rank(&Vertex::root()), 1);
        assert_eq!(morse_rank(&vx("x1")), 2);
        assert_eq!(morse_rank(&vx("x1 x1")), 3);
    }

    #[test]
    fn splitting_counts() {
        let s = splittings(&Vertex::root()).unwrap();
        assert_eq!(s.len(), 2);
        assert!(vertex_equals(&s[0], &vx("x1")));
        assert!(vertex_equals(&s[1], &vx("s1 x1")));
        let s = splittings(&vx("x1")).unwrap();
        assert_eq!(s.len(), 4);
        assert!(s.iter().all(|w| w.rank() == 3));
        assert!(s
            .iter()
            .tuple_combinations()
            .all(|(a, b)| !vertex_equals(a, b)));
    }

    #[test]
    fn double_splitting_examples() {
        let d = double_splittings(&Vertex::root()).unwrap();
        assert_eq!(d.len(), 1);
        assert!(vertex_equals(&d[0], &vx("x1 x1")));
        let f = vx("x1 x2 x1");
        for i in 1..=4 {
            let plain = vx(&format!("x{i} x{i} x1 x2 x1"));
            let twisted = vx(&format!("x{i} x{i} b{i} x1 x2 x1"));
            assert!(vertex_equals(&plain, &twisted));
        }
        assert!(is_expansion(&vx("x1"), &d[0]).unwrap());
        assert!(is_expansion(&vx("s1 x1"), &d[0]).unwrap());
        assert_eq!(double_splittings(&f).unwrap().len(), 4);
    }

    #[test]
    fn elementary_expansions_of_root() {
        let e = elementary_expansions(&Vertex::root()).unwrap();
        assert_eq!(e.len(), 4);
        assert!(e.iter().any(|w| vertex_equals(w, &Vertex::root())));
        let e = elementary_expansions(&vx("x1")).unwrap();
        assert_eq!(e.len(), 16);
        assert_eq!(e.iter().map(Vertex::rank).max(), Some(6));
    }

    #[test]
    fn expansion_examples() {
        assert!(is_expansion(&Vertex::root(), &vx("x1 x1")).unwrap());
        assert!(!is_expansion(&vx("x1"), &vx("s1 x1")).unwrap());
        assert!(is_expansion(&vx("x1"), &vx("s1 x1 x1")).unwrap());
        assert!(!is_expansion(&vx("s1 x1"), &vx("s1 x1 x1")).unwrap());
        assert!(!is_expansion(&vx("x1 x1"), &vx("s1 x1 x1")).unwrap());
        let spine = Vertex::from_tree(Tree::trivial());
        let far = (1..=10).fold(GroupoidElement::identity(1), |acc, n| {
            GroupoidElement::split(n, n - 1)
                .unwrap()
                .multiply(&acc)
                .unwrap()
        });
        assert!(matches!(
            is_expansion(&spine, &Vertex::new(far).unwrap()),
            Err(Error::RankGapTooLarge { gap: 10, cap: 8 })
        ));
    }

    #[test]
    fn common_expansion_examples() {
        let c = common_expansion(&vx("x1"), &vx("s1 x1"));
        assert!(is_expansion(&vx("x1"), &c).unwrap());
        assert!(is_expansion(&vx("s1 x1"), &c).unwrap());
        let t = Tree::from_leaves(["0", "10", "11"].map(|s| Address::parse(s).unwrap())).unwrap();
        let c = common_expansion(&Vertex::root(), &Vertex::from_tree(t.clone()));
        assert!(vertex_equals(&c, &Vertex::from_tree(t)));
        let v = vx("b1 x1 x1");
        assert!(is_expansion(&v, &common_expansion(&v, &v)).unwrap());
    }

    #[test]
    fn factor_examples() {
        let f = factor_over(&vx("x1"), &vx("x1")).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|g| vertex_equals(g, &Vertex::root())));
        let f = factor_over(&Vertex::root(), &vx("s1 x1 x1")).unwrap();
        assert!(vertex_equals(&f[0], &vx("s1 x1 x1")));
        let f = factor_over(&vx("x1"), &vx("x1 x1")).unwrap();
        assert!(vertex_equals(&f[0], &vx("x1")));
        assert!(vertex_equals(&f[1], &Vertex::root()));
        assert_eq!(
            factor_over(&vx("x1"), &vx("s1 x1")).unwrap_err(),
            Error::NotAnExpansion
        );
    }

    #[test]
    fn core_examples() {
        let core = elementary_core(&Vertex::root(), &vx("s1 x1 x1")).unwrap();
        assert!(vertex_equals(&core, &vx("x1")));
        let core = elementary_core(&Vertex::root(), &vx("x2 x1 x1")).unwrap();
        assert!(vertex_equals(&core, &vx("x1 x1")));
        let v = vx("x1");
        assert!(vertex_equals(&elementary_core(&v, &v).unwrap(), &v));
    }

    #[test]
    fn stabilizer_sizes() {
        assert_eq!(stabilizer_elements(&Vertex::root()).unwrap().len(), 4);
        let v = vx("s1 x1");
        let stab = stabilizer_elements(&v).unwrap();
        assert_eq!(stab.len(), 32);
        for g in &stab {
            assert!(vertex_equals(&v.act(g).unwrap(), &v));
        }
        let wide = vx("x1 x1 x1 x1 x1");
        assert_eq!(wide.rank(), 6);
        assert!(matches!(
            stabilizer_elements(&wide),
            Err(Error::RankTooLarge { .. })
        ));
    }

    #[test]
    fn polysimplex_examples() {
        let p = basic_polysimplex(&parse_element("x1").unwrap(), &[ElementarySet::One; 2]).unwrap();
        assert_eq!(p.vertices.len(), 1);
        assert_eq!(p.shape, vec![0, 0]);
        let p = basic_polysimplex(&GroupoidElement::identity(1), &[ElementarySet::OneXXx]).unwrap();
        assert_eq!((p.vertices.len(), p.shape.clone()), (3, vec![2]));
        let p = basic_polysimplex(
            &parse_element("x1").unwrap(),
            &[ElementarySet::OneX, ElementarySet::OneSx],
        )
        .unwrap();
        assert_eq!(p.vertices.len(), 4);
        assert_eq!(
            ElementarySet::parse("{1, x, x1x}").unwrap(),
            ElementarySet::OneXXx
        );
        assert!(matches!(
            ElementarySet::parse("{x, x1x}"),
            Err(Error::IllegalSet(_))
        ));
    }
}
