//! Contractions of a vertex and its descending link.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::cantor::{Address, Permutation, Tree};
use crate::error::{Error, Result};
use crate::grigorchuk::KleinLabel;
use crate::groupoid::GroupoidElement;
use crate::poset::{vertex_equals, Vertex, VertexSet};
use crate::topology::FlagGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ContractionKind {
    /// `[C_ij u_i u_j f]`
    Pair,
    /// `[C_ij σ_i u_i u_j f]`
    PairSigma,
    /// `[C_ijk u_i u_j u_k f]`
    Triple,
}

impl ContractionKind {
    pub fn arity(self) -> usize {
        match self {
            ContractionKind::Pair | ContractionKind::PairSigma => 2,
            ContractionKind::Triple => 3,
        }
    }
}

/// A contraction of a fixed base vertex, named by the first formula (in the order
/// kind, indices, labels) that produces it. Indices are 0-based.
#[derive(Clone)]
pub struct ContractionRecord {
    pub kind: ContractionKind,
    pub indices: Vec<usize>,
    pub labels: Vec<KleinLabel>,
    pub vertex: Vertex,
}

impl ContractionRecord {
    pub fn support(&self) -> BTreeSet<usize> {
        self.indices.iter().copied().collect()
    }

    /// `C12 ee`, `C12s be`, `C123 bcd`, with 1-based indices.
    pub fn label(&self) -> String {
        let idx: String = self.indices.iter().map(|i| (i + 1).to_string()).join(",");
        let sigma = if self.kind == ContractionKind::PairSigma {
            "s"
        } else {
            ""
        };
        let labels: String = self.labels.iter().map(|k| k.as_char()).collect();
        format!("C{idx}{sigma} {labels}")
    }
}

impl fmt::Debug for ContractionRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// The element `x₁⁻¹ p_α [σ_i] (u…)` (pairs) or `x₁⁻¹ x₁⁻¹ p_α (u…)` (triples) on
/// `C(n)`, with `α` sending the indices to the front in order.
fn contraction_element(
    n: usize,
    kind: ContractionKind,
    indices: &[usize],
    labels: &[KleinLabel],
) -> Result<GroupoidElement> {
    let mut full = vec![KleinLabel::E; n];
    for (&i, &k) in indices.iter().zip(labels) {
        full[i] = k;
    }
    let alpha = Permutation::bringing_to_front(n, indices);
    let mut g = GroupoidElement::from_klein(Permutation::identity(n), full)?;
    if kind == ContractionKind::PairSigma {
        g = GroupoidElement::sigma(n, indices[0])?.multiply(&g)?;
    }
    g = GroupoidElement::from_permutation(alpha).multiply(&g)?;
    g = GroupoidElement::split(n - 1, 0)?.invert().multiply(&g)?;
    if kind == ContractionKind::Triple {
        g = GroupoidElement::split(n - 2, 0)?.invert().multiply(&g)?;
    }
    Ok(g)
}

/// Resolves one contraction formula against the representative of `v`.
pub fn contraction(
    v: &Vertex,
    kind: ContractionKind,
    indices: &[usize],
    labels: &[KleinLabel],
) -> Result<ContractionRecord> {
    let n = v.rank();
    let min = kind.arity();
    if n < min {
        return Err(Error::RankTooSmall { rank: n, min });
    }
    if indices.len() != min || labels.len() != min {
        return Err(Error::ArityMismatch {
            expected: min,
            found: indices.len().max(labels.len()),
        });
    }
    if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
        return Err(Error::IndexOutOfRange { index: bad, len: n });
    }
    if !indices.iter().all_unique() {
        return Err(Error::Parse(format!(
            "repeated contraction index in {indices:?}"
        )));
    }
    let vertex = v.apply(&contraction_element(n, kind, indices, labels)?)?;
    Ok(ContractionRecord {
        kind,
        indices: indices.to_vec(),
        labels: labels.to_vec(),
        vertex,
    })
}

/// Formulas in lexicographic order of (kind, indices, labels).
fn formulas(n: usize) -> impl Iterator<Item = (ContractionKind, Vec<usize>, Vec<KleinLabel>)> {
    [
        ContractionKind::Pair,
        ContractionKind::PairSigma,
        ContractionKind::Triple,
    ]
    .into_iter()
    .filter(move |k| k.arity() <= n)
    .flat_map(move |kind| {
        (0..n).permutations(kind.arity()).flat_map(move |indices| {
            (0..kind.arity())
                .map(|_| KleinLabel::ALL)
                .multi_cartesian_product()
                .map(move |labels| (kind, indices.clone(), labels))
        })
    })
}

/// Counts gathered while enumerating contractions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ContractionStats {
    pub formulas: usize,
    pub distinct: usize,
    /// Formulas that reproduced a known vertex with a different index set.
    pub support_conflicts: usize,
}

/// Distinct contractions of `v` together with the store used to deduplicate them.
pub struct Contractions {
    pub records: Vec<ContractionRecord>,
    pub stats: ContractionStats,
    set: VertexSet,
}

impl Contractions {
    /// Index of the record whose vertex equals `w`.
    pub fn find(&self, w: &Vertex) -> Option<usize> {
        self.set.find(w)
    }
}

pub fn contractions(v: &Vertex) -> Result<Contractions> {
    let n = v.rank();
    if n < 2 {
        return Err(Error::RankTooSmall { rank: n, min: 2 });
    }
    let mut set = VertexSet::new();
    let mut records: Vec<ContractionRecord> = Vec::new();
    let mut stats = ContractionStats::default();
    for (kind, indices, labels) in formulas(n) {
        stats.formulas += 1;
        let record = contraction(v, kind, &indices, &labels)?;
        let (i, fresh) = set.insert(record.vertex.clone());
        if fresh {
            records.push(record);
        } else if records[i].support() != record.support() {
            stats.support_conflicts += 1;
        }
    }
    stats.distinct = records.len();
    Ok(Contractions {
        records,
        stats,
        set,
    })
}

/// `lk↓(v)` as a graph on the distinct contractions of `v`.
pub struct DescendingLink {
    pub base: Vertex,
    pub records: Vec<ContractionRecord>,
    pub graph: FlagGraph,
    pub stats: ContractionStats,
    contractions_set: Contractions,
}

/// Edges: disjoint supports always; a pair inside a triple exactly when the pair is
/// `[x₁ g]` or `[σ₁ x₁ g]` for the triple `[g]`; nothing else.
pub fn descending_link(v: &Vertex) -> Result<DescendingLink> {
    let c = contractions(v)?;
    let records = c.records.clone();
    let supports: Vec<BTreeSet<usize>> = records.iter().map(ContractionRecord::support).collect();
    let mut graph = FlagGraph::new(records.len());
    for (a, b) in (0..records.len()).tuple_combinations() {
        if supports[a].is_disjoint(&supports[b]) {
            graph.add_edge(a, b)?;
        }
    }
    for (b, triple) in records.iter().enumerate() {
        if triple.kind != ContractionKind::Triple {
            continue;
        }
        for w in triangle_intermediates(&triple.vertex)? {
            if let Some(a) = c.find(&w) {
                if records[a].kind != ContractionKind::Triple && supports[a].is_subset(&supports[b])
                {
                    graph.add_edge(a, b)?;
                }
            }
        }
    }
    Ok(DescendingLink {
        base: v.clone(),
        stats: c.stats,
        records,
        graph,
        contractions_set: c,
    })
}

/// `[x₁ g]` and `[σ₁ x₁ g]`: the vertices strictly between `[g]` and `[x₁ x₁ g]`.
pub fn triangle_intermediates(g: &Vertex) -> Result<[Vertex; 2]> {
    let n = g.rank();
    let x = GroupoidElement::split(n, 0)?;
    let sx = GroupoidElement::sigma(n + 1, 0)?.multiply(&x)?;
    Ok([g.apply(&x)?, g.apply(&sx)?])
}

/// `[C₁₂ f], [C₃₄ f], …, [C_{6k+1,6k+2} f]`.
pub fn ground_simplex(v: &Vertex, k: usize) -> Result<Vec<ContractionRecord>> {
    let min = 6 * k + 2;
    if v.rank() < min {
        return Err(Error::RankTooSmall {
            rank: v.rank(),
            min,
        });
    }
    (0..=3 * k)
        .map(|i| {
            contraction(
                v,
                ContractionKind::Pair,
                &[2 * i, 2 * i + 1],
                &[KleinLabel::E; 2],
            )
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct RecordJson {
    pub kind: ContractionKind,
    pub indices: Vec<usize>,
    pub labels: String,
    pub support: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LinkJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub records: Vec<RecordJson>,
}

impl DescendingLink {
    pub fn find(&self, w: &Vertex) -> Option<usize> {
        self.contractions_set.find(w)
    }

    /// Link indices of the ground simplex for `k`.
    pub fn ground_indices(&self, k: usize) -> Result<Vec<usize>> {
        ground_simplex(&self.base, k)?
            .iter()
            .map(|r| self.find(&r.vertex).ok_or(Error::NotAClique))
            .collect()
    }

    /// Every edge joins disjoint or strictly nested supports.
    pub fn edges_respect_supports(&self) -> bool {
        self.graph.edges().all(|(a, b)| {
            let (sa, sb) = (self.records[a].support(), self.records[b].support());
            sa.is_disjoint(&sb)
                || (sa.is_subset(&sb) && sa != sb)
                || (sb.is_subset(&sa) && sa != sb)
        })
    }

    pub fn to_dot(&self) -> String {
        self.graph.to_dot_with(|i| self.records[i].label())
    }

    /// JSON adjacency list with 0-based vertex ids and 1-based component indices.
    pub fn to_json(&self) -> LinkJson {
        let base = self.graph.to_json();
        LinkJson {
            n: base.n,
            edges: base.edges,
            records: self
                .records
                .iter()
                .map(|r| RecordJson {
                    kind: r.kind,
                    indices: r.indices.iter().map(|i| i + 1).collect(),
                    labels: r.labels.iter().map(|k| k.as_char()).collect(),
                    support: r.support().into_iter().map(|i| i + 1).collect(),
                })
                .collect(),
        }
    }
}

/// `[t]` for the tree with leaves `1, 01, 001, …, 0ⁿ⁻¹`.
pub fn spine_vertex(n: usize) -> Result<Vertex> {
    if n == 0 {
        return Err(Error::RankTooSmall { rank: 0, min: 1 });
    }
    let leaves = (1..n)
        .map(|i| Address::from_bits((0..i).map(|b| b + 1 == i)))
        .chain(std::iter::once(Address::from_bits(vec![false; n - 1])));
    Ok(Vertex::from_tree(Tree::from_leaves(leaves)?))
}

/// `v` is a splitting or double splitting of `w`.
pub fn is_contraction_of(w: &Vertex, v: &Vertex) -> Result<bool> {
    use crate::poset::{double_splittings, splittings};
    let candidates = if w.rank() + 1 == v.rank() {
        splittings(w)?
    } else if w.rank() + 2 == v.rank() {
        double_splittings(w)?
    } else {
        return Ok(false);
    };
    Ok(candidates.iter().any(|u| vertex_equals(u, v)))
}
