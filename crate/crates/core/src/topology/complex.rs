use std::collections::HashMap;

use super::graph::FlagGraph;

/// A face-closed simplicial complex; simplices are sorted vertex tuples grouped by
/// dimension, each dimension in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimplicialComplex {
    simplices: Vec<Vec<Vec<usize>>>,
}

/// Sparse integer matrix stored by columns as `(row, value)` lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.cols()]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                d[r][c] = v;
            }
        }
        d
    }
}

/// Every clique with at most `max_dim + 1` vertices.
pub fn flag_complex(g: &FlagGraph, max_dim: usize) -> SimplicialComplex {
    let mut simplices: Vec<Vec<Vec<usize>>> = vec![Vec::new(); max_dim + 1];
    fn extend(
        g: &FlagGraph,
        clique: &mut Vec<usize>,
        candidates: &[usize],
        max_dim: usize,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        out[clique.len() - 1].push(clique.clone());
        if clique.len() > max_dim {
            return;
        }
        for (a, &v) in candidates.iter().enumerate() {
            let next: Vec<usize> = candidates[a + 1..]
                .iter()
                .copied()
                .filter(|&u| g.adjacent(v, u))
                .collect();
            clique.push(v);
            extend(g, clique, &next, max_dim, out);
            clique.pop();
        }
    }
    for v in 0..g.len() {
        let up: Vec<usize> = g.neighbors(v).range(v + 1..).copied().collect();
        extend(g, &mut vec![v], &up, max_dim, &mut simplices);
    }
    for level in simplices.iter_mut() {
        level.sort();
    }
    while simplices.last().is_some_and(Vec::is_empty) {
        simplices.pop();
    }
    SimplicialComplex { simplices }
}

impl SimplicialComplex {
    /// Closes `facets` under faces.
    pub fn from_facets<I: IntoIterator<Item = Vec<usize>>>(facets: I) -> Self {
        let mut levels: Vec<std::collections::BTreeSet<Vec<usize>>> = Vec::new();
        for mut f in facets {
            f.sort_unstable();
            f.dedup();
            if f.is_empty() {
                continue;
            }
            let k = f.len();
            for size in 1..=k {
                if levels.len() < size {
                    levels.resize_with(size, Default::default);
                }
                for face in itertools::Itertools::combinations(f.iter().copied(), size) {
                    levels[size - 1].insert(face);
                }
            }
        }
        SimplicialComplex {
            simplices: levels
                .into_iter()
                .map(|s| s.into_iter().collect())
                .collect(),
        }
    }

    /// Top dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn simplices(&self, d: usize) -> &[Vec<usize>] {
        self.simplices.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn count(&self, d: usize) -> usize {
        self.simplices(d).len()
    }

    pub fn total(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(d, s)| {
                if d % 2 == 0 {
                    s.len() as i64
                } else {
                    -(s.len() as i64)
                }
            })
            .sum()
    }

    pub fn is_face_closed(&self) -> bool {
        (1..self.simplices.len()).all(|d| {
            let below: std::collections::HashSet<&Vec<usize>> =
                self.simplices[d - 1].iter().collect();
            self.simplices[d].iter().all(|s| {
                (0..s.len()).all(|i| {
                    let mut f = s.clone();
                    f.remove(i);
                    below.contains(&f)
                })
            })
        })
    }

    /// The augmented boundary `∂_d : C_d → C_{d-1}`. `∂_0` sends every vertex to the
    /// single generator of `C_{-1}`.
    pub fn boundary(&self, d: usize) -> SparseMatrix {
        if d == 0 {
            return SparseMatrix {
                rows: 1,
                columns: vec![vec![(0, 1)]; self.count(0)],
            };
        }
        let index: HashMap<&[usize], usize> = self
            .simplices(d - 1)
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect();
        let columns = self
            .simplices(d)
            .iter()
            .map(|s| {
                let mut col: Vec<(usize, i64)> = (0..s.len())
                    .map(|i| {
                        let mut f = s.clone();
                        f.remove(i);
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        (index[f.as_slice()], sign)
                    })
                    .collect();
                col.sort_unstable();
                col
            })
            .collect();
        SparseMatrix {
            rows: self.count(d - 1),
            columns,
        }
    }
}
