use std::collections::{BTreeMap, HashMap, HashSet};

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::complex::{SimplicialComplex, SparseMatrix};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::registry::Registry;

/// Rank of a boundary matrix, and its non-unit invariant factors when the
/// coefficients are the integers.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Reduction {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

/// A coefficient ring, seen through what homology needs from a boundary matrix.
pub trait ChainRankBackend: Send + Sync {
    fn name(&self) -> &'static str;
    fn reduce(&self, m: &SparseMatrix) -> Result<Reduction>;
}

pub struct Integers;
pub struct Gf2;
pub struct Rationals;

/// Registry of the three coefficient backends under `z`, `gf2` and `q`.
pub fn backends() -> Registry<dyn ChainRankBackend> {
    let mut r: Registry<dyn ChainRankBackend> = Registry::new();
    r.register("z", Box::new(Integers))
        .register("gf2", Box::new(Gf2))
        .register("q", Box::new(Rationals));
    r
}

impl ChainRankBackend for Integers {
    fn name(&self) -> &'static str {
        "z"
    }

    fn reduce(&self, m: &SparseMatrix) -> Result<Reduction> {
        let (rank, rest) = eliminate_unit_pivots(m)?;
        let diag = smith_diagonal(rest)?;
        let torsion = diag
            .iter()
            .filter(|&&d| d > 1)
            .map(|&d| u64::try_from(d).map_err(|_| Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Reduction {
            rank: rank + diag.len(),
            torsion,
        })
    }
}

/// Pivots on `±1` entries until none remain, then returns the count and the dense
/// leftover block. Clearing the pivot row with column operations and dropping the
/// pivot row and column leaves the invariant factors unchanged.
fn eliminate_unit_pivots(m: &SparseMatrix) -> Result<(usize, Vec<Vec<i128>>)> {
    let mut cols: Vec<HashMap<usize, i64>> = m
        .columns
        .iter()
        .map(|c| c.iter().copied().filter(|&(_, v)| v != 0).collect())
        .collect();
    let mut rows: Vec<HashSet<usize>> = vec![HashSet::new(); m.rows];
    for (c, col) in cols.iter().enumerate() {
        for &r in col.keys() {
            rows[r].insert(c);
        }
    }
    let mut rank = 0;
    loop {
        let mut progressed = false;
        for c in 0..cols.len() {
            let pivot = cols[c]
                .iter()
                .filter(|(_, v)| v.abs() == 1)
                .min_by_key(|(r, _)| (rows[**r].len(), **r))
                .map(|(&r, &v)| (r, v));
            let Some((r, u)) = pivot else { continue };
            let pivot_col = std::mem::take(&mut cols[c]);
            for &row in pivot_col.keys() {
                rows[row].remove(&c);
            }
            let others: Vec<usize> = rows[r].iter().copied().collect();
            for other in others {
                let factor = cols[other][&r].checked_mul(u).ok_or(Error::Overflow)?;
                for (&row, &v) in &pivot_col {
                    let delta = factor.checked_mul(v).ok_or(Error::Overflow)?;
                    let entry = cols[other].entry(row).or_insert(0);
                    *entry = entry.checked_sub(delta).ok_or(Error::Overflow)?;
                    if *entry == 0 {
                        cols[other].remove(&row);
                        rows[row].remove(&other);
                    } else {
                        rows[row].insert(other);
                    }
                }
            }
            debug_assert!(rows[r].is_empty());
            rank += 1;
            progressed = true;
        }
        if !progressed {
            break;
        }
    }
    let live_rows: Vec<usize> = (0..m.rows).filter(|&r| !rows[r].is_empty()).collect();
    let row_pos: HashMap<usize, usize> =
        live_rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let dense = cols
        .iter()
        .filter(|c| !c.is_empty())
        .map(|col| {
            let mut v = vec![0i128; live_rows.len()];
            for (&r, &x) in col {
                v[row_pos[&r]] = x as i128;
            }
            v
        })
        .collect();
    // Columns of the leftover block; transposing keeps the invariant factors.
    Ok((rank, dense))
}

/// Nonzero invariant factors of a dense integer matrix.
#[allow(clippy::needless_range_loop)]
fn smith_diagonal(mut a: Vec<Vec<i128>>) -> Result<Vec<i128>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let sub = |x: i128, y: i128| x.checked_sub(y).ok_or(Error::Overflow);
    let mul = |x: i128, y: i128| x.checked_mul(y).ok_or(Error::Overflow);
    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_entry(&a, (t..m).flat_map(|i| (t..n).map(move |j| (i, j)))) else {
            break;
        };
        a.swap(t, pi);
        a.iter_mut().for_each(|row| row.swap(t, pj));
        loop {
            let p = a[t][t];
            for i in t + 1..m {
                if a[i][t] != 0 {
                    let q = a[i][t] / p;
                    for j in t..n {
                        a[i][j] = sub(a[i][j], mul(q, a[t][j])?)?;
                    }
                }
            }
            for j in t + 1..n {
                if a[t][j] != 0 {
                    let q = a[t][j] / p;
                    for i in t..m {
                        a[i][j] = sub(a[i][j], mul(q, a[i][t])?)?;
                    }
                }
            }
            let line = (t + 1..m).map(|i| (i, t)).chain((t + 1..n).map(|j| (t, j)));
            if let Some((i, j)) = min_entry(&a, line) {
                if i != t {
                    a.swap(t, i);
                } else {
                    a.iter_mut().for_each(|row| row.swap(t, j));
                }
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in t..n {
                        a[t][j] = a[t][j].checked_add(a[i][j]).ok_or(Error::Overflow)?;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    Ok(diag)
}

fn min_entry<I: Iterator<Item = (usize, usize)>>(
    a: &[Vec<i128>],
    cells: I,
) -> Option<(usize, usize)> {
    cells
        .filter(|&(i, j)| a[i][j] != 0)
        .min_by_key(|&(i, j)| a[i][j].unsigned_abs())
}

impl ChainRankBackend for Gf2 {
    fn name(&self) -> &'static str {
        "gf2"
    }

    fn reduce(&self, m: &SparseMatrix) -> Result<Reduction> {
        let mut pivots: HashMap<usize, Vec<usize>> = HashMap::new();
        for col in &m.columns {
            let mut c: Vec<usize> = col
                .iter()
                .filter(|(_, v)| v % 2 != 0)
                .map(|&(r, _)| r)
                .collect();
            c.sort_unstable();
            while let Some(&low) = c.last() {
                match pivots.get(&low) {
                    Some(p) => c = symmetric_difference(&c, p),
                    None => {
                        pivots.insert(low, c);
                        break;
                    }
                }
            }
        }
        Ok(Reduction {
            rank: pivots.len(),
            torsion: Vec::new(),
        })
    }
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(a.len() + b.len());
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(*x);
                i += 1;
            }
            (Some(_), Some(y)) => {
                out.push(*y);
                j += 1;
            }
            (Some(x), None) => {
                out.push(*x);
                i += 1;
            }
            (None, Some(y)) => {
                out.push(*y);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

impl ChainRankBackend for Rationals {
    fn name(&self) -> &'static str {
        "q"
    }

    fn reduce(&self, m: &SparseMatrix) -> Result<Reduction> {
        let mut pivots: HashMap<usize, BTreeMap<usize, BigRational>> = HashMap::new();
        for col in &m.columns {
            let mut c: BTreeMap<usize, BigRational> = col
                .iter()
                .filter(|(_, v)| *v != 0)
                .map(|&(r, v)| (r, BigRational::from_integer(v.into())))
                .collect();
            while let Some((&low, lead)) = c.last_key_value() {
                match pivots.get(&low) {
                    Some(p) => {
                        let factor = lead / &p[&low];
                        for (r, v) in p {
                            let entry = c.entry(*r).or_insert_with(BigRational::zero);
                            *entry -= &factor * v;
                            if entry.is_zero() {
                                c.remove(r);
                            }
                        }
                    }
                    None => {
                        pivots.insert(low, c);
                        break;
                    }
                }
            }
        }
        Ok(Reduction {
            rank: pivots.len(),
            torsion: Vec::new(),
        })
    }
}

/// Reduced Betti numbers `b̃₋₁, b̃₀, …, b̃_D`, plus integer torsion per degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiProfile {
    pub coefficients: String,
    /// `b̃₋₁`: one for the empty complex, zero otherwise.
    pub minus_one: usize,
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<u64>>,
}

impl BettiProfile {
    /// Reduced homology vanishes in degrees `-1..=top` (so the complex is nonempty).
    pub fn vanishes_through(&self, top: isize) -> bool {
        if top < -1 {
            return true;
        }
        self.minus_one == 0
            && (0..=top).all(|d| {
                self.betti.get(d as usize) == Some(&0) && self.torsion[d as usize].is_empty()
            })
    }
}

/// Reduced homology of `c` in degrees up to `max_dim`. Degree `D` uses the
/// `(D+1)`-simplices of `c`, so flag complexes should be built one dimension higher.
pub fn reduced_betti(
    c: &SimplicialComplex,
    max_dim: usize,
    backend: &dyn ChainRankBackend,
    limits: &Limits,
) -> Result<BettiProfile> {
    if c.total() > limits.simplices {
        return Err(Error::SizeCapExceeded {
            count: c.total(),
            cap: limits.simplices,
        });
    }
    let reductions: Vec<Reduction> = (0..=max_dim + 1)
        .map(|d| backend.reduce(&c.boundary(d)))
        .collect::<Result<_>>()?;
    let betti = (0..=max_dim)
        .map(|d| c.count(d) - reductions[d].rank - reductions[d + 1].rank)
        .collect();
    let torsion = (0..=max_dim)
        .map(|d| reductions[d + 1].torsion.clone())
        .collect();
    Ok(BettiProfile {
        coefficients: backend.name().to_string(),
        minus_one: 1 - reductions[0].rank,
        betti,
        torsion,
    })
}
