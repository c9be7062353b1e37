use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::complex::flag_complex;
use super::graph::FlagGraph;
use super::homology::{reduced_betti, BettiProfile, Integers};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::registry::Registry;

/// Every vertex misses at most `k` members of `ground`; a vertex does not miss itself.
pub fn is_k_ground(g: &FlagGraph, ground: &[usize], k: usize) -> Result<bool> {
    if !g.is_clique(ground) {
        return Err(Error::NotAClique);
    }
    Ok((0..g.len()).all(|v| {
        ground
            .iter()
            .filter(|&&u| u != v && !g.adjacent(u, v))
            .count()
            <= k
    }))
}

/// Search for a clique of `size` vertices that is a `k`-ground.
pub trait GroundFinder: Send + Sync {
    fn name(&self) -> &'static str;
    fn find(&self, g: &FlagGraph, size: usize, k: usize) -> Option<Vec<usize>>;
}

/// Grows a clique from each start vertex in order of decreasing degree.
pub struct Greedy;

/// Tries every clique of the requested size.
pub struct Exhaustive;

pub fn ground_finders() -> Registry<dyn GroundFinder> {
    let mut r: Registry<dyn GroundFinder> = Registry::new();
    r.register("greedy", Box::new(Greedy))
        .register("exhaustive", Box::new(Exhaustive));
    r
}

fn accepts(g: &FlagGraph, clique: &[usize], k: usize) -> bool {
    let mut sorted = clique.to_vec();
    sorted.sort_unstable();
    is_k_ground(g, &sorted, k).unwrap_or(false)
}

impl GroundFinder for Greedy {
    fn name(&self) -> &'static str {
        "greedy"
    }

    fn find(&self, g: &FlagGraph, size: usize, k: usize) -> Option<Vec<usize>> {
        if size == 0 {
            return Some(Vec::new());
        }
        let mut order: Vec<usize> = (0..g.len()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        for &start in &order {
            let mut clique = vec![start];
            for &v in &order {
                if clique.len() == size {
                    break;
                }
                if v != start && clique.iter().all(|&u| g.adjacent(u, v)) {
                    clique.push(v);
                }
            }
            if clique.len() == size && accepts(g, &clique, k) {
                clique.sort_unstable();
                return Some(clique);
            }
        }
        None
    }
}

impl GroundFinder for Exhaustive {
    fn name(&self) -> &'static str {
        "exhaustive"
    }

    fn find(&self, g: &FlagGraph, size: usize, k: usize) -> Option<Vec<usize>> {
        if size == 0 {
            return Some(Vec::new());
        }
        let c = flag_complex(g, size - 1);
        c.simplices(size - 1)
            .iter()
            .find(|s| accepts(g, s, k))
            .cloned()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroundedReport {
    pub m: usize,
    pub k: usize,
    /// A `k`-ground with `mk + 1` vertices was found.
    pub hypothesis_holds: bool,
    pub ground: Option<Vec<usize>>,
    /// Integer reduced homology vanishes through degree `m − 1`.
    pub conclusion_holds: bool,
    pub betti: BettiProfile,
}

impl GroundedReport {
    /// A found ground without vanishing homology would contradict the theorem.
    pub fn consistent(&self) -> bool {
        !self.hypothesis_holds || self.conclusion_holds
    }
}

/// Looks for an `(mk, k)`-ground and computes integer homology through degree
/// `m − 1`. A missing ground means only that none was found.
pub fn grounded_connectivity_check(
    g: &FlagGraph,
    m: usize,
    k: usize,
    finder: &dyn GroundFinder,
    limits: &Limits,
) -> Result<GroundedReport> {
    let ground = finder.find(g, m * k + 1, k);
    grounded_report(g, m, k, ground, limits)
}

/// Same check with the ground supplied by the caller.
pub fn grounded_connectivity_check_with_ground(
    g: &FlagGraph,
    m: usize,
    k: usize,
    ground: &[usize],
    limits: &Limits,
) -> Result<GroundedReport> {
    let ok = ground.len() == m * k + 1 && is_k_ground(g, ground, k)?;
    grounded_report(g, m, k, ok.then(|| ground.to_vec()), limits)
}

fn grounded_report(
    g: &FlagGraph,
    m: usize,
    k: usize,
    ground: Option<Vec<usize>>,
    limits: &Limits,
) -> Result<GroundedReport> {
    let top = m.max(1) - 1;
    let complex = flag_complex(g, top + 1);
    let betti = reduced_betti(&complex, top, &Integers, limits)?;
    Ok(GroundedReport {
        m,
        k,
        hypothesis_holds: ground.is_some(),
        ground,
        conclusion_holds: betti.vanishes_through(m as isize - 1),
        betti,
    })
}

/// Seeded `(mk, k)`-grounded graph: an `(mk+1)`-clique on vertices `0..=mk`, then
/// `n_extra` vertices, each missing at most `k` clique members and joined to earlier
/// extra vertices with probability `0.35`.
pub fn random_grounded_complex(seed: u64, n_extra: usize, m: usize, k: usize) -> FlagGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size = m * k + 1;
    let mut g = FlagGraph::complete(size);
    let ground: Vec<usize> = (0..size).collect();
    for _ in 0..n_extra {
        let v = g.add_vertex();
        let misses = rng.gen_range(0..=k.min(size));
        let mut members = ground.clone();
        members.shuffle(&mut rng);
        for &u in &members[misses..] {
            g.add_edge(u, v).expect("in range");
        }
        for u in size..v {
            if rng.gen_bool(0.35) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}
