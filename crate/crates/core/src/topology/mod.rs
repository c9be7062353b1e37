//! Flag complexes, exact simplicial homology and the grounded-complex criterion.

mod complex;
mod graph;
mod ground;
mod homology;

pub use complex::{flag_complex, SimplicialComplex, SparseMatrix};
pub use graph::{FlagGraph, GraphJson};
pub use ground::{
    ground_finders, grounded_connectivity_check, grounded_connectivity_check_with_ground,
    is_k_ground, random_grounded_complex, Exhaustive, Greedy, GroundFinder, GroundedReport,
};
pub use homology::{
    backends, reduced_betti, BettiProfile, ChainRankBackend, Gf2, Integers, Rationals, Reduction,
};

#[cfg(test)]
mod tests;
