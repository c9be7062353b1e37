/// Resource caps shared by the group arithmetic, the poset searches and homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum leaf depth reached while splitting a Grigorchuk word down to the nucleus.
    pub depth: usize,
    /// Maximum rank difference explored by the breadth-first expansion search.
    pub rank_gap: usize,
    /// Maximum number of simplices handed to a homology computation.
    pub simplices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            depth: 64,
            rank_gap: 8,
            simplices: 200_000,
        }
    }
}
