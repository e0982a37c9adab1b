use serde::{Deserialize, Serialize};

/// Size guards for the exponential searches.
///
/// Every guarded operation fails with [`crate::Error::ResourceLimit`] instead of
/// silently truncating.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Hole enumeration vertex cap.
    pub hole_vertices: usize,
    /// Largest co-tree rank accepted by the literal sign-vector enumeration.
    pub cotree_rank: usize,
    /// Vertex cap for enumerating every cycle (restricted balanceability).
    pub cycle_vertices: usize,
    /// Cap on the number of cycles collected by the all-cycle enumeration.
    pub cycle_count: usize,
    /// Largest center degree whose neighbor subsets are searched exhaustively.
    pub star_degree: usize,
    /// Vertex cap for exhaustive 2-join bipartition enumeration.
    pub two_join_vertices: usize,
    /// Vertex cap for exhaustive 1-join and 6-join bipartition enumeration.
    pub bipartition_vertices: usize,
    /// Vertex cap for induced-R10 containment searches.
    pub r10_search_vertices: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        hole_vertices: 24,
        cotree_rank: 30,
        cycle_vertices: 14,
        cycle_count: 2_000_000,
        star_degree: 12,
        two_join_vertices: 20,
        bipartition_vertices: 16,
        r10_search_vertices: 20,
    };
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}
