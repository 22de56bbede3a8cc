//! Concrete problem families expressed in the independence-system model:
//! arc selection for minimum chain partitions of a DAG, partial graph
//! colorings, matchings, and the cycles-plus-edges reformulation of
//! Hamiltonian-cycle search.

mod chains;
mod coloring;
mod digraph;
mod graph;
mod hamiltonian;
mod matching;

pub use chains::{
    alternating_transform_search, chain_partition_system, min_chain_partition, ArcSelectionSystem,
    ChainPartition, TransformOutcome, ALTERNATING_SEARCH_GUARD,
};
pub use coloring::{coloring_system, count_proper_colorings_bruteforce, ColoringSystem};
pub use digraph::Digraph;
pub use graph::Graph;
pub use hamiltonian::{
    hamiltonian_cycle_direct, hamiltonian_partition_bruteforce, is_hamiltonian,
    CyclesEdgesPartition, PartitionPart, HAMILTONIAN_GUARD,
};
pub use matching::{max_bipartite_matching, visit_maximum_matchings, MatchingOracle};
