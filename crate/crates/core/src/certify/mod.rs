//! Sufficient conditions for linkedness and knittedness, connectivity
//! thresholds, and density conditions on closed neighborhoods.

mod dense;
mod greedy;
mod thresholds;

pub use dense::{
    dense_conditions, find_dense_neighborhood, knitted1_check, DenseCase, DenseNeighborhoodReport, Knitted1Status,
    Knitted1Verdict, Route, Target,
};
pub use greedy::{
    common_neighbor_certificate, greedy_link, uncommon_neighbor_certificate, CommonNeighborVerdict, GreedyOutcome,
    PairReading, UncommonVerdict,
};
pub use thresholds::{easy_connectivity_threshold, main_theorem_table, mader_threshold};
