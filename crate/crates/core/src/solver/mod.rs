//! Exact linkage, knit and profile-knittedness solvers, and the nine-terminal
//! configuration machinery with reroutes and `s_i` accounting.

mod configuration;
mod knit;
mod linkage;
mod terminals;

pub use configuration::{build_configuration, reroute, reroute_options, s_value, Configuration, PATH_CAP};
pub use knit::{
    is_k_linked, is_profile_knitted, knit, partitions_up_to_pairs, partitions_with_pairs, LinkedVerdict,
    ProfileVerdict, SystemMode,
};
pub use linkage::disjoint_paths;
pub use terminals::{Knit, Linkage, TerminalSpec};

pub(crate) use knit::{knit_unchecked, spec_of};
