//! Text formats, generators, fixtures, falsification campaigns and their
//! JSON reports.

mod campaign;
mod fixtures;
mod format;
mod generate;
mod lemma;
mod report;

pub use campaign::{
    campaign_lemma_si, campaign_pipeline_4linked, pipeline_fixture, HostFamily, pipeline_instance, thread_pool, validate_pipeline,
    PipelineCampaign, PipelineCertificate, SiCampaign, PIPELINE_P, THREADS_VAR,
};
pub use fixtures::{recombination_fixture, RecombinationFixture, FIXTURE_T};
pub use format::{detect_format, parse_edge_list, parse_graph, parse_graph6, write_edge_list, write_graph6, Format};
pub use generate::{gen_dense_neighborhood, gen_min_degree, gen_separated_host, gen_universal_vertex};
pub use lemma::{check_si_claims, witness_fails, SiClaim, SiTally, SiWitness, Sides};
pub use report::{Certificate, Counterexample, ExperimentReport, InstanceRecord, Summary, Verdict, SCHEMA_VERSION};
