//! Versioned JSON experiment reports whose certificates are rechecked on load.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::campaign::{validate_pipeline, PipelineCertificate};
use super::format::parse_graph6;
use super::lemma::{witness_fails, SiWitness};
use crate::error::{Error, Result};
use crate::solver::build_configuration;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub schema: u32,
    pub experiment: String,
    pub seed: u64,
    pub parameters: serde_json::Value,
    pub summary: Summary,
    pub instances: Vec<InstanceRecord>,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub instances: usize,
    pub passed: usize,
    pub vacuous: usize,
    pub violations: usize,
    pub stage_failures: usize,
    /// Claim or stage name to number of evaluations, over all instances.
    pub checks: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub index: usize,
    pub descriptor: String,
    pub graph6: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub checks: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    /// Omitted when timing is disabled, so reports can be compared byte for byte.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Verdict {
    /// Every evaluated claim or stage held.
    Pass,
    /// No claim's preconditions were met.
    Vacuous,
    /// Some claim failed; see the counterexamples.
    Violation,
    /// A stage could not be completed on this input.
    StageFailed { stage: String, reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub instance: usize,
    pub graph6: String,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// A configuration (rebuilt from the terminals) on which the witnessed
    /// claim fails.
    SiClaim { terminals: Vec<usize>, witness: SiWitness },
    /// Every stage of the linkage pipeline, checkable stage by stage.
    Pipeline(Box<PipelineCertificate>),
}

impl Summary {
    pub(crate) fn of(instances: &[InstanceRecord]) -> Summary {
        let mut summary = Summary {
            instances: instances.len(),
            ..Summary::default()
        };
        for rec in instances {
            match rec.verdict {
                Verdict::Pass => summary.passed += 1,
                Verdict::Vacuous => summary.vacuous += 1,
                Verdict::Violation => summary.violations += 1,
                Verdict::StageFailed { .. } => summary.stage_failures += 1,
            }
            for (k, v) in &rec.checks {
                *summary.checks.entry(k.clone()).or_default() += v;
            }
        }
        summary
    }
}

impl ExperimentReport {
    pub(crate) fn assemble(
        experiment: &str,
        seed: u64,
        parameters: serde_json::Value,
        mut instances: Vec<InstanceRecord>,
        mut counterexamples: Vec<Counterexample>,
    ) -> ExperimentReport {
        instances.sort_by_key(|r| r.index);
        counterexamples.sort_by_key(|c| c.instance);
        ExperimentReport {
            schema: SCHEMA_VERSION,
            experiment: experiment.to_string(),
            seed,
            parameters,
            summary: Summary::of(&instances),
            instances,
            counterexamples,
        }
    }

    /// Mathematical findings: claim violations.
    pub fn has_findings(&self) -> bool {
        !self.counterexamples.is_empty()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Parses a report and rechecks everything in it.
    pub fn from_json(text: &str) -> Result<ExperimentReport> {
        let report: ExperimentReport = serde_json::from_str(text)?;
        report.revalidate()?;
        Ok(report)
    }

    /// Rechecks the schema, the summary, every instance certificate and
    /// every counterexample against its embedded graph.
    pub fn revalidate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Inconsistent(m));
        if self.schema != SCHEMA_VERSION {
            return bad(format!("schema {} is not {SCHEMA_VERSION}", self.schema));
        }
        if self.summary != Summary::of(&self.instances) {
            return bad("summary does not match the instances".into());
        }
        for rec in &self.instances {
            let g = parse_graph6(&rec.graph6)?;
            if let Some(Certificate::Pipeline(cert)) = &rec.certificate {
                validate_pipeline(&g, cert)?;
            }
            let flagged = self.counterexamples.iter().any(|c| c.instance == rec.index);
            if flagged != (rec.verdict == Verdict::Violation) {
                return bad(format!("instance {} verdict disagrees with its counterexamples", rec.index));
            }
        }
        for cx in &self.counterexamples {
            let Some(rec) = self.instances.iter().find(|r| r.index == cx.instance) else {
                return bad(format!("counterexample names missing instance {}", cx.instance));
            };
            if rec.graph6 != cx.graph6 {
                return bad(format!("counterexample graph differs from instance {}", cx.instance));
            }
            let g = parse_graph6(&cx.graph6)?;
            match &cx.certificate {
                Certificate::SiClaim { terminals, witness } => {
                    let cfg = build_configuration(&g, terminals)?;
                    if !witness_fails(&cfg, witness)? {
                        return bad(format!("claim {:?} holds on instance {}", witness.claim, cx.instance));
                    }
                }
                Certificate::Pipeline(_) => {
                    return bad("pipeline certificates certify success, not counterexamples".into());
                }
            }
        }
        Ok(())
    }
}
