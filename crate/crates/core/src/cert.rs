//! Machine-checkable case certificates.
//!
//! A [`CaseCertificate`] records one case verdict together with everything
//! needed to re-derive it: the structured inputs, the named formula values
//! computed from them, and either a full computation trace or a citation to
//! a classification fact taken from the literature.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

/// Version stamp carried by every certificate.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Outcome of one case in the analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Ruled out by an explicit computation recorded in the trace.
    Eliminated,
    /// Passes every exclusion test applied to it.
    Survives,
    /// Excluded because the underlying representation is polar.
    PolarExcluded,
    /// Excluded on the strength of a cited classification fact.
    CitedExclusion,
}

/// Either a re-checkable computation trace or a literature citation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Justification {
    Trace { steps: Vec<String> },
    Citation { text: String },
}

/// Record of one case elimination or survival.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseCertificate {
    pub case_id: String,
    pub inputs: BTreeMap<String, Value>,
    pub computed: BTreeMap<String, Value>,
    pub verdict: Verdict,
    pub justification: Justification,
    pub engine_version: String,
}

impl CaseCertificate {
    /// Builds a certificate, enforcing that cited exclusions carry a citation
    /// and every other verdict carries a computation trace.
    pub fn new(
        case_id: impl Into<String>,
        inputs: BTreeMap<String, Value>,
        computed: BTreeMap<String, Value>,
        verdict: Verdict,
        justification: Justification,
    ) -> Result<Self> {
        match (&verdict, &justification) {
            (Verdict::CitedExclusion | Verdict::PolarExcluded, Justification::Citation { .. }) => {}
            (Verdict::CitedExclusion, Justification::Trace { .. }) => {
                return Err(Error::CertificateInvalid(
                    "cited-exclusion verdict requires a citation".into(),
                ))
            }
            (_, Justification::Trace { .. }) => {}
            (v, Justification::Citation { .. }) => {
                return Err(Error::CertificateInvalid(format!(
                    "verdict {v:?} requires a computation trace"
                )))
            }
        }
        Ok(Self {
            case_id: case_id.into(),
            inputs,
            computed,
            verdict,
            justification,
            engine_version: ENGINE_VERSION.to_string(),
        })
    }

    pub fn check_version(&self) -> Result<()> {
        if self.engine_version != ENGINE_VERSION {
            return Err(Error::VersionMismatch {
                found: self.engine_version.clone(),
                expected: ENGINE_VERSION.to_string(),
            });
        }
        Ok(())
    }
}

/// Shorthand for building the `inputs`/`computed` maps.
pub fn json_map<const N: usize>(pairs: [(&str, Value); N]) -> BTreeMap<String, Value> {
    pairs
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn cited_exclusion_requires_citation() {
        let err = CaseCertificate::new(
            "x",
            BTreeMap::new(),
            BTreeMap::new(),
            Verdict::CitedExclusion,
            Justification::Trace { steps: vec![] },
        );
        assert!(err.is_err());
    }

    #[test]
    fn eliminated_requires_trace() {
        let err = CaseCertificate::new(
            "x",
            BTreeMap::new(),
            BTreeMap::new(),
            Verdict::Eliminated,
            Justification::Citation { text: "no".into() },
        );
        assert!(err.is_err());
    }

    #[test]
    fn serializes_with_stable_field_order() {
        let cert = CaseCertificate::new(
            "demo/1",
            json_map([("k", json!(3))]),
            json_map([("f", json!(8)), ("m", json!(5))]),
            Verdict::Eliminated,
            Justification::Trace {
                steps: vec!["f=8".into()],
            },
        )
        .unwrap();
        let s = serde_json::to_string(&cert).unwrap();
        assert!(s.starts_with("{\"case_id\""));
        let back: CaseCertificate = serde_json::from_str(&s).unwrap();
        assert_eq!(back, cert);
    }
}
