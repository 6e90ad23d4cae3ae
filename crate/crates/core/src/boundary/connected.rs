//! Connected-group case: no spec of `k >= 3` factors admits boundary.
//!
//! The pruning inequality `theta (n_1 - 1) n_2 ... n_k <= 2k + 2` cuts the
//! search to finitely many specs; survivors are either polar (excluded by
//! the classification table) or fail the circle dimension formula at every
//! candidate direction.

use std::collections::BTreeSet;

use serde_json::json;

use crate::cert::{json_map, CaseCertificate, Justification, Verdict};
use crate::error::{Error, Result};
use crate::weight::{central_involution_fixed_dim, classify, IrrepSpec};

use super::{
    candidate_directions, circle_fixed_dim, dim_formula_circle, normalizer_dim, polar_exclusion,
    trace_certificate,
};

/// Options for the connected-case scan.
#[derive(Debug, Clone)]
pub struct ConnectedScanOptions {
    /// Upper bound on each factor dimension during enumeration. The pruning
    /// inequality forces `n_i <= 2k + 2` already; the cap only guards the
    /// enumeration loop.
    pub factor_cap: Option<u32>,
}

impl Default for ConnectedScanOptions {
    fn default() -> Self {
        Self { factor_cap: None }
    }
}

const EXCEPTIONAL_ORBIT_CITATION: &str =
    "for a connected group no boundary point lies in an exceptional orbit (Lytchak), \
     so discrete isotropy is excluded without a scan";

/// Runs the connected-group scan for a fixed number of factors `k >= 3`.
///
/// Emits one summary certificate for the pruning enumeration plus one
/// certificate per pruning survivor.
pub fn scan_connected(k: usize, options: &ConnectedScanOptions) -> Result<Vec<CaseCertificate>> {
    if k < 3 {
        return Err(Error::InvalidCase(format!(
            "k = {k} < 3: representations of at most two Sp(1) factors are covered by \
             the prior classification (Gorodski-Lytchak)"
        )));
    }
    let cap = options.factor_cap.unwrap_or(2 * k as u32 + 3);
    let survivors = pruning_survivors(k, cap);

    let mut certs = Vec::new();
    let survivor_names: Vec<String> = survivors.iter().map(|s| s.to_string()).collect();
    certs.push(trace_certificate(
        format!("connected/k={k}"),
        json_map([("k", json!(k)), ("factor_cap", json!(cap))]),
        json_map([
            ("pruning_rhs", json!(2 * k + 2)),
            ("survivors", json!(survivor_names)),
        ]),
        Verdict::Eliminated,
        vec![
            format!(
                "enumerated canonical specs with k = {k} factors, dimensions in [2, {cap}]"
            ),
            format!(
                "kept those with theta * (n_1 - 1) * n_2 ... n_k <= 2k + 2 = {}",
                2 * k + 2
            ),
            format!("survivors: [{}]", survivor_names.join("; ")),
        ],
    ));

    for spec in survivors {
        certs.push(connected_case_certificate(k, &spec)?);
    }
    Ok(certs)
}

/// Canonical specs passing the pruning inequality, in canonical order.
fn pruning_survivors(k: usize, cap: u32) -> Vec<IrrepSpec> {
    let mut out = Vec::new();
    let rhs = 2 * k as u64 + 2;
    let mut factors = Vec::with_capacity(k);
    enumerate(&mut factors, 2, k, cap, rhs, &mut out);
    out
}

fn enumerate(
    factors: &mut Vec<u32>,
    min: u32,
    k: usize,
    cap: u32,
    rhs: u64,
    out: &mut Vec<IrrepSpec>,
) {
    if factors.len() == k {
        let spec = IrrepSpec::new(factors.clone()).expect("factors are >= 2");
        let class = classify(&spec);
        let lhs = class.theta as u64
            * (factors[0] as u64 - 1)
            * factors[1..].iter().map(|&n| n as u64).product::<u64>();
        if lhs <= rhs {
            out.push(spec);
        }
        return;
    }
    for n in min..=cap {
        factors.push(n);
        // Cheapest completion repeats n in every remaining slot with
        // theta = 1; monotone in n, so the first failure ends this level.
        let remaining = (k - factors.len()) as u32;
        let tail: u64 = factors[1..].iter().map(|&m| m as u64).product();
        let min_lhs = (factors[0] as u64 - 1) * tail * (n as u64).pow(remaining);
        if min_lhs <= rhs {
            enumerate(factors, n, k, cap, rhs, out);
            factors.pop();
        } else {
            factors.pop();
            break;
        }
    }
}

/// Certificate for one pruning survivor: polar exclusion or circle search.
pub fn connected_case_certificate(k: usize, spec: &IrrepSpec) -> Result<CaseCertificate> {
    let case_id = format!("connected/k={k}/spec={spec}");
    if let Some((verdict, citation)) = polar_exclusion(spec) {
        return Ok(CaseCertificate::new(
            case_id,
            json_map([("k", json!(k)), ("spec", json!(spec.to_string()))]),
            json_map([("polar_table_hit", json!(true))]),
            verdict,
            Justification::Citation {
                text: citation.to_string(),
            },
        )?);
    }
    circle_search_certificate(case_id, spec)
}

/// Circle-isotropy search over the candidate directions of a spec, with the
/// sphere-isotropy exclusions for `ell = 3` and `ell = 0` recorded in the
/// trace. Used both by the connected scan and by the `boundary` subcommand.
pub(crate) fn circle_search_certificate(
    case_id: String,
    spec: &IrrepSpec,
) -> Result<CaseCertificate> {
    let class = classify(spec);
    let k = spec.k();
    let dirs = candidate_directions(spec);

    let mut steps = Vec::new();
    let mut balanced = Vec::new();
    let mut max_f = 0u64;
    let mut m_at_max = Vec::new();
    for d in &dirs {
        let f = circle_fixed_dim(spec, d);
        let m = normalizer_dim(d);
        let required = class.real_dim as i64 - 2 - 3 * k as i64 + m as i64;
        let ok = dim_formula_circle(spec, 1, m as i64, f as i64)?;
        steps.push(format!(
            "u={:?}: f={f}, m={m}, required f={required}: {}",
            d.coords(),
            if ok { "balanced" } else { "fails" }
        ));
        if ok {
            balanced.push(d.clone());
        }
        if f > max_f {
            max_f = f;
            m_at_max.clear();
        }
        if f == max_f {
            m_at_max.push(m);
        }
    }
    m_at_max.sort_unstable();
    m_at_max.dedup();

    // ell = 3: a 3-sphere isotropy group would contain a central involution
    // with a nontrivial scalar image, which fixes only the origin.
    let mut ell3 = Vec::new();
    for (i, &n) in spec.factors().iter().enumerate() {
        if n % 2 == 0 {
            let fixed = central_involution_fixed_dim(spec, &BTreeSet::from([i]))?;
            ell3.push(fixed);
            steps.push(format!(
                "central involution in factor {i}: fixed dim {fixed}"
            ));
        }
    }
    let ell3_excluded = !ell3.is_empty() && ell3.iter().all(|&f| f == 0);
    if ell3_excluded {
        steps.push(
            "every nontrivial central involution acts as -1, so no 3-sphere isotropy \
             group fixes a nonzero point"
                .into(),
        );
    }
    steps.push(format!("ell = 0: {EXCEPTIONAL_ORBIT_CITATION}"));

    let verdict = if balanced.is_empty() {
        Verdict::Eliminated
    } else {
        Verdict::Survives
    };
    Ok(trace_certificate(
        case_id,
        json_map([("spec", json!(spec.to_string()))]),
        json_map([
            ("directions_checked", json!(dirs.len())),
            ("max_circle_fixed_dim", json!(max_f)),
            ("normalizer_dims_at_max", json!(m_at_max)),
            (
                "balanced_directions",
                json!(balanced
                    .iter()
                    .map(|d| format!("{:?}", d.coords()))
                    .collect::<Vec<_>>()),
            ),
            (
                "central_involution_fixed_dims",
                json!(ell3),
            ),
            ("ell3_excluded", json!(ell3_excluded)),
            ("ell0_citation", json!(EXCEPTIONAL_ORBIT_CITATION)),
        ]),
        verdict,
        steps,
    ))
}

/// Standalone circle-search certificate for an arbitrary spec, exposed for
/// the `boundary` CLI subcommand.
pub fn spec_circle_certificate(spec: &IrrepSpec) -> Result<CaseCertificate> {
    circle_search_certificate(format!("boundary/spec={spec}"), spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_k() {
        assert!(scan_connected(2, &ConnectedScanOptions::default()).is_err());
    }

    #[test]
    fn k3_survivors_and_verdicts() {
        let certs = scan_connected(3, &ConnectedScanOptions::default()).unwrap();
        let summary = &certs[0];
        assert_eq!(
            summary.computed["survivors"],
            serde_json::json!(["2,2,2", "2,2,3"])
        );
        let by_id = |id: &str| certs.iter().find(|c| c.case_id == id).unwrap();
        let cube = by_id("connected/k=3/spec=2,2,2");
        assert_eq!(cube.verdict, Verdict::Eliminated);
        assert_eq!(cube.computed["max_circle_fixed_dim"], serde_json::json!(8));
        assert_eq!(
            cube.computed["normalizer_dims_at_max"],
            serde_json::json!([5])
        );
        let polar = by_id("connected/k=3/spec=2,2,3");
        assert_eq!(polar.verdict, Verdict::PolarExcluded);
    }

    #[test]
    fn k4_only_polar_survivor() {
        let certs = scan_connected(4, &ConnectedScanOptions::default()).unwrap();
        assert_eq!(
            certs[0].computed["survivors"],
            serde_json::json!(["2,2,2,2"])
        );
        assert_eq!(certs[1].verdict, Verdict::PolarExcluded);
    }

    #[test]
    fn k5_to_k8_empty() {
        for k in 5..=8 {
            let certs = scan_connected(k, &ConnectedScanOptions::default()).unwrap();
            assert_eq!(
                certs[0].computed["survivors"],
                serde_json::json!(Vec::<String>::new()),
                "k = {k}"
            );
            assert_eq!(certs.len(), 1);
        }
    }
}
