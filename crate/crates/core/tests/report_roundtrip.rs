//! End-to-end report determinism and certificate re-validation.

use serde_json::json;

use sp1k_core::report::{run, to_markdown, validate_certificate_value, RunConfig};

#[test]
fn report_is_deterministic_and_certificates_revalidate() {
    let config = RunConfig::default();
    let report1 = run(&config).expect("pipeline runs");
    let report2 = run(&config).expect("pipeline runs");

    let json1 = serde_json::to_string(&report1).unwrap();
    let json2 = serde_json::to_string(&report2).unwrap();
    assert_eq!(json1, json2, "two runs must serialize byte-identically");
    assert_eq!(to_markdown(&report1), to_markdown(&report2));

    assert!(
        report1.all_expected_hold,
        "expected verdicts failed: {:?}",
        report1.failures
    );

    // Round-trip a sample of every certificate family through the
    // validator.
    let sample_case = |certs: &[sp1k_core::CaseCertificate], n: usize| -> Vec<serde_json::Value> {
        let step = (certs.len() / n).max(1);
        certs
            .iter()
            .step_by(step)
            .map(|c| serde_json::to_value(c).unwrap())
            .collect()
    };
    let mut values = Vec::new();
    values.extend(sample_case(&report1.connected_case, 10));
    values.extend(sample_case(&report1.outer_case, 25));
    values.extend(sample_case(&report1.inner_case, 40));
    values.push(serde_json::to_value(&report1.discrete_case).unwrap());
    values.extend(sample_case(&report1.candidate_exclusions, 3));
    for cert in &report1.numeric_certificates {
        values.push(serde_json::to_value(cert).unwrap());
    }
    for v in &values {
        assert!(
            validate_certificate_value(v).unwrap(),
            "certificate failed to re-validate: {}",
            v["case_id"].as_str().unwrap_or("numeric")
        );
    }

    // A tampered certificate must be detected.
    let mut tampered = serde_json::to_value(
        report1
            .connected_case
            .iter()
            .find(|c| c.case_id == "connected/k=3/spec=2,2,2")
            .unwrap(),
    )
    .unwrap();
    tampered["computed"]["max_circle_fixed_dim"] = json!(10);
    assert!(!validate_certificate_value(&tampered).unwrap());

    // A wrong engine version is refused outright.
    let mut stale = serde_json::to_value(&report1.discrete_case).unwrap();
    stale["engine_version"] = json!("0.0.0-ancient");
    assert!(validate_certificate_value(&stale).is_err());
}
