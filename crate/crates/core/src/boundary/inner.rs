//! Disconnected case, inner automorphism: the extra involution is `w = qj`
//! with `q` centralizing the identity component and `j` inside it.
//!
//! Real type forces every factor to be of `SO(3)` type (odd dimension
//! `m_i = 2 p_i + 1`); the scan then checks, for every split into twisted
//! and untwisted factors, the two necessary inequalities
//!
//! ```text
//! 2a' + 1 >= m_{a'+1} ... m_a * sigma_even      and
//! 2a' + 1 >= (3^{a'} + (-1)^{a'}) / 2
//! ```
//!
//! with exact eigenspace dimensions, and eliminates every case.
//! Quaternionic type is eliminated by a parity obstruction.

use serde_json::json;

use crate::cert::{json_map, CaseCertificate, Verdict};
use crate::error::{Error, Result};

use super::trace_certificate;

/// An inner-involution case: all factors of `SO(3)` type with `m_i = 2p_i + 1`,
/// the first block twisted (`j_i != 1`), the rest untwisted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerCaseSpec {
    p_twisted: Vec<u32>,
    p_untwisted: Vec<u32>,
}

impl InnerCaseSpec {
    pub fn new(mut p_twisted: Vec<u32>, mut p_untwisted: Vec<u32>) -> Result<Self> {
        if p_twisted.len() + p_untwisted.len() < 3 {
            return Err(Error::InvalidCase(
                "inner case needs at least three factors".into(),
            ));
        }
        if p_twisted.iter().chain(&p_untwisted).any(|&p| p < 1) {
            return Err(Error::InvalidCase("factor parameters p_i must be >= 1".into()));
        }
        p_twisted.sort_unstable();
        p_untwisted.sort_unstable();
        Ok(Self {
            p_twisted,
            p_untwisted,
        })
    }

    pub fn a(&self) -> usize {
        self.p_twisted.len() + self.p_untwisted.len()
    }

    pub fn a_prime(&self) -> usize {
        self.p_twisted.len()
    }

    pub fn p_twisted(&self) -> &[u32] {
        &self.p_twisted
    }

    pub fn p_untwisted(&self) -> &[u32] {
        &self.p_untwisted
    }

    fn id_suffix(&self) -> String {
        let fmt = |v: &[u32]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        format!(
            "a={};ap={};tw={};un={}",
            self.a(),
            self.a_prime(),
            fmt(&self.p_twisted),
            fmt(&self.p_untwisted)
        )
    }
}

/// Sum over choices `g_i` in `{e_i, f_i}` with an even number of `f`
/// choices of the products `g_1 ... g_{a'}`.
pub fn sigma_even(e_list: &[i64], f_list: &[i64]) -> i64 {
    sigma_sum(e_list, f_list, 0)
}

/// Same with an odd number of `f` choices.
pub fn sigma_odd(e_list: &[i64], f_list: &[i64]) -> i64 {
    sigma_sum(e_list, f_list, 1)
}

fn sigma_sum(e_list: &[i64], f_list: &[i64], parity: u32) -> i64 {
    assert_eq!(e_list.len(), f_list.len(), "e and f lists must align");
    let n = e_list.len();
    let mut total = 0i64;
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() % 2 != parity {
            continue;
        }
        let mut term = 1i64;
        for i in 0..n {
            term *= if mask >> i & 1 == 1 { f_list[i] } else { e_list[i] };
        }
        total += term;
    }
    total
}

/// Eigenspace split of a nontrivial involution in an `SO(3)`-type factor of
/// dimension `m = 2p + 1`: the fixed and anti-fixed dimensions are `p` and
/// `p + 1` in some order, the fixed one odd.
fn eigen_split(p: u32) -> (i64, i64) {
    let (lo, hi) = (p as i64, p as i64 + 1);
    if lo % 2 == 1 {
        (lo, hi)
    } else {
        (hi, lo)
    }
}

#[derive(Debug, Clone)]
pub struct InnerScanBounds {
    pub max_a: usize,
    pub max_p: u32,
}

impl Default for InnerScanBounds {
    fn default() -> Self {
        Self { max_a: 6, max_p: 6 }
    }
}

/// Runs the inner scan: every real-type case is eliminated by the two
/// inequalities under every twisted/untwisted split and every eigenspace
/// assignment; the even-factor real case and the quaternionic case are
/// eliminated structurally.
pub fn scan_inner(bounds: &InnerScanBounds) -> Result<Vec<CaseCertificate>> {
    if bounds.max_a < 3 {
        return Err(Error::InvalidCase(format!(
            "inner scan needs a >= 3 (k >= 3); got bound {}",
            bounds.max_a
        )));
    }
    let mut certs = Vec::new();
    let values: Vec<u32> = (1..=bounds.max_p).collect();
    for a in 3..=bounds.max_a {
        for a_prime in 0..=a {
            for tw in nondecreasing_lists(a_prime, &values) {
                for un in nondecreasing_lists(a - a_prime, &values) {
                    let case = InnerCaseSpec::new(tw.clone(), un.clone())?;
                    certs.push(inner_case_certificate(&case)?);
                }
            }
        }
    }
    certs.push(real_even_factor_certificate());
    for b in [1u32, 3, 5] {
        for a in 0..=bounds.max_a as u32 {
            if a + b < 3 {
                continue;
            }
            certs.push(parity_obstruction(a, b)?);
        }
    }
    Ok(certs)
}

fn nondecreasing_lists(len: usize, values: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(values: &[u32], start: usize, len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..values.len() {
            cur.push(values[i]);
            rec(values, i, len, cur, out);
            cur.pop();
        }
    }
    rec(values, 0, len, &mut cur, &mut out);
    out
}

/// Decides one real-type inner case. The eigenspace parity convention is
/// ambiguous, so both assignments are tried per factor and elimination is
/// required under each.
pub fn inner_case_certificate(case: &InnerCaseSpec) -> Result<CaseCertificate> {
    let a_prime = case.a_prime();
    let rhs = 2 * a_prime as i64 + 1;
    let untwisted_product: i64 = case
        .p_untwisted()
        .iter()
        .map(|&p| 2 * p as i64 + 1)
        .product();

    let sign = if a_prime % 2 == 0 { 1 } else { -1 };
    let second_bound = (3i64.pow(a_prime as u32) + sign) / 2;
    let second_holds = rhs >= second_bound;

    // All per-factor eigenspace assignments.
    let splits: Vec<(i64, i64)> = case.p_twisted().iter().map(|&p| eigen_split(p)).collect();
    let mut sigma_min = i64::MAX;
    let mut sigma_max = i64::MIN;
    let mut first_holds_somewhere = false;
    let assignments = 1u64 << a_prime;
    for mask in 0..assignments {
        let mut e = Vec::with_capacity(a_prime);
        let mut f = Vec::with_capacity(a_prime);
        for (i, &(odd, even)) in splits.iter().enumerate() {
            if mask >> i & 1 == 0 {
                e.push(odd);
                f.push(even);
            } else {
                e.push(even);
                f.push(odd);
            }
        }
        let sigma = sigma_even(&e, &f);
        sigma_min = sigma_min.min(sigma);
        sigma_max = sigma_max.max(sigma);
        if rhs >= untwisted_product * sigma {
            first_holds_somewhere = true;
        }
    }

    let survives = second_holds && first_holds_somewhere;
    let verdict = if survives {
        Verdict::Survives
    } else {
        Verdict::Eliminated
    };
    Ok(trace_certificate(
        format!("inner/real/{}", case.id_suffix()),
        json_map([
            ("p_twisted", json!(case.p_twisted())),
            ("p_untwisted", json!(case.p_untwisted())),
        ]),
        json_map([
            ("rhs", json!(rhs)),
            ("untwisted_product", json!(untwisted_product)),
            ("sigma_even_min", json!(sigma_min)),
            ("sigma_even_max", json!(sigma_max)),
            ("second_bound", json!(second_bound)),
            ("second_holds", json!(second_holds)),
            ("first_holds_for_some_assignment", json!(first_holds_somewhere)),
            ("assignments_checked", json!(assignments)),
        ]),
        verdict,
        vec![
            format!(
                "fixed dimension of the inner part must equal 2a' + 1 = {rhs} \
                 (dimension formula)"
            ),
            format!(
                "first inequality {rhs} >= {untwisted_product} * sigma_even needs \
                 sigma_even <= {}; exact range over eigenspace assignments is \
                 [{sigma_min}, {sigma_max}]",
                if untwisted_product > 0 { rhs / untwisted_product } else { 0 }
            ),
            format!(
                "second inequality {rhs} >= (3^a' + (-1)^a')/2 = {second_bound}: {}",
                if second_holds { "holds" } else { "fails" }
            ),
        ],
    ))
}

/// Real type with an even-dimensional factor present: the scalar `-1` is
/// already realized inside the identity component, so `w = -j` would not be
/// a new component.
pub fn real_even_factor_certificate() -> CaseCertificate {
    trace_certificate(
        "inner/real-even-factor".into(),
        json_map([("even_factor_count", json!("any positive even count"))]),
        json_map([("minus_one_in_image", json!(true))]),
        Verdict::Eliminated,
        vec![
            "an even-dimensional factor has odd weight coordinates, so its central \
             element -1 acts as the scalar -1 on the whole representation"
                .into(),
            "hence q = -1 lies in the image of the identity component and w = qj \
             defines no new component; real type forces every factor odd-dimensional"
                .into(),
        ],
    )
}

/// Quaternionic-type inner case: for every admissible centralizer dimension
/// `m` in `{a+b, a+b+2, ..., a+3b}` the two sides of the dimension formula
/// have different parities.
pub fn parity_obstruction(a: u32, b: u32) -> Result<CaseCertificate> {
    if b % 2 == 0 {
        return Err(Error::InvalidCase(format!(
            "parity obstruction applies to quaternionic type only; b = {b} is even"
        )));
    }
    let lo = a + b;
    let hi = a + 3 * b;
    let mut steps = vec![
        "the representation is quaternionic, so dim V is even and dim V - 1 is odd"
            .to_string(),
        "q^2 = -1 makes w complex-linear for the structure defined by q, so dim V^w \
         is even"
            .to_string(),
    ];
    let mut ms = Vec::new();
    for m in (lo..=hi).step_by(2) {
        let diff = 3 * (a as i64 + b as i64) - m as i64;
        if diff % 2 != 0 {
            return Err(Error::InvalidCase(format!(
                "internal parity mismatch at m = {m}"
            )));
        }
        steps.push(format!(
            "m = {m}: 3(a+b) - m = {diff} is even, so the right side is even and cannot \
             equal the odd left side"
        ));
        ms.push(m);
    }
    Ok(trace_certificate(
        format!("inner/quaternionic/a={a};b={b}"),
        json_map([("a", json!(a)), ("b", json!(b))]),
        json_map([
            ("admissible_m", json!(ms)),
            ("lhs_parity", json!("odd")),
            ("rhs_parity", json!("even")),
        ]),
        Verdict::Eliminated,
        steps,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_even(&[1, 1], &[2, 2]), 5);
        assert_eq!(sigma_even(&[1], &[2]), 1);
        assert_eq!(sigma_odd(&[1], &[2]), 2);
        assert_eq!(sigma_even(&[], &[]), 1);
        assert_eq!(sigma_odd(&[], &[]), 0);
    }

    #[test]
    fn eigen_split_is_odd_even() {
        assert_eq!(eigen_split(1), (1, 2));
        assert_eq!(eigen_split(2), (3, 2));
        assert_eq!(eigen_split(3), (3, 4));
    }

    #[test]
    fn case_examples() {
        // a = 3, a' = 0, p = (1,1,1): needs 1 >= 27.
        let c = InnerCaseSpec::new(vec![], vec![1, 1, 1]).unwrap();
        let cert = inner_case_certificate(&c).unwrap();
        assert_eq!(cert.verdict, Verdict::Eliminated);
        assert_eq!(cert.computed["rhs"], serde_json::json!(1));
        assert_eq!(cert.computed["untwisted_product"], serde_json::json!(27));

        // a = 3, a' = 2, p = (1,1,1): second inequality 5 >= 5 holds, first
        // fails (5 >= 3 * 5 is false).
        let c = InnerCaseSpec::new(vec![1, 1], vec![1]).unwrap();
        let cert = inner_case_certificate(&c).unwrap();
        assert_eq!(cert.verdict, Verdict::Eliminated);
        assert_eq!(cert.computed["second_holds"], serde_json::json!(true));
        // Canonical assignment gives sigma_even = 1*1 + 2*2 = 5; mixed
        // per-factor assignments reach 4, still far above the bound.
        assert_eq!(cert.computed["sigma_even_min"], serde_json::json!(4));
        assert_eq!(cert.computed["sigma_even_max"], serde_json::json!(5));
        assert_eq!(
            cert.computed["first_holds_for_some_assignment"],
            serde_json::json!(false)
        );

        // a = 4, a' = 3: second inequality 7 >= 13 fails.
        let c = InnerCaseSpec::new(vec![1, 1, 1], vec![1]).unwrap();
        let cert = inner_case_certificate(&c).unwrap();
        assert_eq!(cert.computed["second_bound"], serde_json::json!(13));
        assert_eq!(cert.computed["second_holds"], serde_json::json!(false));
    }

    #[test]
    fn full_scan_has_no_survivors() {
        let certs = scan_inner(&InnerScanBounds::default()).unwrap();
        assert!(certs.iter().all(|c| c.verdict == Verdict::Eliminated));
        assert!(certs.len() > 18_000);
    }

    #[test]
    fn scan_rejects_small_a() {
        assert!(scan_inner(&InnerScanBounds { max_a: 2, max_p: 3 }).is_err());
    }

    #[test]
    fn parity_examples() {
        let cert = parity_obstruction(2, 1).unwrap();
        assert_eq!(cert.computed["admissible_m"], serde_json::json!([3, 5]));
        assert_eq!(cert.verdict, Verdict::Eliminated);

        let cert = parity_obstruction(0, 3).unwrap();
        assert_eq!(
            cert.computed["admissible_m"],
            serde_json::json!([3, 5, 7, 9])
        );

        assert!(parity_obstruction(1, 2).is_err());
    }
}
