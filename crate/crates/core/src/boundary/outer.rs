//! Disconnected case, outer automorphism: the extra involution permutes two
//! factors. The scan enumerates the factor data (swapped pairs, fixed odd
//! factors, fixed even factors), applies the exact necessary inequality
//!
//! ```text
//! (prod m_i)(prod n_i)(prod p_j) * theta * m_odd <= 3a + 2b + 2c + 1
//! ```
//!
//! and then decides each survivor by an exact existence check for the
//! involution itself: every involution in the swap component is conjugate to
//! a normal form whose centralizer dimension and fixed-space dimension are
//! computed by integer trace arithmetic, so the dimension formula
//! `dim V - 1 = dim G - dim C(w) + dim V^w` either has a witness or provably
//! has none.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde_json::json;

use crate::cert::{json_map, CaseCertificate, Justification, Verdict};
use crate::error::{Error, Result};
use crate::weight::{classify, IrrepSpec};
use crate::Rational;

use super::{polar_exclusion, rational_json, trace_certificate};

/// Factor data of an outer-involution case: `a` swapped pairs of size
/// `m_i >= 2`, `b` fixed odd factors `n_i >= 3`, `c` fixed even factors
/// `p_j >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterCaseSpec {
    m_list: Vec<u32>,
    n_list: Vec<u32>,
    p_list: Vec<u32>,
}

impl OuterCaseSpec {
    pub fn new(mut m_list: Vec<u32>, mut n_list: Vec<u32>, mut p_list: Vec<u32>) -> Result<Self> {
        if m_list.is_empty() {
            return Err(Error::InvalidCase(
                "outer case needs at least one swapped pair".into(),
            ));
        }
        if let Some(&m) = m_list.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidCase(format!("pair size {m} < 2")));
        }
        if let Some(&n) = n_list.iter().find(|&&n| n < 3 || n % 2 == 0) {
            return Err(Error::InvalidCase(format!(
                "fixed odd factor {n} must be odd and >= 3"
            )));
        }
        if let Some(&p) = p_list.iter().find(|&&p| p < 2 || p % 2 == 1) {
            return Err(Error::InvalidCase(format!(
                "fixed even factor {p} must be even and >= 2"
            )));
        }
        m_list.sort_unstable();
        n_list.sort_unstable();
        p_list.sort_unstable();
        Ok(Self {
            m_list,
            n_list,
            p_list,
        })
    }

    pub fn a(&self) -> usize {
        self.m_list.len()
    }

    pub fn b(&self) -> usize {
        self.n_list.len()
    }

    pub fn c(&self) -> usize {
        self.p_list.len()
    }

    pub fn k(&self) -> usize {
        2 * self.a() + self.b() + self.c()
    }

    pub fn theta(&self) -> u8 {
        if self.c() % 2 == 0 {
            1
        } else {
            2
        }
    }

    pub fn m_list(&self) -> &[u32] {
        &self.m_list
    }

    pub fn n_list(&self) -> &[u32] {
        &self.n_list
    }

    pub fn p_list(&self) -> &[u32] {
        &self.p_list
    }

    /// The spec of the underlying representation of the identity component.
    pub fn underlying_spec(&self) -> IrrepSpec {
        let mut factors = Vec::with_capacity(self.k());
        for &m in &self.m_list {
            factors.push(m);
            factors.push(m);
        }
        factors.extend_from_slice(&self.n_list);
        factors.extend_from_slice(&self.p_list);
        IrrepSpec::new(factors).expect("validated factors")
    }

    pub fn complex_dim(&self) -> i64 {
        let m2: i64 = self.m_list.iter().map(|&m| (m as i64) * (m as i64)).product();
        let n: i64 = self.n_list.iter().map(|&n| n as i64).product();
        let p: i64 = self.p_list.iter().map(|&p| p as i64).product();
        m2 * n * p
    }

    pub fn real_dim(&self) -> i64 {
        self.theta() as i64 * self.complex_dim()
    }

    fn id_suffix(&self) -> String {
        let fmt = |v: &[u32]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        format!(
            "m={};n={};p={}",
            fmt(&self.m_list),
            fmt(&self.n_list),
            fmt(&self.p_list)
        )
    }
}

/// Normalized swap eigenvalue factors `(m_i +/- 1) / 2`, summed over sign
/// patterns with an even number of minus signs.
pub fn m_even(m_list: &[u32]) -> Rational {
    swap_eigen_sum(m_list, 0)
}

/// Same with an odd number of minus signs.
pub fn m_odd(m_list: &[u32]) -> Rational {
    swap_eigen_sum(m_list, 1)
}

fn swap_eigen_sum(m_list: &[u32], parity: u32) -> Rational {
    let a = m_list.len();
    let mut total = Rational::zero();
    for mask in 0u64..(1u64 << a) {
        if (mask.count_ones() % 2) != parity {
            continue;
        }
        let mut term = Rational::one();
        for (i, &m) in m_list.iter().enumerate() {
            let sign: i64 = if mask >> i & 1 == 1 { -1 } else { 1 };
            term *= Rational::new(m as i64 + sign, 2);
        }
        total += term;
    }
    total
}

/// Left side of the exact necessary inequality.
pub fn outer_inequality_lhs(case: &OuterCaseSpec) -> Rational {
    let m: i64 = case.m_list.iter().map(|&x| x as i64).product();
    let n: i64 = case.n_list.iter().map(|&x| x as i64).product();
    let p: i64 = case.p_list.iter().map(|&x| x as i64).product();
    Rational::from_integer(m * n * p * case.theta() as i64) * m_odd(&case.m_list)
}

pub fn outer_inequality_rhs(case: &OuterCaseSpec) -> i64 {
    3 * case.a() as i64 + 2 * case.b() as i64 + 2 * case.c() as i64 + 1
}

/// One conjugacy-class representative of the data defining an involution in
/// the swap component: operator sign per pair, element class per fixed
/// factor, and the centralizing factor `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FixedElement {
    /// `h = 1`.
    One,
    /// `h = -1`.
    MinusOne,
    /// `h` an imaginary unit (`h^2 = -1`).
    Imaginary,
}

impl FixedElement {
    /// (complex trace of `rho_n(h)`, centralizer dim, scalar of `rho_n(h^2)`)
    fn data(self, n: u32) -> (i64, i64, i64) {
        match self {
            FixedElement::One => (n as i64, 3, 1),
            FixedElement::MinusOne => {
                let t = if n % 2 == 1 { n as i64 } else { -(n as i64) };
                (t, 3, 1)
            }
            FixedElement::Imaginary => {
                if n % 2 == 0 {
                    (0, 1, -1)
                } else {
                    // n = 2q + 1: trace of the quarter-turn is (-1)^q.
                    let q = (n as i64 - 1) / 2;
                    (if q % 2 == 0 { 1 } else { -1 }, 1, 1)
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ZElement {
    One,
    MinusOne,
    /// Imaginary unit in the centralizing `Sp(1)`; quaternionic type only.
    Imaginary,
}

/// Result of the exact involution-existence check.
#[derive(Debug, Clone)]
pub(crate) struct WitnessOutcome {
    /// All achievable (dim C(w), dim V^w) pairs over involution classes.
    pub achievable: BTreeSet<(i64, i64)>,
    /// A balancing assignment, if one exists: human-readable description.
    pub witness: Option<String>,
    pub assignments_checked: usize,
}

/// Enumerates the normal forms of involutions in the swap component and
/// checks the dimension formula `dim V - 1 = dim G - dim C(w) + dim V^w`
/// for each. All arithmetic is exact: fixed-space dimensions come from
/// integer traces of the normal forms.
pub(crate) fn involution_witness(case: &OuterCaseSpec) -> WitnessOutcome {
    let theta = case.theta();
    let real_dim = case.real_dim();
    let dim_g = 3 * case.k() as i64;

    let fixed_dims: Vec<u32> = case
        .n_list
        .iter()
        .chain(case.p_list.iter())
        .copied()
        .collect();

    let pair_sign_choices: Vec<Vec<i64>> = case
        .m_list
        .iter()
        .map(|&m| if m % 2 == 0 { vec![1, -1] } else { vec![1] })
        .collect();
    let fixed_choices = [
        FixedElement::One,
        FixedElement::MinusOne,
        FixedElement::Imaginary,
    ];
    let z_choices: &[ZElement] = if theta == 1 {
        &[ZElement::One, ZElement::MinusOne]
    } else {
        &[ZElement::One, ZElement::MinusOne, ZElement::Imaginary]
    };

    let mut achievable = BTreeSet::new();
    let mut witness = None;
    let mut assignments_checked = 0usize;
    let fixed_radices = vec![fixed_choices.len(); fixed_dims.len()];
    let pair_radices: Vec<usize> = pair_sign_choices.iter().map(|c| c.len()).collect();

    let mut pair_idx = vec![0usize; case.a()];
    loop {
        let pair_signs: Vec<i64> = pair_idx
            .iter()
            .enumerate()
            .map(|(i, &j)| pair_sign_choices[i][j])
            .collect();
        let pair_trace: i64 = pair_signs
            .iter()
            .zip(&case.m_list)
            .map(|(&s, &m)| s * m as i64)
            .product();

        let mut fixed_idx = vec![0usize; fixed_dims.len()];
        loop {
            let elements: Vec<FixedElement> =
                fixed_idx.iter().map(|&j| fixed_choices[j]).collect();
            let mut trace = pair_trace;
            let mut centralizer = 3 * case.a() as i64;
            let mut square_scalar = 1i64;
            for (el, &n) in elements.iter().zip(&fixed_dims) {
                let (t, c, sq) = el.data(n);
                trace *= t;
                centralizer += c;
                square_scalar *= sq;
            }

            for &z in z_choices {
                assignments_checked += 1;
                // w^2 = (square scalar of the group part) * z^2 must be +1.
                let (z_ok, real_trace) = match z {
                    ZElement::One => (square_scalar == 1, scale_trace(theta, trace)),
                    ZElement::MinusOne => (square_scalar == 1, -scale_trace(theta, trace)),
                    ZElement::Imaginary => (square_scalar == -1, 0),
                };
                if !z_ok {
                    continue;
                }
                let dim_vw = (real_dim + real_trace) / 2;
                debug_assert_eq!((real_dim + real_trace) % 2, 0);
                achievable.insert((centralizer, dim_vw));
                if real_dim - 1 == dim_g - centralizer + dim_vw && witness.is_none() {
                    witness = Some(format!(
                        "pair signs {:?}, fixed elements {:?}, z {:?}: dim C(w) = {}, \
                         dim V^w = {}, and {} - 1 = {} - {} + {}",
                        pair_signs, elements, z, centralizer, dim_vw, real_dim, dim_g,
                        centralizer, dim_vw
                    ));
                }
            }

            if !advance_mixed(&mut fixed_idx, &fixed_radices) {
                break;
            }
        }

        if !advance_mixed(&mut pair_idx, &pair_radices) {
            break;
        }
    }
    WitnessOutcome {
        achievable,
        witness,
        assignments_checked,
    }
}

/// Real trace of the involution on the real form (`theta = 1`) or on the
/// underlying real space of the quaternionic model (`theta = 2`).
fn scale_trace(theta: u8, complex_trace: i64) -> i64 {
    if theta == 1 {
        complex_trace
    } else {
        2 * complex_trace
    }
}

fn advance_mixed(idx: &mut [usize], radices: &[usize]) -> bool {
    for i in (0..idx.len()).rev() {
        idx[i] += 1;
        if idx[i] < radices[i] {
            return true;
        }
        idx[i] = 0;
    }
    false
}

/// Bounds for the outer scan. Defaults contain every solution of the
/// necessary inequality with margin; completeness is certified during the
/// scan.
#[derive(Debug, Clone)]
pub struct OuterScanBounds {
    pub max_a: usize,
    pub max_b: usize,
    pub max_c: usize,
    pub max_dim: u32,
}

impl Default for OuterScanBounds {
    fn default() -> Self {
        Self {
            max_a: 6,
            max_b: 6,
            max_c: 6,
            max_dim: 12,
        }
    }
}

/// Minimal inequality left side over a class `(a, b, c)`: all pair sizes 2,
/// all odd factors 3, all even factors 2.
fn class_min_case(a: usize, b: usize, c: usize) -> OuterCaseSpec {
    OuterCaseSpec::new(vec![2; a], vec![3; b], vec![2; c]).expect("minimal class case is valid")
}

/// Runs the outer scan: class-level pruning by the minimal inequality value,
/// tuple-level evaluation inside surviving classes, the exact involution
/// existence check for inequality survivors, and a completeness certificate
/// for the bounds.
pub fn scan_outer(bounds: &OuterScanBounds) -> Result<Vec<CaseCertificate>> {
    if bounds.max_a < 1 || bounds.max_dim < 3 {
        return Err(Error::BoundsTooSmall(
            "need at least one swapped pair and dimensions up to 3".into(),
        ));
    }
    // Fail before scanning if the bounds cannot be certified complete.
    let completeness = outer_completeness_certificate(bounds)?;
    let mut certs = Vec::new();
    for a in 1..=bounds.max_a {
        for b in 0..=bounds.max_b {
            for c in 0..=bounds.max_c {
                let min_case = class_min_case(a, b, c);
                if outer_inequality_lhs(&min_case)
                    > Rational::from_integer(outer_inequality_rhs(&min_case))
                {
                    certs.push(outer_class_certificate(a, b, c)?);
                    continue;
                }
                enumerate_class_tuples(a, b, c, bounds, &mut certs)?;
            }
        }
    }
    certs.push(completeness);
    Ok(certs)
}

/// Class-level elimination certificate: the minimal member of `(a, b, c)`
/// already fails the inequality, and the left side is non-decreasing in
/// every factor dimension.
pub fn outer_class_certificate(a: usize, b: usize, c: usize) -> Result<CaseCertificate> {
    let min_case = class_min_case(a, b, c);
    let lhs_min = outer_inequality_lhs(&min_case);
    let rhs = outer_inequality_rhs(&min_case);
    if lhs_min <= Rational::from_integer(rhs) {
        return Err(Error::InvalidCase(format!(
            "class (a={a}, b={b}, c={c}) is not eliminated at its minimum"
        )));
    }
    Ok(trace_certificate(
        format!("outer/class/a={a},b={b},c={c}"),
        json_map([("a", json!(a)), ("b", json!(b)), ("c", json!(c))]),
        json_map([("lhs_min", rational_json(lhs_min)), ("rhs", json!(rhs))]),
        Verdict::Eliminated,
        vec![
            format!(
                "minimal member (all m_i = 2, n_i = 3, p_j = 2) has inequality left \
                 side {lhs_min} > {rhs}"
            ),
            "the left side is non-decreasing in every factor dimension, so every \
             member of the class fails"
                .into(),
        ],
    ))
}

/// Evaluates every tuple in a class whose minimal member passes the
/// inequality. Dimension bounds are certified: the largest admissible
/// dimension in each slot must already fail.
fn enumerate_class_tuples(
    a: usize,
    b: usize,
    c: usize,
    bounds: &OuterScanBounds,
    certs: &mut Vec<CaseCertificate>,
) -> Result<()> {
    let m_lists = nondecreasing_lists(a, &(2..=bounds.max_dim).collect::<Vec<_>>());
    let n_lists = nondecreasing_lists(b, &(3..=bounds.max_dim).step_by(2).collect::<Vec<_>>());
    let p_lists = nondecreasing_lists(c, &(2..=bounds.max_dim).step_by(2).collect::<Vec<_>>());
    for m in &m_lists {
        for n in &n_lists {
            for p in &p_lists {
                let case = OuterCaseSpec::new(m.clone(), n.clone(), p.clone())?;
                certs.push(outer_case_certificate(&case)?);
            }
        }
    }
    Ok(())
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

/// Full decision chain for one outer tuple.
pub fn outer_case_certificate(case: &OuterCaseSpec) -> Result<CaseCertificate> {
    let lhs = outer_inequality_lhs(case);
    let rhs = outer_inequality_rhs(case);
    let underlying = case.underlying_spec();
    debug_assert_eq!(classify(&underlying).theta, case.theta());
    let case_id = format!("outer/{}", case.id_suffix());
    let inputs = json_map([
        ("m_list", json!(case.m_list())),
        ("n_list", json!(case.n_list())),
        ("p_list", json!(case.p_list())),
    ]);
    let base_computed = [
        ("a", json!(case.a())),
        ("b", json!(case.b())),
        ("c", json!(case.c())),
        ("theta", json!(case.theta())),
        ("underlying_spec", json!(underlying.to_string())),
        ("lhs", rational_json(lhs)),
        ("rhs", json!(rhs)),
        ("inequality_holds", json!(lhs <= Rational::from_integer(rhs))),
    ];

    if lhs > Rational::from_integer(rhs) {
        return Ok(trace_certificate(
            case_id,
            inputs,
            base_computed.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            Verdict::Eliminated,
            vec![format!(
                "necessary inequality fails: {lhs} > {rhs}; no involution in the swap \
                 component can satisfy the dimension formula"
            )],
        ));
    }

    if case.k() <= 2 {
        return Ok(CaseCertificate::new(
            case_id,
            inputs,
            base_computed.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            Verdict::CitedExclusion,
            Justification::Citation {
                text: "representations of at most two Sp(1) factors are covered by the \
                       prior classification (Gorodski-Lytchak)"
                    .into(),
            },
        )?);
    }

    if let Some((verdict, citation)) = polar_exclusion(&underlying) {
        return Ok(CaseCertificate::new(
            case_id,
            inputs,
            base_computed.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            verdict,
            Justification::Citation {
                text: citation.to_string(),
            },
        )?);
    }

    let outcome = involution_witness(case);
    let mut computed: std::collections::BTreeMap<String, serde_json::Value> = base_computed
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
    computed.insert(
        "achievable_centralizer_fixed_pairs".into(),
        json!(outcome
            .achievable
            .iter()
            .map(|(c, f)| json!([c, f]))
            .collect::<Vec<_>>()),
    );
    computed.insert(
        "assignments_checked".into(),
        json!(outcome.assignments_checked),
    );
    computed.insert("witness_found".into(), json!(outcome.witness.is_some()));

    let real_dim = case.real_dim();
    let dim_g = 3 * case.k() as i64;
    match outcome.witness {
        Some(w) => Ok(trace_certificate(
            case_id,
            inputs,
            computed,
            Verdict::Survives,
            vec![
                format!("necessary inequality holds: {lhs} <= {rhs}"),
                format!("involution witness: {w}"),
            ],
        )),
        None => Ok(trace_certificate(
            case_id,
            inputs,
            computed,
            Verdict::Eliminated,
            vec![
                format!("necessary inequality holds: {lhs} <= {rhs}"),
                format!(
                    "no involution class balances the dimension formula: need \
                     dim V^w - dim C(w) = {}, achievable pairs are {:?}",
                    real_dim - 1 - dim_g,
                    outcome.achievable
                ),
            ],
        )),
    }
}

/// Certifies that the default bounds contain every tuple satisfying the
/// inequality: the boundary classes fail with margin > 2 and the left side
/// grows faster than the right in every direction.
pub fn outer_completeness_certificate(bounds: &OuterScanBounds) -> Result<CaseCertificate> {
    let mut steps = Vec::new();
    let mut min_margin: Option<Rational> = None;
    for a in 1..=bounds.max_a {
        for b in 0..=bounds.max_b {
            for c in 0..=bounds.max_c {
                let on_face = a == bounds.max_a || b == bounds.max_b || c == bounds.max_c;
                if !on_face {
                    continue;
                }
                let case = class_min_case(a, b, c);
                let margin = outer_inequality_lhs(&case)
                    - Rational::from_integer(outer_inequality_rhs(&case));
                if margin <= Rational::from_integer(2) {
                    return Err(Error::BoundsTooSmall(format!(
                        "boundary class (a={a}, b={b}, c={c}) has margin {margin} <= 2"
                    )));
                }
                min_margin = Some(match min_margin {
                    Some(m) if m < margin => m,
                    _ => margin,
                });
            }
        }
    }
    steps.push(format!(
        "every class on a bound face fails the inequality with margin > 2 \
         (minimum margin {})",
        min_margin.expect("at least one face class")
    ));
    steps.push(
        "adding a swapped pair multiplies the left side by at least 4 while the right \
         side grows by 3; failure with margin > 2 is preserved"
            .into(),
    );
    steps.push(
        "adding a fixed odd factor multiplies the left side by at least 3 while the \
         right side grows by 2; failure with margin > 2 is preserved"
            .into(),
    );
    steps.push(
        "adding a fixed even factor multiplies the left side by at least 1 (type flip) \
         and any two consecutive additions multiply it by at least 4 while the right \
         side grows by 4; failure with margin > 2 is preserved over two steps"
            .into(),
    );

    // Dimension caps: inside every class whose minimum passes, bumping any
    // slot to the cap must already fail, and the left side is strictly
    // increasing in each dimension.
    for a in 1..=bounds.max_a {
        for b in 0..=bounds.max_b {
            for c in 0..=bounds.max_c {
                let min_case = class_min_case(a, b, c);
                if outer_inequality_lhs(&min_case)
                    > Rational::from_integer(outer_inequality_rhs(&min_case))
                {
                    continue;
                }
                for slot in 0..3 {
                    let capped = match slot {
                        0 => {
                            let mut m = vec![2; a];
                            m[a - 1] = bounds.max_dim;
                            OuterCaseSpec::new(m, vec![3; b], vec![2; c])?
                        }
                        1 if b > 0 => {
                            let mut n = vec![3; b];
                            n[b - 1] = bounds.max_dim - 1 + bounds.max_dim % 2;
                            OuterCaseSpec::new(vec![2; a], n, vec![2; c])?
                        }
                        2 if c > 0 => {
                            let mut p = vec![2; c];
                            p[c - 1] = bounds.max_dim - bounds.max_dim % 2;
                            OuterCaseSpec::new(vec![2; a], vec![3; b], p)?
                        }
                        _ => continue,
                    };
                    let lhs = outer_inequality_lhs(&capped);
                    let rhs = Rational::from_integer(outer_inequality_rhs(&capped));
                    if lhs <= rhs {
                        return Err(Error::BoundsTooSmall(format!(
                            "dimension cap {} is inside the satisfying region for class \
                             (a={a}, b={b}, c={c})",
                            bounds.max_dim
                        )));
                    }
                }
            }
        }
    }
    steps.push(format!(
        "inside every class whose minimum passes, raising any single dimension to the \
         cap {} already fails the inequality, whose left side is strictly increasing \
         in each dimension",
        bounds.max_dim
    ));

    Ok(trace_certificate(
        "outer/completeness".into(),
        json_map([
            ("max_a", json!(bounds.max_a)),
            ("max_b", json!(bounds.max_b)),
            ("max_c", json!(bounds.max_c)),
            ("max_dim", json!(bounds.max_dim)),
        ]),
        json_map([("bounds_complete", json!(true))]),
        Verdict::Eliminated,
        steps,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn case(m: &[u32], n: &[u32], p: &[u32]) -> OuterCaseSpec {
        OuterCaseSpec::new(m.to_vec(), n.to_vec(), p.to_vec()).unwrap()
    }

    #[test]
    fn swap_eigen_sums() {
        assert_eq!(m_even(&[2]), Rational::new(3, 2));
        assert_eq!(m_odd(&[2]), Rational::new(1, 2));
        assert_eq!(m_odd(&[2, 2]), Rational::new(3, 2));
        assert_eq!(m_even(&[3]), Rational::from_integer(2));
        assert_eq!(m_odd(&[3]), Rational::from_integer(1));
        assert_eq!(
            m_even(&[3]) + m_odd(&[3]),
            Rational::from_integer(3)
        );
    }

    #[test]
    fn inequality_examples() {
        // Survivor: 2 * 2 * 2 * 1/2 = 4 <= 6.
        let survivor = case(&[2], &[], &[2]);
        assert_eq!(outer_inequality_lhs(&survivor), Rational::from_integer(4));
        assert_eq!(outer_inequality_rhs(&survivor), 6);

        // Two pairs of 2: 4 * 3/2 = 6 <= 7.
        let pairs = case(&[2, 2], &[], &[]);
        assert_eq!(outer_inequality_lhs(&pairs), Rational::from_integer(6));
        assert_eq!(outer_inequality_rhs(&pairs), 7);

        // Pairs (2, 3): 6 * 5/2 = 15 > 7.
        let big = case(&[2, 3], &[], &[]);
        assert_eq!(outer_inequality_lhs(&big), Rational::from_integer(15));
        assert_eq!(outer_inequality_rhs(&big), 7);
    }

    #[test]
    fn verdict_examples() {
        let survivor = outer_case_certificate(&case(&[2], &[], &[2])).unwrap();
        assert_eq!(survivor.verdict, Verdict::Survives);
        assert_eq!(
            survivor.computed["underlying_spec"],
            serde_json::json!("2,2,2")
        );

        let polar = outer_case_certificate(&case(&[2, 2], &[], &[])).unwrap();
        assert_eq!(polar.verdict, Verdict::PolarExcluded);

        let eliminated = outer_case_certificate(&case(&[2, 3], &[], &[])).unwrap();
        assert_eq!(eliminated.verdict, Verdict::Eliminated);
    }

    #[test]
    fn witness_matches_discrete_lemma() {
        // For the surviving case the witness is the plain factor swap:
        // centralizer dimension 6 and fixed dimension 12.
        let outcome = involution_witness(&case(&[2], &[], &[2]));
        assert!(outcome.achievable.contains(&(6, 12)));
        assert!(outcome.witness.is_some());
    }

    #[test]
    fn inequality_passers_without_witness_are_eliminated() {
        // 2,2,5 passes the inequality (5 <= 6) but no involution class
        // balances the dimension formula.
        let c255 = case(&[2], &[5], &[]);
        assert!(outer_inequality_lhs(&c255) <= Rational::from_integer(outer_inequality_rhs(&c255)));
        let cert = outer_case_certificate(&c255).unwrap();
        assert_eq!(cert.verdict, Verdict::Eliminated);
        assert_eq!(cert.computed["witness_found"], serde_json::json!(false));

        // Same for 2,2,2,4 via fixed even factors 2 and 4.
        let c2224 = case(&[2], &[], &[2, 4]);
        assert!(
            outer_inequality_lhs(&c2224) <= Rational::from_integer(outer_inequality_rhs(&c2224))
        );
        let cert = outer_case_certificate(&c2224).unwrap();
        assert_eq!(cert.verdict, Verdict::Eliminated);
    }

    #[test]
    fn default_scan_single_nonpolar_survivor() {
        let certs = scan_outer(&OuterScanBounds::default()).unwrap();
        let survivors: Vec<&CaseCertificate> = certs
            .iter()
            .filter(|c| c.verdict == Verdict::Survives)
            .collect();
        assert_eq!(survivors.len(), 1);
        assert_eq!(
            survivors[0].computed["underlying_spec"],
            serde_json::json!("2,2,2")
        );
        assert!(certs.iter().any(|c| c.case_id == "outer/completeness"));
    }

    #[test]
    fn bounds_too_small_is_an_error() {
        let bounds = OuterScanBounds {
            max_a: 2,
            max_b: 1,
            max_c: 1,
            max_dim: 4,
        };
        assert!(scan_outer(&bounds).is_err());
    }
}
