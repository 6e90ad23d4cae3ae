//! Property suites for the weight arithmetic, including the independent
//! structure-map oracle for the real/quaternionic type rule.

use proptest::prelude::*;

use sp1k_core::weight::{classify, irrep_weights, tensor_weights, Weight};
use sp1k_core::IrrepSpec;

fn spec_strategy() -> impl Strategy<Value = IrrepSpec> {
    prop::collection::vec(2u32..=6, 1..=5).prop_map(|f| IrrepSpec::new(f).unwrap())
}

proptest! {
    #[test]
    fn total_multiplicity_is_the_product(spec in spec_strategy()) {
        let ws = tensor_weights(&spec);
        prop_assert_eq!(ws.total_multiplicity(), spec.complex_dim());
    }

    #[test]
    fn weights_are_negation_closed_and_balanced(spec in spec_strategy()) {
        let ws = tensor_weights(&spec);
        let mut sum = vec![0i64; spec.k()];
        for (w, &mult) in ws.entries() {
            let neg = Weight(w.0.iter().map(|&c| -c).collect());
            prop_assert_eq!(ws.multiplicity(&neg), mult);
            for (s, &c) in sum.iter_mut().zip(&w.0) {
                *s += c * mult as i64;
            }
        }
        prop_assert!(sum.iter().all(|&s| s == 0));
    }

    #[test]
    fn classify_is_permutation_invariant(factors in prop::collection::vec(2u32..=6, 1..=5), seed in any::<u64>()) {
        let spec = IrrepSpec::new(factors.clone()).unwrap();
        let mut shuffled = factors;
        // Cheap deterministic shuffle.
        let n = shuffled.len();
        for i in 0..n {
            let j = (seed as usize).wrapping_mul(31).wrapping_add(i * 7) % n;
            shuffled.swap(i, j);
        }
        let spec2 = IrrepSpec::new(shuffled).unwrap();
        let (c1, c2) = (classify(&spec), classify(&spec2));
        prop_assert_eq!(c1.theta, c2.theta);
        prop_assert_eq!(c1.real_dim, c2.real_dim);
    }

    #[test]
    fn weight_coordinates_match_factor_parity(spec in spec_strategy()) {
        let ws = tensor_weights(&spec);
        for w in ws.entries().keys() {
            for (c, &n) in w.0.iter().zip(spec.factors()) {
                prop_assert_eq!(c.rem_euclid(2), (n as i64 - 1).rem_euclid(2));
            }
        }
    }
}

/// Sign of the square of the factor-wise antilinear structure map
/// `J(e_j) = (-1)^j conj (.) e_{n-1-j}`, composed explicitly on every basis
/// index. `J^2 = +1` exactly when a real form exists.
fn structure_map_square_sign(spec: &IrrepSpec) -> i64 {
    let mut sign_product = 1i64;
    let mut first: Option<i64> = None;
    let factors = spec.factors();
    let mut index = vec![0u32; factors.len()];
    loop {
        let mut s = 1i64;
        for (&j, &n) in index.iter().zip(factors) {
            // J twice on basis vector j of the n-dimensional factor:
            // e_j -> (-1)^j e_{n-1-j} -> (-1)^j (-1)^{n-1-j} e_j.
            let exp = (j as i64) + (n as i64 - 1 - j as i64);
            s *= if exp % 2 == 0 { 1 } else { -1 };
        }
        match first {
            None => first = Some(s),
            Some(f) => assert_eq!(f, s, "J^2 must be scalar"),
        }
        sign_product = s;
        // Advance the multi-index.
        let mut pos = 0;
        loop {
            if pos == factors.len() {
                return sign_product;
            }
            index[pos] += 1;
            if index[pos] < factors[pos] {
                break;
            }
            index[pos] = 0;
            pos += 1;
        }
    }
}

#[test]
fn theta_matches_structure_map_oracle_exhaustively() {
    // All canonical specs with k <= 5 factors of dimension <= 6.
    fn rec(min: u32, left: usize, cur: &mut Vec<u32>, count: &mut usize) {
        if !cur.is_empty() {
            let spec = IrrepSpec::new(cur.clone()).unwrap();
            let theta = classify(&spec).theta;
            let j_squared = structure_map_square_sign(&spec);
            assert_eq!(
                theta == 1,
                j_squared == 1,
                "type rule and structure map disagree on {spec}"
            );
            *count += 1;
        }
        if left == 0 {
            return;
        }
        for n in min..=6 {
            cur.push(n);
            rec(n, left - 1, cur, count);
            cur.pop();
        }
    }
    let mut count = 0;
    rec(2, 5, &mut Vec::new(), &mut count);
    // Multisets of size 1..=5 from {2,...,6}: 5 + 15 + 35 + 70 + 126.
    assert_eq!(count, 251);
}

#[test]
fn weight_strings_are_arithmetic_progressions() {
    for n in 2..=12u32 {
        let ws = irrep_weights(n).unwrap();
        assert_eq!(ws.len(), n as usize);
        assert_eq!(ws[0], n as i64 - 1);
        assert_eq!(*ws.last().unwrap(), -(n as i64 - 1));
        for pair in ws.windows(2) {
            assert_eq!(pair[0] - pair[1], 2);
        }
    }
}
