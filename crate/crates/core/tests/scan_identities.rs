//! Exact identities behind the outer and inner scans, checked over random
//! parameter lists and against the closed forms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sp1k_core::boundary::{m_even, m_odd, sigma_even, sigma_odd};
use sp1k_core::Rational;

#[test]
fn swap_eigen_sums_total_to_the_product() {
    // m_even + m_odd = prod m_i, exactly, for 1000 random lists.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let len = rng.gen_range(1..=8);
        let m_list: Vec<u32> = (0..len).map(|_| rng.gen_range(2..=12)).collect();
        let product: i64 = m_list.iter().map(|&m| m as i64).product();
        assert_eq!(
            m_even(&m_list) + m_odd(&m_list),
            Rational::from_integer(product),
            "failed for {m_list:?}"
        );
    }
}

#[test]
fn swap_eigen_difference_is_one() {
    // The signed sum telescopes: m_even - m_odd = prod ((m+1)/2 - (m-1)/2) = 1.
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..200 {
        let len = rng.gen_range(1..=8);
        let m_list: Vec<u32> = (0..len).map(|_| rng.gen_range(2..=12)).collect();
        assert_eq!(
            m_even(&m_list) - m_odd(&m_list),
            Rational::from_integer(1)
        );
    }
}

#[test]
fn all_twos_closed_form() {
    // m_odd = (2^a - 1)/2 when every m_i = 2.
    for a in 1..=12usize {
        let m_list = vec![2u32; a];
        assert_eq!(m_odd(&m_list), Rational::new(2i64.pow(a as u32) - 1, 2));
    }
}

#[test]
fn sigma_sums_total_to_the_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..1000 {
        let len = rng.gen_range(0..=8);
        let e: Vec<i64> = (0..len).map(|_| rng.gen_range(1..=9)).collect();
        let f: Vec<i64> = (0..len).map(|_| rng.gen_range(1..=9)).collect();
        let product: i64 = e.iter().zip(&f).map(|(a, b)| a + b).product();
        assert_eq!(sigma_even(&e, &f) + sigma_odd(&e, &f), product);
    }
}

#[test]
fn sigma_even_closed_form_for_unit_pairs() {
    // e_i = 1, f_i = 2: sigma_even = (3^a + (-1)^a)/2.
    for a in 0..=12usize {
        let e = vec![1i64; a];
        let f = vec![2i64; a];
        let sign = if a % 2 == 0 { 1 } else { -1 };
        assert_eq!(sigma_even(&e, &f), (3i64.pow(a as u32) + sign) / 2);
    }
}
