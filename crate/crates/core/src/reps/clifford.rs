//! Gamma matrices for `Cl(12)` as 2x2 tensor chains and the half-spin
//! action of `so(12)` on a 32-dimensional chirality eigenspace.

use nalgebra::DMatrix;

use super::cmat::{sigma1, sigma2, sigma3, CMat};

/// Twelve anticommuting Hermitian involutions on `C^64`:
/// `gamma_{2j-1} = sigma3^(j-1) (x) sigma1 (x) I^(6-j)` and the same with
/// `sigma2`.
pub fn gamma_matrices() -> Vec<CMat> {
    let mut out = Vec::with_capacity(12);
    for j in 0..6 {
        for s in [sigma1(), sigma2()] {
            let mut m = CMat::identity(1);
            for pos in 0..6 {
                let factor = if pos < j {
                    sigma3()
                } else if pos == j {
                    s.clone()
                } else {
                    CMat::identity(2)
                };
                m = m.kron(&factor);
            }
            out.push(m);
        }
    }
    out
}

/// Indices of the positive chirality eigenspace: the chirality operator is
/// `-sigma3^(x6)`, so the eigenvalue at a tensor basis index is `+1` exactly
/// when the index has an odd number of set bits.
pub fn positive_chirality_indices() -> Vec<usize> {
    (0..64).filter(|i: &usize| i.count_ones() % 2 == 1).collect()
}

/// The 66 generators `gamma_a gamma_b / 2` (a < b) of the spin action,
/// restricted to the positive chirality block: complex 32x32 anti-Hermitian
/// with half-integer entries.
pub fn spin12_half_spin_generators() -> Vec<CMat> {
    let gammas = gamma_matrices();
    let idx = positive_chirality_indices();
    let mut out = Vec::with_capacity(66);
    for a in 0..12 {
        for b in a + 1..12 {
            let full = gammas[a].mul(&gammas[b]).scale(0.5, 0.0);
            // Even Clifford elements preserve chirality: check the
            // off-block entries vanish exactly, then restrict.
            let mut block = CMat::zeros(32, 32);
            for (bi, &i) in idx.iter().enumerate() {
                for j in 0..64 {
                    let (re, im) = (full.re[(i, j)], full.im[(i, j)]);
                    if re == 0.0 && im == 0.0 {
                        continue;
                    }
                    let bj = idx
                        .binary_search(&j)
                        .expect("spin generator must preserve chirality");
                    block.set(bi, bj, re, im);
                }
            }
            out.push(block);
        }
    }
    out
}

/// Spin representation of `so(7)` on the 8-dimensional real spinor space:
/// the 21 products `L_i L_j / 2` of imaginary octonion left multiplications.
pub fn so7_spin_generators() -> Vec<DMatrix<f64>> {
    let ls = super::quaternion::octonion_left_generators();
    let mut out = Vec::with_capacity(21);
    for i in 0..7 {
        for j in i + 1..7 {
            out.push(0.5 * (&ls[i] * &ls[j]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gammas_anticommute_and_square_to_one() {
        let g = gamma_matrices();
        assert_eq!(g.len(), 12);
        let id = CMat::identity(64);
        for (a, ga) in g.iter().enumerate() {
            for (b, gb) in g.iter().enumerate() {
                let anti = ga.mul(gb).add(&gb.mul(ga));
                let expected = if a == b { id.scale(2.0, 0.0) } else { CMat::zeros(64, 64) };
                assert_eq!(anti.sub(&expected).max_abs(), 0.0);
            }
        }
    }

    #[test]
    fn chirality_split_is_even() {
        assert_eq!(positive_chirality_indices().len(), 32);
    }

    #[test]
    fn half_spin_generators_are_anti_hermitian() {
        let gens = spin12_half_spin_generators();
        assert_eq!(gens.len(), 66);
        for g in &gens {
            assert!(g.is_anti_hermitian());
        }
    }

    #[test]
    fn so7_spin_generators_are_antisymmetric() {
        let gens = so7_spin_generators();
        assert_eq!(gens.len(), 21);
        for g in &gens {
            assert_eq!((g + g.transpose()).abs().max(), 0.0);
        }
    }
}
