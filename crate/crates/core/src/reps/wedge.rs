//! Third exterior power of `C^6`: wedge basis, derivation action, and the
//! symplectic contraction whose kernel is the `sp(3)`-invariant complement
//! of `C^6`.

use nalgebra::DMatrix;

use super::cmat::CMat;

/// Sorted basis triples `(i < j < k)` of `Lambda^3 C^6` in lexicographic
/// order; 20 in total.
pub fn basis_triples() -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(20);
    for i in 0..6 {
        for j in i + 1..6 {
            for k in j + 1..6 {
                out.push([i, j, k]);
            }
        }
    }
    out
}

pub fn triple_index(t: [usize; 3]) -> usize {
    basis_triples()
        .iter()
        .position(|&u| u == t)
        .expect("sorted triple")
}

/// Sorts a wedge word, returning the permutation sign, or `None` when an
/// index repeats.
pub fn signed_sort(mut t: [usize; 3]) -> Option<(f64, [usize; 3])> {
    let mut sign = 1.0;
    for pass in 0..2 {
        for s in 0..2 - pass {
            if t[s] > t[s + 1] {
                t.swap(s, s + 1);
                sign = -sign;
            }
        }
    }
    if t[0] == t[1] || t[1] == t[2] {
        None
    } else {
        Some((sign, t))
    }
}

/// Derivation action of a 6x6 matrix on the 20-dimensional wedge basis.
pub fn derivation_action(x: &CMat) -> CMat {
    let triples = basis_triples();
    let mut out = CMat::zeros(20, 20);
    for (col, &t) in triples.iter().enumerate() {
        for slot in 0..3 {
            for r in 0..6 {
                let (re, im) = (x.re[(r, t[slot])], x.im[(r, t[slot])]);
                if re == 0.0 && im == 0.0 {
                    continue;
                }
                let mut u = t;
                u[slot] = r;
                if let Some((sign, sorted)) = signed_sort(u) {
                    out.add_entry(triple_index(sorted), col, sign * re, sign * im);
                }
            }
        }
    }
    out
}

/// Symplectic form `omega(e_s, e_t)` for the block pairing
/// `(0,3), (1,4), (2,5)`.
fn omega(s: usize, t: usize) -> f64 {
    if t == s + 3 {
        1.0
    } else if s == t + 3 {
        -1.0
    } else {
        0.0
    }
}

/// Contraction `Lambda^3 C^6 -> C^6` on a sorted basis triple:
/// `phi(e_i ^ e_j ^ e_k) = omega(i,j) e_k - omega(i,k) e_j + omega(j,k) e_i`.
/// Returns (coefficient, basis index) pairs.
pub fn contraction(t: [usize; 3]) -> Vec<(f64, usize)> {
    let [i, j, k] = t;
    let mut out = Vec::new();
    for (c, v) in [(omega(i, j), k), (-omega(i, k), j), (omega(j, k), i)] {
        if c != 0.0 {
            out.push((c, v));
        }
    }
    out
}

/// Contraction applied to a coefficient vector over the 20 basis triples.
pub fn contraction_of(v: &DMatrix<f64>) -> DMatrix<f64> {
    let triples = basis_triples();
    let mut out = DMatrix::zeros(6, 1);
    for (idx, &t) in triples.iter().enumerate() {
        let c = v[(idx, 0)];
        if c == 0.0 {
            continue;
        }
        for (w, b) in contraction(t) {
            out[(b, 0)] += c * w;
        }
    }
    out
}

/// Orthonormal real basis of the kernel of the contraction: 20x14 with
/// exact half-integer entries.
///
/// The 8 triples containing no symplectic pair are orthonormal kernel
/// vectors outright. The 12 triples containing exactly one pair map onto
/// `C^6`; for each target vector `e_y` the difference of the two pair
/// wedges is in the kernel, and the differences for `y` and `y + 3` combine
/// into orthonormal vectors with entries `+-1/2`.
pub fn contraction_kernel_basis() -> DMatrix<f64> {
    let mut cols: Vec<DMatrix<f64>> = Vec::with_capacity(14);

    for t0 in [0usize, 3] {
        for t1 in [1usize, 4] {
            for t2 in [2usize, 5] {
                let (_, sorted) = signed_sort([t0, t1, t2]).expect("distinct");
                let mut v = DMatrix::zeros(20, 1);
                v[(triple_index(sorted), 0)] = 1.0;
                cols.push(v);
            }
        }
    }

    // pair_wedge(c, y) = e_c ^ e_{c+3} ^ e_y as a signed sorted column.
    let pair_wedge = |c: usize, y: usize| -> DMatrix<f64> {
        let (sign, sorted) = signed_sort([c, c + 3, y]).expect("distinct");
        let mut v = DMatrix::zeros(20, 1);
        v[(triple_index(sorted), 0)] = sign;
        v
    };

    for x in 0..3usize {
        let others: Vec<usize> = (0..3).filter(|&c| c != x).collect();
        let (c1, c2) = (others[0], others[1]);
        let d_low = pair_wedge(c1, x) - pair_wedge(c2, x);
        let d_high = pair_wedge(c1, x + 3) - pair_wedge(c2, x + 3);
        cols.push((&d_low + &d_high) * 0.5);
        cols.push((&d_low - &d_high) * 0.5);
    }

    let mut out = DMatrix::zeros(20, 14);
    for (j, c) in cols.iter().enumerate() {
        out.set_column(j, &c.column(0));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::cmat::su_basis;

    #[test]
    fn twenty_sorted_triples() {
        let t = basis_triples();
        assert_eq!(t.len(), 20);
        assert_eq!(t[0], [0, 1, 2]);
        assert_eq!(t[19], [3, 4, 5]);
    }

    #[test]
    fn signed_sort_signs() {
        assert_eq!(signed_sort([2, 1, 0]), Some((-1.0, [0, 1, 2])));
        assert_eq!(signed_sort([1, 0, 2]), Some((-1.0, [0, 1, 2])));
        assert_eq!(signed_sort([0, 1, 1]), None);
    }

    #[test]
    fn kernel_basis_is_orthonormal_and_in_the_kernel() {
        let u = contraction_kernel_basis();
        let gram = u.transpose() * &u;
        assert_eq!((gram - DMatrix::identity(14, 14)).abs().max(), 0.0);
        for j in 0..14 {
            let col = DMatrix::from_column_slice(20, 1, u.column(j).as_slice());
            assert_eq!(contraction_of(&col).abs().max(), 0.0);
        }
    }

    #[test]
    fn derivation_of_anti_hermitian_is_anti_hermitian() {
        for x in su_basis(6) {
            let d = derivation_action(&x);
            assert!(d.is_anti_hermitian());
        }
    }
}
