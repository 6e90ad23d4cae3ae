//! Quaternion and octonion multiplication matrices.
//!
//! This file fixes every sign convention used by the matrix models:
//! quaternions are written over the ordered basis `(1, i, j, k)`, octonions
//! are built from pairs of quaternions by the doubling rule
//! `(a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))`, and `R_q`/`L_q`
//! denote right/left multiplication as matrices acting on coordinate
//! columns.

use nalgebra::DMatrix;

pub type Quat = [f64; 4];

pub fn qmul(a: Quat, b: Quat) -> Quat {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

pub fn qconj(a: Quat) -> Quat {
    [a[0], -a[1], -a[2], -a[3]]
}

fn qbasis(m: usize) -> Quat {
    let mut q = [0.0; 4];
    q[m] = 1.0;
    q
}

/// Matrix of right multiplication `x -> x q` on `H = R^4`.
pub fn right_mult(q: Quat) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(4, 4);
    for col in 0..4 {
        let image = qmul(qbasis(col), q);
        for row in 0..4 {
            m[(row, col)] = image[row];
        }
    }
    m
}

/// Matrix of left multiplication `x -> q x` on `H = R^4`.
pub fn left_mult(q: Quat) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(4, 4);
    for col in 0..4 {
        let image = qmul(q, qbasis(col));
        for row in 0..4 {
            m[(row, col)] = image[row];
        }
    }
    m
}

/// Right multiplications by `i`, `j`, `k`: the `sp(1)` action used by the
/// tensor models.
pub fn sp1_right_generators() -> [DMatrix<f64>; 3] {
    [
        right_mult(qbasis(1)),
        right_mult(qbasis(2)),
        right_mult(qbasis(3)),
    ]
}

type Oct = ([f64; 4], [f64; 4]);

fn omul(x: Oct, y: Oct) -> Oct {
    let (a, b) = x;
    let (c, d) = y;
    let first = sub4(qmul(a, c), qmul(qconj(d), b));
    let second = add4(qmul(d, a), qmul(b, qconj(c)));
    (first, second)
}

fn add4(x: Quat, y: Quat) -> Quat {
    [x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]]
}

fn sub4(x: Quat, y: Quat) -> Quat {
    [x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]]
}

fn obasis(m: usize) -> Oct {
    if m < 4 {
        (qbasis(m), [0.0; 4])
    } else {
        ([0.0; 4], qbasis(m - 4))
    }
}

/// Left multiplications by the seven imaginary octonion units on `O = R^8`:
/// anticommuting antisymmetric complex structures generating the Clifford
/// action whose even part is the spin representation of `so(7)`.
pub fn octonion_left_generators() -> Vec<DMatrix<f64>> {
    (1..8)
        .map(|m| {
            let u = obasis(m);
            let mut mat = DMatrix::zeros(8, 8);
            for col in 0..8 {
                let (p, q) = omul(u, obasis(col));
                for row in 0..4 {
                    mat[(row, col)] = p[row];
                    mat[(row + 4, col)] = q[row];
                }
            }
            mat
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_table() {
        let i = qbasis(1);
        let j = qbasis(2);
        let k = qbasis(3);
        assert_eq!(qmul(i, j), k);
        assert_eq!(qmul(j, k), i);
        assert_eq!(qmul(k, i), j);
        assert_eq!(qmul(i, i), [-1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn right_mults_are_antisymmetric_and_compose_reversed() {
        let [ri, rj, rk] = sp1_right_generators();
        for m in [&ri, &rj, &rk] {
            assert_eq!((m.clone() + m.transpose()).abs().max(), 0.0);
            assert_eq!((m * m + DMatrix::identity(4, 4)).abs().max(), 0.0);
        }
        // R_i R_j = R_{ji} = -R_k.
        assert_eq!((&ri * &rj + &rk).abs().max(), 0.0);
    }

    #[test]
    fn left_and_right_mults_commute() {
        let [ri, rj, rk] = sp1_right_generators();
        for q in 1..4 {
            let l = left_mult(qbasis(q));
            for r in [&ri, &rj, &rk] {
                assert_eq!((&l * r - r * &l).abs().max(), 0.0);
            }
        }
    }

    #[test]
    fn octonion_left_mults_satisfy_clifford_relations() {
        let ls = octonion_left_generators();
        assert_eq!(ls.len(), 7);
        let id = DMatrix::<f64>::identity(8, 8);
        for (i, li) in ls.iter().enumerate() {
            assert_eq!((li + &li.transpose()).abs().max(), 0.0);
            for (j, lj) in ls.iter().enumerate() {
                let anti = li * lj + lj * li;
                let expected = if i == j { -2.0 * &id } else { DMatrix::zeros(8, 8) };
                assert_eq!((anti - expected).abs().max(), 0.0);
            }
        }
    }
}
