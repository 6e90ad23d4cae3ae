//! Constructions of the individual matrix models.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

use super::clifford::{so7_spin_generators, spin12_half_spin_generators};
use super::cmat::{sigma1, sigma3, sp_basis, su_basis, CMat};
use super::quaternion::sp1_right_generators;
use super::wedge::{contraction_kernel_basis, derivation_action};
use super::{MatrixRep, RepName};

fn so_elementary(n: usize, a: usize, b: usize) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(n, n);
    m[(a, b)] = 1.0;
    m[(b, a)] = -1.0;
    m
}

fn so_basis(n: usize) -> Vec<DMatrix<f64>> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for a in 0..n {
        for b in a + 1..n {
            out.push(so_elementary(n, a, b));
        }
    }
    out
}

/// `SO(n) x Sp(1)` on `R^n (x) H`: elementary rotations on the first
/// factor, right quaternion multiplications on the second.
pub fn so_n_sp1(n: u32) -> Result<MatrixRep> {
    if n < 5 {
        return Err(Error::UnknownRep(format!("so{n}_sp1: need n >= 5")));
    }
    let n = n as usize;
    let id4 = DMatrix::<f64>::identity(4, 4);
    let idn = DMatrix::<f64>::identity(n, n);
    let mut generators = Vec::new();
    let mut principal = Vec::new();
    let mut idx = 0usize;
    for a in 0..n {
        for b in a + 1..n {
            generators.push(so_elementary(n, a, b).kronecker(&id4));
            if a >= 4 {
                principal.push(idx);
            }
            idx += 1;
        }
    }
    for r in sp1_right_generators() {
        generators.push(idn.kronecker(&r));
    }
    Ok(MatrixRep {
        name: RepName::SoNSp1(n as u32),
        dim_space: 4 * n,
        dim_algebra: n * (n - 1) / 2 + 3,
        generators,
        tensor_shape: Some((n, 4)),
        principal_isotropy_block: Some(principal),
    })
}

/// `SO(p) x SO(q)` on `R^p (x) R^q`.
pub fn tensor_so_so(p: usize, q: usize) -> MatrixRep {
    let idp = DMatrix::<f64>::identity(p, p);
    let idq = DMatrix::<f64>::identity(q, q);
    let mut generators = Vec::new();
    for x in so_basis(p) {
        generators.push(x.kronecker(&idq));
    }
    for y in so_basis(q) {
        generators.push(idp.kronecker(&y));
    }
    let name = if q == 3 { RepName::So4So3 } else { RepName::So4So4 };
    MatrixRep {
        name,
        dim_space: p * q,
        dim_algebra: p * (p - 1) / 2 + q * (q - 1) / 2,
        generators,
        tensor_shape: Some((p, q)),
        principal_isotropy_block: None,
    }
}

fn su2_basis() -> Vec<CMat> {
    vec![
        sigma3().scale(0.0, 1.0),
        {
            let mut j = CMat::zeros(2, 2);
            j.set(0, 1, 1.0, 0.0);
            j.set(1, 0, -1.0, 0.0);
            j
        },
        sigma1().scale(0.0, 1.0),
    ]
}

/// `Sp(1)^3` on the realified triple tensor of `C^2`: 16 real dimensions.
pub fn sp1cubed_tensor() -> MatrixRep {
    let id2 = CMat::identity(2);
    let mut generators = Vec::new();
    for slot in 0..3 {
        for x in su2_basis() {
            let mut m = CMat::identity(1);
            for pos in 0..3 {
                m = m.kron(if pos == slot { &x } else { &id2 });
            }
            generators.push(m.realify());
        }
    }
    MatrixRep {
        name: RepName::Sp1CubedTensor,
        dim_space: 16,
        dim_algebra: 9,
        generators,
        tensor_shape: None,
        principal_isotropy_block: None,
    }
}

/// `SU(6)` on `Lambda^3 C^6`, realified: 40 real dimensions.
pub fn su6_lambda3() -> MatrixRep {
    let generators = su_basis(6)
        .iter()
        .map(|x| derivation_action(x).realify())
        .collect();
    MatrixRep {
        name: RepName::Su6Lambda3,
        dim_space: 40,
        dim_algebra: 35,
        generators,
        tensor_shape: None,
        principal_isotropy_block: None,
    }
}

/// `Sp(3)` on the kernel of the symplectic contraction inside
/// `Lambda^3 C^6`: complex dimension 14, realified to 28.
pub fn sp3_lambda3() -> MatrixRep {
    let kernel = contraction_kernel_basis();
    let kernel_t = kernel.transpose();
    let mut generators = Vec::new();
    for x in sp_basis(3) {
        let d = derivation_action(&x);
        let restricted = CMat {
            re: &kernel_t * &d.re * &kernel,
            im: &kernel_t * &d.im * &kernel,
        };
        // The kernel is invariant; the restriction must reproduce the
        // action exactly.
        let lift_re = &d.re * &kernel - &kernel * &restricted.re;
        let lift_im = &d.im * &kernel - &kernel * &restricted.im;
        assert_eq!(
            lift_re.abs().max().max(lift_im.abs().max()),
            0.0,
            "contraction kernel must be invariant under sp(3)"
        );
        generators.push(restricted.realify());
    }
    MatrixRep {
        name: RepName::Sp3Lambda3,
        dim_space: 28,
        dim_algebra: 21,
        generators,
        tensor_shape: None,
        principal_isotropy_block: None,
    }
}

/// `Spin(12)` on a half-spin space, realified: 64 real dimensions.
pub fn spin12_halfspin() -> MatrixRep {
    let generators = spin12_half_spin_generators()
        .iter()
        .map(|g| g.realify())
        .collect();
    MatrixRep {
        name: RepName::Spin12HalfSpin,
        dim_space: 64,
        dim_algebra: 66,
        generators,
        tensor_shape: None,
        principal_isotropy_block: None,
    }
}

/// `SU(4) x Sp(2)` on `C^4 (x) H^2`, realified: 32 real dimensions.
pub fn su4_sp2() -> MatrixRep {
    let id4 = CMat::identity(4);
    let mut generators = Vec::new();
    for x in su_basis(4) {
        generators.push(x.kron(&id4).realify());
    }
    for y in sp_basis(2) {
        generators.push(id4.kron(&y).realify());
    }
    MatrixRep {
        name: RepName::Su4Sp2,
        dim_space: 32,
        dim_algebra: 25,
        generators,
        tensor_shape: None,
        principal_isotropy_block: None,
    }
}

/// The two displayed circle subgroups of `SU(4) x Sp(2)`, as realified
/// algebra elements. `which` is 1 or 2.
pub fn su4_sp2_circle_generator(which: usize) -> Result<DMatrix<f64>> {
    let (a_diag, b_diag): ([f64; 4], [f64; 4]) = match which {
        1 => ([1.0, 1.0, -1.0, -1.0], [-1.0, -1.0, 1.0, 1.0]),
        2 => ([1.0, 0.0, -1.0, 0.0], [-1.0, 0.0, 1.0, 0.0]),
        _ => {
            return Err(Error::InvalidCase(format!(
                "circle index {which} is not 1 or 2"
            )))
        }
    };
    let mut a = CMat::zeros(4, 4);
    let mut b = CMat::zeros(4, 4);
    for t in 0..4 {
        a.set(t, t, 0.0, a_diag[t]);
        b.set(t, t, 0.0, b_diag[t]);
    }
    let id4 = CMat::identity(4);
    Ok(a.kron(&id4).add(&id4.kron(&b)).realify())
}

/// `Spin(7) x U(2)` on `R^8 (x) C^2`: spinor rotations tensor the
/// realified unitary action, 32 real dimensions.
pub fn spin7_u2() -> MatrixRep {
    let id8 = DMatrix::<f64>::identity(8, 8);
    let id4 = DMatrix::<f64>::identity(4, 4);
    let mut generators = Vec::new();
    for x in so7_spin_generators() {
        generators.push(x.kronecker(&id4));
    }
    for y in u2_real_basis() {
        generators.push(id8.kronecker(&y));
    }
    MatrixRep {
        name: RepName::Spin7U2,
        dim_space: 32,
        dim_algebra: 25,
        generators,
        tensor_shape: Some((8, 4)),
        principal_isotropy_block: None,
    }
}

fn u2_real_basis() -> Vec<DMatrix<f64>> {
    let i_id = CMat::identity(2).scale(0.0, 1.0);
    let i_s3 = sigma3().scale(0.0, 1.0);
    let mut j = CMat::zeros(2, 2);
    j.set(0, 1, 1.0, 0.0);
    j.set(1, 0, -1.0, 0.0);
    let i_s1 = sigma1().scale(0.0, 1.0);
    vec![i_id.realify(), i_s3.realify(), j.realify(), i_s1.realify()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::build;

    #[test]
    fn dimensions() {
        let r = build(RepName::SoNSp1(5)).unwrap();
        assert_eq!((r.dim_space, r.dim_algebra), (20, 13));
        let r = build(RepName::Sp3Lambda3).unwrap();
        assert_eq!((r.dim_space, r.dim_algebra), (28, 21));
        let r = build(RepName::Spin12HalfSpin).unwrap();
        assert_eq!((r.dim_space, r.dim_algebra), (64, 66));
        let r = build(RepName::Su6Lambda3).unwrap();
        assert_eq!((r.dim_space, r.dim_algebra), (40, 35));
        let r = build(RepName::Su4Sp2).unwrap();
        assert_eq!((r.dim_space, r.dim_algebra), (32, 25));
        let r = build(RepName::Spin7U2).unwrap();
        assert_eq!((r.dim_space, r.dim_algebra), (32, 25));
        let r = build(RepName::So4So3).unwrap();
        assert_eq!((r.dim_space, r.dim_algebra), (12, 9));
        let r = build(RepName::So4So4).unwrap();
        assert_eq!((r.dim_space, r.dim_algebra), (16, 12));
        let r = build(RepName::Sp1CubedTensor).unwrap();
        assert_eq!((r.dim_space, r.dim_algebra), (16, 9));
    }

    #[test]
    fn unknown_names_rejected() {
        assert!(RepName::parse("so3_sp1").is_err());
        assert!(RepName::parse("nonsense").is_err());
        assert_eq!(RepName::parse("so7_sp1").unwrap(), RepName::SoNSp1(7));
    }

    #[test]
    fn principal_block_size() {
        let r = build(RepName::SoNSp1(7)).unwrap();
        let block = r.principal_isotropy_block.unwrap();
        // so(3) inside so(7): rotations among the last three coordinates.
        assert_eq!(block.len(), 3);
    }

    #[test]
    fn circle_generators_live_in_the_algebra() {
        let rep = build(RepName::Su4Sp2).unwrap();
        for which in [1, 2] {
            let xi = su4_sp2_circle_generator(which).unwrap();
            let norms: Vec<f64> = rep.generators.iter().map(|g| g.dot(g)).collect();
            let mut resid = xi.clone();
            for (g, n) in rep.generators.iter().zip(&norms) {
                let c = resid.dot(g) / n;
                if c != 0.0 {
                    resid -= c * g;
                }
            }
            assert!(resid.abs().max() < 1e-12, "circle {which} not in span");
        }
        assert!(su4_sp2_circle_generator(3).is_err());
    }
}
