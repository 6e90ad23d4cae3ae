//! Explicit real matrix models of the concrete representations, with
//! numerical certificates for cohomogeneity, polarity, isotropy dimensions
//! and fixed subspaces.
//!
//! Generator matrices are exact (entries in half-integers); floating point
//! enters only through rank and kernel decisions, which are guarded by a
//! singular-value gap requirement.

pub mod build;
pub mod clifford;
pub mod cmat;
pub mod numeric;
pub mod quaternion;
pub mod wedge;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Names of the constructible representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepName {
    /// `SO(n) x Sp(1)` on `R^n (x) H`, `n >= 5`.
    SoNSp1(u32),
    /// `Sp(3)` on the symplectic complement of `C^6` in `Lambda^3 C^6`.
    Sp3Lambda3,
    /// `SU(6)` on `Lambda^3 C^6`.
    Su6Lambda3,
    /// `Spin(12)` on a half-spin space `C^32`.
    Spin12HalfSpin,
    /// `SU(4) x Sp(2)` on `C^4 (x) H^2`.
    Su4Sp2,
    /// `Spin(7) x U(2)` on `R^8 (x) C^2`.
    Spin7U2,
    /// `SO(4) x SO(3)` on `R^4 (x) R^3`.
    So4So3,
    /// `SO(4) x SO(4)` on `R^4 (x) R^4`.
    So4So4,
    /// `Sp(1)^3` on the real 16-dimensional model of the triple tensor.
    Sp1CubedTensor,
}

impl RepName {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "sp3_lambda3" => return Ok(Self::Sp3Lambda3),
            "su6_lambda3" => return Ok(Self::Su6Lambda3),
            "spin12_halfspin" => return Ok(Self::Spin12HalfSpin),
            "su4_sp2" => return Ok(Self::Su4Sp2),
            "spin7_u2" => return Ok(Self::Spin7U2),
            "so4_so3" => return Ok(Self::So4So3),
            "so4_so4" => return Ok(Self::So4So4),
            "sp1cubed_tensor" => return Ok(Self::Sp1CubedTensor),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("so") {
            if let Some(n) = rest.strip_suffix("_sp1") {
                if let Ok(n) = n.parse::<u32>() {
                    if n >= 5 {
                        return Ok(Self::SoNSp1(n));
                    }
                    return Err(Error::UnknownRep(format!("{s}: need n >= 5")));
                }
            }
        }
        Err(Error::UnknownRep(s.to_string()))
    }
}

impl std::fmt::Display for RepName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::SoNSp1(n) => write!(f, "so{n}_sp1"),
            Self::Sp3Lambda3 => write!(f, "sp3_lambda3"),
            Self::Su6Lambda3 => write!(f, "su6_lambda3"),
            Self::Spin12HalfSpin => write!(f, "spin12_halfspin"),
            Self::Su4Sp2 => write!(f, "su4_sp2"),
            Self::Spin7U2 => write!(f, "spin7_u2"),
            Self::So4So3 => write!(f, "so4_so3"),
            Self::So4So4 => write!(f, "so4_so4"),
            Self::Sp1CubedTensor => write!(f, "sp1cubed_tensor"),
        }
    }
}

/// A Lie algebra of real antisymmetric matrices acting on `R^dim_space`.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    pub name: RepName,
    pub dim_space: usize,
    pub dim_algebra: usize,
    pub generators: Vec<DMatrix<f64>>,
    /// Real tensor factorization for pure-tensor sampling, when meaningful.
    pub tensor_shape: Option<(usize, usize)>,
    /// Generator indices spanning the named principal isotropy subalgebra,
    /// when one is known in closed form.
    pub principal_isotropy_block: Option<Vec<usize>>,
}

const CLOSURE_RESIDUAL_MAX: f64 = 1e-10;

impl MatrixRep {
    /// Antisymmetry, basis orthogonality, and bracket closure checks.
    fn verify(&self) -> Result<()> {
        if self.generators.len() != self.dim_algebra {
            return Err(Error::InvalidCase(format!(
                "{}: expected {} generators, built {}",
                self.name,
                self.dim_algebra,
                self.generators.len()
            )));
        }
        for (i, g) in self.generators.iter().enumerate() {
            if (g + g.transpose()).abs().max() != 0.0 {
                return Err(Error::InvalidCase(format!(
                    "{}: generator {i} is not exactly antisymmetric",
                    self.name
                )));
            }
        }
        let norms: Vec<f64> = self.generators.iter().map(|g| g.dot(g)).collect();
        for (i, gi) in self.generators.iter().enumerate() {
            if norms[i] == 0.0 {
                return Err(Error::InvalidCase(format!(
                    "{}: generator {i} is zero",
                    self.name
                )));
            }
            for (j, gj) in self.generators.iter().enumerate().skip(i + 1) {
                if gi.dot(gj).abs() > 1e-9 {
                    return Err(Error::InvalidCase(format!(
                        "{}: generators {i} and {j} are not Frobenius-orthogonal",
                        self.name
                    )));
                }
            }
        }
        let mut worst: f64 = 0.0;
        for (i, gi) in self.generators.iter().enumerate() {
            for gj in self.generators.iter().skip(i + 1) {
                let mut comm = gi * gj - gj * gi;
                for (l, gl) in self.generators.iter().enumerate() {
                    let coeff = comm.dot(gl) / norms[l];
                    if coeff != 0.0 {
                        comm -= coeff * gl;
                    }
                }
                worst = worst.max(comm.abs().max());
            }
        }
        if worst > CLOSURE_RESIDUAL_MAX {
            return Err(Error::ClosureCheck { residual: worst });
        }
        Ok(())
    }
}

/// Builds and verifies the named representation.
pub fn build(name: RepName) -> Result<MatrixRep> {
    let rep = match name {
        RepName::SoNSp1(n) => build::so_n_sp1(n)?,
        RepName::Sp3Lambda3 => build::sp3_lambda3(),
        RepName::Su6Lambda3 => build::su6_lambda3(),
        RepName::Spin12HalfSpin => build::spin12_halfspin(),
        RepName::Su4Sp2 => build::su4_sp2(),
        RepName::Spin7U2 => build::spin7_u2(),
        RepName::So4So3 => build::tensor_so_so(4, 3),
        RepName::So4So4 => build::tensor_so_so(4, 4),
        RepName::Sp1CubedTensor => build::sp1cubed_tensor(),
    };
    rep.verify()?;
    Ok(rep)
}

/// One numerically certified integer quantity of a representation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericCertificate {
    pub name: String,
    pub quantity: String,
    pub value: i64,
    pub trials: u32,
    pub tolerance: f64,
    pub seed: u64,
}
