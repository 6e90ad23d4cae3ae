//! Seeded numerical rank computations over the matrix models.
//!
//! Every rank decision must exhibit a singular-value gap of at least 10^3
//! between the smallest accepted and largest rejected value; anything less
//! is reported as instability instead of a certificate.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::cert::{json_map, CaseCertificate, Verdict};
use crate::error::{Error, Result};

use super::{MatrixRep, NumericCertificate, RepName};

pub const DEFAULT_TRIALS: u32 = 3;
pub const DEFAULT_TOL: f64 = 1e-8;
pub const DEFAULT_SEED: u64 = 1;
const GAP_MIN: f64 = 1e3;
const POLAR_FALSE_MIN: f64 = 1e-2;

/// Numerical rank with the gap guard. Returns (rank, gap).
pub fn numerical_rank(m: &DMatrix<f64>, tol: f64) -> Result<(usize, f64)> {
    let mut sv: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.partial_cmp(a).expect("singular values are finite"));
    if sv.is_empty() || sv[0] == 0.0 {
        return Ok((0, f64::INFINITY));
    }
    let cutoff = tol * sv[0];
    let rank = sv.iter().filter(|&&s| s >= cutoff).count();
    let gap = if rank == sv.len() || sv[rank] == 0.0 {
        f64::INFINITY
    } else {
        sv[rank - 1] / sv[rank]
    };
    if gap < GAP_MIN {
        return Err(Error::RankInstability(format!(
            "singular values straddle the cutoff: gap {gap:.3e} < {GAP_MIN:.0e}"
        )));
    }
    Ok((rank, gap))
}

/// Seeded unit vector: coordinates uniform in [-1, 1], normalized.
fn unit_random_vector(dim: usize, rng: &mut ChaCha8Rng) -> DVector<f64> {
    loop {
        let v = DVector::from_fn(dim, |_, _| rng.gen_range(-1.0..1.0));
        let norm = v.norm();
        if norm > 1e-3 {
            return v / norm;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointClass {
    Generic,
    PureTensor,
}

impl PointClass {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "generic" => Ok(Self::Generic),
            "pure-tensor" | "pure_tensor" => Ok(Self::PureTensor),
            other => Err(Error::InvalidCase(format!("unknown point class {other}"))),
        }
    }

    fn as_str(&self) -> &'static str {
        match self {
            Self::Generic => "generic",
            Self::PureTensor => "pure-tensor",
        }
    }
}

fn sample_point(rep: &MatrixRep, class: PointClass, rng: &mut ChaCha8Rng) -> Result<DVector<f64>> {
    match class {
        PointClass::Generic => Ok(unit_random_vector(rep.dim_space, rng)),
        PointClass::PureTensor => {
            let (p, q) = rep.tensor_shape.ok_or_else(|| {
                Error::InvalidCase(format!("{}: no real tensor shape for pure tensors", rep.name))
            })?;
            let v = unit_random_vector(p, rng);
            let w = unit_random_vector(q, rng);
            let mut out = DVector::zeros(p * q);
            for i in 0..p {
                for j in 0..q {
                    out[i * q + j] = v[i] * w[j];
                }
            }
            Ok(out)
        }
    }
}

/// Columns are `X_i p`: the differential of the orbit map at `p`.
fn evaluation_matrix(rep: &MatrixRep, p: &DVector<f64>) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(rep.dim_space, rep.dim_algebra);
    for (j, g) in rep.generators.iter().enumerate() {
        m.set_column(j, &(g * p));
    }
    m
}

fn stable_value<F>(trials: u32, mut one_trial: F) -> Result<i64>
where
    F: FnMut(u32) -> Result<i64>,
{
    if trials < 3 {
        return Err(Error::InvalidCase("need at least 3 trials".into()));
    }
    let mut value = None;
    for t in 0..trials {
        let v = one_trial(t)?;
        match value {
            None => value = Some(v),
            Some(prev) if prev != v => {
                return Err(Error::RankInstability(format!(
                    "trial {t} produced {v}, earlier trials produced {prev}"
                )))
            }
            _ => {}
        }
    }
    Ok(value.expect("at least one trial"))
}

/// Cohomogeneity: space dimension minus the maximal orbit dimension over
/// random points.
pub fn cohomogeneity(rep: &MatrixRep, trials: u32, tol: f64, seed: u64) -> Result<NumericCertificate> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let value = stable_value(trials, |_| {
        let p = sample_point(rep, PointClass::Generic, &mut rng)?;
        let (rank, _) = numerical_rank(&evaluation_matrix(rep, &p), tol)?;
        Ok(rep.dim_space as i64 - rank as i64)
    })?;
    Ok(NumericCertificate {
        name: rep.name.to_string(),
        quantity: "cohomogeneity".into(),
        value,
        trials,
        tolerance: tol,
        seed,
    })
}

/// Isotropy algebra dimension at points of a class.
pub fn isotropy_dim(
    rep: &MatrixRep,
    class: PointClass,
    trials: u32,
    tol: f64,
    seed: u64,
) -> Result<NumericCertificate> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let value = stable_value(trials, |_| {
        let p = sample_point(rep, class, &mut rng)?;
        let (rank, _) = numerical_rank(&evaluation_matrix(rep, &p), tol)?;
        Ok(rep.dim_algebra as i64 - rank as i64)
    })?;
    Ok(NumericCertificate {
        name: rep.name.to_string(),
        quantity: format!("isotropy-dim:{}", class.as_str()),
        value,
        trials,
        tolerance: tol,
        seed,
    })
}

/// Orthonormal basis of the kernel of a square symmetric positive
/// semidefinite matrix whose rank is already known.
fn gram_kernel_basis(gram: &DMatrix<f64>, rank: usize) -> DMatrix<f64> {
    let n = gram.nrows();
    let svd = gram.clone().svd(true, false);
    let u = svd.u.expect("left singular vectors requested");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| {
        svd.singular_values[b]
            .partial_cmp(&svd.singular_values[a])
            .expect("finite")
    });
    let mut kernel = DMatrix::zeros(n, n - rank);
    for (col, &j) in order.iter().skip(rank).enumerate() {
        kernel.set_column(col, &u.column(j));
    }
    kernel
}

/// Orthonormal basis of the normal space to the orbit at `p`: the kernel of
/// the Gram matrix of the tangent directions.
fn normal_space(rep: &MatrixRep, p: &DVector<f64>, tol: f64) -> Result<DMatrix<f64>> {
    let ev = evaluation_matrix(rep, p);
    let (rank, _) = numerical_rank(&ev, tol)?;
    let gram = &ev * ev.transpose();
    Ok(gram_kernel_basis(&gram, rank))
}

/// Polarity test: at a generic point, take the normal space to the orbit
/// and measure how far the algebra moves it off itself. Polar means below
/// tolerance; decisively non-polar means above 10^-2.
pub fn polar_test(rep: &MatrixRep, trials: u32, tol: f64, seed: u64) -> Result<NumericCertificate> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let value = stable_value(trials, |_| {
        let p = sample_point(rep, PointClass::Generic, &mut rng)?;
        let normal = normal_space(rep, &p, tol)?;
        let mut residual: f64 = 0.0;
        for g in &rep.generators {
            let moved = g * &normal;
            let overlap = normal.transpose() * moved;
            residual = residual.max(overlap.abs().max() / g.norm());
        }
        if residual < tol {
            Ok(1)
        } else if residual > POLAR_FALSE_MIN {
            Ok(0)
        } else {
            Err(Error::RankInstability(format!(
                "polarity residual {residual:.3e} between decision thresholds"
            )))
        }
    })?;
    Ok(NumericCertificate {
        name: rep.name.to_string(),
        quantity: "polar".into(),
        value,
        trials,
        tolerance: tol,
        seed,
    })
}

/// Dimension of the common kernel of a set of action matrices.
pub fn fixed_subspace_dim(rep: &MatrixRep, subalgebra: &[DMatrix<f64>], tol: f64) -> Result<usize> {
    if subalgebra.is_empty() {
        return Ok(rep.dim_space);
    }
    let rows: usize = subalgebra.len() * rep.dim_space;
    let mut stacked = DMatrix::zeros(rows, rep.dim_space);
    for (i, m) in subalgebra.iter().enumerate() {
        stacked
            .view_mut((i * rep.dim_space, 0), (rep.dim_space, rep.dim_space))
            .copy_from(m);
    }
    let (rank, _) = numerical_rank(&stacked, tol)?;
    Ok(rep.dim_space - rank)
}

/// Action matrices of the named principal isotropy subalgebra.
pub fn principal_isotropy_subalgebra(rep: &MatrixRep) -> Result<Vec<DMatrix<f64>>> {
    let block = rep.principal_isotropy_block.as_ref().ok_or_else(|| {
        Error::NotApplicable(format!("{}: no closed-form principal isotropy block", rep.name))
    })?;
    Ok(block.iter().map(|&i| rep.generators[i].clone()).collect())
}

/// Basis (as action matrices) of the isotropy algebra at a sampled generic
/// point: combinations of generators given by the kernel of the evaluation
/// matrix.
pub fn isotropy_algebra(
    rep: &MatrixRep,
    tol: f64,
    seed: u64,
) -> Result<Vec<DMatrix<f64>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = sample_point(rep, PointClass::Generic, &mut rng)?;
    let ev = evaluation_matrix(rep, &p);
    let (rank, _) = numerical_rank(&ev, tol)?;
    let gram = ev.transpose() * &ev;
    let kernel = gram_kernel_basis(&gram, rank);
    let mut out = Vec::new();
    for j in 0..kernel.ncols() {
        let coeffs = kernel.column(j);
        let mut m = DMatrix::zeros(rep.dim_space, rep.dim_space);
        for (i, g) in rep.generators.iter().enumerate() {
            m += coeffs[i] * g;
        }
        out.push(m);
    }
    Ok(out)
}

/// Fixed-space dimension of the computed generic isotropy algebra, minus
/// the cohomogeneity. For the quotient structure under verification this
/// equals 9.
pub fn reduction_dimension_check(
    rep: &MatrixRep,
    trials: u32,
    tol: f64,
    seed: u64,
) -> Result<NumericCertificate> {
    if rep.name == RepName::Sp3Lambda3 {
        return Err(Error::NotApplicable(
            "sp3_lambda3 has finite principal isotropy; its fixed space is invisible \
             at the Lie algebra level"
                .into(),
        ));
    }
    let cohom = cohomogeneity(rep, trials, tol, seed)?.value;
    let value = stable_value(trials, |t| {
        let algebra = isotropy_algebra(rep, tol, seed.wrapping_add(t as u64))?;
        if algebra.is_empty() {
            return Err(Error::NotApplicable(format!(
                "{}: principal isotropy is finite; its fixed space is invisible at \
                 the Lie algebra level",
                rep.name
            )));
        }
        let fixed = fixed_subspace_dim(rep, &algebra, tol)?;
        Ok(fixed as i64 - cohom)
    })?;
    Ok(NumericCertificate {
        name: rep.name.to_string(),
        quantity: "reduction-dimension".into(),
        value,
        trials,
        tolerance: tol,
        seed,
    })
}

/// Fixed-space dimension of the computed generic isotropy algebra itself,
/// as a certificate.
pub fn isotropy_fixed_space(
    rep: &MatrixRep,
    trials: u32,
    tol: f64,
    seed: u64,
) -> Result<NumericCertificate> {
    let value = stable_value(trials, |t| {
        let algebra = isotropy_algebra(rep, tol, seed.wrapping_add(t as u64))?;
        Ok(fixed_subspace_dim(rep, &algebra, tol)? as i64)
    })?;
    Ok(NumericCertificate {
        name: rep.name.to_string(),
        quantity: "fixed-subspace:isotropy-algebra".into(),
        value,
        trials,
        tolerance: tol,
        seed,
    })
}

/// Fixed-space dimension of the named principal isotropy block.
pub fn principal_fixed_space(rep: &MatrixRep, tol: f64) -> Result<NumericCertificate> {
    let sub = principal_isotropy_subalgebra(rep)?;
    let value = fixed_subspace_dim(rep, &sub, tol)? as i64;
    Ok(NumericCertificate {
        name: rep.name.to_string(),
        quantity: "fixed-subspace:principal-isotropy".into(),
        value,
        trials: 1,
        tolerance: tol,
        seed: 0,
    })
}

/// Analysis of one circle subgroup of `SU(4) x Sp(2)`: fixed-space
/// dimension, centralizer dimension, the dimension-formula balance for each
/// admissible sphere dimension, and the generic isotropy dimension along
/// the fixed subspace.
pub fn circle_boundary_witness(
    rep: &MatrixRep,
    which: usize,
    tol: f64,
    seed: u64,
) -> Result<CaseCertificate> {
    let generator = super::build::su4_sp2_circle_generator(which)?;
    circle_witness_for_generator(rep, &format!("circle={which}"), &generator, tol, seed)
}

/// Same computation for an arbitrary algebra element.
pub fn circle_witness_for_generator(
    rep: &MatrixRep,
    label: &str,
    generator: &DMatrix<f64>,
    tol: f64,
    seed: u64,
) -> Result<CaseCertificate> {
    if generator.abs().max() == 0.0 {
        return Err(Error::InvalidDirection(
            "zero generator does not span a circle".into(),
        ));
    }
    // Membership in the algebra span.
    let norms: Vec<f64> = rep.generators.iter().map(|g| g.dot(g)).collect();
    let mut resid = generator.clone();
    for (g, n) in rep.generators.iter().zip(&norms) {
        let c = resid.dot(g) / n;
        if c != 0.0 {
            resid -= c * g;
        }
    }
    if resid.abs().max() > 1e-9 {
        return Err(Error::InvalidCase(
            "generator is not in the span of the algebra".into(),
        ));
    }

    let (gen_rank, _) = numerical_rank(generator, tol)?;
    let f = rep.dim_space - gen_rank;

    // Centralizer: kernel of ad(generator) on the algebra, in generator
    // coordinates.
    let mut ad = DMatrix::zeros(rep.dim_algebra, rep.dim_algebra);
    for (j, g) in rep.generators.iter().enumerate() {
        let bracket = generator * g - g * generator;
        for (i, basis) in rep.generators.iter().enumerate() {
            ad[(i, j)] = bracket.dot(basis) / norms[i];
        }
    }
    let (ad_rank, _) = numerical_rank(&ad, tol)?;
    let m = rep.dim_algebra - ad_rank;

    let dim_v = rep.dim_space as i64;
    let dim_g = rep.dim_algebra as i64;
    let mut balances = std::collections::BTreeMap::new();
    for ell in [0i64, 1, 3] {
        balances.insert(
            format!("ell={ell}"),
            json!(dim_v - 1 - ell == dim_g - m as i64 + f as i64),
        );
    }

    // Generic isotropy dimension along the fixed subspace.
    let svd = generator.clone().svd(false, true);
    let vt = svd.v_t.expect("right singular vectors requested");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| {
        svd.singular_values[b]
            .partial_cmp(&svd.singular_values[a])
            .expect("finite")
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut point = DVector::zeros(rep.dim_space);
    for &j in order.iter().skip(gen_rank) {
        point += rng.gen_range(-1.0..1.0f64) * vt.row(j).transpose();
    }
    let point = &point / point.norm();
    let (rank_at_point, _) = numerical_rank(&evaluation_matrix(rep, &point), tol)?;
    let fixed_set_isotropy = rep.dim_algebra - rank_at_point;

    let mut computed = json_map([
        ("fixed_dim_f", json!(f)),
        ("centralizer_dim_m", json!(m)),
        ("fixed_set_generic_isotropy_dim", json!(fixed_set_isotropy)),
    ]);
    computed.extend(balances.clone());

    let steps = vec![
        format!("kernel of the circle generator action has dimension f = {f}"),
        format!("kernel of ad(generator) on the algebra has dimension m = {m}"),
        format!(
            "dimension-formula balance dim V - 1 - ell = dim G - m + f: {}",
            balances
                .iter()
                .map(|(k, v)| format!("{k}: {v}"))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        format!(
            "a generic point of the fixed subspace has isotropy dimension {fixed_set_isotropy}"
        ),
        "the target orbit space has no codimension-two strata along its boundary, so \
         a candidate whose boundary components meet in codimension two is excluded ([GL])"
            .into(),
    ];
    Ok(crate::boundary::trace_certificate(
        format!("rep-circle/{}/{label}", rep.name),
        json_map([
            ("rep", json!(rep.name.to_string())),
            ("circle", json!(label)),
            ("trials", json!(1)),
            ("tolerance", json!(tol)),
            ("seed", json!(seed)),
        ]),
        computed,
        Verdict::Eliminated,
        steps,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{build, RepName};

    #[test]
    fn rank_gap_guard() {
        let mut m = DMatrix::<f64>::identity(4, 4);
        m[(3, 3)] = 1e-12;
        // Clean separation: rejected value is far below the accepted ones.
        let (rank, gap) = numerical_rank(&m, 1e-8).unwrap();
        assert_eq!(rank, 3);
        assert!(gap >= 1e3);
        // Accepted and rejected values too close together: unstable.
        m[(2, 2)] = 3e-8;
        m[(3, 3)] = 1e-9;
        assert!(numerical_rank(&m, 1e-8).is_err());
    }

    #[test]
    fn cohomogeneity_small_cases() {
        let rep = build(RepName::So4So3).unwrap();
        let cert = cohomogeneity(&rep, 3, DEFAULT_TOL, 1).unwrap();
        assert_eq!(cert.value, 3);
        let rep = build(RepName::So4So4).unwrap();
        let cert = cohomogeneity(&rep, 3, DEFAULT_TOL, 1).unwrap();
        assert_eq!(cert.value, 4);
    }

    #[test]
    fn polar_small_cases() {
        let rep = build(RepName::So4So3).unwrap();
        assert_eq!(polar_test(&rep, 3, DEFAULT_TOL, 1).unwrap().value, 1);
        let rep = build(RepName::Sp1CubedTensor).unwrap();
        assert_eq!(polar_test(&rep, 3, DEFAULT_TOL, 1).unwrap().value, 0);
    }

    #[test]
    fn trivial_fixed_space() {
        let rep = build(RepName::So4So3).unwrap();
        assert_eq!(fixed_subspace_dim(&rep, &[], DEFAULT_TOL).unwrap(), 12);
    }
}
