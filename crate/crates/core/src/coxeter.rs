//! Rank-4 reflection groups as explicit orthogonal matrix groups over the
//! rationals.
//!
//! Root coordinates: D4 is `{+-e_i +- e_j}`, B4 adds `{+-e_i}`, F4 adds
//! `{(+-1, +-1, +-1, +-1) / 2}`. Groups are generated by the root
//! reflections and closed under multiplication with exact arithmetic.

use std::collections::{HashSet, VecDeque};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::Rational;

/// Exact 4x4 matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat4(pub [[Rational; 4]; 4]);

impl Mat4 {
    pub fn identity() -> Self {
        let mut m = [[Rational::zero(); 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Rational::one();
        }
        Mat4(m)
    }

    pub fn neg_identity() -> Self {
        let mut m = Self::identity();
        for row in m.0.iter_mut() {
            for x in row.iter_mut() {
                *x = -*x;
            }
        }
        m
    }

    pub fn mul(&self, other: &Mat4) -> Mat4 {
        let mut out = [[Rational::zero(); 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                let mut s = Rational::zero();
                for (l, row) in other.0.iter().enumerate() {
                    s += self.0[i][l] * row[j];
                }
                out[i][j] = s;
            }
        }
        Mat4(out)
    }

    pub fn transpose(&self) -> Mat4 {
        let mut out = [[Rational::zero(); 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                out[i][j] = self.0[j][i];
            }
        }
        Mat4(out)
    }

    pub fn is_orthogonal(&self) -> bool {
        self.mul(&self.transpose()) == Mat4::identity()
    }

    pub fn det(&self) -> Rational {
        // Laplace expansion along the first row; fine for 4x4.
        fn det3(m: &[[Rational; 3]; 3]) -> Rational {
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        }
        let mut total = Rational::zero();
        for col in 0..4 {
            let mut minor = [[Rational::zero(); 3]; 3];
            for i in 1..4 {
                let mut jj = 0;
                for j in 0..4 {
                    if j == col {
                        continue;
                    }
                    minor[i - 1][jj] = self.0[i][j];
                    jj += 1;
                }
            }
            let sign = if col % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            total += sign * self.0[0][col] * det3(&minor);
        }
        total
    }
}

/// Named rank-4 root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RootSystemName {
    D4,
    B4,
    F4,
}

impl RootSystemName {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "D4" => Ok(Self::D4),
            "B4" => Ok(Self::B4),
            "F4" => Ok(Self::F4),
            other => Err(Error::InvalidCase(format!("unknown root system {other}"))),
        }
    }
}

impl std::fmt::Display for RootSystemName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::D4 => write!(f, "D4"),
            Self::B4 => write!(f, "B4"),
            Self::F4 => write!(f, "F4"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub name: RootSystemName,
    pub roots: Vec<[Rational; 4]>,
}

impl RootSystem {
    pub fn new(name: RootSystemName) -> Self {
        let mut roots: Vec<[Rational; 4]> = Vec::new();
        let one = Rational::one();
        // +-e_i +- e_j
        for i in 0..4 {
            for j in i + 1..4 {
                for si in [one, -one] {
                    for sj in [one, -one] {
                        let mut r = [Rational::zero(); 4];
                        r[i] = si;
                        r[j] = sj;
                        roots.push(r);
                    }
                }
            }
        }
        if matches!(name, RootSystemName::B4 | RootSystemName::F4) {
            for i in 0..4 {
                for s in [one, -one] {
                    let mut r = [Rational::zero(); 4];
                    r[i] = s;
                    roots.push(r);
                }
            }
        }
        if matches!(name, RootSystemName::F4) {
            let half = Rational::new(1, 2);
            for mask in 0u32..16 {
                let mut r = [half; 4];
                for (i, x) in r.iter_mut().enumerate() {
                    if mask >> i & 1 == 1 {
                        *x = -half;
                    }
                }
                roots.push(r);
            }
        }
        roots.sort();
        Self { name, roots }
    }
}

/// Reflection in the hyperplane orthogonal to the root.
pub fn reflection(root: &[Rational; 4]) -> Mat4 {
    let norm2: Rational = root.iter().map(|&x| x * x).sum();
    let mut m = Mat4::identity();
    for i in 0..4 {
        for j in 0..4 {
            m.0[i][j] -= Rational::from_integer(2) * root[i] * root[j] / norm2;
        }
    }
    m
}

/// A finite group of exact orthogonal matrices with its generating
/// reflections, elements in lexicographic order.
#[derive(Debug, Clone)]
pub struct ReflectionGroup {
    pub generators: Vec<Mat4>,
    pub elements: Vec<Mat4>,
}

const CLOSURE_CAP: usize = 4000;

impl ReflectionGroup {
    /// Closure of the root reflections of a root system.
    pub fn generate(system: &RootSystem) -> Result<Self> {
        let mut gens: Vec<Mat4> = Vec::new();
        let mut seen = HashSet::new();
        for root in &system.roots {
            let r = reflection(root);
            if seen.insert(r) {
                gens.push(r);
            }
        }
        Self::generate_from_matrices(gens)
    }

    /// Closure of arbitrary generators under multiplication.
    pub fn generate_from_matrices(generators: Vec<Mat4>) -> Result<Self> {
        let mut elements: HashSet<Mat4> = HashSet::new();
        let mut queue = VecDeque::new();
        elements.insert(Mat4::identity());
        queue.push_back(Mat4::identity());
        while let Some(g) = queue.pop_front() {
            for gen in &generators {
                let h = g.mul(gen);
                if elements.insert(h) {
                    if elements.len() > CLOSURE_CAP {
                        return Err(Error::ClosureCap { cap: CLOSURE_CAP });
                    }
                    queue.push_back(h);
                }
            }
        }
        let mut elements: Vec<Mat4> = elements.into_iter().collect();
        elements.sort();
        Ok(Self {
            generators,
            elements,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &Mat4) -> bool {
        self.elements.binary_search(m).is_ok()
    }
}

/// Normality and index of `sub` in `sup`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtensionFacts {
    pub normal: bool,
    pub index: usize,
}

pub fn check_extension(sub: &ReflectionGroup, sup: &ReflectionGroup) -> Result<ExtensionFacts> {
    for h in &sub.elements {
        if !sup.contains(h) {
            return Err(Error::NotSubgroup(
                "element of the candidate subgroup is missing from the supergroup".into(),
            ));
        }
    }
    if sup.order() % sub.order() != 0 {
        return Err(Error::NotSubgroup("order does not divide".into()));
    }
    let normal = sup.elements.iter().all(|g| {
        let g_inv = g.transpose();
        sub.generators
            .iter()
            .all(|h| sub.contains(&g.mul(h).mul(&g_inv)))
    });
    Ok(ExtensionFacts {
        normal,
        index: sup.order() / sub.order(),
    })
}

/// Absolute irreducibility via the commutant: the group acts irreducibly
/// exactly when the only matrices commuting with every generator are the
/// scalars.
pub fn is_irreducible(group: &ReflectionGroup) -> bool {
    commutant_dim(group) == 1
}

fn commutant_dim(group: &ReflectionGroup) -> usize {
    // Unknown X (16 entries); constraints G X - X G = 0 per generator.
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for g in &group.generators {
        for i in 0..4 {
            for j in 0..4 {
                let mut row = vec![Rational::zero(); 16];
                for l in 0..4 {
                    // (G X)_{ij} takes X_{lj} with weight G_{il};
                    // (X G)_{ij} takes X_{il} with weight G_{lj}.
                    row[4 * l + j] += g.0[i][l];
                    row[4 * i + l] -= g.0[l][j];
                }
                rows.push(row);
            }
        }
    }
    let rank = crate::boundary::rational_row_reduce(&mut rows);
    16 - rank
}

pub fn contains_minus_identity(group: &ReflectionGroup) -> bool {
    group.contains(&Mat4::neg_identity())
}

/// Order and commutativity of the quotient by a normal subgroup, computed
/// on coset representatives.
pub fn quotient_facts(sub: &ReflectionGroup, sup: &ReflectionGroup) -> Result<(usize, bool)> {
    let ext = check_extension(sub, sup)?;
    if !ext.normal {
        return Err(Error::NotSubgroup("subgroup is not normal".into()));
    }
    // Coset representatives.
    let mut reps: Vec<Mat4> = Vec::new();
    'outer: for g in &sup.elements {
        for r in &reps {
            if sub.contains(&r.transpose().mul(g)) {
                continue 'outer;
            }
        }
        reps.push(*g);
    }
    let same_coset = |x: &Mat4, y: &Mat4| sub.contains(&x.transpose().mul(y));
    let mut abelian = true;
    'pairs: for (i, x) in reps.iter().enumerate() {
        for y in reps.iter().skip(i + 1) {
            if !same_coset(&x.mul(y), &y.mul(x)) {
                abelian = false;
                break 'pairs;
            }
        }
    }
    Ok((reps.len(), abelian))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        assert_eq!(RootSystem::new(RootSystemName::D4).roots.len(), 24);
        assert_eq!(RootSystem::new(RootSystemName::B4).roots.len(), 32);
        assert_eq!(RootSystem::new(RootSystemName::F4).roots.len(), 48);
    }

    #[test]
    fn group_orders() {
        let d4 = ReflectionGroup::generate(&RootSystem::new(RootSystemName::D4)).unwrap();
        assert_eq!(d4.order(), 192);
        let b4 = ReflectionGroup::generate(&RootSystem::new(RootSystemName::B4)).unwrap();
        assert_eq!(b4.order(), 384);
        let f4 = ReflectionGroup::generate(&RootSystem::new(RootSystemName::F4)).unwrap();
        assert_eq!(f4.order(), 1152);
    }

    #[test]
    fn generators_are_involutions_fixing_hyperplanes() {
        for name in [RootSystemName::D4, RootSystemName::B4, RootSystemName::F4] {
            let g = ReflectionGroup::generate(&RootSystem::new(name)).unwrap();
            for r in &g.generators {
                assert_eq!(r.mul(r), Mat4::identity());
                assert_eq!(r.det(), -Rational::one());
            }
        }
    }

    #[test]
    fn elements_orthogonal_det_pm_one() {
        let f4 = ReflectionGroup::generate(&RootSystem::new(RootSystemName::F4)).unwrap();
        for m in &f4.elements {
            assert!(m.is_orthogonal());
            let d = m.det();
            assert!(d == Rational::one() || d == -Rational::one());
        }
    }

    #[test]
    fn extensions() {
        let d4 = ReflectionGroup::generate(&RootSystem::new(RootSystemName::D4)).unwrap();
        let b4 = ReflectionGroup::generate(&RootSystem::new(RootSystemName::B4)).unwrap();
        let f4 = ReflectionGroup::generate(&RootSystem::new(RootSystemName::F4)).unwrap();
        assert_eq!(
            check_extension(&d4, &b4).unwrap(),
            ExtensionFacts {
                normal: true,
                index: 2
            }
        );
        assert_eq!(
            check_extension(&d4, &f4).unwrap(),
            ExtensionFacts {
                normal: true,
                index: 6
            }
        );
        assert_eq!(
            check_extension(&d4, &d4).unwrap(),
            ExtensionFacts {
                normal: true,
                index: 1
            }
        );
        assert!(check_extension(&f4, &b4).is_err());
    }

    #[test]
    fn quotient_f4_by_d4_nonabelian_order_six() {
        let d4 = ReflectionGroup::generate(&RootSystem::new(RootSystemName::D4)).unwrap();
        let f4 = ReflectionGroup::generate(&RootSystem::new(RootSystemName::F4)).unwrap();
        let (order, abelian) = quotient_facts(&d4, &f4).unwrap();
        assert_eq!(order, 6);
        assert!(!abelian);
    }

    #[test]
    fn irreducibility() {
        let b4 = ReflectionGroup::generate(&RootSystem::new(RootSystemName::B4)).unwrap();
        let f4 = ReflectionGroup::generate(&RootSystem::new(RootSystemName::F4)).unwrap();
        assert!(is_irreducible(&b4));
        assert!(is_irreducible(&f4));

        let scalars =
            ReflectionGroup::generate_from_matrices(vec![Mat4::neg_identity()]).unwrap();
        assert_eq!(scalars.order(), 2);
        assert!(!is_irreducible(&scalars));
    }

    #[test]
    fn minus_identity_membership() {
        let d4 = ReflectionGroup::generate(&RootSystem::new(RootSystemName::D4)).unwrap();
        let b4 = ReflectionGroup::generate(&RootSystem::new(RootSystemName::B4)).unwrap();
        assert!(contains_minus_identity(&d4));
        assert!(contains_minus_identity(&b4));

        let mut root = [Rational::zero(); 4];
        root[0] = Rational::one();
        let single = ReflectionGroup::generate_from_matrices(vec![reflection(&root)]).unwrap();
        assert_eq!(single.order(), 2);
        assert!(!contains_minus_identity(&single));
    }
}
