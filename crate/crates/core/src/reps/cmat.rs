//! Small complex-matrix helper over pairs of real matrices.
//!
//! All constructions stay inside half-integer entries, so the `f64`
//! arithmetic here is exact.

use nalgebra::DMatrix;

#[derive(Debug, Clone, PartialEq)]
pub struct CMat {
    pub re: DMatrix<f64>,
    pub im: DMatrix<f64>,
}

impl CMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            re: DMatrix::zeros(rows, cols),
            im: DMatrix::zeros(rows, cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            re: DMatrix::identity(n, n),
            im: DMatrix::zeros(n, n),
        }
    }

    pub fn from_real(re: DMatrix<f64>) -> Self {
        let im = DMatrix::zeros(re.nrows(), re.ncols());
        Self { re, im }
    }

    pub fn nrows(&self) -> usize {
        self.re.nrows()
    }

    pub fn ncols(&self) -> usize {
        self.re.ncols()
    }

    pub fn set(&mut self, i: usize, j: usize, re: f64, im: f64) {
        self.re[(i, j)] = re;
        self.im[(i, j)] = im;
    }

    pub fn add_entry(&mut self, i: usize, j: usize, re: f64, im: f64) {
        self.re[(i, j)] += re;
        self.im[(i, j)] += im;
    }

    pub fn mul(&self, other: &CMat) -> CMat {
        CMat {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    pub fn add(&self, other: &CMat) -> CMat {
        CMat {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }

    pub fn sub(&self, other: &CMat) -> CMat {
        CMat {
            re: &self.re - &other.re,
            im: &self.im - &other.im,
        }
    }

    pub fn scale(&self, re: f64, im: f64) -> CMat {
        CMat {
            re: re * &self.re - im * &self.im,
            im: re * &self.im + im * &self.re,
        }
    }

    pub fn adjoint(&self) -> CMat {
        CMat {
            re: self.re.transpose(),
            im: -self.im.transpose(),
        }
    }

    pub fn kron(&self, other: &CMat) -> CMat {
        CMat {
            re: self.re.kronecker(&other.re) - self.im.kronecker(&other.im),
            im: self.re.kronecker(&other.im) + self.im.kronecker(&other.re),
        }
    }

    pub fn commutator(&self, other: &CMat) -> CMat {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn is_anti_hermitian(&self) -> bool {
        (&self.re + self.re.transpose()).abs().max() == 0.0
            && (&self.im - self.im.transpose()).abs().max() == 0.0
    }

    pub fn max_abs(&self) -> f64 {
        self.re.abs().max().max(self.im.abs().max())
    }

    /// Real trace ignoring the imaginary part (which is zero for the
    /// anti-Hermitian matrices used here only on the diagonal... callers
    /// needing the full complex trace use `trace_complex`).
    pub fn trace_complex(&self) -> (f64, f64) {
        (self.re.trace(), self.im.trace())
    }

    /// Realification: `z = x + iy -> (x, y)`, `M = A + iB -> [[A, -B], [B, A]]`.
    /// Anti-Hermitian complex matrices become antisymmetric real matrices.
    pub fn realify(&self) -> DMatrix<f64> {
        let n = self.nrows();
        let m = self.ncols();
        let mut out = DMatrix::zeros(2 * n, 2 * m);
        out.view_mut((0, 0), (n, m)).copy_from(&self.re);
        out.view_mut((0, m), (n, m)).copy_from(&(-&self.im));
        out.view_mut((n, 0), (n, m)).copy_from(&self.im);
        out.view_mut((n, m), (n, m)).copy_from(&self.re);
        out
    }

    /// Elementary matrix with a single 1.
    pub fn elementary(n: usize, i: usize, j: usize) -> CMat {
        let mut m = CMat::zeros(n, n);
        m.set(i, j, 1.0, 0.0);
        m
    }
}

/// Basis of `su(n)`: antisymmetric pairs, symmetric imaginary pairs, and
/// traceless imaginary diagonals `i diag(1, ..., 1, -t, 0, ..., 0)`. The
/// diagonal family keeps the whole basis Frobenius-orthogonal.
pub fn su_basis(n: usize) -> Vec<CMat> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let mut x = CMat::zeros(n, n);
            x.set(a, b, 1.0, 0.0);
            x.set(b, a, -1.0, 0.0);
            out.push(x);
            let mut y = CMat::zeros(n, n);
            y.set(a, b, 0.0, 1.0);
            y.set(b, a, 0.0, 1.0);
            out.push(y);
        }
    }
    for t in 1..n {
        let mut d = CMat::zeros(n, n);
        for s in 0..t {
            d.set(s, s, 0.0, 1.0);
        }
        d.set(t, t, 0.0, -(t as f64));
        out.push(d);
    }
    out
}

/// Basis of the compact symplectic algebra `sp(n)` inside `u(2n)` for the
/// block pairing `omega(e_t, e_{t+n}) = 1`: matrices `[[A, B], [-conj(B), conj(A)]]`
/// with `A` in `u(n)` and `B` complex symmetric.
pub fn sp_basis(n: usize) -> Vec<CMat> {
    let mut out = Vec::new();
    // A-part: u(n).
    for a in 0..n {
        for b in a + 1..n {
            let mut x = CMat::zeros(2 * n, 2 * n);
            x.set(a, b, 1.0, 0.0);
            x.set(b, a, -1.0, 0.0);
            x.set(a + n, b + n, 1.0, 0.0);
            x.set(b + n, a + n, -1.0, 0.0);
            out.push(x);
            let mut y = CMat::zeros(2 * n, 2 * n);
            y.set(a, b, 0.0, 1.0);
            y.set(b, a, 0.0, 1.0);
            y.set(a + n, b + n, 0.0, -1.0);
            y.set(b + n, a + n, 0.0, -1.0);
            out.push(y);
        }
    }
    for a in 0..n {
        let mut d = CMat::zeros(2 * n, 2 * n);
        d.set(a, a, 0.0, 1.0);
        d.set(a + n, a + n, 0.0, -1.0);
        out.push(d);
    }
    // B-part: complex symmetric.
    for a in 0..n {
        for b in a..n {
            let mut x = CMat::zeros(2 * n, 2 * n);
            x.add_entry(a, b + n, 1.0, 0.0);
            x.add_entry(b, a + n, 1.0, 0.0);
            x.add_entry(a + n, b, -1.0, 0.0);
            x.add_entry(b + n, a, -1.0, 0.0);
            out.push(x);
            let mut y = CMat::zeros(2 * n, 2 * n);
            y.add_entry(a, b + n, 0.0, 1.0);
            y.add_entry(b, a + n, 0.0, 1.0);
            y.add_entry(a + n, b, 0.0, 1.0);
            y.add_entry(b + n, a, 0.0, 1.0);
            out.push(y);
        }
    }
    out
}

/// Pauli matrices and the 2x2 identity.
pub fn sigma1() -> CMat {
    let mut m = CMat::zeros(2, 2);
    m.set(0, 1, 1.0, 0.0);
    m.set(1, 0, 1.0, 0.0);
    m
}

pub fn sigma2() -> CMat {
    let mut m = CMat::zeros(2, 2);
    m.set(0, 1, 0.0, -1.0);
    m.set(1, 0, 0.0, 1.0);
    m
}

pub fn sigma3() -> CMat {
    let mut m = CMat::zeros(2, 2);
    m.set(0, 0, 1.0, 0.0);
    m.set(1, 1, -1.0, 0.0);
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su_basis_is_anti_hermitian_and_traceless() {
        for x in su_basis(4) {
            assert!(x.is_anti_hermitian());
            let (tr_re, tr_im) = x.trace_complex();
            assert_eq!((tr_re, tr_im), (0.0, 0.0));
        }
        assert_eq!(su_basis(4).len(), 15);
        assert_eq!(su_basis(6).len(), 35);
    }

    #[test]
    fn sp_basis_respects_the_symplectic_form() {
        // X^T Omega + Omega X = 0 with Omega = [[0, I], [-I, 0]].
        for n in [2usize, 3] {
            let basis = sp_basis(n);
            assert_eq!(basis.len(), n * (2 * n + 1));
            let mut omega = CMat::zeros(2 * n, 2 * n);
            for t in 0..n {
                omega.set(t, t + n, 1.0, 0.0);
                omega.set(t + n, t, -1.0, 0.0);
            }
            for x in basis {
                assert!(x.is_anti_hermitian());
                let xt = CMat {
                    re: x.re.transpose(),
                    im: x.im.transpose(),
                };
                let resid = xt.mul(&omega).add(&omega.mul(&x));
                assert_eq!(resid.max_abs(), 0.0);
            }
        }
    }

    #[test]
    fn realify_turns_anti_hermitian_into_antisymmetric() {
        for x in su_basis(3) {
            let r = x.realify();
            assert_eq!((&r + r.transpose()).abs().max(), 0.0);
        }
    }

    #[test]
    fn pauli_relations() {
        let s1 = sigma1();
        let s2 = sigma2();
        let s3 = sigma3();
        // sigma1 sigma2 = i sigma3.
        let prod = s1.mul(&s2);
        let i_s3 = s3.scale(0.0, 1.0);
        assert_eq!(prod.sub(&i_s3).max_abs(), 0.0);
        for s in [&s1, &s2, &s3] {
            let sq = s.mul(s);
            assert_eq!(sq.sub(&CMat::identity(2)).max_abs(), 0.0);
        }
    }
}
