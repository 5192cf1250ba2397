//! Complex 2x2 linear algebra with exact contracts.
//!
//! Eigenvectors are row vectors acting on the right (path composition reads
//! left to right), and `m` always denotes the *inverse* eigenvalue:
//! `v g = m^-1 v`. Shadow vectors are columns; `e1`, `e2` is the standard
//! column basis and `pairing(u1, u2)` the determinant of the matrix with
//! those columns.

use crate::error::{Error, Result};
use crate::numeric::NumericContext;
use crate::C64;
use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul, Neg, Sub};

pub const ONE: C64 = C64::new(1.0, 0.0);
pub const ZERO: C64 = C64::new(0.0, 0.0);

/// 2x2 complex matrix, row major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub d: C64,
}

/// Nonzero column vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ColVec {
    pub x: C64,
    pub y: C64,
}

/// A 1-dimensional space of row vectors with its inverse eigenvalue data.
///
/// Semantics are scale invariant: every consumer must give the same answer
/// after `v -> lambda v`. The stored representative has its largest-modulus
/// component normalized to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RowLine {
    pub v1: C64,
    pub v2: C64,
}

impl Mat2 {
    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(ONE, ZERO, ZERO, ONE)
    }

    pub fn from_rows(rows: [[C64; 2]; 2]) -> Self {
        Mat2::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    }

    pub fn det(&self) -> C64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> C64 {
        self.a + self.d
    }

    /// Inverse; fails only on (numerically) singular input.
    pub fn inverse(&self) -> Result<Mat2> {
        let det = self.det();
        if det.norm() < 1e-300 {
            return Err(Error::NotInvertible("zero determinant".into()));
        }
        Ok(Mat2::new(self.d / det, -self.b / det, -self.c / det, self.a / det))
    }

    pub fn norm(&self) -> f64 {
        (self.a.norm_sqr() + self.b.norm_sqr() + self.c.norm_sqr() + self.d.norm_sqr()).sqrt()
    }

    pub fn mul_col(&self, u: ColVec) -> ColVec {
        ColVec { x: self.a * u.x + self.b * u.y, y: self.c * u.x + self.d * u.y }
    }

    /// Checks |det - 1| against the SL2 gate.
    pub fn check_sl2(&self, ctx: &NumericContext) -> Result<()> {
        let dev = (self.det() - ONE).norm();
        if dev > ctx.sl2_tol {
            return Err(Error::NotSl2(dev));
        }
        Ok(())
    }

    pub fn conjugate_by(&self, h: &Mat2) -> Result<Mat2> {
        Ok(h.inverse()? * *self * *h)
    }

    /// Relative distance ||self - other|| / max(1, ||other||).
    pub fn rel_dist(&self, other: &Mat2) -> f64 {
        (*self - *other).norm() / f64::max(1.0, other.norm())
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.a * rhs.a + self.b * rhs.c,
            self.a * rhs.b + self.b * rhs.d,
            self.c * rhs.a + self.d * rhs.c,
            self.c * rhs.b + self.d * rhs.d,
        )
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        Mat2::new(self.a + rhs.a, self.b + rhs.b, self.c + rhs.c, self.d + rhs.d)
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        Mat2::new(self.a - rhs.a, self.b - rhs.b, self.c - rhs.c, self.d - rhs.d)
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        Mat2::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl ColVec {
    pub fn new(x: C64, y: C64) -> Self {
        ColVec { x, y }
    }

    pub fn e1() -> Self {
        ColVec::new(ONE, ZERO)
    }

    pub fn e2() -> Self {
        ColVec::new(ZERO, ONE)
    }

    pub fn norm(&self) -> f64 {
        (self.x.norm_sqr() + self.y.norm_sqr()).sqrt()
    }

    pub fn scale(&self, s: C64) -> ColVec {
        ColVec::new(self.x * s, self.y * s)
    }

    pub fn is_zero(&self, ctx: &NumericContext) -> bool {
        self.norm() <= ctx.zero_tol
    }
}

impl RowLine {
    /// Normalizes the representative so its largest-modulus component is 1.
    pub fn new(v1: C64, v2: C64) -> Self {
        let s = if v1.norm() >= v2.norm() { v1 } else { v2 };
        RowLine { v1: v1 / s, v2: v2 / s }
    }

    /// Raw representative without normalization (used by propagation steps
    /// that renormalize afterwards).
    pub fn from_components(v1: C64, v2: C64) -> Self {
        RowLine { v1, v2 }
    }

    /// v g as a new line (right action).
    pub fn act(&self, g: &Mat2) -> RowLine {
        RowLine::new(self.v1 * g.a + self.v2 * g.c, self.v1 * g.b + self.v2 * g.d)
    }

    /// v u for a column vector u.
    pub fn dot_col(&self, u: ColVec) -> C64 {
        self.v1 * u.x + self.v2 * u.y
    }

    /// v e2, the second component of the representative.
    pub fn dot_e2(&self) -> C64 {
        self.v2
    }

    pub fn norm(&self) -> f64 {
        (self.v1.norm_sqr() + self.v2.norm_sqr()).sqrt()
    }

    /// |sin of the angle| to another line; 0 iff equal as projective lines.
    pub fn sin_angle(&self, other: &RowLine) -> f64 {
        crate::numeric::sin_angle((self.v1, self.v2), (other.v1, other.v2))
    }

    /// Residual of the invariance condition v g = m^-1 v, relative to ||v||.
    pub fn invariance_residual(&self, g: &Mat2, m: C64) -> f64 {
        let w = self.act_raw(g);
        let target = (self.v1 / m, self.v2 / m);
        let dx = w.0 - target.0;
        let dy = w.1 - target.1;
        (dx.norm_sqr() + dy.norm_sqr()).sqrt() / self.norm()
    }

    fn act_raw(&self, g: &Mat2) -> (C64, C64) {
        (self.v1 * g.a + self.v2 * g.c, self.v1 * g.b + self.v2 * g.d)
    }
}

/// Result of an invariant-line computation.
#[derive(Debug, Clone, PartialEq)]
pub enum EigenLines {
    /// Two distinct lines with their inverse eigenvalues, ordered so the
    /// first has the smaller |m| (i.e. the larger |eigenvalue|).
    Two([(RowLine, C64); 2]),
    /// Parabolic (trace +-2, g != +-1): a single invariant line, m = +-1.
    One(RowLine, C64),
    /// g = +-1: every line is invariant; a decoration must be supplied
    /// externally.
    All,
}

/// Invariant row lines of g in SL(2,C) with their inverse eigenvalues.
///
/// Each returned m satisfies v g = m^-1 v to within the eigen tolerance.
pub fn eigen_lines(g: &Mat2, ctx: &NumericContext) -> Result<EigenLines> {
    g.check_sl2(ctx)?;
    let tr = g.trace();
    let central = (*g - Mat2::identity()).norm() <= ctx.parabolic_tol
        || (*g + Mat2::identity()).norm() <= ctx.parabolic_tol;
    if central {
        return Ok(EigenLines::All);
    }
    let parabolic = (tr - 2.0 * ONE).norm() <= ctx.parabolic_tol
        || (tr + 2.0 * ONE).norm() <= ctx.parabolic_tol;
    if parabolic {
        let lambda = tr / 2.0; // +-1
        let line = left_eigenline(g, lambda);
        let m = ONE / lambda;
        return Ok(EigenLines::One(line, m));
    }
    // lambda^2 - tr lambda + 1 = 0
    let disc = (tr * tr - 4.0 * ONE).sqrt();
    let l1 = (tr + disc) / 2.0;
    let l2 = (tr - disc) / 2.0;
    // Order by decreasing |lambda| so the first entry has smaller |m|.
    let (l1, l2) = if l1.norm() >= l2.norm() { (l1, l2) } else { (l2, l1) };
    let line1 = left_eigenline(g, l1);
    let line2 = left_eigenline(g, l2);
    Ok(EigenLines::Two([(line1, ONE / l1), (line2, ONE / l2)]))
}

/// Left eigenvector for eigenvalue lambda: v (g - lambda) = 0, i.e. v is in
/// the left kernel. Row candidates are [-c, a - lambda] and [d - lambda, -b];
/// take the larger for stability.
fn left_eigenline(g: &Mat2, lambda: C64) -> RowLine {
    let cand1 = (-g.c, g.a - lambda);
    let cand2 = (g.d - lambda, -g.b);
    let n1 = cand1.0.norm_sqr() + cand1.1.norm_sqr();
    let n2 = cand2.0.norm_sqr() + cand2.1.norm_sqr();
    if n1 >= n2 {
        RowLine::new(cand1.0, cand1.1)
    } else {
        RowLine::new(cand2.0, cand2.1)
    }
}

/// det(u1, u2): determinant of the matrix with columns u1, u2 (the standard
/// antisymmetric pairing). pairing(u, e2) = u^1.
pub fn pairing(u1: ColVec, u2: ColVec) -> C64 {
    u1.x * u2.y - u1.y * u2.x
}

/// Hopf map h([v1, v2]) = v1/v2; the point at infinity (v2 = 0) is an error.
pub fn hopf(v1: C64, v2: C64, ctx: &NumericContext) -> Result<C64> {
    if v2.norm() <= ctx.zero_tol * (v1.norm_sqr() + v2.norm_sqr()).sqrt() {
        return Err(Error::HopfAtInfinity);
    }
    Ok(v1 / v2)
}

/// up(u) = [[u1, 0], [u2, 1]] for a column vector u; satisfies up(u) e1 = u.
pub fn up_of(u: ColVec, ctx: &NumericContext) -> Result<Mat2> {
    if u.x.norm() <= ctx.zero_tol * u.norm() {
        return Err(Error::NotInvertible(
            "up(u) needs a nonzero first component".into(),
        ));
    }
    Ok(Mat2::new(u.x, ZERO, u.y, ONE))
}

/// An octahedral color: a triple of nonzero complex numbers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OctahedralColor {
    pub a: C64,
    pub b: C64,
    pub m: C64,
}

impl OctahedralColor {
    pub fn new(a: C64, b: C64, m: C64) -> Self {
        OctahedralColor { a, b, m }
    }

    pub fn check_nonzero(&self) -> Result<()> {
        for (name, z) in [("a", self.a), ("b", self.b), ("m", self.m)] {
            if z.norm() == 0.0 {
                return Err(Error::InvalidDiagram(format!(
                    "octahedral color has zero component {name}"
                )));
            }
        }
        Ok(())
    }
}

/// Holonomy matrix of the path above a segment:
/// up(chi) = [[a, 0], [(a - 1/m)/b, 1]]; det = a.
pub fn hol_up(chi: &OctahedralColor) -> Mat2 {
    Mat2::new(chi.a, ZERO, (chi.a - ONE / chi.m) / chi.b, ONE)
}

/// Holonomy matrix of the path below a segment:
/// dn(chi) = [[1, (a - m) b], [0, a]]; det = a.
pub fn hol_dn(chi: &OctahedralColor) -> Mat2 {
    Mat2::new(ONE, (chi.a - chi.m) * chi.b, ZERO, chi.a)
}

/// around(chi) = up(chi) dn(chi)^-1; det = 1, and the row vector [-1, b]
/// spans its m^-1 eigenspace.
pub fn hol_around(chi: &OctahedralColor) -> Mat2 {
    let (a, b, m) = (chi.a, chi.b, chi.m);
    Mat2::new(a, -(a - m) * b, (a - ONE / m) / b, m + ONE / m - a)
}

/// (up, dn, around) with the zero-component precondition checked.
pub fn hol_matrices(chi: &OctahedralColor) -> Result<(Mat2, Mat2, Mat2)> {
    chi.check_nonzero()?;
    Ok((hol_up(chi), hol_dn(chi), hol_around(chi)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn ctx() -> NumericContext {
        NumericContext::default()
    }

    #[test]
    fn eigen_lines_diagonal() {
        let g = Mat2::new(c(2.0, 0.0), ZERO, ZERO, c(0.5, 0.0));
        match eigen_lines(&g, &ctx()).unwrap() {
            EigenLines::Two([(l1, m1), (l2, m2)]) => {
                // [1,0] has eigenvalue 2, i.e. m = 1/2, and is listed first.
                assert!(l1.sin_angle(&RowLine::new(ONE, ZERO)) < 1e-12);
                assert!((m1 - c(0.5, 0.0)).norm() < 1e-12);
                assert!(l2.sin_angle(&RowLine::new(ZERO, ONE)) < 1e-12);
                assert!((m2 - c(2.0, 0.0)).norm() < 1e-12);
            }
            other => panic!("expected two lines, got {other:?}"),
        }
    }

    #[test]
    fn eigen_lines_parabolic() {
        let g = Mat2::new(ONE, ONE, ZERO, ONE);
        match eigen_lines(&g, &ctx()).unwrap() {
            EigenLines::One(line, m) => {
                assert!(line.sin_angle(&RowLine::new(ZERO, ONE)) < 1e-12);
                assert!((m - ONE).norm() < 1e-12);
                assert!(line.invariance_residual(&g, m) < 1e-12);
            }
            other => panic!("expected one line, got {other:?}"),
        }
    }

    #[test]
    fn eigen_lines_central() {
        assert_eq!(eigen_lines(&Mat2::identity(), &ctx()).unwrap(), EigenLines::All);
        assert_eq!(eigen_lines(&-Mat2::identity(), &ctx()).unwrap(), EigenLines::All);
    }

    #[test]
    fn eigen_lines_rejects_non_sl2() {
        let g = Mat2::new(c(2.0, 0.0), ZERO, ZERO, ONE);
        assert!(matches!(eigen_lines(&g, &ctx()), Err(Error::NotSl2(_))));
    }

    #[test]
    fn pairing_with_e2_is_first_component() {
        let u = ColVec::new(c(3.0, 1.0), c(-2.0, 7.0));
        assert_eq!(pairing(u, ColVec::e2()), u.x);
    }

    #[test]
    fn hopf_and_up_of() {
        assert_eq!(hopf(c(2.0, 0.0), ONE, &ctx()).unwrap(), c(2.0, 0.0));
        assert!(matches!(hopf(ONE, ZERO, &ctx()), Err(Error::HopfAtInfinity)));
        let u = ColVec::new(c(3.0, 0.0), c(5.0, 0.0));
        let m = up_of(u, &ctx()).unwrap();
        assert_eq!(m, Mat2::new(c(3.0, 0.0), ZERO, c(5.0, 0.0), ONE));
        assert!((m.det() - c(3.0, 0.0)).norm() < 1e-15);
        // up_of(u) e1 = u and up_of(u)^-1 u = e1.
        assert_eq!(m.mul_col(ColVec::e1()), u);
        let back = m.inverse().unwrap().mul_col(u);
        assert!((back.x - ONE).norm() < 1e-15 && back.y.norm() < 1e-15);
        assert!(up_of(ColVec::e2(), &ctx()).is_err());
    }

    #[test]
    fn hol_trivial_color_is_identity() {
        for b in [c(1.0, 0.0), c(-2.5, 3.0), c(0.0, 0.25)] {
            let chi = OctahedralColor::new(ONE, b, ONE);
            let (up, dn, around) = hol_matrices(&chi).unwrap();
            assert!((up - Mat2::identity()).norm() < 1e-15);
            assert!((dn - Mat2::identity()).norm() < 1e-15);
            assert!((around - Mat2::identity()).norm() < 1e-15);
        }
    }

    #[test]
    fn hol_worked_example() {
        let chi = OctahedralColor::new(c(2.0, 0.0), ONE, c(2.0, 0.0));
        let (up, dn, around) = hol_matrices(&chi).unwrap();
        assert_eq!(up, Mat2::new(c(2.0, 0.0), ZERO, c(1.5, 0.0), ONE));
        assert_eq!(dn, Mat2::new(ONE, ZERO, ZERO, c(2.0, 0.0)));
        let expected = Mat2::new(c(2.0, 0.0), ZERO, c(1.5, 0.0), c(0.5, 0.0));
        assert!((around - expected).norm() < 1e-15);
        // around = up dn^-1
        assert!((up * dn.inverse().unwrap() - around).norm() < 1e-15);
    }

    #[test]
    fn dn_fixes_e1() {
        let chi = OctahedralColor::new(c(1.5, 0.5), c(-0.3, 1.1), c(0.2, -0.8));
        let dn = hol_dn(&chi);
        let u = dn.mul_col(ColVec::e1());
        assert!((u.x - ONE).norm() < 1e-15 && u.y.norm() < 1e-15);
    }

    proptest! {
        #[test]
        fn hol_identities_random(
            are in -2.0f64..2.0, aim in -2.0f64..2.0,
            bre in -2.0f64..2.0, bim in -2.0f64..2.0,
            mre in -2.0f64..2.0, mim in -2.0f64..2.0,
        ) {
            let a = c(are, aim);
            let b = c(bre, bim);
            let m = c(mre, mim);
            prop_assume!(a.norm() > 0.05 && b.norm() > 0.05 && m.norm() > 0.05);
            let chi = OctahedralColor::new(a, b, m);
            let (up, dn, around) = hol_matrices(&chi).unwrap();
            // det up = det dn = a, det around = 1.
            prop_assert!((up.det() - a).norm() < 1e-10);
            prop_assert!((dn.det() - a).norm() < 1e-10);
            prop_assert!((around.det() - ONE).norm() < 1e-10 * (1.0 + around.norm()));
            // around = up dn^-1.
            prop_assert!((up * dn.inverse().unwrap() - around).norm() < 1e-9 * (1.0 + around.norm()));
            // [-1, b] spans the m^-1 eigenspace of around.
            let v = RowLine::from_components(-ONE, b);
            prop_assert!(v.invariance_residual(&around, m) < 1e-8 * (1.0 + around.norm()));
        }

        #[test]
        fn eigen_lines_scale_invariant_consumers(
            tre in -3.0f64..3.0, tim in -3.0f64..3.0,
            s in 0.1f64..10.0,
        ) {
            // Downstream quantities built from a line must not change when the
            // representative is rescaled.
            let tr = c(tre, tim);
            prop_assume!((tr - 2.0*ONE).norm() > 0.1 && (tr + 2.0*ONE).norm() > 0.1);
            let g = Mat2::new(tr - ONE, tr - 2.0*ONE, ONE, ONE); // det = tr-1 - (tr-2) = 1
            match eigen_lines(&g, &ctx()).unwrap() {
                EigenLines::Two([(l, _m), _]) => {
                    let scaled = RowLine::new(l.v1 * c(s, s), l.v2 * c(s, s));
                    prop_assert!(l.sin_angle(&scaled) < 1e-10);
                    let u = ColVec::new(c(0.3, -0.7), c(1.1, 0.2));
                    let r1 = l.dot_e2() / l.dot_col(u);
                    let r2 = scaled.dot_e2() / scaled.dot_col(u);
                    prop_assert!((r1 - r2).norm() < 1e-9 * (1.0 + r1.norm()));
                }
                _ => prop_assert!(false, "expected two lines"),
            }
        }
    }
}
