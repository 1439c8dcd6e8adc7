//! Small fixed-size vector/matrix types. Only what the pipeline needs;
//! no general linear algebra.

use crate::real::Real;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3<R> {
    pub x: R,
    pub y: R,
    pub z: R,
}

impl<R: Real> Vec3<R> {
    #[inline(always)]
    pub fn new(x: R, y: R, z: R) -> Self {
        Self { x, y, z }
    }

    #[inline(always)]
    pub fn splat(v: R) -> Self {
        Self { x: v, y: v, z: v }
    }

    #[inline(always)]
    pub fn zero() -> Self {
        Self::splat(R::zero())
    }

    pub fn of(x: f64, y: f64, z: f64) -> Self {
        Self::new(R::of(x), R::of(y), R::of(z))
    }

    #[inline(always)]
    pub fn dot(self, o: Self) -> R {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    #[inline(always)]
    pub fn cross(self, o: Self) -> Self {
        Self::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    #[inline(always)]
    pub fn norm_sq(self) -> R {
        self.dot(self)
    }

    #[inline(always)]
    pub fn norm(self) -> R {
        self.norm_sq().sqrt()
    }

    pub fn normalized(self) -> Self {
        self / self.norm()
    }

    pub fn lerp(self, o: Self, t: R) -> Self {
        self + (o - self) * t
    }

    #[inline(always)]
    pub fn to_array(self) -> [R; 3] {
        [self.x, self.y, self.z]
    }

    #[inline(always)]
    pub fn from_array(a: [R; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn clamp01(self) -> Self {
        let c = |v: R| v.max(R::zero()).min(R::one());
        Self::new(c(self.x), c(self.y), c(self.z))
    }

    pub fn min_elem(self, o: Self) -> Self {
        Self::new(self.x.min(o.x), self.y.min(o.y), self.z.min(o.z))
    }

    pub fn max_elem(self, o: Self) -> Self {
        Self::new(self.x.max(o.x), self.y.max(o.y), self.z.max(o.z))
    }

    pub fn mul_elem(self, o: Self) -> Self {
        Self::new(self.x * o.x, self.y * o.y, self.z * o.z)
    }

    pub fn div_elem(self, o: Self) -> Self {
        Self::new(self.x / o.x, self.y / o.y, self.z / o.z)
    }

    pub fn abs(self) -> Self {
        Self::new(self.x.abs(), self.y.abs(), self.z.abs())
    }

    pub fn max_component(self) -> R {
        self.x.max(self.y).max(self.z)
    }
}

impl<R: Real> Add for Vec3<R> {
    type Output = Self;
    #[inline(always)]
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<R: Real> AddAssign for Vec3<R> {
    #[inline(always)]
    fn add_assign(&mut self, o: Self) {
        self.x += o.x;
        self.y += o.y;
        self.z += o.z;
    }
}

impl<R: Real> Sub for Vec3<R> {
    type Output = Self;
    #[inline(always)]
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<R: Real> Mul<R> for Vec3<R> {
    type Output = Self;
    #[inline(always)]
    fn mul(self, s: R) -> Self {
        Self::new(self.x * s, self.y * s, self.z * s)
    }
}

impl<R: Real> Div<R> for Vec3<R> {
    type Output = Self;
    #[inline(always)]
    fn div(self, s: R) -> Self {
        Self::new(self.x / s, self.y / s, self.z / s)
    }
}

impl<R: Real> Neg for Vec3<R> {
    type Output = Self;
    #[inline(always)]
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

/// Column-major 3x3 matrix (columns are basis vectors).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat3<R> {
    pub cols: [Vec3<R>; 3],
}

impl<R: Real> Mat3<R> {
    pub fn from_cols(c0: Vec3<R>, c1: Vec3<R>, c2: Vec3<R>) -> Self {
        Self { cols: [c0, c1, c2] }
    }

    pub fn identity() -> Self {
        Self::from_cols(
            Vec3::new(R::one(), R::zero(), R::zero()),
            Vec3::new(R::zero(), R::one(), R::zero()),
            Vec3::new(R::zero(), R::zero(), R::one()),
        )
    }

    #[inline(always)]
    pub fn mul_vec(&self, v: Vec3<R>) -> Vec3<R> {
        self.cols[0] * v.x + self.cols[1] * v.y + self.cols[2] * v.z
    }

    pub fn transpose(&self) -> Self {
        Self::from_cols(
            Vec3::new(self.cols[0].x, self.cols[1].x, self.cols[2].x),
            Vec3::new(self.cols[0].y, self.cols[1].y, self.cols[2].y),
            Vec3::new(self.cols[0].z, self.cols[1].z, self.cols[2].z),
        )
    }

    pub fn mul_mat(&self, o: &Self) -> Self {
        Self::from_cols(
            self.mul_vec(o.cols[0]),
            self.mul_vec(o.cols[1]),
            self.mul_vec(o.cols[2]),
        )
    }

    pub fn det(&self) -> R {
        self.cols[0].dot(self.cols[1].cross(self.cols[2]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_is_orthogonal() {
        let a = Vec3::<f64>::of(1.0, 2.0, 3.0);
        let b = Vec3::<f64>::of(-0.5, 0.3, 2.0);
        let c = a.cross(b);
        assert!(c.dot(a).abs() < 1e-12);
        assert!(c.dot(b).abs() < 1e-12);
    }

    #[test]
    fn mat3_transpose_inverts_rotation() {
        // rotation about z by 0.3 rad
        let (s, c) = (0.3f64.sin(), 0.3f64.cos());
        let r = Mat3::from_cols(
            Vec3::of(c, s, 0.0),
            Vec3::of(-s, c, 0.0),
            Vec3::of(0.0, 0.0, 1.0),
        );
        let p = Vec3::of(0.2, -1.0, 0.7);
        let q = r.transpose().mul_vec(r.mul_vec(p));
        assert!((q - p).norm() < 1e-12);
        assert!((r.det() - 1.0).abs() < 1e-12);
    }
}
