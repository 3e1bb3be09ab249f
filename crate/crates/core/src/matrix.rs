//! 2×2 complex matrices over either scalar backend.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{GaussRational, Scalar};

/// Row-major 2×2 matrix.
#[derive(Clone, PartialEq)]
pub struct Mat2<S> {
    pub m: [[S; 2]; 2],
}

pub type CMat2 = Mat2<Complex64>;
pub type QMat2 = Mat2<GaussRational>;

impl<S: fmt::Debug> fmt::Debug for Mat2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{:?}, {:?}], [{:?}, {:?}]]",
            self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]
        )
    }
}

impl<S: Scalar> Mat2<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        Self {
            m: [[a, b], [c, d]],
        }
    }

    pub fn identity() -> Self {
        Self::new(S::one(), S::zero(), S::zero(), S::one())
    }

    pub fn zero() -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::zero())
    }

    pub fn scalar(s: S) -> Self {
        Self::new(s.clone(), S::zero(), S::zero(), s)
    }

    pub fn diag(a: S, d: S) -> Self {
        Self::new(a, S::zero(), S::zero(), d)
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(S::from_i64(a), S::from_i64(b), S::from_i64(c), S::from_i64(d))
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.m[r][c]
    }

    pub fn trace(&self) -> S {
        self.m[0][0].clone() + self.m[1][1].clone()
    }

    pub fn det(&self) -> S {
        self.m[0][0].clone() * self.m[1][1].clone() - self.m[0][1].clone() * self.m[1][0].clone()
    }

    pub fn adjugate(&self) -> Self {
        Self::new(
            self.m[1][1].clone(),
            -self.m[0][1].clone(),
            -self.m[1][0].clone(),
            self.m[0][0].clone(),
        )
    }

    /// Inverse by adjugate.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(self.adjugate().scale(&(S::one() / det)))
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Self::new(
            f(&self.m[0][0]),
            f(&self.m[0][1]),
            f(&self.m[1][0]),
            f(&self.m[1][1]),
        )
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::new(
            self.m[0][0].conj(),
            self.m[1][0].conj(),
            self.m[0][1].conj(),
            self.m[1][1].conj(),
        )
    }

    pub fn transpose(&self) -> Self {
        Self::new(
            self.m[0][0].clone(),
            self.m[1][0].clone(),
            self.m[0][1].clone(),
            self.m[1][1].clone(),
        )
    }

    /// `[a, b] = ab − ba`.
    pub fn commutator(&self, other: &Self) -> Self {
        self * other - other * self
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &Self) -> Result<Self> {
        Ok(&(g * self) * &g.inverse()?)
    }

    /// `g · self · g⁻¹` for `g` of determinant one, via the adjugate.
    pub fn conjugate_by_unimodular(&self, g: &Self) -> Self {
        &(g * self) * &g.adjugate()
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.m.iter().flatten().all(Zero::is_zero)
    }

    pub fn is_upper_triangular(&self, tol: f64) -> bool {
        self.m[1][0].is_negligible(tol)
    }

    pub fn is_lower_triangular(&self, tol: f64) -> bool {
        self.m[0][1].is_negligible(tol)
    }

    pub fn is_diagonal(&self, tol: f64) -> bool {
        self.is_upper_triangular(tol) && self.is_lower_triangular(tol)
    }

    /// Frobenius norm, evaluated in `f64`.
    pub fn norm(&self) -> f64 {
        self.m
            .iter()
            .flatten()
            .map(|x| x.to_c64().norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Entrywise negligibility: exact zero, or Frobenius norm within `tol`.
    pub fn is_negligible(&self, tol: f64) -> bool {
        if S::EXACT {
            self.is_zero_matrix()
        } else {
            self.norm() <= tol
        }
    }

    pub fn to_c64(&self) -> CMat2 {
        Mat2 {
            m: [
                [self.m[0][0].to_c64(), self.m[0][1].to_c64()],
                [self.m[1][0].to_c64(), self.m[1][1].to_c64()],
            ],
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::identity(), |acc, _| &acc * self)
    }
}

impl<'a, S: Scalar> Mul<&'a Mat2<S>> for &'a Mat2<S> {
    type Output = Mat2<S>;

    fn mul(self, rhs: &'a Mat2<S>) -> Mat2<S> {
        let a = &self.m;
        let b = &rhs.m;
        let entry = |r: usize, c: usize| {
            a[r][0].clone() * b[0][c].clone() + a[r][1].clone() * b[1][c].clone()
        };
        Mat2::new(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1))
    }
}

impl<S: Scalar> Mul for Mat2<S> {
    type Output = Mat2<S>;

    fn mul(self, rhs: Mat2<S>) -> Mat2<S> {
        &self * &rhs
    }
}

impl<S: Scalar> Add for Mat2<S> {
    type Output = Mat2<S>;

    fn add(self, rhs: Mat2<S>) -> Mat2<S> {
        let [[a, b], [c, d]] = self.m;
        let [[e, f], [g, h]] = rhs.m;
        Mat2::new(a + e, b + f, c + g, d + h)
    }
}

impl<S: Scalar> Sub for Mat2<S> {
    type Output = Mat2<S>;

    fn sub(self, rhs: Mat2<S>) -> Mat2<S> {
        let [[a, b], [c, d]] = self.m;
        let [[e, f], [g, h]] = rhs.m;
        Mat2::new(a - e, b - f, c - g, d - h)
    }
}

impl<S: Scalar> Neg for Mat2<S> {
    type Output = Mat2<S>;

    fn neg(self) -> Mat2<S> {
        let [[a, b], [c, d]] = self.m;
        Mat2::new(-a, -b, -c, -d)
    }
}

impl<S: Scalar> One for Mat2<S> {
    fn one() -> Self {
        Self::identity()
    }
}

impl<S: Scalar> Zero for Mat2<S> {
    fn zero() -> Self {
        Mat2::zero()
    }

    fn is_zero(&self) -> bool {
        self.is_zero_matrix()
    }
}

/// Exact matrix to floating point.
pub fn to_float(m: &QMat2) -> CMat2 {
    m.to_c64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gq, gq_real};

    #[test]
    fn trace_of_identity_is_two() {
        assert_eq!(QMat2::identity().trace(), gq_real(2, 1));
        assert_eq!(CMat2::identity().trace(), Complex64::new(2.0, 0.0));
    }

    #[test]
    fn self_commutator_vanishes() {
        let a = QMat2::new(gq(1, 2, 1, 3), gq_real(7, 1), gq(0, 1, -2, 5), gq_real(-1, 4));
        assert!(a.commutator(&a).is_zero_matrix());
    }

    #[test]
    fn commutator_is_antisymmetric() {
        let a = QMat2::from_i64(1, 2, 3, 4);
        let b = QMat2::new(gq(1, 2, 1, 1), gq_real(0, 1), gq_real(5, 3), gq(0, 1, 1, 7));
        assert_eq!(a.commutator(&b), -b.commutator(&a));
    }

    #[test]
    fn unimodular_diagonal() {
        let m = QMat2::diag(gq_real(3, 2), gq_real(2, 3));
        assert_eq!(m.det(), gq_real(1, 1));
    }

    #[test]
    fn inverse_and_singular() {
        let a = QMat2::from_i64(2, 1, 7, 4);
        assert_eq!(&a * &a.inverse().unwrap(), QMat2::identity());
        assert_eq!(QMat2::from_i64(1, 2, 2, 4).inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn conjugation_preserves_trace() {
        let a = QMat2::new(gq(1, 2, 1, 3), gq_real(7, 1), gq(0, 1, -2, 5), gq_real(-1, 4));
        let g = QMat2::from_i64(2, 1, 1, 1);
        assert_eq!(a.conjugate_by(&g).unwrap().trace(), a.trace());
        assert_eq!(a.conjugate_by_unimodular(&g), a.conjugate_by(&g).unwrap());
    }
}
