//! SU(2), su(2) and SL(2,C) elements with exp, polar decomposition, Ad and ad.
//!
//! # Normalization of su(2)
//!
//! The invariant scalar product is `⟨A, B⟩ = −2 tr(AB)` and the fixed
//! orthonormal basis is `E_k = iσ_k / 2`. With this choice `[E_1, E_2] = −E_3`
//! (cyclically), `ad(A)` has eigenvalues `0, ±i|A|`, and `exp(A)` rotates by the
//! angle `|A|` under `Ad`. Everything that uses a norm on su(2) (Ad/ad
//! matrices, the Kogut-Susskind electric term, the Kähler potential and the
//! half-form factor) reads it from [`INNER_PRODUCT_SCALE`].

use nalgebra::Matrix3;
use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{CMat2, Mat2};
use crate::scalar::Scalar;
use crate::tolerance::Tolerance;

/// `⟨A, B⟩ = INNER_PRODUCT_SCALE · tr(AB)`.
pub const INNER_PRODUCT_SCALE: f64 = -2.0;

const I: Complex64 = Complex64::new(0.0, 1.0);

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// The orthonormal basis `iσ_k / 2`.
pub fn su2_basis() -> [CMat2; 3] {
    let h = 0.5;
    [
        CMat2::new(c(0.0, 0.0), c(0.0, h), c(0.0, h), c(0.0, 0.0)),
        CMat2::new(c(0.0, 0.0), c(h, 0.0), c(-h, 0.0), c(0.0, 0.0)),
        CMat2::new(c(0.0, h), c(0.0, 0.0), c(0.0, 0.0), c(0.0, -h)),
    ]
}

/// `⟨A, B⟩` on 2×2 matrices, real part only.
pub fn inner_product(a: &CMat2, b: &CMat2) -> f64 {
    INNER_PRODUCT_SCALE * (a * b).trace().re
}

/// An element of SU(2).
#[derive(Debug, Clone, PartialEq)]
pub struct SU2Element(CMat2);

impl SU2Element {
    pub fn identity() -> Self {
        Self(CMat2::identity())
    }

    /// `q0·𝟙 + i(q1σ1 + q2σ2 + q3σ3)` for a unit quaternion.
    pub fn from_quaternion(q: [f64; 4]) -> Self {
        let [q0, q1, q2, q3] = q;
        Self(CMat2::new(
            c(q0, q3),
            c(q2, q1),
            c(-q2, q1),
            c(q0, -q3),
        ))
    }

    /// `diag(e^{iθ}, e^{−iθ})`.
    pub fn torus(theta: f64) -> Self {
        Self(CMat2::diag(
            Complex64::from_polar(1.0, theta),
            Complex64::from_polar(1.0, -theta),
        ))
    }

    /// `±𝟙`.
    pub fn central(sign: i8) -> Self {
        Self(CMat2::scalar(c(f64::from(sign), 0.0)))
    }

    pub fn from_matrix(m: CMat2, tol: &Tolerance) -> Result<Self> {
        let unitarity = (&m.dagger() * &m - CMat2::identity()).norm();
        let det = m.det();
        if unitarity > tol.matrix_abs || (det - 1.0).norm() > tol.matrix_abs {
            return Err(Error::NotInGroup {
                group: "SU(2)",
                detail: format!("|g†g − 1| = {unitarity:e}, det = {det}"),
            });
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &CMat2 {
        &self.0
    }

    pub fn into_matrix(self) -> CMat2 {
        self.0
    }

    /// The inverse, `g†`.
    pub fn inverse(&self) -> Self {
        Self(self.0.dagger())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        Self(&(&g.0 * &self.0) * &g.0.dagger())
    }
}

/// A traceless anti-Hermitian matrix, stored by its coordinates in the basis
/// [`su2_basis`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Su2AlgebraElement {
    coords: [f64; 3],
}

impl Su2AlgebraElement {
    pub fn zero() -> Self {
        Self { coords: [0.0; 3] }
    }

    pub fn from_coords(coords: [f64; 3]) -> Self {
        Self { coords }
    }

    /// `diag(iφ, −iφ)`.
    pub fn diagonal(phi: f64) -> Self {
        Self::from_coords([0.0, 0.0, 2.0 * phi])
    }

    pub fn from_matrix(m: &CMat2, tol: &Tolerance) -> Result<Self> {
        let skew = (m.dagger() + m.clone()).norm();
        let trace = m.trace().norm();
        if skew > tol.matrix_abs || trace > tol.matrix_abs {
            return Err(Error::NotInGroup {
                group: "su(2)",
                detail: format!("|A† + A| = {skew:e}, |tr A| = {trace:e}"),
            });
        }
        Ok(Self::project(m))
    }

    /// Orthogonal projection of any 2×2 matrix onto su(2).
    pub fn project(m: &CMat2) -> Self {
        let basis = su2_basis();
        Self {
            coords: [
                inner_product(&basis[0], m),
                inner_product(&basis[1], m),
                inner_product(&basis[2], m),
            ],
        }
    }

    pub fn coords(&self) -> [f64; 3] {
        self.coords
    }

    pub fn matrix(&self) -> CMat2 {
        let [x1, x2, x3] = self.coords;
        let h = 0.5;
        CMat2::new(c(0.0, h * x3), c(h * x2, h * x1), c(-h * x2, h * x1), c(0.0, -h * x3))
    }

    /// `|A| = sqrt⟨A, A⟩`.
    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coords.iter().map(|x| x * x).sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coords = self.coords;
        for (x, y) in coords.iter_mut().zip(other.coords) {
            *x += y;
        }
        Self { coords }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            coords: self.coords.map(|x| x * s),
        }
    }

    /// `Ad(g) A = g A g⁻¹`.
    pub fn adjoint_by(&self, g: &SU2Element) -> Self {
        Self::project(&(&(g.matrix() * &self.matrix()) * &g.matrix().dagger()))
    }
}

/// An element of SL(2,C) over either scalar backend.
#[derive(Debug, Clone, PartialEq)]
pub struct SL2CElement<S>(Mat2<S>);

impl<S: Scalar> SL2CElement<S> {
    pub fn identity() -> Self {
        Self(Mat2::identity())
    }

    /// Checks `det = 1`, exactly or within `tol.matrix_abs`.
    pub fn new(m: Mat2<S>, tol: &Tolerance) -> Result<Self> {
        let det = m.det();
        let ok = if S::EXACT {
            det == S::one()
        } else {
            (det.clone() - S::one()).is_negligible(tol.matrix_abs)
        };
        if !ok {
            return Err(Error::NotUnimodular {
                det: format!("{:?}", det),
            });
        }
        Ok(Self(m))
    }

    pub(crate) fn new_unchecked(m: Mat2<S>) -> Self {
        Self(m)
    }

    pub fn matrix(&self) -> &Mat2<S> {
        &self.0
    }

    pub fn into_matrix(self) -> Mat2<S> {
        self.0
    }

    /// Inverse via adjugate (exact for det = 1).
    pub fn inverse(&self) -> Self {
        Self(self.0.adjugate())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    pub fn conjugate_by(&self, g: &Self) -> Self {
        Self(self.0.conjugate_by_unimodular(&g.0))
    }
}

/// `(sinh w)/w`, even in `w`.
fn sinhc(w: Complex64) -> Complex64 {
    if w.norm() < 1e-4 {
        let w2 = w * w;
        1.0 + w2 / 6.0 + w2 * w2 / 120.0
    } else {
        w.sinh() / w
    }
}

/// `exp(X)` for a traceless 2×2 matrix: `cosh(w)·𝟙 + (sinh w / w)·X` with
/// `w² = −det X`.
pub fn exp_traceless(x: &CMat2) -> CMat2 {
    let w = (-x.det()).sqrt();
    CMat2::scalar(w.cosh()) + x.scale(&sinhc(w))
}

/// `exp(A)` for `A ∈ su(2)`.
pub fn su2_exp(a: &Su2AlgebraElement) -> SU2Element {
    SU2Element(exp_traceless(&a.matrix()))
}

/// `a · exp(iA)`.
pub fn polar_compose(a: &SU2Element, alg: &Su2AlgebraElement) -> SL2CElement<Complex64> {
    let hermitian = alg.matrix().scale(&I);
    SL2CElement(a.matrix() * &exp_traceless(&hermitian))
}

/// Splits `g = a · exp(iA)` with `a ∈ SU(2)`, `A ∈ su(2)`.
pub fn polar_decompose(
    g: &SL2CElement<Complex64>,
    tol: &Tolerance,
) -> Result<(SU2Element, Su2AlgebraElement)> {
    let m = g.matrix();
    let det = m.det();
    if (det - 1.0).norm() > tol.matrix_abs {
        return Err(Error::NotUnimodular {
            det: det.to_string(),
        });
    }
    // g†g = exp(2iA) is positive Hermitian with det 1: g†g = c𝟙 + H0, H0² = s²𝟙.
    let p = &m.dagger() * m;
    let center = 0.5 * (p.m[0][0].re + p.m[1][1].re);
    let h0 = p - CMat2::scalar(c(center, 0.0));
    let s = (h0.m[0][0].re.powi(2) + h0.m[0][1].norm_sqr()).sqrt();
    let ratio = if s < 1e-8 { 1.0 - s * s / 6.0 } else { s.asinh() / s };
    // iA = ½ log(g†g) = ½ (asinh(s)/s) H0
    let hermitian = h0.scale(&c(0.5 * ratio, 0.0));
    let alg = Su2AlgebraElement::project(&hermitian.scale(&(-I)));
    let unitary = m * &exp_traceless(&(-hermitian));
    Ok((SU2Element(unitary), alg))
}

/// `Ad(g)` as a 3×3 rotation in the basis [`su2_basis`].
pub fn adjoint_rep(g: &SU2Element) -> Matrix3<f64> {
    let basis = su2_basis();
    let gm = g.matrix();
    let gi = gm.dagger();
    Matrix3::from_fn(|k, l| inner_product(&basis[k], &(&(gm * &basis[l]) * &gi)))
}

/// `ad(A) = [A, ·]` as a skew-symmetric 3×3 matrix.
pub fn ad_matrix(a: &Su2AlgebraElement) -> Matrix3<f64> {
    let basis = su2_basis();
    let am = a.matrix();
    Matrix3::from_fn(|k, l| inner_product(&basis[k], &am.commutator(&basis[l])))
}

/// True if `A` is zero within `tol`.
pub fn is_zero_algebra(a: &Su2AlgebraElement, tol: f64) -> bool {
    a.norm() <= tol || a.coords.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn basis_is_orthonormal() {
        let b = su2_basis();
        for k in 0..3 {
            for l in 0..3 {
                let expected = if k == l { 1.0 } else { 0.0 };
                assert!((inner_product(&b[k], &b[l]) - expected).abs() < 1e-15);
            }
        }
        // [E1, E2] = −E3
        let e12 = b[0].commutator(&b[1]);
        assert!((e12 + b[2].clone()).norm() < 1e-15);
    }

    #[test]
    fn exp_of_zero_is_identity() {
        assert_eq!(su2_exp(&Su2AlgebraElement::zero()).matrix(), &CMat2::identity());
    }

    #[test]
    fn exp_of_diagonal() {
        // diag(iπ/2, −iπ/2) → diag(i, −i)
        let a = Su2AlgebraElement::diagonal(FRAC_PI_2);
        let expected = CMat2::diag(c(0.0, 1.0), c(0.0, -1.0));
        assert!((su2_exp(&a).matrix().clone() - expected).norm() < 1e-15);
    }

    #[test]
    fn compose_identity() {
        let g = polar_compose(&SU2Element::identity(), &Su2AlgebraElement::zero());
        assert_eq!(g.matrix(), &CMat2::identity());
    }

    #[test]
    fn decompose_positive_diagonal() {
        // diag(2, 1/2) = exp(iA) with iA = diag(ln 2, −ln 2)
        let g = SL2CElement::new(
            CMat2::diag(c(2.0, 0.0), c(0.5, 0.0)),
            &Tolerance::default(),
        )
        .unwrap();
        let (a, alg) = polar_decompose(&g, &Tolerance::default()).unwrap();
        assert!((a.matrix().clone() - CMat2::identity()).norm() < 1e-14);
        let expected = CMat2::diag(c(0.0, -2f64.ln()), c(0.0, 2f64.ln()));
        assert!((alg.matrix() - expected).norm() < 1e-14);
    }

    #[test]
    fn decompose_rejects_non_unimodular() {
        let g = SL2CElement::new_unchecked(CMat2::diag(c(2.0, 0.0), c(1.0, 0.0)));
        assert!(matches!(
            polar_decompose(&g, &Tolerance::default()),
            Err(Error::NotUnimodular { .. })
        ));
    }

    #[test]
    fn adjoint_of_identity_and_ad_of_zero() {
        assert_eq!(adjoint_rep(&SU2Element::identity()), Matrix3::identity());
        assert_eq!(ad_matrix(&Su2AlgebraElement::zero()), Matrix3::zeros());
    }

    #[test]
    fn ad_has_expected_spectrum() {
        let a = Su2AlgebraElement::from_coords([0.3, -0.4, 1.2]);
        let m = ad_matrix(&a);
        assert!((m + m.transpose()).norm() < 1e-15);
        // ω² = ½‖M‖_F² = |A|²
        assert!((0.5 * m.norm_squared() - a.norm_sqr()).abs() < 1e-14);
    }

    #[test]
    fn su2_validation() {
        let tol = Tolerance::default();
        assert!(SU2Element::from_matrix(CMat2::identity(), &tol).is_ok());
        assert!(SU2Element::from_matrix(CMat2::diag(c(2.0, 0.0), c(0.5, 0.0)), &tol).is_err());
        assert!(Su2AlgebraElement::from_matrix(&CMat2::identity(), &tol).is_err());
    }
}
