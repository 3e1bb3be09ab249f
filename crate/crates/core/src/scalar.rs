//! Scalar backends: exact Gaussian rationals and `f64` complex numbers.
//!
//! Both implement [`Scalar`], so matrix and invariant code is written once and
//! runs bit-exactly on `GaussRational` or approximately on `Complex64`.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `p/q + i·r/s` with arbitrary-precision integers.
pub type GaussRational = num_complex::Complex<BigRational>;

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Whether comparisons are exact (no tolerance involved).
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn from_parts(re: f64, im: f64) -> Option<Self>;
    fn from_rationals(re: &BigRational, im: &BigRational) -> Self;
    fn conj(&self) -> Self;
    fn to_c64(&self) -> Complex64;
    /// Principal square root, if it exists in the backend's field.
    fn sqrt(&self) -> Option<Self>;
    /// Compares moduli; exact for the rational backend.
    fn cmp_modulus(&self, other: &Self) -> Ordering;
    /// `|self| <= tol` for floats, `self == 0` for exact scalars.
    fn is_negligible(&self, tol: f64) -> bool;
    /// Relative comparison for floats, equality for exact scalars.
    fn approx_eq(&self, other: &Self, rel_tol: f64) -> bool;
    fn to_json_string(&self) -> (String, String);
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }

    fn from_parts(re: f64, im: f64) -> Option<Self> {
        Some(Complex64::new(re, im))
    }

    fn from_rationals(re: &BigRational, im: &BigRational) -> Self {
        Complex64::new(
            re.to_f64().unwrap_or(f64::NAN),
            im.to_f64().unwrap_or(f64::NAN),
        )
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn to_c64(&self) -> Complex64 {
        *self
    }

    fn sqrt(&self) -> Option<Self> {
        Some(Complex64::sqrt(*self))
    }

    fn cmp_modulus(&self, other: &Self) -> Ordering {
        self.norm_sqr()
            .partial_cmp(&other.norm_sqr())
            .unwrap_or(Ordering::Equal)
    }

    fn is_negligible(&self, tol: f64) -> bool {
        self.norm() <= tol
    }

    fn approx_eq(&self, other: &Self, rel_tol: f64) -> bool {
        let scale = 1.0f64.max(self.norm()).max(other.norm());
        (self - other).norm() <= rel_tol * scale
    }

    fn to_json_string(&self) -> (String, String) {
        (self.re.to_string(), self.im.to_string())
    }
}

impl Scalar for GaussRational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        GaussRational::new(BigRational::from_integer(v.into()), BigRational::zero())
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        GaussRational::new(
            BigRational::new(num.into(), den.into()),
            BigRational::zero(),
        )
    }

    fn from_parts(re: f64, im: f64) -> Option<Self> {
        Some(GaussRational::new(
            BigRational::from_float(re)?,
            BigRational::from_float(im)?,
        ))
    }

    fn from_rationals(re: &BigRational, im: &BigRational) -> Self {
        GaussRational::new(re.clone(), im.clone())
    }

    fn conj(&self) -> Self {
        GaussRational::new(self.re.clone(), -self.im.clone())
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    fn sqrt(&self) -> Option<Self> {
        gauss_sqrt(self)
    }

    fn cmp_modulus(&self, other: &Self) -> Ordering {
        self.norm_sqr().cmp(&other.norm_sqr())
    }

    fn is_negligible(&self, _tol: f64) -> bool {
        self.is_zero()
    }

    fn approx_eq(&self, other: &Self, _rel_tol: f64) -> bool {
        self == other
    }

    fn to_json_string(&self) -> (String, String) {
        (self.re.to_string(), self.im.to_string())
    }
}

/// Exact square root of a nonnegative rational, if it is rational.
pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer();
    let d = r.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

fn gauss_sqrt(z: &GaussRational) -> Option<GaussRational> {
    if z.is_zero() {
        return Some(GaussRational::zero());
    }
    let modulus = rational_sqrt(&z.norm_sqr())?;
    let two = BigRational::from_integer(BigInt::from(2));
    let x = rational_sqrt(&((&modulus + &z.re) / &two))?;
    let mut y = rational_sqrt(&((&modulus - &z.re) / &two))?;
    if z.im.is_negative() {
        y = -y;
    }
    Some(GaussRational::new(x, y))
}

/// Parses `"p/q"`, `"p"` or a plain decimal such as `"-1.25"` into an exact rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(BigRational::new(num, den));
    }
    if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        let mut num: BigInt = digits.parse().ok()?;
        if negative {
            num = -num;
        }
        let den = num_traits::pow(BigInt::from(10), frac.len());
        return Some(BigRational::new(num, den));
    }
    let num: BigInt = text.parse().ok()?;
    Some(BigRational::from_integer(num))
}

/// Gaussian rational from two small integer fractions, handy in tests.
pub fn gq(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> GaussRational {
    GaussRational::new(
        BigRational::new(re_num.into(), re_den.into()),
        BigRational::new(im_num.into(), im_den.into()),
    )
}

/// Real rational as a Gaussian rational.
pub fn gq_real(num: i64, den: i64) -> GaussRational {
    gq(num, den, 0, 1)
}
