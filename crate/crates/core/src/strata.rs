//! Orbit types of phase points, stratum membership of tuples in SL(2,C)^N,
//! constructive orbit-closure witnesses and the partial order of strata.
//!
//! A phase point has orbit type G (all `a_i` central and all `A_i` zero), T
//! (everything commutes, so the point is conjugate into the torus) or Z
//! (everything else). On the complexified side the closure of the torus
//! stratum is cut out by the vanishing of every `pT_ij` and `pT_ijk`.

use std::cmp::Ordering;

use rand::Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::invariants::{trace_invariants, SL2CTuple};
use crate::json::tuple_to_json;
use crate::lattice::PhasePoint;
use crate::lie::SL2CElement;
use crate::matrix::{CMat2, Mat2};
use crate::scalar::Scalar;
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum StratumLabel {
    /// Orbit type G: the central point `(ν_1 𝟙, …, ν_N 𝟙; 0, …, 0)`.
    Point(Vec<i8>),
    /// Orbit type T.
    Torus,
    /// Orbit type Z.
    Principal,
}

impl StratumLabel {
    pub fn name(&self) -> &'static str {
        match self {
            StratumLabel::Point(_) => "point",
            StratumLabel::Torus => "torus",
            StratumLabel::Principal => "principal",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            StratumLabel::Point(nu) => json!({ "stratum": "point", "nu": nu }),
            other => json!({ "stratum": other.name() }),
        }
    }
}

/// Outcome of comparing two strata in the frontier order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HasseRelation {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl HasseRelation {
    pub fn name(self) -> &'static str {
        match self {
            HasseRelation::Less => "less",
            HasseRelation::Greater => "greater",
            HasseRelation::Equal => "equal",
            HasseRelation::Incomparable => "incomparable",
        }
    }
}

/// Point strata lie below the torus stratum, which lies below the principal
/// one; distinct point strata are incomparable.
pub fn hasse_order(s1: &StratumLabel, s2: &StratumLabel) -> Result<HasseRelation> {
    use StratumLabel::*;
    let rank = |s: &StratumLabel| match s {
        Point(_) => 0,
        Torus => 1,
        Principal => 2,
    };
    if let (Point(a), Point(b)) = (s1, s2) {
        if a.len() != b.len() {
            return Err(Error::InvalidParams(format!(
                "point strata of different lengths {} and {}",
                a.len(),
                b.len()
            )));
        }
        return Ok(if a == b {
            HasseRelation::Equal
        } else {
            HasseRelation::Incomparable
        });
    }
    Ok(match rank(s1).cmp(&rank(s2)) {
        Ordering::Less => HasseRelation::Less,
        Ordering::Greater => HasseRelation::Greater,
        Ordering::Equal => HasseRelation::Equal,
    })
}

/// `Some(±1)` when `a = ±𝟙` (exactly, or within `tol` in Frobenius norm).
pub fn central_sign<S: Scalar>(a: &Mat2<S>, tol: f64) -> Option<i8> {
    let id = Mat2::<S>::identity();
    if (a.clone() - id.clone()).is_negligible(tol) {
        Some(1)
    } else if (a.clone() + id).is_negligible(tol) {
        Some(-1)
    } else {
        None
    }
}

/// Orbit type of a phase point under diagonal SU(2) conjugation.
pub fn orbit_type(p: &PhasePoint, tol: &Tolerance) -> StratumLabel {
    let eps = tol.matrix_abs;
    let signs: Option<Vec<i8>> = p.a.iter().map(|a| central_sign(a.matrix(), eps)).collect();
    if let Some(nu) = signs {
        if p.alg.iter().all(|x| x.norm() <= eps) {
            return StratumLabel::Point(nu);
        }
    }
    let mats: Vec<CMat2> = p
        .a
        .iter()
        .map(|a| a.matrix().clone())
        .chain(p.alg.iter().map(|x| x.matrix()))
        .collect();
    let commuting = mats.iter().enumerate().all(|(i, x)| {
        mats[i + 1..]
            .iter()
            .all(|y| x.commutator(y).is_negligible(eps))
    });
    if commuting {
        StratumLabel::Torus
    } else {
        StratumLabel::Principal
    }
}

/// Whether every `pT_ij` and `pT_ijk` vanishes (exactly, or with modulus at
/// most `tol`).
pub fn in_t_closure<S: Scalar>(x: &SL2CTuple<S>, tol: f64) -> bool {
    let table = trace_invariants(x);
    table
        .pt2
        .values()
        .chain(table.pt3.values())
        .all(|v| v.is_negligible(tol))
}

/// Membership in the closure of the point stratum labelled `nu`:
/// torus closure plus `tr(a_i) = 2ν_i`.
pub fn in_nu_stratum<S: Scalar>(x: &SL2CTuple<S>, nu: &[i8], tol: f64) -> Result<bool> {
    if nu.len() != x.len() {
        return Err(Error::InvalidParams(format!(
            "nu has length {} but the tuple has {} entries",
            nu.len(),
            x.len()
        )));
    }
    if nu.iter().any(|&s| s != 1 && s != -1) {
        return Err(Error::InvalidParams("nu entries must be +1 or -1".into()));
    }
    let traces_match = x
        .entries()
        .iter()
        .zip(nu)
        .all(|(a, &s)| (a.matrix().trace() - S::from_i64(2 * s as i64)).is_negligible(tol));
    Ok(traces_match && in_t_closure(x, tol))
}

/// Classification of a tuple in SL(2,C)^N.
#[derive(Debug, Clone, PartialEq)]
pub struct TupleClass {
    pub label: StratumLabel,
    pub in_t_closure: bool,
    /// Torus closure but no point stratum.
    pub open_t: bool,
    pub exact: bool,
}

impl TupleClass {
    pub fn qualifiers(&self) -> Vec<&'static str> {
        let mut q = Vec::new();
        if self.in_t_closure {
            q.push("in-closure-T");
        }
        if self.open_t {
            q.push("open-T");
        }
        if !self.exact {
            q.push("float-tolerance");
        }
        q
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.label.to_json();
        v["qualifiers"] = json!(self.qualifiers());
        v
    }
}

/// The smallest stratum closure containing the tuple.
pub fn classify_tuple<S: Scalar>(x: &SL2CTuple<S>, tol: f64) -> TupleClass {
    let closure = in_t_closure(x, tol);
    let nu: Option<Vec<i8>> = x
        .entries()
        .iter()
        .map(|a| {
            let t = a.matrix().trace();
            if (t.clone() - S::from_i64(2)).is_negligible(tol) {
                Some(1)
            } else if (t + S::from_i64(2)).is_negligible(tol) {
                Some(-1)
            } else {
                None
            }
        })
        .collect();
    let label = match (closure, nu) {
        (true, Some(nu)) => StratumLabel::Point(nu),
        (true, None) => StratumLabel::Torus,
        (false, _) => StratumLabel::Principal,
    };
    TupleClass {
        open_t: label == StratumLabel::Torus,
        label,
        in_t_closure: closure,
        exact: S::EXACT,
    }
}

/// How the first non-central entry was normalized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessCase {
    /// Every entry is central; the tuple is its own limit.
    Central,
    /// Distinct eigenvalues: the entry is diagonalized.
    Diagonalizable,
    /// A single eigenvalue ±1 with a nontrivial Jordan block.
    Unipotent,
}

impl WitnessCase {
    pub fn name(self) -> &'static str {
        match self {
            WitnessCase::Central => "central",
            WitnessCase::Diagonalizable => "diagonalizable",
            WitnessCase::Unipotent => "unipotent",
        }
    }
}

/// Conjugator `c` such that every `c a_i c⁻¹` is upper triangular, together
/// with the diagonal limit of `diag(1/n, n) c a_i c⁻¹ diag(n, 1/n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosureWitness<S> {
    pub conjugator: SL2CElement<S>,
    pub conjugated: SL2CTuple<S>,
    pub diagonal_limit: SL2CTuple<S>,
    pub case: WitnessCase,
    /// 1-based index of the entry used to fix the basis.
    pub pivot: Option<usize>,
}

pub const SCALING_DESCRIPTION: &str =
    "diag(1/n, n) · (c a_i c⁻¹) · diag(n, 1/n) keeps the diagonal and multiplies the upper-right entry by 1/n², converging to diagonal_limit as n → ∞";

impl<S: Scalar> ClosureWitness<S> {
    /// The tuple `diag(1/n, n) · c a_i c⁻¹ · diag(n, 1/n)`.
    pub fn scaled(&self, n: &S) -> SL2CTuple<S> {
        let d = SL2CElement::new_unchecked(Mat2::diag(S::one() / n.clone(), n.clone()));
        self.conjugated.conjugate_by(&d)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "case": self.case.name(),
            "pivot": self.pivot,
            "conjugator": crate::json::matrix_to_json(self.conjugator.matrix()),
            "conjugated": tuple_to_json(self.conjugated.entries()),
            "diagonal_limit": tuple_to_json(self.diagonal_limit.entries()),
            "scaling": SCALING_DESCRIPTION,
        })
    }
}

fn negligible_rel<S: Scalar>(s: &S, scale: f64, tol: f64) -> bool {
    if S::EXACT {
        s.is_zero()
    } else {
        s.to_c64().norm() <= tol * scale.max(1.0)
    }
}

/// Sort key for eigenvalues: larger modulus first, then smaller argument.
fn eigen_order<S: Scalar>(l1: &S, l2: &S) -> Ordering {
    match l2.cmp_modulus(l1) {
        Ordering::Equal => {
            let (a1, a2) = (l1.to_c64().arg(), l2.to_c64().arg());
            a1.partial_cmp(&a2).unwrap_or(Ordering::Equal)
        }
        other => other,
    }
}

/// Nonzero vector in the kernel of the rank-one matrix `a − λ𝟙`.
fn eigenvector<S: Scalar>(a: &Mat2<S>, lambda: &S) -> [S; 2] {
    let [[p, q], [r, s]] = a.m.clone();
    let v1 = [q.clone(), lambda.clone() - p];
    let v2 = [lambda.clone() - s, r];
    let n1 = v1[0].to_c64().norm_sqr() + v1[1].to_c64().norm_sqr();
    let n2 = v2[0].to_c64().norm_sqr() + v2[1].to_c64().norm_sqr();
    let nonzero = |v: &[S; 2]| !(v[0].is_zero() && v[1].is_zero());
    if S::EXACT {
        if nonzero(&v1) {
            v1
        } else {
            v2
        }
    } else if n1 >= n2 {
        v1
    } else {
        v2
    }
}

/// Unimodular matrix with first column `v`.
fn complete_to_unimodular<S: Scalar>(v: [S; 2]) -> Mat2<S> {
    let [p, q] = v;
    if p.cmp_modulus(&q) != Ordering::Less {
        let w = S::one() / p.clone();
        Mat2::new(p, S::zero(), q, w)
    } else {
        let w = -(S::one() / q.clone());
        Mat2::new(p, w, q, S::zero())
    }
}

/// Basis matrix `P` (unimodular) with `P⁻¹ a P` upper triangular, or diagonal
/// when `a` has distinct eigenvalues.
fn jordan_basis<S: Scalar>(a: &Mat2<S>, tol: f64) -> Result<(Mat2<S>, WitnessCase)> {
    let t = a.trace();
    let disc = t.clone() * t.clone() - S::from_i64(4);
    let scale = t.to_c64().norm_sqr();
    if negligible_rel(&disc, scale, tol) {
        let lambda = t / S::from_i64(2);
        return Ok((complete_to_unimodular(eigenvector(a, &lambda)), WitnessCase::Unipotent));
    }
    let root = disc.sqrt().ok_or_else(|| {
        Error::NotRepresentable(format!(
            "eigenvalues of an entry need the square root of {disc:?}"
        ))
    })?;
    let two = S::from_i64(2);
    let mut l1 = (t.clone() + root.clone()) / two.clone();
    let mut l2 = (t - root) / two;
    if eigen_order(&l1, &l2) == Ordering::Greater {
        std::mem::swap(&mut l1, &mut l2);
    }
    let [p1, q1] = eigenvector(a, &l1);
    let [p2, q2] = eigenvector(a, &l2);
    let det = p1.clone() * q2.clone() - p2.clone() * q1.clone();
    Ok((
        Mat2::new(p1, p2 / det.clone(), q1, q2 / det),
        WitnessCase::Diagonalizable,
    ))
}

/// Orbit-closure witness for a tuple in the torus closure.
pub fn closure_witness<S: Scalar>(x: &SL2CTuple<S>, tol: f64) -> Result<ClosureWitness<S>> {
    if !in_t_closure(x, tol) {
        return Err(Error::NotInClosure(
            "some pT_ij or pT_ijk does not vanish".into(),
        ));
    }
    let pivot = x
        .entries()
        .iter()
        .position(|a| central_sign(a.matrix(), tol).is_none());
    let Some(pivot) = pivot else {
        return Ok(ClosureWitness {
            conjugator: SL2CElement::identity(),
            conjugated: x.clone(),
            diagonal_limit: x.clone(),
            case: WitnessCase::Central,
            pivot: None,
        });
    };
    let (basis, case) = jordan_basis(x.entries()[pivot].matrix(), tol)?;
    let mut conj = SL2CElement::new_unchecked(basis.adjugate());
    let mut y = x.conjugate_by(&conj);

    let lower_part = |m: &Mat2<S>| negligible_rel(m.get(1, 0), m.norm(), tol);
    let upper_part = |m: &Mat2<S>| negligible_rel(m.get(0, 1), m.norm(), tol);
    let all_upper = y.entries().iter().all(|a| lower_part(a.matrix()));
    if !all_upper {
        if !y.entries().iter().all(|a| upper_part(a.matrix())) {
            return Err(Error::NotInClosure(
                "conjugated entries are not simultaneously triangular".into(),
            ));
        }
        let swap = SL2CElement::new_unchecked(Mat2::from_i64(0, 1, -1, 0));
        conj = swap.mul(&conj);
        y = y.conjugate_by(&swap);
    }
    let diagonal_limit = SL2CTuple::new(
        y.entries()
            .iter()
            .map(|a| {
                let m = a.matrix();
                SL2CElement::new_unchecked(Mat2::diag(m.get(0, 0).clone(), m.get(1, 1).clone()))
            })
            .collect(),
    );
    Ok(ClosureWitness {
        conjugator: conj,
        conjugated: y,
        diagonal_limit,
        case,
        pivot: Some(pivot + 1),
    })
}

/// Random upper (or lower) triangular exact unimodular tuple.
pub fn random_exact_triangular_tuple(
    rng: &mut impl Rng,
    n: usize,
    lower: bool,
) -> SL2CTuple<crate::scalar::GaussRational> {
    use crate::sampling::{random_gauss_rational, random_nonzero_gauss_rational};
    use crate::scalar::GaussRational;
    SL2CTuple::new(
        (0..n)
            .map(|_| {
                let d = random_nonzero_gauss_rational(rng);
                let off = random_gauss_rational(rng);
                let inv = GaussRational::from_i64(1) / d.clone();
                let z = GaussRational::from_i64(0);
                let m = if lower {
                    Mat2::new(d, z, off, inv)
                } else {
                    Mat2::new(d, off, z, inv)
                };
                SL2CElement::new_unchecked(m)
            })
            .collect(),
    )
}

/// Random exact diagonal tuple conjugated by one random exact unimodular `g`.
pub fn random_exact_conjugated_diagonal(
    rng: &mut impl Rng,
    n: usize,
) -> (SL2CTuple<crate::scalar::GaussRational>, SL2CTuple<crate::scalar::GaussRational>) {
    use crate::sampling::{random_exact_sl2c, random_nonzero_gauss_rational};
    use crate::scalar::GaussRational;
    let diag = SL2CTuple::new(
        (0..n)
            .map(|_| {
                let d = random_nonzero_gauss_rational(rng);
                let inv = GaussRational::from_i64(1) / d.clone();
                SL2CElement::new_unchecked(Mat2::diag(d, inv))
            })
            .collect(),
    );
    let g = random_exact_sl2c(rng);
    (diag.conjugate_by(&g), diag)
}

/// Float counterpart of [`random_exact_conjugated_diagonal`] with diagonal
/// entries `exp(z)` for `|z| ≤ 1` and a conjugator of entry size at most `bound`.
pub fn random_float_conjugated_diagonal(
    rng: &mut impl Rng,
    n: usize,
    bound: f64,
) -> (SL2CTuple<num_complex::Complex64>, SL2CTuple<num_complex::Complex64>) {
    use num_complex::Complex64;
    let diag = SL2CTuple::new(
        (0..n)
            .map(|_| {
                let z = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
                SL2CElement::new_unchecked(Mat2::diag(z.exp(), (-z).exp()))
            })
            .collect(),
    );
    let g = crate::sampling::random_sl2c(rng, bound);
    (diag.conjugate_by(&g), diag)
}
