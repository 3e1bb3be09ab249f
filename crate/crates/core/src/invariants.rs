//! Trace invariants `t_i`, `t_ij`, `t_ijk` of tuples in SL(2,C)^N and the
//! defining functions `pT_ij = tr([a_i,a_j]²)`, `pT_ijk = tr([a_i,a_j] a_k)`.
//!
//! Indices are 1-based and stored only in strictly increasing order.

use std::collections::BTreeMap;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::json::scalar_to_json;
use crate::lie::SL2CElement;
use crate::matrix::Mat2;
use crate::scalar::Scalar;
use crate::tolerance::Tolerance;

/// An ordered tuple `(a_1, …, a_N)` of unimodular matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct SL2CTuple<S> {
    entries: Vec<SL2CElement<S>>,
}

impl<S: Scalar> SL2CTuple<S> {
    pub fn new(entries: Vec<SL2CElement<S>>) -> Self {
        Self { entries }
    }

    pub fn from_matrices(mats: Vec<Mat2<S>>, tol: &Tolerance) -> Result<Self> {
        Ok(Self::new(
            mats.into_iter()
                .map(|m| SL2CElement::new(m, tol))
                .collect::<Result<_>>()?,
        ))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[SL2CElement<S>] {
        &self.entries
    }

    /// Entry `a_i` for 1-based `i`.
    pub fn get(&self, i: usize) -> Result<&Mat2<S>> {
        if i == 0 || i > self.len() {
            return Err(Error::Index(format!("index {i} outside 1..{}", self.len())));
        }
        Ok(self.entries[i - 1].matrix())
    }

    /// Diagonal conjugation `a_i ↦ g a_i g⁻¹`.
    pub fn conjugate_by(&self, g: &SL2CElement<S>) -> Self {
        Self::new(self.entries.iter().map(|a| a.conjugate_by(g)).collect())
    }
}

/// Validates a strictly increasing 1-based index list within `1..=n`.
pub fn check_indices(idx: &[usize], n: usize) -> Result<()> {
    if idx.iter().any(|&i| i == 0 || i > n) {
        return Err(Error::Index(format!("indices {idx:?} must lie in 1..{n}")));
    }
    if idx.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Index(format!("indices {idx:?} must be strictly increasing")));
    }
    Ok(())
}

fn tr2<S: Scalar>(a: &Mat2<S>, b: &Mat2<S>) -> S {
    (a * b).trace()
}

fn tr3<S: Scalar>(a: &Mat2<S>, b: &Mat2<S>, c: &Mat2<S>) -> S {
    (&(a * b) * c).trace()
}

/// `tr([a,b]²)`.
pub fn pt2_commutator_form<S: Scalar>(a: &Mat2<S>, b: &Mat2<S>) -> S {
    let c = a.commutator(b);
    (&c * &c).trace()
}

/// `tr([a,b] c)`.
pub fn pt3_commutator_form<S: Scalar>(a: &Mat2<S>, b: &Mat2<S>, c: &Mat2<S>) -> S {
    (&a.commutator(b) * c).trace()
}

/// `2(t_ij² − t_i t_j t_ij + t_i² + t_j² − 4)`.
pub fn pt2_from_traces<S: Scalar>(ti: &S, tj: &S, tij: &S) -> S {
    let two = S::from_i64(2);
    two * (tij.clone() * tij.clone() - ti.clone() * tj.clone() * tij.clone()
        + ti.clone() * ti.clone()
        + tj.clone() * tj.clone()
        - S::from_i64(4))
}

/// `2t_ijk − t_ij t_k − t_ik t_j − t_jk t_i + t_i t_j t_k`.
#[allow(clippy::too_many_arguments)]
pub fn pt3_from_traces<S: Scalar>(ti: &S, tj: &S, tk: &S, tij: &S, tik: &S, tjk: &S, tijk: &S) -> S {
    S::from_i64(2) * tijk.clone() - tij.clone() * tk.clone() - tik.clone() * tj.clone()
        - tjk.clone() * ti.clone()
        + ti.clone() * tj.clone() * tk.clone()
}

/// `pT_ij` through the trace expansion.
pub fn pt2_expanded<S: Scalar>(x: &SL2CTuple<S>, i: usize, j: usize) -> Result<S> {
    check_indices(&[i, j], x.len())?;
    let (a, b) = (x.get(i)?, x.get(j)?);
    Ok(pt2_from_traces(&a.trace(), &b.trace(), &tr2(a, b)))
}

/// `pT_ijk` through the trace expansion.
pub fn pt3_expanded<S: Scalar>(x: &SL2CTuple<S>, i: usize, j: usize, k: usize) -> Result<S> {
    check_indices(&[i, j, k], x.len())?;
    let (a, b, c) = (x.get(i)?, x.get(j)?, x.get(k)?);
    Ok(pt3_from_traces(
        &a.trace(),
        &b.trace(),
        &c.trace(),
        &tr2(a, b),
        &tr2(a, c),
        &tr2(b, c),
        &tr3(a, b, c),
    ))
}

/// `tr(abc) + tr(acb) − tr(ab)tr(c) − tr(ac)tr(b) − tr(bc)tr(a) + tr(a)tr(b)tr(c)`.
pub fn fundamental_identity_residual<S: Scalar>(a: &Mat2<S>, b: &Mat2<S>, c: &Mat2<S>) -> S {
    let (ta, tb, tc) = (a.trace(), b.trace(), c.trace());
    tr3(a, b, c) + tr3(a, c, b) - tr2(a, b) * tc.clone() - tr2(a, c) * tb.clone()
        - tr2(b, c) * ta.clone()
        + ta * tb * tc
}

/// `a² − tr(a)·a + 𝟙`.
pub fn cayley_hamilton_residual<S: Scalar>(a: &Mat2<S>) -> Mat2<S> {
    a * a - a.scale(&a.trace()) + Mat2::identity()
}

/// All trace invariants and defining functions of a tuple.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantTable<S> {
    pub n: usize,
    pub t1: BTreeMap<usize, S>,
    pub t2: BTreeMap<(usize, usize), S>,
    pub t3: BTreeMap<(usize, usize, usize), S>,
    pub pt2: BTreeMap<(usize, usize), S>,
    pub pt3: BTreeMap<(usize, usize, usize), S>,
}

/// Fills the table; `pT` entries use the commutator definitions.
pub fn trace_invariants<S: Scalar>(x: &SL2CTuple<S>) -> InvariantTable<S> {
    let n = x.len();
    let m: Vec<&Mat2<S>> = x.entries.iter().map(SL2CElement::matrix).collect();
    let mut table = InvariantTable {
        n,
        t1: BTreeMap::new(),
        t2: BTreeMap::new(),
        t3: BTreeMap::new(),
        pt2: BTreeMap::new(),
        pt3: BTreeMap::new(),
    };
    for i in 0..n {
        table.t1.insert(i + 1, m[i].trace());
        for j in i + 1..n {
            table.t2.insert((i + 1, j + 1), tr2(m[i], m[j]));
            table.pt2.insert((i + 1, j + 1), pt2_commutator_form(m[i], m[j]));
            for k in j + 1..n {
                table.t3.insert((i + 1, j + 1, k + 1), tr3(m[i], m[j], m[k]));
                table
                    .pt3
                    .insert((i + 1, j + 1, k + 1), pt3_commutator_form(m[i], m[j], m[k]));
            }
        }
    }
    table
}

impl<S: Scalar> InvariantTable<S> {
    fn stored_t1(&self, i: usize) -> Result<S> {
        self.t1
            .get(&i)
            .cloned()
            .ok_or_else(|| Error::Index(format!("index {i} outside 1..{}", self.n)))
    }

    /// `tr(a_i a_j)` for any `i, j`; `tr(a_i²) = t_i² − 2`.
    pub fn t_pair(&self, i: usize, j: usize) -> Result<S> {
        let ti = self.stored_t1(i)?;
        if i == j {
            return Ok(ti.clone() * ti - S::from_i64(2));
        }
        self.stored_t1(j)?;
        Ok(self.t2[&(i.min(j), i.max(j))].clone())
    }

    /// `tr(a_i a_j a_k)` for any order and repetitions, reduced to stored
    /// values by cyclicity, Cayley-Hamilton and the fundamental identity.
    pub fn t_triple(&self, i: usize, j: usize, k: usize) -> Result<S> {
        let (ti, tj, tk) = (self.stored_t1(i)?, self.stored_t1(j)?, self.stored_t1(k)?);
        if i == j && j == k {
            // tr(a³) = t³ − 3t
            return Ok(ti.clone() * ti.clone() * ti.clone() - S::from_i64(3) * ti);
        }
        // Rotate so that any repeated pair sits in front: tr(a a b) = t_a t_ab − t_b.
        let repeated = if i == j {
            Some((i, k))
        } else if j == k {
            Some((j, i))
        } else if i == k {
            Some((k, j))
        } else {
            None
        };
        if let Some((r, other)) = repeated {
            let tr = self.stored_t1(r)?;
            let to = self.stored_t1(other)?;
            return Ok(tr * self.t_pair(r, other)? - to);
        }
        let mut sorted = [i, j, k];
        sorted.sort_unstable();
        let stored = self.t3[&(sorted[0], sorted[1], sorted[2])].clone();
        let cyclic = [(i, j, k), (j, k, i), (k, i, j)]
            .contains(&(sorted[0], sorted[1], sorted[2]));
        if cyclic {
            return Ok(stored);
        }
        // tr(acb) = −tr(abc) + tr(ab)tr(c) + tr(ac)tr(b) + tr(bc)tr(a) − tr(a)tr(b)tr(c)
        Ok(-stored + self.t_pair(i, j)? * tk.clone() + self.t_pair(i, k)? * tj.clone()
            + self.t_pair(j, k)? * ti.clone()
            - ti * tj * tk)
    }

    /// `pT_ij` from the stored traces.
    pub fn pt2_from_table(&self, i: usize, j: usize) -> Result<S> {
        check_indices(&[i, j], self.n)?;
        Ok(pt2_from_traces(&self.t1[&i], &self.t1[&j], &self.t2[&(i, j)]))
    }

    /// `pT_ijk` from the stored traces.
    pub fn pt3_from_table(&self, i: usize, j: usize, k: usize) -> Result<S> {
        check_indices(&[i, j, k], self.n)?;
        Ok(pt3_from_traces(
            &self.t1[&i],
            &self.t1[&j],
            &self.t1[&k],
            &self.t2[&(i, j)],
            &self.t2[&(i, k)],
            &self.t2[&(j, k)],
            &self.t3[&(i, j, k)],
        ))
    }

    /// Entries as `(key, value)` in a fixed order: `t[i]`, `t[i,j]`,
    /// `t[i,j,k]`, `pT[i,j]`, `pT[i,j,k]`.
    pub fn entries(&self) -> Vec<(String, S)> {
        let mut out = Vec::new();
        out.extend(self.t1.iter().map(|(i, v)| (format!("t[{i}]"), v.clone())));
        out.extend(self.t2.iter().map(|((i, j), v)| (format!("t[{i},{j}]"), v.clone())));
        out.extend(
            self.t3
                .iter()
                .map(|((i, j, k), v)| (format!("t[{i},{j},{k}]"), v.clone())),
        );
        out.extend(self.pt2.iter().map(|((i, j), v)| (format!("pT[{i},{j}]"), v.clone())));
        out.extend(
            self.pt3
                .iter()
                .map(|((i, j, k), v)| (format!("pT[{i},{j},{k}]"), v.clone())),
        );
        out
    }

    /// Largest entrywise modulus difference; tables must have equal `n`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.entries()
            .iter()
            .zip(other.entries())
            .map(|((_, a), (_, b))| (a.to_c64() - b.to_c64()).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise difference relative to `max(1, |a|, |b|)`.
    pub fn max_rel_diff(&self, other: &Self) -> f64 {
        self.entries()
            .iter()
            .zip(other.entries())
            .map(|((_, a), (_, b))| {
                let (a, b) = (a.to_c64(), b.to_c64());
                (a - b).norm() / 1.0f64.max(a.norm()).max(b.norm())
            })
            .fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        for (key, value) in self.entries() {
            obj.insert(key, scalar_to_json(&value));
        }
        Value::Object(obj)
    }
}

fn is_small<S: Scalar>(s: &S) -> bool {
    s.is_negligible(crate::tolerance::DEFAULT_MATRIX_ABS)
}

/// `(diag(α,1/α), upper(β,γ), lower(δ,ε))` with `ε = −(β − 1/β)(δ − 1/δ)/γ`.
///
/// All three `pT_ij` vanish while `pT_123 = (α − 1/α)γε`, so the common zero
/// set of the `pT_ij` alone is strictly larger than the torus closure.
pub fn mixed_triangular_counterexample<S: Scalar>(
    alpha: &S,
    beta: &S,
    gamma: &S,
    delta: &S,
) -> Result<SL2CTuple<S>> {
    let one = S::one();
    if is_small(alpha) || is_small(&(alpha.clone() - one.clone())) || is_small(&(alpha.clone() + one.clone())) {
        return Err(Error::InvalidParams("alpha must avoid 0 and ±1".into()));
    }
    if is_small(beta) || is_small(gamma) || is_small(delta) {
        return Err(Error::InvalidParams("beta, gamma and delta must be nonzero".into()));
    }
    let inv = |s: &S| one.clone() / s.clone();
    let eps = -(beta.clone() - inv(beta)) * (delta.clone() - inv(delta)) / gamma.clone();
    let a = Mat2::diag(alpha.clone(), inv(alpha));
    let b = Mat2::new(beta.clone(), gamma.clone(), S::zero(), inv(beta));
    let c = Mat2::new(delta.clone(), S::zero(), eps, inv(delta));
    Ok(SL2CTuple::new(
        [a, b, c].into_iter().map(SL2CElement::new_unchecked).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gq, gq_real, GaussRational};
    use num_traits::{One, Zero};

    type Q = GaussRational;

    fn identity_tuple(n: usize) -> SL2CTuple<Q> {
        SL2CTuple::new(vec![SL2CElement::identity(); n])
    }

    #[test]
    fn identity_tuple_table() {
        let t = trace_invariants(&identity_tuple(3));
        let two = gq_real(2, 1);
        assert!(t.t1.values().chain(t.t2.values()).chain(t.t3.values()).all(|v| *v == two));
        assert!(t.pt2.values().chain(t.pt3.values()).all(Zero::is_zero));
        assert_eq!(t.entries().len(), 3 + 3 + 1 + 3 + 1);
        assert_eq!(pt2_expanded(&identity_tuple(2), 1, 2).unwrap(), Q::zero());
    }

    #[test]
    fn case_a_closed_form() {
        // a_i = diag(α, 1/α), a_j = [[b11, b12], [b21, b22]] with det 1
        let alpha = gq_real(3, 2);
        let (b11, b12, b21) = (gq(2, 1, 1, 1), gq_real(-1, 3), gq(0, 1, 5, 2));
        let b22 = (Q::one() + b12.clone() * b21.clone()) / b11.clone();
        let a = Mat2::diag(alpha.clone(), Q::one() / alpha.clone());
        let b = Mat2::new(b11, b12.clone(), b21.clone(), b22);
        let d = alpha.clone() - Q::one() / alpha;
        assert_eq!(
            pt2_commutator_form(&a, &b),
            gq_real(-2, 1) * d.clone() * d * b12 * b21
        );
    }

    #[test]
    fn case_b_closed_form() {
        for sign in [1, -1] {
            let a = Mat2::<Q>::from_i64(sign, 1, 0, sign);
            let (b11, b12, b21) = (gq_real(2, 1), gq(1, 3, 1, 1), gq_real(-7, 5));
            let b22 = (Q::one() + b12.clone() * b21.clone()) / b11.clone();
            let b = Mat2::new(b11, b12, b21.clone(), b22);
            assert_eq!(pt2_commutator_form(&a, &b), gq_real(2, 1) * b21.clone() * b21);
        }
    }

    #[test]
    fn expanded_forms_agree_exactly() {
        let x = SL2CTuple::from_matrices(
            vec![
                Mat2::from_i64(2, 1, 1, 1),
                Mat2::new(gq_real(1, 1), gq(0, 1, 1, 1), gq(0, 1, 2, 1), gq_real(-1, 1)),
                Mat2::from_i64(1, 0, 3, 1),
            ],
            &Tolerance::default(),
        )
        .unwrap();
        let t = trace_invariants(&x);
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            assert_eq!(pt2_expanded(&x, i, j).unwrap(), t.pt2[&(i, j)]);
            assert_eq!(t.pt2_from_table(i, j).unwrap(), t.pt2[&(i, j)]);
        }
        assert_eq!(pt3_expanded(&x, 1, 2, 3).unwrap(), t.pt3[&(1, 2, 3)]);
        assert_eq!(t.pt3_from_table(1, 2, 3).unwrap(), t.pt3[&(1, 2, 3)]);
    }

    #[test]
    fn unordered_accessors_match_direct_traces() {
        let mats = [
            Mat2::<Q>::from_i64(2, 1, 1, 1),
            Mat2::new(gq_real(1, 1), gq(0, 1, 1, 1), gq(0, 1, 2, 1), gq_real(-1, 1)),
            Mat2::from_i64(1, 0, 3, 1),
        ];
        let x = SL2CTuple::from_matrices(mats.to_vec(), &Tolerance::default()).unwrap();
        let t = trace_invariants(&x);
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(t.t_pair(i, j).unwrap(), tr2(&mats[i - 1], &mats[j - 1]));
                for k in 1..=3 {
                    assert_eq!(
                        t.t_triple(i, j, k).unwrap(),
                        tr3(&mats[i - 1], &mats[j - 1], &mats[k - 1]),
                        "({i},{j},{k})"
                    );
                }
            }
        }
    }

    #[test]
    fn index_validation() {
        let x = identity_tuple(3);
        assert!(matches!(pt2_expanded(&x, 2, 1), Err(Error::Index(_))));
        assert!(matches!(pt2_expanded(&x, 1, 4), Err(Error::Index(_))));
        assert!(matches!(pt3_expanded(&x, 1, 1, 2), Err(Error::Index(_))));
    }

    #[test]
    fn fundamental_and_cayley_hamilton_on_examples() {
        let id = Mat2::<Q>::identity();
        assert!(fundamental_identity_residual(&id, &id, &id).is_zero());
        let a = Mat2::diag(gq_real(5, 3), gq_real(3, 5));
        assert!(cayley_hamilton_residual(&a).is_zero_matrix());
        assert!(cayley_hamilton_residual(&id).is_zero_matrix());
    }

    #[test]
    fn counterexample_values() {
        let x = mixed_triangular_counterexample(&gq_real(2, 1), &gq_real(2, 1), &gq_real(1, 1), &gq_real(2, 1))
            .unwrap();
        assert_eq!(*x.get(3).unwrap().get(1, 0), gq_real(-9, 4));
        let t = trace_invariants(&x);
        assert!(t.pt2.values().all(Zero::is_zero));
        assert_eq!(t.pt3[&(1, 2, 3)], gq_real(-27, 8));

        let x = mixed_triangular_counterexample(&gq_real(3, 1), &Q::one(), &gq_real(5, 1), &Q::one()).unwrap();
        assert!(trace_invariants(&x).pt3[&(1, 2, 3)].is_zero());

        for bad in [Q::zero(), Q::one(), -Q::one()] {
            assert!(mixed_triangular_counterexample(&bad, &Q::one(), &Q::one(), &Q::one()).is_err());
        }
        assert!(mixed_triangular_counterexample(&gq_real(2, 1), &Q::one(), &Q::zero(), &Q::one()).is_err());
    }

    #[test]
    fn json_keys() {
        let v = trace_invariants(&identity_tuple(3)).to_json();
        assert_eq!(v["t[1,2,3]"]["re"], "2");
        assert_eq!(v["pT[1,3]"]["im"], "0");
    }
}
