//! The adapted basis `e_(I,K̂,∅) · p_(Ǩ,L)`, the split into ideal part and
//! complement, and the approximate multiplication formula for complement
//! basis elements.
//!
//! Adapted basis elements are indexed by the same `(I, K, L)` as monomials:
//! the element for `(I,K,L)` is `Π_I t_i · Π_K̂ t_ij · Π_Ǩ pT_ij · Π_L pT_ijk`
//! where `K = K̂ ⊔ Ǩ ⊔ Ǩ`. It lies in the ideal exactly when `|Ǩ| + |L| > 0`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::index::{index_product, pair_bar, pair_intersection, pair_xor, split_k, Monomial, XIndex};
use super::poly::{expand_pt2_unchecked, expand_pt3_unchecked, rat, TracePolynomial};

/// Coefficients with respect to the adapted basis.
pub type AdaptedPoly = BTreeMap<Monomial, BigRational>;

/// Whether the adapted basis element for this index lies in the ideal.
pub fn is_ideal_index(m: &Monomial) -> bool {
    !m.l.is_empty() || m.k.windows(2).any(|w| w[0] == w[1])
}

/// Expansion of one adapted basis element in monomials.
pub fn adapted_basis_element(index: &Monomial) -> TracePolynomial {
    let (hat, check) = split_k(&index.k);
    let mut p = TracePolynomial::monomial(Monomial {
        i: index.i.clone(),
        k: hat,
        l: Vec::new(),
    });
    for &pair in &check {
        p = &p * &expand_pt2_unchecked(pair);
    }
    for &triple in &index.l {
        p = &p * &expand_pt3_unchecked(triple);
    }
    p
}

/// `2^{|Ǩ| + |L|}`, the leading coefficient of an adapted basis element.
fn leading_scale(index: &Monomial) -> BigRational {
    let (_, check) = split_k(&index.k);
    num_traits::pow(rat(2, 1), check.len() + index.l.len())
}

/// Coordinates of `p` in the adapted basis.
///
/// Repeatedly takes a monomial of maximal `(|L|, |K|)`, records its
/// coefficient divided by the leading factor, and subtracts the
/// corresponding multiple of the basis element. The remainder only contains
/// monomials of strictly smaller measure, so the loop terminates.
pub fn to_adapted(p: &TracePolynomial) -> AdaptedPoly {
    let mut work = p.clone();
    let mut out = AdaptedPoly::new();
    while let Some(top) = work
        .terms()
        .keys()
        .max_by(|a, b| a.rewrite_measure().cmp(&b.rewrite_measure()).then(b.cmp(a)))
        .cloned()
    {
        let c = work.coefficient(&top) / leading_scale(&top);
        if !is_ideal_index(&top) {
            // complement basis elements are plain monomials
            work.add_term(top.clone(), -work.coefficient(&top));
        } else {
            work = &work - &adapted_basis_element(&top).scale(&c);
        }
        let slot = out.entry(top).or_insert_with(BigRational::zero);
        *slot += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Inverse of [`to_adapted`].
pub fn expand_adapted(a: &AdaptedPoly) -> TracePolynomial {
    let mut out = TracePolynomial::zero();
    for (index, c) in a {
        out = &out + &adapted_basis_element(index).scale(c);
    }
    out
}

/// Complement component `p_X`, as a polynomial in square-free-`K`, `L = ∅`
/// monomials.
pub fn x_part(p: &TracePolynomial) -> TracePolynomial {
    TracePolynomial::from_terms(
        to_adapted(p)
            .into_iter()
            .filter(|(m, _)| !is_ideal_index(m)),
    )
}

/// Ideal component `p − p_X`.
pub fn ideal_part(p: &TracePolynomial) -> TracePolynomial {
    p - &x_part(p)
}

pub fn ideal_member(p: &TracePolynomial) -> bool {
    x_part(p).is_zero()
}

/// Coefficients `f_(I,K)` of a complement element.
pub fn x_coefficients(p: &TracePolynomial) -> BTreeMap<XIndex, BigRational> {
    x_part(p)
        .terms()
        .iter()
        .map(|(m, c)| (m.as_x_index().expect("complement monomial"), c.clone()))
        .collect()
}

/// `b_(I,K)` as a polynomial.
pub fn b(index: &XIndex) -> TracePolynomial {
    TracePolynomial::monomial(index.monomial())
}

/// Decomposition `b_(I,K) b_(I′,K′) = b_((I,K)·(I′,K′)) + Q + R`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductDecomposition {
    pub leading: XIndex,
    /// Ideal part: every term carries at least one `pT` factor.
    pub q: TracePolynomial,
    /// Complement part of degree strictly below the leading term.
    pub r: TracePolynomial,
}

/// Splits the product of two complement basis elements by writing each common
/// squared pair as `t_ij² = ½pT_ij + t_i t_j t_ij + (−t_i² − t_j² + 4)`.
pub fn bx_multiply_decompose(x: &XIndex, y: &XIndex) -> ProductDecomposition {
    let common = pair_intersection(&x.k, &y.k);
    let mut base_i = x.i.clone();
    base_i.extend_from_slice(&y.i);
    let base = Monomial::new(base_i, pair_xor(&x.k, &y.k), Vec::new()).expect("valid indices");

    // Π t_ij² = Π (L + P + Rr); Π (L + Rr) drops every ideal factor P.
    let mut full = TracePolynomial::one();
    let mut without_ideal = TracePolynomial::one();
    for &(i, j) in &common {
        let lead = TracePolynomial::monomial(Monomial {
            i: vec![i, j],
            k: vec![(i, j)],
            l: vec![],
        });
        let rest = TracePolynomial::from_terms([
            (Monomial { i: vec![i, i], ..Monomial::one() }, rat(-1, 1)),
            (Monomial { i: vec![j, j], ..Monomial::one() }, rat(-1, 1)),
            (Monomial::one(), rat(4, 1)),
        ]);
        let ideal = expand_pt2_unchecked((i, j)).scale(&rat(1, 2));
        full = &full * &(&(&lead + &rest) + &ideal);
        without_ideal = &without_ideal * &(&lead + &rest);
    }
    let leading = index_product(x, y);
    let leading_part = TracePolynomial::monomial(Monomial {
        i: pair_bar(&common),
        k: common.clone(),
        l: vec![],
    });
    let one = BigRational::one();
    let q = (&full - &without_ideal).mul_term(&base, &one);
    let r = (&without_ideal - &leading_part).mul_term(&base, &one);
    ProductDecomposition { leading, q, r }
}
