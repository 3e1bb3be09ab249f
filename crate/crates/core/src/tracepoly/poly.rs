//! Exact linear combinations of monomials `e_(I,K,L)` with rational
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::index::{check_pair, check_triple, DegreeVector, Monomial, Pair, Triple};
use crate::error::{Error, Result};
use crate::invariants::{trace_invariants, SL2CTuple};
use crate::scalar::Scalar;

/// `Σ c_m · m` with no zero coefficient stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TracePolynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl TracePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(BigRational::one(), m)
    }

    /// The variable `t_i`.
    pub fn t1(i: usize) -> Result<Self> {
        Ok(Self::monomial(Monomial::new(vec![i], vec![], vec![])?))
    }

    /// The variable `t_ij`, `i < j`.
    pub fn t2(i: usize, j: usize) -> Result<Self> {
        check_pair((i, j))?;
        Ok(Self::monomial(Monomial::new(vec![], vec![(i, j)], vec![])?))
    }

    /// The variable `t_ijk`, `i < j < k`.
    pub fn t3(i: usize, j: usize, k: usize) -> Result<Self> {
        check_triple((i, j, k))?;
        Ok(Self::monomial(Monomial::new(vec![], vec![], vec![(i, j, k)])?))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// `self · c · m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(x, d)| (x.mul(m), d * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Largest index used, or 0 for constants.
    pub fn max_index(&self) -> usize {
        self.terms.keys().map(Monomial::max_index).max().unwrap_or(0)
    }

    /// Lexicographic maximum of the term degrees; `None` for the zero polynomial.
    pub fn degree(&self, n: usize) -> Result<Option<DegreeVector>> {
        let mut best: Option<DegreeVector> = None;
        for m in self.terms.keys() {
            let d = m.degree(n)?;
            if best.as_ref().is_none_or(|b| d > *b) {
                best = Some(d);
            }
        }
        Ok(best)
    }

    /// Terms in display order: higher total degree first, then monomial order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| b.total_degree().cmp(&a.total_degree()).then(a.cmp(b)));
        v
    }
}

impl Add for &TracePolynomial {
    type Output = TracePolynomial;

    fn add(self, rhs: &TracePolynomial) -> TracePolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &TracePolynomial {
    type Output = TracePolynomial;

    fn sub(self, rhs: &TracePolynomial) -> TracePolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &TracePolynomial {
    type Output = TracePolynomial;

    fn mul(self, rhs: &TracePolynomial) -> TracePolynomial {
        let mut out = TracePolynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl Neg for &TracePolynomial {
    type Output = TracePolynomial;

    fn neg(self) -> TracePolynomial {
        self.scale(&-BigRational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for TracePolynomial {
            type Output = TracePolynomial;

            fn $f(self, rhs: TracePolynomial) -> TracePolynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn format_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for TracePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

/// `pT_ij = 2t_ij² − 2t_i t_j t_ij + 2t_i² + 2t_j² − 8`.
pub fn expand_pt2(i: usize, j: usize) -> Result<TracePolynomial> {
    check_pair((i, j))?;
    Ok(expand_pt2_unchecked((i, j)))
}

pub(crate) fn expand_pt2_unchecked((i, j): Pair) -> TracePolynomial {
    let m = |ii: Vec<usize>, kk: Vec<Pair>| Monomial {
        i: ii,
        k: kk,
        l: Vec::new(),
    };
    TracePolynomial::from_terms([
        (m(vec![], vec![(i, j), (i, j)]), rat(2, 1)),
        (m(vec![i, j], vec![(i, j)]), rat(-2, 1)),
        (m(vec![i, i], vec![]), rat(2, 1)),
        (m(vec![j, j], vec![]), rat(2, 1)),
        (m(vec![], vec![]), rat(-8, 1)),
    ])
}

/// `pT_ijk = 2t_ijk − t_ij t_k − t_ik t_j − t_jk t_i + t_i t_j t_k`.
pub fn expand_pt3(i: usize, j: usize, k: usize) -> Result<TracePolynomial> {
    check_triple((i, j, k))?;
    Ok(expand_pt3_unchecked((i, j, k)))
}

pub(crate) fn expand_pt3_unchecked((i, j, k): Triple) -> TracePolynomial {
    let m = |ii: Vec<usize>, kk: Vec<Pair>, ll: Vec<Triple>| Monomial { i: ii, k: kk, l: ll };
    TracePolynomial::from_terms([
        (m(vec![], vec![], vec![(i, j, k)]), rat(2, 1)),
        (m(vec![k], vec![(i, j)], vec![]), rat(-1, 1)),
        (m(vec![j], vec![(i, k)], vec![]), rat(-1, 1)),
        (m(vec![i], vec![(j, k)], vec![]), rat(-1, 1)),
        (m(vec![i, j, k], vec![], vec![]), rat(1, 1)),
    ])
}

/// Substitutes the trace values of `x`; exact when `x` is exact.
pub fn eval_poly<S: Scalar>(p: &TracePolynomial, x: &SL2CTuple<S>) -> Result<S> {
    let n = x.len();
    if p.max_index() > n {
        return Err(Error::Index(format!(
            "polynomial uses index {} but the tuple has {n} entries",
            p.max_index()
        )));
    }
    let table = trace_invariants(x);
    let zero = BigRational::zero();
    let mut total = S::zero();
    for (m, c) in p.terms() {
        let mut v = S::from_rationals(c, &zero);
        for i in &m.i {
            v = v * table.t1[i].clone();
        }
        for pair in &m.k {
            v = v * table.t2[pair].clone();
        }
        for triple in &m.l {
            v = v * table.t3[triple].clone();
        }
        total = total + v;
    }
    Ok(total)
}

/// Random polynomial in indices `1..=n` with at most `max_terms` terms, each of
/// total degree at most `max_degree`, and small rational coefficients.
pub fn random_poly(rng: &mut impl Rng, n: usize, max_degree: usize, max_terms: usize) -> TracePolynomial {
    let mut p = TracePolynomial::zero();
    let terms = rng.random_range(1..=max_terms.max(1));
    for _ in 0..terms {
        let m = random_monomial(rng, n, max_degree);
        let num: i64 = rng.random_range(-5..=5);
        let den: i64 = rng.random_range(1..=4);
        p.add_term(m, rat(num, den));
    }
    p
}

/// Random monomial of total degree at most `max_degree`.
pub fn random_monomial(rng: &mut impl Rng, n: usize, max_degree: usize) -> Monomial {
    let budget = rng.random_range(0..=max_degree);
    let mut used = 0;
    let mut m = Monomial::one();
    let mut stalls = 0;
    while used < budget && stalls < 8 {
        let kind = rng.random_range(0..3usize);
        let cost = kind + 1;
        if used + cost > budget || cost > n {
            stalls += 1;
            continue;
        }
        let mut idx: Vec<usize> = rand::seq::index::sample(rng, n, cost)
            .into_iter()
            .map(|x| x + 1)
            .collect();
        idx.sort_unstable();
        let factor = match kind {
            0 => Monomial { i: idx, ..Monomial::one() },
            1 => Monomial { k: vec![(idx[0], idx[1])], ..Monomial::one() },
            _ => Monomial { l: vec![(idx[0], idx[1], idx[2])], ..Monomial::one() },
        };
        m = m.mul(&factor);
        used += cost;
    }
    m
}
