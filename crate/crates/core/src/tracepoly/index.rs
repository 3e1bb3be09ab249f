//! Index sequences, monomials `e_(I,K,L)`, the product on `(I,K)` indices and
//! degree vectors.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Strictly increasing pair `(i, j)`, 1-based.
pub type Pair = (usize, usize);
/// Strictly increasing triple `(i, j, k)`, 1-based.
pub type Triple = (usize, usize, usize);

pub fn check_pair(p: Pair) -> Result<Pair> {
    if p.0 == 0 || p.0 >= p.1 {
        return Err(Error::Index(format!(
            "pair ({}, {}) must be strictly increasing and 1-based",
            p.0, p.1
        )));
    }
    Ok(p)
}

pub fn check_triple(t: Triple) -> Result<Triple> {
    if t.0 == 0 || t.0 >= t.1 || t.1 >= t.2 {
        return Err(Error::Index(format!(
            "triple ({}, {}, {}) must be strictly increasing and 1-based",
            t.0, t.1, t.2
        )));
    }
    Ok(t)
}

/// The monomial `e_(I,K,L) = Π_I t_i · Π_K t_ij · Π_L t_ijk` in canonical
/// (sorted) form. Repeats are allowed in all three sequences.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    pub i: Vec<usize>,
    pub k: Vec<Pair>,
    pub l: Vec<Triple>,
}

impl Monomial {
    /// Sorts the sequences; validates every index.
    pub fn new(mut i: Vec<usize>, mut k: Vec<Pair>, mut l: Vec<Triple>) -> Result<Self> {
        if i.contains(&0) {
            return Err(Error::Index("single indices are 1-based".into()));
        }
        for &p in &k {
            check_pair(p)?;
        }
        for &t in &l {
            check_triple(t)?;
        }
        i.sort_unstable();
        k.sort_unstable();
        l.sort_unstable();
        Ok(Self { i, k, l })
    }

    pub fn one() -> Self {
        Self::default()
    }

    pub fn is_one(&self) -> bool {
        self.i.is_empty() && self.k.is_empty() && self.l.is_empty()
    }

    /// Free commutative product: sorted concatenation.
    pub fn mul(&self, other: &Self) -> Self {
        Self {
            i: merge(&self.i, &other.i),
            k: merge(&self.k, &other.k),
            l: merge(&self.l, &other.l),
        }
    }

    /// The length `(|K|, |L|)`, compared here with `|L|` first; every rewrite
    /// step strictly decreases it.
    pub fn rewrite_measure(&self) -> (usize, usize) {
        (self.l.len(), self.k.len())
    }

    /// Largest index appearing anywhere, or 0 for the constant monomial.
    pub fn max_index(&self) -> usize {
        let a = self.i.iter().copied().max().unwrap_or(0);
        let b = self.k.iter().map(|p| p.1).max().unwrap_or(0);
        let c = self.l.iter().map(|t| t.2).max().unwrap_or(0);
        a.max(b).max(c)
    }

    /// Number of occurrences of each index `1..=n` across `I`, `K` and `L`.
    pub fn degree(&self, n: usize) -> Result<DegreeVector> {
        let mut d = vec![0; n];
        let mut bump = |x: usize| -> Result<()> {
            match d.get_mut(x.wrapping_sub(1)) {
                Some(slot) => {
                    *slot += 1;
                    Ok(())
                }
                None => Err(Error::Index(format!("index {x} exceeds N = {n}"))),
            }
        };
        for &x in &self.i {
            bump(x)?;
        }
        for &(a, b) in &self.k {
            bump(a)?;
            bump(b)?;
        }
        for &(a, b, c) in &self.l {
            bump(a)?;
            bump(b)?;
            bump(c)?;
        }
        Ok(DegreeVector(d))
    }

    /// Total number of indices, the sum of the degree vector.
    pub fn total_degree(&self) -> usize {
        self.i.len() + 2 * self.k.len() + 3 * self.l.len()
    }

    /// `Some((I, K))` when `L = ∅` and `K` has no repeated pair.
    pub fn as_x_index(&self) -> Option<XIndex> {
        if !self.l.is_empty() || self.k.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(XIndex {
            i: self.i.clone(),
            k: self.k.clone(),
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors: Vec<String> = Vec::new();
        let mut push = |name: String, count: usize| {
            if count == 1 {
                factors.push(name);
            } else {
                factors.push(format!("{name}^{count}"));
            }
        };
        for (x, c) in runs(&self.i) {
            push(format!("t[{x}]"), c);
        }
        for ((a, b), c) in runs(&self.k) {
            push(format!("t[{a},{b}]"), c);
        }
        for ((a, b, cc), c) in runs(&self.l) {
            push(format!("t[{a},{b},{cc}]"), c);
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

/// Consecutive runs of equal elements with their lengths.
pub(crate) fn runs<T: PartialEq + Copy>(seq: &[T]) -> Vec<(T, usize)> {
    let mut out: Vec<(T, usize)> = Vec::new();
    for &x in seq {
        match out.last_mut() {
            Some((y, c)) if *y == x => *c += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

fn merge<T: Ord + Copy>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        if a[x] <= b[y] {
            out.push(a[x]);
            x += 1;
        } else {
            out.push(b[y]);
            y += 1;
        }
    }
    out.extend_from_slice(&a[x..]);
    out.extend_from_slice(&b[y..]);
    out
}

/// Splits `K` into `K̂` (one copy of every pair of odd multiplicity) and `Ǩ`
/// (half of the remaining copies), so that `K = K̂ ⊔ Ǩ ⊔ Ǩ`.
pub fn split_k(k: &[Pair]) -> (Vec<Pair>, Vec<Pair>) {
    let mut sorted = k.to_vec();
    sorted.sort_unstable();
    let mut hat = Vec::new();
    let mut check = Vec::new();
    for (p, count) in runs(&sorted) {
        if count % 2 == 1 {
            hat.push(p);
        }
        check.extend(std::iter::repeat_n(p, count / 2));
    }
    (hat, check)
}

/// Degree vector `(deg_1, …, deg_N)`, compared lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeVector(pub Vec<usize>);

impl DegreeVector {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn double(&self) -> Self {
        self.add(self)
    }

    /// Componentwise `≤` (not the lexicographic order).
    pub fn le_componentwise(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// All `μ′` with `0 ≤ μ′ ≤ self` componentwise.
    pub fn below(&self) -> Vec<DegreeVector> {
        let mut out = vec![Vec::new()];
        for &m in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=m).map(move |x| {
                        let mut v = prefix.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(DegreeVector).collect()
    }

    /// Pads with zeros to length `n`; fails if nonzero entries would be cut.
    pub fn padded(&self, n: usize) -> Result<Self> {
        if self.0.len() > n && self.0[n..].iter().any(|&x| x > 0) {
            return Err(Error::InvalidParams(format!(
                "degree {:?} has nonzero entries beyond N = {n}",
                self.0
            )));
        }
        let mut v = self.0.clone();
        v.resize(n, 0);
        Ok(Self(v))
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An index `(I, K)` of the basis element `b_(I,K) = e_(I,K,∅)` of the
/// complement: `I` weakly increasing, `K` a set of strict pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct XIndex {
    pub i: Vec<usize>,
    pub k: Vec<Pair>,
}

impl XIndex {
    pub fn new(mut i: Vec<usize>, mut k: Vec<Pair>) -> Result<Self> {
        if i.contains(&0) {
            return Err(Error::Index("single indices are 1-based".into()));
        }
        for &p in &k {
            check_pair(p)?;
        }
        i.sort_unstable();
        k.sort_unstable();
        if k.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Index("K must not repeat a pair".into()));
        }
        Ok(Self { i, k })
    }

    pub fn monomial(&self) -> Monomial {
        Monomial {
            i: self.i.clone(),
            k: self.k.clone(),
            l: Vec::new(),
        }
    }

    pub fn degree(&self, n: usize) -> Result<DegreeVector> {
        self.monomial().degree(n)
    }
}

impl fmt::Display for XIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i: Vec<String> = self.i.iter().map(ToString::to_string).collect();
        let k: Vec<String> = self.k.iter().map(|(a, b)| format!("({a},{b})")).collect();
        write!(f, "(({}), ({}))", i.join(","), k.join(","))
    }
}

fn intersect(a: &[Pair], b: &[Pair]) -> Vec<Pair> {
    a.iter().filter(|p| b.binary_search(p).is_ok()).copied().collect()
}

/// `K ∩ K′` for strict pair sets.
pub fn pair_intersection(a: &[Pair], b: &[Pair]) -> Vec<Pair> {
    intersect(a, b)
}

/// `K ∪ K′`, each common pair once.
pub fn pair_union(a: &[Pair], b: &[Pair]) -> Vec<Pair> {
    let mut out = merge(a, b);
    out.dedup();
    out
}

/// Exclusive union `(K ∖ K′) ∪ (K′ ∖ K)`.
pub fn pair_xor(a: &[Pair], b: &[Pair]) -> Vec<Pair> {
    let mut out: Vec<Pair> = a
        .iter()
        .filter(|p| b.binary_search(p).is_err())
        .chain(b.iter().filter(|p| a.binary_search(p).is_err()))
        .copied()
        .collect();
    out.sort_unstable();
    out
}

/// Flattens pairs into their sorted list of members.
pub fn pair_bar(k: &[Pair]) -> Vec<usize> {
    let mut out: Vec<usize> = k.iter().flat_map(|&(a, b)| [a, b]).collect();
    out.sort_unstable();
    out
}

/// `(I,K)·(I′,K′) = (I ⊔ I′ ⊔ bar(K ∩ K′), K ∪ K′)`.
pub fn index_product(a: &XIndex, b: &XIndex) -> XIndex {
    let common = intersect(&a.k, &b.k);
    let i = merge(&merge(&a.i, &b.i), &pair_bar(&common));
    XIndex {
        i,
        k: pair_union(&a.k, &b.k),
    }
}

/// Compares degree vectors lexicographically.
pub fn lex_cmp(a: &DegreeVector, b: &DegreeVector) -> Ordering {
    a.0.cmp(&b.0)
}

/// Multiplicity table of a pair sequence.
pub fn pair_counts(k: &[Pair]) -> BTreeMap<Pair, usize> {
    let mut m = BTreeMap::new();
    for &p in k {
        *m.entry(p).or_insert(0) += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_example() {
        let k = vec![(1, 2), (1, 3), (1, 3), (1, 3), (2, 3), (2, 3), (2, 3), (2, 3)];
        let (hat, check) = split_k(&k);
        assert_eq!(hat, vec![(1, 2), (1, 3)]);
        assert_eq!(check, vec![(1, 3), (2, 3), (2, 3)]);
        assert_eq!(split_k(&[]), (vec![], vec![]));
    }

    #[test]
    fn index_product_example() {
        let a = XIndex::new(vec![1, 3], vec![(1, 2), (1, 4), (2, 3)]).unwrap();
        let b = XIndex::new(vec![2], vec![(1, 2), (1, 3), (2, 3)]).unwrap();
        let c = index_product(&a, &b);
        assert_eq!(c.i, vec![1, 1, 2, 2, 2, 3, 3]);
        assert_eq!(c.k, vec![(1, 2), (1, 3), (1, 4), (2, 3)]);
        assert_eq!(c.degree(4).unwrap(), a.degree(4).unwrap().add(&b.degree(4).unwrap()));
        assert_eq!(index_product(&XIndex::default(), &a), a);
    }

    #[test]
    fn monomial_product_concatenates() {
        let t1 = Monomial::new(vec![1], vec![], vec![]).unwrap();
        let t12 = Monomial::new(vec![], vec![(1, 2)], vec![]).unwrap();
        assert_eq!(t1.mul(&t12), Monomial::new(vec![1], vec![(1, 2)], vec![]).unwrap());
        assert_eq!(t12.mul(&t12).k, vec![(1, 2), (1, 2)]);
        assert_eq!(t12.mul(&Monomial::one()), t12);
    }

    #[test]
    fn invalid_indices() {
        assert!(Monomial::new(vec![], vec![(2, 1)], vec![]).is_err());
        assert!(Monomial::new(vec![0], vec![], vec![]).is_err());
        assert!(Monomial::new(vec![], vec![], vec![(1, 3, 2)]).is_err());
        assert!(XIndex::new(vec![], vec![(1, 2), (1, 2)]).is_err());
    }

    #[test]
    fn xor_and_union_relations() {
        let a = vec![(1, 2), (1, 3), (2, 4)];
        let b = vec![(1, 3), (2, 4), (3, 4)];
        let common = pair_intersection(&a, &b);
        let mut lhs = merge(&a, &b);
        lhs.sort_unstable();
        assert_eq!(lhs, merge(&pair_union(&a, &b), &common));
        assert_eq!(merge(&pair_xor(&a, &b), &common), pair_union(&a, &b));
    }

    #[test]
    fn degrees_and_bounds() {
        let m = Monomial::new(vec![1, 1], vec![(1, 2)], vec![(1, 2, 3)]).unwrap();
        assert_eq!(m.degree(3).unwrap(), DegreeVector(vec![4, 2, 1]));
        assert!(m.degree(2).is_err());
        assert_eq!(DegreeVector(vec![1, 2]).below().len(), 6);
        assert!(DegreeVector(vec![2, 1, 0]).padded(2).is_ok());
        assert!(DegreeVector(vec![2, 1, 1]).padded(2).is_err());
        assert_eq!(m.to_string(), "t[1]^2*t[1,2]*t[1,2,3]");
    }
}
