//! The index sets `Σ_μ = {(I,K) : deg(I,K) = μ}`, the partitions
//! `𝓚^i_J = {(I,K) ∈ Σ_μ : |K ∩ J| = i}` with their coefficient sums, and the
//! quadratic coefficients `F_(I,K)`.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::Zero;

use super::index::{index_product, pair_intersection, DegreeVector, Pair, XIndex};
use crate::error::{Error, Result};

/// All strictly increasing pairs of `1..=n` in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<Pair> {
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect()
}

/// `Σ_μ` ordered by `|K|`, then `K`. `I` is determined by `K` and `μ`.
pub fn sigma_mu(mu: &DegreeVector) -> Vec<XIndex> {
    let n = mu.n();
    let pairs = all_pairs(n);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let mut rem = mu.0.clone();
    fn walk(
        pairs: &[Pair],
        start: usize,
        chosen: &mut Vec<Pair>,
        rem: &mut Vec<usize>,
        out: &mut Vec<XIndex>,
    ) {
        let i: Vec<usize> = rem
            .iter()
            .enumerate()
            .flat_map(|(idx, &r)| std::iter::repeat_n(idx + 1, r))
            .collect();
        out.push(XIndex {
            i,
            k: chosen.clone(),
        });
        for p in start..pairs.len() {
            let (a, b) = pairs[p];
            if rem[a - 1] == 0 || rem[b - 1] == 0 {
                continue;
            }
            rem[a - 1] -= 1;
            rem[b - 1] -= 1;
            chosen.push((a, b));
            walk(pairs, p + 1, chosen, rem, out);
            chosen.pop();
            rem[a - 1] += 1;
            rem[b - 1] += 1;
        }
    }
    walk(&pairs, 0, &mut chosen, &mut rem, &mut out);
    out.sort_by(|x, y| x.k.len().cmp(&y.k.len()).then_with(|| x.k.cmp(&y.k)));
    out
}

fn check_strict(j: &[Pair]) -> Result<()> {
    for &p in j {
        super::index::check_pair(p)?;
    }
    if j.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Index("J must be a sorted set of pairs".into()));
    }
    Ok(())
}

/// Positions in `sigma` of `𝓚^0_J, …, 𝓚^{|J|}_J`.
pub fn k_partition(sigma: &[XIndex], j: &[Pair]) -> Result<Vec<Vec<usize>>> {
    check_strict(j)?;
    let mut parts = vec![Vec::new(); j.len() + 1];
    for (pos, x) in sigma.iter().enumerate() {
        parts[pair_intersection(&x.k, j).len()].push(pos);
    }
    Ok(parts)
}

/// `S(𝓚^0_J), …, S(𝓚^{|J|}_J)` for coefficients `f` aligned with `sigma`.
pub fn subset_sums(sigma: &[XIndex], f: &[BigRational], j: &[Pair]) -> Result<Vec<BigRational>> {
    if f.len() != sigma.len() {
        return Err(Error::InvalidParams(format!(
            "{} coefficients for {} indices",
            f.len(),
            sigma.len()
        )));
    }
    let parts = k_partition(sigma, j)?;
    let covered: BTreeSet<usize> = parts.iter().flatten().copied().collect();
    let total: usize = parts.iter().map(Vec::len).sum();
    if covered.len() != sigma.len() || total != sigma.len() {
        return Err(Error::InvalidParams("partition does not cover the index set".into()));
    }
    Ok(parts
        .iter()
        .map(|part| part.iter().fold(BigRational::zero(), |acc, &p| acc + &f[p]))
        .collect())
}

/// `F_(I,K) = Σ_{(I′,K′)·(I″,K″) = (I,K)} f_(I′,K′) f_(I″,K″)` over ordered
/// pairs from `Σ_μ`; zero entries are dropped.
pub fn f_coefficients(
    sigma: &[XIndex],
    f: &BTreeMap<XIndex, BigRational>,
) -> BTreeMap<XIndex, BigRational> {
    let mut out: BTreeMap<XIndex, BigRational> = BTreeMap::new();
    let support: Vec<(&XIndex, &BigRational)> = sigma
        .iter()
        .filter_map(|x| f.get(x).filter(|c| !c.is_zero()).map(|c| (x, c)))
        .collect();
    for (x, cx) in &support {
        for (y, cy) in &support {
            *out.entry(index_product(x, y)).or_insert_with(BigRational::zero) += *cx * *cy;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tracepoly::poly::rat;

    fn xi(i: Vec<usize>, k: Vec<Pair>) -> XIndex {
        XIndex::new(i, k).unwrap()
    }

    fn example() -> Vec<XIndex> {
        vec![
            xi(vec![1, 1, 2, 3], vec![]),
            xi(vec![1, 2], vec![(1, 3)]),
            xi(vec![1, 3], vec![(1, 2)]),
            xi(vec![1, 1], vec![(2, 3)]),
            xi(vec![], vec![(1, 2), (1, 3)]),
        ]
    }

    #[test]
    fn sigma_example() {
        let got: BTreeSet<XIndex> = sigma_mu(&DegreeVector(vec![2, 1, 1])).into_iter().collect();
        let want: BTreeSet<XIndex> = example().into_iter().collect();
        assert_eq!(got, want);
        assert_eq!(sigma_mu(&DegreeVector(vec![0, 0, 0])), vec![XIndex::default()]);
    }

    #[test]
    fn partition_example() {
        let sigma = example();
        let parts = k_partition(&sigma, &[(1, 2), (1, 3)]).unwrap();
        assert_eq!(parts, vec![vec![0, 3], vec![1, 2], vec![4]]);
        let f: Vec<BigRational> = (1..=5).map(|x| rat(x, 1)).collect();
        assert_eq!(subset_sums(&sigma, &f, &[]).unwrap(), vec![rat(15, 1)]);
        assert!(subset_sums(&sigma, &f[..3], &[]).is_err());
        assert!(k_partition(&sigma, &[(1, 3), (1, 2)]).is_err());
    }

    #[test]
    fn quadratic_coefficients_sum_to_square() {
        let sigma = sigma_mu(&DegreeVector(vec![2, 1, 1]));
        let f: BTreeMap<XIndex, BigRational> = sigma
            .iter()
            .enumerate()
            .map(|(p, x)| (x.clone(), rat(p as i64 - 2, 3)))
            .collect();
        let big_f = f_coefficients(&sigma, &f);
        let s: BigRational = f.values().sum();
        let total: BigRational = big_f.values().sum();
        assert_eq!(total, &s * &s);
        let two_mu = DegreeVector(vec![4, 2, 2]);
        assert!(big_f.keys().all(|x| x.degree(3).unwrap() == two_mu));
    }
}
