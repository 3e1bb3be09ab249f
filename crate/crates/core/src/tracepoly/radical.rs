//! Falsification harness for radicality of the ideal generated by the `pT`
//! functions: random `f` with nonzero complement part must have `f²` outside
//! the ideal, and the top-degree complement coefficients of `f²` must equal
//! the quadratic sums `F_(I,K)`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use super::adapted::{b, x_coefficients, x_part};
use super::index::{DegreeVector, XIndex};
use super::poly::{expand_pt2_unchecked, expand_pt3_unchecked, rat, TracePolynomial};
use super::sigma::{all_pairs, f_coefficients, sigma_mu};
use crate::error::{Error, Result};
use crate::sampling::rng_from_seed;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadicalReport {
    pub n: usize,
    pub mu: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    /// Trials whose `f` had a nonzero ideal component.
    pub with_ideal_part: usize,
    pub violations: usize,
    pub proof_path_checks: usize,
    pub proof_path_mismatches: usize,
    /// Number of `F_(I,K)` coefficients compared across all trials.
    pub coefficients_compared: usize,
    /// Fewest complement terms seen in any `(f²)_X`.
    pub min_x_terms: usize,
}

impl RadicalReport {
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.proof_path_mismatches == 0
    }
}

fn random_coefficient(rng: &mut impl Rng) -> BigRational {
    loop {
        let num: i64 = rng.random_range(-3..=3);
        if num != 0 {
            return rat(num, rng.random_range(1..=3));
        }
    }
}

/// Random multiple of one generator.
fn random_ideal_element(rng: &mut impl Rng, n: usize, support: &[XIndex]) -> TracePolynomial {
    let pairs = all_pairs(n);
    let generator = if n >= 3 && rng.random_bool(0.3) {
        let mut idx: Vec<usize> = rand::seq::index::sample(rng, n, 3)
            .into_iter()
            .map(|x| x + 1)
            .collect();
        idx.sort_unstable();
        expand_pt3_unchecked((idx[0], idx[1], idx[2]))
    } else {
        expand_pt2_unchecked(pairs[rng.random_range(0..pairs.len())])
    };
    let multiplier = b(&support[rng.random_range(0..support.len())]);
    (&multiplier * &generator).scale(&random_coefficient(rng))
}

/// Runs `trials` random checks of `f` supported on `⋃_{μ′ ≤ μ} Σ_μ′`.
///
/// Each `f` is a random nonzero combination of complement basis elements,
/// plus a random ideal element in about half of the trials.
pub fn radical_spot_check(n: usize, mu: &DegreeVector, trials: usize, seed: u64) -> Result<RadicalReport> {
    if n < 2 {
        return Err(Error::InvalidParams("N must be at least 2".into()));
    }
    let mu = mu.padded(n)?;
    let support: Vec<XIndex> = mu
        .below()
        .iter()
        .flat_map(sigma_mu)
        .filter(|x| !x.i.is_empty() || !x.k.is_empty())
        .collect();
    if support.is_empty() {
        return Err(Error::InvalidParams("mu must be nonzero".into()));
    }
    let mut rng = rng_from_seed(seed);
    let mut report = RadicalReport {
        n,
        mu: mu.0.clone(),
        trials,
        seed,
        with_ideal_part: 0,
        violations: 0,
        proof_path_checks: 0,
        proof_path_mismatches: 0,
        coefficients_compared: 0,
        min_x_terms: usize::MAX,
    };
    for _ in 0..trials {
        let count = rng.random_range(1..=support.len().min(4));
        let mut picks = support.clone();
        picks.shuffle(&mut rng);
        let fx_coeffs: BTreeMap<XIndex, BigRational> = picks
            .into_iter()
            .take(count)
            .map(|x| (x, random_coefficient(&mut rng)))
            .collect();
        let fx = fx_coeffs
            .iter()
            .fold(TracePolynomial::zero(), |acc, (x, c)| &acc + &b(x).scale(c));
        let mut f = fx.clone();
        if rng.random_bool(0.5) {
            f = &f + &random_ideal_element(&mut rng, n, &support);
            report.with_ideal_part += 1;
        }

        let f2 = &f * &f;
        let f2_x = x_part(&f2);
        report.min_x_terms = report.min_x_terms.min(f2_x.len());
        if f2_x.is_zero() {
            report.violations += 1;
            return Err(Error::RadicalViolation {
                counterexample: f.to_string(),
            });
        }
        if x_part(&f) != fx {
            return Err(Error::ProofPathMismatch {
                index: "complement part of f".into(),
                expected: fx.to_string(),
                actual: x_part(&f).to_string(),
            });
        }

        // Proof path: top-degree coefficients of (f²)_X against F_(I,K).
        let top = fx.degree(n)?.expect("fx is nonzero");
        let sigma = sigma_mu(&top);
        let big_f = f_coefficients(&sigma, &fx_coeffs);
        let two_mu = top.double();
        let direct: BTreeMap<XIndex, BigRational> = x_coefficients(&f2)
            .into_iter()
            .filter(|(x, _)| x.degree(n).map(|d| d == two_mu).unwrap_or(false))
            .collect();
        report.proof_path_checks += 1;
        report.coefficients_compared += direct.len().max(big_f.len());
        if direct != big_f {
            report.proof_path_mismatches += 1;
            let key = direct
                .keys()
                .chain(big_f.keys())
                .find(|x| direct.get(*x) != big_f.get(*x))
                .cloned()
                .unwrap_or_default();
            let show = |m: &BTreeMap<XIndex, BigRational>| {
                m.get(&key).map(ToString::to_string).unwrap_or_else(|| "0".into())
            };
            return Err(Error::ProofPathMismatch {
                index: key.to_string(),
                expected: show(&big_f),
                actual: show(&direct),
            });
        }
    }
    if report.min_x_terms == usize::MAX {
        report.min_x_terms = 0;
    }
    Ok(report)
}
