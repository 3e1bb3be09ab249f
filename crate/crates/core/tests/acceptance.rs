//! Acceptance suite: one PASS/FAIL line per criterion, each at its stated
//! tolerance and runtime budget. Runs as a plain binary so the report is
//! printed by `cargo test` without `--nocapture`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use nalgebra::Matrix3;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use su2_strata::invariants::{
    cayley_hamilton_residual, fundamental_identity_residual, mixed_triangular_counterexample,
    pt2_commutator_form, pt2_expanded, pt3_commutator_form, pt3_expanded, trace_invariants,
    SL2CTuple,
};
use su2_strata::lattice::{
    apply_gauge, apply_gauge_electric, build_rect_lattice, half_form_factor,
    kogut_susskind_energy, momentum_map, sample_mu0, tree_gauge_fix,
    ElectricField, GaugeConfig, GaugeTransform, Mu0Sector, PhasePoint,
};
use su2_strata::lie::{ad_matrix, Su2AlgebraElement};
use su2_strata::matrix::Mat2;
use su2_strata::sampling::{
    random_algebra, random_exact_sl2c_tuple, random_nonzero_gauss_rational,
    random_sl2c_tuple, random_su2, rng_from_seed,
};
use su2_strata::scalar::GaussRational;
use su2_strata::strata::{
    closure_witness, random_exact_conjugated_diagonal, random_exact_triangular_tuple,
    random_float_conjugated_diagonal,
};
use su2_strata::tracepoly::adapted::{b, is_ideal_index};
use su2_strata::tracepoly::poly::random_poly;
use su2_strata::tracepoly::sigma::all_pairs;
use su2_strata::tracepoly::{
    bx_multiply_decompose, eval_poly, expand_adapted, expand_pt2, expand_pt3, ideal_member,
    index_product, k_partition, radical_spot_check, sigma_mu, split_k, to_adapted, DegreeVector,
    TracePolynomial, XIndex,
};

type Q = GaussRational;
type Outcome = Result<String, String>;

fn q(num: i64, den: i64) -> Q {
    Q::new(BigRational::new(num.into(), den.into()), BigRational::zero())
}

fn qc(re: i64, im: i64, den: i64) -> Q {
    Q::new(
        BigRational::new(re.into(), den.into()),
        BigRational::new(im.into(), den.into()),
    )
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within_budget(elapsed: Duration, budget: Option<Duration>) -> Result<(), String> {
    match budget {
        Some(limit) if elapsed > limit => Err(format!(
            "runtime {:.2}s exceeds budget {:.0}s",
            elapsed.as_secs_f64(),
            limit.as_secs_f64()
        )),
        _ => Ok(()),
    }
}

struct Report {
    failures: Vec<String>,
}

impl Report {
    fn run(&mut self, id: usize, name: &str, budget: Option<u64>, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let result = f();
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            within_budget(elapsed, budget.map(Duration::from_secs)).map(|_| detail)
        });
        match result {
            Ok(detail) => println!(
                "PASS [{id:>2}] {name}: {detail} ({:.2}s)",
                elapsed.as_secs_f64()
            ),
            Err(detail) => {
                println!(
                    "FAIL [{id:>2}] {name}: {detail} ({:.2}s)",
                    elapsed.as_secs_f64()
                );
                self.failures.push(format!("[{id}] {name}"));
            }
        }
    }
}

fn float_identities() -> Outcome {
    let mut rng = rng_from_seed(1);
    let (mut e2, mut e3, mut efi, mut ech) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for _ in 0..1000 {
        let x = SL2CTuple::new(random_sl2c_tuple(&mut rng, 3, 10.0));
        let m = |i: usize| x.get(i).unwrap().clone();
        let (a, bm, c) = (m(1), m(2), m(3));
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            let d = pt2_expanded(&x, i, j).unwrap() - pt2_commutator_form(&m(i), &m(j));
            e2 = e2.max(d.norm());
        }
        let d = pt3_expanded(&x, 1, 2, 3).unwrap() - pt3_commutator_form(&a, &bm, &c);
        e3 = e3.max(d.norm());
        efi = efi.max(fundamental_identity_residual(&a, &bm, &c).norm());
        for g in [&a, &bm, &c] {
            ech = ech.max(cayley_hamilton_residual(g).norm());
        }
    }
    let detail = format!("max residuals pT2 {e2:.1e}, pT3 {e3:.1e}, fundamental {efi:.1e}, Cayley-Hamilton {ech:.1e}");
    ensure(e2 <= 1e-9 && e3 <= 1e-9 && efi <= 1e-9 && ech <= 1e-10, || detail.clone())?;
    Ok(detail)
}

fn exact_identities() -> Outcome {
    let mut rng = rng_from_seed(2);
    for sample in 0..100 {
        let x = SL2CTuple::new(random_exact_sl2c_tuple(&mut rng, 3));
        let m = |i: usize| x.get(i).unwrap().clone();
        let (a, bm, c) = (m(1), m(2), m(3));
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            ensure(
                pt2_expanded(&x, i, j).unwrap() == pt2_commutator_form(&m(i), &m(j)),
                || format!("pT2 mismatch on sample {sample}"),
            )?;
        }
        ensure(
            pt3_expanded(&x, 1, 2, 3).unwrap() == pt3_commutator_form(&a, &bm, &c),
            || format!("pT3 mismatch on sample {sample}"),
        )?;
        ensure(fundamental_identity_residual(&a, &bm, &c).is_zero(), || {
            format!("fundamental identity residual on sample {sample}")
        })?;
        for g in [&a, &bm, &c] {
            ensure(cayley_hamilton_residual(g).is_zero_matrix(), || {
                format!("Cayley-Hamilton residual on sample {sample}")
            })?;
        }
    }
    Ok("100 tuples, all four identities bit-exact".into())
}

fn worked_examples() -> Outcome {
    let k = vec![(1, 2), (1, 3), (1, 3), (1, 3), (2, 3), (2, 3), (2, 3), (2, 3)];
    let (hat, check) = split_k(&k);
    ensure(
        hat == vec![(1, 2), (1, 3)] && check == vec![(1, 3), (2, 3), (2, 3)],
        || format!("split gave {hat:?} / {check:?}"),
    )?;

    let x = XIndex::new(vec![1, 3], vec![(1, 2), (1, 4), (2, 3)]).unwrap();
    let y = XIndex::new(vec![2], vec![(1, 2), (1, 3), (2, 3)]).unwrap();
    let p = index_product(&x, &y);
    ensure(
        p.i == vec![1, 1, 2, 2, 2, 3, 3] && p.k == vec![(1, 2), (1, 3), (1, 4), (2, 3)],
        || format!("index product gave {p}"),
    )?;

    let xi = |i: Vec<usize>, k: Vec<(usize, usize)>| XIndex::new(i, k).unwrap();
    let named = vec![
        xi(vec![1, 1, 2, 3], vec![]),
        xi(vec![1, 2], vec![(1, 3)]),
        xi(vec![1, 3], vec![(1, 2)]),
        xi(vec![1, 1], vec![(2, 3)]),
        xi(vec![], vec![(1, 2), (1, 3)]),
    ];
    let sigma = sigma_mu(&DegreeVector(vec![2, 1, 1]));
    let got: BTreeSet<_> = sigma.iter().cloned().collect();
    let want: BTreeSet<_> = named.iter().cloned().collect();
    ensure(sigma.len() == 5 && got == want, || {
        format!("Sigma_(2,1,1) has {} elements", sigma.len())
    })?;

    let parts = k_partition(&named, &[(1, 2), (1, 3)]).unwrap();
    ensure(parts == vec![vec![0, 3], vec![1, 2], vec![4]], || {
        format!("partition gave {parts:?}")
    })?;
    Ok("split, index product, Sigma_(2,1,1) and partition reproduced".into())
}

fn closed_forms() -> Outcome {
    let alphas = [q(2, 1), q(3, 2), qc(1, 1, 1), q(-5, 3), qc(0, 2, 1)];
    let smalls = [q(1, 1), q(-1, 2), qc(2, 1, 3), q(3, 1), qc(-1, -1, 2)];
    let mut points = [0usize; 3];
    for alpha in &alphas {
        let d = alpha.clone() - Q::one() / alpha.clone();
        let a = Mat2::diag(alpha.clone(), Q::one() / alpha.clone());
        for (idx, b12) in smalls.iter().enumerate() {
            let b21 = smalls[(idx + 2) % smalls.len()].clone();
            let b11 = q(idx as i64 + 1, 1);
            let b22 = (Q::one() + b12.clone() * b21.clone()) / b11.clone();
            let bm = Mat2::new(b11, b12.clone(), b21.clone(), b22);
            let want = q(-2, 1) * d.clone() * d.clone() * b12.clone() * b21;
            ensure(pt2_commutator_form(&a, &bm) == want, || {
                format!("case (a) fails at alpha = {alpha}")
            })?;
            points[0] += 1;

            // upper(beta, gamma) and lower(delta, eps) with free eps
            let gamma = b12.clone();
            let eps = smalls[(idx + 1) % smalls.len()].clone();
            let beta = alpha.clone() + Q::one();
            let delta = q(idx as i64 + 2, 1);
            let up = Mat2::new(beta.clone(), gamma.clone(), Q::zero(), Q::one() / beta);
            let low = Mat2::new(delta.clone(), Q::zero(), eps.clone(), Q::one() / delta);
            ensure(pt3_commutator_form(&a, &up, &low) == d.clone() * gamma * eps, || {
                format!("pT3 closed form fails at alpha = {alpha}")
            })?;
            points[2] += 1;
        }
    }
    for sign in [1i64, -1] {
        let a = Mat2::<Q>::from_i64(sign, 1, 0, sign);
        for b21 in &smalls {
            for b11 in [q(1, 1), q(2, 1), qc(1, 1, 1)] {
                for b12 in [q(0, 1), q(3, 1), qc(0, 1, 2)] {
                    let b22 = (Q::one() + b12.clone() * b21.clone()) / b11.clone();
                    let bm = Mat2::new(b11.clone(), b12, b21.clone(), b22);
                    ensure(
                        pt2_commutator_form(&a, &bm) == q(2, 1) * b21.clone() * b21.clone(),
                        || format!("case (b) fails at beta21 = {b21}"),
                    )?;
                    points[1] += 1;
                }
            }
        }
    }
    ensure(points.iter().all(|&p| p >= 25), || format!("grid too small: {points:?}"))?;
    Ok(format!(
        "case (a) {} points, case (b) {} points, pT3 {} points, all exact",
        points[0], points[1], points[2]
    ))
}

fn counterexample() -> Outcome {
    let mut rng = rng_from_seed(5);
    let mut draws = 0;
    while draws < 100 {
        let alpha = random_nonzero_gauss_rational(&mut rng);
        if alpha == Q::one() || alpha == -Q::one() {
            continue;
        }
        let beta = random_nonzero_gauss_rational(&mut rng);
        let gamma = random_nonzero_gauss_rational(&mut rng);
        let delta = random_nonzero_gauss_rational(&mut rng);
        let unit = |z: &Q| *z == Q::one() || *z == -Q::one();
        if unit(&beta) || unit(&delta) {
            // eps = 0 would make the third entry triangular and pT3 vanish
            continue;
        }
        let x = mixed_triangular_counterexample(&alpha, &beta, &gamma, &delta).unwrap();
        let t = trace_invariants(&x);
        ensure(t.pt2.values().all(Zero::is_zero), || {
            format!("nonzero pT2 at alpha = {alpha}")
        })?;
        ensure(!t.pt3[&(1, 2, 3)].is_zero(), || format!("pT3 = 0 at alpha = {alpha}"))?;
        draws += 1;
    }
    let x = mixed_triangular_counterexample(&q(2, 1), &Q::one(), &q(1, 1), &Q::one()).unwrap();
    ensure(trace_invariants(&x).pt3[&(1, 2, 3)].is_zero(), || {
        "beta = delta = 1 did not degenerate".into()
    })?;
    Ok("100 draws with pT2 = 0 and pT3 != 0; beta = delta = 1 gives pT3 = 0".into())
}

fn witness_soundness() -> Outcome {
    let mut rng = rng_from_seed(6);
    let mut exact_cases = 0;
    let mut worst_float = 0.0f64;
    let mut worst_ratio = 0.0f64;
    for trial in 0..200 {
        let n = rng.random_range(1..=4);
        let (x, _) = random_exact_conjugated_diagonal(&mut rng, n);
        let w = closure_witness(&x, 0.0).map_err(|e| format!("exact trial {trial}: {e}"))?;
        ensure(
            w.diagonal_limit.entries().iter().all(|g| g.matrix().is_diagonal(0.0)),
            || format!("exact trial {trial}: limit not diagonal"),
        )?;
        ensure(trace_invariants(&w.diagonal_limit) == trace_invariants(&x), || {
            format!("exact trial {trial}: invariant tables differ")
        })?;
        let upper = |t: &SL2CTuple<Q>| -> Vec<Q> {
            t.entries().iter().map(|g| g.matrix().get(0, 1).clone()).collect()
        };
        let mut prev = upper(&w.scaled(&q(1, 1)));
        for scale in [2, 4, 8] {
            let cur = upper(&w.scaled(&q(scale, 1)));
            for (p, c) in prev.iter().zip(&cur) {
                ensure(c.clone() * q(4, 1) == *p, || {
                    format!("exact trial {trial}: off-diagonal ratio not 1/4 at n = {scale}")
                })?;
            }
            prev = cur;
        }
        exact_cases += 1;

        let (xf, _) = random_float_conjugated_diagonal(&mut rng, n, 3.0);
        let w = closure_witness(&xf, 1e-8).map_err(|e| format!("float trial {trial}: {e}"))?;
        let diff = trace_invariants(&w.diagonal_limit).max_rel_diff(&trace_invariants(&xf));
        worst_float = worst_float.max(diff);
        let upper_f = |t: &SL2CTuple<Complex64>| -> Vec<Complex64> {
            t.entries().iter().map(|g| *g.matrix().get(0, 1)).collect()
        };
        let mut prev = upper_f(&w.scaled(&Complex64::new(1.0, 0.0)));
        for scale in [2.0, 4.0, 8.0] {
            let cur = upper_f(&w.scaled(&Complex64::new(scale, 0.0)));
            for (p, c) in prev.iter().zip(&cur) {
                if p.norm() > 1e-12 {
                    worst_ratio = worst_ratio.max(((c / p) - 0.25).norm() / 0.25);
                }
            }
            prev = cur;
        }
    }
    let detail = format!(
        "{exact_cases} exact tables equal; float table rel diff {worst_float:.1e}; ratio rel err {worst_ratio:.1e}"
    );
    ensure(worst_float <= 1e-8 && worst_ratio <= 1e-10, || detail.clone())?;
    Ok(detail)
}

fn adapted_round_trip() -> Outcome {
    let mut rng = rng_from_seed(7);
    let mut ideal_terms = 0usize;
    for trial in 0..500 {
        let n = [2, 3, 4][trial % 3];
        let p = random_poly(&mut rng, n, 8, 6);
        let total = p.terms().keys().map(|m| m.total_degree()).max().unwrap_or(0);
        ensure(total <= 8, || format!("trial {trial}: sampled degree {total}"))?;
        let a = to_adapted(&p);
        ideal_terms += a.keys().filter(|m| is_ideal_index(m)).count();
        ensure(expand_adapted(&a) == p, || format!("round trip failed for {p}"))?;
    }
    Ok(format!("500 polynomials, {ideal_terms} ideal basis coordinates, bit-exact"))
}

fn indices_up_to(mu: &DegreeVector) -> Vec<XIndex> {
    mu.below().iter().flat_map(sigma_mu).collect()
}

fn check_product(x: &XIndex, y: &XIndex, n: usize) -> Result<(), String> {
    let d = bx_multiply_decompose(x, y);
    let lhs = &b(x) * &b(y);
    let rhs = &(&b(&d.leading) + &d.q) + &d.r;
    ensure(lhs == rhs, || format!("{x} * {y}: parts do not sum to the product"))?;
    ensure(ideal_member(&d.q), || format!("{x} * {y}: Q not in the ideal"))?;
    let sum = x.degree(n).unwrap().add(&y.degree(n).unwrap());
    for m in d.r.terms().keys() {
        let dm = m.degree(n).unwrap();
        ensure(dm.le_componentwise(&sum) && dm != sum, || {
            format!("{x} * {y}: R term {m} has degree {dm}, not below {sum}")
        })?;
    }
    Ok(())
}

fn product_contract() -> Outcome {
    let basis = indices_up_to(&DegreeVector(vec![2, 2, 2]));
    let mut checked = 0;
    for x in &basis {
        for y in &basis {
            check_product(x, y, 3)?;
            checked += 1;
        }
    }
    let mut rng = rng_from_seed(8);
    for _ in 0..500 {
        let mut pick = || {
            let mu = DegreeVector((0..4).map(|_| rng.random_range(0..=3)).collect());
            let sigma = sigma_mu(&mu);
            sigma[rng.random_range(0..sigma.len())].clone()
        };
        let (x, y) = (pick(), pick());
        check_product(&x, &y, 4)?;
    }
    Ok(format!(
        "{checked} exhaustive pairs at N = 3 and 500 random pairs at N = 4, zero violations"
    ))
}

fn radical_campaign() -> Outcome {
    let mut lines = Vec::new();
    let mut skipped = Vec::new();
    let mut compared = 0;
    for n in [2, 3] {
        for mu in [vec![1, 1], vec![2, 1], vec![2, 2], vec![2, 1, 1]] {
            if mu.len() > n {
                skipped.push(format!("N={n} mu={mu:?}"));
                continue;
            }
            let seed = 100 * n as u64 + mu.iter().sum::<usize>() as u64;
            let r = radical_spot_check(n, &DegreeVector(mu.clone()), 200, seed)
                .map_err(|e| format!("N={n} mu={mu:?}: {e}"))?;
            ensure(r.passed() && r.proof_path_checks == 200, || {
                format!("N={n} mu={mu:?}: {r:?}")
            })?;
            compared += r.coefficients_compared;
            lines.push(format!("N={n} mu={mu:?}"));
        }
    }
    Ok(format!(
        "{} campaigns x 200 trials, 0 violations, {compared} F coefficients matched; not applicable: {}",
        lines.len(),
        skipped.join(", ")
    ))
}

fn generators(n: usize) -> Vec<TracePolynomial> {
    let mut g: Vec<_> = all_pairs(n)
        .into_iter()
        .map(|(i, j)| expand_pt2(i, j).unwrap())
        .collect();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                g.push(expand_pt3(i, j, k).unwrap());
            }
        }
    }
    g
}

fn zero_locus_bridge() -> Outcome {
    let mut rng = rng_from_seed(10);
    let gens = generators(3);
    for trial in 0..100 {
        let x = random_exact_triangular_tuple(&mut rng, 3, trial % 2 == 1);
        for g in &gens {
            ensure(eval_poly(g, &x).unwrap().is_zero(), || {
                format!("trial {trial}: {g} does not vanish")
            })?;
        }
    }
    let (mut nonzero, mut total) = (0usize, 0usize);
    for _ in 0..100 {
        let x = SL2CTuple::new(random_exact_sl2c_tuple(&mut rng, 3));
        for g in &gens {
            total += 1;
            if !eval_poly(g, &x).unwrap().is_zero() {
                nonzero += 1;
            }
        }
    }
    let share = nonzero as f64 / total as f64;
    ensure(share >= 0.95, || format!("only {:.1}% nonzero", 100.0 * share))?;
    Ok(format!(
        "all generators vanish on 100 triangular tuples; {:.1}% nonzero on unconstrained tuples (probabilistic)",
        100.0 * share
    ))
}

fn lattice_pipeline() -> Outcome {
    let lattice = build_rect_lattice(&[3, 3], false).map_err(|e| e.to_string())?;
    ensure(lattice.n_off_tree() == 4, || format!("N = {}", lattice.n_off_tree()))?;
    let mut rng = rng_from_seed(11);
    let (mut eq_err, mut energy_err, mut mu_err, mut mu0) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for _ in 0..100 {
        let a = GaugeConfig::random(&lattice, &mut rng);
        let h = GaugeTransform::random(&lattice, &mut rng);
        let ah = apply_gauge(&lattice, &a, &h).unwrap();
        let (tuple, _) = tree_gauge_fix(&lattice, &a).unwrap();
        let (tuple_h, _) = tree_gauge_fix(&lattice, &ah).unwrap();
        let h0 = &h.0[lattice.basepoint()];
        for (u, v) in tuple.iter().zip(&tuple_h) {
            let d = u.conjugate_by(h0).matrix().clone() - v.matrix().clone();
            eq_err = eq_err.max(d.norm());
        }

        let e = ElectricField::random(&lattice, &mut rng, 1.0);
        let eh = apply_gauge_electric(&lattice, &e, &h).unwrap();
        let base = kogut_susskind_energy(&lattice, &a, &e, 1.3, 0.7).unwrap();
        let gauged = kogut_susskind_energy(&lattice, &ah, &eh, 1.3, 0.7).unwrap();
        energy_err = energy_err.max((base - gauged).abs());
        for pid in 0..lattice.num_plaquettes() {
            let reversed = lattice.with_reversed_plaquette(pid);
            let r = kogut_susskind_energy(&reversed, &a, &e, 1.3, 0.7).unwrap();
            energy_err = energy_err.max((base - r).abs());
        }

        let p = PhasePoint::new(
            (0..4).map(|_| random_su2(&mut rng)).collect(),
            (0..4).map(|_| random_algebra(&mut rng, 1.0)).collect(),
        )
        .unwrap();
        let g = random_su2(&mut rng);
        let lhs = momentum_map(&p.act(&g));
        let rhs = momentum_map(&p).adjoint_by(&g);
        mu_err = mu_err.max(lhs.sub(&rhs).norm());
    }
    for seed in 0..100 {
        let p = sample_mu0(4, seed, Mu0Sector::Generic).map_err(|e| e.to_string())?;
        mu0 = mu0.max(momentum_map(&p).norm());
    }
    let detail = format!(
        "gauge-fix equivariance {eq_err:.1e}, energy invariance {energy_err:.1e}, mu equivariance {mu_err:.1e}, sampled |mu| {mu0:.1e}"
    );
    ensure(
        eq_err <= 1e-10 && energy_err <= 1e-9 && mu_err <= 1e-10 && mu0 <= 1e-10,
        || detail.clone(),
    )?;
    Ok(detail)
}

/// `√det(Σ_k (−1)^k X^{2k}/(2k+1)!)` with `X = ad A`, truncated at 12 terms.
fn eta_series(alg: &Su2AlgebraElement) -> f64 {
    let x = ad_matrix(alg);
    let x2 = x * x;
    let mut term: Matrix3<f64> = Matrix3::identity();
    let mut sum = Matrix3::identity();
    for k in 1..12 {
        let k = k as f64;
        term = -(term * x2) / ((2.0 * k) * (2.0 * k + 1.0));
        sum += term;
    }
    sum.determinant().sqrt()
}

fn density() -> Outcome {
    ensure(half_form_factor(&Su2AlgebraElement::zero()) == 1.0, || {
        "eta(0) != 1".into()
    })?;
    let mut rng = rng_from_seed(12);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let alg = random_algebra(&mut rng, 1.0);
        worst = worst.max((half_form_factor(&alg) - eta_series(&alg)).abs());
    }
    ensure(worst <= 1e-8, || format!("max deviation {worst:.1e}"))?;
    Ok(format!("eta(0) = 1; closed form vs series max deviation {worst:.1e}"))
}

fn main() {
    let mut report = Report {
        failures: Vec::new(),
    };
    report.run(1, "identity suite (float)", Some(5), float_identities);
    report.run(2, "identity suite (exact)", Some(30), exact_identities);
    report.run(3, "worked examples", None, worked_examples);
    report.run(4, "torus-relation closed forms", None, closed_forms);
    report.run(5, "mixed triangular counterexample", None, counterexample);
    report.run(6, "closure-witness soundness", None, witness_soundness);
    report.run(7, "adapted-basis round trip", Some(60), adapted_round_trip);
    report.run(8, "product decomposition contract", None, product_contract);
    report.run(9, "radical falsification campaign", None, radical_campaign);
    report.run(10, "zero-locus bridge", None, zero_locus_bridge);
    report.run(11, "lattice pipeline", None, lattice_pipeline);
    report.run(12, "measure density", None, density);
    if report.failures.is_empty() {
        println!("acceptance: all 12 criteria passed");
    } else {
        println!("acceptance: {} failed: {}", report.failures.len(), report.failures.join(", "));
        std::process::exit(1);
    }
}
