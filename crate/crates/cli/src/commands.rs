use std::fs;
use std::path::Path;

use num_complex::Complex64;
use rand::Rng;
use serde_json::{json, Value};

use su2_strata::invariants::{trace_invariants, SL2CTuple};
use su2_strata::json::{
    matrix_from_json, matrix_to_json, phase_point_from_json, phase_point_to_json,
    su2_list_from_json, su2_list_to_json, tuple_from_json,
};
use su2_strata::lattice::{
    half_form_factor, kogut_susskind_energy, measure_density, momentum_map, parse_lattice_spec,
    sample_mu0, tree_gauge_fix, ElectricField, GaugeConfig, LatticeGraph, LatticeJson, Mu0Sector,
};
use su2_strata::lie::{polar_decompose, SL2CElement, Su2AlgebraElement};
use su2_strata::sampling::{random_exact_sl2c, rng_from_seed, sample, Sampled};
use su2_strata::scalar::{GaussRational, Scalar};
use su2_strata::strata::{classify_tuple, closure_witness, orbit_type};
use su2_strata::tolerance::{Tolerance, DEFAULT_SCALAR_REL};
use su2_strata::tracepoly::adapted::is_ideal_index;
use su2_strata::tracepoly::{
    format_poly, ideal_part, parse_poly, radical_spot_check, split_k, to_adapted, x_part,
    DegreeVector, Monomial,
};
use su2_strata::Error;

use crate::error::CliError;
use crate::{Command, LatticeArgs, SampleKind, Sector, TolArgs, TupleInput};

type CliResult<T> = Result<T, CliError>;

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn read_json(path: &Path) -> CliResult<Value> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Json {
        path: path.display().to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

impl TolArgs {
    fn tolerance(&self) -> CliResult<Tolerance> {
        match self.tol {
            None => Ok(Tolerance::default()),
            Some(t) if t > 0.0 && t.is_finite() => Ok(Tolerance::uniform(t)),
            Some(t) => Err(CliError::Usage(format!("tolerance must be positive, got {t}"))),
        }
    }

    /// Absolute bound for scalar invariants such as `pT` values.
    fn scalar_tol(&self) -> CliResult<f64> {
        Ok(match self.tol {
            None => DEFAULT_SCALAR_REL,
            Some(_) => self.tolerance()?.scalar_rel,
        })
    }
}

fn read_tuple<S: Scalar>(input: &TupleInput) -> CliResult<SL2CTuple<S>> {
    let v = read_json(&input.input)?;
    Ok(SL2CTuple::new(tuple_from_json(&v, &input.tol.tolerance()?)?))
}

pub fn run(command: Command) -> CliResult<Value> {
    match command {
        Command::Classify { input, phase_point } => classify(&input, phase_point),
        Command::Witness { input } => witness(&input),
        Command::Invariants { input } => invariants(&input),
        Command::Sample {
            kind,
            count,
            seed,
            bound,
            n,
            sector,
        } => sample_cmd(kind, count, seed, bound, n, sector),
        Command::Reduce { poly, n } => reduce(&poly, n),
        Command::RadicalCheck { n, mu, trials, seed } => radical(n, mu, trials, seed),
        Command::GaugeFix { lattice } => gauge_fix(&lattice),
        Command::Energy {
            lattice,
            coupling,
            spacing,
        } => energy(&lattice, coupling, spacing),
        Command::MeasureDensity {
            input,
            phase_point,
            hbar,
        } => density(&input, phase_point, hbar),
    }
}

fn classify(input: &TupleInput, phase_point: bool) -> CliResult<Value> {
    let mut out = if phase_point {
        let tol = input.tol.tolerance()?;
        let p = phase_point_from_json(&read_json(&input.input)?, &tol)?;
        let mut v = orbit_type(&p, &tol).to_json();
        v["qualifiers"] = json!(["phase-point", "float-tolerance"]);
        v
    } else if input.exact {
        classify_tuple(&read_tuple::<GaussRational>(input)?, 0.0).to_json()
    } else {
        let tol = input.tol.scalar_tol()?;
        classify_tuple(&read_tuple::<Complex64>(input)?, tol).to_json()
    };
    out["exact"] = json!(input.exact);
    Ok(out)
}

fn witness(input: &TupleInput) -> CliResult<Value> {
    let mut out = if input.exact {
        closure_witness(&read_tuple::<GaussRational>(input)?, 0.0)?.to_json()
    } else {
        let tol = input.tol.scalar_tol()?;
        closure_witness(&read_tuple::<Complex64>(input)?, tol)?.to_json()
    };
    out["exact"] = json!(input.exact);
    Ok(out)
}

fn invariants(input: &TupleInput) -> CliResult<Value> {
    let (n, table) = if input.exact {
        let x = read_tuple::<GaussRational>(input)?;
        (x.len(), trace_invariants(&x).to_json())
    } else {
        let x = read_tuple::<Complex64>(input)?;
        (x.len(), trace_invariants(&x).to_json())
    };
    Ok(json!({ "n": n, "exact": input.exact, "invariants": table }))
}

fn sample_cmd(
    kind: SampleKind,
    count: usize,
    seed: u64,
    bound: f64,
    n: usize,
    sector: Sector,
) -> CliResult<Value> {
    if !(bound > 0.0 && bound.is_finite()) {
        return Err(Error::InvalidParams(format!("bound {bound} must be positive")).into());
    }
    let mut master = rng_from_seed(seed);
    let seeds: Vec<u64> = (0..count).map(|_| master.random()).collect();
    let samples = seeds
        .iter()
        .map(|&s| -> CliResult<Value> {
            Ok(match kind {
                SampleKind::Su2 | SampleKind::Su2Algebra | SampleKind::Sl2c => {
                    let lib_kind = match kind {
                        SampleKind::Su2 => su2_strata::sampling::SampleKind::Su2,
                        SampleKind::Su2Algebra => su2_strata::sampling::SampleKind::Su2Algebra,
                        _ => su2_strata::sampling::SampleKind::Sl2c,
                    };
                    match sample(lib_kind, s, bound) {
                        Sampled::Su2(g) => matrix_to_json(g.matrix()),
                        Sampled::Su2Algebra(a) => matrix_to_json(&a.matrix()),
                        Sampled::Sl2c(g) => matrix_to_json(g.matrix()),
                    }
                }
                SampleKind::ExactSl2c => matrix_to_json(random_exact_sl2c(&mut rng_from_seed(s)).matrix()),
                SampleKind::Mu0 => {
                    let sector = match sector {
                        Sector::Generic => Mu0Sector::Generic,
                        Sector::Diagonal => Mu0Sector::Diagonal,
                    };
                    let p = sample_mu0(n, s, sector)?;
                    let mut v = phase_point_to_json(&p);
                    v["momentum_norm"] = json!(momentum_map(&p).norm());
                    v
                }
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(json!({
        "kind": kind_name(kind),
        "seed": seed,
        "sample_seeds": seeds,
        "count": count,
        "samples": samples,
    }))
}

fn kind_name(kind: SampleKind) -> &'static str {
    match kind {
        SampleKind::Su2 => "su2",
        SampleKind::Su2Algebra => "su2-algebra",
        SampleKind::Sl2c => "sl2c",
        SampleKind::ExactSl2c => "exact-sl2c",
        SampleKind::Mu0 => "mu0",
    }
}

/// The adapted basis element for an index, written with `pT` factors.
fn adapted_label(m: &Monomial) -> String {
    let (hat, check) = split_k(&m.k);
    let mut factors: Vec<String> = Vec::new();
    let plain = Monomial {
        i: m.i.clone(),
        k: hat,
        l: Vec::new(),
    };
    if !plain.is_one() {
        factors.push(plain.to_string());
    }
    factors.extend(check.iter().map(|(i, j)| format!("pT[{i},{j}]")));
    factors.extend(m.l.iter().map(|(i, j, k)| format!("pT[{i},{j},{k}]")));
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

fn rational_text(c: &num_rational::BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn reduce(path: &Path, n: usize) -> CliResult<Value> {
    let text = read_text(path)?;
    let p = parse_poly(text.trim()).map_err(|e| match e {
        Error::Syntax { offset, message } => Error::Format {
            location: format!("{}: offset {offset}", path.display()),
            message,
        },
        other => other,
    })?;
    if n == 0 || p.max_index() > n {
        return Err(Error::Index(format!(
            "polynomial uses index {} but N = {n}",
            p.max_index()
        ))
        .into());
    }
    let adapted: Vec<Value> = to_adapted(&p)
        .iter()
        .map(|(m, c)| {
            json!({
                "index": m.to_string(),
                "element": adapted_label(m),
                "coefficient": rational_text(c),
                "ideal": is_ideal_index(m),
            })
        })
        .collect();
    let xp = x_part(&p);
    Ok(json!({
        "n": n,
        "input": format_poly(&p),
        "adapted": adapted,
        "x_part": format_poly(&xp),
        "ideal_part": format_poly(&ideal_part(&p)),
        "ideal_member": xp.is_zero(),
    }))
}

fn radical(n: usize, mu: Vec<usize>, trials: usize, seed: u64) -> CliResult<Value> {
    let report = radical_spot_check(n, &DegreeVector(mu), trials, seed)?;
    let mut v = serde_json::to_value(&report).expect("report serializes");
    v["passed"] = json!(report.passed());
    Ok(v)
}

fn load_lattice(spec: &str) -> CliResult<LatticeGraph> {
    let path = Path::new(spec);
    if path.is_file() {
        let v = read_json(path)?;
        let json: LatticeJson = serde_json::from_value(v).map_err(|e| Error::Format {
            location: spec.to_string(),
            message: e.to_string(),
        })?;
        Ok(LatticeGraph::from_json(&json)?)
    } else {
        Ok(parse_lattice_spec(spec)?)
    }
}

fn electric_from_json(v: &Value, tol: &Tolerance, lattice: &LatticeGraph) -> CliResult<ElectricField> {
    let Some(list) = v.get("electric") else {
        return Ok(ElectricField::zero(lattice));
    };
    let list = list.as_array().ok_or_else(|| Error::Format {
        location: "$.electric".into(),
        message: "expected an array of matrices".into(),
    })?;
    let field = list
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let loc = format!("$.electric[{i}]");
            let m = matrix_from_json::<Complex64>(m, &loc)?;
            Su2AlgebraElement::from_matrix(&m, tol).map_err(|e| Error::Format {
                location: loc,
                message: e.to_string(),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(ElectricField(field))
}

struct LatticeState {
    lattice: LatticeGraph,
    links: GaugeConfig,
    electric: ElectricField,
    seed: Option<u64>,
}

fn load_state(args: &LatticeArgs) -> CliResult<LatticeState> {
    let lattice = load_lattice(&args.lattice)?;
    let tol = args.tol.tolerance()?;
    match &args.config {
        Some(path) => {
            let v = read_json(path)?;
            let links = GaugeConfig(su2_list_from_json(&v, "links", &tol)?);
            let electric = electric_from_json(&v, &tol, &lattice)?;
            Ok(LatticeState {
                lattice,
                links,
                electric,
                seed: None,
            })
        }
        None => {
            let mut rng = rng_from_seed(args.seed);
            let links = GaugeConfig::random(&lattice, &mut rng);
            let electric = ElectricField::random(&lattice, &mut rng, 1.0);
            Ok(LatticeState {
                lattice,
                links,
                electric,
                seed: Some(args.seed),
            })
        }
    }
}

fn gauge_fix(args: &LatticeArgs) -> CliResult<Value> {
    let state = load_state(args)?;
    let (tuple, g) = tree_gauge_fix(&state.lattice, &state.links)?;
    Ok(json!({
        "seed": state.seed,
        "sites": state.lattice.num_sites(),
        "links": state.lattice.num_links(),
        "n_off_tree": state.lattice.n_off_tree(),
        "off_tree_links": state.lattice.off_tree(),
        "basepoint": state.lattice.basepoint(),
        "tuple": su2_list_to_json(&tuple),
        "gauge": su2_list_to_json(&g.0),
    }))
}

fn energy(args: &LatticeArgs, coupling: f64, spacing: f64) -> CliResult<Value> {
    let state = load_state(args)?;
    let e = kogut_susskind_energy(&state.lattice, &state.links, &state.electric, coupling, spacing)?;
    Ok(json!({
        "seed": state.seed,
        "coupling": coupling,
        "spacing": spacing,
        "links": state.lattice.num_links(),
        "plaquettes": state.lattice.num_plaquettes(),
        "energy": e,
    }))
}

fn density(input: &TupleInput, phase_point: bool, hbar: f64) -> CliResult<Value> {
    let tol = input.tol.tolerance()?;
    let entries: Vec<SL2CElement<Complex64>> = if phase_point {
        phase_point_from_json(&read_json(&input.input)?, &tol)?.complexify()
    } else {
        read_tuple::<Complex64>(input)?.entries().to_vec()
    };
    let value = measure_density(&entries, hbar, &tol)?;
    let mut kappa = 0.0;
    let mut eta = 1.0;
    for g in &entries {
        let (_, alg) = polar_decompose(g, &tol)?;
        kappa += alg.norm_sqr();
        eta *= half_form_factor(&alg);
    }
    Ok(json!({
        "n": entries.len(),
        "hbar": hbar,
        "kappa": kappa,
        "eta": eta,
        "density": value,
    }))
}
