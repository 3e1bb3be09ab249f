//! Finite lattices with SU(2) link variables, tree gauge fixing, the momentum
//! map of the reduced system, the Kogut-Susskind energy and the Kähler measure
//! density on SL(2,C)^N.

use std::collections::VecDeque;

use nalgebra::{Matrix3, SMatrix, Vector3, Vector6};
use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{
    ad_matrix, adjoint_rep, polar_decompose, SL2CElement, SU2Element, Su2AlgebraElement,
};
use crate::sampling::{random_algebra, random_su2, rng_from_seed};
use crate::tolerance::Tolerance;

/// One boundary edge of a plaquette: a link traversed forwards (`dir = 1`) or
/// backwards (`dir = -1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaquetteEdge {
    pub link: usize,
    pub dir: i8,
}

/// Serialized lattice layout.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub sites: usize,
    pub links: Vec<[usize; 2]>,
    pub plaquettes: Vec<Vec<PlaquetteEdge>>,
    pub tree: Vec<usize>,
    pub basepoint: usize,
}

/// A connected oriented graph with plaquettes, a basepoint and a spanning tree.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeGraph {
    num_sites: usize,
    links: Vec<(usize, usize)>,
    plaquettes: Vec<Vec<PlaquetteEdge>>,
    basepoint: usize,
    tree: Vec<usize>,
    off_tree: Vec<usize>,
}

impl LatticeGraph {
    /// Validates connectivity, the spanning tree and the plaquette cycles.
    pub fn new(
        num_sites: usize,
        links: Vec<(usize, usize)>,
        plaquettes: Vec<Vec<PlaquetteEdge>>,
        basepoint: usize,
        tree: Vec<usize>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidLattice(msg));
        if num_sites == 0 {
            return bad("lattice has no sites".into());
        }
        if basepoint >= num_sites {
            return bad(format!("basepoint {basepoint} out of range"));
        }
        if let Some((id, _)) = links
            .iter()
            .enumerate()
            .find(|(_, &(s, t))| s >= num_sites || t >= num_sites)
        {
            return bad(format!("link {id} references a missing site"));
        }
        if tree.len() + 1 != num_sites {
            return bad(format!(
                "tree has {} links, a spanning tree needs {}",
                tree.len(),
                num_sites - 1
            ));
        }
        let mut parent: Vec<usize> = (0..num_sites).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut in_tree = vec![false; links.len()];
        for &id in &tree {
            let Some(&(s, t)) = links.get(id) else {
                return bad(format!("tree link {id} does not exist"));
            };
            if in_tree[id] {
                return bad(format!("tree link {id} listed twice"));
            }
            in_tree[id] = true;
            let (rs, rt) = (find(&mut parent, s), find(&mut parent, t));
            if rs == rt {
                return bad(format!("tree link {id} closes a cycle"));
            }
            parent[rs] = rt;
        }
        // n − 1 acyclic edges on n vertices span, so the graph is connected.
        for (pid, boundary) in plaquettes.iter().enumerate() {
            if boundary.is_empty() {
                return bad(format!("plaquette {pid} is empty"));
            }
            let mut ends = Vec::with_capacity(boundary.len());
            for e in boundary {
                let Some(&(s, t)) = links.get(e.link) else {
                    return bad(format!("plaquette {pid} uses missing link {}", e.link));
                };
                ends.push(match e.dir {
                    1 => (s, t),
                    -1 => (t, s),
                    d => return bad(format!("plaquette {pid} has direction {d}")),
                });
            }
            let closed = (0..ends.len()).all(|k| ends[k].1 == ends[(k + 1) % ends.len()].0);
            if !closed {
                return bad(format!("plaquette {pid} boundary is not a closed cycle"));
            }
        }
        let off_tree = (0..links.len()).filter(|&id| !in_tree[id]).collect();
        Ok(Self {
            num_sites,
            links,
            plaquettes,
            basepoint,
            tree,
            off_tree,
        })
    }

    pub fn from_json(json: &LatticeJson) -> Result<Self> {
        Self::new(
            json.sites,
            json.links.iter().map(|&[s, t]| (s, t)).collect(),
            json.plaquettes.clone(),
            json.basepoint,
            json.tree.clone(),
        )
    }

    pub fn to_json(&self) -> LatticeJson {
        LatticeJson {
            sites: self.num_sites,
            links: self.links.iter().map(|&(s, t)| [s, t]).collect(),
            plaquettes: self.plaquettes.clone(),
            tree: self.tree.clone(),
            basepoint: self.basepoint,
        }
    }

    pub fn num_sites(&self) -> usize {
        self.num_sites
    }

    pub fn num_links(&self) -> usize {
        self.links.len()
    }

    pub fn num_plaquettes(&self) -> usize {
        self.plaquettes.len()
    }

    pub fn links(&self) -> &[(usize, usize)] {
        &self.links
    }

    pub fn plaquettes(&self) -> &[Vec<PlaquetteEdge>] {
        &self.plaquettes
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    pub fn tree(&self) -> &[usize] {
        &self.tree
    }

    /// Off-tree link ids; position `k` is the `(k+1)`-th entry of the tuple.
    pub fn off_tree(&self) -> &[usize] {
        &self.off_tree
    }

    /// Number of off-tree links, `|links| − |sites| + 1`.
    pub fn n_off_tree(&self) -> usize {
        self.off_tree.len()
    }

    /// Same lattice with plaquette `pid` traversed in the opposite sense.
    pub fn with_reversed_plaquette(&self, pid: usize) -> Self {
        let mut out = self.clone();
        if let Some(boundary) = out.plaquettes.get_mut(pid) {
            boundary.reverse();
            for e in boundary.iter_mut() {
                e.dir = -e.dir;
            }
        }
        out
    }
}

/// Rectangular lattice with canonical numbering.
///
/// Sites are numbered with the first axis fastest. For each site and each
/// axis in order, the link to the forward neighbour gets the next id. Each
/// plaquette in the `(d1, d2)` plane (`d1 < d2`) is traversed counterclockwise.
/// The tree is a BFS tree from the origin exploring links by increasing id.
pub fn build_rect_lattice(dims: &[usize], periodic: bool) -> Result<LatticeGraph> {
    if dims.is_empty() {
        return Err(Error::InvalidDims("no extents given".into()));
    }
    if let Some(&d) = dims.iter().find(|&&d| d == 0) {
        return Err(Error::InvalidDims(format!("extent {d} must be at least 1")));
    }
    if periodic && dims.iter().any(|&d| d < 2) {
        return Err(Error::InvalidDims(
            "periodic lattices need extent at least 2 on every axis".into(),
        ));
    }
    let num_sites: usize = dims.iter().product();
    let coords = |mut site: usize| {
        dims.iter()
            .map(|&d| {
                let c = site % d;
                site /= d;
                c
            })
            .collect::<Vec<_>>()
    };
    let index = |c: &[usize]| c.iter().rev().zip(dims.iter().rev()).fold(0, |acc, (&x, &d)| acc * d + x);
    let step = |site: usize, axis: usize| -> Option<usize> {
        let mut c = coords(site);
        if c[axis] + 1 < dims[axis] {
            c[axis] += 1;
        } else if periodic {
            c[axis] = 0;
        } else {
            return None;
        }
        Some(index(&c))
    };

    let mut links = Vec::new();
    let mut link_id = vec![vec![None; dims.len()]; num_sites];
    for (site, ids) in link_id.iter_mut().enumerate() {
        for (axis, id) in ids.iter_mut().enumerate() {
            if let Some(target) = step(site, axis) {
                *id = Some(links.len());
                links.push((site, target));
            }
        }
    }

    let mut plaquettes = Vec::new();
    for site in 0..num_sites {
        for d1 in 0..dims.len() {
            for d2 in d1 + 1..dims.len() {
                let (Some(l1), Some(l2)) = (link_id[site][d1], link_id[site][d2]) else {
                    continue;
                };
                let (Some(s1), Some(s2)) = (step(site, d1), step(site, d2)) else {
                    continue;
                };
                let (Some(l3), Some(l4)) = (link_id[s1][d2], link_id[s2][d1]) else {
                    continue;
                };
                plaquettes.push(vec![
                    PlaquetteEdge { link: l1, dir: 1 },
                    PlaquetteEdge { link: l3, dir: 1 },
                    PlaquetteEdge { link: l4, dir: -1 },
                    PlaquetteEdge { link: l2, dir: -1 },
                ]);
            }
        }
    }

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); num_sites];
    for (id, &(s, t)) in links.iter().enumerate() {
        incident[s].push(id);
        incident[t].push(id);
    }
    let mut seen = vec![false; num_sites];
    let mut tree = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(x) = queue.pop_front() {
        for &id in &incident[x] {
            let (s, t) = links[id];
            let y = if s == x { t } else { s };
            if !seen[y] {
                seen[y] = true;
                tree.push(id);
                queue.push_back(y);
            }
        }
    }
    tree.sort_unstable();
    LatticeGraph::new(num_sites, links, plaquettes, 0, tree)
}

/// Parses `"LxW"`, `"LxWxH"` or `"LxW,periodic"`.
pub fn parse_lattice_spec(spec: &str) -> Result<LatticeGraph> {
    let (dims, periodic) = match spec.split_once(',') {
        Some((d, "periodic")) => (d, true),
        Some((_, flag)) => return Err(Error::InvalidDims(format!("unknown lattice flag {flag:?}"))),
        None => (spec, false),
    };
    let dims = dims
        .split('x')
        .map(|d| {
            d.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidDims(format!("bad extent {d:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    build_rect_lattice(&dims, periodic)
}

/// Link-indexed SU(2) values.
#[derive(Debug, Clone, PartialEq)]
pub struct GaugeConfig(pub Vec<SU2Element>);

/// Site-indexed SU(2) values.
#[derive(Debug, Clone, PartialEq)]
pub struct GaugeTransform(pub Vec<SU2Element>);

/// Link-indexed electric fields in the left trivialization.
#[derive(Debug, Clone, PartialEq)]
pub struct ElectricField(pub Vec<Su2AlgebraElement>);

impl GaugeConfig {
    pub fn identity(lattice: &LatticeGraph) -> Self {
        Self(vec![SU2Element::identity(); lattice.num_links()])
    }

    pub fn random(lattice: &LatticeGraph, rng: &mut impl Rng) -> Self {
        Self((0..lattice.num_links()).map(|_| random_su2(rng)).collect())
    }

    fn check(&self, lattice: &LatticeGraph) -> Result<()> {
        if self.0.len() != lattice.num_links() {
            return Err(Error::LatticeMismatch(format!(
                "{} link values for {} links",
                self.0.len(),
                lattice.num_links()
            )));
        }
        Ok(())
    }
}

impl GaugeTransform {
    pub fn identity(lattice: &LatticeGraph) -> Self {
        Self(vec![SU2Element::identity(); lattice.num_sites()])
    }

    pub fn constant(lattice: &LatticeGraph, g: &SU2Element) -> Self {
        Self(vec![g.clone(); lattice.num_sites()])
    }

    pub fn random(lattice: &LatticeGraph, rng: &mut impl Rng) -> Self {
        Self((0..lattice.num_sites()).map(|_| random_su2(rng)).collect())
    }

    /// Pointwise product `(self · other)(x) = self(x) other(x)`.
    pub fn compose(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a.mul(b)).collect())
    }

    fn check(&self, lattice: &LatticeGraph) -> Result<()> {
        if self.0.len() != lattice.num_sites() {
            return Err(Error::LatticeMismatch(format!(
                "{} site values for {} sites",
                self.0.len(),
                lattice.num_sites()
            )));
        }
        Ok(())
    }
}

impl ElectricField {
    pub fn zero(lattice: &LatticeGraph) -> Self {
        Self(vec![Su2AlgebraElement::zero(); lattice.num_links()])
    }

    pub fn random(lattice: &LatticeGraph, rng: &mut impl Rng, bound: f64) -> Self {
        Self((0..lattice.num_links()).map(|_| random_algebra(rng, bound)).collect())
    }
}

/// `(a·g)(λ) = g(x) a(λ) g(y)⁻¹` for `λ: x → y`.
///
/// With this formula `(a·g)·h = a·(hg)`, where `hg` is the pointwise product.
pub fn apply_gauge(
    lattice: &LatticeGraph,
    a: &GaugeConfig,
    g: &GaugeTransform,
) -> Result<GaugeConfig> {
    a.check(lattice)?;
    g.check(lattice)?;
    Ok(GaugeConfig(
        lattice
            .links
            .iter()
            .zip(&a.0)
            .map(|(&(x, y), link)| g.0[x].mul(link).mul(&g.0[y].inverse()))
            .collect(),
    ))
}

/// Cotangent lift of [`apply_gauge`] on the left-trivialized electric field:
/// `E(λ) ↦ Ad(g(y)) E(λ)`.
pub fn apply_gauge_electric(
    lattice: &LatticeGraph,
    e: &ElectricField,
    g: &GaugeTransform,
) -> Result<ElectricField> {
    g.check(lattice)?;
    if e.0.len() != lattice.num_links() {
        return Err(Error::LatticeMismatch("electric field length".into()));
    }
    Ok(ElectricField(
        lattice
            .links
            .iter()
            .zip(&e.0)
            .map(|(&(_, y), field)| field.adjoint_by(&g.0[y]))
            .collect(),
    ))
}

/// The gauge transformation `g` with `g(x₀) = 𝟙` that trivializes all tree
/// links, and the off-tree values of `a·g` in canonical order.
pub fn tree_gauge_fix(
    lattice: &LatticeGraph,
    a: &GaugeConfig,
) -> Result<(Vec<SU2Element>, GaugeTransform)> {
    a.check(lattice)?;
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); lattice.num_sites];
    for &id in &lattice.tree {
        let (s, t) = lattice.links[id];
        incident[s].push(id);
        incident[t].push(id);
    }
    let mut g: Vec<Option<SU2Element>> = vec![None; lattice.num_sites];
    g[lattice.basepoint] = Some(SU2Element::identity());
    let mut queue = VecDeque::from([lattice.basepoint]);
    while let Some(x) = queue.pop_front() {
        let gx = g[x].clone().expect("visited sites carry a value");
        for &id in &incident[x] {
            let (s, t) = lattice.links[id];
            // g(s) a(λ) g(t)⁻¹ = 𝟙
            let (y, gy) = if s == x {
                (t, gx.mul(&a.0[id]))
            } else {
                (s, gx.mul(&a.0[id].inverse()))
            };
            if g[y].is_none() {
                g[y] = Some(gy);
                queue.push_back(y);
            }
        }
    }
    let g = GaugeTransform(g.into_iter().map(|v| v.expect("tree spans")).collect());
    let fixed = apply_gauge(lattice, a, &g)?;
    let tuple = lattice.off_tree.iter().map(|&id| fixed.0[id].clone()).collect();
    Ok((tuple, g))
}

/// Ordered product of link values around the boundary of plaquette `pid`.
pub fn plaquette_holonomy(lattice: &LatticeGraph, a: &GaugeConfig, pid: usize) -> Result<SU2Element> {
    a.check(lattice)?;
    let boundary = lattice
        .plaquettes
        .get(pid)
        .ok_or_else(|| Error::InvalidLattice(format!("no plaquette {pid}")))?;
    Ok(boundary.iter().fold(SU2Element::identity(), |acc, e| {
        if e.dir > 0 {
            acc.mul(&a.0[e.link])
        } else {
            acc.mul(&a.0[e.link].inverse())
        }
    }))
}

/// `H = g²/(2δ) Σ_λ |E(λ)|² − 1/(g²δ) Σ_π (tr a(π) + conj tr a(π))`.
pub fn kogut_susskind_energy(
    lattice: &LatticeGraph,
    a: &GaugeConfig,
    e: &ElectricField,
    coupling: f64,
    spacing: f64,
) -> Result<f64> {
    if !(coupling > 0.0 && spacing > 0.0) {
        return Err(Error::InvalidParams(format!(
            "coupling {coupling} and spacing {spacing} must be positive"
        )));
    }
    if e.0.len() != lattice.num_links() {
        return Err(Error::LatticeMismatch("electric field length".into()));
    }
    let electric: f64 = e.0.iter().map(Su2AlgebraElement::norm_sqr).sum();
    let mut magnetic = 0.0;
    for pid in 0..lattice.num_plaquettes() {
        let tr = plaquette_holonomy(lattice, a, pid)?.matrix().trace();
        magnetic += 2.0 * tr.re;
    }
    let g2 = coupling * coupling;
    Ok(g2 / (2.0 * spacing) * electric - magnetic / (g2 * spacing))
}

/// A point `(a₁..a_N, A₁..A_N)` of the trivialized cotangent bundle of SU(2)^N.
#[derive(Debug, Clone, PartialEq)]
pub struct PhasePoint {
    pub a: Vec<SU2Element>,
    pub alg: Vec<Su2AlgebraElement>,
}

impl PhasePoint {
    pub fn new(a: Vec<SU2Element>, alg: Vec<Su2AlgebraElement>) -> Result<Self> {
        if a.len() != alg.len() {
            return Err(Error::InvalidParams(format!(
                "{} group entries but {} algebra entries",
                a.len(),
                alg.len()
            )));
        }
        Ok(Self { a, alg })
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// Lifted diagonal action `(g a_i g⁻¹, Ad(g) A_i)`.
    pub fn act(&self, g: &SU2Element) -> Self {
        Self {
            a: self.a.iter().map(|x| x.conjugate_by(g)).collect(),
            alg: self.alg.iter().map(|x| x.adjoint_by(g)).collect(),
        }
    }

    /// Per-entry `a_i exp(i A_i)` in SL(2,C).
    pub fn complexify(&self) -> Vec<SL2CElement<Complex64>> {
        self.a
            .iter()
            .zip(&self.alg)
            .map(|(a, alg)| crate::lie::polar_compose(a, alg))
            .collect()
    }
}

/// `μ = Σ_i Ad(a_i) A_i − A_i`, identified with su(2) by the invariant product.
pub fn momentum_map(p: &PhasePoint) -> Su2AlgebraElement {
    p.a.iter()
        .zip(&p.alg)
        .fold(Su2AlgebraElement::zero(), |acc, (a, alg)| {
            acc.add(&alg.adjoint_by(a).sub(alg))
        })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mu0Sector {
    /// Free sampling followed by a least-squares correction of the last two momenta.
    Generic,
    /// Diagonal group and algebra entries (orbit type T unless all central and zero).
    Diagonal,
}

const MU0_ATTEMPTS: usize = 32;
const MU0_BOUND: f64 = 1.0;

/// Random phase point on `μ⁻¹(0)`.
pub fn sample_mu0(n: usize, seed: u64, sector: Mu0Sector) -> Result<PhasePoint> {
    if n == 0 {
        return Err(Error::InvalidParams("N must be at least 1".into()));
    }
    let mut rng = rng_from_seed(seed);
    match sector {
        Mu0Sector::Diagonal => {
            let a = (0..n)
                .map(|_| SU2Element::torus(rng.random_range(0.1..3.0)))
                .collect();
            let alg = (0..n)
                .map(|_| Su2AlgebraElement::diagonal(rng.random_range(-1.0..1.0)))
                .collect();
            PhasePoint::new(a, alg)
        }
        Mu0Sector::Generic if n == 1 => {
            // μ = 0 forces A to commute with a: take A along the axis of a.
            let a = random_su2(&mut rng);
            let axis = Su2AlgebraElement::project(a.matrix());
            let scale = if axis.norm() > 1e-12 {
                rng.random_range(-MU0_BOUND..MU0_BOUND) / axis.norm()
            } else {
                0.0
            };
            PhasePoint::new(vec![a], vec![axis.scale(scale)])
        }
        Mu0Sector::Generic => {
            for _ in 0..MU0_ATTEMPTS {
                let a: Vec<_> = (0..n).map(|_| random_su2(&mut rng)).collect();
                let mut alg: Vec<_> = (0..n).map(|_| random_algebra(&mut rng, MU0_BOUND)).collect();
                let mu = Vector3::from(momentum_map(&PhasePoint::new(a.clone(), alg.clone())?).coords());
                let block = |g: &SU2Element| adjoint_rep(g) - Matrix3::identity();
                let mut system = SMatrix::<f64, 3, 6>::zeros();
                system.fixed_view_mut::<3, 3>(0, 0).copy_from(&block(&a[n - 2]));
                system.fixed_view_mut::<3, 3>(0, 3).copy_from(&block(&a[n - 1]));
                let svd = system.svd(true, true);
                if svd.rank(1e-8) < 3 {
                    continue;
                }
                let Ok(delta) = svd.solve(&(-mu), 1e-14) else {
                    continue;
                };
                let delta: Vector6<f64> = delta;
                let d1 = Su2AlgebraElement::from_coords([delta[0], delta[1], delta[2]]);
                let d2 = Su2AlgebraElement::from_coords([delta[3], delta[4], delta[5]]);
                alg[n - 2] = alg[n - 2].add(&d1);
                alg[n - 1] = alg[n - 1].add(&d2);
                let p = PhasePoint::new(a, alg)?;
                if momentum_map(&p).norm() <= Tolerance::default().matrix_abs {
                    return Ok(p);
                }
            }
            Err(Error::SolveFailed {
                attempts: MU0_ATTEMPTS,
            })
        }
    }
}

/// `√det(sin(ad A)/ad A)` from the spectrum `{0, ±iω}` of the skew matrix
/// `ad A`, which gives `sinh(ω)/ω`.
pub fn half_form_factor(alg: &Su2AlgebraElement) -> f64 {
    let ad = ad_matrix(alg);
    let omega = (0.5 * ad.norm_squared()).sqrt();
    if omega < 1e-4 {
        let w2 = omega * omega;
        1.0 + w2 / 6.0 + w2 * w2 / 120.0
    } else {
        omega.sinh() / omega
    }
}

/// `e^{−κ/ħ} η` at `g_i = a_i exp(i A_i)`, with `κ = Σ|A_i|²`.
pub fn measure_density(
    gs: &[SL2CElement<Complex64>],
    hbar: f64,
    tol: &Tolerance,
) -> Result<f64> {
    if hbar <= 0.0 || !hbar.is_finite() {
        return Err(Error::InvalidParams(format!("hbar = {hbar} must be positive")));
    }
    let mut kappa = 0.0;
    let mut eta = 1.0;
    for g in gs {
        let (_, alg) = polar_decompose(g, tol)?;
        kappa += alg.norm_sqr();
        eta *= half_form_factor(&alg);
    }
    Ok((-kappa / hbar).exp() * eta)
}
