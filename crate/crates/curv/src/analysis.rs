//! Metric and spectral consequences of curvature bounds: path distances,
//! weight non-degeneracy, degrees and the diameter bound, semigroup
//! contractivity checks, and the conversion from the original
//! cell-weight convention.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cellcomplex::{CellComplex, WeightedGraph};
use crate::curvature::{self, CurvatureValue, Witness};
use crate::error::Error;
use crate::numerics::{matrix_exponential, norm_p_omega, Mat, Scalar, WeightedSpace};

/// Single-source shortest-path distances with edge lengths `ω` (combinatorial
/// when absent): `dist[v] = d_ω(source, v)`, `None` for unreachable vertices.
pub fn path_distance<S: Scalar>(
    g: &WeightedGraph<S>,
    omega: Option<&[S]>,
    source: usize,
) -> Vec<Option<S>> {
    shortest_paths(g, omega, source, None)
}

/// Label-setting shortest paths; the linear scan for the next label keeps the
/// ordering requirements down to `PartialOrd`, which both scalar types have.
fn shortest_paths<S: Scalar>(
    g: &WeightedGraph<S>,
    omega: Option<&[S]>,
    source: usize,
    skip_edge: Option<usize>,
) -> Vec<Option<S>> {
    let n = g.n_vertices();
    let mut dist: Vec<Option<S>> = vec![None; n];
    let mut done = vec![false; n];
    dist[source] = Some(S::zero());
    loop {
        let mut next: Option<usize> = None;
        for u in 0..n {
            if done[u] || dist[u].is_none() {
                continue;
            }
            next = match next {
                None => Some(u),
                Some(b) => {
                    let du = dist[u].clone().unwrap();
                    let db = dist[b].clone().unwrap();
                    if (du - db).is_negative() {
                        Some(u)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        let Some(u) = next else { break };
        done[u] = true;
        let du = dist[u].clone().unwrap();
        for &(v, e) in g.neighbors(u) {
            if done[v] || skip_edge == Some(e) {
                continue;
            }
            let length = match omega {
                Some(o) => o[e].clone(),
                None => S::one(),
            };
            let candidate = du.clone() + length;
            let better = match &dist[v] {
                None => true,
                Some(dv) => (candidate.clone() - dv.clone()).is_negative(),
            };
            if better {
                dist[v] = Some(candidate);
            }
        }
    }
    dist
}

/// First edge witnessing degeneracy of `ω`: an edge `(v, w)` is degenerate
/// when some other path from `v` to `w` is at most as long as the edge
/// itself, i.e. the edge fails to be the unique shortest path between its
/// endpoints.  `None` means `ω` is non-degenerate.
pub fn degenerate_edge<S: Scalar>(g: &WeightedGraph<S>, omega: &[S]) -> Option<usize> {
    assert_eq!(omega.len(), g.n_edges(), "omega length mismatch");
    for e in 0..g.n_edges() {
        let (a, b) = g.edge(e);
        if let Some(alternative) = shortest_paths(g, Some(omega), a, Some(e))[b].clone() {
            if !(alternative - omega[e].clone()).is_positive() {
                return Some(e);
            }
        }
    }
    None
}

/// True iff every edge is the unique shortest path between its endpoints;
/// see [`degenerate_edge`] for the witness.
pub fn is_nondegenerate<S: Scalar>(g: &WeightedGraph<S>, omega: &[S]) -> bool {
    degenerate_edge(g, omega).is_none()
}

/// Diameter of the graph under edge lengths `ω` (combinatorial when absent);
/// `None` when the graph is disconnected or empty.
pub fn diameter<S: Scalar>(g: &WeightedGraph<S>, omega: Option<&[S]>) -> Option<S> {
    if g.n_vertices() == 0 {
        return None;
    }
    let mut best = S::zero();
    for u in 0..g.n_vertices() {
        for d in path_distance(g, omega, u) {
            let d = d?;
            if (d.clone() - best.clone()).is_positive() {
                best = d;
            }
        }
    }
    Some(best)
}

/// Degrees `Deg(x) = Σ_{z⋗x} m(z)/m(x) + max_{v⋖x} m(x)/m(v)` (the max term
/// absent for vertices), their per-dimension maxima, and the diameter.
#[derive(Debug, Clone)]
pub struct DegreeStats<S> {
    /// `Deg(x)` for every cell, indexed by dimension.
    pub deg: [Vec<S>; 3],
    /// `D_k = max_{x ∈ X_k} Deg(x)`; `None` when `X_k` is empty.
    pub d_max: [Option<S>; 3],
    /// ω-weighted diameter (combinatorial when ω was absent); `None` when
    /// the graph is disconnected.
    pub diam: Option<S>,
}

/// Compute [`DegreeStats`] for a complex; `omega` only affects the diameter.
pub fn degree_stats<S: Scalar>(c: &CellComplex<S>, omega: Option<&[S]>) -> DegreeStats<S> {
    let mut deg: [Vec<S>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for dim in 0..3 {
        let mut values = Vec::with_capacity(c.n_cells(dim));
        for x in 0..c.n_cells(dim) {
            let mx = c.weight(dim, x).clone();
            let mut up = S::zero();
            if dim < 2 {
                for z in 0..c.n_cells(dim + 1) {
                    if c.boundary(dim + 1, z).iter().any(|&(y, _)| y == x) {
                        up += c.weight(dim + 1, z).clone() / mx.clone();
                    }
                }
            }
            let mut down = S::zero();
            if dim > 0 {
                for &(v, _) in c.boundary(dim, x) {
                    let ratio = mx.clone() / c.weight(dim - 1, v).clone();
                    if (ratio.clone() - down.clone()).is_positive() {
                        down = ratio;
                    }
                }
            }
            values.push(up + down);
        }
        deg[dim] = values;
    }
    let d_max = [max_of(&deg[0]), max_of(&deg[1]), max_of(&deg[2])];
    DegreeStats {
        d_max,
        diam: diameter(c.skeleton(), omega),
        deg,
    }
}

fn max_of<S: Scalar>(values: &[S]) -> Option<S> {
    values.iter().cloned().reduce(|acc, v| {
        if (v.clone() - acc.clone()).is_positive() {
            v
        } else {
            acc
        }
    })
}

/// Outcome of the diameter bound `diam ≤ 2·min(D_0, D_1)/R` where
/// `R = min_x F_ω(x)` over the edges.
#[derive(Debug, Clone)]
pub enum DiameterBound<S> {
    /// Hypotheses not met: the bound says nothing about this complex.
    NotApplicable { reason: String },
    /// Hypotheses met; `pass` must be true — a failure is a library defect.
    Checked { r: S, diam: S, bound: S, pass: bool },
}

impl<S> DiameterBound<S> {
    /// True unless the check ran and failed.
    pub fn holds(&self) -> bool {
        !matches!(self, DiameterBound::Checked { pass: false, .. })
    }
}

/// Check the diameter bound on a complex: with `R` the minimal edge Forman
/// curvature, positive curvature forces `diam_ω ≤ 2·min(D_0, D_1)/R`.
/// Disconnected graphs and non-positive `R` report
/// [`DiameterBound::NotApplicable`].
pub fn check_diameter_bound<S: Scalar>(
    c: &CellComplex<S>,
    omega: Option<&[S]>,
) -> DiameterBound<S> {
    if c.n_cells(1) == 0 {
        return DiameterBound::NotApplicable {
            reason: "the complex has no edges".into(),
        };
    }
    let curvatures = curvature::forman_all(c, 1, omega);
    let r = min_of(&curvatures).expect("at least one edge");
    if !r.is_positive() {
        return DiameterBound::NotApplicable {
            reason: format!("minimal Forman curvature {r} is not positive"),
        };
    }
    let stats = degree_stats(c, omega);
    let Some(diam) = stats.diam else {
        return DiameterBound::NotApplicable {
            reason: "the graph is disconnected".into(),
        };
    };
    let d0 = stats.d_max[0].clone().expect("edges imply vertices");
    let d1 = stats.d_max[1].clone().expect("at least one edge");
    let d_min = if (d1.clone() - d0.clone()).is_negative() {
        d1
    } else {
        d0
    };
    let bound = S::from_int(2) * d_min / r.clone();
    let pass = !(diam.clone() - bound.clone()).is_positive();
    DiameterBound::Checked {
        r,
        diam,
        bound,
        pass,
    }
}

fn min_of<S: Scalar>(values: &[S]) -> Option<S> {
    values.iter().cloned().reduce(|acc, v| {
        if (v.clone() - acc.clone()).is_negative() {
            v
        } else {
            acc
        }
    })
}

/// Sampling plan for the semigroup checks.
#[derive(Debug, Clone)]
pub struct SemigroupSamples {
    /// Times `t` at which `e^{−tA}` is evaluated.
    pub times: Vec<f64>,
    /// Norm exponents `p` (use `f64::INFINITY` for the sup norm).
    pub exponents: Vec<f64>,
    /// Number of pseudo-random test vectors.
    pub random_vectors: usize,
    /// Seed for the pseudo-random vectors, fixed for reproducibility.
    pub seed: u64,
}

impl Default for SemigroupSamples {
    fn default() -> Self {
        SemigroupSamples {
            times: vec![0.1, 1.0, 5.0],
            exponents: vec![1.0, 2.0, f64::INFINITY],
            random_vectors: 20,
            seed: 0x5EED,
        }
    }
}

/// Result of a semigroup check: counts of the checks performed plus a
/// description of each failure.
#[derive(Debug, Clone, Default)]
pub struct SemigroupReport {
    pub norm_checks: usize,
    pub derivative_checks: usize,
    pub failures: Vec<String>,
}

impl SemigroupReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

const SEMIGROUP_TOL: f64 = 1e-8;

/// Verify `‖e^{−tA}f‖_{ω,p} ≤ e^{−Rt}‖f‖_{ω,p}` on sampled `(t, p, f)`,
/// which holds whenever the Forman curvatures of `A` are all ≥ `R`.
///
/// Test vectors are the coordinate vectors, the extremal vectors
/// `f(x) = ω(x), f(y) = −ω(y)·sgn(Ay(x))` (which peak at `x` and attain
/// `Af(x)/ω(x) = F_ω(x)`), and pseudo-random vectors.  The extremal vectors
/// also get a derivative-at-zero check `Af(x)/ω(x) ≥ R`, the sharp form of
/// the contraction statement: it fails as soon as `R` exceeds the minimal
/// curvature, even when the finite-`t` norm inequalities still hold.
pub fn semigroup_contractivity_check(
    a: &Mat<f64>,
    m: &[f64],
    r: f64,
    omega: Option<&[f64]>,
    samples: &SemigroupSamples,
) -> Result<SemigroupReport, Error> {
    assert_eq!(a.rows(), a.cols(), "A must be square");
    let n = a.rows();
    assert_eq!(m.len(), n, "weight vector length mismatch");
    if let Some(o) = omega {
        assert_eq!(o.len(), n, "omega length mismatch");
    }
    let om = |i: usize| omega.map_or(1.0, |o| o[i]);
    let space = WeightedSpace::new(m.to_vec());

    let mut vectors: Vec<(String, Vec<f64>)> = Vec::new();
    for x in 0..n {
        let mut f = vec![0.0; n];
        f[x] = 1.0;
        vectors.push((format!("coordinate vector {x}"), f));
    }
    let mut extremal: Vec<(usize, Vec<f64>)> = Vec::new();
    for x in 0..n {
        let mut f = vec![0.0; n];
        f[x] = om(x);
        for y in 0..n {
            if y == x {
                continue;
            }
            let entry = a[(x, y)];
            if entry.is_positive() {
                f[y] = -om(y);
            } else if entry.is_negative() {
                f[y] = om(y);
            }
        }
        extremal.push((x, f.clone()));
        vectors.push((format!("extremal vector at {x}"), f));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(samples.seed);
    for i in 0..samples.random_vectors {
        let f: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        vectors.push((format!("random vector {i}"), f));
    }

    let mut report = SemigroupReport::default();
    for &t in &samples.times {
        let semigroup = matrix_exponential(a, t);
        let decay = (-r * t).exp();
        for &p in &samples.exponents {
            for (name, f) in &vectors {
                let lhs = norm_p_omega(&semigroup.mul_vec(f), p, omega, &space)?;
                let rhs = decay * norm_p_omega(f, p, omega, &space)?;
                report.norm_checks += 1;
                if lhs > rhs + SEMIGROUP_TOL {
                    report.failures.push(format!(
                        "norm bound fails at t = {t}, p = {p}, {name}: {lhs:.12e} > {rhs:.12e}"
                    ));
                }
            }
        }
    }
    for (x, f) in &extremal {
        let rate = a.mul_vec(f)[*x] / om(*x);
        report.derivative_checks += 1;
        if rate < r - SEMIGROUP_TOL {
            report.failures.push(format!(
                "derivative at zero fails for the extremal vector at {x}: {rate:.12} < {r:.12}"
            ));
        }
    }
    Ok(report)
}

/// Verify the gradient-contraction characterization of Ollivier curvature:
/// `‖δe^{−tδ*δ}f‖_{ω,∞} ≤ e^{−Rt}‖δf‖_{ω,∞}` holds for all `f` iff
/// `κ_ω ≥ R` on every edge.
///
/// Test vectors are the coordinate vectors, the optimal potentials from the
/// per-edge curvature programs (whose derivative at zero attains `κ_ω(x)`
/// exactly, giving the sharp failure detector), and pseudo-random vectors.
/// Only the `∞`-norm is meaningful here, so `samples.exponents` is ignored.
pub fn ollivier_semigroup_check(
    g: &WeightedGraph<f64>,
    omega: Option<&[f64]>,
    r: f64,
    samples: &SemigroupSamples,
) -> Result<SemigroupReport, Error> {
    let c = CellComplex::from_graph(g.clone());
    let h0 = c.hodge_matrix(0);
    let om = |e: usize| omega.map_or(1.0, |o| o[e]);
    let edge_space = WeightedSpace::new(g.edge_weights().to_vec());
    let coboundary = |f: &[f64]| -> Vec<f64> {
        (0..g.n_edges())
            .map(|e| {
                let (a, b) = g.edge(e);
                f[b] - f[a]
            })
            .collect()
    };

    let mut vectors: Vec<(String, Vec<f64>)> = Vec::new();
    for v in 0..g.n_vertices() {
        let mut f = vec![0.0; g.n_vertices()];
        f[v] = 1.0;
        vectors.push((format!("coordinate vector {v}"), f));
    }
    let mut potentials: Vec<(usize, Vec<f64>)> = Vec::new();
    for e in 0..g.n_edges() {
        let cert = curvature::ollivier_edge(&c, e, omega)?;
        if let (CurvatureValue::Finite(_), Witness::Potential(f)) = (&cert.value, &cert.witness) {
            potentials.push((e, f.values.clone()));
            vectors.push((
                format!("optimal potential for {}", c.cell_name(1, e)),
                f.values.clone(),
            ));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(samples.seed);
    for i in 0..samples.random_vectors {
        let f: Vec<f64> = (0..g.n_vertices()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        vectors.push((format!("random vector {i}"), f));
    }

    let mut report = SemigroupReport::default();
    for &t in &samples.times {
        let semigroup = matrix_exponential(&h0, t);
        let decay = (-r * t).exp();
        for (name, f) in &vectors {
            let lhs = edge_space.norm_inf_omega(&coboundary(&semigroup.mul_vec(f)), omega);
            let rhs = decay * edge_space.norm_inf_omega(&coboundary(f), omega);
            report.norm_checks += 1;
            if lhs > rhs + SEMIGROUP_TOL {
                report.failures.push(format!(
                    "gradient bound fails at t = {t}, {name}: {lhs:.12e} > {rhs:.12e}"
                ));
            }
        }
    }
    for (e, f) in &potentials {
        let hf = h0.mul_vec(f);
        let (a, b) = g.edge(*e);
        let rate = (hf[b] - hf[a]) / om(*e);
        report.derivative_checks += 1;
        if rate < r - SEMIGROUP_TOL {
            report.failures.push(format!(
                "derivative at zero fails for the potential of {}: {rate:.12} < {r:.12}",
                c.cell_name(1, *e)
            ));
        }
    }
    Ok(report)
}

/// Convert weights from the convention where a single cell weight `w` drives
/// both the inner product and the curvature normalization: `m = 1/w` and
/// `ω = √w`, per dimension.  With these, the ω-weighted Forman curvature of
/// the `(m, ω)` complex equals the original curvature divided by `w(x)`.
pub fn from_original_forman(w: &[Vec<f64>; 3]) -> ([Vec<f64>; 3], [Vec<f64>; 3]) {
    let m = [
        w[0].iter().map(|v| 1.0 / v).collect(),
        w[1].iter().map(|v| 1.0 / v).collect(),
        w[2].iter().map(|v| 1.0 / v).collect(),
    ];
    let omega = [
        w[0].iter().map(|v| v.sqrt()).collect(),
        w[1].iter().map(|v| v.sqrt()).collect(),
        w[2].iter().map(|v| v.sqrt()).collect(),
    ];
    (m, omega)
}

/// Direct evaluation of the original Forman curvature of an edge, divided by
/// the edge's weight, on a complex whose stored weights are read as `w`:
///
/// `F(x)/w(x) = Σ_{v⋖x} w(v)/w(x) + Σ_{z⋗x} w(x)/w(z)
///            − Σ_{y≠x} |Σ_{v⋖x,y} w(v)/√(w(x)w(y)) − Σ_{z⋗x,y} √(w(x)w(y))/w(z)|`.
pub fn original_forman_direct(c: &CellComplex<f64>, edge: usize) -> f64 {
    let wx = *c.weight(1, edge);
    let mut value = 0.0;
    for &(v, _) in c.boundary(1, edge) {
        value += c.weight(0, v) / wx;
    }
    let two_cells_of = |e: usize| -> Vec<usize> {
        (0..c.n_cells(2))
            .filter(|&z| c.boundary(2, z).iter().any(|&(y, _)| y == e))
            .collect()
    };
    let up_x = two_cells_of(edge);
    for &z in &up_x {
        value += wx / c.weight(2, z);
    }
    for y in 0..c.n_cells(1) {
        if y == edge {
            continue;
        }
        let wy = *c.weight(1, y);
        let root = (wx * wy).sqrt();
        let mut inner = 0.0;
        for &(v, _) in c.boundary(1, edge) {
            if c.boundary(1, y).iter().any(|&(u, _)| u == v) {
                inner += c.weight(0, v) / root;
            }
        }
        for &z in &up_x {
            if c.boundary(2, z).iter().any(|&(e2, _)| e2 == y) {
                inner -= root / c.weight(2, z);
            }
        }
        value -= inner.abs();
    }
    value
}
