//! Curvature of cells in a weighted complex.
//!
//! Two notions are computed and related to each other:
//!
//! * **Forman curvature** `F(x) = Hx(x) − Σ_{y≠x} |Hy(x)|`, read off the
//!   Hodge Laplacian; the ω-weighted variant scales the off-diagonal terms
//!   by `ω(y)/ω(x)`.
//! * **Ollivier curvature** of an edge, as the value of a linear program
//!   over vertex potentials, with three equivalent reformulations: a
//!   one-form program, a Kantorovich transport problem, and a penalty
//!   transport problem.
//!
//! The bridge between the two is maximization over 2-cell weights:
//! [`max_forman_edge`] maximizes `F` over all re-weightings of candidate
//! 2-cells and (for candidates covering all shortcutting cycles) meets the
//! Ollivier value exactly, while [`maxmin_forman`] maximizes the *minimal*
//! Forman curvature and certifies optimality with a dual operator `J`.
//! Everything returns a [`CurvatureCertificate`] whose witness can be
//! re-verified independently of the solver — see [`verify_certificate`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::cellcomplex::{
    attach_two_cells, CellComplex, Cochain, Cycle, CycleCriterion, VertexId, WeightedGraph,
};
use crate::error::Error;
use crate::numerics::{Mat, Scalar};
use crate::simplex::{Bound, LinearProgram, LpStatus, Rel, Sense};

/// Split a self-adjoint operator as `A = D + Δ` where `D` is diagonal and
/// `Δ` is minimally diagonally dominant: `Δx(x) = Σ_{y≠x} |Δy(x)|` exactly.
/// The diagonal is `D(x) = Ax(x) − Σ_{y≠x} |Ay(x)|` — applied to a Hodge
/// Laplacian it is the vector of Forman curvatures.
pub fn diagonal_split<S: Scalar>(a: &Mat<S>) -> (Vec<S>, Mat<S>) {
    assert_eq!(a.rows(), a.cols(), "diagonal_split needs a square matrix");
    let n = a.rows();
    let mut d = Vec::with_capacity(n);
    for x in 0..n {
        let mut v = a[(x, x)].clone();
        for y in 0..n {
            if y != x {
                v = v - a[(x, y)].abs();
            }
        }
        d.push(v);
    }
    let mut delta = a.clone();
    for x in 0..n {
        delta[(x, x)] = delta[(x, x)].clone() - d[x].clone();
    }
    (d, delta)
}

/// Forman curvature of every cell of dimension `dim`, optionally ω-weighted.
/// `omega` is indexed like the cells of that dimension.
pub fn forman_all<S: Scalar>(c: &CellComplex<S>, dim: usize, omega: Option<&[S]>) -> Vec<S> {
    if let Some(o) = omega {
        assert_eq!(o.len(), c.n_cells(dim), "omega length mismatch");
    }
    let h = c.hodge_matrix(dim);
    let n = h.rows();
    (0..n)
        .map(|x| {
            let mut v = h[(x, x)].clone();
            for y in 0..n {
                if y != x {
                    let term = match omega {
                        Some(o) => o[y].clone() / o[x].clone() * h[(x, y)].abs(),
                        None => h[(x, y)].abs(),
                    };
                    v = v - term;
                }
            }
            v
        })
        .collect()
}

/// Forman curvature of a single cell; see [`forman_all`].
pub fn forman<S: Scalar>(c: &CellComplex<S>, dim: usize, cell: usize, omega: Option<&[S]>) -> S {
    forman_all(c, dim, omega)
        .into_iter()
        .nth(cell)
        .expect("cell index in range")
}

/// A curvature value: finite, or +∞ when the defining infimum runs over an
/// empty constraint set.  The infinite case is a distinct status, never a
/// sentinel number.
#[derive(Debug, Clone, PartialEq)]
pub enum CurvatureValue<S> {
    Finite(S),
    Infinite,
}

impl<S: Scalar> CurvatureValue<S> {
    pub fn is_finite(&self) -> bool {
        matches!(self, CurvatureValue::Finite(_))
    }

    pub fn finite(&self) -> Option<&S> {
        match self {
            CurvatureValue::Finite(v) => Some(v),
            CurvatureValue::Infinite => None,
        }
    }

    /// The finite value; panics on [`CurvatureValue::Infinite`].
    pub fn unwrap_finite(&self) -> &S {
        self.finite().expect("curvature value is infinite")
    }
}

impl<S: Scalar> fmt::Display for CurvatureValue<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvatureValue::Finite(v) => write!(f, "{v}"),
            CurvatureValue::Infinite => write!(f, "infinite"),
        }
    }
}

/// A computed curvature together with the optimizer that attains it.  The
/// witness re-verifies feasibility and reproduces the value (exactly in
/// rational mode) — see [`verify_certificate`].
#[derive(Debug, Clone)]
pub struct CurvatureCertificate<S> {
    /// Dimension of the target cell (1 for edges).
    pub dim: usize,
    /// Index of the target cell; `None` for global certificates (max-min).
    pub cell: Option<usize>,
    /// Display name of the target, e.g. `(1,2)`.
    pub target: String,
    pub value: CurvatureValue<S>,
    pub witness: Witness<S>,
}

/// The optimizer attached to a [`CurvatureCertificate`].
#[derive(Debug, Clone)]
pub enum Witness<S> {
    /// Optimal potential `f` on the cells one dimension below the target
    /// (vertices, for an edge).
    Potential(Cochain<S>),
    /// Optimal one-form `h` on the edges.
    OneForm(Cochain<S>),
    /// Optimal 2-cell weights, one per candidate cycle (zeros included).
    CycleWeights(Vec<(Cycle, S)>),
    /// Max-min optimum: the dual operator `J` together with the optimal
    /// cycle weights of the primal.
    DualOperator {
        j: Mat<S>,
        cycle_weights: Vec<(Cycle, S)>,
    },
    /// Optimal penalty transport plan.
    Transport(PenaltyTransportPlan<S>),
    /// Optimal Kantorovich transport plan.
    Kantorovich(KantorovichPlan<S>),
    /// No witness (infinite value).
    None,
}

/// A transport plan with penalty terms for the defect in its marginals.
/// Rows are indexed by `N(v,w) = S_1(v) ∖ {w}`, columns by `N(w,v)`; the
/// penalties `A_ρ(v′) = Q(v,v′) − Σ_{w′} ρ(v′,w′)` and
/// `B_ρ(w′) = Q(w,w′) − Σ_{v′} ρ(v′,w′)` measure how far ρ is from meeting
/// the exact marginals.
#[derive(Debug, Clone, PartialEq)]
pub struct PenaltyTransportPlan<S> {
    pub v: VertexId,
    pub w: VertexId,
    /// `N(v,w)`, ascending vertex ids.
    pub rows: Vec<VertexId>,
    /// `N(w,v)`, ascending vertex ids.
    pub cols: Vec<VertexId>,
    /// `ρ ≥ 0`, shape `rows.len() × cols.len()`.
    pub rho: Mat<S>,
}

impl<S: Scalar> PenaltyTransportPlan<S> {
    /// An all-zero plan for the edge `(v, w)` of `g`.
    pub fn zero(g: &WeightedGraph<S>, edge: usize) -> Self {
        let (vi, wi) = g.edge(edge);
        let rows = punctured_neighborhood(g, vi, wi);
        let cols = punctured_neighborhood(g, wi, vi);
        let rho = Mat::zeros(rows.len(), cols.len());
        PenaltyTransportPlan {
            v: g.vertex_id(vi),
            w: g.vertex_id(wi),
            rows: rows.iter().map(|&i| g.vertex_id(i)).collect(),
            cols: cols.iter().map(|&i| g.vertex_id(i)).collect(),
            rho,
        }
    }

    /// Marginal defects `A_ρ(v′) = Q(v,v′) − Σ_{w′} ρ(v′,w′)`, one per row.
    pub fn a_defects(&self, g: &WeightedGraph<S>) -> Result<Vec<S>, Error> {
        let vi = g.vertex_index(self.v)?;
        self.rows
            .iter()
            .enumerate()
            .map(|(ri, &r)| {
                let rii = g.vertex_index(r)?;
                let mut q = g.q(vi, rii);
                for ci in 0..self.cols.len() {
                    q = q - self.rho[(ri, ci)].clone();
                }
                Ok(q)
            })
            .collect()
    }

    /// Marginal defects `B_ρ(w′) = Q(w,w′) − Σ_{v′} ρ(v′,w′)`, one per column.
    pub fn b_defects(&self, g: &WeightedGraph<S>) -> Result<Vec<S>, Error> {
        let wi = g.vertex_index(self.w)?;
        self.cols
            .iter()
            .enumerate()
            .map(|(ci, &c)| {
                let cii = g.vertex_index(c)?;
                let mut q = g.q(wi, cii);
                for ri in 0..self.rows.len() {
                    q = q - self.rho[(ri, ci)].clone();
                }
                Ok(q)
            })
            .collect()
    }
}

/// The curvature value a penalty plan certifies:
/// `Q(v,w) + Q(w,v) + Σ ρ(v′,w′)(1 − d(v′,w′)) − Σ |A_ρ| − Σ |B_ρ|`.
/// Every supported pair lies among neighbors of the base edge, so the
/// distances are the exact combinatorial ones.
pub fn penalty_objective<S: Scalar>(
    g: &WeightedGraph<S>,
    plan: &PenaltyTransportPlan<S>,
) -> Result<S, Error> {
    let vi = g.vertex_index(plan.v)?;
    let wi = g.vertex_index(plan.w)?;
    let mut value = g.q(vi, wi) + g.q(wi, vi);
    for (ri, &r) in plan.rows.iter().enumerate() {
        let rii = g.vertex_index(r)?;
        for (ci, &c) in plan.cols.iter().enumerate() {
            let rho = plan.rho[(ri, ci)].clone();
            if rho.is_zero() {
                continue;
            }
            let cii = g.vertex_index(c)?;
            let d = two_ball_distance(g, rii, cii);
            value = value + rho * S::from_int(1 - d as i64);
        }
    }
    for a in plan.a_defects(g)? {
        value = value - a.abs();
    }
    for b in plan.b_defects(g)? {
        value = value - b.abs();
    }
    Ok(value)
}

/// A Kantorovich transport plan between the unit balls of the two endpoints
/// of an edge.  Rows are `S_1(v) ∪ {v}`, columns `S_1(w) ∪ {w}`; the
/// marginal equations hold for every row other than `v` and every column
/// other than `w`.
#[derive(Debug, Clone, PartialEq)]
pub struct KantorovichPlan<S> {
    pub v: VertexId,
    pub w: VertexId,
    pub rows: Vec<VertexId>,
    pub cols: Vec<VertexId>,
    /// `ξ ≥ 0`, shape `rows.len() × cols.len()`.
    pub xi: Mat<S>,
}

/// Exact distance between two vertices that both lie within distance 1 of a
/// common edge: 0, 1, 2, or 3 decided by equality, adjacency, and a common
/// neighbor.  (Such vertices are never farther apart than 3, so no search
/// beyond the 2-ball is needed.)
fn two_ball_distance<S: Scalar>(g: &WeightedGraph<S>, a: usize, b: usize) -> usize {
    if a == b {
        return 0;
    }
    if g.edge_between(a, b).is_some() {
        return 1;
    }
    if g.neighbors(a)
        .iter()
        .any(|&(u, _)| g.edge_between(u, b).is_some())
    {
        return 2;
    }
    3
}

/// `S_1(center) ∖ {excluded}` as sorted internal indices.
fn punctured_neighborhood<S: Scalar>(
    g: &WeightedGraph<S>,
    center: usize,
    excluded: usize,
) -> Vec<usize> {
    g.neighbors(center)
        .iter()
        .map(|&(u, _)| u)
        .filter(|&u| u != excluded)
        .collect()
}

fn omega_of<S: Scalar>(omega: Option<&[S]>, edge: usize) -> S {
    match omega {
        Some(o) => o[edge].clone(),
        None => S::one(),
    }
}

/// Check an optional ω for validity (length, positivity, non-degeneracy).
fn require_nondegenerate<S: Scalar>(
    g: &WeightedGraph<S>,
    omega: Option<&[S]>,
) -> Result<(), Error> {
    let Some(o) = omega else { return Ok(()) };
    if o.len() != g.n_edges() {
        return Err(Error::Parse(format!(
            "omega has {} entries for {} edges",
            o.len(),
            g.n_edges()
        )));
    }
    for (e, w) in o.iter().enumerate() {
        if !w.is_positive() {
            let (u, v) = g.edge_ids(e);
            return Err(Error::NonPositiveWeight(format!("omega({u},{v})")));
        }
    }
    if let Some(e) = crate::analysis::degenerate_edge(g, o) {
        let (u, v) = g.edge_ids(e);
        return Err(Error::DegenerateOmega(u, v));
    }
    Ok(())
}

/// Ollivier curvature of an edge via its defining program over vertex
/// potentials:
/// `ω(x)·κ_ω(x) = inf { δδ*δf(x) : δf(x) = ω(x), |δf| ≤ ω }`.
///
/// The program is restricted to the connected component of the edge, and the
/// potential at the tail vertex is pinned to zero (the objective is
/// translation invariant).  An empty constraint set yields
/// [`CurvatureValue::Infinite`].
pub fn ollivier_edge<S: Scalar>(
    c: &CellComplex<S>,
    edge: usize,
    omega: Option<&[S]>,
) -> Result<CurvatureCertificate<S>, Error> {
    let g = c.skeleton();
    require_nondegenerate(g, omega)?;
    let (tail, head) = g.edge(edge);
    let comp = g.component_of(tail);
    let h0 = c.hodge_matrix(0);

    let mut lp = LinearProgram::new(Sense::Min);
    let mut col: BTreeMap<usize, usize> = BTreeMap::new();
    for u in 0..g.n_vertices() {
        if comp[u] && u != tail {
            let cost = h0[(head, u)].clone() - h0[(tail, u)].clone();
            col.insert(u, lp.add_var(Bound::Free, cost));
        }
    }
    for e in 0..g.n_edges() {
        let (a, b) = g.edge(e);
        if !comp[a] {
            continue;
        }
        let w = omega_of(omega, e);
        let mut coeffs: Vec<(usize, S)> = Vec::with_capacity(2);
        if let Some(&cb) = col.get(&b) {
            coeffs.push((cb, S::one()));
        }
        if let Some(&ca) = col.get(&a) {
            coeffs.push((ca, -S::one()));
        }
        if e == edge {
            lp.add_constraint(&coeffs, Rel::Eq, w);
        } else {
            lp.add_constraint(&coeffs, Rel::Le, w.clone());
            lp.add_constraint(&coeffs, Rel::Ge, -w);
        }
    }

    let sol = lp.solve();
    let wx = omega_of(omega, edge);
    let (value, witness) = match sol.status {
        LpStatus::Optimal => {
            let mut f = vec![S::zero(); g.n_vertices()];
            for (&u, &cu) in &col {
                f[u] = sol.primal[cu].clone();
            }
            (
                CurvatureValue::Finite(sol.objective / wx),
                Witness::Potential(Cochain::new(0, f)),
            )
        }
        LpStatus::Infeasible => (CurvatureValue::Infinite, Witness::None),
        LpStatus::Unbounded => return Err(Error::UnexpectedLpStatus("unbounded")),
    };
    Ok(CurvatureCertificate {
        dim: 1,
        cell: Some(edge),
        target: c.cell_name(1, edge),
        value,
        witness,
    })
}

/// Ollivier curvature of a `k`-cell, `k ∈ {1, 2}`:
/// `κ(x) = inf { δδ*δf(x) : δf(x) = 1, |δf| ≤ 1, f ∈ C(X_{k−1}) }`.
/// For `k = 1` this is exactly [`ollivier_edge`] with unit ω.
pub fn ollivier_cell<S: Scalar>(
    c: &CellComplex<S>,
    k: usize,
    cell: usize,
) -> Result<CurvatureCertificate<S>, Error> {
    assert!(k == 1 || k == 2, "cells have dimension 1 or 2");
    if k == 1 {
        return ollivier_edge(c, cell, None);
    }
    // Objective: row of delta . adjoint . delta mapping C(X_1) -> C(X_2).
    let d1 = c.coboundary_matrix(1);
    let m = d1.mul(&c.adjoint_matrix(1)).mul(&d1);

    let mut lp = LinearProgram::new(Sense::Min);
    for y in 0..c.n_cells(1) {
        lp.add_var(Bound::Free, m[(cell, y)].clone());
    }
    for z in 0..c.n_cells(2) {
        let coeffs: Vec<(usize, S)> = c
            .boundary(2, z)
            .iter()
            .map(|&(y, s)| (y, S::from_int(s as i64)))
            .collect();
        if z == cell {
            lp.add_constraint(&coeffs, Rel::Eq, S::one());
        } else {
            lp.add_constraint(&coeffs, Rel::Le, S::one());
            lp.add_constraint(&coeffs, Rel::Ge, -S::one());
        }
    }

    let sol = lp.solve();
    let (value, witness) = match sol.status {
        LpStatus::Optimal => (
            CurvatureValue::Finite(sol.objective),
            Witness::Potential(Cochain::new(1, sol.primal.clone())),
        ),
        LpStatus::Infeasible => (CurvatureValue::Infinite, Witness::None),
        LpStatus::Unbounded => return Err(Error::UnexpectedLpStatus("unbounded")),
    };
    Ok(CurvatureCertificate {
        dim: k,
        cell: Some(cell),
        target: c.cell_name(k, cell),
        value,
        witness,
    })
}

/// Ollivier curvature of an edge via the one-form program:
/// `ω(x)·κ_ω(x) = min { δδ*h(x) : h(x) = ω(x), |h| ≤ ω, δx(z)·δh(z) ≤ 0 }`.
///
/// Valid when every shortcutting cycle through the edge is a 2-cell of the
/// complex; this hypothesis is checked and a missing cycle is reported.
pub fn ollivier_oneform<S: Scalar>(
    c: &CellComplex<S>,
    edge: usize,
    omega: Option<&[S]>,
) -> Result<CurvatureCertificate<S>, Error> {
    let g = c.skeleton();
    require_nondegenerate(g, omega)?;
    for cycle in g.enumerate_cycles(CycleCriterion::Shortcutting { edge, omega }) {
        if c.two_cell_index(&cycle).is_none() {
            let (u, v) = g.edge_ids(edge);
            return Err(Error::MissingShortcuttingCycle(cycle.to_string(), u, v));
        }
    }

    let down = c.down_laplacian(1);
    let mut lp = LinearProgram::new(Sense::Min);
    for y in 0..g.n_edges() {
        lp.add_var(Bound::Free, down[(edge, y)].clone());
    }
    for y in 0..g.n_edges() {
        let w = omega_of(omega, y);
        if y == edge {
            lp.add_constraint(&[(y, S::one())], Rel::Eq, w);
        } else {
            lp.add_constraint(&[(y, S::one())], Rel::Le, w.clone());
            lp.add_constraint(&[(y, S::one())], Rel::Ge, -w);
        }
    }
    for z in 0..c.n_cells(2) {
        let sign_x = c
            .boundary(2, z)
            .iter()
            .find(|&&(y, _)| y == edge)
            .map(|&(_, s)| s);
        let Some(sign_x) = sign_x else { continue };
        let coeffs: Vec<(usize, S)> = c
            .boundary(2, z)
            .iter()
            .map(|&(y, s)| (y, S::from_int((sign_x * s) as i64)))
            .collect();
        lp.add_constraint(&coeffs, Rel::Le, S::zero());
    }

    let sol = lp.solve();
    let wx = omega_of(omega, edge);
    let (value, witness) = match sol.status {
        LpStatus::Optimal => (
            CurvatureValue::Finite(sol.objective / wx),
            Witness::OneForm(Cochain::new(1, sol.primal.clone())),
        ),
        LpStatus::Infeasible => (CurvatureValue::Infinite, Witness::None),
        LpStatus::Unbounded => return Err(Error::UnexpectedLpStatus("unbounded")),
    };
    Ok(CurvatureCertificate {
        dim: 1,
        cell: Some(edge),
        target: c.cell_name(1, edge),
        value,
        witness,
    })
}

/// Signed incidence of each candidate cycle with the edges of `g`:
/// `δy(z) = ±1` for the edges on the cycle, oriented small id → large id.
fn cycle_edge_signs<S: Scalar>(
    g: &WeightedGraph<S>,
    cycle: &Cycle,
) -> Result<BTreeMap<usize, i8>, Error> {
    let mut signs = BTreeMap::new();
    for (a, b) in cycle.traversal() {
        let ai = g.vertex_index(a)?;
        let bi = g.vertex_index(b)?;
        let e = g
            .edge_between(ai, bi)
            .ok_or_else(|| Error::NotACycle(format!("vertices {a} and {b} are not adjacent")))?;
        signs.insert(e, if a < b { 1 } else { -1 });
    }
    Ok(signs)
}

/// `δδ*` on edges for the bare graph (no 2-cells).
fn graph_down_laplacian<S: Scalar>(g: &WeightedGraph<S>) -> Mat<S> {
    let mut down = Mat::zeros(g.n_edges(), g.n_edges());
    for x in 0..g.n_edges() {
        let (a, b) = g.edge(x);
        for (v, sx) in [(a, -1i64), (b, 1)] {
            for &(_, y) in g.neighbors(v) {
                let (c, d) = g.edge(y);
                let sy = if v == c { -1i64 } else { 1 };
                debug_assert!(v == c || v == d);
                let term = S::from_int(sx * sy) * g.edge_weights()[y].clone()
                    / g.vertex_weights()[v].clone();
                down[(x, y)] += term;
            }
        }
    }
    down
}

/// Maximize the (ω-)Forman curvature of one edge over all non-negative
/// weight assignments to the candidate 2-cells.  By linear-programming
/// duality the optimum equals the one-form program of
/// [`ollivier_oneform`]; when the candidates include every shortcutting
/// cycle through the edge it therefore equals the Ollivier curvature.
pub fn max_forman_edge<S: Scalar>(
    g: &WeightedGraph<S>,
    edge: usize,
    candidates: &[Cycle],
    omega: Option<&[S]>,
) -> Result<CurvatureCertificate<S>, Error> {
    require_nondegenerate(g, omega)?;
    let down = graph_down_laplacian(g);
    let m_x = g.edge_weights()[edge].clone();
    let wx = omega_of(omega, edge);

    // Candidates through the edge, with their signed boundaries.
    let mut through: Vec<(usize, BTreeMap<usize, i8>)> = Vec::new();
    for (ci, cycle) in candidates.iter().enumerate() {
        let signs = cycle_edge_signs(g, cycle)?;
        if signs.contains_key(&edge) {
            through.push((ci, signs));
        }
    }

    // Edges interacting with x: sharing a vertex, or lying on a candidate
    // cycle through x.  All other edges have H'y(x) = 0 identically.
    let mut interacting: BTreeSet<usize> = BTreeSet::new();
    for y in 0..g.n_edges() {
        if y != edge && !down[(edge, y)].is_zero() {
            interacting.insert(y);
        }
    }
    for (_, signs) in &through {
        for &y in signs.keys() {
            if y != edge {
                interacting.insert(y);
            }
        }
    }

    let mut lp = LinearProgram::new(Sense::Max);
    let n_var: Vec<usize> = through
        .iter()
        .map(|_| lp.add_var(Bound::NonNeg, wx.clone() / m_x.clone()))
        .collect();
    let g_var: BTreeMap<usize, usize> = interacting
        .iter()
        .map(|&y| (y, lp.add_var(Bound::Free, -omega_of(omega, y))))
        .collect();

    for (&y, &gy) in &g_var {
        // g(y) >= | down[x][y] + sum_z n(z) dx(z) dy(z) / m(x) |
        let mut plus: Vec<(usize, S)> = vec![(gy, S::one())];
        let mut minus: Vec<(usize, S)> = vec![(gy, S::one())];
        for ((_, signs), &nv) in through.iter().zip(&n_var) {
            if let Some(&sy) = signs.get(&y) {
                let sx = signs[&edge];
                let coeff = S::from_int((sx * sy) as i64) / m_x.clone();
                plus.push((nv, -coeff.clone()));
                minus.push((nv, coeff));
            }
        }
        lp.add_constraint(&plus, Rel::Ge, down[(edge, y)].clone());
        lp.add_constraint(&minus, Rel::Ge, -down[(edge, y)].clone());
    }

    let sol = lp.solve();
    if sol.status != LpStatus::Optimal {
        return Err(Error::UnexpectedLpStatus(match sol.status {
            LpStatus::Infeasible => "infeasible",
            _ => "unbounded",
        }));
    }
    let value = (wx.clone() * down[(edge, edge)].clone() + sol.objective) / wx;

    let mut weights: Vec<(Cycle, S)> = candidates
        .iter()
        .map(|cycle| (cycle.clone(), S::zero()))
        .collect();
    for ((ci, _), &nv) in through.iter().zip(&n_var) {
        weights[*ci].1 = sol.primal[nv].clone();
    }
    let (u, v) = g.edge_ids(edge);
    Ok(CurvatureCertificate {
        dim: 1,
        cell: Some(edge),
        target: format!("({u},{v})"),
        value: CurvatureValue::Finite(value),
        witness: Witness::CycleWeights(weights),
    })
}

/// Maximize the minimal (ω-)Forman curvature over all weight assignments to
/// the candidate 2-cells:
/// `R* = max_n min_x F′_ω(x)`.
///
/// Returns both the optimal cycle weights and the dual operator `J`
/// extracted from the same solve, which certifies optimality:
/// `J` satisfies conditions (a), (b), (c) and `Tr(δδ* J) = R*`.
pub fn maxmin_forman<S: Scalar>(
    g: &WeightedGraph<S>,
    candidates: &[Cycle],
    omega: Option<&[S]>,
) -> Result<CurvatureCertificate<S>, Error> {
    require_nondegenerate(g, omega)?;
    let down = graph_down_laplacian(g);
    let ne = g.n_edges();
    let signs: Vec<BTreeMap<usize, i8>> = candidates
        .iter()
        .map(|cycle| cycle_edge_signs(g, cycle))
        .collect::<Result<_, _>>()?;

    // Ordered pairs (x, y) that can carry a nonzero H'y(x): sharing a vertex
    // or a candidate cycle.
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for x in 0..ne {
        for y in 0..ne {
            if x != y && !down[(x, y)].is_zero() {
                pairs.insert((x, y));
            }
        }
    }
    for sg in &signs {
        for &x in sg.keys() {
            for &y in sg.keys() {
                if x != y {
                    pairs.insert((x, y));
                }
            }
        }
    }

    let mut lp = LinearProgram::new(Sense::Max);
    let r_var = lp.add_var(Bound::Free, S::one());
    let n_var: Vec<usize> = candidates
        .iter()
        .map(|_| lp.add_var(Bound::NonNeg, S::zero()))
        .collect();
    let g_var: BTreeMap<(usize, usize), usize> = pairs
        .iter()
        .map(|&p| (p, lp.add_var(Bound::Free, S::zero())))
        .collect();

    // One row per edge: the curvature bound F'(x) >= R, scaled by m(x)ω(x).
    let mut edge_row = vec![0usize; ne];
    let mut next_row = 0usize;
    for x in 0..ne {
        let wx = omega_of(omega, x);
        let mx = g.edge_weights()[x].clone();
        let mut coeffs: Vec<(usize, S)> = vec![(r_var, -(mx.clone() * wx.clone()))];
        for (sg, &nv) in signs.iter().zip(&n_var) {
            if sg.contains_key(&x) {
                coeffs.push((nv, wx.clone()));
            }
        }
        for (&(px, py), &gv) in &g_var {
            if px == x {
                coeffs.push((gv, -omega_of(omega, py)));
            }
        }
        lp.add_constraint(
            &coeffs,
            Rel::Ge,
            -(wx * mx * down[(x, x)].clone()),
        );
        edge_row[x] = next_row;
        next_row += 1;
    }

    // Two rows per ordered pair: g(x,y) >= | <n, δx δy> + m(x) down[x][y] |.
    let mut pair_rows: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    for (&(x, y), &gv) in &g_var {
        let mut minus: Vec<(usize, S)> = vec![(gv, S::one())];
        let mut plus: Vec<(usize, S)> = vec![(gv, S::one())];
        for (sg, &nv) in signs.iter().zip(&n_var) {
            if let (Some(&sx), Some(&sy)) = (sg.get(&x), sg.get(&y)) {
                let prod = S::from_int((sx * sy) as i64);
                minus.push((nv, -prod.clone()));
                plus.push((nv, prod));
            }
        }
        let rhs = g.edge_weights()[x].clone() * down[(x, y)].clone();
        lp.add_constraint(&minus, Rel::Ge, rhs.clone());
        lp.add_constraint(&plus, Rel::Ge, -rhs);
        pair_rows.insert((x, y), (next_row, next_row + 1));
        next_row += 2;
    }

    let sol = lp.solve();
    if sol.status != LpStatus::Optimal {
        return Err(Error::UnexpectedLpStatus(match sol.status {
            LpStatus::Infeasible => "infeasible",
            _ => "unbounded",
        }));
    }

    // Dual operator: J[x][x] = -m(x) ω(x) R(x) from the edge rows,
    // J[x][y] = m(y) (c_-(x,y) - c_+(x,y)) from the pair rows.
    let mut j = Mat::zeros(ne, ne);
    for x in 0..ne {
        let dual = sol.dual[edge_row[x]].clone();
        j[(x, x)] = -(g.edge_weights()[x].clone() * omega_of(omega, x) * dual);
    }
    for (&(x, y), &(row_minus, row_plus)) in &pair_rows {
        let c_minus = sol.dual[row_minus].clone();
        let c_plus = sol.dual[row_plus].clone();
        j[(x, y)] = g.edge_weights()[y].clone() * (c_minus - c_plus);
    }

    let weights: Vec<(Cycle, S)> = candidates
        .iter()
        .zip(&n_var)
        .map(|(cycle, &nv)| (cycle.clone(), sol.primal[nv].clone()))
        .collect();
    Ok(CurvatureCertificate {
        dim: 1,
        cell: None,
        target: "X_1".to_string(),
        value: CurvatureValue::Finite(sol.objective),
        witness: Witness::DualOperator {
            j,
            cycle_weights: weights,
        },
    })
}

/// Condition (a) on a dual operator, checked entrywise:
/// `Jx(x) / (m(x)ω(x)) ≥ |Jy(x)| / (m(y)ω(y))` for all `x, y`
/// (with ω ≡ 1 when absent).  `j[(x, y)]` holds `Jy(x)`.
pub fn check_condition_a<S: Scalar>(j: &Mat<S>, m: &[S], omega: Option<&[S]>) -> bool {
    let n = j.rows();
    let scale = |i: usize| match omega {
        Some(o) => m[i].clone() * o[i].clone(),
        None => m[i].clone(),
    };
    for x in 0..n {
        for y in 0..n {
            // Cross-multiplied to stay exact: Jx(x)·m(y)ω(y) ≥ |Jy(x)|·m(x)ω(x).
            let lhs = j[(x, x)].clone() * scale(y);
            let rhs = j[(x, y)].abs() * scale(x);
            if (lhs - rhs).is_negative() {
                return false;
            }
        }
    }
    true
}

/// Condition (a′) on a dual operator: `Jf(x) ≥ 0` whenever
/// `2⟨x, ωf⟩ ≥ ‖f‖_{ω,1}`, checked on the generating family
/// `f = 1_x/(m(x)ω(x)) ± 1_y/(m(y)ω(y))` (sufficient by convexity).
pub fn check_condition_a_prime<S: Scalar>(j: &Mat<S>, m: &[S], omega: Option<&[S]>) -> bool {
    let n = j.rows();
    let scale = |i: usize| match omega {
        Some(o) => m[i].clone() * o[i].clone(),
        None => m[i].clone(),
    };
    for x in 0..n {
        let diag = j[(x, x)].clone() / scale(x);
        if diag.is_negative() {
            return false;
        }
        for y in 0..n {
            if y == x {
                continue;
            }
            let off = j[(x, y)].clone() / scale(y);
            if (diag.clone() + off.clone()).is_negative()
                || (diag.clone() - off).is_negative()
            {
                return false;
            }
        }
    }
    true
}

/// Condition (b) on a dual operator: `δJδ*z(z) ≤ 0` for every candidate
/// cycle `z`.  The sign does not depend on the (arbitrary, positive) weight
/// of `z`, so candidates enter weightless.
pub fn check_condition_b<S: Scalar>(
    j: &Mat<S>,
    g: &WeightedGraph<S>,
    candidates: &[Cycle],
) -> Result<bool, Error> {
    for cycle in candidates {
        let signs = cycle_edge_signs(g, cycle)?;
        let mut total = S::zero();
        for (&x, &sx) in &signs {
            for (&y, &sy) in &signs {
                let term = S::from_int((sx * sy) as i64) * j[(x, y)].clone()
                    / g.edge_weights()[y].clone();
                total += term;
            }
        }
        if total.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Kantorovich formulation of the Ollivier curvature of an edge `(v, w)`:
/// `κ(x) = sup_ξ Σ ξ(v′,w′) (1 − d(v′,w′))` over plans between the unit
/// balls with the marginals of [`KantorovichPlan`].  Uses combinatorial
/// distance (unit ω).
pub fn kantorovich_curvature<S: Scalar>(
    g: &WeightedGraph<S>,
    edge: usize,
) -> Result<CurvatureCertificate<S>, Error> {
    require_connected(g)?;
    let (vi, wi) = g.edge(edge);
    let mut rows: Vec<usize> = g.neighbors(vi).iter().map(|&(u, _)| u).collect();
    rows.push(vi);
    rows.sort_unstable();
    let mut cols: Vec<usize> = g.neighbors(wi).iter().map(|&(u, _)| u).collect();
    cols.push(wi);
    cols.sort_unstable();

    let mut lp = LinearProgram::new(Sense::Max);
    let mut xi_var = vec![vec![0usize; cols.len()]; rows.len()];
    for (ri, &r) in rows.iter().enumerate() {
        for (ci, &c) in cols.iter().enumerate() {
            let d = two_ball_distance(g, r, c);
            xi_var[ri][ci] = lp.add_var(Bound::NonNeg, S::from_int(1 - d as i64));
        }
    }
    for (ri, &r) in rows.iter().enumerate() {
        if r == vi {
            continue;
        }
        let coeffs: Vec<(usize, S)> = (0..cols.len())
            .map(|ci| (xi_var[ri][ci], S::one()))
            .collect();
        lp.add_constraint(&coeffs, Rel::Eq, g.q(vi, r));
    }
    for (ci, &c) in cols.iter().enumerate() {
        if c == wi {
            continue;
        }
        let coeffs: Vec<(usize, S)> = (0..rows.len())
            .map(|ri| (xi_var[ri][ci], S::one()))
            .collect();
        lp.add_constraint(&coeffs, Rel::Eq, g.q(wi, c));
    }

    let sol = lp.solve();
    if sol.status != LpStatus::Optimal {
        return Err(Error::UnexpectedLpStatus(match sol.status {
            LpStatus::Infeasible => "infeasible",
            _ => "unbounded",
        }));
    }
    let mut xi = Mat::zeros(rows.len(), cols.len());
    for ri in 0..rows.len() {
        for ci in 0..cols.len() {
            xi[(ri, ci)] = sol.primal[xi_var[ri][ci]].clone();
        }
    }
    let (u, v) = g.edge_ids(edge);
    Ok(CurvatureCertificate {
        dim: 1,
        cell: Some(edge),
        target: format!("({u},{v})"),
        value: CurvatureValue::Finite(sol.objective),
        witness: Witness::Kantorovich(KantorovichPlan {
            v: u,
            w: v,
            rows: rows.iter().map(|&i| g.vertex_id(i)).collect(),
            cols: cols.iter().map(|&i| g.vertex_id(i)).collect(),
            xi,
        }),
    })
}

fn require_connected<S: Scalar>(g: &WeightedGraph<S>) -> Result<(), Error> {
    if g.n_vertices() == 0 || g.is_connected() {
        return Ok(());
    }
    let comp = g.component_of(0);
    let inside = g.vertex_id(0);
    let outside = (0..g.n_vertices())
        .find(|&u| !comp[u])
        .map(|u| g.vertex_id(u))
        .unwrap_or(inside);
    Err(Error::InfiniteDistance(inside, outside))
}

/// Is the pair `(r, c)` translatable into a 2-cell through the base edge —
/// a triangle (`r == c`), a 4-cycle (`r ~ c`), or a 5-cycle via a common
/// neighbor off the base edge?
fn translatable_pair<S: Scalar>(
    g: &WeightedGraph<S>,
    vi: usize,
    wi: usize,
    r: usize,
    c: usize,
) -> Option<usize> {
    if r == c {
        return Some(0);
    }
    if g.edge_between(r, c).is_some() {
        return Some(1);
    }
    let ok = g
        .neighbors(r)
        .iter()
        .any(|&(u, _)| u != vi && u != wi && u != c && g.edge_between(u, c).is_some());
    if ok {
        Some(2)
    } else {
        None
    }
}

/// Penalty-transport formulation of the Ollivier curvature of an edge
/// `x = (v, w)`:
/// `κ(x) = Q(v,w) + Q(w,v) + sup_{ρ≥0} ( Σ ρ(1−d) − Σ|A_ρ| − Σ|B_ρ| )`.
///
/// The supremum is restricted to pairs that a 2-cell through `x` can
/// realize (equal, adjacent, or joined by a common neighbor off the edge) —
/// mass anywhere else only lowers the objective or can be moved here
/// without changing it, and the restriction makes the witness directly
/// translatable by [`transport_to_cycle_weights`].
pub fn penalty_transport_curvature<S: Scalar>(
    g: &WeightedGraph<S>,
    edge: usize,
) -> Result<CurvatureCertificate<S>, Error> {
    require_connected(g)?;
    let (vi, wi) = g.edge(edge);
    let rows = punctured_neighborhood(g, vi, wi);
    let cols = punctured_neighborhood(g, wi, vi);

    let mut lp = LinearProgram::new(Sense::Max);
    let mut rho_var: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (ri, &r) in rows.iter().enumerate() {
        for (ci, &c) in cols.iter().enumerate() {
            if let Some(d) = translatable_pair(g, vi, wi, r, c) {
                let v = lp.add_var(Bound::NonNeg, S::from_int(1 - d as i64));
                rho_var.insert((ri, ci), v);
            }
        }
    }
    let a_var: Vec<usize> = rows
        .iter()
        .map(|_| lp.add_var(Bound::NonNeg, -S::one()))
        .collect();
    let b_var: Vec<usize> = cols
        .iter()
        .map(|_| lp.add_var(Bound::NonNeg, -S::one()))
        .collect();

    for (ri, &r) in rows.iter().enumerate() {
        let mut plus: Vec<(usize, S)> = vec![(a_var[ri], S::one())];
        let mut minus: Vec<(usize, S)> = vec![(a_var[ri], S::one())];
        for ci in 0..cols.len() {
            if let Some(&rv) = rho_var.get(&(ri, ci)) {
                plus.push((rv, S::one()));
                minus.push((rv, -S::one()));
            }
        }
        let q = g.q(vi, r);
        lp.add_constraint(&plus, Rel::Ge, q.clone());
        lp.add_constraint(&minus, Rel::Ge, -q);
    }
    for (ci, &c) in cols.iter().enumerate() {
        let mut plus: Vec<(usize, S)> = vec![(b_var[ci], S::one())];
        let mut minus: Vec<(usize, S)> = vec![(b_var[ci], S::one())];
        for ri in 0..rows.len() {
            if let Some(&rv) = rho_var.get(&(ri, ci)) {
                plus.push((rv, S::one()));
                minus.push((rv, -S::one()));
            }
        }
        let q = g.q(wi, c);
        lp.add_constraint(&plus, Rel::Ge, q.clone());
        lp.add_constraint(&minus, Rel::Ge, -q);
    }

    let sol = lp.solve();
    if sol.status != LpStatus::Optimal {
        return Err(Error::UnexpectedLpStatus(match sol.status {
            LpStatus::Infeasible => "infeasible",
            _ => "unbounded",
        }));
    }
    let mut rho = Mat::zeros(rows.len(), cols.len());
    for (&(ri, ci), &rv) in &rho_var {
        rho[(ri, ci)] = sol.primal[rv].clone();
    }
    let value = g.q(vi, wi) + g.q(wi, vi) + sol.objective;
    let (u, v) = g.edge_ids(edge);
    Ok(CurvatureCertificate {
        dim: 1,
        cell: Some(edge),
        target: format!("({u},{v})"),
        value: CurvatureValue::Finite(value),
        witness: Witness::Transport(PenaltyTransportPlan {
            v: u,
            w: v,
            rows: rows.iter().map(|&i| g.vertex_id(i)).collect(),
            cols: cols.iter().map(|&i| g.vertex_id(i)).collect(),
            rho,
        }),
    })
}

/// Translate a penalty transport plan into 2-cell weights on the complex:
/// each supported pair `(v′, w′)` puts `ρ(v′,w′)·m(x)` onto a shortest cycle
/// through `v′, v, w, w′` (a triangle, 4-cycle, or 5-cycle; ties broken by
/// the smallest fifth vertex).  Pairs at distance ≥ 3 admit no such cycle;
/// their mass is dropped and the pairs are returned for inspection.
///
/// Errors if a required cycle is not a 2-cell of the complex.
pub fn transport_to_cycle_weights<S: Scalar>(
    plan: &PenaltyTransportPlan<S>,
    c: &CellComplex<S>,
) -> Result<(Cochain<S>, Vec<(VertexId, VertexId)>), Error> {
    let g = c.skeleton();
    let vi = g.vertex_index(plan.v)?;
    let wi = g.vertex_index(plan.w)?;
    let edge = g
        .edge_between(vi, wi)
        .ok_or(Error::UnknownEdge(plan.v, plan.w))?;
    let m_x = g.edge_weights()[edge].clone();

    let mut weights = vec![S::zero(); c.n_cells(2)];
    let mut dropped = Vec::new();
    for (ri, &r) in plan.rows.iter().enumerate() {
        for (ci, &cc) in plan.cols.iter().enumerate() {
            let rho = plan.rho[(ri, ci)].clone();
            if rho.is_zero() {
                continue;
            }
            let rii = g.vertex_index(r)?;
            let cii = g.vertex_index(cc)?;
            let seq: Option<Vec<VertexId>> = if rii == cii {
                Some(vec![r, plan.v, plan.w])
            } else if g.edge_between(rii, cii).is_some() {
                Some(vec![r, plan.v, plan.w, cc])
            } else {
                g.neighbors(rii)
                    .iter()
                    .map(|&(u, _)| u)
                    .find(|&u| {
                        u != vi && u != wi && u != cii && g.edge_between(u, cii).is_some()
                    })
                    .map(|u| vec![r, plan.v, plan.w, cc, g.vertex_id(u)])
            };
            let Some(seq) = seq else {
                dropped.push((r, cc));
                continue;
            };
            let cycle = g.canonical_cycle(&seq)?;
            let zi = c.two_cell_index(&cycle).ok_or_else(|| {
                Error::InvalidComplex(format!(
                    "2-cell {cycle} required by the transport plan is missing"
                ))
            })?;
            weights[zi] = weights[zi].clone() + rho * m_x.clone();
        }
    }
    Ok((Cochain::new(2, weights), dropped))
}

/// Read a penalty transport plan off the 2-cells of a complex:
/// `ρ(v′,w′) = Σ m(z)/m(x)` over the 2-cells `z` through `x = (v, w)` whose
/// boundary continues with `(v,v′)` and `(w,w′)`.  The penalty objective of
/// the result is sandwiched between `F(x)` and `κ(x)`.
pub fn cycle_weights_to_transport<S: Scalar>(
    c: &CellComplex<S>,
    edge: usize,
) -> PenaltyTransportPlan<S> {
    let g = c.skeleton();
    let (vi, wi) = g.edge(edge);
    let mut plan = PenaltyTransportPlan::zero(g, edge);
    let m_x = g.edge_weights()[edge].clone();
    for (zi, cycle) in c.two_cells().iter().enumerate() {
        if !cycle.contains_edge(g.vertex_id(vi), g.vertex_id(wi)) {
            continue;
        }
        // The two cycle neighbors of v are w and v'; of w they are v and w'.
        let mut v_other = None;
        let mut w_other = None;
        for (a, b) in cycle.traversal() {
            for (p, q) in [(a, b), (b, a)] {
                if p == g.vertex_id(vi) && q != g.vertex_id(wi) {
                    v_other = Some(q);
                }
                if p == g.vertex_id(wi) && q != g.vertex_id(vi) {
                    w_other = Some(q);
                }
            }
        }
        let (Some(vp), Some(wp)) = (v_other, w_other) else {
            continue;
        };
        let ri = plan.rows.binary_search(&vp).expect("cycle neighbor of v");
        let ci = plan.cols.binary_search(&wp).expect("cycle neighbor of w");
        plan.rho[(ri, ci)] =
            plan.rho[(ri, ci)].clone() + c.weight(2, zi).clone() / m_x.clone();
    }
    plan
}

/// Re-verify a certificate against the complex it was computed from: the
/// witness must be feasible and reproduce the value (exactly in rational
/// mode, within tolerance for floats).  `omega` must match the original
/// call.  For [`Witness::CycleWeights`] and [`Witness::DualOperator`] the
/// candidate cycles are taken from the witness itself.
pub fn verify_certificate<S: Scalar>(
    cert: &CurvatureCertificate<S>,
    c: &CellComplex<S>,
    omega: Option<&[S]>,
) -> Result<(), String> {
    let fail = |msg: String| -> Result<(), String> { Err(msg) };
    match (&cert.witness, &cert.value) {
        (Witness::None, CurvatureValue::Infinite) => Ok(()),
        (Witness::None, _) => fail("finite value without witness".into()),
        (_, CurvatureValue::Infinite) => fail("witness attached to an infinite value".into()),
        (Witness::Potential(f), CurvatureValue::Finite(value)) => {
            let Some(cell) = cert.cell else {
                return fail("potential witness without a target cell".into());
            };
            if cert.dim == 1 {
                verify_potential(c, cell, omega, &f.values, value)
            } else {
                verify_cell_potential(c, cert.dim, cell, &f.values, value)
            }
        }
        (Witness::OneForm(h), CurvatureValue::Finite(value)) => {
            let Some(cell) = cert.cell else {
                return fail("one-form witness without a target cell".into());
            };
            verify_oneform(c, cell, omega, &h.values, value)
        }
        (Witness::CycleWeights(weights), CurvatureValue::Finite(value)) => {
            let Some(cell) = cert.cell else {
                return fail("cycle-weight witness without a target cell".into());
            };
            let complex = attach_two_cells(c.skeleton().clone(), weights)
                .map_err(|e| format!("witness weights do not attach: {e}"))?;
            let f = forman(&complex, 1, cell, omega);
            if f.approx_eq(value) {
                Ok(())
            } else {
                fail(format!("witness complex has F = {f}, certificate says {value}"))
            }
        }
        (Witness::DualOperator { j, cycle_weights }, CurvatureValue::Finite(value)) => {
            verify_dual_operator(c, omega, j, cycle_weights, value)
        }
        (Witness::Transport(plan), CurvatureValue::Finite(value)) => {
            let obj = penalty_objective(c.skeleton(), plan).map_err(|e| e.to_string())?;
            for x in 0..plan.rho.rows() {
                for y in 0..plan.rho.cols() {
                    if plan.rho[(x, y)].is_negative() {
                        return fail("negative transport mass".into());
                    }
                }
            }
            if obj.approx_eq(value) {
                Ok(())
            } else {
                fail(format!("plan objective {obj} != value {value}"))
            }
        }
        (Witness::Kantorovich(plan), CurvatureValue::Finite(value)) => {
            verify_kantorovich(c.skeleton(), plan, value)
        }
    }
}

fn verify_potential<S: Scalar>(
    c: &CellComplex<S>,
    edge: usize,
    omega: Option<&[S]>,
    f: &[S],
    value: &S,
) -> Result<(), String> {
    let g = c.skeleton();
    if f.len() != g.n_vertices() {
        return Err("potential has wrong length".into());
    }
    for e in 0..g.n_edges() {
        let (a, b) = g.edge(e);
        let df = f[b].clone() - f[a].clone();
        let w = omega_of(omega, e);
        if e == edge {
            if !df.approx_eq(&w) {
                return Err(format!("δf on the target edge is {df}, not ω = {w}"));
            }
        } else if (w - df.abs()).is_negative() {
            return Err(format!("|δf| exceeds ω on edge {}", c.cell_name(1, e)));
        }
    }
    let h0 = c.hodge_matrix(0);
    let hf = h0.mul_vec(f);
    let (tail, head) = g.edge(edge);
    let obj = (hf[head].clone() - hf[tail].clone()) / omega_of(omega, edge);
    if obj.approx_eq(value) {
        Ok(())
    } else {
        Err(format!("potential objective {obj} != value {value}"))
    }
}

fn verify_cell_potential<S: Scalar>(
    c: &CellComplex<S>,
    k: usize,
    cell: usize,
    f: &[S],
    value: &S,
) -> Result<(), String> {
    assert_eq!(k, 2);
    let d1 = c.coboundary_matrix(1);
    let df = d1.mul_vec(f);
    for (z, v) in df.iter().enumerate() {
        if z == cell {
            if !v.approx_eq(&S::one()) {
                return Err(format!("δf at the target cell is {v}, not 1"));
            }
        } else if (S::one() - v.abs()).is_negative() {
            return Err(format!("|δf| exceeds 1 at {}", c.cell_name(2, z)));
        }
    }
    let obj_row = d1.mul(&c.adjoint_matrix(1)).mul(&d1).mul_vec(f)[cell].clone();
    if obj_row.approx_eq(value) {
        Ok(())
    } else {
        Err(format!("objective {obj_row} != value {value}"))
    }
}

fn verify_oneform<S: Scalar>(
    c: &CellComplex<S>,
    edge: usize,
    omega: Option<&[S]>,
    h: &[S],
    value: &S,
) -> Result<(), String> {
    let g = c.skeleton();
    if h.len() != g.n_edges() {
        return Err("one-form has wrong length".into());
    }
    let wx = omega_of(omega, edge);
    if !h[edge].approx_eq(&wx) {
        return Err(format!("h(x) = {} but ω(x) = {wx}", h[edge]));
    }
    for y in 0..g.n_edges() {
        let w = omega_of(omega, y);
        if (w - h[y].abs()).is_negative() {
            return Err(format!("|h| exceeds ω on edge {}", c.cell_name(1, y)));
        }
    }
    for z in 0..c.n_cells(2) {
        let boundary = c.boundary(2, z);
        let Some(&(_, sx)) = boundary.iter().find(|&&(y, _)| y == edge) else {
            continue;
        };
        let mut dh = S::zero();
        for &(y, s) in boundary {
            dh += S::from_int(s as i64) * h[y].clone();
        }
        if (S::from_int(sx as i64) * dh).is_positive() {
            return Err(format!("δx·δh > 0 at 2-cell {}", c.cell_name(2, z)));
        }
    }
    let down = c.down_laplacian(1);
    let obj = down.mul_vec(h)[edge].clone() / wx;
    if obj.approx_eq(value) {
        Ok(())
    } else {
        Err(format!("one-form objective {obj} != value {value}"))
    }
}

fn verify_dual_operator<S: Scalar>(
    c: &CellComplex<S>,
    omega: Option<&[S]>,
    j: &Mat<S>,
    cycle_weights: &[(Cycle, S)],
    value: &S,
) -> Result<(), String> {
    let g = c.skeleton();
    let m = g.edge_weights();
    if !check_condition_a(j, m, omega) {
        return Err("dual operator violates condition (a)".into());
    }
    let candidates: Vec<Cycle> = cycle_weights.iter().map(|(cy, _)| cy.clone()).collect();
    if !check_condition_b(j, g, &candidates).map_err(|e| e.to_string())? {
        return Err("dual operator violates condition (b)".into());
    }
    let trace: S = (0..j.rows()).map(|x| j[(x, x)].clone()).sum();
    if !trace.approx_eq(&S::one()) {
        return Err(format!("Tr(J) = {trace}, not 1"));
    }
    let down = graph_down_laplacian(g);
    let dual_value = down.mul(j).trace();
    if !dual_value.approx_eq(value) {
        return Err(format!("Tr(δδ*J) = {dual_value} but R* = {value}"));
    }
    // Primal side: the witness weights must attain R* as the minimum Forman
    // curvature over the edges.
    let complex = attach_two_cells(g.clone(), cycle_weights)
        .map_err(|e| format!("witness weights do not attach: {e}"))?;
    let curvatures = forman_all(&complex, 1, omega);
    let min = curvatures
        .iter()
        .skip(1)
        .fold(curvatures[0].clone(), |acc, v| {
            if (v.clone() - acc.clone()).is_negative() {
                v.clone()
            } else {
                acc
            }
        });
    if min.approx_eq(value) {
        Ok(())
    } else {
        Err(format!("witness weights give min F = {min}, not {value}"))
    }
}

fn verify_kantorovich<S: Scalar>(
    g: &WeightedGraph<S>,
    plan: &KantorovichPlan<S>,
    value: &S,
) -> Result<(), String> {
    let vi = g.vertex_index(plan.v).map_err(|e| e.to_string())?;
    let wi = g.vertex_index(plan.w).map_err(|e| e.to_string())?;
    let mut objective = S::zero();
    for (ri, &r) in plan.rows.iter().enumerate() {
        let rii = g.vertex_index(r).map_err(|e| e.to_string())?;
        let mut row_sum = S::zero();
        for (ci, &cc) in plan.cols.iter().enumerate() {
            let cii = g.vertex_index(cc).map_err(|e| e.to_string())?;
            let xi = plan.xi[(ri, ci)].clone();
            if xi.is_negative() {
                return Err("negative transport mass".into());
            }
            let d = two_ball_distance(g, rii, cii);
            objective = objective + xi.clone() * S::from_int(1 - d as i64);
            row_sum += xi;
        }
        if rii != vi && !row_sum.approx_eq(&g.q(vi, rii)) {
            return Err(format!("row marginal at vertex {r} is {row_sum}"));
        }
    }
    for (ci, &cc) in plan.cols.iter().enumerate() {
        let cii = g.vertex_index(cc).map_err(|e| e.to_string())?;
        if cii == wi {
            continue;
        }
        let mut col_sum = S::zero();
        for ri in 0..plan.rows.len() {
            col_sum += plan.xi[(ri, ci)].clone();
        }
        if !col_sum.approx_eq(&g.q(wi, cii)) {
            return Err(format!("column marginal at vertex {cc} is {col_sum}"));
        }
    }
    if objective.approx_eq(value) {
        Ok(())
    } else {
        Err(format!("plan objective {objective} != value {value}"))
    }
}
