//! Weighted graphs, cycles, and weighted cell complexes of dimension at
//! most 2.
//!
//! A complex is a graded set of cells with signed incidence coefficients
//! `delta_x(z) in {-1, 0, +1}` and positive weights.  Edges are oriented
//! from their smaller vertex id to their larger one; 2-cells are cycles in
//! canonical form, traversed in canonical order.  [`CellComplex::validate`]
//! checks the axioms (endpoint structure, the diamond condition, boundary
//! connectivity, no duplicated facet sets) and reports every violation it
//! finds, so invalid complexes can be diagnosed rather than merely rejected.

mod cycle;

pub use cycle::{Cycle, VertexId};

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::numerics::{Mat, Scalar, WeightedSpace};

/// Values attached to all cells of one dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Cochain<S> {
    pub dim: usize,
    pub values: Vec<S>,
}

impl<S: Scalar> Cochain<S> {
    pub fn new(dim: usize, values: Vec<S>) -> Self {
        Cochain { dim, values }
    }

    pub fn zeros(dim: usize, n: usize) -> Self {
        Cochain {
            dim,
            values: vec![S::zero(); n],
        }
    }
}

/// A finite simple graph with positive vertex and edge weights.
///
/// Vertices are identified externally by integer ids and internally by their
/// rank in ascending id order; edges are stored oriented from smaller to
/// larger endpoint and sorted lexicographically, so all derived matrices
/// have a deterministic layout.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph<S> {
    vertex_ids: Vec<VertexId>,
    vertex_weights: Vec<S>,
    edges: Vec<(usize, usize)>,
    edge_weights: Vec<S>,
    adj: Vec<Vec<(usize, usize)>>,
    edge_lookup: BTreeMap<(usize, usize), usize>,
}

impl<S: Scalar> WeightedGraph<S> {
    pub fn new(
        vertices: Vec<(VertexId, S)>,
        edges: Vec<(VertexId, VertexId, S)>,
    ) -> Result<Self, Error> {
        let mut vertices = vertices;
        vertices.sort_by_key(|(id, _)| *id);
        for w in vertices.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::DuplicateVertex(w[0].0));
            }
        }
        let vertex_ids: Vec<VertexId> = vertices.iter().map(|(id, _)| *id).collect();
        let vertex_weights: Vec<S> = vertices.into_iter().map(|(_, m)| m).collect();
        for (i, m) in vertex_weights.iter().enumerate() {
            if !m.is_positive() {
                return Err(Error::NonPositiveWeight(format!(
                    "vertex {}",
                    vertex_ids[i]
                )));
            }
        }
        let index: BTreeMap<VertexId, usize> = vertex_ids
            .iter()
            .enumerate()
            .map(|(i, id)| (*id, i))
            .collect();

        let mut resolved: Vec<((usize, usize), S)> = Vec::with_capacity(edges.len());
        for (u, v, m) in edges {
            let ui = *index.get(&u).ok_or(Error::UnknownVertex(u))?;
            let vi = *index.get(&v).ok_or(Error::UnknownVertex(v))?;
            if ui == vi {
                return Err(Error::SelfLoop(u));
            }
            if !m.is_positive() {
                return Err(Error::NonPositiveWeight(format!("edge ({u},{v})")));
            }
            resolved.push(((ui.min(vi), ui.max(vi)), m));
        }
        resolved.sort_by_key(|(e, _)| *e);
        for w in resolved.windows(2) {
            if w[0].0 == w[1].0 {
                let (a, b) = w[0].0;
                return Err(Error::DuplicateEdge(vertex_ids[a], vertex_ids[b]));
            }
        }
        let edges: Vec<(usize, usize)> = resolved.iter().map(|(e, _)| *e).collect();
        let edge_weights: Vec<S> = resolved.into_iter().map(|(_, m)| m).collect();

        let mut adj = vec![Vec::new(); vertex_ids.len()];
        let mut edge_lookup = BTreeMap::new();
        for (e, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
            edge_lookup.insert((u, v), e);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }

        Ok(WeightedGraph {
            vertex_ids,
            vertex_weights,
            edges,
            edge_weights,
            adj,
            edge_lookup,
        })
    }

    /// Unit-weight graph from an edge list.
    pub fn unit(vertices: &[VertexId], edges: &[(VertexId, VertexId)]) -> Result<Self, Error> {
        WeightedGraph::new(
            vertices.iter().map(|&v| (v, S::one())).collect(),
            edges.iter().map(|&(u, v)| (u, v, S::one())).collect(),
        )
    }

    pub fn n_vertices(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> &[VertexId] {
        &self.vertex_ids
    }

    pub fn vertex_id(&self, i: usize) -> VertexId {
        self.vertex_ids[i]
    }

    pub fn vertex_index(&self, id: VertexId) -> Result<usize, Error> {
        self.vertex_ids
            .binary_search(&id)
            .map_err(|_| Error::UnknownVertex(id))
    }

    pub fn vertex_weights(&self) -> &[S] {
        &self.vertex_weights
    }

    /// Endpoints by internal index, tail < head.
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Endpoints by external id, tail < head.
    pub fn edge_ids(&self, e: usize) -> (VertexId, VertexId) {
        let (u, v) = self.edges[e];
        (self.vertex_ids[u], self.vertex_ids[v])
    }

    pub fn edge_weights(&self) -> &[S] {
        &self.edge_weights
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_lookup.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn edge_index_by_ids(&self, u: VertexId, v: VertexId) -> Result<usize, Error> {
        let ui = self.vertex_index(u)?;
        let vi = self.vertex_index(v)?;
        self.edge_between(ui, vi).ok_or(Error::UnknownEdge(u, v))
    }

    /// Neighbors of `v` as `(neighbor, edge)` pairs, sorted by neighbor.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// Transition weight `Q(v, w) = m(v, w) / m(v)` for adjacent vertices.
    pub fn q(&self, v: usize, w: usize) -> S {
        let e = self
            .edge_between(v, w)
            .expect("q requires adjacent vertices");
        self.edge_weights[e].clone() / self.vertex_weights[v].clone()
    }

    /// `true` when there is a single (possibly trivial) component.
    pub fn is_connected(&self) -> bool {
        if self.n_vertices() == 0 {
            return true;
        }
        self.component_of(0).iter().filter(|&&b| b).count() == self.n_vertices()
    }

    /// Characteristic vector of the connected component containing `start`.
    pub fn component_of(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n_vertices()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for &(w, _) in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Canonicalize `seq` and check that it is a cycle of this graph.
    pub fn canonical_cycle(&self, seq: &[VertexId]) -> Result<Cycle, Error> {
        let cycle = Cycle::canonical(seq)?;
        for (a, b) in cycle.traversal() {
            let ai = self.vertex_index(a)?;
            let bi = self.vertex_index(b)?;
            if self.edge_between(ai, bi).is_none() {
                return Err(Error::NotACycle(format!(
                    "vertices {a} and {b} are not adjacent"
                )));
            }
        }
        Ok(cycle)
    }

    /// All cycles selected by `criterion`, in canonical form, sorted.
    pub fn enumerate_cycles(&self, criterion: CycleCriterion<'_, S>) -> Vec<Cycle> {
        match criterion {
            CycleCriterion::MaxLength(l) => self.cycles_up_to(l),
            CycleCriterion::Shortcutting { edge, omega } => {
                self.shortcutting_cycles(edge, omega)
            }
        }
    }

    fn cycles_up_to(&self, max_len: usize) -> Vec<Cycle> {
        let mut found = std::collections::BTreeSet::new();
        if max_len < 3 {
            return Vec::new();
        }
        let n = self.n_vertices();
        let mut path: Vec<usize> = Vec::new();
        let mut on_path = vec![false; n];
        for anchor in 0..n {
            path.push(anchor);
            on_path[anchor] = true;
            self.dfs_cycles(anchor, anchor, max_len, &mut path, &mut on_path, &mut found);
            on_path[anchor] = false;
            path.pop();
        }
        found.into_iter().collect()
    }

    fn dfs_cycles(
        &self,
        anchor: usize,
        u: usize,
        max_len: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        found: &mut std::collections::BTreeSet<Cycle>,
    ) {
        for &(w, _) in &self.adj[u] {
            if w == anchor && path.len() >= 3 {
                let ids: Vec<VertexId> = path.iter().map(|&i| self.vertex_ids[i]).collect();
                found.insert(Cycle::canonical(&ids).expect("path is a simple cycle"));
            } else if w > anchor && !on_path[w] && path.len() < max_len {
                path.push(w);
                on_path[w] = true;
                self.dfs_cycles(anchor, w, max_len, path, on_path, found);
                on_path[w] = false;
                path.pop();
            }
        }
    }

    /// Is `cycle` (which must contain `edge`) shortcutting for `edge`?  With
    /// `L(z)` the omega-length of the cycle and `T(z)` the omega-length of
    /// its edges meeting `edge` (including `edge` itself), the condition is
    /// `L(z) < 2 T(z)`.  For unit omega this says the cycle has at most five
    /// edges.
    pub fn is_shortcutting(&self, cycle: &Cycle, edge: usize, omega: Option<&[S]>) -> bool {
        let (xu, xv) = self.edges[edge];
        let w_of = |e: usize| -> S {
            match omega {
                Some(o) => o[e].clone(),
                None => S::one(),
            }
        };
        let mut total = S::zero();
        let mut touching = S::zero();
        let mut contains = false;
        for (a, b) in cycle.traversal() {
            let ai = self.vertex_index(a).expect("cycle vertex in graph");
            let bi = self.vertex_index(b).expect("cycle vertex in graph");
            let e = self.edge_between(ai, bi).expect("cycle edge in graph");
            if e == edge {
                contains = true;
            }
            let w = w_of(e);
            total += w.clone();
            if ai == xu || ai == xv || bi == xu || bi == xv {
                touching += w;
            }
        }
        assert!(contains, "is_shortcutting requires a cycle through the edge");
        total < S::from_int(2) * touching
    }

    fn shortcutting_cycles(&self, edge: usize, omega: Option<&[S]>) -> Vec<Cycle> {
        let (v, w) = self.edges[edge];
        // Cycles through the edge: simple paths w -> v avoiding the edge
        // itself.  Each cycle arises from exactly one such path.
        let n = self.n_vertices();
        let mut found = std::collections::BTreeSet::new();
        let mut path = vec![v, w];
        let mut on_path = vec![false; n];
        on_path[v] = true;
        on_path[w] = true;
        self.dfs_shortcut(edge, v, w, &mut path, &mut on_path, omega, &mut found);
        found.into_iter().collect()
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs_shortcut(
        &self,
        edge: usize,
        target: usize,
        u: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        omega: Option<&[S]>,
        found: &mut std::collections::BTreeSet<Cycle>,
    ) {
        for &(nb, e) in &self.adj[u] {
            if e == edge {
                continue;
            }
            if nb == target {
                if path.len() >= 3 {
                    let ids: Vec<VertexId> = path.iter().map(|&i| self.vertex_ids[i]).collect();
                    let cycle = Cycle::canonical(&ids).expect("path is a simple cycle");
                    if self.is_shortcutting(&cycle, edge, omega) {
                        found.insert(cycle);
                    }
                }
            } else if !on_path[nb] {
                path.push(nb);
                on_path[nb] = true;
                self.dfs_shortcut(edge, target, nb, path, on_path, omega, found);
                on_path[nb] = false;
                path.pop();
            }
        }
    }
}

/// Which cycles [`WeightedGraph::enumerate_cycles`] returns.
pub enum CycleCriterion<'a, S> {
    /// All cycles with at most this many edges.
    MaxLength(usize),
    /// All cycles through the given edge that are shortcutting for it.
    Shortcutting {
        edge: usize,
        omega: Option<&'a [S]>,
    },
}

/// A weighted cell complex of dimension at most 2.
///
/// Constructed either from a graph (optionally with 2-cells via
/// [`attach_two_cells`]) or from raw incidence data via
/// [`CellComplex::from_parts`] — the latter can represent invalid complexes
/// and exists so that [`CellComplex::validate`] has something to diagnose.
#[derive(Debug, Clone)]
pub struct CellComplex<S> {
    vertex_ids: Vec<VertexId>,
    weights: [Vec<S>; 3],
    /// `incidence[0][edge] = [(vertex, sign), ...]`,
    /// `incidence[1][two_cell] = [(edge, sign), ...]`; entries sorted by cell.
    incidence: [Vec<Vec<(usize, i8)>>; 2],
    graph: Option<WeightedGraph<S>>,
    cycles: Option<Vec<Cycle>>,
}

/// Attach 2-cells to a graph.  `cells` maps cycles of the graph to
/// nonnegative weights; cycles of weight zero are dropped (the resulting
/// complex contains exactly the cycles of positive weight), repeated cycles
/// and negative weights are errors.
pub fn attach_two_cells<S: Scalar>(
    graph: WeightedGraph<S>,
    cells: &[(Cycle, S)],
) -> Result<CellComplex<S>, Error> {
    let mut sorted: Vec<(Cycle, S)> = Vec::with_capacity(cells.len());
    for (cycle, weight) in cells {
        // Re-validate against this graph; `Cycle` guarantees only canonical
        // form, not membership.
        graph.canonical_cycle(cycle.vertices())?;
        if weight.is_negative() {
            return Err(Error::NegativeWeight(cycle.to_string()));
        }
        sorted.push((cycle.clone(), weight.clone()));
    }
    sorted.sort_by(|a, b| a.0.cmp(&b.0));
    for pair in sorted.windows(2) {
        if pair[0].0 == pair[1].0 {
            return Err(Error::DuplicateCycle(pair[0].0.to_string()));
        }
    }
    sorted.retain(|(_, w)| w.is_positive());

    let edge_incidence: Vec<Vec<(usize, i8)>> = (0..graph.n_edges())
        .map(|e| {
            let (u, v) = graph.edge(e);
            vec![(u, -1), (v, 1)]
        })
        .collect();
    let mut cell_incidence = Vec::with_capacity(sorted.len());
    for (cycle, _) in &sorted {
        let mut boundary = Vec::with_capacity(cycle.len());
        for (a, b) in cycle.traversal() {
            let ai = graph.vertex_index(a)?;
            let bi = graph.vertex_index(b)?;
            let e = graph
                .edge_between(ai, bi)
                .expect("cycle validated against graph");
            // Edges are oriented small id -> large id; the coefficient is +1
            // when the traversal agrees with that orientation.
            boundary.push((e, if a < b { 1i8 } else { -1 }));
        }
        boundary.sort_unstable_by_key(|&(e, _)| e);
        cell_incidence.push(boundary);
    }

    let weights = [
        graph.vertex_weights().to_vec(),
        graph.edge_weights().to_vec(),
        sorted.iter().map(|(_, w)| w.clone()).collect(),
    ];
    Ok(CellComplex {
        vertex_ids: graph.vertex_ids().to_vec(),
        weights,
        incidence: [edge_incidence, cell_incidence],
        cycles: Some(sorted.into_iter().map(|(c, _)| c).collect()),
        graph: Some(graph),
    })
}

impl<S: Scalar> CellComplex<S> {
    /// The complex with no 2-cells.
    pub fn from_graph(graph: WeightedGraph<S>) -> Self {
        attach_two_cells(graph, &[]).expect("a bare graph is always a valid complex")
    }

    /// Raw constructor from graded weights and signed incidence lists; no
    /// structure is assumed, so the result may be invalid — run
    /// [`CellComplex::validate`].  Lower-cell indices must be in range.
    pub fn from_parts(
        vertex_ids: Vec<VertexId>,
        weights: [Vec<S>; 3],
        incidence: [Vec<Vec<(usize, i8)>>; 2],
    ) -> Self {
        assert_eq!(weights[0].len(), vertex_ids.len());
        assert_eq!(incidence[0].len(), weights[1].len());
        assert_eq!(incidence[1].len(), weights[2].len());
        for (k, inc) in incidence.iter().enumerate() {
            for cell in inc {
                for &(lower, _) in cell {
                    assert!(lower < weights[k].len(), "incidence index out of range");
                }
            }
        }
        CellComplex {
            vertex_ids,
            weights,
            incidence,
            graph: None,
            cycles: None,
        }
    }

    pub fn n_cells(&self, dim: usize) -> usize {
        self.weights[dim].len()
    }

    pub fn weights(&self, dim: usize) -> &[S] {
        &self.weights[dim]
    }

    pub fn weight(&self, dim: usize, cell: usize) -> &S {
        &self.weights[dim][cell]
    }

    pub fn space(&self, dim: usize) -> WeightedSpace<S> {
        WeightedSpace::new(self.weights[dim].clone())
    }

    pub fn vertex_ids(&self) -> &[VertexId] {
        &self.vertex_ids
    }

    /// The 1-skeleton.  Panics on complexes assembled with `from_parts`;
    /// those exist only to be validated.
    pub fn skeleton(&self) -> &WeightedGraph<S> {
        self.graph
            .as_ref()
            .expect("complex was built from raw parts; rebuild it via attach_two_cells")
    }

    /// The 2-cells as cycles (same order as their weights).  Panics on raw
    /// complexes, like [`CellComplex::skeleton`].
    pub fn two_cells(&self) -> &[Cycle] {
        self.cycles
            .as_ref()
            .expect("complex was built from raw parts; rebuild it via attach_two_cells")
    }

    pub fn two_cell_index(&self, cycle: &Cycle) -> Option<usize> {
        self.two_cells().binary_search(cycle).ok()
    }

    /// The signed boundary list of a cell of dimension `dim >= 1`.
    pub fn boundary(&self, dim: usize, cell: usize) -> &[(usize, i8)] {
        &self.incidence[dim - 1][cell]
    }

    /// Human-readable cell name for reports.
    pub fn cell_name(&self, dim: usize, cell: usize) -> String {
        match dim {
            0 => self.vertex_ids[cell].to_string(),
            1 => {
                if let Some((u, v)) = self.edge_endpoints(cell) {
                    format!("({},{})", self.vertex_ids[u], self.vertex_ids[v])
                } else {
                    format!("edge#{cell}")
                }
            }
            _ => match &self.cycles {
                Some(cycles) => cycles[cell].to_string(),
                None => format!("cell#{cell}"),
            },
        }
    }

    /// Tail and head of an edge (`delta = -1` resp. `+1`), when the edge is
    /// well-formed.
    pub fn edge_endpoints(&self, edge: usize) -> Option<(usize, usize)> {
        let inc = &self.incidence[0][edge];
        if inc.len() != 2 {
            return None;
        }
        match (inc[0], inc[1]) {
            ((u, -1), (v, 1)) | ((v, 1), (u, -1)) if u != v => Some((u, v)),
            _ => None,
        }
    }

    /// Coboundary `delta: C(X_k) -> C(X_{k+1})` as a matrix; entry `(z, x)`
    /// is `delta_x(z)`.  For `k = 2` this has zero rows.
    pub fn coboundary_matrix(&self, k: usize) -> Mat<S> {
        assert!(k <= 2);
        if k == 2 {
            return Mat::zeros(0, self.n_cells(2));
        }
        let mut m = Mat::zeros(self.n_cells(k + 1), self.n_cells(k));
        for (hi, cell) in self.incidence[k].iter().enumerate() {
            for &(lo, coeff) in cell {
                m[(hi, lo)] += S::from_int(coeff as i64);
            }
        }
        m
    }

    /// Adjoint `delta*: C(X_{k+1}) -> C(X_k)` with respect to the weighted
    /// inner products; entry `(x, z)` is `m(z)/m(x) * delta_x(z)`.
    pub fn adjoint_matrix(&self, k: usize) -> Mat<S> {
        assert!(k <= 2);
        if k == 2 {
            return Mat::zeros(self.n_cells(2), 0);
        }
        let mut m = Mat::zeros(self.n_cells(k), self.n_cells(k + 1));
        for (hi, cell) in self.incidence[k].iter().enumerate() {
            for &(lo, coeff) in cell {
                m[(lo, hi)] += S::from_int(coeff as i64) * self.weights[k + 1][hi].clone()
                    / self.weights[k][lo].clone();
            }
        }
        m
    }

    /// `delta* delta` on `C(X_k)`.
    pub fn up_laplacian(&self, k: usize) -> Mat<S> {
        self.adjoint_matrix(k).mul(&self.coboundary_matrix(k))
    }

    /// `delta delta*` on `C(X_k)`; zero for `k = 0`.
    pub fn down_laplacian(&self, k: usize) -> Mat<S> {
        if k == 0 {
            return Mat::zeros(self.n_cells(0), self.n_cells(0));
        }
        self.coboundary_matrix(k - 1).mul(&self.adjoint_matrix(k - 1))
    }

    /// Hodge Laplacian `H_k = delta delta* + delta* delta` on `C(X_k)`.
    pub fn hodge_matrix(&self, k: usize) -> Mat<S> {
        self.up_laplacian(k).add(&self.down_laplacian(k))
    }

    /// Check the cell complex axioms and report every violation found.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();

        for dim in 0..3 {
            for (i, w) in self.weights[dim].iter().enumerate() {
                if !w.is_positive() {
                    violations.push(Violation::NonPositiveWeight {
                        dim,
                        cell: self.cell_name(dim, i),
                    });
                }
            }
        }

        // Coefficients are signs and each facet appears once.
        for k in 0..2 {
            for (hi, cell) in self.incidence[k].iter().enumerate() {
                for &(lo, coeff) in cell {
                    if coeff != 1 && coeff != -1 {
                        violations.push(Violation::BadCoefficient {
                            lower: self.cell_name(k, lo),
                            higher: self.cell_name(k + 1, hi),
                            coeff,
                        });
                    }
                }
                let mut lowers: Vec<usize> = cell.iter().map(|&(lo, _)| lo).collect();
                lowers.sort_unstable();
                if lowers.windows(2).any(|w| w[0] == w[1]) {
                    violations.push(Violation::DuplicateIncidence {
                        higher: self.cell_name(k + 1, hi),
                    });
                }
            }
        }

        // (i) each edge has exactly one -1 vertex and one +1 vertex.
        for edge in 0..self.n_cells(1) {
            let inc = &self.incidence[0][edge];
            let plus = inc.iter().filter(|&&(_, c)| c == 1).count();
            let minus = inc.iter().filter(|&&(_, c)| c == -1).count();
            if !(inc.len() == 2 && plus == 1 && minus == 1) {
                violations.push(Violation::EdgeEndpoints {
                    edge: self.cell_name(1, edge),
                    incident: inc.len(),
                    plus,
                    minus,
                });
            }
        }

        // (ii) diamond condition: for every vertex below a 2-cell there are
        // exactly two intermediate edges, with opposite sign products.
        for z in 0..self.n_cells(2) {
            let mut per_vertex: BTreeMap<usize, Vec<i8>> = BTreeMap::new();
            for &(edge, s1) in &self.incidence[1][z] {
                for &(v, s0) in &self.incidence[0][edge] {
                    per_vertex.entry(v).or_default().push(s0 * s1);
                }
            }
            for (v, products) in per_vertex {
                if products.len() != 2 {
                    violations.push(Violation::Diamond {
                        vertex: self.cell_name(0, v),
                        cell: self.cell_name(2, z),
                        count: products.len(),
                    });
                } else if products[0] + products[1] != 0 {
                    violations.push(Violation::DiamondSigns {
                        vertex: self.cell_name(0, v),
                        cell: self.cell_name(2, z),
                    });
                }
            }
        }

        // (iii) the boundary edges of each 2-cell form one connected cycle.
        for z in 0..self.n_cells(2) {
            let boundary: Vec<usize> = self.incidence[1][z].iter().map(|&(e, _)| e).collect();
            if let Some(detail) = self.boundary_cycle_defect(&boundary) {
                violations.push(Violation::BoundaryNotCycle {
                    cell: self.cell_name(2, z),
                    detail,
                });
            }
        }

        // (iv) no two cells of dimension >= 1 share their facet set.
        for k in 0..2 {
            let mut seen: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
            for (hi, cell) in self.incidence[k].iter().enumerate() {
                let mut key: Vec<usize> = cell.iter().map(|&(lo, _)| lo).collect();
                key.sort_unstable();
                key.dedup();
                if let Some(&other) = seen.get(&key) {
                    violations.push(Violation::DuplicateFacets {
                        dim: k + 1,
                        a: self.cell_name(k + 1, other),
                        b: self.cell_name(k + 1, hi),
                    });
                } else {
                    seen.insert(key, hi);
                }
            }
        }

        ValidationReport { violations }
    }

    /// `None` when the edges form a single connected cycle covering every
    /// touched vertex twice; otherwise a description of the defect.
    fn boundary_cycle_defect(&self, boundary: &[usize]) -> Option<String> {
        if boundary.len() < 3 {
            return Some(format!("only {} boundary edges", boundary.len()));
        }
        let mut endpoints = Vec::with_capacity(boundary.len());
        for &e in boundary {
            match self.edge_endpoints(e) {
                Some(pair) => endpoints.push(pair),
                // Reported separately by the endpoint check.
                None => return Some(format!("boundary edge {} is malformed", self.cell_name(1, e))),
            }
        }
        let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
        for &(u, v) in &endpoints {
            *degree.entry(u).or_insert(0) += 1;
            *degree.entry(v).or_insert(0) += 1;
        }
        for (&v, &d) in &degree {
            if d != 2 {
                return Some(format!(
                    "vertex {} meets {} boundary edges (expected 2)",
                    self.cell_name(0, v),
                    d
                ));
            }
        }
        // Degrees are all 2; connectivity of the edge set decides.
        let mut reached: BTreeMap<usize, bool> =
            degree.keys().map(|&v| (v, false)).collect();
        let start = endpoints[0].0;
        let mut stack = vec![start];
        reached.insert(start, true);
        while let Some(u) = stack.pop() {
            for &(a, b) in &endpoints {
                let other = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                if !reached[&other] {
                    reached.insert(other, true);
                    stack.push(other);
                }
            }
        }
        if reached.values().any(|&r| !r) {
            return Some("boundary edges split into several cycles".to_string());
        }
        None
    }
}

/// Outcome of [`CellComplex::validate`]: empty means the complex satisfies
/// all axioms.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    NonPositiveWeight { dim: usize, cell: String },
    BadCoefficient { lower: String, higher: String, coeff: i8 },
    DuplicateIncidence { higher: String },
    EdgeEndpoints { edge: String, incident: usize, plus: usize, minus: usize },
    Diamond { vertex: String, cell: String, count: usize },
    DiamondSigns { vertex: String, cell: String },
    BoundaryNotCycle { cell: String, detail: String },
    DuplicateFacets { dim: usize, a: String, b: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonPositiveWeight { dim, cell } => {
                write!(f, "non-positive weight on {dim}-cell {cell}")
            }
            Violation::BadCoefficient { lower, higher, coeff } => write!(
                f,
                "incidence coefficient {coeff} between {lower} and {higher} is not a sign"
            ),
            Violation::DuplicateIncidence { higher } => {
                write!(f, "cell {higher} lists a facet more than once")
            }
            Violation::EdgeEndpoints { edge, incident, plus, minus } => write!(
                f,
                "edge {edge} must have exactly one head and one tail; found {incident} incident vertices ({plus} heads, {minus} tails)"
            ),
            Violation::Diamond { vertex, cell, count } => write!(
                f,
                "vertex {vertex} lies under 2-cell {cell} via {count} edges (expected exactly 2)"
            ),
            Violation::DiamondSigns { vertex, cell } => write!(
                f,
                "the two paths from vertex {vertex} into 2-cell {cell} have equal sign products (delta delta != 0)"
            ),
            Violation::BoundaryNotCycle { cell, detail } => {
                write!(f, "boundary of 2-cell {cell} is not a single cycle: {detail}")
            }
            Violation::DuplicateFacets { dim, a, b } => {
                write!(f, "{dim}-cells {a} and {b} have identical facet sets")
            }
        }
    }
}
