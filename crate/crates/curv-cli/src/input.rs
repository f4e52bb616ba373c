//! The JSON graph/complex file format:
//!
//! ```json
//! {
//!   "vertices": [{"id": 1, "m": 1}, {"id": 2, "m": "1/2"}],
//!   "edges": [{"u": 1, "v": 2, "m": "2/3", "omega": 1}],
//!   "two_cells": [{"cycle": [1, 2, 3], "m": "1/3"}]
//! }
//! ```
//!
//! Weights are numbers or `"p/q"` strings; strings keep exact-mode input
//! exact.  `omega` is optional per edge and defaults to 1; `two_cells` may be
//! omitted.

use serde::{Deserialize, Serialize};

use curv::cellcomplex::attach_two_cells;
use curv::{CellComplex, Cycle, Error, Scalar, WeightedGraph};

/// A weight as it appears in the file: a bare number or an exact `"p/q"`.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum Weight {
    Text(String),
    Number(f64),
}

impl Weight {
    pub fn to_scalar<S: Scalar>(&self) -> Result<S, Error> {
        match self {
            Weight::Text(t) => {
                S::parse(t).ok_or_else(|| Error::Parse(format!("unreadable weight {t:?}")))
            }
            Weight::Number(v) => {
                S::from_f64(*v).ok_or_else(|| Error::Parse(format!("unreadable weight {v}")))
            }
        }
    }

    fn from_scalar<S: Scalar>(s: &S) -> Weight {
        match s.to_json() {
            serde_json::Value::String(t) => Weight::Text(t),
            other => Weight::Number(other.as_f64().expect("scalar serializes to a number")),
        }
    }
}

#[derive(Debug, Deserialize, Serialize)]
pub struct VertexSpec {
    pub id: i64,
    pub m: Weight,
}

#[derive(Debug, Deserialize, Serialize)]
pub struct EdgeSpec {
    pub u: i64,
    pub v: i64,
    pub m: Weight,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Weight>,
}

#[derive(Debug, Deserialize, Serialize)]
pub struct CellSpec {
    pub cycle: Vec<i64>,
    pub m: Weight,
}

/// A parsed input file, still in file terms (ids and raw weights).
#[derive(Debug, Deserialize, Serialize)]
pub struct Input {
    pub vertices: Vec<VertexSpec>,
    pub edges: Vec<EdgeSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub two_cells: Vec<CellSpec>,
}

impl Input {
    pub fn parse(text: &str) -> Result<Input, Error> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("input serializes")
    }

    /// The 1-skeleton with scalar weights.
    pub fn graph<S: Scalar>(&self) -> Result<WeightedGraph<S>, Error> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| Ok((v.id, v.m.to_scalar()?)))
            .collect::<Result<Vec<_>, Error>>()?;
        let edges = self
            .edges
            .iter()
            .map(|e| Ok((e.u, e.v, e.m.to_scalar()?)))
            .collect::<Result<Vec<_>, Error>>()?;
        WeightedGraph::new(vertices, edges)
    }

    /// The full complex; validation failures are reported as
    /// [`Error::InvalidComplex`].
    pub fn complex<S: Scalar>(&self) -> Result<CellComplex<S>, Error> {
        let graph: WeightedGraph<S> = self.graph()?;
        let cells = self
            .two_cells
            .iter()
            .map(|c| Ok((graph.canonical_cycle(&c.cycle)?, c.m.to_scalar()?)))
            .collect::<Result<Vec<_>, Error>>()?;
        let complex = attach_two_cells(graph, &cells)?;
        let report = complex.validate();
        if !report.is_valid() {
            return Err(Error::InvalidComplex(report.to_string()));
        }
        Ok(complex)
    }

    /// Edge lengths ω in the graph's edge order: `None` when no edge carries
    /// one, otherwise every missing entry defaults to 1.  Requires the graph
    /// to resolve the file's edge order against the sorted order.
    pub fn omega<S: Scalar>(&self, graph: &WeightedGraph<S>) -> Result<Option<Vec<S>>, Error> {
        if self.edges.iter().all(|e| e.omega.is_none()) {
            return Ok(None);
        }
        let mut omega = vec![S::one(); graph.n_edges()];
        for e in &self.edges {
            if let Some(w) = &e.omega {
                let index = graph.edge_index_by_ids(e.u, e.v)?;
                omega[index] = w.to_scalar()?;
            }
        }
        Ok(Some(omega))
    }

    /// Rebuild an input description from a complex (used for round-trip
    /// checks and report plumbing): vertices and edges in sorted order,
    /// cycles in canonical order.
    pub fn from_complex<S: Scalar>(c: &CellComplex<S>, omega: Option<&[S]>) -> Input {
        let g = c.skeleton();
        let vertices = (0..g.n_vertices())
            .map(|i| VertexSpec {
                id: g.vertex_id(i),
                m: Weight::from_scalar(&g.vertex_weights()[i]),
            })
            .collect();
        let edges = (0..g.n_edges())
            .map(|e| {
                let (u, v) = g.edge_ids(e);
                EdgeSpec {
                    u,
                    v,
                    m: Weight::from_scalar(&g.edge_weights()[e]),
                    omega: omega.map(|o| Weight::from_scalar(&o[e])),
                }
            })
            .collect();
        let two_cells = c
            .two_cells()
            .iter()
            .enumerate()
            .map(|(z, cycle)| CellSpec {
                cycle: cycle.vertices().to_vec(),
                m: Weight::from_scalar(c.weight(2, z)),
            })
            .collect();
        Input {
            vertices,
            edges,
            two_cells,
        }
    }
}

/// The canonical JSON form of a cycle: its vertex list.
pub fn cycle_json(cycle: &Cycle) -> serde_json::Value {
    serde_json::Value::Array(
        cycle
            .vertices()
            .iter()
            .map(|&v| serde_json::Value::from(v))
            .collect(),
    )
}
