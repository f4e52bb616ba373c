use std::fmt;

use crate::error::Error;

/// External vertex identifier (as used in input files).
pub type VertexId = i64;

/// An injective closed walk, stored in canonical form: among all rotations
/// of both traversal directions, the lexicographically smallest vertex
/// sequence.  Canonical form starts at the smallest vertex of the cycle, so
/// equality of `Cycle` values is equality of unoriented cycles.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    vertices: Vec<VertexId>,
}

impl Cycle {
    /// Canonicalize a vertex sequence.  Fails on sequences shorter than 3 or
    /// with repeated vertices; adjacency is the graph's business (see
    /// [`crate::WeightedGraph::canonical_cycle`]).
    pub fn canonical(seq: &[VertexId]) -> Result<Cycle, Error> {
        if seq.len() < 3 {
            return Err(Error::NotACycle(format!(
                "{} vertices (need at least 3)",
                seq.len()
            )));
        }
        let mut sorted = seq.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotACycle(format!(
                "repeated vertex in {}",
                format_seq(seq)
            )));
        }
        let n = seq.len();
        let mut best: Option<Vec<VertexId>> = None;
        let reversed: Vec<VertexId> = seq.iter().rev().copied().collect();
        for s in [seq, reversed.as_slice()] {
            for r in 0..n {
                let cand: Vec<VertexId> = (0..n).map(|i| s[(r + i) % n]).collect();
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        Ok(Cycle {
            vertices: best.unwrap(),
        })
    }

    /// Number of vertices (equivalently, edges) of the cycle; at least 3.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// The directed traversal edges `(v_k, v_{k+1})`, wrapping around.
    pub fn traversal(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |k| (self.vertices[k], self.vertices[(k + 1) % n]))
    }

    /// True when the cycle visits both `u` and `v` consecutively (in either
    /// direction), i.e. contains the undirected edge.
    pub fn contains_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.traversal()
            .any(|(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }
}

pub(crate) fn format_seq(seq: &[VertexId]) -> String {
    let inner: Vec<String> = seq.iter().map(i64::to_string).collect();
    format!("({})", inner.join(","))
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_seq(&self.vertices))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(seq: &[i64]) -> Cycle {
        Cycle::canonical(seq).unwrap()
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(c(&[2, 3, 1]).vertices(), &[1, 2, 3]);
        assert_eq!(c(&[1, 3, 2]).vertices(), &[1, 2, 3]);
        assert_eq!(c(&[3, 5, 6, 4]).vertices(), &[3, 4, 6, 5]);
        assert_eq!(c(&[2, 3, 5, 4]).vertices(), &[2, 3, 5, 4]);
    }

    #[test]
    fn rejects_degenerate_sequences() {
        assert!(Cycle::canonical(&[1, 2]).is_err());
        assert!(Cycle::canonical(&[1, 2, 1]).is_err());
        assert!(Cycle::canonical(&[1, 2, 3, 2]).is_err());
    }

    #[test]
    fn rotation_and_reflection_invariance() {
        let base = [4i64, 7, 2, 9, 5];
        let canon = c(&base);
        for r in 0..base.len() {
            let rot: Vec<i64> = (0..base.len()).map(|i| base[(r + i) % base.len()]).collect();
            assert_eq!(c(&rot), canon);
            let refl: Vec<i64> = rot.iter().rev().copied().collect();
            assert_eq!(c(&refl), canon);
        }
        assert_eq!(canon.vertices()[0], 2);
    }

    #[test]
    fn display_and_edge_membership() {
        let z = c(&[1, 2, 3]);
        assert_eq!(z.to_string(), "(1,2,3)");
        assert!(z.contains_edge(3, 1));
        assert!(z.contains_edge(1, 2));
        assert!(!z.contains_edge(1, 4));
    }
}
