//! Simple undirected graphs stored as adjacency bit rows.
//!
//! Vertices are 0-indexed. The edge-list text format is 1-indexed and is
//! converted at the parsing boundary.

mod edge_list;
mod generate;
mod graph6;

pub use generate::{generate, Family};

use crate::bits::BitRow;
use crate::error::{Error, Result};

/// An undirected simple graph on `n >= 1` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BitRow>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooSmall { n, min: 1 });
        }
        Ok(Graph { adj: vec![BitRow::zeros(n); n] })
    }

    /// Builds a graph from 0-indexed edges. Self-loops, duplicates and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
        }
        if self.adj[u].get(v) {
            return Err(Error::InvalidParameter(format!("duplicate edge ({u}, {v})")));
        }
        self.adj[u].set(v);
        self.adj[v].set(u);
        Ok(())
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitRow::count_ones).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].get(v)
    }

    /// The open neighbourhood of `v` as a bit row.
    pub fn neighborhood(&self, v: usize) -> Result<&BitRow> {
        self.adj.get(v).ok_or(Error::VertexOutOfRange { vertex: v, n: self.order() })
    }

    /// Like [`Graph::neighborhood`] but panics on a bad index.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitRow {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter_ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0).count_ones() == self.order()
    }

    fn component_of(&self, start: usize) -> BitRow {
        let mut seen = BitRow::zeros(self.order());
        seen.set(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in self.adj[u].iter_ones() {
                if !seen.get(v) {
                    seen.set(v);
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut assigned = BitRow::zeros(n);
        let mut out = Vec::new();
        for v in 0..n {
            if assigned.get(v) {
                continue;
            }
            let comp = self.component_of(v);
            assigned.or_assign(&comp);
            out.push(comp.iter_ones().collect());
        }
        out
    }

    /// The subgraph induced on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut g = Graph::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen = BitRow::zeros(n);
        if perm.len() != n {
            return Err(Error::InvalidParameter(format!("permutation of length {} for n = {n}", perm.len())));
        }
        for &p in perm {
            if p >= n || seen.get(p) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen.set(p);
        }
        Graph::from_edges(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
