use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};
use crate::rng::GraphRng;

/// Named graph families for corpus generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `0 - 1 - ... - (n-1)`
    Path,
    /// Path plus the edge `(n-1, 0)`; needs `n >= 3`.
    Cycle,
    /// Vertex 0 joined to every other vertex.
    Star,
    Complete,
    /// Uniform random labelled tree, decoded from a random Prüfer sequence.
    Tree,
    /// Erdős–Rényi `G(n, p)`; pairs are visited in graph6 order.
    Gnp,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::Path, Family::Cycle, Family::Star, Family::Complete, Family::Tree, Family::Gnp];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Complete => "complete",
            Family::Tree => "tree",
            Family::Gnp => "gnp",
        }
    }

    pub fn min_order(self) -> usize {
        match self {
            Family::Cycle => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown graph family `{s}`")))
    }
}

/// Deterministic in `(family, n, p, seed)`. `p` is read only for [`Family::Gnp`]
/// and `seed` only for the random families.
pub fn generate(family: Family, n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < family.min_order() {
        return Err(Error::InvalidParameter(format!(
            "{family} needs n >= {}, got {n}",
            family.min_order()
        )));
    }
    let mut g = Graph::empty(n)?;
    match family {
        Family::Path => {
            for v in 1..n {
                g.add_edge(v - 1, v)?;
            }
        }
        Family::Cycle => {
            for v in 1..n {
                g.add_edge(v - 1, v)?;
            }
            g.add_edge(n - 1, 0)?;
        }
        Family::Star => {
            for v in 1..n {
                g.add_edge(0, v)?;
            }
        }
        Family::Complete => {
            for v in 1..n {
                for u in 0..v {
                    g.add_edge(u, v)?;
                }
            }
        }
        Family::Tree => {
            for (u, v) in random_tree_edges(n, &mut GraphRng::new(seed)) {
                g.add_edge(u, v)?;
            }
        }
        Family::Gnp => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParameter(format!("p = {p} outside [0, 1]")));
            }
            let mut rng = GraphRng::new(seed);
            for v in 1..n {
                for u in 0..v {
                    if rng.bernoulli(p) {
                        g.add_edge(u, v)?;
                    }
                }
            }
        }
    }
    Ok(g)
}

fn random_tree_edges(n: usize, rng: &mut GraphRng) -> Vec<(usize, usize)> {
    match n {
        1 => return Vec::new(),
        2 => return vec![(0, 1)],
        _ => {}
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
    prufer_decode(&code, n)
}

/// Linear-time Prüfer decoding.
pub(crate) fn prufer_decode(code: &[usize], n: usize) -> Vec<(usize, usize)> {
    debug_assert_eq!(code.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &v in code {
        degree[v] += 1;
    }
    let mut ptr = degree.iter().position(|&d| d == 1).expect("a tree has a leaf");
    let mut leaf = ptr;
    let mut edges = Vec::with_capacity(n - 1);
    for &v in code {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}
