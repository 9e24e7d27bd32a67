//! Twin, leaf and closed-twin pairs, and the stabilizer dimension they generate.
//!
//! Every local Lie-algebra element annihilating a connected graph state is a
//! combination of differences `O(a) - O(b)` of two single-qubit Paulis, one
//! for each detected pair:
//!
//! | kind          | condition                   | generator       | stabilizer element |
//! |---------------|-----------------------------|-----------------|--------------------|
//! | `twin`        | `N(a) = N(b)`, not adjacent | `X(a) - X(b)`   | `+X(a) X(b)`       |
//! | `leaf`        | `N(a) = {b}`                | `X(a) - Z(b)`   | `+X(a) Z(b)`       |
//! | `closed_twin` | `N(a) + a = N(b) + b`       | `Y(a) - Y(b)`   | `+Y(a) Y(b)`       |
//!
//! Leaves are directed: `a` is the degree-one vertex.

use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::Strategy;
use crate::pauli::{Axis, PauliString};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConfigurationKind {
    Twin,
    Leaf,
    ClosedTwin,
}

impl ConfigurationKind {
    pub fn name(self) -> &'static str {
        match self {
            ConfigurationKind::Twin => "twin",
            ConfigurationKind::Leaf => "leaf",
            ConfigurationKind::ClosedTwin => "closed_twin",
        }
    }
}

impl fmt::Display for ConfigurationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One detected pair. Sorts by kind, then `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Configuration {
    pub kind: ConfigurationKind,
    pub a: usize,
    pub b: usize,
}

impl Configuration {
    pub fn new(kind: ConfigurationKind, a: usize, b: usize) -> Self {
        Configuration { kind, a, b }
    }

    pub fn lie_generator(&self) -> SlotPair {
        lie_generator(self)
    }

    /// Checks the defining neighbourhood condition against `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let n = g.order();
        let (a, b) = (self.a, self.b);
        if a >= n || b >= n || a == b {
            return false;
        }
        match self.kind {
            ConfigurationKind::Twin => a < b && !g.has_edge(a, b) && g.neighbors(a) == g.neighbors(b),
            ConfigurationKind::Leaf => g.degree(a) == 1 && g.has_edge(a, b),
            ConfigurationKind::ClosedTwin => a < b && g.has_edge(a, b) && closed_twins(g, a, b),
        }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.kind, self.a, self.b)
    }
}

/// A single-qubit Pauli direction on one vertex: a coordinate of the `3n`-dimensional slot space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Slot {
    pub vertex: usize,
    pub axis: Axis,
}

impl Slot {
    pub fn new(vertex: usize, axis: Axis) -> Self {
        Slot { vertex, axis }
    }

    pub fn index(&self) -> usize {
        3 * self.vertex + self.axis.index()
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.axis, self.vertex)
    }
}

/// The Lie-algebra element `plus - minus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SlotPair {
    pub plus: Slot,
    pub minus: Slot,
}

impl fmt::Display for SlotPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.plus, self.minus)
    }
}

impl std::str::FromStr for SlotPair {
    type Err = Error;

    /// Parses `"X0-Z1"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(1, format!("bad generator `{s}`"));
        let slot = |t: &str| -> Result<Slot> {
            let mut chars = t.trim().chars();
            let axis = chars.next().and_then(Axis::from_letter).ok_or_else(bad)?;
            let vertex = chars.as_str().parse().map_err(|_| bad())?;
            Ok(Slot::new(vertex, axis))
        };
        let (p, m) = s.split_once('-').ok_or_else(bad)?;
        Ok(SlotPair { plus: slot(p)?, minus: slot(m)? })
    }
}

fn closed_twins(g: &Graph, a: usize, b: usize) -> bool {
    let mut diff = g.neighbors(a).xor(g.neighbors(b));
    if !(diff.get(a) && diff.get(b)) {
        return false;
    }
    diff.clear(a);
    diff.clear(b);
    diff.is_zero()
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.order() < 2 {
        return Err(Error::TooSmall { n: g.order(), min: 2 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

pub fn detect_configurations(g: &Graph) -> Result<Vec<Configuration>> {
    detect_configurations_with(g, Strategy::default())
}

/// Every twin, leaf and closed-twin pair of a connected graph with `n >= 2`,
/// sorted by kind then `(a, b)`.
pub fn detect_configurations_with(g: &Graph, strategy: Strategy) -> Result<Vec<Configuration>> {
    require_connected(g)?;
    let n = g.order();
    let per_vertex = |a: usize| -> Vec<Configuration> {
        let mut out = Vec::new();
        if g.degree(a) == 1 {
            let b = g.neighbors(a).first_one().unwrap();
            out.push(Configuration::new(ConfigurationKind::Leaf, a, b));
        }
        let na = g.neighbors(a);
        for b in a + 1..n {
            if g.has_edge(a, b) {
                if closed_twins(g, a, b) {
                    out.push(Configuration::new(ConfigurationKind::ClosedTwin, a, b));
                }
            } else if na == g.neighbors(b) {
                out.push(Configuration::new(ConfigurationKind::Twin, a, b));
            }
        }
        out
    };
    let mut found = strategy.flat_map_range(n, per_vertex);
    found.sort_unstable();
    Ok(found)
}

pub fn lie_generator(c: &Configuration) -> SlotPair {
    let (pa, pb) = match c.kind {
        ConfigurationKind::Twin => (Axis::X, Axis::X),
        ConfigurationKind::Leaf => (Axis::X, Axis::Z),
        ConfigurationKind::ClosedTwin => (Axis::Y, Axis::Y),
    };
    SlotPair { plus: Slot::new(c.a, pa), minus: Slot::new(c.b, pb) }
}

/// Rank over the rationals of the difference vectors `e_plus - e_minus` in a
/// slot space of `3n` coordinates.
///
/// These are the columns of a signed incidence matrix of the graph whose
/// vertices are slots, so the rank is the number of slots touched minus the
/// number of components among them, i.e. the number of merging unions.
pub fn slot_rank(pairs: impl IntoIterator<Item = SlotPair>, n: usize) -> usize {
    let mut uf = UnionFind::<usize>::new(3 * n);
    pairs
        .into_iter()
        .filter(|p| uf.union(p.plus.index(), p.minus.index()))
        .count()
}

/// The stabilizer dimension of a connected graph state with `n >= 2`.
pub fn stabilizer_dimension(g: &Graph) -> Result<usize> {
    stabilizer_dimension_with(g, Strategy::default())
}

pub fn stabilizer_dimension_with(g: &Graph, strategy: Strategy) -> Result<usize> {
    let configs = detect_configurations_with(g, strategy)?;
    Ok(slot_rank(configs.iter().map(lie_generator), g.order()))
}

/// Stabilizer dimension of a possibly disconnected graph, summed over
/// components. Each isolated vertex contributes 1. This goes beyond the
/// connected case the configuration analysis covers and is meant to be
/// checked against the exact oracle.
pub fn stabilizer_dimension_by_components(g: &Graph, strategy: Strategy) -> Result<usize> {
    let mut total = 0;
    for comp in g.components() {
        total += match comp.len() {
            1 => 1,
            _ => stabilizer_dimension_with(&g.induced(&comp)?, strategy)?,
        };
    }
    Ok(total)
}

/// The weight-two stabilizer element matching `c`, on `n` qubits.
pub fn corresponding_stabilizer_element(c: &Configuration, n: usize) -> PauliString {
    let (pa, pb) = match c.kind {
        ConfigurationKind::Twin => (Axis::X, Axis::X),
        ConfigurationKind::Leaf => (Axis::X, Axis::Z),
        ConfigurationKind::ClosedTwin => (Axis::Y, Axis::Y),
    };
    let mut p = PauliString::single(n, c.a, pa);
    p.set_letter(c.b, pb);
    p
}
