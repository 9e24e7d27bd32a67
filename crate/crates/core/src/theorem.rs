//! End-to-end checks that the configuration count, the weight-two stabilizer
//! rank and the exact oracle agree, together with the two structural facts
//! about weight-two stabilizer elements that connect them.

use serde::Serialize;

use crate::config::{self, Slot, SlotPair};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{self, OracleOptions};
use crate::stabilizer::{self, EnumerateOptions, LowWeightElement, Mode};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub n: usize,
    /// From the detected configurations.
    pub dimension: usize,
    /// GF(2) rank of the weight-at-most-two stabilizer elements.
    pub g2: usize,
    pub oracle_nullity: Option<usize>,
    /// `dimension == g2`. Expected for every connected graph with `n >= 3`;
    /// the two-vertex graph gives `(3, 2)`.
    pub holds: bool,
    pub oracle_agrees: Option<bool>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CheckOptions {
    pub with_oracle: bool,
    pub oracle: OracleOptions,
    /// `g2` comes from brute-force enumeration when `n <= enumerate.cap`,
    /// otherwise from the configurations.
    pub enumerate: EnumerateOptions,
}

pub fn check_equivalence(g: &Graph, with_oracle: bool) -> Result<EquivalenceReport> {
    check_equivalence_with(g, &CheckOptions { with_oracle, ..Default::default() })
}

pub fn check_equivalence_with(g: &Graph, opts: &CheckOptions) -> Result<EquivalenceReport> {
    let n = g.order();
    let dimension = config::stabilizer_dimension_with(g, opts.enumerate.strategy)?;
    let mode = if n <= opts.enumerate.cap { Mode::Brute } else { Mode::Fast };
    let elems = stabilizer::low_weight_elements_with(g, mode, &opts.enumerate)?;
    let g2 = stabilizer::g2_rank(elems.iter().map(|e| &e.exponents));
    let oracle_nullity = if opts.with_oracle {
        Some(oracle::local_algebra_nullity_with(g, &opts.oracle)?)
    } else {
        None
    };
    let holds = dimension == g2;
    if n >= 3 && !holds {
        return Err(Error::Consistency(format!(
            "dimension {dimension} != g2 {g2} on a connected graph with n = {n}"
        )));
    }
    Ok(EquivalenceReport {
        n,
        dimension,
        g2,
        oracle_nullity,
        holds,
        oracle_agrees: oracle_nullity.map(|k| k == dimension),
    })
}

fn brute_elements(g: &Graph) -> Result<Vec<LowWeightElement>> {
    if g.order() < 2 {
        return Err(Error::TooSmall { n: g.order(), min: 2 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    stabilizer::low_weight_elements(g, Mode::Brute)
}

fn weight_two(elems: &[LowWeightElement]) -> impl Iterator<Item = (&LowWeightElement, Vec<usize>)> {
    elems.iter().filter_map(|e| {
        let s: Vec<usize> = e.pauli.support().iter_ones().collect();
        (s.len() == 2).then_some((e, s))
    })
}

/// Every weight-two element sits on a detected pair, and no weight-one element exists.
pub fn check_support_pairs(g: &Graph) -> Result<bool> {
    let elems = brute_elements(g)?;
    if elems.iter().any(|e| e.pauli.weight() < 2) {
        return Ok(false);
    }
    let configs = config::detect_configurations(g)?;
    let all_paired = weight_two(&elems).all(|(_, s)| {
        configs.iter().any(|c| (c.a, c.b) == (s[0], s[1]) || (c.b, c.a) == (s[0], s[1]))
    });
    Ok(all_paired)
}

/// Any two distinct weight-two elements have disjoint supports, or share one
/// vertex carrying the same Pauli letter in both.
///
/// Fails on the two-vertex graph, where `XZ`, `ZX` and `YY` share a support.
pub fn check_pairwise_overlap(g: &Graph) -> Result<bool> {
    let elems = brute_elements(g)?;
    let pairs: Vec<_> = weight_two(&elems).collect();
    for (i, (p, sp)) in pairs.iter().enumerate() {
        for (q, sq) in &pairs[i + 1..] {
            let shared: Vec<usize> = sp.iter().copied().filter(|v| sq.contains(v)).collect();
            match shared.as_slice() {
                [] => {}
                [v] if p.pauli.letter(*v) == q.pauli.letter(*v) => {}
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}

/// Mapping each weight-two element `O(a) O(b)` to `O(a) - O(b)` preserves
/// the number of independent elements.
pub fn check_correspondence(g: &Graph) -> Result<bool> {
    if g.order() < 3 {
        return Err(Error::TooSmall { n: g.order(), min: 3 });
    }
    let elems = brute_elements(g)?;
    let gf2_rank = stabilizer::g2_rank(elems.iter().map(|e| &e.exponents));
    let mapped = weight_two(&elems).map(|(e, s)| SlotPair {
        plus: Slot::new(s[0], e.pauli.letter(s[0]).unwrap()),
        minus: Slot::new(s[1], e.pauli.letter(s[1]).unwrap()),
    });
    Ok(config::slot_rank(mapped, g.order()) == gf2_rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn fam(f: Family, n: usize) -> Graph {
        generate(f, n, 0.0, 0).unwrap()
    }

    #[test]
    fn equivalence_examples() {
        let k2 = check_equivalence(&fam(Family::Complete, 2), true).unwrap();
        assert_eq!((k2.dimension, k2.g2, k2.holds), (3, 2, false));
        assert_eq!(k2.oracle_agrees, Some(true));

        let s5 = check_equivalence(&fam(Family::Star, 5), false).unwrap();
        assert_eq!((s5.dimension, s5.g2, s5.holds, s5.oracle_nullity), (4, 4, true, None));

        let c5 = check_equivalence(&fam(Family::Cycle, 5), true).unwrap();
        assert_eq!((c5.dimension, c5.g2, c5.holds, c5.oracle_nullity), (0, 0, true, Some(0)));

        assert_eq!(check_equivalence(&Graph::empty(3).unwrap(), false), Err(Error::Disconnected));
    }

    #[test]
    fn overlap_and_support_checks_on_named_families() {
        for n in 3..=10 {
            for f in [Family::Path, Family::Cycle, Family::Star, Family::Complete, Family::Tree] {
                let g = fam(f, n);
                assert!(check_support_pairs(&g).unwrap(), "{f} {n}");
                assert!(check_pairwise_overlap(&g).unwrap(), "{f} {n}");
                assert!(check_correspondence(&g).unwrap(), "{f} {n}");
            }
        }
    }

    #[test]
    fn two_vertex_boundary() {
        let k2 = fam(Family::Complete, 2);
        assert!(check_support_pairs(&k2).unwrap());
        assert!(!check_pairwise_overlap(&k2).unwrap());
        assert!(check_correspondence(&k2).is_err());
    }

    #[test]
    fn explicit_correspondence_ranks() {
        for (g, rank) in [(fam(Family::Star, 6), 5), (fam(Family::Complete, 4), 3), (fam(Family::Cycle, 5), 0)] {
            let elems = stabilizer::low_weight_elements(&g, Mode::Brute).unwrap();
            assert_eq!(stabilizer::g2_rank(elems.iter().map(|e| &e.exponents)), rank);
            assert!(check_correspondence(&g).unwrap());
        }
        let c6 = fam(Family::Cycle, 6);
        assert!(stabilizer::low_weight_elements(&c6, Mode::Brute).unwrap().is_empty());
        assert!(check_pairwise_overlap(&c6).unwrap());
    }
}
