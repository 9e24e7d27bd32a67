//! The stabilizer group of a graph state and its elements of support at most two.

use std::fmt;

use serde::Serialize;

use crate::bits::BitRow;
use crate::config::{self, ConfigurationKind};
use crate::error::{Error, Result};
use crate::gf2;
use crate::graph::Graph;
use crate::par::Strategy;
use crate::pauli::PauliString;

/// Default largest `n` for the `2^n` brute-force enumeration.
pub const DEFAULT_ENUMERATE_CAP: usize = 24;
/// Exponent vectors are enumerated as `u64` masks.
pub const MAX_ENUMERATE: usize = 62;

const CHUNK_BITS: usize = 14;

/// Exponents `z` in `S_z = prod_i g_i^{z_i}`. Orders as the integer `sum z_i 2^i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(BitRow);

impl ExponentVector {
    pub fn new(bits: BitRow) -> Self {
        ExponentVector(bits)
    }

    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        ExponentVector(BitRow::from_indices(n, indices))
    }

    pub fn bits(&self) -> &BitRow {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExponentVector({})", self.0)
    }
}

impl Serialize for ExponentVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

/// A non-identity stabilizer element with its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LowWeightElement {
    pub exponents: ExponentVector,
    pub pauli: PauliString,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Scan all `2^n` exponent vectors.
    Brute,
    /// Read the elements off the twin, leaf and closed-twin pairs.
    Fast,
}

#[derive(Debug, Clone, Copy)]
pub struct EnumerateOptions {
    pub cap: usize,
    pub strategy: Strategy,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { cap: DEFAULT_ENUMERATE_CAP, strategy: Strategy::default() }
    }
}

/// `g_i = X_i prod_{j in N(i)} Z_j`.
pub fn graph_generators(g: &Graph) -> Vec<PauliString> {
    let n = g.order();
    (0..n)
        .map(|i| {
            PauliString::from_parts(BitRow::from_indices(n, [i]), g.neighbors(i).clone(), 0)
                .expect("rows have length n")
        })
        .collect()
}

/// `prod_i gens[i]^{e_i}`, multiplied in increasing `i`.
pub fn element(gens: &[PauliString], e: &ExponentVector) -> Result<PauliString> {
    if gens.len() != e.len() {
        return Err(Error::LengthMismatch { left: gens.len(), right: e.len() });
    }
    let n = gens.first().map_or(0, PauliString::len);
    e.bits()
        .iter_ones()
        .try_fold(PauliString::identity(n), |acc, i| acc.multiply(&gens[i]))
}

pub fn low_weight_elements(g: &Graph, mode: Mode) -> Result<Vec<LowWeightElement>> {
    low_weight_elements_with(g, mode, &EnumerateOptions::default())
}

/// All non-identity stabilizer elements with support of size at most two,
/// sorted by exponent vector.
pub fn low_weight_elements_with(
    g: &Graph,
    mode: Mode,
    opts: &EnumerateOptions,
) -> Result<Vec<LowWeightElement>> {
    let gens = graph_generators(g);
    let exponents = match mode {
        Mode::Brute => brute_exponents(g, opts)?,
        Mode::Fast => fast_exponents(g, opts.strategy)?,
    };
    exponents
        .into_iter()
        .map(|e| {
            let pauli = element(&gens, &e)?;
            Ok(LowWeightElement { exponents: e, pauli })
        })
        .collect()
}

fn brute_exponents(g: &Graph, opts: &EnumerateOptions) -> Result<Vec<ExponentVector>> {
    let n = g.order();
    let cap = opts.cap.min(MAX_ENUMERATE);
    if n > cap {
        return Err(Error::CapExceeded { what: "brute-force enumeration", n, cap });
    }
    let masks: Vec<u64> = (0..n).map(|i| g.neighbors(i).to_u64().expect("n <= 62")).collect();
    let chunk_bits = n.min(CHUNK_BITS);
    let chunks = 1usize << (n - chunk_bits);

    // Within a chunk, walk counters k in Gray-code order so each step flips one
    // exponent bit and updates the Z part by one adjacency row.
    let scan = |c: usize| -> Vec<u64> {
        let start = (c as u64) << chunk_bits;
        let end = start + (1u64 << chunk_bits);
        let mut e = start ^ (start >> 1);
        let mut z = masks
            .iter()
            .enumerate()
            .filter(|(i, _)| e >> i & 1 == 1)
            .fold(0u64, |acc, (_, m)| acc ^ m);
        let mut hits = Vec::new();
        let mut k = start;
        loop {
            if e != 0 && (e | z).count_ones() <= 2 {
                hits.push(e);
            }
            k += 1;
            if k == end {
                break;
            }
            let t = k.trailing_zeros() as usize;
            e ^= 1 << t;
            z ^= masks[t];
        }
        hits
    };

    let mut found = opts.strategy.flat_map_range(chunks, scan);
    found.sort_unstable();
    Ok(found.into_iter().map(|e| ExponentVector(BitRow::from_u64(n, e))).collect())
}

fn fast_exponents(g: &Graph, strategy: Strategy) -> Result<Vec<ExponentVector>> {
    let n = g.order();
    let mut out: Vec<ExponentVector> = config::detect_configurations_with(g, strategy)?
        .into_iter()
        .map(|c| match c.kind {
            ConfigurationKind::Leaf => ExponentVector::from_indices(n, [c.a]),
            ConfigurationKind::Twin | ConfigurationKind::ClosedTwin => {
                ExponentVector::from_indices(n, [c.a, c.b])
            }
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// GF(2) rank of the exponent vectors: the size of any generating set of the
/// weight-at-most-two elements.
pub fn g2_rank<'a>(exponents: impl IntoIterator<Item = &'a ExponentVector>) -> usize {
    gf2::rank(exponents.into_iter().map(ExponentVector::bits))
}

/// `g2` of a possibly disconnected graph, summed over components. An isolated
/// vertex contributes its own generator `X_v`.
pub fn g2_rank_by_components(g: &Graph, strategy: Strategy) -> Result<usize> {
    let mut total = 0;
    for comp in g.components() {
        if comp.len() == 1 {
            total += 1;
            continue;
        }
        let sub = g.induced(&comp)?;
        let exps = fast_exponents(&sub, strategy)?;
        total += g2_rank(&exps);
    }
    Ok(total)
}
