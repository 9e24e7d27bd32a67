//! Pauli strings in symplectic form.
//!
//! A [`PauliString`] with bits `(x, z)` and phase exponent `k` denotes
//! `i^k * prod_a X_a^{x_a} Z_a^{z_a}`, with `X` to the left of `Z` on each
//! qubit. A `Y` letter therefore costs one unit of phase: `Y = i X Z`.
//! Text rendering uses letters, so the displayed sign is `i^(k - #Y)`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bits::BitRow;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            Axis::X => 'X',
            Axis::Y => 'Y',
            Axis::Z => 'Z',
        }
    }

    pub fn from_letter(c: char) -> Option<Axis> {
        match c {
            'X' => Some(Axis::X),
            'Y' => Some(Axis::Y),
            'Z' => Some(Axis::Z),
            _ => None,
        }
    }

    fn bits(self) -> (bool, bool) {
        match self {
            Axis::X => (true, false),
            Axis::Y => (true, true),
            Axis::Z => (false, true),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    x: BitRow,
    z: BitRow,
    phase_exp: u8,
}

impl PauliString {
    pub fn identity(n: usize) -> Self {
        PauliString { x: BitRow::zeros(n), z: BitRow::zeros(n), phase_exp: 0 }
    }

    pub fn from_parts(x: BitRow, z: BitRow, phase_exp: u8) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::LengthMismatch { left: x.len(), right: z.len() });
        }
        Ok(PauliString { x, z, phase_exp: phase_exp % 4 })
    }

    /// The Hermitian single-qubit operator `axis` on `qubit`, sign `+`.
    pub fn single(n: usize, qubit: usize, axis: Axis) -> Self {
        let mut p = PauliString::identity(n);
        p.set_letter(qubit, axis);
        p
    }

    /// Overwrites qubit `q` with `axis`, adjusting the phase so the displayed sign is unchanged.
    pub fn set_letter(&mut self, q: usize, axis: Axis) {
        if self.letter(q) == Some(Axis::Y) {
            self.phase_exp = (self.phase_exp + 3) % 4;
        }
        let (xb, zb) = axis.bits();
        if xb { self.x.set(q) } else { self.x.clear(q) }
        if zb { self.z.set(q) } else { self.z.clear(q) }
        if axis == Axis::Y {
            self.phase_exp = (self.phase_exp + 1) % 4;
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.x.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn x(&self) -> &BitRow {
        &self.x
    }

    pub fn z(&self) -> &BitRow {
        &self.z
    }

    /// Exponent `k` of the `i^k` prefactor in the `X`-before-`Z` normal form.
    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    /// Exponent of the sign in the letter form, `i^(k - #Y)`. Hermitian strings have 0 or 2.
    pub fn sign_exp(&self) -> u8 {
        let ys = (self.x.and_count(&self.z) % 4) as u8;
        (self.phase_exp + 4 - ys) % 4
    }

    pub fn letter(&self, q: usize) -> Option<Axis> {
        match (self.x.get(q), self.z.get(q)) {
            (false, false) => None,
            (true, false) => Some(Axis::X),
            (true, true) => Some(Axis::Y),
            (false, true) => Some(Axis::Z),
        }
    }

    pub fn negated(&self) -> Self {
        PauliString { phase_exp: (self.phase_exp + 2) % 4, ..self.clone() }
    }

    pub fn support(&self) -> BitRow {
        self.x.or(&self.z)
    }

    pub fn weight(&self) -> usize {
        self.support().count_ones()
    }

    /// Exact operator product `self * other`.
    ///
    /// Moving each `Z` of `self` past an `X` of `other` on the same qubit
    /// contributes a factor `-1`.
    pub fn multiply(&self, other: &PauliString) -> Result<PauliString> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        let swaps = (self.z.and_count(&other.x) % 2) as u8;
        Ok(PauliString {
            x: self.x.xor(&other.x),
            z: self.z.xor(&other.z),
            phase_exp: (self.phase_exp + other.phase_exp + 2 * swaps) % 4,
        })
    }

    pub fn commutes_with(&self, other: &PauliString) -> bool {
        (self.x.and_count(&other.z) + self.z.and_count(&other.x)) & 1 == 0
    }
}

const SIGNS: [&str; 4] = ["+", "+i", "-", "-i"];

/// Renders as a sign (`+`, `-`, `+i`, `-i`) followed by one letter per qubit, qubit 0 first.
impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(SIGNS[self.sign_exp() as usize])?;
        for q in 0..self.len() {
            write!(f, "{}", self.letter(q).map_or('I', Axis::letter))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self})")
    }
}

/// Parses the [`Display`](fmt::Display) form; a missing sign means `+`.
impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (sign, letters) = ["+i", "-i", "+", "-"]
            .into_iter()
            .find_map(|p| s.strip_prefix(p).map(|rest| (p, rest)))
            .unwrap_or(("+", s));
        let sign_exp = SIGNS.iter().position(|&t| t == sign).unwrap() as u8;
        let mut p = PauliString::identity(letters.chars().count());
        for (q, c) in letters.chars().enumerate() {
            match c {
                'I' => {}
                c => {
                    let axis = Axis::from_letter(c)
                        .ok_or_else(|| Error::parse(1, format!("bad Pauli letter `{c}`")))?;
                    p.set_letter(q, axis);
                }
            }
        }
        p.phase_exp = (p.phase_exp + sign_exp) % 4;
        Ok(p)
    }
}
