//! Rank over GF(2).

use crate::bits::BitRow;

/// Incrementally maintained GF(2) row basis, keyed by leading (highest) bit.
#[derive(Debug, Clone, Default)]
pub struct Gf2Basis {
    rows: Vec<BitRow>,
}

impl Gf2Basis {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reduces `row` against the basis and keeps the remainder if it is non-zero.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, row: &BitRow) -> bool {
        let mut r = row.clone();
        while let Some(lead) = r.last_one() {
            match self.rows.binary_search_by(|b| b.last_one().unwrap().cmp(&lead)) {
                Ok(k) => r.xor_assign(&self.rows[k]),
                Err(k) => {
                    self.rows.insert(k, r);
                    return true;
                }
            }
        }
        false
    }

    pub fn contains(&self, row: &BitRow) -> bool {
        let mut r = row.clone();
        while let Some(lead) = r.last_one() {
            match self.rows.binary_search_by(|b| b.last_one().unwrap().cmp(&lead)) {
                Ok(k) => r.xor_assign(&self.rows[k]),
                Err(_) => return false,
            }
        }
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

pub fn rank<'a>(rows: impl IntoIterator<Item = &'a BitRow>) -> usize {
    let mut basis = Gf2Basis::new();
    for r in rows {
        basis.insert(r);
    }
    basis.rank()
}
