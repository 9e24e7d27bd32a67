//! Exact rank and nullspace of integer matrices by fraction-free (Bareiss)
//! elimination.
//!
//! After `k` pivots every remaining entry is a `(k+1) x (k+1)` minor of the
//! input, so the division by the previous pivot is exact. Elimination runs in
//! checked `i128` first and restarts in `BigInt` on overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix { rows: rows.len(), cols, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
}

/// Integer arithmetic for the elimination kernel.
trait Ring: Clone + Sized {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `(p * x - q * y) / d`, `None` on overflow. The division is exact.
    fn cross(p: &Self, x: &Self, q: &Self, y: &Self, d: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Ring for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    #[inline]
    fn cross(p: &i128, x: &i128, q: &i128, y: &i128, d: &i128) -> Option<i128> {
        let num = p.checked_mul(*x)?.checked_sub(q.checked_mul(*y)?)?;
        debug_assert_eq!(num % d, 0);
        Some(num / d)
    }

    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn cross(p: &BigInt, x: &BigInt, q: &BigInt, y: &BigInt, d: &BigInt) -> Option<BigInt> {
        let num = p * x - q * y;
        debug_assert!(Zero::is_zero(&(&num % d)));
        Some(num / d)
    }

    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Row echelon form: `rows[k]` has its leading entry in column `pivots[k]`.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub cols: usize,
    pub pivots: Vec<usize>,
    pub rows: Vec<Vec<BigInt>>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// One basis vector per free column: that column set to 1, the other free
    /// columns 0, pivot variables solved by back substitution. Each vector is
    /// scaled to coprime integers with a positive free entry.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let free: Vec<usize> = (0..self.cols).filter(|c| !self.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![BigRational::zero(); self.cols];
                x[f] = BigRational::one();
                for (k, &p) in self.pivots.iter().enumerate().rev() {
                    let row = &self.rows[k];
                    let mut acc = BigRational::zero();
                    for c in p + 1..self.cols {
                        if !Zero::is_zero(&row[c]) && !Zero::is_zero(&x[c]) {
                            acc += BigRational::from_integer(row[c].clone()) * &x[c];
                        }
                    }
                    x[p] = -acc / BigRational::from_integer(row[p].clone());
                }
                primitive(x)
            })
            .collect()
    }
}

fn primitive(x: Vec<BigRational>) -> Vec<BigRational> {
    let lcm = x.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = x.iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let gcd = if Zero::is_zero(&gcd) { BigInt::one() } else { gcd.abs() };
    ints.into_iter().map(|v| BigRational::from_integer(v / &gcd)).collect()
}

fn eliminate<T: Ring>(m: &IntMatrix) -> Option<Echelon> {
    let cols = m.cols;
    let mut rows: Vec<Vec<T>> = (0..m.rows)
        .map(|r| m.row(r).iter().map(|&v| T::from_i64(v)).collect())
        .filter(|r: &Vec<T>| !r.iter().all(T::is_zero))
        .collect();
    let mut prev = T::from_i64(1);
    let mut pivots = Vec::new();
    let mut top = 0;

    for c in 0..cols {
        let Some(p) = (top..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(top, p);
        let (head, tail) = rows.split_at_mut(top + 1);
        let pivot_row = &head[top];
        let pv = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..cols {
                row[j] = T::cross(&pv, &row[j], &factor, &pivot_row[j], &prev)?;
            }
            row[c] = T::from_i64(0);
        }
        // Rows that vanished can never supply a pivot again.
        let mut k = top + 1;
        while k < rows.len() {
            if rows[k][c + 1..].iter().all(T::is_zero) {
                rows.swap_remove(k);
            } else {
                k += 1;
            }
        }
        prev = pv;
        pivots.push(c);
        top += 1;
    }

    rows.truncate(top);
    Some(Echelon {
        cols,
        pivots,
        rows: rows.iter().map(|r| r.iter().map(Ring::to_big).collect()).collect(),
    })
}

pub fn echelon(m: &IntMatrix) -> Echelon {
    eliminate::<i128>(m).unwrap_or_else(|| eliminate::<BigInt>(m).expect("BigInt never overflows"))
}

/// Same as [`echelon`] but always in arbitrary precision.
pub fn echelon_big(m: &IntMatrix) -> Echelon {
    eliminate::<BigInt>(m).expect("BigInt never overflows")
}

pub fn rank(m: &IntMatrix) -> usize {
    echelon(m).rank()
}

pub fn nullspace(m: &IntMatrix) -> Vec<Vec<BigRational>> {
    echelon(m).nullspace()
}
