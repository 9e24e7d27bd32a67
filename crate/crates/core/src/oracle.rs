//! Brute-force ground truth for the stabilizer dimension.
//!
//! The graph state is built as an exact statevector over the Gaussian
//! integers (the common factor `2^(-n/2)` is dropped; nothing here depends on
//! scale). The stabilizer dimension is then the dimension of the space of
//! real coefficients `(theta, t_ax, t_ay, t_az)` with
//!
//! ```text
//! (theta + sum_a t_ax X_a + t_ay Y_a + t_az Z_a) |psi> = 0,
//! ```
//!
//! found by exact fraction-free elimination on the real and imaginary parts.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::config::{Slot, SlotPair};
use crate::error::{Error, Result};
use crate::exact::{self, Echelon, IntMatrix};
use crate::graph::Graph;
use crate::pauli::{Axis, PauliString};

/// Default largest `n` for statevector work.
pub const DEFAULT_ORACLE_CAP: usize = 14;
/// Hard limit regardless of the requested cap (`2^24` amplitudes).
pub const MAX_ORACLE: usize = 24;

pub type GaussInt = Complex<i64>;

const I_POWERS: [GaussInt; 4] = [
    Complex { re: 1, im: 0 },
    Complex { re: 0, im: 1 },
    Complex { re: -1, im: 0 },
    Complex { re: 0, im: -1 },
];

/// Unnormalized amplitudes; basis index bit `a` is qubit `a`.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactStateVector {
    n: usize,
    amp: Vec<GaussInt>,
}

impl ExactStateVector {
    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[GaussInt] {
        &self.amp
    }

    pub fn is_zero(&self) -> bool {
        self.amp.iter().all(|a| a.re == 0 && a.im == 0)
    }
}

impl fmt::Debug for ExactStateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExactStateVector").field("n", &self.n).field("amp", &self.amp).finish()
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(MAX_ORACLE);
    if n > cap {
        return Err(Error::CapExceeded { what: "exact oracle", n, cap });
    }
    Ok(())
}

pub fn build_statevector(g: &Graph) -> Result<ExactStateVector> {
    build_statevector_capped(g, DEFAULT_ORACLE_CAP)
}

/// Starts from the all-ones vector (unnormalized `|+>^n`) and applies a
/// controlled-sign for every edge, flipping amplitudes whose index has both
/// endpoint bits set.
pub fn build_statevector_capped(g: &Graph, cap: usize) -> Result<ExactStateVector> {
    let n = g.order();
    check_cap(n, cap)?;
    let mut amp = vec![Complex::new(1i64, 0); 1 << n];
    for (u, v) in g.edges() {
        let both = (1usize << u) | (1usize << v);
        for (x, a) in amp.iter_mut().enumerate() {
            if x & both == both {
                *a = -*a;
            }
        }
    }
    Ok(ExactStateVector { n, amp })
}

/// `p |v>` computed exactly: `Z` factors act first, then `X`, then the `i^k` prefactor.
pub fn apply_pauli(p: &PauliString, v: &ExactStateVector) -> Result<ExactStateVector> {
    if p.len() != v.n {
        return Err(Error::LengthMismatch { left: p.len(), right: v.n });
    }
    let xm = p.x().to_u64().expect("oracle sizes fit in u64") as usize;
    let zm = p.z().to_u64().expect("oracle sizes fit in u64") as usize;
    let phase = I_POWERS[p.phase_exp() as usize];
    let amp = (0..v.amp.len())
        .map(|y| {
            let src = y ^ xm;
            let a = v.amp[src];
            let a = if (src & zm).count_ones() % 2 == 1 { -a } else { a };
            a * phase
        })
        .collect();
    Ok(ExactStateVector { n: v.n, amp })
}

/// `p |v> = |v>` exactly, sign included. Mismatched sizes are never stabilized.
pub fn is_stabilized(p: &PauliString, v: &ExactStateVector) -> bool {
    apply_pauli(p, v).is_ok_and(|w| w == *v)
}

/// Real coefficients of `theta * 1 + sum_a t_a . (X_a, Y_a, Z_a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientVector {
    pub theta: BigRational,
    /// `t[a][axis.index()]`
    pub t: Vec<[BigRational; 3]>,
}

impl CoefficientVector {
    pub fn zeros(n: usize) -> Self {
        CoefficientVector {
            theta: BigRational::zero(),
            t: vec![[BigRational::zero(), BigRational::zero(), BigRational::zero()]; n],
        }
    }

    /// The generator `plus - minus`.
    pub fn from_slot_pair(pair: &SlotPair, n: usize) -> Self {
        let mut c = CoefficientVector::zeros(n);
        c.t[pair.plus.vertex][pair.plus.axis.index()] += BigRational::one();
        c.t[pair.minus.vertex][pair.minus.axis.index()] -= BigRational::one();
        c
    }

    pub fn qubits(&self) -> usize {
        self.t.len()
    }

    pub fn theta_is_zero(&self) -> bool {
        self.theta.is_zero()
    }

    pub fn get(&self, slot: Slot) -> &BigRational {
        &self.t[slot.vertex][slot.axis.index()]
    }

    /// `[theta, X_0..X_{n-1}, Y_0.., Z_0..]`, the oracle's column order.
    pub fn to_flat(&self) -> Vec<BigRational> {
        let n = self.qubits();
        let mut out = Vec::with_capacity(3 * n + 1);
        out.push(self.theta.clone());
        for axis in Axis::ALL {
            out.extend(self.t.iter().map(|c| c[axis.index()].clone()));
        }
        out
    }

    pub fn from_flat(flat: &[BigRational]) -> Self {
        assert_eq!(flat.len() % 3, 1, "length must be 3n + 1");
        let n = flat.len() / 3;
        let mut c = CoefficientVector::zeros(n);
        c.theta = flat[0].clone();
        for axis in Axis::ALL {
            for a in 0..n {
                c.t[a][axis.index()] = flat[1 + axis.index() * n + a].clone();
            }
        }
        c
    }
}

impl fmt::Display for CoefficientVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        if !self.theta.is_zero() {
            terms.push((self.theta.clone(), "1".to_string()));
        }
        for (a, coeffs) in self.t.iter().enumerate() {
            for axis in Axis::ALL {
                let c = &coeffs[axis.index()];
                if !c.is_zero() {
                    terms.push((c.clone(), format!("{axis}{a}")));
                }
            }
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (c, name)) in terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else if k > 0 { "+" } else { "" };
            let mag = c.abs();
            if k > 0 {
                f.write_str(" ")?;
            }
            if mag.is_one() {
                write!(f, "{sign}{name}")?;
            } else {
                write!(f, "{sign}{mag}*{name}")?;
            }
        }
        Ok(())
    }
}

/// How the complex system is turned into an integer one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Layout {
    /// Real and imaginary parts of all `3n + 1` columns stacked into one matrix.
    Stacked,
    /// Separate real `(theta, X, Z)` and imaginary `(Y)` blocks. Used only when
    /// those columns really are purely real / purely imaginary; otherwise
    /// falls back to [`Layout::Stacked`].
    #[default]
    Split,
}

#[derive(Debug, Clone, Copy)]
pub struct OracleOptions {
    pub cap: usize,
    pub layout: Layout,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { cap: DEFAULT_ORACLE_CAP, layout: Layout::default() }
    }
}

/// The vectors `[v, X_a v, Y_a v, Z_a v]` in flat column order.
fn columns(v: &ExactStateVector) -> Vec<Vec<GaussInt>> {
    let n = v.n;
    let mut cols = vec![v.amp.clone()];
    for axis in Axis::ALL {
        for a in 0..n {
            let p = PauliString::single(n, a, axis);
            cols.push(apply_pauli(&p, v).expect("sizes match").amp);
        }
    }
    cols
}

fn stacked_matrix(cols: &[Vec<GaussInt>], which: &[usize]) -> IntMatrix {
    let len = cols[0].len();
    let mut m = IntMatrix::zeros(2 * len, which.len());
    for (j, &c) in which.iter().enumerate() {
        for (x, a) in cols[c].iter().enumerate() {
            m.set(2 * x, j, a.re);
            m.set(2 * x + 1, j, a.im);
        }
    }
    m
}

/// Echelon forms of the system together with the flat column indices each covers.
fn reduce(v: &ExactStateVector, layout: Layout) -> Vec<(Echelon, Vec<usize>)> {
    let n = v.n;
    let cols = columns(v);
    let y_cols: Vec<usize> = (1 + n..1 + 2 * n).collect();
    let real_cols: Vec<usize> = (0..3 * n + 1).filter(|c| !y_cols.contains(c)).collect();
    let decoupled = real_cols.iter().all(|&c| cols[c].iter().all(|a| a.im == 0))
        && y_cols.iter().all(|&c| cols[c].iter().all(|a| a.re == 0));

    if layout == Layout::Split && decoupled {
        let len = cols[0].len();
        let block = |which: &[usize], imag: bool| {
            let mut m = IntMatrix::zeros(len, which.len());
            for (j, &c) in which.iter().enumerate() {
                for (x, a) in cols[c].iter().enumerate() {
                    m.set(x, j, if imag { a.im } else { a.re });
                }
            }
            m
        };
        vec![
            (exact::echelon(&block(&real_cols, false)), real_cols.clone()),
            (exact::echelon(&block(&y_cols, true)), y_cols),
        ]
    } else {
        let all: Vec<usize> = (0..3 * n + 1).collect();
        vec![(exact::echelon(&stacked_matrix(&cols, &all)), all)]
    }
}

pub fn local_algebra_nullity(g: &Graph) -> Result<usize> {
    local_algebra_nullity_with(g, &OracleOptions::default())
}

/// Dimension of the real solution space of the local annihilation system.
pub fn local_algebra_nullity_with(g: &Graph, opts: &OracleOptions) -> Result<usize> {
    let v = build_statevector_capped(g, opts.cap)?;
    Ok(reduce(&v, opts.layout).iter().map(|(e, _)| e.nullity()).sum())
}

pub fn nullspace_basis(g: &Graph) -> Result<Vec<CoefficientVector>> {
    nullspace_basis_with(g, &OracleOptions::default())
}

/// An exact basis of the solution space, each vector scaled to coprime integers.
pub fn nullspace_basis_with(g: &Graph, opts: &OracleOptions) -> Result<Vec<CoefficientVector>> {
    let v = build_statevector_capped(g, opts.cap)?;
    let width = 3 * v.n + 1;
    let mut basis = Vec::new();
    for (ech, which) in reduce(&v, opts.layout) {
        for local in ech.nullspace() {
            let mut flat = vec![BigRational::zero(); width];
            for (val, &c) in local.into_iter().zip(&which) {
                flat[c] = val;
            }
            basis.push(CoefficientVector::from_flat(&flat));
        }
    }
    Ok(basis)
}

/// `(theta + sum t . sigma) |v> = 0`, evaluated directly on the amplitudes.
pub fn annihilates(c: &CoefficientVector, v: &ExactStateVector) -> bool {
    if c.qubits() != v.n {
        return false;
    }
    let flat = c.to_flat();
    let lcm = flat.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let scaled: Vec<BigInt> = flat.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    let cols = columns(v);
    (0..v.amp.len()).all(|x| {
        let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
        for (k, col) in cols.iter().enumerate() {
            if scaled[k].is_zero() {
                continue;
            }
            re += &scaled[k] * col[x].re;
            im += &scaled[k] * col[x].im;
        }
        re.is_zero() && im.is_zero()
    })
}

/// Rank over the rationals of a set of coefficient vectors.
pub fn coefficient_rank(vectors: &[CoefficientVector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let flats: Vec<Vec<BigRational>> = vectors.iter().map(CoefficientVector::to_flat).collect();
    let rows: Vec<Vec<i64>> = flats
        .iter()
        .map(|f| {
            let lcm = f.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            f.iter()
                .map(|q| {
                    i64::try_from(q.numer() * (&lcm / q.denom())).expect("coefficients fit in i64")
                })
                .collect()
        })
        .collect();
    exact::rank(&IntMatrix::from_rows(&rows))
}
