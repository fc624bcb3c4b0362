//! Combinatorics of the N^k-graded coordinate ring of P^{n_1} x ... x P^{n_k}:
//! multidegrees, graded-piece dimensions, and monomial bases.

use crate::{Error, Result};

/// The product of projective spaces P^{n_1} x ... x P^{n_k}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceShape {
    factors: Vec<usize>,
}

impl SpaceShape {
    pub fn new(factors: Vec<usize>) -> Result<Self> {
        if factors.is_empty() || factors.contains(&0) {
            return Err(Error::InvalidShape);
        }
        Ok(SpaceShape { factors })
    }

    /// Number of projective factors k.
    pub fn k(&self) -> usize {
        self.factors.len()
    }

    /// The dimensions (n_1, ..., n_k).
    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    /// N = n_1 + ... + n_k, the dimension of the product as a variety.
    pub fn total_dim(&self) -> usize {
        self.factors.iter().sum()
    }

    /// Total variable count N + k of the coordinate ring.
    pub fn num_vars(&self) -> usize {
        self.total_dim() + self.k()
    }

    /// The single-factor shape of P^{n_axis}.
    pub fn factor_shape(&self, axis: usize) -> Result<SpaceShape> {
        if axis >= self.k() {
            return Err(Error::AxisOutOfRange { axis, k: self.k() });
        }
        SpaceShape::new(vec![self.factors[axis]])
    }
}

/// A grading index in Z^k (N^k in most contexts; negative coordinates are
/// allowed for shift arithmetic).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree(pub Vec<i64>);

impl Multidegree {
    pub fn zero(k: usize) -> Self {
        Multidegree(vec![0; k])
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Componentwise d <= other.
    pub fn le(&self, other: &Multidegree) -> bool {
        self.k() == other.k() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// d + e_j.
    pub fn plus_basis(&self, j: usize) -> Multidegree {
        let mut c = self.0.clone();
        c[j] += 1;
        Multidegree(c)
    }

    /// d - e_j, or None if the coordinate is already 0.
    pub fn minus_basis(&self, j: usize) -> Option<Multidegree> {
        if self.0[j] == 0 {
            return None;
        }
        let mut c = self.0.clone();
        c[j] -= 1;
        Some(Multidegree(c))
    }

    /// t * e_j in ambient dimension k.
    pub fn axis(k: usize, j: usize, t: i64) -> Multidegree {
        let mut c = vec![0; k];
        c[j] = t;
        Multidegree(c)
    }
}

impl std::fmt::Display for Multidegree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A monomial of the coordinate ring, stored as the concatenated exponent
/// vector (a_{1,0}, ..., a_{1,n_1}, ..., a_{k,0}, ..., a_{k,n_k}).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub exponents: Vec<u32>,
}

/// Binomial coefficient as u64; the arguments stay tiny in this crate.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// dim_k R_d = prod_j C(n_j + d_j, n_j).
pub fn dim_graded_piece(shape: &SpaceShape, d: &Multidegree) -> Result<u64> {
    check_degree(shape, d)?;
    let mut acc: u64 = 1;
    for (n, dj) in shape.factors().iter().zip(&d.0) {
        acc *= binomial(*n as u64 + *dj as u64, *n as u64);
    }
    Ok(acc)
}

/// All monomials of multidegree d, ordered lexicographically with earlier
/// variables larger (so x_0^d comes first).  This order is the column
/// indexing contract for condition matrices.
pub fn monomial_basis(shape: &SpaceShape, d: &Multidegree) -> Result<Vec<Monomial>> {
    check_degree(shape, d)?;
    let mut factor_blocks: Vec<Vec<Vec<u32>>> = Vec::with_capacity(shape.k());
    for (n, dj) in shape.factors().iter().zip(&d.0) {
        factor_blocks.push(compositions(*dj as u32, n + 1));
    }
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::with_capacity(shape.num_vars());
    cartesian(&factor_blocks, 0, &mut current, &mut out);
    Ok(out)
}

/// The N^1-degree of a multidegree: the sum of its coordinates.
pub fn coarsen(d: &Multidegree) -> i64 {
    d.0.iter().sum()
}

fn check_degree(shape: &SpaceShape, d: &Multidegree) -> Result<()> {
    if d.k() != shape.k() {
        return Err(Error::DegreeLength {
            expected: shape.k(),
            found: d.k(),
        });
    }
    if !d.is_nonnegative() {
        return Err(Error::NegativeDegree(d.0.clone()));
    }
    Ok(())
}

/// Exponent vectors of length `vars` summing to `total`, in descending
/// lexicographic order.
fn compositions(total: u32, vars: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; vars];
    fill(total, 0, &mut current, &mut out);
    out
}

fn fill(remaining: u32, pos: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if pos == current.len() - 1 {
        current[pos] = remaining;
        out.push(current.clone());
        return;
    }
    for v in (0..=remaining).rev() {
        current[pos] = v;
        fill(remaining - v, pos + 1, current, out);
    }
}

fn cartesian(
    blocks: &[Vec<Vec<u32>>],
    idx: usize,
    current: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if idx == blocks.len() {
        out.push(Monomial {
            exponents: current.clone(),
        });
        return;
    }
    for block in &blocks[idx] {
        let len = current.len();
        current.extend_from_slice(block);
        cartesian(blocks, idx + 1, current, out);
        current.truncate(len);
    }
}
