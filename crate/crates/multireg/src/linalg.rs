//! Exact rank computation for dense matrices over Q (arbitrary precision)
//! or a prime field F_p with p > 2^30.
//!
//! Rational matrices are reduced with fraction-free (Bareiss) elimination
//! after clearing denominators row by row, so intermediate entries stay
//! integral and bounded by minors of the input.  Prime-field matrices use
//! ordinary elimination with modular inverses.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Internal prime used to certify full-rank rational matrices cheaply.
/// A nonvanishing minor mod p is nonzero over Z, so a modular rank equal to
/// min(rows, cols) is already the exact rational rank.
const CERT_PRIME: u64 = (1 << 61) - 1;

/// Which exact field the computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    /// The rationals; authoritative, arbitrary precision.
    Rational,
    /// F_p for a prime p > 2^30; fast, probabilistic for rank questions
    /// only in the sense that ranks can drop mod p.
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p <= (1 << 30) || !is_prime_u64(p) {
            return Err(Error::BadModulus(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn element_from_bigint(&self, v: &BigInt) -> FieldElement {
        match self {
            FieldSpec::Rational => FieldElement::Rational(BigRational::from_integer(v.clone())),
            FieldSpec::Prime(p) => FieldElement::Prime {
                value: reduce_bigint(v, *p),
                modulus: *p,
            },
        }
    }

    pub fn element_from_i64(&self, v: i64) -> FieldElement {
        self.element_from_bigint(&BigInt::from(v))
    }
}

/// An exact scalar: a reduced rational or a residue mod a prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldElement {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Prime { value, .. } => *value == 0,
        }
    }
}

/// A dense row-major matrix with entries from a single field.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

impl DenseMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<FieldElement>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                rows,
                cols,
                found: entries.len(),
            });
        }
        Ok(DenseMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from integer entries mapped into the given field.
    pub fn from_integers(
        rows: usize,
        cols: usize,
        entries: &[BigInt],
        field: &FieldSpec,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                rows,
                cols,
                found: entries.len(),
            });
        }
        let entries = entries
            .iter()
            .map(|v| field.element_from_bigint(v))
            .collect();
        Ok(DenseMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &FieldElement {
        &self.entries[i * self.cols + j]
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.entries[i * self.cols + j].clone());
            }
        }
        DenseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// The rank of the matrix over its field.  Pure and deterministic.
    pub fn rank(&self) -> Result<usize> {
        if self.rows == 0 || self.cols == 0 {
            return Ok(0);
        }
        match &self.entries[0] {
            FieldElement::Rational(_) => {
                let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(self.rows);
                for i in 0..self.rows {
                    let mut denom_lcm = BigInt::one();
                    for j in 0..self.cols {
                        match self.entry(i, j) {
                            FieldElement::Rational(r) => {
                                denom_lcm = denom_lcm.lcm(r.denom());
                            }
                            FieldElement::Prime { .. } => return Err(Error::MixedField),
                        }
                    }
                    let mut row = Vec::with_capacity(self.cols);
                    for j in 0..self.cols {
                        match self.entry(i, j) {
                            FieldElement::Rational(r) => {
                                row.push(r.numer() * (&denom_lcm / r.denom()));
                            }
                            FieldElement::Prime { .. } => return Err(Error::MixedField),
                        }
                    }
                    rows.push(row);
                }
                Ok(integer_rank(rows))
            }
            FieldElement::Prime { modulus, .. } => {
                let p = *modulus;
                let mut rows: Vec<Vec<u64>> = Vec::with_capacity(self.rows);
                for i in 0..self.rows {
                    let mut row = Vec::with_capacity(self.cols);
                    for j in 0..self.cols {
                        match self.entry(i, j) {
                            FieldElement::Prime { value, modulus } if *modulus == p => {
                                row.push(*value)
                            }
                            _ => return Err(Error::MixedField),
                        }
                    }
                    rows.push(row);
                }
                Ok(modular_rank(rows, p))
            }
        }
    }
}

/// Rank of an integer matrix over Q.
///
/// A modular elimination mod [`CERT_PRIME`] runs first; ranks never increase
/// under reduction mod p, so a modular rank of min(rows, cols) is exact.
/// Otherwise falls back to fraction-free Bareiss elimination.
pub fn integer_rank(rows: Vec<Vec<BigInt>>) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    let (nr, nc) = (rows.len(), rows[0].len());
    let modular: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|v| reduce_bigint(v, CERT_PRIME)).collect())
        .collect();
    let r = modular_rank(modular, CERT_PRIME);
    if r == nr.min(nc) {
        return r;
    }
    bareiss_rank(rows)
}

/// Fraction-free elimination; all divisions are exact by Sylvester's identity.
fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let nr = a.len();
    if nr == 0 {
        return 0;
    }
    let nc = a[0].len();
    // Eliminating over the shorter axis keeps the inner update loops small.
    if nc > nr {
        let mut t = vec![vec![BigInt::zero(); nr]; nc];
        for (i, row) in a.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                t[j][i] = v.clone();
            }
        }
        a = t;
    }
    let nr = a.len();
    let nc = a[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..nc {
        if rank == nr {
            break;
        }
        // First nonzero entry in column order; ties irrelevant over exact fields.
        let pivot = (rank..nr).find(|&i| !a[i][col].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => continue,
        };
        a.swap(rank, pivot);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                for v in row.iter_mut().skip(col + 1) {
                    *v = &(v.clone() * &pivot_row[col]) / &prev;
                }
            } else {
                for j in col + 1..nc {
                    row[j] = &(&row[j] * &pivot_row[col] - &row[col] * &pivot_row[j]) / &prev;
                }
                row[col] = BigInt::zero();
            }
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Gaussian elimination over F_p.
fn modular_rank(mut a: Vec<Vec<u64>>, p: u64) -> usize {
    let nr = a.len();
    if nr == 0 {
        return 0;
    }
    let nc = a[0].len();
    let mut rank = 0;
    for col in 0..nc {
        if rank == nr {
            break;
        }
        let pivot = (rank..nr).find(|&i| a[i][col] != 0);
        let pivot = match pivot {
            Some(q) => q,
            None => continue,
        };
        a.swap(rank, pivot);
        let inv = mod_inv(a[rank][col], p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let factor = mul_mod(row[col], inv, p);
            row[col] = 0;
            for j in col + 1..nc {
                if pivot_row[j] != 0 {
                    let sub = mul_mod(factor, pivot_row[j], p);
                    row[j] = if row[j] >= sub {
                        row[j] - sub
                    } else {
                        row[j] + p - sub
                    };
                }
            }
        }
        rank += 1;
    }
    rank
}

fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = v.mod_floor(&m);
    let (_, digits) = r.to_u64_digits();
    match digits.first() {
        Some(d) => *d,
        None => 0,
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
