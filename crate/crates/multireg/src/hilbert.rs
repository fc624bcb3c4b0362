//! Multigraded Hilbert functions of fat point schemes via ranks of
//! derivative-condition (interpolation) matrices.
//!
//! A form F of multidegree d lies in (I_Z)_d exactly when all partial
//! derivatives of order < m_j of its dehomogenization vanish at each point
//! P_j (characteristic zero).  Each such Taylor condition is one linear
//! functional on the coefficient space of R_d, so H_Z(d) is the rank of the
//! matrix collecting them.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::linalg::{DenseMatrix, FieldSpec};
use crate::points::{box_iter, FatPointScheme};
use crate::ring::{monomial_basis, Monomial, Multidegree};
use crate::{Error, Result};

/// The interpolation matrix whose kernel is (I_Z)_d.
///
/// Rows are labeled by (point index, derivative multi-index over the N
/// affine chart variables, total order < m_j); columns by the monomials of
/// multidegree d in the fixed lexicographic order of
/// [`crate::ring::monomial_basis`].
pub struct ConditionMatrix {
    pub matrix: DenseMatrix,
    pub row_labels: Vec<(usize, Vec<u32>)>,
    pub col_monomials: Vec<Monomial>,
}

/// Builds the condition matrix of Z at multidegree d.
///
/// For each point the chart fixes, per factor, the coordinate of largest
/// absolute value; the remaining N variables are differentiated.  Entries
/// are evaluated on the integer representative of the point, which rescales
/// each row by a nonzero constant and so leaves the rank unchanged.
pub fn condition_matrix(
    z: &FatPointScheme,
    d: &Multidegree,
    field: &FieldSpec,
) -> Result<ConditionMatrix> {
    let shape = z.shape();
    let basis = monomial_basis(shape, d)?;
    let cols = basis.len();
    let num_vars = shape.num_vars();

    // Global variable offsets per factor.
    let mut offsets = Vec::with_capacity(shape.k());
    let mut off = 0;
    for n in shape.factors() {
        offsets.push(off);
        off += n + 1;
    }

    let mut entries: Vec<BigInt> = Vec::new();
    let mut row_labels = Vec::new();

    for (pt_idx, (point, mult)) in z.points().iter().enumerate() {
        // Chart: per factor, the coordinate of largest absolute value.
        let mut chart = vec![false; num_vars]; // true = chart variable, not differentiated
        let mut coord_of_var = vec![0i64; num_vars];
        for (j, v) in point.coords().iter().enumerate() {
            let mut best = 0usize;
            for (t, c) in v.iter().enumerate() {
                if c.abs() > v[best].abs() {
                    best = t;
                }
            }
            chart[offsets[j] + best] = true;
            for (t, c) in v.iter().enumerate() {
                coord_of_var[offsets[j] + t] = *c;
            }
        }
        let deriv_vars: Vec<usize> = (0..num_vars).filter(|&v| !chart[v]).collect();

        for alpha in derivative_orders(deriv_vars.len(), *mult) {
            // alpha is indexed over deriv_vars; spread to global positions.
            let mut alpha_global = vec![0u32; num_vars];
            for (slot, &var) in deriv_vars.iter().enumerate() {
                alpha_global[var] = alpha[slot];
            }
            for mono in &basis {
                entries.push(derivative_value(
                    &mono.exponents,
                    &alpha_global,
                    &coord_of_var,
                ));
            }
            row_labels.push((pt_idx, alpha));
        }
    }

    let rows = row_labels.len();
    debug_assert_eq!(rows as u64, z.degree());
    let matrix = DenseMatrix::from_integers(rows, cols, &entries, field)?;
    Ok(ConditionMatrix {
        matrix,
        row_labels,
        col_monomials: basis,
    })
}

/// Multi-indices over `vars` variables with total order < mult, ordered by
/// total order, then descending lexicographically.
fn derivative_orders(vars: usize, mult: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for order in 0..mult {
        let mut current = vec![0u32; vars];
        fill_exact(order, 0, &mut current, &mut out);
    }
    out
}

fn fill_exact(remaining: u32, pos: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(current.clone());
        return;
    }
    if current.is_empty() {
        if remaining == 0 {
            out.push(Vec::new());
        }
        return;
    }
    for v in (0..=remaining).rev() {
        current[pos] = v;
        fill_exact(remaining - v, pos + 1, current, out);
    }
}

/// d^alpha(x^b) evaluated at the point: prod falling(b_v, alpha_v) *
/// prod coord_v^(b_v - alpha_v), or zero when some b_v < alpha_v.
fn derivative_value(exponents: &[u32], alpha: &[u32], coords: &[i64]) -> BigInt {
    let mut acc = BigInt::one();
    for ((&b, &a), &c) in exponents.iter().zip(alpha).zip(coords) {
        if b < a {
            return BigInt::zero();
        }
        for t in 0..a {
            acc *= BigInt::from((b - t) as i64);
        }
        let rem = b - a;
        if rem > 0 {
            if c == 0 {
                return BigInt::zero();
            }
            acc *= BigInt::from(c).pow(rem);
        }
    }
    acc
}

/// Memoized multigraded Hilbert function of one scheme over one field.
///
/// Values for distinct multidegrees may be computed concurrently; repeated
/// computation of a key is idempotent, so duplicate work is accepted instead
/// of locking across the rank computation.
pub struct HilbertTable {
    scheme: FatPointScheme,
    field: FieldSpec,
    degree: u64,
    memo: RwLock<HashMap<Vec<i64>, u64>>,
}

impl HilbertTable {
    pub fn new(scheme: FatPointScheme, field: FieldSpec) -> Self {
        let degree = scheme.degree();
        HilbertTable {
            scheme,
            field,
            degree,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn scheme(&self) -> &FatPointScheme {
        &self.scheme
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// deg Z, the stabilized value of H_Z.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// H_Z(d) = rank of the condition matrix at d.
    pub fn value(&self, d: &Multidegree) -> Result<u64> {
        if let Some(v) = self.memo.read().unwrap().get(&d.0) {
            return Ok(*v);
        }
        let cm = condition_matrix(&self.scheme, d, &self.field)?;
        let v = cm.matrix.rank()? as u64;
        self.memo.write().unwrap().insert(d.0.clone(), v);
        Ok(v)
    }

    /// The full table of values for all d <= bound componentwise.
    pub fn box_values(&self, bound: &Multidegree) -> Result<HilbertBox> {
        let mut values = Vec::new();
        for d in box_iter(bound) {
            values.push(self.value(&d)?);
        }
        Ok(HilbertBox {
            bound: bound.clone(),
            values,
        })
    }

    /// The coarse (N^1-graded) Hilbert function
    /// H(t) = sum over |d| = t of H_Z(d).
    pub fn coarse(&self, t: i64) -> Result<u64> {
        if t < 0 {
            return Err(Error::NegativeDegree(vec![t]));
        }
        let k = self.scheme.shape().k();
        let mut total = 0u64;
        for d in slice_iter(t, k) {
            total += self.value(&d)?;
        }
        Ok(total)
    }

    /// First difference of H_Z over a box; k = 2 only.
    /// Delta H(i,j) = H(i,j) - H(i-1,j) - H(i,j-1) + H(i-1,j-1), with H = 0
    /// at negative coordinates.
    pub fn first_difference(&self, bound: &Multidegree) -> Result<Vec<Vec<i64>>> {
        if self.scheme.shape().k() != 2 || bound.k() != 2 {
            return Err(Error::UnsupportedShape {
                expected: "k = 2",
                found: format!("k = {}", self.scheme.shape().k()),
            });
        }
        let h = |i: i64, j: i64| -> Result<i64> {
            if i < 0 || j < 0 {
                return Ok(0);
            }
            Ok(self.value(&Multidegree(vec![i, j]))? as i64)
        };
        let mut out = Vec::new();
        for i in 0..=bound.0[0] {
            let mut row = Vec::new();
            for j in 0..=bound.0[1] {
                row.push(h(i, j)? - h(i - 1, j)? - h(i, j - 1)? + h(i - 1, j - 1)?);
            }
            out.push(row);
        }
        Ok(out)
    }
}

/// Values of H_Z over a box [0, bound], stored in lexicographic cell order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertBox {
    bound: Multidegree,
    values: Vec<u64>,
}

impl HilbertBox {
    pub fn bound(&self) -> &Multidegree {
        &self.bound
    }

    pub fn get(&self, d: &Multidegree) -> Option<u64> {
        if !d.is_nonnegative() || !d.le(&self.bound) {
            return None;
        }
        let mut idx = 0usize;
        for (c, b) in d.0.iter().zip(&self.bound.0) {
            idx = idx * (*b as usize + 1) + *c as usize;
        }
        Some(self.values[idx])
    }

    /// k = 2 rendering: entry (i, j) at row i, column j (first coordinate is
    /// the row index).
    pub fn as_matrix(&self) -> Option<Vec<Vec<u64>>> {
        if self.bound.k() != 2 {
            return None;
        }
        let (bi, bj) = (self.bound.0[0], self.bound.0[1]);
        let mut out = Vec::new();
        for i in 0..=bi {
            let mut row = Vec::new();
            for j in 0..=bj {
                row.push(self.get(&Multidegree(vec![i, j])).unwrap());
            }
            out.push(row);
        }
        Some(out)
    }

    /// CSV export.  For k = 2 a matrix with a header row and column of
    /// degree indices; otherwise one line per cell: d1,...,dk,value.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        if let Some(m) = self.as_matrix() {
            s.push_str(
                &(0..=self.bound.0[1])
                    .map(|j| format!(",{j}"))
                    .collect::<String>(),
            );
            s.push('\n');
            for (i, row) in m.iter().enumerate() {
                s.push_str(&i.to_string());
                for v in row {
                    s.push(',');
                    s.push_str(&v.to_string());
                }
                s.push('\n');
            }
        } else {
            for d in box_iter(&self.bound) {
                for c in &d.0 {
                    s.push_str(&c.to_string());
                    s.push(',');
                }
                s.push_str(&self.get(&d).unwrap().to_string());
                s.push('\n');
            }
        }
        s
    }
}

/// All d in N^k with |d| = t, in increasing lexicographic order.
pub fn slice_iter(t: i64, k: usize) -> Vec<Multidegree> {
    let mut out = Vec::new();
    let mut current = vec![0i64; k];
    slice_fill(t, 0, &mut current, &mut out);
    out
}

fn slice_fill(remaining: i64, pos: usize, current: &mut Vec<i64>, out: &mut Vec<Multidegree>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(Multidegree(current.clone()));
        return;
    }
    for v in 0..=remaining {
        current[pos] = v;
        slice_fill(remaining - v, pos + 1, current, out);
    }
}
