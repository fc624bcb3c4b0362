//! Fat point schemes Z = m_1 P_1 + ... + m_s P_s in P^{n_1} x ... x P^{n_k}:
//! representation, degree, factor projections, generic position checks, and
//! seeded random generation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::hilbert::HilbertTable;
use crate::linalg::FieldSpec;
use crate::ring::{binomial, dim_graded_piece, Multidegree, SpaceShape};
use crate::{Error, Result};

/// A point of the product, stored as one canonical integer coordinate vector
/// per factor: primitive (gcd 1) with positive leading nonzero entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoint {
    coords: Vec<Vec<i64>>,
}

impl MultiPoint {
    pub fn new(coords: Vec<Vec<i64>>) -> Result<Self> {
        let mut canon = Vec::with_capacity(coords.len());
        for (j, v) in coords.into_iter().enumerate() {
            canon.push(canonicalize(v).ok_or(Error::ZeroFactor(j))?);
        }
        Ok(MultiPoint { coords: canon })
    }

    pub fn coords(&self) -> &[Vec<i64>] {
        &self.coords
    }

    pub fn factor(&self, axis: usize) -> &[i64] {
        &self.coords[axis]
    }

    /// The image of the point under projection to one factor.
    pub fn project(&self, axis: usize) -> MultiPoint {
        MultiPoint {
            coords: vec![self.coords[axis].clone()],
        }
    }
}

fn canonicalize(mut v: Vec<i64>) -> Option<Vec<i64>> {
    let mut g: i64 = 0;
    for &c in &v {
        g = num_integer::gcd(g, c);
    }
    if g == 0 {
        return None;
    }
    for c in v.iter_mut() {
        *c /= g;
    }
    let lead = v.iter().find(|&&c| c != 0)?;
    if *lead < 0 {
        for c in v.iter_mut() {
            *c = -*c;
        }
    }
    Some(v)
}

/// Z = m_1 P_1 + ... + m_s P_s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FatPointScheme {
    shape: SpaceShape,
    points: Vec<(MultiPoint, u32)>,
}

/// Result of a box-bounded generic position check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenericityCheck {
    Generic,
    FailsAt(Multidegree),
}

impl FatPointScheme {
    pub fn new(shape: SpaceShape, points: Vec<(MultiPoint, u32)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyScheme);
        }
        for (p, m) in &points {
            if *m == 0 {
                return Err(Error::ZeroMultiplicity);
            }
            if p.coords.len() != shape.k() {
                return Err(Error::FactorCount {
                    expected: shape.k(),
                    found: p.coords.len(),
                });
            }
            for (j, v) in p.coords.iter().enumerate() {
                if v.len() != shape.factors()[j] + 1 {
                    return Err(Error::FactorLength {
                        factor: j,
                        expected: shape.factors()[j] + 1,
                        found: v.len(),
                    });
                }
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i].0 == points[j].0 {
                    return Err(Error::DuplicatePoint);
                }
            }
        }
        Ok(FatPointScheme { shape, points })
    }

    pub fn shape(&self) -> &SpaceShape {
        &self.shape
    }

    pub fn points(&self) -> &[(MultiPoint, u32)] {
        &self.points
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn multiplicities(&self) -> Vec<u32> {
        self.points.iter().map(|(_, m)| *m).collect()
    }

    /// Sum of the multiplicities; bounds every regularity search in this crate.
    pub fn sigma(&self) -> u32 {
        self.points.iter().map(|(_, m)| m).sum()
    }

    pub fn is_reduced(&self) -> bool {
        self.points.iter().all(|(_, m)| *m == 1)
    }

    /// The reduced scheme on the same support.
    pub fn support(&self) -> FatPointScheme {
        FatPointScheme {
            shape: self.shape.clone(),
            points: self.points.iter().map(|(p, _)| (p.clone(), 1)).collect(),
        }
    }

    /// deg Z = sum_i C(N + m_i - 1, m_i - 1); independent of point positions.
    pub fn degree(&self) -> u64 {
        let n = self.shape.total_dim() as u64;
        self.points
            .iter()
            .map(|(_, m)| binomial(n + *m as u64 - 1, *m as u64 - 1))
            .sum()
    }

    /// The image fat point scheme in P^{n_axis}.  Points sharing an image
    /// merge with the maximum multiplicity: the intersection of powers of a
    /// single prime is the largest power.
    pub fn project(&self, axis: usize) -> Result<FatPointScheme> {
        if axis >= self.shape.k() {
            return Err(Error::AxisOutOfRange {
                axis,
                k: self.shape.k(),
            });
        }
        let mut images: Vec<(MultiPoint, u32)> = Vec::new();
        for (p, m) in &self.points {
            let img = p.project(axis);
            match images.iter_mut().find(|(q, _)| *q == img) {
                Some((_, mm)) => *mm = (*mm).max(*m),
                None => images.push((img, *m)),
            }
        }
        FatPointScheme::new(self.shape.factor_shape(axis)?, images)
    }

    /// Box-bounded generic position check for reduced schemes: true iff
    /// H_Z(i) = min(dim R_i, s) for every i <= box componentwise.
    pub fn generic_position_check(
        &self,
        bound: &Multidegree,
        field: &FieldSpec,
    ) -> Result<GenericityCheck> {
        if !self.is_reduced() {
            return Err(Error::NonReduced);
        }
        if bound.k() != self.shape.k() || !bound.is_nonnegative() {
            return Err(Error::NegativeDegree(bound.0.clone()));
        }
        let s = self.num_points() as u64;
        let table = HilbertTable::new(self.clone(), *field);
        for d in box_iter(bound) {
            let expected = dim_graded_piece(&self.shape, &d)?.min(s);
            if table.value(&d)? != expected {
                return Ok(GenericityCheck::FailsAt(d));
            }
        }
        Ok(GenericityCheck::Generic)
    }
}

/// All multidegrees 0 <= d <= bound, in increasing lexicographic order.
pub fn box_iter(bound: &Multidegree) -> Vec<Multidegree> {
    let mut out = Vec::new();
    let mut current = vec![0i64; bound.k()];
    loop {
        out.push(Multidegree(current.clone()));
        let mut pos = bound.k();
        while pos > 0 {
            pos -= 1;
            if current[pos] < bound.0[pos] {
                current[pos] += 1;
                for c in current.iter_mut().skip(pos + 1) {
                    *c = 0;
                }
                break;
            }
            if pos == 0 {
                return out;
            }
        }
    }
}

/// Deterministic random scheme: coordinates uniform in [-10^6, 10^6],
/// factor vectors regenerated on collisions so every factor projection is
/// injective on the support.
pub fn random_scheme(
    shape: &SpaceShape,
    multiplicities: &[u32],
    seed: u64,
) -> Result<FatPointScheme> {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut points: Vec<MultiPoint> = Vec::with_capacity(multiplicities.len());
    for _ in multiplicities {
        let mut coords = Vec::with_capacity(shape.k());
        for (j, n) in shape.factors().iter().enumerate() {
            loop {
                let v: Vec<i64> = (0..n + 1)
                    .map(|_| rng.gen_range(-1_000_000..=1_000_000))
                    .collect();
                let canon = match canonicalize(v) {
                    Some(c) => c,
                    None => continue,
                };
                if points.iter().any(|p| p.factor(j) == canon.as_slice()) {
                    continue;
                }
                coords.push(canon);
                break;
            }
        }
        points.push(MultiPoint { coords });
    }
    FatPointScheme::new(
        shape.clone(),
        points
            .into_iter()
            .zip(multiplicities.iter().copied())
            .collect(),
    )
}
