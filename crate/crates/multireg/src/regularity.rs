//! Regularity regions and bounds for fat point schemes: reg_B(Z) as an
//! up-set of N^k via the Hilbert-function criterion H_Z(d) = deg Z, the
//! resolution regularity vector via factor projections, closed-form bound
//! regions, and the P^1 x P^1 ACM first-difference criterion.

use std::collections::HashMap;

use crate::hilbert::{slice_iter, HilbertTable};
use crate::linalg::FieldSpec;
use crate::points::{box_iter, FatPointScheme};
use crate::ring::{binomial, Multidegree};
use crate::{Error, Result};

/// A subset of N^k closed under adding standard basis vectors, represented
/// by the finite antichain of its minimal elements ("corners").
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpSet {
    k: usize,
    corners: Vec<Multidegree>,
}

impl UpSet {
    /// Builds the up-set generated by the given elements: dominated
    /// generators are dropped and the antichain is sorted lexicographically.
    pub fn from_corners(k: usize, corners: Vec<Multidegree>) -> Result<Self> {
        for c in &corners {
            if c.k() != k {
                return Err(Error::DegreeLength {
                    expected: k,
                    found: c.k(),
                });
            }
            if !c.is_nonnegative() {
                return Err(Error::NegativeDegree(c.0.clone()));
            }
        }
        let mut minimal: Vec<Multidegree> = Vec::new();
        for c in corners {
            if minimal.iter().any(|m| m.le(&c)) {
                continue;
            }
            minimal.retain(|m| !c.le(m));
            minimal.push(c);
        }
        minimal.sort();
        Ok(UpSet {
            k,
            corners: minimal,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn corners(&self) -> &[Multidegree] {
        &self.corners
    }

    /// Membership: some corner is componentwise <= d.
    pub fn contains(&self, d: &Multidegree) -> bool {
        self.corners.iter().any(|c| c.le(d))
    }

    /// Up-set inclusion: every corner of self lies in other.
    pub fn subset_of(&self, other: &UpSet) -> bool {
        self.corners.iter().all(|c| other.contains(c))
    }

    /// Human-readable rendering as a union of shifted positive orthants.
    pub fn render(&self) -> String {
        self.corners
            .iter()
            .map(|c| format!("{c} + N^{}", self.k))
            .collect::<Vec<_>>()
            .join(" u ")
    }
}

/// Componentwise syzygy degree bounds; for fat points the vector of
/// regularities of the factor projections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionRegularityVector(pub Multidegree);

/// d is in reg_B(Z) iff H_Z(d) = deg Z.
pub fn membership(table: &HilbertTable, d: &Multidegree) -> Result<bool> {
    Ok(table.value(d)? == table.degree())
}

/// Membership flags over the box [0, bound], cell keyed by coordinates.
/// Membership is upward closed, so a cell with a member predecessor is a
/// member without computing its rank.
fn member_box(table: &HilbertTable, bound: &Multidegree) -> Result<HashMap<Vec<i64>, bool>> {
    let k = bound.k();
    let mut members: HashMap<Vec<i64>, bool> = HashMap::new();
    for d in box_iter(bound) {
        let inherited = (0..k)
            .filter_map(|j| d.minus_basis(j))
            .any(|prev| members[&prev.0]);
        let is_member = inherited || membership(table, &d)?;
        members.insert(d.0.clone(), is_member);
    }
    Ok(members)
}

/// The corners of reg_B(Z) = {d in N^k : H_Z(d) = deg Z}, computed exactly
/// within [0, sigma]^k, sigma = sum of multiplicities.  Correctness outside
/// the box follows from monotonicity together with the inclusion of
/// (sigma-1, ..., sigma-1) + N^k in the region.
pub fn reg_region(table: &HilbertTable) -> Result<UpSet> {
    let k = table.scheme().shape().k();
    let sigma = table.scheme().sigma() as i64;
    let bound = Multidegree(vec![sigma; k]);
    let members = member_box(table, &bound)?;
    let mut corners = Vec::new();
    for d in box_iter(&bound) {
        if !members[&d.0] {
            continue;
        }
        let has_member_pred = (0..k)
            .filter_map(|j| d.minus_basis(j))
            .any(|prev| members[&prev.0]);
        if !has_member_pred {
            corners.push(d);
        }
    }
    UpSet::from_corners(k, corners)
}

/// The regularity of the projection Z_axis in P^{n_axis}: the least t with
/// H_{Z_axis}(t) = deg Z_axis.  Terminates by t = sigma of the projection.
pub fn proj_regularity(z: &FatPointScheme, axis: usize, field: &FieldSpec) -> Result<i64> {
    let proj = z.project(axis)?;
    let table = HilbertTable::new(proj.clone(), *field);
    let target = proj.degree();
    let limit = proj.sigma() as i64;
    for t in 0..=limit {
        if table.value(&Multidegree(vec![t]))? == target {
            return Ok(t);
        }
    }
    Err(Error::Internal(format!(
        "projection Hilbert function did not stabilize by t = {limit}"
    )))
}

/// r(R/I_Z) = (reg(Z_1), ..., reg(Z_k)).
pub fn res_reg_vector(z: &FatPointScheme, field: &FieldSpec) -> Result<ResolutionRegularityVector> {
    let mut coords = Vec::with_capacity(z.shape().k());
    for axis in 0..z.shape().k() {
        coords.push(proj_regularity(z, axis, field)?);
    }
    Ok(ResolutionRegularityVector(Multidegree(coords)))
}

/// The region guaranteed by a resolution regularity vector p and
/// m = min(N+1, projective dimension): the union over a with |a| = m-1 of
/// p + m*1 - a + N^k.  For m = 0 the union is empty and the region
/// degenerates to p + N^k.
pub fn region_from_resvector(p: &Multidegree, m: u32, k: usize) -> Result<UpSet> {
    if p.k() != k {
        return Err(Error::DegreeLength {
            expected: k,
            found: p.k(),
        });
    }
    if m == 0 {
        return UpSet::from_corners(k, vec![p.clone()]);
    }
    let mut corners = Vec::new();
    for a in slice_iter(m as i64 - 1, k) {
        let coords =
            p.0.iter()
                .zip(&a.0)
                .map(|(pi, ai)| pi + m as i64 - ai)
                .collect();
        corners.push(Multidegree(coords));
    }
    UpSet::from_corners(k, corners)
}

/// The region guaranteed by an N^1-regularity bound reg(M) <= r:
/// corners (r+m)*1 - a over |a| = m-1.
pub fn coarse_bound_region(r: i64, m: u32, k: usize) -> Result<UpSet> {
    region_from_resvector(&Multidegree(vec![r; k]), m, k)
}

/// The two multiplicity-only lower bounds on reg_B(Z):
/// the corner (sigma-1, ..., sigma-1), and for generic support the corner
/// (l_1, ..., l_k) with l_i = max(m1+m2+1, ceil((sigma+n_i-2)/n_i)).
pub fn davis_geramita_bounds(
    z: &FatPointScheme,
    generic_support: bool,
) -> Result<(UpSet, Option<UpSet>)> {
    let k = z.shape().k();
    let sigma = z.sigma() as i64;
    let first = UpSet::from_corners(k, vec![Multidegree(vec![sigma - 1; k])])?;
    if !generic_support {
        return Ok((first, None));
    }
    let mut mults = z.multiplicities();
    mults.sort_unstable_by(|a, b| b.cmp(a));
    let m1 = mults[0] as i64;
    let m2 = mults.get(1).copied().unwrap_or(0) as i64;
    let corner = Multidegree(
        z.shape()
            .factors()
            .iter()
            .map(|&n| {
                let n = n as i64;
                (m1 + m2 + 1).max((sigma + n - 2 + n - 1) / n)
            })
            .collect(),
    );
    let second = UpSet::from_corners(k, vec![corner])?;
    Ok((first, Some(second)))
}

/// The region guaranteed for fat points in P^1 x P^1 with generic support:
/// {(i,j) >= (m1-1, m1-1), i+j >= max(sigma-1, 2*m1-2)}, as corners on the
/// diagonal i+j = l.
pub fn p1xp1_generic_region(multiplicities: &[u32]) -> Result<UpSet> {
    if multiplicities.is_empty() {
        return Err(Error::EmptyScheme);
    }
    let mut mults = multiplicities.to_vec();
    mults.sort_unstable_by(|a, b| b.cmp(a));
    let m1 = mults[0] as i64;
    let sigma: i64 = mults.iter().map(|&m| m as i64).sum();
    let l = (sigma - 1).max(2 * m1 - 2);
    let corners = (m1 - 1..=l - (m1 - 1))
        .map(|i| Multidegree(vec![i, l - i]))
        .collect();
    UpSet::from_corners(2, corners)
}

/// The stabilized values c_0, ..., c_{m1-1} of the rows and columns of the
/// Hilbert matrix of a generic-support scheme in P^1 x P^1:
/// c_j = sum_i [m_i + (m_i-1)_+ + ... + (m_i-j)_+].  The last entry is deg Z.
pub fn eventual_values(multiplicities: &[u32]) -> Vec<u64> {
    let mut mults = multiplicities.to_vec();
    mults.sort_unstable_by(|a, b| b.cmp(a));
    let m1 = mults[0] as i64;
    (0..m1)
        .map(|j| {
            mults
                .iter()
                .map(|&m| (0..=j).map(|t| (m as i64 - t).max(0) as u64).sum::<u64>())
                .sum()
        })
        .collect()
}

/// The N^1 Hilbert polynomial of a generic-support scheme in P^1 x P^1,
/// HP(t) = sum_i C(m_i+1, 2) * (3t - 2m_i + 5) / 3, evaluated exactly.
pub fn hilbert_polynomial_p1xp1(multiplicities: &[u32], t: i64) -> Result<i64> {
    let mut total: i64 = 0;
    for &m in multiplicities {
        let c = binomial(m as u64 + 1, 2) as i64;
        total += c * (3 * t - 2 * m as i64 + 5);
    }
    if total % 3 != 0 {
        return Err(Error::Internal(format!(
            "Hilbert polynomial value {total}/3 is not an integer"
        )));
    }
    Ok(total / 3)
}

/// Why a first-difference table rules out the ACM property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AcmObstruction {
    /// Delta H takes a value outside {0, 1}.
    ValueOutOfRange(i64),
    /// The support of Delta H is not a downset of N^2.
    SupportNotDownset,
    /// Delta H is nonzero on the outer rim of the search box, so the
    /// quotient it would define is not Artinian.
    BoundarySupport,
}

/// Verdict of the P^1 x P^1 first-difference criterion.  "Consistent" rather
/// than "ACM": the test is a necessary condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AcmVerdict {
    AcmConsistent,
    NotAcm {
        witness: (i64, i64),
        obstruction: AcmObstruction,
    },
}

/// First-difference ACM criterion for shape (1,1): the first difference of
/// H_Z must look like the Hilbert function of an N^2-graded Artinian quotient
/// of a polynomial ring in two variables, i.e. a {0,1}-valued function with
/// finite downset support.
pub fn acm_check_p1xp1(table: &HilbertTable) -> Result<AcmVerdict> {
    let shape = table.scheme().shape();
    if shape.factors() != [1, 1] {
        return Err(Error::UnsupportedShape {
            expected: "(1,1)",
            found: format!("{:?}", shape.factors()),
        });
    }
    let sigma = table.scheme().sigma() as i64;
    let dh = table.first_difference(&Multidegree(vec![sigma, sigma]))?;
    for (i, row) in dh.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v != 0 && v != 1 {
                return Ok(AcmVerdict::NotAcm {
                    witness: (i as i64, j as i64),
                    obstruction: AcmObstruction::ValueOutOfRange(v),
                });
            }
        }
    }
    for (i, row) in dh.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v == 0 {
                continue;
            }
            if i as i64 == sigma || j as i64 == sigma {
                return Ok(AcmVerdict::NotAcm {
                    witness: (i as i64, j as i64),
                    obstruction: AcmObstruction::BoundarySupport,
                });
            }
            if (i > 0 && dh[i - 1][j] == 0) || (j > 0 && dh[i][j - 1] == 0) {
                return Ok(AcmVerdict::NotAcm {
                    witness: (i as i64, j as i64),
                    obstruction: AcmObstruction::SupportNotDownset,
                });
            }
        }
    }
    Ok(AcmVerdict::AcmConsistent)
}

/// Cross-check of the ACM equality theorem on one scheme in P^1 x P^1.
#[derive(Debug, Clone)]
pub struct AcmEqualityReport {
    pub verdict: AcmVerdict,
    pub res_vector: Multidegree,
    pub region: UpSet,
    /// r(R/I_Z) is always a member of reg_B(Z).
    pub inclusion_holds: bool,
    /// reg_B(Z) has the single corner r(R/I_Z).  Implied when the scheme is
    /// ACM; can also hold for non-ACM schemes (the converse fails).
    pub equality_holds: bool,
}

/// Computes the region, the resolution regularity vector, and the ACM
/// verdict, and reports how they relate.  If the verdict is ACM-consistent
/// the corners must be exactly {r}; the inclusion must hold in every case.
pub fn verify_acm_equality(table: &HilbertTable) -> Result<AcmEqualityReport> {
    let verdict = acm_check_p1xp1(table)?;
    let r = res_reg_vector(table.scheme(), table.field())?.0;
    let region = reg_region(table)?;
    let inclusion_holds = membership(table, &r)?;
    let equality_holds = region.corners() == [r.clone()];
    Ok(AcmEqualityReport {
        verdict,
        res_vector: r,
        region,
        inclusion_holds,
        equality_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::points::{random_scheme, FatPointScheme};
    use crate::ring::SpaceShape;
    use crate::testutil::{double_point, koszul_two_points, p1p1, pt, seven_points};

    fn md(c: &[i64]) -> Multidegree {
        Multidegree(c.to_vec())
    }

    fn table(z: &FatPointScheme) -> HilbertTable {
        HilbertTable::new(z.clone(), FieldSpec::Rational)
    }

    /// Independent oracle for reg_region: exhaustive membership over the box
    /// (each cell computed from a fresh condition matrix, no inheritance)
    /// followed by pairwise minimal-element extraction.
    fn brute_force_region(z: &FatPointScheme, bound: &Multidegree) -> Vec<Multidegree> {
        let deg = z.degree();
        let mut members = Vec::new();
        for d in box_iter(bound) {
            let cm = crate::hilbert::condition_matrix(z, &d, &FieldSpec::Rational).unwrap();
            if cm.matrix.rank().unwrap() as u64 == deg {
                members.push(d);
            }
        }
        let minimal: Vec<Multidegree> = members
            .iter()
            .filter(|d| !members.iter().any(|e| *e != **d && e.le(d)))
            .cloned()
            .collect();
        minimal
    }

    #[test]
    fn upset_canonicalization() {
        let u = UpSet::from_corners(2, vec![md(&[2, 2]), md(&[3, 3]), md(&[0, 5]), md(&[2, 2])])
            .unwrap();
        assert_eq!(u.corners(), &[md(&[0, 5]), md(&[2, 2])]);
        assert!(u.contains(&md(&[2, 2])));
        assert!(u.contains(&md(&[7, 2])));
        assert!(!u.contains(&md(&[1, 4])));
    }

    #[test]
    fn upset_membership_is_monotone() {
        let u = UpSet::from_corners(2, vec![md(&[1, 2]), md(&[3, 0])]).unwrap();
        for d in box_iter(&md(&[5, 5])) {
            if u.contains(&d) {
                for j in 0..2 {
                    assert!(u.contains(&d.plus_basis(j)));
                }
            }
        }
    }

    #[test]
    fn membership_examples() {
        let t7 = table(&seven_points());
        assert!(membership(&t7, &md(&[2, 2])).unwrap());
        assert!(!membership(&t7, &md(&[2, 1])).unwrap());

        let t2p = table(&double_point(2));
        assert!(membership(&t2p, &md(&[1, 1])).unwrap());
        assert!(!membership(&t2p, &md(&[0, 1])).unwrap());

        // any scheme is a member at (sigma, ..., sigma)
        let z = random_scheme(&p1p1(), &[2, 1], 9).unwrap();
        let s = z.sigma() as i64;
        assert!(membership(&table(&z), &md(&[s, s])).unwrap());
    }

    #[test]
    fn reg_region_seven_points_matches_oracle() {
        let z = seven_points();
        let oracle = brute_force_region(&z, &md(&[7, 7]));
        let region = reg_region(&table(&z)).unwrap();
        assert_eq!(region.corners(), oracle.as_slice());
        // Axis corners are impossible: H(t,0) is capped by the first
        // projection's degree, 3 < 7.
        assert_eq!(region.corners(), &[md(&[2, 2])]);
    }

    #[test]
    fn reg_region_single_fat_point() {
        for m in 1..=3u32 {
            let z = double_point(m);
            let region = reg_region(&table(&z)).unwrap();
            assert_eq!(region.corners(), &[md(&[m as i64 - 1, m as i64 - 1])]);
        }
    }

    #[test]
    fn reg_region_koszul_points() {
        let z = koszul_two_points();
        let region = reg_region(&table(&z)).unwrap();
        assert_eq!(region.corners(), &[md(&[0, 1]), md(&[1, 0])]);
        assert_eq!(
            region.corners(),
            brute_force_region(&z, &md(&[2, 2])).as_slice()
        );
    }

    #[test]
    fn proj_regularity_examples() {
        let field = FieldSpec::Rational;
        assert_eq!(proj_regularity(&koszul_two_points(), 0, &field).unwrap(), 1);

        // single image point of multiplicity 3: H = 1,2,3,3,... so reg = 2
        let z = FatPointScheme::new(p1p1(), vec![(pt(&[&[1, 0], &[1, 0]]), 3)]).unwrap();
        assert_eq!(proj_regularity(&z, 0, &field).unwrap(), 2);

        // seven points project to 3 distinct points in P^1
        assert_eq!(proj_regularity(&seven_points(), 0, &field).unwrap(), 2);
    }

    #[test]
    fn res_reg_vector_examples() {
        let field = FieldSpec::Rational;
        assert_eq!(
            res_reg_vector(&koszul_two_points(), &field).unwrap().0,
            md(&[1, 1])
        );
        assert_eq!(
            res_reg_vector(&seven_points(), &field).unwrap().0,
            md(&[2, 2])
        );
        for m in 1..=3u32 {
            let v = res_reg_vector(&double_point(m), &field).unwrap().0;
            assert_eq!(v, md(&[m as i64 - 1, m as i64 - 1]));
        }
    }

    #[test]
    fn region_from_resvector_examples() {
        let u = region_from_resvector(&md(&[3]), 2, 1).unwrap();
        assert_eq!(u.corners(), &[md(&[4])]);

        let u = region_from_resvector(&md(&[0, 0]), 2, 2).unwrap();
        assert_eq!(u.corners(), &[md(&[1, 2]), md(&[2, 1])]);

        let u = region_from_resvector(&md(&[1, 0]), 3, 2).unwrap();
        assert_eq!(u.corners(), &[md(&[2, 3]), md(&[3, 2]), md(&[4, 1])]);

        let u = region_from_resvector(&md(&[2, 5]), 0, 2).unwrap();
        assert_eq!(u.corners(), &[md(&[2, 5])]);
    }

    #[test]
    fn coarse_bound_region_examples() {
        let u = coarse_bound_region(1, 2, 2).unwrap();
        assert_eq!(u.corners(), &[md(&[2, 3]), md(&[3, 2])]);

        let u = coarse_bound_region(2, 1, 1).unwrap();
        assert_eq!(u.corners(), &[md(&[3])]);

        let u = coarse_bound_region(4, 0, 2).unwrap();
        assert_eq!(u.corners(), &[md(&[4, 4])]);
    }

    #[test]
    fn davis_geramita_examples() {
        // multiplicities (2,1,1) in P^1 x P^1
        let z = random_scheme(&p1p1(), &[2, 1, 1], 2).unwrap();
        let (first, second) = davis_geramita_bounds(&z, true).unwrap();
        assert_eq!(first.corners(), &[md(&[3, 3])]);
        assert_eq!(second.unwrap().corners(), &[md(&[4, 4])]);

        // 5 reduced points in P^2 x P^2: l_i = max(3, ceil(5/2)) = 3
        let p2p2 = SpaceShape::new(vec![2, 2]).unwrap();
        let z = random_scheme(&p2p2, &[1; 5], 2).unwrap();
        let (first, second) = davis_geramita_bounds(&z, true).unwrap();
        assert_eq!(first.corners(), &[md(&[4, 4])]);
        assert_eq!(second.unwrap().corners(), &[md(&[3, 3])]);
    }

    #[test]
    fn p1xp1_generic_region_examples() {
        let u = p1xp1_generic_region(&[1, 1, 1]).unwrap();
        assert_eq!(u.corners(), &[md(&[0, 2]), md(&[1, 1]), md(&[2, 0])]);

        let u = p1xp1_generic_region(&[2, 1, 1]).unwrap();
        assert_eq!(u.corners(), &[md(&[1, 2]), md(&[2, 1])]);

        let u = p1xp1_generic_region(&[3]).unwrap();
        assert_eq!(u.corners(), &[md(&[2, 2])]);
    }

    #[test]
    fn eventual_values_examples() {
        assert_eq!(eventual_values(&[2, 1, 1]), vec![4, 5]);
        assert_eq!(eventual_values(&[1; 6]), vec![6]);
        assert_eq!(eventual_values(&[3, 2]), vec![5, 8, 9]);
    }

    #[test]
    fn hilbert_polynomial_examples() {
        for s in 1..=4u32 {
            for t in 0..6 {
                let mults = vec![1u32; s as usize];
                assert_eq!(
                    hilbert_polynomial_p1xp1(&mults, t).unwrap(),
                    s as i64 * (t + 1)
                );
            }
        }
        assert_eq!(hilbert_polynomial_p1xp1(&[2], 2).unwrap(), 7);
        assert_eq!(hilbert_polynomial_p1xp1(&[2, 1, 1], 3).unwrap(), 18);
    }

    #[test]
    fn acm_check_seven_points() {
        let verdict = acm_check_p1xp1(&table(&seven_points())).unwrap();
        assert_eq!(
            verdict,
            AcmVerdict::NotAcm {
                witness: (2, 2),
                obstruction: AcmObstruction::ValueOutOfRange(-1),
            }
        );
    }

    #[test]
    fn acm_check_single_point() {
        let z = FatPointScheme::new(p1p1(), vec![(pt(&[&[1, 3], &[2, 1]]), 1)]).unwrap();
        assert_eq!(
            acm_check_p1xp1(&table(&z)).unwrap(),
            AcmVerdict::AcmConsistent
        );
    }

    #[test]
    fn acm_check_l_shape() {
        // Three points in an L configuration; the first difference table is
        // {0,1}-valued with downset support, and the region corner equals r.
        let z = FatPointScheme::new(
            p1p1(),
            vec![
                (pt(&[&[1, 0], &[1, 0]]), 1),
                (pt(&[&[1, 0], &[0, 1]]), 1),
                (pt(&[&[0, 1], &[1, 0]]), 1),
            ],
        )
        .unwrap();
        let t = table(&z);
        assert_eq!(acm_check_p1xp1(&t).unwrap(), AcmVerdict::AcmConsistent);
        let report = verify_acm_equality(&t).unwrap();
        assert_eq!(report.res_vector, md(&[1, 1]));
        assert!(report.inclusion_holds);
        assert!(report.equality_holds);
    }

    #[test]
    fn acm_check_rejects_other_shapes() {
        let p2p1 = SpaceShape::new(vec![2, 1]).unwrap();
        let z = random_scheme(&p2p1, &[1, 1], 0).unwrap();
        assert!(acm_check_p1xp1(&table(&z)).is_err());
    }

    #[test]
    fn verify_acm_equality_seven_points() {
        // Equality holds, yet the scheme is not
        // ACM, so the converse of the equality theorem fails.
        let report = verify_acm_equality(&table(&seven_points())).unwrap();
        assert!(matches!(
            report.verdict,
            AcmVerdict::NotAcm {
                witness: (2, 2),
                ..
            }
        ));
        assert!(report.inclusion_holds);
        assert!(report.equality_holds);
        assert_eq!(report.region.corners(), &[md(&[2, 2])]);
    }

    #[test]
    fn verify_acm_equality_single_fat_point() {
        for m in 1..=3u32 {
            let report = verify_acm_equality(&table(&double_point(m))).unwrap();
            assert_eq!(report.verdict, AcmVerdict::AcmConsistent);
            assert!(report.equality_holds);
        }
    }

    #[test]
    fn lower_bound_inclusion_on_random_schemes() {
        for seed in 0..8u64 {
            let z = random_scheme(&p1p1(), &[2, 1], seed).unwrap();
            let t = table(&z);
            let r = res_reg_vector(&z, &FieldSpec::Rational).unwrap().0;
            assert!(membership(&t, &r).unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn bound_nesting_on_random_schemes() {
        for seed in 0..4u64 {
            let z = random_scheme(&p1p1(), &[2, 1], seed).unwrap();
            let t = table(&z);
            let region = reg_region(&t).unwrap();
            let (first, second) = davis_geramita_bounds(&z, true).unwrap();
            assert!(first.subset_of(&region), "seed {seed}");
            assert!(second.unwrap().subset_of(&region), "seed {seed}");
            // section-2 constructor with p = r, m' = N+1
            let r = res_reg_vector(&z, &FieldSpec::Rational).unwrap().0;
            let n = z.shape().total_dim() as u32;
            let u = region_from_resvector(&r, n + 1, 2).unwrap();
            assert!(u.subset_of(&region), "seed {seed}");
        }
    }
}
