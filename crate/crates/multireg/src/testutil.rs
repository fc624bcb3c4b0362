//! Shared fixtures for unit tests.

use crate::points::{FatPointScheme, MultiPoint};
use crate::ring::SpaceShape;

pub fn p1p1() -> SpaceShape {
    SpaceShape::new(vec![1, 1]).unwrap()
}

pub fn pt(coords: &[&[i64]]) -> MultiPoint {
    MultiPoint::new(coords.iter().map(|v| v.to_vec()).collect()).unwrap()
}

/// The 7 reduced points P_ij = [1:i] x [1:j], (i,j) in {11,12,13,21,22,31,33}.
pub fn seven_points() -> FatPointScheme {
    let pairs = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1), (3, 3)];
    let points = pairs
        .iter()
        .map(|&(i, j)| (pt(&[&[1, i], &[1, j]]), 1))
        .collect();
    FatPointScheme::new(p1p1(), points).unwrap()
}

/// Two reduced points [1:0]x[0:1] and [0:1]x[1:0] whose ideal is resolved by
/// a Koszul complex.
pub fn koszul_two_points() -> FatPointScheme {
    FatPointScheme::new(
        p1p1(),
        vec![(pt(&[&[1, 0], &[0, 1]]), 1), (pt(&[&[0, 1], &[1, 0]]), 1)],
    )
    .unwrap()
}

/// A single fat point mP at [1:0]x[1:0].
pub fn double_point(m: u32) -> FatPointScheme {
    FatPointScheme::new(p1p1(), vec![(pt(&[&[1, 0], &[1, 0]]), m)]).unwrap()
}
