//! Shared fixtures for the integration suites.

#![allow(dead_code)]

use multireg::points::{FatPointScheme, MultiPoint};
use multireg::ring::SpaceShape;

pub fn shape(factors: &[usize]) -> SpaceShape {
    SpaceShape::new(factors.to_vec()).unwrap()
}

pub fn pt(coords: &[&[i64]]) -> MultiPoint {
    MultiPoint::new(coords.iter().map(|v| v.to_vec()).collect()).unwrap()
}

/// The 7 reduced points [1:i] x [1:j], (i,j) in {11,12,13,21,22,31,33}.
pub fn seven_points() -> FatPointScheme {
    let pairs = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1), (3, 3)];
    let points = pairs
        .iter()
        .map(|&(i, j)| (pt(&[&[1, i], &[1, j]]), 1))
        .collect();
    FatPointScheme::new(shape(&[1, 1]), points).unwrap()
}

/// Two reduced points [1:0]x[0:1] and [0:1]x[1:0].
pub fn koszul_two_points() -> FatPointScheme {
    FatPointScheme::new(
        shape(&[1, 1]),
        vec![(pt(&[&[1, 0], &[0, 1]]), 1), (pt(&[&[0, 1], &[1, 0]]), 1)],
    )
    .unwrap()
}

/// A single fat point mP at the all-[1:0] point of the given shape.
pub fn fat_point(factors: &[usize], m: u32) -> FatPointScheme {
    let coords: Vec<Vec<i64>> = factors
        .iter()
        .map(|&n| {
            let mut v = vec![0i64; n + 1];
            v[0] = 1;
            v
        })
        .collect();
    FatPointScheme::new(shape(factors), vec![(MultiPoint::new(coords).unwrap(), m)]).unwrap()
}

/// An a x b grid of points [1:i] x [1:j]; a complete intersection, hence ACM.
pub fn grid(a: i64, b: i64) -> FatPointScheme {
    let mut points = Vec::new();
    for i in 0..a {
        for j in 0..b {
            points.push((pt(&[&[1, i], &[1, j]]), 1));
        }
    }
    FatPointScheme::new(shape(&[1, 1]), points).unwrap()
}

pub const SEVEN_POINT_JSON: &str = r#"{
  "spaces": [1, 1],
  "points": [
    {"coords": [[1, 1], [1, 1]], "mult": 1},
    {"coords": [[1, 1], [1, 2]], "mult": 1},
    {"coords": [[1, 1], [1, 3]], "mult": 1},
    {"coords": [[1, 2], [1, 1]], "mult": 1},
    {"coords": [[1, 2], [1, 2]], "mult": 1},
    {"coords": [[1, 3], [1, 1]], "mult": 1},
    {"coords": [[1, 3], [1, 3]], "mult": 1}
  ]
}"#;

pub const KOSZUL_JSON: &str = r#"{
  "spaces": [1, 1],
  "points": [
    {"coords": [[1, 0], [0, 1]], "mult": 1},
    {"coords": [[0, 1], [1, 0]], "mult": 1}
  ]
}"#;

pub const TRIPLE_POINT_JSON: &str = r#"{
  "spaces": [1, 1],
  "points": [{"coords": [[1, 0], [1, 0]], "mult": 3}]
}"#;

pub const DOUBLE_POINT_JSON: &str = r#"{
  "spaces": [1, 1],
  "points": [{"coords": [[1, 0], [1, 0]], "mult": 2}]
}"#;

pub const MULTS_32_JSON: &str = r#"{
  "spaces": [1, 1],
  "points": [
    {"coords": [[1, 0], [1, 0]], "mult": 3},
    {"coords": [[1, 1], [1, 1]], "mult": 2}
  ]
}"#;

/// Three reduced points on the diagonal [1:i] x [1:i], i = 1, 2, 3; in
/// generic position.
pub const DIAGONAL3_JSON: &str = r#"{
  "spaces": [1, 1],
  "points": [
    {"coords": [[1, 1], [1, 1]], "mult": 1},
    {"coords": [[1, 2], [1, 2]], "mult": 1},
    {"coords": [[1, 3], [1, 3]], "mult": 1}
  ]
}"#;

/// Two points with the same first-factor image: not in generic position.
pub const NONGENERIC_JSON: &str = r#"{
  "spaces": [1, 1],
  "points": [
    {"coords": [[1, 0], [1, 0]], "mult": 1},
    {"coords": [[1, 0], [1, 1]], "mult": 1}
  ]
}"#;
