//! JSON scheme files: the on-disk interchange format for fat point schemes.
//!
//! ```json
//! {
//!   "spaces": [1, 1],
//!   "points": [{"coords": [[1, 1], [1, 2]], "mult": 2}],
//!   "field": {"mode": "prime", "p": 2147483647}
//! }
//! ```
//!
//! `field` is optional and defaults to rational mode.

use serde::{Deserialize, Serialize};

use crate::linalg::FieldSpec;
use crate::points::{FatPointScheme, MultiPoint};
use crate::ring::SpaceShape;
use crate::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeFile {
    pub spaces: Vec<usize>,
    pub points: Vec<PointEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointEntry {
    pub coords: Vec<Vec<i64>>,
    pub mult: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldEntry {
    Rational,
    Prime { p: u64 },
}

impl SchemeFile {
    pub fn parse(json: &str) -> Result<Self> {
        let file: SchemeFile =
            serde_json::from_str(json).map_err(|e| Error::SchemeFile(e.to_string()))?;
        Ok(file)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Validates the document and builds the scheme and field mode.
    pub fn build(&self) -> Result<(FatPointScheme, FieldSpec)> {
        let shape = SpaceShape::new(self.spaces.clone())?;
        let mut points = Vec::with_capacity(self.points.len());
        for entry in &self.points {
            points.push((MultiPoint::new(entry.coords.clone())?, entry.mult));
        }
        let scheme = FatPointScheme::new(shape, points)?;
        let field = match &self.field {
            None | Some(FieldEntry::Rational) => FieldSpec::Rational,
            Some(FieldEntry::Prime { p }) => FieldSpec::prime(*p)?,
        };
        Ok((scheme, field))
    }

    /// Serializes a scheme back into the interchange format, using the
    /// canonical coordinate representatives.
    pub fn from_scheme(scheme: &FatPointScheme, field: &FieldSpec) -> Self {
        SchemeFile {
            spaces: scheme.shape().factors().to_vec(),
            points: scheme
                .points()
                .iter()
                .map(|(p, m)| PointEntry {
                    coords: p.coords().to_vec(),
                    mult: *m,
                })
                .collect(),
            field: match field {
                FieldSpec::Rational => None,
                FieldSpec::Prime(p) => Some(FieldEntry::Prime { p: *p }),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scheme file serialization cannot fail")
    }
}

/// Parses a `MULTIREG_FIELD`-style override: `rational` or `prime:P`.
pub fn parse_field_override(value: &str) -> Result<FieldSpec> {
    if value == "rational" {
        return Ok(FieldSpec::Rational);
    }
    if let Some(p) = value.strip_prefix("prime:") {
        let p: u64 = p
            .parse()
            .map_err(|_| Error::SchemeFile(format!("invalid field override: {value}")))?;
        return FieldSpec::prime(p);
    }
    Err(Error::SchemeFile(format!(
        "invalid field override: {value} (expected `rational` or `prime:P`)"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SEVEN: &str = r#"{
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

    #[test]
    fn parses_and_builds() {
        let (scheme, field) = SchemeFile::parse(SEVEN).unwrap().build().unwrap();
        assert_eq!(scheme.degree(), 7);
        assert_eq!(field, FieldSpec::Rational);
    }

    #[test]
    fn prime_field_mode() {
        let json = r#"{"spaces":[1,1],
                       "points":[{"coords":[[1,0],[1,0]],"mult":2}],
                       "field":{"mode":"prime","p":2147483647}}"#;
        let (scheme, field) = SchemeFile::parse(json).unwrap().build().unwrap();
        assert_eq!(scheme.degree(), 3);
        assert_eq!(field, FieldSpec::Prime(2147483647));
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(SchemeFile::parse("{").is_err());
        // wrong coordinate length
        let json = r#"{"spaces":[1,1],"points":[{"coords":[[1,0,0],[1,0]],"mult":1}]}"#;
        assert!(SchemeFile::parse(json).unwrap().build().is_err());
        // zero multiplicity
        let json = r#"{"spaces":[1,1],"points":[{"coords":[[1,0],[1,0]],"mult":0}]}"#;
        assert!(SchemeFile::parse(json).unwrap().build().is_err());
        // composite modulus
        let json = r#"{"spaces":[1,1],
                       "points":[{"coords":[[1,0],[1,0]],"mult":1}],
                       "field":{"mode":"prime","p":2147483645}}"#;
        assert!(SchemeFile::parse(json).unwrap().build().is_err());
        // unknown key
        let json = r#"{"spaces":[1,1],"points":[],"extra":1}"#;
        assert!(SchemeFile::parse(json).is_err());
    }

    #[test]
    fn round_trip() {
        let (scheme, field) = SchemeFile::parse(SEVEN).unwrap().build().unwrap();
        let json = SchemeFile::from_scheme(&scheme, &field).to_json();
        let (again, field2) = SchemeFile::parse(&json).unwrap().build().unwrap();
        assert_eq!(scheme, again);
        assert_eq!(field, field2);
    }

    #[test]
    fn field_override_parsing() {
        assert_eq!(
            parse_field_override("rational").unwrap(),
            FieldSpec::Rational
        );
        assert_eq!(
            parse_field_override("prime:2147483647").unwrap(),
            FieldSpec::Prime(2147483647)
        );
        assert!(parse_field_override("prime:6").is_err());
        assert!(parse_field_override("gf256").is_err());
    }
}
