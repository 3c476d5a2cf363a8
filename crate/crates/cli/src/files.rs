//! JSON input formats.
//!
//! Complex: `{"vertices": 5, "facets": [[1,2],[2,3],...]}` with 1-based labels.
//! H-representation: `{"A": [["1/2", 0], ...], "b": [1, "-3/4", ...]}` for
//! `Ax + b >= 0`; entries are integers or `"p/q"` strings.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use polydouble::{DualPolytope, Mask, PolytopeSystem, SimplicialComplex};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum RationalEntry {
    Integer(i64),
    Text(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HrepFile {
    #[serde(rename = "A")]
    pub a: Vec<Vec<RationalEntry>>,
    pub b: Vec<RationalEntry>,
}

impl RationalEntry {
    pub fn to_rational(&self) -> Result<BigRational> {
        match self {
            RationalEntry::Integer(n) => Ok(BigRational::from_integer(BigInt::from(*n))),
            RationalEntry::Text(s) => parse_rational(s),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .with_context(|| format!("bad numerator in {s:?}"))?;
    let den: BigInt = den
        .parse()
        .with_context(|| format!("bad denominator in {s:?}"))?;
    if den == BigInt::from(0) {
        bail!("zero denominator in {s:?}");
    }
    Ok(BigRational::new(num, den))
}

impl ComplexFile {
    /// A dual polytope of dimension equal to the facet size.
    pub fn into_dual(self) -> Result<DualPolytope> {
        let mut faces = Vec::with_capacity(self.facets.len());
        for facet in &self.facets {
            let mut mask = Mask::EMPTY;
            for &v in facet {
                if v == 0 || v > self.vertices {
                    bail!("vertex {v} outside 1..={}", self.vertices);
                }
                if mask.contains(v - 1) {
                    bail!("vertex {v} repeated in facet {facet:?}");
                }
                mask = mask.insert(v - 1);
            }
            faces.push(mask);
        }
        let dim = faces.first().map_or(0, |f| f.len());
        let complex = SimplicialComplex::new(self.vertices, faces)?;
        Ok(DualPolytope::validate(complex, dim)?)
    }
}

impl HrepFile {
    pub fn into_system(self) -> Result<PolytopeSystem> {
        let a = self
            .a
            .iter()
            .map(|row| {
                row.iter()
                    .map(RationalEntry::to_rational)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let b = self
            .b
            .iter()
            .map(RationalEntry::to_rational)
            .collect::<Result<Vec<_>>>()?;
        Ok(PolytopeSystem::validate(a, b)?)
    }
}

pub fn parse_complex(text: &str) -> Result<DualPolytope> {
    let file: ComplexFile = serde_json::from_str(text).context("malformed complex file")?;
    file.into_dual()
}

pub fn parse_hrep(text: &str) -> Result<PolytopeSystem> {
    let file: HrepFile = serde_json::from_str(text).context("malformed H-representation file")?;
    file.into_system()
}

pub fn read_complex(path: &Path) -> Result<DualPolytope> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_complex(&text).with_context(|| format!("in {}", path.display()))
}

pub fn read_hrep(path: &Path) -> Result<PolytopeSystem> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_hrep(&text).with_context(|| format!("in {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use polydouble::catalog::{polygon, simplex};

    #[test]
    fn pentagon_file() {
        let text = r#"{ "vertices": 5, "facets": [[1,2],[2,3],[3,4],[4,5],[5,1]] }"#;
        assert_eq!(parse_complex(text).unwrap(), polygon(5).unwrap());
    }

    #[test]
    fn complex_errors() {
        assert!(parse_complex(r#"{"vertices": 3, "facets": [[1,1],[2,3]]}"#).is_err());
        assert!(parse_complex(r#"{"vertices": 3, "facets": [[1,4]]}"#).is_err());
        assert!(parse_complex(r#"{"vertices": 3, "facets": [[1,2],[2,3]]}"#).is_err());
        assert!(parse_complex(r#"{"vertices": 3}"#).is_err());
        assert_eq!(
            parse_complex(r#"{"vertices": 0, "facets": []}"#).unwrap(),
            DualPolytope::point()
        );
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-6/4").unwrap().to_string(), "-3/2");
        assert_eq!(parse_rational("7").unwrap().to_string(), "7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn triangle_hrep() {
        let s = parse_hrep(r#"{"A": [[1, 0], [0, "2/2"], [-1, -1]], "b": [0, 0, "1"]}"#).unwrap();
        assert_eq!(s.dual_complex().unwrap(), simplex(2).unwrap());
        assert!(parse_hrep(r#"{"A": [[1, 0], [0, 1]], "b": [0, 0]}"#).is_err());
        assert!(parse_hrep(r#"{"A": [[1, 0]], "b": [0, 0]}"#).is_err());
    }
}
