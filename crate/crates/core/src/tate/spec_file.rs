//! TOML description of a custom Tate complex.
//!
//! ```toml
//! n_ext = 3
//! t_images = [4, 6, 4]
//! rows = [[3, -2, 0]]
//! expected = ["Z/2", "Z/2", "0"]   # optional, degrees 0, 1, 2, ...
//! bound = 6                        # optional
//! labels = ["a", "b", "x3"]        # optional
//! ```
//!
//! Integers may be written as TOML integers or as decimal strings.

use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::tate::complex::{TateSpec, DEFAULT_DEGREE_BOUND};
use crate::tate::homology::{DegreeHomology, HomologyTable};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum IntLit {
    Int(i64),
    Text(String),
}

impl IntLit {
    fn value(&self) -> Result<BigInt> {
        match self {
            IntLit::Int(v) => Ok(BigInt::from(*v)),
            IntLit::Text(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("not a decimal integer: {s:?}"))),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpecFile {
    n_ext: usize,
    t_images: Vec<IntLit>,
    #[serde(default)]
    rows: Vec<Vec<IntLit>>,
    expected: Option<Vec<String>>,
    bound: Option<usize>,
    labels: Option<Vec<String>>,
}

/// A validated spec file.
#[derive(Clone, Debug)]
pub struct SpecFile {
    pub spec: TateSpec<BigInt>,
    pub bound: usize,
    pub expected: Option<HomologyTable<BigInt>>,
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawSpecFile = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if raw.t_images.len() != raw.n_ext {
            return invalid(format!(
                "n_ext = {} but {} t_images given",
                raw.n_ext,
                raw.t_images.len()
            ));
        }
        let images = raw
            .t_images
            .iter()
            .map(IntLit::value)
            .collect::<Result<Vec<_>>>()?;
        let rows = raw
            .rows
            .iter()
            .map(|r| r.iter().map(IntLit::value).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let mut spec = TateSpec::new(images, rows)?;
        if let Some(labels) = raw.labels {
            spec = spec.with_labels(labels)?;
        }
        let defects = spec.cycle_defects();
        if let Some(j) = defects.iter().position(|d| d != &BigInt::from(0)) {
            return invalid(format!(
                "row {} is not a cycle: sum e_i c_i = {}",
                j + 1,
                defects[j]
            ));
        }
        let bound = raw.bound.unwrap_or(DEFAULT_DEGREE_BOUND);
        if bound == 0 {
            return invalid("bound must be positive");
        }
        let expected = raw
            .expected
            .map(|list| {
                if list.len() > bound {
                    return invalid(format!(
                        "{} expected degrees exceed bound {bound}",
                        list.len()
                    ));
                }
                let degrees = list
                    .iter()
                    .map(|s| s.parse::<DegreeHomology<BigInt>>())
                    .collect::<Result<Vec<_>>>()?;
                Ok(HomologyTable { degrees })
            })
            .transpose()?;
        Ok(SpecFile {
            spec,
            bound,
            expected,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Compares the listed degrees against `actual`; `None` when nothing is expected.
    pub fn matches(&self, actual: &HomologyTable<BigInt>) -> Option<bool> {
        self.expected.as_ref().map(|e| {
            e.degrees.iter().zip(&actual.degrees).all(|(a, b)| a == b) && e.len() <= actual.len()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tate::complex::build_complex;
    use crate::tate::homology::homology;

    const G2_AT_FOUR: &str = r#"
        n_ext = 3
        t_images = [4, "6", 4]
        rows = [[3, -2, 0]]
        expected = ["Z/2", "Z/2", "0"]
        labels = ["a", "b", "x3"]
    "#;

    #[test]
    fn parses_and_matches() {
        let f = SpecFile::parse(G2_AT_FOUR).unwrap();
        assert_eq!(f.bound, DEFAULT_DEGREE_BOUND);
        let h = homology(&build_complex(f.spec.clone(), f.bound).unwrap());
        assert_eq!(f.matches(&h), Some(true));
    }

    #[test]
    fn big_decimal_strings() {
        let f = SpecFile::parse("n_ext = 1\nt_images = [\"123456789012345678901234567890\"]\n")
            .unwrap();
        assert_eq!(
            f.spec.t_images()[0].to_string(),
            "123456789012345678901234567890"
        );
    }

    #[test]
    fn rejects_bad_files() {
        for bad in [
            "n_ext = 2\nt_images = [1]\n",
            "n_ext = 1\nt_images = [\"x\"]\n",
            "n_ext = 2\nt_images = [2, 4]\nrows = [[1]]\n",
            "n_ext = 2\nt_images = [2, 4]\nrows = [[1, 1]]\n",
            "n_ext = 1\nt_images = [2]\nbound = 0\n",
            "n_ext = 1\nt_images = [2]\nbound = 1\nexpected = [\"Z/2\", \"0\"]\n",
            "n_ext = 1\nt_images = [2]\nexpected = [\"W\"]\n",
            "n_ext = 1\nt_images = [2]\ncolour = 3\n",
            "n_ext = 1\nt_images = [2]\nlabels = [\"a\", \"b\"]\n",
            "not toml",
        ] {
            assert!(SpecFile::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn mismatch_is_reported() {
        let text = G2_AT_FOUR.replace("\"Z/2\", \"Z/2\"", "\"Z/4\", \"Z/2\"");
        let f = SpecFile::parse(&text).unwrap();
        let h = homology(&build_complex(f.spec.clone(), f.bound).unwrap());
        assert_eq!(f.matches(&h), Some(false));
    }
}
