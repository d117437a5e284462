use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::code::{LinearCode, WeightDistribution};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldSpec};
use crate::matrix::GfMatrix;

/// Self-describing JSON document for one code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub field: FieldSpec,
    pub n: usize,
    pub k: usize,
    pub generator: Vec<Vec<Elem>>,
    #[serde(default)]
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight_distribution: Option<BTreeMap<usize, u64>>,
}

impl CodeFile {
    pub fn from_code(code: &LinearCode, wd: Option<&WeightDistribution>) -> CodeFile {
        CodeFile {
            field: code.field().spec().clone(),
            n: code.n(),
            k: code.k(),
            generator: code.generator().to_rows(),
            label: code.label().to_string(),
            weight_distribution: wd.map(|w| w.counts.clone()),
        }
    }

    /// Rebuilds the code, checking the declared shape and full rank.
    pub fn to_code(&self) -> Result<LinearCode> {
        let field = Field::from_spec(&self.field)?;
        if self.generator.len() != self.k {
            return Err(Error::Format(format!(
                "k = {} but the generator has {} rows",
                self.k,
                self.generator.len()
            )));
        }
        if let Some(row) = self.generator.iter().find(|r| r.len() != self.n) {
            return Err(Error::Format(format!(
                "n = {} but a generator row has {} entries",
                self.n,
                row.len()
            )));
        }
        let g = GfMatrix::from_rows(&field, &self.generator)?;
        LinearCode::from_generator(g, self.label.clone())
    }

    /// The cached distribution, if present.
    pub fn cached_distribution(&self) -> Option<WeightDistribution> {
        self.weight_distribution
            .as_ref()
            .map(|counts| WeightDistribution {
                q: self.field.q(),
                n: self.n,
                k: self.k,
                counts: counts.clone(),
            })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("code files serialize")
    }

    pub fn from_json(text: &str) -> Result<CodeFile> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<CodeFile> {
        CodeFile::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json() + "\n")?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::Limits;
    use crate::construct::{rs_code, simplex};

    #[test]
    fn round_trip() {
        let c = rs_code(4, 3).unwrap();
        let wd = c.weight_distribution(&Limits::default()).unwrap();
        let file = CodeFile::from_code(&c, Some(&wd));
        let text = file.to_json();
        let back = CodeFile::from_json(&text).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_code().unwrap(), c);
        assert_eq!(back.cached_distribution().unwrap(), wd);
    }

    #[test]
    fn rejects_inconsistent_files() {
        let mut file = CodeFile::from_code(&simplex(2, 3).unwrap(), None);
        file.k = 2;
        assert!(matches!(file.to_code(), Err(Error::Format(_))));
        let mut file = CodeFile::from_code(&simplex(2, 3).unwrap(), None);
        file.generator[2] = file.generator[0].clone();
        assert!(matches!(
            file.to_code(),
            Err(Error::RankDeficient { rank: 2, rows: 3 })
        ));
        let mut file = CodeFile::from_code(&simplex(2, 3).unwrap(), None);
        file.field.modulus = vec![1, 1, 1];
        assert!(file.to_code().is_err());
    }
}
