//! Solution documents.
//!
//! Writers emit `{"n":N,"sigma":[[...],...]}` with 1-based images. Readers
//! also accept the table form `{"n":N,"r":[[[k,l],...],...]}` where row `i`,
//! column `j` holds `r(i,j)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::solution::{RTable, Solution};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionDoc {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<Vec<[usize; 2]>>>,
}

impl SolutionDoc {
    pub fn from_solution(s: &Solution) -> SolutionDoc {
        SolutionDoc {
            n: s.n(),
            sigma: Some(s.sigmas().iter().map(Perm::to_one_based).collect()),
            r: None,
        }
    }

    /// The raw table described by the document, before any axiom check.
    pub fn to_table(&self) -> Result<RTable> {
        match (&self.sigma, &self.r) {
            (Some(_), Some(_)) => Err(Error::Parse("give either sigma or r, not both".into())),
            (None, None) => Err(Error::Parse("document has neither sigma nor r".into())),
            (Some(rows), None) => {
                self.check_len(rows.len())?;
                let sigmas = rows
                    .iter()
                    .map(|row| {
                        if row.len() != self.n {
                            return Err(Error::Parse(format!(
                                "sigma row has {} entries, expected {}",
                                row.len(),
                                self.n
                            )));
                        }
                        Perm::from_one_based(row).map_err(|e| Error::Parse(e.to_string()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                RTable::from_sigmas(&sigmas)
            }
            (None, Some(rows)) => {
                self.check_len(rows.len())?;
                let rows = rows
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|&[k, l]| {
                                if k == 0 || l == 0 || k > self.n || l > self.n {
                                    Err(Error::Parse(format!("entry [{k},{l}] out of range")))
                                } else {
                                    Ok((k - 1, l - 1))
                                }
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                RTable::new(rows).map_err(|e| Error::Parse(e.to_string()))
            }
        }
    }

    fn check_len(&self, rows: usize) -> Result<()> {
        if self.n == 0 || rows != self.n {
            return Err(Error::Parse(format!(
                "n is {} but {rows} rows were given",
                self.n
            )));
        }
        Ok(())
    }

    pub fn to_solution(&self) -> Result<Solution> {
        Solution::from_r_table(&self.to_table()?)
    }
}

pub fn parse_doc(text: &str) -> Result<SolutionDoc> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_solution(text: &str) -> Result<Solution> {
    parse_doc(text)?.to_solution()
}

/// Compact sigma-form document.
pub fn write_solution(s: &Solution) -> String {
    serde_json::to_string(&SolutionDoc::from_solution(s)).expect("documents serialize")
}

/// A list of solutions as an array of documents, first element first.
pub fn write_tower(tower: &[Solution]) -> String {
    let docs: Vec<SolutionDoc> = tower.iter().map(SolutionDoc::from_solution).collect();
    serde_json::to_string(&docs).expect("documents serialize")
}
