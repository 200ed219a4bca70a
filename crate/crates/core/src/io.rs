//! JSON formats for matrices, alpha weights and monotone measures.
//!
//! * matrix: `{"n": 2, "entries": [[[re, im], [re, im]], [[re, im], [re, im]]]}`
//! * alpha: `{"alpha": [0, a1, ..., an]}`
//! * measure: `{"n": 2, "values": {"1": 0.5, "2": 0.5, "3": 1}}`, keyed by
//!   the decimal subset bit mask; the empty set may be omitted.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::measures::{AlphaWeights, MonotoneMeasure, MAX_GROUND_SET};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub n: usize,
    pub entries: Vec<Vec<[f64; 2]>>,
}

impl MatrixFile {
    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        if self.n == 0 {
            return Err(Error::Parse("n must be at least 1".into()));
        }
        if self.entries.len() != self.n || self.entries.iter().any(|r| r.len() != self.n) {
            return Err(Error::Parse(format!("entries must form a {0} x {0} array", self.n)));
        }
        let rows: Vec<Vec<Complex64>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
            .collect();
        ComplexMatrix::from_rows(&rows)
    }
}

impl From<&ComplexMatrix> for MatrixFile {
    fn from(m: &ComplexMatrix) -> Self {
        Self {
            n: m.dim(),
            entries: m
                .rows()
                .into_iter()
                .map(|r| r.into_iter().map(|z| [z.re, z.im]).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlphaFile {
    pub alpha: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasureFile {
    pub n: usize,
    pub values: BTreeMap<String, f64>,
}

impl MeasureFile {
    pub fn to_measure(&self) -> Result<MonotoneMeasure> {
        let n = self.n;
        if n == 0 || n > MAX_GROUND_SET {
            return Err(Error::Parse(format!("n must be in 1..={MAX_GROUND_SET}, got {n}")));
        }
        let size = 1usize << n;
        let mut table = vec![None; size];
        table[0] = Some(0.0);
        for (key, &v) in &self.values {
            let mask: usize = key
                .parse()
                .map_err(|_| Error::Parse(format!("subset key {key:?} is not a decimal mask")))?;
            if mask >= size {
                return Err(Error::Parse(format!("subset mask {mask} out of range for n = {n}")));
            }
            if mask == 0 && v != 0.0 {
                return Err(Error::InvalidMeasure("value of the empty set must be 0".into()));
            }
            table[mask] = Some(v);
        }
        let values = table
            .into_iter()
            .enumerate()
            .map(|(mask, v)| v.ok_or_else(|| Error::Parse(format!("missing value for subset mask {mask}"))))
            .collect::<Result<Vec<f64>>>()?;
        MonotoneMeasure::new(n, values)
    }
}

impl From<&MonotoneMeasure> for MeasureFile {
    fn from(mu: &MonotoneMeasure) -> Self {
        Self {
            n: mu.n(),
            values: mu
                .values()
                .iter()
                .enumerate()
                .skip(1)
                .map(|(mask, &v)| (mask.to_string(), v))
                .collect(),
        }
    }
}

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_matrix(text: &str) -> Result<ComplexMatrix> {
    parse_json::<MatrixFile>(text)?.to_matrix()
}

/// Structural errors map to [`Error::Parse`]; a well-formed but invalid
/// weight vector maps to [`Error::InvalidAlpha`].
pub fn parse_alpha(text: &str) -> Result<AlphaWeights> {
    AlphaWeights::new(parse_json::<AlphaFile>(text)?.alpha)
}

pub fn parse_measure(text: &str) -> Result<MonotoneMeasure> {
    parse_json::<MeasureFile>(text)?.to_measure()
}
