//! JSON representations shared by the command line and stored fixtures.
//!
//! Complex numbers are `[re, im]` pairs. A state is
//! `{"dim": d, "rho": [[[re, im], ...], ...]}`, a named preparation is
//! `{"prep": "flower", "theta": t}` or `{"prep": "mixed", "p": p}`, and an
//! interferometer is `{"matrix": [[[re, im], ...], ...]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, C64};
use crate::scattering::Interferometer;
use crate::states::{DensityMatrix, PreparationTriple};

pub type ComplexRows = Vec<Vec<[f64; 2]>>;

pub fn rows_to_json(m: &ComplexMatrix) -> ComplexRows {
    m.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

pub fn rows_from_json(rows: &ComplexRows) -> Result<ComplexMatrix> {
    let rows: Vec<Vec<C64>> = rows
        .iter()
        .map(|r| r.iter().map(|&[re, im]| C64::new(re, im)).collect())
        .collect();
    ComplexMatrix::from_rows(&rows)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateJson {
    pub dim: usize,
    pub rho: ComplexRows,
}

impl StateJson {
    pub fn from_state(rho: &DensityMatrix) -> Self {
        Self {
            dim: rho.dim(),
            rho: rows_to_json(rho.matrix()),
        }
    }

    pub fn to_state(&self) -> Result<DensityMatrix> {
        let m = rows_from_json(&self.rho)?;
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::Dimension(format!(
                "declared dim {} but rho is {}x{}",
                self.dim,
                m.rows(),
                m.cols()
            )));
        }
        DensityMatrix::new(m)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "prep", rename_all = "lowercase", deny_unknown_fields)]
pub enum PrepJson {
    Flower { theta: f64 },
    Mixed { p: f64 },
}

impl PrepJson {
    pub fn to_states(&self) -> Result<Vec<DensityMatrix>> {
        let t = match *self {
            PrepJson::Flower { theta } => PreparationTriple::pure_flower(theta)?,
            PrepJson::Mixed { p } => PreparationTriple::identical_mixed(p)?,
        };
        Ok(t.states.to_vec())
    }
}

/// Contents of a states file: a list of explicit states, a named
/// preparation, or `{"states": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StatesFile {
    List(Vec<StateJson>),
    Wrapped { states: Vec<StateJson> },
    Prep(PrepJson),
}

impl StatesFile {
    pub fn to_states(&self) -> Result<Vec<DensityMatrix>> {
        match self {
            StatesFile::List(v) | StatesFile::Wrapped { states: v } => {
                v.iter().map(StateJson::to_state).collect()
            }
            StatesFile::Prep(p) => p.to_states(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitaryJson {
    pub matrix: ComplexRows,
}

impl UnitaryJson {
    pub fn from_interferometer(u: &Interferometer) -> Self {
        Self {
            matrix: rows_to_json(u.matrix()),
        }
    }

    pub fn to_interferometer(&self) -> Result<Interferometer> {
        Interferometer::new(rows_from_json(&self.matrix)?)
    }
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(what: &str, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        what: what.to_string(),
        reason: e.to_string(),
    })
}
