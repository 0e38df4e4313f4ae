use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::hom::{hom_dip, Device};
use super::tritter::tritter_engine_stats;
use crate::error::{Error, Result};
use crate::states::{
    flower_pairwise_trace, flower_vabc, mixed_pairwise_trace, DensityMatrix, PreparationTriple,
};

/// Half-width of the delay axis of the beam-splitter dip, in wavepacket
/// durations.
pub const DIP_HALF_WIDTH: f64 = 6.0;

pub const DEFAULT_GRID: usize = 101;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Figure {
    /// `|V_abc|` of the flower states against polar angle.
    Volume,
    /// Tritter statistics of the flower states against pairwise trace.
    PureStatistics,
    /// Tritter statistics of identical mixed states against pairwise trace.
    MixedStatistics,
    /// Beam-splitter dip of identical photons against `dt / sigma_t`.
    Dip,
}

impl Figure {
    pub const ALL: [Figure; 4] = [
        Figure::Dip,
        Figure::Volume,
        Figure::PureStatistics,
        Figure::MixedStatistics,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Figure::Volume => "fig2c",
            Figure::PureStatistics => "fig4-pure",
            Figure::MixedStatistics => "fig4-mixed",
            Figure::Dip => "fig1b",
        }
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Figure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Figure::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| Error::UnknownFigure(s.to_string()))
    }
}

/// Named columns of numbers.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let k = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[k]).collect())
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| {
            if k + 1 == n {
                hi
            } else {
                lo + (hi - lo) * k as f64 / (n - 1) as f64
            }
        })
        .collect()
}

fn stats_row(trace: f64, states: &[DensityMatrix; 3]) -> Result<Vec<f64>> {
    let s = tritter_engine_stats(states)?;
    Ok(vec![trace, s.p111, s.p120, s.p210, s.p300])
}

const STATS_COLUMNS: [&str; 5] = ["pairwise_trace", "p111", "p120", "p210", "p300"];

/// Samples one figure at `grid` points.
pub fn figure_curves(which: Figure, grid: usize) -> Result<Table> {
    if grid < 2 {
        return Err(Error::Validation(format!("grid must have at least 2 points (got {grid})")));
    }
    let (columns, rows): (Vec<&str>, Vec<Vec<f64>>) = match which {
        Figure::Volume => (
            vec!["theta", "vabc_abs"],
            linspace(0.0, FRAC_PI_2, grid)
                .into_iter()
                .map(|t| vec![t, flower_vabc(t).abs()])
                .collect(),
        ),
        Figure::PureStatistics => (
            STATS_COLUMNS.to_vec(),
            linspace(0.0, FRAC_PI_2, grid)
                .par_iter()
                .map(|&t| stats_row(flower_pairwise_trace(t), &PreparationTriple::pure_flower(t)?.states))
                .collect::<Result<_>>()?,
        ),
        Figure::MixedStatistics => (
            STATS_COLUMNS.to_vec(),
            linspace(1.0, 0.5, grid)
                .par_iter()
                .map(|&p| stats_row(mixed_pairwise_trace(p), &PreparationTriple::identical_mixed(p)?.states))
                .collect::<Result<_>>()?,
        ),
        Figure::Dip => {
            let delays = linspace(-DIP_HALF_WIDTH, DIP_HALF_WIDTH, grid);
            let h = DensityMatrix::basis(2, 0)?;
            let curve = hom_dip(&h, &h, 1.0, &delays, Device::BeamSplitter)?;
            (
                vec!["dt_over_sigma", "p11"],
                delays.iter().zip(&curve.probabilities).map(|(&t, &p)| vec![t, p]).collect(),
            )
        }
    };
    Ok(Table {
        columns: columns.into_iter().map(String::from).collect(),
        rows,
    })
}
