use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{evaluate, OpticalStack, ScenarioKind};
use crate::error::{Error, Result};
use crate::optics::ThinLens;

/// Cartesian grid of attack configurations. `None` in `focal_lengths` is the
/// benign (no attack lens) configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepGrid {
    pub focal_lengths: Vec<Option<f64>>,
    pub gaps: Vec<f64>,
    pub object_distances: Vec<f64>,
    pub camera_focal_length: f64,
}

impl SweepGrid {
    pub fn len(&self) -> usize {
        self.focal_lengths.len() * self.gaps.len() * self.object_distances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Grid point `index` in lexicographic (focal length, gap, distance) order.
    fn point(&self, index: usize) -> (Option<f64>, f64, f64) {
        let nd = self.object_distances.len();
        let ng = self.gaps.len();
        let f = self.focal_lengths[index / (ng * nd)];
        let g = self.gaps[(index / nd) % ng];
        let d = self.object_distances[index % nd];
        (f, g, d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RowValues {
    pub scenario: ScenarioKind,
    pub m_total: f64,
    pub m_ori: f64,
    pub expected_depth: f64,
    pub oracle_magnification: f64,
    pub divergence: f64,
    pub feasible: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub focal_length: Option<f64>,
    pub gap: f64,
    pub object_distance: f64,
    pub values: Result<RowValues>,
}

fn evaluate_point(f: Option<f64>, gap: f64, d_o1: f64, fc: f64) -> Result<RowValues> {
    let lens = f.map(ThinLens::new).transpose()?;
    let stack = OpticalStack::new(lens, gap, fc, d_o1)?;
    let o = evaluate(&stack)?;
    Ok(RowValues {
        scenario: o.scenario,
        m_total: o.formation.m_total,
        m_ori: o.formation.m_ori,
        expected_depth: o.expected_depth,
        oracle_magnification: o.oracle_magnification,
        divergence: o.divergence,
        feasible: o.feasible(),
    })
}

/// Evaluates every grid point. Rows are computed in parallel but returned in
/// lexicographic input order; failing points yield an error row.
pub fn sweep(grid: &SweepGrid) -> Vec<SweepRow> {
    (0..grid.len())
        .into_par_iter()
        .map(|i| {
            let (f, gap, d_o1) = grid.point(i);
            let values = if grid.camera_focal_length.is_finite() && grid.camera_focal_length > 0.0 {
                evaluate_point(f, gap, d_o1, grid.camera_focal_length)
            } else {
                Err(Error::InvalidInput(
                    "camera focal length must be > 0".into(),
                ))
            };
            SweepRow {
                focal_length: f,
                gap,
                object_distance: d_o1,
                values,
            }
        })
        .collect()
}
