//! Two-lens attack model: an attack lens placed `gap` meters in front of the
//! camera lens changes the total magnification of a distant object, which a
//! monocular depth estimator reads as a change in depth.
//!
//! The closed forms here are evaluated as published, branch by branch. The
//! paraxial tracer in [`crate::ray`] computes the same magnification
//! independently; [`model_divergence`] reports how far apart they are.

mod metrics;
mod planner;
mod sweep;

pub use metrics::{
    adr, aer, depth_metrics, disparity_depth_convert, ConversionDirection, DepthMetrics,
    DisparityParams, ACCURACY_THRESHOLD,
};
pub use planner::{plan_attack, PlanRequest, PlanResult, GAP_SAMPLES, GAP_TOLERANCE};
pub use sweep::{sweep, RowValues, SweepGrid, SweepRow};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::optics::{require_positive, ThinLens, EPSILON};
use crate::ray;

/// Camera focal length used for expected-depth calculations, in meters.
pub const DEFAULT_CAMERA_FOCAL_LENGTH: f64 = 0.026;

/// Attack lens, lens-to-camera gap, camera focal length and object distance.
/// All lengths in meters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OpticalStack {
    /// `None` models the benign camera.
    pub attack_lens: Option<ThinLens>,
    pub gap: f64,
    pub camera_focal_length: f64,
    pub object_distance: f64,
}

impl OpticalStack {
    pub fn new(
        attack_lens: Option<ThinLens>,
        gap: f64,
        camera_focal_length: f64,
        object_distance: f64,
    ) -> Result<Self> {
        require_positive("gap", gap)?;
        require_positive("camera_focal_length", camera_focal_length)?;
        require_positive("object_distance", object_distance)?;
        Ok(Self {
            attack_lens,
            gap,
            camera_focal_length,
            object_distance,
        })
    }

    /// Convenience constructor with the default 26 mm camera.
    pub fn with_lens(focal_length: f64, gap: f64, object_distance: f64) -> Result<Self> {
        Self::new(
            Some(ThinLens::new(focal_length)?),
            gap,
            DEFAULT_CAMERA_FOCAL_LENGTH,
            object_distance,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScenarioKind {
    Concave,
    /// Object inside the convex lens focal length.
    Convex1,
    /// Convex lens, camera beyond the real intermediate image.
    Convex2,
    /// Convex lens, camera between the lens and the real intermediate image.
    Convex3,
    #[serde(rename = "none")]
    NoLens,
}

impl ScenarioKind {
    /// Whether the configuration is practical against a moving vehicle.
    pub fn feasible_in_ad(&self) -> bool {
        matches!(self, ScenarioKind::Concave | ScenarioKind::Convex3)
    }

    pub fn infeasibility_reason(&self) -> Option<&'static str> {
        match self {
            ScenarioKind::Concave | ScenarioKind::Convex3 => None,
            ScenarioKind::Convex1 => Some("object too close"),
            ScenarioKind::Convex2 => {
                Some("inverted intermediate image and impractically large gap")
            }
            ScenarioKind::NoLens => Some("no attack lens"),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            ScenarioKind::Concave => "concave",
            ScenarioKind::Convex1 => "convex1",
            ScenarioKind::Convex2 => "convex2",
            ScenarioKind::Convex3 => "convex3",
            ScenarioKind::NoLens => "none",
        }
    }
}

impl std::fmt::Display for ScenarioKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn classify_scenario(stack: &OpticalStack) -> Result<ScenarioKind> {
    let Some(lens) = stack.attack_lens else {
        return Ok(ScenarioKind::NoLens);
    };
    if lens.is_concave() {
        return Ok(ScenarioKind::Concave);
    }
    // Surfaces DegenerateFocus when the object sits on the focal point.
    let image_distance = lens.image_distance(stack.object_distance)?;
    if stack.object_distance < lens.focal_length() {
        return Ok(ScenarioKind::Convex1);
    }
    // Ties go to the camera-beyond-image branch.
    if stack.gap >= image_distance.abs() - EPSILON {
        Ok(ScenarioKind::Convex2)
    } else {
        Ok(ScenarioKind::Convex3)
    }
}

/// Per-stage distances and magnifications of the two-lens system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FormationResult {
    pub d_i1: f64,
    pub m_1: f64,
    pub d_o2: f64,
    pub d_i2: f64,
    pub m_2: f64,
    pub m_total: f64,
    pub m_ori: f64,
}

fn guarded(value: f64, what: &'static str) -> Result<f64> {
    if value.abs() < EPSILON || !value.is_finite() {
        Err(Error::SingularDenominator(what))
    } else {
        Ok(value)
    }
}

/// Magnification of the camera alone for an object `d_o1 + gap` away.
pub fn original_magnification(stack: &OpticalStack) -> Result<f64> {
    let fc = stack.camera_focal_length;
    let den = guarded(
        stack.object_distance + stack.gap - fc,
        "original magnification (d_o1 + d_b - f_c)",
    )?;
    Ok(-fc / den)
}

pub fn formation(stack: &OpticalStack) -> Result<FormationResult> {
    let scenario = classify_scenario(stack)?;
    formation_for(stack, scenario)
}

fn formation_for(stack: &OpticalStack, scenario: ScenarioKind) -> Result<FormationResult> {
    let fc = stack.camera_focal_length;
    let d_o1 = stack.object_distance;
    let gap = stack.gap;
    let m_ori = original_magnification(stack)?;

    let Some(lens) = stack.attack_lens else {
        // Identity attack stage: the camera sees the object itself.
        let d_o2 = d_o1 + gap;
        let den = guarded(d_o2 - fc, "camera stage (d_o2 - f_c)")?;
        let m_2 = -fc / den;
        return Ok(FormationResult {
            d_i1: d_o1,
            m_1: 1.0,
            d_o2,
            d_i2: -d_o2 * fc / den,
            m_2,
            m_total: m_2,
            m_ori,
        });
    };

    let f = lens.focal_length();
    let d_i1 = lens.image_distance(d_o1)?;
    let m_1 = lens.magnification(d_o1)?;
    let lens_den = d_o1 - f;
    let image_offset = (d_o1 * f / lens_den).abs();

    let (d_o2, label) = match scenario {
        ScenarioKind::Concave | ScenarioKind::Convex1 => {
            (image_offset + gap, "camera stage (|d_i1| + d_b - f_c)")
        }
        ScenarioKind::Convex2 => (gap - image_offset, "camera stage (d_b - |d_i1| - f_c)"),
        ScenarioKind::Convex3 => (image_offset - gap, "camera stage (|d_i1| - d_b - f_c)"),
        ScenarioKind::NoLens => unreachable!("lens present"),
    };
    let camera_den = guarded(d_o2 - fc, label)?;
    let d_i2 = -d_o2 * fc / camera_den;
    let m_2 = -fc / camera_den;
    let m_total = f * fc / (lens_den * camera_den);

    Ok(FormationResult {
        d_i1,
        m_1,
        d_o2,
        d_i2,
        m_2,
        m_total,
        m_ori,
    })
}

/// `(m_total, m_ori)` of the closed-form model.
pub fn paper_magnifications(stack: &OpticalStack) -> Result<(f64, f64)> {
    let r = formation(stack)?;
    Ok((r.m_total, r.m_ori))
}

/// Depth a pinhole-style estimator would report for the object: the true
/// distance scaled by `|m_ori / m_total|`.
pub fn expected_depth(stack: &OpticalStack) -> Result<f64> {
    let scenario = classify_scenario(stack)?;
    expected_depth_for(stack, scenario, &formation_for(stack, scenario)?)
}

fn expected_depth_for(
    stack: &OpticalStack,
    scenario: ScenarioKind,
    formation: &FormationResult,
) -> Result<f64> {
    if scenario == ScenarioKind::NoLens {
        return Ok(stack.object_distance);
    }
    Ok(stack.object_distance * (formation.m_ori / formation.m_total).abs())
}

/// Relative difference between the closed-form `|m_total|` and the traced one.
pub fn model_divergence(stack: &OpticalStack) -> Result<f64> {
    let (m_total, _) = paper_magnifications(stack)?;
    let oracle = ray::stack_magnification(stack)?;
    Ok(divergence(m_total, oracle))
}

fn divergence(model: f64, oracle: f64) -> f64 {
    ((model.abs() - oracle.abs()) / oracle.abs()).abs()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AttackOutcome {
    pub scenario: ScenarioKind,
    pub formation: FormationResult,
    pub expected_depth: f64,
    pub oracle_magnification: f64,
    pub divergence: f64,
}

impl AttackOutcome {
    pub fn feasible(&self) -> bool {
        self.scenario.feasible_in_ad()
    }

    /// Apparent size change of the object on the sensor, `|m_total / m_ori|`.
    pub fn image_magnification(&self) -> f64 {
        (self.formation.m_total / self.formation.m_ori).abs()
    }
}

pub fn evaluate(stack: &OpticalStack) -> Result<AttackOutcome> {
    let scenario = classify_scenario(stack)?;
    let formation = formation_for(stack, scenario)?;
    let expected_depth = expected_depth_for(stack, scenario, &formation)?;
    let oracle_magnification = ray::stack_magnification(stack)?;
    Ok(AttackOutcome {
        scenario,
        formation,
        expected_depth,
        oracle_magnification,
        divergence: divergence(formation.m_total, oracle_magnification),
    })
}
