//! Inverse problem: pick an attack lens and gap that make the object appear at
//! a chosen depth.

use serde::{Deserialize, Serialize};

use super::{classify_scenario, expected_depth, OpticalStack, ScenarioKind};
use crate::error::{AchievableRange, Error, Result};
use crate::optics::{require_positive, ThinLens};

/// Number of equally spaced gaps sampled per candidate before bisection.
pub const GAP_SAMPLES: usize = 64;
/// Bisection stops once the gap bracket is narrower than this (meters).
pub const GAP_TOLERANCE: f64 = 1e-6;
/// Largest accepted |achieved - target| depth, in meters.
const DEPTH_TOLERANCE: f64 = 1e-3;
const MAX_BISECTIONS: usize = 200;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanRequest {
    pub target_depth: f64,
    pub object_distance: f64,
    pub camera_focal_length: f64,
    pub candidate_focal_lengths: Vec<f64>,
    pub gap_min: f64,
    pub gap_max: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanResult {
    pub focal_length: f64,
    pub gap: f64,
    pub scenario: ScenarioKind,
    pub achieved_depth: f64,
    pub residual: f64,
}

struct Sample {
    gap: f64,
    depth: Option<f64>,
}

/// Searches every candidate lens for gaps where the expected depth crosses
/// the target, refines each crossing by bisection and returns the best hit.
///
/// Only configurations that work against a real vehicle (concave, convex-3)
/// are considered. When several lenses reach the target, the weakest lens
/// (largest |f|) wins, since it introduces the least defocus; remaining ties
/// go to the smaller residual.
pub fn plan_attack(request: &PlanRequest) -> Result<PlanResult> {
    validate(request)?;

    let mut best: Option<PlanResult> = None;
    let mut ranges = Vec::with_capacity(request.candidate_focal_lengths.len());

    for &f in &request.candidate_focal_lengths {
        let lens = ThinLens::new(f)?;
        let samples = sample_gaps(request, lens);
        ranges.push(achievable_range(f, &samples));

        for hit in candidate_hits(request, lens, &samples) {
            if hit.residual > DEPTH_TOLERANCE {
                continue;
            }
            best = Some(match best {
                Some(cur) if !better(&hit, &cur) => cur,
                _ => hit,
            });
        }
    }

    best.ok_or(Error::Unreachable {
        target: request.target_depth,
        ranges,
    })
}

fn better(a: &PlanResult, b: &PlanResult) -> bool {
    let (fa, fb) = (a.focal_length.abs(), b.focal_length.abs());
    if fa != fb {
        return fa > fb;
    }
    if a.residual != b.residual {
        return a.residual < b.residual;
    }
    a.gap < b.gap
}

fn validate(request: &PlanRequest) -> Result<()> {
    require_positive("target_depth", request.target_depth)?;
    require_positive("object_distance", request.object_distance)?;
    require_positive("camera_focal_length", request.camera_focal_length)?;
    require_positive("gap_min", request.gap_min)?;
    require_positive("gap_max", request.gap_max)?;
    if request.candidate_focal_lengths.is_empty() {
        return Err(Error::InvalidInput(
            "candidate focal length set is empty".into(),
        ));
    }
    if request.gap_min >= request.gap_max {
        return Err(Error::InvalidInput(format!(
            "gap_min ({}) must be below gap_max ({})",
            request.gap_min, request.gap_max
        )));
    }
    Ok(())
}

/// Expected depth at `gap`, or `None` if the configuration is infeasible or
/// the model is singular there.
fn feasible_depth(request: &PlanRequest, lens: ThinLens, gap: f64) -> Option<(f64, ScenarioKind)> {
    let stack = OpticalStack::new(
        Some(lens),
        gap,
        request.camera_focal_length,
        request.object_distance,
    )
    .ok()?;
    let scenario = classify_scenario(&stack).ok()?;
    if !scenario.feasible_in_ad() {
        return None;
    }
    expected_depth(&stack).ok().map(|d| (d, scenario))
}

fn sample_gaps(request: &PlanRequest, lens: ThinLens) -> Vec<Sample> {
    let step = (request.gap_max - request.gap_min) / (GAP_SAMPLES - 1) as f64;
    (0..GAP_SAMPLES)
        .map(|i| {
            let gap = if i == GAP_SAMPLES - 1 {
                request.gap_max
            } else {
                request.gap_min + step * i as f64
            };
            Sample {
                gap,
                depth: feasible_depth(request, lens, gap).map(|(d, _)| d),
            }
        })
        .collect()
}

fn achievable_range(focal_length: f64, samples: &[Sample]) -> AchievableRange {
    let depths = samples.iter().filter_map(|s| s.depth);
    let (lo, hi) = depths.fold((None::<f64>, None::<f64>), |(lo, hi), d| {
        (
            Some(lo.map_or(d, |l| l.min(d))),
            Some(hi.map_or(d, |h| h.max(d))),
        )
    });
    AchievableRange {
        focal_length,
        min_depth: lo,
        max_depth: hi,
    }
}

fn candidate_hits(request: &PlanRequest, lens: ThinLens, samples: &[Sample]) -> Vec<PlanResult> {
    let target = request.target_depth;
    let mut hits = Vec::new();
    for (i, s) in samples.iter().enumerate() {
        let Some(d) = s.depth else { continue };
        if d == target {
            hits.extend(make_hit(request, lens, s.gap));
            continue;
        }
        let Some(next) = samples.get(i + 1) else {
            continue;
        };
        let Some(dn) = next.depth else { continue };
        if dn != target && (d - target).signum() != (dn - target).signum() {
            if let Some(gap) = bisect(request, lens, s.gap, d - target, next.gap) {
                hits.extend(make_hit(request, lens, gap));
            }
        }
    }
    hits
}

fn bisect(
    request: &PlanRequest,
    lens: ThinLens,
    mut lo: f64,
    mut g_lo: f64,
    mut hi: f64,
) -> Option<f64> {
    let target = request.target_depth;
    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        let (d, _) = feasible_depth(request, lens, mid)?;
        let g = d - target;
        if g == 0.0 {
            return Some(mid);
        }
        if g.signum() == g_lo.signum() {
            lo = mid;
            g_lo = g;
        } else {
            hi = mid;
        }
        let width = hi - lo;
        if width < GAP_TOLERANCE && g.abs() <= DEPTH_TOLERANCE {
            break;
        }
        if width <= f64::EPSILON * hi {
            break;
        }
    }
    Some(0.5 * (lo + hi))
}

fn make_hit(request: &PlanRequest, lens: ThinLens, gap: f64) -> Option<PlanResult> {
    let (achieved_depth, scenario) = feasible_depth(request, lens, gap)?;
    Some(PlanResult {
        focal_length: lens.focal_length(),
        gap,
        scenario,
        achieved_depth,
        residual: (achieved_depth - request.target_depth).abs(),
    })
}
