use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use lensspoof_core::attack::{
    evaluate, plan_attack, sweep, OpticalStack, PlanRequest, ScenarioKind, SweepGrid, SweepRow,
    DEFAULT_CAMERA_FOCAL_LENGTH,
};
use lensspoof_core::defense::{
    detect, tiled_blur_map, DetectionVerdict, DEFAULT_MIN_FRACTION, DEFAULT_SCORE_THRESHOLD,
    DEFAULT_TILE_SIZE,
};
use lensspoof_core::image_sim::{simulate_attack_view, stack_blur_sigma, DEFAULT_BLUR_PER_METER};
use lensspoof_core::optics::ThinLens;
use lensspoof_core::{ray, Error, RasterImage, RegionSpec};
use serde::Serialize;

use crate::config::RunConfig;
use crate::report::{self, sig6, AGREEMENT_TOLERANCE};
use crate::units::{FocalSpec, Length};
use crate::{Cli, CliError, Command, DetectArgs, GridArgs, PlanArgs, PredictArgs, SimulateArgs};

type CmdResult = Result<(), CliError>;

const DEFAULT_GAP_MIN: f64 = 0.01;
const DEFAULT_GAP_MAX: f64 = 0.15;

pub(crate) fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let config = match &cli.config {
        Some(path) => RunConfig::load(path).map_err(|e| CliError::Usage(e.to_string()))?,
        None => RunConfig::default(),
    };
    let fc = cli
        .fc
        .or(config.camera_focal_length)
        .map(Length::meters)
        .unwrap_or(DEFAULT_CAMERA_FOCAL_LENGTH);
    match &cli.command {
        Command::Predict(args) => predict(args, fc, out),
        Command::Sweep(args) => {
            let grid = resolve_grid(args, &config, fc, false)?;
            let rows = sweep(&grid);
            emit_csv(args, &config, out, |w| report::write_sweep_csv(&rows, w))
        }
        Command::Divergence(args) => {
            let grid = resolve_grid(args, &config, fc, true)?;
            let rows = sweep(&grid);
            summarize_divergence(&rows, err)?;
            emit_csv(args, &config, out, |w| {
                report::write_divergence_csv(&rows, w)
            })
        }
        Command::Plan(args) => plan(args, &config, fc, out),
        Command::Simulate(args) => simulate(args, &config, fc, out),
        Command::Detect(args) => run_detect(args, &config, out),
    }
}

fn missing(flag: &str, field: &str) -> CliError {
    CliError::Usage(format!("missing {flag} (or {field} in --config)"))
}

fn build_stack(f: FocalSpec, gap: Length, d_o1: Length, fc: f64) -> Result<OpticalStack, Error> {
    let lens = f.meters().map(ThinLens::new).transpose()?;
    OpticalStack::new(lens, gap.meters(), fc, d_o1.meters())
}

#[derive(Serialize)]
struct PredictReport {
    stack: OpticalStack,
    scenario: ScenarioKind,
    feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    infeasibility_reason: Option<&'static str>,
    m_total: f64,
    m_ori: f64,
    expected_depth_m: f64,
    oracle_mag: f64,
    divergence: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleDetail>,
}

#[derive(Serialize)]
struct OracleDetail {
    image_distance_m: f64,
    image_magnification: f64,
    benign_image_distance_m: f64,
    focus_shift_m: f64,
}

fn predict(args: &PredictArgs, fc: f64, out: &mut dyn Write) -> CmdResult {
    let stack = build_stack(args.focal_length, args.gap, args.object_distance, fc)?;
    let outcome = evaluate(&stack)?;
    let oracle = if args.oracle {
        let image = ray::stack_image(&stack)?;
        let benign = ray::benign_image(&stack)?;
        Some(OracleDetail {
            image_distance_m: image.distance,
            image_magnification: image.magnification,
            benign_image_distance_m: benign.distance,
            focus_shift_m: image.distance - benign.distance,
        })
    } else {
        None
    };
    let rep = PredictReport {
        stack,
        scenario: outcome.scenario,
        feasible: outcome.feasible(),
        infeasibility_reason: outcome.scenario.infeasibility_reason(),
        m_total: outcome.formation.m_total,
        m_ori: outcome.formation.m_ori,
        expected_depth_m: outcome.expected_depth,
        oracle_mag: outcome.oracle_magnification,
        divergence: outcome.divergence,
        oracle,
    };
    if args.json {
        serde_json::to_writer_pretty(&mut *out, &rep).map_err(std::io::Error::from)?;
        writeln!(out)?;
        return Ok(());
    }
    writeln!(out, "scenario: {}", rep.scenario)?;
    match rep.infeasibility_reason {
        Some(reason) => writeln!(out, "feasible: false ({reason})")?,
        None => writeln!(out, "feasible: true")?,
    }
    writeln!(out, "m_total: {}", sig6(rep.m_total))?;
    writeln!(out, "m_ori: {}", sig6(rep.m_ori))?;
    writeln!(
        out,
        "expected depth: {:.2} m ({} m)",
        rep.expected_depth_m,
        sig6(rep.expected_depth_m)
    )?;
    writeln!(out, "oracle magnification: {}", sig6(rep.oracle_mag))?;
    writeln!(out, "divergence: {}", sig6(rep.divergence))?;
    if rep.divergence >= AGREEMENT_TOLERANCE {
        writeln!(
            out,
            "note: closed-form |m_total| {} differs from the ray trace {} by {:.2}%",
            sig6(rep.m_total.abs()),
            sig6(rep.oracle_mag.abs()),
            100.0 * rep.divergence
        )?;
    }
    if let Some(o) = &rep.oracle {
        writeln!(out, "oracle image distance: {} m", sig6(o.image_distance_m))?;
        writeln!(
            out,
            "oracle image magnification: {}",
            sig6(o.image_magnification)
        )?;
        writeln!(
            out,
            "benign image distance: {} m",
            sig6(o.benign_image_distance_m)
        )?;
        writeln!(out, "focus shift: {} m", sig6(o.focus_shift_m))?;
    }
    Ok(())
}

/// Tabulated concave and convex grid, used by `divergence` when no grid is given.
fn builtin_grid(fc: f64) -> SweepGrid {
    SweepGrid {
        focal_lengths: [-0.2, -0.3, -0.5, 0.2, 0.3, 0.5]
            .into_iter()
            .map(Some)
            .collect(),
        gaps: vec![0.02, 0.04, 0.08, 0.12],
        object_distances: vec![6.0, 9.0, 12.0],
        camera_focal_length: fc,
    }
}

fn resolve_grid(
    args: &GridArgs,
    config: &RunConfig,
    fc: f64,
    allow_builtin: bool,
) -> Result<SweepGrid, CliError> {
    let section = config.sweep.as_ref();
    if allow_builtin
        && section.is_none()
        && args.focal_lengths.is_none()
        && args.gaps.is_none()
        && args.object_distances.is_none()
    {
        return Ok(builtin_grid(fc));
    }
    let focal_lengths = args
        .focal_lengths
        .clone()
        .or_else(|| section.map(|s| s.focal_lengths.clone()))
        .ok_or_else(|| missing("--f", "sweep.focal_lengths"))?;
    let gaps = args
        .gaps
        .clone()
        .or_else(|| section.map(|s| s.gaps.clone()))
        .ok_or_else(|| missing("--db", "sweep.gaps"))?;
    let object_distances = args
        .object_distances
        .clone()
        .or_else(|| section.map(|s| s.object_distances.clone()))
        .ok_or_else(|| missing("--do", "sweep.object_distances"))?;
    Ok(SweepGrid {
        focal_lengths: focal_lengths.into_iter().map(FocalSpec::meters).collect(),
        gaps: gaps.into_iter().map(Length::meters).collect(),
        object_distances: object_distances.into_iter().map(Length::meters).collect(),
        camera_focal_length: fc,
    })
}

fn emit_csv(
    args: &GridArgs,
    config: &RunConfig,
    out: &mut dyn Write,
    write: impl FnOnce(&mut dyn Write) -> std::io::Result<()>,
) -> CmdResult {
    match args.out.as_ref().or(config.output.as_ref()) {
        Some(path) => {
            let mut file = BufWriter::new(create(path)?);
            write(&mut file)?;
            file.flush()?;
        }
        None => write(out)?,
    }
    Ok(())
}

fn summarize_divergence(rows: &[SweepRow], err: &mut dyn Write) -> CmdResult {
    let evaluated: Vec<_> = rows.iter().filter_map(|r| r.values.as_ref().ok()).collect();
    let disagreeing = evaluated
        .iter()
        .filter(|v| v.divergence >= AGREEMENT_TOLERANCE)
        .count();
    let worst = evaluated.iter().map(|v| v.divergence).fold(0.0, f64::max);
    writeln!(
        err,
        "{} of {} evaluated points disagree with the ray trace (worst {})",
        disagreeing,
        evaluated.len(),
        sig6(worst)
    )?;
    Ok(())
}

fn create(path: &Path) -> Result<File, CliError> {
    File::create(path).map_err(|e| CliError::Domain(Error::Io(format!("{}: {e}", path.display()))))
}

fn plan(args: &PlanArgs, config: &RunConfig, fc: f64, out: &mut dyn Write) -> CmdResult {
    let section = config.plan.clone().unwrap_or_default();
    let target = args
        .target
        .or(section.target_depth)
        .ok_or_else(|| missing("--target", "plan.target_depth"))?;
    let d_o1 = args
        .object_distance
        .or(section.object_distance)
        .ok_or_else(|| missing("--do", "plan.object_distance"))?;
    let candidates = args
        .candidates
        .clone()
        .or(section.candidate_focal_lengths)
        .ok_or_else(|| missing("--candidates", "plan.candidate_focal_lengths"))?;
    let request = PlanRequest {
        target_depth: target.meters(),
        object_distance: d_o1.meters(),
        camera_focal_length: fc,
        candidate_focal_lengths: candidates.into_iter().map(Length::meters).collect(),
        gap_min: args
            .gap_min
            .or(section.gap_min)
            .map_or(DEFAULT_GAP_MIN, Length::meters),
        gap_max: args
            .gap_max
            .or(section.gap_max)
            .map_or(DEFAULT_GAP_MAX, Length::meters),
    };
    match plan_attack(&request) {
        Ok(result) => {
            serde_json::to_writer_pretty(&mut *out, &result).map_err(std::io::Error::from)?;
            writeln!(out)?;
            Ok(())
        }
        Err(e @ Error::Unreachable { .. }) => {
            if let Error::Unreachable { target, ranges } = &e {
                let report = serde_json::json!({
                    "error": e.name(),
                    "target_depth": target,
                    "achievable": ranges,
                });
                serde_json::to_writer_pretty(&mut *out, &report).map_err(std::io::Error::from)?;
                writeln!(out)?;
            }
            Err(e.into())
        }
        Err(e) => Err(e.into()),
    }
}

pub(crate) fn parse_region(s: &str) -> Result<RegionSpec, String> {
    if s.eq_ignore_ascii_case("full") {
        return Ok(RegionSpec::Full);
    }
    let body = s
        .strip_prefix("circle:")
        .ok_or_else(|| format!("'{s}' is neither 'full' nor 'circle:CX,CY,R'"))?;
    let parts: Vec<f64> = body
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|e| format!("'{p}': {e}")))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [center_x, center_y, radius] => Ok(RegionSpec::Circle {
            center_x,
            center_y,
            radius,
        }),
        _ => Err(format!("'{s}' needs exactly three numbers")),
    }
}

#[derive(Serialize)]
struct SimulateSidecar {
    input: PathBuf,
    output: PathBuf,
    stack: OpticalStack,
    region: RegionSpec,
    scenario: ScenarioKind,
    feasible: bool,
    magnification: f64,
    depth_scale: f64,
    blur_sigma: f64,
    object_distance_m: f64,
    expected_depth_m: f64,
    divergence: f64,
}

fn simulate(args: &SimulateArgs, config: &RunConfig, fc: f64, out: &mut dyn Write) -> CmdResult {
    let section = config.simulate.clone().unwrap_or_default();
    let input = args
        .input
        .clone()
        .or(section.input)
        .ok_or_else(|| missing("--input", "simulate.input"))?;
    let output = args
        .output
        .clone()
        .or(section.output)
        .ok_or_else(|| missing("--output", "simulate.output"))?;
    let sidecar = args
        .sidecar
        .clone()
        .or(section.sidecar)
        .unwrap_or_else(|| output.with_extension("json"));
    let f = args
        .focal_length
        .or(section.focal_length)
        .ok_or_else(|| missing("--f", "simulate.focal_length"))?;
    let gap = args
        .gap
        .or(section.gap)
        .ok_or_else(|| missing("--db", "simulate.gap"))?;
    let d_o1 = args
        .object_distance
        .or(section.object_distance)
        .ok_or_else(|| missing("--do", "simulate.object_distance"))?;
    let region = args.region.or(section.region).unwrap_or(RegionSpec::Full);

    let stack = build_stack(f, gap, d_o1, fc)?;
    // Flag-level choices beat config-level ones; a fixed sigma beats the mapping.
    let sigma = match (
        args.sigma,
        args.blur_per_meter,
        section.sigma,
        section.blur_per_meter,
    ) {
        (Some(s), _, _, _) => s,
        (None, Some(k), _, _) => stack_blur_sigma(&stack, k)?,
        (None, None, Some(s), _) => s,
        (None, None, None, k) => stack_blur_sigma(&stack, k.unwrap_or(DEFAULT_BLUR_PER_METER))?,
    };

    let image = RasterImage::load(&input)?;
    let view = simulate_attack_view(&image, &stack, &region, sigma)?;
    view.image.save(&output)?;
    let car = SimulateSidecar {
        input,
        output: output.clone(),
        stack,
        region,
        scenario: view.outcome.scenario,
        feasible: view.outcome.feasible(),
        magnification: view.magnification,
        depth_scale: view.depth_scale,
        blur_sigma: view.blur_sigma,
        object_distance_m: stack.object_distance,
        expected_depth_m: view.outcome.expected_depth,
        divergence: view.outcome.divergence,
    };
    let mut file = BufWriter::new(create(&sidecar)?);
    serde_json::to_writer_pretty(&mut file, &car).map_err(std::io::Error::from)?;
    writeln!(file)?;
    file.flush()?;
    writeln!(
        out,
        "wrote {} (magnification {}, depth scale {}, sigma {}) and {}",
        output.display(),
        sig6(view.magnification),
        sig6(view.depth_scale),
        sig6(view.blur_sigma),
        sidecar.display()
    )?;
    Ok(())
}

#[derive(Serialize)]
struct DetectReport {
    #[serde(flatten)]
    verdict: DetectionVerdict,
    tile_size: usize,
    score_threshold: f64,
    min_fraction: f64,
    rows: usize,
    cols: usize,
    scores: Vec<f64>,
}

fn run_detect(args: &DetectArgs, config: &RunConfig, out: &mut dyn Write) -> CmdResult {
    let section = config.detect.clone().unwrap_or_default();
    let input = args
        .input
        .clone()
        .or(section.input)
        .ok_or_else(|| missing("--input", "detect.input"))?;
    let tile_size = args
        .tile_size
        .or(section.tile_size)
        .unwrap_or(DEFAULT_TILE_SIZE);
    let score_threshold = args
        .threshold
        .or(section.score_threshold)
        .unwrap_or(DEFAULT_SCORE_THRESHOLD);
    let min_fraction = args
        .min_fraction
        .or(section.min_fraction)
        .unwrap_or(DEFAULT_MIN_FRACTION);

    let image = RasterImage::load(&input)?;
    let map = tiled_blur_map(&image, tile_size)?;
    let verdict = detect(&map, score_threshold, min_fraction)?;
    let rep = DetectReport {
        verdict,
        tile_size,
        score_threshold,
        min_fraction,
        rows: map.rows,
        cols: map.cols,
        scores: map.scores,
    };
    match args.output.clone().or(section.output) {
        Some(path) => {
            let mut file = BufWriter::new(create(&path)?);
            serde_json::to_writer_pretty(&mut file, &rep).map_err(std::io::Error::from)?;
            writeln!(file)?;
            file.flush()?;
            writeln!(
                out,
                "attacked: {} ({} of {} tiles blurry)",
                rep.verdict.attacked,
                rep.verdict.blurry_tiles.len(),
                rep.scores.len()
            )?;
        }
        None => {
            serde_json::to_writer_pretty(&mut *out, &rep).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
    }
    Ok(())
}
