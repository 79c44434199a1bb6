//! Text renderings: the sweep CSV, the divergence table and number formatting.

use std::io::Write;

use lensspoof_core::attack::SweepRow;

pub const SWEEP_HEADER: [&str; 10] = [
    "f_m",
    "db_m",
    "do1_m",
    "scenario",
    "m_total",
    "m_ori",
    "expected_depth_m",
    "oracle_mag",
    "divergence",
    "feasible",
];

pub const DIVERGENCE_HEADER: [&str; 8] = [
    "f_m",
    "db_m",
    "do1_m",
    "scenario",
    "model_mag",
    "oracle_mag",
    "divergence",
    "agrees",
];

/// Agreement threshold between the closed form and the traced magnification.
pub const AGREEMENT_TOLERANCE: f64 = 1e-9;

/// Six significant digits with trailing zeros kept, in the style of C's
/// `%#.6g` but without a dangling decimal point.
pub fn sig6(value: f64) -> String {
    if !value.is_finite() {
        return if value.is_nan() {
            "nan".into()
        } else if value > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    if value == 0.0 {
        return if value.is_sign_negative() {
            "-0.00000"
        } else {
            "0.00000"
        }
        .into();
    }
    // Rounding through the exponent form settles the decade after rounding.
    let sci = format!("{value:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..6).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        format!("{value:.*}", (5 - exp) as usize)
    }
}

/// Input coordinates are reference in their shortest exact form.
fn coordinate(value: Option<f64>) -> String {
    match value {
        Some(v) => v.to_string(),
        None => "none".into(),
    }
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: W) -> std::io::Result<()> {
    let mut w = csv_writer(out);
    w.write_record(SWEEP_HEADER)?;
    for row in rows {
        let mut record = vec![
            coordinate(row.focal_length),
            coordinate(Some(row.gap)),
            coordinate(Some(row.object_distance)),
        ];
        match &row.values {
            Ok(v) => record.extend([
                v.scenario.to_string(),
                sig6(v.m_total),
                sig6(v.m_ori),
                sig6(v.expected_depth),
                sig6(v.oracle_magnification),
                sig6(v.divergence),
                v.feasible.to_string(),
            ]),
            Err(e) => {
                record.push(format!("error:{}", e.name()));
                record.extend(std::iter::repeat_n(String::new(), 5));
                record.push("false".into());
            }
        }
        w.write_record(&record)?;
    }
    w.flush()
}

pub fn write_divergence_csv<W: Write>(rows: &[SweepRow], out: W) -> std::io::Result<()> {
    let mut w = csv_writer(out);
    w.write_record(DIVERGENCE_HEADER)?;
    for row in rows {
        let mut record = vec![
            coordinate(row.focal_length),
            coordinate(Some(row.gap)),
            coordinate(Some(row.object_distance)),
        ];
        match &row.values {
            Ok(v) => record.extend([
                v.scenario.to_string(),
                sig6(v.m_total.abs()),
                sig6(v.oracle_magnification.abs()),
                sig6(v.divergence),
                (v.divergence < AGREEMENT_TOLERANCE).to_string(),
            ]),
            Err(e) => {
                record.push(format!("error:{}", e.name()));
                record.extend(std::iter::repeat_n(String::new(), 3));
                record.push("false".into());
            }
        }
        w.write_record(&record)?;
    }
    w.flush()
}
