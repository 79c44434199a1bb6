use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::optics::require_positive;

/// AER strictly below this counts as an accurate attack.
pub const ACCURACY_THRESHOLD: f64 = 0.15;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DepthMetrics {
    /// Attack distortion rate, `|attacked - benign| / benign`.
    pub adr: f64,
    /// Attack error rate, `|attacked - target| / target`.
    pub aer: f64,
    pub accurate: bool,
}

pub fn adr(attacked: f64, benign: f64) -> Result<f64> {
    require_positive("attacked", attacked)?;
    require_positive("benign", benign)?;
    Ok((attacked - benign).abs() / benign)
}

pub fn aer(attacked: f64, target: f64) -> Result<f64> {
    require_positive("attacked", attacked)?;
    require_positive("target", target)?;
    Ok((attacked - target).abs() / target)
}

pub fn depth_metrics(attacked: f64, benign: f64, target: f64) -> Result<DepthMetrics> {
    let adr = adr(attacked, benign)?;
    let aer = aer(attacked, target)?;
    Ok(DepthMetrics {
        adr,
        aer,
        accurate: aer < ACCURACY_THRESHOLD,
    })
}

/// Stereo-trained disparity/depth relation `disparity = baseline * focal / depth`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DisparityParams {
    pub baseline: f64,
    pub focal_length_px: f64,
}

impl DisparityParams {
    pub fn new(baseline: f64, focal_length_px: f64) -> Result<Self> {
        require_positive("baseline", baseline)?;
        require_positive("focal_length_px", focal_length_px)?;
        Ok(Self {
            baseline,
            focal_length_px,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConversionDirection {
    ToDisparity,
    ToDepth,
}

pub fn disparity_depth_convert(
    params: &DisparityParams,
    value: f64,
    direction: ConversionDirection,
) -> Result<f64> {
    let name = match direction {
        ConversionDirection::ToDisparity => "depth",
        ConversionDirection::ToDepth => "disparity",
    };
    require_positive(name, value)?;
    // The relation is its own inverse.
    Ok(params.baseline * params.focal_length_px / value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn metric_examples() {
        let m = adr(0.36, 0.28).unwrap();
        assert!((m - 0.286).abs() < 5e-4);

        let m = depth_metrics(7.0, 7.0, 7.0).unwrap();
        assert_eq!((m.adr, m.aer, m.accurate), (0.0, 0.0, true));

        let e = aer(7.09, 5.82).unwrap();
        assert!((e - 0.219).abs() < 0.01, "{e}");
        assert!(!depth_metrics(7.09, 6.0, 5.82).unwrap().accurate);

        // Boundary: exactly 15% is not accurate.
        assert!(!depth_metrics(11.5, 10.0, 10.0).unwrap().accurate);
        assert!(depth_metrics(11.49, 10.0, 10.0).unwrap().accurate);

        assert!(depth_metrics(0.0, 1.0, 1.0).is_err());
        assert!(depth_metrics(1.0, -1.0, 1.0).is_err());
        assert!(aer(1.0, 0.0).is_err());
    }

    #[test]
    fn disparity_examples() {
        let unit = DisparityParams::new(1.0, 1.0).unwrap();
        assert_eq!(
            disparity_depth_convert(&unit, 2.0, ConversionDirection::ToDisparity).unwrap(),
            0.5
        );
        let p = DisparityParams::new(0.5, 700.0).unwrap();
        assert_eq!(
            disparity_depth_convert(&p, 10.0, ConversionDirection::ToDisparity).unwrap(),
            35.0
        );
        assert!(disparity_depth_convert(&p, 0.0, ConversionDirection::ToDepth).is_err());
        assert!(DisparityParams::new(0.0, 1.0).is_err());
    }

    proptest! {
        #[test]
        fn disparity_round_trip(b in 0.01f64..2.0, fpx in 1.0f64..5000.0, v in 1e-3f64..1e4) {
            let p = DisparityParams::new(b, fpx).unwrap();
            let d = disparity_depth_convert(&p, v, ConversionDirection::ToDisparity).unwrap();
            let back = disparity_depth_convert(&p, d, ConversionDirection::ToDepth).unwrap();
            prop_assert!(((back - v) / v).abs() < 1e-12);
        }

        #[test]
        fn metrics_scale_invariant(
            a in 0.1f64..100.0, b in 0.1f64..100.0, t in 0.1f64..100.0, k in 1e-3f64..1e3,
        ) {
            let m = depth_metrics(a, b, t).unwrap();
            let s = depth_metrics(a * k, b * k, t * k).unwrap();
            prop_assert!((m.adr - s.adr).abs() <= 1e-12 * m.adr.max(1.0));
            prop_assert!((m.aer - s.aer).abs() <= 1e-12 * m.aer.max(1.0));
        }
    }
}
