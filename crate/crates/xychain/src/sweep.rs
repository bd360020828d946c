//! Field sweeps over the chain parameters with CSV/JSON output and
//! peak-structure analysis.
//!
//! A sweep evaluates the nearest-neighbor thermal negativity on a uniform B
//! grid for every requested (pattern, γ) combination. Output is plot-ready
//! data only; the CSV schema is fixed so downstream checks can be scripted
//! against it.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::entanglement::thermal_pair_negativity;
use crate::error::{Error, Result};
use crate::model::{ChainSpec, FieldPattern};

/// Default negativity threshold below which local maxima are treated as
/// numerical ripple rather than structure.
pub const PEAK_THRESHOLD: f64 = 1e-4;

/// Largest number of grid points accepted in one sweep.
pub const MAX_GRID_POINTS: usize = 1_000_000;

/// Which field patterns a sweep covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternSelection {
    Uniform,
    Staggered,
    Both,
}

impl PatternSelection {
    /// Patterns in the fixed output order (uniform before staggered).
    pub fn patterns(self) -> Vec<FieldPattern> {
        match self {
            PatternSelection::Uniform => vec![FieldPattern::Uniform],
            PatternSelection::Staggered => vec![FieldPattern::Staggered],
            PatternSelection::Both => vec![FieldPattern::Uniform, FieldPattern::Staggered],
        }
    }
}

/// Output file format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Parameters of one sweep run.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub patterns: PatternSelection,
    pub gammas: Vec<f64>,
    pub field_min: f64,
    pub field_max: f64,
    pub field_step: f64,
    pub temperature: f64,
    pub n_sites: usize,
    /// 1-based first site of the reported pair; the partner is site+1 mod N.
    pub pair_site: usize,
}

impl SweepConfig {
    /// Validate ranges and sizes, returning the B grid on success.
    pub fn validate(&self) -> Result<Vec<f64>> {
        if self.gammas.is_empty() {
            return Err(Error::InvalidSweepConfig("gamma list is empty".into()));
        }
        if !self.field_min.is_finite() || !self.field_max.is_finite() {
            return Err(Error::InvalidSweepConfig(
                "field bounds must be finite".into(),
            ));
        }
        if self.field_min >= self.field_max {
            return Err(Error::InvalidSweepConfig(format!(
                "field_min = {} must be below field_max = {}",
                self.field_min, self.field_max
            )));
        }
        if self.field_step <= 0.0 || !self.field_step.is_finite() {
            return Err(Error::InvalidSweepConfig(format!(
                "field_step = {} must be positive",
                self.field_step
            )));
        }
        let span = (self.field_max - self.field_min) / self.field_step;
        let n_points = (span + 1.0 + 1e-9).floor() as usize;
        if n_points > MAX_GRID_POINTS {
            return Err(Error::InvalidSweepConfig(format!(
                "grid of {n_points} points exceeds the cap of {MAX_GRID_POINTS}"
            )));
        }
        // surface bad N / pair early rather than at the first grid point
        let probe = ChainSpec::new(self.n_sites, 0.0, 0.0, FieldPattern::Uniform)?;
        if self.pair_site == 0 || self.pair_site > probe.n_sites() {
            return Err(Error::InvalidSweepConfig(format!(
                "pair site {} outside 1..={}",
                self.pair_site,
                probe.n_sites()
            )));
        }
        if self.temperature <= 0.0 || !self.temperature.is_finite() {
            return Err(Error::InvalidSweepConfig(format!(
                "temperature = {} must be positive",
                self.temperature
            )));
        }
        Ok((0..n_points)
            .map(|k| self.field_min + k as f64 * self.field_step)
            .collect())
    }
}

/// One (pattern, γ) curve of a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepSeries {
    pub pattern: String,
    pub gamma: f64,
    pub samples: Vec<Sample>,
    /// B locations of strict interior maxima above [`PEAK_THRESHOLD`].
    pub peaks: Vec<f64>,
}

/// A single (B, negativity) sample.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Sample {
    pub b: f64,
    pub negativity: f64,
}

/// Echo of the configuration a sweep ran with.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub patterns: Vec<String>,
    pub gammas: Vec<f64>,
    pub field_min: f64,
    pub field_max: f64,
    pub field_step: f64,
    pub temperature: f64,
    pub n_sites: usize,
    pub pair_site: usize,
}

/// All series produced by one sweep, in deterministic order.
#[derive(Debug, Clone, Serialize)]
pub struct SweepResult {
    pub config: ConfigEcho,
    pub series: Vec<SweepSeries>,
}

/// Run the sweep: one series per (pattern, γ), each sampled on the shared B
/// grid in ascending order. Grid points are evaluated in parallel and merged
/// back in grid order, so identical configs give identical results.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepResult> {
    let grid = config.validate()?;
    let mut series = Vec::new();
    for pattern in config.patterns.patterns() {
        for &gamma in &config.gammas {
            let values: Result<Vec<f64>> = grid
                .par_iter()
                .map(|&b| {
                    let spec = ChainSpec::new(config.n_sites, gamma, b, pattern)?;
                    Ok(thermal_pair_negativity(&spec, config.temperature, config.pair_site)?.value)
                })
                .collect();
            let values = values?;
            let samples: Vec<Sample> = grid
                .iter()
                .zip(values.iter())
                .map(|(&b, &negativity)| Sample { b, negativity })
                .collect();
            let pairs: Vec<(f64, f64)> = samples.iter().map(|s| (s.b, s.negativity)).collect();
            let peaks = count_peaks(&pairs, PEAK_THRESHOLD)?;
            series.push(SweepSeries {
                pattern: pattern.name().to_string(),
                gamma,
                samples,
                peaks,
            });
        }
    }
    Ok(SweepResult {
        config: ConfigEcho {
            patterns: config
                .patterns
                .patterns()
                .iter()
                .map(|p| p.name().to_string())
                .collect(),
            gammas: config.gammas.clone(),
            field_min: config.field_min,
            field_max: config.field_max,
            field_step: config.field_step,
            temperature: config.temperature,
            n_sites: config.n_sites,
            pair_site: config.pair_site,
        },
        series,
    })
}

/// Locations of strict interior local maxima with value above `threshold`.
///
/// A plateau of consecutive equal values that rises on the left and falls on
/// the right counts as a single peak at the plateau midpoint. Needs at least
/// three samples.
pub fn count_peaks(samples: &[(f64, f64)], threshold: f64) -> Result<Vec<f64>> {
    if samples.len() < 3 {
        return Err(Error::TooFewSamples(samples.len()));
    }
    let n = samples.len();
    let mut peaks = Vec::new();
    let mut i = 1;
    while i < n - 1 {
        let mut j = i;
        while j + 1 < n && samples[j + 1].1 == samples[i].1 {
            j += 1;
        }
        let rises = samples[i].1 > samples[i - 1].1;
        let falls = j < n - 1 && samples[j].1 > samples[j + 1].1;
        if rises && falls && samples[i].1 > threshold {
            peaks.push(0.5 * (samples[i].0 + samples[j].0));
        }
        i = j + 1;
    }
    Ok(peaks)
}

/// Format a float with 12 significant digits, the fixed precision of the CSV
/// schema.
fn fmt12(x: f64) -> String {
    format!("{x:.11e}")
}

impl SweepResult {
    /// Write the fixed-schema CSV: header
    /// `pattern,gamma,n_sites,temperature,B,negativity`, one row per sample,
    /// floats with 12 significant digits, LF line endings.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        out.write_all(b"pattern,gamma,n_sites,temperature,B,negativity\n")?;
        for series in &self.series {
            for sample in &series.samples {
                let line = format!(
                    "{},{},{},{},{},{}\n",
                    series.pattern,
                    fmt12(series.gamma),
                    self.config.n_sites,
                    fmt12(self.config.temperature),
                    fmt12(sample.b),
                    fmt12(sample.negativity),
                );
                out.write_all(line.as_bytes())?;
            }
        }
        Ok(())
    }

    /// Write the JSON mirror of the CSV content plus the peaks arrays.
    pub fn write_json<W: Write>(&self, mut out: W) -> Result<()> {
        serde_json::to_writer_pretty(&mut out, self)
            .map_err(|e| Error::InvalidSweepConfig(format!("json serialization failed: {e}")))?;
        out.write_all(b"\n")?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base_config() -> SweepConfig {
        SweepConfig {
            patterns: PatternSelection::Both,
            gammas: vec![0.0, 0.5],
            field_min: -1.0,
            field_max: 1.0,
            field_step: 0.2,
            temperature: 0.2,
            n_sites: 2,
            pair_site: 1,
        }
    }

    #[test]
    fn grid_has_expected_point_count() {
        let grid = base_config().validate().unwrap();
        assert_eq!(grid.len(), 11);
        assert!((grid[0] + 1.0).abs() < 1e-15);
        assert!((grid[10] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn series_and_sample_counts() {
        let result = run_sweep(&base_config()).unwrap();
        assert_eq!(result.series.len(), 4);
        for s in &result.series {
            assert_eq!(s.samples.len(), 11);
            // samples ascend in B
            assert!(s.samples.windows(2).all(|w| w[0].b < w[1].b));
        }
    }

    #[test]
    fn gamma_zero_series_agree_pointwise() {
        let mut config = base_config();
        config.gammas = vec![0.0];
        config.n_sites = 4;
        let result = run_sweep(&config).unwrap();
        let uniform = &result.series[0];
        let staggered = &result.series[1];
        for (u, s) in uniform.samples.iter().zip(&staggered.samples) {
            assert!((u.negativity - s.negativity).abs() < 1e-10);
        }
    }

    #[test]
    fn rejects_bad_configs() {
        let mut c = base_config();
        c.field_min = 2.0;
        assert!(matches!(
            c.validate().unwrap_err(),
            Error::InvalidSweepConfig(_)
        ));
        let mut c = base_config();
        c.field_step = 0.0;
        assert!(c.validate().is_err());
        let mut c = base_config();
        c.field_step = 1e-9;
        c.field_min = -2.0;
        c.field_max = 2.0;
        assert!(c.validate().is_err(), "grid cap");
        let mut c = base_config();
        c.n_sites = 3;
        assert!(c.validate().is_err());
        let mut c = base_config();
        c.pair_site = 3;
        assert!(c.validate().is_err());
        let mut c = base_config();
        c.temperature = 0.0;
        assert!(c.validate().is_err());
        let mut c = base_config();
        c.gammas.clear();
        assert!(c.validate().is_err());
    }

    #[test]
    fn count_peaks_synthetic() {
        let single = [(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)];
        assert_eq!(count_peaks(&single, 1e-4).unwrap(), vec![1.0]);

        let flat = [(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)];
        assert!(count_peaks(&flat, 1e-4).unwrap().is_empty());

        // plateau counts once, at its midpoint
        let plateau = [(0.0, 0.0), (1.0, 1.0), (2.0, 1.0), (3.0, 1.0), (4.0, 0.0)];
        assert_eq!(count_peaks(&plateau, 1e-4).unwrap(), vec![2.0]);

        // below-threshold maxima are ignored
        let tiny = [(0.0, 0.0), (1.0, 5e-5), (2.0, 0.0)];
        assert!(count_peaks(&tiny, 1e-4).unwrap().is_empty());

        // boundary samples are never peaks
        let edge = [(0.0, 2.0), (1.0, 1.0), (2.0, 3.0)];
        assert!(count_peaks(&edge, 1e-4).unwrap().is_empty());

        // rising plateau that keeps rising is not a peak
        let staircase = [(0.0, 0.0), (1.0, 1.0), (2.0, 1.0), (3.0, 2.0), (4.0, 0.0)];
        assert_eq!(count_peaks(&staircase, 1e-4).unwrap(), vec![3.0]);
    }

    #[test]
    fn count_peaks_rejects_short_input() {
        assert!(matches!(
            count_peaks(&[(0.0, 1.0), (1.0, 2.0)], 1e-4).unwrap_err(),
            Error::TooFewSamples(2)
        ));
    }

    #[test]
    fn csv_output_schema() {
        let mut config = base_config();
        config.gammas = vec![0.5];
        config.patterns = PatternSelection::Uniform;
        let result = run_sweep(&config).unwrap();
        let mut buf = Vec::new();
        result.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "pattern,gamma,n_sites,temperature,B,negativity"
        );
        let first = lines.next().unwrap();
        let fields: Vec<&str> = first.split(',').collect();
        assert_eq!(fields.len(), 6);
        assert_eq!(fields[0], "uniform");
        assert_eq!(fields[2], "2");
        assert!(fields[4].parse::<f64>().is_ok());
        // 12 rows total (header + 11 samples), LF endings only
        assert_eq!(text.lines().count(), 12);
        assert!(!text.contains('\r'));
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn json_output_mirrors_csv_and_adds_peaks() {
        let mut config = base_config();
        config.gammas = vec![0.5];
        config.patterns = PatternSelection::Staggered;
        let result = run_sweep(&config).unwrap();
        let mut buf = Vec::new();
        result.write_json(&mut buf).unwrap();
        let value: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(value["config"]["n_sites"], 2);
        let series = value["series"].as_array().unwrap();
        assert_eq!(series.len(), 1);
        assert_eq!(series[0]["pattern"], "staggered");
        assert_eq!(series[0]["samples"].as_array().unwrap().len(), 11);
        assert!(series[0]["peaks"].is_array());
    }

    #[test]
    fn identical_configs_give_identical_bytes() {
        let config = base_config();
        let mut a = Vec::new();
        let mut b = Vec::new();
        run_sweep(&config).unwrap().write_csv(&mut a).unwrap();
        run_sweep(&config).unwrap().write_csv(&mut b).unwrap();
        assert_eq!(a, b);
        let mut aj = Vec::new();
        let mut bj = Vec::new();
        run_sweep(&config).unwrap().write_json(&mut aj).unwrap();
        run_sweep(&config).unwrap().write_json(&mut bj).unwrap();
        assert_eq!(aj, bj);
    }

    #[test]
    fn symmetric_grid_respects_field_sign_symmetry() {
        let mut config = base_config();
        config.gammas = vec![0.5];
        config.n_sites = 4;
        let result = run_sweep(&config).unwrap();
        for series in &result.series {
            let vals = &series.samples;
            let n = vals.len();
            for k in 0..n / 2 {
                assert!(
                    (vals[k].negativity - vals[n - 1 - k].negativity).abs() < 1e-9,
                    "asymmetry at B = {}",
                    vals[k].b
                );
            }
        }
    }
}
