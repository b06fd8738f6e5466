//! Configuration parsing and the `field` / `simulate` / `verify` commands.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::connection::{sample_field, GridSpec};
use crate::error::Error;
use crate::gait::{integrate_gait, net_displacement, Direction, GaitSpec, IntegratorSettings, Method, Waypoint};
use crate::io::{write_field_csv, write_trajectory_csv};
use crate::model::{DragMode, GeometryVariant, Model, ShapeState, SwimmerParams};
use crate::verify::{run_verify, write_summary_csv, VerifySpec};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("ConfigError: at `{path}`: {reason}")]
    Config { path: String, reason: String },
    #[error(transparent)]
    Core(#[from] Error),
    #[error("IoError: {path}: {reason}")]
    Io { path: String, reason: String },
}

impl CliError {
    fn config(path: &str, reason: impl Into<String>) -> Self {
        CliError::Config {
            path: path.to_string(),
            reason: reason.into(),
        }
    }

    fn io(path: &Path, err: impl std::fmt::Display) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            reason: err.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
enum CommandName {
    Field,
    Simulate,
    Verify,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawParams {
    half_length: Option<f64>,
    drag_coefficient: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGrid {
    min: [f64; 2],
    max: [f64; 2],
    counts: [usize; 2],
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "snake_case")]
enum RawGaitKind {
    Square,
    Ellipse,
    Waypoints,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWaypoint {
    shape: [f64; 2],
    fraction: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGait {
    kind: RawGaitKind,
    amplitude: Option<f64>,
    amplitudes: Option<[f64; 2]>,
    period: Option<f64>,
    center: Option<[f64; 2]>,
    direction: Option<i64>,
    waypoints: Option<Vec<RawWaypoint>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVerify {
    samples: Option<usize>,
    range: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    command: CommandName,
    params: Option<RawParams>,
    drag_mode: Option<DragMode>,
    geometry: Option<GeometryVariant>,
    seed: Option<u64>,
    grid: Option<RawGrid>,
    gait: Option<RawGait>,
    steps_per_cycle: Option<usize>,
    cycles: Option<usize>,
    method: Option<Method>,
    verify: Option<RawVerify>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Task {
    Field(GridSpec<f64>),
    Simulate {
        gait: GaitSpec<f64>,
        settings: IntegratorSettings,
    },
    Verify(VerifySpec),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub model: Model<f64>,
    pub seed: u64,
    pub task: Task,
    pub output: PathBuf,
}

impl RunConfig {
    pub fn command(&self) -> &'static str {
        match self.task {
            Task::Field(_) => "field",
            Task::Simulate { .. } => "simulate",
            Task::Verify(_) => "verify",
        }
    }
}

fn reject_extra(present: bool, key: &str, command: &str) -> Result<(), CliError> {
    if present {
        return Err(CliError::config(key, format!("not used by command `{command}`")));
    }
    Ok(())
}

/// Parses and validates a JSON configuration, applying defaults.
pub fn parse_config(text: &str) -> Result<RunConfig, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: RawConfig = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        CliError::config(&path, e.into_inner().to_string())
    })?;

    let p = raw.params.as_ref();
    let params = SwimmerParams::new(
        p.and_then(|p| p.half_length).unwrap_or(1.0),
        p.and_then(|p| p.drag_coefficient).unwrap_or(1.0),
    )
    .map_err(|e| CliError::config("params", e.to_string()))?;
    let model = Model::new(
        params,
        raw.drag_mode.unwrap_or(DragMode::Corrected),
        raw.geometry.unwrap_or(GeometryVariant::Derived),
    );
    let seed = raw.seed.unwrap_or(0);

    let task = match raw.command {
        CommandName::Field => {
            for (present, key) in [
                (raw.gait.is_some(), "gait"),
                (raw.steps_per_cycle.is_some(), "steps_per_cycle"),
                (raw.cycles.is_some(), "cycles"),
                (raw.method.is_some(), "method"),
                (raw.verify.is_some(), "verify"),
            ] {
                reject_extra(present, key, "field")?;
            }
            let g = raw
                .grid
                .ok_or_else(|| CliError::config("grid", "required for command `field`"))?;
            let spec = GridSpec {
                min: g.min,
                max: g.max,
                counts: g.counts,
            };
            spec.validate().map_err(|e| CliError::config("grid", e.to_string()))?;
            Task::Field(spec)
        }
        CommandName::Simulate => {
            for (present, key) in [(raw.grid.is_some(), "grid"), (raw.verify.is_some(), "verify")] {
                reject_extra(present, key, "simulate")?;
            }
            let g = raw
                .gait
                .ok_or_else(|| CliError::config("gait", "required for command `simulate`"))?;
            let gait = gait_from_raw(g)?;
            let settings = IntegratorSettings {
                steps_per_cycle: raw.steps_per_cycle.unwrap_or(1000),
                cycles: raw.cycles.unwrap_or(1),
                method: raw.method.unwrap_or_default(),
            };
            if settings.steps_per_cycle < 8 {
                return Err(CliError::config("steps_per_cycle", "must be at least 8"));
            }
            Task::Simulate { gait, settings }
        }
        CommandName::Verify => {
            for (present, key) in [
                (raw.grid.is_some(), "grid"),
                (raw.gait.is_some(), "gait"),
                (raw.steps_per_cycle.is_some(), "steps_per_cycle"),
                (raw.cycles.is_some(), "cycles"),
                (raw.method.is_some(), "method"),
            ] {
                reject_extra(present, key, "verify")?;
            }
            let defaults = VerifySpec::default();
            let v = raw.verify.unwrap_or(RawVerify {
                samples: None,
                range: None,
            });
            let spec = VerifySpec {
                samples: v.samples.unwrap_or(defaults.samples),
                range: v.range.unwrap_or(defaults.range),
                seed,
            };
            if spec.samples == 0 {
                return Err(CliError::config("verify.samples", "must be positive"));
            }
            if !(spec.range > 0.0 && spec.range.is_finite()) {
                return Err(CliError::config("verify.range", "must be positive and finite"));
            }
            Task::Verify(spec)
        }
    };

    Ok(RunConfig {
        model,
        seed,
        task,
        output: PathBuf::from("."),
    })
}

fn gait_from_raw(g: RawGait) -> Result<GaitSpec<f64>, CliError> {
    let direction = match g.direction {
        None => Direction::Forward,
        Some(d) => Direction::from_sign(d).ok_or_else(|| CliError::config("gait.direction", "must be 1 or -1"))?,
    };
    let period = g.period.unwrap_or(1.0);
    let center = g.center.map(|c| ShapeState::new(c[0], c[1])).unwrap_or_default();
    let gait = match g.kind {
        RawGaitKind::Square => {
            reject_extra(g.amplitudes.is_some(), "gait.amplitudes", "square gaits")?;
            reject_extra(g.waypoints.is_some(), "gait.waypoints", "square gaits")?;
            let a = g
                .amplitude
                .ok_or_else(|| CliError::config("gait.amplitude", "required for square gaits"))?;
            GaitSpec {
                center,
                ..GaitSpec::square(a, period)
            }
        }
        RawGaitKind::Ellipse => {
            reject_extra(g.waypoints.is_some(), "gait.waypoints", "ellipse gaits")?;
            let amplitudes = match (g.amplitude, g.amplitudes) {
                (Some(a), None) => [a, a],
                (None, Some(a)) => a,
                (Some(_), Some(_)) => return Err(CliError::config("gait", "give either amplitude or amplitudes")),
                (None, None) => return Err(CliError::config("gait.amplitudes", "required for ellipse gaits")),
            };
            GaitSpec::ellipse(amplitudes, center, period)
        }
        RawGaitKind::Waypoints => {
            reject_extra(g.amplitude.is_some(), "gait.amplitude", "waypoint gaits")?;
            reject_extra(g.amplitudes.is_some(), "gait.amplitudes", "waypoint gaits")?;
            reject_extra(g.center.is_some(), "gait.center", "waypoint gaits")?;
            let points = g
                .waypoints
                .ok_or_else(|| CliError::config("gait.waypoints", "required for waypoint gaits"))?
                .into_iter()
                .map(|w| Waypoint {
                    shape: ShapeState::new(w.shape[0], w.shape[1]),
                    fraction: w.fraction,
                })
                .collect();
            GaitSpec::waypoints(points, period)
        }
    }
    .with_direction(direction);
    gait.validate().map_err(|e| CliError::config("gait", e.to_string()))?;
    Ok(gait)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Holonomy {
    pub dx: f64,
    pub dy: f64,
    pub dtheta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimulationSummary {
    pub holonomy: Holonomy,
    pub cycles: usize,
    pub steps: usize,
}

fn create(dir: &Path, name: &str) -> Result<(PathBuf, BufWriter<File>), CliError> {
    let path = dir.join(name);
    let file = File::create(&path).map_err(|e| CliError::io(&path, e))?;
    Ok((path, BufWriter::new(file)))
}

fn write_json<T: Serialize>(dir: &Path, name: &str, value: &T) -> Result<PathBuf, CliError> {
    let (path, mut w) = create(dir, name)?;
    serde_json::to_writer_pretty(&mut w, value).map_err(|e| CliError::io(&path, e))?;
    w.write_all(b"\n")
        .and_then(|_| w.flush())
        .map_err(|e| CliError::io(&path, e))?;
    Ok(path)
}

fn write_with(
    dir: &Path,
    name: &str,
    f: impl FnOnce(&mut BufWriter<File>) -> std::io::Result<()>,
) -> Result<PathBuf, CliError> {
    let (path, mut w) = create(dir, name)?;
    f(&mut w).and_then(|_| w.flush()).map_err(|e| CliError::io(&path, e))?;
    Ok(path)
}

/// Executes the configured command and returns the files written.
pub fn run(config: &RunConfig) -> Result<Vec<PathBuf>, CliError> {
    let dir = &config.output;
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    match &config.task {
        Task::Field(spec) => {
            let grid = sample_field(spec, &config.model)?;
            Ok(vec![write_with(dir, "field.csv", |w| write_field_csv(&grid, w))?])
        }
        Task::Simulate { gait, settings } => {
            let traj = integrate_gait(gait, &config.model, *settings)?;
            let h = net_displacement(&traj)?;
            let zero = |v: f64| if v == 0.0 { 0.0 } else { v };
            let summary = SimulationSummary {
                holonomy: Holonomy {
                    dx: zero(h.x),
                    dy: zero(h.y),
                    dtheta: zero(h.theta),
                },
                cycles: settings.cycles,
                steps: settings.cycles * settings.steps_per_cycle,
            };
            Ok(vec![
                write_with(dir, "trajectory.csv", |w| write_trajectory_csv(&traj, w))?,
                write_json(dir, "summary.json", &summary)?,
            ])
        }
        Task::Verify(spec) => {
            let report = run_verify(spec)?;
            Ok(vec![
                write_json(dir, "errata.json", &report)?,
                write_with(dir, "verify_summary.csv", |w| write_summary_csv(&report, w))?,
            ])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_defaults() {
        let c = parse_config(r#"{"command":"field","grid":{"min":[-1,-1],"max":[1,1],"counts":[3,3]}}"#).unwrap();
        assert_eq!(c.model, Model::corrected(SwimmerParams::unit()));
        assert_eq!(c.seed, 0);
        assert_eq!(c.command(), "field");
        match c.task {
            Task::Field(g) => assert_eq!(g.counts, [3, 3]),
            _ => panic!("wrong task"),
        }
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn simulate_square() {
        let c = parse_config(
            r#"{"command":"simulate","gait":{"kind":"square","amplitude":0.7854,"period":1.0},"steps_per_cycle":1000}"#,
        )
        .unwrap();
        match c.task {
            Task::Simulate { gait, settings } => {
                assert_eq!(gait, GaitSpec::square(0.7854, 1.0));
                assert_eq!(settings, IntegratorSettings::default());
            }
            _ => panic!("wrong task"),
        }
    }

    #[test]
    fn unknown_key_is_named() {
        let err = parse_config(r#"{"command":"field","gird":{"min":[0,0]}}"#).unwrap_err();
        let msg = err.to_string();
        assert!(msg.starts_with("ConfigError"));
        assert!(msg.contains("gird"), "{msg}");
    }

    #[test]
    fn nested_paths_are_reported() {
        let err = parse_config(r#"{"command":"simulate","gait":{"kind":"square","amplitude":"big"}}"#).unwrap_err();
        match err {
            CliError::Config { path, .. } => assert_eq!(path, "gait.amplitude"),
            other => panic!("{other}"),
        }
    }

    #[test]
    fn semantic_errors() {
        for text in [
            r#"{"command":"field"}"#,
            r#"{"command":"field","grid":{"min":[1,0],"max":[0,1],"counts":[3,3]}}"#,
            r#"{"command":"field","grid":{"min":[0,0],"max":[1,1],"counts":[3,3]},"gait":{"kind":"square","amplitude":1}}"#,
            r#"{"command":"simulate","gait":{"kind":"square"}}"#,
            r#"{"command":"simulate","gait":{"kind":"square","amplitude":1,"direction":2}}"#,
            r#"{"command":"simulate","gait":{"kind":"waypoints","waypoints":[{"shape":[0,0],"fraction":0.3},{"shape":[1,1],"fraction":0.3}]}}"#,
            r#"{"command":"simulate","gait":{"kind":"square","amplitude":1},"steps_per_cycle":4}"#,
            r#"{"command":"verify","verify":{"samples":0}}"#,
            r#"{"command":"verify","params":{"half_length":-1}}"#,
            r#"{"command":"launch"}"#,
            r#"not json"#,
        ] {
            assert!(matches!(parse_config(text), Err(CliError::Config { .. })), "{text}");
        }
    }
}
