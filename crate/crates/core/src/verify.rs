//! Differential sweep of the numeric connection against the closed-form tables.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::connection::{local_connection, ConnectionLocalForm};
use crate::error::Result;
use crate::model::{DragMode, GeometryVariant, Model, ShapeState, SwimmerParams};
use crate::oracle::{oracle_connection_with, OffDiagonal, OracleReading, SelfReference};

pub const ENTRY_LABELS: [&str; 6] = ["A11", "A12", "A21", "A22", "A31", "A32"];

/// Agreement threshold on `|A_numeric − A_oracle| / (1 + |A_oracle|)`.
pub const TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifySpec {
    pub samples: usize,
    /// Shapes are drawn uniformly from `(−range, range)²`.
    pub range: f64,
    pub seed: u64,
}

impl Default for VerifySpec {
    fn default() -> Self {
        Self {
            samples: 1000,
            range: 0.75 * std::f64::consts::PI,
            seed: 0,
        }
    }
}

/// One numeric model configuration with an overall sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Combination {
    pub drag_mode: DragMode,
    pub geometry: GeometryVariant,
    pub sign: i8,
}

impl Combination {
    pub fn all() -> Vec<Combination> {
        let mut out = Vec::with_capacity(8);
        for drag_mode in DragMode::ALL {
            for geometry in GeometryVariant::ALL {
                for sign in [1, -1] {
                    out.push(Combination {
                        drag_mode,
                        geometry,
                        sign,
                    });
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CombinationStats {
    #[serde(flatten)]
    pub combination: Combination,
    pub max_deviation: f64,
    pub entry_max: [f64; 6],
    pub entry_mean: [f64; 6],
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Evidence {
    pub max_deviation_adopted: f64,
    pub max_deviation_alternative: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Erratum {
    pub location: String,
    pub printed_form: String,
    pub adopted_reading: String,
    pub alternative_reading: String,
    pub evidence: Evidence,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub samples: usize,
    pub seed: u64,
    pub range: f64,
    pub tolerance: f64,
    pub oracle_reading: OracleReading,
    pub winner: Option<CombinationStats>,
    pub passing_combinations: usize,
    pub combinations: Vec<CombinationStats>,
    pub errata: Vec<Erratum>,
}

pub fn sample_shapes(spec: &VerifySpec) -> Vec<ShapeState<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.samples)
        .map(|_| {
            ShapeState::new(
                rng.gen_range(-spec.range..spec.range),
                rng.gen_range(-spec.range..spec.range),
            )
        })
        .collect()
}

/// Elementwise `|s·numeric − oracle| / (1 + |oracle|)`.
pub fn deviation(numeric: &ConnectionLocalForm<f64>, sign: f64, oracle: &ConnectionLocalForm<f64>) -> [f64; 6] {
    let n = numeric.entries();
    let o = oracle.entries();
    std::array::from_fn(|i| (sign * n[i] - o[i]).abs() / (1.0 + o[i].abs()))
}

struct PointResult {
    /// Deviations, indexed like [`Combination::all`].
    combos: Vec<[f64; 6]>,
    /// One per (mode, variant), ordered as `model_index`.
    numeric: Vec<ConnectionLocalForm<f64>>,
    oracles: [ConnectionLocalForm<f64>; 3],
}

const ALT_SELF_REFERENCE: OracleReading = OracleReading {
    d2_12: SelfReference::D3_12,
    off_diagonal: OffDiagonal::Swapped,
};
const ALT_OFF_DIAGONAL: OracleReading = OracleReading {
    d2_12: SelfReference::D2_11,
    off_diagonal: OffDiagonal::Printed,
};

fn model_index(mode: DragMode, variant: GeometryVariant) -> usize {
    let m = DragMode::ALL.iter().position(|&x| x == mode).unwrap();
    let v = GeometryVariant::ALL.iter().position(|&x| x == variant).unwrap();
    m * 2 + v
}

fn evaluate_point(shape: &ShapeState<f64>, params: &SwimmerParams<f64>) -> Result<PointResult> {
    let adopted = OracleReading::default();
    let oracles = [
        oracle_connection_with(shape, params, adopted)?,
        oracle_connection_with(shape, params, ALT_SELF_REFERENCE)?,
        oracle_connection_with(shape, params, ALT_OFF_DIAGONAL)?,
    ];
    let mut numeric = Vec::with_capacity(4);
    for mode in DragMode::ALL {
        for variant in GeometryVariant::ALL {
            numeric.push(local_connection(shape, &Model::new(*params, mode, variant))?);
        }
    }
    let combos = Combination::all()
        .iter()
        .map(|c| {
            deviation(
                &numeric[model_index(c.drag_mode, c.geometry)],
                c.sign as f64,
                &oracles[0],
            )
        })
        .collect();
    Ok(PointResult {
        combos,
        numeric,
        oracles,
    })
}

fn max6(v: &[f64; 6]) -> f64 {
    v.iter().fold(0.0, |a: f64, &b| a.max(b))
}

/// Runs the sweep at unit half-length and drag.
pub fn run_verify(spec: &VerifySpec) -> Result<VerifyReport> {
    let params = SwimmerParams::unit();
    let shapes = sample_shapes(spec);
    let points = shapes
        .par_iter()
        .map(|s| evaluate_point(s, &params))
        .collect::<Result<Vec<_>>>()?;

    let combos = Combination::all();
    let n = points.len().max(1) as f64;
    let combinations: Vec<CombinationStats> = combos
        .iter()
        .enumerate()
        .map(|(ci, &combination)| {
            let mut entry_max = [0.0_f64; 6];
            let mut entry_sum = [0.0_f64; 6];
            for p in &points {
                for e in 0..6 {
                    entry_max[e] = entry_max[e].max(p.combos[ci][e]);
                    entry_sum[e] += p.combos[ci][e];
                }
            }
            CombinationStats {
                combination,
                max_deviation: max6(&entry_max),
                entry_max,
                entry_mean: entry_sum.map(|s| s / n),
            }
        })
        .collect();

    let passing: Vec<&CombinationStats> = combinations.iter().filter(|c| c.max_deviation <= TOLERANCE).collect();
    let winner = match passing.as_slice() {
        [only] => Some((*only).clone()),
        _ => None,
    };
    let reference = winner.clone().unwrap_or_else(|| {
        combinations
            .iter()
            .min_by(|a, b| a.max_deviation.total_cmp(&b.max_deviation))
            .cloned()
            .expect("eight combinations")
    });
    let errata = errata(&points, &reference.combination);

    Ok(VerifyReport {
        samples: spec.samples,
        seed: spec.seed,
        range: spec.range,
        tolerance: TOLERANCE,
        oracle_reading: OracleReading::default(),
        winner,
        passing_combinations: passing.len(),
        combinations,
        errata,
    })
}

fn sweep_max(points: &[PointResult], f: impl Fn(&PointResult) -> [f64; 6]) -> f64 {
    points.iter().fold(0.0, |acc, p| acc.max(max6(&f(p))))
}

fn errata(points: &[PointResult], best: &Combination) -> Vec<Erratum> {
    let sign = best.sign as f64;
    let idx = model_index(best.drag_mode, best.geometry);
    let against = |oracle: usize, model: usize, s: f64| {
        move |p: &PointResult| deviation(&p.numeric[model], s, &p.oracles[oracle])
    };
    let adopted = sweep_max(points, against(0, idx, sign));

    let relabelled = sweep_max(points, |p| {
        let mut o = p.oracles[0];
        o.a[2][1] = o.a[1][1];
        deviation(&p.numeric[idx], sign, &o)
    });
    let other_mode = match best.drag_mode {
        DragMode::Corrected => DragMode::PaperLiteral,
        DragMode::PaperLiteral => DragMode::Corrected,
    };
    let other_variant = match best.geometry {
        GeometryVariant::Derived => GeometryVariant::PaperLiteral,
        GeometryVariant::PaperLiteral => GeometryVariant::Derived,
    };
    let ev = |alternative: f64| Evidence {
        max_deviation_adopted: adopted,
        max_deviation_alternative: alternative,
    };

    vec![
        Erratum {
            location: "closed-form tables, definition of D2_12".into(),
            printed_form: "D2_12 = D2_12 (refers to itself)".into(),
            adopted_reading: "D2_12 = D2_11".into(),
            alternative_reading: "D2_12 = D3_12".into(),
            evidence: ev(sweep_max(points, against(1, idx, sign))),
        },
        Erratum {
            location: "closed-form tables, displayed connection matrix entry (3,2)".into(),
            printed_form: "A22".into(),
            adopted_reading: "A32".into(),
            alternative_reading: "A22".into(),
            evidence: ev(relabelled),
        },
        Erratum {
            location: "closed-form tables, blocks labelled A12 and A21".into(),
            printed_form: "A12 and A21 under their printed labels".into(),
            adopted_reading: "the block labelled A21 is entry (1,2) and the block labelled A12 is entry (2,1)".into(),
            alternative_reading: "printed labels".into(),
            evidence: ev(sweep_max(points, against(2, idx, sign))),
        },
        Erratum {
            location: "drag law, lateral force and moment".into(),
            printed_form: "f_y = kL·ξ_y, m = (2/3)kL²·ξ_θ".into(),
            adopted_reading: format!("drag mode {}", best.drag_mode.name()),
            alternative_reading: format!("drag mode {}", other_mode.name()),
            evidence: ev(sweep_max(
                points,
                against(0, model_index(other_mode, best.geometry), sign),
            )),
        },
        Erratum {
            location: "link 3 lateral velocity, rotation term".into(),
            printed_form: "−(1 + cos α2)·L·ξ_θ".into(),
            adopted_reading: format!("geometry {}", best.geometry.name()),
            alternative_reading: format!("geometry {}", other_variant.name()),
            evidence: ev(sweep_max(
                points,
                against(0, model_index(best.drag_mode, other_variant), sign),
            )),
        },
        Erratum {
            location: "connection, overall sign".into(),
            printed_form: "ξ = −A(α)·α̇".into(),
            adopted_reading: format!(
                "closed-form tables equal {}·(−B1⁻¹B2)",
                if best.sign > 0 { "+1" } else { "−1" }
            ),
            alternative_reading: format!("{}·(−B1⁻¹B2)", if best.sign > 0 { "−1" } else { "+1" }),
            evidence: ev(sweep_max(points, against(0, idx, -sign))),
        },
    ]
}

/// `drag_mode,geometry,sign,entry,max_deviation,mean_deviation`, one row per
/// entry per combination.
pub fn write_summary_csv<W: std::io::Write>(report: &VerifyReport, w: W) -> std::io::Result<()> {
    use crate::io::format_number;
    let mut out = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w);
    out.write_record([
        "drag_mode",
        "geometry",
        "sign",
        "entry",
        "max_deviation",
        "mean_deviation",
    ])?;
    for c in &report.combinations {
        for (e, label) in ENTRY_LABELS.iter().enumerate() {
            out.write_record([
                c.combination.drag_mode.name().to_string(),
                c.combination.geometry.name().to_string(),
                c.combination.sign.to_string(),
                label.to_string(),
                format_number(c.entry_max[e]),
                format_number(c.entry_mean[e]),
            ])?;
        }
    }
    out.flush()
}
