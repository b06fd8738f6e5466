//! Closed-form connection from the published numerator/denominator tables.
//!
//! Each entry is `A_jk = Σ_i N_i^{jk} / D_i^{jk}`. The printed tables contain
//! one self-referential denominator and list the two lateral off-diagonal
//! blocks under each other's labels; [`OracleReading`] selects how those are
//! read.

mod tables;

use crate::connection::ConnectionLocalForm;
use crate::error::{Error, Result};
use crate::model::{ShapeState, SwimmerParams};
use crate::real::Real;

use tables::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Joint {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Trig {
    Sin1,
    Cos1,
    Sin2,
    Cos2,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Prefactor {
    /// `2L³k/3 + 2L³k(cos α_i + 1)`
    MomentArm(Joint),
    /// `coef · L²k · trig`
    Trig { coef: f64, factor: Trig },
}

type Monomial = (f64, [i32; 4]);

#[derive(Debug, Clone, Copy)]
pub(crate) struct Numerator {
    pub sign: f64,
    pub prefactor: Prefactor,
    pub terms: &'static [Monomial],
}

/// `k · L^p · Σ terms`
#[derive(Debug, Clone, Copy)]
pub(crate) struct Denominator {
    pub length_power: i32,
    pub terms: &'static [Monomial],
}

/// Which printed denominator stands in for the self-referential `D2_12`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SelfReference {
    #[default]
    D2_11,
    D3_12,
}

/// Whether the `A12` and `A21` blocks are used under their printed labels or
/// exchanged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OffDiagonal {
    Printed,
    #[default]
    Swapped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, serde::Serialize)]
pub struct OracleReading {
    pub d2_12: SelfReference,
    pub off_diagonal: OffDiagonal,
}

impl OracleReading {
    /// Tables exactly as labelled, with `D2_12` read as `D2_11`.
    pub fn printed_labels() -> Self {
        Self {
            d2_12: SelfReference::D2_11,
            off_diagonal: OffDiagonal::Printed,
        }
    }
}

struct Block {
    num: [Numerator; 3],
    den: [(&'static str, Denominator); 3],
}

fn printed_block(row: usize, col: usize, d2_12: SelfReference) -> Block {
    let (num, den) = match (row, col) {
        (0, 0) => (
            [N1_11, N2_11, N3_11],
            [("D1_11", D1_11), ("D2_11", D2_11), ("D3_11", D2_11)],
        ),
        (0, 1) => {
            let d2 = match d2_12 {
                SelfReference::D2_11 => D2_11,
                SelfReference::D3_12 => D3_12,
            };
            (
                [N1_12, N2_12, N3_12],
                [("D1_12", D1_12), ("D2_12", d2), ("D3_12", D3_12)],
            )
        }
        (1, 0) => (
            [N1_21, N2_21, N3_21],
            [("D1_21", D2_11), ("D2_21", D2_21), ("D3_21", D2_11)],
        ),
        (1, 1) => (
            [N1_22, N2_22, N3_22],
            [("D1_22", D2_11), ("D2_22", D1_12), ("D3_22", D3_12)],
        ),
        (2, 0) => (
            [N1_31, N2_31, N3_31],
            [("D1_31", D1_31), ("D2_31", D2_31), ("D3_31", D3_31)],
        ),
        (2, 1) => (
            [N1_32, N2_32, N3_32],
            [("D1_32", D1_32), ("D2_32", D2_32), ("D3_32", D3_32)],
        ),
        _ => unreachable!("block index out of range"),
    };
    Block { num, den }
}

fn source_of(row: usize, col: usize, reading: OracleReading) -> (usize, usize) {
    match (reading.off_diagonal, row, col) {
        (OffDiagonal::Swapped, 0, 1) => (1, 0),
        (OffDiagonal::Swapped, 1, 0) => (0, 1),
        _ => (row, col),
    }
}

struct Trigs<T> {
    powers: [[T; 5]; 4],
    values: [T; 4],
}

impl<T: Real> Trigs<T> {
    fn new(shape: &ShapeState<T>) -> Self {
        let values = [
            shape.alpha1.cos(),
            shape.alpha1.sin(),
            shape.alpha2.cos(),
            shape.alpha2.sin(),
        ];
        let powers = values.map(|v| {
            let mut p = [T::one(); 5];
            for e in 1..5 {
                p[e] = p[e - 1] * v;
            }
            p
        });
        Self { powers, values }
    }

    fn monomial(&self, e: &[i32; 4]) -> T {
        let mut m = T::one();
        for (axis, &power) in e.iter().enumerate() {
            m = m * self.powers[axis][power as usize];
        }
        m
    }

    /// Sum of the polynomial and sum of absolute term magnitudes.
    fn poly(&self, terms: &[Monomial]) -> (T, T) {
        terms.iter().fold((T::zero(), T::zero()), |(s, mag), (c, e)| {
            let t = T::lit(*c) * self.monomial(e);
            (s + t, mag + t.abs())
        })
    }
}

fn numerator<T: Real>(n: &Numerator, tr: &Trigs<T>, p: &SwimmerParams<T>) -> T {
    let (l, k) = (p.half_length, p.drag);
    let l2k = l * l * k;
    let pre = match n.prefactor {
        Prefactor::MomentArm(joint) => {
            let c = match joint {
                Joint::First => tr.values[0],
                Joint::Second => tr.values[2],
            };
            let l3k = l2k * l;
            T::lit(2.0) * l3k / T::lit(3.0) + T::lit(2.0) * l3k * (c + T::one())
        }
        Prefactor::Trig { coef, factor } => {
            let v = match factor {
                Trig::Cos1 => tr.values[0],
                Trig::Sin1 => tr.values[1],
                Trig::Cos2 => tr.values[2],
                Trig::Sin2 => tr.values[3],
            };
            T::lit(coef) * l2k * v
        }
    };
    T::lit(n.sign) * pre * tr.poly(n.terms).0
}

/// Relative size below which a denominator is reported as vanishing.
pub const DENOMINATOR_TOLERANCE: f64 = 1e-12;

fn denominator<T: Real>(
    label: &str,
    d: &Denominator,
    tr: &Trigs<T>,
    p: &SwimmerParams<T>,
    shape: &ShapeState<T>,
) -> Result<T> {
    let scale = p.drag * p.half_length.powi(d.length_power);
    let (sum, mag) = tr.poly(d.terms);
    if sum.abs() <= T::lit(DENOMINATOR_TOLERANCE) * mag {
        return Err(Error::OracleDenominatorZero {
            label: label.to_string(),
            value: (scale * sum).as_f64(),
            alpha1: shape.alpha1.as_f64(),
            alpha2: shape.alpha2.as_f64(),
        });
    }
    Ok(scale * sum)
}

/// One evaluated entry with its three numerator/denominator pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleEntryBreakdown<T> {
    /// Zero-based `(row, column)` in the connection matrix.
    pub position: (usize, usize),
    /// Printed block the terms were taken from, e.g. `"A21"`.
    pub source_block: String,
    /// `(N_i, D_i)` for `i = 1, 2, 3`.
    pub terms: [(T, T); 3],
    pub total: T,
}

fn parse_label(label: &str) -> Result<(usize, usize)> {
    let b = label.trim().as_bytes();
    let ok = b.len() == 3
        && (b[0] == b'A' || b[0] == b'a')
        && (b'1'..=b'3').contains(&b[1])
        && (b'1'..=b'2').contains(&b[2]);
    if !ok {
        return Err(Error::UnknownEntryLabel(label.to_string()));
    }
    Ok(((b[1] - b'1') as usize, (b[2] - b'1') as usize))
}

fn evaluate<T: Real>(
    row: usize,
    col: usize,
    tr: &Trigs<T>,
    shape: &ShapeState<T>,
    params: &SwimmerParams<T>,
    reading: OracleReading,
) -> Result<OracleEntryBreakdown<T>> {
    let (sr, sc) = source_of(row, col, reading);
    let block = printed_block(sr, sc, reading.d2_12);
    let mut terms = [(T::zero(), T::zero()); 3];
    let mut total = T::zero();
    for i in 0..3 {
        let n = numerator(&block.num[i], tr, params);
        let (label, den) = &block.den[i];
        let d = denominator(label, den, tr, params, shape)?;
        terms[i] = (n, d);
        total = total + n / d;
    }
    Ok(OracleEntryBreakdown {
        position: (row, col),
        source_block: format!("A{}{}", sr + 1, sc + 1),
        terms,
        total,
    })
}

/// Single entry such as `"A31"` under the adopted reading.
pub fn oracle_entry<T: Real>(
    label: &str,
    shape: &ShapeState<T>,
    params: &SwimmerParams<T>,
) -> Result<OracleEntryBreakdown<T>> {
    oracle_entry_with(label, shape, params, OracleReading::default())
}

pub fn oracle_entry_with<T: Real>(
    label: &str,
    shape: &ShapeState<T>,
    params: &SwimmerParams<T>,
    reading: OracleReading,
) -> Result<OracleEntryBreakdown<T>> {
    let (row, col) = parse_label(label)?;
    evaluate(row, col, &Trigs::new(shape), shape, params, reading)
}

/// Full connection under the adopted reading.
pub fn oracle_connection<T: Real>(shape: &ShapeState<T>, params: &SwimmerParams<T>) -> Result<ConnectionLocalForm<T>> {
    oracle_connection_with(shape, params, OracleReading::default())
}

pub fn oracle_connection_with<T: Real>(
    shape: &ShapeState<T>,
    params: &SwimmerParams<T>,
    reading: OracleReading,
) -> Result<ConnectionLocalForm<T>> {
    let tr = Trigs::new(shape);
    let mut a = [[T::zero(); 2]; 3];
    for (row, out) in a.iter_mut().enumerate() {
        for (col, v) in out.iter_mut().enumerate() {
            *v = evaluate(row, col, &tr, shape, params, reading)?.total;
        }
    }
    Ok(ConnectionLocalForm::new(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::TAU;

    fn unit() -> SwimmerParams<f64> {
        SwimmerParams::unit()
    }

    #[test]
    fn collinear_values() {
        let a = oracle_connection(&ShapeState::new(0.0, 0.0), &unit()).unwrap();
        let want = [[0.0, 0.0], [-1.0 / 3.0, -1.0 / 3.0], [7.0 / 27.0, -7.0 / 27.0]];
        for r in 0..3 {
            for c in 0..2 {
                assert_abs_diff_eq!(a.a[r][c], want[r][c], epsilon = 1e-14);
            }
        }
        let printed =
            oracle_connection_with(&ShapeState::new(0.0, 0.0), &unit(), OracleReading::printed_labels()).unwrap();
        assert_abs_diff_eq!(printed.a[0][1], -1.0 / 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(printed.a[1][0], 0.0, epsilon = 1e-14);
    }

    #[test]
    fn first_moment_term_at_origin() {
        let b = oracle_entry("A31", &ShapeState::new(0.0, 0.0), &unit()).unwrap();
        // (2/3 + 4) · (2 + 4 + 4 + 2 + 4 + 2)
        assert_abs_diff_eq!(b.terms[0].0, 84.0, epsilon = 1e-12);
        assert_eq!(b.position, (2, 0));
        assert_eq!(b.source_block, "A31");
        let sum: f64 = b.terms.iter().map(|(n, d)| n / d).sum();
        assert_eq!(sum, b.total);
    }

    #[test]
    fn aliases_share_the_same_table() {
        let shape = ShapeState::new(0.37, -1.1);
        let a = oracle_entry("A11", &shape, &unit()).unwrap();
        let b = oracle_entry("A21", &shape, &unit()).unwrap();
        // A11's D3 and the printed A21 block's D1 both point at D2_11.
        assert_eq!(a.terms[1].1, a.terms[2].1);
        assert_eq!(b.source_block, "A12");
        let c = oracle_entry_with("A21", &shape, &unit(), OracleReading::printed_labels()).unwrap();
        assert_eq!(c.terms[0].1.to_bits(), a.terms[1].1.to_bits());
    }

    #[test]
    fn self_reference_readings_differ() {
        let shape = ShapeState::new(0.8, 0.2);
        let twice = OracleReading {
            d2_12: SelfReference::D3_12,
            off_diagonal: OffDiagonal::Swapped,
        };
        let a = oracle_entry("A21", &shape, &unit()).unwrap();
        let b = oracle_entry_with("A21", &shape, &unit(), twice).unwrap();
        assert_ne!(a.terms[1].1, b.terms[1].1);
        assert_eq!(a.terms[0], b.terms[0]);
    }

    #[test]
    fn unknown_labels() {
        let s = ShapeState::new(0.1, 0.2);
        for bad in ["A13", "A41", "B11", "A1", "", "A011"] {
            assert!(matches!(
                oracle_entry(bad, &s, &unit()),
                Err(Error::UnknownEntryLabel(_))
            ));
        }
        assert!(oracle_entry("a32", &s, &unit()).is_ok());
    }

    #[test]
    fn periodic() {
        let p = unit();
        let a = oracle_connection(&ShapeState::new(0.3, -0.9), &p).unwrap();
        let b = oracle_connection(&ShapeState::new(0.3 + TAU, -0.9 - TAU), &p).unwrap();
        for (x, y) in a.entries().iter().zip(b.entries()) {
            assert!((x - y).abs() <= 1e-10 * (1.0 + x.abs()));
        }
    }

    #[test]
    fn dimensionless_in_length_and_drag() {
        let shapes = [(0.2, 0.4), (-1.0, 2.0), (2.2, -0.3), (0.0, 1.5)];
        for (a1, a2) in shapes {
            let s = ShapeState::new(a1, a2);
            let base = oracle_connection(&s, &unit()).unwrap();
            for l in [1.0, 2.0] {
                for k in [1.0, 3.0] {
                    let other = oracle_connection(&s, &SwimmerParams::new(l, k).unwrap()).unwrap();
                    for (r, (x, y)) in base.entries().iter().zip(other.entries()).enumerate() {
                        // Lateral and longitudinal rows scale with L, rotation does not.
                        let want = if r < 4 { x * l } else { *x };
                        assert!((want - y).abs() <= 1e-12 * (1.0 + want.abs()), "{r} {l} {k}");
                    }
                }
            }
        }
    }

    #[test]
    fn vanishing_denominator_reported() {
        let bad = Denominator {
            length_power: 1,
            terms: &[(1.0, [1, 0, 0, 0]), (-1.0, [0, 0, 1, 0])],
        };
        let s = ShapeState::new(0.5, 0.5);
        let err = denominator("X", &bad, &Trigs::new(&s), &unit(), &s).unwrap_err();
        assert!(matches!(err, Error::OracleDenominatorZero { .. }));
    }

    #[test]
    fn single_precision_agrees() {
        let s64 = ShapeState::new(0.6, -0.7);
        let s32 = ShapeState::new(0.6_f32, -0.7_f32);
        let a = oracle_connection(&s64, &unit()).unwrap();
        let b = oracle_connection(&s32, &SwimmerParams::<f32>::unit()).unwrap();
        for (x, y) in a.entries().iter().zip(b.entries()) {
            assert!((x - y as f64).abs() < 1e-4);
        }
    }
}
