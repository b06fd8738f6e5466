//! Local connection `A(α)`: the linear map from shape rate to base twist that
//! keeps the total drag wrench at zero.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{condition_number, mat_vec, Lu3};
use crate::model::{build_b, net_wrench, Model, ShapeRate, ShapeState};
use crate::real::Real;
use crate::se2::BodyTwist;

/// Condition number of `B1` above which a shape is treated as degenerate.
pub const MAX_CONDITION: f64 = 1e12;

/// 3×2 matrix, rows `(ξx, ξy, ξθ)`, columns `(α̇1, α̇2)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ConnectionLocalForm<T> {
    pub a: [[T; 2]; 3],
}

impl<T: Real> ConnectionLocalForm<T> {
    pub fn new(a: [[T; 2]; 3]) -> Self {
        Self { a }
    }

    pub fn apply(&self, rate: &ShapeRate<T>) -> BodyTwist<T> {
        let row = |r: usize| self.a[r][0] * rate.alpha1_dot + self.a[r][1] * rate.alpha2_dot;
        BodyTwist::new(row(0), row(1), row(2))
    }

    /// Entries in row-major order `A11, A12, A21, A22, A31, A32`.
    pub fn entries(&self) -> [T; 6] {
        [
            self.a[0][0],
            self.a[0][1],
            self.a[1][0],
            self.a[1][1],
            self.a[2][0],
            self.a[2][1],
        ]
    }

    pub fn scaled(&self, s: T) -> Self {
        Self::new(self.a.map(|row| row.map(|v| v * s)))
    }
}

/// Solves `B1·A = -B2` at `shape`.
pub fn local_connection<T: Real>(shape: &ShapeState<T>, model: &Model<T>) -> Result<ConnectionLocalForm<T>> {
    let b = build_b(shape, model);
    let cond = condition_number(&b.b1);
    let singular = || Error::NearSingularConfiguration {
        alpha1: shape.alpha1.as_f64(),
        alpha2: shape.alpha2.as_f64(),
        condition: cond.as_f64(),
        time: None,
    };
    if !(cond <= T::lit(MAX_CONDITION)) {
        return Err(singular());
    }
    let lu = Lu3::factor(&b.b1).ok_or_else(singular)?;
    let mut a = [[T::zero(); 2]; 3];
    for c in 0..2 {
        let x = lu.solve([-b.b2[0][c], -b.b2[1][c], -b.b2[2][c]]);
        for r in 0..3 {
            a[r][c] = x[r];
        }
    }
    Ok(ConnectionLocalForm::new(a))
}

/// `ξ = A(α)·α̇`.
pub fn base_twist<T: Real>(shape: &ShapeState<T>, rate: &ShapeRate<T>, model: &Model<T>) -> Result<BodyTwist<T>> {
    Ok(local_connection(shape, model)?.apply(rate))
}

/// Net wrench left over when `ξ = A·α̇` is substituted back, in units of
/// `kL` for the forces and `kL³` for the moment.
pub fn force_balance_residual<T: Real>(shape: &ShapeState<T>, rate: &ShapeRate<T>, model: &Model<T>) -> Result<[T; 3]> {
    let xi = base_twist(shape, rate, model)?;
    let w = net_wrench(shape, rate, &xi, model);
    let kl = model.params.drag * model.params.half_length;
    let kl3 = kl * model.params.half_length * model.params.half_length;
    Ok([w.fx / kl, w.fy / kl, w.m / kl3])
}

/// `‖B1·A + B2‖_max`, the solve residual.
pub fn solve_residual<T: Real>(shape: &ShapeState<T>, model: &Model<T>, conn: &ConnectionLocalForm<T>) -> T {
    let b = build_b(shape, model);
    let mut worst = T::zero();
    for c in 0..2 {
        let col = mat_vec(&b.b1, [conn.a[0][c], conn.a[1][c], conn.a[2][c]]);
        for r in 0..3 {
            worst = worst.max((col[r] + b.b2[r][c]).abs());
        }
    }
    worst
}

/// Rectangular sampling grid over shape space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec<T> {
    pub min: [T; 2],
    pub max: [T; 2],
    pub counts: [usize; 2],
}

impl<T: Real> GridSpec<T> {
    pub fn validate(&self) -> Result<()> {
        for axis in 0..2 {
            if self.counts[axis] < 2 {
                return Err(Error::InvalidGridSpec(format!(
                    "axis {} needs at least 2 points, got {}",
                    axis + 1,
                    self.counts[axis]
                )));
            }
            let (lo, hi) = (self.min[axis], self.max[axis]);
            if !(lo.is_finite() && hi.is_finite()) {
                return Err(Error::InvalidGridSpec(format!("axis {} range is not finite", axis + 1)));
            }
            if !(lo < hi) {
                return Err(Error::InvalidGridSpec(format!(
                    "axis {} range [{lo}, {hi}] is empty or reversed",
                    axis + 1
                )));
            }
        }
        Ok(())
    }

    /// Sample coordinates along one axis; endpoints are hit exactly and a
    /// symmetric range with an odd count contains exactly zero.
    pub fn axis_values(&self, axis: usize) -> Vec<T> {
        let n = self.counts[axis];
        let (lo, hi) = (self.min[axis], self.max[axis]);
        let last = T::lit((n - 1) as f64);
        (0..n)
            .map(|i| {
                let w = T::lit(i as f64);
                (lo * (last - w) + hi * w) / last
            })
            .collect()
    }
}

/// Connection sampled on a grid. Entries are indexed `i1 * n2 + i2`; shapes
/// that tripped the singularity guard are `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldGrid<T> {
    pub alpha1_values: Vec<T>,
    pub alpha2_values: Vec<T>,
    pub entries: Vec<Option<ConnectionLocalForm<T>>>,
    pub model: Model<T>,
}

impl<T: Real> FieldGrid<T> {
    pub fn get(&self, i1: usize, i2: usize) -> Option<&ConnectionLocalForm<T>> {
        self.entries[i1 * self.alpha2_values.len() + i2].as_ref()
    }

    pub fn missing(&self) -> usize {
        self.entries.iter().filter(|e| e.is_none()).count()
    }

    /// Builds a grid from an arbitrary field; used for synthetic fields.
    pub fn from_fn(
        alpha1_values: Vec<T>,
        alpha2_values: Vec<T>,
        model: Model<T>,
        f: impl Fn(T, T) -> ConnectionLocalForm<T>,
    ) -> Self {
        let entries = alpha1_values
            .iter()
            .flat_map(|&a1| alpha2_values.iter().map(move |&a2| (a1, a2)))
            .map(|(a1, a2)| Some(f(a1, a2)))
            .collect();
        Self {
            alpha1_values,
            alpha2_values,
            entries,
            model,
        }
    }
}

/// Evaluates the connection on every grid point, in parallel, keeping grid order.
pub fn sample_field<T: Real>(spec: &GridSpec<T>, model: &Model<T>) -> Result<FieldGrid<T>> {
    spec.validate()?;
    let alpha1_values = spec.axis_values(0);
    let alpha2_values = spec.axis_values(1);
    let n2 = alpha2_values.len();
    let entries = (0..alpha1_values.len() * n2)
        .into_par_iter()
        .map(|idx| {
            let shape = ShapeState::new(alpha1_values[idx / n2], alpha2_values[idx % n2]);
            match local_connection(&shape, model) {
                Ok(a) => Ok(Some(a)),
                Err(Error::NearSingularConfiguration { .. }) => Ok(None),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FieldGrid {
        alpha1_values,
        alpha2_values,
        entries,
        model: *model,
    })
}

/// Curl `∂A_j2/∂α1 − ∂A_j1/∂α2` of each row on the grid interior.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureGrid<T> {
    /// Interior α1 coordinates (first and last grid column dropped).
    pub alpha1_values: Vec<T>,
    pub alpha2_values: Vec<T>,
    /// `rows[j][i1 * n2 + i2]`, `None` where a stencil neighbour is missing.
    pub rows: [Vec<Option<T>>; 3],
}

impl<T: Real> CurvatureGrid<T> {
    pub fn get(&self, row: usize, i1: usize, i2: usize) -> Option<T> {
        self.rows[row][i1 * self.alpha2_values.len() + i2]
    }
}

fn uniform_step<T: Real>(values: &[T], axis: usize) -> Result<T> {
    let h = values[1] - values[0];
    let tol = T::lit(1e-9) * h.abs();
    for w in values.windows(2) {
        if ((w[1] - w[0]) - h).abs() > tol {
            return Err(Error::InvalidGridSpec(format!("axis {axis} spacing is not uniform")));
        }
    }
    Ok(h)
}

/// Central-difference curl of each connection row.
pub fn connection_curvature<T: Real>(grid: &FieldGrid<T>) -> Result<CurvatureGrid<T>> {
    let (n1, n2) = (grid.alpha1_values.len(), grid.alpha2_values.len());
    if n1 < 3 || n2 < 3 {
        return Err(Error::InvalidGridSpec(format!(
            "curvature needs at least 3×3 points, got {n1}×{n2}"
        )));
    }
    let h1 = uniform_step(&grid.alpha1_values, 1)?;
    let h2 = uniform_step(&grid.alpha2_values, 2)?;
    let two = T::lit(2.0);
    let mut rows: [Vec<Option<T>>; 3] = Default::default();
    for i1 in 1..n1 - 1 {
        for i2 in 1..n2 - 1 {
            let stencil = (
                grid.get(i1 + 1, i2),
                grid.get(i1 - 1, i2),
                grid.get(i1, i2 + 1),
                grid.get(i1, i2 - 1),
            );
            for (j, out) in rows.iter_mut().enumerate() {
                let value = match stencil {
                    (Some(e), Some(w), Some(n), Some(s)) => {
                        let d_a2_d1 = (e.a[j][1] - w.a[j][1]) / (two * h1);
                        let d_a1_d2 = (n.a[j][0] - s.a[j][0]) / (two * h2);
                        Some(d_a2_d1 - d_a1_d2)
                    }
                    _ => None,
                };
                out.push(value);
            }
        }
    }
    Ok(CurvatureGrid {
        alpha1_values: grid.alpha1_values[1..n1 - 1].to_vec(),
        alpha2_values: grid.alpha2_values[1..n2 - 1].to_vec(),
        rows,
    })
}
