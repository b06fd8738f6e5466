//! Periodic shape trajectories and reconstruction of the body motion.

use serde::{Deserialize, Serialize};

use crate::connection::local_connection;
use crate::error::{Error, Result};
use crate::model::{Model, ShapeRate, ShapeState};
use crate::real::Real;
use crate::se2::{exp, BodyTwist, Pose};

/// Traversal direction of a closed gait.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum Direction {
    #[default]
    Forward,
    Reverse,
}

impl Direction {
    pub fn from_sign(sign: i64) -> Option<Self> {
        match sign {
            1 => Some(Direction::Forward),
            -1 => Some(Direction::Reverse),
            _ => None,
        }
    }

    pub fn sign(self) -> i8 {
        match self {
            Direction::Forward => 1,
            Direction::Reverse => -1,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Direction::Forward => Direction::Reverse,
            Direction::Reverse => Direction::Forward,
        }
    }
}

/// A vertex of a piecewise-linear gait and the share of the period spent
/// travelling from it to the next vertex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Waypoint<T> {
    pub shape: ShapeState<T>,
    pub fraction: T,
}

#[derive(Debug, Clone, PartialEq)]
pub enum GaitKind<T> {
    /// Corners `(a,a) → (−a,a) → (−a,−a) → (a,−a)`, a quarter period per edge.
    Square { amplitude: T },
    /// `center + (a1 cos ωt, a2 sin ωt)`.
    Ellipse { amplitudes: [T; 2] },
    /// Closed polygon through the waypoints, returning to the first.
    Waypoints(Vec<Waypoint<T>>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GaitSpec<T> {
    pub kind: GaitKind<T>,
    /// Offset added to the square and ellipse shapes; ignored by waypoints.
    pub center: ShapeState<T>,
    pub period: T,
    pub direction: Direction,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Segment<T> {
    start_time: T,
    duration: T,
    from: ShapeState<T>,
    to: ShapeState<T>,
}

impl<T: Real> Segment<T> {
    /// Linear motion along the segment, extrapolated outside it.
    fn eval(&self, t: T) -> (ShapeState<T>, ShapeRate<T>) {
        let tau = (t - self.start_time) / self.duration;
        let d1 = self.to.alpha1 - self.from.alpha1;
        let d2 = self.to.alpha2 - self.from.alpha2;
        (
            ShapeState::new(self.from.alpha1 + d1 * tau, self.from.alpha2 + d2 * tau),
            ShapeRate::new(d1 / self.duration, d2 / self.duration),
        )
    }
}

impl<T: Real> GaitSpec<T> {
    pub fn square(amplitude: T, period: T) -> Self {
        Self {
            kind: GaitKind::Square { amplitude },
            center: ShapeState::new(T::zero(), T::zero()),
            period,
            direction: Direction::Forward,
        }
    }

    pub fn ellipse(amplitudes: [T; 2], center: ShapeState<T>, period: T) -> Self {
        Self {
            kind: GaitKind::Ellipse { amplitudes },
            center,
            period,
            direction: Direction::Forward,
        }
    }

    pub fn waypoints(points: Vec<Waypoint<T>>, period: T) -> Self {
        Self {
            kind: GaitKind::Waypoints(points),
            center: ShapeState::new(T::zero(), T::zero()),
            period,
            direction: Direction::Forward,
        }
    }

    pub fn with_direction(mut self, direction: Direction) -> Self {
        self.direction = direction;
        self
    }

    pub fn reversed(&self) -> Self {
        self.clone().with_direction(self.direction.reversed())
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidGait(msg));
        if !(self.period > T::zero() && self.period.is_finite()) {
            return bad(format!("period must be positive and finite, got {}", self.period));
        }
        if !(self.center.alpha1.is_finite() && self.center.alpha2.is_finite()) {
            return bad("center must be finite".into());
        }
        match &self.kind {
            GaitKind::Square { amplitude } => {
                if !(*amplitude >= T::zero() && amplitude.is_finite()) {
                    return bad(format!("amplitude must be non-negative and finite, got {amplitude}"));
                }
            }
            GaitKind::Ellipse { amplitudes } => {
                if !amplitudes.iter().all(|a| *a >= T::zero() && a.is_finite()) {
                    return bad("amplitudes must be non-negative and finite".into());
                }
            }
            GaitKind::Waypoints(points) => {
                if points.len() < 2 {
                    return bad(format!("need at least 2 waypoints, got {}", points.len()));
                }
                let mut sum = T::zero();
                for (i, p) in points.iter().enumerate() {
                    if !(p.fraction > T::zero() && p.fraction.is_finite()) {
                        return bad(format!("waypoint {i} fraction must be positive, got {}", p.fraction));
                    }
                    if !(p.shape.alpha1.is_finite() && p.shape.alpha2.is_finite()) {
                        return bad(format!("waypoint {i} shape must be finite"));
                    }
                    sum = sum + p.fraction;
                }
                if (sum - T::one()).abs() > T::lit(1e-9).max(T::epsilon() * T::lit(8.0)) {
                    return bad(format!("waypoint fractions must sum to 1, got {sum}"));
                }
            }
        }
        Ok(())
    }

    /// Vertices and per-edge fractions in traversal order, or `None` for the
    /// smooth ellipse.
    fn polygon(&self) -> Option<(Vec<ShapeState<T>>, Vec<T>)> {
        let (mut pts, mut fr) = match &self.kind {
            GaitKind::Ellipse { .. } => return None,
            GaitKind::Square { amplitude } => {
                let a = *amplitude;
                let c = self.center;
                let corner = |s1: T, s2: T| ShapeState::new(c.alpha1 + s1 * a, c.alpha2 + s2 * a);
                let (p, m) = (T::one(), -T::one());
                let q = T::lit(0.25);
                (vec![corner(p, p), corner(m, p), corner(m, m), corner(p, m)], vec![q; 4])
            }
            GaitKind::Waypoints(points) => (
                points.iter().map(|w| w.shape).collect(),
                points.iter().map(|w| w.fraction).collect(),
            ),
        };
        if self.direction == Direction::Reverse {
            pts[1..].reverse();
            fr.reverse();
        }
        Some((pts, fr))
    }

    fn segments(&self) -> Option<Vec<Segment<T>>> {
        let (pts, fr) = self.polygon()?;
        let n = pts.len();
        let total: T = fr.iter().fold(T::zero(), |a, &b| a + b);
        let mut cum = T::zero();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let start = cum / total;
            cum = cum + fr[i];
            let end = if i + 1 == n { T::one() } else { cum / total };
            out.push(Segment {
                start_time: start * self.period,
                duration: (end - start) * self.period,
                from: pts[i],
                to: pts[(i + 1) % n],
            });
        }
        Some(out)
    }
}

fn wrap<T: Real>(t: T, period: T) -> T {
    let r = t - (t / period).floor() * period;
    if r >= period || r < T::zero() {
        T::zero()
    } else {
        r
    }
}

fn locate<T: Real>(segments: &[Segment<T>], t: T) -> usize {
    segments.partition_point(|s| s.start_time <= t).saturating_sub(1)
}

fn ellipse_at<T: Real>(gait: &GaitSpec<T>, amplitudes: [T; 2], t: T) -> (ShapeState<T>, ShapeRate<T>) {
    let w = T::TAU() * T::lit(gait.direction.sign() as f64) / gait.period;
    let (s, c) = (w * t).sin_cos();
    (
        ShapeState::new(
            gait.center.alpha1 + amplitudes[0] * c,
            gait.center.alpha2 + amplitudes[1] * s,
        ),
        ShapeRate::new(-amplitudes[0] * w * s, amplitudes[1] * w * c),
    )
}

/// Shape and its time derivative at `t` (taken modulo the period). At a
/// corner the rate of the segment that starts there is returned.
pub fn gait_shape<T: Real>(gait: &GaitSpec<T>, t: T) -> (ShapeState<T>, ShapeRate<T>) {
    let t = wrap(t, gait.period);
    match &gait.kind {
        GaitKind::Ellipse { amplitudes } => ellipse_at(gait, *amplitudes, t),
        _ => {
            let segs = gait.segments().expect("polygonal gait");
            segs[locate(&segs, t)].eval(t)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    #[default]
    Rk4,
    Euler,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntegratorSettings {
    pub steps_per_cycle: usize,
    pub cycles: usize,
    pub method: Method,
}

impl Default for IntegratorSettings {
    fn default() -> Self {
        Self {
            steps_per_cycle: 1000,
            cycles: 1,
            method: Method::Rk4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample<T> {
    pub t: T,
    pub pose: Pose<T>,
    pub shape: ShapeState<T>,
    pub twist: BodyTwist<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory<T> {
    pub samples: Vec<Sample<T>>,
    pub gait: GaitSpec<T>,
    pub model: Model<T>,
    pub settings: IntegratorSettings,
}

impl<T: Real> Trajectory<T> {
    pub fn final_pose(&self) -> Pose<T> {
        self.samples.last().map(|s| s.pose).unwrap_or_else(Pose::identity)
    }
}

struct Stepper<'a, T> {
    gait: &'a GaitSpec<T>,
    segments: Option<Vec<Segment<T>>>,
    model: &'a Model<T>,
}

impl<T: Real> Stepper<'_, T> {
    /// Shape at cycle time `u`, following the segment that contains `anchor`.
    fn shape(&self, u: T, anchor: T) -> (ShapeState<T>, ShapeRate<T>) {
        match (&self.segments, &self.gait.kind) {
            (Some(segs), _) => segs[locate(segs, anchor)].eval(u),
            (None, GaitKind::Ellipse { amplitudes }) => ellipse_at(self.gait, *amplitudes, u),
            _ => unreachable!(),
        }
    }

    fn twist(&self, u: T, anchor: T, time: T) -> Result<(ShapeState<T>, BodyTwist<T>)> {
        let (shape, rate) = self.shape(u, anchor);
        let a = local_connection(&shape, self.model).map_err(|e| match e {
            Error::NearSingularConfiguration {
                alpha1,
                alpha2,
                condition,
                ..
            } => Error::NearSingularConfiguration {
                alpha1,
                alpha2,
                condition,
                time: Some(time.as_f64()),
            },
            other => other,
        })?;
        Ok((shape, a.apply(&rate)))
    }
}

/// `dexp⁻¹` for `ġ = g·ξ̂` truncated after the double bracket.
fn dexpinv<T: Real>(u: &BodyTwist<T>, xi: &BodyTwist<T>) -> BodyTwist<T> {
    let c1 = u.bracket(xi);
    let c2 = u.bracket(&c1);
    xi.add(&c1.scale(T::lit(0.5))).add(&c2.scale(T::lit(1.0 / 12.0)))
}

impl<T: Real> Stepper<'_, T> {
    /// Cycle-relative corner times strictly inside `(u0, u1)`.
    fn corners_within(&self, u0: T, u1: T) -> Vec<T> {
        let eps = T::lit(1e-12) * self.gait.period;
        match &self.segments {
            Some(segs) => segs
                .iter()
                .map(|s| s.start_time)
                .filter(|&b| b > u0 + eps && b < u1 - eps)
                .collect(),
            None => Vec::new(),
        }
    }

    /// Point inside the first smooth piece of `[u0, u1]`.
    fn start_anchor(&self, u0: T, u1: T) -> T {
        let end = self.corners_within(u0, u1).first().copied().unwrap_or(u1);
        (u0 + end) * T::lit(0.5)
    }

    /// One geometric step over `[u0, u1]`, which must not contain a corner.
    fn advance(
        &self,
        pose: Pose<T>,
        u0: T,
        u1: T,
        cycle: T,
        method: Method,
        k1: Option<BodyTwist<T>>,
    ) -> Result<Pose<T>> {
        let half = T::lit(0.5);
        let h = u1 - u0;
        let um = u0 + h * half;
        let k1 = match k1 {
            Some(k) => k,
            None => self.twist(u0, um, cycle + u0)?.1,
        };
        let step = match method {
            Method::Euler => k1.scale(h),
            Method::Rk4 => {
                let (_, xm) = self.twist(um, um, cycle + um)?;
                let (_, x1) = self.twist(u1, um, cycle + u1)?;
                let k2 = dexpinv(&k1.scale(h * half), &xm);
                let k3 = dexpinv(&k2.scale(h * half), &xm);
                let k4 = dexpinv(&k3.scale(h), &x1);
                let two = T::lit(2.0);
                k1.add(&k2.scale(two))
                    .add(&k3.scale(two))
                    .add(&k4)
                    .scale(h / T::lit(6.0))
            }
        };
        Ok(pose.compose(&exp(&step, T::one())))
    }
}

/// Fixed-step reconstruction of the body motion along `cycles` repetitions
/// of `gait`, starting from the identity pose.
///
/// The shape is evaluated from the gait, never integrated. A step that
/// contains a corner of a polygonal gait is split there, so every sub-step
/// sees a smooth shape and the method keeps its order for any step count.
pub fn integrate_gait<T: Real>(
    gait: &GaitSpec<T>,
    model: &Model<T>,
    settings: IntegratorSettings,
) -> Result<Trajectory<T>> {
    gait.validate()?;
    let n = settings.steps_per_cycle;
    if n < 8 {
        return Err(Error::InvalidGait(format!(
            "steps_per_cycle must be at least 8, got {n}"
        )));
    }
    let stepper = Stepper {
        gait,
        segments: gait.segments(),
        model,
    };
    let period = gait.period;
    let nt = T::lit(n as f64);
    let cycle_time = |j: usize| period * T::lit(j as f64) / nt;

    let total = n * settings.cycles;
    let mut samples = Vec::with_capacity(total + 1);
    let mut pose = Pose::identity();
    for s in 0..total {
        let cycle = T::lit((s / n) as f64) * period;
        let j = s % n;
        let (u0, u1) = (cycle_time(j), cycle_time(j + 1));
        let mut knots = vec![u0];
        knots.extend(stepper.corners_within(u0, u1));
        knots.push(u1);
        let (shape, twist) = stepper.twist(u0, stepper.start_anchor(u0, u1), cycle + u0)?;
        samples.push(Sample {
            t: cycle + u0,
            pose,
            shape,
            twist,
        });
        for (i, w) in knots.windows(2).enumerate() {
            let k1 = if i == 0 { Some(twist) } else { None };
            pose = stepper.advance(pose, w[0], w[1], cycle, settings.method, k1)?;
        }
    }
    let t_end = period * T::lit(settings.cycles as f64);
    let (shape, twist) = stepper.twist(T::zero(), stepper.start_anchor(T::zero(), cycle_time(1)), t_end)?;
    samples.push(Sample {
        t: t_end,
        pose,
        shape,
        twist,
    });
    Ok(Trajectory {
        samples,
        gait: gait.clone(),
        model: *model,
        settings,
    })
}

/// Holonomy of the trajectory: its final pose relative to its first.
pub fn net_displacement<T: Real>(traj: &Trajectory<T>) -> Result<Pose<T>> {
    let (first, last) = match (traj.samples.first(), traj.samples.last()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Ok(Pose::identity()),
    };
    let span = (last.t - first.t).as_f64();
    let period = traj.gait.period.as_f64();
    let cycles = span / period;
    if (cycles - cycles.round()).abs() > 1e-9 * cycles.abs().max(1.0) {
        return Err(Error::IncompleteCycle { span, period });
    }
    Ok(first.pose.inverse().compose(&last.pose))
}
