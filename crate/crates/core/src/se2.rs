//! Planar rigid-body group SE(2).
//!
//! Poses are stored as `(x, y, theta)` with the heading left unwrapped, so
//! accumulated rotation over many gait cycles stays monotone. Twists are body
//! (left-trivialized) velocities: a pose evolves as `ġ = g·ξ̂`.

use crate::real::Real;

/// Default `|ω·dt|` below which [`exp`] switches to its series form.
pub const SMALL_ANGLE_THRESHOLD: f64 = 1e-6;

/// Group element of SE(2).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Pose<T> {
    pub x: T,
    pub y: T,
    pub theta: T,
}

/// Body velocity `(longitudinal, lateral, angular)`; an element of se(2).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BodyTwist<T> {
    pub vx: T,
    pub vy: T,
    pub omega: T,
}

impl<T: Real> Pose<T> {
    pub fn new(x: T, y: T, theta: T) -> Self {
        Self { x, y, theta }
    }

    pub fn identity() -> Self {
        Self::new(T::zero(), T::zero(), T::zero())
    }

    /// Group product `self · other`.
    pub fn compose(&self, other: &Self) -> Self {
        compose(self, other)
    }

    pub fn inverse(&self) -> Self {
        inverse(self)
    }

    /// Same pose with heading mapped into `(-π, π]`.
    pub fn normalized(&self) -> Self {
        Self::new(self.x, self.y, normalize_angle(self.theta))
    }

    /// Homogeneous 3×3 matrix, row major.
    pub fn to_matrix(&self) -> [[T; 3]; 3] {
        let (s, c) = self.theta.sin_cos();
        [[c, -s, self.x], [s, c, self.y], [T::zero(), T::zero(), T::one()]]
    }

    /// Largest absolute componentwise difference; headings compared unwrapped.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        (self.x - other.x)
            .abs()
            .max((self.y - other.y).abs())
            .max((self.theta - other.theta).abs())
    }
}

impl<T: Real> BodyTwist<T> {
    pub fn new(vx: T, vy: T, omega: T) -> Self {
        Self { vx, vy, omega }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero())
    }

    pub fn as_array(&self) -> [T; 3] {
        [self.vx, self.vy, self.omega]
    }

    pub fn from_array(v: [T; 3]) -> Self {
        Self::new(v[0], v[1], v[2])
    }

    pub fn scale(&self, s: T) -> Self {
        Self::new(self.vx * s, self.vy * s, self.omega * s)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.vx + other.vx, self.vy + other.vy, self.omega + other.omega)
    }

    /// Lie bracket `[self, other]` in se(2).
    pub fn bracket(&self, other: &Self) -> Self {
        Self::new(
            self.vy * other.omega - self.omega * other.vy,
            self.omega * other.vx - self.vx * other.omega,
            T::zero(),
        )
    }
}

pub fn compose<T: Real>(a: &Pose<T>, b: &Pose<T>) -> Pose<T> {
    let (s, c) = a.theta.sin_cos();
    Pose::new(a.x + c * b.x - s * b.y, a.y + s * b.x + c * b.y, a.theta + b.theta)
}

pub fn inverse<T: Real>(a: &Pose<T>) -> Pose<T> {
    let (s, c) = a.theta.sin_cos();
    Pose::new(-(c * a.x + s * a.y), s * a.x - c * a.y, -a.theta)
}

/// Maps an angle into `(-π, π]`.
pub fn normalize_angle<T: Real>(theta: T) -> T {
    let two_pi = T::TAU();
    let mut r = theta - two_pi * (theta / two_pi).round();
    if r <= -T::PI() {
        r = r + two_pi;
    } else if r > T::PI() {
        r = r - two_pi;
    }
    r
}

/// Exponential of the constant twist `xi` held for `dt`, with the default
/// small-angle threshold.
pub fn exp<T: Real>(xi: &BodyTwist<T>, dt: T) -> Pose<T> {
    exp_with_threshold(xi, dt, T::lit(SMALL_ANGLE_THRESHOLD))
}

/// Exponential of `xi·dt`.
///
/// With `φ = ω·dt`, the translation is `V(φ)·v·dt` where
/// `V = [[sin φ/φ, -(1-cos φ)/φ], [(1-cos φ)/φ, sin φ/φ]]`. Below `threshold`
/// the two coefficients use their second-order Taylor expansions.
pub fn exp_with_threshold<T: Real>(xi: &BodyTwist<T>, dt: T, threshold: T) -> Pose<T> {
    let phi = xi.omega * dt;
    let ux = xi.vx * dt;
    let uy = xi.vy * dt;
    let (a, b) = if phi.abs() < threshold {
        let phi2 = phi * phi;
        (
            T::one() - phi2 / T::lit(6.0),
            phi / T::lit(2.0) - phi * phi2 / T::lit(24.0),
        )
    } else {
        let (s, c) = phi.sin_cos();
        (s / phi, (T::one() - c) / phi)
    };
    Pose::new(a * ux - b * uy, b * ux + a * uy, phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn mat_mul(a: [[f64; 3]; 3], b: [[f64; 3]; 3]) -> [[f64; 3]; 3] {
        let mut out = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        out
    }

    fn from_matrix(m: [[f64; 3]; 3]) -> Pose<f64> {
        Pose::new(m[0][2], m[1][2], m[1][0].atan2(m[0][0]))
    }

    fn assert_pose(p: Pose<f64>, x: f64, y: f64, theta: f64, eps: f64) {
        assert_abs_diff_eq!(p.x, x, epsilon = eps);
        assert_abs_diff_eq!(p.y, y, epsilon = eps);
        assert_abs_diff_eq!(p.theta, theta, epsilon = eps);
    }

    #[test]
    fn compose_identity_and_quarter_turn() {
        let p = Pose::new(1.0, 2.0, 0.3);
        assert_eq!(Pose::identity().compose(&p), p);
        let q = Pose::new(0.0, 0.0, FRAC_PI_2).compose(&Pose::new(1.0, 0.0, 0.0));
        assert_pose(q, 0.0, 1.0, FRAC_PI_2, 1e-15);
    }

    #[test]
    fn compose_matches_homogeneous_matrices() {
        let a = Pose::new(0.3, -0.1, 0.7);
        let b = Pose::new(0.2, 0.5, -0.4);
        let expected = from_matrix(mat_mul(a.to_matrix(), b.to_matrix()));
        let got = a.compose(&b);
        assert_pose(got, expected.x, expected.y, expected.theta, 1e-15);
    }

    #[test]
    fn inverse_cases() {
        assert_eq!(Pose::<f64>::identity().inverse(), Pose::new(-0.0, 0.0, -0.0));
        assert_pose(Pose::new(1.0, 0.0, 0.0).inverse(), -1.0, 0.0, 0.0, 0.0);

        // Closed-form inverse of [[R, t], [0, 1]] is [[Rᵀ, -Rᵀt], [0, 1]].
        let a = Pose::new(0.3, -0.1, 0.7);
        let m = a.to_matrix();
        let ix = -(m[0][0] * m[0][2] + m[1][0] * m[1][2]);
        let iy = -(m[0][1] * m[0][2] + m[1][1] * m[1][2]);
        let inv = a.inverse();
        assert_pose(inv, ix, iy, -0.7, 1e-15);
        let id = mat_mul(m, inv.to_matrix());
        assert_abs_diff_eq!(id[0][0], 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(id[0][2], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(id[1][2], 0.0, epsilon = 1e-15);
    }

    #[test]
    fn exp_pure_translation_and_rotation() {
        assert_pose(exp(&BodyTwist::new(1.5, 0.0, 0.0), 2.0), 3.0, 0.0, 0.0, 0.0);
        assert_pose(exp(&BodyTwist::new(0.0, 0.0, 0.7), 2.0), 0.0, 0.0, 1.4, 0.0);
        assert_eq!(exp(&BodyTwist::zero(), 123.0), Pose::identity());
    }

    /// Sub-stepped forward integration of ẋ = R(θ)v, θ̇ = ω using the midpoint
    /// heading on each sub-step.
    fn integrate_twist(xi: BodyTwist<f64>, dt: f64, n: usize) -> Pose<f64> {
        let h = dt / n as f64;
        let (mut x, mut y) = (0.0, 0.0);
        for i in 0..n {
            let th = xi.omega * (i as f64 + 0.5) * h;
            x += h * (th.cos() * xi.vx - th.sin() * xi.vy);
            y += h * (th.sin() * xi.vx + th.cos() * xi.vy);
        }
        Pose::new(x, y, xi.omega * dt)
    }

    #[test]
    fn exp_quarter_arc_matches_substepped_integration() {
        let xi = BodyTwist::new(1.0, 0.0, FRAC_PI_2);
        let oracle = integrate_twist(xi, 1.0, 200_000);
        assert_abs_diff_eq!(oracle.x, 2.0 / PI, epsilon = 1e-10);
        assert_abs_diff_eq!(oracle.y, 2.0 / PI, epsilon = 1e-10);
        let got = exp(&xi, 1.0);
        assert_pose(got, oracle.x, oracle.y, FRAC_PI_2, 1e-10);
        assert_pose(got, 2.0 / PI, 2.0 / PI, FRAC_PI_2, 1e-15);
    }

    #[test]
    fn exp_continuous_across_threshold() {
        // At |ω·dt| = threshold·(1 ± 0.1) the series and closed-form branches
        // must agree, so switching branch never introduces a jump.
        let xi = BodyTwist::new(0.8, -1.3, 1.0);
        for factor in [0.9, 1.1, -0.9, -1.1] {
            let dt = SMALL_ANGLE_THRESHOLD * factor;
            let series = exp_with_threshold(&xi, dt, 1.0);
            let closed = exp_with_threshold(&xi, dt, 0.0);
            assert!(series.max_abs_diff(&closed) < 1e-9);
        }
    }

    #[test]
    fn series_branch_accuracy() {
        let xi = BodyTwist::new(0.3, 0.9, 1.0);
        let dt = 5e-7;
        let series = exp_with_threshold(&xi, dt, 1.0);
        let oracle = integrate_twist(xi, dt, 64);
        assert!(series.max_abs_diff(&oracle) < 1e-18);
    }

    #[test]
    fn bracket_is_antisymmetric() {
        let a = BodyTwist::new(0.2, -0.7, 1.1);
        let b = BodyTwist::new(-0.4, 0.3, 0.5);
        let ab = a.bracket(&b);
        let ba = b.bracket(&a);
        assert_eq!(ab.add(&ba), BodyTwist::zero());
    }

    #[test]
    fn normalize_angle_range() {
        assert_abs_diff_eq!(normalize_angle(3.0 * PI), PI, epsilon = 1e-12);
        assert_abs_diff_eq!(normalize_angle(-PI), PI, epsilon = 1e-12);
        assert_abs_diff_eq!(normalize_angle(7.0), 7.0 - 2.0 * PI, epsilon = 1e-12);
        assert_eq!(normalize_angle(0.25), 0.25);
    }

    #[test]
    fn works_in_single_precision() {
        let p = Pose::<f32>::new(0.5, -0.25, 0.3);
        let id = p.compose(&p.inverse());
        assert!(id.max_abs_diff(&Pose::identity()) < 1e-6);
    }
}
