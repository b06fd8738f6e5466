//! Resistive-force model of the three-link swimmer.
//!
//! Link 2 is the base (middle) link; its frame is the base frame. Link 1 hangs
//! off the joint at `(-L, 0)` with relative heading `-α1`, link 3 off the joint
//! at `(+L, 0)` with relative heading `+α2`. Every link has length `2L`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Mat3;
use crate::real::Real;
use crate::se2::BodyTwist;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwimmerParams<T> {
    /// Half-link length `L`.
    pub half_length: T,
    /// Viscous drag coefficient `k`.
    pub drag: T,
}

impl<T: Real> SwimmerParams<T> {
    pub fn new(half_length: T, drag: T) -> Result<Self> {
        if !(half_length > T::zero() && half_length.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "half-link length must be positive and finite, got {half_length}"
            )));
        }
        if !(drag > T::zero() && drag.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "drag coefficient must be positive and finite, got {drag}"
            )));
        }
        Ok(Self { half_length, drag })
    }

    pub fn unit() -> Self {
        Self {
            half_length: T::one(),
            drag: T::one(),
        }
    }
}

/// Joint angles `(α1, α2)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ShapeState<T> {
    pub alpha1: T,
    pub alpha2: T,
}

impl<T: Real> ShapeState<T> {
    pub fn new(alpha1: T, alpha2: T) -> Self {
        Self { alpha1, alpha2 }
    }

    /// `(α2, α1)`.
    pub fn swapped(&self) -> Self {
        Self::new(self.alpha2, self.alpha1)
    }
}

/// Joint rates `(α̇1, α̇2)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ShapeRate<T> {
    pub alpha1_dot: T,
    pub alpha2_dot: T,
}

impl<T: Real> ShapeRate<T> {
    pub fn new(alpha1_dot: T, alpha2_dot: T) -> Self {
        Self { alpha1_dot, alpha2_dot }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero())
    }
}

/// Planar force and moment.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Wrench<T> {
    pub fx: T,
    pub fy: T,
    pub m: T,
}

impl<T: Real> Wrench<T> {
    pub fn new(fx: T, fy: T, m: T) -> Self {
        Self { fx, fy, m }
    }

    pub fn as_array(&self) -> [T; 3] {
        [self.fx, self.fy, self.m]
    }
}

/// Per-link drag law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DragMode {
    /// Coefficients exactly as printed: `kL` lateral, `(2/3)kL²` moment.
    PaperLiteral,
    /// Integrated coefficients: `2kL` lateral, `(2/3)kL³` moment.
    Corrected,
}

/// How the velocity of link 3 is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeometryVariant {
    /// Printed formulas, including `-(1 + cos α2)·L·ξθ` in the lateral row of link 3.
    PaperLiteral,
    /// Rigid-body velocity of the link-3 centre: `+(1 + cos α2)·L·ξθ`.
    Derived,
}

impl DragMode {
    pub const ALL: [DragMode; 2] = [DragMode::PaperLiteral, DragMode::Corrected];

    pub fn name(self) -> &'static str {
        match self {
            DragMode::PaperLiteral => "paper_literal",
            DragMode::Corrected => "corrected",
        }
    }
}

impl GeometryVariant {
    pub const ALL: [GeometryVariant; 2] = [GeometryVariant::PaperLiteral, GeometryVariant::Derived];

    pub fn name(self) -> &'static str {
        match self {
            GeometryVariant::PaperLiteral => "paper_literal",
            GeometryVariant::Derived => "derived",
        }
    }
}

/// Full model configuration: constants plus the two reading choices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Model<T> {
    pub params: SwimmerParams<T>,
    pub mode: DragMode,
    pub variant: GeometryVariant,
}

impl<T: Real> Model<T> {
    pub fn new(params: SwimmerParams<T>, mode: DragMode, variant: GeometryVariant) -> Self {
        Self { params, mode, variant }
    }

    /// `(Corrected, Derived)` with the given constants.
    pub fn corrected(params: SwimmerParams<T>) -> Self {
        Self::new(params, DragMode::Corrected, GeometryVariant::Derived)
    }
}

/// Linear map `F = b1·ξ + b2·α̇` from base twist and shape rate to net wrench.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BMatrix<T> {
    pub b1: Mat3<T>,
    pub b2: [[T; 2]; 3],
}

impl<T: Real> BMatrix<T> {
    pub fn apply(&self, xi: &BodyTwist<T>, rate: &ShapeRate<T>) -> Wrench<T> {
        let v = xi.as_array();
        let mut out = [T::zero(); 3];
        for (r, o) in out.iter_mut().enumerate() {
            *o = self.b1[r][0] * v[0]
                + self.b1[r][1] * v[1]
                + self.b1[r][2] * v[2]
                + self.b2[r][0] * rate.alpha1_dot
                + self.b2[r][1] * rate.alpha2_dot;
        }
        Wrench::new(out[0], out[1], out[2])
    }
}

/// Drag wrench on a single link in its own frame.
pub fn link_wrench<T: Real>(xi_link: &BodyTwist<T>, params: &SwimmerParams<T>, mode: DragMode) -> Wrench<T> {
    let l = params.half_length;
    let k = params.drag;
    let two_thirds = T::lit(2.0) / T::lit(3.0);
    let (lateral, moment) = match mode {
        DragMode::PaperLiteral => (k * l, two_thirds * k * l * l),
        DragMode::Corrected => (T::lit(2.0) * k * l, two_thirds * k * l * l * l),
    };
    Wrench::new(k * l * xi_link.vx, lateral * xi_link.vy, moment * xi_link.omega)
}

/// Body twists `(ξ1, ξ2, ξ3)` of the three links, each in its own frame.
pub fn link_velocities<T: Real>(
    shape: &ShapeState<T>,
    rate: &ShapeRate<T>,
    xi: &BodyTwist<T>,
    params: &SwimmerParams<T>,
    variant: GeometryVariant,
) -> (BodyTwist<T>, BodyTwist<T>, BodyTwist<T>) {
    let l = params.half_length;
    let (s1, c1) = shape.alpha1.sin_cos();
    let (s2, c2) = shape.alpha2.sin_cos();
    let (x, y, w) = (xi.vx, xi.vy, xi.omega);

    let xi1 = BodyTwist::new(
        c1 * x - s1 * y + s1 * l * w,
        s1 * x + c1 * y - (T::one() + c1) * l * w + l * rate.alpha1_dot,
        w - rate.alpha1_dot,
    );

    let arm3 = (T::one() + c2) * l * w;
    let lateral3 = match variant {
        GeometryVariant::PaperLiteral => -s2 * x + c2 * y - arm3 + l * rate.alpha2_dot,
        GeometryVariant::Derived => -s2 * x + c2 * y + arm3 + l * rate.alpha2_dot,
    };
    let xi3 = BodyTwist::new(c2 * x + s2 * y + s2 * l * w, lateral3, w + rate.alpha2_dot);

    (xi1, *xi, xi3)
}

/// Net drag wrench on the swimmer, expressed in the base frame.
pub fn net_wrench<T: Real>(
    shape: &ShapeState<T>,
    rate: &ShapeRate<T>,
    xi: &BodyTwist<T>,
    model: &Model<T>,
) -> Wrench<T> {
    let p = &model.params;
    let (xi1, xi2, xi3) = link_velocities(shape, rate, xi, p, model.variant);
    let f1 = link_wrench(&xi1, p, model.mode);
    let f2 = link_wrench(&xi2, p, model.mode);
    let f3 = link_wrench(&xi3, p, model.mode);

    let l = p.half_length;
    let (s1, c1) = shape.alpha1.sin_cos();
    let (s2, c2) = shape.alpha2.sin_cos();

    // Link 1 → base: rotation by -α1, moment arm from the centre at
    // (-L(1 + cos α1), L sin α1).
    let fx1 = c1 * f1.fx + s1 * f1.fy;
    let fy1 = -s1 * f1.fx + c1 * f1.fy;
    let m1 = l * s1 * f1.fx - l * (T::one() + c1) * f1.fy + f1.m;

    // Link 3 → base: rotation by +α2, centre at (L(1 + cos α2), L sin α2).
    let fx3 = c2 * f3.fx - s2 * f3.fy;
    let fy3 = s2 * f3.fx + c2 * f3.fy;
    let m3 = l * s2 * f3.fx + l * (T::one() + c2) * f3.fy + f3.m;

    Wrench::new(fx1 + f2.fx + fx3, fy1 + f2.fy + fy3, m1 + f2.m + m3)
}

/// Columns of `B = [b1 | b2]` from the five unit inputs.
pub fn build_b<T: Real>(shape: &ShapeState<T>, model: &Model<T>) -> BMatrix<T> {
    let mut b1 = [[T::zero(); 3]; 3];
    let mut b2 = [[T::zero(); 2]; 3];
    let rest = ShapeRate::zero();
    for c in 0..3 {
        let mut unit = [T::zero(); 3];
        unit[c] = T::one();
        let w = net_wrench(shape, &rest, &BodyTwist::from_array(unit), model).as_array();
        for r in 0..3 {
            b1[r][c] = w[r];
        }
    }
    for c in 0..2 {
        let rate = if c == 0 {
            ShapeRate::new(T::one(), T::zero())
        } else {
            ShapeRate::new(T::zero(), T::one())
        };
        let w = net_wrench(shape, &rate, &BodyTwist::zero(), model).as_array();
        for r in 0..3 {
            b2[r][c] = w[r];
        }
    }
    BMatrix { b1, b2 }
}
