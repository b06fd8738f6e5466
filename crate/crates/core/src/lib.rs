//! Kinematics of the three-link (Purcell) swimmer in a viscous fluid.
//!
//! The numeric pipeline solves the drag force balance for the local
//! connection `A(α)`, integrates body motion along periodic gaits and
//! compares the result against a published closed form.
//!
//! Everything numeric is generic over [`Real`] (`f32` or `f64`); the aliases
//! below fix the scalar to `f64`.

#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod connection;
pub mod error;
pub mod gait;
pub mod io;
pub mod linalg;
pub mod model;
pub mod oracle;
pub mod real;
pub mod se2;
pub mod verify;

pub use connection::{
    base_twist, connection_curvature, local_connection, sample_field, ConnectionLocalForm, CurvatureGrid, FieldGrid,
    GridSpec,
};
pub use error::{Error, Result};
pub use gait::{
    gait_shape, integrate_gait, net_displacement, Direction, GaitKind, GaitSpec, IntegratorSettings, Method,
    Trajectory, Waypoint,
};
pub use model::{DragMode, GeometryVariant, Model, ShapeRate, ShapeState, SwimmerParams, Wrench};
pub use oracle::{oracle_connection, oracle_entry, OracleEntryBreakdown, OracleReading};
pub use real::Real;
pub use se2::{BodyTwist, Pose};

pub type Pose64 = Pose<f64>;
pub type Pose32 = Pose<f32>;
pub type Twist64 = BodyTwist<f64>;
pub type Twist32 = BodyTwist<f32>;
pub type Shape64 = ShapeState<f64>;
pub type Params64 = SwimmerParams<f64>;
pub type Model64 = Model<f64>;
pub type Connection64 = ConnectionLocalForm<f64>;
pub type Gait64 = GaitSpec<f64>;
pub type Trajectory64 = Trajectory<f64>;
