use thiserror::Error;

/// Errors raised by the kinematics, oracle and gait layers.
///
/// The `Display` form of every variant starts with the variant name so the
/// command-line front end can print it verbatim on stderr.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("NearSingularConfiguration: cond(B1) = {condition:.3e} at alpha = ({alpha1}, {alpha2}){}", time_suffix(*.time))]
    NearSingularConfiguration {
        alpha1: f64,
        alpha2: f64,
        condition: f64,
        /// Simulation time when raised from the gait integrator.
        time: Option<f64>,
    },

    #[error("OracleDenominatorZero: {label} = {value:.3e} at alpha = ({alpha1}, {alpha2})")]
    OracleDenominatorZero {
        label: String,
        value: f64,
        alpha1: f64,
        alpha2: f64,
    },

    #[error("UnknownEntryLabel: `{0}` (expected one of A11, A12, A21, A22, A31, A32)")]
    UnknownEntryLabel(String),

    #[error("InvalidGridSpec: {0}")]
    InvalidGridSpec(String),

    #[error("InvalidGait: {0}")]
    InvalidGait(String),

    #[error("IncompleteCycle: trajectory spans {span} which is not a whole number of periods ({period})")]
    IncompleteCycle { span: f64, period: f64 },

    #[error("InvalidParams: {0}")]
    InvalidParams(String),
}

fn time_suffix(time: Option<f64>) -> String {
    match time {
        Some(t) => format!(", t = {t}"),
        None => String::new(),
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
