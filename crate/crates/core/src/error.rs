//! Error type shared by all modules.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Domain and configuration errors.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("speed {0} is outside [0, 1)")]
    SpeedOutOfRange(f64),

    #[error("rest mass must be positive, got {0}")]
    NonPositiveMass(f64),

    #[error("off the mass shell: |E^2 - p^2 - m^2| = {deviation}, tolerance {tolerance}")]
    OffMassShell { deviation: f64, tolerance: f64 },

    #[error("energy {energy} below rest mass {mass}; negative-energy states carry a branch tag instead")]
    EnergyBelowMass { energy: f64, mass: f64 },

    #[error("{name} must be finite and non-negative, got {value}")]
    InvalidCoordinate { name: &'static str, value: f64 },

    #[error("time-angle coordinates do not match the momentum: mismatch {mismatch}")]
    InconsistentKinematics { mismatch: f64 },

    #[error("winding needs at least {min} samples, got {got}")]
    TooFewSamples { got: usize, min: usize },

    #[error("phase jump of {jump} rad at sample {index} is too close to pi; sample the loop more densely")]
    AliasedSampling { index: usize, jump: f64 },

    #[error("multi-spinor factors carry different momenta")]
    MixedMomenta,

    #[error("a multi-spinor product needs at least one factor")]
    EmptyProduct,

    #[error("Dirac index {index} out of range for order-{order} multi-spinor")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("arc {index}: [{start}, {end}) is not a positive-length arc inside [0, 2*pi]")]
    InvalidArc { index: usize, start: f64, end: f64 },

    #[error("arcs {first} and {second} overlap")]
    OverlappingArcs { first: usize, second: usize },

    #[error("arc lengths sum to {total}, more than the full circle")]
    CircleOverfull { total: f64 },

    #[error("collapse would keep a set of zero measure")]
    EmptyCollapse,

    #[error("detector bin {bin} out of range for {bins} bins")]
    BinOutOfRange { bin: usize, bins: usize },

    #[error("time step must be non-negative, got {0}")]
    NegativeDuration(f64),
}
