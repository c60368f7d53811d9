use thiserror::Error;

use crate::exact::{IntervalSet, RationalPi};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("empty interval [{lo}, {hi})")]
    EmptyInterval {
        lo: Box<RationalPi>,
        hi: Box<RationalPi>,
    },

    #[error("unknown catalog set `{0}`")]
    UnknownCatalog(String),

    /// The closure of the set contains 0, so dyadic enumeration is unbounded.
    #[error("set {0} touches 0; dyadic enumeration needs a set bounded away from 0")]
    TouchesZero(IntervalSet),

    #[error(
        "{set} is not a wavelet set (translation congruent: {translation}, dilation congruent: {dilation})"
    )]
    NotWaveletSet {
        set: IntervalSet,
        translation: bool,
        dilation: bool,
    },

    #[error("no dyadic dilate of {x} lands in the base wavelet set")]
    NoDyadicLanding { x: RationalPi },

    #[error("{0} is outside [-pi, pi)")]
    OutsideBaseInterval(RationalPi),

    #[error("query window {0} must lie inside [-pi, pi)")]
    WindowOutsideBase(IntervalSet),

    #[error("evaluation at 0 is undefined")]
    AtZero,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("output error: {0}")]
    Output(String),
}

impl Error {
    /// Short machine-readable label for the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::EmptyInterval { .. } => "empty_interval",
            Error::UnknownCatalog(_) => "unknown_catalog",
            Error::TouchesZero(_) => "touches_zero",
            Error::NotWaveletSet { .. } => "not_wavelet_set",
            Error::NoDyadicLanding { .. } => "no_dyadic_landing",
            Error::OutsideBaseInterval(_) => "outside_base_interval",
            Error::WindowOutsideBase(_) => "window_outside_base",
            Error::AtZero => "at_zero",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::Output(_) => "output",
        }
    }

    /// Parse and usage-type failures, as opposed to violated mathematical preconditions.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::EmptyInterval { .. }
                | Error::UnknownCatalog(_)
                | Error::InvalidArgument(_)
        )
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Output(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Output(e.to_string())
    }
}
