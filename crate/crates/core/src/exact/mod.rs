//! Exact arithmetic on rational multiples of π and interval-set calculus.

mod interval_set;
mod rational_pi;

pub use interval_set::{Interval, IntervalSet};
pub use rational_pi::RationalPi;
