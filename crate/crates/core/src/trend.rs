//! Tail-trend flags for finite samples of limit quantities.
//!
//! A sample is `Decreasing` when its last value is at most half the first and
//! its final half is monotone nonincreasing; `Increasing` mirrors this with a
//! factor of two; anything else is `Flat`.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TrendFlag {
    Decreasing,
    Increasing,
    Flat,
}

impl TrendFlag {
    pub fn as_str(&self) -> &'static str {
        match self {
            TrendFlag::Decreasing => "decreasing",
            TrendFlag::Increasing => "increasing",
            TrendFlag::Flat => "flat",
        }
    }
}

pub fn final_half(values: &[f64]) -> &[f64] {
    &values[values.len() / 2..]
}

pub fn trend_flag(values: &[f64]) -> TrendFlag {
    if values.len() < 2 || values.iter().any(|v| v.is_nan()) {
        return TrendFlag::Flat;
    }
    let first = values[0];
    let last = *values.last().expect("nonempty");
    let tail = final_half(values);
    if last <= 0.5 * first && tail.windows(2).all(|w| w[1] <= w[0]) {
        TrendFlag::Decreasing
    } else if last >= 2.0 * first && last > first && tail.windows(2).all(|w| w[1] >= w[0]) {
        TrendFlag::Increasing
    } else {
        TrendFlag::Flat
    }
}

/// Smallest value on the final half of the window.
pub fn tail_min(values: &[f64]) -> f64 {
    final_half(values).iter().copied().fold(f64::INFINITY, f64::min)
}
