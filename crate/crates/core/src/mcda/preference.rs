//! Generalized criteria: maps a directed score difference to a preference
//! degree in `[0, 1]`.

use serde::{Deserialize, Serialize};

use crate::rational::Rational;

/// Denominator used to approximate the Gaussian degree as a rational.
pub const GAUSSIAN_DENOMINATOR: i64 = 1_000_000_000_000;

/// The six standard preference-function shapes.
///
/// `Usual` is the default. Threshold semantics: `q` is the indifference
/// threshold, `p` the strict-preference threshold, `s` the Gaussian
/// inflection point.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum PreferenceFunction {
    #[default]
    Usual,
    UShape {
        q: Rational,
    },
    VShape {
        p: Rational,
    },
    Level {
        q: Rational,
        p: Rational,
    },
    Linear {
        q: Rational,
        p: Rational,
    },
    Gaussian {
        s: Rational,
    },
}

impl PreferenceFunction {
    /// Checks the threshold constraints of the variant. On failure returns a
    /// human-readable reason.
    pub fn check(&self) -> Result<(), String> {
        match self {
            PreferenceFunction::Usual => Ok(()),
            PreferenceFunction::UShape { q } => non_negative("q", q),
            PreferenceFunction::VShape { p } => positive("p", p),
            PreferenceFunction::Level { q, p } | PreferenceFunction::Linear { q, p } => {
                non_negative("q", q)?;
                if p <= q {
                    Err(format!("p ({p}) must be greater than q ({q})"))
                } else {
                    Ok(())
                }
            }
            PreferenceFunction::Gaussian { s } => positive("s", s),
        }
    }

    /// Preference degree for a directed difference `d` (already oriented so
    /// that positive means "better").
    ///
    /// Thresholds are assumed valid; see [`PreferenceFunction::check`].
    pub fn degree(&self, d: &Rational) -> Rational {
        if !d.is_positive() {
            return Rational::zero();
        }
        match self {
            PreferenceFunction::Usual => Rational::one(),
            PreferenceFunction::UShape { q } => {
                if d <= q {
                    Rational::zero()
                } else {
                    Rational::one()
                }
            }
            PreferenceFunction::VShape { p } => {
                if d <= p {
                    d / p
                } else {
                    Rational::one()
                }
            }
            PreferenceFunction::Level { q, p } => {
                if d <= q {
                    Rational::zero()
                } else if d <= p {
                    Rational::new(1, 2)
                } else {
                    Rational::one()
                }
            }
            PreferenceFunction::Linear { q, p } => {
                if d <= q {
                    Rational::zero()
                } else if d <= p {
                    (d - q) / (p - q)
                } else {
                    Rational::one()
                }
            }
            PreferenceFunction::Gaussian { s } => gaussian_degree(d, s),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            PreferenceFunction::Usual => "usual",
            PreferenceFunction::UShape { .. } => "u_shape",
            PreferenceFunction::VShape { .. } => "v_shape",
            PreferenceFunction::Level { .. } => "level",
            PreferenceFunction::Linear { .. } => "linear",
            PreferenceFunction::Gaussian { .. } => "gaussian",
        }
    }
}

fn non_negative(name: &str, v: &Rational) -> Result<(), String> {
    if v.is_negative() {
        Err(format!("{name} ({v}) must be >= 0"))
    } else {
        Ok(())
    }
}

fn positive(name: &str, v: &Rational) -> Result<(), String> {
    if v.is_positive() {
        Ok(())
    } else {
        Err(format!("{name} ({v}) must be > 0"))
    }
}

// 1 - exp(-d^2 / 2s^2), snapped to a multiple of 1/GAUSSIAN_DENOMINATOR.
fn gaussian_degree(d: &Rational, s: &Rational) -> Rational {
    let ratio = (d / s).to_f64();
    let value = 1.0 - (-(ratio * ratio) / 2.0).exp();
    let scaled = (value * GAUSSIAN_DENOMINATOR as f64).round();
    let clamped = scaled.clamp(0.0, GAUSSIAN_DENOMINATOR as f64) as i64;
    Rational::new(clamped, GAUSSIAN_DENOMINATOR)
}
