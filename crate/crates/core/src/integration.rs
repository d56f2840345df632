//! Cost bounds for integration of smooth functions on `[0,1]^d`.

use serde::{Deserialize, Serialize};

use crate::classify::{Evidence, EvidenceKind, Outcome, Verdict};
use crate::error::{Error, Result};
use crate::hilbert::STParams;

/// Default constant of the two-branch cost bound.
pub const DEFAULT_C: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// Basic cubature rule.
    #[serde(rename = "q")]
    QRule,
    /// Modified algorithm with the two-branch bound.
    #[serde(rename = "a")]
    ARule,
    /// Clenshaw-Curtis Smolyak construction.
    #[serde(rename = "ccs")]
    Ccs,
}

impl Variant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::QRule => "q",
            Variant::ARule => "a",
            Variant::Ccs => "ccs",
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" => Ok(Variant::QRule),
            "a" => Ok(Variant::ARule),
            "ccs" => Ok(Variant::Ccs),
            other => Err(Error::Parse(format!("unknown integration variant {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegrationBound {
    pub variant: Variant,
    pub c: f64,
}

impl IntegrationBound {
    pub fn new(variant: Variant, c: f64) -> Result<Self> {
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::InvalidInput("constant C must be positive".into()));
        }
        Ok(Self { variant, c })
    }

    /// Log-cost used as a surrogate for `ln n(ε, Int_d)`.
    pub fn ln_cost(&self, eps: f64, d: u32) -> Result<CostRow> {
        match self.variant {
            Variant::QRule => {
                let ln = q_cost_ln(eps, d)?;
                Ok(CostRow { eps, d, ln_cost: ln, branch: "cubature".into() })
            }
            Variant::ARule | Variant::Ccs => {
                let ln = a_cost_log(eps, d, self.c)?;
                let branch = if eps >= eps0(d) { "moderate" } else { "small" };
                let branch = if branch == "moderate" && d == 1 { "moderate-ln2" } else { branch };
                Ok(CostRow { eps, d, ln_cost: ln, branch: branch.into() })
            }
        }
    }

    pub fn classify(&self, st: STParams) -> Verdict {
        classify_integration(st, self.variant)
    }
}

/// One row of a cost table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CostRow {
    pub eps: f64,
    pub d: u32,
    pub ln_cost: f64,
    pub branch: String,
}

/// `ε₀(d) = exp(-4√d)`.
pub fn eps0(d: u32) -> f64 {
    (-4.0 * (d as f64).sqrt()).exp()
}

/// `ln N(Q(ε,d)) = ⌈max{4√d, ln ε⁻¹}⌉ · (1 + ln[1 + d / ln ε⁻¹])`.
pub fn q_cost_ln(eps: f64, d: u32) -> Result<f64> {
    if d == 0 {
        return Err(Error::UnsupportedDimension(0));
    }
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(Error::InvalidInput(format!("accuracy {eps} outside (0, 1]")));
    }
    let l = -eps.ln();
    if l == 0.0 {
        return Err(Error::DivisionByZero("ln(1/eps) vanishes at eps = 1".into()));
    }
    let df = d as f64;
    let m = (4.0 * df.sqrt()).max(l).ceil();
    Ok(m * (1.0 + (1.0 + df / l).ln()))
}

/// `N(Q(ε,d))` as a real number.
pub fn q_cost(eps: f64, d: u32) -> Result<f64> {
    q_cost_ln(eps, d).map(f64::exp)
}

/// `C·√d·ln max{d,2}` for `ε >= ε₀(d)`, else `C·ln² ε⁻¹`.
pub fn a_cost_log(eps: f64, d: u32, c: f64) -> Result<f64> {
    if d == 0 {
        return Err(Error::UnsupportedDimension(0));
    }
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidInput(format!("accuracy {eps} outside (0, 1)")));
    }
    if eps >= eps0(d) {
        let df = d as f64;
        Ok(c * df.sqrt() * df.max(2.0).ln())
    } else {
        let l = -eps.ln();
        Ok(c * l * l)
    }
}

pub fn classify_integration(st: STParams, variant: Variant) -> Verdict {
    // thresholds compared as 2t > 1 and 3t > 2
    let (t_ok, clause, label) = match variant {
        Variant::QRule => (2.0 * st.t > 1.0, "integration.q-rule", "t > 1/2"),
        Variant::ARule => (2.0 * st.t > 1.0, "integration.a-rule", "t > 1/2"),
        Variant::Ccs => (3.0 * st.t > 2.0, "integration.clenshaw-curtis-smolyak", "t > 2/3"),
    };
    if st.s > 0.0 && t_ok {
        Verdict {
            outcome: Outcome::SufficientHolds,
            clause: clause.into(),
            evidence: Some(Evidence::new(
                EvidenceKind::SufficientOnly,
                &format!("upper bound gives s > 0 and {label}"),
            )),
        }
    } else {
        Verdict {
            outcome: Outcome::Inconclusive,
            clause: clause.into(),
            evidence: Some(Evidence::new(
                EvidenceKind::OpenGap,
                &format!("only sufficient conditions (s > 0 and {label}) are known"),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    fn st(s: f64, t: f64) -> STParams {
        STParams::new(s, t).unwrap()
    }

    #[test]
    fn q_cost_examples() {
        let v = q_cost((-1.0f64).exp(), 1).unwrap();
        let expected = 16.0 * E.powi(4);
        assert!((v - expected).abs() <= 1e-12 * expected);
        let v = q_cost_ln((-16.0f64).exp(), 4).unwrap();
        assert!((v - 16.0 * (1.0 + 1.25f64.ln())).abs() < 1e-12);
        assert!(matches!(q_cost(1.0, 1), Err(Error::DivisionByZero(_))));
    }

    #[test]
    fn a_cost_examples() {
        assert!((eps0(4) - (-8.0f64).exp()).abs() < 1e-15);
        assert!((a_cost_log(0.5, 4, 5.0).unwrap() - 5.0 * 2.0 * 4f64.ln()).abs() < 1e-12);
        assert!((a_cost_log((-5.0f64).exp(), 1, 5.0).unwrap() - 125.0).abs() < 1e-9);
        assert!((a_cost_log(0.5, 1, 5.0).unwrap() - 5.0 * 2f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn branches_agree_in_order_at_switch() {
        // the small-accuracy branch equals 16·C·d at the switch point
        let c = DEFAULT_C;
        let c_max = 16.0 * c;
        for d in 1..=100u32 {
            let e0 = eps0(d);
            let upper = a_cost_log(e0, d, c).unwrap();
            let lower = a_cost_log(e0 * (1.0 - 1e-12), d, c).unwrap();
            let ratio = upper / lower;
            assert!(ratio >= 1.0 / (4.0 * c_max) && ratio <= 4.0 * c_max, "d={d} ratio={ratio}");
        }
    }

    #[test]
    fn small_eps_cubature_bound() {
        for d in [1u32, 2, 5, 10] {
            for k in 1..30 {
                let eps = eps0(d) * 0.5f64.powi(k);
                let l = -eps.ln();
                let ln_q = q_cost_ln(eps, d).unwrap();
                assert!(ln_q <= 1.25 * l * (1.0 + l) + 1e-9, "d={d} eps={eps}");
                assert!(a_cost_log(eps, d, 5.0).unwrap() <= 5.0 * l * l + 1e-9);
            }
        }
    }

    #[test]
    fn classification() {
        let v = classify_integration(st(0.1, 0.6), Variant::ARule);
        assert_eq!((v.outcome, v.clause.as_str()), (Outcome::SufficientHolds, "integration.a-rule"));
        assert_eq!(classify_integration(st(1.0, 0.5), Variant::ARule).outcome, Outcome::Inconclusive);
        let v = classify_integration(st(0.1, 0.6), Variant::Ccs);
        assert_eq!((v.outcome, v.clause.as_str()), (Outcome::Inconclusive, "integration.clenshaw-curtis-smolyak"));
        assert_eq!(classify_integration(st(1.0, 2.0 / 3.0), Variant::Ccs).outcome, Outcome::Inconclusive);
        assert_eq!(classify_integration(st(1.0, 0.6667), Variant::Ccs).outcome, Outcome::SufficientHolds);
        assert_eq!(classify_integration(st(1.0, 1.0), Variant::ARule).outcome, Outcome::SufficientHolds);
        assert_eq!(classify_integration(st(0.0, 1.0), Variant::QRule).outcome, Outcome::Inconclusive);
    }
}
