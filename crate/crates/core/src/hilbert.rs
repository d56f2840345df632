//! Compact linear problems between Hilbert spaces given by their per-dimension
//! squared singular values `λ_{d,j}`.
//!
//! The information complexity is `#{j : λ_{d,j} > ε² CRI_d}`; the condition
//! checkers sample the limit quantities that decide `(s, t)`-weak tractability
//! and report trends as evidence.

use std::collections::BTreeMap;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::num::{ceil_rational, ln_rational, pow_rational, rational_from_f64, to_f64, Count, Rational};
use crate::spectra::{DecayClass, EigenSeq, Eigenvalue, Trace};
use crate::tensor::{self, TensorProblem};
use crate::trend::{trend_flag, TrendFlag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Criterion {
    #[serde(rename = "abs")]
    Absolute,
    #[serde(rename = "norm")]
    Normalized,
}

impl Criterion {
    pub fn as_str(&self) -> &'static str {
        match self {
            Criterion::Absolute => "abs",
            Criterion::Normalized => "norm",
        }
    }

    /// `CRI_d` given `λ_{d,1}`.
    pub fn normalizer(&self, first: &Rational) -> Rational {
        match self {
            Criterion::Absolute => Rational::one(),
            Criterion::Normalized => first.clone(),
        }
    }
}

impl std::str::FromStr for Criterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "abs" | "absolute" => Ok(Criterion::Absolute),
            "norm" | "normalized" => Ok(Criterion::Normalized),
            other => Err(Error::Parse(format!("unknown criterion {other:?}"))),
        }
    }
}

/// Tractability exponents `(s, t)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct STParams {
    pub s: f64,
    pub t: f64,
}

impl STParams {
    pub fn new(s: f64, t: f64) -> Result<Self> {
        if !(s >= 0.0 && t >= 0.0 && s.is_finite() && t.is_finite()) {
            return Err(Error::InvalidInput(format!("(s, t) = ({s}, {t}) must be finite and nonnegative")));
        }
        Ok(Self { s, t })
    }

    /// Componentwise order `(s, t) <= (σ, τ)`.
    pub fn le(&self, other: &STParams) -> bool {
        self.s <= other.s && self.t <= other.t
    }
}

/// How the spectrum of the `d`-dimensional instance is produced.
#[derive(Debug, Clone, PartialEq)]
pub enum DimensionRule {
    /// Finitely many listed dimensions.
    Explicit(BTreeMap<u32, EigenSeq>),
    /// The same sequence in every dimension.
    Constant(EigenSeq),
    /// `λ_{d,j} = factor^d · base_j`.
    Scaled { base: EigenSeq, factor: Rational },
    /// `d`-fold tensor product of a univariate sequence.
    Tensor(EigenSeq),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneralProblem {
    pub rule: DimensionRule,
}

/// Spectrum of one instance `S_d`.
#[derive(Debug, Clone)]
pub enum DimSpectrum {
    Seq(EigenSeq),
    Tensor { base: EigenSeq, d: u32 },
}

impl DimSpectrum {
    /// `λ_{d,1}`.
    pub fn first(&self) -> Rational {
        match self {
            DimSpectrum::Seq(s) => s.first(),
            DimSpectrum::Tensor { base, d } => pow_rational(&base.first(), *d),
        }
    }

    /// `λ_{d,2}`.
    pub fn second(&self) -> Eigenvalue {
        match self {
            DimSpectrum::Seq(s) => s.eigen_at(2),
            DimSpectrum::Tensor { base, d } => {
                let head = pow_rational(&base.first(), d - 1);
                match base.eigen_at(2) {
                    Eigenvalue::Exact(v) => Eigenvalue::Exact(head * v),
                    Eigenvalue::Real(v) => Eigenvalue::Real(to_f64(&head) * v),
                }
            }
        }
    }

    /// `#{j : λ_{d,j} > threshold}`.
    pub fn count_above(&self, threshold: &Rational) -> Result<Count> {
        match self {
            DimSpectrum::Seq(s) => s.count_above(threshold),
            DimSpectrum::Tensor { base, d } => {
                tensor::count_products_above(base, *d, threshold, &crate::budget::Budget::default()).map(|c| c.count)
            }
        }
    }

    /// `ln λ_{d,j}` for `j = 1..=n` (`-inf` for zeros).
    pub fn ln_values(&self, n: u64) -> Result<Vec<f64>> {
        match self {
            DimSpectrum::Seq(s) => Ok((1..=n).map(|j| s.ln_eigen_at(j)).collect()),
            DimSpectrum::Tensor { base, d } => tensor::top_ln_eigenvalues(base, *d, n),
        }
    }

    pub fn trace(&self) -> Trace {
        match self {
            DimSpectrum::Seq(s) => s.trace(),
            DimSpectrum::Tensor { base, d } => match base.trace() {
                Trace::Exact(t) => Trace::Exact(pow_rational(&t, *d)),
                Trace::Enclosure { lo, hi } => Trace::Enclosure { lo: lo.powi(*d as i32), hi: hi.powi(*d as i32) },
                Trace::Infinite => Trace::Infinite,
            },
        }
    }

    pub fn decay_class(&self) -> DecayClass {
        match self {
            DimSpectrum::Seq(s) => s.decay_class(),
            DimSpectrum::Tensor { base, .. } => base.decay_class(),
        }
    }
}

impl GeneralProblem {
    pub fn new(rule: DimensionRule) -> Self {
        Self { rule }
    }

    pub fn constant(seq: EigenSeq) -> Self {
        Self::new(DimensionRule::Constant(seq))
    }

    pub fn spectrum(&self, d: u32) -> Result<DimSpectrum> {
        if d == 0 {
            return Err(Error::UnsupportedDimension(0));
        }
        match &self.rule {
            DimensionRule::Explicit(map) => {
                map.get(&d).cloned().map(DimSpectrum::Seq).ok_or(Error::UnsupportedDimension(d))
            }
            DimensionRule::Constant(s) => Ok(DimSpectrum::Seq(s.clone())),
            DimensionRule::Scaled { base, factor } => Ok(DimSpectrum::Seq(base.scaled(&pow_rational(factor, d)))),
            DimensionRule::Tensor(base) => Ok(DimSpectrum::Tensor { base: base.clone(), d }),
        }
    }

    /// `CRI_d`.
    pub fn normalizer(&self, crit: Criterion, d: u32) -> Result<Rational> {
        Ok(crit.normalizer(&self.spectrum(d)?.first()))
    }

    /// `ε_d^init = √λ_{d,1}`.
    pub fn initial_error(&self, d: u32) -> Result<f64> {
        Ok(to_f64(&self.spectrum(d)?.first()).sqrt())
    }

    /// `ε < ε_d^init` (absolute) or `ε < 1` (normalized), decided exactly.
    pub fn admissible(&self, crit: Criterion, eps: &Rational, d: u32) -> Result<bool> {
        let sq = eps * eps;
        Ok(match crit {
            Criterion::Absolute => sq < self.spectrum(d)?.first(),
            Criterion::Normalized => sq < Rational::one(),
        })
    }

    /// `n^crit(ε, S_d) = #{j : λ_{d,j} > ε² CRI_d}`.
    pub fn info_complexity(&self, crit: Criterion, eps: &Rational, d: u32) -> Result<Count> {
        if !eps.is_positive() {
            return Err(Error::InvalidInput("accuracy must be positive".into()));
        }
        let spec = self.spectrum(d)?;
        let threshold = eps * eps * crit.normalizer(&spec.first());
        spec.count_above(&threshold)
    }

    /// Samples `(λ_{d,j} / CRI_d) ln^(2/s) j` on an index window.
    pub fn check_c1(&self, crit: Criterion, s: f64, d: u32, window: &[u64]) -> Result<ConditionReport> {
        if !(s > 0.0) {
            return Err(Error::InvalidInput("s must be positive".into()));
        }
        let spec = self.spectrum(d)?;
        let ln_cri = ln_rational(&crit.normalizer(&spec.first()));
        let max_j = window.iter().copied().max().unwrap_or(1);
        let ln_vals = spec.ln_values(max_j)?;
        let samples: Vec<[f64; 2]> = window
            .iter()
            .map(|&j| {
                let v = (ln_vals[(j - 1) as usize] - ln_cri).exp() * (j as f64).ln().powf(2.0 / s);
                [j as f64, v]
            })
            .collect();
        let values: Vec<f64> = samples.iter().map(|p| p[1]).collect();
        let mut params = Map::new();
        params.insert("criterion".into(), json!(crit.as_str()));
        params.insert("s".into(), json!(s));
        params.insert("d".into(), json!(d));
        Ok(ConditionReport {
            condition: "C1".into(),
            params,
            samples,
            flag: trend_flag(&values),
            witness: None,
            symbolic: spec.decay_class().passes(s),
            empirical: true,
            skipped: Vec::new(),
        })
    }

    /// Empirical supremum of `β^(-2/s) (λ_{d,j}/CRI_d) ln^(2/s) j` over
    /// `β` in `betas`, `d <= d_max` and `⌈exp(d^t √β)⌉ + 1 <= j <= j_budget`.
    pub fn check_c2(
        &self,
        crit: Criterion,
        st: STParams,
        betas: &[f64],
        d_max: u32,
        j_budget: u64,
    ) -> Result<ConditionReport> {
        let floor = |d: u32, beta: f64| -> Option<u64> {
            let x = (d as f64).powf(st.t) * beta.sqrt();
            let e = x.exp().ceil();
            if e.is_finite() && e < 1e18 {
                Some(e as u64 + 1)
            } else {
                None
            }
        };
        let mut report = self.bounded_sup(crit, st.s, betas, d_max, j_budget, &floor)?;
        report.condition = "C2".into();
        report.params.insert("t".into(), json!(st.t));
        Ok(report)
    }

    /// As [`check_c2`](Self::check_c2) with a `d`-independent index floor `g(β)`.
    pub fn check_c4(
        &self,
        crit: Criterion,
        s: f64,
        betas: &[f64],
        g: &dyn Fn(f64) -> u64,
        d_max: u32,
        j_budget: u64,
    ) -> Result<ConditionReport> {
        let floor = |_d: u32, beta: f64| Some(g(beta).max(1));
        let mut report = self.bounded_sup(crit, s, betas, d_max, j_budget, &floor)?;
        report.condition = "C4".into();
        Ok(report)
    }

    fn bounded_sup(
        &self,
        crit: Criterion,
        s: f64,
        betas: &[f64],
        d_max: u32,
        j_budget: u64,
        floor: &dyn Fn(u32, f64) -> Option<u64>,
    ) -> Result<ConditionReport> {
        if !(s > 0.0) {
            return Err(Error::InvalidInput("s must be positive".into()));
        }
        if betas.iter().any(|b| !(*b > 0.0 && *b < 1.0)) {
            return Err(Error::InvalidInput("every beta must lie in (0, 1)".into()));
        }
        let checkpoints: Vec<u64> = {
            let mut c: Vec<u64> = (1..).map(|k| 10u64.pow(k)).take_while(|&j| j < j_budget).collect();
            c.push(j_budget);
            c
        };
        // running[i] = sup over cells restricted to j <= checkpoints[i]
        let mut running = vec![0.0f64; checkpoints.len()];
        let mut witness: Option<Witness> = None;
        let mut skipped = Vec::new();
        for d in 1..=d_max {
            let spec = match self.spectrum(d) {
                Ok(s) => s,
                Err(Error::UnsupportedDimension(_)) => continue,
                Err(e) => return Err(e),
            };
            let ln_cri = ln_rational(&crit.normalizer(&spec.first()));
            let ln_vals = spec.ln_values(j_budget)?;
            for &beta in betas {
                let Some(lo) = floor(d, beta).filter(|&lo| lo <= j_budget) else {
                    skipped.push(SkippedCell { beta, d, reason: "index floor exceeds the index budget".into() });
                    continue;
                };
                let scale = beta.powf(-2.0 / s);
                for j in lo..=j_budget {
                    let ln_l = ln_vals[(j - 1) as usize];
                    if ln_l == f64::NEG_INFINITY {
                        break;
                    }
                    let v = scale * (ln_l - ln_cri).exp() * (j as f64).ln().powf(2.0 / s);
                    for (slot, &cp) in running.iter_mut().zip(&checkpoints) {
                        if j <= cp && v > *slot {
                            *slot = v;
                        }
                    }
                    if witness.as_ref().map_or(v > 0.0, |w| v > w.value) {
                        witness = Some(Witness { beta: Some(beta), d, j, value: v });
                    }
                }
            }
        }
        let samples: Vec<[f64; 2]> = checkpoints.iter().zip(&running).map(|(&j, &v)| [j as f64, v]).collect();
        let mut params = Map::new();
        params.insert("criterion".into(), json!(crit.as_str()));
        params.insert("s".into(), json!(s));
        params.insert("betas".into(), json!(betas));
        params.insert("d_max".into(), json!(d_max));
        params.insert("j_budget".into(), json!(j_budget));
        Ok(ConditionReport {
            condition: String::new(),
            params,
            samples,
            flag: trend_flag(&running),
            witness,
            symbolic: None,
            empirical: true,
            skipped,
        })
    }

    /// Samples `λ_{d,2} / CRI_d` over dimensions.
    pub fn check_c3(&self, crit: Criterion, dims: &[u32]) -> Result<ConditionReport> {
        let mut samples = Vec::with_capacity(dims.len());
        for &d in dims {
            let spec = self.spectrum(d)?;
            let cri = crit.normalizer(&spec.first());
            let v = match spec.second() {
                Eigenvalue::Exact(x) => to_f64(&(x / cri)),
                Eigenvalue::Real(x) => x / to_f64(&cri),
            };
            samples.push([d as f64, v]);
        }
        let values: Vec<f64> = samples.iter().map(|p| p[1]).collect();
        let symbolic = match &self.rule {
            DimensionRule::Explicit(_) => None,
            DimensionRule::Constant(s) => Some(s.second_is_zero()),
            DimensionRule::Scaled { base, factor } => {
                Some(base.second_is_zero() || (crit == Criterion::Absolute && *factor < Rational::one()))
            }
            DimensionRule::Tensor(base) => {
                Some(base.second_is_zero() || (crit == Criterion::Absolute && base.first() < Rational::one()))
            }
        };
        let mut params = Map::new();
        params.insert("criterion".into(), json!(crit.as_str()));
        Ok(ConditionReport {
            condition: "C3".into(),
            params,
            samples,
            flag: trend_flag(&values),
            witness: None,
            symbolic,
            empirical: true,
            skipped: Vec::new(),
        })
    }

    /// `trace(W_d) / CRI_d` as an exact rational upper bound.
    pub fn trace_ratio(&self, crit: Criterion, d: u32) -> Result<Rational> {
        let spec = self.spectrum(d)?;
        let cri = crit.normalizer(&spec.first());
        match spec.trace() {
            Trace::Exact(t) => Ok(t / cri),
            Trace::Enclosure { hi, .. } => Ok(rational_from_f64(hi)? / cri),
            Trace::Infinite => Err(Error::InfiniteTrace),
        }
    }

    /// Complexity bound for function-value information derived from the
    /// complexity of arbitrary linear information at accuracy `ε/√2`.
    pub fn std_upper_bound_for(&self, crit: Criterion, eps: &Rational, d: u32) -> Result<Count> {
        let ratio = self.trace_ratio(crit, d)?;
        let spec = self.spectrum(d)?;
        let threshold = eps * eps / Rational::from_integer(2.into()) * crit.normalizer(&spec.first());
        let n_all = spec.count_above(&threshold)?;
        std_upper_bound(&n_all, eps, &ratio)
    }
}

/// `n_all · ⌈4 ε^(-2)⌉ · ⌈trace_ratio⌉`, exact.
pub fn std_upper_bound(n_all: &Count, eps: &Rational, trace_ratio: &Rational) -> Result<Count> {
    if !(eps.is_positive() && *eps < Rational::one()) {
        return Err(Error::InvalidInput("accuracy must lie in (0, 1)".into()));
    }
    if !trace_ratio.is_positive() {
        return Err(Error::InvalidInput("trace ratio must be positive".into()));
    }
    let four_over = Rational::from_integer(4.into()) / (eps * eps);
    let a = ceil_rational(&four_over).to_biguint().expect("positive");
    let b = ceil_rational(trace_ratio).to_biguint().expect("positive");
    Ok(n_all * a * b)
}

/// Samples `ln⌈ratio(d)⌉ / d^t` for given trace ratios.
pub fn check_trace_condition(ratios: &[(u32, f64)], t: f64) -> Result<ConditionReport> {
    let mut samples = Vec::with_capacity(ratios.len());
    for &(d, r) in ratios {
        if !r.is_finite() {
            return Err(Error::InfiniteTrace);
        }
        samples.push([d as f64, r.ceil().max(1.0).ln() / (d as f64).powf(t)]);
    }
    let values: Vec<f64> = samples.iter().map(|p| p[1]).collect();
    let mut params = Map::new();
    params.insert("t".into(), json!(t));
    Ok(ConditionReport {
        condition: "trace".into(),
        params,
        samples,
        flag: trend_flag(&values),
        witness: None,
        symbolic: None,
        empirical: true,
        skipped: Vec::new(),
    })
}

/// Trace condition for a tensor product problem, with the closed-form verdict
/// `t > 1` or `trace(W_1)/CRI_1 <= 1`.
pub fn check_tensor_trace_condition(
    tp: &TensorProblem,
    crit: Criterion,
    t: f64,
    dims: &[u32],
) -> Result<ConditionReport> {
    let base = &tp.base;
    let ratio1 = match base.trace() {
        Trace::Exact(tr) => to_f64(&(tr / crit.normalizer(&base.first()))),
        Trace::Enclosure { hi, .. } => hi / to_f64(&crit.normalizer(&base.first())),
        Trace::Infinite => return Err(Error::InfiniteTrace),
    };
    // ln⌈r^d⌉ through logs to stay finite for large d
    let ratios: Vec<(u32, f64)> = dims.iter().map(|&d| (d, ratio1.powi(d as i32))).collect();
    let mut report = if ratios.iter().all(|(_, r)| r.is_finite()) {
        check_trace_condition(&ratios, t)?
    } else {
        let samples = dims
            .iter()
            .map(|&d| [d as f64, (d as f64 * ratio1.ln()).max(0.0) / (d as f64).powf(t)])
            .collect::<Vec<_>>();
        let values: Vec<f64> = samples.iter().map(|p| p[1]).collect();
        ConditionReport {
            condition: "trace".into(),
            params: Map::new(),
            samples,
            flag: trend_flag(&values),
            witness: None,
            symbolic: None,
            empirical: true,
            skipped: Vec::new(),
        }
    };
    report.params.insert("t".into(), json!(t));
    report.params.insert("criterion".into(), json!(crit.as_str()));
    report.params.insert("univariate_ratio".into(), json!(ratio1));
    report.symbolic = Some(t > 1.0 || ratio1 <= 1.0);
    Ok(report)
}

/// Maximiser of a bounded-sup report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub beta: Option<f64>,
    pub d: u32,
    pub j: u64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SkippedCell {
    pub beta: f64,
    pub d: u32,
    pub reason: String,
}

/// Sampled evidence for one limit condition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConditionReport {
    pub condition: String,
    pub params: Map<String, Value>,
    pub samples: Vec<[f64; 2]>,
    pub flag: TrendFlag,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    /// Verdict decided from family parameters, when available.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub symbolic: Option<bool>,
    #[serde(default)]
    pub empirical: bool,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub skipped: Vec<SkippedCell>,
}

impl ConditionReport {
    pub fn values(&self) -> Vec<f64> {
        self.samples.iter().map(|p| p[1]).collect()
    }

    pub fn last_value(&self) -> Option<f64> {
        self.samples.last().map(|p| p[1])
    }
}

/// Default index window `{10, 10², 10³, 10⁴}`.
pub fn default_window() -> Vec<u64> {
    vec![10, 100, 1000, 10_000]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{int, rat};
    use num_bigint::BigUint;

    fn geo(c: Rational, q: Rational) -> EigenSeq {
        EigenSeq::geometric(c, q).unwrap()
    }

    #[test]
    fn initial_errors() {
        assert_eq!(GeneralProblem::constant(geo(int(4), rat(1, 2))).initial_error(7).unwrap(), 2.0);
        let fr = EigenSeq::finite_rank(vec![int(1)]).unwrap();
        assert_eq!(GeneralProblem::constant(fr).initial_error(1).unwrap(), 1.0);
        let p = EigenSeq::poly(int(9), int(1)).unwrap();
        assert_eq!(GeneralProblem::constant(p).initial_error(3).unwrap(), 3.0);
    }

    #[test]
    fn complexity_examples() {
        let p = GeneralProblem::constant(EigenSeq::poly(int(1), int(2)).unwrap());
        assert_eq!(p.info_complexity(Criterion::Absolute, &rat(1, 10), 1).unwrap(), BigUint::from(9u32));
        assert_eq!(p.info_complexity(Criterion::Normalized, &int(1), 1).unwrap(), BigUint::from(0u32));
        let f = GeneralProblem::constant(EigenSeq::finite_rank(vec![int(1), rat(1, 4)]).unwrap());
        assert_eq!(f.info_complexity(Criterion::Absolute, &rat(1, 2), 1).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn unsupported_dimensions() {
        let mut map = BTreeMap::new();
        map.insert(2, geo(int(1), rat(1, 2)));
        let p = GeneralProblem::new(DimensionRule::Explicit(map));
        assert_eq!(p.initial_error(3), Err(Error::UnsupportedDimension(3)));
        assert!(p.initial_error(2).is_ok());
    }

    #[test]
    fn c1_examples() {
        let w = default_window();
        let g = GeneralProblem::constant(geo(int(1), rat(1, 2)));
        assert_eq!(g.check_c1(Criterion::Normalized, 1.0, 1, &w).unwrap().symbolic, Some(true));
        let l = GeneralProblem::constant(EigenSeq::log(int(1), int(2)).unwrap());
        let r = l.check_c1(Criterion::Absolute, 1.0, 1, &w).unwrap();
        assert_eq!(r.symbolic, Some(false));
        assert!(r.values().windows(2).all(|w| w[1] > w[0]));
        let f = GeneralProblem::constant(EigenSeq::finite_rank(vec![int(1)]).unwrap());
        assert_eq!(f.check_c1(Criterion::Absolute, 2.0, 1, &w).unwrap().symbolic, Some(true));
    }

    #[test]
    fn c3_examples() {
        let dims = [1, 2, 3, 4, 5, 6];
        let scaled = GeneralProblem::new(DimensionRule::Scaled { base: geo(int(1), rat(1, 2)), factor: rat(1, 2) });
        let r = scaled.check_c3(Criterion::Absolute, &dims).unwrap();
        for p in &r.samples {
            assert_eq!(p[1], 0.5f64.powi(p[0] as i32 + 1));
        }
        assert_eq!(r.flag, TrendFlag::Decreasing);
        let f = GeneralProblem::constant(EigenSeq::finite_rank(vec![int(1)]).unwrap());
        assert!(f.check_c3(Criterion::Normalized, &dims).unwrap().values().iter().all(|v| *v == 0.0));
        let g = GeneralProblem::constant(geo(int(1), rat(1, 2)));
        let r = g.check_c3(Criterion::Normalized, &dims).unwrap();
        assert!(r.values().iter().all(|v| *v == 0.5));
        assert_eq!(r.flag, TrendFlag::Flat);
        assert_eq!(r.symbolic, Some(false));
    }

    #[test]
    fn c2_and_c4_examples() {
        let tp = GeneralProblem::new(DimensionRule::Tensor(geo(int(1), rat(1, 2))));
        let st = STParams::new(1.0, 1.0).unwrap();
        let r = tp.check_c2(Criterion::Normalized, st, &[0.1, 0.25, 0.5], 6, 100_000).unwrap();
        let w = r.witness.clone().expect("witness");
        assert!(w.value.is_finite() && w.value > 0.0);
        assert_ne!(r.flag, TrendFlag::Increasing);

        let f = GeneralProblem::constant(EigenSeq::finite_rank(vec![int(1)]).unwrap());
        let r = f.check_c2(Criterion::Absolute, st, &[0.1, 0.5], 3, 1000).unwrap();
        assert_eq!(r.last_value(), Some(0.0));
        let r = f.check_c4(Criterion::Absolute, 1.0, &[0.1, 0.5], &|_| 2, 3, 1000).unwrap();
        assert_eq!(r.last_value(), Some(0.0));

        let g = GeneralProblem::constant(geo(int(1), rat(1, 2)));
        let r = g.check_c4(Criterion::Absolute, 1.0, &[0.1, 0.25, 0.5], &|_| 2, 3, 10_000).unwrap();
        assert!(r.last_value().unwrap().is_finite());

        let l = GeneralProblem::constant(EigenSeq::log(int(1), int(4)).unwrap());
        let small = l.check_c4(Criterion::Absolute, 1.0, &[0.5], &|_| 2, 1, 1000).unwrap();
        let large = l.check_c4(Criterion::Absolute, 1.0, &[0.5], &|_| 2, 1, 100_000).unwrap();
        assert!(large.last_value().unwrap() > small.last_value().unwrap());
        assert_ne!(large.flag, TrendFlag::Decreasing);
    }

    #[test]
    fn std_bound_examples() {
        let one = BigUint::from(1u32);
        assert_eq!(std_upper_bound(&one, &rat(1, 2), &int(2)).unwrap(), BigUint::from(32u32));
        assert_eq!(std_upper_bound(&BigUint::from(0u32), &rat(1, 3), &int(7)).unwrap(), BigUint::from(0u32));
        assert_eq!(std_upper_bound(&BigUint::from(5u32), &rat(1, 2), &rat(3, 2)).unwrap(), BigUint::from(160u32));
        assert!(std_upper_bound(&one, &int(1), &int(1)).is_err());
        let p = GeneralProblem::constant(EigenSeq::log(int(1), int(1)).unwrap());
        assert_eq!(p.std_upper_bound_for(Criterion::Absolute, &rat(1, 2), 1), Err(Error::InfiniteTrace));
    }

    #[test]
    fn tensor_trace_condition_examples() {
        let dims = [1, 2, 4, 8, 16, 32];
        let half = TensorProblem::new(EigenSeq::finite_rank(vec![rat(1, 4), rat(1, 4)]).unwrap());
        assert_eq!(check_tensor_trace_condition(&half, Criterion::Absolute, 0.5, &dims).unwrap().symbolic, Some(true));
        let two = TensorProblem::new(geo(int(1), rat(1, 2)));
        assert_eq!(check_tensor_trace_condition(&two, Criterion::Absolute, 2.0, &dims).unwrap().symbolic, Some(true));
        let r = check_tensor_trace_condition(&two, Criterion::Absolute, 1.0, &dims).unwrap();
        assert_eq!(r.symbolic, Some(false));
        assert_ne!(r.flag, TrendFlag::Decreasing);
    }

    #[test]
    fn reports_round_trip_as_json() {
        let g = GeneralProblem::constant(geo(int(1), rat(1, 2)));
        let r = g.check_c1(Criterion::Normalized, 1.0, 1, &default_window()).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: ConditionReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back.condition, "C1");
        assert_eq!(back.flag, r.flag);
    }
}
