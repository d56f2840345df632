//! Approximation numbers of periodic Sobolev embeddings `H^α(T^d) -> L_2(T^d)`.
//!
//! The singular values are `w(k)^(-1/2)` over `k ∈ Z^d`, with weights
//!
//! * `Plus`:  `(1 + Σ k_j²)^α`
//! * `Star`:  `1 + Σ |k_j|^(2α)`
//! * `Sharp`: `(1 + Σ |k_j|)^(2α)`
//!
//! Each weight is a monotone function of a level `L = Σ g(|k_j|)` with
//! `g(v) = v²`, `v^(2α)` or `v`, so the ladder of distinct singular values and
//! their multiplicities is the coefficient sequence of `(Σ_v mult(v) x^g(v))^d`.

use num_bigint::BigUint;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::classify::{Evidence, EvidenceKind, Outcome, Verdict};
use crate::error::{Error, Result};
use crate::hilbert::STParams;
use crate::num::{
    binomial, ceil_rational, ln_count, max_root_below, pow_rational, rational_from_decimal_f64, to_f64, Count, Rational,
};

/// Default cap on ladder work units.
pub const DEFAULT_WORK_BUDGET: u64 = 400_000_000;

/// Relative tolerance for grouping irrational level values.
pub const LEVEL_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Norm {
    Plus,
    Star,
    Sharp,
}

impl Norm {
    pub fn as_str(&self) -> &'static str {
        match self {
            Norm::Plus => "plus",
            Norm::Star => "star",
            Norm::Sharp => "sharp",
        }
    }
}

impl std::str::FromStr for Norm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" => Ok(Norm::Plus),
            "star" => Ok(Norm::Star),
            "sharp" => Ok(Norm::Sharp),
            other => Err(Error::Parse(format!("unknown norm {other:?}"))),
        }
    }
}

/// Extra smoothness marker `(γ, β)` for the shifted embedding.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Hybrid {
    pub gamma: f64,
    pub beta: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SobolevProblem {
    alpha: Rational,
    pub norm: Norm,
    pub hybrid: Option<Hybrid>,
}

/// How the level of a lattice point is formed.
#[derive(Debug, Clone, Copy, PartialEq)]
enum LevelRule {
    /// `L = Σ |k_j|^q` with integer `q`.
    Integer(u32),
    /// `L = Σ |k_j|^q` with non-integer `q`.
    Real(f64),
}

/// One rung of the singular-value ladder.
#[derive(Debug, Clone, PartialEq)]
pub struct Rung {
    pub level: f64,
    pub weight: f64,
    pub singular_value: f64,
    pub multiplicity: Count,
    pub cumulative: Count,
}

/// Distinct singular values up to a level cap, largest first.
#[derive(Debug, Clone, PartialEq)]
pub struct Ladder {
    pub rungs: Vec<Rung>,
    /// Set when irrational levels closer than the tolerance were merged.
    pub tie_warning: bool,
}

impl Ladder {
    pub fn total(&self) -> Count {
        self.rungs.last().map(|r| r.cumulative.clone()).unwrap_or_default()
    }

    /// `a_n` if the ladder reaches index `n`.
    pub fn value_at(&self, n: u64) -> Option<f64> {
        self.rung_at(n).map(|r| r.singular_value)
    }

    pub fn rung_at(&self, n: u64) -> Option<&Rung> {
        let n = Count::from(n);
        let pos = self.rungs.partition_point(|r| r.cumulative < n);
        self.rungs.get(pos)
    }
}

/// Row of an approximation-number table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ApproxRow {
    pub n: u64,
    pub a_n: f64,
    pub level_weight: f64,
    pub cumulative: String,
}

impl SobolevProblem {
    pub fn new(alpha: f64, norm: Norm) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::InvalidInput("smoothness alpha must be positive".into()));
        }
        Self::with_alpha(rational_from_decimal_f64(alpha)?, norm)
    }

    pub fn with_alpha(alpha: Rational, norm: Norm) -> Result<Self> {
        if !alpha.is_positive() {
            return Err(Error::InvalidInput("smoothness alpha must be positive".into()));
        }
        let small = |x: &num_bigint::BigInt| x.to_u32().is_some_and(|v| v <= 1 << 16);
        if !small(alpha.numer()) || !small(alpha.denom()) {
            return Err(Error::InvalidInput(format!("alpha {alpha} is too finely resolved")));
        }
        Ok(Self { alpha, norm, hybrid: None })
    }

    pub fn with_hybrid(mut self, gamma: f64, beta: f64) -> Result<Self> {
        if !(gamma >= 0.0 && beta >= 0.0) {
            return Err(Error::InvalidInput("gamma and beta must be nonnegative".into()));
        }
        self.hybrid = Some(Hybrid { gamma, beta });
        Ok(self)
    }

    pub fn alpha(&self) -> f64 {
        to_f64(&self.alpha)
    }

    pub fn alpha_exact(&self) -> &Rational {
        &self.alpha
    }

    fn level_rule(&self) -> LevelRule {
        match self.norm {
            Norm::Plus => LevelRule::Integer(2),
            Norm::Sharp => LevelRule::Integer(1),
            Norm::Star => {
                let q = &self.alpha * Rational::from_integer(2.into());
                if q.is_integer() {
                    LevelRule::Integer(q.to_integer().to_u32().expect("validated"))
                } else {
                    LevelRule::Real(to_f64(&q))
                }
            }
        }
    }

    /// Weight as a function of the level.
    pub fn weight_of_level(&self, level: f64) -> f64 {
        let a = self.alpha();
        match self.norm {
            Norm::Plus => (1.0 + level).powf(a),
            Norm::Star => 1.0 + level,
            Norm::Sharp => (1.0 + level).powf(2.0 * a),
        }
    }

    /// `w(k)^(-1/2)` as a function of the level.
    pub fn singular_value_of_level(&self, level: f64) -> f64 {
        let a = self.alpha();
        match self.norm {
            Norm::Plus => (1.0 + level).powf(-0.5 * a),
            Norm::Star => (1.0 + level).powf(-0.5),
            Norm::Sharp => (1.0 + level).powf(-a),
        }
    }

    /// `w(k)`.
    pub fn weight(&self, k: &[i64]) -> f64 {
        let a = self.alpha();
        match self.norm {
            Norm::Plus => {
                let s: u128 = k.iter().map(|&v| (v as i128 * v as i128) as u128).sum();
                (1.0 + s as f64).powf(a)
            }
            Norm::Star => 1.0 + k.iter().map(|&v| (v.unsigned_abs() as f64).powf(2.0 * a)).sum::<f64>(),
            Norm::Sharp => {
                let s: u128 = k.iter().map(|&v| v.unsigned_abs() as u128).sum();
                (1.0 + s as f64).powf(2.0 * a)
            }
        }
    }

    /// Ladder of all rungs with level at most `max_level`.
    pub fn ladder(&self, d: u32, max_level: f64, budget: &Budget) -> Result<Ladder> {
        if d == 0 {
            return Err(Error::UnsupportedDimension(0));
        }
        let levels: Vec<(f64, Count)> = match self.level_rule() {
            LevelRule::Integer(1) => {
                // ℓ¹ spheres: C(m, d) - C(m-1, d)
                let top = max_level.floor() as u64;
                budget.charge(top + 1, "building the level ladder")?;
                let mut prev = Count::zero();
                (0..=top)
                    .map(|m| {
                        let c = l1_ball_count(m, d);
                        let diff = &c - &prev;
                        prev = c;
                        (m as f64, diff)
                    })
                    .collect()
            }
            LevelRule::Integer(q) => integer_levels(q, d, max_level.floor() as u64, budget)?
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(l, c)| (l as f64, c))
                .collect(),
            LevelRule::Real(q) => {
                let (levels, tie) = real_levels(q, d, max_level, budget)?;
                return Ok(self.assemble(levels, tie));
            }
        };
        Ok(self.assemble(levels, false))
    }

    fn assemble(&self, levels: Vec<(f64, Count)>, tie_warning: bool) -> Ladder {
        let mut cumulative = Count::zero();
        let rungs = levels
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(level, multiplicity)| {
                cumulative += &multiplicity;
                Rung {
                    level,
                    weight: self.weight_of_level(level),
                    singular_value: self.singular_value_of_level(level),
                    multiplicity,
                    cumulative: cumulative.clone(),
                }
            })
            .collect();
        Ladder { rungs, tie_warning }
    }

    /// Ladder reaching at least index `n`, grown by doubling the level cap.
    pub fn ladder_to_index(&self, d: u32, n: u64, budget: &Budget) -> Result<Ladder> {
        let mut cap = 4.0f64;
        let target = Count::from(n);
        loop {
            let ladder = self.ladder(d, cap, budget)?;
            if ladder.total() >= target {
                return Ok(ladder);
            }
            cap *= 2.0;
        }
    }

    /// `a_{n,d}`, the `n`-th largest singular value.
    pub fn approx_number(&self, n: u64, d: u32) -> Result<f64> {
        self.approx_number_with(n, d, &Budget::new(DEFAULT_WORK_BUDGET))
    }

    pub fn approx_number_with(&self, n: u64, d: u32, budget: &Budget) -> Result<f64> {
        if n == 0 {
            return Err(Error::InvalidInput("indices start at 1".into()));
        }
        Ok(self.ladder_to_index(d, n, budget)?.value_at(n).expect("ladder reaches n"))
    }

    /// Rows `n = 1..=n_max` of the approximation-number table.
    pub fn approx_numbers(&self, d: u32, n_max: u64, budget: &Budget) -> Result<Vec<ApproxRow>> {
        let ladder = self.ladder_to_index(d, n_max.max(1), budget)?;
        Ok((1..=n_max)
            .map(|n| {
                let r = ladder.rung_at(n).expect("ladder reaches n_max");
                ApproxRow { n, a_n: r.singular_value, level_weight: r.weight, cumulative: r.cumulative.to_string() }
            })
            .collect())
    }

    /// `#{k ∈ Z^d : w(k) <= weight_cap}`.
    pub fn count_weight_leq(&self, d: u32, weight_cap: f64, budget: &Budget) -> Result<Count> {
        if !(weight_cap >= 1.0) {
            return Ok(Count::zero());
        }
        let a = self.alpha();
        let max_level = match self.norm {
            Norm::Plus => weight_cap.powf(1.0 / a) - 1.0,
            Norm::Star => weight_cap - 1.0,
            Norm::Sharp => weight_cap.powf(0.5 / a) - 1.0,
        };
        // guard against the cap landing a hair below an exact integer level
        let max_level = if matches!(self.level_rule(), LevelRule::Integer(_)) {
            let r = max_level.round();
            if (max_level - r).abs() <= 1e-9 * r.max(1.0) {
                r
            } else {
                max_level.floor()
            }
        } else {
            max_level
        };
        Ok(self.ladder(d, max_level, budget)?.total())
    }

    /// `#{k : w(k)^(-1/2) > ε}`, with exact thresholds for rational `α`, `ε`.
    pub fn complexity(&self, eps: &Rational, d: u32) -> Result<Count> {
        self.complexity_with(eps, d, &Budget::new(DEFAULT_WORK_BUDGET))
    }

    pub fn complexity_with(&self, eps: &Rational, d: u32, budget: &Budget) -> Result<Count> {
        if !eps.is_positive() {
            return Err(Error::InvalidInput("accuracy must be positive".into()));
        }
        if d == 0 {
            return Err(Error::UnsupportedDimension(0));
        }
        if *eps >= Rational::one() {
            return Ok(Count::zero());
        }
        let inv = Rational::one() / eps;
        let a = self.alpha.numer().to_u32().expect("validated");
        let b = self.alpha.denom().to_u32().expect("validated");
        let max_level = match (self.norm, self.level_rule()) {
            // (1+L)^(a/b) < ε^-2  <=>  (1+L)^a < ε^(-2b)
            (Norm::Plus, _) => max_root_below(a, &pow_rational(&inv, 2 * b)) - BigUint::one(),
            // (1+m)^(2a/b) < ε^-2  <=>  (1+m)^a < ε^(-b)
            (Norm::Sharp, _) => {
                let m = max_root_below(a, &pow_rational(&inv, b)) - BigUint::one();
                let m = m.to_u64().ok_or_else(|| Error::BudgetExceeded {
                    what: "level index beyond 64 bits".into(),
                    limit: u64::MAX,
                })?;
                return Ok(l1_ball_count(m, d));
            }
            // 1 + L < ε^-2
            (Norm::Star, LevelRule::Integer(_)) => {
                (ceil_rational(&(&inv * &inv)) - num_bigint::BigInt::from(2)).to_biguint().expect("ε < 1")
            }
            (Norm::Star, LevelRule::Real(_)) => {
                let cap = to_f64(&(&inv * &inv)) - 1.0;
                let ladder = self.ladder(d, cap, budget)?;
                let strict = ladder.rungs.iter().filter(|r| r.level < cap * (1.0 - LEVEL_TOLERANCE));
                return Ok(strict.map(|r| r.multiplicity.clone()).sum());
            }
        };
        let max_level = max_level
            .to_u64()
            .ok_or_else(|| Error::BudgetExceeded { what: "level index beyond 64 bits".into(), limit: u64::MAX })?;
        Ok(self.ladder(d, max_level as f64, budget)?.total())
    }

    pub fn classify(&self, st: STParams) -> Verdict {
        classify_sobolev(self, st)
    }
}

/// `C(m, d) = #{k ∈ Z^d : ‖k‖_1 <= m} = Σ_i 2^i C(d, i) C(m, i)`.
pub fn l1_ball_count(m: u64, d: u32) -> Count {
    (0..=m.min(d as u64)).map(|i| (BigUint::one() << i) * binomial(d as u64, i) * binomial(m, i)).sum()
}

/// Level multiplicities `#{k ∈ Z^d : Σ |k_j|^q = L}` for `L = 0..=max_level`.
fn integer_levels(q: u32, d: u32, max_level: u64, budget: &Budget) -> Result<Vec<Count>> {
    let len = max_level as usize + 1;
    let steps: Vec<usize> = (0u64..)
        .map(|v| v.checked_pow(q).unwrap_or(u64::MAX))
        .take_while(|&g| g <= max_level)
        .map(|g| g as usize)
        .collect();
    let mut coeffs = vec![Count::zero(); len];
    coeffs[0] = Count::one();
    for _ in 0..d {
        budget.charge((len as u64).saturating_mul(steps.len() as u64), "building the level ladder")?;
        let mut next = vec![Count::zero(); len];
        for (l, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (v, &g) in steps.iter().enumerate() {
                if l + g >= len {
                    break;
                }
                if v == 0 {
                    next[l + g] += c;
                } else {
                    next[l + g] += c << 1u32;
                }
            }
        }
        coeffs = next;
    }
    Ok(coeffs)
}

/// Level multiplicities for irrational per-coordinate contributions `v^q`,
/// grouping values within [`LEVEL_TOLERANCE`]. Returns a tie flag when two
/// grouped values differ by more than rounding noise.
fn real_levels(q: f64, d: u32, max_level: f64, budget: &Budget) -> Result<(Vec<(f64, Count)>, bool)> {
    let slack = max_level * (1.0 + LEVEL_TOLERANCE);
    let steps: Vec<f64> = (0u64..).map(|v| (v as f64).powf(q)).take_while(|&g| g <= slack).collect();
    let mut current: Vec<(f64, Count)> = vec![(0.0, Count::one())];
    let mut tie = false;
    for _ in 0..d {
        budget.charge((current.len() as u64).saturating_mul(steps.len() as u64), "building the level ladder")?;
        let mut next: Vec<(f64, Count)> = Vec::new();
        for (l, c) in &current {
            for (v, &g) in steps.iter().enumerate() {
                let s = l + g;
                if s > slack {
                    break;
                }
                let m = if v == 0 { c.clone() } else { c << 1u32 };
                next.push((s, m));
            }
        }
        next.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut grouped: Vec<(f64, Count)> = Vec::with_capacity(next.len());
        for (s, m) in next {
            match grouped.last_mut() {
                Some((l, c)) if (s - *l) <= LEVEL_TOLERANCE * l.abs().max(1.0) => {
                    if (s - *l) > 1e-13 * l.abs().max(1.0) {
                        tie = true;
                    }
                    *c += m;
                }
                _ => grouped.push((s, m)),
            }
        }
        current = grouped;
    }
    Ok((current, tie))
}

fn sobolev_verdict(p: &SobolevProblem, outcome: Outcome, clause: &str, evidence: Option<Evidence>) -> Verdict {
    match p.hybrid {
        None => Verdict { outcome, clause: clause.into(), evidence },
        Some(h) => Verdict {
            outcome,
            clause: format!("{clause}.hybrid"),
            evidence: Some(evidence.unwrap_or_else(|| {
                Evidence::new(
                    EvidenceKind::Transfer,
                    &format!("complexities of the shifted embedding (gamma={}, beta={}) coincide", h.gamma, h.beta),
                )
            })),
        },
    }
}

/// `(s, t)`-weak tractability of the embedding.
pub fn classify_sobolev(p: &SobolevProblem, st: STParams) -> Verdict {
    let a = p.alpha();
    let (s, t) = (st.s, st.t);
    let region = |s_floor: f64| (s > s_floor && t > 0.0) || (s > 0.0 && t > 1.0);
    match p.norm {
        Norm::Plus => {
            let o = if region(2.0 / a) { Outcome::Holds } else { Outcome::Fails };
            sobolev_verdict(p, o, "sobolev.plus", None)
        }
        Norm::Sharp => {
            let o = if region(1.0 / a) { Outcome::Holds } else { Outcome::Fails };
            sobolev_verdict(p, o, "sobolev.sharp", None)
        }
        Norm::Star => {
            if region(2.0f64.max(1.0 / a)) {
                let ev = Evidence::new(EvidenceKind::SufficientOnly, "sufficient region for the star norm");
                sobolev_verdict(p, Outcome::SufficientHolds, "sobolev.star.sufficient", Some(ev))
            } else if !region(2.0) {
                let ev = Evidence::new(EvidenceKind::NecessaryOnly, "outside the necessary region for the star norm");
                sobolev_verdict(p, Outcome::NecessaryFails, "sobolev.star.necessary", Some(ev))
            } else {
                let ev =
                    Evidence::new(EvidenceKind::OpenGap, "between the necessary and sufficient regions (alpha < 1/2)");
                sobolev_verdict(p, Outcome::Inconclusive, "sobolev.star.gap", Some(ev))
            }
        }
    }
}

/// A failed identity or bound with its location.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub check: String,
    pub d: u32,
    pub n: u64,
    pub alpha: f64,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub checks: u64,
    pub violations: Vec<Violation>,
    /// Smallest `lhs - rhs` margin observed (for inequality checks).
    pub min_margin: f64,
}

impl CheckReport {
    fn new() -> Self {
        Self { checks: 0, violations: Vec::new(), min_margin: f64::INFINITY }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn values_to(p: &SobolevProblem, d: u32, n_max: u64, budget: &Budget) -> Result<Vec<f64>> {
    let ladder = p.ladder_to_index(d, n_max, budget)?;
    Ok((1..=n_max).map(|n| ladder.value_at(n).expect("reached")).collect())
}

/// Checks the power identity between the plus and star norms, the sharp/plus
/// comparison and the value `2^(-1/2)` at index `2d+1` of the star norm.
pub fn verify_identities(
    d_max: u32,
    n_max: u64,
    alphas: &[f64],
    a2d_d_max: u32,
    budget: &Budget,
) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    for d in 1..=d_max {
        let star1 = values_to(&SobolevProblem::new(1.0, Norm::Star)?, d, n_max, budget)?;
        for &alpha in alphas {
            let plus = values_to(&SobolevProblem::new(alpha, Norm::Plus)?, d, n_max, budget)?;
            let sharp = values_to(&SobolevProblem::new(alpha, Norm::Sharp)?, d, n_max, budget)?;
            let plus2 = values_to(&SobolevProblem::new(2.0 * alpha, Norm::Plus)?, d, n_max, budget)?;
            for n in 1..=n_max {
                let i = (n - 1) as usize;
                let rhs = star1[i].powf(alpha);
                report.checks += 1;
                if (plus[i] - rhs).abs() > 1e-12 * rhs.abs() {
                    report.violations.push(Violation { check: "plus-power".into(), d, n, alpha, lhs: plus[i], rhs });
                }
                report.checks += 1;
                let margin = sharp[i] - plus2[i];
                report.min_margin = report.min_margin.min(margin);
                if margin < -1e-12 {
                    report.violations.push(Violation {
                        check: "sharp-dominates-plus".into(),
                        d,
                        n,
                        alpha,
                        lhs: sharp[i],
                        rhs: plus2[i],
                    });
                }
            }
        }
    }
    let target = 0.5f64.sqrt();
    for d in 1..=a2d_d_max {
        for &alpha in alphas {
            let n = 2 * d as u64 + 1;
            let v = SobolevProblem::new(alpha, Norm::Star)?.approx_number_with(n, d, budget)?;
            report.checks += 1;
            if (v - target).abs() > 1e-12 {
                report.violations.push(Violation { check: "star-2d+1".into(), d, n, alpha, lhs: v, rhs: target });
            }
        }
    }
    Ok(report)
}

/// Lower bound `a_{n,d}^{α,+} >= (e(d+2))^(-α/2) n^(-α/d)` for
/// `n >= 11^d e^(d/2)`.
pub fn lower_bound_floor(d: u32) -> u64 {
    (11f64.powi(d as i32) * (0.5 * d as f64).exp()).ceil() as u64
}

pub fn plus_lower_bound(alpha: f64, d: u32, n: u64) -> f64 {
    (std::f64::consts::E * (d as f64 + 2.0)).powf(-alpha / 2.0) * (n as f64).powf(-alpha / d as f64)
}

/// `min{ε^(-1/α), d} · ln[2(ε^(-1/α) + d)]`.
pub fn sharp_log_upper_bound(alpha: f64, d: u32, eps: f64) -> f64 {
    let r = eps.powf(-1.0 / alpha);
    r.min(d as f64) * (2.0 * (r + d as f64)).ln()
}

/// Pointwise check of the plus lower bound on `n_range` (clamped to the
/// validity floor) and of the sharp log-upper bound on `eps_list`.
pub fn verify_bounds(
    d: u32,
    alpha: f64,
    n_range: (u64, u64),
    eps_list: &[Rational],
    budget: &Budget,
) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    let lo = n_range.0.max(lower_bound_floor(d));
    if lo <= n_range.1 {
        let plus = SobolevProblem::new(alpha, Norm::Plus)?;
        let ladder = plus.ladder_to_index(d, n_range.1, budget)?;
        for n in lo..=n_range.1 {
            let a = ladder.value_at(n).expect("reached");
            let bound = plus_lower_bound(alpha, d, n);
            report.checks += 1;
            report.min_margin = report.min_margin.min(a - bound);
            if a < bound {
                report.violations.push(Violation { check: "plus-lower".into(), d, n, alpha, lhs: a, rhs: bound });
            }
        }
    }
    let sharp = SobolevProblem::new(alpha, Norm::Sharp)?;
    for eps in eps_list {
        let n = sharp.complexity_with(eps, d, budget)?;
        let lhs = ln_count(&n);
        let rhs = sharp_log_upper_bound(alpha, d, to_f64(eps));
        report.checks += 1;
        report.min_margin = report.min_margin.min(rhs - lhs);
        if lhs > rhs {
            report.violations.push(Violation {
                check: "sharp-upper".into(),
                d,
                n: n.to_u64().unwrap_or(u64::MAX),
                alpha,
                lhs,
                rhs,
            });
        }
    }
    Ok(report)
}
