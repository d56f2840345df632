//! Linear tensor product problems.
//!
//! The `d`-variate eigenvalues are products `λ_{j_1} ··· λ_{j_d}` of a
//! univariate sequence, so the information complexity is the number of
//! multi-indices whose product exceeds `ε² CRI_d`. Counting recurses on the
//! first coordinate with memoisation keyed by the exact residual threshold.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::budget::Budget;
use crate::classify::{Evidence, EvidenceKind, Outcome, SweepSummary, Verdict};
use crate::error::{Error, Result};
use crate::hilbert::{ConditionReport, Criterion, STParams};
use crate::num::{factorial, floor_exp, ln_count, ln_rational, pow_rational, to_f64, Count, Rational};
use crate::spectra::{EigenSeq, Family};
use crate::trend::{trend_flag, TrendFlag};

/// Relative distance below which a log-domain product counts as a tie.
pub const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct TensorProblem {
    pub base: EigenSeq,
}

/// Result of a multi-index count.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorCount {
    pub count: Count,
    /// Number of boundary products within [`TIE_TOLERANCE`] of the threshold
    /// (only possible for bases evaluated in floating point).
    pub tie_warnings: u64,
    /// Recursion nodes visited.
    pub nodes: u64,
}

impl TensorProblem {
    pub fn new(base: EigenSeq) -> Self {
        Self { base }
    }

    /// `ε_d^init = λ_1^(d/2)`.
    pub fn initial_error(&self, d: u32) -> f64 {
        (0.5 * d as f64 * ln_rational(&self.base.first())).exp()
    }

    /// `CRI_d`: 1 or `λ_1^d`.
    pub fn normalizer(&self, crit: Criterion, d: u32) -> Rational {
        match crit {
            Criterion::Absolute => Rational::one(),
            Criterion::Normalized => pow_rational(&self.base.first(), d),
        }
    }

    pub fn admissible(&self, crit: Criterion, eps: &Rational, d: u32) -> bool {
        let sq = eps * eps;
        match crit {
            Criterion::Absolute => sq < pow_rational(&self.base.first(), d),
            Criterion::Normalized => sq < Rational::one(),
        }
    }

    /// `#{j ∈ N^d : λ_{j_1} ··· λ_{j_d} > ε² CRI_d}` with the default node budget.
    pub fn tensor_count(&self, crit: Criterion, eps: &Rational, d: u32) -> Result<Count> {
        Ok(self.tensor_count_with(crit, eps, d, &Budget::default())?.count)
    }

    pub fn tensor_count_with(&self, crit: Criterion, eps: &Rational, d: u32, budget: &Budget) -> Result<TensorCount> {
        if !eps.is_positive() {
            return Err(Error::InvalidInput("accuracy must be positive".into()));
        }
        if d == 0 {
            return Err(Error::UnsupportedDimension(0));
        }
        let threshold = eps * eps * self.normalizer(crit, d);
        count_products_above(&self.base, d, &threshold, budget)
    }

    /// Independent oracle: enumerates the whole candidate box.
    ///
    /// The box side is found by scanning `λ_j λ_1^(d-1) > threshold`; fails with
    /// `BudgetExceeded` when the box has more than `max_points` points.
    pub fn brute_force_count(&self, crit: Criterion, eps: &Rational, d: u32, max_points: u64) -> Result<Count> {
        let b = self
            .base
            .exact_power()
            .ok_or_else(|| Error::InvalidInput("brute-force enumeration needs an exactly representable base".into()))?;
        let threshold = pow_rational(&(eps * eps * self.normalizer(crit, d)), b);
        let mu: Vec<Rational> = {
            let head = pow_rational(&self.base.pow_value(1, b).expect("exact"), d - 1);
            let mut v = Vec::new();
            let mut j = 1u64;
            loop {
                let m = self.base.pow_value(j, b).expect("exact");
                if &head * &m <= threshold {
                    break;
                }
                v.push(m);
                j += 1;
                if j > max_points {
                    return Err(Error::BudgetExceeded { what: "brute-force box side".into(), limit: max_points });
                }
            }
            v
        };
        let side = mu.len() as u64;
        if side == 0 {
            return Ok(Count::zero());
        }
        let points = (side as f64).powi(d as i32);
        if points > max_points as f64 {
            return Err(Error::BudgetExceeded { what: "brute-force enumeration".into(), limit: max_points });
        }
        let mut idx = vec![0usize; d as usize];
        let mut count = 0u64;
        loop {
            let product: Rational = idx.iter().map(|&i| &mu[i]).product();
            if product > threshold {
                count += 1;
            }
            // odometer increment
            let mut pos = 0;
            loop {
                if pos == idx.len() {
                    return Ok(Count::from(count));
                }
                idx[pos] += 1;
                if idx[pos] < mu.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }

    /// `#{j : (λ_j/λ_1)^ℓ > ε²/λ_1^d}`, i.e. the univariate absolute complexity of
    /// the rescaled sequence at accuracy `(ε/λ_1^(d/2))^(1/ℓ)`.
    pub fn rescaled_count(&self, eps: &Rational, d: u32, l: u32) -> Result<Count> {
        assert!(l >= 1 && l <= d);
        let c = self.base.first();
        // λ_j^ℓ > ε² λ_1^(ℓ-d)
        let x = eps * eps / pow_rational(&c, d - l);
        self.base.count_pow_above(l, &x)
    }

    /// `d! · Π_{ℓ=1..d}` of the rescaled univariate complexities.
    pub fn factorial_bound(&self, eps: &Rational, d: u32) -> Result<Count> {
        let mut acc = factorial(d);
        for l in 1..=d {
            acc *= self.rescaled_count(eps, d, l)?;
        }
        Ok(acc)
    }

    /// `n_ℓ^ℓ`, a lower bound for the absolute complexity.
    pub fn power_lower_bound(&self, eps: &Rational, d: u32, l: u32) -> Result<Count> {
        Ok(num_traits::pow(self.rescaled_count(eps, d, l)?, l as usize))
    }

    pub fn classify(&self, crit: Criterion, st: STParams) -> Verdict {
        classify_tensor(self, crit, st)
    }
}

/// `#{j ∈ N^d : λ_{j_1} ··· λ_{j_d} > threshold}` for `threshold > 0`.
pub fn count_products_above(base: &EigenSeq, d: u32, threshold: &Rational, budget: &Budget) -> Result<TensorCount> {
    if !threshold.is_positive() {
        if base.has_zero_tail() && !threshold.is_negative() {
            // finite support: every product of nonzero entries counts
            let r = base.count_above(&Rational::zero())?;
            return Ok(TensorCount { count: num_traits::pow(r, d as usize), tie_warnings: 0, nodes: 1 });
        }
        return Err(Error::InfiniteCount);
    }
    match base.exact_power() {
        Some(b) => {
            let mut counter = ExactCounter::new(base, b, budget);
            let count = counter.count(d, &pow_rational(threshold, b))?;
            Ok(TensorCount { count, tie_warnings: 0, nodes: counter.nodes })
        }
        None => {
            let mut counter = LogCounter { base, budget, ties: 0, nodes: 0, ln_cache: Vec::new() };
            let count = counter.count(d, ln_rational(threshold))?;
            Ok(TensorCount { count, tie_warnings: counter.ties, nodes: counter.nodes })
        }
    }
}

/// Recursion over `μ_j = λ_j^b` with exact rational residuals.
struct ExactCounter<'a> {
    base: &'a EigenSeq,
    b: u32,
    mu: Vec<Rational>,
    memo: HashMap<(u32, Rational), Count>,
    budget: &'a Budget,
    nodes: u64,
}

impl<'a> ExactCounter<'a> {
    fn new(base: &'a EigenSeq, b: u32, budget: &'a Budget) -> Self {
        Self { base, b, mu: Vec::new(), memo: HashMap::new(), budget, nodes: 0 }
    }

    fn mu(&mut self, j: u64) -> Rational {
        while (self.mu.len() as u64) < j {
            let next = self.mu.len() as u64 + 1;
            self.mu.push(self.base.pow_value(next, self.b).expect("exact base"));
        }
        self.mu[(j - 1) as usize].clone()
    }

    /// `#{j ∈ N^depth : μ_{j_1} ··· μ_{j_depth} > y}`.
    fn count(&mut self, depth: u32, y: &Rational) -> Result<Count> {
        self.nodes += 1;
        self.budget.charge(1, "counting tensor products")?;
        if depth == 1 {
            return self.base.count_pow_above(self.b, y);
        }
        let key = (depth, y.clone());
        if let Some(c) = self.memo.get(&key) {
            return Ok(c.clone());
        }
        // only j with μ_j μ_1^(depth-1) > y can contribute
        let mu1 = self.mu(1);
        let reach = y / pow_rational(&mu1, depth - 1);
        let span = self.base.count_pow_above(self.b, &reach)?;
        let span = span.to_u64().ok_or_else(|| Error::BudgetExceeded {
            what: "counting tensor products".into(),
            limit: self.budget.limit(),
        })?;
        self.budget.charge(span, "counting tensor products")?;
        let mut total = Count::zero();
        for j in 1..=span {
            let m = self.mu(j);
            total += self.count(depth - 1, &(y / m))?;
        }
        self.memo.insert(key, total.clone());
        Ok(total)
    }
}

/// Log-domain recursion for bases without an exact representation.
struct LogCounter<'a> {
    base: &'a EigenSeq,
    budget: &'a Budget,
    ties: u64,
    nodes: u64,
    ln_cache: Vec<f64>,
}

impl<'a> LogCounter<'a> {
    fn ln_at(&mut self, j: u64) -> f64 {
        if j as usize <= self.ln_cache.len() {
            return self.ln_cache[(j - 1) as usize];
        }
        if j < 1 << 24 {
            while (self.ln_cache.len() as u64) < j {
                let next = self.ln_cache.len() as u64 + 1;
                self.ln_cache.push(self.base.ln_eigen_at(next));
            }
            return self.ln_cache[(j - 1) as usize];
        }
        self.base.ln_eigen_at(j)
    }

    fn is_tie(a: f64, b: f64) -> bool {
        (a - b).abs() <= TIE_TOLERANCE * a.abs().max(b.abs()).max(1.0)
    }

    /// `#{j : ln λ_j > y}`, flagging near-ties at the boundary.
    fn count_one(&mut self, y: f64) -> Result<Count> {
        let c = ln_count_index(self.base, y)?;
        if let Some(last) = c.to_u64() {
            for j in [last, last + 1] {
                if j >= 1 && Self::is_tie(self.ln_at(j), y) {
                    self.ties += 1;
                }
            }
        }
        Ok(c)
    }

    fn count(&mut self, depth: u32, y: f64) -> Result<Count> {
        self.nodes += 1;
        self.budget.charge(1, "counting tensor products")?;
        if depth == 1 {
            return self.count_one(y);
        }
        let ln1 = self.ln_at(1);
        let span = ln_count_index(self.base, y - (depth - 1) as f64 * ln1)?;
        let span = span.to_u64().ok_or_else(|| Error::BudgetExceeded {
            what: "counting tensor products".into(),
            limit: self.budget.limit(),
        })?;
        self.budget.charge(span, "counting tensor products")?;
        let mut total = Count::zero();
        for j in 1..=span {
            let l = self.ln_at(j);
            total += self.count(depth - 1, y - l)?;
        }
        Ok(total)
    }
}

/// `#{j : ln λ_j > y}` evaluated in the log domain.
fn ln_count_index(seq: &EigenSeq, y: f64) -> Result<Count> {
    match seq.family() {
        Family::Log { first, sigma } => {
            let lc = ln_rational(first);
            if lc <= y {
                return Ok(Count::zero());
            }
            // ln ln(j+1) < (σ/2)(ln c - y)
            let w = 0.5 * to_f64(sigma) * (lc - y);
            let z = w.exp();
            let e_z = floor_exp(z)?;
            let two = Count::from(2u32);
            Ok(Count::one() + if e_z > two { e_z - two } else { Count::zero() })
        }
        Family::Explicit { prefix, tail } => {
            let head = prefix.iter().take_while(|v| ln_rational(v) > y).count();
            if head < prefix.len() {
                Ok(Count::from(head))
            } else {
                Ok(Count::from(head) + ln_count_index(tail, y)?)
            }
        }
        _ => {
            let t = crate::num::rational_from_f64(y.exp())?;
            if t.is_zero() {
                return Err(Error::InfiniteCount);
            }
            seq.count_above(&t)
        }
    }
}

#[derive(PartialEq)]
struct HeapItem {
    value: f64,
    idx: Vec<u64>,
    /// Position of the last coordinate above 1 (canonical-parent rule).
    pivot: usize,
}

impl Eq for HeapItem {}

impl PartialOrd for HeapItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HeapItem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value.total_cmp(&other.value).then_with(|| other.idx.cmp(&self.idx))
    }
}

/// The `n` largest values `ln(λ_{j_1} ··· λ_{j_d})` in nonincreasing order.
///
/// Best-first search where each multi-index is generated once, from the parent
/// obtained by decrementing its last coordinate above one.
pub fn top_ln_eigenvalues(base: &EigenSeq, d: u32, n: u64) -> Result<Vec<f64>> {
    if d == 0 {
        return Err(Error::UnsupportedDimension(0));
    }
    let mut ln_cache: Vec<f64> = Vec::new();
    let mut ln_at = |j: u64| -> f64 {
        while (ln_cache.len() as u64) < j {
            let next = ln_cache.len() as u64 + 1;
            ln_cache.push(base.ln_eigen_at(next));
        }
        ln_cache[(j - 1) as usize]
    };
    let mut out = Vec::with_capacity(n as usize);
    let mut heap = BinaryHeap::new();
    let start = vec![1u64; d as usize];
    heap.push(HeapItem { value: d as f64 * ln_at(1), idx: start, pivot: 0 });
    while (out.len() as u64) < n {
        let Some(item) = heap.pop() else { break };
        out.push(item.value);
        for pos in item.pivot..d as usize {
            let old = item.idx[pos];
            let new_ln = ln_at(old + 1);
            if new_ln == f64::NEG_INFINITY {
                continue;
            }
            let mut idx = item.idx.clone();
            idx[pos] += 1;
            let value = item.value - ln_at(old) + new_ln;
            heap.push(HeapItem { value, idx, pivot: pos });
        }
    }
    out.resize(n as usize, f64::NEG_INFINITY);
    Ok(out)
}

/// Cached numerators `ln d · max_ℓ [ℓ ln n_ℓ]` on the cells `ε = 2^-k`, `d = 2^k`.
fn sufficient_numerators(tp: &TensorProblem) -> Result<Vec<(Rational, u32, f64)>> {
    static CACHE: OnceLock<Mutex<HashMap<String, Vec<(Rational, u32, f64)>>>> = OnceLock::new();
    let key = tp.base.to_string();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().expect("cache lock").get(&key) {
        return Ok(v.clone());
    }
    let mut rows = Vec::new();
    for k in 1..=SUFFICIENT_SWEEP_LEN {
        let eps = Rational::new(1.into(), num_bigint::BigInt::from(1u64 << k));
        let d = 1u32 << k;
        let mut best = 0.0f64;
        for l in 1..=d {
            let c = tp.rescaled_count(&eps, d, l)?;
            if !c.is_zero() {
                best = best.max(l as f64 * ln_count(&c));
            }
        }
        rows.push((eps, d, (d as f64).ln() * best));
    }
    cache.lock().expect("cache lock").insert(key, rows.clone());
    Ok(rows)
}

const SUFFICIENT_SWEEP_LEN: u32 = 10;

/// Sweep of the sufficient-condition statistic for `λ_1 > 1`.
pub fn sufficient_condition_sweep(tp: &TensorProblem, st: STParams) -> Result<SweepSummary> {
    let rows = sufficient_numerators(tp)?;
    let ratios: Vec<f64> =
        rows.iter().map(|(eps, d, num)| num / (to_f64(eps).powf(-st.s) + (*d as f64).powf(st.t))).collect();
    Ok(SweepSummary::from_ratios("sufficient-diagonal", &ratios))
}

fn holds_if(cond: bool) -> Outcome {
    if cond {
        Outcome::Holds
    } else {
        Outcome::Fails
    }
}

/// Decision tree of the tensor product characterisations.
pub fn classify_tensor(tp: &TensorProblem, crit: Criterion, st: STParams) -> Verdict {
    let base = &tp.base;
    let trivial = base.second_is_zero();
    if st.s == 0.0 {
        return Verdict::decided(holds_if(trivial), "tensor.exactly-solvable");
    }
    let lambda1 = base.first();
    let one = Rational::one();
    if st.t == 0.0 {
        return match crit {
            Criterion::Normalized => Verdict::decided(holds_if(trivial), "tensor.t0.normalized"),
            Criterion::Absolute => {
                let small = lambda1 < one && base.decay_class().passes(st.s) == Some(true);
                Verdict::decided(holds_if(trivial || small), "tensor.t0.absolute")
            }
        };
    }
    let decay = base.decay_class().passes(st.s) == Some(true);
    let by_multiplicity = |simple: &str, multiple: &str| {
        let m = base.multiplicity_of_max().unwrap_or(u64::MAX);
        if m == 1 {
            Verdict::decided(holds_if(decay), simple)
        } else {
            Verdict::decided(holds_if(decay && st.t > 1.0), multiple)
        }
    };
    match crit {
        Criterion::Normalized => by_multiplicity("tensor.normalized.simple-max", "tensor.normalized.multiple-max"),
        Criterion::Absolute if lambda1 < one => Verdict::decided(holds_if(decay), "tensor.absolute.small-max"),
        Criterion::Absolute if lambda1 == one => {
            by_multiplicity("tensor.absolute.unit-max.simple", "tensor.absolute.unit-max.multiple")
        }
        Criterion::Absolute => classify_large_max(tp, st, decay, trivial),
    }
}

fn classify_large_max(tp: &TensorProblem, st: STParams, decay: bool, trivial: bool) -> Verdict {
    const NECESSARY: &str = "tensor.absolute.large-max.necessary";
    if trivial {
        return Verdict::decided(Outcome::Holds, "tensor.exactly-solvable");
    }
    let necessary_fail = |note: &str| Verdict {
        outcome: Outcome::NecessaryFails,
        clause: NECESSARY.into(),
        evidence: Some(Evidence::new(EvidenceKind::NecessaryOnly, note)),
    };
    if st.t <= 1.0 {
        return necessary_fail("the complexity grows exponentially in d at fixed accuracy, forcing t > 1");
    }
    if !decay {
        return necessary_fail("eigenvalues do not decay faster than ln^(-2/s) n");
    }
    if !tp.base.log_decay_dominates(st.t) {
        return necessary_fail("ln(1/λ_n) / ln^(1/t) n does not tend to infinity");
    }
    match sufficient_condition_sweep(tp, st) {
        Ok(summary) if summary.flag == TrendFlag::Decreasing => Verdict {
            outcome: Outcome::SufficientHolds,
            clause: "tensor.absolute.large-max.sufficient".into(),
            evidence: Some(Evidence {
                kind: EvidenceKind::Empirical,
                note: "necessary conditions hold symbolically; sufficient-condition statistic decreases on the sampled diagonal".into(),
                sweep: Some(summary),
            }),
        },
        Ok(summary) => Verdict {
            outcome: Outcome::Inconclusive,
            clause: "tensor.absolute.large-max.gap".into(),
            evidence: Some(Evidence {
                kind: EvidenceKind::OpenGap,
                note: "necessary conditions hold; sufficient-condition statistic does not decrease on the sampled diagonal".into(),
                sweep: Some(summary),
            }),
        },
        Err(e) => Verdict {
            outcome: Outcome::Inconclusive,
            clause: "tensor.absolute.large-max.gap".into(),
            evidence: Some(Evidence::new(EvidenceKind::OpenGap, &format!("sufficient-condition sweep failed: {e}"))),
        },
    }
}

/// Two finite proxies of the same limit statement and whether their flags agree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairedReport {
    pub left: ConditionReport,
    pub right: ConditionReport,
    pub left_holds: bool,
    pub right_holds: bool,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub symbolic: Option<bool>,
}

fn report(
    condition: &str,
    samples: Vec<[f64; 2]>,
    params: serde_json::Map<String, serde_json::Value>,
) -> ConditionReport {
    let values: Vec<f64> = samples.iter().map(|p| p[1]).collect();
    ConditionReport {
        condition: condition.into(),
        params,
        samples,
        flag: trend_flag(&values),
        witness: None,
        symbolic: None,
        empirical: true,
        skipped: Vec::new(),
    }
}

/// Decay `λ_n ln^(2/s) n -> 0` against growth `ln n(ε) / ε^(-s) -> 0`.
pub fn decay_vs_growth_check(
    base: &EigenSeq,
    s: f64,
    eps_grid: &[Rational],
    index_window: &[u64],
) -> Result<PairedReport> {
    let mut params = serde_json::Map::new();
    params.insert("s".into(), json!(s));
    let left: Vec<[f64; 2]> =
        index_window.iter().map(|&n| [n as f64, base.ln_eigen_at(n).exp() * (n as f64).ln().powf(2.0 / s)]).collect();
    let mut right = Vec::with_capacity(eps_grid.len());
    for eps in eps_grid {
        let ln_n = base.ln_count_above(&(eps * eps))?;
        let e = to_f64(eps);
        let v = if ln_n.is_finite() { ln_n.max(0.0) / e.powf(-s) } else { 0.0 };
        right.push([e, v]);
    }
    let left = report("decay", left, params.clone());
    let right = report("complexity-growth", right, params);
    let left_holds = left.flag == TrendFlag::Decreasing;
    let right_holds = right.flag == TrendFlag::Decreasing;
    Ok(PairedReport {
        left,
        right,
        left_holds,
        right_holds,
        agree: left_holds == right_holds,
        symbolic: base.decay_class().passes(s),
    })
}

/// `ln(1/λ_n) / ln^(1/t) n -> ∞` against `ln n(L^-k) / k^t -> 0`.
pub fn log_decay_vs_geometric_check(
    base: &EigenSeq,
    big_l: &Rational,
    t: f64,
    k_window: &[u32],
    index_window: &[u64],
) -> Result<PairedReport> {
    if *big_l <= Rational::one() {
        return Err(Error::InvalidInput("L must exceed 1".into()));
    }
    let mut params = serde_json::Map::new();
    params.insert("t".into(), json!(t));
    params.insert("L".into(), json!(to_f64(big_l)));
    let left: Vec<[f64; 2]> =
        index_window.iter().map(|&n| [n as f64, -base.ln_eigen_at(n) / (n as f64).ln().powf(1.0 / t)]).collect();
    let mut right = Vec::with_capacity(k_window.len());
    for &k in k_window {
        let threshold = Rational::one() / pow_rational(big_l, 2 * k);
        let ln_n = base.ln_count_above(&threshold)?;
        let v = if ln_n.is_finite() { ln_n.max(0.0) } else { 0.0 } / (k as f64).powf(t);
        right.push([k as f64, v]);
    }
    let left = report("log-decay", left, params.clone());
    let right = report("geometric-complexity", right, params);
    let left_holds = left.flag == TrendFlag::Increasing;
    let right_holds = right.flag == TrendFlag::Decreasing;
    Ok(PairedReport {
        left,
        right,
        left_holds,
        right_holds,
        agree: left_holds == right_holds,
        symbolic: Some(base.log_decay_dominates(t)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{int, rat};
    use num_bigint::BigUint;

    fn tp(seq: EigenSeq) -> TensorProblem {
        TensorProblem::new(seq)
    }

    fn geo(c: Rational, q: Rational) -> TensorProblem {
        tp(EigenSeq::geometric(c, q).unwrap())
    }

    fn finite(v: Vec<Rational>) -> TensorProblem {
        tp(EigenSeq::finite_rank(v).unwrap())
    }

    #[test]
    fn count_examples() {
        let g = geo(int(1), rat(1, 4));
        assert_eq!(g.tensor_count(Criterion::Absolute, &rat(1, 2), 2).unwrap(), BigUint::from(1u32));
        assert_eq!(g.tensor_count(Criterion::Absolute, &rat(49, 100), 2).unwrap(), BigUint::from(3u32));
        let f = finite(vec![int(1), int(1)]);
        assert_eq!(f.tensor_count(Criterion::Normalized, &rat(1, 2), 3).unwrap(), BigUint::from(8u32));
    }

    #[test]
    fn recursion_matches_brute_force() {
        let bases = vec![
            geo(int(1), rat(1, 2)),
            geo(int(1), rat(1, 4)),
            tp(EigenSeq::poly(int(1), int(2)).unwrap()),
            tp(EigenSeq::poly(int(1), rat(3, 2)).unwrap()),
            finite(vec![int(1), int(1), rat(1, 2)]),
            finite(vec![int(4), int(1)]),
        ];
        for b in &bases {
            for d in 1..=3 {
                for k in [3, 7, 10, 25, 50, 99] {
                    let eps = rat(k, 100);
                    for crit in [Criterion::Absolute, Criterion::Normalized] {
                        let fast = b.tensor_count(crit, &eps, d).unwrap();
                        let slow = b.brute_force_count(crit, &eps, d, 10_000_000).unwrap();
                        assert_eq!(fast, slow, "{} d={d} eps={eps}", b.base);
                    }
                }
            }
        }
    }

    #[test]
    fn factorial_bound_examples() {
        let g = geo(int(1), rat(1, 4));
        let eps = rat(49, 100);
        assert!(g.factorial_bound(&eps, 2).unwrap() >= BigUint::from(3u32));
        assert_eq!(g.factorial_bound(&eps, 1).unwrap(), g.rescaled_count(&eps, 1, 1).unwrap());
        assert!(g.power_lower_bound(&eps, 2, 2).unwrap() <= BigUint::from(3u32));
        let one = finite(vec![int(1)]);
        for d in 1..6 {
            assert_eq!(one.factorial_bound(&rat(1, 2), d).unwrap(), factorial(d));
        }
        let two = finite(vec![int(1), int(1)]);
        assert_eq!(two.power_lower_bound(&rat(1, 2), 3, 3).unwrap(), BigUint::from(8u32));
    }

    #[test]
    fn sandwich_on_small_grid() {
        for b in [geo(int(1), rat(1, 2)), finite(vec![int(4), int(1)]), tp(EigenSeq::poly(int(1), int(2)).unwrap())] {
            for d in 1..=4 {
                for k in [5, 20, 60, 95] {
                    let eps = rat(k, 100);
                    let n = b.tensor_count(Criterion::Absolute, &eps, d).unwrap();
                    for l in 1..=d {
                        assert!(b.power_lower_bound(&eps, d, l).unwrap() <= n);
                    }
                    assert!(n <= b.factorial_bound(&eps, d).unwrap());
                }
            }
        }
    }

    #[test]
    fn log_base_counts_agree_with_exact_scan() {
        // LogDecay(1, 2): λ_j = 1/ln(j+1); two-fold products above 1/9
        let b = tp(EigenSeq::log(int(1), int(2)).unwrap());
        let c = count_products_above(&b.base, 2, &rat(1, 9), &Budget::default()).unwrap();
        let mut brute = 0u64;
        for i in 1..=10_000u64 {
            for j in 1..=10_000u64 {
                if b.base.ln_eigen_at(i) + b.base.ln_eigen_at(j) > (1.0f64 / 9.0).ln() {
                    brute += 1;
                } else {
                    break;
                }
            }
        }
        assert_eq!(c.count, BigUint::from(brute));
    }

    #[test]
    fn top_values_are_sorted_products() {
        let b = EigenSeq::geometric(int(1), rat(1, 2)).unwrap();
        let top = top_ln_eigenvalues(&b, 3, 50).unwrap();
        assert!(top.windows(2).all(|w| w[0] >= w[1]));
        // multiplicity of value 2^-k in 3 dims is C(k+2, 2)
        let ln2 = std::f64::consts::LN_2;
        let at_level = |k: f64| top.iter().filter(|v| (**v + k * ln2).abs() < 1e-9).count();
        assert_eq!(at_level(0.0), 1);
        assert_eq!(at_level(1.0), 3);
        assert_eq!(at_level(2.0), 6);
        assert_eq!(at_level(3.0), 10);
        let f = EigenSeq::finite_rank(vec![int(1), rat(1, 2)]).unwrap();
        let top = top_ln_eigenvalues(&f, 2, 6).unwrap();
        assert_eq!(top[3], (0.25f64).ln());
        assert_eq!(top[4], f64::NEG_INFINITY);
    }

    #[test]
    fn normalized_count_at_least_m_to_d() {
        let b =
            tp(EigenSeq::explicit(vec![int(1), int(1)], EigenSeq::geometric(rat(1, 2), rat(1, 2)).unwrap()).unwrap());
        for d in 1..=5 {
            let n = b.tensor_count(Criterion::Normalized, &rat(9, 10), d).unwrap();
            assert!(n >= BigUint::from(2u32).pow(d));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let b = geo(int(1), rat(1, 2));
        let r = b.tensor_count_with(Criterion::Normalized, &rat(1, 100), 8, &Budget::new(10));
        assert!(matches!(r, Err(Error::BudgetExceeded { .. })));
    }

    fn st(s: f64, t: f64) -> STParams {
        STParams::new(s, t).unwrap()
    }

    #[test]
    fn classification_examples() {
        let one = finite(vec![int(1)]);
        for crit in [Criterion::Absolute, Criterion::Normalized] {
            let v = one.classify(crit, st(0.0, 0.0));
            assert_eq!((v.outcome, v.clause.as_str()), (Outcome::Holds, "tensor.exactly-solvable"));
        }
        let v = geo(int(1), rat(1, 2)).classify(Criterion::Normalized, st(1.0, 1.0));
        assert_eq!((v.outcome, v.clause.as_str()), (Outcome::Holds, "tensor.normalized.simple-max"));
        let two =
            tp(EigenSeq::explicit(vec![int(1), int(1)], EigenSeq::geometric(rat(1, 2), rat(1, 2)).unwrap()).unwrap());
        let v = two.classify(Criterion::Normalized, st(1.0, 1.0));
        assert_eq!((v.outcome, v.clause.as_str()), (Outcome::Fails, "tensor.normalized.multiple-max"));
        let log = tp(EigenSeq::log(rat(1, 2), int(2)).unwrap());
        let v = log.classify(Criterion::Absolute, st(1.0, 1.0));
        assert_eq!((v.outcome, v.clause.as_str()), (Outcome::Fails, "tensor.absolute.small-max"));
    }

    #[test]
    fn large_max_branch() {
        let b = finite(vec![int(4), int(1)]);
        let v = b.classify(Criterion::Absolute, st(1.0, 1.0));
        assert_eq!(v.outcome, Outcome::NecessaryFails);
        assert!(v.evidence.is_some());
        let v = b.classify(Criterion::Absolute, st(1.0, 2.0));
        assert!(matches!(v.outcome, Outcome::SufficientHolds | Outcome::Inconclusive));
        assert!(v.evidence.and_then(|e| e.sweep).is_some());
        let p = tp(EigenSeq::poly(int(2), int(2)).unwrap());
        assert_eq!(p.classify(Criterion::Absolute, st(1.0, 1.0)).outcome, Outcome::NecessaryFails);
        let l = tp(EigenSeq::log(int(2), rat(1, 2)).unwrap());
        assert_eq!(l.classify(Criterion::Absolute, st(1.0, 2.0)).outcome, Outcome::NecessaryFails);
        let r1 = finite(vec![int(3)]);
        assert_eq!(r1.classify(Criterion::Absolute, st(0.5, 0.5)).outcome, Outcome::Holds);
    }

    #[test]
    fn lemma_checks() {
        let idx: Vec<u64> = (1..=6).map(|k| 10u64.pow(k)).collect();
        let eps: Vec<Rational> =
            (1..=5).map(|k| Rational::new(1.into(), num_bigint::BigInt::from(10u64.pow(k)))).collect();
        let g = EigenSeq::geometric(int(1), rat(1, 2)).unwrap();
        let r = decay_vs_growth_check(&g, 1.0, &eps, &idx).unwrap();
        assert!(r.agree && r.left_holds && r.right_holds, "{r:?}");
        let l = EigenSeq::log(int(1), int(2)).unwrap();
        let r = decay_vs_growth_check(&l, 1.0, &eps, &idx).unwrap();
        assert!(r.agree && !r.left_holds && !r.right_holds, "{r:?}");
        let p = EigenSeq::poly(int(1), int(2)).unwrap();
        let r = decay_vs_growth_check(&p, 1.0, &eps, &idx).unwrap();
        assert!(r.agree && r.left_holds, "{r:?}");

        let ks: Vec<u32> = (2..=10).map(|e| 1u32 << e).collect();
        let r = log_decay_vs_geometric_check(&g, &int(2), 0.5, &ks, &idx).unwrap();
        assert!(r.agree && r.left_holds && r.right_holds, "{r:?}");
        let r = log_decay_vs_geometric_check(&p, &int(2), 1.0, &ks, &idx).unwrap();
        assert!(r.agree && !r.left_holds && !r.right_holds, "{r:?}");
        let r = log_decay_vs_geometric_check(&p, &int(2), 2.0, &ks, &idx).unwrap();
        assert!(r.agree && r.left_holds && r.right_holds, "{r:?}");
    }
}
