//! Verdicts, limit sweeps and tractability-hierarchy checks.
//!
//! A [`Verdict`] is decided by theorem branches only; sweeps supply evidence.
//! The sweep statistic is `ln n(ε, S_d) / (ε^(-s) + d^t)` evaluated on named
//! families of `(ε, d)` cells.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::hilbert::{Criterion, DimensionRule, GeneralProblem, STParams};
use crate::integration::{a_cost_log, q_cost_ln, IntegrationBound, Variant};
use crate::num::{
    format_f64, format_rational, ln_count, pow_rational, rat, rational_from_f64, to_f64, Count, Rational,
};
use crate::sobolev::{Norm, SobolevProblem};
use crate::spectra::EigenSeq;
use crate::tensor::{classify_tensor, TensorProblem};
use crate::trend::{tail_min, trend_flag, TrendFlag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    Holds,
    Fails,
    SufficientHolds,
    NecessaryFails,
    Inconclusive,
}

impl Outcome {
    /// `Holds` or `SufficientHolds`.
    pub fn is_positive(&self) -> bool {
        matches!(self, Outcome::Holds | Outcome::SufficientHolds)
    }

    /// `Fails` or `NecessaryFails`.
    pub fn is_negative(&self) -> bool {
        matches!(self, Outcome::Fails | Outcome::NecessaryFails)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvidenceKind {
    /// Between known necessary and sufficient conditions.
    OpenGap,
    /// A sufficient condition is met.
    SufficientOnly,
    /// A necessary condition is violated.
    NecessaryOnly,
    /// Sampled limit statistic only.
    Empirical,
    /// Verdict carried over from an equivalent problem.
    Transfer,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Evidence {
    pub kind: EvidenceKind,
    pub note: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSummary>,
}

impl Evidence {
    pub fn new(kind: EvidenceKind, note: &str) -> Self {
        Self { kind, note: note.into(), sweep: None }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Verdict {
    pub outcome: Outcome,
    pub clause: String,
    #[serde(default)]
    pub evidence: Option<Evidence>,
}

impl Verdict {
    /// Verdict fixed by a characterization, without evidence.
    pub fn decided(outcome: Outcome, clause: &str) -> Self {
        Self { outcome, clause: clause.into(), evidence: None }
    }
}

/// Trend summary of one sweep family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSummary {
    pub family: String,
    pub cells: usize,
    pub first: f64,
    pub last: f64,
    pub tail_min: f64,
    pub flag: TrendFlag,
    #[serde(default)]
    pub zero_cells: usize,
}

impl SweepSummary {
    pub fn from_ratios(family: &str, ratios: &[f64]) -> Self {
        Self {
            family: family.into(),
            cells: ratios.len(),
            first: ratios.first().copied().unwrap_or(f64::NAN),
            last: ratios.last().copied().unwrap_or(f64::NAN),
            tail_min: tail_min(ratios),
            flag: trend_flag(ratios),
            zero_cells: 0,
        }
    }
}

/// Any problem kind the tool understands.
#[derive(Debug, Clone, PartialEq)]
pub enum Problem {
    General(GeneralProblem),
    Tensor(TensorProblem),
    Sobolev(SobolevProblem),
    Integration(IntegrationBound),
}

impl Problem {
    pub fn kind(&self) -> &'static str {
        match self {
            Problem::General(_) => "general",
            Problem::Tensor(_) => "tensor",
            Problem::Sobolev(_) => "sobolev",
            Problem::Integration(_) => "integration",
        }
    }

    /// `ε² < λ_{d,1}` (absolute) or `ε < 1` (normalized); initial error 1 for
    /// Sobolev and integration problems.
    pub fn admissible(&self, crit: Criterion, eps: &Rational, d: u32) -> Result<bool> {
        if d == 0 {
            return Ok(false);
        }
        match self {
            Problem::General(g) => g.admissible(crit, eps, d),
            Problem::Tensor(t) => Ok(t.admissible(crit, eps, d)),
            Problem::Sobolev(_) | Problem::Integration(_) => Ok(*eps > Rational::zero() && *eps < Rational::one()),
        }
    }

    /// Squared initial error `λ_{d,1}` as an exact rational.
    pub fn initial_error_sq(&self, d: u32) -> Result<Rational> {
        match self {
            Problem::General(g) => g.spectrum(d).map(|s| s.first()),
            Problem::Tensor(t) => Ok(pow_rational(&t.base.first(), d)),
            Problem::Sobolev(_) | Problem::Integration(_) => Ok(Rational::one()),
        }
    }

    /// Exact information complexity; integration problems have none.
    pub fn complexity(&self, crit: Criterion, eps: &Rational, d: u32, budget: &Budget) -> Result<Count> {
        match self {
            Problem::General(g) => g.info_complexity(crit, eps, d),
            Problem::Tensor(t) => t.tensor_count_with(crit, eps, d, budget).map(|c| c.count),
            Problem::Sobolev(p) => p.complexity_with(eps, d, budget),
            Problem::Integration(_) => Err(Error::InvalidInput(
                "integration problems only provide cost upper bounds, not exact complexities".into(),
            )),
        }
    }

    pub fn classify(&self, crit: Criterion, st: STParams) -> Verdict {
        match self {
            Problem::Tensor(t) => classify_tensor(t, crit, st),
            Problem::Sobolev(p) => p.classify(st),
            Problem::Integration(b) => b.classify(st),
            Problem::General(g) => match &g.rule {
                DimensionRule::Tensor(base) => classify_tensor(&TensorProblem::new(base.clone()), crit, st),
                _ => classify_general(self, crit, st),
            },
        }
    }
}

/// General problems have no characterization; report a diagonal sweep.
fn classify_general(problem: &Problem, crit: Criterion, st: STParams) -> Verdict {
    let sampled = SweepGrid::scaled_diagonal(problem, crit, 20)
        .and_then(|grid| sweep(problem, crit, st, &grid, &Budget::new(crate::budget::DEFAULT_NODE_BUDGET)));
    let evidence = match sampled {
        Ok(table) => Evidence {
            kind: EvidenceKind::Empirical,
            note: "no characterization applies; diagonal sweep of the limit statistic".into(),
            sweep: table.summaries.into_iter().next(),
        },
        Err(e) => Evidence::new(EvidenceKind::Empirical, &format!("no characterization applies; sweep failed: {e}")),
    };
    Verdict { outcome: Outcome::Inconclusive, clause: "general.empirical".into(), evidence: Some(evidence) }
}

/// One `(ε, d)` sample point of a named family.
#[derive(Debug, Clone, PartialEq)]
pub struct GridCell {
    pub eps: Rational,
    pub d: u32,
    pub family: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SweepGrid {
    pub cells: Vec<GridCell>,
}

impl SweepGrid {
    fn family(name: &str, pairs: impl IntoIterator<Item = (Rational, u32)>) -> Self {
        Self { cells: pairs.into_iter().map(|(eps, d)| GridCell { eps, d, family: name.into() }).collect() }
    }

    /// `ε_k = 1/k`, `d_k = k` for `k = 2..=size+1`.
    pub fn diagonal(size: u32) -> Self {
        Self::family("diagonal", (2..=size + 1).map(|k| (rat(1, k as i64), k)))
    }

    /// `ε_k = 1/(k+1)` at a fixed dimension, `k = 1..=size`.
    pub fn fixed_d(d: u32, size: u32) -> Self {
        Self::family("fixed-d", (1..=size).map(|k| (rat(1, k as i64 + 1), d)))
    }

    /// `d = 1..=size` at a fixed accuracy.
    pub fn fixed_eps(eps: Rational, size: u32) -> Self {
        Self::family("fixed-eps", (1..=size).map(|d| (eps.clone(), d)))
    }

    pub fn custom(cells: Vec<(Rational, u32)>) -> Self {
        Self::family("custom", cells)
    }

    /// Diagonal that stays admissible under the absolute criterion: `ε_k` is
    /// `1/k` times a rational lower approximation of `ε_{d_k}^init` whenever
    /// that initial error is below one.
    pub fn scaled_diagonal(problem: &Problem, crit: Criterion, size: u32) -> Result<Self> {
        let mut cells = Vec::with_capacity(size as usize);
        for k in 2..=size + 1 {
            let base = rat(1, k as i64);
            let init_sq = problem.initial_error_sq(k)?;
            let eps = if crit == Criterion::Absolute && init_sq < Rational::one() {
                let approx = rational_from_f64(to_f64(&init_sq).sqrt() * (1.0 - 1e-9))?;
                let approx = if &approx * &approx < init_sq { approx } else { Rational::zero() };
                if approx.is_zero() {
                    return Err(Error::InvalidInput(format!("initial error underflows at d = {k}")));
                }
                base * approx
            } else {
                base
            };
            cells.push((eps, k));
        }
        Ok(Self::family("diagonal", cells))
    }

    pub fn extend(mut self, other: SweepGrid) -> Self {
        self.cells.extend(other.cells);
        self
    }

    /// Family names in order of first appearance.
    pub fn families(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for c in &self.cells {
            if !out.contains(&c.family) {
                out.push(c.family.clone());
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub eps: String,
    pub d: u32,
    /// Exact complexity, absent for cost-bound surrogates.
    pub n: Option<String>,
    pub log_n: f64,
    pub denom: f64,
    pub ratio: f64,
    pub family: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    pub rows: Vec<SweepRow>,
    pub summaries: Vec<SweepSummary>,
    /// Set when `log_n` is an upper-bound surrogate.
    pub surrogate: bool,
}

pub const SWEEP_CSV_HEADER: &str = "eps,d,n,log_n,denom,ratio,family";

impl SweepTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(SWEEP_CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                r.eps,
                r.d,
                r.n.as_deref().unwrap_or(""),
                format_f64(r.log_n),
                format_f64(r.denom),
                format_f64(r.ratio),
                r.family
            ));
        }
        out
    }

    pub fn ratios(&self, family: &str) -> Vec<f64> {
        self.rows.iter().filter(|r| r.family == family).map(|r| r.ratio).collect()
    }
}

/// `ε^(-s) + d^t`.
pub fn sweep_denominator(eps: f64, d: u32, st: STParams) -> f64 {
    eps.powf(-st.s) + (d as f64).powf(st.t)
}

/// Evaluates the limit statistic on every grid cell (in parallel) and
/// summarizes each family's trend.
pub fn sweep(
    problem: &Problem,
    crit: Criterion,
    st: STParams,
    grid: &SweepGrid,
    budget: &Budget,
) -> Result<SweepTable> {
    let mut bad = Vec::new();
    for c in &grid.cells {
        if !problem.admissible(crit, &c.eps, c.d)? {
            bad.push((to_f64(&c.eps), c.d));
        }
    }
    if !bad.is_empty() {
        return Err(Error::InadmissibleCell(bad));
    }
    let rows: Vec<(SweepRow, bool)> = grid
        .cells
        .par_iter()
        .map(|c| {
            let eps = to_f64(&c.eps);
            let denom = sweep_denominator(eps, c.d, st);
            let (n, log_n) = match problem {
                Problem::Integration(b) => {
                    let ln = match b.variant {
                        Variant::QRule => q_cost_ln(eps, c.d)?,
                        _ => a_cost_log(eps, c.d, b.c)?,
                    };
                    (None, ln)
                }
                _ => {
                    let n = problem.complexity(crit, &c.eps, c.d, budget)?;
                    let ln = if n.is_zero() { 0.0 } else { ln_count(&n) };
                    (Some(n), ln)
                }
            };
            let zero = n.as_ref().is_some_and(|n| n.is_zero());
            let ratio = if zero { 0.0 } else { log_n / denom };
            Ok((
                SweepRow {
                    eps: format_rational(&c.eps),
                    d: c.d,
                    n: n.map(|n| n.to_string()),
                    log_n,
                    denom,
                    ratio,
                    family: c.family.clone(),
                },
                zero,
            ))
        })
        .collect::<Result<_>>()?;
    let summaries = grid
        .families()
        .into_iter()
        .map(|f| {
            let fam: Vec<&(SweepRow, bool)> = rows.iter().filter(|(r, _)| r.family == f).collect();
            let ratios: Vec<f64> = fam.iter().map(|(r, _)| r.ratio).collect();
            let mut s = SweepSummary::from_ratios(&f, &ratios);
            s.zero_cells = fam.iter().filter(|(_, z)| *z).count();
            s
        })
        .collect();
    Ok(SweepTable {
        rows: rows.into_iter().map(|(r, _)| r).collect(),
        summaries,
        surrogate: matches!(problem, Problem::Integration(_)),
    })
}

/// A named problem with its error criterion.
#[derive(Debug, Clone, PartialEq)]
pub struct PortfolioEntry {
    pub name: String,
    pub problem: Problem,
    pub crit: Criterion,
}

impl PortfolioEntry {
    fn new(name: &str, problem: Problem, crit: Criterion) -> Self {
        Self { name: name.into(), problem, crit }
    }
}

fn tensor(seq: EigenSeq) -> Problem {
    Problem::Tensor(TensorProblem::new(seq))
}

fn sobolev(alpha: f64, norm: Norm) -> Problem {
    Problem::Sobolev(SobolevProblem::new(alpha, norm).expect("valid smoothness"))
}

fn integration(variant: Variant) -> Problem {
    Problem::Integration(IntegrationBound::new(variant, crate::integration::DEFAULT_C).expect("valid constant"))
}

/// Curated problems covering every classifier branch that admits desk-scale sweeps.
pub fn standard_portfolio() -> Vec<PortfolioEntry> {
    use Criterion::{Absolute, Normalized};
    let geo = |a: i64, b: i64, c: i64, e: i64| EigenSeq::geometric(rat(a, b), rat(c, e)).expect("valid");
    let finite = |v: &[(i64, i64)]| EigenSeq::finite_rank(v.iter().map(|&(a, b)| rat(a, b)).collect()).expect("valid");
    vec![
        PortfolioEntry::new("tensor-geometric-1-1/2-norm", tensor(geo(1, 1, 1, 2)), Normalized),
        PortfolioEntry::new("tensor-geometric-1-1/4-abs", tensor(geo(1, 1, 1, 4)), Absolute),
        PortfolioEntry::new("tensor-geometric-1/2-1/2-abs", tensor(geo(1, 2, 1, 2)), Absolute),
        PortfolioEntry::new(
            "tensor-poly-1-2-abs",
            tensor(EigenSeq::poly(rat(1, 1), rat(2, 1)).expect("valid")),
            Absolute,
        ),
        PortfolioEntry::new("tensor-finite-1-1-1/2-abs", tensor(finite(&[(1, 1), (1, 1), (1, 2)])), Absolute),
        PortfolioEntry::new("tensor-finite-1-1-1/2-norm", tensor(finite(&[(1, 1), (1, 1), (1, 2)])), Normalized),
        PortfolioEntry::new("tensor-finite-4-1-abs", tensor(finite(&[(4, 1), (1, 1)])), Absolute),
        PortfolioEntry::new("tensor-finite-1-abs", tensor(finite(&[(1, 1)])), Absolute),
        PortfolioEntry::new("sobolev-plus-1", sobolev(1.0, Norm::Plus), Absolute),
        PortfolioEntry::new("sobolev-plus-3", sobolev(3.0, Norm::Plus), Absolute),
        PortfolioEntry::new("sobolev-sharp-2", sobolev(2.0, Norm::Sharp), Absolute),
        PortfolioEntry::new("sobolev-sharp-1/2", sobolev(0.5, Norm::Sharp), Absolute),
        PortfolioEntry::new("sobolev-star-1", sobolev(1.0, Norm::Star), Absolute),
        PortfolioEntry::new("sobolev-star-2", sobolev(2.0, Norm::Star), Absolute),
        PortfolioEntry::new("integration-a", integration(Variant::ARule), Absolute),
        PortfolioEntry::new("integration-ccs", integration(Variant::Ccs), Absolute),
    ]
}

/// The `(s, t)` grid `{0.25, 0.5, 1, 1.5, 2}²`.
pub fn default_st_grid() -> Vec<STParams> {
    let vals = [0.25, 0.5, 1.0, 1.5, 2.0];
    vals.iter().flat_map(|&s| vals.iter().map(move |&t| STParams { s, t })).collect()
}

/// `(s, t)` points used by the consistency gate: `{0.5, 1, 1.5, 2}²`. At
/// smaller exponents the diagonal statistic of super-logarithmic tensor
/// problems is still rising after 40 cells.
pub fn gate_st_grid() -> Vec<STParams> {
    default_st_grid().into_iter().filter(|p| p.s >= 0.5 && p.t >= 0.5).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HierarchyViolation {
    pub problem: String,
    pub lower: STParams,
    pub upper: STParams,
    pub lower_outcome: Outcome,
    pub upper_outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HierarchyReport {
    /// Ordered pairs `(s,t) <= (σ,τ)` examined.
    pub checks: u64,
    /// Pairs where a positive verdict at the smaller point reached an
    /// undecided verdict at the larger one.
    pub unpropagated: u64,
    pub violations: Vec<HierarchyViolation>,
}

/// Monotonicity: a positive verdict at `(s,t)` may not meet a negative one at
/// any `(σ,τ) >= (s,t)`.
pub fn hierarchy_relations(portfolio: &[PortfolioEntry], st_list: &[STParams]) -> HierarchyReport {
    let verdicts: Vec<Vec<Outcome>> = portfolio
        .par_iter()
        .map(|e| st_list.iter().map(|st| e.problem.classify(e.crit, *st).outcome).collect())
        .collect();
    let mut report = HierarchyReport { checks: 0, unpropagated: 0, violations: Vec::new() };
    for (entry, outcomes) in portfolio.iter().zip(&verdicts) {
        for (i, lo) in st_list.iter().enumerate() {
            for (j, hi) in st_list.iter().enumerate() {
                if i == j || !lo.le(hi) {
                    continue;
                }
                report.checks += 1;
                let (a, b) = (outcomes[i], outcomes[j]);
                if a.is_positive() && b.is_negative() {
                    report.violations.push(HierarchyViolation {
                        problem: entry.name.clone(),
                        lower: *lo,
                        upper: *hi,
                        lower_outcome: a,
                        upper_outcome: b,
                    });
                } else if a.is_positive() && b == Outcome::Inconclusive {
                    report.unpropagated += 1;
                }
            }
        }
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UwtOutcome {
    Holds,
    Fails,
    /// Some points undecided, none negative.
    NoCounterexample,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UwtReport {
    pub outcome: UwtOutcome,
    pub points: Vec<(STParams, Verdict)>,
    pub witness: Option<STParams>,
}

/// `(s,t)`-grid in `(0,1]²` with small components.
pub fn default_uwt_grid() -> Vec<STParams> {
    let vals = [0.05, 0.1, 0.25, 0.5, 1.0];
    vals.iter().flat_map(|&s| vals.iter().map(move |&t| STParams { s, t })).collect()
}

/// Uniform weak tractability on a finite `(s,t)` grid.
pub fn uwt_probe(problem: &Problem, crit: Criterion, st_grid: &[STParams]) -> UwtReport {
    let points: Vec<(STParams, Verdict)> = st_grid.iter().map(|st| (*st, problem.classify(crit, *st))).collect();
    let witness = points.iter().find(|(_, v)| v.outcome.is_negative()).map(|(st, _)| *st);
    let outcome = if witness.is_some() {
        UwtOutcome::Fails
    } else if points.iter().all(|(_, v)| v.outcome.is_positive()) {
        UwtOutcome::Holds
    } else {
        UwtOutcome::NoCounterexample
    };
    UwtReport { outcome, points, witness }
}

/// Threshold below which a failing problem's tail contradicts its verdict.
pub const FAILS_TAIL_FLOOR: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GateRecord {
    pub problem: String,
    pub st: STParams,
    pub verdict: Verdict,
    pub summary: Option<SweepSummary>,
    pub contradiction: bool,
    pub note: String,
}

/// Symbolic verdicts against diagonal sweeps of the given length: a positive
/// verdict may not carry an increasing flag and a negative one may not have a
/// ratio tail below [`FAILS_TAIL_FLOOR`]. Counts are computed once per problem
/// and re-normalized for each `(s, t)`.
pub fn consistency_gate(portfolio: &[PortfolioEntry], st_list: &[STParams], size: u32) -> Vec<GateRecord> {
    let tables: Vec<Result<(SweepGrid, SweepTable)>> = portfolio
        .par_iter()
        .map(|e| {
            let grid = SweepGrid::scaled_diagonal(&e.problem, e.crit, size)?;
            let probe = STParams { s: 1.0, t: 1.0 };
            let table = sweep(&e.problem, e.crit, probe, &grid, &Budget::new(crate::budget::DEFAULT_NODE_BUDGET))?;
            Ok((grid, table))
        })
        .collect();
    let jobs: Vec<(usize, STParams)> =
        (0..portfolio.len()).flat_map(|i| st_list.iter().map(move |st| (i, *st))).collect();
    jobs.par_iter()
        .map(|&(i, st)| {
            let e = &portfolio[i];
            let verdict = e.problem.classify(e.crit, st);
            let (summary, contradiction, note) = match &tables[i] {
                Ok((grid, table)) => {
                    let ratios: Vec<f64> = grid
                        .cells
                        .iter()
                        .zip(&table.rows)
                        .map(|(c, r)| {
                            if r.n.as_deref() == Some("0") {
                                0.0
                            } else {
                                r.log_n / sweep_denominator(to_f64(&c.eps), c.d, st)
                            }
                        })
                        .collect();
                    let s = SweepSummary::from_ratios("diagonal", &ratios);
                    let bad_pos = verdict.outcome.is_positive() && s.flag == TrendFlag::Increasing;
                    let bad_neg = verdict.outcome.is_negative() && s.tail_min < FAILS_TAIL_FLOOR;
                    let note = if bad_pos {
                        "positive verdict with increasing diagonal trend".to_string()
                    } else if bad_neg {
                        "negative verdict with vanishing ratio tail".to_string()
                    } else {
                        String::new()
                    };
                    (Some(s), bad_pos || bad_neg, note)
                }
                Err(err) => (None, false, format!("sweep unavailable: {err}")),
            };
            GateRecord { problem: e.name.clone(), st, verdict, summary, contradiction, note }
        })
        .collect()
}
