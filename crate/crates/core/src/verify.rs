//! Invariant suites runnable from the command line.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::hilbert::Criterion;
use crate::num::{int, rat, Rational};
use crate::sobolev::{verify_bounds, verify_identities, CheckReport};
use crate::spectra::EigenSeq;
use crate::tensor::{decay_vs_growth_check, log_decay_vs_geometric_check, TensorProblem};

pub const SUITES: [&str; 5] = ["tensor-oracle", "sobolev-identities", "sobolev-bounds", "lemmas", "all"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Work limit applied to every individual computation.
    pub budget: u64,
    pub seed: u64,
    pub eps_per_case: usize,
    pub tensor_d_max: u32,
    pub brute_force_points: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            budget: crate::budget::DEFAULT_NODE_BUDGET,
            seed: 20240611,
            eps_per_case: 50,
            tensor_d_max: 4,
            brute_force_points: 20_000_000,
        }
    }
}

impl VerifyConfig {
    fn budget(&self) -> Budget {
        Budget::new(self.budget)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub checks: u64,
    pub violations: u64,
    pub detail: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub results: Vec<CheckOutcome>,
}

fn from_check_report(name: &str, r: &CheckReport) -> CheckOutcome {
    CheckOutcome {
        name: name.into(),
        passed: r.passed(),
        checks: r.checks,
        violations: r.violations.len() as u64,
        detail: json!({
            "min_margin": if r.min_margin.is_finite() { json!(r.min_margin) } else { json!(null) },
            "violations": r.violations.iter().take(10).collect::<Vec<_>>(),
        }),
    }
}

/// Bases used by the oracle and sandwich checks.
pub fn oracle_bases() -> Vec<(String, EigenSeq)> {
    let finite = |v: Vec<Rational>| EigenSeq::finite_rank(v).expect("valid");
    vec![
        ("Geometric(1, 1/2)".into(), EigenSeq::geometric(int(1), rat(1, 2)).expect("valid")),
        ("Geometric(1, 1/4)".into(), EigenSeq::geometric(int(1), rat(1, 4)).expect("valid")),
        ("PolyDecay(1, 2)".into(), EigenSeq::poly(int(1), int(2)).expect("valid")),
        ("FiniteRank([1, 1, 1/2])".into(), finite(vec![int(1), int(1), rat(1, 2)])),
        ("FiniteRank([4, 1])".into(), finite(vec![int(4), int(1)])),
    ]
}

/// Random accuracy in `[0.05, 1)·scale`, rounded down to six decimals.
pub fn random_eps(rng: &mut StdRng, scale: f64) -> Rational {
    let u: f64 = rng.gen_range(0.05..1.0);
    let micro = ((scale * u * 1e6).floor() as i64).max(1);
    rat(micro, 1_000_000)
}

fn oracle_cases(cfg: &VerifyConfig) -> Vec<(String, TensorProblem, Criterion, u32, Rational)> {
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let mut cases = Vec::new();
    for (name, base) in oracle_bases() {
        let tp = TensorProblem::new(base);
        for d in 1..=cfg.tensor_d_max {
            for crit in [Criterion::Absolute, Criterion::Normalized] {
                let scale = match crit {
                    Criterion::Absolute => tp.initial_error(d),
                    Criterion::Normalized => 1.0,
                };
                for _ in 0..cfg.eps_per_case {
                    cases.push((name.clone(), tp.clone(), crit, d, random_eps(&mut rng, scale)));
                }
            }
        }
    }
    cases
}

/// Multi-index counting against direct enumeration of the index box.
pub fn tensor_oracle(cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let mut checks = 0u64;
    let mut mismatches = Vec::new();
    for (name, tp, crit, d, eps) in oracle_cases(cfg) {
        let fast = tp.tensor_count_with(crit, &eps, d, &cfg.budget())?.count;
        let slow = tp.brute_force_count(crit, &eps, d, cfg.brute_force_points)?;
        checks += 1;
        if fast != slow {
            mismatches.push(json!({
                "base": name, "criterion": crit.as_str(), "d": d, "eps": eps.to_string(),
                "count": fast.to_string(), "brute_force": slow.to_string(),
            }));
        }
    }
    Ok(CheckOutcome {
        name: "tensor-oracle".into(),
        passed: mismatches.is_empty(),
        checks,
        violations: mismatches.len() as u64,
        detail: json!({ "mismatches": mismatches }),
    })
}

/// `rescaled(ℓ)^ℓ <= n <= d! Π rescaled` for `ℓ ∈ {1, d}` on bases with `λ₁ <= 1`.
pub fn sandwich(cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let mut checks = 0u64;
    let mut bad = Vec::new();
    for (name, tp, crit, d, eps) in oracle_cases(cfg) {
        if crit != Criterion::Absolute || tp.base.first() > int(1) {
            continue;
        }
        let n = tp.tensor_count_with(crit, &eps, d, &cfg.budget())?.count;
        let upper = tp.factorial_bound(&eps, d)?;
        let mut ls = vec![1, d];
        ls.dedup();
        for l in ls {
            let lower = tp.power_lower_bound(&eps, d, l)?;
            checks += 1;
            if !(lower <= n && n <= upper) {
                bad.push(json!({
                    "base": name, "d": d, "eps": eps.to_string(), "l": l,
                    "lower": lower.to_string(), "count": n.to_string(), "upper": upper.to_string(),
                }));
            }
        }
    }
    Ok(CheckOutcome {
        name: "sandwich".into(),
        passed: bad.is_empty(),
        checks,
        violations: bad.len() as u64,
        detail: json!({ "violations": bad }),
    })
}

/// Decay/complexity pairs whose finite flags must agree.
pub fn lemma_pairs() -> Result<CheckOutcome> {
    let idx: Vec<u64> = (1..=6).map(|k| 10u64.pow(k)).collect();
    let eps: Vec<Rational> = (1..=5).map(|k| rat(1, 10i64.pow(k))).collect();
    let ks: Vec<u32> = (2..=10).map(|e| 1u32 << e).collect();
    let g = EigenSeq::geometric(int(1), rat(1, 2))?;
    let l = EigenSeq::log(int(1), int(2))?;
    let p = EigenSeq::poly(int(1), int(2))?;
    let reports = vec![
        ("decay-vs-growth Geometric(1, 1/2) s=1", decay_vs_growth_check(&g, 1.0, &eps, &idx)?),
        ("decay-vs-growth LogDecay(1, 2) s=1", decay_vs_growth_check(&l, 1.0, &eps, &idx)?),
        ("decay-vs-growth PolyDecay(1, 2) s=1", decay_vs_growth_check(&p, 1.0, &eps, &idx)?),
        ("log-decay-vs-geometric Geometric(1, 1/2) t=1/2", log_decay_vs_geometric_check(&g, &int(2), 0.5, &ks, &idx)?),
        ("log-decay-vs-geometric PolyDecay(1, 2) t=1", log_decay_vs_geometric_check(&p, &int(2), 1.0, &ks, &idx)?),
        ("log-decay-vs-geometric PolyDecay(1, 2) t=2", log_decay_vs_geometric_check(&p, &int(2), 2.0, &ks, &idx)?),
    ];
    let failed: Vec<&str> = reports.iter().filter(|(_, r)| !r.agree).map(|(n, _)| *n).collect();
    Ok(CheckOutcome {
        name: "lemma-pairs".into(),
        passed: failed.is_empty(),
        checks: reports.len() as u64,
        violations: failed.len() as u64,
        detail: json!({
            "pairs": reports.iter().map(|(n, r)| json!({
                "name": n, "left_holds": r.left_holds, "right_holds": r.right_holds, "symbolic": r.symbolic,
            })).collect::<Vec<_>>(),
            "disagreements": failed,
        }),
    })
}

pub fn sobolev_identities(cfg: &VerifyConfig) -> Result<CheckOutcome> {
    let r = verify_identities(3, 500, &[0.5, 1.0, 2.0], 10, &cfg.budget())?;
    Ok(from_check_report("sobolev-identities", &r))
}

pub fn sobolev_bounds(cfg: &VerifyConfig) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for alpha in [1.0, 2.0] {
        let r = verify_bounds(2, alpha, (330, 2000), &[], &cfg.budget())?;
        out.push(from_check_report(&format!("plus-lower-bound d=2 alpha={alpha}"), &r));
    }
    let eps = [rat(1, 2), rat(3, 10), rat(1, 10)];
    for d in 1..=3 {
        for alpha in [1.0, 2.0] {
            let r = verify_bounds(d, alpha, (1, 0), &eps, &cfg.budget())?;
            out.push(from_check_report(&format!("sharp-upper-bound d={d} alpha={alpha}"), &r));
        }
    }
    Ok(out)
}

/// Runs a named suite; budget exhaustion is returned as an error.
pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let results = match name {
        "tensor-oracle" => vec![tensor_oracle(cfg)?],
        "sobolev-identities" => vec![sobolev_identities(cfg)?],
        "sobolev-bounds" => sobolev_bounds(cfg)?,
        "lemmas" => vec![sandwich(cfg)?, lemma_pairs()?],
        "all" => {
            let mut v = vec![tensor_oracle(cfg)?, sobolev_identities(cfg)?];
            v.extend(sobolev_bounds(cfg)?);
            v.push(sandwich(cfg)?);
            v.push(lemma_pairs()?);
            v
        }
        other => return Err(Error::Parse(format!("unknown suite {other:?}; expected one of {SUITES:?}"))),
    };
    Ok(SuiteReport { suite: name.into(), passed: results.iter().all(|r| r.passed), results })
}
