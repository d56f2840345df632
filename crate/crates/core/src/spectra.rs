//! Univariate eigenvalue sequences and exact threshold counting.
//!
//! Every family is non-increasing, nonnegative and tends to zero. The
//! geometric, polynomial, finite-rank and explicit-prefix families are
//! evaluated in exact rational arithmetic; the logarithmic family is
//! evaluated in double precision (counts within one index of a tie may
//! shift by one).

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::num::{floor_exp, ln_count, ln_rational, max_root_below, pow_rational, to_f64, Count, Rational};

/// A single eigenvalue, exact when the family permits it.
#[derive(Debug, Clone, PartialEq)]
pub enum Eigenvalue {
    Exact(Rational),
    Real(f64),
}

impl Eigenvalue {
    pub fn to_f64(&self) -> f64 {
        match self {
            Eigenvalue::Exact(r) => to_f64(r),
            Eigenvalue::Real(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Eigenvalue::Exact(r) => Some(r),
            Eigenvalue::Real(_) => None,
        }
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Exact(r) => write!(f, "{}", crate::num::format_rational(r)),
            Eigenvalue::Real(x) => write!(f, "{}", crate::num::format_f64(*x)),
        }
    }
}

/// Closed families of eigenvalue sequences.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// `λ_j = first · ratio^(j-1)` with `0 <= ratio < 1`.
    Geometric { first: Rational, ratio: Rational },
    /// `λ_j = first · j^(-exponent)`.
    Poly { first: Rational, exponent: Rational },
    /// `λ_1 = first`, `λ_j = first · ln(j+1)^(-2/sigma)` for `j >= 2`.
    Log { first: Rational, sigma: Rational },
    /// Explicit non-increasing list, zeros beyond it.
    FiniteRank(Vec<Rational>),
    /// Explicit prefix followed by a tail family indexed from one.
    Explicit { prefix: Vec<Rational>, tail: Box<EigenSeq> },
}

/// A validated non-increasing eigenvalue sequence with positive first term.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSeq {
    family: Family,
}

/// Symbolic decay category relative to `ln^(-2/s) n`.
#[derive(Debug, Clone, PartialEq)]
pub enum DecayClass {
    /// `λ_2 = 0`.
    FiniteRankOne,
    /// `λ_n ln^(2/s) n -> 0` for every `s > 0`.
    SuperLog,
    /// `λ_n ln^(2/s) n -> 0` iff `s > sigma`.
    LogCritical(f64),
    NoLogDecay,
    Unknown,
}

impl DecayClass {
    /// Whether `λ_n / ln^(-2/s) n -> 0`; `None` when undecided.
    pub fn passes(&self, s: f64) -> Option<bool> {
        match self {
            DecayClass::FiniteRankOne | DecayClass::SuperLog => Some(true),
            DecayClass::LogCritical(sigma) => Some(s > *sigma),
            DecayClass::NoLogDecay => Some(false),
            DecayClass::Unknown => None,
        }
    }
}

/// Sum of all eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub enum Trace {
    Exact(Rational),
    /// Certified enclosure `[lo, hi]`.
    Enclosure {
        lo: f64,
        hi: f64,
    },
    Infinite,
}

impl Trace {
    pub fn upper(&self) -> Option<f64> {
        match self {
            Trace::Exact(r) => Some(to_f64(r)),
            Trace::Enclosure { hi, .. } => Some(*hi),
            Trace::Infinite => None,
        }
    }

    pub fn midpoint(&self) -> Option<f64> {
        match self {
            Trace::Exact(r) => Some(to_f64(r)),
            Trace::Enclosure { lo, hi } => Some(0.5 * (lo + hi)),
            Trace::Infinite => None,
        }
    }
}

fn check_nonincreasing(values: &[Rational]) -> Result<()> {
    if values.iter().any(|v| v.is_negative()) {
        return Err(Error::InvalidSequence("negative eigenvalue".into()));
    }
    if let Some(w) = values.windows(2).find(|w| w[0] < w[1]) {
        return Err(Error::InvalidSequence(format!("list must be non-increasing, found {} before {}", w[0], w[1])));
    }
    Ok(())
}

fn small_u32(x: &BigInt, what: &str) -> Result<u32> {
    x.to_u32()
        .filter(|v| *v <= 1 << 16)
        .ok_or_else(|| Error::InvalidSequence(format!("{what} {x} is too large for exact evaluation")))
}

impl EigenSeq {
    pub fn geometric(first: Rational, ratio: Rational) -> Result<Self> {
        if !first.is_positive() {
            return Err(Error::InvalidSequence("geometric sequence needs first > 0".into()));
        }
        if ratio.is_negative() || ratio >= Rational::one() {
            return Err(Error::InvalidSequence("geometric ratio must lie in [0, 1)".into()));
        }
        Ok(Self { family: Family::Geometric { first, ratio } })
    }

    pub fn poly(first: Rational, exponent: Rational) -> Result<Self> {
        if !first.is_positive() || !exponent.is_positive() {
            return Err(Error::InvalidSequence("polynomial decay needs first > 0 and exponent > 0".into()));
        }
        small_u32(exponent.numer(), "exponent numerator")?;
        small_u32(exponent.denom(), "exponent denominator")?;
        Ok(Self { family: Family::Poly { first, exponent } })
    }

    pub fn log(first: Rational, sigma: Rational) -> Result<Self> {
        if !first.is_positive() || !sigma.is_positive() {
            return Err(Error::InvalidSequence("logarithmic decay needs first > 0 and sigma > 0".into()));
        }
        Ok(Self { family: Family::Log { first, sigma } })
    }

    pub fn finite_rank(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() || !values[0].is_positive() {
            return Err(Error::InvalidSequence("finite-rank list needs a positive first entry".into()));
        }
        check_nonincreasing(&values)?;
        Ok(Self { family: Family::FiniteRank(values) })
    }

    pub fn explicit(prefix: Vec<Rational>, tail: EigenSeq) -> Result<Self> {
        if prefix.is_empty() {
            return Ok(tail);
        }
        if !prefix[0].is_positive() {
            return Err(Error::InvalidSequence("prefix needs a positive first entry".into()));
        }
        check_nonincreasing(&prefix)?;
        if *prefix.last().expect("nonempty") < tail.first() {
            return Err(Error::InvalidSequence("tail starts above the end of the prefix".into()));
        }
        Ok(Self { family: Family::Explicit { prefix, tail: Box::new(tail) } })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// `λ_1`, always rational.
    pub fn first(&self) -> Rational {
        match &self.family {
            Family::Geometric { first, .. } | Family::Poly { first, .. } | Family::Log { first, .. } => first.clone(),
            Family::FiniteRank(v) => v[0].clone(),
            Family::Explicit { prefix, .. } => prefix[0].clone(),
        }
    }

    /// True when every eigenvalue is available as an exact rational power.
    pub fn is_exact(&self) -> bool {
        self.exact_power().is_some()
    }

    /// Smallest `b >= 1` such that every `λ_j^b` is rational, if any.
    pub fn exact_power(&self) -> Option<u32> {
        match &self.family {
            Family::Geometric { .. } | Family::FiniteRank(_) => Some(1),
            Family::Poly { exponent, .. } => exponent.denom().to_u32(),
            Family::Log { .. } => None,
            Family::Explicit { tail, .. } => tail.exact_power(),
        }
    }

    /// `λ_j` for `j >= 1`.
    pub fn eigen_at(&self, j: u64) -> Eigenvalue {
        assert!(j >= 1, "eigenvalue indices start at 1");
        match &self.family {
            Family::Geometric { first, ratio } => Eigenvalue::Exact(first * pow_rational(ratio, (j - 1) as u32)),
            Family::Poly { first, exponent } => {
                if exponent.is_integer() {
                    let p = exponent.to_integer().to_u32().expect("validated");
                    let jp = num_traits::pow(BigInt::from(j), p as usize);
                    Eigenvalue::Exact(first / Rational::from_integer(jp))
                } else {
                    Eigenvalue::Real(to_f64(first) * (j as f64).powf(-to_f64(exponent)))
                }
            }
            Family::Log { first, sigma } => {
                if j == 1 {
                    Eigenvalue::Exact(first.clone())
                } else {
                    let c = to_f64(first);
                    Eigenvalue::Real(c * ((j + 1) as f64).ln().powf(-2.0 / to_f64(sigma)))
                }
            }
            Family::FiniteRank(v) => Eigenvalue::Exact(v.get((j - 1) as usize).cloned().unwrap_or_else(Rational::zero)),
            Family::Explicit { prefix, tail } => match prefix.get((j - 1) as usize) {
                Some(v) => Eigenvalue::Exact(v.clone()),
                None => tail.eigen_at(j - prefix.len() as u64),
            },
        }
    }

    /// `ln λ_j` without underflow (`-inf` for zero eigenvalues).
    pub fn ln_eigen_at(&self, j: u64) -> f64 {
        assert!(j >= 1, "eigenvalue indices start at 1");
        match &self.family {
            Family::Geometric { first, ratio } => {
                if j == 1 {
                    ln_rational(first)
                } else if ratio.is_zero() {
                    f64::NEG_INFINITY
                } else {
                    ln_rational(first) + (j - 1) as f64 * ln_rational(ratio)
                }
            }
            Family::Poly { first, exponent } => ln_rational(first) - to_f64(exponent) * (j as f64).ln(),
            Family::Log { first, sigma } => {
                if j == 1 {
                    ln_rational(first)
                } else {
                    ln_rational(first) - 2.0 / to_f64(sigma) * ((j + 1) as f64).ln().ln()
                }
            }
            Family::FiniteRank(v) => v.get((j - 1) as usize).map(ln_rational).unwrap_or(f64::NEG_INFINITY),
            Family::Explicit { prefix, tail } => match prefix.get((j - 1) as usize) {
                Some(v) => ln_rational(v),
                None => tail.ln_eigen_at(j - prefix.len() as u64),
            },
        }
    }

    /// `λ_j^k` as an exact rational, when `k` is a multiple of [`exact_power`](Self::exact_power).
    pub fn pow_value(&self, j: u64, k: u32) -> Option<Rational> {
        match &self.family {
            Family::Poly { first, exponent } => {
                let b = exponent.denom().to_u32()?;
                if k % b != 0 {
                    return None;
                }
                let a = exponent.numer().to_u32()?;
                // (c · j^(-a/b))^k = c^k · j^(-a k / b)
                let jp = num_traits::pow(BigInt::from(j), (a * (k / b)) as usize);
                Some(pow_rational(first, k) / Rational::from_integer(jp))
            }
            Family::Log { .. } => {
                if j == 1 {
                    Some(pow_rational(&self.first(), k))
                } else {
                    None
                }
            }
            Family::Explicit { prefix, tail } => match prefix.get((j - 1) as usize) {
                Some(v) => Some(pow_rational(v, k)),
                None => tail.pow_value(j - prefix.len() as u64, k),
            },
            _ => self.eigen_at(j).exact().map(|v| pow_rational(v, k)),
        }
    }

    /// True if only finitely many eigenvalues are nonzero.
    pub fn has_zero_tail(&self) -> bool {
        match &self.family {
            Family::Geometric { ratio, .. } => ratio.is_zero(),
            Family::Poly { .. } | Family::Log { .. } => false,
            Family::FiniteRank(_) => true,
            Family::Explicit { tail, .. } => tail.has_zero_tail(),
        }
    }

    /// `λ_2 = λ_3 = ... = 0`.
    pub fn second_is_zero(&self) -> bool {
        match self.eigen_at(2) {
            Eigenvalue::Exact(r) => r.is_zero(),
            Eigenvalue::Real(x) => x == 0.0,
        }
    }

    /// `#{j : λ_j > threshold}`, strict inequality.
    pub fn count_above(&self, threshold: &Rational) -> Result<Count> {
        self.count_pow_above(1, threshold)
    }

    /// `#{j : λ_j^k > x}` for `k >= 1`, `x >= 0`, evaluated by closed-form inversion.
    pub fn count_pow_above(&self, k: u32, x: &Rational) -> Result<Count> {
        assert!(k >= 1);
        if x.is_negative() {
            return Err(Error::InvalidInput("threshold must be nonnegative".into()));
        }
        if x.is_zero() && !self.has_zero_tail() {
            return Err(Error::InfiniteCount);
        }
        match &self.family {
            Family::Geometric { first, ratio } => geometric_count(first, ratio, k, x),
            Family::Poly { first, exponent } => {
                // c^k j^(-a k / b) > x  <=>  j^(a k) < c^(k b) / x^b
                let a = exponent.numer().to_u32().expect("validated");
                let b = exponent.denom().to_u32().expect("validated");
                let bound = pow_rational(first, k * b) / pow_rational(x, b);
                Ok(max_root_below(a * k, &bound))
            }
            Family::Log { first, sigma } => {
                let t = if k == 1 { to_f64(x) } else { (ln_rational(x) / k as f64).exp() };
                log_family_count(to_f64(first), to_f64(sigma), t)
            }
            Family::FiniteRank(v) => Ok(Count::from(v.iter().take_while(|e| &pow_rational(e, k) > x).count())),
            Family::Explicit { prefix, tail } => {
                let head = prefix.iter().take_while(|e| &pow_rational(e, k) > x).count();
                if head < prefix.len() {
                    Ok(Count::from(head))
                } else {
                    Ok(Count::from(head) + tail.count_pow_above(k, x)?)
                }
            }
        }
    }

    /// Same count as [`count_above`](Self::count_above) obtained by doubling and bisection
    /// on the monotone sequence. Slower; kept as an independent cross-check.
    pub fn count_above_bisect(&self, threshold: &Rational) -> Result<Count> {
        if threshold.is_negative() {
            return Err(Error::InvalidInput("threshold must be nonnegative".into()));
        }
        if threshold.is_zero() && !self.has_zero_tail() {
            return Err(Error::InfiniteCount);
        }
        let above = |j: &BigUint| -> Result<bool> {
            let j = j.to_u64().ok_or_else(|| Error::BudgetExceeded {
                what: "bisecting beyond u64 indices".into(),
                limit: u64::MAX,
            })?;
            Ok(self.value_above(j, threshold))
        };
        let one = BigUint::one();
        if !above(&one)? {
            return Ok(Count::zero());
        }
        // Invariant: above(lo) and !above(hi).
        let mut lo = one.clone();
        let mut hi = BigUint::from(2u32);
        while above(&hi)? {
            lo = hi.clone();
            hi <<= 1;
            if hi.bits() > 62 {
                return Err(Error::BudgetExceeded { what: "bisection search".into(), limit: 1 << 62 });
            }
        }
        while &hi - &lo > one {
            let mid: BigUint = (&lo + &hi) >> 1;
            if above(&mid)? {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(lo)
    }

    /// `λ_j > t`, decided exactly whenever the family allows it.
    pub fn value_above(&self, j: u64, t: &Rational) -> bool {
        if let Some(b) = self.exact_power() {
            let lhs = self.pow_value(j, b).expect("exact family");
            lhs > pow_rational(t, b)
        } else {
            match self.eigen_at(j) {
                Eigenvalue::Exact(v) => &v > t,
                Eigenvalue::Real(v) => v > to_f64(t),
            }
        }
    }

    /// `ln #{j : λ_j > threshold}` without materialising astronomically large counts.
    pub fn ln_count_above(&self, threshold: &Rational) -> Result<f64> {
        if let Family::Log { first, sigma } = &self.family {
            let c = to_f64(first);
            let t = to_f64(threshold);
            if t <= 0.0 {
                return Err(Error::InfiniteCount);
            }
            if c <= t {
                return Ok(f64::NEG_INFINITY);
            }
            let z = (c / t).powf(to_f64(sigma) / 2.0);
            if z > 600.0 {
                // floor(e^z) - 1 = e^z (1 - O(e^-z))
                return Ok(z);
            }
        }
        if let Family::Explicit { prefix, tail } = &self.family {
            if matches!(tail.family, Family::Log { .. }) && prefix.iter().all(|v| v > threshold) {
                let tail_ln = tail.ln_count_above(threshold)?;
                let head = prefix.len() as f64;
                return Ok(if tail_ln == f64::NEG_INFINITY {
                    head.ln()
                } else {
                    tail_ln + (1.0 + head * (-tail_ln).exp()).ln()
                });
            }
        }
        Ok(ln_count(&self.count_above(threshold)?))
    }

    pub fn decay_class(&self) -> DecayClass {
        if self.second_is_zero() {
            return DecayClass::FiniteRankOne;
        }
        match &self.family {
            Family::Geometric { .. } | Family::Poly { .. } | Family::FiniteRank(_) => DecayClass::SuperLog,
            Family::Log { sigma, .. } => DecayClass::LogCritical(to_f64(sigma)),
            Family::Explicit { tail, .. } => match tail.decay_class() {
                DecayClass::FiniteRankOne => DecayClass::SuperLog,
                other => other,
            },
        }
    }

    /// Whether `ln(1/λ_n) / ln^(1/t) n -> ∞`, decided from the family parameters.
    pub fn log_decay_dominates(&self, t: f64) -> bool {
        match &self.family {
            Family::Geometric { .. } | Family::FiniteRank(_) => true,
            Family::Poly { .. } => t > 1.0,
            Family::Log { .. } => false,
            Family::Explicit { tail, .. } => tail.log_decay_dominates(t),
        }
    }

    /// Multiplicity of the largest eigenvalue, compared exactly.
    pub fn multiplicity_of_max(&self) -> Result<u64> {
        let first = self.first();
        match &self.family {
            Family::Geometric { .. } | Family::Poly { .. } | Family::Log { .. } => Ok(1),
            Family::FiniteRank(v) => Ok(v.iter().take_while(|e| **e == first).count() as u64),
            Family::Explicit { prefix, tail } => {
                let head = prefix.iter().take_while(|e| **e == first).count() as u64;
                if (head as usize) < prefix.len() || tail.first() != first {
                    Ok(head)
                } else {
                    Ok(head + tail.multiplicity_of_max()?)
                }
            }
        }
    }

    pub fn trace(&self) -> Trace {
        match &self.family {
            Family::Geometric { first, ratio } => Trace::Exact(first / (Rational::one() - ratio)),
            Family::Poly { first, exponent } => {
                if *exponent <= Rational::one() {
                    Trace::Infinite
                } else {
                    let (lo, hi) = zeta_enclosure(to_f64(exponent));
                    let c = to_f64(first);
                    Trace::Enclosure { lo: c * lo, hi: c * hi }
                }
            }
            Family::Log { .. } => Trace::Infinite,
            Family::FiniteRank(v) => Trace::Exact(v.iter().sum()),
            Family::Explicit { prefix, tail } => {
                let head: Rational = prefix.iter().sum();
                match tail.trace() {
                    Trace::Exact(t) => Trace::Exact(head + t),
                    Trace::Enclosure { lo, hi } => {
                        let h = to_f64(&head);
                        Trace::Enclosure { lo: h + lo, hi: h + hi }
                    }
                    Trace::Infinite => Trace::Infinite,
                }
            }
        }
    }

    /// `λ_j / λ_1`, the sequence of the rescaled univariate problem.
    pub fn rescaled(&self) -> EigenSeq {
        let c = self.first();
        let scale = |v: &Rational| v / &c;
        let family = match &self.family {
            Family::Geometric { ratio, .. } => Family::Geometric { first: Rational::one(), ratio: ratio.clone() },
            Family::Poly { exponent, .. } => Family::Poly { first: Rational::one(), exponent: exponent.clone() },
            Family::Log { sigma, .. } => Family::Log { first: Rational::one(), sigma: sigma.clone() },
            Family::FiniteRank(v) => Family::FiniteRank(v.iter().map(scale).collect()),
            Family::Explicit { prefix, tail } => Family::Explicit {
                prefix: prefix.iter().map(scale).collect(),
                tail: Box::new(tail.scaled(&(Rational::one() / &c))),
            },
        };
        EigenSeq { family }
    }

    /// Multiplies every eigenvalue by `factor > 0`.
    pub fn scaled(&self, factor: &Rational) -> EigenSeq {
        let scale = |v: &Rational| v * factor;
        let family = match &self.family {
            Family::Geometric { first, ratio } => Family::Geometric { first: scale(first), ratio: ratio.clone() },
            Family::Poly { first, exponent } => Family::Poly { first: scale(first), exponent: exponent.clone() },
            Family::Log { first, sigma } => Family::Log { first: scale(first), sigma: sigma.clone() },
            Family::FiniteRank(v) => Family::FiniteRank(v.iter().map(scale).collect()),
            Family::Explicit { prefix, tail } => {
                Family::Explicit { prefix: prefix.iter().map(scale).collect(), tail: Box::new(tail.scaled(factor)) }
            }
        };
        EigenSeq { family }
    }
}

impl fmt::Display for EigenSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::num::format_rational as r;
        match &self.family {
            Family::Geometric { first, ratio } => write!(f, "Geometric({}, {})", r(first), r(ratio)),
            Family::Poly { first, exponent } => write!(f, "PolyDecay({}, {})", r(first), r(exponent)),
            Family::Log { first, sigma } => write!(f, "LogDecay({}, {})", r(first), r(sigma)),
            Family::FiniteRank(v) => {
                let items: Vec<_> = v.iter().map(r).collect();
                write!(f, "FiniteRank([{}])", items.join(", "))
            }
            Family::Explicit { prefix, tail } => {
                let items: Vec<_> = prefix.iter().map(r).collect();
                write!(f, "Explicit([{}] + {})", items.join(", "), tail)
            }
        }
    }
}

/// `#{j : (c q^(j-1))^k > x}` for `x > 0` (or `x = 0` with `q = 0`).
fn geometric_count(first: &Rational, ratio: &Rational, k: u32, x: &Rational) -> Result<Count> {
    let ck = pow_rational(first, k);
    if ck <= *x {
        return Ok(Count::zero());
    }
    if ratio.is_zero() {
        return Ok(Count::one());
    }
    let qk = pow_rational(ratio, k);
    // Largest i >= 0 with ck · qk^i > x.
    let estimate = (ln_rational(x) - ln_rational(&ck)) / ln_rational(&qk);
    if !(estimate < 1e8) {
        return Err(Error::BudgetExceeded { what: "exact geometric inversion".into(), limit: 100_000_000 });
    }
    let holds = |i: u64| ck.clone() * pow_rational(&qk, i as u32) > *x;
    let mut i = estimate.floor().max(0.0) as u64;
    while holds(i + 1) {
        i += 1;
    }
    while !holds(i) {
        i -= 1;
    }
    Ok(Count::from(i + 1))
}

/// Count for the logarithmic family at a real threshold `t > 0`.
fn log_family_count(c: f64, sigma: f64, t: f64) -> Result<Count> {
    if t <= 0.0 {
        return Err(Error::InfiniteCount);
    }
    if c <= t {
        return Ok(Count::zero());
    }
    // j >= 2 counts iff ln(j+1) < z, i.e. j < e^z - 1.
    let z = (c / t).powf(sigma / 2.0);
    let e_z = floor_exp(z)?;
    let two = Count::from(2u32);
    let tail = if e_z > two { e_z - two } else { Count::zero() };
    Ok(Count::one() + tail)
}

/// Enclosure of `Σ_{j>=1} j^(-p)` for `p > 1` (Euler–Maclaurin tail with remainder bound).
fn zeta_enclosure(p: f64) -> (f64, f64) {
    const N: u32 = 1000;
    let n = N as f64;
    let head: f64 = (1..N).map(|j| (j as f64).powf(-p)).sum();
    let tail = n.powf(1.0 - p) / (p - 1.0) + 0.5 * n.powf(-p) + p * n.powf(-p - 1.0) / 12.0;
    let remainder = p * (p + 1.0) * (p + 2.0) * n.powf(-p - 3.0) / 720.0;
    let rounding = 1e-14 * (head + tail) * N as f64;
    let slack = remainder + rounding;
    (head + tail - slack, head + tail + slack)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{int, rat};

    fn geo(c: (i64, i64), q: (i64, i64)) -> EigenSeq {
        EigenSeq::geometric(rat(c.0, c.1), rat(q.0, q.1)).unwrap()
    }

    fn finite(values: &[(i64, i64)]) -> EigenSeq {
        EigenSeq::finite_rank(values.iter().map(|&(a, b)| rat(a, b)).collect()).unwrap()
    }

    /// Brute-force count over j = 1..=limit using eigen_at only.
    fn scan_count(seq: &EigenSeq, t: &Rational, limit: u64) -> u64 {
        (1..=limit).filter(|&j| seq.value_above(j, t)).count() as u64
    }

    #[test]
    fn eigen_at_examples() {
        assert_eq!(geo((1, 1), (1, 2)).eigen_at(3), Eigenvalue::Exact(rat(1, 4)));
        assert_eq!(finite(&[(1, 1), (1, 2)]).eigen_at(5), Eigenvalue::Exact(int(0)));
        let p = EigenSeq::poly(int(1), int(2)).unwrap();
        assert_eq!(p.eigen_at(10), Eigenvalue::Exact(rat(1, 100)));
    }

    #[test]
    fn count_above_examples() {
        let p = EigenSeq::poly(int(1), int(2)).unwrap();
        assert_eq!(p.count_above(&rat(1, 100)).unwrap(), Count::from(9u32));
        assert_eq!(scan_count(&p, &rat(1, 100), 20), 9);
        assert_eq!(finite(&[(1, 1), (0, 1), (0, 1)]).count_above(&rat(1, 4)).unwrap(), Count::from(1u32));
        assert_eq!(geo((1, 1), (1, 2)).count_above(&int(1)).unwrap(), Count::zero());
    }

    #[test]
    fn zero_threshold_is_infinite_without_zero_tail() {
        assert_eq!(geo((1, 1), (1, 2)).count_above(&int(0)), Err(Error::InfiniteCount));
        assert_eq!(finite(&[(1, 1), (1, 2)]).count_above(&int(0)).unwrap(), Count::from(2u32));
        assert_eq!(geo((1, 1), (0, 1)).count_above(&int(0)).unwrap(), Count::one());
    }

    #[test]
    fn count_matches_scan_and_bisection_on_ties() {
        let seqs = vec![
            geo((1, 1), (1, 2)),
            geo((3, 1), (2, 3)),
            EigenSeq::poly(int(1), int(2)).unwrap(),
            EigenSeq::poly(int(2), rat(1, 2)).unwrap(),
            EigenSeq::poly(rat(7, 3), rat(3, 2)).unwrap(),
            finite(&[(3, 1), (3, 1), (3, 1), (1, 1)]),
            EigenSeq::explicit(vec![int(1), int(1)], geo((1, 2), (1, 2))).unwrap(),
        ];
        for seq in &seqs {
            for j in 1..12u64 {
                // threshold exactly at an eigenvalue: strictness must exclude index j and its ties
                let t = match seq.eigen_at(j) {
                    Eigenvalue::Exact(v) => v,
                    Eigenvalue::Real(x) => crate::num::rational_from_f64(x).unwrap(),
                };
                if t.is_zero() {
                    continue;
                }
                let fast = seq.count_above(&t).unwrap();
                let slow = seq.count_above_bisect(&t).unwrap();
                assert_eq!(fast, slow, "{seq} at λ_{j}");
                assert_eq!(fast, Count::from(scan_count(seq, &t, 400)), "{seq} at λ_{j}");
            }
        }
    }

    #[test]
    fn irrational_poly_is_exact_at_boundary() {
        // λ_j = j^(-1/2) > 1/3  <=>  j < 9
        let p = EigenSeq::poly(int(1), rat(1, 2)).unwrap();
        assert_eq!(p.count_above(&rat(1, 3)).unwrap(), Count::from(8u32));
        assert_eq!(p.exact_power(), Some(2));
    }

    #[test]
    fn log_family_counts() {
        let s = EigenSeq::log(int(1), int(2)).unwrap();
        // λ_j = 1/ln(j+1) for j >= 2; λ_j > 1/3 iff ln(j+1) < 3 iff j <= 19
        assert_eq!(s.count_above(&rat(1, 3)).unwrap(), Count::from(19u32));
        assert_eq!(scan_count(&s, &rat(1, 3), 100), 19);
        let ln = s.ln_count_above(&rat(1, 1000)).unwrap();
        assert!((ln - 1000.0).abs() < 1e-6);
    }

    #[test]
    fn rejects_invalid_sequences() {
        assert!(EigenSeq::finite_rank(vec![rat(1, 2), int(1)]).is_err());
        assert!(EigenSeq::finite_rank(vec![int(0)]).is_err());
        assert!(EigenSeq::geometric(int(1), int(1)).is_err());
        assert!(EigenSeq::geometric(int(0), rat(1, 2)).is_err());
        assert!(EigenSeq::poly(int(1), int(0)).is_err());
        assert!(EigenSeq::explicit(vec![rat(1, 4)], geo((1, 2), (1, 2))).is_err());
    }

    #[test]
    fn decay_classes() {
        assert_eq!(geo((1, 1), (1, 2)).decay_class(), DecayClass::SuperLog);
        assert_eq!(EigenSeq::log(int(1), int(2)).unwrap().decay_class(), DecayClass::LogCritical(2.0));
        assert_eq!(finite(&[(1, 1)]).decay_class(), DecayClass::FiniteRankOne);
        assert_eq!(finite(&[(1, 1), (1, 2)]).decay_class(), DecayClass::SuperLog);
    }

    #[test]
    fn log_critical_numerics_match_symbolic_class() {
        // λ_n ln^(2/s) n = ln^(2/s - 1) n (asymptotically) for σ = 2
        let s = EigenSeq::log(int(1), int(2)).unwrap();
        let window = [1e3, 1e4, 1e5, 1e6];
        for (s_param, should_decrease) in [(3.0, true), (1.5, false)] {
            let vals: Vec<f64> =
                window.iter().map(|&n| s.eigen_at(n as u64).to_f64() * (n as f64).ln().powf(2.0 / s_param)).collect();
            let decreasing = vals.windows(2).all(|w| w[1] < w[0]);
            let increasing = vals.windows(2).all(|w| w[1] > w[0]);
            assert_eq!(decreasing, should_decrease, "s={s_param}: {vals:?}");
            assert_eq!(increasing, !should_decrease, "s={s_param}: {vals:?}");
            assert_eq!(s.decay_class().passes(s_param), Some(should_decrease));
        }
    }

    #[test]
    fn multiplicities() {
        assert_eq!(finite(&[(1, 1), (1, 1), (1, 2)]).multiplicity_of_max().unwrap(), 2);
        assert_eq!(geo((1, 1), (1, 2)).multiplicity_of_max().unwrap(), 1);
        assert_eq!(finite(&[(3, 1), (3, 1), (3, 1), (1, 1)]).multiplicity_of_max().unwrap(), 3);
        let e = EigenSeq::explicit(vec![int(1)], finite(&[(1, 1), (1, 2)])).unwrap();
        assert_eq!(e.multiplicity_of_max().unwrap(), 2);
    }

    #[test]
    fn traces() {
        assert_eq!(geo((1, 1), (1, 2)).trace(), Trace::Exact(int(2)));
        assert_eq!(EigenSeq::poly(int(1), rat(1, 2)).unwrap().trace(), Trace::Infinite);
        assert_eq!(finite(&[(1, 1), (1, 2), (1, 4)]).trace(), Trace::Exact(rat(7, 4)));
        match EigenSeq::poly(int(1), int(2)).unwrap().trace() {
            Trace::Enclosure { lo, hi } => {
                let zeta2 = std::f64::consts::PI.powi(2) / 6.0;
                assert!(lo <= zeta2 && zeta2 <= hi, "[{lo}, {hi}]");
                assert!(hi - lo <= 1e-9);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn duality_between_count_and_min_form() {
        // count_above(ε²) = min{n : λ_{n+1} <= ε²}
        let seqs = [geo((1, 1), (1, 3)), EigenSeq::poly(int(1), int(1)).unwrap(), finite(&[(1, 1), (1, 2), (1, 2)])];
        for seq in &seqs {
            for k in 1..30 {
                let eps = rat(k, 31);
                let t = &eps * &eps;
                let count = seq.count_above(&t).unwrap().to_u64().unwrap();
                let min_form = (0u64..).find(|&n| !seq.value_above(n + 1, &t)).unwrap();
                assert_eq!(count, min_form);
            }
        }
    }
}
