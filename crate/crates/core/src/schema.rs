//! JSON problem specifications and output records.
//!
//! Rational parameters are written as decimal or `a/b` strings and parsed
//! exactly; plain JSON numbers are accepted and read through their shortest
//! decimal form.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classify::Problem;
use crate::error::{Error, Result};
use crate::hilbert::{Criterion, DimensionRule, GeneralProblem};
use crate::integration::{IntegrationBound, Variant, DEFAULT_C};
use crate::num::{format_rational, parse_rational, rational_from_decimal_f64, Rational};
use crate::sobolev::{Norm, SobolevProblem};
use crate::spectra::{EigenSeq, Family};
use crate::tensor::TensorProblem;

/// Exact number given as a string, or a JSON number.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Decimal {
    Text(String),
    Number(f64),
}

impl Decimal {
    pub fn to_rational(&self) -> Result<Rational> {
        match self {
            Decimal::Text(s) => parse_rational(s),
            Decimal::Number(x) => rational_from_decimal_f64(*x),
        }
    }

    pub fn exact(x: &Rational) -> Self {
        Decimal::Text(format_rational(x))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase", deny_unknown_fields)]
pub enum SequenceSpec {
    Geometric { first: Decimal, ratio: Decimal },
    Poly { first: Decimal, exponent: Decimal },
    Log { first: Decimal, sigma: Decimal },
    Finite { values: Vec<Decimal> },
    Explicit { prefix: Vec<Decimal>, tail: Box<SequenceSpec> },
}

fn rationals(values: &[Decimal]) -> Result<Vec<Rational>> {
    values.iter().map(Decimal::to_rational).collect()
}

impl SequenceSpec {
    pub fn build(&self) -> Result<EigenSeq> {
        match self {
            SequenceSpec::Geometric { first, ratio } => EigenSeq::geometric(first.to_rational()?, ratio.to_rational()?),
            SequenceSpec::Poly { first, exponent } => EigenSeq::poly(first.to_rational()?, exponent.to_rational()?),
            SequenceSpec::Log { first, sigma } => EigenSeq::log(first.to_rational()?, sigma.to_rational()?),
            SequenceSpec::Finite { values } => EigenSeq::finite_rank(rationals(values)?),
            SequenceSpec::Explicit { prefix, tail } => EigenSeq::explicit(rationals(prefix)?, tail.build()?),
        }
    }

    pub fn from_seq(seq: &EigenSeq) -> Self {
        let d = Decimal::exact;
        match seq.family() {
            Family::Geometric { first, ratio } => SequenceSpec::Geometric { first: d(first), ratio: d(ratio) },
            Family::Poly { first, exponent } => SequenceSpec::Poly { first: d(first), exponent: d(exponent) },
            Family::Log { first, sigma } => SequenceSpec::Log { first: d(first), sigma: d(sigma) },
            Family::FiniteRank(v) => SequenceSpec::Finite { values: v.iter().map(d).collect() },
            Family::Explicit { prefix, tail } => SequenceSpec::Explicit {
                prefix: prefix.iter().map(d).collect(),
                tail: Box::new(SequenceSpec::from_seq(tail)),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DimSpec {
    pub d: u32,
    pub sequence: SequenceSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ProblemSpec {
    Tensor {
        sequence: SequenceSpec,
    },
    General {
        dims: Vec<DimSpec>,
    },
    Sobolev {
        alpha: f64,
        norm: Norm,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        gamma: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        beta: Option<f64>,
    },
    Integration {
        variant: Variant,
        #[serde(rename = "C", default, skip_serializing_if = "Option::is_none")]
        c: Option<f64>,
    },
}

impl ProblemSpec {
    pub fn build(&self) -> Result<Problem> {
        match self {
            ProblemSpec::Tensor { sequence } => Ok(Problem::Tensor(TensorProblem::new(sequence.build()?))),
            ProblemSpec::General { dims } => {
                let mut map = BTreeMap::new();
                for dim in dims {
                    if dim.d == 0 {
                        return Err(Error::Parse("dimension 0 in general problem".into()));
                    }
                    if map.insert(dim.d, dim.sequence.build()?).is_some() {
                        return Err(Error::Parse(format!("dimension {} listed twice", dim.d)));
                    }
                }
                Ok(Problem::General(GeneralProblem::new(DimensionRule::Explicit(map))))
            }
            ProblemSpec::Sobolev { alpha, norm, gamma, beta } => {
                let p = SobolevProblem::new(*alpha, *norm)?;
                let p = match (gamma, beta) {
                    (None, None) => p,
                    (g, b) => p.with_hybrid(g.unwrap_or(0.0), b.unwrap_or(0.0))?,
                };
                Ok(Problem::Sobolev(p))
            }
            ProblemSpec::Integration { variant, c } => {
                Ok(Problem::Integration(IntegrationBound::new(*variant, c.unwrap_or(DEFAULT_C))?))
            }
        }
    }
}

fn default_criterion() -> Criterion {
    Criterion::Absolute
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpecFile {
    pub problem: ProblemSpec,
    #[serde(default = "default_criterion")]
    pub criterion: Criterion,
}

impl ProblemSpecFile {
    /// Parses and validates a specification; every failure is a parse error.
    pub fn parse(text: &str) -> Result<Self> {
        let spec: Self = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        spec.problem.build().map_err(|e| match e {
            Error::Parse(m) => Error::Parse(m),
            other => Error::Parse(other.to_string()),
        })?;
        Ok(spec)
    }

    pub fn build(&self) -> Result<Problem> {
        self.problem.build()
    }
}

/// Output of the `complexity` command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexityRecord {
    pub eps: String,
    pub d: u32,
    pub n: String,
    pub criterion: Criterion,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_kind() {
        let cases = [
            r#"{"problem":{"kind":"tensor","sequence":{"family":"geometric","first":"1","ratio":"0.25"}},"criterion":"abs"}"#,
            r#"{"problem":{"kind":"tensor","sequence":{"family":"finite","values":["1","1","1/2"]}},"criterion":"norm"}"#,
            r#"{"problem":{"kind":"tensor","sequence":{"family":"explicit","prefix":["2"],"tail":{"family":"poly","first":"1","exponent":"2"}}}}"#,
            r#"{"problem":{"kind":"general","dims":[{"d":1,"sequence":{"family":"log","first":"1","sigma":"2"}}]},"criterion":"abs"}"#,
            r#"{"problem":{"kind":"sobolev","alpha":1,"norm":"sharp"},"criterion":"abs"}"#,
            r#"{"problem":{"kind":"sobolev","alpha":2.5,"norm":"plus","gamma":1,"beta":0.5}}"#,
            r#"{"problem":{"kind":"integration","variant":"a","C":3}}"#,
        ];
        for text in cases {
            let spec = ProblemSpecFile::parse(text).unwrap_or_else(|e| panic!("{text}: {e}"));
            let again: ProblemSpecFile = serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
            assert_eq!(spec, again);
        }
    }

    #[test]
    fn decimal_strings_are_exact() {
        let s = SequenceSpec::Geometric { first: Decimal::Text("1".into()), ratio: Decimal::Text("0.1".into()) };
        let seq = s.build().unwrap();
        assert_eq!(seq.family(), &Family::Geometric { first: crate::num::int(1), ratio: crate::num::rat(1, 10) });
        assert_eq!(SequenceSpec::from_seq(&seq).build().unwrap(), seq);
    }

    #[test]
    fn rejects_bad_specs() {
        let bad = [
            r#"{"problem":{"kind":"tensor","sequence":{"family":"geometric","first":"1","ratio":"0.25","x":1}}}"#,
            r#"{"problem":{"kind":"sobolev","alpha":1,"norm":"sharp"},"extra":true}"#,
            r#"{"problem":{"kind":"tensor","sequence":{"family":"finite","values":["1","2"]}}}"#,
            r#"{"problem":{"kind":"sobolev","alpha":-1,"norm":"plus"}}"#,
            r#"{"problem":{"kind":"volume"}}"#,
            "not json",
        ];
        for text in bad {
            assert!(matches!(ProblemSpecFile::parse(text), Err(Error::Parse(_))), "{text}");
        }
    }
}
