//! Sufficient conditions deciding `λ ∈ Φ(μ)` without computing characters.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ForcedPositive,
    ForcedZero,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// `λ = (n)` always occurs.
    Trivial,
    /// `(1^n) ∈ Φ(μ)` exactly when `μ = μ'`.
    Sign,
    /// `d(λ) > 2 d(μ)²` rules `λ` out.
    DurfeeBound,
    /// `λ = μ = μ'` occurs in its own square.
    SelfSquare,
    /// `(n−p, p)` for `2 ≤ p ≤ min(ℓ(μ), (1+μ₁)/2)`.
    TwoRow,
    /// `(n−m, 1^m)` for `m` below the strictly decreasing prefix length of `μ`.
    Hook,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Trivial => "trivial",
            Rule::Sign => "sign",
            Rule::DurfeeBound => "durfee-bound",
            Rule::SelfSquare => "self-square",
            Rule::TwoRow => "two-row",
            Rule::Hook => "hook",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RuleVerdict {
    pub verdict: Verdict,
    pub rule: Option<Rule>,
    /// The rule fired on `λ'`, transferred through `g(λ,μ,μ) = g(λ',μ,μ)`.
    pub via_conjugate: bool,
}

impl RuleVerdict {
    fn unknown() -> Self {
        RuleVerdict {
            verdict: Verdict::Unknown,
            rule: None,
            via_conjugate: false,
        }
    }
}

fn direct(lambda: &Partition, mu: &Partition) -> Option<(Verdict, Rule)> {
    let n = lambda.size();
    if *lambda == Partition::row(n) {
        return Some((Verdict::ForcedPositive, Rule::Trivial));
    }
    if *lambda == Partition::column(n) {
        let v = if mu.is_self_conjugate() {
            Verdict::ForcedPositive
        } else {
            Verdict::ForcedZero
        };
        return Some((v, Rule::Sign));
    }
    let d = mu.durfee();
    if lambda.durfee() > 2 * d * d {
        return Some((Verdict::ForcedZero, Rule::DurfeeBound));
    }
    if lambda == mu && mu.is_self_conjugate() {
        return Some((Verdict::ForcedPositive, Rule::SelfSquare));
    }
    if lambda.len() == 2 {
        let p = lambda.part(1);
        if p >= 2 && p <= mu.len() && 2 * p <= 1 + mu.largest_part() {
            return Some((Verdict::ForcedPositive, Rule::TwoRow));
        }
    }
    if lambda.is_hook() {
        let m = lambda.len() - 1;
        let parts = mu.parts();
        let r = 1 + parts.windows(2).take_while(|w| w[0] > w[1]).count();
        if m < r {
            return Some((Verdict::ForcedPositive, Rule::Hook));
        }
    }
    None
}

/// Applies the known rules to `λ` and, when `μ = μ'`, to `λ'`. Only forced
/// verdicts carry a rule.
pub fn positivity_rules(lambda: &Partition, mu: &Partition) -> Result<RuleVerdict> {
    if lambda.size() != mu.size() {
        return Err(Error::size(lambda.size(), mu.size()));
    }
    if let Some((verdict, rule)) = direct(lambda, mu) {
        return Ok(RuleVerdict {
            verdict,
            rule: Some(rule),
            via_conjugate: false,
        });
    }
    if mu.is_self_conjugate() {
        let conj = lambda.conjugate();
        if conj != *lambda {
            if let Some((verdict, rule)) = direct(&conj, mu) {
                return Ok(RuleVerdict {
                    verdict,
                    rule: Some(rule),
                    via_conjugate: true,
                });
            }
        }
    }
    Ok(RuleVerdict::unknown())
}
