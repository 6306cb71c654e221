//! Decisions together with the evidence that supports them.

use serde::{Deserialize, Serialize};

use crate::poly::{IntPolynomial, NonnegProof, Rational, Sign};
use crate::serde_util::rational_str;
use crate::words::QuaternaryWord;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub truth: bool,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// The inequality is an identity, e.g. the zero polynomial or `p == q`.
    Trivial { reason: String },
    Polynomial(NonnegProof),
    Radical(RadicalProof),
    Counterexample(Counterexample),
    /// Both halves of a two-part relation; the verdict is their conjunction.
    Conjunction { parts: Vec<Judgement> },
}

/// A rational point where the decided expression is provably negative.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    #[serde(with = "rational_str")]
    pub point: Rational,
    pub sign: Sign,
    /// Interval free of roots of the certificate polynomial that contains
    /// `point`; the expression keeps one sign on it away from removed
    /// square factors.
    pub interval: Option<Span>,
    /// Floating-point value at `point`, for humans only.
    pub approx: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    #[serde(with = "rational_str")]
    pub lo: Rational,
    #[serde(with = "rational_str")]
    pub hi: Rational,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleSign {
    #[serde(with = "rational_str")]
    pub point: Rational,
    pub sign: Sign,
}

/// Trace of the nested-radical decision of `I_w(x) >= x`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadicalProof {
    pub word: QuaternaryWord,
    pub eliminant_degree: usize,
    /// Square-free eliminant whose isolated roots split `[0, 1]`.
    pub eliminant: Option<IntPolynomial>,
    pub roots_in_unit: usize,
    pub samples: Vec<SampleSign>,
}

/// One line of machine-readable output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Judgement {
    pub lhs: String,
    pub rhs: String,
    pub relation: Relation,
    pub truth: bool,
    pub witness: Witness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `I_lhs >= I_rhs` on `[0, 1]`.
    Geq,
    /// Prefix TBM relation.
    Tbm,
    /// Suffix TBM relation.
    TbmSuffix,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Geq => ">=",
            Relation::Tbm => "|>",
            Relation::TbmSuffix => "|>'",
        }
    }
}

impl Verdict {
    pub fn trivial(truth: bool, reason: &str) -> Verdict {
        Verdict { truth, witness: Witness::Trivial { reason: reason.into() } }
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match &self.witness {
            Witness::Counterexample(c) => Some(c),
            _ => None,
        }
    }

    pub fn judge(self, lhs: impl ToString, rhs: impl ToString, relation: Relation) -> Judgement {
        Judgement {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            relation,
            truth: self.truth,
            witness: self.witness,
        }
    }
}

impl Judgement {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("judgements serialize")
    }
}
