use egypt::{BigUint, ExpansionTrace, FeasibilityVerdict, Rational, Verdict};
use serde::{Deserialize, Serialize};

/// JSON record shared by `expand`, `feasibility` and `verify`. Integers are
/// decimal strings so nothing is lost to a consumer's number type.
#[derive(Debug, Serialize, Deserialize)]
pub struct OutputRecord {
    pub sequence: String,
    pub q: String,
    pub denominators: Vec<String>,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trace: Option<TraceRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verdict: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TraceRecord {
    pub prefix: Vec<String>,
    pub residual: String,
    pub min_elem: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub remainder: Option<RemainderRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RemainderRecord {
    pub multiplier: String,
    pub x: String,
    pub y: String,
    pub k: String,
    pub a: String,
    pub b: String,
    pub a_exponents: Vec<String>,
    pub b_exponents: Vec<String>,
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(T::to_string).collect()
}

impl TraceRecord {
    pub fn new(t: &ExpansionTrace) -> Self {
        TraceRecord {
            prefix: strings(&t.prefix),
            residual: t.residual.to_string(),
            min_elem: t.min_elem.to_string(),
            remainder: t.remainder.as_ref().map(|r| RemainderRecord {
                multiplier: r.multiplier.to_string(),
                x: r.x.to_string(),
                y: r.y.to_string(),
                k: r.split.k.to_string(),
                a: r.split.quotient.to_string(),
                b: r.split.remainder.to_string(),
                a_exponents: strings(&r.split.a_exponents),
                b_exponents: strings(&r.split.b_exponents),
            }),
        }
    }

    /// Plain-text rendering, one field per line.
    pub fn lines(&self) -> Vec<String> {
        let mut out = vec![
            format!("prefix: {}", self.prefix.join(" ")),
            format!("residual: {}", self.residual),
            format!("m: {}", self.min_elem),
        ];
        if let Some(r) = &self.remainder {
            out.push(format!("multiplier: {}", r.multiplier));
            out.push(format!("x/y: {}/{}", r.x, r.y));
            out.push(format!("k: {}", r.k));
            out.push(format!("a: {} (bits {})", r.a, r.a_exponents.join(" ")));
            out.push(format!("b: {} (bits {})", r.b, r.b_exponents.join(" ")));
        }
        out
    }
}

pub fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Feasible => "feasible",
        Verdict::Infeasible => "infeasible",
        Verdict::Unknown => "unknown",
    }
}

pub fn feasibility_record(sequence: &str, q: &Rational, v: &FeasibilityVerdict) -> OutputRecord {
    OutputRecord {
        sequence: sequence.to_string(),
        q: q.to_string(),
        denominators: Vec::new(),
        verified: false,
        trace: None,
        verdict: Some(verdict_name(v.verdict).to_string()),
        certificate: v.certificate.as_ref().map(Rational::to_string),
    }
}

pub fn denominators(ds: &[BigUint]) -> Vec<String> {
    strings(ds)
}
