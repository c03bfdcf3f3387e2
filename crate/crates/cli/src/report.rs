use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use tough2k2::recognizers::{toughness_exact, Toughness};
use tough2k2::solver::{Certificate, Outcome};
use tough2k2::{Graph, Rational};

/// One solved input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub variant: String,
    /// `|S| / c(G - S)` of a witness, as `p/q`.
    pub ratio: Option<String>,
    pub merges: usize,
    /// Exact toughness when `n` is within `--max-n`.
    pub toughness: Option<String>,
    /// Whether the input is `t`-tough, when the toughness is known.
    pub t_tough: Option<bool>,
}

impl Record {
    pub fn new(id: String, g: &Graph, cert: &Certificate, t: &Rational, max_n: usize) -> Self {
        let tough = (g.n() <= max_n)
            .then(|| toughness_exact(g).ok())
            .flatten()
            .map(|r| r.value);
        Record {
            id,
            n: g.n(),
            m: g.m(),
            variant: cert.variant().to_string(),
            ratio: match &cert.outcome {
                Outcome::ToughnessWitness(w) => Some(w.ratio.to_string()),
                _ => None,
            },
            merges: cert.trace.len(),
            t_tough: tough.as_ref().map(|v| v.at_least(t)),
            toughness: tough.as_ref().map(Toughness::to_string),
        }
    }
}

/// Per-input records plus outcome counts. Wall-clock timings are kept out
/// so that reruns produce identical reports.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub threshold: String,
    pub records: Vec<Record>,
    pub counts: BTreeMap<String, usize>,
    /// Anomalies among inputs verified `t`-tough.
    pub anomalies_on_t_tough: usize,
}

impl RunReport {
    pub fn new(threshold: &Rational, records: Vec<Record>) -> Self {
        let mut counts = BTreeMap::new();
        for r in &records {
            *counts.entry(r.variant.clone()).or_default() += 1;
        }
        let anomalies_on_t_tough = records
            .iter()
            .filter(|r| r.variant == "anomaly" && r.t_tough == Some(true))
            .count();
        RunReport {
            threshold: threshold.to_string(),
            records,
            counts,
            anomalies_on_t_tough,
        }
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "{:<24} {:>4} {:>5} {:<18} {:>7} {:>6} {:>9}",
            "id", "n", "m", "variant", "ratio", "merges", "toughness"
        )
        .unwrap();
        for r in &self.records {
            writeln!(
                out,
                "{:<24} {:>4} {:>5} {:<18} {:>7} {:>6} {:>9}",
                r.id,
                r.n,
                r.m,
                r.variant,
                r.ratio.as_deref().unwrap_or("-"),
                r.merges,
                r.toughness.as_deref().unwrap_or("-"),
            )
            .unwrap();
        }
        writeln!(out, "total {} (t = {})", self.total(), self.threshold).unwrap();
        for (k, v) in &self.counts {
            writeln!(out, "  {k}: {v}").unwrap();
        }
        if self.anomalies_on_t_tough > 0 {
            writeln!(
                out,
                "!!! {} anomalies on inputs verified {}-tough !!!",
                self.anomalies_on_t_tough, self.threshold
            )
            .unwrap();
        }
        out
    }
}
