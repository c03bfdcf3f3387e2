//! End-to-end solving and certificate checking.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::classifier::classify;
use crate::cycle::{OrientedCycle, TwoFactor};
use crate::error::{MergeError, SolveError, Unavailable};
use crate::graph::{component_count, Graph, VertexSet};
use crate::merge::{reduce, TraceStep};
use crate::recognizers::find_induced_2k2;
use crate::two_factor::find_two_factor;
use crate::witness::{
    closure_data, find_witness, verify_witness, ToughnessWitness, WitnessAttempt,
};
use crate::Rational;

/// Stated on every certificate: the factor handed to the witness builders
/// is a fixpoint of the merge rules, not a provably cycle-minimal 2-factor.
pub const FACTOR_NOTE: &str =
    "2-factor reduced to a merge-rule fixpoint; global cycle-minimality is not certified";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", content = "data", rename_all = "snake_case")]
pub enum Outcome {
    HamiltonianCycle(OrientedCycle),
    ToughnessWitness(ToughnessWitness),
    NoTwoFactor { reason: String },
    Anomaly(Box<AnomalyDump>),
}

/// Everything known about a stall that yielded no verified witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnomalyDump {
    pub threshold: String,
    pub factor: TwoFactor,
    pub a: Vec<usize>,
    pub b_edge_cycles: Vec<usize>,
    pub designated: Option<usize>,
    pub v_bad: Vec<usize>,
    pub u_inf: Vec<usize>,
    pub witness_attempts: Vec<WitnessAttempt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(flatten)]
    pub outcome: Outcome,
    pub trace: Vec<TraceStep>,
    pub input_hash: String,
    pub factor_note: String,
    /// A rule violation that no construction repaired; reduction stopped
    /// there.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unrepaired: Option<Unavailable>,
}

impl Certificate {
    pub fn variant(&self) -> &'static str {
        match self.outcome {
            Outcome::HamiltonianCycle(_) => "hamiltonian_cycle",
            Outcome::ToughnessWitness(_) => "toughness_witness",
            Outcome::NoTwoFactor { .. } => "no_two_factor",
            Outcome::Anomaly(_) => "anomaly",
        }
    }

    pub fn is_anomaly(&self) -> bool {
        matches!(self.outcome, Outcome::Anomaly(_))
    }
}

/// Decides Hamiltonicity of a 2K2-free graph, or exhibits a cutset showing
/// the graph is not `t`-tough.
pub fn solve(g: &Graph, t: &Rational) -> Result<Certificate, SolveError> {
    if g.n() < 3 {
        return Err(SolveError::TooSmall(g.n()));
    }
    if let Some(w) = find_induced_2k2(g) {
        return Err(SolveError::Not2K2Free(w));
    }
    let certificate = |outcome, trace, unrepaired| Certificate {
        outcome,
        trace,
        input_hash: g.content_hash(),
        factor_note: FACTOR_NOTE.to_string(),
        unrepaired,
    };
    let Some(f) = find_two_factor(g) else {
        return Ok(certificate(
            Outcome::NoTwoFactor {
                reason: "the 2-factor gadget has no perfect matching".into(),
            },
            Vec::new(),
            None,
        ));
    };
    let reduction = match reduce(g, f) {
        Ok(r) => r,
        Err(MergeError::InducedTwoK2Found(w)) => return Err(SolveError::Not2K2Free(w)),
        Err(e) => unreachable!("classification of a factor with several cycles: {e}"),
    };
    if reduction.is_hamiltonian() {
        let cycle = reduction.factor.cycle(0).clone();
        return Ok(certificate(
            Outcome::HamiltonianCycle(cycle),
            reduction.trace,
            reduction.failure,
        ));
    }
    let factor = reduction.factor;
    let ctx = classify(g, &factor).expect("several cycles");
    let (witness, attempts) = find_witness(g, &ctx, t);
    let outcome = match witness {
        Some(w) => Outcome::ToughnessWitness(w),
        None => {
            let (v_bad, u_inf) = match ctx.designated() {
                Some(c) => {
                    let data = closure_data(g, &ctx, c);
                    (data.v_bad.to_vec(), data.u_inf.to_vec())
                }
                None => (Vec::new(), Vec::new()),
            };
            Outcome::Anomaly(Box::new(AnomalyDump {
                threshold: t.to_string(),
                a: ctx.a_vertices().to_vec(),
                b_edge_cycles: ctx.b_edge_cycles(),
                designated: ctx.designated(),
                v_bad,
                u_inf,
                witness_attempts: attempts,
                factor: factor.clone(),
            }))
        }
    };
    Ok(certificate(outcome, reduction.trace, reduction.failure))
}

/// Re-checks a certificate against `g` without trusting the solver.
pub fn check_certificate(g: &Graph, cert: &Certificate) -> Result<(), String> {
    let hash = g.content_hash();
    if cert.input_hash != hash {
        return Err(format!(
            "input hash mismatch: certificate {}, graph {hash}",
            cert.input_hash
        ));
    }
    for (i, step) in cert.trace.iter().enumerate() {
        if step.cycles_after >= step.cycles_before {
            return Err(format!("trace step {i} does not reduce the cycle count"));
        }
    }
    match &cert.outcome {
        Outcome::HamiltonianCycle(c) => {
            if c.len() != g.n() {
                return Err(format!("cycle has {} of {} vertices", c.len(), g.n()));
            }
            OrientedCycle::new(g, c.order().to_vec())
                .map(|_| ())
                .map_err(|e| format!("invalid cycle: {e}"))
        }
        Outcome::ToughnessWitness(w) => {
            if !verify_witness(g, &w.s, &w.threshold) {
                return Err(format!("|S| / c(G - S) is not below {}", w.threshold));
            }
            let c = component_count(g, &w.s);
            if c != w.components {
                return Err(format!("claimed {} components, found {c}", w.components));
            }
            if w.ratio != Rational::new(w.s.len().into(), c.into()) {
                return Err("ratio does not match |S| / c(G - S)".into());
            }
            Ok(())
        }
        Outcome::NoTwoFactor { .. } => match find_two_factor(g) {
            None => Ok(()),
            Some(_) => Err("the graph has a 2-factor".into()),
        },
        Outcome::Anomaly(dump) => dump
            .factor
            .clone()
            .revalidate(g)
            .map(|_| ())
            .map_err(|e| format!("anomaly factor invalid: {e}")),
    }
}

pub fn verify_certificate(g: &Graph, cert: &Certificate) -> bool {
    check_certificate(g, cert).is_ok()
}

/// Graphviz rendering: cycle edges of a Hamiltonian or stalled factor are
/// bold, witness cutset vertices are filled.
pub fn to_dot(g: &Graph, cert: &Certificate) -> String {
    let mut highlighted: Vec<(usize, usize)> = Vec::new();
    let mut cut = VertexSet::new();
    match &cert.outcome {
        Outcome::HamiltonianCycle(c) => highlighted.extend(c.edges()),
        Outcome::Anomaly(d) => d
            .factor
            .cycles()
            .iter()
            .for_each(|c| highlighted.extend(c.edges())),
        Outcome::ToughnessWitness(w) => cut = w.s.clone(),
        Outcome::NoTwoFactor { .. } => {}
    }
    let highlighted: std::collections::BTreeSet<(usize, usize)> = highlighted
        .into_iter()
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    let mut out = String::from("graph G {\n");
    writeln!(out, "  label=\"{}\";", cert.variant()).unwrap();
    for v in 0..g.n() {
        if cut.contains(v) {
            writeln!(out, "  {v} [style=filled, fillcolor=gray];").unwrap();
        } else {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for (u, v) in g.edges() {
        if highlighted.contains(&(u, v)) {
            writeln!(out, "  {u} -- {v} [penwidth=3, color=red];").unwrap();
        } else {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
