//! Toughness-violating cutsets read off a stalled 2-factor.
//!
//! Every builder proposes a set `S` and emits it only after recomputing
//! `c(G - S)` from scratch and checking `|S| < t * c(G - S)` exactly.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::classifier::{
    bad_vertices, closure_union, rotation_closure, RotationClosure, TypingContext,
};
use crate::cycle::{OrientedCycle, TwoFactor};
use crate::graph::{component_count, Graph, VertexSet};
use crate::merge::co_absorb;
use crate::recognizers::is_independent;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WitnessRule {
    /// `S = A` when every cycle alternates.
    W1,
    /// `S = V - (I_xy ∪ {x})` for a B-type edge of the smaller of two
    /// B-edge cycles.
    W2,
    /// `S = V - N(v)^+ - {v}` for a high-degree closure member.
    W3,
    /// `S = N(u) ∪ N(v) - {u}` for adjacent closure members.
    W4,
    /// `S = A ∪ V_C(U^inf)`.
    W5,
}

impl fmt::Display for WitnessRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A verified cutset with `|S| / c(G - S) < threshold`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "WitnessJson", try_from = "WitnessJson")]
pub struct ToughnessWitness {
    pub rule: WitnessRule,
    pub s: VertexSet,
    pub components: usize,
    pub ratio: Rational,
    pub threshold: Rational,
}

/// `{num, den}` in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioJson {
    pub num: i64,
    pub den: i64,
}

impl RatioJson {
    pub fn from_rational(r: &Rational) -> Self {
        RatioJson {
            num: r.numer().to_i64().expect("small numerator"),
            den: r.denom().to_i64().expect("small denominator"),
        }
    }

    pub fn to_rational(&self) -> Result<Rational, String> {
        if self.den == 0 {
            return Err("zero denominator".into());
        }
        Ok(Rational::new(
            BigInt::from(self.num),
            BigInt::from(self.den),
        ))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct WitnessJson {
    #[serde(rename = "type")]
    kind: String,
    rule: WitnessRule,
    #[serde(rename = "S")]
    s: Vec<usize>,
    components: usize,
    ratio: RatioJson,
    threshold: RatioJson,
}

impl From<ToughnessWitness> for WitnessJson {
    fn from(w: ToughnessWitness) -> Self {
        WitnessJson {
            kind: "toughness_witness".into(),
            rule: w.rule,
            s: w.s.to_vec(),
            components: w.components,
            ratio: RatioJson::from_rational(&w.ratio),
            threshold: RatioJson::from_rational(&w.threshold),
        }
    }
}

impl TryFrom<WitnessJson> for ToughnessWitness {
    type Error = String;

    fn try_from(j: WitnessJson) -> Result<Self, String> {
        if j.kind != "toughness_witness" {
            return Err(format!("unexpected type {:?}", j.kind));
        }
        Ok(ToughnessWitness {
            rule: j.rule,
            s: j.s.into_iter().collect(),
            components: j.components,
            ratio: j.ratio.to_rational()?,
            threshold: j.threshold.to_rational()?,
        })
    }
}

/// `c(G - s) >= 2` and `|s| < t * c(G - s)`.
pub fn verify_witness(g: &Graph, s: &VertexSet, t: &Rational) -> bool {
    if s.iter().any(|v| v >= g.n()) {
        return false;
    }
    let c = component_count(g, s);
    c >= 2 && Rational::from_integer(s.len().into()) < t * Rational::from_integer(c.into())
}

fn emit(g: &Graph, s: VertexSet, t: &Rational, rule: WitnessRule) -> Option<ToughnessWitness> {
    if !verify_witness(g, &s, t) {
        return None;
    }
    let components = component_count(g, &s);
    Some(ToughnessWitness {
        rule,
        ratio: Rational::new(s.len().into(), components.into()),
        s,
        components,
        threshold: t.clone(),
    })
}

/// W1: every cycle is AB-alternating; `S = A`.
pub fn witness_all_alternating(
    g: &Graph,
    ctx: &TypingContext<'_>,
    t: &Rational,
) -> Option<ToughnessWitness> {
    if !(0..ctx.factor().len()).all(|c| ctx.is_alternating(c)) {
        return None;
    }
    emit(g, ctx.a_vertices().clone(), t, WitnessRule::W1)
}

/// The B-type edge used by W2: on the smallest cycle with a B-type edge
/// (lowest id on ties), the lexicographically first such edge, smaller end
/// first.
pub fn two_b_cycle_edge(ctx: &TypingContext<'_>) -> Option<(usize, usize, usize)> {
    let cycles = ctx.b_edge_cycles();
    if cycles.len() < 2 {
        return None;
    }
    let f = ctx.factor();
    let c = *cycles.iter().min_by_key(|&&c| (f.cycle(c).len(), c))?;
    let (x, y) = f
        .cycle(c)
        .edges()
        .filter(|&(x, y)| !ctx.is_a(x) && !ctx.is_a(y))
        .map(|(x, y)| (x.min(y), x.max(y)))
        .min()?;
    Some((c, x, y))
}

/// W2: two cycles carry B-type edges; `S = V - (I_xy ∪ {x})`.
pub fn witness_two_b_cycles(
    g: &Graph,
    ctx: &TypingContext<'_>,
    t: &Rational,
) -> Option<ToughnessWitness> {
    let (c, x, y) = two_b_cycle_edge(ctx)?;
    let mut keep = crate::classifier::i_xy(g, ctx.factor(), c, x, y).ok()?;
    keep.insert(x);
    emit(g, g.vertices().difference(&keep), t, WitnessRule::W2)
}

/// The closure structure of a stalled factor with designated cycle `c`.
#[derive(Clone, Debug)]
pub struct ClosureData {
    pub cycle: usize,
    pub v_bad: VertexSet,
    pub closures: Vec<RotationClosure>,
    pub u_inf: VertexSet,
}

pub fn closure_data(g: &Graph, ctx: &TypingContext<'_>, c: usize) -> ClosureData {
    let v_bad = bad_vertices(ctx, c);
    let closures: Vec<RotationClosure> = v_bad
        .iter()
        .map(|x| rotation_closure(g, ctx.factor(), c, x, &v_bad))
        .collect();
    let u_inf = closure_union(&closures);
    ClosureData {
        cycle: c,
        v_bad,
        closures,
        u_inf,
    }
}

/// `V_C(U^inf)`: vertices of C adjacent to some closure member.
pub fn closure_neighbourhood(g: &Graph, f: &TwoFactor, data: &ClosureData) -> VertexSet {
    g.neighborhood_of_set(&data.u_inf)
        .intersection(&f.cycle(data.cycle).vertex_set())
}

/// W5: `S = A ∪ V_C(U^inf)`, emitted only when `|V_C(U^inf)| <= 2|U^inf|`.
pub fn witness_final(
    g: &Graph,
    ctx: &TypingContext<'_>,
    data: &ClosureData,
    t: &Rational,
) -> Option<ToughnessWitness> {
    let vc = closure_neighbourhood(g, ctx.factor(), data);
    if vc.len() > 2 * data.u_inf.len() {
        return None;
    }
    emit(g, ctx.a_vertices().union(&vc), t, WitnessRule::W5)
}

/// W3: a closure member `v` with `3 |N(v)| >= n - 1`. C and a base cycle D
/// are rejoined without `v`; successors of `N(v)` on the resulting cycles
/// must be independent and hold no two consecutive neighbours of `v`.
pub fn witness_high_degree(
    g: &Graph,
    ctx: &TypingContext<'_>,
    data: &ClosureData,
    t: &Rational,
) -> Option<ToughnessWitness> {
    let f = ctx.factor();
    let n = g.n();
    for v in data.u_inf.iter() {
        if 3 * g.degree(v) + 1 < n {
            continue;
        }
        for closure in data.closures.iter().filter(|cl| cl.contains(v)) {
            for d in ctx.base_cycles(closure.base) {
                let Ok(abs) = co_absorb(g, f, ctx, closure, d, v) else {
                    continue;
                };
                let mut cycles: Vec<&OrientedCycle> = vec![&abs.cycle];
                cycles.extend(
                    (0..f.len())
                        .filter(|&i| i != data.cycle && i != abs.joined)
                        .map(|i| f.cycle(i)),
                );
                let nbrs = g.neighbors(v);
                let consecutive = cycles.iter().any(|cyc| {
                    cyc.order()
                        .iter()
                        .any(|&w| nbrs.contains(w) && nbrs.contains(cyc.succ(w)))
                });
                if consecutive {
                    continue;
                }
                let succ: VertexSet = nbrs
                    .iter()
                    .map(|w| {
                        let cyc = cycles.iter().find(|c| c.contains(w)).expect("covered");
                        cyc.succ(w)
                    })
                    .collect();
                if !is_independent(g, &succ) {
                    continue;
                }
                let mut keep = succ;
                keep.insert(v);
                if let Some(w) = emit(g, g.vertices().difference(&keep), t, WitnessRule::W3) {
                    return Some(w);
                }
            }
        }
    }
    None
}

/// W4: adjacent closure members `u ~ v`; `S = N(u) ∪ N(v) - {u}`.
pub fn witness_adjacent_closure(
    g: &Graph,
    data: &ClosureData,
    t: &Rational,
) -> Option<ToughnessWitness> {
    let members = data.u_inf.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if !g.has_edge(u, v) {
                continue;
            }
            let mut s = g.neighbors(u).union(g.neighbors(v));
            s.remove(u);
            if let Some(w) = emit(g, s, t, WitnessRule::W4) {
                return Some(w);
            }
        }
    }
    None
}

/// Outcome of one builder in [`find_witness`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessAttempt {
    pub rule: WitnessRule,
    pub outcome: String,
}

/// Tries W1, W2, W5, W3, W4 in that order; the first verified witness wins.
pub fn find_witness(
    g: &Graph,
    ctx: &TypingContext<'_>,
    t: &Rational,
) -> (Option<ToughnessWitness>, Vec<WitnessAttempt>) {
    let mut log = Vec::new();
    let mut note = |rule, outcome: &str| {
        log.push(WitnessAttempt {
            rule,
            outcome: outcome.to_string(),
        })
    };
    let all_alternating = (0..ctx.factor().len()).all(|c| ctx.is_alternating(c));
    if all_alternating {
        match witness_all_alternating(g, ctx, t) {
            Some(w) => return (Some(w), log),
            None => note(WitnessRule::W1, "not verified"),
        }
    } else {
        note(WitnessRule::W1, "precondition unmet");
    }
    if ctx.b_edge_cycles().len() >= 2 {
        match witness_two_b_cycles(g, ctx, t) {
            Some(w) => return (Some(w), log),
            None => note(WitnessRule::W2, "not verified"),
        }
    } else {
        note(WitnessRule::W2, "precondition unmet");
    }
    let Some(c) = ctx.designated() else {
        for rule in [WitnessRule::W5, WitnessRule::W3, WitnessRule::W4] {
            note(rule, "no designated cycle");
        }
        return (None, log);
    };
    let data = closure_data(g, ctx, c);
    let builders: [(WitnessRule, &dyn Fn() -> Option<ToughnessWitness>); 3] = [
        (WitnessRule::W5, &|| witness_final(g, ctx, &data, t)),
        (WitnessRule::W3, &|| witness_high_degree(g, ctx, &data, t)),
        (WitnessRule::W4, &|| witness_adjacent_closure(g, &data, t)),
    ];
    for (rule, build) in builders {
        match build() {
            Some(w) => return (Some(w), log),
            None => note(rule, "not verified"),
        }
    }
    (None, log)
}
