//! Structural checks on a stalled 2-factor.
//!
//! When no merge rule applies, the minimality arguments behind the rules
//! imply a number of properties of the factor. [`audit_stalled`] checks them
//! directly against the graph; a violation means the rule set is missing a
//! construction (or a property needs more than a merge fixpoint).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classifier::{classify, i_xy, verify_closure, EdgeType, TypingContext};
use crate::cycle::{OrientedCycle, TwoFactor};
use crate::error::{MergeError, Unavailable};
use crate::graph::{Graph, VertexSet};
use crate::merge::{co_absorb, next_merge, CheckOrMerge};
use crate::recognizers::is_independent;
use crate::witness::{closure_data, closure_neighbourhood, ClosureData};

/// Names of the audited properties, in check order.
pub const CHECKS: [&str; 10] = [
    "i-xy-independent",
    "i-xy-alternating",
    "i-xy-half",
    "v-bad-spaced",
    "v-bad-b-neighbors",
    "closure-replay",
    "closure-avoids-edge",
    "co-absorb-cover",
    "v-c-cycle-neighbor",
    "v-c-bound",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    /// Instances checked, per property.
    pub checked: BTreeMap<String, usize>,
    /// Skipped instances, keyed by `property: reason`.
    pub skipped: BTreeMap<String, usize>,
    pub violations: Vec<Violation>,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    fn check(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        *self.checked.entry(name.to_string()).or_default() += 1;
        if !ok {
            self.violations.push(Violation {
                check: name.to_string(),
                detail: detail(),
            });
        }
    }

    fn skip(&mut self, name: &str, why: &str) {
        *self.skipped.entry(format!("{name}: {why}")).or_default() += 1;
    }

    pub fn merge(&mut self, other: AuditReport) {
        for (k, v) in other.checked {
            *self.checked.entry(k).or_default() += v;
        }
        for (k, v) in other.skipped {
            *self.skipped.entry(k).or_default() += v;
        }
        self.violations.extend(other.violations);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AuditError {
    /// A merge rule still applies (or failed), so the factor is not stalled.
    NotStalled(String),
    SingleCycle,
}

/// Audits `f` if it is a stalled state: at least two cycles and no rule
/// applies.
pub fn audit_stalled(g: &Graph, f: &TwoFactor) -> Result<AuditReport, AuditError> {
    if f.len() < 2 {
        return Err(AuditError::SingleCycle);
    }
    match next_merge(g, f) {
        Ok(CheckOrMerge::PropertyHolds) => {}
        Ok(CheckOrMerge::Merge(m)) => {
            return Err(AuditError::NotStalled(format!("{} applies", m.trace.claim)))
        }
        Err(e) => return Err(AuditError::NotStalled(e.to_string())),
    }
    let ctx = classify(g, f).map_err(|_| AuditError::SingleCycle)?;
    let mut report = AuditReport::default();
    check_i_xy(g, &ctx, &mut report);
    let Some(c) = ctx.designated() else {
        for name in &CHECKS[3..] {
            report.skip(name, "no designated cycle");
        }
        return Ok(report);
    };
    let data = closure_data(g, &ctx, c);
    check_v_bad(g, &ctx, &data, &mut report);
    check_closures(g, &ctx, &data, true, &mut report);
    if is_independent(g, &data.u_inf) {
        check_closure_neighbourhood(g, &ctx, &data, &mut report);
    } else {
        // both bounds rest on the closure union being independent, which
        // adjacent members already refute with a cutset
        report.skip("v-c-cycle-neighbor", "closure union not independent");
        report.skip("v-c-bound", "closure union not independent");
    }
    Ok(report)
}

fn check_i_xy(g: &Graph, ctx: &TypingContext<'_>, report: &mut AuditReport) {
    let f = ctx.factor();
    for c in 0..f.len() {
        let outside = g.n() - f.cycle(c).len();
        for (i, (x, y)) in f.cycle(c).edges().enumerate() {
            let ixy = i_xy(g, f, c, x, y).expect("cycle edge");
            report.check("i-xy-independent", is_independent(g, &ixy), || {
                format!("I_xy for {x}-{y} on cycle {c} is not independent")
            });
            if ctx.edge_type(c, i) != EdgeType::B {
                continue;
            }
            for d in (0..f.len()).filter(|&d| d != c) {
                let bad_edge = f
                    .cycle(d)
                    .edges()
                    .find(|&(u, v)| ixy.contains(u) == ixy.contains(v));
                report.check("i-xy-alternating", bad_edge.is_none(), || {
                    let (u, v) = bad_edge.expect("violation");
                    format!("cycle {d} edge {u}-{v} does not alternate around I_xy of {x}-{y}")
                });
            }
            report.check("i-xy-half", 2 * ixy.len() == outside, || {
                format!(
                    "|I_xy| = {} for {x}-{y} with {outside} vertices off cycle {c}",
                    ixy.len()
                )
            });
        }
    }
}

fn check_v_bad(g: &Graph, ctx: &TypingContext<'_>, data: &ClosureData, report: &mut AuditReport) {
    let f = ctx.factor();
    let cyc = f.cycle(data.cycle);
    for v in data.v_bad.iter() {
        let next = cyc.succ(v);
        report.check("v-bad-spaced", !data.v_bad.contains(next), || {
            format!("{v} and {next} are consecutive in V_bad")
        });
    }
    let b_off: VertexSet = ctx.b_vertices().difference(ctx.cycle_set(data.cycle));
    for v in cyc
        .order()
        .iter()
        .copied()
        .filter(|&v| !data.v_bad.contains(v))
    {
        let hit = g.neighbors(v).intersection(&b_off).first();
        report.check("v-bad-b-neighbors", hit.is_none(), || {
            format!(
                "{v} outside V_bad is adjacent to B-type {}",
                hit.expect("violation")
            )
        });
    }
}

/// Soundness of [`co_absorb`] on any factor with a designated cycle: every
/// absorption it returns covers exactly `V(C) ∪ V(D) - {v}`. Unavailable
/// constructions are not counted, since outside a stalled state the
/// supporting properties need not hold.
pub fn audit_absorptions(g: &Graph, f: &TwoFactor) -> AuditReport {
    let mut report = AuditReport::default();
    let Ok(ctx) = classify(g, f) else {
        return report;
    };
    let Some(c) = ctx.designated() else {
        return report;
    };
    let data = closure_data(g, &ctx, c);
    check_closures(g, &ctx, &data, false, &mut report);
    report
}

fn check_closures(
    g: &Graph,
    ctx: &TypingContext<'_>,
    data: &ClosureData,
    stalled: bool,
    report: &mut AuditReport,
) {
    let f = ctx.factor();
    let required_base = ctx.cycle_set(data.cycle).clone();
    for closure in &data.closures {
        let x = closure.base;
        let replay = verify_closure(g, f, closure, &data.v_bad);
        report.check("closure-replay", replay.is_ok(), || {
            format!("closure of {x}: {}", replay.clone().unwrap_err())
        });
        let members = closure.members();
        for d in ctx.base_cycles(x) {
            let dc = f.cycle(d);
            let avoid_targets = if stalled {
                ctx.profile(x, d).intersection(&ctx.b_on(d))
            } else {
                VertexSet::new()
            };
            for u in avoid_targets.iter() {
                for w in [dc.succ(u), dc.pred(u)] {
                    let hit = members
                        .iter()
                        .find(|&v| g.has_edge(v, u) || g.has_edge(v, w));
                    report.check("closure-avoids-edge", hit.is_none(), || {
                        format!(
                            "closure member {} of {x} is adjacent to {u} or {w} on cycle {d}",
                            hit.expect("violation")
                        )
                    });
                }
            }
            for v in members.iter() {
                match co_absorb(g, f, ctx, closure, d, v) {
                    Ok(a) => {
                        let mut required = required_base.union(&f.cycle(a.joined).vertex_set());
                        required.remove(v);
                        let covered = a.cycle.vertex_set();
                        let valid = covered == required
                            && OrientedCycle::new(g, a.cycle.order().to_vec()).is_ok();
                        report.check("co-absorb-cover", valid, || {
                            format!(
                                "co_absorb({v}, cycle {}) does not cover V(C) ∪ V(D) - {{{v}}}",
                                a.joined
                            )
                        });
                    }
                    Err(MergeError::ConstructionUnavailable(Unavailable { detail, .. })) => {
                        if stalled {
                            report.check("co-absorb-cover", false, || detail);
                        }
                    }
                    Err(e) => report.check("co-absorb-cover", false, || e.to_string()),
                }
            }
        }
    }
}

fn check_closure_neighbourhood(
    g: &Graph,
    ctx: &TypingContext<'_>,
    data: &ClosureData,
    report: &mut AuditReport,
) {
    let cyc = ctx.factor().cycle(data.cycle);
    let vc = closure_neighbourhood(g, ctx.factor(), data);
    for y in vc.iter() {
        let ok = data.u_inf.contains(cyc.succ(y)) || data.u_inf.contains(cyc.pred(y));
        report.check("v-c-cycle-neighbor", ok, || {
            format!("{y} in V_C(U) has no cycle neighbour in U")
        });
    }
    report.check("v-c-bound", vc.len() <= 2 * data.u_inf.len(), || {
        format!(
            "|V_C(U)| = {} exceeds 2|U| = {}",
            vc.len(),
            2 * data.u_inf.len()
        )
    });
}
