//! Check-or-merge rules over a 2-factor.
//!
//! Each rule looks for a configuration that a cycle-minimal 2-factor cannot
//! contain. When it finds one it rebuilds the involved cycles into strictly
//! fewer cycles through [`assemble_cover`], so every emitted merge has been
//! validated against the host graph. [`reduce`] applies the rules to a
//! fixpoint.

mod absorb;
mod rules;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::assembly::{assemble_cover, Direction, Segment};
use crate::classifier::{classify, TypingContext};
use crate::cycle::{OrientedCycle, TwoFactor};
use crate::error::{CycleError, MergeError, Unavailable};
use crate::graph::{Graph, VertexSet};
use crate::path::OrientedPath;
use crate::recognizers::find_induced_2k2;

pub use absorb::{co_absorb, Absorption};
pub use rules::{
    rule_a_plus_independent, rule_a_type_edge, rule_b_edge_split_neighbors, rule_bad_successor,
    rule_nonadjacency, rule_zig_path,
};

/// Rule names, in the order [`next_merge`] tries them.
pub const RULES: [&str; 6] = [
    "nonadjacency",
    "no-a-type-edge",
    "a-plus-ind",
    "full-b-neighbors",
    "v-0-ind-b",
    "zig-path-on-c",
];

/// One applied merge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub claim: String,
    pub case: String,
    pub cycles_before: usize,
    pub cycles_after: usize,
    /// The named vertices instantiating the construction.
    pub vertices: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergeResult {
    /// Ids of the replaced cycles in the input factor, ascending.
    pub replaced: Vec<usize>,
    pub replacement: Vec<OrientedCycle>,
    pub trace: TraceStep,
}

impl MergeResult {
    pub fn apply(&self, g: &Graph, f: &TwoFactor) -> Result<TwoFactor, CycleError> {
        f.replace(g, &self.replaced, self.replacement.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOrMerge {
    PropertyHolds,
    Merge(MergeResult),
}

impl CheckOrMerge {
    pub fn is_merge(&self) -> bool {
        matches!(self, CheckOrMerge::Merge(_))
    }

    pub fn into_merge(self) -> Option<MergeResult> {
        match self {
            CheckOrMerge::Merge(m) => Some(m),
            CheckOrMerge::PropertyHolds => None,
        }
    }
}

/// The outcome of [`reduce`].
#[derive(Clone, Debug)]
pub struct Reduction {
    pub factor: TwoFactor,
    pub trace: Vec<TraceStep>,
    /// Set when a rule saw a violation it could not repair; the reduction
    /// stopped there.
    pub failure: Option<Unavailable>,
}

impl Reduction {
    pub fn is_hamiltonian(&self) -> bool {
        self.factor.len() == 1
    }
}

/// The unique cycle carrying a B-type edge, if exactly one does.
pub fn designated_cycle(ctx: &TypingContext<'_>) -> Option<usize> {
    ctx.designated()
}

/// The first applicable merge in rule order. Rules past the first three run
/// only when exactly one cycle has a B-type edge.
pub fn next_merge(g: &Graph, f: &TwoFactor) -> Result<CheckOrMerge, MergeError> {
    if f.len() < 2 {
        return Ok(CheckOrMerge::PropertyHolds);
    }
    if let m @ CheckOrMerge::Merge(_) = rule_nonadjacency(g, f) {
        return Ok(m);
    }
    let ctx = classify(g, f)?;
    for rule in [rule_a_type_edge, rule_a_plus_independent] {
        if let m @ CheckOrMerge::Merge(_) = rule(g, f, &ctx)? {
            return Ok(m);
        }
    }
    let Some(c) = ctx.designated() else {
        return Ok(CheckOrMerge::PropertyHolds);
    };
    for rule in [
        rule_b_edge_split_neighbors,
        rule_bad_successor,
        rule_zig_path,
    ] {
        if let m @ CheckOrMerge::Merge(_) = rule(g, f, &ctx, c)? {
            return Ok(m);
        }
    }
    Ok(CheckOrMerge::PropertyHolds)
}

/// Merges until one cycle remains or no rule applies. Every step strictly
/// lowers the cycle count, so at most `f.len() - 1` merges happen.
pub fn reduce(g: &Graph, f: TwoFactor) -> Result<Reduction, MergeError> {
    let mut factor = f;
    let mut trace = Vec::new();
    loop {
        match next_merge(g, &factor) {
            Ok(CheckOrMerge::PropertyHolds) => {
                return Ok(Reduction {
                    factor,
                    trace,
                    failure: None,
                })
            }
            Ok(CheckOrMerge::Merge(m)) => {
                factor = m.apply(g, &factor).expect("validated merge");
                trace.push(m.trace);
            }
            Err(MergeError::ConstructionUnavailable(u)) => {
                return Ok(Reduction {
                    factor,
                    trace,
                    failure: Some(u),
                })
            }
            Err(e) => return Err(e),
        }
    }
}

// ---- construction plumbing shared by the rules ----

/// Oriented copies of some cycles of a factor, each possibly reversed.
pub(crate) struct View {
    cycles: Vec<(usize, OrientedCycle)>,
}

impl View {
    pub(crate) fn get(&self, id: usize) -> &OrientedCycle {
        &self
            .cycles
            .iter()
            .find(|(i, _)| *i == id)
            .expect("cycle in view")
            .1
    }
}

/// Every orientation choice of `flippable` (identity first) over the cycles
/// `ids`; cycles not listed as flippable keep the factor's orientation.
pub(crate) fn views(f: &TwoFactor, ids: &[usize], flippable: &[usize]) -> Vec<View> {
    let mut ids = ids.to_vec();
    ids.sort_unstable();
    ids.dedup();
    let mut flip: Vec<usize> = flippable
        .iter()
        .copied()
        .filter(|i| ids.contains(i))
        .collect();
    flip.sort_unstable();
    flip.dedup();
    (0..1u32 << flip.len())
        .map(|mask| View {
            cycles: ids
                .iter()
                .map(|&id| {
                    let c = f.cycle(id);
                    let reversed = flip
                        .iter()
                        .position(|&i| i == id)
                        .is_some_and(|k| mask >> k & 1 == 1);
                    (id, if reversed { c.reversed() } else { c.clone() })
                })
                .collect(),
        })
        .collect()
}

pub(crate) fn union_of(f: &TwoFactor, ids: &[usize]) -> VertexSet {
    let mut out = VertexSet::new();
    for &id in ids {
        out.union_with(&f.cycle(id).vertex_set());
    }
    out
}

/// Vertices `u` on `cyc` with `x ~ u` and `x ~ u^+`, ascending.
pub(crate) fn witnesses(g: &Graph, x: usize, cyc: &OrientedCycle) -> Vec<usize> {
    let mut out: Vec<usize> = g
        .neighbors(x)
        .iter()
        .filter(|&u| cyc.contains(u) && g.has_edge(x, cyc.succ(u)))
        .collect();
    out.sort_unstable();
    out
}

pub(crate) fn others(f: &TwoFactor, id: usize) -> impl Iterator<Item = usize> {
    (0..f.len()).filter(move |&i| i != id)
}

pub(crate) fn pt(v: usize) -> Segment<'static> {
    Segment::Vertex(v)
}

/// `from ->C to`.
pub(crate) fn fw(c: &OrientedCycle, from: usize, to: usize) -> Segment<'_> {
    Segment::CycleArc {
        cycle: c,
        from,
        to,
        dir: Direction::Forward,
    }
}

/// `from <-C to`.
pub(crate) fn bw(c: &OrientedCycle, from: usize, to: usize) -> Segment<'_> {
    Segment::CycleArc {
        cycle: c,
        from,
        to,
        dir: Direction::Backward,
    }
}

pub(crate) fn path_fw(p: &OrientedPath, from: usize, to: usize) -> Segment<'_> {
    Segment::PathArc {
        path: p,
        from,
        to,
        dir: Direction::Forward,
    }
}

/// Counts construction attempts for failure reports.
pub(crate) struct Tries<'g> {
    g: &'g Graph,
    pub(crate) attempts: usize,
    pub(crate) last_error: Option<String>,
}

impl<'g> Tries<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        Tries {
            g,
            attempts: 0,
            last_error: None,
        }
    }

    pub(crate) fn cover(
        &mut self,
        walks: &[Vec<Segment<'_>>],
        required: &VertexSet,
    ) -> Option<Vec<OrientedCycle>> {
        self.attempts += 1;
        match assemble_cover(self.g, walks, required) {
            Ok(cycles) => Some(cycles),
            Err(e) => {
                self.last_error = Some(e.to_string());
                None
            }
        }
    }

    pub(crate) fn summary(&self) -> String {
        match &self.last_error {
            Some(e) => format!("{} attempts, last: {e}", self.attempts),
            None => format!("{} attempts", self.attempts),
        }
    }
}

pub(crate) fn merged(
    f: &TwoFactor,
    replaced: &[usize],
    replacement: Vec<OrientedCycle>,
    claim: &str,
    case: impl Into<String>,
    vertices: &[(&str, usize)],
) -> CheckOrMerge {
    let mut replaced = replaced.to_vec();
    replaced.sort_unstable();
    replaced.dedup();
    let cycles_after = f.len() - replaced.len() + replacement.len();
    CheckOrMerge::Merge(MergeResult {
        trace: TraceStep {
            claim: claim.to_string(),
            case: case.into(),
            cycles_before: f.len(),
            cycles_after,
            vertices: vertices.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        },
        replaced,
        replacement,
    })
}

/// A violation without a validated construction. An induced 2K2 in `g`
/// explains it; otherwise it is reported as unavailable.
pub(crate) fn unavailable(g: &Graph, claim: &str, detail: String) -> MergeError {
    match find_induced_2k2(g) {
        Some(w) => MergeError::InducedTwoK2Found(w),
        None => MergeError::ConstructionUnavailable(Unavailable {
            claim: claim.to_string(),
            detail,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factor(g: &Graph, cycles: &[&[usize]]) -> TwoFactor {
        let cs = cycles
            .iter()
            .map(|c| OrientedCycle::new(g, c.to_vec()).unwrap())
            .collect();
        TwoFactor::new(g, cs).unwrap()
    }

    // triangles a b c = 0 1 2 and d e f = 3 4 5
    fn triangles(extra: &[(usize, usize)]) -> (Graph, TwoFactor) {
        let mut edges = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)];
        edges.extend_from_slice(extra);
        let g = Graph::from_edges(6, &edges).unwrap();
        let f = factor(&g, &[&[0, 1, 2], &[3, 4, 5]]);
        (g, f)
    }

    #[test]
    fn two_cross_edges_join_triangles() {
        let (g, f) = triangles(&[(0, 3), (1, 4)]);
        let m = rule_nonadjacency(&g, &f).into_merge().unwrap();
        assert_eq!(m.replaced, vec![0, 1]);
        assert_eq!(m.replacement.len(), 1);
        // a d f e b c
        assert_eq!(m.replacement[0].order(), &[0, 3, 5, 4, 1, 2]);
        assert_eq!(m.trace.claim, "nonadjacency");
        assert_eq!((m.trace.cycles_before, m.trace.cycles_after), (2, 1));
    }

    #[test]
    fn single_cross_edge_holds() {
        let (g, f) = triangles(&[(0, 3)]);
        assert_eq!(rule_nonadjacency(&g, &f), CheckOrMerge::PropertyHolds);
    }

    #[test]
    fn disjoint_cycles_hold() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 1) % 5));
        }
        let g = Graph::from_edges(10, &edges).unwrap();
        let f = factor(&g, &[&[0, 1, 2, 3, 4], &[5, 6, 7, 8, 9]]);
        assert_eq!(rule_nonadjacency(&g, &f), CheckOrMerge::PropertyHolds);
        let ctx = classify(&g, &f).unwrap();
        assert_eq!(
            rule_a_type_edge(&g, &f, &ctx).unwrap(),
            CheckOrMerge::PropertyHolds
        );
        assert_eq!(
            rule_a_plus_independent(&g, &f, &ctx).unwrap(),
            CheckOrMerge::PropertyHolds
        );
    }

    #[test]
    fn reduce_single_cycle_is_identity() {
        let g = Graph::cycle(5);
        let f = factor(&g, &[&[0, 1, 2, 3, 4]]);
        let r = reduce(&g, f.clone()).unwrap();
        assert_eq!(r.factor, f);
        assert!(r.trace.is_empty());
        assert!(r.is_hamiltonian());
    }

    #[test]
    fn reduce_two_triangles_in_one_step() {
        let (g, f) = triangles(&[(0, 3), (1, 4)]);
        let r = reduce(&g, f).unwrap();
        assert!(r.is_hamiltonian());
        assert_eq!(r.trace.len(), 1);
        assert!(r.failure.is_none());
    }

    #[test]
    fn views_enumerate_flips_identity_first() {
        let (_, f) = triangles(&[]);
        let vs = views(&f, &[1, 0], &[1]);
        assert_eq!(vs.len(), 2);
        assert_eq!(vs[0].get(1).order(), &[3, 4, 5]);
        assert_eq!(vs[1].get(1).order(), f.cycle(1).reversed().order());
        assert_eq!(vs[1].get(0).order(), &[0, 1, 2]);
    }

    #[test]
    fn unavailable_prefers_induced_2k2() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            unavailable(&g, "x", String::new()),
            MergeError::InducedTwoK2Found(_)
        ));
        let k4 = Graph::complete(4);
        assert!(matches!(
            unavailable(&k4, "x", String::new()),
            MergeError::ConstructionUnavailable(_)
        ));
    }
}
