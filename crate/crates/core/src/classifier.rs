//! Per-2-factor structure: A/B vertex types, edge types, `V_D(x)`, `I_xy`,
//! bad vertices, and the rotation closure `U_x^inf` with its spanning paths.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cycle::TwoFactor;
use crate::error::{ClassifyError, CycleError};
use crate::graph::{Graph, VertexSet};
use crate::path::{rotate_path, OrientedPath};

/// `x ~ u` and `x ~ u_next` where `u_next` is the successor of `u` on
/// `cycle`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AWitness {
    pub cycle: usize,
    pub u: usize,
    pub u_next: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EdgeType {
    A,
    B,
    AB,
}

/// A/B typing of one 2-factor.
#[derive(Clone, Debug)]
pub struct TypingContext<'a> {
    g: &'a Graph,
    factor: &'a TwoFactor,
    cycle_sets: Vec<VertexSet>,
    witness: Vec<Option<AWitness>>,
    a: VertexSet,
    b: VertexSet,
    edge_types: Vec<Vec<EdgeType>>,
    alternating: Vec<bool>,
}

/// Types every vertex and cycle edge of `f`. The A-type witness is the
/// lowest cycle id, then the lowest `u`.
pub fn classify<'a>(g: &'a Graph, f: &'a TwoFactor) -> Result<TypingContext<'a>, ClassifyError> {
    if f.len() < 2 {
        return Err(ClassifyError::SingleCycle);
    }
    let cycle_sets: Vec<VertexSet> = f.cycles().iter().map(|c| c.vertex_set()).collect();
    let mut witness = vec![None; g.n()];
    let mut a = VertexSet::with_capacity(g.n());
    for (x, slot) in witness.iter_mut().enumerate() {
        let own = f.cycle_of(x);
        'cycles: for (d, cyc) in f.cycles().iter().enumerate() {
            if d == own {
                continue;
            }
            for u in g.neighbors(x).intersection(&cycle_sets[d]).iter() {
                let next = cyc.succ(u);
                if g.has_edge(x, next) {
                    *slot = Some(AWitness {
                        cycle: d,
                        u,
                        u_next: next,
                    });
                    a.insert(x);
                    break 'cycles;
                }
            }
        }
    }
    let b = g.vertices().difference(&a);
    let mut edge_types = Vec::with_capacity(f.len());
    let mut alternating = Vec::with_capacity(f.len());
    for cyc in f.cycles() {
        let types: Vec<EdgeType> = cyc
            .edges()
            .map(|(x, y)| match (a.contains(x), a.contains(y)) {
                (true, true) => EdgeType::A,
                (false, false) => EdgeType::B,
                _ => EdgeType::AB,
            })
            .collect();
        alternating.push(types.iter().all(|&t| t == EdgeType::AB));
        edge_types.push(types);
    }
    Ok(TypingContext {
        g,
        factor: f,
        cycle_sets,
        witness,
        a,
        b,
        edge_types,
        alternating,
    })
}

impl<'a> TypingContext<'a> {
    pub fn graph(&self) -> &'a Graph {
        self.g
    }

    pub fn factor(&self) -> &'a TwoFactor {
        self.factor
    }

    pub fn a_vertices(&self) -> &VertexSet {
        &self.a
    }

    pub fn b_vertices(&self) -> &VertexSet {
        &self.b
    }

    pub fn is_a(&self, v: usize) -> bool {
        self.a.contains(v)
    }

    pub fn witness(&self, v: usize) -> Option<AWitness> {
        self.witness[v]
    }

    pub fn cycle_set(&self, c: usize) -> &VertexSet {
        &self.cycle_sets[c]
    }

    /// Type of the edge from the `i`-th vertex of cycle `c` to its successor.
    pub fn edge_type(&self, c: usize, i: usize) -> EdgeType {
        self.edge_types[c][i]
    }

    pub fn edge_types(&self, c: usize) -> &[EdgeType] {
        &self.edge_types[c]
    }

    pub fn is_alternating(&self, c: usize) -> bool {
        self.alternating[c]
    }

    /// Ids of cycles containing a B-type edge, ascending.
    pub fn b_edge_cycles(&self) -> Vec<usize> {
        (0..self.factor.len())
            .filter(|&c| self.edge_types[c].contains(&EdgeType::B))
            .collect()
    }

    /// The unique cycle with a B-type edge, when there is exactly one.
    pub fn designated(&self) -> Option<usize> {
        match self.b_edge_cycles().as_slice() {
            [c] => Some(*c),
            _ => None,
        }
    }

    /// `A^+`: successors of A-type vertices on their own cycles.
    pub fn a_plus(&self) -> VertexSet {
        self.a.iter().map(|x| self.factor.succ(x)).collect()
    }

    /// B-type vertices of cycle `d`.
    pub fn b_on(&self, d: usize) -> VertexSet {
        self.b.intersection(&self.cycle_sets[d])
    }

    /// `V_D(x)`.
    pub fn profile(&self, x: usize, d: usize) -> VertexSet {
        self.g.neighbors(x).intersection(&self.cycle_sets[d])
    }

    /// `x` adjacent to two consecutive vertices of `d`.
    pub fn is_a_type_wrt(&self, x: usize, d: usize) -> bool {
        if self.factor.cycle_of(x) == d {
            return false;
        }
        let cyc = self.factor.cycle(d);
        self.profile(x, d)
            .iter()
            .any(|u| self.g.has_edge(x, cyc.succ(u)))
    }

    /// `V_D(x) = B ∩ V(D)` for a cycle `d` other than `x`'s, with
    /// `B ∩ V(D)` non-empty.
    pub fn is_bad_wrt(&self, x: usize, d: usize) -> bool {
        if self.factor.cycle_of(x) == d {
            return false;
        }
        let bd = self.b_on(d);
        !bd.is_empty() && self.profile(x, d) == bd
    }

    /// Cycles `D` such that `x` is bad or A-type with respect to `D`.
    pub fn base_cycles(&self, x: usize) -> Vec<usize> {
        (0..self.factor.len())
            .filter(|&d| self.is_bad_wrt(x, d) || self.is_a_type_wrt(x, d))
            .collect()
    }
}

/// `V_D(x) = N(x) ∩ V(D)`.
pub fn neighbor_profile(g: &Graph, f: &TwoFactor, x: usize, d: usize) -> VertexSet {
    g.neighbors(x).intersection(&f.cycle(d).vertex_set())
}

/// `I_xy`: vertices off cycle `c` adjacent to neither `x` nor `y`.
pub fn i_xy(
    g: &Graph,
    f: &TwoFactor,
    c: usize,
    x: usize,
    y: usize,
) -> Result<VertexSet, ClassifyError> {
    let cyc = f.cycle(c);
    if !cyc.is_cycle_edge(x, y) {
        return Err(ClassifyError::NotCycleEdge(x, y));
    }
    Ok(g.vertices()
        .difference(&cyc.vertex_set())
        .difference(g.neighbors(x))
        .difference(g.neighbors(y)))
}

/// `V_bad`: the vertices of `c` that are A-type or bad with respect to some
/// other cycle.
pub fn bad_vertices(ctx: &TypingContext<'_>, c: usize) -> VertexSet {
    ctx.factor()
        .cycle(c)
        .order()
        .iter()
        .copied()
        .filter(|&x| ctx.is_a(x) || (0..ctx.factor().len()).any(|d| d != c && ctx.is_bad_wrt(x, d)))
        .collect()
}

/// How a closure member was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Rotation {
    pub from: usize,
    pub pivot: usize,
}

/// `U_x^0, U_x^1, ...` with one stored spanning path of `C` per member.
#[derive(Clone, Debug, Serialize)]
pub struct RotationClosure {
    pub cycle: usize,
    pub base: usize,
    pub layers: Vec<Vec<usize>>,
    paths: BTreeMap<usize, OrientedPath>,
    via: BTreeMap<usize, Rotation>,
}

impl RotationClosure {
    pub fn members(&self) -> VertexSet {
        self.paths.keys().copied().collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.paths.contains_key(&v)
    }

    /// The stored path from member `v` to the base.
    pub fn path(&self, v: usize) -> Option<&OrientedPath> {
        self.paths.get(&v)
    }

    pub fn layer_of(&self, v: usize) -> Option<usize> {
        self.layers.iter().position(|l| l.contains(&v))
    }

    pub fn rotation(&self, v: usize) -> Option<Rotation> {
        self.via.get(&v).copied()
    }
}

/// Breadth-first rotation closure from the path `x^+ ->C x`. A member `v`
/// with path `P` admits pivot `y` when `y` is interior to `P`, `v ~ y` and
/// `y` is not in `v_bad`; the predecessor of `y` on `P` joins with the
/// rotated path. First discovery wins.
pub fn rotation_closure(
    g: &Graph,
    f: &TwoFactor,
    c: usize,
    x: usize,
    v_bad: &VertexSet,
) -> RotationClosure {
    let cyc = f.cycle(c);
    let start = cyc.succ(x);
    let base_path = OrientedPath::new(g, cyc.arc(start, x, true).expect("x on c"))
        .expect("cycle arcs are paths");
    let mut paths = BTreeMap::new();
    let mut via = BTreeMap::new();
    paths.insert(start, base_path);
    let mut layers = vec![vec![start]];
    loop {
        let mut next = Vec::new();
        for &v in layers.last().expect("non-empty") {
            let path = paths[&v].clone();
            let k = path.len();
            for i in 1..k - 1 {
                let pivot = path.order()[i];
                if !g.has_edge(v, pivot) || v_bad.contains(pivot) {
                    continue;
                }
                let member = path.order()[i - 1];
                if paths.contains_key(&member) {
                    continue;
                }
                let rotated = rotate_path(g, &path, pivot).expect("admissible pivot");
                paths.insert(member, rotated);
                via.insert(member, Rotation { from: v, pivot });
                next.push(member);
            }
        }
        if next.is_empty() {
            break;
        }
        layers.push(next);
    }
    RotationClosure {
        cycle: c,
        base: x,
        layers,
        paths,
        via,
    }
}

/// Replays every rotation of `closure` and checks the layer invariants.
pub fn verify_closure(
    g: &Graph,
    f: &TwoFactor,
    closure: &RotationClosure,
    v_bad: &VertexSet,
) -> Result<(), String> {
    let cyc = f.cycle(closure.cycle);
    let x = closure.base;
    let span = cyc.vertex_set();
    if closure.layers.first() != Some(&vec![cyc.succ(x)]) {
        return Err("first layer must be {x^+}".into());
    }
    let mut seen = VertexSet::new();
    for (i, layer) in closure.layers.iter().enumerate() {
        for &v in layer {
            if !seen.insert(v) {
                return Err(format!("{v} appears in two layers"));
            }
            let path = closure.path(v).ok_or(format!("{v} has no path"))?;
            OrientedPath::new(g, path.order().to_vec()).map_err(|e: CycleError| e.to_string())?;
            if path.start() != v || path.end() != x {
                return Err(format!("path of {v} must run from {v} to {x}"));
            }
            let covered: VertexSet = path.order().iter().copied().collect();
            if covered != span || path.len() != cyc.len() {
                return Err(format!("path of {v} does not span the cycle"));
            }
            if i == 0 {
                continue;
            }
            let rot = closure
                .rotation(v)
                .ok_or(format!("{v} has no rotation record"))?;
            if !closure.layers[i - 1].contains(&rot.from) {
                return Err(format!("{v} was not reached from the previous layer"));
            }
            if v_bad.contains(rot.pivot) || !g.has_edge(rot.from, rot.pivot) {
                return Err(format!("pivot {} is not admissible", rot.pivot));
            }
            let parent = closure.path(rot.from).expect("earlier member");
            if parent.prev(rot.pivot) != Some(v) {
                return Err(format!("{v} is not the predecessor of pivot {}", rot.pivot));
            }
            let replay = rotate_path(g, parent, rot.pivot).map_err(|e| e.to_string())?;
            if &replay != path {
                return Err(format!("replayed rotation for {v} differs"));
            }
        }
    }
    Ok(())
}

/// `U^inf`: the union of the closures of every vertex of `V_bad`.
pub fn closure_union(closures: &[RotationClosure]) -> VertexSet {
    let mut out = VertexSet::new();
    for c in closures {
        out.union_with(&c.members());
    }
    out
}
