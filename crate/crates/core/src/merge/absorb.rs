use serde::Serialize;

use super::{bw, fw, path_fw, pt, union_of, views, Tries};
use crate::classifier::{bad_vertices, RotationClosure, TypingContext};
use crate::cycle::{OrientedCycle, TwoFactor};
use crate::error::{MergeError, Unavailable};
use crate::graph::{Graph, VertexSet};

/// A cycle through `V(C) ∪ V(D) - {v}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Absorption {
    pub cycle: OrientedCycle,
    /// The cycle D joined with C.
    pub joined: usize,
    pub removed: usize,
    pub case: String,
}

/// Builds a cycle covering `V(C) ∪ V(D) - {v}` for a member `v` of the
/// closure of `x` (C is the closure's cycle). Neighbours of `x` on C use
/// the direct constructions; deeper members splice the stored path `v .. x`
/// into D. When the path successor of `v` lies in `V_bad`, the direct
/// construction is retried from there.
pub fn co_absorb(
    g: &Graph,
    f: &TwoFactor,
    ctx: &TypingContext<'_>,
    closure: &RotationClosure,
    d: usize,
    v: usize,
) -> Result<Absorption, MergeError> {
    let c = closure.cycle;
    let x = closure.base;
    let mut tries = Tries::new(g);
    let cyc = f.cycle(c);
    if v == cyc.succ(x) || v == cyc.pred(x) {
        if let Some(a) = beside_base(g, f, c, d, x, v, &mut tries) {
            return Ok(a);
        }
    }
    if let Some(path) = closure.path(v) {
        if let Some(y) = path.next(v) {
            let required = without(union_of(f, &[c, d]), v);
            for view in views(f, &[d], &[d]) {
                let dv = view.get(d);
                for u in ctx.profile(x, d).iter() {
                    let up = dv.succ(u);
                    if !g.has_edge(y, up) {
                        continue;
                    }
                    let walk = vec![path_fw(path, y, x), pt(u), bw(dv, u, up), pt(y)];
                    if let Some(cycle) = tries.cover(&[walk], &required) {
                        return Ok(Absorption {
                            cycle: cycle.into_iter().next().expect("one cycle"),
                            joined: d,
                            removed: v,
                            case: "path".into(),
                        });
                    }
                }
            }
        }
    }
    let v_bad = bad_vertices(ctx, c);
    for b in [cyc.succ(v), cyc.pred(v)] {
        if !v_bad.contains(b) {
            continue;
        }
        let mut bases = ctx.base_cycles(b);
        bases.sort_by_key(|&e| e != d);
        for e in bases {
            if let Some(a) = beside_base(g, f, c, e, b, v, &mut tries) {
                return Ok(a);
            }
        }
    }
    Err(MergeError::ConstructionUnavailable(Unavailable {
        claim: "co-absorbable".into(),
        detail: format!(
            "{v} in the closure of {x} with cycle {d}: {}",
            tries.summary()
        ),
    }))
}

fn without(mut s: VertexSet, v: usize) -> VertexSet {
    s.remove(v);
    s
}

/// `v` is a C-neighbour of `x`; orient C so that `v = x^+`.
fn beside_base(
    g: &Graph,
    f: &TwoFactor,
    c: usize,
    d: usize,
    x: usize,
    v: usize,
    tries: &mut Tries<'_>,
) -> Option<Absorption> {
    if d == c {
        return None;
    }
    let cv = if f.cycle(c).succ(x) == v {
        f.cycle(c).clone()
    } else {
        f.cycle(c).reversed()
    };
    let xpp = cv.succ(v);
    let required = without(union_of(f, &[c, d]), v);
    let done = |cycle: Vec<OrientedCycle>, case: &str| Absorption {
        cycle: cycle.into_iter().next().expect("one cycle"),
        joined: d,
        removed: v,
        case: case.into(),
    };
    for view in views(f, &[d], &[d]) {
        let dv = view.get(d);
        for u in g.neighbors(x).iter().filter(|&u| dv.contains(u)) {
            let up = dv.succ(u);
            let upp = dv.succ(up);
            if g.has_edge(xpp, up) {
                let walk = vec![pt(x), bw(dv, u, up), fw(&cv, xpp, x)];
                if let Some(out) = tries.cover(&[walk], &required) {
                    return Some(done(out, "x++~u+"));
                }
            }
            if g.has_edge(xpp, u) && g.has_edge(x, up) {
                let walk = vec![pt(x), fw(dv, up, u), fw(&cv, xpp, x)];
                if let Some(out) = tries.cover(&[walk], &required) {
                    return Some(done(out, "x++~u,a-type"));
                }
            }
            if g.has_edge(xpp, u) && g.has_edge(x, upp) {
                for (w, wp) in cv.edges() {
                    if !(g.has_edge(up, w) && g.has_edge(up, wp))
                        || [w, wp].iter().any(|&t| t == x || t == v)
                    {
                        continue;
                    }
                    let walk = vec![
                        pt(x),
                        fw(dv, upp, u),
                        fw(&cv, xpp, w),
                        pt(up),
                        fw(&cv, wp, x),
                    ];
                    if let Some(out) = tries.cover(&[walk], &required) {
                        return Some(done(out, "x++~u,bad"));
                    }
                }
            }
        }
    }
    None
}
