use super::{
    bw, fw, merged, others, path_fw, pt, unavailable, union_of, views, witnesses, CheckOrMerge,
    Tries,
};
use crate::classifier::{bad_vertices, rotation_closure, TypingContext};
use crate::cycle::TwoFactor;
use crate::error::MergeError;
use crate::graph::Graph;

/// `x ~ u` across cycles forces `x^+-` to miss `u^+-`; otherwise
/// `x u <-D u^+ x^+ ->C x` joins the two cycles.
pub fn rule_nonadjacency(g: &Graph, f: &TwoFactor) -> CheckOrMerge {
    let mut tries = Tries::new(g);
    for x in 0..g.n() {
        let cx = f.cycle_of(x);
        for u in g.neighbors(x).iter() {
            let du = f.cycle_of(u);
            if du == cx {
                continue;
            }
            for view in views(f, &[cx, du], &[cx, du]) {
                let (c, d) = (view.get(cx), view.get(du));
                let (xp, up) = (c.succ(x), d.succ(u));
                if !g.has_edge(xp, up) {
                    continue;
                }
                let walk = vec![pt(x), bw(d, u, up), fw(c, xp, x)];
                if let Some(out) = tries.cover(&[walk], &union_of(f, &[cx, du])) {
                    let case = format!(
                        "x{}~u{}",
                        if c.succ(x) == f.succ(x) { "+" } else { "-" },
                        if d.succ(u) == f.succ(u) { "+" } else { "-" }
                    );
                    return merged(
                        f,
                        &[cx, du],
                        out,
                        "nonadjacency",
                        case,
                        &[("x", x), ("u", u), ("x+", xp), ("u+", up)],
                    );
                }
            }
        }
    }
    CheckOrMerge::PropertyHolds
}

/// No cycle edge joins two A-type vertices.
pub fn rule_a_type_edge(
    g: &Graph,
    f: &TwoFactor,
    ctx: &TypingContext<'_>,
) -> Result<CheckOrMerge, MergeError> {
    for cid in 0..f.len() {
        for (a, b) in f.cycle(cid).edges() {
            if !(ctx.is_a(a) && ctx.is_a(b)) {
                continue;
            }
            let mut tries = Tries::new(g);
            for (x, y) in [(a, b), (b, a)] {
                if let Some(m) = a_type_edge_at(g, f, cid, x, y, &mut tries) {
                    return Ok(m);
                }
            }
            return Err(unavailable(
                g,
                "no-a-type-edge",
                format!("A-type edge {a}-{b}: {}", tries.summary()),
            ));
        }
    }
    Ok(CheckOrMerge::PropertyHolds)
}

fn a_type_edge_at(
    g: &Graph,
    f: &TwoFactor,
    cid: usize,
    x: usize,
    y: usize,
    tries: &mut Tries<'_>,
) -> Option<CheckOrMerge> {
    // orient C so that y = x^+; z = y^+
    let flip_c = f.cycle(cid).succ(x) != y;
    for did in others(f, cid) {
        for qid in others(f, cid) {
            let required = union_of(f, &[cid, did, qid]);
            for view in views(f, &[cid, did, qid], &[did, qid]) {
                let cyc = view.get(cid);
                let c = if flip_c { cyc.reversed() } else { cyc.clone() };
                let (d, q) = (view.get(did), view.get(qid));
                let z = c.succ(y);
                for u in witnesses(g, x, d) {
                    let up = d.succ(u);
                    if !g.has_edge(z, u) {
                        continue;
                    }
                    for v in witnesses(g, y, q) {
                        let vp = q.succ(v);
                        let names = [
                            ("x", x),
                            ("y", y),
                            ("z", z),
                            ("u", u),
                            ("u+", up),
                            ("v", v),
                            ("v+", vp),
                        ];
                        if did == qid {
                            let walk = vec![pt(x), fw(d, up, v), pt(y), fw(d, vp, u), fw(&c, z, x)];
                            if let Some(out) = tries.cover(&[walk], &required) {
                                return Some(merged(
                                    f,
                                    &[cid, did],
                                    out,
                                    "no-a-type-edge",
                                    "D=Q",
                                    &names,
                                ));
                            }
                        } else {
                            let first = vec![pt(x), fw(d, up, u), fw(&c, z, x)];
                            let second = vec![pt(v), pt(y), fw(q, vp, v)];
                            if let Some(out) = tries.cover(&[first, second], &required) {
                                return Some(merged(
                                    f,
                                    &[cid, did, qid],
                                    out,
                                    "no-a-type-edge",
                                    "D!=Q",
                                    &names,
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// `A^+` is independent.
pub fn rule_a_plus_independent(
    g: &Graph,
    f: &TwoFactor,
    ctx: &TypingContext<'_>,
) -> Result<CheckOrMerge, MergeError> {
    let a = ctx.a_vertices().to_vec();
    for (i, &x) in a.iter().enumerate() {
        for &y in &a[i + 1..] {
            if !g.has_edge(f.succ(x), f.succ(y)) {
                continue;
            }
            let mut tries = Tries::new(g);
            for (x, y, swapped) in [(x, y, false), (y, x, true)] {
                if let Some(m) = a_plus_pair(g, f, x, y, swapped, &mut tries) {
                    return Ok(m);
                }
            }
            return Err(unavailable(
                g,
                "a-plus-ind",
                format!("{}~{} in A+: {}", f.succ(x), f.succ(y), tries.summary()),
            ));
        }
    }
    Ok(CheckOrMerge::PropertyHolds)
}

/// `x^+ ~ y^+` with `x` A-type via `uu^+` on Q and `y` via `vv^+` on R.
/// C, D (the cycles of `x`, `y`) keep their orientation since `A^+` is
/// defined by it; Q and R may be reversed when distinct from C and D.
fn a_plus_pair(
    g: &Graph,
    f: &TwoFactor,
    x: usize,
    y: usize,
    swapped: bool,
    tries: &mut Tries<'_>,
) -> Option<CheckOrMerge> {
    let (cid, did) = (f.cycle_of(x), f.cycle_of(y));
    let (xp, yp) = (f.succ(x), f.succ(y));
    let adj = |a: usize, b: usize| g.has_edge(a, b);
    for qid in others(f, cid) {
        for rid in others(f, did) {
            let ids = [cid, did, qid, rid];
            let mut involved = ids.to_vec();
            involved.sort_unstable();
            involved.dedup();
            let required = union_of(f, &involved);
            let flippable: Vec<usize> = [qid, rid]
                .into_iter()
                .filter(|i| *i != cid && *i != did)
                .collect();
            for view in views(f, &ids, &flippable) {
                let (c, d, q, r) = (view.get(cid), view.get(did), view.get(qid), view.get(rid));
                for u in witnesses(g, x, q) {
                    let up = q.succ(u);
                    for v in witnesses(g, y, r) {
                        let vp = r.succ(v);
                        let names = [
                            ("x", x),
                            ("y", y),
                            ("u", u),
                            ("u+", up),
                            ("v", v),
                            ("v+", vp),
                        ];
                        let mut attempts: Vec<(String, Vec<Vec<_>>)> = Vec::new();
                        if cid == did && qid == rid {
                            if adj(xp, v) && adj(yp, up) {
                                attempts.push((
                                    "C=D,Q=R:x+~v,y+~u+".into(),
                                    vec![vec![
                                        pt(x),
                                        bw(q, u, vp),
                                        bw(c, y, xp),
                                        bw(q, v, up),
                                        fw(c, yp, x),
                                    ]],
                                ));
                            }
                            if adj(xp, v) && adj(yp, u) {
                                attempts.push((
                                    "C=D,Q=R:x+~v,y+~u".into(),
                                    vec![vec![
                                        pt(x),
                                        fw(q, up, v),
                                        fw(c, xp, y),
                                        fw(q, vp, u),
                                        fw(c, yp, x),
                                    ]],
                                ));
                            }
                            if adj(xp, vp) && adj(yp, up) {
                                attempts.push((
                                    "C=D,Q=R:x+~v+,y+~u+".into(),
                                    vec![vec![
                                        pt(x),
                                        bw(q, u, vp),
                                        fw(c, xp, y),
                                        bw(q, v, up),
                                        fw(c, yp, x),
                                    ]],
                                ));
                            }
                            if adj(xp, vp) && adj(yp, u) {
                                attempts.push((
                                    "C=D,Q=R:x+~v+,y+~u".into(),
                                    vec![vec![
                                        pt(x),
                                        fw(q, up, v),
                                        bw(c, y, xp),
                                        fw(q, vp, u),
                                        fw(c, yp, x),
                                    ]],
                                ));
                            }
                        } else if cid == did {
                            if adj(u, v) {
                                attempts.push((
                                    "C=D,Q!=R:u~v".into(),
                                    vec![vec![
                                        pt(x),
                                        fw(q, up, u),
                                        bw(r, v, vp),
                                        bw(c, y, xp),
                                        fw(c, yp, x),
                                    ]],
                                ));
                            }
                        } else if qid == rid {
                            if q.is_cycle_edge(up, v) {
                                attempts.push((
                                    "C!=D,Q=R:u+v-on-Q".into(),
                                    vec![vec![pt(x), bw(q, up, v), bw(d, y, yp), fw(c, xp, x)]],
                                ));
                            }
                            if adj(up, v) && !q.is_cycle_edge(up, v) {
                                attempts.push((
                                    "C!=D,Q=R:u+~v".into(),
                                    vec![
                                        vec![pt(x), bw(q, u, vp), bw(d, y, yp), fw(c, xp, x)],
                                        vec![fw(q, up, v), pt(up)],
                                    ],
                                ));
                            }
                            if adj(up, vp) {
                                attempts.push((
                                    "C!=D,Q=R:u+~v+".into(),
                                    vec![vec![
                                        pt(x),
                                        bw(q, u, vp),
                                        fw(q, up, v),
                                        bw(d, y, yp),
                                        fw(c, xp, x),
                                    ]],
                                ));
                            }
                            if adj(u, v) {
                                attempts.push((
                                    "C!=D,Q=R:u~v".into(),
                                    vec![vec![
                                        pt(x),
                                        fw(q, up, v),
                                        bw(q, u, vp),
                                        bw(d, y, yp),
                                        fw(c, xp, x),
                                    ]],
                                ));
                            }
                            if adj(u, vp) {
                                attempts.push((
                                    "C!=D,Q=R:u~v+".into(),
                                    vec![
                                        vec![pt(x), fw(q, up, v), bw(d, y, yp), fw(c, xp, x)],
                                        vec![bw(q, u, vp), pt(u)],
                                    ],
                                ));
                            }
                        } else if qid == did && rid == cid {
                            let upp = d.succ(up);
                            if adj(up, v) {
                                attempts.push((
                                    "C!=D,Q=D,R=C:u+~v".into(),
                                    vec![vec![
                                        pt(x),
                                        bw(d, u, yp),
                                        fw(c, xp, v),
                                        fw(d, up, y),
                                        fw(c, vp, x),
                                    ]],
                                ));
                            }
                            if adj(up, vp) {
                                attempts.push((
                                    "C!=D,Q=D,R=C:u+~v+".into(),
                                    vec![vec![
                                        pt(x),
                                        bw(d, u, yp),
                                        fw(c, xp, v),
                                        bw(d, y, up),
                                        fw(c, vp, x),
                                    ]],
                                ));
                            }
                            if adj(u, vp) {
                                attempts.push((
                                    "C!=D,Q=D,R=C:u~v+".into(),
                                    vec![vec![
                                        pt(x),
                                        fw(d, up, y),
                                        bw(c, v, xp),
                                        fw(d, yp, u),
                                        fw(c, vp, x),
                                    ]],
                                ));
                            }
                            if adj(upp, v) {
                                attempts.push((
                                    "C!=D,Q=D,R=C:u++~v".into(),
                                    vec![vec![
                                        pt(x),
                                        bw(d, up, yp),
                                        fw(c, xp, v),
                                        fw(d, upp, y),
                                        fw(c, vp, x),
                                    ]],
                                ));
                            }
                            if adj(upp, vp) {
                                attempts.push((
                                    "C!=D,Q=D,R=C:u++~v+".into(),
                                    vec![vec![
                                        pt(x),
                                        bw(d, up, yp),
                                        fw(c, xp, v),
                                        bw(d, y, upp),
                                        fw(c, vp, x),
                                    ]],
                                ));
                            }
                        } else if qid == did && rid != cid {
                            let tag = if swapped {
                                "C!=D,R=C,Q-other"
                            } else {
                                "C!=D,Q=D,R-other"
                            };
                            if adj(u, v) {
                                attempts.push((
                                    format!("{tag}:u~v"),
                                    vec![vec![
                                        pt(x),
                                        fw(d, up, y),
                                        fw(r, vp, v),
                                        bw(d, u, yp),
                                        fw(c, xp, x),
                                    ]],
                                ));
                            }
                            if adj(u, vp) {
                                attempts.push((
                                    format!("{tag}:u~v+"),
                                    vec![vec![
                                        pt(x),
                                        fw(d, up, y),
                                        bw(r, v, vp),
                                        bw(d, u, yp),
                                        fw(c, xp, x),
                                    ]],
                                ));
                            }
                            if adj(up, v) {
                                attempts.push((
                                    format!("{tag}:u+~v"),
                                    vec![
                                        vec![pt(x), bw(d, u, yp), fw(c, xp, x)],
                                        vec![fw(d, up, y), fw(r, vp, v), pt(up)],
                                    ],
                                ));
                            }
                            if adj(up, vp) {
                                attempts.push((
                                    format!("{tag}:u+~v+"),
                                    vec![
                                        vec![pt(x), bw(d, u, yp), fw(c, xp, x)],
                                        vec![fw(d, up, y), bw(r, v, vp), pt(up)],
                                    ],
                                ));
                            }
                        } else if qid != did && rid != cid && adj(u, v) {
                            attempts.push((
                                "C!=D,Q!=R,Q!=D,R!=C:u~v".into(),
                                vec![vec![
                                    pt(x),
                                    fw(q, up, u),
                                    bw(r, v, vp),
                                    bw(d, y, yp),
                                    fw(c, xp, x),
                                ]],
                            ));
                        }
                        // the mirror configuration (R = C, Q elsewhere) is
                        // reached with the roles of x and y exchanged
                        for (case, walks) in attempts {
                            if let Some(out) = tries.cover(&walks, &required) {
                                return Some(merged(f, &involved, out, "a-plus-ind", case, &names));
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// On the designated cycle `c`, a B-type edge `xy` with B-neighbours on an
/// alternating cycle D sends them all from one end.
pub fn rule_b_edge_split_neighbors(
    g: &Graph,
    f: &TwoFactor,
    ctx: &TypingContext<'_>,
    c: usize,
) -> Result<CheckOrMerge, MergeError> {
    for (a, b) in f.cycle(c).edges() {
        if ctx.is_a(a) || ctx.is_a(b) {
            continue;
        }
        for did in others(f, c) {
            let (pa, pb) = (ctx.profile(a, did), ctx.profile(b, did));
            if !pa.union(&pb).intersects(&ctx.b_on(did)) || pa.is_empty() || pb.is_empty() {
                continue;
            }
            let mut tries = Tries::new(g);
            for (x, y) in [(a, b), (b, a)] {
                if let Some(m) = split_neighbors_at(g, f, c, did, x, y, &mut tries) {
                    return Ok(m);
                }
            }
            return Err(unavailable(
                g,
                "full-b-neighbors",
                format!(
                    "edge {a}-{b} sees both ends into cycle {did}: {}",
                    tries.summary()
                ),
            ));
        }
    }
    Ok(CheckOrMerge::PropertyHolds)
}

fn split_neighbors_at(
    g: &Graph,
    f: &TwoFactor,
    cid: usize,
    did: usize,
    x: usize,
    y: usize,
    tries: &mut Tries<'_>,
) -> Option<CheckOrMerge> {
    let flip_c = f.cycle(cid).succ(x) != y;
    for view in views(f, &[cid, did], &[did]) {
        let d = view.get(did);
        let c = if flip_c {
            view.get(cid).reversed()
        } else {
            view.get(cid).clone()
        };
        for u in g.neighbors(x).iter().filter(|&u| d.contains(u)) {
            let up = d.succ(u);
            let upp = d.succ(up);
            if !g.has_edge(y, upp) {
                continue;
            }
            for qid in others(f, did) {
                let qviews = if qid == cid {
                    Vec::new()
                } else {
                    views(f, &[qid], &[qid])
                };
                let candidates: Vec<&crate::cycle::OrientedCycle> = if qid == cid {
                    vec![&c]
                } else {
                    qviews.iter().map(|v| v.get(qid)).collect()
                };
                for q in candidates {
                    for v in witnesses(g, up, q) {
                        let vp = q.succ(v);
                        let names = [
                            ("x", x),
                            ("y", y),
                            ("u", u),
                            ("u+", up),
                            ("u++", upp),
                            ("v", v),
                            ("v+", vp),
                        ];
                        if qid == cid {
                            let walk =
                                vec![pt(x), bw(d, u, upp), fw(&c, y, v), pt(up), fw(&c, vp, x)];
                            if let Some(out) = tries.cover(&[walk], &union_of(f, &[cid, did])) {
                                return Some(merged(
                                    f,
                                    &[cid, did],
                                    out,
                                    "full-b-neighbors",
                                    "Q=C",
                                    &names,
                                ));
                            }
                        } else {
                            let first = vec![pt(x), bw(d, u, upp), fw(&c, y, x)];
                            let second = vec![fw(q, vp, v), pt(up), pt(vp)];
                            if let Some(out) =
                                tries.cover(&[first, second], &union_of(f, &[cid, did, qid]))
                            {
                                return Some(merged(
                                    f,
                                    &[cid, did, qid],
                                    out,
                                    "full-b-neighbors",
                                    "Q!=C",
                                    &names,
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// For `x` on the designated cycle bad w.r.t. D, `{x^+} ∪ A^+` is
/// independent.
pub fn rule_bad_successor(
    g: &Graph,
    f: &TwoFactor,
    ctx: &TypingContext<'_>,
    c: usize,
) -> Result<CheckOrMerge, MergeError> {
    let a_plus = ctx.a_plus();
    let mut order = f.cycle(c).order().to_vec();
    order.sort_unstable();
    for x in order {
        let xp = f.succ(x);
        for did in others(f, c).filter(|&d| ctx.is_bad_wrt(x, d)) {
            for w in g.neighbors(xp).intersection(&a_plus).iter() {
                if w == x {
                    continue;
                }
                let mut tries = Tries::new(g);
                if let Some(m) = bad_successor_at(g, f, ctx, c, did, x, w, &mut tries) {
                    return Ok(m);
                }
                return Err(unavailable(
                    g,
                    "v-0-ind-b",
                    format!(
                        "{xp} ~ {w} with {x} bad w.r.t. cycle {did}: {}",
                        tries.summary()
                    ),
                ));
            }
        }
    }
    Ok(CheckOrMerge::PropertyHolds)
}

#[allow(clippy::too_many_arguments)]
fn bad_successor_at(
    g: &Graph,
    f: &TwoFactor,
    ctx: &TypingContext<'_>,
    cid: usize,
    did: usize,
    x: usize,
    w: usize,
    tries: &mut Tries<'_>,
) -> Option<CheckOrMerge> {
    let xp = f.succ(x);
    let qid = f.cycle_of(w);
    let (wm, wp) = (f.pred(w), f.succ(w));
    if qid == did {
        return None;
    }
    let zs: Vec<usize> = ctx
        .a_vertices()
        .intersection(ctx.cycle_set(did))
        .iter()
        .filter(|&z| g.has_edge(w, z))
        .collect();
    for rid in others(f, qid) {
        if rid == did {
            // x^+ w and v v^+ would induce a 2K2
            continue;
        }
        let ids = [cid, did, qid, rid];
        let mut involved = ids.to_vec();
        involved.sort_unstable();
        involved.dedup();
        let required = union_of(f, &involved);
        let flippable: Vec<usize> = [did, rid]
            .into_iter()
            .filter(|&i| i != cid && i != qid)
            .collect();
        for view in views(f, &ids, &flippable) {
            let (c, d, q, r) = (view.get(cid), view.get(did), view.get(qid), view.get(rid));
            for &z in &zs {
                let (zm, zp) = (d.pred(z), d.succ(z));
                for v in witnesses(g, wm, r) {
                    let vp = r.succ(v);
                    let names = [
                        ("x", x),
                        ("x+", xp),
                        ("w", w),
                        ("z", z),
                        ("v", v),
                        ("v+", vp),
                    ];
                    let mut attempts: Vec<(&str, Vec<Vec<_>>)> = Vec::new();
                    if qid != cid && rid == cid {
                        if g.has_edge(wp, v) {
                            attempts.push((
                                "Q!=C,R=C:w+~v",
                                vec![vec![
                                    pt(xp),
                                    pt(w),
                                    fw(d, z, zm),
                                    bw(c, x, vp),
                                    bw(q, wm, wp),
                                    bw(c, v, xp),
                                ]],
                            ));
                        }
                        if g.has_edge(wp, vp) {
                            attempts.push((
                                "Q!=C,R=C:w+~v+",
                                vec![vec![
                                    pt(xp),
                                    pt(w),
                                    fw(d, z, zm),
                                    bw(c, x, vp),
                                    fw(q, wp, wm),
                                    bw(c, v, xp),
                                ]],
                            ));
                        }
                    } else if qid != cid {
                        if g.has_edge(xp, v) {
                            attempts.push((
                                "Q!=C,R-other",
                                vec![vec![
                                    pt(x),
                                    fw(d, zp, z),
                                    fw(q, w, wm),
                                    fw(r, vp, v),
                                    fw(c, xp, x),
                                ]],
                            ));
                        }
                    } else if g.has_edge(xp, v) {
                        attempts.push((
                            "Q=C,R!=D",
                            vec![
                                vec![pt(x), fw(d, zp, z), fw(c, w, x)],
                                vec![pt(xp), bw(r, v, vp), bw(c, wm, xp)],
                            ],
                        ));
                    }
                    for (case, walks) in attempts {
                        if let Some(out) = tries.cover(&walks, &required) {
                            return Some(merged(f, &involved, out, "v-0-ind-b", case, &names));
                        }
                    }
                }
            }
        }
    }
    None
}

/// Rotation-closure members of a bad or A-type `x` on the designated cycle
/// avoid `u^+-` for every `u ∈ B ∩ V(D)` adjacent to `x`; otherwise
/// `v ->P x u <-D u^+ v` joins C and D.
pub fn rule_zig_path(
    g: &Graph,
    f: &TwoFactor,
    ctx: &TypingContext<'_>,
    c: usize,
) -> Result<CheckOrMerge, MergeError> {
    let v_bad = bad_vertices(ctx, c);
    let mut tries = Tries::new(g);
    for x in v_bad.iter() {
        let closure = rotation_closure(g, f, c, x, &v_bad);
        for did in ctx.base_cycles(x) {
            let bx: Vec<usize> = ctx
                .profile(x, did)
                .intersection(ctx.b_vertices())
                .iter()
                .collect();
            for view in views(f, &[did], &[did]) {
                let d = view.get(did);
                for &u in &bx {
                    let up = d.succ(u);
                    for v in closure.members().iter().filter(|&v| g.has_edge(v, up)) {
                        let path = closure.path(v).expect("member path");
                        let walk = vec![path_fw(path, v, x), pt(u), bw(d, u, up), pt(v)];
                        if let Some(out) = tries.cover(&[walk], &union_of(f, &[c, did])) {
                            return Ok(merged(
                                f,
                                &[c, did],
                                out,
                                "zig-path-on-c",
                                "v~u+",
                                &[("x", x), ("v", v), ("u", u), ("u+", up)],
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(CheckOrMerge::PropertyHolds)
}
