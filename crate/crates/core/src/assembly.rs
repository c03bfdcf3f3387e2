//! Cycle assembly from concatenated segments.
//!
//! Every merge construction is written as a closed walk, e.g.
//! `x u <-D u+ x+ ->C x`, and expanded here. The expansion is validated in
//! full against the host graph, so a mistranscribed construction is
//! rejected instead of producing a bogus cycle.

use crate::cycle::OrientedCycle;
use crate::error::CycleError;
use crate::graph::{Graph, VertexSet};
use crate::path::OrientedPath;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Segment<'a> {
    /// A single vertex.
    Vertex(usize),
    /// The edge `u v`: both vertices in order.
    Edge(usize, usize),
    /// `from ->C to` (forward) or `from <-C to` (backward), both ends inclusive.
    CycleArc {
        cycle: &'a OrientedCycle,
        from: usize,
        to: usize,
        dir: Direction,
    },
    /// A portion of a stored path, both ends inclusive.
    PathArc {
        path: &'a OrientedPath,
        from: usize,
        to: usize,
        dir: Direction,
    },
}

impl Segment<'_> {
    fn expand(&self) -> Result<Vec<usize>, CycleError> {
        match *self {
            Segment::Vertex(v) => Ok(vec![v]),
            Segment::Edge(u, v) => Ok(vec![u, v]),
            Segment::CycleArc {
                cycle,
                from,
                to,
                dir,
            } => cycle
                .arc(from, to, dir == Direction::Forward)
                .ok_or_else(|| {
                    CycleError::InvalidAssembly(format!("{from}..{to} is not an arc of {cycle:?}"))
                }),
            Segment::PathArc {
                path,
                from,
                to,
                dir,
            } => path
                .arc(from, to, dir == Direction::Forward)
                .ok_or_else(|| {
                    CycleError::InvalidAssembly(format!("{from}..{to} is not an arc of {path:?}"))
                }),
        }
    }
}

/// Expands a closed walk into its vertex sequence. A segment starting with
/// the vertex the walk currently ends at is joined without repeating it; the
/// walk must return to its first vertex.
pub fn expand_walk(segments: &[Segment<'_>]) -> Result<Vec<usize>, CycleError> {
    let mut walk: Vec<usize> = Vec::new();
    for seg in segments {
        let part = seg.expand()?;
        let skip = usize::from(walk.last().is_some() && walk.last() == part.first());
        walk.extend_from_slice(&part[skip..]);
    }
    if walk.len() < 2 || walk.first() != walk.last() {
        return Err(CycleError::InvalidAssembly(format!(
            "walk {walk:?} is not closed"
        )));
    }
    walk.pop();
    Ok(walk)
}

/// Expands `segments` and validates the result as a cycle of `g` whose
/// vertex set is exactly `required`.
pub fn assemble_cycle(
    g: &Graph,
    segments: &[Segment<'_>],
    required: &VertexSet,
) -> Result<OrientedCycle, CycleError> {
    let order = expand_walk(segments)?;
    let cycle = OrientedCycle::new(g, order.clone())
        .map_err(|e| CycleError::InvalidAssembly(format!("{order:?}: {e}")))?;
    let got = cycle.vertex_set();
    if &got != required {
        return Err(CycleError::InvalidAssembly(format!(
            "covers {got:?}, expected {required:?}"
        )));
    }
    Ok(cycle)
}

/// Assembles several closed walks whose disjoint union must be `required`.
pub fn assemble_cover(
    g: &Graph,
    walks: &[Vec<Segment<'_>>],
    required: &VertexSet,
) -> Result<Vec<OrientedCycle>, CycleError> {
    let mut covered = VertexSet::new();
    let mut out = Vec::with_capacity(walks.len());
    for walk in walks {
        let order = expand_walk(walk)?;
        let cycle = OrientedCycle::new(g, order.clone())
            .map_err(|e| CycleError::InvalidAssembly(format!("{order:?}: {e}")))?;
        let vs = cycle.vertex_set();
        if covered.intersects(&vs) {
            return Err(CycleError::InvalidAssembly(format!(
                "cycles overlap on {:?}",
                covered.intersection(&vs)
            )));
        }
        covered.union_with(&vs);
        out.push(cycle);
    }
    if &covered != required {
        return Err(CycleError::InvalidAssembly(format!(
            "covers {covered:?}, expected {required:?}"
        )));
    }
    Ok(out)
}
