//! Oriented paths and the rotation step used by the closure construction.

use serde::Serialize;

use crate::error::CycleError;
use crate::graph::Graph;

/// A path stored as its full vertex sequence, from `start` to `end`.
#[derive(Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct OrientedPath {
    order: Vec<usize>,
}

impl std::fmt::Debug for OrientedPath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Path{:?}", self.order)
    }
}

impl OrientedPath {
    pub fn new(g: &Graph, order: Vec<usize>) -> Result<Self, CycleError> {
        if order.is_empty() {
            return Err(CycleError::InvalidPath("empty path".into()));
        }
        let mut seen = crate::graph::VertexSet::new();
        for &v in &order {
            if !seen.insert(v) {
                return Err(CycleError::InvalidPath(format!("vertex {v} repeats")));
            }
        }
        for w in order.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(CycleError::InvalidPath(format!(
                    "{}-{} is not an edge",
                    w[0], w[1]
                )));
            }
        }
        Ok(OrientedPath { order })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn start(&self) -> usize {
        self.order[0]
    }

    pub fn end(&self) -> usize {
        *self.order.last().expect("non-empty")
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.order.iter().position(|&w| w == v)
    }

    /// The vertex after `v` on the path (`v` dagger), if `v` is not the end.
    pub fn next(&self, v: usize) -> Option<usize> {
        self.position(v)
            .and_then(|p| self.order.get(p + 1).copied())
    }

    pub fn prev(&self, v: usize) -> Option<usize> {
        self.position(v)
            .filter(|&p| p > 0)
            .map(|p| self.order[p - 1])
    }

    /// Vertices from `from` to `to` along (`forward`) or against the path.
    pub fn arc(&self, from: usize, to: usize, forward: bool) -> Option<Vec<usize>> {
        let a = self.position(from)?;
        let b = self.position(to)?;
        match (forward, a <= b) {
            (true, true) => Some(self.order[a..=b].to_vec()),
            (false, false) => Some(self.order[b..=a].iter().rev().copied().collect()),
            _ if a == b => Some(vec![from]),
            _ => None,
        }
    }
}

/// Pósa-style rotation: with `p = x1 .. x2 pivot .. x` and `x1 ~ pivot`,
/// returns `x2 .. x1 pivot .. x`. The far end `x` is fixed.
pub fn rotate_path(g: &Graph, p: &OrientedPath, pivot: usize) -> Result<OrientedPath, CycleError> {
    let k = p.len();
    let i = p
        .position(pivot)
        .ok_or_else(|| CycleError::InvalidRotation(format!("{pivot} is not on the path")))?;
    if i == 0 || i == k - 1 {
        return Err(CycleError::InvalidRotation(format!(
            "pivot {pivot} is an endpoint"
        )));
    }
    if !g.has_edge(p.start(), pivot) {
        return Err(CycleError::InvalidRotation(format!(
            "pivot {pivot} is not adjacent to start {}",
            p.start()
        )));
    }
    let mut order: Vec<usize> = p.order[..i].iter().rev().copied().collect();
    order.extend_from_slice(&p.order[i..]);
    Ok(OrientedPath { order })
}
