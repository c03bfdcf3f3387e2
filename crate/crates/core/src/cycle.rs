//! Oriented cycles and 2-factors.

use serde::{Deserialize, Serialize};

use crate::error::CycleError;
use crate::graph::{Graph, VertexSet};

const ABSENT: usize = usize::MAX;

/// A cycle of length at least 3 with a fixed orientation.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct OrientedCycle {
    order: Vec<usize>,
    #[serde(skip)]
    pos: Vec<usize>,
}

impl std::fmt::Debug for OrientedCycle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cycle{:?}", self.order)
    }
}

impl TryFrom<Vec<usize>> for OrientedCycle {
    type Error = CycleError;

    fn try_from(order: Vec<usize>) -> Result<Self, Self::Error> {
        OrientedCycle::from_order(order)
    }
}

impl From<OrientedCycle> for Vec<usize> {
    fn from(c: OrientedCycle) -> Self {
        c.order
    }
}

impl OrientedCycle {
    /// Validates the order against `g`: distinct vertices, length >= 3,
    /// consecutive (cyclically) vertices adjacent.
    pub fn new(g: &Graph, order: Vec<usize>) -> Result<Self, CycleError> {
        let cycle = Self::from_order(order)?;
        for (i, &v) in cycle.order.iter().enumerate() {
            let w = cycle.order[(i + 1) % cycle.order.len()];
            if !g.has_edge(v, w) {
                return Err(CycleError::InvalidCycle(format!("{v}-{w} is not an edge")));
            }
        }
        Ok(cycle)
    }

    /// Structural checks only (no host graph).
    pub(crate) fn from_order(order: Vec<usize>) -> Result<Self, CycleError> {
        if order.len() < 3 {
            return Err(CycleError::InvalidCycle(format!(
                "length {} is below 3",
                order.len()
            )));
        }
        let max = *order.iter().max().expect("non-empty");
        let mut pos = vec![ABSENT; max + 1];
        for (i, &v) in order.iter().enumerate() {
            if pos[v] != ABSENT {
                return Err(CycleError::InvalidCycle(format!("vertex {v} repeats")));
            }
            pos[v] = i;
        }
        Ok(OrientedCycle { order, pos })
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

    pub fn contains(&self, v: usize) -> bool {
        self.pos.get(v).is_some_and(|&p| p != ABSENT)
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.pos.get(v).copied().filter(|&p| p != ABSENT)
    }

    /// `v^+`. Panics if `v` is not on the cycle.
    pub fn succ(&self, v: usize) -> usize {
        let p = self.position(v).expect("vertex on cycle");
        self.order[(p + 1) % self.order.len()]
    }

    /// `v^-`. Panics if `v` is not on the cycle.
    pub fn pred(&self, v: usize) -> usize {
        let p = self.position(v).expect("vertex on cycle");
        self.order[(p + self.order.len() - 1) % self.order.len()]
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.order.iter().copied().collect()
    }

    pub fn reversed(&self) -> OrientedCycle {
        let mut order = self.order.clone();
        order.reverse();
        Self::from_order(order).expect("reversal keeps structure")
    }

    /// Cycle edges `(v, v^+)` in orientation order starting at `order[0]`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.order.len();
        (0..k).map(move |i| (self.order[i], self.order[(i + 1) % k]))
    }

    /// True when `u` and `v` are consecutive on the cycle (either direction).
    pub fn is_cycle_edge(&self, u: usize, v: usize) -> bool {
        self.contains(u) && self.contains(v) && (self.succ(u) == v || self.pred(u) == v)
    }

    /// Vertices from `from` to `to` following the orientation (`forward`) or
    /// against it, both ends inclusive.
    pub fn arc(&self, from: usize, to: usize, forward: bool) -> Option<Vec<usize>> {
        let k = self.order.len();
        let mut p = self.position(from)?;
        self.position(to)?;
        let mut out = Vec::with_capacity(k);
        for _ in 0..k {
            let v = self.order[p];
            out.push(v);
            if v == to {
                return Some(out);
            }
            p = if forward {
                (p + 1) % k
            } else {
                (p + k - 1) % k
            };
        }
        None
    }
}

/// Vertex-disjoint oriented cycles covering every vertex of the host graph.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoFactor {
    cycles: Vec<OrientedCycle>,
    #[serde(skip)]
    cycle_of: Vec<usize>,
}

impl std::fmt::Debug for TwoFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.cycles).finish()
    }
}

impl TwoFactor {
    pub fn new(g: &Graph, cycles: Vec<OrientedCycle>) -> Result<Self, CycleError> {
        let mut cycle_of = vec![ABSENT; g.n()];
        for (i, c) in cycles.iter().enumerate() {
            for (u, v) in c.edges() {
                if !g.has_edge(u, v) {
                    return Err(CycleError::InvalidFactor(format!("{u}-{v} is not an edge")));
                }
            }
            for &v in c.order() {
                if v >= g.n() {
                    return Err(CycleError::InvalidFactor(format!(
                        "vertex {v} out of range"
                    )));
                }
                if cycle_of[v] != ABSENT {
                    return Err(CycleError::InvalidFactor(format!(
                        "vertex {v} lies on two cycles"
                    )));
                }
                cycle_of[v] = i;
            }
        }
        if let Some(v) = cycle_of.iter().position(|&c| c == ABSENT) {
            return Err(CycleError::InvalidFactor(format!(
                "vertex {v} is uncovered"
            )));
        }
        Ok(TwoFactor { cycles, cycle_of })
    }

    /// Re-validates a deserialised factor against its host graph.
    pub fn revalidate(self, g: &Graph) -> Result<Self, CycleError> {
        TwoFactor::new(g, self.cycles)
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn cycles(&self) -> &[OrientedCycle] {
        &self.cycles
    }

    pub fn cycle(&self, id: usize) -> &OrientedCycle {
        &self.cycles[id]
    }

    pub fn cycle_of(&self, v: usize) -> usize {
        self.cycle_of[v]
    }

    pub fn succ(&self, v: usize) -> usize {
        self.cycles[self.cycle_of[v]].succ(v)
    }

    pub fn pred(&self, v: usize) -> usize {
        self.cycles[self.cycle_of[v]].pred(v)
    }

    /// Replaces the cycles with ids in `replaced` by `replacement`. Untouched
    /// cycles keep their relative order; replacements are appended.
    pub fn replace(
        &self,
        g: &Graph,
        replaced: &[usize],
        replacement: Vec<OrientedCycle>,
    ) -> Result<TwoFactor, CycleError> {
        let mut cycles: Vec<OrientedCycle> = self
            .cycles
            .iter()
            .enumerate()
            .filter(|(i, _)| !replaced.contains(i))
            .map(|(_, c)| c.clone())
            .collect();
        cycles.extend(replacement);
        TwoFactor::new(g, cycles)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn successor_predecessor_inverse() {
        let g = Graph::cycle(7);
        let c = OrientedCycle::new(&g, (0..7).collect()).unwrap();
        for v in 0..7 {
            assert_eq!(c.pred(c.succ(v)), v);
            assert_eq!(c.succ(c.pred(v)), v);
        }
        let r = c.reversed();
        assert_eq!(r.succ(3), 2);
        assert_eq!(c.arc(5, 1, true).unwrap(), vec![5, 6, 0, 1]);
        assert_eq!(c.arc(1, 5, false).unwrap(), vec![1, 0, 6, 5]);
    }

    #[test]
    fn rejects_non_edges_and_repeats() {
        let g = Graph::cycle(5);
        assert!(OrientedCycle::new(&g, vec![0, 2, 1, 3, 4]).is_err());
        assert!(OrientedCycle::new(&g, vec![0, 1, 0]).is_err());
        assert!(OrientedCycle::new(&g, vec![0, 1]).is_err());
    }

    #[test]
    fn factor_must_partition() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let a = OrientedCycle::new(&g, vec![0, 1, 2]).unwrap();
        let b = OrientedCycle::new(&g, vec![3, 4, 5]).unwrap();
        let f = TwoFactor::new(&g, vec![a.clone(), b]).unwrap();
        assert_eq!(f.cycle_of(4), 1);
        assert_eq!(f.succ(5), 3);
        assert!(TwoFactor::new(&g, vec![a.clone()]).is_err());
        assert!(TwoFactor::new(&g, vec![a.clone(), a]).is_err());
    }
}
