//! 2-factors via the degree-constrained-subgraph gadget and perfect
//! matching.
//!
//! Each vertex `v` of degree `d` becomes `d` edge-copy vertices (one per
//! incident edge) plus `d - 2` inner slack vertices joined completely to the
//! copies. Each original edge `uv` joins copy `(u, v)` to copy `(v, u)`. A
//! perfect matching leaves exactly two copies of every `v` off the inner
//! vertices; those copies' cross edges form the 2-factor.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cycle::{OrientedCycle, TwoFactor};
use crate::error::FactorError;
use crate::graph::Graph;
use crate::matching::max_matching;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetVertex {
    /// The endpoint copy at `vertex` of the original edge `vertex`-`neighbor`.
    EdgeCopy { vertex: usize, neighbor: usize },
    /// The `index`-th slack vertex of `vertex`.
    Inner { vertex: usize, index: usize },
}

#[derive(Clone, Debug)]
pub struct GadgetGraph {
    pub host: Graph,
    pub tags: Vec<GadgetVertex>,
}

impl GadgetGraph {
    pub fn copies_of(&self, v: usize) -> usize {
        self.tags
            .iter()
            .filter(|t| matches!(t, GadgetVertex::EdgeCopy { vertex, .. } if *vertex == v))
            .count()
    }

    pub fn inner_of(&self, v: usize) -> usize {
        self.tags
            .iter()
            .filter(|t| matches!(t, GadgetVertex::Inner { vertex, .. } if *vertex == v))
            .count()
    }
}

pub fn build_2factor_gadget(g: &Graph) -> Result<GadgetGraph, FactorError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) < 2) {
        return Err(FactorError::DegreeTooSmall(v));
    }
    let mut tags = Vec::new();
    // copy_index[v][k]: gadget id of the copy for v's k-th neighbour
    let mut copy_index: Vec<Vec<usize>> = Vec::with_capacity(g.n());
    let mut inner_index: Vec<Vec<usize>> = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let mut copies = Vec::new();
        for w in g.neighbors(v).iter() {
            copies.push(tags.len());
            tags.push(GadgetVertex::EdgeCopy {
                vertex: v,
                neighbor: w,
            });
        }
        let mut inners = Vec::new();
        for index in 0..g.degree(v) - 2 {
            inners.push(tags.len());
            tags.push(GadgetVertex::Inner { vertex: v, index });
        }
        copy_index.push(copies);
        inner_index.push(inners);
    }
    let mut host = Graph::empty(tags.len());
    for v in 0..g.n() {
        for &c in &copy_index[v] {
            for &i in &inner_index[v] {
                host.add_edge(c, i).expect("gadget ids in range");
            }
        }
    }
    let rank = |v: usize, w: usize| {
        g.neighbors(v)
            .iter()
            .position(|x| x == w)
            .expect("neighbour")
    };
    for (u, v) in g.edges() {
        host.add_edge(copy_index[u][rank(u, v)], copy_index[v][rank(v, u)])
            .expect("gadget ids in range");
    }
    Ok(GadgetGraph { host, tags })
}

/// A 2-factor of `g`, if one exists. Cycles start at their lowest vertex
/// and leave it towards its smaller factor-neighbour; cycles are listed by
/// starting vertex.
pub fn find_two_factor(g: &Graph) -> Option<TwoFactor> {
    if g.n() < 3 {
        return None;
    }
    let gadget = build_2factor_gadget(g).ok()?;
    let matching = max_matching(&gadget.host);
    if !matching.is_perfect() {
        return None;
    }
    let mut chosen: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (a, b) in matching.edges() {
        if let (
            GadgetVertex::EdgeCopy { vertex: u, .. },
            GadgetVertex::EdgeCopy { vertex: v, .. },
        ) = (gadget.tags[a], gadget.tags[b])
        {
            chosen[u].push(v);
            chosen[v].push(u);
        }
    }
    Some(factor_from_degree_two(g, chosen))
}

fn factor_from_degree_two(g: &Graph, mut chosen: Vec<Vec<usize>>) -> TwoFactor {
    for nbrs in chosen.iter_mut() {
        debug_assert_eq!(nbrs.len(), 2);
        nbrs.sort_unstable();
    }
    let mut visited = vec![false; g.n()];
    let mut cycles = Vec::new();
    for start in 0..g.n() {
        if visited[start] {
            continue;
        }
        let mut order = vec![start];
        visited[start] = true;
        let mut prev = start;
        let mut cur = chosen[start][0];
        while cur != start {
            visited[cur] = true;
            order.push(cur);
            let next = if chosen[cur][0] == prev {
                chosen[cur][1]
            } else {
                chosen[cur][0]
            };
            prev = cur;
            cur = next;
        }
        cycles.push(OrientedCycle::new(g, order).expect("factor edges are graph edges"));
    }
    TwoFactor::new(g, cycles).expect("degree-two spanning subgraph")
}

/// A 2-factor found after a seeded random relabelling, mapped back to `g`'s
/// labels. Different seeds usually give different factors; used to diversify
/// merge-engine states.
pub fn find_two_factor_seeded(g: &Graph, seed: u64) -> Option<TwoFactor> {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut inverse = vec![0; g.n()];
    for (v, &p) in perm.iter().enumerate() {
        inverse[p] = v;
    }
    let f = find_two_factor(&g.permuted(&perm))?;
    let cycles = f
        .cycles()
        .iter()
        .map(|c| {
            let order = c.order().iter().map(|&v| inverse[v]).collect();
            OrientedCycle::new(g, order).expect("relabelled cycle")
        })
        .collect();
    Some(TwoFactor::new(g, cycles).expect("relabelled factor"))
}
