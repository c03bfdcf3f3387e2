//! Seeded generators for 2K2-free families and exhaustive enumeration of
//! small 2K2-free graphs up to isomorphism.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cycle::{OrientedCycle, TwoFactor};
use crate::error::GenError;
use crate::graph::Graph;
use crate::recognizers::{find_induced_2k2, is_2k2_free};

/// Largest `n` accepted by [`enumerate_2k2_free`].
pub const ENUMERATION_BOUND: usize = 7;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    Split {
        clique: usize,
        independent: usize,
        density: f64,
    },
    Cochordal {
        n: usize,
        #[serde(default = "default_attach")]
        attach: f64,
        #[serde(default = "default_extend")]
        extend: f64,
    },
    CompleteMultipartite {
        parts: Vec<usize>,
    },
    Random2k2Rejection {
        n: usize,
        density: f64,
        #[serde(default = "default_attempts")]
        max_attempts: usize,
    },
    /// The graph of [`gen_planted_factor`].
    Planted {
        n: usize,
        density: f64,
    },
}

fn default_attach() -> f64 {
    0.7
}

fn default_extend() -> f64 {
    0.5
}

fn default_attempts() -> usize {
    10_000
}

/// A reproducible generator call: the same spec always yields the same
/// graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    #[serde(flatten)]
    pub family: Family,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(family: Family, seed: u64) -> Self {
        GenSpec { family, seed }
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        GenSpec {
            family: self.family.clone(),
            seed,
        }
    }

    pub fn generate(&self) -> Result<Graph, GenError> {
        match &self.family {
            Family::Split {
                clique,
                independent,
                density,
            } => gen_split(*clique, *independent, *density, self.seed),
            Family::Cochordal { n, attach, extend } => {
                gen_cochordal_with(*n, *attach, *extend, self.seed)
            }
            Family::CompleteMultipartite { parts } => Ok(gen_complete_multipartite(parts)),
            Family::Random2k2Rejection {
                n,
                density,
                max_attempts,
            } => gen_random_2k2_free(*n, *density, *max_attempts, self.seed),
            Family::Planted { n, density } => Ok(gen_planted_factor(*n, *density, self.seed)?.0),
        }
    }
}

fn check_probability(name: &str, p: f64) -> Result<(), GenError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GenError::InvalidParameter(format!(
            "{name} = {p} is not in [0, 1]"
        )))
    }
}

/// Clique on `0..clique`, independent set after it, each cross pair kept
/// with probability `density`.
pub fn gen_split(
    clique: usize,
    independent: usize,
    density: f64,
    seed: u64,
) -> Result<Graph, GenError> {
    check_probability("density", density)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = clique + independent;
    let mut g = Graph::empty(n);
    for i in 0..clique {
        for j in i + 1..clique {
            g.add_edge(i, j).expect("in range");
        }
    }
    for i in 0..clique {
        for j in clique..n {
            if rng.gen_bool(density) {
                g.add_edge(i, j).expect("in range");
            }
        }
    }
    Ok(g)
}

/// Complement of a random chordal graph with default parameters.
pub fn gen_cochordal(n: usize, seed: u64) -> Result<Graph, GenError> {
    gen_cochordal_with(n, default_attach(), default_extend(), seed)
}

/// Complement of a random chordal graph. Vertices arrive one at a time;
/// with probability `attach` a newcomer joins a clique grown greedily from
/// a random earlier vertex, each further candidate kept with probability
/// `extend`. Every newcomer is simplicial on arrival, so the arrival order
/// reversed is a perfect elimination ordering.
pub fn gen_cochordal_with(
    n: usize,
    attach: f64,
    extend: f64,
    seed: u64,
) -> Result<Graph, GenError> {
    check_probability("attach", attach)?;
    check_probability("extend", extend)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chordal = Graph::empty(n);
    for v in 1..n {
        if !rng.gen_bool(attach) {
            continue;
        }
        let anchor = rng.gen_range(0..v);
        let mut clique = vec![anchor];
        let mut candidates: Vec<usize> = chordal
            .neighbors(anchor)
            .iter()
            .filter(|&w| w < v)
            .collect();
        candidates.shuffle(&mut rng);
        for w in candidates {
            if clique.iter().all(|&c| chordal.has_edge(c, w)) && rng.gen_bool(extend) {
                clique.push(w);
            }
        }
        for c in clique {
            chordal.add_edge(v, c).expect("in range");
        }
    }
    Ok(chordal.complement())
}

/// `K_{p1, p2, ...}`; parts are consecutive vertex blocks.
pub fn gen_complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, p));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// The first 2K2-free `G(n, density)` sample from a seeded stream.
pub fn gen_random_2k2_free(
    n: usize,
    density: f64,
    max_attempts: usize,
    seed: u64,
) -> Result<Graph, GenError> {
    check_probability("density", density)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_attempts {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(density) {
                    g.add_edge(u, v).expect("in range");
                }
            }
        }
        if is_2k2_free(&g) {
            return Ok(g);
        }
    }
    Err(GenError::Exhausted(max_attempts))
}

/// A 2K2-free graph together with a 2-factor of at least `n / 6` cycles.
///
/// Vertices are shuffled into cycles of length 3 to 5 (the last cycle may
/// absorb the remainder), every other pair is added with probability
/// `density`, and then, while an induced 2K2 remains, one of its four
/// crossing pairs is added at random.
pub fn gen_planted_factor(
    n: usize,
    density: f64,
    seed: u64,
) -> Result<(Graph, TwoFactor), GenError> {
    check_probability("density", density)?;
    if n < 3 {
        return Err(GenError::InvalidParameter(format!("n = {n} is below 3")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut rest = &order[..];
    while !rest.is_empty() {
        let len = rng.gen_range(3..=5).min(rest.len());
        let (head, tail) = rest.split_at(if tail_too_short(rest.len(), len) {
            rest.len()
        } else {
            len
        });
        blocks.push(head.to_vec());
        rest = tail;
    }
    let mut g = Graph::empty(n);
    for b in &blocks {
        for i in 0..b.len() {
            g.add_edge(b[i], b[(i + 1) % b.len()]).expect("in range");
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(density) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    while let Some(w) = find_induced_2k2(&g) {
        let (a, b) = w.first;
        let (c, d) = w.second;
        let choices = [(a, c), (a, d), (b, c), (b, d)];
        let (u, v) = choices[rng.gen_range(0..4)];
        g.add_edge(u, v).expect("in range");
    }
    let cycles = blocks
        .into_iter()
        .map(|b| OrientedCycle::new(&g, b).expect("planted cycle"))
        .collect();
    let f = TwoFactor::new(&g, cycles).expect("planted factor");
    Ok((g, f))
}

fn tail_too_short(remaining: usize, len: usize) -> bool {
    remaining - len < 3
}

/// Upper-triangle adjacency bits, pairs `(i, j)`, `i < j`, in row order;
/// the first pair is the most significant bit.
fn code_of(g: &Graph, label: &[usize]) -> u64 {
    let n = g.n();
    let mut inv = vec![0; n];
    for (v, &l) in label.iter().enumerate() {
        inv[l] = v;
    }
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | u64::from(g.has_edge(inv[i], inv[j]));
        }
    }
    code
}

fn graph_of_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut g = Graph::empty(n);
    let mut bit = total;
    for i in 0..n {
        for j in i + 1..n {
            bit -= 1;
            if code >> bit & 1 == 1 {
                g.add_edge(i, j).expect("in range");
            }
        }
    }
    g
}

/// Canonical code: the maximum adjacency code over labellings that list
/// vertices by descending degree (ties permuted exhaustively).
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical codes fit 11 vertices");
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in by_degree {
        match classes.last_mut() {
            Some(cl) if g.degree(cl[0]) == g.degree(v) => cl.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best = 0u64;
    let mut order = Vec::with_capacity(n);
    fn rec(
        g: &Graph,
        classes: &mut [Vec<usize>],
        k: usize,
        order: &mut Vec<usize>,
        best: &mut u64,
    ) {
        if k == classes.len() {
            let mut label = vec![0; order.len()];
            for (pos, &v) in order.iter().enumerate() {
                label[v] = pos;
            }
            *best = (*best).max(code_of(g, &label));
            return;
        }
        permute(g, classes, k, 0, order, best);
    }
    fn permute(
        g: &Graph,
        classes: &mut [Vec<usize>],
        k: usize,
        i: usize,
        order: &mut Vec<usize>,
        best: &mut u64,
    ) {
        if i == classes[k].len() {
            let class = classes[k].clone();
            order.extend_from_slice(&class);
            rec(g, classes, k + 1, order, best);
            order.truncate(order.len() - class.len());
            return;
        }
        for j in i..classes[k].len() {
            classes[k].swap(i, j);
            permute(g, classes, k, i + 1, order, best);
            classes[k].swap(i, j);
        }
    }
    rec(g, &mut classes, 0, &mut order, &mut best);
    best
}

/// Every 2K2-free graph on `n` vertices up to isomorphism, each in its
/// canonical labelling, ordered by canonical code. Built by extending the
/// graphs on `n - 1` vertices by one vertex (the class is hereditary).
pub fn enumerate_2k2_free(n: usize) -> Result<Vec<Graph>, GenError> {
    if n > ENUMERATION_BOUND {
        return Err(GenError::TooLarge {
            n,
            bound: ENUMERATION_BOUND,
        });
    }
    let mut level: Vec<Graph> = vec![Graph::empty(0)];
    for k in 1..=n {
        let codes: BTreeSet<u64> = level
            .par_iter()
            .flat_map_iter(|h| {
                (0u32..1 << (k - 1)).filter_map(move |mask| {
                    let mut g = Graph::empty(k);
                    for (u, v) in h.edges() {
                        g.add_edge(u, v).expect("in range");
                    }
                    for u in 0..k - 1 {
                        if mask >> u & 1 == 1 {
                            g.add_edge(u, k - 1).expect("in range");
                        }
                    }
                    is_2k2_free(&g).then(|| canonical_code(&g))
                })
            })
            .collect();
        level = codes.into_iter().map(|c| graph_of_code(k, c)).collect();
    }
    Ok(level)
}
