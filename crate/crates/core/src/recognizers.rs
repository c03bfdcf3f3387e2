//! Induced-2K2 detection, independence, and exact toughness by exhaustive
//! cutset enumeration.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::RecognizerError;
use crate::graph::{component_count_mask, Graph, VertexSet};
use crate::Rational;

/// Largest `n` accepted by the exhaustive toughness routines.
pub const TOUGHNESS_BOUND: usize = 24;

pub type Edge = (usize, usize);

/// Two edges inducing a 2K2, each with its smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Induced2K2 {
    pub first: Edge,
    pub second: Edge,
}

impl fmt::Display for Induced2K2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{}),({},{})",
            self.first.0, self.first.1, self.second.0, self.second.1
        )
    }
}

/// Lexicographically smallest pair of edges inducing a 2K2, if any.
pub fn find_induced_2k2(g: &Graph) -> Option<Induced2K2> {
    let edges = g.edges();
    for (i, &(u, v)) in edges.iter().enumerate() {
        for &(x, y) in &edges[i + 1..] {
            if x == u || x == v || y == u || y == v {
                continue;
            }
            if !(g.has_edge(u, x) || g.has_edge(u, y) || g.has_edge(v, x) || g.has_edge(v, y)) {
                return Some(Induced2K2 {
                    first: (u, v),
                    second: (x, y),
                });
            }
        }
    }
    None
}

pub fn is_2k2_free(g: &Graph) -> bool {
    find_induced_2k2(g).is_none()
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| !g.neighbors(v).intersects(s))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Toughness {
    Finite(Rational),
    Infinite,
}

impl Toughness {
    pub fn at_least(&self, t: &Rational) -> bool {
        match self {
            Toughness::Infinite => true,
            Toughness::Finite(v) => v >= t,
        }
    }
}

impl fmt::Display for Toughness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Toughness::Infinite => write!(f, "inf"),
            Toughness::Finite(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToughnessResult {
    pub value: Toughness,
    /// A minimising cutset; `None` iff the graph is complete.
    pub witness: Option<VertexSet>,
}

fn check_bound(g: &Graph) -> Result<(), RecognizerError> {
    if g.n() > TOUGHNESS_BOUND {
        return Err(RecognizerError::TooLarge {
            n: g.n(),
            bound: TOUGHNESS_BOUND,
        });
    }
    Ok(())
}

fn mask_to_set(mask: u64) -> VertexSet {
    (0..64).filter(|v| mask >> v & 1 == 1).collect()
}

/// Splits `0..2^n` into contiguous ranges for parallel scanning.
fn chunks(n: usize) -> Vec<(u64, u64)> {
    let total = 1u64 << n;
    let parts = total.min(256);
    let step = total / parts;
    (0..parts).map(|i| (i * step, (i + 1) * step)).collect()
}

#[derive(Clone, Copy)]
struct Best {
    size: u64,
    comps: u64,
    mask: u64,
}

impl Best {
    fn cmp(&self, other: &Best) -> Ordering {
        (self.size * other.comps)
            .cmp(&(other.size * self.comps))
            .then_with(|| mask_to_set(self.mask).cmp(&mask_to_set(other.mask)))
    }
}

/// `tau(G)` with a minimising cutset; ties are broken by the
/// lexicographically smallest vertex list.
pub fn toughness_exact(g: &Graph) -> Result<ToughnessResult, RecognizerError> {
    check_bound(g)?;
    if g.is_complete() {
        return Ok(ToughnessResult {
            value: Toughness::Infinite,
            witness: None,
        });
    }
    let n = g.n();
    let adj = g.masks();
    let all = (1u64 << n) - 1;
    let best = chunks(n)
        .into_par_iter()
        .filter_map(|(lo, hi)| {
            let mut best: Option<Best> = None;
            for mask in lo..hi {
                let size = mask.count_ones() as u64;
                let rest = n as u64 - size;
                if rest < 2 {
                    continue;
                }
                // c(G-S) <= n - |S|: prune when even that cannot beat the best
                if let Some(b) = best {
                    if size * b.comps > b.size * rest {
                        continue;
                    }
                }
                let comps = component_count_mask(&adj, all & !mask) as u64;
                if comps < 2 {
                    continue;
                }
                let cand = Best { size, comps, mask };
                if best.is_none_or(|b| cand.cmp(&b) == Ordering::Less) {
                    best = Some(cand);
                }
            }
            best
        })
        .reduce_with(|a, b| if b.cmp(&a) == Ordering::Less { b } else { a })
        .expect("a non-complete graph has a cutset");
    Ok(ToughnessResult {
        value: Toughness::Finite(Rational::new(best.size.into(), best.comps.into())),
        witness: Some(mask_to_set(best.mask)),
    })
}

/// Exact test of `|S| < t * c` with small-integer fast path.
#[derive(Clone)]
enum Threshold {
    Small { num: u128, den: u128 },
    Big(Rational),
}

impl Threshold {
    fn new(t: &Rational) -> Self {
        match (t.numer().to_u64(), t.denom().to_u64()) {
            (Some(num), Some(den)) => Threshold::Small {
                num: num.into(),
                den: den.into(),
            },
            _ => Threshold::Big(t.clone()),
        }
    }

    #[inline]
    fn violated_by(&self, size: u64, comps: u64) -> bool {
        match self {
            Threshold::Small { num, den } => (size as u128) * den < num * (comps as u128),
            Threshold::Big(t) => {
                Rational::from_integer(BigInt::from(size))
                    < t * Rational::from_integer(comps.into())
            }
        }
    }
}

/// Whether `g` is `t`-tough; on `false`, the first violating cutset in
/// ascending bitmask order.
pub fn is_t_tough(g: &Graph, t: &Rational) -> Result<(bool, Option<VertexSet>), RecognizerError> {
    check_bound(g)?;
    if t <= &Rational::zero() || g.is_complete() {
        return Ok((true, None));
    }
    let n = g.n();
    let adj = g.masks();
    let all = (1u64 << n) - 1;
    let threshold = Threshold::new(t);
    let found = chunks(n).into_par_iter().find_map_first(|(lo, hi)| {
        (lo..hi).find(|&mask| {
            let size = mask.count_ones() as u64;
            let rest = n as u64 - size;
            if rest < 2 || !threshold.violated_by(size, rest) {
                return false;
            }
            let comps = component_count_mask(&adj, all & !mask) as u64;
            comps >= 2 && threshold.violated_by(size, comps)
        })
    });
    Ok(match found {
        Some(mask) => (false, Some(mask_to_set(mask))),
        None => (true, None),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    #[test]
    fn induced_2k2_fixtures() {
        let p5 = Graph::path(5);
        let w = find_induced_2k2(&p5).unwrap();
        assert_eq!((w.first, w.second), ((0, 1), (3, 4)));
        assert_eq!(find_induced_2k2(&Graph::cycle(5)), None);
        assert!(find_induced_2k2(&Graph::cycle(6)).is_some());
        assert_eq!(find_induced_2k2(&Graph::complete(6)), None);
    }

    #[test]
    fn independence() {
        let c5 = Graph::cycle(5);
        assert!(is_independent(&c5, &[0, 2].into_iter().collect()));
        assert!(!is_independent(&c5, &[0, 1].into_iter().collect()));
        assert!(is_independent(&c5, &VertexSet::new()));
    }

    #[test]
    fn toughness_fixtures() {
        assert_eq!(
            toughness_exact(&Graph::complete(5)).unwrap().value,
            Toughness::Infinite
        );
        let star = toughness_exact(&Graph::star(3)).unwrap();
        assert_eq!(star.value, Toughness::Finite(r(1, 3)));
        assert_eq!(star.witness.unwrap().to_vec(), vec![0]);
        assert_eq!(
            toughness_exact(&Graph::petersen()).unwrap().value,
            Toughness::Finite(r(4, 3))
        );
        assert_eq!(
            toughness_exact(&Graph::cycle(6)).unwrap().value,
            Toughness::Finite(r(1, 1))
        );
    }

    #[test]
    fn t_tough_fixtures() {
        let c6 = Graph::cycle(6);
        assert_eq!(is_t_tough(&c6, &r(1, 1)).unwrap(), (true, None));
        let (ok, s) = is_t_tough(&c6, &r(3, 2)).unwrap();
        assert!(!ok);
        let s = s.unwrap();
        let c = crate::graph::component_count(&c6, &s);
        assert!(c >= 2 && 2 * s.len() < 3 * c);
        assert!(is_t_tough(&Graph::complete(5), &r(100, 1)).unwrap().0);
    }

    #[test]
    fn too_large() {
        let g = Graph::cycle(TOUGHNESS_BOUND + 1);
        assert!(matches!(
            toughness_exact(&g),
            Err(RecognizerError::TooLarge { .. })
        ));
        assert!(is_t_tough(&g, &r(1, 1)).is_err());
    }
}
