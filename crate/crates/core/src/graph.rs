//! Simple undirected graphs over vertices `0..n` with bitset adjacency.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::error::{GraphError, ParseError};

const WORD: usize = 64;

/// A set of vertex indices stored as a growable bitset.
#[derive(Clone, Default)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    fn trimmed(&self) -> &[u64] {
        let end = self
            .words
            .iter()
            .rposition(|&w| w != 0)
            .map_or(0, |i| i + 1);
        &self.words[..end]
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for VertexSet {}

impl std::hash::Hash for VertexSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

/// Lexicographic order on the ascending member lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        VertexSet {
            words: vec![0; n.div_ceil(WORD)],
        }
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::with_capacity(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / WORD, v % WORD);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / WORD, v % WORD);
        match self.words.get_mut(w) {
            Some(word) => {
                let had = *word & (1 << b) != 0;
                *word &= !(1 << b);
                had
            }
            None => false,
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / WORD)
            .is_some_and(|w| w & (1 << (v % WORD)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Ascending iteration.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + b)
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip_words(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        let len = self.words.len().max(other.words.len());
        let get = |ws: &[u64], i: usize| ws.get(i).copied().unwrap_or(0);
        let mut words: Vec<u64> = (0..len)
            .map(|i| f(get(&self.words, i), get(&other.words, i)))
            .collect();
        while words.last() == Some(&0) {
            words.pop();
        }
        VertexSet { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a & b)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a & !b)
    }

    pub fn union_with(&mut self, other: &Self) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &a)| a & !other.words.get(i).copied().unwrap_or(0) == 0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Vec::<usize>::deserialize(d)?.into_iter().collect())
    }
}

/// Undirected simple graph on `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::with_capacity(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("valid edge");
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n).expect("valid edge");
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v).expect("valid edge");
        }
        g
    }

    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v).expect("valid edge");
        }
        g
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("petersen is simple")
    }

    /// Builds a graph, rejecting loops and out-of-range endpoints. Duplicate
    /// edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: u.max(v),
                n: self.n,
            });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[v].insert(u);
        Ok(self.adj[u].insert(v))
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n {
            return false;
        }
        self.adj[v].remove(u);
        self.adj[u].remove(v)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v` in ascending lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).expect("valid edge");
                }
            }
        }
        g
    }

    /// `N_G(S)`: neighbours of members of `s`, excluding `s` itself.
    pub fn neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::with_capacity(self.n);
        for v in s.iter() {
            out.union_with(&self.adj[v]);
        }
        out.difference(s)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])
                .expect("permutation keeps edges valid");
        }
        g
    }

    /// Adjacency rows as `u64` masks; only meaningful for `n <= 64`.
    pub(crate) fn masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        self.adj
            .iter()
            .map(|s| s.words.first().copied().unwrap_or(0))
            .collect()
    }

    /// Serialises to the edge-list text format.
    pub fn to_text(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// SHA-256 of the canonical text serialisation, hex encoded.
    pub fn content_hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_text().as_bytes()))
    }

    /// Parses the edge-list text format: a header `n m`, then `m` lines
    /// `u v` with `u < v`, strictly ascending.
    pub fn parse(text: &str) -> Result<Graph, ParseError> {
        let mut lines = text.lines().enumerate();
        let (header_no, header) = lines
            .next()
            .ok_or(ParseError::new(1, "missing header line"))?;
        let nums = parse_pair(header).ok_or(ParseError::new(header_no + 1, "expected `n m`"))?;
        let (n, m) = nums;
        let mut g = Graph::empty(n);
        let mut last: Option<(usize, usize)> = None;
        let mut seen = 0;
        for (no, line) in lines {
            let line_no = no + 1;
            if line.trim().is_empty() && seen == m {
                continue;
            }
            let (u, v) = parse_pair(line).ok_or(ParseError::new(line_no, "expected `u v`"))?;
            if seen == m {
                return Err(ParseError::new(line_no, "more edges than declared"));
            }
            if u >= v || v >= n {
                return Err(ParseError::new(line_no, "edge must satisfy 0 <= u < v < n"));
            }
            if last.is_some_and(|p| p >= (u, v)) {
                return Err(ParseError::new(line_no, "edges must be strictly ascending"));
            }
            g.add_edge(u, v).expect("range checked");
            last = Some((u, v));
            seen += 1;
        }
        if seen != m {
            return Err(ParseError::new(
                text.lines().count() + 1,
                "fewer edges than declared",
            ));
        }
        Ok(g)
    }
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

impl FromStr for Graph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Graph::parse(s)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Number of connected components of `g - removed`. Zero iff every vertex
/// is removed.
pub fn component_count(g: &Graph, removed: &VertexSet) -> usize {
    let mut seen = removed.clone();
    let mut count = 0;
    let mut stack = Vec::new();
    for start in 0..g.n() {
        if seen.contains(start) {
            continue;
        }
        count += 1;
        seen.insert(start);
        stack.push(start);
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v).iter() {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Component count over `u64` masks (`n <= 64`), used by the exhaustive
/// toughness search.
#[inline]
pub(crate) fn component_count_mask(adj: &[u64], alive: u64) -> usize {
    let mut rest = alive;
    let mut count = 0;
    while rest != 0 {
        count += 1;
        let mut comp = rest & rest.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v];
            }
            next &= alive & !comp;
            comp |= next;
            frontier = next;
        }
        rest &= !comp;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn component_count_fixtures() {
        let c5 = Graph::cycle(5);
        assert_eq!(component_count(&c5, &VertexSet::new()), 1);
        assert_eq!(component_count(&c5, &set(&[0, 2])), 2);
        assert_eq!(component_count(&c5, &c5.vertices()), 0);
        let k4 = Graph::complete(4);
        for v in 0..4 {
            assert_eq!(component_count(&k4, &set(&[v])), 1);
        }
    }

    #[test]
    fn mask_component_count_matches() {
        let p = Graph::petersen();
        let adj = p.masks();
        for mask in 0u64..(1 << 10) {
            let removed: VertexSet = (0..10).filter(|v| mask >> v & 1 == 1).collect();
            let alive = !mask & ((1 << 10) - 1);
            assert_eq!(
                component_count(&p, &removed),
                component_count_mask(&adj, alive)
            );
        }
    }

    #[test]
    fn text_format_round_trip() {
        let g = Graph::petersen();
        let text = g.to_text();
        assert!(text.starts_with("10 15\n0 1\n0 4\n0 5\n"));
        assert_eq!(Graph::parse(&text).unwrap(), g);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = Graph::parse("3 2\n0 1\n1 x\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = Graph::parse("3 2\n1 2\n0 1\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = Graph::parse("3 1\n0 3\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(Graph::parse("3 2\n0 1\n").is_err());
        assert!(Graph::parse("").is_err());
    }

    #[test]
    fn rejects_loops() {
        assert!(matches!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        ));
        assert!(Graph::from_edges(3, &[(1, 3)]).is_err());
    }

    #[test]
    fn vertex_set_ops() {
        let a = set(&[1, 5, 70]);
        let b = set(&[5, 6]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 5, 6, 70]);
        assert_eq!(a.intersection(&b).to_vec(), vec![5]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 70]);
        assert!(set(&[5]).is_subset(&a));
        assert!(set(&[0, 2]) < set(&[0, 2, 4]));
        assert!(set(&[0, 2, 4]) < set(&[0, 3]));
        assert_eq!(a.intersection(&set(&[2])), VertexSet::new());
    }
}
