use std::collections::BTreeSet;

use proptest::prelude::*;
use tough2k2::generators::{
    canonical_code, enumerate_2k2_free, gen_cochordal_with, gen_planted_factor,
    gen_random_2k2_free, gen_split, Family, GenSpec,
};
use tough2k2::recognizers::is_2k2_free;
use tough2k2::solver::{check_certificate, solve, Outcome};
use tough2k2::{ratio, Graph};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest sorted edge list over all relabellings.
fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut e: Vec<_> = g
                .edges()
                .into_iter()
                .map(|(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                .collect();
            e.sort_unstable();
            e
        })
        .min()
        .unwrap()
}

fn brute_2k2_free(g: &Graph) -> bool {
    let e = g.edges();
    !e.iter().any(|&(a, b)| {
        e.iter().any(|&(c, d)| {
            [a, b]
                .iter()
                .all(|&x| x != c && x != d && !g.has_edge(x, c) && !g.has_edge(x, d))
        })
    })
}

#[test]
fn enumeration_matches_isomorphism_classes() {
    for n in 1..=5 {
        let perms = permutations(n);
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut classes = BTreeSet::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if brute_2k2_free(&g) {
                classes.insert(brute_canonical(&g, &perms));
            }
        }
        let listed = enumerate_2k2_free(n).unwrap();
        assert_eq!(listed.len(), classes.len(), "n = {n}");
        let listed: BTreeSet<_> = listed.iter().map(|g| brute_canonical(g, &perms)).collect();
        assert_eq!(listed, classes, "n = {n}");
    }
}

#[test]
fn enumeration_codes_are_distinct() {
    let graphs = enumerate_2k2_free(6).unwrap();
    let codes: BTreeSet<u64> = graphs.iter().map(canonical_code).collect();
    assert_eq!(codes.len(), graphs.len());
}

#[test]
fn spec_generation_is_reproducible() {
    let spec: GenSpec =
        serde_json::from_str(r#"{"family":"planted","n":14,"density":0.2,"seed":9}"#).unwrap();
    assert_eq!(
        spec.family,
        Family::Planted {
            n: 14,
            density: 0.2
        }
    );
    assert_eq!(spec.generate().unwrap(), spec.generate().unwrap());
    assert_ne!(
        spec.generate().unwrap(),
        spec.with_seed(10).generate().unwrap()
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generators_are_2k2_free(seed in any::<u64>(), n in 3usize..16, d in 0.0f64..=1.0) {
        prop_assert!(is_2k2_free(&gen_split(n / 2, n - n / 2, d, seed).unwrap()));
        prop_assert!(is_2k2_free(&gen_cochordal_with(n, d, 1.0 - d, seed).unwrap()));
        let (g, f) = gen_planted_factor(n, d / 2.0, seed).unwrap();
        prop_assert!(is_2k2_free(&g));
        prop_assert!(f.revalidate(&g).is_ok());
        if let Ok(g) = gen_random_2k2_free(n.min(9), d, 200, seed) {
            prop_assert!(is_2k2_free(&g));
        }
    }

    #[test]
    fn solve_certificates_verify(seed in any::<u64>(), n in 3usize..14, d in 0.0f64..0.5) {
        let (g, _) = gen_planted_factor(n, d, seed).unwrap();
        for t in [ratio(1, 1), ratio(3, 2), ratio(3, 1)] {
            let cert = solve(&g, &t).unwrap();
            prop_assert_eq!(check_certificate(&g, &cert), Ok(()));
            let json = serde_json::to_string(&cert).unwrap();
            let back = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(&cert, &back);
            prop_assert_eq!(solve(&g, &t).unwrap(), cert.clone());
            if let Outcome::ToughnessWitness(w) = &cert.outcome {
                prop_assert!(w.ratio < t);
            }
        }
    }
}
