use std::collections::HashSet;

use potseq::oracle::{
    enumerate_realizations, is_potentially_with, sigma_exact, Prefilter, SigmaOptions,
};
use potseq::{
    enumerate_graphical_sequences, DegreeSequence, MultipartiteSpec, SimpleGraph, WitnessSpec,
};
use proptest::prelude::*;

fn graph_strategy(max_order: usize) -> impl Strategy<Value = SimpleGraph> {
    (0..=max_order).prop_flat_map(|n| {
        let slots = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), slots).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
            let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
            SimpleGraph::from_edges(n, edges).unwrap()
        })
    })
}

/// Every injective map from target to host, checked edge by edge.
fn embeds_by_brute_force(host: &SimpleGraph, target: &SimpleGraph) -> bool {
    fn extend(host: &SimpleGraph, target: &SimpleGraph, image: &mut Vec<usize>) -> bool {
        let k = image.len();
        if k == target.order() {
            return target
                .edges()
                .all(|(u, v)| host.has_edge(image[u], image[v]));
        }
        for h in 0..host.order() {
            if image.contains(&h) {
                continue;
            }
            image.push(h);
            if extend(host, target, image) {
                return true;
            }
            image.pop();
        }
        false
    }
    target.order() <= host.order() && extend(host, target, &mut Vec::new())
}

fn part_vectors(max_total: usize) -> Vec<MultipartiteSpec> {
    fn rec(left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for p in (1..=cap.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(max_total, max_total, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .map(|p| MultipartiteSpec::new(p).unwrap())
        .collect()
}

proptest! {
    #[test]
    fn graphicality_ignores_input_order(mut raw in proptest::collection::vec(0i64..8, 0..9), seed in any::<u64>()) {
        let sorted = DegreeSequence::normalize(raw.clone()).unwrap();
        let len = raw.len();
        if len > 1 {
            raw.rotate_left((seed as usize) % len);
            raw.swap(0, (seed as usize / 7) % len);
        }
        let shuffled = DegreeSequence::normalize(raw).unwrap();
        prop_assert_eq!(sorted.is_graphical(), shuffled.is_graphical());
        prop_assert_eq!(sorted, shuffled);
    }

    #[test]
    fn degree_sequences_of_graphs_realize_exactly(g in graph_strategy(9)) {
        let s = g.degree_sequence();
        prop_assert_eq!(s.sum(), 2 * g.edge_count());
        prop_assert!(s.is_graphical());
        let r = s.realize().unwrap();
        prop_assert_eq!(r.degrees(), s.degrees().to_vec());
    }

    #[test]
    fn join_adds_orders(a in graph_strategy(5), b in graph_strategy(5)) {
        let j = a.join(&b);
        let mut expected: Vec<usize> = a.degrees().iter().map(|d| d + b.order()).collect();
        expected.extend(b.degrees().iter().map(|d| d + a.order()));
        prop_assert_eq!(j.degree_sequence(), DegreeSequence::from_degrees(expected));
        prop_assert_eq!(j.edge_count(), a.edge_count() + b.edge_count() + a.order() * b.order());
        let u = a.disjoint_union(&b);
        prop_assert_eq!(u.order(), a.order() + b.order());
        prop_assert_eq!(u.edge_count(), a.edge_count() + b.edge_count());
    }

    #[test]
    fn containment_matches_brute_force(host in graph_strategy(7), target in graph_strategy(5)) {
        prop_assert_eq!(host.contains_subgraph(&target), embeds_by_brute_force(&host, &target));
    }

    #[test]
    fn containment_is_reflexive(g in graph_strategy(8)) {
        prop_assert!(g.contains_subgraph(&g));
        if g.order() >= 1 {
            prop_assert!(g.contains_subgraph(&SimpleGraph::empty(1)));
        }
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(12)) {
        prop_assert_eq!(SimpleGraph::from_graph6(&g.to_graph6()).unwrap(), g);
    }
}

#[test]
fn graphical_iff_realizable_iff_enumerated() {
    for n in 1..=7 {
        let listed: HashSet<DegreeSequence> = enumerate_graphical_sequences(n, None).collect();
        let mut stack = vec![vec![]];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == n {
                let s = DegreeSequence::from_degrees(prefix);
                let graphical = s.is_graphical();
                assert_eq!(graphical, s.realize().is_ok(), "{s}");
                assert_eq!(graphical, listed.contains(&s), "{s}");
                continue;
            }
            let cap = prefix.last().copied().unwrap_or(n - 1);
            for d in 0..=cap {
                let mut next = prefix.clone();
                next.push(d);
                stack.push(next);
            }
        }
    }
}

#[test]
fn multipartite_degree_sequences() {
    for parts in part_vectors(8) {
        assert_eq!(
            parts.complete_multipartite().degree_sequence(),
            parts.degree_sequence(),
            "{parts}"
        );
    }
}

#[test]
fn realizations_are_distinct_and_correctly_labelled() {
    for s in enumerate_graphical_sequences(6, None) {
        let all = enumerate_realizations(&s).unwrap();
        let distinct: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), all.len(), "{s}");
        for g in &all {
            assert_eq!(g.degrees(), s.degrees().to_vec());
        }
    }
}

#[test]
fn dominance_prefilter_is_sound() {
    for parts in part_vectors(4) {
        let target = parts.complete_multipartite();
        for n in parts.total()..=6 {
            for s in enumerate_graphical_sequences(n, None) {
                if is_potentially_with(&s, &target, Prefilter::Off).unwrap() {
                    assert!(
                        potseq::dominance_check(&s, &parts).unwrap(),
                        "{s} is potentially K_{{{parts}}} but fails dominance"
                    );
                }
            }
        }
    }
}

#[test]
fn sigma_records_are_internally_consistent() {
    let targets = [
        SimpleGraph::complete(3),
        MultipartiteSpec::new(vec![2, 1])
            .unwrap()
            .complete_multipartite(),
        MultipartiteSpec::new(vec![2, 2])
            .unwrap()
            .complete_multipartite(),
    ];
    for target in &targets {
        for n in target.order()..=6 {
            let r = sigma_exact(target, n, &SigmaOptions::default()).unwrap();
            let extremal = r.extremal.clone().unwrap();
            assert_eq!(extremal.sum() + 2, r.value);
            assert!(!is_potentially_with(&extremal, target, Prefilter::Off).unwrap());
            for s in enumerate_graphical_sequences(n, Some(r.value)) {
                assert!(
                    is_potentially_with(&s, target, Prefilter::Off).unwrap(),
                    "{s}"
                );
            }
        }
    }
}

#[test]
fn witness_invariants_up_to_twelve() {
    for parts in part_vectors(7).into_iter().filter(|p| p.t() >= 2) {
        let target = parts.complete_multipartite();
        for i in 2..=parts.t() {
            for n in parts.total()..=12 {
                let spec = WitnessSpec::new(parts.clone(), i, n).unwrap();
                let g = spec.build().expect("cycles are always available");
                let s = spec.sequence();
                assert_eq!(g.degree_sequence(), s, "{parts} i={i} n={n}");
                assert_eq!(s.sum() as i64 + 2, spec.bound());
                assert!(s.is_graphical());
                assert!(!potseq::dominance_check(&s, &parts).unwrap());
                assert!(!g.contains_subgraph(&target));
            }
        }
    }
}

#[test]
fn bound_specializations() {
    for order in 2..=9usize {
        for n in order..=20usize {
            let parts = MultipartiteSpec::new(vec![1; order]).unwrap();
            let (kk, nn) = (order as i64, n as i64);
            assert_eq!(
                WitnessSpec::new(parts, 2, n).unwrap().bound(),
                (kk - 2) * (2 * nn - kk + 1) + 2
            );
        }
    }
    for n in 7..=40i64 {
        let parts = MultipartiteSpec::new(vec![2, 1, 1]).unwrap();
        assert_eq!(
            WitnessSpec::new(parts, 2, n as usize).unwrap().bound(),
            2 * ((3 * n - 1) / 2)
        );
    }
}
