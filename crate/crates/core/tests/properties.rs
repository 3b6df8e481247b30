mod common;

use idom::labeling::{
    is_dominating, is_idf, is_rdf, normalize_false_twin, normalize_pendant, normalize_true_twin, PendantReassignment,
};
use idom::operators::{add_false_twin, add_true_twin, corona};
use idom::solver::{enumerate_minimum_idfs, gamma_domination, gamma_italian, gamma_roman};
use idom::{Graph, Labeling, TwinRelation};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn arb_graph_and_labeling(max_n: usize) -> impl Strategy<Value = (Graph, Labeling)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(0u8..=2, n).prop_map(|v| Labeling::new(v).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        let g6 = g.to_graph6();
        prop_assert_eq!(Graph::parse_auto(&g6).unwrap(), g.clone());
        let text = idom::graph::encode_edge_list(&g);
        prop_assert_eq!(Graph::parse_auto(&text).unwrap(), g);
    }

    #[test]
    fn degree_sum_is_twice_edges(g in arb_graph(20)) {
        let sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn twin_relation_is_symmetric(g in arb_graph(10)) {
        for u in 0..g.n() {
            for v in 0..g.n() {
                if u != v {
                    prop_assert_eq!(g.twin_relation(u, v).unwrap(), g.twin_relation(v, u).unwrap());
                }
            }
        }
    }

    #[test]
    fn roman_implies_italian((g, f) in arb_graph_and_labeling(10)) {
        if is_rdf(&g, &f).unwrap() {
            prop_assert!(is_idf(&g, &f).unwrap());
        }
    }

    #[test]
    fn positive_support_of_an_idf_dominates((g, f) in arb_graph_and_labeling(10)) {
        if is_idf(&g, &f).unwrap() {
            let [_, ones, twos] = f.v_partition();
            let support: Vec<usize> = ones.into_iter().chain(twos).collect();
            prop_assert!(is_dominating(&g, &support).unwrap());
        }
    }

    #[test]
    fn corona_sizes(g in arb_graph(6), h in arb_graph(5)) {
        let (p, _) = corona(&g, &h).unwrap();
        prop_assert_eq!(p.n(), g.n() * (1 + h.n()));
        prop_assert_eq!(p.edge_count(), g.edge_count() + g.n() * (h.edge_count() + h.n()));
    }

    #[test]
    fn twin_addition_makes_twins(g in arb_graph(8), pick in any::<prop::sample::Index>()) {
        let u = pick.index(g.n());
        let t = add_true_twin(&g, u).unwrap();
        prop_assert_eq!(t.twin_relation(u, g.n()).unwrap(), TwinRelation::True);
        let f = add_false_twin(&g, u).unwrap();
        prop_assert_eq!(f.twin_relation(u, g.n()).unwrap(), TwinRelation::False);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn sandwich_chain(g in arb_graph(12)) {
        let d = gamma_domination(&g).unwrap().value;
        let i = gamma_italian(&g).unwrap().value;
        let r = gamma_roman(&g).unwrap().value;
        prop_assert!(d <= i && i <= r && r <= 2 * d, "{} {} {} on {}", d, i, r, g.to_graph6());
    }

    #[test]
    fn normalizations_keep_minimum_idfs(g in arb_graph(7)) {
        let minimum = enumerate_minimum_idfs(&g).unwrap();
        for f in &minimum {
            for u in g.pendant_vertices() {
                for variant in [PendantReassignment::MoveToSupport, PendantReassignment::Split] {
                    let h = normalize_pendant(&g, f, u, variant).unwrap();
                    prop_assert!(h.get(u) != 2 && h.weight() == f.weight() && is_idf(&g, &h).unwrap());
                }
            }
            for u in 0..g.n() {
                for u2 in (0..g.n()).filter(|&v| v != u) {
                    match g.twin_relation(u, u2).unwrap() {
                        TwinRelation::True => {
                            let h = normalize_true_twin(&g, f, u, u2).unwrap();
                            prop_assert!(h.get(u2) == 0 && h.weight() == f.weight() && is_idf(&g, &h).unwrap());
                        }
                        TwinRelation::False => {
                            let h = normalize_false_twin(&g, f, u, u2).unwrap();
                            prop_assert!(h.get(u2) != 2 && h.weight() == f.weight() && is_idf(&g, &h).unwrap());
                        }
                        TwinRelation::NotTwins => {}
                    }
                }
            }
        }
    }

    #[test]
    fn solver_agrees_with_oracle(g in arb_graph(8)) {
        let a = common::Adj::of(&g);
        prop_assert_eq!(gamma_italian(&g).unwrap().value, common::gamma_italian(&a));
        prop_assert_eq!(gamma_roman(&g).unwrap().value, common::gamma_roman(&a));
    }
}

#[test]
fn disjoint_union_additivity_up_to_twelve() {
    let mut state = 0xd15c_u64;
    for n in 2..=12 {
        let split = n / 2;
        let left = Graph::from_edge_list(split, &common::random_edges(&mut state, split, 500)).unwrap();
        let right = Graph::from_edge_list(n - split, &common::random_edges(&mut state, n - split, 500)).unwrap();
        let both = left.disjoint_union(&right).unwrap();
        assert_eq!(both.n(), n);
        assert_eq!(
            gamma_italian(&both).unwrap().value,
            gamma_italian(&left).unwrap().value + gamma_italian(&right).unwrap().value
        );
    }
}
