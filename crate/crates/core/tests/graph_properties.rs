use c4flag::graph::{
    canonical_form, catalog, count_induced, count_subgraphs, induced_catalog_counts, named_graph, SmallGraph,
};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = SmallGraph> {
    (0..=max_n).prop_flat_map(|n| any::<u128>().prop_map(move |m| SmallGraph::from_edge_mask(n, m).unwrap()))
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (SmallGraph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let ids: Vec<usize> = (0..g.order()).collect();
        (Just(g), Just(ids).prop_shuffle())
    })
}

fn binomial4(n: u64) -> u64 {
    if n < 4 {
        0
    } else {
        n * (n - 1) * (n - 2) * (n - 3) / 24
    }
}

proptest! {
    #[test]
    fn counts_invariant_under_relabeling((g, perm) in graph_with_perm(6), (h, hperm) in graph_with_perm(4)) {
        prop_assume!(h.order() <= g.order());
        let (g2, h2) = (g.permuted(&perm), h.permuted(&hperm));
        prop_assert_eq!(count_subgraphs(&h, &g).unwrap(), count_subgraphs(&h2, &g2).unwrap());
        prop_assert_eq!(count_induced(&h, &g).unwrap(), count_induced(&h2, &g2).unwrap());
    }

    #[test]
    fn catalog_covers_every_four_subset(g in graph(12)) {
        let counts = induced_catalog_counts(&g);
        prop_assert_eq!(counts.iter().sum::<u64>(), binomial4(g.order() as u64));
    }

    #[test]
    fn catalog_counts_match_direct_counts(g in graph(8)) {
        prop_assume!(g.order() >= 4);
        let counts = induced_catalog_counts(&g);
        for (f, &c) in catalog().iter().zip(&counts) {
            prop_assert_eq!(count_induced(f, &g).unwrap(), c);
        }
    }

    #[test]
    fn c4_count_by_total_probability(g in graph(9)) {
        prop_assume!(g.order() >= 4);
        let c4 = named_graph("C4").unwrap();
        let i = induced_catalog_counts(&g);
        prop_assert_eq!(count_subgraphs(&c4, &g).unwrap(), i[8] + i[9] + 3 * i[10]);
    }

    #[test]
    fn canonical_form_idempotent_and_class_constant((g, perm) in graph_with_perm(9)) {
        let c = canonical_form(&g);
        prop_assert_eq!(canonical_form(&c.graph), c);
        prop_assert_eq!(canonical_form(&g.permuted(&perm)), c);
    }
}
