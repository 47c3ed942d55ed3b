use std::collections::BTreeMap;

use super::{canonical_form, catalog, catalog_index, SmallGraph};
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_ORDER: usize = 7;

/// One representative per isomorphism class on `k` vertices, each in
/// canonical form and sorted by canonical code. For `k = 4` the list is the
/// catalog `F0..F10` in index order.
pub fn enumerate_graphs(k: usize) -> Result<Vec<SmallGraph>> {
    if k > MAX_ENUMERATION_ORDER {
        return Err(Error::OutOfRange(format!("enumerate_graphs supports k <= {MAX_ENUMERATION_ORDER}, got {k}")));
    }
    let mut level = vec![SmallGraph::empty(0)?];
    for n in 1..=k {
        let mut next = BTreeMap::new();
        for g in &level {
            for nbrs in 0u16..1 << (n - 1) {
                let mut h = SmallGraph::empty(n)?;
                for (u, v) in g.edges() {
                    h = h.with_edge(u, v)?;
                }
                for u in (0..n - 1).filter(|u| nbrs >> u & 1 == 1) {
                    h = h.with_edge(u, n - 1)?;
                }
                let c = canonical_form(&h);
                next.entry(c.code).or_insert(c.graph);
            }
        }
        level = next.into_values().collect();
    }
    if k == 4 {
        let mut by_catalog = vec![None; catalog().len()];
        for g in level {
            by_catalog[catalog_index(&g).expect("order 4")] = Some(g);
        }
        level = by_catalog.into_iter().map(|g| g.expect("catalog is complete")).collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;
    use std::collections::BTreeSet;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=7).map(|k| enumerate_graphs(k).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
        assert!(enumerate_graphs(8).is_err());
    }

    #[test]
    fn five_vertices_match_labeled_canonicalization() {
        let all: BTreeSet<u128> =
            (0u128..1 << 10).map(|m| canonical_form(&SmallGraph::from_edge_mask(5, m).unwrap()).code).collect();
        let listed: Vec<u128> = enumerate_graphs(5).unwrap().iter().map(|g| canonical_form(g).code).collect();
        assert_eq!(listed, all.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn four_vertices_in_catalog_order() {
        for (g, f) in enumerate_graphs(4).unwrap().iter().zip(catalog()) {
            assert!(are_isomorphic(g, f));
        }
    }
}
