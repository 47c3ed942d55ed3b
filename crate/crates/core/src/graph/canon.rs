//! Canonical labeling by exhaustive search over vertex orderings.
//!
//! The canonical code of a graph is the lexicographically smallest
//! adjacency string (pairs in graph6 column order) over all orderings in
//! which free vertices appear in nonincreasing degree order. The search
//! fixes positions one at a time, prunes any prefix already larger than the
//! best complete code, and skips a candidate when it is a twin of a
//! candidate already tried at the same position (swapping twins is an
//! automorphism that fixes everything placed so far).

use std::collections::HashMap;
use std::sync::Mutex;

use once_cell::sync::Lazy;

use super::{pair_count, pair_index, SmallGraph, MAX_ORDER};

/// Canonical representative of an isomorphism class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    /// Adjacency code, first pair in the most significant bit.
    pub code: u128,
    pub graph: SmallGraph,
}

fn bit(idx: usize) -> u128 {
    1u128 << (127 - idx)
}

fn prefix_mask(k: usize) -> u128 {
    let bits = pair_count(k);
    if bits == 0 {
        0
    } else {
        !0u128 << (128 - bits)
    }
}

struct Search<'a> {
    g: &'a SmallGraph,
    n: usize,
    fixed: usize,
    perm: [usize; MAX_ORDER],
    best: Option<(u128, [usize; MAX_ORDER])>,
}

impl Search<'_> {
    fn run(&mut self, k: usize, used: u16, partial: u128) {
        if k == self.n {
            if self.best.is_none_or(|(b, _)| partial < b) {
                self.best = Some((partial, self.perm));
            }
            return;
        }
        let candidates: u16 = if k < self.fixed {
            1 << k
        } else {
            let free = !used & (((1u32 << self.n) - 1) as u16);
            let top = (0..self.n)
                .filter(|&v| free >> v & 1 == 1)
                .map(|v| self.g.degree(v))
                .max()
                .unwrap_or(0);
            (0..self.n)
                .filter(|&v| free >> v & 1 == 1 && self.g.degree(v) == top)
                .fold(0, |acc, v| acc | 1 << v)
        };
        let mut tried: u16 = 0;
        for v in 0..self.n {
            if candidates >> v & 1 == 0 {
                continue;
            }
            if k >= self.fixed && (0..self.n).any(|u| tried >> u & 1 == 1 && self.twins(u, v)) {
                continue;
            }
            tried |= 1 << v;
            let mut code = partial;
            for i in 0..k {
                if self.g.adjacent(self.perm[i], v) {
                    code |= bit(pair_index(i, k));
                }
            }
            if let Some((b, _)) = self.best {
                let mask = prefix_mask(k + 1);
                if code & mask > b & mask {
                    continue;
                }
            }
            self.perm[k] = v;
            self.run(k + 1, used | 1 << v, code);
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        (self.g.neighbors(u) & !(1 << v)) == (self.g.neighbors(v) & !(1 << u))
    }
}

/// Canonical ordering of `g` keeping vertices `0..fixed` in place.
///
/// Returns `(code, order)` where `order[i]` is the old vertex placed at
/// position `i`. Two graphs whose first `fixed` vertices are labeled agree
/// on the code iff there is an isomorphism respecting those labels.
pub fn canonical_labeling(g: &SmallGraph, fixed: usize) -> (u128, Vec<usize>) {
    let n = g.order();
    let mut search = Search { g, n, fixed: fixed.min(n), perm: [0; MAX_ORDER], best: None };
    search.run(0, 0, 0);
    let (code, perm) = search.best.expect("at least one ordering");
    (code, perm[..n].to_vec())
}

pub fn canonical_form(g: &SmallGraph) -> CanonicalForm {
    let (code, order) = canonical_labeling(g, 0);
    CanonicalForm { code, graph: g.permuted(&order) }
}

pub fn are_isomorphic(g: &SmallGraph, h: &SmallGraph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_form(g).code == canonical_form(h).code
}

static AUT_CACHE: Lazy<Mutex<HashMap<(usize, u128), u64>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Order of the automorphism group, cached per canonical form.
pub fn automorphism_count(g: &SmallGraph) -> u64 {
    let canon = canonical_form(g);
    let key = (g.order(), canon.code);
    if let Some(&c) = AUT_CACHE.lock().expect("cache lock").get(&key) {
        return c;
    }
    let count = count_automorphisms(&canon.graph);
    AUT_CACHE.lock().expect("cache lock").insert(key, count);
    count
}

fn count_automorphisms(g: &SmallGraph) -> u64 {
    fn extend(g: &SmallGraph, k: usize, image: &mut [usize; MAX_ORDER], used: u16) -> u64 {
        let n = g.order();
        if k == n {
            return 1;
        }
        let mut total = 0;
        for v in 0..n {
            if used >> v & 1 == 1 || g.degree(v) != g.degree(k) {
                continue;
            }
            if (0..k).all(|i| g.adjacent(i, k) == g.adjacent(image[i], v)) {
                image[k] = v;
                total += extend(g, k + 1, image, used | 1 << v);
            }
        }
        total
    }
    extend(g, 0, &mut [0; MAX_ORDER], 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_min_code(g: &SmallGraph) -> u128 {
        // oracle: minimum over all permutations respecting degree order
        let n = g.order();
        let mut best = u128::MAX;
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut |p| {
            if p.windows(2).any(|w| g.degree(w[0]) < g.degree(w[1])) {
                return;
            }
            let mut code = 0u128;
            for j in 1..n {
                for i in 0..j {
                    if g.adjacent(p[i], p[j]) {
                        code |= bit(pair_index(i, j));
                    }
                }
            }
            best = best.min(code);
        });
        best
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn pruned_search_matches_brute_force() {
        for mask in 0u128..(1 << 10) {
            let g = SmallGraph::from_edge_mask(5, mask).unwrap();
            assert_eq!(canonical_form(&g).code, brute_min_code(&g), "mask {mask}");
        }
    }

    #[test]
    fn relabeled_c4_is_isomorphic() {
        let c4 = SmallGraph::cycle(4).unwrap();
        let relabeled = c4.permuted(&[2, 0, 3, 1]);
        assert!(are_isomorphic(&c4, &relabeled));
        let matching = SmallGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!are_isomorphic(&c4, &matching));
    }

    #[test]
    fn automorphism_groups() {
        assert_eq!(automorphism_count(&SmallGraph::cycle(4).unwrap()), 8);
        assert_eq!(automorphism_count(&SmallGraph::complete(4).unwrap()), 24);
        assert_eq!(automorphism_count(&SmallGraph::path(4).unwrap()), 2);
        assert_eq!(automorphism_count(&SmallGraph::complete_multipartite(&[2, 2, 2]).unwrap()), 48);
    }

    #[test]
    fn symmetric_twelve_vertex_graphs_are_fast() {
        for g in [
            SmallGraph::empty(12).unwrap(),
            SmallGraph::complete(12).unwrap(),
            SmallGraph::complete_multipartite(&[4, 4, 4]).unwrap(),
            SmallGraph::cycle(12).unwrap(),
        ] {
            let c = canonical_form(&g);
            assert!(are_isomorphic(&c.graph, &g));
        }
    }

    #[test]
    fn fixed_prefix_distinguishes_labelings() {
        // path 0-1-2 with label on an end vs on the middle
        let p = SmallGraph::path(3).unwrap();
        let (end, _) = canonical_labeling(&p, 1);
        let (mid, _) = canonical_labeling(&p.permuted(&[1, 0, 2]), 1);
        assert_ne!(end, mid);
        let (end2, _) = canonical_labeling(&p.permuted(&[2, 1, 0]), 1);
        assert_eq!(end, end2);
    }
}
