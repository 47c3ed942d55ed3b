//! The eleven 4-vertex graphs `F0..F10`, in the fixed order every density
//! vector in this crate uses as its basis, plus named-graph parsing.

use once_cell::sync::Lazy;

use super::{canonical_form, from_graph6, GraphLike, SmallGraph};
use crate::error::{Error, Result};

pub const CATALOG_SIZE: usize = 11;

pub const CATALOG_NAMES: [&str; CATALOG_SIZE] =
    ["4K1", "K2+2K1", "P3+K1", "K1,3", "K3+K1", "2K2", "paw", "P4", "C4", "diamond", "K4"];

const CATALOG_EDGES: [&[(usize, usize)]; CATALOG_SIZE] = [
    &[],
    &[(0, 1)],
    &[(0, 1), (1, 2)],
    &[(0, 1), (0, 2), (0, 3)],
    &[(0, 1), (1, 2), (0, 2)],
    &[(0, 1), (2, 3)],
    &[(0, 1), (1, 2), (0, 2), (2, 3)],
    &[(0, 1), (1, 2), (2, 3)],
    &[(0, 1), (1, 2), (2, 3), (3, 0)],
    &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
    &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
];

static CATALOG: Lazy<[SmallGraph; CATALOG_SIZE]> = Lazy::new(|| {
    CATALOG_EDGES.map(|edges| SmallGraph::from_edges(4, edges).expect("catalog graph"))
});

/// Catalog index for each of the 64 labeled graphs on four vertices.
static INDEX_BY_MASK: Lazy<[u8; 64]> = Lazy::new(|| {
    let codes: Vec<u128> = CATALOG.iter().map(|g| canonical_form(g).code).collect();
    let mut table = [0u8; 64];
    for (mask, slot) in table.iter_mut().enumerate() {
        let g = SmallGraph::from_edge_mask(4, mask as u128).expect("4 vertices");
        let code = canonical_form(&g).code;
        *slot = codes.iter().position(|&c| c == code).expect("catalog is complete") as u8;
    }
    table
});

pub fn catalog() -> &'static [SmallGraph; CATALOG_SIZE] {
    &CATALOG
}

pub fn catalog_name(i: usize) -> Option<&'static str> {
    CATALOG_NAMES.get(i).copied()
}

/// Index of the catalog entry isomorphic to `g`, if `g` has four vertices.
pub fn catalog_index(g: &SmallGraph) -> Option<usize> {
    (g.order() == 4).then(|| INDEX_BY_MASK[g.edge_mask() as usize] as usize)
}

/// The 3-vertex graph with exactly one edge.
pub fn cocherry() -> SmallGraph {
    SmallGraph::from_edges(3, &[(0, 1)]).expect("3 vertices")
}

/// `N_I(F_i, g)` for every catalog entry, by scanning all 4-subsets.
pub fn induced_catalog_counts<G: GraphLike + ?Sized>(g: &G) -> [u64; CATALOG_SIZE] {
    let n = g.order();
    let mut counts = [0u64; CATALOG_SIZE];
    let table = &*INDEX_BY_MASK;
    for d in 3..n {
        for c in 2..d {
            for b in 1..c {
                for a in 0..b {
                    let mask = usize::from(g.adjacent(a, b))
                        | usize::from(g.adjacent(a, c)) << 1
                        | usize::from(g.adjacent(b, c)) << 2
                        | usize::from(g.adjacent(a, d)) << 3
                        | usize::from(g.adjacent(b, d)) << 4
                        | usize::from(g.adjacent(c, d)) << 5;
                    counts[table[mask] as usize] += 1;
                }
            }
        }
    }
    counts
}

fn parse_usize(s: &str) -> Option<usize> {
    s.parse().ok()
}

/// Resolves a graph name. Accepted forms: catalog names and `F0`..`F10`,
/// `C4`, `K4`, `diamond`, `paw`, `cocherry`, `cherry`, `claw`, `matching`,
/// `K<n>`, `C<n>`, `P<n>` (path on n vertices), `E<n>` (edgeless),
/// `K<a>,<b>,...` (complete multipartite) and `T<r>(<n>)` (Turán graph).
pub fn named_graph(name: &str) -> Result<SmallGraph> {
    let s = name.trim();
    let unknown = || Error::Parse(format!("unknown graph name {s:?}"));
    if let Some(i) = CATALOG_NAMES.iter().position(|&c| c == s) {
        return Ok(CATALOG[i]);
    }
    match s {
        "diamond" => return Ok(CATALOG[9]),
        "paw" => return Ok(CATALOG[6]),
        "claw" | "star" => return Ok(CATALOG[3]),
        "matching" => return Ok(CATALOG[5]),
        "cocherry" => return Ok(cocherry()),
        "cherry" => return SmallGraph::path(3),
        _ => {}
    }
    if let Some(i) = s.strip_prefix('F').and_then(parse_usize) {
        return CATALOG.get(i).copied().ok_or_else(unknown);
    }
    if let Some(rest) = s.strip_prefix('T') {
        let inner = rest.strip_suffix(')').and_then(|r| r.split_once('(')).ok_or_else(unknown)?;
        let (r, n) = (parse_usize(inner.0).ok_or_else(unknown)?, parse_usize(inner.1).ok_or_else(unknown)?);
        if r == 0 || n < r {
            return Err(Error::OutOfRange(format!("Turán graph needs n >= r >= 1, got r={r}, n={n}")));
        }
        let parts: Vec<usize> = (0..r).map(|i| n / r + usize::from(i < n % r)).collect();
        return SmallGraph::complete_multipartite(&parts);
    }
    if let Some(rest) = s.strip_prefix('K') {
        if rest.contains(',') {
            let parts: Option<Vec<usize>> = rest.split(',').map(|p| parse_usize(p.trim())).collect();
            return SmallGraph::complete_multipartite(&parts.ok_or_else(unknown)?);
        }
        return SmallGraph::complete(parse_usize(rest).ok_or_else(unknown)?);
    }
    if let Some(n) = s.strip_prefix('C').and_then(parse_usize) {
        return SmallGraph::cycle(n);
    }
    if let Some(n) = s.strip_prefix('P').and_then(parse_usize) {
        return SmallGraph::path(n);
    }
    if let Some(n) = s.strip_prefix('E').and_then(parse_usize) {
        return SmallGraph::empty(n);
    }
    Err(unknown())
}

/// A graph given either by name (see [`named_graph`]) or in graph6.
pub fn parse_graph(s: &str) -> Result<SmallGraph> {
    match named_graph(s) {
        Ok(g) => Ok(g),
        Err(e @ (Error::OrderTooLarge { .. } | Error::OutOfRange(_))) => Err(e),
        Err(_) => from_graph6(s),
    }
}
