//! Simple graphs on at most [`MAX_ORDER`] vertices.
//!
//! Adjacency is stored as one `u16` bit row per vertex, so neighbourhood
//! intersections used by the counting kernels are single instructions.
//! Pairs are indexed in graph6 column order: `(i, j)` with `i < j` has index
//! `j (j - 1) / 2 + i`.

mod canon;
mod catalog;
mod color;
mod count;
mod enumerate;
mod graph6;
mod host;

use std::fmt;

pub use canon::{are_isomorphic, automorphism_count, canonical_form, canonical_labeling, CanonicalForm};
pub use catalog::{
    catalog, catalog_index, catalog_name, cocherry, induced_catalog_counts, named_graph, parse_graph,
    CATALOG_NAMES, CATALOG_SIZE,
};
pub use color::{
    blow_up, chromatic_number, has_color_critical_edge, is_complete_multipartite, is_subgraph_of_blowup,
};
pub use count::{contains_subgraph, count_induced, count_injections, count_subgraphs, density};
pub use enumerate::enumerate_graphs;
pub use graph6::{from_graph6, to_graph6};
pub use host::{GraphLike, HostGraph};

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 12;

/// Index of the unordered pair `{i, j}` in graph6 column order.
pub fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    j * (j - 1) / 2 + i
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallGraph {
    n: u8,
    rows: [u16; MAX_ORDER],
}

impl SmallGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: n, cap: MAX_ORDER });
        }
        Ok(SmallGraph { n: n as u8, rows: [0; MAX_ORDER] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.set_edge(u, v, true)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency bit rows; the rows must describe a
    /// symmetric irreflexive relation on `n` vertices.
    pub fn from_rows(n: usize, rows: &[u16]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        if rows.len() != n {
            return Err(Error::Precondition("row count differs from order".into()));
        }
        for (u, &row) in rows.iter().enumerate() {
            if row >> n != 0 {
                return Err(Error::VertexOutOfRange { vertex: 15 - row.leading_zeros() as usize, order: n });
            }
            if row >> u & 1 == 1 {
                return Err(Error::SelfLoop(u));
            }
            g.rows[u] = row;
        }
        for u in 0..n {
            for v in 0..n {
                if g.adjacent(u, v) != g.adjacent(v, u) {
                    return Err(Error::Precondition("adjacency is not symmetric".into()));
                }
            }
        }
        Ok(g)
    }

    /// Graph whose edge set is read from `mask` in pair-index order.
    pub fn from_edge_mask(n: usize, mask: u128) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for j in 1..n {
            for i in 0..j {
                if mask >> pair_index(i, j) & 1 == 1 {
                    g.rows[i] |= 1 << j;
                    g.rows[j] |= 1 << i;
                }
            }
        }
        Ok(g)
    }

    pub fn edge_mask(&self) -> u128 {
        let mut mask = 0u128;
        for (i, j) in self.edges() {
            mask |= 1 << pair_index(i, j);
        }
        mask
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let all = ((1u32 << n) - 1) as u16;
        for u in 0..n {
            g.rows[u] = all & !(1 << u);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::OutOfRange(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    /// Complete multipartite graph with the given class sizes; class `c`
    /// occupies a contiguous block of vertices in input order.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        let n: usize = parts.iter().sum();
        let mut g = Self::empty(n)?;
        let mut class = Vec::with_capacity(n);
        for (c, &p) in parts.iter().enumerate() {
            class.extend(std::iter::repeat(c).take(p));
        }
        for u in 0..n {
            for v in u + 1..n {
                if class[u] != class[v] {
                    g.rows[u] |= 1 << v;
                    g.rows[v] |= 1 << u;
                }
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.rows[u] >> v & 1 == 1
    }

    /// Neighbourhood of `u` as a bit set.
    pub fn neighbors(&self, u: usize) -> u16 {
        self.rows[u]
    }

    pub fn rows(&self) -> &[u16] {
        &self.rows[..self.order()]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].count_ones() as usize
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|u| self.degree(u)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| (u + 1..self.order()).filter(move |&v| self.adjacent(u, v)).map(move |v| (u, v)))
    }

    fn set_edge(&mut self, u: usize, v: usize, present: bool) -> Result<()> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, order: n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if present {
            self.rows[u] |= 1 << v;
            self.rows[v] |= 1 << u;
        } else {
            self.rows[u] &= !(1 << v);
            self.rows[v] &= !(1 << u);
        }
        Ok(())
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = *self;
        g.set_edge(u, v, true)?;
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = *self;
        g.set_edge(u, v, false)?;
        Ok(g)
    }

    pub fn complement(&self) -> Self {
        let n = self.order();
        let all = ((1u32 << n) - 1) as u16;
        let mut g = *self;
        for u in 0..n {
            g.rows[u] = all & !self.rows[u] & !(1 << u);
        }
        g
    }

    /// Subgraph induced on `verts`; vertex `i` of the result is `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Self {
        let mut g = SmallGraph { n: verts.len() as u8, rows: [0; MAX_ORDER] };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.adjacent(u, v) {
                    g.rows[i] |= 1 << j;
                }
            }
        }
        g
    }

    /// Relabeled copy in which new vertex `i` is old vertex `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        debug_assert_eq!(order.len(), self.order());
        self.induced(order)
    }

    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        let n = self.order();
        let mut g = Self::empty(n + other.order())?;
        g.rows[..n].copy_from_slice(self.rows());
        for (u, &row) in other.rows().iter().enumerate() {
            g.rows[n + u] = row << n;
        }
        Ok(g)
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph({}, {:?})", self.order(), self.edges().collect::<Vec<_>>())
    }
}

impl fmt::Display for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_oversized_and_malformed() {
        assert!(SmallGraph::empty(13).is_err());
        assert!(SmallGraph::from_edges(3, &[(0, 0)]).is_err());
        assert!(SmallGraph::from_edges(3, &[(0, 3)]).is_err());
        assert!(SmallGraph::from_rows(2, &[0b10, 0]).is_err());
        assert!(SmallGraph::from_rows(2, &[0b10, 0b01]).is_ok());
    }

    #[test]
    fn edge_mask_roundtrip() {
        let g = SmallGraph::cycle(5).unwrap();
        assert_eq!(SmallGraph::from_edge_mask(5, g.edge_mask()).unwrap(), g);
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn multipartite_structure() {
        let g = SmallGraph::complete_multipartite(&[2, 2, 2]).unwrap();
        assert_eq!(g.edge_count(), 12);
        assert!(!g.adjacent(0, 1));
        assert!(g.adjacent(0, 2));
        assert_eq!(g.complement().edge_count(), 3);
    }

    #[test]
    fn union_and_induced() {
        let k4 = SmallGraph::complete(4).unwrap();
        let k3 = SmallGraph::complete(3).unwrap();
        let g = k4.disjoint_union(&k3).unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g.induced(&[4, 5, 6]), k3);
        assert!(!g.adjacent(3, 4));
    }
}
