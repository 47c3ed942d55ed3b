use super::SmallGraph;
use crate::error::{Error, Result};

/// Read-only adjacency access shared by [`SmallGraph`] and [`HostGraph`].
pub trait GraphLike {
    fn order(&self) -> usize;
    fn adjacent(&self, u: usize, v: usize) -> bool;

    /// Induced subgraph on at most 12 vertices, vertex `i` being `verts[i]`.
    fn induced_small(&self, verts: &[usize]) -> SmallGraph {
        let edges: Vec<(usize, usize)> = (0..verts.len())
            .flat_map(|i| (i + 1..verts.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| self.adjacent(verts[i], verts[j]))
            .collect();
        SmallGraph::from_edges(verts.len(), &edges).expect("induced subgraph within cap")
    }
}

impl GraphLike for SmallGraph {
    fn order(&self) -> usize {
        SmallGraph::order(self)
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        SmallGraph::adjacent(self, u, v)
    }

    fn induced_small(&self, verts: &[usize]) -> SmallGraph {
        self.induced(verts)
    }
}

/// A graph on up to 64 vertices, used as the host for density evaluation
/// where patterns stay small but the host must be larger than the
/// [`SmallGraph`] cap.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HostGraph {
    rows: Vec<u64>,
}

impl HostGraph {
    pub const MAX_ORDER: usize = 64;

    pub fn empty(n: usize) -> Result<Self> {
        if n > Self::MAX_ORDER {
            return Err(Error::OrderTooLarge { order: n, cap: Self::MAX_ORDER });
        }
        Ok(HostGraph { rows: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.set_edge(u, v, true)?;
        }
        Ok(g)
    }

    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        let n: usize = parts.iter().sum();
        let mut g = Self::empty(n)?;
        let class: Vec<usize> = parts.iter().enumerate().flat_map(|(c, &p)| std::iter::repeat(c).take(p)).collect();
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

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) -> Result<()> {
        let n = self.rows.len();
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

    pub fn toggle_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let present = self.adjacent(u, v);
        self.set_edge(u, v, !present)
    }

    pub fn neighbors(&self, u: usize) -> u64 {
        self.rows[u]
    }
}

impl GraphLike for HostGraph {
    fn order(&self) -> usize {
        self.rows.len()
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        u < self.rows.len() && self.rows[u] >> v & 1 == 1
    }
}

impl From<&SmallGraph> for HostGraph {
    fn from(g: &SmallGraph) -> Self {
        HostGraph { rows: g.rows().iter().map(|&r| u64::from(r)).collect() }
    }
}
