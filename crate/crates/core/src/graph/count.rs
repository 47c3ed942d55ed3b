use super::{automorphism_count, SmallGraph, MAX_ORDER};
use crate::arith::{binomial_u64, BigRational};
use crate::error::{Error, Result};

/// Pattern vertices in an order where each vertex has as many earlier
/// neighbours as possible, so candidate sets shrink quickly.
fn search_order(h: &SmallGraph) -> Vec<usize> {
    let n = h.order();
    let mut order = Vec::with_capacity(n);
    let mut placed: u16 = 0;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((h.neighbors(v) & placed).count_ones(), h.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        order.push(next);
        placed |= 1 << next;
    }
    order
}

struct Matcher<'a> {
    h: &'a SmallGraph,
    g: &'a SmallGraph,
    order: Vec<usize>,
    image: [usize; MAX_ORDER],
    induced: bool,
    stop_at_first: bool,
}

impl Matcher<'_> {
    fn run(&mut self, t: usize, used: u16) -> u64 {
        if t == self.order.len() {
            return 1;
        }
        let u = self.order[t];
        let all = ((1u32 << self.g.order()) - 1) as u16;
        let mut cand = all & !used;
        for &w in &self.order[..t] {
            let nw = self.g.neighbors(self.image[w]);
            if self.h.adjacent(u, w) {
                cand &= nw;
            } else if self.induced {
                cand &= !nw;
            }
        }
        let mut total = 0;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.image[u] = v;
            total += self.run(t + 1, used | 1 << v);
            if self.stop_at_first && total > 0 {
                return total;
            }
        }
        total
    }
}

fn check_sizes(h: &SmallGraph, g: &SmallGraph) -> Result<()> {
    if h.order() > g.order() {
        return Err(Error::PatternTooLarge { pattern: h.order(), host: g.order() });
    }
    Ok(())
}

/// Number of injective maps `V(h) -> V(g)` sending edges to edges (and, when
/// `induced`, non-edges to non-edges).
pub fn count_injections(h: &SmallGraph, g: &SmallGraph, induced: bool) -> Result<u64> {
    check_sizes(h, g)?;
    let mut m = Matcher { h, g, order: search_order(h), image: [0; MAX_ORDER], induced, stop_at_first: false };
    Ok(m.run(0, 0))
}

/// `N(h, g)`: copies of `h` in `g` as (not necessarily induced) subgraphs.
pub fn count_subgraphs(h: &SmallGraph, g: &SmallGraph) -> Result<u64> {
    Ok(count_injections(h, g, false)? / automorphism_count(h))
}

/// `N_I(h, g)`: vertex subsets of `g` inducing a copy of `h`.
pub fn count_induced(h: &SmallGraph, g: &SmallGraph) -> Result<u64> {
    Ok(count_injections(h, g, true)? / automorphism_count(h))
}

/// `d(h, g)` or, when `induced`, `P(h, g)`, normalized by `C(n(g), n(h))`.
pub fn density(h: &SmallGraph, g: &SmallGraph, induced: bool) -> Result<BigRational> {
    let count = if induced { count_induced(h, g)? } else { count_subgraphs(h, g)? };
    let total = binomial_u64(g.order() as u64, h.order() as u64);
    Ok(BigRational::new(count.into(), total.into()))
}

/// Whether `g` contains `f` as a (not necessarily induced) subgraph.
pub fn contains_subgraph(f: &SmallGraph, g: &SmallGraph) -> bool {
    if f.order() > g.order() || f.edge_count() > g.edge_count() {
        return false;
    }
    let mut m = Matcher { h: f, g, order: search_order(f), image: [0; MAX_ORDER], induced: false, stop_at_first: true };
    m.run(0, 0) > 0
}
