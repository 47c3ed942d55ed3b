use super::{SmallGraph, MAX_ORDER};
use crate::error::{Error, Result};

fn colorable(g: &SmallGraph, k: usize) -> bool {
    fn assign(g: &SmallGraph, v: usize, k: usize, colors: &mut [usize; MAX_ORDER], used: usize) -> bool {
        if v == g.order() {
            return true;
        }
        // a fresh colour is only tried once, which removes colour symmetry
        for c in 0..k.min(used + 1) {
            if (0..v).all(|u| !g.adjacent(u, v) || colors[u] != c) {
                colors[v] = c;
                if assign(g, v + 1, k, colors, used.max(c + 1)) {
                    return true;
                }
            }
        }
        false
    }
    assign(g, 0, k, &mut [0; MAX_ORDER], 0)
}

pub fn chromatic_number(g: &SmallGraph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    (1..=g.order()).find(|&k| colorable(g, k)).expect("n colours always suffice")
}

/// Some edge whose deletion lowers the chromatic number, if one exists.
pub fn has_color_critical_edge(g: &SmallGraph) -> Result<Option<(usize, usize)>> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let chi = chromatic_number(g);
    Ok(g.edges().find(|&(u, v)| colorable(&g.without_edge(u, v).expect("edge in range"), chi - 1)))
}

/// The blow-up `h(s)`: each vertex replaced by an independent set of size
/// `s`, copies of adjacent vertices fully joined. Copy `i` of vertex `v` is
/// vertex `v * s + i`.
pub fn blow_up(h: &SmallGraph, s: usize) -> Result<SmallGraph> {
    let n = h.order() * s;
    let mut edges = Vec::new();
    for (u, v) in h.edges() {
        for i in 0..s {
            for j in 0..s {
                edges.push((u * s + i, v * s + j));
            }
        }
    }
    SmallGraph::from_edges(n, &edges)
}

/// Whether `f` is a subgraph of `h(s)`, decided as the existence of a
/// homomorphism `f -> h` with every fibre of size at most `s`.
pub fn is_subgraph_of_blowup(f: &SmallGraph, h: &SmallGraph, s: usize) -> bool {
    fn extend(f: &SmallGraph, h: &SmallGraph, s: usize, v: usize, map: &mut [usize; MAX_ORDER], load: &mut [usize; MAX_ORDER]) -> bool {
        if v == f.order() {
            return true;
        }
        for x in 0..h.order() {
            if load[x] == s || (0..v).any(|u| f.adjacent(u, v) && !h.adjacent(map[u], x)) {
                continue;
            }
            map[v] = x;
            load[x] += 1;
            if extend(f, h, s, v + 1, map, load) {
                return true;
            }
            load[x] -= 1;
        }
        false
    }
    if f.order() > h.order() * s {
        return false;
    }
    extend(f, h, s, 0, &mut [0; MAX_ORDER], &mut [0; MAX_ORDER])
}

/// The part decomposition if `g` is complete multipartite, i.e. if
/// non-adjacency is an equivalence relation. Parts are listed by smallest
/// vertex.
pub fn is_complete_multipartite(g: &SmallGraph) -> Option<Vec<Vec<usize>>> {
    let n = g.order();
    let mut part_of = [usize::MAX; MAX_ORDER];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if part_of[v] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (v..n).filter(|&u| u == v || !g.adjacent(u, v)).collect();
        for &u in &members {
            if part_of[u] != usize::MAX {
                return None;
            }
            part_of[u] = parts.len();
        }
        parts.push(members);
    }
    for u in 0..n {
        for w in u + 1..n {
            if (part_of[u] == part_of[w]) == g.adjacent(u, w) {
                return None;
            }
        }
    }
    Some(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cocherry, count_induced, named_graph};

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&SmallGraph::cycle(5).unwrap()), 3);
        assert_eq!(chromatic_number(&SmallGraph::cycle(4).unwrap()), 2);
        assert_eq!(chromatic_number(&SmallGraph::complete(6).unwrap()), 6);
        assert_eq!(chromatic_number(&SmallGraph::empty(3).unwrap()), 1);
    }

    #[test]
    fn color_critical_edges() {
        assert!(has_color_critical_edge(&SmallGraph::complete(4).unwrap()).unwrap().is_some());
        assert!(has_color_critical_edge(&SmallGraph::cycle(4).unwrap()).unwrap().is_none());
        assert!(has_color_critical_edge(&SmallGraph::cycle(5).unwrap()).unwrap().is_some());
        // K4 plus a disjoint triangle: only the K4 edges are critical
        let g = SmallGraph::complete(4).unwrap().disjoint_union(&SmallGraph::complete(3).unwrap()).unwrap();
        let (u, v) = has_color_critical_edge(&g).unwrap().unwrap();
        assert!(u < 4 && v < 4);
        assert_eq!(chromatic_number(&named_graph("diamond").unwrap()), 3);
        assert_eq!(has_color_critical_edge(&SmallGraph::empty(3).unwrap()), Err(Error::Edgeless));
    }

    #[test]
    fn blowups() {
        let k2 = SmallGraph::complete(2).unwrap();
        let b = blow_up(&k2, 2).unwrap();
        assert_eq!(b, SmallGraph::complete_multipartite(&[2, 2]).unwrap());
        assert!(is_subgraph_of_blowup(&SmallGraph::cycle(4).unwrap(), &k2, 2));
        assert!(!is_subgraph_of_blowup(&SmallGraph::cycle(4).unwrap(), &k2, 1));
        assert!(!is_subgraph_of_blowup(&SmallGraph::cycle(5).unwrap(), &k2, 5));
        let k3 = SmallGraph::complete(3).unwrap();
        assert!(is_subgraph_of_blowup(&named_graph("diamond").unwrap(), &k3, 2));
        assert!(blow_up(&k3, 5).unwrap_err().is_size_cap());
        let k4 = SmallGraph::complete(4).unwrap();
        assert!(is_subgraph_of_blowup(&k4, &k4, 2));
        assert!(!is_subgraph_of_blowup(&SmallGraph::complete(5).unwrap(), &k4, 2));
    }

    #[test]
    fn multipartite_iff_no_induced_cocherry() {
        let cc = cocherry();
        for mask in 0u128..1 << 15 {
            let g = SmallGraph::from_edge_mask(6, mask).unwrap();
            let cm = is_complete_multipartite(&g);
            assert_eq!(cm.is_some(), count_induced(&cc, &g).unwrap() == 0, "mask {mask}");
            if let Some(parts) = cm {
                assert_eq!(parts.iter().map(Vec::len).sum::<usize>(), 6);
            }
        }
    }
}
