//! Exhaustive search over labeled graphs on at most eight vertices.
//!
//! Every labeled graph on `n` vertices is an edge mask below `2^C(n,2)`.
//! The mask range is cut into fixed chunks; each chunk yields its local
//! maximum and the canonical forms attaining it, and chunk results merge
//! by (max, union) so the outcome does not depend on chunking or thread
//! count. No pruning is done: every mask is visited.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    are_isomorphic, canonical_form, cocherry, count_induced, count_subgraphs, contains_subgraph, pair_count,
    to_graph6, SmallGraph,
};
use crate::multipartite::{c4_count, k4_count, PartProfile};

/// Largest order scanned without [`SearchOptions::allow_n8`].
pub const DEFAULT_MAX_N: usize = 7;
pub const MAX_N: usize = 8;
const CHUNK_BITS: u32 = 16;
const CHECKPOINT_EVERY: usize = 64;
/// Raw witnesses kept per chunk before they are folded into canonical forms.
const RAW_WITNESS_LIMIT: usize = 1 << 14;

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Checkpoint file, read on start and rewritten as chunks finish.
    pub resume: Option<PathBuf>,
    /// Permits `n = 8` (2^28 graphs).
    pub allow_n8: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub n: usize,
    pub target: String,
    pub forbidden: String,
    pub maximum: u64,
    /// Canonical graph6 strings, sorted.
    pub witnesses: Vec<String>,
    pub scanned: u64,
    pub elapsed_seconds: f64,
}

/// Rows of the graph with edge mask `mask`, pairs in graph6 column order.
fn rows_from_mask(n: usize, mask: u64) -> [u16; 8] {
    let mut rows = [0u16; 8];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> idx & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            idx += 1;
        }
    }
    rows
}

fn check_order(n: usize, allow_n8: bool) -> Result<()> {
    if n > MAX_N {
        return Err(Error::OrderTooLarge { order: n, cap: MAX_N });
    }
    if n == MAX_N && !allow_n8 {
        return Err(Error::OutOfRange(
            "n = 8 scans 2^28 graphs (several minutes on 8 cores); enable it explicitly".into(),
        ));
    }
    Ok(())
}

fn total_masks(n: usize) -> u64 {
    1u64 << pair_count(n)
}

/// Visits every labeled graph on `n` vertices whose edge mask lies in
/// `range`; returns the number visited.
pub fn enumerate_range(n: usize, range: std::ops::Range<u64>, mut visit: impl FnMut(&SmallGraph)) -> Result<u64> {
    check_order(n, true)?;
    let end = range.end.min(total_masks(n));
    let mut visited = 0;
    for mask in range.start..end {
        let rows = rows_from_mask(n, mask);
        let g = SmallGraph::from_rows(n, &rows[..n])?;
        visit(&g);
        visited += 1;
    }
    Ok(visited)
}

/// Visits all `2^C(n,2)` labeled graphs on `n <= 8` vertices.
pub fn enumerate_labeled(n: usize, visit: impl FnMut(&SmallGraph)) -> Result<u64> {
    enumerate_range(n, 0..total_masks(n), visit)
}

fn c4_kernel(rows: &[u16]) -> u64 {
    let mut twice = 0u64;
    for u in 0..rows.len() {
        for v in u + 1..rows.len() {
            let c = (rows[u] & rows[v]).count_ones() as u64;
            twice += c * c.saturating_sub(1) / 2;
        }
    }
    twice / 2
}

fn k4_kernel(rows: &[u16]) -> u64 {
    let mut total = 0u64;
    for u in 0..rows.len() {
        let mut nu = rows[u] & !((2u16 << u) - 1);
        while nu != 0 {
            let v = nu.trailing_zeros() as usize;
            nu &= nu - 1;
            let mut w = rows[u] & rows[v] & !((2u16 << v) - 1);
            while w != 0 {
                let x = w.trailing_zeros() as usize;
                w &= w - 1;
                total += (rows[x] & w).count_ones() as u64;
            }
        }
    }
    total
}

/// Whether the vertices in `cand` contain a clique of size `k`.
fn has_clique(rows: &[u16], cand: u16, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < k {
        return false;
    }
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if has_clique(rows, rest & rows[v], k - 1) {
            return true;
        }
    }
    false
}

/// A counted or forbidden pattern, with fast paths for C4 and cliques.
#[derive(Clone, Debug)]
pub enum Pattern {
    C4,
    K4,
    Clique(usize),
    Graph(SmallGraph),
}

impl Pattern {
    pub fn from_graph(g: &SmallGraph) -> Self {
        if g.order() == 4 && are_isomorphic(g, &SmallGraph::cycle(4).expect("C4")) {
            Pattern::C4
        } else if g.order() == 4 && g.edge_count() == 6 {
            Pattern::K4
        } else if g.order() > 0 && g.edge_count() == pair_count(g.order()) {
            Pattern::Clique(g.order())
        } else {
            Pattern::Graph(*g)
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Pattern::C4 | Pattern::K4 => 4,
            Pattern::Clique(k) => *k,
            Pattern::Graph(g) => g.order(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Pattern::C4 => "C4".into(),
            Pattern::K4 => "K4".into(),
            Pattern::Clique(k) => format!("K{k}"),
            Pattern::Graph(g) => to_graph6(g),
        }
    }

    fn count(&self, g: &SmallGraph) -> u64 {
        match self {
            Pattern::C4 => c4_kernel(g.rows()),
            Pattern::K4 => k4_kernel(g.rows()),
            Pattern::Clique(_) | Pattern::Graph(_) => {
                count_subgraphs(&self.as_graph(), g).expect("pattern order checked")
            }
        }
    }

    fn occurs_in(&self, g: &SmallGraph) -> bool {
        match self {
            Pattern::K4 => has_clique(g.rows(), all_vertices(g.order()), 4),
            Pattern::Clique(k) => has_clique(g.rows(), all_vertices(g.order()), *k),
            Pattern::C4 => c4_kernel(g.rows()) > 0,
            Pattern::Graph(f) => f.order() <= g.order() && contains_subgraph(f, g),
        }
    }

    fn as_graph(&self) -> SmallGraph {
        match self {
            Pattern::C4 => SmallGraph::cycle(4).expect("C4"),
            Pattern::K4 => SmallGraph::complete(4).expect("K4"),
            Pattern::Clique(k) => SmallGraph::complete(*k).expect("clique within the order cap"),
            Pattern::Graph(g) => *g,
        }
    }
}

fn all_vertices(n: usize) -> u16 {
    ((1u32 << n) - 1) as u16
}

/// Result of one chunk: local maximum and canonical edge masks attaining it.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
struct ChunkResult {
    maximum: Option<u64>,
    witnesses: BTreeSet<u64>,
    scanned: u64,
}

impl ChunkResult {
    fn merge(mut self, other: ChunkResult) -> ChunkResult {
        self.scanned += other.scanned;
        match (self.maximum, other.maximum) {
            (_, None) => {}
            (None, Some(_)) => {
                self.maximum = other.maximum;
                self.witnesses = other.witnesses;
            }
            (Some(a), Some(b)) if b > a => {
                self.maximum = other.maximum;
                self.witnesses = other.witnesses;
            }
            (Some(a), Some(b)) if b == a => self.witnesses.extend(other.witnesses),
            _ => {}
        }
        self
    }
}

fn canonical_mask(n: usize, mask: u64) -> u64 {
    let rows = rows_from_mask(n, mask);
    let g = SmallGraph::from_rows(n, &rows[..n]).expect("valid rows");
    canonical_form(&g).graph.edge_mask() as u64
}

/// Scans `range`, keeping graphs with `score` defined (`Some`) and maximal.
fn scan_chunk(n: usize, range: std::ops::Range<u64>, score: &(impl Fn(&SmallGraph) -> Option<u64> + Sync)) -> ChunkResult {
    let mut best: Option<u64> = None;
    let mut raw: Vec<u64> = Vec::new();
    let mut folded: BTreeSet<u64> = BTreeSet::new();
    for mask in range.clone() {
        let rows = rows_from_mask(n, mask);
        let g = SmallGraph::from_rows(n, &rows[..n]).expect("valid rows");
        let Some(s) = score(&g) else { continue };
        match best {
            Some(b) if s < b => continue,
            Some(b) if s == b => {}
            _ => {
                best = Some(s);
                raw.clear();
                folded.clear();
            }
        }
        raw.push(mask);
        if raw.len() >= RAW_WITNESS_LIMIT {
            folded.extend(raw.drain(..).map(|m| canonical_mask(n, m)));
        }
    }
    folded.extend(raw.into_iter().map(|m| canonical_mask(n, m)));
    ChunkResult { maximum: best, witnesses: folded, scanned: range.end - range.start }
}

#[derive(Debug, Serialize, Deserialize)]
struct Checkpoint {
    key: String,
    chunks: BTreeMap<u64, ChunkResult>,
}

fn load_checkpoint(path: &Path, key: &str) -> Result<BTreeMap<u64, ChunkResult>> {
    if !path.exists() {
        return Ok(BTreeMap::new());
    }
    let cp: Checkpoint = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    if cp.key != key {
        return Err(Error::Precondition(format!(
            "checkpoint {} belongs to a different search ({})",
            path.display(),
            cp.key
        )));
    }
    Ok(cp.chunks)
}

fn save_checkpoint(path: &Path, key: &str, chunks: &BTreeMap<u64, ChunkResult>) -> Result<()> {
    let tmp = path.with_extension("tmp");
    let cp = Checkpoint { key: key.to_string(), chunks: chunks.clone() };
    std::fs::write(&tmp, serde_json::to_string(&cp)?)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

fn run_scan(
    n: usize,
    key: &str,
    opts: &SearchOptions,
    score: impl Fn(&SmallGraph) -> Option<u64> + Sync,
) -> Result<ChunkResult> {
    check_order(n, opts.allow_n8)?;
    let total = total_masks(n);
    let chunk = 1u64 << CHUNK_BITS;
    let chunk_count = total.div_ceil(chunk);
    let done = match &opts.resume {
        Some(p) => load_checkpoint(p, key)?,
        None => BTreeMap::new(),
    };
    let pending: Vec<u64> = (0..chunk_count).filter(|c| !done.contains_key(c)).collect();
    let state = Mutex::new((done, 0usize));
    let work = || -> Result<()> {
        pending.par_iter().try_for_each(|&c| {
            let res = scan_chunk(n, c * chunk..((c + 1) * chunk).min(total), &score);
            let mut guard = state.lock().expect("checkpoint lock");
            guard.0.insert(c, res);
            guard.1 += 1;
            if let Some(p) = &opts.resume {
                if guard.1 % CHECKPOINT_EVERY == 0 {
                    save_checkpoint(p, key, &guard.0)?;
                }
            }
            Ok(())
        })
    };
    match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::Precondition(e.to_string()))?
            .install(work)?,
        None => work()?,
    }
    let (chunks, _) = state.into_inner().expect("checkpoint lock");
    if let Some(p) = &opts.resume {
        save_checkpoint(p, key, &chunks)?;
    }
    Ok(chunks.into_values().fold(ChunkResult::default(), ChunkResult::merge))
}

fn finish(n: usize, target: &Pattern, forbidden: &Pattern, res: ChunkResult, start: Instant) -> SearchResult {
    let mut witnesses: Vec<String> = res
        .witnesses
        .iter()
        .map(|&m| to_graph6(&SmallGraph::from_edge_mask(n, m as u128).expect("order within cap")))
        .collect();
    witnesses.sort();
    SearchResult {
        n,
        target: target.label(),
        forbidden: forbidden.label(),
        maximum: res.maximum.unwrap_or(0),
        witnesses,
        scanned: res.scanned,
        elapsed_seconds: start.elapsed().as_secs_f64(),
    }
}

/// Exact `ex(n, target, forbidden)` by full enumeration.
pub fn search(n: usize, target: &Pattern, forbidden: &Pattern, opts: &SearchOptions) -> Result<SearchResult> {
    check_order(n, opts.allow_n8)?;
    for p in [target, forbidden] {
        if p.order() > n {
            return Err(Error::PatternTooLarge { pattern: p.order(), host: n });
        }
    }
    let start = Instant::now();
    let key = format!("max n={n} target={} forbid={}", target.label(), forbidden.label());
    let res = run_scan(n, &key, opts, |g| (!forbidden.occurs_in(g)).then(|| target.count(g)))?;
    Ok(finish(n, target, forbidden, res, start))
}

/// `max_count` with graphs given as [`SmallGraph`]s.
pub fn max_count(n: usize, h: &SmallGraph, f: &SmallGraph, opts: &SearchOptions) -> Result<SearchResult> {
    search(n, &Pattern::from_graph(h), &Pattern::from_graph(f), opts)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct K4BoundReport {
    pub r: usize,
    pub search: SearchResult,
    pub turan_profile: String,
    pub turan_k4: u64,
    pub matches: bool,
}

/// Maximum K4 count over `K_{r+1}`-free graphs on `n` vertices against the
/// balanced `r`-partite graph.
pub fn k4_bound_check(n: usize, r: usize, opts: &SearchOptions) -> Result<K4BoundReport> {
    if r < 3 {
        return Err(Error::OutOfRange(format!("r must be at least 3, got {r}")));
    }
    check_order(n, opts.allow_n8)?;
    let start = Instant::now();
    let (target, forbidden) = (Pattern::K4, Pattern::Clique(r + 1));
    let key = format!("k4 n={n} r={r}");
    let res = run_scan(n, &key, opts, |g| (!forbidden.occurs_in(g)).then(|| k4_kernel(g.rows())))?;
    let search = finish(n, &target, &forbidden, res, start);
    let profile = PartProfile::balanced(r as u64, n as u64)?;
    let turan_k4: u64 = k4_count(&profile).try_into().expect("small count");
    Ok(K4BoundReport { r, matches: search.maximum == turan_k4, turan_profile: profile.to_string(), turan_k4, search })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NearExtremalEntry {
    pub graph6: String,
    pub c4_count: u64,
    pub cocherry_count: u64,
    /// Fewest edge edits to reach a complete multipartite graph.
    pub multipartite_distance: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CocherryScanReport {
    pub n: usize,
    pub r: usize,
    pub slack: u64,
    pub extremum: u64,
    pub entries: Vec<NearExtremalEntry>,
    pub max_cocherry: u64,
    pub scanned: u64,
    pub elapsed_seconds: f64,
}

/// Restricted-growth strings of length `n`: every set partition once.
fn set_partitions(n: usize) -> Vec<Vec<u8>> {
    fn rec(i: usize, n: usize, cur: &mut Vec<u8>, max: u8, out: &mut Vec<Vec<u8>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for c in 0..=max + 1 {
            cur.push(c);
            rec(i + 1, n, cur, max.max(c), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
    } else {
        let mut cur = vec![0];
        rec(1, n, &mut cur, 0, &mut out);
    }
    out
}

/// Edit distance from `g` to the nearest complete multipartite graph on the
/// same vertex set.
pub fn multipartite_distance(g: &SmallGraph) -> usize {
    let n = g.order();
    set_partitions(n)
        .iter()
        .map(|class| {
            let mut d = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if (class[u] != class[v]) != g.adjacent(u, v) {
                        d += 1;
                    }
                }
            }
            d
        })
        .min()
        .unwrap_or(0)
}

/// Lists the `K_{r+1}`-free graphs whose C4 count is within `slack` of the
/// maximum, with their induced co-cherry counts. Values are reported, not
/// asserted.
pub fn near_extremal_cocherry_scan(n: usize, r: usize, slack: u64, opts: &SearchOptions) -> Result<CocherryScanReport> {
    if r < 2 {
        return Err(Error::OutOfRange(format!("r must be at least 2, got {r}")));
    }
    check_order(n, opts.allow_n8)?;
    let start = Instant::now();
    let forbidden = Pattern::Clique(r + 1);
    let free_c4 = |g: &SmallGraph| (!forbidden.occurs_in(g)).then(|| c4_kernel(g.rows()));
    let extremum = run_scan(n, &format!("near max n={n} r={r}"), &SearchOptions { resume: None, ..opts.clone() }, free_c4)?
        .maximum
        .unwrap_or(0);
    let floor = extremum.saturating_sub(slack);
    let found = Mutex::new(BTreeSet::new());
    let chunk = 1u64 << CHUNK_BITS;
    let total = total_masks(n);
    let collect = || {
        (0..total.div_ceil(chunk)).into_par_iter().for_each(|c| {
            let mut local = BTreeSet::new();
            for mask in c * chunk..((c + 1) * chunk).min(total) {
                let rows = rows_from_mask(n, mask);
                let g = SmallGraph::from_rows(n, &rows[..n]).expect("valid rows");
                if free_c4(&g).is_some_and(|s| s >= floor) {
                    local.insert(canonical_form(&g).graph.edge_mask() as u64);
                }
            }
            found.lock().expect("result lock").extend(local);
        })
    };
    match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::Precondition(e.to_string()))?
            .install(collect),
        None => collect(),
    }
    let co = cocherry();
    let mut entries: Vec<NearExtremalEntry> = found
        .into_inner()
        .expect("result lock")
        .into_iter()
        .map(|m| {
            let g = SmallGraph::from_edge_mask(n, m as u128).expect("order within cap");
            Ok(NearExtremalEntry {
                graph6: to_graph6(&g),
                c4_count: c4_kernel(g.rows()),
                cocherry_count: if n >= 3 { count_induced(&co, &g)? } else { 0 },
                multipartite_distance: multipartite_distance(&g),
            })
        })
        .collect::<Result<_>>()?;
    entries.sort_by(|a, b| b.c4_count.cmp(&a.c4_count).then_with(|| a.graph6.cmp(&b.graph6)));
    Ok(CocherryScanReport {
        n,
        r,
        slack,
        extremum,
        max_cocherry: entries.iter().map(|e| e.cocherry_count).max().unwrap_or(0),
        entries,
        scanned: total,
        elapsed_seconds: start.elapsed().as_secs_f64(),
    })
}

/// `c4_count` of the balanced `r`-partite profile on `n` vertices.
pub fn turan_c4(r: usize, n: usize) -> Result<u64> {
    Ok(c4_count(&PartProfile::balanced(r as u64, n as u64)?).try_into().expect("small count"))
}
