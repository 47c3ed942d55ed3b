//! Flags over a labeled type and the finite flag calculus.
//!
//! A flag of type `sigma` (a graph on `k` labeled vertices) is stored with
//! its labeled vertices at positions `0..k` and the rest in canonical order,
//! so label-preserving isomorphism is structural equality.
//!
//! Products use ordered pairs of disjoint vertex sets: the coefficient of
//! `F3` in `f1 * f2` is the probability that a uniformly random ordered pair
//! `(X1, X2)` of disjoint unlabeled sets of sizes `n(f1) - k` and
//! `n(f2) - k` induces `f1` on `X1` and `f2` on `X2`. With this convention,
//! averaging a product over a uniformly random injective labeling of a host
//! reproduces its unlabeled expansion exactly, and `6 [[alpha^2]]` for the
//! isolated-vertex/cherry combination over two nonadjacent labels gives the
//! known quadratic form `(6r^2-12r+6) P(F0) + (r^2-2r+1) P(F1) + ...`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_traits::Zero;
use once_cell::sync::Lazy;

use crate::arith::{binomial_u64, falling_factorial, BigRational, Field, RationalFn};
use crate::error::{Error, Result};
use crate::graph::{
    canonical_form, canonical_labeling, catalog_index, catalog_name, from_graph6, induced_catalog_counts, to_graph6,
    GraphLike, SmallGraph, CATALOG_SIZE,
};

/// Flags are enumerated and multiplied up to this order.
pub const MAX_FLAG_ORDER: usize = 6;

/// A graph on `k` vertices whose vertices carry the labels `0..k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeGraph {
    graph: SmallGraph,
}

impl TypeGraph {
    pub fn new(graph: SmallGraph) -> Self {
        TypeGraph { graph }
    }

    /// Two labeled nonadjacent vertices.
    pub fn sigma1() -> Self {
        Self::new(SmallGraph::empty(2).expect("2 vertices"))
    }

    /// Two labeled adjacent vertices.
    pub fn sigma2() -> Self {
        Self::new(SmallGraph::complete(2).expect("2 vertices"))
    }

    pub fn size(&self) -> usize {
        self.graph.order()
    }

    pub fn graph(&self) -> &SmallGraph {
        &self.graph
    }
}

/// A graph with an embedding of a type, in canonical labeled form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    // field order fixes the canonical ordering: size, underlying class, flag class
    k: u8,
    n: u8,
    base: u128,
    code: u128,
    graph: SmallGraph,
}

fn labeled_first(n: usize, theta: &[usize]) -> Vec<usize> {
    let mut order = theta.to_vec();
    order.extend((0..n).filter(|v| !theta.contains(v)));
    order
}

fn check_theta(n: usize, theta: &[usize]) -> Result<()> {
    for (i, &t) in theta.iter().enumerate() {
        if t >= n {
            return Err(Error::VertexOutOfRange { vertex: t, order: n });
        }
        if theta[..i].contains(&t) {
            return Err(Error::InvalidFlag(format!("label image {t} repeated")));
        }
    }
    Ok(())
}

impl Flag {
    /// The flag `(graph, theta)`, where label `i` sits on vertex `theta[i]`.
    pub fn new(graph: &SmallGraph, theta: &[usize]) -> Result<Self> {
        check_theta(graph.order(), theta)?;
        let g = graph.permuted(&labeled_first(graph.order(), theta));
        let (code, perm) = canonical_labeling(&g, theta.len());
        Ok(Flag {
            k: theta.len() as u8,
            n: graph.order() as u8,
            base: canonical_form(graph).code,
            code,
            graph: g.permuted(&perm),
        })
    }

    pub fn graph(&self) -> &SmallGraph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn type_size(&self) -> usize {
        self.k as usize
    }

    pub fn sigma(&self) -> TypeGraph {
        let labels: Vec<usize> = (0..self.type_size()).collect();
        TypeGraph::new(self.graph.induced(&labels))
    }

    /// Compact text form `graph6:label-positions`.
    pub fn to_text(&self) -> String {
        let labels: Vec<String> = (0..self.type_size()).map(|i| i.to_string()).collect();
        format!("{}:{}", to_graph6(&self.graph), labels.join(","))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let (g6, labels) = s
            .rsplit_once(':')
            .ok_or_else(|| Error::Parse(format!("flag {s:?} is not of the form graph6:labels")))?;
        let theta = if labels.trim().is_empty() {
            Vec::new()
        } else {
            labels
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("bad label {t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(&from_graph6(g6)?, &theta)
    }

    fn same_type(&self, other: &Flag) -> Result<()> {
        if self.sigma() != other.sigma() {
            return Err(Error::TypeMismatch);
        }
        Ok(())
    }
}

impl fmt::Debug for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Flag({})", self.to_text())
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// All `sigma`-flags on `ell` vertices up to label-preserving isomorphism,
/// sorted by underlying graph class and then by flag class.
pub fn enumerate_flags(sigma: &TypeGraph, ell: usize) -> Result<Vec<Flag>> {
    let k = sigma.size();
    if ell < k || ell > MAX_FLAG_ORDER {
        return Err(Error::OutOfRange(format!("flag order must lie in {k}..={MAX_FLAG_ORDER}, got {ell}")));
    }
    let free_pairs: Vec<(usize, usize)> = (k..ell).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let labels: Vec<usize> = (0..k).collect();
    let mut base = SmallGraph::empty(ell)?;
    for (u, v) in sigma.graph().edges() {
        base = base.with_edge(u, v)?;
    }
    let mut seen = BTreeMap::new();
    for mask in 0u32..1 << free_pairs.len() {
        let mut g = base;
        for (b, &(u, v)) in free_pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                g = g.with_edge(u, v)?;
            }
        }
        let code = canonical_labeling(&g, k).0;
        if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(code) {
            e.insert(Flag::new(&g, &labels)?);
        }
    }
    let mut flags: Vec<Flag> = seen.into_values().collect();
    flags.sort();
    Ok(flags)
}

/// Calls `f` with every `m`-subset of `items`, as a bit mask over positions.
fn for_each_subset(count: usize, m: usize, f: &mut impl FnMut(u64)) {
    fn go(start: usize, count: usize, left: usize, acc: u64, f: &mut impl FnMut(u64)) {
        if left == 0 {
            f(acc);
            return;
        }
        for i in start..=count - left {
            go(i + 1, count, left - 1, acc | 1 << i, f);
        }
    }
    if m <= count {
        go(0, count, m, 0, f);
    }
}

fn check_embedding<G: GraphLike + ?Sized>(sigma: &TypeGraph, host: &G, theta: &[usize]) -> Result<()> {
    check_theta(host.order(), theta)?;
    if theta.len() != sigma.size() {
        return Err(Error::TypeMismatch);
    }
    if host.induced_small(theta) != *sigma.graph() {
        return Err(Error::InvalidFlag("labels do not induce the type".into()));
    }
    Ok(())
}

/// Subsets of the unlabeled host vertices (as masks over `free`) whose union
/// with the labels induces `flag`.
fn matching_subsets<G: GraphLike + ?Sized>(flag: &Flag, host: &G, theta: &[usize], free: &[usize]) -> Vec<u64> {
    let m = flag.order() - flag.type_size();
    let mut out = Vec::new();
    let mut verts = theta.to_vec();
    for_each_subset(free.len(), m, &mut |mask| {
        verts.truncate(theta.len());
        verts.extend((0..free.len()).filter(|i| mask >> i & 1 == 1).map(|i| free[i]));
        let g = host.induced_small(&verts);
        if canonical_labeling(&g, theta.len()).0 == flag.code {
            out.push(mask);
        }
    });
    out
}

fn free_vertices(n: usize, theta: &[usize]) -> Vec<usize> {
    (0..n).filter(|v| !theta.contains(v)).collect()
}

/// `P(flag, (host, theta))` for a host on up to 64 vertices.
pub fn flag_density_in<G: GraphLike + ?Sized>(flag: &Flag, host: &G, theta: &[usize]) -> Result<BigRational> {
    check_embedding(&flag.sigma(), host, theta)?;
    if flag.order() > host.order() {
        return Err(Error::PatternTooLarge { pattern: flag.order(), host: host.order() });
    }
    let free = free_vertices(host.order(), theta);
    let hits = matching_subsets(flag, host, theta, &free).len() as u64;
    let total = binomial_u64(free.len() as u64, (flag.order() - flag.type_size()) as u64);
    Ok(BigRational::new(hits.into(), total.into()))
}

/// `P(small, big)`: the probability that random unlabeled vertices of `big`
/// together with its labels induce `small`.
pub fn flag_density(small: &Flag, big: &Flag) -> Result<BigRational> {
    small.same_type(big)?;
    let theta: Vec<usize> = (0..big.type_size()).collect();
    flag_density_in(small, big.graph(), &theta)
}

/// `P(f1, f2; (host, theta))` over ordered pairs of disjoint unlabeled sets.
pub fn joint_density_in<G: GraphLike + ?Sized>(f1: &Flag, f2: &Flag, host: &G, theta: &[usize]) -> Result<BigRational> {
    f1.same_type(f2)?;
    check_embedding(&f1.sigma(), host, theta)?;
    let k = f1.type_size();
    let (m1, m2) = (f1.order() - k, f2.order() - k);
    let free = free_vertices(host.order(), theta);
    if m1 + m2 > free.len() {
        return Err(Error::PatternTooLarge { pattern: m1 + m2 + k, host: host.order() });
    }
    let a = matching_subsets(f1, host, theta, &free);
    let b = matching_subsets(f2, host, theta, &free);
    let hits: u64 = a.iter().map(|&x| b.iter().filter(|&&y| x & y == 0).count() as u64).sum();
    let total = binomial_u64(free.len() as u64, m1 as u64) * binomial_u64((free.len() - m1) as u64, m2 as u64);
    Ok(BigRational::new(hits.into(), total.into()))
}

/// A formal linear combination of flags of one type and one order.
#[derive(Clone, Debug, PartialEq)]
pub struct FlagCombination<F> {
    sigma: TypeGraph,
    order: usize,
    terms: BTreeMap<Flag, F>,
}

impl<F: Field> FlagCombination<F> {
    pub fn new(sigma: TypeGraph, order: usize) -> Self {
        FlagCombination { sigma, order, terms: BTreeMap::new() }
    }

    pub fn from_terms(sigma: TypeGraph, order: usize, terms: impl IntoIterator<Item = (Flag, F)>) -> Result<Self> {
        let mut c = Self::new(sigma, order);
        for (f, a) in terms {
            c.add_term(f, a)?;
        }
        Ok(c)
    }

    pub fn add_term(&mut self, flag: Flag, coeff: F) -> Result<()> {
        if flag.sigma() != self.sigma {
            return Err(Error::TypeMismatch);
        }
        if flag.order() != self.order {
            return Err(Error::InvalidFlag(format!("flag of order {} in a combination of order {}", flag.order(), self.order)));
        }
        let sum = self.terms.remove(&flag).unwrap_or_else(F::zero) + coeff;
        if !sum.is_zero() {
            self.terms.insert(flag, sum);
        }
        Ok(())
    }

    pub fn sigma(&self) -> &TypeGraph {
        &self.sigma
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Flag, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, flag: &Flag) -> F {
        self.terms.get(flag).cloned().unwrap_or_else(F::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> FlagCombination<G> {
        let mut out = FlagCombination::new(self.sigma, self.order);
        for (flag, c) in &self.terms {
            out.add_term(*flag, f(c)).expect("same type and order");
        }
        out
    }
}

impl FlagCombination<RationalFn> {
    /// Substitutes a value for `r` in every coefficient.
    pub fn evaluate_at(&self, r: &BigRational) -> Result<FlagCombination<BigRational>> {
        let mut out = FlagCombination::new(self.sigma, self.order);
        for (flag, c) in &self.terms {
            out.add_term(*flag, c.eval(r)?)?;
        }
        Ok(out)
    }
}

impl<F: Field> fmt::Display for FlagCombination<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(flag, c)| format!("({c})*[{flag}]")).collect();
        f.write_str(&parts.join(" + "))
    }
}

type ProductTable = Vec<(Flag, BigRational)>;

static PRODUCT_CACHE: Lazy<Mutex<HashMap<(Flag, Flag), ProductTable>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// `f1 * f2` expanded over all flags of order `n(f1) + n(f2) - k`.
pub fn flag_product(f1: &Flag, f2: &Flag) -> Result<FlagCombination<BigRational>> {
    f1.same_type(f2)?;
    let sigma = f1.sigma();
    let w = f1.order() + f2.order() - f1.type_size();
    if w > MAX_FLAG_ORDER {
        return Err(Error::OutOfRange(format!("product order {w} exceeds {MAX_FLAG_ORDER}")));
    }
    let cached = PRODUCT_CACHE.lock().expect("cache lock").get(&(*f1, *f2)).cloned();
    let table = match cached {
        Some(t) => t,
        None => {
            let labels: Vec<usize> = (0..sigma.size()).collect();
            let mut table = Vec::new();
            for f3 in enumerate_flags(&sigma, w)? {
                let p = joint_density_in(f1, f2, f3.graph(), &labels)?;
                if !p.is_zero() {
                    table.push((f3, p));
                }
            }
            PRODUCT_CACHE.lock().expect("cache lock").insert((*f1, *f2), table.clone());
            table
        }
    };
    FlagCombination::from_terms(sigma, w, table)
}

/// `(q_sigma(F), F')`: the probability that a uniformly random injective
/// labeling of `F` gives a flag isomorphic to `flag`, and the underlying
/// graph in canonical form.
pub fn unlabel(flag: &Flag) -> (BigRational, SmallGraph) {
    let (n, k) = (flag.order(), flag.type_size());
    let mut hits = 0u64;
    let mut theta = Vec::with_capacity(k);
    fn injections(n: usize, k: usize, theta: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if theta.len() == k {
            f(theta);
            return;
        }
        for v in 0..n {
            if !theta.contains(&v) {
                theta.push(v);
                injections(n, k, theta, f);
                theta.pop();
            }
        }
    }
    injections(n, k, &mut theta, &mut |t| {
        let g = flag.graph().permuted(&labeled_first(n, t));
        if canonical_labeling(&g, k).0 == flag.code {
            hits += 1;
        }
    });
    let q = BigRational::new(hits.into(), falling_factorial(n as u64, k as u64).into());
    (q, canonical_form(flag.graph()).graph)
}

/// A linear functional `sum c_i P(F_i)` over the 4-vertex catalog.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityForm<F> {
    coeffs: Vec<F>,
}

impl<F: Field> DensityForm<F> {
    pub fn zero() -> Self {
        DensityForm { coeffs: vec![F::zero(); CATALOG_SIZE] }
    }

    pub fn from_coeffs(coeffs: Vec<F>) -> Result<Self> {
        if coeffs.len() != CATALOG_SIZE {
            return Err(Error::Precondition(format!("a density form has {CATALOG_SIZE} coefficients, got {}", coeffs.len())));
        }
        Ok(DensityForm { coeffs })
    }

    /// The form `P(F_i)`.
    pub fn unit(i: usize) -> Self {
        let mut d = Self::zero();
        d.coeffs[i] = F::one();
        d
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &F {
        &self.coeffs[i]
    }

    pub fn add(&self, other: &Self) -> Self {
        DensityForm { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        DensityForm { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() - b.clone()).collect() }
    }

    pub fn scale(&self, c: &F) -> Self {
        DensityForm { coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    /// The value of the form at a density vector.
    pub fn evaluate(&self, densities: &[F]) -> F {
        self.coeffs.iter().zip(densities).fold(F::zero(), |acc, (a, p)| acc + a.clone() * p.clone())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> DensityForm<G> {
        DensityForm { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl DensityForm<RationalFn> {
    pub fn evaluate_at(&self, r: &BigRational) -> Result<DensityForm<BigRational>> {
        Ok(DensityForm { coeffs: self.coeffs.iter().map(|c| c.eval(r)).collect::<Result<_>>()? })
    }
}

impl<F: Field> fmt::Display for DensityForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})P(F{i})"))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// `[[alpha * alpha]]_sigma` as a form over the catalog densities.
pub fn expand_square<F: Field>(alpha: &FlagCombination<F>) -> Result<DensityForm<F>> {
    let w = 2 * alpha.order() - alpha.sigma().size();
    if w != 4 {
        return Err(Error::Precondition(format!("squares must land on 4-vertex graphs, got order {w}")));
    }
    let mut form = DensityForm::<F>::zero();
    for (fa, ca) in alpha.terms() {
        for (fb, cb) in alpha.terms() {
            let weight = ca.clone() * cb.clone();
            for (f3, p) in flag_product(fa, fb)?.terms() {
                let (q, g) = unlabel(f3);
                let i = catalog_index(&g).expect("order 4");
                form.coeffs[i] = form.coeffs[i].clone() + weight.clone() * F::from_rational(&(p * q));
            }
        }
    }
    Ok(form)
}

/// Exact induced densities `(P(F_0, g), ..., P(F_10, g))`.
pub fn density_vector<G: GraphLike + ?Sized>(g: &G) -> Result<Vec<BigRational>> {
    if g.order() < 4 {
        return Err(Error::OutOfRange(format!("density vector needs at least 4 vertices, got {}", g.order())));
    }
    let total = binomial_u64(g.order() as u64, 4);
    Ok(induced_catalog_counts(g).iter().map(|&c| BigRational::new(c.into(), total.into())).collect())
}

/// A rigorous lower bound for `expand_square(alpha)` evaluated on any host of
/// order `n`, when `alpha` has order-3 flags over a type of size 2:
/// `-(max |c|)^2 / (n - 3)`. Averaging the joint density over labelings
/// equals the form exactly, and for one labeling the joint density of
/// `alpha` is `(S^2 - sum g(v)^2) / (N (N-1))` with `N = n - 2`.
pub fn square_lower_bound(alpha: &FlagCombination<BigRational>, n: usize) -> Result<BigRational> {
    if alpha.order() != 3 || alpha.sigma().size() != 2 || n < 4 {
        return Err(Error::Precondition("bound applies to order-3 flags over a 2-vertex type on n >= 4".into()));
    }
    let max_sq = alpha.terms().map(|(_, c)| c * c).max().unwrap_or_else(BigRational::zero);
    Ok(-max_sq / BigRational::from_integer((n as i64 - 3).into()))
}

/// Human-readable catalog labels, `F0 (4K1)` and so on.
pub fn catalog_labels() -> Vec<String> {
    (0..CATALOG_SIZE).map(|i| format!("F{i} ({})", catalog_name(i).unwrap_or("?"))).collect()
}
