//! The Rado graph on labels `0, 1, 2, ...`: `i < j` are adjacent when bit
//! `i` of `j` is set. Finite fragments only, bounded by explicit fuel.

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{factorial, pow};
use crate::error::{guard, Error, Result};
use crate::graph::{random, Pseudograph};

/// `bit(min, max)`. Labels must differ.
pub fn bit_adjacent(i: &BigUint, j: &BigUint) -> Result<bool> {
    if i == j {
        return Err(Error::InvalidParameter("a vertex is not adjacent to itself".into()));
    }
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    // a position past u64 range is far above the bit length of `hi`
    Ok(lo.to_u64().is_some_and(|b| hi.bit(b)))
}

/// Largest bit position a canonical witness may set.
pub const WITNESS_BIT_LIMIT: u64 = 1 << 24;

fn check_disjoint(v: &[BigUint], w: &[BigUint]) -> Result<()> {
    if let Some(x) = v.iter().find(|x| w.contains(x)) {
        return Err(Error::InvalidParameter(format!("{x} lies in both sets")));
    }
    Ok(())
}

/// `sum_(i in V) 2^i + 2^h` with `h = 1 + max(V, W, 0)`.
pub fn rado_witness(v: &[BigUint], w: &[BigUint]) -> Result<BigUint> {
    check_disjoint(v, w)?;
    let top = v.iter().chain(w).max().cloned().unwrap_or_default();
    let h = (top + 1u32)
        .to_u64()
        .filter(|&h| h <= WITNESS_BIT_LIMIT)
        .ok_or_else(|| Error::InvalidParameter("labels too large for a canonical witness".into()))?;
    let mut out = BigUint::zero();
    for i in v {
        out.set_bit(i.to_u64().expect("below h"), true);
    }
    out.set_bit(h, true);
    Ok(out)
}

pub fn is_witness(z: &BigUint, v: &[BigUint], w: &[BigUint]) -> Result<bool> {
    if v.contains(z) || w.contains(z) {
        return Ok(false);
    }
    for x in v {
        if !bit_adjacent(z, x)? {
            return Ok(false);
        }
    }
    for x in w {
        if bit_adjacent(z, x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest witness below `limit`, if any.
pub fn least_witness(v: &[BigUint], w: &[BigUint], limit: u64) -> Result<Option<BigUint>> {
    check_disjoint(v, w)?;
    for z in 0..limit {
        let z = BigUint::from(z);
        if is_witness(&z, v, w)? {
            return Ok(Some(z));
        }
    }
    Ok(None)
}

/// Search bound used before falling back to the canonical witness.
pub const WITNESS_SEARCH_LIMIT: u64 = 1 << 16;

/// Least witness larger than every label in `v` and `w`.
///
/// Above all labels only the bits of `z` matter: set at `V`, clear at `W`.
/// Such a `z` agrees with the maximum label `M` above some position `i`
/// where `M` has a 0 and `z` a 1, and carries only `V` bits below `i`; the
/// lowest feasible `i` gives the least `z`.
pub fn least_witness_above(v: &[BigUint], w: &[BigUint]) -> Result<BigUint> {
    check_disjoint(v, w)?;
    let Some(top) = v.iter().chain(w).max() else {
        return Ok(BigUint::zero());
    };
    let pos = |x: &BigUint| {
        x.to_u64()
            .filter(|&b| b < WITNESS_BIT_LIMIT)
            .ok_or_else(|| Error::InvalidParameter("labels too large for a witness above them".into()))
    };
    let vpos: Vec<u64> = v.iter().map(pos).collect::<Result<_>>()?;
    let len = top.bits().max(vpos.iter().max().map_or(0, |&b| b + 1)) + 1;
    let mut fixed: Vec<Option<bool>> = vec![None; len as usize];
    for &b in &vpos {
        fixed[b as usize] = Some(true);
    }
    for x in w {
        if let Some(b) = x.to_u64().filter(|&b| b < len) {
            fixed[b as usize] = Some(false);
        }
    }
    // consistent[i]: positions above i can copy M
    let mut consistent = vec![true; len as usize + 1];
    for i in (0..len as usize).rev() {
        let agrees = fixed[i].is_none_or(|f| f == top.bit(i as u64));
        consistent[i] = consistent[i + 1] && agrees;
    }
    let i = (0..len as usize)
        .find(|&i| !top.bit(i as u64) && fixed[i] != Some(false) && consistent[i + 1])
        .expect("the position above every fixed bit is free");
    let mut z = (top >> (i + 1)) << (i + 1);
    z.set_bit(i as u64, true);
    for &b in vpos.iter().filter(|&&b| (b as usize) < i) {
        z.set_bit(b, true);
    }
    debug_assert!(is_witness(&z, v, w).unwrap_or(false));
    Ok(z)
}

/// Least witness below [`WITNESS_SEARCH_LIMIT`], else [`least_witness_above`].
pub fn small_witness(v: &[BigUint], w: &[BigUint]) -> Result<BigUint> {
    match least_witness(v, w, WITNESS_SEARCH_LIMIT)? {
        Some(z) => Ok(z),
        None => least_witness_above(v, w),
    }
}

/// Largest order for which [`embed_induced`] retries other vertex orders.
pub const EMBED_ORDER_LIMIT: usize = 7;

/// Labels `r_0, r_1, ...` with `r_k` adjacent to exactly the labels of the
/// neighbors of `k`. Vertices get labels one at a time, each the witness
/// from [`small_witness`] for the earlier neighbors and non-neighbors.
/// Labels can grow as a tower of twos, so when one passes the bit limit
/// the other vertex orders are tried, for graphs up to [`EMBED_ORDER_LIMIT`].
pub fn embed_induced(g: &Pseudograph) -> Result<Vec<BigUint>> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let p = g.order();
    let first = embed_in_order(g, &(0..p).collect::<Vec<_>>());
    if first.is_ok() || p > EMBED_ORDER_LIMIT {
        return first;
    }
    (0..p)
        .permutations(p)
        .skip(1)
        .find_map(|order| embed_in_order(g, &order).ok())
        .map_or(first, Ok)
}

fn embed_in_order(g: &Pseudograph, order: &[usize]) -> Result<Vec<BigUint>> {
    let mut labels: Vec<Option<BigUint>> = vec![None; g.order()];
    for (k, &x) in order.iter().enumerate() {
        let nbrs = g.neighbors(x);
        let (v, w): (Vec<_>, Vec<_>) = order[..k].iter().partition(|u| nbrs.contains(u));
        let label = |u: &usize| labels[*u].clone().expect("placed earlier");
        let v: Vec<BigUint> = v.iter().map(label).collect();
        let w: Vec<BigUint> = w.iter().map(label).collect();
        labels[x] = Some(small_witness(&v, &w)?);
    }
    Ok(labels.into_iter().map(|l| l.expect("every vertex placed")).collect())
}

/// Graph induced on the given labels, vertex `k` standing for `labels[k]`.
pub fn induced_bit_graph(labels: &[BigUint]) -> Result<Pseudograph> {
    let mut edges = Vec::new();
    for (a, b) in (0..labels.len()).tuple_combinations() {
        if bit_adjacent(&labels[a], &labels[b])? {
            edges.push((a, b));
        }
    }
    Pseudograph::new(labels.len(), edges)
}

/// A countable graph given by an enumeration of its vertices, an adjacency
/// test and a witness operation.
pub trait AdjacencyOracle {
    /// The `k`-th vertex of the universe.
    fn label(&self, k: u64) -> BigUint;
    fn adjacent(&self, a: &BigUint, b: &BigUint) -> Result<bool>;
    /// A vertex outside `v` and `w`, adjacent to all of `v` and none of `w`.
    fn witness(&self, v: &[BigUint], w: &[BigUint]) -> Result<BigUint>;
}

/// Witness queries answer with [`small_witness`]; chaining canonical
/// witnesses would grow labels as a tower of twos.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BitGraph;

impl AdjacencyOracle for BitGraph {
    fn label(&self, k: u64) -> BigUint {
        BigUint::from(k)
    }

    fn adjacent(&self, a: &BigUint, b: &BigUint) -> Result<bool> {
        bit_adjacent(a, b)
    }

    fn witness(&self, v: &[BigUint], w: &[BigUint]) -> Result<BigUint> {
        small_witness(v, w)
    }
}

/// The BIT graph with every label shifted up by `offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shifted {
    pub offset: BigUint,
}

impl Shifted {
    fn unshift(&self, x: &BigUint) -> Result<BigUint> {
        if x < &self.offset {
            return Err(Error::InvalidParameter(format!("{x} is below the offset")));
        }
        Ok(x - &self.offset)
    }

    fn unshift_all(&self, xs: &[BigUint]) -> Result<Vec<BigUint>> {
        xs.iter().map(|x| self.unshift(x)).collect()
    }
}

impl AdjacencyOracle for Shifted {
    fn label(&self, k: u64) -> BigUint {
        &self.offset + k
    }

    fn adjacent(&self, a: &BigUint, b: &BigUint) -> Result<bool> {
        bit_adjacent(&self.unshift(a)?, &self.unshift(b)?)
    }

    fn witness(&self, v: &[BigUint], w: &[BigUint]) -> Result<BigUint> {
        Ok(small_witness(&self.unshift_all(v)?, &self.unshift_all(w)?)? + &self.offset)
    }
}

/// An oracle with one adjacent pair made nonadjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WithoutEdge<O> {
    pub inner: O,
    pub pair: (BigUint, BigUint),
}

impl<O: AdjacencyOracle> WithoutEdge<O> {
    fn is_removed(&self, a: &BigUint, b: &BigUint) -> bool {
        let (x, y) = &self.pair;
        (a == x && b == y) || (a == y && b == x)
    }
}

impl<O: AdjacencyOracle> AdjacencyOracle for WithoutEdge<O> {
    fn label(&self, k: u64) -> BigUint {
        self.inner.label(k)
    }

    fn adjacent(&self, a: &BigUint, b: &BigUint) -> Result<bool> {
        Ok(!self.is_removed(a, b) && self.inner.adjacent(a, b)?)
    }

    /// Retries with each rejected candidate added to `w`.
    fn witness(&self, v: &[BigUint], w: &[BigUint]) -> Result<BigUint> {
        let mut avoid = w.to_vec();
        for _ in 0..4 {
            let z = self.inner.witness(v, &avoid)?;
            let ok_v = v.iter().all(|x| self.adjacent(&z, x).unwrap_or(false));
            let ok_w = w.iter().all(|x| !self.adjacent(&z, x).unwrap_or(true));
            if ok_v && ok_w {
                return Ok(z);
            }
            avoid.push(z);
        }
        Err(Error::NoWitness("edge override blocks every candidate".into()))
    }
}

/// Injective on both sides and adjacency-preserving.
pub fn is_partial_isomorphism<A, B>(a: &A, b: &B, pairs: &[(BigUint, BigUint)]) -> Result<bool>
where
    A: AdjacencyOracle + ?Sized,
    B: AdjacencyOracle + ?Sized,
{
    if !pairs.iter().map(|p| &p.0).all_unique() || !pairs.iter().map(|p| &p.1).all_unique() {
        return Ok(false);
    }
    for (p, q) in pairs.iter().tuple_combinations() {
        if a.adjacent(&p.0, &q.0)? != b.adjacent(&p.1, &q.1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn least_unmapped<O: AdjacencyOracle + ?Sized>(o: &O, used: &[&BigUint]) -> BigUint {
    (0u64..)
        .map(|k| o.label(k))
        .find(|x| !used.contains(&x))
        .expect("universe is infinite")
}

/// Extends `seed` by `fuel` steps. Even steps take the least unmapped vertex
/// of `a` and find its image in `b` by a witness query; odd steps go back.
pub fn back_and_forth<A, B>(
    a: &A,
    b: &B,
    seed: &[(BigUint, BigUint)],
    fuel: usize,
) -> Result<Vec<(BigUint, BigUint)>>
where
    A: AdjacencyOracle + ?Sized,
    B: AdjacencyOracle + ?Sized,
{
    if !is_partial_isomorphism(a, b, seed)? {
        return Err(Error::Precondition("seed is not a partial isomorphism".into()));
    }
    let mut pairs = seed.to_vec();
    for step in 0..fuel {
        let forth = step % 2 == 0;
        let (x, y) = if forth {
            let x = least_unmapped(a, &pairs.iter().map(|p| &p.0).collect::<Vec<_>>());
            let mut v = Vec::new();
            let mut w = Vec::new();
            for (p, q) in &pairs {
                if a.adjacent(&x, p)? { v.push(q.clone()) } else { w.push(q.clone()) }
            }
            (x, b.witness(&v, &w)?)
        } else {
            let y = least_unmapped(b, &pairs.iter().map(|p| &p.1).collect::<Vec<_>>());
            let mut v = Vec::new();
            let mut w = Vec::new();
            for (p, q) in &pairs {
                if b.adjacent(&y, q)? { v.push(p.clone()) } else { w.push(p.clone()) }
            }
            (a.witness(&v, &w)?, y)
        };
        pairs.push((x, y));
    }
    debug_assert!(is_partial_isomorphism(a, b, &pairs).unwrap_or(false));
    Ok(pairs)
}

/// One draw of `G(n, num/den)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GnpSample {
    pub n: usize,
    pub p_num: u64,
    pub p_den: u64,
    pub seed: u64,
    pub graph: Pseudograph,
}

/// Pairs `(i, j)`, `i < j`, are decided in lexicographic order by a ChaCha8
/// stream seeded with `seed`.
pub fn gnp_sample(n: usize, p_num: u64, p_den: u64, seed: u64) -> Result<GnpSample> {
    if p_num == 0 || p_num >= p_den {
        return Err(Error::InvalidParameter("need 0 < p < 1".into()));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("need n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(GnpSample {
        n,
        p_num,
        p_den,
        seed,
        graph: random::simple_graph(&mut rng, n, p_num, p_den),
    })
}

fn adjacency_bits(g: &Pseudograph) -> Vec<Vec<u64>> {
    let words = g.order().div_ceil(64);
    let mut rows = vec![vec![0u64; words]; g.order()];
    for &(a, b) in g.edges() {
        rows[a][b / 64] |= 1 << (b % 64);
        rows[b][a / 64] |= 1 << (a % 64);
    }
    rows
}

/// Diameter exactly 2: not complete, and every nonadjacent pair has a
/// common neighbor.
pub fn has_diameter_two(g: &Pseudograph) -> bool {
    let rows = adjacency_bits(g);
    let mut complete = true;
    for (i, j) in (0..g.order()).tuple_combinations() {
        if rows[i][j / 64] >> (j % 64) & 1 == 1 {
            continue;
        }
        complete = false;
        if rows[i].iter().zip(&rows[j]).all(|(x, y)| x & y == 0) {
            return false;
        }
    }
    !complete
}

fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn rational_pow(x: &BigRational, e: usize) -> BigRational {
    num_traits::pow(x.clone(), e)
}

/// `1 - C(n,2) (1 - p^2)^(n-2) - p^C(n,2)`, a lower bound on the probability
/// of diameter 2 by the union bound over pairs without a common neighbor.
pub fn diameter_two_lower_bound(n: usize, p_num: u64, p_den: u64) -> BigRational {
    let p = ratio(p_num, p_den);
    let pairs = n * n.saturating_sub(1) / 2;
    let miss = rational_pow(&(BigRational::one() - &p * &p), n.saturating_sub(2));
    BigRational::one() - BigRational::from_integer(pairs.into()) * miss - rational_pow(&p, pairs)
}

/// `(diameter-2 samples, samples)` over seeds `seeds`.
pub fn diameter_two_fraction(
    n: usize,
    p_num: u64,
    p_den: u64,
    seeds: std::ops::Range<u64>,
) -> Result<(usize, usize)> {
    guard("sample order", n, 2000)?;
    let mut hits = 0;
    let total = seeds.end.saturating_sub(seeds.start) as usize;
    for seed in seeds {
        if has_diameter_two(&gnp_sample(n, p_num, p_den, seed)?.graph) {
            hits += 1;
        }
    }
    Ok((hits, total))
}

/// `1 - (1 - p^|V| (1-p)^|W|)^(n - |V| - |W|)`.
pub fn witness_probability(n: usize, v_size: usize, w_size: usize, p_num: u64, p_den: u64) -> Result<BigRational> {
    if v_size + w_size > n {
        return Err(Error::InvalidParameter("V and W do not fit".into()));
    }
    let p = ratio(p_num, p_den);
    let q = BigRational::one() - &p;
    let single = rational_pow(&p, v_size) * rational_pow(&q, w_size);
    Ok(BigRational::one() - rational_pow(&(BigRational::one() - single), n - v_size - w_size))
}

/// With `V = {0..v_size}` and `W` the next `w_size` vertices, counts the
/// samples containing a witness outside `V` and `W`.
pub fn witness_fraction(
    n: usize,
    v_size: usize,
    w_size: usize,
    p_num: u64,
    p_den: u64,
    seeds: std::ops::Range<u64>,
) -> Result<(usize, usize)> {
    if v_size + w_size > n {
        return Err(Error::InvalidParameter("V and W do not fit".into()));
    }
    let mut hits = 0;
    let total = seeds.end.saturating_sub(seeds.start) as usize;
    for seed in seeds {
        let g = gnp_sample(n, p_num, p_den, seed)?.graph;
        let rows = adjacency_bits(&g);
        let adj = |a: usize, b: usize| rows[a][b / 64] >> (b % 64) & 1 == 1;
        let found = (v_size + w_size..n)
            .any(|z| (0..v_size).all(|x| adj(z, x)) && (v_size..v_size + w_size).all(|x| !adj(z, x)));
        if found {
            hits += 1;
        }
    }
    Ok((hits, total))
}

/// Largest order for the exhaustive isomorphism probability.
pub const ALPHA_ORDER_LIMIT: usize = 5;

fn same_under(rows_g: &[Vec<bool>], rows_h: &[Vec<bool>], perm: &[usize]) -> bool {
    (0..perm.len()).tuple_combinations().all(|(a, b)| rows_g[a][b] == rows_h[perm[a]][perm[b]])
}

fn bool_matrix(g: &Pseudograph) -> Vec<Vec<bool>> {
    let mut m = vec![vec![false; g.order()]; g.order()];
    for &(a, b) in g.edges() {
        m[a][b] = true;
        m[b][a] = true;
    }
    m
}

pub fn isomorphic_small(g: &Pseudograph, h: &Pseudograph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let (mg, mh) = (bool_matrix(g), bool_matrix(h));
    (0..g.order())
        .permutations(g.order())
        .any(|perm| same_under(&mg, &mh, &perm))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaReport {
    /// Probability that `G(n, 1/2)` is isomorphic to `H`.
    pub alpha: BigRational,
    /// `1 / 2^C(n,2)`.
    pub lower: BigRational,
    /// `n! / 2^C(n,2)`.
    pub upper: BigRational,
}

impl AlphaReport {
    pub fn holds(&self) -> bool {
        self.lower <= self.alpha && self.alpha <= self.upper
    }
}

/// Counts the labeled graphs on `n` vertices isomorphic to `h`.
pub fn alpha_sandwich(h: &Pseudograph) -> Result<AlphaReport> {
    if !h.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = h.order();
    guard("order", n, ALPHA_ORDER_LIMIT)?;
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let mut count = 0u64;
    for mask in 0u64..1 << pairs.len() {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if isomorphic_small(&Pseudograph::new(n, edges)?, h) {
            count += 1;
        }
    }
    let total = BigInt::from(pow(2, pairs.len() as u64));
    Ok(AlphaReport {
        alpha: BigRational::new(count.into(), total.clone()),
        lower: BigRational::new(BigInt::one(), total.clone()),
        upper: BigRational::new(BigInt::from(factorial(n as u64)), total),
    })
}

/// `(samples isomorphic to h, samples)` for `G(n, 1/2)`.
pub fn empirical_alpha(h: &Pseudograph, seeds: std::ops::Range<u64>) -> Result<(usize, usize)> {
    guard("order", h.order(), ALPHA_ORDER_LIMIT)?;
    let total = seeds.end.saturating_sub(seeds.start) as usize;
    let mut hits = 0;
    for seed in seeds {
        if isomorphic_small(&gnp_sample(h.order(), 1, 2, seed)?.graph, h) {
            hits += 1;
        }
    }
    Ok((hits, total))
}
