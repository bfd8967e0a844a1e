//! Seeded G(n,p) generation and quasirandomness diagnostics.

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Binomial random graph under a pinned generator.
///
/// The generator is ChaCha8 seeded via `seed_from_u64(seed)`. Pairs are
/// visited in lexicographic order `(0,1), (0,2), ..., (n-2,n-1)` and each
/// consumes exactly one 64-bit draw; the pair is included iff the top 53
/// bits, scaled to `[0,1)`, are `< p`. Identical `(n, p, seed)` therefore
/// yields identical graphs on every platform.
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Usage("gen_gnp needs n >= 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Usage(format!("p = {p} outside [0,1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            let draw = (rng.next_u64() >> 11) as f64 * (1.0 / 9007199254740992.0);
            if draw < p {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    Ok(g)
}

/// Witness of a lower-regularity violation: disjoint sets with too few edges
/// between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityWitness {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub edges_between: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// Enumerates every qualifying pair of disjoint sets. Only for n <= 18.
    Exact,
    /// One-sided randomized search: `true` means no violation was found;
    /// any witness returned is genuine.
    Sampled { samples: usize },
}

/// Host abstraction so the regularity and expansion checks run on graphs and
/// digraphs alike. `e(S,T)` counts edges from S to T (arcs for digraphs) and
/// "neighbors in S" means in-neighbors for digraphs.
pub trait QuasirandomHost {
    fn vertex_count(&self) -> usize;
    /// Bitmask adjacency: bit v of `row(u)` set iff the edge (arc) u->v exists.
    fn row(&self, u: usize) -> u64;
    /// Number of (in-)neighbors of `v` inside the bitmask `s`.
    fn degree_into(&self, v: usize, s: u64) -> u32;
}

struct GraphHost<'a>(&'a Graph, Vec<u64>);
struct DigraphHost<'a>(&'a Digraph, Vec<u64>, Vec<u64>);

impl<'a> GraphHost<'a> {
    fn new(g: &'a Graph) -> Result<Self> {
        if g.n() > 64 {
            return Err(Error::Usage(format!(
                "bitmask host supports n <= 64, got {}",
                g.n()
            )));
        }
        let rows = (0..g.n())
            .map(|u| g.neighbors(u).fold(0u64, |acc, v| acc | 1 << v))
            .collect();
        Ok(GraphHost(g, rows))
    }
}

impl QuasirandomHost for GraphHost<'_> {
    fn vertex_count(&self) -> usize {
        self.0.n()
    }
    fn row(&self, u: usize) -> u64 {
        self.1[u]
    }
    fn degree_into(&self, v: usize, s: u64) -> u32 {
        (self.1[v] & s).count_ones()
    }
}

impl<'a> DigraphHost<'a> {
    fn new(d: &'a Digraph) -> Result<Self> {
        if d.n() > 64 {
            return Err(Error::Usage(format!(
                "bitmask host supports n <= 64, got {}",
                d.n()
            )));
        }
        let out = (0..d.n())
            .map(|u| d.out_neighbors(u).fold(0u64, |acc, v| acc | 1 << v))
            .collect();
        let inn = (0..d.n())
            .map(|u| d.in_neighbors(u).fold(0u64, |acc, v| acc | 1 << v))
            .collect();
        Ok(DigraphHost(d, out, inn))
    }
}

impl QuasirandomHost for DigraphHost<'_> {
    fn vertex_count(&self) -> usize {
        self.0.n()
    }
    fn row(&self, u: usize) -> u64 {
        self.1[u]
    }
    fn degree_into(&self, v: usize, s: u64) -> u32 {
        (self.2[v] & s).count_ones()
    }
}

fn bits(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// `e(S,T) >= (p - eps) |S| |T|` for all disjoint S, T with `|S|,|T| >= eps n`.
///
/// Exact mode enumerates all 2^n candidate sets S and, for each, builds the
/// worst-case disjoint T greedily (the vertices outside S with the fewest
/// neighbors in S), which is exact because `e(S,T)` is additive over T.
pub fn lower_regularity_check_graph(
    g: &Graph,
    p: f64,
    eps: f64,
    mode: CheckMode,
    seed: u64,
) -> Result<(bool, Option<RegularityWitness>)> {
    lower_regularity_check(&GraphHost::new(g)?, p, eps, mode, seed, g.n())
}

pub fn lower_regularity_check_digraph(
    d: &Digraph,
    p: f64,
    eps: f64,
    mode: CheckMode,
    seed: u64,
) -> Result<(bool, Option<RegularityWitness>)> {
    lower_regularity_check(&DigraphHost::new(d)?, p, eps, mode, seed, d.n())
}

fn lower_regularity_check<H: QuasirandomHost>(
    host: &H,
    p: f64,
    eps: f64,
    mode: CheckMode,
    seed: u64,
    n: usize,
) -> Result<(bool, Option<RegularityWitness>)> {
    let min_size = (eps * n as f64).ceil().max(1.0) as usize;
    match mode {
        CheckMode::Exact => {
            if n > 18 {
                return Err(Error::Usage(format!(
                    "exact regularity check capped at n <= 18, got {n}"
                )));
            }
            for s_mask in 1u64..(1 << n) {
                let s_size = s_mask.count_ones() as usize;
                if s_size < min_size || n - s_size < min_size {
                    continue;
                }
                if let Some(w) = worst_t_violation(host, s_mask, n, p, eps, min_size) {
                    return Ok((false, Some(w)));
                }
            }
            Ok((true, None))
        }
        CheckMode::Sampled { samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
            for _ in 0..samples {
                let mut s_mask = 0u64;
                for v in 0..n {
                    if rng.gen::<bool>() {
                        s_mask |= 1 << v;
                    }
                }
                let s_size = s_mask.count_ones() as usize;
                if s_size < min_size || n - s_size < min_size {
                    continue;
                }
                if let Some(w) = worst_t_violation(host, s_mask, n, p, eps, min_size) {
                    return Ok((false, Some(w)));
                }
            }
            Ok((true, None))
        }
    }
}

// For fixed S, scan T sizes with the greedy worst T; returns a witness
// for the first size that violates the bound.
fn worst_t_violation<H: QuasirandomHost>(
    host: &H,
    s_mask: u64,
    n: usize,
    p: f64,
    eps: f64,
    min_size: usize,
) -> Option<RegularityWitness> {
    let s_size = s_mask.count_ones() as usize;
    let mut outside: Vec<(u32, usize)> = (0..n)
        .filter(|&v| s_mask >> v & 1 == 0)
        .map(|v| (host.degree_into(v, s_mask), v))
        .collect();
    outside.sort();
    let mut acc: u64 = 0;
    for (k, &(d, _)) in outside.iter().enumerate() {
        acc += d as u64;
        let t_size = k + 1;
        if t_size < min_size {
            continue;
        }
        let bound = (p - eps) * (s_size * t_size) as f64;
        if (acc as f64) < bound {
            let t: Vec<usize> = outside[..t_size].iter().map(|&(_, v)| v).collect();
            return Some(RegularityWitness {
                s: bits(s_mask, n),
                t,
                edges_between: acc as usize,
            });
        }
    }
    None
}

/// `|RN_nu(S)| >= |S| + nu * n` for all S with `tau n <= |S| <= (1 - tau) n`,
/// where `RN_nu(S)` collects vertices with at least `nu * n` (in-)neighbors
/// in S. Brute force over all S; capped at n <= 18.
pub fn robust_expander_check_graph(
    g: &Graph,
    nu: f64,
    tau: f64,
) -> Result<(bool, Option<Vec<usize>>)> {
    robust_expander_check(&GraphHost::new(g)?, nu, tau, g.n())
}

pub fn robust_expander_check_digraph(
    d: &Digraph,
    nu: f64,
    tau: f64,
) -> Result<(bool, Option<Vec<usize>>)> {
    robust_expander_check(&DigraphHost::new(d)?, nu, tau, d.n())
}

fn robust_expander_check<H: QuasirandomHost>(
    host: &H,
    nu: f64,
    tau: f64,
    n: usize,
) -> Result<(bool, Option<Vec<usize>>)> {
    if n > 18 {
        return Err(Error::Usage(format!(
            "robust expander check capped at n <= 18, got {n}"
        )));
    }
    let lo = tau * n as f64;
    let hi = (1.0 - tau) * n as f64;
    let threshold = nu * n as f64;
    for s_mask in 1u64..(1 << n) {
        let s_size = s_mask.count_ones() as usize;
        if (s_size as f64) < lo || (s_size as f64) > hi {
            continue;
        }
        let rn = (0..n)
            .filter(|&v| host.degree_into(v, s_mask) as f64 >= threshold)
            .count();
        if (rn as f64) < s_size as f64 + nu * n as f64 {
            return Ok((false, Some(bits(s_mask, n))));
        }
    }
    Ok((true, None))
}

/// Runtime recasts of the facts that hold a.a.s. for G(n,p): bounded degree
/// spread, a unique maximum-degree vertex, and about n/2 odd-degree vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct GnpDiagnostics {
    pub n: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub spread: usize,
    /// `4 * sqrt(n ln n)`.
    pub spread_bound: f64,
    pub spread_ok: bool,
    pub unique_max: bool,
    pub odd_count: usize,
    pub odd_fraction: f64,
}

pub fn gnp_diagnostics(g: &Graph) -> GnpDiagnostics {
    let prof = g.degree_profile();
    let n = g.n();
    let spread_bound = if n > 1 {
        4.0 * ((n as f64) * (n as f64).ln()).sqrt()
    } else {
        0.0
    };
    GnpDiagnostics {
        n,
        max_degree: prof.max_degree,
        min_degree: prof.min_degree,
        spread: prof.spread(),
        spread_bound,
        spread_ok: (prof.spread() as f64) <= spread_bound,
        unique_max: prof.has_unique_max(),
        odd_count: prof.odd_count,
        odd_fraction: if n == 0 {
            0.0
        } else {
            prof.odd_count as f64 / n as f64
        },
    }
}
