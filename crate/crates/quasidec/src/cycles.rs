//! Cycle decompositions: exactly max-degree/2 cycles, consistent with a
//! matching, plus the cycles-and-matching decomposition of arbitrary graphs.
//!
//! The extraction loop keeps two invariants per round: every current
//! maximum-degree vertex is on the extracted cycle (so the maximum drops by
//! exactly two each round and the count comes out to max-degree/2), and a
//! vertex may be covered only while its degree stays above the decay floor
//! `min_degree(G) - round` (so the minimum degree decays at most one per
//! round on average and the remainder stays dense). Other vertices join the
//! cycle's support with probability proportional to their remaining degree,
//! which spreads their coverings evenly over the remaining rounds. Pairs of
//! the matching are sampled jointly, so a cycle containing the lower-degree
//! endpoint always contains the higher one.

use crate::error::{Error, Result};
use crate::exact::{exact_cycle_decomposition, exact_cycle_decomposition_digraph};
use crate::graph::{canon, Digraph, Edge, Graph, PairList};
use crate::hamilton::{find_hamilton_cycle, find_hamilton_cycle_digraph, perfect_matching_even_set};
use crate::orient::eulerian_orientation_quasirandom;
use crate::params::{OrientationConfig, QuasirandomParams};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A cycle decomposition: vertex sequences, in extraction order.
pub type CycleSet = Vec<Vec<usize>>;

// Degrees, forced set and the support sampler shared by both hosts.
trait SchedulerHost {
    fn n(&self) -> usize;
    fn degree(&self, v: usize) -> usize;
    fn edges_left(&self) -> usize;
    /// Hamilton cycle on the induced support, already mapped back to host ids.
    fn induced_hamilton(
        &self,
        support: &[usize],
        rng: &mut ChaCha8Rng,
        restarts: usize,
        min_len: usize,
    ) -> Option<Vec<usize>>;
    /// Successor candidates for routing (out-neighbors on digraphs).
    fn route_neighbors(&self, v: usize) -> Vec<usize>;
    fn has_link(&self, u: usize, v: usize) -> bool;
    fn remove_cycle(&mut self, cycle: &[usize]);
    fn restore_cycle(&mut self, cycle: &[usize]);
    /// Full Hamilton decomposition of the (regular) rest, emptying the host.
    /// The engines behind this carry the factorization-and-merge fallback.
    fn decompose_regular(&mut self, rng: &mut ChaCha8Rng, budget: usize)
        -> Option<Vec<Vec<usize>>>;
}

struct GraphScheduler(Graph);
struct DigraphScheduler(Digraph);

impl SchedulerHost for GraphScheduler {
    fn n(&self) -> usize {
        self.0.n()
    }
    fn degree(&self, v: usize) -> usize {
        self.0.degree(v)
    }
    fn edges_left(&self) -> usize {
        self.0.edge_count()
    }
    fn induced_hamilton(
        &self,
        support: &[usize],
        rng: &mut ChaCha8Rng,
        restarts: usize,
        min_len: usize,
    ) -> Option<Vec<usize>> {
        if support.len() < min_len.max(3) {
            return None;
        }
        let (sub, map) = self.0.induced_subgraph(support).ok()?;
        let cycle = find_hamilton_cycle(&sub, rng, restarts)?;
        Some(cycle.into_iter().map(|v| map[v]).collect())
    }
    fn remove_cycle(&mut self, cycle: &[usize]) {
        for w in cycle.windows(2) {
            self.0.remove_edge(w[0], w[1]).unwrap();
        }
        self.0.remove_edge(*cycle.last().unwrap(), cycle[0]).unwrap();
    }
    fn restore_cycle(&mut self, cycle: &[usize]) {
        for w in cycle.windows(2) {
            self.0.add_edge(w[0], w[1]).unwrap();
        }
        self.0.add_edge(*cycle.last().unwrap(), cycle[0]).unwrap();
    }
    fn decompose_regular(
        &mut self,
        rng: &mut ChaCha8Rng,
        budget: usize,
    ) -> Option<Vec<Vec<usize>>> {
        let support: Vec<usize> = (0..self.0.n()).filter(|&v| self.0.degree(v) > 0).collect();
        let (sub, map) = self.0.induced_subgraph(&support).ok()?;
        let cycles = crate::factor::hamilton_decompose(&sub, rng, budget).ok()?;
        let cycles: Vec<Vec<usize>> = cycles
            .into_iter()
            .map(|c| c.into_iter().map(|v| map[v]).collect())
            .collect();
        for c in &cycles {
            self.remove_cycle(c);
        }
        Some(cycles)
    }
}

impl SchedulerHost for DigraphScheduler {
    fn n(&self) -> usize {
        self.0.n()
    }
    fn degree(&self, v: usize) -> usize {
        self.0.degree(v)
    }
    fn edges_left(&self) -> usize {
        self.0.arc_count()
    }
    fn induced_hamilton(
        &self,
        support: &[usize],
        rng: &mut ChaCha8Rng,
        restarts: usize,
        min_len: usize,
    ) -> Option<Vec<usize>> {
        if support.len() < min_len.max(2) {
            return None;
        }
        let (sub, map) = self.0.induced_subgraph(support).ok()?;
        let cycle = find_hamilton_cycle_digraph(&sub, rng, restarts)?;
        Some(cycle.into_iter().map(|v| map[v]).collect())
    }
    fn remove_cycle(&mut self, cycle: &[usize]) {
        for w in cycle.windows(2) {
            self.0.remove_arc(w[0], w[1]).unwrap();
        }
        self.0.remove_arc(*cycle.last().unwrap(), cycle[0]).unwrap();
    }
    fn restore_cycle(&mut self, cycle: &[usize]) {
        for w in cycle.windows(2) {
            self.0.add_arc(w[0], w[1]).unwrap();
        }
        self.0.add_arc(*cycle.last().unwrap(), cycle[0]).unwrap();
    }
    fn decompose_regular(
        &mut self,
        rng: &mut ChaCha8Rng,
        budget: usize,
    ) -> Option<Vec<Vec<usize>>> {
        let support: Vec<usize> = (0..self.0.n()).filter(|&v| self.0.degree(v) > 0).collect();
        let (sub, map) = self.0.induced_subgraph(&support).ok()?;
        let cycles = crate::factor::hamilton_decompose_digraph(&sub, rng, budget).ok()?;
        let cycles: Vec<Vec<usize>> = cycles
            .into_iter()
            .map(|c| c.into_iter().map(|v| map[v]).collect())
            .collect();
        for c in &cycles {
            self.remove_cycle(c);
        }
        Some(cycles)
    }
}

struct SchedulerConfig {
    min_cycle_len: usize,
    resamples_per_round: usize,
    inner_restarts: usize,
    backtracks: usize,
}

impl Default for SchedulerConfig {
    fn default() -> Self {
        SchedulerConfig {
            min_cycle_len: 2,
            resamples_per_round: 30,
            inner_restarts: 12,
            backtracks: 12,
        }
    }
}

fn run_scheduler<H: SchedulerHost>(
    host: &mut H,
    pairs: &[(usize, usize)],
    eta: f64,
    retry_budget: usize,
    rng: &mut ChaCha8Rng,
    cfg: &SchedulerConfig,
) -> Result<CycleSet> {
    let n = host.n();
    let degrees: Vec<usize> = (0..n).map(|v| host.degree(v)).collect();
    let delta_max = degrees.iter().copied().max().unwrap_or(0);
    let delta_min = degrees.iter().copied().min().unwrap_or(0);
    if delta_max % 2 != 0 {
        return Err(Error::HypothesisViolated {
            what: "maximum degree is odd; input cannot be Eulerian".into(),
        });
    }
    let target = delta_max / 2;
    let overflow_limit = ((2.0 * eta * n as f64).ceil() as usize).max(1);
    if delta_max == 0 {
        return Ok(Vec::new());
    }

    let _ = n;
    let attempts = 1 + retry_budget / 10;
    let mut last_err = Error::NotFound {
        what: "cycle extraction".into(),
    };
    for _ in 0..attempts {
        match scheduler_attempt(
            host,
            pairs,
            delta_max,
            delta_min,
            target,
            overflow_limit,
            rng,
            cfg,
        ) {
            Ok(cycles) => return Ok(cycles),
            Err(e) => {
                if matches!(e, Error::IterationOverflow { .. }) {
                    return Err(e);
                }
                last_err = e;
            }
        }
    }
    Err(last_err)
}

#[allow(clippy::too_many_arguments)]
fn scheduler_attempt<H: SchedulerHost>(
    host: &mut H,
    pairs: &[(usize, usize)],
    delta_max: usize,
    delta_min: usize,
    target: usize,
    overflow_limit: usize,
    rng: &mut ChaCha8Rng,
    cfg: &SchedulerConfig,
) -> Result<CycleSet> {
    let n = host.n();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut backtracks = cfg.backtracks;
    let mut spread_rounds = 0usize;
    // partner[x] = y for ordered pairs (x, y): covering x forces y.
    let mut partner_hi = vec![usize::MAX; n];
    let mut partner_lo = vec![usize::MAX; n];
    for &(x, y) in pairs {
        partner_hi[x] = y;
        partner_lo[y] = x;
    }

    'rounds: while host.edges_left() > 0 {
        let round = cycles.len() + 1;
        let cur_max = (0..n).map(|v| host.degree(v)).max().unwrap();
        // (P4): the maximum drops by exactly 2 per extraction.
        if cur_max != delta_max - 2 * cycles.len() {
            return Err(Error::HypothesisViolated {
                what: format!(
                    "degree decay broke: max {cur_max} after {} extractions",
                    cycles.len()
                ),
            });
        }
        let support_regular =
            (0..n).all(|v| host.degree(v) == cur_max || host.degree(v) == 0);
        if support_regular {
            // The rest is a regular graph: hand it to the Hamilton
            // decomposition engine, which has the stronger fallbacks.
            if std::env::var("QD_TRACE").is_ok() {
                eprintln!("round {round}: support regular at max {cur_max}");
            }
            if let Some(mut tail) = host.decompose_regular(rng, 60) {
                cycles.append(&mut tail);
                continue 'rounds;
            }
            if std::env::var("QD_TRACE").is_ok() {
                eprintln!("round {round}: delegation FAILED");
            }
        } else {
            spread_rounds += 1;
            if spread_rounds > overflow_limit {
                return Err(Error::IterationOverflow {
                    steps: spread_rounds,
                    limit: overflow_limit,
                });
            }
        }
        // Decay floor: cover v only while the removal keeps
        // degree(v) >= delta_min - round (Eq-(1)-style bound).
        let floor = delta_min.saturating_sub(round);

        for resample in 0..cfg.resamples_per_round {
            let support = sample_support(
                host,
                cur_max,
                floor,
                &partner_hi,
                &partner_lo,
                rng,
                resample,
            );
            if let Some(cycle) =
                host.induced_hamilton(&support, rng, cfg.inner_restarts, cfg.min_cycle_len)
            {
                host.remove_cycle(&cycle);
                cycles.push(cycle);
                continue 'rounds;
            }
        }
        // Round failed: backtrack a little, then give up on this attempt.
        if backtracks == 0 || cycles.is_empty() {
            for c in cycles.iter().rev() {
                host.restore_cycle(c);
            }
            return Err(Error::NotFound {
                what: format!("cycle through all maximum-degree vertices (round {round})"),
            });
        }
        backtracks -= 1;
        let depth = 1 + rng.gen_range(0..cycles.len().min(3));
        for _ in 0..depth {
            let c = cycles.pop().unwrap();
            host.restore_cycle(&c);
            if spread_rounds > 0 {
                spread_rounds -= 1;
            }
        }
    }
    if cycles.len() != target {
        for c in cycles.iter().rev() {
            host.restore_cycle(c);
        }
        return Err(Error::HypothesisViolated {
            what: format!("extracted {} cycles, expected {target}", cycles.len()),
        });
    }
    Ok(cycles)
}

fn sample_support<H: SchedulerHost>(
    host: &H,
    cur_max: usize,
    floor: usize,
    partner_hi: &[usize],
    partner_lo: &[usize],
    rng: &mut ChaCha8Rng,
    resample: usize,
) -> Vec<usize> {
    let n = host.n();
    let mut in_support = vec![false; n];
    // Current-minimum vertices are never covered while the graph is
    // irregular: the spread then closes at 2 per round and the remainder
    // goes regular at the full minimum degree, which keeps the final
    // Hamilton decomposition as dense as possible.
    let cur_min = (0..n)
        .map(|v| host.degree(v))
        .filter(|&d| d > 0)
        .min()
        .unwrap_or(0);
    // Sparing the minimum is a preference, not a law: late resamples relax
    // it so a straggling near-max vertex can still be routed through.
    let spare_min = resample < 12;
    let eligible = |v: usize| {
        let d = host.degree(v);
        d >= floor + 2 && (!spare_min || d > cur_min)
    };
    // Forced: all current-maximum vertices. Pair closure is automatic here:
    // the higher-degree partner of a maximum vertex is itself maximum.
    for v in 0..n {
        if host.degree(v) == cur_max {
            in_support[v] = true;
        }
    }
    let mut optional: Vec<usize> = (0..n)
        .filter(|&v| !in_support[v] && host.degree(v) > 0)
        .collect();
    optional.shuffle(rng);
    // Alternate between fatter supports (easier to close when dense) and
    // lean ones (cheaper cycles that spare the thin end of the graph).
    let boost = match resample % 3 {
        0 => 1.0 + 0.1 * (resample / 3) as f64,
        1 => 0.5,
        _ => 1.6,
    };
    for &v in &optional {
        if in_support[v] {
            continue;
        }
        if !eligible(v) {
            continue;
        }
        // Spread the extra coverings of v evenly over the spread phase.
        let d = host.degree(v);
        let q = if cur_max == cur_min {
            1.0
        } else if d > cur_min {
            ((d - cur_min) as f64 / (cur_max - cur_min) as f64 * boost).min(1.0)
        } else {
            0.25
        };
        if !rng.gen_bool(q) {
            continue;
        }
        if partner_hi[v] != usize::MAX {
            // v is the lower endpoint: bring the partner along or skip.
            let y = partner_hi[v];
            if in_support[y] {
                in_support[v] = true;
            } else if eligible(y) && host.degree(y) > 0 {
                in_support[v] = true;
                in_support[y] = true;
            }
        } else if partner_lo[v] != usize::MAX {
            // v is the higher endpoint: joining alone is allowed only while
            // it stays ahead of its partner.
            let x = partner_lo[v];
            if in_support[x] || host.degree(v) >= host.degree(x) + 2 {
                in_support[v] = true;
            }
        } else {
            in_support[v] = true;
        }
    }
    (0..n).filter(|&v| in_support[v]).collect()
}

fn normalize_pairs(m: &PairList, degree_of: impl Fn(usize) -> usize) -> Vec<(usize, usize)> {
    m.ordered_for(degree_of).pairs().to_vec()
}

/// Decomposes an Eulerian digraph into exactly `max_degree/2` directed
/// cycles consistent with `m` (total degree; every maximum-degree vertex is
/// on every cycle).
pub fn decompose_cycles_directed(
    d: &Digraph,
    m: &PairList,
    params: &QuasirandomParams,
    rng: &mut ChaCha8Rng,
) -> Result<CycleSet> {
    if !d.is_eulerian() {
        return Err(Error::HypothesisViolated {
            what: "digraph is not Eulerian".into(),
        });
    }
    let prof = d.degree_profile();
    if (prof.spread() as f64) > params.eta * d.n() as f64 {
        return Err(Error::HypothesisViolated {
            what: format!(
                "degree spread {} exceeds eta*n = {}",
                prof.spread(),
                params.eta * d.n() as f64
            ),
        });
    }
    let pairs = normalize_pairs(m, |v| d.degree(v));
    let mut host = DigraphScheduler(d.clone());
    let out = run_scheduler(
        &mut host,
        &pairs,
        params.eta,
        params.retry_budget,
        rng,
        &SchedulerConfig::default(),
    );
    match out {
        Err(Error::NotFound { .. }) if d.n() <= 8 => {
            let target = d.degree_profile().max_degree / 2;
            let mut budget = 1 << 22;
            exact_cycle_decomposition_digraph(d, &pairs, target, &mut budget).ok_or(
                Error::NotFound {
                    what: "no consistent cycle decomposition exists (exact search)".into(),
                },
            )
        }
        other => other,
    }
}

pub(crate) fn decompose_cycles_directed_with_min_len(
    d: &Digraph,
    m: &PairList,
    params: &QuasirandomParams,
    rng: &mut ChaCha8Rng,
    min_cycle_len: usize,
) -> Result<CycleSet> {
    if !d.is_eulerian() {
        return Err(Error::HypothesisViolated {
            what: "digraph is not Eulerian".into(),
        });
    }
    let pairs = normalize_pairs(m, |v| d.degree(v));
    let mut host = DigraphScheduler(d.clone());
    let cfg = SchedulerConfig {
        min_cycle_len,
        ..Default::default()
    };
    run_scheduler(&mut host, &pairs, params.eta, params.retry_budget, rng, &cfg)
}

/// Undirected variant, run directly on the graph (route A).
pub fn decompose_cycles_undirected(
    g: &Graph,
    m: &PairList,
    params: &QuasirandomParams,
    rng: &mut ChaCha8Rng,
) -> Result<CycleSet> {
    if !g.is_eulerian() {
        return Err(Error::HypothesisViolated {
            what: "graph is not Eulerian".into(),
        });
    }
    let prof = g.degree_profile();
    if (prof.spread() as f64) > params.eta * g.n() as f64 {
        return Err(Error::HypothesisViolated {
            what: format!(
                "degree spread {} exceeds eta*n = {}",
                prof.spread(),
                params.eta * g.n() as f64
            ),
        });
    }
    let pairs = normalize_pairs(m, |v| g.degree(v));
    let mut host = GraphScheduler(g.clone());
    let cfg = SchedulerConfig {
        min_cycle_len: 3,
        ..Default::default()
    };
    let out = run_scheduler(&mut host, &pairs, params.eta, params.retry_budget, rng, &cfg);
    match out {
        Err(Error::NotFound { .. }) if g.n() <= 12 => {
            let target = g.degree_profile().max_degree / 2;
            let mut budget = 1 << 22;
            exact_cycle_decomposition(g, &pairs, target, &mut budget).ok_or(Error::NotFound {
                what: "no consistent cycle decomposition exists (exact search)".into(),
            })
        }
        other => other,
    }
}

/// Route B: orient the graph Eulerianly, decompose the digraph, forget
/// directions. Exposed to exercise the orientation lemma end to end.
pub fn decompose_cycles_undirected_via_orientation(
    g: &Graph,
    m: &PairList,
    params: &QuasirandomParams,
    rng: &mut ChaCha8Rng,
) -> Result<CycleSet> {
    if !g.is_eulerian() {
        return Err(Error::HypothesisViolated {
            what: "graph is not Eulerian".into(),
        });
    }
    let oriented = eulerian_orientation_quasirandom(g, params, &OrientationConfig::default(), rng)?;
    decompose_cycles_directed_with_min_len(&oriented, m, params, rng, 3)
}

/// Cycles plus matching: a perfect matching on the odd-degree set is removed
/// first, then the Eulerian remainder splits into floor(max_degree/2)
/// cycles. Together they partition the edges.
pub fn decompose_cycles_plus_matching(
    g: &Graph,
    params: &QuasirandomParams,
    rng: &mut ChaCha8Rng,
) -> Result<(CycleSet, Vec<Edge>)> {
    let prof = g.degree_profile();
    let target_cycles = prof.max_degree / 2;
    let mut last_err = Error::NotFound {
        what: "cycles plus matching".into(),
    };
    let matching_tries = 4;
    for _ in 0..matching_tries {
        let matching: Vec<Edge> = if prof.odd_set.is_empty() {
            Vec::new()
        } else {
            let (sub, map) = g.induced_subgraph(&prof.odd_set)?;
            match perfect_matching_even_set(&sub, rng, params.retry_budget) {
                Ok(m) => m.iter().map(|&(u, v)| canon(map[u], map[v])).collect(),
                Err(e) => {
                    last_err = e;
                    continue;
                }
            }
        };
        let reduced = g.remove_edges(matching.iter())?;
        let reduced_prof = reduced.degree_profile();
        if reduced_prof.max_degree != 2 * target_cycles {
            last_err = Error::HypothesisViolated {
                what: format!(
                    "matching removal left max degree {}, expected {}",
                    reduced_prof.max_degree,
                    2 * target_cycles
                ),
            };
            continue;
        }
        match decompose_cycles_undirected(&reduced, &PairList::empty(), params, rng) {
            Ok(cycles) => {
                debug_assert_eq!(cycles.len(), target_cycles);
                debug_assert_eq!(matching.len() * 2, prof.odd_count);
                return Ok((cycles, matching));
            }
            Err(e) => last_err = e,
        }
    }
    Err(last_err)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gnp::gen_gnp;
    use rand::SeedableRng;
    use std::collections::BTreeSet;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn params_for(g: &Graph, p: f64) -> QuasirandomParams {
        QuasirandomParams::profile_for_graph(p, g.n(), &g.degree_profile()).unwrap()
    }

    fn assert_cycle_partition(g: &Graph, cycles: &CycleSet) {
        let mut remaining: BTreeSet<Edge> = g.edges().into_iter().collect();
        for c in cycles {
            assert!(c.len() >= 3);
            let mut seen = BTreeSet::new();
            for &v in c {
                assert!(seen.insert(v), "vertex repeated in cycle");
            }
            let mut es: Vec<Edge> = c.windows(2).map(|w| canon(w[0], w[1])).collect();
            es.push(canon(*c.last().unwrap(), c[0]));
            for e in es {
                assert!(remaining.remove(&e), "edge {e:?} reused or missing");
            }
        }
        assert!(remaining.is_empty(), "uncovered edges: {remaining:?}");
    }

    fn assert_arc_partition(d: &Digraph, cycles: &CycleSet) {
        let mut remaining: BTreeSet<(usize, usize)> = d.arcs().into_iter().collect();
        for c in cycles {
            for w in c.windows(2) {
                assert!(remaining.remove(&(w[0], w[1])));
            }
            assert!(remaining.remove(&(*c.last().unwrap(), c[0])));
        }
        assert!(remaining.is_empty());
    }

    #[test]
    fn directed_c6_is_single_cycle() {
        let d = Digraph::from_arcs(6, (0..6).map(|v| (v, (v + 1) % 6))).unwrap();
        let params = QuasirandomParams::default_profile(0.5).unwrap();
        let cycles =
            decompose_cycles_directed(&d, &PairList::empty(), &params, &mut rng(1)).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_arc_partition(&d, &cycles);
    }

    #[test]
    fn directed_complete5_four_hamilton_cycles() {
        let d = Digraph::symmetric_orientation(&Graph::complete(5));
        let params = QuasirandomParams::default_profile(0.5).unwrap();
        let cycles =
            decompose_cycles_directed(&d, &PairList::empty(), &params, &mut rng(2)).unwrap();
        assert_eq!(cycles.len(), 4);
        assert_arc_partition(&d, &cycles);
        for c in &cycles {
            assert_eq!(c.len(), 5, "regular input: every cycle spans");
        }
    }

    #[test]
    fn directed_gnp60_with_pairs() {
        let g = gen_gnp(60, 0.5, 8).unwrap();
        let d = Digraph::symmetric_orientation(&g);
        let params =
            QuasirandomParams::profile_for_graph(0.5, d.n(), &d.degree_profile()).unwrap();
        let m = PairList::new(vec![(0, 1), (2, 3), (4, 5), (6, 7), (8, 9)]).unwrap();
        let cycles = decompose_cycles_directed(&d, &m, &params, &mut rng(3)).unwrap();
        assert_eq!(cycles.len(), d.degree_profile().max_degree / 2);
        assert_arc_partition(&d, &cycles);
        // Consistency under the degree ordering.
        let ordered = m.ordered_for(|v| d.degree(v));
        for c in &cycles {
            let on: BTreeSet<usize> = c.iter().copied().collect();
            for (x, y) in ordered.iter() {
                assert!(!on.contains(&x) || on.contains(&y));
            }
        }
    }

    #[test]
    fn undirected_c8_is_itself() {
        let g = Graph::cycle(8);
        let params = QuasirandomParams::default_profile(0.5).unwrap();
        let cycles =
            decompose_cycles_undirected(&g, &PairList::empty(), &params, &mut rng(4)).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_cycle_partition(&g, &cycles);
    }

    #[test]
    fn undirected_k5_two_cycles() {
        let g = Graph::complete(5);
        let params = QuasirandomParams::default_profile(0.5).unwrap();
        let cycles =
            decompose_cycles_undirected(&g, &PairList::empty(), &params, &mut rng(5)).unwrap();
        assert_eq!(cycles.len(), 2);
        assert_cycle_partition(&g, &cycles);
    }

    #[test]
    fn undirected_k7_with_pair_consistency() {
        let g = Graph::complete(7);
        let params = QuasirandomParams::default_profile(0.5).unwrap();
        let m = PairList::new(vec![(0, 1)]).unwrap();
        let cycles = decompose_cycles_undirected(&g, &m, &params, &mut rng(6)).unwrap();
        assert_eq!(cycles.len(), 3);
        assert_cycle_partition(&g, &cycles);
        for c in &cycles {
            assert!(c.contains(&0) && c.contains(&1));
        }
    }

    #[test]
    fn non_eulerian_rejected() {
        let params = QuasirandomParams::default_profile(0.5).unwrap();
        assert!(matches!(
            decompose_cycles_undirected(
                &Graph::complete(4),
                &PairList::empty(),
                &params,
                &mut rng(7)
            ),
            Err(Error::HypothesisViolated { .. })
        ));
    }

    #[test]
    fn spread_gate_rejects_with_strict_eta() {
        // A star-like Eulerian graph has huge spread; the strict default
        // profile must refuse it.
        let mut g = Graph::new(9);
        for i in 1..=8 {
            g.add_edge(0, i).unwrap();
        }
        for i in (1..8).step_by(2) {
            g.add_edge(i, i + 1).unwrap();
        }
        assert!(g.is_eulerian());
        let params = QuasirandomParams::default_profile(0.5).unwrap();
        assert!(matches!(
            decompose_cycles_undirected(&g, &PairList::empty(), &params, &mut rng(8)),
            Err(Error::HypothesisViolated { .. })
        ));
    }

    #[test]
    fn route_b_matches_route_a_counts() {
        let g = gen_gnp(30, 0.5, 17).unwrap();
        // Make Eulerian by pairing off odd vertices inside the odd set.
        let prof = g.degree_profile();
        let (sub, map) = g.induced_subgraph(&prof.odd_set).unwrap();
        let m = perfect_matching_even_set(&sub, &mut rng(9), 100).unwrap();
        let even = g
            .remove_edges(
                m.iter()
                    .map(|&(u, v)| canon(map[u], map[v]))
                    .collect::<Vec<_>>()
                    .iter(),
            )
            .unwrap();
        let params = params_for(&even, 0.5);
        let a = decompose_cycles_undirected(&even, &PairList::empty(), &params, &mut rng(10))
            .unwrap();
        let b = decompose_cycles_undirected_via_orientation(
            &even,
            &PairList::empty(),
            &params,
            &mut rng(11),
        )
        .unwrap();
        assert_eq!(a.len(), b.len());
        assert_cycle_partition(&even, &a);
        assert_cycle_partition(&even, &b);
    }

    #[test]
    fn plus_matching_k4() {
        let g = Graph::complete(4);
        let params = QuasirandomParams::default_profile(0.5).unwrap();
        let (cycles, matching) = decompose_cycles_plus_matching(&g, &params, &mut rng(12)).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 4);
        assert_eq!(matching.len(), 2);
        // Together they partition E(K4).
        let mut all: Vec<Edge> = matching.clone();
        for c in &cycles {
            all.extend(c.windows(2).map(|w| canon(w[0], w[1])));
            all.push(canon(*c.last().unwrap(), c[0]));
        }
        all.sort();
        assert_eq!(all, g.edges());
    }

    #[test]
    fn plus_matching_c6_empty_matching() {
        let g = Graph::cycle(6);
        let params = QuasirandomParams::default_profile(0.5).unwrap();
        let (cycles, matching) = decompose_cycles_plus_matching(&g, &params, &mut rng(13)).unwrap();
        assert_eq!(cycles.len(), 1);
        assert!(matching.is_empty());
    }

    #[test]
    fn plus_matching_gnp80() {
        let g = gen_gnp(80, 0.5, 12).unwrap();
        let prof = g.degree_profile();
        let params = params_for(&g, 0.5);
        let (cycles, matching) = decompose_cycles_plus_matching(&g, &params, &mut rng(14)).unwrap();
        assert_eq!(cycles.len(), prof.max_degree / 2);
        assert_eq!(matching.len(), prof.odd_count / 2);
        let reduced = g.remove_edges(matching.iter()).unwrap();
        assert_cycle_partition(&reduced, &cycles);
    }

    #[test]
    fn p4_decay_holds_along_extraction_order() {
        let g = gen_gnp(40, 0.5, 33).unwrap();
        let params = params_for(&g, 0.5);
        let (cycles, matching) = decompose_cycles_plus_matching(&g, &params, &mut rng(15)).unwrap();
        let mut work = g.remove_edges(matching.iter()).unwrap();
        let delta0 = work.degree_profile().max_degree;
        for (i, c) in cycles.iter().enumerate() {
            assert_eq!(work.degree_profile().max_degree, delta0 - 2 * i);
            for w in c.windows(2) {
                work.remove_edge(w[0], w[1]).unwrap();
            }
            work.remove_edge(*c.last().unwrap(), c[0]).unwrap();
        }
        assert_eq!(work.edge_count(), 0);
    }
}
