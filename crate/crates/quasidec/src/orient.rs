//! Randomized matching-respecting partitions, degree-prescribed subdigraphs
//! via max flow, and the quasirandomness-preserving Eulerian orientation.

use crate::error::{Error, Result};
pub use crate::euler::cycle_peel_orientation;
use crate::flow::FlowNetwork;
use crate::graph::{Digraph, Graph, PairList};
use crate::params::{OrientationConfig, QuasirandomParams};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A vertex set S with `n/3 <= |S| <= 2n/3`; the complement is implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub s: Vec<usize>,
}

impl SplitPartition {
    pub fn membership(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.s {
            m[v] = true;
        }
        m
    }
}

/// Picks S by flipping one fair coin per pair of a pairing that extends `m`
/// to cover all but at most one vertex, then retests the required conditions
/// and retries up to the budget:
/// size balance, all four S/S-bar in/out degree counts at least `alpha*n/6`,
/// and no pair of `m` separated.
pub fn split_partition(
    d: &Digraph,
    m: &PairList,
    alpha: f64,
    rng: &mut ChaCha8Rng,
    retry_budget: usize,
) -> Result<SplitPartition> {
    let n = d.n();
    if n == 0 {
        return Err(Error::Usage("split_partition on empty digraph".into()));
    }
    for (x, y) in m.iter() {
        if x >= n || y >= n {
            return Err(Error::Usage(format!("pair ({x},{y}) out of range")));
        }
    }
    // Extend the pairing over the uncovered vertices.
    let covered = m.covered_vertices();
    let free: Vec<usize> = (0..n).filter(|v| !covered.contains(v)).collect();
    let mut pairs: Vec<(usize, usize)> = m.iter().collect();
    for chunk in free.chunks(2) {
        if let [a, b] = *chunk {
            pairs.push((a, b));
        }
    }
    let leftover = if free.len() % 2 == 1 { free.last().copied() } else { None };

    let threshold = alpha * n as f64 / 6.0;
    for _ in 0..retry_budget.max(1) {
        let mut in_s = vec![false; n];
        for &(x, y) in &pairs {
            if rng.gen::<bool>() {
                in_s[x] = true;
                in_s[y] = true;
            }
        }
        if let Some(v) = leftover {
            in_s[v] = rng.gen::<bool>();
        }
        let size = in_s.iter().filter(|&&b| b).count();
        if 3 * size < n || 3 * size > 2 * n {
            continue;
        }
        if m.iter().any(|(x, y)| in_s[x] != in_s[y]) {
            continue;
        }
        let ok = (0..n).all(|x| {
            let mut ds = [0usize; 4]; // out/in into S, out/in into complement
            for w in d.out_neighbors(x) {
                ds[if in_s[w] { 0 } else { 2 }] += 1;
            }
            for w in d.in_neighbors(x) {
                ds[if in_s[w] { 1 } else { 3 }] += 1;
            }
            ds.iter().all(|&c| c as f64 >= threshold)
        });
        if ok {
            let s: Vec<usize> = (0..n).filter(|&v| in_s[v]).collect();
            return Ok(SplitPartition { s });
        }
    }
    Err(Error::RetryExhausted {
        what: format!("split_partition conditions not met in {retry_budget} tries"),
    })
}

/// Exact out/in-degree targets per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreePrescription {
    pub n_plus: Vec<usize>,
    pub n_minus: Vec<usize>,
}

impl DegreePrescription {
    pub fn new(n_plus: Vec<usize>, n_minus: Vec<usize>) -> Result<Self> {
        if n_plus.len() != n_minus.len() {
            return Err(Error::Usage("prescription length mismatch".into()));
        }
        let sp: usize = n_plus.iter().sum();
        let sm: usize = n_minus.iter().sum();
        if sp != sm {
            return Err(Error::Usage(format!(
                "prescription sums differ: out {sp} vs in {sm}"
            )));
        }
        Ok(DegreePrescription { n_plus, n_minus })
    }
}

/// Spanning subdigraph with exactly the prescribed out/in degrees, by
/// integral max flow on the bipartite arc network: source -> v with capacity
/// `n_plus[v]`, one unit per arc, u -> sink with capacity `n_minus[u]`.
pub fn degree_prescribed_subdigraph(d: &Digraph, presc: &DegreePrescription) -> Result<Digraph> {
    let n = d.n();
    if presc.n_plus.len() != n {
        return Err(Error::Usage("prescription does not match vertex count".into()));
    }
    let demand: usize = presc.n_plus.iter().sum();
    for v in 0..n {
        if presc.n_plus[v] > d.out_degree(v) || presc.n_minus[v] > d.in_degree(v) {
            return Err(Error::Infeasible {
                what: format!(
                    "vertex {v}: prescription ({}, {}) exceeds degrees ({}, {})",
                    presc.n_plus[v],
                    presc.n_minus[v],
                    d.out_degree(v),
                    d.in_degree(v)
                ),
            });
        }
    }
    let (s, t) = (2 * n, 2 * n + 1);
    let mut net = FlowNetwork::new(2 * n + 2);
    for v in 0..n {
        net.add_edge(s, v, presc.n_plus[v] as i64);
        net.add_edge(n + v, t, presc.n_minus[v] as i64);
    }
    let arcs = d.arcs();
    let ids: Vec<usize> = arcs
        .iter()
        .map(|&(u, v)| net.add_edge(u, n + v, 1))
        .collect();
    let value = net.max_flow(s, t);
    if value != demand as i64 {
        return Err(Error::Infeasible {
            what: format!("max flow {value} < required {demand}"),
        });
    }
    let mut sub = Digraph::new(n);
    for (i, &(u, v)) in arcs.iter().enumerate() {
        if net.flow_on(ids[i]) == 1 {
            sub.add_arc(u, v)?;
        }
    }
    debug_assert!((0..n)
        .all(|v| sub.out_degree(v) == presc.n_plus[v] && sub.in_degree(v) == presc.n_minus[v]));
    Ok(sub)
}

/// Eulerian orientation of an even-degree graph, built to preserve
/// quasirandomness: randomly split and orient the edges into G1 and G2,
/// prescribe degrees on G2 that cancel G1's imbalance, realize them by max
/// flow, and orient the Eulerian leftover by cycle peeling.
///
/// After the retry budget the split degenerates to "everything in the
/// leftover", which is always feasible; small inputs routinely land there.
pub fn eulerian_orientation_quasirandom(
    g: &Graph,
    _params: &QuasirandomParams,
    config: &OrientationConfig,
    rng: &mut ChaCha8Rng,
) -> Result<Digraph> {
    if !g.is_eulerian() {
        return Err(Error::HypothesisViolated {
            what: "orientation needs an Eulerian graph (all degrees even)".into(),
        });
    }
    let n = g.n();
    let edges = g.edges();
    for attempt in 0..=config.retry_budget {
        let degenerate = attempt == config.retry_budget;
        let mut g1 = Digraph::new(n);
        let mut g2 = Digraph::new(n);
        for &(u, v) in &edges {
            if degenerate {
                continue;
            }
            let (a, b) = if rng.gen::<bool>() { (u, v) } else { (v, u) };
            if rng.gen::<bool>() {
                g1.add_arc(a, b)?;
            } else {
                g2.add_arc(a, b)?;
            }
        }
        let imb: Vec<i64> = (0..n)
            .map(|x| g1.out_degree(x) as i64 - g1.in_degree(x) as i64)
            .collect();
        let max_imb = imb.iter().map(|v| v.unsigned_abs() as usize).max().unwrap_or(0);
        let xi_n = match config.xi {
            Some(xi) => (xi * n as f64).round() as usize,
            None => max_imb,
        };
        let mut n_plus = vec![0usize; n];
        let mut n_minus = vec![0usize; n];
        for x in 0..n {
            if imb[x] >= 0 {
                n_plus[x] = xi_n;
                n_minus[x] = xi_n + imb[x] as usize;
            } else {
                n_minus[x] = xi_n;
                n_plus[x] = xi_n + (-imb[x]) as usize;
            }
        }
        let feasible = (0..n)
            .all(|x| n_plus[x] <= g2.out_degree(x) && n_minus[x] <= g2.in_degree(x));
        if !feasible {
            continue;
        }
        let presc = DegreePrescription::new(n_plus, n_minus)?;
        let g2_sub = match degree_prescribed_subdigraph(&g2, &presc) {
            Ok(sub) => sub,
            Err(Error::Infeasible { .. }) => continue,
            Err(e) => return Err(e),
        };
        // Balanced core: G1 plus the flow correction.
        let mut oriented = g1.clone();
        for (u, v) in g2_sub.arcs() {
            oriented.add_arc(u, v)?;
        }
        debug_assert!(oriented.is_eulerian());
        // Leftover H is Eulerian; orient by consistent cycles.
        let mut h = Graph::new(n);
        for &(u, v) in &edges {
            if !oriented.has_arc(u, v) && !oriented.has_arc(v, u) {
                h.add_edge(u, v)?;
            }
        }
        let h_oriented = cycle_peel_orientation(&h)?;
        for (u, v) in h_oriented.arcs() {
            oriented.add_arc(u, v)?;
        }
        if !oriented.is_eulerian() {
            return Err(Error::HypothesisViolated {
                what: "internal: assembled orientation is not balanced".into(),
            });
        }
        debug_assert_eq!(oriented.underlying_graph()?, *g);
        return Ok(oriented);
    }
    Err(Error::RetryExhausted {
        what: "eulerian orientation split never fed a feasible flow".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gnp::gen_gnp;
    use rand::SeedableRng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn split_complete_digraph_12() {
        let d = Digraph::symmetric_orientation(&Graph::complete(12));
        let sp = split_partition(&d, &PairList::empty(), 0.5, &mut rng(1), 100).unwrap();
        assert!(sp.s.len() >= 4 && sp.s.len() <= 8);
        let m = sp.membership(12);
        let thr = 0.5 * 12.0 / 6.0;
        for x in 0..12 {
            let din_s = d.in_neighbors(x).filter(|&w| m[w]).count();
            let dout_s = d.out_neighbors(x).filter(|&w| m[w]).count();
            let din_c = d.in_neighbors(x).filter(|&w| !m[w]).count();
            let dout_c = d.out_neighbors(x).filter(|&w| !m[w]).count();
            assert!([din_s, dout_s, din_c, dout_c]
                .iter()
                .all(|&c| c as f64 >= thr));
        }
    }

    #[test]
    fn split_respects_matching() {
        let d = Digraph::symmetric_orientation(&Graph::complete(12));
        let m = PairList::new(vec![(0, 1)]).unwrap();
        for seed in 0..10 {
            let sp = split_partition(&d, &m, 0.5, &mut rng(seed), 100).unwrap();
            let mem = sp.membership(12);
            assert_eq!(mem[0], mem[1]);
        }
    }

    #[test]
    fn split_gnp60_with_ten_pairs() {
        let g = gen_gnp(60, 0.5, 9).unwrap();
        let d = Digraph::symmetric_orientation(&g);
        let pairs = PairList::new((0..10).map(|i| (2 * i, 2 * i + 1)).collect()).unwrap();
        let sp = split_partition(&d, &pairs, 0.25, &mut rng(2), 100).unwrap();
        let mem = sp.membership(60);
        for (x, y) in pairs.iter() {
            assert_eq!(mem[x], mem[y]);
        }
        assert!(3 * sp.s.len() >= 60 && 3 * sp.s.len() <= 120);
    }

    #[test]
    fn split_exhausts_on_impossible_demand() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(
            split_partition(&d, &PairList::empty(), 0.9, &mut rng(3), 20),
            Err(Error::RetryExhausted { .. })
        ));
    }

    #[test]
    fn prescription_all_ones_is_directed_triangle() {
        let d = Digraph::symmetric_orientation(&Graph::complete(3));
        let presc = DegreePrescription::new(vec![1; 3], vec![1; 3]).unwrap();
        let sub = degree_prescribed_subdigraph(&d, &presc).unwrap();
        assert_eq!(sub.arc_count(), 3);
        for v in 0..3 {
            assert_eq!((sub.out_degree(v), sub.in_degree(v)), (1, 1));
        }
    }

    #[test]
    fn prescription_zero_and_single_arc() {
        let d = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        let empty =
            degree_prescribed_subdigraph(&d, &DegreePrescription::new(vec![0, 0], vec![0, 0]).unwrap())
                .unwrap();
        assert_eq!(empty.arc_count(), 0);
        let one =
            degree_prescribed_subdigraph(&d, &DegreePrescription::new(vec![1, 0], vec![0, 1]).unwrap())
                .unwrap();
        assert_eq!(one.arcs(), vec![(0, 1)]);
    }

    #[test]
    fn prescription_infeasible_detected() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        let presc = DegreePrescription::new(vec![1, 1, 0], vec![0, 0, 2]);
        // Sums match (2 = 2) but vertex 2 has in-degree 1 < 2.
        assert!(matches!(
            degree_prescribed_subdigraph(&d, &presc.unwrap()),
            Err(Error::Infeasible { .. })
        ));
    }

    fn params() -> QuasirandomParams {
        QuasirandomParams::default_profile(0.5).unwrap()
    }

    #[test]
    fn orient_c4_is_directed_cycle() {
        let g = Graph::cycle(4);
        let d =
            eulerian_orientation_quasirandom(&g, &params(), &OrientationConfig::default(), &mut rng(4))
                .unwrap();
        assert!(d.is_eulerian());
        assert_eq!(d.underlying_graph().unwrap(), g);
        for v in 0..4 {
            assert_eq!((d.out_degree(v), d.in_degree(v)), (1, 1));
        }
    }

    #[test]
    fn orient_k5_balanced() {
        let g = Graph::complete(5);
        let d =
            eulerian_orientation_quasirandom(&g, &params(), &OrientationConfig::default(), &mut rng(5))
                .unwrap();
        assert!(d.is_eulerian());
        assert_eq!(d.underlying_graph().unwrap(), g);
        for v in 0..5 {
            assert_eq!((d.out_degree(v), d.in_degree(v)), (2, 2));
        }
    }

    #[test]
    fn orient_gnp60_after_pairing_off_odd_vertices() {
        let g = gen_gnp(60, 0.5, 4).unwrap();
        let prof = g.degree_profile();
        let (sub, map) = g.induced_subgraph(&prof.odd_set).unwrap();
        let m = crate::hamilton::perfect_matching_even_set(&sub, &mut rng(6), 100).unwrap();
        let even = g
            .remove_edges(
                m.iter()
                    .map(|&(u, v)| crate::graph::canon(map[u], map[v]))
                    .collect::<Vec<_>>()
                    .iter(),
            )
            .unwrap();
        assert!(even.is_eulerian());
        let d = eulerian_orientation_quasirandom(
            &even,
            &params(),
            &OrientationConfig::default(),
            &mut rng(7),
        )
        .unwrap();
        assert!(d.is_eulerian());
        assert_eq!(d.underlying_graph().unwrap(), even);
    }

    #[test]
    fn orient_rejects_odd_degrees() {
        assert!(matches!(
            eulerian_orientation_quasirandom(
                &Graph::complete(4),
                &params(),
                &OrientationConfig::default(),
                &mut rng(8)
            ),
            Err(Error::HypothesisViolated { .. })
        ));
    }
}
