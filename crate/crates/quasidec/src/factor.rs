//! Regular-graph factorizations and the Hamilton decomposition engine.
//!
//! The engine extracts Hamilton cycles greedily with bounded backtracking.
//! When extraction stalls it falls back to a factorization (2-factors for
//! graphs, 1-factors for digraphs) followed by cycle-merging edge swaps that
//! drive every factor down to a single spanning cycle.

use crate::error::{Error, Result};
use crate::euler::eulerian_orientation_instances;
use crate::exact::{exact_cycle_decomposition, exact_cycle_decomposition_digraph};
use crate::graph::{canon, Digraph, Edge, Graph};
use crate::hamilton::{find_hamilton_cycle, find_hamilton_cycle_digraph};
use crate::matching::BipartiteMulti;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Splits a 2k-regular graph into k spanning 2-factors: orient along an
/// Eulerian circuit, then peel perfect matchings off the k-regular bipartite
/// out/in incidence graph.
pub fn two_factorization(g: &Graph) -> Result<Vec<Graph>> {
    let factors = two_factor_split(g, None)?;
    factors
        .into_iter()
        .map(|edges| Graph::from_edges(g.n(), edges))
        .collect()
}

pub(crate) fn two_factor_split(
    g: &Graph,
    rng: Option<&mut ChaCha8Rng>,
) -> Result<Vec<Vec<Edge>>> {
    let r = g.is_regular().ok_or_else(|| Error::Usage(
        "two-factorization needs a regular graph".into(),
    ))?;
    if r % 2 != 0 {
        return Err(Error::Usage(format!(
            "two-factorization needs even degree, got {r}"
        )));
    }
    let n = g.n();
    let k = r / 2;
    let arcs = eulerian_orientation_instances(n, &g.edges())?;
    let mut b = BipartiteMulti::new(n, n);
    for (u, v) in arcs {
        b.add(u, v);
    }
    if let Some(rng) = rng {
        for l in 0..n {
            b.adj[l].shuffle(rng);
        }
    }
    let mut factors = Vec::with_capacity(k);
    for _ in 0..k {
        let mate = b
            .perfect_matching()
            .expect("regular bipartite multigraph always has a perfect matching");
        let mut edges = Vec::with_capacity(n);
        for (l, &rr) in mate.iter().enumerate() {
            edges.push(canon(l, rr));
            b.remove_instance(l, rr);
        }
        factors.push(edges);
    }
    Ok(factors)
}

/// Connected components of a spanning 2-regular edge set, as vertex cycles.
pub(crate) fn factor_cycles(n: usize, edges: &[Edge]) -> Vec<Vec<usize>> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for s in 0..n {
        if seen[s] || adj[s].is_empty() {
            continue;
        }
        let mut cyc = vec![s];
        seen[s] = true;
        let mut prev = s;
        let mut cur = adj[s][0];
        while cur != s {
            seen[cur] = true;
            cyc.push(cur);
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            prev = cur;
            cur = next;
        }
        cycles.push(cyc);
    }
    cycles
}

// Undirected merge heuristic: 2-opt swaps across factors that reduce the
// total number of cycle components.
fn merge_two_factors(
    n: usize,
    mut factors: Vec<Vec<Edge>>,
    rng: &mut ChaCha8Rng,
    iter_cap: usize,
) -> Option<Vec<Vec<usize>>> {
    let k = factors.len();
    let mut owner: BTreeMap<Edge, usize> = BTreeMap::new();
    for (i, f) in factors.iter().enumerate() {
        for &e in f {
            owner.insert(e, i);
        }
    }
    let comp =
        |factors: &Vec<Vec<Edge>>, i: usize| factor_cycles(n, &factors[i]).len();
    let mut comps: Vec<usize> = (0..k).map(|i| comp(&factors, i)).collect();
    let mut total: usize = comps.iter().sum();

    for _ in 0..iter_cap {
        if total == k {
            return Some(
                factors
                    .iter()
                    .map(|f| factor_cycles(n, f).pop().unwrap())
                    .collect(),
            );
        }
        let bad: Vec<usize> = (0..k).filter(|&i| comps[i] > 1).collect();
        let fi = bad[rng.gen_range(0..bad.len())];
        let cycles = factor_cycles(n, &factors[fi]);
        let c1 = rng.gen_range(0..cycles.len());
        let mut c2 = rng.gen_range(0..cycles.len() - 1);
        if c2 >= c1 {
            c2 += 1;
        }
        let pick_edge = |cyc: &Vec<usize>, rng: &mut ChaCha8Rng| -> (usize, usize) {
            let i = rng.gen_range(0..cyc.len());
            (cyc[i], cyc[(i + 1) % cyc.len()])
        };
        let mut done = false;
        for _ in 0..30 {
            let (a, b) = pick_edge(&cycles[c1], rng);
            let (c, d) = pick_edge(&cycles[c2], rng);
            for (p, q) in [((a, c), (b, d)), ((a, d), (b, c))] {
                let (e1, e2) = (canon(p.0, p.1), canon(q.0, q.1));
                if e1 == e2 {
                    continue;
                }
                let (Some(&f1), Some(&f2)) = (owner.get(&e1), owner.get(&e2)) else {
                    continue;
                };
                if f1 != f2 || f1 == fi {
                    continue;
                }
                let fj = f1;
                let (ab, cd) = (canon(a, b), canon(c, d));
                // Swap: fi trades {ab, cd} for {e1, e2}, fj the reverse.
                apply_swap(&mut factors, &mut owner, fi, fj, [ab, cd], [e1, e2]);
                let (ni, nj) = (comp(&factors, fi), comp(&factors, fj));
                let new_total = total - comps[fi] - comps[fj] + ni + nj;
                if new_total < total || (new_total == total && rng.gen_bool(0.3)) {
                    comps[fi] = ni;
                    comps[fj] = nj;
                    total = new_total;
                } else {
                    apply_swap(&mut factors, &mut owner, fi, fj, [e1, e2], [ab, cd]);
                }
                done = true;
                break;
            }
            if done {
                break;
            }
        }
    }
    (total == k).then(|| {
        factors
            .iter()
            .map(|f| factor_cycles(n, f).pop().unwrap())
            .collect()
    })
}

fn apply_swap(
    factors: &mut [Vec<Edge>],
    owner: &mut BTreeMap<Edge, usize>,
    fi: usize,
    fj: usize,
    from_i: [Edge; 2],
    from_j: [Edge; 2],
) {
    for e in from_i {
        let pos = factors[fi].iter().position(|&x| x == e).unwrap();
        factors[fi].swap_remove(pos);
        factors[fj].push(e);
        owner.insert(e, fj);
    }
    for e in from_j {
        let pos = factors[fj].iter().position(|&x| x == e).unwrap();
        factors[fj].swap_remove(pos);
        factors[fi].push(e);
        owner.insert(e, fi);
    }
}

/// Decomposes an r-regular graph (r even) into r/2 Hamilton cycles.
pub fn hamilton_decompose(
    g: &Graph,
    rng: &mut ChaCha8Rng,
    retry_budget: usize,
) -> Result<Vec<Vec<usize>>> {
    let r = g
        .is_regular()
        .ok_or_else(|| Error::Usage("hamilton_decompose needs a regular graph".into()))?;
    if r % 2 != 0 {
        return Err(Error::Usage(format!(
            "hamilton_decompose needs even degree, got {r}"
        )));
    }
    if r == 0 {
        return Ok(Vec::new());
    }
    let n = g.n();
    let attempts = 1 + retry_budget / 20;
    for _ in 0..attempts {
        if let Some(d) = greedy_extract(g, rng, 20) {
            return Ok(d);
        }
        if let Some(factors) = two_factor_split(g, Some(rng)).ok() {
            if let Some(d) = merge_two_factors(n, factors, rng, 400 * r * 2) {
                if d.iter().all(|c| c.len() == n) {
                    return Ok(d);
                }
            }
        }
    }
    if n <= 10 {
        let mut budget = 1 << 22;
        if let Some(d) = exact_cycle_decomposition(g, &[], r / 2, &mut budget) {
            return Ok(d);
        }
        if budget > 0 {
            return Err(Error::NotFound {
                what: format!("no hamilton decomposition exists (exact search, n = {n})"),
            });
        }
    }
    Err(Error::NotFound {
        what: format!("hamilton decomposition (budget {retry_budget})"),
    })
}

fn greedy_extract(g: &Graph, rng: &mut ChaCha8Rng, inner: usize) -> Option<Vec<Vec<usize>>> {
    let mut work = g.clone();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut backtracks = 6;
    while work.edge_count() > 0 {
        match find_hamilton_cycle(&work, rng, inner) {
            Some(c) => {
                for w in c.windows(2) {
                    work.remove_edge(w[0], w[1]).unwrap();
                }
                work.remove_edge(*c.last().unwrap(), c[0]).unwrap();
                cycles.push(c);
            }
            None => {
                if backtracks == 0 || cycles.is_empty() {
                    return None;
                }
                backtracks -= 1;
                let depth = 1 + rng.gen_range(0..cycles.len().min(3));
                for _ in 0..depth {
                    let c = cycles.pop().unwrap();
                    for w in c.windows(2) {
                        work.add_edge(w[0], w[1]).unwrap();
                    }
                    work.add_edge(*c.last().unwrap(), c[0]).unwrap();
                }
            }
        }
    }
    Some(cycles)
}

/// Decomposes an r-regular digraph (d+ = d- = r everywhere) into r directed
/// Hamilton cycles.
pub fn hamilton_decompose_digraph(
    d: &Digraph,
    rng: &mut ChaCha8Rng,
    retry_budget: usize,
) -> Result<Vec<Vec<usize>>> {
    let r = d.is_semidegree_regular().ok_or_else(|| {
        Error::Usage("hamilton_decompose_digraph needs d+(v) = d-(v) = r".into())
    })?;
    if r == 0 {
        return Ok(Vec::new());
    }
    let n = d.n();
    let attempts = 1 + retry_budget / 20;
    for _ in 0..attempts {
        if let Some(dec) = greedy_extract_digraph(d, rng, 20) {
            return Ok(dec);
        }
        if let Some(dec) = merge_one_factors(d, rng, 400 * r * 2) {
            return Ok(dec);
        }
    }
    if n <= 8 {
        let mut budget = 1 << 22;
        if let Some(dec) = exact_cycle_decomposition_digraph(d, &[], r, &mut budget) {
            if dec.iter().all(|c| c.len() == n) {
                return Ok(dec);
            }
        }
    }
    Err(Error::NotFound {
        what: format!("directed hamilton decomposition (budget {retry_budget})"),
    })
}

fn greedy_extract_digraph(
    d: &Digraph,
    rng: &mut ChaCha8Rng,
    inner: usize,
) -> Option<Vec<Vec<usize>>> {
    let mut work = d.clone();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut backtracks = 6;
    while work.arc_count() > 0 {
        match find_hamilton_cycle_digraph(&work, rng, inner) {
            Some(c) => {
                for w in c.windows(2) {
                    work.remove_arc(w[0], w[1]).unwrap();
                }
                work.remove_arc(*c.last().unwrap(), c[0]).unwrap();
                cycles.push(c);
            }
            None => {
                if backtracks == 0 || cycles.is_empty() {
                    return None;
                }
                backtracks -= 1;
                let depth = 1 + rng.gen_range(0..cycles.len().min(3));
                for _ in 0..depth {
                    let c = cycles.pop().unwrap();
                    for w in c.windows(2) {
                        work.add_arc(w[0], w[1]).unwrap();
                    }
                    work.add_arc(*c.last().unwrap(), c[0]).unwrap();
                }
            }
        }
    }
    Some(cycles)
}

// Directed merge: 1-factors are permutations; swap arc pairs (a->b, c->d)
// in one factor for (a->d, c->b) held by another.
fn merge_one_factors(
    d: &Digraph,
    rng: &mut ChaCha8Rng,
    iter_cap: usize,
) -> Option<Vec<Vec<usize>>> {
    let n = d.n();
    let r = d.is_semidegree_regular()?;
    let mut b = BipartiteMulti::new(n, n);
    for (u, v) in d.arcs() {
        b.add(u, v);
    }
    for l in 0..n {
        b.adj[l].shuffle(rng);
    }
    // succ[f][v] = successor of v in factor f.
    let mut succ: Vec<Vec<usize>> = Vec::with_capacity(r);
    for _ in 0..r {
        let mate = b.perfect_matching()?;
        for (l, &rr) in mate.iter().enumerate() {
            b.remove_instance(l, rr);
        }
        succ.push(mate);
    }
    let mut owner: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (f, s) in succ.iter().enumerate() {
        for (v, &w) in s.iter().enumerate() {
            owner.insert((v, w), f);
        }
    }
    let perm_cycles = |s: &Vec<usize>| -> Vec<Vec<usize>> {
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for v in 0..n {
            if !seen[v] {
                let mut cyc = vec![v];
                seen[v] = true;
                let mut cur = s[v];
                while cur != v {
                    seen[cur] = true;
                    cyc.push(cur);
                    cur = s[cur];
                }
                out.push(cyc);
            }
        }
        out
    };
    let mut comps: Vec<usize> = succ.iter().map(|s| perm_cycles(s).len()).collect();
    let mut total: usize = comps.iter().sum();

    for _ in 0..iter_cap {
        if total == r {
            return Some(succ.iter().map(|s| perm_cycles(s).pop().unwrap()).collect());
        }
        let bad: Vec<usize> = (0..r).filter(|&i| comps[i] > 1).collect();
        let fi = bad[rng.gen_range(0..bad.len())];
        let cycles = perm_cycles(&succ[fi]);
        let c1 = rng.gen_range(0..cycles.len());
        let mut c2 = rng.gen_range(0..cycles.len() - 1);
        if c2 >= c1 {
            c2 += 1;
        }
        for _ in 0..30 {
            let a = cycles[c1][rng.gen_range(0..cycles[c1].len())];
            let c = cycles[c2][rng.gen_range(0..cycles[c2].len())];
            let (bb, dd) = (succ[fi][a], succ[fi][c]);
            let (Some(&f1), Some(&f2)) = (owner.get(&(a, dd)), owner.get(&(c, bb))) else {
                continue;
            };
            if f1 != f2 || f1 == fi {
                continue;
            }
            let fj = f1;
            // fi: a->b, c->d  =>  a->d, c->b ; fj the reverse.
            succ[fi][a] = dd;
            succ[fi][c] = bb;
            succ[fj][a] = bb;
            succ[fj][c] = dd;
            owner.insert((a, dd), fi);
            owner.insert((c, bb), fi);
            owner.insert((a, bb), fj);
            owner.insert((c, dd), fj);
            let (ni, nj) = (perm_cycles(&succ[fi]).len(), perm_cycles(&succ[fj]).len());
            let new_total = total - comps[fi] - comps[fj] + ni + nj;
            if new_total < total || (new_total == total && rng.gen_bool(0.3)) {
                comps[fi] = ni;
                comps[fj] = nj;
                total = new_total;
            } else {
                succ[fi][a] = bb;
                succ[fi][c] = dd;
                succ[fj][a] = dd;
                succ[fj][c] = bb;
                owner.insert((a, bb), fi);
                owner.insert((c, dd), fi);
                owner.insert((a, dd), fj);
                owner.insert((c, bb), fj);
            }
            break;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn assert_partition_into_cycles(g: &Graph, cycles: &[Vec<usize>], spanning: bool) {
        let mut remaining: std::collections::BTreeSet<Edge> = g.edges().into_iter().collect();
        for c in cycles {
            if spanning {
                assert_eq!(c.len(), g.n());
            }
            let mut es: Vec<Edge> = c.windows(2).map(|w| canon(w[0], w[1])).collect();
            es.push(canon(*c.last().unwrap(), c[0]));
            for e in es {
                assert!(remaining.remove(&e), "edge {e:?} reused or absent");
            }
        }
        assert!(remaining.is_empty(), "uncovered: {remaining:?}");
    }

    #[test]
    fn two_factorization_c8_is_itself() {
        let f = two_factorization(&Graph::cycle(8)).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0], Graph::cycle(8));
    }

    #[test]
    fn two_factorization_k5() {
        let f = two_factorization(&Graph::complete(5)).unwrap();
        assert_eq!(f.len(), 2);
        for factor in &f {
            for v in 0..5 {
                assert_eq!(factor.degree(v), 2);
            }
        }
        // Factors partition E(K5).
        let mut all: Vec<Edge> = f.iter().flat_map(|g| g.edges()).collect();
        all.sort();
        assert_eq!(all, Graph::complete(5).edges());
    }

    #[test]
    fn two_factorization_c4() {
        // K4 minus a perfect matching is C4.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let f = two_factorization(&g).unwrap();
        assert_eq!(f.len(), 1);
    }

    #[test]
    fn two_factorization_rejects_odd_regular() {
        assert!(two_factorization(&Graph::complete(4)).is_err());
    }

    #[test]
    fn decompose_c5() {
        let g = Graph::cycle(5);
        let d = hamilton_decompose(&g, &mut rng(1), 50).unwrap();
        assert_eq!(d.len(), 1);
        assert_partition_into_cycles(&g, &d, true);
    }

    #[test]
    fn decompose_k5_and_k7() {
        for n in [5, 7] {
            let g = Graph::complete(n);
            let d = hamilton_decompose(&g, &mut rng(2), 100).unwrap();
            assert_eq!(d.len(), (n - 1) / 2);
            assert_partition_into_cycles(&g, &d, true);
        }
    }

    #[test]
    fn decompose_disconnected_fails_definitively() {
        let mut g = Graph::new(6);
        for base in [0, 3] {
            g.add_edge(base, base + 1).unwrap();
            g.add_edge(base + 1, base + 2).unwrap();
            g.add_edge(base + 2, base).unwrap();
        }
        assert!(matches!(
            hamilton_decompose(&g, &mut rng(3), 30),
            Err(Error::NotFound { .. })
        ));
    }

    #[test]
    fn decompose_dense_random_regular() {
        // Remainder-style instance: take K11 (10-regular).
        let g = Graph::complete(11);
        let d = hamilton_decompose(&g, &mut rng(4), 100).unwrap();
        assert_eq!(d.len(), 5);
        assert_partition_into_cycles(&g, &d, true);
    }

    #[test]
    fn digraph_triangle_decomposes_to_itself() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let dec = hamilton_decompose_digraph(&d, &mut rng(5), 30).unwrap();
        assert_eq!(dec.len(), 1);
    }

    #[test]
    fn digraph_complete3_two_triangles() {
        let d = Digraph::symmetric_orientation(&Graph::complete(3));
        let dec = hamilton_decompose_digraph(&d, &mut rng(6), 50).unwrap();
        assert_eq!(dec.len(), 2);
        assert!(dec.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn digraph_symmetric_k5() {
        let d = Digraph::symmetric_orientation(&Graph::complete(5));
        let dec = hamilton_decompose_digraph(&d, &mut rng(7), 100).unwrap();
        assert_eq!(dec.len(), 4);
        let mut remaining: std::collections::BTreeSet<(usize, usize)> =
            d.arcs().into_iter().collect();
        for c in &dec {
            assert_eq!(c.len(), 5);
            for w in c.windows(2) {
                assert!(remaining.remove(&(w[0], w[1])));
            }
            assert!(remaining.remove(&(*c.last().unwrap(), c[0])));
        }
        assert!(remaining.is_empty());
    }
}
