//! Cycle peeling of even-degree (multi)graphs and the Eulerian orientations
//! it induces.

use crate::error::{Error, Result};
use crate::graph::{Digraph, Edge, Graph};
use std::collections::BTreeMap;

/// Greedily peels edge-disjoint cycles from an even-degree edge multiset
/// until nothing is left. Returns each cycle as a closed vertex sequence
/// (first vertex implicit at the end). Cycles of length 2 appear only when
/// the input has parallel edges.
pub fn peel_cycles(n: usize, edges: &[Edge]) -> Result<Vec<Vec<usize>>> {
    let mut adj: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    let mut remaining = 0usize;
    for &(u, v) in edges {
        if u >= n || v >= n || u == v {
            return Err(Error::Usage(format!("bad edge {u}-{v}")));
        }
        *adj[u].entry(v).or_insert(0) += 1;
        *adj[v].entry(u).or_insert(0) += 1;
        remaining += 1;
    }
    for (v, a) in adj.iter().enumerate() {
        let deg: usize = a.values().sum();
        if deg % 2 != 0 {
            return Err(Error::HypothesisViolated {
                what: format!("vertex {v} has odd degree {deg}; cycle peeling needs even degrees"),
            });
        }
    }

    let take = |adj: &mut Vec<BTreeMap<usize, usize>>, u: usize, v: usize| {
        let e = adj[u].get_mut(&v).unwrap();
        *e -= 1;
        if *e == 0 {
            adj[u].remove(&v);
        }
        let e = adj[v].get_mut(&u).unwrap();
        *e -= 1;
        if *e == 0 {
            adj[v].remove(&u);
        }
    };

    let mut cycles = Vec::new();
    let mut next_start = 0;
    while remaining > 0 {
        while adj[next_start].is_empty() {
            next_start += 1;
        }
        let start = next_start;
        let mut walk = vec![start];
        let mut pos: BTreeMap<usize, usize> = BTreeMap::from([(start, 0)]);
        while let Some(&cur) = walk.last() {
            if adj[cur].is_empty() {
                // Only the closed-off start can be exhausted mid-walk.
                debug_assert_eq!(walk.len(), 1);
                break;
            }
            let next = *adj[cur].keys().next().unwrap();
            take(&mut adj, cur, next);
            remaining -= 1;
            if let Some(&i) = pos.get(&next) {
                let cycle: Vec<usize> = walk[i..].to_vec();
                for v in walk.drain(i + 1..) {
                    pos.remove(&v);
                }
                cycles.push(cycle);
            } else {
                pos.insert(next, walk.len());
                walk.push(next);
            }
        }
    }
    Ok(cycles)
}

/// Orients every edge instance along the peeled cycles. Each vertex ends up
/// with out-degree = in-degree = degree/2. Parallel instances can yield
/// repeated arcs, so the result is a plain arc list.
pub fn eulerian_orientation_instances(n: usize, edges: &[Edge]) -> Result<Vec<(usize, usize)>> {
    let cycles = peel_cycles(n, edges)?;
    let mut arcs = Vec::with_capacity(edges.len());
    for c in &cycles {
        for w in c.windows(2) {
            arcs.push((w[0], w[1]));
        }
        arcs.push((*c.last().unwrap(), c[0]));
    }
    Ok(arcs)
}

/// Eulerian orientation of a simple even-degree graph by consistent cycle
/// orientation.
pub fn cycle_peel_orientation(h: &Graph) -> Result<Digraph> {
    if !h.is_eulerian() {
        return Err(Error::HypothesisViolated {
            what: "cycle peel orientation needs all degrees even".into(),
        });
    }
    let arcs = eulerian_orientation_instances(h.n(), &h.edges())?;
    Digraph::from_arcs(h.n(), arcs)
}
