//! Exhaustive cycle-decomposition search for tiny graphs.
//!
//! Used as the engine's definitive fallback at n <= 10 and by tests as an
//! oracle. The search picks the smallest remaining edge, enumerates simple
//! cycles through it, and recurses; vertices whose remaining degree equals
//! twice the remaining cycle count must appear on every further cycle, which
//! prunes hard.

use crate::graph::{Digraph, Graph};

/// Decomposition of `g` into exactly `target` cycles, each consistent with
/// `pairs` (cycle containing `x` also contains `y`). `None` means no such
/// decomposition exists, or the node budget ran out.
pub(crate) fn exact_cycle_decomposition(
    g: &Graph,
    pairs: &[(usize, usize)],
    target: usize,
    node_budget: &mut usize,
) -> Option<Vec<Vec<usize>>> {
    let mut work = g.clone();
    let mut out = Vec::new();
    rec_undirected(&mut work, pairs, target, &mut out, node_budget).then_some(out)
}

fn rec_undirected(
    work: &mut Graph,
    pairs: &[(usize, usize)],
    left: usize,
    out: &mut Vec<Vec<usize>>,
    budget: &mut usize,
) -> bool {
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    if work.edge_count() == 0 {
        return left == 0;
    }
    if left == 0 || work.edge_count() < 3 * left {
        return false;
    }
    let prof = work.degree_profile();
    if prof.max_degree > 2 * left {
        return false;
    }
    let forced: Vec<usize> = (0..work.n())
        .filter(|&v| work.degree(v) == 2 * left)
        .collect();
    let (u, v) = work.edges()[0];
    // Enumerate simple cycles through (u, v): paths v -> u avoiding the edge.
    let mut path = vec![u, v];
    let mut on = vec![false; work.n()];
    on[u] = true;
    on[v] = true;
    cycles_through(work, u, &mut path, &mut on, &mut |work, cycle| {
        if !consistent(cycle, pairs) {
            return false;
        }
        if !forced.iter().all(|f| cycle.contains(f)) {
            return false;
        }
        for w in cycle.windows(2) {
            work.remove_edge(w[0], w[1]).unwrap();
        }
        work.remove_edge(*cycle.last().unwrap(), cycle[0]).unwrap();
        out.push(cycle.to_vec());
        if rec_undirected(work, pairs, left - 1, out, budget) {
            return true;
        }
        out.pop();
        for w in cycle.windows(2) {
            work.add_edge(w[0], w[1]).unwrap();
        }
        work.add_edge(*cycle.last().unwrap(), cycle[0]).unwrap();
        false
    })
}

// Walks simple paths from path.last() toward `goal`; every arrival at goal
// closes a cycle, reported to `visit` which returns true to stop the search.
fn cycles_through(
    work: &mut Graph,
    goal: usize,
    path: &mut Vec<usize>,
    on: &mut Vec<bool>,
    visit: &mut dyn FnMut(&mut Graph, &[usize]) -> bool,
) -> bool {
    let tail = *path.last().unwrap();
    let nbrs: Vec<usize> = work.neighbors(tail).collect();
    for w in nbrs {
        if w == goal && path.len() >= 3 {
            let cycle = path.clone();
            if visit(work, &cycle) {
                return true;
            }
        }
        if !on[w] && w != goal {
            on[w] = true;
            path.push(w);
            if cycles_through(work, goal, path, on, visit) {
                return true;
            }
            path.pop();
            on[w] = false;
        }
    }
    false
}

fn consistent(cycle: &[usize], pairs: &[(usize, usize)]) -> bool {
    pairs
        .iter()
        .all(|&(x, y)| !cycle.contains(&x) || cycle.contains(&y))
}

/// Directed variant; cycles have length >= 2.
pub(crate) fn exact_cycle_decomposition_digraph(
    d: &Digraph,
    pairs: &[(usize, usize)],
    target: usize,
    node_budget: &mut usize,
) -> Option<Vec<Vec<usize>>> {
    let mut work = d.clone();
    let mut out = Vec::new();
    rec_directed(&mut work, pairs, target, &mut out, node_budget).then_some(out)
}

fn rec_directed(
    work: &mut Digraph,
    pairs: &[(usize, usize)],
    left: usize,
    out: &mut Vec<Vec<usize>>,
    budget: &mut usize,
) -> bool {
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    if work.arc_count() == 0 {
        return left == 0;
    }
    if left == 0 || work.arc_count() < 2 * left {
        return false;
    }
    let prof = work.degree_profile();
    if prof.max_degree > 2 * left {
        return false;
    }
    let forced: Vec<usize> = (0..work.n())
        .filter(|&v| work.degree(v) == 2 * left)
        .collect();
    let (u, v) = work.arcs()[0];
    let mut path = vec![u, v];
    let mut on = vec![false; work.n()];
    on[u] = true;
    on[v] = true;
    dicycles_through(work, u, &mut path, &mut on, &mut |work, cycle| {
        if !consistent(cycle, pairs) {
            return false;
        }
        if !forced.iter().all(|f| cycle.contains(f)) {
            return false;
        }
        for w in cycle.windows(2) {
            work.remove_arc(w[0], w[1]).unwrap();
        }
        work.remove_arc(*cycle.last().unwrap(), cycle[0]).unwrap();
        out.push(cycle.to_vec());
        if rec_directed(work, pairs, left - 1, out, budget) {
            return true;
        }
        out.pop();
        for w in cycle.windows(2) {
            work.add_arc(w[0], w[1]).unwrap();
        }
        work.add_arc(*cycle.last().unwrap(), cycle[0]).unwrap();
        false
    })
}

fn dicycles_through(
    work: &mut Digraph,
    goal: usize,
    path: &mut Vec<usize>,
    on: &mut Vec<bool>,
    visit: &mut dyn FnMut(&mut Digraph, &[usize]) -> bool,
) -> bool {
    let tail = *path.last().unwrap();
    let nbrs: Vec<usize> = work.out_neighbors(tail).collect();
    for w in nbrs {
        if w == goal {
            let cycle = path.clone();
            if visit(work, &cycle) {
                return true;
            }
        } else if !on[w] {
            on[w] = true;
            path.push(w);
            if dicycles_through(work, goal, path, on, visit) {
                return true;
            }
            path.pop();
            on[w] = false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k5_decomposes_into_two_hamilton_cycles() {
        let mut budget = 1 << 22;
        let d = exact_cycle_decomposition(&Graph::complete(5), &[], 2, &mut budget).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.iter().all(|c| c.len() == 5));
    }

    #[test]
    fn k5_has_no_single_cycle_decomposition() {
        // One cycle carries at most n = 5 edges; K5 has 10.
        let mut budget = 1 << 22;
        assert!(exact_cycle_decomposition(&Graph::complete(5), &[], 1, &mut budget).is_none());
        // And 4 cycles would need 12 edges.
        assert!(exact_cycle_decomposition(&Graph::complete(5), &[], 4, &mut budget).is_none());
    }

    #[test]
    fn bowtie_needs_its_two_triangles() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let mut budget = 1 << 20;
        let d = exact_cycle_decomposition(&g, &[], 2, &mut budget).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn consistency_constrains_cycles() {
        // Bowtie with the pair (1, 3): vertex 1 on a cycle forces vertex 3,
        // which no triangle decomposition satisfies.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let mut budget = 1 << 20;
        assert!(exact_cycle_decomposition(&g, &[(1, 3)], 2, &mut budget).is_none());
    }

    #[test]
    fn directed_complete_3_two_triangles() {
        let d = Digraph::symmetric_orientation(&Graph::complete(3));
        let mut budget = 1 << 20;
        let dec = exact_cycle_decomposition_digraph(&d, &[], 2, &mut budget).unwrap();
        assert_eq!(dec.len(), 2);
        assert!(dec.iter().all(|c| c.len() == 3));
    }
}
