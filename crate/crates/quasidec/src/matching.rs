//! Matchings: maximum matching in general graphs (blossom contraction),
//! perfect matchings in regular bipartite multigraphs (augmenting paths),
//! and a greedy edge colouring of multigraphs.

use crate::graph::{canon, Edge, Graph};

const NONE: usize = usize::MAX;

/// Maximum matching via blossom contraction, O(n^3).
pub fn max_matching(g: &Graph) -> Vec<Edge> {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut mate = vec![NONE; n];

    // Greedy warm start cuts down the number of augmenting phases.
    for v in 0..n {
        if mate[v] == NONE {
            for &u in &adj[v] {
                if mate[u] == NONE {
                    mate[v] = u;
                    mate[u] = v;
                    break;
                }
            }
        }
    }

    for root in 0..n {
        if mate[root] != NONE {
            continue;
        }
        if let Some(end) = find_augmenting_path(&adj, &mate, root) {
            augment(&mut mate, &end);
        }
    }

    (0..n)
        .filter(|&v| mate[v] != NONE && v < mate[v])
        .map(|v| (v, mate[v]))
        .collect()
}

struct PathEnd {
    endpoint: usize,
    parent: Vec<usize>,
}

fn find_augmenting_path(adj: &[Vec<usize>], mate: &[usize], root: usize) -> Option<PathEnd> {
    let n = adj.len();
    let mut parent = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    used[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);

    while let Some(v) = queue.pop_front() {
        for &to in &adj[v] {
            if base[v] == base[to] || mate[v] == to {
                continue;
            }
            if to == root || (mate[to] != NONE && parent[mate[to]] != NONE) {
                // Odd cycle: contract the blossom at the lowest common base.
                let curbase = lca(&base, mate, &parent, v, to);
                let mut in_blossom = vec![false; n];
                mark_path(&mut in_blossom, &base, mate, &mut parent, v, curbase, to);
                mark_path(&mut in_blossom, &base, mate, &mut parent, to, curbase, v);
                for i in 0..n {
                    if in_blossom[base[i]] {
                        base[i] = curbase;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to] == NONE {
                parent[to] = v;
                if mate[to] == NONE {
                    return Some(PathEnd {
                        endpoint: to,
                        parent,
                    });
                }
                used[mate[to]] = true;
                queue.push_back(mate[to]);
            }
        }
    }
    None
}

fn lca(base: &[usize], mate: &[usize], parent: &[usize], mut a: usize, mut b: usize) -> usize {
    let n = base.len();
    let mut seen = vec![false; n];
    loop {
        a = base[a];
        seen[a] = true;
        if mate[a] == NONE {
            break;
        }
        a = parent[mate[a]];
    }
    loop {
        b = base[b];
        if seen[b] {
            return b;
        }
        b = parent[mate[b]];
    }
}

fn mark_path(
    in_blossom: &mut [bool],
    base: &[usize],
    mate: &[usize],
    parent: &mut [usize],
    mut v: usize,
    curbase: usize,
    mut child: usize,
) {
    while base[v] != curbase {
        in_blossom[base[v]] = true;
        in_blossom[base[mate[v]]] = true;
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}

fn augment(mate: &mut [usize], end: &PathEnd) {
    let mut v = end.endpoint;
    while v != NONE {
        let pv = end.parent[v];
        let ppv = mate[pv];
        mate[v] = pv;
        mate[pv] = v;
        v = ppv;
    }
}

/// Bipartite multigraph on `left x right` given as an adjacency multiset.
/// Used to peel factors out of regular (multi)graphs.
pub struct BipartiteMulti {
    pub left: usize,
    pub right: usize,
    /// adj[l] holds right-endpoints with repetition.
    pub adj: Vec<Vec<usize>>,
}

impl BipartiteMulti {
    pub fn new(left: usize, right: usize) -> Self {
        BipartiteMulti {
            left,
            right,
            adj: vec![Vec::new(); left],
        }
    }

    pub fn add(&mut self, l: usize, r: usize) {
        self.adj[l].push(r);
    }

    /// Perfect matching as `left -> right`, or None. Kuhn's algorithm;
    /// always succeeds on regular bipartite multigraphs.
    pub fn perfect_matching(&self) -> Option<Vec<usize>> {
        let mut mate_r = vec![NONE; self.right];
        let mut matched = 0;
        for l in 0..self.left {
            let mut seen = vec![false; self.right];
            if self.try_kuhn(l, &mut seen, &mut mate_r) {
                matched += 1;
            }
        }
        if matched < self.left {
            return None;
        }
        let mut mate_l = vec![NONE; self.left];
        for r in 0..self.right {
            if mate_r[r] != NONE {
                mate_l[mate_r[r]] = r;
            }
        }
        mate_l.iter().all(|&r| r != NONE).then_some(mate_l)
    }

    fn try_kuhn(&self, l: usize, seen: &mut [bool], mate_r: &mut [usize]) -> bool {
        for &r in &self.adj[l] {
            if !seen[r] {
                seen[r] = true;
                if mate_r[r] == NONE || self.try_kuhn(mate_r[r], seen, mate_r) {
                    mate_r[r] = l;
                    return true;
                }
            }
        }
        false
    }

    /// Removes one instance of the edge (l, r).
    pub fn remove_instance(&mut self, l: usize, r: usize) {
        let pos = self.adj[l].iter().position(|&x| x == r).expect("instance");
        self.adj[l].swap_remove(pos);
    }
}

/// Greedy proper edge colouring of a multiset of edges; parallel copies get
/// distinct colours. Uses at most `2 * max_degree - 1` colours.
pub fn greedy_edge_coloring(n: usize, edges: &[Edge]) -> Vec<usize> {
    let mut used: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); n];
    let mut colors = Vec::with_capacity(edges.len());
    for &(u, v) in edges {
        let (u, v) = canon(u, v);
        let mut c = 0;
        while used[u].contains(&c) || used[v].contains(&c) {
            c += 1;
        }
        used[u].insert(c);
        used[v].insert(c);
        colors.push(c);
    }
    colors
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gnp::gen_gnp;

    // Independent oracle: maximum matching size by recursion over edges.
    fn brute_matching_size(n: usize, edges: &[Edge]) -> usize {
        fn rec(edges: &[Edge], used: u32) -> usize {
            if edges.is_empty() {
                return 0;
            }
            let (u, v) = edges[0];
            let rest = &edges[1..];
            let skip = rec(rest, used);
            if used >> u & 1 == 0 && used >> v & 1 == 0 {
                (1 + rec(rest, used | 1 << u | 1 << v)).max(skip)
            } else {
                skip
            }
        }
        assert!(n <= 32);
        rec(edges, 0)
    }

    fn assert_valid_matching(g: &Graph, m: &[Edge]) {
        let mut seen = std::collections::BTreeSet::new();
        for &(u, v) in m {
            assert!(g.has_edge(u, v));
            assert!(seen.insert(u) && seen.insert(v), "vertex reused");
        }
    }

    #[test]
    fn blossom_matches_brute_on_random_graphs() {
        for seed in 0..60 {
            let n = 4 + (seed as usize % 7);
            let g = gen_gnp(n, 0.4, seed).unwrap();
            let m = max_matching(&g);
            assert_valid_matching(&g, &m);
            assert_eq!(m.len(), brute_matching_size(n, &g.edges()), "seed {seed}");
        }
    }

    #[test]
    fn blossom_needs_contraction() {
        // Two triangles joined by an edge: maximum matching has size 3 and
        // requires handling odd cycles.
        let g = Graph::from_edges(
            6,
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)],
        )
        .unwrap();
        assert_eq!(max_matching(&g).len(), 3);
    }

    #[test]
    fn blossom_perfect_on_petersen() {
        let g = Graph::petersen();
        assert_eq!(max_matching(&g).len(), 5);
    }

    #[test]
    fn bipartite_regular_has_perfect_matching() {
        // 3-regular bipartite multigraph with a doubled edge.
        let mut b = BipartiteMulti::new(3, 3);
        for (l, r) in [(0, 0), (0, 0), (0, 1), (1, 1), (1, 2), (1, 2), (2, 2), (2, 0), (2, 1)] {
            b.add(l, r);
        }
        let m = b.perfect_matching().unwrap();
        let mut rs = m.clone();
        rs.sort();
        assert_eq!(rs, vec![0, 1, 2]);
    }

    #[test]
    fn greedy_coloring_is_proper_and_bounded() {
        let g = gen_gnp(12, 0.5, 2).unwrap();
        let edges = g.edges();
        let colors = greedy_edge_coloring(12, &edges);
        let max_deg = g.degree_profile().max_degree;
        for (i, &(u, v)) in edges.iter().enumerate() {
            assert!(colors[i] < 2 * max_deg);
            for (j, &(x, y)) in edges.iter().enumerate().skip(i + 1) {
                if [u, v].iter().any(|a| [x, y].contains(a)) {
                    assert_ne!(colors[i], colors[j]);
                }
            }
        }
    }
}
