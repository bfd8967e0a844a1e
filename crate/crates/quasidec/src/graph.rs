//! Graph, digraph and multigraph types with degree bookkeeping.
//!
//! Vertices are dense ids `0..n`. Undirected edges are stored canonically
//! (smaller endpoint first) so edge-set equality is structural, and all
//! adjacency containers iterate in sorted order so seeded runs are
//! reproducible.

use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Canonical undirected edge: `0 <= e.0 < e.1`.
pub type Edge = (usize, usize);

/// Orders an endpoint pair canonically.
pub fn canon(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple undirected graph: no loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![BTreeSet::new(); n],
            m: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Usage(format!(
                "edge {u}-{v} outside vertex range 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Usage(format!("self-loop at {u}")));
        }
        if self.adj[u].contains(&v) {
            return Err(Error::Usage(format!("parallel edge {u}-{v}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.m += 1;
        Ok(())
    }

    /// Removing a non-present edge is an error: it signals a caller logic bug.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if !self.has_edge(u, v) {
            return Err(Error::EdgeAbsent { u, v });
        }
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
        self.m -= 1;
        Ok(())
    }

    /// All edges in canonical sorted order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// A copy of `self` with the given edges removed.
    pub fn remove_edges<'a, I>(&self, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.remove_edge(u, v)?;
        }
        Ok(g)
    }

    /// Subgraph induced by `verts`, relabelled to `0..k`. Returns the graph
    /// together with the map from new ids back to the original ids.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let set: BTreeSet<usize> = verts.iter().copied().collect();
        for &v in &set {
            if v >= self.n {
                return Err(Error::Usage(format!("vertex {v} out of range")));
            }
        }
        let map: Vec<usize> = set.iter().copied().collect();
        let mut idx = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            idx[v] = i;
        }
        let mut g = Graph::new(map.len());
        for &v in &map {
            for &w in &self.adj[v] {
                if v < w && set.contains(&w) {
                    g.add_edge(idx[v], idx[w])?;
                }
            }
        }
        Ok((g, map))
    }

    /// Complement on the same vertex set, without loops.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.adj[u].contains(&v) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    /// True iff every degree is even. Connectivity is not required.
    pub fn is_eulerian(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) % 2 == 0)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::of_degrees((0..self.n).map(|v| self.degree(v)).collect())
    }

    pub fn is_regular(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    // Small named graphs used throughout the tests and the demo.

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::new(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n).unwrap();
        }
        g
    }

    pub fn path_graph(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v).unwrap();
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v).unwrap();
        }
        g
    }

    pub fn petersen() -> Graph {
        let mut g = Graph::new(10);
        for v in 0..5 {
            g.add_edge(v, (v + 1) % 5).unwrap();
            g.add_edge(v, v + 5).unwrap();
            g.add_edge(v + 5, 5 + (v + 2) % 5).unwrap();
        }
        g
    }
}

/// Directed graph: no loops; both orientations of a pair may coexist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out: Vec<BTreeSet<usize>>,
    inn: Vec<BTreeSet<usize>>,
    m: usize,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph {
            n,
            out: vec![BTreeSet::new(); n],
            inn: vec![BTreeSet::new(); n],
            m: 0,
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Digraph::new(n);
        for (u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    /// Both orientations of every edge of `g`.
    pub fn symmetric_orientation(g: &Graph) -> Digraph {
        let mut d = Digraph::new(g.n());
        for (u, v) in g.edges() {
            d.add_arc(u, v).unwrap();
            d.add_arc(v, u).unwrap();
        }
        d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.m
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    /// Total degree `d(v) = d+(v) + d-(v)`.
    pub fn degree(&self, v: usize) -> usize {
        self.out[v].len() + self.inn[v].len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out[u].contains(&v)
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[v].iter().copied()
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.inn[v].iter().copied()
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Usage(format!(
                "arc {u}->{v} outside vertex range 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Usage(format!("self-loop at {u}")));
        }
        if self.out[u].contains(&v) {
            return Err(Error::Usage(format!("parallel arc {u}->{v}")));
        }
        self.out[u].insert(v);
        self.inn[v].insert(u);
        self.m += 1;
        Ok(())
    }

    pub fn remove_arc(&mut self, u: usize, v: usize) -> Result<()> {
        if !self.has_arc(u, v) {
            return Err(Error::EdgeAbsent { u, v });
        }
        self.out[u].remove(&v);
        self.inn[v].remove(&u);
        self.m -= 1;
        Ok(())
    }

    /// All arcs as ordered pairs, sorted.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.out[u] {
                out.push((u, v));
            }
        }
        out
    }

    /// True iff in-degree equals out-degree at every vertex.
    pub fn is_eulerian(&self) -> bool {
        (0..self.n).all(|v| self.out[v].len() == self.inn[v].len())
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::of_degrees((0..self.n).map(|v| self.degree(v)).collect())
    }

    pub fn min_semidegree(&self) -> usize {
        (0..self.n)
            .map(|v| self.out_degree(v).min(self.in_degree(v)))
            .min()
            .unwrap_or(0)
    }

    /// `d+(v) = d-(v) = r` for all v.
    pub fn is_semidegree_regular(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let r = self.out_degree(0);
        (0..self.n)
            .all(|v| self.out_degree(v) == r && self.in_degree(v) == r)
            .then_some(r)
    }

    pub fn induced_subgraph(&self, verts: &[usize]) -> Result<(Digraph, Vec<usize>)> {
        let set: BTreeSet<usize> = verts.iter().copied().collect();
        for &v in &set {
            if v >= self.n {
                return Err(Error::Usage(format!("vertex {v} out of range")));
            }
        }
        let map: Vec<usize> = set.iter().copied().collect();
        let mut idx = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            idx[v] = i;
        }
        let mut d = Digraph::new(map.len());
        for &v in &map {
            for &w in &self.out[v] {
                if set.contains(&w) {
                    d.add_arc(idx[v], idx[w])?;
                }
            }
        }
        Ok((d, map))
    }

    /// Forgets orientations. Antiparallel arc pairs would collapse to one
    /// edge, so this errors if any pair is present in both directions.
    pub fn underlying_graph(&self) -> Result<Graph> {
        let mut g = Graph::new(self.n);
        for (u, v) in self.arcs() {
            if self.has_arc(v, u) && v < u {
                continue;
            }
            if self.has_arc(v, u) && u < v {
                return Err(Error::Usage(format!(
                    "arcs {u}->{v} and {v}->{u} both present; underlying graph ill-defined"
                )));
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }
}

/// Multigraph: unordered pairs with multiplicities, no loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    mult: std::collections::BTreeMap<Edge, usize>,
    m: usize,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            mult: std::collections::BTreeMap::new(),
            m: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Usage(format!("edge {u}-{v} out of range")));
        }
        if u == v {
            return Err(Error::Usage(format!("self-loop at {u}")));
        }
        *self.mult.entry(canon(u, v)).or_insert(0) += 1;
        self.m += 1;
        Ok(())
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.mult.get(&canon(u, v)).copied().unwrap_or(0)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.mult
            .iter()
            .filter(|((a, b), _)| *a == v || *b == v)
            .map(|(_, &k)| k)
            .sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Each edge repeated according to its multiplicity, sorted.
    pub fn edge_instances(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for (&e, &k) in &self.mult {
            for _ in 0..k {
                out.push(e);
            }
        }
        out
    }

    pub fn distinct_edges(&self) -> Vec<(Edge, usize)> {
        self.mult.iter().map(|(&e, &k)| (e, k)).collect()
    }
}

/// Max/min degree, the odd-degree set and the maximum-degree set of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub max_degree: usize,
    pub min_degree: usize,
    pub odd_count: usize,
    /// Odd-degree vertices, sorted.
    pub odd_set: Vec<usize>,
    /// Maximum-degree vertices, sorted.
    pub max_vertices: Vec<usize>,
}

impl DegreeProfile {
    fn of_degrees(degrees: Vec<usize>) -> DegreeProfile {
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        let odd_set: Vec<usize> = (0..degrees.len()).filter(|&v| degrees[v] % 2 == 1).collect();
        let max_vertices: Vec<usize> = (0..degrees.len())
            .filter(|&v| degrees[v] == max_degree)
            .collect();
        DegreeProfile {
            max_degree,
            min_degree,
            odd_count: odd_set.len(),
            odd_set,
            max_vertices,
        }
    }

    pub fn spread(&self) -> usize {
        self.max_degree - self.min_degree
    }

    pub fn has_unique_max(&self) -> bool {
        self.max_vertices.len() == 1
    }
}

/// A set of disjoint ordered vertex pairs `(x_i, y_i)`.
///
/// The ordering convention `d(x_i) <= d(y_i)` is established relative to a
/// declared host graph via [`PairList::ordered_for`]; consumers that need the
/// convention normalize on entry.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PairList {
    pairs: Vec<(usize, usize)>,
}

impl PairList {
    pub fn empty() -> Self {
        PairList { pairs: Vec::new() }
    }

    /// Validates that all endpoints are pairwise distinct.
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(x, y) in &pairs {
            if x == y {
                return Err(Error::Usage(format!("pair ({x},{y}) is degenerate")));
            }
            if !seen.insert(x) || !seen.insert(y) {
                return Err(Error::Usage(format!(
                    "pair ({x},{y}) shares an endpoint with another pair"
                )));
            }
        }
        Ok(PairList { pairs })
    }

    /// Reorders each pair so `d(x) <= d(y)` in the host graph, breaking
    /// degree ties by vertex id for determinism.
    pub fn ordered_for(&self, degree_of: impl Fn(usize) -> usize) -> PairList {
        let pairs = self
            .pairs
            .iter()
            .map(|&(a, b)| {
                let (da, db) = (degree_of(a), degree_of(b));
                if da < db || (da == db && a < b) {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        PairList { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn covered_vertices(&self) -> BTreeSet<usize> {
        self.pairs.iter().flat_map(|&(x, y)| [x, y]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_profile_k4() {
        let p = Graph::complete(4).degree_profile();
        assert_eq!(p.max_degree, 3);
        assert_eq!(p.min_degree, 3);
        assert_eq!(p.odd_count, 4);
        assert_eq!(p.odd_set, vec![0, 1, 2, 3]);
    }

    #[test]
    fn degree_profile_c5() {
        let p = Graph::cycle(5).degree_profile();
        assert_eq!((p.max_degree, p.min_degree, p.odd_count), (2, 2, 0));
        assert!(p.odd_set.is_empty());
    }

    #[test]
    fn degree_profile_path3() {
        let p = Graph::path_graph(3).degree_profile();
        assert_eq!((p.max_degree, p.min_degree, p.odd_count), (2, 1, 2));
        assert_eq!(p.odd_set, vec![0, 2]);
    }

    #[test]
    fn odd_count_is_even_on_randomish_graphs() {
        // handshake parity
        for n in 1..9 {
            for mask in 0..(1u32 << (n * (n - 1) / 2).min(12)) {
                let mut g = Graph::new(n);
                let mut bit = 0;
                'outer: for u in 0..n {
                    for v in (u + 1)..n {
                        if bit >= 12 {
                            break 'outer;
                        }
                        if mask >> bit & 1 == 1 {
                            g.add_edge(u, v).unwrap();
                        }
                        bit += 1;
                    }
                }
                assert_eq!(g.degree_profile().odd_count % 2, 0);
            }
        }
    }

    #[test]
    fn eulerian_predicates() {
        assert!(Graph::cycle(6).is_eulerian());
        assert!(!Graph::complete(4).is_eulerian());
        let tri = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(tri.is_eulerian());
        let v = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!v.is_eulerian());
    }

    #[test]
    fn complement_c4_is_two_diagonals() {
        let c = Graph::cycle(4).complement();
        assert_eq!(c.edges(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn complement_involution() {
        let g = Graph::petersen();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn remove_edge_bookkeeping() {
        let mut g = Graph::complete(4);
        g.remove_edge(0, 1).unwrap();
        let mut degs: Vec<usize> = (0..4).map(|v| g.degree(v)).collect();
        degs.sort();
        assert_eq!(degs, vec![2, 2, 3, 3]);
        assert!(matches!(
            g.remove_edge(0, 1),
            Err(Error::EdgeAbsent { u: 0, v: 1 })
        ));
    }

    #[test]
    fn induced_k5_triple_is_k3() {
        let (sub, map) = Graph::complete(5).induced_subgraph(&[4, 1, 2]).unwrap();
        assert_eq!(sub, Graph::complete(3));
        assert_eq!(map, vec![1, 2, 4]);
    }

    #[test]
    fn digraph_degree_identity() {
        let d = Digraph::from_arcs(4, [(0, 1), (1, 0), (1, 2), (2, 3), (3, 1)]).unwrap();
        for v in 0..4 {
            assert_eq!(d.degree(v), d.out_degree(v) + d.in_degree(v));
        }
    }

    #[test]
    fn multigraph_parallel_edges() {
        let mut a = Multigraph::new(2);
        a.add_edge(0, 1).unwrap();
        a.add_edge(1, 0).unwrap();
        assert_eq!(a.multiplicity(0, 1), 2);
        assert_eq!(a.degree(0), 2);
        assert_eq!(a.edge_count(), 2);
    }

    #[test]
    fn pairlist_rejects_shared_endpoints() {
        assert!(PairList::new(vec![(0, 1), (1, 2)]).is_err());
        assert!(PairList::new(vec![(0, 0)]).is_err());
        let m = PairList::new(vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(m.len(), 2);
    }

    #[test]
    fn pairlist_ordering_convention() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let m = PairList::new(vec![(1, 0)]).unwrap().ordered_for(|v| g.degree(v));
        // degree(0) = 1 <= degree(1) = 3
        assert_eq!(m.pairs(), &[(0, 1)]);
    }
}
