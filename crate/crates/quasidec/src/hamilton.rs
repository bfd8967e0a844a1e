//! Hamilton cycle and path search.
//!
//! The undirected finder is rotation-extension: grow a path greedily, rotate
//! the free endpoint along chords when stuck, close via a crossing chord
//! pair, and restart with fresh randomness on failure. The directed finder
//! extends at both ends and re-roots along closing arcs. Both fall back to
//! exhaustive backtracking on tiny inputs so that failures there are
//! definitive.

use crate::error::{Error, Result};
use crate::graph::{Digraph, Edge, Graph};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

const EXHAUSTIVE_LIMIT: usize = 12;
const NONE: usize = usize::MAX;

/// Dense adjacency scratch shared by the searches.
struct Adj {
    n: usize,
    mat: Vec<bool>,
    lists: Vec<Vec<usize>>,
}

impl Adj {
    fn of_graph(g: &Graph) -> Adj {
        let n = g.n();
        let mut mat = vec![false; n * n];
        let lists: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let l: Vec<usize> = g.neighbors(v).collect();
                for &w in &l {
                    mat[v * n + w] = true;
                }
                l
            })
            .collect();
        Adj { n, mat, lists }
    }

    #[inline]
    fn has(&self, u: usize, v: usize) -> bool {
        self.mat[u * self.n + v]
    }
}

fn rotation_budget(n: usize) -> usize {
    8 * n + 60
}

/// One rotation-extension walk. Keeps `path[0]` fixed when `pinned_head`.
fn posa_walk(
    adj: &Adj,
    rng: &mut ChaCha8Rng,
    start: usize,
    target: &[bool],
    target_count: usize,
    pinned_head: bool,
    finish: &dyn Fn(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    let n = adj.n;
    let mut path = Vec::with_capacity(target_count);
    let mut pos = vec![NONE; n];
    path.push(start);
    pos[start] = 0;
    let mut rotations = rotation_budget(n);
    let mut scratch = Vec::new();

    loop {
        let tail = *path.last().unwrap();
        // Extend with a random admissible unvisited neighbor.
        scratch.clear();
        for &w in &adj.lists[tail] {
            if pos[w] == NONE && target[w] {
                scratch.push(w);
            }
        }
        if !scratch.is_empty() {
            let w = scratch[rng.gen_range(0..scratch.len())];
            pos[w] = path.len();
            path.push(w);
            continue;
        }
        if path.len() == target_count && finish(&path) {
            return Some(path);
        }
        if rotations == 0 {
            return None;
        }
        rotations -= 1;
        // Rotate: chord tail~path[i] reverses the suffix after i.
        scratch.clear();
        for &w in &adj.lists[tail] {
            let i = pos[w];
            if i != NONE && i + 2 < path.len() {
                scratch.push(i);
            }
        }
        if scratch.is_empty() {
            if !pinned_head && path.len() > 2 {
                path.reverse();
                for (i, &v) in path.iter().enumerate() {
                    pos[v] = i;
                }
                continue;
            }
            return None;
        }
        let i = scratch[rng.gen_range(0..scratch.len())];
        path[i + 1..].reverse();
        for (j, &v) in path.iter().enumerate().skip(i + 1) {
            pos[v] = j;
        }
        if !pinned_head && path.len() > 2 && rng.gen_bool(0.25) {
            path.reverse();
            for (j, &v) in path.iter().enumerate() {
                pos[v] = j;
            }
        }
    }
}

/// All endpoints reachable from `path` by rotations with the head fixed,
/// each with a realizing path. Classic breadth-first endpoint closure.
fn rotation_closure(adj: &Adj, path: Vec<usize>) -> Vec<Vec<usize>> {
    let n = adj.n;
    let mut seen = vec![false; n];
    let mut out: Vec<Vec<usize>> = Vec::new();
    seen[*path.last().unwrap()] = true;
    let mut queue = std::collections::VecDeque::from([path]);
    while let Some(p) = queue.pop_front() {
        let tail = *p.last().unwrap();
        let mut pos = vec![NONE; n];
        for (i, &v) in p.iter().enumerate() {
            pos[v] = i;
        }
        for &w in &adj.lists[tail] {
            let i = pos[w];
            if i != NONE && i + 2 < p.len() {
                let new_tail = p[i + 1];
                if !seen[new_tail] {
                    seen[new_tail] = true;
                    let mut q = p.clone();
                    q[i + 1..].reverse();
                    queue.push_back(q.clone());
                    out.push(q);
                }
            }
        }
    }
    out
}

/// Hamilton cycle of an undirected graph, or None after the restart budget.
pub(crate) fn find_hamilton_cycle(
    g: &Graph,
    rng: &mut ChaCha8Rng,
    restarts: usize,
) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 || (0..n).any(|v| g.degree(v) < 2) {
        return exhaustive_or_none(g, n);
    }
    let adj = Adj::of_graph(g);
    let target = vec![true; n];
    for _ in 0..restarts {
        let start = rng.gen_range(0..n);
        let done = |p: &[usize]| adj.has(*p.last().unwrap(), p[0]);
        if let Some(p) = posa_walk(&adj, rng, start, &target, n, false, &done) {
            return Some(p);
        }
        // The walk may die spanning-but-unclosable; try one full walk again
        // with closure from a fresh spanning attempt.
        if let Some(p) = posa_walk(&adj, rng, start, &target, n, false, &|_| true) {
            if p.len() == n {
                if adj.has(*p.last().unwrap(), p[0]) {
                    return Some(p);
                }
                if let Some(c) = close_spanning_path(&adj, p) {
                    return Some(c);
                }
            }
        }
    }
    if n <= EXHAUSTIVE_LIMIT {
        return exhaustive_cycle(&adj);
    }
    if n <= 26 {
        // Thin mid-size graphs defeat rotation-extension; a budgeted
        // randomized DFS picks up the slack.
        let mut budget = 200_000usize;
        return budgeted_dfs_cycle(&adj, rng, &mut budget);
    }
    None
}

fn budgeted_dfs_cycle(adj: &Adj, rng: &mut ChaCha8Rng, budget: &mut usize) -> Option<Vec<usize>> {
    let n = adj.n;
    let start = rng.gen_range(0..n);
    let mut path = vec![start];
    let mut used = vec![false; n];
    used[start] = true;
    fn rec(
        adj: &Adj,
        rng: &mut ChaCha8Rng,
        path: &mut Vec<usize>,
        used: &mut Vec<bool>,
        budget: &mut usize,
    ) -> bool {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        if path.len() == adj.n {
            return adj.has(*path.last().unwrap(), path[0]);
        }
        let tail = *path.last().unwrap();
        let mut order: Vec<usize> = adj.lists[tail].iter().copied().filter(|&w| !used[w]).collect();
        order.shuffle(rng);
        for w in order {
            used[w] = true;
            path.push(w);
            if rec(adj, rng, path, used, budget) {
                return true;
            }
            path.pop();
            used[w] = false;
        }
        false
    }
    rec(adj, rng, &mut path, &mut used, budget).then_some(path)
}

fn exhaustive_or_none(g: &Graph, n: usize) -> Option<Vec<usize>> {
    if n >= 3 && n <= EXHAUSTIVE_LIMIT {
        exhaustive_cycle(&Adj::of_graph(g))
    } else {
        None
    }
}

/// Attempts to close a spanning path into a Hamilton cycle: first by the
/// crossing-chord pattern, then by rotation closure at the tail.
fn close_spanning_path(adj: &Adj, path: Vec<usize>) -> Option<Vec<usize>> {
    if let Some(c) = crossing_close(adj, &path) {
        return Some(c);
    }
    let head = path[0];
    for p in rotation_closure(adj, path) {
        if adj.has(*p.last().unwrap(), head) {
            return Some(p);
        }
        if let Some(c) = crossing_close(adj, &p) {
            return Some(c);
        }
    }
    None
}

// Chords tail~p[i] and p[i+1]~head close the cycle
// p[0..=i], p[last..=i+1].
fn crossing_close(adj: &Adj, p: &[usize]) -> Option<Vec<usize>> {
    let (head, tail) = (p[0], *p.last().unwrap());
    if adj.has(tail, head) {
        return Some(p.to_vec());
    }
    for i in 1..p.len() - 2 {
        if adj.has(tail, p[i]) && adj.has(p[i + 1], head) {
            let mut c = p[..=i].to_vec();
            c.extend(p[i + 1..].iter().rev());
            return Some(c);
        }
    }
    None
}

/// Hamilton path with both endpoints pinned. Searches inside `G - b` from
/// `a` and appends `b` when the free endpoint reaches a neighbor of `b`.
pub(crate) fn find_hamilton_path(
    g: &Graph,
    a: usize,
    b: usize,
    rng: &mut ChaCha8Rng,
    restarts: usize,
) -> Option<Vec<usize>> {
    let n = g.n();
    if a == b || a >= n || b >= n {
        return None;
    }
    if n == 2 {
        return g.has_edge(a, b).then_some(vec![a, b]);
    }
    let adj = Adj::of_graph(g);
    let want = n - 1;
    for attempt in 0..restarts {
        // Swapping roles of a and b reaches configurations that a one-sided
        // search misses.
        let (from, to) = if attempt % 2 == 0 { (a, b) } else { (b, a) };
        let mut tgt = vec![true; n];
        tgt[to] = false;
        let done = |p: &[usize]| adj.has(*p.last().unwrap(), to);
        if let Some(mut p) = posa_walk(&adj, rng, from, &tgt, want, true, &done) {
            p.push(to);
            if attempt % 2 == 1 {
                p.reverse();
            }
            return Some(p);
        }
        // Spanning-but-unattached: rotate the free end toward N(to).
        if let Some(p) = posa_walk(&adj, rng, from, &tgt, want, true, &|_| true) {
            if p.len() == want {
                for mut q in std::iter::once(p.clone()).chain(rotation_closure(&adj, p)) {
                    if adj.has(*q.last().unwrap(), to) {
                        q.push(to);
                        if attempt % 2 == 1 {
                            q.reverse();
                        }
                        return Some(q);
                    }
                }
            }
        }
    }
    if n <= EXHAUSTIVE_LIMIT {
        return exhaustive_path(&adj, a, b);
    }
    None
}

// Exhaustive backtracking, deterministic order. Definitive on tiny inputs.
fn exhaustive_cycle(adj: &Adj) -> Option<Vec<usize>> {
    let n = adj.n;
    let mut path = vec![0];
    let mut used = vec![false; n];
    used[0] = true;
    fn rec(adj: &Adj, path: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if path.len() == adj.n {
            return adj.has(*path.last().unwrap(), path[0]);
        }
        let tail = *path.last().unwrap();
        for &w in &adj.lists[tail] {
            if !used[w] {
                used[w] = true;
                path.push(w);
                if rec(adj, path, used) {
                    return true;
                }
                path.pop();
                used[w] = false;
            }
        }
        false
    }
    rec(adj, &mut path, &mut used).then_some(path)
}

fn exhaustive_path(adj: &Adj, a: usize, b: usize) -> Option<Vec<usize>> {
    let n = adj.n;
    let mut path = vec![a];
    let mut used = vec![false; n];
    used[a] = true;
    fn rec(adj: &Adj, b: usize, path: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if path.len() == adj.n {
            return *path.last().unwrap() == b;
        }
        let tail = *path.last().unwrap();
        for &w in &adj.lists[tail] {
            if !used[w] && (w != b || path.len() == adj.n - 1) {
                used[w] = true;
                path.push(w);
                if rec(adj, b, path, used) {
                    return true;
                }
                path.pop();
                used[w] = false;
            }
        }
        false
    }
    rec(adj, b, &mut path, &mut used).then_some(path)
}

/// Directed Hamilton cycle: extend the tail along unvisited out-arcs and the
/// head along unvisited in-arcs; when spanning, close directly or re-root
/// along a closing arc pair.
pub(crate) fn find_hamilton_cycle_digraph(
    d: &Digraph,
    rng: &mut ChaCha8Rng,
    restarts: usize,
) -> Option<Vec<usize>> {
    let n = d.n();
    if n < 2 {
        return None;
    }
    let out: Vec<Vec<usize>> = (0..n).map(|v| d.out_neighbors(v).collect()).collect();
    let inn: Vec<Vec<usize>> = (0..n).map(|v| d.in_neighbors(v).collect()).collect();
    let mut has = vec![false; n * n];
    for u in 0..n {
        for &v in &out[u] {
            has[u * n + v] = true;
        }
    }
    let arc = |u: usize, v: usize| has[u * n + v];

    for _ in 0..restarts {
        let start = rng.gen_range(0..n);
        let mut path = vec![start];
        let mut on = vec![false; n];
        on[start] = true;
        let mut moves = rotation_budget(n);
        'walk: loop {
            let tail = *path.last().unwrap();
            let head = path[0];
            let mut cands: Vec<usize> = out[tail].iter().copied().filter(|&w| !on[w]).collect();
            if !cands.is_empty() {
                let w = cands[rng.gen_range(0..cands.len())];
                on[w] = true;
                path.push(w);
                continue;
            }
            cands = inn[head].iter().copied().filter(|&w| !on[w]).collect();
            if !cands.is_empty() {
                let w = cands[rng.gen_range(0..cands.len())];
                on[w] = true;
                path.insert(0, w);
                continue;
            }
            if path.len() == n && arc(tail, head) {
                return Some(path);
            }
            if moves == 0 {
                break 'walk;
            }
            moves -= 1;
            // Re-root: arcs tail->p[i] and p[j]->head with i <= j < last give
            // the spanning path p[j+1..], p[i..=j], p[..i].
            let mut pos = vec![NONE; n];
            for (i, &v) in path.iter().enumerate() {
                pos[v] = i;
            }
            let mut rotated = false;
            let mut pivots: Vec<usize> = out[tail]
                .iter()
                .filter_map(|&w| (pos[w] != NONE).then_some(pos[w]))
                .filter(|&i| i > 0)
                .collect();
            pivots.shuffle(rng);
            'pivot: for i in pivots {
                let mut joins: Vec<usize> = inn[head]
                    .iter()
                    .filter_map(|&w| (pos[w] != NONE).then_some(pos[w]))
                    .filter(|&j| j >= i && j + 1 < path.len())
                    .collect();
                joins.shuffle(rng);
                if let Some(&j) = joins.first() {
                    let mut np = Vec::with_capacity(path.len());
                    np.extend_from_slice(&path[j + 1..]);
                    np.extend_from_slice(&path[i..=j]);
                    np.extend_from_slice(&path[..i]);
                    path = np;
                    rotated = true;
                    break 'pivot;
                }
            }
            if !rotated {
                break 'walk;
            }
        }
    }
    if n <= EXHAUSTIVE_LIMIT {
        return exhaustive_cycle_digraph(d);
    }
    if n <= 26 {
        let out: Vec<Vec<usize>> = (0..n).map(|v| d.out_neighbors(v).collect()).collect();
        let mut budget = 200_000usize;
        let start = rng.gen_range(0..n);
        let mut path = vec![start];
        let mut used = vec![false; n];
        used[start] = true;
        fn rec(
            out: &[Vec<usize>],
            d: &Digraph,
            rng: &mut ChaCha8Rng,
            path: &mut Vec<usize>,
            used: &mut Vec<bool>,
            budget: &mut usize,
        ) -> bool {
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
            if path.len() == out.len() {
                return d.has_arc(*path.last().unwrap(), path[0]);
            }
            let tail = *path.last().unwrap();
            let mut order: Vec<usize> =
                out[tail].iter().copied().filter(|&w| !used[w]).collect();
            order.shuffle(rng);
            for w in order {
                used[w] = true;
                path.push(w);
                if rec(out, d, rng, path, used, budget) {
                    return true;
                }
                path.pop();
                used[w] = false;
            }
            false
        }
        return rec(&out, d, rng, &mut path, &mut used, &mut budget).then_some(path);
    }
    None
}

fn exhaustive_cycle_digraph(d: &Digraph) -> Option<Vec<usize>> {
    let n = d.n();
    if n < 2 {
        return None;
    }
    let out: Vec<Vec<usize>> = (0..n).map(|v| d.out_neighbors(v).collect()).collect();
    let mut path = vec![0];
    let mut used = vec![false; n];
    used[0] = true;
    fn rec(out: &[Vec<usize>], d: &Digraph, path: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if path.len() == out.len() {
            return d.has_arc(*path.last().unwrap(), path[0]);
        }
        let tail = *path.last().unwrap();
        for &w in &out[tail] {
            if !used[w] {
                used[w] = true;
                path.push(w);
                if rec(out, d, path, used) {
                    return true;
                }
                path.pop();
                used[w] = false;
            }
        }
        false
    }
    rec(&out, d, &mut path, &mut used).then_some(path)
}

fn verify_cycle(g: &Graph, cycle: &[usize]) -> bool {
    if cycle.len() != g.n() || cycle.len() < 3 {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in cycle {
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    cycle
        .windows(2)
        .all(|w| g.has_edge(w[0], w[1]))
        && g.has_edge(*cycle.last().unwrap(), cycle[0])
}

fn verify_cycle_digraph(d: &Digraph, cycle: &[usize]) -> bool {
    if cycle.len() != d.n() || cycle.len() < 2 {
        return false;
    }
    let mut seen = vec![false; d.n()];
    for &v in cycle {
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    cycle.windows(2).all(|w| d.has_arc(w[0], w[1])) && d.has_arc(*cycle.last().unwrap(), cycle[0])
}

/// Hamilton cycle of `g`, verified before return.
pub fn hamilton_cycle(g: &Graph, rng: &mut ChaCha8Rng, retry_budget: usize) -> Result<Vec<usize>> {
    if g.n() == 0 {
        return Err(Error::Usage("hamilton_cycle on the empty graph".into()));
    }
    match find_hamilton_cycle(g, rng, retry_budget.max(1)) {
        Some(c) => {
            debug_assert!(verify_cycle(g, &c));
            if !verify_cycle(g, &c) {
                return Err(Error::NotFound {
                    what: "internal: candidate cycle failed verification".into(),
                });
            }
            Ok(c)
        }
        None => Err(Error::NotFound {
            what: format!("hamilton cycle (budget {retry_budget})"),
        }),
    }
}

/// Directed Hamilton cycle of `d`, verified before return.
pub fn hamilton_cycle_digraph(
    d: &Digraph,
    rng: &mut ChaCha8Rng,
    retry_budget: usize,
) -> Result<Vec<usize>> {
    if d.n() == 0 {
        return Err(Error::Usage("hamilton_cycle on the empty digraph".into()));
    }
    match find_hamilton_cycle_digraph(d, rng, retry_budget.max(1)) {
        Some(c) => {
            debug_assert!(verify_cycle_digraph(d, &c));
            Ok(c)
        }
        None => Err(Error::NotFound {
            what: format!("directed hamilton cycle (budget {retry_budget})"),
        }),
    }
}

/// Spanning path with endpoints exactly `a` and `b`.
pub fn hamilton_path(
    g: &Graph,
    a: usize,
    b: usize,
    rng: &mut ChaCha8Rng,
    retry_budget: usize,
) -> Result<Vec<usize>> {
    if a == b || a >= g.n() || b >= g.n() {
        return Err(Error::Usage(format!("bad endpoints {a}, {b}")));
    }
    match find_hamilton_path(g, a, b, rng, retry_budget.max(1)) {
        Some(p) => {
            debug_assert!(verify_path(g, &p, a, b));
            Ok(p)
        }
        None => Err(Error::NotFound {
            what: format!("hamilton path {a}..{b} (budget {retry_budget})"),
        }),
    }
}

fn verify_path(g: &Graph, p: &[usize], a: usize, b: usize) -> bool {
    if p.len() != g.n() || p.first() != Some(&a) || p.last() != Some(&b) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in p {
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    p.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Hamilton path via the contraction route: merge `{a,b}` into one vertex
/// `c`, orient the edges at `c` outward to `N(a)` and inward from `N(b)`,
/// double every other edge, and lift a directed Hamilton cycle back.
pub fn hamilton_path_via_contraction(
    g: &Graph,
    a: usize,
    b: usize,
    rng: &mut ChaCha8Rng,
    retry_budget: usize,
) -> Result<Vec<usize>> {
    if a == b || a >= g.n() || b >= g.n() {
        return Err(Error::Usage(format!("bad endpoints {a}, {b}")));
    }
    let n = g.n();
    if n == 2 {
        return if g.has_edge(a, b) {
            Ok(vec![a, b])
        } else {
            Err(Error::NotFound {
                what: "no edge between the two endpoints".into(),
            })
        };
    }
    // Vertices other than a, b keep ids via this map; c is the last vertex.
    let mut map = Vec::with_capacity(n - 1);
    let mut idx = vec![NONE; n];
    for v in 0..n {
        if v != a && v != b {
            idx[v] = map.len();
            map.push(v);
        }
    }
    let c = map.len();
    let mut d = Digraph::new(c + 1);
    for (u, v) in g.edges() {
        if (u == a && v == b) || (u == b && v == a) {
            continue;
        }
        if u == a || v == a {
            let w = if u == a { v } else { u };
            d.add_arc(c, idx[w]).unwrap();
        } else if u == b || v == b {
            let w = if u == b { v } else { u };
            // N(a) and N(b) may overlap; both orientations at c can coexist.
            if !d.has_arc(idx[w], c) {
                d.add_arc(idx[w], c).unwrap();
            }
        } else {
            d.add_arc(idx[u], idx[v]).unwrap();
            d.add_arc(idx[v], idx[u]).unwrap();
        }
    }
    let cycle = hamilton_cycle_digraph(&d, rng, retry_budget)?;
    let at = cycle.iter().position(|&v| v == c).unwrap();
    let mut path = vec![a];
    for k in 1..cycle.len() {
        path.push(map[cycle[(at + k) % cycle.len()]]);
    }
    path.push(b);
    if !verify_path(g, &path, a, b) {
        return Err(Error::NotFound {
            what: "contraction lift produced an invalid path".into(),
        });
    }
    Ok(path)
}

/// Perfect matching on an even vertex set: alternate edges of a Hamilton
/// cycle, falling back to a maximum matching when the cycle search fails.
pub fn perfect_matching_even_set(
    g: &Graph,
    rng: &mut ChaCha8Rng,
    retry_budget: usize,
) -> Result<Vec<Edge>> {
    let n = g.n();
    if n % 2 != 0 {
        return Err(Error::Usage(format!(
            "perfect matching needs an even vertex set, got {n}"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    if let Some(cycle) = find_hamilton_cycle(g, rng, retry_budget.max(1)) {
        let m = cycle
            .chunks(2)
            .map(|c| crate::graph::canon(c[0], c[1]))
            .collect();
        return Ok(m);
    }
    let m = crate::matching::max_matching(g);
    if m.len() * 2 == n {
        Ok(m)
    } else {
        Err(Error::NotFound {
            what: format!(
                "perfect matching: maximum matching covers {} of {n} vertices",
                m.len() * 2
            ),
        })
    }
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
    fn k4_cycle() {
        let c = hamilton_cycle(&Graph::complete(4), &mut rng(1), 50).unwrap();
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn c7_cycle_is_itself() {
        let g = Graph::cycle(7);
        let c = hamilton_cycle(&g, &mut rng(2), 50).unwrap();
        assert_eq!(c.len(), 7);
        for w in c.windows(2) {
            assert!(g.has_edge(w[0], w[1]));
        }
    }

    #[test]
    fn gnp50_cycle_verified() {
        let g = gen_gnp(50, 0.5, 11).unwrap();
        let c = hamilton_cycle(&g, &mut rng(3), 100).unwrap();
        assert!(verify_cycle(&g, &c));
    }

    #[test]
    fn no_cycle_in_tree_is_definitive() {
        let g = Graph::path_graph(6);
        assert!(matches!(
            hamilton_cycle(&g, &mut rng(4), 20),
            Err(Error::NotFound { .. })
        ));
    }

    #[test]
    fn k4_path_between_any_pair() {
        let g = Graph::complete(4);
        let p = hamilton_path(&g, 0, 3, &mut rng(5), 50).unwrap();
        assert_eq!((p[0], p[3]), (0, 3));
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn c4_paths_only_between_adjacent() {
        // C4 = 0-1-2-3-0. Hamilton paths join adjacent vertices only.
        let g = Graph::cycle(4);
        let p = hamilton_path(&g, 1, 2, &mut rng(6), 50).unwrap();
        assert_eq!(p, vec![1, 0, 3, 2]);
        assert!(matches!(
            hamilton_path(&g, 0, 2, &mut rng(7), 50),
            Err(Error::NotFound { .. })
        ));
    }

    #[test]
    fn gnp40_path_verified() {
        let g = gen_gnp(40, 0.4, 2).unwrap();
        let p = hamilton_path(&g, 0, 1, &mut rng(8), 100).unwrap();
        assert!(verify_path(&g, &p, 0, 1));
    }

    #[test]
    fn contraction_route_agrees_with_direct() {
        for seed in 0..8 {
            let g = gen_gnp(14, 0.6, 100 + seed).unwrap();
            let direct = find_hamilton_path(&g, 0, 5, &mut rng(seed), 60).is_some();
            let via = hamilton_path_via_contraction(&g, 0, 5, &mut rng(seed + 1), 60).is_ok();
            assert_eq!(direct, via, "seed {seed}");
        }
        // And on a graph where no path exists.
        let g = Graph::cycle(4);
        assert!(hamilton_path_via_contraction(&g, 0, 2, &mut rng(9), 40).is_err());
    }

    #[test]
    fn digraph_cycle_triangle() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let c = hamilton_cycle_digraph(&d, &mut rng(10), 20).unwrap();
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn digraph_cycle_dense_random() {
        let g = gen_gnp(40, 0.5, 21).unwrap();
        let d = crate::euler::cycle_peel_orientation(
            &remove_odd_matching(&g),
        )
        .unwrap();
        let c = hamilton_cycle_digraph(&d, &mut rng(11), 200).unwrap();
        assert!(verify_cycle_digraph(&d, &c));
    }

    // Test helper: strip a matching on the odd-degree set so degrees are even.
    fn remove_odd_matching(g: &Graph) -> Graph {
        let prof = g.degree_profile();
        let (sub, map) = g.induced_subgraph(&prof.odd_set).unwrap();
        let m = crate::matching::max_matching(&sub);
        assert_eq!(m.len() * 2, prof.odd_set.len());
        let edges: Vec<Edge> = m
            .iter()
            .map(|&(u, v)| crate::graph::canon(map[u], map[v]))
            .collect();
        g.remove_edges(edges.iter()).unwrap()
    }

    #[test]
    fn matching_c6() {
        let m = perfect_matching_even_set(&Graph::cycle(6), &mut rng(12), 20).unwrap();
        assert_eq!(m.len(), 3);
    }

    #[test]
    fn matching_k4() {
        let m = perfect_matching_even_set(&Graph::complete(4), &mut rng(13), 20).unwrap();
        assert_eq!(m.len(), 2);
        let mut vs: Vec<usize> = m.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort();
        assert_eq!(vs, vec![0, 1, 2, 3]);
    }

    #[test]
    fn matching_on_odd_set_of_gnp30() {
        let g = gen_gnp(30, 0.5, 5).unwrap();
        let prof = g.degree_profile();
        let (sub, _) = g.induced_subgraph(&prof.odd_set).unwrap();
        let m = perfect_matching_even_set(&sub, &mut rng(14), 100).unwrap();
        assert_eq!(m.len() * 2, prof.odd_set.len());
    }

    #[test]
    fn matching_falls_back_without_hamilton_cycle() {
        // Two disjoint edges: no Hamilton cycle, but a perfect matching.
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let m = perfect_matching_even_set(&g, &mut rng(15), 10).unwrap();
        assert_eq!(m, vec![(0, 1), (2, 3)]);
    }
}
