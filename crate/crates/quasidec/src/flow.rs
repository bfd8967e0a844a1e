//! Integral max flow (Dinic). Small networks only; exact integer capacities.

#[derive(Debug, Clone)]
struct FlowEdge {
    to: usize,
    cap: i64,
}

pub struct FlowNetwork {
    n: usize,
    edges: Vec<FlowEdge>,
    adj: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub fn new(n: usize) -> Self {
        FlowNetwork {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Returns the edge id; the reverse edge is `id ^ 1`.
    pub fn add_edge(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let id = self.edges.len();
        self.edges.push(FlowEdge { to, cap });
        self.adj[from].push(id);
        self.edges.push(FlowEdge { to: from, cap: 0 });
        self.adj[to].push(id + 1);
        id
    }

    /// Flow pushed through edge `id` so far (current reverse capacity).
    pub fn flow_on(&self, id: usize) -> i64 {
        self.edges[id ^ 1].cap
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        loop {
            let level = self.bfs_levels(s);
            if level[t].is_none() {
                return total;
            }
            let mut iter = vec![0usize; self.n];
            loop {
                let pushed = self.dfs(s, t, i64::MAX, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    fn bfs_levels(&self, s: usize) -> Vec<Option<u32>> {
        let mut level = vec![None; self.n];
        level[s] = Some(0);
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &id in &self.adj[v] {
                let e = &self.edges[id];
                if e.cap > 0 && level[e.to].is_none() {
                    level[e.to] = Some(level[v].unwrap() + 1);
                    queue.push_back(e.to);
                }
            }
        }
        level
    }

    fn dfs(
        &mut self,
        v: usize,
        t: usize,
        limit: i64,
        level: &[Option<u32>],
        iter: &mut [usize],
    ) -> i64 {
        if v == t {
            return limit;
        }
        while iter[v] < self.adj[v].len() {
            let id = self.adj[v][iter[v]];
            let (to, cap) = (self.edges[id].to, self.edges[id].cap);
            if cap > 0 && level[to] == level[v].map(|l| l + 1) {
                let pushed = self.dfs(to, t, limit.min(cap), level, iter);
                if pushed > 0 {
                    self.edges[id].cap -= pushed;
                    self.edges[id ^ 1].cap += pushed;
                    return pushed;
                }
            }
            iter[v] += 1;
        }
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_path() {
        let mut f = FlowNetwork::new(3);
        f.add_edge(0, 1, 2);
        f.add_edge(1, 2, 1);
        assert_eq!(f.max_flow(0, 2), 1);
    }

    #[test]
    fn classic_diamond() {
        let mut f = FlowNetwork::new(4);
        f.add_edge(0, 1, 3);
        f.add_edge(0, 2, 2);
        f.add_edge(1, 2, 5);
        f.add_edge(1, 3, 2);
        f.add_edge(2, 3, 3);
        assert_eq!(f.max_flow(0, 3), 5);
    }

    #[test]
    fn flow_on_reports_edge_flow() {
        let mut f = FlowNetwork::new(2);
        let id = f.add_edge(0, 1, 7);
        assert_eq!(f.max_flow(0, 1), 7);
        assert_eq!(f.flow_on(id), 7);
    }
}
