//! Exact Edmonds–Karp max-flow over rational capacities.

use std::collections::VecDeque;

use num_traits::{Signed, Zero};

use crate::bits::BitSet;
use crate::rational::Rational;

pub(crate) struct FlowNetwork {
    adj: Vec<Vec<usize>>,
    head: Vec<usize>,
    residual: Vec<Rational>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); nodes],
            head: Vec::new(),
            residual: Vec::new(),
        }
    }

    /// Adds `u → v`; returns the forward edge id. The reverse edge is `id ^ 1`.
    pub fn add_edge(&mut self, u: usize, v: usize, cap: Rational) -> usize {
        let e = self.head.len();
        self.head.push(v);
        self.residual.push(cap);
        self.adj[u].push(e);
        self.head.push(u);
        self.residual.push(Rational::zero());
        self.adj[v].push(e + 1);
        e
    }

    /// Flow currently carried by forward edge `e`.
    pub fn flow_on(&self, e: usize) -> &Rational {
        &self.residual[e ^ 1]
    }

    pub fn max_flow(&mut self, source: usize, sink: usize) -> Rational {
        let mut total = Rational::zero();
        let n = self.adj.len();
        let mut parent = vec![usize::MAX; n];
        loop {
            parent.fill(usize::MAX);
            if !self.bfs(source, sink, &mut parent) {
                return total;
            }
            let mut bottleneck: Option<&Rational> = None;
            let mut v = sink;
            while v != source {
                let e = parent[v];
                let r = &self.residual[e];
                if bottleneck.is_none_or(|b| r < b) {
                    bottleneck = Some(r);
                }
                v = self.head[e ^ 1];
            }
            let delta = bottleneck.expect("path has an edge").clone();
            let mut v = sink;
            while v != source {
                let e = parent[v];
                self.residual[e] -= &delta;
                self.residual[e ^ 1] += &delta;
                v = self.head[e ^ 1];
            }
            total += delta;
        }
    }

    fn bfs(&self, source: usize, sink: usize, parent: &mut [usize]) -> bool {
        let mut seen = BitSet::new(self.adj.len());
        seen.insert(source);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.head[e];
                if !seen.contains(v) && self.residual[e].is_positive() {
                    seen.insert(v);
                    parent[v] = e;
                    if v == sink {
                        return true;
                    }
                    queue.push_back(v);
                }
            }
        }
        false
    }

    /// Nodes reachable from `source` through positive residual capacity.
    pub fn residual_reach(&self, source: usize) -> BitSet {
        let mut seen = BitSet::new(self.adj.len());
        seen.insert(source);
        let mut stack = vec![source];
        while let Some(u) = stack.pop() {
            for &e in &self.adj[u] {
                let v = self.head[e];
                if self.residual[e].is_positive() && seen.insert(v) {
                    stack.push(v);
                }
            }
        }
        seen
    }
}
