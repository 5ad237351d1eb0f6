//! Directed graphs on generator names that generate a preorder.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use serde::Serialize;

use crate::Name;

/// A generating relation: the preorder is its reflexive-transitive closure.
///
/// Nodes keep their insertion order, which callers use to make reports
/// deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RelationGraph {
    nodes: Vec<Name>,
    edges: BTreeSet<(Name, Name)>,
    #[serde(skip)]
    index: HashMap<Name, usize>,
}

impl RelationGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_nodes<I: IntoIterator<Item = Name>>(nodes: I) -> Self {
        let mut g = Self::new();
        for n in nodes {
            g.add_node(n);
        }
        g
    }

    pub fn add_node(&mut self, n: Name) {
        if !self.index.contains_key(&n) {
            self.index.insert(n.clone(), self.nodes.len());
            self.nodes.push(n);
        }
    }

    /// Adds `from → to`, inserting missing endpoints as nodes.
    pub fn add_edge(&mut self, from: Name, to: Name) {
        self.add_node(from.clone());
        self.add_node(to.clone());
        self.edges.insert((from, to));
    }

    pub fn nodes(&self) -> &[Name] {
        &self.nodes
    }

    pub fn edges(&self) -> &BTreeSet<(Name, Name)> {
        &self.edges
    }

    pub fn contains_edge(&self, from: &str, to: &str) -> bool {
        self.edges.contains(&(Name::from(from), Name::from(to)))
    }

    fn digraph(&self) -> DiGraph<usize, ()> {
        let mut g = DiGraph::with_capacity(self.nodes.len(), self.edges.len());
        for i in 0..self.nodes.len() {
            g.add_node(i);
        }
        for (a, b) in &self.edges {
            g.add_edge(NodeIndex::new(self.index[a]), NodeIndex::new(self.index[b]), ());
        }
        g
    }

    fn successors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.nodes.len()];
        for (a, b) in &self.edges {
            out[self.index[a]].push(self.index[b]);
        }
        out
    }

    /// Strongly connected components with more than one node, each listed in
    /// node order.
    pub fn nontrivial_components(&self) -> Vec<Vec<Name>> {
        let mut comps: Vec<Vec<usize>> = tarjan_scc(&self.digraph())
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let mut v: Vec<usize> = c.into_iter().map(|n| n.index()).collect();
                v.sort_unstable();
                v
            })
            .collect();
        comps.sort();
        comps.into_iter().map(|c| c.into_iter().map(|i| self.nodes[i].clone()).collect()).collect()
    }

    /// True iff the generated preorder is a partial order, i.e. no two
    /// distinct nodes reach each other. Self-loops are harmless.
    pub fn is_antisymmetric(&self) -> bool {
        self.nontrivial_components().is_empty()
    }

    /// A cycle through at least two distinct nodes, if one exists. Each
    /// consecutive pair is an edge and the last node has an edge back to the
    /// first.
    pub fn cycle_witness(&self) -> Option<Vec<Name>> {
        let comp = self.nontrivial_components().into_iter().next()?;
        let members: BTreeSet<usize> = comp.iter().map(|n| self.index[n]).collect();
        let start = *members.first()?;
        let succ = self.successors();
        // Shortest path back to `start` inside the component.
        let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &succ[u] {
                if !members.contains(&v) || v == u {
                    continue;
                }
                if v == start {
                    let mut path = vec![u];
                    let mut cur = u;
                    while cur != start {
                        cur = parent[&cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(path.into_iter().map(|i| self.nodes[i].clone()).collect());
                }
                if let std::collections::btree_map::Entry::Vacant(e) = parent.entry(v) {
                    e.insert(u);
                    queue.push_back(v);
                }
            }
        }
        unreachable!("a strongly connected component of size > 1 contains a cycle")
    }

    /// The reflexive-transitive closure as a set of pairs `(a, b)` with `a ≤ b`.
    pub fn closure(&self) -> BTreeSet<(Name, Name)> {
        let succ = self.successors();
        let mut out = BTreeSet::new();
        for s in 0..self.nodes.len() {
            let mut seen = vec![false; self.nodes.len()];
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                out.insert((self.nodes[s].clone(), self.nodes[u].clone()));
                for &v in &succ[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        out
    }

    /// True iff `a ≤ b` in the generated preorder.
    pub fn reaches(&self, a: &str, b: &str) -> bool {
        let (Some(&s), Some(&t)) = (self.index.get(a), self.index.get(b)) else { return false };
        let succ = self.successors();
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            if u == t {
                return true;
            }
            for &v in &succ[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        false
    }

    /// A linear order of the nodes extending every edge as a strict
    /// inequality, or a cycle (possibly a self-loop) preventing one.
    ///
    /// Ties are broken by node order, so the result is deterministic.
    pub fn linear_extension(&self) -> Result<Vec<Name>, Vec<Name>> {
        if let Some((a, _)) = self.edges.iter().find(|(a, b)| a == b) {
            return Err(vec![a.clone()]);
        }
        let succ = self.successors();
        let mut indeg = vec![0usize; self.nodes.len()];
        for vs in &succ {
            for &v in vs {
                indeg[v] += 1;
            }
        }
        let mut ready: BTreeSet<usize> = (0..self.nodes.len()).filter(|&i| indeg[i] == 0).collect();
        let mut order = Vec::with_capacity(self.nodes.len());
        while let Some(u) = ready.pop_first() {
            order.push(self.nodes[u].clone());
            for &v in &succ[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    ready.insert(v);
                }
            }
        }
        if order.len() == self.nodes.len() {
            Ok(order)
        } else {
            Err(self.cycle_witness().expect("leftover nodes lie on a cycle"))
        }
    }

    /// Graphviz rendering of the generating edges. Nodes are labelled
    /// `name:dim` using `dim_of`.
    pub fn to_dot(&self, title: &str, dim_of: impl Fn(&Name) -> Option<usize>) -> String {
        let mut s = String::new();
        let quote = |x: &str| format!("\"{}\"", x.replace('\\', "\\\\").replace('"', "\\\""));
        let _ = writeln!(s, "digraph {} {{", quote(title));
        for n in &self.nodes {
            let label = match dim_of(n) {
                Some(d) => format!("{n}:{d}"),
                None => n.to_string(),
            };
            let _ = writeln!(s, "  {} [label={}];", quote(n.as_str()), quote(&label));
        }
        for (a, b) in &self.edges {
            let _ = writeln!(s, "  {} -> {};", quote(a.as_str()), quote(b.as_str()));
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(edges: &[(&str, &str)]) -> RelationGraph {
        let mut g = RelationGraph::new();
        for (a, b) in edges {
            g.add_edge(Name::from(*a), Name::from(*b));
        }
        g
    }

    #[test]
    fn chain_is_a_partial_order() {
        let g = graph(&[("a", "b"), ("b", "c")]);
        assert!(g.is_antisymmetric());
        assert_eq!(g.cycle_witness(), None);
        assert!(g.reaches("a", "c"));
        assert!(!g.reaches("c", "a"));
        assert_eq!(g.closure().len(), 6);
        assert_eq!(g.linear_extension().unwrap(), vec![Name::from("a"), Name::from("b"), Name::from("c")]);
    }

    #[test]
    fn self_loops_are_antisymmetric_but_not_strict() {
        let g = graph(&[("a", "a")]);
        assert!(g.is_antisymmetric());
        assert_eq!(g.linear_extension().unwrap_err(), vec![Name::from("a")]);
    }

    #[test]
    fn witness_is_a_cycle() {
        let g = graph(&[("a", "f"), ("f", "b"), ("b", "g"), ("g", "a"), ("b", "z")]);
        assert!(!g.is_antisymmetric());
        let w = g.cycle_witness().unwrap();
        assert_eq!(w.len(), 4);
        for i in 0..w.len() {
            assert!(g.contains_edge(&w[i], &w[(i + 1) % w.len()]));
        }
        assert!(g.linear_extension().is_err());
    }

    #[test]
    fn dot_lists_nodes_and_edges() {
        let g = graph(&[("a", "b")]);
        let dot = g.to_dot("t", |n| Some(if n == "a" { 0 } else { 1 }));
        assert!(dot.contains("label=\"a:0\""));
        assert!(dot.contains("\"a\" -> \"b\";"));
    }
}
