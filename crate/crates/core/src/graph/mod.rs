//! Finite simple graphs over opaque string labels.
//!
//! Vertices are addressed by dense indices `0..n` in computation; the label
//! table is kept so reports can name vertices the way the input did.

mod canon;
mod families;

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub use canon::{canonical_form, canonical_form_brute_force, canonical_labeling, CanonicalForm};
pub use families::{generate, Family};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<bool>>,
}

impl Graph {
    /// Edgeless graph on the given labels.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        let n = labels.len();
        Ok(Graph { labels, index, adj: vec![vec![false; n]; n] })
    }

    /// Edgeless graph labelled `"0"`, `"1"`, ... `"n-1"`.
    pub fn with_order(n: usize) -> Self {
        Graph::new((0..n).map(|i| i.to_string())).expect("numeric labels are unique")
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::with_order(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|row| row.iter().filter(|&&b| b).count()).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index.get(label).copied().ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn indices_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        labels.iter().map(|l| self.index_of(l.as_ref())).collect()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        if u >= n {
            return Err(Error::UnknownVertex(u.to_string()));
        }
        if v >= n {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        if u == v {
            return Err(Error::SelfLoop(self.labels[u].clone()));
        }
        self.adj[u][v] = true;
        self.adj[v][u] = true;
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().enumerate().filter_map(|(u, &b)| b.then_some(u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&b| b).count()
    }

    /// Edges as index pairs `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.adj[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.adj[u][v]))
    }

    /// Induced subgraph on `t`, in the order given. Labels are preserved.
    pub fn full_subgraph(&self, t: &[usize]) -> Result<Graph> {
        let n = self.order();
        if let Some(&bad) = t.iter().find(|&&v| v >= n) {
            return Err(Error::UnknownVertex(bad.to_string()));
        }
        let mut g = Graph::new(t.iter().map(|&v| self.labels[v].clone()))?;
        for (i, &u) in t.iter().enumerate() {
            for (j, &v) in t.iter().enumerate().skip(i + 1) {
                if self.adj[u][v] {
                    g.adj[i][j] = true;
                    g.adj[j][i] = true;
                }
            }
        }
        Ok(g)
    }

    pub fn full_subgraph_by_labels<S: AsRef<str>>(&self, t: &[S]) -> Result<Graph> {
        let idx = self.indices_of(t)?;
        self.full_subgraph(&idx)
    }

    pub fn vertex_deleted(&self, s: usize) -> Result<Graph> {
        if s >= self.order() {
            return Err(Error::UnknownVertex(s.to_string()));
        }
        let keep: Vec<usize> = (0..self.order()).filter(|&v| v != s).collect();
        self.full_subgraph(&keep)
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        let n = self.order();
        for u in 0..n {
            for v in 0..n {
                g.adj[u][v] = u != v && !self.adj[u][v];
            }
        }
        g
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let n1 = self.order();
        for u in 0..n1 {
            for v in n1..g.order() {
                g.adj[u][v] = true;
                g.adj[v][u] = true;
            }
        }
        Ok(g)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        if let Some(l) = other.labels.iter().find(|l| self.index.contains_key(*l)) {
            return Err(Error::LabelCollision(l.clone()));
        }
        let n1 = self.order();
        let mut g = Graph::new(self.labels.iter().chain(&other.labels).cloned())?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(n1 + u, n1 + v)?;
        }
        Ok(g)
    }

    /// Same graph with every label rewritten by `f`.
    pub fn relabeled<F: FnMut(&str) -> String>(&self, mut f: F) -> Result<Graph> {
        let mut g = Graph::new(self.labels.iter().map(|l| f(l)))?;
        g.adj = self.adj.clone();
        Ok(g)
    }

    /// Vertex `v` of the result is vertex `perm[v]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        self.full_subgraph(perm).expect("permutation entries are in range")
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.size() == n * n.saturating_sub(1) / 2
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> =
            self.edges().into_iter().map(|(u, v)| format!("{}-{}", self.labels[u], self.labels[v])).collect();
        f.debug_struct("Graph").field("vertices", &self.labels).field("edges", &edges).finish()
    }
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b)
}
