//! Finite abstract simplicial complexes, flag (clique) complexes, links and
//! full subcomplexes.
//!
//! Simplices are strictly increasing lists of vertex indices into the
//! complex's label table. Level `k` holds the `k`-simplices in lexicographic
//! order, which fixes the chain bases used by the homology engine.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    /// Sorts and deduplicates.
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// `-1` for the empty simplex.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.by_ref().any(|w| w == v))
    }
}

impl From<Vec<usize>> for Simplex {
    fn from(v: Vec<usize>) -> Self {
        Simplex::new(v)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    levels: Vec<BTreeSet<Vec<usize>>>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        SimplicialComplex { labels: Vec::new(), levels: Vec::new() }
    }

    /// Downward closure of `simplices` over the given vertex labels. Every
    /// label becomes a 0-simplex even if no listed simplex mentions it.
    pub fn from_simplices<I>(labels: Vec<String>, simplices: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let n = labels.len();
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l) {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        let mut c = SimplicialComplex { labels, levels: Vec::new() };
        if n > 0 {
            c.levels.push((0..n).map(|v| vec![v]).collect());
        }
        for s in simplices {
            let s = Simplex::new(s);
            if let Some(&bad) = s.0.iter().find(|&&v| v >= n) {
                return Err(Error::UnknownVertex(bad.to_string()));
            }
            c.insert_closed(s.0);
        }
        Ok(c)
    }

    /// Convenience for label-addressed facets, e.g. parsed input.
    pub fn from_labeled_facets<S: AsRef<str>>(facets: &[Vec<S>]) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut index = std::collections::HashMap::new();
        let mut simplices = Vec::with_capacity(facets.len());
        for f in facets {
            let mut s = Vec::with_capacity(f.len());
            for l in f {
                let l = l.as_ref();
                let i = *index.entry(l.to_string()).or_insert_with(|| {
                    labels.push(l.to_string());
                    labels.len() - 1
                });
                s.push(i);
            }
            simplices.push(s);
        }
        SimplicialComplex::from_simplices(labels, simplices)
    }

    fn insert_closed(&mut self, s: Vec<usize>) {
        if s.is_empty() {
            return;
        }
        let k = s.len() - 1;
        while self.levels.len() <= k {
            self.levels.push(BTreeSet::new());
        }
        if self.levels[k].contains(&s) {
            return;
        }
        if k > 0 {
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                self.insert_closed(face);
            }
        }
        self.levels[k].insert(s);
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.levels.len() as isize - 1
    }

    /// The `k`-simplices in basis order. Empty outside `0..=dim`.
    pub fn simplices(&self, k: isize) -> impl Iterator<Item = &[usize]> + '_ {
        let level = usize::try_from(k).ok().and_then(|k| self.levels.get(k));
        level.into_iter().flat_map(|l| l.iter().map(Vec::as_slice))
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.levels.iter().flat_map(|l| l.iter().map(Vec::as_slice))
    }

    pub fn count(&self, k: isize) -> usize {
        usize::try_from(k).ok().and_then(|k| self.levels.get(k)).map_or(0, BTreeSet::len)
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        match s.len() {
            0 => true,
            len => self.levels.get(len - 1).is_some_and(|l| l.contains(s)),
        }
    }

    pub fn simplex(&self, vertices: &[usize]) -> Result<Simplex> {
        let s = Simplex::new(vertices.to_vec());
        if s.0.iter().any(|&v| v >= self.num_vertices()) || !self.contains(&s.0) {
            return Err(Error::NotASimplex(self.name_vertices(&s.0)));
        }
        Ok(s)
    }

    pub fn simplex_by_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Simplex> {
        let idx = labels
            .iter()
            .map(|l| {
                self.labels
                    .iter()
                    .position(|x| x == l.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(l.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.simplex(&idx)
    }

    pub fn name_vertices(&self, vs: &[usize]) -> Vec<String> {
        vs.iter().map(|&v| self.labels.get(v).cloned().unwrap_or_else(|| v.to_string())).collect()
    }

    /// Counts per dimension, `f_0` first.
    pub fn f_vector(&self) -> Vec<usize> {
        self.levels.iter().map(BTreeSet::len).collect()
    }

    /// Alternating sum of the f-vector; zero for the empty complex.
    pub fn euler_characteristic(&self) -> i64 {
        self.levels.iter().enumerate().map(|(k, l)| if k % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) }).sum()
    }

    /// Simplices not properly contained in another simplex.
    pub fn facets(&self) -> Vec<&[usize]> {
        let mut out = Vec::new();
        for (k, level) in self.levels.iter().enumerate() {
            for s in level {
                let maximal = match self.levels.get(k + 1) {
                    None => true,
                    Some(up) => !up.iter().any(|t| Simplex::is_face_of_slice(s, t)),
                };
                if maximal {
                    out.push(s.as_slice());
                }
            }
        }
        out
    }

    /// The 1-skeleton as a graph with the same labels.
    pub fn one_skeleton(&self) -> Graph {
        let mut g = Graph::new(self.labels.iter().cloned()).expect("complex labels are unique");
        for e in self.simplices(1) {
            g.add_edge(e[0], e[1]).expect("edge endpoints are vertices");
        }
        g
    }

    /// Subcomplex of simplices whose vertices all lie in `t`. Vertices are
    /// reindexed in increasing order of their index in `self`.
    pub fn full_subcomplex(&self, t: &[usize]) -> Result<SimplicialComplex> {
        let n = self.num_vertices();
        let mut keep = vec![false; n];
        for &v in t {
            if v >= n {
                return Err(Error::UnknownVertex(v.to_string()));
            }
            keep[v] = true;
        }
        Ok(self.restrict(&keep, self.all_simplices().filter(|s| s.iter().all(|&v| keep[v])).map(<[usize]>::to_vec)))
    }

    /// All `tau` disjoint from `sigma` with `tau ∪ sigma` a simplex.
    pub fn link(&self, sigma: &Simplex) -> Result<SimplicialComplex> {
        if sigma.0.iter().any(|&v| v >= self.num_vertices()) || !self.contains(&sigma.0) {
            return Err(Error::NotASimplex(self.name_vertices(&sigma.0)));
        }
        let start = sigma.0.len();
        let mut keep = vec![false; self.num_vertices()];
        let mut faces = Vec::new();
        for level in self.levels.iter().skip(start) {
            for s in level {
                if Simplex::is_face_of_slice(&sigma.0, s) {
                    let rest: Vec<usize> = s.iter().copied().filter(|v| sigma.0.binary_search(v).is_err()).collect();
                    for &v in &rest {
                        keep[v] = true;
                    }
                    faces.push(rest);
                }
            }
        }
        Ok(self.restrict(&keep, faces))
    }

    /// Re-index onto the kept vertices; `simplices` must only use kept vertices.
    fn restrict<I: IntoIterator<Item = Vec<usize>>>(&self, keep: &[bool], simplices: I) -> SimplicialComplex {
        let mut new_index = vec![usize::MAX; keep.len()];
        let mut labels = Vec::new();
        for (v, &k) in keep.iter().enumerate() {
            if k {
                new_index[v] = labels.len();
                labels.push(self.labels[v].clone());
            }
        }
        let mut c = SimplicialComplex { labels, levels: Vec::new() };
        for s in simplices {
            if s.is_empty() {
                continue;
            }
            let k = s.len() - 1;
            while c.levels.len() <= k {
                c.levels.push(BTreeSet::new());
            }
            c.levels[k].insert(s.iter().map(|&v| new_index[v]).collect());
        }
        c
    }

    /// Whether the complex equals the clique complex of its 1-skeleton.
    pub fn is_flag(&self) -> bool {
        let skeleton = self.one_skeleton();
        // closure under faces plus: every clique is a simplex. It suffices to
        // check that no maximal clique is missing.
        maximal_cliques(&skeleton).iter().all(|c| self.contains(c))
    }
}

impl Simplex {
    fn is_face_of_slice(small: &[usize], big: &[usize]) -> bool {
        let mut it = big.iter();
        small.iter().all(|v| it.by_ref().any(|w| w == v))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<Vec<String>> = self.facets().into_iter().map(|s| self.name_vertices(s)).collect();
        f.debug_struct("SimplicialComplex").field("vertices", &self.labels).field("facets", &facets).finish()
    }
}

/// Maximal cliques by Bron–Kerbosch with Tomita pivoting, each sorted, in
/// lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    fn expand(g: &Graph, r: &mut Vec<usize>, p: Vec<usize>, mut x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() {
            if x.is_empty() {
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| g.has_edge(u, v)).count())
            .expect("p is nonempty");
        let candidates: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
        let mut p = p;
        for v in candidates {
            let np = p.iter().copied().filter(|&u| g.has_edge(u, v)).collect();
            let nx = x.iter().copied().filter(|&u| g.has_edge(u, v)).collect();
            r.push(v);
            expand(g, r, np, nx, out);
            r.pop();
            p.retain(|&u| u != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    if g.order() > 0 {
        expand(g, &mut Vec::new(), (0..g.order()).collect(), Vec::new(), &mut out);
    }
    out.sort();
    out
}

/// The flag complex of `g`: every clique spans a simplex.
pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    clique_complex_capped(g, None).expect("no cap")
}

/// As [`clique_complex`], failing if some clique has dimension above `cap`.
pub fn clique_complex_capped(g: &Graph, cap: Option<usize>) -> Result<SimplicialComplex> {
    let cliques = maximal_cliques(g);
    if let Some(cap) = cap {
        if let Some(big) = cliques.iter().map(|c| c.len() - 1).max().filter(|&d| d > cap) {
            return Err(Error::DimensionCapExceeded { cap, found: big });
        }
    }
    SimplicialComplex::from_simplices(g.labels().to_vec(), cliques)
}
