use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Named graph families. Every generator labels vertices `"0".."n-1"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    /// Complete multipartite graph with `k` parts of size two; its flag
    /// complex is the boundary of the `k`-dimensional cross-polytope.
    CrossPolytope(usize),
    /// Triangulated `p x q` torus: `(i, j)` is adjacent to `(i±1, j)`,
    /// `(i, j±1)`, `(i+1, j+1)` and `(i-1, j-1)`, indices taken mod `(p, q)`.
    TorusGrid(usize, usize),
    Icosahedron,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Cycle(_) => "cycle",
            Family::Path(_) => "path",
            Family::Complete(_) => "complete",
            Family::CompleteMultipartite(_) => "complete_multipartite",
            Family::CrossPolytope(_) => "cross_polytope",
            Family::TorusGrid(..) => "torus_grid",
            Family::Icosahedron => "icosahedron",
        }
    }

    /// Parse a family name and its positional integer parameters.
    pub fn parse(name: &str, params: &[String]) -> Result<Family> {
        let bad = |reason: &str| Error::InvalidParameter { family: name.to_string(), reason: reason.to_string() };
        let nums: Vec<usize> = params
            .iter()
            .map(|p| p.parse::<usize>().map_err(|_| bad(&format!("`{p}` is not a nonnegative integer"))))
            .collect::<Result<_>>()?;
        let one = |nums: &[usize]| match nums {
            [a] => Ok(*a),
            _ => Err(bad("expected exactly one parameter")),
        };
        let family = match name {
            "cycle" => Family::Cycle(one(&nums)?),
            "path" => Family::Path(one(&nums)?),
            "complete" => Family::Complete(one(&nums)?),
            "complete_multipartite" => Family::CompleteMultipartite(nums),
            "cross_polytope" => Family::CrossPolytope(one(&nums)?),
            "torus_grid" => match nums[..] {
                [p, q] => Family::TorusGrid(p, q),
                _ => return Err(bad("expected two parameters p q")),
            },
            "icosahedron" if nums.is_empty() => Family::Icosahedron,
            "icosahedron" => return Err(bad("takes no parameters")),
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        Ok(family)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cycle(n) | Family::Path(n) | Family::Complete(n) | Family::CrossPolytope(n) => {
                write!(f, "{}({n})", self.name())
            }
            Family::CompleteMultipartite(parts) => write!(f, "{}({parts:?})", self.name()),
            Family::TorusGrid(p, q) => write!(f, "{}({p},{q})", self.name()),
            Family::Icosahedron => write!(f, "{}()", self.name()),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts `name` or `name:p1,p2,...`.
    fn from_str(s: &str) -> Result<Family> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let params: Vec<String> = rest.split(',').filter(|p| !p.is_empty()).map(str::to_string).collect();
        Family::parse(name, &params)
    }
}

pub fn generate(family: &Family) -> Result<Graph> {
    let bad = |reason: &str| Error::InvalidParameter { family: family.name().to_string(), reason: reason.to_string() };
    match *family {
        Family::Cycle(n) => {
            if n < 3 {
                return Err(bad("cycle needs n >= 3"));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Path(n) => {
            if n < 1 {
                return Err(bad("path needs n >= 1"));
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Complete(n) => Ok(complete_multipartite(&vec![1; n])),
        Family::CompleteMultipartite(ref parts) => {
            if parts.contains(&0) {
                return Err(bad("parts must be nonempty"));
            }
            Ok(complete_multipartite(parts))
        }
        Family::CrossPolytope(k) => {
            if k < 1 {
                return Err(bad("cross_polytope needs k >= 1"));
            }
            Ok(complete_multipartite(&vec![2; k]))
        }
        Family::TorusGrid(p, q) => {
            if p < 4 || q < 4 {
                return Err(bad("torus_grid needs p, q >= 4"));
            }
            let id = |i: usize, j: usize| (i % p) * q + j % q;
            let mut g = Graph::with_order(p * q);
            for i in 0..p {
                for j in 0..q {
                    g.add_edge(id(i, j), id(i + 1, j))?;
                    g.add_edge(id(i, j), id(i, j + 1))?;
                    g.add_edge(id(i, j), id(i + 1, j + 1))?;
                }
            }
            Ok(g)
        }
        Family::Icosahedron => {
            // apex 0, upper ring 1..=5, lower ring 6..=10, apex 11
            let mut edges = Vec::with_capacity(30);
            for k in 0..5 {
                let up = 1 + k;
                let up_next = 1 + (k + 1) % 5;
                let low = 6 + k;
                let low_next = 6 + (k + 1) % 5;
                edges.extend([(0, up), (up, up_next), (11, low), (low, low_next), (up, low), (up_next, low)]);
            }
            Graph::from_edges(12, &edges)
        }
    }
}

fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let mut g = Graph::with_order(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}
