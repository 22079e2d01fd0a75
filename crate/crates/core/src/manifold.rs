//! Homology manifolds, generalized homology spheres and homological boundary.
//!
//! A complex is a homology `n`-manifold when every simplex `σ` has the local
//! homology of a point of `R^n`, i.e. `Lk σ` has the reduced homology of the
//! `(n - dim σ - 1)`-sphere. The check runs over every simplex, not only
//! vertices.

use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{local_homology, reduced_homology, GradedGroups};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    /// A maximal simplex whose dimension differs from the target.
    NotPure,
    /// Local homology differs from that of `R^n`.
    LocalHomology,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub simplex: Vec<usize>,
    pub labels: Vec<String>,
    pub kind: WitnessKind,
    pub local_homology: GradedGroups,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldVerdict {
    pub is_manifold: bool,
    pub dimension: usize,
    /// On success, the number of simplices checked in each dimension.
    pub verified: Vec<usize>,
    /// On failure, every offending simplex of the lowest failing dimension.
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereVerdict {
    pub is_sphere: bool,
    pub dimension: isize,
    /// `None` only for the empty complex in dimension -1.
    pub manifold: Option<ManifoldVerdict>,
    pub homology: GradedGroups,
}

/// Largest simplex dimension; `-1` for the empty complex.
pub fn detect_dimension(l: &SimplicialComplex) -> isize {
    l.dim()
}

/// Whether every maximal simplex has dimension exactly `n`.
pub fn is_pure(l: &SimplicialComplex, n: usize) -> Result<bool> {
    if l.is_empty() {
        return Err(Error::EmptyComplex);
    }
    Ok(l.facets().iter().all(|f| f.len() == n + 1))
}

fn witness(l: &SimplicialComplex, s: &[usize], kind: WitnessKind) -> Witness {
    let sigma = Simplex::new(s.to_vec());
    Witness {
        simplex: s.to_vec(),
        labels: l.name_vertices(s),
        kind,
        local_homology: local_homology(l, &sigma).expect("simplex of l"),
    }
}

pub fn is_homology_manifold(l: &SimplicialComplex, n: usize) -> Result<ManifoldVerdict> {
    if l.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let failed = |witnesses| ManifoldVerdict { is_manifold: false, dimension: n, verified: Vec::new(), witnesses };

    let impure: Vec<Witness> =
        l.facets().into_iter().filter(|f| f.len() != n + 1).map(|f| witness(l, f, WitnessKind::NotPure)).collect();
    if !impure.is_empty() {
        return Ok(failed(impure));
    }

    let target = GradedGroups::sphere(n as isize);
    let mut verified = Vec::with_capacity(n + 1);
    for k in 0..=n as isize {
        let mut bad = Vec::new();
        let mut count = 0;
        for s in l.simplices(k) {
            let local = local_homology(l, &Simplex::new(s.to_vec()))?;
            if local != target {
                bad.push(Witness {
                    simplex: s.to_vec(),
                    labels: l.name_vertices(s),
                    kind: WitnessKind::LocalHomology,
                    local_homology: local,
                });
            }
            count += 1;
        }
        if !bad.is_empty() {
            return Ok(failed(bad));
        }
        verified.push(count);
    }
    Ok(ManifoldVerdict { is_manifold: true, dimension: n, verified, witnesses: Vec::new() })
}

/// A homology `n`-manifold with the reduced homology of `S^n`. The empty
/// complex counts as the (-1)-sphere.
pub fn is_generalized_homology_sphere(l: &SimplicialComplex, n: isize) -> Result<SphereVerdict> {
    let homology = reduced_homology(l);
    if l.is_empty() {
        if n == -1 {
            return Ok(SphereVerdict { is_sphere: true, dimension: -1, manifold: None, homology });
        }
        return Err(Error::EmptyComplex);
    }
    if n < 0 {
        return Ok(SphereVerdict { is_sphere: false, dimension: n, manifold: None, homology });
    }
    let manifold = is_homology_manifold(l, n as usize)?;
    let is_sphere = manifold.is_manifold && homology.is_sphere(n);
    Ok(SphereVerdict { is_sphere, dimension: n, manifold: Some(manifold), homology })
}

/// Vertices where `l` looks like the boundary of a homology `n`-manifold:
/// local homology all trivial, as opposed to the interior pattern (`Z` in
/// degree `n` only). Any other pattern is an error.
pub fn boundary_of(l: &SimplicialComplex, n: usize) -> Result<Vec<usize>> {
    if l.is_empty() || !is_pure(l, n)? {
        return Err(Error::NotPure(n as isize));
    }
    let mut boundary = Vec::new();
    for v in 0..l.num_vertices() {
        let local = local_homology(l, &Simplex::new(vec![v]))?;
        if local.is_trivial() {
            boundary.push(v);
        } else if !local.is_sphere(n as isize) {
            return Err(Error::NotRelativeManifold { vertex: l.labels()[v].clone(), local: local.to_string() });
        }
    }
    Ok(boundary)
}
