//! Right-angled Coxeter systems seen through their nerves.
//!
//! A graph determines the right-angled Coxeter system whose nerve is its flag
//! complex. The group itself is never built; every group-level predicate is
//! evaluated through an equivalent condition on the nerve:
//!
//! * `W_T` is finite iff `T` is a clique (a spherical subset).
//! * `(W, S)` is irreducible iff the graph is not a nontrivial join, i.e. its
//!   complement is connected.
//! * `W` is a virtual Poincaré duality group of dimension `n` iff, after
//!   splitting off the spherical factor spanned by the universal vertices,
//!   the remaining nerve is a generalized homology `(n-1)`-sphere.
//! * For irreducible `(W, S)`, `H^i(W; ZW)` is finitely generated iff
//!   `H̃^{i-1}(L_{S-T}) = 0` for every nonempty spherical `T`, and then it is
//!   `H̃^{i-1}(L)`.

use crate::complex::{clique_complex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::{reduced_cohomology, AbelianGroup};
use crate::manifold::{detect_dimension, is_generalized_homology_sphere, SphereVerdict};

#[derive(Clone, Debug)]
pub struct NerveSystem {
    graph: Graph,
    complex: SimplicialComplex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Vertices outside the spherical factor.
    pub t0: Vec<usize>,
    /// Universal vertices: the maximal spherical direct factor.
    pub t1: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdVerdict {
    pub is_vpd: bool,
    pub dimension: Option<usize>,
    pub decomposition: Decomposition,
    /// Sphere check of `L_{T0}` in its own dimension.
    pub evidence: SphereVerdict,
    /// Set when `W` is finite (`T0` empty): dimension 0, a case the
    /// reconstruction criteria do not address.
    pub degenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingWitness {
    pub t: Vec<usize>,
    pub degree: isize,
    pub group: AbelianGroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingReport {
    pub holds: bool,
    /// Number of spherical subsets examined before stopping.
    pub checked: usize,
    pub witness: Option<VanishingWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CohomologyAtInfinity {
    FinitelyGenerated(AbelianGroup),
    NotFinitelyGenerated(VanishingWitness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub virtual_pd: bool,
    pub sphere: bool,
    pub vanishing: bool,
}

impl CrossCheck {
    pub fn consistent(&self) -> bool {
        self.virtual_pd == self.sphere && self.sphere == self.vanishing
    }
}

impl NerveSystem {
    pub fn new(graph: Graph) -> Self {
        let complex = clique_complex(&graph);
        NerveSystem { graph, complex }
    }

    /// Uses an already built flag complex of `graph`.
    pub fn from_parts(graph: Graph, complex: SimplicialComplex) -> Self {
        debug_assert_eq!(complex.one_skeleton(), graph);
        NerveSystem { graph, complex }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn is_spherical(&self, t: &[usize]) -> Result<bool> {
        if let Some(&bad) = t.iter().find(|&&v| v >= self.graph.order()) {
            return Err(Error::UnknownVertex(bad.to_string()));
        }
        Ok(self.graph.is_clique(t))
    }

    /// Every nonempty clique, by size then lexicographically.
    pub fn spherical_subsets(&self) -> Vec<Vec<usize>> {
        self.complex.all_simplices().map(<[usize]>::to_vec).collect()
    }

    pub fn is_finite_group(&self) -> Result<bool> {
        if self.graph.order() == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(self.graph.is_complete())
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        if self.graph.order() == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(self.graph.complement().is_connected())
    }

    pub fn join_decomposition(&self) -> Decomposition {
        let n = self.graph.order();
        let (t1, t0) = (0..n).partition(|&v| self.graph.degree(v) + 1 == n);
        Decomposition { t0, t1 }
    }

    pub fn is_virtual_pd(&self) -> PdVerdict {
        let decomposition = self.join_decomposition();
        let factor = self.complex.full_subcomplex(&decomposition.t0).expect("t0 within vertex set");
        let m = detect_dimension(&factor);
        let evidence = is_generalized_homology_sphere(&factor, m).expect("dimension matches complex");
        let degenerate = decomposition.t0.is_empty();
        let is_vpd = evidence.is_sphere;
        PdVerdict { is_vpd, dimension: is_vpd.then(|| (m + 1) as usize), decomposition, evidence, degenerate }
    }

    fn complement_of(&self, t: &[usize]) -> Vec<usize> {
        (0..self.graph.order()).filter(|v| !t.contains(v)).collect()
    }

    /// `H̃^*(L_{S-T})` vanishes in every degree for every nonempty spherical `T`.
    pub fn vanishing_condition(&self) -> VanishingReport {
        let mut checked = 0;
        for t in self.spherical_subsets() {
            checked += 1;
            let rest = self.complex.full_subcomplex(&self.complement_of(&t)).expect("subset of vertices");
            let cohomology = reduced_cohomology(&rest);
            let first = cohomology.nontrivial().next().map(|(d, g)| (d, g.clone()));
            if let Some((degree, group)) = first {
                let witness = VanishingWitness { t, degree, group };
                return VanishingReport { holds: false, checked, witness: Some(witness) };
            }
        }
        VanishingReport { holds: true, checked, witness: None }
    }

    /// `H^i(W; ZW)` when it is finitely generated, read off the nerve.
    /// Requires an irreducible system.
    pub fn coxeter_cohomology_if_fg(&self, i: isize) -> Result<CohomologyAtInfinity> {
        if !self.is_irreducible()? {
            return Err(Error::Reducible);
        }
        for t in self.spherical_subsets() {
            let rest = self.complex.full_subcomplex(&self.complement_of(&t)).expect("subset of vertices");
            let group = reduced_cohomology(&rest).get(i - 1);
            if !group.is_trivial() {
                return Ok(CohomologyAtInfinity::NotFinitelyGenerated(VanishingWitness { t, degree: i - 1, group }));
            }
        }
        Ok(CohomologyAtInfinity::FinitelyGenerated(reduced_cohomology(&self.complex).get(i - 1)))
    }

    /// Evaluate the three equivalent conditions for an irreducible infinite
    /// system independently: virtual Poincaré duality, the nerve being a
    /// generalized homology sphere, and vanishing of `H̃^*(L_{S-T})`.
    pub fn equivalence_crosscheck(&self) -> Result<CrossCheck> {
        if !self.is_irreducible()? {
            return Err(Error::Reducible);
        }
        if self.is_finite_group()? {
            return Err(Error::FiniteGroup);
        }
        let virtual_pd = self.is_virtual_pd().is_vpd;
        let sphere = is_generalized_homology_sphere(&self.complex, self.complex.dim())?.is_sphere;
        let vanishing = self.vanishing_condition().holds;
        Ok(CrossCheck { virtual_pd, sphere, vanishing })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn system(f: Family) -> NerveSystem {
        NerveSystem::new(generate(&f).unwrap())
    }

    fn coned(f: Family, n: usize) -> NerveSystem {
        NerveSystem::new(generate(&f).unwrap().join(&Graph::new([format!("{n}")]).unwrap()).unwrap())
    }

    #[test]
    fn spherical_examples() {
        let c4 = system(Family::Cycle(4));
        assert!(c4.is_spherical(&[0, 1]).unwrap());
        assert!(!c4.is_spherical(&[0, 2]).unwrap());
        assert!(c4.is_spherical(&[]).unwrap());
        assert!(c4.is_spherical(&[7]).is_err());
        assert_eq!(c4.spherical_subsets().len(), 8);
        assert_eq!(system(Family::Complete(3)).spherical_subsets().len(), 7);
        assert_eq!(system(Family::CrossPolytope(3)).spherical_subsets().len(), 26);
    }

    #[test]
    fn finiteness_and_irreducibility() {
        let c5 = system(Family::Cycle(5));
        assert!(!c5.is_finite_group().unwrap() && c5.is_irreducible().unwrap());
        let c4 = system(Family::Cycle(4));
        assert!(!c4.is_finite_group().unwrap() && !c4.is_irreducible().unwrap());
        assert!(system(Family::Complete(4)).is_finite_group().unwrap());
        assert!(system(Family::Complete(1)).is_irreducible().unwrap());
        assert_eq!(NerveSystem::new(Graph::with_order(0)).is_irreducible(), Err(Error::EmptyGraph));
    }

    #[test]
    fn decompositions() {
        let w = coned(Family::Cycle(4), 4);
        assert_eq!(w.join_decomposition(), Decomposition { t0: vec![0, 1, 2, 3], t1: vec![4] });
        assert!(system(Family::Cycle(5)).join_decomposition().t1.is_empty());
        let k4 = system(Family::Complete(4)).join_decomposition();
        assert_eq!((k4.t0.len(), k4.t1.len()), (0, 4));
    }

    #[test]
    fn virtual_pd_examples() {
        let c4 = system(Family::Cycle(4)).is_virtual_pd();
        assert!(c4.is_vpd && c4.dimension == Some(2));
        let cone = coned(Family::Cycle(5), 5).is_virtual_pd();
        assert!(cone.is_vpd && cone.dimension == Some(2));
        assert_eq!(cone.decomposition.t1, vec![5]);
        let torus = system(Family::TorusGrid(5, 5)).is_virtual_pd();
        assert!(!torus.is_vpd && torus.dimension.is_none());
        let k4 = system(Family::Complete(4)).is_virtual_pd();
        assert!(k4.is_vpd && k4.degenerate && k4.dimension == Some(0));
    }

    #[test]
    fn vanishing_examples() {
        let c5 = system(Family::Cycle(5)).vanishing_condition();
        assert!(c5.holds);
        assert_eq!(c5.checked, 10);
        // removing a vertex leaves a path, removing an edge leaves the opposite edge
        let c4 = system(Family::Cycle(4)).vanishing_condition();
        assert!(c4.holds && c4.witness.is_none());
        assert_eq!(c4.checked, 8);
        // two disjoint edges: removing one edge leaves the other, removing a
        // vertex leaves an edge plus a point
        let two_k2 = NerveSystem::new(Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()).vanishing_condition();
        let w = two_k2.witness.unwrap();
        assert_eq!((w.t, w.degree, w.group), (vec![0], 0, AbelianGroup::free(1)));
        let torus = system(Family::TorusGrid(5, 5)).vanishing_condition();
        let w = torus.witness.unwrap();
        assert_eq!((w.t.len(), w.degree, w.group), (1, 1, AbelianGroup::free(2)));
    }

    #[test]
    fn cohomology_at_infinity() {
        let c5 = system(Family::Cycle(5));
        assert_eq!(
            c5.coxeter_cohomology_if_fg(2).unwrap(),
            CohomologyAtInfinity::FinitelyGenerated(AbelianGroup::free(1))
        );
        assert_eq!(
            c5.coxeter_cohomology_if_fg(1).unwrap(),
            CohomologyAtInfinity::FinitelyGenerated(AbelianGroup::trivial())
        );
        let torus = system(Family::TorusGrid(5, 5));
        assert!(matches!(torus.coxeter_cohomology_if_fg(2).unwrap(), CohomologyAtInfinity::NotFinitelyGenerated(_)));
        assert_eq!(system(Family::Cycle(4)).coxeter_cohomology_if_fg(1), Err(Error::Reducible));
    }

    #[test]
    fn crosscheck_examples() {
        for n in [5, 7] {
            let r = system(Family::Cycle(n)).equivalence_crosscheck().unwrap();
            assert!(r.virtual_pd && r.sphere && r.vanishing);
        }
        let r = system(Family::TorusGrid(5, 5)).equivalence_crosscheck().unwrap();
        assert!(!r.virtual_pd && !r.sphere && !r.vanishing && r.consistent());
        assert_eq!(system(Family::Cycle(4)).equivalence_crosscheck(), Err(Error::Reducible));
        assert_eq!(system(Family::Complete(1)).equivalence_crosscheck(), Err(Error::FiniteGroup));
    }
}
