mod common;

use common::{cone, family, random_graph, rng};
use flagrecon::complex::clique_complex;
use flagrecon::coxeter::{CohomologyAtInfinity, NerveSystem};
use flagrecon::graph::{Family, Graph};
use flagrecon::homology::AbelianGroup;
use flagrecon::manifold::{detect_dimension, is_generalized_homology_sphere};
use flagrecon::Error;
use rand::Rng;

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|v| mask >> v & 1 == 1).collect())
}

/// Some nonempty proper vertex subset is completely joined to its complement.
fn brute_force_is_join(g: &Graph) -> bool {
    let n = g.order();
    subsets(n).filter(|a| !a.is_empty() && a.len() < n).any(|a| {
        let b: Vec<usize> = (0..n).filter(|v| !a.contains(v)).collect();
        a.iter().all(|&x| b.iter().all(|&y| g.has_edge(x, y)))
    })
}

fn sample_graphs() -> Vec<Graph> {
    let mut r = rng(77);
    let mut out = Vec::new();
    for _ in 0..300 {
        let n = r.gen_range(1..=8);
        let p = r.gen_range(0.1..0.95);
        out.push(random_graph(&mut r, n, p));
    }
    out
}

#[test]
fn reducibility_is_join_splitting() {
    for g in sample_graphs() {
        let ns = NerveSystem::new(g.clone());
        assert_eq!(!ns.is_irreducible().unwrap(), brute_force_is_join(&g), "{g:?}");
    }
    assert!(!NerveSystem::new(family(Family::CrossPolytope(3))).is_irreducible().unwrap());
    assert!(NerveSystem::new(family(Family::Cycle(5))).is_irreducible().unwrap());
}

#[test]
fn spherical_subsets_are_simplices() {
    for g in sample_graphs().into_iter().take(60) {
        let ns = NerveSystem::new(g.clone());
        for t in subsets(g.order()).filter(|t| !t.is_empty() && t.len() <= 4) {
            assert_eq!(ns.is_spherical(&t).unwrap(), ns.complex().contains(&t));
        }
        assert_eq!(ns.spherical_subsets().len(), ns.complex().all_simplices().count());
    }
}

/// Among all cliques, only the peeled set of universal vertices splits off a
/// generalized homology sphere.
#[test]
fn peeling_is_sound() {
    let mut graphs = vec![
        cone(&family(Family::Cycle(5))),
        family(Family::Cycle(6)).join(&family(Family::Complete(2)).relabeled(|l| format!("k{l}")).unwrap()).unwrap(),
        family(Family::CrossPolytope(2)).join(&Graph::new(["x"]).unwrap()).unwrap(),
        family(Family::Complete(4)),
    ];
    graphs.extend(sample_graphs().into_iter().filter(|g| g.order() <= 7));
    let mut exercised = 0;
    for g in graphs {
        let ns = NerveSystem::new(g.clone());
        let pd = ns.is_virtual_pd();
        if !pd.is_vpd || pd.decomposition.t1.is_empty() {
            continue;
        }
        exercised += 1;
        let l = ns.complex();
        for t1 in subsets(g.order()).filter(|t| g.is_clique(t)) {
            let t0: Vec<usize> = (0..g.order()).filter(|v| !t1.contains(v)).collect();
            let splits = t1.iter().all(|&a| t0.iter().all(|&b| g.has_edge(a, b)));
            let factor = l.full_subcomplex(&t0).unwrap();
            let valid = splits && is_generalized_homology_sphere(&factor, detect_dimension(&factor)).unwrap().is_sphere;
            assert_eq!(valid, t1 == pd.decomposition.t1, "{g:?} at {t1:?}");
        }
    }
    assert!(exercised >= 4, "only {exercised} graphs exercised peeling");
}

#[test]
fn cohomology_at_infinity() {
    let c5 = NerveSystem::new(family(Family::Cycle(5)));
    assert_eq!(c5.coxeter_cohomology_if_fg(2).unwrap(), CohomologyAtInfinity::FinitelyGenerated(AbelianGroup::free(1)));
    assert_eq!(
        c5.coxeter_cohomology_if_fg(1).unwrap(),
        CohomologyAtInfinity::FinitelyGenerated(AbelianGroup::trivial())
    );
    let torus = NerveSystem::new(family(Family::TorusGrid(5, 5)));
    match torus.coxeter_cohomology_if_fg(2).unwrap() {
        CohomologyAtInfinity::NotFinitelyGenerated(w) => {
            assert_eq!(w.degree, 1);
            assert_eq!(w.group, AbelianGroup::free(2));
        }
        other => panic!("expected failure, got {other:?}"),
    }
    let oct = NerveSystem::new(family(Family::CrossPolytope(3)));
    assert_eq!(oct.coxeter_cohomology_if_fg(3), Err(Error::Reducible));
}

#[test]
fn vanishing_examples() {
    let c5 = NerveSystem::new(family(Family::Cycle(5))).vanishing_condition();
    assert!(c5.holds);
    assert_eq!(c5.checked, 10);
    let torus = NerveSystem::new(family(Family::TorusGrid(5, 5))).vanishing_condition();
    assert!(!torus.holds);
    let w = torus.witness.unwrap();
    assert_eq!((w.degree, w.group), (1, AbelianGroup::free(2)));
}

#[test]
fn cross_check_hypotheses() {
    assert_eq!(NerveSystem::new(family(Family::Complete(3))).equivalence_crosscheck(), Err(Error::Reducible));
    assert_eq!(NerveSystem::new(family(Family::Complete(1))).equivalence_crosscheck(), Err(Error::FiniteGroup));
    assert_eq!(NerveSystem::new(family(Family::CrossPolytope(2))).equivalence_crosscheck(), Err(Error::Reducible));
    for n in 5..=9 {
        let c = NerveSystem::new(family(Family::Cycle(n))).equivalence_crosscheck().unwrap();
        assert!(c.virtual_pd && c.sphere && c.vanishing, "C_{n}");
    }
    let ico = NerveSystem::new(family(Family::Icosahedron)).equivalence_crosscheck().unwrap();
    assert!(ico.virtual_pd && ico.sphere && ico.vanishing);
    let torus = NerveSystem::new(family(Family::TorusGrid(4, 4))).equivalence_crosscheck().unwrap();
    assert!(!torus.virtual_pd && !torus.sphere && !torus.vanishing);
}

#[test]
fn complete_graphs_are_degenerate_dimension_zero() {
    for n in 1..=5 {
        let pd = NerveSystem::new(family(Family::Complete(n))).is_virtual_pd();
        assert!(pd.is_vpd && pd.degenerate);
        assert_eq!(pd.dimension, Some(0));
        assert!(pd.decomposition.t0.is_empty());
    }
}

#[test]
fn vpd_dimension_counts_universal_vertices_away() {
    // cone on C_5: T_0 is the pentagon, so dimension is 1 + 1
    let pd = NerveSystem::new(cone(&family(Family::Cycle(5)))).is_virtual_pd();
    assert!(pd.is_vpd);
    assert_eq!(pd.dimension, Some(2));
    assert_eq!(pd.decomposition.t1, vec![5]);
    // K_{2,2,2}: no universal vertex, the whole octahedron is a 2-sphere
    let pd = NerveSystem::new(family(Family::CrossPolytope(3))).is_virtual_pd();
    assert_eq!(pd.dimension, Some(3));
    assert!(clique_complex(&family(Family::CrossPolytope(3))).dim() == 2);
}
