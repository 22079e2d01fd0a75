mod common;

use common::{cone, family, label_set, manifold_corpus};
use flagrecon::complex::{clique_complex, Simplex};
use flagrecon::graph::{canonical_form, Family, Graph};
use flagrecon::manifold::{
    boundary_of, detect_dimension, is_generalized_homology_sphere, is_homology_manifold, is_pure, WitnessKind,
};
use flagrecon::Error;

#[test]
fn corpus_is_closed_manifolds() {
    for (name, g, n) in manifold_corpus() {
        let l = clique_complex(&g);
        assert_eq!(detect_dimension(&l), n as isize, "{name}");
        let v = is_homology_manifold(&l, n).unwrap();
        assert!(v.is_manifold, "{name}: {:?}", v.witnesses);
        assert_eq!(v.verified, l.f_vector(), "{name}: every simplex verified");
        assert_eq!(boundary_of(&l, n).unwrap(), Vec::<usize>::new(), "{name}");
        let sphere = is_generalized_homology_sphere(&l, n as isize).unwrap();
        assert_eq!(sphere.is_sphere, !name.starts_with("torus"), "{name}");
        if sphere.is_sphere {
            assert!(sphere.manifold.unwrap().is_manifold);
        }
    }
}

#[test]
fn deleting_a_vertex_exposes_its_link_as_boundary() {
    for (name, g, n) in manifold_corpus() {
        let l = clique_complex(&g);
        for v in 0..g.order() {
            let rest: Vec<usize> = (0..g.order()).filter(|&w| w != v).collect();
            let card = l.full_subcomplex(&rest).unwrap();
            let boundary = boundary_of(&card, n).unwrap_or_else(|e| panic!("{name} minus {v}: {e}"));
            assert_eq!(
                label_set(card.name_vertices(&boundary)),
                label_set(g.neighbors(v).map(|w| g.label(w))),
                "{name} minus {v}"
            );
        }
    }
}

#[test]
fn vertex_transitive_families_have_one_link_class() {
    for (name, g, _) in manifold_corpus() {
        let l = clique_complex(&g);
        let classes: std::collections::BTreeSet<_> =
            (0..g.order()).map(|v| canonical_form(&l.link(&Simplex::new(vec![v])).unwrap().one_skeleton())).collect();
        assert_eq!(classes.len(), 1, "{name}");
    }
    // expected link shapes
    let link_of_first = |g: Graph| clique_complex(&g).link(&Simplex::new(vec![0])).unwrap().one_skeleton();
    assert_eq!(
        canonical_form(&link_of_first(family(Family::TorusGrid(5, 5)))),
        canonical_form(&family(Family::Cycle(6)))
    );
    assert_eq!(canonical_form(&link_of_first(family(Family::Icosahedron))), canonical_form(&family(Family::Cycle(5))));
    assert_eq!(
        canonical_form(&link_of_first(family(Family::CrossPolytope(4)))),
        canonical_form(&family(Family::CrossPolytope(3)))
    );
}

#[test]
fn non_manifolds_report_witnesses() {
    // K_4: a solid tetrahedron; every vertex link is a 2-simplex
    let k4 = clique_complex(&family(Family::Complete(4)));
    let v = is_homology_manifold(&k4, 3).unwrap();
    assert!(!v.is_manifold);
    assert_eq!(v.witnesses.len(), 4);
    assert!(v.witnesses.iter().all(|w| w.simplex.len() == 1 && w.local_homology.is_trivial()));

    // P_4 is a 1-manifold with boundary: endpoints fail
    let p4 = clique_complex(&family(Family::Path(4)));
    let v = is_homology_manifold(&p4, 1).unwrap();
    assert_eq!(label_set(v.witnesses.iter().flat_map(|w| w.labels.clone())), label_set(["0", "3"]));
    assert_eq!(label_set(p4.name_vertices(&boundary_of(&p4, 1).unwrap())), label_set(["0", "3"]));

    // cone on C_4: rim vertices have path links
    let wheel = clique_complex(&cone(&family(Family::Cycle(4))));
    let v = is_homology_manifold(&wheel, 2).unwrap();
    assert_eq!(label_set(v.witnesses.iter().flat_map(|w| w.labels.clone())), label_set(["0", "1", "2", "3"]));
    assert!(v.witnesses.iter().all(|w| w.kind == WitnessKind::LocalHomology));
    assert_eq!(label_set(wheel.name_vertices(&boundary_of(&wheel, 2).unwrap())), label_set(["0", "1", "2", "3"]));
}

#[test]
fn purity() {
    let p4_plus = family(Family::Path(4)).disjoint_union(&Graph::new(["x"]).unwrap()).unwrap();
    let l = clique_complex(&p4_plus);
    assert!(!is_pure(&l, 1).unwrap());
    let v = is_homology_manifold(&l, 1).unwrap();
    assert_eq!(v.witnesses.len(), 1);
    assert_eq!(v.witnesses[0].kind, WitnessKind::NotPure);
    assert_eq!(v.witnesses[0].labels, vec!["x".to_string()]);
    assert!(matches!(boundary_of(&l, 1), Err(Error::NotPure(1))));
    assert!(is_pure(&clique_complex(&family(Family::Cycle(4))), 1).unwrap());
}

#[test]
fn boundary_requires_the_two_patterns() {
    // bowtie: two triangles sharing a vertex; the shared vertex has a
    // disconnected link, neither interior nor boundary
    let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
    assert!(matches!(boundary_of(&clique_complex(&bowtie), 2), Err(Error::NotRelativeManifold { .. })));
}

#[test]
fn disconnected_manifolds_are_manifolds_but_not_spheres() {
    let two_cycles = family(Family::Cycle(4))
        .disjoint_union(&family(Family::Cycle(5)).relabeled(|l| format!("b{l}")).unwrap())
        .unwrap();
    let l = clique_complex(&two_cycles);
    assert!(is_homology_manifold(&l, 1).unwrap().is_manifold);
    assert!(!is_generalized_homology_sphere(&l, 1).unwrap().is_sphere);
}
