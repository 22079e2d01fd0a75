//! Decks, hypomorphism, reconstructibility certificates and vertex recovery.
//!
//! Recovery works from a single card: when the flag complex of `G` is a
//! homology `n`-manifold, the flag complex of `G - v` is a relative homology
//! manifold whose homological boundary is exactly the link of `v`. Adding a
//! vertex adjacent to that boundary rebuilds `G` up to isomorphism.

use std::collections::{BTreeMap, HashMap};

use crate::complex::clique_complex;
use crate::coxeter::{Decomposition, NerveSystem, PdVerdict};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, CanonicalForm, Graph};
use crate::manifold::{boundary_of, is_homology_manifold, ManifoldVerdict};

pub const NO_CERTIFICATE_CAVEAT: &str = "no certificate was found; this does not assert that the graph is \
     non-reconstructible, only that neither the homology-manifold nor the virtual Poincaré duality criterion applies";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deck {
    /// Card isomorphism classes with multiplicity.
    pub cards: BTreeMap<CanonicalForm, usize>,
    /// Card obtained by deleting each vertex, in vertex order.
    pub matching: Vec<(String, CanonicalForm)>,
}

impl Deck {
    pub fn len(&self) -> usize {
        self.cards.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cards.is_empty()
    }

    /// Multiset key comparable across graphs.
    pub fn key(&self) -> Vec<(CanonicalForm, usize)> {
        self.cards.iter().map(|(c, &m)| (c.clone(), m)).collect()
    }
}

pub fn deck(g: &Graph) -> Result<Deck> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut cards = BTreeMap::new();
    let mut matching = Vec::with_capacity(g.order());
    for v in 0..g.order() {
        let card = canonical_form(&g.vertex_deleted(v)?);
        *cards.entry(card.clone()).or_insert(0) += 1;
        matching.push((g.label(v).to_string(), card));
    }
    Ok(Deck { cards, matching })
}

/// A bijection `f` (as index pairs `(s, f(s))`, sorted by `s`) with
/// `g1 - s ≅ g2 - f(s)` for every `s`, if one exists.
pub fn are_hypomorphic(g1: &Graph, g2: &Graph) -> Option<Vec<(usize, usize)>> {
    if g1.order() != g2.order() {
        return None;
    }
    if g1.order() == 0 {
        return Some(Vec::new());
    }
    let (d1, d2) = (deck(g1).ok()?, deck(g2).ok()?);
    if d1.cards != d2.cards {
        return None;
    }
    let sorted = |d: &Deck| {
        let mut v: Vec<(CanonicalForm, usize)> =
            d.matching.iter().enumerate().map(|(i, (_, c))| (c.clone(), i)).collect();
        v.sort();
        v
    };
    let mut f: Vec<(usize, usize)> = sorted(&d1).into_iter().zip(sorted(&d2)).map(|((_, a), (_, b))| (a, b)).collect();
    f.sort_unstable();
    Some(f)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The flag complex is a homology `dimension`-manifold.
    HomologyManifold {
        dimension: usize,
    },
    /// The right-angled Coxeter group is a virtual Poincaré duality group.
    VirtualPoincareDuality {
        dimension: usize,
        decomposition: Decomposition,
    },
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    /// Manifold check of the flag complex in its own dimension.
    pub manifold: ManifoldVerdict,
    pub virtual_pd: PdVerdict,
    /// Present exactly when the verdict is `None`.
    pub caveat: Option<&'static str>,
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        self.verdict != Verdict::None
    }
}

pub fn certify_reconstructible(g: &Graph) -> Result<Certificate> {
    if g.order() < 3 {
        return Err(Error::TooFewVertices { required: 3, found: g.order() });
    }
    certify_system(&NerveSystem::new(g.clone()))
}

/// Both criteria are always evaluated; the manifold criterion takes precedence.
pub fn certify_system(ns: &NerveSystem) -> Result<Certificate> {
    let found = ns.graph().order();
    if found < 3 {
        return Err(Error::TooFewVertices { required: 3, found });
    }
    let l = ns.complex();
    let n = l.dim().max(0) as usize;
    let manifold = is_homology_manifold(l, n)?;
    let virtual_pd = ns.is_virtual_pd();
    let verdict = if n >= 1 && manifold.is_manifold {
        Verdict::HomologyManifold { dimension: n }
    } else if let Some(dimension) = virtual_pd.dimension.filter(|&d| virtual_pd.is_vpd && d >= 1) {
        Verdict::VirtualPoincareDuality { dimension, decomposition: virtual_pd.decomposition.clone() }
    } else {
        Verdict::None
    };
    let caveat = (verdict == Verdict::None).then_some(NO_CERTIFICATE_CAVEAT);
    Ok(Certificate { verdict, manifold, virtual_pd, caveat })
}

/// Rebuild a graph from one vertex-deleted card: the deleted vertex is
/// adjacent exactly to the homological boundary of the card's flag complex.
pub fn reconstruct_from_card(card: &Graph, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidDimension(n));
    }
    let boundary = boundary_of(&clique_complex(card), n)?;
    let mut label = card.order().to_string();
    while card.index_of(&label).is_ok() {
        label.push('\'');
    }
    let mut g = card.disjoint_union(&Graph::new([label])?)?;
    let fresh = card.order();
    for v in boundary {
        g.add_edge(v, fresh)?;
    }
    Ok(g)
}

pub const MAX_ENUMERATION_ORDER: usize = 7;

/// One canonical representative per isomorphism class on `n` vertices,
/// sorted by canonical form. Built by attaching a new vertex to every subset
/// of every class on `n - 1` vertices.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Error::EnumerationRange(n));
    }
    let mut classes = vec![Graph::with_order(1)];
    for order in 2..=n {
        let mut next: BTreeMap<CanonicalForm, ()> = BTreeMap::new();
        for base in &classes {
            let m = order - 1;
            for mask in 0u32..(1 << m) {
                let mut g = base.disjoint_union(&Graph::new([m.to_string()])?)?;
                for v in (0..m).filter(|v| mask >> v & 1 == 1) {
                    g.add_edge(v, m)?;
                }
                next.insert(canonical_form(&g), ());
            }
        }
        classes = next.into_keys().map(|c| c.to_graph()).collect();
    }
    Ok(classes)
}

/// Groups (as indices into `graphs`) of at least two graphs sharing a deck.
/// Inputs are assumed pairwise non-isomorphic, so every group is a
/// counterexample to reconstructibility.
pub fn brute_force_oracle(graphs: &[Graph]) -> Vec<Vec<usize>> {
    type Key = (usize, Vec<(CanonicalForm, usize)>);
    let mut groups: HashMap<Key, Vec<usize>> = HashMap::new();
    for (i, g) in graphs.iter().enumerate() {
        let key = deck(g).map(|d| d.key()).unwrap_or_default();
        groups.entry((g.order(), key)).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().filter(|g| g.len() >= 2).collect();
    out.sort();
    out
}
