//! Reduced simplicial homology and cohomology over the integers.
//!
//! The augmented chain complex is used throughout: `C_{-1} = Z`, with the
//! augmentation `C_0 -> Z` sending every vertex to 1. The empty complex is
//! therefore the (-1)-sphere, with `H̃_{-1} = Z` and nothing else.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::Result;
use crate::matrix::{smith_normal_form, IntegerMatrix, SmithForm};

/// Finitely generated abelian group `Z^rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_m` with
/// `d_1 | d_2 | ... | d_m` and every `d_i >= 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { rank, torsion: Vec::new() }
    }

    /// `torsion` must already be an invariant-factor chain; entries equal to
    /// one are dropped.
    pub fn new(rank: usize, torsion: Vec<BigInt>) -> Self {
        let torsion: Vec<BigInt> = torsion.into_iter().filter(|d| !d.is_one()).collect();
        debug_assert!(torsion.windows(2).all(|w| (&w[1] % &w[0]) == BigInt::from(0)));
        AbelianGroup { rank, torsion }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Whether the group is infinite cyclic.
    pub fn is_integers(&self) -> bool {
        self.rank == 1 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Serialize for AbelianGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Factor {
            Small(u64),
            Big(String),
        }
        let torsion: Vec<Factor> =
            self.torsion.iter().map(|d| d.to_u64().map_or_else(|| Factor::Big(d.to_string()), Factor::Small)).collect();
        let mut st = s.serialize_struct("AbelianGroup", 2)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("torsion", &torsion)?;
        st.end()
    }
}

/// Groups indexed by degree. Degrees that were not computed are trivial;
/// equality ignores trivial entries.
#[derive(Clone, Debug, Default)]
pub struct GradedGroups {
    degrees: BTreeMap<isize, AbelianGroup>,
}

impl GradedGroups {
    pub fn from_degrees<I: IntoIterator<Item = (isize, AbelianGroup)>>(it: I) -> Self {
        GradedGroups { degrees: it.into_iter().collect() }
    }

    /// Reduced homology of the `m`-sphere (`m = -1` is the empty complex).
    pub fn sphere(m: isize) -> Self {
        GradedGroups::from_degrees([(m, AbelianGroup::free(1))])
    }

    pub fn get(&self, degree: isize) -> AbelianGroup {
        self.degrees.get(&degree).cloned().unwrap_or_default()
    }

    /// Every computed degree, trivial ones included.
    pub fn iter(&self) -> impl Iterator<Item = (isize, &AbelianGroup)> + '_ {
        self.degrees.iter().map(|(&d, g)| (d, g))
    }

    pub fn nontrivial(&self) -> impl Iterator<Item = (isize, &AbelianGroup)> + '_ {
        self.iter().filter(|(_, g)| !g.is_trivial())
    }

    pub fn is_trivial(&self) -> bool {
        self.nontrivial().next().is_none()
    }

    /// Whether these are the reduced groups of the `m`-sphere.
    pub fn is_sphere(&self, m: isize) -> bool {
        let mut it = self.nontrivial();
        matches!(it.next(), Some((d, g)) if d == m && g.is_integers()) && it.next().is_none()
    }

    /// Degree `d` of the result is degree `d - shift` of `self`.
    pub fn shifted(&self, shift: isize) -> Self {
        GradedGroups::from_degrees(self.degrees.iter().map(|(&d, g)| (d + shift, g.clone())))
    }
}

impl PartialEq for GradedGroups {
    fn eq(&self, other: &Self) -> bool {
        self.nontrivial().eq(other.nontrivial())
    }
}

impl Eq for GradedGroups {}

impl fmt::Display for GradedGroups {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nontrivial().map(|(d, g)| format!("[{d}]: {g}")).collect();
        if parts.is_empty() {
            write!(f, "all trivial")
        } else {
            write!(f, "{}", parts.join(", "))
        }
    }
}

/// Rank of the augmented chain group in degree `k`.
fn chain_rank(l: &SimplicialComplex, k: isize) -> usize {
    match k {
        -1 => 1,
        k if k < -1 => 0,
        k => l.count(k),
    }
}

/// Matrix of `∂_k : C_k -> C_{k-1}` over the lexicographic simplex bases.
/// With `reduced`, `∂_0` is the augmentation (a single row of ones);
/// otherwise `∂_0` has no rows.
pub fn boundary_matrix(l: &SimplicialComplex, k: isize, reduced: bool) -> IntegerMatrix {
    let rank = |d: isize| if reduced { chain_rank(l, d) } else { l.count(d) };
    let (rows, cols) = (rank(k - 1), rank(k));
    let mut m = IntegerMatrix::zeros(rows, cols);
    if rows == 0 || cols == 0 {
        return m;
    }
    if k == 0 {
        for j in 0..cols {
            m[(0, j)] = BigInt::one();
        }
        return m;
    }
    let face_index: HashMap<&[usize], usize> = l.simplices(k - 1).enumerate().map(|(i, s)| (s, i)).collect();
    let mut face = Vec::with_capacity(k as usize);
    for (j, s) in l.simplices(k).enumerate() {
        for i in 0..s.len() {
            face.clear();
            face.extend(s.iter().enumerate().filter(|&(p, _)| p != i).map(|(_, &v)| v));
            let row = face_index[face.as_slice()];
            m[(row, j)] = BigInt::from(if i % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// SNF of `∂_k` for `k = 0..=dim+1` (augmented). Index `k` holds `∂_k`.
fn boundary_snfs(l: &SimplicialComplex, transpose: bool) -> Vec<SmithForm> {
    (0..=l.dim() + 1)
        .map(|k| {
            let m = boundary_matrix(l, k, true);
            smith_normal_form(&if transpose { m.transpose() } else { m })
        })
        .collect()
}

/// `H̃_k` for `k = -1..=dim`.
pub fn reduced_homology(l: &SimplicialComplex) -> GradedGroups {
    let snfs = boundary_snfs(l, false);
    let rank_of = |k: isize| if k < 0 { 0 } else { snfs[k as usize].rank };
    GradedGroups::from_degrees((-1..=l.dim()).map(|k| {
        let free = chain_rank(l, k) - rank_of(k) - rank_of(k + 1);
        (k, AbelianGroup::new(free, snfs[(k + 1) as usize].torsion()))
    }))
}

/// `H̃^k` for `k = -1..=dim`, computed directly from the coboundary
/// `δ^k = ∂_{k+1}^T`: free part from ranks, torsion from the invariant
/// factors of `δ^{k-1}`.
pub fn reduced_cohomology(l: &SimplicialComplex) -> GradedGroups {
    let snfs = boundary_snfs(l, true);
    let rank_of = |k: isize| if k < 0 { 0 } else { snfs[k as usize].rank };
    GradedGroups::from_degrees((-1..=l.dim()).map(|k| {
        let free = chain_rank(l, k) - rank_of(k + 1) - rank_of(k);
        let torsion = if k < 0 { Vec::new() } else { snfs[k as usize].torsion() };
        (k, AbelianGroup::new(free, torsion))
    }))
}

/// Cohomology from homology by universal coefficients: free part of `H̃^k`
/// is that of `H̃_k`, torsion is that of `H̃_{k-1}`.
pub fn cohomology_from_homology(h: &GradedGroups) -> GradedGroups {
    let degrees: Vec<isize> = h.iter().map(|(d, _)| d).collect();
    GradedGroups::from_degrees(
        degrees.iter().map(|&k| (k, AbelianGroup::new(h.get(k).rank(), h.get(k - 1).torsion().to_vec()))),
    )
}

/// `H_i(|L|, |L| - σ̂)`, identified with `H̃_{i - dim σ - 1}(Lk σ)`.
pub fn local_homology(l: &SimplicialComplex, sigma: &Simplex) -> Result<GradedGroups> {
    let link = l.link(sigma)?;
    Ok(reduced_homology(&link).shifted(sigma.dim() + 1))
}
