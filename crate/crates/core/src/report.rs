//! JSON analysis report, schema version 1.
//!
//! Field order is fixed by the struct definitions and every collection is
//! emitted in a deterministic order, so two runs on the same input produce
//! byte-identical output unless stage timings are requested.

use std::time::Instant;

use serde::Serialize;

use crate::complex::{clique_complex_capped, SimplicialComplex};
use crate::coxeter::{CrossCheck, NerveSystem};
use crate::error::Result;
use crate::graph::Graph;
use crate::homology::{reduced_homology, AbelianGroup, GradedGroups};
use crate::manifold::{is_generalized_homology_sphere, Witness, WitnessKind};
use crate::reconstruction::{certify_system, Verdict};

pub const SCHEMA_VERSION: u32 = 1;

pub mod criteria {
    pub const MANIFOLD: &str =
        "homology manifold: every simplex link has the reduced homology of a sphere of complementary dimension";
    pub const SPHERE: &str = "generalized homology sphere: homology manifold with the reduced homology of a sphere";
    pub const VIRTUAL_PD: &str =
        "virtual Poincare duality: splitting off the universal vertices leaves a generalized homology sphere nerve";
    pub const VANISHING: &str =
        "vanishing: reduced cohomology of the full subcomplex on S - T is zero for every nonempty spherical T";
    pub const CROSS_CHECK: &str =
        "irreducible infinite system: virtual Poincare duality, sphere nerve and vanishing are equivalent";
    pub const CERT_MANIFOLD: &str =
        "flag complex is a homology n-manifold with n >= 1, hence the graph is reconstructible";
    pub const CERT_VIRTUAL_PD: &str =
        "right-angled Coxeter group is a virtual Poincare duality group, hence the graph is reconstructible";
    pub const CERT_NONE: &str = "no reconstructibility criterion applies";
}

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    pub dimension_cap: Option<usize>,
    pub timings: bool,
}

#[derive(Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub input: InputSummary,
    pub flag_complex: ComplexSummary,
    pub homology: Vec<DegreeEntry>,
    pub manifold: ManifoldSection,
    pub generalized_homology_sphere: SphereSection,
    pub coxeter: CoxeterSection,
    pub certificate: CertificateSection,
    pub timings_ms: Option<Vec<StageTiming>>,
}

#[derive(Serialize)]
pub struct InputSummary {
    pub format: String,
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Serialize)]
pub struct ComplexSummary {
    pub f_vector: Vec<usize>,
    pub dimension: isize,
    pub euler_characteristic: i64,
}

#[derive(Serialize)]
pub struct DegreeEntry {
    pub degree: isize,
    #[serde(flatten)]
    pub group: AbelianGroup,
}

fn table(g: &GradedGroups) -> Vec<DegreeEntry> {
    g.iter().map(|(degree, group)| DegreeEntry { degree, group: group.clone() }).collect()
}

#[derive(Serialize)]
pub struct WitnessEntry {
    pub simplex: Vec<String>,
    pub kind: WitnessKind,
    pub local_homology: Vec<DegreeEntry>,
}

impl From<&Witness> for WitnessEntry {
    fn from(w: &Witness) -> Self {
        WitnessEntry { simplex: w.labels.clone(), kind: w.kind, local_homology: table(&w.local_homology) }
    }
}

#[derive(Serialize)]
pub struct ManifoldSection {
    pub criterion: &'static str,
    pub dimension: usize,
    pub is_manifold: bool,
    pub verified_per_dimension: Vec<usize>,
    pub witnesses: Vec<WitnessEntry>,
}

#[derive(Serialize)]
pub struct SphereSection {
    pub criterion: &'static str,
    pub dimension: isize,
    pub is_sphere: bool,
}

#[derive(Serialize)]
pub struct DecompositionEntry {
    pub t0: Vec<String>,
    pub t1: Vec<String>,
}

#[derive(Serialize)]
pub struct VirtualPdSection {
    pub criterion: &'static str,
    pub is_vpd: bool,
    pub dimension: Option<usize>,
    /// Finite group: dimension 0, outside the reconstruction criteria.
    pub degenerate: bool,
}

#[derive(Serialize)]
pub struct VanishingWitnessEntry {
    pub t: Vec<String>,
    pub degree: isize,
    #[serde(flatten)]
    pub group: AbelianGroup,
}

#[derive(Serialize)]
pub struct VanishingSection {
    pub criterion: &'static str,
    pub holds: bool,
    pub checked: usize,
    pub witness: Option<VanishingWitnessEntry>,
}

#[derive(Serialize)]
pub struct CrossCheckSection {
    pub criterion: &'static str,
    pub virtual_pd: bool,
    pub sphere: bool,
    pub vanishing: bool,
    pub consistent: bool,
}

impl From<&CrossCheck> for CrossCheckSection {
    fn from(c: &CrossCheck) -> Self {
        CrossCheckSection {
            criterion: criteria::CROSS_CHECK,
            virtual_pd: c.virtual_pd,
            sphere: c.sphere,
            vanishing: c.vanishing,
            consistent: c.consistent(),
        }
    }
}

#[derive(Serialize)]
pub struct CoxeterSection {
    pub finite: bool,
    pub irreducible: bool,
    pub decomposition: DecompositionEntry,
    pub virtual_pd: VirtualPdSection,
    pub vanishing: VanishingSection,
    /// Present only for irreducible infinite systems.
    pub cross_check: Option<CrossCheckSection>,
}

#[derive(Serialize)]
pub struct CertificateSection {
    pub verdict: &'static str,
    pub dimension: Option<usize>,
    pub criterion: &'static str,
    pub caveat: Option<&'static str>,
}

#[derive(Serialize)]
pub struct StageTiming {
    pub stage: &'static str,
    pub ms: f64,
}

impl AnalysisReport {
    pub fn is_certified(&self) -> bool {
        self.certificate.verdict != "none"
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Short human-readable summary.
    pub fn summary(&self) -> String {
        let homology: Vec<String> = self
            .homology
            .iter()
            .filter(|e| !e.group.is_trivial())
            .map(|e| format!("H~{} = {}", e.degree, e.group))
            .collect();
        let mut out = String::new();
        out.push_str(&format!("vertices: {}, edges: {}\n", self.input.vertices, self.input.edges));
        out.push_str(&format!(
            "flag complex: dim {}, f-vector {:?}, euler characteristic {}\n",
            self.flag_complex.dimension, self.flag_complex.f_vector, self.flag_complex.euler_characteristic
        ));
        out.push_str(&format!(
            "reduced homology: {}\n",
            if homology.is_empty() { "all trivial".to_string() } else { homology.join(", ") }
        ));
        out.push_str(&format!(
            "homology {}-manifold: {}\n",
            self.manifold.dimension,
            if self.manifold.is_manifold { "yes" } else { "no" }
        ));
        out.push_str(&format!(
            "virtual Poincare duality: {}\n",
            match self.coxeter.virtual_pd.dimension {
                Some(d) if self.coxeter.virtual_pd.is_vpd => format!("yes, dimension {d}"),
                _ => "no".to_string(),
            }
        ));
        match self.certificate.dimension {
            Some(d) => out.push_str(&format!("certificate: {} (n = {d})\n", self.certificate.verdict)),
            None => out.push_str(&format!("certificate: {}\n", self.certificate.verdict)),
        }
        if let Some(c) = self.certificate.caveat {
            out.push_str(&format!("note: {c}\n"));
        }
        out
    }
}

struct Stopwatch {
    enabled: bool,
    last: Instant,
    stages: Vec<StageTiming>,
}

impl Stopwatch {
    fn lap(&mut self, stage: &'static str) {
        if self.enabled {
            let now = Instant::now();
            self.stages.push(StageTiming { stage, ms: (now - self.last).as_secs_f64() * 1e3 });
            self.last = now;
        }
    }
}

fn names(l: &SimplicialComplex, vs: &[usize]) -> Vec<String> {
    l.name_vertices(vs)
}

pub fn analyze(g: &Graph, format: &str, options: &AnalyzeOptions) -> Result<AnalysisReport> {
    let mut clock = Stopwatch { enabled: options.timings, last: Instant::now(), stages: Vec::new() };

    let l = clique_complex_capped(g, options.dimension_cap)?;
    clock.lap("flag_complex");
    let homology = reduced_homology(&l);
    clock.lap("homology");
    let ns = NerveSystem::from_parts(g.clone(), l);
    let l = ns.complex();
    let cert = certify_system(&ns)?;
    clock.lap("manifold_and_certificate");
    let sphere = is_generalized_homology_sphere(l, l.dim())?;
    clock.lap("sphere");

    let finite = ns.is_finite_group()?;
    let irreducible = ns.is_irreducible()?;
    let vanishing = ns.vanishing_condition();
    let cross_check =
        if irreducible && !finite { Some(CrossCheckSection::from(&ns.equivalence_crosscheck()?)) } else { None };
    clock.lap("coxeter");

    let pd = &cert.virtual_pd;
    let (verdict, dimension, criterion) = match &cert.verdict {
        Verdict::HomologyManifold { dimension } => ("homology_manifold", Some(*dimension), criteria::CERT_MANIFOLD),
        Verdict::VirtualPoincareDuality { dimension, .. } => {
            ("virtual_poincare_duality", Some(*dimension), criteria::CERT_VIRTUAL_PD)
        }
        Verdict::None => ("none", None, criteria::CERT_NONE),
    };

    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        input: InputSummary { format: format.to_string(), vertices: g.order(), edges: g.size() },
        flag_complex: ComplexSummary {
            f_vector: l.f_vector(),
            dimension: l.dim(),
            euler_characteristic: l.euler_characteristic(),
        },
        homology: table(&homology),
        manifold: ManifoldSection {
            criterion: criteria::MANIFOLD,
            dimension: cert.manifold.dimension,
            is_manifold: cert.manifold.is_manifold,
            verified_per_dimension: cert.manifold.verified.clone(),
            witnesses: cert.manifold.witnesses.iter().map(WitnessEntry::from).collect(),
        },
        generalized_homology_sphere: SphereSection {
            criterion: criteria::SPHERE,
            dimension: sphere.dimension,
            is_sphere: sphere.is_sphere,
        },
        coxeter: CoxeterSection {
            finite,
            irreducible,
            decomposition: DecompositionEntry {
                t0: names(l, &pd.decomposition.t0),
                t1: names(l, &pd.decomposition.t1),
            },
            virtual_pd: VirtualPdSection {
                criterion: criteria::VIRTUAL_PD,
                is_vpd: pd.is_vpd,
                dimension: pd.dimension,
                degenerate: pd.degenerate,
            },
            vanishing: VanishingSection {
                criterion: criteria::VANISHING,
                holds: vanishing.holds,
                checked: vanishing.checked,
                witness: vanishing.witness.map(|w| VanishingWitnessEntry {
                    t: names(l, &w.t),
                    degree: w.degree,
                    group: w.group,
                }),
            },
            cross_check,
        },
        certificate: CertificateSection { verdict, dimension, criterion, caveat: cert.caveat },
        timings_ms: options.timings.then_some(clock.stages),
    })
}
