#![allow(dead_code)]

use std::collections::BTreeSet;

use flagrecon::complex::{clique_complex, SimplicialComplex};
use flagrecon::graph::{generate, Family, Graph};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::with_order(n);
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

/// Every labelled graph on `n` vertices, indexed by its edge bitmask.
pub fn all_labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

pub fn family(f: Family) -> Graph {
    generate(&f).unwrap()
}

/// `g` joined with one extra vertex labelled `hub`.
pub fn cone(g: &Graph) -> Graph {
    g.join(&Graph::new(["hub"]).unwrap()).unwrap()
}

/// The closed homology manifolds used across tests, with their dimension.
pub fn manifold_corpus() -> Vec<(String, Graph, usize)> {
    let mut out = Vec::new();
    for n in 4..=9 {
        out.push((format!("C_{n}"), family(Family::Cycle(n)), 1));
    }
    for k in 2..=4 {
        out.push((format!("cross_polytope({k})"), family(Family::CrossPolytope(k)), k - 1));
    }
    for p in [4, 5] {
        out.push((format!("torus_grid({p},{p})"), family(Family::TorusGrid(p, p)), 2));
    }
    out.push(("icosahedron".into(), family(Family::Icosahedron), 2));
    out
}

/// Six vertices, ten triangles: the minimal triangulation of the real
/// projective plane. Not flag.
pub fn projective_plane() -> SimplicialComplex {
    let facets =
        [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 6, 2], [2, 3, 5], [3, 4, 6], [4, 5, 2], [5, 6, 3], [6, 2, 4]];
    let facets: Vec<Vec<String>> = facets.iter().map(|f| f.iter().map(|v| v.to_string()).collect()).collect();
    SimplicialComplex::from_labeled_facets(&facets).unwrap()
}

/// Complexes for homology checks: flag complexes of the manifold corpus and
/// a few non-manifolds, plus the projective plane and the empty complex.
pub fn complex_corpus() -> Vec<(String, SimplicialComplex)> {
    let mut out: Vec<_> = manifold_corpus().into_iter().map(|(name, g, _)| (name, clique_complex(&g))).collect();
    out.push(("K_5".into(), clique_complex(&family(Family::Complete(5)))));
    out.push(("P_4".into(), clique_complex(&family(Family::Path(4)))));
    out.push(("K_{3,3}".into(), clique_complex(&family(Family::CompleteMultipartite(vec![3, 3])))));
    out.push(("wheel_5".into(), clique_complex(&cone(&family(Family::Cycle(5))))));
    out.push(("RP^2".into(), projective_plane()));
    out.push(("empty".into(), SimplicialComplex::empty()));
    out
}

pub fn label_set<S: AsRef<str>>(labels: impl IntoIterator<Item = S>) -> BTreeSet<String> {
    labels.into_iter().map(|s| s.as_ref().to_string()).collect()
}

/// Checks `value` against the subset of JSON Schema used by the shipped
/// report schema: `type`, `enum`, `minimum`, `required`, `properties`,
/// `additionalProperties: false`, `items` and local `$ref`s.
pub fn schema_errors(schema: &Value, value: &Value) -> Vec<String> {
    let mut errors = Vec::new();
    check(schema, schema, value, "$", &mut errors);
    errors
}

fn type_matches(t: &str, v: &Value) -> bool {
    match t {
        "object" => v.is_object(),
        "array" => v.is_array(),
        "string" => v.is_string(),
        "boolean" => v.is_boolean(),
        "null" => v.is_null(),
        "integer" => v.is_i64() || v.is_u64(),
        "number" => v.is_number(),
        _ => panic!("unsupported schema type {t}"),
    }
}

fn check(root: &Value, schema: &Value, v: &Value, path: &str, errors: &mut Vec<String>) {
    if let Some(r) = schema.get("$ref").and_then(Value::as_str) {
        let target = r.strip_prefix("#/").expect("local ref").split('/').fold(root, |node, key| &node[key]);
        return check(root, target, v, path, errors);
    }
    if let Some(t) = schema.get("type") {
        let ok = match t {
            Value::String(s) => type_matches(s, v),
            Value::Array(ts) => ts.iter().any(|t| type_matches(t.as_str().unwrap(), v)),
            _ => panic!("bad type keyword"),
        };
        if !ok {
            errors.push(format!("{path}: expected type {t}, found {v}"));
            return;
        }
    }
    if let Some(allowed) = schema.get("enum").and_then(Value::as_array) {
        if !allowed.contains(v) {
            errors.push(format!("{path}: {v} not in {allowed:?}"));
        }
    }
    if let (Some(min), Some(x)) = (schema.get("minimum").and_then(Value::as_f64), v.as_f64()) {
        if x < min {
            errors.push(format!("{path}: {x} < minimum {min}"));
        }
    }
    if let Some(obj) = v.as_object() {
        for key in schema.get("required").and_then(Value::as_array).into_iter().flatten() {
            if !obj.contains_key(key.as_str().unwrap()) {
                errors.push(format!("{path}: missing required {key}"));
            }
        }
        let props = schema.get("properties").and_then(Value::as_object);
        for (key, child) in obj {
            match props.and_then(|p| p.get(key)) {
                Some(s) => check(root, s, child, &format!("{path}.{key}"), errors),
                None if schema.get("additionalProperties") == Some(&Value::Bool(false)) => {
                    errors.push(format!("{path}: unexpected property {key}"))
                }
                None => {}
            }
        }
    }
    if let (Some(items), Some(arr)) = (schema.get("items"), v.as_array()) {
        for (i, child) in arr.iter().enumerate() {
            check(root, items, child, &format!("{path}[{i}]"), errors);
        }
    }
}
