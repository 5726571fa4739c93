//! Human and machine renderings of command results.

use serde_json::{json, Value};
use tensoralg::catalog::{BUILTINS, CATALOG_PAIRS};
use tensoralg::linalg::Subspace;
use tensoralg::tensor::DerivedMaps;
use tensoralg::{LieAlgebra, NonabelianTensor, Pair};

fn basis(alg_names: &LieAlgebra, space: &Subspace) -> Vec<String> {
    space.basis().iter().map(|v| alg_names.describe(v)).collect()
}

fn bracket_table(alg: &LieAlgebra) -> Vec<(String, String, String)> {
    let n = alg.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v = alg.bracket_basis(i, j);
            if !tensoralg::linalg::is_zero(v) {
                out.push((alg.names()[i].clone(), alg.names()[j].clone(), alg.describe(v)));
            }
        }
    }
    out
}

pub fn tensor(id: &str, pair: &Pair, t: &NonabelianTensor, m: &DerivedMaps, machine: bool) -> String {
    let d = m.dimensions();
    let tensor = t.algebra();
    let sections: [(&str, Vec<String>); 6] = [
        ("tensor", tensor.names().to_vec()),
        ("square", basis(tensor, &m.square)),
        ("exterior", m.exterior.names().to_vec()),
        ("j2", basis(tensor, &m.j2)),
        ("multiplier", basis(&m.exterior, &m.multiplier)),
        ("kappa-image", basis(pair.l(), &m.kappa_image)),
    ];
    let brackets = bracket_table(tensor);
    if machine {
        let bases: serde_json::Map<String, Value> =
            sections.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        let doc = json!({
            "pair": id,
            "dims": {
                "tensor": d.tensor,
                "square": d.square,
                "exterior": d.exterior,
                "j2": d.j2,
                "multiplier": d.multiplier,
                "kappa-image": d.commutator,
            },
            "bases": bases,
            "brackets": brackets
                .iter()
                .map(|(a, b, v)| json!({"left": a, "right": b, "value": v}))
                .collect::<Vec<_>>(),
        });
        return format!("{}\n", serde_json::to_string_pretty(&doc).expect("valid JSON"));
    }
    let mut out = format!("pair: {id}\n");
    out.push_str(&format!(
        "dims (⊗,□,∧,J₂,M) = ({},{},{},{},{}); dim im κ = {}\n",
        d.tensor, d.square, d.exterior, d.j2, d.multiplier, d.commutator
    ));
    for (name, items) in &sections {
        let list = if items.is_empty() { "0".to_string() } else { items.join(", ") };
        out.push_str(&format!("{name}: {list}\n"));
    }
    out.push_str("brackets:\n");
    if brackets.is_empty() {
        out.push_str("  (abelian)\n");
    }
    for (a, b, v) in brackets {
        out.push_str(&format!("  [{a}, {b}] = {v}\n"));
    }
    out
}

pub fn catalog(machine: bool) -> String {
    if machine {
        let doc = json!({
            "builtins": BUILTINS
                .iter()
                .map(|b| json!({"signature": b.signature, "produces": b.produces, "description": b.description}))
                .collect::<Vec<_>>(),
            "pairs": CATALOG_PAIRS.iter().map(|s| format!("builtin:{s}")).collect::<Vec<_>>(),
        });
        return format!("{}\n", serde_json::to_string_pretty(&doc).expect("valid JSON"));
    }
    let mut out = String::from("builtins:\n");
    for b in BUILTINS {
        out.push_str(&format!("  {:<22} {:<8} {}\n", b.signature, b.produces, b.description));
    }
    out.push_str("catalog pairs:\n");
    for s in CATALOG_PAIRS {
        out.push_str(&format!("  builtin:{s}\n"));
    }
    out
}

pub struct Validation {
    pub kind: &'static str,
    pub dim: usize,
    pub ideal_dim: Option<usize>,
    pub violation: Option<String>,
}

pub fn validation(input: &str, v: &Validation, machine: bool) -> String {
    if machine {
        let doc = json!({
            "input": input,
            "kind": v.kind,
            "dim": v.dim,
            "ideal-dim": v.ideal_dim,
            "valid": v.violation.is_none(),
            "violation": v.violation,
        });
        return format!("{}\n", serde_json::to_string_pretty(&doc).expect("valid JSON"));
    }
    match (&v.violation, v.ideal_dim) {
        (Some(e), _) => format!("{input}: invalid {}: {e}\n", v.kind),
        (None, Some(q)) => format!("{input}: valid pair, dim L = {}, dim N = {q}\n", v.dim),
        (None, None) => format!("{input}: valid algebra, dim {}\n", v.dim),
    }
}
