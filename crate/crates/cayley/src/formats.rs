//! JSON input files and output documents.
//!
//! Node indices and collection positions are 1-based in every file; the
//! engine is 0-based. Dimensions that do not fit in a `u64` are written as
//! decimal strings.

use std::path::Path;
use std::sync::Arc;

use cayley_core::ledger::{parse_expr, CheckResult, Identity, IdentityKind};
use cayley_core::verify::Collection;
use cayley_core::{
    CartanMatrix, CharCache, Character, Error, ExtTable, GradedBundle, ParabolicSetup, Result, RootSystem, Subsystem,
    VerificationReport, Weight,
};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CartanFile {
    pub rank: usize,
    pub entries: Vec<Vec<i32>>,
}

impl CartanFile {
    pub fn to_cartan(&self) -> Result<CartanMatrix> {
        if self.entries.len() != self.rank || self.entries.iter().any(|r| r.len() != self.rank) {
            return Err(Error::Invalid(format!(
                "Cartan entries must form a {0}x{0} matrix",
                self.rank
            )));
        }
        CartanMatrix::new(&self.entries)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightEntry {
    pub weight: Vec<i32>,
}

/// A collection file. Exactly one of `preset` and `cartan` names the group.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CollectionFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan: Option<CartanFile>,
    pub crossed: usize,
    pub bundles: Vec<WeightEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdentityEntry {
    pub name: String,
    pub kind: String,
    pub terms: Vec<String>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn from_json<T: serde::de::DeserializeOwned>(path: &Path, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

pub fn read_cartan(path: &Path) -> Result<CartanMatrix> {
    from_json::<CartanFile>(path, &read(path)?)?.to_cartan()
}

/// Root system from a preset name or a Cartan matrix, with an optional cache.
pub fn root_system(
    preset: Option<&str>,
    cartan: Option<CartanMatrix>,
    cache: Option<Arc<dyn CharCache>>,
) -> Result<RootSystem> {
    let rs = match (preset, cartan) {
        (_, Some(c)) => RootSystem::new(c)?,
        (Some(p), None) => RootSystem::preset(p)?,
        (None, None) => RootSystem::preset("E6-paper")?,
    };
    Ok(match cache {
        Some(c) => rs.with_cache(c),
        None => rs,
    })
}

/// `crossed` is 1-based.
pub fn setup(rs: RootSystem, crossed: usize) -> Result<ParabolicSetup> {
    let rank = rs.rank();
    let node = crossed.checked_sub(1).ok_or(Error::InvalidNode { node: 0, rank })?;
    ParabolicSetup::new(rs, node).map_err(|e| match e {
        Error::InvalidNode { rank, .. } => Error::InvalidNode { node: crossed, rank },
        e => e,
    })
}

pub fn collection_from_file(
    file: CollectionFile,
    fallback_name: &str,
    cache: Option<Arc<dyn CharCache>>,
) -> Result<Collection> {
    let cartan = match (&file.preset, &file.cartan) {
        (Some(_), Some(_)) => {
            return Err(Error::Invalid(
                "collection names both a preset and a Cartan matrix".into(),
            ))
        }
        (None, None) => return Err(Error::Invalid("collection needs a preset or a Cartan matrix".into())),
        (_, Some(c)) => Some(c.to_cartan()?),
        (Some(_), None) => None,
    };
    let rs = root_system(file.preset.as_deref(), cartan, cache)?;
    let s = setup(rs, file.crossed)?;
    let bundles = file
        .bundles
        .iter()
        .map(|b| s.bundle(&b.weight))
        .collect::<Result<Vec<_>>>()?;
    Collection::new(file.name.unwrap_or_else(|| fallback_name.to_string()), s, bundles)
}

pub fn read_collection(path: &Path, cache: Option<Arc<dyn CharCache>>) -> Result<Collection> {
    let file: CollectionFile = from_json(path, &read(path)?)?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("collection");
    collection_from_file(file, stem, cache)
}

/// Rebuilds a collection on a root system that carries `cache`.
pub fn with_cache(c: Collection, cache: Arc<dyn CharCache>) -> Result<Collection> {
    let rs = c.setup.root_system().clone().with_cache(cache);
    let s = ParabolicSetup::new(rs, c.setup.crossed())?;
    Ok(Collection { setup: s, ..c })
}

pub fn collection_to_file(c: &Collection) -> CollectionFile {
    CollectionFile {
        name: Some(c.name.clone()),
        preset: c.preset.clone(),
        cartan: match c.preset {
            Some(_) => None,
            None => {
                let m = c.setup.root_system().cartan();
                Some(CartanFile {
                    rank: m.rank(),
                    entries: m.rows(),
                })
            }
        },
        crossed: c.setup.crossed() + 1,
        bundles: c
            .bundles
            .iter()
            .map(|b| WeightEntry {
                weight: b.weight().coords().to_vec(),
            })
            .collect(),
    }
}

pub fn identity_entry(id: &Identity) -> IdentityEntry {
    IdentityEntry {
        name: id.name.clone(),
        kind: id.kind.as_str().to_string(),
        terms: id.term_strings(),
        note: id.note.clone(),
    }
}

pub fn identity_from_entry(e: &IdentityEntry) -> Result<Identity> {
    let kind: IdentityKind = e.kind.parse()?;
    let terms = e.terms.iter().map(|t| parse_expr(t)).collect::<Result<Vec<_>>>()?;
    Ok(Identity::new(e.name.clone(), kind, terms)?.with_note(e.note.clone()))
}

pub fn read_ledger(path: &Path) -> Result<Vec<Identity>> {
    let entries: Vec<IdentityEntry> = from_json(path, &read(path)?)?;
    entries
        .iter()
        .map(|e| identity_from_entry(e).map_err(|err| Error::Invalid(format!("identity `{}`: {err}", e.name))))
        .collect()
}

/// The ledger file format, pretty-printed with a trailing newline.
pub fn ledger_json(ids: &[Identity]) -> String {
    let entries: Vec<IdentityEntry> = ids.iter().map(identity_entry).collect();
    let mut s = serde_json::to_string_pretty(&entries).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn big(n: &BigUint) -> Value {
    match n.to_u64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn weight(w: &Weight) -> Value {
    json!(w.coords())
}

/// Characters sorted by decreasing height, then decreasing coordinates.
pub fn character(rs: &RootSystem, chi: &Character) -> Value {
    let mut terms: Vec<(&Weight, i64)> = chi.iter().collect();
    terms.sort_by(|(a, _), (b, _)| rs.scaled_height(b).cmp(&rs.scaled_height(a)).then_with(|| b.cmp(a)));
    Value::Array(
        terms
            .into_iter()
            .map(|(w, m)| json!({"weight": weight(w), "mult": m}))
            .collect(),
    )
}

/// Graded bundle or `G`-module decomposition, with the dimension of each piece.
pub fn graded(rs: &RootSystem, sub: &Subsystem, g: &GradedBundle) -> Result<Value> {
    let mut out = Vec::with_capacity(g.len());
    for (w, m) in &g.terms {
        let d = cayley_core::weyl_dim(rs, sub, w)?;
        out.push(json!({"weight": weight(w), "mult": m, "dim": big(&d)}));
    }
    Ok(Value::Array(out))
}

/// Every degree `0..=dim X`, zeros included. Each contributing weight `g`
/// is printed with its dual, since `H^k ≅ V_g^*`.
pub fn ext_table(rs: &RootSystem, t: &ExtTable) -> Result<Value> {
    let full = rs.full();
    let mut out = Vec::with_capacity(t.degrees.len());
    for (k, e) in t.degrees.iter().enumerate() {
        let mut ws = Vec::with_capacity(e.weights.len());
        for (g, m) in &e.weights {
            ws.push(json!({"weight": weight(g), "dual": weight(&rs.dual_dominant(&full, g)?), "mult": m}));
        }
        out.push(json!({"degree": k, "dim": big(&e.dim), "weights": ws}));
    }
    Ok(Value::Array(out))
}

pub fn verify_report(c: &Collection, r: &VerificationReport) -> Result<Value> {
    let rs = c.setup.root_system();
    let mut reports = Vec::with_capacity(r.tables.len());
    for t in &r.tables {
        reports.push(json!({"pair": [t.i + 1, t.j + 1], "table": ext_table(rs, &t.table)?}));
    }
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|v| {
            json!({
                "pair": [v.pair.0 + 1, v.pair.1 + 1],
                "degree": v.degree,
                "dim": big(&v.dim),
                "rule": v.rule.as_str(),
            })
        })
        .collect();
    let hom: Vec<Vec<Value>> = r.hom_matrix().iter().map(|row| row.iter().map(big).collect()).collect();
    let blocks: Vec<[usize; 2]> = c.twist_blocks().iter().map(|b| [b.start + 1, b.end]).collect();
    Ok(json!({
        "command": "verify",
        "collection": r.collection,
        "preset": c.preset,
        "crossed": c.setup.crossed() + 1,
        "dim_x": c.setup.dim_x(),
        "size": r.size,
        "pairs_checked": r.tables.len(),
        "bundles": c.bundles.iter().map(|b| json!({"weight": weight(b.weight())})).collect::<Vec<_>>(),
        "blocks": blocks,
        "hom_matrix": hom,
        "verdict": if r.passed() { "pass" } else { "fail" },
        "violations": violations,
        "reports": reports,
    }))
}

pub fn check_result(rs: &RootSystem, id: &Identity, r: &CheckResult) -> Value {
    json!({
        "name": r.name,
        "kind": r.kind.as_str(),
        "terms": id.term_strings(),
        "note": id.note,
        "passed": r.passed,
        "difference": character(rs, &r.difference),
        "decomposed": r.decomposed.iter().map(|(w, m)| json!({"weight": weight(w), "mult": m})).collect::<Vec<_>>(),
    })
}
