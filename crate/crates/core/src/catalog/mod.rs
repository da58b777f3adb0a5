//! Machine-readable catalog of maps, curves, isogenies and identities, with a loader
//! that resolves cross-references by entry name and a runner that replays every claim.
//!
//! Each entry is one JSON file `<name>.json`:
//!
//! ```json
//! {
//!   "name": "phi1",
//!   "kind": "genus0",
//!   "payload": { "map": "(x^3+1)^2/(4x^3)" },
//!   "expected": { "passport": "3^2/2^3/2^3", "degree": 6 },
//!   "metadata": { "label": "comp1" }
//! }
//! ```
//!
//! Number fields are given as `"field": { "generator": "w", "minpoly": "w^2+w+1" }`;
//! without it the entry lives over Q. Polynomials, rational functions and functions on
//! curves are written as expressions in `x` (and `y`) and the generator.

mod builtin;
mod run;

pub use builtin::{builtin_entries, export_builtin};
pub use run::{entry_map, parse_filter, precision_failure, EntryMap, run_catalog, run_entries, run_entry, EntryFilter, RunOptions};

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::curves::{FfElem, SuperellipticCurve};
use crate::error::{Error, Result};
use crate::exactnum::{Field, NumberField};
use crate::expr::{parse_ffelem, parse_poly, parse_ratfun};
use crate::KRatFun;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntryKind {
    Genus0,
    Curve,
    #[serde(rename = "genus1-cover")]
    Genus1Cover,
    #[serde(rename = "genus1-explicit")]
    Genus1Explicit,
    Isogeny,
    #[serde(rename = "genus1-isogeny-composite")]
    Genus1IsogenyComposite,
    Transformation,
    HpgIdentity,
    #[serde(rename = "degree3-cover")]
    Degree3Cover,
    #[serde(rename = "two-descent")]
    TwoDescent,
}

impl fmt::Display for EntryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = serde_json::to_value(self).expect("unit variant");
        f.write_str(v.as_str().expect("string tag"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub generator: String,
    pub minpoly: String,
}

impl FieldSpec {
    pub fn build(&self) -> Result<Field> {
        let p = parse_poly(&NumberField::rationals(), &self.generator, &self.minpoly)?;
        let coeffs = p.coeffs().iter().map(|c| c.as_rational().expect("rational coefficient")).collect();
        NumberField::new(coeffs, self.generator.clone())
    }
}

/// `yⁿ = f(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    pub n: usize,
    pub f: String,
}

impl CurveSpec {
    pub fn new(n: usize, f: &str) -> Self {
        CurveSpec { n, f: f.to_string() }
    }

    pub fn build(&self, field: &Field) -> Result<SuperellipticCurve> {
        SuperellipticCurve::new(self.n, parse_poly(field, "x", &self.f)?)
    }
}

/// Claims replayed by the runner. Absent fields are not checked.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub passport: Option<String>,
    /// Two of `inf`, `0`, `1`: the stated passport may differ from the computed one by
    /// exchanging these fibers.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub passport_relabel: Option<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    /// Minimal polynomial, in the entry generator, of a field claimed to be the field of definition.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    /// Name of an entry with the same passport whose dessin must differ (numeric runs only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distinct_dessin_from: Option<String>,
}

/// Opaque descriptive strings, never verified.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tiling_id: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gauge_theory: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Genus0Payload {
    pub map: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurvePayload {
    pub curve: CurveSpec,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub isomorphic_to: Vec<CurveSpec>,
}

/// A genus-0 map (by entry name) pulled back along `yⁿ = f` (`cover`) or composed with a
/// function `inner` on `curve`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Genus1CoverPayload {
    pub genus0: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover: Option<CurveSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve: Option<CurveSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inner: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Genus1ExplicitPayload {
    pub curve: CurveSpec,
    pub value: String,
}

/// `(x, y) ↦ (x_map, y_map)` from `source` to `target`, both written in the source's `x`, `y`.
/// Without `y_map` only the `x`-component is checked and the `y`-component is recovered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsogenyPayload {
    pub source: CurveSpec,
    pub target: CurveSpec,
    pub x_map: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y_map: Option<String>,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsogenyCompositePayload {
    pub base: String,
    pub isogeny: String,
}

/// Source coordinates `x`, `y` written as functions of the target's `x`, `y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransformationPayload {
    pub source: CurveSpec,
    pub target: CurveSpec,
    pub x: String,
    pub y: String,
    /// `false` records a substitution that is expected to fail.
    #[serde(default = "yes", skip_serializing_if = "is_true")]
    pub holds: bool,
}

fn yes() -> bool {
    true
}

fn is_true(b: &bool) -> bool {
    *b
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HpgCheck {
    /// The degree-5 transformation at the built-in samples.
    Degree5,
    /// Series against quadrature of the elliptic-integral form at random samples.
    Quadrature,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HpgPayload {
    pub check: HpgCheck,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub tolerance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Degree3Family {
    Psi1,
    Psi2,
}

/// `Ψ₁` with parameter `u`, or `Ψ₂` with `a` and `b_sqrt`; optionally followed by a genus-0 map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Degree3Payload {
    pub family: Degree3Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b_sqrt: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub then: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoDescentPayload {
    pub samples: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    Genus0(Genus0Payload),
    Curve(CurvePayload),
    Genus1Cover(Genus1CoverPayload),
    Genus1Explicit(Genus1ExplicitPayload),
    Isogeny(IsogenyPayload),
    Genus1IsogenyComposite(IsogenyCompositePayload),
    Transformation(TransformationPayload),
    HpgIdentity(HpgPayload),
    Degree3Cover(Degree3Payload),
    TwoDescent(TwoDescentPayload),
}

impl Payload {
    pub fn kind(&self) -> EntryKind {
        match self {
            Payload::Genus0(_) => EntryKind::Genus0,
            Payload::Curve(_) => EntryKind::Curve,
            Payload::Genus1Cover(_) => EntryKind::Genus1Cover,
            Payload::Genus1Explicit(_) => EntryKind::Genus1Explicit,
            Payload::Isogeny(_) => EntryKind::Isogeny,
            Payload::Genus1IsogenyComposite(_) => EntryKind::Genus1IsogenyComposite,
            Payload::Transformation(_) => EntryKind::Transformation,
            Payload::HpgIdentity(_) => EntryKind::HpgIdentity,
            Payload::Degree3Cover(_) => EntryKind::Degree3Cover,
            Payload::TwoDescent(_) => EntryKind::TwoDescent,
        }
    }

    fn to_value(&self) -> Value {
        let v = match self {
            Payload::Genus0(p) => serde_json::to_value(p),
            Payload::Curve(p) => serde_json::to_value(p),
            Payload::Genus1Cover(p) => serde_json::to_value(p),
            Payload::Genus1Explicit(p) => serde_json::to_value(p),
            Payload::Isogeny(p) => serde_json::to_value(p),
            Payload::Genus1IsogenyComposite(p) => serde_json::to_value(p),
            Payload::Transformation(p) => serde_json::to_value(p),
            Payload::HpgIdentity(p) => serde_json::to_value(p),
            Payload::Degree3Cover(p) => serde_json::to_value(p),
            Payload::TwoDescent(p) => serde_json::to_value(p),
        };
        v.expect("payload serializes")
    }

    fn from_value(kind: EntryKind, v: Value) -> serde_json::Result<Self> {
        Ok(match kind {
            EntryKind::Genus0 => Payload::Genus0(serde_json::from_value(v)?),
            EntryKind::Curve => Payload::Curve(serde_json::from_value(v)?),
            EntryKind::Genus1Cover => Payload::Genus1Cover(serde_json::from_value(v)?),
            EntryKind::Genus1Explicit => Payload::Genus1Explicit(serde_json::from_value(v)?),
            EntryKind::Isogeny => Payload::Isogeny(serde_json::from_value(v)?),
            EntryKind::Genus1IsogenyComposite => Payload::Genus1IsogenyComposite(serde_json::from_value(v)?),
            EntryKind::Transformation => Payload::Transformation(serde_json::from_value(v)?),
            EntryKind::HpgIdentity => Payload::HpgIdentity(serde_json::from_value(v)?),
            EntryKind::Degree3Cover => Payload::Degree3Cover(serde_json::from_value(v)?),
            EntryKind::TwoDescent => Payload::TwoDescent(serde_json::from_value(v)?),
        })
    }

    /// Names of other entries this payload refers to.
    pub fn references(&self) -> Vec<&str> {
        match self {
            Payload::Genus1Cover(p) => vec![p.genus0.as_str()],
            Payload::Genus1IsogenyComposite(p) => vec![p.base.as_str(), p.isogeny.as_str()],
            Payload::Degree3Cover(p) => p.then.iter().map(String::as_str).collect(),
            _ => Vec::new(),
        }
    }
}

/// On-disk form of an entry.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    name: String,
    kind: EntryKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    field: Option<FieldSpec>,
    payload: Value,
    #[serde(default, skip_serializing_if = "is_default")]
    expected: Expected,
    #[serde(default, skip_serializing_if = "is_default")]
    metadata: Metadata,
}

fn is_default<T: Default + PartialEq>(t: &T) -> bool {
    *t == T::default()
}

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub name: String,
    pub field: Option<FieldSpec>,
    pub payload: Payload,
    pub expected: Expected,
    pub metadata: Metadata,
    /// Entries named by the payload or by `expected`, resolved recursively.
    pub deps: BTreeMap<String, CatalogEntry>,
}

impl CatalogEntry {
    pub fn new(name: &str, payload: Payload) -> Self {
        CatalogEntry {
            name: name.to_string(),
            field: None,
            payload,
            expected: Expected::default(),
            metadata: Metadata::default(),
            deps: BTreeMap::new(),
        }
    }

    pub fn kind(&self) -> EntryKind {
        self.payload.kind()
    }

    pub fn build_field(&self) -> Result<Field> {
        match &self.field {
            Some(f) => f.build(),
            None => Ok(NumberField::rationals()),
        }
    }

    /// All names this entry needs resolved.
    pub fn references(&self) -> Vec<&str> {
        let mut r = self.payload.references();
        r.extend(self.expected.distinct_dessin_from.as_deref());
        r
    }

    pub fn dep(&self, name: &str) -> Result<&CatalogEntry> {
        self.deps.get(name).ok_or_else(|| Error::MissingDependency(format!("{} needs {name}", self.name)))
    }

    pub fn to_json(&self) -> Value {
        let raw = RawEntry {
            name: self.name.clone(),
            kind: self.kind(),
            field: self.field.clone(),
            payload: self.payload.to_value(),
            expected: self.expected.clone(),
            metadata: self.metadata.clone(),
        };
        serde_json::to_value(raw).expect("entry serializes")
    }

    /// Pretty JSON with a trailing newline, the on-disk format.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("entry serializes");
        s.push('\n');
        s
    }

    /// Parses one entry without resolving references; `location` names the source in errors.
    pub fn from_json_str(text: &str, location: &str) -> Result<Self> {
        let schema = |e: serde_json::Error, what: &str| Error::Schema {
            location: format!("{location}:{}:{}", e.line(), e.column()),
            message: format!("{what}: {e}"),
        };
        let raw: RawEntry = serde_json::from_str(text).map_err(|e| schema(e, "entry"))?;
        let payload = Payload::from_value(raw.kind, raw.payload).map_err(|e| Error::Schema {
            location: format!("{location}: payload"),
            message: format!("{} payload: {e}", raw.kind),
        })?;
        if raw.name.is_empty() {
            return Err(Error::Schema { location: format!("{location}: name"), message: "empty name".into() });
        }
        Ok(CatalogEntry { name: raw.name, field: raw.field, payload, expected: raw.expected, metadata: raw.metadata, deps: BTreeMap::new() })
    }

    /// Degree claimed for the entry, used by `degree=` filters.
    pub fn degree(&self) -> Option<usize> {
        self.expected.degree
    }
}

/// Loads `path` and resolves every referenced name against `<dir>/<name>.json` in the same directory.
pub fn load_entry(path: &Path) -> Result<CatalogEntry> {
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("."));
    let mut entry = read_entry(path)?;
    resolve(&mut entry, &|name| read_entry(&dir.join(format!("{name}.json"))), 0)?;
    Ok(entry)
}

fn read_entry(path: &Path) -> Result<CatalogEntry> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        if e.kind() == std::io::ErrorKind::NotFound {
            Error::MissingDependency(format!("{} does not exist", path.display()))
        } else {
            Error::Io(format!("{}: {e}", path.display()))
        }
    })?;
    CatalogEntry::from_json_str(&text, &path.display().to_string())
}

const MAX_DEPTH: usize = 8;

/// Fills `deps` recursively using `lookup`.
pub fn resolve(entry: &mut CatalogEntry, lookup: &dyn Fn(&str) -> Result<CatalogEntry>, depth: usize) -> Result<()> {
    if depth > MAX_DEPTH {
        return Err(Error::MissingDependency(format!("reference chain through {} is too deep or cyclic", entry.name)));
    }
    let names: Vec<String> = entry.references().into_iter().map(String::from).collect();
    for name in names {
        if entry.deps.contains_key(&name) {
            continue;
        }
        let mut dep = lookup(&name).map_err(|e| match e {
            Error::MissingDependency(m) => Error::MissingDependency(format!("{}: {name} ({m})", entry.name)),
            other => other,
        })?;
        if dep.name != name {
            return Err(Error::MissingDependency(format!("{}: file for {name} declares name {}", entry.name, dep.name)));
        }
        resolve(&mut dep, lookup, depth + 1)?;
        entry.deps.insert(name, dep);
    }
    Ok(())
}

/// Every `*.json` file in `dir`, resolved against each other, sorted by name.
pub fn load_dir(dir: &Path) -> Result<Vec<CatalogEntry>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let mut raw = BTreeMap::new();
    for p in &paths {
        let e = read_entry(p)?;
        if raw.insert(e.name.clone(), e).is_some() {
            return Err(Error::Schema { location: p.display().to_string(), message: "duplicate entry name".into() });
        }
    }
    resolve_all(raw.into_values().collect())
}

/// Resolves a set of entries against itself.
pub fn resolve_all(entries: Vec<CatalogEntry>) -> Result<Vec<CatalogEntry>> {
    let index: BTreeMap<String, CatalogEntry> = entries.iter().map(|e| (e.name.clone(), e.clone())).collect();
    let lookup = |name: &str| index.get(name).cloned().ok_or_else(|| Error::MissingDependency(format!("no entry named {name}")));
    let mut out = Vec::with_capacity(entries.len());
    for mut e in entries {
        resolve(&mut e, &lookup, 0)?;
        out.push(e);
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

pub(crate) fn ratfun(field: &Field, s: &str) -> Result<KRatFun> {
    parse_ratfun(field, "x", s)
}

pub(crate) fn ffelem(curve: &SuperellipticCurve, s: &str) -> Result<FfElem> {
    parse_ffelem(curve.n(), curve.f(), s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi1() -> CatalogEntry {
        let mut e = CatalogEntry::new("phi1", Payload::Genus0(Genus0Payload { map: "(x^3+1)^2/(4x^3)".into() }));
        e.expected.passport = Some("3^2/2^3/2^3".into());
        e
    }

    #[test]
    fn json_round_trip() {
        let e = phi1();
        let back = CatalogEntry::from_json_str(&e.to_json_string(), "mem").unwrap();
        assert_eq!(back, e);
        assert!(e.to_json_string().contains("\"kind\": \"genus0\""));
    }

    #[test]
    fn schema_errors_name_the_location() {
        match CatalogEntry::from_json_str("{\"name\": \"a\", \"kind\": \"genus0\",\n \"payload\": 3}", "f.json") {
            Err(Error::Schema { location, .. }) => assert!(location.contains("payload")),
            other => panic!("{other:?}"),
        }
        match CatalogEntry::from_json_str("{\"name\": \"a\",\n \"kind\": \"nonsense\", \"payload\": {}}", "f.json") {
            Err(Error::Schema { location, .. }) => assert!(location.starts_with("f.json:2:")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            CatalogEntry::from_json_str("{\"name\": \"a\", \"kind\": \"genus0\", \"payload\": {\"map\": \"x\", \"extra\": 1}}", "f"),
            Err(Error::Schema { .. })
        ));
    }

    #[test]
    fn references_resolve_from_the_directory() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("phi1.json"), phi1().to_json_string()).unwrap();
        let cover = CatalogEntry::new(
            "dp3",
            Payload::Genus1Cover(Genus1CoverPayload {
                genus0: "phi1".into(),
                cover: Some(CurveSpec::new(2, "x^3+1")),
                curve: None,
                inner: None,
            }),
        );
        let path = dir.path().join("dp3.json");
        std::fs::write(&path, cover.to_json_string()).unwrap();
        let e = load_entry(&path).unwrap();
        assert_eq!(e.dep("phi1").unwrap().kind(), EntryKind::Genus0);
        std::fs::remove_file(dir.path().join("phi1.json")).unwrap();
        assert!(matches!(load_entry(&path), Err(Error::MissingDependency(_))));
    }

    #[test]
    fn field_spec_builds() {
        let f = FieldSpec { generator: "w".into(), minpoly: "w^2+w+1".into() }.build().unwrap();
        assert_eq!(f.degree(), 2);
        assert_eq!(f.generator_name(), "w");
    }
}
