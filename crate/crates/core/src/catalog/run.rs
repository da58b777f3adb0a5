//! Replays catalog claims through the exact modules, optionally with a monodromy cross-check.

use std::path::Path;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use super::{
    ffelem, load_dir, ratfun, CatalogEntry, Degree3Family, Degree3Payload, EntryKind, Expected, HpgCheck,
    HpgPayload, IsogenyPayload, Payload,
};
use crate::belyi0::{verify_belyi0, BelyiValue, Genus0BelyiMap, Passport};
use crate::composer::{
    compose_genus0_after, compose_with_cover, cover_marks, make_psi1, make_psi2, predict_passport, psi2_critical_report,
    CoverSpec, DegreeThreeCover, Genus1BelyiMap, Provenance,
};
use crate::curves::{CurveTransformation, SuperellipticCurve};
use crate::error::{Error, Result};
use crate::exactnum::{rat, Field, FieldElement};
use crate::expr::{parse_field_element, parse_poly};
use crate::hypergeo::{default_degree5_samples, elliptic_integral_form, hpg2f1, verify_degree5_identity, HpgParams};
use crate::isogeny::{compose_isogeny, two_descent_report, verify_isogeny_full, verify_isogeny_xonly, IsogenyMap, RootStatus};
use crate::monodromy::{genus_from_triple, permutation_triple, triples_equivalent, MapRef, NumericSettings, PermutationTriple};
use crate::polyalg::discriminant;
use crate::report::VerificationReport;

#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    /// Adds the monodromy cross-check to maps of degree at most `numeric_max_degree`.
    pub numeric: bool,
    pub numeric_max_degree: usize,
    pub settings: NumericSettings,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { numeric: false, numeric_max_degree: 16, settings: NumericSettings::default() }
    }
}

/// `key=value` selection on `name`, `kind`, `degree` or `field` (`Q` or the generator's minimal polynomial).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryFilter {
    pub key: String,
    pub value: String,
}

pub fn parse_filter(s: &str) -> Result<EntryFilter> {
    let (k, v) = s.split_once('=').ok_or_else(|| Error::InvalidInput(format!("filter {s:?} is not key=value")))?;
    let key = k.trim().to_string();
    if !matches!(key.as_str(), "name" | "kind" | "degree" | "field") {
        return Err(Error::InvalidInput(format!("unknown filter key {key:?}")));
    }
    Ok(EntryFilter { key, value: v.trim().to_string() })
}

impl EntryFilter {
    pub fn matches(&self, e: &CatalogEntry) -> bool {
        match self.key.as_str() {
            "name" => e.name == self.value,
            "kind" => e.kind().to_string() == self.value,
            "degree" => e.degree().is_some_and(|d| d.to_string() == self.value),
            "field" => match &e.field {
                None => self.value == "Q",
                Some(f) => f.minpoly.replace(' ', "") == self.value.replace(' ', ""),
            },
            _ => false,
        }
    }
}

/// Loads and runs every entry of `dir`; schema and reference errors abort, claim failures do not.
pub fn run_catalog(dir: &Path, filter: Option<&EntryFilter>, opts: &RunOptions) -> Result<Vec<VerificationReport>> {
    let entries = load_dir(dir)?;
    Ok(run_entries(&entries, filter, opts))
}

/// Runs entries in parallel; the result is ordered by entry name.
pub fn run_entries(entries: &[CatalogEntry], filter: Option<&EntryFilter>, opts: &RunOptions) -> Vec<VerificationReport> {
    let selected: Vec<&CatalogEntry> = entries.iter().filter(|e| filter.map_or(true, |f| f.matches(e))).collect();
    let mut reports: Vec<VerificationReport> = selected.par_iter().map(|e| run_entry(e, opts)).collect();
    reports.sort_by(|a, b| a.entry.cmp(&b.entry));
    reports
}

pub fn run_entry(e: &CatalogEntry, opts: &RunOptions) -> VerificationReport {
    let start = Instant::now();
    let mut rep = VerificationReport::new(e.name.clone());
    if let Err(err) = replay(e, opts, &mut rep) {
        rep.check("evaluation", false, err.to_string());
    }
    rep.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    rep
}

/// True if a failed check came from running out of floating-point precision.
pub fn precision_failure(r: &VerificationReport) -> bool {
    r.failures().any(|c| c.detail.starts_with("precision error"))
}

fn replay(e: &CatalogEntry, opts: &RunOptions, rep: &mut VerificationReport) -> Result<()> {
    let field = e.build_field()?;
    if let Some(claimed) = &e.expected.field {
        check_field_claim(&field, claimed, rep)?;
    }
    match &e.payload {
        Payload::Genus0(_) => {
            let g0 = build_genus0(e, &field)?;
            rep.absorb("", verify_belyi0(g0.map())?.to_report(&e.name));
            check_passport(&e.expected, g0.passport(), rep)?;
            check_degree(&e.expected, g0.degree(), rep);
            if wants_numeric(e, opts, g0.degree()) {
                numeric_checks(e, &field, MapRef::from(&g0), g0.passport(), 0, opts, rep)?;
            }
        }
        Payload::Curve(p) => {
            let c = p.curve.build(&field)?;
            rep.check("genus 1", c.genus() == 1, format!("genus {}", c.genus()));
            let j = c.j_invariant()?;
            check_j(&e.expected, &c, rep)?;
            for other in &p.isomorphic_to {
                let o = other.build(&field)?;
                let jo = o.j_invariant()?;
                rep.check(format!("isomorphic to {o}"), jo == j && o.genus() == 1, format!("j = {j} vs {jo}"));
            }
        }
        Payload::Genus1Cover(_) | Payload::Genus1Explicit(_) | Payload::Genus1IsogenyComposite(_) => {
            let m = build_genus1(e, &field)?;
            genus1_checks(e, &field, &m, opts, rep)?;
        }
        Payload::Degree3Cover(p) => {
            let d3 = build_degree3(p, &field)?;
            rep.absorb("", psi2_critical_report(&d3, &e.name)?);
            if p.then.is_some() {
                let m = build_genus1(e, &field)?;
                genus1_checks(e, &field, &m, opts, rep)?;
            } else {
                check_j(&e.expected, &d3.curve, rep)?;
            }
        }
        Payload::Isogeny(p) => isogeny_checks(e, p, &field, rep)?,
        Payload::Transformation(p) => {
            let src = p.source.build(&field)?;
            let tgt = p.target.build(&field)?;
            let t = CurveTransformation::new(src, tgt.clone(), ffelem(&tgt, &p.x)?, ffelem(&tgt, &p.y)?)?;
            let ok = t.verify()?;
            let detail = if ok { "source equation vanishes on the target".to_string() } else { format!("residual {}", t.residual()?) };
            if p.holds {
                rep.check("substitution maps target onto source", ok, detail);
            } else {
                rep.check("substitution is rejected", !ok, detail);
            }
        }
        Payload::HpgIdentity(p) => hpg_checks(p, opts, rep)?,
        Payload::TwoDescent(p) => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(p.seed);
            let mut done = 0;
            while done < p.samples {
                let a = FieldElement::from_rational(&field, rat(rng.gen_range(-40..40), rng.gen_range(1..9)));
                let b = FieldElement::from_rational(&field, rat(rng.gen_range(-40..40), rng.gen_range(1..9)));
                let disc = &(&a * &a) - &(&FieldElement::from_int(&field, 4) * &b);
                if b.is_zero() || disc.is_zero() {
                    continue;
                }
                let r = two_descent_report(&a, &b)?;
                rep.check(format!("a={a}, b={b}"), r.passed(), r.checks.iter().map(|c| c.detail.as_str()).collect::<Vec<_>>().join("; "));
                done += 1;
            }
        }
    }
    Ok(())
}

fn wants_numeric(e: &CatalogEntry, opts: &RunOptions, degree: usize) -> bool {
    opts.numeric && degree <= opts.numeric_max_degree && !matches!(e.kind(), EntryKind::Curve)
}

/// Makes sure a dependency is expressed over the consumer's field.
fn compatible(dep: &CatalogEntry, field: &Field) -> Result<()> {
    match &dep.field {
        None => Ok(()),
        Some(spec) => {
            let built = spec.build()?;
            if &built == field {
                Ok(())
            } else {
                Err(Error::FieldMismatch(format!("{} is defined over a different field", dep.name)))
            }
        }
    }
}

pub(crate) fn build_genus0(e: &CatalogEntry, field: &Field) -> Result<Genus0BelyiMap> {
    match &e.payload {
        Payload::Genus0(p) => Genus0BelyiMap::new(ratfun(field, &p.map)?),
        _ => Err(Error::InvalidInput(format!("{} is not a genus-0 entry", e.name))),
    }
}

fn build_degree3(p: &Degree3Payload, field: &Field) -> Result<DegreeThreeCover> {
    let param = |s: &Option<String>, what: &str| -> Result<FieldElement> {
        let s = s.as_deref().ok_or_else(|| Error::InvalidInput(format!("missing parameter {what}")))?;
        parse_field_element(field, s)
    };
    match p.family {
        Degree3Family::Psi1 => make_psi1(&param(&p.u, "u")?),
        Degree3Family::Psi2 => make_psi2(&param(&p.a, "a")?, &param(&p.b_sqrt, "b_sqrt")?),
    }
}

pub(crate) fn build_genus1(e: &CatalogEntry, field: &Field) -> Result<Genus1BelyiMap> {
    match &e.payload {
        Payload::Genus1Cover(p) => {
            let dep = e.dep(&p.genus0)?;
            compatible(dep, field)?;
            let g0 = build_genus0(dep, field)?;
            match (&p.cover, &p.curve, &p.inner) {
                (Some(cover), None, None) => compose_with_cover(&g0, &CoverSpec::new(cover.n, parse_poly(field, "x", &cover.f)?)),
                (None, Some(curve), Some(inner)) => {
                    let c = curve.build(field)?;
                    let h = ffelem(&c, inner)?;
                    compose_genus0_after(&g0, &c, &h)
                }
                _ => Err(Error::InvalidInput(format!("{}: give either cover, or curve with inner", e.name))),
            }
        }
        Payload::Genus1Explicit(p) => {
            let c = p.curve.build(field)?;
            let h = ffelem(&c, &p.value)?;
            Genus1BelyiMap::new(c, h, Provenance::Explicit)
        }
        Payload::Genus1IsogenyComposite(p) => {
            let base = e.dep(&p.base)?;
            let iso = e.dep(&p.isogeny)?;
            compatible(base, field)?;
            compatible(iso, field)?;
            let base = build_genus1(base, field)?;
            let iso = match &iso.payload {
                Payload::Isogeny(ip) => build_isogeny(ip, field)?,
                _ => return Err(Error::InvalidInput(format!("{} is not an isogeny entry", iso.name))),
            };
            compose_isogeny(&base, &iso)
        }
        Payload::Degree3Cover(p) => {
            let d3 = build_degree3(p, field)?;
            let then = p.then.as_deref().ok_or_else(|| Error::InvalidInput(format!("{} has no genus-0 map to follow", e.name)))?;
            let dep = e.dep(then)?;
            compatible(dep, field)?;
            compose_genus0_after(&build_genus0(dep, field)?, &d3.curve, &d3.value)
        }
        _ => Err(Error::InvalidInput(format!("{} is not a genus-1 map entry", e.name))),
    }
}

fn build_isogeny(p: &IsogenyPayload, field: &Field) -> Result<IsogenyMap> {
    let src = p.source.build(field)?;
    let tgt = p.target.build(field)?;
    let xm = ffelem(&src, &p.x_map)?;
    if !xm.is_x_only() {
        return Err(Error::InvalidInput(format!("x-component {} depends on y", p.x_map)));
    }
    let r = match &p.y_map {
        None => None,
        Some(s) => {
            let ym = ffelem(&src, s)?;
            let only_linear = ym.comps().iter().enumerate().all(|(i, c)| i == 1 || c.is_zero());
            if src.n() < 2 || !only_linear {
                return Err(Error::InvalidInput(format!("y-component {s} is not y times a function of x")));
            }
            Some(ym.comp(1).clone())
        }
    };
    IsogenyMap::new(src, tgt, xm.comp(0).clone(), r, p.degree)
}

fn isogeny_checks(e: &CatalogEntry, p: &IsogenyPayload, field: &Field, rep: &mut VerificationReport) -> Result<()> {
    let iso = build_isogeny(p, field)?;
    for (what, c) in [("source", &iso.source), ("target", &iso.target)] {
        rep.check(format!("{what} has genus 1"), c.genus() == 1, c.to_string());
    }
    if iso.r.is_some() {
        rep.absorb("", verify_isogeny_full(&iso, &e.name)?);
    } else {
        let v = verify_isogeny_xonly(iso.source.f(), iso.target.f(), &iso.u, iso.source.n())?;
        let detail = match (&v.c, &v.r) {
            (Some(c), Some(r)) => format!("c = {c}, R = {r}; {}", v.note),
            _ => v.note.clone(),
        };
        rep.check("g∘u / f is c·Rⁿ", v.flag, detail);
        if matches!(v.root, RootStatus::Undetermined) && v.flag {
            rep.skip("c is an n-th power", v.note.clone());
        }
        rep.check("∞ ↦ ∞", iso.fixes_infinity(), format!("u = {}", iso.u));
        let d = iso.x_map_degree();
        rep.check("degree", d == iso.degree, format!("stated {}, x-map degree {d}", iso.degree));
    }
    if let Some(d) = e.expected.degree {
        rep.check("expected degree", d == iso.degree, format!("{d} vs {}", iso.degree));
    }
    Ok(())
}

fn genus1_checks(e: &CatalogEntry, field: &Field, m: &Genus1BelyiMap, opts: &RunOptions, rep: &mut VerificationReport) -> Result<()> {
    let p = m.passport();
    let d = m.degree();
    rep.check("Riemann–Hurwitz Σ(e−1) = 2D", p.ramification_total() == 2 * d, format!("Σ(e−1) = {}, D = {d}", p.ramification_total()));
    check_passport(&e.expected, p, rep)?;
    check_degree(&e.expected, d, rep);
    check_j(&e.expected, m.curve(), rep)?;
    if let Payload::Genus1Cover(cp) = &e.payload {
        if cp.cover.is_some() {
            let g0 = build_genus0(e.dep(&cp.genus0)?, field)?;
            let marks = cover_marks(&g0, m.curve())?;
            let predicted = predict_passport(g0.passport(), m.curve().n(), &marks)?;
            rep.check("lifting rule agrees with divisor count", &predicted == p, format!("predicted {predicted}"));
        }
    }
    if wants_numeric(e, opts, d) {
        numeric_checks(e, field, MapRef::from(m), p, 1, opts, rep)?;
    }
    Ok(())
}

fn numeric_checks(
    e: &CatalogEntry,
    field: &Field,
    map: MapRef<'_>,
    exact: &Passport,
    genus: i64,
    opts: &RunOptions,
    rep: &mut VerificationReport,
) -> Result<()> {
    let triple = match permutation_triple(map, &opts.settings) {
        Ok(t) => t,
        Err(err) => {
            rep.check("numeric monodromy", false, err.to_string());
            return Ok(());
        }
    };
    let tp = triple.passport();
    rep.check("numeric cycle types equal exact passport", &tp == exact, format!("σ-cycle types {tp}"));
    let g = genus_from_triple(&triple);
    rep.check("genus from triple", g == genus, format!("genus {g}"));
    if let Some(other) = &e.expected.distinct_dessin_from {
        let dep = e.dep(other)?;
        compatible(dep, field)?;
        let t2 = dep_triple(dep, field, opts)?;
        rep.check(
            format!("dessin differs from {other}"),
            t2.passport() == tp && !triples_equivalent(&triple, &t2),
            format!("passports {tp} and {}", t2.passport()),
        );
    }
    Ok(())
}

/// The Belyi map an entry describes, built over the entry's field.
#[derive(Debug, Clone)]
pub enum EntryMap {
    Genus0(Genus0BelyiMap),
    Genus1(Genus1BelyiMap),
}

impl EntryMap {
    pub fn passport(&self) -> &Passport {
        match self {
            EntryMap::Genus0(m) => m.passport(),
            EntryMap::Genus1(m) => m.passport(),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            EntryMap::Genus0(m) => m.degree(),
            EntryMap::Genus1(m) => m.degree(),
        }
    }

    pub fn genus(&self) -> i64 {
        match self {
            EntryMap::Genus0(_) => 0,
            EntryMap::Genus1(_) => 1,
        }
    }

    pub fn triple(&self, settings: &NumericSettings) -> Result<PermutationTriple> {
        match self {
            EntryMap::Genus0(m) => permutation_triple(m, settings),
            EntryMap::Genus1(m) => permutation_triple(m, settings),
        }
    }
}

/// Builds the map of a resolved genus-0 or genus-1 entry.
pub fn entry_map(e: &CatalogEntry) -> Result<EntryMap> {
    let field = e.build_field()?;
    match e.kind() {
        EntryKind::Genus0 => Ok(EntryMap::Genus0(build_genus0(e, &field)?)),
        EntryKind::Genus1Cover | EntryKind::Genus1Explicit | EntryKind::Genus1IsogenyComposite => {
            Ok(EntryMap::Genus1(build_genus1(e, &field)?))
        }
        EntryKind::Degree3Cover if matches!(&e.payload, Payload::Degree3Cover(p) if p.then.is_some()) => {
            Ok(EntryMap::Genus1(build_genus1(e, &field)?))
        }
        k => Err(Error::InvalidInput(format!("{} is a {k} entry, not a Belyi map", e.name))),
    }
}

fn dep_triple(dep: &CatalogEntry, field: &Field, opts: &RunOptions) -> Result<PermutationTriple> {
    match dep.kind() {
        EntryKind::Genus0 => permutation_triple(&build_genus0(dep, field)?, &opts.settings),
        _ => permutation_triple(&build_genus1(dep, field)?, &opts.settings),
    }
}

fn check_passport(exp: &Expected, computed: &Passport, rep: &mut VerificationReport) -> Result<()> {
    let Some(s) = &exp.passport else { return Ok(()) };
    let stated: Passport = s.parse()?;
    if &stated == computed {
        rep.check("passport", true, format!("{computed}"));
        return Ok(());
    }
    if let Some([a, b]) = &exp.passport_relabel {
        let (a, b) = (fiber_name(a)?, fiber_name(b)?);
        let swapped = computed.swapped(a, b);
        rep.check(
            "passport",
            swapped == stated,
            format!("computed {computed}; stated {stated} after exchanging the {a} and {b} fibers"),
        );
        return Ok(());
    }
    rep.check("passport", false, format!("computed {computed}, stated {stated}"));
    Ok(())
}

fn fiber_name(s: &str) -> Result<BelyiValue> {
    match s {
        "inf" | "∞" => Ok(BelyiValue::Infinity),
        "0" => Ok(BelyiValue::Zero),
        "1" => Ok(BelyiValue::One),
        _ => Err(Error::InvalidInput(format!("unknown fiber {s:?}"))),
    }
}

fn check_degree(exp: &Expected, d: usize, rep: &mut VerificationReport) {
    if let Some(stated) = exp.degree {
        rep.check("degree", stated == d, format!("computed {d}, stated {stated}"));
    }
}

fn check_j(exp: &Expected, c: &SuperellipticCurve, rep: &mut VerificationReport) -> Result<()> {
    let Some(s) = &exp.j else { return Ok(()) };
    let stated = parse_field_element(c.field(), s)?;
    let j = c.j_invariant()?;
    rep.check("j-invariant", j == stated, format!("computed {j}, stated {s}"));
    Ok(())
}

/// Same polynomial, or for a different defining polynomial of the same degree, discriminants
/// that agree up to a rational square (necessary for the fields to coincide).
fn check_field_claim(field: &Field, claimed: &str, rep: &mut VerificationReport) -> Result<()> {
    let q = crate::exactnum::NumberField::rationals();
    let gen = field.generator_name().to_string();
    let p = parse_poly(&q, &gen, claimed).or_else(|_| {
        let var: String = claimed.chars().skip_while(|c| !c.is_alphabetic()).take_while(|c| c.is_alphanumeric()).collect();
        parse_poly(&q, &var, claimed)
    })?;
    let own: Vec<_> = field.minpoly().to_vec();
    let lead = p.coeff(p.deg0()).as_rational().expect("rational");
    let monic: Vec<_> = p.coeffs().iter().map(|c| c.as_rational().expect("rational") / &lead).collect();
    if monic == own {
        rep.check("field of definition", true, format!("generator satisfies {claimed}"));
        return Ok(());
    }
    let own_poly = crate::polyalg::Polynomial::new(q.clone(), own.iter().map(|c| FieldElement::from_rational(&q, c.clone())).collect());
    let (d1, d2) = (discriminant(&p)?, discriminant(&own_poly)?);
    let ratio = d1.try_div(&d2)?.as_rational().expect("rational");
    let square = crate::exactnum::rational_nth_root(&ratio, 2).is_some();
    rep.check(
        "field of definition (discriminants agree up to squares)",
        p.deg0() == own_poly.deg0() && square,
        format!("disc {claimed} = {d1}, disc of the entry field = {d2}"),
    );
    Ok(())
}

fn hpg_checks(p: &HpgPayload, opts: &RunOptions, rep: &mut VerificationReport) -> Result<()> {
    let precision = opts.settings.precision;
    match p.check {
        HpgCheck::Degree5 => {
            let samples = default_degree5_samples();
            let check = verify_degree5_identity(&samples, precision);
            rep.check("no sample rejected", check.rejected.is_empty(), format!("{} rejected of {}", check.rejected.len(), samples.len()));
            let r = check.max_residual();
            rep.check("max residual", r < p.tolerance, format!("{r:.3e} < {:.0e} over {} samples", p.tolerance, check.accepted.len()));
        }
        HpgCheck::Quadrature => {
            let m = p.m.unwrap_or(4);
            let n = p.samples.unwrap_or(20);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(p.seed.unwrap_or(0));
            let mut worst: f64 = 0.0;
            for _ in 0..n {
                let z = Complex64::from_polar(rng.gen_range(0.05..0.5), rng.gen_range(-3.0..3.0));
                let params = HpgParams::new(rat(1, 2), rat(1, m as i64), rat(m as i64 + 1, m as i64), z)?;
                let s = hpg2f1(&params, precision)?;
                let q = elliptic_integral_form(m, z)?;
                worst = worst.max((s - q).norm());
            }
            rep.check("series equals quadrature", worst < p.tolerance, format!("max |Δ| = {worst:.3e} < {:.0e} over {n} samples", p.tolerance));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{CurveSpec, Genus0Payload, Genus1CoverPayload};

    fn g0(name: &str, map: &str, passport: &str) -> CatalogEntry {
        let mut e = CatalogEntry::new(name, Payload::Genus0(Genus0Payload { map: map.into() }));
        e.expected.passport = Some(passport.into());
        e
    }

    #[test]
    fn filters() {
        let mut e = g0("phi1", "(x^3+1)^2/(4x^3)", "3^2/2^3/2^3");
        e.expected.degree = Some(6);
        assert!(parse_filter("degree=6").unwrap().matches(&e));
        assert!(!parse_filter("degree=12").unwrap().matches(&e));
        assert!(parse_filter("kind=genus0").unwrap().matches(&e));
        assert!(parse_filter("field=Q").unwrap().matches(&e));
        assert!(parse_filter("colour=red").is_err());
        assert!(parse_filter("degree").is_err());
    }

    #[test]
    fn wrong_passport_fails_and_relabel_passes() {
        let opts = RunOptions::default();
        let e = g0("phi1", "(x^3+1)^2/(4x^3)", "2^3/3^2/2^3");
        assert!(!run_entry(&e, &opts).passed());
        let mut e = e;
        e.expected.passport_relabel = Some(["inf".into(), "0".into()]);
        let r = run_entry(&e, &opts);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn missing_dependency_is_a_failed_check() {
        let e = CatalogEntry::new(
            "orphan",
            Payload::Genus1Cover(Genus1CoverPayload { genus0: "nowhere".into(), cover: Some(CurveSpec::new(2, "x^3+1")), curve: None, inner: None }),
        );
        let r = run_entry(&e, &RunOptions::default());
        assert!(!r.passed());
        assert!(r.failures().any(|c| c.detail.contains("missing dependency")));
    }

    #[test]
    fn field_claims() {
        let mut rep = VerificationReport::new("t");
        let k = crate::exactnum::NumberField::new(vec![rat(-7, 1), rat(0, 1), rat(1, 1)], "r").unwrap();
        check_field_claim(&k, "r^2-7", &mut rep).unwrap();
        check_field_claim(&k, "t^2-28", &mut rep).unwrap();
        assert!(rep.passed(), "{rep}");
        check_field_claim(&k, "t^2-3", &mut rep).unwrap();
        assert!(!rep.passed());
    }
}
