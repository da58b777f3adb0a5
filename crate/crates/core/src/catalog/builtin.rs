//! The shipped catalog. `export_builtin` writes it to disk as one JSON file per entry.

use std::path::Path;

use super::{
    CatalogEntry, CurvePayload, CurveSpec, Degree3Family, Degree3Payload, FieldSpec, Genus0Payload, Genus1CoverPayload,
    Genus1ExplicitPayload, HpgCheck, HpgPayload, IsogenyCompositePayload, IsogenyPayload, Payload, TransformationPayload,
    TwoDescentPayload,
};
use crate::error::Result;

type FieldDef = (&'static str, &'static str);

const QI: FieldDef = ("i", "i^2+1");
const Q_SQRT_M2: FieldDef = ("s", "s^2+2");
const Q_SQRT_M3: FieldDef = ("s", "s^2+3");
const Q_SQRT_M15: FieldDef = ("s", "s^2+15");
const Q_OMEGA: FieldDef = ("w", "w^2+w+1");
const Q_SQRT2: FieldDef = ("r", "r^2-2");
const Q_SQRT3: FieldDef = ("r", "r^2-3");
const Q_SQRT5: FieldDef = ("r", "r^2-5");
const Q_SQRT7: FieldDef = ("r", "r^2-7");
const Q_SQRT10: FieldDef = ("r", "r^2-10");
const Q_XI: FieldDef = ("xi", "xi^3-xi^2+5xi+15");
/// `λ` with `7λ³ − 14λ² + 63λ − 108 = 0`.
const Q_LAMBDA: FieldDef = ("l", "l^3-2l^2+9l-108/7");
/// `β` with `β² = 2√7 − 28`, so `√7 = (β² + 28)/2`.
const Q_BETA: FieldDef = ("b", "b^4+56b^2+756");
/// `t = √(3√3 − 5)`, so `√3 = (t² + 5)/3`.
const Q_T: FieldDef = ("t", "t^4+10t^2-2");

const SQRT7_IN_BETA: &str = "((b^2+28)/2)";

struct B(CatalogEntry);

impl B {
    fn over(mut self, f: FieldDef) -> Self {
        self.0.field = Some(FieldSpec { generator: f.0.into(), minpoly: f.1.into() });
        self
    }
    fn passport(mut self, s: &str) -> Self {
        self.0.expected.passport = Some(s.into());
        self
    }
    fn relabel(mut self, a: &str, b: &str) -> Self {
        self.0.expected.passport_relabel = Some([a.into(), b.into()]);
        self
    }
    fn j(mut self, s: &str) -> Self {
        self.0.expected.j = Some(s.into());
        self
    }
    fn degree(mut self, d: usize) -> Self {
        self.0.expected.degree = Some(d);
        self
    }
    fn field_claim(mut self, s: &str) -> Self {
        self.0.expected.field = Some(s.into());
        self
    }
    fn distinct_from(mut self, s: &str) -> Self {
        self.0.expected.distinct_dessin_from = Some(s.into());
        self
    }
    fn tiling(mut self, s: &str) -> Self {
        self.0.metadata.tiling_id = Some(s.into());
        self
    }
    fn theory(mut self, s: &str) -> Self {
        self.0.metadata.gauge_theory = Some(s.into());
        self
    }
    fn label(mut self, s: &str) -> Self {
        self.0.metadata.label = Some(s.into());
        self
    }
    fn note(mut self, s: &str) -> Self {
        self.0.metadata.note = Some(s.into());
        self
    }
}

fn c(n: usize, f: &str) -> CurveSpec {
    CurveSpec::new(n, f)
}

fn genus0(name: &str, map: &str) -> B {
    B(CatalogEntry::new(name, Payload::Genus0(Genus0Payload { map: map.into() })))
}

fn curve(name: &str, n: usize, f: &str, iso: &[(usize, &str)]) -> B {
    let isomorphic_to = iso.iter().map(|(n, f)| c(*n, f)).collect();
    B(CatalogEntry::new(name, Payload::Curve(CurvePayload { curve: c(n, f), isomorphic_to })))
}

fn cover(name: &str, g0: &str, n: usize, f: &str) -> B {
    B(CatalogEntry::new(
        name,
        Payload::Genus1Cover(Genus1CoverPayload { genus0: g0.into(), cover: Some(c(n, f)), curve: None, inner: None }),
    ))
}

fn after(name: &str, g0: &str, n: usize, f: &str, inner: &str) -> B {
    B(CatalogEntry::new(
        name,
        Payload::Genus1Cover(Genus1CoverPayload { genus0: g0.into(), cover: None, curve: Some(c(n, f)), inner: Some(inner.into()) }),
    ))
}

fn explicit(name: &str, n: usize, f: &str, value: &str) -> B {
    B(CatalogEntry::new(name, Payload::Genus1Explicit(Genus1ExplicitPayload { curve: c(n, f), value: value.into() })))
}

fn isogeny(name: &str, src: (usize, &str), tgt: (usize, &str), x_map: &str, y_map: Option<&str>, degree: usize) -> B {
    B(CatalogEntry::new(
        name,
        Payload::Isogeny(IsogenyPayload {
            source: c(src.0, src.1),
            target: c(tgt.0, tgt.1),
            x_map: x_map.into(),
            y_map: y_map.map(String::from),
            degree,
        }),
    ))
    .degree(degree)
}

fn iso_composite(name: &str, base: &str, iso: &str) -> B {
    B(CatalogEntry::new(
        name,
        Payload::Genus1IsogenyComposite(IsogenyCompositePayload { base: base.into(), isogeny: iso.into() }),
    ))
}

fn transformation(name: &str, src: (usize, &str), tgt: (usize, &str), x: &str, y: &str, holds: bool) -> B {
    B(CatalogEntry::new(
        name,
        Payload::Transformation(TransformationPayload { source: c(src.0, src.1), target: c(tgt.0, tgt.1), x: x.into(), y: y.into(), holds }),
    ))
}

fn psi2(name: &str, a: &str, b_sqrt: &str, then: Option<&str>) -> B {
    B(CatalogEntry::new(
        name,
        Payload::Degree3Cover(Degree3Payload {
            family: Degree3Family::Psi2,
            u: None,
            a: Some(a.into()),
            b_sqrt: Some(b_sqrt.into()),
            then: then.map(String::from),
        }),
    ))
}

fn hpg(name: &str, check: HpgCheck, m: Option<u32>, samples: Option<usize>, seed: Option<u64>, tolerance: f64) -> B {
    B(CatalogEntry::new(name, Payload::HpgIdentity(HpgPayload { check, m, samples, seed, tolerance })))
}

/// Replaces the generator `g` by `−g` (Galois conjugation in a quadratic field).
fn conj(s: &str, g: char) -> String {
    s.chars().map(|ch| if ch == g { "(-r)".replace('r', &g.to_string()) } else { ch.to_string() }).collect()
}

/// The quartic-to-cubic substitution for `y² = x⁴ + ax³ + bx² + cx + d`, as expressions on the cubic.
fn quartic_substitution(a: i64, b: i64, cc: i64, d: i64) -> (String, String, String) {
    let a2m4b = a * a - 4 * b;
    let b4 = a * cc - 4 * d;
    let b6 = a2m4b * d + cc * cc;
    let cubic = format!("x^3+({b})x^2+({b4})x+({b6})");
    let den = format!("(4x-({a2m4b}))");
    let x = format!("-(2y+({a})x+2({cc}))/{den}");
    let q = format!("(({a})y+3x^2+2({b})x+({a})({cc})+4({d}))");
    let y = format!("(8({cc})y-4x^3+4({b4})x+8({cc})^2+({a2m4b}){q})/{den}^2");
    (cubic, x, y)
}

#[allow(clippy::vec_init_then_push)]
pub fn builtin_entries() -> Vec<CatalogEntry> {
    let mut v: Vec<B> = Vec::new();

    // Genus-0 Belyi maps.
    v.push(genus0("phi1", "(x^3+1)^2/(4x^3)").passport("3^2/2^3/2^3").degree(6).label("comp1"));
    v.push(genus0("phi2", "-(x^2-4)^3/(27x^4)").passport("3^2/4 2/2^2 1^2").relabel("inf", "0").degree(6).label("phi28"));
    v.push(genus0("phi3", "x^3(x-2)^3/(2x-1)^3").passport("3^2/3^2/2^2 1^2").degree(6).label("comp33"));
    v.push(genus0("phi4", "-x^2(4x+5)^3/(5x+4)^3").passport("3 2/3 2/2^2 1").degree(5).label("deg10a"));
    v.push(genus0("phi5", "x^2(x+5)^3/(5x+1)^3").passport("3 2/3 2/3 1^2").degree(5).label("comp5"));
    v.push(
        genus0("map_c", "-(x+3)^3(x^2-x+2)^2/((x-3)^3(x^2+x+2)^2)").passport("2^2 3/2^2 3/2^2 3").degree(7).label("C"),
    );
    v.push(genus0("map_d", "-x^4(x-7)^3/(7x-1)^3").passport("4 3/4 3/1^4 3").degree(7).label("D"));
    v.push(
        genus0("map_e", "x^3(x^2+14(1-xi)x-7xi^2-70xi-245)^2/((14xi^2-180xi+90)(7x-4xi^2+4xi-8)^3)")
            .over(Q_XI)
            .passport("4 3/2^2 3/1^2 2 3")
            .degree(7)
            .label("E"),
    );
    v.push(
        genus0("map_f", "(x+4r+7)^3(x-3r+7)^4/((x-4r-7)^3(x+3r-7)^4)")
            .over(Q_SQRT7)
            .passport("4 3/4 3/2^2 1^3")
            .degree(7)
            .label("F"),
    );
    let map_f_beta = "(x+4r+7)^3(x-3r+7)^4/((x-4r-7)^3(x+3r-7)^4)".replace('r', SQRT7_IN_BETA);
    v.push(
        genus0("map_f_beta", &map_f_beta)
            .over(Q_BETA)
            .passport("4 3/4 3/2^2 1^3")
            .degree(7)
            .label("F")
            .note("map_f written over the quartic field that also contains the curve's branch point"),
    );
    v.push(genus0("map_g", "(x+9)^3(x^2-3x+4)^2/(x^3(x-7)^4)").passport("4 3/2^2 3/2^3 1").degree(7).label("G"));
    v.push(genus0("map_h", "-5(x^2-10)^4/(4x^5(x-8)^3)").passport("5 3/4^2/2^2 1^4").degree(8).label("16-1"));
    v.push(
        genus0("map_i", "125x^4(x^2-4x-2r-2)^2/((7r+25)(8x+3r-3)^3)")
            .over(Q_SQRT10)
            .passport("5 3/4 2^2/2^3 1^2")
            .degree(8)
            .label("16-2")
            .note("pole at x = (3 - 3√10)/8; with 2√10 in the linear factor the map is not Belyi"),
    );
    v.push(genus0("map_j", "(x^3+3x^2-3)^3/(27(x+1)^3(x+2)^3)").passport("3^3/3^3/1^3 3^2").degree(9).label("deg18a"));
    v.push(genus0("phi422", "x(x+4)^3/(4(2x-1)^3)").passport("3 1/3 1/2^2").degree(4).label("phi422"));
    v.push(
        genus0("map_deg5", "x(x-1-2i)^4/((1+2i)x-1)^4").over(QI).passport("4 1/4 1/2^2 1").degree(5).label("deg15"),
    );
    v.push(genus0("identity", "x").passport("1/1/1").degree(1));
    v.push(genus0("square", "x^2").passport("2/2/1^2").degree(2));
    v.push(genus0("cube", "x^3").passport("3/3/1^3").degree(3));
    v.push(genus0("fourth_power", "x^4").passport("4/4/1^4").degree(4));
    v.push(genus0("psi1_line", "(x^2+1)^2/(4x^2)").passport("2^2/2^2/2^2").degree(4).label("psi11"));
    v.push(genus0("psi2_line", "(x+1)^4/(16x^2)").passport("2^2/4/2 1^2").degree(4).label("psi12"));
    v.push(genus0("psi2_quartic_line", "(x^2-1)^2").passport("4/2^2/2 1^2").degree(4));
    v.push(
        genus0("psi3_line", "r/2 x^2(x+3r-3)^4/(3x+5r-9)^4").over(Q_SQRT3).passport("4 2/4 2/2^2 1^2").degree(6).label("isog1c"),
    );
    let isog28 = ["(x^2+4)/(4x)", "(x^2+6x+1)/(4x)", "(x^2+2x+9)/(4x)"];
    let isog34 = ["x(x^2-8x+4)", "x(x^2+10x+1)", "x(x^2-2x+9)"];
    let g0_passports = ["3^4/4^2 2^2/2^6", "3^2 6/4^2 2^2/2^5 1^2", "3^2 6/4^2 2^2/2^5 1^2"];
    for (k, u) in isog28.iter().enumerate() {
        let map = format!("-(({u})^2-4)^3/(27({u})^4)");
        v.push(genus0(&format!("phi2_isog_{}", k + 1), &map).passport(g0_passports[k]).relabel("inf", "0").degree(12).label("isog28"));
    }
    v.push(genus0("square_f_line", "(x^2+1)^4/(16x^4)").degree(8));
    v.push(genus0("square_f_quartic_line", "(x^4+1)^2/(4x^4)").degree(8));
    v.push(genus0("square_g_line", "-(x^2+6x+1)^2(x-1)^4/(64x^2(x+1)^4)").degree(8));
    v.push(genus0("square_g_quartic_line", "-(x^2+2x-1)^4/(64x^4)").degree(8));
    let map_h = "(17+12r)(x^2+(10-8r)x+1)^4/(256x^2(x-1)^4)";
    v.push(genus0("square_h_line", map_h).over(Q_SQRT2).degree(8));
    v.push(genus0("square_i_line", &conj(map_h, 'r')).over(Q_SQRT2).degree(8));
    let map_kl = "(9-4r)x^2(x^2-(5r+25)x-10r+25)^4/(r(5x^2+(15r-25)x-38r+85)^4)";
    v.push(genus0("square_k_line", map_kl).over(Q_SQRT5).degree(10).label("kl"));
    v.push(genus0("square_l_line", &conj(map_kl, 'r')).over(Q_SQRT5).degree(10).label("kl"));
    let map_j5 = "(x(x^2-1-2i)^2/((1+2i)x^2-1)^2)^2";
    v.push(genus0("square_j_line", map_j5).over(QI).degree(10).label("isogm2"));
    v.push(genus0("square_j_conj_line", &conj(map_j5, 'i')).over(QI).degree(10).label("isogm2"));

    // Genus-1 maps pulled back along superelliptic covers.
    v.push(
        cover("dp3_i", "phi1", 2, "x^3+1")
            .passport("3^2 6/4^3/2^6")
            .j("0")
            .degree(12)
            .tiling("Davey (3.28)")
            .theory("dP3(I)")
            .label("comp1"),
    );
    v.push(cover("phi2_ec28", "phi2", 2, "(x+1)(x-1)(x-2)").passport("3^2 6/4^3/2^6").relabel("inf", "0").j("28^3/9").degree(12).label("ec28"));
    v.push(
        cover("phi3_ec52", "phi3", 2, "x(x^2-4x+1)")
            .passport("3^2 6/3^2 6/2^6")
            .j("52^3/3")
            .degree(12)
            .tiling("Davey (3.32)")
            .label("ec52"),
    );
    v.push(
        cover("phi3_ec1728_a", "phi3", 2, "(x-2)(x^2-4x+1)")
            .passport("3^2 6/3^2 6/2^6")
            .j("1728")
            .degree(12)
            .distinct_from("phi3_ec52")
            .tiling("Davey (3.37)")
            .label("ec1728-1"),
    );
    v.push(
        cover("phi3_ec1728_b", "phi3", 2, "(x^2-4x+1)(x^2-x+1)")
            .passport("3^4/3^4/4^2 2^2")
            .j("1728")
            .degree(12)
            .theory("F0(II)")
            .label("ec1728-2"),
    );
    v.push(
        cover("phi4_ec10", "phi4", 2, "x(x+1)(x+(11+3s)/16)")
            .over(Q_SQRT_M15)
            .passport("3^2 4/3^2 4/2^3 4")
            .j("-108/5")
            .degree(10)
            .tiling("Davey (3.12)")
            .label("ellc10a"),
    );
    v.push(
        cover("phi5_ec10", "phi5", 2, "x(x^2+18x+1)")
            .passport("3^2 4/3^2 4/3^2 2^2")
            .j("4/5*321^3")
            .degree(10)
            .tiling("Davey (3.5)")
            .theory("L222(II)")
            .label("comp5"),
    );
    v.push(
        cover("case_c1", "map_c", 2, "(x^2+7)(x^2+x+2)")
            .passport("4^2 3^2/4^2 3^2/2^4 3^2")
            .relabel("0", "1")
            .j("4/49*57^3")
            .degree(14)
            .label("C")
            .note("computed passport has the 0- and 1-fibers exchanged relative to the stated one"),
    );
    v.push(cover("case_c2", "map_c", 2, "(x^2-x+2)(x^2+x+2)").passport("4^2 3^2/4^2 3^2/2^4 3^2").j("4/49*57^3").degree(14).label("C"));
    v.push(cover("case_d", "map_d", 2, "x^4-18x^3+90x^2-18x+1").passport("4^2 3^2/4^2 3^2/2^4 3^2").j("255^3").degree(14).label("D"));
    v.push(
        cover("case_e", "map_e", 2, "(x^2+14(1-xi)x-7xi^2-70xi-245)(x^2+(xi^2-18xi+13)x-8xi^2+8xi-144)")
            .over(Q_XI)
            .passport("4^2 3^2/4^2 3^2/2^4 3^2")
            .degree(14)
            .theory("L333(II) for the real embedding")
            .label("E"),
    );
    v.push(
        cover("case_f", "map_f_beta", 2, &format!("(x-b)(x^2+8{SQRT7_IN_BETA}-21)"))
            .over(Q_BETA)
            .passport("4^2 3^2/4^2 3^2/2^5 4")
            .degree(14)
            .theory("dP3(III) for the conjugate")
            .label("F"),
    );
    v.push(
        cover("case_g", "map_g", 2, "(x-l)(x^2-3x+4)")
            .over(Q_LAMBDA)
            .passport("4^2 3^2/4^2 3^2/2^5 4")
            .degree(14)
            .field_claim("eta^3+eta^2-2eta+6")
            .label("G"),
    );
    v.push(cover("case_h", "map_h", 2, "x^4-4x^3-8x^2+8x+20").passport("5^2 3^2/4^4/2^8").j("-5000").degree(16).label("16-1"));
    v.push(
        cover("case_i", "map_i", 2, "(x^2-4x-2r-2)(5x^2-(6r+10)x-4r-5)")
            .over(Q_SQRT10)
            .passport("5^2 3^2/4^4/2^8")
            .degree(16)
            .theory("Z^{3,1} for the conjugate")
            .label("16-2"),
    );
    v.push(
        cover("case_j", "map_j", 2, "(x^3-9x-9)(x+1-w)")
            .over(Q_OMEGA)
            .passport("3^6/3^6/2^3 3^2 6")
            .j("0")
            .degree(18)
            .theory("dP3(IV)")
            .label("deg18a"),
    );
    v.push(
        cover("case_j_cubic", "phi3", 3, "(x^2-4x+1)(x+w)")
            .over(Q_OMEGA)
            .passport("3^6/3^6/2^3 3^2 6")
            .degree(18)
            .theory("dP3(IV)")
            .label("deg18b"),
    );
    v.push(
        after("case_k", "phi422", 2, "(16x^3+(4s-5)x^2-(2s+14)x-2s-3)/3", "((1+2s)y-9x-s-3)/4")
            .over(Q_SQRT_M2)
            .passport("3^2 6/3^2 6/2^6")
            .degree(12)
            .tiling("Davey (3.35)")
            .label("ecK"),
    );
    v.push(
        after("case_l", "phi422", 2, "16x^3-(6s+9)x^2+(12s+6)x-2s+7", "y+(3s+3)x-s+3")
            .over(Q_SQRT_M2)
            .passport("3^4/3^4/4^2 2^2")
            .degree(12)
            .label("ecL")
            .note("substitution read without the unbalanced parenthesis"),
    );
    v.push(cover("j0_basic", "identity", 3, "x(x-1)").passport("3/3/3").j("0").degree(3).theory("C^3"));
    v.push(cover("j0_square", "square", 3, "(x-1)(x+1)").passport("6/2^3/3^2").degree(6));
    v.push(
        cover("j0_cube", "cube", 3, "x^3-1").passport("3^3/3^3/3^3").degree(9).tiling("Davey (3.2)").theory("C^3/Z3"),
    );
    v.push(cover("deg15", "map_deg5", 3, "x(x-1)").over(QI).passport("4^3 3/4^3 3/2^6 3").degree(15).label("deg15"));
    v.push(
        cover("psi1", "psi1_line", 2, "x^3+x")
            .passport("4^2/4^2/2^4")
            .j("1728")
            .degree(8)
            .tiling("Davey (2.5)")
            .theory("F0(I)")
            .label("psi11"),
    );
    v.push(cover("psi1_quartic", "fourth_power", 2, "x^4-1").passport("4^2/4^2/2^4").j("1728").degree(8));
    v.push(
        cover("psi2", "psi2_line", 2, "x(x^2+6x+1)")
            .passport("4^2/4^2/2^4")
            .j("66^3")
            .degree(8)
            .tiling("Davey (2.4)")
            .theory("L222(I)")
            .label("psi12"),
    );
    v.push(cover("psi2_quartic", "psi2_quartic_line", 2, "(x^2-1)(x^2-2)").passport("4^2/4^2/2^4").j("66^3").degree(8));
    let psi3_curve = "x(x^2+8r x-14r+24)";
    v.push(
        cover("psi3", "psi3_line", 2, psi3_curve)
            .over(Q_SQRT3)
            .passport("4^3/4^3/2^6")
            .degree(12)
            .tiling("Davey (3.26)")
            .theory("L333(I)")
            .label("isog1c"),
    );
    v.push(genus0("psi3_conj_line", &conj("r/2 x^2(x+3r-3)^4/(3x+5r-9)^4", 'r')).over(Q_SQRT3).passport("4 2/4 2/2^2 1^2").degree(6));
    v.push(
        cover("psi3_conj", "psi3_conj_line", 2, &conj(psi3_curve, 'r'))
            .over(Q_SQRT3)
            .passport("4^3/4^3/2^6")
            .degree(12)
            .tiling("Davey (3.27)")
            .theory("Y^{3,0}(I)"),
    );
    for (k, curve) in isog34.iter().enumerate() {
        v.push(
            cover(&format!("deg24_{}", k + 1), &format!("phi2_isog_{}", k + 1), 2, curve)
                .passport("3^4 6^2/4^6/2^12")
                .relabel("inf", "0")
                .degree(24)
                .label("isog34"),
        );
    }
    v.push(cover("square_f", "square_f_line", 2, "x^4+6x^2+1").passport("4^4/4^4/2^8").degree(16).theory("C/(Z2×Z2)"));
    v.push(cover("square_f_quartic", "square_f_quartic_line", 2, "x^4+1").passport("4^4/4^4/2^8").degree(16));
    v.push(cover("square_g", "square_g_line", 2, "x(x^2+6x+1)").passport("4^4/4^4/2^8").degree(16).theory("Y^{4,0}"));
    v.push(cover("square_g_quartic", "square_g_quartic_line", 2, "x^4+8x^3+18x^2-8x+1").passport("4^4/4^4/2^8").degree(16));
    let curve_h = "x(x^2+(66-48r)x+1)";
    v.push(cover("square_h", "square_h_line", 2, curve_h).over(Q_SQRT2).passport("4^4/4^4/2^8").degree(16).theory("C/Z4"));
    v.push(cover("square_i", "square_i_line", 2, &conj(curve_h, 'r')).over(Q_SQRT2).passport("4^4/4^4/2^8").degree(16).theory("L444"));
    let curve_kl = "x(x^2-(48r+120)x-9r+20)";
    v.push(
        cover("square_k", "square_k_line", 2, curve_kl).over(Q_SQRT5).passport("4^5/4^5/2^10").degree(20).theory("C/Z5(I)"),
    );
    v.push(
        cover("square_l", "square_l_line", 2, &conj(curve_kl, 'r'))
            .over(Q_SQRT5)
            .passport("4^5/4^5/2^10")
            .degree(20)
            .theory("C/Z5(II)"),
    );
    v.push(cover("square_j", "square_j_line", 2, "x^3-x").over(QI).passport("4^5/4^5/2^10").degree(20).theory("C/Z5(III)"));
    v.push(cover("square_j_conj", "square_j_conj_line", 2, "x^3-x").over(QI).passport("4^5/4^5/2^10").degree(20));

    // Explicit genus-1 maps.
    v.push(
        explicit("phi0", 2, "x^3+1", "(1+y)/2")
            .passport("3/3/3")
            .j("0")
            .degree(3)
            .tiling("Davey (1.1)")
            .theory("C^3")
            .label("ecj0"),
    );
    v.push(
        explicit("psi0", 2, "x^3-x", "x^2")
            .passport("4/4/2^2")
            .j("1728")
            .degree(4)
            .tiling("Davey (1.2)")
            .theory("conifold C"),
    );
    v.push(
        explicit("deg6", 2, "x(x^2+6x-3)", "1/2+y(x^2+3)/(16x^2)")
            .passport("3^2/3^2/3^2")
            .j("54000")
            .degree(6)
            .tiling("Davey (2.1)")
            .theory("C^2/Z2 × C")
            .label("deg6"),
    );

    // Isogenies.
    v.push(isogeny("isog_j0_deg2", (2, "x(x^2+6x-3)"), (2, "x^3+1"), "(x-1)(x+3)/(4x)", Some("y(x^2+3)/(8x^2)"), 2));
    for (k, (u, src)) in isog28.iter().zip(isog34.iter()).enumerate() {
        v.push(isogeny(&format!("isog28_{}", k + 1), (2, src), (2, "(x+1)(x-1)(x-2)"), u, None, 2).label("isog28"));
    }
    v.push(
        isogeny("isog_e1_a", (2, "x^3+x"), (2, "x^3-x"), "(x^2+1)/(2x)", Some("y(x^2-1)/(2r x^2)"), 2)
            .over(Q_SQRT2)
            .label("isog1a"),
    );
    v.push(isogeny("isog_e1_b", (2, "x(x^2+6x+1)"), (2, "x^3-x"), "(x+1)^2/(4x)", Some("y(x^2-1)/(8x^2)"), 2).label("isog1b"));
    v.push(
        isogeny(
            "isog_psi3",
            (2, psi3_curve),
            (2, "x^3-6r x"),
            "3x(x+3r-3)^2/(3x+5r-9)^2",
            Some("3r y(x+3r-3)(x^2+(2r-6)x-14r+24)/(3x+5r-9)^3"),
            3,
        )
        .over(Q_SQRT3),
    );
    v.push(
        isogeny("isog_e1_mult2", (2, "x^3-x"), (2, "x^3-x"), "(x^2+1)^2/(4(x^3-x))", Some("(x^2+1)(x^4-6x^2+1)/(8y^3)"), 4)
            .label("4iso"),
    );
    v.push(
        isogeny(
            "isog_e1_deg5",
            (2, "x^3-x"),
            (2, "x^3-x"),
            "x(x^2-1-2i)^2/((1+2i)x^2-1)^2",
            Some("y(x^2-1-2i)(x^4+(2+8i)x^2+1)/((1+2i)x^2-1)^3"),
            5,
        )
        .over(QI)
        .label("isogm2"),
    );
    v.push(isogeny("isog_j0_deg3", (2, "x^3+1"), (2, "x^3+1"), "-(x^3+4)/(3x^2)", Some("y(x^3-8)/(3s x^3)"), 3).over(Q_SQRT_M3));
    v.push(
        isogeny("isog_j0_deg3_alt", (2, "x^3+1"), (2, "x^3+1"), "-(y^2+3)/(3x^2)", Some("y(y^2-9)/(3s(y^2-1))"), 3).over(Q_SQRT_M3),
    );
    v.push(
        isogeny("isog_cubic_mult2", (3, "x(x-1)"), (3, "x(x-1)"), "-x(x-2)^3/(2x-1)^3", Some("y(x-2)(x+1)/(2x-1)^2"), 4).label("4isog"),
    );

    // Genus-1 maps composed with isogenies.
    v.push(iso_composite("deg6_via_isogeny", "phi0", "isog_j0_deg2").passport("3^2/3^2/3^2").degree(6).label("deg6"));
    v.push(iso_composite("psi1_via_isogeny", "psi0", "isog_e1_a").over(Q_SQRT2).passport("4^2/4^2/2^4").degree(8));
    v.push(iso_composite("psi2_via_isogeny", "psi0", "isog_e1_b").passport("4^2/4^2/2^4").degree(8));
    v.push(iso_composite("psi3_via_isogeny", "psi0_scaled", "isog_psi3").over(Q_SQRT3).passport("4^3/4^3/2^6").degree(12));
    v.push(
        explicit("psi0_scaled", 2, "x^3-6r x", "x^2/(6r)")
            .over(Q_SQRT3)
            .passport("4/4/2^2")
            .j("1728")
            .degree(4)
            .note("Ψ₀ on the rescaled curve Y² = X³ − 6√3·X"),
    );
    v.push(iso_composite("square_mult2", "psi0", "isog_e1_mult2").passport("4^4/4^4/2^8").degree(16));
    v.push(iso_composite("square_deg5", "psi0", "isog_e1_deg5").over(QI).passport("4^5/4^5/2^10").degree(20));
    v.push(iso_composite("j0_deg3_composite", "phi0", "isog_j0_deg3").over(Q_SQRT_M3).passport("3^3/3^3/3^3").degree(9));
    v.push(
        iso_composite("j0_mult2_composite", "j0_basic", "isog_cubic_mult2")
            .passport("3^4/3^4/3^4")
            .degree(12)
            .theory("C^2/Z4 × C"),
    );

    // Degree-3 covers of the line by plane cubics.
    v.push(
        B(CatalogEntry::new(
            "psi1_family",
            Payload::Degree3Cover(Degree3Payload { family: Degree3Family::Psi1, u: Some("1".into()), a: None, b_sqrt: None, then: None }),
        ))
        .degree(3),
    );
    v.push(psi2("psi2_case_k", "7/2", "s", Some("phi422")).over(Q_SQRT_M2).passport("3^2 6/3^2 6/2^6").degree(12).label("cpsi2"));
    v.push(psi2("psi2_case_l", "-10", "s", Some("phi422")).over(Q_SQRT_M2).passport("3^4/3^4/4^2 2^2").degree(12).label("cpsi2"));
    v.push(
        psi2("psi2_case_m", "t^2+4", "2t", Some("phi422"))
            .over(Q_T)
            .passport("3^2 6/3^4/2^4 4")
            .relabel("inf", "0")
            .degree(12)
            .note("v1 = -4, v2 = 5 - 3√3"),
    );

    // Curves, j-invariants and isomorphisms.
    v.push(curve("curve_j0", 2, "x^3+1", &[]).j("0"));
    v.push(curve("curve_e1", 2, "x^3-x", &[(2, "x^4-1"), (2, "x^3+x"), (2, "(x-2)(x^2-4x+1)")]).j("1728"));
    v.push(curve("curve_ec28", 2, "(x+1)(x-1)(x-2)", &[]).j("28^3/9"));
    v.push(curve("curve_ec52", 2, "x(x^2-4x+1)", &[(2, "x(x^2-8x+4)")]).j("52^3/3"));
    v.push(curve("curve_isog34_1", 2, "x(x^2-8x+4)", &[(2, "(x^2+1)(x^2+3)")]).j("52^3/3"));
    v.push(curve("curve_isog34_2", 2, "x(x^2+10x+1)", &[(2, "(x^2+2)(x^2+3)")]).j("194^3/3"));
    v.push(curve("curve_isog34_3", 2, "x(x^2-2x+9)", &[(2, "(x^2-1)(x^2+2)")]).j("46^3/81"));
    v.push(curve("curve_ec10", 2, "x(x+1)(x+(11+3s)/16)", &[(2, "x(x^2+9x+24)")]).over(Q_SQRT_M15).j("-108/5"));
    v.push(curve("curve_phi5", 2, "x(x^2+18x+1)", &[]).j("4/5*321^3"));
    v.push(curve("curve_deg6", 2, "x(x^2+6x-3)", &[]).j("54000"));
    v.push(curve("curve_psi2", 2, "x(x^2+6x+1)", &[(2, "(x^2-1)(x^2-2)")]).j("66^3"));
    v.push(curve("curve_c", 2, "(x^2+7)(x^2+x+2)", &[(2, "(x^2-x+2)(x^2+x+2)"), (2, "x(x+1)(x-7)")]).j("4/49*57^3"));
    v.push(curve("curve_d", 2, "x^4-18x^3+90x^2-18x+1", &[(2, "x(x^2+42x-7)")]).j("255^3"));
    v.push(
        curve(
            "curve_e",
            2,
            "(x^2+14(1-xi)x-7xi^2-70xi-245)(x^2+(xi^2-18xi+13)x-8xi^2+8xi-144)",
            &[(2, "x(x^2+(44xi^2-125xi+415)x-6xi^2+4xi-50)")],
        )
        .over(Q_XI),
    );
    v.push(
        curve(
            "curve_f",
            2,
            &format!("(x-b)(x^2+8{SQRT7_IN_BETA}-21)"),
            &[(2, &format!("x(x^2+(10-2{SQRT7_IN_BETA})x+69-24{SQRT7_IN_BETA})"))],
        )
        .over(Q_BETA),
    );
    v.push(curve("curve_h", 2, "x^4-4x^3-8x^2+8x+20", &[(2, "x^3-75x+290"), (2, "x^3+x^2-8x+8")]).j("-5000"));
    v.push(
        curve("curve_i", 2, "(x^2-4x-2r-2)(5x^2-(6r+10)x-4r-5)", &[(2, "x(x^2+(22r+58)x-50r-125)")]).over(Q_SQRT10),
    );
    v.push(curve("curve_j", 2, "(x^3-9x-9)(x+1-w)", &[(2, "x^3+1+w")]).over(Q_OMEGA).j("0"));
    v.push(curve("curve_j0_cubic", 3, "x(x-1)", &[]).j("0"));

    // Coordinate changes between curve models.
    v.push(
        transformation("iso_case_j", (2, "(x^3-9x-9)(x+1-w)"), (2, "x^3+1+w"), "(w-1)(x+1+w)/(x+1)", "3w y/(x+1)^2", true)
            .over(Q_OMEGA)
            .note("x-component with the sign of the ω term corrected"),
    );
    v.push(
        transformation("iso_case_j_printed", (2, "(x^3-9x-9)(x+1-w)"), (2, "x^3+1+w"), "(w-1)(x+1-w)/(x+1)", "3w y/(x+1)^2", false)
            .over(Q_OMEGA)
            .note("x-component as printed; does not map the curves onto each other"),
    );
    v.push(
        transformation("iso_deg18b", (3, "(x^2-4x+1)(x+w)"), (2, "x^3+1+w"), "w(1-y)/(y+w+1)", "(1-w)x/(y+w+1)", true).over(Q_OMEGA),
    );
    let (cubic, qx, qy) = quartic_substitution(-18, 90, -18, 1);
    v.push(transformation("quartic_to_cubic_d", (2, "x^4-18x^3+90x^2-18x+1"), (2, &cubic), &qx, &qy, true).label("ec4to3"));
    v.push(transformation("iso_psi1_quartic", (2, "x^4-1"), (2, "x^3+x"), "y/(r x)", "(x^2-1)/(2x)", true).over(Q_SQRT2));
    v.push(transformation("iso_psi2_quartic", (2, "(x^2-1)(x^2-2)"), (2, "x(x^2+6x+1)"), "y/(2x)", "(x^2-1)/(4x)", true));

    // Hypergeometric identities and the 2-descent.
    v.push(hpg("hpg_degree5", HpgCheck::Degree5, None, None, None, 1e-10).label("hpg5"));
    v.push(hpg("hpg_quadrature_m4", HpgCheck::Quadrature, Some(4), Some(20), Some(415), 1e-9).label("F21"));
    v.push(hpg("hpg_quadrature_m6", HpgCheck::Quadrature, Some(6), Some(20), Some(416), 1e-9).label("elin6a"));
    v.push(B(CatalogEntry::new("two_descent", Payload::TwoDescent(TwoDescentPayload { samples: 10, seed: 7 }))).degree(2));

    let mut out: Vec<CatalogEntry> = v.into_iter().map(|b| b.0).collect();
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

/// Writes every builtin entry to `<dir>/<name>.json`; returns the number written.
pub fn export_builtin(dir: &Path) -> Result<usize> {
    std::fs::create_dir_all(dir)?;
    let entries = builtin_entries();
    for e in &entries {
        std::fs::write(dir.join(format!("{}.json", e.name)), e.to_json_string())?;
    }
    Ok(entries.len())
}
