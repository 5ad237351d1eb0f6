//! Parametric families of small ω-categories and complexes: disks, spheres,
//! ordinals, Θ₂ objects, orientals, and a handful of counterexamples.
//!
//! Where an entry carries both a presentation and a complex, the complex is
//! written down directly and equals the linearization of the presentation.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::adc::Adc;
use crate::polygraph::{CellExpr, PolyPresentation, PresentationBuilder};
use crate::zlin::IntVector;
use crate::Name;

pub const FAMILIES: [&str; 9] =
    ["disk", "sphere", "ordinal", "theta2", "oriental", "loop", "endo2cell", "square", "forestA"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters for `{family}`: {reason}")]
    BadParams { family: String, reason: String },
}

/// Verdicts the entry is known to have.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expected {
    pub strong_steiner: bool,
    pub atomic: Option<bool>,
    pub algebraically_loop_free: Option<bool>,
}

impl Expected {
    fn steiner() -> Self {
        Expected { strong_steiner: true, atomic: Some(true), algebraically_loop_free: Some(true) }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Vec<i64>,
    pub presentation: Option<PolyPresentation>,
    pub complex: Option<Adc>,
    pub expected: Expected,
    /// Named cells of interest, e.g. composites discussed alongside the
    /// example.
    pub expressions: Vec<(String, CellExpr)>,
    /// Conventional labels for generator names, where the entry has them.
    pub labels: BTreeMap<Name, Name>,
}

impl CatalogEntry {
    fn new(name: &str, params: &[i64], expected: Expected) -> Self {
        CatalogEntry {
            name: name.to_string(),
            params: params.to_vec(),
            presentation: None,
            complex: None,
            expected,
            expressions: Vec::new(),
            labels: BTreeMap::new(),
        }
    }

    pub fn expression(&self, name: &str) -> Option<&CellExpr> {
        self.expressions.iter().find(|(n, _)| n == name).map(|(_, e)| e)
    }

    /// The complex, or the linearization of the presentation.
    pub fn adc(&self) -> Adc {
        match (&self.complex, &self.presentation) {
            (Some(c), _) => c.clone(),
            (None, Some(p)) => p.lambda().clone(),
            (None, None) => Adc::new(),
        }
    }

    /// Generator name for a conventional label.
    pub fn by_label(&self, label: &str) -> Option<&Name> {
        self.labels.iter().find(|(_, l)| l.as_str() == label).map(|(n, _)| n)
    }
}

fn bad(family: &str, reason: impl Into<String>) -> CatalogError {
    CatalogError::BadParams { family: family.to_string(), reason: reason.into() }
}

fn one_param(family: &str, params: &[i64], min: i64) -> Result<i64, CatalogError> {
    match params {
        [n] if *n >= min => Ok(*n),
        [n] => Err(bad(family, format!("expected n >= {min}, got {n}"))),
        _ => Err(bad(family, format!("expected one parameter, got {}", params.len()))),
    }
}

fn no_params(family: &str, params: &[i64]) -> Result<(), CatalogError> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(bad(family, "takes no parameters"))
    }
}

/// Builds the entry `name` with `params`.
pub fn build(name: &str, params: &[i64]) -> Result<CatalogEntry, CatalogError> {
    match name {
        "disk" => Ok(disk(one_param(name, params, 0)? as usize)),
        "sphere" => Ok(sphere(one_param(name, params, -1)?)),
        "ordinal" => {
            let m = one_param(name, params, 0)? as usize;
            let mut e = theta2(&vec![0; m]);
            e.name = name.to_string();
            e.params = params.to_vec();
            Ok(e)
        }
        "theta2" => {
            let (m, ks) = params.split_first().ok_or_else(|| bad(name, "expected [m, k1, ..., km]"))?;
            if *m < 0 || ks.len() as i64 != *m || ks.iter().any(|&k| k < 0) {
                return Err(bad(name, "expected m >= 0 followed by m non-negative integers"));
            }
            let ks: Vec<usize> = ks.iter().map(|&k| k as usize).collect();
            Ok(theta2(&ks))
        }
        "oriental" => {
            let n = one_param(name, params, 0)?;
            if n > 12 {
                return Err(bad(name, "n above 12 is too large to build"));
            }
            Ok(oriental(n as usize))
        }
        "loop" => no_params(name, params).map(|()| loop_entry()),
        "endo2cell" => no_params(name, params).map(|()| endo2cell()),
        "square" => no_params(name, params).map(|()| square()),
        "forestA" => no_params(name, params).map(|()| forest_a()),
        _ => Err(CatalogError::UnknownFamily(name.to_string())),
    }
}

fn g(n: &str) -> CellExpr {
    CellExpr::gen(n)
}

fn v(terms: &[(&str, i64)]) -> IntVector {
    IntVector::from_terms(terms.iter().copied()).expect("small coefficients")
}

fn diff(plus: &str, minus: &str) -> IntVector {
    v(&[(plus, 1), (minus, -1)])
}

const VALID: &str = "catalog presentations are valid";

fn disk_generators(n: usize) -> (PresentationBuilder, Adc) {
    let mut b = PresentationBuilder::new();
    let mut c = Adc::new();
    for q in 0..n {
        for x in ["s", "t"] {
            let name = format!("{x}{q}");
            if q == 0 {
                b.add_point(name.as_str()).expect(VALID);
                c.add_point(name).expect(VALID);
            } else {
                let (s, t) = (format!("s{}", q - 1), format!("t{}", q - 1));
                b.add_cell(name.as_str(), g(&s), g(&t)).expect(VALID);
                c.add_cell(name, diff(&t, &s)).expect(VALID);
            }
        }
    }
    (b, c)
}

fn disk(n: usize) -> CatalogEntry {
    let (mut b, mut c) = disk_generators(n);
    if n == 0 {
        b.add_point("c").expect(VALID);
        c.add_point("c").expect(VALID);
    } else {
        let (s, t) = (format!("s{}", n - 1), format!("t{}", n - 1));
        b.add_cell("c", g(&s), g(&t)).expect(VALID);
        c.add_cell("c", diff(&t, &s)).expect(VALID);
    }
    let mut e = CatalogEntry::new("disk", &[n as i64], Expected::steiner());
    e.presentation = Some(b.build().expect(VALID));
    e.complex = Some(c);
    e
}

fn sphere(n: i64) -> CatalogEntry {
    let (b, c) = disk_generators((n + 1) as usize);
    let mut e = CatalogEntry::new("sphere", &[n], Expected::steiner());
    e.presentation = Some(b.build().expect(VALID));
    e.complex = Some(c);
    e
}

/// `Θ₂[m | k₁, …, k_m]`: objects `x0 … xm`, parallel 1-cells
/// `f{i}_0 … f{i}_{kᵢ}` from `x{i-1}` to `x{i}`, and 2-cells
/// `a{i}_{j}: f{i}_{j-1} ⇒ f{i}_{j}`.
fn theta2(ks: &[usize]) -> CatalogEntry {
    let m = ks.len();
    let mut b = PresentationBuilder::new();
    let mut c = Adc::new();
    for i in 0..=m {
        b.add_point(format!("x{i}")).expect(VALID);
        c.add_point(format!("x{i}")).expect(VALID);
    }
    for (i, &k) in (1..).zip(ks) {
        let (s, t) = (format!("x{}", i - 1), format!("x{i}"));
        for j in 0..=k {
            b.add_cell(format!("f{i}_{j}"), g(&s), g(&t)).expect(VALID);
            c.add_cell(format!("f{i}_{j}"), diff(&t, &s)).expect(VALID);
        }
    }
    for (i, &k) in (1..).zip(ks) {
        for j in 1..=k {
            let (s, t) = (format!("f{i}_{}", j - 1), format!("f{i}_{j}"));
            b.add_cell(format!("a{i}_{j}"), g(&s), g(&t)).expect(VALID);
            c.add_cell(format!("a{i}_{j}"), diff(&t, &s)).expect(VALID);
        }
    }
    let mut params = vec![m as i64];
    params.extend(ks.iter().map(|&k| k as i64));
    let mut e = CatalogEntry::new("theta2", &params, Expected::steiner());
    e.presentation = Some(b.build().expect(VALID));
    e.complex = Some(c);
    e
}

/// Name of the face with the given increasing vertices.
pub fn simplex_face_name(vertices: &[usize], n: usize) -> Name {
    let parts: Vec<String> = vertices.iter().map(usize::to_string).collect();
    Name::from(if n >= 10 { parts.join(".") } else { parts.concat() })
}

/// The simplex complex: basis the faces of the `n`-simplex, ordered by
/// dimension and then lexicographically, with alternating-sum boundary.
pub fn simplex_complex(n: usize) -> Adc {
    let mut faces: Vec<Vec<usize>> = (1u32..1 << (n + 1))
        .map(|mask| (0..=n).filter(|&i| mask & (1 << i) != 0).collect())
        .collect();
    faces.sort_by(|a: &Vec<usize>, b: &Vec<usize>| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut c = Adc::new();
    for f in &faces {
        let name = simplex_face_name(f, n);
        if f.len() == 1 {
            c.add_point(name).expect(VALID);
            continue;
        }
        let mut d = IntVector::zero();
        for i in 0..f.len() {
            let mut sub = f.clone();
            sub.remove(i);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            d.add_term(simplex_face_name(&sub, n), sign).expect("small coefficients");
        }
        c.add_cell(name, d).expect(VALID);
    }
    c
}

fn oriental(n: usize) -> CatalogEntry {
    let mut e = CatalogEntry::new("oriental", &[n as i64], Expected::steiner());
    e.complex = Some(simplex_complex(n));
    if n > 3 {
        return e;
    }
    let mut b = PresentationBuilder::new();
    for i in 0..=n {
        b.add_point(i.to_string()).expect(VALID);
    }
    for i in 0..=n {
        for j in i + 1..=n {
            b.add_cell(format!("{i}{j}"), g(&i.to_string()), g(&j.to_string())).expect(VALID);
        }
    }
    let triangles: Vec<(usize, usize, usize)> = (0..=n)
        .flat_map(|i| (i + 1..=n).flat_map(move |j| (j + 1..=n).map(move |k| (i, j, k))))
        .collect();
    for (i, j, k) in triangles {
        let src = g(&format!("{i}{k}"));
        let tgt = CellExpr::comp(0, g(&format!("{i}{j}")), g(&format!("{j}{k}")));
        b.add_cell(format!("{i}{j}{k}"), src, tgt).expect(VALID);
    }
    if n == 3 {
        // 03 ⇒ 02∗23 ⇒ (01∗12)∗23 and 03 ⇒ 01∗13 ⇒ 01∗(12∗23)
        let src = CellExpr::comp(1, g("023"), CellExpr::comp(0, g("012"), CellExpr::id(g("23"))));
        let tgt = CellExpr::comp(1, g("013"), CellExpr::comp(0, CellExpr::id(g("01")), g("123")));
        b.add_cell("0123", src, tgt).expect(VALID);
    }
    e.presentation = Some(b.build().expect(VALID));
    let labels: &[(&str, &str)] = match n {
        2 => &[("0", "a"), ("1", "b"), ("2", "c"), ("01", "f"), ("12", "g"), ("02", "h"), ("012", "α")],
        3 => &[
            ("0", "x"),
            ("1", "y"),
            ("2", "z"),
            ("3", "w"),
            ("01", "f"),
            ("12", "g"),
            ("23", "h"),
            ("02", "i"),
            ("13", "j"),
            ("03", "k"),
            ("023", "α"),
            ("012", "β"),
            ("013", "γ"),
            ("123", "δ"),
            ("0123", "Γ"),
        ],
        _ => &[],
    };
    e.labels = labels.iter().map(|&(a, b)| (Name::from(a), Name::from(b))).collect();
    if n == 3 {
        let beta_h = CellExpr::comp(0, g("012"), CellExpr::id(g("23")));
        e.expressions = vec![
            ("id2(f)".into(), CellExpr::id(g("01"))),
            ("id2(h)*0β".into(), beta_h.clone()),
            ("(id2(h)*0β)*1α".into(), CellExpr::comp(1, g("023"), beta_h)),
        ];
    }
    e
}

fn loop_entry() -> CatalogEntry {
    let mut b = PresentationBuilder::new();
    b.add_point("a").expect(VALID).add_point("b").expect(VALID);
    b.add_cell("f", g("a"), g("b")).expect(VALID);
    b.add_cell("g", g("b"), g("a")).expect(VALID);
    let mut c = Adc::new();
    c.add_point("a").expect(VALID);
    c.add_point("b").expect(VALID);
    c.add_cell("f", diff("b", "a")).expect(VALID);
    c.add_cell("g", diff("a", "b")).expect(VALID);
    let expected = Expected { strong_steiner: false, atomic: Some(true), algebraically_loop_free: Some(false) };
    let mut e = CatalogEntry::new("loop", &[], expected);
    e.presentation = Some(b.build().expect(VALID));
    e.complex = Some(c);
    e
}

/// One object `x` and a 2-cell `α` from its identity to itself.
fn endo2cell() -> CatalogEntry {
    let mut b = PresentationBuilder::new();
    b.add_point("x").expect(VALID);
    b.add_cell("α", CellExpr::id(g("x")), CellExpr::id(g("x"))).expect(VALID);
    let mut c = Adc::new();
    c.add_point("x").expect(VALID);
    c.add_generator("α", 2, IntVector::zero(), 0).expect(VALID);
    let expected = Expected { strong_steiner: false, atomic: Some(false), algebraically_loop_free: Some(true) };
    let mut e = CatalogEntry::new("endo2cell", &[], expected);
    e.presentation = Some(b.build().expect(VALID));
    e.complex = Some(c);
    e
}

/// `f: x → y`, parallel `g, h: y → z` and `α: f∗₀g ⇒ f∗₀h`.
fn square() -> CatalogEntry {
    let mut b = PresentationBuilder::new();
    for p in ["x", "y", "z"] {
        b.add_point(p).expect(VALID);
    }
    b.add_cell("f", g("x"), g("y")).expect(VALID);
    b.add_cell("g", g("y"), g("z")).expect(VALID);
    b.add_cell("h", g("y"), g("z")).expect(VALID);
    b.add_cell("α", CellExpr::comp(0, g("f"), g("g")), CellExpr::comp(0, g("f"), g("h"))).expect(VALID);
    let mut c = Adc::new();
    for p in ["x", "y", "z"] {
        c.add_point(p).expect(VALID);
    }
    c.add_cell("f", diff("y", "x")).expect(VALID);
    c.add_cell("g", diff("z", "y")).expect(VALID);
    c.add_cell("h", diff("z", "y")).expect(VALID);
    c.add_cell("α", diff("h", "g")).expect(VALID);
    let expected = Expected { strong_steiner: false, atomic: Some(false), algebraically_loop_free: Some(true) };
    let mut e = CatalogEntry::new("square", &[], expected);
    e.presentation = Some(b.build().expect(VALID));
    e.complex = Some(c);
    e.expressions = vec![("t1(α)".into(), CellExpr::comp(0, g("f"), g("h")))];
    e
}

/// Forest's 3-category: 1-cells `a, b, c: x → y` and `d, e, f: y → z`,
/// 2-cells `α, α′: a ⇒ b`, `β, β′: b ⇒ c`, `γ, γ′: d ⇒ e`,
/// `δ, δ′: e ⇒ f`, and 3-cells `A: α∗₀δ ⇛ α′∗₀δ′`, `B: β∗₀γ ⇛ β′∗₀γ′`.
///
/// The composites `H1` and `H2` are stored with whiskerings written as
/// composites with identities and n-ary composites nested to the right.
fn forest_a() -> CatalogEntry {
    let mut b = PresentationBuilder::new();
    let mut c = Adc::new();
    for p in ["x", "y", "z"] {
        b.add_point(p).expect(VALID);
        c.add_point(p).expect(VALID);
    }
    for (n, s, t) in [("a", "x", "y"), ("b", "x", "y"), ("c", "x", "y"), ("d", "y", "z"), ("e", "y", "z"), ("f", "y", "z")] {
        b.add_cell(n, g(s), g(t)).expect(VALID);
        c.add_cell(n, diff(t, s)).expect(VALID);
    }
    let twos = [
        ("α", "a", "b"),
        ("α′", "a", "b"),
        ("β", "b", "c"),
        ("β′", "b", "c"),
        ("γ", "d", "e"),
        ("γ′", "d", "e"),
        ("δ", "e", "f"),
        ("δ′", "e", "f"),
    ];
    for (n, s, t) in twos {
        b.add_cell(n, g(s), g(t)).expect(VALID);
        c.add_cell(n, diff(t, s)).expect(VALID);
    }
    let h = |l: &str, r: &str| CellExpr::comp(0, g(l), g(r));
    b.add_cell("A", h("α", "δ"), h("α′", "δ′")).expect(VALID);
    b.add_cell("B", h("β", "γ"), h("β′", "γ′")).expect(VALID);
    c.add_cell("A", v(&[("α′", 1), ("δ′", 1), ("α", -1), ("δ", -1)])).expect(VALID);
    c.add_cell("B", v(&[("β′", 1), ("γ′", 1), ("β", -1), ("γ", -1)])).expect(VALID);

    // Whiskers as 2-cells, then as identity 3-cells.
    let one_two = |one: &str, two: &str| CellExpr::comp(0, CellExpr::id(g(one)), g(two));
    let two_one = |two: &str, one: &str| CellExpr::comp(0, g(two), CellExpr::id(g(one)));
    let id3 = CellExpr::id;
    let stack = |top: CellExpr, mid: &str, bottom: CellExpr| CellExpr::comp_all(1, [id3(top), g(mid), id3(bottom)]);
    let h1 = CellExpr::comp(
        2,
        stack(one_two("a", "γ"), "A", two_one("β", "f")),
        stack(two_one("α′", "d"), "B", one_two("c", "δ′")),
    );
    let h2 = CellExpr::comp(
        2,
        stack(two_one("α", "d"), "B", one_two("c", "δ")),
        stack(one_two("a", "γ′"), "A", two_one("β′", "f")),
    );
    let expected = Expected { strong_steiner: false, atomic: Some(true), algebraically_loop_free: Some(false) };
    let mut e = CatalogEntry::new("forestA", &[], expected);
    e.presentation = Some(b.build().expect(VALID));
    e.complex = Some(c);
    e.expressions = vec![("H1".into(), h1), ("H2".into(), h2)];
    e
}

/// A representative set of small entries from every family.
pub fn standard_entries() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for n in 0..=4 {
        out.push(disk(n));
    }
    for n in -1..=3 {
        out.push(sphere(n));
    }
    for m in 0..=3 {
        out.push(build("ordinal", &[m]).expect(VALID));
    }
    for ks in [&[1usize][..], &[2, 0, 1], &[1, 1], &[0, 3]] {
        out.push(theta2(ks));
    }
    for n in 0..=3 {
        out.push(oriental(n));
    }
    out.extend([loop_entry(), endo2cell(), square(), forest_a()]);
    out
}
