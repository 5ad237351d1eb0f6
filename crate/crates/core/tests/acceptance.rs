//! Acceptance suite: one line per criterion, then a single assertion that
//! every criterion passed. All comparisons are exact; each criterion must
//! also finish within its time budget.

mod common;

use std::collections::BTreeSet;
use std::fmt::Display;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{laws, props};
use steiner_core::catalog::{build, simplex_complex, CatalogEntry};
use steiner_core::nu::{brute_force_nu, Sign};
use steiner_core::{decompose, enumerate_nu, verify_equivalence, Caps, CellExpr, IntVector, Name, NuTable, PolyPresentation};

const BUDGET: Duration = Duration::from_secs(60);
const RANDOM_PRESENTATIONS: u64 = 120;
const RANDOM_MATRICES: usize = 500;

type Outcome = Result<String, String>;

fn s(e: impl Display) -> String {
    e.to_string()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn entry(name: &str, params: &[i64]) -> Result<(CatalogEntry, PolyPresentation), String> {
    let e = build(name, params).map_err(s)?;
    let p = e.presentation.clone().ok_or_else(|| format!("{name} has no presentation"))?;
    Ok((e, p))
}

fn label(e: &CatalogEntry, l: &str) -> Result<Name, String> {
    e.by_label(l).cloned().ok_or_else(|| format!("no generator labelled {l}"))
}

fn names(ns: &[Name]) -> String {
    ns.iter().map(|n| n.as_str()).collect::<Vec<_>>().join(",")
}

fn triangle_total_order() -> Outcome {
    let (e, p) = entry("oriental", &[2])?;
    let chain = ["a", "h", "α", "f", "b", "g", "c"];
    let order: Vec<Name> = chain.iter().map(|l| label(&e, l)).collect::<Result<_, _>>()?;
    let expected: BTreeSet<(Name, Name)> = (0..order.len())
        .flat_map(|i| (i..order.len()).map(move |j| (i, j)))
        .map(|(i, j)| (order[i].clone(), order[j].clone()))
        .collect();
    let closure = p.preorder_report().map_err(s)?.full.closure();
    ensure(closure == expected, || format!("closure has {} pairs, expected {}", closure.len(), expected.len()))?;
    Ok(format!("closure is the total order {} ({} pairs)", chain.join(" ≤ "), closure.len()))
}

fn counterexamples() -> Outcome {
    let (_, lp) = entry("loop", &[])?;
    let cycle = lp.preorder_report().map_err(s)?.full_cycle.ok_or("loop has no cycle")?;
    ensure(names(&cycle) == "a,f,b,g", || format!("loop cycle {}", names(&cycle)))?;

    let (_, ep) = entry("endo2cell", &[])?;
    let r = ep.preorder_report().map_err(s)?;
    ensure(r.codim1_antisymmetric, || "endo-2-cell codimension-one preorder has a cycle".into())?;
    let ecycle = r.full_cycle.ok_or("endo-2-cell full preorder is antisymmetric")?;
    let on_cycle: BTreeSet<&str> = ecycle.iter().map(|n| n.as_str()).collect();
    ensure(on_cycle == BTreeSet::from(["x", "α"]), || format!("endo-2-cell cycle {}", names(&ecycle)))?;

    let (_, sp) = entry("square", &[])?;
    let v = sp.classify().map_err(s)?;
    let violation = v.atomicity_violation.as_ref().ok_or("square is atomic")?.to_string();
    ensure(violation == "atomicity violated at (α, 1): {f}", || violation.clone())?;
    ensure(v.strongly_loop_free_algebraic && !v.strongly_loop_free_categorical, || {
        format!("square algebraic {} categorical {}", v.strongly_loop_free_algebraic, v.strongly_loop_free_categorical)
    })?;
    let alpha = Name::from("α");
    let t = sp.face_expr(&CellExpr::Gen(alpha.clone()), 1, Sign::Plus).map_err(s)?;
    let pos = decompose(&sp.lambda().generator(&alpha).ok_or("no α")?.boundary).supp_pos;
    let face = sp.linearize(&t).map_err(s)?.support();
    ensure(pos == BTreeSet::from([Name::from("h")]), || format!("supp ∂⁺[α] = {pos:?}"))?;
    ensure(face == BTreeSet::from([Name::from("f"), Name::from("h")]), || format!("supp [t₁α] = {face:?}"))?;
    Ok(format!("loop cycle {}; endo-2-cell cycle {}; square {violation}, {{h}} ⊊ {{f, h}}", names(&cycle), names(&ecycle)))
}

fn oriental3_linearizations() -> Outcome {
    let (e, p) = entry("oriental", &[3])?;
    let alpha = label(&e, "α")?;
    let beta = label(&e, "β")?;
    let cases = [
        ("id2(f)", IntVector::zero()),
        ("id2(h)*0β", IntVector::unit(beta.clone())),
        ("(id2(h)*0β)*1α", IntVector::from_terms([(beta, 1), (alpha, 1)]).map_err(s)?),
    ];
    for (name, expected) in &cases {
        let x = e.expression(name).ok_or_else(|| format!("missing {name}"))?;
        let got = p.linearize(x).map_err(s)?;
        ensure(&got == expected, || format!("{name} linearizes to {got}, expected {expected}"))?;
    }
    Ok("id₂(f) ↦ 0, id₂(h)∗₀β ↦ [β], (id₂(h)∗₀β)∗₁α ↦ [β] + [α]".into())
}

fn forest_composites() -> Outcome {
    let (e, p) = entry("forestA", &[])?;
    let ab = IntVector::from_terms([("A", 1), ("B", 1)]).map_err(s)?;
    let h1 = e.expression("H1").ok_or("missing H1")?;
    let h2 = e.expression("H2").ok_or("missing H2")?;
    for (name, h) in [("H1", h1), ("H2", h2)] {
        let got = p.linearize(h).map_err(s)?;
        ensure(got == ab, || format!("{name} linearizes to {got}"))?;
    }
    ensure(p.eval_table(h1).map_err(s)? == p.eval_table(h2).map_err(s)?, || "tables differ".into())?;
    Ok("[H1] = [H2] = [A] + [B], tables equal".into())
}

fn enumeration_matches_oracle() -> Outcome {
    let mut sizes = Vec::new();
    for n in 1..=3 {
        let c = simplex_complex(n);
        let e = enumerate_nu(&c, n, Caps::default()).map_err(s)?;
        for q in 0..=n {
            let enumerated: BTreeSet<NuTable> = e.cells(q).iter().cloned().collect();
            let brute = brute_force_nu(&c, q, 3).map_err(s)?;
            ensure(enumerated == brute, || format!("Δ{n} dimension {q}: {} against {}", enumerated.len(), brute.len()))?;
        }
        sizes.push(format!("Δ{n} {}", e.total_cells()));
    }
    let e = enumerate_nu(&simplex_complex(2), 2, Caps::default()).map_err(s)?;
    let counts: Vec<usize> = (0..=2).map(|q| e.nontrivial_count(q)).collect();
    ensure(counts == [3, 4, 1], || format!("Δ² nontrivial counts {counts:?}"))?;
    Ok(format!("cell sets equal ({}), Δ² nontrivial {counts:?}", sizes.join(", ")))
}

fn round_trips() -> Outcome {
    let mut cases: Vec<(&str, Vec<i64>)> = Vec::new();
    cases.extend((1..=3).map(|n| ("oriental", vec![n])));
    cases.extend((0..=4).map(|n| ("disk", vec![n])));
    cases.extend((0..=3).map(|n| ("sphere", vec![n])));
    cases.push(("theta2", vec![3, 2, 0, 1]));
    for (name, params) in &cases {
        let c = build(name, params).map_err(s)?.adc();
        let report = verify_equivalence(&c, Caps::default()).map_err(s)?;
        ensure(report.is_isomorphic(), || format!("{name} {params:?}: {report}"))?;
    }
    Ok(format!("{} complexes recovered up to basis-preserving isomorphism", cases.len()))
}

fn proposition_suite() -> Outcome {
    let instances = props::instances(RANDOM_PRESENTATIONS);
    for (label, check) in props::ALL {
        for (name, p) in &instances {
            check(p).map_err(|w| format!("{label} fails on {name}: {w}"))?;
        }
    }
    Ok(format!("{} properties on {} presentations ({} random)", props::ALL.len(), instances.len(), RANDOM_PRESENTATIONS))
}

fn smith_suite() -> Outcome {
    let n = common::check_random_smith(0xacce, RANDOM_MATRICES)?;
    Ok(format!("{n} matrices: U·A·V = D, divisibility, determinantal divisors"))
}

fn structural_laws() -> Outcome {
    let mut parts = Vec::new();
    for n in [2, 3] {
        let e = enumerate_nu(&simplex_complex(n), n, Caps::default()).map_err(s)?;
        let counts = [
            laws::globularity(&e)?,
            laws::units(&e)?,
            laws::associativity(&e)?,
            laws::interchange(&e)?,
        ];
        ensure(counts.iter().all(|&c| c > 0), || format!("O[{n}]: empty law check {counts:?}"))?;
        parts.push(format!("O[{n}] {counts:?}"));
    }
    Ok(format!("globularity/unit/associativity/interchange instances: {}", parts.join(", ")))
}

struct Criterion {
    title: &'static str,
    run: fn() -> Outcome,
}

const CRITERIA: [Criterion; 9] = [
    Criterion { title: "triangle full preorder", run: triangle_total_order },
    Criterion { title: "counterexample verdicts", run: counterexamples },
    Criterion { title: "tetrahedron linearizations", run: oriental3_linearizations },
    Criterion { title: "forest composites", run: forest_composites },
    Criterion { title: "enumeration against brute force", run: enumeration_matches_oracle },
    Criterion { title: "realization round trip", run: round_trips },
    Criterion { title: "proposition suite", run: proposition_suite },
    Criterion { title: "Smith normal form", run: smith_suite },
    Criterion { title: "structural laws", run: structural_laws },
];

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for (i, c) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let outcome = match catch_unwind(AssertUnwindSafe(c.run)) {
            Ok(r) => r,
            Err(_) => Err("panicked".into()),
        };
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|d| {
            ensure(elapsed <= BUDGET, || format!("took {elapsed:.1?}, budget {BUDGET:?}")).map(|()| d)
        });
        let tolerance = format!("exact, ≤ {}s", BUDGET.as_secs());
        match outcome {
            Ok(detail) => println!("PASS {} {} [{tolerance}] {elapsed:.2?}: {detail}", i + 1, c.title),
            Err(why) => {
                println!("FAIL {} {} [{tolerance}] {elapsed:.2?}: {why}", i + 1, c.title);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
