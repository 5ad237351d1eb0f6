//! Relations between the categorical and algebraic invariants of a
//! presentation, each checked on a single instance.

use steiner_core::catalog::standard_entries;
use steiner_core::nu::Sign;
use steiner_core::{decompose, CellExpr, Name, PolyPresentation};

pub type Check = fn(&PolyPresentation) -> Result<(), String>;

pub const ALL: [(&str, Check); 8] = [
    ("codimension-one preorder is finer than the full preorder", codim1_finer),
    ("complex preorder edges are categorical relations", edges_transport),
    ("atomic: categorical preorders have equal closures", atomic_preorders_coincide),
    ("atomic: complex and categorical orders coincide", atomic_orders_isomorphic),
    ("atomic implies unital", atomic_unital),
    ("categorical loop-freeness implies atomicity", loop_free_atomic),
    ("classifier is consistent", classifier_consistent),
    ("boundary parts lie in face supports", boundary_supports),
];

/// Catalog presentations followed by `random` seeded random ones.
pub fn instances(random: u64) -> Vec<(String, PolyPresentation)> {
    let mut out: Vec<(String, PolyPresentation)> = standard_entries()
        .into_iter()
        .filter_map(|e| e.presentation.map(|p| (format!("{} {:?}", e.name, e.params), p)))
        .collect();
    out.extend((0..random).map(|s| (format!("random {s}"), super::random_presentation(s))));
    out
}

pub fn codim1_faces(p: &PolyPresentation, y: &Name) -> (CellExpr, CellExpr) {
    let q = p.dim_of(y).unwrap();
    let g = CellExpr::Gen(y.clone());
    (p.face_expr(&g, q - 1, Sign::Minus).unwrap(), p.face_expr(&g, q - 1, Sign::Plus).unwrap())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn codim1_finer(p: &PolyPresentation) -> Result<(), String> {
    let r = p.preorder_report().map_err(|e| e.to_string())?;
    for (a, b) in r.codim1.edges() {
        ensure(r.full.reaches(a, b), || format!("{a} → {b} not in the full closure"))?;
    }
    Ok(())
}

pub fn edges_transport(p: &PolyPresentation) -> Result<(), String> {
    let r = p.preorder_report().map_err(|e| e.to_string())?;
    for (a, b) in p.lambda().preorder_graph().edges() {
        ensure(r.codim1.reaches(a, b), || format!("{a} → {b} not in the codimension-one closure"))?;
    }
    Ok(())
}

pub fn atomic_preorders_coincide(p: &PolyPresentation) -> Result<(), String> {
    if !p.is_atomic().map_err(|e| e.to_string())? {
        return Ok(());
    }
    let r = p.preorder_report().map_err(|e| e.to_string())?;
    ensure(r.codim1.closure() == r.full.closure(), || "closures differ".into())
}

pub fn atomic_orders_isomorphic(p: &PolyPresentation) -> Result<(), String> {
    if !p.is_atomic().map_err(|e| e.to_string())? {
        return Ok(());
    }
    let r = p.preorder_report().map_err(|e| e.to_string())?;
    ensure(p.lambda().preorder_graph().closure() == r.full.closure(), || "closures differ".into())
}

pub fn atomic_unital(p: &PolyPresentation) -> Result<(), String> {
    if !p.is_atomic().map_err(|e| e.to_string())? {
        return Ok(());
    }
    ensure(p.lambda().is_unital().map_err(|e| e.to_string())?, || "atomic but not unital".into())
}

pub fn loop_free_atomic(p: &PolyPresentation) -> Result<(), String> {
    let r = p.preorder_report().map_err(|e| e.to_string())?;
    if !r.full_antisymmetric {
        return Ok(());
    }
    ensure(p.is_atomic().map_err(|e| e.to_string())?, || "loop-free but not atomic".into())
}

pub fn classifier_consistent(p: &PolyPresentation) -> Result<(), String> {
    let v = p.classify().map_err(|e| e.to_string())?;
    ensure(v.strongly_loop_free_categorical == (v.is_atomic && v.strongly_loop_free_algebraic), || {
        "categorical and algebraic verdicts disagree".into()
    })
}

/// Parts of `∂[y]` lie in the supports of the linearized faces, and equal
/// them when the faces have disjoint supports.
pub fn boundary_supports(p: &PolyPresentation) -> Result<(), String> {
    for g in p.generators().iter().filter(|g| g.dim > 0) {
        let (s, t) = codim1_faces(p, &g.name);
        let (ls, lt) = (p.linearize(&s).map_err(|e| e.to_string())?, p.linearize(&t).map_err(|e| e.to_string())?);
        let d = decompose(&p.lambda().generator(&g.name).unwrap().boundary);
        ensure(d.supp_neg.is_subset(&ls.support()), || format!("∂⁻ of {} escapes its source", g.name))?;
        ensure(d.supp_pos.is_subset(&lt.support()), || format!("∂⁺ of {} escapes its target", g.name))?;
        let disjoint = p
            .support_expr(&s)
            .map_err(|e| e.to_string())?
            .is_disjoint(&p.support_expr(&t).map_err(|e| e.to_string())?);
        if disjoint {
            ensure(ls == d.neg && lt == d.pos, || format!("faces of {} do not linearize to ∂∓", g.name))?;
        }
    }
    Ok(())
}
