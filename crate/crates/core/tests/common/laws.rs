//! Strict ω-category axioms checked on every admissible tuple of an
//! enumeration. Each check returns the number of instances verified.

use std::collections::HashMap;

use steiner_core::nu::Sign;
use steiner_core::{EnumeratedOmegaCat, NuTable};

fn lift(t: &NuTable, dim: usize) -> NuTable {
    let mut t = t.clone();
    while t.dim() < dim {
        t = t.identity();
    }
    t
}

struct Faces<'a> {
    by_source: HashMap<NuTable, Vec<&'a NuTable>>,
    by_target: HashMap<NuTable, Vec<&'a NuTable>>,
}

fn faces(cells: &[NuTable], p: usize) -> Faces<'_> {
    let mut by_source: HashMap<NuTable, Vec<&NuTable>> = HashMap::new();
    let mut by_target: HashMap<NuTable, Vec<&NuTable>> = HashMap::new();
    for x in cells {
        by_source.entry(x.source(p).unwrap()).or_default().push(x);
        by_target.entry(x.target(p).unwrap()).or_default().push(x);
    }
    Faces { by_source, by_target }
}

/// All `p`-composable pairs among the cells indexed by `f`.
fn composable<'a>(f: &Faces<'a>) -> Vec<(&'a NuTable, &'a NuTable)> {
    let mut out = Vec::new();
    for (b, lefts) in &f.by_target {
        if let Some(rights) = f.by_source.get(b) {
            for &x in lefts {
                for &y in rights {
                    out.push((x, y));
                }
            }
        }
    }
    out
}

fn compose(x: &NuTable, y: &NuTable, p: usize) -> Result<NuTable, String> {
    x.compose(y, p).map_err(|e| format!("{x} *{p} {y}: {e}"))
}

pub fn globularity(e: &EnumeratedOmegaCat) -> Result<usize, String> {
    let mut checked = 0;
    for dim in 0..=e.max_dim() {
        for x in e.cells(dim) {
            for q in 0..dim {
                for p in 0..q {
                    for outer in Sign::BOTH {
                        for inner in Sign::BOTH {
                            let lhs = x.face(q, inner).unwrap().face(p, outer).unwrap();
                            if lhs != x.face(p, outer).unwrap() {
                                return Err(format!("{x} at {p} < {q}"));
                            }
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(checked)
}

pub fn units(e: &EnumeratedOmegaCat) -> Result<usize, String> {
    let mut checked = 0;
    for dim in 1..=e.max_dim() {
        for x in e.cells(dim) {
            for p in 0..dim {
                let s = lift(&x.source(p).unwrap(), dim);
                let t = lift(&x.target(p).unwrap(), dim);
                if &compose(&s, x, p)? != x || &compose(x, &t, p)? != x {
                    return Err(format!("{x} at {p}"));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// Associativity, together with closure of the enumeration under the
/// compositions involved.
pub fn associativity(e: &EnumeratedOmegaCat) -> Result<usize, String> {
    let mut checked = 0;
    for dim in 1..=e.max_dim() {
        for p in 0..dim {
            let f = faces(e.cells(dim), p);
            for (x, y) in composable(&f) {
                let xy = compose(x, y, p)?;
                if !e.contains(&xy) {
                    return Err(format!("{xy} is not enumerated"));
                }
                let Some(zs) = f.by_source.get(&y.target(p).unwrap()) else { continue };
                for z in zs {
                    if compose(&xy, z, p)? != compose(x, &compose(y, z, p)?, p)? {
                        return Err(format!("({x} *{p} {y}) *{p} {z}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

pub fn interchange(e: &EnumeratedOmegaCat) -> Result<usize, String> {
    let mut checked = 0;
    for dim in 2..=e.max_dim() {
        for q in 1..dim {
            let q_pairs = composable(&faces(e.cells(dim), q));
            for p in 0..q {
                // When x, y are p-composable then so are x2, y2, since
                // p-faces of q-composable cells agree.
                let mut by_p_source: HashMap<NuTable, Vec<(&NuTable, &NuTable)>> = HashMap::new();
                for &(y, y2) in &q_pairs {
                    by_p_source.entry(y.source(p).unwrap()).or_default().push((y, y2));
                }
                for &(x, x2) in &q_pairs {
                    let Some(ys) = by_p_source.get(&x.target(p).unwrap()) else { continue };
                    for &(y, y2) in ys {
                        let lhs = compose(&compose(x, x2, q)?, &compose(y, y2, q)?, p)?;
                        let rhs = compose(&compose(x, y, p)?, &compose(x2, y2, p)?, q)?;
                        if lhs != rhs {
                            return Err(format!("{x} {x2} {y} {y2} at {p} < {q}"));
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(checked)
}
