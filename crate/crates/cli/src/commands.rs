use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::json;
use steiner_core::catalog;
use steiner_core::format::{self, Document};
use steiner_core::nu::brute_force_nu;
use steiner_core::{enumerate_nu, lambda_of_enumerated, verify_equivalence, Adc, Caps, Name, RelationGraph, Verdict};

use crate::error::{CliError, EXIT_NEGATIVE};
use crate::{CapArgs, Cli, Command};

fn load(path: &Path) -> Result<Document, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_owned(), source })?;
    Ok(format::parse(&text)?)
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Write { path: path.clone(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_json(value: &impl Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

fn caps(c: CapArgs) -> Caps {
    Caps { max_cells: c.max_cells, max_coeff: c.max_coeff }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn path_text(cycle: &[Name]) -> String {
    let names: Vec<&str> = cycle.iter().map(|n| n.as_str()).collect();
    names.join(" → ")
}

/// Runs the command and returns the exit code for a completed run.
pub fn run(cli: &Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::Check { file } => check(&load(file)?, cli.json),
        Command::Enumerate { file, max_dim, caps: c } => enumerate(load(file)?.complex(), *max_dim, caps(*c), cli.json),
        Command::Lambda { file, caps: c } => lambda(&load(file)?, caps(*c)),
        Command::Preorder { file, dot } => preorder(&load(file)?, dot.as_ref(), cli.json),
        Command::Roundtrip { file, caps: c } => roundtrip(load(file)?.complex(), caps(*c), cli.json),
        Command::Catalog { name, params, out, complex } => export(name, params, out.as_ref(), *complex),
        Command::Oracle { file, dim, cap } => oracle(load(file)?.complex(), *dim, *cap, cli.json),
    }
}

#[derive(Serialize)]
struct ComplexVerdict {
    unital: bool,
    unitality_violation: Option<Name>,
    strongly_loop_free: bool,
    cycle: Option<Vec<Name>>,
    strong_steiner: bool,
}

fn complex_verdict(c: &Adc) -> Result<ComplexVerdict, CliError> {
    let unitality_violation = c.unitality_violation()?;
    let report = c.loop_free_report();
    let unital = unitality_violation.is_none();
    Ok(ComplexVerdict {
        unital,
        unitality_violation,
        strongly_loop_free: report.is_partial_order,
        cycle: report.cycle_witness,
        strong_steiner: unital && report.is_partial_order,
    })
}

fn print_verdict(v: &Verdict) {
    println!("strong Steiner: {}", yes(v.strong_steiner));
    match &v.atomicity_violation {
        None => println!("atomic: yes"),
        Some(a) => println!("atomic: no ({a})"),
    }
    match &v.preorders.full_cycle {
        None => println!("categorically loop-free: yes"),
        Some(c) => println!("categorically loop-free: no (cycle {})", path_text(c)),
    }
    match &v.preorders.codim1_cycle {
        None => println!("codimension-one preorder antisymmetric: yes"),
        Some(c) => println!("codimension-one preorder antisymmetric: no (cycle {})", path_text(c)),
    }
    match &v.algebraic_cycle {
        None => println!("algebraically loop-free: yes"),
        Some(c) => println!("algebraically loop-free: no (cycle {})", path_text(c)),
    }
    match &v.unitality_violation {
        None => println!("unital: yes"),
        Some(g) => println!("unital: no (at {g})"),
    }
    match (&v.steiner_order, &v.steiner_cycle) {
        (Some(order), _) => println!("Steiner order: {}", path_text(order).replace(" → ", " < ")),
        (None, Some(c)) => println!("Steiner order: none (cycle {})", path_text(c)),
        (None, None) => println!("Steiner order: none"),
    }
    let regime = match v.equality_regime {
        steiner_core::polygraph::EqualityRegime::Exact => "exact",
        steiner_core::polygraph::EqualityRegime::NecessaryOnly => "necessary only",
    };
    println!("table equality decides cell equality: {regime}");
}

fn check(doc: &Document, as_json: bool) -> Result<u8, CliError> {
    let strong = match doc {
        Document::Polygraph(p) => {
            let v = p.classify()?;
            if as_json {
                print_json(&v);
            } else {
                print_verdict(&v);
            }
            v.strong_steiner
        }
        Document::Adc(c) => {
            let v = complex_verdict(c)?;
            if as_json {
                print_json(&v);
            } else {
                println!("strong Steiner: {}", yes(v.strong_steiner));
                match &v.unitality_violation {
                    None => println!("unital: yes"),
                    Some(g) => println!("unital: no (at {g})"),
                }
                match &v.cycle {
                    None => println!("strongly loop-free: yes"),
                    Some(c) => println!("strongly loop-free: no (cycle {})", path_text(c)),
                }
            }
            v.strong_steiner
        }
    };
    Ok(if strong { 0 } else { EXIT_NEGATIVE })
}

fn enumerate(c: &Adc, max_dim: Option<usize>, caps: Caps, as_json: bool) -> Result<u8, CliError> {
    let Some(top) = max_dim.or(c.max_degree()) else {
        if as_json {
            print_json(&json!({"cells": [], "nontrivial": []}));
        } else {
            println!("empty");
        }
        return Ok(0);
    };
    let e = enumerate_nu(c, top, caps)?;
    let cells: Vec<usize> = (0..=top).map(|q| e.cells(q).len()).collect();
    let nontrivial: Vec<usize> = (0..=top).map(|q| e.nontrivial_count(q)).collect();
    if as_json {
        print_json(&json!({"cells": cells, "nontrivial": nontrivial}));
    } else {
        let parts: Vec<String> = (0..=top)
            .map(|q| if q == 0 { format!("dim 0: {}", cells[0]) } else { format!("dim {q} nontrivial: {}", nontrivial[q]) })
            .collect();
        println!("{}", parts.join(", "));
    }
    Ok(0)
}

fn lambda(doc: &Document, caps: Caps) -> Result<u8, CliError> {
    let complex = match doc {
        Document::Polygraph(p) => p.lambda().clone(),
        Document::Adc(c) => match c.max_degree() {
            None => Adc::new(),
            Some(top) => lambda_of_enumerated(&enumerate_nu(c, top, caps)?)?.complex,
        },
    };
    print!("{}", format::serialize_adc(&complex));
    Ok(0)
}

fn preorder(doc: &Document, dot: Option<&PathBuf>, as_json: bool) -> Result<u8, CliError> {
    let (graph, title): (RelationGraph, &str) = match doc {
        Document::Polygraph(p) => (p.preorder_report()?.full, "categorical preorder"),
        Document::Adc(c) => (c.preorder_graph(), "basis preorder"),
    };
    let c = doc.complex();
    let text = graph.to_dot(title, |n| c.degree_of(n));
    let cycle = graph.cycle_witness();
    if let Some(path) = dot {
        emit(Some(path), &text)?;
    }
    if as_json {
        print_json(&json!({"antisymmetric": cycle.is_none(), "cycle": cycle, "edges": graph.edges()}));
    } else if dot.is_some() {
        match &cycle {
            None => println!("antisymmetric: yes ({} edges)", graph.edges().len()),
            Some(c) => println!("antisymmetric: no (cycle {})", path_text(c)),
        }
    } else {
        print!("{text}");
    }
    Ok(0)
}

fn roundtrip(c: &Adc, caps: Caps, as_json: bool) -> Result<u8, CliError> {
    let report = verify_equivalence(c, caps)?;
    if as_json {
        print_json(&report);
    } else {
        println!("{report}");
    }
    Ok(if report.is_isomorphic() { 0 } else { EXIT_NEGATIVE })
}

fn export(name: &str, params: &[i64], out: Option<&PathBuf>, complex: bool) -> Result<u8, CliError> {
    let e = catalog::build(name, params)?;
    let text = match (&e.presentation, complex) {
        (Some(p), false) => format::serialize_polygraph(p),
        _ => format::serialize_adc(&e.adc()),
    };
    emit(out, &text)?;
    Ok(0)
}

fn oracle(c: &Adc, dim: usize, cap: i64, as_json: bool) -> Result<u8, CliError> {
    let tables = brute_force_nu(c, dim, cap)?;
    let nontrivial = tables.iter().filter(|t| !t.is_identity()).count();
    if as_json {
        print_json(&json!({"dim": dim, "cap": cap, "tables": tables.len(), "nontrivial": nontrivial}));
    } else {
        println!("dim {dim}: {} tables ({nontrivial} nontrivial) with coefficients at most {cap}", tables.len());
    }
    Ok(0)
}
