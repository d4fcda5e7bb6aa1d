use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::{json, Value};

use coring_core::algebra::{field_extension, FieldExtension, Polynomial};
use coring_core::catalog::{self, RunOptions};
use coring_core::comodule::{
    bicomodule_round_trip, bicomodule_to_comodule, check_bicomodule, check_comodule, comodule_round_trip, Bicomodule,
};
use coring_core::coring::{
    coseparability, default_extensions, default_test_corings, dual_ring, is_semisimple_coring, main_theorem_report,
    opposite_coring, BaseChangeIso, Coring, Side, DEFAULT_SIZE_LIMIT,
};
use coring_core::entwine::{check_entwining, entwined_coring, tensor_entwining, Entwining};
use coring_core::io::{self, BicomoduleSpec, ComoduleSpec, CoringSpec, EntwiningSpec, MatrixJson, ScalarJson};
use coring_core::report::CheckReport;

use crate::{CatalogCommand, Command, EntwineCommand, ExportKind, Source, WithSource};

/// A finished command: the JSON report, whether every check passed, and a summary line.
pub struct Outcome {
    pub report: Value,
    pub pass: bool,
    pub summary: String,
}

impl Outcome {
    fn new(report: impl Serialize, pass: bool, summary: impl Into<String>) -> Result<Self> {
        Ok(Outcome { report: serde_json::to_value(report)?, pass, summary: summary.into() })
    }
}

pub fn emit(outcome: &Outcome, out: Option<&Path>) -> Result<()> {
    let text = io::to_json(&outcome.report)?;
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    Ok(io::read_json(path)?)
}

fn load_coring(source: &Source) -> Result<Coring> {
    let spec = match (&source.input, &source.catalog) {
        (Some(path), _) => read::<CoringSpec>(path)?,
        (None, Some(id)) => CoringSpec::Catalog { id: id.clone() },
        (None, None) => bail!("no coring given"),
    };
    Ok(spec.build()?)
}

/// Decision procedures assume a coring; reject invalid input up front.
fn load_valid_coring(source: &Source) -> Result<Coring> {
    let c = load_coring(source)?;
    if let Some(v) = c.check().violations.first() {
        bail!("{} is not a coring: {} at {:?}", c.name(), v.identity, v.indices);
    }
    Ok(c)
}

fn load_bicomodule(input: Option<&PathBuf>, id: Option<&String>) -> Result<Bicomodule> {
    let spec = match (input, id) {
        (Some(path), _) => read::<BicomoduleSpec>(path)?,
        (None, Some(id)) => BicomoduleSpec::Catalog { id: id.clone() },
        (None, None) => bail!("no bicomodule given"),
    };
    Ok(spec.build()?)
}

fn load_entwining(input: Option<&PathBuf>, id: Option<&String>) -> Result<Entwining> {
    let spec = match (input, id) {
        (Some(path), _) => read::<EntwiningSpec>(path)?,
        (None, Some(id)) => EntwiningSpec::Catalog { id: id.clone() },
        (None, None) => bail!("no entwining given"),
    };
    Ok(spec.build()?)
}

fn extensions(minpolys: &[String]) -> Result<Vec<FieldExtension>> {
    if minpolys.is_empty() {
        return Ok(default_extensions());
    }
    minpolys
        .iter()
        .map(|s| {
            let p: Polynomial = s.parse()?;
            field_extension(&p, false).with_context(|| format!("extension {s:?}"))
        })
        .collect()
}

fn vector_json(v: &[coring_core::exactlin::Scalar]) -> Vec<ScalarJson> {
    v.iter().map(ScalarJson::from).collect()
}

fn check_summary(what: &str, name: &str, report: &CheckReport) -> String {
    match report.violations.first() {
        None => format!("{what} {name}"),
        Some(v) => format!("{what} {name}: {} violation(s), first {} at {:?}", report.violations.len(), v.identity, v.indices),
    }
}

fn expectation(verdict: bool, expect: Option<bool>) -> bool {
    expect.is_none_or(|e| e == verdict)
}

pub fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::CheckCoring(source) => {
            let c = load_coring(source)?;
            let report = c.check();
            let summary = check_summary("coring", c.name(), &report);
            Outcome::new(
                json!({
                    "coring": c.name(),
                    "base_dim": c.base().dim(),
                    "dim": c.dim(),
                    "valid": report.is_valid(),
                    "violations": report.violations,
                }),
                report.is_valid(),
                summary,
            )
        }
        Command::Cosep { source, expect } => {
            let c = load_valid_coring(source)?;
            let witness = coseparability(&c)?;
            let idempotent = dual_ring(&c, Side::Right)?.algebra.separability_idempotent();
            let verdict = witness.is_some();
            Outcome::new(
                json!({
                    "coring": c.name(),
                    "coseparable": verdict,
                    "gamma": witness.as_ref().map(|w| MatrixJson::from(&w.gamma)),
                    "pi": witness.as_ref().map(|w| MatrixJson::from(&w.pi)),
                    "gamma_independent": witness.as_ref().map(|w| MatrixJson::from(&w.gamma_independent)),
                    "right_dual_separable": idempotent.is_some(),
                    "right_dual_separability_idempotent": idempotent.as_deref().map(vector_json),
                    "expected": expect,
                }),
                expectation(verdict, *expect) && verdict == idempotent.is_some(),
                format!("{}: coseparable = {verdict}", c.name()),
            )
        }
        Command::Semisimple { source, expect } => {
            let c = load_valid_coring(source)?;
            let evidence = is_semisimple_coring(&c)?;
            Outcome::new(
                json!({ "coring": c.name(), "evidence": evidence, "semisimple": evidence.semisimple, "expected": expect }),
                expectation(evidence.semisimple, *expect),
                format!("{}: semisimple = {}", c.name(), evidence.semisimple),
            )
        }
        Command::Theorem { source, extensions: exts, with, size_limit } => {
            let c = load_valid_coring(source)?;
            let exts = extensions(exts)?;
            let tests = if with.is_empty() {
                default_test_corings(c.base().field())
            } else {
                with.iter().map(|p| Ok(read::<CoringSpec>(p)?.build()?)).collect::<Result<Vec<_>>>()?
            };
            let report = main_theorem_report(&c, &exts, &tests, size_limit.unwrap_or(DEFAULT_SIZE_LIMIT))?;
            let summary = match &report.note {
                Some(note) => format!("{}: {note}", c.name()),
                None => format!("{}: equivalent = {}, cross-check = {}", c.name(), report.equivalent, report.cross_check),
            };
            let pass = report.passes();
            Outcome::new(report, pass, summary)
        }
        Command::BaseChange { source, extensions: exts } => {
            let c = load_valid_coring(source)?;
            let mut rows = Vec::new();
            let mut pass = true;
            for k in extensions(exts)? {
                let iso = BaseChangeIso::new(&c, &k)?;
                let failures = iso.multiplicativity_failures();
                let ok = iso.is_unital() && failures.is_empty() && iso.is_bijective() && iso.inverse_holds();
                pass &= ok;
                rows.push(json!({
                    "extension": k.minpoly.to_string(),
                    "unital": iso.is_unital(),
                    "multiplicativity_failures": failures,
                    "bijective": iso.is_bijective(),
                    "inverse_holds": iso.inverse_holds(),
                    "psi": MatrixJson::from(&iso.psi),
                }));
            }
            Outcome::new(json!({ "coring": c.name(), "extensions": rows }), pass, format!("{}: base-change isomorphisms", c.name()))
        }
        Command::Catalog(CatalogCommand::List) => {
            let entries: Vec<Value> = catalog::catalog()
                .iter()
                .map(|e| json!({ "id": e.id, "description": e.description, "rationale": e.rationale, "expected": e.expected }))
                .collect();
            let n = entries.len();
            Outcome::new(entries, true, format!("{n} catalog entries"))
        }
        Command::Catalog(CatalogCommand::Run { filter, theorem, timings, size_limit }) => {
            let options = RunOptions { theorem: *theorem, size_limit: *size_limit, timings: *timings };
            let reports = catalog::run_catalog(filter.as_deref(), options)?;
            let failed: Vec<&str> = reports.iter().filter(|r| !r.passes()).map(|r| r.id.as_str()).collect();
            let summary = if failed.is_empty() {
                format!("{} catalog entries", reports.len())
            } else {
                format!("{} of {} catalog entries: {}", failed.len(), reports.len(), failed.join(", "))
            };
            let pass = failed.is_empty();
            Outcome::new(reports, pass, summary)
        }
        Command::CheckComodule { input } => {
            let m = read::<ComoduleSpec>(input)?.build()?;
            let report = check_comodule(&m);
            let side = if m.side() == Side::Left { "left" } else { "right" };
            let summary = check_summary(&format!("{side} comodule over"), m.coring().name(), &report);
            Outcome::new(
                json!({
                    "coring": m.coring().name(),
                    "side": side,
                    "dim": m.dim(),
                    "valid": report.is_valid(),
                    "violations": report.violations,
                }),
                report.is_valid(),
                summary,
            )
        }
        Command::CheckBicomodule(source) => {
            let b = load_bicomodule(source.input.as_ref(), source.catalog.as_ref())?;
            let report = check_bicomodule(&b);
            let name = format!("{}-{}", b.left_coring().name(), b.right_coring().name());
            let summary = check_summary("bicomodule over", &name, &report);
            Outcome::new(
                json!({
                    "left_coring": b.left_coring().name(),
                    "right_coring": b.right_coring().name(),
                    "dim": b.dim(),
                    "valid": report.is_valid(),
                    "violations": report.violations,
                }),
                report.is_valid(),
                summary,
            )
        }
        Command::BicomodEquiv { input, catalog: id } => {
            let items: Vec<(String, Bicomodule)> = if input.is_none() && id.is_none() {
                catalog::bicomodules()?.into_iter().map(|(id, b)| (id.to_string(), b)).collect()
            } else {
                let label = id.clone().unwrap_or_else(|| input.as_ref().map(|p| p.display().to_string()).unwrap_or_default());
                vec![(label, load_bicomodule(input.as_ref(), id.as_ref())?)]
            };
            let mut rows = Vec::new();
            let mut pass = true;
            for (label, b) in &items {
                let forward = bicomodule_round_trip(b)?;
                let n = bicomodule_to_comodule(b)?;
                let backward = comodule_round_trip(&n, b.left_coring(), &opposite_coring(b.right_coring())?)?;
                pass &= forward.passes() && backward.passes();
                rows.push(json!({
                    "id": label,
                    "dim": b.dim(),
                    "comodule_coring_dim": n.coring().dim(),
                    "bicomodule_to_comodule_to_bicomodule": forward,
                    "comodule_to_bicomodule_to_comodule": backward,
                }));
            }
            let n = rows.len();
            Outcome::new(rows, pass, format!("{n} bicomodule round trip(s)"))
        }
        Command::Entwine(EntwineCommand::Check(source)) => {
            let e = load_entwining(source.input.as_ref(), source.catalog.as_ref())?;
            let report = check_entwining(&e);
            let name = format!("{}-{}", e.algebra.name(), e.coalgebra.name());
            let summary = check_summary("entwining", &name, &report);
            Outcome::new(
                json!({
                    "algebra": e.algebra.name(),
                    "coalgebra": e.coalgebra.name(),
                    "dim": e.dim(),
                    "valid": report.is_valid(),
                    "violations": report.violations,
                }),
                report.is_valid(),
                summary,
            )
        }
        Command::Entwine(EntwineCommand::Coring(source)) => {
            let e = load_entwining(source.input.as_ref(), source.catalog.as_ref())?;
            let c = entwined_coring(&e)?;
            let summary = format!("entwined coring {} of dimension {}", c.name(), c.dim());
            Outcome::new(CoringSpec::explicit(&c), true, summary)
        }
        Command::Entwine(EntwineCommand::Tensor { source, with: WithSource { with, with_catalog } }) => {
            let e1 = load_entwining(source.input.as_ref(), source.catalog.as_ref())?;
            let e2 = load_entwining(with.as_ref(), with_catalog.as_ref())?;
            let (product, certificate) = tensor_entwining(&e1, &e2)?;
            let report = check_entwining(&product);
            let pass = report.is_valid() && certificate.holds();
            Outcome::new(
                json!({
                    "valid": report.is_valid(),
                    "violations": report.violations,
                    "certificate": certificate,
                    "entwining": EntwiningSpec::explicit(&product),
                }),
                pass,
                format!("tensor entwining of dimension {}", product.dim()),
            )
        }
        Command::Export { kind, id } => {
            let value = match kind {
                ExportKind::Coring => serde_json::to_value(CoringSpec::explicit(&CoringSpec::Catalog { id: id.clone() }.build()?))?,
                ExportKind::Bicomodule => {
                    serde_json::to_value(BicomoduleSpec::explicit(&BicomoduleSpec::Catalog { id: id.clone() }.build()?))?
                }
                ExportKind::Entwining => {
                    serde_json::to_value(EntwiningSpec::explicit(&EntwiningSpec::Catalog { id: id.clone() }.build()?))?
                }
            };
            Outcome::new(value, true, format!("exported {id}"))
        }
    }
}
