//! Named example corings with their known verdicts, and a runner that re-derives every
//! verdict and reports mismatches. The catalog doubles as a regression suite.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{field_extension, Algebra, Polynomial};
use crate::comodule::Bicomodule;
use crate::coring::{
    base_change, coseparability, is_semisimple_coring, main_theorem_report, opposite_coring, sweedler_coring,
    tensor_coring, Coring, SemisimpleEvidence, TheoremReport,
};
use crate::entwine::{entwined_coring, Entwining};
use crate::error::Result;
use crate::exactlin::{unit_vec, Field, Subspace};
use crate::io::MatrixJson;
use crate::report::Violation;

const Q: Field = Field::Rationals;

/// Verdicts a catalog entry must reproduce. `None` means "not evaluated by the runner".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub coseparable: Option<bool>,
    pub semisimple: Option<bool>,
    pub base_separable: bool,
}

pub struct CatalogEntry {
    pub id: &'static str,
    pub description: &'static str,
    /// Why the expected verdicts hold.
    pub rationale: &'static str,
    pub expected: Expected,
    build: fn() -> Result<Coring>,
}

impl CatalogEntry {
    pub fn build(&self) -> Result<Coring> {
        Ok((self.build)()?.with_name(self.id))
    }
}

const fn expect(coseparable: Option<bool>, semisimple: bool, base_separable: bool) -> Expected {
    Expected { coseparable, semisimple: Some(semisimple), base_separable }
}

fn dual_numbers() -> Algebra {
    Algebra::truncated_polynomials(Q, 2)
}

fn ground_span(a: &Algebra) -> Subspace {
    Subspace::span(a.dim(), [a.unit()]).expect("unit vector")
}

fn diagonal_of_m2() -> Subspace {
    Subspace::span(4, [unit_vec(4, 0).as_slice(), unit_vec(4, 3).as_slice()]).expect("basis")
}

/// All catalog corings, sorted by id.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut entries = vec![
        CatalogEntry {
            id: "trivial-Q",
            description: "the trivial coring on the ground field",
            rationale: "A ⊗_A A = A with γ = multiplication; comodules are vector spaces",
            expected: expect(Some(true), true, true),
            build: || Ok(Coring::trivial(&Algebra::ground(Q))),
        },
        CatalogEntry {
            id: "product-Q2-trivial",
            description: "the trivial coring on ℚ × ℚ",
            rationale: "trivial corings are coseparable; comodules are modules over the semisimple ℚ × ℚ",
            expected: expect(Some(true), true, true),
            build: || Ok(Coring::trivial(&Algebra::product_of_fields(Q, 2))),
        },
        CatalogEntry {
            id: "trivial-M2",
            description: "the trivial coring on M₂(ℚ)",
            rationale: "trivial corings are coseparable; comodules are modules over the semisimple M₂(ℚ)",
            expected: expect(Some(true), true, true),
            build: || Ok(Coring::trivial(&Algebra::matrix_algebra(Q, 2))),
        },
        CatalogEntry {
            id: "trivial-dual-numbers",
            description: "the trivial coring on ℚ[x]/(x²)",
            rationale: "coseparable as every trivial coring, but its comodules are ℚ[x]/(x²)-modules, \
                        which are not semisimple; the base is not separable",
            expected: expect(Some(true), false, false),
            build: || Ok(Coring::trivial(&dual_numbers())),
        },
        CatalogEntry {
            id: "comatrix-2",
            description: "the 2x2 comatrix coalgebra",
            rationale: "dual to M₂(ℚ), a separable algebra; γ(e_ab ⊗ e_cd) = ½ δ_bc δ_ad",
            expected: expect(Some(true), true, true),
            build: || Ok(Coring::comatrix(Q, 2)),
        },
        CatalogEntry {
            id: "comatrix-3",
            description: "the 3x3 comatrix coalgebra",
            rationale: "dual to M₃(ℚ), a separable algebra",
            expected: expect(Some(true), true, true),
            build: || Ok(Coring::comatrix(Q, 3)),
        },
        CatalogEntry {
            id: "grouplike-2",
            description: "the group-like coalgebra on two elements",
            rationale: "dual to ℚ × ℚ; γ(g ⊗ h) = δ_gh",
            expected: expect(Some(true), true, true),
            build: || Ok(Coring::group_like(Q, 2)),
        },
        CatalogEntry {
            id: "grouplike-3",
            description: "the group-like coalgebra on three elements",
            rationale: "dual to ℚ³",
            expected: expect(Some(true), true, true),
            build: || Ok(Coring::group_like(Q, 3)),
        },
        CatalogEntry {
            id: "dual-dual-numbers",
            description: "the coalgebra dual to ℚ[x]/(x²)",
            rationale: "its dual algebra ℚ[x]/(x²) has a radical, so it is neither coseparable nor semisimple",
            expected: expect(Some(false), false, true),
            build: || Ok(Coring::dual_coalgebra(&dual_numbers())),
        },
        CatalogEntry {
            id: "dual-truncated-3",
            description: "the coalgebra dual to ℚ[x]/(x³)",
            rationale: "its dual algebra has a two-dimensional radical",
            expected: expect(Some(false), false, true),
            build: || Ok(Coring::dual_coalgebra(&Algebra::truncated_polynomials(Q, 3))),
        },
        CatalogEntry {
            id: "opposite-comatrix-2",
            description: "the opposite of the 2x2 comatrix coalgebra",
            rationale: "isomorphic to the comatrix coalgebra via transposition",
            expected: expect(Some(true), true, true),
            build: || opposite_coring(&Coring::comatrix(Q, 2)),
        },
        CatalogEntry {
            id: "sweedler-M2",
            description: "Sweedler's coring M₂(ℚ) ⊗_ℚ M₂(ℚ)",
            rationale: "ℚ → M₂(ℚ) splits, so the canonical coring is coseparable; comodules are \
                        descent data, i.e. ℚ-vector spaces",
            expected: expect(Some(true), true, true),
            build: || sweedler_coring(&Algebra::matrix_algebra(Q, 2), &ground_span(&Algebra::matrix_algebra(Q, 2))),
        },
        CatalogEntry {
            id: "sweedler-M2-diagonal",
            description: "Sweedler's coring M₂(ℚ) ⊗_D M₂(ℚ) over the diagonal D = ℚ × ℚ",
            rationale: "D → M₂(ℚ) splits as D-bimodules; comodules are D-modules",
            expected: expect(Some(true), true, true),
            build: || sweedler_coring(&Algebra::matrix_algebra(Q, 2), &diagonal_of_m2()),
        },
        CatalogEntry {
            id: "sweedler-dual-numbers",
            description: "Sweedler's coring ℚ[x]/(x²) ⊗_ℚ ℚ[x]/(x²)",
            rationale: "ℚ → ℚ[x]/(x²) splits, so the coring is coseparable; comodules are descent \
                        data, i.e. ℚ-vector spaces, so it is semisimple",
            expected: expect(Some(true), true, false),
            build: || sweedler_coring(&dual_numbers(), &ground_span(&dual_numbers())),
        },
        CatalogEntry {
            id: "comatrix-2-x-grouplike-2",
            description: "the tensor product of comatrix(2) and grouplike(2)",
            rationale: "dual to M₂(ℚ) × M₂(ℚ)",
            expected: expect(Some(true), true, true),
            build: || tensor_coring(&Coring::comatrix(Q, 2), &Coring::group_like(Q, 2)),
        },
        CatalogEntry {
            id: "comatrix-2-x-comatrix-2",
            description: "the tensor product of two 2x2 comatrix coalgebras",
            rationale: "dual to M₄(ℚ); coseparability is not evaluated at this size",
            expected: Expected { coseparable: None, semisimple: Some(true), base_separable: true },
            build: || tensor_coring(&Coring::comatrix(Q, 2), &Coring::comatrix(Q, 2)),
        },
        CatalogEntry {
            id: "comatrix-2-over-Qi",
            description: "comatrix(2) after base change to ℚ(i)",
            rationale: "coseparability is stable under base change; the dual is M₂(ℚ(i))",
            expected: expect(Some(true), true, true),
            build: || base_change(&Coring::comatrix(Q, 2), &field_extension(&Polynomial::from_ints(&[1, 0, 1]), false)?),
        },
        CatalogEntry {
            id: "grouplike-2-over-Qcbrt2",
            description: "grouplike(2) after base change to ℚ(∛2)",
            rationale: "dual to ℚ(∛2) × ℚ(∛2)",
            expected: expect(Some(true), true, true),
            build: || {
                base_change(&Coring::group_like(Q, 2), &field_extension(&Polynomial::from_ints(&[-2, 0, 0, 1]), false)?)
            },
        },
        CatalogEntry {
            id: "entwined-M2-grouplike-2",
            description: "M₂(ℚ) ⊗ grouplike(2) with the flip entwining",
            rationale: "A ⊗ γ_C is a cointegral; comodules are pairs of M₂(ℚ)-modules",
            expected: expect(Some(true), true, true),
            build: || entwined_coring(&Entwining::flip(&Algebra::matrix_algebra(Q, 2), &Coring::group_like(Q, 2))),
        },
        CatalogEntry {
            id: "entwined-dual-numbers-comatrix-2",
            description: "ℚ[x]/(x²) ⊗ comatrix(2) with the flip entwining",
            rationale: "A ⊗ γ_C is a cointegral, but comodules are ℚ[x]/(x²) ⊗ M₂(ℚ)-modules, \
                        which are not semisimple; the base is not separable",
            expected: expect(Some(true), false, false),
            build: || entwined_coring(&Entwining::flip(&dual_numbers(), &Coring::comatrix(Q, 2))),
        },
        CatalogEntry {
            id: "entwined-graded-Z2",
            description: "ℚZ₂ ⊗ grouplike(2) entwined by the Z₂-grading with t odd",
            rationale: "comodules are Z₂-graded ℚZ₂-modules; ℚZ₂ is strongly graded with degree-zero \
                        part ℚ, so they are ℚ-vector spaces; γ(a ⊗ g ⊗ h) = a δ_gh is a cointegral",
            expected: expect(Some(true), true, true),
            build: || entwined_coring(&Entwining::cyclic_grading(&Algebra::cyclic_group(Q, 2), &[0, 1], 2)?),
        },
    ];
    entries.sort_by_key(|e| e.id);
    entries
}

/// Entries whose id matches the glob `pattern` (`*` and `?` wildcards).
pub fn select(pattern: Option<&str>) -> Result<Vec<CatalogEntry>> {
    let all = catalog();
    let Some(p) = pattern else { return Ok(all) };
    let glob = glob::Pattern::new(p).map_err(|e| crate::error::Error::Parse(format!("filter {p:?}: {e}")))?;
    Ok(all.into_iter().filter(|e| glob.matches(e.id)).collect())
}

/// Bicomodules for the bicomodule/comodule equivalence, sorted by id.
pub fn bicomodules() -> Result<Vec<(&'static str, Bicomodule)>> {
    Ok(vec![
        ("comatrix-2-regular", Bicomodule::regular(&Coring::comatrix(Q, 2))),
        ("comatrix-2-square", Bicomodule::square(&Coring::comatrix(Q, 2))?),
        ("dual-dual-numbers-regular", Bicomodule::regular(&Coring::dual_coalgebra(&dual_numbers()))),
        ("grouplike-2-regular", Bicomodule::regular(&Coring::group_like(Q, 2))),
        ("grouplike-2-square", Bicomodule::square(&Coring::group_like(Q, 2))?),
        ("trivial-M2-regular", Bicomodule::regular(&Coring::trivial(&Algebra::matrix_algebra(Q, 2)))),
        ("trivial-dual-numbers-regular", Bicomodule::regular(&Coring::trivial(&dual_numbers()))),
    ])
}

/// Entwinings, sorted by id.
pub fn entwinings() -> Result<Vec<(&'static str, Entwining)>> {
    Ok(vec![
        ("flip-M2-grouplike-2", Entwining::flip(&Algebra::matrix_algebra(Q, 2), &Coring::group_like(Q, 2))),
        ("flip-Q-grouplike-2", Entwining::flip(&Algebra::ground(Q), &Coring::group_like(Q, 2))),
        ("flip-dual-numbers-comatrix-2", Entwining::flip(&dual_numbers(), &Coring::comatrix(Q, 2))),
        ("graded-Z2", Entwining::cyclic_grading(&Algebra::cyclic_group(Q, 2), &[0, 1], 2)?),
        ("graded-dual-numbers-Z3", Entwining::cyclic_grading(&dual_numbers(), &[0, 1], 3)?),
    ])
}

/// What the runner computed for one entry.
#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub description: String,
    pub base_dim: usize,
    pub dim: usize,
    pub valid: bool,
    pub violations: Vec<Violation>,
    pub base_separable: bool,
    pub coseparable: Option<bool>,
    /// `γ = επ` when coseparable.
    pub gamma: Option<MatrixJson>,
    pub pi: Option<MatrixJson>,
    pub semisimple: Option<SemisimpleEvidence>,
    pub theorem: Option<TheoremReport>,
    pub errors: Vec<String>,
    pub mismatches: Vec<String>,
    /// Wall-clock milliseconds; only recorded on request, since it breaks reproducibility.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl EntryReport {
    pub fn passes(&self) -> bool {
        self.valid && self.errors.is_empty() && self.mismatches.is_empty() && self.theorem.as_ref().is_none_or(|t| t.passes())
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    /// Also evaluate the main-theorem harness on every entry.
    pub theorem: bool,
    /// Carrier-dimension limit for derived corings in the harness.
    pub size_limit: Option<usize>,
    /// Record wall-clock time per entry.
    pub timings: bool,
}

/// Runs every decision procedure on one entry and compares with its expected verdicts.
pub fn run_entry(entry: &CatalogEntry, options: RunOptions) -> EntryReport {
    let start = std::time::Instant::now();
    let mut report = evaluate(entry, options);
    if options.timings {
        report.elapsed_ms = Some(start.elapsed().as_millis());
    }
    report
}

fn evaluate(entry: &CatalogEntry, options: RunOptions) -> EntryReport {
    let mut report = EntryReport {
        id: entry.id.to_string(),
        description: entry.description.to_string(),
        base_dim: 0,
        dim: 0,
        valid: false,
        violations: Vec::new(),
        base_separable: false,
        coseparable: None,
        gamma: None,
        pi: None,
        semisimple: None,
        theorem: None,
        errors: Vec::new(),
        mismatches: Vec::new(),
        elapsed_ms: None,
    };
    let c = match entry.build() {
        Ok(c) => c,
        Err(e) => {
            report.errors.push(format!("construction: {e}"));
            return report;
        }
    };
    report.base_dim = c.base().dim();
    report.dim = c.dim();
    let check = c.check();
    report.valid = check.is_valid();
    report.violations = check.violations;
    report.base_separable = c.base().is_separable();
    if entry.expected.coseparable.is_some() {
        match coseparability(&c) {
            Ok(w) => {
                report.coseparable = Some(w.is_some());
                if let Some(w) = w {
                    report.gamma = Some(MatrixJson::from(&w.gamma));
                    report.pi = Some(MatrixJson::from(&w.pi));
                }
            }
            Err(e) => report.errors.push(format!("coseparability: {e}")),
        }
    }
    if entry.expected.semisimple.is_some() {
        match is_semisimple_coring(&c) {
            Ok(s) => report.semisimple = Some(s),
            Err(e) => report.errors.push(format!("semisimplicity: {e}")),
        }
    }
    if options.theorem && entry.expected.coseparable.is_some() {
        let limit = options.size_limit.unwrap_or(crate::coring::DEFAULT_SIZE_LIMIT);
        let field = c.base().field();
        match main_theorem_report(
            &c,
            &crate::coring::default_extensions(),
            &crate::coring::default_test_corings(field),
            limit,
        ) {
            Ok(t) => report.theorem = Some(t),
            Err(e) => report.errors.push(format!("theorem: {e}")),
        }
    }
    let e = entry.expected;
    if report.base_separable != e.base_separable {
        report.mismatches.push(format!("base separable: expected {}, got {}", e.base_separable, report.base_separable));
    }
    if let (Some(want), Some(got)) = (e.coseparable, report.coseparable) {
        if want != got {
            report.mismatches.push(format!("coseparable: expected {want}, got {got}"));
        }
    }
    if let (Some(want), Some(got)) = (e.semisimple, report.semisimple.map(|s| s.semisimple)) {
        if want != got {
            report.mismatches.push(format!("semisimple: expected {want}, got {got}"));
        }
    }
    report
}

/// Runs the matching entries concurrently; the result is sorted by id.
pub fn run_catalog(pattern: Option<&str>, options: RunOptions) -> Result<Vec<EntryReport>> {
    let entries = select(pattern)?;
    let mut reports: Vec<EntryReport> = entries.par_iter().map(|e| run_entry(e, options)).collect();
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(reports)
}
