//! Command implementations. Each returns the process exit code:
//!
//! | code | meaning                                                   |
//! |------|-----------------------------------------------------------|
//! | 0    | success                                                   |
//! | 1    | unreadable input, parse error, or category axiom failure  |
//! | 2    | internal identity violation (lemma failure — a bug)       |
//! | 3    | the category has no Möbius inversion (`det A = 0`)        |
//! | 4    | a numeric check missed its tolerance                      |

use crate::corpus::{generate_corpus, CorpusSpec};
use crate::format::{digest_bytes, CategoryFile, FormatError};
use crate::report::{
    closed_form_terms, matrix_dto, rat_str, EulerDto, LemmasDto, PfDto, ReportDocument, RootSetDto,
};
use catzeta::category::{CategoryError, FiniteCategory};
use catzeta::euler::euler_characteristic;
use catzeta::verify::{lemma_suite, verify_conjecture, ConjectureReport};
use catzeta::zeta::{analyze, nerve_counts, zeta_series, ZetaError};
use catzeta::RationalMatrix;
use serde::Serialize;
use std::fmt::Write as _;
use std::path::Path;
use thiserror::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_IDENTITY: u8 = 2;
pub const EXIT_SINGULAR: u8 = 3;
pub const EXIT_TOLERANCE: u8 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Structured,
}

/// Output sink honouring `--format` and `--quiet`.
pub struct Printer {
    pub format: OutputFormat,
    pub quiet: bool,
}

impl Printer {
    /// Body text, suppressed by `--quiet`.
    fn detail(&self, s: &str) {
        if !self.quiet {
            print!("{s}");
        }
    }

    /// Verdict lines, always printed in text mode.
    fn essential(&self, s: &str) {
        println!("{s}");
    }

    fn json<T: Serialize>(&self, value: &T) {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("reports always serialize")
        );
    }
}

#[derive(Debug, Error)]
enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Format(#[from] FormatError),
}

struct Input {
    category: FiniteCategory,
    adjacency: RationalMatrix,
    digest: String,
}

fn load(path: &Path) -> Result<Input, LoadError> {
    let bytes = std::fs::read(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let file = CategoryFile::parse(
        std::str::from_utf8(&bytes)
            .map_err(|e| LoadError::Format(FormatError::Parse(serde::de::Error::custom(e))))?,
    )?;
    let category = file.build()?;
    let adjacency = category.adjacency_matrix();
    Ok(Input {
        category,
        adjacency,
        digest: digest_bytes(&bytes),
    })
}

fn input_error(e: impl std::fmt::Display) -> u8 {
    eprintln!("error: {e}");
    EXIT_INPUT
}

// --- validate ---------------------------------------------------------

#[derive(Serialize)]
struct ValidateDto {
    valid: bool,
    objects: Option<usize>,
    morphisms: Option<usize>,
    violations: Vec<String>,
}

pub fn validate(path: &Path, p: &Printer) -> u8 {
    match load(path) {
        Ok(input) => {
            let dto = ValidateDto {
                valid: true,
                objects: Some(input.category.num_objects()),
                morphisms: Some(input.category.num_morphisms()),
                violations: vec![],
            };
            match p.format {
                OutputFormat::Structured => p.json(&dto),
                OutputFormat::Text => p.essential(&format!(
                    "valid: {} objects, {} morphisms",
                    input.category.num_objects(),
                    input.category.num_morphisms()
                )),
            }
            EXIT_OK
        }
        Err(LoadError::Format(FormatError::Category(CategoryError::Axioms(report)))) => {
            let dto = ValidateDto {
                valid: false,
                objects: None,
                morphisms: None,
                violations: report.violations.iter().map(|v| v.to_string()).collect(),
            };
            match p.format {
                OutputFormat::Structured => p.json(&dto),
                OutputFormat::Text => {
                    p.essential("invalid: category axioms violated");
                    p.detail(&format!("{report}\n"));
                }
            }
            EXIT_INPUT
        }
        Err(e) => input_error(e),
    }
}

// --- adjacency --------------------------------------------------------

#[derive(Serialize)]
struct AdjacencyDto {
    objects: Vec<String>,
    matrix: Vec<Vec<String>>,
}

pub fn adjacency(path: &Path, p: &Printer) -> u8 {
    let input = match load(path) {
        Ok(i) => i,
        Err(e) => return input_error(e),
    };
    match p.format {
        OutputFormat::Structured => p.json(&AdjacencyDto {
            objects: input.category.objects().to_vec(),
            matrix: matrix_dto(&input.adjacency),
        }),
        OutputFormat::Text => {
            let mut out = String::new();
            for row in matrix_dto(&input.adjacency) {
                let _ = writeln!(out, "[{}]", row.join(" "));
            }
            print!("{out}");
        }
    }
    EXIT_OK
}

// --- nerve ------------------------------------------------------------

#[derive(Serialize)]
struct NerveDto {
    max_m: u32,
    /// `counts[m]` is the number of composable chains of length `m`.
    counts: Vec<String>,
}

pub fn nerve(path: &Path, max_m: u32, p: &Printer) -> u8 {
    let input = match load(path) {
        Ok(i) => i,
        Err(e) => return input_error(e),
    };
    let counts = match nerve_counts(&input.adjacency, max_m) {
        Ok(c) => c,
        Err(e) => return input_error(e),
    };
    match p.format {
        OutputFormat::Structured => p.json(&NerveDto {
            max_m,
            counts: counts.iter().map(rat_str).collect(),
        }),
        OutputFormat::Text => {
            for (m, c) in counts.iter().enumerate() {
                p.essential(&format!("N_{m} = {c}"));
            }
        }
    }
    EXIT_OK
}

// --- zeta -------------------------------------------------------------

#[derive(Serialize)]
struct SeriesDto {
    order: u32,
    /// Exact coefficients of `z^0 .. z^order`.
    coeffs: Vec<String>,
}

pub fn zeta_series_cmd(path: &Path, order: u32, p: &Printer) -> u8 {
    let input = match load(path) {
        Ok(i) => i,
        Err(e) => return input_error(e),
    };
    let coeffs = match zeta_series(&input.adjacency, order) {
        Ok(c) => c,
        Err(e) => return input_error(e),
    };
    match p.format {
        OutputFormat::Structured => p.json(&SeriesDto {
            order,
            coeffs: coeffs.iter().map(rat_str).collect(),
        }),
        OutputFormat::Text => {
            for (m, c) in coeffs.iter().enumerate() {
                p.essential(&format!("z^{m}: {c}"));
            }
        }
    }
    EXIT_OK
}

#[derive(Serialize)]
struct ClosedFormDto {
    exact_track: bool,
    roots: RootSetDto,
    partial_fractions: PfDto,
    terms: Vec<crate::report::ClosedFormTermDto>,
}

pub fn zeta_closed_form(path: &Path, p: &Printer) -> u8 {
    let input = match load(path) {
        Ok(i) => i,
        Err(e) => return input_error(e),
    };
    let analysis = match analyze(&input.adjacency) {
        Ok(a) => a,
        Err(ZetaError::NoMobiusInversion) => {
            eprintln!(
                "error: det A = 0 — the category has no Möbius inversion, so no closed form exists"
            );
            return EXIT_SINGULAR;
        }
        Err(e) => return identity_error(e),
    };
    match p.format {
        OutputFormat::Structured => p.json(&ClosedFormDto {
            exact_track: analysis.roots.all_exact(),
            roots: RootSetDto::from_core(&analysis.roots),
            partial_fractions: PfDto::from_core(&analysis.pf),
            terms: closed_form_terms(&analysis.closed_form.roots),
        }),
        OutputFormat::Text => {
            p.essential("zeta(z) = prod_k (1 - lambda_k z)^(-beta_k) * exp(sum_j gamma_{k,j} z^j / (j (1 - lambda_k z)^j))");
            for t in closed_form_terms(&analysis.closed_form.roots) {
                let gammas: Vec<String> =
                    t.gammas.iter().map(crate::report::ValueDto::text).collect();
                p.essential(&format!(
                    "  lambda = {:<28} beta = {:<28} gamma = [{}]",
                    t.lambda.text(),
                    t.beta.text(),
                    gammas.join(", ")
                ));
            }
        }
    }
    EXIT_OK
}

fn identity_error(e: impl std::fmt::Display) -> u8 {
    eprintln!("internal identity violation: {e}");
    EXIT_IDENTITY
}

// --- euler ------------------------------------------------------------

pub fn euler(path: &Path, p: &Printer) -> u8 {
    let input = match load(path) {
        Ok(i) => i,
        Err(e) => return input_error(e),
    };
    let result = match euler_characteristic(&input.adjacency) {
        Ok(r) => r,
        Err(e) => return input_error(e),
    };
    let dto = EulerDto::from_core(&result);
    match p.format {
        OutputFormat::Structured => p.json(&dto),
        OutputFormat::Text => {
            let opt = |v: &Option<String>| v.clone().unwrap_or_else(|| "undefined".into());
            p.essential(&format!("chi_series = {}", opt(&dto.chi_series)));
            p.essential(&format!("chi_mobius = {}", opt(&dto.chi_mobius)));
        }
    }
    if dto.chi_mobius.is_none() {
        EXIT_SINGULAR
    } else {
        EXIT_OK
    }
}

// --- lemmas -----------------------------------------------------------

pub fn lemmas(path: &Path, p: &Printer) -> u8 {
    let input = match load(path) {
        Ok(i) => i,
        Err(e) => return input_error(e),
    };
    let suite = match lemma_suite(&input.adjacency) {
        Ok(s) => s,
        Err(e) => return identity_error(e),
    };
    let dto = LemmasDto::from_core(&suite);
    match p.format {
        OutputFormat::Structured => p.json(&dto),
        OutputFormat::Text => {
            p.detail(&dto.text());
            p.essential(&format!(
                "lemmas: {}",
                if dto.all_pass { "PASS" } else { "FAIL" }
            ));
        }
    }
    if dto.all_pass {
        EXIT_OK
    } else {
        EXIT_IDENTITY
    }
}

// --- verify -----------------------------------------------------------

/// Failure class of a finished verification, for exit codes.
fn report_exit(report: &ConjectureReport) -> u8 {
    if report.all_pass() {
        return EXIT_OK;
    }
    // Lemma failures and violation classifications mean the tool itself is
    // wrong; everything else is a missed tolerance.
    let internal = !report.lemmas.all_pass()
        || report.has_violation()
        || (report.exact_track && !report.all_pass());
    if internal {
        EXIT_IDENTITY
    } else {
        EXIT_TOLERANCE
    }
}

pub fn verify(path: &Path, horizon: u32, tol: f64, p: &Printer) -> u8 {
    let input = match load(path) {
        Ok(i) => i,
        Err(e) => return input_error(e),
    };
    let (analysis, report) = match analyze(&input.adjacency)
        .and_then(|a| verify_conjecture(&input.adjacency, horizon, tol).map(|r| (a, r)))
    {
        Ok(pair) => pair,
        Err(ZetaError::NoMobiusInversion) => {
            eprintln!("error: det A = 0 — the category has no Möbius inversion");
            return EXIT_SINGULAR;
        }
        Err(e) => return identity_error(e),
    };
    let doc = ReportDocument::new(
        input.digest,
        input.category.num_objects(),
        input.category.num_morphisms(),
        &input.adjacency,
        &analysis,
        &report,
    );
    match p.format {
        OutputFormat::Structured => p.json(&doc),
        OutputFormat::Text => {
            p.detail(&doc.text());
            if p.quiet {
                p.essential(&format!(
                    "overall: {}",
                    if doc.conjecture.all_pass {
                        "PASS"
                    } else {
                        "FAIL"
                    }
                ));
            }
        }
    }
    report_exit(&report)
}

// --- verify-corpus ----------------------------------------------------

#[derive(Serialize)]
struct CorpusEntryDto {
    name: String,
    digest: String,
    objects: usize,
    morphisms: usize,
    outcome: String,
    exact_track: Option<bool>,
    failed_checks: Vec<String>,
}

#[derive(Serialize)]
struct CorpusDto {
    seed: u64,
    total: usize,
    passed: usize,
    singular_expected: usize,
    failed: usize,
    entries: Vec<CorpusEntryDto>,
}

fn failed_checks(report: &ConjectureReport) -> Vec<String> {
    let mut out = vec![];
    if !report.c1.pass {
        out.push("c1-chain-counts".into());
    }
    if !report.c2.pass {
        out.push("c2-beta-sum".into());
    }
    if !report.c3.pass {
        out.push("c3-algebraic-integers".into());
    }
    if !report.c4.pass {
        out.push("c4-euler".into());
    }
    if !report.final_identity.pass {
        out.push("final-identity".into());
    }
    if !report.euler_match {
        out.push("euler-agreement".into());
    }
    if !report.lemmas.all_pass() {
        out.push("lemma-suite".into());
    }
    if report.has_violation() {
        out.push("classification-violation".into());
    }
    out
}

pub fn verify_corpus(seed: u64, spec_path: Option<&Path>, p: &Printer) -> u8 {
    let spec = match spec_path {
        None => CorpusSpec::default(),
        Some(path) => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return input_error(format!("cannot read {}: {e}", path.display())),
            };
            match serde_json::from_str(&text) {
                Ok(s) => s,
                Err(e) => return input_error(format!("bad corpus spec: {e}")),
            }
        }
    };

    let mut entries = vec![];
    let mut passed = 0usize;
    let mut singular_expected = 0usize;
    let mut failed = 0usize;
    let mut exit = EXIT_OK;
    for entry in generate_corpus(seed, &spec) {
        let a: RationalMatrix = entry.category.adjacency_matrix();
        let verdict = verify_conjecture(&a, 20, 1e-9);
        let (outcome, exact_track, checks) = match (&verdict, entry.expect_singular) {
            (Err(ZetaError::NoMobiusInversion), true) => {
                singular_expected += 1;
                ("singular-expected".to_string(), None, vec![])
            }
            (Err(ZetaError::NoMobiusInversion), false) => {
                failed += 1;
                exit = exit.max(EXIT_SINGULAR);
                ("unexpected-singular".to_string(), None, vec![])
            }
            (Err(e), _) => {
                failed += 1;
                exit = exit.max(EXIT_IDENTITY);
                (format!("error: {e}"), None, vec![])
            }
            (Ok(report), expect_singular) => {
                if expect_singular {
                    failed += 1;
                    exit = exit.max(EXIT_SINGULAR);
                    ("expected-singular-but-verified".to_string(), None, vec![])
                } else if report.all_pass() {
                    passed += 1;
                    ("pass".to_string(), Some(report.exact_track), vec![])
                } else {
                    failed += 1;
                    exit = exit.max(report_exit(report));
                    (
                        "fail".to_string(),
                        Some(report.exact_track),
                        failed_checks(report),
                    )
                }
            }
        };
        if p.format == OutputFormat::Text {
            let track = match exact_track {
                Some(true) => " (exact)",
                Some(false) => " (numeric)",
                None => "",
            };
            let detail = if checks.is_empty() {
                String::new()
            } else {
                format!(" [{}]", checks.join(", "))
            };
            p.detail(&format!(
                "{:<28} {}{}{}\n",
                entry.name,
                outcome.to_uppercase(),
                track,
                detail
            ));
        }
        entries.push(CorpusEntryDto {
            name: entry.name,
            digest: entry.file.digest(),
            objects: entry.category.num_objects(),
            morphisms: entry.category.num_morphisms(),
            outcome,
            exact_track,
            failed_checks: checks,
        });
    }

    let dto = CorpusDto {
        seed,
        total: entries.len(),
        passed,
        singular_expected,
        failed,
        entries,
    };
    match p.format {
        OutputFormat::Structured => p.json(&dto),
        OutputFormat::Text => p.essential(&format!(
            "corpus (seed {}): {} categories — {} verified, {} singular as expected, {} failed",
            seed, dto.total, passed, singular_expected, failed
        )),
    }
    exit
}
