//! Serializable report documents and their plain-text rendering.
//!
//! Exact rationals travel as `"p/q"` strings (plain `"p"` when the
//! denominator is one) so the structured form is lossless; numeric values
//! keep full `f64` precision in JSON and are printed with 15 significant
//! digits in text. Every quantity carries its track (`exact` or
//! `numeric`).

use catzeta::euler::EulerResult;
use catzeta::partial_fractions::{PfCoeffs, PfDecomposition};
use catzeta::roots::RootSet;
use catzeta::verify::{ConjectureReport, LemmaSuite, PointClass};
use catzeta::zeta::{ClosedFormRoot, ZetaAnalysis};
use catzeta::{RationalMatrix, RationalPoly, Value};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

pub fn rat_str(r: &BigRational) -> String {
    r.to_string()
}

/// 15 significant digits.
pub fn sig15(x: f64) -> String {
    format!("{x:.14e}")
}

fn finite_or_none(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

/// A single exact-or-numeric quantity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "track", rename_all = "kebab-case")]
pub enum ValueDto {
    Exact { value: String },
    Numeric { re: f64, im: f64 },
}

impl ValueDto {
    pub fn from_value(v: &Value) -> Self {
        match v {
            Value::Exact(r) => ValueDto::Exact { value: rat_str(r) },
            Value::Numeric(z) => ValueDto::Numeric { re: z.re, im: z.im },
        }
    }

    pub fn text(&self) -> String {
        match self {
            ValueDto::Exact { value } => format!("{value} [exact]"),
            ValueDto::Numeric { re, im } => {
                if *im == 0.0 {
                    format!("{} [numeric]", sig15(*re))
                } else if *im < 0.0 {
                    format!("{} - {}i [numeric]", sig15(*re), sig15(-im))
                } else {
                    format!("{} + {}i [numeric]", sig15(*re), sig15(*im))
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootDto {
    pub alpha: ValueDto,
    pub lambda: ValueDto,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootSetDto {
    pub roots: Vec<RootDto>,
    /// Leading coefficient of the factored denominator.
    pub unit: String,
    pub numeric_roots: usize,
    pub max_polish_residual: Option<f64>,
    pub min_root_gap: Option<f64>,
}

impl RootSetDto {
    pub fn from_core(r: &RootSet) -> Self {
        RootSetDto {
            roots: r
                .roots
                .iter()
                .map(|root| RootDto {
                    alpha: ValueDto::from_value(&root.alpha),
                    lambda: ValueDto::from_value(&root.lambda),
                    multiplicity: root.multiplicity,
                })
                .collect(),
            unit: rat_str(&r.unit),
            numeric_roots: r.diagnostics.numeric_roots,
            max_polish_residual: finite_or_none(r.diagnostics.max_residual),
            min_root_gap: finite_or_none(r.diagnostics.min_gap),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PfTermDto {
    pub alpha: ValueDto,
    pub multiplicity: u32,
    /// `coeffs[j - 1]` is the coefficient of `1/(z - alpha)^j`.
    pub coeffs: Vec<ValueDto>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PfDto {
    pub scale: String,
    pub terms: Vec<PfTermDto>,
}

impl PfDto {
    pub fn from_core(pf: &PfDecomposition) -> Self {
        PfDto {
            scale: rat_str(&pf.scale),
            terms: pf
                .terms
                .iter()
                .map(|t| PfTermDto {
                    alpha: ValueDto::from_value(&t.alpha),
                    multiplicity: t.multiplicity,
                    coeffs: match &t.coeffs {
                        PfCoeffs::Exact(cs) => cs
                            .iter()
                            .map(|c| ValueDto::Exact { value: rat_str(c) })
                            .collect(),
                        PfCoeffs::Numeric(cs) => cs
                            .iter()
                            .map(|c| ValueDto::Numeric { re: c.re, im: c.im })
                            .collect(),
                    },
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormTermDto {
    pub lambda: ValueDto,
    pub beta: ValueDto,
    pub gammas: Vec<ValueDto>,
}

pub fn closed_form_terms(roots: &[ClosedFormRoot]) -> Vec<ClosedFormTermDto> {
    roots
        .iter()
        .map(|r| match r {
            ClosedFormRoot::Exact(t) => ClosedFormTermDto {
                lambda: ValueDto::Exact {
                    value: rat_str(&t.lambda),
                },
                beta: ValueDto::Exact {
                    value: rat_str(&t.beta),
                },
                gammas: t
                    .gammas
                    .iter()
                    .map(|g| ValueDto::Exact { value: rat_str(g) })
                    .collect(),
            },
            ClosedFormRoot::Numeric(t) => ClosedFormTermDto {
                lambda: ValueDto::Numeric {
                    re: t.lambda.re,
                    im: t.lambda.im,
                },
                beta: ValueDto::Numeric {
                    re: t.beta.re,
                    im: t.beta.im,
                },
                gammas: t
                    .gammas
                    .iter()
                    .map(|g| ValueDto::Numeric { re: g.re, im: g.im })
                    .collect(),
            },
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EulerDto {
    pub chi_series: Option<String>,
    pub chi_mobius: Option<String>,
}

impl EulerDto {
    pub fn from_core(e: &EulerResult) -> Self {
        EulerDto {
            chi_series: e.chi_series.as_ref().map(rat_str),
            chi_mobius: e.chi_mobius.as_ref().map(rat_str),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LemmasDto {
    pub det_poly_boundary: bool,
    pub adj_sum_boundary: bool,
    pub numerator_boundary: bool,
    pub division_identity: bool,
    pub degree_drop: Option<bool>,
    pub binomial_expansion: bool,
    pub all_pass: bool,
}

impl LemmasDto {
    pub fn from_core(l: &LemmaSuite) -> Self {
        LemmasDto {
            det_poly_boundary: l.det_poly_boundary,
            adj_sum_boundary: l.adj_sum_boundary,
            numerator_boundary: l.numerator_boundary,
            division_identity: l.division_identity,
            degree_drop: l.degree_drop,
            binomial_expansion: l.binomial_expansion,
            all_pass: l.all_pass(),
        }
    }

    pub fn text(&self) -> String {
        let line = |name: &str, ok: bool| format!("  {name:<22} {}\n", pass_str(ok));
        let mut out = String::new();
        out.push_str(&line("boundary: det poly", self.det_poly_boundary));
        out.push_str(&line("boundary: adjugate sum", self.adj_sum_boundary));
        out.push_str(&line("boundary: numerator", self.numerator_boundary));
        out.push_str(&line("division identity", self.division_identity));
        match self.degree_drop {
            Some(ok) => out.push_str(&line("degree drop", ok)),
            None => out.push_str("  degree drop            n/a (singular)\n"),
        }
        out.push_str(&line("binomial expansion", self.binomial_expansion));
        out.push_str(&line("lemma suite", self.all_pass));
        out
    }
}

pub fn point_class_str(c: PointClass) -> &'static str {
    match c {
        PointClass::Pole => "pole",
        PointClass::Zero => "zero",
        PointClass::EssentialExp => "essential-exp",
        PointClass::Violation => "violation",
    }
}

fn pass_str(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct C1Dto {
    pub horizon: u32,
    pub max_rel_error: f64,
    pub exact: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct C2Dto {
    pub sum_beta: ValueDto,
    pub abs_error: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct C3RootDto {
    pub lambda: ValueDto,
    pub residual: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct C3Dto {
    pub monic_integer: bool,
    pub roots: Vec<C3RootDto>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct C4Dto {
    pub closed_form_value: ValueDto,
    pub chi: String,
    pub rel_error: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FinalIdentityDto {
    pub left: ValueDto,
    pub right: String,
    pub rel_error: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditioningDto {
    pub numeric_roots: usize,
    pub min_root_gap: Option<f64>,
    pub max_polish_residual: Option<f64>,
    pub pf_residual: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjectureDto {
    pub n: usize,
    pub det_a: String,
    pub exact_track: bool,
    pub c1: C1Dto,
    pub c2: C2Dto,
    pub c3: C3Dto,
    pub c4: C4Dto,
    pub final_identity: FinalIdentityDto,
    pub classification: Vec<String>,
    pub euler_match: bool,
    pub lemmas: LemmasDto,
    pub conditioning: ConditioningDto,
    pub all_pass: bool,
}

impl ConjectureDto {
    pub fn from_core(r: &ConjectureReport) -> Self {
        ConjectureDto {
            n: r.n,
            det_a: rat_str(&r.det_a),
            exact_track: r.exact_track,
            c1: C1Dto {
                horizon: r.c1.horizon,
                max_rel_error: r.c1.max_rel_error,
                exact: r.c1.exact,
                pass: r.c1.pass,
            },
            c2: C2Dto {
                sum_beta: ValueDto::from_value(&r.c2.sum_beta),
                abs_error: r.c2.abs_error,
                pass: r.c2.pass,
            },
            c3: C3Dto {
                monic_integer: r.c3.monic_integer,
                roots: r
                    .c3
                    .roots
                    .iter()
                    .map(|root| C3RootDto {
                        lambda: ValueDto::from_value(&root.lambda),
                        residual: root.residual,
                        pass: root.pass,
                    })
                    .collect(),
                pass: r.c3.pass,
            },
            c4: C4Dto {
                closed_form_value: ValueDto::from_value(&r.c4.closed_form_value),
                chi: rat_str(&r.c4.chi),
                rel_error: r.c4.rel_error,
                pass: r.c4.pass,
            },
            final_identity: FinalIdentityDto {
                left: ValueDto::from_value(&r.final_identity.left),
                right: rat_str(&r.final_identity.right),
                rel_error: r.final_identity.rel_error,
                pass: r.final_identity.pass,
            },
            classification: r
                .classification
                .iter()
                .map(|c| point_class_str(*c).to_string())
                .collect(),
            euler_match: r.euler_match,
            lemmas: LemmasDto::from_core(&r.lemmas),
            conditioning: ConditioningDto {
                numeric_roots: r.conditioning.numeric_roots,
                min_root_gap: finite_or_none(r.conditioning.min_root_gap),
                max_polish_residual: finite_or_none(r.conditioning.max_polish_residual),
                pf_residual: finite_or_none(r.conditioning.pf_residual),
            },
            all_pass: r.all_pass(),
        }
    }
}

/// Everything `verify` knows about one category.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub input_digest: String,
    pub objects: usize,
    pub morphisms: usize,
    pub adjacency: Vec<Vec<String>>,
    pub det_poly: Vec<String>,
    pub adj_sum_poly: Vec<String>,
    pub numerator_poly: Vec<String>,
    pub roots: RootSetDto,
    pub partial_fractions: PfDto,
    pub closed_form: Vec<ClosedFormTermDto>,
    pub euler: EulerDto,
    pub conjecture: ConjectureDto,
}

pub fn matrix_dto(a: &RationalMatrix) -> Vec<Vec<String>> {
    (0..a.rows())
        .map(|i| (0..a.cols()).map(|j| rat_str(&a[(i, j)])).collect())
        .collect()
}

pub fn poly_dto(p: &RationalPoly) -> Vec<String> {
    p.coeffs().iter().map(rat_str).collect()
}

impl ReportDocument {
    pub fn new(
        input_digest: String,
        objects: usize,
        morphisms: usize,
        a: &RationalMatrix,
        analysis: &ZetaAnalysis,
        report: &ConjectureReport,
    ) -> Self {
        ReportDocument {
            input_digest,
            objects,
            morphisms,
            adjacency: matrix_dto(a),
            det_poly: poly_dto(&analysis.det_poly),
            adj_sum_poly: poly_dto(&analysis.adj_sum_poly),
            numerator_poly: poly_dto(&analysis.numerator_poly),
            roots: RootSetDto::from_core(&analysis.roots),
            partial_fractions: PfDto::from_core(&analysis.pf),
            closed_form: closed_form_terms(&analysis.closed_form.roots),
            euler: EulerDto::from_core(&report.euler),
            conjecture: ConjectureDto::from_core(report),
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "category: {} objects, {} morphisms  (input sha256 {})",
            self.objects,
            self.morphisms,
            &self.input_digest[..12.min(self.input_digest.len())]
        );
        out.push_str("adjacency:\n");
        for row in &self.adjacency {
            let _ = writeln!(out, "  [{}]", row.join(" "));
        }
        let c = &self.conjecture;
        let _ = writeln!(out, "det A = {} [exact]", c.det_a);
        let _ = writeln!(
            out,
            "det(E - Az) coeffs      = [{}]",
            self.det_poly.join(", ")
        );
        let _ = writeln!(
            out,
            "sum adj(E - Az) coeffs  = [{}]",
            self.adj_sum_poly.join(", ")
        );
        let _ = writeln!(
            out,
            "numerator coeffs        = [{}]",
            self.numerator_poly.join(", ")
        );
        out.push_str("roots of det(E - Az):\n");
        for r in &self.roots.roots {
            let _ = writeln!(
                out,
                "  alpha = {:<28} lambda = {:<28} multiplicity {}",
                r.alpha.text(),
                r.lambda.text(),
                r.multiplicity
            );
        }
        let _ = writeln!(
            out,
            "partial fractions (scale {}):",
            self.partial_fractions.scale
        );
        for t in &self.partial_fractions.terms {
            let cs: Vec<String> = t.coeffs.iter().map(ValueDto::text).collect();
            let _ = writeln!(out, "  at {}: [{}]", t.alpha.text(), cs.join(", "));
        }
        out.push_str("closed form factors:\n");
        for t in &self.closed_form {
            let gammas: Vec<String> = t.gammas.iter().map(ValueDto::text).collect();
            let _ = writeln!(
                out,
                "  lambda = {:<28} beta = {:<28} gamma = [{}]",
                t.lambda.text(),
                t.beta.text(),
                gammas.join(", ")
            );
        }
        let opt = |v: &Option<String>| v.clone().unwrap_or_else(|| "undefined".into());
        let _ = writeln!(
            out,
            "euler characteristic: series {}, mobius {}",
            opt(&self.euler.chi_series),
            opt(&self.euler.chi_mobius)
        );
        out.push_str("verification:\n");
        let _ = writeln!(
            out,
            "  C1 chain counts        {} (horizon {}, max rel err {:.2e}{})",
            pass_str(c.c1.pass),
            c.c1.horizon,
            c.c1.max_rel_error,
            if c.c1.exact { ", exact" } else { "" }
        );
        let _ = writeln!(
            out,
            "  C2 sum beta = N        {} (sum beta = {})",
            pass_str(c.c2.pass),
            c.c2.sum_beta.text()
        );
        let _ = writeln!(
            out,
            "  C3 algebraic integers  {} (monic integer: {})",
            pass_str(c.c3.pass),
            c.c3.monic_integer
        );
        let _ = writeln!(
            out,
            "  C4 euler from form     {} ({} vs {})",
            pass_str(c.c4.pass),
            c.c4.closed_form_value.text(),
            c.c4.chi
        );
        let _ = writeln!(
            out,
            "  final identity         {} ({} vs {})",
            pass_str(c.final_identity.pass),
            c.final_identity.left.text(),
            c.final_identity.right
        );
        let _ = writeln!(out, "  euler agreement        {}", pass_str(c.euler_match));
        let _ = writeln!(
            out,
            "  classification         {}",
            c.classification.join(", ")
        );
        out.push_str(&c.lemmas.text());
        let _ = writeln!(out, "overall: {}", pass_str(c.all_pass));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use catzeta::verify::verify_conjecture;
    use catzeta::zeta::analyze;
    use num_bigint::BigInt;
    use num_complex::Complex64;

    fn arrow_document() -> ReportDocument {
        let a = RationalMatrix::from_i64_rows(&[vec![1, 1], vec![0, 1]]);
        let analysis = analyze(&a).unwrap();
        let report = verify_conjecture(&a, 10, 1e-9).unwrap();
        ReportDocument::new("cafe".into(), 2, 3, &a, &analysis, &report)
    }

    #[test]
    fn report_round_trips_through_json() {
        let doc = arrow_document();
        let json = serde_json::to_string_pretty(&doc).unwrap();
        let back: ReportDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(doc, back);
        // And a second emission is byte-identical.
        assert_eq!(json, serde_json::to_string_pretty(&back).unwrap());
    }

    #[test]
    fn report_round_trips_on_the_numeric_track() {
        let a = RationalMatrix::from_i64_rows(&[vec![2, 1], vec![1, 1]]);
        let analysis = analyze(&a).unwrap();
        let report = verify_conjecture(&a, 10, 1e-9).unwrap();
        let doc = ReportDocument::new("beef".into(), 2, 5, &a, &analysis, &report);
        assert!(!doc.conjecture.exact_track);
        let json = serde_json::to_string_pretty(&doc).unwrap();
        let back: ReportDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(doc, back);
    }

    #[test]
    fn rational_strings_use_fraction_form() {
        assert_eq!(
            rat_str(&BigRational::new(BigInt::from(3), BigInt::from(2))),
            "3/2"
        );
        assert_eq!(rat_str(&BigRational::from_integer(BigInt::from(-7))), "-7");
    }

    #[test]
    fn numeric_text_uses_15_significant_digits() {
        let v = ValueDto::from_value(&Value::Numeric(Complex64::new(1.618_033_988_749_895, 0.0)));
        assert_eq!(v.text(), "1.61803398874989e0 [numeric]");
        let w = ValueDto::from_value(&Value::Numeric(Complex64::new(0.5, -2.25)));
        assert_eq!(
            w.text(),
            "5.00000000000000e-1 - 2.25000000000000e0i [numeric]"
        );
    }

    #[test]
    fn text_report_mentions_every_verdict() {
        let text = arrow_document().text();
        for needle in [
            "C1 chain counts",
            "C2 sum beta",
            "C3 algebraic integers",
            "C4 euler from form",
            "final identity",
            "classification",
            "lemma suite",
            "overall: PASS",
        ] {
            assert!(text.contains(needle), "missing {needle:?} in:\n{text}");
        }
    }
}
