//! Library side of the `r2subfield` command line: configuration parsing,
//! per-configuration reports, verification sweeps, the optimal-code manifest
//! scan, table instantiation, and JSON/CSV/Markdown rendering.
//!
//! Every command returns an [`Outcome`] holding the rendered document and the
//! process exit code: 0 when all checks pass, 1 when at least one check fails.
//! Invalid input surfaces as an [`Error`], which the binary maps to exit 2.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{f2_gram_is_zero, f2_rank};
use crate::analysis::{
    ashikhmin_barg_minimal, distance_optimal_by_griesmer, exact_minimality, is_griesmer_code,
    predicted_rows, predicted_weight_table, self_orth_mod4, table10_conditions, Cardinalities,
    FamilyId, PropertyFlags, TheoremPrediction, MINIMALITY_CAP,
};
use crate::codegen::{
    split_message, weight_via_charsum_masks, CodeSummary, SubfieldCode, WeightDistribution,
    MAX_ENUM_AMBIENT,
};
use crate::simplicial::SubsetSpec;
use crate::{Error, Result};

/// Manifest reproducing the table of distance-optimal codes.
pub const BUNDLED_MANIFEST: &str = include_str!("../data/optimal_codes.csv");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Md,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "md" | "markdown" => Ok(Self::Md),
            _ => Err(Error::InvalidArgument(format!("unknown format {s:?}"))),
        }
    }
}

/// Rendered output of one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub document: String,
    pub exit_code: i32,
}

/// One point of the configuration space: ambient size, family, and `L, M, N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    pub ambient: usize,
    pub family: FamilyId,
    pub l: SubsetSpec,
    pub m: SubsetSpec,
    pub n: SubsetSpec,
}

impl Configuration {
    pub fn new(
        ambient: usize,
        family: FamilyId,
        l: SubsetSpec,
        m: SubsetSpec,
        n: SubsetSpec,
    ) -> Result<Self> {
        if ambient > MAX_ENUM_AMBIENT {
            return Err(Error::AmbientTooLarge {
                ambient,
                max: MAX_ENUM_AMBIENT,
            });
        }
        for s in [&l, &m, &n] {
            if s.ambient() != ambient {
                return Err(Error::AmbientMismatch {
                    left: ambient,
                    right: s.ambient(),
                });
            }
        }
        Ok(Self {
            ambient,
            family,
            l,
            m,
            n,
        })
    }

    /// Parses subsets given in `"1,3"` / `"-"` syntax.
    pub fn parse(ambient: usize, family: u8, l: &str, m: &str, n: &str) -> Result<Self> {
        if ambient > MAX_ENUM_AMBIENT {
            return Err(Error::AmbientTooLarge {
                ambient,
                max: MAX_ENUM_AMBIENT,
            });
        }
        Self::new(
            ambient,
            FamilyId::new(family)?,
            SubsetSpec::parse(ambient, l)?,
            SubsetSpec::parse(ambient, m)?,
            SubsetSpec::parse(ambient, n)?,
        )
    }

    pub fn cardinalities(&self) -> Cardinalities {
        Cardinalities::of(&self.l, &self.m, &self.n)
    }

    /// Every family × every triple of subsets of `[ambient]`, in key order.
    pub fn all(ambient: usize, families: &[FamilyId]) -> Result<Vec<Self>> {
        let mut out = Vec::new();
        let subsets: Vec<SubsetSpec> = (0..1u64 << ambient)
            .map(|mask| SubsetSpec::from_mask(ambient, mask))
            .collect::<Result<_>>()?;
        for &family in families {
            for &l in &subsets {
                for &m in &subsets {
                    for &n in &subsets {
                        out.push(Self::new(ambient, family, l, m, n)?);
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightEntry {
    pub w: usize,
    pub count: u64,
}

fn weight_entries(dist: &WeightDistribution) -> Vec<WeightEntry> {
    dist.iter()
        .map(|(w, count)| WeightEntry { w, count })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredictedFields {
    pub n: usize,
    pub k: u32,
    pub d: usize,
    pub weights: Vec<WeightEntry>,
    /// Minimum distance as printed in the parameter statement (may be a
    /// half-integer, shown as `"x/2"`).
    pub printed_d: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportFlags {
    pub griesmer_equal: bool,
    /// `true` when the Griesmer bound rules out `[n, k, d+1]`; `null` means unknown.
    pub distance_optimal_by_griesmer: Option<bool>,
    pub optimality_condition: Option<bool>,
    /// `null` when the code is above the enumeration cap.
    pub minimal_exact: Option<bool>,
    pub minimal_ab: bool,
    pub self_orth_exact: bool,
    pub self_orth_mod4: bool,
    pub table10_minimal: bool,
    pub table10_self_orth: bool,
}

/// Internal cross-checks run alongside each report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Consistency {
    /// Character-sum weight equals the enumerated weight for every message.
    pub charsum_weights: bool,
    /// `k` from kernel counting equals the rank of the generator.
    pub rank_matches_kernel: bool,
    /// Counts sum to `2^k` with exactly one zero codeword.
    pub conservation: bool,
}

/// Measured and predicted data for one configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    pub m: usize,
    pub family: u8,
    #[serde(rename = "L")]
    pub l: String,
    #[serde(rename = "M")]
    pub mm: String,
    #[serde(rename = "N")]
    pub nn: String,
    pub n: usize,
    pub k: u32,
    pub d: usize,
    pub weights: Vec<WeightEntry>,
    pub predicted: PredictedFields,
    pub flags: ReportFlags,
    #[serde(rename = "match")]
    pub matches: bool,
    pub consistency: Consistency,
}

impl CodeReport {
    pub fn property_flags(&self) -> PropertyFlags {
        PropertyFlags {
            griesmer_equal: self.flags.griesmer_equal,
            distance_optimal_by_griesmer: self.flags.distance_optimal_by_griesmer == Some(true),
            minimal_exact: self.flags.minimal_exact,
            minimal_ab_sufficient: self.flags.minimal_ab,
            self_orth_exact: self.flags.self_orth_exact,
            self_orth_mod4: self.flags.self_orth_mod4,
        }
    }

    pub fn params(&self) -> (usize, u32, usize) {
        (self.n, self.k, self.d)
    }
}

/// Builds the code for `cfg` by enumeration and compares it with the closed
/// forms. Degenerate configurations return [`Error::Degenerate`].
pub fn analyze(cfg: &Configuration) -> Result<CodeReport> {
    let card = cfg.cardinalities();
    let ambient = cfg.ambient as u32;
    let prediction = TheoremPrediction::new(cfg.family, ambient, card)?;
    let spec = cfg.family.defining_set(cfg.l, cfg.m, cfg.n)?;
    let code = SubfieldCode::build(&spec)?;
    let weights = code.message_weights();
    let summary = code.summary_from_weights(&weights)?;

    let charsum_weights = weights.iter().enumerate().all(|(msg, &w)| {
        let (a, b, c) = split_message(cfg.ambient, msg as u64);
        weight_via_charsum_masks(a, b, c, &spec) == w as u64
    });
    let rank_matches_kernel = f2_rank(code.generator()) == summary.k as usize;
    let conservation = summary.dist.total() == 1u64 << summary.k && summary.dist.count(0) == 1;

    let flags = measure_flags(&code, &summary, &prediction, cfg, card)?;
    let matches = prediction.n == summary.n
        && prediction.k == summary.k
        && prediction.d == summary.d
        && prediction.table == summary.dist;

    Ok(CodeReport {
        m: cfg.ambient,
        family: cfg.family.value(),
        l: cfg.l.to_string(),
        mm: cfg.m.to_string(),
        nn: cfg.n.to_string(),
        n: summary.n,
        k: summary.k,
        d: summary.d,
        weights: weight_entries(&summary.dist),
        predicted: PredictedFields {
            n: prediction.n,
            k: prediction.k,
            d: prediction.d,
            weights: weight_entries(&prediction.table),
            printed_d: half_integer(prediction.printed_d_twice),
        },
        flags,
        matches,
        consistency: Consistency {
            charsum_weights,
            rank_matches_kernel,
            conservation,
        },
    })
}

fn half_integer(twice: i128) -> String {
    if twice % 2 == 0 {
        (twice / 2).to_string()
    } else {
        format!("{twice}/2")
    }
}

fn measure_flags(
    code: &SubfieldCode,
    summary: &CodeSummary,
    prediction: &TheoremPrediction,
    cfg: &Configuration,
    card: Cardinalities,
) -> Result<ReportFlags> {
    let (n, k, d) = (summary.n as u64, summary.k, summary.d as u64);
    let minimal_exact = match code.codewords(MINIMALITY_CAP) {
        Ok(words) => Some(exact_minimality(&words)?),
        Err(Error::CodeTooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    let t10 = table10_conditions(cfg.family, cfg.ambient as u32, card);
    Ok(ReportFlags {
        griesmer_equal: is_griesmer_code(n, k, d),
        distance_optimal_by_griesmer: distance_optimal_by_griesmer(n, k, d).then_some(true),
        optimality_condition: prediction.optimality_condition,
        minimal_exact,
        minimal_ab: ashikhmin_barg_minimal(&summary.dist)?,
        self_orth_exact: f2_gram_is_zero(code.generator()),
        self_orth_mod4: self_orth_mod4(&summary.dist),
        table10_minimal: t10.minimal_sufficient,
        table10_self_orth: t10.self_orth_sufficient,
    })
}

// ---------------------------------------------------------------------------
// code

fn weights_inline(w: &[WeightEntry]) -> String {
    w.iter()
        .map(|e| format!("{}:{}", e.w, e.count))
        .collect::<Vec<_>>()
        .join(";")
}

fn opt_bool(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "unknown",
    }
}

const REPORT_CSV_HEADER: [&str; 23] = [
    "m",
    "family",
    "L",
    "M",
    "N",
    "n",
    "k",
    "d",
    "weights",
    "predicted_n",
    "predicted_k",
    "predicted_d",
    "predicted_weights",
    "griesmer_equal",
    "distance_optimal_by_griesmer",
    "optimality_condition",
    "minimal_exact",
    "minimal_ab",
    "self_orth_exact",
    "self_orth_mod4",
    "table10_minimal",
    "table10_self_orth",
    "match",
];

fn report_csv_record(r: &CodeReport) -> Vec<String> {
    let f = &r.flags;
    vec![
        r.m.to_string(),
        r.family.to_string(),
        r.l.clone(),
        r.mm.clone(),
        r.nn.clone(),
        r.n.to_string(),
        r.k.to_string(),
        r.d.to_string(),
        weights_inline(&r.weights),
        r.predicted.n.to_string(),
        r.predicted.k.to_string(),
        r.predicted.d.to_string(),
        weights_inline(&r.predicted.weights),
        f.griesmer_equal.to_string(),
        opt_bool(f.distance_optimal_by_griesmer).into(),
        opt_bool(f.optimality_condition).into(),
        opt_bool(f.minimal_exact).into(),
        f.minimal_ab.to_string(),
        f.self_orth_exact.to_string(),
        f.self_orth_mod4.to_string(),
        f.table10_minimal.to_string(),
        f.table10_self_orth.to_string(),
        r.matches.to_string(),
    ]
}

fn csv_document(header: &[&str], records: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv write");
    for rec in records {
        w.write_record(&rec).expect("in-memory csv write");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
}

fn json_document<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

pub fn render_report(r: &CodeReport, format: Format) -> String {
    match format {
        Format::Json => json_document(r),
        Format::Csv => csv_document(&REPORT_CSV_HEADER, [report_csv_record(r)]),
        Format::Md => {
            let mut s = String::new();
            let f = &r.flags;
            let _ = writeln!(
                s,
                "# Family {} code, m = {}, L = {}, M = {}, N = {}\n",
                r.family, r.m, r.l, r.mm, r.nn
            );
            let _ = writeln!(s, "| | n | k | d |\n|---|---|---|---|");
            let _ = writeln!(s, "| measured | {} | {} | {} |", r.n, r.k, r.d);
            let _ = writeln!(
                s,
                "| predicted | {} | {} | {} |\n",
                r.predicted.n, r.predicted.k, r.predicted.d
            );
            let _ = writeln!(s, "Match: **{}**\n", if r.matches { "yes" } else { "NO" });
            let _ = writeln!(
                s,
                "| Hamming Weight | Number of codewords | Predicted |\n|---|---|---|"
            );
            let mut all: Vec<usize> = r
                .weights
                .iter()
                .chain(&r.predicted.weights)
                .map(|e| e.w)
                .collect();
            all.sort_unstable();
            all.dedup();
            let find = |ws: &[WeightEntry], w| ws.iter().find(|e| e.w == w).map_or(0, |e| e.count);
            for w in all {
                let _ = writeln!(
                    s,
                    "| {w} | {} | {} |",
                    find(&r.weights, w),
                    find(&r.predicted.weights, w)
                );
            }
            let _ = writeln!(s, "\n| Property | Value |\n|---|---|");
            for (name, value) in [
                ("griesmer_equal", f.griesmer_equal.to_string()),
                (
                    "distance_optimal_by_griesmer",
                    opt_bool(f.distance_optimal_by_griesmer).into(),
                ),
                (
                    "optimality_condition",
                    opt_bool(f.optimality_condition).into(),
                ),
                ("minimal_exact", opt_bool(f.minimal_exact).into()),
                ("minimal_ab", f.minimal_ab.to_string()),
                ("self_orth_exact", f.self_orth_exact.to_string()),
                ("self_orth_mod4", f.self_orth_mod4.to_string()),
                ("table10_minimal", f.table10_minimal.to_string()),
                ("table10_self_orth", f.table10_self_orth.to_string()),
            ] {
                let _ = writeln!(s, "| {name} | {value} |");
            }
            s
        }
    }
}

pub fn cmd_code(cfg: &Configuration, format: Format) -> Result<Outcome> {
    let report = analyze(cfg)?;
    Ok(Outcome {
        document: render_report(&report, format),
        exit_code: if report.matches { 0 } else { 1 },
    })
}

// ---------------------------------------------------------------------------
// verify

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum EntryStatus {
    Checked { report: Box<CodeReport> },
    Degenerate { reason: String },
    Error { reason: String },
}

/// One configuration of a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepEntry {
    pub m: usize,
    pub family: u8,
    #[serde(rename = "L")]
    pub l: String,
    #[serde(rename = "M")]
    pub mm: String,
    #[serde(rename = "N")]
    pub nn: String,
    #[serde(flatten)]
    pub outcome: EntryStatus,
    /// Failed claims for this configuration; empty when all hold.
    pub failures: Vec<String>,
    /// Observations that do not fail the sweep.
    pub findings: Vec<String>,
}

impl SweepEntry {
    pub fn report(&self) -> Option<&CodeReport> {
        match &self.outcome {
            EntryStatus::Checked { report } => Some(report),
            _ => None,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self.outcome, EntryStatus::Degenerate { .. })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub configurations: usize,
    pub checked: usize,
    pub degenerate: usize,
    pub matched: usize,
    pub mismatched: usize,
    /// Mismatches in family 8, reported as findings only.
    pub family8_mismatched: usize,
    pub griesmer_violations: usize,
    pub table10_minimal_counterexamples: usize,
    pub table10_self_orth_counterexamples: usize,
    pub ab_counterexamples: usize,
    pub mod4_counterexamples: usize,
    pub charsum_failures: usize,
    pub conservation_failures: usize,
    pub errors: usize,
    pub printed_d_discrepancies: usize,
    pub failing_configurations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub entries: Vec<SweepEntry>,
    pub summary: SweepSummary,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.summary.failing_configurations == 0
    }
}

fn evaluate(cfg: &Configuration) -> SweepEntry {
    let mut failures = Vec::new();
    let mut findings = Vec::new();
    let outcome = match analyze(cfg) {
        Ok(report) => {
            let fam8 = cfg.family.value() == 8;
            if !report.matches {
                let msg = format!(
                    "measured [{},{},{}] {} vs predicted [{},{},{}] {}",
                    report.n,
                    report.k,
                    report.d,
                    weights_inline(&report.weights),
                    report.predicted.n,
                    report.predicted.k,
                    report.predicted.d,
                    weights_inline(&report.predicted.weights)
                );
                if fam8 {
                    findings.push(format!("table mismatch: {msg}"));
                } else {
                    failures.push(format!("table mismatch: {msg}"));
                }
            }
            if report.predicted.printed_d != report.predicted.d.to_string() {
                findings.push(format!(
                    "printed d = {} differs from table d = {}",
                    report.predicted.printed_d, report.predicted.d
                ));
            }
            let f = &report.flags;
            if cfg.family.claims_griesmer() && !f.griesmer_equal {
                failures.push("Griesmer bound not met".into());
            }
            if f.table10_minimal && f.minimal_exact == Some(false) {
                failures.push("minimality condition holds but code is not minimal".into());
            }
            if f.table10_self_orth && !f.self_orth_exact {
                failures
                    .push("self-orthogonality condition holds but Gram matrix is nonzero".into());
            }
            if f.minimal_ab && f.minimal_exact == Some(false) {
                failures.push("Ashikhmin-Barg holds but code is not minimal".into());
            }
            if f.self_orth_mod4 && !f.self_orth_exact {
                failures.push("weights divisible by 4 but Gram matrix is nonzero".into());
            }
            if !report.consistency.charsum_weights {
                failures.push("character-sum weights disagree with enumeration".into());
            }
            if !report.consistency.conservation || !report.consistency.rank_matches_kernel {
                failures.push("weight distribution conservation failed".into());
            }
            EntryStatus::Checked {
                report: Box::new(report),
            }
        }
        Err(Error::Degenerate(reason)) => EntryStatus::Degenerate { reason },
        Err(e) => {
            failures.push(e.to_string());
            EntryStatus::Error {
                reason: e.to_string(),
            }
        }
    };
    SweepEntry {
        m: cfg.ambient,
        family: cfg.family.value(),
        l: cfg.l.to_string(),
        mm: cfg.m.to_string(),
        nn: cfg.n.to_string(),
        outcome,
        failures,
        findings,
    }
}

/// Runs every family in `families` over every subset triple for each ambient
/// size. Configurations are evaluated in parallel and reported in key order.
pub fn sweep(ambients: &[usize], families: &[FamilyId]) -> Result<SweepReport> {
    let mut configs = Vec::new();
    for &m in ambients {
        configs.extend(Configuration::all(m, families)?);
    }
    configs.sort();
    let entries: Vec<SweepEntry> = configs.par_iter().map(evaluate).collect();

    let mut s = SweepSummary {
        configurations: entries.len(),
        ..Default::default()
    };
    for e in &entries {
        match &e.outcome {
            EntryStatus::Degenerate { .. } => s.degenerate += 1,
            EntryStatus::Error { .. } => s.errors += 1,
            EntryStatus::Checked { report } => {
                s.checked += 1;
                let f = &report.flags;
                if report.matches {
                    s.matched += 1;
                } else if e.family == 8 {
                    s.family8_mismatched += 1;
                } else {
                    s.mismatched += 1;
                }
                let fam = FamilyId::new(e.family).expect("valid family");
                s.griesmer_violations += (fam.claims_griesmer() && !f.griesmer_equal) as usize;
                s.table10_minimal_counterexamples +=
                    (f.table10_minimal && f.minimal_exact == Some(false)) as usize;
                s.table10_self_orth_counterexamples +=
                    (f.table10_self_orth && !f.self_orth_exact) as usize;
                s.ab_counterexamples += (f.minimal_ab && f.minimal_exact == Some(false)) as usize;
                s.mod4_counterexamples += (f.self_orth_mod4 && !f.self_orth_exact) as usize;
                s.charsum_failures += !report.consistency.charsum_weights as usize;
                s.conservation_failures += !(report.consistency.conservation
                    && report.consistency.rank_matches_kernel)
                    as usize;
                s.printed_d_discrepancies +=
                    (report.predicted.printed_d != report.predicted.d.to_string()) as usize;
            }
        }
        s.failing_configurations += !e.failures.is_empty() as usize;
    }
    Ok(SweepReport {
        entries,
        summary: s,
    })
}

pub fn render_sweep(r: &SweepReport, format: Format) -> String {
    match format {
        Format::Json => json_document(r),
        Format::Csv => csv_document(
            &[
                "m",
                "family",
                "L",
                "M",
                "N",
                "status",
                "n",
                "k",
                "d",
                "predicted_n",
                "predicted_k",
                "predicted_d",
                "failures",
                "findings",
            ],
            r.entries.iter().map(|e| {
                let (status, meas, pred) = match &e.outcome {
                    EntryStatus::Checked { report } => (
                        if !e.failures.is_empty() {
                            "fail"
                        } else if report.matches {
                            "match"
                        } else {
                            "finding"
                        },
                        [report.n, report.k as usize, report.d].map(|x| x.to_string()),
                        [
                            report.predicted.n,
                            report.predicted.k as usize,
                            report.predicted.d,
                        ]
                        .map(|x| x.to_string()),
                    ),
                    EntryStatus::Degenerate { .. } => {
                        ("degenerate", Default::default(), Default::default())
                    }
                    EntryStatus::Error { .. } => ("error", Default::default(), Default::default()),
                };
                let mut rec = vec![
                    e.m.to_string(),
                    e.family.to_string(),
                    e.l.clone(),
                    e.mm.clone(),
                    e.nn.clone(),
                    status.to_string(),
                ];
                rec.extend(meas);
                rec.extend(pred);
                rec.push(e.failures.join("; "));
                rec.push(e.findings.join("; "));
                rec
            }),
        ),
        Format::Md => {
            let mut s = String::from("# Verification sweep\n\n");
            s.push_str("| m | family | L | M | N | measured | predicted | status |\n");
            s.push_str("|---|---|---|---|---|---|---|---|\n");
            for e in &r.entries {
                let (meas, pred, status) = match &e.outcome {
                    EntryStatus::Checked { report } => (
                        format!("[{},{},{}]", report.n, report.k, report.d),
                        format!(
                            "[{},{},{}]",
                            report.predicted.n, report.predicted.k, report.predicted.d
                        ),
                        if !e.failures.is_empty() {
                            format!("FAIL: {}", e.failures.join("; "))
                        } else if report.matches {
                            "MATCH".to_string()
                        } else {
                            format!("FINDING: {}", e.findings.join("; "))
                        },
                    ),
                    EntryStatus::Degenerate { reason } => {
                        ("-".into(), "-".into(), format!("degenerate ({reason})"))
                    }
                    EntryStatus::Error { reason } => {
                        ("-".into(), "-".into(), format!("FAIL: {reason}"))
                    }
                };
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {} | {} | {meas} | {pred} | {status} |",
                    e.m, e.family, e.l, e.mm, e.nn
                );
            }
            let sm = &r.summary;
            let _ = writeln!(s, "\n## Summary\n\n| Count | Value |\n|---|---|");
            for (name, v) in [
                ("configurations", sm.configurations),
                ("checked", sm.checked),
                ("degenerate", sm.degenerate),
                ("matched", sm.matched),
                ("mismatched", sm.mismatched),
                ("family 8 mismatches (findings)", sm.family8_mismatched),
                ("Griesmer violations", sm.griesmer_violations),
                (
                    "Table 10 minimality counterexamples",
                    sm.table10_minimal_counterexamples,
                ),
                (
                    "Table 10 self-orthogonality counterexamples",
                    sm.table10_self_orth_counterexamples,
                ),
                ("Ashikhmin-Barg counterexamples", sm.ab_counterexamples),
                ("mod-4 counterexamples", sm.mod4_counterexamples),
                ("character-sum failures", sm.charsum_failures),
                ("conservation failures", sm.conservation_failures),
                ("errors", sm.errors),
                (
                    "printed-d discrepancies (findings)",
                    sm.printed_d_discrepancies,
                ),
                ("failing configurations", sm.failing_configurations),
            ] {
                let _ = writeln!(s, "| {name} | {v} |");
            }
            s
        }
    }
}

pub fn cmd_verify(ambients: &[usize], families: &[FamilyId], format: Format) -> Result<Outcome> {
    for &m in ambients {
        if m > MAX_ENUM_AMBIENT {
            return Err(Error::AmbientTooLarge {
                ambient: m,
                max: MAX_ENUM_AMBIENT,
            });
        }
    }
    let report = sweep(ambients, families)?;
    Ok(Outcome {
        document: render_sweep(&report, format),
        exit_code: if report.passed() { 0 } else { 1 },
    })
}

// ---------------------------------------------------------------------------
// scan

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifestRow {
    pub config: Configuration,
    pub expected: (usize, u32, usize),
}

#[derive(serde::Deserialize)]
struct RawManifestRow {
    family: u8,
    m: usize,
    #[serde(rename = "L")]
    l: String,
    #[serde(rename = "M")]
    mm: String,
    #[serde(rename = "N")]
    nn: String,
    n: usize,
    k: u32,
    d: usize,
}

/// Parses a CSV manifest with header `family,m,L,M,N,n,k,d`.
pub fn parse_manifest(text: &str) -> Result<Vec<ManifestRow>> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| Error::Manifest(e.to_string()))?
        .clone();
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let expected = ["family", "m", "L", "M", "N", "n", "k", "d"];
    if header.iter().collect::<Vec<_>>() != expected {
        return Err(Error::Manifest(format!(
            "header must be {}, got {}",
            expected.join(","),
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut rows = Vec::new();
    for (i, rec) in reader.deserialize::<RawManifestRow>().enumerate() {
        let line = i + 2;
        let raw = rec.map_err(|e| Error::Manifest(format!("line {line}: {e}")))?;
        let config = Configuration::parse(raw.m, raw.family, &raw.l, &raw.mm, &raw.nn)
            .map_err(|e| Error::Manifest(format!("line {line}: {e}")))?;
        rows.push(ManifestRow {
            config,
            expected: (raw.n, raw.k, raw.d),
        });
    }
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub family: u8,
    pub m: usize,
    #[serde(rename = "L")]
    pub l: String,
    #[serde(rename = "M")]
    pub mm: String,
    #[serde(rename = "N")]
    pub nn: String,
    pub expected: [usize; 3],
    pub measured: Option<[usize; 3]>,
    pub distance_optimal_by_griesmer: Option<bool>,
    pub error: Option<String>,
    pub pass: bool,
    #[serde(skip)]
    indicators: [String; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
    pub passed: usize,
    pub failed: usize,
}

fn indicator_tuple(s: &SubsetSpec) -> String {
    let bits: Vec<&str> = (1..=s.ambient())
        .map(|i| if s.contains(i) { "1" } else { "0" })
        .collect();
    format!("({})", bits.join(", "))
}

/// Recomputes `[n, k, d]` for every manifest row by enumeration.
pub fn scan(rows: &[ManifestRow]) -> ScanReport {
    let out: Vec<ScanRow> = rows
        .par_iter()
        .map(|row| {
            let c = &row.config;
            let measured = c
                .family
                .defining_set(c.l, c.m, c.n)
                .and_then(|spec| crate::codegen::weight_distribution_bruteforce(&spec));
            let (measured, error) = match measured {
                Ok(s) => (Some([s.n, s.k as usize, s.d]), None),
                Err(e) => (None, Some(e.to_string())),
            };
            let expected = [row.expected.0, row.expected.1 as usize, row.expected.2];
            ScanRow {
                family: c.family.value(),
                m: c.ambient,
                l: c.l.to_string(),
                mm: c.m.to_string(),
                nn: c.n.to_string(),
                expected,
                distance_optimal_by_griesmer: measured
                    .map(|[n, k, d]| distance_optimal_by_griesmer(n as u64, k as u32, d as u64)),
                pass: measured == Some(expected),
                measured,
                error,
                indicators: [c.l, c.m, c.n].map(|s| indicator_tuple(&s)),
            }
        })
        .collect();
    let passed = out.iter().filter(|r| r.pass).count();
    ScanReport {
        failed: out.len() - passed,
        passed,
        rows: out,
    }
}

pub fn render_scan(r: &ScanReport, format: Format) -> String {
    let triple = |t: &[usize; 3]| format!("[{}, {}, {}]", t[0], t[1], t[2]);
    match format {
        Format::Json => json_document(r),
        Format::Csv => csv_document(
            &[
                "family",
                "m",
                "L",
                "M",
                "N",
                "n",
                "k",
                "d",
                "measured_n",
                "measured_k",
                "measured_d",
                "status",
            ],
            r.rows.iter().map(|row| {
                let mut rec = vec![
                    row.family.to_string(),
                    row.m.to_string(),
                    row.l.clone(),
                    row.mm.clone(),
                    row.nn.clone(),
                ];
                rec.extend(row.expected.map(|x| x.to_string()));
                match row.measured {
                    Some(m) => rec.extend(m.map(|x| x.to_string())),
                    None => rec.extend([String::new(), String::new(), String::new()]),
                }
                rec.push(if row.pass { "PASS" } else { "FAIL" }.into());
                rec
            }),
        ),
        Format::Md => {
            let mut s = String::from("# Binary distance-optimal codes\n\n");
            s.push_str(
                "| Family | m | L | M | N | [n, k, d] | Measured | Griesmer-optimal | Status |\n",
            );
            s.push_str("|---|---|---|---|---|---|---|---|---|\n");
            for row in &r.rows {
                let measured = match (&row.measured, &row.error) {
                    (Some(m), _) => triple(m),
                    (None, Some(e)) => format!("error: {e}"),
                    (None, None) => "-".into(),
                };
                let _ = writeln!(
                    s,
                    "| {} | m = {} | {} | {} | {} | {} | {measured} | {} | {} |",
                    row.family,
                    row.m,
                    row.indicators[0],
                    row.indicators[1],
                    row.indicators[2],
                    triple(&row.expected),
                    match row.distance_optimal_by_griesmer {
                        Some(true) => "yes",
                        Some(false) => "unknown",
                        None => "-",
                    },
                    if row.pass { "PASS" } else { "FAIL" }
                );
            }
            let _ = writeln!(s, "\n{} passed, {} failed", r.passed, r.failed);
            s
        }
    }
}

pub fn cmd_scan(manifest: &str, format: Format) -> Result<Outcome> {
    let rows = parse_manifest(manifest)?;
    let report = scan(&rows);
    Ok(Outcome {
        document: render_scan(&report, format),
        exit_code: if report.failed == 0 { 0 } else { 1 },
    })
}

// ---------------------------------------------------------------------------
// tables

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RawRow {
    /// Exact weight; half-integers render as `"x/2"`.
    pub w: String,
    pub count: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TablesDocument {
    pub family: u8,
    pub m: u32,
    pub sizes: [u32; 3],
    pub rows: Vec<RawRow>,
    pub merged: Vec<WeightEntry>,
}

pub fn tables(family: FamilyId, ambient: u32, sizes: Cardinalities) -> Result<TablesDocument> {
    let rows = predicted_rows(family, ambient, sizes)?;
    let merged = predicted_weight_table(family, ambient, sizes)?;
    Ok(TablesDocument {
        family: family.value(),
        m: ambient,
        sizes: [sizes.l, sizes.m, sizes.n],
        rows: rows
            .iter()
            .map(|r| RawRow {
                w: r.weight_display(),
                count: r.count.to_string(),
            })
            .collect(),
        merged: weight_entries(&merged),
    })
}

pub fn render_tables(t: &TablesDocument, format: Format) -> String {
    match format {
        Format::Json => json_document(t),
        Format::Csv => csv_document(
            &["kind", "w", "count"],
            t.rows
                .iter()
                .map(|r| vec!["row".to_string(), r.w.clone(), r.count.clone()])
                .chain(
                    t.merged
                        .iter()
                        .map(|e| vec!["merged".to_string(), e.w.to_string(), e.count.to_string()]),
                ),
        ),
        Format::Md => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "# Family {} weight table, m = {}, |L| = {}, |M| = {}, |N| = {}\n",
                t.family, t.m, t.sizes[0], t.sizes[1], t.sizes[2]
            );
            s.push_str("| Hamming Weight | Number of codewords |\n|---|---|\n");
            for r in &t.rows {
                let _ = writeln!(s, "| {} | {} |", r.w, r.count);
            }
            s.push_str("\nMerged (zero counts dropped, equal weights summed):\n\n");
            s.push_str("| Hamming Weight | Number of codewords |\n|---|---|\n");
            for e in &t.merged {
                let _ = writeln!(s, "| {} | {} |", e.w, e.count);
            }
            s
        }
    }
}

pub fn cmd_tables(
    family: FamilyId,
    ambient: u32,
    sizes: Cardinalities,
    format: Format,
) -> Result<Outcome> {
    let doc = tables(family, ambient, sizes)?;
    Ok(Outcome {
        document: render_tables(&doc, format),
        exit_code: 0,
    })
}

/// Parses `"2"`, `"2-3"` or `"2,4"` into a list of ambient sizes.
pub fn parse_ambient_range(text: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidArgument(format!("invalid m range {text:?}"));
    let mut out = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if let Some((a, b)) = part.split_once('-') {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().parse().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| bad())?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Parses `"1,9"` into families.
pub fn parse_families(text: &str) -> Result<Vec<FamilyId>> {
    let mut out = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u8>()
                .map_err(|_| Error::InvalidArgument(format!("invalid family list {text:?}")))
                .and_then(FamilyId::new)
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}
