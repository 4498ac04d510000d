//! Command building blocks behind the `specbound` binary: graph loading,
//! analysis reports, the survey pipeline, family verification, and
//! edge-list/graph6 conversion. Everything here returns rendered
//! documents; the binary only dispatches, writes, and sets exit codes.

use std::fmt;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;

use crate::bounds::{
    bipartite_product_bound, compare_bounds, haemers_bound, phi, product_bound_report,
    BipartiteBoundReport, BoundReport, Comparison,
};
use crate::enumeration::{enumerate_connected, independence_number, survey_stream, SurveyRow};
use crate::graph::{binomial, make_family, FamilySpec, Graph};
use crate::graph6::{parse_graph6, to_graph6};
use crate::spectra::spectrum_with_tol;
use crate::{Error, Result, DEFAULT_TOL};

/// Largest order the exact independence search accepts; analysis of
/// bigger graphs reports the product bound only.
const ALPHA_ORDER_CAP: usize = 62;
/// Largest order `family` will eigensolve.
const FAMILY_ORDER_BUDGET: usize = 300;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<OutputFormat> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::Input(format!(
                "unknown format '{other}' (expected text, json, or csv)"
            ))),
        }
    }
}

/// Options shared by the subcommands.
#[derive(Clone, Debug)]
pub struct CliConfig {
    pub tolerance: f64,
    pub format: OutputFormat,
    /// Report destination; stdout when absent.
    pub out: Option<PathBuf>,
    pub threads: Option<usize>,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            tolerance: DEFAULT_TOL,
            format: OutputFormat::Text,
            out: None,
            threads: None,
        }
    }
}

impl CliConfig {
    fn validate(&self) -> Result<()> {
        if !self.tolerance.is_finite() || self.tolerance <= 0.0 {
            return Err(Error::Input(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        if self.threads == Some(0) {
            return Err(Error::Input("--threads must be at least 1".into()));
        }
        Ok(())
    }
}

/// Where an analyzed graph comes from.
#[derive(Clone, Debug)]
pub enum GraphInput {
    /// One graph6 line.
    Graph6Line(String),
    /// One edge-list line, `n: u-v,u-v,...`.
    EdgeListLine(String),
    /// File whose first nonempty line is either format.
    FilePath(PathBuf),
    /// A family expression such as `cone:kneser:5:2`.
    Family(FamilyExpr),
}

pub fn load_graph(input: &GraphInput) -> Result<Graph> {
    match input {
        GraphInput::Graph6Line(line) => parse_graph6(line.trim()),
        GraphInput::EdgeListLine(line) => parse_edge_list(line),
        GraphInput::FilePath(path) => {
            let text = fs::read_to_string(path)?;
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| Error::Input(format!("{}: no graph found", path.display())))?;
            if line.contains(':') {
                parse_edge_list(line)
            } else {
                parse_graph6(line)
            }
        }
        GraphInput::Family(expr) => expr.build(),
    }
}

/// `kind[:param]*` with any number of `cone:` prefixes; each prefix
/// applies the cone operation to the base family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyExpr {
    pub cone_depth: usize,
    pub base: FamilySpec,
}

impl FamilyExpr {
    pub fn build(&self) -> Result<Graph> {
        let mut g = make_family(self.base)?;
        for _ in 0..self.cone_depth {
            g = g.cone();
        }
        Ok(g)
    }
}

impl fmt::Display for FamilyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in 0..self.cone_depth {
            write!(f, "cone:")?;
        }
        write!(f, "{}", self.base)
    }
}

impl FromStr for FamilyExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilyExpr> {
        let bad = |msg: String| Error::Input(format!("family '{s}': {msg}"));
        let tokens: Vec<&str> = s.split(':').collect();
        let mut i = 0;
        while i < tokens.len() && tokens[i] == "cone" {
            i += 1;
        }
        let cone_depth = i;
        if i == tokens.len() {
            return Err(bad("missing base family".into()));
        }
        let kind = tokens[i];
        let params: Vec<usize> = tokens[i + 1..]
            .iter()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| bad(format!("'{t}' is not a number")))
            })
            .collect::<Result<_>>()?;
        let arity_err = |want: usize| bad(format!("{kind} takes {want} parameter(s)"));
        let one = || params.first().copied().ok_or_else(|| arity_err(1));
        let base = match (kind, params.len()) {
            ("complete", 1) => FamilySpec::Complete(one()?),
            ("empty", 1) => FamilySpec::Empty(one()?),
            ("path", 1) => FamilySpec::Path(one()?),
            ("cycle", 1) => FamilySpec::Cycle(one()?),
            ("star", 1) => FamilySpec::Star(one()?),
            ("wheel", 1) => FamilySpec::Wheel(one()?),
            ("complete-bipartite", 2) => FamilySpec::CompleteBipartite(params[0], params[1]),
            ("hypercube", 1) => FamilySpec::Hypercube(one()?),
            ("kneser", 2) => FamilySpec::Kneser(params[0], params[1]),
            ("complete" | "empty" | "path" | "cycle" | "star" | "wheel" | "hypercube", _) => {
                return Err(arity_err(1))
            }
            ("complete-bipartite" | "kneser", _) => return Err(arity_err(2)),
            _ => {
                return Err(bad(format!(
                    "unknown kind '{kind}' (complete, empty, path, cycle, star, wheel, \
                     complete-bipartite, hypercube, kneser)"
                )))
            }
        };
        Ok(FamilyExpr { cone_depth, base })
    }
}

/// Everything `analyze` reports about one connected graph.
#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeReport {
    pub n: usize,
    pub edge_count: usize,
    pub degrees: Vec<usize>,
    pub spectrum: Vec<f64>,
    pub product_bound: BoundReport,
    /// Exact independence number; absent above the search cap (62).
    pub alpha: Option<usize>,
    pub haemers_bound: Option<f64>,
    pub comparison: Option<Comparison>,
    /// Present iff the graph is bipartite.
    pub bipartite: Option<BipartiteBoundReport>,
}

pub fn analyze_graph(g: &Graph, tol: f64) -> Result<AnalyzeReport> {
    let product_bound = product_bound_report(g, tol)?;
    let spectrum = spectrum_with_tol(g, tol).values().to_vec();
    let (alpha, haemers, comparison) = if g.order() <= ALPHA_ORDER_CAP {
        let a = independence_number(g)?;
        (
            Some(a),
            Some(haemers_bound(g, a)?),
            Some(compare_bounds(g, a, tol)?),
        )
    } else {
        (None, None, None)
    };
    let bipartite = if g.profile().bipartition.is_some() {
        Some(bipartite_product_bound(g, tol)?)
    } else {
        None
    };
    Ok(AnalyzeReport {
        n: g.order(),
        edge_count: g.edge_count(),
        degrees: g.degrees(),
        spectrum,
        product_bound,
        alpha,
        haemers_bound: haemers,
        comparison,
        bipartite,
    })
}

/// `{:.6}` with `-0.000000` normalized away.
fn fmt6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

fn fmt6_list(values: &[f64]) -> String {
    values.iter().map(|&v| fmt6(v)).collect::<Vec<_>>().join(", ")
}

fn render_analyze_text(r: &AnalyzeReport) -> String {
    let mut out = String::new();
    let b = &r.product_bound;
    let _ = writeln!(out, "graph: n={}, edges={}", r.n, r.edge_count);
    let _ = writeln!(
        out,
        "degrees: max Δ={}, min δ={}{}",
        b.max_degree,
        b.min_degree,
        if r.n <= 40 {
            format!(", sequence {:?}", r.degrees)
        } else {
            String::new()
        }
    );
    let _ = writeln!(out, "spectrum: [{}]", fmt6_list(&r.spectrum));
    let _ = writeln!(
        out,
        "product bound: -λ_min·λ_max = {} >= Δ = {}  (slack {})",
        fmt6(b.product),
        b.max_degree,
        fmt6(b.slack)
    );
    let _ = writeln!(
        out,
        "equality within tolerance: {}",
        if b.equality_within_tol { "yes" } else { "no" }
    );
    match &b.witness {
        Some(w) => {
            let _ = writeln!(
                out,
                "equality witness: cone vertex {} over a {}-regular base; \
                 λ_min(base) = {} >= φ = {}",
                w.cone_vertex,
                w.base_degree,
                fmt6(w.base_lambda_min),
                fmt6(w.phi_value)
            );
        }
        None => {
            let _ = writeln!(out, "equality witness: none");
        }
    }
    match (r.alpha, r.haemers_bound, &r.comparison) {
        (Some(a), Some(h), Some(c)) => {
            let _ = writeln!(out, "independence number: α = {a}");
            let _ = writeln!(
                out,
                "independence bound: αδ²/(n-α) = {} (α threshold {})",
                fmt6(h),
                fmt6(c.alpha_threshold)
            );
            let _ = writeln!(
                out,
                "winner: {} ({} vs {})",
                c.winner,
                fmt6(c.new_bound),
                fmt6(c.haemers_bound)
            );
        }
        _ => {
            let _ = writeln!(out, "independence number: skipped (order above {ALPHA_ORDER_CAP})");
        }
    }
    if let Some(bp) = &r.bipartite {
        let _ = writeln!(
            out,
            "bipartite bound: λ_1² = {} >= δ̄_1·δ̄_2 = {}  (equality: {}, biregular: {})",
            fmt6(bp.lambda1_squared),
            fmt6(bp.mean_degree_1 * bp.mean_degree_2),
            if bp.equality { "yes" } else { "no" },
            if bp.is_biregular { "yes" } else { "no" }
        );
    }
    out
}

const ANALYZE_CSV_HEADER: &str =
    "n,max_degree,min_degree,lambda_max,lambda_min,product,slack,equality,alpha,haemers_bound,winner";

fn render_analyze_csv(r: &AnalyzeReport) -> String {
    let b = &r.product_bound;
    let (alpha, haemers, winner) = match (r.alpha, r.haemers_bound, &r.comparison) {
        (Some(a), Some(h), Some(c)) => (a.to_string(), fmt6(h), c.winner.to_string()),
        _ => (String::new(), String::new(), String::new()),
    };
    format!(
        "{ANALYZE_CSV_HEADER}\n{},{},{},{},{},{},{},{},{alpha},{haemers},{winner}\n",
        r.n,
        b.max_degree,
        b.min_degree,
        fmt6(b.lambda_max),
        fmt6(b.lambda_min),
        fmt6(b.product),
        fmt6(b.slack),
        b.equality_within_tol,
    )
}

fn to_json_doc<T: Serialize>(value: &T) -> Result<String> {
    let mut doc = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Input(format!("json serialization failed: {e}")))?;
    doc.push('\n');
    Ok(doc)
}

/// Analyzes one connected graph and renders the report.
pub fn cmd_analyze(input: &GraphInput, config: &CliConfig) -> Result<String> {
    config.validate()?;
    let g = load_graph(input)?;
    let report = analyze_graph(&g, config.tolerance)?;
    match config.format {
        OutputFormat::Text => Ok(render_analyze_text(&report)),
        OutputFormat::Json => to_json_doc(&report),
        OutputFormat::Csv => Ok(render_analyze_csv(&report)),
    }
}

/// Survey rows for orders `4..=max_n`, from the built-in generator or an
/// external graph6 universe file. With `config.threads` set, per-graph
/// work runs on a dedicated pool of that size; tallies are
/// order-independent, so the rows are identical for every thread count.
pub fn cmd_survey(max_n: usize, universe: Option<&Path>, config: &CliConfig) -> Result<String> {
    config.validate()?;
    if !(4..=8).contains(&max_n) {
        return Err(Error::OrderOutOfRange {
            order: max_n,
            reason: "the survey covers orders 4..=8",
        });
    }
    let run = || -> Result<Vec<SurveyRow>> {
        match universe {
            None => (4..=max_n)
                .map(|n| survey_stream(n, enumerate_connected(n)?, config.tolerance))
                .collect(),
            Some(path) => {
                let buckets = read_universe(path)?;
                (4..=max_n)
                    .map(|n| {
                        let graphs = buckets[n].clone();
                        if graphs.is_empty() {
                            return Err(Error::Input(format!(
                                "{}: no graphs of order {n}",
                                path.display()
                            )));
                        }
                        survey_stream(n, graphs, config.tolerance)
                    })
                    .collect()
            }
        }
    };
    let rows = match config.threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Error::Input(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    }?;
    render_survey(&rows, config.format)
}

/// Parses a graph6 universe file into per-order buckets (orders 0..=8).
fn read_universe(path: &Path) -> Result<Vec<Vec<Graph>>> {
    let text = fs::read_to_string(path)?;
    let mut buckets: Vec<Vec<Graph>> = vec![Vec::new(); 9];
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line)
            .map_err(|e| Error::Input(format!("{}: line {}: {e}", path.display(), i + 1)))?;
        if g.order() <= 8 {
            buckets[g.order()].push(g);
        }
    }
    Ok(buckets)
}

pub const SURVEY_CSV_HEADER: &str = "n,count,new_wins,haemers_wins,ties,proportion";

fn render_survey(rows: &[SurveyRow], format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Csv => {
            let mut out = String::from(SURVEY_CSV_HEADER);
            out.push('\n');
            for r in rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.n,
                    r.count,
                    r.new_wins,
                    r.haemers_wins,
                    r.ties,
                    fmt6(r.proportion)
                );
            }
            Ok(out)
        }
        OutputFormat::Json => to_json_doc(&rows),
        OutputFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{:>2} {:>7} {:>9} {:>13} {:>6} {:>12}",
                "n", "count", "new_wins", "haemers_wins", "ties", "proportion"
            );
            for r in rows {
                let _ = writeln!(
                    out,
                    "{:>2} {:>7} {:>9} {:>13} {:>6} {:>12}",
                    r.n,
                    r.count,
                    r.new_wins,
                    r.haemers_wins,
                    r.ties,
                    format!("{}/{} = {}", r.new_wins, r.count, fmt6(r.proportion))
                );
            }
            Ok(out)
        }
    }
}

/// A family analysis plus the optional expected-verdict check.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub family: String,
    pub expected_equality: Option<bool>,
    pub report: AnalyzeReport,
}

/// Builds the family member, analyzes it, and (with `check_equality`)
/// asserts that the computed verdict matches the closed-form expectation
/// for the family. A mismatch is an error.
pub fn cmd_family(spec_text: &str, check_equality: bool, config: &CliConfig) -> Result<String> {
    config.validate()?;
    let expr: FamilyExpr = spec_text.parse()?;
    let g = expr.build()?;
    if g.order() > FAMILY_ORDER_BUDGET {
        return Err(Error::Input(format!(
            "family {expr} has {} vertices, above the eigensolver budget of {FAMILY_ORDER_BUDGET}",
            g.order()
        )));
    }
    let report = analyze_graph(&g, config.tolerance)?;
    let expected = if check_equality {
        let expected = expected_equality(&expr, config.tolerance)?;
        let actual = report.product_bound.equality_within_tol;
        if expected != actual {
            return Err(Error::Input(format!(
                "{expr}: expected {} but computed {} (slack {})",
                verdict(expected),
                verdict(actual),
                report.product_bound.slack
            )));
        }
        Some(expected)
    } else {
        None
    };
    let family_report = FamilyReport {
        family: expr.to_string(),
        expected_equality: expected,
        report,
    };
    match config.format {
        OutputFormat::Json => to_json_doc(&family_report),
        OutputFormat::Csv => Ok(render_analyze_csv(&family_report.report)),
        OutputFormat::Text => {
            let mut out = format!("family: {}\n", family_report.family);
            out.push_str(&render_analyze_text(&family_report.report));
            if let Some(e) = expected {
                let _ = writeln!(out, "expected verdict: {} — confirmed", verdict(e));
            }
            Ok(out)
        }
    }
}

fn verdict(equality: bool) -> &'static str {
    if equality {
        "equality"
    } else {
        "strict inequality"
    }
}

/// Rewrites sugar kinds until the expression is `cone^d(base)` with a
/// base that is not itself a cone (completes collapse to iterated cones
/// over K1).
fn normalize(expr: &FamilyExpr) -> (usize, FamilySpec) {
    let mut depth = expr.cone_depth;
    let mut base = expr.base;
    loop {
        base = match base {
            FamilySpec::Complete(k) if k >= 2 => {
                depth += k - 1;
                FamilySpec::Complete(1)
            }
            FamilySpec::Star(k) => {
                depth += 1;
                FamilySpec::Empty(k)
            }
            FamilySpec::Wheel(k) => {
                depth += 1;
                FamilySpec::Cycle(k)
            }
            FamilySpec::Cycle(3) => FamilySpec::Complete(3),
            FamilySpec::Kneser(m, 1) => FamilySpec::Complete(m),
            FamilySpec::Path(k) if k <= 2 => FamilySpec::Complete(k),
            FamilySpec::Empty(1) => FamilySpec::Complete(1),
            FamilySpec::Hypercube(1) => FamilySpec::Complete(2),
            FamilySpec::CompleteBipartite(1, b) => FamilySpec::Star(b),
            FamilySpec::CompleteBipartite(a, 1) => FamilySpec::Star(a),
            other => return (depth, other),
        };
    }
}

/// Closed-form `(order, regular degree, λ_min)` for a base family;
/// degree is `None` when the family is irregular. λ_min values come from
/// the classical spectra, not from the eigensolver.
fn closed_base_data(base: FamilySpec) -> Result<(usize, Option<usize>, f64)> {
    let cycle_min = |k: usize| {
        (0..k)
            .map(|j| 2.0 * (2.0 * std::f64::consts::PI * j as f64 / k as f64).cos())
            .fold(f64::INFINITY, f64::min)
    };
    Ok(match base {
        FamilySpec::Complete(k) => (k, Some(k.saturating_sub(1)), if k >= 2 { -1.0 } else { 0.0 }),
        FamilySpec::Empty(k) => (k, Some(0), 0.0),
        FamilySpec::Cycle(k) => (k, Some(2), cycle_min(k)),
        FamilySpec::Path(k) => (
            k,
            (k <= 2).then(|| k - 1),
            2.0 * (k as f64 * std::f64::consts::PI / (k as f64 + 1.0)).cos(),
        ),
        FamilySpec::Star(k) => (k + 1, (k == 1).then_some(1), -(k as f64).sqrt()),
        FamilySpec::Wheel(k) => (k + 1, (k == 3).then_some(3), if k == 3 { -1.0 } else { f64::NAN }),
        FamilySpec::CompleteBipartite(a, b) => {
            (a + b, (a == b).then_some(a), -((a * b) as f64).sqrt())
        }
        FamilySpec::Hypercube(k) => (1 << k, Some(k), -(k as f64)),
        FamilySpec::Kneser(m, t) => {
            let lambda_min = (0..=t)
                .map(|i| {
                    let magnitude = binomial(m - t - i, t - i) as f64;
                    if i % 2 == 0 {
                        magnitude
                    } else {
                        -magnitude
                    }
                })
                .fold(f64::INFINITY, f64::min);
            (binomial(m, t), Some(binomial(m - t, t)), lambda_min)
        }
    })
}

/// Expected product-bound verdict for a cone-structured family, from
/// closed-form base spectra only (independent of the Jacobi kernel):
/// equality iff the base is regular with `λ_min(base) ≥ φ(δ, m) − tol`.
pub(crate) fn expected_equality(expr: &FamilyExpr, tol: f64) -> Result<bool> {
    let (depth, base) = normalize(expr);
    if depth == 0 {
        return Err(Error::Input(format!(
            "--check-equality: {expr} is not cone-structured, no expected verdict"
        )));
    }
    if depth >= 2 {
        // cone^d(K1) is a complete graph; any other normalized base makes
        // the outermost cone's base irregular (universal vertex, not
        // complete), so equality is impossible.
        return Ok(base == FamilySpec::Complete(1));
    }
    let (order, degree, lambda_min) = closed_base_data(base)?;
    let Some(delta) = degree else {
        return Ok(false);
    };
    Ok(lambda_min >= phi(delta, order)? - tol)
}

/// Conversion direction for `convert`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConvertDirection {
    EdgesToGraph6,
    Graph6ToEdges,
}

/// Converts a whole file line by line; blank lines are skipped. All
/// malformed lines are reported (with their line numbers) in one error.
pub fn cmd_convert(input: &Path, direction: ConvertDirection) -> Result<String> {
    let text = fs::read_to_string(input)?;
    let mut out = String::new();
    let mut problems = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let converted = match direction {
            ConvertDirection::EdgesToGraph6 => parse_edge_list(line).and_then(|g| to_graph6(&g)),
            ConvertDirection::Graph6ToEdges => parse_graph6(line).map(|g| format_edge_list(&g)),
        };
        match converted {
            Ok(s) => {
                out.push_str(&s);
                out.push('\n');
            }
            Err(e) => problems.push(format!("line {}: {e}", i + 1)),
        }
    }
    if !problems.is_empty() {
        return Err(Error::Input(problems.join("\n")));
    }
    Ok(out)
}

/// Parses one edge-list line: `n: u-v,u-v,...` (the edge list may be
/// empty).
pub fn parse_edge_list(line: &str) -> Result<Graph> {
    let bad = |msg: String| Error::Input(format!("edge list '{line}': {msg}"));
    let (head, rest) = line
        .split_once(':')
        .ok_or_else(|| bad("expected 'n: u-v,u-v,...'".into()))?;
    let n: usize = head
        .trim()
        .parse()
        .map_err(|_| bad(format!("'{}' is not a vertex count", head.trim())))?;
    let mut edges = Vec::new();
    for token in rest.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let (u, v) = token
            .split_once('-')
            .ok_or_else(|| bad(format!("'{token}' is not an edge 'u-v'")))?;
        let u: usize = u.trim().parse().map_err(|_| bad(format!("bad endpoint '{u}'")))?;
        let v: usize = v.trim().parse().map_err(|_| bad(format!("bad endpoint '{v}'")))?;
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges).map_err(|e| bad(e.to_string()))
}

/// Inverse of [`parse_edge_list`]: `n: u-v,u-v,...` with edges sorted.
pub fn format_edge_list(g: &Graph) -> String {
    let edges = g
        .edges()
        .iter()
        .map(|&(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(",");
    if edges.is_empty() {
        format!("{}:", g.order())
    } else {
        format!("{}: {}", g.order(), edges)
    }
}

/// Writes a rendered document to the output path, or stdout when absent.
pub fn write_output(doc: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, doc)?,
        None => print!("{doc}"),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_grammar_round_trip() {
        let cases = [
            ("cone:kneser:5:2", FamilyExpr { cone_depth: 1, base: FamilySpec::Kneser(5, 2) }),
            ("wheel:7", FamilyExpr { cone_depth: 0, base: FamilySpec::Wheel(7) }),
            ("cone:cone:empty:3", FamilyExpr { cone_depth: 2, base: FamilySpec::Empty(3) }),
            (
                "complete-bipartite:2:3",
                FamilyExpr { cone_depth: 0, base: FamilySpec::CompleteBipartite(2, 3) },
            ),
        ];
        for (text, expected) in cases {
            let parsed: FamilyExpr = text.parse().unwrap();
            assert_eq!(parsed, expected);
            assert_eq!(parsed.to_string(), text);
        }
    }

    #[test]
    fn family_grammar_rejects_garbage() {
        assert!("".parse::<FamilyExpr>().is_err());
        assert!("cone".parse::<FamilyExpr>().is_err());
        assert!("triangle:3".parse::<FamilyExpr>().is_err());
        assert!("cycle".parse::<FamilyExpr>().is_err());
        assert!("cycle:x".parse::<FamilyExpr>().is_err());
        assert!("kneser:5".parse::<FamilyExpr>().is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        for text in ["3: 0-1,1-2,0-2", "4:", "2: 0-1"] {
            let g = parse_edge_list(text).unwrap();
            let rendered = format_edge_list(&g);
            assert_eq!(parse_edge_list(&rendered).unwrap(), g);
        }
        assert_eq!(parse_edge_list("3: 0-1, 1-2 ,0-2").unwrap().edge_count(), 3);
    }

    #[test]
    fn edge_list_rejects_malformed() {
        assert!(parse_edge_list("3").is_err());
        assert!(parse_edge_list("x: 0-1").is_err());
        assert!(parse_edge_list("3: 0+1").is_err());
        assert!(parse_edge_list("3: 0-5").is_err());
    }

    #[test]
    fn expected_verdicts_match_the_claimed_ranges() {
        let tol = 1e-7;
        let expect = |text: &str, want: bool| {
            let expr: FamilyExpr = text.parse().unwrap();
            assert_eq!(expected_equality(&expr, tol).unwrap(), want, "{text}");
        };
        // Complete graphs and stars: always equality.
        for n in 2..=10 {
            expect(&format!("complete:{n}"), true);
        }
        for k in 1..=12 {
            expect(&format!("star:{k}"), true);
        }
        // Wheels: equality for k = 3 and k >= 7 only.
        expect("wheel:3", true);
        for k in 4..=6 {
            expect(&format!("wheel:{k}"), false);
        }
        for k in 7..=19 {
            expect(&format!("wheel:{k}"), true);
        }
        // Odd-graph cones: always equality.
        expect("cone:kneser:5:2", true);
        expect("cone:kneser:7:3", true);
        // Hypercube cones: equality iff k = 1 or k >= 7.
        expect("cone:hypercube:1", true);
        for k in 2..=6 {
            expect(&format!("cone:hypercube:{k}"), false);
        }
        expect("cone:hypercube:7", true);
        // Cones over irregular bases: strict.
        expect("cone:path:4", false);
        expect("cone:cone:cycle:5", false);
        // Non-cone families have no expected verdict.
        assert!(expected_equality(&"path:5".parse().unwrap(), tol).is_err());
    }

    #[test]
    fn analyze_k3_report() {
        let report = analyze_graph(&parse_graph6("Bw").unwrap(), 1e-7).unwrap();
        assert_eq!(report.n, 3);
        assert_eq!(report.product_bound.max_degree, 2);
        assert!((report.product_bound.product - 2.0).abs() <= 1e-9);
        assert!(report.product_bound.equality_within_tol);
        assert_eq!(report.alpha, Some(1));
    }

    #[test]
    fn analyze_p3_is_a_star() {
        let report = analyze_graph(&parse_graph6("Bg").unwrap(), 1e-7).unwrap();
        assert!((report.product_bound.product - 2.0).abs() <= 1e-9);
        assert!(report.product_bound.equality_within_tol);
        let w = report.product_bound.witness.unwrap();
        assert_eq!(w.cone_vertex, 1);
        assert_eq!(w.base_degree, 0);
    }

    #[test]
    fn analyze_rejects_disconnected_input() {
        let cfg = CliConfig::default();
        let input = GraphInput::EdgeListLine("4: 0-1,2-3".into());
        assert!(matches!(cmd_analyze(&input, &cfg), Err(Error::Disconnected)));
    }

    #[test]
    fn config_validation() {
        let mut cfg = CliConfig { tolerance: 0.0, ..CliConfig::default() };
        assert!(cfg.validate().is_err());
        cfg.tolerance = 1e-7;
        cfg.threads = Some(0);
        assert!(cfg.validate().is_err());
        cfg.threads = Some(2);
        assert!(cfg.validate().is_ok());
    }
}
