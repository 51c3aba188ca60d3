//! Command line front end: parses complex and point scheme files,
//! dispatches subcommands, and emits deterministic JSON or aligned-table
//! reports. Every report embeds the tool version, a hash of the input
//! bytes, and an echo of the effective configuration.

use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use splinedim::cellcomplex::{load_complex_json, EmbeddedComplex};
use splinedim::chainhomology::{
    build_rj_complex, euler_check, freeness_probe, local_series_formula, ComplexVariant,
    FreenessVerdict,
};
use splinedim::closedforms::{
    mixed_hf, planar_main, plf_dim, resolution_data, schumaker_lower_bound, star_dimension,
    PlanarMainReport, SyzygyData,
};
use splinedim::fixtures;
use splinedim::geomprimes::{build_xi_graph, cycle_ideals, xi_candidates, CycleData, XiGraph};
use splinedim::goldens::{self, CriterionResult};
use splinedim::invsys::{
    expected_hf, fatpoints_hf, ideal_dim, load_points_json, sample_distinct_forms, shgh_scan,
    FatPointScheme, ShghReport,
};
use splinedim::polyring::{
    dim_full_space, ideal_piece_dim, pretty_univariate, GeneratingSeries, Polynomial,
};
use splinedim::splinemod::{
    dimension_table, fit_hilbert_polynomial, ExponentVector, HilbertFit, PresentationOracle,
};
use splinedim::{Result, SplineError};

#[derive(Parser)]
#[command(
    name = "splinedim",
    version,
    about = "Exact dimensions, series and homology of piecewise polynomial spaces"
)]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Table => "table",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Spline space dimension at one degree or over a window.
    Dim(DimArgs),
    /// Dimension table with the fitted polynomial and generating series.
    Series(SeriesArgs),
    /// Homology dimensions of the decorated chain complex on interior faces.
    Homology(HomologyArgs),
    /// Probe whether the spline module looks free up to a degree bound.
    Freeness(FreenessArgs),
    /// Alternating sum of term series of the chain complex.
    LocalSeries(LocalSeriesArgs),
    /// Codimension-two loci, their cell graphs and cycles.
    Xi(XiArgs),
    /// Closed dimension formulas.
    #[command(subcommand)]
    Formula(FormulaCommand),
    /// Fat point schemes: Hilbert functions, expected values, deficits.
    Fatpoints(FatpointsArgs),
    /// Rank-only experiments; no closed formula is claimed for these.
    #[command(subcommand)]
    Experiment(ExperimentCommand),
    /// Run golden verification suites.
    Goldens(GoldensArgs),
}

#[derive(Subcommand)]
enum ExperimentCommand {
    /// Degree pieces of an ideal of powers of seeded random linear forms,
    /// computed purely as matrix ranks.
    PowersRank(PowersRankArgs),
}

#[derive(Args)]
struct PowersRankArgs {
    /// Number of homogeneous variables.
    #[arg(long, default_value_t = 3)]
    nvars: usize,
    /// Power exponents, comma separated; one random form per entry.
    #[arg(long, value_delimiter = ',', value_name = "A1,A2,...", required = true)]
    alphas: Vec<u32>,
    /// Inclusive degree window A..B.
    #[arg(long, value_parser = parse_degree_range, value_name = "A..B")]
    degree_range: (i64, i64),
    /// Seed for the form sampler.
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Args)]
struct ComplexInput {
    /// Complex JSON file, or the name of a bundled fixture.
    #[arg(long, value_name = "FILE")]
    complex: String,
}

#[derive(Args)]
struct Smoothness {
    /// Uniform smoothness order across interior facets.
    #[arg(short, long, conflicts_with = "alphas")]
    r: Option<u32>,
    /// Per-facet smoothness orders, comma separated, one entry per
    /// interior facet.
    #[arg(long, value_delimiter = ',', value_name = "R1,R2,...")]
    alphas: Option<Vec<u32>>,
}

impl Smoothness {
    fn exponents(&self, c: &EmbeddedComplex) -> Result<ExponentVector> {
        match (self.r, &self.alphas) {
            (Some(r), None) => Ok(ExponentVector::uniform(c, r)),
            (None, Some(v)) => ExponentVector::from_vec(c, v.clone()),
            (None, None) => {
                Err(SplineError::Validation("pass either -r or --alphas".into()))
            }
            _ => unreachable!("clap rejects -r together with --alphas"),
        }
    }
}

fn parse_degree_range(s: &str) -> std::result::Result<(i64, i64), String> {
    let Some((a, b)) = s.split_once("..") else {
        return Err(format!("{s:?} is not an inclusive range like 0..8"));
    };
    let lo: i64 = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
    let hi: i64 = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
    Ok((lo, hi))
}

fn nonempty(range: (i64, i64)) -> Result<(i64, i64)> {
    if range.0 > range.1 {
        return Err(SplineError::Validation(format!(
            "degree range {}..{} is empty",
            range.0, range.1
        )));
    }
    Ok(range)
}

#[derive(Args)]
struct DimArgs {
    #[command(flatten)]
    complex: ComplexInput,
    #[command(flatten)]
    smooth: Smoothness,
    /// Single degree.
    #[arg(short = 'd', long = "degree", conflicts_with = "degree_range")]
    degree: Option<i64>,
    /// Inclusive degree window A..B.
    #[arg(long, value_parser = parse_degree_range, value_name = "A..B")]
    degree_range: Option<(i64, i64)>,
}

#[derive(Args)]
struct SeriesArgs {
    #[command(flatten)]
    complex: ComplexInput,
    #[command(flatten)]
    smooth: Smoothness,
    /// Inclusive degree window 0..B; must start at 0 and reach far enough
    /// for the series numerator to be visible.
    #[arg(long, value_parser = parse_degree_range, value_name = "0..B")]
    degree_range: (i64, i64),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    /// Quotients by the facet form powers.
    Rj,
    /// Quotients by vanishing ideals of faces (simplicial only).
    Ri,
    /// Plain polynomial coefficients on every face.
    R,
}

impl VariantArg {
    fn to_variant(self) -> ComplexVariant {
        match self {
            VariantArg::Rj => ComplexVariant::RJ,
            VariantArg::Ri => ComplexVariant::RI,
            VariantArg::R => ComplexVariant::R,
        }
    }
    fn name(self) -> &'static str {
        match self {
            VariantArg::Rj => "rj",
            VariantArg::Ri => "ri",
            VariantArg::R => "r",
        }
    }
}

#[derive(Args)]
struct HomologyArgs {
    #[command(flatten)]
    complex: ComplexInput,
    /// Uniform smoothness order.
    #[arg(short, long)]
    r: u32,
    #[arg(long, value_enum, default_value_t = VariantArg::Rj)]
    variant: VariantArg,
    /// Inclusive degree window A..B.
    #[arg(long, value_parser = parse_degree_range, value_name = "A..B")]
    degree_range: (i64, i64),
}

#[derive(Args)]
struct FreenessArgs {
    #[command(flatten)]
    complex: ComplexInput,
    /// Uniform smoothness order.
    #[arg(short, long)]
    r: u32,
    /// Degree bound for the probe; defaults to 3(r+1), the smallest bound
    /// from which a consistent answer is conclusive.
    #[arg(long)]
    bound: Option<i64>,
}

#[derive(Args)]
struct LocalSeriesArgs {
    #[command(flatten)]
    complex: ComplexInput,
    /// Uniform smoothness order.
    #[arg(short, long)]
    r: u32,
    /// Largest degree fed into the numerator fit; defaults to 3r+6.
    #[arg(long)]
    max_degree: Option<i64>,
}

#[derive(Args)]
struct XiArgs {
    #[command(flatten)]
    complex: ComplexInput,
    /// Uniform smoothness order; when given, cycles also report their
    /// restricted pencil ideals.
    #[arg(short, long)]
    r: Option<u32>,
}

#[derive(Subcommand)]
enum FormulaCommand {
    /// Lower bound for planar simplicial complexes over a degree window.
    Schumaker(DegreeSweepArgs),
    /// Exact dimension formula for the star of a single interior vertex.
    Star(DegreeSweepArgs),
    /// Quadratic dimension polynomial with per-cycle corrections.
    PlanarMain(PlanarMainArgs),
    /// Degree pieces of an ideal of powers of distinct linear forms in
    /// two variables, and of its quotient.
    Plf(PlfArgs),
    /// Shape of the minimal resolution for powers of linear forms.
    Resolution(ResolutionArgs),
}

#[derive(Args)]
struct DegreeSweepArgs {
    #[command(flatten)]
    complex: ComplexInput,
    /// Uniform smoothness order.
    #[arg(short, long)]
    r: u32,
    /// Inclusive degree window A..B.
    #[arg(long, value_parser = parse_degree_range, value_name = "A..B")]
    degree_range: (i64, i64),
}

#[derive(Args)]
struct PlanarMainArgs {
    #[command(flatten)]
    complex: ComplexInput,
    /// Uniform smoothness order.
    #[arg(short, long)]
    r: u32,
}

#[derive(Args)]
struct PlfArgs {
    /// Exponents of the linear form powers, comma separated.
    #[arg(long, value_delimiter = ',', value_name = "A1,A2,...", required = true)]
    alphas: Vec<u32>,
    /// Inclusive degree window A..B.
    #[arg(long, value_parser = parse_degree_range, value_name = "A..B")]
    degree_range: (i64, i64),
}

#[derive(Args)]
struct ResolutionArgs {
    /// Nondecreasing exponents of the linear form powers, comma separated.
    #[arg(long, value_delimiter = ',', value_name = "A1,A2,...", required = true)]
    alphas: Vec<u32>,
}

#[derive(Args)]
struct FatpointsArgs {
    /// Point scheme JSON file with fields dim, points, multiplicities.
    #[arg(long, value_name = "FILE", required_unless_present = "general", conflicts_with = "general")]
    points: Option<String>,
    /// Sample points in general position instead of reading a file; the
    /// point count is the number of --mults entries.
    #[arg(long)]
    general: bool,
    /// Multiplicities, comma separated. Required with --general; overrides
    /// the file multiplicities otherwise.
    #[arg(long, value_delimiter = ',', value_name = "M1,M2,...")]
    mults: Option<Vec<u32>>,
    /// Inclusive degree window A..B.
    #[arg(long, value_parser = parse_degree_range, value_name = "A..B")]
    degree_range: (i64, i64),
    /// Seed for the general position sampler.
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Args)]
struct GoldensArgs {
    /// Suite name: all, th-table, planar-main, octahedron, star,
    /// schumaker, plf, top-homology, euler, hpdim, fatpoints.
    #[arg(default_value = "all")]
    suite: String,
}

#[derive(Serialize)]
struct Tool {
    name: &'static str,
    version: &'static str,
}

impl Tool {
    fn current() -> Self {
        Tool { name: "splinedim", version: env!("CARGO_PKG_VERSION") }
    }
}

#[derive(Serialize)]
struct InputInfo {
    path: String,
    sha256: String,
}

/// Echo of the effective configuration; unused fields stay null so the
/// report shape is the same for every subcommand.
#[derive(Serialize, Default)]
struct ConfigEcho {
    subcommand: String,
    r: Option<u32>,
    alphas: Option<Vec<u32>>,
    degree: Option<i64>,
    degree_range: Option<[i64; 2]>,
    variant: Option<&'static str>,
    bound: Option<i64>,
    max_degree: Option<i64>,
    mults: Option<Vec<u32>>,
    suite: Option<String>,
    format: &'static str,
    seed: Option<u64>,
    threads: Option<usize>,
}

impl ConfigEcho {
    fn new(subcommand: &str, format: Format, threads: Option<usize>) -> Self {
        ConfigEcho {
            subcommand: subcommand.into(),
            format: format.name(),
            threads,
            ..ConfigEcho::default()
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    tool: Tool,
    input: Option<&'a InputInfo>,
    config: &'a ConfigEcho,
    #[serde(flatten)]
    payload: &'a T,
}

fn sha256_hex(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    let digest = h.finalize();
    let mut out = String::with_capacity(64);
    for b in digest {
        let _ = write!(out, "{b:02x}");
    }
    out
}

/// Reads an input argument: an existing file wins, otherwise the name of
/// a bundled fixture.
fn read_input(arg: &str) -> Result<(String, InputInfo)> {
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg)
            .map_err(|e| SplineError::Parse(format!("cannot read {arg}: {e}")))?;
        let info = InputInfo { path: arg.into(), sha256: sha256_hex(text.as_bytes()) };
        return Ok((text, info));
    }
    if let Some(text) = fixtures::by_name(arg) {
        let info =
            InputInfo { path: format!("fixture:{arg}"), sha256: sha256_hex(text.as_bytes()) };
        return Ok((text.to_string(), info));
    }
    Err(SplineError::Parse(format!("{arg} is neither a readable file nor a bundled fixture")))
}

fn load_complex(arg: &str) -> Result<(EmbeddedComplex, InputInfo)> {
    let (text, info) = read_input(arg)?;
    Ok((load_complex_json(&text)?, info))
}

/// Strips the spaces from a rendered polynomial: `2d^2 + 2` -> `2d^2+2`.
fn compact(pretty: &str) -> String {
    pretty.replace(" + ", "+").replace(" - ", "-")
}

fn render<T: Serialize>(
    format: Format,
    input: Option<&InputInfo>,
    config: &ConfigEcho,
    payload: &T,
    table_body: String,
) -> String {
    match format {
        Format::Json => {
            let env = Envelope { tool: Tool::current(), input, config, payload };
            let mut s = serde_json::to_string_pretty(&env).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Table => {
            let tool = Tool::current();
            let mut out = format!("{} {}\n", tool.name, tool.version);
            if let Some(i) = input {
                let _ = writeln!(out, "input: {} (sha256 {})", i.path, i.sha256);
            }
            let _ = writeln!(out, "command: {}", config.subcommand);
            out.push_str(&table_body);
            out
        }
    }
}

#[derive(Serialize)]
struct DegreeValue {
    d: i64,
    value: i64,
}

fn sweep_table(header: &str, rows: &[DegreeValue]) -> String {
    let mut out = format!("{:>5}  {:>10}\n", "d", header);
    for row in rows {
        let _ = writeln!(out, "{:>5}  {:>10}", row.d, row.value);
    }
    out
}

#[derive(Serialize)]
struct DimPayload {
    #[serde(skip_serializing_if = "Option::is_none")]
    dim: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dims: Option<Vec<DegreeValue>>,
}

#[derive(Serialize)]
struct SeriesPayload {
    dims: Vec<DegreeValue>,
    polynomial: String,
    fit: HilbertFit,
    series: GeneratingSeries,
    series_pretty: String,
}

#[derive(Serialize)]
struct HomologyRow {
    d: i64,
    /// `h[i]` is the dimension of the homology at position `i`.
    h: Vec<i64>,
    euler: bool,
}

#[derive(Serialize)]
struct HomologyPayload {
    variant: &'static str,
    rows: Vec<HomologyRow>,
}

#[derive(Serialize)]
struct FreenessPayload {
    bound: i64,
    verdict: FreenessVerdict,
}

#[derive(Serialize)]
struct LocalSeriesPayload {
    series: GeneratingSeries,
    pretty: String,
}

#[derive(Serialize)]
struct XiEntry {
    graph: XiGraph,
    #[serde(skip_serializing_if = "Option::is_none")]
    cycles: Option<Vec<CycleData>>,
}

#[derive(Serialize)]
struct XiPayload {
    loci: Vec<XiEntry>,
}

#[derive(Serialize)]
struct SweepPayload {
    formula: &'static str,
    values: Vec<DegreeValue>,
}

#[derive(Serialize)]
struct PlanarMainPayload {
    polynomial: String,
    report: PlanarMainReport,
}

#[derive(Serialize)]
struct PlfRow {
    t: i64,
    ideal: i64,
    quotient: i64,
}

#[derive(Serialize)]
struct PlfPayload {
    alphas: Vec<u32>,
    rows: Vec<PlfRow>,
}

#[derive(Serialize)]
struct ResolutionPayload {
    resolution: SyzygyData,
}

#[derive(Serialize)]
struct FatpointRow {
    j: i64,
    hilbert: i64,
    expected_hilbert: i64,
    ideal: i64,
    expected_ideal: i64,
    deficit: i64,
}

#[derive(Serialize)]
struct FatpointsPayload {
    scheme: FatPointScheme,
    rows: Vec<FatpointRow>,
}

#[derive(Serialize)]
struct PowersRankRow {
    t: i64,
    ideal: i64,
    full: i64,
    quotient: i64,
}

#[derive(Serialize)]
struct PowersRankPayload {
    nvars: usize,
    alphas: Vec<u32>,
    seed: u64,
    forms: Vec<String>,
    rows: Vec<PowersRankRow>,
}

#[derive(Serialize)]
struct GoldensPayload {
    suite: String,
    results: Vec<CriterionResult>,
    passed: bool,
}

fn goldens_lines(results: &[CriterionResult]) -> String {
    let mut out = String::new();
    for r in results {
        let _ = writeln!(
            out,
            "criterion {:2} {:<13} {} | {}",
            r.id,
            r.name,
            if r.passed { "PASS" } else { "FAIL" },
            r.detail
        );
    }
    out
}

fn thread_cap() -> Result<Option<usize>> {
    match std::env::var("SPLINE_THREADS") {
        Err(_) => Ok(None),
        Ok(raw) => {
            let n: usize = raw.trim().parse().map_err(|_| {
                SplineError::Validation(format!("SPLINE_THREADS={raw:?} is not a thread count"))
            })?;
            if n == 0 {
                return Err(SplineError::Validation(
                    "SPLINE_THREADS must be at least 1".into(),
                ));
            }
            splinedim::set_thread_cap(n);
            Ok(Some(n))
        }
    }
}

fn run(cli: &Cli) -> Result<(String, u8)> {
    let threads = thread_cap()?;
    let fmt = cli.format;
    let echo = |name: &str| ConfigEcho::new(name, fmt, threads);
    match &cli.command {
        Command::Dim(a) => {
            let (c, input) = load_complex(&a.complex.complex)?;
            let alphas = a.smooth.exponents(&c)?;
            let mut config = echo("dim");
            config.r = a.smooth.r;
            config.alphas = a.smooth.alphas.clone();
            match (a.degree, a.degree_range) {
                (Some(d), None) => {
                    config.degree = Some(d);
                    let mut oracle = PresentationOracle::new(&c, &alphas)?;
                    let payload = DimPayload { dim: Some(oracle.spline_dim(d)), dims: None };
                    let body = format!("dim at degree {d}: {}\n", payload.dim.unwrap());
                    Ok((render(fmt, Some(&input), &config, &payload, body), 0))
                }
                (None, Some(range)) => {
                    let (lo, hi) = nonempty(range)?;
                    config.degree_range = Some([lo, hi]);
                    let table = dimension_table(&c, &alphas, lo, hi)?;
                    let rows: Vec<DegreeValue> =
                        table.degrees().map(|(d, v)| DegreeValue { d, value: v }).collect();
                    let body = sweep_table("dim", &rows);
                    let payload = DimPayload { dim: None, dims: Some(rows) };
                    Ok((render(fmt, Some(&input), &config, &payload, body), 0))
                }
                (None, None) => {
                    Err(SplineError::Validation("pass -d or --degree-range".into()))
                }
                _ => unreachable!("clap rejects -d together with --degree-range"),
            }
        }
        Command::Series(a) => {
            let (c, input) = load_complex(&a.complex.complex)?;
            let alphas = a.smooth.exponents(&c)?;
            let (lo, hi) = nonempty(a.degree_range)?;
            if lo != 0 {
                return Err(SplineError::Validation(
                    "series needs a window starting at degree 0".into(),
                ));
            }
            let mut config = echo("series");
            config.r = a.smooth.r;
            config.alphas = a.smooth.alphas.clone();
            config.degree_range = Some([lo, hi]);
            let table = dimension_table(&c, &alphas, lo, hi)?;
            let series = GeneratingSeries::from_coefficients(&table.dims, (c.k + 1) as u32, 2)?;
            let fit = fit_hilbert_polynomial(&table, c.k)?;
            let rows: Vec<DegreeValue> =
                table.degrees().map(|(d, v)| DegreeValue { d, value: v }).collect();
            let mut body = sweep_table("dim", &rows);
            let _ = writeln!(body, "polynomial: {}", fit.pretty());
            let _ = writeln!(body, "series: {series}");
            let payload = SeriesPayload {
                dims: rows,
                polynomial: compact(&fit.pretty()),
                fit,
                series_pretty: series.to_string(),
                series,
            };
            Ok((render(fmt, Some(&input), &config, &payload, body), 0))
        }
        Command::Homology(a) => {
            let (c, input) = load_complex(&a.complex.complex)?;
            let (lo, hi) = nonempty(a.degree_range)?;
            let mut config = echo("homology");
            config.r = Some(a.r);
            config.degree_range = Some([lo, hi]);
            config.variant = Some(a.variant.name());
            let cx = build_rj_complex(&c, a.r, a.variant.to_variant())?;
            let mut rows = Vec::new();
            let mut body = format!("{:>5}  {:<20}  euler\n", "d", "h0 h1 ...");
            for d in lo..=hi {
                let h = cx.homology_profile(d);
                let euler = euler_check(&cx, d);
                let joined =
                    h.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
                let _ = writeln!(body, "{:>5}  {:<20}  {}", d, joined, euler);
                rows.push(HomologyRow { d, h, euler });
            }
            let payload = HomologyPayload { variant: a.variant.name(), rows };
            Ok((render(fmt, Some(&input), &config, &payload, body), 0))
        }
        Command::Freeness(a) => {
            let (c, input) = load_complex(&a.complex.complex)?;
            let bound = a.bound.unwrap_or(3 * (a.r as i64 + 1));
            let mut config = echo("freeness");
            config.r = Some(a.r);
            config.bound = Some(bound);
            let verdict = freeness_probe(&c, a.r, bound)?;
            let body = format!(
                "bound {bound}: {}\n",
                serde_json::to_string(&verdict).expect("verdict serializes")
            );
            let payload = FreenessPayload { bound, verdict };
            Ok((render(fmt, Some(&input), &config, &payload, body), 0))
        }
        Command::LocalSeries(a) => {
            let (c, input) = load_complex(&a.complex.complex)?;
            let max_degree = a.max_degree.unwrap_or(3 * a.r as i64 + 6);
            let mut config = echo("local-series");
            config.r = Some(a.r);
            config.max_degree = Some(max_degree);
            let series = local_series_formula(&c, a.r, max_degree)?;
            let body = format!("series: {series}\n");
            let payload = LocalSeriesPayload { pretty: series.to_string(), series };
            Ok((render(fmt, Some(&input), &config, &payload, body), 0))
        }
        Command::Xi(a) => {
            let (c, input) = load_complex(&a.complex.complex)?;
            let mut config = echo("xi");
            config.r = a.r;
            let mut loci = Vec::new();
            let mut body = String::new();
            for locus in xi_candidates(&c)? {
                let graph = build_xi_graph(&c, &locus)?;
                let cycles = match a.r {
                    Some(r) => Some(cycle_ideals(&c, &locus, r)?),
                    None => None,
                };
                let n_cycles = graph.components.iter().filter(|k| k.is_cycle).count();
                let _ = writeln!(
                    body,
                    "{}  cells {:?}  components {} ({} cycles)",
                    locus,
                    graph.cells,
                    graph.components.len(),
                    n_cycles
                );
                loci.push(XiEntry { graph, cycles });
            }
            let _ = writeln!(body, "{} loci", loci.len());
            let payload = XiPayload { loci };
            Ok((render(fmt, Some(&input), &config, &payload, body), 0))
        }
        Command::Formula(f) => run_formula(f, fmt, threads),
        Command::Fatpoints(a) => {
            let (lo, hi) = nonempty(a.degree_range)?;
            let mut config = echo("fatpoints");
            config.degree_range = Some([lo, hi]);
            config.mults = a.mults.clone();
            if a.general {
                let Some(mults) = &a.mults else {
                    return Err(SplineError::Validation(
                        "--general needs --mults to size the sample".into(),
                    ));
                };
                config.seed = Some(a.seed);
                let report: ShghReport = shgh_scan(mults, lo..=hi, a.seed)?;
                let mut body =
                    format!("{:>5}  {:>10}  {:>10}  {:>8}\n", "j", "expected", "actual", "deficit");
                for row in &report.rows {
                    let _ = writeln!(
                        body,
                        "{:>5}  {:>10}  {:>10}  {:>8}",
                        row.j, row.expected_ideal, row.actual_ideal, row.deficit
                    );
                }
                Ok((render(fmt, None, &config, &report, body), 0))
            } else {
                let path = a.points.as_deref().expect("clap requires --points here");
                let (text, input) = read_input(path)?;
                let mut scheme = load_points_json(&text)?;
                if let Some(mults) = &a.mults {
                    scheme = scheme.with_mults(mults.clone())?;
                }
                let mut rows = Vec::new();
                let mut body = format!(
                    "{:>5}  {:>8}  {:>8}  {:>8}  {:>8}  {:>8}\n",
                    "j", "hilbert", "exp hf", "ideal", "exp idl", "deficit"
                );
                for j in lo..=hi {
                    let hilbert = fatpoints_hf(&scheme, j)?;
                    let ideal = ideal_dim(&scheme, j)?;
                    let (expected_hilbert, expected_ideal) = expected_hf(&scheme, j);
                    let deficit = ideal - expected_ideal;
                    let _ = writeln!(
                        body,
                        "{:>5}  {:>8}  {:>8}  {:>8}  {:>8}  {:>8}",
                        j, hilbert, expected_hilbert, ideal, expected_ideal, deficit
                    );
                    rows.push(FatpointRow {
                        j,
                        hilbert,
                        expected_hilbert,
                        ideal,
                        expected_ideal,
                        deficit,
                    });
                }
                let payload = FatpointsPayload { scheme, rows };
                Ok((render(fmt, Some(&input), &config, &payload, body), 0))
            }
        }
        Command::Experiment(ExperimentCommand::PowersRank(a)) => {
            let (lo, hi) = nonempty(a.degree_range)?;
            let mut config = echo("experiment powers-rank");
            config.alphas = Some(a.alphas.clone());
            config.degree_range = Some([lo, hi]);
            config.seed = Some(a.seed);
            if dim_full_space(a.nvars, hi) > 3000 {
                return Err(SplineError::Limit(format!(
                    "degree {hi} in {} variables is past desk scale",
                    a.nvars
                )));
            }
            let forms = sample_distinct_forms(a.alphas.len(), a.nvars, a.seed)?;
            let gens: Vec<Polynomial> =
                forms.iter().zip(&a.alphas).map(|(f, &al)| f.power(al)).collect();
            let mut rows = Vec::new();
            let mut body =
                format!("{:>5}  {:>8}  {:>8}  {:>8}\n", "t", "ideal", "full", "quotient");
            for t in lo..=hi {
                let full = dim_full_space(a.nvars, t);
                let ideal = if t < 0 {
                    0
                } else {
                    ideal_piece_dim(&gens, a.nvars, t as u32)? as i64
                };
                let quotient = full - ideal;
                let _ = writeln!(body, "{:>5}  {:>8}  {:>8}  {:>8}", t, ideal, full, quotient);
                rows.push(PowersRankRow { t, ideal, full, quotient });
            }
            let payload = PowersRankPayload {
                nvars: a.nvars,
                alphas: a.alphas.clone(),
                seed: a.seed,
                forms: forms.iter().map(|f| f.to_string()).collect(),
                rows,
            };
            Ok((render(fmt, None, &config, &payload, body), 0))
        }
        Command::Goldens(a) => {
            let mut config = echo("goldens");
            config.suite = Some(a.suite.clone());
            let results = goldens::run_suite(&a.suite)?;
            let passed = results.iter().all(|r| r.passed);
            let body = goldens_lines(&results);
            let payload = GoldensPayload { suite: a.suite.clone(), results, passed };
            Ok((render(fmt, None, &config, &payload, body), u8::from(!passed)))
        }
    }
}

fn run_formula(f: &FormulaCommand, fmt: Format, threads: Option<usize>) -> Result<(String, u8)> {
    let echo = |name: &str| ConfigEcho::new(name, fmt, threads);
    match f {
        FormulaCommand::Schumaker(a) | FormulaCommand::Star(a) => {
            let is_star = matches!(f, FormulaCommand::Star(_));
            let name = if is_star { "formula star" } else { "formula schumaker" };
            let (c, input) = load_complex(&a.complex.complex)?;
            let (lo, hi) = nonempty(a.degree_range)?;
            let mut config = echo(name);
            config.r = Some(a.r);
            config.degree_range = Some([lo, hi]);
            let mut values = Vec::new();
            for d in lo..=hi {
                let value = if is_star {
                    star_dimension(&c, a.r, d)?
                } else {
                    schumaker_lower_bound(&c, a.r, d)?
                };
                values.push(DegreeValue { d, value });
            }
            let body = sweep_table(if is_star { "dim" } else { "bound" }, &values);
            let payload =
                SweepPayload { formula: if is_star { "star" } else { "schumaker" }, values };
            Ok((render(fmt, Some(&input), &config, &payload, body), 0))
        }
        FormulaCommand::PlanarMain(a) => {
            let (c, input) = load_complex(&a.complex.complex)?;
            let mut config = echo("formula planar-main");
            config.r = Some(a.r);
            let report = planar_main(&c, a.r)?;
            let polynomial = compact(&pretty_univariate(&report.coefficients(), "d"));
            let mut body = format!("polynomial: {polynomial}\n");
            let _ = writeln!(
                body,
                "verified from degree {}, conjectural from {}",
                report.verified_from, report.conjectural_from
            );
            for cyc in &report.cycles {
                let _ = writeln!(
                    body,
                    "cycle at {}  cells {:?}  n {}  contribution {}",
                    cyc.xi, cyc.cells, cyc.n, cyc.contribution
                );
            }
            let payload = PlanarMainPayload { polynomial, report };
            Ok((render(fmt, Some(&input), &config, &payload, body), 0))
        }
        FormulaCommand::Plf(a) => {
            let (lo, hi) = nonempty(a.degree_range)?;
            let mut config = echo("formula plf");
            config.alphas = Some(a.alphas.clone());
            config.degree_range = Some([lo, hi]);
            let mut rows = Vec::new();
            let mut body = format!("{:>5}  {:>8}  {:>8}\n", "t", "ideal", "quotient");
            for t in lo..=hi {
                let ideal = plf_dim(&a.alphas, t);
                let quotient = mixed_hf(&a.alphas, t);
                let _ = writeln!(body, "{:>5}  {:>8}  {:>8}", t, ideal, quotient);
                rows.push(PlfRow { t, ideal, quotient });
            }
            let payload = PlfPayload { alphas: a.alphas.clone(), rows };
            Ok((render(fmt, None, &config, &payload, body), 0))
        }
        FormulaCommand::Resolution(a) => {
            let mut config = echo("formula resolution");
            config.alphas = Some(a.alphas.clone());
            let data = resolution_data(&a.alphas)?;
            let body = format!(
                "kept {:?}, omega {}, syzygies {} in degree {} and {} in degree {}\n",
                data.alphas,
                data.omega,
                data.a,
                data.omega + 1,
                data.n as i64 - 1 - data.a,
                data.omega
            );
            let payload = ResolutionPayload { resolution: data };
            Ok((render(fmt, None, &config, &payload, body), 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
