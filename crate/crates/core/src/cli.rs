//! Command-line front end.
//!
//! Base points are reported as edge labels 1..2n numbered along the
//! traversal, label 1 being the edge that enters the first PD record. For
//! the usual sequentially labelled PD codes this is the code's own labelling.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cache::{census_up_to, CensusCache};
use crate::cases::{enumerate_by_cases, verify_cases};
use crate::census::{with_degree, CensusEntry};
use crate::classify::{verify_md_table, verify_prop16, verify_theorem1, Report, DEGREE_TWO_KNOTS};
use crate::diagram::{Diagram, Orientation};
use crate::error::{Error, Result};
use crate::halfcurve::{lower_bounds, max_disjoint_polygons, projection_length};
use crate::pd::parse_diagram;
use crate::rfactor::{best_rfactor_bounds, conway_shadow, find_rfactors, rfactor_bounds};
use crate::table::KnotTable;
use crate::warping::{projection_warping_degree, warping_report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "warplab", version, about = "Warping degrees of knot diagrams and projections")]
pub struct Cli {
    /// Emit JSON (JSON lines for `census`).
    #[arg(long, global = true)]
    pub json: bool,
    /// Census cache directory; overrides $WARPLAB_CACHE.
    #[arg(long, global = true, value_name = "DIR")]
    pub cache: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

/// A PD code given inline or read from a file.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// PD code, e.g. "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
    pub pd: Option<String>,
    /// Read the PD code from a file.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
}

impl Input {
    fn diagram(&self) -> Result<Diagram> {
        match (&self.pd, &self.file) {
            (Some(text), None) => parse_diagram(text),
            (None, Some(path)) => parse_diagram(&fs::read_to_string(path)?),
            _ => Err(Error::Parse("give exactly one of a PD code or --file".into())),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// d(D) for each orientation and the bases attaining it.
    Wd(Input),
    /// d(P) and l(P) of the underlying shadow.
    ShadowWd(Input),
    /// Half-curve, polygon and r-factor bounds on d(P).
    Bounds(Input),
    /// r-factors of the shadow at one crossing.
    Rfactor {
        #[command(flatten)]
        input: Input,
        /// Crossing index, counting PD records from 0.
        #[arg(long)]
        at: usize,
    },
    /// Reduced shadows up to N crossings.
    Census {
        #[arg(long, value_name = "N")]
        max_n: usize,
        /// Keep only shadows with this d(P).
        #[arg(long, value_name = "K")]
        wd: Option<usize>,
    },
    /// Machine checks of the classification.
    Verify {
        what: Verification,
        /// For md-table, extend the census to nine crossings.
        #[arg(long)]
        extended: bool,
    },
    /// Knot type of a diagram.
    Identify {
        #[command(flatten)]
        input: Input,
        /// Knot table in JSON lines; the bundled one by default.
        #[arg(long, value_name = "PATH")]
        table: Option<PathBuf>,
    },
    /// Torus and twist-type shadows: `k` or `l,m`.
    Conway { spec: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Verification {
    Prop16,
    Theorem1,
    MdTable,
    Cases,
}

/// What a command printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code, stdout: String::new(), stderr: text }
            } else {
                Output { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok((stdout, code)) => Output { code, stdout, stderr: String::new() },
        Err(e) => Output { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn base_label(edge: usize, m: usize) -> usize {
    (edge + 1) % m + 1
}

fn render(cli: &Cli, value: Value, text: String) -> String {
    if cli.json {
        format!("{value}\n")
    } else {
        text
    }
}

fn execute(cli: &Cli) -> Result<(String, i32)> {
    let out = match &cli.command {
        Command::Wd(input) => wd(cli, &input.diagram()?)?,
        Command::ShadowWd(input) => shadow_wd(cli, &input.diagram()?)?,
        Command::Bounds(input) => bounds(cli, &input.diagram()?)?,
        Command::Rfactor { input, at } => rfactor(cli, &input.diagram()?, *at)?,
        Command::Census { max_n, wd } => return census(cli, *max_n, *wd).map(|s| (s, EXIT_OK)),
        Command::Verify { what, extended } => return verify(cli, *what, *extended),
        Command::Identify { input, table } => identify(cli, &input.diagram()?, table.as_ref())?,
        Command::Conway { spec } => conway(cli, spec)?,
    };
    Ok((out, EXIT_OK))
}

fn wd(cli: &Cli, d: &Diagram) -> Result<String> {
    if d.is_shadow() {
        return Err(Error::ShadowInput);
    }
    let m = d.edge_count();
    let mut rows = Vec::new();
    let mut text = String::new();
    for o in Orientation::BOTH {
        let r = warping_report(d, o)?;
        let mut bases: Vec<usize> = r.argmin.iter().map(|&e| base_label(e, m)).collect();
        bases.sort();
        text.push_str(&format!("{o:?}: d = {} at edges {bases:?}\n", r.minimum).to_lowercase());
        rows.push(json!({ "orientation": o, "d": r.minimum, "bases": bases }));
    }
    Ok(render(cli, json!({ "crossings": d.crossing_count(), "orientations": rows }), text))
}

fn shadow_wd(cli: &Cli, d: &Diagram) -> Result<String> {
    let p = d.shadow();
    let wd = projection_warping_degree(&p)?;
    let length = projection_length(&p)?;
    Ok(render(cli, json!({ "d": wd, "length": length }), format!("d(P) = {wd}\nl(P) = {length}\n")))
}

fn bounds(cli: &Cli, d: &Diagram) -> Result<String> {
    let p = d.shadow();
    let wd = projection_warping_degree(&p)?;
    let (a, _) = p.alternating_pair()?;
    let lower = lower_bounds(&a)?;
    let rf = if p.has_monogon() { None } else { best_rfactor_bounds(&p)? };
    let mut text = format!(
        "d(P) = {wd}\nl(P)/2 = {}\ndisjoint polygons = {}\n",
        lower.length_bound,
        max_disjoint_polygons(&p)
    );
    match rf {
        Some((lo, hi)) => text.push_str(&format!("r-factor bounds: {lo} <= d(P) <= {hi}\n")),
        None => text.push_str("r-factor bounds: none\n"),
    }
    let value = json!({
        "d": wd,
        "length_bound": lower.length_bound,
        "polygon_bound": lower.polygon_bound,
        "rfactor": rf.map(|(lo, hi)| json!({ "lower": lo, "upper": hi })),
    });
    Ok(render(cli, value, text))
}

fn rfactor(cli: &Cli, d: &Diagram, at: usize) -> Result<String> {
    let p = d.shadow();
    let found = find_rfactors(&p, at)?;
    let mut text = format!("{} r-factor(s) at crossing {at}\n", found.len());
    let mut rows = Vec::new();
    for r in &found {
        let b = rfactor_bounds(&p, r)?;
        text.push_str(&format!("gons {:?}: {} <= d(P) <= {}\n", r.gons, b.0, b.1));
        rows.push(json!({ "faces": r.faces, "gons": r.gons, "lower": b.0, "upper": b.1 }));
    }
    Ok(render(cli, json!({ "crossing": at, "rfactors": rows }), text))
}

fn load_census(cli: &Cli, max_n: usize) -> Result<Vec<CensusEntry>> {
    let cache = CensusCache::from_flag_or_env(cli.cache.as_deref());
    census_up_to(max_n, KnotTable::bundled(), cache.as_ref())
}

fn census(cli: &Cli, max_n: usize, wd: Option<usize>) -> Result<String> {
    let mut entries = load_census(cli, max_n)?;
    if let Some(k) = wd {
        entries = with_degree(&entries, k);
    }
    let mut out = String::new();
    for e in &entries {
        if cli.json {
            out.push_str(&serde_json::to_string(e).map_err(|e| Error::Io(e.to_string()))?);
        } else {
            out.push_str(&format!(
                "{} n={} wd={} length={} {} {}",
                e.code,
                e.n,
                e.wd,
                e.length,
                if e.prime { "prime" } else { "composite" },
                e.knots.join(" / ")
            ));
        }
        out.push('\n');
    }
    Ok(out)
}

fn report_output(cli: &Cli, r: &Report, extra: Value) -> (String, i32) {
    let code = if r.passed() { EXIT_OK } else { EXIT_VERIFY };
    if cli.json {
        let v = json!({ "passed": r.passed(), "checks": r.checks, "result": extra });
        return (format!("{v}\n"), code);
    }
    let mut text = String::new();
    for c in &r.checks {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        if c.detail.is_empty() {
            text.push_str(&format!("{mark} {}\n", c.name));
        } else {
            text.push_str(&format!("{mark} {}: {}\n", c.name, c.detail));
        }
    }
    (text, code)
}

fn verify(cli: &Cli, what: Verification, extended: bool) -> Result<(String, i32)> {
    let table = KnotTable::bundled();
    Ok(match what {
        Verification::Prop16 => {
            let census = load_census(cli, 8)?;
            let two: Vec<&str> = census.iter().filter(|e| e.wd == 2).map(|e| e.code.as_str()).collect();
            report_output(cli, &verify_prop16(&census)?, json!(two))
        }
        Verification::Theorem1 => {
            for name in DEGREE_TWO_KNOTS {
                if table.get(name).is_none() {
                    return Err(Error::UnknownKnot(name.into()));
                }
            }
            let census = load_census(cli, 8)?;
            let found = crate::classify::degree_two_prime_knots(&census);
            let r = verify_theorem1(&census);
            let (mut text, code) = report_output(cli, &r, json!(found));
            if !cli.json {
                text.push_str(&found.iter().cloned().collect::<Vec<_>>().join("\n"));
                text.push('\n');
            }
            (text, code)
        }
        Verification::MdTable => {
            let census = load_census(cli, if extended { 9 } else { 8 })?;
            report_output(cli, &verify_md_table(&census, table), Value::Null)
        }
        Verification::Cases => {
            let census = load_census(cli, 8)?;
            let r = enumerate_by_cases(table)?;
            let codes: Vec<&str> = r.degree_two.iter().map(|e| e.code.as_str()).collect();
            report_output(cli, &verify_cases(&r, &census), json!(codes))
        }
    })
}

fn identify(cli: &Cli, d: &Diagram, table: Option<&PathBuf>) -> Result<String> {
    let loaded;
    let t = match table {
        Some(path) => {
            loaded = KnotTable::load(path)?;
            &loaded
        }
        None => KnotTable::bundled(),
    };
    let name = t.identify(d)?;
    Ok(render(cli, json!({ "knot": name }), format!("{name}\n")))
}

fn conway(cli: &Cli, spec: &str) -> Result<String> {
    let parts: Vec<usize> = spec
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| Error::Conway(format!("bad integer {s:?}"))))
        .collect::<Result<_>>()?;
    let c = conway_shadow(&parts)?;
    let wd = projection_warping_degree(&c.shadow)?;
    let (a, _) = c.shadow.alternating_pair()?;
    let knot = KnotTable::bundled().identify(&a)?;
    let text = format!(
        "{}\npredicted d = {}\ncomputed d(P) = {wd}\nknot {knot}\n",
        c.shadow.render_pd(),
        c.predicted_degree
    );
    let value = json!({
        "spec": c.spec,
        "pd": c.shadow.render_pd(),
        "predicted": c.predicted_degree,
        "d": wd,
        "knot": knot,
    });
    Ok(render(cli, value, text))
}
