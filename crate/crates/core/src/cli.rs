//! Command-line front end.
//!
//! Every command takes a preset name or a spec file path. Output is one
//! `#` comment line followed by a tab-separated table with a header row, or a
//! JSON document with `--format json`. Exit codes: 0 success, 1 failed
//! verification or refused computation, 2 usage or parse error.

use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::analysis::{
    degeneracy_sweep, locality_check, qudit_locality_check, verify_commutation, AnalysisError, AnySpec, LocalityReport, SpecBuilder,
    SweepFamily,
};
use crate::metric::{ball, word_metric};
use crate::oracle::{cap_bits, ground_space_dim_dense};
use crate::presets::PRESET_NAMES;
use crate::spec_file::{parse_params, preset, Source, SpecFile, SpecFileError};

#[derive(Parser, Debug)]
#[command(name = "xxz", version, about = "Build and check generalized Haah codes over finite groups")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Tsv, global = true)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Tsv,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct SpecArgs {
    /// Preset name (haah-a, haah-b, lr-gcd, trivial) or path to a spec file.
    pub spec: String,
    /// Torus side L, or n for cyclic groups.
    #[arg(long)]
    pub size: Option<usize>,
    /// lr-gcd parameters as n:a:b; `sweep` takes a comma-separated list.
    #[arg(long)]
    pub params: Option<String>,
    /// Accept matrices that do not commute, so the stabilizer checks can run.
    #[arg(long)]
    pub unchecked: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check that all stabilizer generators commute.
    Verify(SpecArgs),
    /// Rank and number of logical qubits.
    Degeneracy(SpecArgs),
    /// Logical counts over several sizes or parameter triples.
    Sweep {
        #[command(flatten)]
        spec: SpecArgs,
        /// Comma-separated sizes.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
    },
    /// Largest support radius under the metric derived from the spec.
    Locality(SpecArgs),
    /// Distance between two group elements under the derived metric.
    Metric {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Elements within a radius of a center.
    Ball {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        center: String,
        #[arg(long)]
        radius: u32,
    },
    /// Dense-state ground space dimension, compared with the rank result.
    Oracle(SpecArgs),
    /// List the stabilizer generators.
    Stabilizers(SpecArgs),
    /// Print the spec as a TOML spec file.
    Show(SpecArgs),
}

/// Output of one command: a metadata comment and a table.
struct Report {
    meta: String,
    header: Vec<&'static str>,
    rows: Vec<Vec<Value>>,
}

impl Report {
    fn new(meta: impl Into<String>, header: Vec<&'static str>) -> Self {
        Report { meta: meta.into(), header, rows: Vec::new() }
    }

    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Tsv => {
                let mut out = format!("# {}\n{}\n", self.meta, self.header.join("\t"));
                for row in &self.rows {
                    let cells: Vec<String> = row
                        .iter()
                        .map(|v| match v {
                            Value::String(s) => s.clone(),
                            Value::Null => "inf".to_string(),
                            other => other.to_string(),
                        })
                        .collect();
                    out.push_str(&cells.join("\t"));
                    out.push('\n');
                }
                out
            }
            OutputFormat::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|r| Value::Object(self.header.iter().map(|h| h.to_string()).zip(r.iter().cloned()).collect()))
                    .collect();
                let doc = json!({ "meta": self.meta, "columns": self.header, "rows": rows });
                serde_json::to_string_pretty(&doc).expect("json") + "\n"
            }
        }
    }
}

enum Failure {
    /// Verification failed or was refused; the report may still be printed.
    Check(String, Option<Report>),
    Usage(String),
}

impl From<SpecFileError> for Failure {
    fn from(e: SpecFileError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn load(args: &SpecArgs) -> Result<(SpecFile, Source), Failure> {
    if PRESET_NAMES.contains(&args.spec.as_str()) {
        let params = args.params.as_deref().map(parse_params).transpose()?;
        if params.is_some() && args.spec != "lr-gcd" {
            return Err(Failure::Usage("--params only applies to lr-gcd".into()));
        }
        return Ok((preset(&args.spec, args.size, params)?, Source::inline(&args.spec)));
    }
    let path = Path::new(&args.spec);
    if !path.exists() {
        return Err(Failure::Usage(format!("{}: not a preset ({}) and no such file", args.spec, PRESET_NAMES.join(", "))));
    }
    let (file, src) = SpecFile::load(path)?;
    let file = match args.size {
        Some(l) => file.with_size(l)?,
        None => file,
    };
    Ok((file, src))
}

fn build(args: &SpecArgs) -> Result<(SpecFile, AnySpec), Failure> {
    let (file, src) = load(args)?;
    let spec = if args.unchecked { file.build_unchecked(&src)? } else { file.build(&src)? };
    Ok((file, spec))
}

fn describe(args: &SpecArgs, spec: &AnySpec) -> String {
    let (q, d, mats) = match spec {
        AnySpec::Qubit(s) => (s.q(), 2, s.matrices().len()),
        AnySpec::Qudit(s) => (s.q(), s.modulus(), s.matrices().len()),
    };
    let mut out = format!("spec={} |G|={} q={q} d={d} matrices={mats}", args.spec, spec.group().order());
    if let Some(l) = args.size {
        out.push_str(&format!(" size={l}"));
    }
    if let Some(p) = &args.params {
        out.push_str(&format!(" params={p}"));
    }
    out
}

fn analysis_failure(e: AnalysisError, report: Option<Report>) -> Failure {
    Failure::Check(e.to_string(), report)
}

fn cmd_verify(args: &SpecArgs) -> Result<Report, Failure> {
    let (_, spec) = build(args)?;
    let set = spec.stabilizers();
    let r = verify_commutation(&set);
    let mut report = Report::new(describe(args, &spec), vec!["generators", "pairs_checked", "pairs_evaluated", "violations"]);
    report.rows.push(vec![json!(set.len()), json!(r.total_pairs), json!(r.evaluated_pairs), json!(r.violations.len())]);
    if let Some(v) = r.violations.first() {
        let g = set.generators();
        let msg = format!(
            "{} violations; first: {} and {} with symplectic product {}",
            r.violations.len(),
            g[v.first].label(set.group()),
            g[v.second].label(set.group()),
            v.value
        );
        return Err(Failure::Check(msg, Some(report)));
    }
    Ok(report)
}

fn degeneracy_header() -> Vec<&'static str> {
    vec!["n_qubits", "n_generators", "rank", "k", "d", "log2_degeneracy"]
}

fn cmd_degeneracy(args: &SpecArgs) -> Result<Report, Failure> {
    let (_, spec) = build(args)?;
    let res = spec.degeneracy().map_err(|e| analysis_failure(e, None))?;
    let mut report = Report::new(describe(args, &spec), degeneracy_header());
    report.rows.push(vec![
        json!(res.n_qubits),
        json!(res.n_generators),
        json!(res.rank),
        json!(res.k),
        json!(res.modulus),
        json!(format!("{:.6}", res.log2_degeneracy())),
    ]);
    Ok(report)
}

fn cmd_sweep(args: &SpecArgs, sizes: &[usize]) -> Result<Report, Failure> {
    if args.size.is_some() {
        return Err(Failure::Usage("sweep takes --sizes, not --size".into()));
    }
    let family = match args.spec.as_str() {
        "haah-a" if !sizes.is_empty() => SweepFamily::HaahA(sizes.to_vec()),
        "haah-b" if !sizes.is_empty() => SweepFamily::HaahB(sizes.to_vec()),
        "trivial" if !sizes.is_empty() => SweepFamily::Trivial(sizes.to_vec()),
        "lr-gcd" => {
            let Some(list) = &args.params else {
                return Err(Failure::Usage("lr-gcd sweeps need --params n:a:b,...".into()));
            };
            SweepFamily::LrGcd(list.split(',').map(parse_params).collect::<Result<_, _>>()?)
        }
        _ if sizes.is_empty() => return Err(Failure::Usage("sweep needs --sizes".into())),
        _ => {
            let (file, src) = load(args)?;
            let points = sizes
                .iter()
                .map(|&l| {
                    let file = file.clone();
                    let src = src.clone();
                    let unchecked = args.unchecked;
                    let f: SpecBuilder = Arc::new(move || {
                        let sized = file.clone().with_size(l).map_err(|e| e.to_string())?;
                        let built = if unchecked { sized.build_unchecked(&src) } else { sized.build(&src) };
                        built.map_err(|e| e.to_string())
                    });
                    (format!("L={l}"), f)
                })
                .collect();
            SweepFamily::Custom(points)
        }
    };
    let rows = degeneracy_sweep(&family);
    let mut header = vec!["params"];
    header.extend(degeneracy_header());
    header.push("error");
    let mut report = Report::new(format!("sweep spec={} points={}", args.spec, rows.len()), header);
    let mut failed = None;
    for row in rows {
        match row.result {
            Ok(r) => report.rows.push(vec![
                json!(row.label),
                json!(r.n_qubits),
                json!(r.n_generators),
                json!(r.rank),
                json!(r.k),
                json!(r.modulus),
                json!(format!("{:.6}", r.log2_degeneracy())),
                json!(""),
            ]),
            Err(e) => {
                failed.get_or_insert_with(|| format!("{}: {e}", row.label));
                let mut cells = vec![json!(row.label)];
                cells.extend(std::iter::repeat_n(json!("-"), 6));
                cells.push(json!(e));
                report.rows.push(cells);
            }
        }
    }
    match failed {
        Some(msg) => Err(Failure::Check(msg, Some(report))),
        None => Ok(report),
    }
}

fn locality(spec: &AnySpec) -> Result<LocalityReport, AnalysisError> {
    match spec {
        AnySpec::Qubit(s) => locality_check(s),
        AnySpec::Qudit(s) => qudit_locality_check(s),
    }
}

fn element_list(g: &crate::group::FiniteGroup, set: &crate::algebra::AlgebraElement) -> String {
    set.support().map(|i| g.name(i)).collect::<Vec<_>>().join(",")
}

fn cmd_locality(args: &SpecArgs) -> Result<Report, Failure> {
    let (_, spec) = build(args)?;
    let mut report = Report::new(describe(args, &spec), vec!["radius", "left_set", "right_set"]);
    match locality(&spec) {
        Ok(r) => {
            let g = spec.group();
            report.rows.push(vec![json!(r.radius), json!(element_list(g, r.metric.left())), json!(element_list(g, r.metric.right()))]);
            Ok(report)
        }
        Err(e) => {
            let g = spec.group();
            let m = spec.metric();
            report.rows.push(vec![Value::Null, json!(element_list(g, m.left())), json!(element_list(g, m.right()))]);
            Err(analysis_failure(e, Some(report)))
        }
    }
}

fn resolve(spec: &AnySpec, name: &str) -> Result<crate::group::GroupElement, Failure> {
    let g = spec.group();
    let i = g.resolve(name).map_err(|e| Failure::Usage(format!("{name:?}: {e}")))?;
    Ok(g.element(i).expect("resolved index"))
}

fn cmd_metric(args: &SpecArgs, from: &str, to: &str) -> Result<Report, Failure> {
    let (_, spec) = build(args)?;
    let (a, b) = (resolve(&spec, from)?, resolve(&spec, to)?);
    let d = word_metric(&spec.metric(), a, b).map_err(|e| Failure::Usage(e.to_string()))?;
    let g = spec.group();
    let mut report = Report::new(describe(args, &spec), vec!["from", "to", "distance"]);
    report.rows.push(vec![json!(g.name(a.index())), json!(g.name(b.index())), d.map_or(Value::Null, |d| json!(d))]);
    Ok(report)
}

fn cmd_ball(args: &SpecArgs, center: &str, radius: u32) -> Result<Report, Failure> {
    let (_, spec) = build(args)?;
    let c = resolve(&spec, center)?;
    let metric = spec.metric();
    let members = ball(&metric, c, radius).map_err(|e| Failure::Usage(e.to_string()))?;
    let dist = metric.distances_from(c.index());
    let g = spec.group();
    let mut report = Report::new(
        format!("{} center={} radius={radius} size={}", describe(args, &spec), g.name(c.index()), members.cardinality()),
        vec!["element", "distance"],
    );
    for i in members.support() {
        report.rows.push(vec![json!(g.name(i)), json!(dist[i])]);
    }
    Ok(report)
}

fn cmd_oracle(args: &SpecArgs) -> Result<Report, Failure> {
    let (_, spec) = build(args)?;
    let set = spec.stabilizers();
    let dense = ground_space_dim_dense(&set).map_err(|e| Failure::Check(e.to_string(), None))?;
    let res = spec.degeneracy().map_err(|e| analysis_failure(e, None))?;
    let from_rank = (res.modulus as u64).pow(res.k as u32);
    let mut report =
        Report::new(format!("{} cap_bits={}", describe(args, &spec), cap_bits()), vec!["n_qubits", "d", "dense_dim", "rank_dim", "agree"]);
    let agree = dense == from_rank;
    report.rows.push(vec![json!(set.n_qubits()), json!(res.modulus), json!(dense), json!(from_rank), json!(agree)]);
    if agree {
        Ok(report)
    } else {
        Err(Failure::Check(format!("dense dimension {dense} differs from d^k = {from_rank}"), Some(report)))
    }
}

fn cmd_stabilizers(args: &SpecArgs) -> Result<Report, Failure> {
    let (_, spec) = build(args)?;
    let set = spec.stabilizers();
    let g = set.group();
    let mut report = Report::new(describe(args, &spec), vec!["index", "label", "weight", "operator"]);
    for (i, gen) in set.generators().iter().enumerate() {
        report.rows.push(vec![json!(i), json!(gen.label(g)), json!(gen.op.weight()), json!(gen.op.to_string())]);
    }
    Ok(report)
}

/// Runs the CLI on `args` (including the program name), writing the result
/// table to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Degeneracy(a) => cmd_degeneracy(a),
        Command::Sweep { spec, sizes } => cmd_sweep(spec, sizes),
        Command::Locality(a) => cmd_locality(a),
        Command::Metric { spec, from, to } => cmd_metric(spec, from, to),
        Command::Ball { spec, center, radius } => cmd_ball(spec, center, *radius),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Stabilizers(a) => cmd_stabilizers(a),
        Command::Show(a) => {
            return match load(a) {
                Ok((file, _)) => {
                    let text = match cli.format {
                        OutputFormat::Tsv => file.to_toml(),
                        OutputFormat::Json => file.to_json() + "\n",
                    };
                    let _ = write!(out, "{text}");
                    0
                }
                Err(Failure::Usage(m)) | Err(Failure::Check(m, _)) => {
                    let _ = writeln!(err, "error: {m}");
                    2
                }
            };
        }
    };
    match result {
        Ok(report) => {
            let _ = write!(out, "{}", report.render(cli.format));
            0
        }
        Err(Failure::Check(msg, report)) => {
            if let Some(r) = report {
                let _ = write!(out, "{}", r.render(cli.format));
            }
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("xxz").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn verify_table() {
        let (code, out, _) = call(&["verify", "haah-a", "--size", "3"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert!(lines[0].starts_with('#'));
        assert_eq!(lines[1], "generators\tpairs_checked\tpairs_evaluated\tviolations");
        assert!(lines[2].starts_with("54\t1431\t"));
        assert!(lines[2].ends_with("\t0"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["verify", "no-such-preset"]).0, 2);
        assert_eq!(call(&["bogus"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
        assert_eq!(call(&["degeneracy", "haah-a", "--params", "1:2:3"]).0, 2);
        assert_eq!(call(&["oracle", "haah-a", "--size", "3"]).0, 1);
    }

    #[test]
    fn metric_and_ball() {
        let (code, out, _) = call(&["metric", "haah-a", "--size", "3", "--from", "xyz", "--to", "1"]);
        assert_eq!(code, 0);
        assert!(out.lines().nth(2).unwrap().ends_with("\t2"), "{out}");
        let (code, out, _) = call(&["ball", "haah-a", "--size", "3", "--center", "1", "--radius", "0"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 3);
    }

    #[test]
    fn sweeps() {
        let (code, out, _) = call(&["sweep", "haah-a", "--sizes", "2,4"]);
        assert_eq!(code, 0);
        let ks: Vec<&str> = out.lines().skip(2).map(|l| l.split('\t').nth(4).unwrap()).collect();
        assert_eq!(ks, vec!["6", "14"]);
        let (code, out, _) = call(&["sweep", "lr-gcd", "--params", "6:2:4,7:2:4"]);
        assert_eq!(code, 0);
        assert!(out.contains("n=6,a=2,b=4\t"));
        assert_eq!(call(&["sweep", "lr-gcd"]).0, 2);
    }

    #[test]
    fn json_output() {
        let (code, out, _) = call(&["--format", "json", "degeneracy", "haah-a", "--size", "2"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["rows"][0]["k"], json!(6));
    }
}
