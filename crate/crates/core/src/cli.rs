//! Command-line front end.
//!
//! Exit status: 0 success, 1 usage error, 2 input parse error, 3 hypothesis
//! violation (disconnected input, no edges, ...), 4 verification failure.

use std::ffi::OsString;
use std::fs;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::generators::{enumerate_connected, generate, FamilySpec, MAX_ENUMERATION_ORDER};
use crate::graph::Graph;
use crate::indices::{
    dd_mycielskian_closed, index_report, randic_bounds, round_sig12, IndexReport, RandicBounds,
};
use crate::transform::mycielskian;
use crate::verify::{verify_corpus, ClaimId};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;
pub const EXIT_VERIFY_FAILED: i32 = 4;

/// Spacing between per-trial seeds of `--gnp ... --trials k`.
const TRIAL_SEED_STRIDE: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Parser)]
#[command(
    name = "mycielski",
    version,
    about = "Mycielskian construction and topological indices"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the index report of a graph, with Mycielskian bounds and closed forms.
    Compute {
        #[command(flatten)]
        input: SingleInput,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write the Mycielskian of a graph.
    Mycielskian {
        #[command(flatten)]
        input: SingleInput,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check claims over a corpus and print a JSON report.
    Verify(VerifyArgs),
    /// Stream every labeled connected graph of a given order.
    Enumerate {
        #[arg(long = "enumerate", value_name = "N")]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SingleInput {
    /// Edge-list file.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Family spec such as `cycle:5`, `kbipartite:2,3` or `gnp:12,0.4,42`.
    #[arg(long)]
    pub family: Option<FamilySpec>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated claim ids; all claims when omitted.
    #[arg(long, value_delimiter = ',')]
    pub claims: Vec<ClaimId>,
    /// Include every labeled connected graph of order 2..=N.
    #[arg(long = "enumerate", value_name = "N")]
    pub enumerate: Option<usize>,
    /// Random connected graphs `n,p,seed`.
    #[arg(long, value_name = "N,P,SEED")]
    pub gnp: Option<String>,
    /// Number of `--gnp` graphs.
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
    #[arg(long)]
    pub family: Vec<FamilySpec>,
    #[arg(long)]
    pub input: Vec<PathBuf>,
    /// Also evaluate the degree-distance closed form off diameter two.
    #[arg(long)]
    pub relax_diameter: bool,
    /// Include `elapsed_ms` per claim (makes output run-dependent).
    #[arg(long)]
    pub timings: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Edgelist,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Parse(String),
    Hypothesis(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn hypothesis(e: Error) -> Failure {
    Failure::Hypothesis(e.to_string())
}

fn read_graph(path: &PathBuf) -> Result<Graph, Failure> {
    let file =
        fs::File::open(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    Graph::read_edge_list(BufReader::new(file))
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn load(input: &SingleInput) -> Result<Graph, Failure> {
    match (&input.input, &input.family) {
        (Some(path), None) => read_graph(path),
        (None, Some(spec)) => generate(spec).map_err(|e| Failure::Usage(e.to_string())),
        _ => Err(Failure::Usage(
            "exactly one of --input or --family is required".into(),
        )),
    }
}

fn reject_format(cmd: &str, format: Format) -> Failure {
    Failure::Usage(format!("--format {format:?} is not supported by `{cmd}`").to_lowercase())
}

#[derive(Serialize)]
struct ComputeOutput {
    #[serde(flatten)]
    report: IndexReport,
    randic_bounds: RandicBounds,
    dd_mycielskian_closed: Option<u64>,
}

fn compute(input: &SingleInput, format: Format) -> Result<String, Failure> {
    let g = load(input)?;
    let report = index_report(&g).map_err(hypothesis)?;
    let bounds = randic_bounds(&g).map_err(hypothesis)?;
    let closed = match dd_mycielskian_closed(&g) {
        Ok(v) => Some(v),
        Err(Error::DiameterNotTwo(_)) => None,
        Err(e) => return Err(hypothesis(e)),
    };
    match format {
        Format::Json => {
            let out = ComputeOutput {
                report,
                randic_bounds: bounds,
                dd_mycielskian_closed: closed,
            };
            Ok(serde_json::to_string_pretty(&out).expect("serializable") + "\n")
        }
        Format::Csv => Ok(format!(
            "{},randic_lower,randic_upper,is_regular,dd_mycielskian_closed\n{},{},{},{},{}\n",
            IndexReport::CSV_HEADER,
            report.to_csv_row(),
            round_sig12(bounds.lower),
            round_sig12(bounds.upper),
            bounds.is_regular,
            closed.map(|v| v.to_string()).unwrap_or_default()
        )),
        Format::Edgelist => Err(reject_format("compute", format)),
    }
}

#[derive(Serialize)]
struct MycielskianOutput<'a> {
    n: usize,
    m: usize,
    edges: &'a [(usize, usize)],
    roles: Roles,
}

#[derive(Serialize)]
struct Roles {
    original: [usize; 2],
    shadow: [usize; 2],
    root: usize,
}

fn emit_mycielskian(input: &SingleInput, format: Format) -> Result<String, Failure> {
    let g = load(input)?;
    let layout = mycielskian(&g).map_err(hypothesis)?;
    let n = layout.base_n();
    let mu = layout.mu();
    match format {
        Format::Edgelist => Ok(format!(
            "# roles: original 0..{}, shadow {}..{}, root {}\n{}",
            n - 1,
            n,
            2 * n - 1,
            2 * n,
            mu.to_edge_list()
        )),
        Format::Json => {
            let out = MycielskianOutput {
                n: mu.n(),
                m: mu.m(),
                edges: mu.edges(),
                roles: Roles {
                    original: [0, n - 1],
                    shadow: [n, 2 * n - 1],
                    root: 2 * n,
                },
            };
            Ok(serde_json::to_string(&out).expect("serializable") + "\n")
        }
        Format::Csv => Err(reject_format("mycielskian", format)),
    }
}

fn check_order(n: usize) -> Result<(), Failure> {
    if !(2..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Failure::Usage(format!(
            "--enumerate needs 2 <= N <= {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    Ok(())
}

fn verify(args: &VerifyArgs) -> Result<(String, bool), Failure> {
    if args.format != Format::Json {
        return Err(reject_format("verify", args.format));
    }
    let mut corpus = Vec::new();
    if let Some(max) = args.enumerate {
        check_order(max)?;
        for n in 2..=max {
            corpus.extend(enumerate_connected(n).expect("order checked"));
        }
    }
    if let Some(gnp) = &args.gnp {
        let spec: FamilySpec = format!("gnp:{gnp}")
            .parse()
            .map_err(|e: Error| Failure::Usage(e.to_string()))?;
        let FamilySpec::Gnp { n, p, seed } = spec else {
            unreachable!()
        };
        for trial in 0..args.trials as u64 {
            let trial_seed = seed.wrapping_add(trial.wrapping_mul(TRIAL_SEED_STRIDE));
            corpus.push(
                generate(&FamilySpec::Gnp {
                    n,
                    p,
                    seed: trial_seed,
                })
                .expect("validated"),
            );
        }
    }
    for spec in &args.family {
        corpus.push(generate(spec).map_err(|e| Failure::Usage(e.to_string()))?);
    }
    for path in &args.input {
        corpus.push(read_graph(path)?);
    }
    if corpus.is_empty() {
        return Err(Failure::Usage(
            "verify needs a corpus: --enumerate, --gnp, --family or --input".into(),
        ));
    }
    let claims = if args.claims.is_empty() {
        ClaimId::ALL.to_vec()
    } else {
        args.claims.clone()
    };
    let mut outcomes = verify_corpus(&claims, corpus, args.relax_diameter);
    if !args.timings {
        for o in &mut outcomes {
            o.elapsed = None;
        }
    }
    let passed = outcomes.iter().all(|o| o.passed());
    let lines: Vec<String> = outcomes
        .iter()
        .map(|o| serde_json::to_string(o).expect("serializable"))
        .collect();
    Ok((format!("[\n{}\n]\n", lines.join(",\n")), passed))
}

fn enumerate(order: usize, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    check_order(order)?;
    if format == Format::Csv {
        return Err(reject_format("enumerate", format));
    }
    for (i, g) in enumerate_connected(order)
        .expect("order checked")
        .enumerate()
    {
        match format {
            Format::Edgelist => {
                if i > 0 {
                    out.write_all(b"\n")?;
                }
                out.write_all(g.to_edge_list().as_bytes())?;
            }
            _ => writeln!(out, "{}", serde_json::to_string(&g).expect("serializable"))?,
        }
    }
    Ok(())
}

fn with_output(
    path: &Option<PathBuf>,
    stdout: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> Result<(), Failure>,
) -> Result<(), Failure> {
    match path {
        Some(p) => {
            let mut file = io::BufWriter::new(fs::File::create(p)?);
            body(&mut file)?;
            file.flush()?;
            Ok(())
        }
        None => body(stdout),
    }
}

fn dispatch(config: &CliConfig, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match &config.command {
        Command::Compute {
            input,
            format,
            output,
        } => {
            let text = compute(input, *format)?;
            with_output(output, stdout, |w| Ok(w.write_all(text.as_bytes())?))?;
        }
        Command::Mycielskian {
            input,
            format,
            output,
        } => {
            let text = emit_mycielskian(input, *format)?;
            with_output(output, stdout, |w| Ok(w.write_all(text.as_bytes())?))?;
        }
        Command::Verify(args) => {
            let (text, passed) = verify(args)?;
            with_output(&args.output, stdout, |w| Ok(w.write_all(text.as_bytes())?))?;
            if !passed {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        Command::Enumerate {
            order,
            format,
            output,
        } => {
            with_output(output, stdout, |w| enumerate(*order, *format, w))?;
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = write!(stderr, "{}", e.render());
            return code;
        }
    };
    match dispatch(&config, stdout) {
        Ok(code) => code,
        Err(failure) => {
            let (code, msg) = match failure {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Parse(m) => (EXIT_PARSE, m),
                Failure::Hypothesis(m) => (EXIT_HYPOTHESIS, m),
                Failure::Io(e) => (EXIT_USAGE, e.to_string()),
            };
            let _ = writeln!(stderr, "error: {msg}");
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("mycielski").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn compute_cycle5() {
        let (code, out, _) = run_capture(&["compute", "--family", "cycle:5", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["degree_distance"], 60);
        assert_eq!(v["randic"], 2.5);
        assert_eq!(v["dd_mycielskian_closed"], 650);
        assert_eq!(v["randic_bounds"]["is_regular"], true);
    }

    #[test]
    fn compute_off_diameter_two_has_no_closed_form() {
        let (code, out, _) = run_capture(&["compute", "--family", "path:5", "--format", "csv"]);
        assert_eq!(code, 0);
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("n,m,diameter,wiener,zagreb_m1,randic,degree_distance"));
        assert!(lines[1].starts_with("5,4,4,20,"));
        assert!(lines[1].ends_with(','));
    }

    #[test]
    fn mycielskian_of_k2() {
        let (code, out, _) = run_capture(&["mycielskian", "--family", "complete:2"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "# roles: original 0..1, shadow 2..3, root 4\n5 5\n0 1\n0 3\n1 2\n2 4\n3 4\n"
        );
        let g = Graph::parse_edge_list(&out).unwrap();
        assert!(g.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_capture(&["compute"]).0, EXIT_USAGE);
        assert_eq!(
            run_capture(&["compute", "--family", "wheel:4"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_capture(&["compute", "--family", "cycle:5", "--format", "edgelist"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_capture(&["enumerate", "--enumerate", "7"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_capture(&["verify"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);

        let dir = tempfile::tempdir().unwrap();
        let bad = dir.path().join("bad.txt");
        fs::write(&bad, "3 2\n0 1\n").unwrap();
        assert_eq!(
            run_capture(&["compute", "--input", bad.to_str().unwrap()]).0,
            EXIT_PARSE
        );
        let split = dir.path().join("split.txt");
        fs::write(&split, "4 2\n0 1\n2 3\n").unwrap();
        let (code, _, err) = run_capture(&["compute", "--input", split.to_str().unwrap()]);
        assert_eq!(code, EXIT_HYPOTHESIS);
        assert!(err.contains("disconnected"));
        let lone = dir.path().join("lone.txt");
        fs::write(&lone, "1 0\n").unwrap();
        assert_eq!(
            run_capture(&["mycielskian", "--input", lone.to_str().unwrap()]).0,
            EXIT_HYPOTHESIS
        );
    }

    #[test]
    fn verify_exhaustive_small() {
        let (code, out, _) =
            run_capture(&["verify", "--claims", "thm_dd,obs2", "--enumerate", "4"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v[0]["claim"], "obs2");
        assert_eq!(v[0]["checked"], 1 + 4 + 38);
        assert_eq!(v[1]["claim"], "thm_dd");
        assert!(v[1].get("elapsed_ms").is_none());
    }

    #[test]
    fn relaxed_verify_fails_with_status_four() {
        // P5 has diameter 4, outside the closed form's hypothesis.
        let (code, out, _) = run_capture(&[
            "verify",
            "--claims",
            "thm_dd",
            "--family",
            "path:5",
            "--relax-diameter",
        ]);
        assert_eq!(code, EXIT_VERIFY_FAILED);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v[0]["relaxed"], true);
        assert_eq!(v[0]["failures"][0]["note"], "diameter 4");
    }

    #[test]
    fn enumerate_streams() {
        let (code, out, _) = run_capture(&["enumerate", "--enumerate", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out.split("\n\n").count(), 4);
        let (code, out, _) = run_capture(&["enumerate", "--enumerate", "4", "--format", "json"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 38);
    }

    #[test]
    fn output_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("mu.txt");
        let (code, out, _) = run_capture(&[
            "mycielskian",
            "--family",
            "cycle:4",
            "--output",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        assert!(out.is_empty());
        let g = Graph::parse_edge_list(&fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!((g.n(), g.m()), (9, 16));
    }
}
