#![allow(clippy::result_large_err)]

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use critical_curves::chain::{curve_count, decompose, Chain, ChainDecomposition};
use critical_curves::net::{net, Net};
use critical_curves::orbit::{code_orbit, CriticalPoint};
use critical_curves::point::{
    approach_sequence, pencil_table, point_report, ApproachSequence, PencilTable, PointReport,
};
use critical_curves::render::{self, RenderOptions};
use critical_curves::triple::{
    format_triple, normalize, triple_point_farey_status, triple_points, FareyStatus, TriplePointReport,
};
use critical_curves::verify::{self, Suite, VerifyReport};
use critical_curves::{Error, Rational, Word};

/// Critical curves of circle rotations: exact words, chains, pencils and triple points.
#[derive(Parser, Debug)]
#[command(name = "critcurves", version, allow_negative_numbers = true)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Code the orbit of a start point under x -> {x + theta}
    Word {
        theta: Rational,
        rho: Rational,
        #[arg(long, default_value = "0")]
        start: Rational,
        /// Number of letters; defaults to the denominator of theta
        #[arg(long)]
        len: Option<usize>,
    },
    /// Range and curve count of the chain rho = i theta - j
    Chain {
        #[arg(allow_negative_numbers = true)]
        i: i64,
        #[arg(allow_negative_numbers = true)]
        j: i64,
    },
    /// Farey points, boundary and critical words, and curves of a chain
    Decompose {
        #[arg(allow_negative_numbers = true)]
        i: i64,
        #[arg(allow_negative_numbers = true)]
        j: i64,
    },
    /// Dominant parameters and derived quantities at a critical point
    Point { theta: Rational, rho: Rational },
    /// Pencil chains, endpoints and words at a critical point
    Pencils {
        theta: Rational,
        rho: Rational,
        #[arg(long, default_value_t = 3)]
        depth: u64,
    },
    /// The two triple points of a critical point
    Triples {
        theta: Rational,
        rho: Rational,
        /// Also give coordinates with zeta at the origin, theta scaled by q^2 and rho by q
        #[arg(long)]
        normalize: bool,
    },
    /// All chains with |i| <= n
    Net { n: u64 },
    /// Critical points (p_k/q_k, (i p_k - j q_k)/q_k) approaching an irrational theta
    Approach {
        /// Continued-fraction coefficients, comma separated, e.g. 0,1,1,1
        #[arg(long, value_delimiter = ',', required = true)]
        cf: Vec<u64>,
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        #[arg(long, default_value_t = 12)]
        depth: usize,
    },
    /// Write figures and tables
    Render(RenderArgs),
    /// Check the constructions against brute-force oracles
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 12)]
        max_q: u64,
    },
}

#[derive(Args, Debug)]
struct RenderArgs {
    #[command(subcommand)]
    artifact: Artifact,
    /// Output file; .svg, .csv or .json. Without it SVG goes to stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Pixels per coordinate unit
    #[arg(long, global = true)]
    scale: Option<f64>,
}

#[derive(Subcommand, Debug)]
enum Artifact {
    Net {
        n: u64,
    },
    Decomposition {
        #[arg(allow_negative_numbers = true)]
        i: i64,
        #[arg(allow_negative_numbers = true)]
        j: i64,
    },
    Pencils {
        theta: Rational,
        rho: Rational,
        #[arg(long, default_value_t = 4)]
        depth: u64,
    },
    Triples {
        theta: Rational,
        rho: Rational,
        #[arg(long)]
        normalize: bool,
    },
}

/// Output of `triples`.
#[derive(Debug, Serialize, Deserialize)]
struct TriplesDoc {
    report: TriplePointReport,
    farey_status: Vec<FareyStatus>,
    normalized: Option<Vec<(Rational, Rational)>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct WordDoc {
    theta: Rational,
    rho: Rational,
    start: Rational,
    len: usize,
    word: Word,
}

#[derive(Debug, Serialize, Deserialize)]
struct ChainDoc {
    chain: Chain,
    order: u64,
    curves: u64,
}

enum Failure {
    Domain(Error),
    Io(String),
    Verification(VerifyReport),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn point(theta: Rational, rho: Rational) -> Result<CriticalPoint, Failure> {
    Ok(CriticalPoint::new(theta, rho)?)
}

fn emit<T: Serialize>(json: bool, doc: &T, human: impl FnOnce(&T) -> String) -> Result<String, Failure> {
    if json {
        serde_json::to_string_pretty(doc).map(|s| s + "\n").map_err(|e| Failure::Io(e.to_string()))
    } else {
        Ok(human(doc))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(report)) => {
            let _ = std::io::stdout().write_all(human_verify(&report).as_bytes());
            eprintln!("verification failed: {} of {} cases", report.failed(), report.failed() + report.passed());
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let json = cli.json;
    match cli.command {
        Command::Word { theta, rho, start, len } => {
            if !theta.in_unit_interval() {
                return Err(Error::OutOfUnitInterval { what: "theta", value: theta }.into());
            }
            let len = match len {
                Some(n) => n,
                None => usize::try_from(theta.denom()).map_err(|_| Error::Overflow(theta.denom().to_string()))?,
            };
            let word = code_orbit(&theta, &rho, &start, len)?;
            let doc = WordDoc { theta, rho, start, len, word };
            emit(json, &doc, |d| {
                if d.word.is_empty() {
                    "ε\n".to_string()
                } else {
                    format!("{} ({})\n", d.word.to_power_string(), d.word)
                }
            })
        }
        Command::Chain { i, j } => {
            let chain = Chain::new(i, j)?;
            let doc = ChainDoc { order: chain.order(), curves: curve_count(&chain)?, chain };
            emit(json, &doc, |d| {
                let sign = d.chain.sign().map(|s| s.to_string()).unwrap_or_else(|| "±".into());
                format!(
                    "{}: rho = {} theta - ({})\ntheta in [{}, {}], sign {}, order {}, {} curves\n",
                    d.chain, d.chain.i, d.chain.j, d.chain.theta_minus, d.chain.theta_plus, sign, d.order, d.curves
                )
            })
        }
        Command::Decompose { i, j } => {
            let d = decompose(&Chain::new(i, j)?)?;
            emit(json, &d, human_decomposition)
        }
        Command::Point { theta, rho } => {
            let rep = point_report(&point(theta, rho)?)?;
            emit(json, &rep, human_point)
        }
        Command::Pencils { theta, rho, depth } => {
            let table = pencil_table(&point(theta, rho)?, depth)?;
            emit(json, &table, human_pencils)
        }
        Command::Triples { theta, rho, normalize: norm } => {
            let zeta = point(theta, rho)?;
            let report = triple_points(&zeta)?;
            let farey_status = triple_point_farey_status(&zeta)?;
            let normalized =
                norm.then(|| report.points.iter().map(|p| normalize(&zeta, &p.theta, &p.rho)).collect::<Vec<_>>());
            let doc = TriplesDoc { report, farey_status, normalized };
            emit(json, &doc, human_triples)
        }
        Command::Net { n } => {
            let net = net(n)?;
            emit(json, &net, human_net)
        }
        Command::Approach { cf, i, depth } => {
            let seq = approach_sequence(&cf, i, depth)?;
            emit(json, &seq, human_approach)
        }
        Command::Render(args) => render_artifact(args),
        Command::Verify { suite, max_q } => {
            let report = verify::run(suite, max_q)?;
            if !report.ok() {
                return Err(Failure::Verification(report));
            }
            emit(json, &report, human_verify)
        }
    }
}

fn extension(path: &Option<PathBuf>) -> Result<&str, Failure> {
    match path {
        None => Ok("svg"),
        Some(p) => match p.extension().and_then(|e| e.to_str()) {
            Some(e @ ("svg" | "csv" | "json")) => Ok(e),
            _ => Err(Failure::Domain(Error::Domain(format!(
                "cannot tell the output format of {}; use .svg, .csv or .json",
                p.display()
            )))),
        },
    }
}

fn to_json<T: Serialize>(doc: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(doc).map(|s| s + "\n").map_err(|e| Failure::Io(e.to_string()))
}

fn no_csv(what: &str) -> Failure {
    Failure::Domain(Error::Domain(format!("{what} has no CSV form; use .svg or .json")))
}

fn render_artifact(args: RenderArgs) -> Result<String, Failure> {
    let opts = RenderOptions { scale: args.scale, ..RenderOptions::default() };
    let format = extension(&args.out)?;
    let body = match args.artifact {
        Artifact::Net { n } => {
            let net = net(n)?;
            match format {
                "svg" => render::net_svg(&net, &opts)?,
                "csv" => render::net_csv(&net)?,
                _ => to_json(&net)?,
            }
        }
        Artifact::Decomposition { i, j } => {
            let d = decompose(&Chain::new(i, j)?)?;
            match format {
                "svg" => render::decomposition_svg(&d, &opts)?,
                "csv" => render::decomposition_csv(&d),
                _ => to_json(&d)?,
            }
        }
        Artifact::Pencils { theta, rho, depth } => {
            let zeta = point(theta, rho)?;
            match format {
                "svg" => render::pencils_svg(&zeta, depth, &opts)?,
                "csv" => return Err(no_csv("a pencil figure")),
                _ => to_json(&pencil_table(&zeta, depth)?)?,
            }
        }
        Artifact::Triples { theta, rho, normalize } => {
            let report = triple_points(&point(theta, rho)?)?;
            match format {
                "svg" => render::triples_svg(&report, &RenderOptions { normalize, ..opts })?,
                "csv" => return Err(no_csv("a triple-point figure")),
                _ => to_json(&report)?,
            }
        }
    };
    match args.out {
        None => Ok(body),
        Some(path) => {
            write_file(&path, &body)?;
            Ok(format!("wrote {}\n", path.display()))
        }
    }
}

fn write_file(path: &Path, body: &str) -> Result<(), Failure> {
    fs::write(path, body).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn human_decomposition(d: &ChainDecomposition) -> String {
    let c = &d.chain;
    let mut out = format!(
        "{}: theta in [{}, {}], {} Farey points, {} curves\n\nFarey points\n",
        c,
        c.theta_minus,
        c.theta_plus,
        d.farey_points.len(),
        d.curves.len()
    );
    out += &format!("  {:<10} {:<10} {:<24} {}\n", "theta", "rho", "boundary word", "critical word");
    for fp in &d.farey_points {
        out += &format!(
            "  {:<10} {:<10} {:<24} {}\n",
            fp.theta.to_string(),
            fp.rho.to_string(),
            fp.boundary_word.to_power_string(),
            fp.critical_word.to_power_string()
        );
    }
    out += "\nCurves\n";
    for cv in &d.curves {
        out += &format!("  ({}, {})  {}\n", cv.theta_lo, cv.theta_hi, cv.word.to_power_string());
    }
    out
}

fn opt_point(p: &Option<CriticalPoint>) -> String {
    p.as_ref().map(|p| p.to_string()).unwrap_or_else(|| "none".into())
}

fn human_point(r: &PointReport) -> String {
    let mut out = format!("zeta = {}{}\n", r.zeta, if r.corner { " (corner)" } else { "" });
    if let Some(c) = &r.context {
        out += &format!(
            "n = {}, p' = {}, q' = {}, u = {}\ntau = {}, tau+ = {}, tau- = {}, t+ = {}, t- = {}\n",
            c.n, c.p_prime, c.q_prime, c.u, c.tau, c.tau_plus, c.tau_minus, c.t_plus, c.t_minus
        );
    }
    out += &format!(
        "dominant: + L({},{}), - L({},{})\nup: {}\ndown: {}\npencils: {}\n",
        r.dominant.plus.0,
        r.dominant.plus.1,
        r.dominant.minus.0,
        r.dominant.minus.1,
        opt_point(&r.up),
        opt_point(&r.down),
        r.pencils.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", ")
    );
    out
}

fn human_pencils(t: &PencilTable) -> String {
    let mut out = format!(
        "zeta = {}{}\nu+ = {}, u- = {}\n",
        t.zeta,
        if t.corner { " (corner)" } else { "" },
        t.u_plus.to_power_string(),
        t.u_minus.to_power_string()
    );
    out += &format!("  {:<4} {:<3} {:<12} {:<22} {}\n", "σ", "l", "chain", "endpoint", "word");
    for r in &t.rows {
        let end = r.endpoint.as_ref().map(|e| e.point.to_string()).unwrap_or_else(|| "-".into());
        out += &format!(
            "  {:<4} {:<3} {:<12} {:<22} {}\n",
            r.sigma.to_string(),
            r.ell,
            format!("L({},{})", r.chain.0, r.chain.1),
            end,
            r.word.to_power_string()
        );
    }
    out
}

fn human_triples(d: &TriplesDoc) -> String {
    let r = &d.report;
    let mut out = format!("zeta = {}, mu = {}, type {}\n", r.zeta, r.mu, r.triple_type);
    for (k, p) in r.points.iter().enumerate() {
        let kind = match p.chi_kind {
            critical_curves::triple::ChiKind::Chi1 => "chi1",
            critical_curves::triple::ChiKind::Chi2 => "chi2",
        };
        let sign = if p.psi_sign > 0 { "+1" } else { "-1" };
        let triples: Vec<String> = p.sign_triples.iter().map(|t| format_triple(*t)).collect();
        out += &format!("({}, {})  {kind}_{sign}  lines {}", p.theta, p.rho, triples.join(" "));
        if let Some(s) = d.farey_status.get(k) {
            out += &format!("  Farey point of {}/{} curves", s.farey_count, s.chains.len());
        }
        if let Some(n) = d.normalized.as_ref().and_then(|n| n.get(k)) {
            out += &format!("  normalized ({}, {})", n.0, n.1);
        }
        out.push('\n');
    }
    out += "determinants\n";
    for row in &r.determinant_table {
        let at = row.intersection.as_ref().map(|(t, p)| format!("({t}, {p})")).unwrap_or_else(|| "-".into());
        out += &format!("  {}  D = {:>3}  {}\n", format_triple(row.sign_triple), row.determinant, at);
    }
    out
}

fn human_net(n: &Net) -> String {
    let mut out = format!("N_{}: {} chains\n", n.order, n.chains.len());
    for c in &n.chains {
        out += &format!("{c}\n");
    }
    out
}

fn human_approach(s: &ApproachSequence) -> String {
    let mut out = format!("theta = {} (from coefficients), i = {}, j = {}\n", s.target, s.i, s.j);
    for st in &s.steps {
        let flag = if !st.valid {
            "invalid"
        } else if st.dominant {
            "dominant"
        } else {
            "-"
        };
        out += &format!("  k = {:<3} ({}, {})  {}\n", st.k, st.theta, st.rho, flag);
    }
    out
}

fn human_verify(r: &VerifyReport) -> String {
    let mut out = String::new();
    for c in &r.checks {
        out += &format!(
            "{} {:<7} {:<34} {:>7} passed {:>5} failed {:>6} ms\n",
            if c.ok() { "ok  " } else { "FAIL" },
            c.suite.to_string(),
            c.name,
            c.passed,
            c.failed,
            c.millis
        );
        for f in &c.failures {
            out += &format!("       {f}\n");
        }
    }
    out += &format!("total: {} passed, {} failed (max q = {})\n", r.passed(), r.failed(), r.max_q);
    out
}
