mod report;

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use tough2k2::error::SolveError;
use tough2k2::generators::{enumerate_2k2_free, GenSpec};
use tough2k2::recognizers::{find_induced_2k2, toughness_exact, TOUGHNESS_BOUND};
use tough2k2::solver::{check_certificate, solve, to_dot, Certificate, Outcome};
use tough2k2::two_factor::find_two_factor;
use tough2k2::{Graph, Rational};

use report::{Record, RunReport};

/// Exit codes of `solve`; `sweep` reuses `ANOMALY` when an input verified
/// `t`-tough ends in an anomaly.
mod exit {
    pub const HAMILTONIAN: u8 = 0;
    pub const FAILURE: u8 = 1;
    pub const WITNESS: u8 = 10;
    pub const NO_TWO_FACTOR: u8 = 20;
    pub const ANOMALY: u8 = 30;
    pub const NOT_2K2_FREE: u8 = 40;
}

#[derive(Parser)]
#[command(version, about = "Certified Hamiltonicity for 2K2-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Print size, 2K2-freeness, exact toughness and 2-factor existence.
    Analyze { graph: PathBuf },
    /// Solve one graph and print its certificate.
    ///
    /// Exit status: 0 Hamiltonian, 10 toughness witness, 20 no 2-factor,
    /// 30 anomaly, 40 not 2K2-free.
    Solve {
        graph: PathBuf,
        /// Toughness threshold, `p/q` or an integer.
        #[arg(long, default_value = "3")]
        t: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Re-check a certificate against a graph; exit 0 if valid, 1 if not.
    Verify {
        graph: PathBuf,
        certificate: PathBuf,
    },
    /// Generate graphs from a spec given as JSON or as flags.
    Gen {
        /// GenSpec JSON, inline or as a file path.
        #[arg(long, conflicts_with = "family")]
        spec: Option<String>,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        clique: Option<usize>,
        #[arg(long)]
        independent: Option<usize>,
        #[arg(long)]
        density: Option<f64>,
        #[arg(long, value_delimiter = ',')]
        parts: Option<Vec<usize>>,
        #[arg(long)]
        seed: Option<u64>,
        /// Number of graphs, with consecutive seeds.
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Generate `count` graphs from a spec, solve each, and report.
    Sweep {
        /// GenSpec JSON, inline or as a file path.
        spec: String,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value = "3")]
        t: String,
        /// Overrides the spec's seed; input `i` uses seed + i.
        #[arg(long)]
        seed: Option<u64>,
        /// Largest n for which exact toughness is computed.
        #[arg(long, default_value_t = 20)]
        max_n: usize,
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List 2K2-free graphs up to isomorphism.
    Enumerate {
        /// A single order.
        #[arg(long, conflicts_with = "max_n")]
        n: Option<usize>,
        /// Every order from 1 up to this bound.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { graph } => analyze(&graph),
        Command::Solve { graph, t, format } => solve_cmd(&graph, &t, format),
        Command::Verify { graph, certificate } => verify(&graph, &certificate),
        Command::Gen {
            spec,
            family,
            n,
            clique,
            independent,
            density,
            parts,
            seed,
            count,
            out_dir,
        } => {
            let flags = GenFlags {
                family,
                n,
                clique,
                independent,
                density,
                parts,
                seed,
            };
            gen(spec.as_deref(), flags, count, out_dir.as_deref())
        }
        Command::Sweep {
            spec,
            count,
            t,
            seed,
            max_n,
            out_dir,
            format,
        } => sweep(&spec, count, &t, seed, max_n, out_dir.as_deref(), format),
        Command::Enumerate {
            n,
            max_n,
            out_dir,
            format,
        } => enumerate(n, max_n, out_dir.as_deref(), format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit::FAILURE)
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_threshold(t: &str) -> Result<Rational> {
    let r: Rational = t
        .trim()
        .parse()
        .map_err(|_| anyhow!("invalid threshold {t:?}; expected p/q"))?;
    if r <= Rational::from_integer(0.into()) {
        bail!("threshold must be positive");
    }
    Ok(r)
}

fn read_spec(spec: &str) -> Result<GenSpec> {
    let text = if Path::new(spec).is_file() {
        fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?
    } else {
        spec.to_string()
    };
    serde_json::from_str(&text).context("invalid GenSpec JSON")
}

/// Writes through a temporary file in the same directory, then renames.
fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let tmp = path.with_extension("tmp");
    let mut file = fs::File::create(&tmp).with_context(|| format!("creating {}", tmp.display()))?;
    file.write_all(contents.as_bytes())?;
    file.sync_all()?;
    fs::rename(&tmp, path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn analyze(path: &Path) -> Result<u8> {
    let g = read_graph(path)?;
    println!("n: {}; m: {}", g.n(), g.m());
    let free = match find_induced_2k2(&g) {
        None => "2K2-free: yes".to_string(),
        Some(w) => format!("2K2-free: no, witness {w}"),
    };
    let tough = match toughness_exact(&g) {
        Ok(r) => format!("toughness: {}", r.value),
        Err(_) => format!(
            "toughness: skipped (n = {} exceeds {TOUGHNESS_BOUND})",
            g.n()
        ),
    };
    let factor = format!("2-factor: {}", yes_no(find_two_factor(&g).is_some()));
    println!("{free}; {tough}; {factor}");
    Ok(0)
}

fn exit_code(cert: &Certificate) -> u8 {
    match cert.outcome {
        Outcome::HamiltonianCycle(_) => exit::HAMILTONIAN,
        Outcome::ToughnessWitness(_) => exit::WITNESS,
        Outcome::NoTwoFactor { .. } => exit::NO_TWO_FACTOR,
        Outcome::Anomaly(_) => exit::ANOMALY,
    }
}

fn solve_cmd(path: &Path, t: &str, format: Format) -> Result<u8> {
    let g = read_graph(path)?;
    let t = parse_threshold(t)?;
    let cert = match solve(&g, &t) {
        Ok(c) => c,
        Err(SolveError::Not2K2Free(w)) => {
            eprintln!("not 2K2-free: induced 2K2 {w}");
            return Ok(exit::NOT_2K2_FREE);
        }
        Err(e) => bail!(e),
    };
    match format {
        Format::Dot => print!("{}", to_dot(&g, &cert)),
        Format::Json | Format::Text => println!("{}", serde_json::to_string_pretty(&cert)?),
    }
    Ok(exit_code(&cert))
}

fn verify(graph: &Path, certificate: &Path) -> Result<u8> {
    let g = read_graph(graph)?;
    let text = fs::read_to_string(certificate)
        .with_context(|| format!("reading {}", certificate.display()))?;
    let cert: Certificate = match serde_json::from_str(&text) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("invalid certificate: {e}");
            return Ok(exit::FAILURE);
        }
    };
    match check_certificate(&g, &cert) {
        Ok(()) => {
            println!("valid {}", cert.variant());
            Ok(0)
        }
        Err(msg) => {
            eprintln!("invalid certificate: {msg}");
            Ok(exit::FAILURE)
        }
    }
}

struct GenFlags {
    family: Option<String>,
    n: Option<usize>,
    clique: Option<usize>,
    independent: Option<usize>,
    density: Option<f64>,
    parts: Option<Vec<usize>>,
    seed: Option<u64>,
}

impl GenFlags {
    fn to_spec(&self) -> Result<GenSpec> {
        let family = self
            .family
            .as_ref()
            .ok_or_else(|| anyhow!("either --spec or --family is required"))?;
        let mut obj = Map::new();
        obj.insert("family".into(), json!(family));
        obj.insert("seed".into(), json!(self.seed.unwrap_or(0)));
        if let Some(v) = self.n {
            obj.insert("n".into(), json!(v));
        }
        if let Some(v) = self.clique {
            obj.insert("clique".into(), json!(v));
        }
        if let Some(v) = self.independent {
            obj.insert("independent".into(), json!(v));
        }
        if let Some(v) = self.density {
            obj.insert("density".into(), json!(v));
        }
        if let Some(v) = &self.parts {
            obj.insert("parts".into(), json!(v));
        }
        serde_json::from_value(Value::Object(obj)).context("incomplete generator flags")
    }
}

fn family_name(spec: &GenSpec) -> String {
    serde_json::to_value(spec)
        .ok()
        .and_then(|v| v["family"].as_str().map(str::to_string))
        .unwrap_or_else(|| "graph".into())
}

fn gen(spec: Option<&str>, flags: GenFlags, count: u64, out_dir: Option<&Path>) -> Result<u8> {
    let mut spec = match spec {
        Some(s) => read_spec(s)?,
        None => flags.to_spec()?,
    };
    if let (Some(seed), true) = (flags.seed, flags.family.is_none()) {
        spec = spec.with_seed(seed);
    }
    if count > 1 && out_dir.is_none() {
        bail!("--count > 1 needs --out-dir");
    }
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir)?;
    }
    let name = family_name(&spec);
    for i in 0..count {
        let s = spec.with_seed(spec.seed + i);
        let g = s.generate()?;
        match out_dir {
            Some(dir) => write_atomic(&dir.join(format!("{name}-{}.graph", s.seed)), &g.to_text())?,
            None => print!("{}", g.to_text()),
        }
    }
    Ok(0)
}

fn sweep(
    spec: &str,
    count: u64,
    t: &str,
    seed: Option<u64>,
    max_n: usize,
    out_dir: Option<&Path>,
    format: Format,
) -> Result<u8> {
    let mut spec = read_spec(spec)?;
    if let Some(seed) = seed {
        spec = spec.with_seed(seed);
    }
    let t = parse_threshold(t)?;
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir)?;
    }
    let name = family_name(&spec);
    let results: Vec<Result<(Record, u128)>> = (0..count)
        .into_par_iter()
        .map(|i| {
            let s = spec.with_seed(spec.seed + i);
            let id = format!("{name}-{}", s.seed);
            let g = s.generate()?;
            let start = Instant::now();
            let cert = solve(&g, &t).map_err(|e| anyhow!("{id}: {e}"))?;
            let micros = start.elapsed().as_micros();
            if let Some(dir) = out_dir {
                write_atomic(&dir.join(format!("{id}.graph")), &g.to_text())?;
                write_atomic(
                    &dir.join(format!("{id}.json")),
                    &(serde_json::to_string_pretty(&cert)? + "\n"),
                )?;
            }
            Ok((Record::new(id, &g, &cert, &t, max_n), micros))
        })
        .collect();
    let mut records = Vec::with_capacity(results.len());
    let mut timings = Map::new();
    for r in results {
        let (record, micros) = r?;
        timings.insert(record.id.clone(), json!(micros));
        records.push(record);
    }
    let report = RunReport::new(&t, records);
    if let Some(dir) = out_dir {
        write_atomic(
            &dir.join("report.json"),
            &(serde_json::to_string_pretty(&report)? + "\n"),
        )?;
        write_atomic(
            &dir.join("timings.json"),
            &(serde_json::to_string_pretty(&Value::Object(timings))? + "\n"),
        )?;
    }
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Text | Format::Dot => print!("{}", report.table()),
    }
    if report.anomalies_on_t_tough > 0 {
        eprintln!(
            "WARNING: {} anomalies on inputs verified {}-tough",
            report.anomalies_on_t_tough, report.threshold
        );
        return Ok(exit::ANOMALY);
    }
    Ok(0)
}

fn enumerate(
    n: Option<usize>,
    max_n: Option<usize>,
    out_dir: Option<&Path>,
    format: Format,
) -> Result<u8> {
    let orders: Vec<usize> = match (n, max_n) {
        (Some(n), _) => vec![n],
        (None, Some(m)) => (1..=m).collect(),
        (None, None) => bail!("either --n or --max-n is required"),
    };
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir)?;
    }
    let mut summary = Vec::new();
    for n in orders {
        let graphs = enumerate_2k2_free(n)?;
        if let Some(dir) = out_dir {
            for (i, g) in graphs.iter().enumerate() {
                write_atomic(&dir.join(format!("n{n}-{i:04}.graph")), &g.to_text())?;
            }
        }
        match format {
            Format::Json => summary.push(json!({
                "n": n,
                "count": graphs.len(),
                "graphs": graphs.iter().map(|g| g.edges()).collect::<Vec<_>>(),
            })),
            Format::Text | Format::Dot => println!("n={n}: {} graphs", graphs.len()),
        }
    }
    if format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&summary)?);
    }
    Ok(0)
}
