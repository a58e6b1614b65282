use std::cmp::Ordering;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bac_core::bounds::{r_sigma, sumsw_bound, theorem1_bound, validate_lemma_sw};
use bac_core::codebook::{
    is_zero_error_pair, is_zero_error_system, max_k_shattered, Codebook, CoordSet, PairVerdict,
};
use bac_core::pipeline::{
    build_system, exhaustive_max_pair_with, proposition1_bound, weldon_bound, SearchOptions,
};
use bac_core::sps::{shift_to_monotone, soft_sps_bound, SoftSpsParams};
use bac_core::text;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bac", version, about = "Zero-error bounds and codebook tools for the binary adder channel")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate outer bounds
    #[command(subcommand)]
    Bound(BoundCmd),
    /// Check that codebooks form a zero-error pair or system
    Verify {
        /// File holding systems separated by `===`, pairs as `---`-separated codebooks
        #[arg(long, conflicts_with = "files")]
        system: Option<PathBuf>,
        /// Two codebook files, or one file with a `---` separator
        #[arg(num_args = 1..=2, required_unless_present = "system")]
        files: Vec<PathBuf>,
    },
    /// Shattering, soft-SPS and shifting analyses of a codebook or family file
    #[command(subcommand)]
    Analyze(AnalyzeCmd),
    /// Exhaustive search for the largest |C1||C2| over zero-error pairs
    Search {
        #[arg(long)]
        n: usize,
        /// Merge witnesses that differ by a coordinate permutation
        #[arg(long)]
        canonical: bool,
        /// Node limit for n = 5, 6
        #[arg(long, default_value_t = SearchOptions::default().node_budget)]
        budget: u64,
    },
    /// Randomized numerical checks
    #[command(subcommand)]
    Validate(ValidateCmd),
    /// Build a zero-error system from a zero-error pair and a shattered set
    Construct {
        /// Comma-separated 1-based coordinates; empty for the empty set
        #[arg(long, allow_hyphen_values = false)]
        s: String,
        /// Two codebook files, or one file with a `---` separator
        #[arg(num_args = 1..=2, required = true)]
        files: Vec<PathBuf>,
    },
}

#[derive(Subcommand)]
enum BoundCmd {
    /// Upper bound on R2 for a given R1
    Theorem1 {
        #[arg(long)]
        r1: f64,
    },
    /// CSV of the bound against the Shannon line on an R1 grid
    Curve {
        #[arg(long)]
        r1_min: f64,
        #[arg(long)]
        r1_max: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sum-rate bound with common-message rate r0
    Sumsw {
        #[arg(long)]
        r0: f64,
    },
    /// Sum-rate bound for a system with rates r0, r1
    Rsigma {
        #[arg(long)]
        r0: f64,
        #[arg(long)]
        r1: f64,
    },
    /// (1 - R1) log2 3, for systematic C1
    Weldon {
        #[arg(long)]
        r1: f64,
    },
    /// (1 - h^{-1}(R1)) log2 3
    Prop1 {
        #[arg(long)]
        r1: f64,
    },
}

#[derive(Subcommand)]
enum AnalyzeCmd {
    /// Largest k-shattered coordinate set
    Vcdim {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Compare the family size with the soft Sauer-Perles-Shelah bound
    Sps {
        file: PathBuf,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
    },
    /// Shift the family to a monotone one
    Shift {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ValidateCmd {
    /// Sample distributions and check the sum-rate inequality for systems
    LemmaSw {
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Result of a successful run: the text to print and whether the checked
/// property held.
struct Report {
    text: String,
    holds: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Self { text, holds: true }
    }
}

type Run = Result<Report, String>;

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn in_file<T>(path: &Path, r: bac_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| format!("{}: {e}", path.display()))
}

fn read_pair(files: &[PathBuf]) -> Result<(Codebook, Codebook), String> {
    match files {
        [one] => in_file(one, text::parse_pair(&read(one)?)),
        [a, b] => {
            let c1 = in_file(a, text::parse_codebook(&read(a)?))?;
            let c2 = in_file(b, text::parse_codebook(&read(b)?))?;
            if c1.n() != c2.n() {
                return Err(format!("codeword lengths differ: {} and {}", c1.n(), c2.n()));
            }
            Ok((c1, c2))
        }
        _ => Err("expected one or two codebook files".into()),
    }
}

fn write_or_print(out: Option<&Path>, body: String) -> Run {
    match out {
        Some(path) => {
            fs::write(path, body).map_err(|e| format!("{}: {e}", path.display()))?;
            Ok(Report::ok(String::new()))
        }
        None => Ok(Report::ok(body)),
    }
}

fn lib<T>(r: bac_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn run_bound(cmd: BoundCmd) -> Run {
    let mut out = String::new();
    match cmd {
        BoundCmd::Theorem1 { r1 } => {
            let b = lib(theorem1_bound(r1))?;
            let _ = writeln!(out, "value: {:.6}", b.value());
            let _ = writeln!(out, "alpha_star: {:.6}", b.alpha().unwrap_or(0.0));
            let _ = writeln!(out, "eta_star: {:.6}", b.eta());
            let _ = writeln!(out, "shannon: {:.6}", 1.5 - r1);
        }
        BoundCmd::Curve {
            r1_min,
            r1_max,
            steps,
            out: path,
        } => {
            if steps == 0 || r1_min.partial_cmp(&r1_max) != Some(Ordering::Less) {
                return Err("need --steps >= 1 and --r1-min < --r1-max".into());
            }
            out.push_str("r1,shannon,new_bound,alpha_star,eta_star\n");
            for i in 0..=steps {
                let r1 = if i == steps {
                    r1_max
                } else {
                    r1_min + (r1_max - r1_min) * i as f64 / steps as f64
                };
                let b = lib(theorem1_bound(r1))?;
                let _ = writeln!(
                    out,
                    "{r1:.9},{:.9},{:.9},{:.9},{:.9}",
                    1.5 - r1,
                    b.value(),
                    b.alpha().unwrap_or(0.0),
                    b.eta()
                );
            }
            return write_or_print(path.as_deref(), out);
        }
        BoundCmd::Sumsw { r0 } => {
            let b = lib(sumsw_bound(r0))?;
            let _ = writeln!(out, "value: {:.6}", b.value());
            let _ = writeln!(out, "eta_star: {:.6}", b.eta());
        }
        BoundCmd::Rsigma { r0, r1 } => {
            let b = lib(r_sigma(r0, r1))?;
            let _ = writeln!(out, "value: {:.6}", b.value());
            let _ = writeln!(out, "eta_star: {:.6}", b.eta());
        }
        BoundCmd::Weldon { r1 } => {
            let _ = writeln!(out, "value: {:.6}", lib(weldon_bound(r1))?);
        }
        BoundCmd::Prop1 { r1 } => {
            let _ = writeln!(out, "value: {:.6}", lib(proposition1_bound(r1))?);
        }
    }
    Ok(Report::ok(out))
}

fn run_verify(system: Option<PathBuf>, files: Vec<PathBuf>) -> Run {
    let mut out = String::new();
    if let Some(path) = system {
        let systems = in_file(&path, text::parse_systems(&read(&path)?))?;
        let mut holds = true;
        for (i, v) in systems.iter().enumerate() {
            let verdict = is_zero_error_system(v);
            holds &= verdict.is_zero_error();
            if systems.len() > 1 {
                let _ = write!(out, "system {i}: ");
            }
            let _ = writeln!(out, "{verdict}");
        }
        return Ok(Report { text: out, holds });
    }
    let (c1, c2) = read_pair(&files)?;
    match lib(is_zero_error_pair(&c1, &c2))? {
        PairVerdict::ZeroError => {
            out.push_str("ZERO-ERROR\n");
            let _ = writeln!(out, "n = {}, |C1| = {}, |C2| = {}", c1.n(), c1.len(), c2.len());
            if c1.n() > 0 {
                let _ = writeln!(out, "R1 = {:.5}, R2 = {:.5}", c1.rate(), c2.rate());
                let _ = writeln!(out, "sum-rate = {:.5}", c1.rate() + c2.rate());
            }
            Ok(Report::ok(out))
        }
        PairVerdict::Collision(c) => {
            let _ = writeln!(out, "COLLISION");
            let _ = writeln!(out, "witness: {c}");
            Ok(Report { text: out, holds: false })
        }
    }
}

fn run_analyze(cmd: AnalyzeCmd) -> Run {
    let mut out = String::new();
    match cmd {
        AnalyzeCmd::Vcdim { file, k } => {
            let c = in_file(&file, text::parse_codebook(&read(&file)?))?;
            let s = lib(max_k_shattered(&c, k))?;
            let _ = writeln!(out, "k: {k}");
            let _ = writeln!(out, "max_shattered: {}", s.size);
            let _ = writeln!(out, "witness: {}", s.witness);
        }
        AnalyzeCmd::Sps { file, d, k } => {
            let f = in_file(&file, text::parse_family(&read(&file)?))?;
            let params = lib(SoftSpsParams::new(f.n(), d, k))?;
            let r = soft_sps_bound(&params);
            let _ = writeln!(out, "size: {}", f.len());
            let _ = writeln!(out, "t_star: {}", r.t_star);
            let _ = writeln!(out, "bound: {}", r.bound);
            let _ = writeln!(out, "bound_floor: {}", r.floor());
            let pass = r.admits(f.len());
            let _ = writeln!(out, "verdict: {}", if pass { "PASS" } else { "FAIL" });
            return Ok(Report { text: out, holds: pass });
        }
        AnalyzeCmd::Shift { file, out: path } => {
            let f = in_file(&file, text::parse_family(&read(&file)?))?;
            let shifted = shift_to_monotone(&f);
            return write_or_print(path.as_deref(), text::format_family(&shifted));
        }
    }
    Ok(Report::ok(out))
}

fn parse_coords(s: &str) -> Result<CoordSet, String> {
    let indices = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| format!("invalid coordinate {t:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    lib(CoordSet::new(indices))
}

fn run(cli: Cli) -> Run {
    match cli.command {
        Command::Bound(cmd) => run_bound(cmd),
        Command::Verify { system, files } => run_verify(system, files),
        Command::Analyze(cmd) => run_analyze(cmd),
        Command::Search { n, canonical, budget } => {
            let options = SearchOptions {
                canonical,
                node_budget: budget,
            };
            let r = lib(exhaustive_max_pair_with(n, options))?;
            Ok(Report::ok(text::format_search(&r)))
        }
        Command::Validate(ValidateCmd::LemmaSw { trials, seed }) => {
            let grid: Vec<f64> = (0..=10).map(|i| i as f64 * 0.05).collect();
            let r = lib(validate_lemma_sw(trials, &grid, seed))?;
            let mut out = String::new();
            let _ = writeln!(out, "trials: {}", r.trials);
            let _ = writeln!(out, "checks: {}", r.checks);
            let _ = writeln!(out, "full evaluations: {}", r.full_evaluations);
            let _ = writeln!(out, "max slack: {:.3e}", r.max_slack);
            let _ = writeln!(out, "violations: {}", r.violations.len());
            for v in &r.violations {
                let _ = writeln!(
                    out,
                    "violation: trial {} r0 {:.2} r1 {:.6} sum {:.9} bound {:.9}",
                    v.trial, v.r0, v.r1, v.sum, v.bound
                );
            }
            let holds = r.violations.is_empty();
            Ok(Report { text: out, holds })
        }
        Command::Construct { s, files } => {
            let s = parse_coords(&s)?;
            let (c1, c2) = read_pair(&files)?;
            let r = lib(build_system(&c1, &c2, &s))?;
            Ok(Report {
                text: text::format_report(&r),
                holds: r.verdict.is_zero_error(),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(report) => {
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = io::stdout().lock().write_all(report.text.as_bytes());
            if report.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
