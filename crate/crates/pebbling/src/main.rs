//! `pebble`: exact pebbling computations on rectangular grids.
//!
//! Exit codes: 0 success / affirmative, 1 domain-negative (unreachable,
//! unsolvable), 2 input error, 3 refutation, 4 resource cap.

use clap::{Parser, Subcommand};
use pebbling::dist::Distribution;
use pebbling::engine::{is_k_reachable, is_solvable, reach_count, MoveRule};
use pebbling::grid::{GridDims, Vertex};
use pebbling::io::{format_ascii, load_distribution, DistributionFile};
use pebbling::lemmas::{self, SamplePolicy};
use pebbling::potential::ValueMap;
use pebbling::rat::{approx, fmt_rat};
use pebbling::regions::{decompose, normalize, region_frontier};
use pebbling::report::{build_certificate, verify_certificate, CertificateReport};
use pebbling::search::{optimal_pebbling_number, SearchConfig, SearchError};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_REFUTED: u8 = 3;
const EXIT_CAP: u8 = 4;

#[derive(Parser)]
#[command(name = "pebble", version, about = "Exact pebbling on rectangular grids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether k pebbles can be moved onto a target vertex.
    Reach {
        /// Distribution file (JSON or ASCII grid), "-" for stdin.
        file: String,
        /// Target vertex as ROW,COL (0-based).
        #[arg(long)]
        target: String,
        /// Number of pebbles to place on the target.
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// Pebbles removed per move.
        #[arg(long, default_value_t = 2)]
        arity: u32,
    },
    /// Decompose a distribution into regions of reachability.
    Regions {
        file: String,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Print the value of every vertex under the distribution.
    Values {
        file: String,
        /// Render an ASCII table of approximate values.
        #[arg(long)]
        ascii_heatmap: bool,
    },
    /// Emit (or verify) the full certificate report for a distribution.
    Certificate {
        file: String,
        /// Verify a previously stored report instead of emitting one.
        #[arg(long, value_name = "REPORT")]
        verify: Option<String>,
    },
    /// Run the lemma suite and print the reports as JSON.
    Lemmas {
        /// Also sweep all small distributions on this grid (e.g. 3x3).
        #[arg(long, value_name = "MxN")]
        sweep: Option<String>,
        /// Largest total for the sweep / conjecture scan.
        #[arg(long, default_value_t = 6)]
        max_total: u32,
        /// Scan for counterexamples to the interior-value conjecture.
        #[arg(long, value_name = "MxN")]
        conjecture: Option<String>,
        /// Seed for sampled sweeps; fixed default for determinism.
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Compute the optimal (k-)pebbling number of a grid.
    Pi {
        /// Grid dimensions, e.g. 2x3.
        dims: String,
        #[arg(long, default_value_t = 2)]
        arity: u32,
        /// Largest total to try before giving up.
        #[arg(long, default_value_t = 64)]
        cap: u64,
        /// Enumerate all distributions instead of canonical forms.
        #[arg(long)]
        no_symmetry: bool,
    },
    /// Move stray leftover pebbles into regions and print the result.
    Normalize {
        file: String,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Reach {
            file,
            target,
            k,
            arity,
        } => cmd_reach(&file, &target, k, arity),
        Command::Regions { file, json } => cmd_regions(&file, json),
        Command::Values {
            file,
            ascii_heatmap,
        } => cmd_values(&file, ascii_heatmap),
        Command::Certificate { file, verify } => cmd_certificate(&file, verify.as_deref()),
        Command::Lemmas {
            sweep,
            max_total,
            conjecture,
            seed,
        } => cmd_lemmas(sweep.as_deref(), max_total, conjecture.as_deref(), seed),
        Command::Pi {
            dims,
            arity,
            cap,
            no_symmetry,
        } => cmd_pi(&dims, arity, cap, no_symmetry),
        Command::Normalize { file, json } => cmd_normalize(&file, json),
    };
    ExitCode::from(code)
}

fn input_err(msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    EXIT_INPUT
}

fn load(file: &str) -> Result<Distribution, u8> {
    load_distribution(file).map_err(input_err)
}

fn parse_vertex(s: &str, dims: GridDims) -> Result<Vertex, u8> {
    let parts: Vec<&str> = s.split(',').collect();
    let parsed = match parts.as_slice() {
        [r, c] => match (r.trim().parse::<usize>(), c.trim().parse::<usize>()) {
            (Ok(row), Ok(col)) => Some(Vertex::new(row, col)),
            _ => None,
        },
        _ => None,
    };
    match parsed {
        Some(v) if dims.contains(v) => Ok(v),
        Some(v) => Err(input_err(format!("target {v} outside {dims}"))),
        None => Err(input_err(format!("bad target {s:?}, expected ROW,COL"))),
    }
}

fn parse_dims(s: &str) -> Result<GridDims, u8> {
    let parts: Vec<&str> = s.split(['x', 'X']).collect();
    match parts.as_slice() {
        [m, n] => match (m.trim().parse::<usize>(), n.trim().parse::<usize>()) {
            (Ok(rows), Ok(cols)) if rows >= 1 && cols >= 1 => Ok(GridDims::new(rows, cols)),
            _ => Err(input_err(format!("bad dimensions {s:?}, expected MxN"))),
        },
        _ => Err(input_err(format!("bad dimensions {s:?}, expected MxN"))),
    }
}

fn cmd_reach(file: &str, target: &str, k: u32, arity: u32) -> u8 {
    let dist = match load(file) {
        Ok(d) => d,
        Err(c) => return c,
    };
    let rule = match MoveRule::new(arity) {
        Ok(r) => r,
        Err(e) => return input_err(e),
    };
    let target = match parse_vertex(target, dist.dims()) {
        Ok(v) => v,
        Err(c) => return c,
    };
    let count = reach_count(&dist, rule, target);
    let reachable = count >= k;
    println!(
        "target {target}: reach count {count}, {}",
        if reachable { "reachable" } else { "unreachable" }
    );
    if reachable {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn cmd_regions(file: &str, json: bool) -> u8 {
    let dist = match load(file) {
        Ok(d) => d,
        Err(c) => return c,
    };
    let partition = match decompose(&dist) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_NEGATIVE;
        }
    };
    if json {
        let obj = serde_json::json!({
            "regions": partition.regions.iter().enumerate().map(|(i, r)| serde_json::json!({
                "k": r.k(),
                "n": r.size(),
                "core": r.core().iter().map(|v| [v.row, v.col]).collect::<Vec<_>>(),
                "members": r.members().iter().map(|v| [v.row, v.col]).collect::<Vec<_>>(),
                "frontier": region_frontier(&partition, i).iter().map(|v| [v.row, v.col]).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "leftover": partition.leftover.iter().map(|v| [v.row, v.col]).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&obj).unwrap());
    } else {
        for (i, r) in partition.regions.iter().enumerate() {
            let core: Vec<String> = r.core().iter().map(|v| v.to_string()).collect();
            let frontier: Vec<String> = region_frontier(&partition, i)
                .iter()
                .map(|v| v.to_string())
                .collect();
            println!(
                "region {i}: k={} n={} core [{}] frontier [{}]",
                r.k(),
                r.size(),
                core.join(" "),
                frontier.join(" ")
            );
        }
        let leftover: Vec<String> = partition.leftover.iter().map(|v| v.to_string()).collect();
        println!("leftover: [{}]", leftover.join(" "));
    }
    EXIT_OK
}

fn cmd_values(file: &str, ascii_heatmap: bool) -> u8 {
    let dist = match load(file) {
        Ok(d) => d,
        Err(c) => return c,
    };
    let dims = dist.dims();
    let vm = ValueMap::compute(&dist);
    if ascii_heatmap {
        for r in 0..dims.rows() {
            let row: Vec<String> = (0..dims.cols())
                .map(|c| format!("{:8.4}", approx(vm.get(Vertex::new(r, c)))))
                .collect();
            println!("{}", row.join(" "));
        }
    } else {
        for v in dims.vertices() {
            let val = vm.get(v);
            println!("{v} {} (~{:.6})", fmt_rat(val), approx(val));
        }
        println!("min {} (~{:.6})", fmt_rat(vm.min()), approx(vm.min()));
    }
    EXIT_OK
}

fn cmd_certificate(file: &str, verify: Option<&str>) -> u8 {
    let dist = match load(file) {
        Ok(d) => d,
        Err(c) => return c,
    };
    if !is_solvable(&dist, MoveRule::CLASSIC) {
        let witness = dist
            .dims()
            .vertices()
            .find(|&v| !is_k_reachable(&dist, MoveRule::CLASSIC, v, 1))
            .expect("unsolvable implies some unreachable vertex");
        eprintln!("error: unsolvable, vertex {witness} is unreachable");
        return EXIT_NEGATIVE;
    }
    match verify {
        None => match build_certificate(&dist) {
            Ok(report) => {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
                EXIT_OK
            }
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_NEGATIVE
            }
        },
        Some(report_path) => {
            let text = match std::fs::read_to_string(report_path) {
                Ok(t) => t,
                Err(e) => return input_err(e),
            };
            let report: CertificateReport = match serde_json::from_str(&text) {
                Ok(r) => r,
                Err(e) => return input_err(e),
            };
            match verify_certificate(&dist, &report) {
                Ok(()) => {
                    println!("certificate verified");
                    EXIT_OK
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_NEGATIVE
                }
            }
        }
    }
}

fn cmd_lemmas(sweep: Option<&str>, max_total: u32, conjecture: Option<&str>, seed: u64) -> u8 {
    let mut reports = lemmas::verify_constants();
    reports.extend(lemmas::verify_lp_lemmas());
    if let Some(s) = sweep {
        let dims = match parse_dims(s) {
            Ok(d) => d,
            Err(c) => return c,
        };
        reports.extend(lemmas::empirical_sweep(
            dims,
            max_total,
            SamplePolicy::default(),
            seed,
        ));
    }
    if let Some(s) = conjecture {
        let dims = match parse_dims(s) {
            Ok(d) => d,
            Err(c) => return c,
        };
        reports.push(lemmas::conjecture_scan(dims, max_total));
    }
    let merged = lemmas::merge_reports(reports);
    println!("{}", serde_json::to_string_pretty(&merged).unwrap());
    let refuted: Vec<&lemmas::LemmaReport> = merged.iter().filter(|r| r.is_refuted()).collect();
    if refuted.is_empty() {
        eprintln!("{} claims checked, none refuted", merged.len());
        EXIT_OK
    } else {
        for r in &refuted {
            eprintln!("refuted: {} ({})", r.id, r.details);
        }
        EXIT_REFUTED
    }
}

fn cmd_pi(dims: &str, arity: u32, cap: u64, no_symmetry: bool) -> u8 {
    let dims = match parse_dims(dims) {
        Ok(d) => d,
        Err(c) => return c,
    };
    let rule = match MoveRule::new(arity) {
        Ok(r) => r,
        Err(e) => return input_err(e),
    };
    let mut config = SearchConfig::with_rule(rule);
    config.max_total = cap.min(pebbling::engine::TOTAL_CAP);
    config.use_symmetry = !no_symmetry;
    match optimal_pebbling_number(dims, config) {
        Ok((total, witness)) => {
            println!("{total}");
            print!("{}", format_ascii(&witness));
            EXIT_OK
        }
        Err(SearchError::CapExceeded(c)) => {
            eprintln!("error: no solvable distribution with total <= {c}");
            EXIT_CAP
        }
        Err(e) => input_err(e),
    }
}

fn cmd_normalize(file: &str, json: bool) -> u8 {
    let dist = match load(file) {
        Ok(d) => d,
        Err(c) => return c,
    };
    match normalize(&dist) {
        Ok(q) => {
            if json {
                let file = DistributionFile::from_distribution(&q);
                println!("{}", serde_json::to_string_pretty(&file).unwrap());
            } else {
                print!("{}", format_ascii(&q));
            }
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_NEGATIVE
        }
    }
}
