use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use superbd_core::construct::{assemble_r, solve_r0};
use superbd_core::roots::enumerate_diagrams;
use superbd_core::triples::{enumerate_triples, triple_to_json};
use superbd_core::verify::verify_r_matrix;
use superbd_core::{SuperAlgebra, Tensor2};

mod reproduce;

/// Construct and verify classical r-matrices on gl(m,n)/sl(m,n).
#[derive(Parser)]
#[command(name = "superbd", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// List the Dynkin diagrams of an algebra.
    Diagrams {
        /// Algebra spelled as kind:m:n, e.g. sl:2:1.
        #[arg(long)]
        algebra: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the admissible triples of a diagram.
    Triples {
        #[arg(long)]
        algebra: String,
        /// Diagram index into the enumeration order (0-based).
        #[arg(long)]
        diagram: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Construct the r-matrix of a triple and print it.
    Construct {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        diagram: usize,
        /// Triple index into the enumeration order (0-based).
        #[arg(long)]
        triple: usize,
        /// Cartan parameter: `particular`, `gen:K`, or `file:PATH`.
        #[arg(long, default_value = "particular")]
        r0: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Verify an r-matrix JSON (from --input or stdin) and report.
    Verify {
        #[arg(long)]
        algebra: String,
        /// Input file; stdin when omitted.
        #[arg(long)]
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Rebuild and check every sl(2,1) table: six standard and four
    /// nonstandard r-matrices plus the exotic solution.
    ReproduceSl21 {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Exit 1: malformed input. Exit 2: verification failure.
fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn parse_algebra(spec: &str) -> Result<SuperAlgebra, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("algebra must be kind:m:n, got `{spec}`"));
    }
    let m: usize = parts[1].parse().map_err(|_| format!("bad m in `{spec}`"))?;
    let n: usize = parts[2].parse().map_err(|_| format!("bad n in `{spec}`"))?;
    let kind = match parts[0] {
        "gl" => superbd_core::AlgebraKind::Gl,
        "sl" => superbd_core::AlgebraKind::Sl,
        other => return Err(format!("unknown algebra kind `{other}`")),
    };
    SuperAlgebra::make(kind, m, n).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Diagrams { algebra, format } => {
            let alg = parse_algebra(&algebra)?;
            let diagrams = enumerate_diagrams(&alg);
            match format {
                Format::Json => {
                    let list: Vec<Value> = diagrams.iter().map(|d| d.to_json()).collect();
                    println!(
                        "{}",
                        serde_json::json!({
                            "algebra": alg.descriptor_json(),
                            "diagrams": list,
                        })
                    );
                }
                Format::Text => {
                    for (k, d) in diagrams.iter().enumerate() {
                        let roots: Vec<String> =
                            d.simple_roots.iter().map(|r| r.to_string()).collect();
                        let parities: Vec<String> =
                            d.parities().iter().map(|p| p.to_string()).collect();
                        println!(
                            "diagram {k}: simple roots [{}] parities [{}] sign {}",
                            roots.join(", "),
                            parities.join(", "),
                            d.sign
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Triples { algebra, diagram, format } => {
            let alg = parse_algebra(&algebra)?;
            let diagrams = enumerate_diagrams(&alg);
            let d = diagrams
                .get(diagram)
                .ok_or_else(|| format!("diagram index {diagram} out of range"))?;
            let triples = enumerate_triples(d);
            match format {
                Format::Json => {
                    let list: Vec<Value> = triples.iter().map(triple_to_json).collect();
                    println!(
                        "{}",
                        serde_json::json!({
                            "algebra": alg.descriptor_json(),
                            "diagram": d.to_json(),
                            "triples": list,
                        })
                    );
                }
                Format::Text => {
                    for (k, t) in triples.iter().enumerate() {
                        if t.is_empty() {
                            println!("triple {k}: empty");
                        } else {
                            let maps: Vec<String> = t
                                .tau
                                .iter()
                                .map(|(&a, &b)| {
                                    format!(
                                        "{} -> {}",
                                        d.simple_roots[a], d.simple_roots[b]
                                    )
                                })
                                .collect();
                            println!("triple {k}: {}", maps.join(", "));
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { algebra, diagram, triple, r0, format } => {
            let alg = parse_algebra(&algebra)?;
            let diagrams = enumerate_diagrams(&alg);
            let d = diagrams
                .get(diagram)
                .ok_or_else(|| format!("diagram index {diagram} out of range"))?;
            let triples = enumerate_triples(d);
            let t = triples
                .get(triple)
                .ok_or_else(|| format!("triple index {triple} out of range"))?;
            let sol = solve_r0(t, &alg).map_err(|e| e.to_string())?;
            let r0_tensor = if r0 == "particular" {
                sol.particular.clone()
            } else if let Some(k) = r0.strip_prefix("gen:") {
                let k: usize = k.parse().map_err(|_| format!("bad generator index `{r0}`"))?;
                let g = sol
                    .nullspace
                    .get(k)
                    .ok_or_else(|| format!("generator index {k} out of range"))?;
                sol.particular.add(g)
            } else if let Some(path) = r0.strip_prefix("file:") {
                let text =
                    std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))?;
                let v: Value =
                    serde_json::from_str(&text).map_err(|e| format!("parsing {path}: {e}"))?;
                Tensor2::from_json(&v).map_err(|e| e.to_string())?
            } else {
                return Err(format!("bad --r0 value `{r0}`"));
            };
            let rmx = assemble_r(t, &r0_tensor, &alg).map_err(|e| e.to_string())?;
            match format {
                Format::Json => {
                    let mut payload = rmx.tensor.to_json();
                    payload["provenance"] = serde_json::json!({
                        "algebra": alg.descriptor_json(),
                        "diagram": d.to_json(),
                        "diagram_index": diagram,
                        "triple": triple_to_json(t),
                        "triple_index": triple,
                        "r0_coefficients": r0_tensor.to_json()["entries"],
                    });
                    println!("{payload}");
                }
                Format::Text => {
                    println!("r = {}", rmx.tensor);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { algebra, input, format } => {
            let alg = parse_algebra(&algebra)?;
            let text = match input {
                Some(path) => std::fs::read_to_string(&path)
                    .map_err(|e| format!("reading {path}: {e}"))?,
                None => {
                    let mut buf = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buf)
                        .map_err(|e| format!("reading stdin: {e}"))?;
                    buf
                }
            };
            let v: Value = serde_json::from_str(&text).map_err(|e| format!("parsing input: {e}"))?;
            let r = Tensor2::from_json(&v).map_err(|e| e.to_string())?;
            let report = verify_r_matrix(&r, &alg).map_err(|e| e.to_string())?;
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => {
                    println!("unitarity: {}", verdict(report.unitarity_ok()));
                    println!("cybe: {}", verdict(report.cybe_ok()));
                    println!("f unitarity: {}", verdict(report.f_unitarity_ok));
                    println!("f bracket identity: {}", verdict(report.f_ybe_failures.is_empty()));
                    println!("cayley: {}", verdict(report.cayley.passed()));
                }
            }
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(2))
            }
        }
        Command::ReproduceSl21 { format } => reproduce::run(format == Format::Json),
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}
