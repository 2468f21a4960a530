//! Command-line front end. Exit codes: 0 when every reported law holds,
//! 1 when a law fails or a precondition is violated, 2 on bad input.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use condalg::duality::{co_es_roundtrip, em, es_co_roundtrip, representation_check, ultrafilter_frame};
use condalg::extensions::{pi_algebra, sigma_algebra, smoothness_check};
use condalg::generate::{search, GenKind, GenSpec};
use condalg::io::{parse_algebra, parse_document, parse_frame, serialize_algebra, serialize_frame, Document};
use condalg::multimodal::{check_mma_axioms, qa_equals_box_phi_check, to_mma};
use condalg::structure::{congruence_duality_check, congruence_lattice, enumerate_subalgebras, subalgebra_duality_check};
use condalg::suite::{verify_suite, SuiteConfig};
use condalg::varieties::{canonicity_check, classify_variety, correspondence_check};
use condalg::{check_axiom, check_ca, cm, AxiomId, CondAlg, Error, FrameCondId, Verdict};

#[derive(Parser)]
#[command(name = "condalg", version, about = "Check finite conditional algebras and their dual frames")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check C1-C3, or a single axiom.
    Check {
        file: PathBuf,
        #[arg(long)]
        axiom: Option<AxiomId>,
    },
    /// List the varieties the algebra belongs to.
    Classify { file: PathBuf },
    /// Print the ultrafilter frame.
    Dual { file: PathBuf },
    /// Print the complex algebra of a frame.
    Cm { file: PathBuf },
    /// Print the canonical extension.
    Em { file: PathBuf },
    /// Check the duality roundtrip for an algebra or a frame.
    Roundtrip { file: PathBuf },
    /// Check an axiom against its frame condition.
    Correspond {
        file: PathBuf,
        #[arg(long)]
        axiom: AxiomId,
    },
    /// Check a frame condition against its equation in the complex algebra.
    Canonicity {
        file: PathBuf,
        #[arg(long = "cond")]
        cond: FrameCondId,
    },
    /// List Boolean subalgebras, marking the conditional ones and checking their duality.
    Subalgebras { file: PathBuf },
    /// List congruences from T-closed sets and check their duality.
    Congruences { file: PathBuf },
    /// Build the multi-modal algebra and check its laws.
    Mma { file: PathBuf },
    /// Compute the pi and sigma extensions.
    Extensions { file: PathBuf },
    /// Find algebras satisfying and violating given axioms.
    Search {
        #[arg(long)]
        atoms: usize,
        #[arg(long, value_delimiter = ',', default_value = "C1,C2,C3")]
        require: Vec<AxiomId>,
        #[arg(long, value_delimiter = ',')]
        forbid: Vec<AxiomId>,
        #[arg(long, default_value_t = 1)]
        limit: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "random-table")]
        kind: GenKind,
    },
    /// Run the full verification battery.
    VerifySuite {
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

/// What a command produced: verdicts plus optional documents and data.
struct Report {
    command: &'static str,
    inputs: Json,
    verdicts: Vec<Verdict>,
    seed: Option<u64>,
    text: Vec<String>,
    data: Option<Json>,
    /// Text mode prints verdict lines unless the text already summarizes them.
    verdict_lines: bool,
}

impl Report {
    fn new(command: &'static str, inputs: Json) -> Self {
        Report { command, inputs, verdicts: Vec::new(), seed: None, text: Vec::new(), data: None, verdict_lines: true }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn algebra(path: &Path) -> Result<CondAlg, Error> {
    parse_algebra(&read(path)?)
}

fn file_input(path: &Path) -> Json {
    json!({ "file": path.display().to_string() })
}

fn run(command: Command) -> Result<Report, Error> {
    Ok(match command {
        Command::Check { file, axiom } => {
            let alg = algebra(&file)?;
            let mut r = Report::new("check", json!({ "file": file.display().to_string(), "axiom": axiom.map(|a| a.to_string()) }));
            r.verdicts.push(match axiom {
                Some(id) => check_axiom(&alg, id),
                None => check_ca(&alg),
            });
            r
        }
        Command::Classify { file } => {
            let alg = algebra(&file)?;
            let mut r = Report::new("classify", file_input(&file));
            r.verdicts.push(check_ca(&alg));
            let tags: Vec<String> = classify_variety(&alg).iter().map(|t| t.to_string()).collect();
            r.text.push(format!("varieties: {}", if tags.is_empty() { "none".into() } else { tags.join(", ") }));
            r.data = Some(json!({ "varieties": tags }));
            r
        }
        Command::Dual { file } => {
            let frame = ultrafilter_frame(&algebra(&file)?)?;
            let mut r = Report::new("dual", file_input(&file));
            r.text.push(serialize_frame(&frame));
            r.data = Some(document_json(&serialize_frame(&frame)));
            r
        }
        Command::Cm { file } => {
            let alg = cm(&parse_frame(&read(&file)?)?);
            let mut r = Report::new("cm", file_input(&file));
            r.verdicts.push(check_ca(&alg));
            r.text.push(serialize_algebra(&alg));
            r.data = Some(document_json(&serialize_algebra(&alg)));
            r
        }
        Command::Em { file } => {
            let alg = em(&algebra(&file)?)?;
            let mut r = Report::new("em", file_input(&file));
            r.text.push(serialize_algebra(&alg));
            r.data = Some(document_json(&serialize_algebra(&alg)));
            r
        }
        Command::Roundtrip { file } => {
            let mut r = Report::new("roundtrip", file_input(&file));
            match parse_document(&read(&file)?)? {
                Document::Algebra(a) => {
                    r.verdicts.push(representation_check(&a)?);
                    r.verdicts.push(co_es_roundtrip(&a)?);
                }
                Document::Frame(f) => r.verdicts.push(es_co_roundtrip(&f)?),
            }
            r
        }
        Command::Correspond { file, axiom } => {
            let alg = algebra(&file)?;
            let mut r = Report::new("correspond", json!({ "file": file.display().to_string(), "axiom": axiom.to_string() }));
            r.verdicts.push(correspondence_check(&alg, axiom)?);
            r
        }
        Command::Canonicity { file, cond } => {
            let frame = parse_frame(&read(&file)?)?;
            let mut r = Report::new("canonicity", json!({ "file": file.display().to_string(), "cond": cond.to_string() }));
            r.verdicts.push(canonicity_check(&frame, cond)?);
            r
        }
        Command::Subalgebras { file } => {
            let alg = algebra(&file)?;
            let mut r = Report::new("subalgebras", file_input(&file));
            r.verdicts.push(subalgebra_duality_check(&alg)?);
            let subs: Vec<Json> = enumerate_subalgebras(&alg)
                .iter()
                .map(|s| json!({ "elements": s.elements.iter().collect::<Vec<_>>(), "conditional": s.closed_under(&alg).holds }))
                .collect();
            r.text.extend(subs.iter().map(|s| {
                let kind = if s["conditional"] == true { "conditional" } else { "boolean only" };
                format!("subalgebra {} ({kind})", s["elements"])
            }));
            r.data = Some(json!({ "subalgebras": subs }));
            r
        }
        Command::Congruences { file } => {
            let alg = algebra(&file)?;
            let mut r = Report::new("congruences", file_input(&file));
            r.verdicts.push(congruence_duality_check(&alg)?);
            let closed: Vec<u64> = congruence_lattice(&alg)?.iter().map(|c| c.y.mask()).collect();
            r.text.extend(closed.iter().map(|y| format!("theta({y:#b})")));
            r.data = Some(json!({ "t_closed": closed }));
            r
        }
        Command::Mma { file } => {
            let alg = algebra(&file)?;
            let m = to_mma(&alg)?;
            let mut r = Report::new("mma", file_input(&file));
            r.verdicts.push(check_mma_axioms(&m));
            r.verdicts.push(qa_equals_box_phi_check(&alg)?);
            let boxes: Vec<Vec<u64>> = alg.base().elements().map(|b| m.box_table(b).map(<[u64]>::to_vec)).collect::<Result<_, _>>()?;
            r.text.extend(boxes.iter().enumerate().map(|(b, t)| format!("box[{b}] = {t:?}")));
            r.data = Some(json!({ "boxes": boxes }));
            r
        }
        Command::Extensions { file } => {
            let alg = algebra(&file)?;
            let (p, s) = (pi_algebra(&alg)?, sigma_algebra(&alg)?);
            let mut r = Report::new("extensions", file_input(&file));
            r.verdicts.push(check_ca(&p));
            r.verdicts.push(check_ca(&s));
            r.verdicts.push(smoothness_check(&alg)?);
            r.text.push(format!("pi:\n{}sigma:\n{}", serialize_algebra(&p), serialize_algebra(&s)));
            r.data = Some(json!({ "pi": p.table(), "sigma": s.table() }));
            r
        }
        Command::Search { atoms, require, forbid, limit, seed, kind } => {
            let spec = GenSpec { kind, atoms, seed };
            let found = search(&spec, &require, &forbid, limit)?;
            let names = |ids: &[AxiomId]| ids.iter().map(|i| i.to_string()).collect::<Vec<_>>();
            let mut r = Report::new(
                "search",
                json!({ "atoms": atoms, "require": names(&require), "forbid": names(&forbid),
                        "limit": limit, "kind": kind.to_string() }),
            );
            r.seed = Some(seed);
            r.text.push(format!("found {} algebra(s)", found.len()));
            r.text.extend(found.iter().map(serialize_algebra));
            r.data = Some(json!({ "algebras": found.iter().map(|a| document_json(&serialize_algebra(a))).collect::<Vec<_>>() }));
            r
        }
        Command::VerifySuite { config } => {
            let cfg: SuiteConfig = match &config {
                Some(path) => serde_json::from_str(&read(path)?)
                    .map_err(|e| Error::Parse { line: e.line(), column: e.column(), message: e.to_string() })?,
                None => SuiteConfig::default(),
            };
            let report = verify_suite(&cfg);
            let mut r = Report::new("verify-suite", json!({ "config": config.map(|p| p.display().to_string()) }));
            r.seed = Some(cfg.seed);
            r.verdict_lines = false;
            for c in &report.criteria {
                let mut v = c.verdict.clone();
                v.law = format!("{}. {}", c.id, c.name);
                r.text.push(format!(
                    "[{}] {:>2} {} ({} samples, {} ms)",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.id,
                    c.name,
                    c.samples,
                    c.elapsed_ms
                ));
                if !c.passed {
                    r.text.push(format!("      {}", c.verdict));
                }
                r.verdicts.push(v);
            }
            r.data = Some(serde_json::to_value(&report).expect("reports serialize"));
            r
        }
    })
}

fn document_json(text: &str) -> Json {
    serde_json::from_str(text).expect("serializers emit valid JSON")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(cli.command) {
        Ok(r) => {
            let ok = r.verdicts.iter().all(|v| v.holds);
            let mut buf = String::new();
            match cli.format {
                Format::Text => {
                    for v in r.verdicts.iter().filter(|_| r.verdict_lines) {
                        let _ = writeln!(buf, "{v}");
                    }
                    for t in &r.text {
                        buf.push_str(t);
                        if !t.ends_with('\n') {
                            buf.push('\n');
                        }
                    }
                }
                Format::Json => {
                    let mut out = json!({
                        "command": r.command,
                        "inputs": r.inputs,
                        "verdicts": r.verdicts,
                        "seed": r.seed,
                        "elapsed_ms": start.elapsed().as_millis() as u64,
                    });
                    if let Some(d) = r.data {
                        out["output"] = d;
                    }
                    let _ = writeln!(buf, "{}", serde_json::to_string_pretty(&out).expect("reports serialize"));
                }
            }
            // a closed pipe downstream is not an error
            let _ = std::io::stdout().lock().write_all(buf.as_bytes());
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("condalg: {e}");
            ExitCode::from(if e.is_input() { 2 } else { 1 })
        }
    }
}
