use std::io::Read;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use rand::{rngs::StdRng, SeedableRng};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use sl3web::coloring::{enumerate_colorings, minimal_coloring};
use sl3web::growth::{grow, grow_random, kk_labeling};
use sl3web::invariant::{evaluate, expand, leading_term_via_kk};
use sl3web::polyring::{format_term, Polynomial};
use sl3web::verify;
use sl3web::weightpath::dominant_strings_up_to;
use sl3web::{Signature, SignStateString, Web};

#[derive(Parser)]
#[command(name = "sl3web", version, about = "SL3 webs, their invariants and leading terms")]
struct Cli {
    /// Emit JSON instead of the text formats.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Grow the web of a dominant sign/state string such as `+1,-1,--1,+-1`.
    Grow {
        string: String,
        /// Pick applicable rules at random with this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Print the KK labeling of a degree-1 web.
    Label { web: String },
    /// List proper edge colorings, or only the minimal one.
    Colorings {
        web: String,
        #[arg(long)]
        minimal: bool,
    },
    /// Print the web invariant.
    Invariant { web: String },
    /// Print the leading term found from the KK labeling.
    Leading {
        web: String,
        /// Also evaluate the full invariant and compare.
        #[arg(long)]
        check: bool,
    },
    /// Expand an invariant polynomial in the web basis.
    Expand {
        polynomial: String,
        /// Boundary colors, e.g. `BWWB`.
        #[arg(long)]
        signature: String,
    },
    /// Remove one growth step from a degree-1 web.
    Trim {
        web: String,
        /// Labeling to trim along; defaults to the web's KK labeling.
        #[arg(long)]
        labeling: Option<String>,
    },
    /// Split every boundary vertex into degree-1 vertices.
    Unclasp { web: String },
    /// Run the property suite over all dominant strings up to a length.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = 10)]
        orders: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// List dominant strings of length 1 to `max-len`.
    Enumerate {
        #[arg(long)]
        max_len: usize,
    },
}

/// A failed check, as opposed to bad input.
#[derive(Debug)]
struct CheckFailed(String);

impl std::fmt::Display for CheckFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CheckFailed {}

fn read_input(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn read_web(path: &str) -> anyhow::Result<Web> {
    let text = read_input(path)?;
    Web::parse(&text).with_context(|| format!("parsing web {path}"))
}

fn parse_string(s: &str) -> anyhow::Result<SignStateString> {
    s.parse().with_context(|| format!("parsing sign/state string `{s}`"))
}

fn digest(p: &Polynomial) -> String {
    let hash = Sha256::digest(p.to_string().as_bytes());
    let hex: String = hash.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

fn emit(json: bool, value: Value, text: String) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        print!("{text}");
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let json = cli.json;
    match cli.command {
        Command::Grow { string, seed } => {
            let s = parse_string(&string)?;
            let g = match seed {
                Some(seed) => grow_random(&s, &mut StdRng::seed_from_u64(seed))?,
                None => grow(&s)?,
            };
            let labels: Vec<String> = g.labels.iter().map(|l| l.to_string()).collect();
            emit(
                json,
                json!({"string": s.to_string(), "steps": g.steps, "labels": labels, "web": g.web.to_text()}),
                g.web.to_text(),
            );
        }
        Command::Label { web } => {
            let w = read_web(&web)?;
            let s = kk_labeling(&w)?;
            emit(json, json!({"labeling": s.to_string()}), format!("{s}\n"));
        }
        Command::Colorings { web, minimal } => {
            let w = read_web(&web)?;
            let list = if minimal {
                vec![minimal_coloring(&w)?]
            } else {
                enumerate_colorings(&w)
            };
            let rows: Vec<Value> = list
                .iter()
                .map(|c| {
                    json!({
                        "colors": c.colors().iter().map(|x| x.value()).collect::<Vec<_>>(),
                        "boundary_word": c.boundary_word(&w).to_string(),
                    })
                })
                .collect();
            let mut text = String::new();
            for c in &list {
                text += &format!("{}  {}\n", c.boundary_word(&w), c);
            }
            emit(json, json!({"count": list.len(), "colorings": rows}), text);
        }
        Command::Invariant { web } => {
            let w = read_web(&web)?;
            let p = evaluate(&w)?;
            emit(json, json!({"terms": p.len(), "polynomial": p.to_string()}), format!("{p}\n"));
        }
        Command::Leading { web, check } => {
            let w = read_web(&web)?;
            let (c, m) = leading_term_via_kk(&w)?;
            let mut text = format!("{}\n", format_term(&c, &m));
            let mut value = json!({"coefficient": c.to_string(), "monomial": m.to_string()});
            let mut mismatch = None;
            if check {
                let (fc, fm) = evaluate(&w)?.leading_term()?;
                if (&fc, &fm) == (&c, &m) {
                    text += "check: ok\n";
                    value["check"] = json!("ok");
                } else {
                    let full = format_term(&fc, &fm);
                    text += &format!("check: FAILED, full evaluation leads with {full}\n");
                    value["check"] = json!(format!("failed: {full}"));
                    mismatch = Some(full);
                }
            }
            emit(json, value, text);
            if let Some(full) = mismatch {
                return Err(CheckFailed(format!("leading term mismatch, evaluation gives {full}")).into());
            }
        }
        Command::Expand { polynomial, signature } => {
            let f: Polynomial = read_input(&polynomial)?
                .trim()
                .parse()
                .context("parsing polynomial")?;
            let sig: Signature = signature.parse().context("parsing signature")?;
            let e = expand(&f, &sig)?;
            let back = e.evaluate()?;
            let mut text = String::new();
            for (c, w) in &e.terms {
                text += &format!("{c} {}", w.to_text());
            }
            text += &format!("digest {}\n", digest(&back));
            let ok = back == f;
            text += if ok { "check: ok\n" } else { "check: FAILED\n" };
            let terms: Vec<Value> = e
                .terms
                .iter()
                .map(|(c, w)| json!({"coefficient": c.to_string(), "web": w.to_text()}))
                .collect();
            emit(
                json,
                json!({"terms": terms, "digest": digest(&back), "check": if ok { "ok" } else { "failed" }}),
                text,
            );
            if !ok {
                return Err(CheckFailed("re-summed expansion differs from the input".into()).into());
            }
        }
        Command::Trim { web, labeling } => {
            let w = read_web(&web)?;
            let labeling = match labeling {
                Some(s) => parse_string(&s)?,
                None => kk_labeling(&w)?,
            };
            let (t, s) = w.trim(&labeling)?;
            emit(
                json,
                json!({"labeling": s.to_string(), "web": t.to_text()}),
                format!("# labeling {s}\n{}", t.to_text()),
            );
        }
        Command::Unclasp { web } => {
            let w = read_web(&web)?;
            let u = w.unclasp()?;
            emit(json, json!({"web": u.to_text()}), u.to_text());
        }
        Command::Verify { max_len, orders, seed } => {
            let report = verify::run(&verify::Config {
                max_len,
                growth_orders: orders,
                seed,
                ..verify::Config::default()
            });
            let props: Vec<Value> = report
                .properties
                .iter()
                .map(|p| {
                    json!({
                        "name": p.name,
                        "checked": p.checked,
                        "failed": p.failures.len(),
                        "counterexamples": p.failures.iter().map(|c| json!({"input": c.input, "detail": c.detail})).collect::<Vec<_>>(),
                    })
                })
                .collect();
            emit(json, json!({"max_len": max_len, "properties": props}), format!("{report}\n"));
            if !report.passed() {
                return Err(CheckFailed("property suite failed".into()).into());
            }
        }
        Command::Enumerate { max_len } => {
            let strings: Vec<String> = dominant_strings_up_to(max_len).iter().map(|s| s.to_string()).collect();
            let text: String = strings.iter().map(|s| format!("{s}\n")).collect();
            emit(json, json!({"count": strings.len(), "strings": strings}), text);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<CheckFailed>() => {
            eprintln!("verification failed: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
