//! Batch command-line surface: one verb per library operation, plain
//! text or `--json` output, and a stable exit-code contract.
//!
//! Exit codes: 0 success (or a true predicate), 1 false/not-found
//! predicates, 2 parse or usage errors, 3 resource-budget errors.

use crate::atlas::{apply_morphism, dominating_element, dynkin_shift, Morphism};
use crate::closure::{
    affine_close, closure_invariants, kauffman_bracket, markov_search, normalized_invariant,
    prop_closure_moves, ClosureInvariants, ClosureMoveKind, MoveSequence, DEFAULT_MAX_STRANDS,
};
use crate::decompose::{
    from_parabolic, is_affine, kernel_rewrite_f, ne_decompose, phi_decompose, schreier_rewrite,
    t_exponent_sum, to_parabolic, KernelWord, ParabolicWord,
};
use crate::error::Error;
use crate::free::DEFAULT_LEN_BUDGET;
use crate::oracle::words_equal_budgeted;
use crate::word::{defining_relations, parse, render, GroupKind, Presentation};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::Write;

#[derive(Parser)]
#[command(
    name = "braidkit",
    about = "Computational workbench for A-type, B-type and affine braid groups",
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit a structured JSON object instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Cap on endomorphism image length in the equality oracle
    #[arg(long, global = true, default_value_t = DEFAULT_LEN_BUDGET)]
    max_endo_len: usize,
    /// Cap on strand count for bracket evaluation
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_STRANDS)]
    max_strands: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParabolicDir {
    To,
    From,
}

#[derive(Clone, Copy, ValueEnum)]
enum MovesKind {
    Dynkin,
    AppendA,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether two words are the same group element
    Eq { x: String, y: String },
    /// Test a B-type word for membership in the affine subgroup
    Member { word: String },
    /// Split a B-type word as lambda . phi^k
    Decompose { word: String },
    /// Respell an affine word over the parabolic alphabet, or back
    Parabolic {
        #[arg(value_enum)]
        dir: ParabolicDir,
        word: String,
    },
    /// Rewrite a kernel element of a B-type group over F0..Fn
    Kernel { word: String },
    /// Rewrite a zero-sum F-word over the Schreier generators g[j,i]
    Schreier {
        /// Rank of the kernel alphabet (generators F0..Fn)
        #[arg(long)]
        n: usize,
        word: String,
    },
    /// Split an affine word along the semidirect decomposition
    Ne { word: String },
    /// Apply a named arrow of the tower at index n
    Map {
        /// Arrow name: x, y, z, i_inc, iota, F, alpha, beta,
        /// f_semidirect, underbar_i, xbar, dynkin
        #[arg(long)]
        m: String,
        #[arg(long)]
        n: usize,
        /// Exponent (dynkin only)
        #[arg(long, default_value_t = 1)]
        e: i64,
        word: String,
    },
    /// Apply the Dynkin automorphism to an affine word
    Dynkin {
        #[arg(long, default_value_t = 1)]
        e: i64,
        word: String,
    },
    /// Print the dominating element at a given rank
    Dominating {
        #[arg(long)]
        n: usize,
    },
    /// Closure invariants of an A-type word
    Close { word: String },
    /// Closure invariants of an affine word (via its A-type image)
    AffineClose { word: String },
    /// Bracket polynomial and normalized invariant of an A-type word
    Bracket { word: String },
    /// Emit a checked move derivation for a closure identity
    Moves {
        #[arg(long, value_enum)]
        which: MovesKind,
        word: String,
    },
    /// Bounded search for a Markov derivation between two A-type words
    Search {
        x: String,
        y: String,
        #[arg(long, default_value_t = 4)]
        max_depth: usize,
        #[arg(long, default_value_t = 5)]
        max_rank: usize,
    },
    /// Replay and validate a serialized move sequence (path or `-`)
    Replay { path: String },
    /// Dump a defining-relation table
    Relations {
        /// A, B or AT
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        /// formal or parabolic
        #[arg(long, default_value = "formal")]
        presentation: String,
    },
}

struct Report {
    exit: i32,
    text: String,
    result: Value,
    certificate: Option<String>,
}

impl Report {
    fn ok(text: impl Into<String>, result: Value) -> Self {
        Report { exit: 0, text: text.into(), result, certificate: None }
    }

    fn negative(text: impl Into<String>, result: Value) -> Self {
        Report { exit: 1, text: text.into(), result, certificate: None }
    }

    fn with_certificate(mut self, cert: String) -> Self {
        self.certificate = Some(cert);
        self
    }
}

fn exit_code_for(err: &Error) -> i32 {
    if err.is_resource() {
        return 3;
    }
    match err {
        Error::NotInKernel | Error::NonzeroExponentSum { .. } | Error::IllegalMove(_) => 1,
        _ => 2,
    }
}

fn invariants_json(inv: &ClosureInvariants) -> Value {
    json!({
        "strands": inv.strands,
        "components": inv.components,
        "exponent_sum": inv.exponent_sum,
        "normalized_bracket":
            inv.normalized_bracket.as_ref().map(|p| p.to_string()),
    })
}

fn invariants_text(inv: &ClosureInvariants) -> String {
    let bracket = match &inv.normalized_bracket {
        Some(p) => p.to_string(),
        None => "(over strand budget)".to_string(),
    };
    format!(
        "strands {}\ncomponents {}\nexponent_sum {}\nnormalized_bracket {}",
        inv.strands, inv.components, inv.exponent_sum, bracket
    )
}

fn execute(cli: &Cli) -> crate::error::Result<Report> {
    let budget = cli.max_endo_len;
    let strands = cli.max_strands;
    Ok(match &cli.cmd {
        Cmd::Eq { x, y } => {
            let equal = words_equal_budgeted(&parse(x)?, &parse(y)?, budget)?;
            if equal {
                Report::ok("equal", json!(true))
            } else {
                Report::negative("unequal", json!(false))
            }
        }
        Cmd::Member { word } => {
            let w = parse(word)?;
            let sum = t_exponent_sum(&w)?;
            if is_affine(&w)? {
                Report::ok(format!("affine (t-sum {sum})"), json!({"affine": true, "t_sum": sum}))
            } else {
                Report::negative(
                    format!("not affine (t-sum {sum})"),
                    json!({"affine": false, "t_sum": sum}),
                )
            }
        }
        Cmd::Decompose { word } => {
            let d = phi_decompose(&parse(word)?)?;
            let lambda = render(&d.lambda);
            Report::ok(
                format!("lambda {lambda}\nk {}", d.k),
                json!({"lambda": lambda, "k": d.k}),
            )
        }
        Cmd::Parabolic { dir, word } => {
            let text = match dir {
                ParabolicDir::To => to_parabolic(&parse(word)?)?.to_string(),
                ParabolicDir::From => render(&from_parabolic(&ParabolicWord::parse(word)?)),
            };
            Report::ok(text.clone(), json!({ "word": text }))
        }
        Cmd::Kernel { word } => {
            let k = kernel_rewrite_f(&parse(word)?, budget)?;
            let text = k.to_string();
            Report::ok(text.clone(), json!({ "word": text }))
        }
        Cmd::Schreier { n, word } => {
            let s = schreier_rewrite(&KernelWord::parse(word, *n)?)?;
            let text = s.to_string();
            Report::ok(text.clone(), json!({ "word": text }))
        }
        Cmd::Ne { word } => {
            let (nu, u) = ne_decompose(&parse(word)?, budget)?;
            let (nu, u) = (nu.to_string(), render(&u));
            Report::ok(format!("nu {nu}\nu {u}"), json!({"nu": nu, "u": u}))
        }
        Cmd::Map { m, n, e, word } => {
            let arrow = Morphism::from_name(m, *n, Some(*e))?;
            let image = render(&apply_morphism(&arrow, &parse(word)?)?);
            Report::ok(image.clone(), json!({ "word": image }))
        }
        Cmd::Dynkin { e, word } => {
            let image = render(&dynkin_shift(&parse(word)?, *e)?);
            Report::ok(image.clone(), json!({ "word": image }))
        }
        Cmd::Dominating { n } => {
            let word = render(&dominating_element(*n)?);
            Report::ok(word.clone(), json!({ "word": word }))
        }
        Cmd::Close { word } => {
            let inv = closure_invariants(&parse(word)?, strands)?;
            Report::ok(invariants_text(&inv), invariants_json(&inv))
        }
        Cmd::AffineClose { word } => {
            let inv = affine_close(&parse(word)?, strands)?;
            Report::ok(invariants_text(&inv), invariants_json(&inv))
        }
        Cmd::Bracket { word } => {
            let w = parse(word)?;
            let bracket = kauffman_bracket(&w, strands)?.to_string();
            let normalized = normalized_invariant(&w, strands)?.to_string();
            Report::ok(
                format!("bracket {bracket}\nnormalized {normalized}"),
                json!({"bracket": bracket, "normalized": normalized}),
            )
        }
        Cmd::Moves { which, word } => {
            let kind = match which {
                MovesKind::Dynkin => ClosureMoveKind::Dynkin,
                MovesKind::AppendA => ClosureMoveKind::AppendA,
            };
            let seq = prop_closure_moves(&parse(word)?, kind)?;
            seq.replay(budget)?;
            let cert = seq.serialize();
            Report::ok(cert.trim_end().to_string(), json!({"steps": seq.steps.len()}))
                .with_certificate(cert)
        }
        Cmd::Search { x, y, max_depth, max_rank } => {
            match markov_search(&parse(x)?, &parse(y)?, *max_rank, *max_depth, budget)? {
                Some(seq) => {
                    let cert = seq.serialize();
                    Report::ok(
                        format!("found\n{}", cert.trim_end()),
                        json!({"found": true, "steps": seq.steps.len()}),
                    )
                    .with_certificate(cert)
                }
                None => Report::negative("not-found", json!({"found": false})),
            }
        }
        Cmd::Replay { path } => {
            let text = if path == "-" {
                let mut buf = String::new();
                std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf).map_err(
                    |e| Error::Syntax { offset: 0, message: format!("stdin: {e}") },
                )?;
                buf
            } else {
                std::fs::read_to_string(path).map_err(|e| Error::Syntax {
                    offset: 0,
                    message: format!("{path}: {e}"),
                })?
            };
            let seq = MoveSequence::parse(&text)?;
            let end = seq.replay(budget)?;
            let end = render(&end);
            Report::ok(format!("valid\nend {end}"), json!({"valid": true, "end": end}))
                .with_certificate(seq.serialize())
        }
        Cmd::Relations { kind, n, presentation } => {
            let kind = match kind.as_str() {
                "A" => GroupKind::A,
                "B" => GroupKind::B,
                "AT" => GroupKind::AffineA,
                other => {
                    return Err(Error::Syntax {
                        offset: 0,
                        message: format!("unknown kind `{other}`"),
                    })
                }
            };
            let presentation = match presentation.as_str() {
                "formal" => Presentation::Formal,
                "parabolic" => Presentation::Parabolic,
                other => {
                    return Err(Error::Syntax {
                        offset: 0,
                        message: format!("unknown presentation `{other}`"),
                    })
                }
            };
            let table = defining_relations(kind, *n, presentation)?;
            let mut lines = Vec::new();
            let mut rels = Vec::new();
            for rel in &table.relations {
                let (lhs, rhs) = (render(&rel.lhs), render(&rel.rhs));
                lines.push(format!("{}: {lhs} = {rhs}", rel.label));
                rels.push(json!({"label": rel.label, "lhs": lhs, "rhs": rhs}));
            }
            Report::ok(lines.join("\n"), json!({ "relations": rels }))
        }
    })
}

fn inputs_json(cli: &Cli) -> Value {
    match &cli.cmd {
        Cmd::Eq { x, y } | Cmd::Search { x, y, .. } => json!({"x": x, "y": y}),
        Cmd::Member { word }
        | Cmd::Decompose { word }
        | Cmd::Kernel { word }
        | Cmd::Ne { word }
        | Cmd::Close { word }
        | Cmd::AffineClose { word }
        | Cmd::Bracket { word }
        | Cmd::Parabolic { word, .. }
        | Cmd::Moves { word, .. }
        | Cmd::Dynkin { word, .. }
        | Cmd::Map { word, .. } => json!({ "word": word }),
        Cmd::Schreier { n, word } => json!({"n": n, "word": word}),
        Cmd::Dominating { n } => json!({ "n": n }),
        Cmd::Replay { path } => json!({ "path": path }),
        Cmd::Relations { kind, n, presentation } => {
            json!({"kind": kind, "n": n, "presentation": presentation})
        }
    }
}

fn verb_name(cli: &Cli) -> &'static str {
    match &cli.cmd {
        Cmd::Eq { .. } => "eq",
        Cmd::Member { .. } => "member",
        Cmd::Decompose { .. } => "decompose",
        Cmd::Parabolic { .. } => "parabolic",
        Cmd::Kernel { .. } => "kernel",
        Cmd::Schreier { .. } => "schreier",
        Cmd::Ne { .. } => "ne",
        Cmd::Map { .. } => "map",
        Cmd::Dynkin { .. } => "dynkin",
        Cmd::Dominating { .. } => "dominating",
        Cmd::Close { .. } => "close",
        Cmd::AffineClose { .. } => "affine-close",
        Cmd::Bracket { .. } => "bracket",
        Cmd::Moves { .. } => "moves",
        Cmd::Search { .. } => "search",
        Cmd::Replay { .. } => "replay",
        Cmd::Relations { .. } => "relations",
    }
}

/// Run one invocation, writing to `out`; returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not usage errors.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(out, "{e}");
            return code;
        }
    };

    match execute(&cli) {
        Ok(report) => {
            if cli.json {
                let mut obj = json!({
                    "verb": verb_name(&cli),
                    "inputs": inputs_json(&cli),
                    "result": report.result,
                });
                if let Some(cert) = &report.certificate {
                    obj["certificate"] = json!(cert);
                }
                let _ = writeln!(out, "{obj}");
            } else {
                let _ = writeln!(out, "{}", report.text);
            }
            report.exit
        }
        Err(err) => {
            let code = exit_code_for(&err);
            if cli.json {
                let obj = json!({
                    "verb": verb_name(&cli),
                    "inputs": inputs_json(&cli),
                    "error": err.to_string(),
                    "exit": code,
                });
                let _ = writeln!(out, "{obj}");
            } else {
                let _ = writeln!(out, "error: {err}");
            }
            code
        }
    }
}
