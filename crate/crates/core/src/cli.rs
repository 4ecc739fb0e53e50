//! Command-line front end. [`run`] does all the work so the binary stays a
//! one-liner and the subcommands can be tested in-process.
//!
//! Exit codes: `0` success, `1` usage or input error, `2` mathematical-domain
//! error (element not in the requested filtration term, non-Lyndon input,
//! resource cap hit, failed consistency check).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::graph::{parse_graph, CommutationGraph};
use crate::groupwords::{self, normal_form, parse_word, GroupWord};
use crate::liealg::{LieError, LyndonBasis, LyndonCoordinates};
use crate::lyndon::{enumerate_lyndon_bounded, LyndonError, LyndonTree};
use crate::magnus::{self, FiltrationDegree, MagnusError};
use crate::series::{witt_product_check, SeriesError};
use crate::tensor::{TensorError, DEFAULT_MAX_TERMS};
use crate::traces::{parse_trace, TraceError};

#[derive(Debug, Parser)]
#[command(
    name = "raag",
    version,
    about = "Lyndon bases, Magnus expansions and lower central series of right-angled Artin groups"
)]
pub struct Invocation {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Commutation graph as JSON: {"vertices": [...], "edges": [[a, b], ...]}
    #[arg(long, global = true)]
    pub graph: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Cap on polynomial terms (and enumerated traces) before giving up.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_TERMS)]
    pub max_terms: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lyndon elements with their bracketings, by length.
    Lyndon {
        #[arg(long)]
        max_len: usize,
    },
    /// Basis of gamma_K / gamma_{K+1} as bracketed Lyndon elements.
    LcsBasis {
        #[arg(long)]
        degree: usize,
    },
    /// Magnus expansion of a group word, truncated at degree N.
    Magnus {
        #[arg(long)]
        truncate: usize,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Canonical fully reduced form of a group word.
    NormalForm {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Whether a word lies in the K-th term of the lower central series.
    Member {
        #[arg(long)]
        degree: usize,
        /// Defaults to K + 1.
        #[arg(long)]
        truncate: Option<usize>,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Lyndon coordinates of a word in gamma_K / gamma_{K+1}.
    Coords {
        #[arg(long)]
        degree: usize,
        /// Defaults to K + 1.
        #[arg(long)]
        truncate: Option<usize>,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Lyndon coordinates of the bracket of two Lyndon elements.
    Structure { left: String, right: String },
    /// Compare the Lyndon-count product formula with the trace growth series.
    VerifySeries {
        #[arg(long)]
        max_deg: usize,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Math(String),
}

impl From<TraceError> for Failure {
    fn from(e: TraceError) -> Self {
        match e {
            TraceError::ResourceLimit(_) => Failure::Math(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<groupwords::WordError> for Failure {
    fn from(e: groupwords::WordError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<LyndonError> for Failure {
    fn from(e: LyndonError) -> Self {
        match e {
            LyndonError::Trace(t) => t.into(),
            other => Failure::Math(other.to_string()),
        }
    }
}

impl From<TensorError> for Failure {
    fn from(e: TensorError) -> Self {
        Failure::Math(e.to_string())
    }
}

impl From<LieError> for Failure {
    fn from(e: LieError) -> Self {
        Failure::Math(e.to_string())
    }
}

impl From<MagnusError> for Failure {
    fn from(e: MagnusError) -> Self {
        Failure::Math(e.to_string())
    }
}

impl From<SeriesError> for Failure {
    fn from(e: SeriesError) -> Self {
        Failure::Math(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let inv = match Invocation::try_parse_from(args) {
        Ok(inv) => inv,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
            return code;
        }
    };
    match execute(&inv, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Math(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn load_graph(common: &CommonArgs) -> Result<Arc<CommutationGraph>, Failure> {
    let path = common.graph.as_ref().ok_or_else(|| Failure::Usage("--graph <path> is required".into()))?;
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text).map(Arc::new).map_err(|e| Failure::Usage(e.to_string()))
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("output serializes");
    writeln!(out, "{text}").map_err(|e| Failure::Usage(e.to_string()))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    write!(out, "{text}").map_err(|e| Failure::Usage(e.to_string()))
}

fn lyndon_entry(g: &CommutationGraph, t: &LyndonTree) -> serde_json::Value {
    json!({ "lyndon": t.trace().labels(g), "bracket": t.bracket(g).to_string() })
}

fn coordinates_text(g: &CommutationGraph, basis: &LyndonBasis, c: &LyndonCoordinates) -> Result<String, Failure> {
    if c.is_zero() {
        return Ok("0\n".into());
    }
    let mut s = String::new();
    for (m, coeff) in c.entries() {
        let tree = basis.tree(m)?;
        s.push_str(&format!("{coeff}\t{}\t{}\n", tree.bracket(g), m.display(g)));
    }
    Ok(s)
}

fn filtration_json(d: FiltrationDegree) -> serde_json::Value {
    match d {
        FiltrationDegree::Exact(k) => json!({ "exact": k }),
        FiltrationDegree::AtLeast(k) => json!({ "at_least": k }),
    }
}

fn parse_group_word(g: &CommutationGraph, text: &str) -> Result<GroupWord, Failure> {
    Ok(parse_word(g, text)?)
}

fn execute(inv: &Invocation, out: &mut dyn Write) -> Result<i32, Failure> {
    let common = &inv.common;
    let g = load_graph(common)?;
    let json = common.format == Format::Json;
    match &inv.command {
        Command::Lyndon { max_len } => {
            let levels = enumerate_lyndon_bounded(&g, *max_len, common.max_terms)?;
            if json {
                let lengths: Vec<_> = levels
                    .iter()
                    .enumerate()
                    .map(|(i, level)| {
                        json!({
                            "length": i + 1,
                            "count": level.len(),
                            "elements": level.iter().map(|t| lyndon_entry(&g, t)).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                emit_json(out, &json!({ "max_len": max_len, "lengths": lengths }))?;
            } else {
                let mut s = String::new();
                for (i, level) in levels.iter().enumerate() {
                    s.push_str(&format!("length {} ({} elements)\n", i + 1, level.len()));
                    for t in level {
                        s.push_str(&format!("  {}\t{}\n", t.trace().display(&g), t.bracket(&g)));
                    }
                }
                emit(out, &s)?;
            }
        }
        Command::LcsBasis { degree } => {
            if *degree == 0 {
                return Err(Failure::Usage("--degree must be at least 1".into()));
            }
            let level = enumerate_lyndon_bounded(&g, *degree, common.max_terms)?.pop().unwrap_or_default();
            if json {
                emit_json(
                    out,
                    &json!({
                        "degree": degree,
                        "rank": level.len(),
                        "basis": level.iter().map(|t| lyndon_entry(&g, t)).collect::<Vec<_>>(),
                    }),
                )?;
            } else {
                let mut s = format!("gamma_{degree}/gamma_{}: free abelian of rank {}\n", degree + 1, level.len());
                for t in &level {
                    s.push_str(&format!("  {}\n", t.bracket(&g)));
                }
                emit(out, &s)?;
            }
        }
        Command::Magnus { truncate, word } => {
            let w = parse_group_word(&g, word)?;
            let mu = magnus::magnus_bounded(&g, &w, *truncate, common.max_terms)?;
            if json {
                emit_json(out, &mu.value.to_document())?;
            } else {
                emit(out, &format!("{}\n", mu.value))?;
            }
        }
        Command::NormalForm { word } => {
            let nf = normal_form(&g, &parse_group_word(&g, word)?);
            if json {
                let syllables: Vec<_> =
                    nf.syllables().iter().map(|s| json!({ "vertex": g.label(s.vertex), "exp": s.exp })).collect();
                emit_json(
                    out,
                    &json!({
                        "normal_form": nf.display(&g).to_string(),
                        "syllable_count": nf.syllable_count(),
                        "syllables": syllables,
                    }),
                )?;
            } else {
                emit(out, &format!("{}\n", nf.display(&g)))?;
            }
        }
        Command::Member { degree, truncate, word } => {
            if *degree == 0 {
                return Err(Failure::Usage("--degree must be at least 1".into()));
            }
            let n = truncate.unwrap_or(degree + 1);
            let w = parse_group_word(&g, word)?;
            let d = magnus::filtration_degree_of(&magnus::magnus_bounded(&g, &w, n, common.max_terms)?);
            let member = d.in_filtration(*degree);
            if json {
                emit_json(
                    out,
                    &json!({
                        "degree": degree,
                        "truncation": n,
                        "filtration_degree": filtration_json(d),
                        "member": member,
                    }),
                )?;
            } else {
                let mut s = format!("filtration degree: {d}\n");
                s.push_str(&format!("in D_{degree}: {}\n", if member { "yes" } else { "no" }));
                let next = degree + 1;
                let verdict = if d.in_filtration(next) {
                    "yes"
                } else if d.not_in_filtration(next) {
                    "no"
                } else {
                    "undetermined"
                };
                s.push_str(&format!("in D_{next}: {verdict}\n"));
                emit(out, &s)?;
            }
        }
        Command::Coords { degree, truncate, word } => {
            if *degree == 0 {
                return Err(Failure::Usage("--degree must be at least 1".into()));
            }
            let n = truncate.unwrap_or(degree + 1);
            let w = parse_group_word(&g, word)?;
            let basis = LyndonBasis::new(Arc::clone(&g));
            let mu = magnus::magnus_bounded(&g, &w, n, common.max_terms)?;
            let coords = magnus::lcs_coordinates_of(&basis, &mu, *degree)?;
            if json {
                emit_json(out, &coords.to_document(&g))?;
            } else {
                emit(out, &coordinates_text(&g, &basis, &coords)?)?;
            }
        }
        Command::Structure { left, right } => {
            let basis = LyndonBasis::new(Arc::clone(&g));
            let a = basis.tree(&parse_trace(&g, left)?)?;
            let b = basis.tree(&parse_trace(&g, right)?)?;
            let coords = basis.structure_constants(&a, &b)?;
            if json {
                emit_json(out, &coords.to_document(&g))?;
            } else {
                let mut s = format!("[{},{}] =\n", a.bracket(&g), b.bracket(&g));
                s.push_str(&coordinates_text(&g, &basis, &coords)?);
                emit(out, &s)?;
            }
        }
        Command::VerifySeries { max_deg } => {
            if *max_deg == 0 {
                return Err(Failure::Usage("--max-deg must be at least 1".into()));
            }
            let report = witt_product_check(&g, *max_deg)?;
            if json {
                emit_json(out, &report)?;
            } else {
                emit(
                    out,
                    &format!(
                        "lyndon ranks: {}\nproduct: {}\ngrowth:  {}\nequal: {}\n",
                        report.ranks.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
                        report.lhs.join(" "),
                        report.rhs.join(" "),
                        report.equal
                    ),
                )?;
            }
            if !report.equal {
                return Ok(2);
            }
        }
    }
    Ok(0)
}
