//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a computation is refused (enumeration
//! bound, overflow) or a self-check fails, 2 on malformed input.

pub mod parse;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::amalgam::pushout;
use crate::decide::{self, enumerate_bases, is_base, selftest, Method};
use crate::error::{Error, Result};
use crate::group::{GroupElement, PointedGroup};
use crate::hom::Span;
use crate::subgroups::{all_subgroups, DEFAULT_BOUND};

pub use parse::{parse_element, parse_group};

/// Environment variable overriding the enumeration bound.
pub const BOUND_ENV: &str = "AMALGAM_BASES_BOUND";

#[derive(Debug, Parser)]
#[command(
    name = "amalgam-bases",
    version,
    about = "h-amalgamation bases of pointed finite abelian groups"
)]
pub struct Cli {
    /// Largest group order to enumerate exhaustively.
    #[arg(long, global = true, env = BOUND_ENV, default_value_t = DEFAULT_BOUND)]
    pub bound: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether (G, g) is an h-amalgamation basis.
    CheckBase {
        group: String,
        element: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// List every subgroup of G.
    Subgroups {
        group: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Build the pushout of a span read from a JSON file.
    Amalgamate { span_file: PathBuf },
    /// Tabulate all pointed groups up to an order.
    EnumerateBases {
        #[arg(long)]
        max_order: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Print the invariant-factor form of G.
    Canonical {
        group: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Cross-check both deciders on every pointed group up to an order.
    Selftest {
        #[arg(long, default_value_t = 36)]
        max_order: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Bruteforce,
    Structural,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Bruteforce => Method::Bruteforce,
            MethodArg::Structural => Method::Structural,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Jsonl,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoundExceeded { .. } | Error::Overflow | Error::DeciderDisagreement { .. } => 1,
        _ => 2,
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let bound = cli.bound;
    match &cli.command {
        Command::CheckBase {
            group,
            element,
            method,
            format,
        } => {
            let g = parse_group(group)?;
            let x = parse_element(element, &g)?;
            let pg = PointedGroup::new(g, x)?;
            let verdict = is_base(&pg, (*method).into(), bound)?;
            match format {
                Format::Json => writeln!(out, "{}", verdict.to_json())?,
                Format::Text => writeln!(out, "{pg} {verdict}")?,
            }
        }
        Command::Subgroups { group, format } => {
            let g = parse_group(group)?;
            let subs = all_subgroups(&g, bound)?;
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Entry {
                        order: u64,
                        generators: Vec<GroupElement>,
                        elements: Vec<GroupElement>,
                    }
                    #[derive(Serialize)]
                    struct Out {
                        group: String,
                        count: usize,
                        subgroups: Vec<Entry>,
                    }
                    let json = Out {
                        group: g.to_string(),
                        count: subs.len(),
                        subgroups: subs
                            .iter()
                            .map(|s| Entry {
                                order: s.order(),
                                generators: s.generators().to_vec(),
                                elements: s.elements().collect(),
                            })
                            .collect(),
                    };
                    writeln!(out, "{}", serde_json::to_string(&json)?)?;
                }
                Format::Text => {
                    writeln!(out, "{g}: {} subgroups", subs.len())?;
                    for s in &subs {
                        let elems: Vec<String> = s.elements().map(|e| e.to_string()).collect();
                        writeln!(
                            out,
                            "  order {:>3}  {s} = {{{}}}",
                            s.order(),
                            elems.join(", ")
                        )?;
                    }
                }
            }
        }
        Command::Amalgamate { span_file } => {
            let text = std::fs::read_to_string(span_file).map_err(|e| {
                Error::Io(std::io::Error::new(
                    e.kind(),
                    format!("{}: {e}", span_file.display()),
                ))
            })?;
            let span = Span::from_json(&text)?;
            let result = pushout(&span, bound)?;
            writeln!(out, "{}", result.to_json())?;
        }
        Command::EnumerateBases {
            max_order,
            method,
            format,
        } => {
            let rows = enumerate_bases(*max_order, (*method).into(), bound)?;
            match format {
                TableFormat::Csv => decide::write_csv(&rows, &mut *out)?,
                TableFormat::Jsonl => decide::write_jsonl(&rows, &mut *out)?,
            }
        }
        Command::Canonical { group, format } => {
            let g = parse_group(group)?;
            let canonical = g.canonical();
            match format {
                Format::Json => {
                    let json = serde_json::json!({
                        "group": g.to_string(),
                        "order": g.order(),
                        "invariant_factors": canonical.moduli(),
                        "canonical": canonical.to_string(),
                    });
                    writeln!(out, "{json}")?;
                }
                Format::Text => writeln!(out, "{g} ≅ {canonical}")?,
            }
        }
        Command::Selftest { max_order } => {
            let report = selftest(*max_order, bound)?;
            let disagreements: Vec<_> = report
                .disagreements
                .iter()
                .map(|d| {
                    serde_json::json!({
                        "group": d.group.to_string(),
                        "g": d.g,
                        "bruteforce": d.bruteforce,
                        "structural": d.structural,
                    })
                })
                .collect();
            let json = serde_json::json!({
                "max_order": max_order,
                "groups": report.groups,
                "cells": report.cells,
                "bases": report.bases,
                "witnesses_checked": report.witnesses_checked,
                "disagreements": disagreements,
                "invalid": report.invalid.len(),
                "passed": report.passed(),
            });
            writeln!(out, "{json}")?;
            return Ok(if report.passed() { 0 } else { 1 });
        }
    }
    Ok(0)
}
