//! Command-line front end.
//!
//! Every command builds a JSON value and a text rendering; `--format`
//! selects which one is printed. JSON output has sorted keys and no floating
//! point, so parsing and re-serializing it reproduces the same bytes. Big
//! integers are decimal strings.
//!
//! Exit status: 0 on success, 1 on an error from the library (reported as
//! `{"error": {"kind", "message"}}` on stdout) or when `verify` finds
//! failures, 2 on a usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, ErrorReport, Result};
use crate::fp::PrimeModulus;
use crate::irreducible::{
    exceptional_exclusion_threshold, irreducible_theorem_i, irreducible_theorem_ii, q_theorem,
    FieldProfile, UNRAMIFIED_EXCEPTIONAL_THRESHOLD,
};
use crate::oracle::{enumerate_subgroups, verify_enumeration, CheckSet, EnumerationMode};
use crate::reducible::{
    ap_table, ap_table_cells, classify_ap_family, combine_ap_pair, corollary_threshold,
    describe_outcome, lemma39_bound, nonramified_character_orders, oesterle_torsion_bound,
    orbit_lower_bound, render_ap_table_text, uniform_bound_reducible, ApFamily,
};
use crate::subgroups::{
    build_borel, build_nonsplit_cartan, build_split_cartan, classify, full_group, normalizer_of,
    special_linear, Subgroup,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BuildKind {
    SplitCartan,
    SplitNormalizer,
    NonsplitCartan,
    NonsplitNormalizer,
    Borel,
    Sl2,
    Gl2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    FullLattice,
    GenPairs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChecksArg {
    All,
    Classification,
    Homotheties,
}

#[derive(Debug, Parser)]
#[command(
    name = "homothety",
    version,
    about = "Subgroups of GL2(F_p) and homothety guarantees"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the subgroup generated by a generator file.
    Classify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Print generators of a named subgroup.
    Build {
        #[arg(value_enum)]
        kind: BuildKind,
        #[arg(long)]
        p: u64,
        /// Non-residue for the non-split Cartan (default: least non-residue).
        #[arg(long)]
        alpha: Option<i64>,
    },
    /// Bound formulas for a base field of degree d and class number h.
    Bound {
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 1)]
        h: u64,
        /// Least ramification index above p.
        #[arg(long, default_value_t = 1)]
        e: u64,
        /// Also evaluate the irreducible-case guarantees at this prime.
        #[arg(long)]
        p: Option<u64>,
    },
    /// The (e, r) -> a table of inertia exponents.
    ApTable,
    /// Combine two distinct inertia exponents.
    Combine {
        a1: u32,
        a2: u32,
        #[arg(long)]
        p: u64,
    },
    /// Casework for a comma-separated family of inertia exponents.
    Family {
        values: String,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        d: u64,
        #[arg(long, default_value_t = 1)]
        h: u64,
    },
    /// Run the subgroup oracle.
    Verify {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long, value_enum, default_value_t = ChecksArg::All)]
        checks: ChecksArg,
    },
    /// Lower bound on the Galois orbit of a point of order p.
    Orbit {
        #[arg(long)]
        p: u64,
    },
}

/// Result of one command: both renderings and whether it counts as success.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub text: String,
    pub success: bool,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report {
            json,
            text,
            success: true,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => canonical_json(&self.json),
            Format::Text => self.text.clone(),
        }
    }
}

/// Compact JSON with sorted keys, newline-terminated.
pub fn canonical_json(v: &Value) -> String {
    format!(
        "{}\n",
        serde_json::to_string(v).expect("values always serialize")
    )
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("plain data serializes")
}

fn prime(p: u64) -> Result<PrimeModulus> {
    PrimeModulus::new(p)
}

/// Tagged objects `{"kind": k, ...}` print as `k (field = value, ...)`.
fn scalar_text(x: &Value) -> String {
    match x {
        Value::String(t) => t.clone(),
        Value::Object(map) if map.contains_key("kind") => {
            let kind = scalar_text(&map["kind"]);
            let rest: Vec<String> = map
                .iter()
                .filter(|(k, v)| *k != "kind" && !v.is_null())
                .map(|(k, v)| format!("{k} = {}", scalar_text(v)))
                .collect();
            if rest.is_empty() {
                kind
            } else {
                format!("{kind} ({})", rest.join(", "))
            }
        }
        other => other.to_string(),
    }
}

fn key_value_text(v: &Value) -> String {
    let mut s = String::new();
    if let Value::Object(map) = v {
        for (k, x) in map {
            let shown = scalar_text(x);
            let _ = writeln!(s, "{k}: {shown}");
        }
    }
    s
}

fn named_subgroup(kind: BuildKind, p: PrimeModulus, alpha: Option<i64>) -> Result<Subgroup> {
    let alpha = match alpha {
        Some(a) => p.scalar(a),
        None => p
            .units()
            .find(|x| !x.is_quadratic_residue().expect("unit"))
            .expect("odd p has non-residues"),
    };
    match kind {
        BuildKind::SplitCartan => build_split_cartan(p),
        BuildKind::SplitNormalizer => normalizer_of(&build_split_cartan(p)?),
        BuildKind::NonsplitCartan => build_nonsplit_cartan(p, alpha),
        BuildKind::NonsplitNormalizer => normalizer_of(&build_nonsplit_cartan(p, alpha)?),
        BuildKind::Borel => build_borel(p),
        BuildKind::Sl2 => special_linear(p),
        BuildKind::Gl2 => full_group(p),
    }
}

/// Execute a parsed command.
pub fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Classify { input } => {
            let text = std::fs::read_to_string(input)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", input.display())))?;
            let g = Subgroup::from_generator_file(&text)?;
            let json = to_value(&classify(&g));
            let text = key_value_text(&json);
            Ok(Report::ok(json, text))
        }
        Command::Build { kind, p, alpha } => {
            let p = prime(*p)?;
            let g = named_subgroup(*kind, p, *alpha)?;
            let kind_name = kind
                .to_possible_value()
                .expect("named")
                .get_name()
                .to_string();
            let json = json!({
                "kind": kind_name,
                "p": p.as_u64(),
                "order": g.order(),
                "generators": g.generators().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            });
            Ok(Report::ok(json, g.to_generator_file()))
        }
        Command::Bound { d, h, e, p } => bound_report(*d, *h, *e, *p),
        Command::ApTable => {
            let cells = ap_table_cells();
            let invalid = ap_table().iter().filter(|c| !c.is_valid()).count();
            let json = json!({ "cells": to_value(&cells), "invalid_count": invalid });
            Ok(Report::ok(json, render_ap_table_text()))
        }
        Command::Combine { a1, a2, p } => {
            let q = prime(*p)?;
            let outcome = combine_ap_pair(*a1, *a2, q)?;
            let json = json!({ "a1": a1, "a2": a2, "p": p, "outcome": to_value(&outcome) });
            Ok(Report::ok(
                json,
                format!("{}\n", describe_outcome(&outcome)),
            ))
        }
        Command::Family { values, p, d, h } => {
            let q = prime(*p)?;
            let fam = ApFamily::parse(values)?;
            let profile = FieldProfile::new(*d, *h, 1, true)?;
            let outcome = classify_ap_family(&fam, q, &profile)?;
            let json = json!({
                "family": fam.values(),
                "p": p,
                "d": d,
                "h": h,
                "outcome": to_value(&outcome),
                "local_data": to_value(&nonramified_character_orders()),
            });
            Ok(Report::ok(
                json,
                format!("{}\n", describe_outcome(&outcome)),
            ))
        }
        Command::Verify { p, mode, checks } => {
            let q = prime(*p)?;
            let mode = match mode {
                Some(ModeArg::FullLattice) => EnumerationMode::FullLattice,
                Some(ModeArg::GenPairs) => EnumerationMode::GenPairs,
                None => EnumerationMode::default_for(*p),
            };
            let set = match checks {
                ChecksArg::All => CheckSet::All,
                ChecksArg::Classification => CheckSet::Classification,
                ChecksArg::Homotheties => CheckSet::Homotheties,
            };
            let result = verify_enumeration(&enumerate_subgroups(q, mode)?, set);
            let mut text = format!(
                "p = {} ({}): {} subgroups in {} conjugacy classes, {} failures\n",
                p,
                mode,
                result.subgroup_count,
                result.conjugacy_class_count,
                result.failures.len()
            );
            for f in &result.failures {
                let _ = writeln!(text, "  {}: <{}>", f.property, f.generators.join("; "));
            }
            Ok(Report {
                success: result.failures.is_empty(),
                json: to_value(&result),
                text,
            })
        }
        Command::Orbit { p } => {
            let n = orbit_lower_bound(*p)?;
            let json = json!({ "p": p, "orbit_lower_bound": n });
            Ok(Report::ok(json, format!("{n}\n")))
        }
    }
}

fn bound_report(d: u64, h: u64, e: u64, p: Option<u64>) -> Result<Report> {
    let profile = FieldProfile::new(d, h, e, e == 1)?;
    let dh = d
        .checked_mul(h)
        .and_then(|x| x.checked_mul(12))
        .ok_or_else(|| Error::Domain("d h too large".into()))?;
    let torsion = oesterle_torsion_bound(dh)?;
    let frob = lemma39_bound(d, h)?;
    let uniform = uniform_bound_reducible(d, h)?;
    let mut json = json!({
        "d": d,
        "h": h,
        "e": e,
        "exceptional_threshold_degree": exceptional_exclusion_threshold(d)?,
        "exceptional_threshold_ramification": exceptional_exclusion_threshold(e)?,
        "unramified_exceptional_threshold": UNRAMIFIED_EXCEPTIONAL_THRESHOLD,
        "torsion_bound": torsion.to_string(),
        "frobenius_bound": frob.to_string(),
        "uniform_bound": uniform.bound.to_string(),
        "corollary_threshold": corollary_threshold(d)?.to_string(),
        "warning": uniform.warning,
    });
    if let Some(q) = p {
        let q = prime(q)?;
        let obj = json.as_object_mut().expect("object");
        obj.insert("p".into(), json!(q.as_u64()));
        obj.insert(
            "irreducible_degree".into(),
            to_value(&irreducible_theorem_i(&profile, q)),
        );
        obj.insert(
            "irreducible_unramified".into(),
            to_value(&irreducible_theorem_ii(q, profile.p_unramified)),
        );
        if d == 1 {
            obj.insert("rational".into(), to_value(&q_theorem(q)));
        }
    }
    let text = key_value_text(&json);
    Ok(Report::ok(json, text))
}

/// Parse `args` (including the program name), run, and write the output.
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
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            let _ = out.write_all(report.render(cli.format).as_bytes());
            if report.success {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let json = json!({ "error": to_value(&ErrorReport::from(&e)) });
            let _ = out.write_all(canonical_json(&json).as_bytes());
            let _ = writeln!(err, "{e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("homothety").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn bound_json() {
        let (code, out) = run_args(&["bound", "--d", "1", "--h", "1", "--format", "json"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"532900\""));
        assert!(out.contains("\"6400\""));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&["bound"]).0, 2);
        assert_eq!(run_args(&["frobnicate"]).0, 2);
        assert_eq!(run_args(&[]).0, 2);
    }

    #[test]
    fn domain_errors_exit_1_with_json() {
        let (code, out) = run_args(&["combine", "0", "4", "--p", "13"]);
        assert_eq!(code, 1);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["error"]["kind"], "domain");
    }

    #[test]
    fn build_text_is_a_generator_file() {
        let (code, out) = run_args(&["build", "split-cartan", "--p", "7"]);
        assert_eq!(code, 0);
        assert_eq!(out, "7\n3 0 0 1\n1 0 0 3\n");
    }
}
