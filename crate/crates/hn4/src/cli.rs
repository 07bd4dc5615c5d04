//! Command-line entry point: `analyze` for input files, `catalog` for the
//! built-in cases.
//!
//! Exit codes: 0 success, 1 validation/classification failure, 2 parse or
//! read error. Diagnostics go to stderr; reports go to stdout.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog;
use crate::classify::{classify, ClassifyError};
use crate::hnstruct::HNStructure;
use crate::liealg::LieAlgebra;
use crate::oracle;
use crate::parse::{parse_algebra_file, AlgebraFile};
use crate::report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_PARSE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "hn4",
    version,
    about = "Exact classification of hypercomplex Hermitian-Norden structures \
             on 4-dimensional Lie algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Additionally run the brute-force cross-checks and compare.
    #[arg(long, global = true)]
    pub oracle: bool,

    /// Suppress the report; only diagnostics and the exit code remain.
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse an algebra file, classify it, and emit a report.
    Analyze {
        /// Path to a file in the `dim = 4` / `bracket i j = ...` format.
        path: PathBuf,
    },
    /// List the built-in cases, or analyze one by name.
    Catalog {
        /// Case name (hc1, hc2a, hc2b, hc3a, hc3b, hc4a, hc4b, hc5a, hc5b).
        name: Option<String>,
        /// Analyze every built-in case.
        #[arg(long, conflicts_with = "name")]
        all: bool,
        /// Print the case in the input file format instead of analyzing it.
        #[arg(long, requires = "name")]
        export: bool,
    },
}

/// Runs a parsed command line against the given output streams and returns
/// the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match &cli.command {
        Command::Analyze { path } => {
            let text = match fs::read_to_string(path) {
                Ok(text) => text,
                Err(io) => {
                    let _ = writeln!(err, "error: cannot read {}: {io}", path.display());
                    return EXIT_PARSE;
                }
            };
            let file = match parse_algebra_file(&text) {
                Ok(file) => file,
                Err(parse_err) => {
                    let _ = writeln!(err, "error: {}: {parse_err}", path.display());
                    return EXIT_PARSE;
                }
            };
            let structure = match file.structure() {
                Ok(structure) => structure,
                Err(metric_err) => {
                    let _ = writeln!(err, "error: {metric_err}");
                    return EXIT_INVALID;
                }
            };
            let name = path.file_stem().and_then(|s| s.to_str()).map(str::to_owned);
            analyze(cli, name.as_deref(), &file.to_lie_algebra(), &structure, out, err)
        }
        Command::Catalog { name, all, export } => match (name, all) {
            (None, false) => {
                for (case_name, description) in catalog::list_cases() {
                    let _ = writeln!(out, "{case_name:6} {description}");
                }
                EXIT_OK
            }
            (None, true) => {
                let mut reports = Vec::new();
                for (case_name, _) in catalog::list_cases() {
                    let case = catalog::get_case(case_name).expect("listed case exists");
                    let h = HNStructure::standard();
                    match build_report(cli, Some(case_name), &case.algebra, &h, err) {
                        Ok(report) => reports.push(report),
                        Err(code) => return code,
                    }
                }
                if !cli.quiet {
                    match cli.format {
                        Format::Json => {
                            let _ = writeln!(
                                out,
                                "{}",
                                serde_json::to_string_pretty(&reports)
                                    .expect("report serialization cannot fail")
                            );
                        }
                        Format::Text => {
                            for report in &reports {
                                let _ = writeln!(out, "{}", report.render_text());
                            }
                        }
                    }
                }
                EXIT_OK
            }
            (Some(name), _) => {
                let Some(case) = catalog::get_case(name) else {
                    let known: Vec<&str> =
                        catalog::list_cases().iter().map(|(n, _)| *n).collect();
                    let _ = writeln!(
                        err,
                        "error: unknown catalog case `{name}`; known cases: {}",
                        known.join(", ")
                    );
                    return EXIT_INVALID;
                };
                if *export {
                    let file = AlgebraFile::from_algebra(&case.algebra, None);
                    let _ = write!(out, "{}", file.to_text(Some(case.description)));
                    return EXIT_OK;
                }
                let h = HNStructure::standard();
                analyze(cli, Some(name), &case.algebra, &h, out, err)
            }
        },
    }
}

fn analyze(
    cli: &Cli,
    name: Option<&str>,
    alg: &LieAlgebra,
    h: &HNStructure,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match build_report(cli, name, alg, h, err) {
        Ok(report) => {
            if !cli.quiet {
                match cli.format {
                    Format::Json => {
                        let _ = writeln!(out, "{}", report.to_json());
                    }
                    Format::Text => {
                        let _ = write!(out, "{}", report.render_text());
                    }
                }
            }
            EXIT_OK
        }
        Err(code) => code,
    }
}

fn build_report(
    cli: &Cli,
    name: Option<&str>,
    alg: &LieAlgebra,
    h: &HNStructure,
    err: &mut dyn Write,
) -> Result<Report, i32> {
    let classification = classify(alg, h).map_err(|classify_err| {
        match &classify_err {
            ClassifyError::InvalidAlgebra(validation) => {
                let _ = writeln!(err, "error: input is not a Lie algebra");
                for (i, j, k) in &validation.antisymmetry_violations {
                    let _ = writeln!(
                        err,
                        "  antisymmetry violated at c^{}_({},{})",
                        k + 1,
                        i + 1,
                        j + 1
                    );
                }
                for violation in &validation.jacobi_violations {
                    let (i, j, k) = violation.triple;
                    let _ = writeln!(
                        err,
                        "  Jacobi identity fails on (e_{}, e_{}, e_{}): cyclic sum = {:?}",
                        i + 1,
                        j + 1,
                        k + 1,
                        violation.residual
                    );
                }
            }
            ClassifyError::NotQuaternionic(check) | ClassifyError::Incompatible(check) => {
                let _ = writeln!(err, "error: structure checks failed");
                for failure in &check.failures {
                    let _ = writeln!(err, "  {failure}");
                }
            }
        }
        EXIT_INVALID
    })?;

    let oracle_report = cli.oracle.then(|| oracle::run_all(alg, h));
    if let Some(oracle_report) = &oracle_report {
        if !oracle_report.ok {
            let _ = writeln!(err, "error: oracle cross-checks disagree with the engine");
            for check in &oracle_report.checks {
                if !check.pass {
                    let _ = writeln!(
                        err,
                        "  {}: {}",
                        check.name,
                        check.detail.as_deref().unwrap_or("mismatch")
                    );
                }
            }
            return Err(EXIT_INVALID);
        }
    }
    Ok(Report::from_classification(name, &classification, oracle_report))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_to_strings(args: &[&str]) -> (i32, String, String) {
        let cli = Cli::try_parse_from(args).expect("argument parsing");
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&cli, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn catalog_listing() {
        let (code, out, _) = run_to_strings(&["hn4", "catalog"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().count(), 9);
        assert!(out.contains("hc3b"));
    }

    #[test]
    fn catalog_case_text_report() {
        let (code, out, _) = run_to_strings(&["hn4", "catalog", "hc1"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("combined class: K"));
    }

    #[test]
    fn catalog_case_json_report_with_oracle() {
        let (code, out, _) =
            run_to_strings(&["hn4", "catalog", "hc3b", "--format", "json", "--oracle"]);
        assert_eq!(code, EXIT_OK);
        let value: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(value["combined_label"], "W^0");
        assert_eq!(value["oracle"]["ok"], true);
    }

    #[test]
    fn unknown_case_fails_with_exit_one() {
        let (code, out, err) = run_to_strings(&["hn4", "catalog", "hc9"]);
        assert_eq!(code, EXIT_INVALID);
        assert!(out.is_empty());
        assert!(err.contains("unknown catalog case"));
    }

    #[test]
    fn quiet_suppresses_the_report() {
        let (code, out, _) = run_to_strings(&["hn4", "catalog", "hc2a", "--quiet"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.is_empty());
    }

    #[test]
    fn export_prints_the_file_format() {
        let (code, out, _) = run_to_strings(&["hn4", "catalog", "hc5a", "--export"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("dim = 4"));
        assert!(out.contains("bracket 3 4 = 1/2 e_2"));
        assert!(out.contains("structure = standard"));
    }

    #[test]
    fn catalog_all_emits_nine_reports() {
        let (code, out, _) = run_to_strings(&["hn4", "catalog", "--all", "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let value: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(value.as_array().unwrap().len(), 9);
    }
}
