//! Batch front end over the verification suites: runs a selected driver,
//! renders its reports in text, json, or csv, and exits 0 only when every
//! selected check passed.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qseries::characters::{
    branching_check, collapse_checks, gr_module, string_presentation_checks,
    verify_strings_via_virasoro, verify_virasoro, ModuleId,
};
use qseries::identities::verify_filtered;
use qseries::lattices::{named_lattice, theta_closed, theta_enum};
use qseries::roots::verify_root_systems;
use qseries::series::{eq_to_order, Exp, VerificationReport};

#[derive(Parser)]
#[command(name = "qseries", version, about = "Exact q-series verification suites")]
struct Cli {
    /// Truncation order, as an integer or a fraction p/q.
    #[arg(long, global = true, default_value = "40", value_parser = parse_order)]
    order: Exp,

    /// Report rendering.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the identity registry, optionally filtered by id prefix.
    Verify {
        /// Comma-separated id prefixes, e.g. "prop3.10,thm".
        #[arg(long, value_delimiter = ',')]
        ids: Vec<String>,
    },
    /// Print the graded dimensions of one module.
    Gr {
        #[arg(long, value_parser = ModuleId::from_str)]
        module: ModuleId,
        /// Number of slices to print; also the truncation order used.
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        slices: u32,
    },
    /// Compare enumerated and closed-form lattice theta series.
    Theta,
    /// Check the two-factor decomposition of the vacuum module.
    Branch,
    /// Check string-function presentations, collapses, and character forms.
    Strings,
    /// Check root data, folding maps, and Weyl-orbit facts.
    Project,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn parse_order(s: &str) -> Result<Exp, String> {
    let v = Exp::from_str(s).map_err(|e| e.to_string())?;
    if v < Exp::from_integer(1) {
        return Err("order must be at least 1".into());
    }
    Ok(v)
}

#[derive(Serialize)]
struct DivergenceDto {
    exponent: String,
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
struct ReportDto {
    id: String,
    passed: bool,
    order: String,
    divergence: Option<DivergenceDto>,
}

fn dto(r: &VerificationReport) -> ReportDto {
    ReportDto {
        id: r.identity_id.clone(),
        passed: r.passed,
        order: r.order_checked.to_string(),
        divergence: r.first_divergence.as_ref().map(|d| DivergenceDto {
            exponent: d.exponent.to_string(),
            lhs: d.lhs.to_string(),
            rhs: d.rhs.to_string(),
        }),
    }
}

fn render_reports(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&r.summary_line());
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let dtos: Vec<ReportDto> = reports.iter().map(dto).collect();
            let mut out = serde_json::to_string_pretty(&dtos).expect("reports serialize");
            out.push('\n');
            out
        }
        Format::Csv => {
            let mut out = String::from("id,passed,order,exponent,lhs,rhs\n");
            for r in reports {
                let d = dto(r);
                let (e, l, h) = match &d.divergence {
                    Some(div) => (div.exponent.clone(), div.lhs.clone(), div.rhs.clone()),
                    None => (String::new(), String::new(), String::new()),
                };
                out.push_str(&format!("{},{},{},{},{},{}\n", d.id, d.passed, d.order, e, l, h));
            }
            out
        }
    }
}

fn theta_reports(t: Exp) -> qseries::Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for name in ["E8", "D4", "A2"] {
        let (lat, glues) = named_lattice(name)?;
        let mut runs = vec![(name.to_string(), vec![Exp::from_integer(0); lat.rank()])];
        runs.extend(glues.iter().map(|(s, v)| (format!("{name}{s}"), v.clone())));
        for (label, shift) in runs {
            let enumerated = theta_enum(&lat, &shift, Exp::from_integer(1), t)?;
            let closed = theta_closed(&label, t)?;
            out.push(eq_to_order(&enumerated, &closed, t, &format!("theta.{label}"))?);
        }
    }
    Ok(out)
}

fn string_reports(t: Exp) -> qseries::Result<Vec<VerificationReport>> {
    let mut out = string_presentation_checks(t)?;
    out.extend(collapse_checks(t)?);
    out.extend(verify_virasoro(t)?);
    out.extend(verify_strings_via_virasoro(t)?);
    Ok(out)
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let effective_order = match &cli.command {
        Command::Gr { slices, .. } => Exp::from_integer(*slices as i64),
        _ => cli.order,
    };
    if let Some(raw) = std::env::var_os("QSERIES_MAX_ORDER") {
        let cap = raw
            .to_str()
            .and_then(|s| Exp::from_str(s).ok())
            .ok_or("QSERIES_MAX_ORDER is not a rational number")?;
        if effective_order > cap {
            return Err(format!(
                "order {effective_order} exceeds QSERIES_MAX_ORDER {cap}"
            ));
        }
    }

    let (body, all_passed) = match &cli.command {
        Command::Verify { ids } => {
            let reports = verify_filtered(ids, cli.order).map_err(|e| e.to_string())?;
            let ok = reports.iter().all(|r| r.passed);
            (render_reports(&reports, cli.format), ok)
        }
        Command::Gr { module, slices } => {
            let gr = gr_module(*module, effective_order).map_err(|e| e.to_string())?;
            let coeffs: Vec<String> = (0..*slices)
                .map(|n| {
                    gr.coefficient(Exp::from_integer(n as i64))
                        .map(|c| c.to_string())
                        .map_err(|e| e.to_string())
                })
                .collect::<Result<_, _>>()?;
            let body = match cli.format {
                Format::Text => {
                    let mut out = format!("{module} graded dimensions\n");
                    for (n, c) in coeffs.iter().enumerate() {
                        out.push_str(&format!("slice {n}: {c}\n"));
                    }
                    out
                }
                Format::Json => {
                    #[derive(Serialize)]
                    struct Slice<'a> {
                        slice: usize,
                        coefficient: &'a str,
                    }
                    let rows: Vec<Slice> = coeffs
                        .iter()
                        .enumerate()
                        .map(|(slice, c)| Slice { slice, coefficient: c })
                        .collect();
                    let mut out = serde_json::to_string_pretty(&rows).expect("slices serialize");
                    out.push('\n');
                    out
                }
                Format::Csv => {
                    let mut out = String::from("slice,coefficient\n");
                    for (n, c) in coeffs.iter().enumerate() {
                        out.push_str(&format!("{n},{c}\n"));
                    }
                    out
                }
            };
            (body, true)
        }
        Command::Theta => {
            let reports = theta_reports(cli.order).map_err(|e| e.to_string())?;
            let ok = reports.iter().all(|r| r.passed);
            (render_reports(&reports, cli.format), ok)
        }
        Command::Branch => {
            let report = branching_check(cli.order).map_err(|e| e.to_string())?;
            let body = match cli.format {
                Format::Json => {
                    let order = if cli.order.is_integer() {
                        serde_json::json!(cli.order.to_integer())
                    } else {
                        serde_json::json!(cli.order.to_string())
                    };
                    let mut out = serde_json::to_string_pretty(
                        &serde_json::json!({ "passed": report.passed, "order": order }),
                    )
                    .expect("report serializes");
                    out.push('\n');
                    out
                }
                _ => render_reports(std::slice::from_ref(&report), cli.format),
            };
            (body, report.passed)
        }
        Command::Strings => {
            let reports = string_reports(cli.order).map_err(|e| e.to_string())?;
            let ok = reports.iter().all(|r| r.passed);
            (render_reports(&reports, cli.format), ok)
        }
        Command::Project => {
            let reports = verify_root_systems().map_err(|e| e.to_string())?;
            let ok = reports.iter().all(|r| r.passed);
            (render_reports(&reports, cli.format), ok)
        }
    };

    match &cli.output {
        Some(path) => fs::write(path, &body).map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => print!("{body}"),
    }
    Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
