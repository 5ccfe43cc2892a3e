//! `chiclass`: exact Hirzebruch-class calculations from JSON job files.
//!
//! Exit codes: 0 success / verification PASS, 1 verification FAIL,
//! 2 input or schema error.

mod payload;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use chiclass::classes::{hirzebruch_class_smooth, virtual_class_via_dr, virtual_class_via_ty};
use chiclass::error::Error as EngineError;
use chiclass::nearby::{incl_excl_open, log_dr_trivial, motivic_nearby_degree0};
use chiclass::oracles::{chi_y_smooth_oracle, sheaf_euler_omega};
use chiclass::singularity::{chi_y_milnor_fiber, milnor_class_isolated, milnor_number, verify_cor2_degree0};
use chiclass::verify::run_check;
use chiclass::ypoly::YPoly;

use payload::{CiPayload, MilnorPayload, NearbyPayload, SpectrumPayload, VerifyPayload};
use report::{class_json, class_lines, poly_json, Format, Report, Verdict};

const DEFAULT_MAX_DIM: usize = 8;

#[derive(Parser)]
#[command(
    name = "chiclass",
    version,
    about = "Exact Hirzebruch characteristic classes, Milnor classes and nearby-cycle genera"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hirzebruch class T_y* of a smooth complete intersection
    Classes(JobArgs),
    /// Virtual Hirzebruch class by both routes, with route agreement checked
    Virtual(JobArgs),
    /// chi_y and the sheaf Euler characteristics chi(Omega^p) by the oracle
    #[command(name = "chi-y")]
    ChiY(JobArgs),
    /// Spectra and the Milnor class of isolated singularities
    Milnor(JobArgs),
    /// Steenbrink spectrum of weighted-homogeneous weights
    Spectrum(JobArgs),
    /// Nearby-cycle genus calculus on SNC resolution data
    Nearby(JobArgs),
    /// Named verification checks (series, prop14, ghrr, ..., all)
    Verify(JobArgs),
}

#[derive(Args)]
struct JobArgs {
    /// JSON job file
    #[arg(long)]
    input: PathBuf,
    /// Output format (may also be set by a "format" field in the file)
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Truncation order for series-level checks
    #[arg(long, default_value_t = 12)]
    order: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
}

pub struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError { message: message.into(), code: 2 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, args): (&'static str, &JobArgs) = match &cli.command {
        Command::Classes(a) => ("classes", a),
        Command::Virtual(a) => ("virtual", a),
        Command::ChiY(a) => ("chi-y", a),
        Command::Milnor(a) => ("milnor", a),
        Command::Spectrum(a) => ("spectrum", a),
        Command::Nearby(a) => ("nearby", a),
        Command::Verify(a) => ("verify", a),
    };
    match run(name, args) {
        Ok((report, format)) => {
            print!("{}", report.render(format));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(name: &'static str, args: &JobArgs) -> Result<(Report, Format), CliError> {
    let (value, file_format) = load_job(&args.input, name)?;
    let format = match (args.format, file_format) {
        (Some(FormatArg::Table), _) => Format::Table,
        (Some(FormatArg::Json), _) => Format::Json,
        (None, Some(f)) => f,
        (None, None) => Format::Table,
    };
    let max_dim = max_dim()?;
    let report = match name {
        "classes" => run_classes(value, max_dim)?,
        "virtual" => run_virtual(value, max_dim)?,
        "chi-y" => run_chi_y(value, max_dim)?,
        "milnor" => run_milnor(value, max_dim)?,
        "spectrum" => run_spectrum(value)?,
        "nearby" => run_nearby(value, max_dim)?,
        "verify" => run_verify(value, args.order)?,
        _ => unreachable!("clap restricts command names"),
    };
    Ok((report, format))
}

fn max_dim() -> Result<usize, CliError> {
    match std::env::var("CHICLASS_MAX_DIM") {
        Ok(s) => s.trim().parse::<usize>().map_err(|_| {
            CliError::input(format!("CHICLASS_MAX_DIM must be a positive integer, got {s:?}"))
        }),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

/// Read the job file, peel off the optional "command" and "format" fields,
/// and return the bare payload object.
fn load_job(path: &Path, expected: &str) -> Result<(Value, Option<Format>), CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    let mut value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::input(format!("invalid JSON in {}: {e}", path.display())))?;
    let obj = value
        .as_object_mut()
        .ok_or_else(|| CliError::input("the job file must be a JSON object"))?;
    if let Some(cmd) = obj.remove("command") {
        match cmd.as_str() {
            Some(c) if c == expected => {}
            Some(c) => {
                return Err(CliError::input(format!(
                    "field 'command': file says {c:?} but the subcommand is {expected:?}"
                )))
            }
            None => return Err(CliError::input("field 'command' must be a string")),
        }
    }
    let format = match obj.remove("format") {
        None => None,
        Some(Value::String(s)) if s == "table" => Some(Format::Table),
        Some(Value::String(s)) if s == "json" => Some(Format::Json),
        Some(other) => {
            return Err(CliError::input(format!(
                "field 'format': expected \"table\" or \"json\", got {other}"
            )))
        }
    };
    Ok((value, format))
}

fn parse_payload<T: serde::de::DeserializeOwned>(value: Value) -> Result<T, CliError> {
    serde_json::from_value(value).map_err(|e| CliError::input(format!("payload: {e}")))
}

fn echo<T: serde::Serialize>(payload: &T) -> Value {
    serde_json::to_value(payload).expect("payload reserializes")
}

fn specialization_lines(chi: &YPoly, report: &mut Report) {
    report.line(format!(
        "  y = -1 (Euler characteristic): {}",
        chi.eval_int(-1)
    ));
    report.line(format!("  y =  0 (arithmetic genus):    {}", chi.eval_int(0)));
    report.line(format!("  y =  1 (signature):           {}", chi.eval_int(1)));
}

fn specializations_json(chi: &YPoly) -> Value {
    json!({
        "euler": chi.eval_int(-1).to_string(),
        "arithmetic_genus": chi.eval_int(0).to_string(),
        "signature": chi.eval_int(1).to_string(),
    })
}

fn run_classes(value: Value, max_dim: usize) -> Result<Report, CliError> {
    let payload: CiPayload = parse_payload(value)?;
    let ci = payload.to_ci(max_dim)?;
    let mut report = Report::new("classes", echo(&payload));
    let class = hirzebruch_class_smooth(&ci)
        .map_err(|e| CliError::input(format!("engine: {e}")))?;
    let chi = class
        .degree_poly()
        .expect("smooth-route coefficients are polynomial");
    report.line(format!("T_y class of {ci} (smooth member, by homology degree):"));
    class_lines(&class, &mut report.lines);
    report.line(format!("chi_y = {chi}"));
    specialization_lines(&chi, &mut report);
    report.note(
        "genericity: the class is that of a smooth member of the linear system; \
         smoothness of a particular member is asserted by the caller, not checked",
    );
    report.result = json!({
        "variety": ci.to_string(),
        "class": class_json(&class),
        "chi_y": poly_json(&chi),
        "specializations": specializations_json(&chi),
    });
    Ok(report)
}

fn run_virtual(value: Value, max_dim: usize) -> Result<Report, CliError> {
    let payload: CiPayload = parse_payload(value)?;
    let ci = payload.to_ci(max_dim)?;
    let mut report = Report::new("virtual", echo(&payload));
    let via_ty = virtual_class_via_ty(&ci)
        .map_err(|e| CliError::input(format!("engine: {e}")))?;
    match virtual_class_via_dr(&ci) {
        Ok(via_dr) => {
            let agree = via_dr == via_ty;
            let chi = via_ty.degree_poly().expect("polynomial degree part");
            report.line(format!("virtual T_y class of {ci} (by homology degree):"));
            class_lines(&via_ty, &mut report.lines);
            report.line(format!("degree-0 part: {chi}"));
            specialization_lines(&chi, &mut report);
            report.line(if agree {
                "route agreement (Lambda_y/Todd vs Q_y): exact".to_string()
            } else {
                "route agreement (Lambda_y/Todd vs Q_y): MISMATCH".to_string()
            });
            report.verdict = Some(if agree { Verdict::Pass } else { Verdict::Fail });
            report.result = json!({
                "variety": ci.to_string(),
                "class": class_json(&via_ty),
                "degree_0": poly_json(&chi),
                "specializations": specializations_json(&chi),
                "routes_agree": agree,
            });
        }
        Err(EngineError::NotPolynomial { num, denom_pow }) => {
            report.line(format!(
                "polynomiality FAILED: offending coefficient ({num})/(1+y)^{denom_pow}"
            ));
            report.verdict = Some(Verdict::Fail);
            report.result = json!({
                "variety": ci.to_string(),
                "not_polynomial": format!("({num})/(1+y)^{denom_pow}"),
            });
        }
        Err(e) => return Err(CliError::input(format!("engine: {e}"))),
    }
    Ok(report)
}

fn run_chi_y(value: Value, max_dim: usize) -> Result<Report, CliError> {
    let payload: CiPayload = parse_payload(value)?;
    let ci = payload.to_ci(max_dim)?;
    let mut report = Report::new("chi-y", echo(&payload));
    let chi = chi_y_smooth_oracle(&ci).map_err(|e| CliError::input(format!("oracle: {e}")))?;
    report.line(format!("sheaf-Euler oracle for {ci}:"));
    let mut sheaves = Vec::new();
    for p in 0..=ci.dim_x() {
        let v = sheaf_euler_omega(&ci, p).expect("p in range");
        report.line(format!("  chi(Omega^{p}) = {v}"));
        sheaves.push(v.to_string());
    }
    report.line(format!("chi_y = {chi}"));
    specialization_lines(&chi, &mut report);
    report.result = json!({
        "variety": ci.to_string(),
        "sheaf_euler": sheaves,
        "chi_y": poly_json(&chi),
        "specializations": specializations_json(&chi),
    });
    Ok(report)
}

fn run_milnor(value: Value, max_dim: usize) -> Result<Report, CliError> {
    let payload: MilnorPayload = parse_payload(value)?;
    let ci_payload = CiPayload {
        ambient: payload.ambient.clone(),
        degrees: payload.degrees.clone(),
    };
    let ci = ci_payload.to_ci(max_dim)?;
    let mut report = Report::new("milnor", echo(&payload));
    let sings = payload
        .sings
        .iter()
        .enumerate()
        .map(|(i, s)| s.to_point(i))
        .collect::<Result<Vec<_>, _>>()?;

    let mut sing_json = Vec::new();
    report.line(format!("isolated singularities on {ci}:"));
    for s in &sings {
        let spectrum = s
            .spectrum()
            .map_err(|e| CliError::input(format!("field 'sings': {e}")))?;
        let mu = milnor_number(&spectrum);
        let chi_f = chi_y_milnor_fiber(&spectrum);
        report.line(format!(
            "  {}: spectrum: {spectrum}, mu: {mu}, chi_y: {chi_f}",
            s.label
        ));
        sing_json.push(json!({
            "label": s.label,
            "spectrum": spectrum.entries().iter()
                .flat_map(|(a, &m)| std::iter::repeat_n(a.to_string(), m as usize))
                .collect::<Vec<_>>(),
            "mu": mu,
            "chi_y_milnor_fiber": poly_json(&chi_f),
        }));
    }
    let milnor = milnor_class_isolated(&ci, &sings)
        .map_err(|e| CliError::input(format!("field 'sings': {e}")))?;
    report.line(format!("M_y (degree 0) = {milnor}"));

    let mut result = json!({
        "variety": ci.to_string(),
        "singularities": sing_json,
        "milnor_class_degree_0": poly_json(&milnor),
    });
    if let Some(chi_spec) = &payload.chi_y_of_x {
        let chi_x = chi_spec.to_poly()?;
        let residual = verify_cor2_degree0(&ci, &sings, &chi_x)
            .map_err(|e| CliError::input(format!("engine: {e}")))?;
        let ok = residual.is_zero();
        report.line(format!("chi_y of the singular member: {chi_x}"));
        report.line(format!(
            "degree-0 identity residual (virtual - actual - Milnor): {residual}"
        ));
        report.verdict = Some(if ok { Verdict::Pass } else { Verdict::Fail });
        result["verification"] = json!({
            "chi_y_of_x": poly_json(&chi_x),
            "residual": poly_json(&residual),
        });
    }
    report.result = result;
    Ok(report)
}

fn run_spectrum(value: Value) -> Result<Report, CliError> {
    let payload: SpectrumPayload = parse_payload(value)?;
    let weights = payload.to_weights()?;
    let mut report = Report::new("spectrum", echo(&payload));
    let spectrum = chiclass::spectrum_wh(&weights)
        .map_err(|e| CliError::input(format!("field 'weights': {e}")))?;
    let mu = milnor_number(&spectrum);
    let chi = chi_y_milnor_fiber(&spectrum);
    report.line(format!("spectrum: {spectrum}, mu: {mu}, chi_y: {chi}"));
    report.result = json!({
        "n": spectrum.n(),
        "spectrum": spectrum.entries().iter()
            .flat_map(|(a, &m)| std::iter::repeat_n(a.to_string(), m as usize))
            .collect::<Vec<_>>(),
        "mu": mu,
        "chi_y_milnor_fiber": poly_json(&chi),
    });
    Ok(report)
}

fn run_nearby(value: Value, max_dim: usize) -> Result<Report, CliError> {
    let payload: NearbyPayload = parse_payload(value)?;
    let mut report = Report::new("nearby", echo(&payload));
    match &payload {
        NearbyPayload::Resolution { components, strata, sigma_chi, sigma_cap_xprime_chi } => {
            let resolution = NearbyPayload::to_resolution(
                components,
                strata,
                sigma_chi,
                sigma_cap_xprime_chi,
            )?;
            let (psi, phi) = motivic_nearby_degree0(&resolution)
                .map_err(|e| CliError::input(format!("field 'strata': {e}")))?;
            report.line("SNC resolution strata:".to_string());
            let mut strata_json = Vec::new();
            for s in resolution.strata() {
                let ids: Vec<String> =
                    s.components.iter().map(|c| c.to_string()).collect();
                let m = resolution.cover_multiplicity(s);
                let open = incl_excl_open(&s.cover_pieces).expect("validated table");
                report.line(format!(
                    "  E_{{{}}}: m_I = {m}, open cover genus = {open}, over sigma: {}",
                    ids.join(","),
                    s.over_sigma
                ));
                strata_json.push(json!({
                    "components": s.components.iter().collect::<Vec<_>>(),
                    "cover_multiplicity": m,
                    "open_cover_genus": poly_json(&open),
                    "over_sigma": s.over_sigma,
                }));
            }
            report.line(format!("psi genus = {psi}"));
            report.line(format!("phi genus on sigma = {phi}"));
            report.note(
                "the compactified cover genera are input data; consistency across \
                 compactification choices is the input author's responsibility",
            );
            report.result = json!({
                "strata": strata_json,
                "psi": poly_json(&psi),
                "phi_on_sigma": poly_json(&phi),
            });
        }
        NearbyPayload::LogPair { ambient, divisors } => {
            let pair = NearbyPayload::to_log_pair(ambient, divisors, max_dim)?;
            match log_dr_trivial(&pair) {
                Ok(class) => {
                    let chi = class.degree_poly().expect("polynomial class");
                    report.line(
                        "T_y class of the open complement (logarithmic forms route):"
                            .to_string(),
                    );
                    class_lines(&class, &mut report.lines);
                    report.line(format!("degree-0 part: {chi}"));
                    report.result = json!({
                        "class": class_json(&class),
                        "degree_0": poly_json(&chi),
                    });
                }
                Err(EngineError::NotPolynomial { num, denom_pow }) => {
                    report.line(format!(
                        "polynomiality FAILED: offending coefficient ({num})/(1+y)^{denom_pow}"
                    ));
                    report.verdict = Some(Verdict::Fail);
                    report.result = json!({
                        "not_polynomial": format!("({num})/(1+y)^{denom_pow}"),
                    });
                }
                Err(e) => return Err(CliError::input(format!("engine: {e}"))),
            }
        }
        NearbyPayload::InclExcl { table } => {
            let parsed = table
                .iter()
                .map(|p| Ok((p.removed, p.chi.to_poly()?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            let chi = incl_excl_open(&parsed)
                .map_err(|e| CliError::input(format!("field 'table': {e}")))?;
            report.line(format!("inclusion-exclusion genus = {chi}"));
            report.result = json!({ "chi_c": poly_json(&chi) });
        }
    }
    Ok(report)
}

fn run_verify(value: Value, order: usize) -> Result<Report, CliError> {
    let payload: VerifyPayload = parse_payload(value)?;
    let mut report = Report::new("verify", echo(&payload));
    let n_max = payload.n_max.unwrap_or(5);
    let d_max = payload.d_max.unwrap_or(4);
    let checks = run_check(&payload.check, order, n_max, d_max)
        .map_err(|e| CliError::input(format!("field 'check': {e}")))?;
    let mut all_pass = true;
    let mut checks_json = Vec::new();
    for c in &checks {
        for case in &c.cases {
            report.line(format!(
                "  [{}] {}: {}",
                if case.passed { "PASS" } else { "FAIL" },
                case.label,
                case.detail
            ));
        }
        report.line(format!("check {} ({}): {}", c.name, c.description, c.summary()));
        all_pass &= c.passed();
        checks_json.push(json!({
            "name": c.name,
            "description": c.description,
            "summary": c.summary(),
            "passed": c.passed(),
            "cases": c.cases.iter().map(|case| json!({
                "label": case.label,
                "passed": case.passed,
                "detail": case.detail,
            })).collect::<Vec<_>>(),
        }));
    }
    if checks.len() == 1 {
        report.line(checks[0].summary());
    } else {
        report.line(if all_pass {
            format!("PASS (all {} checks exact)", checks.len())
        } else {
            "FAIL".to_string()
        });
    }
    report.verdict = Some(if all_pass { Verdict::Pass } else { Verdict::Fail });
    report.result = json!({ "checks": checks_json });
    Ok(report)
}
