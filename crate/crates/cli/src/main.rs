//! Command-line front end: runs the verification suites of the built-in
//! catalog and prints human- or machine-readable reports.
//!
//! Exit codes: 0 when every check passed, 1 when some check failed,
//! 2 on usage or load errors.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bialgebroid::catalog::{self, Flavor};
use bialgebroid::fileformat;
use bialgebroid::hopf::enumerate_characters;
use bialgebroid::report::Report;
use bialgebroid::suites;

#[derive(Parser)]
#[command(
    name = "bialgebroid",
    about = "Exact verification workbench for noncommutative principal bundles and their gauge bialgebroids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List or export catalog entries.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run a verification suite on a catalog entry.
    Verify {
        entry: String,
        /// kernel | hopf | galois | bialgebroid | antipode | gauge | crossed | all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Truncation degree for balanced-tensor checks.
        #[arg(long)]
        degree: Option<usize>,
        /// Entry parameters, repeatable: --param N=3 --param s=5
        #[arg(long = "param", value_parser = parse_kv)]
        params: Vec<(String, String)>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Enumerate the characters of the entry's structure Hopf algebra.
    Characters {
        entry: String,
        #[arg(long = "param", value_parser = parse_kv)]
        params: Vec<(String, String)>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify a user-supplied gauge transformation, given as
    /// generator=expression maps over the entry's total-space algebra.
    Gauge {
        entry: String,
        /// Repeatable: --map a=X*a --map c=X*c ... (one per generator).
        #[arg(long = "map", value_parser = parse_kv, required = true)]
        maps: Vec<(String, String)>,
        #[arg(long = "param", value_parser = parse_kv)]
        params: Vec<(String, String)>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a suite and emit the report in the requested format.
    Report {
        #[arg(long)]
        entry: String,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long = "param", value_parser = parse_kv)]
        params: Vec<(String, String)>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List the built-in entries.
    List,
    /// Emit the presentation bundle of an entry as JSON.
    Export {
        name: String,
        #[arg(long = "param", value_parser = parse_kv)]
        params: Vec<(String, String)>,
    },
}

fn parse_kv(s: &str) -> Result<(String, String), String> {
    match s.split_once('=') {
        Some((k, v)) => Ok((k.trim().to_string(), v.trim().to_string())),
        None => Err(format!("expected key=value, got `{}`", s)),
    }
}

fn params_map(params: &[(String, String)]) -> BTreeMap<String, String> {
    params.iter().cloned().collect()
}

fn render(report: &Report, format: Format) {
    match format {
        Format::Text => print!("{}", report.render_text()),
        Format::Json => println!("{}", report.render_json()),
    }
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                for (name, blurb) in catalog::list() {
                    println!("{:<16} {}", name, blurb);
                }
                Ok(ExitCode::SUCCESS)
            }
            CatalogAction::Export { name, params } => {
                let entry = catalog::get_example(&name, &params_map(&params))
                    .map_err(|e| e.to_string())?;
                let bundle = fileformat::export_bundle(
                    &entry.session,
                    &entry.ext,
                    entry.bialgebroid.generators(),
                    None,
                );
                println!(
                    "{}",
                    serde_json::to_string_pretty(&bundle).map_err(|e| e.to_string())?
                );
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Verify { entry, suite, degree, params, format }
        | Command::Report { entry, suite, degree, params, format } => {
            let e =
                catalog::get_example(&entry, &params_map(&params)).map_err(|e| e.to_string())?;
            let degree = degree.unwrap_or(e.default_degree.max(6));
            let report = suites::run_suite(&e, &suite, degree).map_err(|e| e.to_string())?;
            render(&report, format);
            if report.failed() == 0 {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Gauge { entry, maps, params, format } => {
            let e =
                catalog::get_example(&entry, &params_map(&params)).map_err(|e| e.to_string())?;
            let a = e.algebra().clone();
            let map: BTreeMap<String, String> = maps.into_iter().collect();
            let mut images = Vec::new();
            for g in a.generators() {
                let expr = map.get(g).ok_or_else(|| format!("missing --map {}=...", g))?;
                images.push(
                    bialgebroid::expr::parse_element(&e.session, &a, expr)
                        .map_err(|er| er.to_string())?,
                );
            }
            let mut report = Report::new(&e.name, "gauge-map", e.default_degree);
            match bialgebroid::gauge::GaugeTransformation::algebra(&e.ext, images) {
                Ok(f) => {
                    for (label, res) in f.verify() {
                        report.check(&label, "user-supplied gauge map", || res);
                    }
                }
                Err(er) => {
                    report.check("construction", "relation preservation", || Err(er.to_string()));
                }
            }
            report.finalize();
            render(&report, format);
            if report.failed() == 0 {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Characters { entry, params, format } => {
            let e =
                catalog::get_example(&entry, &params_map(&params)).map_err(|e| e.to_string())?;
            let hp = e.hopf().presentation().clone();
            let basis = hp.full_basis(64).ok_or_else(|| {
                "the structure Hopf algebra is not finite-dimensional".to_string()
            })?;
            let chars = enumerate_characters(&hp, |k| e.session.roots_of_unity(k), &basis)
                .map_err(|er| er.to_string())?;
            let hopf = e.hopf().clone();
            match format {
                Format::Text => {
                    println!("{} characters of {}", chars.len(), hp.name());
                    for (i, c) in chars.iter().enumerate() {
                        let values: Vec<String> = hp
                            .generators()
                            .iter()
                            .enumerate()
                            .map(|(g, name)| {
                                format!(
                                    "{} -> {}",
                                    name,
                                    c.value(&bialgebroid::kernel::Word::gen(g as u8))
                                )
                            })
                            .collect();
                        println!("  chi{}: {}", i, values.join(", "));
                    }
                    println!("convolution table:");
                    for (i, a) in chars.iter().enumerate() {
                        let mut row = Vec::new();
                        for b in chars.iter() {
                            let ab = a.convolve(b, &hopf, &basis);
                            let pos = chars.iter().position(|c| *c == ab);
                            row.push(match pos {
                                Some(p) => format!("chi{}", p),
                                None => "?".to_string(),
                            });
                        }
                        println!("  chi{} * . = [{}]", i, row.join(", "));
                    }
                    if matches!(e.flavor, Flavor::Taft { .. } | Flavor::SelfGalois { .. }) {
                        println!("group: cyclic of order {}", chars.len());
                    }
                }
                Format::Json => {
                    let mut chars_json = Vec::new();
                    for c in &chars {
                        let values: BTreeMap<String, String> = hp
                            .generators()
                            .iter()
                            .enumerate()
                            .map(|(g, name)| {
                                (
                                    name.clone(),
                                    format!(
                                        "{}",
                                        c.value(&bialgebroid::kernel::Word::gen(g as u8))
                                    ),
                                )
                            })
                            .collect();
                        chars_json.push(values);
                    }
                    let mut table = Vec::new();
                    for a in &chars {
                        let mut row = Vec::new();
                        for b in &chars {
                            let ab = a.convolve(b, &hopf, &basis);
                            row.push(chars.iter().position(|c| *c == ab));
                        }
                        table.push(row);
                    }
                    let out = serde_json::json!({
                        "entry": e.name,
                        "count": chars.len(),
                        "characters": chars_json,
                        "convolution_table": table,
                    });
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&out).map_err(|e| e.to_string())?
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    // Die quietly when the read end of a pipe goes away (e.g. `... | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
