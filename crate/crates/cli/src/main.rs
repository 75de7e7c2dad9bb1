use std::io::Write;
use std::process::ExitCode;

use anyhow::Result;
use clap::Parser;
use kocalc::emit::{self, Format, Row};
use kocalc::spec::{parse_space_spec, Family, SpaceSpec};
use kocalc::{check, expand_range, load_space, parse_range, space_label, tables, TwistSelector};
use kocalc_core::dga_cohomology::cohomology_representatives;
use kocalc_core::SpaceData;
use rayon::prelude::*;
use serde_json::json;

/// KO, Grothendieck-Witt and Witt groups of complex cellular varieties.
#[derive(Parser, Debug)]
#[command(name = "kocalc", version)]
struct Args {
    /// cp:N, gr:M,N, lg:N, quadric:N, spinor:N, eiii, evii, point or file:PATH;
    /// a bare family name together with --range
    #[arg(long)]
    space: String,
    /// twist name, or `all` for every declared twist [default: trivial]
    #[arg(long)]
    twist: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// compare against the closed-form tables and report mismatching cells
    #[arg(long)]
    check: bool,
    /// print cocycle representatives of the twisted Sq² cohomology
    #[arg(long, conflicts_with = "betti")]
    representatives: bool,
    /// print the mod-2 Betti numbers only
    #[arg(long)]
    betti: bool,
    /// inclusive parameter range `a..b` for batch mode
    #[arg(long)]
    range: Option<String>,
}

enum Output {
    Tables {
        rows: Vec<Row>,
        mismatches: Vec<String>,
    },
    Betti(String, Vec<(u32, usize)>),
    Representatives(String, Vec<(String, u32, Vec<String>)>),
}

fn specs(args: &Args) -> Result<Vec<SpaceSpec>> {
    match &args.range {
        Some(range) => {
            let (lo, hi) = parse_range(range)?;
            let ids = expand_range(args.space.trim(), lo, hi)?;
            Ok(ids
                .into_iter()
                .map(|id| SpaceSpec {
                    family: Family::Catalog(id),
                    twist: None,
                })
                .collect())
        }
        None => Ok(vec![parse_space_spec(&args.space)?]),
    }
}

fn twist_names(space: &SpaceData, selector: &TwistSelector) -> Vec<Option<String>> {
    match selector {
        TwistSelector::Trivial => vec![None],
        TwistSelector::Named(n) => vec![Some(n.clone())],
        TwistSelector::All => space
            .twist_labels()
            .into_iter()
            .map(|s| Some(s.to_string()))
            .collect(),
    }
}

fn run_one(args: &Args, spec: &SpaceSpec) -> Result<Output> {
    let space = load_space(&spec.family)?;
    let selector = TwistSelector::parse(args.twist.as_deref().or(spec.twist.as_deref()));
    let label = space_label(&space);
    if args.betti {
        return Ok(Output::Betti(label, space.presentation().poincare_dims()));
    }
    if args.representatives {
        let p = space.presentation();
        let mut out = Vec::new();
        for twist in twist_names(&space, &selector) {
            let (name, d) = space.differential(twist.as_deref())?;
            for degree in (0..=p.top_degree()).step_by(2) {
                let reps: Vec<String> = cohomology_representatives(p, d, degree)
                    .iter()
                    .map(|r| p.format_element(r))
                    .collect();
                if !reps.is_empty() {
                    out.push((name.to_string(), degree, reps));
                }
            }
        }
        return Ok(Output::Representatives(label, out));
    }
    let rows = tables(&space, &selector)?;
    let mut mismatches = Vec::new();
    if args.check {
        for r in &rows {
            for m in check(&space, &r.table)? {
                mismatches.push(format!("{} twist {}: {m}", r.space, r.table.twist_label));
            }
        }
    }
    Ok(Output::Tables { rows, mismatches })
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

/// `Ok(false)` when some item failed or a check found a mismatch.
fn run(args: &Args) -> Result<bool> {
    let specs = specs(args)?;
    let results: Vec<Result<Output>> = specs.par_iter().map(|s| run_one(args, s)).collect();

    let mut ok = true;
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    let mut extra = String::new();
    let mut csv_header: &[&str] = &[];
    let mut csv_records: Vec<Vec<String>> = Vec::new();
    for (spec, result) in specs.iter().zip(results) {
        match result {
            Err(e) => {
                ok = false;
                eprintln!("error: {}: {e:#}", describe(spec));
            }
            Ok(Output::Tables {
                rows: r,
                mismatches: m,
            }) => {
                rows.extend(r);
                mismatches.extend(m);
            }
            Ok(Output::Betti(label, dims)) => match args.format {
                Format::Text => {
                    let cols: Vec<String> = dims.iter().map(|(d, n)| format!("{d}:{n}")).collect();
                    extra.push_str(&format!("{label}  {}\n", cols.join(" ")));
                }
                Format::Csv => {
                    csv_records.extend(
                        dims.iter()
                            .map(|(d, n)| vec![label.clone(), d.to_string(), n.to_string()]),
                    );
                    csv_header = &["space", "degree", "dim"];
                }
                Format::Json => {
                    let betti: Vec<usize> = dims.iter().map(|(_, n)| *n).collect();
                    extra.push_str(&format!("{}\n", json!({ "space": label, "betti": betti })));
                }
            },
            Ok(Output::Representatives(label, reps)) => match args.format {
                Format::Text => {
                    for (twist, degree, classes) in reps {
                        extra.push_str(&format!(
                            "{label} twist {twist} H^{degree}: {}\n",
                            classes.join(", ")
                        ));
                    }
                }
                Format::Csv => {
                    for (twist, degree, classes) in reps {
                        for c in classes {
                            csv_records.push(vec![
                                label.clone(),
                                twist.clone(),
                                degree.to_string(),
                                c,
                            ]);
                        }
                    }
                    csv_header = &["space", "twist", "degree", "representative"];
                }
                Format::Json => {
                    for (twist, degree, classes) in reps {
                        let v = json!({ "space": label, "twist": twist, "degree": degree, "representatives": classes });
                        extra.push_str(&format!("{v}\n"));
                    }
                }
            },
        }
    }

    let mut stdout = std::io::stdout().lock();
    if !rows.is_empty() {
        stdout.write_all(emit::emit(&rows, args.format).as_bytes())?;
    }
    stdout.write_all(extra.as_bytes())?;
    if !csv_header.is_empty() {
        stdout.write_all(emit::csv_records(csv_header, &csv_records).as_bytes())?;
    }
    if args.check {
        for m in &mismatches {
            eprintln!("mismatch: {m}");
        }
        if mismatches.is_empty() && ok {
            eprintln!("check: {} table(s) agree with the closed forms", rows.len());
        }
        ok &= mismatches.is_empty();
    }
    Ok(ok)
}

fn describe(spec: &SpaceSpec) -> String {
    match &spec.family {
        Family::Catalog(id) => id.to_string(),
        Family::File(path) => format!("file:{}", path.display()),
    }
}
