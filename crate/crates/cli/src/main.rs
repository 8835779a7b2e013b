use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use hccrystal::crystal::{
    build_graph_with, component_with, is_highest_weight, reduced_words, weight, GraphOptions,
    DEFAULT_MAX_VERTICES,
};
use hccrystal::hc::{predict_series, series_json, series_table, HcContext};
use hccrystal::partitions::{bar_two_quotient, e_core, e_weight, phi, triangular_side};
use hccrystal::symbols::{
    find_e_period, fused_abacus, is_totally_periodic, reduce_canonically, symbol_of,
};
use hccrystal::verify::{run_check, VerifyOptions, CHECK_NAMES};
use hccrystal::{Bipartition, ChargedAbacus, ChargedBipartition, Error, Partition};

#[derive(Parser, Debug)]
#[command(
    name = "hccrystal",
    version,
    about = "Level-2 Fock space crystals and unipotent series predictions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a truncated crystal graph or one of its components.
    Crystal(CrystalArgs),
    /// Predict Harish-Chandra series of unipotent labels of size n.
    Hc(HcArgs),
    /// Report on a single object.
    Inspect {
        #[arg(value_enum)]
        kind: InspectKind,
        #[command(flatten)]
        args: InspectArgs,
    },
    /// Run a verification sweep, or `all` of them.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum InspectKind {
    Symbol,
    Abacus,
    Phi,
    Ecore,
    Hw,
}

#[derive(Args, Debug)]
struct CrystalArgs {
    #[arg(long)]
    e: usize,
    /// Charge as "c1,c2".
    #[arg(long, allow_hyphen_values = true, value_parser = parse_charge)]
    charge: (i64, i64),
    #[arg(long)]
    max_rank: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Restrict to the component of this highest weight bipartition.
    #[arg(long, allow_hyphen_values = true)]
    component: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct HcArgs {
    #[arg(long)]
    e: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct InspectArgs {
    #[arg(long)]
    e: Option<usize>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_charge)]
    charge: Option<(i64, i64)>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    bipartition: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    partition: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// One of the check names, or `all`.
    check: String,
    /// Comma separated list of e values.
    #[arg(long, value_delimiter = ',')]
    e: Option<Vec<usize>>,
    /// Comma separated list of t values.
    #[arg(long, value_delimiter = ',')]
    t: Option<Vec<usize>>,
    #[arg(long)]
    max_rank: Option<usize>,
    #[arg(long)]
    max_m: Option<usize>,
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failures that should exit with status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn parse_charge(text: &str) -> Result<(i64, i64), String> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| format!("expected \"c1,c2\", got {text:?}"))?;
    let num = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| format!("bad charge component {s:?}"))
    };
    Ok((num(a)?, num(b)?))
}

/// Library errors caused by bad input become usage errors.
fn lib(err: Error) -> anyhow::Error {
    match err {
        Error::Parse { .. } | Error::Parameter(_) => usage(err.to_string()),
        other => other.into(),
    }
}

fn required<T: Clone>(value: &Option<T>, flag: &str, kind: &str) -> anyhow::Result<T> {
    value
        .clone()
        .ok_or_else(|| usage(format!("inspect {kind} needs --{flag}")))
}

fn graph_options() -> anyhow::Result<GraphOptions> {
    let max_vertices = match std::env::var("CRYSTAL_MAX_VERTICES") {
        Ok(v) => v.trim().parse().map_err(|_| {
            usage(format!(
                "CRYSTAL_MAX_VERTICES must be a positive integer, got {v:?}"
            ))
        })?,
        Err(_) => DEFAULT_MAX_VERTICES,
    };
    Ok(GraphOptions {
        max_vertices,
        ..GraphOptions::default()
    })
}

fn emit(out: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_crystal(a: &CrystalArgs) -> anyhow::Result<()> {
    let options = graph_options()?;
    let graph = match &a.component {
        Some(label) => {
            let b: Bipartition = label.parse().map_err(lib)?;
            let root = ChargedBipartition::new(b, a.charge);
            component_with(&root, a.e, a.max_rank, &options).map_err(lib)?
        }
        None => build_graph_with(a.charge, a.e, a.max_rank, &options).map_err(lib)?,
    };
    let text = match a.format {
        Format::Dot => graph.to_dot(),
        Format::Json => graph.to_json(),
        Format::Text => graph.to_text(),
    };
    emit(&a.out, &text)
}

fn cmd_hc(a: &HcArgs) -> anyhow::Result<()> {
    HcContext::new(a.e, a.n).map_err(lib)?;
    let series = predict_series(a.n, a.e).map_err(lib)?;
    let text = match a.format {
        Format::Text => series_table(a.n, a.e, &series),
        Format::Json => series_json(a.n, a.e, &series),
        Format::Dot => bail!(usage("hc supports --format text or json")),
    };
    emit(&a.out, &text)?;
    let violations: usize = series.iter().map(|s| s.violations.len()).sum();
    if violations > 0 {
        bail!("{violations} predicted invariants violated");
    }
    Ok(())
}

fn push_block(s: &mut String, block: &str) {
    s.push_str(block);
    if !block.ends_with('\n') {
        s.push('\n');
    }
}

fn cmd_inspect(kind: InspectKind, a: &InspectArgs) -> anyhow::Result<bool> {
    let name = format!("{kind:?}").to_lowercase();
    let bipartition = || -> anyhow::Result<Bipartition> {
        required(&a.bipartition, "bipartition", &name)?
            .parse()
            .map_err(lib)
    };
    let partition = || -> anyhow::Result<Partition> {
        required(&a.partition, "partition", &name)?
            .parse()
            .map_err(lib)
    };
    let mut s = String::new();
    let mut ok = true;
    match kind {
        InspectKind::Symbol => {
            let b = bipartition()?;
            let charge = required(&a.charge, "charge", &name)?;
            let sym = symbol_of(&b, charge);
            let _ = writeln!(s, "symbol of {b} at charge ({}, {}):", charge.0, charge.1);
            push_block(&mut s, &sym.render());
            if let Some(e) = a.e {
                let fused = fused_abacus(&sym, e).map_err(lib)?;
                let _ = writeln!(s, "fused abacus (e = {e}):");
                push_block(&mut s, &fused.render());
                let _ = writeln!(s, "fused partition: {}", fused.partition());
                match find_e_period(&sym, e) {
                    Some(p) => {
                        let values: Vec<String> = p.values().map(|v| v.to_string()).collect();
                        let _ = writeln!(s, "{e}-period: {}", values.join(" "));
                    }
                    None => {
                        let _ = writeln!(s, "{e}-period: none");
                    }
                }
                let (end, steps) = reduce_canonically(&sym, e);
                for step in &steps {
                    let _ = writeln!(
                        s,
                        "({}) at {}: {} at ({}, {})",
                        step.kind,
                        step.j,
                        step.symbol.bipartition(),
                        step.symbol.charge().0,
                        step.symbol.charge().1
                    );
                }
                let terminal = fused_abacus(&end, e).map_err(lib)?;
                let _ = writeln!(
                    s,
                    "terminal: {} at ({}, {}), fused partition {}",
                    end.bipartition(),
                    end.charge().0,
                    end.charge().1,
                    terminal.partition()
                );
            }
        }
        InspectKind::Abacus => {
            let p = partition()?;
            let charge = a.charge.map_or(0, |c| c.0);
            let abacus = ChargedAbacus::new(charge, p.clone());
            let _ = writeln!(s, "abacus of {p} at charge {charge}:");
            push_block(&mut s, &abacus.render());
            let (t, mu) = bar_two_quotient(&p);
            let _ = writeln!(s, "2-core exponent t = {t}, barred 2-quotient {mu}");
        }
        InspectKind::Phi => {
            let t = required(&a.t, "t", &name)?;
            let _ = writeln!(s, "{}", phi(t, &bipartition()?));
        }
        InspectKind::Ecore => {
            let p = partition()?;
            let e = required(&a.e, "e", &name)?;
            if e < 2 {
                bail!(usage("--e must be at least 2"));
            }
            let core = e_core(&p, e);
            let _ = writeln!(s, "{e}-core: {core}");
            let _ = writeln!(s, "{e}-weight: {}", e_weight(&p, e));
            match triangular_side(&core) {
                Some(side) => {
                    let _ = writeln!(s, "core is the staircase of side {side}");
                }
                None => {
                    let _ = writeln!(s, "core is not a staircase");
                }
            }
        }
        InspectKind::Hw => {
            let b = bipartition()?;
            let charge = required(&a.charge, "charge", &name)?;
            let e = required(&a.e, "e", &name)?;
            if e < 3 || e % 2 == 0 {
                bail!(usage(format!("--e must be odd and at least 3, got {e}")));
            }
            let v = ChargedBipartition::new(b, charge);
            let by_operators = is_highest_weight(&v, e);
            let by_periods = is_totally_periodic(&symbol_of(&v.bipartition, charge), e);
            let yes = |x: bool| if x { "yes" } else { "no" };
            if by_operators == by_periods {
                let _ = writeln!(
                    s,
                    "highest weight: {} (both criteria agree)",
                    yes(by_operators)
                );
            } else {
                ok = false;
                let _ = writeln!(
                    s,
                    "highest weight: criteria disagree (operators: {}, periods: {})",
                    yes(by_operators),
                    yes(by_periods)
                );
            }
            let _ = writeln!(s, "weight: {}", weight(&v, e));
            for (i, w) in reduced_words(&v, e).iter().enumerate() {
                let _ = writeln!(s, "residue {i}: A^{} R^{}", w.alpha, w.beta);
            }
        }
    }
    emit(&a.out, &s)?;
    Ok(ok)
}

fn cmd_verify(a: &VerifyArgs) -> anyhow::Result<bool> {
    let names: Vec<&str> = if a.check == "all" {
        CHECK_NAMES.to_vec()
    } else if CHECK_NAMES.contains(&a.check.as_str()) {
        vec![a.check.as_str()]
    } else {
        bail!(usage(format!(
            "unknown check {:?}; known: all, {}",
            a.check,
            CHECK_NAMES.join(", ")
        )));
    };
    let options = VerifyOptions {
        es: a.e.clone(),
        ts: a.t.clone(),
        max_m: a.max_m,
        max_rank: a.max_rank,
        depth: a.depth,
        samples: a.samples,
        seed: a.seed,
    };
    let mut text = String::new();
    let mut all_passed = true;
    for name in names {
        let report = run_check(name, &options).map_err(lib)?;
        all_passed &= report.passed();
        let _ = writeln!(text, "{report}");
    }
    emit(&a.out, &text)?;
    Ok(all_passed)
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match &cli.command {
        Command::Crystal(a) => cmd_crystal(a).map(|()| true),
        Command::Hc(a) => cmd_hc(a).map(|()| true),
        Command::Inspect { kind, args } => cmd_inspect(*kind, args),
        Command::Verify(a) => cmd_verify(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) if err.is::<Usage>() => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
