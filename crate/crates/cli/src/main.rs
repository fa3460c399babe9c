use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qpart::enumerate::enumerate_by_statistic;
use qpart::identities::{registry_with, verify_many, write_csv, Grid, Identity};
use qpart::qseries::{Boulet, FamilyParams, MSeries, NamedSeries, Series, FORM_NAMES};
use qpart::weights::{decoration, weight};
use qpart::{ConstraintSpec, Partition, PresetParams, StatisticId, WeightId};

#[derive(Parser)]
#[command(name = "qpart", version, about = "Partition enumeration, q-series expansion and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// List the members of a set with a given statistic value.
    Enumerate {
        /// Preset name (U, D, D_e, D_o, Dl, RR1, RR2, PMkm, PleMkm, K, C1hat, C2hat, odd) or inline JSON.
        #[arg(long)]
        set: String,
        #[arg(long, default_value = "norm")]
        stat: String,
        #[arg(long)]
        value: u32,
        /// Also print this weight for each member.
        #[arg(long)]
        weight: Option<String>,
        /// Preset parameters, e.g. `M=3,k=1,m=2` or `l=2`.
        #[arg(long)]
        params: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Print every statistic and weight of a partition.
    Stats {
        partition: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Expand a named series, or the four-variable `psi` / `phi`.
    Expand {
        form: String,
        /// `M=..,k=..,m=..` for finite_rhs and corollary_sum (`M=inf` allowed for the latter).
        #[arg(long)]
        params: Option<String>,
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Verify one identity, a family (id prefix before `[`), or `all`.
    Verify {
        target: String,
        #[arg(long, default_value_t = 40)]
        order: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Report wall time per identity.
        #[arg(long)]
        timing: bool,
        /// Largest M in the finite_weighted and corollary_sum families.
        #[arg(long, default_value_t = 4)]
        max_parts: u32,
        /// Largest smallest-part bound k in those families.
        #[arg(long, default_value_t = 3)]
        max_smallest: u32,
        /// Largest gap bound m in those families.
        #[arg(long, default_value_t = 3)]
        max_gap: u32,
        /// Largest l in the weight_change family.
        #[arg(long, default_value_t = 3)]
        max_l: u32,
    },
    /// Draw the Ferrers diagram of a partition.
    Ferrers { partition: String },
    /// List identity ids with their equations, or the named series forms.
    List {
        #[arg(value_parser = ["identities", "forms"], default_value = "identities")]
        what: String,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::BufWriter::new(io::stdout().lock());
    let result = run(cli.command, &mut out);
    let flushed = out.flush();
    match result {
        Ok(()) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(()) => ExitCode::from(2),
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command, out: &mut impl Write) -> CmdResult {
    match cmd {
        Command::Enumerate { set, stat, value, weight, params, format } => {
            enumerate(out, &set, &stat, value, weight.as_deref(), params.as_deref(), format)
        }
        Command::Stats { partition, format } => stats(out, &partition, format),
        Command::Expand { form, params, order, format } => expand(out, &form, params.as_deref(), order, format),
        Command::Verify { target, order, format, timing, max_parts, max_smallest, max_gap, max_l } => {
            let grid = Grid { max_parts, smallest: 1..=max_smallest, gaps: 0..=max_gap, max_l };
            verify(out, &target, order, format, timing, &grid)
        }
        Command::Ferrers { partition } => {
            let p: Partition = partition.parse()?;
            write!(out, "{}", p.ferrers())?;
            Ok(())
        }
        Command::List { what } => {
            if what == "forms" {
                for name in FORM_NAMES.iter().chain(&["psi", "phi"]) {
                    writeln!(out, "{name}")?;
                }
            } else {
                for i in registry_with(&Grid::default()) {
                    let tag = if i.experimental { " (experimental)" } else { "" };
                    writeln!(out, "{}\t{}{}", i.id, i.label, tag)?;
                }
            }
            Ok(())
        }
    }
}

/// Parses `key=value` pairs separated by commas. `M` may be `inf`.
struct Params {
    parts: Option<Option<u32>>,
    smallest: Option<u32>,
    gap: Option<u32>,
    l: Option<u32>,
}

fn parse_params(s: Option<&str>) -> Result<Params, Failure> {
    let mut p = Params { parts: None, smallest: None, gap: None, l: None };
    let Some(s) = s else { return Ok(p) };
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (key, val) = item
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("parameter `{item}` is not key=value")))?;
        let num = || val.trim().parse::<u32>().map_err(|_| Failure::Usage(format!("bad value in `{item}`")));
        match key.trim() {
            "M" if matches!(val.trim(), "inf" | "∞") => p.parts = Some(None),
            "M" => p.parts = Some(Some(num()?)),
            "k" => p.smallest = Some(num()?),
            "m" => p.gap = Some(num()?),
            "l" => p.l = Some(num()?),
            other => return Err(Failure::Usage(format!("unknown parameter `{other}` (expected M, k, m, l)"))),
        }
    }
    Ok(p)
}

fn parse_spec(set: &str, params: &Params) -> Result<ConstraintSpec, Failure> {
    if set.trim_start().starts_with('{') {
        return Ok(set.parse()?);
    }
    let preset = PresetParams { parts: params.parts.flatten(), smallest: params.smallest, gap: params.gap, l: params.l };
    Ok(ConstraintSpec::preset(set, &preset)?)
}

fn enumerate(
    out: &mut impl Write,
    set: &str,
    stat: &str,
    value: u32,
    w: Option<&str>,
    params: Option<&str>,
    format: Format,
) -> CmdResult {
    let params = parse_params(params)?;
    let spec = parse_spec(set, &params)?;
    let stat: StatisticId = stat.parse()?;
    let w: Option<WeightId> = w.map(str::parse).transpose()?;
    let members = enumerate_by_statistic(&spec, stat, value)?;
    match format {
        Format::Table => {
            for p in &members {
                match w {
                    Some(w) => writeln!(out, "{p}\t{}", weight(w, p))?,
                    None => writeln!(out, "{p}")?,
                }
            }
        }
        Format::Json => {
            for p in &members {
                let mut row = json!({ "partition": p.parts(), "norm": p.norm() });
                if let Some(w) = w {
                    row["weight"] = json!(weight(w, p));
                }
                writeln!(out, "{row}")?;
            }
        }
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(&mut *out);
            let mut header = vec!["partition", "norm"];
            if w.is_some() {
                header.push("weight");
            }
            csv.write_record(&header)?;
            for p in &members {
                let parts: Vec<String> = p.parts().iter().map(u32::to_string).collect();
                let mut row = vec![parts.join(" "), p.norm().to_string()];
                if let Some(w) = w {
                    row.push(weight(w, p).to_string());
                }
                csv.write_record(&row)?;
            }
            csv.flush()?;
        }
    }
    Ok(())
}

fn stats(out: &mut impl Write, partition: &str, format: Format) -> CmdResult {
    let p: Partition = partition.parse()?;
    let mut rows: Vec<(String, String)> = vec![("partition".into(), p.to_string()), ("conjugate".into(), p.conjugate().to_string())];
    for s in StatisticId::ALL {
        rows.push((s.tag().into(), s.value(&p).to_string()));
    }
    let weights = [
        WeightId::Unit,
        WeightId::Omega { k: 0, m: 0 },
        WeightId::Omega { k: 1, m: 2 },
        WeightId::Omega { k: 2, m: 2 },
        WeightId::Tilde1,
        WeightId::Tilde2,
        WeightId::Hat1,
        WeightId::Sign,
    ];
    for w in weights {
        rows.push((format!("weight {w}"), weight(w, &p).to_string()));
    }
    let [a, b, c, d] = decoration(&p).exponents();
    rows.push(("decoration".into(), format!("a^{a} b^{b} c^{c} d^{d}")));
    match format {
        Format::Table => {
            let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
            for (k, v) in &rows {
                writeln!(out, "{k:<width$}  {v}")?;
            }
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("partition".into(), json!(p.parts()));
            obj.insert("conjugate".into(), json!(p.conjugate().parts()));
            for s in StatisticId::ALL {
                obj.insert(s.tag().into(), json!(s.value(&p)));
            }
            let ws: serde_json::Map<_, _> = weights.iter().map(|&w| (w.tag(), json!(weight(w, &p)))).collect();
            obj.insert("weights".into(), serde_json::Value::Object(ws));
            obj.insert("decoration".into(), json!([a, b, c, d]));
            writeln!(out, "{}", serde_json::Value::Object(obj))?;
        }
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(&mut *out);
            csv.write_record(["field", "value"])?;
            for (k, v) in &rows {
                csv.write_record([k, v])?;
            }
            csv.flush()?;
        }
    }
    Ok(())
}

fn expand(out: &mut impl Write, form: &str, params: Option<&str>, order: usize, format: Format) -> CmdResult {
    match form {
        "psi" => return write_mseries(out, &Boulet::Psi.expand(order)?, format),
        "phi" => return write_mseries(out, &Boulet::Phi.expand(order)?, format),
        _ => {}
    }
    let p = parse_params(params)?;
    let family = match (p.parts, p.smallest, p.gap) {
        (None, None, None) => None,
        (Some(parts), Some(k), Some(m)) => Some(FamilyParams::new(parts, k, m)),
        _ => return Err(Failure::Usage("--params needs all of M, k, m".into())),
    };
    let s = NamedSeries::parse(form, family)?.expand(order)?;
    write_series(out, &s, format)
}

fn write_series(out: &mut impl Write, s: &Series, format: Format) -> CmdResult {
    match format {
        Format::Table => {
            for (n, c) in s.coeffs().iter().enumerate() {
                writeln!(out, "{n}\t{c}")?;
            }
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string(s)?)?,
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(&mut *out);
            csv.write_record(["exponent", "coeff"])?;
            for (n, c) in s.coeffs().iter().enumerate() {
                csv.write_record([n.to_string(), c.to_string()])?;
            }
            csv.flush()?;
        }
    }
    Ok(())
}

fn write_mseries(out: &mut impl Write, m: &MSeries, format: Format) -> CmdResult {
    match format {
        Format::Table => {
            for (mono, c) in m.graded_terms() {
                writeln!(out, "{mono}\t{c}")?;
            }
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string(m)?)?,
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(&mut *out);
            csv.write_record(["a", "b", "c", "d", "coeff"])?;
            for (mono, c) in m.graded_terms() {
                let [a, b, cc, d] = mono.0;
                csv.write_record([a.to_string(), b.to_string(), cc.to_string(), d.to_string(), c.to_string()])?;
            }
            csv.flush()?;
        }
    }
    Ok(())
}

fn select(target: &str, grid: &Grid) -> Result<Vec<Identity>, Failure> {
    let all = registry_with(grid);
    if target == "all" {
        return Ok(all);
    }
    let chosen: Vec<Identity> = all
        .into_iter()
        .filter(|i| i.id == target || i.id.split_once('[').is_some_and(|(family, _)| family == target))
        .collect();
    if chosen.is_empty() {
        return Err(Failure::Usage(format!("unknown identity `{target}` (see `qpart list`)")));
    }
    Ok(chosen)
}

fn verify(out: &mut impl Write, target: &str, order: usize, format: Format, timing: bool, grid: &Grid) -> CmdResult {
    let idents = select(target, grid)?;
    let mut reports = verify_many(&idents, order);
    if !timing {
        reports = reports.into_iter().map(|r| r.without_timing()).collect();
    }
    match format {
        Format::Json => {
            for r in &reports {
                writeln!(out, "{}", r.to_json_line())?;
            }
        }
        Format::Csv => write_csv(&mut *out, &reports)?,
        Format::Table => {
            let width = reports.iter().map(|r| r.id.len()).max().unwrap_or(0);
            for r in &reports {
                write!(out, "{:<width$}  {:<8}  N={}", r.id, r.status.as_str(), r.order)?;
                if let Some(m) = &r.first_mismatch {
                    write!(out, "  first mismatch at {}: lhs {} rhs {}", m.exponent, m.lhs, m.rhs)?;
                }
                if let Some(e) = &r.error {
                    write!(out, "  error: {e}")?;
                }
                if let Some(ms) = r.ms {
                    write!(out, "  {ms} ms")?;
                }
                writeln!(out)?;
            }
        }
    }
    if reports.iter().all(|r| r.is_verified()) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
