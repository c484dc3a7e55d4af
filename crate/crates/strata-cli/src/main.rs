//! Command-line front end: validate stratification data, glue topologies,
//! apply inter-stratum transfer maps, compute quantum-torus centers, and
//! export posets and models.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error.

mod dot;
mod expr;
mod schema;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use strata::catalog::{example, sl3, ExampleModel, EXAMPLE_NAMES};
use strata::qtorus::{CenterLattice, QTorus};
use strata::topology::{
    check_transfer_axioms, glue_topology, sample_closed_sets, ClosedSet, Glued, Space,
    StratificationData,
};

#[derive(Parser)]
#[command(name = "strata", version, about = "Stratified Zariski topologies, exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// Built-in model: oq_k2, oq_gl2, oq_m2, oq_sl3_poset
    #[arg(long, conflicts_with = "input")]
    catalog: Option<String>,
    /// Stratification data as JSON
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a model: poset axioms, transfer-map axioms, and (for
    /// finite data) the stratification conditions
    Check {
        #[command(flatten)]
        source: Source,
        /// Closed sets sampled per transfer map on variety strata
        #[arg(long, default_value_t = 16)]
        samples: usize,
        /// Seed for the sampled checks (fixed seed ⇒ identical output)
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Glue the topology described by the data
    Glue {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Apply the transfer map of a comparable pair to a closed set
    Phi {
        #[command(flatten)]
        source: Source,
        /// lower stratum label
        #[arg(long)]
        from: String,
        /// upper stratum label
        #[arg(long)]
        to: String,
        /// closed set: whole | empty | V(polys) | {points}
        #[arg(long)]
        set: String,
    },
    /// Kernel lattice (center) of a quantum torus from its q-commutation
    /// matrix
    Center {
        /// skew-symmetric integer matrix, e.g. "[[0,1],[-1,0]]"
        #[arg(long)]
        matrix: String,
        /// generator names, comma separated (default x1, x2, …)
        #[arg(long)]
        names: Option<String>,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Elements, heights, and cover pairs of a model's poset
    Poset {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Export a model as JSON or as a DOT Hasse diagram
    Export {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "json")]
        format: String,
        /// output path (stdout when omitted)
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

enum Loaded {
    Catalog(ExampleModel),
    File(String, StratificationData),
}

impl Loaded {
    fn name(&self) -> &str {
        match self {
            Loaded::Catalog(m) => &m.name,
            Loaded::File(name, _) => name,
        }
    }

    fn poset(&self) -> &strata::poset::Poset {
        match self {
            Loaded::Catalog(m) => &m.poset,
            Loaded::File(_, d) => &d.poset,
        }
    }

    fn data(&self) -> Option<StratificationData> {
        match self {
            Loaded::Catalog(m) => {
                if m.strata.is_empty() {
                    None // poset-only entry
                } else {
                    Some(m.to_stratification())
                }
            }
            Loaded::File(_, d) => Some(d.clone()),
        }
    }
}

fn load(source: &Source) -> Result<Loaded, String> {
    match (&source.catalog, &source.input) {
        (Some(name), None) => {
            let model = example(name).map_err(|e| e.to_string())?;
            Ok(Loaded::Catalog(model))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let json: schema::ModelJson =
                serde_json::from_str(&text).map_err(|e| format!("bad JSON: {e}"))?;
            let data = schema::data_from_json(&json)?;
            Ok(Loaded::File(json.name, data))
        }
        _ => Err(format!(
            "exactly one of --catalog or --input is required (catalog names: {})",
            EXAMPLE_NAMES.join(", ")
        )),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Check { source, samples, seed } => cmd_check(&source, samples, seed),
        Command::Glue { source, format } => cmd_glue(&source, &format),
        Command::Phi { source, from, to, set } => cmd_phi(&source, &from, &to, &set),
        Command::Center { matrix, names, format } => cmd_center(&matrix, names, &format),
        Command::Poset { source, format } => cmd_poset(&source, &format),
        Command::Export { source, format, output } => cmd_export(&source, &format, output),
    }
}

fn cmd_check(source: &Source, samples: usize, seed: u64) -> Result<ExitCode, String> {
    let loaded = load(source)?;
    let mut failures = 0usize;
    let line = |ok: bool, what: &str, failures: &mut usize| {
        if ok {
            println!("ok: {what}");
        } else {
            println!("FAIL: {what}");
            *failures += 1;
        }
    };

    let violations = loaded.poset().validate();
    if violations.is_empty() {
        line(true, "index relation is a partial order", &mut failures);
    } else {
        for v in &violations {
            line(false, &v.to_string(), &mut failures);
        }
    }

    if let Loaded::Catalog(model) = &loaded {
        if violations.is_empty() {
            let heights = loaded.poset().heights().map_err(|e| e.to_string())?;
            let consistent = loaded.poset().elements().iter().enumerate().all(|(i, l)| {
                model.hprime_height(l).map(|h| h == heights[i]).unwrap_or(false)
            });
            line(consistent, "heights equal the stored generator counts", &mut failures);
        }
        if model.name == "oq_sl3_poset" {
            for (sym, src, tgt) in sl3::listed_symmetry_instances() {
                let what = format!("{sym}({src}) = {tgt}");
                match sl3::symmetry_instance_check(sym, &src, &tgt) {
                    Ok(ok) => line(ok, &what, &mut failures),
                    Err(e) => line(false, &e.to_string(), &mut failures),
                }
            }
        }
    }

    if let Some(data) = loaded.data() {
        match data.validate() {
            Ok(()) => {
                line(true, "strata, transfer keys, and rings are consistent", &mut failures)
            }
            Err(e) => line(false, &e.to_string(), &mut failures),
        }
        if violations.is_empty() {
            for ((a, b), tm) in &data.transfers {
                let src = data.stratum(a).map_err(|e| e.to_string())?;
                let tgt = data.stratum(b).map_err(|e| e.to_string())?;
                let sets =
                    sample_closed_sets(src, samples, seed).map_err(|e| e.to_string())?;
                match check_transfer_axioms(tm, src, tgt, &sets) {
                    Ok(report) if report.passed() => line(
                        true,
                        &format!("transfer {a}→{b}: axioms hold on {} checks", report.checks),
                        &mut failures,
                    ),
                    Ok(report) => {
                        for f in &report.failures {
                            line(false, &format!("transfer {a}→{b}: {f}"), &mut failures);
                        }
                    }
                    Err(e) => {
                        line(false, &format!("transfer {a}→{b}: {e}"), &mut failures)
                    }
                }
            }
        }
    }

    if failures == 0 {
        println!("all checks passed");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("{failures} check(s) failed");
        Ok(ExitCode::from(1))
    }
}

fn cmd_glue(source: &Source, format: &str) -> Result<ExitCode, String> {
    let loaded = load(source)?;
    let data = loaded
        .data()
        .ok_or_else(|| format!("`{}` carries no strata to glue", loaded.name()))?;
    let glued = glue_topology(&data).map_err(|e| e.to_string())?;
    match glued {
        Glued::Finite(Space::Finite { points, closed, .. }) => {
            if format == "json" {
                let family: Vec<Vec<&String>> =
                    closed.iter().map(|c| c.iter().collect()).collect();
                let v = serde_json::json!({
                    "points": points.iter().collect::<Vec<_>>(),
                    "closed": family,
                });
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                println!(
                    "glued space: {} points, {} closed sets",
                    points.len(),
                    closed.len()
                );
                for c in &closed {
                    let names: Vec<&str> = c.iter().map(|s| s.as_str()).collect();
                    println!("  {{{}}}", names.join(", "));
                }
            }
        }
        Glued::Finite(_) => unreachable!("finite gluing yields a finite space"),
        Glued::Lazy(lazy) => {
            println!(
                "glued space over {} strata: closed sets are the transfer-compatible families (lazy membership test)",
                lazy.data.poset.len()
            );
            println!("whole-stratum closures:");
            for label in lazy.data.poset.elements() {
                let closure = lazy
                    .data
                    .glued_closure(label, &ClosedSet::Whole)
                    .map_err(|e| e.to_string())?;
                let parts: Vec<String> = lazy
                    .data
                    .poset
                    .elements()
                    .iter()
                    .map(|k| {
                        format!("{k}: {}", closure[k].render(lazy.data.stratum(k).unwrap()))
                    })
                    .collect();
                println!("  cl({label}) = [{}]", parts.join(", "));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_phi(source: &Source, from: &str, to: &str, set: &str) -> Result<ExitCode, String> {
    let loaded = load(source)?;
    let data = loaded
        .data()
        .ok_or_else(|| format!("`{}` carries no strata", loaded.name()))?;
    let src = data.stratum(from).map_err(|e| e.to_string())?;
    let tgt = data.stratum(to).map_err(|e| e.to_string())?;
    let tm = data
        .transfers
        .get(&(from.to_string(), to.to_string()))
        .ok_or_else(|| {
            format!("no transfer stored for ({from},{to}); strata must be comparable")
        })?;
    let y = match src {
        Space::Variety { ring, .. } => expr::parse_closed_set(ring, set)?,
        Space::Finite { .. } => expr::parse_finite_set(set)?,
    };
    let img = tm.apply(&y, src, tgt).map_err(|e| e.to_string())?;
    println!("{}", img.render(tgt));
    Ok(ExitCode::SUCCESS)
}

fn cmd_center(matrix: &str, names: Option<String>, format: &str) -> Result<ExitCode, String> {
    let m: Vec<Vec<i64>> =
        serde_json::from_str(matrix).map_err(|e| format!("bad matrix: {e}"))?;
    let torus = match names {
        Some(list) => {
            let names: Vec<String> = list.split(',').map(|s| s.trim().to_string()).collect();
            QTorus::new(names, m).map_err(|e| e.to_string())?
        }
        None => QTorus::anonymous(m).map_err(|e| e.to_string())?,
    };
    let lattice: CenterLattice = torus.center_lattice();
    if format == "json" {
        let v = serde_json::json!({
            "names": lattice.names(),
            "basis": lattice.basis(),
            "monomials": lattice.monomial_strings(),
        });
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
    } else {
        println!("center: {lattice}");
        if lattice.rank() > 0 {
            println!("monomials: {}", lattice.monomial_strings().join(", "));
        }
        for v in lattice.basis() {
            let coords: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            println!("basis: ({})", coords.join(", "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_poset(source: &Source, format: &str) -> Result<ExitCode, String> {
    let loaded = load(source)?;
    let poset = loaded.poset();
    let heights = poset.heights().map_err(|e| e.to_string())?;
    let covers = poset.covers().map_err(|e| e.to_string())?;
    match format {
        "dot" => print!("{}", dot::hasse_dot(loaded.name(), poset)?),
        "json" => {
            let elements: Vec<serde_json::Value> = poset
                .elements()
                .iter()
                .enumerate()
                .map(|(i, l)| serde_json::json!({ "label": l, "height": heights[i] }))
                .collect();
            let v = serde_json::json!({
                "name": loaded.name(),
                "elements": elements,
                "covers": covers,
            });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
        _ => {
            println!(
                "poset {}: {} elements, {} cover pairs",
                loaded.name(),
                poset.len(),
                covers.len()
            );
            for (i, l) in poset.elements().iter().enumerate() {
                println!("  {l} (height {})", heights[i]);
            }
            println!("covers:");
            for (a, b) in &covers {
                println!("  {a} < {b}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_export(
    source: &Source,
    format: &str,
    output: Option<PathBuf>,
) -> Result<ExitCode, String> {
    let loaded = load(source)?;
    // validate before writing anything
    let violations = loaded.poset().validate();
    if !violations.is_empty() {
        return Err(format!("refusing to export an invalid poset: {}", violations[0]));
    }
    let text = match format {
        "dot" => dot::hasse_dot(loaded.name(), loaded.poset())?,
        "json" => {
            let value = match &loaded {
                Loaded::Catalog(model) => schema::model_to_json(model)?,
                Loaded::File(name, data) => {
                    serde_json::to_value(schema::data_to_json(name, data)?)
                        .map_err(|e| e.to_string())?
                }
            };
            let mut s = serde_json::to_string_pretty(&value).map_err(|e| e.to_string())?;
            s.push('\n');
            s
        }
        other => return Err(format!("unknown format `{other}` (use json or dot)")),
    };
    match output {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loading_requires_exactly_one_source() {
        let none = Source { catalog: None, input: None };
        assert!(load(&none).is_err());
        let cat = Source { catalog: Some("oq_gl2".into()), input: None };
        assert!(load(&cat).is_ok());
        let bad = Source { catalog: Some("zzz".into()), input: None };
        assert!(load(&bad).is_err());
    }
}
