//! `groupoid`: check, analyse and enumerate finite groupoids given as
//! structure-table files.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use groupoid_core::analysis::{is_group_bundle, isotropy_bundle, isotropy_group, missing_anchor};
use groupoid_core::constructions::{disjoint_union, Named};
use groupoid_core::{
    are_isomorphic, classify_structure, enumerate_groupoids, enumerate_groupoids_unpruned,
    parse_structure_file, to_structure_string, FiniteAlgebra, Groupoid,
};
use serde_json::json;

use report::Report;

#[derive(Parser)]
#[command(
    name = "groupoid",
    version,
    about = "Check, analyse and enumerate finite groupoids"
)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full check on a structure file. Exits 0 iff it is a groupoid.
    Check { file: PathBuf },
    /// List the groupoids of type (N;M) up to isomorphism (N <= 6).
    ClassifyType {
        n: usize,
        m: usize,
        /// Use the slow reference search that tries every table.
        #[arg(long)]
        unpruned: bool,
    },
    /// Find an isomorphism between two groupoids. Exits 0 iff one exists.
    Iso { first: PathBuf, second: PathBuf },
    /// Report whether every pair of units is joined by an element.
    Transitive { file: PathBuf },
    /// Print the isotropy group at one unit, or at every unit.
    Isotropy { file: PathBuf, unit: Option<usize> },
    /// Report the isotropy bundle and whether the groupoid is a group bundle.
    Bundle { file: PathBuf },
    /// Write the disjoint union of two groupoids.
    Union {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Emit a named construction: nul:<k>, zn:<k>, klein, s3, f42, k4-z4, e-z3, z2-z2.
    Gen {
        name: Named,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// A failure that ends the run with exit code 1.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<(Report, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((report, success)) => {
            report.print(cli.json);
            if success {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(Failure(message)) => {
            if cli.json {
                println!("{}", json!({ "error": message }));
            }
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}

fn read_algebra(path: &Path) -> Result<FiniteAlgebra, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse_structure_file(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn read_groupoid(path: &Path) -> Result<Groupoid, Failure> {
    let a = read_algebra(path)?;
    let verdict = classify_structure(&a);
    if !verdict.is_groupoid() {
        return Err(Failure(format!("{}: {verdict}", path.display())));
    }
    Ok(Groupoid::new(a)?)
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Check { file } => check(&file),
        Command::ClassifyType { n, m, unpruned } => classify_type(n, m, unpruned),
        Command::Iso { first, second } => iso(&first, &second),
        Command::Transitive { file } => transitive(&file),
        Command::Isotropy { file, unit } => isotropy(&file, unit),
        Command::Bundle { file } => bundle(&file),
        Command::Union {
            first,
            second,
            output,
        } => union(&first, &second, &output),
        Command::Gen { name, output } => generate(name, output.as_deref()),
    }
}

fn check(file: &Path) -> Outcome {
    let a = read_algebra(file)?;
    let verdict = classify_structure(&a);
    let mut report = Report::new();
    report.line(format!("type ({};{})", a.n(), a.m()));
    report.line(format!("level {}", verdict.level));
    report.line(verdict.to_string());
    let mut value = json!({
        "type": [a.n(), a.m()],
        "level": verdict.level,
        "groupoid": verdict.is_groupoid(),
        "message": verdict.to_string(),
        "diagnostic": verdict.diagnostic.map(|d| json!({
            "code": d.code,
            "witness": d.witness,
            "message": d.to_string(),
        })),
    });
    if verdict.is_groupoid() {
        report.blank();
        report.text(report::structure_maps(&a));
        value["structure_maps"] = json!({
            "u_left": a.u_left_values(),
            "u_right": a.u_right_values(),
            "inv": a.inv_values(),
        });
    }
    report.set_json(value);
    Ok((report, verdict.is_groupoid()))
}

fn classify_type(n: usize, m: usize, unpruned: bool) -> Outcome {
    let result = if unpruned {
        enumerate_groupoids_unpruned(n, m)?
    } else {
        enumerate_groupoids(n, m)?
    };
    let mut report = Report::new();
    let count = result.class_count();
    report.line(format!(
        "type ({n};{m}): {count} isomorphism class{} ({} labelled groupoids)",
        if count == 1 { "" } else { "es" },
        result.labelled_count
    ));
    let mut classes = Vec::new();
    for (i, (g, key)) in result.representatives.iter().zip(&result.keys).enumerate() {
        let name = result.witness_names[i].as_deref();
        report.blank();
        report.line(format!("class {}: {}", i + 1, name.unwrap_or("(unnamed)")));
        report.line(format!("key {key}"));
        report.text(to_structure_string(g));
        classes.push(json!({
            "name": name,
            "key": key.to_string(),
            "groupoid": g,
        }));
    }
    report.set_json(json!({
        "type": [n, m],
        "unpruned": unpruned,
        "class_count": count,
        "labelled_count": result.labelled_count,
        "classes": classes,
    }));
    Ok((report, true))
}

fn iso(first: &Path, second: &Path) -> Outcome {
    let (a, b) = (read_groupoid(first)?, read_groupoid(second)?);
    let found = are_isomorphic(&a, &b);
    let mut report = Report::new();
    match &found {
        Some(f) => report.line(format!("isomorphic: {f}")),
        None => report.line("not isomorphic"),
    }
    report.set_json(json!({
        "isomorphic": found.is_some(),
        "bijection": found.as_ref().map(|f| f.as_slice()),
    }));
    Ok((report, found.is_some()))
}

fn transitive(file: &Path) -> Outcome {
    let g = read_groupoid(file)?;
    let missing = missing_anchor(&g);
    let mut report = Report::new();
    match missing {
        None => report.line("transitive"),
        Some((u, v)) => report.line(format!(
            "not transitive: no element x with α(x) = {u}, β(x) = {v}"
        )),
    }
    report.set_json(json!({
        "transitive": missing.is_none(),
        "missing_anchor": missing.map(|(u, v)| [u, v]),
    }));
    Ok((report, true))
}

fn isotropy(file: &Path, unit: Option<usize>) -> Outcome {
    let g = read_groupoid(file)?;
    let units: Vec<usize> = match unit {
        Some(u) => vec![u],
        None => g.units().collect(),
    };
    let mut report = Report::new();
    let mut groups = Vec::new();
    for u in units {
        let group = isotropy_group(&g, u)?;
        if !groups.is_empty() {
            report.blank();
        }
        report.text(report::group(&group));
        groups.push(group);
    }
    report.set_json(json!({ "groups": groups }));
    Ok((report, true))
}

fn bundle(file: &Path) -> Outcome {
    let g = read_groupoid(file)?;
    let bundle = isotropy_bundle(&g);
    let group_bundle = is_group_bundle(&g);
    let mut report = Report::new();
    report.line(format!(
        "group bundle: {}",
        if group_bundle { "yes" } else { "no" }
    ));
    report.line(format!("Is(G) = {}", report::set(&bundle.elements)));
    for group in &bundle.groups {
        report.blank();
        report.text(report::group(group));
    }
    report.set_json(json!({
        "group_bundle": group_bundle,
        "elements": bundle.elements,
        "groups": bundle.groups,
    }));
    Ok((report, true))
}

fn union(first: &Path, second: &Path, output: &Path) -> Outcome {
    let (a, b) = (read_algebra(first)?, read_algebra(second)?);
    let joined = disjoint_union(&a, &b)?;
    write_file(output, &to_structure_string(&joined))?;
    let mut report = Report::new();
    let (n, m) = joined.type_pair();
    report.line(format!("wrote ({n};{m}) to {}", output.display()));
    report.set_json(json!({ "type": [n, m], "output": output.display().to_string() }));
    Ok((report, true))
}

fn generate(named: Named, output: Option<&Path>) -> Outcome {
    let g = named.build()?;
    let text = to_structure_string(&g);
    let mut report = Report::new();
    match output {
        Some(path) => {
            write_file(path, &text)?;
            report.line(format!(
                "wrote {} ({};{}) to {}",
                named.display_name(),
                g.n(),
                g.m(),
                path.display()
            ));
        }
        None => report.text(text),
    }
    report.set_json(json!({
        "name": named.to_string(),
        "display_name": named.display_name(),
        "type": [g.n(), g.m()],
        "output": output.map(|p| p.display().to_string()),
        "groupoid": g,
    }));
    Ok((report, true))
}
