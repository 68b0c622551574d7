pub mod args;
pub mod error;
pub mod report;
pub mod svg;
pub mod verify;

use std::io::Write;

use num::Zero;

use tropcount::counts::summarize_all;
use tropcount::paths::has_big_step;
use tropcount::subdivisions::{generate_subdivisions, is_irreducible};

use args::{Cli, Command, CountArgs, PathsArgs, RenderArgs, Suite, VerifyArgs};
use error::CliError;
use report::{build_report, cross_check, format_points, paths_json, report_json, report_text, PathRow};

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Count(a) => cmd_count(&a, out),
        Command::Paths(a) => cmd_paths(&a, out),
        Command::Render(a) => cmd_render(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
    }
}

fn check_degree(d: u32) -> Result<(), CliError> {
    if d == 0 {
        return Err(CliError::Usage("degree must be at least 1".into()));
    }
    Ok(())
}

pub fn cmd_count(a: &CountArgs, out: &mut dyn Write) -> Result<(), CliError> {
    check_degree(a.degree)?;
    let report = build_report(a.degree, a.pipeline)?;
    if a.json {
        writeln!(out, "{}", report_json(&report))?;
    } else {
        write!(out, "{}", report_text(&report))?;
    }
    if a.cross_check {
        let values = cross_check(a.degree)?;
        if !a.json {
            let parts: Vec<String> = values.iter().map(|(p, v)| format!("{}={v}", p.name())).collect();
            writeln!(out, "cross-check ok: {}", parts.join(" "))?;
        }
    }
    Ok(())
}

pub fn cmd_paths(a: &PathsArgs, out: &mut dyn Write) -> Result<(), CliError> {
    check_degree(a.degree)?;
    let rows: Vec<PathRow> = summarize_all(a.degree)?
        .into_iter()
        .enumerate()
        .filter(|(_, s)| a.all || !s.multiplicity.is_zero())
        .filter(|(_, s)| !a.big_steps_only || has_big_step(&s.path))
        .map(|(id, s)| PathRow {
            id,
            points: s.path.points().to_vec(),
            contribution: s.multiplicity.clone().into(),
            multiplicity: s.multiplicity,
            subdivisions: s.subdivisions,
        })
        .collect();
    if a.json {
        writeln!(out, "{}", paths_json(a.degree, &rows))?;
        return Ok(());
    }
    let total: num::BigInt = rows.iter().map(|r| &r.multiplicity).sum();
    for r in &rows {
        writeln!(
            out,
            "{:>7}  {:>6}  {:>4}  {}",
            r.id,
            r.multiplicity,
            r.subdivisions,
            format_points(&r.points)
        )?;
    }
    writeln!(out, "{} paths, total multiplicity {total}", rows.len())?;
    Ok(())
}

pub fn cmd_render(a: &RenderArgs, out: &mut dyn Write) -> Result<(), CliError> {
    check_degree(a.degree)?;
    let paths = tropcount::paths::enumerate_paths(a.degree)?;
    let path = paths
        .get(a.path_id)
        .ok_or_else(|| CliError::Usage(format!("no path with id {} in degree {}", a.path_id, a.degree)))?;
    let subdivisions: Vec<_> = generate_subdivisions(path)?
        .into_iter()
        .filter(is_irreducible)
        .collect();
    let s = subdivisions.get(a.subdivision).ok_or_else(|| {
        CliError::Usage(format!(
            "path {} has {} subdivisions dual to irreducible curves, index {} requested",
            a.path_id,
            subdivisions.len(),
            a.subdivision
        ))
    })?;
    std::fs::write(&a.out, svg::render(s, a.path_id)).map_err(|e| CliError::Io(format!("{}: {e}", a.out.display())))?;
    writeln!(
        out,
        "wrote {} ({} triangles, {} parallelograms)",
        a.out.display(),
        s.triangles().count(),
        s.parallelograms().count()
    )?;
    Ok(())
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let line = match a.suite {
        Suite::Pick => verify::pick(a.trials, a.seed)?,
        Suite::Walls => verify::walls(a.trials, a.seed)?,
        Suite::Oracles => {
            check_degree(a.degree)?;
            verify::oracles(a.degree)?
        }
        Suite::Factors => {
            check_degree(a.degree)?;
            verify::factors(a.degree)?
        }
    };
    writeln!(out, "{line}")?;
    Ok(())
}
