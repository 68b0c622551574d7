//! Count reports and their JSON form.

use num::{BigInt, BigRational, Zero};
use serde::Serialize;

use tropcount::counts::{interior_points, n_via_corollary, summarize_all, PathSummary};
use tropcount::lattice::LatticePoint;

use crate::args::Pipeline;
use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathRow {
    pub id: usize,
    pub points: Vec<LatticePoint>,
    pub multiplicity: BigInt,
    pub subdivisions: usize,
    pub contribution: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunReport {
    pub degree: u32,
    pub pipeline: Pipeline,
    pub value: BigInt,
    pub paths: Vec<PathRow>,
    pub elapsed_ms: u128,
}

/// Decimal integer, or `p/q` for a proper fraction.
pub fn rational_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn row(id: usize, s: &PathSummary, contribution: BigRational) -> PathRow {
    PathRow {
        id,
        points: s.path.points().to_vec(),
        multiplicity: s.multiplicity.clone(),
        subdivisions: s.subdivisions,
        contribution,
    }
}

pub fn build_report(degree: u32, pipeline: Pipeline) -> Result<RunReport, CliError> {
    let start = std::time::Instant::now();
    if degree == 0 {
        return Err(CliError::Usage("degree must be at least 1".into()));
    }
    if pipeline == Pipeline::Corollary && degree < 3 {
        return Err(CliError::Usage("the corollary pipeline needs degree at least 3".into()));
    }
    let summaries = summarize_all(degree)?;
    let paths: Vec<PathRow> = match pipeline {
        Pipeline::Ntrop => summaries
            .iter()
            .enumerate()
            .map(|(i, s)| row(i, s, BigRational::from(s.multiplicity.clone())))
            .collect(),
        Pipeline::LargeJ => summaries
            .iter()
            .enumerate()
            .map(|(i, s)| row(i, s, s.large_j.clone()))
            .collect(),
        Pipeline::SmallJ => summaries
            .iter()
            .enumerate()
            .map(|(i, s)| row(i, s, s.small_j.clone()))
            .collect(),
        Pipeline::Corollary => n_via_corollary(degree)?
            .contributions
            .into_iter()
            .map(|(i, c)| row(i, &summaries[i], c))
            .collect(),
    };
    let total: BigRational = paths.iter().map(|p| p.contribution.clone()).sum();
    if !total.is_integer() {
        return Err(CliError::Verification(format!(
            "{} total {} is not an integer",
            pipeline.name(),
            rational_string(&total)
        )));
    }
    Ok(RunReport {
        degree,
        pipeline,
        value: total.to_integer(),
        paths,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Normalizes every pipeline to a count of rational curves and fails unless
/// they agree.
pub fn cross_check(degree: u32) -> Result<Vec<(Pipeline, BigInt)>, CliError> {
    let mut values = Vec::new();
    for p in [Pipeline::Ntrop, Pipeline::LargeJ, Pipeline::SmallJ, Pipeline::Corollary] {
        if p == Pipeline::Corollary && degree < 3 {
            continue;
        }
        values.push((p, build_report(degree, p)?.value));
    }
    let c = interior_points(degree);
    let n = values[0].1.clone();
    let expect = |p: Pipeline| match p {
        Pipeline::LargeJ | Pipeline::SmallJ => &n * &c,
        _ => n.clone(),
    };
    for (p, v) in &values {
        if *v != expect(*p) {
            return Err(CliError::Verification(format!(
                "{} gives {v}, expected {} from ntrop = {n}",
                p.name(),
                expect(*p)
            )));
        }
    }
    if c.is_zero() && values.iter().any(|(p, v)| *p != Pipeline::Ntrop && !v.is_zero()) {
        return Err(CliError::Verification(
            "elliptic counts must vanish below degree 3".into(),
        ));
    }
    Ok(values)
}

#[derive(Serialize)]
struct JsonPath {
    id: usize,
    points: Vec<[i64; 2]>,
    multiplicity: String,
    subdivisions: usize,
    contribution: String,
}

#[derive(Serialize)]
struct JsonReport {
    degree: u32,
    pipeline: &'static str,
    value: String,
    paths: Vec<JsonPath>,
}

fn json_path(p: &PathRow) -> JsonPath {
    JsonPath {
        id: p.id,
        points: p.points.iter().map(|q| [q.x, q.y]).collect(),
        multiplicity: p.multiplicity.to_string(),
        subdivisions: p.subdivisions,
        contribution: rational_string(&p.contribution),
    }
}

/// Timing is left out so that the output is byte-stable.
pub fn report_json(r: &RunReport) -> String {
    let doc = JsonReport {
        degree: r.degree,
        pipeline: r.pipeline.name(),
        value: r.value.to_string(),
        paths: r.paths.iter().map(json_path).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("report serializes")
}

pub fn paths_json(degree: u32, rows: &[PathRow]) -> String {
    #[derive(Serialize)]
    struct Listing {
        degree: u32,
        paths: Vec<JsonPath>,
    }
    let doc = Listing {
        degree,
        paths: rows.iter().map(json_path).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("listing serializes")
}

pub fn format_points(points: &[LatticePoint]) -> String {
    points.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("->")
}

const MAX_TABLE_ROWS: usize = 60;

pub fn report_text(r: &RunReport) -> String {
    let mut s = format!(
        "degree {}  pipeline {}  value {}\n",
        r.degree,
        r.pipeline.name(),
        r.value
    );
    let contributing: Vec<&PathRow> = r.paths.iter().filter(|p| !p.contribution.is_zero()).collect();
    s += &format!(
        "{} paths evaluated, {} contribute, {} ms\n",
        r.paths.len(),
        contributing.len(),
        r.elapsed_ms
    );
    if contributing.len() <= MAX_TABLE_ROWS {
        for p in contributing {
            s += &format!(
                "{:>7}  {:>12}  {:>4}  {}\n",
                p.id,
                rational_string(&p.contribution),
                p.subdivisions,
                format_points(&p.points)
            );
        }
    } else {
        s += "per-path breakdown omitted, use --json\n";
    }
    s
}
