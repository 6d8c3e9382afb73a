use std::fmt::Write as _;
use std::path::Path;

use bezout_subres::bench::{
    render_table, run_bench, run_bench_parallel, write_csv, BenchError, BenchSpec, DeltaSelection,
};
use bezout_subres::rat::rat;
use bezout_subres::{
    assemble, enumerate_deltas, finish, oracle_subresultant, parse_rat, DeltaIndex, Error,
    Formula, Poly, PolySystem, Rat, RootSystem,
};

use crate::CliError;

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

fn failure(e: impl ToString) -> CliError {
    CliError::Failure(e.to_string())
}

/// Comma-separated nonnegative integers, e.g. `2,2`.
pub fn parse_usize_list(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| usage(format!("'{s}' is not a nonnegative integer in '{text}'")))
        })
        .collect()
}

pub fn parse_rat_list(text: &str) -> Result<Vec<Rat>, CliError> {
    text.split(',')
        .map(|s| parse_rat(s).map_err(|e| usage(format!("'{s}': {e}"))))
        .collect()
}

/// Validates `values` against the system; every problem here is a usage error.
pub fn delta_for(system: &PolySystem, values: Vec<usize>) -> Result<DeltaIndex, CliError> {
    let delta = DeltaIndex::for_system(values, system).map_err(usage)?;
    if delta.is_zero() {
        return Err(usage(Error::DeltaZero));
    }
    Ok(delta)
}

pub fn compute(system: &PolySystem, delta: &str, formula: Formula) -> Result<Poly, CliError> {
    let delta = delta_for(system, parse_usize_list(delta)?)?;
    bezout_subres::subresultant(system, &delta, formula).map_err(failure)
}

#[derive(Debug, Default, Clone)]
pub struct CheckOptions {
    pub roots: Option<Vec<Rat>>,
    pub lc: Option<Rat>,
    /// Perturbs one entry of the hybrid matrix; used as a negative control.
    pub corrupt: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub text: String,
    pub passed: usize,
    pub total: usize,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

/// `deltas == None` means every valid nonzero δ.
pub fn check(
    polys: Vec<Poly>,
    deltas: Option<Vec<Vec<usize>>>,
    options: &CheckOptions,
) -> Result<CheckReport, CliError> {
    let roots = match &options.roots {
        Some(roots) => {
            let lc = options.lc.clone().unwrap_or_else(|| rat(1));
            let tail = polys.get(1..).unwrap_or_default().to_vec();
            Some(RootSystem::new(lc, roots.clone(), tail).map_err(usage)?)
        }
        None => None,
    };
    let system = match &roots {
        Some(rs) => rs.implied_system().map_err(usage)?,
        None => PolySystem::new(polys).map_err(failure)?,
    };
    let deltas = deltas.unwrap_or_else(|| enumerate_deltas(system.t(), system.d0()));
    let mut text = String::new();
    let mut passed = 0;
    for values in &deltas {
        let delta = delta_for(&system, values.clone())?;
        let mut results = Vec::with_capacity(4);
        for formula in Formula::ALL {
            let mut matrix = assemble(&system, &delta, formula).map_err(failure)?;
            if options.corrupt && formula == Formula::HybridBezout {
                let bumped = matrix.get(0, 0) + &Poly::one();
                matrix.set(0, 0, bumped);
            }
            results.push((formula.name(), finish(&system, &delta, formula, &matrix).map_err(failure)?));
        }
        if let Some(rs) = &roots {
            results.push(("oracle", oracle_subresultant(rs, &delta).map_err(failure)?));
        }
        let (_, reference) = &results[0];
        let mismatched: Vec<&str> = results[1..]
            .iter()
            .filter(|(_, v)| v != reference)
            .map(|(name, _)| *name)
            .collect();
        let label = values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        if mismatched.is_empty() {
            passed += 1;
            writeln!(text, "delta {label}: PASS  S = {reference}").unwrap();
        } else {
            writeln!(text, "delta {label}: FAIL  {} differ from bezout", mismatched.join(", ")).unwrap();
            for (name, value) in &results {
                writeln!(text, "    {name}: {value}").unwrap();
            }
        }
    }
    let sources = if roots.is_some() { "3 formulas + oracle" } else { "3 formulas" };
    writeln!(text, "{passed}/{} deltas PASS ({sources})", deltas.len()).unwrap();
    Ok(CheckReport {
        text,
        passed,
        total: deltas.len(),
    })
}

/// `all`, or one or more δ separated by `;`, e.g. `2,2;1,3`.
pub fn parse_delta_selection(text: &str) -> Result<DeltaSelection, CliError> {
    if text.trim() == "all" {
        return Ok(DeltaSelection::All);
    }
    text.split(';')
        .map(parse_usize_list)
        .collect::<Result<Vec<_>, _>>()
        .map(DeltaSelection::List)
}

pub fn bench(spec: &BenchSpec, jobs: usize, out: &Path) -> Result<String, CliError> {
    let records = if jobs > 1 {
        run_bench_parallel(spec, jobs)
    } else {
        run_bench(spec)
    }
    .map_err(|e| match e {
        BenchError::Spec(_) => usage(e),
        BenchError::Compute(
            Error::DeltaZero | Error::DeltaLength { .. } | Error::DeltaTooLarge { .. },
        ) => usage(e),
        other => failure(other),
    })?;
    write_csv(&records, out).map_err(failure)?;
    Ok(format!(
        "{}{} records written to {}\n",
        render_table(&records),
        records.len(),
        out.display()
    ))
}
