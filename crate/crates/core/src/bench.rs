//! Timing harness: random integer systems, every δ in scope, each formula
//! split into matrix generation and determinant time.
//!
//! Every timed cell also checks that the three formulas agree; a benchmark
//! that measures a wrong answer fails instead of reporting.

use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::poly::Poly;
use crate::subres::{assemble, finish, subresultant};
use crate::system::{enumerate_deltas, join_dash, DeltaIndex, Formula, PolySystem};

pub const CSV_HEADER: &str = "formula,degrees,delta,trial,t_matrix_ns,t_det_ns,t_total_ns";

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error("invalid benchmark spec: {0}")]
    Spec(String),

    #[error(transparent)]
    Compute(#[from] Error),

    #[error(
        "formulas disagree (seed {seed}, degrees {degrees}, delta {delta}, trial {trial}): {detail}"
    )]
    Mismatch {
        seed: u64,
        degrees: String,
        delta: String,
        trial: usize,
        detail: String,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{}: {message}", path.display())]
    Csv { path: PathBuf, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeltaSelection {
    /// Every nonzero δ with |δ| <= d0, lexicographic.
    All,
    List(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchSpec {
    pub degrees: Vec<usize>,
    pub coeff_bound: u32,
    pub trials: usize,
    pub seed: u64,
    pub deltas: DeltaSelection,
}

impl BenchSpec {
    pub fn validate(&self) -> Result<(), BenchError> {
        if self.degrees.len() < 2 {
            return Err(BenchError::Spec("need at least two degrees".into()));
        }
        if self.degrees.iter().any(|&d| d > self.degrees[0]) {
            return Err(BenchError::Spec("first degree must be maximal".into()));
        }
        if self.trials == 0 {
            return Err(BenchError::Spec("trials must be at least 1".into()));
        }
        if self.coeff_bound == 0 {
            return Err(BenchError::Spec("coefficient bound must be positive".into()));
        }
        if let DeltaSelection::List(list) = &self.deltas {
            for values in list {
                let delta = DeltaIndex::new(values.clone(), &self.degrees)?;
                if delta.is_zero() {
                    return Err(Error::DeltaZero.into());
                }
            }
        }
        Ok(())
    }

    pub fn delta_list(&self) -> Vec<Vec<usize>> {
        match &self.deltas {
            DeltaSelection::All => enumerate_deltas(self.degrees.len() - 1, self.degrees[0]),
            DeltaSelection::List(list) => list.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TimingRecord {
    pub formula: Formula,
    pub degrees: Vec<usize>,
    pub delta: Vec<usize>,
    pub trial: usize,
    pub t_matrix_ns: u64,
    pub t_det_ns: u64,
    pub t_total_ns: u64,
}

/// Integer coefficients uniform in `[-bound, bound]`, leading coefficients
/// resampled until nonzero so every degree is exact.
pub fn random_system<R: Rng>(spec: &BenchSpec, rng: &mut R) -> Result<PolySystem, BenchError> {
    let bound = i64::from(spec.coeff_bound);
    let polys = spec
        .degrees
        .iter()
        .map(|&d| {
            let mut coeffs: Vec<i64> = (0..d).map(|_| rng.gen_range(-bound..=bound)).collect();
            let lead = loop {
                let v = rng.gen_range(-bound..=bound);
                if v != 0 {
                    break v;
                }
            };
            coeffs.push(lead);
            Poly::from_ints(&coeffs)
        })
        .collect();
    Ok(PolySystem::new(polys)?)
}

/// One system per trial, drawn in order from a ChaCha8 stream seeded by `spec.seed`.
pub fn trial_systems(spec: &BenchSpec) -> Result<Vec<PolySystem>, BenchError> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.trials).map(|_| random_system(spec, &mut rng)).collect()
}

fn elapsed_ns(start: Instant) -> u64 {
    u64::try_from(start.elapsed().as_nanos()).unwrap_or(u64::MAX)
}

fn run_cell(
    spec: &BenchSpec,
    system: &PolySystem,
    values: &[usize],
    trial: usize,
) -> Result<Vec<TimingRecord>, BenchError> {
    let delta = DeltaIndex::for_system(values.to_vec(), system)?;
    let mut records = Vec::with_capacity(3);
    let mut results: Vec<(Formula, Poly)> = Vec::with_capacity(3);
    for formula in Formula::ALL {
        // warm-up, discarded
        subresultant(system, &delta, formula)?;

        let start = Instant::now();
        let matrix = assemble(system, &delta, formula)?;
        let t_matrix_ns = elapsed_ns(start);
        let start = Instant::now();
        let value = finish(system, &delta, formula, &matrix)?;
        let t_det_ns = elapsed_ns(start);

        let start = Instant::now();
        let total_value = subresultant(system, &delta, formula)?;
        let t_total_ns = elapsed_ns(start);
        debug_assert_eq!(total_value, value);

        records.push(TimingRecord {
            formula,
            degrees: spec.degrees.clone(),
            delta: values.to_vec(),
            trial,
            t_matrix_ns,
            t_det_ns,
            t_total_ns,
        });
        results.push((formula, value));
    }
    let (base_formula, base) = &results[0];
    for (formula, value) in &results[1..] {
        if value != base {
            return Err(BenchError::Mismatch {
                seed: spec.seed,
                degrees: join_dash(&spec.degrees),
                delta: join_dash(values),
                trial,
                detail: format!("{base_formula} gave {base}, {formula} gave {value}"),
            });
        }
    }
    Ok(records)
}

/// Runs every (trial, δ, formula) cell on the current thread.
pub fn run_bench(spec: &BenchSpec) -> Result<Vec<TimingRecord>, BenchError> {
    spec.validate()?;
    let systems = trial_systems(spec)?;
    let deltas = spec.delta_list();
    let mut records = Vec::with_capacity(systems.len() * deltas.len() * 3);
    for (trial, system) in systems.iter().enumerate() {
        for values in &deltas {
            records.extend(run_cell(spec, system, values, trial)?);
        }
    }
    Ok(records)
}

type CellOutcome = Result<Vec<TimingRecord>, BenchError>;

/// Same records as [`run_bench`], with whole (trial, δ) cells spread over
/// `workers` threads. Record order matches the sequential run.
pub fn run_bench_parallel(
    spec: &BenchSpec,
    workers: usize,
) -> Result<Vec<TimingRecord>, BenchError> {
    spec.validate()?;
    let systems = trial_systems(spec)?;
    let deltas = spec.delta_list();
    let cells: Vec<(usize, &Vec<usize>)> = (0..systems.len())
        .flat_map(|t| deltas.iter().map(move |d| (t, d)))
        .collect();
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<CellOutcome>>> =
        Mutex::new((0..cells.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..workers.max(1) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(trial, values)) = cells.get(i) else {
                    break;
                };
                let out = run_cell(spec, &systems[trial], values, trial);
                let failed = out.is_err();
                slots.lock().expect("slot lock")[i] = Some(out);
                if failed {
                    next.store(cells.len(), Ordering::Relaxed);
                }
            });
        }
    });
    let mut records = Vec::new();
    for slot in slots.into_inner().expect("slot lock") {
        match slot {
            Some(out) => records.extend(out?),
            None => break,
        }
    }
    Ok(records)
}

pub fn write_csv(records: &[TimingRecord], path: &Path) -> Result<(), BenchError> {
    let io_err = |source: std::io::Error| BenchError::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = std::fs::File::create(path).map_err(io_err)?;
    let mut out = csv::Writer::from_writer(file);
    let csv_err = |e: csv::Error| BenchError::Csv {
        path: path.to_path_buf(),
        message: e.to_string(),
    };
    out.write_record(CSV_HEADER.split(',')).map_err(csv_err)?;
    for r in records {
        out.write_record([
            r.formula.name().to_string(),
            join_dash(&r.degrees),
            join_dash(&r.delta),
            r.trial.to_string(),
            r.t_matrix_ns.to_string(),
            r.t_det_ns.to_string(),
            r.t_total_ns.to_string(),
        ])
        .map_err(csv_err)?;
    }
    out.flush().map_err(io_err)
}

pub fn read_csv(path: &Path) -> Result<Vec<TimingRecord>, BenchError> {
    let bad = |message: String| BenchError::Csv {
        path: path.to_path_buf(),
        message,
    };
    let mut reader = csv::Reader::from_path(path).map_err(|e| bad(e.to_string()))?;
    let header = reader.headers().map_err(|e| bad(e.to_string()))?;
    if header.iter().collect::<Vec<_>>().join(",") != CSV_HEADER {
        return Err(bad(format!("unexpected header {header:?}")));
    }
    let mut records = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| bad(e.to_string()))?;
        let field = |i: usize| row.get(i).unwrap_or_default();
        let dashed = |s: &str| -> Result<Vec<usize>, BenchError> {
            s.split('-')
                .map(|v| v.parse().map_err(|_| bad(format!("bad list '{s}'"))))
                .collect()
        };
        let number = |s: &str| -> Result<u64, BenchError> {
            s.parse().map_err(|_| bad(format!("bad number '{s}'")))
        };
        records.push(TimingRecord {
            formula: field(0).parse().map_err(bad)?,
            degrees: dashed(field(1))?,
            delta: dashed(field(2))?,
            trial: number(field(3))? as usize,
            t_matrix_ns: number(field(4))?,
            t_det_ns: number(field(5))?,
            t_total_ns: number(field(6))?,
        });
    }
    Ok(records)
}

/// Per-formula sums, in seconds: total `T`, matrix generation `M`,
/// determinant `D`.
#[derive(Clone, Debug, PartialEq)]
pub struct FormulaTotals {
    pub formula: Formula,
    pub total_s: f64,
    pub matrix_s: f64,
    pub det_s: f64,
}

pub fn summarize(records: &[TimingRecord]) -> Vec<FormulaTotals> {
    Formula::ALL
        .iter()
        .map(|&formula| {
            let mut sums = [0u128; 3];
            for r in records.iter().filter(|r| r.formula == formula) {
                sums[0] += u128::from(r.t_total_ns);
                sums[1] += u128::from(r.t_matrix_ns);
                sums[2] += u128::from(r.t_det_ns);
            }
            let secs = |ns: u128| ns as f64 / 1e9;
            FormulaTotals {
                formula,
                total_s: secs(sums[0]),
                matrix_s: secs(sums[1]),
                det_s: secs(sums[2]),
            }
        })
        .collect()
}

/// Table with one row per degree profile and `T M D` columns (seconds) per
/// formula.
pub fn render_table(records: &[TimingRecord]) -> String {
    let mut profiles: Vec<Vec<usize>> = Vec::new();
    for r in records {
        if !profiles.contains(&r.degrees) {
            profiles.push(r.degrees.clone());
        }
    }
    let mut out = format!("{:<14}", "deg F");
    for f in Formula::ALL {
        out.push_str(&format!(
            "| {:>10} {:>10} {:>10} ",
            format!("{f}:T"),
            "M",
            "D"
        ));
    }
    out.push('\n');
    for profile in profiles {
        let subset: Vec<TimingRecord> = records
            .iter()
            .filter(|r| r.degrees == profile)
            .cloned()
            .collect();
        let label = format!(
            "({})",
            profile.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
        );
        out.push_str(&format!("{label:<14}"));
        for totals in summarize(&subset) {
            out.push_str(&format!(
                "| {:>10.6} {:>10.6} {:>10.6} ",
                totals.total_s, totals.matrix_s, totals.det_s
            ));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(degrees: &[usize], deltas: DeltaSelection) -> BenchSpec {
        BenchSpec {
            degrees: degrees.to_vec(),
            coeff_bound: 9,
            trials: 1,
            seed: 7,
            deltas,
        }
    }

    #[test]
    fn random_system_is_reproducible() {
        let s = spec(&[2, 1], DeltaSelection::All);
        let a = trial_systems(&s).unwrap();
        let b = trial_systems(&s).unwrap();
        assert_eq!(a, b);
        assert_eq!(a[0].degrees(), &[2, 1]);
        let other = BenchSpec { seed: 8, ..s };
        assert_ne!(trial_systems(&other).unwrap(), a);
    }

    #[test]
    fn degrees_are_exact_even_with_tiny_bound() {
        let s = BenchSpec {
            coeff_bound: 1,
            trials: 50,
            ..spec(&[4, 3, 0], DeltaSelection::All)
        };
        for system in trial_systems(&s).unwrap() {
            assert_eq!(system.degrees(), &[4, 3, 0]);
        }
    }

    #[test]
    fn explicit_delta_gives_three_records_per_trial() {
        let s = BenchSpec {
            trials: 2,
            ..spec(&[5, 4, 4], DeltaSelection::List(vec![vec![2, 2]]))
        };
        let records = run_bench(&s).unwrap();
        assert_eq!(records.len(), 6);
        assert_eq!(records[3].trial, 1);
    }

    #[test]
    fn parallel_matches_sequential_layout() {
        let s = spec(&[4, 3, 2], DeltaSelection::All);
        let seq = run_bench(&s).unwrap();
        let par = run_bench_parallel(&s, 3).unwrap();
        let key = |r: &TimingRecord| (r.formula, r.delta.clone(), r.trial);
        assert_eq!(
            seq.iter().map(key).collect::<Vec<_>>(),
            par.iter().map(key).collect::<Vec<_>>()
        );
    }

    #[test]
    fn invalid_specs() {
        assert!(run_bench(&spec(&[2, 3], DeltaSelection::All)).is_err());
        assert!(run_bench(&spec(&[2, 1], DeltaSelection::List(vec![vec![0]]))).is_err());
        assert!(run_bench(&spec(&[2, 1], DeltaSelection::List(vec![vec![3]]))).is_err());
        assert!(run_bench(&BenchSpec { trials: 0, ..spec(&[2, 1], DeltaSelection::All) }).is_err());
    }

    #[test]
    fn empty_csv_is_header_only() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("empty.csv");
        write_csv(&[], &path).unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), format!("{CSV_HEADER}\n"));
        assert!(read_csv(&path).unwrap().is_empty());
    }

    #[test]
    fn one_record_csv() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("one.csv");
        let record = TimingRecord {
            formula: Formula::HybridBezout,
            degrees: vec![12, 11, 10],
            delta: vec![2, 2],
            trial: 0,
            t_matrix_ns: 10,
            t_det_ns: 20,
            t_total_ns: 35,
        };
        write_csv(std::slice::from_ref(&record), &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text, format!("{CSV_HEADER}\nhybrid,12-11-10,2-2,0,10,20,35\n"));
        assert_eq!(read_csv(&path).unwrap(), vec![record]);
    }

    #[test]
    fn write_csv_reports_path() {
        let err = write_csv(&[], Path::new("/nonexistent/dir/out.csv")).unwrap_err();
        assert!(err.to_string().contains("/nonexistent/dir/out.csv"));
    }
}
