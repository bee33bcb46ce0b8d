//! Closed-form vs brute-force benchmark with exact-multiplication counts.
//!
//! Wall time is reported but the load-bearing quantity is the count of
//! rational multiplications from [`pell_core::opcount`]: timings vary with
//! the machine, operation counts do not. Every record asserts that both
//! routes produced identical values; any inequality aborts the run, since
//! it would mean a correctness bug rather than a performance result.

use std::time::{Duration, Instant};

use pell_core::powersum::{power_sum_brute, power_sum_closed, PowerSumRequest};
use pell_core::{opcount, PellParams, Rational};

#[derive(Debug, Clone)]
pub struct BenchRecord {
    pub r: Rational,
    pub stride: u32,
    pub exponent: u32,
    pub upper: u64,
    pub closed_time: Duration,
    pub brute_time: Duration,
    pub closed_muls: u64,
    pub brute_muls: u64,
    pub equal: bool,
}

impl BenchRecord {
    pub fn render_text(&self) -> String {
        format!(
            "R={} m={} ell={} n={}: closed {:?} ({} muls), brute {:?} ({} muls), ratio {:.3}%, equal={}",
            self.r,
            self.stride,
            self.exponent,
            self.upper,
            self.closed_time,
            self.closed_muls,
            self.brute_time,
            self.brute_muls,
            100.0 * self.closed_muls as f64 / self.brute_muls.max(1) as f64,
            self.equal
        )
    }
}

/// Runs every request through both routes. Returns an error describing the
/// first inequality, if any; callers treat that as a verification failure.
pub fn run_bench(grid: &[PowerSumRequest<Rational>]) -> Result<Vec<BenchRecord>, String> {
    assert!(!grid.is_empty(), "benchmark grid must be nonempty");
    let mut records = Vec::with_capacity(grid.len());
    for req in grid {
        opcount::reset();
        let start = Instant::now();
        let closed = power_sum_closed(req).map_err(|e| e.to_string())?;
        let closed_time = start.elapsed();
        let closed_muls = opcount::multiplications();

        opcount::reset();
        let start = Instant::now();
        let brute = power_sum_brute(req);
        let brute_time = start.elapsed();
        let brute_muls = opcount::multiplications();

        let equal = closed == brute;
        let record = BenchRecord {
            r: req.params.r().clone(),
            stride: req.stride,
            exponent: req.exponent,
            upper: req.upper,
            closed_time,
            brute_time,
            closed_muls,
            brute_muls,
            equal,
        };
        if !equal {
            return Err(format!(
                "closed/brute inequality at {}: closed {}, brute {}",
                record.render_text(),
                closed,
                brute
            ));
        }
        records.push(record);
    }
    Ok(records)
}

/// Default grid: the headline large-n point plus two small sanity points.
pub fn default_grid() -> Vec<PowerSumRequest<Rational>> {
    let p = |r: Rational| PellParams::numeric(r).unwrap();
    vec![
        PowerSumRequest::new(p(Rational::from_integer(2)), 1, 1, 10).unwrap(),
        PowerSumRequest::new(p(Rational::from_ratio(3, 2)), 2, 4, 1_000).unwrap(),
        PowerSumRequest::new(p(Rational::from_integer(2)), 1, 3, 10_000).unwrap(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid_runs_and_counts() {
        let p = PellParams::numeric(Rational::from_integer(2)).unwrap();
        let grid = vec![
            PowerSumRequest::new(p.clone(), 1, 1, 10).unwrap(),
            PowerSumRequest::new(p, 2, 3, 50).unwrap(),
        ];
        let records = run_bench(&grid).unwrap();
        assert_eq!(records.len(), 2);
        for r in records {
            assert!(r.equal);
            assert!(r.closed_muls > 0 && r.brute_muls > 0);
        }
    }
}
