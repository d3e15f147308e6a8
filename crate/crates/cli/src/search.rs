//! Period search: condition system → exact solutions → certificates.

use std::time::{Duration, Instant};

use fracrec_core::recursion::{build_condition_system, RecursionKind, RecursionSpec};
use fracrec_core::solver::{solve_system, verify_assignment, Assignment, PolySystem, SolveOutcome, SolverConfig};
use fracrec_core::verify::{is_periodic_numeric, minimal_period, NumericSummary, PeriodCertificate, DEFAULT_KMAX};
use fracrec_core::ring::CycloElem;
use fracrec_core::{Error, Result};

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub solver: SolverConfig,
    pub numeric_trials: usize,
    pub precision: u32,
    pub seed: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            solver: SolverConfig::default(),
            numeric_trials: fracrec_core::verify::DEFAULT_TRIALS,
            precision: fracrec_core::ring::DEFAULT_PRECISION,
            seed: fracrec_core::verify::DEFAULT_SEED,
        }
    }
}

/// A solution of a condition system with its certificates.
#[derive(Clone, Debug)]
pub struct CertifiedSolution {
    pub assignment: Assignment,
    pub spec: RecursionSpec,
    /// Symbolic certificate at the searched period, `None` when the map is
    /// not periodic with that period.
    pub certificate: Option<PeriodCertificate>,
    pub minimal_period: Option<usize>,
    pub numeric: std::result::Result<NumericSummary, String>,
}

impl CertifiedSolution {
    /// `x has order n` notes for coefficients x and x − 1 that are roots of unity.
    pub fn annotations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (name, v) in self.assignment.iter() {
            if let Some(n) = v.root_of_unity_order() {
                out.push(format!("{name} is a root of unity of order {n}"));
            }
            let shifted = v - &CycloElem::one();
            if !v.is_zero() {
                if let Some(n) = shifted.root_of_unity_order() {
                    out.push(format!("{name} - 1 is a root of unity of order {n}"));
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct PeriodResult {
    pub kind: RecursionKind,
    pub period: usize,
    pub meeting: (usize, usize),
    pub generator_count: usize,
    pub constant_generator: bool,
    pub outcome: SolveOutcome,
    /// Certified at the period with minimal period equal to it.
    pub solutions: Vec<CertifiedSolution>,
    /// Certified at the period but with a smaller minimal period.
    pub lower_period: Vec<CertifiedSolution>,
    /// Solutions of the condition system whose map is not periodic with the period.
    pub rejected: Vec<CertifiedSolution>,
    pub elapsed: Duration,
}

pub fn check_period(kind: RecursionKind, period: usize) -> Result<()> {
    let min = kind.order() + 2;
    if period < min {
        return Err(Error::InvalidArgument(format!(
            "period {period} is too small for {kind}: need at least {min}"
        )));
    }
    Ok(())
}

pub fn search_period(kind: RecursionKind, period: usize, opts: &SearchOptions) -> Result<PeriodResult> {
    check_period(kind, period)?;
    let start = Instant::now();
    let conditions = build_condition_system(kind, period)?;
    let system = PolySystem::from_conditions(&conditions)?;
    let outcome = solve_system(&system, &opts.solver)?;
    let (mut solutions, mut lower_period, mut rejected) = (Vec::new(), Vec::new(), Vec::new());
    for a in &outcome.solutions {
        // soundness firewall: nothing leaves the search without exact zero residuals
        assert!(verify_assignment(&system, a), "unverified solution {a} escaped the solver");
        let spec = RecursionSpec::from_map(kind, &a.0)?;
        let certificate = PeriodCertificate::symbolic(&spec, period);
        let minimal = minimal_period(&spec, DEFAULT_KMAX.max(period));
        let numeric = is_periodic_numeric(&spec, period, opts.numeric_trials, opts.precision, opts.seed)
            .map_err(|e| e.to_string());
        let s = CertifiedSolution { assignment: a.clone(), spec, certificate, minimal_period: minimal, numeric };
        match (&s.certificate, s.minimal_period) {
            (Some(_), Some(m)) if m == period => solutions.push(s),
            (Some(_), _) => lower_period.push(s),
            (None, _) => rejected.push(s),
        }
    }
    Ok(PeriodResult {
        kind,
        period,
        meeting: conditions.meeting,
        generator_count: conditions.generators.len(),
        constant_generator: conditions.has_constant_generator(),
        outcome,
        solutions,
        lower_period,
        rejected,
        elapsed: start.elapsed(),
    })
}

/// Searches each period in order; with `parallel` the periods run on
/// separate threads and results are merged back in period order.
pub fn search_periods(
    kind: RecursionKind,
    periods: &[usize],
    opts: &SearchOptions,
    parallel: bool,
) -> Result<Vec<PeriodResult>> {
    for &p in periods {
        check_period(kind, p)?;
    }
    if !parallel {
        return periods.iter().map(|&p| search_period(kind, p, opts)).collect();
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = periods.iter().map(|&p| scope.spawn(move || search_period(kind, p, opts))).collect();
        handles.into_iter().map(|h| h.join().expect("search thread panicked")).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn period_ten_has_only_lower_period_lyness() {
        let r = search_period(RecursionKind::Order2Reduced, 10, &SearchOptions::default()).unwrap();
        assert!(r.solutions.is_empty());
        assert_eq!(r.lower_period.len(), 1);
        assert_eq!(r.lower_period[0].spec, RecursionSpec::lyness());
        assert_eq!(r.lower_period[0].minimal_period, Some(5));
    }

    #[test]
    fn small_periods_rejected() {
        assert!(check_period(RecursionKind::Order3Type1, 4).is_err());
        assert!(check_period(RecursionKind::Order2Reduced, 4).is_ok());
    }
}
