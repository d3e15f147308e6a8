//! Certification of global periodicity: exact orbit identities over
//! Q(ζ₁₂), minimal periods, and high-precision numeric cross-checks.

mod modular;
mod numeric;
mod symbolic;

use std::fmt;

use crate::error::Result;
use crate::recursion::{RecursionKind, RecursionSpec};
use crate::ring::CycloElem;

pub use modular::screen_periods;
pub use numeric::{is_periodic_numeric, orbit_numeric, NumericSummary, DEFAULT_SEED, MAX_RESAMPLES};
pub use symbolic::{is_periodic_symbolic, minimal_period};

/// Default bound for minimal-period searches.
pub const DEFAULT_KMAX: usize = 24;

/// Default number of random starts in numeric checks.
pub const DEFAULT_TRIALS: usize = 20;

#[derive(Clone, Debug, PartialEq)]
pub enum CertificateMode {
    /// The k-fold iterate equals the identity as normalized rational functions.
    Symbolic,
    /// Every sampled orbit closed within 2^(−precision/2).
    Numeric(NumericSummary),
}

/// Evidence that `spec` is periodic with period `period`.
#[derive(Clone, Debug, PartialEq)]
pub struct PeriodCertificate {
    pub spec: RecursionSpec,
    pub period: usize,
    pub mode: CertificateMode,
}

impl PeriodCertificate {
    pub fn symbolic(spec: &RecursionSpec, period: usize) -> Option<Self> {
        (!spec.is_symbolic() && is_periodic_symbolic(spec, period)).then(|| Self {
            spec: spec.clone(),
            period,
            mode: CertificateMode::Symbolic,
        })
    }

    /// `Ok(None)` when the numeric check fails.
    pub fn numeric(spec: &RecursionSpec, period: usize, trials: usize, precision: u32, seed: u64) -> Result<Option<Self>> {
        let s = is_periodic_numeric(spec, period, trials, precision, seed)?;
        Ok(s.periodic.then(|| Self { spec: spec.clone(), period, mode: CertificateMode::Numeric(s) }))
    }
}

impl fmt::Display for PeriodCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "period {} ", self.period)?;
        match &self.mode {
            CertificateMode::Symbolic => write!(f, "(symbolic, exact)"),
            CertificateMode::Numeric(s) => write!(
                f,
                "(numeric, {} starts at {} bits, max residual {:.3e})",
                s.trials, s.precision, s.max_residual
            ),
        }
    }
}

/// One recursion of the reference corpus.
#[derive(Clone, Debug, PartialEq)]
pub struct CorpusEntry {
    pub formula: String,
    pub spec: RecursionSpec,
    pub expected_period: usize,
    pub minimal_period: Option<usize>,
    /// Numeric cross-check at the expected period, or the error it raised.
    pub numeric: std::result::Result<NumericSummary, String>,
}

impl CorpusEntry {
    pub fn passed(&self) -> bool {
        self.minimal_period == Some(self.expected_period)
            && self.numeric.as_ref().is_ok_and(|s| s.periodic)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusReport {
    pub entries: Vec<CorpusEntry>,
    /// Recursions of the reference list that no reduced kind represents.
    pub out_of_scope: Vec<(String, String)>,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(CorpusEntry::passed)
    }
}

fn ints(kind: RecursionKind, b: &[(&str, i64)]) -> RecursionSpec {
    let b: Vec<(&str, CycloElem)> = b.iter().map(|&(k, v)| (k, CycloElem::from_integer(v))).collect();
    RecursionSpec::concrete(kind, &b).expect("valid corpus spec")
}

/// The known periodic recursions expressible in reduced form, with their
/// expected minimal periods.
pub fn corpus() -> Vec<(RecursionSpec, usize)> {
    use RecursionKind::*;
    vec![
        (RecursionSpec::lyness(), 5),
        (ints(Order2Reduced, &[("a0", 0), ("a2", 0)]), 6),
        (ints(Order3Type1, &[("a0", 1), ("a1", 1), ("a3", 0)]), 8),
        (ints(Order3Type1, &[("a0", -1), ("a1", -1), ("a3", 0)]), 8),
    ]
}

/// Checks every corpus recursion symbolically (minimal period up to
/// [`DEFAULT_KMAX`]) and numerically at its expected period.
pub fn corpus_check_with(trials: usize, precision: u32, seed: u64) -> CorpusReport {
    let entries = corpus()
        .into_iter()
        .map(|(spec, expected_period)| CorpusEntry {
            formula: spec.formula(),
            minimal_period: minimal_period(&spec, DEFAULT_KMAX),
            numeric: is_periodic_numeric(&spec, expected_period, trials, precision, seed).map_err(|e| e.to_string()),
            spec,
            expected_period,
        })
        .collect();
    CorpusReport {
        entries,
        out_of_scope: vec![("z_n = 1/z_{n-1}".into(), "order 1, no reduced kind applies".into())],
    }
}

pub fn corpus_check() -> CorpusReport {
    corpus_check_with(DEFAULT_TRIALS, crate::ring::DEFAULT_PRECISION, DEFAULT_SEED)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_periods() {
        let r = corpus_check();
        let got: Vec<Option<usize>> = r.entries.iter().map(|e| e.minimal_period).collect();
        assert_eq!(got, vec![Some(5), Some(6), Some(8), Some(8)]);
        assert!(r.passed());
        assert_eq!(r.out_of_scope.len(), 1);
    }

    #[test]
    fn certificates() {
        let l = RecursionSpec::lyness();
        let c = PeriodCertificate::symbolic(&l, 5).unwrap();
        assert_eq!(c.to_string(), "period 5 (symbolic, exact)");
        assert!(PeriodCertificate::symbolic(&l, 6).is_none());
        assert!(PeriodCertificate::symbolic(&RecursionSpec::symbolic(RecursionKind::Order2Reduced), 5).is_none());
        assert!(PeriodCertificate::numeric(&l, 5, 4, 256, 1).unwrap().is_some());
        assert!(PeriodCertificate::numeric(&l, 6, 4, 256, 1).unwrap().is_none());
    }
}
