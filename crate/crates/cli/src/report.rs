//! Search reports as plain text or JSON. Both renderings are deterministic;
//! wall-clock timings are kept out of them.

use serde::Serialize;

use fracrec_core::verify::NumericSummary;

use crate::search::{CertifiedSolution, PeriodResult, SearchOptions};
use crate::specfile::kind_file_name;

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ValueReport {
    pub name: String,
    pub notation: String,
    pub cyclo: [String; 4],
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct NumericReport {
    pub periodic: bool,
    pub trials: usize,
    pub precision: u32,
    pub seed: u64,
    pub max_residual: String,
    pub max_residual_log2: Option<i64>,
    pub resamples: usize,
}

impl From<&NumericSummary> for NumericReport {
    fn from(s: &NumericSummary) -> Self {
        Self {
            periodic: s.periodic,
            trials: s.trials,
            precision: s.precision,
            seed: s.seed,
            max_residual: format!("{:.3e}", s.max_residual),
            max_residual_log2: s.max_residual_log2,
            resamples: s.resamples,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SolutionReport {
    pub values: Vec<ValueReport>,
    pub formula: String,
    pub exact_residuals_zero: bool,
    pub certificate: Option<String>,
    pub minimal_period: Option<usize>,
    pub numeric: Option<NumericReport>,
    pub numeric_warning: Option<String>,
    pub annotations: Vec<String>,
}

impl From<&CertifiedSolution> for SolutionReport {
    fn from(s: &CertifiedSolution) -> Self {
        let values = s
            .assignment
            .iter()
            .map(|(n, v)| ValueReport {
                name: n.to_string(),
                notation: v.to_notation(),
                cyclo: v.coords().clone().map(|c| c.to_string()),
            })
            .collect();
        let (numeric, numeric_warning) = match &s.numeric {
            Ok(n) => (Some(n.into()), None),
            Err(e) => (None, Some(e.clone())),
        };
        Self {
            values,
            formula: s.spec.formula(),
            // only verified assignments reach a report
            exact_residuals_zero: true,
            certificate: s.certificate.as_ref().map(|c| c.to_string()),
            minimal_period: s.minimal_period,
            numeric,
            numeric_warning,
            annotations: s.annotations(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct PeriodReport {
    pub kind: String,
    pub period: usize,
    pub meeting_i: usize,
    pub meeting_j: usize,
    pub generator_count: usize,
    pub constant_generator: bool,
    pub infeasible: bool,
    pub basis_size: usize,
    pub outside_field_count: usize,
    pub solutions: Vec<SolutionReport>,
    pub lower_period: Vec<SolutionReport>,
    pub rejected: Vec<SolutionReport>,
}

impl From<&PeriodResult> for PeriodReport {
    fn from(r: &PeriodResult) -> Self {
        let conv = |v: &[CertifiedSolution]| v.iter().map(SolutionReport::from).collect();
        Self {
            kind: kind_file_name(r.kind).to_string(),
            period: r.period,
            meeting_i: r.meeting.0,
            meeting_j: r.meeting.1,
            generator_count: r.generator_count,
            constant_generator: r.constant_generator,
            infeasible: r.outcome.infeasible,
            basis_size: r.outcome.basis_size,
            outside_field_count: r.outcome.outside_field_count,
            solutions: conv(&r.solutions),
            lower_period: conv(&r.lower_period),
            rejected: conv(&r.rejected),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SearchReport {
    pub numeric_trials: usize,
    pub precision: u32,
    pub seed: u64,
    pub periods: Vec<PeriodReport>,
}

impl SearchReport {
    pub fn new(results: &[PeriodResult], opts: &SearchOptions) -> Self {
        Self {
            numeric_trials: opts.numeric_trials,
            precision: opts.precision,
            seed: opts.seed,
            periods: results.iter().map(PeriodReport::from).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable report") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "# numeric cross-check: {} starts, {} bits, seed {}\n",
            self.numeric_trials, self.precision, self.seed
        );
        for p in &self.periods {
            out.push('\n');
            out.push_str(&period_text(p));
        }
        out
    }
}

fn period_text(p: &PeriodReport) -> String {
    let mut out = format!("== {} period {} ==\n", p.kind, p.period);
    out.push_str(&format!("meeting condition: z_{} = u_{}\n", p.meeting_i, p.meeting_j));
    out.push_str(&format!(
        "generators: {}{}\n",
        p.generator_count,
        if p.constant_generator { " (contains a nonzero constant)" } else { "" }
    ));
    if p.infeasible {
        out.push_str("system: infeasible\n");
    } else {
        out.push_str(&format!(
            "system: lex basis of {} elements, {} root(s) outside Q(zeta12)\n",
            p.basis_size, p.outside_field_count
        ));
    }
    out.push_str(&format!("solutions with minimal period {}: {}\n", p.period, p.solutions.len()));
    solutions_text(&mut out, &p.solutions);
    if !p.lower_period.is_empty() {
        out.push_str(&format!("solutions with a smaller minimal period: {}\n", p.lower_period.len()));
        solutions_text(&mut out, &p.lower_period);
    }
    if !p.rejected.is_empty() {
        out.push_str(&format!("condition solutions that are not {}-periodic: {}\n", p.period, p.rejected.len()));
        solutions_text(&mut out, &p.rejected);
    }
    out
}

fn solutions_text(out: &mut String, sols: &[SolutionReport]) {
    for (n, s) in sols.iter().enumerate() {
        let vals: Vec<String> = s.values.iter().map(|v| format!("{} = {}", v.name, v.notation)).collect();
        out.push_str(&format!("  [{}] {{{}}}\n", n + 1, vals.join(", ")));
        let cyc: Vec<String> = s.values.iter().map(|v| format!("{} = cyclo({})", v.name, v.cyclo.join(", "))).collect();
        out.push_str(&format!("      coordinates: {}\n", cyc.join(", ")));
        out.push_str(&format!("      recursion: {}\n", s.formula));
        out.push_str("      exact residuals: all zero\n");
        match &s.certificate {
            Some(c) => out.push_str(&format!("      certificate: {c}\n")),
            None => out.push_str("      certificate: none\n"),
        }
        match s.minimal_period {
            Some(m) => out.push_str(&format!("      minimal period: {m}\n")),
            None => out.push_str("      minimal period: none found\n"),
        }
        match (&s.numeric, &s.numeric_warning) {
            (Some(n), _) => out.push_str(&format!(
                "      numeric: {} ({} starts, {} bits, max residual {})\n",
                if n.periodic { "periodic" } else { "NOT periodic" },
                n.trials,
                n.precision,
                n.max_residual
            )),
            (None, Some(w)) => out.push_str(&format!("      numeric: warning: {w}\n")),
            (None, None) => {}
        }
        for a in &s.annotations {
            out.push_str(&format!("      note: {a}\n"));
        }
    }
}
