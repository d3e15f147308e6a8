//! Command bodies. Each returns the text for standard output, diagnostics
//! for standard error and an exit code; file I/O stays in the binary.

use serde::Serialize;

use fracrec_core::recursion::{build_condition_system, RecursionKind, RecursionMap};
use fracrec_core::verify::{is_periodic_numeric, is_periodic_symbolic, minimal_period};
use fracrec_core::{Error, Result};

use crate::acceptance;
use crate::report::{NumericReport, SearchReport};
use crate::search::{check_period, search_periods, SearchOptions};
use crate::specfile::{parse_spec_file, render_spec, SpecDoc};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn usage(e: &Error) -> Self {
        Self { stdout: String::new(), stderr: format!("error: {e}\n"), code: EXIT_USAGE }
    }
}

/// `A..B` (inclusive) or a single period.
pub fn parse_periods(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidArgument(format!("invalid period range `{s}` (expected N or A..B)"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![num(s)?]),
    }
}

pub fn cmd_search(kind: &str, periods: &[usize], opts: &SearchOptions, json: bool, parallel: bool) -> Outcome {
    let kind: RecursionKind = match kind.parse() {
        Ok(k) => k,
        Err(e) => return Outcome::usage(&e),
    };
    if let Some(e) = periods.iter().find_map(|&p| check_period(kind, p).err()) {
        return Outcome::usage(&e);
    }
    match search_periods(kind, periods, opts, parallel) {
        Ok(results) => {
            let report = SearchReport::new(&results, opts);
            let stderr: String = results
                .iter()
                .map(|r| format!("timing: {kind} period {}: {:.3} s\n", r.period, r.elapsed.as_secs_f64()))
                .collect();
            let stdout = if json { report.to_json() } else { report.to_text() };
            Outcome { stdout, stderr, code: EXIT_OK }
        }
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: EXIT_FALSE },
    }
}

pub fn cmd_conditions(kind: &str, period: usize) -> Outcome {
    let built = kind
        .parse::<RecursionKind>()
        .and_then(|k| check_period(k, period).map(|_| k))
        .and_then(|k| build_condition_system(k, period));
    match built {
        Ok(sys) => Outcome::ok(sys.to_string()),
        Err(e) => Outcome::usage(&e),
    }
}

#[derive(Serialize)]
struct VerifyReport {
    recursion: String,
    period: usize,
    symbolic: bool,
    kmax: usize,
    minimal_period: Option<usize>,
    numeric: Option<NumericReport>,
    numeric_warning: Option<String>,
}

fn verify_map<M: RecursionMap>(
    map: &M,
    recursion: String,
    period: usize,
    kmax: usize,
    opts: &SearchOptions,
) -> VerifyReport {
    let numeric = is_periodic_numeric(map, period, opts.numeric_trials, opts.precision, opts.seed);
    VerifyReport {
        recursion,
        period,
        symbolic: is_periodic_symbolic(map, period),
        kmax,
        minimal_period: minimal_period(map, kmax),
        numeric: numeric.as_ref().ok().map(NumericReport::from),
        numeric_warning: numeric.err().map(|e| e.to_string()),
    }
}

pub fn cmd_verify(src: &str, period: usize, kmax: usize, opts: &SearchOptions, json: bool) -> Outcome {
    if period == 0 || kmax == 0 {
        return Outcome::usage(&Error::InvalidArgument("period and kmax must be at least 1".into()));
    }
    let doc = match parse_spec_file(src) {
        Ok(d) => d,
        Err(e) => return Outcome::usage(&e),
    };
    let r = match &doc {
        SpecDoc::Reduced(s) => verify_map(s, s.formula(), period, kmax, opts),
        SpecDoc::General(g) => verify_map(g, g.to_string(), period, kmax, opts),
    };
    let code = if r.symbolic { EXIT_OK } else { EXIT_FALSE };
    let mut stderr = String::new();
    if let Some(w) = &r.numeric_warning {
        stderr.push_str(&format!("warning: numeric cross-check: {w}\n"));
    }
    let stdout = if json {
        serde_json::to_string_pretty(&r).expect("serializable") + "\n"
    } else {
        let mut out = format!("recursion: {}\n", r.recursion);
        out.push_str(&format!("symbolic period {}: {}\n", r.period, r.symbolic));
        match r.minimal_period {
            Some(m) => out.push_str(&format!("minimal period (up to {}): {m}\n", r.kmax)),
            None => out.push_str(&format!("minimal period (up to {}): none\n", r.kmax)),
        }
        match (&r.numeric, &r.numeric_warning) {
            (Some(n), _) => out.push_str(&format!(
                "numeric period {}: {} ({} starts, {} bits, seed {}, max residual {})\n",
                r.period, n.periodic, n.trials, n.precision, n.seed, n.max_residual
            )),
            (None, Some(w)) => out.push_str(&format!("numeric period {}: inconclusive ({w})\n", r.period)),
            (None, None) => {}
        }
        out
    };
    Outcome { stdout, stderr, code }
}

#[derive(Serialize)]
struct NormalizeReport {
    reduced: String,
    recursion: String,
    map_a: String,
    map_b: String,
}

pub fn cmd_normalize(src: &str, json: bool) -> Outcome {
    let doc = match parse_spec_file(src) {
        Ok(d) => d,
        Err(e) => return Outcome::usage(&e),
    };
    let (spec, g) = match doc {
        SpecDoc::General(g) => match g.normalize_to_reduced() {
            Ok(x) => x,
            Err(e) => return Outcome::usage(&e),
        },
        SpecDoc::Reduced(s) => (s, fracrec_core::recursion::AffineMap::identity()),
    };
    let r = NormalizeReport {
        reduced: render_spec(&SpecDoc::Reduced(spec.clone())),
        recursion: spec.formula(),
        map_a: g.a().to_notation(),
        map_b: g.b().to_notation(),
    };
    if json {
        return Outcome::ok(serde_json::to_string_pretty(&r).expect("serializable") + "\n");
    }
    Outcome::ok(format!("recursion: {}\nmap: {g}\n{}", r.recursion, r.reduced))
}

pub fn cmd_corpus(opts: &SearchOptions, json: bool) -> Outcome {
    let rows = acceptance::run_all(opts);
    let code = if rows.iter().all(|r| r.passed) { EXIT_OK } else { EXIT_FALSE };
    let stdout = if json {
        #[derive(Serialize)]
        struct Row<'a> {
            id: u8,
            title: &'a str,
            passed: bool,
            detail: &'a str,
        }
        let rows: Vec<Row> =
            rows.iter().map(|r| Row { id: r.id, title: r.title, passed: r.passed, detail: &r.detail }).collect();
        serde_json::to_string_pretty(&rows).expect("serializable") + "\n"
    } else {
        let mut out = String::from("out of scope: z_n = 1/z_{n-1} (order 1, no reduced kind applies)\n");
        out.push_str(&acceptance::render_table(&rows));
        out
    };
    Outcome { stdout, stderr: String::new(), code }
}

#[cfg(test)]
mod tests {
    use super::*;

    const LYNESS: &str = "kind = order2-reduced\na0 = 1\na2 = 0\n";

    #[test]
    fn periods() {
        assert_eq!(parse_periods("4..7").unwrap(), vec![4, 5, 6, 7]);
        assert_eq!(parse_periods("8").unwrap(), vec![8]);
        assert!(parse_periods("9..4").is_err());
        assert!(parse_periods("x").is_err());
    }

    #[test]
    fn verify_lyness() {
        let opts = SearchOptions { numeric_trials: 4, ..Default::default() };
        let o = cmd_verify(LYNESS, 5, 24, &opts, false);
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.contains("minimal period (up to 24): 5"), "{}", o.stdout);
        let o = cmd_verify(LYNESS, 10, 24, &opts, false);
        assert_eq!(o.code, EXIT_OK);
        let o = cmd_verify("kind = order2\na0 = 2\na2 = 1/3\n", 8, 24, &opts, false);
        assert_eq!(o.code, EXIT_FALSE);
        assert_eq!(cmd_verify("kind = order2\na0 = \n", 5, 24, &opts, false).code, EXIT_USAGE);
    }

    #[test]
    fn normalize_general() {
        let o = cmd_normalize("kind = general\norder = 2\na2 = 0\na1 = 1\na0 = 1\nb2 = 1\nb0 = 0\n", false);
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.contains("map: G(x) = (1)*x + (0)"), "{}", o.stdout);
        assert!(o.stdout.contains("a0 = 1\na2 = 0\n"));
        let o = cmd_normalize("kind = general\norder = 2\na2 = 0\na1 = 1\na0 = 1\nb2 = 0\nb0 = 1\n", false);
        assert_eq!(o.code, EXIT_USAGE);
        assert!(o.stderr.contains("recursion becomes linear"));
    }

    #[test]
    fn conditions_header() {
        let o = cmd_conditions("order2-reduced", 12);
        assert!(o.stdout.contains("# meeting: i=8 j=7"));
        let o = cmd_conditions("type2", 8);
        assert!(o.stdout.lines().any(|l| l == "1"));
        assert_eq!(cmd_conditions("order9", 8).code, EXIT_USAGE);
        assert_eq!(cmd_conditions("order2", 3).code, EXIT_USAGE);
    }
}
