use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use super::groebner::{groebner_lex, is_zero_dimensional};
use super::roots::roots_dense;
use super::SolverConfig;
use crate::error::{Error, Result};
use crate::poly::{univariate as uni, CycloPoly, QPoly, VarSet};
use crate::recursion::{ConditionSystem, RecursionKind};
use crate::ring::CycloElem;

/// Polynomial equations over Q; the variable order of `vars` is the
/// elimination order (first variable eliminated first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySystem {
    vars: VarSet,
    generators: Vec<QPoly>,
}

/// Lex order used to triangularize condition systems of each kind.
pub fn elimination_order(kind: RecursionKind) -> &'static [&'static str] {
    match kind {
        RecursionKind::Order2Reduced => &["a2", "a0"],
        RecursionKind::Order3Type1 => &["a3", "a1", "a0"],
        RecursionKind::Order3Type2 => &["a3", "a0"],
    }
}

impl PolySystem {
    pub fn new(generators: Vec<QPoly>, vars: VarSet) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidArgument("empty polynomial system".into()));
        }
        let generators = generators.iter().map(|g| g.reindex(&vars)).collect::<Result<Vec<_>>>()?;
        Ok(Self { vars, generators })
    }

    pub fn from_conditions(sys: &ConditionSystem) -> Result<Self> {
        let vars = VarSet::new(elimination_order(sys.kind))?;
        Self::new(sys.generators.clone(), vars)
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn generators(&self) -> &[QPoly] {
        &self.generators
    }
}

/// Values for the variables of a system, keyed by name.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment(pub BTreeMap<String, CycloElem>);

impl Assignment {
    pub fn get(&self, name: &str) -> Option<&CycloElem> {
        self.0.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &CycloElem)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn pairs(&self) -> Vec<(String, CycloElem)> {
        self.0.iter().map(|(k, v)| (k.clone(), v.clone())).collect()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k} = {}", v.to_notation())).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub solutions: Vec<Assignment>,
    pub outside_field_count: usize,
    pub infeasible: bool,
    /// Infeasibility was decided by a nonzero constant generator.
    pub constant_generator: bool,
    pub basis_size: usize,
}

/// Sound but incomplete: a nonzero constant generator has no zeros.
pub fn quick_infeasibility(sys: &PolySystem) -> bool {
    sys.generators.iter().any(|g| g.is_constant() && !g.is_zero())
}

/// Every generator vanishes exactly at `a`.
pub fn verify_assignment(sys: &PolySystem, a: &Assignment) -> bool {
    let point: Option<Vec<CycloElem>> = sys.vars.names().iter().map(|n| a.get(n).cloned()).collect();
    let Some(point) = point else { return false };
    if a.0.len() != point.len() {
        return false;
    }
    sys.generators.iter().all(|g| g.to_cyclo().eval_all(&point).is_zero())
}

fn infeasible(constant_generator: bool, basis_size: usize) -> SolveOutcome {
    SolveOutcome {
        solutions: Vec::new(),
        outside_field_count: 0,
        infeasible: true,
        constant_generator,
        basis_size,
    }
}

/// All solutions with coordinates in Q(ζ₁₂), exactly verified.
pub fn solve_system(sys: &PolySystem, cfg: &SolverConfig) -> Result<SolveOutcome> {
    if quick_infeasibility(sys) {
        return Ok(infeasible(true, 1));
    }
    let basis = groebner_lex(&sys.generators, &sys.vars);
    if basis.len() == 1 && basis[0].is_one() {
        return Ok(infeasible(false, 1));
    }
    if !is_zero_dimensional(&basis) {
        return Err(Error::PositiveDimensional);
    }
    let n = sys.vars.len();
    let cbasis: Vec<CycloPoly> = basis.iter().map(QPoly::to_cyclo).collect();
    // partial solutions hold values for variables l..n
    let mut partial: Vec<Vec<CycloElem>> = vec![Vec::new()];
    let mut outside = 0;
    for l in (0..n).rev() {
        let level: Vec<&CycloPoly> = cbasis
            .iter()
            .filter(|g| g.uses_var(l) && g.support().iter().all(|&k| k >= l))
            .collect();
        let mut next = Vec::new();
        for values in &partial {
            let bindings: Vec<(usize, CycloElem)> =
                values.iter().enumerate().map(|(t, v)| (l + 1 + t, v.clone())).collect();
            let mut g: Vec<CycloElem> = Vec::new();
            for p in &level {
                let s = p.eval_indices(&bindings);
                let coeffs = s.univariate_coeffs(l).expect("only variable l remains");
                g = uni::gcd(&g, &coeffs);
            }
            if g.is_empty() {
                // every element vanished: cannot happen for a zero-dimensional lex basis
                return Err(Error::PositiveDimensional);
            }
            let found = roots_dense(&g, cfg);
            outside += found.outside_field_count;
            for r in found.roots {
                let mut v = Vec::with_capacity(values.len() + 1);
                v.push(r);
                v.extend(values.iter().cloned());
                next.push(v);
            }
        }
        partial = next;
    }
    let mut solutions: Vec<Assignment> = partial
        .into_iter()
        .map(|vals| {
            Assignment(
                sys.vars.names().iter().cloned().zip(vals).collect::<BTreeMap<_, _>>(),
            )
        })
        .filter(|a| verify_assignment(sys, a))
        .collect();
    solutions.sort_by_key(|a| a.to_string());
    solutions.dedup();
    Ok(SolveOutcome {
        solutions,
        outside_field_count: outside,
        infeasible: false,
        constant_generator: false,
        basis_size: basis.len(),
    })
}

/// Assignment with rational values.
pub fn rational_assignment(pairs: &[(&str, BigRational)]) -> Assignment {
    Assignment(
        pairs
            .iter()
            .map(|(k, v)| (k.to_string(), CycloElem::from_rational(v.clone())))
            .collect(),
    )
}
