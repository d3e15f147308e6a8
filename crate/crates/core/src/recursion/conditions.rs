use std::fmt;

use num_rational::BigRational;

use super::orbit::{orbit_prefix, Direction};
use super::{RecursionKind, RecursionSpec};
use crate::error::{Error, Result};
use crate::poly::{QPoly, VarSet};

/// Meeting indices `(i, j)` with `i + j = k + order + 1` and `i` the ceiling
/// of half the sum.
pub fn meeting_indices(order: usize, k: usize) -> Result<(usize, usize)> {
    if !(2..=3).contains(&order) {
        return Err(Error::InvalidArgument(format!("order must be 2 or 3, got {order}")));
    }
    if k < order + 2 {
        return Err(Error::InvalidArgument(format!(
            "period {k} too small for order {order} (need k ≥ {})",
            order + 2
        )));
    }
    let total = k + order + 1;
    let i = total.div_ceil(2);
    Ok((i, total - i))
}

/// Polynomial conditions on the live parameters for `u_j = z_i` to hold
/// identically in the initial values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionSystem {
    pub kind: RecursionKind,
    pub period: usize,
    pub meeting: (usize, usize),
    pub vars: VarSet,
    pub generators: Vec<QPoly>,
}

impl ConditionSystem {
    pub fn order(&self) -> usize {
        self.kind.order()
    }

    /// True when some generator is a nonzero constant.
    pub fn has_constant_generator(&self) -> bool {
        self.generators.iter().any(|g| g.is_constant() && !g.is_zero())
    }
}

impl fmt::Display for ConditionSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# kind: {}", self.kind)?;
        writeln!(f, "# period: {}", self.period)?;
        writeln!(f, "# meeting: i={} j={}", self.meeting.0, self.meeting.1)?;
        writeln!(f, "# variables: {}", self.vars.names().join(", "))?;
        for g in &self.generators {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Removes integer content, fixes the sign, sorts canonically and drops
/// duplicates and zeros.
pub fn canonical_generators(gens: impl IntoIterator<Item = QPoly>) -> Vec<QPoly> {
    let mut out: Vec<(usize, String, QPoly)> = gens
        .into_iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let g = g.primitive_integer();
            (g.total_degree().unwrap_or(0) as usize, g.to_string(), g)
        })
        .collect();
    out.sort_by(|a, b| (a.0, a.2.len(), &a.1).cmp(&(b.0, b.2.len(), &b.1)));
    out.dedup_by(|a, b| a.1 == b.1);
    out.into_iter().map(|(_, _, g)| g).collect()
}

/// Builds the system from the cleared numerator of `u_j − z_i`.
pub fn build_condition_system(kind: RecursionKind, k: usize) -> Result<ConditionSystem> {
    build_with_meeting(kind, k, meeting_indices(kind.order(), k)?)
}

/// As [`build_condition_system`] with an explicit meeting pair.
pub fn build_with_meeting(kind: RecursionKind, k: usize, (i, j): (usize, usize)) -> Result<ConditionSystem> {
    let order = kind.order();
    if i + j != k + order + 1 || i == 0 || j == 0 {
        return Err(Error::InvalidArgument(format!(
            "meeting pair ({i}, {j}) does not satisfy i + j = {}",
            k + order + 1
        )));
    }
    let spec = RecursionSpec::symbolic(kind);
    let z = orbit_prefix::<BigRational, _>(&spec, i, Direction::Forward)?;
    let u = orbit_prefix::<BigRational, _>(&spec, j, Direction::Backward)?;
    let diff = u[j - 1].sub(&z[i - 1])?;
    let numerator = diff.num();
    let full = numerator.vars().clone();
    let orbit_idx: Vec<usize> = kind.orbit_vars().iter().map(|n| full.index(n).expect("orbit var")).collect();
    let params = VarSet::global_subset(kind.live_params())?;
    let gens = numerator
        .coeff_split(&orbit_idx)
        .into_iter()
        .map(|(_, c)| c.reindex(&params))
        .collect::<Result<Vec<_>>>()?;
    Ok(ConditionSystem {
        kind,
        period: k,
        meeting: (i, j),
        vars: params,
        generators: canonical_generators(gens),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::ring::rational;

    #[test]
    fn meeting_table() {
        let table = [
            ((2, 5), (4, 4)),
            ((2, 6), (5, 4)),
            ((2, 8), (6, 5)),
            ((2, 12), (8, 7)),
            ((3, 8), (6, 6)),
            ((3, 12), (8, 8)),
        ];
        for ((o, k), ij) in table {
            assert_eq!(meeting_indices(o, k).unwrap(), ij);
        }
        assert!(meeting_indices(2, 3).is_err());
    }

    #[test]
    fn order2_period5_contains_published_equation() {
        let sys = build_condition_system(RecursionKind::Order2Reduced, 5).unwrap();
        assert_eq!(sys.meeting, (4, 4));
        // independent computer-algebra run, generators listed up to sign
        let oracle = [
            "-a0 + a2^2 - a2 + 1",
            "-a0*a2 + a2^2",
            "a0 + a2^2 - 1",
            "a0*a2 + a2^2",
            "a0*a2^2",
            "a0*a2^2 - a0*a2 + a2^3",
            "a2",
            "a2^3 - a2^2 - a2",
        ];
        assert_eq!(sys.generators.len(), oracle.len());
        for o in oracle {
            let p = parse_poly::<BigRational>(o, &sys.vars).unwrap();
            assert!(sys.generators.contains(&p) || sys.generators.contains(&p.neg()), "{o}");
        }
        for g in &sys.generators {
            let v = g.eval_all(&[rational(1, 1), rational(0, 1)]);
            assert_eq!(v, rational(0, 1), "{g}");
        }
    }

    #[test]
    fn constant_generators_flag_infeasibility() {
        let sys = build_condition_system(RecursionKind::Order3Type2, 8).unwrap();
        assert!(sys.has_constant_generator());
        let sys = build_condition_system(RecursionKind::Order2Reduced, 4).unwrap();
        assert!(sys.has_constant_generator());
        assert_eq!(sys.generators.len(), 6);
    }

    #[test]
    fn generators_are_canonical() {
        let sys = build_condition_system(RecursionKind::Order2Reduced, 6).unwrap();
        assert_eq!(canonical_generators(sys.generators.clone()), sys.generators);
        for g in &sys.generators {
            assert_eq!(&g.primitive_integer(), g);
        }
    }
}
