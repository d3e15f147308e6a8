//! Floating orbits in the primary complex embedding.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::recursion::RecursionMap;
use crate::ring::{cyclo_embed, ComplexApprox};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed_0005;

/// Singular starts tolerated per trial before giving up.
pub const MAX_RESAMPLES: usize = 10;

/// Outcome of a numeric cross-check.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericSummary {
    pub period: usize,
    pub periodic: bool,
    pub trials: usize,
    pub precision: u32,
    pub seed: u64,
    /// Largest |z_{n+k} − z_n| seen, as an f64 (0 when below its range).
    pub max_residual: f64,
    /// Upper bound on log₂ of the largest residual; `None` when all were zero.
    pub max_residual_log2: Option<i64>,
    /// Singular starts that were replaced.
    pub resamples: usize,
}

struct NumericMap {
    num: Vec<ComplexApprox>,
    den_lead: ComplexApprox,
    den_const: ComplexApprox,
}

impl NumericMap {
    fn new<M: RecursionMap>(map: &M, precision: u32) -> Result<Self> {
        let s = map
            .scalar_map()
            .ok_or_else(|| Error::InvalidArgument("numeric orbits need concrete coefficients".into()))?;
        let e = |x| cyclo_embed(x, precision);
        Ok(Self { num: s.num.iter().map(e).collect(), den_lead: e(&s.den_lead), den_const: e(&s.den_const) })
    }
}

/// Orbit values `z_1, …` (start included) for `steps` further steps.
/// Fails with `Singularity { step }` when |denominator| < 2^(−precision/2)
/// while computing `z_step`.
pub fn orbit_numeric<M: RecursionMap>(map: &M, start: &[ComplexApprox], steps: usize) -> Result<Vec<ComplexApprox>> {
    let order = map.order();
    if start.len() != order {
        return Err(Error::InvalidArgument(format!("start has {} values, expected {order}", start.len())));
    }
    let precision = start.iter().map(|z| z.precision).min().expect("nonempty start");
    if precision < 64 {
        return Err(Error::InvalidArgument("numeric orbits need at least 64 bits".into()));
    }
    let m = NumericMap::new(map, precision)?;
    let tiny = -(precision as i64) / 2;
    let mut seq = start.to_vec();
    for _ in 0..steps {
        let w = &seq[seq.len() - order..];
        let mut n = m.num[0].clone();
        for j in 1..=order {
            n = n.add(&m.num[j].mul(&w[order - j]));
        }
        let d = m.den_lead.mul(&w[0]).add(&m.den_const);
        let step = seq.len() + 1;
        if d.abs_lt_pow2(tiny) {
            return Err(Error::Singularity { step });
        }
        seq.push(n.div(&d).ok_or(Error::Singularity { step })?);
    }
    Ok(seq)
}

fn random_start(rng: &mut ChaCha8Rng, order: usize, precision: u32) -> Vec<ComplexApprox> {
    (0..order)
        .map(|_| ComplexApprox::from_f64(rng.gen_range(-2.0..=2.0), rng.gen_range(-2.0..=2.0), precision))
        .collect()
}

/// Samples `trials` starts in the box [−2,2]² (one ChaCha stream per trial)
/// and checks |z_{n+k} − z_n| < 2^(−precision/2) for n = 1..order.
/// Errors with `ResamplingExhausted` when some trial never finds a regular
/// start and no other trial disproved periodicity.
pub fn is_periodic_numeric<M: RecursionMap>(
    map: &M,
    k: usize,
    trials: usize,
    precision: u32,
    seed: u64,
) -> Result<NumericSummary> {
    if trials == 0 || k == 0 {
        return Err(Error::InvalidArgument("trials and period must be at least 1".into()));
    }
    let order = map.order();
    let tol = -(precision as i64) / 2;
    let mut summary = NumericSummary {
        period: k,
        periodic: true,
        trials,
        precision,
        seed,
        max_residual: 0.0,
        max_residual_log2: None,
        resamples: 0,
    };
    let mut exhausted = None;
    for t in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(t as u64);
        let mut attempt = 0;
        let orbit = loop {
            match orbit_numeric(map, &random_start(&mut rng, order, precision), k) {
                Ok(o) => break Some(o),
                Err(Error::Singularity { .. }) if attempt < MAX_RESAMPLES => {
                    attempt += 1;
                    summary.resamples += 1;
                }
                Err(Error::Singularity { .. }) => break None,
                Err(e) => return Err(e),
            }
        };
        let Some(orbit) = orbit else {
            exhausted = Some(attempt + 1);
            continue;
        };
        for n in 0..order {
            let r = orbit[n + k].sub(&orbit[n]);
            if !r.abs_lt_pow2(tol) {
                summary.periodic = false;
            }
            if let Some(b) = r.magnitude_bits() {
                summary.max_residual_log2 = Some(summary.max_residual_log2.map_or(b, |m| m.max(b)));
                summary.max_residual = summary.max_residual.max(r.abs().to_f64());
            }
        }
    }
    match exhausted {
        Some(attempts) if summary.periodic => Err(Error::ResamplingExhausted { attempts }),
        _ => Ok(summary),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recursion::{RecursionKind, RecursionSpec};
    use crate::ring::{parse_cyclo, CycloElem};

    fn c(re: f64) -> ComplexApprox {
        ComplexApprox::from_f64(re, 0.0, 256)
    }

    #[test]
    fn lyness_from_one_two() {
        let o = orbit_numeric(&RecursionSpec::lyness(), &[c(1.0), c(2.0)], 8).unwrap();
        let re: Vec<f64> = o.iter().map(|z| z.to_f64_pair().0).collect();
        let expect = [1.0, 2.0, 3.0, 2.0, 1.0, 1.0, 2.0, 3.0, 2.0, 1.0];
        for (a, b) in re.iter().zip(expect) {
            assert!((a - b).abs() < 1e-60);
        }
    }

    #[test]
    fn lyness_singular_start() {
        let e = orbit_numeric(&RecursionSpec::lyness(), &[c(0.0), c(1.0)], 3).unwrap_err();
        assert_eq!(e, Error::Singularity { step: 3 });
    }

    #[test]
    fn lyness_numeric_verdicts() {
        let l = RecursionSpec::lyness();
        let s = is_periodic_numeric(&l, 5, 20, 256, DEFAULT_SEED).unwrap();
        assert!(s.periodic);
        assert!(s.max_residual_log2.map_or(true, |b| b < -128));
        assert!(!is_periodic_numeric(&l, 4, 20, 256, DEFAULT_SEED).unwrap().periodic);
    }

    #[test]
    fn period_twelve_order2() {
        let a0 = parse_cyclo("1 + I/2 + SQRT3/2").unwrap();
        let spec = RecursionSpec::concrete(RecursionKind::Order2Reduced, &[("a0", a0), ("a2", -CycloElem::i())]);
        let spec = spec.unwrap();
        let s = is_periodic_numeric(&spec, 12, 5, 256, 7).unwrap();
        assert!(s.periodic, "{s:?}");
    }

    #[test]
    fn deterministic_per_seed() {
        let l = RecursionSpec::lyness();
        let a = is_periodic_numeric(&l, 4, 3, 128, 11).unwrap();
        let b = is_periodic_numeric(&l, 4, 3, 128, 11).unwrap();
        assert_eq!(a, b);
    }
}
