//! Roots in Q(ζ₁₂) of univariate polynomials over Q(ζ₁₂).
//!
//! Both complex embeddings of the square-free part are solved numerically by
//! Aberth iteration; every pairing of a root of the first image with a root
//! of the second is fed to algebraic recognition and the candidates are
//! certified by exact evaluation.

use num_rational::BigRational;

use super::SolverConfig;
use crate::error::{Error, Result};
use crate::poly::{univariate as uni, CycloPoly};
use crate::ring::{cyclo_recognize, embed_with, BigFloat, ComplexApprox, CycloApprox, CycloElem, Embedding};

/// In-field roots and the number of roots of the square-free part that were
/// not found in Q(ζ₁₂).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootsOutcome {
    pub roots: Vec<CycloElem>,
    pub outside_field_count: usize,
}

/// Roots of a polynomial in a single variable.
pub fn roots_in_cyclo(p: &CycloPoly, cfg: &SolverConfig) -> Result<RootsOutcome> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("the zero polynomial has every value as a root".into()));
    }
    let support = p.support();
    if support.len() > 1 {
        return Err(Error::InvalidArgument(format!("polynomial {p} is not univariate")));
    }
    let coeffs = match support.first() {
        Some(&k) => p.univariate_coeffs(k).expect("univariate"),
        None => vec![p.leading_coeff()],
    };
    Ok(roots_dense(&coeffs, cfg))
}

/// Dense variant (coefficients lowest degree first, nonzero polynomial).
pub fn roots_dense(coeffs: &[CycloElem], cfg: &SolverConfig) -> RootsOutcome {
    let sf = uni::squarefree(coeffs);
    let d = uni::degree(&sf).unwrap_or(0);
    let mut roots: Vec<CycloElem> = Vec::new();
    let certify = |c: CycloElem, roots: &mut Vec<CycloElem>| {
        let c = if cfg.perturb_candidates {
            &c + &CycloElem::from_rational(BigRational::new(1.into(), 997.into()))
        } else {
            c
        };
        if !roots.contains(&c) && uni::eval(&sf, &c).is_zero() {
            roots.push(c);
        }
    };
    match d {
        0 => {}
        1 => {
            // sf is monic: x + c0
            certify(-&sf[0], &mut roots);
        }
        _ => {
            let mut prec = cfg.precision;
            loop {
                if let (Some(r1), Some(r5)) = (
                    aberth(&sf, Embedding::Primary, prec),
                    aberth(&sf, Embedding::Secondary, prec),
                ) {
                    'outer: for a in &r1 {
                        for b in &r5 {
                            let v = CycloApprox { primary: a.clone(), secondary: b.clone() };
                            if let Some(c) = cyclo_recognize(&v, &cfg.denom_bound) {
                                certify(c, &mut roots);
                                if roots.len() == d {
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
                if roots.len() == d || prec.saturating_mul(2) > cfg.max_precision {
                    break;
                }
                prec *= 2;
            }
        }
    }
    roots.sort_by_key(|r| r.to_string());
    RootsOutcome { outside_field_count: d - roots.len(), roots }
}

/// Simultaneous root refinement of the image of a monic square-free
/// polynomial under one embedding. `None` when the iteration does not settle.
fn aberth(sf: &[CycloElem], embedding: Embedding, prec: u32) -> Option<Vec<ComplexApprox>> {
    let w = prec + 32;
    let d = sf.len() - 1;
    let c: Vec<ComplexApprox> = sf.iter().map(|x| embed_with(x, embedding, w)).collect();
    let dc: Vec<ComplexApprox> = (1..=d)
        .map(|k| c[k].mul(&ComplexApprox::new(BigFloat::from_int(k as i64), BigFloat::zero(), w)))
        .collect();

    // Fujiwara-type radius: 2·max |c_{d−k}|^{1/k}
    let mut radius_log = -60.0f64;
    for k in 1..=d {
        if let Some(m) = c[d - k].magnitude_bits() {
            radius_log = radius_log.max(m as f64 / k as f64);
        }
    }
    let radius = 2.0 * radius_log.exp2();
    let mut z: Vec<ComplexApprox> = (0..d)
        .map(|k| {
            let t = std::f64::consts::TAU * k as f64 / d as f64 + 0.4;
            ComplexApprox::from_f64(radius * t.cos(), radius * t.sin(), w)
        })
        .collect();

    let one = ComplexApprox::new(BigFloat::from_int(1), BigFloat::zero(), w);
    let max_iter = 200 + 20 * d;
    let mut settled = vec![false; d];
    for _ in 0..max_iter {
        for k in 0..d {
            if settled[k] {
                continue;
            }
            let (p, dp) = horner(&c, &dc, &z[k]);
            if p.is_zero() {
                settled[k] = true;
                continue;
            }
            let Some(ratio) = p.div(&dp) else {
                z[k] = z[k].add(&ComplexApprox::from_f64(1e-3, 1e-3, w));
                continue;
            };
            let mut s = ComplexApprox::zero(w);
            for j in 0..d {
                if j != k {
                    if let Some(t) = one.div(&z[k].sub(&z[j])) {
                        s = s.add(&t);
                    }
                }
            }
            let denom = one.sub(&ratio.mul(&s));
            let corr = ratio.div(&denom).unwrap_or(ratio);
            z[k] = z[k].sub(&corr);
            let scale = z[k].magnitude_bits().unwrap_or(0).max(0);
            if corr.abs_lt_pow2(scale - prec as i64 - 8) {
                settled[k] = true;
            }
        }
        if settled.iter().all(|&s| s) {
            return Some(z.into_iter().map(|x| x.with_precision(prec)).collect());
        }
    }
    None
}

fn horner(c: &[ComplexApprox], dc: &[ComplexApprox], x: &ComplexApprox) -> (ComplexApprox, ComplexApprox) {
    let mut p = c[c.len() - 1].clone();
    for k in (0..c.len() - 1).rev() {
        p = p.mul(x).add(&c[k]);
    }
    let mut dp = dc[dc.len() - 1].clone();
    for k in (0..dc.len() - 1).rev() {
        dp = dp.mul(x).add(&dc[k]);
    }
    (p, dp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, VarSet};

    fn roots(src: &str) -> RootsOutcome {
        let v = VarSet::new(&["x"]).unwrap();
        let p: CycloPoly = parse_poly(src, &v).unwrap();
        roots_in_cyclo(&p, &SolverConfig::default()).unwrap()
    }

    #[test]
    fn gaussian_roots() {
        let r = roots("x^2 + 1");
        assert_eq!(r.outside_field_count, 0);
        assert_eq!(r.roots.len(), 2);
        assert!(r.roots.contains(&CycloElem::i()));
        assert!(r.roots.contains(&-CycloElem::i()));
    }

    #[test]
    fn sqrt2_is_outside() {
        let r = roots("x^2 - 2");
        assert!(r.roots.is_empty());
        assert_eq!(r.outside_field_count, 2);
    }

    #[test]
    fn primitive_twelfth_roots() {
        let r = roots("x^4 - x^2 + 1");
        assert_eq!(r.outside_field_count, 0);
        assert_eq!(r.roots.len(), 4);
        for x in &r.roots {
            assert_eq!(x.root_of_unity_order(), Some(12));
        }
    }

    #[test]
    fn mixed_and_repeated() {
        // (x − 1/2)²·(x² − 3)·(x − I)·(x² + x + 1)·(x³ − 2)
        let r = roots("(x - 1/2)^2*(x^2 - 3)*(x - I)*(x^2 + x + 1)*(x^3 - 2)");
        assert_eq!(r.roots.len(), 6);
        assert_eq!(r.outside_field_count, 3);
    }

    #[test]
    fn zero_root_and_errors() {
        let r = roots("x^3 - x");
        assert_eq!(r.roots.len(), 3);
        let v = VarSet::new(&["x", "y"]).unwrap();
        assert!(roots_in_cyclo(&CycloPoly::zero(&v), &SolverConfig::default()).is_err());
        let p: CycloPoly = parse_poly("x*y", &v).unwrap();
        assert!(roots_in_cyclo(&p, &SolverConfig::default()).is_err());
    }
}
