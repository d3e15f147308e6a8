//! Multivariate gcd, pseudo-remainders, resultants and square-free parts.
//!
//! The gcd is computed recursively: contents with respect to a main variable
//! are handled by recursion on fewer variables, primitive parts by a
//! subresultant polynomial remainder sequence. Before the full computation a
//! specialization test proves coprimality cheaply in the common case.

use super::univariate as uni;
use super::{Monomial, Poly};
use crate::error::{Error, Result};
use crate::ring::Field;

/// Polynomial in one main variable with multivariate coefficients, lowest
/// degree first, no trailing zeros.
type Dense<C> = Vec<Poly<C>>;

fn trim<C: Field>(mut v: Dense<C>) -> Dense<C> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn deg<C: Field>(v: &Dense<C>) -> usize {
    debug_assert!(!v.is_empty());
    v.len() - 1
}

fn exact<C: Field>(a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
    a.div_exact(b)
        .expect("exact division failed inside a remainder sequence")
}

fn div_exact_dense<C: Field>(a: &Dense<C>, d: &Poly<C>) -> Dense<C> {
    a.iter()
        .map(|c| {
            c.div_exact(d)
                .expect("exact division failed inside a remainder sequence")
        })
        .collect()
}

/// Pseudo-remainder lc(b)^(deg a − deg b + 1)·a mod b.
fn prem<C: Field>(a: &Dense<C>, b: &Dense<C>) -> Dense<C> {
    let n = deg(b);
    let lcb = &b[n];
    let m = deg(a);
    if m < n {
        return a.clone();
    }
    let mut r = a.clone();
    let mut rounds = 0;
    while !r.is_empty() && deg(&r) >= n {
        let dr = deg(&r);
        let c = r[dr].clone();
        for x in r.iter_mut() {
            *x = x.mul(lcb);
        }
        let shift = dr - n;
        for (k, bk) in b.iter().enumerate() {
            r[k + shift] = r[k + shift].sub(&c.mul(bk));
        }
        debug_assert!(r[dr].is_zero());
        r = trim(r);
        rounds += 1;
    }
    let missing = (m - n + 1) - rounds;
    if missing > 0 && !r.is_empty() {
        let f = lcb.pow(missing as u32);
        r = r.iter().map(|x| x.mul(&f)).collect();
    }
    r
}

fn vars_support<C: Field>(p: &Poly<C>) -> Vec<usize> {
    p.support()
}

/// Gcd of the coefficients of `p` with respect to variable `k`.
pub fn content_in<C: Field>(p: &Poly<C>, k: usize) -> Poly<C> {
    let mut coeffs: Vec<Poly<C>> = p.to_univariate(k).into_iter().filter(|c| !c.is_zero()).collect();
    coeffs.sort_by_key(|c| c.len());
    let mut g = Poly::zero(p.vars());
    for c in coeffs {
        g = gcd_unit(&g, &c);
        if g.is_constant() && !g.is_zero() {
            return Poly::one(p.vars());
        }
    }
    g
}

/// Small deterministic evaluation points.
struct Points(u64);

impl Points {
    fn next(&mut self) -> i64 {
        // xorshift64*
        self.0 ^= self.0 >> 12;
        self.0 ^= self.0 << 25;
        self.0 ^= self.0 >> 27;
        let v = self.0.wrapping_mul(0x2545_F491_4F6C_DD1D);
        (v % 61) as i64 - 30
    }
}

/// Sound coprimality certificate: for every shared variable, a specialization
/// of the others that keeps both leading coefficients nonzero yields a
/// constant univariate gcd. Returns false when no certificate was found.
fn certainly_coprime<C: Field>(p: &Poly<C>, q: &Poly<C>, shared: &[usize]) -> bool {
    let mut pts = Points(0x9E37_79B9_7F4A_7C15);
    'vars: for &k in shared {
        for _attempt in 0..4 {
            let bindings: Vec<(usize, C)> = (0..p.vars().len())
                .filter(|&j| j != k)
                .map(|j| (j, C::from_i64(pts.next())))
                .collect();
            let lp = p.lc_in(k).eval_indices(&bindings);
            let lq = q.lc_in(k).eval_indices(&bindings);
            if lp.is_zero() || lq.is_zero() {
                continue;
            }
            let up = p.eval_indices(&bindings).univariate_coeffs(k).expect("univariate");
            let uq = q.eval_indices(&bindings).univariate_coeffs(k).expect("univariate");
            let g = uni::gcd(&up, &uq);
            if uni::degree(&g) == Some(0) {
                continue 'vars;
            }
            return false;
        }
        return false;
    }
    true
}

/// A gcd up to a unit factor.
pub(crate) fn gcd_unit<C: Field>(p: &Poly<C>, q: &Poly<C>) -> Poly<C> {
    if p.is_zero() {
        return q.clone();
    }
    if q.is_zero() {
        return p.clone();
    }
    if p.is_constant() || q.is_constant() {
        return Poly::one(p.vars());
    }
    if p.len() == 1 || q.len() == 1 {
        let (mono, other) = if p.len() == 1 { (p, q) } else { (q, p) };
        let mut m = mono.terms()[0].0;
        for (t, _) in other.terms() {
            m = m.gcd(t);
        }
        return Poly::monomial(p.vars(), m, C::one());
    }
    let sp = vars_support(p);
    let sq = vars_support(q);
    if let Some(&k) = sp.iter().find(|k| !sq.contains(k)) {
        return gcd_unit(&content_in(p, k), q);
    }
    if let Some(&k) = sq.iter().find(|k| !sp.contains(k)) {
        return gcd_unit(p, &content_in(q, k));
    }
    // Pull out the common monomial factor so remainder sequences see smaller inputs.
    let mp = min_monomial(p);
    let mq = min_monomial(q);
    let mg = mp.gcd(&mq);
    if !mg.is_one() || !mp.is_one() || !mq.is_one() {
        let p2 = divide_monomial(p, &mp);
        let q2 = divide_monomial(q, &mq);
        let g = gcd_unit(&p2, &q2);
        return g.mul_monomial(&mg, &C::one());
    }
    if certainly_coprime(p, q, &sp) {
        return Poly::one(p.vars());
    }
    let k = *sp
        .iter()
        .min_by_key(|&&k| {
            let a = p.degree_in(k).unwrap_or(0);
            let b = q.degree_in(k).unwrap_or(0);
            (a.min(b), a.max(b))
        })
        .expect("nonconstant polynomial has a variable");
    let cp = content_in(p, k);
    let cq = content_in(q, k);
    let c = gcd_unit(&cp, &cq);
    let pp = exact(p, &cp);
    let pq = exact(q, &cq);
    let g = prs_gcd(trim(pp.to_univariate(k)), trim(pq.to_univariate(k)), k);
    let g = Poly::from_univariate(p.vars(), k, &g);
    c.mul(&g)
}

fn min_monomial<C: Field>(p: &Poly<C>) -> Monomial {
    let mut m = p.terms()[0].0;
    for (t, _) in p.terms() {
        m = m.gcd(t);
    }
    m
}

fn divide_monomial<C: Field>(p: &Poly<C>, m: &Monomial) -> Poly<C> {
    if m.is_one() {
        return p.clone();
    }
    let terms = p.terms().iter().map(|(t, c)| (m.quotient_of(t), c.clone())).collect();
    Poly::from_terms(p.vars(), terms)
}

/// Primitive part of a dense polynomial (coefficients share no factor).
fn primitive_dense<C: Field>(v: Dense<C>) -> Dense<C> {
    let mut coeffs: Vec<&Poly<C>> = v.iter().filter(|c| !c.is_zero()).collect();
    coeffs.sort_by_key(|c| c.len());
    let vars = v[0].vars().clone();
    let mut g = Poly::zero(&vars);
    for c in coeffs {
        g = gcd_unit(&g, c);
        if g.is_constant() {
            return v;
        }
    }
    div_exact_dense(&v, &g)
}

/// Subresultant remainder sequence on primitive inputs of positive degree.
fn prs_gcd<C: Field>(a: Dense<C>, b: Dense<C>, _k: usize) -> Dense<C> {
    let vars = a[0].vars().clone();
    let (mut a, mut b) = if deg(&a) >= deg(&b) { (a, b) } else { (b, a) };
    let mut g = Poly::one(&vars);
    let mut h = Poly::one(&vars);
    loop {
        let delta = deg(&a) - deg(&b);
        let r = prem(&a, &b);
        if r.is_empty() {
            return primitive_dense(b);
        }
        if deg(&r) == 0 {
            return vec![Poly::one(&vars)];
        }
        a = b;
        let divisor = g.mul(&h.pow(delta as u32));
        b = div_exact_dense(&r, &divisor);
        g = a[deg(&a)].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => exact(&g.pow(d as u32), &h.pow(d as u32 - 1)),
        };
    }
}

/// Greatest common divisor normalized to leading coefficient 1 (grlex).
/// `gcd(p, 0)` is `p` normalized; `gcd(0, 0)` is 0.
pub fn poly_gcd<C: Field>(p: &Poly<C>, q: &Poly<C>) -> Result<Poly<C>> {
    p.check_compatible(q)?;
    Ok(gcd_unit(p, q).monic())
}

/// Resultant with respect to the variable with index `k`.
pub fn resultant<C: Field>(p: &Poly<C>, q: &Poly<C>, k: usize) -> Result<Poly<C>> {
    p.check_compatible(q)?;
    let vars = p.vars().clone();
    if p.is_zero() || q.is_zero() {
        return Ok(Poly::zero(&vars));
    }
    let mut a = trim(p.to_univariate(k));
    let mut b = trim(q.to_univariate(k));
    if deg(&a) == 0 && deg(&b) == 0 {
        return Err(Error::Degenerate(format!(
            "both polynomials are constant in {}",
            vars.name(k)
        )));
    }
    let mut sign_negative = false;
    if deg(&a) < deg(&b) {
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            sign_negative = true;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let signed = |x: Poly<C>, neg: bool| if neg { x.neg() } else { x };
    if deg(&b) == 0 {
        return Ok(signed(b[0].pow(deg(&a) as u32), sign_negative));
    }
    let mut g = Poly::one(&vars);
    let mut h = Poly::one(&vars);
    loop {
        let (da, db) = (deg(&a), deg(&b));
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign_negative = !sign_negative;
        }
        let r = prem(&a, &b);
        a = b;
        if r.is_empty() {
            return Ok(Poly::zero(&vars));
        }
        b = div_exact_dense(&r, &g.mul(&h.pow(delta as u32)));
        g = a[deg(&a)].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => exact(&g.pow(d as u32), &h.pow(d as u32 - 1)),
        };
        if deg(&b) == 0 {
            let da = deg(&a) as u32;
            let res = exact(&b[0].pow(da), &h.pow(da - 1));
            return Ok(signed(res, sign_negative));
        }
    }
}

/// Resultant by variable name.
pub fn resultant_by_name<C: Field>(p: &Poly<C>, q: &Poly<C>, var: &str) -> Result<Poly<C>> {
    let k = p.vars().index(var)?;
    resultant(p, q, k)
}

/// Square-free part of a polynomial univariate in variable `k`, made monic.
pub fn squarefree<C: Field>(p: &Poly<C>, k: usize) -> Result<Poly<C>> {
    let coeffs = p.univariate_coeffs(k).ok_or_else(|| {
        Error::InvalidArgument(format!("polynomial is not univariate in {}", p.vars().name(k)))
    })?;
    Ok(Poly::from_univariate_coeffs(
        p.vars(),
        k,
        &uni::squarefree(&coeffs),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, QPoly, VarSet};
    use crate::ring::CycloElem;

    fn vs() -> VarSet {
        VarSet::new(&["x", "y", "a0", "a2"]).unwrap()
    }

    fn p(s: &str) -> QPoly {
        parse_poly(s, &vs()).unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(poly_gcd(&p("x^2 - y^2"), &p("x^2 + 2*x*y + y^2")).unwrap(), p("x + y"));
        let a = p("3*x^2*y - 6*a0");
        assert_eq!(poly_gcd(&a, &a).unwrap(), a.monic());
        assert_eq!(poly_gcd(&a, &QPoly::zero(&vs())).unwrap(), a.monic());
        assert!(poly_gcd(&p("x + 1"), &p("y + 1")).unwrap().is_one());
    }

    #[test]
    fn gcd_with_monomial_factors() {
        let g = poly_gcd(&p("x^3*y + x^2*y^2"), &p("x^2*y^3 - x^4*y")).unwrap();
        assert_eq!(g, p("x^3*y + x^2*y^2"));
    }

    #[test]
    fn gcd_hidden_common_factor() {
        let g = p("a0*x - y + 2*a2");
        let a = g.mul(&p("x^2 + a0*y + 1"));
        let b = g.mul(&p("x*y - a2^2 + 3"));
        assert_eq!(poly_gcd(&a, &b).unwrap(), g.monic());
    }

    #[test]
    fn gcd_over_cyclotomic_coefficients() {
        let vars = vs();
        let pc = |s: &str| parse_poly::<CycloElem>(s, &vars).unwrap();
        let g = pc("x - I*y");
        let a = g.mul(&pc("x + SQRT3"));
        let b = g.mul(&pc("y^2 - I"));
        assert_eq!(poly_gcd(&a, &b).unwrap(), g.monic());
    }

    #[test]
    fn resultant_examples() {
        let x = 0;
        assert_eq!(resultant(&p("x^2 - 3"), &p("x - 2"), x).unwrap(), p("1"));
        assert!(resultant(&p("x^2 + 1"), &p("x^2 + 1"), x).unwrap().is_zero());
        assert_eq!(resultant(&p("x^2 + a0"), &p("x + a2"), x).unwrap(), p("a2^2 + a0"));
        assert!(matches!(
            resultant(&p("a0 + 1"), &p("a2"), x),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree(&p("x^3 - x^2"), 0).unwrap(), p("x^2 - x"));
        assert_eq!(squarefree(&p("x^2 + 1"), 0).unwrap(), p("x^2 + 1"));
        let f = p("(x^2 + 1)^2*(x - 1)");
        let sf = squarefree(&f, 0).unwrap();
        assert_eq!(sf, p("(x^2 + 1)*(x - 1)"));
        // division oracle: the square-free part divides f and f / sf divides sf
        let rest = f.div_exact(&sf).unwrap();
        assert!(sf.div_exact(&rest).is_some());
        assert!(squarefree(&p("x*y"), 0).is_err());
    }
}
