use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, VarSet};
use crate::error::{Error, Result};
use crate::ring::{CycloElem, Field};

/// Sparse multivariate polynomial over an exact field.
///
/// Terms are kept in strictly decreasing graded-lexicographic order with no
/// zero coefficients, so structural equality is mathematical equality. The
/// zero polynomial has an empty term list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C: Field> {
    vars: VarSet,
    terms: Vec<(Monomial, C)>,
}

pub type QPoly = Poly<BigRational>;
pub type CycloPoly = Poly<CycloElem>;

impl<C: Field> Poly<C> {
    pub fn zero(vars: &VarSet) -> Self {
        Poly {
            vars: vars.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(vars: &VarSet, c: C) -> Self {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(Monomial::ONE, c)]
        };
        Poly {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, C::one())
    }

    pub fn var(vars: &VarSet, name: &str) -> Result<Self> {
        let k = vars.index(name)?;
        Ok(Self::monomial(vars, Monomial::var(k, 1), C::one()))
    }

    pub fn monomial(vars: &VarSet, m: Monomial, c: C) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Poly {
            vars: vars.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(vars: &VarSet, mut terms: Vec<(Monomial, C)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp_grlex(&a.0));
        let mut out: Vec<(Monomial, C)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly {
            vars: vars.clone(),
            terms: out,
        }
    }

    /// Terms already strictly decreasing in grlex with nonzero coefficients.
    pub(crate) fn from_sorted_terms(vars: &VarSet, terms: Vec<(Monomial, C)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0.cmp_grlex(&w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<C> {
        if self.is_zero() {
            Some(C::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> C {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(C::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    pub fn degree_in(&self, k: usize) -> Option<u16> {
        self.terms.iter().map(|(m, _)| m.exp(k)).max()
    }

    /// Minimum exponent of variable `k` over all terms.
    pub fn min_degree_in(&self, k: usize) -> Option<u16> {
        self.terms.iter().map(|(m, _)| m.exp(k)).min()
    }

    /// Indices of variables that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&k| self.terms.iter().any(|(m, _)| m.exp(k) > 0))
            .collect()
    }

    pub fn uses_var(&self, k: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(k) > 0)
    }

    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        self.vars.ensure_same(&other.vars)
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        debug_assert_eq!(self.vars, other.vars);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp_grlex(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        a[i].1.sub(&b[j].1)
                    } else {
                        a[i].1.add(&b[j].1)
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate_other { t.1.neg() } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly {
            vars: self.vars.clone(),
            terms: out,
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.mul(other))
    }

    /// Sum; panics on mismatched variable sets (use [`Poly::try_add`] to check).
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars, "variable set mismatch");
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars, "variable set mismatch");
        self.merge(other, true)
    }

    pub fn neg(&self) -> Self {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, a.mul(c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        // Multiplying by a monomial preserves the grlex order of terms.
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.mul(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars, "variable set mismatch");
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.vars);
        }
        if other.terms.len() == 1 {
            return self.mul_monomial(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_monomial(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: HashMap<Monomial, C> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = v.add(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, C)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp_grlex(&a.0));
        Poly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Divides by the leading coefficient (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, lc)) if lc.is_one() => self.clone(),
            Some((_, lc)) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Multivariate division by a single divisor in grlex order: returns
    /// `(q, r)` with `self = q·d + r` and no term of `r` divisible by lt(d).
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        self.check_compatible(d)?;
        let (lm, lc) = d.leading_term().ok_or(Error::DivisionByZero)?.clone();
        let lc_inv = lc.inv().expect("nonzero");
        let mut q = Vec::new();
        let mut r = Vec::new();
        let mut p = self.clone();
        while let Some((m, c)) = p.terms.first().cloned() {
            if lm.divides(&m) {
                let qm = lm.quotient_of(&m);
                let qc = c.mul(&lc_inv);
                p = p.sub(&d.mul_monomial(&qm, &qc));
                q.push((qm, qc));
            } else {
                r.push((m, c));
                p.terms.remove(0);
            }
        }
        Ok((
            Poly::from_sorted_terms(&self.vars, q),
            Poly::from_sorted_terms(&self.vars, r),
        ))
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.inv()?));
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let (lm, lc) = d.leading_term()?.clone();
        let lc_inv = lc.inv()?;
        let mut q = Vec::new();
        let mut p = self.clone();
        while let Some((m, c)) = p.terms.first().cloned() {
            if !lm.divides(&m) {
                return None;
            }
            let qm = lm.quotient_of(&m);
            let qc = c.mul(&lc_inv);
            p = p.sub(&d.mul_monomial(&qm, &qc));
            q.push((qm, qc));
        }
        Some(Poly::from_sorted_terms(&self.vars, q))
    }

    pub fn derivative(&self, k: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(k) > 0)
            .map(|(m, c)| {
                let e = m.exp(k);
                (m.with_exp(k, e - 1), c.mul(&C::from_i64(e as i64)))
            })
            .collect();
        Poly::from_terms(&self.vars, terms)
    }

    /// Coefficients with respect to variable `k`, lowest degree first. The
    /// coefficient polynomials keep the same variable set with exponent 0 at `k`.
    pub fn to_univariate(&self, k: usize) -> Vec<Self> {
        let deg = self.degree_in(k).unwrap_or(0) as usize;
        let mut buckets: Vec<Vec<(Monomial, C)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            buckets[m.exp(k) as usize].push((m.with_exp(k, 0), c.clone()));
        }
        buckets
            .into_iter()
            .map(|t| Poly::from_terms(&self.vars, t))
            .collect()
    }

    pub fn from_univariate(vars: &VarSet, k: usize, coeffs: &[Self]) -> Self {
        let mut terms = Vec::new();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                debug_assert_eq!(m.exp(k), 0);
                terms.push((m.with_exp(k, e as u16), a.clone()));
            }
        }
        Poly::from_terms(vars, terms)
    }

    /// Leading coefficient with respect to variable `k`.
    pub fn lc_in(&self, k: usize) -> Self {
        match self.degree_in(k) {
            None => Self::zero(&self.vars),
            Some(d) => {
                let terms = self
                    .terms
                    .iter()
                    .filter(|(m, _)| m.exp(k) == d)
                    .map(|(m, c)| (m.with_exp(k, 0), c.clone()))
                    .collect();
                Poly::from_terms(&self.vars, terms)
            }
        }
    }

    /// Substitutes the given variable indices by field values.
    pub fn eval_indices(&self, bindings: &[(usize, C)]) -> Self {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut cache: HashMap<(usize, u16), C> = HashMap::new();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut mono = *m;
            for (k, v) in bindings {
                let e = m.exp(*k);
                if e > 0 {
                    let p = cache.entry((*k, e)).or_insert_with(|| v.pow(e as u32)).clone();
                    coef = coef.mul(&p);
                    mono = mono.with_exp(*k, 0);
                }
            }
            terms.push((mono, coef));
        }
        Poly::from_terms(&self.vars, terms)
    }

    /// Partial evaluation by variable name.
    pub fn eval_partial(&self, bindings: &[(&str, C)]) -> Result<Self> {
        let idx = bindings
            .iter()
            .map(|(n, v)| Ok((self.vars.index(n)?, v.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.eval_indices(&idx))
    }

    /// Full evaluation at a point given in variable order.
    pub fn eval_all(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.vars.len());
        let bindings: Vec<(usize, C)> = point.iter().cloned().enumerate().collect();
        self.eval_indices(&bindings)
            .constant_value()
            .expect("fully bound polynomial is constant")
    }

    /// Re-expresses the polynomial over another variable set, mapping by name.
    /// Fails if a used variable is missing from `target`.
    pub fn reindex(&self, target: &VarSet) -> Result<Self> {
        if *target == self.vars {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for k in 0..self.vars.len() {
            let name = self.vars.name(k);
            map.push(target.index(name).ok());
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut nm = Monomial::ONE;
            for (k, slot) in map.iter().enumerate() {
                let e = m.exp(k);
                if e > 0 {
                    let t = slot.ok_or_else(|| Error::UnknownVariable(self.vars.name(k).to_string()))?;
                    nm.0[t] = e;
                }
            }
            terms.push((nm, c.clone()));
        }
        Ok(Poly::from_terms(target, terms))
    }

    pub fn map_coeffs<D: Field>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_terms(
            &self.vars,
            self.terms.iter().map(|(m, c)| (*m, f(c))).collect(),
        )
    }

    /// Splits `self = Σ mᵢ·pᵢ` where the mᵢ are monomials in `split` and the
    /// pᵢ do not involve `split`. Ordered by decreasing grlex of mᵢ.
    pub fn coeff_split(&self, split: &[usize]) -> Vec<(Monomial, Self)> {
        let mut groups: HashMap<Monomial, Vec<(Monomial, C)>> = HashMap::new();
        for (m, c) in &self.terms {
            let mut key = Monomial::ONE;
            let mut rest = *m;
            for &k in split {
                key.0[k] = m.exp(k);
                rest.0[k] = 0;
            }
            groups.entry(key).or_default().push((rest, c.clone()));
        }
        let mut out: Vec<(Monomial, Self)> = groups
            .into_iter()
            .map(|(k, t)| (k, Poly::from_terms(&self.vars, t)))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        out.sort_by(|a, b| b.0.cmp_grlex(&a.0));
        out
    }

    /// Split by variable names; see [`Poly::coeff_split`].
    pub fn coeff_split_by_name(&self, split: &[&str]) -> Result<Vec<(Monomial, Self)>> {
        let idx = split
            .iter()
            .map(|n| self.vars.index(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.coeff_split(&idx))
    }

    /// Is the polynomial univariate in `k` (constant in all other variables)?
    pub fn is_univariate_in(&self, k: usize) -> bool {
        self.terms
            .iter()
            .all(|(m, _)| (0..self.vars.len()).all(|j| j == k || m.exp(j) == 0))
    }

    /// Dense coefficient vector (lowest degree first) of a univariate polynomial.
    pub fn univariate_coeffs(&self, k: usize) -> Option<Vec<C>> {
        if !self.is_univariate_in(k) {
            return None;
        }
        let deg = self.degree_in(k).unwrap_or(0) as usize;
        let mut v = vec![C::zero(); deg + 1];
        for (m, c) in &self.terms {
            v[m.exp(k) as usize] = c.clone();
        }
        Some(v)
    }

    pub fn from_univariate_coeffs(vars: &VarSet, k: usize, coeffs: &[C]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (Monomial::var(k, e as u16), c.clone()))
            .collect();
        Poly::from_terms(vars, terms)
    }
}

impl QPoly {
    /// Lifts rational coefficients into Q(ζ₁₂).
    pub fn to_cyclo(&self) -> CycloPoly {
        self.map_coeffs(|c| CycloElem::from_rational(c.clone()))
    }

    /// Integer content-free form with positive leading coefficient. Zero stays zero.
    pub fn primitive_integer(&self) -> QPoly {
        if self.is_zero() {
            return self.clone();
        }
        let den = self
            .terms
            .iter()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let nums: Vec<BigInt> = self
            .terms
            .iter()
            .map(|(_, c)| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        let g = nums.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        let sign = if nums[0].is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let terms = self
            .terms
            .iter()
            .zip(nums)
            .map(|((m, _), n)| (*m, BigRational::from_integer(&n / &g * &sign)))
            .collect();
        Poly::from_sorted_terms(&self.vars, terms)
    }
}

impl CycloPoly {
    /// Drops to rational coefficients if every coefficient lies in Q.
    pub fn to_rational_poly(&self) -> Option<QPoly> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| c.as_rational().map(|q| (*m, q.clone())))
            .collect::<Option<Vec<_>>>()?;
        Some(Poly::from_sorted_terms(&self.vars, terms))
    }
}

impl<C: Field> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::render(self))
    }
}

impl<C: Field> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", super::text::render(self))
    }
}
