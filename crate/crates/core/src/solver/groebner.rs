//! Buchberger's algorithm in pure lexicographic order (the first variable of
//! the `VarSet` is the most significant), with the product and chain criteria
//! and the normal selection strategy.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::poly::{Monomial, Poly, VarSet};
use crate::ring::Field;

/// Terms in ascending lex order, so the leading term is the last one.
#[derive(Clone, Debug)]
struct LexPoly<C: Field> {
    terms: Vec<(Monomial, C)>,
}

impl<C: Field> LexPoly<C> {
    fn from_poly(p: &Poly<C>) -> Self {
        let mut terms = p.terms().to_vec();
        terms.sort_by(|a, b| a.0.cmp_lex(&b.0));
        Self { terms }
    }

    fn to_poly(&self, vars: &VarSet) -> Poly<C> {
        Poly::from_terms(vars, self.terms.clone())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms.last().expect("nonzero").0
    }

    fn lc(&self) -> &C {
        &self.terms.last().expect("nonzero").1
    }

    fn monic(mut self) -> Self {
        let inv = self.lc().inv().expect("nonzero leading coefficient");
        if !inv.is_one() {
            for t in &mut self.terms {
                t.1 = t.1.mul(&inv);
            }
        }
        self
    }

    /// `self − c·m·g`, merging two ascending term lists.
    fn sub_mul(&self, m: &Monomial, c: &C, g: &LexPoly<C>) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(t, x)| (t.mul(m), x.mul(c))).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => x.0.cmp_lex(&y.0),
            };
            match ord {
                Ordering::Less => out.push(a.next().expect("peeked").clone()),
                Ordering::Greater => {
                    let (t, x) = b.next().expect("peeked");
                    out.push((t, x.neg()));
                }
                Ordering::Equal => {
                    let (t, x) = a.next().expect("peeked");
                    let (_, y) = b.next().expect("peeked");
                    let d = x.sub(&y);
                    if !d.is_zero() {
                        out.push((*t, d));
                    }
                }
            }
        }
        Self { terms: out }
    }
}

/// Full reduction of `f` modulo `basis` (all basis elements monic).
fn reduce<C: Field>(f: &LexPoly<C>, basis: &[LexPoly<C>]) -> LexPoly<C> {
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, C)> = Vec::new();
    while let Some((m, c)) = p.terms.last().cloned() {
        match basis.iter().find(|g| g.lm().divides(&m)) {
            Some(g) => {
                let q = g.lm().quotient_of(&m);
                p = p.sub_mul(&q, &c, g);
            }
            None => {
                rem.push((m, c));
                p.terms.pop();
            }
        }
    }
    rem.reverse();
    LexPoly { terms: rem }
}

fn spoly<C: Field>(f: &LexPoly<C>, g: &LexPoly<C>) -> LexPoly<C> {
    let l = f.lm().lcm(g.lm());
    let zero = LexPoly { terms: Vec::new() };
    let a = zero.sub_mul(&f.lm().quotient_of(&l), &C::one().neg(), f);
    a.sub_mul(&g.lm().quotient_of(&l), &C::one(), g)
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Reduced Gröbner basis in lex order, monic, sorted by decreasing leading
/// monomial. `[1]` signals an inconsistent system; an empty input (or all
/// zero) yields an empty basis.
pub fn groebner_lex<C: Field>(gens: &[Poly<C>], vars: &VarSet) -> Vec<Poly<C>> {
    let mut basis: Vec<LexPoly<C>> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let unit = || vec![Poly::one(vars)];

    let add = |h: LexPoly<C>, basis: &mut Vec<LexPoly<C>>, pending: &mut HashSet<(usize, usize)>| -> bool {
        let h = h.monic();
        let constant = h.lm().is_one();
        let idx = basis.len();
        basis.push(h);
        for i in 0..idx {
            pending.insert((i, idx));
        }
        constant
    };

    let mut inputs: Vec<LexPoly<C>> = gens.iter().filter(|g| !g.is_zero()).map(LexPoly::from_poly).collect();
    inputs.sort_by(|a, b| a.lm().cmp_lex(b.lm()));
    for f in inputs {
        let r = reduce(&f, &basis);
        if !r.is_zero() && add(r, &mut basis, &mut pending) {
            return unit();
        }
    }

    while !pending.is_empty() {
        let &(i, j) = pending
            .iter()
            .min_by(|&&(a, b), &&(c, d)| {
                let l1 = basis[a].lm().lcm(basis[b].lm());
                let l2 = basis[c].lm().lcm(basis[d].lm());
                l1.total_degree()
                    .cmp(&l2.total_degree())
                    .then_with(|| l1.cmp_lex(&l2))
                    .then_with(|| (a, b).cmp(&(c, d)))
            })
            .expect("nonempty");
        pending.remove(&(i, j));
        let (fi, fj) = (&basis[i], &basis[j]);
        if fi.lm().is_coprime(fj.lm()) {
            continue;
        }
        let l = fi.lm().lcm(fj.lm());
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let r = reduce(&spoly(fi, fj), &basis);
        if !r.is_zero() && add(r, &mut basis, &mut pending) {
            return unit();
        }
    }

    // minimal basis: drop elements whose leading monomial is divisible by another's
    basis.sort_by(|a, b| a.lm().cmp_lex(b.lm()));
    let mut minimal: Vec<LexPoly<C>> = Vec::new();
    for f in basis {
        if !minimal.iter().any(|g| g.lm().divides(f.lm())) {
            minimal.push(f);
        }
    }
    // interreduce tails
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<LexPoly<C>> = minimal
            .iter()
            .enumerate()
            .filter(|&(m, _)| m != k)
            .map(|(_, g)| g.clone())
            .collect();
        reduced.push(reduce(&minimal[k], &others).monic());
    }
    reduced.sort_by(|a, b| b.lm().cmp_lex(a.lm()));
    reduced.iter().map(|f| f.to_poly(vars)).collect()
}

/// Remainder of `f` modulo a lex Gröbner basis.
pub fn lex_normal_form<C: Field>(f: &Poly<C>, basis: &[Poly<C>]) -> Poly<C> {
    let b: Vec<LexPoly<C>> = basis.iter().map(|g| LexPoly::from_poly(g).monic()).collect();
    reduce(&LexPoly::from_poly(f), &b).to_poly(f.vars())
}

/// Leading monomial of `p` in lex order.
pub fn lex_leading_monomial<C: Field>(p: &Poly<C>) -> Option<Monomial> {
    p.terms().iter().map(|t| t.0).max_by(|a, b| a.cmp_lex(b))
}

/// True when every variable has a pure power among the leading monomials,
/// i.e. the ideal has finitely many zeros.
pub fn is_zero_dimensional<C: Field>(basis: &[Poly<C>]) -> bool {
    let Some(first) = basis.first() else { return false };
    let n = first.vars().len();
    (0..n).all(|k| {
        basis.iter().any(|g| {
            let m = lex_leading_monomial(g).expect("nonzero");
            m.exp(k) > 0 && (0..n).all(|j| j == k || m.exp(j) == 0)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, QPoly};

    fn sys(src: &[&str], vars: &VarSet) -> Vec<QPoly> {
        src.iter().map(|s| parse_poly(s, vars).unwrap()).collect()
    }

    #[test]
    fn simple_bases() {
        let v = VarSet::new(&["x", "y"]).unwrap();
        assert_eq!(groebner_lex(&sys(&["x^2 - 1", "x - 1"], &v), &v), sys(&["x - 1"], &v));
        assert_eq!(groebner_lex(&sys(&["x*y - 1", "x"], &v), &v), sys(&["1"], &v));
    }

    #[test]
    fn circle_and_line() {
        let v = VarSet::new(&["x", "y"]).unwrap();
        let gens = sys(&["x^2 + y^2 - 1", "x - y"], &v);
        let g = groebner_lex(&gens, &v);
        assert_eq!(g, sys(&["x - y", "y^2 - 1/2"], &v));
        assert!(is_zero_dimensional(&g));
        for f in &gens {
            assert!(lex_normal_form(f, &g).is_zero());
        }
    }

    #[test]
    fn positive_dimensional_detected() {
        let v = VarSet::new(&["x", "y"]).unwrap();
        let g = groebner_lex(&sys(&["x*y"], &v), &v);
        assert!(!is_zero_dimensional(&g));
    }

    #[test]
    fn three_variables() {
        let v = VarSet::new(&["x", "y", "z"]).unwrap();
        let gens = sys(&["x + y + z - 6", "x*y + y*z + z*x - 11", "x*y*z - 6"], &v);
        let g = groebner_lex(&gens, &v);
        assert!(is_zero_dimensional(&g));
        // univariate polynomial in z: (z − 1)(z − 2)(z − 3)
        assert_eq!(g.last().unwrap(), &parse_poly("z^3 - 6*z^2 + 11*z - 6", &v).unwrap());
        for f in &gens {
            assert!(lex_normal_form(f, &g).is_zero());
        }
    }
}
