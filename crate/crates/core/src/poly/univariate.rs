//! Dense univariate polynomials over a field, lowest degree first.
//! A normalized vector has no trailing zeros; the zero polynomial is empty.

use crate::ring::Field;

pub fn trim<C: Field>(mut v: Vec<C>) -> Vec<C> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

pub fn degree<C: Field>(v: &[C]) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

pub fn monic<C: Field>(v: Vec<C>) -> Vec<C> {
    let v = trim(v);
    match v.last() {
        None => v,
        Some(lc) => {
            let inv = lc.inv().expect("nonzero");
            v.iter().map(|c| c.mul(&inv)).collect()
        }
    }
}

/// Euclidean division `(q, r)`; panics on a zero divisor.
pub fn div_rem<C: Field>(a: &[C], b: &[C]) -> (Vec<C>, Vec<C>) {
    let b = trim(b.to_vec());
    let db = degree(&b).expect("division by the zero polynomial");
    let inv = b[db].inv().expect("nonzero");
    let mut r = trim(a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![C::zero(); r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = r[dr].mul(&inv);
        let shift = dr - db;
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                r[k + shift] = r[k + shift].sub(&c.mul(bk));
            }
        }
        r[dr] = C::zero();
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

/// Monic greatest common divisor (empty when both inputs are zero).
pub fn gcd<C: Field>(a: &[C], b: &[C]) -> Vec<C> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = monic(r);
    }
    monic(a)
}

pub fn derivative<C: Field>(a: &[C]) -> Vec<C> {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul(&C::from_i64(k as i64)))
            .collect(),
    )
}

pub fn eval<C: Field>(a: &[C], x: &C) -> C {
    a.iter().rev().fold(C::zero(), |acc, c| acc.mul(x).add(c))
}

pub fn mul<C: Field>(a: &[C], b: &[C]) -> Vec<C> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    trim(out)
}

/// Square-free part `a / gcd(a, a')`, monic.
pub fn squarefree<C: Field>(a: &[C]) -> Vec<C> {
    let a = trim(a.to_vec());
    if degree(&a).unwrap_or(0) == 0 {
        return monic(a);
    }
    let g = gcd(&a, &derivative(&a));
    monic(div_rem(&a, &g).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational;
    use num_rational::BigRational;

    fn v(c: &[i64]) -> Vec<BigRational> {
        c.iter().map(|&x| rational(x, 1)).collect()
    }

    #[test]
    fn euclid() {
        // (x − 1)(x + 2) and (x − 1)(x − 3)
        let a = v(&[-2, 1, 1]);
        let b = v(&[3, -4, 1]);
        assert_eq!(gcd(&a, &b), v(&[-1, 1]));
        let (q, r) = div_rem(&a, &v(&[-1, 1]));
        assert_eq!(q, v(&[2, 1]));
        assert!(r.is_empty());
    }

    #[test]
    fn squarefree_part() {
        // x³ − x² → x² − x
        assert_eq!(squarefree(&v(&[0, 0, -1, 1])), v(&[0, -1, 1]));
        assert_eq!(squarefree(&v(&[1, 0, 1])), v(&[1, 0, 1]));
    }
}
