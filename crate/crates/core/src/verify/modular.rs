//! Orbits modulo a prime p ≡ 1 (mod 12), where ζ maps to a primitive 12th
//! root of unity in F_p. A failed return to the start disproves periodicity:
//! an identity of rational maps over Q(ζ₁₂) survives reduction at every
//! point where no denominator vanishes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::recursion::ScalarMap;
use crate::ring::CycloElem;

/// 10⁹ + 9, prime and ≡ 1 (mod 12).
const P: u64 = 1_000_000_009;

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

fn inv(a: u64) -> Option<u64> {
    (a != 0).then(|| pow(a, P - 2))
}

fn add(a: u64, b: u64) -> u64 {
    (a + b) % P
}

#[cfg(test)]
fn sub(a: u64, b: u64) -> u64 {
    (a + P - b) % P
}

/// A root of x⁴ − x² + 1 in F_p.
fn zeta() -> u64 {
    (2..)
        .map(|g| pow(g, (P - 1) / 12))
        .find(|&w| pow(w, 4) != 1 && pow(w, 6) != 1)
        .expect("F_p contains primitive 12th roots")
}

fn reduce_int(n: &BigInt) -> u64 {
    let m = n.mod_floor(&BigInt::from(P));
    m.to_u64().expect("reduced")
}

fn reduce(x: &CycloElem, w: u64) -> Option<u64> {
    let mut acc = 0;
    let mut wp = 1;
    for c in x.coords() {
        let d = reduce_int(c.denom());
        let n = reduce_int(c.numer());
        acc = add(acc, mul(mul(n, inv(d)?), wp));
        wp = mul(wp, w);
    }
    Some(acc)
}

struct Reduced {
    num: Vec<u64>,
    den_lead: u64,
    den_const: u64,
}

impl Reduced {
    fn new(map: &ScalarMap) -> Option<Self> {
        let w = zeta();
        Some(Self {
            num: map.num.iter().map(|x| reduce(x, w)).collect::<Option<_>>()?,
            den_lead: reduce(&map.den_lead, w)?,
            den_const: reduce(&map.den_const, w)?,
        })
    }

    fn order(&self) -> usize {
        self.num.len() - 1
    }

    fn step(&self, window: &[u64]) -> Option<u64> {
        let order = self.order();
        let mut n = self.num[0];
        for m in 1..=order {
            n = add(n, mul(self.num[m], window[order - m]));
        }
        let d = add(mul(self.den_lead, window[0]), self.den_const);
        Some(mul(n, inv(d)?))
    }
}

/// For each `k` in `1..=kmax`: `Some(false)` when periodicity with period
/// `k` is disproved, `Some(true)` when every sampled orbit returned (a
/// necessary condition only). `None` when the screen is inconclusive
/// (coefficients not reducible, or every start hit a zero denominator).
pub fn screen_periods(map: &ScalarMap, kmax: usize) -> Option<Vec<bool>> {
    let r = Reduced::new(map)?;
    let order = r.order();
    let mut seed: u64 = 0x243F_6A88_85A3_08D3;
    let mut next = || {
        seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (seed >> 33) % P
    };
    let mut alive = vec![true; kmax];
    let mut completed = 0;
    for _ in 0..12 {
        if completed == 3 {
            break;
        }
        let mut seq: Vec<u64> = (0..order).map(|_| next()).collect();
        let mut ok = true;
        for _ in 0..kmax {
            match r.step(&seq[seq.len() - order..]) {
                Some(v) => seq.push(v),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        completed += 1;
        for (k, a) in alive.iter_mut().enumerate() {
            let k = k + 1;
            if seq[k..k + order] != seq[..order] {
                *a = false;
            }
        }
    }
    (completed > 0).then_some(alive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recursion::{RecursionMap, RecursionSpec};

    #[test]
    fn zeta_satisfies_cyclotomic_relation() {
        let w = zeta();
        let w2 = mul(w, w);
        assert_eq!(add(sub(mul(w2, w2), w2), 1), 0);
    }

    #[test]
    fn lyness_screen() {
        let s = RecursionSpec::lyness().scalar_map().unwrap();
        let alive = screen_periods(&s, 12).unwrap();
        let periods: Vec<usize> = (1..=12).filter(|&k| alive[k - 1]).collect();
        assert_eq!(periods, vec![5, 10]);
    }
}
