use crate::poly::RatFunc;
use crate::recursion::{orbit_prefix, Direction, RecursionMap};
use crate::ring::CycloElem;

use super::modular::screen_periods;

/// Exact check that `k` forward steps return `(z1, …, z_order)`.
fn orbit_returns<M: RecursionMap>(map: &M, k: usize) -> bool {
    let order = map.order();
    // an identically vanishing denominator means no generic orbit exists
    let Ok(seq) = orbit_prefix::<CycloElem, _>(map, k + order, Direction::Forward) else {
        return false;
    };
    let start: &[RatFunc<CycloElem>] = &seq[..order];
    seq[k..k + order] == *start
}

/// True iff the k-fold iterate of the map is the identity as a rational map.
///
/// Concrete maps are first screened modulo a prime; a sampled orbit that
/// fails to close disproves periodicity without building the (possibly
/// huge) symbolic iterates.
pub fn is_periodic_symbolic<M: RecursionMap>(map: &M, k: usize) -> bool {
    if k == 0 {
        return false;
    }
    if let Some(s) = map.scalar_map() {
        if let Some(alive) = screen_periods(&s, k) {
            if !alive[k - 1] {
                return false;
            }
        }
    }
    orbit_returns(map, k)
}

/// Smallest `k ≤ kmax` with a symbolic period certificate.
pub fn minimal_period<M: RecursionMap>(map: &M, kmax: usize) -> Option<usize> {
    let alive = map.scalar_map().and_then(|s| screen_periods(&s, kmax));
    (1..=kmax)
        .filter(|&k| alive.as_ref().map_or(true, |a| a[k - 1]))
        .find(|&k| orbit_returns(map, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recursion::{RecursionKind, RecursionSpec};
    use crate::ring::{parse_cyclo, CycloElem};

    fn spec(kind: RecursionKind, b: &[(&str, &str)]) -> RecursionSpec {
        let b: Vec<(&str, CycloElem)> = b.iter().map(|(k, v)| (*k, parse_cyclo(v).unwrap())).collect();
        RecursionSpec::concrete(kind, &b).unwrap()
    }

    #[test]
    fn lyness_has_period_five() {
        let l = RecursionSpec::lyness();
        assert!(is_periodic_symbolic(&l, 5));
        assert!(is_periodic_symbolic(&l, 10));
        assert!(!is_periodic_symbolic(&l, 4));
        assert_eq!(minimal_period(&l, 24), Some(5));
    }

    #[test]
    fn published_examples() {
        let p8 = spec(RecursionKind::Order2Reduced, &[("a0", "(1 - I)/2"), ("a2", "I")]);
        assert!(is_periodic_symbolic(&p8, 8));
        assert_eq!(minimal_period(&p8, 24), Some(8));
        let todd = spec(RecursionKind::Order3Type1, &[("a0", "1"), ("a1", "1"), ("a3", "0")]);
        assert!(is_periodic_symbolic(&todd, 8));
        let six = spec(RecursionKind::Order2Reduced, &[("a0", "0"), ("a2", "0")]);
        assert_eq!(minimal_period(&six, 24), Some(6));
        let twelve = spec(RecursionKind::Order3Type1, &[("a0", "-1/2"), ("a1", "-1"), ("a3", "-1")]);
        assert_eq!(minimal_period(&twelve, 24), Some(12));
    }

    #[test]
    fn unscreened_path_agrees() {
        // the exact check alone, bypassing the modular screen
        let l = RecursionSpec::lyness();
        assert!(orbit_returns(&l, 5));
        assert!(!orbit_returns(&l, 3));
    }

    #[test]
    fn non_periodic_map() {
        let s = spec(RecursionKind::Order2Reduced, &[("a0", "2"), ("a2", "1/3")]);
        assert_eq!(minimal_period(&s, 24), None);
    }
}
