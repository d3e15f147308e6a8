use std::fmt;

use super::{RecursionKind, RecursionSpec};
use crate::error::{Error, Result};
use crate::ring::CycloElem;

/// Affine change of variable `G(x) = a·x + b` with `a ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    a: CycloElem,
    b: CycloElem,
}

impl AffineMap {
    pub fn new(a: CycloElem, b: CycloElem) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::InvalidArgument("affine map with a = 0 is not invertible".into()));
        }
        Ok(Self { a, b })
    }

    pub fn identity() -> Self {
        Self { a: CycloElem::one(), b: CycloElem::zero() }
    }

    pub fn a(&self) -> &CycloElem {
        &self.a
    }

    pub fn b(&self) -> &CycloElem {
        &self.b
    }

    pub fn is_identity(&self) -> bool {
        self.a == CycloElem::one() && self.b.is_zero()
    }

    /// `G⁻¹(x) = x/a − b/a`.
    pub fn inverse(&self) -> Self {
        let ia = self.a.inv().expect("a ≠ 0");
        Self { b: -(&self.b * &ia), a: ia }
    }

    pub fn apply(&self, x: &CycloElem) -> CycloElem {
        &(&self.a * x) + &self.b
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G(x) = ({})*x + ({})", self.a.to_notation(), self.b.to_notation())
    }
}

/// `z_n = (Σ_{m=1..order} a_m·z_{n−m} + a_0) / (b_order·z_{n−order} + b_0)`,
/// the fractional-linear form whose inverse is again fractional-linear.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneralSpec {
    /// `a[m]` multiplies `z_{n−m}`; `a[0]` is the constant term.
    a: Vec<CycloElem>,
    b_lead: CycloElem,
    b0: CycloElem,
}

impl GeneralSpec {
    /// `numerator` lists `a_0, a_1, …, a_order`.
    pub fn new(numerator: Vec<CycloElem>, b_lead: CycloElem, b0: CycloElem) -> Result<Self> {
        let order = numerator.len().checked_sub(1).unwrap_or(0);
        if order != 2 && order != 3 {
            return Err(Error::InvalidRecursion(format!(
                "order must be 2 or 3, got {order}"
            )));
        }
        if b_lead.is_zero() {
            return Err(Error::InvalidRecursion(format!(
                "b{order} = 0: the recursion becomes linear"
            )));
        }
        let merger = match order {
            2 => numerator[1].is_zero(),
            _ => numerator[1].is_zero() && numerator[2].is_zero(),
        };
        if merger {
            return Err(Error::InvalidRecursion(
                "the recursion is a trivial 'merger' (no dependence on the intermediate terms)".into(),
            ));
        }
        Ok(Self { a: numerator, b_lead, b0 })
    }

    /// Order-2 form from `(a2, a1, a0, b2, b0)`.
    pub fn order2(a2: CycloElem, a1: CycloElem, a0: CycloElem, b2: CycloElem, b0: CycloElem) -> Result<Self> {
        Self::new(vec![a0, a1, a2], b2, b0)
    }

    /// Order-3 form from `(a3, a2, a1, a0, b3, b0)`.
    pub fn order3(
        a3: CycloElem,
        a2: CycloElem,
        a1: CycloElem,
        a0: CycloElem,
        b3: CycloElem,
        b0: CycloElem,
    ) -> Result<Self> {
        Self::new(vec![a0, a1, a2, a3], b3, b0)
    }

    pub fn order(&self) -> usize {
        self.a.len() - 1
    }

    pub fn numerator(&self) -> &[CycloElem] {
        &self.a
    }

    pub fn b_lead(&self) -> &CycloElem {
        &self.b_lead
    }

    pub fn b0(&self) -> &CycloElem {
        &self.b0
    }

    /// Scales numerator and denominator so that `b_order = 1`.
    pub fn scaled(&self) -> Self {
        let s = self.b_lead.inv().expect("b_order ≠ 0");
        Self {
            a: self.a.iter().map(|x| x * &s).collect(),
            b_lead: CycloElem::one(),
            b0: &self.b0 * &s,
        }
    }

    /// Equality as maps (numerator and denominator up to a common factor).
    pub fn same_map(&self, other: &Self) -> bool {
        self.scaled() == other.scaled()
    }

    /// `G⁻¹ ∘ R ∘ G`, scaled so that `b_order` is unchanged.
    pub fn conjugate(&self, g: &AffineMap) -> Self {
        let order = self.order();
        let (a, b) = (&g.a, &g.b);
        let sum: CycloElem = self.a[1..].iter().fold(CycloElem::zero(), |acc, x| &acc + x);
        let den_shift = &(&self.b_lead * b) + &self.b0;
        let mut num: Vec<CycloElem> = self.a.iter().map(|x| a * x).collect();
        num[order] = a * &(&self.a[order] - &(b * &self.b_lead));
        num[0] = &(&(&sum * b) + &self.a[0]) - &(b * &den_shift);
        let b_lead = &(a * a) * &self.b_lead;
        let b0 = a * &den_shift;
        // rescale by 1/a² so that b_order is preserved
        let s = (a * a).inv().expect("a ≠ 0");
        Self {
            a: num.iter().map(|x| x * &s).collect(),
            b_lead: &b_lead * &s,
            b0: &b0 * &s,
        }
    }

    /// Conjugates to a reduced form. Returns the reduced spec and the map `G`
    /// with `conjugate(self, G)` equal to the reduced recursion.
    pub fn normalize_to_reduced(&self) -> Result<(RecursionSpec, AffineMap)> {
        let order = self.order();
        let (lead_coeff, kind) = match order {
            2 => (&self.a[1], RecursionKind::Order2Reduced),
            _ if !self.a[2].is_zero() => (&self.a[2], RecursionKind::Order3Type1),
            _ => (&self.a[1], RecursionKind::Order3Type2),
        };
        let ib = self.b_lead.inv()?;
        let g = AffineMap::new(lead_coeff * &ib, -(&self.b0 * &ib))?;
        let r = self.conjugate(&g).scaled();
        debug_assert!(r.b0.is_zero());
        let value = |m: usize| r.a[m].clone();
        let spec = match kind {
            RecursionKind::Order2Reduced => {
                debug_assert!(r.a[1] == CycloElem::one());
                RecursionSpec::concrete(kind, &[("a0", value(0)), ("a2", value(2))])?
            }
            RecursionKind::Order3Type1 => {
                debug_assert!(r.a[2] == CycloElem::one());
                RecursionSpec::concrete(kind, &[("a0", value(0)), ("a1", value(1)), ("a3", value(3))])?
            }
            RecursionKind::Order3Type2 => {
                debug_assert!(r.a[1] == CycloElem::one() && r.a[2].is_zero());
                RecursionSpec::concrete(kind, &[("a0", value(0)), ("a3", value(3))])?
            }
        };
        Ok((spec, g))
    }
}

impl RecursionSpec {
    /// The general form of a concrete reduced spec (`b_order = 1`, `b_0 = 0`).
    pub fn to_general(&self) -> Result<GeneralSpec> {
        let a = self.numerator_values().ok_or_else(|| {
            Error::InvalidRecursion("a symbolic spec has no concrete general form".into())
        })?;
        Ok(GeneralSpec { a, b_lead: CycloElem::one(), b0: CycloElem::zero() })
    }

    /// `G⁻¹ ∘ R ∘ G`. The reduced shape is generally not preserved, so the
    /// result is a general spec.
    pub fn conjugate(&self, g: &AffineMap) -> Result<GeneralSpec> {
        Ok(self.to_general()?.conjugate(g))
    }
}

impl fmt::Display for GeneralSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = self.order();
        let num: Vec<String> = (0..=order)
            .rev()
            .map(|m| {
                let c = self.a[m].to_notation();
                if m == 0 {
                    format!("({c})")
                } else {
                    format!("({c})*z_{{n-{m}}}")
                }
            })
            .collect();
        write!(
            f,
            "z_n = ({})/(({})*z_{{n-{order}}} + ({}))",
            num.join(" + "),
            self.b_lead.to_notation(),
            self.b0.to_notation()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> CycloElem {
        CycloElem::from_integer(n)
    }

    #[test]
    fn lyness_is_already_reduced() {
        let g = GeneralSpec::order2(c(0), c(1), c(1), c(1), c(0)).unwrap();
        let (spec, map) = g.normalize_to_reduced().unwrap();
        assert_eq!(spec, RecursionSpec::lyness());
        assert!(map.is_identity());
    }

    #[test]
    fn reduced_input_unchanged() {
        let s = RecursionSpec::concrete(
            RecursionKind::Order2Reduced,
            &[("a0", CycloElem::i()), ("a2", c(3))],
        )
        .unwrap();
        let (back, map) = s.to_general().unwrap().normalize_to_reduced().unwrap();
        assert_eq!(back, s);
        assert!(map.is_identity());
    }

    #[test]
    fn degenerate_forms_rejected() {
        let e = GeneralSpec::order2(c(1), c(1), c(1), c(0), c(1)).unwrap_err();
        assert!(e.to_string().contains("linear"));
        let e = GeneralSpec::order2(c(1), c(0), c(1), c(1), c(1)).unwrap_err();
        assert!(e.to_string().contains("merger"));
        let e = GeneralSpec::order3(c(1), c(0), c(0), c(1), c(1), c(0)).unwrap_err();
        assert!(e.to_string().contains("merger"));
        assert!(AffineMap::new(c(0), c(1)).is_err());
    }

    #[test]
    fn conjugation_group_action() {
        let s = GeneralSpec::order3(c(2), c(-1), CycloElem::i(), c(5), c(3), c(7)).unwrap();
        assert_eq!(s.conjugate(&AffineMap::identity()), s);
        let g = AffineMap::new(CycloElem::sqrt3(), CycloElem::from_ints([1, 0, 0, 2])).unwrap();
        assert_eq!(s.conjugate(&g).conjugate(&g.inverse()), s);
    }

    #[test]
    fn type_split_follows_a2() {
        let t1 = GeneralSpec::order3(c(2), c(3), c(1), c(5), c(2), c(4)).unwrap();
        assert_eq!(t1.normalize_to_reduced().unwrap().0.kind(), RecursionKind::Order3Type1);
        let t2 = GeneralSpec::order3(c(2), c(0), c(3), c(5), c(2), c(4)).unwrap();
        assert_eq!(t2.normalize_to_reduced().unwrap().0.kind(), RecursionKind::Order3Type2);
    }
}
