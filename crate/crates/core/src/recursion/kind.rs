use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::CycloElem;

/// The reduced recursion families.
///
/// * `Order2Reduced`: `z_n = (a2·z_{n−2} + z_{n−1} + a0) / z_{n−2}`
/// * `Order3Type1`: `z_n = (a3·z_{n−3} + z_{n−2} + a1·z_{n−1} + a0) / z_{n−3}`
/// * `Order3Type2`: `z_n = (a3·z_{n−3} + z_{n−1} + a0) / z_{n−3}`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RecursionKind {
    Order2Reduced,
    Order3Type1,
    Order3Type2,
}

impl RecursionKind {
    pub const ALL: [RecursionKind; 3] = [
        RecursionKind::Order2Reduced,
        RecursionKind::Order3Type1,
        RecursionKind::Order3Type2,
    ];

    pub fn order(self) -> usize {
        match self {
            RecursionKind::Order2Reduced => 2,
            _ => 3,
        }
    }

    /// Live parameters in global variable order.
    pub fn live_params(self) -> &'static [&'static str] {
        match self {
            RecursionKind::Order2Reduced => &["a0", "a2"],
            RecursionKind::Order3Type1 => &["a0", "a1", "a3"],
            RecursionKind::Order3Type2 => &["a0", "a3"],
        }
    }

    /// Orbit variables `z1..z_order`.
    pub fn orbit_vars(self) -> &'static [&'static str] {
        match self.order() {
            2 => &["z1", "z2"],
            _ => &["z1", "z2", "z3"],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RecursionKind::Order2Reduced => "order2",
            RecursionKind::Order3Type1 => "type1",
            RecursionKind::Order3Type2 => "type2",
        }
    }

    /// Numerator coefficient of `z_{n−m}` for `m = 0..=order` (`m = 0` is the
    /// constant term) as either a fixed integer or a live parameter name.
    pub(crate) fn shape(self) -> Vec<Slot> {
        use Slot::*;
        match self {
            RecursionKind::Order2Reduced => vec![Param("a0"), Fixed(1), Param("a2")],
            RecursionKind::Order3Type1 => vec![Param("a0"), Param("a1"), Fixed(1), Param("a3")],
            RecursionKind::Order3Type2 => vec![Param("a0"), Fixed(1), Fixed(0), Param("a3")],
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) enum Slot {
    Fixed(i64),
    Param(&'static str),
}

impl fmt::Display for RecursionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RecursionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.trim().to_ascii_lowercase().chars().filter(|c| *c != '-' && *c != '_').collect();
        match key.as_str() {
            "order2" | "order2reduced" | "o2" | "2" => Ok(RecursionKind::Order2Reduced),
            "type1" | "order3type1" | "t1" => Ok(RecursionKind::Order3Type1),
            "type2" | "order3type2" | "t2" => Ok(RecursionKind::Order3Type2),
            other => Err(Error::InvalidArgument(format!(
                "unknown recursion kind `{other}` (expected order2, type1 or type2)"
            ))),
        }
    }
}

/// A reduced recursion: either fully symbolic or with every live parameter
/// bound to a value in Q(ζ₁₂).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RecursionSpec {
    kind: RecursionKind,
    values: Option<Vec<CycloElem>>,
}

impl RecursionSpec {
    pub fn symbolic(kind: RecursionKind) -> Self {
        Self { kind, values: None }
    }

    /// Binds every live parameter; missing, unknown or repeated names are rejected.
    pub fn concrete<S: AsRef<str>>(kind: RecursionKind, bindings: &[(S, CycloElem)]) -> Result<Self> {
        let live = kind.live_params();
        let mut values: Vec<Option<CycloElem>> = vec![None; live.len()];
        for (name, v) in bindings {
            let name = name.as_ref();
            let k = live.iter().position(|p| *p == name).ok_or_else(|| {
                Error::InvalidRecursion(format!("`{name}` is not a parameter of {kind}"))
            })?;
            if values[k].replace(v.clone()).is_some() {
                return Err(Error::InvalidRecursion(format!("`{name}` bound twice")));
            }
        }
        if values.iter().all(Option::is_none) {
            return Ok(Self::symbolic(kind));
        }
        let values = values
            .into_iter()
            .zip(live)
            .map(|(v, name)| {
                v.ok_or_else(|| {
                    Error::InvalidRecursion(format!(
                        "`{name}` is unbound; specs must be fully concrete or fully symbolic"
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { kind, values: Some(values) })
    }

    pub fn from_map(kind: RecursionKind, map: &BTreeMap<String, CycloElem>) -> Result<Self> {
        let pairs: Vec<(&str, CycloElem)> = map.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
        Self::concrete(kind, &pairs)
    }

    /// Lyness' recursion `z_n = (1 + z_{n−1}) / z_{n−2}`.
    pub fn lyness() -> Self {
        Self::concrete(
            RecursionKind::Order2Reduced,
            &[("a0", CycloElem::one()), ("a2", CycloElem::zero())],
        )
        .expect("valid")
    }

    pub fn kind(&self) -> RecursionKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.kind.order()
    }

    pub fn is_symbolic(&self) -> bool {
        self.values.is_none()
    }

    pub fn value(&self, name: &str) -> Option<&CycloElem> {
        let k = self.kind.live_params().iter().position(|p| *p == name)?;
        self.values.as_ref().map(|v| &v[k])
    }

    /// Live parameter bindings in global order (empty when symbolic).
    pub fn bindings(&self) -> Vec<(&'static str, CycloElem)> {
        match &self.values {
            None => Vec::new(),
            Some(v) => self.kind.live_params().iter().copied().zip(v.iter().cloned()).collect(),
        }
    }

    /// Concrete numerator coefficients of `z_{n−m}`, `m = 0..=order`.
    pub fn numerator_values(&self) -> Option<Vec<CycloElem>> {
        self.values.as_ref()?;
        Some(
            self.kind
                .shape()
                .into_iter()
                .map(|s| match s {
                    Slot::Fixed(n) => CycloElem::from_integer(n),
                    Slot::Param(p) => self.value(p).expect("bound").clone(),
                })
                .collect(),
        )
    }

    /// Human-readable recurrence, e.g. `z_n = (z_{n-1} + 1)/z_{n-2}`.
    pub fn formula(&self) -> String {
        let order = self.order();
        let mut parts: Vec<(String, Option<String>)> = Vec::new();
        for m in (0..=order).rev() {
            let var = (m > 0).then(|| format!("z_{{n-{m}}}"));
            let coeff = match self.kind.shape()[m] {
                Slot::Fixed(0) => continue,
                Slot::Fixed(n) => CycloElem::from_integer(n).to_notation(),
                Slot::Param(p) => match self.value(p) {
                    None => p.to_string(),
                    Some(v) if v.is_zero() => continue,
                    Some(v) => v.to_notation(),
                },
            };
            parts.push((coeff, var));
        }
        let mut out = String::new();
        for (k, (coeff, var)) in parts.iter().enumerate() {
            let wrapped = if coeff.contains(' ') { format!("({coeff})") } else { coeff.clone() };
            let term = match var {
                None => wrapped,
                Some(v) if coeff == "1" => v.clone(),
                Some(v) if coeff == "-1" => format!("-{v}"),
                Some(v) => format!("{wrapped}*{v}"),
            };
            match (k, term.strip_prefix('-')) {
                (0, _) => out.push_str(&term),
                (_, Some(rest)) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                (_, None) => {
                    out.push_str(" + ");
                    out.push_str(&term);
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        format!("z_n = ({out})/z_{{n-{order}}}")
    }
}

impl fmt::Display for RecursionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.kind)?;
        match &self.values {
            None => f.write_str("symbolic"),
            Some(_) => {
                let parts: Vec<String> = self
                    .bindings()
                    .iter()
                    .map(|(n, v)| format!("{n} = {}", v.to_notation()))
                    .collect();
                f.write_str(&parts.join(", "))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_round_trip_names() {
        for k in RecursionKind::ALL {
            assert_eq!(k.name().parse::<RecursionKind>().unwrap(), k);
        }
        assert!("order4".parse::<RecursionKind>().is_err());
    }

    #[test]
    fn mixed_specs_rejected() {
        let k = RecursionKind::Order3Type1;
        assert!(RecursionSpec::concrete(k, &[("a0", CycloElem::one())]).is_err());
        assert!(RecursionSpec::concrete(k, &[("a2", CycloElem::one())]).is_err());
        let none: &[(&str, CycloElem)] = &[];
        assert!(RecursionSpec::concrete(k, none).unwrap().is_symbolic());
    }

    #[test]
    fn formulas() {
        assert_eq!(RecursionSpec::lyness().formula(), "z_n = (z_{n-1} + 1)/z_{n-2}");
        assert_eq!(
            RecursionSpec::symbolic(RecursionKind::Order3Type1).formula(),
            "z_n = (a3*z_{n-3} + z_{n-2} + a1*z_{n-1} + a0)/z_{n-3}"
        );
        let s = RecursionSpec::concrete(
            RecursionKind::Order3Type1,
            &[
                ("a0", CycloElem::from_integer(-1)),
                ("a1", CycloElem::from_integer(-1)),
                ("a3", CycloElem::zero()),
            ],
        )
        .unwrap();
        assert_eq!(s.formula(), "z_n = (z_{n-2} - z_{n-1} - 1)/z_{n-3}");
    }
}
