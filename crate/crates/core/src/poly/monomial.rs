use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Upper bound on the number of variables in one [`VarSet`].
pub const MAX_VARS: usize = 8;

/// Ordered list of distinct variable names. The first variable is the most
/// significant one in every monomial order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len()));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (k, n) in names.iter().enumerate() {
            if names[..k].contains(n) {
                return Err(Error::InvalidArgument(format!("duplicate variable `{n}`")));
            }
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid || n == "I" || n == "SQRT3" || n == "cyclo" {
                return Err(Error::InvalidArgument(format!("invalid variable name `{n}`")));
            }
        }
        Ok(VarSet(Arc::new(names)))
    }

    /// The global orbit/parameter order z1, z2, z3, a0, a1, a2, a3.
    pub fn global() -> Self {
        Self::new(&["z1", "z2", "z3", "a0", "a1", "a2", "a3"]).expect("valid names")
    }

    /// Sub-list of the global order containing exactly `names`.
    pub fn global_subset<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let global = Self::global();
        for n in names {
            global.index(n.as_ref())?;
        }
        let keep: Vec<&String> = global
            .names()
            .iter()
            .filter(|g| names.iter().any(|n| n.as_ref() == g.as_str()))
            .collect();
        Self::new(&keep)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, k: usize) -> &str {
        &self.0[k]
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.0
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.iter().any(|n| n == name)
    }

    pub(crate) fn ensure_same(&self, other: &VarSet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::VarSetMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.join(", "))
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Exponent vector aligned with a [`VarSet`]; unused slots stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u16; MAX_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; MAX_VARS]);

    pub fn var(k: usize, e: u16) -> Self {
        let mut m = Self::ONE;
        m.0[k] = e;
        m
    }

    pub fn exps(&self) -> &[u16; MAX_VARS] {
        &self.0
    }

    pub fn exp(&self, k: usize) -> u16 {
        self.0[k]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Monomial(std::array::from_fn(|k| {
            self.0[k]
                .checked_add(o.0[k])
                .expect("monomial exponent overflow")
        }))
    }

    pub fn divides(&self, o: &Self) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming divisibility.
    pub fn quotient_of(&self, o: &Self) -> Self {
        Monomial(std::array::from_fn(|k| o.0[k] - self.0[k]))
    }

    pub fn lcm(&self, o: &Self) -> Self {
        Monomial(std::array::from_fn(|k| self.0[k].max(o.0[k])))
    }

    pub fn gcd(&self, o: &Self) -> Self {
        Monomial(std::array::from_fn(|k| self.0[k].min(o.0[k])))
    }

    pub fn is_coprime(&self, o: &Self) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn with_exp(&self, k: usize, e: u16) -> Self {
        let mut m = *self;
        m.0[k] = e;
        m
    }

    /// Graded-lexicographic order: total degree first, then the first
    /// variable is most significant.
    pub fn cmp_grlex(&self, o: &Self) -> Ordering {
        self.total_degree()
            .cmp(&o.total_degree())
            .then_with(|| self.0.cmp(&o.0))
    }

    /// Pure lexicographic order with the first variable most significant.
    pub fn cmp_lex(&self, o: &Self) -> Ordering {
        self.0.cmp(&o.0)
    }

    pub fn render(&self, vars: &VarSet) -> String {
        let parts: Vec<String> = (0..vars.len())
            .filter(|&k| self.0[k] > 0)
            .map(|k| match self.0[k] {
                1 => vars.name(k).to_string(),
                e => format!("{}^{}", vars.name(k), e),
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.0)
    }
}
