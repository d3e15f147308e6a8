use super::{GeneralSpec, RecursionSpec, Slot};
use crate::error::{Error, Result};
use crate::poly::{Poly, RatFunc, VarSet};
use crate::ring::{CycloElem, Field};

/// Direction of a symbolic orbit: forward iterates `R`, backward iterates
/// `R⁻¹` starting from the reversed initial values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// Anything that iterates like a fractional-linear recursion with a
/// fractional-linear inverse.
pub trait RecursionMap {
    fn order(&self) -> usize;

    /// Variables the orbit elements live in.
    fn orbit_varset(&self) -> VarSet;

    /// Coefficients as polynomials over `vars`.
    fn map_polys<C: Field>(&self, vars: &VarSet) -> Result<MapPolys<C>>;

    /// Concrete coefficients, `None` for symbolic maps.
    fn scalar_map(&self) -> Option<ScalarMap>;
}

/// Concrete coefficients of
/// `z_n = (Σ num[m]·z_{n−m} + num[0]) / (den_lead·z_{n−order} + den_const)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMap {
    pub num: Vec<CycloElem>,
    pub den_lead: CycloElem,
    pub den_const: CycloElem,
}

impl ScalarMap {
    pub fn order(&self) -> usize {
        self.num.len() - 1
    }
}

/// `z_n = (Σ num[m]·z_{n−m} + num[0]) / (den_lead·z_{n−order} + den_const)`.
#[derive(Clone, Debug)]
pub struct MapPolys<C: Field> {
    pub num: Vec<Poly<C>>,
    pub den_lead: Poly<C>,
    pub den_const: Poly<C>,
}

fn lift<C: Field>(x: &CycloElem, vars: &VarSet) -> Result<Poly<C>> {
    C::from_cyclo(x).map(|c| Poly::constant(vars, c)).ok_or_else(|| {
        Error::InvalidArgument(format!("coefficient {x} is not in {}", C::tag()))
    })
}

impl RecursionMap for RecursionSpec {
    fn order(&self) -> usize {
        self.kind().order()
    }

    fn orbit_varset(&self) -> VarSet {
        let kind = self.kind();
        let mut names: Vec<&str> = kind.orbit_vars().to_vec();
        if self.is_symbolic() {
            names.extend_from_slice(kind.live_params());
        }
        VarSet::global_subset(&names).expect("global names")
    }

    fn map_polys<C: Field>(&self, vars: &VarSet) -> Result<MapPolys<C>> {
        let num = self
            .kind()
            .shape()
            .into_iter()
            .map(|s| match s {
                Slot::Fixed(n) => Ok(Poly::constant(vars, C::from_i64(n))),
                Slot::Param(p) => match self.value(p) {
                    Some(v) => lift(v, vars),
                    None => Poly::var(vars, p),
                },
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MapPolys { num, den_lead: Poly::one(vars), den_const: Poly::zero(vars) })
    }

    fn scalar_map(&self) -> Option<ScalarMap> {
        Some(ScalarMap {
            num: self.numerator_values()?,
            den_lead: CycloElem::one(),
            den_const: CycloElem::zero(),
        })
    }
}

impl RecursionMap for GeneralSpec {
    fn order(&self) -> usize {
        GeneralSpec::order(self)
    }

    fn orbit_varset(&self) -> VarSet {
        let names = &["z1", "z2", "z3"][..self.order()];
        VarSet::global_subset(names).expect("global names")
    }

    fn map_polys<C: Field>(&self, vars: &VarSet) -> Result<MapPolys<C>> {
        Ok(MapPolys {
            num: self.numerator().iter().map(|x| lift(x, vars)).collect::<Result<_>>()?,
            den_lead: lift(self.b_lead(), vars)?,
            den_const: lift(self.b0(), vars)?,
        })
    }

    fn scalar_map(&self) -> Option<ScalarMap> {
        Some(ScalarMap {
            num: self.numerator().to_vec(),
            den_lead: self.b_lead().clone(),
            den_const: self.b0().clone(),
        })
    }
}

fn singular(e: Error) -> Error {
    match e {
        Error::DivisionByZero => Error::Degenerate("orbit denominator vanishes identically".into()),
        e => e,
    }
}

impl<C: Field> MapPolys<C> {
    fn order(&self) -> usize {
        self.num.len() - 1
    }

    /// `state` holds `z_{n−order}, …, z_{n−1}` (oldest first).
    pub fn forward(&self, state: &[RatFunc<C>]) -> Result<RatFunc<C>> {
        let order = self.order();
        check_len(state, order)?;
        let mut n = RatFunc::from_poly(self.num[0].clone());
        for m in 1..=order {
            n = n.add(&state[order - m].mul_poly(&self.num[m])?)?;
        }
        let d = state[0].mul_poly(&self.den_lead)?.add_poly(&self.den_const)?;
        n.div(&d).map_err(singular)
    }

    /// `state` holds `z_n, z_{n−1}, …, z_{n−order+1}`; returns `z_{n−order}`.
    pub fn inverse(&self, state: &[RatFunc<C>]) -> Result<RatFunc<C>> {
        let order = self.order();
        check_len(state, order)?;
        let mut n = RatFunc::from_poly(self.num[0].clone());
        for m in 1..order {
            n = n.add(&state[m].mul_poly(&self.num[m])?)?;
        }
        n = n.sub(&state[0].mul_poly(&self.den_const)?)?;
        let d = state[0].mul_poly(&self.den_lead)?.add_poly(&self.num[order].neg())?;
        n.div(&d).map_err(singular)
    }
}

fn check_len<T>(state: &[T], order: usize) -> Result<()> {
    if state.len() != order {
        return Err(Error::InvalidArgument(format!(
            "state has {} entries, expected {order}",
            state.len()
        )));
    }
    Ok(())
}

/// The initial variables `z1, …, z_order` as rational functions.
pub fn initial_state<C: Field, M: RecursionMap>(map: &M) -> Vec<RatFunc<C>> {
    let vars = map.orbit_varset();
    (1..=map.order())
        .map(|k| RatFunc::var(&vars, &format!("z{k}")).expect("orbit variable"))
        .collect()
}

/// Next orbit element from `z_{n−order}, …, z_{n−1}`.
pub fn forward_step<C: Field, M: RecursionMap>(map: &M, state: &[RatFunc<C>]) -> Result<RatFunc<C>> {
    let vars = state.first().map(|s| s.vars().clone()).unwrap_or_else(|| map.orbit_varset());
    map.map_polys(&vars)?.forward(state)
}

/// Preceding orbit element from `z_n, z_{n−1}, …, z_{n−order+1}`.
pub fn inverse_step<C: Field, M: RecursionMap>(map: &M, state: &[RatFunc<C>]) -> Result<RatFunc<C>> {
    let vars = state.first().map(|s| s.vars().clone()).unwrap_or_else(|| map.orbit_varset());
    map.map_polys(&vars)?.inverse(state)
}

/// Forward: `z_{order+1}, …, z_{order+steps}` from `(z1, …, z_order)`.
/// Backward: `u_{order+1}, …` from `u_1 = z_order, …, u_order = z_1`.
pub fn orbit_symbolic<C: Field, M: RecursionMap>(
    map: &M,
    steps: usize,
    direction: Direction,
) -> Result<Vec<RatFunc<C>>> {
    if steps == 0 {
        return Err(Error::InvalidArgument("steps must be at least 1".into()));
    }
    let order = map.order();
    let vars = map.orbit_varset();
    let polys = map.map_polys::<C>(&vars)?;
    let mut seq: Vec<RatFunc<C>> = initial_state(map);
    if direction == Direction::Backward {
        seq.reverse();
    }
    for _ in 0..steps {
        let window = &seq[seq.len() - order..];
        let next = match direction {
            Direction::Forward => polys.forward(window)?,
            // u_{m+1} = R⁻¹(u_{m−order+1}, …, u_m): the oldest u plays z_n
            Direction::Backward => polys.inverse(window)?,
        };
        seq.push(next);
    }
    Ok(seq.split_off(order))
}

/// The full sequence `x_1, …, x_len` (initial values included).
pub(crate) fn orbit_prefix<C: Field, M: RecursionMap>(
    map: &M,
    len: usize,
    direction: Direction,
) -> Result<Vec<RatFunc<C>>> {
    let order = map.order();
    let mut seq: Vec<RatFunc<C>> = initial_state(map);
    if direction == Direction::Backward {
        seq.reverse();
    }
    if len > order {
        seq.extend(orbit_symbolic(map, len - order, direction)?);
    }
    seq.truncate(len);
    Ok(seq)
}
