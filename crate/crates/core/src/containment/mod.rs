//! Containment between symbolic and ordinary powers of `I(n,c)`.
//!
//! Closed-form predicates decide `I^(m)(n,c) ⊆ I^r(n,c)` (exactly) and give a
//! sufficient condition for `I^(m)(n,c) ⊆ I^(s)(n,d)`. Brute-force oracles
//! decide the same questions generator by generator.

mod resurgence;
pub mod verify;

pub use resurgence::{
    empirical_resurgence_sup, resurgence, resurgence_report, resurgence_witness, EmpiricalSup,
    Rational, ResurgenceReport, SupMethod, Witness,
};

use serde::Serialize;

use crate::config::{Limits, OracleBounds};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::simplicial::{ordinary_member, symbolic_member, symbolic_power, SimplicialSpec};

/// The decomposition `m = k c - p` with `0 <= p < c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ThmAParams {
    pub k: u64,
    pub p: u64,
}

pub fn thm_a_params(c: usize, m: u32) -> Result<ThmAParams> {
    if c < 1 || m < 1 {
        return Err(Error::Parameter(format!(
            "need c >= 1 and m >= 1, got c={c}, m={m}"
        )));
    }
    let c = c as u64;
    let m = u64::from(m);
    let k = m.div_ceil(c);
    Ok(ThmAParams { k, p: k * c - m })
}

/// Exact test of `I^(m)(n,c) ⊆ I^r(n,c)`: `r (n - c + 2) <= (n + 1) k - p`.
pub fn thm_a_predicate(spec: SimplicialSpec, m: u32, r: u32) -> Result<bool> {
    if r < 1 {
        return Err(Error::Parameter("r must be at least 1".into()));
    }
    let ThmAParams { k, p } = thm_a_params(spec.c(), m)?;
    let lhs = u128::from(r) * spec.generator_degree() as u128;
    let rhs = (spec.n() as u128 + 1) * u128::from(k) - u128::from(p);
    Ok(lhs <= rhs)
}

/// Sufficient condition for `I^(m)(n,c) ⊆ I^(s)(n,d)`: `c <= d` and `s c <= m d`.
pub fn thm_b_predicate(c: usize, d: usize, m: u32, s: u32) -> Result<bool> {
    if c < 1 || d < 1 || m < 1 || s < 1 {
        return Err(Error::Parameter(format!(
            "need c, d, m, s >= 1, got c={c}, d={d}, m={m}, s={s}"
        )));
    }
    Ok(c <= d && u128::from(s) * c as u128 <= u128::from(m) * d as u128)
}

/// Smallest `m` with `I^(m)(n,c) ⊆ I^r(n,c)`. Always at most `c r`.
pub fn containment_threshold(spec: SimplicialSpec, r: u32) -> Result<u32> {
    let cap = (spec.c() as u32).saturating_mul(r);
    for m in 1..=cap {
        if thm_a_predicate(spec, m, r)? {
            return Ok(m);
        }
    }
    Err(Error::Parameter(format!(
        "no threshold found up to m = {cap}"
    )))
}

/// Decides `I^(m)(n,c) ⊆ I^r(n,c)` by testing every minimal generator of
/// the symbolic power against the ordinary-power membership criterion.
pub fn containment_oracle(spec: SimplicialSpec, m: u32, r: u32, limits: &Limits) -> Result<bool> {
    let symbolic = symbolic_power(spec, m, limits)?;
    symbolic_within_ordinary(spec, &symbolic, r)
}

/// Like [`containment_oracle`] with a precomputed symbolic power.
pub fn symbolic_within_ordinary(
    spec: SimplicialSpec,
    symbolic: &MonomialIdeal,
    r: u32,
) -> Result<bool> {
    for g in symbolic.generators() {
        if !ordinary_member(spec, r, g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides `I^(m)(n,c) ⊆ I^(s)(n,d)` generator by generator.
pub fn symbolic_containment_oracle(
    n: usize,
    c: usize,
    d: usize,
    m: u32,
    s: u32,
    limits: &Limits,
) -> Result<bool> {
    let source = SimplicialSpec::new(n, c)?;
    let target = SimplicialSpec::new(n, d)?;
    let symbolic = symbolic_power(source, m, limits)?;
    symbolic_within_symbolic(target, &symbolic, s)
}

pub fn symbolic_within_symbolic(
    target: SimplicialSpec,
    symbolic: &MonomialIdeal,
    s: u32,
) -> Result<bool> {
    for g in symbolic.generators() {
        if !symbolic_member(target, s, g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ContainmentQuery {
    /// `I^(m)(n,c) ⊆ I^r(n,c)`
    Ordinary { n: usize, c: usize, m: u32, r: u32 },
    /// `I^(m)(n,c) ⊆ I^(s)(n,d)`
    Symbolic {
        n: usize,
        c: usize,
        d: usize,
        m: u32,
        s: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ContainmentVerdict {
    pub query: ContainmentQuery,
    pub fast_path: bool,
    pub oracle: Option<bool>,
    pub agree: Option<bool>,
}

impl ContainmentVerdict {
    /// Verdict for `I^(m)(n,c) ⊆ I^r(n,c)`; the oracle runs only when
    /// `oracle` is given, and only inside its bounds.
    pub fn ordinary(
        spec: SimplicialSpec,
        m: u32,
        r: u32,
        oracle: Option<(&OracleBounds, &Limits)>,
    ) -> Result<Self> {
        let fast_path = thm_a_predicate(spec, m, r)?;
        let oracle = match oracle {
            Some((bounds, limits)) => {
                bounds.check(spec.n(), m, r)?;
                Some(containment_oracle(spec, m, r, limits)?)
            }
            None => None,
        };
        Ok(Self::assemble(
            ContainmentQuery::Ordinary {
                n: spec.n(),
                c: spec.c(),
                m,
                r,
            },
            fast_path,
            oracle,
        ))
    }

    /// Verdict for `I^(m)(n,c) ⊆ I^(s)(n,d)`. A false fast path is
    /// inconclusive; the oracle settles it.
    pub fn symbolic(
        n: usize,
        c: usize,
        d: usize,
        m: u32,
        s: u32,
        oracle: Option<(&OracleBounds, &Limits)>,
    ) -> Result<Self> {
        SimplicialSpec::new(n, c)?;
        SimplicialSpec::new(n, d)?;
        let fast_path = thm_b_predicate(c, d, m, s)?;
        let oracle = match oracle {
            Some((bounds, limits)) => {
                bounds.check(n, m, 1)?;
                Some(symbolic_containment_oracle(n, c, d, m, s, limits)?)
            }
            None => None,
        };
        Ok(Self::assemble(
            ContainmentQuery::Symbolic { n, c, d, m, s },
            fast_path,
            oracle,
        ))
    }

    fn assemble(query: ContainmentQuery, fast_path: bool, oracle: Option<bool>) -> Self {
        ContainmentVerdict {
            query,
            fast_path,
            oracle,
            agree: oracle.map(|o| o == fast_path),
        }
    }

    /// The exact criterion must match its oracle; the sufficient one only
    /// has to imply it.
    pub fn is_consistent(&self) -> bool {
        match (self.query, self.oracle) {
            (_, None) => true,
            (ContainmentQuery::Ordinary { .. }, Some(o)) => o == self.fast_path,
            (ContainmentQuery::Symbolic { .. }, Some(o)) => !self.fast_path || o,
        }
    }
}
