use num_rational::Ratio;
use serde::{Serialize, Serializer};

use super::{symbolic_within_ordinary, thm_a_predicate};
use crate::config::{Limits, OracleBounds};
use crate::error::{Error, Result};
use crate::simplicial::{symbolic_power, SimplicialSpec};

pub type Rational = Ratio<u64>;

fn ser_ratio<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(q)
}

/// `ρ(I(n,c)) = c (n - c + 2) / (n + 1)`, reduced.
pub fn resurgence(spec: SimplicialSpec) -> Rational {
    Rational::new(
        (spec.c() * spec.generator_degree()) as u64,
        spec.num_vars() as u64,
    )
}

/// A non-containment pair `(m_k, r_k)` with ratio approaching the resurgence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub k: u32,
    pub m: u32,
    pub r: u32,
    #[serde(serialize_with = "ser_ratio")]
    pub ratio: Rational,
}

/// `m_k = k c` and `r_k` the least integer strictly above `(n + 1) k / (n - c + 2)`.
pub fn resurgence_witness(spec: SimplicialSpec, k: u32) -> Result<Witness> {
    if k < 1 {
        return Err(Error::Parameter(
            "witness index k must be at least 1".into(),
        ));
    }
    let m = u32::try_from(u64::from(k) * spec.c() as u64).map_err(|_| Error::Overflow)?;
    // floor(q) + 1 is the least integer strictly greater than q, integral q included
    let floor = u64::from(k) * spec.num_vars() as u64 / spec.generator_degree() as u64;
    let r = u32::try_from(floor + 1).map_err(|_| Error::Overflow)?;
    Ok(Witness {
        k,
        m,
        r,
        ratio: Rational::new(m.into(), r.into()),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SupMethod {
    /// Decide each cell with the closed-form criterion.
    Predicate,
    /// Decide each cell by brute force; subject to oracle bounds.
    Oracle,
}

/// Largest `m / r` over non-containment cells of a box, with the first
/// cell (in `m`, then `r` order) attaining it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EmpiricalSup {
    #[serde(serialize_with = "ser_ratio")]
    pub ratio: Rational,
    pub m: u32,
    pub r: u32,
}

/// Sweeps `1 <= m <= max_m`, `1 <= r <= max_r`. `None` when every cell is a
/// containment.
pub fn empirical_resurgence_sup(
    spec: SimplicialSpec,
    max_m: u32,
    max_r: u32,
    method: SupMethod,
    bounds: &OracleBounds,
    limits: &Limits,
) -> Result<Option<EmpiricalSup>> {
    let cells = u64::from(max_m) * u64::from(max_r);
    if cells > limits.max_candidates {
        return Err(Error::Resource {
            what: "resurgence box",
            needed: cells.into(),
            limit: limits.max_candidates.into(),
        });
    }
    if method == SupMethod::Oracle {
        bounds.check(spec.n(), max_m, max_r)?;
    }
    let mut best: Option<EmpiricalSup> = None;
    for m in 1..=max_m {
        let symbolic = match method {
            SupMethod::Oracle => Some(symbolic_power(spec, m, limits)?),
            SupMethod::Predicate => None,
        };
        for r in 1..=max_r {
            let contained = match &symbolic {
                Some(ideal) => symbolic_within_ordinary(spec, ideal, r)?,
                None => thm_a_predicate(spec, m, r)?,
            };
            if contained {
                continue;
            }
            let ratio = Rational::new(m.into(), r.into());
            if best.is_none_or(|b| ratio > b.ratio) {
                best = Some(EmpiricalSup { ratio, m, r });
            }
        }
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResurgenceReport {
    pub n: usize,
    pub c: usize,
    #[serde(serialize_with = "ser_ratio")]
    pub rho: Rational,
    pub witnesses: Vec<Witness>,
    pub box_max_m: u32,
    pub box_max_r: u32,
    pub empirical_sup: Option<EmpiricalSup>,
}

/// Exact resurgence, witnesses for `k = 1..=max_k`, and a predicate sweep
/// over the `box_max_m × box_max_r` box.
pub fn resurgence_report(
    spec: SimplicialSpec,
    max_k: u32,
    box_max_m: u32,
    box_max_r: u32,
    limits: &Limits,
) -> Result<ResurgenceReport> {
    let witnesses = (1..=max_k)
        .map(|k| resurgence_witness(spec, k))
        .collect::<Result<Vec<_>>>()?;
    let empirical_sup = empirical_resurgence_sup(
        spec,
        box_max_m,
        box_max_r,
        SupMethod::Predicate,
        &OracleBounds::default(),
        limits,
    )?;
    Ok(ResurgenceReport {
        n: spec.n(),
        c: spec.c(),
        rho: resurgence(spec),
        witnesses,
        box_max_m,
        box_max_r,
        empirical_sup,
    })
}
