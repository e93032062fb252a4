//! The simplicial ideals `I(n,c)`: ideals of the union of all codimension-`c`
//! coordinate faces of projective `n`-space, together with their ordinary
//! and symbolic powers.
//!
//! Symbolic powers are computed two ways. The criterion route enumerates
//! exponent vectors whose every `c`-subset of coordinates sums to at least
//! `m`. The intersection route intersects the `m`-th powers of the face
//! primes. Both must agree.

use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::error::{check_dim, Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Exponent, Monomial};

/// The pair `(n, c)` naming `I(n,c)`, with `1 <= c <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimplicialSpec {
    n: usize,
    c: usize,
}

impl SimplicialSpec {
    pub fn new(n: usize, c: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::Parameter(format!("n must be at least 1, got {n}")));
        }
        if c < 1 || c > n {
            return Err(Error::Parameter(format!(
                "codimension c must satisfy 1 <= c <= n = {n}, got {c}"
            )));
        }
        Ok(SimplicialSpec { n, c })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn num_vars(&self) -> usize {
        self.n + 1
    }

    /// Degree `n + 2 - c` of the squarefree generators.
    pub fn generator_degree(&self) -> usize {
        self.n + 2 - self.c
    }

    /// Every valid spec with `n <= max_n`, ordered by `(n, c)`.
    pub fn all_up_to(max_n: usize) -> Vec<SimplicialSpec> {
        (1..=max_n)
            .flat_map(|n| (1..=n).map(move |c| SimplicialSpec { n, c }))
            .collect()
    }
}

impl fmt::Display for SimplicialSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I({},{})", self.n, self.c)
    }
}

/// A codimension-`c` coordinate face, named by the `c` variables vanishing on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FacePrime {
    variables: Vec<usize>,
}

impl FacePrime {
    pub fn variables(&self) -> &[usize] {
        &self.variables
    }

    /// The prime ideal generated by the face's variables.
    pub fn ideal(&self, spec: SimplicialSpec) -> Result<MonomialIdeal> {
        let gens = self
            .variables
            .iter()
            .map(|&v| Monomial::squarefree(spec.num_vars(), &[v]))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::from_generators(spec.n(), gens)
    }
}

pub fn face_primes(spec: SimplicialSpec) -> Vec<FacePrime> {
    (0..spec.num_vars())
        .combinations(spec.c())
        .map(|variables| FacePrime { variables })
        .collect()
}

/// Generators of `I(n,c)`: all squarefree monomials of degree `n + 2 - c`.
pub fn simplicial_ideal(spec: SimplicialSpec) -> MonomialIdeal {
    let gens = (0..spec.num_vars())
        .combinations(spec.generator_degree())
        .map(|vars| {
            let mut exps = vec![0; spec.num_vars()];
            for v in vars {
                exps[v] = 1;
            }
            Monomial::from_vec_unchecked(exps)
        })
        .collect();
    MonomialIdeal::from_generators(spec.n(), gens).expect("squarefree generators are well formed")
}

fn check_power(name: &str, value: u32) -> Result<()> {
    if value == 0 {
        Err(Error::Parameter(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

/// Smallest sum over `c` coordinates, i.e. the sum of the `c` smallest entries.
fn min_face_sum_of(exps: &[Exponent], c: usize, scratch: &mut Vec<Exponent>) -> u64 {
    scratch.clear();
    scratch.extend_from_slice(exps);
    scratch.sort_unstable();
    scratch[..c].iter().map(|&e| u64::from(e)).sum()
}

/// The `c`-subset of coordinates with the smallest exponent sum, with that
/// sum. Ties resolve to the lexicographically first subset.
pub fn min_face_sum(spec: SimplicialSpec, a: &Monomial) -> Result<(Vec<usize>, u64)> {
    check_dim(spec.num_vars(), a.num_vars())?;
    let mut idx: Vec<usize> = (0..spec.num_vars()).collect();
    idx.sort_by_key(|&i| (a.exponents()[i], i));
    let mut face: Vec<usize> = idx[..spec.c()].to_vec();
    face.sort_unstable();
    let sum = face.iter().map(|&i| u64::from(a.exponents()[i])).sum();
    Ok((face, sum))
}

/// `x^a ∈ I^(m)(n,c)` iff every `c`-subset of exponents sums to at least `m`.
/// Only the `c` smallest exponents need checking.
pub fn symbolic_member(spec: SimplicialSpec, m: u32, a: &Monomial) -> Result<bool> {
    check_power("m", m)?;
    check_dim(spec.num_vars(), a.num_vars())?;
    let mut scratch = Vec::with_capacity(spec.num_vars());
    Ok(min_face_sum_of(a.exponents(), spec.c(), &mut scratch) >= u64::from(m))
}

/// Same test as [`symbolic_member`], iterating over every `c`-subset.
/// Exponential in `c`; kept as a cross-check.
pub fn symbolic_member_by_subsets(spec: SimplicialSpec, m: u32, a: &Monomial) -> Result<bool> {
    check_power("m", m)?;
    check_dim(spec.num_vars(), a.num_vars())?;
    let exps = a.exponents();
    Ok((0..spec.num_vars())
        .combinations(spec.c())
        .all(|face| face.iter().map(|&i| u64::from(exps[i])).sum::<u64>() >= u64::from(m)))
}

/// `x^a ∈ I^r(n,c)` iff `Σ min(a_i, r) >= (n - c + 2) r`: a minimal generator
/// of the power has degree `(n-c+2) r` and every exponent at most `r`, and
/// such a vector fits under `a` exactly when the capped sum is large enough.
pub fn ordinary_member(spec: SimplicialSpec, r: u32, a: &Monomial) -> Result<bool> {
    Ok(ordinary_deficit(spec, r, a)? == 0)
}

/// How far `Σ min(a_i, r)` falls short of `(n - c + 2) r`; zero for members.
pub fn ordinary_deficit(spec: SimplicialSpec, r: u32, a: &Monomial) -> Result<u64> {
    check_power("r", r)?;
    check_dim(spec.num_vars(), a.num_vars())?;
    let capped: u64 = a.exponents().iter().map(|&e| u64::from(e.min(r))).sum();
    let needed = spec.generator_degree() as u64 * u64::from(r);
    Ok(needed.saturating_sub(capped))
}

/// Number of points in the box `[0, bound]^(n+1)`, checked against the budget.
fn box_size(spec: SimplicialSpec, bound: u32, limits: &Limits) -> Result<u64> {
    let side = u128::from(bound) + 1;
    let needed = (0..spec.num_vars()).try_fold(1u128, |acc, _| acc.checked_mul(side));
    match needed {
        Some(k) if k <= u128::from(limits.max_candidates) => Ok(k as u64),
        other => Err(Error::Resource {
            what: "candidate enumeration",
            needed: other.unwrap_or(u128::MAX),
            limit: u128::from(limits.max_candidates),
        }),
    }
}

/// Minimal generators of `I^(m)(n,c)` from the membership criterion.
///
/// Every minimal generator lies in `[0, m]^(n+1)`: lowering an exponent above
/// `m` to `m` keeps every `c`-subset sum at least `m`. A member is a minimal
/// generator iff lowering any positive exponent by one leaves the ideal, so
/// each candidate is classified locally and no global reduction is needed.
pub fn symbolic_power(spec: SimplicialSpec, m: u32, limits: &Limits) -> Result<MonomialIdeal> {
    check_power("m", m)?;
    box_size(spec, m, limits)?;
    let nv = spec.num_vars();
    let c = spec.c();
    let target = u64::from(m);

    // fan out over the value of the leading exponent
    let mut gens: Vec<Monomial> = (0..=m)
        .into_par_iter()
        .flat_map_iter(|lead| {
            let mut out = Vec::new();
            let mut exps = vec![0 as Exponent; nv];
            exps[0] = lead;
            let mut scratch = Vec::with_capacity(nv);
            loop {
                if is_minimal_symbolic(&mut exps, c, target, &mut scratch) {
                    out.push(Monomial::from_vec_unchecked(exps.clone()));
                }
                // odometer over coordinates 1..nv
                let mut i = nv - 1;
                loop {
                    if exps[i] < m {
                        exps[i] += 1;
                        break;
                    }
                    exps[i] = 0;
                    i -= 1;
                    if i == 0 {
                        return out.into_iter();
                    }
                }
            }
        })
        .collect();
    gens.sort_unstable();
    Ok(MonomialIdeal::from_reduced_unchecked(spec.n(), gens))
}

fn is_minimal_symbolic(
    exps: &mut [Exponent],
    c: usize,
    target: u64,
    scratch: &mut Vec<Exponent>,
) -> bool {
    let sum = min_face_sum_of(exps, c, scratch);
    // above the target, lowering one of the c smallest entries stays a member
    if sum != target {
        return false;
    }
    for i in 0..exps.len() {
        if exps[i] == 0 {
            continue;
        }
        exps[i] -= 1;
        let still_member = min_face_sum_of(exps, c, scratch) >= target;
        exps[i] += 1;
        if still_member {
            return false;
        }
    }
    true
}

/// `I^(m)(n,c)` as the intersection of the `m`-th powers of all face primes.
pub fn symbolic_power_oracle(
    spec: SimplicialSpec,
    m: u32,
    limits: &Limits,
) -> Result<MonomialIdeal> {
    check_power("m", m)?;
    let powers = face_primes(spec)
        .iter()
        .map(|f| f.ideal(spec)?.pow_within(m, limits.max_intermediate))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::intersect_all(&powers, limits.max_intermediate)
}

/// Minimal generators of `I^r(n,c)`: all exponent vectors of total degree
/// `(n - c + 2) r` with every entry at most `r`.
pub fn ordinary_power_min_gens(
    spec: SimplicialSpec,
    r: u32,
    limits: &Limits,
) -> Result<MonomialIdeal> {
    check_power("r", r)?;
    box_size(spec, r, limits)?;
    let degree = spec.generator_degree() as u64 * u64::from(r);
    let mut gens = Vec::new();
    let mut exps = vec![0 as Exponent; spec.num_vars()];
    fill_bounded(&mut exps, 0, degree, r, &mut gens);
    gens.sort_unstable();
    // equal total degree: already an antichain
    Ok(MonomialIdeal::from_reduced_unchecked(spec.n(), gens))
}

fn fill_bounded(
    exps: &mut [Exponent],
    pos: usize,
    remaining: u64,
    cap: u32,
    out: &mut Vec<Monomial>,
) {
    let slots_after = (exps.len() - pos - 1) as u64;
    if pos == exps.len() - 1 {
        if remaining <= u64::from(cap) {
            exps[pos] = remaining as Exponent;
            out.push(Monomial::from_vec_unchecked(exps.to_vec()));
        }
        return;
    }
    let lo = remaining.saturating_sub(slots_after * u64::from(cap));
    let hi = remaining.min(u64::from(cap));
    for e in lo..=hi {
        exps[pos] = e as Exponent;
        fill_bounded(exps, pos + 1, remaining - e, cap, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: usize, c: usize) -> SimplicialSpec {
        SimplicialSpec::new(n, c).unwrap()
    }

    fn mono(v: &[Exponent]) -> Monomial {
        Monomial::new(v.to_vec()).unwrap()
    }

    fn text(i: &MonomialIdeal) -> String {
        i.to_string()
    }

    #[test]
    fn spec_validation() {
        assert!(SimplicialSpec::new(0, 1).is_err());
        assert!(SimplicialSpec::new(3, 0).is_err());
        assert!(SimplicialSpec::new(3, 4).is_err());
        assert_eq!(SimplicialSpec::all_up_to(3).len(), 6);
    }

    #[test]
    fn simplicial_generators() {
        assert_eq!(text(&simplicial_ideal(spec(2, 1))), "<x0*x1*x2>");
        assert_eq!(
            text(&simplicial_ideal(spec(3, 2))),
            "<x0*x1*x2, x0*x1*x3, x0*x2*x3, x1*x2*x3>"
        );
        let v = simplicial_ideal(spec(3, 3));
        assert_eq!(v.len(), 6);
        assert!(v.generators().iter().all(|g| g.total_degree() == 2));
    }

    #[test]
    fn face_prime_listing() {
        let vars = |s| {
            face_primes(s)
                .into_iter()
                .map(|f| f.variables)
                .collect::<Vec<_>>()
        };
        assert_eq!(vars(spec(2, 2)), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(
            vars(spec(4, 1)),
            (0..5).map(|i| vec![i]).collect::<Vec<_>>()
        );
        assert_eq!(vars(spec(3, 3)).len(), 4);
    }

    #[test]
    fn symbolic_membership_examples() {
        let s = spec(2, 2);
        assert!(symbolic_member(s, 2, &mono(&[1, 1, 1])).unwrap());
        assert!(symbolic_member(s, 2, &mono(&[2, 2, 0])).unwrap());
        assert!(!symbolic_member(s, 2, &mono(&[2, 1, 0])).unwrap());
        assert!(!symbolic_member_by_subsets(s, 2, &mono(&[2, 1, 0])).unwrap());
        assert!(symbolic_member(s, 0, &mono(&[1, 1, 1])).is_err());
        assert!(symbolic_member(s, 1, &mono(&[1, 1])).is_err());
    }

    #[test]
    fn min_face_reports_weakest_subset() {
        let (face, sum) = min_face_sum(spec(2, 2), &mono(&[2, 1, 0])).unwrap();
        assert_eq!((face, sum), (vec![1, 2], 1));
    }

    #[test]
    fn triangle_symbolic_powers() {
        let lim = Limits::default();
        assert_eq!(
            text(&symbolic_power(spec(2, 2), 2, &lim).unwrap()),
            "<x0*x1*x2, x0^2*x1^2, x0^2*x2^2, x1^2*x2^2>"
        );
        assert_eq!(
            text(&symbolic_power(spec(2, 2), 3, &lim).unwrap()),
            "<x0^2*x1^2*x2, x0^2*x1*x2^2, x0*x1^2*x2^2, x0^3*x1^3, x0^3*x2^3, x1^3*x2^3>"
        );
    }

    #[test]
    fn principal_case() {
        let lim = Limits::default();
        for n in 1..=4 {
            let s = spec(n, 1);
            let i = simplicial_ideal(s);
            for m in 1..=4 {
                assert_eq!(symbolic_power(s, m, &lim).unwrap(), i.pow(m).unwrap());
            }
        }
    }

    #[test]
    fn oracle_small_cases() {
        let lim = Limits::default();
        let s = spec(2, 2);
        assert_eq!(
            symbolic_power_oracle(s, 1, &lim).unwrap(),
            simplicial_ideal(s)
        );
        assert_eq!(
            symbolic_power_oracle(s, 2, &lim).unwrap(),
            symbolic_power(s, 2, &lim).unwrap()
        );
        let e = spec(3, 2);
        let f_plus_e2 = simplicial_ideal(spec(3, 1))
            .add(&simplicial_ideal(e).pow(2).unwrap())
            .unwrap();
        assert_eq!(symbolic_power_oracle(e, 2, &lim).unwrap(), f_plus_e2);
    }

    #[test]
    fn ordinary_powers() {
        let lim = Limits::default();
        let v = spec(2, 2);
        assert_eq!(
            ordinary_power_min_gens(v, 1, &lim).unwrap(),
            simplicial_ideal(v)
        );
        assert_eq!(
            ordinary_power_min_gens(v, 2, &lim).unwrap(),
            simplicial_ideal(v).pow(2).unwrap()
        );
        assert_eq!(
            text(&ordinary_power_min_gens(spec(2, 1), 4, &lim).unwrap()),
            "<x0^4*x1^4*x2^4>"
        );
    }

    #[test]
    fn ordinary_membership_examples() {
        assert!(ordinary_member(spec(2, 2), 1, &mono(&[1, 1, 0])).unwrap());
        assert!(ordinary_member(spec(3, 2), 2, &mono(&[2, 2, 2, 0])).unwrap());
        assert!(!ordinary_member(spec(2, 2), 2, &mono(&[3, 1, 0])).unwrap());
        assert_eq!(
            ordinary_deficit(spec(2, 2), 2, &mono(&[3, 1, 0])).unwrap(),
            1
        );
        assert!(ordinary_member(spec(2, 2), 0, &mono(&[3, 1, 0])).is_err());
    }

    #[test]
    fn budgets() {
        let tiny = Limits {
            max_candidates: 26,
            ..Limits::default()
        };
        assert!(matches!(
            symbolic_power(spec(2, 2), 2, &tiny),
            Err(Error::Resource { needed: 27, .. })
        ));
        let tight = Limits {
            max_intermediate: 4,
            ..Limits::default()
        };
        assert!(symbolic_power_oracle(spec(2, 2), 3, &tight).is_err());
    }
}
