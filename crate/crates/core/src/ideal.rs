//! Monomial ideals held in canonical form: the unique divisibility antichain
//! of minimal generators, sorted in the canonical monomial order.

use std::fmt;

use rayon::prelude::*;

use crate::error::{check_dim, Error, Result};
use crate::monomial::{Exponent, Monomial};

/// Generator-pair counts above this are enumerated in parallel.
const PAR_THRESHOLD: usize = 1 << 14;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ambient_n: usize,
    gens: Vec<Monomial>,
}

/// Sorts, deduplicates and removes every monomial divisible by another.
///
/// After sorting by total degree a divisor always precedes its multiples, and
/// two distinct monomials of equal degree never divide each other, so each
/// candidate only has to be tested against kept monomials of smaller degree.
pub(crate) fn antichain_reduce(mut mons: Vec<Monomial>) -> Vec<Monomial> {
    mons.sort_unstable();
    mons.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(mons.len());
    let mut lower = 0;
    let mut current = None;
    for m in mons {
        let d = m.total_degree();
        if current != Some(d) {
            current = Some(d);
            lower = kept.len();
        }
        if !kept[..lower].iter().any(|g| g.divides_unchecked(&m)) {
            kept.push(m);
        }
    }
    kept
}

fn check_budget(what: &'static str, needed: usize, limit: usize) -> Result<()> {
    if needed > limit {
        Err(Error::Resource {
            what,
            needed: needed as u128,
            limit: limit as u128,
        })
    } else {
        Ok(())
    }
}

impl MonomialIdeal {
    /// The zero ideal in `n + 1` variables.
    pub fn zero(n: usize) -> Result<Self> {
        Self::from_generators(n, Vec::new())
    }

    /// The unit ideal in `n + 1` variables.
    pub fn unit(n: usize) -> Result<Self> {
        Self::from_generators(n, vec![Monomial::one(n + 1)?])
    }

    /// Canonical ideal generated by `gens` in `n + 1` variables.
    pub fn from_generators(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        if n < 1 {
            return Err(Error::Parameter(
                "ambient dimension must be at least 1".into(),
            ));
        }
        for g in &gens {
            check_dim(n + 1, g.num_vars())?;
        }
        Ok(Self::from_reduced_unchecked(n, antichain_reduce(gens)))
    }

    /// Wraps generators that are already a sorted antichain.
    pub(crate) fn from_reduced_unchecked(n: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.windows(2).all(|w| w[0] < w[1]));
        MonomialIdeal { ambient_n: n, gens }
    }

    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    pub fn num_vars(&self) -> usize {
        self.ambient_n + 1
    }

    /// Minimal generators in canonical order.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    /// No generators; same as [`Self::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    fn check_same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        check_dim(self.num_vars(), other.num_vars())
    }

    /// A monomial lies in a monomial ideal iff some generator divides it.
    pub fn contains_monomial(&self, m: &Monomial) -> Result<bool> {
        check_dim(self.num_vars(), m.num_vars())?;
        Ok(self.gens.iter().any(|g| g.divides_unchecked(m)))
    }

    pub fn add(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let all = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_reduced_unchecked(
            self.ambient_n,
            antichain_reduce(all),
        ))
    }

    pub fn mul(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.mul_within(other, usize::MAX)
    }

    /// Product, refusing to form more than `max_products` generator pairs.
    pub fn mul_within(&self, other: &MonomialIdeal, max_products: usize) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let pairs = self.gens.len().saturating_mul(other.gens.len());
        check_budget("ideal product", pairs, max_products)?;
        let products = self.pairwise(other, pairs, |a, b| a.mul_unchecked_dim(b))?;
        Ok(Self::from_reduced_unchecked(
            self.ambient_n,
            antichain_reduce(products),
        ))
    }

    pub fn pow(&self, r: u32) -> Result<MonomialIdeal> {
        self.pow_within(r, usize::MAX)
    }

    /// `r`-th power by square-and-multiply, canonicalizing after each step.
    pub fn pow_within(&self, r: u32, max_products: usize) -> Result<MonomialIdeal> {
        if r == 0 {
            return Err(Error::Parameter("ideal powers start at r = 1".into()));
        }
        let mut result: Option<MonomialIdeal> = None;
        let mut base = self.clone();
        let mut e = r;
        loop {
            if e & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(acc) => acc.mul_within(&base, max_products)?,
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul_within(&base, max_products)?;
        }
        Ok(result.expect("r >= 1"))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.intersect_within(other, usize::MAX)
    }

    /// Intersection via pairwise lcms, refusing more than `max_products` pairs.
    pub fn intersect_within(
        &self,
        other: &MonomialIdeal,
        max_products: usize,
    ) -> Result<MonomialIdeal> {
        self.check_same_ring(other)?;
        let pairs = self.gens.len().saturating_mul(other.gens.len());
        check_budget("ideal intersection", pairs, max_products)?;
        let lcms = self.pairwise(other, pairs, |a, b| Ok(a.lcm_unchecked(b)))?;
        Ok(Self::from_reduced_unchecked(
            self.ambient_n,
            antichain_reduce(lcms),
        ))
    }

    /// Folds `intersect_within` over a non-empty sequence of ideals,
    /// canonicalizing after every step.
    pub fn intersect_all<'a, I>(ideals: I, max_products: usize) -> Result<MonomialIdeal>
    where
        I: IntoIterator<Item = &'a MonomialIdeal>,
    {
        let mut iter = ideals.into_iter();
        let first = iter
            .next()
            .ok_or_else(|| Error::Parameter("empty intersection".into()))?
            .clone();
        iter.try_fold(first, |acc, next| acc.intersect_within(next, max_products))
    }

    fn pairwise<F>(&self, other: &MonomialIdeal, pairs: usize, f: F) -> Result<Vec<Monomial>>
    where
        F: Fn(&Monomial, &Monomial) -> Result<Monomial> + Sync,
    {
        if pairs >= PAR_THRESHOLD {
            self.gens
                .par_iter()
                .flat_map_iter(|a| other.gens.iter().map(|b| f(a, b)).collect::<Vec<_>>())
                .collect()
        } else {
            self.gens
                .iter()
                .flat_map(|a| other.gens.iter().map(|b| f(a, b)))
                .collect()
        }
    }

    /// `self ⊆ other` iff every generator of `self` lies in `other`.
    pub fn is_subideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_same_ring(other)?;
        Ok(self
            .gens
            .iter()
            .all(|g| other.gens.iter().any(|h| h.divides_unchecked(g))))
    }

    /// Canonical forms are unique, so equality is generator-list equality.
    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_same_ring(other)?;
        Ok(self.gens == other.gens)
    }

    /// One generator per line in canonical text form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for g in &self.gens {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    /// Inverse of [`to_text`](Self::to_text); blank lines are ignored.
    pub fn from_text(n: usize, text: &str) -> Result<MonomialIdeal> {
        let gens = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| Monomial::parse(l, n + 1))
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators(n, gens)
    }

    /// Compact JSON array of exponent arrays.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.gens).expect("exponent arrays always serialize")
    }

    pub fn from_json(n: usize, json: &str) -> Result<MonomialIdeal> {
        let raw: Vec<Vec<Exponent>> =
            serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        let gens = raw
            .into_iter()
            .map(|v| {
                check_dim(n + 1, v.len())?;
                Monomial::new(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators(n, gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
