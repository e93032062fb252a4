//! Exponent-vector monomials and their divisibility lattice.
//!
//! A monomial `x0^a0 * ... * xn^an` is stored as the vector `(a0, ..., an)`.
//! Variables are indexed from zero. The ambient projective dimension `n` is
//! implied by the length, which is always at least two.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};

/// Exponent type. Desk-scale powers stay far below `u32::MAX`; every
/// arithmetic step that could grow an exponent is checked.
pub type Exponent = u32;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Exponent>", into = "Vec<Exponent>")]
pub struct Monomial {
    exps: Vec<Exponent>,
}

impl Monomial {
    /// Builds a monomial from its exponent vector.
    pub fn new(exps: Vec<Exponent>) -> Result<Self> {
        if exps.len() < 2 {
            return Err(Error::Parameter(format!(
                "a monomial needs at least 2 variables, got {}",
                exps.len()
            )));
        }
        Ok(Monomial { exps })
    }

    /// The unit monomial `1` in `num_vars` variables.
    pub fn one(num_vars: usize) -> Result<Self> {
        Self::new(vec![0; num_vars])
    }

    /// The squarefree monomial on the given variable indices.
    pub fn squarefree(num_vars: usize, vars: &[usize]) -> Result<Self> {
        let mut exps = vec![0; num_vars];
        for &v in vars {
            if v >= num_vars {
                return Err(Error::Parameter(format!(
                    "variable x{v} out of range for {num_vars} variables"
                )));
            }
            exps[v] = 1;
        }
        Self::new(exps)
    }

    pub(crate) fn from_vec_unchecked(exps: Vec<Exponent>) -> Self {
        debug_assert!(exps.len() >= 2);
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    /// Ambient projective dimension: number of variables minus one.
    pub fn ambient_n(&self) -> usize {
        self.exps.len() - 1
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// True iff `self` divides `other`, i.e. every exponent is `<=`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        check_dim(self.num_vars(), other.num_vars())?;
        Ok(self.divides_unchecked(other))
    }

    #[inline]
    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Coordinatewise maximum.
    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        check_dim(self.num_vars(), other.num_vars())?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial { exps }
    }

    /// Coordinatewise sum, with overflow reported as an error.
    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        check_dim(self.num_vars(), other.num_vars())?;
        self.mul_unchecked_dim(other)
    }

    pub(crate) fn mul_unchecked_dim(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    /// Parses the textual form (`x0^2*x1`, `1`) into a monomial with
    /// `num_vars` variables. Variables that do not occur get exponent 0 and
    /// repeated factors accumulate.
    pub fn parse(text: &str, num_vars: usize) -> Result<Monomial> {
        let mut exps = vec![0 as Exponent; num_vars];
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        if trimmed != "1" {
            for factor in trimmed.split('*') {
                let (var, exp) = parse_factor(factor)?;
                if var >= num_vars {
                    return Err(Error::Parse(format!(
                        "variable x{var} out of range for {num_vars} variables"
                    )));
                }
                exps[var] = exps[var].checked_add(exp).ok_or(Error::Overflow)?;
            }
        }
        Monomial::new(exps)
    }
}

fn parse_factor(factor: &str) -> Result<(usize, Exponent)> {
    let factor: String = factor.chars().filter(|c| !c.is_whitespace()).collect();
    let rest = factor
        .strip_prefix('x')
        .ok_or_else(|| Error::Parse(format!("expected a factor `x<i>[^<e>]`, got `{factor}`")))?;
    let (idx, exp) = match rest.split_once('^') {
        Some((i, e)) => (i, Some(e)),
        None => (rest, None),
    };
    let var = parse_digits::<usize>(idx, &factor)?;
    let exp = match exp {
        Some(e) => parse_digits::<Exponent>(e, &factor)?,
        None => 1,
    };
    Ok((var, exp))
}

fn parse_digits<T: FromStr>(s: &str, factor: &str) -> Result<T> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("malformed factor `{factor}`")));
    }
    s.parse()
        .map_err(|_| Error::Parse(format!("number out of range in `{factor}`")))
}

impl TryFrom<Vec<Exponent>> for Monomial {
    type Error = Error;

    fn try_from(exps: Vec<Exponent>) -> Result<Self> {
        Monomial::new(exps)
    }
}

impl From<Monomial> for Vec<Exponent> {
    fn from(m: Monomial) -> Self {
        m.exps
    }
}

/// Canonical order: total degree ascending, then the exponent vectors in
/// descending lexicographic order, so that within a degree `x0*x1` comes
/// before `x0*x2` before `x1*x2`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
