//! Finite verification of the identities and containments known for the
//! triangle (`n = 2`), the tetrahedron (`n = 3`) and general `I(n,c)`.
//!
//! Every claim is checked over a bounded parameter range with exact ideal
//! equality or containment. Claims are independent and run in parallel; the
//! report keeps them in declaration order.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::{
    resurgence, resurgence_witness, symbolic_within_ordinary, symbolic_within_symbolic,
    thm_a_predicate, thm_b_predicate, Rational,
};
use crate::config::{Limits, VerifyBounds};
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::monomial::{Exponent, Monomial};
use crate::simplicial::{
    ordinary_power_min_gens, simplicial_ideal, symbolic_member, symbolic_power,
    symbolic_power_oracle, SimplicialSpec,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    Triangle,
    Tetrahedron,
    General,
    All,
}

impl Scope {
    fn includes(self, section: Scope) -> bool {
        self == Scope::All || self == section
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scope::Triangle => "triangle",
            Scope::Tetrahedron => "tetrahedron",
            Scope::General => "general",
            Scope::All => "all",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// A budget was exceeded; the claim was neither confirmed nor refuted.
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimRecord {
    pub claim_id: &'static str,
    /// The mathematical statement being checked.
    pub paper_ref: String,
    pub params_range: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Present only when timings were requested, so reports stay reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub scope: Scope,
    pub deep: bool,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    pub claims: Vec<ClaimRecord>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.errors == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Fixed-width table, one row per claim, with counterexamples and notes
    /// below the row they belong to.
    pub fn summary_table(&self) -> String {
        let width = self
            .claims
            .iter()
            .map(|c| c.claim_id.len())
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        for c in &self.claims {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Error => "ERROR",
            };
            out.push_str(&format!(
                "{status:<5}  {:<width$}  {}",
                c.claim_id, c.params_range
            ));
            if let Some(ms) = c.wall_time_ms {
                out.push_str(&format!("  ({ms} ms)"));
            }
            out.push('\n');
            if let Some(cx) = &c.counterexample {
                out.push_str(&format!("       counterexample: {cx}\n"));
            }
            if let Some(note) = &c.note {
                out.push_str(&format!("       note: {note}\n"));
            }
        }
        out.push_str(&format!(
            "{} claims: {} passed, {} failed, {} errors\n",
            self.claims.len(),
            self.passed,
            self.failed,
            self.errors
        ));
        out
    }
}

#[derive(Default)]
struct Outcome {
    counterexample: Option<String>,
    note: Option<String>,
}

impl Outcome {
    fn pass() -> Self {
        Outcome::default()
    }

    fn fail(msg: impl Into<String>) -> Self {
        Outcome {
            counterexample: Some(msg.into()),
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

struct Ctx {
    bounds: VerifyBounds,
    limits: Limits,
}

impl Ctx {
    fn sym(&self, n: usize, c: usize, m: u32) -> Result<MonomialIdeal> {
        symbolic_power(spec(n, c), m, &self.limits)
    }

    fn ord(&self, n: usize, c: usize, r: u32) -> Result<MonomialIdeal> {
        simplicial_ideal(spec(n, c)).pow_within(r, self.limits.max_intermediate)
    }

    fn mul(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
        a.mul_within(b, self.limits.max_intermediate)
    }
}

type Check = fn(&Ctx) -> Result<Outcome>;

struct Claim {
    id: &'static str,
    section: Scope,
    statement: &'static str,
    range: fn(&VerifyBounds) -> String,
    check: Check,
}

fn spec(n: usize, c: usize) -> SimplicialSpec {
    SimplicialSpec::new(n, c).expect("claim parameters are valid")
}

/// Describes how two ideals differ, or `None` when equal.
fn difference(label: &str, lhs: &MonomialIdeal, rhs: &MonomialIdeal) -> Result<Option<String>> {
    if lhs.equals(rhs)? {
        return Ok(None);
    }
    let only = |a: &MonomialIdeal, b: &MonomialIdeal| {
        a.generators()
            .iter()
            .find(|g| !b.generators().contains(g))
            .cloned()
    };
    let detail = match (only(lhs, rhs), only(rhs, lhs)) {
        (Some(g), _) => format!("{g} is a minimal generator of the left side only"),
        (None, Some(g)) => format!("{g} is a minimal generator of the right side only"),
        (None, None) => "generator lists differ".to_string(),
    };
    Ok(Some(format!("{label}: {detail}")))
}

/// Describes a generator of `lhs` outside `rhs`, or `None` when `lhs ⊆ rhs`.
fn escape(label: &str, lhs: &MonomialIdeal, rhs: &MonomialIdeal) -> Result<Option<String>> {
    for g in lhs.generators() {
        if !rhs.contains_monomial(g)? {
            return Ok(Some(format!("{label}: {g} is not in the right side")));
        }
    }
    Ok(None)
}

/// Runs `f` for each parameter and stops at the first counterexample.
fn first_failure<T, I, F>(params: I, mut f: F) -> Result<Outcome>
where
    I: IntoIterator<Item = T>,
    F: FnMut(T) -> Result<Option<String>>,
{
    for p in params {
        if let Some(cx) = f(p)? {
            return Ok(Outcome::fail(cx));
        }
    }
    Ok(Outcome::pass())
}

/// All distinct permutations of an exponent vector.
fn orbit(exps: &[Exponent]) -> BTreeSet<Vec<Exponent>> {
    exps.iter().copied().permutations(exps.len()).collect()
}

fn ideal_from_vectors(
    n: usize,
    vecs: impl IntoIterator<Item = Vec<Exponent>>,
) -> Result<MonomialIdeal> {
    let gens = vecs
        .into_iter()
        .map(Monomial::new)
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::from_generators(n, gens)
}

fn specs_up_to(max_n: usize) -> Vec<SimplicialSpec> {
    SimplicialSpec::all_up_to(max_n)
}

fn claims() -> Vec<Claim> {
    use Scope::{General, Tetrahedron, Triangle};
    vec![
        // triangle: E = I(2,1), V = I(2,2)
        Claim {
            id: "triangle.v2_generators",
            section: Triangle,
            statement: "V^(2) = <x0^2*x1^2, x0^2*x2^2, x1^2*x2^2, x0*x1*x2> for V = I(2,2), by both symbolic power routes",
            range: |_| "m = 2".into(),
            check: |ctx| {
                let expected = ideal_from_vectors(2, [
                    vec![2, 2, 0], vec![2, 0, 2], vec![0, 2, 2], vec![1, 1, 1],
                ])?;
                if let Some(cx) = difference("criterion route", &ctx.sym(2, 2, 2)?, &expected)? {
                    return Ok(Outcome::fail(cx));
                }
                let oracle = symbolic_power_oracle(spec(2, 2), 2, &ctx.limits)?;
                Ok(difference("intersection route", &oracle, &expected)?
                    .map_or_else(Outcome::pass, Outcome::fail))
            },
        },
        Claim {
            id: "triangle.v_symbolic_generators",
            section: Triangle,
            statement: "V^(m) is minimally generated by the permutations of x^(m-k) * x^(m-k) * x^k, 0 <= k <= floor(m/2)",
            range: |b| format!("1 <= m <= {}", b.generator_form_max_m),
            check: |ctx| {
                first_failure(1..=ctx.bounds.generator_form_max_m, |m| {
                    let family: BTreeSet<_> = (0..=m / 2)
                        .flat_map(|k| orbit(&[m - k, m - k, k]))
                        .collect();
                    let listed = family.len();
                    let ideal = ideal_from_vectors(2, family)?;
                    let actual = ctx.sym(2, 2, m)?;
                    if let Some(cx) = difference(&format!("m = {m}"), &actual, &ideal)? {
                        return Ok(Some(cx));
                    }
                    Ok((listed != actual.len()).then(|| {
                        format!("m = {m}: family has {listed} monomials, minimal set has {}", actual.len())
                    }))
                })
            },
        },
        Claim {
            id: "triangle.v_even_power",
            section: Triangle,
            statement: "V^(2m) = (V^(2))^m",
            range: |b| format!("1 <= m <= {}", b.triangle_max_m),
            check: |ctx| {
                let v2 = ctx.sym(2, 2, 2)?;
                first_failure(1..=ctx.bounds.triangle_max_m, |m| {
                    let rhs = v2.pow_within(m, ctx.limits.max_intermediate)?;
                    difference(&format!("m = {m}"), &ctx.sym(2, 2, 2 * m)?, &rhs)
                })
            },
        },
        Claim {
            id: "triangle.v_odd_power",
            section: Triangle,
            statement: "V^(2m+1) = V^(2m) * V",
            range: |b| format!("1 <= m <= {}", b.triangle_max_m),
            check: |ctx| {
                let v = simplicial_ideal(spec(2, 2));
                first_failure(1..=ctx.bounds.triangle_max_m, |m| {
                    let rhs = ctx.mul(&ctx.sym(2, 2, 2 * m)?, &v)?;
                    difference(&format!("m = {m}"), &ctx.sym(2, 2, 2 * m + 1)?, &rhs)
                })
            },
        },
        Claim {
            id: "triangle.v2_sum",
            section: Triangle,
            statement: "V^(2) = E + V^2 for E = I(2,1)",
            range: |_| "m = 2".into(),
            check: |ctx| {
                let rhs = simplicial_ideal(spec(2, 1)).add(&ctx.ord(2, 2, 2)?)?;
                Ok(difference("", &ctx.sym(2, 2, 2)?, &rhs)?.map_or_else(Outcome::pass, Outcome::fail))
            },
        },
        Claim {
            id: "triangle.e_in_v2",
            section: Triangle,
            statement: "E ⊆ V^(2)",
            range: |_| "m = 2".into(),
            check: |ctx| {
                let e = simplicial_ideal(spec(2, 1));
                Ok(escape("", &e, &ctx.sym(2, 2, 2)?)?.map_or_else(Outcome::pass, Outcome::fail))
            },
        },
        Claim {
            id: "triangle.e_in_v2m",
            section: Triangle,
            statement: "E^(m) ⊆ V^(2m)",
            range: |b| format!("1 <= m <= {}", b.triangle_max_m),
            check: |ctx| {
                first_failure(1..=ctx.bounds.triangle_max_m, |m| {
                    escape(&format!("m = {m}"), &ctx.sym(2, 1, m)?, &ctx.sym(2, 2, 2 * m)?)
                })
            },
        },
        Claim {
            id: "triangle.e_chain",
            section: Triangle,
            statement: "E^(m+1) ⊆ V^(2) * E^(m) ⊆ V * E^(m)",
            range: |b| format!("1 <= m <= {}", b.triangle_max_m),
            check: |ctx| {
                let v = simplicial_ideal(spec(2, 2));
                let v2 = ctx.sym(2, 2, 2)?;
                first_failure(1..=ctx.bounds.triangle_max_m, |m| {
                    let em = ctx.sym(2, 1, m)?;
                    let middle = ctx.mul(&v2, &em)?;
                    let outer = ctx.mul(&v, &em)?;
                    if let Some(cx) = escape(&format!("m = {m}, first"), &ctx.sym(2, 1, m + 1)?, &middle)? {
                        return Ok(Some(cx));
                    }
                    escape(&format!("m = {m}, second"), &middle, &outer)
                })
            },
        },
        Claim {
            id: "triangle.e_complete_intersection",
            section: Triangle,
            statement: "E^k = E^(k)",
            range: |b| format!("1 <= k <= {}", b.complete_intersection_max_k),
            check: |ctx| {
                first_failure(1..=ctx.bounds.complete_intersection_max_k, |k| {
                    difference(&format!("k = {k}"), &ctx.ord(2, 1, k)?, &ctx.sym(2, 1, k)?)
                })
            },
        },
        Claim {
            id: "triangle.containment_criterion",
            section: Triangle,
            statement: "V^(m) ⊆ V^r iff 2r <= ceil(3m/2)",
            range: |b| format!(
                "criterion: 1 <= m, r <= {}; oracle: 1 <= m, r <= {}",
                b.closed_form_max,
                b.oracle.max_m.min(b.oracle.max_r)
            ),
            check: |ctx| {
                let v = spec(2, 2);
                let max = ctx.bounds.closed_form_max;
                let side = |m: u32, r: u32| 2 * r <= (3 * m).div_ceil(2);
                for (m, r) in (1..=max).cartesian_product(1..=max) {
                    if thm_a_predicate(v, m, r)? != side(m, r) {
                        return Ok(Outcome::fail(format!("criterion disagrees at m = {m}, r = {r}")));
                    }
                }
                let omax = ctx.bounds.oracle.max_m.min(ctx.bounds.oracle.max_r);
                for m in 1..=omax {
                    let sym = ctx.sym(2, 2, m)?;
                    for r in 1..=omax {
                        if symbolic_within_ordinary(v, &sym, r)? != side(m, r) {
                            return Ok(Outcome::fail(format!("oracle disagrees at m = {m}, r = {r}")));
                        }
                    }
                }
                Ok(Outcome::pass())
            },
        },
        // tetrahedron: F = I(3,1), E = I(3,2), V = I(3,3)
        Claim {
            id: "tetrahedron.f_complete_intersection",
            section: Tetrahedron,
            statement: "F^k = F^(k) for F = I(3,1)",
            range: |b| format!("1 <= k <= {}", b.complete_intersection_max_k),
            check: |ctx| {
                first_failure(1..=ctx.bounds.complete_intersection_max_k, |k| {
                    difference(&format!("k = {k}"), &ctx.ord(3, 1, k)?, &ctx.sym(3, 1, k)?)
                })
            },
        },
        Claim {
            id: "tetrahedron.e_symbolic_generators",
            section: Tetrahedron,
            statement: "E^(m) is minimally generated by the permutations of x^(m-j) * x^(m-j) * x^(m-j) * x^j, 0 <= j <= floor(m/2), for E = I(3,2)",
            range: |b| format!("1 <= m <= {}", b.generator_form_max_m),
            check: |ctx| {
                first_failure(1..=ctx.bounds.generator_form_max_m, |m| {
                    let family: BTreeSet<_> = (0..=m / 2)
                        .flat_map(|j| orbit(&[m - j, m - j, m - j, j]))
                        .collect();
                    let listed = family.len();
                    let actual = ctx.sym(3, 2, m)?;
                    if let Some(cx) = difference(&format!("m = {m}"), &actual, &ideal_from_vectors(3, family)?)? {
                        return Ok(Some(cx));
                    }
                    Ok((listed != actual.len()).then(|| {
                        format!("m = {m}: family has {listed} monomials, minimal set has {}", actual.len())
                    }))
                })
            },
        },
        Claim {
            id: "tetrahedron.v_symbolic_generators",
            section: Tetrahedron,
            statement: "V^(m) is generated by the permutations of x^(m-i-j) * x^(m-i-j) * x^i * x^j with 2i+j <= m and i+2j <= m, for V = I(3,3)",
            range: |b| format!("1 <= m <= {}", b.generator_form_max_m),
            check: |ctx| {
                let mut redundant = Vec::new();
                let outcome = first_failure(1..=ctx.bounds.generator_form_max_m, |m| {
                    let family: BTreeSet<_> = (0..=m)
                        .cartesian_product(0..=m)
                        .filter(|&(i, j)| 2 * i + j <= m && i + 2 * j <= m)
                        .flat_map(|(i, j)| orbit(&[m - i - j, m - i - j, i, j]))
                        .collect();
                    let listed = family.len();
                    let actual = ctx.sym(3, 3, m)?;
                    let cx = difference(&format!("m = {m}"), &actual, &ideal_from_vectors(3, family)?)?;
                    if listed != actual.len() {
                        redundant.push(format!("m = {m}: {listed} listed vs {} minimal", actual.len()));
                    }
                    Ok(cx)
                })?;
                // generation is asserted; irredundancy is only recorded
                let note = if redundant.is_empty() {
                    "the listed family is irredundant throughout the range".to_string()
                } else {
                    format!("the listed family is redundant for {}", redundant.join("; "))
                };
                Ok(outcome.with_note(note))
            },
        },
        Claim {
            id: "tetrahedron.e_even_power",
            section: Tetrahedron,
            statement: "E^(2m) = (E^(2))^m",
            range: |b| format!("1 <= m <= {}", b.tetrahedron_max_m),
            check: |ctx| {
                let e2 = ctx.sym(3, 2, 2)?;
                first_failure(1..=ctx.bounds.tetrahedron_max_m, |m| {
                    let rhs = e2.pow_within(m, ctx.limits.max_intermediate)?;
                    difference(&format!("m = {m}"), &ctx.sym(3, 2, 2 * m)?, &rhs)
                })
            },
        },
        Claim {
            id: "tetrahedron.e_odd_power",
            section: Tetrahedron,
            statement: "E^(2m+1) = E^(2m) * E",
            range: |b| format!("1 <= m <= {}", b.tetrahedron_max_m),
            check: |ctx| {
                let e = simplicial_ideal(spec(3, 2));
                first_failure(1..=ctx.bounds.tetrahedron_max_m, |m| {
                    let rhs = ctx.mul(&ctx.sym(3, 2, 2 * m)?, &e)?;
                    difference(&format!("m = {m}"), &ctx.sym(3, 2, 2 * m + 1)?, &rhs)
                })
            },
        },
        Claim {
            id: "tetrahedron.e2_sum",
            section: Tetrahedron,
            statement: "E^(2) = F + E^2",
            range: |_| "m = 2".into(),
            check: |ctx| {
                let rhs = simplicial_ideal(spec(3, 1)).add(&ctx.ord(3, 2, 2)?)?;
                Ok(difference("", &ctx.sym(3, 2, 2)?, &rhs)?.map_or_else(Outcome::pass, Outcome::fail))
            },
        },
        Claim {
            id: "tetrahedron.e3_in_e2",
            section: Tetrahedron,
            statement: "E^(3) ⊆ E^2",
            range: |_| "m = 3, r = 2".into(),
            check: |ctx| {
                Ok(escape("", &ctx.sym(3, 2, 3)?, &ctx.ord(3, 2, 2)?)?.map_or_else(Outcome::pass, Outcome::fail))
            },
        },
        Claim {
            id: "tetrahedron.symbolic_counterexample",
            section: Tetrahedron,
            statement: "I^(3)(3,2) ⊆ I^(5)(3,3) although s*c = 10 > m*d = 9",
            range: |_| "n = 3, c = 2, d = 3, m = 3, s = 5".into(),
            check: |ctx| {
                if thm_b_predicate(2, 3, 3, 5)? {
                    return Ok(Outcome::fail("the sufficient condition unexpectedly holds"));
                }
                let lhs = ctx.sym(3, 2, 3)?;
                if let Some(cx) = escape("direct", &lhs, &ctx.sym(3, 3, 5)?)? {
                    return Ok(Outcome::fail(cx));
                }
                Ok(if symbolic_within_symbolic(spec(3, 3), &lhs, 5)? {
                    Outcome::pass()
                } else {
                    Outcome::fail("membership criterion rejects a generator")
                })
            },
        },
        // general I(n,c)
        Claim {
            id: "general.hierarchy",
            section: General,
            statement: "I(n,1) ⊆ I(n,2) ⊆ ... ⊆ I(n,n)",
            range: |b| format!("1 <= c < n <= {}", b.closed_form_max_n),
            check: |ctx| {
                first_failure(
                    specs_up_to(ctx.bounds.closed_form_max_n).into_iter().filter(|s| s.c() < s.n()),
                    |s| {
                        let next = simplicial_ideal(spec(s.n(), s.c() + 1));
                        escape(&format!("{s}"), &simplicial_ideal(s), &next)
                    },
                )
            },
        },
        Claim {
            id: "general.square_sum",
            section: General,
            statement: "I^(2)(n,2) = I(n,1) + I^2(n,2)",
            range: |b| format!("2 <= n <= {}", b.oracle.max_n),
            check: |ctx| {
                first_failure(2..=ctx.bounds.oracle.max_n, |n| {
                    let rhs = simplicial_ideal(spec(n, 1)).add(&ctx.ord(n, 2, 2)?)?;
                    difference(&format!("n = {n}"), &ctx.sym(n, 2, 2)?, &rhs)
                })
            },
        },
        Claim {
            id: "general.symbolic_two_routes",
            section: General,
            statement: "criterion-based I^(m)(n,c) equals the intersection of the m-th powers of the face primes",
            range: |b| format!("1 <= c <= n <= {}, 1 <= m <= {}", b.oracle.max_n, b.symbolic_max_m),
            check: |ctx| {
                let cells = specs_up_to(ctx.bounds.oracle.max_n)
                    .into_iter()
                    .cartesian_product(1..=ctx.bounds.symbolic_max_m);
                first_failure(cells, |(s, m)| {
                    let oracle = symbolic_power_oracle(s, m, &ctx.limits)?;
                    difference(&format!("{s}, m = {m}"), &symbolic_power(s, m, &ctx.limits)?, &oracle)
                })
            },
        },
        Claim {
            id: "general.ordinary_closed_form",
            section: General,
            statement: "the minimal generators of I^r(n,c) are the exponent vectors of degree (n-c+2)r with all entries <= r",
            range: |b| format!("1 <= c <= n <= {}, 1 <= r <= {}", b.oracle.max_n, b.power_max_r),
            check: |ctx| {
                let cells = specs_up_to(ctx.bounds.oracle.max_n)
                    .into_iter()
                    .cartesian_product(1..=ctx.bounds.power_max_r);
                first_failure(cells, |(s, r)| {
                    let closed = ordinary_power_min_gens(s, r, &ctx.limits)?;
                    difference(&format!("{s}, r = {r}"), &closed, &ctx.ord(s.n(), s.c(), r)?)
                })
            },
        },
        Claim {
            id: "general.ordinary_in_symbolic",
            section: General,
            statement: "every monomial of I^r(n,c) has a_{i1} + ... + a_{ic} >= r for all distinct i1, ..., ic",
            range: |b| format!("1 <= c <= n <= {}, 1 <= r <= {}", b.oracle.max_n, b.power_max_r),
            check: |ctx| {
                let cells = specs_up_to(ctx.bounds.oracle.max_n)
                    .into_iter()
                    .cartesian_product(1..=ctx.bounds.power_max_r);
                first_failure(cells, |(s, r)| {
                    for g in ctx.ord(s.n(), s.c(), r)?.generators() {
                        if !symbolic_member(s, r, g)? {
                            return Ok(Some(format!("{s}, r = {r}: {g}")));
                        }
                    }
                    Ok(None)
                })
            },
        },
        Claim {
            id: "general.symbolic_power_product",
            section: General,
            statement: "(I^(a))^b ⊆ I^(ab)",
            range: |b| format!("1 <= c <= n <= {}, a*b <= {}", b.symbolic_pair_max_n, b.oracle.max_m),
            check: |ctx| {
                let max = ctx.bounds.oracle.max_m;
                let cells = specs_up_to(ctx.bounds.symbolic_pair_max_n)
                    .into_iter()
                    .cartesian_product((1..=max).cartesian_product(1..=max).filter(|(a, b)| a * b <= max));
                first_failure(cells, |(s, (a, b))| {
                    let lhs = ctx.sym(s.n(), s.c(), a)?.pow_within(b, ctx.limits.max_intermediate)?;
                    escape(&format!("{s}, a = {a}, b = {b}"), &lhs, &ctx.sym(s.n(), s.c(), a * b)?)
                })
            },
        },
        Claim {
            id: "general.filtration",
            section: General,
            statement: "I^(m+1) ⊆ I^(m) and I^(r+1) ⊆ I^r",
            range: |b| format!("1 <= c <= n <= {}, 1 <= m < {}, 1 <= r < {}", b.oracle.max_n, b.symbolic_max_m, b.power_max_r),
            check: |ctx| {
                let specs = specs_up_to(ctx.bounds.oracle.max_n);
                let symbolic = first_failure(
                    specs.iter().copied().cartesian_product(1..ctx.bounds.symbolic_max_m),
                    |(s, m)| escape(&format!("{s}, m = {m}"), &ctx.sym(s.n(), s.c(), m + 1)?, &ctx.sym(s.n(), s.c(), m)?),
                )?;
                if symbolic.counterexample.is_some() {
                    return Ok(symbolic);
                }
                first_failure(
                    specs.iter().copied().cartesian_product(1..ctx.bounds.power_max_r),
                    |(s, r)| escape(&format!("{s}, r = {r}"), &ctx.ord(s.n(), s.c(), r + 1)?, &ctx.ord(s.n(), s.c(), r)?),
                )
            },
        },
        Claim {
            id: "general.exact_criterion",
            section: General,
            statement: "I^(m)(n,c) ⊆ I^r(n,c) iff r <= ((n+1)k - p)/(n-c+2) where m = kc - p, 0 <= p < c",
            range: |b| format!("1 <= c <= n <= {}, 1 <= m <= {}, 1 <= r <= {}", b.oracle.max_n, b.oracle.max_m, b.oracle.max_r),
            check: |ctx| {
                let o = ctx.bounds.oracle;
                let mut cells = 0usize;
                let outcome = first_failure(specs_up_to(o.max_n).into_iter().cartesian_product(1..=o.max_m), |(s, m)| {
                    let sym = symbolic_power(s, m, &ctx.limits)?;
                    for r in 1..=o.max_r {
                        cells += 1;
                        let oracle = symbolic_within_ordinary(s, &sym, r)?;
                        if oracle != thm_a_predicate(s, m, r)? {
                            return Ok(Some(format!("{s}, m = {m}, r = {r}: oracle says {oracle}")));
                        }
                    }
                    Ok(None)
                })?;
                Ok(outcome.with_note(format!("{cells} cells checked")))
            },
        },
        Claim {
            id: "general.sufficient_criterion",
            section: General,
            statement: "c <= d and s*c <= m*d imply I^(m)(n,c) ⊆ I^(s)(n,d)",
            range: |b| format!("1 <= c <= d <= n <= {}, 1 <= m, s <= {}", b.symbolic_pair_max_n, b.symbolic_pair_max),
            check: |ctx| {
                let max = ctx.bounds.symbolic_pair_max;
                let mut beyond = 0usize;
                let mut cells = 0usize;
                let outcome = first_failure(
                    specs_up_to(ctx.bounds.symbolic_pair_max_n).into_iter().cartesian_product(1..=max),
                    |(s, m)| {
                        let sym = ctx.sym(s.n(), s.c(), m)?;
                        for d in s.c()..=s.n() {
                            for t in 1..=max {
                                cells += 1;
                                let oracle = symbolic_within_symbolic(spec(s.n(), d), &sym, t)?;
                                let fast = thm_b_predicate(s.c(), d, m, t)?;
                                if fast && !oracle {
                                    return Ok(Some(format!("{s}, d = {d}, m = {m}, s = {t}")));
                                }
                                beyond += usize::from(oracle && !fast);
                            }
                        }
                        Ok(None)
                    },
                )?;
                Ok(outcome.with_note(format!(
                    "{cells} cells; {beyond} containments hold without the sufficient condition"
                )))
            },
        },
        Claim {
            id: "general.cr_containment",
            section: General,
            statement: "I^(cr)(n,c) ⊆ I^r(n,c)",
            range: |b| format!("1 <= c <= n <= {}, 1 <= r <= {}", b.closed_form_max_n, b.oracle.max_r),
            check: |ctx| {
                let cells = specs_up_to(ctx.bounds.closed_form_max_n)
                    .into_iter()
                    .cartesian_product(1..=ctx.bounds.oracle.max_r);
                let outcome = first_failure(cells, |(s, r)| {
                    Ok((!thm_a_predicate(s, s.c() as u32 * r, r)?).then(|| format!("{s}, r = {r}")))
                })?;
                // boundary data: least m with I^(m)(n,n) ⊆ I^r(n,n), against n*r
                let rows = (2..=ctx.bounds.oracle.max_n)
                    .map(|n| {
                        let s = spec(n, n);
                        let ms = (1..=ctx.bounds.oracle.max_r)
                            .map(|r| super::containment_threshold(s, r).map(|t| t.to_string()))
                            .collect::<Result<Vec<_>>>()?;
                        Ok(format!("n = {n}: [{}]", ms.join(", ")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(outcome.with_note(format!("least m per r for c = n: {}", rows.join("; "))))
            },
        },
        Claim {
            id: "general.resurgence_bound",
            section: General,
            statement: "rho(I(n,c)) = c(n-c+2)/(n+1): every non-containment has m/r < rho and every m/r > rho is a containment",
            range: |b| format!("1 <= c <= n <= {}, 1 <= m, r <= {}", b.closed_form_max_n, b.resurgence_box),
            check: |ctx| {
                let max = ctx.bounds.resurgence_box;
                first_failure(specs_up_to(ctx.bounds.closed_form_max_n), |s| {
                    let rho = resurgence(s);
                    for (m, r) in (1..=max).cartesian_product(1..=max) {
                        let ratio = Rational::new(m.into(), r.into());
                        let contained = thm_a_predicate(s, m, r)?;
                        // covers the converse too: m/r > rho forces containment
                        if !contained && ratio >= rho {
                            return Ok(Some(format!("{s}: non-containment at m = {m}, r = {r} with m/r >= {rho}")));
                        }
                    }
                    Ok(None)
                })
            },
        },
        Claim {
            id: "general.resurgence_witnesses",
            section: General,
            statement: "(m_k, r_k) = (kc, floor((n+1)k/(n-c+2)) + 1) are non-containments with m_k/r_k -> rho",
            range: |b| format!("1 <= c <= n <= {}, 1 <= k <= {}", b.closed_form_max_n, b.witness_max_k),
            check: |ctx| {
                let o = ctx.bounds.oracle;
                first_failure(specs_up_to(ctx.bounds.closed_form_max_n), |s| {
                    let rho = resurgence(s);
                    for k in 1..=ctx.bounds.witness_max_k {
                        let w = resurgence_witness(s, k)?;
                        if thm_a_predicate(s, w.m, w.r)? {
                            return Ok(Some(format!("{s}, k = {k}: criterion reports containment")));
                        }
                        if w.ratio >= rho || rho - w.ratio > rho / Rational::from(u64::from(k)) {
                            return Ok(Some(format!("{s}, k = {k}: ratio {} too far from {rho}", w.ratio)));
                        }
                        if s.n() <= o.max_n && w.m <= o.max_m && w.r <= o.max_r {
                            let sym = symbolic_power(s, w.m, &ctx.limits)?;
                            if symbolic_within_ordinary(s, &sym, w.r)? {
                                return Ok(Some(format!("{s}, k = {k}: oracle reports containment")));
                            }
                        }
                    }
                    Ok(None)
                })
            },
        },
    ]
}

/// Runs every claim in `scope`. With `timings`, per-claim wall time is
/// recorded, which makes the report run-dependent.
pub fn verify_paper(
    scope: Scope,
    bounds: &VerifyBounds,
    limits: &Limits,
    deep: bool,
    timings: bool,
) -> VerifyReport {
    let ctx = Ctx {
        bounds: *bounds,
        limits: *limits,
    };
    let selected: Vec<Claim> = claims()
        .into_iter()
        .filter(|c| scope.includes(c.section))
        .collect();
    let records: Vec<ClaimRecord> = selected
        .par_iter()
        .map(|claim| {
            let start = Instant::now();
            let result = (claim.check)(&ctx);
            let elapsed = start.elapsed().as_millis() as u64;
            let (status, counterexample, note) = match result {
                Ok(Outcome {
                    counterexample: None,
                    note,
                }) => (Status::Pass, None, note),
                Ok(Outcome {
                    counterexample,
                    note,
                }) => (Status::Fail, counterexample, note),
                Err(e) => (Status::Error, None, Some(e.to_string())),
            };
            ClaimRecord {
                claim_id: claim.id,
                paper_ref: claim.statement.to_string(),
                params_range: (claim.range)(bounds),
                status,
                counterexample,
                note,
                wall_time_ms: timings.then_some(elapsed),
            }
        })
        .collect();
    let count = |st| records.iter().filter(|r| r.status == st).count();
    VerifyReport {
        scope,
        deep,
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        errors: count(Status::Error),
        claims: records,
    }
}
