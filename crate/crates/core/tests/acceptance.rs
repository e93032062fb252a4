//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. All comparisons are exact.

use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use simplab::*;

type Verdict = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn spec(n: usize, c: usize) -> SimplicialSpec {
    SimplicialSpec::new(n, c).unwrap()
}

fn lim() -> Limits {
    Limits::default()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq(lhs: &MonomialIdeal, rhs: &MonomialIdeal, what: &str) -> std::result::Result<(), String> {
    ensure(lhs.equals(rhs).unwrap(), || {
        format!("{what}: {lhs} != {rhs}")
    })
}

fn sub(lhs: &MonomialIdeal, rhs: &MonomialIdeal, what: &str) -> std::result::Result<(), String> {
    ensure(lhs.is_subideal(rhs).unwrap(), || {
        format!("{what}: not contained")
    })
}

fn sym(n: usize, c: usize, m: u32) -> MonomialIdeal {
    symbolic_power(spec(n, c), m, &lim()).unwrap()
}

fn ord(n: usize, c: usize, r: u32) -> MonomialIdeal {
    simplicial_ideal(spec(n, c)).pow(r).unwrap()
}

fn exact_criterion_sweep() -> Verdict {
    let mut cells = 0;
    let mut disagreements = Vec::new();
    for s in SimplicialSpec::all_up_to(4) {
        let by_intersection: Vec<_> = (1..=6)
            .map(|m| symbolic_power_oracle(s, m, &lim()).unwrap())
            .collect();
        let powers: Vec<_> = (1..=6)
            .map(|r| simplicial_ideal(s).pow(r).unwrap())
            .collect();
        for m in 1..=6 {
            for r in 1..=6 {
                cells += 1;
                let predicate = thm_a_predicate(s, m, r).unwrap();
                if predicate != containment_oracle(s, m, r, &lim()).unwrap() {
                    disagreements.push(format!("{s} m={m} r={r}"));
                }
                // generic ideal algebra only, no closed forms
                let sym = &by_intersection[m as usize - 1];
                if predicate != sym.is_subideal(&powers[r as usize - 1]).unwrap() {
                    disagreements.push(format!("{s} m={m} r={r} (generic)"));
                }
            }
        }
    }
    ensure(cells == 360 && disagreements.is_empty(), || {
        format!("{} disagreements: {:?}", disagreements.len(), disagreements)
    })?;
    Ok(format!(
        "0 disagreements out of {cells} cells, by both oracles"
    ))
}

fn symbolic_oracle_equivalence() -> Verdict {
    let mut cases = 0;
    for s in SimplicialSpec::all_up_to(4) {
        for m in 1..=5 {
            let oracle = symbolic_power_oracle(s, m, &lim()).unwrap();
            eq(
                &symbolic_power(s, m, &lim()).unwrap(),
                &oracle,
                &format!("{s} m={m}"),
            )?;
            cases += 1;
        }
    }
    Ok(format!("{cases} ideals equal by both routes"))
}

fn ordinary_closed_form() -> Verdict {
    let mut cases = 0;
    for s in SimplicialSpec::all_up_to(4) {
        for r in 1..=4 {
            let closed = ordinary_power_min_gens(s, r, &lim()).unwrap();
            eq(
                &closed,
                &simplicial_ideal(s).pow(r).unwrap(),
                &format!("{s} r={r}"),
            )?;
            cases += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut samples = 0;
    for s in SimplicialSpec::all_up_to(4) {
        let powers: Vec<_> = (1..=4)
            .map(|r| simplicial_ideal(s).pow(r).unwrap())
            .collect();
        for _ in 0..10_000 {
            let r: u32 = rng.gen_range(1..=4);
            let exps: Vec<Exponent> = (0..s.num_vars())
                .map(|_| rng.gen_range(0..=r + 2))
                .collect();
            let a = Monomial::new(exps).unwrap();
            let by_criterion = ordinary_member(s, r, &a).unwrap();
            let by_generators = powers[r as usize - 1].contains_monomial(&a).unwrap();
            ensure(by_criterion == by_generators, || format!("{s} r={r} a={a}"))?;
            samples += 1;
        }
    }
    Ok(format!(
        "{cases} powers equal; {samples} random memberships agree"
    ))
}

fn constants() -> Verdict {
    let v2 = MonomialIdeal::from_text(2, "x0^2*x1^2\nx0^2*x2^2\nx1^2*x2^2\nx0*x1*x2\n").unwrap();
    eq(&sym(2, 2, 2), &v2, "V^(2)")?;
    eq(
        &symbolic_power_oracle(spec(2, 2), 2, &lim()).unwrap(),
        &v2,
        "V^(2) by intersection",
    )?;
    sub(&sym(3, 2, 3), &ord(3, 2, 2), "E^(3) ⊆ E^2")?;
    ensure(resurgence(spec(2, 2)) == Rational::new(4, 3), || {
        "rho(I(2,2))".into()
    })?;
    let mut count = 0;
    for s in SimplicialSpec::all_up_to(6) {
        let (n, c) = (s.n() as u64, s.c() as u64);
        let expected = Rational::new(c * (n - c + 2), n + 1);
        ensure(resurgence(s) == expected, || format!("rho({s})"))?;
        // the witness ratios close in on it from below
        let w = resurgence_witness(s, 1000).unwrap();
        ensure(
            w.ratio < expected && expected - w.ratio <= expected / Rational::from(1000),
            || format!("{s}: witness ratio {} vs {expected}", w.ratio),
        )?;
        count += 1;
    }
    Ok(format!(
        "V^(2), E^(3) ⊆ E^2, rho(I(2,2)) = 4/3, formula for {count} specs"
    ))
}

fn identity_suite() -> Verdict {
    let v = simplicial_ideal(spec(2, 2));
    let e = simplicial_ideal(spec(2, 1));
    let v2 = sym(2, 2, 2);
    for m in 1..=4 {
        eq(
            &sym(2, 2, 2 * m),
            &v2.pow(m).unwrap(),
            &format!("V^(2m) m={m}"),
        )?;
        eq(
            &sym(2, 2, 2 * m + 1),
            &sym(2, 2, 2 * m).mul(&v).unwrap(),
            &format!("V^(2m+1) m={m}"),
        )?;
        sub(
            &sym(2, 1, m),
            &sym(2, 2, 2 * m),
            &format!("E^(m) ⊆ V^(2m) m={m}"),
        )?;
        let mid = v2.mul(&sym(2, 1, m)).unwrap();
        sub(
            &sym(2, 1, m + 1),
            &mid,
            &format!("E^(m+1) ⊆ V^(2)E^(m) m={m}"),
        )?;
        sub(
            &mid,
            &v.mul(&sym(2, 1, m)).unwrap(),
            &format!("V^(2)E^(m) ⊆ VE^(m) m={m}"),
        )?;
    }
    eq(&v2, &e.add(&v.pow(2).unwrap()).unwrap(), "V^(2) = E + V^2")?;
    for k in 1..=5 {
        eq(&ord(2, 1, k), &sym(2, 1, k), &format!("E^k = E^(k) k={k}"))?;
        eq(&ord(3, 1, k), &sym(3, 1, k), &format!("F^k = F^(k) k={k}"))?;
    }
    let e3 = sym(3, 2, 2);
    for m in 1..=3 {
        eq(
            &sym(3, 2, 2 * m),
            &e3.pow(m).unwrap(),
            &format!("E^(2m) m={m} in P^3"),
        )?;
    }
    eq(
        &e3,
        &simplicial_ideal(spec(3, 1)).add(&ord(3, 2, 2)).unwrap(),
        "E^(2) = F + E^2",
    )?;
    for n in 2..=4 {
        let rhs = simplicial_ideal(spec(n, 1)).add(&ord(n, 2, 2)).unwrap();
        eq(
            &sym(n, 2, 2),
            &rhs,
            &format!("I^(2)(n,2) = I(n,1) + I^2(n,2) n={n}"),
        )?;
    }
    Ok("triangle, tetrahedron and square-sum identities hold".into())
}

fn symbolic_counterexample() -> Verdict {
    let oracle = symbolic_containment_oracle(3, 2, 3, 3, 5, &lim()).unwrap();
    let fast = thm_b_predicate(2, 3, 3, 5).unwrap();
    ensure(oracle && !fast && 5 * 2 > 3 * 3, || {
        format!("oracle={oracle} predicate={fast}")
    })?;
    Ok("I^(3)(3,2) ⊆ I^(5)(3,3) holds; s*c = 10 > m*d = 9".into())
}

fn triangle_criterion() -> Verdict {
    for m in 1..=12u32 {
        for r in 1..=12u32 {
            let expected = 2 * r <= (3 * m).div_ceil(2);
            ensure(
                thm_a_predicate(spec(2, 2), m, r).unwrap() == expected,
                || format!("m={m} r={r}"),
            )?;
        }
    }
    Ok("144 cells agree".into())
}

fn resurgence_convergence() -> Verdict {
    let s = spec(2, 2);
    let rho = Rational::new(4, 3);
    let expected = [
        (5, Rational::new(5, 4)),
        (20, Rational::new(40, 31)),
        (100, Rational::new(200, 151)),
    ];
    let mut gaps = Vec::new();
    for (k, ratio) in expected {
        let w = resurgence_witness(s, k).unwrap();
        ensure(w.ratio == ratio, || format!("k={k}: got {}", w.ratio))?;
        ensure(!thm_a_predicate(s, w.m, w.r).unwrap(), || {
            format!("k={k} is a containment")
        })?;
        ensure(w.ratio < rho, || format!("k={k} not below rho"))?;
        gaps.push(rho - w.ratio);
    }
    ensure(gaps.windows(2).all(|g| g[1] < g[0]), || {
        format!("gaps {gaps:?} not decreasing")
    })?;
    let sup = empirical_resurgence_sup(
        s,
        30,
        30,
        SupMethod::Predicate,
        &OracleBounds::default(),
        &lim(),
    )
    .unwrap()
    .ok_or("no non-containment in box")?;
    ensure(sup.ratio < rho, || format!("box sup {}", sup.ratio))?;
    Ok(format!(
        "5/4, 40/31, 200/151 below 4/3; box sup {} at ({}, {})",
        sup.ratio, sup.m, sup.r
    ))
}

fn determinism() -> Verdict {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_simplab"))
            .args(["--format", "json", "verify", "all"])
            .env_remove("SIMPLAB_CONFIG")
            .env_remove("SIMPLAB_FORMAT")
            .output()
            .expect("binary runs");
        (out.status.code(), out.stdout)
    };
    let (code_a, a) = run();
    let (code_b, b) = run();
    ensure(code_a == Some(0) && code_b == Some(0), || {
        format!("exit codes {code_a:?}, {code_b:?}")
    })?;
    ensure(!a.is_empty() && a == b, || "reports differ".into())?;
    Ok(format!("two runs, {} identical bytes", a.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("exact containment criterion sweep", exact_criterion_sweep),
        (
            "symbolic power oracle equivalence",
            symbolic_oracle_equivalence,
        ),
        ("ordinary power closed form", ordinary_closed_form),
        ("constants", constants),
        ("triangle/tetrahedron identity suite", identity_suite),
        (
            "symbolic containment counterexample",
            symbolic_counterexample,
        ),
        ("triangle criterion equivalence", triangle_criterion),
        ("resurgence convergence", resurgence_convergence),
        ("determinism of verify all", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("[PASS] {}. {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {}. {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
