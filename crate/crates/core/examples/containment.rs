//! Containment of symbolic in ordinary and symbolic powers: closed-form
//! criteria checked against the brute-force oracles.

use simplab::{containment_threshold, ContainmentVerdict, Limits, OracleBounds, SimplicialSpec};

fn main() -> simplab::Result<()> {
    let limits = Limits::default();
    let bounds = OracleBounds::default();
    let oracle = Some((&bounds, &limits));

    for (n, c, m, r) in [(3, 2, 3, 2), (3, 2, 3, 3), (2, 2, 3, 2), (4, 3, 5, 4)] {
        let spec = SimplicialSpec::new(n, c)?;
        let v = ContainmentVerdict::ordinary(spec, m, r, oracle)?;
        println!(
            "{spec}^({m}) ⊆ {spec}^{r}: criterion {}, oracle {:?}",
            v.fast_path, v.oracle
        );
    }

    // the sufficient criterion misses this containment
    let v = ContainmentVerdict::symbolic(3, 2, 3, 3, 5, oracle)?;
    println!(
        "I(3,2)^(3) ⊆ I(3,3)^(5): criterion {}, oracle {:?}",
        v.fast_path, v.oracle
    );

    for spec in SimplicialSpec::all_up_to(3) {
        let least: Vec<u32> = (1..=6)
            .map(|r| containment_threshold(spec, r))
            .collect::<simplab::Result<_>>()?;
        println!("{spec}: least m with {spec}^(m) ⊆ {spec}^r for r = 1..6: {least:?}");
    }
    Ok(())
}
