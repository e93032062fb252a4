//! Exact resurgence, the witness sequence approaching it, and an
//! empirical supremum over a finite box.

use simplab::{resurgence_report, Limits, SimplicialSpec};

fn main() -> simplab::Result<()> {
    let limits = Limits::default();
    for (n, c) in [(2, 2), (3, 2), (3, 3), (4, 1)] {
        let spec = SimplicialSpec::new(n, c)?;
        let report = resurgence_report(spec, 4, 20, 20, &limits)?;
        let witnesses: Vec<String> = report
            .witnesses
            .iter()
            .map(|w| format!("{}/{}", w.m, w.r))
            .collect();
        print!(
            "rho({spec}) = {}  witnesses {}",
            report.rho,
            witnesses.join(", ")
        );
        match report.empirical_sup {
            Some(s) => println!("  box sup {} at m={}, r={}", s.ratio, s.m, s.r),
            None => println!("  no non-containment in box"),
        }
    }
    Ok(())
}
