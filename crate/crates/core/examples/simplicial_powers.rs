//! Simplicial ideals and their powers, with each symbolic power built twice.

use simplab::{
    face_primes, ordinary_power_min_gens, simplicial_ideal, symbolic_member, symbolic_power,
    symbolic_power_oracle, Limits, Monomial, SimplicialSpec,
};

fn main() -> simplab::Result<()> {
    let limits = Limits::default();
    let v = SimplicialSpec::new(2, 2)?;
    println!("{v} = {}", simplicial_ideal(v));
    for p in face_primes(v) {
        println!("  face prime {}", p.ideal(v)?);
    }

    for m in 1..=4 {
        let fast = symbolic_power(v, m, &limits)?;
        let slow = symbolic_power_oracle(v, m, &limits)?;
        println!(
            "{v}^({m}) = {fast}  [routes agree: {}]",
            fast.equals(&slow)?
        );
    }

    let e = SimplicialSpec::new(3, 2)?;
    let e2 = ordinary_power_min_gens(e, 2, &limits)?;
    println!("{e}^2 has {} minimal generators", e2.len());
    let e3 = symbolic_power(e, 3, &limits)?;
    println!(
        "{e}^(3) has {} minimal generators, contained in {e}^2: {}",
        e3.len(),
        e3.is_subideal(&e2)?
    );

    let a = Monomial::parse("x0^2*x1*x2*x3", 4)?;
    println!("{a} in {e}^(2): {}", symbolic_member(e, 2, &a)?);
    Ok(())
}
