//! Generic monomial-ideal operations on minimal generating sets.

use simplab::{Monomial, MonomialIdeal};

fn main() -> simplab::Result<()> {
    let gens = |texts: &[&str]| -> simplab::Result<Vec<Monomial>> {
        texts.iter().map(|t| Monomial::parse(t, 3)).collect()
    };
    // redundant generators are dropped on construction
    let i = MonomialIdeal::from_generators(2, gens(&["x0^2", "x0*x1", "x0^2*x2"])?)?;
    let j = MonomialIdeal::from_generators(2, gens(&["x1^2", "x0*x2"])?)?;
    println!("I = {i}");
    println!("J = {j}");
    println!("I + J = {}", i.add(&j)?);
    println!("I J = {}", i.mul(&j)?);
    println!("I ∩ J = {}", i.intersect(&j)?);
    println!("I^3 = {}", i.pow(3)?);
    println!(
        "I J ⊆ I ∩ J: {}",
        i.mul(&j)?.is_subideal(&i.intersect(&j)?)?
    );

    let json = i.to_json();
    println!("I as JSON: {json}");
    println!(
        "round trip equal: {}",
        MonomialIdeal::from_json(2, &json)?.equals(&i)?
    );
    Ok(())
}
