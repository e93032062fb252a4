//! Exponent-vector monomials: parsing, divisibility, lcm and products.

use simplab::Monomial;

fn main() -> simplab::Result<()> {
    let a = Monomial::parse("x0^2*x1", 3)?;
    let b = Monomial::parse("x1^3 * x2", 3)?;
    println!("a = {a}, b = {b}");
    println!("deg a = {}, deg b = {}", a.total_degree(), b.total_degree());
    println!("lcm(a, b) = {}", a.lcm(&b)?);
    println!("a * b = {}", a.mul(&b)?);
    println!("a | lcm(a, b): {}", a.divides(&a.lcm(&b)?)?);
    println!("a | b: {}", a.divides(&b)?);

    let mut all = [
        b.clone(),
        a.clone(),
        Monomial::one(3)?,
        Monomial::squarefree(3, &[0, 2])?,
    ];
    all.sort();
    let shown: Vec<String> = all.iter().map(ToString::to_string).collect();
    println!("sorted: {}", shown.join(" < "));
    Ok(())
}
