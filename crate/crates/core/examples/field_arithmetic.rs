//! Multiplicative orders, primitive roots and square roots in F_p.

use homothety::PrimeModulus;

fn main() -> homothety::Result<()> {
    let p = PrimeModulus::new(13)?;
    let g = p.primitive_root();
    println!("p = {p}, primitive root {}", g.value());
    for x in p.units() {
        let root = p.sqrt(x.value()).map_or("-".to_string(), |r| r.to_string());
        println!(
            "{:>2}: order {:>2}, sqrt {root}",
            x.value(),
            x.mult_order()?
        );
    }
    Ok(())
}
