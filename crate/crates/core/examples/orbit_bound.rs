//! Lower bound on how many multiples of a point of order p share its Galois orbit.

use homothety::reducible::orbit_lower_bound;

fn main() -> homothety::Result<()> {
    for p in [5u64, 13, 37, 97, 1009, 1_000_003] {
        println!("p = {p}: at least {} multiples", orbit_lower_bound(p)?);
    }
    Ok(())
}
