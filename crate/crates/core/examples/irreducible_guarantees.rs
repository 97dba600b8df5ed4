//! Homothety guarantees for irreducible images.

use homothety::irreducible::{
    homothety_order_sl2_case, irreducible_theorem_i, irreducible_theorem_ii, q_theorem,
    FieldProfile,
};
use homothety::PrimeModulus;

fn main() -> homothety::Result<()> {
    let cubic = FieldProfile::new(3, 1, 1, true)?;
    for q in [17u64, 19, 23, 29, 37, 61, 67, 163] {
        let p = PrimeModulus::new(q)?;
        println!(
            "p = {q:>3}  over Q: {:<45} degree 3: {:<45} unramified: {}",
            serde_json::to_string(&q_theorem(p)).unwrap(),
            serde_json::to_string(&irreducible_theorem_i(&cubic, p)).unwrap(),
            serde_json::to_string(&irreducible_theorem_ii(p, true)).unwrap(),
        );
    }
    let p = PrimeModulus::new(13)?;
    for delta in [1u64, 2, 3, 4, 6, 12] {
        println!(
            "SL2 with det image of order {delta}: {} homotheties",
            homothety_order_sl2_case(delta, p)?
        );
    }
    Ok(())
}
