//! Casework for families of inertia exponents at the places above p.

use homothety::irreducible::FieldProfile;
use homothety::reducible::{classify_ap_family, describe_outcome, lemma311_witnesses, ApFamily};
use homothety::PrimeModulus;

fn main() -> homothety::Result<()> {
    let k = FieldProfile::new(2, 1, 1, true)?;
    for (family, q) in [
        ("0,6", 7u64),
        ("0,4,8", 11),
        ("4,12", 11),
        ("0,12", 13),
        ("12,12", 13),
        ("8", 11),
    ] {
        let p = PrimeModulus::new(q)?;
        let out = classify_ap_family(&ApFamily::parse(family)?, p, &k)?;
        println!("{{{family}}} at p = {q}: {}", describe_outcome(&out));
    }
    let p = PrimeModulus::new(11)?;
    let [a, b] = lemma311_witnesses(0, 8, p)?;
    println!(
        "witnesses for (0, 8) at p = 11: {a} * {b} = {}",
        a.mul_mat(&b)
    );
    Ok(())
}
