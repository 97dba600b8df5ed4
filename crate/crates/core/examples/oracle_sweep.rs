//! Enumerate subgroups at each supported prime and run every oracle check.

use std::time::Instant;

use homothety::oracle::{enumerate_subgroups, verify_enumeration, CheckSet, EnumerationMode};
use homothety::PrimeModulus;

fn main() -> homothety::Result<()> {
    let runs = [
        (5, EnumerationMode::FullLattice),
        (7, EnumerationMode::FullLattice),
        (5, EnumerationMode::GenPairs),
        (7, EnumerationMode::GenPairs),
        (11, EnumerationMode::GenPairs),
        (13, EnumerationMode::GenPairs),
    ];
    for (q, mode) in runs {
        let start = Instant::now();
        let e = enumerate_subgroups(PrimeModulus::new(q)?, mode)?;
        let result = verify_enumeration(&e, CheckSet::All);
        println!(
            "p = {q:>2} {mode:<12} classes {:>5} subgroups {:>7} failures {:>3} ({:.1?})",
            result.conjugacy_class_count,
            result.subgroup_count,
            result.failures.len(),
            start.elapsed()
        );
        for f in result.failures.iter().take(5) {
            println!("    {} <{}>", f.property, f.generators.join("; "));
        }
    }
    Ok(())
}
