//! Uniform bounds as exact integers.

use homothety::reducible::{
    corollary_threshold, lemma39_bound, oesterle_torsion_bound, uniform_bound_reducible,
};

fn main() -> homothety::Result<()> {
    for d in 1..=3u64 {
        for h in 1..=2u64 {
            let u = uniform_bound_reducible(d, h)?;
            println!(
                "d = {d}, h = {h}: torsion {}, frobenius {}, uniform {}{}",
                oesterle_torsion_bound(12 * d * h)?,
                lemma39_bound(d, h)?,
                u.bound,
                u.warning.map(|w| format!(" ({w})")).unwrap_or_default()
            );
        }
        println!(
            "corollary threshold for d = {d}: {}",
            corollary_threshold(d)?
        );
    }
    Ok(())
}
