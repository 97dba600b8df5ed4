//! The table of inertia exponents and its congruence conditions.

use homothety::reducible::{ap_table, render_ap_table_text, solve_star_congruence};

fn main() -> homothety::Result<()> {
    print!("{}", render_ap_table_text());
    println!();
    for c in ap_table().iter().filter(|c| c.is_valid()) {
        let solvable: Vec<u64> = [5u64, 7, 11, 13, 17, 19]
            .into_iter()
            .filter(|&p| {
                solve_star_congruence(c.e_ram, c.r, p)
                    .ok()
                    .flatten()
                    .is_some()
            })
            .collect();
        println!(
            "e = {}, r = {}: a = {}, solvable for p in {solvable:?}",
            c.e_ram,
            c.r,
            c.a_cell()
        );
    }
    Ok(())
}
