//! Norms of beta^(12h) - n^(4h) for Frobenius roots beta, by a Lucas recurrence.

use homothety::reducible::{frobenius_norm_divisor, lucas_power_trace, FrobeniusData};

fn main() -> homothety::Result<()> {
    let n = 2u64;
    for t in -2..=2i64 {
        let fd = FrobeniusData { t, n, h: 1 };
        println!(
            "t = {t:>2}, n = {n}: s_12 = {:>5}, norm = {}",
            lucas_power_trace(t, n, 12),
            frobenius_norm_divisor(&fd)?
        );
    }
    Ok(())
}
