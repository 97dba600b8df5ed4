//! Element orders in GL_2 and PGL_2, and the action on the projective line.

use homothety::{Mat2, PrimeModulus};

fn main() -> homothety::Result<()> {
    let p = PrimeModulus::new(7)?;
    let m = Mat2::new(p, [1, 1, 0, 1])?;
    let r = Mat2::new(p, [0, -1, 1, 1])?;
    for x in [m, r] {
        println!(
            "{x}: det {}, trace {}, order {}, projective order {}, stable lines {:?}",
            x.det().value(),
            x.trace().value(),
            x.element_order(),
            x.pgl_order(),
            x.stable_lines()
        );
    }
    Ok(())
}
