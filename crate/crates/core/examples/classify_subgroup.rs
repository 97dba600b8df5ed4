//! Classify a subgroup given by generators, here the binary icosahedral
//! image at p = 5 and a small diagonal group at p = 11.

use homothety::{classify, Mat2, PrimeModulus, Subgroup};

fn main() -> homothety::Result<()> {
    let p5 = PrimeModulus::new(5)?;
    let sl2 = Subgroup::generate(
        p5,
        &[Mat2::new(p5, [1, 1, 0, 1])?, Mat2::new(p5, [0, -1, 1, 0])?],
    )?;
    println!("{}", serde_json::to_string_pretty(&classify(&sl2)).unwrap());

    let p11 = PrimeModulus::new(11)?;
    let d = Subgroup::generate(p11, &[Mat2::new(p11, [2, 0, 0, 4])?])?;
    let r = classify(&d);
    println!(
        "order {}, scalars {}, in split Cartan {}",
        r.order, r.scalar_order, r.in_split_cartan
    );
    print!("{}", d.to_generator_file());
    Ok(())
}
