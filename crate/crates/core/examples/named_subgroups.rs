//! Cartan subgroups, their normalizers and the Borel subgroup, with orders.

use homothety::subgroups::{
    build_borel, build_nonsplit_cartan, build_split_cartan, normalizer_of, special_linear,
};
use homothety::PrimeModulus;

fn main() -> homothety::Result<()> {
    for q in [5u64, 7, 11, 13] {
        let p = PrimeModulus::new(q)?;
        let sc = build_split_cartan(p)?;
        let nc = build_nonsplit_cartan(p, p.primitive_root())?;
        println!(
            "p = {q:>2}: split {:>4}  N(split) {:>4}  nonsplit {:>4}  N(nonsplit) {:>4}  borel {:>5}  SL2 {:>5}",
            sc.order(),
            normalizer_of(&sc)?.order(),
            nc.order(),
            normalizer_of(&nc)?.order(),
            build_borel(p)?.order(),
            special_linear(p)?.order()
        );
    }
    Ok(())
}
