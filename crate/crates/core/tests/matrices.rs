//! `GL_2(F_p)` element operations against direct computation.

mod support;

use homothety::fp::primes_between;
use homothety::gl2::{gl2_order, sl2_order};
use homothety::{Error, Mat2, PglClass, PrimeModulus, ProjLine};
use proptest::prelude::*;
use support::p;

fn m(q: u64, e: [i64; 4]) -> Mat2 {
    Mat2::new(p(q), e).unwrap()
}

fn naive_order(x: &Mat2) -> u64 {
    let mut y = *x;
    let mut k = 1;
    while !y.is_identity() {
        y = y.mul_mat(x);
        k += 1;
    }
    k
}

fn naive_pgl_order(x: &Mat2) -> u64 {
    let mut y = *x;
    let mut k = 1;
    while !y.is_scalar() {
        y = y.mul_mat(x);
        k += 1;
    }
    k
}

#[test]
fn element_order_examples() {
    assert_eq!(Mat2::identity(p(7)).element_order(), 1);
    assert_eq!(m(7, [0, -1, 1, 0]).element_order(), 4);
    assert_eq!(m(7, [1, 1, 0, 1]).element_order(), 7);
    assert_eq!(m(13, [5, 0, 0, 5]).pgl_order(), 1);
    assert_eq!(m(11, [1, 1, 0, 1]).pgl_order(), 11);
}

#[test]
fn nonsplit_generator_has_projective_order_p_plus_1() {
    let q = p(5);
    let g = q.primitive_root();
    // [[a, 2b], [b, a]] with 2 a non-residue mod 5
    let gen = Mat2::all(q)
        .find(|x| {
            let [a, b, c, d] = x.entries();
            a == d && b == (2 * c) % 5 && c != 0 && x.element_order() == 24
        })
        .unwrap();
    assert_eq!(gen.pgl_order(), 6);
    assert_eq!(naive_pgl_order(&gen), 6);
    assert_eq!(g.value(), 2);
}

#[test]
fn stable_line_examples() {
    assert_eq!(Mat2::identity(p(5)).stable_lines().len(), 6);
    let axes = m(7, [2, 0, 0, 3]).stable_lines();
    let want = vec![
        ProjLine::new(p(7), 1, 0).unwrap(),
        ProjLine::new(p(7), 0, 1).unwrap(),
    ];
    let mut got = axes.clone();
    got.sort();
    let mut want_sorted = want;
    want_sorted.sort();
    assert_eq!(got, want_sorted);
    // x^2 + 1 is irreducible mod 7
    assert!(m(7, [0, -1, 1, 0]).stable_lines().is_empty());
    assert_eq!(ProjLine::all(p(11)).len(), 12);
}

#[test]
fn char_poly_examples() {
    let id = Mat2::identity(p(7)).char_poly();
    assert_eq!((id.0.value(), id.1.value()), (2, 1));
    let r = m(7, [0, -1, 1, 0]).char_poly();
    assert_eq!((r.0.value(), r.1.value()), (0, 1));
    // trace 1 + 4 = 5, det 4 - 6 = -2 = 5 mod 7
    let c = m(7, [1, 2, 3, 4]).char_poly();
    assert_eq!((c.0.value(), c.1.value()), (5, 5));
}

#[test]
fn singular_matrices_are_rejected() {
    assert!(matches!(
        Mat2::new(p(7), [1, 2, 2, 4]),
        Err(Error::Input(_))
    ));
    assert!(matches!(Mat2::parse(p(7), "1 2 3"), Err(Error::Parse(_))));
    assert!(matches!(Mat2::parse(p(7), "1 2 3 7"), Err(Error::Parse(_))));
    assert!(matches!(
        Mat2::parse(p(7), "1  2 3 4"),
        Err(Error::Parse(_))
    ));
    assert_eq!(Mat2::parse(p(7), "1 2 3 4").unwrap(), m(7, [1, 2, 3, 4]));
}

#[test]
fn group_orders_by_enumeration() {
    for q in [5u64, 7] {
        let all: Vec<Mat2> = Mat2::all(p(q)).collect();
        assert_eq!(all.len() as u128, gl2_order(p(q)));
        let sl = all.iter().filter(|x| x.det().value() == 1).count();
        assert_eq!(sl as u128, sl2_order(p(q)));
        for x in &all {
            assert_eq!(x.element_order(), naive_order(x));
            assert_eq!(x.pgl_order(), naive_pgl_order(x));
        }
    }
}

#[test]
fn stable_lines_match_scan_exhaustively() {
    let q = p(7);
    for x in Mat2::all(q) {
        let mut scan: Vec<ProjLine> = ProjLine::all(q)
            .into_iter()
            .filter(|&l| {
                let (u, v) = l.coords();
                let [a, b, c, d] = x.entries();
                let (u2, v2) = ((a * u + b * v) % 7, (c * u + d * v) % 7);
                // (u2, v2) is proportional to (u, v)
                (u2 * v + 7 * 7 - v2 * u) % 7 == 0
            })
            .collect();
        scan.sort();
        let mut got = x.stable_lines();
        got.sort();
        assert_eq!(got, scan, "{x}");
        assert!([0, 1, 2, 8].contains(&scan.len()));
        if x.has_irreducible_char_poly() {
            assert!(scan.is_empty());
        }
    }
}

fn small_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(primes_between(5, 50).collect::<Vec<_>>())
}

fn invertible() -> impl Strategy<Value = Mat2> {
    (small_prime(), any::<[i64; 4]>()).prop_filter_map("singular", |(q, e)| Mat2::new(p(q), e).ok())
}

fn pair() -> impl Strategy<Value = (Mat2, Mat2)> {
    (small_prime(), any::<[i64; 4]>(), any::<[i64; 4]>())
        .prop_filter_map("singular", |(q, a, b)| {
            Some((Mat2::new(p(q), a).ok()?, Mat2::new(p(q), b).ok()?))
        })
}

proptest! {
    #[test]
    fn det_and_trace(x in invertible()) {
        let [a, b, c, d] = x.entries().map(|v| v as i64);
        let q = x.modulus();
        prop_assert_eq!(x.det(), q.scalar(a * d - b * c));
        prop_assert_eq!(x.trace(), q.scalar(a + d));
        let (t, n) = x.char_poly();
        prop_assert_eq!(x.discriminant(), t * t - q.scalar(4) * n);
    }

    #[test]
    fn det_is_multiplicative((x, y) in pair()) {
        prop_assert_eq!(x.mul_mat(&y).det(), x.det() * y.det());
        prop_assert!(x.mul_mat(&x.inverse()).is_identity());
        prop_assert_eq!(x.mul_mat(&y).inverse(), y.inverse().mul_mat(&x.inverse()));
    }

    #[test]
    fn orders(x in invertible()) {
        let n = x.element_order();
        prop_assert!(x.pow(n).is_identity());
        prop_assert_eq!(gl2_order(x.modulus()) % n as u128, 0);
        prop_assert_eq!(n % x.pgl_order(), 0);
        prop_assert_eq!(x.pgl_order(), naive_pgl_order(&x));
        prop_assert_eq!(n, naive_order(&x));
    }

    #[test]
    fn scalar_order_is_multiplicative_order(q in small_prime(), a in 1i64..1000) {
        let s = p(q).scalar(a);
        prop_assume!(!s.is_zero());
        prop_assert_eq!(Mat2::scalar(s).unwrap().element_order(), s.mult_order().unwrap());
    }

    #[test]
    fn unipotent_pth_power_is_scalar(q in small_prime(), alpha in 1i64..1000, beta in any::<i64>()) {
        let q = p(q);
        let a = q.scalar(alpha);
        prop_assume!(!a.is_zero());
        let x = Mat2::new(q, [alpha, beta, 0, alpha]).unwrap();
        prop_assert_eq!(x.pow(q.as_u64()), Mat2::scalar(a).unwrap());
    }

    #[test]
    fn pgl_classes_identify_scalar_multiples((x, y) in pair(), k in 1i64..1000) {
        let q = x.modulus();
        let lambda = q.scalar(k);
        prop_assume!(!lambda.is_zero());
        let scaled = x.mul_mat(&Mat2::scalar(lambda).unwrap());
        prop_assert_eq!(PglClass::of(&x), PglClass::of(&scaled));
        let multiple = q.units().any(|l| x.mul_mat(&Mat2::scalar(l).unwrap()) == y);
        prop_assert_eq!(PglClass::of(&x) == PglClass::of(&y), multiple);
    }

    #[test]
    fn text_round_trip(x in invertible()) {
        prop_assert_eq!(Mat2::parse(x.modulus(), &x.to_string()).unwrap(), x);
        prop_assert_eq!(Mat2::from_code(x.modulus(), x.code()), Some(x));
    }

    #[test]
    fn line_action_is_a_permutation(x in invertible()) {
        let q: PrimeModulus = x.modulus();
        let mut images: Vec<usize> = ProjLine::all(q).into_iter().map(|l| x.apply(l).index(q)).collect();
        images.sort_unstable();
        prop_assert_eq!(images, (0..=q.get() as usize).collect::<Vec<_>>());
    }
}
