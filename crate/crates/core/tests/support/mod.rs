//! Helpers shared by the integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use homothety::PrimeModulus;

pub fn p(n: u64) -> PrimeModulus {
    PrimeModulus::new(n).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Fixed-point complex number `(re + i im) / 2^BITS`.
#[derive(Clone, Debug)]
struct Fixed {
    re: BigInt,
    im: BigInt,
}

const BITS: u32 = 320;

impl Fixed {
    fn mul(&self, o: &Fixed) -> Fixed {
        let re = (&self.re * &o.re - &self.im * &o.im) >> BITS;
        let im = (&self.re * &o.im + &self.im * &o.re) >> BITS;
        Fixed { re, im }
    }

    fn pow(&self, k: u32) -> Fixed {
        let mut acc = Fixed {
            re: BigInt::one() << BITS,
            im: BigInt::zero(),
        };
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

fn round_fixed(x: &BigInt) -> BigInt {
    let half = BigInt::one() << (BITS - 1);
    if x.is_negative() {
        -((-x + &half) >> BITS)
    } else {
        (x + &half) >> BITS
    }
}

/// `beta = (t + i sqrt(4n - t^2)) / 2` in fixed point.
fn beta(t: i64, n: u64) -> Fixed {
    let disc = BigInt::from(4 * n as i64 - t * t);
    assert!(!disc.is_negative());
    let im = (disc << (2 * BITS)).sqrt() / 2;
    let re = (BigInt::from(t) << BITS) / 2;
    Fixed { re, im }
}

/// `beta^k + conj(beta)^k`, rounded, by direct complex powering.
pub fn power_trace_complex(t: i64, n: u64, k: u32) -> BigInt {
    let b = beta(t, n).pow(k);
    round_fixed(&(b.re * 2))
}

/// `|beta^(12h) - n^(4h)|^2`, rounded, by direct complex powering.
pub fn norm_divisor_complex(t: i64, n: u64, h: u32) -> BigInt {
    let mut b = beta(t, n).pow(12 * h);
    b.re -= BigInt::from(n).pow(4 * h) << BITS;
    let sq = (&b.re * &b.re + &b.im * &b.im) >> BITS;
    round_fixed(&sq)
}
