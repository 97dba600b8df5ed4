//! Arithmetic in the prime field `F_p` and structural queries on its cyclic
//! unit group.
//!
//! Residues are always stored reduced into `[0, p-1]`, so equality of
//! [`Scalar`] values is structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted by the group layer. Products of two residues
/// must fit in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

/// An odd prime `p >= 5`, the characteristic of every computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p < 5 {
            return Err(Error::domain(format!("modulus {p} is below 5")));
        }
        if p >= MAX_MODULUS {
            return Err(Error::domain(format!("modulus {p} exceeds 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::domain(format!("modulus {p} is not prime")));
        }
        Ok(PrimeModulus(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn as_u64(self) -> u64 {
        self.0 as u64
    }

    /// Reduce an arbitrary signed integer into `[0, p-1]`.
    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    pub fn scalar(self, x: i64) -> Scalar {
        Scalar {
            value: self.reduce(x),
            modulus: self,
        }
    }

    #[inline]
    pub(crate) fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub(crate) fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        let p = self.0 as u64;
        (if s >= p { s - p } else { s }) as u32
    }

    #[inline]
    pub(crate) fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + (self.0 - b)
        }
    }

    #[inline]
    pub(crate) fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    pub(crate) fn pow(self, base: u32, exp: u64) -> u32 {
        pow_mod(base as u64, exp, self.0 as u64) as u32
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub(crate) fn inv(self, a: u32) -> u32 {
        debug_assert!(a != 0);
        self.pow(a, self.0 as u64 - 2)
    }

    /// Order of the unit group, `p - 1`.
    pub fn unit_order(self) -> u64 {
        self.0 as u64 - 1
    }

    /// Every element of `F_p^x`, in increasing order.
    pub fn units(self) -> impl Iterator<Item = Scalar> {
        (1..self.0).map(move |v| Scalar {
            value: v,
            modulus: self,
        })
    }

    /// Smallest positive residue generating `F_p^x`.
    pub fn primitive_root(self) -> Scalar {
        let n = self.unit_order();
        let primes: Vec<u64> = factorize(n).into_iter().map(|(q, _)| q).collect();
        let g = (2..self.0 as u64)
            .find(|&g| {
                primes
                    .iter()
                    .all(|&q| pow_mod(g, n / q, self.as_u64()) != 1)
            })
            .expect("F_p^x is cyclic");
        Scalar {
            value: g as u32,
            modulus: self,
        }
    }

    /// Order of `-gamma` where `gamma` has multiplicative order `delta`.
    ///
    /// `2 delta` for odd `delta`, `delta / 2` when `delta = 2 (mod 4)` and
    /// `delta` when `4 | delta`.
    pub fn minus_gamma_order(self, delta: u64) -> Result<u64> {
        if delta == 0 || !self.unit_order().is_multiple_of(delta) {
            return Err(Error::domain(format!(
                "{delta} does not divide p - 1 = {}",
                self.unit_order()
            )));
        }
        Ok(match delta % 4 {
            0 => delta,
            2 => delta / 2,
            _ => 2 * delta,
        })
    }

    /// A square root of `a`, when one exists (Tonelli-Shanks).
    pub fn sqrt(self, a: u32) -> Option<u32> {
        let p = self.as_u64();
        let a = a as u64 % p;
        if a == 0 {
            return Some(0);
        }
        if pow_mod(a, (p - 1) / 2, p) != 1 {
            return None;
        }
        if p % 4 == 3 {
            return Some(pow_mod(a, (p + 1) / 4, p) as u32);
        }
        let s = (p - 1).trailing_zeros();
        let q = (p - 1) >> s;
        let z = (2..p)
            .find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)
            .expect("a non-residue exists");
        let mut m = s;
        let mut c = pow_mod(z, q, p);
        let mut t = pow_mod(a, q, p);
        let mut r = pow_mod(a, q.div_ceil(2), p);
        while t != 1 {
            let mut i = 0;
            let mut tt = t;
            while tt != 1 {
                tt = tt * tt % p;
                i += 1;
            }
            let b = pow_mod(c, 1 << (m - i - 1), p);
            m = i;
            c = b * b % p;
            t = t * c % p;
            r = r * b % p;
        }
        Some(r as u32)
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<u64> for PrimeModulus {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        PrimeModulus::new(p)
    }
}

impl From<PrimeModulus> for u64 {
    fn from(p: PrimeModulus) -> u64 {
        p.as_u64()
    }
}

/// A residue class modulo a [`PrimeModulus`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Scalar {
    value: u32,
    modulus: PrimeModulus,
}

impl Scalar {
    pub fn new(value: i64, modulus: PrimeModulus) -> Self {
        modulus.scalar(value)
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, exp: u64) -> Scalar {
        Scalar {
            value: self.modulus.pow(self.value, exp),
            modulus: self.modulus,
        }
    }

    pub fn inverse(self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::domain("zero has no inverse"));
        }
        Ok(Scalar {
            value: self.modulus.inv(self.value),
            modulus: self.modulus,
        })
    }

    /// Least `k >= 1` with `x^k = 1`.
    pub fn mult_order(self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::domain("zero has no multiplicative order"));
        }
        let p = self.modulus.as_u64();
        let mut k = p - 1;
        for (q, _) in factorize(p - 1) {
            while k.is_multiple_of(q) && pow_mod(self.value as u64, k / q, p) == 1 {
                k /= q;
            }
        }
        Ok(k)
    }

    /// Euler's criterion.
    pub fn is_quadratic_residue(self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::domain("zero is neither residue nor non-residue"));
        }
        Ok(self.pow(self.modulus.unit_order() / 2).value == 1)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Scalar {
            value: self.modulus.add(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Scalar {
            value: self.modulus.sub(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Scalar {
            value: self.modulus.mul(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            value: self.modulus.neg(self.value),
            modulus: self.modulus,
        }
    }
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut acc: u128 = 1 % m128;
    let mut b = (base % m) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Deterministic trial-division primality test (inputs are below 2^32 in
/// practice; larger inputs are still handled correctly, only slowly).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of `n`, sorted.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (q, e) in factorize(n) {
        let len = ds.len();
        let mut qk = 1;
        for _ in 0..e {
            qk *= q;
            for i in 0..len {
                ds.push(ds[i] * qk);
            }
        }
    }
    ds.sort_unstable();
    ds
}

/// Primes in `[lo, hi]`.
pub fn primes_between(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo..=hi).filter(|&n| is_prime(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> PrimeModulus {
        PrimeModulus::new(n).unwrap()
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(PrimeModulus::new(2).is_err());
        assert!(PrimeModulus::new(3).is_err());
        assert!(PrimeModulus::new(9).is_err());
        assert!(PrimeModulus::new(1 << 31).is_err());
        assert_eq!(PrimeModulus::new(5).unwrap().get(), 5);
    }

    #[test]
    fn mult_order_examples() {
        assert_eq!(p(13).scalar(1).mult_order().unwrap(), 1);
        for q in [5, 7, 11, 13, 101] {
            assert_eq!(p(q).scalar(q as i64 - 1).mult_order().unwrap(), 2);
        }
        assert_eq!(p(13).scalar(2).mult_order().unwrap(), 12);
        assert!(p(13).scalar(0).mult_order().is_err());
    }

    #[test]
    fn quadratic_residue_examples() {
        for q in [5, 7, 11, 13, 17, 101] {
            let m = p(q);
            assert!(m.scalar(4).is_quadratic_residue().unwrap());
            assert!(!m.primitive_root().is_quadratic_residue().unwrap());
        }
        assert!(p(7).scalar(2).is_quadratic_residue().unwrap());
        assert!(p(7).scalar(0).is_quadratic_residue().is_err());
    }

    #[test]
    fn primitive_root_examples() {
        assert_eq!(p(5).primitive_root().value(), 2);
        assert_eq!(p(7).primitive_root().value(), 3);
        assert_eq!(p(13).primitive_root().value(), 2);
        assert_eq!(p(23).primitive_root().value(), 5);
    }

    #[test]
    fn minus_gamma_order_examples() {
        assert_eq!(p(11).minus_gamma_order(5).unwrap(), 10);
        assert_eq!(p(13).minus_gamma_order(6).unwrap(), 3);
        assert_eq!(p(17).minus_gamma_order(8).unwrap(), 8);
        assert!(p(13).minus_gamma_order(5).is_err());
        assert!(p(13).minus_gamma_order(0).is_err());
    }

    #[test]
    fn sqrt_finds_roots() {
        for q in [5u64, 7, 13, 17, 41, 97, 113] {
            let m = p(q);
            for a in 0..q as u32 {
                match m.sqrt(a) {
                    Some(r) => assert_eq!(m.mul(r, r), a),
                    None => assert!(!m.scalar(a as i64).is_quadratic_residue().unwrap()),
                }
            }
        }
    }

    #[test]
    fn divisors_and_factors() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
    }
}
