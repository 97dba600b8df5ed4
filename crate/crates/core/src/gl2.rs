//! The group `GL_2(F_p)`: element arithmetic, element orders, the projective
//! reduction to `PGL_2(F_p)`, and the action on the projective line.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::fp::{factorize, PrimeModulus, Scalar};

/// An invertible 2x2 matrix over `F_p`, entries stored row-major as
/// reduced residues.
#[derive(Debug, Clone, Copy)]
pub struct Mat2 {
    e: [u32; 4],
    p: PrimeModulus,
}

impl PartialEq for Mat2 {
    fn eq(&self, other: &Self) -> bool {
        self.e == other.e && self.p == other.p
    }
}

impl Eq for Mat2 {}

impl Hash for Mat2 {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.e.hash(state);
    }
}

impl PartialOrd for Mat2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mat2 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p, self.e).cmp(&(other.p, other.e))
    }
}

/// `|GL_2(F_p)| = (p^2 - 1)(p^2 - p)`.
pub fn gl2_order(p: PrimeModulus) -> u128 {
    let p = p.as_u64() as u128;
    (p * p - 1) * (p * p - p)
}

/// `|SL_2(F_p)| = p(p^2 - 1)`.
pub fn sl2_order(p: PrimeModulus) -> u128 {
    let p = p.as_u64() as u128;
    p * (p * p - 1)
}

impl Mat2 {
    /// Build `[[a, b], [c, d]]`, reducing each entry mod `p`. Fails when the
    /// determinant vanishes.
    pub fn new(p: PrimeModulus, entries: [i64; 4]) -> Result<Self> {
        let m = Mat2 {
            e: entries.map(|x| p.reduce(x)),
            p,
        };
        if m.det_raw() == 0 {
            return Err(Error::input(format!("matrix [{m}] is singular mod {p}")));
        }
        Ok(m)
    }

    /// Entries must already be reduced and the determinant nonzero.
    #[inline]
    pub(crate) fn from_reduced(p: PrimeModulus, e: [u32; 4]) -> Self {
        let m = Mat2 { e, p };
        debug_assert!(e.iter().all(|&x| x < p.get()));
        debug_assert!(m.det_raw() != 0);
        m
    }

    /// Decode the integer produced by [`Mat2::code`]. Returns `None` for
    /// singular or out-of-range codes.
    pub fn from_code(p: PrimeModulus, code: u64) -> Option<Self> {
        let q = p.as_u64();
        let mut c = code;
        let d = c % q;
        c /= q;
        let cc = c % q;
        c /= q;
        let b = c % q;
        c /= q;
        if c >= q {
            return None;
        }
        let m = Mat2 {
            e: [c as u32, b as u32, cc as u32, d as u32],
            p,
        };
        (m.det_raw() != 0).then_some(m)
    }

    pub fn identity(p: PrimeModulus) -> Self {
        Mat2 { e: [1, 0, 0, 1], p }
    }

    /// The homothety `lambda * I`; `lambda` must be nonzero.
    pub fn scalar(lambda: Scalar) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::input("zero homothety"));
        }
        let v = lambda.value();
        Ok(Mat2 {
            e: [v, 0, 0, v],
            p: lambda.modulus(),
        })
    }

    pub fn diag(a: Scalar, d: Scalar) -> Result<Self> {
        Mat2::new(a.modulus(), [a.value() as i64, 0, 0, d.value() as i64])
    }

    #[inline]
    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    /// Row-major residues `[a, b, c, d]`.
    #[inline]
    pub fn entries(&self) -> [u32; 4] {
        self.e
    }

    pub fn entry(&self, row: usize, col: usize) -> Scalar {
        self.p.scalar(self.e[2 * row + col] as i64)
    }

    /// Injective integer encoding `((a p + b) p + c) p + d`.
    #[inline]
    pub fn code(&self) -> u64 {
        let q = self.p.as_u64();
        ((self.e[0] as u64 * q + self.e[1] as u64) * q + self.e[2] as u64) * q + self.e[3] as u64
    }

    #[inline]
    fn det_raw(&self) -> u32 {
        let p = self.p;
        p.sub(p.mul(self.e[0], self.e[3]), p.mul(self.e[1], self.e[2]))
    }

    pub fn det(&self) -> Scalar {
        self.p.scalar(self.det_raw() as i64)
    }

    pub fn trace(&self) -> Scalar {
        self.p.scalar(self.p.add(self.e[0], self.e[3]) as i64)
    }

    /// `(t, n)` such that the characteristic polynomial is `X^2 - t X + n`.
    pub fn char_poly(&self) -> (Scalar, Scalar) {
        (self.trace(), self.det())
    }

    /// Discriminant `t^2 - 4n` of the characteristic polynomial.
    pub fn discriminant(&self) -> Scalar {
        let (t, n) = self.char_poly();
        t * t - self.p.scalar(4) * n
    }

    /// True when the characteristic polynomial has no root in `F_p`.
    pub fn has_irreducible_char_poly(&self) -> bool {
        let disc = self.discriminant();
        !disc.is_zero() && !disc.is_quadratic_residue().expect("nonzero")
    }

    #[inline]
    pub fn is_scalar(&self) -> bool {
        self.e[1] == 0 && self.e[2] == 0 && self.e[0] == self.e[3]
    }

    #[inline]
    pub fn is_identity(&self) -> bool {
        self.e == [1, 0, 0, 1]
    }

    #[inline]
    pub fn mul_mat(&self, rhs: &Mat2) -> Mat2 {
        debug_assert_eq!(self.p, rhs.p);
        let p = self.p.as_u64();
        let [a, b, c, d] = self.e.map(|x| x as u64);
        let [w, x, y, z] = rhs.e.map(|x| x as u64);
        Mat2 {
            e: [
                ((a * w + b * y) % p) as u32,
                ((a * x + b * z) % p) as u32,
                ((c * w + d * y) % p) as u32,
                ((c * x + d * z) % p) as u32,
            ],
            p: self.p,
        }
    }

    pub fn inverse(&self) -> Mat2 {
        let p = self.p;
        let inv = p.inv(self.det_raw());
        let [a, b, c, d] = self.e;
        Mat2 {
            e: [
                p.mul(d, inv),
                p.mul(p.neg(b), inv),
                p.mul(p.neg(c), inv),
                p.mul(a, inv),
            ],
            p,
        }
    }

    /// `g m g^-1`.
    pub fn conjugate_by(&self, g: &Mat2) -> Mat2 {
        g.mul_mat(self).mul_mat(&g.inverse())
    }

    pub fn commutes_with(&self, other: &Mat2) -> bool {
        self.mul_mat(other) == other.mul_mat(self)
    }

    /// Binary exponentiation.
    pub fn pow(&self, mut exp: u64) -> Mat2 {
        let mut acc = Mat2::identity(self.p);
        let mut base = *self;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_mat(&base);
            }
            base = base.mul_mat(&base);
            exp >>= 1;
        }
        acc
    }

    /// Least `k >= 1` with `m^k = I`.
    ///
    /// Semisimple elements have order dividing `p^2 - 1`; the others are
    /// `lambda (I + N)` with order dividing `p (p - 1)`. Either way the order
    /// is found by descending through the prime factors of that exponent.
    pub fn element_order(&self) -> u64 {
        let q = self.p.as_u64();
        let (mut k, factors) = if self.pow(q * q - 1).is_identity() {
            (q * q - 1, merge_factors(&[q - 1, q + 1]))
        } else {
            (q * (q - 1), merge_factors(&[q, q - 1]))
        };
        for f in factors {
            while k % f == 0 && self.pow(k / f).is_identity() {
                k /= f;
            }
        }
        k
    }

    /// Order of the image in `PGL_2(F_p)`: least `k` with `m^k` scalar.
    pub fn pgl_order(&self) -> u64 {
        let mut k = self.element_order();
        for (f, _) in factorize(k) {
            while k.is_multiple_of(f) && self.pow(k / f).is_scalar() {
                k /= f;
            }
        }
        k
    }

    pub fn pgl_class(&self) -> PglClass {
        PglClass::of(self)
    }

    /// Image of a projective line under `m` acting on column vectors.
    #[inline]
    pub fn apply(&self, line: ProjLine) -> ProjLine {
        let p = self.p;
        let [a, b, c, d] = self.e;
        let u = p.add(p.mul(a, line.u), p.mul(b, line.v));
        let v = p.add(p.mul(c, line.u), p.mul(d, line.v));
        ProjLine::normalize(p, u, v)
    }

    #[inline]
    pub fn fixes(&self, line: ProjLine) -> bool {
        self.apply(line) == line
    }

    /// Lines `L` with `m L = L`: all `p + 1` for a homothety, otherwise the
    /// eigenlines (zero, one or two of them).
    pub fn stable_lines(&self) -> Vec<ProjLine> {
        let p = self.p;
        if self.is_scalar() {
            return ProjLine::all(p);
        }
        let (t, _) = self.char_poly();
        let disc = self.discriminant();
        let Some(root) = p.sqrt(disc.value()) else {
            return Vec::new();
        };
        let half = p.inv(2);
        let mut eigen = vec![p.mul(p.add(t.value(), root), half)];
        if root != 0 {
            eigen.push(p.mul(p.sub(t.value(), root), half));
        }
        let [a, b, c, d] = self.e;
        let mut lines: Vec<ProjLine> = eigen
            .into_iter()
            .map(|lambda| {
                // kernel of m - lambda I; some row is nonzero since m is not scalar
                let (x, y) = if p.sub(a, lambda) != 0 || b != 0 {
                    (p.sub(a, lambda), b)
                } else {
                    (c, p.sub(d, lambda))
                };
                ProjLine::normalize(p, y, p.neg(x))
            })
            .collect();
        lines.sort();
        lines.dedup();
        lines
    }

    /// Parse the four-residue text form `"a b c d"` (row-major, decimal).
    pub fn parse(p: PrimeModulus, text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(' ').collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!(
                "expected four space-separated residues, got {text:?}"
            )));
        }
        let mut e = [0i64; 4];
        for (slot, s) in e.iter_mut().zip(&parts) {
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("not a decimal residue: {s:?}")));
            }
            let v: u64 = s
                .parse()
                .map_err(|_| Error::Parse(format!("residue out of range: {s:?}")))?;
            if v >= p.as_u64() {
                return Err(Error::Parse(format!("residue {v} is not below p = {p}")));
            }
            *slot = v as i64;
        }
        Mat2::new(p, e)
    }

    /// Every element of `GL_2(F_p)` in code order. Only sensible for tiny `p`.
    pub fn all(p: PrimeModulus) -> impl Iterator<Item = Mat2> {
        let q = p.as_u64();
        (0..q * q * q * q).filter_map(move |c| Mat2::from_code(p, c))
    }
}

fn merge_factors(ns: &[u64]) -> Vec<u64> {
    let mut fs: Vec<u64> = ns
        .iter()
        .flat_map(|&n| factorize(n).into_iter().map(|(q, _)| q))
        .collect();
    fs.sort_unstable();
    fs.dedup();
    fs
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        self.mul_mat(&rhs)
    }
}

impl Mul<&Mat2> for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        self.mul_mat(rhs)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.e;
        write!(f, "{a} {b} {c} {d}")
    }
}

/// A point of `P^1(F_p)`, stored with its first nonzero coordinate equal to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjLine {
    u: u32,
    v: u32,
}

impl ProjLine {
    pub fn new(p: PrimeModulus, u: i64, v: i64) -> Result<Self> {
        let (u, v) = (p.reduce(u), p.reduce(v));
        if u == 0 && v == 0 {
            return Err(Error::input("the zero vector spans no line"));
        }
        Ok(ProjLine::normalize(p, u, v))
    }

    #[inline]
    fn normalize(p: PrimeModulus, u: u32, v: u32) -> Self {
        if u != 0 {
            ProjLine {
                u: 1,
                v: p.mul(v, p.inv(u)),
            }
        } else {
            debug_assert!(v != 0);
            ProjLine { u: 0, v: 1 }
        }
    }

    /// All `p + 1` lines: `(1, t)` for `t in F_p`, then `(0, 1)`.
    pub fn all(p: PrimeModulus) -> Vec<ProjLine> {
        (0..p.get())
            .map(|t| ProjLine { u: 1, v: t })
            .chain(std::iter::once(ProjLine { u: 0, v: 1 }))
            .collect()
    }

    /// Position in [`ProjLine::all`].
    pub fn index(self, p: PrimeModulus) -> usize {
        if self.u == 1 {
            self.v as usize
        } else {
            p.get() as usize
        }
    }

    /// Normalized representative `(u, v)`.
    pub fn coords(self) -> (u32, u32) {
        (self.u, self.v)
    }
}

/// The image of a matrix in `PGL_2(F_p)`, represented by the scalar
/// multiple whose first nonzero entry is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PglClass(Mat2);

impl PglClass {
    pub fn of(m: &Mat2) -> Self {
        let p = m.p;
        let lead = m.e.iter().copied().find(|&x| x != 0).expect("invertible");
        let inv = p.inv(lead);
        PglClass(Mat2 {
            e: m.e.map(|x| p.mul(x, inv)),
            p,
        })
    }

    pub fn representative(&self) -> Mat2 {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> PrimeModulus {
        PrimeModulus::new(n).unwrap()
    }

    fn m(q: u64, e: [i64; 4]) -> Mat2 {
        Mat2::new(p(q), e).unwrap()
    }

    #[test]
    fn singular_matrix_rejected() {
        assert!(Mat2::new(p(7), [1, 2, 2, 4]).is_err());
        assert!(Mat2::new(p(7), [0, 0, 0, 0]).is_err());
    }

    #[test]
    fn element_order_examples() {
        assert_eq!(Mat2::identity(p(5)).element_order(), 1);
        assert_eq!(m(7, [0, -1, 1, 0]).element_order(), 4);
        assert_eq!(m(7, [1, 1, 0, 1]).element_order(), 7);
        assert_eq!(m(7, [-1, 0, 0, -1]).element_order(), 2);
    }

    #[test]
    fn pgl_order_examples() {
        assert_eq!(m(11, [3, 0, 0, 3]).pgl_order(), 1);
        assert_eq!(m(11, [1, 1, 0, 1]).pgl_order(), 11);
        // generator of the non-split Cartan built from alpha = 2 at p = 5
        let g = (0..5)
            .flat_map(|a| (1..5).map(move |b| m(5, [a, 2 * b, b, a])))
            .find(|g| g.element_order() == 24)
            .unwrap();
        assert_eq!(g.pgl_order(), 6);
    }

    #[test]
    fn char_poly_examples() {
        let (t, n) = Mat2::identity(p(7)).char_poly();
        assert_eq!((t.value(), n.value()), (2, 1));
        let (t, n) = m(7, [0, -1, 1, 0]).char_poly();
        assert_eq!((t.value(), n.value()), (0, 1));
        let (t, n) = m(7, [1, 2, 3, 4]).char_poly();
        assert_eq!((t.value(), n.value()), (5, 5));
    }

    #[test]
    fn stable_lines_examples() {
        assert_eq!(Mat2::identity(p(5)).stable_lines().len(), 6);
        let axes = m(7, [2, 0, 0, 3]).stable_lines();
        assert_eq!(
            axes,
            vec![
                ProjLine::new(p(7), 0, 1).unwrap(),
                ProjLine::new(p(7), 1, 0).unwrap()
            ]
        );
        // x^2 + 1 is irreducible mod 7
        let rot = m(7, [0, -1, 1, 0]);
        assert!(rot.has_irreducible_char_poly());
        assert!(rot.stable_lines().is_empty());
        assert!(ProjLine::all(p(7)).into_iter().all(|l| !rot.fixes(l)));
        // unipotent: exactly one line
        assert_eq!(m(7, [1, 1, 0, 1]).stable_lines().len(), 1);
    }

    #[test]
    fn projective_line_count() {
        for q in [5u64, 7, 11, 13] {
            let lines = ProjLine::all(p(q));
            assert_eq!(lines.len() as u64, q + 1);
            for (i, l) in lines.iter().enumerate() {
                assert_eq!(l.index(p(q)), i);
            }
        }
    }

    #[test]
    fn pgl_class_identifies_scalar_multiples() {
        let a = m(7, [2, 3, 1, 4]);
        let b = m(7, [6, 9, 3, 12]);
        assert_eq!(a.pgl_class(), b.pgl_class());
        assert_ne!(a.pgl_class(), m(7, [2, 3, 1, 6]).pgl_class());
        assert_eq!(a.pgl_class().representative().entries()[0], 1);
    }

    #[test]
    fn parse_round_trip_and_errors() {
        let q = p(7);
        let a = Mat2::parse(q, "1 2 3 4").unwrap();
        assert_eq!(a.to_string(), "1 2 3 4");
        assert!(Mat2::parse(q, "1 2 3").is_err());
        assert!(Mat2::parse(q, "1  2 3 4").is_err());
        assert!(Mat2::parse(q, "1 2 3 9").is_err());
        assert!(Mat2::parse(q, "1 2 2 4").is_err());
        assert!(Mat2::parse(q, "-1 2 3 4").is_err());
    }

    #[test]
    fn code_round_trip_and_group_size() {
        let q = p(5);
        let all: Vec<Mat2> = Mat2::all(q).collect();
        assert_eq!(all.len() as u128, gl2_order(q));
        for g in &all {
            assert_eq!(Mat2::from_code(q, g.code()), Some(*g));
            assert!(g.mul_mat(&g.inverse()).is_identity());
        }
    }
}
