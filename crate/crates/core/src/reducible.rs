//! Homothety guarantees when the mod-`p` representation is reducible.
//!
//! In a basis adapted to the isogeny kernel the image is upper triangular
//! with diagonal characters `(lambda, chi / lambda)`. Characters are tracked
//! only through their exponents on the cyclotomic character `chi`; on the
//! inertia group at a place above `p` one has `lambda^12 = chi^a` with `a` in
//! `{0, 4, 6, 8, 12}`. The family of these exponents over the places above
//! `p` decides which casework applies.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fp::PrimeModulus;
use crate::gl2::Mat2;
use crate::irreducible::FieldProfile;

/// Ramification indices of the good-reduction extension that can occur.
pub const RAMIFICATION_INDICES: [u32; 5] = [1, 2, 3, 4, 6];

/// The possible inertia exponents.
pub const INERTIA_EXPONENTS: [u32; 5] = [0, 4, 6, 8, 12];

/// Side condition on `p` attached to a table cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Congruence {
    #[serde(rename = "none")]
    None,
    #[serde(rename = "p≡2[3]")]
    TwoModThree,
    #[serde(rename = "p≡3[4]")]
    ThreeModFour,
}

impl Congruence {
    pub fn holds(self, p: u64) -> bool {
        match self {
            Congruence::None => true,
            Congruence::TwoModThree => p % 3 == 2,
            Congruence::ThreeModFour => p % 4 == 3,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Congruence::None => "—",
            Congruence::TwoModThree => "p≡2[3]",
            Congruence::ThreeModFour => "p≡3[4]",
        }
    }
}

/// Marker for a cell where `e a' = r (mod p - 1)` has no solution.
pub const INVALID_MARK: &str = "×";

/// One cell of the inertia-exponent table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApEntry {
    pub e_ram: u32,
    pub r: u32,
    /// `12 r / e`, absent for an invalid cell.
    pub a: Option<u32>,
    pub congruence: Congruence,
}

impl ApEntry {
    pub fn is_valid(&self) -> bool {
        self.a.is_some()
    }

    pub fn a_cell(&self) -> String {
        match self.a {
            Some(a) => a.to_string(),
            None => INVALID_MARK.to_string(),
        }
    }

    pub fn p_cell(&self) -> &'static str {
        if self.is_valid() {
            self.congruence.label()
        } else {
            INVALID_MARK
        }
    }
}

/// Look up the cell for ramification index `e_ram` and exponent `r`.
pub fn ap_from_table(e_ram: u32, r: u32) -> Result<ApEntry> {
    if !RAMIFICATION_INDICES.contains(&e_ram) {
        return Err(Error::domain(format!(
            "ramification index {e_ram} not in {{1,2,3,4,6}}"
        )));
    }
    if r > e_ram {
        return Err(Error::domain(format!("r = {r} exceeds e = {e_ram}")));
    }
    if e_ram.is_multiple_of(2) && r % 2 == 1 {
        return Ok(ApEntry {
            e_ram,
            r,
            a: None,
            congruence: Congruence::None,
        });
    }
    let congruence = if e_ram.is_multiple_of(3) && !r.is_multiple_of(3) {
        Congruence::TwoModThree
    } else if e_ram == 4 && !r.is_multiple_of(4) {
        Congruence::ThreeModFour
    } else {
        Congruence::None
    };
    Ok(ApEntry {
        e_ram,
        r,
        a: Some(12 * r / e_ram),
        congruence,
    })
}

/// All cells, ordered by `e` then `r`.
pub fn ap_table() -> Vec<ApEntry> {
    RAMIFICATION_INDICES
        .iter()
        .flat_map(|&e| (0..=e).map(move |r| ap_from_table(e, r).expect("in range")))
        .collect()
}

/// Text rendering: two blocks (`e` in {1,2,3}, then {4,6}) of four
/// tab-separated rows `e_p`, `r_p`, `a_p`, `p`, one column per cell.
pub fn render_ap_table_text() -> String {
    let cells = ap_table();
    let mut out = String::new();
    for (i, block) in [&[1u32, 2, 3][..], &[4, 6][..]].iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let row: Vec<&ApEntry> = cells.iter().filter(|c| block.contains(&c.e_ram)).collect();
        let mut line = |label: &str, f: &dyn Fn(&ApEntry) -> String| {
            out.push_str(label);
            for c in &row {
                out.push('\t');
                out.push_str(&f(c));
            }
            out.push('\n');
        };
        line("e_p", &|c| c.e_ram.to_string());
        line("r_p", &|c| c.r.to_string());
        line("a_p", &|c| c.a_cell());
        line("p", &|c| c.p_cell().to_string());
    }
    out
}

/// JSON form of one table cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApTableCell {
    pub e_ram: u32,
    pub r: u32,
    pub a: Option<u32>,
    pub a_cell: String,
    pub p_cell: String,
    pub congruence: Congruence,
}

impl From<&ApEntry> for ApTableCell {
    fn from(c: &ApEntry) -> Self {
        ApTableCell {
            e_ram: c.e_ram,
            r: c.r,
            a: c.a,
            a_cell: c.a_cell(),
            p_cell: c.p_cell().to_string(),
            congruence: c.congruence,
        }
    }
}

pub fn ap_table_cells() -> Vec<ApTableCell> {
    ap_table().iter().map(ApTableCell::from).collect()
}

/// Smallest `a' >= 0` with `e_ram a' = r (mod p - 1)`, if any.
pub fn solve_star_congruence(e_ram: u32, r: u32, p: u64) -> Result<Option<u64>> {
    ap_from_table(e_ram, r)?;
    if p < 5 {
        return Err(Error::domain("p must be at least 5"));
    }
    let m = p - 1;
    let e = e_ram as u64 % m;
    let r = r as u64 % m;
    let g = e.gcd(&m);
    if !r.is_multiple_of(g) {
        return Ok(None);
    }
    let (e_g, r_g, m_g) = (e / g, r / g, m / g);
    if m_g == 1 {
        return Ok(Some(0));
    }
    let ext = (e_g as i64).extended_gcd(&(m_g as i64));
    let inv = ext.x.rem_euclid(m_g as i64) as u64;
    Ok(Some((r_g as u128 * inv as u128 % m_g as u128) as u64))
}

/// Outcome of the reducible casework.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReducibleOutcome {
    /// The image contains the `k`-th powers of the homotheties.
    HomothetyExponent { k: u32 },
    /// The image contains the squares of the homotheties.
    Squares,
    /// The configuration can only occur for `p <= bound`.
    PrimeBounded {
        #[serde(serialize_with = "big_decimal", deserialize_with = "big_from_decimal")]
        bound: BigUint,
    },
}

fn big_decimal<S: Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_str_radix(10))
}

fn big_from_decimal<'de, D: serde::Deserializer<'de>>(
    d: D,
) -> std::result::Result<BigUint, D::Error> {
    let s = String::deserialize(d)?;
    s.parse().map_err(serde::de::Error::custom)
}

/// Exponent `1 + (p - 1) / 2` of the diagonal character when some `a = 6`;
/// its image on `F_p^x` is exactly the squares. Needs `p = 3 (mod 4)`.
pub fn lemma37_scalar_exponent(p: PrimeModulus) -> Result<(u64, ReducibleOutcome)> {
    let q = p.as_u64();
    if q % 4 != 3 {
        return Err(Error::domain(format!(
            "an exponent of 6 forces p = 3 (mod 4), but p = {q}"
        )));
    }
    Ok((1 + (q - 1) / 2, ReducibleOutcome::Squares))
}

fn check_exponent_valid(a: u32, p: u64) -> Result<()> {
    let needed = match a {
        0 | 12 => Congruence::None,
        4 | 8 => Congruence::TwoModThree,
        6 => Congruence::ThreeModFour,
        _ => return Err(Error::domain(format!("{a} is not an inertia exponent"))),
    };
    if !needed.holds(p) {
        return Err(Error::domain(format!(
            "exponent {a} requires {} but p = {p}",
            needed.label()
        )));
    }
    Ok(())
}

/// Two places above `p` with distinct exponents `a1 != a2` (neither 6).
pub fn combine_ap_pair(a1: u32, a2: u32, p: PrimeModulus) -> Result<ReducibleOutcome> {
    for a in [a1, a2] {
        if ![0, 4, 8, 12].contains(&a) {
            return Err(Error::domain(format!("exponent {a} not in {{0,4,8,12}}")));
        }
        check_exponent_valid(a, p.as_u64())?;
    }
    if a1 == a2 {
        return Err(Error::domain(
            "equal exponents belong to the uniform-family bounds",
        ));
    }
    let pair = (a1.min(a2), a1.max(a2));
    let k = match pair {
        (0, 4) | (8, 12) | (4, 8) => 4,
        (0, 8) | (4, 12) => 8,
        (0, 12) => 12,
        _ => unreachable!("distinct members of {{0,4,8,12}}"),
    };
    Ok(ReducibleOutcome::HomothetyExponent { k })
}

/// Two diagonal elements of the image (twelfth powers on the two inertia
/// groups, evaluated at a generator `x` or `x^3`) whose product is the
/// homothety `x^12` or `x^24`.
pub fn lemma311_witnesses(a1: u32, a2: u32, p: PrimeModulus) -> Result<[Mat2; 2]> {
    combine_ap_pair(a1, a2, p)?;
    let x = p.primitive_root();
    let pw = |k: i64| {
        let m = p.unit_order() as i64;
        x.pow(k.rem_euclid(m) as u64)
    };
    let d = |a: i64, b: i64| Mat2::diag(pw(a), pw(b)).expect("units");
    let (lo, hi) = (a1.min(a2), a1.max(a2));
    Ok(match (lo, hi) {
        (0, 4) => [d(0, -12), d(12, 24)],
        (8, 12) => [d(24, 12), d(-12, 0)],
        (0, 8) => [d(0, 12), d(24, 12)],
        (4, 12) => [d(12, 24), d(12, 0)],
        (0, 12) => [d(0, 12), d(12, 0)],
        (4, 8) => [d(4, 8), d(8, 4)],
        _ => unreachable!(),
    })
}

/// `diag(x^a, x^(12 - a))` for a generator `x`: the twelfth power of the
/// image of inertia at a place with exponent `a` is the cyclic group it
/// generates.
pub fn inertia_twelfth_power_generator(a: u32, p: PrimeModulus) -> Result<Mat2> {
    if !INERTIA_EXPONENTS.contains(&a) {
        return Err(Error::domain(format!("{a} is not an inertia exponent")));
    }
    let x = p.primitive_root();
    Mat2::diag(x.pow(a as u64), x.pow(12 - a as u64))
}

/// `(1 + 3^(D/2))^2`, the torsion bound for a point of order `p` over a
/// field of degree `D`.
pub fn oesterle_torsion_bound(degree: u64) -> Result<BigUint> {
    if degree == 0 || degree % 2 == 1 {
        return Err(Error::domain(format!(
            "degree {degree} must be even and positive"
        )));
    }
    let half = u32::try_from(degree / 2).map_err(|_| Error::domain("degree too large"))?;
    let base = BigUint::one() + Pow::pow(BigUint::from(3u32), half);
    Ok(&base * &base)
}

/// `(2^(6dh) + 2^(4dh))^2`.
pub fn lemma39_bound(d: u64, h: u64) -> Result<BigUint> {
    if d == 0 || h == 0 {
        return Err(Error::domain("d and h must be >= 1"));
    }
    let dh = u32::try_from(d * h).map_err(|_| Error::domain("d h too large"))?;
    let two = BigUint::from(2u32);
    let s = Pow::pow(&two, 6 * dh) + Pow::pow(&two, 4 * dh);
    Ok(&s * &s)
}

/// Frobenius data at a place of good reduction: trace `t` and norm `n` of
/// the characteristic polynomial `X^2 - t X + n`, and the class number `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusData {
    pub t: i64,
    pub n: u64,
    pub h: u32,
}

/// `s_k = beta^k + conj(beta)^k` for a root `beta` of `X^2 - t X + n`, by the
/// recurrence `s_k = t s_(k-1) - n s_(k-2)`, `s_0 = 2`, `s_1 = t`.
pub fn lucas_power_trace(t: i64, n: u64, k: u32) -> BigInt {
    let t = BigInt::from(t);
    let n = BigInt::from(n);
    let mut prev = BigInt::from(2);
    if k == 0 {
        return prev;
    }
    let mut cur = t.clone();
    for _ in 1..k {
        let next = &t * &cur - &n * &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `(beta^(12h) - n^(4h)) (conj(beta)^(12h) - n^(4h))
///  = n^(12h) - n^(4h) s_(12h) + n^(8h)`, a nonzero integer of absolute value
/// at most `(n^(6h) + n^(4h))^2`.
pub fn frobenius_norm_divisor(fd: &FrobeniusData) -> Result<BigInt> {
    if fd.n < 2 {
        return Err(Error::domain("norm must be at least 2"));
    }
    if fd.h == 0 {
        return Err(Error::domain("class number must be >= 1"));
    }
    if (fd.t as i128) * (fd.t as i128) > 4 * fd.n as i128 {
        return Err(Error::domain(format!(
            "t^2 = {} exceeds 4n = {}; roots would not be complex conjugates",
            fd.t as i128 * fd.t as i128,
            4 * fd.n as i128
        )));
    }
    let h = fd.h;
    let n = BigInt::from(fd.n);
    let n4 = Pow::pow(&n, 4 * h);
    let n8 = &n4 * &n4;
    let n12 = &n8 * &n4;
    let s = lucas_power_trace(fd.t, fd.n, 12 * h);
    let value = n12 - &n4 * s + n8;
    debug_assert!(!value.is_zero());
    Ok(value)
}

/// Casework over the family of exponents at the places above `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApFamily {
    values: Vec<u32>,
}

impl ApFamily {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::domain("empty exponent family"));
        }
        if let Some(bad) = values.iter().find(|a| !INERTIA_EXPONENTS.contains(a)) {
            return Err(Error::domain(format!("{bad} is not one of 0, 4, 6, 8, 12")));
        }
        Ok(ApFamily { values })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Parse a comma-separated list such as `"0,4,8"`.
    pub fn parse(text: &str) -> Result<Self> {
        let values = text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("not an exponent: {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        ApFamily::new(values)
    }
}

pub fn classify_ap_family(
    fam: &ApFamily,
    p: PrimeModulus,
    fp: &FieldProfile,
) -> Result<ReducibleOutcome> {
    let q = p.as_u64();
    for &a in fam.values() {
        check_exponent_valid(a, q)?;
    }
    if fam.values().contains(&6) {
        return lemma37_scalar_exponent(p).map(|(_, outcome)| outcome);
    }
    let distinct: BTreeSet<u32> = fam.values().iter().copied().collect();
    if distinct.len() > 1 {
        let vals: Vec<u32> = distinct.into_iter().collect();
        let mut best: Option<(u32, u32)> = None;
        for (i, &a1) in vals.iter().enumerate() {
            for &a2 in &vals[i + 1..] {
                let ReducibleOutcome::HomothetyExponent { k } = combine_ap_pair(a1, a2, p)? else {
                    unreachable!()
                };
                if best.is_none_or(|(bk, _)| k < bk) {
                    best = Some((k, a1));
                }
            }
        }
        let (k, _) = best.expect("at least one pair");
        return Ok(ReducibleOutcome::HomothetyExponent { k });
    }
    let bound = match fam.values()[0] {
        0 | 12 => oesterle_torsion_bound(12 * fp.d * fp.h)?,
        _ => lemma39_bound(fp.d, fp.h)?,
    };
    Ok(ReducibleOutcome::PrimeBounded { bound })
}

/// Bound above which a reducible image contains a subgroup of index dividing
/// 8 or 12 of the homotheties.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformBound {
    pub bound: BigUint,
    /// Set when the base field is `Q` (`d = 1`), outside the stated range.
    pub warning: Option<String>,
}

/// `max((1 + 3^(6dh))^2, (2^(6dh) + 2^(4dh))^2)`, which is always the first.
pub fn uniform_bound_reducible(d: u64, h: u64) -> Result<UniformBound> {
    let torsion = oesterle_torsion_bound(12 * d * h)?;
    let frob = lemma39_bound(d, h)?;
    let warning = (d == 1).then(|| {
        "d = 1: the reducible-case bound is stated for base fields other than Q".to_string()
    });
    Ok(UniformBound {
        bound: torsion.max(frob),
        warning,
    })
}

/// `(1 + 3^(6d))^2`, the threshold as printed for the orbit corollary (no
/// class number). Compare [`uniform_bound_reducible`].
pub fn corollary_threshold(d: u64) -> Result<BigUint> {
    oesterle_torsion_bound(12 * d)
}

/// `ceil((p - 1) / 12)`: lower bound on the number of multiples of a point
/// of order `p` lying in its Galois orbit.
pub fn orbit_lower_bound(p: u64) -> Result<u64> {
    if p < 5 {
        return Err(Error::domain("p must be at least 5"));
    }
    Ok((p - 1).div_ceil(12))
}

/// Local facts at places away from `p`, exposed as data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonramifiedCharacterData {
    /// Possible orders of the inertia image at potentially good reduction.
    pub inertia_order_divisors: [u64; 5],
    /// `lambda^2` is unramified at potentially multiplicative places.
    pub lambda_squared_unramified_multiplicative: bool,
    /// `lambda^12` is unramified at potentially good places.
    pub lambda_twelfth_unramified_good: bool,
}

impl NonramifiedCharacterData {
    /// Inertia images have order dividing 4 or 6.
    pub fn accepts_inertia_order(&self, k: u64) -> bool {
        k > 0 && (4 % k == 0 || 6 % k == 0)
    }

    /// Values of `lambda^2(Frob)` at a potentially multiplicative place of
    /// norm `n`: `{1, n^2 mod p}`.
    pub fn multiplicative_frobenius_values(&self, n: u64, p: u64) -> BTreeSet<u64> {
        let n = n % p;
        BTreeSet::from([1 % p, n * n % p])
    }
}

pub fn nonramified_character_orders() -> NonramifiedCharacterData {
    NonramifiedCharacterData {
        inertia_order_divisors: [1, 2, 3, 4, 6],
        lambda_squared_unramified_multiplicative: true,
        lambda_twelfth_unramified_good: true,
    }
}

/// Plain-text summary of an outcome.
pub fn describe_outcome(outcome: &ReducibleOutcome) -> String {
    let mut s = String::new();
    match outcome {
        ReducibleOutcome::HomothetyExponent { k } => {
            let _ = write!(s, "contains the {k}-th powers of the homotheties");
        }
        ReducibleOutcome::Squares => s.push_str("contains the squares of the homotheties"),
        ReducibleOutcome::PrimeBounded { bound } => {
            let _ = write!(s, "only possible for p <= {bound}");
        }
    }
    s
}
