//! Homothety guarantees when the mod-`p` representation is irreducible.
//!
//! Every function here is a pure formula returning data; nothing is asserted
//! against a live group. The oracle cross-checks the group-level claims
//! separately on enumerated subgroups.

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp::PrimeModulus;

/// Primes `p` for which an elliptic curve over `Q` can have a reducible
/// mod-`p` representation, in the order they are usually listed.
pub const RATIONAL_REDUCIBLE_PRIMES: [u64; 12] = [2, 3, 5, 7, 13, 11, 17, 19, 37, 43, 67, 163];

/// Primes at least 23 that are still excluded from the statement over `Q`.
pub const RATIONAL_EXCLUDED_PRIMES: [u64; 4] = [37, 43, 67, 163];

/// Lower threshold (inclusive) for the statement over `Q`.
pub const RATIONAL_THRESHOLD: u64 = 23;

/// When some place above `p` is unramified, exceptional images are already
/// excluded for `p >= 17`.
pub const UNRAMIFIED_EXCEPTIONAL_THRESHOLD: u64 = 17;

/// Numerical data of the base field: degree, class number and the least
/// ramification index of a place above `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldProfile {
    pub d: u64,
    pub h: u64,
    pub e: u64,
    pub p_unramified: bool,
}

impl FieldProfile {
    pub fn new(d: u64, h: u64, e: u64, p_unramified: bool) -> Result<Self> {
        if d == 0 || h == 0 || e == 0 {
            return Err(Error::domain(
                "degree, class number and ramification index must be >= 1",
            ));
        }
        if e > d {
            return Err(Error::domain(format!(
                "ramification index {e} exceeds degree {d}"
            )));
        }
        if p_unramified && e != 1 {
            return Err(Error::domain(
                "an unramified prime has ramification index 1",
            ));
        }
        Ok(FieldProfile {
            d,
            h,
            e,
            p_unramified,
        })
    }

    /// The rationals: `d = h = e = 1`, every `p` unramified.
    pub fn rationals() -> Self {
        FieldProfile {
            d: 1,
            h: 1,
            e: 1,
            p_unramified: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GuaranteeKind {
    None,
    OrderAtLeast { n: u64 },
    Squares,
    All,
}

/// What the image is guaranteed to contain among the homotheties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomothetyGuarantee {
    #[serde(flatten)]
    pub kind: GuaranteeKind,
    /// Order of the guaranteed subgroup of homotheties, when known.
    pub witness_order: Option<u64>,
}

impl HomothetyGuarantee {
    pub fn none() -> Self {
        HomothetyGuarantee {
            kind: GuaranteeKind::None,
            witness_order: None,
        }
    }

    pub fn order_at_least(n: u64) -> Self {
        HomothetyGuarantee {
            kind: GuaranteeKind::OrderAtLeast { n },
            witness_order: Some(n),
        }
    }

    pub fn squares(p: PrimeModulus) -> Self {
        HomothetyGuarantee {
            kind: GuaranteeKind::Squares,
            witness_order: Some(p.unit_order() / 2),
        }
    }

    pub fn all(p: PrimeModulus) -> Self {
        HomothetyGuarantee {
            kind: GuaranteeKind::All,
            witness_order: Some(p.unit_order()),
        }
    }

    /// Squares, upgraded to all homotheties when `p = 1 (mod 4)`.
    fn squares_or_all(p: PrimeModulus) -> Self {
        if p.as_u64() % 4 == 1 {
            HomothetyGuarantee::all(p)
        } else {
            HomothetyGuarantee::squares(p)
        }
    }
}

fn check_divides(delta: u64, p: PrimeModulus) -> Result<()> {
    if delta == 0 || !p.unit_order().is_multiple_of(delta) {
        return Err(Error::domain(format!(
            "delta = {delta} does not divide p - 1 = {}",
            p.unit_order()
        )));
    }
    Ok(())
}

/// Order of the homotheties whose determinant lies in a subgroup of order
/// `delta`: `2 gcd(delta, (p - 1) / 2)`. A group containing `SL_2` contains
/// all of them.
pub fn homothety_order_sl2_case(delta: u64, p: PrimeModulus) -> Result<u64> {
    check_divides(delta, p)?;
    Ok(2 * delta.gcd(&(p.unit_order() / 2)))
}

/// `delta / gcd(2, delta)`: the homothety order forced inside a Cartan
/// normalizer (outside the split Cartan itself).
pub fn homothety_order_cartan_case(delta: u64) -> Result<u64> {
    if delta == 0 {
        return Err(Error::domain("delta must be >= 1"));
    }
    Ok(if delta.is_multiple_of(2) {
        delta / 2
    } else {
        delta
    })
}

/// `20 e + 1`: primes strictly above this cannot have exceptional image.
pub fn exceptional_exclusion_threshold(e: u64) -> Result<u64> {
    if e == 0 {
        return Err(Error::domain("ramification index must be >= 1"));
    }
    Ok(20 * e + 1)
}

/// `(p - 1) / (4 e)`, a lower bound for the largest element order in the
/// projective image. It exceeds 5 exactly when `p > 20 e + 1`.
pub fn pgl_order_lower_bound(p: u64, e: u64) -> Result<Ratio<u64>> {
    if e == 0 {
        return Err(Error::domain("ramification index must be >= 1"));
    }
    if p == 0 {
        return Err(Error::domain("p must be positive"));
    }
    Ok(Ratio::new(p - 1, 4 * e))
}

/// Degree-only statement: for `p > 20 d + 1`, homotheties of order at least
/// `ceil((p - 1) / (2 d))`.
pub fn irreducible_theorem_i(fp: &FieldProfile, p: PrimeModulus) -> HomothetyGuarantee {
    let q = p.as_u64();
    if q > 20 * fp.d + 1 {
        HomothetyGuarantee::order_at_least((q - 1).div_ceil(2 * fp.d))
    } else {
        HomothetyGuarantee::none()
    }
}

/// Unramified statement: for `p >= 17` unramified in `K`, the squares of the
/// homotheties, and all homotheties when `p = 1 (mod 4)`.
pub fn irreducible_theorem_ii(p: PrimeModulus, p_unramified: bool) -> HomothetyGuarantee {
    if p_unramified && p.as_u64() >= UNRAMIFIED_EXCEPTIONAL_THRESHOLD {
        HomothetyGuarantee::squares_or_all(p)
    } else {
        HomothetyGuarantee::none()
    }
}

/// Statement over `Q`: for `p >= 23` outside `{37, 43, 67, 163}`, the squares
/// of the homotheties, and all of them when `p = 1 (mod 4)`.
pub fn q_theorem(p: PrimeModulus) -> HomothetyGuarantee {
    let q = p.as_u64();
    if q >= RATIONAL_THRESHOLD && !RATIONAL_EXCLUDED_PRIMES.contains(&q) {
        HomothetyGuarantee::squares_or_all(p)
    } else {
        HomothetyGuarantee::none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> PrimeModulus {
        PrimeModulus::new(n).unwrap()
    }

    #[test]
    fn sl2_case() {
        assert_eq!(homothety_order_sl2_case(12, p(13)).unwrap(), 12);
        assert_eq!(homothety_order_sl2_case(3, p(13)).unwrap(), 6);
        for q in [5, 7, 11, 13, 97] {
            assert_eq!(homothety_order_sl2_case(1, p(q)).unwrap(), 2);
        }
        assert!(homothety_order_sl2_case(5, p(13)).is_err());
    }

    #[test]
    fn cartan_case() {
        assert_eq!(homothety_order_cartan_case(12).unwrap(), 6);
        assert_eq!(homothety_order_cartan_case(7).unwrap(), 7);
        assert_eq!(homothety_order_cartan_case(1).unwrap(), 1);
        assert!(homothety_order_cartan_case(0).is_err());
    }

    #[test]
    fn exclusion_thresholds() {
        assert_eq!(exceptional_exclusion_threshold(1).unwrap(), 21);
        assert_eq!(exceptional_exclusion_threshold(2).unwrap(), 41);
        assert_eq!(UNRAMIFIED_EXCEPTIONAL_THRESHOLD, 17);
        assert_eq!(
            pgl_order_lower_bound(101, 1).unwrap(),
            Ratio::from_integer(25)
        );
        assert_eq!(pgl_order_lower_bound(23, 1).unwrap(), Ratio::new(11, 2));
        assert_eq!(
            pgl_order_lower_bound(21, 1).unwrap(),
            Ratio::from_integer(5)
        );
    }

    #[test]
    fn theorem_i_examples() {
        let q = FieldProfile::rationals();
        assert_eq!(
            irreducible_theorem_i(&q, p(23)),
            HomothetyGuarantee::order_at_least(11)
        );
        assert_eq!(irreducible_theorem_i(&q, p(19)), HomothetyGuarantee::none());
        let cubic = FieldProfile::new(3, 1, 1, true).unwrap();
        // 61 = 20 * 3 + 1 sits on the boundary, which is excluded
        assert_eq!(
            irreducible_theorem_i(&cubic, p(61)),
            HomothetyGuarantee::none()
        );
        assert_eq!(
            irreducible_theorem_i(&cubic, p(67)),
            HomothetyGuarantee::order_at_least(11)
        );
    }

    #[test]
    fn theorem_ii_examples() {
        assert_eq!(
            irreducible_theorem_ii(p(19), true).kind,
            GuaranteeKind::Squares
        );
        assert_eq!(irreducible_theorem_ii(p(17), true).kind, GuaranteeKind::All);
        assert_eq!(irreducible_theorem_ii(p(29), true).kind, GuaranteeKind::All);
        assert_eq!(
            irreducible_theorem_ii(p(13), true).kind,
            GuaranteeKind::None
        );
        assert_eq!(
            irreducible_theorem_ii(p(29), false).kind,
            GuaranteeKind::None
        );
    }

    #[test]
    fn q_theorem_examples() {
        assert_eq!(q_theorem(p(37)).kind, GuaranteeKind::None);
        assert_eq!(q_theorem(p(29)), HomothetyGuarantee::all(p(29)));
        assert_eq!(q_theorem(p(23)), HomothetyGuarantee::squares(p(23)));
        assert_eq!(q_theorem(p(23)).witness_order, Some(11));
    }

    #[test]
    fn field_profile_validation() {
        assert!(FieldProfile::new(2, 1, 3, false).is_err());
        assert!(FieldProfile::new(2, 1, 2, true).is_err());
        assert!(FieldProfile::new(0, 1, 1, true).is_err());
        assert!(FieldProfile::new(2, 3, 2, false).is_ok());
    }

    #[test]
    fn guarantee_json_shape() {
        let g = HomothetyGuarantee::order_at_least(11);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"kind":"order_at_least","n":11,"witness_order":11}"#);
        let back: HomothetyGuarantee = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
    }
}
