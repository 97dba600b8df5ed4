//! Finitely generated subgroups of `GL_2(F_p)`, the named subgroups (Cartan,
//! Borel, normalizers), and classification into the maximal-subgroup
//! taxonomy.
//!
//! Membership in a taxonomy case is decided constructively: by searching
//! the projective line for stabilized points or pairs, and by scanning the
//! non-split Cartan subalgebras `F_p[z]`. Stabilizer and normalizer checks
//! only need the generators of the group.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::fp::{PrimeModulus, Scalar};
use crate::gl2::{gl2_order, sl2_order, Mat2, PglClass, ProjLine};

/// Moduli with `p^4` at most this many codes use a dense bitset for
/// membership.
const DENSE_CODE_LIMIT: u64 = 1 << 20;

#[derive(Debug, Clone)]
enum Members {
    Dense(Vec<u64>),
    Sparse(HashSet<u64>),
}

impl Members {
    fn new(p: PrimeModulus) -> Self {
        let q = p.as_u64();
        let codes = q * q * q * q;
        if codes <= DENSE_CODE_LIMIT {
            Members::Dense(vec![0; codes.div_ceil(64) as usize])
        } else {
            Members::Sparse(HashSet::new())
        }
    }

    #[inline]
    fn contains(&self, code: u64) -> bool {
        match self {
            Members::Dense(bits) => bits
                .get((code >> 6) as usize)
                .is_some_and(|w| w & (1 << (code & 63)) != 0),
            Members::Sparse(set) => set.contains(&code),
        }
    }

    /// Put `elements` (exactly the members) into increasing code order.
    fn sorted_elements(&self, p: PrimeModulus, elements: &mut Vec<Mat2>) {
        match self {
            Members::Dense(bits) => {
                let n = elements.len();
                elements.clear();
                for (w, &word) in bits.iter().enumerate() {
                    let mut rest = word;
                    while rest != 0 {
                        let code = (w as u64) << 6 | rest.trailing_zeros() as u64;
                        elements.push(Mat2::from_code(p, code).expect("member is invertible"));
                        rest &= rest - 1;
                    }
                }
                debug_assert_eq!(elements.len(), n);
            }
            Members::Sparse(_) => elements.sort_unstable(),
        }
    }

    /// Returns true if newly inserted.
    #[inline]
    fn insert(&mut self, code: u64) -> bool {
        match self {
            Members::Dense(bits) => {
                let w = &mut bits[(code >> 6) as usize];
                let mask = 1 << (code & 63);
                let fresh = *w & mask == 0;
                *w |= mask;
                fresh
            }
            Members::Sparse(set) => set.insert(code),
        }
    }
}

/// A subgroup of `GL_2(F_p)` together with the generators it was built from.
#[derive(Debug, Clone)]
pub struct Subgroup {
    modulus: PrimeModulus,
    generators: Vec<Mat2>,
    elements: Vec<Mat2>,
    members: Members,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

/// Default closure cap: the order of the ambient group.
pub fn default_cap(p: PrimeModulus) -> usize {
    usize::try_from(gl2_order(p)).unwrap_or(usize::MAX)
}

impl Subgroup {
    pub fn trivial(p: PrimeModulus) -> Self {
        let mut members = Members::new(p);
        let id = Mat2::identity(p);
        members.insert(id.code());
        Subgroup {
            modulus: p,
            generators: Vec::new(),
            elements: vec![id],
            members,
        }
    }

    /// Smallest subgroup containing `gens`.
    pub fn generate(p: PrimeModulus, gens: &[Mat2]) -> Result<Self> {
        Subgroup::generate_with_cap(p, gens, default_cap(p))
    }

    /// As [`Subgroup::generate`], failing once the closure exceeds `cap`
    /// elements.
    pub fn generate_with_cap(p: PrimeModulus, gens: &[Mat2], cap: usize) -> Result<Self> {
        for g in gens {
            if g.modulus() != p {
                return Err(Error::input(format!(
                    "generator [{g}] lives mod {}, expected {p}",
                    g.modulus()
                )));
            }
        }
        Subgroup::trivial(p).extend_many(gens, cap)
    }

    /// `<self, g>`.
    pub fn extend(&self, g: &Mat2, cap: usize) -> Result<Subgroup> {
        self.extend_many(std::slice::from_ref(g), cap)
    }

    /// `<self, gens>`, built as a union of left cosets of `self`.
    pub fn extend_many(&self, extra: &[Mat2], cap: usize) -> Result<Subgroup> {
        let p = self.modulus;
        let mut generators = self.generators.clone();
        for g in extra {
            if g.modulus() != p {
                return Err(Error::input(format!(
                    "generator [{g}] has the wrong modulus"
                )));
            }
            if !self.contains(g) && !generators.contains(g) {
                generators.push(*g);
            }
        }
        if generators.len() == self.generators.len() {
            return Ok(self.clone());
        }
        let mut members = self.members.clone();
        let mut elements = self.elements.clone();
        let mut reps = VecDeque::from([Mat2::identity(p)]);
        while let Some(x) = reps.pop_front() {
            for s in &generators {
                let y = s.mul_mat(&x);
                if members.contains(y.code()) {
                    continue;
                }
                if elements.len() + self.elements.len() > cap {
                    return Err(Error::Resource(format!(
                        "closure exceeds the cap of {cap} elements"
                    )));
                }
                for h in &self.elements {
                    let z = y.mul_mat(h);
                    members.insert(z.code());
                    elements.push(z);
                }
                reps.push_back(y);
            }
        }
        if elements.len() > cap {
            return Err(Error::Resource(format!(
                "closure exceeds the cap of {cap} elements"
            )));
        }
        members.sorted_elements(p, &mut elements);
        Ok(Subgroup {
            modulus: p,
            generators,
            elements,
            members,
        })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generators(&self) -> &[Mat2] {
        &self.generators
    }

    /// Elements in increasing code order.
    pub fn elements(&self) -> &[Mat2] {
        &self.elements
    }

    #[inline]
    pub fn contains(&self, m: &Mat2) -> bool {
        m.modulus() == self.modulus && self.members.contains(m.code())
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, g)| self.generators[i + 1..].iter().all(|h| g.commutes_with(h)))
    }

    /// 128-bit digest of the element set (the membership bitset for small
    /// `p`, the sorted codes otherwise); equal sets give equal fingerprints.
    pub fn fingerprint(&self) -> u128 {
        let mut hasher = Sha256::new();
        hasher.update(self.modulus.get().to_le_bytes());
        match &self.members {
            Members::Dense(bits) => {
                for w in bits {
                    hasher.update(w.to_le_bytes());
                }
            }
            Members::Sparse(_) => {
                for m in &self.elements {
                    hasher.update(m.code().to_le_bytes());
                }
            }
        }
        let digest = hasher.finalize();
        u128::from_le_bytes(digest[..16].try_into().expect("32-byte digest"))
    }

    /// Whether `g self g^-1 = other`.
    pub fn conjugates_to(&self, g: &Mat2, other: &Subgroup) -> bool {
        if self.order() != other.order() {
            return false;
        }
        let gi = g.inverse();
        self.generators
            .iter()
            .all(|h| other.contains(&g.mul_mat(h).mul_mat(&gi)))
    }

    /// Whether `g` normalizes this subgroup.
    pub fn normalized_by(&self, g: &Mat2) -> bool {
        self.conjugates_to(g, self)
    }

    /// `g self g^-1`.
    pub fn conjugate(&self, g: &Mat2) -> Subgroup {
        let gi = g.inverse();
        let p = self.modulus;
        let mut members = Members::new(p);
        let mut elements: Vec<Mat2> = self
            .elements
            .iter()
            .map(|h| {
                let c = g.mul_mat(h).mul_mat(&gi);
                members.insert(c.code());
                c
            })
            .collect();
        members.sorted_elements(p, &mut elements);
        Subgroup {
            modulus: p,
            generators: self
                .generators
                .iter()
                .map(|h| g.mul_mat(h).mul_mat(&gi))
                .collect(),
            elements,
            members,
        }
    }

    /// Generator-file text: `p` on the first line, then one `"a b c d"` line
    /// per generator, newline-terminated.
    pub fn to_generator_file(&self) -> String {
        let mut s = format!("{}\n", self.modulus);
        for g in &self.generators {
            s.push_str(&format!("{g}\n"));
        }
        s
    }

    /// Parse the generator-file format and close the generators.
    pub fn from_generator_file(text: &str) -> Result<Subgroup> {
        let (p, gens) = parse_generator_file(text)?;
        Subgroup::generate(p, &gens)
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "> mod {} (order {})", self.modulus, self.order())
    }
}

/// Parse the generator file: UTF-8, first line a decimal prime, then one line
/// of four space-separated residues per generator; every line ends in `\n`.
pub fn parse_generator_file(text: &str) -> Result<(PrimeModulus, Vec<Mat2>)> {
    if text.is_empty() {
        return Err(Error::Parse("empty generator file".into()));
    }
    if !text.ends_with('\n') {
        return Err(Error::Parse(
            "generator file must end with a newline".into(),
        ));
    }
    let mut lines = text[..text.len() - 1].split('\n');
    let first = lines.next().unwrap_or_default();
    if first.is_empty() || !first.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!(
            "first line must be a decimal prime, got {first:?}"
        )));
    }
    let p_raw: u64 = first
        .parse()
        .map_err(|_| Error::Parse(format!("modulus out of range: {first:?}")))?;
    let p = PrimeModulus::new(p_raw)?;
    let gens = lines
        .enumerate()
        .map(|(i, line)| {
            Mat2::parse(p, line).map_err(|e| match e {
                Error::Parse(m) => Error::Parse(format!("line {}: {m}", i + 2)),
                other => other,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((p, gens))
}

/// The whole of `GL_2(F_p)`.
pub fn full_group(p: PrimeModulus) -> Result<Subgroup> {
    let g = p.primitive_root().value() as i64;
    Subgroup::generate(
        p,
        &[
            Mat2::new(p, [1, 1, 0, 1])?,
            Mat2::new(p, [1, 0, 1, 1])?,
            Mat2::new(p, [g, 0, 0, 1])?,
        ],
    )
}

/// `SL_2(F_p)`, generated by the two elementary transvections.
pub fn special_linear(p: PrimeModulus) -> Result<Subgroup> {
    Subgroup::generate(
        p,
        &[Mat2::new(p, [1, 1, 0, 1])?, Mat2::new(p, [1, 0, 1, 1])?],
    )
}

/// Diagonal matrices: stabilizer of both coordinate axes, order `(p - 1)^2`.
pub fn build_split_cartan(p: PrimeModulus) -> Result<Subgroup> {
    let g = p.primitive_root().value() as i64;
    Subgroup::generate(
        p,
        &[Mat2::new(p, [g, 0, 0, 1])?, Mat2::new(p, [1, 0, 0, g])?],
    )
}

/// Upper-triangular matrices: stabilizer of the first axis, order
/// `p (p - 1)^2`.
pub fn build_borel(p: PrimeModulus) -> Result<Subgroup> {
    let g = p.primitive_root().value() as i64;
    Subgroup::generate(
        p,
        &[
            Mat2::new(p, [g, 0, 0, 1])?,
            Mat2::new(p, [1, 0, 0, g])?,
            Mat2::new(p, [1, 1, 0, 1])?,
        ],
    )
}

/// Matrices `[[a, b alpha], [b, a]]`, the units of `F_p[sqrt(alpha)]`;
/// cyclic of order `p^2 - 1`. `alpha` must be a quadratic non-residue.
pub fn build_nonsplit_cartan(p: PrimeModulus, alpha: Scalar) -> Result<Subgroup> {
    if alpha.modulus() != p {
        return Err(Error::input("alpha has the wrong modulus"));
    }
    if alpha.is_zero() || alpha.is_quadratic_residue()? {
        return Err(Error::input(format!(
            "{alpha} is not a quadratic non-residue mod {p}"
        )));
    }
    let q = p.as_u64();
    let al = alpha.value() as i64;
    let generator = (0..q as i64)
        .flat_map(|a| (1..q as i64).map(move |b| (a, b)))
        .map(|(a, b)| Mat2::new(p, [a, b * al, b, a]).expect("norm form is anisotropic"))
        .find(|m| m.element_order() == q * q - 1)
        .expect("F_{p^2}^x is cyclic");
    Subgroup::generate(p, &[generator])
}

/// The normalizer of `c` in `GL_2(F_p)`.
///
/// Cartan subgroups are recognized and extended by a single element swapping
/// the two stable lines (split) or acting as Frobenius (non-split); any other
/// subgroup falls back to a scan of `GL_2(F_p)`, limited to `p <= 31`.
pub fn normalizer_of(c: &Subgroup) -> Result<Subgroup> {
    let p = c.modulus();
    let q = p.as_u64();
    let cap = default_cap(p);
    let order = c.order();
    let abelian = c.is_abelian();
    if abelian && order == (q - 1) * (q - 1) {
        let lines = common_stable_lines(c);
        if lines.len() == 2 {
            let (u1, v1) = lines[0].coords();
            let (u2, v2) = lines[1].coords();
            let basis = Mat2::new(p, [u1 as i64, u2 as i64, v1 as i64, v2 as i64])?;
            let swap = Mat2::new(p, [0, 1, 1, 0])?.conjugate_by(&basis);
            return c.extend(&swap, cap);
        }
    }
    if abelian && order == q * q - 1 {
        if let Some(z) = c
            .generators()
            .iter()
            .find(|z| z.has_irreducible_char_poly())
        {
            // F_p[z] = F_p[z'] with z' = [[0, 1], [u, v]]; conjugation by
            // [[1, 0], [v, -1]] sends z' to its Galois conjugate v - z'
            // z = a I + b z', so both generate the same subalgebra
            let [a, b, _, d] = z.entries();
            let v = p.mul(p.sub(d, a), p.inv(b));
            let frob = Mat2::new(p, [1, 0, v as i64, -1])?;
            debug_assert!(c.normalized_by(&frob));
            return c.extend(&frob, cap);
        }
    }
    if q * q * q * q > DENSE_CODE_LIMIT {
        return Err(Error::Resource(format!(
            "generic normalizer search is limited to p <= 31, got {p}"
        )));
    }
    let mut n = c.clone();
    for g in Mat2::all(p) {
        if !n.contains(&g) && c.normalized_by(&g) {
            n = n.extend(&g, cap)?;
        }
    }
    Ok(n)
}

/// `(|G ∩ scalars|, (p - 1) / |G ∩ scalars|)`.
pub fn scalar_subgroup(g: &Subgroup) -> (u64, u64) {
    let m = g.elements().iter().filter(|x| x.is_scalar()).count() as u64;
    (m, g.modulus().unit_order() / m)
}

/// Order of `det(G)` in `F_p^x`.
pub fn det_image_order(g: &Subgroup) -> u64 {
    let dets: HashSet<u32> = g.elements().iter().map(|x| x.det().value()).collect();
    dets.len() as u64
}

/// For a subgroup containing `SL_2(F_p)`: whether it is the full preimage of
/// its determinant image, i.e. `|G| = |SL_2| * delta`.
pub fn verify_sl2_det_pullback(g: &Subgroup) -> Result<bool> {
    let p = g.modulus();
    if !contains_sl2(g) {
        return Err(Error::domain("subgroup does not contain SL_2(F_p)"));
    }
    Ok(g.order() as u128 == sl2_order(p) * det_image_order(g) as u128)
}

fn contains_sl2(g: &Subgroup) -> bool {
    let n = g.elements().iter().filter(|x| x.det().value() == 1).count() as u128;
    n == sl2_order(g.modulus())
}

fn common_stable_lines(g: &Subgroup) -> Vec<ProjLine> {
    ProjLine::all(g.modulus())
        .into_iter()
        .filter(|&l| g.generators().iter().all(|s| s.fixes(l)))
        .collect()
}

/// Unordered pairs of distinct lines stabilized setwise by every element.
fn stable_line_pairs(g: &Subgroup) -> Vec<(ProjLine, ProjLine)> {
    let p = g.modulus();
    let lines = ProjLine::all(p);
    let perms: Vec<Vec<usize>> = g
        .generators()
        .iter()
        .map(|s| lines.iter().map(|&l| s.apply(l).index(p)).collect())
        .collect();
    let mut out = Vec::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let ok = perms
                .iter()
                .all(|perm| (perm[i] == i && perm[j] == j) || (perm[i] == j && perm[j] == i));
            if ok {
                out.push((lines[i], lines[j]));
            }
        }
    }
    out
}

/// Normalized generators `[[0, 1], [u, v]]` of the non-split Cartan
/// subalgebras: one per `(u, v)` with `v^2 + 4u` a non-residue.
pub fn nonsplit_cartan_generators(p: PrimeModulus) -> Vec<Mat2> {
    let q = p.get();
    let mut out = Vec::new();
    for u in 1..q {
        for v in 0..q {
            let disc = p.add(p.mul(v, v), p.mul(4, u));
            if disc != 0
                && !p
                    .scalar(disc as i64)
                    .is_quadratic_residue()
                    .expect("nonzero")
            {
                out.push(Mat2::from_reduced(p, [0, 1, u, v]));
            }
        }
    }
    out
}

/// Whether `g` normalizes `F_p[z]^x` for `z = [[0, 1], [u, v]]`: the conjugate
/// `g z g^-1` must lie in the span of `I` and `z`.
fn normalizes_nonsplit(g: &Mat2, z: &Mat2) -> bool {
    let p = g.modulus();
    let w = g.mul_mat(z).mul_mat(&g.inverse()).entries();
    let [_, _, u, v] = z.entries();
    let beta = w[1];
    let alpha = w[0];
    w[2] == p.mul(beta, u) && w[3] == p.add(alpha, p.mul(beta, v))
}

/// Exceptional image type in `PGL_2(F_p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Exceptional {
    #[serde(rename = "none")]
    None,
    A4,
    S4,
    A5,
}

impl Exceptional {
    /// Element-order histogram `(order, count)` of the abstract group.
    pub fn order_histogram(self) -> &'static [(u64, u64)] {
        match self {
            Exceptional::None => &[],
            Exceptional::A4 => &[(1, 1), (2, 3), (3, 8)],
            Exceptional::S4 => &[(1, 1), (2, 9), (3, 8), (4, 6)],
            Exceptional::A5 => &[(1, 1), (2, 15), (3, 20), (5, 24)],
        }
    }
}

/// The image of `G` in `PGL_2(F_p)` as a set of classes.
pub fn pgl_image(g: &Subgroup) -> Vec<PglClass> {
    let mut classes: Vec<PglClass> = g.elements().iter().map(PglClass::of).collect();
    classes.sort_unstable();
    classes.dedup();
    classes
}

fn detect_exceptional(g: &Subgroup, scalar_order: u64) -> Exceptional {
    let pgl_size = g.order() / scalar_order;
    let candidate = match pgl_size {
        12 => Exceptional::A4,
        24 => Exceptional::S4,
        60 => Exceptional::A5,
        _ => return Exceptional::None,
    };
    let gens = g.generators();
    let abelian = gens.iter().enumerate().all(|(i, a)| {
        gens[i + 1..].iter().all(|b| {
            a.mul_mat(b)
                .mul_mat(&a.inverse())
                .mul_mat(&b.inverse())
                .is_scalar()
        })
    });
    if abelian {
        return Exceptional::None;
    }
    let mut hist: BTreeMap<u64, u64> = BTreeMap::new();
    for class in pgl_image(g) {
        *hist.entry(class.representative().pgl_order()).or_default() += 1;
    }
    let observed: Vec<(u64, u64)> = hist.into_iter().collect();
    if observed == candidate.order_histogram() {
        candidate
    } else {
        Exceptional::None
    }
}

/// Taxonomy flags and homothety data of a subgroup. Field names are the JSON
/// wire names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub order: u64,
    pub p_divides_order: bool,
    pub contains_sl2: bool,
    pub in_borel: bool,
    pub in_split_cartan: bool,
    pub in_split_normalizer: bool,
    pub in_nonsplit_cartan: bool,
    pub in_nonsplit_normalizer: bool,
    pub exceptional: Exceptional,
    pub irreducible: bool,
    pub scalar_order: u64,
    pub homothety_index: u64,
    pub det_image_order: u64,
}

impl ClassificationReport {
    /// The maximal-subgroup dichotomy: order prime to `p` means exceptional
    /// or inside a Cartan normalizer; order divisible by `p` means containing
    /// `SL_2` or inside a Borel.
    pub fn satisfies_taxonomy(&self) -> bool {
        if self.p_divides_order {
            self.contains_sl2 || self.in_borel
        } else {
            self.exceptional != Exceptional::None
                || self.in_split_normalizer
                || self.in_nonsplit_normalizer
        }
    }

    pub fn any_flag(&self) -> bool {
        self.contains_sl2
            || self.in_borel
            || self.in_split_cartan
            || self.in_split_normalizer
            || self.in_nonsplit_cartan
            || self.in_nonsplit_normalizer
            || self.exceptional != Exceptional::None
    }
}

pub fn classify(g: &Subgroup) -> ClassificationReport {
    let p = g.modulus();
    let order = g.order();
    let lines = common_stable_lines(g);
    let in_borel = !lines.is_empty();
    let in_split_cartan = lines.len() >= 2;
    let in_split_normalizer = in_split_cartan || !stable_line_pairs(g).is_empty();

    let non_scalar: Vec<&Mat2> = g.generators().iter().filter(|s| !s.is_scalar()).collect();
    let in_nonsplit_cartan = match non_scalar.first() {
        None => true,
        Some(z) => {
            z.has_irreducible_char_poly() && g.generators().iter().all(|s| s.commutes_with(z))
        }
    };
    let in_nonsplit_normalizer = in_nonsplit_cartan
        || nonsplit_cartan_generators(p)
            .iter()
            .any(|z| g.generators().iter().all(|s| normalizes_nonsplit(s, z)));

    let (scalar_order, homothety_index) = scalar_subgroup(g);
    ClassificationReport {
        order,
        p_divides_order: order.is_multiple_of(p.as_u64()),
        contains_sl2: contains_sl2(g),
        in_borel,
        in_split_cartan,
        in_split_normalizer,
        in_nonsplit_cartan,
        in_nonsplit_normalizer,
        exceptional: detect_exceptional(g, scalar_order),
        irreducible: !in_borel,
        scalar_order,
        homothety_index,
        det_image_order: det_image_order(g),
    }
}
