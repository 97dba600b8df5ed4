//! Exhaustive verification over the subgroups of `GL_2(F_p)` for tiny `p`.
//!
//! Subgroups are enumerated up to conjugacy. Starting from the trivial group,
//! each class representative `H` is extended by one cyclic subgroup from
//! every orbit of `N(H)` on the cyclic subgroups not contained in `H`. Every
//! subgroup `K` arises this way (take `H` maximal in `K`), so running to a
//! fixpoint finds all classes; stopping after two rounds finds exactly the
//! classes of subgroups generated by two elements.
//!
//! All checked properties are invariant under conjugation, so one
//! representative per class suffices. The checks recompute every
//! classification flag element by element, independently of the
//! generator-based tests used by [`classify`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp::{pow_mod, PrimeModulus};
use crate::gl2::{gl2_order, Mat2, ProjLine};
use crate::subgroups::{
    classify, default_cap, verify_sl2_det_pullback, ClassificationReport, Exceptional, Subgroup,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumerationMode {
    /// Every subgroup; `p` in {5, 7}.
    FullLattice,
    /// Subgroups generated by two elements; `p` in {5, 7, 11, 13}.
    GenPairs,
}

impl EnumerationMode {
    pub fn supports(self, p: u64) -> bool {
        match self {
            EnumerationMode::FullLattice => matches!(p, 5 | 7),
            EnumerationMode::GenPairs => matches!(p, 5 | 7 | 11 | 13),
        }
    }

    /// The full lattice where it is supported, otherwise pairs.
    pub fn default_for(p: u64) -> Self {
        if EnumerationMode::FullLattice.supports(p) {
            EnumerationMode::FullLattice
        } else {
            EnumerationMode::GenPairs
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EnumerationMode::FullLattice => "full_lattice",
            EnumerationMode::GenPairs => "gen_pairs",
        }
    }
}

impl fmt::Display for EnumerationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EnumerationMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full_lattice" => Ok(EnumerationMode::FullLattice),
            "gen_pairs" => Ok(EnumerationMode::GenPairs),
            _ => Err(Error::Parse(format!("unknown enumeration mode {s:?}"))),
        }
    }
}

/// One conjugacy class of subgroups.
#[derive(Debug, Clone)]
pub struct SubgroupClass {
    pub representative: Subgroup,
    pub normalizer_order: u64,
}

impl SubgroupClass {
    /// Number of conjugates, `|GL_2| / |N(H)|`.
    pub fn class_size(&self) -> u64 {
        (gl2_order(self.representative.modulus()) / self.normalizer_order as u128) as u64
    }
}

/// Conjugacy classes found by [`enumerate_subgroups`], in discovery order.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub p: PrimeModulus,
    pub mode: EnumerationMode,
    pub classes: Vec<SubgroupClass>,
}

impl Enumeration {
    /// Total number of subgroups (sum of class sizes).
    pub fn subgroup_count(&self) -> u64 {
        self.classes.iter().map(SubgroupClass::class_size).sum()
    }

    pub fn conjugacy_class_count(&self) -> u64 {
        self.classes.len() as u64
    }

    pub fn representatives(&self) -> impl Iterator<Item = &Subgroup> {
        self.classes.iter().map(|c| &c.representative)
    }

    /// The class containing a conjugate of `g`.
    pub fn find_conjugate(&self, g: &Subgroup) -> Option<&SubgroupClass> {
        let elements: Vec<Mat2> = Mat2::all(self.p).collect();
        let key = class_key(g);
        self.classes.iter().find(|c| {
            let r = &c.representative;
            r.order() == g.order()
                && class_key(r) == key
                && elements.par_iter().any(|x| g.conjugates_to(x, r))
        })
    }
}

type ClassKey = (u64, Vec<(u32, u32, bool, u32)>);

/// Conjugation invariant: order and the multiset of `(trace, det, scalar?)`.
fn class_key(g: &Subgroup) -> ClassKey {
    let mut hist: BTreeMap<(u32, u32, bool), u32> = BTreeMap::new();
    for x in g.elements() {
        *hist
            .entry((x.trace().value(), x.det().value(), x.is_scalar()))
            .or_default() += 1;
    }
    (
        g.order(),
        hist.into_iter()
            .map(|((t, d, s), n)| (t, d, s, n))
            .collect(),
    )
}

/// The ambient group with its cyclic subgroups indexed.
struct Ambient {
    p: PrimeModulus,
    elements: Vec<Mat2>,
    /// Code to position in `elements`.
    position: Vec<u32>,
    /// Position to the id of the cyclic subgroup the element generates.
    cyclic_of: Vec<u32>,
    /// One generator per cyclic subgroup.
    cyclic_gens: Vec<Mat2>,
    /// Cyclic subgroup id to its conjugacy class (smallest id in the class).
    cyclic_class: Vec<usize>,
}

impl Ambient {
    fn new(p: PrimeModulus) -> Self {
        let q = p.as_u64() as usize;
        let elements: Vec<Mat2> = Mat2::all(p).collect();
        let mut position = vec![u32::MAX; q * q * q * q];
        for (i, x) in elements.iter().enumerate() {
            position[x.code() as usize] = i as u32;
        }
        let mut cyclic_of = vec![u32::MAX; elements.len()];
        let mut cyclic_gens = Vec::new();
        for (i, x) in elements.iter().enumerate() {
            if cyclic_of[i] != u32::MAX {
                continue;
            }
            let id = cyclic_gens.len() as u32;
            cyclic_gens.push(*x);
            let n = x.element_order();
            let mut y = *x;
            for k in 1..=n {
                if k.gcd(&n) == 1 {
                    cyclic_of[position[y.code() as usize] as usize] = id;
                }
                y = y.mul_mat(x);
            }
        }
        let mut ambient = Ambient {
            p,
            elements,
            position,
            cyclic_of,
            cyclic_gens,
            cyclic_class: Vec::new(),
        };
        let g = p.primitive_root().value() as i64;
        let gl2_gens: Vec<Mat2> = [[1, 1, 0, 1], [1, 0, 1, 1], [g, 0, 0, 1]]
            .iter()
            .map(|e| Mat2::new(p, *e).expect("invertible"))
            .collect();
        ambient.cyclic_class = ambient.orbit_roots(&gl2_gens);
        ambient
    }

    fn cyclic_id(&self, x: &Mat2) -> usize {
        self.cyclic_of[self.position[x.code() as usize] as usize] as usize
    }

    /// `|N(H)|` and a generating set of `N(H)`.
    fn normalizer(&self, h: &Subgroup) -> Result<(u64, Vec<Mat2>)> {
        let normalizing: Vec<Mat2> = self
            .elements
            .par_iter()
            .filter(|g| h.normalized_by(g))
            .copied()
            .collect();
        let mut n = Subgroup::trivial(self.p);
        let mut gens = Vec::new();
        for g in &normalizing {
            if !n.contains(g) {
                n = n.extend(g, default_cap(self.p))?;
                gens.push(*g);
            }
        }
        Ok((normalizing.len() as u64, gens))
    }

    /// Orbit root (smallest id) of every cyclic subgroup under conjugation by
    /// `<n_gens>`.
    fn orbit_roots(&self, n_gens: &[Mat2]) -> Vec<usize> {
        let count = self.cyclic_gens.len();
        let mut parent: Vec<usize> = (0..count).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        let inverses: Vec<Mat2> = n_gens.iter().map(Mat2::inverse).collect();
        for c in 0..count {
            let x = self.cyclic_gens[c];
            for (s, si) in n_gens.iter().zip(&inverses) {
                let d = self.cyclic_id(&s.mul_mat(&x).mul_mat(si));
                let (a, b) = (find(&mut parent, c), find(&mut parent, d));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..count).map(|c| find(&mut parent, c)).collect()
    }

    /// One generator per orbit of `<n_gens>` on the cyclic subgroups that are
    /// not contained in `h` and whose conjugacy class is at least `min_class`.
    fn orbit_representatives(&self, n_gens: &[Mat2], h: &Subgroup, min_class: usize) -> Vec<Mat2> {
        let roots = self.orbit_roots(n_gens);
        (0..roots.len())
            .filter(|&c| roots[c] == c && self.cyclic_class[c] >= min_class)
            .map(|c| self.cyclic_gens[c])
            .filter(|x| !h.contains(x))
            .collect()
    }

    fn are_conjugate(&self, a: &Subgroup, b: &Subgroup) -> bool {
        a.order() == b.order() && self.elements.par_iter().any(|g| a.conjugates_to(g, b))
    }
}

struct Lattice<'a> {
    ambient: &'a Ambient,
    classes: Vec<(Subgroup, Option<u64>)>,
    seen: HashMap<u128, usize>,
    buckets: HashMap<ClassKey, Vec<usize>>,
}

impl Lattice<'_> {
    /// Record `k`; returns its class index when it is new up to conjugacy.
    fn insert(&mut self, k: Subgroup) -> Option<usize> {
        let fp = k.fingerprint();
        if self.seen.contains_key(&fp) {
            return None;
        }
        let key = class_key(&k);
        let bucket = self.buckets.entry(key).or_default();
        for &j in bucket.iter() {
            if self.ambient.are_conjugate(&k, &self.classes[j].0) {
                self.seen.insert(fp, j);
                return None;
            }
        }
        let idx = self.classes.len();
        bucket.push(idx);
        self.seen.insert(fp, idx);
        self.classes.push((k, None));
        Some(idx)
    }
}

/// Representatives expanded per parallel batch.
const BATCH: usize = 32;

/// Enumerate the conjugacy classes of subgroups of `GL_2(F_p)`.
pub fn enumerate_subgroups(p: PrimeModulus, mode: EnumerationMode) -> Result<Enumeration> {
    if !mode.supports(p.as_u64()) {
        return Err(Error::Resource(format!(
            "{mode} enumeration is not supported at p = {p}"
        )));
    }
    let ambient = Ambient::new(p);
    let cap = default_cap(p);
    let rounds = match mode {
        EnumerationMode::FullLattice => usize::MAX,
        EnumerationMode::GenPairs => 2,
    };
    let mut lattice = Lattice {
        ambient: &ambient,
        classes: Vec::new(),
        seen: HashMap::new(),
        buckets: HashMap::new(),
    };
    let mut frontier: Vec<usize> = lattice.insert(Subgroup::trivial(p)).into_iter().collect();
    let mut round = 0;
    while !frontier.is_empty() && round < rounds {
        let mut next = Vec::new();
        for batch in frontier.chunks(BATCH) {
            let expanded = batch
                .par_iter()
                .map(|&i| {
                    let h = &lattice.classes[i].0;
                    let (n_order, n_gens) = ambient.normalizer(h)?;
                    let mut out: Vec<Subgroup> = Vec::new();
                    let mut local: HashMap<u128, ()> = HashMap::new();
                    // pairs: <a, b> = <b, a>, so take b from a class no smaller
                    // than that of the cyclic representative <a>
                    let min_class = match (mode, h.generators()) {
                        (EnumerationMode::GenPairs, [a]) => {
                            ambient.cyclic_class[ambient.cyclic_id(a)]
                        }
                        _ => 0,
                    };
                    for c in ambient.orbit_representatives(&n_gens, h, min_class) {
                        let k = h.extend(&c, cap)?;
                        if local.insert(k.fingerprint(), ()).is_none() {
                            out.push(k);
                        }
                    }
                    Ok((i, n_order, out))
                })
                .collect::<Result<Vec<_>>>()?;
            for (i, n_order, found) in expanded {
                lattice.classes[i].1 = Some(n_order);
                for k in found {
                    next.extend(lattice.insert(k));
                }
            }
        }
        frontier = next;
        round += 1;
    }
    let missing: Vec<usize> = (0..lattice.classes.len())
        .filter(|&i| lattice.classes[i].1.is_none())
        .collect();
    let orders = missing
        .par_iter()
        .map(|&i| ambient.normalizer(&lattice.classes[i].0).map(|(n, _)| n))
        .collect::<Result<Vec<_>>>()?;
    for (i, n) in missing.into_iter().zip(orders) {
        lattice.classes[i].1 = Some(n);
    }
    Ok(Enumeration {
        p,
        mode,
        classes: lattice
            .classes
            .into_iter()
            .map(|(representative, n)| SubgroupClass {
                representative,
                normalizer_order: n.expect("every class has a normalizer order"),
            })
            .collect(),
    })
}

/// A subgroup violating a checked property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    /// Generators as `"a b c d"` strings.
    pub generators: Vec<String>,
    pub property: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationResult {
    pub p: PrimeModulus,
    pub mode: EnumerationMode,
    pub subgroup_count: u64,
    pub conjugacy_class_count: u64,
    pub failures: Vec<Failure>,
}

/// Which group of properties to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckSet {
    Classification,
    Homotheties,
    All,
}

/// Independent element-wise recomputation of the taxonomy data.
pub struct Checker {
    p: PrimeModulus,
    lines: Vec<ProjLine>,
    /// Non-split Cartans and their normalizers as code bitsets.
    nonsplit: Vec<(Vec<u64>, Vec<u64>)>,
}

fn bit_get(bits: &[u64], code: u64) -> bool {
    bits[(code >> 6) as usize] & (1 << (code & 63)) != 0
}

fn bit_set(bits: &mut [u64], code: u64) {
    bits[(code >> 6) as usize] |= 1 << (code & 63);
}

impl Checker {
    pub fn new(p: PrimeModulus) -> Self {
        let q = p.as_u64();
        let words = (q * q * q * q).div_ceil(64) as usize;
        let all: Vec<Mat2> = Mat2::all(p).collect();
        // every F_p[x]^x for x with irreducible characteristic polynomial
        let mut nonsplit = Vec::new();
        let mut covered = vec![0u64; words];
        for x in &all {
            let disc = x.discriminant().value() as u64;
            let irreducible = disc != 0 && pow_mod(disc, (q - 1) / 2, q) == q - 1;
            if !irreducible || bit_get(&covered, x.code()) {
                continue;
            }
            let mut cartan = vec![0u64; words];
            let [x0, x1, x2, x3] = x.entries().map(|v| v as u64);
            for a in 0..q {
                for b in 0..q {
                    if a == 0 && b == 0 {
                        continue;
                    }
                    let e = [(a + b * x0) % q, b * x1 % q, b * x2 % q, (a + b * x3) % q];
                    let code = ((e[0] * q + e[1]) * q + e[2]) * q + e[3];
                    bit_set(&mut cartan, code);
                    if b != 0 {
                        bit_set(&mut covered, code);
                    }
                }
            }
            // an element conjugating x to its Galois conjugate tr(x) - x
            let t = x.trace().value() as i64;
            let target = Mat2::new(
                p,
                [t - x0 as i64, -(x1 as i64), -(x2 as i64), t - x3 as i64],
            )
            .expect("conjugate of an invertible element");
            let sigma = all
                .iter()
                .find(|g| x.conjugate_by(g) == target)
                .expect("Galois conjugation is inner");
            let mut normalizer = cartan.clone();
            for y in all.iter().filter(|y| bit_get(&cartan, y.code())) {
                bit_set(&mut normalizer, y.mul_mat(sigma).code());
            }
            nonsplit.push((cartan, normalizer));
        }
        Checker {
            p,
            lines: ProjLine::all(p),
            nonsplit,
        }
    }

    /// Number of non-split Cartan subgroups found.
    pub fn nonsplit_cartan_count(&self) -> usize {
        self.nonsplit.len()
    }

    /// Names of the properties `g` violates.
    pub fn check(&self, g: &Subgroup, set: CheckSet) -> Vec<&'static str> {
        let report = classify(g);
        let facts = self.facts(g);
        let mut bad = Vec::new();
        if matches!(set, CheckSet::Classification | CheckSet::All) {
            self.check_classification(g, &report, &facts, &mut bad);
        }
        if matches!(set, CheckSet::Homotheties | CheckSet::All) {
            self.check_homotheties(g, &report, &facts, &mut bad);
        }
        bad
    }

    fn facts(&self, g: &Subgroup) -> Facts {
        let p = self.p;
        let n = self.lines.len();
        let mut fixed = vec![true; n];
        let mut pairs: Vec<(usize, usize, bool)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j, false)))
            .collect();
        for x in g.elements() {
            if pairs.is_empty() && !fixed.iter().any(|&f| f) {
                break;
            }
            let image: Vec<usize> = self.lines.iter().map(|&l| x.apply(l).index(p)).collect();
            for (i, f) in fixed.iter_mut().enumerate() {
                *f &= image[i] == i;
            }
            pairs.retain_mut(|(i, j, swapped)| {
                if image[*i] == *j && image[*j] == *i {
                    *swapped = true;
                    true
                } else {
                    image[*i] == *i && image[*j] == *j
                }
            });
        }
        let fixed_count = fixed.iter().filter(|&&f| f).count();
        let in_cartan = self
            .nonsplit
            .iter()
            .any(|(c, _)| g.elements().iter().all(|x| bit_get(c, x.code())));
        let in_normalizer = self
            .nonsplit
            .iter()
            .any(|(_, nz)| g.elements().iter().all(|x| bit_get(nz, x.code())));
        let mut det_seen = vec![false; p.get() as usize];
        for x in g.elements() {
            det_seen[x.det().value() as usize] = true;
        }
        let scalars: Vec<u32> = (1..p.get())
            .filter(|&l| g.contains(&Mat2::scalar(p.scalar(l as i64)).expect("nonzero")))
            .collect();
        let transvections = [[1, 1, 0, 1], [1, 0, 1, 1]]
            .iter()
            .all(|e| g.contains(&Mat2::new(p, *e).expect("unipotent")));
        Facts {
            fixed_lines: fixed_count,
            stable_pairs: !pairs.is_empty(),
            swapped_pairs: pairs.iter().any(|&(_, _, s)| s),
            in_nonsplit_cartan: in_cartan,
            in_nonsplit_normalizer: in_normalizer,
            dets: (0..p.get()).filter(|&d| det_seen[d as usize]).collect(),
            scalars,
            contains_sl2: transvections,
        }
    }

    fn check_classification(
        &self,
        g: &Subgroup,
        r: &ClassificationReport,
        f: &Facts,
        bad: &mut Vec<&'static str>,
    ) {
        let q = self.p.as_u64();
        let mut flag = |ok: bool, name: &'static str| {
            if !ok {
                bad.push(name);
            }
        };
        flag(r.satisfies_taxonomy(), "taxonomy");
        flag(
            r.order == g.order() && r.p_divides_order == g.order().is_multiple_of(q),
            "order",
        );
        flag(r.contains_sl2 == f.contains_sl2, "contains_sl2");
        flag(r.in_borel == (f.fixed_lines >= 1), "in_borel");
        flag(r.in_split_cartan == (f.fixed_lines >= 2), "in_split_cartan");
        flag(
            r.in_split_normalizer == (f.fixed_lines >= 2 || f.stable_pairs),
            "in_split_normalizer",
        );
        flag(
            r.in_nonsplit_cartan == f.in_nonsplit_cartan,
            "in_nonsplit_cartan",
        );
        flag(
            r.in_nonsplit_normalizer == f.in_nonsplit_normalizer,
            "in_nonsplit_normalizer",
        );
        flag(r.irreducible == (f.fixed_lines == 0), "irreducible");
        flag(r.scalar_order == f.scalars.len() as u64, "scalar_order");
        flag(
            r.scalar_order * r.homothety_index == q - 1,
            "homothety_index",
        );
        flag(
            r.det_image_order == f.dets.len() as u64 && (q - 1).is_multiple_of(r.det_image_order),
            "det_image_order",
        );
        flag(r.any_flag(), "any_flag");
        flag(
            !r.in_split_cartan || r.in_split_normalizer,
            "split_cartan_in_normalizer",
        );
        flag(
            !r.in_nonsplit_cartan || r.in_nonsplit_normalizer,
            "nonsplit_cartan_in_normalizer",
        );
        flag(!r.in_split_cartan || r.in_borel, "split_cartan_in_borel");
        if r.exceptional != Exceptional::None {
            let expected = match r.exceptional {
                Exceptional::A4 => 12,
                Exceptional::S4 => 24,
                _ => 60,
            };
            let small_orders = g.elements().iter().all(|x| {
                let mut y = *x;
                (1..=5).any(|_| {
                    let s = y.is_scalar();
                    y = y.mul_mat(x);
                    s
                })
            });
            flag(
                small_orders && g.order() / f.scalars.len() as u64 == expected,
                "exceptional_element_orders",
            );
        }
    }

    fn check_homotheties(
        &self,
        g: &Subgroup,
        r: &ClassificationReport,
        f: &Facts,
        bad: &mut Vec<&'static str>,
    ) {
        let q = self.p.as_u64();
        let delta = f.dets.len() as u64;
        let scalar_order = f.scalars.len() as u64;
        let half = delta / delta.gcd(&2);
        if f.contains_sl2 {
            if !matches!(verify_sl2_det_pullback(g), Ok(true)) {
                bad.push("sl2_det_pullback");
            }
            if !scalar_order.is_multiple_of(2 * delta.gcd(&((q - 1) / 2))) {
                bad.push("sl2_homotheties");
            }
        }
        if r.in_split_normalizer && !r.in_split_cartan && !scalar_order.is_multiple_of(half) {
            bad.push("split_normalizer_homotheties");
        }
        // stable pair not fixed pointwise: outside that Cartan, inside its normalizer
        if f.swapped_pairs && !scalar_order.is_multiple_of(half) {
            bad.push("split_normalizer_outside_cartan_homotheties");
        }
        if f.in_nonsplit_normalizer && !scalar_order.is_multiple_of(half) {
            bad.push("nonsplit_normalizer_homotheties");
        }
        if f.swapped_pairs || f.in_nonsplit_normalizer {
            let found = f.dets.iter().any(|&gamma| {
                let order = self.p.scalar(gamma as i64).mult_order().expect("unit");
                let minus = self.p.neg(gamma);
                order == delta && (f.scalars.contains(&gamma) || f.scalars.contains(&minus))
            });
            if !found {
                bad.push("signed_determinant_homothety");
            }
        }
    }
}

struct Facts {
    fixed_lines: usize,
    stable_pairs: bool,
    swapped_pairs: bool,
    in_nonsplit_cartan: bool,
    in_nonsplit_normalizer: bool,
    dets: Vec<u32>,
    scalars: Vec<u32>,
    contains_sl2: bool,
}

/// Check every class representative of `e`.
pub fn verify_enumeration(e: &Enumeration, set: CheckSet) -> EnumerationResult {
    let checker = Checker::new(e.p);
    let failures: Vec<Failure> = e
        .classes
        .par_iter()
        .flat_map_iter(|c| {
            let g = &c.representative;
            let generators: Vec<String> = g.generators().iter().map(|m| m.to_string()).collect();
            checker
                .check(g, set)
                .into_iter()
                .map(move |property| Failure {
                    generators: generators.clone(),
                    property: property.to_string(),
                })
                .collect::<Vec<_>>()
        })
        .collect();
    EnumerationResult {
        p: e.p,
        mode: e.mode,
        subgroup_count: e.subgroup_count(),
        conjugacy_class_count: e.conjugacy_class_count(),
        failures,
    }
}

/// Taxonomy and flag checks with the default mode for `p`.
pub fn verify_classification(p: PrimeModulus) -> Result<EnumerationResult> {
    let e = enumerate_subgroups(p, EnumerationMode::default_for(p.as_u64()))?;
    Ok(verify_enumeration(&e, CheckSet::Classification))
}

/// Homothety-order checks with the default mode for `p`.
pub fn verify_homothety_props(p: PrimeModulus) -> Result<EnumerationResult> {
    let e = enumerate_subgroups(p, EnumerationMode::default_for(p.as_u64()))?;
    Ok(verify_enumeration(&e, CheckSet::Homotheties))
}

/// Both groups of checks over one enumeration.
pub fn verify(p: PrimeModulus, mode: EnumerationMode) -> Result<EnumerationResult> {
    let e = enumerate_subgroups(p, mode)?;
    Ok(verify_enumeration(&e, CheckSet::All))
}
