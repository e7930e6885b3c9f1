//! Admissible pairs and σ-admissible subsets of a window `(0,k)`, and the
//! four counters `A_k`, `A′_k`, `A^σ_k`, `A′^σ_k`.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::bits::{self, open_mask, reflect, upto_mask, Ones, Submasks, MAX_WIDTH};
use crate::error::{Error, Result};
use crate::limits::{self, Limits};
use crate::par::{self, Strategy};

/// A subset of the open window `(0,k)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SubsetMask {
    window: u32,
    bits: u64,
}

impl SubsetMask {
    pub fn new(window: u32, bits: u64) -> Result<Self> {
        if window == 0 || window > MAX_WIDTH {
            return Err(Error::InvalidMask(format!(
                "window {window} outside 1..={MAX_WIDTH}"
            )));
        }
        if bits & !open_mask(window) != 0 {
            return Err(Error::InvalidMask(format!(
                "bits {bits:#x} outside (0,{window})"
            )));
        }
        Ok(SubsetMask { window, bits })
    }

    #[inline]
    pub(crate) fn from_raw(window: u32, bits: u64) -> Self {
        debug_assert_eq!(bits & !open_mask(window), 0);
        SubsetMask { window, bits }
    }

    pub fn empty(window: u32) -> Result<Self> {
        Self::new(window, 0)
    }

    pub fn from_elements<I: IntoIterator<Item = u32>>(window: u32, elems: I) -> Result<Self> {
        let bits = bits::mask_from_elements(elems)
            .ok_or_else(|| Error::InvalidMask("element out of range".into()))?;
        Self::new(window, bits)
    }

    #[inline]
    pub fn window(&self) -> u32 {
        self.window
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn elements(&self) -> Ones {
        Ones(self.bits)
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        x < 64 && self.bits >> x & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> u32 {
        self.bits.count_ones()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_subset_of(&self, other: &SubsetMask) -> bool {
        self.bits & !other.bits == 0
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k={};set={}",
            self.window,
            bits::join_elements(self.bits)
        )
    }
}

impl FromStr for SubsetMask {
    type Err = Error;

    /// Parses `k=<int>;set=<comma-separated elements>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (k_part, set_part) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected `k=..;set=..`, got {s:?}")))?;
        let k = k_part
            .trim()
            .strip_prefix("k=")
            .ok_or_else(|| Error::Parse(format!("missing `k=` in {s:?}")))?
            .trim()
            .parse::<u32>()
            .map_err(|e| Error::Parse(format!("bad window: {e}")))?;
        let elems = set_part
            .trim()
            .strip_prefix("set=")
            .ok_or_else(|| Error::Parse(format!("missing `set=` in {s:?}")))?;
        let elems = bits::parse_elements(elems).map_err(Error::Parse)?;
        SubsetMask::from_elements(k, elems).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// `(ad2)` on raw masks: every `x ∈ M` has `y ∈ L` with `x+y ≤ k`, `x+y ∉ M`.
#[inline]
pub(crate) fn ad2_raw(l: u64, m: u64, k: u32) -> bool {
    let outside = upto_mask(k) & !m;
    Ones(m).all(|x| (l << x) & outside != 0)
}

#[inline]
pub(crate) fn self_admissible_raw(l: u64, k: u32) -> bool {
    ad2_raw(l, l, k)
}

/// `(σ-ad1) ∧ (σ-ad2)` on a raw mask.
#[inline]
pub(crate) fn sigma_admissible_raw(m: u64, k: u32) -> bool {
    let open = open_mask(k);
    let r = reflect(m, k);
    if open & !m & !r != 0 {
        return false;
    }
    let star = open & !r;
    let outside = open & !m;
    Ones(m).all(|x| (star << x) & outside != 0)
}

/// Membership in `A^σ(k)′` for `M` with `M_− = ∅` and `M_+ ⊆ {k/2}`.
///
/// `(σ-ad2)` is read over `M* = M − M_+`: every `x ∈ M*` has `y ∈ M*` with
/// `x+y < k` and `x+y ∉ M*`. For odd `k` this is `(σ-ad2)` itself. For even
/// `k` it is the form under which `M ↦ ℕ_k ∪ M*` maps onto `G^σ(k)`.
#[inline]
pub(crate) fn sigma_prime_raw(m: u64, k: u32) -> bool {
    let open = open_mask(k);
    let r = reflect(m, k);
    if open & !m & !r != 0 || (m & r).count_ones() > 1 {
        return false;
    }
    let star = open & !r;
    let outside = open & !star;
    Ones(star).all(|x| (star << x) & outside != 0)
}

/// An ordered pair `(L, M)` satisfying `(ad1)` and `(ad2)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AdmissiblePair {
    l: SubsetMask,
    m: SubsetMask,
}

impl AdmissiblePair {
    pub fn new(l: SubsetMask, m: SubsetMask) -> Result<Self> {
        if is_admissible_pair(&l, &m)? {
            Ok(AdmissiblePair { l, m })
        } else {
            Err(Error::NotAdmissible)
        }
    }

    pub fn l(&self) -> &SubsetMask {
        &self.l
    }

    pub fn m(&self) -> &SubsetMask {
        &self.m
    }

    pub fn window(&self) -> u32 {
        self.l.window
    }
}

/// `(ad1) L ⊆ M` and `(ad2)`.
pub fn is_admissible_pair(l: &SubsetMask, m: &SubsetMask) -> Result<bool> {
    if l.window != m.window {
        return Err(Error::WindowMismatch(l.window, m.window));
    }
    Ok(l.is_subset_of(m) && ad2_raw(l.bits, m.bits, l.window))
}

/// `(L, L)` is admissible, i.e. `L ∈ A(k)′`.
pub fn is_self_admissible(l: &SubsetMask) -> bool {
    self_admissible_raw(l.bits, l.window)
}

/// `M_+`, `M_−` and `M*` of a subset of `(0,k)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SigmaDecomposition {
    pub m_plus: SubsetMask,
    pub m_minus: SubsetMask,
    pub m_star: SubsetMask,
}

pub fn sigma_decompose(m: &SubsetMask) -> SigmaDecomposition {
    let k = m.window;
    let open = open_mask(k);
    let r = reflect(m.bits, k);
    SigmaDecomposition {
        m_plus: SubsetMask::from_raw(k, m.bits & r),
        m_minus: SubsetMask::from_raw(k, open & !m.bits & !r),
        m_star: SubsetMask::from_raw(k, open & !r),
    }
}

pub fn is_sigma_admissible(m: &SubsetMask) -> bool {
    sigma_admissible_raw(m.bits, m.window)
}

/// The four counted families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Family {
    A,
    APrime,
    ASigma,
    ASigmaPrime,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::A,
        Family::APrime,
        Family::ASigma,
        Family::ASigmaPrime,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::A => "A",
            Family::APrime => "Aprime",
            Family::ASigma => "Asigma",
            Family::ASigmaPrime => "Asigmaprime",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

fn check_window(k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::Domain("window k must be positive".into()));
    }
    Ok(())
}

/// `A(k)′` sorted by popcount, then mask value.
pub(crate) struct APrimeList {
    k: u32,
    masks: Vec<u64>,
    /// `ends[p]` is the index one past the last mask with popcount `p`.
    ends: Vec<usize>,
    /// Membership bitmap indexed by `mask >> 1`.
    member: Vec<u64>,
}

impl APrimeList {
    fn build(k: u32, strategy: Strategy) -> Self {
        let space = 1u64 << (k - 1);
        let chunks = par::split(space, par::default_partitions());
        let mut masks: Vec<u64> = par::map_collect(&chunks, strategy, |r| {
            r.clone()
                .map(|i| i << 1)
                .filter(|&l| self_admissible_raw(l, k))
                .collect::<Vec<_>>()
        })
        .into_iter()
        .flatten()
        .collect();
        masks.sort_unstable_by_key(|&m| (m.count_ones(), m));
        let mut ends = vec![0usize; k as usize + 1];
        for &m in &masks {
            ends[m.count_ones() as usize] += 1;
        }
        for p in 1..ends.len() {
            ends[p] += ends[p - 1];
        }
        let mut member = vec![0u64; (space as usize).div_ceil(64)];
        for &m in &masks {
            let i = (m >> 1) as usize;
            member[i / 64] |= 1 << (i % 64);
        }
        APrimeList {
            k,
            masks,
            ends,
            member,
        }
    }

    #[inline]
    fn contains(&self, mask: u64) -> bool {
        let i = (mask >> 1) as usize;
        self.member[i / 64] >> (i % 64) & 1 == 1
    }

    /// Number of admissible `(L, M)` with `M = masks[i]`, `i ∈ range`.
    fn count_pairs(&self, range: Range<u64>) -> u64 {
        let k = self.k;
        let mut total = 0u64;
        for &m in &self.masks[range.start as usize..range.end as usize] {
            let p = m.count_ones();
            let scan_len = self.ends[p as usize];
            if p < 63 && (1u64 << p) <= scan_len as u64 {
                total += Submasks::of(m)
                    .filter(|&l| self.contains(l) && ad2_raw(l, m, k))
                    .count() as u64;
            } else {
                total += self.masks[..scan_len]
                    .iter()
                    .filter(|&&l| l & !m == 0 && ad2_raw(l, m, k))
                    .count() as u64;
            }
        }
        total
    }
}

/// A search space split into an index range.
trait Space: Sync {
    fn len(&self) -> u64;
    fn count(&self, range: Range<u64>) -> u64;
}

struct APrimeSpace {
    k: u32,
}

impl Space for APrimeSpace {
    fn len(&self) -> u64 {
        1 << (self.k - 1)
    }

    fn count(&self, range: Range<u64>) -> u64 {
        let k = self.k;
        range.filter(|&i| self_admissible_raw(i << 1, k)).count() as u64
    }
}

impl Space for APrimeList {
    fn len(&self) -> u64 {
        self.masks.len() as u64
    }

    fn count(&self, range: Range<u64>) -> u64 {
        self.count_pairs(range)
    }
}

/// σ-families: each doubleton `{j+1, k−j−1}`, `j < d`, meets `M`; `k/2 ∈ M`
/// when `k` is even.
#[derive(Clone, Copy)]
struct SigmaLayout {
    k: u32,
    d: u32,
    all: u64,
    mid: u64,
}

impl SigmaLayout {
    fn new(k: u32) -> Self {
        let d = (k - 1) / 2;
        SigmaLayout {
            k,
            d,
            all: (1u64 << d) - 1,
            mid: if k.is_multiple_of(2) { 1 << (k / 2) } else { 0 },
        }
    }

    /// Mask picking the low element on `low`, the high element on `high`.
    #[inline]
    fn mask(&self, low: u64, high: u64) -> u64 {
        (low << 1) | reflect(high << 1, self.k) | self.mid
    }
}

/// Index = set `H` of doubletons whose high element is present; the low
/// element is then forced outside `H` and free inside it (3 choices each).
struct ASigmaSpace(SigmaLayout);

impl Space for ASigmaSpace {
    fn len(&self) -> u64 {
        1 << self.0.d
    }

    fn count(&self, range: Range<u64>) -> u64 {
        let lay = self.0;
        let mut total = 0;
        for high in range {
            let forced_low = !high & lay.all;
            for extra in Submasks::of(high) {
                if sigma_admissible_raw(lay.mask(forced_low | extra, high), lay.k) {
                    total += 1;
                }
            }
        }
        total
    }
}

/// Index = which member of each doubleton is present (exactly one).
struct ASigmaPrimeSpace(SigmaLayout);

impl Space for ASigmaPrimeSpace {
    fn len(&self) -> u64 {
        1 << self.0.d
    }

    fn count(&self, range: Range<u64>) -> u64 {
        let lay = self.0;
        range
            .filter(|&low| {
                let m = lay.mask(low, !low & lay.all);
                sigma_prime_raw(m, lay.k)
            })
            .count() as u64
    }
}

fn run(space: &dyn Space, partitions: usize, strategy: Strategy) -> u64 {
    par::sum_ranges(space.len(), partitions, strategy, |r| space.count(r))
}

fn count_with(
    family: Family,
    k: u32,
    partitions: usize,
    strategy: Strategy,
    limits: &Limits,
) -> Result<u64> {
    check_window(k)?;
    let n = match family {
        Family::A => {
            limits::check("k (A)", k, limits.a_k.min(MAX_WIDTH))?;
            let list = APrimeList::build(k, strategy);
            run(&list, partitions, strategy)
        }
        Family::APrime => {
            limits::check("k (Aprime)", k, limits.a_prime_k.min(MAX_WIDTH))?;
            run(&APrimeSpace { k }, partitions, strategy)
        }
        Family::ASigma => {
            limits::check("k (Asigma)", k, limits.a_sigma_k.min(MAX_WIDTH))?;
            run(&ASigmaSpace(SigmaLayout::new(k)), partitions, strategy)
        }
        Family::ASigmaPrime => {
            limits::check("k (Asigmaprime)", k, limits.a_sigma_prime_k.min(MAX_WIDTH))?;
            run(&ASigmaPrimeSpace(SigmaLayout::new(k)), partitions, strategy)
        }
    };
    Ok(n)
}

/// Counts `family` at `k` over `partitions` disjoint prefix classes.
///
/// The result is identical for every partition count and strategy.
pub fn partitioned_count(
    family: Family,
    k: u32,
    partitions: usize,
    limits: &Limits,
) -> Result<BigUint> {
    partitioned_count_with(family, k, partitions, Strategy::Parallel, limits)
}

pub fn partitioned_count_with(
    family: Family,
    k: u32,
    partitions: usize,
    strategy: Strategy,
    limits: &Limits,
) -> Result<BigUint> {
    if partitions == 0 {
        return Err(Error::Domain("partitions must be >= 1".into()));
    }
    count_with(family, k, partitions, strategy, limits).map(BigUint::from)
}

/// Counts `family` at `k` with the default partitioning.
pub fn count(family: Family, k: u32, limits: &Limits) -> Result<BigUint> {
    partitioned_count(family, k, par::default_partitions(), limits)
}

/// `A′_k = |A(k)′|`.
pub fn count_a_prime(k: u32, limits: &Limits) -> Result<BigUint> {
    count(Family::APrime, k, limits)
}

/// `A_k = |A(k)|`, by scanning nested pairs of `A(k)′`.
///
/// Both `(L,L)` and `(M,M)` are admissible whenever `(L,M)` is, so only
/// nested pairs drawn from `A(k)′` need an `(ad2)` test.
pub fn count_a(k: u32, limits: &Limits) -> Result<BigUint> {
    count(Family::A, k, limits)
}

/// `A^σ_k`, iterating the `3^{⌊(k−1)/2⌋}` doubleton assignments.
pub fn count_a_sigma(k: u32, limits: &Limits) -> Result<BigUint> {
    count(Family::ASigma, k, limits)
}

/// `A′^σ_k`: `M` with `M_− = ∅`, `|M_+| ≤ 1`, and `(σ-ad2)` over `M*`.
///
/// Equals `|G^σ(k)|` for every `k`, so `A′^σ_{2j} = A′^σ_{2j−1}`.
pub fn count_a_sigma_prime(k: u32, limits: &Limits) -> Result<BigUint> {
    count(Family::ASigmaPrime, k, limits)
}

/// The members of `A(k)′`, ascending.
pub fn a_prime_masks(k: u32, limits: &Limits) -> Result<Vec<SubsetMask>> {
    check_window(k)?;
    limits::check("k (Aprime)", k, limits.a_prime_k.min(MAX_WIDTH))?;
    Ok((0..1u64 << (k - 1))
        .map(|i| i << 1)
        .filter(|&l| self_admissible_raw(l, k))
        .map(|l| SubsetMask::from_raw(k, l))
        .collect())
}

/// All admissible pairs of `(0,k)`.
pub fn admissible_pairs(k: u32, limits: &Limits) -> Result<Vec<AdmissiblePair>> {
    check_window(k)?;
    limits::check("k (A)", k, limits.a_k.min(MAX_WIDTH))?;
    let list = APrimeList::build(k, Strategy::Sequential);
    let mut out = Vec::new();
    for &m in &list.masks {
        for l in Submasks::of(m) {
            if list.contains(l) && ad2_raw(l, m, k) {
                out.push(AdmissiblePair {
                    l: SubsetMask::from_raw(k, l),
                    m: SubsetMask::from_raw(k, m),
                });
            }
        }
    }
    out.sort_by_key(|p| (p.m.bits, p.l.bits));
    Ok(out)
}

/// The members of `A^σ(k)`, ascending.
pub fn a_sigma_masks(k: u32, limits: &Limits) -> Result<Vec<SubsetMask>> {
    check_window(k)?;
    limits::check("k (Asigma)", k, limits.a_sigma_k.min(MAX_WIDTH))?;
    let lay = SigmaLayout::new(k);
    let mut out = Vec::new();
    for high in 0..1u64 << lay.d {
        for extra in Submasks::of(high) {
            let m = lay.mask((!high & lay.all) | extra, high);
            if sigma_admissible_raw(m, k) {
                out.push(SubsetMask::from_raw(k, m));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The members of `A^σ(k)′`, ascending.
pub fn a_sigma_prime_masks(k: u32, limits: &Limits) -> Result<Vec<SubsetMask>> {
    check_window(k)?;
    limits::check("k (Asigmaprime)", k, limits.a_sigma_prime_k.min(MAX_WIDTH))?;
    let lay = SigmaLayout::new(k);
    let mut out: Vec<SubsetMask> = (0..1u64 << lay.d)
        .map(|low| lay.mask(low, !low & lay.all))
        .filter(|&m| sigma_prime_raw(m, k))
        .map(|m| SubsetMask::from_raw(k, m))
        .collect();
    out.sort();
    Ok(out)
}

/// Whether `m ∈ A^σ(k)′`; see [`count_a_sigma_prime`].
pub fn is_sigma_prime(m: &SubsetMask) -> bool {
    sigma_prime_raw(m.bits(), m.window())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mask(k: u32, e: &[u32]) -> SubsetMask {
        SubsetMask::from_elements(k, e.iter().copied()).unwrap()
    }

    /// Direct definition of admissibility, no bit tricks.
    fn naive_admissible(l: &[u32], m: &[u32], k: u32) -> bool {
        l.iter().all(|x| m.contains(x))
            && m.iter()
                .all(|&x| l.iter().any(|&y| x + y <= k && !m.contains(&(x + y))))
    }

    fn elems(bits: u64) -> Vec<u32> {
        Ones(bits).collect()
    }

    #[test]
    fn parse_display() {
        let m: SubsetMask = "k=5;set=1,3".parse().unwrap();
        assert_eq!(m, mask(5, &[1, 3]));
        assert_eq!(m.to_string(), "k=5;set=1,3");
        assert_eq!("k=1;set=".parse::<SubsetMask>().unwrap().bits(), 0);
        assert!("k=3;set=3".parse::<SubsetMask>().is_err());
        assert!("k=0;set=".parse::<SubsetMask>().is_err());
    }

    #[test]
    fn admissible_examples() {
        let e = SubsetMask::empty(2).unwrap();
        let one = mask(2, &[1]);
        assert!(is_admissible_pair(&e, &e).unwrap());
        assert!(!is_admissible_pair(&one, &e).unwrap());
        assert!(!is_admissible_pair(&e, &one).unwrap());
        assert!(!is_admissible_pair(&mask(3, &[1]), &mask(3, &[1, 2])).unwrap());
        assert!(is_admissible_pair(&mask(3, &[1, 2]), &mask(3, &[1, 2])).unwrap());
        assert_eq!(
            is_admissible_pair(&mask(3, &[]), &mask(4, &[])),
            Err(Error::WindowMismatch(3, 4))
        );
        assert_eq!(AdmissiblePair::new(one, e), Err(Error::NotAdmissible));
    }

    #[test]
    fn self_admissible_examples() {
        assert!(is_self_admissible(&mask(3, &[])));
        assert!(!is_self_admissible(&mask(3, &[2])));
        assert!(is_self_admissible(&mask(3, &[1, 2])));
    }

    #[test]
    fn sigma_decompose_examples() {
        let d = sigma_decompose(&mask(4, &[1, 3]));
        assert_eq!(d.m_plus, mask(4, &[1, 3]));
        assert_eq!(d.m_minus, mask(4, &[2]));
        assert_eq!(d.m_star, mask(4, &[2]));
        let d = sigma_decompose(&mask(3, &[1]));
        assert_eq!(d.m_plus, mask(3, &[]));
        assert_eq!(d.m_minus, mask(3, &[]));
        assert_eq!(d.m_star, mask(3, &[1]));
        assert_eq!(sigma_decompose(&mask(2, &[])).m_minus, mask(2, &[1]));
    }

    #[test]
    fn sigma_decompose_identity() {
        for k in 1..=9 {
            for bits in Submasks::of(open_mask(k)) {
                let m = SubsetMask::from_raw(k, bits);
                let d = sigma_decompose(&m);
                assert!(d.m_plus.is_subset_of(&m));
                assert_eq!(d.m_minus.bits & bits, 0);
                assert_eq!(d.m_star.bits, (bits & !d.m_plus.bits) | d.m_minus.bits);
            }
        }
    }

    #[test]
    fn sigma_admissible_examples() {
        assert!(is_sigma_admissible(&mask(3, &[1])));
        assert!(!is_sigma_admissible(&mask(3, &[2])));
        assert!(!is_sigma_admissible(&mask(2, &[1])));
        assert!(is_sigma_admissible(&mask(1, &[])));
    }

    #[test]
    fn table_values() {
        let lim = Limits::default();
        let a: Vec<u64> = (1..=10)
            .map(|k| count_with(Family::A, k, 3, Strategy::Sequential, &lim).unwrap())
            .collect();
        assert_eq!(a, vec![1, 2, 3, 8, 18, 50, 135, 385, 1065, 3053]);
        let ap: Vec<u64> = (1..=10)
            .map(|k| count_with(Family::APrime, k, 3, Strategy::Sequential, &lim).unwrap())
            .collect();
        assert_eq!(ap, vec![1, 2, 3, 6, 10, 20, 37, 74, 140, 280]);
        let asig: Vec<u64> = (1..=12)
            .map(|k| count_with(Family::ASigma, k, 3, Strategy::Sequential, &lim).unwrap())
            .collect();
        assert_eq!(asig, vec![1, 0, 1, 0, 2, 0, 3, 1, 7, 3, 17, 7]);
        assert_eq!(count_a_sigma_prime(1, &lim).unwrap(), BigUint::from(1u32));
        assert_eq!(count_a_sigma_prime(9, &lim).unwrap(), BigUint::from(6u32));
    }

    #[test]
    fn naive_pair_scan_agrees() {
        let lim = Limits::default();
        for k in 1..=9u32 {
            let mut naive = 0u64;
            for m in Submasks::of(open_mask(k)) {
                for l in Submasks::of(open_mask(k)) {
                    if naive_admissible(&elems(l), &elems(m), k) {
                        naive += 1;
                    }
                }
            }
            assert_eq!(count_a(k, &lim).unwrap(), BigUint::from(naive), "k={k}");
            assert_eq!(admissible_pairs(k, &lim).unwrap().len() as u64, naive);
        }
    }

    #[test]
    fn naive_sigma_scan_agrees() {
        let lim = Limits::default();
        for k in 1..=14u32 {
            let all: Vec<u64> = Submasks::of(open_mask(k)).collect();
            let sig: Vec<u64> = all
                .iter()
                .copied()
                .filter(|&m| is_sigma_admissible(&SubsetMask::from_raw(k, m)))
                .collect();
            assert_eq!(
                count_a_sigma(k, &lim).unwrap(),
                BigUint::from(sig.len()),
                "k={k}"
            );
            let prime = if k % 2 == 1 {
                sig.iter()
                    .filter(|&&m| sigma_decompose(&SubsetMask::from_raw(k, m)).m_plus.len() <= 1)
                    .count()
            } else {
                crate::sets::enumerate_sigma_sets(k, &lim)
                    .unwrap()
                    .filter(|s| s.has_no_small_atoms())
                    .count()
            };
            assert_eq!(
                count_a_sigma_prime(k, &lim).unwrap(),
                BigUint::from(prime),
                "k={k}"
            );
            assert_eq!(a_sigma_masks(k, &lim).unwrap().len(), sig.len());
            assert_eq!(a_sigma_prime_masks(k, &lim).unwrap().len(), prime);
        }
    }

    #[test]
    fn partitioned_examples() {
        let lim = Limits::default();
        assert_eq!(
            partitioned_count(Family::APrime, 7, 4, &lim).unwrap(),
            BigUint::from(37u32)
        );
        assert_eq!(
            partitioned_count(Family::A, 2, 8, &lim).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            partitioned_count(Family::ASigma, 5, 1, &lim).unwrap(),
            BigUint::from(2u32)
        );
        assert!(partitioned_count(Family::A, 2, 0, &lim).is_err());
    }

    #[test]
    fn limits_enforced() {
        let lim = Limits::default();
        assert!(matches!(
            count_a(17, &lim),
            Err(Error::LimitExceeded { .. })
        ));
        assert!(matches!(
            count_a_prime(29, &lim),
            Err(Error::LimitExceeded { .. })
        ));
        assert!(matches!(
            count_a_sigma(34, &lim),
            Err(Error::LimitExceeded { .. })
        ));
        assert!(count_a(0, &lim).is_err());
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("B".parse::<Family>().is_err());
    }
}
