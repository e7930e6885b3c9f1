//! Numerical sets, their atom monoids, duals and symmetry classes.
//!
//! A numerical set with Frobenius number `g` is `{0} ∪ I ∪ (g,∞)` for some
//! `I ⊆ (0,g)`. It is stored as `g` plus the little-endian mask of `I`, so
//! `S(g)` is enumerated by a plain counter.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bits::{self, closed_mask, open_mask, reflect, Ones, Submasks, MAX_WIDTH};
use crate::error::{Error, Result};
use crate::limits::{self, Limits};

/// A cofinite subset of ℕ containing 0, with Frobenius number `g ≥ 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct NumericalSet {
    frobenius: u32,
    interior: u64,
}

impl NumericalSet {
    /// Builds `{0} ∪ interior ∪ (g,∞)`. Bits outside `(0,g)` are rejected.
    pub fn new(frobenius: u32, interior: u64) -> Result<Self> {
        if frobenius == 0 || frobenius > MAX_WIDTH {
            return Err(Error::InvalidSet(format!(
                "Frobenius number {frobenius} outside 1..={MAX_WIDTH}"
            )));
        }
        if interior & !open_mask(frobenius) != 0 {
            return Err(Error::InvalidSet(format!(
                "interior mask {interior:#x} has bits outside (0,{frobenius})"
            )));
        }
        Ok(NumericalSet {
            frobenius,
            interior,
        })
    }

    /// Same as [`NumericalSet::new`] for callers that already masked the bits.
    #[inline]
    pub(crate) fn from_raw(frobenius: u32, interior: u64) -> Self {
        debug_assert!((1..=MAX_WIDTH).contains(&frobenius));
        debug_assert_eq!(interior & !open_mask(frobenius), 0);
        NumericalSet {
            frobenius,
            interior,
        }
    }

    pub fn from_elements<I: IntoIterator<Item = u32>>(frobenius: u32, elems: I) -> Result<Self> {
        let bits = bits::mask_from_elements(elems)
            .ok_or_else(|| Error::InvalidSet("element out of range".into()))?;
        Self::new(frobenius, bits)
    }

    /// `ℕ_g = {0} ∪ (g,∞)`.
    pub fn natural(frobenius: u32) -> Result<Self> {
        Self::new(frobenius, 0)
    }

    #[inline]
    pub fn frobenius(&self) -> u32 {
        self.frobenius
    }

    /// Mask of `S ∩ (0,g)`.
    #[inline]
    pub fn interior(&self) -> u64 {
        self.interior
    }

    /// Elements of `S ∩ (0,g)`, ascending.
    pub fn interior_elements(&self) -> Ones {
        Ones(self.interior)
    }

    /// Mask of `S ∩ [0,g]`.
    #[inline]
    fn low_part(&self) -> u64 {
        self.interior | 1
    }

    pub fn contains(&self, n: i64) -> bool {
        let g = self.frobenius as i64;
        n == 0 || n > g || (0 < n && n < g && self.interior >> n & 1 == 1)
    }

    /// `n ∈ A(S)`, i.e. `n + S ⊆ S`.
    ///
    /// Only `s ∈ S ∩ [0,g]` has to be checked: larger sums are members.
    pub fn is_atom(&self, n: i64) -> bool {
        let g = self.frobenius as i64;
        if n == 0 || n > g {
            return true;
        }
        if n < 0 || n == g {
            return false;
        }
        self.is_atom_in_window(n as u32)
    }

    #[inline]
    fn is_atom_in_window(&self, n: u32) -> bool {
        let full = self.low_part();
        (full << n) & closed_mask(self.frobenius) & !full == 0
    }

    /// The atom monoid `A(S)`.
    pub fn atom_monoid(&self) -> NumericalMonoid {
        let atoms = Ones(self.interior)
            .filter(|&n| self.is_atom_in_window(n))
            .fold(0u64, |acc, n| acc | 1 << n);
        NumericalMonoid(NumericalSet::from_raw(self.frobenius, atoms))
    }

    /// Atoms strictly between 0 and `g`, ascending.
    pub fn small_atoms(&self) -> Vec<u32> {
        self.atom_monoid().0.interior_elements().collect()
    }

    /// Largest small atom, if any.
    pub fn largest_small_atom(&self) -> Option<u32> {
        let mut rest = self.interior;
        while rest != 0 {
            let top = 63 - rest.leading_zeros();
            if self.is_atom_in_window(top) {
                return Some(top);
            }
            rest &= !(1 << top);
        }
        None
    }

    /// `S ∈ G(g)`: no atom in `(0,g)`.
    #[inline]
    pub fn has_no_small_atoms(&self) -> bool {
        Ones(self.interior).all(|n| !self.is_atom_in_window(n))
    }

    /// `S* = {n : g − n ∉ S}`.
    pub fn dual(&self) -> NumericalSet {
        let g = self.frobenius;
        NumericalSet::from_raw(g, open_mask(g) & !reflect(self.interior, g))
    }

    /// Closed under addition (checked on `S ∩ [0,g]`).
    pub fn is_monoid(&self) -> bool {
        Ones(self.interior).all(|n| self.is_atom_in_window(n))
    }

    pub fn classify_symmetry(&self) -> SymmetryClass {
        let g = self.frobenius;
        let dual = self.dual();
        let symmetric = dual == *self;
        let pseudosymmetric = g.is_multiple_of(2)
            && self.interior >> (g / 2) & 1 == 0
            && dual.interior == self.interior | 1 << (g / 2);
        // x = 0 is fine since g ∉ S; x = g is not in S.
        let negative_semisymmetric = self.interior & reflect(self.interior, g) == 0;
        SymmetryClass {
            symmetric,
            pseudosymmetric,
            negative_semisymmetric,
        }
    }

    /// Maximal negative semisymmetric: symmetric for odd `g`, pseudosymmetric for even `g`.
    pub fn is_sigma(&self) -> bool {
        let c = self.classify_symmetry();
        if self.frobenius % 2 == 1 {
            c.symmetric
        } else {
            c.pseudosymmetric
        }
    }

    /// `|S∩[0,g)|·|S*∩[0,g)| / |S∩S*∩[0,g)|²`, valid on `G(g)` only.
    pub fn type_of_noatom_set(&self) -> Result<BigRational> {
        if !self.has_no_small_atoms() {
            return Err(Error::NotInG);
        }
        let s = self.low_part();
        let d = self.dual().low_part();
        let num = BigInt::from(s.count_ones()) * BigInt::from(d.count_ones());
        let common = BigInt::from((s & d).count_ones());
        Ok(BigRational::new(num, &common * &common))
    }
}

impl fmt::Display for NumericalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "g={};in={}",
            self.frobenius,
            bits::join_elements(self.interior)
        )
    }
}

impl FromStr for NumericalSet {
    type Err = Error;

    /// Parses `g=<int>;in=<comma-separated interior elements>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (g_part, in_part) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected `g=..;in=..`, got {s:?}")))?;
        let g = g_part
            .trim()
            .strip_prefix("g=")
            .ok_or_else(|| Error::Parse(format!("missing `g=` in {s:?}")))?
            .trim()
            .parse::<u32>()
            .map_err(|e| Error::Parse(format!("bad Frobenius number: {e}")))?;
        let elems = in_part
            .trim()
            .strip_prefix("in=")
            .ok_or_else(|| Error::Parse(format!("missing `in=` in {s:?}")))?;
        let elems = bits::parse_elements(elems).map_err(Error::Parse)?;
        if elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse(
                "interior elements must be strictly ascending".into(),
            ));
        }
        if let Some(&bad) = elems.iter().find(|&&e| e == 0 || e >= g) {
            return Err(Error::Parse(format!("element {bad} not in (0,{g})")));
        }
        NumericalSet::from_elements(g, elems).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Symmetry flags of a numerical set.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct SymmetryClass {
    pub symmetric: bool,
    pub pseudosymmetric: bool,
    pub negative_semisymmetric: bool,
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = if self.symmetric {
            "symmetric"
        } else if self.pseudosymmetric {
            "pseudosymmetric"
        } else if self.negative_semisymmetric {
            "negative-semisymmetric"
        } else {
            "none"
        };
        f.write_str(name)
    }
}

/// A numerical set closed under addition.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct NumericalMonoid(NumericalSet);

impl TryFrom<NumericalSet> for NumericalMonoid {
    type Error = Error;

    fn try_from(set: NumericalSet) -> Result<Self> {
        if set.is_monoid() {
            Ok(NumericalMonoid(set))
        } else {
            Err(Error::NotAMonoid)
        }
    }
}

impl NumericalMonoid {
    pub fn natural(frobenius: u32) -> Result<Self> {
        NumericalSet::natural(frobenius).map(NumericalMonoid)
    }

    /// `𝔻_g = ℕ_g ∪ {⌊(g+2)/2⌋}`. For `g ≤ 2` the added element is `≥ g`, so
    /// those are rejected.
    pub fn d_monoid(frobenius: u32) -> Result<Self> {
        if frobenius < 3 {
            return Err(Error::Domain(format!(
                "D_g needs g >= 3 (floor((g+2)/2) = g for g = {frobenius})"
            )));
        }
        let set = NumericalSet::new(frobenius, 1 << ((frobenius + 2) / 2))?;
        Ok(NumericalMonoid(set))
    }

    #[inline]
    pub fn as_set(&self) -> &NumericalSet {
        &self.0
    }

    #[inline]
    pub fn frobenius(&self) -> u32 {
        self.0.frobenius
    }

    /// `O(M) = {n ∉ M : n + (M − {0}) ⊆ M}`; always contains `g`.
    pub fn omitted_atoms(&self) -> Vec<u32> {
        let g = self.0.frobenius;
        let members = self.0.interior;
        let window = closed_mask(g);
        (1..=g)
            .filter(|&n| members >> n & 1 == 0)
            .filter(|&n| (members << n) & window & !members == 0)
            .collect()
    }

    /// `type(M) = |O(M)|`.
    pub fn type_number(&self) -> u32 {
        self.omitted_atoms().len() as u32
    }

    /// Mask of the free positions between `M` and `M*`.
    fn sandwich_free_bits(&self) -> u64 {
        self.0.dual().interior & !self.0.interior
    }

    /// Every `S` with `A(S) = M`, sorted by interior mask.
    ///
    /// Such `S` satisfy `M ⊆ S ⊆ M*`, so only that interval is scanned.
    pub fn anti_atom_set(&self) -> Vec<NumericalSet> {
        let g = self.0.frobenius;
        Submasks::of(self.sandwich_free_bits())
            .map(|extra| NumericalSet::from_raw(g, self.0.interior | extra))
            .filter(|s| s.atom_monoid() == *self)
            .collect()
    }

    /// `|G(M)|` without materializing the list.
    pub fn anti_atom_count(&self) -> u64 {
        let g = self.0.frobenius;
        Submasks::of(self.sandwich_free_bits())
            .filter(|&extra| {
                NumericalSet::from_raw(g, self.0.interior | extra).atom_monoid() == *self
            })
            .count() as u64
    }
}

impl fmt::Display for NumericalMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All `2^{g−1}` members of `S(g)` in ascending interior order.
pub fn enumerate_all_sets(
    frobenius: u32,
    limits: &Limits,
) -> Result<impl Iterator<Item = NumericalSet> + Clone> {
    if frobenius == 0 {
        return Err(Error::Domain("Frobenius number must be positive".into()));
    }
    limits::check("g (full scan)", frobenius, limits.all_sets_g.min(MAX_WIDTH))?;
    let count = 1u64 << (frobenius - 1);
    Ok((0..count).map(move |m| NumericalSet::from_raw(frobenius, m << 1)))
}

/// Number of doubletons `{x, g−x}` with `x < g/2`.
#[inline]
pub fn doubleton_count(frobenius: u32) -> u32 {
    (frobenius - 1) / 2
}

/// The maximal negative semisymmetric sets of `S(g)`: one member of each
/// doubleton `{x, g−x}`, and `g/2` excluded.
///
/// Bit `j` of the choice index selects `j+1` over `g−j−1`.
pub fn enumerate_sigma_sets(
    frobenius: u32,
    limits: &Limits,
) -> Result<impl Iterator<Item = NumericalSet> + Clone> {
    if frobenius == 0 {
        return Err(Error::Domain("Frobenius number must be positive".into()));
    }
    limits::check(
        "g (sigma scan)",
        frobenius,
        limits.sigma_sets_g.min(MAX_WIDTH),
    )?;
    let d = doubleton_count(frobenius);
    let all = (1u64 << d) - 1;
    Ok((0..1u64 << d).map(move |choice| {
        let low = choice << 1;
        let high = reflect((!choice & all) << 1, frobenius);
        NumericalSet::from_raw(frobenius, low | high)
    }))
}
