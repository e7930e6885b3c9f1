//! Level-by-level spawning of `G(2k+1)` and `G^σ(2k+1)`, and the binary-word
//! labels of their vertices.

use std::fmt;

use crate::bits::{open_mask, MAX_WIDTH};
use crate::error::{Error, Result};
use crate::sets::NumericalSet;

/// `S(Q) = ℕ_{2k+1} ∪ (S∩[1,k−1]) ∪ Q ∪ (2 + S∩[k,2k−2])` for `S ∈ S(2k−1)`.
fn spawn(s: &NumericalSet, q: u64) -> NumericalSet {
    let k = s.frobenius().div_ceil(2);
    let low = s.interior() & open_mask(k);
    let high = (s.interior() & !open_mask(k)) << 2;
    NumericalSet::new(2 * k + 1, low | q | high).expect("spawned set stays inside (0, 2k+1)")
}

fn check_parent(s: &NumericalSet) -> Result<u32> {
    let g = s.frobenius();
    if g.is_multiple_of(2) {
        return Err(Error::WrongParity(g));
    }
    if g + 2 > MAX_WIDTH {
        return Err(Error::InvalidSet(format!(
            "children of g={g} exceed {MAX_WIDTH}"
        )));
    }
    if !s.has_no_small_atoms() {
        return Err(Error::HasSmallAtom);
    }
    Ok(g.div_ceil(2))
}

/// Children of `S ∈ G(2k−1)` in `G(2k+1)`: `Q = ∅, {k}, {k,k+1}` always, and
/// `{k+1}` when `k+1` is not an atom of `S({k+1})`.
pub fn spawn_children(s: &NumericalSet) -> Result<Vec<NumericalSet>> {
    let k = check_parent(s)?;
    let mut out = vec![spawn(s, 0), spawn(s, 1 << k), spawn(s, 3 << k)];
    let extra = spawn(s, 1 << (k + 1));
    if extra.has_no_small_atoms() {
        out.push(extra);
    }
    Ok(out)
}

/// Children of `S ∈ G^σ(2k−1)`: `S({k})` always, `S({k+1})` when it has no
/// small atoms.
pub fn sigma_spawn_children(s: &NumericalSet) -> Result<Vec<NumericalSet>> {
    let k = check_parent(s)?;
    if !s.is_sigma() {
        return Err(Error::NotSymmetric);
    }
    let mut out = vec![spawn(s, 1 << k)];
    let extra = spawn(s, 1 << (k + 1));
    if extra.has_no_small_atoms() {
        out.push(extra);
    }
    Ok(out)
}

fn level_iter(
    level: u32,
    children: fn(&NumericalSet) -> Result<Vec<NumericalSet>>,
) -> Box<dyn Iterator<Item = NumericalSet>> {
    if level == 0 {
        return Box::new(std::iter::once(
            NumericalSet::natural(1).expect("N_1 is valid"),
        ));
    }
    Box::new(
        level_iter(level - 1, children)
            .flat_map(move |s| children(&s).expect("tree vertices are valid parents")),
    )
}

/// `G(2k+1)` generated by spawning from `ℕ_1`, never materialized whole.
pub fn level_sets(level: u32) -> Result<Box<dyn Iterator<Item = NumericalSet>>> {
    check_level(level)?;
    Ok(level_iter(level, spawn_children))
}

/// `G^σ(2k+1)` generated by σ-spawning from `ℕ_1`.
pub fn sigma_level_sets(level: u32) -> Result<Box<dyn Iterator<Item = NumericalSet>>> {
    check_level(level)?;
    Ok(level_iter(level, sigma_spawn_children))
}

fn check_level(level: u32) -> Result<()> {
    if 2 * level + 1 > MAX_WIDTH {
        return Err(Error::Domain(format!(
            "level {level} exceeds g = {MAX_WIDTH}"
        )));
    }
    Ok(())
}

/// A word `α_1 … α_len` over `{0,1}`; bit `i−1` holds `α_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct BinaryWord {
    len: u32,
    bits: u64,
}

impl BinaryWord {
    pub fn new(len: u32, bits: u64) -> Result<Self> {
        if len > 64 || (len < 64 && bits >> len != 0) {
            return Err(Error::Domain(format!(
                "word of length {len} has stray bits"
            )));
        }
        Ok(BinaryWord { len, bits })
    }

    pub fn from_slice(alpha: &[u8]) -> Result<Self> {
        let mut bits = 0u64;
        for (i, &a) in alpha.iter().enumerate() {
            match a {
                0 => {}
                1 => bits |= 1 << i,
                _ => return Err(Error::Domain(format!("entry {a} is not binary"))),
            }
        }
        BinaryWord::new(alpha.len() as u32, bits)
    }

    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// `α_i`, 1-based.
    #[inline]
    pub fn get(&self, i: u32) -> bool {
        debug_assert!((1..=self.len).contains(&i));
        self.bits >> (i - 1) & 1 == 1
    }

    /// The 2×k wrap-around matrix read row-major: `α_1..α_k` then `α_2k..α_{k+1}`.
    pub fn row_major(&self) -> String {
        let k = self.len / 2;
        let top = (1..=k).map(|i| self.get(i));
        let bottom = (k + 1..=self.len).rev().map(|i| self.get(i));
        top.chain(bottom)
            .map(|b| if b { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Label of `S ∈ S(2k+1)`: `α_i = [i ∈ S]` for `1 ≤ i ≤ 2k`.
pub fn matrix_word(s: &NumericalSet) -> BinaryWord {
    let len = s.frobenius() - 1;
    BinaryWord::new(len, s.interior() >> 1).expect("interior fits the word")
}

/// Label of `S ∈ S^σ(2k+1)`: `α_i = [i ∈ S]` for `1 ≤ i ≤ k`.
pub fn sigma_word(s: &NumericalSet) -> BinaryWord {
    let k = (s.frobenius() - 1) / 2;
    BinaryWord::new(k, (s.interior() >> 1) & ((1u64 << k) - 1)).expect("fits")
}

/// Prefix criteria for tree membership.
///
/// `sigma = true`: `α` (length `k`) labels an element of `G^σ(2k+1)` iff every
/// `α_i = 0` has a bivalent prefix `α_1..α_{i−1}` (some `α_ℓ = α_{i−ℓ} = 1`).
///
/// `sigma = false`: `α` is the flat word `α_1..α_{2k}` of the 2×k matrix whose
/// column `c` is `(α_c, α_{2k+1−c})`. It labels an element of `G(2k+1)` iff
/// every column `i` equal to `(0,1)` has a quadrivalent left submatrix: some
/// `ℓ < i` with top entry 1 in column `ℓ` and bottom entry 0 in column `i−ℓ`.
/// Odd-length words are rejected.
pub fn word_membership(alpha: &BinaryWord, sigma: bool) -> bool {
    if sigma {
        (1..=alpha.len).all(|i| alpha.get(i) || (1..i).any(|l| alpha.get(l) && alpha.get(i - l)))
    } else {
        if alpha.len % 2 == 1 {
            return false;
        }
        let n = alpha.len;
        let top = |c: u32| alpha.get(c);
        let bottom = |c: u32| alpha.get(n + 1 - c);
        (1..=n / 2).all(|i| !(!top(i) && bottom(i)) || (1..i).any(|l| top(l) && !bottom(i - l)))
    }
}
