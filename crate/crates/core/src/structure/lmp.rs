use crate::admissible::{is_admissible_pair, sigma_admissible_raw, sigma_decompose, SubsetMask};
use crate::bits::{open_mask, MAX_WIDTH};
use crate::error::{Error, Result};
use crate::sets::NumericalSet;

/// The data `(L, M, P)` of a set whose largest small atom is `g − k`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BMembership {
    pub l: SubsetMask,
    pub m: SubsetMask,
    /// Absolute mask of `P ⊆ (k, g−k)`.
    pub p: u64,
    pub frobenius: u32,
}

impl BMembership {
    pub fn k(&self) -> u32 {
        self.l.window()
    }
}

/// Mask of the open interval `(lo, hi)`.
fn interval(lo: u32, hi: u32) -> u64 {
    if hi <= lo + 1 {
        0
    } else {
        open_mask(hi) & !((1u64 << (lo + 1)) - 1)
    }
}

fn check_gk(frobenius: u32, k: u32) -> Result<()> {
    if k == 0 || frobenius <= 2 * k || frobenius > MAX_WIDTH {
        return Err(Error::WindowViolation(format!(
            "need g > 2k > 0 with g <= {MAX_WIDTH}, got g={frobenius}, k={k}"
        )));
    }
    Ok(())
}

/// `S(L,M,P) = ℕ_g ∪ L ∪ P ∪ {g−k} ∪ (g−k+M)`, which lies in `B(g,k)`.
pub fn build_s_lmp(l: &SubsetMask, m: &SubsetMask, p: u64, frobenius: u32) -> Result<NumericalSet> {
    let k = l.window();
    check_gk(frobenius, k)?;
    if !is_admissible_pair(l, m)? {
        return Err(Error::NotAdmissible);
    }
    if p & !interval(k, frobenius - k) != 0 {
        return Err(Error::WindowViolation(format!(
            "P must lie in ({k}, {})",
            frobenius - k
        )));
    }
    let a = frobenius - k;
    NumericalSet::new(frobenius, l.bits() | p | 1 << a | m.bits() << a)
}

/// Inverse of [`build_s_lmp`]: `k` comes from the largest small atom `g − k`,
/// `L = S∩(0,k)`, `M = (S∩(g−k,g)) − (g−k)`, `P = S∩(k,g−k)`.
pub fn decompose_b(s: &NumericalSet) -> Result<BMembership> {
    let g = s.frobenius();
    let atom = s.largest_small_atom().ok_or(Error::NoSmallAtom)?;
    let k = g - atom;
    let inner = s.interior();
    Ok(BMembership {
        l: SubsetMask::new(k, inner & open_mask(k))?,
        m: SubsetMask::new(k, (inner >> atom) & open_mask(k))?,
        p: inner & interval(k, atom),
        frobenius: g,
    })
}

/// `S′_ε = (S∩[0,n−1]) ∪ {εn} ∪ (1 + S∩[n,∞))` for `g = 2n−1`.
pub fn even_odd_lift(s: &NumericalSet, eps: bool) -> Result<NumericalSet> {
    let g = s.frobenius();
    if g.is_multiple_of(2) {
        return Err(Error::EvenInput(g));
    }
    if g + 1 > MAX_WIDTH {
        return Err(Error::InvalidSet(format!(
            "lift of g={g} exceeds {MAX_WIDTH}"
        )));
    }
    let n = g.div_ceil(2);
    let low = s.interior() & open_mask(n);
    let high = (s.interior() & !open_mask(n)) << 1;
    let mid = if eps { 1u64 << n } else { 0 };
    NumericalSet::new(g + 1, low | mid | high)
}

/// Inverse of [`even_odd_lift`].
pub fn even_odd_drop(s: &NumericalSet) -> Result<(NumericalSet, bool)> {
    let g = s.frobenius();
    if g % 2 == 1 {
        return Err(Error::OddInput(g));
    }
    let n = g / 2;
    let inner = s.interior();
    let eps = inner >> n & 1 == 1;
    let low = inner & open_mask(n);
    let high = (inner & !open_mask(n + 1)) >> 1;
    Ok((NumericalSet::new(g - 1, low | high)?, eps))
}

/// `S(M*, M, P)` for σ-admissible `M` and a reflection-complementary `P`.
pub fn sigma_build(m: &SubsetMask, p: u64, frobenius: u32) -> Result<NumericalSet> {
    let k = m.window();
    check_gk(frobenius, k)?;
    if !sigma_admissible_raw(m.bits(), k) {
        return Err(Error::NotSigmaAdmissible);
    }
    let mut window = interval(k, frobenius - k);
    if frobenius.is_multiple_of(2) {
        window &= !(1u64 << (frobenius / 2));
    }
    if p & !window != 0 {
        return Err(Error::BadSymmetricP);
    }
    // x ↦ g − x must carry P onto window − P.
    let reflected = crate::bits::reflect(p, frobenius);
    if reflected != window & !p {
        return Err(Error::BadSymmetricP);
    }
    let star = sigma_decompose(m).m_star;
    build_s_lmp(&star, m, p, frobenius)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> NumericalSet {
        s.parse().unwrap()
    }

    fn mask(k: u32, e: &[u32]) -> SubsetMask {
        SubsetMask::from_elements(k, e.iter().copied()).unwrap()
    }

    #[test]
    fn build_examples() {
        let s = build_s_lmp(&mask(2, &[1]), &mask(2, &[1]), 1 << 3, 7).unwrap();
        assert_eq!(s, set("g=7;in=1,3,5,6"));
        assert_eq!(s.largest_small_atom(), Some(5));
        let s = build_s_lmp(&mask(1, &[]), &mask(1, &[]), 0, 3).unwrap();
        assert_eq!(s, set("g=3;in=2"));
        let s = build_s_lmp(&mask(2, &[]), &mask(2, &[]), 0, 5).unwrap();
        assert_eq!(s, set("g=5;in=3"));
        assert_eq!(s.largest_small_atom(), Some(3));
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            build_s_lmp(&mask(2, &[]), &mask(2, &[1]), 0, 7),
            Err(Error::NotAdmissible)
        );
        assert!(matches!(
            build_s_lmp(&mask(2, &[1]), &mask(2, &[1]), 1 << 5, 7),
            Err(Error::WindowViolation(_))
        ));
        assert!(matches!(
            build_s_lmp(&mask(2, &[1]), &mask(2, &[1]), 0, 4),
            Err(Error::WindowViolation(_))
        ));
    }

    #[test]
    fn decompose_examples() {
        let d = decompose_b(&set("g=7;in=1,3,5,6")).unwrap();
        assert_eq!(
            (d.l, d.m, d.p, d.k()),
            (mask(2, &[1]), mask(2, &[1]), 1 << 3, 2)
        );
        let d = decompose_b(&set("g=3;in=2")).unwrap();
        assert_eq!((d.l, d.m, d.p, d.k()), (mask(1, &[]), mask(1, &[]), 0, 1));
        assert_eq!(decompose_b(&set("g=5;in=")), Err(Error::NoSmallAtom));
    }

    #[test]
    fn lift_examples() {
        assert_eq!(
            even_odd_lift(&set("g=3;in="), false).unwrap(),
            set("g=4;in=")
        );
        assert_eq!(
            even_odd_lift(&set("g=3;in=1"), true).unwrap(),
            set("g=4;in=1,2")
        );
        assert_eq!(
            even_odd_lift(&set("g=3;in=1"), false).unwrap(),
            set("g=4;in=1")
        );
        assert_eq!(
            even_odd_lift(&set("g=4;in="), false),
            Err(Error::EvenInput(4))
        );
        assert_eq!(even_odd_drop(&set("g=3;in=")), Err(Error::OddInput(3)));
        assert_eq!(
            even_odd_drop(&set("g=4;in=1,2")).unwrap(),
            (set("g=3;in=1"), true)
        );
    }

    #[test]
    fn sigma_build_examples() {
        assert_eq!(
            sigma_build(&mask(3, &[1]), 0, 7).unwrap(),
            set("g=7;in=1,4,5")
        );
        assert_eq!(
            sigma_build(&mask(1, &[]), 1 << 2, 5).unwrap(),
            set("g=5;in=2,4")
        );
        assert_eq!(
            sigma_build(&mask(1, &[]), 1 << 3, 5).unwrap(),
            set("g=5;in=3,4")
        );
        assert_eq!(sigma_build(&mask(1, &[]), 0, 5), Err(Error::BadSymmetricP));
        assert_eq!(
            sigma_build(&mask(1, &[]), 1 << 2 | 1 << 3, 5),
            Err(Error::BadSymmetricP)
        );
        assert_eq!(
            sigma_build(&mask(3, &[2]), 0, 7),
            Err(Error::NotSigmaAdmissible)
        );
        for s in [
            sigma_build(&mask(3, &[1]), 0, 7).unwrap(),
            sigma_build(&mask(1, &[]), 1 << 2, 5).unwrap(),
        ] {
            assert!(s.is_sigma());
        }
    }
}
