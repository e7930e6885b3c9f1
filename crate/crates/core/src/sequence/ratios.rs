use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::table::TableSet;
use crate::admissible::Family;
use crate::error::{Error, Result};

fn ratio(n: &BigUint, d: BigUint) -> BigRational {
    BigRational::new(BigInt::from(n.clone()), BigInt::from(d))
}

/// `Σ_{k=1}^{⌊(g−1)/2⌋} c_k / base^k` over `family`.
fn weighted_sum(t: &TableSet, family: Family, g: u32, base: u32) -> Result<BigRational> {
    let mut total = BigRational::zero();
    for k in 1..=g.saturating_sub(1) / 2 {
        total += ratio(t.value(family, k)?, BigUint::from(base).pow(k));
    }
    Ok(total)
}

/// `β_g = Σ A_k 4^{−k}`, the fraction of `S(g)` with a small atom.
pub fn beta(g: u32, t: &TableSet) -> Result<BigRational> {
    weighted_sum(t, Family::A, g, 4)
}

pub fn gamma(g: u32, t: &TableSet) -> Result<BigRational> {
    Ok(BigRational::one() - beta(g, t)?)
}

/// `β^σ_g = Σ A^σ_k 2^{−k}`.
pub fn beta_sigma(g: u32, t: &TableSet) -> Result<BigRational> {
    weighted_sum(t, Family::ASigma, g, 2)
}

pub fn gamma_sigma(g: u32, t: &TableSet) -> Result<BigRational> {
    Ok(BigRational::one() - beta_sigma(g, t)?)
}

/// A closed rational interval.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Enclosure {
    lo: BigRational,
    hi: BigRational,
}

impl Enclosure {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo > hi {
            return Err(Error::Domain(format!("empty enclosure [{lo}, {hi}]")));
        }
        Ok(Enclosure { lo, hi })
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn half_width(&self) -> BigRational {
        self.width() / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn is_subset_of(&self, other: &Enclosure) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// `{1 − x : x ∈ self}`.
    pub fn complement(&self) -> Enclosure {
        let one = BigRational::one();
        Enclosure {
            lo: &one - &self.hi,
            hi: one - &self.lo,
        }
    }
}

/// `β_∞ ∈ [β_{2n+1}, β_{2n+1} + (3/4)^n]`.
pub fn enclose_beta_inf(n: u32, t: &TableSet) -> Result<Enclosure> {
    let lo = beta(2 * n + 1, t)?;
    let tail = BigRational::new(BigInt::from(3u32).pow(n), BigInt::from(4u32).pow(n));
    let hi = &lo + tail;
    Enclosure::new(lo, hi)
}

pub fn enclose_gamma_inf(n: u32, t: &TableSet) -> Result<Enclosure> {
    enclose_beta_inf(n, t).map(|e| e.complement())
}

/// The least 64-bit dyadic `r = c / (2^m · 2^64)` with `r ≥ (√3/2)^m`.
///
/// `c = ⌈√(3^m · 2^128)⌉`; the result is re-checked by `r² ≥ (3/4)^m`.
pub fn sqrt3_over_2_pow_upper(m: u32) -> BigRational {
    let radicand = BigUint::from(3u32).pow(m) << 128u32;
    let mut c = radicand.sqrt();
    if &c * &c < radicand {
        c += 1u32;
    }
    let r = BigRational::new(
        BigInt::from(c),
        BigInt::from(BigUint::one() << (m as u64 + 64)),
    );
    let bound = BigRational::new(BigInt::from(3u32).pow(m), BigInt::from(4u32).pow(m));
    assert!(
        &r * &r >= bound,
        "certified upper bound failed its square check"
    );
    r
}

/// `β^σ_∞ ∈ [β^σ_{2n−1}, min(1, β^σ_{2n−1} + r)]` with `r ≥ (√3/2)^{n−1}`.
pub fn enclose_beta_sigma_inf(n: u32, t: &TableSet) -> Result<Enclosure> {
    if n == 0 {
        return Err(Error::Domain("enclosure index n must be >= 1".into()));
    }
    let lo = beta_sigma(2 * n - 1, t)?;
    let hi = (&lo + sqrt3_over_2_pow_upper(n - 1)).min(BigRational::one());
    Enclosure::new(lo, hi)
}

/// `γ^σ_∞ ∈ [1 − hi, 1 − lo]` of the `β^σ_∞` enclosure.
pub fn enclose_gamma_sigma_inf(n: u32, t: &TableSet) -> Result<Enclosure> {
    enclose_beta_sigma_inf(n, t).map(|e| e.complement())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::Limits;
    use crate::par::Strategy;
    use crate::sequence::fixed_decimal;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn tables(a: u32, s: u32) -> TableSet {
        let mut t = TableSet::new();
        t.fill(Family::A, a, &Limits::default(), Strategy::Sequential)
            .unwrap();
        t.fill(Family::ASigma, s, &Limits::default(), Strategy::Sequential)
            .unwrap();
        t
    }

    #[test]
    fn beta_examples() {
        let t = tables(4, 4);
        assert_eq!(beta(3, &t).unwrap(), q(1, 4));
        assert_eq!(beta(7, &t).unwrap(), q(27, 64));
        assert_eq!(beta(1, &t).unwrap(), q(0, 1));
        assert_eq!(beta(2, &t).unwrap(), q(0, 1));
        assert_eq!(beta(8, &t).unwrap(), beta(7, &t).unwrap());
        assert_eq!(gamma(3, &t).unwrap(), q(3, 4));
        assert_eq!(beta_sigma(1, &t).unwrap(), q(0, 1));
        assert_eq!(beta_sigma(3, &t).unwrap(), q(1, 2));
        assert_eq!(beta_sigma(9, &t).unwrap(), q(5, 8));
        assert!(matches!(
            beta(11, &t),
            Err(Error::MissingSequenceData { .. })
        ));
    }

    #[test]
    fn small_enclosures() {
        let t = tables(2, 1);
        let e = enclose_beta_inf(2, &t).unwrap();
        assert_eq!((e.lo(), e.hi()), (&q(3, 8), &q(15, 16)));
        let e = enclose_beta_sigma_inf(1, &t).unwrap();
        assert_eq!((e.lo(), e.hi()), (&q(0, 1), &q(1, 1)));
        assert!(enclose_beta_sigma_inf(0, &t).is_err());
    }

    #[test]
    fn sqrt_bound_is_tight() {
        for m in [0u32, 1, 2, 7, 31, 40] {
            let r = sqrt3_over_2_pow_upper(m);
            let slack = BigRational::new(
                BigInt::one(),
                BigInt::from(BigUint::one() << (m as u64 + 64)),
            );
            let below = &r - slack;
            let bound = q(3, 4).pow(m as i32);
            assert!(&r * &r >= bound);
            assert!(below.clone() * below < bound, "m={m}");
        }
        assert_eq!(fixed_decimal(&sqrt3_over_2_pow_upper(31), 7), ".0115731");
    }

    #[test]
    fn enclosures_nest() {
        let t = tables(12, 24);
        for n in 1..12 {
            let outer = enclose_beta_inf(n, &t).unwrap();
            assert!(enclose_beta_inf(n + 1, &t).unwrap().is_subset_of(&outer));
        }
        for n in 1..12 {
            let outer = enclose_beta_sigma_inf(n, &t).unwrap();
            assert!(
                enclose_beta_sigma_inf(n + 1, &t)
                    .unwrap()
                    .is_subset_of(&outer),
                "n={n}"
            );
        }
    }
}
