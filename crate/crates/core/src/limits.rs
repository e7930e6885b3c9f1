use crate::bits::MAX_WIDTH;
use crate::error::{Error, Result};

/// Brute-force and enumeration bounds.
///
/// The defaults keep every table reproducible at desk scale. [`Limits::long`]
/// lifts them to what the `u64` mask representation can hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `g` for a full scan of `S(g)`.
    pub all_sets_g: u32,
    /// Largest `g` for a scan of the maximal negative semisymmetric sets.
    pub sigma_sets_g: u32,
    /// Largest `k` for `count_a`.
    pub a_k: u32,
    /// Largest `k` for a direct `count_a_prime` scan.
    pub a_prime_k: u32,
    /// Largest `k` for `count_a_sigma`.
    pub a_sigma_k: u32,
    /// Largest `k` for a direct `count_a_sigma_prime` scan.
    pub a_sigma_prime_k: u32,
    /// Largest `k` for `additive_basis_count`.
    pub additive_basis_k: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            all_sets_g: 24,
            sigma_sets_g: 41,
            a_k: 16,
            a_prime_k: 28,
            a_sigma_k: 33,
            a_sigma_prime_k: 49,
            additive_basis_k: 26,
        }
    }
}

impl Limits {
    /// Representational maxima.
    pub fn long() -> Self {
        Limits {
            all_sets_g: MAX_WIDTH,
            sigma_sets_g: MAX_WIDTH,
            a_k: MAX_WIDTH,
            a_prime_k: MAX_WIDTH,
            a_sigma_k: MAX_WIDTH,
            a_sigma_prime_k: MAX_WIDTH,
            additive_basis_k: crate::structure::MAX_BASIS_K,
        }
    }
}

pub(crate) fn check(what: &'static str, requested: u32, limit: u32) -> Result<()> {
    if requested > limit {
        Err(Error::LimitExceeded {
            what,
            requested,
            limit,
        })
    } else {
        Ok(())
    }
}
