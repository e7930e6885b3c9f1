//! Additive 2-bases: `F ⊆ [0,k]` with `0 ∈ F` and `[0,k] ⊆ F + F`.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::limits::{self, Limits};
use crate::par::{self, Strategy};

/// Sums up to `2k` must fit in a `u64` mask.
pub const MAX_BASIS_K: u32 = 31;

/// Elements are decided in increasing order. Every sum forming `i` uses
/// elements `≤ i`, so coverage of `i` is settled once `i` is decided.
#[derive(Clone, Copy, Debug)]
struct Prefix {
    next: u32,
    elems: u64,
    sums: u64,
}

impl Prefix {
    fn root() -> Self {
        Prefix {
            next: 1,
            elems: 1,
            sums: 1,
        }
    }

    #[inline]
    fn with(&self, i: u32) -> Prefix {
        let elems = self.elems | 1 << i;
        Prefix {
            next: i + 1,
            elems,
            sums: self.sums | elems << i,
        }
    }

    #[inline]
    fn without(&self, i: u32) -> Option<Prefix> {
        (self.sums >> i & 1 == 1).then_some(Prefix {
            next: i + 1,
            ..*self
        })
    }
}

fn count_from(p: Prefix, k: u32) -> u64 {
    if p.next > k {
        return 1;
    }
    let i = p.next;
    if i == k {
        return 1 + (p.sums >> k & 1);
    }
    let mut total = count_from(p.with(i), k);
    if let Some(q) = p.without(i) {
        total += count_from(q, k);
    }
    total
}

fn prefixes(depth: u32) -> Vec<Prefix> {
    let mut level = vec![Prefix::root()];
    for i in 1..=depth {
        level = level
            .iter()
            .flat_map(|p| std::iter::once(p.with(i)).chain(p.without(i)))
            .collect();
    }
    level
}

/// Number of additive 2-bases for `k`; equals `A′^σ_{2k+1}`.
pub fn additive_basis_count(k: u32, limits: &Limits) -> Result<BigUint> {
    additive_basis_count_with(k, Strategy::Parallel, limits)
}

pub fn additive_basis_count_with(k: u32, strategy: Strategy, limits: &Limits) -> Result<BigUint> {
    if k > MAX_BASIS_K {
        return Err(Error::LimitExceeded {
            what: "k (additive basis)",
            requested: k,
            limit: MAX_BASIS_K,
        });
    }
    limits::check("k (additive basis)", k, limits.additive_basis_k)?;
    if k == 0 {
        return Ok(BigUint::from(1u32));
    }
    // Split at a fixed depth; each valid prefix is an independent subtree.
    let roots = prefixes(k.saturating_sub(1).min(14));
    let total = par::sum_ranges(
        roots.len() as u64,
        par::default_partitions(),
        strategy,
        |r| {
            roots[r.start as usize..r.end as usize]
                .iter()
                .map(|&p| count_from(p, k))
                .sum()
        },
    );
    Ok(BigUint::from(total))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct subset scan.
    fn naive(k: u32) -> u64 {
        (0..1u64 << k)
            .filter(|&rest| {
                let f: Vec<u32> = std::iter::once(0)
                    .chain((1..=k).filter(|i| rest >> (i - 1) & 1 == 1))
                    .collect();
                (0..=k).all(|n| {
                    f.iter()
                        .any(|&a| f.contains(&(n.wrapping_sub(a))) && a <= n)
                })
            })
            .count() as u64
    }

    #[test]
    fn examples() {
        let lim = Limits::default();
        assert_eq!(additive_basis_count(0, &lim).unwrap(), BigUint::from(1u32));
        assert_eq!(additive_basis_count(3, &lim).unwrap(), BigUint::from(3u32));
        assert_eq!(additive_basis_count(4, &lim).unwrap(), BigUint::from(6u32));
        assert!(additive_basis_count(27, &lim).is_err());
    }

    #[test]
    fn matches_subset_scan() {
        let lim = Limits::default();
        for k in 0..=14 {
            assert_eq!(
                additive_basis_count(k, &lim).unwrap(),
                BigUint::from(naive(k)),
                "k={k}"
            );
        }
    }
}
