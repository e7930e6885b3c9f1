//! Exhaustive verification suites run against brute-force scans.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::admissible::{a_sigma_masks, admissible_pairs, Family};
use crate::bits::{open_mask, Submasks};
use crate::error::Result;
use crate::limits::Limits;
use crate::par::{self, Strategy};
use crate::sequence::{beta, beta_sigma, CheckReport, TableSet};
use crate::sets::{doubleton_count, enumerate_all_sets, enumerate_sigma_sets, NumericalSet};
use crate::structure::{
    build_s_lmp, decompose_b, even_odd_drop, even_odd_lift, level_sets, matrix_word, sigma_build,
    sigma_level_sets, sigma_spawn_children, sigma_word, spawn_children, word_membership,
};

/// `hist[0] = |G|`, `hist[k] = |B(g,k)|` over the scanned sets.
fn histogram(sets: &[NumericalSet], g: u32, strategy: Strategy) -> (Vec<u64>, u64) {
    let width = (g as usize).div_ceil(2) + 1;
    let chunks: Vec<&[NumericalSet]> = sets.chunks(4096).collect();
    let parts = par::map_collect(&chunks, strategy, |chunk| {
        let mut h = vec![0u64; width];
        let mut stray = 0u64;
        for s in chunk.iter() {
            match s.largest_small_atom() {
                None => h[0] += 1,
                Some(a) => {
                    let k = (g - a) as usize;
                    if 2 * k < g as usize {
                        h[k] += 1;
                    } else {
                        stray += 1;
                    }
                }
            }
        }
        (h, stray)
    });
    parts
        .into_iter()
        .fold((vec![0; width], 0), |(mut acc, st), (h, s)| {
            acc.iter_mut().zip(h).for_each(|(a, b)| *a += b);
            (acc, st + s)
        })
}

fn fill_for_oracle(
    t: &mut TableSet,
    g_max: u32,
    sigma_g_max: u32,
    limits: &Limits,
    strategy: Strategy,
) -> Result<()> {
    t.fill(Family::APrime, g_max, limits, strategy)?;
    t.fill(Family::A, g_max.saturating_sub(1) / 2, limits, strategy)?;
    t.fill(Family::ASigmaPrime, sigma_g_max, limits, strategy)?;
    t.fill(
        Family::ASigma,
        sigma_g_max.saturating_sub(1) / 2,
        limits,
        strategy,
    )
}

/// Brute-force class sizes of `S(g)`, `g ≤ g_max`, and of `S^σ(g)`,
/// `g ≤ sigma_g_max`, against the counting formulas.
pub fn oracle_suite(
    g_max: u32,
    sigma_g_max: u32,
    t: &mut TableSet,
    limits: &Limits,
    strategy: Strategy,
) -> Result<CheckReport> {
    fill_for_oracle(t, g_max, sigma_g_max, limits, strategy)?;
    let mut report = CheckReport::new("oracle");
    for g in 1..=g_max {
        let sets: Vec<NumericalSet> = enumerate_all_sets(g, limits)?.collect();
        let (h, stray) = histogram(&sets, g, strategy);
        let a_prime = t.value(Family::APrime, g)?;
        report.push(
            format!("|G({g})| = {} vs A'_{g} = {a_prime}", h[0]),
            BigUint::from(h[0]) == *a_prime,
        );
        for k in 1..=(g - 1) / 2 {
            let want = t.value(Family::A, k)? << (g - 2 * k - 1) as usize;
            report.push(
                format!(
                    "|B({g},{k})| = {} vs A_{k} 2^{}",
                    h[k as usize],
                    g - 2 * k - 1
                ),
                BigUint::from(h[k as usize]) == want,
            );
        }
        let total: u64 = h.iter().sum();
        report.push(
            format!("B({g}) is the disjoint union of B({g},k) and G({g}) covers the rest"),
            stray == 0 && total == 1 << (g - 1),
        );
        let b = BigUint::from(total - h[0]);
        let scaled =
            beta(g, t)? * num_rational::BigRational::from_integer((1u64 << (g - 1)).into());
        report.push(
            format!("beta_{g} 2^{} = |B({g})| = {b}", g - 1),
            scaled.to_integer() == b.clone().into() && scaled.is_integer(),
        );
    }
    for g in 1..=sigma_g_max {
        let sets: Vec<NumericalSet> = enumerate_sigma_sets(g, limits)?.collect();
        let (h, stray) = histogram(&sets, g, strategy);
        let a_prime = t.value(Family::ASigmaPrime, g)?;
        report.push(
            format!("|Gsigma({g})| = {} vs A'sigma_{g} = {a_prime}", h[0]),
            BigUint::from(h[0]) == *a_prime,
        );
        for k in 1..=(g - 1) / 2 {
            let want = t.value(Family::ASigma, k)? << ((g - 2 * k - 1) / 2) as usize;
            report.push(
                format!(
                    "|Bsigma({g},{k})| = {} vs Asigma_{k} 2^{}",
                    h[k as usize],
                    (g - 2 * k - 1) / 2
                ),
                BigUint::from(h[k as usize]) == want,
            );
        }
        let total: u64 = h.iter().sum();
        report.push(
            format!("Bsigma({g}) is the disjoint union of Bsigma({g},k)"),
            stray == 0 && total == 1 << doubleton_count(g),
        );
        let b = BigUint::from(total - h[0]);
        let scaled = beta_sigma(g, t)?
            * num_rational::BigRational::from_integer((1u64 << doubleton_count(g)).into());
        report.push(
            format!(
                "beta_sigma_{g} 2^{} = |Bsigma({g})| = {b}",
                doubleton_count(g)
            ),
            scaled.is_integer() && scaled.to_integer() == b.into(),
        );
    }
    Ok(report)
}

/// Members of `P^σ(k, g−k)`: one element of each pair `{x, g−x}` in `(k, g−k)`, `g/2` excluded.
fn sigma_windows(k: u32, g: u32) -> Vec<u64> {
    let pairs: Vec<u32> = (k + 1..).take_while(|&x| 2 * x < g).collect();
    let all = (1u64 << pairs.len()) - 1;
    (0..=all)
        .map(|choice| {
            pairs.iter().enumerate().fold(0u64, |acc, (j, &x)| {
                acc | if choice >> j & 1 == 1 {
                    1 << x
                } else {
                    1 << (g - x)
                }
            })
        })
        .collect()
}

/// Round trips of the structure maps and the spawning-tree counts.
pub fn bijection_suite(
    g_max: u32,
    tree_k: u32,
    sigma_tree_k: u32,
    word_k: u32,
    t: &mut TableSet,
    limits: &Limits,
    strategy: Strategy,
) -> Result<CheckReport> {
    t.fill(Family::A, tree_k.max(g_max / 2), limits, strategy)?;
    t.fill(
        Family::ASigma,
        sigma_tree_k.max(g_max / 2),
        limits,
        strategy,
    )?;
    let mut report = CheckReport::new("bijections");

    for g in 1..=g_max {
        let sets: Vec<NumericalSet> = enumerate_all_sets(g, limits)?.collect();
        let decomposed_ok = sets
            .iter()
            .filter(|s| s.largest_small_atom().is_some())
            .all(|s| {
                decompose_b(s)
                    .and_then(|b| build_s_lmp(&b.l, &b.m, b.p, g))
                    .is_ok_and(|back| back == *s)
            });
        report.push(
            format!("g={g}: build(decompose(S)) = S on B({g})"),
            decomposed_ok,
        );

        for k in 1..=(g - 1) / 2 {
            let pairs = admissible_pairs(k, limits)?;
            let window = open_mask(g - k) & !open_mask(k + 1);
            let mut built = BTreeSet::new();
            let mut ok = true;
            for pair in &pairs {
                for p in Submasks::of(window) {
                    match build_s_lmp(pair.l(), pair.m(), p, g) {
                        Ok(s) => {
                            ok &= s.largest_small_atom() == Some(g - k)
                                && decompose_b(&s).is_ok_and(|b| {
                                    b.l == *pair.l() && b.m == *pair.m() && b.p == p
                                });
                            built.insert(s);
                        }
                        Err(_) => ok = false,
                    }
                }
            }
            let want = t.value(Family::A, k)? << (g - 2 * k - 1) as usize;
            report.push(
                format!(
                    "g={g},k={k}: A(k) x P(k,g-k) -> B(g,k) injective onto {} sets",
                    built.len()
                ),
                ok && BigUint::from(built.len()) == want,
            );
        }

        if g % 2 == 1 {
            let ok = sets.iter().all(|s| {
                [false, true].iter().all(|&eps| {
                    even_odd_lift(s, eps).is_ok_and(|up| {
                        even_odd_drop(&up) == Ok((*s, eps))
                            && up.has_no_small_atoms() == s.has_no_small_atoms()
                    })
                })
            });
            report.push(
                format!("g={g}: drop(lift(S, eps)) = (S, eps), small atoms preserved"),
                ok,
            );
        } else {
            let ok = sets.iter().all(|s| {
                even_odd_drop(s).and_then(|(down, eps)| even_odd_lift(&down, eps)) == Ok(*s)
            });
            report.push(format!("g={g}: lift(drop(S)) = S"), ok);
        }

        let sigma_sets: BTreeSet<NumericalSet> = enumerate_sigma_sets(g, limits)?.collect();
        for k in 1..=(g - 1) / 2 {
            let mut built = BTreeSet::new();
            let mut ok = true;
            for m in a_sigma_masks(k, limits)? {
                for p in sigma_windows(k, g) {
                    match sigma_build(&m, p, g) {
                        Ok(s) => {
                            ok &= sigma_sets.contains(&s) && s.largest_small_atom() == Some(g - k);
                            built.insert(s);
                        }
                        Err(_) => ok = false,
                    }
                }
            }
            let want = t.value(Family::ASigma, k)? << ((g - 2 * k - 1) / 2) as usize;
            report.push(
                format!(
                    "g={g},k={k}: Asigma(k) x Psigma -> Bsigma(g,k) injective onto {} sets",
                    built.len()
                ),
                ok && BigUint::from(built.len()) == want,
            );
        }
    }

    for k in 1..=tree_k {
        let level: Vec<NumericalSet> = level_sets(k)?.collect();
        let unique: BTreeSet<NumericalSet> = level.iter().copied().collect();
        let brute: BTreeSet<NumericalSet> = enumerate_all_sets(2 * k + 1, limits)?
            .filter(|s| s.has_no_small_atoms())
            .collect();
        report.push(
            format!("level {k}: spawned children partition G({})", 2 * k + 1),
            unique.len() == level.len() && unique == brute,
        );
        let three = level_sets(k - 1)?
            .filter(|s| spawn_children(s).map(|c| c.len()) == Ok(3))
            .count();
        let a_k = t.value(Family::A, k)?;
        report.push(
            format!("level {k}: {three} parents spawn 3 children, A_{k} = {a_k}"),
            BigUint::from(three) == *a_k,
        );
    }

    for k in 1..=sigma_tree_k {
        let level: Vec<NumericalSet> = sigma_level_sets(k)?.collect();
        let unique: BTreeSet<NumericalSet> = level.iter().copied().collect();
        let brute: BTreeSet<NumericalSet> = enumerate_sigma_sets(2 * k + 1, limits)?
            .filter(|s| s.has_no_small_atoms())
            .collect();
        report.push(
            format!(
                "sigma level {k}: spawned children partition Gsigma({})",
                2 * k + 1
            ),
            unique.len() == level.len() && unique == brute,
        );
        let one = sigma_level_sets(k - 1)?
            .filter(|s| sigma_spawn_children(s).map(|c| c.len()) == Ok(1))
            .count();
        let a_k = t.value(Family::ASigma, k)?;
        report.push(
            format!("sigma level {k}: {one} parents spawn 1 child, Asigma_{k} = {a_k}"),
            BigUint::from(one) == *a_k,
        );
    }

    for k in 0..=word_k {
        let g = 2 * k + 1;
        let ok = enumerate_all_sets(g, limits)?.all(|s| {
            let inside = word_membership(&matrix_word(&s), false);
            let in_g = s.has_no_small_atoms();
            let four = |s: &NumericalSet| {
                g + 2 > crate::bits::MAX_WIDTH
                    || spawn_children(s).map(|c| c.len() == 4).unwrap_or(false)
            };
            inside == in_g && (!in_g || quadrivalent(&s, k) == four(&s))
        });
        report.push(format!("k={k}: quadrivalence criterion decides G({g})"), ok);
        let ok = enumerate_sigma_sets(g, limits)?
            .all(|s| word_membership(&sigma_word(&s), true) == s.has_no_small_atoms());
        report.push(
            format!("k={k}: bivalence criterion decides Gsigma({g})"),
            ok,
        );
    }
    Ok(report)
}

/// Whether the full 2×k matrix of `s ∈ S(2k+1)` is quadrivalent.
fn quadrivalent(s: &NumericalSet, k: u32) -> bool {
    let w = matrix_word(s);
    let top = |c: u32| w.get(c);
    let bottom = |c: u32| w.get(2 * k + 1 - c);
    (1..=k).any(|l| top(l) && !bottom(k + 1 - l))
}

/// Identical counts under both strategies and several partition counts.
pub fn determinism_suite(max_k: [u32; 4], limits: &Limits) -> Result<CheckReport> {
    let mut report = CheckReport::new("determinism");
    for (family, &top) in Family::ALL.iter().zip(&max_k) {
        for k in 1..=top {
            let reference = crate::admissible::partitioned_count_with(
                *family,
                k,
                1,
                Strategy::Sequential,
                limits,
            )?;
            let mut same = true;
            for parts in [2usize, 7, 64] {
                for strategy in [Strategy::Sequential, Strategy::Parallel] {
                    same &= crate::admissible::partitioned_count_with(
                        *family, k, parts, strategy, limits,
                    )? == reference;
                }
            }
            report.push(
                format!("{}_{k} = {reference} for every partitioning", family.name()),
                same,
            );
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::reflect;

    #[test]
    fn small_suites_pass() {
        let lim = Limits::default();
        let mut t = TableSet::new();
        let r = oracle_suite(9, 15, &mut t, &lim, Strategy::Sequential).unwrap();
        assert!(r.all_pass(), "{r}");
        let r = bijection_suite(9, 4, 6, 4, &mut t, &lim, Strategy::Sequential).unwrap();
        assert!(r.all_pass(), "{r}");
        let r = determinism_suite([6, 12, 15, 21], &lim).unwrap();
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn sigma_windows_reflect_to_complement() {
        for w in sigma_windows(2, 10) {
            let window = open_mask(8) & !open_mask(3) & !(1 << 5);
            assert_eq!(reflect(w, 10), window & !w);
        }
        assert_eq!(sigma_windows(2, 10).len(), 4);
    }
}
