use num_bigint::BigUint;

use super::table::TableSet;
use super::verify::CheckReport;
use crate::admissible::Family;
use crate::error::Result;
use crate::limits::{self, Limits};
use crate::sets::{enumerate_all_sets, NumericalMonoid};

/// Scans every monoid of `S(g)` for `g ≤ g_max` and checks the anti-atom
/// bounds and their corollaries. Needs `A_k` for `k ≤ ⌊(g_max−1)/2⌋`.
///
/// For `M` whose largest element below `g` is `g−k`:
/// `|G(M)| ≤ A_k·2^{g−2k−1} ≤ (1/3)(3/4)^k·2^{g−1}`, with the first bound
/// attained only at `𝔻_g`. Also `|G(M)| = 1 ⟺ M` symmetric, `|G(M)| = 2`
/// for pseudosymmetric `M`, `|G(𝔻_{2n+1})| = A_n` and `|G(𝔻_{2n+2})| = 2A_n`.
pub fn anti_atom_bound_check(g_max: u32, t: &TableSet, limits: &Limits) -> Result<CheckReport> {
    limits::check("g (antiatom scan)", g_max, limits.all_sets_g)?;
    let mut report = CheckReport::new("antiatom");
    for g in 1..=g_max {
        let monoids: Vec<NumericalMonoid> = enumerate_all_sets(g, limits)?
            .filter_map(|s| NumericalMonoid::try_from(s).ok())
            .collect();
        let dg = NumericalMonoid::d_monoid(g).ok();
        let (mut bound_bad, mut weak_bad, mut tight_bad, mut sym_bad, mut pseudo_bad) =
            (0, 0, 0, 0, 0);
        for m in &monoids {
            let count = m.anti_atom_count();
            let class = m.as_set().classify_symmetry();
            if (count == 1) != class.symmetric {
                sym_bad += 1;
            }
            if class.pseudosymmetric && count != 2 {
                pseudo_bad += 1;
            }
            let inner = m.as_set().interior();
            if inner == 0 {
                continue;
            }
            let k = g - (63 - inner.leading_zeros());
            let a_k = t.value(Family::A, k)?;
            let bound = a_k << (g - 2 * k - 1) as usize;
            let count = BigUint::from(count);
            if count > bound {
                bound_bad += 1;
            }
            if count == bound && Some(*m) != dg {
                tight_bad += 1;
            }
            // |G(M)|·3·4^k ≤ 3^k·2^{g−1}.
            let lhs = &count * 3u32 * BigUint::from(4u32).pow(k);
            let rhs = BigUint::from(3u32).pow(k) << (g - 1) as usize;
            if lhs > rhs {
                weak_bad += 1;
            }
        }
        let n = monoids.len();
        report.push(
            format!("g={g}: {n} monoids, |G(M)| <= A_k 2^(g-2k-1) ({bound_bad} violations)"),
            bound_bad == 0,
        );
        report.push(
            format!("g={g}: |G(M)| <= (1/3)(3/4)^k 2^(g-1) ({weak_bad} violations)"),
            weak_bad == 0,
        );
        report.push(
            format!("g={g}: bound attained only at D_g ({tight_bad} others)"),
            tight_bad == 0,
        );
        report.push(
            format!("g={g}: |G(M)| = 1 iff symmetric ({sym_bad} mismatches)"),
            sym_bad == 0,
        );
        report.push(
            format!("g={g}: pseudosymmetric implies |G(M)| = 2 ({pseudo_bad} mismatches)"),
            pseudo_bad == 0,
        );
        if let Some(d) = dg {
            let half = (g - 1) / 2;
            let a = t.value(Family::A, half)?;
            let expect = if g % 2 == 1 { a.clone() } else { a * 2u32 };
            let got = BigUint::from(d.anti_atom_count());
            report.push(
                format!("g={g}: |G(D_g)| = {got}, expected {expect}"),
                got == expect,
            );
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::par::Strategy;

    #[test]
    fn small_scan_passes() {
        let lim = Limits::default();
        let mut t = TableSet::new();
        t.fill(Family::A, 4, &lim, Strategy::Sequential).unwrap();
        let r = anti_atom_bound_check(9, &t, &lim).unwrap();
        assert!(r.all_pass(), "{r}");
        assert!(r
            .checks
            .iter()
            .any(|c| c.label == "g=7: |G(D_g)| = 3, expected 3"));
    }

    #[test]
    fn limit_enforced() {
        let lim = Limits::default();
        assert!(matches!(
            anti_atom_bound_check(25, &TableSet::new(), &lim),
            Err(crate::Error::LimitExceeded { .. })
        ));
    }
}
