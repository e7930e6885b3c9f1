use nsatoms_core::admissible::{
    admissible_pairs, is_admissible_pair, is_sigma_admissible, partitioned_count_with,
};
use nsatoms_core::bits::{open_mask, Submasks};
use nsatoms_core::structure::{build_s_lmp, decompose_b, even_odd_drop, even_odd_lift};
use nsatoms_core::{Family, Limits, NumericalSet, Strategy as Schedule, SubsetMask};
use proptest::prelude::*;

fn any_set(max_g: u32) -> impl Strategy<Value = NumericalSet> {
    (1..=max_g).prop_flat_map(|g| {
        any::<u64>().prop_map(move |bits| NumericalSet::new(g, bits & open_mask(g)).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn sandwich_monotonicity(k in 1u32..=12, pick in any::<u64>(), grow in any::<u64>(), shrink in any::<u64>()) {
        let pairs = admissible_pairs(k, &Limits::default()).unwrap();
        let pair = &pairs[(pick % pairs.len() as u64) as usize];
        let (l, m) = (pair.l().bits(), pair.m().bits());
        // L ⊆ L′ ⊆ M′ ⊆ M.
        let m2 = m & !(shrink & !l);
        let l2 = l | (grow & m2);
        let l2 = SubsetMask::new(k, l2).unwrap();
        let m2 = SubsetMask::new(k, m2).unwrap();
        prop_assert!(is_admissible_pair(&l2, &m2).unwrap());
    }

    #[test]
    fn dual_is_an_involution(s in any_set(63)) {
        prop_assert_eq!(s.dual().dual(), s);
        let g = s.frobenius();
        let expected = if g % 2 == 1 {
            s.dual() == s
        } else {
            s.dual().interior() == s.interior() | 1 << (g / 2)
        };
        prop_assert_eq!(s.is_sigma(), expected);
    }

    #[test]
    fn text_round_trip(s in any_set(63)) {
        prop_assert_eq!(s.to_string().parse::<NumericalSet>().unwrap(), s);
    }

    #[test]
    fn decompose_then_build(s in any_set(40)) {
        match decompose_b(&s) {
            Ok(b) => {
                prop_assert_eq!(s.largest_small_atom(), Some(s.frobenius() - b.k()));
                prop_assert_eq!(build_s_lmp(&b.l, &b.m, b.p, s.frobenius()).unwrap(), s);
            }
            Err(_) => prop_assert!(s.has_no_small_atoms()),
        }
    }

    #[test]
    fn lift_and_drop(s in any_set(61), eps in any::<bool>()) {
        if s.frobenius() % 2 == 1 {
            let up = even_odd_lift(&s, eps).unwrap();
            prop_assert_eq!(even_odd_drop(&up).unwrap(), (s, eps));
            prop_assert_eq!(up.has_no_small_atoms(), s.has_no_small_atoms());
        } else {
            let (down, e) = even_odd_drop(&s).unwrap();
            prop_assert_eq!(even_odd_lift(&down, e).unwrap(), s);
        }
    }

    #[test]
    fn partition_independence(fam in 0usize..4, k in 1u32..=12, parts in 1usize..200) {
        let family = Family::ALL[fam];
        let k = if family == Family::A { k.min(10) } else { k + 10 };
        let lim = Limits::default();
        let base = partitioned_count_with(family, k, 1, Schedule::Sequential, &lim).unwrap();
        prop_assert_eq!(partitioned_count_with(family, k, parts, Schedule::Parallel, &lim).unwrap(), base);
    }
}

#[test]
fn sigma_sets_contain_a_doubleton_member() {
    for k in 1..=12u32 {
        for m in Submasks::of(open_mask(k)) {
            let mask = SubsetMask::new(k, m).unwrap();
            if is_sigma_admissible(&mask) {
                assert!((1..k).all(|x| mask.contains(x) || mask.contains(k - x)));
            }
        }
    }
}
