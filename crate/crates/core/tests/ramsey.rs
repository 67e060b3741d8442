use graphcalc::ramsey::{
    best_probabilistic_r, circulant_coloring, coin_tail, expected_mono, has_mono_clique, has_mono_clique_through,
    known_r, lower_condition, markov_bound_check, s_table, s_value, verify_r33, verify_ramsey_value, Color,
    EdgeColoring2,
};
use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

fn choose(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let num: BigUint = (n - k + 1..=n).map(BigUint::from).product();
    let den: BigUint = (1..=k).map(BigUint::from).product();
    num / den
}

/// Monochromatic `k`-sets by checking every subset.
fn mono_exists(c: &EdgeColoring2, k: usize, color: Color) -> bool {
    (0..c.n()).combinations(k).any(|s| s.iter().tuple_combinations().all(|(&a, &b)| c.get(a, b) == color))
}

#[test]
fn s_table_rows() {
    let expect: [[u64; 9]; 4] = [
        [1, 1, 1, 1, 1, 1, 1, 1, 1],
        [1, 2, 3, 4, 5, 6, 7, 8, 9],
        [1, 3, 6, 10, 15, 21, 28, 36, 45],
        [1, 4, 10, 20, 35, 56, 84, 120, 165],
    ];
    let t = s_table(4, 9);
    for m in 1..=4 {
        for n in 1..=9 {
            assert_eq!(t[m - 1][n - 1], BigUint::from(expect[m - 1][n - 1]));
            assert_eq!(s_value(m, n), choose((m + n - 2) as u64, (m - 1) as u64));
            if let Some(r) = known_r(m, n) {
                assert!(BigUint::from(r) <= s_value(m, n), "r({m},{n})");
                assert_eq!(known_r(n, m), Some(r));
            }
        }
    }
}

#[test]
fn r33_by_exhaustion() {
    let report = verify_r33();
    assert!(report.holds());
    assert_eq!(report.colorings_checked, 1 << 15);
    let check = verify_ramsey_value(3, 3, 6).unwrap();
    assert_eq!(check.upper_exhaustive, Some(true));
    let pentagon = circulant_coloring(5, &[1]).unwrap();
    assert!(!mono_exists(&pentagon, 3, Color::Red) && !mono_exists(&pentagon, 3, Color::Blue));
}

#[test]
fn circulant_witnesses() {
    let k17 = circulant_coloring(17, &[1, 2, 4, 8]).unwrap();
    assert!(!mono_exists(&k17, 4, Color::Red));
    assert!(!mono_exists(&k17, 4, Color::Blue));
    for (m, n, value) in [(3, 4, 9), (4, 3, 9), (3, 5, 14), (4, 4, 18), (2, 6, 6)] {
        let check = verify_ramsey_value(m, n, value).unwrap();
        let w = &check.lower_witness;
        assert_eq!(w.n(), value - 1);
        assert!(!mono_exists(w, m, Color::Blue), "({m},{n})");
        assert!(!mono_exists(w, n, Color::Red), "({m},{n})");
        assert!(check.holds());
    }
    assert!(verify_ramsey_value(3, 4, 8).is_err());
}

#[test]
fn lower_condition_matches_expectation() {
    for n in 1..=6usize {
        for r in 1..=30usize {
            let w = expected_mono(r, n);
            // independent form: 2 C(R, n) against 2^C(n,2)
            let direct = choose(r as u64, n as u64) * 2u32 < BigUint::from(1u32) << (n * (n - 1) / 2);
            assert_eq!(w < BigRational::one(), lower_condition(r, n), "R = {r}, n = {n}");
            assert_eq!(direct, lower_condition(r, n));
        }
    }
    for n in 2..=12 {
        let r = best_probabilistic_r(n).unwrap();
        assert!(lower_condition(r, n));
        assert!(!lower_condition(r + 1, n));
    }
}

#[test]
fn coin_tail_bounds() {
    for n in 1..=60 {
        assert!(markov_bound_check(n), "n = {n}");
    }
    for n in 1..=18usize {
        let hits = (0u32..1 << n).filter(|m| 3 * m.count_ones() as usize <= n).count();
        let expect = BigRational::new(BigInt::from(hits), BigInt::from(1u64 << n));
        assert_eq!(coin_tail(n), expect);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn clique_search_matches_subsets(mask in 0u64..1 << 21, k in 2usize..=4) {
        let c = EdgeColoring2::from_mask(7, mask);
        for color in [Color::Red, Color::Blue] {
            let found = has_mono_clique(&c, k, color);
            prop_assert_eq!(found.is_some(), mono_exists(&c, k, color));
            if let Some(s) = found {
                prop_assert_eq!(s.len(), k);
                prop_assert!(s.iter().tuple_combinations().all(|(&a, &b)| c.get(a, b) == color));
            }
        }
    }

    #[test]
    fn swap_exchanges_colors(mask in 0u64..1 << 21, k in 2usize..=4, v in 0usize..7) {
        let c = EdgeColoring2::from_mask(7, mask);
        let s = c.swapped();
        prop_assert_eq!(c.count(Color::Red), s.count(Color::Blue));
        prop_assert_eq!(has_mono_clique(&c, k, Color::Red).is_some(), has_mono_clique(&s, k, Color::Blue).is_some());
        prop_assert_eq!(
            has_mono_clique_through(&c, k, Color::Red, v).is_some(),
            (0..7).combinations(k).any(|set| set.contains(&v) && set.iter().tuple_combinations().all(|(&a, &b)| c.get(a, b) == Color::Red))
        );
    }

    #[test]
    fn circulants_are_rotation_invariant(n in 5usize..=16, shift in 0usize..16, bits in 1u32..256) {
        let chords: Vec<usize> = (1..=n / 2).filter(|d| bits >> (d - 1) & 1 == 1).collect();
        prop_assume!(!chords.is_empty());
        let c = circulant_coloring(n, &chords).unwrap();
        prop_assert_eq!(c.rotated(shift % n), c);
    }
}
