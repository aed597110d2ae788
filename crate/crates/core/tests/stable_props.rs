use proptest::prelude::*;
use sqfree_core::*;

fn mono_from(n: usize, bits: u64) -> SquarefreeMonomial {
    SquarefreeMonomial::from_bits(n, bits & ((1u64 << n) - 1)).unwrap()
}

/// Random equal-degree sets over `n` variables.
fn equal_degree_set() -> impl Strategy<Value = (usize, Vec<SquarefreeMonomial>)> {
    (2usize..=7).prop_flat_map(|n| (1..n).prop_flat_map(move |d| {
        let one = prop::sample::subsequence((1..=n).collect::<Vec<_>>(), d)
            .prop_map(move |s| SquarefreeMonomial::new(n, &s).unwrap());
        (Just(n), prop::collection::vec(one, 1..5))
    }))
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]
    #[test]
    fn closure_is_idempotent_monotone_and_strongly_stable((n, set) in equal_degree_set()) {
        let closed = strongly_stable_closure(&set).unwrap();
        prop_assert_eq!(strongly_stable_closure(&closed).unwrap(), closed.clone());
        prop_assert!(set.iter().all(|u| closed.contains(u)));
        let smaller = strongly_stable_closure(&set[..1]).unwrap();
        prop_assert!(smaller.is_subset(&closed));
        let ideal = minimal_generators(n, closed.iter().copied()).unwrap();
        prop_assert!(classify(&ideal).is_strongly_stable);
        // Every member is Borel-below some seed.
        prop_assert!(closed.iter().all(|w| set.iter().any(|u| w.borel_le(u))));
    }

    #[test]
    fn restricted_shadow_minimum_comes_from_the_lowest_seed(
        (n, set) in equal_degree_set(), k_pick in 0usize..8, l_pick in 0usize..8,
    ) {
        let l1 = set[0].degree();
        prop_assume!(l1 < n);
        let l2 = l1 + 1 + l_pick % (n - l1);
        let lowest_max = set.iter().map(|u| u.max_index()).min().unwrap();
        prop_assume!(lowest_max > l1);
        let k2 = k_pick % (lowest_max - l1).min(n - l2 + 1);
        let full = bshad(&set, k2, l2).unwrap();
        let lowest = set.iter().min().unwrap();
        match min_bshad(lowest, k2, l2) {
            Ok(v) => prop_assert_eq!(full.first(), Some(&v)),
            Err(_) => prop_assert!(full.is_empty()),
        }
        let closed = strongly_stable_closure(&set).unwrap();
        for z in &full {
            prop_assert!(z.max_index() <= k2 + l2);
            prop_assert!(closed.iter().any(|y| y.divides(z)));
        }
    }
}

#[test]
fn borel_shadow_membership_matches_divisibility() {
    for n in 1..=7 {
        for ub in 1u64..1 << n {
            let u = mono_from(n, ub);
            let closed = strongly_stable_closure([&u]).unwrap();
            for zb in 0u64..1 << n {
                let z = mono_from(n, zb);
                let brute = closed.iter().any(|y| y.divides(&z));
                assert_eq!(borel_shadow_contains(&u, &z), brute, "{u} / {z}");
            }
        }
    }
}

#[test]
fn shad_power_iterates_shadow() {
    let n = 7;
    let u = SquarefreeMonomial::new(n, &[2, 5]).unwrap();
    let closed = strongly_stable_closure([&u]).unwrap();
    let mut layer = closed.clone();
    for i in 0..=n {
        assert_eq!(shad_power(&closed, i).unwrap(), layer);
        layer = shadow(&layer).unwrap();
    }
}

#[test]
fn lex_implies_strongly_stable_implies_stable() {
    for n in 1..=5 {
        strongly_stable_towers(n, 1, &mut |ideal, _| {
            let c = classify(ideal);
            assert!(c.is_strongly_stable && c.is_stable);
        })
        .unwrap();
    }
    // Every squarefree monomial ideal in 4 variables.
    let n = 4;
    let subsets: Vec<u64> = (1u64..1 << n).collect();
    for choice in 1u64..1 << subsets.len() {
        let gens = subsets
            .iter()
            .enumerate()
            .filter(|(i, _)| choice >> i & 1 == 1)
            .map(|(_, &b)| mono_from(n, b));
        let ideal = minimal_generators(n, gens).unwrap();
        let c = classify(&ideal);
        assert!(!c.is_lex || c.is_strongly_stable, "{:?}", ideal.generators());
        assert!(!c.is_strongly_stable || c.is_stable, "{:?}", ideal.generators());
        assert_eq!(c.is_stable, stable_violation(&ideal).is_none());
        if let Some(w) = strongly_stable_violation(&ideal) {
            assert!(!ideal.contains(&w.result));
            assert_eq!(w.generator.exchange(w.removed, w.added), Some(w.result));
        }
    }
}

#[test]
fn minimal_generators_drop_multiples() {
    let n = 5;
    let gens = [vec![1, 2], vec![1, 2, 3], vec![2, 3], vec![1, 2, 3, 4]];
    let ideal = minimal_generators(n, gens.iter().map(|g| SquarefreeMonomial::new(n, g).unwrap())).unwrap();
    let got: Vec<Vec<usize>> = ideal.generators().iter().map(|u| u.support_vec()).collect();
    assert_eq!(got, [vec![1, 2], vec![2, 3]]);
    let other = SquarefreeMonomial::new(6, &[1]).unwrap();
    assert!(minimal_generators(n, [other]).is_err());
}
