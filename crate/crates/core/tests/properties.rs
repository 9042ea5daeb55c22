use proptest::prelude::*;

use sfdepth::family::{example1, example2, family_i, family_l};
use sfdepth::homology::{depth_ideal, SimplicialComplex};
use sfdepth::monomial::{full_mask, submasks};
use sfdepth::sdepth::{
    exists_partition_with, sdepth_upper_bound_mu, sdepth_with, validate_partition, MuBound, SearchConfig, SearchOutcome,
};
use sfdepth::verify::{enumerate_ideals, sample_ideals};
use sfdepth::{FieldSpec, Ideal, Monomial, Poset};

const GF2: FieldSpec = FieldSpec::GF2;

fn fields() -> [FieldSpec; 3] {
    [FieldSpec::GF2, FieldSpec::prime(3).unwrap(), FieldSpec::RATIONALS]
}

/// Random proper nonzero ideal in `lo..=hi` variables.
fn ideal_strategy(lo: usize, hi: usize) -> impl Strategy<Value = Ideal> {
    (lo..=hi)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(1..(1u32 << n), 1..=6)))
        .prop_map(|(n, masks)| Ideal::minimize(n, masks.into_iter().map(Monomial::from_mask)).unwrap())
}

fn all_ideals_up_to(n_max: usize) -> Vec<Ideal> {
    (1..=n_max).flat_map(|n| enumerate_ideals(n, 1).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn minimize_idempotent_and_order_free(n in 1usize..=10, masks in prop::collection::vec(0u32..1024, 0..8)) {
        let masks: Vec<u32> = masks.into_iter().map(|m| m & full_mask(n)).collect();
        let a = Ideal::minimize(n, masks.iter().map(|&m| Monomial::from_mask(m))).unwrap();
        let b = Ideal::minimize(n, masks.iter().rev().map(|&m| Monomial::from_mask(m))).unwrap();
        prop_assert_eq!(&a, &b);
        if !a.is_unit() {
            let again = Ideal::minimize(n, a.gens().iter().copied()).unwrap();
            prop_assert_eq!(&again, &a);
        }
        for (i, g) in a.gens().iter().enumerate() {
            for (j, h) in a.gens().iter().enumerate() {
                prop_assert!(i == j || !g.divides(*h));
            }
        }
    }

    #[test]
    fn membership_is_upward_closed(ideal in ideal_strategy(1, 10)) {
        let full = full_mask(ideal.n());
        for m in 0..=full {
            let m = Monomial::from_mask(m);
            if ideal.contains(m) {
                for v in 1..=ideal.n() {
                    prop_assert!(ideal.contains(m.lcm(Monomial::var(v))));
                }
            }
        }
    }

    #[test]
    fn rho_matches_poset(ideal in ideal_strategy(1, 10)) {
        let poset = Poset::of(&ideal).unwrap();
        let mut total = 0u128;
        for d in 0..=ideal.n() {
            let rho = ideal.rho(d).unwrap();
            let counted = poset.elements().iter().filter(|m| m.degree() == d).count() as u128;
            prop_assert_eq!(rho, counted);
            // each degree-d element contains exactly d variables
            let by_var: u128 = (1..=ideal.n())
                .map(|i| poset.elements().iter().filter(|m| m.degree() == d && m.contains_var(i)).count() as u128)
                .sum();
            prop_assert_eq!(by_var, d as u128 * rho);
            total += rho;
        }
        prop_assert_eq!(total, poset.len() as u128);
    }

    #[test]
    fn faces_and_ideal_split_every_restriction(ideal in ideal_strategy(1, 8)) {
        let delta = SimplicialComplex::stanley_reisner(&ideal).unwrap();
        for sigma in submasks(full_mask(ideal.n())) {
            let restricted = delta.restrict(Monomial::from_mask(sigma));
            for tau in submasks(sigma) {
                let tau = Monomial::from_mask(tau);
                prop_assert!(restricted.contains(tau) != ideal.contains(tau));
            }
        }
    }

    #[test]
    fn euler_characteristic_matches_faces(ideal in ideal_strategy(1, 7)) {
        let delta = SimplicialComplex::stanley_reisner(&ideal).unwrap();
        for sigma in submasks(full_mask(ideal.n())) {
            let r = delta.restrict(Monomial::from_mask(sigma));
            let from_faces: i64 = r
                .f_vector()
                .iter()
                .enumerate()
                .map(|(s, &c)| if s % 2 == 1 { c as i64 } else { -(c as i64) })
                .sum();
            for field in fields() {
                prop_assert_eq!(r.reduced_homology(field).euler_characteristic(), from_faces);
            }
        }
    }

    #[test]
    fn principal_ideals_are_free(n in 1usize..=10, mask in 1u32..1024) {
        let mask = mask & full_mask(n);
        prop_assume!(mask != 0);
        let ideal = Ideal::minimize(n, [Monomial::from_mask(mask)]).unwrap();
        prop_assert_eq!(depth_ideal(&ideal, GF2).unwrap(), n);
    }
}

#[test]
fn depth_at_least_min_degree_exhaustive() {
    for ideal in all_ideals_up_to(5) {
        let low = ideal.min_degree().unwrap();
        let depth = depth_ideal(&ideal, GF2).unwrap();
        assert!(depth >= low, "{ideal}: depth {depth} < {low}");
        assert!(depth <= ideal.n());
    }
}

#[test]
fn field_stability_on_fixtures() {
    let mut ideals = vec![example1(), example2()];
    for n in 3..=7 {
        ideals.push(family_l(n).unwrap());
        ideals.push(family_i(n).unwrap());
    }
    for ideal in ideals {
        let depths: Vec<usize> = fields().iter().map(|&f| depth_ideal(&ideal, f).unwrap()).collect();
        assert!(depths.windows(2).all(|w| w[0] == w[1]), "{ideal}: {depths:?}");
    }
}

#[test]
fn family_generators() {
    for n in 3..=12 {
        for (ideal, mu) in [(family_l(n).unwrap(), n - 1), (family_i(n).unwrap(), n)] {
            assert_eq!(ideal.mu(), mu, "{ideal}");
            assert_eq!(ideal.equigenerated_degree(), Some(n - 2));
        }
    }
}

#[test]
fn sdepth_search_properties() {
    for ideal in all_ideals_up_to(4) {
        let poset = Poset::of(&ideal).unwrap();
        let mut feasible = Vec::new();
        for d in 1..=ideal.n() {
            match exists_partition_with(&poset, d, SearchConfig::default()).unwrap() {
                SearchOutcome::Found(p) => {
                    assert!(validate_partition(&poset, &p).unwrap() >= d, "{ideal} d={d}");
                    feasible.push(true);
                }
                SearchOutcome::Infeasible => feasible.push(false),
                SearchOutcome::Unknown { .. } => panic!("no budget was set"),
            }
        }
        // feasible for a prefix of d values only
        assert!(feasible.windows(2).all(|w| w[0] || !w[1]), "{ideal}: {feasible:?}");
        let outcome = sdepth_with(&ideal, SearchConfig::default()).unwrap();
        let value = outcome.value().unwrap();
        assert_eq!(value, feasible.iter().filter(|&&f| f).count());
        assert!(value >= ideal.min_degree().unwrap() && value <= ideal.n());
        assert_eq!(validate_partition(&poset, outcome.witness()).unwrap(), value);
    }
}

#[test]
fn mu_bound_agrees_with_search() {
    let mut ideals = all_ideals_up_to(5);
    ideals.extend(sample_ideals(6, 300, 11, 1).unwrap());
    let mut applied = 0;
    for ideal in ideals {
        if let MuBound::Equals(d) = sdepth_upper_bound_mu(&ideal) {
            applied += 1;
            let full = sdepth_with(&ideal, SearchConfig::full()).unwrap().value();
            assert_eq!(full, Some(d), "{ideal}");
        }
    }
    assert!(applied > 0);
}
