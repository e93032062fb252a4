use proptest::prelude::*;
use simplab::*;

const VARS: usize = 4;

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..5, VARS).prop_map(|v| Monomial::new(v).unwrap())
}

fn ideal() -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(), 0..6)
        .prop_map(|gens| MonomialIdeal::from_generators(VARS - 1, gens).unwrap())
}

fn spec() -> impl Strategy<Value = SimplicialSpec> {
    (1usize..=4)
        .prop_flat_map(|n| (Just(n), 1..=n))
        .prop_map(|(n, c)| SimplicialSpec::new(n, c).unwrap())
}

fn spec_and_monomial() -> impl Strategy<Value = (SimplicialSpec, Monomial)> {
    spec().prop_flat_map(|s| {
        let m =
            prop::collection::vec(0u32..7, s.num_vars()).prop_map(|v| Monomial::new(v).unwrap());
        (Just(s), m)
    })
}

proptest! {
    #[test]
    fn divides_is_a_partial_order(a in monomial(), b in monomial(), c in monomial()) {
        prop_assert!(a.divides(&a).unwrap());
        if a.divides(&b).unwrap() && b.divides(&a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if a.divides(&b).unwrap() && b.divides(&c).unwrap() {
            prop_assert!(a.divides(&c).unwrap());
        }
    }

    #[test]
    fn lcm_laws(a in monomial(), b in monomial(), c in monomial()) {
        let ab = a.lcm(&b).unwrap();
        prop_assert_eq!(&ab, &b.lcm(&a).unwrap());
        prop_assert_eq!(ab.lcm(&c).unwrap(), a.lcm(&b.lcm(&c).unwrap()).unwrap());
        prop_assert_eq!(a.lcm(&a).unwrap(), a.clone());
        prop_assert!(a.divides(&ab).unwrap() && b.divides(&ab).unwrap());
    }

    #[test]
    fn degree_is_additive(a in monomial(), b in monomial()) {
        prop_assert_eq!(a.mul(&b).unwrap().total_degree(), a.total_degree() + b.total_degree());
    }

    #[test]
    fn text_form_round_trips(a in monomial()) {
        prop_assert_eq!(Monomial::parse(&a.to_string(), VARS).unwrap(), a);
    }

    #[test]
    fn canonical_form_is_an_idempotent_antichain(i in ideal()) {
        let again = MonomialIdeal::from_generators(VARS - 1, i.generators().to_vec()).unwrap();
        prop_assert_eq!(&again, &i);
        let gens = i.generators();
        for (x, g) in gens.iter().enumerate() {
            for (y, h) in gens.iter().enumerate() {
                if x != y {
                    prop_assert!(!g.divides(h).unwrap());
                }
            }
        }
        prop_assert!(gens.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn serializations_round_trip(i in ideal()) {
        prop_assert_eq!(MonomialIdeal::from_text(VARS - 1, &i.to_text()).unwrap(), i.clone());
        prop_assert_eq!(MonomialIdeal::from_json(VARS - 1, &i.to_json()).unwrap(), i);
    }

    #[test]
    fn intersection_membership_law(i in ideal(), j in ideal(), m in monomial()) {
        let both = i.intersect(&j).unwrap();
        prop_assert_eq!(
            both.contains_monomial(&m).unwrap(),
            i.contains_monomial(&m).unwrap() && j.contains_monomial(&m).unwrap()
        );
    }

    #[test]
    fn sum_membership_law(i in ideal(), j in ideal(), m in monomial()) {
        prop_assert_eq!(
            i.add(&j).unwrap().contains_monomial(&m).unwrap(),
            i.contains_monomial(&m).unwrap() || j.contains_monomial(&m).unwrap()
        );
    }

    #[test]
    fn product_generators_are_products(i in ideal(), j in ideal()) {
        let prod = i.mul(&j).unwrap();
        for g in prod.generators() {
            let found = i.generators().iter().any(|a| {
                j.generators().iter().any(|b| &a.mul(b).unwrap() == g)
            });
            prop_assert!(found, "{} is not a product of generators", g);
        }
        prop_assert!(prod.is_subideal(&i.intersect(&j).unwrap()).unwrap());
    }

    #[test]
    fn subideal_is_a_partial_order(i in ideal(), j in ideal(), k in ideal()) {
        prop_assert!(i.is_subideal(&i).unwrap());
        if i.is_subideal(&j).unwrap() && j.is_subideal(&i).unwrap() {
            prop_assert!(i.equals(&j).unwrap());
        }
        if i.is_subideal(&j).unwrap() && j.is_subideal(&k).unwrap() {
            prop_assert!(i.is_subideal(&k).unwrap());
        }
        prop_assert!(i.is_subideal(&i.add(&j).unwrap()).unwrap());
        prop_assert!(i.intersect(&j).unwrap().is_subideal(&i).unwrap());
    }

    #[test]
    fn symbolic_shortcut_matches_subsets((s, a) in spec_and_monomial(), m in 1u32..8) {
        prop_assert_eq!(
            symbolic_member(s, m, &a).unwrap(),
            symbolic_member_by_subsets(s, m, &a).unwrap()
        );
    }

    #[test]
    fn symbolic_membership_matches_face_prime_intersection((s, a) in spec_and_monomial(), m in 1u32..4) {
        let oracle = symbolic_power_oracle(s, m, &Limits::default()).unwrap();
        prop_assert_eq!(symbolic_member(s, m, &a).unwrap(), oracle.contains_monomial(&a).unwrap());
    }

    #[test]
    fn ordinary_membership_matches_power((s, a) in spec_and_monomial(), r in 1u32..4) {
        let pow = simplicial_ideal(s).pow(r).unwrap();
        prop_assert_eq!(ordinary_member(s, r, &a).unwrap(), pow.contains_monomial(&a).unwrap());
    }

    #[test]
    fn ordinary_power_lies_in_symbolic_power(s in spec(), r in 1u32..4) {
        let pow = simplicial_ideal(s).pow(r).unwrap();
        let sym = symbolic_power(s, r, &Limits::default()).unwrap();
        prop_assert!(pow.is_subideal(&sym).unwrap());
    }

    #[test]
    fn m_above_rho_forces_containment(s in spec(), m in 1u32..40, r in 1u32..40) {
        if Rational::new(m.into(), r.into()) > resurgence(s) {
            prop_assert!(thm_a_predicate(s, m, r).unwrap());
        }
        if !thm_a_predicate(s, m, r).unwrap() {
            prop_assert!(Rational::new(m.into(), r.into()) < resurgence(s));
        }
    }
}
