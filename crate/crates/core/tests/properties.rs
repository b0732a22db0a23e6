use num_rational::BigRational;
use proptest::prelude::*;

use grdual_core::amodel::val;
use grdual_core::polytope::{equal_polytopes, hull, integer_point, lattice_points, pl_mutate, MutationMapSpec, Polytope};
use grdual_core::{LaurentPoly, Monomial, Partition, VPolytope, Var};

fn labels() -> Vec<Partition> {
    ["1", "2", "1,1", "2,2"].iter().map(|s| Partition::parse(s).unwrap()).collect()
}

fn vars() -> Vec<Var> {
    labels().into_iter().map(Var::X).collect()
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, prop::collection::vec(-2i32..=2, 4)), 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, e)| LaurentPoly::term(c, Monomial::from_exponents(vars().into_iter().zip(e))))
            .sum()
    })
}

fn positive_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((1i64..=4, prop::collection::vec(-2i32..=2, 4)), 1..5).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, e)| LaurentPoly::term(c, Monomial::from_exponents(vars().into_iter().zip(e))))
            .sum()
    })
}

fn cloud(dim: usize) -> impl Strategy<Value = VPolytope> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, dim), 1..8)
        .prop_map(move |pts| VPolytope::from_integer_points(labels()[..dim].to_vec(), &pts))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in poly(), g in poly(), h in poly()) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn exact_division_undoes_multiplication(f in poly(), g in positive_poly()) {
        let fg = &f * &g;
        prop_assert_eq!(fg.exact_div(&g).unwrap(), f);
    }

    #[test]
    fn text_round_trip(f in poly()) {
        prop_assert_eq!(LaurentPoly::parse(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn valuations_are_additive(f in positive_poly(), g in positive_poly()) {
        let order = vars();
        let sum: Vec<i32> = val(&f, &order).unwrap().iter().zip(val(&g, &order).unwrap()).map(|(a, b)| a + b).collect();
        prop_assert_eq!(val(&(&f * &g), &order).unwrap(), sum);
    }

    #[test]
    fn hull_is_idempotent_and_contains_its_points(p in cloud(3)) {
        let h = hull(&p).unwrap();
        let again = hull(&h.vertices).unwrap();
        prop_assert_eq!(&again.vertices, &h.vertices);
        for q in &p.points {
            prop_assert!(h.facets.contains(q));
        }
        let eq = equal_polytopes(&Polytope::V(p.clone()), &Polytope::H(h.facets.clone())).unwrap();
        prop_assert!(eq.equal);
    }

    #[test]
    fn lattice_points_include_integer_inputs(p in cloud(2)) {
        let h = hull(&p).unwrap();
        let pts = lattice_points(&h.facets).unwrap();
        for q in &p.points {
            let ints: Vec<i64> = q.iter().map(|x| i64::try_from(x.to_integer()).unwrap()).collect();
            prop_assert!(pts.contains(&ints));
        }
        for q in &pts {
            prop_assert!(h.facets.contains(&integer_point(q)));
        }
    }

    #[test]
    fn tropical_mutation_is_an_involution(pts in prop::collection::vec(prop::collection::vec(-5i64..=5, 4), 1..10)) {
        let coords = labels();
        let spec = MutationMapSpec {
            mu1: coords[1].clone(),
            mu1_prime: Partition::parse("3").unwrap(),
            neighbors: [Some(coords[0].clone()), Some(coords[3].clone()), None, Some(coords[2].clone())],
        };
        let points: Vec<Vec<BigRational>> = pts.iter().map(|p| integer_point(p)).collect();
        let (c1, p1) = pl_mutate(&coords, &points, &spec).unwrap();
        let (c2, p2) = pl_mutate(&c1, &p1, &spec.reversed()).unwrap();
        prop_assert_eq!(c2, coords);
        prop_assert_eq!(p2, points);
        prop_assert!(p1.iter().flatten().all(|x| x.is_integer()));
    }
}
