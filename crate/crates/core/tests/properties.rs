use hagge_core::areal::{
    circle_through, circumcircle_value, collinear, join, meet, on_circle, on_circumcircle, polar,
    second_intersection, tangent_at, ArealLine, ArealPoint, TriangleParams,
};
use hagge_core::construct::{run, StartKind, StartingPoint};
use hagge_core::reflect::{reflect, Side};
use hagge_core::scalar::{Field, Monomial, Poly, RatFunc, Rational, Var};
use hagge_core::verify::{check_all, CheckStatus};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(200)
}

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn triangle() -> impl Strategy<Value = TriangleParams<Rational>> {
    (1i64..=40, 1i64..=40, 1i64..=40)
        .prop_map(|(a, b, c)| TriangleParams::new(a.into(), b.into(), c.into()))
        .prop_filter("valid non-right triangle", Result::is_ok)
        .prop_map(Result::unwrap)
}

fn any_point() -> impl Strategy<Value = ArealPoint<Rational>> {
    (-30i64..=30, -30i64..=30, -30i64..=30)
        .prop_filter("nonzero", |&(x, y, z)| (x, y, z) != (0, 0, 0))
        .prop_map(|(x, y, z)| ArealPoint::from_ints(x, y, z).unwrap())
}

fn finite_point() -> impl Strategy<Value = ArealPoint<Rational>> {
    any_point().prop_filter("finite", |p| !p.coordinate_sum().is_zero())
}

fn interior_point() -> impl Strategy<Value = ArealPoint<Rational>> {
    (1i64..=30, 1i64..=30, 1i64..=30).prop_map(|(x, y, z)| ArealPoint::from_ints(x, y, z).unwrap())
}

fn side() -> impl Strategy<Value = Side> {
    prop_oneof![Just(Side::Bc), Just(Side::Ca), Just(Side::Ab)]
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-6i64..=6, 0u16..3, 0u16..3), 1..4).prop_map(|terms| {
        Poly::from_terms(terms.into_iter().map(|(c, i, j)| {
            (
                Monomial::var(Var::Sa, i).mul(&Monomial::var(Var::Sb, j)),
                BigInt::from(c),
            )
        }))
    })
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn at(a: i64, b: i64) -> [BigRational; 6] {
    let mut v: [BigRational; 6] = core::array::from_fn(|_| BigRational::zero());
    v[Var::Sa.index()] = BigRational::from_integer(a.into());
    v[Var::Sb.index()] = BigRational::from_integer(b.into());
    v
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn rational_field_axioms(x in rational(), y in rational(), z in rational()) {
        prop_assert_eq!(x.clone() + &y, y.clone() + &x);
        prop_assert_eq!(x.clone() * &y, y.clone() * &x);
        prop_assert_eq!((x.clone() + &y) + &z, x.clone() + &(y.clone() + &z));
        prop_assert_eq!(x.clone() * &(y.clone() + &z), x.clone() * &y + &(x.clone() * &z));
        prop_assert_eq!(x.clone() - &x, Rational::zero());
        if !y.is_zero() {
            prop_assert_eq!(x.try_div(&y).unwrap() * &y, x.clone());
        } else {
            prop_assert!(x.try_div(&y).is_err());
        }
    }

    #[test]
    fn ratfunc_field_axioms(x in ratfunc(), y in ratfunc(), z in ratfunc()) {
        prop_assert_eq!(x.clone() + &y, y.clone() + &x);
        prop_assert_eq!(x.clone() * &(y.clone() + &z), x.clone() * &y + &(x.clone() * &z));
        prop_assert!((x.clone() - &x).is_zero());
        if !y.is_zero() {
            prop_assert_eq!(x.try_div(&y).unwrap() * &y, x.clone());
        }
    }

    /// Evaluation at a point is a ring homomorphism wherever it is defined.
    #[test]
    fn evaluation_commutes_with_arithmetic(x in ratfunc(), y in ratfunc(), a in -7i64..=7, b in -7i64..=7) {
        let v = at(a, b);
        let (Ok(ex), Ok(ey)) = (x.eval(&v), y.eval(&v)) else { return Ok(()); };
        prop_assert_eq!((x.clone() + &y).eval(&v).unwrap(), ex.clone() + &ey);
        prop_assert_eq!((x.clone() - &y).eval(&v).unwrap(), ex.clone() - &ey);
        prop_assert_eq!((x.clone() * &y).eval(&v).unwrap(), ex.clone() * &ey);
    }

    #[test]
    fn reflection_is_an_involution(t in triangle(), p in any_point(), s in side()) {
        let r = reflect(s, &t, &p);
        prop_assert!(reflect(s, &t, &r).eq_projective(&p));
        prop_assert_eq!(r.coordinate_sum(), p.coordinate_sum());
    }

    #[test]
    fn midpoint_of_a_reflection_lies_on_the_mirror(t in triangle(), p in finite_point(), s in side()) {
        let r = reflect(s, &t, &p);
        let (a, b) = (p.unit_sum().unwrap(), r.unit_sum().unwrap());
        let mid = [0, 1, 2].map(|i| a[i].clone() + &b[i]);
        let k = match s { Side::Bc => 0, Side::Ca => 1, Side::Ab => 2 };
        prop_assert!(mid[k].is_zero());
    }

    #[test]
    fn join_and_meet_are_dual(p in any_point(), q in any_point(), r in any_point()) {
        prop_assume!(!collinear(&p, &q, &r));
        let pq = join(&p, &q).unwrap();
        let pr = join(&p, &r).unwrap();
        prop_assert!(meet(&pq, &pr).unwrap().eq_projective(&p));
        prop_assert!(pq.contains(&p) && pq.contains(&q));
    }

    #[test]
    fn second_intersection_round_trip(t in triangle(), p in interior_point()) {
        let a = ArealPoint::vertex_a();
        let x = second_intersection(&t, &a, &p).unwrap();
        prop_assert!(on_circumcircle(&t, &x));
        prop_assert!(second_intersection(&t, &x, &p).unwrap().eq_projective(&a));
        prop_assert!(second_intersection(&t, &x, &a).unwrap().eq_projective(&a));
    }

    #[test]
    fn tangent_meets_the_circle_once(t in triangle(), p in interior_point(), k in 1i64..=9) {
        let x = second_intersection(&t, &ArealPoint::vertex_b(), &p).unwrap();
        let tangent = tangent_at(&t, &x).unwrap();
        prop_assert!(tangent.eq_projective(&polar(&t, &x)));
        // a second point on the tangent, then back along it
        let other = meet(&tangent, &ArealLine::from_ints(1, k, -1).unwrap());
        prop_assume!(other.is_ok());
        let other = other.unwrap();
        prop_assume!(!other.eq_projective(&x));
        prop_assert!(second_intersection(&t, &x, &other).unwrap().eq_projective(&x));
        prop_assert!(!circumcircle_value(&t, &other).is_zero());
    }

    #[test]
    fn fitted_circle_contains_its_points(t in triangle(), p in finite_point(), q in finite_point(), r in finite_point()) {
        prop_assume!(!collinear(&p, &q, &r));
        let c = circle_through(&t, &p, &q, &r).unwrap();
        for x in [&p, &q, &r] {
            prop_assert!(on_circle(&t, &c, x));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn every_instance_passes(t in triangle(), p in interior_point()) {
        let start = StartingPoint::classify(&t, p).unwrap();
        prop_assume!(!matches!(start.kind(), StartKind::Orthocentre | StartKind::Symmedian));
        // Q can land on a vertex for special points, which stops the run
        let r = run(&t, start);
        prop_assume!(r.is_ok());
        let report = check_all(&r.unwrap());
        for rec in &report.checks {
            prop_assert_ne!(rec.status, CheckStatus::Fail, "{}: {}", rec.id, rec.detail);
        }
    }

    #[test]
    fn scaling_the_triangle_or_the_point_changes_nothing(t in triangle(), p in interior_point(), k in 2i64..=7) {
        let start = StartingPoint::classify(&t, p.clone()).unwrap();
        prop_assume!(!matches!(start.kind(), StartKind::Orthocentre | StartKind::Symmedian));
        let base = run(&t, start);
        prop_assume!(base.is_ok());
        let base = base.unwrap();

        let kq = Rational::from(k);
        let scaled_t = t.map(|s| s.clone() * &kq);
        let by_t = run(&scaled_t, StartingPoint::classify(&scaled_t, p.clone()).unwrap()).unwrap();
        let by_p = run(&t, StartingPoint::classify(&t, p.scaled(&kq)).unwrap()).unwrap();
        for ((label, x), ((_, y), (_, z))) in base.named_points().iter().zip(by_t.named_points().iter().zip(by_p.named_points().iter())) {
            prop_assert!(x.eq_projective(y), "{} under triangle scaling", label);
            prop_assert_eq!(x, z, "{} under point scaling", label);
        }
    }

    #[test]
    fn runs_are_deterministic(t in triangle(), p in interior_point()) {
        let start = StartingPoint::classify(&t, p).unwrap();
        prop_assume!(!matches!(start.kind(), StartKind::Orthocentre | StartKind::Symmedian));
        let a = run(&t, start.clone()).map(|r| check_all(&r));
        let b = run(&t, start).map(|r| check_all(&r));
        prop_assert_eq!(a.is_ok(), b.is_ok());
        if let (Ok(a), Ok(b)) = (a, b) {
            prop_assert_eq!(a, b);
        }
    }
}
