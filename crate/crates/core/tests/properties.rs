use ballconv::lab::{Example4Oracle, Membership};
use ballconv::rational::ratio;
use ballconv::*;
use num_traits::One;
use proptest::prelude::*;

const NORMS: [&str; 5] = ["linf:2", "l1:2", "linf:3", "l1:3", "regular:8"];

fn coord() -> impl Strategy<Value = Rational> {
    (-8i64..=8).prop_map(|k| ratio(k, 8))
}

fn point(dim: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(coord(), dim).prop_map(Vector::new)
}

fn points(dim: usize, max: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(point(dim), 1..=max)
}

/// A norm together with a small point set in its dimension.
fn norm_and_points(max: usize) -> impl Strategy<Value = (NormBody, Vec<Vector>)> {
    (0..NORMS.len()).prop_flat_map(move |i| {
        let norm = make_norm(NORMS[i]).unwrap();
        let dim = norm.dim();
        (Just(norm), points(dim, max))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn both_representations_agree((norm, pts) in norm_and_points(6)) {
        let p = Polytope::from_points(&pts, norm.dim()).unwrap();
        if p.is_full_dimensional() {
            let q = Polytope::from_halfspaces(p.hrep(), norm.dim()).unwrap();
            prop_assert!(polytope_equal(&p, &q).unwrap());
        }
        for x in &pts {
            prop_assert!(p.contains(x));
        }
    }

    #[test]
    fn lp_matches_vertex_scan((norm, pts) in norm_and_points(6), c in prop::collection::vec(-3i64..=3, 3)) {
        let p = Polytope::from_points(&pts, norm.dim()).unwrap();
        let c = Vector::from_ints(&c[..norm.dim()]);
        let sol = lp_solve(&c, p.hrep(), Sense::Max).unwrap();
        let best = p.vertices().iter().map(|v| c.dot(v)).max().unwrap();
        prop_assert_eq!(&sol.value, &best);
        prop_assert!(p.contains(&sol.argpoint));
    }

    #[test]
    fn norm_axioms((norm, pts) in norm_and_points(3), k in -4i64..=4) {
        let x = &pts[0];
        let y = pts.last().unwrap();
        let nx = norm.eval(x).unwrap();
        prop_assert_eq!(norm.eval(&-x).unwrap(), nx.clone());
        prop_assert_eq!(norm.eval(&x.scale(&ratio(k, 1))).unwrap(), nx.clone() * ratio(k.abs(), 1));
        prop_assert!(norm.eval(&(x + y)).unwrap() <= nx + norm.eval(y).unwrap());
    }

    #[test]
    fn center_set_is_the_set_of_admissible_centers((norm, pts) in norm_and_points(4), probe in point(3)) {
        let probe = Vector::new(probe.coords()[..norm.dim()].to_vec());
        let c = center_set(&norm, &pts).unwrap();
        let admissible = pts.iter().all(|s| norm.dist(s, &probe) <= Rational::one());
        prop_assert_eq!(c.polytope.map_or(false, |p| p.contains(&probe)), admissible);
    }

    #[test]
    fn hull_contains_generators_and_is_idempotent((norm, pts) in norm_and_points(4)) {
        let h = ball_hull(&norm, &pts).unwrap();
        if let Hull::Body(b) = &h.hull {
            for x in &pts {
                prop_assert!(b.contains(x));
            }
            prop_assert_eq!(&ball_hull_of(&norm, b).unwrap().hull, &h.hull);
            prop_assert!(is_b_convex(&norm, b).unwrap());
        } else {
            prop_assert!(h.center_set.polytope.is_none());
        }
    }

    #[test]
    fn hull_is_monotone((norm, pts) in norm_and_points(5), split in 1usize..5) {
        let k = split.min(pts.len());
        let small = ball_hull(&norm, &pts[..k]).unwrap().hull;
        let big = ball_hull(&norm, &pts).unwrap().hull;
        match (small, big) {
            (Hull::Body(a), Hull::Body(b)) => prop_assert!(b.contains_polytope(&a)),
            (Hull::WholeSpace, Hull::Body(_)) => prop_assert!(false, "smaller set has the larger hull"),
            _ => {}
        }
    }

    #[test]
    fn circumradius_bounds((norm, pts) in norm_and_points(5)) {
        let c = circumball(&norm, &pts).unwrap();
        let d = diam(&norm, &pts).unwrap();
        let n = norm.dim() as i64;
        prop_assert!(&d / ratio(2, 1) <= c.radius);
        prop_assert!(c.radius <= &d * ratio(n, n + 1));
        for s in &pts {
            prop_assert!(norm.dist(s, &c.witness_center) <= c.radius);
        }
    }

    #[test]
    fn separation_certificates_verify((norm, pts) in norm_and_points(3), far in point(3)) {
        let far = Vector::new(far.coords()[..norm.dim()].iter().map(|x| x * ratio(3, 1)).collect());
        let Hull::Body(body) = ball_hull(&norm, &pts).unwrap().hull else { return Ok(()) };
        if !body.contains(&far) {
            let c = separate_point(&norm, &body, &far).unwrap();
            prop_assert!(c.verify(&norm, &body).is_ok());
            if is_b_bounded(&norm, body.vertices()).unwrap() {
                let s = separate_point_strict(&norm, &body, &far).unwrap();
                prop_assert!(s.shrink_radius.unwrap() < Rational::one());
            }
        }
        let v = body.vertices()[0].clone();
        let c = supporting_sphere_at(&norm, &body, &v).unwrap();
        prop_assert_eq!(norm.dist(&v, &c.y0), Rational::one());
    }

    #[test]
    fn repeating_a_point_keeps_the_hull((norm, pts) in norm_and_points(3)) {
        let mut more = pts.clone();
        more.push(pts[0].clone());
        prop_assert_eq!(ball_hull(&norm, &pts).unwrap().hull, ball_hull(&norm, &more).unwrap().hull);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn oracle_is_symmetric(x in prop::array::uniform4(-1.5f64..1.5)) {
        let o = Example4Oracle::default();
        let neg = [-x[0], -x[1], -x[2], -x[3]];
        prop_assert!((o.gauge(x) - o.gauge(neg)).abs() < 1e-9);
    }

    #[test]
    fn oracle_midpoints_of_members_are_members(
        x in prop::array::uniform4(-0.6f64..0.6),
        y in prop::array::uniform4(-0.6f64..0.6),
    ) {
        let o = Example4Oracle::default();
        if o.membership(x) == Membership::In && o.membership(y) == Membership::In {
            let m = [(x[0] + y[0]) / 2.0, (x[1] + y[1]) / 2.0, (x[2] + y[2]) / 2.0, (x[3] + y[3]) / 2.0];
            prop_assert!(o.membership(m).is_member());
        }
    }
}
