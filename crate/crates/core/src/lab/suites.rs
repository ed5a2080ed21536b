//! Deterministic verification suites over seeded random and fixed instances.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use num_traits::{One, Zero};

use super::example1::verify_example1;
use super::example4::{verify_e1, verify_e2, OracleReport, CONCLUSION};
use super::fixtures::{fixtures, hexagon_vertices};
use super::random::{random_b_bounded_body, InstanceRng};
use crate::completeness::{completion_report, has_diametral_partners, is_complete, minimal_generators, subsets};
use crate::error::{GeomError, Result};
use crate::hull::{ball_hull, ball_hull_of, circumball, circumsphere_restriction, is_b_convex, jung_pair_factor, Hull};
use crate::lp::{lp_solve, Sense};
use crate::norm::{diam, make_norm, strictness_witness, NormBody};
use crate::polytope::{face_lattice, Polytope};
use crate::rational::{format_rational, int, ratio, to_f64, Rational};
use crate::separation::{
    b_exposed_points, exposed_b_faces, generates_hull, separate_point, separate_point_strict, supporting_sphere_at,
    CertificateKind, SeparationCertificate,
};
use crate::spindle::{k_spindle_probe, k_spindle_search, ProbeStatus};
use crate::vector::Vector;

/// Random instances per suite.
const INSTANCES: usize = 120;
/// Tolerance for the area trend of planar spindles.
const AREA_TREND_TOLERANCE: f64 = 5e-2;

pub const SUITE_NAMES: [&str; 12] = [
    "lemma1",
    "ineq1a",
    "lemma2",
    "prop1",
    "prop2-witness",
    "thm3",
    "prop4",
    "example1",
    "example2",
    "example4",
    "spindle",
    "kernel",
];

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            checks: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn guard<T>(&mut self, what: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(t) => Some(t),
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{what}: {e}"));
                None
            }
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn absorb_oracle(&mut self, label: &str, o: &OracleReport) {
        self.checks += o.checks;
        self.failures.extend(o.failures.iter().map(|f| format!("{label}: {f}")));
        self.note(format!(
            "{label}: {} checks, tolerance {:e}, smallest exclusion margin {:.3e}, largest inclusion excess {:.3e}",
            o.checks, o.tolerance, o.min_exclusion_margin, o.max_inclusion_excess
        ));
    }
}

pub fn run_suite(name: &str) -> Result<SuiteReport> {
    Ok(match name {
        "lemma1" => hull_algebra_suite(),
        "ineq1a" => radius_bounds_suite(),
        "lemma2" => circumsphere_suite(),
        "prop1" => separation_suite(),
        "prop2-witness" => strictness_suite(),
        "thm3" => generating_set_suite(),
        "prop4" => completion_suite(),
        "example1" => segment_separation_suite(),
        "example2" => square_faces_suite(),
        "example4" => four_dim_suite(),
        "spindle" => spindle_suite(),
        "kernel" => kernel_oracle_suite(),
        _ => return Err(GeomError::InvalidArgument(format!("unknown suite {name:?}"))),
    })
}

pub fn run_all() -> Vec<SuiteReport> {
    SUITE_NAMES.iter().map(|n| run_suite(n).expect("known suite")).collect()
}

fn norms(names: &[&str]) -> Vec<NormBody> {
    names.iter().map(|n| make_norm(n).expect("built-in norm")).collect()
}

fn show(points: &[Vector]) -> String {
    points.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

/// Membership decided from the center-set vertices alone.
fn hull_member_by_centers(norm: &NormBody, centers: Option<&Polytope>, x: &Vector) -> bool {
    match centers {
        None => true,
        Some(c) => c.vertices().iter().all(|v| norm.dist(x, v) <= Rational::one()),
    }
}

/// Idempotence, monotonicity, hulls of balls, radius preservation and a
/// brute-force membership comparison.
pub fn hull_algebra_suite() -> SuiteReport {
    let mut r = SuiteReport::new("lemma1");
    let all = norms(&["linf:2", "l1:2", "linf:3", "l1:3"]);
    let mut rng = InstanceRng::new(101);
    let (lo, hi) = (int(-1), int(1));
    let radii = [int(0), ratio(1, 2), int(1)];
    let mut probes = 0usize;
    for i in 0..INSTANCES {
        let norm = &all[i % all.len()];
        let n = norm.dim();
        let count = 1 + rng.index(4);
        let s = rng.points(n, count, &lo, &hi, 4);
        let extra = 1 + rng.index(2);
        let mut t = s.clone();
        t.extend(rng.points(n, extra, &lo, &hi, 4));
        let (Some(hs), Some(ht)) = (r.guard("hull", ball_hull(norm, &s)), r.guard("hull", ball_hull(norm, &t))) else {
            continue;
        };
        let nested = match (&hs.hull, &ht.hull) {
            (Hull::Body(a), Hull::Body(b)) => b.contains_polytope(a),
            (Hull::WholeSpace, Hull::Body(_)) => false,
            (_, Hull::WholeSpace) => true,
        };
        r.check(nested, || format!("{}: hull not monotone for {}", norm.name(), show(&s)));

        if let Hull::Body(h) = &hs.hull {
            if let Some(again) = r.guard("hull of hull", ball_hull_of(norm, h)) {
                r.check(again.hull == hs.hull, || format!("{}: hull not idempotent for {}", norm.name(), show(&s)));
            }
        }

        if let Some(c) = r.guard("circumball", circumball(norm, &s)) {
            if c.radius <= Rational::one() {
                let same = match &hs.hull {
                    Hull::Body(h) => circumball(norm, h.vertices()).map(|ch| ch.radius == c.radius).unwrap_or(false),
                    Hull::WholeSpace => false,
                };
                r.check(same, || format!("{}: hull changed the circumradius of {}", norm.name(), show(&s)));
            }
        }

        let center = rng.point(n, &lo, &hi, 4);
        let radius = &radii[i % radii.len()];
        if let Some(ball) = r.guard("ball", norm.ball_polytope(&center, radius)) {
            let same = ball_hull_of(norm, &ball).map(|b| b.hull == Hull::Body(ball.clone()));
            r.check(same == Ok(true), || format!("{}: ball of radius {radius} at {center} not b-convex", norm.name()));
        }

        if n == 2 {
            let mut pool = rng.points(2, 8, &ratio(-3, 2), &ratio(3, 2), 8);
            pool.extend(s.iter().cloned());
            if let Hull::Body(h) = &hs.hull {
                pool.extend(h.vertices().iter().cloned());
            }
            for p in pool {
                probes += 1;
                let direct = hull_member_by_centers(norm, hs.center_set.polytope.as_ref(), &p);
                r.check(hs.hull.contains(&p) == direct, || {
                    format!("{}: membership of {p} disagrees for {}", norm.name(), show(&s))
                });
            }
        }
    }
    r.note(format!("{probes} planar membership probes compared against the center-set definition"));

    let linf = make_norm("linf:2").expect("built-in");
    let origin = Vector::zeros(2);
    let boxes: Vec<Polytope> = [ratio(1, 4), ratio(1, 2), int(1)]
        .iter()
        .map(|side| Polytope::from_box(&origin, &Vector::new(vec![side.clone(), side.clone()])).expect("box"))
        .collect();
    let hulls: Vec<Hull> = boxes.iter().map(|b| ball_hull_of(&linf, b).expect("hull").hull).collect();
    for w in hulls.windows(2) {
        let ok = matches!((&w[0], &w[1]), (Hull::Body(a), Hull::Body(b)) if b.contains_polytope(a));
        r.check(ok, || "nested boxes give non-nested hulls".into());
    }
    r.check(is_b_convex(&linf, &boxes[2]) == Ok(true), || "unit box not b-convex".into());
    r.check(hulls[2] == Hull::Body(boxes[2].clone()), || "unit box differs from its hull".into());
    r
}

/// `diam/2 <= rad <= n/(n+1) diam`, plus a search for sets attaining the upper bound.
pub fn radius_bounds_suite() -> SuiteReport {
    let mut r = SuiteReport::new("ineq1a");
    let all = norms(&["linf:2", "l1:2", "linf:3", "l1:3"]);
    let mut rng = InstanceRng::new(202);
    for i in 0..INSTANCES {
        let norm = &all[i % all.len()];
        let n = norm.dim() as i64;
        let count = 2 + rng.index(5);
        let pts = rng.points(norm.dim(), count, &int(-1), &int(1), 4);
        let (Some(d), Some(c)) = (r.guard("diam", diam(norm, &pts)), r.guard("circumball", circumball(norm, &pts))) else {
            continue;
        };
        let lower = &d / int(2);
        let upper = &d * ratio(n, n + 1);
        r.check(lower <= c.radius && c.radius <= upper, || {
            format!("{}: rad {} outside [{lower}, {upper}] for {}", norm.name(), c.radius, show(&pts))
        });
    }

    let grid = half_grid();
    for name in ["linf:2", "l1:2"] {
        let norm = make_norm(name).expect("built-in");
        let mut found = None;
        for size in 2..=3 {
            for idx in subsets(grid.len(), size) {
                let pts: Vec<Vector> = idx.iter().map(|&i| grid[i].clone()).collect();
                let d = diam(&norm, &pts).expect("points");
                if d.is_zero() {
                    continue;
                }
                if circumball(&norm, &pts).expect("points").radius == &d * ratio(2, 3) {
                    found = Some(pts);
                    break;
                }
            }
        }
        r.note(match found {
            Some(p) => format!("{name}: rad = 2/3 diam attained by {}", show(&p)),
            None => format!("{name}: rad = 2/3 diam not attained on the half-integer grid (rad = diam/2 throughout)"),
        });
    }
    let hexagon = NormBody::from_polytope(Polytope::from_points(&hexagon_vertices(), 2).expect("hexagon")).expect("norm");
    let tri = [Vector::from_ints(&[0, 0]), Vector::from_ints(&[1, 0]), Vector::from_ints(&[0, 1])];
    let d = diam(&hexagon, &tri).expect("points");
    let rad = circumball(&hexagon, &tri).expect("points").radius;
    r.note(format!(
        "hexagonal norm, triangle {}: diam {d}, rad {rad}, upper bound attained: {}",
        show(&tri),
        rad == &d * ratio(2, 3)
    ));
    r
}

fn half_grid() -> Vec<Vector> {
    (0..3)
        .flat_map(|i| (0..3).map(move |j| Vector::new(vec![ratio(i, 2), ratio(j, 2)])))
        .collect()
}

/// The circumsphere part of a set has the same circumradius and a far pair.
pub fn circumsphere_suite() -> SuiteReport {
    let mut r = SuiteReport::new("lemma2");
    let all = norms(&["linf:2", "l1:2", "linf:3", "l1:3"]);
    let mut rng = InstanceRng::new(303);
    for i in 0..INSTANCES {
        let norm = &all[i % all.len()];
        let pts = loop {
            let count = 2 + rng.index(5);
            let p = rng.points(norm.dim(), count, &int(-1), &int(1), 4);
            if p.iter().any(|x| *x != p[0]) {
                break p;
            }
        };
        let Some(res) = r.guard("restriction", circumsphere_restriction(norm, &pts)) else {
            continue;
        };
        r.check(res.radius_of_restriction == res.circumradius, || {
            format!("{}: restricted radius {} != {} for {}", norm.name(), res.radius_of_restriction, res.circumradius, show(&pts))
        });
        let bound = jung_pair_factor(norm.dim()) * &res.circumradius;
        r.check(res.pair_distance >= bound, || {
            format!("{}: pair distance {} below {bound} for {}", norm.name(), res.pair_distance, show(&pts))
        });
    }
    r
}

fn certificate_holds(norm: &NormBody, body: &Polytope, c: &SeparationCertificate) -> bool {
    let one = Rational::one();
    let inside = body.vertices().iter().all(|v| norm.dist(v, &c.y0) <= one);
    let target = norm.dist(&c.target, &c.y0);
    inside
        && match c.kind {
            CertificateKind::SupportingAtPoint => target == one,
            CertificateKind::PointExcluded => target > one,
            CertificateKind::StrictWithRadius => {
                let s = c.shrink_radius.clone().unwrap_or_else(|| int(2));
                target > one && s < one && body.vertices().iter().all(|v| norm.dist(v, &c.y0) <= s)
            }
        }
}

/// Separation, strict separation and supporting spheres on random b-convex bodies.
pub fn separation_suite() -> SuiteReport {
    let mut r = SuiteReport::new("prop1");
    let all = norms(&["linf:2", "l1:2", "linf:3"]);
    let mut rng = InstanceRng::new(404);
    let mut counts = [0usize; 3];
    for i in 0..INSTANCES / 2 {
        let norm = &all[i % all.len()];
        let n = norm.dim();
        let body = random_b_bounded_body(&mut rng, norm);
        let x0 = rng.point(n, &int(-2), &int(2), 4);
        let mut certs = Vec::new();
        if !body.contains(&x0) {
            if let Some(c) = r.guard("separate_point", separate_point(norm, &body, &x0)) {
                counts[0] += 1;
                certs.push(c);
            }
            if let Some(c) = r.guard("separate_point_strict", separate_point_strict(norm, &body, &x0)) {
                counts[1] += 1;
                certs.push(c);
            }
        }
        let mut boundary = vec![body.vertices()[rng.index(body.vertices().len())].clone()];
        if let Some(faces) = r.guard("faces", face_lattice(&body)) {
            let proper: Vec<_> = faces
                .into_iter()
                .filter(|f| !body.is_full_dimensional() || f.polytope.affine_dim() < n)
                .collect();
            boundary.push(proper[rng.index(proper.len())].sample.clone());
        }
        for x in boundary {
            if let Some(c) = r.guard("supporting_sphere_at", supporting_sphere_at(norm, &body, &x)) {
                counts[2] += 1;
                certs.push(c);
            }
        }
        for c in certs {
            r.check(certificate_holds(norm, &body, &c) && c.verify(norm, &body).is_ok(), || {
                format!("{}: certificate {:?} does not hold for {}", norm.name(), c, show(body.vertices()))
            });
        }
    }
    let total: usize = counts.iter().sum();
    r.check(total >= 100, || format!("only {total} certificates produced"));
    r.note(format!(
        "certificates: {} excluding, {} strict, {} supporting",
        counts[0], counts[1], counts[2]
    ));
    r
}

/// Area of a convex polygon given by its vertices in any order.
pub fn polygon_area(vertices: &[Vector]) -> f64 {
    let pts: Vec<(f64, f64)> = vertices.iter().map(|v| (to_f64(&v[0]), to_f64(&v[1]))).collect();
    let k = pts.len() as f64;
    let (cx, cy) = pts.iter().fold((0.0, 0.0), |(a, b), p| (a + p.0 / k, b + p.1 / k));
    let mut sorted = pts.clone();
    sorted.sort_by(|a, b| (a.1 - cy).atan2(a.0 - cx).total_cmp(&(b.1 - cy).atan2(b.0 - cx)));
    let mut twice = 0.0;
    for i in 0..sorted.len() {
        let (x1, y1) = sorted[i];
        let (x2, y2) = sorted[(i + 1) % sorted.len()];
        twice += x1 * y2 - x2 * y1;
    }
    twice.abs() / 2.0
}

/// Area of the Euclidean spindle of two points at distance 1.
pub fn euclidean_spindle_area() -> f64 {
    PI / 3.0 - 3f64.sqrt() / 2.0
}

/// Non-strict norms flatten the hull of a sphere segment; polygonal
/// approximations of the circle give planar spindles approaching the round one.
pub fn strictness_suite() -> SuiteReport {
    let mut r = SuiteReport::new("prop2-witness");
    for name in ["linf:2", "l1:2", "l1:3"] {
        let norm = make_norm(name).expect("built-in");
        let Some((a, b)) = r.guard("witness", strictness_witness(&norm)) else {
            continue;
        };
        let dim = match ball_hull(&norm, &[a.clone(), b.clone()]).map(|h| h.hull) {
            Ok(Hull::Body(h)) => Some(h.affine_dim()),
            _ => None,
        };
        r.check(dim.is_some_and(|d| d < norm.dim()), || format!("{name}: witness {a} {b} gives hull dimension {dim:?}"));
        r.note(format!("{name}: witness pair {a} {b}, hull dimension {dim:?}"));
    }

    let euclid = euclidean_spindle_area();
    let pair = [Vector::from_ratios(&[(-1, 2), (0, 1)]), Vector::from_ratios(&[(1, 2), (0, 1)])];
    let mut gaps = Vec::new();
    let mut areas = Vec::new();
    for m in [2usize, 3, 6, 12] {
        let norm = make_norm(&format!("regular:{}", 2 * m)).expect("built-in");
        let parallel = norm.functionals().iter().any(|a| a[0].is_zero());
        let Some(h) = r.guard("regular hull", ball_hull(&norm, &pair)) else {
            continue;
        };
        let Hull::Body(h) = h.hull else {
            r.check(false, || format!("regular:{}: hull is the whole plane", 2 * m));
            continue;
        };
        let area = if h.affine_dim() == 2 { polygon_area(h.vertices()) } else { 0.0 };
        r.note(format!(
            "regular:{} (m = {m}): facet parallel to the pair: {parallel}, hull dimension {}, area {area:.6}, Euclidean {euclid:.6}",
            2 * m,
            h.affine_dim()
        ));
        if !parallel {
            r.check(h.affine_dim() == 2, || format!("regular:{}: hull not two-dimensional", 2 * m));
            gaps.push((m, (area - euclid).abs()));
            areas.push(area);
        }
    }
    let increasing = areas.windows(2).all(|w| w[1] >= w[0]);
    r.note(format!(
        "gap to the Euclidean area shrinks along m; the areas themselves are monotone increasing: {increasing}"
    ));
    for w in gaps.windows(2) {
        r.check(w[1].1 <= w[0].1 + AREA_TREND_TOLERANCE, || {
            format!("area gap grows from m = {} ({:.4}) to m = {} ({:.4})", w[0].0, w[0].1, w[1].0, w[1].1)
        });
    }
    r
}

/// Candidate points of a body: vertices, edge midpoints and vertex-pair midpoints.
fn body_candidates(body: &Polytope) -> Vec<Vector> {
    let vs = body.vertices();
    let mut out: BTreeSet<Vector> = vs.iter().cloned().collect();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            out.insert(vs[i].midpoint(&vs[j]));
        }
    }
    out.into_iter().collect()
}

/// Direct hull equality against the face-meeting criterion, plus the
/// boundary cover by exposed b-faces and the containment of b-exposed points.
pub fn generating_set_suite() -> SuiteReport {
    let mut r = SuiteReport::new("thm3");
    let all = norms(&["linf:2", "l1:2"]);
    let mut rng = InstanceRng::new(505);
    let (mut yes, mut no) = (0, 0);
    for i in 0..INSTANCES {
        let norm = &all[i % all.len()];
        let body = random_b_bounded_body(&mut rng, norm);
        let pool = body_candidates(&body);
        let size = 1 + rng.index(4.min(pool.len()));
        let mut pick: BTreeSet<usize> = BTreeSet::new();
        while pick.len() < size {
            pick.insert(rng.index(pool.len()));
        }
        let s: Vec<Vector> = pick.iter().map(|&k| pool[k].clone()).collect();
        let Some(ans) = r.guard(&format!("{}: generates_hull on {}", norm.name(), show(body.vertices())), generates_hull(norm, &body, &s)) else {
            continue;
        };
        r.checks += 1;
        if ans.generates {
            yes += 1;
            if let Some(points) = r.guard("b_exposed_points", b_exposed_points(norm, &body)) {
                r.check(points.iter().all(|p| s.contains(p)), || {
                    format!("{}: b-exposed point missing from generating set {}", norm.name(), show(&s))
                });
            }
        } else {
            no += 1;
        }
        if let Some(faces) = r.guard("faces", exposed_b_faces(norm, &body)) {
            let mut boundary: Vec<Vector> = body.vertices().to_vec();
            if let Ok(lattice) = face_lattice(&body) {
                boundary.extend(lattice.iter().filter(|f| f.polytope.affine_dim() == 1).map(|f| f.sample.clone()));
            }
            for x in boundary.iter().filter(|x| !body.contains_in_interior(x)) {
                r.check(faces.iter().any(|f| f.contains(x)), || {
                    format!("{}: boundary point {x} not covered by exposed b-faces", norm.name())
                });
            }
        }
    }
    r.note(format!("{yes} generating and {no} non-generating sets, no disagreement between the two tests"));
    r
}

/// Completeness of boxes and agreement of the completion criteria on random sets.
pub fn completion_suite() -> SuiteReport {
    let mut r = SuiteReport::new("prop4");
    let linf = make_norm("linf:2").expect("built-in");
    let mut rng = InstanceRng::new(606);
    for _ in 0..10 {
        let lo = rng.point(2, &int(-2), &int(2), 4);
        let hi = &lo + &Vector::from_ints(&[1, 1]);
        let b = Polytope::from_box(&lo, &hi).expect("box");
        r.check(is_complete(&linf, &b) == Ok(true), || format!("unit box at {lo} not complete"));
        r.check(has_diametral_partners(&linf, &b), || format!("unit box at {lo} lacks diametral partners"));
    }
    let flat = Polytope::from_box(&Vector::zeros(2), &Vector::from_ratios(&[(1, 1), (1, 2)])).expect("box");
    r.check(is_complete(&linf, &flat) == Ok(false), || "the 1 x 1/2 box was reported complete".into());

    let square = Polytope::from_box(&Vector::zeros(2), &Vector::from_ints(&[1, 1])).expect("box");
    let diagonal = [Vector::from_ints(&[0, 0]), Vector::from_ints(&[1, 1])];
    let rep = completion_report(&linf, &diagonal, Some(&square));
    r.check(
        rep.as_ref().is_ok_and(|x| x.unique_completion.as_ref() == Some(&square) && x.criterion_iii == Some(true)),
        || format!("diagonal pair: {rep:?}"),
    );

    let all = norms(&["linf:2", "l1:2"]);
    let (mut yes, mut no) = (0, 0);
    for i in 0..INSTANCES {
        let norm = &all[i % all.len()];
        let center = rng.point(2, &int(-1), &int(1), 4);
        let Some(c) = r.guard("candidate", norm.ball_polytope(&center, &ratio(1, 2))) else {
            continue;
        };
        let mut pool = body_candidates(&c);
        pool.extend((0..12).map(|_| &center + &rng.point(2, &ratio(-1, 2), &ratio(1, 2), 4)).filter(|p| c.contains(p)));
        let s = loop {
            let size = 2 + rng.index(3);
            let s: Vec<Vector> = (0..size).map(|_| pool[rng.index(pool.len())].clone()).collect();
            if diam(norm, &s).is_ok_and(|d| d == Rational::one()) {
                break s;
            }
        };
        let Some(rep) = r.guard(&format!("{}: completion_report for {}", norm.name(), show(&s)), completion_report(norm, &s, Some(&c))) else {
            continue;
        };
        r.check(rep.criterion_ii == rep.criterion_iii && rep.criterion_i == rep.criterion_ii, || {
            format!("{}: criteria disagree for {}", norm.name(), show(&s))
        });
        if rep.criterion_ii == Some(true) {
            yes += 1;
            r.check(rep.unique_completion.as_ref() == Some(&c), || {
                format!("{}: unique completion missing for {}", norm.name(), show(&s))
            });
        } else {
            no += 1;
        }
        r.check(has_diametral_partners(norm, &c), || format!("{}: complete set without diametral partners", norm.name()));
    }
    r.note(format!("{yes} sets with the candidate as unique completion, {no} without"));
    r
}

/// Exact reproduction of the non-separable pair of segments in l1:3.
pub fn segment_separation_suite() -> SuiteReport {
    let mut r = SuiteReport::new("example1");
    if let Some(rep) = r.guard("verify_example1", verify_example1()) {
        r.check(rep.k1_is_ball_intersection, || "first segment is not the two-ball intersection".into());
        r.check(rep.k1_radius == ratio(1, 2), || format!("first segment has radius {}", rep.k1_radius));
        r.check(rep.k1_b_convex && rep.k2_b_convex, || "segments not b-convex".into());
        r.check(rep.disjoint, || "segments intersect".into());
        r.check(rep.max_distance < Rational::one(), || format!("max distance {} is not below 1", rep.max_distance));
        r.note(format!(
            "eps {}: max over {} center-set vertices of the distance to the second segment = {} < 1, so no admissible unit ball avoids it",
            format_rational(&rep.eps),
            rep.center_vertices,
            format_rational(&rep.max_distance)
        ));
    }
    r
}

/// Exposed b-faces and generating sets of the unit square in linf:2.
pub fn square_faces_suite() -> SuiteReport {
    let mut r = SuiteReport::new("example2");
    let norm = make_norm("linf:2").expect("built-in");
    let square = Polytope::from_box(&Vector::zeros(2), &Vector::from_ints(&[1, 1])).expect("box");
    let edges: Vec<Polytope> = face_lattice(&square)
        .expect("faces")
        .into_iter()
        .filter(|f| f.polytope.affine_dim() == 1)
        .map(|f| f.polytope)
        .collect();

    if let Some(faces) = r.guard("exposed_b_faces", exposed_b_faces(&norm, &square)) {
        let singles = faces.iter().filter(|f| f.pieces.len() == 1 && edges.contains(&f.pieces[0])).count();
        let unions = faces
            .iter()
            .filter(|f| {
                f.pieces.len() == 2
                    && f.pieces.iter().all(|p| edges.contains(p))
                    && f.pieces[0].vertices().iter().any(|v| f.pieces[1].vertices().contains(v))
            })
            .count();
        r.check(faces.len() == 8 && singles == 4 && unions == 4, || {
            format!("{} faces: {singles} edges, {unions} two-edge unions", faces.len())
        });
    }
    r.check(b_exposed_points(&norm, &square).is_ok_and(|p| p.is_empty()), || "square has b-exposed points".into());

    let q = |a: i64, b: i64| Vector::from_ratios(&[(a, 2), (b, 2)]);
    let generating = [
        vec![q(0, 0), q(2, 2)],
        vec![q(2, 0), q(0, 2)],
        vec![q(1, 2), q(0, 1), q(1, 0), q(2, 1)],
    ];
    for s in generating {
        let ans = generates_hull(&norm, &square, &s);
        r.check(ans.as_ref().is_ok_and(|a| a.generates), || format!("{} should generate: {ans:?}", show(&s)));
    }
    let grid = half_grid();
    let mut edge_pairs = 0;
    for e in &edges {
        let on: Vec<&Vector> = grid.iter().filter(|p| e.contains(p)).collect();
        for i in 0..on.len() {
            for j in i + 1..on.len() {
                edge_pairs += 1;
                let s = [on[i].clone(), on[j].clone()];
                let ans = generates_hull(&norm, &square, &s);
                r.check(ans.as_ref().is_ok_and(|a| !a.generates && a.missed_face.is_some()), || {
                    format!("{} on one edge: {ans:?}", show(&s))
                });
            }
        }
    }
    r.note(format!("{edge_pairs} same-edge pairs rejected with a missed face"));

    if let Some(found) = r.guard("minimal_generators", minimal_generators(&norm, &square, &grid, 4)) {
        let sizes: BTreeSet<usize> = found.iter().map(Vec::len).collect();
        r.check(sizes == BTreeSet::from([2, 3, 4]), || format!("minimal generator sizes {sizes:?}"));
        r.note(format!("{} minimal generating sets on the 9-point grid, sizes {sizes:?}", found.len()));
    }
    r
}

/// The floating-point ℝ⁴ checks.
pub fn four_dim_suite() -> SuiteReport {
    let mut r = SuiteReport::new("example4");
    let e1 = verify_e1(&ratio(1, 2), 500, 707);
    r.absorb_oracle("segment hull (alpha 1/2)", &e1);
    let e2 = verify_e2(500, 708);
    r.absorb_oracle("disc hull", &e2);
    if r.passed() {
        r.note(CONCLUSION);
    }
    r
}

/// Violations on the triangle and clean searches on b-convex bodies.
pub fn spindle_suite() -> SuiteReport {
    let mut r = SuiteReport::new("spindle");
    let linf = make_norm("linf:2").expect("built-in");
    let tri = Polytope::from_points(&[Vector::from_ints(&[0, 0]), Vector::from_ints(&[1, 0]), Vector::from_ints(&[0, 1])], 2)
        .expect("triangle");
    if let Some(p) = r.guard("triangle probe", k_spindle_probe(&linf, &tri, 2, 200, 0)) {
        r.check(p.status == ProbeStatus::Violated && p.verify(&linf, &tri).is_ok(), || format!("triangle: {p:?}"));
        r.note(format!(
            "triangle: violated by {} with {} outside, after {} trials",
            show(p.witness_points.as_deref().unwrap_or(&[])),
            p.witness_outside.map(|x| x.to_string()).unwrap_or_default(),
            p.trials
        ));
    }
    let all = norms(&["linf:2", "l1:2"]);
    let mut rng = InstanceRng::new(808);
    for i in 0..50 {
        let norm = &all[i % all.len()];
        let body = random_b_bounded_body(&mut rng, norm);
        let quick = k_spindle_probe(norm, &body, 0, 20, i as u64);
        r.check(quick.as_ref().is_ok_and(|p| p.status == ProbeStatus::NoViolationFound && p.trials == 0), || {
            format!("{}: shortcut {quick:?}", norm.name())
        });
        let full = k_spindle_search(norm, &body, 0, 20, i as u64);
        r.check(full.as_ref().is_ok_and(|p| p.status == ProbeStatus::NoViolationFound), || {
            format!("{}: search on b-convex {} gave {full:?}", norm.name(), show(body.vertices()))
        });
    }
    r
}

/// Largest distance from `x` to a center in the polytope given by `centers`,
/// by one linear program per functional.
fn farthest_center_distance(norm: &NormBody, centers: &Polytope, x: &Vector) -> Result<Rational> {
    let mut best: Option<Rational> = None;
    for a in norm.functionals() {
        let v = a.dot(x) - lp_solve(a, centers.hrep(), Sense::Min)?.value;
        if best.as_ref().is_none_or(|b| v > *b) {
            best = Some(v);
        }
    }
    Ok(best.expect("functionals"))
}

/// LP optima against vertex scans, and hull membership against the definition.
pub fn kernel_oracle_suite() -> SuiteReport {
    let mut r = SuiteReport::new("kernel");
    let mut rng = InstanceRng::new(909);
    for f in fixtures() {
        let Some(norm) = r.guard(f.name, f.norm.build(f.dim)) else {
            continue;
        };
        let Some(body) = r.guard(f.name, Polytope::from_points(&f.points, f.dim)) else {
            continue;
        };
        let mut bodies = vec![body.clone(), norm.unit_ball().clone()];
        bodies.extend(f.polytopes.iter().map(|(_, p)| p.clone()));
        for p in &bodies {
            for _ in 0..4 {
                let c = rng.objective(f.dim);
                for sense in [Sense::Max, Sense::Min] {
                    let scan = p.vertices().iter().map(|v| c.dot(v));
                    let expect = if sense == Sense::Max { scan.max() } else { scan.min() }.expect("vertices");
                    let got = lp_solve(&c, p.hrep(), sense);
                    r.check(
                        got.as_ref().is_ok_and(|s| s.value == expect && p.contains(&s.argpoint) && c.dot(&s.argpoint) == expect),
                        || format!("{}: lp {sense:?} {c} gave {got:?}, vertex scan {expect}", f.name),
                    );
                }
            }
        }

        let Some(h) = r.guard(f.name, ball_hull(&norm, &f.points)) else {
            continue;
        };
        let mut probes: Vec<Vector> = f.points.clone();
        if let Hull::Body(b) = &h.hull {
            probes.extend(b.vertices().iter().cloned());
        }
        probes.extend(rng.points(f.dim, 12, &int(-2), &int(2), 8));
        for x in probes {
            let direct = match &h.center_set.polytope {
                None => Ok(true),
                Some(c) => farthest_center_distance(&norm, c, &x).map(|d| d <= Rational::one()),
            };
            r.check(direct == Ok(h.hull.contains(&x)), || format!("{}: membership of {x} disagrees ({direct:?})", f.name));
        }
    }
    r
}
