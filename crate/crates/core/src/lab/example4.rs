//! Floating-point membership oracle for the four-dimensional body
//! `B = conv(K ∪ L)` with
//! `K = {(k1,k2,k3,0) : ‖(k1,k2)‖₂ ≤ 1, ‖(k2,k3)‖₂ ≤ 1}` and
//! `L = {(l1,0,l3,l4) : ‖(l1,l4)‖₂ ≤ 1, |l3| ≤ 1}`.
//!
//! A point `x` lies in `B` iff some split `x1 = k1 + l1`, `x3 = k3 + l3`
//! satisfies
//! `max{‖(k1,x2)‖₂, ‖(x2,k3)‖₂} + max{‖(l1,x4)‖₂, |l3|} ≤ 1`.
//! The left side is convex in `(k1, k3)` and positively homogeneous jointly
//! with `x`, so its minimum is the gauge of `B` at `x`.
//!
//! Everything here is approximate; results carry the tolerance they were
//! decided with.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::{ratio, to_f64, Rational};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
const STEP_FLOOR: f64 = 1e-12;
const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    In,
    Out,
    Boundary,
}

impl Membership {
    pub fn is_member(self) -> bool {
        self != Membership::Out
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Example4Oracle {
    pub tolerance: f64,
}

impl Default for Example4Oracle {
    fn default() -> Self {
        Example4Oracle {
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

fn golden_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut a = hi - INV_PHI * (hi - lo);
    let mut b = lo + INV_PHI * (hi - lo);
    let (mut fa, mut fb) = (f(a), f(b));
    while hi - lo > STEP_FLOOR {
        if fa <= fb {
            hi = b;
            b = a;
            fb = fa;
            a = hi - INV_PHI * (hi - lo);
            fa = f(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + INV_PHI * (hi - lo);
            fb = f(b);
        }
    }
    fa.min(fb).min(f(0.5 * (lo + hi)))
}

fn split_cost(x: &[f64; 4], k1: f64, k3: f64) -> f64 {
    let first = x[1].hypot(k1).max(x[1].hypot(k3));
    let second = (x[0] - k1).hypot(x[3]).max((x[2] - k3).abs());
    first + second
}

impl Example4Oracle {
    pub fn new(tolerance: f64) -> Self {
        Example4Oracle { tolerance }
    }

    /// The gauge of `B`, by nested golden-section search over the split.
    pub fn gauge(&self, x: [f64; 4]) -> f64 {
        // the zero split costs `bound`, and any better split has |k1|, |k3| <= bound
        let bound = split_cost(&x, 0.0, 0.0);
        if bound == 0.0 {
            return 0.0;
        }
        golden_min(|k1| golden_min(|k3| split_cost(&x, k1, k3), -bound, bound), -bound, bound)
    }

    pub fn classify_gauge(&self, g: f64) -> Membership {
        if (g - 1.0).abs() <= self.tolerance {
            Membership::Boundary
        } else if g < 1.0 {
            Membership::In
        } else {
            Membership::Out
        }
    }

    pub fn membership(&self, x: [f64; 4]) -> Membership {
        self.classify_gauge(self.gauge(x))
    }

    /// Membership of `x` in the unit ball `B + center`.
    pub fn in_ball(&self, x: [f64; 4], center: [f64; 4]) -> Membership {
        self.membership(sub(x, center))
    }
}

fn sub(x: [f64; 4], y: [f64; 4]) -> [f64; 4] {
    [x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]]
}

/// `example4_membership` with the default tolerance.
pub fn example4_membership(x: [f64; 4]) -> Membership {
    Example4Oracle::default().membership(x)
}

/// Exact membership in `L`.
pub fn in_l_exact(x: &[Rational; 4]) -> bool {
    let one = Rational::from_integer(1.into());
    x[1] == Rational::from_integer(0.into()) && &x[0] * &x[0] + &x[3] * &x[3] <= one && x[2] <= one && -&x[2] <= one
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleReport {
    pub checks: usize,
    pub failures: Vec<String>,
    /// Smallest `gauge - 1` among points that had to be excluded.
    pub min_exclusion_margin: f64,
    /// Largest `gauge - 1` among points that had to be included.
    pub max_inclusion_excess: f64,
    pub tolerance: f64,
}

impl OracleReport {
    fn new(tolerance: f64) -> Self {
        OracleReport {
            checks: 0,
            failures: Vec::new(),
            min_exclusion_margin: f64::INFINITY,
            max_inclusion_excess: f64::NEG_INFINITY,
            tolerance,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn expect_in(&mut self, oracle: &Example4Oracle, what: &str, x: [f64; 4], center: [f64; 4]) {
        self.checks += 1;
        let g = oracle.gauge(sub(x, center));
        self.max_inclusion_excess = self.max_inclusion_excess.max(g - 1.0);
        if !oracle.classify_gauge(g).is_member() {
            self.failures.push(format!("{what}: {x:?} not in ball at {center:?} (gauge {g})"));
        }
    }

    /// At least one of the centers must exclude `x`.
    fn expect_out_of_some(&mut self, oracle: &Example4Oracle, what: &str, x: [f64; 4], centers: &[[f64; 4]]) {
        self.checks += 1;
        let g = centers
            .iter()
            .map(|c| oracle.gauge(sub(x, *c)))
            .fold(f64::NEG_INFINITY, f64::max);
        self.min_exclusion_margin = self.min_exclusion_margin.min(g - 1.0);
        if oracle.classify_gauge(g) != Membership::Out {
            self.failures.push(format!("{what}: {x:?} not excluded (largest gauge {g})"));
        }
    }
}

/// The two witness centers `±(0, √(1-α²), α, 0)`.
pub fn e1_witness_centers(alpha: f64) -> [[f64; 4]; 2] {
    let s = (1.0 - alpha * alpha).sqrt();
    [[0.0, s, alpha, 0.0], [0.0, -s, -alpha, 0.0]]
}

/// The segment `[±(α,0,0,0)]` lies in both witness balls and sampled points
/// off it are excluded by one of them.
pub fn verify_e1(alpha: &Rational, samples: usize, seed: u64) -> OracleReport {
    let oracle = Example4Oracle::default();
    let mut report = OracleReport::new(oracle.tolerance);
    let a = to_f64(alpha);
    if !(a > 0.0 && a < 1.0) {
        report.failures.push(format!("alpha {a} outside (0,1)"));
        return report;
    }
    let centers = e1_witness_centers(a);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut on_segment = vec![-1.0, 0.0, 1.0];
    on_segment.extend((0..samples).map(|_| rng.random_range(-1.0..=1.0)));
    for t in on_segment {
        let x = [t * a, 0.0, 0.0, 0.0];
        for c in centers {
            report.expect_in(&oracle, "segment point", x, c);
        }
    }

    let mut off = vec![[0.0, 0.0, 0.0, 0.25]];
    for _ in 0..samples {
        // keep at least 1/50 away from the segment in the second or fourth coordinate
        let mut d: [f64; 2] = [rng.random_range(-0.5..=0.5), rng.random_range(-0.5..=0.5)];
        let k = rng.random_range(0..2);
        if d[k].abs() < 0.02 {
            d[k] = 0.02_f64.copysign(d[k]);
        }
        off.push([
            rng.random_range(-a..=a),
            d[0],
            rng.random_range(-0.5..=0.5),
            d[1],
        ]);
    }
    for x in off {
        report.expect_out_of_some(&oracle, "off-segment point", x, &centers);
    }
    report
}

/// A rational point of the closed unit disc, from a rational point of the circle.
fn disc_point(rng: &mut ChaCha8Rng) -> (Rational, Rational) {
    let t = ratio(rng.random_range(-16..=16), 16);
    let r = ratio(rng.random_range(0..=8), 8);
    let one = Rational::from_integer(1.into());
    let denom = &one + &t * &t;
    let c = (&one - &t * &t) / &denom * &r;
    let s = Rational::from_integer(2.into()) * &t / &denom * &r;
    if rng.random_bool(0.5) {
        (-c, s)
    } else {
        (c, s)
    }
}

/// Checks the description of the hull of `±(1,0,0,0)`: the exact inclusion
/// behind the disc, exclusion for translations with a nonzero first, second
/// or fourth coordinate, and inclusion for translations along the third axis.
pub fn verify_e2(samples: usize, seed: u64) -> OracleReport {
    let oracle = Example4Oracle::default();
    let mut report = OracleReport::new(oracle.tolerance);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let e1 = [1.0, 0.0, 0.0, 0.0];
    let minus_e1 = [-1.0, 0.0, 0.0, 0.0];

    let mut exact = vec![(ratio(1, 2), (ratio(3, 5), ratio(4, 5)))];
    for _ in 0..samples {
        let tau3 = ratio(rng.random_range(-16..=16), 16);
        exact.push((tau3, disc_point(&mut rng)));
    }
    for (tau3, (x1, x4)) in exact {
        report.checks += 1;
        let p = [x1.clone(), Rational::from_integer(0.into()), -&tau3, x4.clone()];
        if !in_l_exact(&p) {
            report.failures.push(format!("({x1}, 0, {}, {x4}) not in L", -&tau3));
        }
        let pf = [to_f64(&x1), 0.0, -to_f64(&tau3), to_f64(&x4)];
        report.expect_in(&oracle, "disc point", pf, [0.0; 4]);
    }

    let mut shifted = vec![[0.1, 0.0, 0.0, 0.0]];
    for _ in 0..samples {
        let mut t: [f64; 4] = [
            rng.random_range(-1.0..=1.0),
            rng.random_range(-1.0..=1.0),
            rng.random_range(-1.0..=1.0),
            rng.random_range(-1.0..=1.0),
        ];
        // zero some off-axis coordinates, but keep one of magnitude at least 1/20
        let keep = [0, 1, 3][rng.random_range(0..3)];
        for i in [0, 1, 3] {
            if i != keep && rng.random_bool(0.5) {
                t[i] = 0.0;
            }
        }
        if t[keep].abs() < 0.05 {
            t[keep] = 0.05_f64.copysign(t[keep]);
        }
        shifted.push(t);
    }
    for t in shifted {
        // both ±e1 in B + t would be needed, so one of them must fail
        report.checks += 1;
        let g = oracle.gauge(sub(e1, t)).max(oracle.gauge(sub(minus_e1, t)));
        report.min_exclusion_margin = report.min_exclusion_margin.min(g - 1.0);
        if oracle.classify_gauge(g) != Membership::Out {
            report.failures.push(format!("translation {t:?} keeps both ±e1 (gauge {g})"));
        }
    }

    let mut along = vec![1.0, -1.0, 0.0];
    along.extend((0..samples).map(|_| rng.random_range(-1.0..=1.0)));
    for tau3 in along {
        let t = [0.0, 0.0, tau3, 0.0];
        report.expect_in(&oracle, "axis translation", e1, t);
        report.expect_in(&oracle, "axis translation", minus_e1, t);
    }
    report
}

pub const CONCLUSION: &str = "consistent within tolerance: the segment hulls and the disc hull behave as described, \
so the dimension restriction on the ball hull cannot be dropped and the finite-union \
representation question has a negative answer (numerical consistency report, not an exact proof)";
