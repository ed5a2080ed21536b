//! Spindles and seeded searches for k-spindle convexity violations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::completeness::subsets;
use crate::error::{GeomError, Result};
use crate::hull::{ball_hull, is_b_convex, BallHull, Hull};
use crate::norm::NormBody;
use crate::polytope::Polytope;
use crate::rational::Rational;
use crate::vector::Vector;

/// Largest number of grid points the search pool may hold.
const GRID_CAP: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProbeStatus {
    Violated,
    NoViolationFound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpindleProbeResult {
    pub status: ProbeStatus,
    pub witness_points: Option<Vec<Vector>>,
    pub witness_outside: Option<Vector>,
    pub trials: u64,
}

impl SpindleProbeResult {
    fn clean(trials: u64) -> Self {
        SpindleProbeResult {
            status: ProbeStatus::NoViolationFound,
            witness_points: None,
            witness_outside: None,
            trials,
        }
    }

    /// Builds a violation and re-checks it, including the repeated-point variant.
    pub fn violated(norm: &NormBody, body: &Polytope, points: Vec<Vector>, outside: Vector, trials: u64) -> Result<Self> {
        let r = SpindleProbeResult {
            status: ProbeStatus::Violated,
            witness_points: Some(points),
            witness_outside: Some(outside),
            trials,
        };
        r.verify(norm, body)?;
        Ok(r)
    }

    pub fn verify(&self, norm: &NormBody, body: &Polytope) -> Result<()> {
        let (Some(points), Some(outside)) = (&self.witness_points, &self.witness_outside) else {
            return Ok(());
        };
        let bad = |m: &str| Err(GeomError::CertificateInvalid(m.to_string()));
        if points.iter().any(|p| !body.contains(p)) {
            return bad("witness point outside the body");
        }
        if body.contains(outside) {
            return bad("outside witness lies in the body");
        }
        if !ball_hull(norm, points)?.hull.contains(outside) {
            return bad("outside witness not in the ball hull");
        }
        let mut repeated = points.clone();
        repeated.push(points[points.len() - 1].clone());
        if !ball_hull(norm, &repeated)?.hull.contains(outside) {
            return bad("repeating a point changed the ball hull");
        }
        Ok(())
    }
}

/// `bh₁({x1, x2})`
pub fn spindle(norm: &NormBody, x1: &Vector, x2: &Vector) -> Result<BallHull> {
    ball_hull(norm, &[x1.clone(), x2.clone()])
}

/// Probe for tuples of `k` points of `body` whose ball hull leaves the body.
/// `k = 0` tries every size from 2 to `n + 2`.
pub fn k_spindle_probe(norm: &NormBody, body: &Polytope, k: usize, budget: u64, seed: u64) -> Result<SpindleProbeResult> {
    check_probe_args(k, budget)?;
    if is_b_convex(norm, body)? {
        return Ok(SpindleProbeResult::clean(0));
    }
    k_spindle_search(norm, body, k, budget, seed)
}

fn check_probe_args(k: usize, budget: u64) -> Result<()> {
    if k == 1 {
        return Err(GeomError::InvalidArgument("k must be at least 2, or 0 for all sizes".into()));
    }
    if budget == 0 {
        return Err(GeomError::InvalidArgument("budget must be positive".into()));
    }
    Ok(())
}

/// The search behind [`k_spindle_probe`], without the b-convexity shortcut.
pub fn k_spindle_search(norm: &NormBody, body: &Polytope, k: usize, budget: u64, seed: u64) -> Result<SpindleProbeResult> {
    check_probe_args(k, budget)?;
    let n = norm.dim();
    let sizes: Vec<usize> = if k == 0 { (2..=n + 2).collect() } else { vec![k] };
    let verts = body.vertices();
    let mut trials = 0u64;

    for &size in &sizes {
        for idx in subsets(verts.len(), size) {
            if trials >= budget {
                return Ok(SpindleProbeResult::clean(trials));
            }
            trials += 1;
            let tuple: Vec<Vector> = idx.iter().map(|&i| verts[i].clone()).collect();
            if let Some(r) = test_tuple(norm, body, tuple, trials)? {
                return Ok(r);
            }
        }
    }

    let mut pool: Vec<Vector> = verts.to_vec();
    pool.extend(grid_points(body, budget));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while trials < budget {
        let size = sizes[(trials as usize) % sizes.len()];
        let tuple: Vec<Vector> = (0..size).map(|_| pool[rng.random_range(0..pool.len())].clone()).collect();
        trials += 1;
        if let Some(r) = test_tuple(norm, body, tuple, trials)? {
            return Ok(r);
        }
    }
    Ok(SpindleProbeResult::clean(trials))
}

fn test_tuple(norm: &NormBody, body: &Polytope, tuple: Vec<Vector>, trials: u64) -> Result<Option<SpindleProbeResult>> {
    let outside = match ball_hull(norm, &tuple)?.hull {
        Hull::WholeSpace => {
            let far = body.vertices().iter().max_by(|a, b| a[0].cmp(&b[0])).unwrap();
            Some(far + &Vector::unit(norm.dim(), 0))
        }
        Hull::Body(h) => h.vertices().iter().find(|v| !body.contains(v)).cloned(),
    };
    outside
        .map(|o| SpindleProbeResult::violated(norm, body, tuple, o, trials))
        .transpose()
}

/// Dyadic grid over the bounding box, kept to the points inside `body`.
/// The subdivision depth grows with the budget.
fn grid_points(body: &Polytope, budget: u64) -> Vec<Vector> {
    let n = body.ambient_dim();
    let verts = body.vertices();
    let lo: Vec<Rational> = (0..n).map(|i| verts.iter().map(|v| v[i].clone()).min().unwrap()).collect();
    let hi: Vec<Rational> = (0..n).map(|i| verts.iter().map(|v| v[i].clone()).max().unwrap()).collect();
    let limit = (budget as usize).saturating_mul(4).min(GRID_CAP);
    let mut depth = 1u32;
    while depth < 6 && (2usize.pow(depth + 1) + 1).pow(n as u32) <= limit {
        depth += 1;
    }
    let steps = 2i64.pow(depth);
    let per_axis = steps as usize + 1;
    let total = per_axis.pow(n as u32);
    let mut out = Vec::new();
    for flat in 0..total {
        let mut rest = flat;
        let coords: Vec<Rational> = (0..n)
            .map(|i| {
                let t = (rest % per_axis) as i64;
                rest /= per_axis;
                &lo[i] + (&hi[i] - &lo[i]) * Rational::new(t.into(), steps.into())
            })
            .collect();
        let p = Vector::new(coords);
        if body.contains(&p) {
            out.push(p);
        }
    }
    out
}
