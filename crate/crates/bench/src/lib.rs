//! Deterministic workloads shared by the benchmarks.

use ballconv::lab::random::InstanceRng;
use ballconv::rational::ratio;
use ballconv::{HalfSpace, NormBody, Vector};

/// `count` points in `[-1/2, 1/2]^dim` with denominators up to 8.
pub fn point_cloud(seed: u64, dim: usize, count: usize) -> Vec<Vector> {
    InstanceRng::new(seed).points(dim, count, &ratio(-1, 2), &ratio(1, 2), 8)
}

/// The facet inequalities of the unit ball.
pub fn ball_constraints(norm: &NormBody) -> Vec<HalfSpace> {
    norm.unit_ball().hrep().to_vec()
}

/// A random objective with small integer-over-8 coordinates.
pub fn objective(seed: u64, dim: usize) -> Vector {
    InstanceRng::new(seed).point(dim, &ratio(-1, 1), &ratio(1, 1), 8)
}
