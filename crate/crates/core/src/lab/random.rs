//! Seeded generators of random rational instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hull::{ball_hull, circumball, Hull};
use crate::norm::NormBody;
use crate::polytope::Polytope;
use crate::rational::{ratio, Rational};
use crate::vector::Vector;

pub struct InstanceRng(ChaCha8Rng);

impl InstanceRng {
    pub fn new(seed: u64) -> Self {
        InstanceRng(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn inner(&mut self) -> &mut ChaCha8Rng {
        &mut self.0
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.0.random_range(0..n)
    }

    /// Uniform on `{k/den : lo <= k/den <= hi}`.
    pub fn rational(&mut self, lo: &Rational, hi: &Rational, den: i64) -> Rational {
        let d = Rational::from_integer(den.into());
        let a = (lo * &d).ceil().to_integer();
        let b = (hi * &d).floor().to_integer();
        let a: i64 = a.try_into().expect("small bounds");
        let b: i64 = b.try_into().expect("small bounds");
        ratio(self.0.random_range(a..=b), den)
    }

    pub fn point(&mut self, dim: usize, lo: &Rational, hi: &Rational, den: i64) -> Vector {
        Vector::new((0..dim).map(|_| self.rational(lo, hi, den)).collect())
    }

    pub fn points(&mut self, dim: usize, count: usize, lo: &Rational, hi: &Rational, den: i64) -> Vec<Vector> {
        (0..count).map(|_| self.point(dim, lo, hi, den)).collect()
    }

    /// Nonzero integer vector with entries in `[-3, 3]`.
    pub fn objective(&mut self, dim: usize) -> Vector {
        loop {
            let c: Vec<i64> = (0..dim).map(|_| self.0.random_range(-3..=3)).collect();
            if c.iter().any(|&x| x != 0) {
                return Vector::from_ints(&c);
            }
        }
    }

    pub fn coin(&mut self) -> bool {
        self.0.random_bool(0.5)
    }
}

/// A b-bounded b-convex body: the ball hull of a few random points near the origin.
pub fn random_b_bounded_body(rng: &mut InstanceRng, norm: &NormBody) -> Polytope {
    let lo = ratio(-1, 2);
    let hi = ratio(1, 2);
    loop {
        let count = 1 + rng.index(4);
        let pts = rng.points(norm.dim(), count, &lo, &hi, 4);
        if circumball(norm, &pts).expect("non-empty").radius >= Rational::from_integer(1.into()) {
            continue;
        }
        if let Hull::Body(h) = ball_hull(norm, &pts).expect("non-empty").hull {
            return h;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hull::is_b_convex;
    use crate::norm::make_norm;

    #[test]
    fn rationals_stay_in_range() {
        let mut rng = InstanceRng::new(5);
        for _ in 0..100 {
            let x = rng.rational(&ratio(-1, 2), &ratio(3, 4), 8);
            assert!(x >= ratio(-1, 2) && x <= ratio(3, 4));
            assert!(*x.denom() <= 8.into());
        }
    }

    #[test]
    fn bodies_are_b_convex_and_b_bounded() {
        let n = make_norm("l1:2").unwrap();
        let mut rng = InstanceRng::new(11);
        for _ in 0..5 {
            let k = random_b_bounded_body(&mut rng, &n);
            assert!(is_b_convex(&n, &k).unwrap());
            assert!(circumball(&n, k.vertices()).unwrap().radius < Rational::from_integer(1.into()));
        }
    }

    #[test]
    fn same_seed_same_stream() {
        let a = InstanceRng::new(3).points(3, 4, &ratio(-1, 1), &ratio(1, 1), 4);
        let b = InstanceRng::new(3).points(3, 4, &ratio(-1, 1), &ratio(1, 1), 4);
        assert_eq!(a, b);
    }
}
