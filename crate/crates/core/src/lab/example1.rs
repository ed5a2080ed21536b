//! Two disjoint b-convex segments in l1:3 that no unit sphere separates.

use num_traits::{One, Zero};

use crate::error::Result;
use crate::hull::{balls_intersection, center_set, circumball, is_b_convex};
use crate::lp::{lp_solve, Sense};
use crate::norm::{make_norm, NormBody};
use crate::polytope::{intersect, polytope_equal, HalfSpace, Polytope};
use crate::rational::{ratio, Rational};
use crate::vector::Vector;

pub fn k1() -> (Vector, Vector) {
    (
        Vector::from_ratios(&[(1, 4), (1, 4), (0, 1)]),
        Vector::from_ratios(&[(-1, 4), (-1, 4), (0, 1)]),
    )
}

pub fn k2(eps: &Rational) -> (Vector, Vector) {
    (
        Vector::new(vec![ratio(1, 4), ratio(-1, 4), eps.clone()]),
        Vector::new(vec![ratio(-1, 4), ratio(1, 4), eps.clone()]),
    )
}

/// Exact `min_{t ∈ [0,1]} ‖x - (p + t(q - p))‖`, by LP over `(t, r)`.
pub fn dist_to_segment(norm: &NormBody, x: &Vector, p: &Vector, q: &Vector) -> Result<Rational> {
    let d = q - p;
    let base = x - p;
    let mut cons = Vec::new();
    // a·(x - p) - t a·d <= r   <=>   -(a·d) t - r <= -a·(x - p)
    for a in norm.functionals() {
        cons.push(HalfSpace::new(
            Vector::new(vec![-a.dot(&d), -Rational::one()]),
            -a.dot(&base),
        )?);
    }
    cons.push(HalfSpace::new(Vector::from_ints(&[1, 0]), Rational::one())?);
    cons.push(HalfSpace::new(Vector::from_ints(&[-1, 0]), Rational::zero())?);
    Ok(lp_solve(&Vector::from_ints(&[0, 1]), &cons, Sense::Min)?.value)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Example1Report {
    pub eps: Rational,
    pub k1_is_ball_intersection: bool,
    pub k1_radius: Rational,
    pub k1_b_convex: bool,
    pub k2_b_convex: bool,
    pub disjoint: bool,
    pub center_vertices: usize,
    /// `max_{v ∈ vert C} dist(v, K₂)` for the center set `C` of `K₁`.
    pub max_distance: Rational,
}

impl Example1Report {
    pub fn passed(&self) -> bool {
        self.k1_is_ball_intersection
            && self.k1_radius == ratio(1, 2)
            && self.k1_b_convex
            && self.k2_b_convex
            && self.disjoint
            && self.max_distance < Rational::one()
    }
}

/// Exact check with `ε = 1/4`: every admissible center sees `K₂` at distance below 1.
pub fn verify_example1() -> Result<Example1Report> {
    let norm = make_norm("l1:3")?;
    let eps = ratio(1, 4);
    let (a, b) = k1();
    let (c, d) = k2(&eps);
    let seg1 = Polytope::from_points(&[a.clone(), b.clone()], 3)?;
    let seg2 = Polytope::from_points(&[c.clone(), d.clone()], 3)?;

    let centers = [
        Vector::from_ratios(&[(-3, 4), (1, 4), (0, 1)]),
        Vector::from_ratios(&[(3, 4), (-1, 4), (0, 1)]),
    ];
    let cap = balls_intersection(&norm, &centers, &Rational::one())?;
    let k1_is_ball_intersection = match &cap {
        Some(p) => polytope_equal(p, &seg1)?,
        None => false,
    };

    let c_set = center_set(&norm, &[a, b])?
        .polytope
        .expect("a segment of radius 1/2 has centers");
    let mut max_distance = Rational::zero();
    for v in c_set.vertices() {
        let dv = dist_to_segment(&norm, v, &c, &d)?;
        if dv > max_distance {
            max_distance = dv;
        }
    }
    Ok(Example1Report {
        eps,
        k1_is_ball_intersection,
        k1_radius: circumball(&norm, seg1.vertices())?.radius,
        k1_b_convex: is_b_convex(&norm, &seg1)?,
        k2_b_convex: is_b_convex(&norm, &seg2)?,
        disjoint: intersect(&[seg1, seg2])?.is_none(),
        center_vertices: c_set.vertices().len(),
        max_distance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproduces_non_separation() {
        let r = verify_example1().unwrap();
        assert!(r.k1_is_ball_intersection);
        assert_eq!(r.k1_radius, ratio(1, 2));
        assert!(r.k1_b_convex && r.k2_b_convex && r.disjoint);
        assert!(r.max_distance < Rational::one(), "{}", r.max_distance);
        assert!(r.passed());
    }

    #[test]
    fn segment_distance() {
        let n = make_norm("l1:3").unwrap();
        let p = Vector::from_ints(&[0, 0, 0]);
        let q = Vector::from_ints(&[1, 0, 0]);
        assert_eq!(dist_to_segment(&n, &Vector::from_ints(&[2, 1, 0]), &p, &q).unwrap(), ratio(2, 1));
        assert_eq!(dist_to_segment(&n, &Vector::from_ratios(&[(1, 2), (1, 3), (0, 1)]), &p, &q).unwrap(), ratio(1, 3));
    }
}
