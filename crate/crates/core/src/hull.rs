//! Ball hulls, center sets and circumballs.
//!
//! For a finite set `S` the admissible centers `{ x : S ⊆ B(x,1) }` form the
//! polytope `⋂_{s∈S} (s + B)` (using symmetry of `B`). The ball hull is the
//! intersection of the unit balls around those centers, and since
//! `x ↦ ‖y - x‖` is convex it suffices to intersect over the center-set
//! vertices. When no unit ball contains `S` the hull is all of ℝⁿ.

use num_traits::{One, Zero};

use crate::error::{GeomError, Result};
use crate::lp::{lp_solve, Sense};
use crate::norm::NormBody;
use crate::polytope::{polytope_equal, HalfSpace, Polytope};
use crate::rational::{ratio, Rational};
use crate::vector::{check_dims, Vector};

/// `{ x : S ⊆ B(x,1) }`, `None` when no unit ball covers `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterSet {
    pub polytope: Option<Polytope>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hull {
    Body(Polytope),
    WholeSpace,
}

impl Hull {
    pub fn body(&self) -> Option<&Polytope> {
        match self {
            Hull::Body(p) => Some(p),
            Hull::WholeSpace => None,
        }
    }

    pub fn contains(&self, x: &Vector) -> bool {
        match self {
            Hull::Body(p) => p.contains(x),
            Hull::WholeSpace => true,
        }
    }

    pub fn contains_polytope(&self, q: &Polytope) -> bool {
        match self {
            Hull::Body(p) => p.contains_polytope(q),
            Hull::WholeSpace => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallHull {
    pub hull: Hull,
    pub center_set: CenterSet,
    pub generators: Vec<Vector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircumResult {
    pub radius: Rational,
    /// Every center of a smallest enclosing ball.
    pub center_set: Polytope,
    pub witness_center: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircumsphereRestriction {
    /// Circumradius of `S` itself.
    pub circumradius: Rational,
    /// Points of `S` on the circumsphere around the witness center.
    pub on_sphere: Vec<Vector>,
    pub radius_of_restriction: Rational,
    pub extremal_pair: (Vector, Vector),
    pub pair_distance: Rational,
}

fn check_points(norm: &NormBody, points: &[Vector]) -> Result<()> {
    if points.is_empty() {
        return Err(GeomError::EmptyInput);
    }
    check_dims(points, norm.dim())
}

/// `⋂_c B(c, radius)` over the given centers, or `None` if empty.
pub fn balls_intersection(norm: &NormBody, centers: &[Vector], radius: &Rational) -> Result<Option<Polytope>> {
    check_points(norm, centers)?;
    let halfspaces = norm
        .functionals()
        .iter()
        .map(|a| {
            let lowest = centers.iter().map(|c| a.dot(c)).min().unwrap();
            HalfSpace::new(a.clone(), radius + lowest)
        })
        .collect::<Result<Vec<_>>>()?;
    match Polytope::from_halfspaces(&halfspaces, norm.dim()) {
        Ok(p) => Ok(Some(p)),
        Err(GeomError::EmptyPolytope) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn center_set(norm: &NormBody, points: &[Vector]) -> Result<CenterSet> {
    Ok(CenterSet {
        polytope: balls_intersection(norm, points, &Rational::one())?,
    })
}

pub fn ball_hull(norm: &NormBody, points: &[Vector]) -> Result<BallHull> {
    let centers = center_set(norm, points)?;
    let hull = match &centers.polytope {
        None => Hull::WholeSpace,
        Some(c) => Hull::Body(
            balls_intersection(norm, c.vertices(), &Rational::one())?
                .expect("a ball hull contains its generators"),
        ),
    };
    Ok(BallHull {
        hull,
        center_set: centers,
        generators: points.to_vec(),
    })
}

/// Ball hull of a polytope, computed from its vertices.
pub fn ball_hull_of(norm: &NormBody, body: &Polytope) -> Result<BallHull> {
    ball_hull(norm, body.vertices())
}

/// Smallest enclosing ball by exact LP over `(center, radius)`.
pub fn circumball(norm: &NormBody, points: &[Vector]) -> Result<CircumResult> {
    check_points(norm, points)?;
    let n = norm.dim();
    // a·(s - c) <= r  for all s  <=>  -a·c - r <= -max_s a·s
    let constraints = norm
        .functionals()
        .iter()
        .map(|a| {
            let highest = points.iter().map(|s| a.dot(s)).max().unwrap();
            let mut row: Vec<Rational> = a.coords().iter().map(|x| -x).collect();
            row.push(-Rational::one());
            HalfSpace::new(Vector::new(row), -highest)
        })
        .collect::<Result<Vec<_>>>()?;
    let sol = lp_solve(&Vector::unit(n + 1, n), &constraints, Sense::Min)?;
    let mut coords = sol.argpoint.into_coords();
    coords.pop();
    let center_set = balls_intersection(norm, points, &sol.value)?
        .expect("the optimal radius admits a center");
    Ok(CircumResult {
        radius: sol.value,
        center_set,
        witness_center: Vector::new(coords),
    })
}

pub fn is_b_bounded(norm: &NormBody, points: &[Vector]) -> Result<bool> {
    Ok(circumball(norm, points)?.radius < Rational::one())
}

/// `P = bh₁(P)`
pub fn is_b_convex(norm: &NormBody, body: &Polytope) -> Result<bool> {
    match ball_hull_of(norm, body)?.hull {
        Hull::Body(h) => polytope_equal(&h, body),
        Hull::WholeSpace => Ok(false),
    }
}

/// Restricts `S` to the circumsphere of the witness circumball and measures it.
pub fn circumsphere_restriction(norm: &NormBody, points: &[Vector]) -> Result<CircumsphereRestriction> {
    check_points(norm, points)?;
    if points.len() == 1 {
        return Err(GeomError::DegenerateSingleton);
    }
    let circ = circumball(norm, points)?;
    let on_sphere: Vec<Vector> = points
        .iter()
        .filter(|s| norm.dist(s, &circ.witness_center) == circ.radius)
        .cloned()
        .collect();
    let restricted = circumball(norm, &on_sphere)?;
    let mut best = (on_sphere[0].clone(), on_sphere[0].clone(), Rational::zero());
    for (i, x) in on_sphere.iter().enumerate() {
        for y in &on_sphere[i + 1..] {
            let d = norm.dist(x, y);
            if d > best.2 {
                best = (x.clone(), y.clone(), d);
            }
        }
    }
    Ok(CircumsphereRestriction {
        circumradius: circ.radius,
        on_sphere,
        radius_of_restriction: restricted.radius,
        extremal_pair: (best.0, best.1),
        pair_distance: best.2,
    })
}

/// `(n+1)/n`, the lower bound factor for the extremal pair.
pub fn jung_pair_factor(n: usize) -> Rational {
    ratio(n as i64 + 1, n as i64)
}
