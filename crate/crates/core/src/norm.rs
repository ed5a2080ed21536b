//! Polyhedral Minkowski norms.
//!
//! A [`NormBody`] is an o-symmetric, full-dimensional polytope together with
//! its facet functionals `a_i`, scaled so that the unit ball is
//! `{ x : a_i · x <= 1 }`. The norm is then `‖x‖ = max_i a_i · x`.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{GeomError, Result};
use crate::polytope::Polytope;
use crate::rational::{from_f64_with_denominator, int, ratio, Rational};
use crate::vector::{check_dims, Vector};

/// Denominator used for the vertex coordinates of `regular:2m` approximations.
pub const REGULAR_DENOMINATOR: i64 = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormBody {
    name: String,
    unit_ball: Polytope,
    functionals: Vec<Vector>,
}

impl NormBody {
    /// Validates a custom unit ball.
    pub fn from_polytope(unit_ball: Polytope) -> Result<Self> {
        Self::with_name("custom".to_string(), unit_ball)
    }

    fn with_name(name: String, unit_ball: Polytope) -> Result<Self> {
        let verts: BTreeSet<&Vector> = unit_ball.vertices().iter().collect();
        if unit_ball.vertices().iter().any(|v| !verts.contains(&-v)) {
            return Err(GeomError::NotSymmetric);
        }
        if !unit_ball.is_full_dimensional() {
            return Err(GeomError::NotFullDimensional);
        }
        let mut functionals = Vec::with_capacity(unit_ball.hrep().len());
        for h in unit_ball.hrep() {
            if !h.offset().is_positive() {
                return Err(GeomError::OriginNotInterior);
            }
            functionals.push(h.normal().scale(&(Rational::one() / h.offset())));
        }
        functionals.sort();
        Ok(NormBody {
            name,
            unit_ball,
            functionals,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.unit_ball.ambient_dim()
    }

    pub fn unit_ball(&self) -> &Polytope {
        &self.unit_ball
    }

    pub fn functionals(&self) -> &[Vector] {
        &self.functionals
    }

    pub fn eval(&self, x: &Vector) -> Result<Rational> {
        x.check_dim(self.dim())?;
        Ok(self.eval_unchecked(x))
    }

    pub(crate) fn eval_unchecked(&self, x: &Vector) -> Rational {
        self.functionals
            .iter()
            .map(|a| a.dot(x))
            .max()
            .expect("a norm body has facets")
    }

    /// `‖x - y‖`
    pub fn dist(&self, x: &Vector, y: &Vector) -> Rational {
        self.eval_unchecked(&(x - y))
    }

    /// The ball `center + radius · B` as a polytope.
    pub fn ball_polytope(&self, center: &Vector, radius: &Rational) -> Result<Polytope> {
        self.unit_ball.scaled_translate(radius, center)
    }

    pub fn ball<'a>(&'a self, center: Vector, radius: Rational) -> Result<Ball<'a>> {
        center.check_dim(self.dim())?;
        if radius.is_negative() {
            return Err(GeomError::InvalidArgument("negative radius".into()));
        }
        Ok(Ball {
            center,
            radius,
            norm: self,
        })
    }
}

/// A closed ball `B(center, radius)` of a polyhedral norm.
#[derive(Clone, Debug)]
pub struct Ball<'a> {
    pub center: Vector,
    pub radius: Rational,
    pub norm: &'a NormBody,
}

impl Ball<'_> {
    pub fn contains(&self, x: &Vector) -> bool {
        self.norm.dist(x, &self.center) <= self.radius
    }

    /// Points at distance exactly `radius` from the center.
    pub fn on_sphere(&self, x: &Vector) -> bool {
        self.norm.dist(x, &self.center) == self.radius
    }

    pub fn polytope(&self) -> Result<Polytope> {
        self.norm.ball_polytope(&self.center, &self.radius)
    }
}

/// Builds a named norm: `linf:n`, `l1:n` or `regular:2m`.
///
/// `regular:2m` is the 2m-gon inscribed in the Euclidean unit circle with
/// vertices at angles kπ/m. Coordinates are rounded to the grid
/// `1/REGULAR_DENOMINATOR`; only the first m vertices are rounded and the
/// rest are their negatives, so the body stays exactly symmetric. Multiples
/// of π/2 land on the grid exactly.
pub fn make_norm(name: &str) -> Result<NormBody> {
    let unknown = || GeomError::UnknownNorm(name.to_string());
    let (kind, arg) = name.split_once(':').ok_or_else(unknown)?;
    let k: usize = arg.parse().map_err(|_| unknown())?;
    if k == 0 {
        return Err(unknown());
    }
    let body = match kind {
        "linf" => {
            Polytope::from_box(&Vector::new(vec![int(-1); k]), &Vector::new(vec![int(1); k]))?
        }
        "l1" => {
            let pts: Vec<Vector> = (0..k)
                .flat_map(|i| {
                    let e = Vector::unit(k, i);
                    [-&e, e]
                })
                .collect();
            Polytope::from_points(&pts, k)?
        }
        "regular" => {
            if k < 4 || k % 2 != 0 {
                return Err(unknown());
            }
            let body = Polytope::from_points(&regular_polygon_vertices(k / 2), 2)?;
            debug_assert_eq!(body.vertices().len(), k);
            body
        }
        _ => return Err(unknown()),
    };
    NormBody::with_name(name.to_string(), body)
}

fn regular_polygon_vertices(m: usize) -> Vec<Vector> {
    let mut out = Vec::with_capacity(2 * m);
    for k in 0..m {
        // reduce k/m so that shared angles of nested polygons round identically
        let g = k.gcd(&m).max(1);
        let angle = (k / g) as f64 * PI / (m / g) as f64;
        let v = Vector::new(vec![
            from_f64_with_denominator(angle.cos(), REGULAR_DENOMINATOR),
            from_f64_with_denominator(angle.sin(), REGULAR_DENOMINATOR),
        ]);
        out.push(-&v);
        out.push(v);
    }
    out
}

pub fn norm_eval(norm: &NormBody, x: &Vector) -> Result<Rational> {
    norm.eval(x)
}

/// `max ‖x - y‖` over pairs; for a polytope pass its vertices.
pub fn diam(norm: &NormBody, points: &[Vector]) -> Result<Rational> {
    if points.is_empty() {
        return Err(GeomError::EmptyInput);
    }
    check_dims(points, norm.dim())?;
    let mut best = Rational::zero();
    for (i, x) in points.iter().enumerate() {
        for y in &points[i + 1..] {
            let d = norm.dist(x, y);
            if d > best {
                best = d;
            }
        }
    }
    Ok(best)
}

/// Two antipodal points whose spindle has empty interior.
///
/// Takes the lexicographically first facet functional and the first two
/// vertices `x1, x2` of that facet, and returns `((x1-x2)/2, (x2-x1)/2)`.
pub fn strictness_witness(norm: &NormBody) -> Result<(Vector, Vector)> {
    let a = &norm.functionals()[0];
    let on_facet: Vec<&Vector> = norm
        .unit_ball()
        .vertices()
        .iter()
        .filter(|v| a.dot(v).is_one())
        .take(2)
        .collect();
    let [x1, x2] = on_facet[..] else {
        return Err(GeomError::NoSegmentOnSphere);
    };
    let half = ratio(1, 2);
    Ok(((x1 - x2).scale(&half), (x2 - x1).scale(&half)))
}
