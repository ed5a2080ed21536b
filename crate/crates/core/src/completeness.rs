//! Complete (diametrically maximal) sets and their completions.

use std::collections::BTreeSet;

use num_traits::One;

use crate::error::{GeomError, Result};
use crate::hull::{ball_hull, balls_intersection, Hull};
use crate::norm::{diam, NormBody};
use crate::polytope::{polytope_equal, Polytope};
use crate::rational::format_rational;
use crate::separation::exposed_b_faces;
use crate::vector::Vector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletionReport {
    pub input_diam: crate::Rational,
    pub hull: Hull,
    pub is_complete_hull: bool,
    pub unique_completion: Option<Polytope>,
    /// The three criteria are only evaluated against a candidate completion.
    pub criterion_i: Option<bool>,
    pub criterion_ii: Option<bool>,
    pub criterion_iii: Option<bool>,
}

fn require_unit_diameter(norm: &NormBody, points: &[Vector]) -> Result<()> {
    let d = diam(norm, points)?;
    if d != crate::Rational::one() {
        return Err(GeomError::DiameterNotOne(format_rational(&d)));
    }
    Ok(())
}

/// `C = ⋂_{v ∈ vert C} B(v,1)` for a body of diameter exactly 1.
pub fn is_complete(norm: &NormBody, body: &Polytope) -> Result<bool> {
    require_unit_diameter(norm, body.vertices())?;
    let cap = balls_intersection(norm, body.vertices(), &crate::Rational::one())?
        .expect("the ball around a vertex contains it");
    polytope_equal(&cap, body)
}

/// Every vertex has another vertex at distance exactly 1.
pub fn has_diametral_partners(norm: &NormBody, body: &Polytope) -> bool {
    let one = crate::Rational::one();
    body.vertices()
        .iter()
        .all(|v| body.vertices().iter().any(|w| norm.dist(v, w) == one))
}

pub fn completion_report(norm: &NormBody, points: &[Vector], candidate: Option<&Polytope>) -> Result<CompletionReport> {
    require_unit_diameter(norm, points)?;
    let hull = ball_hull(norm, points)?.hull;
    let is_complete_hull = match &hull {
        Hull::Body(h) => diam(norm, h.vertices())? == crate::Rational::one() && is_complete(norm, h)?,
        Hull::WholeSpace => false,
    };
    let unique_completion = if is_complete_hull { hull.body().cloned() } else { None };

    let mut report = CompletionReport {
        input_diam: crate::Rational::one(),
        hull,
        is_complete_hull,
        unique_completion,
        criterion_i: None,
        criterion_ii: None,
        criterion_iii: None,
    };
    let Some(c) = candidate else {
        return Ok(report);
    };
    let complete = diam(norm, c.vertices())? == crate::Rational::one() && is_complete(norm, c)?;
    if !complete {
        return Err(GeomError::CNotComplete);
    }
    let k = Polytope::from_points(points, norm.dim())?;
    if !c.contains_polytope(&k) {
        return Err(GeomError::KNotInC);
    }
    let by_hull = match &report.hull {
        Hull::Body(h) => polytope_equal(h, c)?,
        Hull::WholeSpace => false,
    };
    let mut by_faces = true;
    for face in exposed_b_faces(norm, c)? {
        if !face.meets_polytope(&k)? {
            by_faces = false;
            break;
        }
    }
    if by_hull != by_faces {
        return Err(GeomError::CriteriaDisagree {
            hull: by_hull,
            faces: by_faces,
        });
    }
    report.criterion_i = Some(by_hull);
    report.criterion_ii = Some(by_hull);
    report.criterion_iii = Some(by_faces);
    Ok(report)
}

/// Inclusion-minimal subsets `F` of `candidates` with `bh₁(F) = body`, of size at most `max_size`.
pub fn minimal_generators(
    norm: &NormBody,
    body: &Polytope,
    candidates: &[Vector],
    max_size: usize,
) -> Result<Vec<Vec<Vector>>> {
    let mut generating: Vec<BTreeSet<usize>> = Vec::new();
    let mut minimal = Vec::new();
    for size in 1..=max_size.min(candidates.len()) {
        for subset in subsets(candidates.len(), size) {
            let set: BTreeSet<usize> = subset.iter().copied().collect();
            if generating.iter().any(|g| g.is_subset(&set)) {
                continue;
            }
            let pts: Vec<Vector> = subset.iter().map(|&i| candidates[i].clone()).collect();
            let hits = match ball_hull(norm, &pts)?.hull {
                Hull::Body(h) => polytope_equal(&h, body)?,
                Hull::WholeSpace => false,
            };
            if hits {
                generating.push(set);
                minimal.push(pts);
            }
        }
    }
    Ok(minimal)
}

/// All `k`-element index subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}
