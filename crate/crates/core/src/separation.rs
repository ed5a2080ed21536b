//! Separation by unit spheres, exposed b-faces and generating sets.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::error::{GeomError, Result};
use crate::hull::{ball_hull, center_set, circumball, is_b_convex, Hull};
use crate::lp::{lp_solve, Sense};
use crate::norm::NormBody;
use crate::polytope::{face_lattice, intersect, polytope_equal, Polytope};
use crate::rational::{ratio, Rational};
use crate::vector::Vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    /// `S(y0,1)` supports the body and passes through the target point.
    SupportingAtPoint,
    /// The body lies in `B(y0,1)`, the target does not.
    PointExcluded,
    /// As `PointExcluded`, with the body inside the smaller ball `B(y0, shrink_radius)`.
    StrictWithRadius,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationCertificate {
    pub y0: Vector,
    pub kind: CertificateKind,
    pub shrink_radius: Option<Rational>,
    pub excluded_point: Option<Vector>,
    /// The point the certificate talks about (touched or excluded).
    pub target: Vector,
}

fn invalid(msg: &str) -> GeomError {
    GeomError::CertificateInvalid(msg.to_string())
}

impl SeparationCertificate {
    /// Builds a certificate and re-checks every inequality it claims.
    pub fn new(
        norm: &NormBody,
        body: &Polytope,
        y0: Vector,
        kind: CertificateKind,
        target: Vector,
        shrink_radius: Option<Rational>,
    ) -> Result<Self> {
        let excluded_point = match kind {
            CertificateKind::SupportingAtPoint => None,
            _ => Some(target.clone()),
        };
        let cert = SeparationCertificate {
            y0,
            kind,
            shrink_radius,
            excluded_point,
            target,
        };
        cert.verify(norm, body)?;
        Ok(cert)
    }

    pub fn verify(&self, norm: &NormBody, body: &Polytope) -> Result<()> {
        let one = Rational::one();
        let dists: Vec<Rational> = body.vertices().iter().map(|v| norm.dist(v, &self.y0)).collect();
        if dists.iter().any(|d| *d > one) {
            return Err(invalid("body not inside the unit ball"));
        }
        let target_dist = norm.dist(&self.target, &self.y0);
        match self.kind {
            CertificateKind::SupportingAtPoint => {
                if target_dist != one || !body.contains(&self.target) {
                    return Err(invalid("sphere does not pass through the body point"));
                }
            }
            CertificateKind::PointExcluded => {
                if target_dist <= one {
                    return Err(invalid("point not excluded"));
                }
                if !dists.contains(&one) {
                    return Err(invalid("sphere does not support the body"));
                }
            }
            CertificateKind::StrictWithRadius => {
                if target_dist <= one {
                    return Err(invalid("point not excluded"));
                }
                let r = self.shrink_radius.as_ref().ok_or_else(|| invalid("missing radius"))?;
                if *r >= one || dists.iter().any(|d| d > r) {
                    return Err(invalid("body not inside the shrunken ball"));
                }
            }
        }
        Ok(())
    }
}

fn body_center_set(norm: &NormBody, body: &Polytope) -> Result<Option<Polytope>> {
    Ok(center_set(norm, body.vertices())?.polytope)
}

/// A unit sphere through a boundary point `x0` of a b-convex body that keeps the body inside.
pub fn supporting_sphere_at(norm: &NormBody, body: &Polytope, x0: &Vector) -> Result<SeparationCertificate> {
    x0.check_dim(norm.dim())?;
    if !is_b_convex(norm, body)? {
        return Err(GeomError::NotBConvex);
    }
    if !body.contains(x0) || body.contains_in_interior(x0) {
        return Err(GeomError::NotBoundary);
    }
    let centers = body_center_set(norm, body)?.ok_or(GeomError::NotBConvex)?;
    // maximize a·(x0 - y) over y in the center set, one program per functional
    let mut best: Option<(Rational, Vector)> = None;
    for a in norm.functionals() {
        let sol = lp_solve(a, centers.hrep(), Sense::Min)?;
        let value = a.dot(x0) - sol.value;
        let better = match &best {
            None => true,
            Some((bv, by)) => value > *bv || (value == *bv && sol.argpoint < *by),
        };
        if better {
            best = Some((value, sol.argpoint));
        }
    }
    let (value, y) = best.expect("norms have functionals");
    if value < Rational::one() {
        return Err(GeomError::NotBoundary);
    }
    SeparationCertificate::new(norm, body, y, CertificateKind::SupportingAtPoint, x0.clone(), None)
}

/// The intermediate data of [`separate_point`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationTrace {
    /// First center-set vertex whose unit ball misses the point.
    pub start: Vector,
    /// How far the start was pushed away from the point.
    pub push: Rational,
    pub certificate: SeparationCertificate,
}

/// Separation of a point outside the ball hull, with the construction steps.
pub fn separate_point_traced(norm: &NormBody, body: &Polytope, x0: &Vector) -> Result<SeparationTrace> {
    x0.check_dim(norm.dim())?;
    let centers = body_center_set(norm, body)?.ok_or(GeomError::PointInsideHull)?;
    let one = Rational::one();
    let start = centers
        .vertices()
        .iter()
        .find(|v| norm.dist(x0, v) > one)
        .ok_or(GeomError::PointInsideHull)?
        .clone();
    let direction = &start - x0;
    let push = crate::polytope::ray_max(&centers, &start, &direction)?;
    let y0 = start.add_scaled(&push, &direction);
    let certificate = SeparationCertificate::new(norm, body, y0, CertificateKind::PointExcluded, x0.clone(), None)?;
    Ok(SeparationTrace {
        start,
        push,
        certificate,
    })
}

pub fn separate_point(norm: &NormBody, body: &Polytope, x0: &Vector) -> Result<SeparationCertificate> {
    Ok(separate_point_traced(norm, body, x0)?.certificate)
}

/// Strict separation of a point from a b-bounded body.
pub fn separate_point_strict(norm: &NormBody, body: &Polytope, x0: &Vector) -> Result<SeparationCertificate> {
    x0.check_dim(norm.dim())?;
    let circ = circumball(norm, body.vertices())?;
    if circ.radius >= Rational::one() {
        return Err(GeomError::NotBBounded);
    }
    if body.contains(x0) {
        return Err(GeomError::PointInsideBody);
    }
    let y1 = circ.witness_center;
    let y2 = separate_point(norm, body, x0)?.y0;
    let toward = &y1 - &y2;
    let one = Rational::one();
    let mut eps = ratio(1, 2);
    let y0 = loop {
        let y = y2.add_scaled(&eps, &toward);
        if norm.dist(x0, &y) > one {
            break y;
        }
        eps /= Rational::from_integer(2.into());
    };
    let shrink = body
        .vertices()
        .iter()
        .map(|v| norm.dist(v, &y0))
        .max()
        .unwrap_or_else(Rational::zero);
    SeparationCertificate::new(norm, body, y0, CertificateKind::StrictWithRadius, x0.clone(), Some(shrink))
}

/// `K ∩ S(center,1)` stored as its maximal polytope pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExposedBFace {
    pub center: Vector,
    pub pieces: Vec<Polytope>,
    pub is_singleton: bool,
}

impl ExposedBFace {
    pub fn contains(&self, x: &Vector) -> bool {
        self.pieces.iter().any(|p| p.contains(x))
    }

    pub fn meets_polytope(&self, q: &Polytope) -> Result<bool> {
        for p in &self.pieces {
            if intersect(&[p.clone(), q.clone()])?.is_some() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn key(&self) -> Vec<Vec<Vector>> {
        self.pieces.iter().map(|p| p.vertices().to_vec()).collect()
    }
}

/// Maximal faces of `body` exposed by the functionals that reach 1 at `center`.
fn face_pieces(norm: &NormBody, body: &Polytope, center: &Vector) -> Result<Vec<Polytope>> {
    let one = Rational::one();
    let mut sets: BTreeSet<Vec<Vector>> = BTreeSet::new();
    for a in norm.functionals() {
        let touching: Vec<Vector> = body
            .vertices()
            .iter()
            .filter(|v| a.dot(&(*v - center)) == one)
            .cloned()
            .collect();
        if !touching.is_empty() {
            sets.insert(touching);
        }
    }
    let sets: Vec<Vec<Vector>> = sets.into_iter().collect();
    let maximal: Vec<&Vec<Vector>> = sets
        .iter()
        .filter(|s| {
            !sets
                .iter()
                .any(|t| t.len() > s.len() && s.iter().all(|v| t.contains(v)))
        })
        .collect();
    maximal
        .into_iter()
        .map(|s| Polytope::from_points(s, norm.dim()))
        .collect()
}

/// Every exposed b-face, one per face of the center set, deduplicated and sorted.
pub fn exposed_b_faces(norm: &NormBody, body: &Polytope) -> Result<Vec<ExposedBFace>> {
    if !is_b_convex(norm, body)? {
        return Err(GeomError::NotBConvex);
    }
    let centers = body_center_set(norm, body)?.ok_or(GeomError::NotBConvex)?;
    let mut out: Vec<ExposedBFace> = Vec::new();
    let mut seen: BTreeSet<Vec<Vec<Vector>>> = BTreeSet::new();
    for face in face_lattice(&centers)? {
        let pieces = face_pieces(norm, body, &face.sample)?;
        let verts = face.polytope.vertices();
        for w in [&verts[0], &verts[verts.len() - 1]] {
            let probe = face.sample.midpoint(w);
            if face_pieces(norm, body, &probe)? != pieces {
                return Err(GeomError::SampleInconsistency);
            }
        }
        if pieces.is_empty() {
            continue;
        }
        let f = ExposedBFace {
            center: face.sample,
            is_singleton: pieces.len() == 1 && pieces[0].is_point(),
            pieces,
        };
        if seen.insert(f.key()) {
            out.push(f);
        }
    }
    out.sort_by_key(|f| f.key());
    Ok(out)
}

pub fn b_exposed_points(norm: &NormBody, body: &Polytope) -> Result<Vec<Vector>> {
    if !is_b_convex(norm, body)? {
        return Err(GeomError::NotBConvex);
    }
    if circumball(norm, body.vertices())?.radius >= Rational::one() {
        return Ok(Vec::new());
    }
    let points: BTreeSet<Vector> = exposed_b_faces(norm, body)?
        .into_iter()
        .filter(|f| f.is_singleton)
        .map(|f| f.pieces[0].vertices()[0].clone())
        .collect();
    Ok(points.into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationAnswer {
    pub generates: bool,
    pub missed_face: Option<ExposedBFace>,
}

/// Whether `bh₁(S) = K`, decided both directly and by checking that every
/// exposed b-face of `K` contains a point of `S`.
pub fn generates_hull(norm: &NormBody, body: &Polytope, points: &[Vector]) -> Result<GenerationAnswer> {
    if points.is_empty() {
        return Err(GeomError::EmptyInput);
    }
    if circumball(norm, body.vertices())?.radius >= Rational::one() {
        return Err(GeomError::NotBBounded);
    }
    if points.iter().any(|s| !body.contains(s)) {
        return Err(GeomError::SNotInK);
    }
    let direct = match ball_hull(norm, points)?.hull {
        Hull::Body(h) => polytope_equal(&h, body)?,
        Hull::WholeSpace => false,
    };
    let missed_face = exposed_b_faces(norm, body)?
        .into_iter()
        .find(|f| !points.iter().any(|s| f.contains(s)));
    if direct != missed_face.is_none() {
        return Err(GeomError::CriterionMismatch);
    }
    Ok(GenerationAnswer {
        generates: direct,
        missed_face,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norm::make_norm;
    use crate::rational::int;

    fn v(c: &[i64]) -> Vector {
        Vector::from_ints(c)
    }

    fn q(c: &[(i64, i64)]) -> Vector {
        Vector::from_ratios(c)
    }

    fn unit_square() -> Polytope {
        Polytope::from_box(&v(&[0, 0]), &v(&[1, 1])).unwrap()
    }

    fn seg(a: Vector, b: Vector) -> Polytope {
        Polytope::from_points(&[a, b], 2).unwrap()
    }

    #[test]
    fn supporting_spheres() {
        let n = make_norm("linf:2").unwrap();
        let c = supporting_sphere_at(&n, &unit_square(), &q(&[(1, 1), (1, 2)])).unwrap();
        assert_eq!(c.y0[0], int(0));
        assert_eq!(c.kind, CertificateKind::SupportingAtPoint);
        assert_eq!(
            supporting_sphere_at(&n, &unit_square(), &q(&[(1, 2), (1, 2)])),
            Err(GeomError::NotBoundary)
        );
        let x = q(&[(1, 3), (2, 5)]);
        let pt = Polytope::from_points(std::slice::from_ref(&x), 2).unwrap();
        let c = supporting_sphere_at(&n, &pt, &x).unwrap();
        assert_eq!(c.y0, &x + &n.unit_ball().vertices()[0]);
        let tri = Polytope::from_points(&[v(&[0, 0]), v(&[1, 0]), v(&[0, 1])], 2).unwrap();
        assert_eq!(supporting_sphere_at(&n, &tri, &v(&[0, 0])), Err(GeomError::NotBConvex));
    }

    #[test]
    fn point_separation() {
        let n = make_norm("linf:2").unwrap();
        let origin = Polytope::from_points(&[v(&[0, 0])], 2).unwrap();
        let t = separate_point_traced(&n, &origin, &v(&[2, 0])).unwrap();
        assert_eq!(t.start, v(&[-1, -1]));
        assert_eq!(t.push, int(0));
        assert_eq!(t.certificate.y0, v(&[-1, -1]));
        assert_eq!(n.dist(&v(&[2, 0]), &t.certificate.y0), int(3));

        let c = separate_point(&n, &unit_square(), &v(&[3, 3])).unwrap();
        assert!(n.dist(&v(&[3, 3]), &c.y0) > int(1));
        assert!(unit_square().vertices().iter().all(|w| n.dist(w, &c.y0) <= int(1)));
        assert_eq!(
            separate_point(&n, &unit_square(), &q(&[(1, 2), (1, 2)])),
            Err(GeomError::PointInsideHull)
        );
    }

    #[test]
    fn strict_separation() {
        let n = make_norm("linf:2").unwrap();
        let c = separate_point_strict(&n, &unit_square(), &v(&[3, 3])).unwrap();
        assert!(c.shrink_radius.clone().unwrap() < int(1));
        let wide = Polytope::from_box(&v(&[0, 0]), &v(&[2, 1])).unwrap();
        assert_eq!(separate_point_strict(&n, &wide, &v(&[5, 5])), Err(GeomError::NotBBounded));
        assert_eq!(
            separate_point_strict(&n, &unit_square(), &v(&[1, 1])),
            Err(GeomError::PointInsideBody)
        );
    }

    #[test]
    fn forged_certificates_are_rejected() {
        let n = make_norm("linf:2").unwrap();
        let bad = SeparationCertificate::new(
            &n,
            &unit_square(),
            v(&[5, 5]),
            CertificateKind::PointExcluded,
            v(&[9, 9]),
            None,
        );
        assert!(matches!(bad, Err(GeomError::CertificateInvalid(_))));
    }

    #[test]
    fn square_faces() {
        let n = make_norm("linf:2").unwrap();
        let faces = exposed_b_faces(&n, &unit_square()).unwrap();
        assert_eq!(faces.len(), 8);
        let edges: Vec<&ExposedBFace> = faces.iter().filter(|f| f.pieces.len() == 1).collect();
        let unions: Vec<&ExposedBFace> = faces.iter().filter(|f| f.pieces.len() == 2).collect();
        assert_eq!((edges.len(), unions.len()), (4, 4));
        assert!(edges.iter().any(|f| f.pieces[0] == seg(v(&[0, 1]), v(&[1, 1]))));
        for u in unions {
            assert!(u.pieces.iter().all(|p| p.affine_dim() == 1));
        }
        assert!(b_exposed_points(&n, &unit_square()).unwrap().is_empty());
    }

    #[test]
    fn segment_faces() {
        let n = make_norm("linf:2").unwrap();
        let s = seg(q(&[(-1, 2), (0, 1)]), q(&[(1, 2), (0, 1)]));
        let faces = exposed_b_faces(&n, &s).unwrap();
        // the whole segment (top and bottom spheres) and each endpoint
        assert_eq!(faces.len(), 3);
        assert!(faces.iter().any(|f| f.pieces == vec![s.clone()]));
        assert_eq!(b_exposed_points(&n, &s).unwrap().len(), 2);
    }

    #[test]
    fn unbounded_bodies_have_no_exposed_points() {
        let n = make_norm("l1:3").unwrap();
        assert!(b_exposed_points(&n, n.unit_ball()).unwrap().is_empty());
    }

    #[test]
    fn generating_sets() {
        let n = make_norm("linf:2").unwrap();
        let k = unit_square();
        assert!(generates_hull(&n, &k, &[v(&[0, 0]), v(&[1, 1])]).unwrap().generates);
        let miss = generates_hull(&n, &k, &[v(&[0, 0]), v(&[1, 0])]).unwrap();
        assert!(!miss.generates);
        assert_eq!(miss.missed_face.unwrap().pieces, vec![seg(v(&[0, 1]), v(&[1, 1]))]);
        let mids = [q(&[(1, 2), (1, 1)]), q(&[(0, 1), (1, 2)]), q(&[(1, 2), (0, 1)]), q(&[(1, 1), (1, 2)])];
        assert!(generates_hull(&n, &k, &mids).unwrap().generates);
        assert_eq!(generates_hull(&n, &k, &[v(&[2, 0])]), Err(GeomError::SNotInK));
        let wide = Polytope::from_box(&v(&[0, 0]), &v(&[2, 1])).unwrap();
        assert_eq!(generates_hull(&n, &wide, &[v(&[0, 0])]), Err(GeomError::NotBBounded));
    }
}
