//! Bounded convex polytopes in dual representation.
//!
//! A [`Polytope`] always carries both its irredundant halfspace description
//! and its vertex set, in canonical form: vertices sorted lexicographically,
//! halfspace normals scaled so the first nonzero entry is ±1, and the
//! affine hull written as pairs of opposite halfspaces taken from the reduced
//! row echelon form of the equality system. Two polytopes describe the same
//! point set iff their canonical forms coincide.

mod dd;
mod faces;
pub(crate) mod linalg;

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::error::{GeomError, Result};
use crate::rational::Rational;
use crate::vector::{check_dims, Vector};

pub use faces::{face_lattice, Face};
use linalg::{normalize_leading, rank, reduce_by, rref};

/// `{ x : normal · x <= offset }`
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfSpace {
    normal: Vector,
    offset: Rational,
}

impl HalfSpace {
    pub fn new(normal: Vector, offset: Rational) -> Result<Self> {
        if normal.is_zero() {
            return Err(GeomError::ZeroVector);
        }
        Ok(HalfSpace { normal, offset })
    }

    pub fn normal(&self) -> &Vector {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    /// `offset - normal · x`, nonnegative exactly on the halfspace.
    pub fn slack(&self, x: &Vector) -> Rational {
        &self.offset - self.normal.dot(x)
    }

    pub fn contains(&self, x: &Vector) -> bool {
        !self.slack(x).is_negative()
    }

    pub fn is_tight(&self, x: &Vector) -> bool {
        self.slack(x).is_zero()
    }

    fn from_row(mut row: Vec<Rational>) -> Self {
        let offset = row.pop().expect("row has an offset column");
        HalfSpace {
            normal: Vector::new(row),
            offset,
        }
    }
}

/// Input accepted by [`dd_convert`].
#[derive(Clone, Debug)]
pub enum Representation {
    H(Vec<HalfSpace>),
    V(Vec<Vector>),
}

/// A non-empty bounded convex polytope, possibly lower-dimensional.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polytope {
    dim: usize,
    affine_dim: usize,
    hrep: Vec<HalfSpace>,
    vertices: Vec<Vector>,
}

impl Polytope {
    /// Convex hull of a finite non-empty point set.
    pub fn from_points(points: &[Vector], dim: usize) -> Result<Self> {
        if points.is_empty() {
            return Err(GeomError::EmptyInput);
        }
        check_dims(points, dim)?;
        let points: Vec<Vector> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();

        // valid inequalities (a, b) with a·v <= b form the cone { (a,b) : (v,-1)·(a,b) <= 0 }
        let rows: Vec<Vec<Rational>> = points
            .iter()
            .map(|v| {
                let mut r = v.coords().to_vec();
                r.push(-Rational::from_integer(1.into()));
                r
            })
            .collect();
        let gens = dd::cone_generators(dim + 1, &rows);

        let (eq_rows, pivots) = rref(gens.lineality);
        let mut hrep: BTreeSet<HalfSpace> = BTreeSet::new();
        for row in &eq_rows {
            let neg: Vec<Rational> = row.iter().map(|x| -x).collect();
            hrep.insert(HalfSpace::from_row(row.clone()));
            hrep.insert(HalfSpace::from_row(neg));
        }
        for ray in gens.rays {
            if ray.tight.is_clear() {
                continue;
            }
            let mut row = ray.coords;
            reduce_by(&mut row, &eq_rows, &pivots);
            if normalize_leading(&mut row, dim) {
                hrep.insert(HalfSpace::from_row(row));
            }
        }
        let hrep: Vec<HalfSpace> = hrep.into_iter().collect();

        let vertices = points
            .into_iter()
            .filter(|p| {
                let tight: Vec<Vec<Rational>> = hrep
                    .iter()
                    .filter(|h| h.is_tight(p))
                    .map(|h| h.normal.coords().to_vec())
                    .collect();
                rank(tight) == dim
            })
            .collect();

        Ok(Polytope {
            dim,
            affine_dim: dim - eq_rows.len(),
            hrep,
            vertices,
        })
    }

    /// Intersection of halfspaces; must be non-empty and bounded.
    pub fn from_halfspaces(halfspaces: &[HalfSpace], dim: usize) -> Result<Self> {
        for h in halfspaces {
            h.normal.check_dim(dim)?;
        }
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(halfspaces.len() + 1);
        let mut t_row = vec![Rational::zero(); dim + 1];
        t_row[dim] = -Rational::from_integer(1.into());
        rows.push(t_row);
        // a·x <= b  becomes  a·x - b t <= 0 on the cone over the polytope
        for h in dedup_halfspaces(halfspaces) {
            let mut r = h.normal.coords().to_vec();
            r.push(-&h.offset);
            rows.push(r);
        }
        let gens = dd::cone_generators(dim + 1, &rows);

        let mut vertices = Vec::new();
        let mut recession = !gens.lineality.is_empty();
        for ray in &gens.rays {
            let t = &ray.coords[dim];
            if t.is_positive() {
                vertices.push(Vector::new(ray.coords[..dim].iter().map(|c| c / t).collect()));
            } else {
                recession = true;
            }
        }
        if vertices.is_empty() {
            return Err(GeomError::EmptyPolytope);
        }
        if recession {
            return Err(GeomError::Unbounded);
        }
        Self::from_points(&vertices, dim)
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == self.dim
    }

    pub fn hrep(&self) -> &[HalfSpace] {
        &self.hrep
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn contains(&self, x: &Vector) -> bool {
        self.hrep.iter().all(|h| h.contains(x))
    }

    /// Membership in the interior (with respect to ℝⁿ, not the affine hull).
    pub fn contains_in_interior(&self, x: &Vector) -> bool {
        self.is_full_dimensional() && self.hrep.iter().all(|h| h.slack(x).is_positive())
    }

    pub fn contains_polytope(&self, other: &Polytope) -> bool {
        other.vertices.iter().all(|v| self.contains(v))
    }

    /// `center + radius * self`, computed on both representations directly.
    pub fn scaled_translate(&self, radius: &Rational, center: &Vector) -> Result<Polytope> {
        center.check_dim(self.dim)?;
        if radius.is_negative() {
            return Err(GeomError::InvalidArgument("negative radius".into()));
        }
        if radius.is_zero() {
            return Polytope::from_points(std::slice::from_ref(center), self.dim);
        }
        let mut hrep: Vec<HalfSpace> = self
            .hrep
            .iter()
            .map(|h| HalfSpace {
                normal: h.normal.clone(),
                offset: &h.offset * radius + h.normal.dot(center),
            })
            .collect();
        hrep.sort();
        let vertices = self
            .vertices
            .iter()
            .map(|v| center.add_scaled(radius, v))
            .collect();
        Ok(Polytope {
            dim: self.dim,
            affine_dim: self.affine_dim,
            hrep,
            vertices,
        })
    }

    /// Axis-aligned box `[lo_i, hi_i]`.
    pub fn from_box(lo: &Vector, hi: &Vector) -> Result<Polytope> {
        let n = lo.dim();
        hi.check_dim(n)?;
        let mut hs = Vec::with_capacity(2 * n);
        for i in 0..n {
            hs.push(HalfSpace::new(Vector::unit(n, i), hi[i].clone())?);
            hs.push(HalfSpace::new(-&Vector::unit(n, i), -&lo[i])?);
        }
        Polytope::from_halfspaces(&hs, n)
    }
}

/// Keeps, for every distinct normal direction, only the tightest offset.
fn dedup_halfspaces(halfspaces: &[HalfSpace]) -> Vec<HalfSpace> {
    use std::collections::BTreeMap;
    let mut best: BTreeMap<Vec<Rational>, Rational> = BTreeMap::new();
    for h in halfspaces {
        let mut row = h.normal.coords().to_vec();
        row.push(h.offset.clone());
        let n = row.len() - 1;
        normalize_leading(&mut row, n);
        let off = row.pop().unwrap();
        best.entry(row)
            .and_modify(|b| {
                if off < *b {
                    *b = off.clone()
                }
            })
            .or_insert(off);
    }
    best.into_iter()
        .map(|(n, o)| HalfSpace {
            normal: Vector::new(n),
            offset: o,
        })
        .collect()
}

/// Converts between representations, returning the canonical polytope.
pub fn dd_convert(input: &Representation, dim: usize) -> Result<Polytope> {
    match input {
        Representation::H(hs) => Polytope::from_halfspaces(hs, dim),
        Representation::V(vs) => Polytope::from_points(vs, dim),
    }
}

pub fn polytope_equal(p: &Polytope, q: &Polytope) -> Result<bool> {
    if p.dim != q.dim {
        return Err(GeomError::DimensionMismatch {
            expected: p.dim,
            found: q.dim,
        });
    }
    Ok(p.vertices == q.vertices)
}

/// Intersection of a non-empty family; `None` when the intersection is empty.
pub fn intersect(polytopes: &[Polytope]) -> Result<Option<Polytope>> {
    let first = polytopes.first().ok_or(GeomError::EmptyInput)?;
    let dim = first.dim;
    let mut hs = Vec::new();
    for p in polytopes {
        if p.dim != dim {
            return Err(GeomError::DimensionMismatch {
                expected: dim,
                found: p.dim,
            });
        }
        hs.extend(p.hrep.iter().cloned());
    }
    match Polytope::from_halfspaces(&hs, dim) {
        Ok(p) => Ok(Some(p)),
        Err(GeomError::EmptyPolytope) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Largest `λ >= 0` with `origin + λ·direction` in `p`.
pub fn ray_max(p: &Polytope, origin: &Vector, direction: &Vector) -> Result<Rational> {
    origin.check_dim(p.dim)?;
    direction.check_dim(p.dim)?;
    if direction.is_zero() {
        return Err(GeomError::ZeroVector);
    }
    if !p.contains(origin) {
        return Err(GeomError::OriginOutside);
    }
    p.hrep
        .iter()
        .filter_map(|h| {
            let rate = h.normal.dot(direction);
            rate.is_positive().then(|| h.slack(origin) / rate)
        })
        .min()
        .ok_or(GeomError::Unbounded)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn v(c: &[i64]) -> Vector {
        Vector::from_ints(c)
    }

    fn square(lo: i64, hi: i64) -> Polytope {
        Polytope::from_box(&v(&[lo, lo]), &v(&[hi, hi])).unwrap()
    }

    fn hs(n: &[i64], b: i64) -> HalfSpace {
        HalfSpace::new(v(n), int(b)).unwrap()
    }

    #[test]
    fn square_from_halfspaces() {
        let p = square(-1, 1);
        assert_eq!(
            p.vertices(),
            &[v(&[-1, -1]), v(&[-1, 1]), v(&[1, -1]), v(&[1, 1])]
        );
        assert_eq!(p.hrep().len(), 4);
        assert_eq!(p.affine_dim(), 2);
    }

    #[test]
    fn cross_polytope_from_vertices() {
        let p = Polytope::from_points(&[v(&[1, 0]), v(&[0, 1]), v(&[-1, 0]), v(&[0, -1])], 2).unwrap();
        let expect = vec![hs(&[-1, -1], 1), hs(&[-1, 1], 1), hs(&[1, -1], 1), hs(&[1, 1], 1)];
        assert_eq!(p.hrep(), expect.as_slice());
    }

    #[test]
    fn contradictory_constraints_are_empty() {
        let r = Polytope::from_halfspaces(&[hs(&[1], 0), hs(&[-1], -1)], 1);
        assert_eq!(r, Err(GeomError::EmptyPolytope));
    }

    #[test]
    fn halfplane_is_unbounded() {
        let r = Polytope::from_halfspaces(&[hs(&[1, 0], 0), hs(&[0, 1], 1), hs(&[0, -1], 1)], 2);
        assert_eq!(r, Err(GeomError::Unbounded));
    }

    #[test]
    fn interior_points_are_dropped() {
        let p = Polytope::from_points(&[v(&[0, 0]), v(&[2, 0]), v(&[0, 2]), v(&[1, 0]), v(&[0, 0])], 2).unwrap();
        assert_eq!(p.vertices().len(), 3);
        assert_eq!(p.hrep().len(), 3);
    }

    #[test]
    fn equality_permuted_halfspaces() {
        let a = square(-1, 1);
        let mut h = a.hrep().to_vec();
        h.reverse();
        let b = Polytope::from_halfspaces(&h, 2).unwrap();
        assert!(polytope_equal(&a, &b).unwrap());
        let shifted = a.scaled_translate(&int(1), &v(&[1, 0])).unwrap();
        assert!(!polytope_equal(&a, &shifted).unwrap());
    }

    #[test]
    fn segment_both_ways() {
        let from_v = Polytope::from_points(&[v(&[0, 0]), v(&[1, 0])], 2).unwrap();
        let from_h = Polytope::from_halfspaces(
            &[hs(&[0, 1], 0), hs(&[0, -1], 0), hs(&[1, 0], 1), hs(&[-1, 0], 0)],
            2,
        )
        .unwrap();
        assert!(polytope_equal(&from_v, &from_h).unwrap());
        assert_eq!(from_v.hrep(), from_h.hrep());
        assert_eq!(from_v.affine_dim(), 1);
    }

    #[test]
    fn single_point() {
        let p = Polytope::from_points(&[Vector::from_ratios(&[(1, 2), (1, 3), (0, 1)])], 3).unwrap();
        assert_eq!(p.affine_dim(), 0);
        assert_eq!(p.hrep().len(), 6);
        assert!(p.contains(&Vector::from_ratios(&[(1, 2), (1, 3), (0, 1)])));
        assert!(!p.contains(&Vector::from_ratios(&[(1, 2), (1, 3), (1, 9)])));
    }

    #[test]
    fn intersect_boxes() {
        let a = square(-1, 1);
        let b = square(0, 2);
        let c = intersect(&[a.clone(), b]).unwrap().unwrap();
        assert_eq!(c, square(0, 1));
        assert_eq!(intersect(&[square(0, 1), square(2, 3)]).unwrap(), None);
        assert_eq!(intersect(&[a.clone()]).unwrap(), Some(a));
        assert_eq!(intersect(&[]), Err(GeomError::EmptyInput));
    }

    #[test]
    fn ray_shooting() {
        let p = square(-1, 1);
        assert_eq!(ray_max(&p, &v(&[0, 0]), &v(&[1, 0])).unwrap(), int(1));
        assert_eq!(ray_max(&p, &v(&[-1, 1]), &v(&[-3, 1])).unwrap(), int(0));
        assert_eq!(ray_max(&p, &v(&[2, 0]), &v(&[1, 0])), Err(GeomError::OriginOutside));
        assert_eq!(ray_max(&p, &v(&[0, 0]), &v(&[2, 1])).unwrap(), ratio(1, 2));
    }

    #[test]
    fn scaled_translate_matches_rebuild() {
        let p = Polytope::from_points(&[v(&[1, 0]), v(&[0, 1]), v(&[-1, 0]), v(&[0, -1])], 2).unwrap();
        let q = p.scaled_translate(&ratio(1, 2), &v(&[3, -1])).unwrap();
        let rebuilt = Polytope::from_points(q.vertices(), 2).unwrap();
        assert_eq!(q, rebuilt);
    }
}
