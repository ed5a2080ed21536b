use std::collections::{BTreeSet, VecDeque};

use fixedbitset::FixedBitSet;

use super::Polytope;
use crate::error::Result;
use crate::vector::Vector;

/// A non-empty face of a polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Indices into the parent's `hrep()` of the halfspaces tight on the whole face.
    pub active: Vec<usize>,
    pub polytope: Polytope,
    /// Vertex centroid, a relative-interior point.
    pub sample: Vector,
}

/// Every non-empty face of `p`, including `p` itself, ordered by decreasing
/// dimension and then by vertex list.
pub fn face_lattice(p: &Polytope) -> Result<Vec<Face>> {
    let nv = p.vertices().len();
    let incidence: Vec<FixedBitSet> = p
        .hrep()
        .iter()
        .map(|h| {
            let mut s = FixedBitSet::with_capacity(nv);
            for (k, v) in p.vertices().iter().enumerate() {
                if h.is_tight(v) {
                    s.insert(k);
                }
            }
            s
        })
        .collect();

    let mut all = FixedBitSet::with_capacity(nv);
    all.insert_range(..);
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::from([all]);
    seen.insert((0..nv).collect());
    let mut vertex_sets = Vec::new();
    while let Some(face) = queue.pop_front() {
        for inc in &incidence {
            if face.is_subset(inc) {
                continue;
            }
            let mut sub = face.clone();
            sub.intersect_with(inc);
            if sub.is_clear() {
                continue;
            }
            if seen.insert(sub.ones().collect()) {
                queue.push_back(sub);
            }
        }
        vertex_sets.push(face);
    }

    let mut faces = vertex_sets
        .into_iter()
        .map(|set| {
            let verts: Vec<Vector> = set.ones().map(|k| p.vertices()[k].clone()).collect();
            let active = incidence
                .iter()
                .enumerate()
                .filter(|(_, inc)| set.is_subset(inc))
                .map(|(i, _)| i)
                .collect();
            let sample = Vector::centroid(&verts);
            Ok(Face {
                active,
                polytope: Polytope::from_points(&verts, p.ambient_dim())?,
                sample,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    faces.sort_by(|a, b| {
        b.polytope
            .affine_dim()
            .cmp(&a.polytope.affine_dim())
            .then_with(|| a.polytope.vertices().cmp(b.polytope.vertices()))
    });
    Ok(faces)
}
