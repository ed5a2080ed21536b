//! Small named instances shared by the verification suites and the CLI.

use crate::error::Result;
use crate::norm::{make_norm, NormBody};
use crate::polytope::{HalfSpace, Polytope};
use crate::vector::Vector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormSpec {
    Named(String),
    Vertices(Vec<Vector>),
    Halfspaces(Vec<HalfSpace>),
}

impl NormSpec {
    pub fn build(&self, dim: usize) -> Result<NormBody> {
        let norm = match self {
            NormSpec::Named(name) => make_norm(name)?,
            NormSpec::Vertices(vs) => NormBody::from_polytope(Polytope::from_points(vs, dim)?)?,
            NormSpec::Halfspaces(hs) => NormBody::from_polytope(Polytope::from_halfspaces(hs, dim)?)?,
        };
        if norm.dim() != dim {
            return Err(crate::GeomError::DimensionMismatch {
                expected: dim,
                found: norm.dim(),
            });
        }
        Ok(norm)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub dim: usize,
    pub norm: NormSpec,
    pub points: Vec<Vector>,
    pub polytopes: Vec<(String, Polytope)>,
}

fn q(c: &[(i64, i64)]) -> Vector {
    Vector::from_ratios(c)
}

fn v(c: &[i64]) -> Vector {
    Vector::from_ints(c)
}

fn named(name: &str) -> NormSpec {
    NormSpec::Named(name.to_string())
}

/// The hexagon `conv{±(1,0), ±(0,1), ±(1,-1)}`.
pub fn hexagon_vertices() -> Vec<Vector> {
    vec![v(&[1, 0]), v(&[-1, 0]), v(&[0, 1]), v(&[0, -1]), v(&[1, -1]), v(&[-1, 1])]
}

pub fn fixtures() -> Vec<Fixture> {
    let unit_square = Polytope::from_box(&v(&[0, 0]), &v(&[1, 1])).expect("box");
    let triangle = [v(&[0, 0]), v(&[1, 0]), v(&[0, 1])];
    let k2 = Polytope::from_points(&[q(&[(1, 4), (-1, 4), (1, 4)]), q(&[(-1, 4), (1, 4), (1, 4)])], 3).expect("segment");
    vec![
        Fixture {
            name: "square-diagonal",
            dim: 2,
            norm: named("linf:2"),
            points: vec![v(&[0, 0]), v(&[1, 1])],
            polytopes: vec![("candidate".into(), unit_square.clone())],
        },
        Fixture {
            name: "square-edge-pair",
            dim: 2,
            norm: named("linf:2"),
            points: vec![v(&[0, 0]), v(&[1, 0])],
            polytopes: vec![("candidate".into(), unit_square)],
        },
        Fixture {
            name: "segment-pair",
            dim: 2,
            norm: named("linf:2"),
            points: vec![q(&[(-1, 2), (0, 1)]), q(&[(1, 2), (0, 1)])],
            polytopes: vec![],
        },
        Fixture {
            name: "triangle",
            dim: 2,
            norm: named("linf:2"),
            points: triangle.to_vec(),
            polytopes: vec![("body".into(), Polytope::from_points(&triangle, 2).expect("triangle"))],
        },
        Fixture {
            name: "far-pair",
            dim: 2,
            norm: named("linf:2"),
            points: vec![v(&[0, 0]), v(&[3, 0])],
            polytopes: vec![],
        },
        Fixture {
            name: "diamond-triple",
            dim: 2,
            norm: named("l1:2"),
            points: vec![v(&[0, 0]), q(&[(1, 2), (1, 4)]), q(&[(1, 4), (-1, 2)])],
            polytopes: vec![],
        },
        Fixture {
            name: "hexagon-triangle",
            dim: 2,
            norm: NormSpec::Vertices(hexagon_vertices()),
            points: triangle.to_vec(),
            polytopes: vec![],
        },
        Fixture {
            name: "regular-pair",
            dim: 2,
            norm: named("regular:12"),
            points: vec![q(&[(-1, 2), (0, 1)]), q(&[(1, 2), (0, 1)])],
            polytopes: vec![],
        },
        Fixture {
            name: "l1-segments",
            dim: 3,
            norm: named("l1:3"),
            points: vec![q(&[(1, 4), (1, 4), (0, 1)]), q(&[(-1, 4), (-1, 4), (0, 1)])],
            polytopes: vec![("k2".into(), k2)],
        },
        Fixture {
            name: "cube-corner",
            dim: 3,
            norm: named("linf:3"),
            points: vec![v(&[0, 0, 0]), q(&[(1, 2), (0, 1), (0, 1)]), q(&[(0, 1), (1, 2), (1, 4)]), q(&[(1, 4), (1, 4), (1, 2)])],
            polytopes: vec![],
        },
    ]
}

pub fn fixture(name: &str) -> Option<Fixture> {
    fixtures().into_iter().find(|f| f.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_build() {
        for f in fixtures() {
            let n = f.norm.build(f.dim).unwrap();
            assert_eq!(n.dim(), f.dim);
            assert!(f.points.iter().all(|p| p.dim() == f.dim), "{}", f.name);
        }
        assert!(fixture("triangle").is_some());
        assert!(fixture("nothing").is_none());
    }
}
