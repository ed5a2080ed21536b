//! JSON instance files. Rationals are strings such as `"3/4"` or `"-2"`.

use std::collections::BTreeMap;
use std::path::Path;

use ballconv::lab::{Fixture, NormSpec};
use ballconv::rational::{format_rational, parse_rational};
use ballconv::{GeomError, HalfSpace, NormBody, Polytope, Vector};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Geometry(#[from] GeomError),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HalfSpaceObj {
    pub normal: Vec<String>,
    pub offset: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum PolytopeObj {
    Vrep(Vec<Vec<String>>),
    Hrep(Vec<HalfSpaceObj>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NormField {
    Name(String),
    Body(PolytopeObj),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub dim: usize,
    pub norm: NormField,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polytopes: Option<BTreeMap<String, PolytopeObj>>,
}

/// A parsed instance with exact values.
#[derive(Clone, Debug)]
pub struct Instance {
    pub dim: usize,
    pub norm: NormBody,
    pub points: Vec<Vector>,
    pub polytopes: BTreeMap<String, Polytope>,
}

pub fn vector_strings(v: &Vector) -> Vec<String> {
    v.coords().iter().map(format_rational).collect()
}

pub fn parse_vector(coords: &[String], dim: usize) -> Result<Vector, InputError> {
    let v = Vector::new(coords.iter().map(|c| parse_rational(c)).collect::<Result<_, _>>()?);
    v.check_dim(dim)?;
    Ok(v)
}

impl PolytopeObj {
    pub fn from_polytope_vrep(p: &Polytope) -> Self {
        PolytopeObj::Vrep(p.vertices().iter().map(vector_strings).collect())
    }

    pub fn from_halfspaces(hs: &[HalfSpace]) -> Self {
        PolytopeObj::Hrep(
            hs.iter()
                .map(|h| HalfSpaceObj {
                    normal: vector_strings(h.normal()),
                    offset: format_rational(h.offset()),
                })
                .collect(),
        )
    }

    fn halfspaces(items: &[HalfSpaceObj], dim: usize) -> Result<Vec<HalfSpace>, InputError> {
        items
            .iter()
            .map(|h| Ok(HalfSpace::new(parse_vector(&h.normal, dim)?, parse_rational(&h.offset)?)?))
            .collect()
    }

    pub fn to_polytope(&self, dim: usize) -> Result<Polytope, InputError> {
        Ok(match self {
            PolytopeObj::Vrep(pts) => {
                let pts = pts.iter().map(|p| parse_vector(p, dim)).collect::<Result<Vec<_>, _>>()?;
                Polytope::from_points(&pts, dim)?
            }
            PolytopeObj::Hrep(hs) => Polytope::from_halfspaces(&Self::halfspaces(hs, dim)?, dim)?,
        })
    }
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self, InputError> {
        let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn norm_spec(&self) -> Result<NormSpec, InputError> {
        Ok(match &self.norm {
            NormField::Name(n) => NormSpec::Named(n.clone()),
            NormField::Body(PolytopeObj::Vrep(pts)) => NormSpec::Vertices(
                pts.iter().map(|p| parse_vector(p, self.dim)).collect::<Result<_, _>>()?,
            ),
            NormField::Body(PolytopeObj::Hrep(hs)) => NormSpec::Halfspaces(PolytopeObj::halfspaces(hs, self.dim)?),
        })
    }

    pub fn resolve(&self) -> Result<Instance, InputError> {
        if self.dim == 0 {
            return Err(InputError::Invalid("dim must be positive".into()));
        }
        let norm = self.norm_spec()?.build(self.dim)?;
        let points = self
            .points
            .iter()
            .flatten()
            .map(|p| parse_vector(p, self.dim))
            .collect::<Result<Vec<_>, _>>()?;
        let polytopes = self
            .polytopes
            .iter()
            .flatten()
            .map(|(k, p)| Ok((k.clone(), p.to_polytope(self.dim)?)))
            .collect::<Result<BTreeMap<_, _>, InputError>>()?;
        Ok(Instance {
            dim: self.dim,
            norm,
            points,
            polytopes,
        })
    }

    pub fn from_fixture(f: &Fixture) -> Self {
        let norm = match &f.norm {
            NormSpec::Named(n) => NormField::Name(n.clone()),
            NormSpec::Vertices(vs) => NormField::Body(PolytopeObj::Vrep(vs.iter().map(vector_strings).collect())),
            NormSpec::Halfspaces(hs) => NormField::Body(PolytopeObj::from_halfspaces(hs)),
        };
        InstanceFile {
            dim: f.dim,
            norm,
            points: Some(f.points.iter().map(vector_strings).collect()),
            polytopes: (!f.polytopes.is_empty()).then(|| {
                f.polytopes
                    .iter()
                    .map(|(k, p)| (k.clone(), PolytopeObj::from_polytope_vrep(p)))
                    .collect()
            }),
        }
    }
}

impl Instance {
    pub fn require_points(&self) -> Result<&[Vector], InputError> {
        if self.points.is_empty() {
            return Err(InputError::Invalid("instance has no points".into()));
        }
        Ok(&self.points)
    }

    pub fn polytope(&self, name: &str) -> Result<&Polytope, InputError> {
        self.polytopes
            .get(name)
            .ok_or_else(|| InputError::Invalid(format!("no polytope named {name:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_named_and_custom_norms() {
        let f = InstanceFile::parse(r#"{"dim": 2, "norm": "linf:2", "points": [["0","0"],["1/2","1"]]}"#).unwrap();
        let i = f.resolve().unwrap();
        assert_eq!(i.points[1], Vector::from_ratios(&[(1, 2), (1, 1)]));

        let f = InstanceFile::parse(
            r#"{"dim": 2, "norm": {"hrep": [{"normal":["1","0"],"offset":"1"},{"normal":["-1","0"],"offset":"1"},
                {"normal":["0","1"],"offset":"1"},{"normal":["0","-1"],"offset":"1"}]}}"#,
        )
        .unwrap();
        assert_eq!(f.resolve().unwrap().norm.functionals().len(), 4);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(InstanceFile::parse("{"), Err(InputError::Json(_))));
        assert!(matches!(InstanceFile::parse(r#"{"dim":2,"norm":"linf:2","extra":1}"#), Err(InputError::Json(_))));
        let f = InstanceFile::parse(r#"{"dim": 2, "norm": "linf:2", "points": [["0.5","0"]]}"#).unwrap();
        assert!(matches!(f.resolve(), Err(InputError::Geometry(GeomError::ParseRational(_)))));
        let f = InstanceFile::parse(r#"{"dim": 3, "norm": "linf:2"}"#).unwrap();
        assert!(matches!(f.resolve(), Err(InputError::Geometry(GeomError::DimensionMismatch { .. }))));
    }

    #[test]
    fn fixtures_round_trip() {
        for f in ballconv::lab::fixtures() {
            let file = InstanceFile::from_fixture(&f);
            let again = InstanceFile::parse(&file.to_json()).unwrap();
            assert_eq!(file, again);
            let inst = again.resolve().unwrap();
            assert_eq!(inst.points, f.points);
        }
    }
}
