//! Exact ball convexity in finite-dimensional normed spaces with polytopal
//! unit balls: ball hulls, circumballs, separation by unit spheres, exposed
//! b-faces, completeness and spindle probes, all over rational arithmetic.

pub mod completeness;
pub mod error;
pub mod hull;
pub mod lab;
pub mod lp;
pub mod norm;
pub mod polytope;
pub mod rational;
pub mod separation;
pub mod spindle;
pub mod vector;

pub use completeness::{completion_report, is_complete, CompletionReport};
pub use error::{GeomError, Result};
pub use hull::{ball_hull, ball_hull_of, center_set, circumball, circumsphere_restriction, is_b_bounded, is_b_convex};
pub use hull::{BallHull, CenterSet, CircumResult, CircumsphereRestriction, Hull};
pub use lp::{lp_solve, LpSolution, Sense};
pub use norm::{diam, make_norm, norm_eval, strictness_witness, Ball, NormBody};
pub use polytope::{dd_convert, face_lattice, intersect, polytope_equal, ray_max, Face, HalfSpace, Polytope, Representation};
pub use rational::Rational;
pub use separation::{
    b_exposed_points, exposed_b_faces, generates_hull, separate_point, separate_point_strict, supporting_sphere_at,
    CertificateKind, ExposedBFace, GenerationAnswer, SeparationCertificate,
};
pub use spindle::{k_spindle_probe, spindle, ProbeStatus, SpindleProbeResult};
pub use vector::Vector;
