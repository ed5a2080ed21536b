use std::path::{Path, PathBuf};
use std::process::ExitCode;

use ballconv::lab::{run_all, run_suite, SUITE_NAMES};
use ballconv::{
    ball_hull, circumball, completion_report, exposed_b_faces, is_b_bounded, k_spindle_probe, separate_point,
    separate_point_strict, GeomError, Hull, Polytope, Vector,
};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use ballconv_cli::instance::{InputError, Instance, InstanceFile};
use ballconv_cli::report;
use ballconv_cli::svg::{Layer, Scene, Shape};

#[derive(Parser)]
#[command(name = "ballconv", version, about = "Ball hulls and related constructions in polyhedral normed spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ball hull of the instance points
    Hull {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Circumradius and all circumcenters of the points
    Circumball {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Separate a point from the body (polytope "body", else the ball hull of the points)
    Separate {
        #[arg(long = "in")]
        input: PathBuf,
        /// Comma-separated rationals, e.g. "3,1/2"
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Exposed b-faces of the body (polytope "body", else the ball hull of the points)
    Faces {
        #[arg(long = "in")]
        input: PathBuf,
        /// Only list b-exposed points
        #[arg(long)]
        b_exposed: bool,
    },
    /// Completion report for the points, optionally against a named candidate polytope
    Complete {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        candidate: Option<String>,
    },
    /// Search for k-spindle convexity violations (polytope "body", else the convex hull of the points)
    Spindle {
        #[arg(long = "in")]
        input: PathBuf,
        /// Tuple size, 0 for every size from 2 to n + 2
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 200)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a verification suite ("all" runs every suite)
    Check { suite: String },
    /// Draw a planar instance as SVG
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    Input(InputError),
    Check,
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

impl From<GeomError> for Failure {
    fn from(e: GeomError) -> Self {
        Failure::Input(InputError::Geometry(e))
    }
}

fn load(path: &Path) -> Result<Instance, InputError> {
    InstanceFile::read(path)?.resolve()
}

fn print(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn hull_body(inst: &Instance) -> Result<Polytope, Failure> {
    if let Ok(p) = inst.polytope("body") {
        return Ok(p.clone());
    }
    match ball_hull(&inst.norm, inst.require_points()?)?.hull {
        Hull::Body(p) => Ok(p),
        Hull::WholeSpace => Err(InputError::Invalid("the ball hull of the points is the whole space".into()).into()),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Hull { input, out } => {
            let inst = load(&input)?;
            let h = ball_hull(&inst.norm, inst.require_points()?)?;
            let v = report::ball_hull(inst.norm.name(), &h);
            match out {
                Some(path) => std::fs::write(&path, serde_json::to_string_pretty(&v).expect("json")).map_err(|source| {
                    InputError::Io {
                        path: path.display().to_string(),
                        source,
                    }
                })?,
                None => print(&v),
            }
        }
        Command::Circumball { input } => {
            let inst = load(&input)?;
            print(&report::circumball(&circumball(&inst.norm, inst.require_points()?)?));
        }
        Command::Separate { input, point } => {
            let inst = load(&input)?;
            let x0 = Vector::parse(&point)?;
            x0.check_dim(inst.dim)?;
            let body = hull_body(&inst)?;
            let excluded = separate_point(&inst.norm, &body, &x0)?;
            let strict = if is_b_bounded(&inst.norm, body.vertices())? {
                Some(separate_point_strict(&inst.norm, &body, &x0)?)
            } else {
                None
            };
            print(&json!({
                "excluded": report::certificate(&excluded),
                "strict": strict.as_ref().map(report::certificate),
            }));
        }
        Command::Faces { input, b_exposed } => {
            let inst = load(&input)?;
            let body = hull_body(&inst)?;
            if b_exposed {
                let pts = ballconv::b_exposed_points(&inst.norm, &body)?;
                print(&json!({ "b_exposed_points": pts.iter().map(report::vector).collect::<Vec<_>>() }));
            } else {
                let faces = exposed_b_faces(&inst.norm, &body)?;
                print(&json!({ "faces": faces.iter().map(report::face).collect::<Vec<_>>() }));
            }
        }
        Command::Complete { input, candidate } => {
            let inst = load(&input)?;
            let c = candidate.as_deref().map(|n| inst.polytope(n)).transpose()?;
            print(&report::completion(&completion_report(&inst.norm, inst.require_points()?, c)?));
        }
        Command::Spindle { input, k, budget, seed } => {
            let inst = load(&input)?;
            let body = match inst.polytope("body") {
                Ok(p) => p.clone(),
                Err(_) => Polytope::from_points(inst.require_points()?, inst.dim)?,
            };
            print(&report::probe(&k_spindle_probe(&inst.norm, &body, k, budget, seed)?));
        }
        Command::Check { suite } => {
            let reports = if suite == "all" {
                run_all()
            } else if SUITE_NAMES.contains(&suite.as_str()) {
                vec![run_suite(&suite)?]
            } else {
                return Err(InputError::Invalid(format!(
                    "unknown suite {suite:?}; expected one of {} or all",
                    SUITE_NAMES.join(", ")
                ))
                .into());
            };
            let values: Vec<Value> = reports.iter().map(report::suite).collect();
            print(&if values.len() == 1 { values[0].clone() } else { Value::Array(values) });
            if reports.iter().any(|r| !r.passed()) {
                return Err(Failure::Check);
            }
        }
        Command::Render { input, out } => {
            let inst = load(&input)?;
            if inst.dim != 2 {
                return Err(InputError::Invalid("render requires dim 2".into()).into());
            }
            let svg = scene(&inst)?.render();
            std::fs::write(&out, svg).map_err(|source| InputError::Io {
                path: out.display().to_string(),
                source,
            })?;
        }
    }
    Ok(())
}

fn scene(inst: &Instance) -> Result<Scene, Failure> {
    let mut layers = vec![Layer {
        name: "unit-ball",
        stroke: "#999999",
        fill: "none",
        shapes: vec![Shape::Polytope(inst.norm.unit_ball().clone())],
    }];
    if !inst.points.is_empty() {
        let h = ball_hull(&inst.norm, &inst.points)?;
        if let Some(c) = &h.center_set.polytope {
            layers.push(Layer {
                name: "center-set",
                stroke: "#1f77b4",
                fill: "#1f77b433",
                shapes: vec![Shape::Polytope(c.clone())],
            });
            let balls = c
                .vertices()
                .iter()
                .map(|v| inst.norm.ball_polytope(v, &ballconv::rational::int(1)).map(Shape::Polytope))
                .collect::<Result<Vec<_>, _>>()?;
            layers.push(Layer {
                name: "balls",
                stroke: "#2ca02c",
                fill: "none",
                shapes: balls,
            });
        }
        if let Hull::Body(b) = &h.hull {
            layers.push(Layer {
                name: "hull",
                stroke: "#d62728",
                fill: "#d6272833",
                shapes: vec![Shape::Polytope(b.clone())],
            });
            if let Ok(faces) = exposed_b_faces(&inst.norm, b) {
                layers.push(Layer {
                    name: "faces",
                    stroke: "#ff7f0e",
                    fill: "none",
                    shapes: faces.into_iter().flat_map(|f| f.pieces).map(Shape::Polytope).collect(),
                });
            }
        }
        layers.push(Layer {
            name: "points",
            stroke: "black",
            fill: "black",
            shapes: inst.points.iter().cloned().map(Shape::Point).collect(),
        });
    }
    Ok(Scene { layers })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            let kind = match &e {
                InputError::Io { .. } => "io",
                InputError::Json(_) => "json",
                InputError::Geometry(_) => "geometry",
                InputError::Invalid(_) => "invalid",
            };
            eprintln!("{}", json!({ "error": e.to_string(), "kind": kind }));
            ExitCode::from(2)
        }
    }
}
