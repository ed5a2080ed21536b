//! SVG scenes of planar instances.

use std::fmt::Write;

use ballconv::rational::to_f64;
use ballconv::{Polytope, Vector};

const CANVAS: f64 = 480.0;
const MARGIN: f64 = 0.1;

/// Shortest decimal within 1e-6.
pub fn num(x: f64) -> String {
    let s = format!("{:.6}", x);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" || s.is_empty() {
        "0".to_string()
    } else {
        s.to_string()
    }
}

pub struct Layer {
    pub name: &'static str,
    pub stroke: &'static str,
    pub fill: &'static str,
    pub shapes: Vec<Shape>,
}

pub enum Shape {
    Polytope(Polytope),
    Point(Vector),
}

pub struct Scene {
    pub layers: Vec<Layer>,
}

fn xy(v: &Vector) -> (f64, f64) {
    (to_f64(&v[0]), to_f64(&v[1]))
}

/// Vertices in counter-clockwise order around their centroid.
fn cyclic(p: &Polytope) -> Vec<(f64, f64)> {
    let pts: Vec<(f64, f64)> = p.vertices().iter().map(xy).collect();
    let k = pts.len() as f64;
    let (cx, cy) = pts.iter().fold((0.0, 0.0), |(a, b), q| (a + q.0 / k, b + q.1 / k));
    let mut sorted = pts;
    sorted.sort_by(|a, b| (a.1 - cy).atan2(a.0 - cx).total_cmp(&(b.1 - cy).atan2(b.0 - cx)));
    sorted
}

impl Scene {
    fn bounds(&self) -> (f64, f64, f64, f64) {
        let mut b = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for layer in &self.layers {
            for s in &layer.shapes {
                let pts: Vec<(f64, f64)> = match s {
                    Shape::Polytope(p) => p.vertices().iter().map(xy).collect(),
                    Shape::Point(v) => vec![xy(v)],
                };
                for (x, y) in pts {
                    b = (b.0.min(x), b.1.min(y), b.2.max(x), b.3.max(y));
                }
            }
        }
        if !b.0.is_finite() {
            return (-1.0, -1.0, 1.0, 1.0);
        }
        let span = (b.2 - b.0).max(b.3 - b.1).max(1e-3);
        let pad = span * MARGIN;
        (b.0 - pad, b.1 - pad, b.0 + span + pad, b.1 + span + pad)
    }

    pub fn render(&self) -> String {
        let (x0, y0, x1, _) = self.bounds();
        let scale = CANVAS / (x1 - x0);
        // flip y so that the plane's orientation is kept
        let map = |(x, y): (f64, f64)| ((x - x0) * scale, CANVAS - (y - y0) * scale);
        let mut out = String::new();
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{c}" height="{c}" viewBox="0 0 {c} {c}">"#,
            c = num(CANVAS)
        )
        .unwrap();
        for layer in &self.layers {
            writeln!(
                out,
                r#"  <g id="{}" stroke="{}" fill="{}" stroke-width="1.5">"#,
                layer.name, layer.stroke, layer.fill
            )
            .unwrap();
            for s in &layer.shapes {
                match s {
                    Shape::Point(v) => {
                        let (x, y) = map(xy(v));
                        writeln!(out, r#"    <circle cx="{}" cy="{}" r="3"/>"#, num(x), num(y)).unwrap();
                    }
                    Shape::Polytope(p) if p.is_point() => {
                        let (x, y) = map(xy(&p.vertices()[0]));
                        writeln!(out, r#"    <circle cx="{}" cy="{}" r="2"/>"#, num(x), num(y)).unwrap();
                    }
                    Shape::Polytope(p) => {
                        let pts: Vec<String> = cyclic(p)
                            .into_iter()
                            .map(map)
                            .map(|(x, y)| format!("{},{}", num(x), num(y)))
                            .collect();
                        writeln!(out, r#"    <polygon points="{}"/>"#, pts.join(" ")).unwrap();
                    }
                }
            }
            writeln!(out, "  </g>").unwrap();
        }
        out.push_str("</svg>\n");
        out
    }
}
