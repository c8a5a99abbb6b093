//! Body files: one JSON document per body, tagged by `kind`.
//!
//! ```json
//! {"kind": "polygon", "vertices": [["0", "0"], ["1", "0"], ["0", "1/2"]]}
//! {"kind": "polytope", "vertices": [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]}
//! {"kind": "ball", "dim": 3, "radius": 1}
//! {"kind": "ellipsoid", "semiaxes": [1, 1, 2]}
//! {"kind": "regular_gon", "m": 5, "tol": 1e-9}
//! {"kind": "disk_gon", "m": 4096}
//! ```
//!
//! Polygon coordinates given as strings are read exactly (`"p/q"` or decimal);
//! JSON numbers are taken at their exact binary value.

use hullvol_core::geom2::shapes::{disk_gon, regular_gon, DEFAULT_APPROX_TOL};
use hullvol_core::geom2::{ConvexPolygon, Vec2};
use hullvol_core::nd::{BodyN, Ellipsoid};
use hullvol_core::rational::{self, Rational};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum Num {
    Text(String),
    Float(f64),
}

impl Num {
    fn rational(&self) -> Result<Rational, String> {
        match self {
            Num::Text(s) => rational::parse(s).map_err(|e| e.to_string()),
            Num::Float(x) => Rational::from_float(*x).ok_or_else(|| format!("non-finite number {x}")),
        }
    }

    fn float(&self) -> Result<f64, String> {
        match self {
            Num::Text(s) => Ok(rational::to_f64(&rational::parse(s).map_err(|e| e.to_string())?)),
            Num::Float(x) => Ok(*x),
        }
    }
}

fn default_tol() -> f64 {
    DEFAULT_APPROX_TOL
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BodySpec {
    Polygon {
        vertices: Vec<[Num; 2]>,
    },
    Polytope {
        vertices: Vec<Vec<Num>>,
    },
    Ball {
        dim: usize,
        #[serde(default)]
        radius: Option<Num>,
        #[serde(default)]
        center: Option<Vec<Num>>,
    },
    Ellipsoid {
        semiaxes: Vec<Num>,
        #[serde(default)]
        center: Option<Vec<Num>>,
        /// Rows are the principal axes.
        #[serde(default)]
        orientation: Option<Vec<Vec<Num>>>,
    },
    RegularGon {
        m: usize,
        #[serde(default = "default_tol")]
        tol: f64,
        #[serde(default)]
        phase: f64,
    },
    DiskGon {
        m: usize,
        #[serde(default = "default_tol")]
        tol: f64,
    },
}

/// A parsed body, planar polygons kept exact.
#[derive(Clone, Debug)]
pub enum Body {
    Planar {
        poly: ConvexPolygon,
        /// Set when the vertices approximate an irrational polygon.
        approx_tol: Option<f64>,
    },
    Nd(BodyN),
}

fn floats(v: &[Num]) -> Result<Vec<f64>, String> {
    v.iter().map(Num::float).collect()
}

impl BodySpec {
    pub fn build(&self) -> Result<Body, String> {
        let err = |e: hullvol_core::Error| e.to_string();
        match self {
            BodySpec::Polygon { vertices } => {
                let pts: Vec<Vec2> = vertices
                    .iter()
                    .map(|[x, y]| Ok(Vec2::new(x.rational()?, y.rational()?)))
                    .collect::<Result<_, String>>()?;
                // accept either orientation
                let poly = ConvexPolygon::new(pts.clone())
                    .or_else(|_| ConvexPolygon::new(pts.into_iter().rev().collect()))
                    .map_err(err)?;
                Ok(Body::Planar { poly, approx_tol: None })
            }
            BodySpec::RegularGon { m, tol, phase } => {
                Ok(Body::Planar { poly: regular_gon(*m, *tol, *phase).map_err(err)?, approx_tol: Some(*tol) })
            }
            BodySpec::DiskGon { m, tol } => {
                Ok(Body::Planar { poly: disk_gon(*m, *tol).map_err(err)?, approx_tol: Some(*tol) })
            }
            BodySpec::Polytope { vertices } => {
                let pts: Vec<Vec<f64>> = vertices.iter().map(|v| floats(v)).collect::<Result<_, _>>()?;
                Ok(Body::Nd(BodyN::polytope(&pts).map_err(err)?))
            }
            BodySpec::Ball { dim, radius, center } => {
                let r = radius.as_ref().map_or(Ok(1.0), Num::float)?;
                let b = BodyN::ball(*dim, r).map_err(err)?;
                match center {
                    Some(c) => Ok(Body::Nd(b.translated(&floats(c)?).map_err(err)?)),
                    None => Ok(Body::Nd(b)),
                }
            }
            BodySpec::Ellipsoid { semiaxes, center, orientation } => {
                let a = floats(semiaxes)?;
                let n = a.len();
                let c = center.as_ref().map_or(Ok(vec![0.0; n]), |c| floats(c))?;
                let rows = match orientation {
                    Some(rows) => rows.iter().map(|r| floats(r)).collect::<Result<_, _>>()?,
                    None => (0..n).map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect(),
                };
                Ok(Body::Nd(BodyN::Ellipsoid(Ellipsoid::new(c, a, rows).map_err(err)?)))
            }
        }
    }
}

/// Reads and builds a body file. Any failure is a parse error.
pub fn load(path: &str) -> Result<Body, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    parse(&text).map_err(|e| format!("{path}: {e}"))
}

pub fn parse(text: &str) -> Result<Body, String> {
    let spec: BodySpec = serde_json::from_str(text).map_err(|e| e.to_string())?;
    spec.build()
}

/// Polygon body document with exact rational strings.
pub fn polygon_document(vertices: &[Vec2]) -> serde_json::Value {
    let v: Vec<[String; 2]> = vertices.iter().map(|p| [rational::format(&p.x), rational::format(&p.y)]).collect();
    serde_json::json!({ "kind": "polygon", "vertices": v })
}
