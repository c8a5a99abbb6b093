//! Planar convex-hull-volume functionals.
//!
//! For a convex polygon `P` and a family of motions, the functional is the
//! largest ratio `area(conv(P ∪ P')) / area(P)` over images `P'` that meet
//! `P`:
//!
//! * [`c_tr`]: translations, exact;
//! * [`c_0`]: reflections about points, exact;
//! * [`c_1`]: reflections about lines, numeric (with the closed-form
//!   [`c_1_triangle`] as an independent route for triangles).

pub mod lattice;
mod line;
mod point;
mod translate;

use std::fmt;

pub use line::{
    c_1, c_1_objective, c_1_triangle, c_1_validate, c_1_with_grid, AxisValidation, SupportingLine, DEFAULT_GRID,
};
pub use point::{c_0, c_0_validate, CenterValidation};
pub use translate::{c_tr, critical_directions, profile_tr, translate_profile_raw};

use crate::geom2::{area2, hull2, ConvexPolygon, Direction};
use crate::rational::{self, Rational};

/// Exact or floating-point functional value.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(Rational),
    Float(f64),
}

impl Scalar {
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => rational::to_f64(r),
            Scalar::Float(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{} (exact: {})", rational::to_f64(r), rational::format(r)),
            Scalar::Float(x) => write!(f, "{x}"),
        }
    }
}

/// Where the maximum is attained.
#[derive(Clone, Debug, PartialEq)]
pub enum Maximizer {
    /// Translation direction (canonical).
    Direction(Direction),
    /// Index of the reflection center among the polygon's vertices.
    Vertex(usize),
    /// Reflection axis.
    Line(SupportingLine),
}

/// Quantities behind a functional value.
#[derive(Clone, Debug, PartialEq)]
pub struct Breakdown {
    pub area: Scalar,
    pub hull_area: Scalar,
    /// Raw chord parameter `t` (translations only).
    pub chord_raw: Option<Rational>,
    /// Raw width across the translation direction (translations only).
    pub width_raw: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FunctionalValue {
    pub value: Scalar,
    pub exact: bool,
    pub maximizer: Maximizer,
    pub details: Breakdown,
}

impl FunctionalValue {
    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

/// Exact area of the convex hull of two polygons. The polygons need not meet.
pub fn hull_area_union(p: &ConvexPolygon, q: &ConvexPolygon) -> Rational {
    let pts: Vec<_> = p.vertices().iter().chain(q.vertices()).cloned().collect();
    area2(&hull2(&pts).expect("union of two polygons is full-dimensional"))
}
