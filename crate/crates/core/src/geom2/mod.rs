//! Exact planar convex geometry over rationals.

pub mod float;
pub mod motion;
pub mod polygon;
pub mod shapes;
pub mod vec;

pub use float::FloatPolygon;
pub use motion::{apply_motion, steiner2, Motion};
pub use polygon::{
    area2, central_symmetral, difference_body, hull2, max_chord_param, minkowski_sum,
    polar_dual2, radial_param, support2, support_value, width_raw, ConvexPolygon, Support,
};
pub use vec::{Direction, Line2, Vec2};
