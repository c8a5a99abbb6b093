//! Convex bodies in `R^n`: polytopes, balls and ellipsoids.

pub mod body;
pub mod functionals;
pub mod hull;
pub mod linalg;
pub mod lp;
pub mod montecarlo;
pub mod shapes;
pub mod sphere;

pub use body::{
    brightness_nd, chord_nd, radial_nd, support_width_nd, v_ball, volume_nd, BodyN, Ellipsoid, Polytope,
    SupportWidth,
};
pub use functionals::{
    c_0_nd, c_0_validate, c_hyp_nd, c_hyp_validate, c_tr_nd, cylinder_check, ellipsoid_value, polar_volume,
    CylinderCheck, ReflectionValidation,
};
pub use hull::{hull_volume, HullN};
pub use sphere::{maximize_on_sphere, sphere_directions, DirOptResult, OptOptions};
