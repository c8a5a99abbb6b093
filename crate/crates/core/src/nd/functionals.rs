//! Hull-volume functionals of bodies in `R^n`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::body::{brightness_nd, chord_nd, support_width_nd, v_ball, volume_nd, BodyN, Ellipsoid, Polytope};
use super::hull::hull_volume;
use super::linalg::{dot, normalize, sub};
use super::sphere::{maximize_on_sphere, sphere_directions, DirOptResult, OptOptions};
use crate::error::{Error, Result};

/// `1 + 2 v_{n-1} / v_n`, the common value of all three functionals on
/// ellipsoids (and of the hyperplane one on balls).
pub fn ellipsoid_value(n: usize) -> f64 {
    1.0 + 2.0 * v_ball(n - 1) / v_ball(n)
}

/// Boundary points used when an ellipsoid has to be replaced by a polytope.
pub const ELLIPSOID_POINTS: usize = 200;

/// Inscribed polytope with vertices on the boundary of `e`.
pub fn ellipsoid_polytope(e: &Ellipsoid, points: usize) -> Result<Polytope> {
    let n = e.center.len();
    let pts: Vec<Vec<f64>> = sphere_directions(n, points, 0).iter().map(|y| e.boundary_point(y)).collect();
    Polytope::new(&pts)
}

/// `1 + max_u d(u) vol_{n-1}(K|u⊥) / vol(K)`.
pub fn c_tr_nd(b: &BodyN, opts: &OptOptions) -> Result<DirOptResult> {
    let vol = volume_nd(b);
    // fail early on LP trouble instead of silently scoring -inf
    let n = b.dim();
    let mut e1 = vec![0.0; n];
    e1[0] = 1.0;
    chord_nd(b, &e1)?;
    let f = |u: &[f64]| chord_nd(b, u).map_or(f64::NAN, |d| d * brightness_nd(b, u));
    let mut r = maximize_on_sphere(n, f, opts);
    r.value = 1.0 + r.value / vol;
    Ok(r)
}

/// Vertices of `P` reflected in its supporting hyperplane with outer normal `u`.
pub fn reflect_in_support(vertices: &[Vec<f64>], u: &[f64]) -> Vec<Vec<f64>> {
    let h = vertices.iter().map(|v| dot(v, u)).fold(f64::NEG_INFINITY, f64::max);
    reflect_in_plane(vertices, u, h)
}

/// Reflection in the hyperplane `u . x = h`.
pub fn reflect_in_plane(vertices: &[Vec<f64>], u: &[f64], h: f64) -> Vec<Vec<f64>> {
    vertices
        .iter()
        .map(|v| {
            let s = 2.0 * (dot(v, u) - h);
            v.iter().zip(u).map(|(x, y)| x - s * y).collect()
        })
        .collect()
}

fn union_hull_ratio(p: &Polytope, other: Vec<Vec<f64>>) -> f64 {
    let mut pts = p.vertices().to_vec();
    pts.extend(other);
    hull_volume(&pts).map_or(f64::NAN, |v| v / p.volume())
}

fn polytope_c_hyp(p: &Polytope, opts: &OptOptions) -> DirOptResult {
    let f = |u: &[f64]| union_hull_ratio(p, reflect_in_support(p.vertices(), u));
    maximize_on_sphere(p.dim(), f, opts)
}

/// Largest `vol(conv(K ∪ K_σ)) / vol(K)` over supporting hyperplanes `σ`.
///
/// Balls use the capsule volume `v_n + 2 v_{n-1}`; non-spherical ellipsoids are
/// replaced by an inscribed polytope with [`ELLIPSOID_POINTS`] vertices.
pub fn c_hyp_nd(b: &BodyN, opts: &OptOptions) -> Result<DirOptResult> {
    let n = b.dim();
    let ball = |n: usize| {
        let mut d = vec![0.0; n];
        d[0] = 1.0;
        DirOptResult { value: ellipsoid_value(n), direction: d, samples_used: 0, refined: false }
    };
    match b {
        BodyN::Ball { dim, .. } => Ok(ball(*dim)),
        BodyN::Ellipsoid(e) if e.is_ball() => Ok(ball(n)),
        BodyN::Ellipsoid(e) => Ok(polytope_c_hyp(&ellipsoid_polytope(e, ELLIPSOID_POINTS)?, opts)),
        BodyN::Polytope(p) => Ok(polytope_c_hyp(p, opts)),
    }
}

/// Largest `vol(conv(K ∪ (2x - K))) / vol(K)` over `x` in `K`.
///
/// The objective is convex in `x`, so polytopes are scanned over their
/// vertices. For an ellipsoid `2x - K` is a translate of `K`, so the value
/// equals the translative one, `1 + 2 v_{n-1} / v_n`. The reported direction
/// points from the vertex centroid to the maximizing vertex.
pub fn c_0_nd(b: &BodyN, _opts: &OptOptions) -> Result<DirOptResult> {
    let n = b.dim();
    match b {
        BodyN::Ball { .. } | BodyN::Ellipsoid(_) => {
            let mut d = vec![0.0; n];
            d[0] = 1.0;
            Ok(DirOptResult { value: ellipsoid_value(n), direction: d, samples_used: 0, refined: false })
        }
        BodyN::Polytope(p) => {
            let vals: Vec<f64> = p
                .vertices()
                .par_iter()
                .map(|z| {
                    let refl = p.vertices().iter().map(|v| z.iter().zip(v).map(|(a, b)| 2.0 * a - b).collect());
                    union_hull_ratio(p, refl.collect())
                })
                .collect();
            let best = (0..vals.len()).fold(0, |b, i| if vals[i] > vals[b] { i } else { b });
            if vals[best].is_nan() {
                return Err(Error::DegenerateBody("hull failure".into()));
            }
            let c = p.centroid_of_vertices();
            Ok(DirOptResult {
                value: vals[best],
                direction: normalize(&sub(&p.vertices()[best], &c)),
                samples_used: vals.len(),
                refined: false,
            })
        }
    }
}

/// Extremes of `w(u) vol_{n-1}(K|u⊥) / vol(K)`, the volume ratio of the
/// circumscribed right cylinder with generators parallel to `u`.
#[derive(Clone, Debug, PartialEq)]
pub struct CylinderCheck {
    pub max_right: DirOptResult,
    pub min_over_u_of_right: DirOptResult,
}

pub fn cylinder_check(b: &BodyN, opts: &OptOptions) -> CylinderCheck {
    let vol = volume_nd(b);
    let f = |u: &[f64]| support_width_nd(b, u).width * brightness_nd(b, u) / vol;
    let max_right = maximize_on_sphere(b.dim(), f, opts);
    let mut min = maximize_on_sphere(b.dim(), |u| -f(u), opts);
    min.value = -min.value;
    CylinderCheck { max_right, min_over_u_of_right: min }
}

/// Sampled reflections about non-supporting hyperplanes and interior centers.
#[derive(Clone, Debug, PartialEq)]
pub struct ReflectionValidation {
    pub vertex_or_support_max: f64,
    pub sampled_max: f64,
    pub samples: usize,
    /// Samples that beat the reported maximum by more than `1e-9`.
    pub violations: usize,
}

/// Reflects `p` about hyperplanes that cut through it and records any that
/// beat the supporting-hyperplane maximum.
pub fn c_hyp_validate(p: &Polytope, opts: &OptOptions, samples: usize) -> ReflectionValidation {
    let best = polytope_c_hyp(p, opts).value;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed);
    let cuts: Vec<(Vec<f64>, f64)> = (0..samples)
        .map(|_| {
            let u = super::shapes::random_unit_vector(&mut rng, p.dim());
            (u, rng.gen_range(0.001..0.999))
        })
        .collect();
    let vals: Vec<f64> = cuts
        .par_iter()
        .map(|(u, frac)| {
            let b = BodyN::Polytope(p.clone());
            let s = support_width_nd(&b, u);
            let h = -s.h_minus + frac * s.width;
            union_hull_ratio(p, reflect_in_plane(p.vertices(), u, h))
        })
        .collect();
    let sampled_max = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let violations = vals.iter().filter(|v| **v > best + 1e-9).count();
    ReflectionValidation { vertex_or_support_max: best, sampled_max, samples, violations }
}

/// Point reflections about random interior points, against the vertex scan.
pub fn c_0_validate(p: &Polytope, samples: usize, seed: u64) -> ReflectionValidation {
    let best = c_0_nd(&BodyN::Polytope(p.clone()), &OptOptions::default()).map_or(f64::NAN, |r| r.value);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let centers: Vec<Vec<f64>> = (0..samples)
        .map(|_| {
            let w: Vec<f64> = p.vertices().iter().map(|_| rng.gen_range(0.0..1.0)).collect();
            let t: f64 = w.iter().sum();
            (0..p.dim()).map(|k| p.vertices().iter().zip(&w).map(|(v, wi)| v[k] * wi / t).sum()).collect()
        })
        .collect();
    let vals: Vec<f64> = centers
        .par_iter()
        .map(|z| {
            let refl = p.vertices().iter().map(|v| z.iter().zip(v).map(|(a, b)| 2.0 * a - b).collect());
            union_hull_ratio(p, refl.collect())
        })
        .collect();
    let sampled_max = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let violations = vals.iter().filter(|v| **v > best + 1e-9).count();
    ReflectionValidation { vertex_or_support_max: best, sampled_max, samples, violations }
}

/// Volume from the radial function, `v_n` times the spherical mean of
/// `r(u)^n` about `origin`, on `samples` quadrature directions.
pub fn polar_volume(b: &BodyN, origin: &[f64], samples: usize) -> Result<f64> {
    let n = b.dim();
    let dirs = sphere_directions(n, samples, 7);
    let rs: Vec<Option<f64>> = dirs.par_iter().map(|u| super::body::radial_nd(b, origin, u)).collect();
    let mut acc = 0.0;
    for r in rs {
        acc += r.ok_or(Error::OriginNotInterior)?.powi(n as i32);
    }
    Ok(v_ball(n) * acc / samples as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nd::shapes::{cube, regular_simplex};

    fn quick() -> OptOptions {
        OptOptions { coarse_samples: Some(400), candidates: 4, tol: 1e-6, ..Default::default() }
    }

    #[test]
    fn ball_values() {
        let b = BodyN::ball(3, 1.0).unwrap();
        assert!((c_tr_nd(&b, &quick()).unwrap().value - 2.5).abs() < 1e-12);
        assert!((c_hyp_nd(&b, &quick()).unwrap().value - 2.5).abs() < 1e-12);
        assert!((c_0_nd(&b, &quick()).unwrap().value - 2.5).abs() < 1e-12);
        let c = cylinder_check(&b, &quick());
        assert!((c.max_right.value - 1.5).abs() < 1e-12);
        assert!((c.min_over_u_of_right.value - 1.5).abs() < 1e-12);
    }

    #[test]
    fn cube_values() {
        let c = cube(3).unwrap();
        let tr = c_tr_nd(&c, &OptOptions::default()).unwrap();
        assert!((tr.value - 4.0).abs() < 1e-6, "{tr:?}");
        assert!((c_0_nd(&c, &quick()).unwrap().value - 4.0).abs() < 1e-9);
        let hyp = c_hyp_nd(&c, &quick()).unwrap().value;
        assert!((hyp - 4.0).abs() < 1e-3, "{hyp}");
    }

    #[test]
    fn simplex_point_reflection() {
        let s = regular_simplex(3, 1.0).unwrap();
        assert!((c_0_nd(&s, &quick()).unwrap().value - 8.0).abs() < 1e-9);
    }

    #[test]
    fn polar_volume_of_ball_and_cube() {
        let b = BodyN::ball(3, 1.0).unwrap();
        let v = polar_volume(&b, &[0.0; 3], 20000).unwrap();
        assert!((v / volume_nd(&b) - 1.0).abs() < 1e-9);
        let c = cube(3).unwrap();
        let v = polar_volume(&c, &[0.5; 3], 100000).unwrap();
        assert!((v - 1.0).abs() < 5e-3, "{v}");
        assert_eq!(polar_volume(&c, &[2.0; 3], 10), Err(Error::OriginNotInterior));
    }
}
