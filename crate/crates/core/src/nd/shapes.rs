//! Standard and random bodies in `R^n`.

use rand::Rng;

use super::body::{BodyN, Ellipsoid};
use super::linalg::{dot, normalize};
use crate::error::Result;

/// Standard normal by Box–Muller.
fn gaussian<R: Rng>(rng: &mut R) -> f64 {
    let u1: f64 = 1.0 - rng.gen::<f64>();
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Vertices of `[0, 1]^n`.
pub fn cube_vertices(n: usize) -> Vec<Vec<f64>> {
    (0..1usize << n).map(|m| (0..n).map(|k| ((m >> k) & 1) as f64).collect()).collect()
}

pub fn cube(n: usize) -> Result<BodyN> {
    BodyN::polytope(&cube_vertices(n))
}

/// Vertices of a regular simplex with edge length `edge`, built one apex at
/// a time above the centroid of the previous face.
pub fn regular_simplex_vertices(n: usize, edge: f64) -> Vec<Vec<f64>> {
    let mut pts = vec![vec![0.0; n]];
    for k in 1..=n {
        let centroid: Vec<f64> = (0..n).map(|j| pts.iter().map(|p| p[j]).sum::<f64>() / k as f64).collect();
        // squared circumradius of the unit regular (k-1)-simplex
        let r2 = (k - 1) as f64 / (2.0 * k as f64);
        let mut apex = centroid;
        apex[k - 1] = (1.0 - r2).sqrt();
        pts.push(apex);
    }
    pts.into_iter().map(|p| p.into_iter().map(|x| x * edge).collect()).collect()
}

pub fn regular_simplex(n: usize, edge: f64) -> Result<BodyN> {
    BodyN::polytope(&regular_simplex_vertices(n, edge))
}

pub fn cross_polytope(n: usize) -> Result<BodyN> {
    let mut pts = Vec::new();
    for k in 0..n {
        for s in [1.0, -1.0] {
            let mut v = vec![0.0; n];
            v[k] = s;
            pts.push(v);
        }
    }
    BodyN::polytope(&pts)
}

pub fn random_gaussian_vector<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    (0..n).map(|_| gaussian(rng)).collect()
}

pub fn random_unit_vector<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    normalize(&random_gaussian_vector(rng, n))
}

/// Hull of `k` Gaussian points.
pub fn random_polytope<R: Rng>(rng: &mut R, n: usize, k: usize) -> Result<BodyN> {
    let pts: Vec<Vec<f64>> = (0..k.max(n + 1)).map(|_| random_gaussian_vector(rng, n)).collect();
    BodyN::polytope(&pts)
}

/// Hull of `k` random points and their negatives.
pub fn random_symmetric_polytope<R: Rng>(rng: &mut R, n: usize, k: usize) -> Result<BodyN> {
    let mut pts = Vec::new();
    for _ in 0..k.max(n) {
        let v = random_gaussian_vector(rng, n);
        pts.push(v.iter().map(|x| -x).collect());
        pts.push(v);
    }
    BodyN::polytope(&pts)
}

/// Random orthogonal matrix by Gram–Schmidt on Gaussian rows.
pub fn random_rotation<R: Rng>(rng: &mut R, n: usize) -> Vec<Vec<f64>> {
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(n);
    while rows.len() < n {
        let mut v = random_gaussian_vector(rng, n);
        for r in &rows {
            let c = dot(&v, r);
            v.iter_mut().zip(r).for_each(|(x, y)| *x -= c * y);
        }
        let l = dot(&v, &v).sqrt();
        if l > 1e-6 {
            rows.push(v.iter().map(|x| x / l).collect());
        }
    }
    rows
}

/// Ellipsoid with semiaxes drawn from `[lo, hi]`, random orientation and
/// center.
pub fn random_ellipsoid<R: Rng>(rng: &mut R, n: usize, lo: f64, hi: f64) -> Result<BodyN> {
    let axes: Vec<f64> = (0..n).map(|_| rng.gen_range(lo..hi)).collect();
    let center: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    Ok(BodyN::Ellipsoid(Ellipsoid::new(center, axes, random_rotation(rng, n))?))
}
