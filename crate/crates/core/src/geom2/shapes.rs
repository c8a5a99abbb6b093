//! Standard and random planar test bodies.

use std::f64::consts::PI;

use rand::Rng;

use super::polygon::{hull2, ConvexPolygon};
use super::vec::Vec2;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Default tolerance for rational approximations of trigonometric vertices.
pub const DEFAULT_APPROX_TOL: f64 = 1e-9;

/// Rational approximation of the regular `m`-gon inscribed in the unit circle,
/// first vertex at polar angle `phase`.
pub fn regular_gon(m: usize, tol: f64, phase: f64) -> Result<ConvexPolygon> {
    if m < 3 {
        return Err(Error::InvalidPolygon(format!("{m} vertices")));
    }
    let pts: Vec<Vec2> = (0..m)
        .map(|k| {
            let a = phase + 2.0 * PI * k as f64 / m as f64;
            Vec2::from_f64([a.cos(), a.sin()], tol)
        })
        .collect();
    let p = hull2(&pts)?;
    if p.len() != m {
        return Err(Error::DegenerateInput(format!(
            "approximation tolerance {tol} too coarse for a {m}-gon"
        )));
    }
    Ok(p)
}

/// Many-sided regular polygon standing in for the unit disk.
pub fn disk_gon(m: usize, tol: f64) -> Result<ConvexPolygon> {
    regular_gon(m, tol, 0.0)
}

/// Origin-symmetric rational approximation of the regular `2k`-gon: the
/// second half of the vertices is the exact negation of the first.
pub fn symmetric_gon(k: usize, tol: f64, phase: f64) -> Result<ConvexPolygon> {
    if k < 2 {
        return Err(Error::InvalidPolygon(format!("{} vertices", 2 * k)));
    }
    let mut pts = Vec::with_capacity(2 * k);
    for j in 0..k {
        let a = phase + PI * j as f64 / k as f64;
        let v = Vec2::from_f64([a.cos(), a.sin()], tol);
        pts.push(-&v);
        pts.push(v);
    }
    let p = hull2(&pts)?;
    if p.len() != 2 * k {
        return Err(Error::DegenerateInput(format!(
            "approximation tolerance {tol} too coarse for a {}-gon",
            2 * k
        )));
    }
    Ok(p)
}

/// Reuleaux triangle of width 1 with each arc replaced by `per_arc` chords.
pub fn reuleaux(per_arc: usize, tol: f64) -> Result<ConvexPolygon> {
    let r = 1.0 / 3f64.sqrt();
    let corners: Vec<[f64; 2]> = (0..3)
        .map(|k| {
            let a = PI / 2.0 + 2.0 * PI * k as f64 / 3.0;
            [r * a.cos(), r * a.sin()]
        })
        .collect();
    let mut pts = Vec::new();
    for k in 0..3 {
        let c = corners[k];
        let b = corners[(k + 1) % 3];
        let start = (b[1] - c[1]).atan2(b[0] - c[0]);
        for j in 0..=per_arc {
            let a = start + (PI / 3.0) * j as f64 / per_arc as f64;
            pts.push(Vec2::from_f64([c[0] + a.cos(), c[1] + a.sin()], tol));
        }
    }
    hull2(&pts)
}

fn random_point<R: Rng>(rng: &mut R, range: i64) -> Vec2 {
    Vec2::from_ints(rng.gen_range(-range..=range), rng.gen_range(-range..=range))
}

/// Random integer-coordinate convex polygon with exactly `m` vertices.
pub fn random_polygon_exact<R: Rng>(rng: &mut R, m: usize) -> ConvexPolygon {
    assert!(m >= 3);
    loop {
        let pts: Vec<Vec2> = (0..m)
            .map(|_| {
                // points near a random ellipse keep most of them extreme
                let a: f64 = rng.gen_range(0.0..2.0 * PI);
                let (rx, ry) = (rng.gen_range(200.0..1000.0), rng.gen_range(200.0..1000.0));
                Vec2::new(
                    rational::int((rx * a.cos()).round() as i64 + rng.gen_range(-3..=3)),
                    rational::int((ry * a.sin()).round() as i64 + rng.gen_range(-3..=3)),
                )
            })
            .collect();
        if let Ok(p) = hull2(&pts) {
            if p.len() == m {
                return p;
            }
        }
    }
}

/// Random triangle with integer coordinates.
pub fn random_triangle<R: Rng>(rng: &mut R) -> ConvexPolygon {
    loop {
        let pts: Vec<Vec2> = (0..3).map(|_| random_point(rng, 1000)).collect();
        if let Ok(p) = hull2(&pts) {
            return p;
        }
    }
}

/// Random parallelogram `{o, o+a, o+a+b, o+b}`.
pub fn random_parallelogram<R: Rng>(rng: &mut R) -> ConvexPolygon {
    loop {
        let o = random_point(rng, 1000);
        let a = random_point(rng, 1000);
        let b = random_point(rng, 1000);
        let pts = vec![o.clone(), &o + &a, &(&o + &a) + &b, &o + &b];
        if let Ok(p) = hull2(&pts) {
            if p.len() == 4 {
                return p;
            }
        }
    }
}

/// Random origin-symmetric polygon with `2k` vertices.
pub fn random_symmetric_polygon<R: Rng>(rng: &mut R, k: usize) -> ConvexPolygon {
    loop {
        let mut pts = Vec::with_capacity(2 * k);
        for _ in 0..k {
            let p = random_point(rng, 1000);
            pts.push(-&p);
            pts.push(p);
        }
        if let Ok(p) = hull2(&pts) {
            if p.len() == 2 * k {
                return p;
            }
        }
    }
}

/// Random rational direction with small integer components.
pub fn random_direction<R: Rng>(rng: &mut R) -> Vec2 {
    loop {
        let v = random_point(rng, 50);
        if !v.is_zero() {
            return v;
        }
    }
}

/// Random rational point inside `p`: a convex combination of its vertices.
pub fn random_interior_point<R: Rng>(rng: &mut R, p: &ConvexPolygon) -> Vec2 {
    let w: Vec<i64> = (0..p.len()).map(|_| rng.gen_range(1..=100)).collect();
    let total: i64 = w.iter().sum();
    let mut acc = Vec2::zero();
    for (v, wi) in p.vertices().iter().zip(&w) {
        acc = &acc + &v.scale(&rational::int(*wi));
    }
    acc.scale(&(Rational::from_integer(1.into()) / rational::int(total)))
}
