//! Floating-point polygons for the numeric paths (line reflections, search).

use super::polygon::ConvexPolygon;
use super::vec::Vec2;
use crate::error::Result;

/// Counterclockwise convex polygon with `f64` vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatPolygon {
    vertices: Vec<[f64; 2]>,
}

fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

impl FloatPolygon {
    /// Trusts the caller that `vertices` are convex and counterclockwise.
    pub fn from_ccw(vertices: Vec<[f64; 2]>) -> Self {
        FloatPolygon { vertices }
    }

    pub fn from_exact(p: &ConvexPolygon) -> Self {
        FloatPolygon { vertices: p.to_f64() }
    }

    pub fn vertices(&self) -> &[[f64; 2]] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn area(&self) -> f64 {
        shoelace(&self.vertices)
    }

    pub fn centroid(&self) -> [f64; 2] {
        let n = self.len();
        let (mut cx, mut cy, mut a2) = (0.0, 0.0, 0.0);
        for i in 0..n {
            let p = self.vertices[i];
            let q = self.vertices[(i + 1) % n];
            let c = p[0] * q[1] - q[0] * p[1];
            a2 += c;
            cx += (p[0] + q[0]) * c;
            cy += (p[1] + q[1]) * c;
        }
        [cx / (3.0 * a2), cy / (3.0 * a2)]
    }

    pub fn support(&self, u: [f64; 2]) -> f64 {
        self.vertices.iter().map(|v| v[0] * u[0] + v[1] * u[1]).fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn width(&self, u: [f64; 2]) -> f64 {
        self.support(u) + self.support([-u[0], -u[1]])
    }

    pub fn diameter(&self) -> f64 {
        let mut d: f64 = 0.0;
        for a in &self.vertices {
            for b in &self.vertices {
                d = d.max(((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt());
            }
        }
        d
    }

    /// Snaps vertices to the rational grid of the given granularity and
    /// re-hulls; fails if snapping collapses the polygon.
    pub fn to_exact(&self, granularity: f64) -> Result<ConvexPolygon> {
        let pts: Vec<Vec2> = self
            .vertices
            .iter()
            .map(|v| {
                Vec2::new(
                    crate::rational::snap(v[0], granularity),
                    crate::rational::snap(v[1], granularity),
                )
            })
            .collect();
        super::polygon::hull2(&pts)
    }

    pub fn map(&self, f: impl Fn([f64; 2]) -> [f64; 2]) -> FloatPolygon {
        FloatPolygon { vertices: self.vertices.iter().map(|&v| f(v)).collect() }
    }
}

pub fn shoelace(v: &[[f64; 2]]) -> f64 {
    let n = v.len();
    let mut s = 0.0;
    for i in 0..n {
        let p = v[i];
        let q = v[(i + 1) % n];
        s += p[0] * q[1] - q[0] * p[1];
    }
    0.5 * s
}

/// Monotone-chain hull of float points, counterclockwise. Points within
/// `eps` of collinear are dropped.
pub fn hull_f64(points: &[[f64; 2]]) -> Vec<[f64; 2]> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut out: Vec<[f64; 2]> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = out.len();
        let iter: Box<dyn Iterator<Item = &[f64; 2]>> =
            if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for &p in iter {
            while out.len() >= start + 2 && cross(out[out.len() - 2], out[out.len() - 1], p) <= 0.0 {
                out.pop();
            }
            out.push(p);
        }
        out.pop();
    }
    out
}

pub fn hull_area_f64(points: &[[f64; 2]]) -> f64 {
    shoelace(&hull_f64(points))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hull_and_area() {
        let pts = [[0.0, 0.0], [1.0, 0.0], [0.5, 0.5], [1.0, 1.0], [0.0, 1.0], [0.5, 0.0]];
        let h = hull_f64(&pts);
        assert_eq!(h.len(), 4);
        assert!((shoelace(&h) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn centroid_of_square() {
        let p = FloatPolygon::from_ccw(vec![[0.0, 0.0], [2.0, 0.0], [2.0, 2.0], [0.0, 2.0]]);
        let c = p.centroid();
        assert!((c[0] - 1.0).abs() < 1e-15 && (c[1] - 1.0).abs() < 1e-15);
        assert_eq!(p.width([1.0, 0.0]), 2.0);
    }
}
