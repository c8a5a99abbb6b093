use num_traits::{Signed, Zero};

use super::float::FloatPolygon;
use super::polygon::{hull2, ConvexPolygon};
use super::vec::{Direction, Line2, Vec2};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Rigid or affine motions acting on polygons.
#[derive(Clone, Debug, PartialEq)]
pub enum Motion {
    Translate(Vec2),
    /// Reflection through a point: `x -> 2c - x`.
    PointReflect(Vec2),
    LineReflect(Line2),
    /// Row-major 2x2 matrix.
    Linear([[Rational; 2]; 2]),
}

impl Motion {
    pub fn apply(&self, p: &Vec2) -> Vec2 {
        match self {
            Motion::Translate(t) => p + t,
            Motion::PointReflect(c) => &c.scale(&rational::int(2)) - p,
            Motion::LineReflect(l) => l.reflect(p),
            Motion::Linear(m) => Vec2::new(
                &m[0][0] * &p.x + &m[0][1] * &p.y,
                &m[1][0] * &p.x + &m[1][1] * &p.y,
            ),
        }
    }

    fn reverses_orientation(&self) -> bool {
        match self {
            Motion::LineReflect(_) => true,
            Motion::Linear(m) => (&m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]).is_negative(),
            _ => false,
        }
    }
}

/// Image of `p` under `m`, re-oriented counterclockwise.
pub fn apply_motion(p: &ConvexPolygon, m: &Motion) -> Result<ConvexPolygon> {
    if let Motion::Linear(a) = m {
        if (&a[0][0] * &a[1][1] - &a[0][1] * &a[1][0]).is_zero() {
            return Err(Error::SingularMap);
        }
    }
    let mut pts: Vec<Vec2> = p.vertices().iter().map(|v| m.apply(v)).collect();
    if m.reverses_orientation() {
        pts.reverse();
    }
    ConvexPolygon::new(pts)
}

/// Reflection of a float polygon about the line through `point` with unit
/// direction `(cos a, sin a)`. Used where the axis is only known in floating
/// point.
pub fn reflect_float(p: &FloatPolygon, point: [f64; 2], angle: f64) -> FloatPolygon {
    let (c, s) = (angle.cos(), angle.sin());
    let mut pts: Vec<[f64; 2]> = p
        .vertices()
        .iter()
        .map(|v| {
            let (dx, dy) = (v[0] - point[0], v[1] - point[1]);
            let along = dx * c + dy * s;
            [point[0] + 2.0 * along * c - dx, point[1] + 2.0 * along * s - dy]
        })
        .collect();
    pts.reverse();
    FloatPolygon::from_ccw(pts)
}

/// Steiner symmetral about the line through the origin spanned by `axis`.
///
/// Works in the scaled frame `s = x . a`, `r = x . rot90(a)`; mapping back
/// divides by `|a|^2`, so the result stays rational for every rational axis and
/// the area is preserved exactly.
pub fn steiner2(p: &ConvexPolygon, axis: &Direction) -> ConvexPolygon {
    let a = &axis.v;
    let b = a.rot90();
    let n2 = a.norm2();
    let frame: Vec<(Rational, Rational)> = p.vertices().iter().map(|v| (v.dot(a), v.dot(&b))).collect();
    let mut stations: Vec<Rational> = frame.iter().map(|(s, _)| s.clone()).collect();
    stations.sort();
    stations.dedup();
    let two = rational::int(2);
    let n = frame.len();
    let mut out = Vec::with_capacity(2 * stations.len());
    for s in &stations {
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        let mut push = |r: Rational| {
            if lo.as_ref().map_or(true, |l| r < *l) {
                lo = Some(r.clone());
            }
            if hi.as_ref().map_or(true, |h| r > *h) {
                hi = Some(r);
            }
        };
        for i in 0..n {
            let (s0, r0) = &frame[i];
            let (s1, r1) = &frame[(i + 1) % n];
            if s0 == s {
                push(r0.clone());
            }
            let between = (s0 < s && s < s1) || (s1 < s && s < s0);
            if between {
                let t = (s - s0) / (s1 - s0);
                push(r0 + &t * (r1 - r0));
            }
        }
        let half = (hi.unwrap() - lo.unwrap()) / &two;
        for r in [half.clone(), -half] {
            let x = (&s.clone() * &a.x + &r * &b.x) / &n2;
            let y = (&s.clone() * &a.y + &r * &b.y) / &n2;
            out.push(Vec2::new(x, y));
        }
    }
    hull2(&out).expect("symmetral of a convex body is a convex body")
}
