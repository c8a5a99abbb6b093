use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{Breakdown, FunctionalValue, Maximizer, Scalar};
use crate::geom2::polygon::IndexedBody;
use crate::geom2::{area2, difference_body, ConvexPolygon, Direction, FloatPolygon};
use crate::rational::Rational;

/// Directions at which `u -> d(u) w(u⊥)` can attain an extremum: directions of
/// the vertices and of the edges of the difference body, one per antipodal
/// pair, in canonical order.
///
/// Between consecutive critical directions the ray meets a fixed edge of the
/// difference body and the support across `u` is attained at a fixed vertex,
/// so the objective is a ratio of two linear forms in `(cos, sin)` and hence
/// monotone.
pub fn critical_directions(diff: &ConvexPolygon) -> Vec<Direction> {
    let mut set = BTreeSet::new();
    for i in 0..diff.len() {
        set.insert(Direction::canonical(diff.vertex(i)).expect("origin is interior"));
        set.insert(Direction::canonical(&diff.edge(i)).expect("edges are nonzero"));
    }
    set.into_iter().collect()
}

/// Exact raw profile `t(v) * width(rot90 v)` at each critical direction.
/// Equals `d(u) w(u⊥)` for `u = v/|v|`.
pub fn translate_profile_raw(p: &ConvexPolygon) -> Vec<(Direction, Rational, Rational)> {
    let diff = difference_body(p);
    let body = IndexedBody::new(diff.clone());
    critical_directions(&diff)
        .into_par_iter()
        .with_min_len(64)
        .map(|d| {
            let t = body.radial(&d.v);
            // the width of P across w equals the support of P - P at w
            let w = body.support(&d.v.rot90());
            (d, t, w)
        })
        .collect()
}

/// Exact translative functional `1 + max_u d(u) w(u⊥) / area(P)`.
pub fn c_tr(p: &ConvexPolygon) -> FunctionalValue {
    let area = area2(p);
    let profile = translate_profile_raw(p);
    let mut best: Option<(usize, Rational)> = None;
    for (i, (_, t, w)) in profile.iter().enumerate() {
        let f = t * w;
        // canonical order already; strict comparison keeps the smallest
        if best.as_ref().map_or(true, |(_, b)| f > *b) {
            best = Some((i, f));
        }
    }
    let (i, f) = best.expect("at least one critical direction");
    let (dir, t, w) = profile[i].clone();
    let one = Rational::from_integer(1.into());
    let value = &one + &f / &area;
    FunctionalValue {
        value: Scalar::Exact(value),
        exact: true,
        maximizer: Maximizer::Direction(dir),
        details: Breakdown {
            hull_area: Scalar::Exact(&area + &f),
            area: Scalar::Exact(area),
            chord_raw: Some(t),
            width_raw: Some(w),
        },
    }
}

fn radial_f64(d: &FloatPolygon, u: [f64; 2]) -> f64 {
    let v = d.vertices();
    let n = v.len();
    let mut best = f64::INFINITY;
    for i in 0..n {
        let a = v[i];
        let b = v[(i + 1) % n];
        let normal = [b[1] - a[1], a[0] - b[0]];
        let nu = normal[0] * u[0] + normal[1] * u[1];
        if nu > 0.0 {
            best = best.min((normal[0] * a[0] + normal[1] * a[1]) / nu);
        }
    }
    best
}

/// Samples `f(theta) = d(theta) w(theta + pi/2)` at `theta_k = k pi / m`.
pub fn profile_tr(p: &ConvexPolygon, m: usize) -> Vec<(f64, f64)> {
    let diff = FloatPolygon::from_exact(&difference_body(p));
    (0..m)
        .map(|k| {
            let th = std::f64::consts::PI * k as f64 / m as f64;
            let u = [th.cos(), th.sin()];
            let chord = radial_f64(&diff, u);
            let width = diff.support([-u[1], u[0]]);
            (th, chord * width)
        })
        .collect()
}
