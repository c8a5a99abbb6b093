//! Brute-force oracles shared by the integration tests. None of them goes
//! through the difference body or the feature machinery they are compared
//! against.
#![allow(dead_code)]

use hullvol_core::geom2::{support_value, ConvexPolygon, Vec2};
use hullvol_core::radon::scale_to_boundary;
use hullvol_core::rational::Rational;

pub fn floats(p: &ConvexPolygon) -> Vec<[f64; 2]> {
    p.to_f64()
}

fn shoelace(v: &[[f64; 2]]) -> f64 {
    let n = v.len();
    0.5 * (0..n).map(|i| v[i][0] * v[(i + 1) % n][1] - v[i][1] * v[(i + 1) % n][0]).sum::<f64>()
}

/// Longest chord along unit `u`: some longest chord starts at a vertex, so
/// clip the line through each vertex against every edge half-plane.
pub fn chord_brute(v: &[[f64; 2]], u: [f64; 2]) -> f64 {
    let n = v.len();
    let mut best = 0.0f64;
    for p in v {
        let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
        for i in 0..n {
            let (a, b) = (v[i], v[(i + 1) % n]);
            // inside: cross(b - a, x - a) >= 0
            let e = [b[0] - a[0], b[1] - a[1]];
            let c0 = e[0] * (p[1] - a[1]) - e[1] * (p[0] - a[0]);
            let c1 = e[0] * u[1] - e[1] * u[0];
            if c1 > 0.0 {
                lo = lo.max(-c0 / c1);
            } else if c1 < 0.0 {
                hi = hi.min(-c0 / c1);
            }
        }
        best = best.max(hi - lo);
    }
    best
}

pub fn width_brute(v: &[[f64; 2]], u: [f64; 2]) -> f64 {
    let d = v.iter().map(|p| p[0] * u[0] + p[1] * u[1]);
    let (lo, hi) = d.fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), x| (l.min(x), h.max(x)));
    hi - lo
}

/// `1 + max d(u) w(u⊥) / area` over `grid` equally spaced directions, every
/// vertex difference and every edge direction.
pub fn c_tr_dense(p: &ConvexPolygon, grid: usize) -> f64 {
    let v = floats(p);
    let area = shoelace(&v);
    let mut dirs: Vec<[f64; 2]> = (0..grid)
        .map(|k| {
            let a = std::f64::consts::PI * k as f64 / grid as f64;
            [a.cos(), a.sin()]
        })
        .collect();
    for a in &v {
        for b in &v {
            if a != b {
                dirs.push([b[0] - a[0], b[1] - a[1]]);
            }
        }
    }
    let mut best = 0.0f64;
    for d in dirs {
        let l = d[0].hypot(d[1]);
        let u = [d[0] / l, d[1] / l];
        best = best.max(chord_brute(&v, u) * width_brute(&v, [-u[1], u[0]]));
    }
    1.0 + best / area
}

/// `x ⊥ y`: the line through the boundary point on ray `y` parallel to `x`
/// supports the body. Exact.
pub fn birkhoff_brute(p: &ConvexPolygon, x: &Vec2, y: &Vec2) -> bool {
    let yb = scale_to_boundary(p, y).unwrap();
    let n = x.rot90();
    let s = yb.dot(&n);
    s == support_value(p, &n) || -s == support_value(p, &-&n)
}

/// Symmetry of the brute-force relation over all pairs of `dirs`.
pub fn radon_brute(p: &ConvexPolygon, dirs: &[Vec2]) -> bool {
    let rel: Vec<Vec<bool>> = dirs.iter().map(|x| dirs.iter().map(|y| birkhoff_brute(p, x, y)).collect()).collect();
    (0..dirs.len()).all(|i| (0..dirs.len()).all(|j| rel[i][j] == rel[j][i]))
}

/// Vertex directions, edge directions and `extra` random directions.
pub fn probe_directions<R: rand::Rng>(rng: &mut R, p: &ConvexPolygon, total: usize) -> Vec<Vec2> {
    let mut dirs: Vec<Vec2> = p.vertices().to_vec();
    dirs.extend((0..p.len()).map(|i| p.edge(i)));
    while dirs.len() < total {
        dirs.push(Vec2::from_ints(rng.gen_range(-10_000..=10_000), rng.gen_range(-10_000..=10_000)));
        if dirs.last().unwrap().is_zero() {
            dirs.pop();
        }
    }
    dirs
}

pub fn rat(r: &Rational) -> f64 {
    hullvol_core::rational::to_f64(r)
}

/// Hull volume of a point set in `R^3` by brute force over candidate facets:
/// every triple whose plane leaves all points on one side contributes its
/// tetrahedron with the centroid. Slow but independent of the incremental
/// hull.
pub fn hull_volume_brute3(pts: &[Vec<f64>]) -> f64 {
    let n = pts.len();
    let c: Vec<f64> = (0..3).map(|k| pts.iter().map(|p| p[k]).sum::<f64>() / n as f64).collect();
    let sub = |a: &[f64], b: &[f64]| [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
    let cross = |a: [f64; 3], b: [f64; 3]| [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]];
    let dot = |a: [f64; 3], b: [f64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    let scale = pts.iter().flatten().fold(1.0f64, |m, x| m.max(x.abs()));
    let eps = 1e-9 * scale * scale * scale;
    let mut vol = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let nrm = cross(sub(&pts[j], &pts[i]), sub(&pts[k], &pts[i]));
                let side: Vec<f64> = pts.iter().map(|p| dot(nrm, sub(p, &pts[i]))).collect();
                let pos = side.iter().any(|s| *s > eps);
                let neg = side.iter().any(|s| *s < -eps);
                if pos && neg {
                    continue;
                }
                // count each facet once, from its three smallest indices
                let on: Vec<usize> = (0..n).filter(|&q| side[q].abs() <= eps).collect();
                if on[0] != i || on[1] != j || on[2] != k {
                    continue;
                }
                vol += facet_cone_volume(pts, &on, &c, nrm);
            }
        }
    }
    vol
}

fn facet_cone_volume(pts: &[Vec<f64>], on: &[usize], c: &[f64], nrm: [f64; 3]) -> f64 {
    // order the coplanar points by angle around their mean, then fan
    let m = on.len() as f64;
    let mid: Vec<f64> = (0..3).map(|k| on.iter().map(|&q| pts[q][k]).sum::<f64>() / m).collect();
    let l = (nrm[0] * nrm[0] + nrm[1] * nrm[1] + nrm[2] * nrm[2]).sqrt();
    let nn = [nrm[0] / l, nrm[1] / l, nrm[2] / l];
    let a0 = {
        let p = &pts[on[0]];
        let d = [p[0] - mid[0], p[1] - mid[1], p[2] - mid[2]];
        let dl = (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt();
        [d[0] / dl, d[1] / dl, d[2] / dl]
    };
    let b0 = [nn[1] * a0[2] - nn[2] * a0[1], nn[2] * a0[0] - nn[0] * a0[2], nn[0] * a0[1] - nn[1] * a0[0]];
    let mut ring: Vec<(f64, usize)> = on
        .iter()
        .map(|&q| {
            let d: Vec<f64> = (0..3).map(|k| pts[q][k] - mid[k]).collect();
            let x = d[0] * a0[0] + d[1] * a0[1] + d[2] * a0[2];
            let y = d[0] * b0[0] + d[1] * b0[1] + d[2] * b0[2];
            (y.atan2(x), q)
        })
        .collect();
    ring.sort_by(|a, b| a.0.total_cmp(&b.0));
    let det = |a: &[f64], b: &[f64], d: &[f64]| {
        let u: Vec<f64> = (0..3).map(|k| a[k] - c[k]).collect();
        let v: Vec<f64> = (0..3).map(|k| b[k] - c[k]).collect();
        let w: Vec<f64> = (0..3).map(|k| d[k] - c[k]).collect();
        u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) + u[2] * (v[0] * w[1] - v[1] * w[0])
    };
    let r = ring.len();
    (1..r - 1).map(|t| det(&pts[ring[0].1], &pts[ring[t].1], &pts[ring[t + 1].1]).abs() / 6.0).sum()
}
