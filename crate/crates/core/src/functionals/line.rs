use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Breakdown, FunctionalValue, Maximizer, Scalar};
use crate::error::{Error, Result};
use crate::geom2::float::hull_area_f64;
use crate::geom2::motion::reflect_float;
use crate::geom2::{ConvexPolygon, FloatPolygon};

/// Grid size over line directions in `[0, pi)`; each direction carries two
/// supporting lines.
pub const DEFAULT_GRID: usize = 2048;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Reflection axis given in floating point.
#[derive(Clone, Debug, PartialEq)]
pub struct SupportingLine {
    /// A point of the polygon on the line.
    pub point: [f64; 2],
    /// Direction angle of the line, in `[0, pi)`.
    pub angle: f64,
    /// Angle of the outer normal of the polygon at the line, in `[0, 2pi)`.
    pub normal_angle: f64,
}

/// `area(conv(P ∪ P_σ)) / area(P)` for the supporting line `σ` with outer
/// normal at angle `phi`.
///
/// Reflecting about a supporting line, the hull is bounded by the far chain of
/// `P` and its mirror image, so its area is `2 area(P)` plus twice the area
/// of the cap between `σ` and the near chain of `P`.
pub fn c_1_objective(p: &FloatPolygon, area: f64, phi: f64) -> f64 {
    let (c, s) = (phi.cos(), phi.sin());
    let v = p.vertices();
    let n = v.len();
    let along = |q: &[f64; 2]| -s * q[0] + c * q[1];
    let height = |q: &[f64; 2]| c * q[0] + s * q[1];
    let (mut lo, mut hi) = (0, 0);
    let mut top = f64::NEG_INFINITY;
    for (i, q) in v.iter().enumerate() {
        if along(q) < along(&v[lo]) {
            lo = i;
        }
        if along(q) > along(&v[hi]) {
            hi = i;
        }
        top = top.max(height(q));
    }
    // CCW traversal from the min-`along` vertex to the max-`along` vertex runs
    // over the chain facing the normal.
    let mut cap = 0.0;
    let mut i = lo;
    while i != hi {
        let j = (i + 1) % n;
        let ds = along(&v[j]) - along(&v[i]);
        cap += ds * (top - 0.5 * (height(&v[i]) + height(&v[j])));
        i = j;
    }
    2.0 + 2.0 * cap / area
}

fn supporting_line(p: &FloatPolygon, phi: f64) -> SupportingLine {
    let (c, s) = (phi.cos(), phi.sin());
    let point = *p
        .vertices()
        .iter()
        .max_by(|a, b| (c * a[0] + s * a[1]).total_cmp(&(c * b[0] + s * b[1])))
        .unwrap();
    SupportingLine {
        point,
        angle: (phi + PI / 2.0).rem_euclid(PI),
        normal_angle: phi.rem_euclid(2.0 * PI),
    }
}

fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, xtol: f64) -> (f64, f64) {
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..200 {
        if b - a <= xtol {
            break;
        }
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Line-reflection functional, maximized over supporting lines.
///
/// `grid` line directions in `[0, pi)` are scanned (both supporting lines of
/// each), then every local-maximum bracket is refined by golden-section search.
pub fn c_1_with_grid(p: &FloatPolygon, tol: f64, grid: usize) -> Result<FunctionalValue> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    let area = p.area();
    let k = 2 * grid.max(4);
    let step = 2.0 * PI / k as f64;
    let vals: Vec<f64> = (0..k).into_par_iter().map(|i| c_1_objective(p, area, i as f64 * step)).collect();
    let peaks: Vec<usize> = (0..k)
        .filter(|&i| {
            let prev = vals[(i + k - 1) % k];
            let next = vals[(i + 1) % k];
            vals[i] >= prev && vals[i] >= next
        })
        .collect();
    let xtol = (tol * 1e-3).max(1e-13);
    let refined: Vec<(f64, f64)> = peaks
        .par_iter()
        .map(|&i| {
            let centre = i as f64 * step;
            let (x, fx) = golden_max(|phi| c_1_objective(p, area, phi), centre - step, centre + step, xtol);
            if fx >= vals[i] {
                (x.rem_euclid(2.0 * PI), fx)
            } else {
                (centre, vals[i])
            }
        })
        .collect();
    // ties resolve to the smallest line angle
    let (phi, value) = refined
        .into_iter()
        .fold(None::<(f64, f64)>, |acc, (x, fx)| match acc {
            None => Some((x, fx)),
            Some((bx, bf)) => {
                let bx_line = (bx + PI / 2.0).rem_euclid(PI);
                let x_line = (x + PI / 2.0).rem_euclid(PI);
                if fx > bf || (fx == bf && x_line < bx_line) {
                    Some((x, fx))
                } else {
                    Some((bx, bf))
                }
            }
        })
        .expect("grid has at least one local maximum");
    Ok(FunctionalValue {
        value: Scalar::Float(value),
        exact: false,
        maximizer: Maximizer::Line(supporting_line(p, phi)),
        details: Breakdown {
            area: Scalar::Float(area),
            hull_area: Scalar::Float(value * area),
            chord_raw: None,
            width_raw: None,
        },
    })
}

/// [`c_1_with_grid`] on the default grid, for an exact polygon.
pub fn c_1(p: &ConvexPolygon, tol: f64) -> Result<FunctionalValue> {
    c_1_with_grid(&FloatPolygon::from_exact(p), tol, DEFAULT_GRID)
}

/// Largest ratio found over lines through the interior of `p` (sampled) and
/// the supporting-line maximum it is compared against.
#[derive(Clone, Debug, PartialEq)]
pub struct AxisValidation {
    pub supporting_max: f64,
    pub chord_max: f64,
    pub samples: usize,
}

impl AxisValidation {
    pub fn holds(&self, slack: f64) -> bool {
        self.chord_max <= self.supporting_max + slack
    }
}

/// Samples reflection axes that cut through `p` and evaluates the hull ratio
/// directly.
pub fn c_1_validate(p: &ConvexPolygon, tol: f64, samples: usize, seed: u64) -> Result<AxisValidation> {
    let fp = FloatPolygon::from_exact(p);
    let supporting_max = c_1(p, tol)?.to_f64();
    let area = fp.area();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let axes: Vec<(f64, f64)> = (0..samples).map(|_| (rng.gen_range(0.0..PI), rng.gen::<f64>())).collect();
    let chord_max = axes
        .par_iter()
        .map(|&(theta, frac)| {
            let normal = [-(theta.sin()), theta.cos()];
            let hi = fp.support(normal);
            let lo = -fp.support([-normal[0], -normal[1]]);
            let offset = lo + (hi - lo) * (0.001 + 0.998 * frac);
            let point = [normal[0] * offset, normal[1] * offset];
            let refl = reflect_float(&fp, point, theta);
            let pts: Vec<[f64; 2]> = fp.vertices().iter().chain(refl.vertices()).copied().collect();
            hull_area_f64(&pts) / area
        })
        .reduce(|| f64::NEG_INFINITY, f64::max);
    Ok(AxisValidation { supporting_max, chord_max, samples })
}

/// Closed-form line-reflection functional of a triangle.
///
/// Put a supporting line `L` through vertex `a`, with the adjacent sides
/// (lengths `p = |a a+|`, `q = |a a-|`) leaving `L` at angles `beta` and
/// `pi - alpha - beta`. The cap between `L` and the near chain is, piecewise
/// in `beta`, of the form `A + C cos 2beta + S sin 2beta`; the pieces change
/// where a vertex crosses the normal of `L` at `a` or the two far vertices
/// swap their order along `L`. Each piece is maximized in closed form.
///
/// On the piece where both sides leave at acute angles the cap is
/// `(p^2 sin 2beta + q^2 sin 2gamma) / 4`, whose maximizer satisfies
/// `p^2 cos 2beta = q^2 cos 2gamma`; for slender triangles the best line
/// can lie on another piece.
pub fn c_1_triangle(t: &ConvexPolygon) -> Result<FunctionalValue> {
    if t.len() != 3 {
        return Err(Error::NotATriangle(t.len()));
    }
    let v = t.to_f64();
    let area = FloatPolygon::from_ccw(v.clone()).area();
    let mut best: Option<(f64, SupportingLine)> = None;
    for i in 0..3 {
        let (a, next, prev) = (v[i], v[(i + 1) % 3], v[(i + 2) % 3]);
        let e1 = [next[0] - a[0], next[1] - a[1]];
        let e2 = [prev[0] - a[0], prev[1] - a[1]];
        let p = e1[0].hypot(e1[1]);
        let q = e2[0].hypot(e2[1]);
        let alpha = ((e1[0] * e2[0] + e1[1] * e2[1]) / (p * q)).clamp(-1.0, 1.0).acos();
        let (beta, cap) = vertex_cap_max(p, q, alpha);
        // the side a->next makes angle beta with L, measured counterclockwise
        let dir = e1[1].atan2(e1[0]) - beta;
        let line = SupportingLine {
            point: a,
            angle: dir.rem_euclid(PI),
            normal_angle: (dir - PI / 2.0).rem_euclid(2.0 * PI),
        };
        let ratio = 2.0 + 2.0 * cap / area;
        if best.as_ref().map_or(true, |(b, l)| ratio > *b || (ratio == *b && line.angle < l.angle)) {
            best = Some((ratio, line));
        }
    }
    let (value, line) = best.unwrap();
    Ok(FunctionalValue {
        value: Scalar::Float(value),
        exact: false,
        maximizer: Maximizer::Line(line),
        details: Breakdown {
            area: Scalar::Float(area),
            hull_area: Scalar::Float(value * area),
            chord_raw: None,
            width_raw: None,
        },
    })
}

/// Cap area between the x-axis and the lower chain of the triangle
/// `0, p e^{i beta}, q e^{i (beta + alpha)}`.
pub(crate) fn vertex_cap(p: f64, q: f64, alpha: f64, beta: f64) -> f64 {
    let n = [p * beta.cos(), p * beta.sin()];
    let m = [q * (beta + alpha).cos(), q * (beta + alpha).sin()];
    let mut pts = [[0.0, 0.0], n, m];
    pts.sort_by(|u, w| u[0].total_cmp(&w[0]));
    let [l, c, r] = pts;
    // middle point on the lower chain iff it lies below the outer segment
    let below = (r[0] - l[0]) * (c[1] - l[1]) - (r[1] - l[1]) * (c[0] - l[0]) <= 0.0;
    let trap = |u: [f64; 2], w: [f64; 2]| 0.5 * (w[0] - u[0]) * (u[1] + w[1]);
    if below {
        trap(l, c) + trap(c, r)
    } else {
        trap(l, r)
    }
}

/// Maximizer `beta` in `[0, pi - alpha]` of [`vertex_cap`] and the maximum.
pub(crate) fn vertex_cap_max(p: f64, q: f64, alpha: f64) -> (f64, f64) {
    let span = PI - alpha;
    let mut cuts = vec![0.0, span, PI / 2.0, PI / 2.0 - alpha];
    // far vertices level along L: p cos b = q cos(b + alpha)
    let swap = (-(p - q * alpha.cos())).atan2(q * alpha.sin());
    cuts.extend([swap, swap + PI, swap - PI]);
    cuts.retain(|b| (0.0..=span).contains(b));
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let f = |b: f64| vertex_cap(p, q, alpha, b);
    let mut cands = cuts.clone();
    for w in cuts.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        if hi - lo < 1e-15 {
            continue;
        }
        // recover A + C cos 2b + S sin 2b from three interior samples
        let xs = [lo + 0.25 * (hi - lo), lo + 0.5 * (hi - lo), lo + 0.75 * (hi - lo)];
        let m = nalgebra::Matrix3::from_fn(|r, c| match c {
            0 => 1.0,
            1 => (2.0 * xs[r]).cos(),
            _ => (2.0 * xs[r]).sin(),
        });
        let rhs = nalgebra::Vector3::from_fn(|r, _| f(xs[r]));
        if let Some(coef) = m.lu().solve(&rhs) {
            // stationary points: -C sin 2b + S cos 2b = 0
            let b0 = 0.5 * coef[2].atan2(coef[1]);
            for k in -2..=2 {
                let b = b0 + k as f64 * PI / 2.0;
                if b > lo && b < hi {
                    cands.push(b);
                }
            }
        }
    }
    cands
        .into_iter()
        .map(|b| (b, f(b)))
        .fold((0.0, f64::NEG_INFINITY), |acc, x| if x.1 > acc.1 { x } else { acc })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom2::shapes::{disk_gon, random_triangle, regular_gon};
    use crate::geom2::{apply_motion, Direction, Line2, Motion, Vec2};
    use crate::functionals::hull_area_union;
    use crate::geom2::area2;
    use crate::rational::to_f64;

    #[test]
    fn objective_matches_direct_hull() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..20 {
            let t = random_triangle(&mut rng);
            let fp = FloatPolygon::from_exact(&t);
            let area = fp.area();
            for k in 0..37 {
                let phi = k as f64 * 0.17;
                let l = supporting_line(&fp, phi);
                let refl = reflect_float(&fp, l.point, l.angle);
                let pts: Vec<[f64; 2]> = fp.vertices().iter().chain(refl.vertices()).copied().collect();
                let direct = hull_area_f64(&pts) / area;
                let fast = c_1_objective(&fp, area, phi);
                assert!((direct - fast).abs() < 1e-9 * direct, "{direct} {fast}");
            }
        }
    }

    #[test]
    fn exact_axis_check() {
        // square reflected about the supporting line x + y = 0 at the origin
        let sq = ConvexPolygon::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        let axis = Line2::new(Vec2::zero(), Direction::from_ints(1, -1).unwrap());
        let r = apply_motion(&sq, &Motion::LineReflect(axis)).unwrap();
        assert_eq!(to_f64(&(hull_area_union(&sq, &r) / area2(&sq))), 3.0);
    }

    #[test]
    fn equilateral_square_disk() {
        let tri = regular_gon(3, 1e-12, 0.3).unwrap();
        assert!((c_1(&tri, 1e-9).unwrap().to_f64() - 4.0).abs() < 1e-6);
        let sq = ConvexPolygon::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        assert!((c_1(&sq, 1e-9).unwrap().to_f64() - 3.0).abs() < 1e-6);
        let disk = disk_gon(4096, 1e-9).unwrap();
        let v = c_1(&disk, 1e-6).unwrap().to_f64();
        assert!((v - (1.0 + 4.0 / PI)).abs() < 5e-3, "{v}");
    }

    #[test]
    fn rejects_bad_tolerance() {
        let sq = ConvexPolygon::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        assert_eq!(c_1(&sq, 0.0), Err(Error::InvalidTolerance(0.0)));
        assert!(c_1(&sq, f64::NAN).is_err());
        assert_eq!(c_1_triangle(&sq), Err(Error::NotATriangle(4)));
    }

    #[test]
    fn triangle_closed_form_satisfies_stationarity() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut acute = 0;
        for _ in 0..200 {
            let p: f64 = rng.gen_range(0.5..2.0);
            let q: f64 = rng.gen_range(0.5..2.0);
            let alpha: f64 = rng.gen_range(0.3..2.8);
            if (alpha - PI / 2.0).abs() < 1e-3 {
                continue;
            }
            let (beta, cap) = vertex_cap_max(p, q, alpha);
            let gamma = PI - alpha - beta;
            if beta > 1e-6 && gamma > 1e-6 && beta < PI / 2.0 && gamma < PI / 2.0 {
                acute += 1;
                let cond = p * p * (2.0 * beta).cos() - q * q * (2.0 * gamma).cos();
                assert!(cond.abs() < 1e-9 * (p * p + q * q), "{cond}");
                let area = 0.5 * p * q * alpha.sin();
                let ratio = alpha.cos().abs() / ((2.0 * beta).cos() * (2.0 * gamma).cos()).sqrt();
                assert!((cap / area - ratio).abs() < 1e-9 * ratio, "{} {ratio}", cap / area);
            }
        }
        assert!(acute > 50);
        let (beta, _) = vertex_cap_max(1.0, 1.6, PI / 2.0);
        assert!((beta - PI / 4.0).abs() < 1e-9);
    }

    #[test]
    fn vertex_cap_matches_objective() {
        // cap at a vertex equals the deficit formula for the same line
        let t = FloatPolygon::from_ccw(vec![[0.0, 0.0], [3.0, 0.2], [0.4, 0.5]]);
        let area = t.area();
        let e1 = [3.0f64, 0.2];
        let e2 = [0.4f64, 0.5];
        let (p, q) = (e1[0].hypot(e1[1]), e2[0].hypot(e2[1]));
        let alpha = ((e1[0] * e2[0] + e1[1] * e2[1]) / (p * q)).acos();
        for k in 1..40 {
            let beta = k as f64 * (PI - alpha) / 40.0;
            let dir = e1[1].atan2(e1[0]) - beta;
            let direct = c_1_objective(&t, area, dir - PI / 2.0);
            let via_cap = 2.0 + 2.0 * vertex_cap(p, q, alpha, beta) / area;
            assert!((direct - via_cap).abs() < 1e-9, "{beta} {direct} {via_cap}");
        }
    }

    #[test]
    fn triangle_closed_form_matches_numeric() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..20 {
            let t = random_triangle(&mut rng);
            let a = c_1_triangle(&t).unwrap().to_f64();
            let b = c_1(&t, 1e-10).unwrap().to_f64();
            assert!((a - b).abs() < 1e-6, "{a} {b}");
        }
        let eq = regular_gon(3, 1e-12, 0.0).unwrap();
        assert!((c_1_triangle(&eq).unwrap().to_f64() - 4.0).abs() < 1e-9);
    }

    #[test]
    fn interior_axes_do_not_beat_supporting_lines() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let p = crate::geom2::shapes::random_polygon_exact(&mut rng, 5);
        let v = c_1_validate(&p, 1e-8, 500, 3).unwrap();
        assert!(v.holds(1e-9), "{v:?}");
    }
}
