//! Minimizing the planar functionals over convex `m`-gons.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use nalgebra::{Matrix2, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::functionals::{c_1_with_grid, lattice};
use crate::geom2::float::{hull_f64, shoelace};
use crate::geom2::{ConvexPolygon, FloatPolygon, Vec2};
use crate::rational;

/// Which planar functional to minimize.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Functional {
    Tr,
    C0,
    C1,
}

impl FromStr for Functional {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tr" | "ctr" | "c_tr" => Ok(Functional::Tr),
            "c0" | "c_0" => Ok(Functional::C0),
            "c1" | "c_1" => Ok(Functional::C1),
            other => Err(Error::InvalidConfig(format!("unknown functional {other:?}"))),
        }
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Functional::Tr => "tr",
            Functional::C0 => "c0",
            Functional::C1 => "c1",
        })
    }
}

/// Vertex-snapping granularity for the exact objectives.
pub const SNAP: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    pub m: usize,
    pub functional: Functional,
    pub restarts: usize,
    /// Objective evaluations per Nelder–Mead run.
    pub max_iters: usize,
    /// Nelder–Mead stops when the simplex diameter drops below this.
    pub tol: f64,
    pub seed: u64,
    pub c1_inner_tol: f64,
    /// Direction grid of the inner line-reflection evaluation.
    pub c1_grid: usize,
}

impl SearchConfig {
    pub fn new(m: usize, functional: Functional) -> Self {
        SearchConfig {
            m,
            functional,
            restarts: 20,
            max_iters: 4000,
            tol: 1e-9,
            seed: 0,
            c1_inner_tol: 1e-9,
            c1_grid: 256,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < 3 {
            return Err(Error::InvalidConfig(format!("m = {} < 3", self.m)));
        }
        if self.restarts == 0 {
            return Err(Error::InvalidConfig("restarts must be at least 1".into()));
        }
        if !(self.tol > 0.0) || !(self.c1_inner_tol > 0.0) {
            return Err(Error::InvalidConfig("tolerances must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub best: FloatPolygon,
    pub value: f64,
    /// `(seed, final value)` per restart, ascending by value.
    pub per_restart: Vec<(u64, f64)>,
    pub regularity: f64,
}

fn restart_seed(seed: u64, r: usize) -> u64 {
    // splitmix64 step
    let mut z = seed.wrapping_add(0x9e37_79b9_7f4a_7c15u64.wrapping_mul(r as u64 + 1));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn random_float_polygon(m: usize, rng: &mut ChaCha8Rng) -> Vec<[f64; 2]> {
    let a: f64 = rng.gen_range(0.5..2.0);
    let b: f64 = rng.gen_range(0.5..2.0);
    let rot: f64 = rng.gen_range(0.0..PI);
    let phase: f64 = rng.gen_range(0.0..2.0 * PI);
    let (c, s) = (rot.cos(), rot.sin());
    (0..m)
        .map(|k| {
            let t = phase + 2.0 * PI * (k as f64 + rng.gen_range(-0.4..0.4)) / m as f64;
            let (x, y) = (a * t.cos(), b * t.sin());
            [c * x - s * y, s * x + c * y]
        })
        .collect()
}

/// Random convex `m`-gon with vertices on a random ellipse, snapped to the
/// rational grid of [`SNAP`]; deterministic per seed.
pub fn random_polygon(m: usize, seed: u64) -> Result<ConvexPolygon> {
    if m < 3 {
        return Err(Error::InvalidConfig(format!("m = {m} < 3")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let pts = random_float_polygon(m, &mut rng);
        if let Ok(p) = FloatPolygon::from_ccw(pts).to_exact(SNAP) {
            if p.len() == m {
                return Ok(p);
            }
        }
    }
    Err(Error::GenerationFailure(m))
}

/// Area-weighted centroid and second-moment matrix about it.
fn moments(p: &[[f64; 2]]) -> ([f64; 2], Matrix2<f64>, f64) {
    let area = shoelace(p);
    let c = FloatPolygon::from_ccw(p.to_vec()).centroid();
    let mut m = Matrix2::zeros();
    let n = p.len();
    for i in 0..n {
        let a = [p[i][0] - c[0], p[i][1] - c[1]];
        let b = [p[(i + 1) % n][0] - c[0], p[(i + 1) % n][1] - c[1]];
        let t = 0.5 * (a[0] * b[1] - a[1] * b[0]);
        // triangle (c, a, b): t/6 (a a^T + b b^T + (a b^T + b a^T)/2)
        let xx = a[0] * a[0] + b[0] * b[0] + a[0] * b[0];
        let yy = a[1] * a[1] + b[1] * b[1] + a[1] * b[1];
        let xy = a[0] * a[1] + b[0] * b[1] + 0.5 * (a[0] * b[1] + a[1] * b[0]);
        m += Matrix2::new(xx, xy, xy, yy) * (t / 6.0);
    }
    (c, m, area)
}

/// Affine image with centroid at the origin, isotropic second moment and
/// area 1.
pub fn affine_normalize(p: &FloatPolygon) -> FloatPolygon {
    let (c, m, _) = moments(p.vertices());
    let eig = SymmetricEigen::new(m);
    let inv_sqrt = eig.eigenvectors
        * Matrix2::from_diagonal(&eig.eigenvalues.map(|l| 1.0 / l.sqrt()))
        * eig.eigenvectors.transpose();
    let q = p.map(|v| {
        let w = inv_sqrt * nalgebra::Vector2::new(v[0] - c[0], v[1] - c[1]);
        [w[0], w[1]]
    });
    let s = 1.0 / q.area().sqrt();
    q.map(|v| [v[0] * s, v[1] * s])
}

/// Centroid to the origin and area 1 (for functionals that are only
/// similarity invariant).
pub fn similarity_normalize(p: &FloatPolygon) -> FloatPolygon {
    let c = p.centroid();
    let s = 1.0 / p.area().sqrt();
    p.map(|v| [(v[0] - c[0]) * s, (v[1] - c[1]) * s])
}

/// `(max A_i - min A_i) / area` with `A_i` the area of the triangle on three
/// consecutive vertices.
pub fn regularity_deviation(p: &FloatPolygon) -> f64 {
    let v = p.vertices();
    let n = v.len();
    let tri: Vec<f64> = (0..n).map(|i| shoelace(&[v[(i + n - 1) % n], v[i], v[(i + 1) % n]]).abs()).collect();
    let (lo, hi) = tri.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(l, h), &a| (l.min(a), h.max(a)));
    (hi - lo) / p.area()
}

/// `(longest side - shortest side) / longest side`.
pub fn side_deviation(p: &FloatPolygon) -> f64 {
    let v = p.vertices();
    let n = v.len();
    let sides: Vec<f64> = (0..n)
        .map(|i| ((v[(i + 1) % n][0] - v[i][0]).powi(2) + (v[(i + 1) % n][1] - v[i][1]).powi(2)).sqrt())
        .collect();
    let (lo, hi) = sides.iter().fold((f64::INFINITY, 0.0f64), |(l, h), &s| (l.min(s), h.max(s)));
    (hi - lo) / hi
}

fn snapped(p: &FloatPolygon) -> Vec<lattice::Pt> {
    let q = 1.0 / SNAP;
    let pts: Vec<lattice::Pt> =
        p.vertices().iter().map(|v| ((v[0] * q).round() as i128, (v[1] * q).round() as i128)).collect();
    lattice::hull(&pts)
}

/// Objective value of a float polygon; `+inf` when it is not a convex `m`-gon
/// after hulling and snapping.
pub fn evaluate(cfg: &SearchConfig, pts: &[[f64; 2]]) -> f64 {
    if pts.iter().flatten().any(|x| !x.is_finite()) {
        return f64::INFINITY;
    }
    let hull = hull_f64(pts);
    if hull.len() != cfg.m {
        return f64::INFINITY;
    }
    let fp = FloatPolygon::from_ccw(hull);
    match cfg.functional {
        Functional::C1 => c_1_with_grid(&fp, cfg.c1_inner_tol, cfg.c1_grid).map_or(f64::INFINITY, |v| v.to_f64()),
        // both functionals are scale invariant: snap to the grid and scale
        // by 1/SNAP so the exact path works on integers
        exact => {
            let p = snapped(&fp);
            if p.len() != cfg.m {
                f64::INFINITY
            } else if exact == Functional::Tr {
                crate::rational::to_f64(&lattice::c_tr(&p))
            } else {
                crate::rational::to_f64(&lattice::c_0(&p))
            }
        }
    }
}

/// Nelder–Mead minimization with standard coefficients.
pub fn nelder_mead<F: Fn(&[f64]) -> f64>(f: &F, x0: &[f64], scale: f64, tol: f64, max_evals: usize) -> (Vec<f64>, f64) {
    let d = x0.len();
    let (alpha, gamma, rho, sigma) = (1.0, 2.0, 0.5, 0.5);
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(d + 1);
    simplex.push((x0.to_vec(), f(x0)));
    for i in 0..d {
        let mut x = x0.to_vec();
        x[i] += scale;
        let fx = f(&x);
        simplex.push((x, fx));
    }
    let mut evals = d + 1;
    let along = |a: &[f64], b: &[f64], t: f64| a.iter().zip(b).map(|(x, y)| x + t * (y - x)).collect::<Vec<f64>>();
    while evals < max_evals {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let diam = simplex[1..]
            .iter()
            .map(|(x, _)| x.iter().zip(&simplex[0].0).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
            .fold(0.0, f64::max);
        if diam < tol {
            break;
        }
        let centroid: Vec<f64> =
            (0..d).map(|k| simplex[..d].iter().map(|(x, _)| x[k]).sum::<f64>() / d as f64).collect();
        let worst = simplex[d].clone();
        let xr = along(&centroid, &worst.0, -alpha);
        let fr = f(&xr);
        evals += 1;
        if fr < simplex[0].1 {
            let xe = along(&centroid, &worst.0, -gamma);
            let fe = f(&xe);
            evals += 1;
            simplex[d] = if fe < fr { (xe, fe) } else { (xr, fr) };
        } else if fr < simplex[d - 1].1 {
            simplex[d] = (xr, fr);
        } else {
            let (xc, fc) = if fr < worst.1 {
                let xc = along(&centroid, &xr, rho);
                let fc = f(&xc);
                (xc, fc)
            } else {
                let xc = along(&centroid, &worst.0, rho);
                let fc = f(&xc);
                (xc, fc)
            };
            evals += 1;
            if fc < worst.1.min(fr) {
                simplex[d] = (xc, fc);
            } else {
                let best = simplex[0].0.clone();
                for s in simplex.iter_mut().skip(1) {
                    s.0 = along(&best, &s.0, sigma);
                    s.1 = f(&s.0);
                }
                evals += d;
            }
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    simplex.swap_remove(0)
}

fn normalize_for(cfg: &SearchConfig, p: &FloatPolygon) -> FloatPolygon {
    match cfg.functional {
        Functional::C1 => similarity_normalize(p),
        _ => affine_normalize(p),
    }
}

fn one_restart(cfg: &SearchConfig, seed: u64) -> (Vec<[f64; 2]>, f64) {
    let start = match random_polygon(cfg.m, seed) {
        Ok(p) => normalize_for(cfg, &FloatPolygon::from_exact(&p)),
        Err(_) => return (Vec::new(), f64::INFINITY),
    };
    let obj = |x: &[f64]| {
        let pts: Vec<[f64; 2]> = x.chunks(2).map(|c| [c[0], c[1]]).collect();
        evaluate(cfg, &pts)
    };
    let mut x: Vec<f64> = start.vertices().iter().flatten().copied().collect();
    let mut fx = obj(&x);
    // restart from the best point until a run no longer improves
    for _ in 0..6 {
        let poly = FloatPolygon::from_ccw(hull_f64(&x.chunks(2).map(|c| [c[0], c[1]]).collect::<Vec<_>>()));
        let poly = normalize_for(cfg, &poly);
        if poly.len() != cfg.m {
            break;
        }
        let x0: Vec<f64> = poly.vertices().iter().flatten().copied().collect();
        let (xn, fnew) = nelder_mead(&obj, &x0, 0.1 * poly.diameter(), cfg.tol, cfg.max_iters);
        let gain = fx - fnew;
        if fnew <= fx {
            x = xn;
            fx = fnew;
        }
        if !(gain > 1e-12) {
            break;
        }
    }
    let pts = hull_f64(&x.chunks(2).map(|c| [c[0], c[1]]).collect::<Vec<_>>());
    (pts, fx)
}

/// Multi-start Nelder–Mead over vertex coordinates. Restarts run in parallel
/// with seeds derived from `cfg.seed`; the reduction is by value, then by
/// restart index.
pub fn minimize_functional(cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    let runs: Vec<(u64, Vec<[f64; 2]>, f64)> = (0..cfg.restarts)
        .into_par_iter()
        .map(|r| {
            let s = restart_seed(cfg.seed, r);
            let (pts, v) = one_restart(cfg, s);
            (s, pts, v)
        })
        .collect();
    let best = (0..runs.len()).fold(0, |b, i| if runs[i].2 < runs[b].2 { i } else { b });
    if !runs[best].2.is_finite() {
        return Err(Error::GenerationFailure(cfg.m));
    }
    let poly = normalize_for(cfg, &FloatPolygon::from_ccw(runs[best].1.clone()));
    let mut per_restart: Vec<(u64, f64)> = runs.iter().map(|(s, _, v)| (*s, *v)).collect();
    per_restart.sort_by(|a, b| a.1.total_cmp(&b.1));
    Ok(SearchResult {
        regularity: regularity_deviation(&poly),
        value: runs[best].2,
        best: poly,
        per_restart,
    })
}

/// Snaps a float polygon to an exact one.
pub fn to_exact(p: &FloatPolygon) -> Result<ConvexPolygon> {
    p.to_exact(SNAP)
}

/// Float vertices as rational points, e.g. for writing body files.
pub fn exact_vertices(p: &FloatPolygon) -> Vec<Vec2> {
    p.vertices().iter().map(|v| Vec2::new(rational::snap(v[0], SNAP), rational::snap(v[1], SNAP))).collect()
}
