use super::hull::{FacetInfo, HullN};
use super::lp;
use super::linalg::{dot, norm, MAX_DIM};
use crate::error::{Error, Result};

/// Volume of the unit ball in `R^n`, by `v_n = 2 pi / n * v_{n-2}`.
pub fn v_ball(n: usize) -> f64 {
    match n {
        0 => 1.0,
        1 => 2.0,
        _ => 2.0 * std::f64::consts::PI / n as f64 * v_ball(n - 2),
    }
}

/// Convex polytope given by points; the hull and its facets are precomputed.
#[derive(Clone, Debug)]
pub struct Polytope {
    hull: HullN,
    vertices: Vec<Vec<f64>>,
    facets: Vec<FacetInfo>,
    volume: f64,
}

impl Polytope {
    pub fn new(points: &[Vec<f64>]) -> Result<Polytope> {
        let hull = HullN::new(points)?;
        let vertices: Vec<Vec<f64>> = hull.vertex_indices().iter().map(|&i| hull.points()[i].clone()).collect();
        let facets = hull.facet_infos();
        let volume = hull.volume();
        if volume <= 0.0 {
            return Err(Error::DegenerateBody("zero volume".into()));
        }
        Ok(Polytope { hull, vertices, facets, volume })
    }

    pub fn dim(&self) -> usize {
        self.hull.dim()
    }

    pub fn vertices(&self) -> &[Vec<f64>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[FacetInfo] {
        &self.facets
    }

    pub fn hull(&self) -> &HullN {
        &self.hull
    }

    pub fn volume(&self) -> f64 {
        self.volume
    }

    pub fn centroid_of_vertices(&self) -> Vec<f64> {
        let k = self.vertices.len() as f64;
        (0..self.dim()).map(|j| self.vertices.iter().map(|v| v[j]).sum::<f64>() / k).collect()
    }
}

/// Ellipsoid `{c + Q diag(a) y : |y| <= 1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Ellipsoid {
    pub center: Vec<f64>,
    pub semiaxes: Vec<f64>,
    /// Orthogonal matrix, rows are the axis directions.
    pub orientation: Vec<Vec<f64>>,
}

impl Ellipsoid {
    pub fn new(center: Vec<f64>, semiaxes: Vec<f64>, orientation: Vec<Vec<f64>>) -> Result<Ellipsoid> {
        let n = semiaxes.len();
        if n == 0 || n > MAX_DIM || center.len() != n || orientation.len() != n {
            return Err(Error::DegenerateBody(format!("ellipsoid dimension {n}")));
        }
        if semiaxes.iter().any(|a| !(*a > 0.0 && a.is_finite())) {
            return Err(Error::DegenerateBody("semiaxes must be positive".into()));
        }
        for i in 0..n {
            if orientation[i].len() != n {
                return Err(Error::DegenerateBody("orientation shape".into()));
            }
            for j in 0..n {
                let want = if i == j { 1.0 } else { 0.0 };
                if (dot(&orientation[i], &orientation[j]) - want).abs() > 1e-12 {
                    return Err(Error::DegenerateBody("orientation is not orthogonal".into()));
                }
            }
        }
        Ok(Ellipsoid { center, semiaxes, orientation })
    }

    pub fn axis_aligned(semiaxes: Vec<f64>) -> Result<Ellipsoid> {
        let n = semiaxes.len();
        let id = (0..n).map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect();
        Ellipsoid::new(vec![0.0; n], semiaxes, id)
    }

    /// `u^T M u` and `u^T M^{-1} u` for the shape matrix `M = Q^T diag(a^2) Q`.
    fn quadratic_forms(&self, u: &[f64]) -> (f64, f64) {
        let mut m = 0.0;
        let mut minv = 0.0;
        for (row, a) in self.orientation.iter().zip(&self.semiaxes) {
            let c = dot(row, u);
            m += a * a * c * c;
            minv += c * c / (a * a);
        }
        (m, minv)
    }

    pub fn is_ball(&self) -> bool {
        let a0 = self.semiaxes[0];
        self.semiaxes.iter().all(|a| (a - a0).abs() <= 1e-12 * a0)
    }

    /// Point on the boundary with the given unit "parameter" direction.
    pub fn boundary_point(&self, y: &[f64]) -> Vec<f64> {
        let n = self.center.len();
        (0..n)
            .map(|k| {
                self.center[k]
                    + (0..n).map(|i| self.orientation[i][k] * self.semiaxes[i] * y[i]).sum::<f64>()
            })
            .collect()
    }
}

/// Convex body in `R^n`.
#[derive(Clone, Debug)]
pub enum BodyN {
    Polytope(Polytope),
    Ellipsoid(Ellipsoid),
    Ball { dim: usize, radius: f64, center: Vec<f64> },
}

impl BodyN {
    pub fn ball(dim: usize, radius: f64) -> Result<BodyN> {
        if dim == 0 || dim > MAX_DIM || !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::DegenerateBody(format!("ball dim {dim} radius {radius}")));
        }
        Ok(BodyN::Ball { dim, radius, center: vec![0.0; dim] })
    }

    pub fn polytope(points: &[Vec<f64>]) -> Result<BodyN> {
        Ok(BodyN::Polytope(Polytope::new(points)?))
    }

    pub fn dim(&self) -> usize {
        match self {
            BodyN::Polytope(p) => p.dim(),
            BodyN::Ellipsoid(e) => e.center.len(),
            BodyN::Ball { dim, .. } => *dim,
        }
    }

    /// The same body moved by `t`.
    pub fn translated(&self, t: &[f64]) -> Result<BodyN> {
        let add = |c: &[f64]| c.iter().zip(t).map(|(a, b)| a + b).collect::<Vec<f64>>();
        Ok(match self {
            BodyN::Polytope(p) => BodyN::polytope(&p.vertices().iter().map(|v| add(v)).collect::<Vec<_>>())?,
            BodyN::Ellipsoid(e) => BodyN::Ellipsoid(Ellipsoid { center: add(&e.center), ..e.clone() }),
            BodyN::Ball { dim, radius, center } => BodyN::Ball { dim: *dim, radius: *radius, center: add(center) },
        })
    }
}

fn check_unit(u: &[f64], n: usize) {
    debug_assert_eq!(u.len(), n);
    debug_assert!((norm(u) - 1.0).abs() <= 1e-9, "direction must be a unit vector");
}

pub fn volume_nd(b: &BodyN) -> f64 {
    match b {
        BodyN::Polytope(p) => p.volume(),
        BodyN::Ellipsoid(e) => v_ball(e.semiaxes.len()) * e.semiaxes.iter().product::<f64>(),
        BodyN::Ball { dim, radius, .. } => v_ball(*dim) * radius.powi(*dim as i32),
    }
}

/// Support values in directions `u` and `-u`, and the width.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SupportWidth {
    pub h_plus: f64,
    pub h_minus: f64,
    pub width: f64,
}

pub fn support_width_nd(b: &BodyN, u: &[f64]) -> SupportWidth {
    check_unit(u, b.dim());
    let (h_plus, h_minus) = match b {
        BodyN::Polytope(p) => {
            let vals = p.vertices().iter().map(|v| dot(v, u));
            let (lo, hi) = vals.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)));
            (hi, -lo)
        }
        BodyN::Ellipsoid(e) => {
            let c = dot(&e.center, u);
            let r = e.quadratic_forms(u).0.sqrt();
            (c + r, r - c)
        }
        BodyN::Ball { radius, center, .. } => {
            let c = dot(center, u);
            (c + radius, radius - c)
        }
    };
    SupportWidth { h_plus, h_minus, width: h_plus + h_minus }
}

/// Length of the longest chord parallel to `u`.
///
/// For polytopes: maximize `t` subject to `sum mu_j v_j - sum lambda_i v_i = t u`
/// with `lambda`, `mu` convex weights.
pub fn chord_nd(b: &BodyN, u: &[f64]) -> Result<f64> {
    check_unit(u, b.dim());
    match b {
        BodyN::Polytope(p) => polytope_chord(p.vertices(), u),
        BodyN::Ellipsoid(e) => Ok(2.0 / e.quadratic_forms(u).1.sqrt()),
        BodyN::Ball { radius, .. } => Ok(2.0 * radius),
    }
}

pub(crate) fn polytope_chord(vertices: &[Vec<f64>], u: &[f64]) -> Result<f64> {
    let n = u.len();
    let k = vertices.len();
    // columns: t, lambda_1..k, mu_1..k; t >= 0 suffices since 0 is in K - K
    let cols = 1 + 2 * k;
    let mut a = vec![vec![0.0; cols]; n + 2];
    let mut b = vec![0.0; n + 2];
    for j in 0..k {
        a[0][1 + j] = 1.0;
        a[1][1 + k + j] = 1.0;
    }
    b[0] = 1.0;
    b[1] = 1.0;
    for d in 0..n {
        a[2 + d][0] = -u[d];
        for (j, v) in vertices.iter().enumerate() {
            a[2 + d][1 + j] = -v[d];
            a[2 + d][1 + k + j] = v[d];
        }
    }
    let mut c = vec![0.0; cols];
    c[0] = 1.0;
    let (value, _) = lp::maximize(&c, &a, &b)?;
    Ok(value)
}

/// `(n-1)`-volume of the orthogonal projection onto `u⊥`.
pub fn brightness_nd(b: &BodyN, u: &[f64]) -> f64 {
    check_unit(u, b.dim());
    match b {
        BodyN::Polytope(p) => 0.5 * p.facets().iter().map(|f| dot(&f.normal, u).abs() * f.measure).sum::<f64>(),
        BodyN::Ellipsoid(e) => {
            let n = e.semiaxes.len();
            let det_sqrt: f64 = e.semiaxes.iter().product();
            v_ball(n - 1) * det_sqrt * e.quadratic_forms(u).1.sqrt()
        }
        BodyN::Ball { dim, radius, .. } => v_ball(dim - 1) * radius.powi(*dim as i32 - 1),
    }
}

/// Radial function of the body about `origin` in direction `u`, or `None`
/// when `origin` is not interior.
pub fn radial_nd(b: &BodyN, origin: &[f64], u: &[f64]) -> Option<f64> {
    match b {
        BodyN::Polytope(p) => {
            let mut best = f64::INFINITY;
            for f in p.facets() {
                let nu = dot(&f.normal, u);
                let slack = f.normal.iter().zip(origin).map(|(n, o)| n * o).sum::<f64>();
                let h = f.offset;
                if h - slack <= 0.0 {
                    return None;
                }
                if nu > 0.0 {
                    best = best.min((h - slack) / nu);
                }
            }
            Some(best)
        }
        BodyN::Ellipsoid(e) => {
            let d: Vec<f64> = origin.iter().zip(&e.center).map(|(o, c)| o - c).collect();
            // solve |D^{-1} Q (d + t u)| = 1 for t > 0
            let comp = |x: &[f64]| -> Vec<f64> {
                e.orientation.iter().zip(&e.semiaxes).map(|(r, a)| dot(r, x) / a).collect()
            };
            let (pd, pu) = (comp(&d), comp(u));
            let (a, bq, c) = (dot(&pu, &pu), 2.0 * dot(&pd, &pu), dot(&pd, &pd) - 1.0);
            if c >= 0.0 {
                return None;
            }
            Some((-bq + (bq * bq - 4.0 * a * c).sqrt()) / (2.0 * a))
        }
        BodyN::Ball { radius, center, .. } => {
            let d: Vec<f64> = origin.iter().zip(center).map(|(o, c)| o - c).collect();
            let (bq, c) = (2.0 * dot(&d, u), dot(&d, &d) - radius * radius);
            if c >= 0.0 {
                return None;
            }
            Some((-bq + (bq * bq - 4.0 * c).sqrt()) / 2.0)
        }
    }
}
