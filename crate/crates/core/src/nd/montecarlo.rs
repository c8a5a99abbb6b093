//! Monte-Carlo estimates that do not share code paths with the closed forms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::body::{support_width_nd, BodyN};
use super::linalg::dot;
use super::sphere::tangent_basis;

/// Estimate and its standard error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub std_err: f64,
}

impl Estimate {
    pub fn agrees(&self, exact: f64, sigmas: f64) -> bool {
        (self.value - exact).abs() <= sigmas * self.std_err.max(1e-15)
    }
}

/// Whether the line `{y + t u}` meets the body.
pub fn line_hits(b: &BodyN, y: &[f64], u: &[f64]) -> bool {
    match b {
        BodyN::Polytope(p) => {
            // the facet inequalities cut the line to an interval
            let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
            for f in p.facets() {
                let nu = dot(&f.normal, u);
                let slack = f.offset - dot(&f.normal, y);
                if nu.abs() < 1e-15 {
                    if slack < 0.0 {
                        return false;
                    }
                } else if nu > 0.0 {
                    hi = hi.min(slack / nu);
                } else {
                    lo = lo.max(slack / nu);
                }
            }
            lo <= hi
        }
        BodyN::Ellipsoid(e) => {
            let d: Vec<f64> = y.iter().zip(&e.center).map(|(a, c)| a - c).collect();
            let comp = |x: &[f64]| -> Vec<f64> {
                e.orientation.iter().zip(&e.semiaxes).map(|(r, a)| dot(r, x) / a).collect()
            };
            let (pd, pu) = (comp(&d), comp(u));
            let (a, bq, c) = (dot(&pu, &pu), 2.0 * dot(&pd, &pu), dot(&pd, &pd) - 1.0);
            bq * bq - 4.0 * a * c >= 0.0
        }
        BodyN::Ball { radius, center, .. } => {
            let d: Vec<f64> = y.iter().zip(center).map(|(a, c)| a - c).collect();
            let along = dot(&d, u);
            dot(&d, &d) - along * along <= radius * radius
        }
    }
}

/// Shadow `(n-1)`-volume perpendicular to `u` by hit-or-miss sampling over
/// the bounding box of the shadow.
pub fn shadow_area_mc(b: &BodyN, u: &[f64], samples: usize, seed: u64) -> Estimate {
    let basis = tangent_basis(u);
    let ranges: Vec<(f64, f64)> = basis
        .iter()
        .map(|e| {
            let s = support_width_nd(b, e);
            (-s.h_minus, s.h_plus)
        })
        .collect();
    let box_vol: f64 = ranges.iter().map(|(a, c)| c - a).product();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = u.len();
    let mut hits = 0usize;
    for _ in 0..samples {
        let mut y = vec![0.0; n];
        for (e, (a, c)) in basis.iter().zip(&ranges) {
            let s = rng.gen_range(*a..*c);
            y.iter_mut().zip(e).for_each(|(x, ek)| *x += s * ek);
        }
        if line_hits(b, &y, u) {
            hits += 1;
        }
    }
    let p = hits as f64 / samples as f64;
    Estimate { value: box_vol * p, std_err: box_vol * (p * (1.0 - p) / samples as f64).sqrt() }
}
