//! Incremental convex hull in `R^n` with simplicial facets.

use std::cmp::Ordering;
use std::collections::HashMap;

use super::linalg::{cross, det, dot, factorial, norm, orient, sub, MAX_DIM};
use crate::error::{Error, Result};

/// Convex hull of a finite point set; facets are `(n-1)`-simplices whose
/// vertex order makes the interior point lie on the negative side.
#[derive(Clone, Debug)]
pub struct HullN {
    dim: usize,
    points: Vec<Vec<f64>>,
    facets: Vec<Vec<usize>>,
    interior: Vec<f64>,
}

/// Facet plane `normal . x = offset` (outer unit normal) and the facet's
/// `(n-1)`-measure.
#[derive(Clone, Debug, PartialEq)]
pub struct FacetInfo {
    pub normal: Vec<f64>,
    pub offset: f64,
    pub measure: f64,
}

fn facet_pts<'a>(points: &'a [Vec<f64>], f: &[usize]) -> Vec<&'a [f64]> {
    f.iter().map(|&i| points[i].as_slice()).collect()
}

fn ridge_key(f: &[usize], skip: usize) -> Vec<usize> {
    let mut r: Vec<usize> = f.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, v)| *v).collect();
    r.sort_unstable();
    r
}

/// Indices of `n + 1` affinely independent points, chosen greedily by
/// distance to the affine hull of the previous picks.
fn initial_simplex(points: &[Vec<f64>], dim: usize) -> Result<Vec<usize>> {
    let first = (0..points.len())
        .min_by(|&a, &b| points[a].partial_cmp(&points[b]).unwrap_or(Ordering::Equal))
        .ok_or_else(|| Error::DegenerateBody("no points".into()))?;
    let mut picks = vec![first];
    let mut basis: Vec<Vec<f64>> = Vec::new();
    let scale = points.iter().map(|p| norm(&sub(p, &points[first]))).fold(0.0, f64::max);
    while picks.len() <= dim {
        let residual = |p: &Vec<f64>| {
            let mut r = sub(p, &points[first]);
            for b in &basis {
                let c = dot(&r, b);
                for (x, y) in r.iter_mut().zip(b) {
                    *x -= c * y;
                }
            }
            r
        };
        let (best, dist) = (0..points.len())
            .map(|i| (i, norm(&residual(&points[i]))))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        if dist <= 1e-12 * scale.max(f64::MIN_POSITIVE) {
            return Err(Error::DegenerateBody(format!("affine rank {} < {dim}", picks.len() - 1)));
        }
        let r = residual(&points[best]);
        basis.push(r.iter().map(|x| x / dist).collect());
        picks.push(best);
    }
    let (last, head) = picks.split_last().unwrap();
    if orient(&facet_pts(points, head), &points[*last]) == Ordering::Equal {
        return Err(Error::DegenerateBody("flat initial simplex".into()));
    }
    Ok(picks)
}

impl HullN {
    pub fn new(points: &[Vec<f64>]) -> Result<HullN> {
        let dim = points.first().map_or(0, |p| p.len());
        if !(1..=MAX_DIM).contains(&dim) || points.iter().any(|p| p.len() != dim) {
            return Err(Error::DegenerateBody(format!("dimension {dim}")));
        }
        if points.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::DegenerateBody("non-finite coordinate".into()));
        }
        let points = points.to_vec();
        let simplex = initial_simplex(&points, dim)?;
        let interior: Vec<f64> = (0..dim)
            .map(|k| simplex.iter().map(|&i| points[i][k]).sum::<f64>() / (dim + 1) as f64)
            .collect();
        let mut hull = HullN { dim, points, facets: Vec::new(), interior };
        let mut alive: Vec<bool> = Vec::new();
        let mut ridges: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for skip in 0..=dim {
            let f: Vec<usize> = simplex.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, v)| *v).collect();
            hull.push_facet(f, &mut alive, &mut ridges);
        }
        let mut order: Vec<usize> = (0..hull.points.len()).filter(|i| !simplex.contains(i)).collect();
        // far points first keeps the intermediate hulls small
        let c = hull.interior.clone();
        order.sort_by(|&a, &b| norm(&sub(&hull.points[b], &c)).total_cmp(&norm(&sub(&hull.points[a], &c))));
        for p in order {
            hull.insert(p, &mut alive, &mut ridges);
        }
        hull.facets = hull.facets.iter().zip(&alive).filter(|(_, a)| **a).map(|(f, _)| f.clone()).collect();
        Ok(hull)
    }

    fn push_facet(&mut self, mut f: Vec<usize>, alive: &mut Vec<bool>, ridges: &mut HashMap<Vec<usize>, Vec<usize>>) {
        if orient(&facet_pts(&self.points, &f), &self.interior) == Ordering::Greater {
            f.swap(0, 1);
        }
        let id = self.facets.len();
        for skip in 0..f.len() {
            ridges.entry(ridge_key(&f, skip)).or_default().push(id);
        }
        self.facets.push(f);
        alive.push(true);
    }

    fn insert(&mut self, p: usize, alive: &mut Vec<bool>, ridges: &mut HashMap<Vec<usize>, Vec<usize>>) {
        let q = self.points[p].clone();
        let visible: Vec<usize> = (0..self.facets.len())
            .filter(|&i| alive[i] && orient(&facet_pts(&self.points, &self.facets[i]), &q) == Ordering::Greater)
            .collect();
        if visible.is_empty() {
            return;
        }
        let mut is_visible = vec![false; self.facets.len()];
        for &v in &visible {
            is_visible[v] = true;
        }
        let mut horizon = Vec::new();
        for &v in &visible {
            for skip in 0..self.dim {
                let key = ridge_key(&self.facets[v], skip);
                let across = ridges[&key].iter().copied().find(|&g| g != v && alive[g]);
                if let Some(g) = across {
                    if !is_visible[g] {
                        horizon.push(key);
                    }
                }
            }
        }
        for &v in &visible {
            alive[v] = false;
            for skip in 0..self.dim {
                let key = ridge_key(&self.facets[v], skip);
                if let Some(list) = ridges.get_mut(&key) {
                    list.retain(|&g| g != v);
                }
            }
        }
        for mut r in horizon {
            r.push(p);
            self.push_facet(r, alive, ridges);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Indices of points that are vertices of some facet.
    pub fn vertex_indices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.facets.iter().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn interior_point(&self) -> &[f64] {
        &self.interior
    }

    /// Sum of the cones over the facets from the interior point.
    pub fn volume(&self) -> f64 {
        let nf = factorial(self.dim);
        self.facets
            .iter()
            .map(|f| {
                let rows: Vec<Vec<f64>> = f.iter().map(|&i| sub(&self.points[i], &self.interior)).collect();
                -det(&rows) / nf
            })
            .sum()
    }

    pub fn facet_info(&self, f: &[usize]) -> FacetInfo {
        let base = &self.points[f[0]];
        let edges: Vec<Vec<f64>> = f[1..].iter().map(|&i| sub(&self.points[i], base)).collect();
        let mut c = cross(&edges);
        let len = norm(&c);
        if dot(&c, &sub(base, &self.interior)) < 0.0 {
            c.iter_mut().for_each(|x| *x = -*x);
        }
        let normal: Vec<f64> = c.iter().map(|x| x / len).collect();
        FacetInfo {
            offset: dot(&normal, base),
            normal,
            measure: len / factorial(self.dim - 1),
        }
    }

    pub fn facet_infos(&self) -> Vec<FacetInfo> {
        self.facets.iter().map(|f| self.facet_info(f)).collect()
    }
}

/// Volume of the convex hull of `points`.
pub fn hull_volume(points: &[Vec<f64>]) -> Result<f64> {
    Ok(HullN::new(points)?.volume())
}
