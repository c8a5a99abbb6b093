//! Small dense determinants with an exact fallback for signs.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::rational::Rational;

/// Largest supported dimension.
pub const MAX_DIM: usize = 6;

const REL_EPS: f64 = 1e-12;

/// Determinant by Gaussian elimination with partial pivoting.
pub fn det(rows: &[Vec<f64>]) -> f64 {
    let n = rows.len();
    let mut a = [[0.0f64; MAX_DIM]; MAX_DIM];
    for (i, r) in rows.iter().enumerate() {
        a[i][..n].copy_from_slice(&r[..n]);
    }
    let mut d = 1.0;
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs())).unwrap();
        if a[p][c] == 0.0 {
            return 0.0;
        }
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= a[c][c];
        for i in c + 1..n {
            let f = a[i][c] / a[c][c];
            for k in c..n {
                a[i][k] -= f * a[c][k];
            }
        }
    }
    d
}

fn exact_det(rows: Vec<Vec<Rational>>) -> Rational {
    let n = rows.len();
    let mut a = rows;
    let mut d = Rational::from_integer(1.into());
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        for i in c + 1..n {
            let f = &a[i][c] / &a[c][c];
            for k in c..n {
                let t = &f * &a[c][k];
                a[i][k] -= t;
            }
        }
    }
    d
}

fn exact(x: f64) -> Rational {
    Rational::from_float(x).expect("finite coordinate")
}

/// Sign of `det[p_i - q]`, exact for the given float coordinates: the float
/// determinant is trusted only when it clears a relative error filter.
pub fn orient(pts: &[&[f64]], q: &[f64]) -> Ordering {
    let rows: Vec<Vec<f64>> = pts.iter().map(|p| p.iter().zip(q).map(|(a, b)| a - b).collect()).collect();
    let d = det(&rows);
    let bound: f64 = rows.iter().map(|r| r.iter().map(|x| x * x).sum::<f64>().sqrt()).product();
    if d.abs() > REL_EPS * bound {
        return d.partial_cmp(&0.0).unwrap();
    }
    let exact_rows: Vec<Vec<Rational>> =
        pts.iter().map(|p| p.iter().zip(q).map(|(a, b)| exact(*a) - exact(*b)).collect()).collect();
    let e = exact_det(exact_rows);
    if e.is_positive() {
        Ordering::Greater
    } else if e.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

/// Generalized cross product of `n - 1` vectors in `R^n`: orthogonal to all
/// of them, with length equal to the volume of the parallelotope they span.
pub fn cross(vs: &[Vec<f64>]) -> Vec<f64> {
    let n = vs.len() + 1;
    (0..n)
        .map(|k| {
            let minor: Vec<Vec<f64>> = vs
                .iter()
                .map(|v| v.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, x)| *x).collect())
                .collect();
            let s = if (k + n - 1) % 2 == 0 { 1.0 } else { -1.0 };
            s * if minor.is_empty() { 1.0 } else { det(&minor) }
        })
        .collect()
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn normalize(a: &[f64]) -> Vec<f64> {
    let l = norm(a);
    a.iter().map(|x| x / l).collect()
}

pub fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}
