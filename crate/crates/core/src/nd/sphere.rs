//! Direction sampling on the unit sphere and local refinement.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::linalg::{dot, normalize};

/// Knobs for maximizing a function of a unit direction.
#[derive(Clone, Debug, PartialEq)]
pub struct OptOptions {
    /// Coarse sample count; `None` picks [`default_samples`].
    pub coarse_samples: Option<usize>,
    /// Number of best coarse candidates refined locally.
    pub candidates: usize,
    /// Iteration cap for each local refinement.
    pub refine_iters: usize,
    /// Refinement stops once the angular step falls below this.
    pub tol: f64,
    pub seed: u64,
}

impl Default for OptOptions {
    fn default() -> Self {
        OptOptions { coarse_samples: None, candidates: 16, refine_iters: 400, tol: 1e-9, seed: 0 }
    }
}

/// Maximizer of a direction-dependent objective.
#[derive(Clone, Debug, PartialEq)]
pub struct DirOptResult {
    pub value: f64,
    pub direction: Vec<f64>,
    pub samples_used: usize,
    pub refined: bool,
}

pub fn default_samples(n: usize) -> usize {
    match n {
        0..=2 => 720,
        3 => 2000,
        _ => 2000 << (n - 3),
    }
}

/// `k` well-spread unit vectors in `R^n`: equally spaced angles for `n = 2`,
/// a Fibonacci spiral for `n = 3`, and a randomly shifted Kronecker lattice
/// pushed through Box–Muller for larger `n`.
pub fn sphere_directions(n: usize, k: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match n {
        1 => vec![vec![1.0], vec![-1.0]],
        2 => {
            let shift: f64 = rng.gen();
            (0..k)
                .map(|i| {
                    let a = 2.0 * PI * (i as f64 + shift) / k as f64;
                    vec![a.cos(), a.sin()]
                })
                .collect()
        }
        3 => {
            let golden = PI * (3.0 - 5f64.sqrt());
            (0..k)
                .map(|i| {
                    let z = 1.0 - (2.0 * i as f64 + 1.0) / k as f64;
                    let r = (1.0 - z * z).sqrt();
                    let a = golden * i as f64;
                    vec![r * a.cos(), r * a.sin(), z]
                })
                .collect()
        }
        _ => {
            let d = n + n % 2;
            // generalized golden ratio: the root of x^{d+1} = x + 1
            let mut g = 2.0f64;
            for _ in 0..60 {
                g = (1.0 + g).powf(1.0 / (d as f64 + 1.0));
            }
            let alpha: Vec<f64> = (1..=d).map(|j| (1.0 / g.powi(j as i32)).fract()).collect();
            let shift: Vec<f64> = (0..d).map(|_| rng.gen()).collect();
            (0..k)
                .map(|i| {
                    let x: Vec<f64> = (0..d).map(|j| (shift[j] + alpha[j] * (i + 1) as f64).fract()).collect();
                    let mut z = Vec::with_capacity(d);
                    for pair in x.chunks(2) {
                        let r = (-2.0 * (1.0 - pair[0]).ln()).sqrt();
                        z.push(r * (2.0 * PI * pair[1]).cos());
                        z.push(r * (2.0 * PI * pair[1]).sin());
                    }
                    z.truncate(n);
                    normalize(&z)
                })
                .collect()
        }
    }
}

/// Orthonormal basis of the tangent space at `u`.
pub fn tangent_basis(u: &[f64]) -> Vec<Vec<f64>> {
    let n = u.len();
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(n - 1);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| u[a].abs().total_cmp(&u[b].abs()));
    for &k in &order {
        if basis.len() == n - 1 {
            break;
        }
        let mut v = vec![0.0; n];
        v[k] = 1.0;
        for b in std::iter::once(u).chain(basis.iter().map(|b| b.as_slice())) {
            let c = dot(&v, b);
            v.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
        }
        let l = dot(&v, &v).sqrt();
        if l > 1e-8 {
            basis.push(v.iter().map(|x| x / l).collect());
        }
    }
    basis
}

fn better(a: &(f64, Vec<f64>), b: &(f64, Vec<f64>)) -> bool {
    a.0 > b.0 || (a.0 == b.0 && a.1.partial_cmp(&b.1) == Some(std::cmp::Ordering::Less))
}

/// Pattern search on the sphere from `u`: axis and diagonal moves in the
/// tangent plane, step halved when nothing improves.
fn refine<F: Fn(&[f64]) -> f64>(f: &F, u: Vec<f64>, fu: f64, step: f64, opts: &OptOptions) -> (f64, Vec<f64>, usize) {
    let (mut u, mut fu, mut step) = (u, fu, step);
    let mut evals = 0;
    for _ in 0..opts.refine_iters {
        if step < opts.tol {
            break;
        }
        let basis = tangent_basis(&u);
        let mut moves: Vec<Vec<f64>> = Vec::new();
        for (i, b) in basis.iter().enumerate() {
            moves.push(b.clone());
            moves.push(b.iter().map(|x| -x).collect());
            for c in &basis[i + 1..] {
                for s in [1.0, -1.0] {
                    moves.push(b.iter().zip(c).map(|(x, y)| (x + s * y) / 2f64.sqrt()).collect());
                    moves.push(b.iter().zip(c).map(|(x, y)| -(x + s * y) / 2f64.sqrt()).collect());
                }
            }
        }
        let mut best = (fu, u.clone());
        for m in moves {
            let cand = normalize(&u.iter().zip(&m).map(|(x, d)| x + step * d).collect::<Vec<_>>());
            let v = f(&cand);
            evals += 1;
            if v > best.0 {
                best = (v, cand);
            }
        }
        if best.0 > fu {
            fu = best.0;
            u = best.1;
        } else {
            step *= 0.5;
        }
    }
    (fu, u, evals)
}

/// Coarse sampling followed by refinement of the best candidates. NaN values
/// count as `-inf`; ties go to the lexicographically smaller direction.
pub fn maximize_on_sphere<F>(n: usize, f: F, opts: &OptOptions) -> DirOptResult
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    let k = opts.coarse_samples.unwrap_or_else(|| default_samples(n)).max(1);
    let g = |u: &[f64]| {
        let v = f(u);
        if v.is_nan() {
            f64::NEG_INFINITY
        } else {
            v
        }
    };
    let dirs = sphere_directions(n, k, opts.seed);
    let mut scored: Vec<(f64, Vec<f64>)> = dirs.into_par_iter().map(|u| (g(&u), u)).collect();
    scored.sort_by(|a, b| b.0.total_cmp(&a.0).then_with(|| a.1.partial_cmp(&b.1).unwrap()));
    // spacing of k points on S^{n-1}, roughly
    let step = (n as f64 * PI.powi(2) / k as f64).powf(1.0 / (n as f64 - 1.0).max(1.0)).min(0.5);
    let top: Vec<(f64, Vec<f64>)> = scored.iter().take(opts.candidates).cloned().collect();
    let refined: Vec<(f64, Vec<f64>, usize)> =
        top.into_par_iter().map(|(v, u)| refine(&g, u, v, step, opts)).collect();
    let mut used = k;
    let mut best = scored[0].clone();
    let mut improved = false;
    for (v, u, e) in refined {
        used += e;
        let cand = (v, u);
        if better(&cand, &best) {
            improved = improved || cand.0 > scored[0].0;
            best = cand;
        }
    }
    DirOptResult { value: best.0, direction: best.1, samples_used: used, refined: improved }
}
