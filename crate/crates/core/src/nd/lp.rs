//! Dense two-phase simplex for the small equality-form LPs of the chord
//! oracle. Bland's rule keeps degenerate pivots from cycling.

use crate::error::{Error, Result};

const EPS: f64 = 1e-11;
const MAX_PIVOTS: usize = 100_000;

struct Tableau {
    rows: Vec<Vec<f64>>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c];
        self.rows[r].iter_mut().for_each(|x| *x /= p);
        let pr = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                let f = row[c];
                if f != 0.0 {
                    row.iter_mut().zip(&pr).for_each(|(x, y)| *x -= f * y);
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes `obj . x` over columns `< usable` from the current basis;
    /// returns the optimal objective.
    fn run(&mut self, obj: &[f64], usable: usize) -> Result<f64> {
        let width = self.rows[0].len();
        let rhs = width - 1;
        for _ in 0..MAX_PIVOTS {
            // reduced costs c_j - c_B B^{-1} A_j
            let reduced = |j: usize| obj[j] - self.basis.iter().zip(&self.rows).map(|(&bi, r)| obj[bi] * r[j]).sum::<f64>();
            let Some(enter) = (0..usable).find(|&j| !self.basis.contains(&j) && reduced(j) > EPS) else {
                return Ok(self.basis.iter().zip(&self.rows).map(|(&bi, r)| obj[bi] * r[rhs]).sum());
            };
            let mut leave: Option<(usize, f64)> = None;
            for (i, r) in self.rows.iter().enumerate() {
                if r[enter] > EPS {
                    let ratio = r[rhs] / r[enter];
                    let better = match leave {
                        None => true,
                        Some((l, best)) => ratio < best - EPS || (ratio <= best + EPS && self.basis[i] < self.basis[l]),
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else {
                return Err(Error::LpFailure("unbounded".into()));
            };
            self.pivot(r, enter);
        }
        Err(Error::LpFailure("pivot limit".into()))
    }
}

/// Maximizes `c . x` subject to `A x = b`, `x >= 0`. Returns the value and
/// an optimal `x`.
pub fn maximize(c: &[f64], a: &[Vec<f64>], b: &[f64]) -> Result<(f64, Vec<f64>)> {
    let m = a.len();
    let n = c.len();
    // artificial columns n..n+m, right-hand side last
    let mut rows: Vec<Vec<f64>> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (row, &bi))| {
            let s = if bi < 0.0 { -1.0 } else { 1.0 };
            let mut r: Vec<f64> = row.iter().map(|x| s * x).collect();
            r.extend((0..m).map(|j| if j == i { 1.0 } else { 0.0 }));
            r.push(s * bi);
            r
        })
        .collect();
    rows.iter_mut().for_each(|r| r.shrink_to_fit());
    let mut t = Tableau { rows, basis: (n..n + m).collect() };
    let mut phase1 = vec![0.0; n + m];
    phase1[n..].iter_mut().for_each(|x| *x = -1.0);
    let infeas = t.run(&phase1, n + m)?;
    if infeas < -1e-9 {
        return Err(Error::LpFailure("infeasible".into()));
    }
    // drive remaining (zero-level) artificials out of the basis
    for r in 0..m {
        if t.basis[r] >= n {
            if let Some(c) = (0..n).find(|&j| t.rows[r][j].abs() > EPS && !t.basis.contains(&j)) {
                t.pivot(r, c);
            }
        }
    }
    let mut obj = c.to_vec();
    obj.extend(std::iter::repeat(0.0).take(m));
    // artificials still basic sit at zero on redundant rows; keep them out of
    // the entering set
    let value = t.run(&obj, n)?;
    let mut x = vec![0.0; n];
    for (r, &bi) in t.basis.iter().enumerate() {
        if bi < n {
            x[bi] = t.rows[r][n + m];
        }
    }
    Ok((value, x))
}
