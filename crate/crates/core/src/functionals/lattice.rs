//! Exact `c_tr` and `c_0` for polygons with integer vertices.
//!
//! Same algorithms as the rational path, but with machine integers for every
//! quantity that fits (coordinates below 2^58 in magnitude keep all
//! cross products inside `i128`) and big integers only for the final
//! comparisons. No fraction is normalized until the answer is built. The
//! optimizer calls these thousands of times per restart.

use std::cmp::Ordering;

use num_bigint::BigInt;

use crate::rational::Rational;

pub type Pt = (i128, i128);

#[inline]
fn cross(a: Pt, b: Pt) -> i128 {
    a.0 * b.1 - a.1 * b.0
}

#[inline]
fn sub(a: Pt, b: Pt) -> Pt {
    (a.0 - b.0, a.1 - b.1)
}

fn half(v: Pt) -> u8 {
    if v.1 > 0 || (v.1 == 0 && v.0 > 0) {
        0
    } else {
        1
    }
}

fn angle_cmp(a: Pt, b: Pt) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&cross(a, b)))
}

/// Strictly convex counterclockwise hull (collinear points dropped).
pub fn hull(points: &[Pt]) -> Vec<Pt> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut h: Vec<Pt> = Vec::with_capacity(pts.len() + 1);
    for pass in 0..2 {
        let start = h.len();
        let iter: Box<dyn Iterator<Item = &Pt>> = if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for &p in iter {
            while h.len() >= start + 2 && cross(sub(h[h.len() - 1], h[h.len() - 2]), sub(p, h[h.len() - 2])) <= 0 {
                h.pop();
            }
            h.push(p);
        }
        h.pop();
    }
    h
}

pub fn area2(p: &[Pt]) -> i128 {
    let n = p.len();
    (0..n).map(|i| cross(p[i], p[(i + 1) % n])).sum()
}

/// `c_0` of a strictly convex counterclockwise integer polygon.
pub fn c_0(p: &[Pt]) -> Rational {
    let a = area2(p);
    let mut buf = Vec::with_capacity(2 * p.len());
    let best = p
        .iter()
        .map(|&z| {
            buf.clear();
            buf.extend_from_slice(p);
            buf.extend(p.iter().map(|&q| (2 * z.0 - q.0, 2 * z.1 - q.1)));
            area2(&hull(&buf))
        })
        .max()
        .expect("nonempty polygon");
    Rational::new(best.into(), a.into())
}

/// Vertices of `P + (-P)` in counterclockwise order.
pub fn difference_body(p: &[Pt]) -> Vec<Pt> {
    let n = p.len();
    let mut edges: Vec<Pt> = (0..n).flat_map(|i| {
        let e = sub(p[(i + 1) % n], p[i]);
        [e, (-e.0, -e.1)]
    }).collect();
    edges.sort_by(|a, b| angle_cmp(*a, *b));
    let mut merged: Vec<Pt> = Vec::with_capacity(edges.len());
    for e in edges {
        match merged.last_mut() {
            Some(last) if angle_cmp(*last, e) == Ordering::Equal => {
                last.0 += e.0;
                last.1 += e.1;
            }
            _ => merged.push(e),
        }
    }
    let low = *p.iter().min_by_key(|v| (v.1, v.0)).unwrap();
    let high = *p.iter().max_by_key(|v| (v.1, v.0)).unwrap();
    let mut cur = sub(low, high);
    merged
        .iter()
        .map(|e| {
            let v = cur;
            cur = (cur.0 + e.0, cur.1 + e.1);
            v
        })
        .collect()
}

/// Exact `c_tr` of a strictly convex counterclockwise integer polygon.
pub fn c_tr(p: &[Pt]) -> Rational {
    let d = difference_body(p);
    let k = d.len();
    let mut best: Option<(BigInt, BigInt)> = None;
    let candidates = d.iter().copied().chain((0..k).map(|i| sub(d[(i + 1) % k], d[i])));
    for v in candidates {
        // the ray along v crosses the edge [d_i, d_{i+1}] whose cone holds v
        let i = (0..k)
            .find(|&i| cross(d[i], v) >= 0 && cross(v, d[(i + 1) % k]) > 0)
            .expect("origin is interior to the difference body");
        let (a, b) = (d[i], d[(i + 1) % k]);
        let e = sub(b, a);
        let (num, den) = (cross(e, a), cross(e, v));
        let r = (-v.1, v.0);
        let dots = p.iter().map(|q| r.0 * q.0 + r.1 * q.1);
        let (lo, hi) = dots.fold((i128::MAX, i128::MIN), |(lo, hi), x| (lo.min(x), hi.max(x)));
        let f = (BigInt::from(num) * BigInt::from(hi - lo), BigInt::from(den));
        if best.as_ref().map_or(true, |(bn, bd)| &f.0 * bd > bn * &f.1) {
            best = Some(f);
        }
    }
    let (n, dd) = best.expect("nonempty polygon");
    let a = BigInt::from(area2(p));
    // c_tr = 1 + f / area = 1 + 2 f / area2
    Rational::new(&dd * &a + 2 * n, dd * a)
}
