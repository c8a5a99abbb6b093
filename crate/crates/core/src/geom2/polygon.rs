use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use super::vec::{angle_cmp, angle_cmp_from, orient, Vec2};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Strictly convex polygon with exact rational vertices.
///
/// Vertices are stored counterclockwise, starting at the lexicographically
/// smallest vertex, with no duplicate or collinear vertices. Two polygons
/// describing the same point set therefore compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConvexPolygon {
    vertices: Vec<Vec2>,
}

impl ConvexPolygon {
    /// Validates a counterclockwise, strictly convex vertex cycle. The cycle may
    /// start anywhere; it is rotated to the canonical start.
    pub fn new(mut vertices: Vec<Vec2>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidPolygon(format!("{n} vertices")));
        }
        for i in 0..n {
            let (a, b, c) = (&vertices[i], &vertices[(i + 1) % n], &vertices[(i + 2) % n]);
            if orient(a, b, c) != Ordering::Greater {
                return Err(Error::InvalidPolygon(format!(
                    "vertices {i}..{} do not make a strict left turn",
                    i + 2
                )));
            }
        }
        // Left turns everywhere still admit multiply-wound cycles; the edge
        // directions must sweep the circle exactly once.
        let edges: Vec<Vec2> = (0..n).map(|i| &vertices[(i + 1) % n] - &vertices[i]).collect();
        let wraps = (0..n)
            .filter(|&i| angle_cmp(&edges[(i + 1) % n], &edges[i]) != Ordering::Greater)
            .count();
        if wraps != 1 {
            return Err(Error::InvalidPolygon("vertex cycle winds more than once".into()));
        }
        let start = (0..n).min_by(|&i, &j| vertices[i].cmp(&vertices[j])).unwrap();
        vertices.rotate_left(start);
        Ok(ConvexPolygon { vertices })
    }

    pub fn from_ints(pts: &[(i64, i64)]) -> Result<Self> {
        ConvexPolygon::new(pts.iter().map(|&(x, y)| Vec2::from_ints(x, y)).collect())
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertex(&self, i: usize) -> &Vec2 {
        &self.vertices[i % self.vertices.len()]
    }

    /// Edge vector from vertex `i` to vertex `i + 1`.
    pub fn edge(&self, i: usize) -> Vec2 {
        self.vertex(i + 1) - self.vertex(i)
    }

    pub fn to_f64(&self) -> Vec<[f64; 2]> {
        self.vertices.iter().map(Vec2::to_f64).collect()
    }

    /// Translate-free copy scaled by `s > 0`.
    pub fn scaled(&self, s: &Rational) -> ConvexPolygon {
        assert!(s.is_positive());
        ConvexPolygon { vertices: self.vertices.iter().map(|v| v.scale(s)).collect() }
    }

    pub fn translated(&self, t: &Vec2) -> ConvexPolygon {
        ConvexPolygon { vertices: self.vertices.iter().map(|v| v + t).collect() }
    }

    /// Image under `x -> -x`.
    pub fn negated(&self) -> ConvexPolygon {
        ConvexPolygon::new(self.vertices.iter().map(|v| -v).collect()).expect("rotation by pi")
    }

    pub fn is_origin_symmetric(&self) -> bool {
        let mut neg: Vec<Vec2> = self.vertices.iter().map(|v| -v).collect();
        let mut own = self.vertices.clone();
        neg.sort();
        own.sort();
        neg == own
    }

    /// Exact membership test (boundary counts as inside).
    pub fn contains(&self, p: &Vec2) -> bool {
        (0..self.len()).all(|i| orient(self.vertex(i), self.vertex(i + 1), p) != Ordering::Less)
    }

    pub fn contains_strictly(&self, p: &Vec2) -> bool {
        (0..self.len()).all(|i| orient(self.vertex(i), self.vertex(i + 1), p) == Ordering::Greater)
    }

    /// Index of the edge containing `p`, if `p` is on the boundary. A vertex
    /// reports the edge it starts.
    pub fn boundary_edge(&self, p: &Vec2) -> Option<usize> {
        if !self.contains(p) {
            return None;
        }
        (0..self.len()).find(|&i| orient(self.vertex(i), self.vertex(i + 1), p) == Ordering::Equal)
    }
}

impl fmt::Display for ConvexPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Convex hull by monotone chain. Collinear and duplicate points are dropped.
pub fn hull2(points: &[Vec2]) -> Result<ConvexPolygon> {
    let mut pts: Vec<Vec2> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return Err(Error::DegenerateInput(format!("{} distinct points", pts.len())));
    }
    let mut lower: Vec<Vec2> = Vec::with_capacity(pts.len());
    for p in &pts {
        while lower.len() >= 2
            && orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p) != Ordering::Greater
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Vec2> = Vec::with_capacity(pts.len());
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p) != Ordering::Greater
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(Error::DegenerateInput("all points are collinear".into()));
    }
    Ok(ConvexPolygon { vertices: lower })
}

pub fn area2(p: &ConvexPolygon) -> Rational {
    let n = p.len();
    let mut twice = Rational::zero();
    for i in 0..n {
        twice += p.vertex(i).cross(p.vertex(i + 1));
    }
    twice / rational::int(2)
}

/// Maximum of `x . v` over the polygon, with the vertices achieving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Support {
    pub value: Rational,
    /// One vertex index, or the two endpoints of an edge (in CCW order).
    pub vertices: Vec<usize>,
}

pub fn support2(p: &ConvexPolygon, v: &Vec2) -> Result<Support> {
    if v.is_zero() {
        return Err(Error::ZeroDirection);
    }
    let vals: Vec<Rational> = p.vertices().iter().map(|x| x.dot(v)).collect();
    let best = vals.iter().max().unwrap().clone();
    let mut idx: Vec<usize> = (0..vals.len()).filter(|&i| vals[i] == best).collect();
    if idx.len() == 2 && idx[0] == 0 && idx[1] == p.len() - 1 {
        idx.swap(0, 1);
    }
    Ok(Support { value: best, vertices: idx })
}

/// Support value only, `max x . v`.
pub fn support_value(p: &ConvexPolygon, v: &Vec2) -> Rational {
    p.vertices().iter().map(|x| x.dot(v)).max().unwrap()
}

/// Raw width `h(v) + h(-v)`; the Euclidean width is this divided by `|v|`.
pub fn width_raw(p: &ConvexPolygon, v: &Vec2) -> Rational {
    let vals = p.vertices().iter().map(|x| x.dot(v));
    let (mut lo, mut hi): (Option<Rational>, Option<Rational>) = (None, None);
    for d in vals {
        if lo.as_ref().map_or(true, |l| d < *l) {
            lo = Some(d.clone());
        }
        if hi.as_ref().map_or(true, |h| d > *h) {
            hi = Some(d);
        }
    }
    hi.unwrap() - lo.unwrap()
}

/// Largest `t >= 0` with `x, x + t v` both in the polygon. The maximal chord
/// length along the unit direction `v/|v|` is `t |v|`.
pub fn max_chord_param(p: &ConvexPolygon, v: &Vec2) -> Result<Rational> {
    if v.is_zero() {
        return Err(Error::ZeroDirection);
    }
    Ok(radial_param(&difference_body(p), v))
}

/// For a polygon with the origin strictly inside, the `t` with `t v` on the
/// boundary. Linear scan over edges.
pub fn radial_param(q: &ConvexPolygon, v: &Vec2) -> Rational {
    let mut best: Option<Rational> = None;
    for i in 0..q.len() {
        let a = q.vertex(i);
        let n = q.edge(i).rot90();
        // rot90 of a CCW edge points inward; outward normal is its negation
        let nv = -n.dot(v);
        if nv.is_positive() {
            let t = -n.dot(a) / nv;
            if best.as_ref().map_or(true, |b| t < *b) {
                best = Some(t);
            }
        }
    }
    best.expect("origin must be interior")
}

/// Minkowski sum by merging edge sequences in angular order.
pub fn minkowski_sum(p: &ConvexPolygon, q: &ConvexPolygon) -> ConvexPolygon {
    let bottom = |poly: &ConvexPolygon| {
        (0..poly.len())
            .min_by(|&i, &j| {
                let (a, b) = (poly.vertex(i), poly.vertex(j));
                a.y.cmp(&b.y).then_with(|| a.x.cmp(&b.x))
            })
            .unwrap()
    };
    let (i0, j0) = (bottom(p), bottom(q));
    let (n, m) = (p.len(), q.len());
    let mut out = Vec::with_capacity(n + m);
    let (mut i, mut j) = (0usize, 0usize);
    let mut cur = p.vertex(i0) + q.vertex(j0);
    while i < n || j < m {
        out.push(cur.clone());
        let step = if i == n {
            Ordering::Greater
        } else if j == m {
            Ordering::Less
        } else {
            angle_cmp(&p.edge(i0 + i), &q.edge(j0 + j))
        };
        let e = match step {
            Ordering::Less => {
                i += 1;
                p.edge(i0 + i - 1)
            }
            Ordering::Greater => {
                j += 1;
                q.edge(j0 + j - 1)
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
                &p.edge(i0 + i - 1) + &q.edge(j0 + j - 1)
            }
        };
        cur = &cur + &e;
    }
    // parallel edges are merged above, so only genuine vertices remain
    ConvexPolygon::new(out).expect("Minkowski sum of convex polygons is convex")
}

/// `P + (-P)`, the origin-symmetric body whose radial function along `v`
/// equals the maximal chord parameter of `P`.
pub fn difference_body(p: &ConvexPolygon) -> ConvexPolygon {
    minkowski_sum(p, &p.negated())
}

/// `(P - P) / 2`.
pub fn central_symmetral(p: &ConvexPolygon) -> ConvexPolygon {
    difference_body(p).scaled(&rational::ratio(1, 2))
}

/// Polar body `{y : x . y <= 1 for x in P}`.
pub fn polar_dual2(p: &ConvexPolygon) -> Result<ConvexPolygon> {
    let n = p.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let a = p.vertex(i);
        let normal = -p.edge(i).rot90();
        let c = normal.dot(a);
        if !c.is_positive() {
            return Err(Error::OriginNotInterior);
        }
        out.push(normal.scale(&(Rational::from_integer(1.into()) / c)));
    }
    ConvexPolygon::new(out)
}

/// Directions sorted counterclockwise around the origin, supporting
/// logarithmic-time cone location.
#[derive(Clone, Debug)]
pub(crate) struct AngularIndex {
    dirs: Vec<Vec2>,
}

impl AngularIndex {
    /// `dirs` must already be in strictly increasing CCW order (cyclically).
    pub fn new(dirs: Vec<Vec2>) -> Self {
        AngularIndex { dirs }
    }

    /// The `k` with `v` in the half-open cone `[dirs[k], dirs[k+1])`.
    pub fn locate(&self, v: &Vec2) -> usize {
        let r = &self.dirs[0];
        let (mut lo, mut hi) = (0usize, self.dirs.len());
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if angle_cmp_from(r, &self.dirs[mid], v) != Ordering::Greater {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }
}

/// Origin-symmetric (or at least origin-interior) polygon prepared for fast
/// radial and support queries.
#[derive(Clone, Debug)]
pub(crate) struct IndexedBody {
    pub poly: ConvexPolygon,
    by_vertex: AngularIndex,
    by_normal: AngularIndex,
}

impl IndexedBody {
    pub fn new(poly: ConvexPolygon) -> Self {
        let n = poly.len();
        // rotate so the vertex list is angularly sorted from its first entry
        let by_vertex = AngularIndex::new(poly.vertices().to_vec());
        let normals = (0..n).map(|i| -poly.edge(i).rot90()).collect();
        IndexedBody { by_vertex, by_normal: AngularIndex::new(normals), poly }
    }

    /// `t` with `t v` on the boundary; requires the origin strictly inside.
    pub fn radial(&self, v: &Vec2) -> Rational {
        let k = self.by_vertex.locate(v);
        let a = self.poly.vertex(k);
        let normal = -self.poly.edge(k).rot90();
        normal.dot(a) / normal.dot(v)
    }

    pub fn support(&self, w: &Vec2) -> Rational {
        let k = self.by_normal.locate(w);
        self.poly.vertex(k + 1).dot(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn square01() -> ConvexPolygon {
        ConvexPolygon::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap()
    }

    fn tri() -> ConvexPolygon {
        ConvexPolygon::from_ints(&[(0, 0), (1, 0), (0, 1)]).unwrap()
    }

    #[test]
    fn rejects_bad_cycles() {
        assert!(ConvexPolygon::from_ints(&[(0, 0), (0, 1), (1, 0)]).is_err());
        assert!(ConvexPolygon::from_ints(&[(0, 0), (1, 0), (2, 0), (0, 1)]).is_err());
        assert!(ConvexPolygon::from_ints(&[(0, 0), (1, 0)]).is_err());
        // pentagram winds twice with only left turns
        let star: Vec<(i64, i64)> = vec![(10, 0), (-8, 6), (3, -10), (3, 10), (-8, -6)];
        assert!(ConvexPolygon::from_ints(&star).is_err());
    }

    #[test]
    fn canonical_start_vertex() {
        let p = ConvexPolygon::from_ints(&[(1, 1), (0, 1), (0, 0), (1, 0)]).unwrap();
        assert_eq!(p, square01());
    }

    #[test]
    fn hull_examples() {
        let pts = [(0, 0), (1, 0), (1, 1), (0, 1)]
            .iter()
            .map(|&(x, y)| Vec2::from_ints(x, y))
            .chain([Vec2::new(ratio(1, 2), ratio(1, 2))])
            .collect::<Vec<_>>();
        assert_eq!(hull2(&pts).unwrap(), square01());
        let pts: Vec<Vec2> =
            [(0, 0), (2, 0), (1, 0), (0, 2)].iter().map(|&(x, y)| Vec2::from_ints(x, y)).collect();
        assert_eq!(hull2(&pts).unwrap(), ConvexPolygon::from_ints(&[(0, 0), (2, 0), (0, 2)]).unwrap());
        let pts: Vec<Vec2> = [(0, 0), (1, 1), (2, 2)].iter().map(|&(x, y)| Vec2::from_ints(x, y)).collect();
        assert!(matches!(hull2(&pts), Err(Error::DegenerateInput(_))));
        assert!(matches!(hull2(&pts[..1]), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn area_examples() {
        assert_eq!(area2(&square01()), int(1));
        assert_eq!(area2(&tri()), ratio(1, 2));
    }

    #[test]
    fn support_examples() {
        let s = support2(&square01(), &Vec2::from_ints(1, 0)).unwrap();
        assert_eq!(s.value, int(1));
        let sq = square01();
        let pts: Vec<&Vec2> = s.vertices.iter().map(|&i| sq.vertex(i)).collect();
        assert_eq!(pts, vec![&Vec2::from_ints(1, 0), &Vec2::from_ints(1, 1)]);
        let s = support2(&square01(), &Vec2::from_ints(1, 1)).unwrap();
        assert_eq!(s.value, int(2));
        assert_eq!(square01().vertex(s.vertices[0]), &Vec2::from_ints(1, 1));
        assert_eq!(s.vertices.len(), 1);
        let s = support2(&tri(), &Vec2::from_ints(-1, -1)).unwrap();
        assert_eq!(s.value, int(0));
        assert_eq!(s.vertices, vec![0]);
        assert_eq!(support2(&tri(), &Vec2::zero()), Err(Error::ZeroDirection));
    }

    #[test]
    fn max_chord_examples() {
        assert_eq!(max_chord_param(&square01(), &Vec2::from_ints(1, 0)).unwrap(), int(1));
        assert_eq!(max_chord_param(&square01(), &Vec2::from_ints(1, 1)).unwrap(), int(1));
        assert_eq!(max_chord_param(&tri(), &Vec2::from_ints(1, -1)).unwrap(), int(1));
        assert_eq!(max_chord_param(&square01(), &Vec2::from_ints(2, 0)).unwrap(), ratio(1, 2));
        assert_eq!(max_chord_param(&tri(), &Vec2::zero()), Err(Error::ZeroDirection));
    }

    #[test]
    fn minkowski_examples() {
        let s2 = minkowski_sum(&square01(), &square01());
        assert_eq!(s2, ConvexPolygon::from_ints(&[(0, 0), (2, 0), (2, 2), (0, 2)]).unwrap());
        let hex = minkowski_sum(&tri(), &tri().negated());
        let expect =
            ConvexPolygon::from_ints(&[(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]).unwrap();
        assert_eq!(hex, expect);
    }

    #[test]
    fn difference_body_examples() {
        assert_eq!(
            difference_body(&square01()),
            ConvexPolygon::from_ints(&[(-1, -1), (1, -1), (1, 1), (-1, 1)]).unwrap()
        );
        let sym = ConvexPolygon::from_ints(&[(-1, -2), (3, -1), (1, 2), (-3, 1)]).unwrap();
        assert_eq!(difference_body(&sym), sym.scaled(&int(2)));
        assert_eq!(difference_body(&tri()).len(), 6);
    }

    #[test]
    fn central_symmetral_of_triangle() {
        let h = central_symmetral(&tri());
        let half = ratio(1, 2);
        let expect = ConvexPolygon::new(vec![
            Vec2::new(half.clone(), int(0)),
            Vec2::new(int(0), half.clone()),
            Vec2::new(-half.clone(), half.clone()),
            Vec2::new(-half.clone(), int(0)),
            Vec2::new(int(0), -half.clone()),
            Vec2::new(half.clone(), -half.clone()),
        ])
        .unwrap();
        assert_eq!(h, expect);
        assert_eq!(area2(&h), ratio(3, 4));
        let sym = ConvexPolygon::from_ints(&[(1, 0), (2, 1), (1, 2), (0, 1)]).unwrap();
        let centered = sym.translated(&Vec2::from_ints(-1, -1));
        assert_eq!(central_symmetral(&sym), centered);
    }

    #[test]
    fn polar_examples() {
        let sq = ConvexPolygon::from_ints(&[(-1, -1), (1, -1), (1, 1), (-1, 1)]).unwrap();
        let diamond = ConvexPolygon::from_ints(&[(1, 0), (0, 1), (-1, 0), (0, -1)]).unwrap();
        assert_eq!(polar_dual2(&sq).unwrap(), diamond);
        assert_eq!(polar_dual2(&diamond).unwrap(), sq);
        assert_eq!(polar_dual2(&square01()), Err(Error::OriginNotInterior));
    }

    #[test]
    fn indexed_queries_match_linear_scans() {
        let d = difference_body(&ConvexPolygon::from_ints(&[(0, 0), (5, 1), (4, 3), (1, 4)]).unwrap());
        let idx = IndexedBody::new(d.clone());
        for (x, y) in [(1, 0), (0, 1), (-3, 2), (2, -7), (5, 1), (-1, -4), (4, 3), (-4, -3)] {
            let v = Vec2::from_ints(x, y);
            assert_eq!(idx.radial(&v), radial_param(&d, &v), "radial {v}");
            assert_eq!(idx.support(&v), support_value(&d, &v), "support {v}");
        }
    }

    #[test]
    fn boundary_incidence() {
        let s = square01();
        assert_eq!(s.boundary_edge(&Vec2::new(int(1), ratio(1, 2))), Some(1));
        assert_eq!(s.boundary_edge(&Vec2::new(ratio(1, 2), ratio(1, 2))), None);
        assert!(s.contains(&Vec2::from_ints(1, 1)));
        assert!(!s.contains_strictly(&Vec2::from_ints(1, 1)));
    }
}
