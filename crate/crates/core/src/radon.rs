//! Normed planes with polygonal unit balls: Birkhoff orthogonality, Radon
//! detection, and the translative-constant-volume profile.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::functionals::{profile_tr, translate_profile_raw};
use crate::geom2::{max_chord_param, radial_param, width_raw, ConvexPolygon, Direction, Vec2};
use crate::rational::{self, Rational};

/// Unit ball of a polygonal norm; the polygon is exactly origin-symmetric.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitBall2 {
    poly: ConvexPolygon,
}

/// Boundary feature of a polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Feature {
    Vertex(usize),
    /// Edge `i` runs from vertex `i` to vertex `i + 1`.
    Edge(usize),
}

/// Orthogonality between boundary directions, grouped into feature pairs:
/// `(f, g)` is present when some `x` whose supporting lines touch at `f` is
/// orthogonal to some `y` pointing at `g`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct OrthogonalityRelation {
    pub pairs: BTreeSet<(Feature, Feature)>,
}

impl UnitBall2 {
    pub fn new(poly: ConvexPolygon) -> Result<Self> {
        if !poly.is_origin_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(UnitBall2 { poly })
    }

    pub fn polygon(&self) -> &ConvexPolygon {
        &self.poly
    }

    /// Feature of the boundary hit by the ray through `y`.
    pub fn feature_at(&self, y: &Vec2) -> Feature {
        let p = &self.poly;
        for i in 0..p.len() {
            let v = p.vertex(i);
            if v.cross(y).is_zero() && v.dot(y).is_positive() {
                return Feature::Vertex(i);
            }
        }
        // edge i is hit iff y lies strictly inside the cone (v_i, v_{i+1})
        (0..p.len())
            .map(Feature::Edge)
            .find(|f| {
                let Feature::Edge(i) = *f else { unreachable!() };
                p.vertex(i).cross(y).is_positive() && y.cross(p.vertex(i + 1)).is_positive()
            })
            .expect("origin is interior")
    }

    /// Feature of contact of the supporting lines parallel to `x` (the one
    /// on the left of `x`; the other is its antipode).
    pub fn contact(&self, x: &Vec2) -> Feature {
        let p = &self.poly;
        let n = p.len();
        // the outer normal -rot90(x) of the left line; maximize over vertices
        let w = -x.rot90();
        let best = p.vertices().iter().map(|v| v.dot(&w)).max().unwrap();
        let hits: Vec<usize> = (0..n).filter(|&i| p.vertex(i).dot(&w) == best).collect();
        match hits.as_slice() {
            [i] => Feature::Vertex(*i),
            [a, b] => {
                if (a + 1) % n == *b {
                    Feature::Edge(*a)
                } else {
                    Feature::Edge(*b)
                }
            }
            _ => unreachable!("strictly convex polygon"),
        }
    }

    /// Whether the direction of `x` is that of a supporting line at the
    /// boundary feature `f` (closed cone at a vertex).
    pub fn supports_direction(&self, f: Feature, x: &Vec2) -> bool {
        let p = &self.poly;
        match f {
            Feature::Edge(i) => p.edge(i).cross(x).is_zero(),
            Feature::Vertex(i) => {
                let before = p.edge(i + p.len() - 1);
                let after = p.edge(i);
                [x.clone(), -x].iter().any(|d| {
                    !before.cross(d).is_negative() && !d.cross(&after).is_negative()
                })
            }
        }
    }
}

/// Birkhoff orthogonality `x ⊥ y`: `x` is parallel to a supporting line of
/// the unit ball at `y / ||y||`.
pub fn birkhoff(b: &UnitBall2, x: &Vec2, y: &Vec2) -> Result<bool> {
    if x.is_zero() || y.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(b.supports_direction(b.feature_at(y), x))
}

/// Boundary directions that represent every combinatorial class: the vertex
/// and edge directions, and one direction inside each open arc between them
/// (all modulo sign).
pub fn direction_cells(b: &UnitBall2) -> Vec<Vec2> {
    let p = b.polygon();
    let mut keys: BTreeSet<Direction> = BTreeSet::new();
    for i in 0..p.len() {
        keys.insert(Direction::canonical(p.vertex(i)).unwrap());
        keys.insert(Direction::canonical(&p.edge(i)).unwrap());
    }
    let mut breaks: Vec<Vec2> = keys.into_iter().map(|d| d.v).collect();
    breaks.sort_by(crate::geom2::vec::angle_cmp);
    let k = breaks.len();
    let mut cells = Vec::with_capacity(2 * k);
    for i in 0..k {
        cells.push(breaks[i].clone());
        // canonical directions live in (-pi/2, pi/2]; the last arc wraps to -first
        let next = if i + 1 < k { breaks[i + 1].clone() } else { -&breaks[0] };
        let a = breaks[i].scale(&(Rational::from_integer(1.into()) / linf(&breaks[i])));
        let c = next.scale(&(Rational::from_integer(1.into()) / linf(&next)));
        cells.push(&a + &c);
    }
    cells
}

fn linf(v: &Vec2) -> Rational {
    rational::abs(&v.x).max(rational::abs(&v.y))
}

/// Orthogonality relation at the feature level.
pub fn orthogonality_relation(b: &UnitBall2) -> OrthogonalityRelation {
    let cells = direction_cells(b);
    let mut pairs = BTreeSet::new();
    let signed: Vec<Vec2> = cells.iter().flat_map(|c| [c.clone(), -c]).collect();
    for x in &signed {
        for y in &signed {
            if b.supports_direction(b.feature_at(y), x) {
                pairs.insert((b.contact(x), b.feature_at(y)));
            }
        }
    }
    OrthogonalityRelation { pairs }
}

/// Exact Radon test: Birkhoff orthogonality is symmetric.
///
/// Both `feature_at` and the supporting cones are constant between
/// consecutive vertex and edge directions, so symmetry on the finite set of
/// [`direction_cells`] decides symmetry everywhere.
pub fn is_radon(b: &UnitBall2) -> bool {
    let cells = direction_cells(b);
    let rel: Vec<Vec<bool>> = cells
        .iter()
        .map(|x| cells.iter().map(|y| b.supports_direction(b.feature_at(y), x)).collect())
        .collect();
    (0..cells.len()).all(|i| (0..cells.len()).all(|j| rel[i][j] == rel[j][i]))
}

/// `t` with `t y` on the boundary of `p` (origin interior).
pub fn scale_to_boundary(p: &ConvexPolygon, y: &Vec2) -> Result<Vec2> {
    if y.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !p.contains_strictly(&Vec2::zero()) {
        return Err(Error::OriginNotInterior);
    }
    Ok(y.scale(&radial_param(p, y)))
}

/// Area of the triangle `o, x, y` where `y` touches a supporting line of
/// `P` parallel to `x`; `x` must lie on the boundary.
///
/// Any contact point on that line gives the same area (the line is parallel
/// to `ox`); both ends of a contact edge are evaluated and compared.
pub fn a_k_area(p: &ConvexPolygon, x: &Vec2) -> Result<Rational> {
    if !p.is_origin_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if x.is_zero() || p.boundary_edge(x).is_none() {
        return Err(Error::NotOnBoundary);
    }
    let w = x.rot90();
    let top = p.vertices().iter().map(|v| v.dot(&w)).max().unwrap();
    let areas: Vec<Rational> = p
        .vertices()
        .iter()
        .filter(|v| v.dot(&w) == top)
        .map(|v| rational::abs(&x.cross(v)) / rational::int(2))
        .collect();
    debug_assert!(areas.windows(2).all(|w| w[0] == w[1]));
    Ok(areas[0].clone())
}

/// `d(x) w(x⊥)` in raw form: chord parameter times raw width. For `x` on the
/// boundary of an origin-symmetric body this is `8 A_K(x)`.
pub fn chord_width_raw(p: &ConvexPolygon, x: &Vec2) -> Result<Rational> {
    Ok(max_chord_param(p, x)? * width_raw(p, &x.rot90()))
}

/// Spread of `f(u) = d(u) w(u⊥)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TcvDeviation {
    pub min_f: f64,
    pub max_f: f64,
    pub ratio: f64,
}

/// Minimum, maximum and their ratio of the chord-width profile over `m`
/// equally spaced directions and all critical directions of the difference
/// body (so the maximum is exact).
pub fn tcv_deviation(p: &ConvexPolygon, m: usize) -> TcvDeviation {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for (_, t, w) in translate_profile_raw(p) {
        let f = rational::to_f64(&(t * w));
        lo = lo.min(f);
        hi = hi.max(f);
    }
    for (_, f) in profile_tr(p, m) {
        lo = lo.min(f);
        hi = hi.max(f);
    }
    TcvDeviation { min_f: lo, max_f: hi, ratio: hi / lo }
}

/// Float Birkhoff test for near-smooth unit balls: angular distance between
/// `x` and the closest supporting-line direction at `y`.
pub fn birkhoff_defect(b: &UnitBall2, x: [f64; 2], y: [f64; 2]) -> f64 {
    let ang = |v: [f64; 2]| v[1].atan2(v[0]);
    let dist = |a: f64, c: f64| {
        let d = (a - c).rem_euclid(std::f64::consts::PI);
        d.min(std::f64::consts::PI - d)
    };
    let yv = Vec2::from_f64(y, 1e-12);
    let p = b.polygon();
    let xa = ang(x);
    match b.feature_at(&yv) {
        Feature::Edge(i) => dist(xa, ang(p.edge(i).to_f64())),
        Feature::Vertex(i) => {
            let lo = ang(p.edge(i + p.len() - 1).to_f64());
            let hi = ang(p.edge(i).to_f64());
            let span = (hi - lo).rem_euclid(2.0 * std::f64::consts::PI);
            let inside = |a: f64| (a - lo).rem_euclid(2.0 * std::f64::consts::PI) <= span;
            if inside(xa) || inside(xa + std::f64::consts::PI) {
                0.0
            } else {
                dist(xa, lo).min(dist(xa, hi))
            }
        }
    }
}
