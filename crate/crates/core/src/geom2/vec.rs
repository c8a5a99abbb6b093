use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Exact planar vector. Ordering is lexicographic in `(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vec2 {
    pub x: Rational,
    pub y: Rational,
}

impl Vec2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Vec2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Vec2::new(rational::int(x), rational::int(y))
    }

    pub fn zero() -> Self {
        Vec2::from_ints(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn dot(&self, o: &Vec2) -> Rational {
        &self.x * &o.x + &self.y * &o.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(&self, o: &Vec2) -> Rational {
        &self.x * &o.y - &self.y * &o.x
    }

    /// Counterclockwise rotation by a quarter turn.
    pub fn rot90(&self) -> Vec2 {
        Vec2::new(-&self.y, self.x.clone())
    }

    pub fn scale(&self, s: &Rational) -> Vec2 {
        Vec2::new(&self.x * s, &self.y * s)
    }

    pub fn norm2(&self) -> Rational {
        self.dot(self)
    }

    pub fn to_f64(&self) -> [f64; 2] {
        [rational::to_f64(&self.x), rational::to_f64(&self.y)]
    }

    pub fn from_f64(p: [f64; 2], tol: f64) -> Vec2 {
        Vec2::new(rational::approx(p[0], tol), rational::approx(p[1], tol))
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", rational::format(&self.x), rational::format(&self.y))
    }
}

impl<'a> Add<&'a Vec2> for &'a Vec2 {
    type Output = Vec2;
    fn add(self, o: &Vec2) -> Vec2 {
        Vec2::new(&self.x + &o.x, &self.y + &o.y)
    }
}

impl<'a> Sub<&'a Vec2> for &'a Vec2 {
    type Output = Vec2;
    fn sub(self, o: &Vec2) -> Vec2 {
        Vec2::new(&self.x - &o.x, &self.y - &o.y)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        &self + &o
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        &self - &o
    }
}

impl Neg for &Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-&self.x, -&self.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        -&self
    }
}

impl Mul<&Rational> for &Vec2 {
    type Output = Vec2;
    fn mul(self, s: &Rational) -> Vec2 {
        self.scale(s)
    }
}

/// Sign of the turn `a -> b -> c`: positive for a left turn.
pub fn orient(a: &Vec2, b: &Vec2, c: &Vec2) -> Ordering {
    (b - a).cross(&(c - a)).cmp(&Rational::zero())
}

/// Upper (0) or lower (1) half-turn relative to the positive x axis, for
/// angles in `[0, pi)` and `[pi, 2pi)` respectively.
fn half(v: &Vec2) -> u8 {
    if v.y.is_positive() || (v.y.is_zero() && v.x.is_positive()) {
        0
    } else {
        1
    }
}

/// Compares the polar angles of two nonzero vectors in `[0, 2pi)`.
pub fn angle_cmp(a: &Vec2, b: &Vec2) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| Rational::zero().cmp(&a.cross(b)))
}

/// Compares polar angles measured counterclockwise from `reference`.
pub fn angle_cmp_from(reference: &Vec2, a: &Vec2, b: &Vec2) -> Ordering {
    let rel = |v: &Vec2| {
        let c = reference.cross(v);
        if c.is_positive() || (c.is_zero() && reference.dot(v).is_positive()) {
            0u8
        } else {
            1
        }
    };
    rel(a).cmp(&rel(b)).then_with(|| Rational::zero().cmp(&a.cross(b)))
}

/// A nonzero planar direction.
///
/// Canonical directions are primitive integer vectors with `x > 0`, or
/// `x == 0 && y > 0`; they identify a direction up to sign and scale. The
/// derived ordering on canonical directions is the tie-break order used by
/// every argmax in the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Direction {
    pub v: Vec2,
    pub canonical: bool,
}

impl Direction {
    pub fn new(v: Vec2) -> Result<Self> {
        if v.is_zero() {
            return Err(Error::ZeroDirection);
        }
        Ok(Direction { v, canonical: false })
    }

    /// Primitive integer representative with lexicographically positive sign.
    pub fn canonical(v: &Vec2) -> Result<Self> {
        if v.is_zero() {
            return Err(Error::ZeroDirection);
        }
        let l = v.x.denom().lcm(v.y.denom());
        let mut x: BigInt = v.x.numer() * (&l / v.x.denom());
        let mut y: BigInt = v.y.numer() * (&l / v.y.denom());
        let g = x.gcd(&y);
        x /= &g;
        y /= &g;
        if x.is_negative() || (x.is_zero() && y.is_negative()) {
            x = -x;
            y = -y;
        }
        Ok(Direction {
            v: Vec2::new(Rational::from_integer(x), Rational::from_integer(y)),
            canonical: true,
        })
    }

    pub fn from_ints(x: i64, y: i64) -> Result<Self> {
        Direction::new(Vec2::from_ints(x, y))
    }

    pub fn to_canonical(&self) -> Direction {
        Direction::canonical(&self.v).expect("direction is nonzero")
    }

    pub fn angle(&self) -> f64 {
        let [x, y] = self.v.to_f64();
        y.atan2(x)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

/// A line through `point` with the given direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line2 {
    pub point: Vec2,
    pub direction: Direction,
}

impl Line2 {
    pub fn new(point: Vec2, direction: Direction) -> Self {
        Line2 { point, direction }
    }

    /// Mirror image of `p`. Exact for any rational direction: the reflection
    /// matrix has entries `(dx^2 - dy^2, 2 dx dy) / (dx^2 + dy^2)`.
    pub fn reflect(&self, p: &Vec2) -> Vec2 {
        let d = &self.direction.v;
        let n2 = d.norm2();
        let rel = p - &self.point;
        let proj = d.scale(&(rel.dot(d) / &n2));
        // p' = point + 2 proj - rel
        let two = rational::int(2);
        &self.point + &(&proj.scale(&two) - &rel)
    }
}
