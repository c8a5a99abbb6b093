use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{hull_area_union, Breakdown, FunctionalValue, Maximizer, Scalar};
use crate::geom2::shapes::random_interior_point;
use crate::geom2::{apply_motion, area2, ConvexPolygon, Motion, Vec2};
use crate::rational::{self, Rational};

fn reflected_hull_area(p: &ConvexPolygon, center: &Vec2) -> Rational {
    let q = apply_motion(p, &Motion::PointReflect(center.clone())).expect("point reflection");
    hull_area_union(p, &q)
}

/// Exact point-reflection functional.
///
/// The reflected copy `2x - P` meets `P` iff `x` is in `P`, and
/// `x -> area(conv(P ∪ (2x - P)))` is convex (the copy moves by translation),
/// so the maximum over `P` is attained at a vertex.
pub fn c_0(p: &ConvexPolygon) -> FunctionalValue {
    let area = area2(p);
    let hulls: Vec<Rational> =
        p.vertices().par_iter().with_min_len(16).map(|z| reflected_hull_area(p, z)).collect();
    let mut best = 0;
    for (i, h) in hulls.iter().enumerate() {
        if *h > hulls[best] {
            best = i;
        }
    }
    let hull = hulls[best].clone();
    FunctionalValue {
        value: Scalar::Exact(&hull / &area),
        exact: true,
        maximizer: Maximizer::Vertex(best),
        details: Breakdown {
            area: Scalar::Exact(area),
            hull_area: Scalar::Exact(hull),
            chord_raw: None,
            width_raw: None,
        },
    }
}

/// Result of sampling reflection centers inside the polygon.
#[derive(Clone, Debug, PartialEq)]
pub struct CenterValidation {
    pub vertex_max: f64,
    pub sampled_max: f64,
    pub samples: usize,
}

impl CenterValidation {
    /// No interior center beat the vertex maximum by more than `slack`.
    pub fn holds(&self, slack: f64) -> bool {
        self.sampled_max <= self.vertex_max + slack
    }
}

/// Evaluates the point-reflection ratio at `samples` random interior centers.
pub fn c_0_validate(p: &ConvexPolygon, samples: usize, seed: u64) -> CenterValidation {
    let area = area2(p);
    let vertex_max = c_0(p).to_f64();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let centers: Vec<Vec2> = (0..samples).map(|_| random_interior_point(&mut rng, p)).collect();
    let sampled_max = centers
        .par_iter()
        .map(|x| rational::to_f64(&(reflected_hull_area(p, x) / &area)))
        .reduce(|| f64::NEG_INFINITY, f64::max);
    CenterValidation { vertex_max, sampled_max, samples }
}
