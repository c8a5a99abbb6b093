//! Verification suites: the extremal statements and identities checked on
//! standard and random bodies.

use std::f64::consts::PI;

use hullvol_core::functionals::{c_0, c_1, c_tr, hull_area_union};
use hullvol_core::geom2::shapes::{
    disk_gon, random_direction, random_parallelogram, random_polygon_exact, random_symmetric_polygon,
    random_triangle, regular_gon, reuleaux,
};
use hullvol_core::geom2::{
    apply_motion, area2, central_symmetral, max_chord_param, width_raw, ConvexPolygon, Motion,
};
use hullvol_core::nd::functionals::reflect_in_support;
use hullvol_core::nd::shapes::{cube, random_ellipsoid, random_polytope, random_unit_vector, regular_simplex};
use hullvol_core::nd::{
    brightness_nd, c_0_nd, c_hyp_nd, c_tr_nd, chord_nd, cylinder_check, hull_volume, support_width_nd, BodyN,
    Ellipsoid, OptOptions,
};
use hullvol_core::radon::{a_k_area, chord_width_raw, is_radon, scale_to_boundary, tcv_deviation, UnitBall2};
use hullvol_core::rational::{int, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub const SUITES: [&str; 7] = ["thm1", "thm2", "thm3", "thm4", "thm5", "corollaries", "identities"];

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub measured: String,
    pub expected: String,
    pub pass: bool,
}

struct Suite {
    name: &'static str,
    checks: Vec<Check>,
}

impl Suite {
    fn push(&mut self, name: &str, measured: String, expected: String, pass: bool) {
        self.checks.push(Check { suite: self.name.into(), name: name.into(), measured, expected, pass });
    }

    fn near(&mut self, name: &str, got: f64, want: f64, tol: f64) {
        self.push(name, fmt(got), format!("{} ± {tol:e}", fmt(want)), (got - want).abs() <= tol);
    }

    fn above(&mut self, name: &str, got: f64, floor: f64) {
        self.push(name, fmt(got), format!("> {}", fmt(floor)), got > floor);
    }

    fn count(&mut self, name: &str, good: usize, total: usize) {
        self.push(name, format!("{good}/{total}"), format!("{total}/{total}"), good == total);
    }
}

fn fmt(x: f64) -> String {
    crate::plot::sig15(x)
}

fn ellipsoid_bound(n: usize) -> f64 {
    hullvol_core::nd::ellipsoid_value(n)
}

fn disk_value() -> f64 {
    1.0 + 4.0 / PI
}

fn exact(v: hullvol_core::functionals::FunctionalValue) -> Rational {
    v.value.as_exact().cloned().expect("exact functional")
}

fn radon_hexagon() -> ConvexPolygon {
    ConvexPolygon::from_ints(&[(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]).expect("valid hexagon")
}

pub fn run(suite: &str, seed: u64, opts: &OptOptions) -> Result<Vec<Check>, String> {
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let mut out = Vec::new();
    for name in names {
        let name: &'static str = SUITES.iter().find(|s| **s == name).ok_or_else(|| {
            format!("unknown suite {name:?}; expected one of {} or all", SUITES.join(", "))
        })?;
        let mut s = Suite { name, checks: Vec::new() };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        match name {
            "thm1" => thm1(&mut s, &mut rng, opts),
            "thm2" => thm2(&mut s, &mut rng),
            "thm3" => thm3(&mut s, opts),
            "thm4" => thm4(&mut s, opts),
            "thm5" => thm5(&mut s, &mut rng),
            "corollaries" => corollaries(&mut s, opts),
            _ => identities(&mut s, &mut rng),
        }
        out.extend(s.checks);
    }
    Ok(out)
}

fn nd(r: hullvol_core::Result<hullvol_core::nd::DirOptResult>) -> f64 {
    r.map_or(f64::NAN, |r| r.value)
}

fn thm1(s: &mut Suite, rng: &mut ChaCha8Rng, opts: &OptOptions) {
    let ball = BodyN::ball(3, 1.0).unwrap();
    s.near("c_tr(ball, n=3)", nd(c_tr_nd(&ball, opts)), ellipsoid_bound(3), 1e-4);
    let e = random_ellipsoid(rng, 3, 0.5, 2.0).unwrap();
    s.near("c_tr(random ellipsoid, n=3)", nd(c_tr_nd(&e, opts)), ellipsoid_bound(3), 1e-4);
    let d = disk_gon(1024, 1e-12).unwrap();
    s.near("c_tr(disk 1024-gon)", c_tr(&d).to_f64(), disk_value(), 5e-3);
    s.above("c_tr(cube, n=3)", nd(c_tr_nd(&cube(3).unwrap(), opts)), ellipsoid_bound(3) + 0.1);
    s.above("c_tr(simplex, n=3)", nd(c_tr_nd(&regular_simplex(3, 1.0).unwrap(), opts)), ellipsoid_bound(3) + 0.1);
    let sq = ConvexPolygon::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
    s.above("c_tr(square)", c_tr(&sq).to_f64(), disk_value());
}

fn thm2(s: &mut Suite, rng: &mut ChaCha8Rng) {
    let hex = radon_hexagon();
    let radon = |p: &ConvexPolygon| is_radon(&UnitBall2::new(central_symmetral(p)).unwrap());
    s.push("Radon hexagon is Radon", radon(&hex).to_string(), "true".into(), radon(&hex));
    s.near("Radon hexagon profile ratio", tcv_deviation(&hex, 64).ratio, 1.0, 1e-12);
    let sq = ConvexPolygon::from_ints(&[(-1, -1), (1, -1), (1, 1), (-1, 1)]).unwrap();
    s.push("square is not Radon", radon(&sq).to_string(), "false".into(), !radon(&sq));
    s.near("square profile ratio", tcv_deviation(&sq, 64).ratio, 2.0, 1e-12);
    let r = reuleaux(300, 1e-12).unwrap();
    s.push("Reuleaux profile ratio", fmt(tcv_deviation(&r, 256).ratio), "<= 1.001".into(), tcv_deviation(&r, 256).ratio <= 1.001);
    // constant profile <=> Radon central symmetral, on bodies of both kinds
    let mut agree = 0;
    let total = 30;
    for i in 0..total {
        let p = match i % 3 {
            0 => random_triangle(rng),
            1 => {
                let k = rng.gen_range(2..=4);
                random_symmetric_polygon(rng, k)
            }
            _ => loop {
                let m = [[0; 2]; 2].map(|row| row.map(|_: i64| int(rng.gen_range(-4..=4))));
                if let Ok(q) = apply_motion(&hex, &Motion::Linear(m)) {
                    break q;
                }
            },
        };
        let constant = (tcv_deviation(&p, 64).ratio - 1.0).abs() < 1e-9;
        agree += (constant == radon(&p)) as usize;
    }
    s.count("constant profile iff Radon central symmetral", agree, total);
}

fn thm3(s: &mut Suite, opts: &OptOptions) {
    let ball = BodyN::ball(3, 1.0).unwrap();
    s.near("c_0(ball, n=3)", nd(c_0_nd(&ball, opts)), ellipsoid_bound(3), 1e-4);
    s.near("c_0(disk 256-gon)", c_0(&disk_gon(256, 1e-12).unwrap()).to_f64(), disk_value(), 5e-3);
    s.above("c_0(cube, n=3)", nd(c_0_nd(&cube(3).unwrap(), opts)), ellipsoid_bound(3) + 0.1);
    s.above("c_0(simplex, n=3)", nd(c_0_nd(&regular_simplex(3, 1.0).unwrap(), opts)), ellipsoid_bound(3) + 0.1);
}

fn thm4(s: &mut Suite, opts: &OptOptions) {
    let ball = BodyN::ball(3, 1.0).unwrap();
    s.near("c_hyp(ball, n=3)", nd(c_hyp_nd(&ball, opts)), ellipsoid_bound(3), 1e-4);
    let d = disk_gon(1024, 1e-12).unwrap();
    s.near("c_1(disk 1024-gon)", c_1(&d, 1e-9).map_or(f64::NAN, |v| v.to_f64()), disk_value(), 5e-3);
    let c = cube(3).unwrap();
    let hyp = nd(c_hyp_nd(&c, opts));
    s.above("c_hyp(cube, n=3)", hyp, ellipsoid_bound(3) + 0.1);
    s.above("c_hyp(simplex, n=3)", nd(c_hyp_nd(&regular_simplex(3, 1.0).unwrap(), opts)), ellipsoid_bound(3) + 0.1);
    let e = BodyN::Ellipsoid(Ellipsoid::axis_aligned(vec![1.0, 1.0, 2.0]).unwrap());
    // any sampled value is a lower bound, so a small budget suffices here
    let cheap = OptOptions { coarse_samples: Some(64), candidates: 1, refine_iters: 20, ..opts.clone() };
    s.above("c_hyp(ellipsoid 1,1,2)", nd(c_hyp_nd(&e, &cheap)), ellipsoid_bound(3));
    let tr = nd(c_tr_nd(&c, opts));
    s.push("c_hyp >= c_tr on the cube", format!("{} vs {}", fmt(hyp), fmt(tr)), ">=".into(), hyp >= tr - 1e-6);
}

fn thm5(s: &mut Suite, rng: &mut ChaCha8Rng) {
    let n = 50;
    let three = int(3);
    let four = int(4);
    let t3 = (0..n).filter(|_| exact(c_tr(&random_triangle(rng))) == three).count();
    s.count("t_3: c_tr = 3 on random triangles", t3, n);
    let t4 = (0..n).filter(|_| exact(c_tr(&random_polygon_exact(rng, 4))) == three).count();
    s.count("t_4: c_tr = 3 on random quadrangles", t4, n);
    let pent = regular_gon(5, 1e-9, 0.0).unwrap();
    s.near("t_5: c_tr(regular pentagon)", c_tr(&pent).to_f64(), (10.0 + 5f64.sqrt()) / 5.0, 1e-6);
    let p3 = (0..n).filter(|_| exact(c_0(&random_triangle(rng))) == four).count();
    s.count("p_3: c_0 = 4 on random triangles", p3, n);
    let p4 = (0..n).filter(|_| exact(c_0(&random_parallelogram(rng))) == three).count();
    s.count("p_4: c_0 = 3 on random parallelograms", p4, n);
    s.near("p_5: c_0(regular pentagon)", c_0(&pent).to_f64(), 2.0 + 4.0 * (PI / 5.0).sin() / 5.0, 1e-6);
    let tri = regular_gon(3, 1e-12, 0.0).unwrap();
    s.near("l_3: c_1(equilateral triangle)", c_1(&tri, 1e-10).map_or(f64::NAN, |v| v.to_f64()), 4.0, 1e-5);
    let sq = ConvexPolygon::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
    s.near("l_4: c_1(square)", c_1(&sq, 1e-10).map_or(f64::NAN, |v| v.to_f64()), 3.0, 1e-5);
}

fn corollaries(s: &mut Suite, opts: &OptOptions) {
    let ball = cylinder_check(&BodyN::ball(3, 1.0).unwrap(), opts);
    s.near("cylinder ratio max (ball, n=3)", ball.max_right.value, 1.5, 1e-6);
    s.near("cylinder ratio min (ball, n=3)", ball.min_over_u_of_right.value, 1.5, 1e-6);
    let e = BodyN::Ellipsoid(Ellipsoid::axis_aligned(vec![1.0, 1.0, 2.0]).unwrap());
    for (name, b) in [("cube", cube(3).unwrap()), ("simplex", regular_simplex(3, 1.0).unwrap()), ("ellipsoid 1,1,2", e)] {
        s.above(&format!("cylinder ratio max ({name})"), cylinder_check(&b, opts).max_right.value, 1.5);
    }
}

fn identities(s: &mut Suite, rng: &mut ChaCha8Rng) {
    let mut ok = 0;
    let total = 100;
    for _ in 0..total / 5 {
        let k = rng.gen_range(2..=5);
        let p = random_symmetric_polygon(rng, k);
        for _ in 0..5 {
            let x = scale_to_boundary(&p, &random_direction(rng)).unwrap();
            ok += (chord_width_raw(&p, &x).unwrap() == a_k_area(&p, &x).unwrap() * int(8)) as usize;
        }
    }
    s.count("d(x) w(x⊥) = 8 A(x) exactly", ok, total);

    let mut ok = 0;
    let total = 100;
    for _ in 0..total {
        let m = rng.gen_range(3..=8);
        let p = random_polygon_exact(rng, m);
        let v = random_direction(rng);
        let t = max_chord_param(&p, &v).unwrap();
        let q = apply_motion(&p, &Motion::Translate(v.scale(&t))).unwrap();
        ok += (hull_area_union(&p, &q) == area2(&p) + t * width_raw(&p, &v.rot90())) as usize;
    }
    s.count("area(conv(K ∪ K + d u)) = area + d w(u⊥) exactly", ok, total);

    let (mut ok_cyl, mut ok_tr) = (0, 0);
    let total = 20;
    for _ in 0..total {
        let b = random_polytope(rng, 3, 12).unwrap();
        let BodyN::Polytope(p) = &b else { unreachable!() };
        let u = random_unit_vector(rng, 3);
        let neg: Vec<f64> = u.iter().map(|x| -x).collect();
        let union = |extra: Vec<Vec<f64>>| {
            let mut pts = p.vertices().to_vec();
            pts.extend(extra);
            hull_volume(&pts).unwrap_or(f64::NAN)
        };
        let lhs = union(reflect_in_support(p.vertices(), &u)) + union(reflect_in_support(p.vertices(), &neg));
        let rhs = 2.0 * p.volume() + 2.0 * support_width_nd(&b, &u).width * brightness_nd(&b, &u);
        ok_cyl += ((lhs - rhs).abs() <= 1e-6 * rhs) as usize;
        let d = chord_nd(&b, &u).unwrap_or(f64::NAN);
        let moved = p.vertices().iter().map(|v| v.iter().zip(&u).map(|(x, y)| x + d * y).collect()).collect();
        let rhs = p.volume() + d * brightness_nd(&b, &u);
        ok_tr += ((union(moved) - rhs).abs() <= 1e-6 * rhs) as usize;
    }
    s.count("two reflected hulls = 2 vol + 2 w(u) brightness(u), n=3", ok_cyl, total);
    s.count("vol(conv(K ∪ K + d u)) = vol + d brightness(u), n=3", ok_tr, total);
}
