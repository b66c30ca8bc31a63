//! Small hand-built arrangements where σ cannot be extended.

use super::{Arrangement, SigmaPath};
use crate::geom::Polyline;
use crate::reduction::geometry::pt;
use crate::Rational;

fn ring(points: &[(i64, i64)]) -> Polyline<Rational> {
    Polyline::new(points.iter().map(|&(x, y)| pt(x, y)).collect(), true).expect("valid ring")
}

fn sigma(points: &[(i64, i64)]) -> SigmaPath {
    let pts: Vec<_> = points.iter().map(|&(x, y)| pt(x, y)).collect();
    let n = pts.len();
    SigmaPath::new(pts[0].clone(), pts[1..n - 1].to_vec(), pts[n - 1].clone()).expect("valid sigma")
}

/// Two circles, each crossed twice by σ, that cross each other on the far
/// side of `v` and so lock `v` into a pocket.
///
/// `red` is a Γ over `v`, `blue` an L under it; σ runs left to right
/// through both legs.
pub fn interlocked_pair() -> Arrangement {
    let red = ring(&[(2, -1), (4, -1), (4, 3), (14, 3), (14, -1), (16, -1), (16, 5), (2, 5)]);
    let blue = ring(&[(6, 1), (8, 1), (8, -3), (13, -3), (13, 0), (17, 0), (17, -5), (6, -5)]);
    Arrangement::new(
        vec![("red".into(), red), ("blue".into(), blue)],
        sigma(&[(0, 0), (10, 0)]),
    )
    .expect("valid arrangement")
}

/// One circle crossed once by σ (`blue`, around `v`) and two circles
/// crossed twice (`red_d`, `red_e`).
///
/// The red disks and σ cut the inside of `blue` into a part holding `v` and
/// a part touching `u`'s pocket, and cut the outside into that pocket and
/// the rest. Every route from `v` to `u` then crosses `blue` three times.
/// The obstruction only shows up once the region is grown along `blue`.
pub fn single_crossing_trap() -> Arrangement {
    let blue = ring(&[(0, 0), (40, 0), (40, 40), (0, 40)]);
    let red_d = ring(&[(-15, 5), (5, 5), (5, 10), (-15, 10)]);
    let red_e = ring(&[(15, -5), (25, -5), (25, 25), (15, 25)]);
    Arrangement::new(
        vec![("blue".into(), blue), ("red_d".into(), red_d), ("red_e".into(), red_e)],
        sigma(&[(-5, 15), (-5, 7), (-10, 7), (-10, 20), (30, 20)]),
    )
    .expect("valid arrangement")
}
