//! Seeded random instances for fuzzing and property tests.
//!
//! The drawing and arrangement generators rejection-sample: they draw integer-grid curves until the
//! result is valid and small enough, so a seed always yields the same
//! instance.

use crate::drawing::validate_simple;
use crate::geom::{build_planarization, Curve, CurveSet, Polyline, Simplicity};
use crate::pseudocircles::{classify, Arrangement, SigmaPath};
use crate::reduction::geometry::pt;
use crate::reduction::{CnfFormula, Literal};
use crate::{Rational, RationalCurveSet, RationalPoint};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5EED;

/// Deterministic generator for a seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Copy, Debug)]
pub struct DrawingParams {
    pub max_edges: usize,
    pub max_crossings: usize,
    /// Coordinates are drawn from `0..=grid`.
    pub grid: i64,
    /// Largest number of bends per edge.
    pub max_bends: usize,
}

impl Default for DrawingParams {
    fn default() -> Self {
        DrawingParams {
            max_edges: 10,
            max_crossings: 8,
            grid: 12,
            max_bends: 1,
        }
    }
}

fn grid_point(r: &mut impl Rng, g: i64) -> RationalPoint {
    pt(r.gen_range(0..=g), r.gen_range(0..=g))
}

/// A random simple drawing: edges `e0, e1, ...` plus isolated vertices `u`
/// and `v`.
pub fn random_drawing(r: &mut impl Rng, p: &DrawingParams) -> RationalCurveSet {
    loop {
        if let Some(cs) = try_drawing(r, p) {
            return cs;
        }
    }
}

fn try_drawing(r: &mut impl Rng, p: &DrawingParams) -> Option<RationalCurveSet> {
    let m = r.gen_range(1..=p.max_edges);
    let mut curves = Vec::with_capacity(m);
    for i in 0..m {
        let n = 2 + r.gen_range(0..=p.max_bends);
        let pts: Vec<RationalPoint> = (0..n).map(|_| grid_point(r, p.grid)).collect();
        curves.push(Curve {
            id: format!("e{i}"),
            polyline: Polyline::new(pts, false).ok()?,
        });
    }
    let iso = vec![
        ("u".to_string(), grid_point(r, p.grid)),
        ("v".to_string(), grid_point(r, p.grid)),
    ];
    let cs = CurveSet::new(curves, iso).ok()?;
    let map = build_planarization(&cs, Simplicity::Simple).ok()?;
    if map.crossing_count() > p.max_crossings || !validate_simple(&map).ok()?.is_ok() {
        return None;
    }
    Some(cs)
}

#[derive(Clone, Copy, Debug)]
pub struct ArrangementParams {
    pub max_circles: usize,
    pub max_faces: usize,
    /// Circle corners use even coordinates in `0..=2 * half_grid`, σ uses
    /// odd ones, which keeps σ's bends off the circles.
    pub half_grid: i64,
    pub max_sigma_bends: usize,
}

impl Default for ArrangementParams {
    fn default() -> Self {
        ArrangementParams {
            max_circles: 5,
            max_faces: 40,
            half_grid: 16,
            max_sigma_bends: 2,
        }
    }
}

/// Axis-parallel rectangle or L-shaped hexagon on the given sorted
/// coordinates.
fn orthogonal_ring(r: &mut impl Rng, x: [i64; 3], y: [i64; 3]) -> Polyline<Rational> {
    let [x1, x2, x3] = x;
    let [y1, y2, y3] = y;
    let pts: Vec<(i64, i64)> = match r.gen_range(0..6) {
        0 | 1 => vec![(x1, y1), (x3, y1), (x3, y3), (x1, y3)],
        2 => vec![(x1, y1), (x3, y1), (x3, y2), (x2, y2), (x2, y3), (x1, y3)],
        3 => vec![(x1, y1), (x3, y1), (x3, y3), (x2, y3), (x2, y2), (x1, y2)],
        4 => vec![(x1, y1), (x2, y1), (x2, y2), (x3, y2), (x3, y3), (x1, y3)],
        _ => vec![(x2, y1), (x3, y1), (x3, y3), (x1, y3), (x1, y2), (x2, y2)],
    };
    Polyline::new(pts.into_iter().map(|(a, b)| pt(a, b)).collect(), true).expect("orthogonal ring")
}

fn odd_point(r: &mut impl Rng, g: i64) -> RationalPoint {
    pt(2 * r.gen_range(0..=g + 1) - 1, 2 * r.gen_range(0..=g + 1) - 1)
}

/// A random arrangement of orthogonal pseudocircles `c0, c1, ...` with a
/// random σ crossing each at most twice.
pub fn random_arrangement(r: &mut impl Rng, p: &ArrangementParams) -> Arrangement {
    loop {
        if let Some(a) = try_arrangement(r, p) {
            return a;
        }
    }
}

fn try_arrangement(r: &mut impl Rng, p: &ArrangementParams) -> Option<Arrangement> {
    let g = p.half_grid;
    let n = r.gen_range(0..=p.max_circles).min((g as usize + 1) / 3);
    let mut xs: Vec<i64> = (0..=g).map(|k| 2 * k).collect();
    let mut ys = xs.clone();
    xs.shuffle(r);
    ys.shuffle(r);
    let mut circles = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = [xs[3 * i], xs[3 * i + 1], xs[3 * i + 2]];
        let mut y = [ys[3 * i], ys[3 * i + 1], ys[3 * i + 2]];
        x.sort_unstable();
        y.sort_unstable();
        circles.push((format!("c{i}"), orthogonal_ring(r, x, y)));
    }
    let u = odd_point(r, g);
    let nb = r.gen_range(0..=p.max_sigma_bends);
    let bends: Vec<RationalPoint> = (0..nb).map(|_| odd_point(r, g)).collect();
    let v = odd_point(r, g);
    let sigma = SigmaPath::new(u, bends, v).ok()?;
    let a = Arrangement::new(circles, sigma).ok()?;
    if a.num_faces() > p.max_faces || classify(&a).is_err() {
        return None;
    }
    Some(a)
}

#[derive(Clone, Copy, Debug)]
pub struct CnfParams {
    pub max_vars: usize,
    pub max_clauses: usize,
}

impl Default for CnfParams {
    fn default() -> Self {
        CnfParams {
            max_vars: 4,
            max_clauses: 3,
        }
    }
}

/// A random 3CNF formula with 1 to `max_vars` variables and 1 to
/// `max_clauses` clauses. Variables may repeat within a clause.
pub fn random_cnf(r: &mut impl Rng, p: &CnfParams) -> CnfFormula {
    let n = r.gen_range(1..=p.max_vars);
    let m = r.gen_range(1..=p.max_clauses);
    let clauses = (0..m)
        .map(|_| {
            [(); 3].map(|_| {
                let var = r.gen_range(1..=n);
                if r.gen_bool(0.5) {
                    Literal::pos(var)
                } else {
                    Literal::neg(var)
                }
            })
        })
        .collect();
    CnfFormula::new(n, clauses).expect("literals in range")
}
