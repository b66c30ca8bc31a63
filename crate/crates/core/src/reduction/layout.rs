//! Grid layout of the reduction drawing.
//!
//! Coordinates (y grows upward, b2 lies on `y = 0`, B2 is below it):
//!
//! * Four frame arcs hang from b2 into B2 as two "teeth": r2 and r1 cross
//!   at the bottom of the tooth R_r, and ℓ1 and ℓ2 at the bottom of R_ℓ.
//!   The gap between r1 and ℓ1 holds `v` at its top and the variable
//!   gadgets stacked below it.
//! * Clause gadgets are nested U-shaped bands around both teeth, three
//!   lanes each. A lane ending on ℓ2 carries a positive literal and one
//!   ending on r2 a negative literal; it continues through the tooth as a
//!   straight connector and becomes an arc of the variable gadget.
//! * The remaining frame arcs are the FALSE lanes of Type I (left of the
//!   teeth) and Type IV (right of the teeth) clauses.

use super::cnf::{ClauseType, Literal, Slot, TransformedFormula};
use super::geometry::{curve, curve_r, r};
use super::snail::SnailFrame;
use super::ReductionError;
use crate::geom::{segment_intersection, Curve, CurveSet, Intersection, Point, Segment};
use crate::{Rational, RationalPoint};
use serde::Serialize;

/// Largest coordinate magnitude the layout may produce.
pub const MAX_COORDINATE: i64 = 1 << 40;

/// x-coordinate of the points on κ_F where the frame arcs start.
pub const KAPPA_F_X: i64 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    A,
    B,
    C,
}

/// Slot → role (γa, γb, γc) for each clause type.
pub fn roles(kind: ClauseType) -> [Role; 3] {
    match kind {
        ClauseType::I | ClauseType::IV => [Role::A, Role::B, Role::C],
        ClauseType::II | ClauseType::III => [Role::C, Role::A, Role::B],
    }
}

fn lane_offset(band: usize, bands: usize, role: Role) -> i64 {
    let base = 4 * (bands - 1 - band) as i64;
    base + match role {
        Role::A => 3,
        Role::C => 2,
        Role::B => 1,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiteralEdge {
    /// 1-based index into the transformed clause list.
    pub clause: usize,
    /// 1-based slot.
    pub slot: usize,
    pub literal: Literal,
    pub color: String,
}

/// A vertical segment `x = x, y ∈ [y_min, y_max]` or horizontal one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LineAnchor {
    pub from: [i64; 2],
    pub to: [i64; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VariableGadget {
    pub var: usize,
    /// Arcs ending on r1, one per negative occurrence.
    pub p: Vec<String>,
    /// Arcs ending on ℓ1, one per positive occurrence.
    pub n: Vec<String>,
    pub kappa: LineAnchor,
    pub lambda: LineAnchor,
    pub mu: LineAnchor,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseGadget {
    pub clause: usize,
    pub kind: ClauseType,
    pub gamma_a: String,
    pub gamma_b: String,
    pub gamma_c: String,
    pub dg: String,
    pub a: [i64; 2],
    pub b: [i64; 2],
    pub c: [i64; 2],
    pub d: [i64; 2],
    pub g: [i64; 2],
    /// Frame arc holding the γa and γb lanes.
    pub lambda: String,
    /// Frame arc holding (or being) the γc lane.
    pub mu: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrameInfo {
    /// f_1, ..., f_|F| in order along b2.
    pub f: Vec<String>,
    pub r1: String,
    pub r2: String,
    pub l1: String,
    pub l2: String,
    pub kappa_f: LineAnchor,
}

/// Axis-parallel box `[min, max]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoxRegion {
    pub min: [i64; 2],
    pub max: [i64; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Regions {
    /// A point of R (the location of `v`).
    pub r: [i64; 2],
    pub r_l: BoxRegion,
    pub r_r: BoxRegion,
}

/// Everything the layout produces.
#[derive(Clone, Debug)]
pub struct Layout {
    pub snail: SnailFrame,
    pub curves: Vec<Curve<Rational>>,
    pub u_point: RationalPoint,
    pub v_point: RationalPoint,
    pub literal_map: Vec<LiteralEdge>,
    pub frame: FrameInfo,
    pub variables: Vec<VariableGadget>,
    pub clauses: Vec<ClauseGadget>,
    pub regions: Regions,
}

struct Lane {
    clause: usize,
    slot: usize,
    lit: Literal,
    kind: ClauseType,
    offset: i64,
    /// Attachment height on r2 (negative literal) or ℓ2 (positive).
    y_att: i64,
}

/// x-positions of the four tooth walls.
struct Columns {
    xr2: i64,
    xr1: i64,
    xl1: i64,
    xl2: i64,
}

/// Heights of the frame arcs on κ_F, all in `(0, 39]`.
fn f_heights(nf: usize) -> Vec<Rational> {
    (1..=nf)
        .map(|j| {
            if nf <= 38 {
                r(j as i64)
            } else {
                Rational::new((38 * j as i64).into(), (nf as i64).into())
            }
        })
        .collect()
}

fn p(x: i64, y: i64) -> RationalPoint {
    Point::new(r(x), r(y))
}

fn f_arc(name: &str, h: &Rational, rest: &[(i64, i64)]) -> Curve<Rational> {
    let mut pts = vec![Point::new(r(KAPPA_F_X), h.clone()), Point::new(r(rest[0].0), h.clone())];
    pts.extend(rest.iter().map(|&(x, y)| p(x, y)));
    curve_r(name, pts)
}

/// Frame arcs r2, r1, ℓ1, ℓ2 forming the two teeth of depth `t`.
fn teeth(names: [&str; 4], hs: [&Rational; 4], cols: &Columns, t: i64) -> Vec<Curve<Rational>> {
    vec![
        f_arc(names[0], hs[0], &[(cols.xr2, 0), (cols.xr2, -t - 1)]),
        f_arc(names[1], hs[1], &[(cols.xr1, 0), (cols.xr1, -t), (cols.xr2 - 1, -t)]),
        f_arc(names[2], hs[2], &[(cols.xl1, 0), (cols.xl1, -t), (cols.xl2 + 1, -t)]),
        f_arc(names[3], hs[3], &[(cols.xl2, 0), (cols.xl2, -t - 1)]),
    ]
}

/// Whether three of the segments pass through one point.
fn has_triple_point(segs: &[Segment<Rational>]) -> bool {
    let mut pts: Vec<RationalPoint> = Vec::new();
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            if let Intersection::ProperCrossing(q) = segment_intersection(&segs[i], &segs[j]) {
                pts.push(q);
            }
        }
    }
    pts.sort();
    pts.windows(2).any(|w| w[0] == w[1])
}

/// Vertical offsets for the tooth-side ends of straight connectors, so that
/// no three connectors are concurrent. Returns one offset per connector,
/// each below 1/2 in absolute value.
///
/// The offsets are `t * k^e` for connector `k`. For a fixed triple the
/// concurrency condition is affine in `t`, and with a nonlinear `k^e` it is
/// not identically zero unless the wall heights conspire, so a few values
/// of `t` and `e` suffice.
fn connector_offsets(ends: &[(RationalPoint, RationalPoint)]) -> Vec<Rational> {
    let n = ends.len() as i64;
    let candidates = std::iter::once((0, 0)).chain((2..=4).flat_map(|e| (1..=64).map(move |q| (e, q))));
    for (e, q) in candidates {
        let offs: Vec<Rational> = (0..n)
            .map(|k| {
                if q == 0 {
                    r(0)
                } else {
                    let scale = 2 * (n + 1).pow(e) * q + 1;
                    Rational::new(k.pow(e).into(), scale.into())
                }
            })
            .collect();
        let segs: Vec<Segment<Rational>> = ends
            .iter()
            .zip(&offs)
            .map(|((a, b), e)| Segment::new(a.clone(), Point::new(b.x.clone(), b.y.clone() + e.clone())))
            .collect();
        if !has_triple_point(&segs) {
            return offs;
        }
    }
    panic!("no generic connector offsets found")
}

pub(crate) fn layout(tf: &TransformedFormula) -> Result<Layout, ReductionError> {
    let cl = &tf.clauses;
    let k_bands = cl.len();
    let count = |t: ClauseType| cl.iter().filter(|c| c.kind == t).count();
    let (n_i, n_iv) = (count(ClauseType::I), count(ClauseType::IV));
    let nf = n_i + n_iv + 4;

    // Index of each clause among those of its type (1-based).
    let mut type_index = vec![0usize; cl.len()];
    {
        let mut seen = [0usize; 4];
        for (j, c) in cl.iter().enumerate() {
            let t = c.kind as usize;
            seen[t] += 1;
            type_index[j] = seen[t];
        }
    }

    // Bands from the outside in: IV, III, II (each by decreasing index), then
    // I by increasing index, so that the Type I FALSE lanes come down from
    // b2 in the order f_1, f_2, ... without crossing each other.
    let mut order: Vec<usize> = Vec::new();
    for t in [ClauseType::IV, ClauseType::III, ClauseType::II] {
        let mut js: Vec<usize> = (0..cl.len()).filter(|&j| cl[j].kind == t).collect();
        js.reverse();
        order.extend(js);
    }
    order.extend((0..cl.len()).filter(|&j| cl[j].kind == ClauseType::I));
    let mut band = vec![0usize; cl.len()];
    for (k, &j) in order.iter().enumerate() {
        band[j] = k;
    }
    let offset = |j: usize, role: Role| lane_offset(band[j], k_bands, role);

    // Literal lanes with their attachment heights, higher for outer lanes.
    let mut lanes: Vec<Lane> = Vec::new();
    for (j, c) in cl.iter().enumerate() {
        let rl = roles(c.kind);
        for s in 0..3 {
            if let Slot::Lit(lit) = c.slots[s] {
                lanes.push(Lane {
                    clause: j,
                    slot: s,
                    lit,
                    kind: c.kind,
                    offset: offset(j, rl[s]),
                    y_att: 0,
                });
            }
        }
    }
    for positive in [true, false] {
        let mut idx: Vec<usize> = (0..lanes.len()).filter(|&i| lanes[i].lit.positive == positive).collect();
        idx.sort_by_key(|&i| std::cmp::Reverse(lanes[i].offset));
        for (rank, i) in idx.into_iter().enumerate() {
            lanes[i].y_att = -2 * (rank as i64 + 1);
        }
    }
    let count_r = lanes.iter().filter(|l| !l.lit.positive).count() as i64;
    let count_l = lanes.iter().filter(|l| l.lit.positive).count() as i64;

    // Variable gadgets: N from positive lanes, P from negative lanes.
    let nvars = tf.num_vars;
    let mut occ_p: Vec<Vec<usize>> = vec![vec![]; nvars + 1];
    let mut occ_n: Vec<Vec<usize>> = vec![vec![]; nvars + 1];
    for (i, l) in lanes.iter().enumerate() {
        if l.lit.positive {
            occ_n[l.lit.var].push(i);
        } else {
            occ_p[l.lit.var].push(i);
        }
    }
    let max_n = occ_n.iter().map(Vec::len).max().unwrap_or(0) as i64;
    let max_p = occ_p.iter().map(Vec::len).max().unwrap_or(0) as i64;
    let mut kappa_y = vec![0i64; nvars + 1];
    let mut y_cursor = -4;
    for var in 1..=nvars {
        let m = occ_p[var].len().max(occ_n[var].len()) as i64;
        if m == 0 {
            continue;
        }
        let y0 = y_cursor - 1 - 2 * m;
        kappa_y[var] = y0;
        y_cursor = y0 - 3;
    }
    let t = (2 - y_cursor).max(2 * count_r + 10).max(2 * count_l + 4).max(10);
    let yb = -t - 3;

    let kb = k_bands as i64;
    let xl = 70 + 8 * kb;
    let xr2 = xl + 3;
    let xr1 = xr2 + 8;
    let c = xr1 + 4 + max_n;
    let xl1 = c + max_p + 4;
    let xl2 = xl1 + 8;
    let xr = xl2 + 3;
    let width = xr + 8 * kb + 8;
    let depth = t + 3 + 8 * kb + 8;
    if width > MAX_COORDINATE || depth > MAX_COORDINATE {
        return Err(ReductionError::LayoutOverflow(width.max(depth)));
    }
    let cols = Columns { xr2, xr1, xl1, xl2 };
    let x_dg = (xr1 + xl1) / 2;
    let y_end_i = -2 * count_r - 3;
    let snail = SnailFrame {
        width,
        depth,
    };

    // Frame arcs.
    let f_names: Vec<String> = (1..=nf).map(|j| format!("f{j}")).collect();
    let hs = f_heights(nf);
    let mut frame_curves: Vec<Curve<Rational>> = Vec::new();
    let mut gamma_c_false: Vec<Option<String>> = vec![None; cl.len()];
    for (j, c) in cl.iter().enumerate() {
        if c.kind == ClauseType::I {
            let fi = type_index[j] - 1;
            let x = xl - 2 * offset(j, Role::C);
            frame_curves.push(f_arc(&f_names[fi], &hs[fi], &[(x, 0), (x, y_end_i - 2)]));
            gamma_c_false[j] = Some(f_names[fi].clone());
        }
    }
    let fr = n_i;
    frame_curves.extend(teeth(
        [&f_names[fr], &f_names[fr + 1], &f_names[fr + 2], &f_names[fr + 3]],
        [&hs[fr], &hs[fr + 1], &hs[fr + 2], &hs[fr + 3]],
        &cols,
        t,
    ));
    let mut iv_curves = Vec::new();
    for (j, c) in cl.iter().enumerate() {
        if c.kind == ClauseType::IV {
            let fi = n_i + 4 + type_index[j] - 1;
            let x = xr + 2 * offset(j, Role::C);
            iv_curves.push((fi, f_arc(&f_names[fi], &hs[fi], &[(x, 0), (x, -5)])));
            gamma_c_false[j] = Some(f_names[fi].clone());
        }
    }
    iv_curves.sort_by_key(|x| x.0);
    frame_curves.extend(iv_curves.into_iter().map(|x| x.1));
    let frame = FrameInfo {
        f: f_names.clone(),
        r2: f_names[fr].clone(),
        r1: f_names[fr + 1].clone(),
        l1: f_names[fr + 2].clone(),
        l2: f_names[fr + 3].clone(),
        kappa_f: LineAnchor {
            from: [KAPPA_F_X, 0],
            to: [KAPPA_F_X, 40],
        },
    };

    // Variable arc geometry: for each lane, the points from the inner wall
    // of its tooth down to its endpoint on κ.
    let mut var_part: Vec<Vec<RationalPoint>> = vec![vec![]; lanes.len()];
    let mut variables = Vec::new();
    let lane_name = |l: &Lane| format!("c{}.{}", l.clause + 1, l.slot + 1);
    for var in 1..=nvars {
        if occ_p[var].is_empty() && occ_n[var].is_empty() {
            continue;
        }
        let y0 = kappa_y[var];
        for (i, &li) in occ_n[var].iter().enumerate() {
            let (x, y) = (c - 1 - i as i64, y0 + 2 * i as i64 + 2);
            var_part[li] = vec![p(xl1 + 1, y), p(x, y), p(x, y0)];
        }
        for (jj, &li) in occ_p[var].iter().enumerate() {
            let (x, y) = (c + jj as i64, y0 + 2 * jj as i64 + 1);
            var_part[li] = vec![p(xr1 - 1, y), p(x, y), p(x, y0)];
        }
        let m = occ_p[var].len().max(occ_n[var].len()) as i64;
        variables.push(VariableGadget {
            var,
            p: occ_p[var].iter().map(|&i| lane_name(&lanes[i])).collect(),
            n: occ_n[var].iter().map(|&i| lane_name(&lanes[i])).collect(),
            kappa: LineAnchor {
                from: [c - max_n - 1, y0],
                to: [c + max_p, y0],
            },
            lambda: LineAnchor {
                from: [xl1, y0],
                to: [xl1, y0 + 2 * m],
            },
            mu: LineAnchor {
                from: [xr1, y0],
                to: [xr1, y0 + 2 * m],
            },
        });
    }

    // Lane geometry from the free end to the outer wall of its tooth.
    let mut lane_part: Vec<Vec<RationalPoint>> = Vec::with_capacity(lanes.len());
    let mut free_end: Vec<[i64; 2]> = Vec::with_capacity(lanes.len());
    for l in &lanes {
        let o = l.offset;
        let (lx, rx, by) = (xl - 2 * o, xr + 2 * o, yb - 2 * o);
        let pts: Vec<(i64, i64)> = if l.lit.positive {
            let tail = vec![(rx, by), (rx, l.y_att)];
            let mut head = match l.kind {
                ClauseType::I => vec![(lx, y_end_i), (lx, by)],
                _ => vec![(x_dg - 2, by)],
            };
            head.extend(tail);
            head
        } else {
            let tail = vec![(lx, by), (lx, l.y_att)];
            let mut head = match l.kind {
                ClauseType::IV => vec![(rx, -3), (rx, by)],
                _ => vec![(x_dg + 2, by)],
            };
            head.extend(tail);
            head
        };
        free_end.push([pts[0].0, pts[0].1]);
        lane_part.push(pts.into_iter().map(|(x, y)| p(x, y)).collect());
    }

    // Straight connectors through the teeth.
    let mut conn_end: Vec<RationalPoint> = vec![p(0, 0); lanes.len()];
    for positive in [true, false] {
        let idx: Vec<usize> = (0..lanes.len()).filter(|&i| lanes[i].lit.positive == positive).collect();
        let wall_x = if positive { xl2 - 1 } else { xr2 + 1 };
        let ends: Vec<(RationalPoint, RationalPoint)> = idx
            .iter()
            .map(|&i| (var_part[i][0].clone(), p(wall_x, lanes[i].y_att)))
            .collect();
        let offs = connector_offsets(&ends);
        for (k, &i) in idx.iter().enumerate() {
            conn_end[i] = Point::new(r(wall_x), r(lanes[i].y_att) + offs[k].clone());
        }
    }

    let mut literal_map = Vec::new();
    let mut lit_curves = Vec::new();
    for (i, l) in lanes.iter().enumerate() {
        let name = lane_name(l);
        let mut pts = lane_part[i].clone();
        pts.push(conn_end[i].clone());
        pts.extend(var_part[i].iter().cloned());
        lit_curves.push(curve_r(&name, pts));
        literal_map.push(LiteralEdge {
            clause: l.clause + 1,
            slot: l.slot + 1,
            literal: l.lit,
            color: name,
        });
    }

    // dg arcs and clause metadata.
    let mut dg_curves = Vec::new();
    let mut clauses = Vec::new();
    for (j, c) in cl.iter().enumerate() {
        let (oa, ob) = (offset(j, Role::A), offset(j, Role::B));
        let (d, g) = match c.kind {
            ClauseType::I => {
                let y = y_end_i - 1;
                ([xl - 2 * oa - 1, y], [xl - 2 * ob + 1, y])
            }
            ClauseType::IV => ([xr + 2 * oa + 1, -4], [xr + 2 * ob - 1, -4]),
            _ => ([x_dg, yb - 2 * oa - 1], [x_dg, yb - 2 * ob + 1]),
        };
        let dg = format!("dg{}", j + 1);
        dg_curves.push(curve(&dg, &[(d[0], d[1]), (g[0], g[1])]));
        let rl = roles(c.kind);
        let mut names: [String; 3] = Default::default();
        let mut ends: [[i64; 2]; 3] = [[0, 0]; 3];
        for s in 0..3 {
            let slot_role = rl[s] as usize;
            match c.slots[s] {
                Slot::Lit(_) => {
                    let li = lanes.iter().position(|l| l.clause == j && l.slot == s).unwrap();
                    names[slot_role] = lane_name(&lanes[li]);
                    ends[slot_role] = free_end[li];
                }
                Slot::False => {
                    let fname = gamma_c_false[j].clone().unwrap();
                    let x = if c.kind == ClauseType::I {
                        [xl - 2 * offset(j, Role::C), y_end_i - 2]
                    } else {
                        [xr + 2 * offset(j, Role::C), -5]
                    };
                    names[slot_role] = fname;
                    ends[slot_role] = x;
                }
            }
        }
        let (lambda, mu) = match c.kind {
            ClauseType::I => (frame.l2.clone(), names[2].clone()),
            ClauseType::II => (frame.l2.clone(), frame.r2.clone()),
            ClauseType::III => (frame.r2.clone(), frame.l2.clone()),
            ClauseType::IV => (frame.r2.clone(), names[2].clone()),
        };
        let [ga, gb, gc] = names;
        clauses.push(ClauseGadget {
            clause: j + 1,
            kind: c.kind,
            gamma_a: ga,
            gamma_b: gb,
            gamma_c: gc,
            dg,
            a: ends[0],
            b: ends[1],
            c: ends[2],
            d,
            g,
            lambda,
            mu,
        });
    }

    let mut curves = snail.curves();
    curves.extend(frame_curves);
    curves.extend(lit_curves);
    curves.extend(dg_curves);
    let v = [xr1 + 2, -1];
    Ok(Layout {
        snail,
        curves,
        u_point: snail.label_point(super::snail::SnailCell::X),
        v_point: p(v[0], v[1]),
        literal_map,
        frame,
        variables,
        clauses,
        regions: Regions {
            r: v,
            r_l: BoxRegion {
                min: [xl1, -t],
                max: [xl2, 0],
            },
            r_r: BoxRegion {
                min: [xr2, -t],
                max: [xr1, 0],
            },
        },
    })
}

/// The snail with `extra + 4` frame arcs and no gadgets: the four tooth
/// arcs plus `extra` arcs that end in B2 left of the teeth. `u` sits in X
/// and `v` in the gap between the teeth.
pub fn f_frame(extra: usize) -> CurveSet<Rational> {
    let nf = extra + 4;
    let hs = f_heights(nf);
    let xl = 70 + 4 * extra as i64;
    let cols = Columns {
        xr2: xl + 3,
        xr1: xl + 11,
        xl1: xl + 19,
        xl2: xl + 27,
    };
    let t = 10;
    let snail = SnailFrame {
        width: xl + 40,
        depth: t + 20,
    };
    let mut curves = snail.curves();
    for k in 0..extra {
        let x = 68 + 4 * k as i64;
        curves.push(f_arc(&format!("f{}", k + 1), &hs[k], &[(x, 0), (x, -5)]));
    }
    let names: Vec<String> = (extra + 1..=extra + 4).map(|j| format!("f{j}")).collect();
    curves.extend(teeth(
        [&names[0], &names[1], &names[2], &names[3]],
        [&hs[extra], &hs[extra + 1], &hs[extra + 2], &hs[extra + 3]],
        &cols,
        t,
    ));
    CurveSet::new(
        curves,
        vec![
            ("u".into(), snail.label_point(super::snail::SnailCell::X)),
            ("v".into(), p(cols.xr1 + 2, -1)),
        ],
    )
    .expect("fixed ids")
}
