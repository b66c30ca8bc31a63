use super::curveset::CurveSet;
use super::point::{angle_cmp, cross, orient, Orientation, Point};
use super::segment::{segment_intersection, Intersection, Segment};
use super::GeomError;
use crate::drawing::{
    Color, ColorKind, FaceKeys, Geometry, HalfEdge, Planarization, Vertex, VertexKind,
};
use crate::scalar::Scalar;
use std::cmp::Ordering;

/// Which contact rules apply while planarizing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Simplicity {
    /// Two open curves share at most one point (a crossing or a common endpoint).
    Simple,
    /// Only general position is enforced; callers apply their own bounds.
    Unrestricted,
}

struct Hit<T> {
    a: (usize, usize),
    b: (usize, usize),
    p: Point<T>,
}

struct Event<T> {
    seg: usize,
    key: T,
    vertex: usize,
    p: Point<T>,
}

struct RawEdge<T> {
    tail: usize,
    head: usize,
    color: usize,
    path: Vec<Point<T>>,
}

struct Bbox<T> {
    lo: Point<T>,
    hi: Point<T>,
}

impl<T: Scalar> Bbox<T> {
    fn of(pts: &[Point<T>]) -> Self {
        let mut lo = pts[0].clone();
        let mut hi = pts[0].clone();
        for p in &pts[1..] {
            if p.x < lo.x {
                lo.x = p.x.clone();
            }
            if p.y < lo.y {
                lo.y = p.y.clone();
            }
            if p.x > hi.x {
                hi.x = p.x.clone();
            }
            if p.y > hi.y {
                hi.y = p.y.clone();
            }
        }
        Bbox { lo, hi }
    }

    fn disjoint(&self, o: &Self) -> bool {
        self.hi.x < o.lo.x || o.hi.x < self.lo.x || self.hi.y < o.lo.y || o.hi.y < self.lo.y
    }
}

fn cmp<T: PartialOrd>(a: &T, b: &T) -> Ordering {
    a.partial_cmp(b).unwrap_or(Ordering::Equal)
}

fn point_cmp<T: Scalar>(a: &Point<T>, b: &Point<T>) -> Ordering {
    cmp(&a.x, &b.x).then_with(|| cmp(&a.y, &b.y))
}

/// Overlays the curves and returns the half-edge map of the result.
///
/// Vertices are numbered: curve endpoints in curve order (shared endpoints
/// merged), isolated points, anchors of uncrossed closed curves, then
/// crossings ordered by (lower curve, higher curve, position along the
/// lower curve). Edges follow curve order; edge `e` owns half-edges `2e`
/// (along the curve) and `2e + 1`.
pub fn build_planarization<T: Scalar>(
    cs: &CurveSet<T>,
    mode: Simplicity,
) -> Result<Planarization, GeomError> {
    let curves = cs.curves();
    let nc = curves.len();
    let segs: Vec<Vec<Segment<T>>> = curves.iter().map(|c| c.polyline.segments()).collect();
    let boxes: Vec<Bbox<T>> = curves.iter().map(|c| Bbox::of(c.polyline.points())).collect();
    let is_end = |ci: usize, p: &Point<T>| {
        let pl = &curves[ci].polyline;
        let pts = pl.points();
        !pl.is_closed() && (p == &pts[0] || p == &pts[pts.len() - 1])
    };
    let contact = |i: usize, j: usize| {
        GeomError::DegenerateContact(curves[i].id.clone(), curves[j].id.clone())
    };

    let mut hits: Vec<Hit<T>> = Vec::new();
    let mut shared: Vec<(usize, usize, Point<T>)> = Vec::new();
    for i in 0..nc {
        for j in i + 1..nc {
            if boxes[i].disjoint(&boxes[j]) {
                continue;
            }
            for (si, s) in segs[i].iter().enumerate() {
                for (sj, t) in segs[j].iter().enumerate() {
                    match segment_intersection(s, t) {
                        Intersection::NoIntersection => {}
                        Intersection::ProperCrossing(p) => hits.push(Hit {
                            a: (i, si),
                            b: (j, sj),
                            p,
                        }),
                        Intersection::SharedEndpoint(p) => {
                            if !(is_end(i, &p) && is_end(j, &p)) {
                                return Err(contact(i, j));
                            }
                            if !shared.iter().any(|(a, b, q)| *a == i && *b == j && *q == p) {
                                shared.push((i, j, p));
                            }
                        }
                        Intersection::Degenerate => return Err(contact(i, j)),
                    }
                }
            }
        }
    }

    let iso = cs.isolated();
    for (k, (id, p)) in iso.iter().enumerate() {
        for (ci, ss) in segs.iter().enumerate() {
            if ss.iter().any(|s| s.contains(p)) {
                return Err(GeomError::DegenerateContact(id.clone(), curves[ci].id.clone()));
            }
        }
        if let Some((other, _)) = iso[..k].iter().find(|(_, q)| q == p) {
            return Err(GeomError::DegenerateContact(other.clone(), id.clone()));
        }
    }

    hits.sort_by(|x, y| point_cmp(&x.p, &y.p));
    for w in hits.windows(2) {
        if w[0].p == w[1].p {
            let [x, y] = w[0].p.to_f64();
            return Err(GeomError::TripleIncidence(format!("({x}, {y})")));
        }
    }

    if mode == Simplicity::Simple {
        let mut count = vec![vec![0usize; nc]; nc];
        for h in &hits {
            count[h.a.0][h.b.0] += 1;
        }
        for (i, j, _) in &shared {
            count[*i][*j] += 1;
        }
        for i in 0..nc {
            for j in i + 1..nc {
                let open = !curves[i].polyline.is_closed() && !curves[j].polyline.is_closed();
                if open && count[i][j] > 1 {
                    return Err(GeomError::PairCrossingBound(
                        curves[i].id.clone(),
                        curves[j].id.clone(),
                    ));
                }
            }
        }
    }

    // Vertices.
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut vpos: Vec<Point<T>> = Vec::new();
    let mut ends: Vec<[usize; 2]> = vec![[usize::MAX; 2]; nc];
    for (ci, c) in curves.iter().enumerate() {
        if c.polyline.is_closed() {
            continue;
        }
        let pts = c.polyline.points();
        for (k, p) in [&pts[0], &pts[pts.len() - 1]].into_iter().enumerate() {
            let found = (0..vertices.len()).find(|&v| &vpos[v] == p);
            ends[ci][k] = match found {
                Some(v) => v,
                None => {
                    vertices.push(Vertex {
                        kind: VertexKind::Original,
                        name: format!("{}.{}", c.id, if k == 0 { "s" } else { "t" }),
                    });
                    vpos.push(p.clone());
                    vertices.len() - 1
                }
            };
        }
    }
    for (id, p) in iso {
        vertices.push(Vertex {
            kind: VertexKind::Original,
            name: id.clone(),
        });
        vpos.push(p.clone());
    }
    let mut crossed = vec![false; nc];
    for h in &hits {
        crossed[h.a.0] = true;
        crossed[h.b.0] = true;
    }
    let mut anchor = vec![usize::MAX; nc];
    for (ci, c) in curves.iter().enumerate() {
        if c.polyline.is_closed() && !crossed[ci] {
            anchor[ci] = vertices.len();
            vertices.push(Vertex {
                kind: VertexKind::Anchor,
                name: format!("{}.o", c.id),
            });
            vpos.push(c.polyline.points()[0].clone());
        }
    }
    let mut events: Vec<Vec<Event<T>>> = (0..nc).map(|_| Vec::new()).collect();
    let mut order: Vec<usize> = (0..hits.len()).collect();
    order.sort_by(|&x, &y| {
        let (hx, hy) = (&hits[x], &hits[y]);
        (hx.a.0, hx.b.0, hx.a.1).cmp(&(hy.a.0, hy.b.0, hy.a.1)).then_with(|| {
            let s = &segs[hx.a.0][hx.a.1];
            cmp(&s.key(&hx.p), &s.key(&hy.p))
        })
    });
    for (n, &k) in order.iter().enumerate() {
        let h = &hits[k];
        let v = vertices.len();
        vertices.push(Vertex {
            kind: VertexKind::Crossing,
            name: format!("x{n}"),
        });
        vpos.push(h.p.clone());
        for (ci, si) in [h.a, h.b] {
            events[ci].push(Event {
                seg: si,
                key: segs[ci][si].key(&h.p),
                vertex: v,
                p: h.p.clone(),
            });
        }
    }

    // Edges along each curve.
    let mut edges: Vec<RawEdge<T>> = Vec::new();
    for (ci, c) in curves.iter().enumerate() {
        let pts = c.polyline.points();
        let n = pts.len();
        let ev = &mut events[ci];
        ev.sort_by(|x, y| x.seg.cmp(&y.seg).then_with(|| cmp(&x.key, &y.key)));
        if !c.polyline.is_closed() {
            let mut seq: Vec<(usize, usize, Point<T>)> = vec![(0, ends[ci][0], pts[0].clone())];
            seq.extend(ev.iter().map(|e| (e.seg, e.vertex, e.p.clone())));
            seq.push((n - 2, ends[ci][1], pts[n - 1].clone()));
            for w in seq.windows(2) {
                let (sa, va, pa) = &w[0];
                let (sb, vb, pb) = &w[1];
                let mut path = vec![pa.clone()];
                path.extend(pts[sa + 1..=*sb].iter().cloned());
                path.push(pb.clone());
                edges.push(RawEdge {
                    tail: *va,
                    head: *vb,
                    color: ci,
                    path,
                });
            }
        } else if ev.is_empty() {
            let mut path: Vec<Point<T>> = pts.to_vec();
            path.push(pts[0].clone());
            edges.push(RawEdge {
                tail: anchor[ci],
                head: anchor[ci],
                color: ci,
                path,
            });
        } else {
            let k = ev.len();
            for i in 0..k {
                let a = &ev[i];
                let b = &ev[(i + 1) % k];
                let mut path = vec![a.p.clone()];
                if i + 1 < k {
                    path.extend(pts[a.seg + 1..=b.seg].iter().cloned());
                } else {
                    path.extend(pts[a.seg + 1..].iter().cloned());
                    path.extend(pts[..=b.seg].iter().cloned());
                }
                path.push(b.p.clone());
                edges.push(RawEdge {
                    tail: a.vertex,
                    head: b.vertex,
                    color: ci,
                    path,
                });
            }
        }
    }

    // Rotation system.
    let nh = 2 * edges.len();
    let mut dirs: Vec<Point<T>> = Vec::with_capacity(nh);
    let mut tails = Vec::with_capacity(nh);
    let mut half_edges: Vec<HalfEdge> = Vec::with_capacity(nh);
    for (e, ed) in edges.iter().enumerate() {
        let m = ed.path.len();
        dirs.push(ed.path[1].sub(&ed.path[0]));
        dirs.push(ed.path[m - 2].sub(&ed.path[m - 1]));
        tails.push(ed.tail);
        tails.push(ed.head);
        for (h, head) in [(2 * e, ed.head), (2 * e + 1, ed.tail)] {
            half_edges.push(HalfEdge {
                twin: h ^ 1,
                next_at_vertex: h,
                head,
                color: ed.color,
            });
        }
    }
    let mut around: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
    for h in 0..nh {
        around[tails[h]].push(h);
    }
    for out in around.iter_mut() {
        out.sort_by(|&x, &y| angle_cmp(&dirs[x], &dirs[y]).then(x.cmp(&y)));
        for i in 0..out.len() {
            half_edges[out[i]].next_at_vertex = out[(i + 1) % out.len()];
        }
    }

    let keys = face_keys(&half_edges, &edges, &vpos, &around);
    let geometry = Geometry {
        vertices: vpos.iter().map(|p| p.to_f64()).collect(),
        edges: edges
            .iter()
            .map(|e| e.path.iter().map(|p| p.to_f64()).collect())
            .collect(),
    };
    let colors = curves
        .iter()
        .enumerate()
        .map(|(ci, c)| Color {
            name: c.id.clone(),
            kind: if c.polyline.is_closed() {
                ColorKind::Closed
            } else {
                ColorKind::Open(ends[ci][0], ends[ci][1])
            },
        })
        .collect();
    Ok(Planarization::assemble(
        vertices,
        half_edges,
        colors,
        keys,
        Some(geometry),
    ))
}

/// Resolves which face every cycle and isolated vertex belongs to, using
/// exact containment between components.
fn face_keys<T: Scalar>(
    half_edges: &[HalfEdge],
    edges: &[RawEdge<T>],
    vpos: &[Point<T>],
    around: &[Vec<usize>],
) -> FaceKeys {
    let nh = half_edges.len();
    let nv = vpos.len();
    // Cycles.
    let mut cycle_of = vec![usize::MAX; nh];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for h in 0..nh {
        if cycle_of[h] != usize::MAX {
            continue;
        }
        let id = cycles.len();
        let mut cyc = Vec::new();
        let mut g = h;
        while cycle_of[g] == usize::MAX {
            cycle_of[g] = id;
            cyc.push(g);
            g = half_edges[half_edges[g].twin].next_at_vertex;
        }
        cycles.push(cyc);
    }
    let polygon = |cyc: &[usize]| -> Vec<Point<T>> {
        let mut poly = Vec::new();
        for &h in cyc {
            let path = &edges[h / 2].path;
            if h % 2 == 0 {
                poly.extend(path[..path.len() - 1].iter().cloned());
            } else {
                poly.extend(path[1..].iter().rev().cloned());
            }
        }
        poly
    };
    let polys: Vec<Vec<Point<T>>> = cycles.iter().map(|c| polygon(c)).collect();
    let areas: Vec<T> = polys.iter().map(|p| twice_area(p)).collect();

    // Components.
    let mut comp = vec![usize::MAX; nv];
    let mut ncomp = 0;
    for s in 0..nv {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = ncomp;
        while let Some(v) = stack.pop() {
            for &h in &around[v] {
                let w = half_edges[h].head;
                if comp[w] == usize::MAX {
                    comp[w] = ncomp;
                    stack.push(w);
                }
            }
        }
        ncomp += 1;
    }
    let mut sample = vec![usize::MAX; ncomp];
    for v in (0..nv).rev() {
        sample[comp[v]] = v;
    }
    let cycle_comp: Vec<usize> = cycles.iter().map(|c| comp[half_edges[c[0]].head]).collect();
    // Outer cycle of each component: the one with largest signed area.
    let mut outer_cycle: Vec<Option<usize>> = vec![None; ncomp];
    for (ci, &k) in cycle_comp.iter().enumerate() {
        let better = match outer_cycle[k] {
            None => true,
            Some(o) => areas[ci] > areas[o],
        };
        if better {
            outer_cycle[k] = Some(ci);
        }
    }
    let unbounded = cycles.len();
    let zero = T::zero();
    let mut container = vec![unbounded; ncomp];
    for k in 0..ncomp {
        let p = &vpos[sample[k]];
        let mut best: Option<usize> = None;
        for (ci, poly) in polys.iter().enumerate() {
            if cycle_comp[ci] == k || outer_cycle[cycle_comp[ci]] == Some(ci) || areas[ci] >= zero {
                continue;
            }
            if winding(p, poly) != 0 {
                let tighter = match best {
                    None => true,
                    Some(b) => areas[ci] > areas[b],
                };
                if tighter {
                    best = Some(ci);
                }
            }
        }
        if let Some(b) = best {
            container[k] = b;
        }
    }
    let half_edge_key: Vec<usize> = (0..nh)
        .map(|h| {
            let c = cycle_of[h];
            let k = cycle_comp[c];
            if outer_cycle[k] == Some(c) {
                container[k]
            } else {
                c
            }
        })
        .collect();
    let isolated = (0..nv)
        .map(|v| around[v].is_empty().then(|| container[comp[v]]))
        .collect();
    FaceKeys {
        half_edge: half_edge_key,
        isolated,
        outer: unbounded,
    }
}

fn twice_area<T: Scalar>(poly: &[Point<T>]) -> T {
    let n = poly.len();
    let mut s = T::zero();
    for i in 0..n {
        s = s + cross(&poly[i], &poly[(i + 1) % n]);
    }
    s
}

/// Winding number of `poly` around `p` (which must not lie on it).
pub(crate) fn winding<T: Scalar>(p: &Point<T>, poly: &[Point<T>]) -> i32 {
    let n = poly.len();
    let mut wn = 0;
    for i in 0..n {
        let a = &poly[i];
        let b = &poly[(i + 1) % n];
        if a.y <= p.y {
            if b.y > p.y && orient(a, b, p) == Orientation::CounterClockwise {
                wn += 1;
            }
        } else if b.y <= p.y && orient(a, b, p) == Orientation::Clockwise {
            wn -= 1;
        }
    }
    wn
}
