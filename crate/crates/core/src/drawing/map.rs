use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub type VertexId = usize;
pub type HalfEdgeId = usize;
pub type EdgeId = usize;
pub type ColorId = usize;
pub type FaceId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    /// Endpoint of an open curve, or an isolated vertex.
    Original,
    /// A proper crossing of two curves.
    Crossing,
    /// Degree-2 point anchoring a closed curve that crosses nothing.
    Anchor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub kind: VertexKind,
    pub name: String,
}

/// One direction of a planarization edge.
///
/// `next_at_vertex` is the counterclockwise successor among the half-edges
/// leaving the same vertex as this one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HalfEdge {
    pub twin: HalfEdgeId,
    pub next_at_vertex: HalfEdgeId,
    pub head: VertexId,
    pub color: ColorId,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorKind {
    Open(VertexId, VertexId),
    Closed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Color {
    pub name: String,
    pub kind: ColorKind,
}

/// A face of the planarization.
///
/// A face is bounded by one or more half-edge cycles (holes come from nested
/// components) and may contain isolated vertices. Each half-edge borders the
/// face on its right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    /// Smallest half-edge of each boundary cycle, ascending.
    pub cycles: Vec<HalfEdgeId>,
    /// All half-edges on the boundary, ascending.
    pub half_edges: Vec<HalfEdgeId>,
    /// Isolated vertices lying in the face.
    pub isolated: Vec<VertexId>,
    pub outer: bool,
}

/// Float copies of the coordinates, kept for rendering.
#[derive(Clone, Debug, PartialEq)]
pub struct Geometry {
    pub vertices: Vec<[f64; 2]>,
    /// Polyline of each edge, from the tail of its smaller half-edge.
    pub edges: Vec<Vec<[f64; 2]>>,
}

/// Half-edge map of a drawing whose crossings were turned into vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct Planarization {
    vertices: Vec<Vertex>,
    half_edges: Vec<HalfEdge>,
    colors: Vec<Color>,
    faces: Vec<Face>,
    face_of: Vec<FaceId>,
    isolated_face: Vec<Option<FaceId>>,
    outer_face: FaceId,
    out_edge: Vec<Option<HalfEdgeId>>,
    edge_of: Vec<EdgeId>,
    edge_half: Vec<HalfEdgeId>,
    geometry: Option<Geometry>,
}

/// Face assignment used while assembling a map: an arbitrary key per
/// half-edge and per isolated vertex. Keys sharing a value form one face.
#[derive(Clone, Debug)]
pub struct FaceKeys {
    pub half_edge: Vec<usize>,
    pub isolated: Vec<Option<usize>>,
    pub outer: usize,
}

impl Planarization {
    /// Assembles a map from raw parts, numbering faces by their smallest
    /// half-edge (faces without half-edges come last).
    ///
    /// The caller guarantees the twin and rotation laws; use
    /// [`crate::drawing::check_structure`] on untrusted input.
    pub fn assemble(
        vertices: Vec<Vertex>,
        half_edges: Vec<HalfEdge>,
        colors: Vec<Color>,
        keys: FaceKeys,
        geometry: Option<Geometry>,
    ) -> Planarization {
        let nh = half_edges.len();
        let nv = vertices.len();
        let mut out_edge = vec![None; nv];
        for (h, he) in half_edges.iter().enumerate() {
            let t = half_edges[he.twin].head;
            if out_edge[t].is_none() {
                out_edge[t] = Some(h);
            }
        }
        let mut edge_of = vec![usize::MAX; nh];
        let mut edge_half = Vec::new();
        for h in 0..nh {
            if edge_of[h] == usize::MAX {
                let e = edge_half.len();
                edge_half.push(h);
                edge_of[h] = e;
                edge_of[half_edges[h].twin] = e;
            }
        }

        // Order face keys by their smallest half-edge.
        let mut first: BTreeMap<usize, usize> = BTreeMap::new();
        for (h, &k) in keys.half_edge.iter().enumerate() {
            first.entry(k).or_insert(h);
        }
        let mut order: Vec<(usize, usize)> = first.iter().map(|(&k, &h)| (h, k)).collect();
        order.sort();
        let mut key_to_face: BTreeMap<usize, FaceId> = BTreeMap::new();
        for (i, &(_, k)) in order.iter().enumerate() {
            key_to_face.insert(k, i);
        }
        let mut extra: Vec<usize> = keys
            .isolated
            .iter()
            .flatten()
            .copied()
            .chain(std::iter::once(keys.outer))
            .filter(|k| !key_to_face.contains_key(k))
            .collect();
        extra.sort();
        extra.dedup();
        for k in extra {
            let id = key_to_face.len();
            key_to_face.insert(k, id);
        }
        let nf = key_to_face.len();
        let mut faces: Vec<Face> = (0..nf)
            .map(|id| Face {
                id,
                cycles: Vec::new(),
                half_edges: Vec::new(),
                isolated: Vec::new(),
                outer: false,
            })
            .collect();
        let face_of: Vec<FaceId> = keys.half_edge.iter().map(|k| key_to_face[k]).collect();
        for (h, &f) in face_of.iter().enumerate() {
            faces[f].half_edges.push(h);
        }
        let mut seen = vec![false; nh];
        for h in 0..nh {
            if seen[h] {
                continue;
            }
            let mut g = h;
            while !seen[g] {
                seen[g] = true;
                g = half_edges[half_edges[g].twin].next_at_vertex;
            }
            faces[face_of[h]].cycles.push(h);
        }
        let isolated_face: Vec<Option<FaceId>> = keys
            .isolated
            .iter()
            .map(|k| k.map(|k| key_to_face[&k]))
            .collect();
        for (v, f) in isolated_face.iter().enumerate() {
            if let Some(f) = f {
                faces[*f].isolated.push(v);
            }
        }
        let outer_face = key_to_face[&keys.outer];
        faces[outer_face].outer = true;
        Planarization {
            vertices,
            half_edges,
            colors,
            faces,
            face_of,
            isolated_face,
            outer_face,
            out_edge,
            edge_of,
            edge_half,
            geometry,
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn half_edges(&self) -> &[HalfEdge] {
        &self.half_edges
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn outer_face(&self) -> FaceId {
        self.outer_face
    }

    pub fn geometry(&self) -> Option<&Geometry> {
        self.geometry.as_ref()
    }

    pub fn num_edges(&self) -> usize {
        self.edge_half.len()
    }

    /// The smaller half-edge of edge `e`.
    pub fn edge_half_edge(&self, e: EdgeId) -> HalfEdgeId {
        self.edge_half[e]
    }

    pub fn edge_of(&self, h: HalfEdgeId) -> EdgeId {
        self.edge_of[h]
    }

    pub fn edge_color(&self, e: EdgeId) -> ColorId {
        self.half_edges[self.edge_half[e]].color
    }

    pub fn tail(&self, h: HalfEdgeId) -> VertexId {
        self.half_edges[self.half_edges[h].twin].head
    }

    /// Next half-edge along the boundary of the face on the right of `h`.
    pub fn face_next(&self, h: HalfEdgeId) -> HalfEdgeId {
        self.half_edges[self.half_edges[h].twin].next_at_vertex
    }

    /// Face on the right of `h`.
    pub fn face_of(&self, h: HalfEdgeId) -> FaceId {
        self.face_of[h]
    }

    /// Faces on the two sides of edge `e` (right of its smaller half-edge first).
    pub fn edge_faces(&self, e: EdgeId) -> (FaceId, FaceId) {
        let h = self.edge_half[e];
        (self.face_of[h], self.face_of[self.half_edges[h].twin])
    }

    /// Half-edges leaving `v`, in counterclockwise order.
    pub fn outgoing(&self, v: VertexId) -> Vec<HalfEdgeId> {
        let mut res = Vec::new();
        if let Some(s) = self.out_edge[v] {
            let mut h = s;
            loop {
                res.push(h);
                h = self.half_edges[h].next_at_vertex;
                if h == s {
                    break;
                }
            }
        }
        res
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.outgoing(v).len()
    }

    /// Faces touching `v`, ascending.
    pub fn incident_faces(&self, v: VertexId) -> Vec<FaceId> {
        let mut fs: Vec<FaceId> = match self.out_edge[v] {
            None => self.isolated_face[v].into_iter().collect(),
            Some(_) => self.outgoing(v).iter().map(|&h| self.face_of[h]).collect(),
        };
        fs.sort();
        fs.dedup();
        fs
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v.name == name)
    }

    pub fn color_by_name(&self, name: &str) -> Option<ColorId> {
        self.colors.iter().position(|c| c.name == name)
    }

    /// Half-edges of color `c` oriented along the curve, in curve order.
    ///
    /// Open colors run from their first endpoint; closed colors start at
    /// their smallest half-edge.
    pub fn color_walk(&self, c: ColorId) -> Vec<HalfEdgeId> {
        let mine: Vec<HalfEdgeId> = (0..self.half_edges.len())
            .filter(|&h| self.half_edges[h].color == c)
            .collect();
        if mine.is_empty() {
            return mine;
        }
        let start = match self.colors[c].kind {
            ColorKind::Open(a, _) => match mine.iter().find(|&&h| self.tail(h) == a) {
                Some(&h) => h,
                None => return Vec::new(),
            },
            ColorKind::Closed => mine[0],
        };
        let mut walk = vec![start];
        let mut h = start;
        while walk.len() < mine.len() / 2 {
            match self.continue_straight(h) {
                Some(g) if g != start => {
                    walk.push(g);
                    h = g;
                }
                _ => break,
            }
        }
        walk
    }

    /// The half-edge continuing `h` straight through its head: the opposite
    /// half-edge at a degree-4 or degree-2 vertex of the same color.
    pub fn continue_straight(&self, h: HalfEdgeId) -> Option<HalfEdgeId> {
        let v = self.half_edges[h].head;
        let kind = self.vertices[v].kind;
        if kind == VertexKind::Original {
            return None;
        }
        let out = self.outgoing(v);
        let back = self.half_edges[h].twin;
        let i = out.iter().position(|&g| g == back)?;
        let g = out[(i + out.len() / 2) % out.len()];
        (self.half_edges[g].color == self.half_edges[h].color).then_some(g)
    }

    /// Number of crossing vertices.
    pub fn crossing_count(&self) -> usize {
        self.vertices
            .iter()
            .filter(|v| v.kind == VertexKind::Crossing)
            .count()
    }

    /// Colors of the abstract edges incident to `v` (open colors ending at `v`).
    pub fn colors_at(&self, v: VertexId) -> Vec<ColorId> {
        (0..self.colors.len())
            .filter(|&c| matches!(self.colors[c].kind, ColorKind::Open(a, b) if a == v || b == v))
            .collect()
    }

    /// Polyline of half-edge `h` from its tail to its head, if geometry is
    /// present.
    pub fn half_edge_polyline(&self, h: HalfEdgeId) -> Option<Vec<[f64; 2]>> {
        let g = self.geometry.as_ref()?;
        let mut pts = g.edges[self.edge_of[h]].clone();
        if h != self.edge_half[self.edge_of[h]] {
            pts.reverse();
        }
        Some(pts)
    }

    /// Face containing point `q`, using the stored float geometry.
    ///
    /// `q` must keep a clear distance from the drawing; points on an edge
    /// give an arbitrary incident face.
    pub fn locate(&self, q: [f64; 2]) -> Option<FaceId> {
        use crate::geom::{winding, Point};
        let qp = Point::new(q[0], q[1]);
        let cycle_poly = |start: HalfEdgeId| -> Option<Vec<Point<f64>>> {
            let mut poly = Vec::new();
            let mut h = start;
            loop {
                let pts = self.half_edge_polyline(h)?;
                poly.extend(pts[..pts.len() - 1].iter().map(|p| Point::new(p[0], p[1])));
                h = self.face_next(h);
                if h == start {
                    return Some(poly);
                }
            }
        };
        let mut candidates = Vec::new();
        for f in &self.faces {
            let mut inside = true;
            for &c in &f.cycles {
                let poly = cycle_poly(c)?;
                let n = poly.len();
                let area: f64 = (0..n)
                    .map(|i| poly[i].x * poly[(i + 1) % n].y - poly[(i + 1) % n].x * poly[i].y)
                    .sum();
                let wn = winding(&qp, &poly);
                if (area < 0.0 && wn == 0) || (area >= 0.0 && wn != 0) {
                    inside = false;
                    break;
                }
            }
            if inside && !f.cycles.is_empty() {
                candidates.push(f.id);
            }
        }
        match candidates.len() {
            0 => self.faces.iter().find(|f| f.cycles.is_empty()).map(|f| f.id),
            _ => candidates.first().copied(),
        }
    }

    /// Distinct colors of the half-edges leaving `v`, ascending.
    pub fn colors_through(&self, v: VertexId) -> Vec<ColorId> {
        let mut cs: Vec<ColorId> = self
            .outgoing(v)
            .into_iter()
            .map(|h| self.half_edges[h].color)
            .collect();
        cs.sort();
        cs.dedup();
        cs
    }

    /// Face cycles as lists of half-edges, each starting at its smallest member.
    pub fn face_cycles(&self) -> Vec<Vec<HalfEdgeId>> {
        let mut seen = vec![false; self.half_edges.len()];
        let mut res = Vec::new();
        for h in 0..self.half_edges.len() {
            if seen[h] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut g = h;
            while !seen[g] {
                seen[g] = true;
                cyc.push(g);
                g = self.face_next(g);
            }
            res.push(cyc);
        }
        res
    }

    /// Connected components over vertices (isolated vertices are singletons).
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertices.len();
        let mut comp = vec![usize::MAX; n];
        let mut res = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = res.len();
            let mut stack = vec![s];
            comp[s] = id;
            let mut members = Vec::new();
            while let Some(v) = stack.pop() {
                members.push(v);
                for h in self.outgoing(v) {
                    let w = self.half_edges[h].head;
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort();
            res.push(members);
        }
        res
    }
}
